//! Two pairs of supplementary subspaces, the commutator of their
//! projections, and the canonical split `E = F_e ⊕ F_τ ⊕ F̃`.

use crate::error::{Error, Pair, Result};
use crate::field::FieldSpec;
use crate::matrix::Matrix;
use crate::report::{expect, expect_eq, expect_matrix_eq, expect_sub, expect_zero, TheoremReport};
use crate::subspace::Subspace;

/// The quintuple `(E, V1, V2, W1, W2)` with `V1 ⊕ V2 = W1 ⊕ W2 = E`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoSumDecomposition {
    v: [Subspace; 2],
    w: [Subspace; 2],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Projector {
    P1,
    P2,
    Q1,
    Q2,
}

/// A permutation of `{1, 2}`: identity or transposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sigma {
    E,
    Tau,
}

impl Sigma {
    pub const ALL: [Sigma; 2] = [Sigma::E, Sigma::Tau];

    /// Image of a zero-based index.
    pub fn apply(self, i: usize) -> usize {
        match self {
            Sigma::E => i,
            Sigma::Tau => 1 - i,
        }
    }

    pub fn bar(self) -> Sigma {
        match self {
            Sigma::E => Sigma::Tau,
            Sigma::Tau => Sigma::E,
        }
    }

    pub fn compose(self, other: Sigma) -> Sigma {
        if self == other {
            Sigma::E
        } else {
            Sigma::Tau
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Sigma::E => "e",
            Sigma::Tau => "tau",
        }
    }
}

/// Projection onto `a` along `b`, where `a ⊕ b = E`.
pub fn projector_onto(a: &Subspace, b: &Subspace) -> Result<Matrix> {
    a.check_compatible(b)?;
    if !Subspace::is_direct_sum(&[a, b])? {
        return Err(Error::NotComplementary(Pair::Other));
    }
    let field = a.field();
    let n = a.ambient_dim();
    let basis = a.basis().vstack(b.basis()).transpose();
    let inv = basis.inverse().expect("complementary bases are invertible");
    let mut keep = Matrix::zeros(field, n, n);
    for i in 0..a.dim() {
        keep.set(i, i, field.one());
    }
    Ok(&(&basis * &keep) * &inv)
}

/// Every subspace sequence computed by [`TwoSumDecomposition::chains`]. Each
/// sequence starts at `n = 0` and ends with two equal entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    pub f: Vec<Subspace>,
    pub ftilde: Vec<Subspace>,
    pub f_e: Vec<Subspace>,
    pub f_tau: Vec<Subspace>,
    pub ftilde_e: Vec<Subspace>,
    pub ftilde_tau: Vec<Subspace>,
}

/// First index after which the chain is constant.
pub fn stabilization_index(chain: &[Subspace]) -> usize {
    chain
        .windows(2)
        .position(|w| w[0] == w[1])
        .expect("chain ends with a repeated entry")
}

/// Entry `n` of a chain, extended by its stable value.
pub fn at(chain: &[Subspace], n: usize) -> &Subspace {
    &chain[n.min(chain.len() - 1)]
}

impl ChainReport {
    pub fn f_sigma(&self, s: Sigma) -> &[Subspace] {
        match s {
            Sigma::E => &self.f_e,
            Sigma::Tau => &self.f_tau,
        }
    }

    pub fn ftilde_sigma(&self, s: Sigma) -> &[Subspace] {
        match s {
            Sigma::E => &self.ftilde_e,
            Sigma::Tau => &self.ftilde_tau,
        }
    }

    /// Largest stabilization index over all six chains.
    pub fn horizon(&self) -> usize {
        [
            &self.f,
            &self.ftilde,
            &self.f_e,
            &self.f_tau,
            &self.ftilde_e,
            &self.ftilde_tau,
        ]
        .iter()
        .map(|c| stabilization_index(c))
        .max()
        .unwrap()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalSplit {
    pub f_e: Subspace,
    pub f_tau: Subspace,
    pub ftilde: Subspace,
}

impl CanonicalSplit {
    pub fn parts(&self) -> [&Subspace; 3] {
        [&self.f_e, &self.f_tau, &self.ftilde]
    }

    /// `F = F_e ⊕ F_τ`, the nilpotent part of θ.
    pub fn f(&self) -> Subspace {
        self.f_e.sum(&self.f_tau).expect("same ambient")
    }
}

impl TwoSumDecomposition {
    pub fn new(v1: Subspace, v2: Subspace, w1: Subspace, w2: Subspace) -> Result<Self> {
        for s in [&v2, &w1, &w2] {
            v1.check_compatible(s)?;
        }
        if !Subspace::is_direct_sum(&[&v1, &v2])? {
            return Err(Error::NotComplementary(Pair::V));
        }
        if !Subspace::is_direct_sum(&[&w1, &w2])? {
            return Err(Error::NotComplementary(Pair::W));
        }
        Ok(TwoSumDecomposition {
            v: [v1, v2],
            w: [w1, w2],
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.v[0].field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.v[0].ambient_dim()
    }

    /// `V_{i+1}` for zero-based `i`.
    pub fn v(&self, i: usize) -> &Subspace {
        &self.v[i]
    }

    pub fn w(&self, i: usize) -> &Subspace {
        &self.w[i]
    }

    pub fn v1(&self) -> &Subspace {
        &self.v[0]
    }
    pub fn v2(&self) -> &Subspace {
        &self.v[1]
    }
    pub fn w1(&self) -> &Subspace {
        &self.w[0]
    }
    pub fn w2(&self) -> &Subspace {
        &self.w[1]
    }

    /// `[V1, V2, W1, W2]`.
    pub fn generators(&self) -> [Subspace; 4] {
        [
            self.v[0].clone(),
            self.v[1].clone(),
            self.w[0].clone(),
            self.w[1].clone(),
        ]
    }

    pub fn zero(&self) -> Subspace {
        Subspace::zero(self.field(), self.ambient_dim())
    }

    pub fn whole(&self) -> Subspace {
        Subspace::full(self.field(), self.ambient_dim())
    }

    pub fn projector(&self, which: Projector) -> Matrix {
        let (a, b) = match which {
            Projector::P1 => (&self.v[0], &self.v[1]),
            Projector::P2 => (&self.v[1], &self.v[0]),
            Projector::Q1 => (&self.w[0], &self.w[1]),
            Projector::Q2 => (&self.w[1], &self.w[0]),
        };
        projector_onto(a, b).expect("validated at construction")
    }

    /// `θ = q1∘p1 − p1∘q1`.
    pub fn theta(&self) -> Matrix {
        let p1 = self.projector(Projector::P1);
        let q1 = self.projector(Projector::Q1);
        p1.commutator(&q1).scale(&-self.field().one())
    }

    /// The four commutator expressions for θ, which must all agree:
    /// `[q1,p1]`, `[q2,p2]`, `[p2,q1]`, `[p1,q2]`.
    pub fn theta_expressions(&self) -> [Matrix; 4] {
        let p1 = self.projector(Projector::P1);
        let p2 = self.projector(Projector::P2);
        let q1 = self.projector(Projector::Q1);
        let q2 = self.projector(Projector::Q2);
        [
            q1.commutator(&p1),
            q2.commutator(&p2),
            p2.commutator(&q1),
            p1.commutator(&q2),
        ]
    }

    /// `(E*, W1', W2', V1', V2')` in dual-basis coordinates.
    pub fn dual(&self) -> TwoSumDecomposition {
        TwoSumDecomposition {
            v: [self.w[0].annihilator(), self.w[1].annihilator()],
            w: [self.v[0].annihilator(), self.v[1].annihilator()],
        }
    }

    /// Applies the change of basis `x ↦ m x` to all four subspaces.
    pub fn transform(&self, m: &Matrix) -> Result<TwoSumDecomposition> {
        let [v1, v2, w1, w2] = self.generators().map(|s| s.image_under(m));
        TwoSumDecomposition::new(v1, v2, w1, w2)
    }

    /// `Σ_i (X + V_i) ∩ (X + W_{σ(i)})`.
    fn f_sigma_step(&self, x: &Subspace, s: Sigma) -> Subspace {
        let terms: Vec<Subspace> = (0..2)
            .map(|i| {
                let a = x.sum(&self.v[i]).unwrap();
                let b = x.sum(&self.w[s.apply(i)]).unwrap();
                a.intersect(&b).unwrap()
            })
            .collect();
        terms[0].sum(&terms[1]).unwrap()
    }

    /// `⋂_i (X ∩ V_i) + (X ∩ W_{σ(i)})`.
    fn ftilde_sigma_step(&self, x: &Subspace, s: Sigma) -> Subspace {
        let terms: Vec<Subspace> = (0..2)
            .map(|i| {
                let a = x.intersect(&self.v[i]).unwrap();
                let b = x.intersect(&self.w[s.apply(i)]).unwrap();
                a.sum(&b).unwrap()
            })
            .collect();
        terms[0].intersect(&terms[1]).unwrap()
    }

    fn f_step(&self, x: &Subspace) -> Subspace {
        self.f_sigma_step(x, Sigma::E)
            .sum(&self.f_sigma_step(x, Sigma::Tau))
            .unwrap()
    }

    fn ftilde_step(&self, x: &Subspace) -> Subspace {
        self.ftilde_sigma_step(x, Sigma::E)
            .intersect(&self.ftilde_sigma_step(x, Sigma::Tau))
            .unwrap()
    }

    fn iterate(&self, start: Subspace, step: impl Fn(&Subspace) -> Subspace) -> Vec<Subspace> {
        let cap = self.ambient_dim() + 1;
        let mut chain = vec![start];
        loop {
            let next = step(chain.last().unwrap());
            let done = &next == chain.last().unwrap();
            chain.push(next);
            if done {
                return chain;
            }
            assert!(chain.len() <= cap + 1, "subspace chain failed to stabilize");
        }
    }

    pub fn chains(&self) -> ChainReport {
        ChainReport {
            f: self.iterate(self.zero(), |x| self.f_step(x)),
            ftilde: self.iterate(self.whole(), |x| self.ftilde_step(x)),
            f_e: self.iterate(self.zero(), |x| self.f_sigma_step(x, Sigma::E)),
            f_tau: self.iterate(self.zero(), |x| self.f_sigma_step(x, Sigma::Tau)),
            ftilde_e: self.iterate(self.whole(), |x| self.ftilde_sigma_step(x, Sigma::E)),
            ftilde_tau: self.iterate(self.whole(), |x| self.ftilde_sigma_step(x, Sigma::Tau)),
        }
    }

    pub fn canonical_split(&self) -> CanonicalSplit {
        let c = self.chains();
        split_from_chains(&c)
    }

    /// Smallest `k` with `θ^k = 0` on `F`.
    pub fn nilpotency_index(&self) -> usize {
        stabilization_index(&self.chains().f)
    }
}

pub fn split_from_chains(c: &ChainReport) -> CanonicalSplit {
    CanonicalSplit {
        f_e: c.f_e.last().unwrap().clone(),
        f_tau: c.f_tau.last().unwrap().clone(),
        ftilde: c.ftilde.last().unwrap().clone(),
    }
}

/// `(A + B0) ∩ (A0 + B) = A0 + B0 + (A ∩ B)` whenever `A0 ⊆ A`, `B0 ⊆ B`.
pub fn ab_lemma_holds(a0: &Subspace, a: &Subspace, b0: &Subspace, b: &Subspace) -> bool {
    let lhs = a.sum(b0).unwrap().intersect(&a0.sum(b).unwrap()).unwrap();
    let rhs = Subspace::sum_all(&[a0, b0, &a.intersect(b).unwrap()]).unwrap();
    lhs == rhs
}

/// Checks every identity about θ, the chains and the canonical split.
pub fn verify_two_sum_identities(dec: &TwoSumDecomposition) -> TheoremReport {
    let mut r = TheoremReport::new("two-sum decomposition identities");
    let theta = dec.theta();
    let c = dec.chains();
    let split = split_from_chains(&c);
    let dim = dec.ambient_dim();
    let top = c.horizon().max(dim);
    let whole = dec.whole();
    let v = |i: usize| dec.v(i);
    let w = |i: usize| dec.w(i);

    let exprs = dec.theta_expressions();
    r.check(
        "theta-four-expressions",
        "[q1,p1] = [q2,p2] = [p2,q1] = [p1,q2]",
        exprs
            .iter()
            .skip(1)
            .try_for_each(|m| expect_matrix_eq(None, &exprs[0], m)),
    );
    r.check(
        "theta-dual",
        "θ(V*) = θ(V)ᵀ",
        expect_matrix_eq(None, &dec.dual().theta(), &theta.transpose()),
    );
    r.check(
        "theta-swaps",
        "θ(V_i) ⊆ V_τ(i), θ(W_i) ⊆ W_τ(i)",
        (0..2).try_for_each(|i| {
            expect_sub(None, &v(i).image_under(&theta), v(1 - i))?;
            expect_sub(None, &w(i).image_under(&theta), w(1 - i))
        }),
    );
    r.check_range("kernel-powers", "ker θ^n = F(n)", 0, top, |n| {
        let k = Subspace::row_space(&theta.matpow_kernel(n as u32).unwrap());
        expect_eq(Some(n), &k, at(&c.f, n))
    });
    r.check_range("image-powers", "im θ^n = F̃(n)", 0, top, |n| {
        let im = Subspace::row_space(&theta.pow(n as u32).image());
        expect_eq(Some(n), &im, at(&c.ftilde, n))
    });
    r.check_range("preimage-step", "F(n+1) = θ⁻¹(F(n))", 0, top, |n| {
        expect_eq(Some(n), at(&c.f, n + 1), &at(&c.f, n).preimage_under(&theta))
    });
    r.check_range("image-step", "F̃(n+1) = θ(F̃(n))", 0, top, |n| {
        expect_eq(Some(n), at(&c.ftilde, n + 1), &at(&c.ftilde, n).image_under(&theta))
    });
    r.check(
        "f1-direct",
        "F(1) = ⊕_{i,j} V_i ∩ W_j",
        {
            let parts: Vec<Subspace> = (0..2)
                .flat_map(|i| (0..2).map(move |j| (i, j)))
                .map(|(i, j)| v(i).intersect(w(j)).unwrap())
                .collect();
            let refs: Vec<&Subspace> = parts.iter().collect();
            let sum = Subspace::sum_all(&refs).unwrap();
            expect_eq(Some(1), &sum, at(&c.f, 1)).and_then(|()| {
                expect(Subspace::is_independent(&refs).unwrap(), Some(1), || {
                    "pairwise intersections are not independent".into()
                })
            })
        },
    );
    let ft = &split.ftilde;
    r.check(
        "ftilde-splits",
        "(F̃∩V1) ⊕ (F̃∩V2) = F̃, (F̃∩W1) ⊕ (F̃∩W2) = F̃, (F̃∩V_i) ⊕ (F̃∩W_j) = F̃",
        {
            let pieces_v: Vec<Subspace> = (0..2).map(|i| ft.intersect(v(i)).unwrap()).collect();
            let pieces_w: Vec<Subspace> = (0..2).map(|i| ft.intersect(w(i)).unwrap()).collect();
            let mut res = direct_equals(ft, &pieces_v[0], &pieces_v[1])
                .and_then(|()| direct_equals(ft, &pieces_w[0], &pieces_w[1]));
            for i in 0..2 {
                for j in 0..2 {
                    res = res.and_then(|()| direct_equals(ft, &pieces_v[i], &pieces_w[j]));
                }
            }
            res
        },
    );
    r.check_range(
        "ftilde-n-homogeneous",
        "(F̃(n)∩V1) ⊕ (F̃(n)∩V2) = F̃(n), same for W",
        0,
        top,
        |n| {
            let x = at(&c.ftilde, n);
            let pv: Vec<Subspace> = (0..2).map(|i| x.intersect(v(i)).unwrap()).collect();
            let pw: Vec<Subspace> = (0..2).map(|i| x.intersect(w(i)).unwrap()).collect();
            direct_equals(x, &pv[0], &pv[1])
                .and_then(|()| direct_equals(x, &pw[0], &pw[1]))
                .map_err(|e| with_n(e, n))
        },
    );
    for s in Sigma::ALL {
        let fs = c.f_sigma(s);
        let sb = s.bar();
        let nm = s.name();
        r.check_range(
            &format!("theta-lowers-f-{nm}"),
            "θ(F_σ(n+1)) ⊆ F_σ(n)",
            0,
            top,
            |n| expect_sub(Some(n), &at(fs, n + 1).image_under(&theta), at(fs, n)),
        );
        r.check_range(
            &format!("cohomogeneous-f-{nm}"),
            "(F_σ(n)+V1) ∩ (F_σ(n)+V2) = F_σ(n), same for W",
            0,
            top,
            |n| {
                let x = at(fs, n);
                let lv = x.sum(v(0)).unwrap().intersect(&x.sum(v(1)).unwrap()).unwrap();
                let lw = x.sum(w(0)).unwrap().intersect(&x.sum(w(1)).unwrap()).unwrap();
                expect_eq(Some(n), &lv, x)?;
                expect_eq(Some(n), &lw, x)?;
                expect(x.cohomogeneous(v(0), v(1)).unwrap(), Some(n), || {
                    "not co-homogeneous for V1 ⊕ V2".into()
                })
            },
        );
        r.check_range(
            &format!("ab-lemma-{nm}"),
            "(A+B0) ∩ (A0+B) = A0 + B0 + (A∩B)",
            0,
            top,
            |n| {
                let x = at(fs, n);
                // instances from the co-homogeneity induction, for both pairs
                for pair in [[v(0), v(1), w(s.apply(0)), w(s.apply(1))], [w(0), w(1), v(s.apply(0)), v(s.apply(1))]] {
                    let a = x.sum(pair[0]).unwrap();
                    let b = x.sum(pair[1]).unwrap();
                    let a0 = a.intersect(&x.sum(pair[2]).unwrap()).unwrap();
                    let b0 = b.intersect(&x.sum(pair[3]).unwrap()).unwrap();
                    expect(
                        a0.is_subspace_of(&a) && b0.is_subspace_of(&b) && ab_lemma_holds(&a0, &a, &b0, &b),
                        Some(n),
                        || "lemma instance fails".into(),
                    )?;
                }
                Ok(())
            },
        );
        let fsb1 = at(c.f_sigma(sb), 1);
        r.check_range(
            &format!("disjoint-from-other-f1-{nm}"),
            "F_σ(n) ∩ F_σ̄(1) = {0}",
            0,
            top,
            |n| expect_zero(Some(n), &at(fs, n).intersect(fsb1).unwrap()),
        );
        r.check_range(
            &format!("meets-f1-{nm}"),
            "F_σ(n) ∩ F(1) = F_σ(1) for n ≥ 1",
            1,
            top,
            |n| expect_eq(Some(n), &at(fs, n).intersect(at(&c.f, 1)).unwrap(), at(fs, 1)),
        );
        r.check_range(
            &format!("homogeneous-f-{nm}"),
            "F_σ(n) = (F_σ(n)∩V1) ⊕ (F_σ(n)∩V2), same for W",
            0,
            top,
            |n| {
                let x = at(fs, n);
                let pv: Vec<Subspace> = (0..2).map(|i| x.intersect(v(i)).unwrap()).collect();
                let pw: Vec<Subspace> = (0..2).map(|i| x.intersect(w(i)).unwrap()).collect();
                direct_equals(x, &pv[0], &pv[1])
                    .and_then(|()| direct_equals(x, &pw[0], &pw[1]))
                    .map_err(|e| with_n(e, n))
            },
        );
        r.check_range(
            &format!("mixed-split-f-{nm}"),
            "(F_σ(n)∩V_i) ⊕ (F_σ(n)∩W_σ̄(i)) = F_σ(n)",
            0,
            top,
            |n| {
                let x = at(fs, n);
                (0..2).try_for_each(|i| {
                    direct_equals(
                        x,
                        &x.intersect(v(i)).unwrap(),
                        &x.intersect(w(sb.apply(i))).unwrap(),
                    )
                    .map_err(|e| with_n(e, n))
                })
            },
        );
        r.check_range(
            &format!("inside-vw-{nm}"),
            "F_σ(n) ⊆ V_i + W_σ̄(i)",
            0,
            top,
            |n| {
                (0..2).try_for_each(|i| {
                    expect_sub(Some(n), at(fs, n), &v(i).sum(w(sb.apply(i))).unwrap())
                })
            },
        );
    }
    r.check_range("fe-ftau-disjoint", "F_e(n) ∩ F_τ(n) = {0}", 0, top, |n| {
        expect_zero(Some(n), &at(&c.f_e, n).intersect(at(&c.f_tau, n)).unwrap())
    });
    r.check_range("fe-ftau-sum", "F_e(n) ⊕ F_τ(n) = F(n)", 0, top, |n| {
        direct_equals(at(&c.f, n), at(&c.f_e, n), at(&c.f_tau, n)).map_err(|e| with_n(e, n))
    });
    r.check_range(
        "vw-homogeneous",
        "V_i + W_j homogeneous for F_e(n) + F_τ(n)",
        0,
        top,
        |n| {
            for i in 0..2 {
                for j in 0..2 {
                    let x = v(i).sum(w(j)).unwrap();
                    expect(
                        x.homogeneous(at(&c.f_e, n), at(&c.f_tau, n)).unwrap(),
                        Some(n),
                        || format!("V{} + W{} is not homogeneous", i + 1, j + 1),
                    )?;
                }
            }
            Ok(())
        },
    );
    for s in Sigma::ALL {
        let nm = s.name();
        r.check_range(
            &format!("tilde-dominates-{nm}"),
            "F̃(n) ⊆ F̃_σ(n)",
            0,
            top,
            |n| expect_sub(Some(n), at(&c.ftilde, n), at(c.ftilde_sigma(s), n)),
        );
    }
    let f_inf = c.f.last().unwrap();
    r.check("fitting-split", "E = F ⊕ F̃, F = F_e ⊕ F_τ", {
        direct_equals(&whole, f_inf, ft)
            .and_then(|()| direct_equals(f_inf, &split.f_e, &split.f_tau))
    });
    r.check(
        "fitting-nilpotent",
        "θ|F nilpotent, θ|F̃ invertible",
        {
            let on_f = f_inf.restrict(&theta).expect("F is θ-invariant");
            let on_ft = ft.restrict(&theta).expect("F̃ is θ-invariant");
            expect(on_f.pow(dim as u32).is_zero(), None, || "θ|F not nilpotent".into())
                .and_then(|()| {
                    expect(ft.is_zero() || on_ft.det() != dec.field().zero(), None, || {
                        "θ|F̃ not invertible".into()
                    })
                })
        },
    );
    r.check(
        "chains-bounded",
        "every chain stabilizes by n = dim E",
        expect(c.horizon() <= dim, None, || {
            format!("stabilization index {} exceeds {}", c.horizon(), dim)
        }),
    );
    r
}

/// `left ⊕ right = whole`, independence included.
pub fn direct_equals(whole: &Subspace, left: &Subspace, right: &Subspace) -> crate::report::Check {
    let sum = left.sum(right).unwrap();
    expect_eq(None, &sum, whole)?;
    expect(left.dim() + right.dim() == sum.dim(), None, || {
        format!("{left} and {right} intersect nontrivially")
    })
}

fn with_n(w: crate::report::Witness, n: usize) -> crate::report::Witness {
    use crate::report::Witness;
    match w {
        Witness::Subspaces {
            relation,
            left,
            right,
            ..
        } => Witness::Subspaces {
            n: Some(n),
            relation,
            left,
            right,
        },
        Witness::Text { message, .. } => Witness::Text {
            n: Some(n),
            message,
        },
        other => other,
    }
}

/// Fixtures used throughout the tests and the command line examples.
pub mod fixtures {
    use super::*;

    fn lines(f: FieldSpec, vs: [&[i64]; 4]) -> TwoSumDecomposition {
        let [a, b, c, d] = vs.map(|v| Subspace::from_i64(f, 2, &[v]));
        TwoSumDecomposition::new(a, b, c, d).expect("valid fixture")
    }

    /// `(<e1>, <e2>, <e1+e2>, <e1−e2>)`: θ is invertible.
    pub fn g2(f: FieldSpec) -> TwoSumDecomposition {
        lines(f, [&[1, 0], &[0, 1], &[1, 1], &[1, -1]])
    }

    /// `(<e1>, <e2>, <e1>, <e2>)`: θ = 0 and everything is in `F_e`.
    pub fn aligned(f: FieldSpec) -> TwoSumDecomposition {
        lines(f, [&[1, 0], &[0, 1], &[1, 0], &[0, 1]])
    }

    /// `(<e1>, <e2>, <e2>, <e1>)`: everything is in `F_τ`.
    pub fn swapped(f: FieldSpec) -> TwoSumDecomposition {
        lines(f, [&[1, 0], &[0, 1], &[0, 1], &[1, 0]])
    }
}
