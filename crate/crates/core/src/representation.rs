//! Matrix Lie algebras acting on a two-sum decomposition, and the
//! eigenspace splittings of the nilpotent part.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::form::{is_reflexive_pair, reflexive_decomposition, BilinearForm, Isotropy};
use crate::matrix::{Echelon, Matrix};
use crate::report::{expect, expect_eq, expect_matrix_eq, expect_sub, TheoremReport};
use crate::subspace::Subspace;
use crate::twosum::{projector_onto, Projector, TwoSumDecomposition};

/// A bracket-closed linear span of square matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixLieAlgebra {
    field: FieldSpec,
    dim: usize,
    basis: Vec<Matrix>,
    generators: Vec<Matrix>,
}

fn check_square(field: FieldSpec, n: usize, m: &Matrix) -> Result<()> {
    if m.field() != field {
        return Err(Error::FieldMismatch);
    }
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if m.rows() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: m.rows(),
        });
    }
    Ok(())
}

/// Smallest bracket-closed span containing `generators`.
pub fn lie_closure(field: FieldSpec, n: usize, generators: &[Matrix]) -> Result<MatrixLieAlgebra> {
    for g in generators {
        check_square(field, n, g)?;
    }
    let mut span = Echelon::new(field, n * n);
    let mut basis: Vec<Matrix> = Vec::new();
    for g in generators {
        if span.insert(&g.flatten()) {
            basis.push(g.clone());
        }
    }
    // bracket each element with everything before it until nothing new appears
    let mut k = 0;
    while k < basis.len() {
        for j in 0..k {
            let b = basis[k].commutator(&basis[j]);
            if span.insert(&b.flatten()) {
                basis.push(b);
            }
        }
        k += 1;
    }
    Ok(MatrixLieAlgebra {
        field,
        dim: n,
        basis,
        generators: generators.to_vec(),
    })
}

impl MatrixLieAlgebra {
    pub fn zero(field: FieldSpec, n: usize) -> Self {
        MatrixLieAlgebra {
            field,
            dim: n,
            basis: Vec::new(),
            generators: Vec::new(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the algebra as a vector space.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        let mut span = Echelon::new(self.field, self.dim * self.dim);
        for b in &self.basis {
            span.insert(&b.flatten());
        }
        span.contains(&m.flatten())
    }

    /// Linear combination of the basis with the given coefficients.
    pub fn combine(&self, coeffs: &[Scalar]) -> Matrix {
        let n = self.dim;
        self.basis
            .iter()
            .zip(coeffs)
            .fold(Matrix::zeros(self.field, n, n), |acc, (b, c)| &acc + &b.scale(c))
    }
}

/// Every `a` with `a S ⊆ S` for each given subspace and, with a form,
/// `⟨a x, y⟩ + ⟨x, a y⟩ = 0`. Such a set is closed under brackets.
pub fn invariance_algebra(
    field: FieldSpec,
    n: usize,
    subspaces: &[&Subspace],
    form: Option<&BilinearForm>,
) -> Result<MatrixLieAlgebra> {
    let nn = n * n;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for s in subspaces {
        if s.ambient_dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: s.ambient_dim(),
            });
        }
        let ann = s.annihilator();
        // u·a·b = 0 for u in the annihilator and b in the basis
        for u in ann.vectors() {
            for b in s.vectors() {
                let mut row = vec![field.zero(); nn];
                for r in 0..n {
                    for c in 0..n {
                        row[r * n + c] = &u[r] * &b[c];
                    }
                }
                rows.push(row);
            }
        }
    }
    if let Some(form) = form {
        let g = form.gram();
        // (G a + aᵀ G)[i][j] = Σ_k G[i][k] a[k][j] + a[k][i] G[k][j]
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![field.zero(); nn];
                for k in 0..n {
                    row[k * n + j] = &row[k * n + j] + g.get(i, k);
                    row[k * n + i] = &row[k * n + i] + g.get(k, j);
                }
                rows.push(row);
            }
        }
    }
    let basis: Vec<Matrix> = if rows.is_empty() {
        (0..nn)
            .map(|k| {
                let mut m = Matrix::zeros(field, n, n);
                m.set(k / n, k % n, field.one());
                m
            })
            .collect()
    } else {
        Matrix::from_rows(field, nn, rows)?
            .kernel()
            .row_vecs()
            .map(|v| Matrix::from_flat(field, n, n, v.to_vec()))
            .collect()
    };
    Ok(MatrixLieAlgebra {
        field,
        dim: n,
        generators: basis.clone(),
        basis,
    })
}

pub fn leaves_invariant(alg: &MatrixLieAlgebra, v: &Subspace) -> bool {
    alg.basis.iter().all(|b| v.is_invariant_under(b))
}

pub fn commutes_with_algebra(m: &Matrix, alg: &MatrixLieAlgebra) -> bool {
    alg.basis.iter().all(|b| (m * b) == (b * m))
}

/// `p_a^b − p_b^a`: `+1` on `a`, `−1` on `b`.
pub fn involution_from_split(a: &Subspace, b: &Subspace) -> Result<Matrix> {
    let p = projector_onto(a, b)?;
    let field = a.field();
    Ok(&p.scale(&field.from_i64(2)) - &Matrix::identity(field, a.ambient_dim()))
}

/// `p1 − q2`.
pub fn l_operator(dec: &TwoSumDecomposition) -> Matrix {
    &dec.projector(Projector::P1) - &dec.projector(Projector::Q2)
}

/// `p1 − q1`.
pub fn l_prime_operator(dec: &TwoSumDecomposition) -> Matrix {
    &dec.projector(Projector::P1) - &dec.projector(Projector::Q1)
}

fn shifted(m: &Matrix, lambda: &Scalar) -> Matrix {
    m - &Matrix::scalar_identity(m.field(), m.rows(), lambda)
}

/// `ker (m − λI)^n` with `n` the size of `m`.
pub fn generalized_eigenspace(m: &Matrix, lambda: &Scalar) -> Subspace {
    let k = shifted(m, lambda).matpow_kernel(m.rows() as u32).expect("square");
    if k.rows() == 0 {
        Subspace::zero(m.field(), m.rows())
    } else {
        Subspace::row_space(&k)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EigenEntry {
    pub lambda: Scalar,
    pub space: Subspace,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EigenSplit {
    pub entries: Vec<EigenEntry>,
    /// Intersection of the images of `(m − λI)^n` over the requested values.
    pub residual: Subspace,
}

pub fn eigen_split(m: &Matrix, lambdas: &[Scalar]) -> EigenSplit {
    let n = m.rows();
    let mut residual = Subspace::full(m.field(), n);
    let mut entries = Vec::new();
    for l in lambdas {
        let space = generalized_eigenspace(m, l);
        let image = Subspace::row_space(&shifted(m, l).pow(n as u32).image());
        residual = residual.intersect(&image).unwrap();
        entries.push(EigenEntry {
            lambda: l.clone(),
            multiplicity: space.dim(),
            space,
        });
    }
    EigenSplit { entries, residual }
}

impl EigenSplit {
    pub fn space(&self, lambda: &Scalar) -> Option<&Subspace> {
        self.entries
            .iter()
            .find(|e| &e.lambda == lambda)
            .map(|e| &e.space)
    }

    /// The entries and the residual form a direct sum of the ambient space.
    pub fn is_complete(&self) -> bool {
        let mut parts: Vec<&Subspace> = self.entries.iter().map(|e| &e.space).collect();
        parts.push(&self.residual);
        Subspace::is_direct_sum(&parts).unwrap_or(false)
    }
}

fn direct_equals(whole: &Subspace, a: &Subspace, b: &Subspace) -> crate::report::Check {
    crate::twosum::direct_equals(whole, a, b)
}

fn check_isotropy(form: &BilinearForm, s: &Subspace, want: Isotropy) -> crate::report::Check {
    let got = form.isotropy(s).unwrap();
    let ok = match want {
        // the zero space counts as both
        Isotropy::TotallyIsotropic => s.is_zero() || got == Isotropy::TotallyIsotropic,
        other => got == other,
    };
    expect(ok, None, || format!("{s} is {got:?}, expected {want:?}"))
}

/// Eigenspace splittings of `F_e` under `L = p1 − q2` and of `F_τ` under
/// `L′ = p1 − q1`, plus the form conditions when a form is given.
pub fn verify_eigen_splittings(
    dec: &TwoSumDecomposition,
    form: Option<&BilinearForm>,
) -> Result<TheoremReport> {
    if let Some(form) = form {
        if !is_reflexive_pair(form, dec) {
            return Err(Error::Precondition(
                "decomposition is not of the form (V1, V2, V1⊥, V2⊥)".into(),
            ));
        }
    }
    let f = dec.field();
    let one = f.one();
    let minus = -&one;
    let split = dec.canonical_split();
    let theta = dec.theta();
    let l = l_operator(dec);
    let lp = l_prime_operator(dec);
    let l_plus = generalized_eigenspace(&l, &one);
    let l_minus = generalized_eigenspace(&l, &minus);
    let lp_plus = generalized_eigenspace(&lp, &one);
    let lp_minus = generalized_eigenspace(&lp, &minus);
    let (v1, v2, w1, w2) = (dec.v1(), dec.v2(), dec.w1(), dec.w2());

    let mut r = TheoremReport::new("eigenspace splitting of F_e and F_τ");
    r.check(
        "theta-anticommutes-l",
        "θL = −Lθ, θL′ = −L′θ",
        expect_matrix_eq(None, &(&theta * &l), &-&(&l * &theta))
            .and_then(|()| expect_matrix_eq(None, &(&theta * &lp), &-&(&lp * &theta))),
    );
    r.check(
        "fe-eigensplit",
        "F_e = E(L,−1) ⊕ E(L,1)",
        direct_equals(&split.f_e, &l_minus, &l_plus),
    );
    r.check(
        "fe-containments",
        "V1∩W1 ⊆ E(L,1), V2∩W2 ⊆ E(L,−1)",
        expect_sub(None, &v1.intersect(w1)?, &l_plus)
            .and_then(|()| expect_sub(None, &v2.intersect(w2).unwrap(), &l_minus)),
    );
    r.check(
        "ftau-eigensplit",
        "F_τ = E(L′,−1) ⊕ E(L′,1)",
        direct_equals(&split.f_tau, &lp_minus, &lp_plus),
    );
    r.check(
        "ftau-containments",
        "V1∩W2 ⊆ E(L′,1), V2∩W1 ⊆ E(L′,−1)",
        expect_sub(None, &v1.intersect(w2)?, &lp_plus)
            .and_then(|()| expect_sub(None, &v2.intersect(w1).unwrap(), &lp_minus)),
    );
    r.check(
        "zero-eigenvalue-parts",
        "F_τ = E(L,0), F_e = E(L′,0)",
        expect_eq(None, &generalized_eigenspace(&l, &f.zero()), &split.f_tau).and_then(|()| {
            expect_eq(None, &generalized_eigenspace(&lp, &f.zero()), &split.f_e)
        }),
    );
    match form {
        None => {
            for name in ["l-anti-self-adjoint", "l-eigenspaces-isotropic", "lp-self-adjoint", "lp-eigenspaces"] {
                r.inapplicable(name, "form conditions", "no form supplied");
            }
        }
        Some(form) => {
            r.check(
                "l-anti-self-adjoint",
                "L* = −L",
                expect_matrix_eq(None, &form.adjoint(&l)?, &-&l),
            );
            r.check(
                "l-eigenspaces-isotropic",
                "E(L,±1) totally isotropic, E(L,1) ⊕ E(L,−1) nondegenerate",
                check_isotropy(form, &l_plus, Isotropy::TotallyIsotropic)
                    .and_then(|()| check_isotropy(form, &l_minus, Isotropy::TotallyIsotropic))
                    .and_then(|()| {
                        check_isotropy(form, &l_plus.sum(&l_minus).unwrap(), Isotropy::Nondegenerate)
                    }),
            );
            r.check(
                "lp-self-adjoint",
                "L′* = L′",
                expect_matrix_eq(None, &form.adjoint(&lp)?, &lp),
            );
            r.check(
                "lp-eigenspaces",
                "E(L′,±1) nondegenerate and orthogonal",
                check_isotropy(form, &lp_plus, Isotropy::Nondegenerate)
                    .and_then(|()| check_isotropy(form, &lp_minus, Isotropy::Nondegenerate))
                    .and_then(|()| {
                        expect(form.orthogonal(&lp_plus, &lp_minus), None, || {
                            "E(L′,1) and E(L′,−1) are not orthogonal".into()
                        })
                    }),
            );
        }
    }
    Ok(r)
}

/// `L = p − p*` for `p = p_{V1}^{V2}`, when `E = F_e`.
pub fn verify_projector_skew_part(
    form: &BilinearForm,
    v1: &Subspace,
    v2: &Subspace,
    alg: Option<&MatrixLieAlgebra>,
) -> Result<TheoremReport> {
    let (dec, _) = reflexive_decomposition(form, v1, Some(v2))?;
    let mut r = TheoremReport::new("para-Kähler splitting from a degenerate decomposition");
    let split = dec.canonical_split();
    if !split.f_e.is_full() {
        r.inapplicable(
            "precondition",
            "E = F_e",
            format!(
                "dim F_e = {}, dim F_τ = {}, dim F̃ = {}",
                split.f_e.dim(),
                split.f_tau.dim(),
                split.ftilde.dim()
            ),
        );
        return Ok(r);
    }
    let f = form.field();
    let p = projector_onto(v1, v2)?;
    let l = &p - &form.adjoint(&p)?;
    let plus = generalized_eigenspace(&l, &f.one());
    let minus = generalized_eigenspace(&l, &-f.one());
    let whole = dec.whole();
    r.check(
        "precondition",
        "E = F_e",
        Ok(()),
    );
    r.check(
        "l-matches",
        "p − p* = p1 − q2",
        expect_matrix_eq(None, &l, &l_operator(&dec)),
    );
    r.check("splitting", "E = E(L,1) ⊕ E(L,−1)", direct_equals(&whole, &plus, &minus));
    r.check(
        "containments",
        "V1∩V1⊥ ⊆ E(L,1), V2∩V2⊥ ⊆ E(L,−1)",
        expect_sub(None, &v1.intersect(&form.perp(v1)?)?, &plus).and_then(|()| {
            expect_sub(None, &v2.intersect(&form.perp(v2).unwrap()).unwrap(), &minus)
        }),
    );
    r.check(
        "isotropic",
        "E(L,±1) totally isotropic, sum nondegenerate",
        check_isotropy(form, &plus, Isotropy::TotallyIsotropic)
            .and_then(|()| check_isotropy(form, &minus, Isotropy::TotallyIsotropic))
            .and_then(|()| check_isotropy(form, &plus.sum(&minus).unwrap(), Isotropy::Nondegenerate)),
    );
    match alg {
        Some(alg) => r.check(
            "invariant-eigenspaces",
            "E(L,±1) are sub-representations",
            expect(
                leaves_invariant(alg, &plus) && leaves_invariant(alg, &minus),
                None,
                || "an eigenspace of L is not invariant".into(),
            ),
        ),
        None => r.inapplicable("invariant-eigenspaces", "E(L,±1) are sub-representations", "no algebra supplied"),
    }
    Ok(r)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualIdentification {
    /// `M[i][j] = ⟨b_i, a_j⟩` for bases `b` of `e2` and `a` of `e1`.
    pub pairing: Matrix,
    pub invertible: bool,
}

pub fn dual_identification(
    form: &BilinearForm,
    e1: &Subspace,
    e2: &Subspace,
) -> Result<DualIdentification> {
    if !Subspace::is_direct_sum(&[e1, e2])? {
        return Err(Error::NotComplementary(crate::error::Pair::Other));
    }
    let pairing = form.pairing(e2, e1);
    let invertible = pairing.is_square() && pairing.rank() == pairing.rows();
    Ok(DualIdentification {
        pairing,
        invertible,
    })
}

/// The restriction of `p_{f1}^{f2}` to `f3`, as a `dim f1 × dim f3`
/// matrix in the RREF bases. `None` when it fails to intertwine `alg`.
pub fn k2_factor(
    f1: &Subspace,
    f2: &Subspace,
    f3: &Subspace,
    alg: &MatrixLieAlgebra,
) -> Result<Option<Matrix>> {
    let total = f1.sum(f2)?;
    let pairs = [(f1, f2), (f2, f3), (f1, f3)];
    for (a, b) in pairs {
        let s = a.sum(b)?;
        if s != total || a.dim() + b.dim() != s.dim() {
            return Err(Error::Precondition(format!(
                "{a} and {b} do not form a direct sum equal to {total}"
            )));
        }
    }
    for s in [f1, f3] {
        if !leaves_invariant(alg, s) {
            return Err(Error::Precondition(format!("{s} is not invariant")));
        }
    }
    let field = f1.field();
    let stacked = f1.basis().vstack(f2.basis()).transpose();
    let cols: Vec<Vec<Scalar>> = f3
        .vectors()
        .map(|x| {
            // solve in the combined basis, keep the f1 part
            let rref = stacked.hstack(&Matrix::from_columns(field, x.len(), &[x.to_vec()])).rref();
            let k = f1.dim() + f2.dim();
            (0..f1.dim())
                .map(|i| rref.reduced.get(i, k).clone())
                .collect()
        })
        .collect();
    let iso = Matrix::from_columns(field, f1.dim(), &cols);
    for b in alg.basis() {
        let on1 = f1.restrict(b).expect("invariant");
        let on3 = f3.restrict(b).expect("invariant");
        if &iso * &on3 != &on1 * &iso {
            return Ok(None);
        }
    }
    Ok(Some(iso))
}

/// The four-part structure theorem for a reflexive decomposition.
pub fn verify_four_part_structure(
    form: &BilinearForm,
    dec: &TwoSumDecomposition,
    alg: &MatrixLieAlgebra,
) -> Result<TheoremReport> {
    if !is_reflexive_pair(form, dec) {
        return Err(Error::Precondition(
            "decomposition is not of the form (V1, V2, V1⊥, V2⊥)".into(),
        ));
    }
    for v in [dec.v1(), dec.v2()] {
        if !leaves_invariant(alg, v) {
            return Err(Error::Precondition(format!("{v} is not invariant")));
        }
    }
    let f = form.field();
    let split = dec.canonical_split();
    let whole = dec.whole();
    let mut r = TheoremReport::new("structure of a reflexive representation with a split");
    let parts = split.parts();

    r.check(
        "orthogonal-split",
        "E = F_e ⊕⊥ F_τ ⊕⊥ F̃",
        {
            let sum = Subspace::sum_all(&parts).unwrap();
            expect_eq(None, &sum, &whole)
                .and_then(|()| {
                    expect(Subspace::is_independent(&parts).unwrap(), None, || {
                        "parts are not independent".into()
                    })
                })
                .and_then(|()| {
                    [(0, 1), (0, 2), (1, 2)].iter().try_for_each(|&(a, b)| {
                        expect(form.orthogonal(parts[a], parts[b]), None, || {
                            format!("{} and {} are not orthogonal", parts[a], parts[b])
                        })
                    })
                })
                .and_then(|()| {
                    expect(parts.iter().all(|p| leaves_invariant(alg, p)), None, || {
                        "a part is not invariant".into()
                    })
                })
        },
    );

    let l = l_operator(dec);
    let fe = &split.f_e;
    if fe.is_zero() {
        r.inapplicable("fe-isotropic-pair", "F_e = F_e⁺ ⊕ (F_e⁺)*", "F_e = {0}");
    } else {
        let plus = generalized_eigenspace(&l, &f.one()).intersect(fe)?;
        let minus = generalized_eigenspace(&l, &-f.one()).intersect(fe)?;
        let ident = dual_identification(form, &plus, &minus);
        r.check(
            "fe-isotropic-pair",
            "F_e = F_e⁺ ⊕ (F_e⁺)*",
            direct_equals(fe, &plus, &minus)
                .and_then(|()| check_isotropy(form, &plus, Isotropy::TotallyIsotropic))
                .and_then(|()| check_isotropy(form, &minus, Isotropy::TotallyIsotropic))
                .and_then(|()| {
                    expect(
                        leaves_invariant(alg, &plus) && leaves_invariant(alg, &minus),
                        None,
                        || "F_e⁺ or F_e⁻ is not invariant".into(),
                    )
                })
                .and_then(|()| {
                    // pairing inside F_e, where F_e⁺ ⊕ F_e⁻ is the ambient
                    let m = form.pairing(&minus, &plus);
                    expect(m.is_square() && m.rank() == m.rows(), None, || {
                        "pairing between F_e⁻ and F_e⁺ is singular".into()
                    })
                })
                .and_then(|()| match ident {
                    // only meaningful when F_e is all of E
                    Ok(d) => expect(d.invertible, None, || "dual identification fails".into()),
                    Err(_) => Ok(()),
                }),
        );
        r.annotate("F_e⁺ = E(L,1) ∩ F_e");
    }

    let lp = l_prime_operator(dec);
    let ft = &split.f_tau;
    if ft.is_zero() {
        r.inapplicable("ftau-orthogonal-pair", "F_τ = F_τ⁺ ⊕⊥ F_τ⁻", "F_τ = {0}");
    } else {
        let plus = generalized_eigenspace(&lp, &f.one()).intersect(ft)?;
        let minus = generalized_eigenspace(&lp, &-f.one()).intersect(ft)?;
        r.check(
            "ftau-orthogonal-pair",
            "F_τ = F_τ⁺ ⊕⊥ F_τ⁻",
            direct_equals(ft, &plus, &minus)
                .and_then(|()| check_isotropy(form, &plus, Isotropy::Nondegenerate))
                .and_then(|()| check_isotropy(form, &minus, Isotropy::Nondegenerate))
                .and_then(|()| {
                    expect(form.orthogonal(&plus, &minus), None, || {
                        "F_τ⁺ and F_τ⁻ are not orthogonal".into()
                    })
                })
                .and_then(|()| {
                    expect(
                        leaves_invariant(alg, &plus) && leaves_invariant(alg, &minus),
                        None,
                        || "F_τ⁺ or F_τ⁻ is not invariant".into(),
                    )
                }),
        );
        r.annotate("F_τ± = E(L′,±1) ∩ F_τ");
    }

    let ftl = &split.ftilde;
    if ftl.is_zero() {
        r.inapplicable("ftilde-tensor", "F̃ = F̃₀ ⊗ K²", "F̃ = {0}");
    } else {
        let f1 = ftl.intersect(dec.v1())?;
        let f2 = ftl.intersect(dec.v2())?;
        let f3 = ftl.intersect(dec.w1())?;
        let result = match k2_factor(&f1, &f2, &f3, alg) {
            Err(e) => Err(crate::report::Witness::text(None, e.to_string())),
            Ok(None) => Err(crate::report::Witness::text(None, "projection does not intertwine")),
            Ok(Some(iso)) => expect(iso.is_square() && iso.rank() == iso.rows(), None, || {
                "projection is not an isomorphism".into()
            }),
        };
        r.check(
            "ftilde-tensor",
            "F̃ = F̃₀ ⊗ K² with F̃₀ = F̃∩V1 nondegenerate",
            result
                .and_then(|()| direct_equals(ftl, &f1, &f2))
                .and_then(|()| check_isotropy(form, &f1, Isotropy::Nondegenerate)),
        );
    }
    Ok(r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OracleBounds {
    pub max_dim: usize,
    pub max_prime: u64,
}

impl Default for OracleBounds {
    fn default() -> Self {
        OracleBounds {
            max_dim: 4,
            max_prime: 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum OracleVerdict {
    /// Every proper nonzero invariant subspace is degenerate.
    Yes,
    /// A proper nonzero invariant subspace that is nondegenerate.
    No { witness: Subspace },
    Infeasible { reason: String },
}

/// Exhaustive check that every invariant subspace other than `{0}` and
/// `E` is degenerate. Returns the first counterexample in canonical order.
pub fn weakly_irreducible_oracle(
    form: &BilinearForm,
    alg: &MatrixLieAlgebra,
    bounds: OracleBounds,
) -> OracleVerdict {
    let field = form.field();
    let n = form.dim();
    let Some(p) = field.modulus() else {
        return OracleVerdict::Infeasible {
            reason: "enumeration needs a finite field".into(),
        };
    };
    if p > bounds.max_prime || n > bounds.max_dim {
        return OracleVerdict::Infeasible {
            reason: format!(
                "GF({p})^{n} exceeds the bounds p ≤ {}, dim ≤ {}",
                bounds.max_prime, bounds.max_dim
            ),
        };
    }
    let all = Subspace::enumerate_all(field, n).expect("finite field");
    let witness = all.par_iter().find_first(|s| {
        !s.is_zero()
            && !s.is_full()
            && leaves_invariant(alg, s)
            && form.isotropy(s).unwrap() == Isotropy::Nondegenerate
    });
    match witness {
        Some(w) => OracleVerdict::No { witness: w.clone() },
        None => OracleVerdict::Yes,
    }
}
