//! Nondegenerate symmetric and antisymmetric bilinear forms.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::{dot, Matrix};
use crate::report::{expect, expect_eq, expect_matrix_eq, TheoremReport};
use crate::subspace::Subspace;
use crate::twosum::{at, Sigma, TwoSumDecomposition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormKind {
    Symmetric,
    Antisymmetric,
}

/// `⟨x, y⟩ = xᵀ G y` with `G` invertible and (anti)symmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    gram: Matrix,
    gram_inv: Matrix,
    kind: FormKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Isotropy {
    TotallyIsotropic,
    Nondegenerate,
    Degenerate,
}

impl BilinearForm {
    pub fn new(gram: Matrix, kind: FormKind) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::NotSquare {
                rows: gram.rows(),
                cols: gram.cols(),
            });
        }
        let expected = match kind {
            FormKind::Symmetric => gram.transpose(),
            FormKind::Antisymmetric => -&gram.transpose(),
        };
        if expected != gram {
            return Err(Error::FormSymmetry);
        }
        if kind == FormKind::Antisymmetric && gram.rows() % 2 == 1 {
            return Err(Error::DegenerateForm);
        }
        let gram_inv = gram.inverse().ok_or(Error::DegenerateForm)?;
        Ok(BilinearForm {
            gram,
            gram_inv,
            kind,
        })
    }

    pub fn symmetric(gram: Matrix) -> Result<Self> {
        BilinearForm::new(gram, FormKind::Symmetric)
    }

    /// The standard dot product.
    pub fn identity(field: FieldSpec, n: usize) -> Self {
        BilinearForm::symmetric(Matrix::identity(field, n)).unwrap()
    }

    /// Orthogonal sum of `planes` copies of `[[0,1],[1,0]]`.
    pub fn hyperbolic(field: FieldSpec, planes: usize) -> Self {
        let n = 2 * planes;
        let mut g = Matrix::zeros(field, n, n);
        for k in 0..planes {
            g.set(2 * k, 2 * k + 1, field.one());
            g.set(2 * k + 1, 2 * k, field.one());
        }
        BilinearForm::symmetric(g).unwrap()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn field(&self) -> FieldSpec {
        self.gram.field()
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    fn check_ambient(&self, n: usize) -> Result<()> {
        if n != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: n,
            });
        }
        Ok(())
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        dot(x, &self.gram.mul_vec(y), self.field())
    }

    /// `M[i][j] = ⟨a_i, b_j⟩` over the bases of `a` and `b`.
    pub fn pairing(&self, a: &Subspace, b: &Subspace) -> Matrix {
        let rows: Vec<Vec<Scalar>> = a
            .vectors()
            .map(|x| b.vectors().map(|y| self.eval(x, y)).collect())
            .collect();
        Matrix::from_rows(self.field(), b.dim(), rows).expect("consistent sizes")
    }

    pub fn orthogonal(&self, a: &Subspace, b: &Subspace) -> bool {
        self.pairing(a, b).is_zero()
    }

    pub fn perp(&self, v: &Subspace) -> Result<Subspace> {
        self.check_ambient(v.ambient_dim())?;
        if v.field() != self.field() {
            return Err(Error::FieldMismatch);
        }
        // ⟨x, b⟩ = bᵀ Gᵀ x
        let constraints = v.basis() * &self.gram.transpose();
        Ok(Subspace::row_space(&constraints.kernel()))
    }

    pub fn isotropy(&self, v: &Subspace) -> Result<Isotropy> {
        let p = self.perp(v)?;
        Ok(if v.is_zero() {
            Isotropy::Nondegenerate
        } else if v.is_subspace_of(&p) {
            Isotropy::TotallyIsotropic
        } else if !v.intersect(&p)?.is_zero() {
            Isotropy::Degenerate
        } else {
            Isotropy::Nondegenerate
        })
    }

    /// `m*` with `⟨m x, y⟩ = ⟨x, m* y⟩`, namely `G⁻¹ mᵀ G`.
    pub fn adjoint(&self, m: &Matrix) -> Result<Matrix> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        self.check_ambient(m.rows())?;
        Ok(&(&self.gram_inv * &m.transpose()) * &self.gram)
    }

    pub fn is_self_adjoint(&self, m: &Matrix) -> bool {
        self.adjoint(m).is_ok_and(|a| &a == m)
    }

    pub fn is_skew_adjoint(&self, m: &Matrix) -> bool {
        self.adjoint(m).is_ok_and(|a| a == -m)
    }
}

/// `l² = I` and `l* = −l`.
pub fn para_kahler_check(form: &BilinearForm, l: &Matrix) -> bool {
    l.is_square() && (l * l).is_identity() && form.is_skew_adjoint(l)
}

/// Builds `(E, V1, V2, V1⊥, V2⊥)`. Without `v2`, uses `V2 = V1⊥`.
pub fn reflexive_decomposition(
    form: &BilinearForm,
    v1: &Subspace,
    v2: Option<&Subspace>,
) -> Result<(TwoSumDecomposition, Subspace)> {
    let v2 = match v2 {
        Some(v) => v.clone(),
        None => form.perp(v1)?,
    };
    let w1 = form.perp(v1)?;
    let w2 = form.perp(&v2)?;
    let dec = TwoSumDecomposition::new(v1.clone(), v2.clone(), w1, w2)?;
    Ok((dec, v2))
}

/// `W_i = V_i⊥` for both indices.
pub fn is_reflexive_pair(form: &BilinearForm, dec: &TwoSumDecomposition) -> bool {
    form.dim() == dec.ambient_dim()
        && form.field() == dec.field()
        && (0..2).all(|i| form.perp(dec.v(i)).is_ok_and(|p| &p == dec.w(i)))
}

/// Orthogonality of the canonical split and `F_σ(n)⊥ = F̃_σ(n)`.
pub fn verify_orthogonal_split(form: &BilinearForm, dec: &TwoSumDecomposition) -> Result<TheoremReport> {
    if !is_reflexive_pair(form, dec) {
        return Err(Error::Precondition(
            "decomposition is not of the form (V1, V2, V1⊥, V2⊥)".into(),
        ));
    }
    let mut r = TheoremReport::new("orthogonal canonical split for a reflexive form");
    let c = dec.chains();
    let split = crate::twosum::split_from_chains(&c);
    let theta = dec.theta();
    let top = c.horizon().max(dec.ambient_dim());

    r.check(
        "theta-self-adjoint",
        "θ* = θ",
        expect_matrix_eq(None, &form.adjoint(&theta)?, &theta),
    );
    let parts = split.parts();
    r.check(
        "orthogonal-parts",
        "F_e ⊥ F_τ, F_e ⊥ F̃, F_τ ⊥ F̃",
        [(0, 1), (0, 2), (1, 2)].iter().try_for_each(|&(a, b)| {
            expect(form.orthogonal(parts[a], parts[b]), None, || {
                format!("{} and {} are not orthogonal", parts[a], parts[b])
            })
        }),
    );
    r.check(
        "nondegenerate-parts",
        "F_e, F_τ, F̃ are nondegenerate",
        parts.iter().try_for_each(|p| {
            expect(
                form.isotropy(p).unwrap() == Isotropy::Nondegenerate,
                None,
                || format!("{p} is degenerate"),
            )
        }),
    );
    for s in Sigma::ALL {
        r.check_range(
            &format!("perp-chain-{}", s.name()),
            "F_σ(n)⊥ = F̃_σ(n)",
            0,
            top,
            |n| {
                expect_eq(
                    Some(n),
                    &form.perp(at(c.f_sigma(s), n)).unwrap(),
                    at(c.ftilde_sigma(s), n),
                )
            },
        );
    }
    r.check_range("perp-chain", "F(n)⊥ = F̃(n)", 0, top, |n| {
        expect_eq(Some(n), &form.perp(at(&c.f, n)).unwrap(), at(&c.ftilde, n))
    });
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twosum::fixtures::{aligned, swapped};
    use proptest::prelude::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn line(f: FieldSpec, v: &[i64]) -> Subspace {
        Subspace::from_i64(f, v.len(), &[v])
    }

    #[test]
    fn construction_rules() {
        let f = q();
        assert_eq!(
            BilinearForm::symmetric(Matrix::from_i64(f, &[&[1, 2], &[0, 1]])),
            Err(Error::FormSymmetry)
        );
        assert_eq!(
            BilinearForm::symmetric(Matrix::from_i64(f, &[&[1, 1], &[1, 1]])),
            Err(Error::DegenerateForm)
        );
        assert_eq!(
            BilinearForm::new(Matrix::zeros(f, 3, 3), FormKind::Antisymmetric),
            Err(Error::DegenerateForm)
        );
        let omega = Matrix::from_i64(f, &[&[0, 1], &[-1, 0]]);
        assert!(BilinearForm::new(omega, FormKind::Antisymmetric).is_ok());
    }

    #[test]
    fn perp_examples() {
        let f = q();
        let h = BilinearForm::hyperbolic(f, 1);
        assert_eq!(h.perp(&line(f, &[1, 0])).unwrap(), line(f, &[1, 0]));
        let id = BilinearForm::identity(f, 3);
        assert_eq!(
            id.perp(&line(f, &[1, 0, 0])).unwrap(),
            Subspace::from_i64(f, 3, &[&[0, 1, 0], &[0, 0, 1]])
        );
        assert!(id.perp(&Subspace::zero(f, 3)).unwrap().is_full());
    }

    #[test]
    fn isotropy_examples() {
        let f = q();
        let h = BilinearForm::hyperbolic(f, 1);
        assert_eq!(h.isotropy(&line(f, &[1, 0])).unwrap(), Isotropy::TotallyIsotropic);
        let id = BilinearForm::identity(f, 2);
        assert_eq!(id.isotropy(&line(f, &[1, 0])).unwrap(), Isotropy::Nondegenerate);
        let lorentz = BilinearForm::symmetric(Matrix::from_i64(f, &[&[1, 0], &[0, -1]])).unwrap();
        assert_eq!(lorentz.isotropy(&line(f, &[1, 1])).unwrap(), Isotropy::TotallyIsotropic);
        assert_eq!(id.isotropy(&Subspace::zero(f, 2)).unwrap(), Isotropy::Nondegenerate);
        let plane = Subspace::from_i64(f, 3, &[&[1, 0, 0], &[0, 0, 1]]);
        let antidiagonal = BilinearForm::symmetric(Matrix::from_i64(
            f,
            &[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]],
        ))
        .unwrap();
        // <e1, e2> has e1 in its radical
        assert_eq!(antidiagonal.isotropy(&plane).unwrap(), Isotropy::Nondegenerate);
        let plane = Subspace::from_i64(f, 3, &[&[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(antidiagonal.isotropy(&plane).unwrap(), Isotropy::Degenerate);
    }

    #[test]
    fn adjoint_examples() {
        let f = q();
        let m = Matrix::from_i64(f, &[&[1, 2], &[3, 4]]);
        assert_eq!(BilinearForm::identity(f, 2).adjoint(&m).unwrap(), m.transpose());
        let h = BilinearForm::hyperbolic(f, 1);
        let d = Matrix::from_i64(f, &[&[1, 0], &[0, -1]]);
        assert_eq!(h.adjoint(&d).unwrap(), -&d);
        assert_eq!(h.adjoint(&h.adjoint(&m).unwrap()).unwrap(), m);
    }

    #[test]
    fn para_kahler_examples() {
        let f = q();
        let d = Matrix::from_i64(f, &[&[1, 0], &[0, -1]]);
        assert!(para_kahler_check(&BilinearForm::hyperbolic(f, 1), &d));
        assert!(!para_kahler_check(&BilinearForm::identity(f, 2), &d));
        assert!(!para_kahler_check(&BilinearForm::hyperbolic(f, 1), &Matrix::identity(f, 2)));
    }

    #[test]
    fn reflexive_decomposition_examples() {
        let f = q();
        let e1 = line(f, &[1, 0]);
        let e2 = line(f, &[0, 1]);
        let (dec, _) =
            reflexive_decomposition(&BilinearForm::hyperbolic(f, 1), &e1, Some(&e2)).unwrap();
        assert_eq!(dec, aligned(f));
        let (dec, _) =
            reflexive_decomposition(&BilinearForm::identity(f, 2), &e1, Some(&e2)).unwrap();
        assert_eq!(dec, swapped(f));
        // an isotropic line is its own perp, so V2 = V1⊥ fails
        assert!(matches!(
            reflexive_decomposition(&BilinearForm::hyperbolic(f, 1), &e1, None),
            Err(Error::NotComplementary(_))
        ));
    }

    #[test]
    fn orthogonal_split_on_fixtures() {
        let f = q();
        let r = verify_orthogonal_split(&BilinearForm::hyperbolic(f, 1), &aligned(f)).unwrap();
        assert!(r.all_passed(), "{r}");
        let r = verify_orthogonal_split(&BilinearForm::identity(f, 2), &swapped(f)).unwrap();
        assert!(r.all_passed(), "{r}");
        assert!(verify_orthogonal_split(&BilinearForm::identity(f, 2), &aligned(f)).is_err());
    }

    fn gf5_pair() -> impl Strategy<Value = (Subspace, Subspace)> {
        let f = FieldSpec::Prime(5);
        let all = Subspace::enumerate_all(f, 3).unwrap();
        (proptest::sample::select(all.clone()), proptest::sample::select(all))
    }

    proptest! {
        #[test]
        fn perp_exchanges_sum_and_meet((a, b) in gf5_pair()) {
            let f = FieldSpec::Prime(5);
            let g = BilinearForm::symmetric(Matrix::from_i64(f, &[&[1, 2, 0], &[2, 0, 1], &[0, 1, 3]])).unwrap();
            prop_assert_eq!(g.perp(&a.sum(&b).unwrap()).unwrap(), g.perp(&a).unwrap().intersect(&g.perp(&b).unwrap()).unwrap());
            prop_assert_eq!(g.perp(&a.intersect(&b).unwrap()).unwrap(), g.perp(&a).unwrap().sum(&g.perp(&b).unwrap()).unwrap());
            prop_assert_eq!(g.perp(&g.perp(&a).unwrap()).unwrap(), a.clone());
            prop_assert_eq!(g.perp(&a).unwrap().dim(), 3 - a.dim());
        }

        #[test]
        fn adjoint_reverses_products(x in proptest::collection::vec(-3i64..=3, 8)) {
            let f = FieldSpec::Rationals;
            let g = BilinearForm::new(Matrix::from_i64(f, &[&[0, 1], &[-1, 0]]), FormKind::Antisymmetric).unwrap();
            let m = Matrix::from_i64(f, &[&x[0..2], &x[2..4]]);
            let n = Matrix::from_i64(f, &[&x[4..6], &x[6..8]]);
            let lhs = g.adjoint(&(&m * &n)).unwrap();
            let rhs = &g.adjoint(&n).unwrap() * &g.adjoint(&m).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
