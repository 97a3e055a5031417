//! Formal curvature tensors, the algebras they generate, and the
//! vanishing results for metric decompositions.

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::form::{is_reflexive_pair, BilinearForm, FormKind, Isotropy};
use crate::matrix::Matrix;
use crate::report::{expect, expect_matrix_eq, TheoremReport, Witness};
use crate::representation::{
    leaves_invariant, lie_closure, weakly_irreducible_oracle, MatrixLieAlgebra, OracleBounds,
    OracleVerdict,
};
use crate::subspace::Subspace;
use crate::twosum::{projector_onto, TwoSumDecomposition};

/// Coefficients `c[i][j][k][l]` with `R(e_i, e_j) e_k = Σ_l c[i][j][k][l] e_l`,
/// antisymmetric in `(i, j)` and satisfying the first Bianchi identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CurvatureTensor {
    field: FieldSpec,
    dim: usize,
    coeffs: Vec<Scalar>,
}

fn idx(n: usize, i: usize, j: usize, k: usize, l: usize) -> usize {
    ((i * n + j) * n + k) * n + l
}

fn check_antisymmetry(n: usize, coeffs: &[Scalar]) -> Result<()> {
    for i in 0..n {
        for j in i..n {
            for k in 0..n {
                for l in 0..n {
                    let a = &coeffs[idx(n, i, j, k, l)];
                    let b = &coeffs[idx(n, j, i, k, l)];
                    if !(a + b).is_zero() {
                        return Err(Error::AntisymmetryViolated { i, j });
                    }
                }
            }
        }
    }
    Ok(())
}

/// The cyclic sum vanishes on every basis triple. Errors when the array is
/// not antisymmetric in its first two indices.
pub fn bianchi_check(n: usize, coeffs: &[Scalar]) -> Result<bool> {
    if coeffs.len() != n.pow(4) {
        return Err(Error::DimensionMismatch {
            expected: n.pow(4),
            found: coeffs.len(),
        });
    }
    check_antisymmetry(n, coeffs)?;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let s = &(&coeffs[idx(n, i, j, k, l)] + &coeffs[idx(n, j, k, i, l)])
                        + &coeffs[idx(n, k, i, j, l)];
                    if !s.is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

impl CurvatureTensor {
    pub fn new(field: FieldSpec, n: usize, coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.iter().any(|c| c.field() != field) {
            return Err(Error::FieldMismatch);
        }
        if !bianchi_check(n, &coeffs)? {
            return Err(Error::Precondition("first Bianchi identity fails".into()));
        }
        Ok(CurvatureTensor {
            field,
            dim: n,
            coeffs,
        })
    }

    pub fn zero(field: FieldSpec, n: usize) -> Self {
        CurvatureTensor {
            field,
            dim: n,
            coeffs: vec![field.zero(); n.pow(4)],
        }
    }

    /// A tensor on a plane determined by `R(e1, e2) = a`.
    pub fn on_plane(a: &Matrix) -> Result<Self> {
        if a.rows() != 2 || a.cols() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: a.rows(),
            });
        }
        let f = a.field();
        let mut coeffs = vec![f.zero(); 16];
        for k in 0..2 {
            for l in 0..2 {
                coeffs[idx(2, 0, 1, k, l)] = a.get(l, k).clone();
                coeffs[idx(2, 1, 0, k, l)] = -a.get(l, k);
            }
        }
        CurvatureTensor::new(f, 2, coeffs)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize, l: usize) -> &Scalar {
        &self.coeffs[idx(self.dim, i, j, k, l)]
    }

    /// The endomorphism `R(e_i, e_j)`.
    pub fn endo(&self, i: usize, j: usize) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(self.field, n, n);
        for k in 0..n {
            for l in 0..n {
                m.set(l, k, self.coeff(i, j, k, l).clone());
            }
        }
        m
    }

    /// `R(x, y)` for coordinate vectors `x`, `y`.
    pub fn evaluate(&self, x: &[Scalar], y: &[Scalar]) -> Result<Matrix> {
        let n = self.dim;
        for v in [x, y] {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
        }
        let mut out = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                if i == j || x[i].is_zero() || y[j].is_zero() {
                    continue;
                }
                out = &out + &self.endo(i, j).scale(&(&x[i] * &y[j]));
            }
        }
        Ok(out)
    }

    fn endos(&self) -> impl Iterator<Item = Matrix> + '_ {
        let n = self.dim;
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| self.endo(i, j)))
    }
}

impl Serialize for CurvatureTensor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

/// Lie algebra generated by every `R(e_i, e_j)` of every tensor.
pub fn berger_algebra(
    field: FieldSpec,
    n: usize,
    tensors: &[CurvatureTensor],
) -> Result<MatrixLieAlgebra> {
    let mut gens = Vec::new();
    for t in tensors {
        if t.dim != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: t.dim,
            });
        }
        if t.field != field {
            return Err(Error::FieldMismatch);
        }
        gens.extend(t.endos().filter(|m| !m.is_zero()));
    }
    lie_closure(field, n, &gens)
}

/// Every `R(e_i, e_j)` lies in the span of the algebra.
pub fn matches(r: &CurvatureTensor, alg: &MatrixLieAlgebra) -> bool {
    r.dim == alg.ambient_dim() && r.endos().all(|m| alg.contains(&m))
}

fn check_parts(parts: &[&Subspace]) -> Result<()> {
    if !parts.is_empty() && !Subspace::is_direct_sum(parts)? {
        return Err(Error::Precondition("parts do not form a direct sum of E".into()));
    }
    Ok(())
}

/// Basis of all tensors with `R(x,y)` preserving every part and, with a
/// form, skew for it.
pub fn curvature_solution_space(
    field: FieldSpec,
    n: usize,
    parts: &[&Subspace],
    form: Option<&BilinearForm>,
) -> Result<Vec<CurvatureTensor>> {
    check_parts(parts)?;
    for p in parts {
        if p.ambient_dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: p.ambient_dim(),
            });
        }
    }
    // unknowns: u[p][k][l] for pairs p = (i < j)
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let pair_index = |i: usize, j: usize| -> Option<(usize, bool)> {
        if i == j {
            return None;
        }
        let (a, b, neg) = if i < j { (i, j, false) } else { (j, i, true) };
        let p = pairs.iter().position(|&q| q == (a, b)).unwrap();
        Some((p, neg))
    };
    let nn = n * n;
    let unknowns = pairs.len() * nn;
    let var = |p: usize, k: usize, l: usize| p * nn + k * n + l;
    let zero_row = || vec![field.zero(); unknowns];
    let one = field.one();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();

    // c[i][j][k][l] + c[j][k][i][l] + c[k][i][j][l] = 0 for i < j < k
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in 0..n {
                    let mut row = zero_row();
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        let (p, neg) = pair_index(a, b).unwrap();
                        let v = var(p, c, l);
                        row[v] = if neg { &row[v] - &one } else { &row[v] + &one };
                    }
                    rows.push(row);
                }
            }
        }
    }
    for part in parts {
        let ann = part.annihilator();
        for p in 0..pairs.len() {
            for u in ann.vectors() {
                for b in part.vectors() {
                    // uᵀ M b with M[l][k] = u[p][k][l]
                    let mut row = zero_row();
                    for k in 0..n {
                        for l in 0..n {
                            row[var(p, k, l)] = &u[l] * &b[k];
                        }
                    }
                    rows.push(row);
                }
            }
        }
    }
    if let Some(form) = form {
        let g = form.gram();
        for p in 0..pairs.len() {
            // (G M + Mᵀ G)[r][s] = Σ_t G[r][t] M[t][s] + M[t][r] G[t][s]
            for r in 0..n {
                for s in 0..n {
                    let mut row = zero_row();
                    for t in 0..n {
                        let v = var(p, s, t);
                        row[v] = &row[v] + g.get(r, t);
                        let v = var(p, r, t);
                        row[v] = &row[v] + g.get(t, s);
                    }
                    rows.push(row);
                }
            }
        }
    }
    let kernel = if rows.is_empty() {
        Matrix::identity(field, unknowns)
    } else {
        Matrix::from_rows(field, unknowns, rows)?.kernel()
    };
    kernel
        .row_vecs()
        .map(|v| {
            let mut coeffs = vec![field.zero(); n.pow(4)];
            for (p, &(i, j)) in pairs.iter().enumerate() {
                for k in 0..n {
                    for l in 0..n {
                        let c = &v[var(p, k, l)];
                        coeffs[idx(n, i, j, k, l)] = c.clone();
                        coeffs[idx(n, j, i, k, l)] = -c;
                    }
                }
            }
            CurvatureTensor::new(field, n, coeffs)
        })
        .collect()
}

/// Random combination of a solution basis.
pub fn sample_tensor<R: Rng + ?Sized>(
    field: FieldSpec,
    n: usize,
    basis: &[CurvatureTensor],
    rng: &mut R,
) -> CurvatureTensor {
    let mut coeffs = vec![field.zero(); n.pow(4)];
    for t in basis {
        let c = field.random(rng);
        if c.is_zero() {
            continue;
        }
        for (acc, x) in coeffs.iter_mut().zip(&t.coeffs) {
            *acc = &*acc + &(&c * x);
        }
    }
    CurvatureTensor {
        field,
        dim: n,
        coeffs,
    }
}

fn tensor_algebra_preserves(r: &CurvatureTensor, parts: &[&Subspace]) -> Result<()> {
    for m in r.endos() {
        for p in parts {
            if !p.is_invariant_under(&m) {
                return Err(Error::Precondition(format!(
                    "curvature values do not preserve {p}"
                )));
            }
        }
    }
    Ok(())
}

/// `R(x,y)z = 0` for `x ∈ F_i`, `y ∈ F_j`, `z ∈ F_k` with `k ∉ {i, j}`.
pub fn verify_block_vanishing(r: &CurvatureTensor, parts: &[&Subspace]) -> Result<TheoremReport> {
    check_parts(parts)?;
    tensor_algebra_preserves(r, parts)?;
    let mut rep = TheoremReport::new("curvature vanishes across three blocks");
    let m = parts.len();
    let mut result = Ok(());
    'all: for i in 0..m {
        for j in 0..m {
            for k in (0..m).filter(|&k| k != i && k != j) {
                for x in parts[i].vectors() {
                    for y in parts[j].vectors() {
                        let e = r.evaluate(x, y)?;
                        for z in parts[k].vectors() {
                            if e.mul_vec(z).iter().any(|c| !c.is_zero()) {
                                result = Err(Witness::text(
                                    None,
                                    format!("R(x,y)z ≠ 0 for parts {i}, {j}, {k}"),
                                ));
                                break 'all;
                            }
                        }
                    }
                }
            }
        }
    }
    rep.check("block-vanishing", "k ∉ {i, j} ⇒ R(F_i, F_j) F_k = 0", result);
    Ok(rep)
}

/// For every basis element `a` and part `P`, `a` restricted to `P` and
/// extended by zero lies in the algebra.
pub fn exterior_product_check(alg: &MatrixLieAlgebra, parts: &[&Subspace]) -> Result<bool> {
    check_parts(parts)?;
    for p in parts {
        if !leaves_invariant(alg, p) {
            return Err(Error::Precondition(format!("{p} is not invariant")));
        }
    }
    let projections: Vec<Matrix> = (0..parts.len())
        .map(|k| {
            let others: Vec<&Subspace> = parts
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != k)
                .map(|(_, p)| *p)
                .collect();
            let rest = if others.is_empty() {
                Subspace::zero(parts[k].field(), parts[k].ambient_dim())
            } else {
                Subspace::sum_all(&others).unwrap()
            };
            projector_onto(parts[k], &rest).unwrap()
        })
        .collect();
    Ok(alg
        .basis()
        .iter()
        .all(|a| projections.iter().all(|pi| alg.contains(&(a * pi)))))
}

/// `⟨R(x,y)z, t⟩ = ⟨R(z,t)x, y⟩` on every basis quadruple.
pub fn verify_pair_symmetry(form: &BilinearForm, r: &CurvatureTensor) -> Result<bool> {
    let n = r.dim;
    if form.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: form.dim(),
            found: n,
        });
    }
    let endos: Vec<Vec<Matrix>> = (0..n)
        .map(|i| (0..n).map(|j| r.endo(i, j)).collect())
        .collect();
    for row in &endos {
        for m in row {
            if !form.is_skew_adjoint(m) {
                return Err(Error::Precondition(
                    "curvature values are not skew for the form".into(),
                ));
            }
        }
    }
    // ⟨R(e_i,e_j)e_k, e_l⟩ = (G R_ij)[l][k]
    let g = form.gram();
    let lowered: Vec<Vec<Matrix>> = endos
        .iter()
        .map(|row| row.iter().map(|m| g * m).collect())
        .collect();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    if lowered[i][j].get(l, k) != lowered[k][l].get(j, i) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

struct MetricSetup {
    alg: MatrixLieAlgebra,
    theta: Matrix,
}

fn metric_setup(
    form: &BilinearForm,
    dec: &TwoSumDecomposition,
    tensors: &[CurvatureTensor],
) -> Result<MetricSetup> {
    if form.kind() != FormKind::Symmetric {
        return Err(Error::Precondition("the form must be symmetric".into()));
    }
    if !is_reflexive_pair(form, dec) {
        return Err(Error::Precondition(
            "decomposition is not of the form (V1, V2, V1⊥, V2⊥)".into(),
        ));
    }
    let alg = berger_algebra(form.field(), form.dim(), tensors)?;
    for v in [dec.v1(), dec.v2()] {
        if !leaves_invariant(&alg, v) {
            return Err(Error::Precondition(format!("the algebra does not preserve {v}")));
        }
    }
    if !alg.basis().iter().all(|a| form.is_skew_adjoint(a)) {
        return Err(Error::Precondition("the algebra is not skew for the form".into()));
    }
    Ok(MetricSetup {
        alg,
        theta: dec.theta(),
    })
}

/// `𝔤 E ⊆ ker θ` and `𝔤 im θ = 0` for the algebra generated by `tensors`.
pub fn verify_metric_theorem(
    form: &BilinearForm,
    dec: &TwoSumDecomposition,
    tensors: &[CurvatureTensor],
) -> Result<TheoremReport> {
    let MetricSetup { alg, theta } = metric_setup(form, dec, tensors)?;
    let mut r = TheoremReport::new("curvature algebra lands in the kernel of θ");
    let zero = Matrix::zeros(form.field(), form.dim(), form.dim());

    r.check(
        "pair-symmetry",
        "⟨R(x,y)z, t⟩ = ⟨R(z,t)x, y⟩",
        tensors.iter().enumerate().try_for_each(|(i, t)| {
            expect(verify_pair_symmetry(form, t).unwrap(), Some(i), || {
                format!("tensor {i} fails pair symmetry")
            })
        }),
    );
    r.check(
        "algebra-into-kernel",
        "𝔤E ⊆ ker θ",
        alg.basis()
            .iter()
            .try_for_each(|a| expect_matrix_eq(None, &(&theta * a), &zero)),
    );
    r.check(
        "algebra-kills-image",
        "𝔤 im θ = {0}",
        alg.basis()
            .iter()
            .try_for_each(|a| expect_matrix_eq(None, &(a * &theta), &zero)),
    );
    let split = dec.canonical_split();
    if split.f_e.is_full() {
        r.check(
            "flat-on-summands",
            "R(x,y) = 0 for x, y ∈ V1 and for x, y ∈ V2",
            tensors.iter().try_for_each(|t| {
                for v in [dec.v1(), dec.v2()] {
                    for x in v.vectors() {
                        for y in v.vectors() {
                            let e = t.evaluate(x, y).unwrap();
                            expect_matrix_eq(None, &e, &zero)?;
                        }
                    }
                }
                Ok(())
            }),
        );
    } else {
        r.inapplicable(
            "flat-on-summands",
            "R(x,y) = 0 for x, y ∈ V1 and for x, y ∈ V2",
            "E ≠ F_e",
        );
    }
    let nonzero: Vec<&Subspace> = split.parts().into_iter().filter(|p| !p.is_zero()).collect();
    r.check(
        "exterior-product",
        "𝔤 decomposes along F_e ⊕ F_τ ⊕ F̃",
        expect(exterior_product_check(&alg, &nonzero)?, None, || {
            "a block restriction leaves the algebra".into()
        }),
    );
    r.check(
        "block-vanishing",
        "R(F_i, F_j) F_k = 0 for k ∉ {i, j}",
        tensors.iter().try_for_each(|t| {
            let rep = verify_block_vanishing(t, &nonzero).unwrap();
            expect(rep.all_passed(), None, || "curvature mixes three blocks".into())
        }),
    );
    r.annotate(format!("algebra dimension {}", alg.dim()));
    Ok(r)
}

/// `θ² = 0` for indecomposable metric representations with a degenerate
/// summand. Indecomposable here means no proper nonzero invariant
/// nondegenerate subspace, decided by exhaustive search, or asserted.
pub fn verify_theta2_corollary(
    form: &BilinearForm,
    dec: &TwoSumDecomposition,
    tensors: &[CurvatureTensor],
    bounds: OracleBounds,
    assert_indecomposable: bool,
) -> Result<TheoremReport> {
    let MetricSetup { alg, theta } = metric_setup(form, dec, tensors)?;
    let mut r = TheoremReport::new("θ² = 0 for indecomposable metric representations");
    const TAG: &str = "θ² = 0";
    let degenerate = [dec.v1(), dec.v2()]
        .iter()
        .any(|v| form.isotropy(v).unwrap() != Isotropy::Nondegenerate);
    if !degenerate {
        r.inapplicable("theta-squared", TAG, "V1 and V2 are both nondegenerate");
        return Ok(r);
    }
    let how = match weakly_irreducible_oracle(form, &alg, bounds) {
        OracleVerdict::No { witness } => {
            r.inapplicable_with(
                "theta-squared",
                TAG,
                "decomposable: invariant nondegenerate subspace found",
                Witness::Subspace { subspace: witness },
            );
            return Ok(r);
        }
        OracleVerdict::Infeasible { reason } if !assert_indecomposable => {
            r.inapplicable("theta-squared", TAG, format!("oracle infeasible: {reason}"));
            return Ok(r);
        }
        OracleVerdict::Infeasible { .. } => "asserted by the caller",
        OracleVerdict::Yes => "confirmed by exhaustive search",
    };
    let note = format!(
        "indecomposable ({how}): no proper nonzero invariant nondegenerate subspace"
    );
    r.check(
        "e-equals-fe",
        "E = F_e",
        expect(dec.canonical_split().f_e.is_full(), None, || "E ≠ F_e".into()),
    );
    let zero = Matrix::zeros(form.field(), form.dim(), form.dim());
    r.check("theta-squared", TAG, expect_matrix_eq(None, &(&theta * &theta), &zero));
    r.annotate(note);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn bianchi_examples() {
        let f = q();
        assert!(bianchi_check(3, &CurvatureTensor::zero(f, 3).coeffs).unwrap());
        let t = CurvatureTensor::on_plane(&Matrix::from_i64(f, &[&[1, 2], &[3, 4]])).unwrap();
        assert!(bianchi_check(2, t.coeffs()).unwrap());
        assert_eq!(t.endo(0, 1), Matrix::from_i64(f, &[&[1, 2], &[3, 4]]));
        // perturb one coefficient of a valid tensor
        let basis = curvature_solution_space(f, 3, &[], None).unwrap();
        let mut c = basis[0].coeffs.clone();
        let one = f.one();
        c[idx(3, 0, 1, 2, 0)] = &c[idx(3, 0, 1, 2, 0)] + &one;
        c[idx(3, 1, 0, 2, 0)] = &c[idx(3, 1, 0, 2, 0)] - &one;
        assert!(!bianchi_check(3, &c).unwrap());
        c[idx(3, 1, 0, 2, 0)] = f.zero();
        assert!(matches!(
            bianchi_check(3, &c),
            Err(Error::AntisymmetryViolated { i: 0, j: 1 })
        ));
    }

    #[test]
    fn evaluate_is_bilinear_and_alternating() {
        let f = q();
        let basis = curvature_solution_space(f, 3, &[], None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let t = sample_tensor(f, 3, &basis, &mut rng);
        let v = |a: &[i64]| a.iter().map(|&x| f.from_i64(x)).collect::<Vec<_>>();
        let (x, x2, y) = (v(&[1, 2, 0]), v(&[0, -1, 3]), v(&[2, 0, 1]));
        assert!(t.evaluate(&x, &x).unwrap().is_zero());
        let sum: Vec<Scalar> = x.iter().zip(&x2).map(|(a, b)| a + b).collect();
        assert_eq!(
            t.evaluate(&sum, &y).unwrap(),
            &t.evaluate(&x, &y).unwrap() + &t.evaluate(&x2, &y).unwrap()
        );
        assert!(CurvatureTensor::zero(f, 3).evaluate(&x, &y).unwrap().is_zero());
    }

    #[test]
    fn berger_examples() {
        let f = q();
        assert!(berger_algebra(f, 2, &[CurvatureTensor::zero(f, 2)]).unwrap().is_zero());
        assert!(berger_algebra(f, 2, &[]).unwrap().is_zero());
        let t = CurvatureTensor::on_plane(&Matrix::from_i64(f, &[&[1, 0], &[0, -1]])).unwrap();
        let alg = berger_algebra(f, 2, std::slice::from_ref(&t)).unwrap();
        assert_eq!(alg.dim(), 1);
        assert!(matches(&t, &alg));
        let other = CurvatureTensor::on_plane(&Matrix::from_i64(f, &[&[0, 1], &[0, 0]])).unwrap();
        assert!(!matches(&other, &alg));
    }

    #[test]
    fn solution_space_dimensions() {
        let f = q();
        assert_eq!(curvature_solution_space(f, 2, &[], None).unwrap().len(), 4);
        let h = BilinearForm::hyperbolic(f, 1);
        let e1 = Subspace::coordinate_line(f, 2, 0);
        let e2 = Subspace::coordinate_line(f, 2, 1);
        let basis = curvature_solution_space(f, 2, &[&e1, &e2], Some(&h)).unwrap();
        assert_eq!(basis.len(), 1);
        let alg = berger_algebra(f, 2, &basis).unwrap();
        assert!(alg.contains(&Matrix::from_i64(f, &[&[1, 0], &[0, -1]])));
        // dim 3 with no constraints: 3 pairs × 9 entries minus 3 Bianchi rows
        assert_eq!(curvature_solution_space(f, 3, &[], None).unwrap().len(), 24);
        assert!(curvature_solution_space(f, 2, &[&e1, &e1], None).is_err());
    }

    #[test]
    fn block_vanishing_examples() {
        let f = FieldSpec::Prime(5);
        let lines: Vec<Subspace> = (0..3).map(|i| Subspace::coordinate_line(f, 3, i)).collect();
        let parts: Vec<&Subspace> = lines.iter().collect();
        let basis = curvature_solution_space(f, 3, &parts, None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..5 {
            let t = sample_tensor(f, 3, &basis, &mut rng);
            assert!(verify_block_vanishing(&t, &parts).unwrap().all_passed());
        }
        let two = [&lines[0], &lines[1].sum(&lines[2]).unwrap()];
        let two_refs: Vec<&Subspace> = two.to_vec();
        let basis = curvature_solution_space(f, 3, &two_refs, None).unwrap();
        let t = sample_tensor(f, 3, &basis, &mut rng);
        assert!(verify_block_vanishing(&t, &two_refs).unwrap().all_passed());
        // a tensor that moves e1 into e2 does not preserve the lines
        let free = curvature_solution_space(f, 3, &[], None).unwrap();
        let bad = free
            .iter()
            .find(|t| !lines[0].is_invariant_under(&t.endo(0, 1)))
            .unwrap();
        assert!(verify_block_vanishing(bad, &parts).is_err());
    }

    #[test]
    fn exterior_product_examples() {
        let f = q();
        let e1 = Subspace::coordinate_line(f, 2, 0);
        let e2 = Subspace::coordinate_line(f, 2, 1);
        assert!(exterior_product_check(&MatrixLieAlgebra::zero(f, 2), &[&e1, &e2]).unwrap());
        let alg = lie_closure(f, 2, &[Matrix::from_i64(f, &[&[1, 0], &[0, -1]])]).unwrap();
        assert!(!exterior_product_check(&alg, &[&e1, &e2]).unwrap());
    }

    #[test]
    fn pair_symmetry_examples() {
        let f = q();
        let h = BilinearForm::hyperbolic(f, 1);
        assert!(verify_pair_symmetry(&h, &CurvatureTensor::zero(f, 2)).unwrap());
        let t = CurvatureTensor::on_plane(&Matrix::from_i64(f, &[&[1, 0], &[0, -1]])).unwrap();
        assert!(verify_pair_symmetry(&h, &t).unwrap());
        let bad = CurvatureTensor::on_plane(&Matrix::identity(f, 2)).unwrap();
        assert!(verify_pair_symmetry(&h, &bad).is_err());
    }

    #[test]
    fn metric_theorem_on_aligned_plane() {
        let f = q();
        let h = BilinearForm::hyperbolic(f, 1);
        let dec = crate::twosum::fixtures::aligned(f);
        let r = verify_metric_theorem(&h, &dec, &[CurvatureTensor::zero(f, 2)]).unwrap();
        assert!(r.all_passed(), "{r}");
        let t = CurvatureTensor::on_plane(&Matrix::from_i64(f, &[&[1, 0], &[0, -1]])).unwrap();
        let r = verify_metric_theorem(&h, &dec, std::slice::from_ref(&t)).unwrap();
        assert!(r.all_passed(), "{r}");
        let c = verify_theta2_corollary(&h, &dec, &[t], OracleBounds::default(), false).unwrap();
        // over the rationals the oracle cannot decide
        assert_eq!(c.status_of("theta-squared"), Some(crate::report::Status::Inapplicable));
    }

    #[test]
    fn corollary_on_gf3_plane() {
        let f = FieldSpec::Prime(3);
        let h = BilinearForm::hyperbolic(f, 1);
        let dec = crate::twosum::fixtures::aligned(f);
        let t = CurvatureTensor::on_plane(&Matrix::from_i64(f, &[&[1, 0], &[0, -1]])).unwrap();
        let r = verify_theta2_corollary(&h, &dec, std::slice::from_ref(&t), OracleBounds::default(), false)
            .unwrap();
        assert_eq!(r.status_of("theta-squared"), Some(crate::report::Status::Pass), "{r}");
        // the zero algebra leaves the anisotropic line <e1 + e2> invariant
        let r = verify_theta2_corollary(&h, &dec, &[], OracleBounds::default(), false).unwrap();
        let c = r.clause("theta-squared").unwrap();
        assert_eq!(c.status, crate::report::Status::Inapplicable);
        assert!(c.witness.is_some());
    }
}
