//! Seeded random instances for fuzzing and for the command-line generator.

use rand::Rng;

use crate::curvature::{curvature_solution_space, sample_tensor, CurvatureTensor};
use crate::error::Result;
use crate::field::{FieldSpec, Scalar};
use crate::form::{reflexive_decomposition, BilinearForm};
use crate::matrix::Matrix;
use crate::representation::{invariance_algebra, MatrixLieAlgebra};
use crate::subspace::Subspace;
use crate::twosum::TwoSumDecomposition;

const MAX_TRIES: usize = 256;

pub fn random_matrix<R: Rng + ?Sized>(field: FieldSpec, rows: usize, cols: usize, rng: &mut R) -> Matrix {
    let data = (0..rows * cols).map(|_| field.random(rng)).collect();
    Matrix::from_flat(field, rows, cols, data)
}

pub fn random_invertible<R: Rng + ?Sized>(field: FieldSpec, n: usize, rng: &mut R) -> Matrix {
    loop {
        let m = random_matrix(field, n, n, rng);
        if !m.det().is_zero() {
            return m;
        }
    }
}

fn random_vector<R: Rng + ?Sized>(field: FieldSpec, n: usize, rng: &mut R) -> Vec<Scalar> {
    (0..n).map(|_| field.random(rng)).collect()
}

/// Random subspace of exactly the given dimension.
pub fn random_subspace<R: Rng + ?Sized>(field: FieldSpec, n: usize, dim: usize, rng: &mut R) -> Subspace {
    extend_randomly(&Subspace::zero(field, n), dim, rng)
}

/// Adds random vectors to `s` until it reaches `dim`.
fn extend_randomly<R: Rng + ?Sized>(s: &Subspace, dim: usize, rng: &mut R) -> Subspace {
    let (field, n) = (s.field(), s.ambient_dim());
    let mut cur = s.clone();
    while cur.dim() < dim {
        let v = random_vector(field, n, rng);
        if !cur.contains_vector(&v) {
            cur = cur.sum(&Subspace::span(field, n, &[v]).unwrap()).unwrap();
        }
    }
    cur
}

/// Random complement of `v`.
pub fn random_complement<R: Rng + ?Sized>(v: &Subspace, rng: &mut R) -> Subspace {
    let (field, n) = (v.field(), v.ambient_dim());
    let mut basis: Vec<Vec<Scalar>> = Vec::new();
    let mut cur = v.clone();
    while !cur.is_full() {
        let x = random_vector(field, n, rng);
        if !cur.contains_vector(&x) {
            let line = Subspace::span(field, n, std::slice::from_ref(&x)).unwrap();
            cur = cur.sum(&line).unwrap();
            basis.push(x);
        }
    }
    Subspace::span(field, n, &basis).unwrap()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockKind {
    /// `W_i` close to `V_i`.
    Aligned,
    /// `W_i` close to `V_{3-i}`.
    Swapped,
    /// Every `V_i ∩ W_j` is zero.
    Generic,
}

/// Block sizes and kinds summing to `n`. Generic blocks have even size.
pub fn random_profile<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<(BlockKind, usize)> {
    let mut out = Vec::new();
    let mut left = n;
    while left > 0 {
        let size = rng.random_range(1..=left.min(4));
        let kind = match rng.random_range(0..3) {
            0 => BlockKind::Aligned,
            1 => BlockKind::Swapped,
            _ if size % 2 == 0 => BlockKind::Generic,
            _ => BlockKind::Aligned,
        };
        out.push((kind, size));
        left -= size;
    }
    out
}

fn nilpotent(m: &Matrix) -> bool {
    m.pow(m.rows() as u32).is_zero()
}

/// Maps `N: A → B` and `M: B → A` with `MN` nilpotent, so that the graphs
/// of `N` over `A` and `M` over `B` are complementary.
fn nilpotent_pair<R: Rng + ?Sized>(
    field: FieldSpec,
    a: usize,
    b: usize,
    rng: &mut R,
) -> (Matrix, Matrix) {
    for _ in 0..MAX_TRIES {
        let n = random_matrix(field, b, a, rng);
        let m = random_matrix(field, a, b, rng);
        if nilpotent(&(&m * &n)) {
            return (n, m);
        }
    }
    (random_matrix(field, b, a, rng), Matrix::zeros(field, a, b))
}

fn invertible_pair<R: Rng + ?Sized>(field: FieldSpec, k: usize, rng: &mut R) -> (Matrix, Matrix) {
    loop {
        let n = random_invertible(field, k, rng);
        let m = random_invertible(field, k, rng);
        let defect = &Matrix::identity(field, k) - &(&m * &n);
        if !defect.det().is_zero() {
            return (n, m);
        }
    }
}

/// Rows `(x, N x)` for the standard basis of a block split as `A ⊕ B`, placed
/// at `offset` inside `K^total`.
fn graph(
    field: FieldSpec,
    total: usize,
    offset: usize,
    domain: (usize, usize),
    target: (usize, usize),
    map: &Matrix,
) -> Vec<Vec<Scalar>> {
    (0..domain.1)
        .map(|c| {
            let mut v = vec![field.zero(); total];
            v[offset + domain.0 + c] = field.one();
            for r in 0..target.1 {
                v[offset + target.0 + r] = map.get(r, c).clone();
            }
            v
        })
        .collect()
}

/// Random two-sum decomposition of `K^n`: a block profile in standard
/// coordinates, then a random change of basis.
pub fn random_two_sum<R: Rng + ?Sized>(field: FieldSpec, n: usize, rng: &mut R) -> TwoSumDecomposition {
    let profile = random_profile(n, rng);
    let mut rows: [Vec<Vec<Scalar>>; 4] = Default::default();
    let mut offset = 0;
    for (kind, size) in profile {
        let a = match kind {
            BlockKind::Generic => size / 2,
            _ => rng.random_range(0..=size),
        };
        let b = size - a;
        let (first, second) = ((0, a), (a, b));
        let (nmap, mmap) = match kind {
            BlockKind::Generic => invertible_pair(field, a, rng),
            _ => nilpotent_pair(field, a, b, rng),
        };
        let v1 = graph(field, n, offset, first, second, &Matrix::zeros(field, b, a));
        let v2 = graph(field, n, offset, second, first, &Matrix::zeros(field, a, b));
        let near_v1 = graph(field, n, offset, first, second, &nmap);
        let near_v2 = graph(field, n, offset, second, first, &mmap);
        let (w1, w2) = match kind {
            BlockKind::Swapped => (near_v2, near_v1),
            _ => (near_v1, near_v2),
        };
        for (acc, part) in rows.iter_mut().zip([v1, v2, w1, w2]) {
            acc.extend(part);
        }
        offset += size;
    }
    let p = random_invertible(field, n, rng);
    let [v1, v2, w1, w2] =
        rows.map(|r| Subspace::span(field, n, &r).unwrap().image_under(&p));
    TwoSumDecomposition::new(v1, v2, w1, w2).expect("block profile is complementary")
}

pub fn random_symmetric_form<R: Rng + ?Sized>(field: FieldSpec, n: usize, rng: &mut R) -> BilinearForm {
    loop {
        let mut g = Matrix::zeros(field, n, n);
        for i in 0..n {
            for j in i..n {
                let x = field.random(rng);
                g.set(i, j, x.clone());
                g.set(j, i, x);
            }
        }
        if let Ok(form) = BilinearForm::symmetric(g) {
            return form;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReflexiveProfile {
    /// Random form, random `V1` of random dimension.
    Generic,
    /// Hyperbolic form in a random basis, `V1` totally isotropic.
    Isotropic,
}

#[derive(Debug, Clone)]
pub struct ReflexiveInstance {
    pub form: BilinearForm,
    pub decomposition: TwoSumDecomposition,
}

/// The form `(x, y) ↦ form(P x, P y)`.
fn pull_back(form: &BilinearForm, p: &Matrix) -> BilinearForm {
    let g = &(&p.transpose() * form.gram()) * p;
    BilinearForm::new(g, form.kind()).expect("congruent form stays nondegenerate")
}

pub fn random_reflexive<R: Rng + ?Sized>(
    field: FieldSpec,
    n: usize,
    profile: ReflexiveProfile,
    rng: &mut R,
) -> ReflexiveInstance {
    let (form, v1) = match profile {
        ReflexiveProfile::Generic => {
            let form = random_symmetric_form(field, n, rng);
            let k = rng.random_range(0..=n);
            (form, random_subspace(field, n, k, rng))
        }
        ReflexiveProfile::Isotropic => {
            let planes = n / 2;
            let mut g = Matrix::zeros(field, n, n);
            let model = BilinearForm::hyperbolic(field, planes);
            for i in 0..2 * planes {
                for j in 0..2 * planes {
                    g.set(i, j, model.gram().get(i, j).clone());
                }
            }
            if n % 2 == 1 {
                g.set(n - 1, n - 1, field.one());
            }
            let base = BilinearForm::symmetric(g).unwrap();
            // a random subset of the Lagrangian <e0, e2, ...>
            let k = rng.random_range(0..=planes);
            let lagrangian: Vec<Vec<Scalar>> = (0..planes)
                .map(|i| {
                    let mut v = vec![field.zero(); n];
                    v[2 * i] = field.one();
                    v
                })
                .collect();
            let lag = Subspace::span(field, n, &lagrangian).unwrap();
            let mut v1 = Subspace::zero(field, n);
            while v1.dim() < k {
                let coeffs: Vec<Scalar> = (0..planes).map(|_| field.random(rng)).collect();
                let v = lag.basis().transpose().mul_vec(&coeffs);
                if !v1.contains_vector(&v) {
                    v1 = v1.sum(&Subspace::span(field, n, &[v]).unwrap()).unwrap();
                }
            }
            let p = random_invertible(field, n, rng);
            let pinv = p.inverse().unwrap();
            (pull_back(&base, &p), v1.image_under(&pinv))
        }
    };
    let v2 = random_complement(&v1, rng);
    let (decomposition, _) =
        reflexive_decomposition(&form, &v1, Some(&v2)).expect("complement of V1");
    ReflexiveInstance {
        form,
        decomposition,
    }
}

/// Random element of the span of the algebra's basis.
pub fn random_element<R: Rng + ?Sized>(alg: &MatrixLieAlgebra, rng: &mut R) -> Matrix {
    let coeffs: Vec<Scalar> = (0..alg.dim()).map(|_| alg.field().random(rng)).collect();
    alg.combine(&coeffs)
}

/// Up to `count` random generators from the algebra preserving `V1`, `V2`
/// and skew for the form.
pub fn random_invariant_generators<R: Rng + ?Sized>(
    inst: &ReflexiveInstance,
    count: usize,
    rng: &mut R,
) -> Result<Vec<Matrix>> {
    let dec = &inst.decomposition;
    let alg = invariance_algebra(
        inst.form.field(),
        inst.form.dim(),
        &[dec.v1(), dec.v2()],
        Some(&inst.form),
    )?;
    Ok((0..count)
        .map(|_| random_element(&alg, rng))
        .filter(|m| !m.is_zero())
        .collect())
}

#[derive(Debug, Clone)]
pub struct CurvatureInstance {
    pub form: BilinearForm,
    pub decomposition: TwoSumDecomposition,
    pub tensors: Vec<CurvatureTensor>,
}

/// A reflexive instance with one or two tensors drawn from the space of
/// curvature tensors preserving `V1`, `V2` and skew for the form.
pub fn random_curvature<R: Rng + ?Sized>(field: FieldSpec, n: usize, rng: &mut R) -> Result<CurvatureInstance> {
    let profile = if rng.random_bool(0.5) {
        ReflexiveProfile::Isotropic
    } else {
        ReflexiveProfile::Generic
    };
    let inst = random_reflexive(field, n, profile, rng);
    let dec = &inst.decomposition;
    let basis = curvature_solution_space(field, n, &[dec.v1(), dec.v2()], Some(&inst.form))?;
    let count = rng.random_range(1..=2);
    let tensors = (0..count)
        .map(|_| sample_tensor(field, n, &basis, rng))
        .collect();
    Ok(CurvatureInstance {
        form: inst.form,
        decomposition: inst.decomposition,
        tensors,
    })
}
