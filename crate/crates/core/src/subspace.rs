//! Subspaces of `K^n` held in canonical reduced row echelon form.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;

/// A subspace of `K^n`. The basis rows are the nonzero rows of an RREF
/// matrix, so two subspaces are equal exactly when their bases are.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Matrix,
}

impl Subspace {
    /// The span of the rows of `m`, inside `K^{m.cols()}`.
    pub fn row_space(m: &Matrix) -> Subspace {
        let r = m.rref();
        let keep: Vec<usize> = (0..r.rank).collect();
        Subspace {
            basis: r.reduced.select_rows(&keep),
        }
    }

    pub fn span(field: FieldSpec, ambient: usize, vectors: &[Vec<Scalar>]) -> Result<Subspace> {
        let m = Matrix::from_rows(field, ambient, vectors.to_vec())?;
        Ok(Self::row_space(&m))
    }

    pub fn from_i64(field: FieldSpec, ambient: usize, vectors: &[&[i64]]) -> Subspace {
        if vectors.is_empty() {
            return Self::zero(field, ambient);
        }
        let m = Matrix::from_i64(field, vectors);
        assert_eq!(m.cols(), ambient);
        Self::row_space(&m)
    }

    pub fn zero(field: FieldSpec, ambient: usize) -> Subspace {
        Subspace {
            basis: Matrix::zeros(field, 0, ambient),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Subspace {
        Subspace {
            basis: Matrix::identity(field, ambient),
        }
    }

    /// Span of the single vector `e_i`.
    pub fn coordinate_line(field: FieldSpec, ambient: usize, i: usize) -> Subspace {
        let mut m = Matrix::zeros(field, 1, ambient);
        m.set(0, i, field.one());
        Subspace { basis: m }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn vectors(&self) -> impl Iterator<Item = &[Scalar]> {
        self.basis.row_vecs()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    pub fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: other.ambient_dim(),
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        Ok(Self::row_space(&self.basis.vstack(&other.basis)))
    }

    /// `(a' + b')'`, computed through annihilators.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        if self.is_full() {
            return Ok(other.clone());
        }
        if other.is_full() {
            return Ok(self.clone());
        }
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    pub fn sum_all(parts: &[&Subspace]) -> Result<Subspace> {
        let (first, rest) = parts.split_first().ok_or(Error::Empty("subspace list"))?;
        rest.iter().try_fold((*first).clone(), |acc, s| acc.sum(s))
    }

    pub fn intersect_all(parts: &[&Subspace]) -> Result<Subspace> {
        let (first, rest) = parts.split_first().ok_or(Error::Empty("subspace list"))?;
        rest.iter().try_fold((*first).clone(), |acc, s| acc.intersect(s))
    }

    /// Coordinates of `x` in the stored basis, or `None` when `x` is outside.
    pub fn coordinates(&self, x: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(x.len(), self.ambient_dim());
        let pivots = self.pivots();
        let coords: Vec<Scalar> = pivots.iter().map(|&p| x[p].clone()).collect();
        let field = self.field();
        for c in 0..self.ambient_dim() {
            let mut v = field.zero();
            for (r, a) in coords.iter().enumerate() {
                if !a.is_zero() {
                    v = &v + &(a * self.basis.get(r, c));
                }
            }
            if v != x[c] {
                return None;
            }
        }
        Some(coords)
    }

    fn pivots(&self) -> Vec<usize> {
        self.vectors()
            .map(|row| row.iter().position(|v| !v.is_zero()).expect("no zero rows"))
            .collect()
    }

    pub fn contains_vector(&self, x: &[Scalar]) -> bool {
        self.coordinates(x).is_some()
    }

    /// `self ⊆ other`.
    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.check_compatible(other).expect("incompatible subspaces");
        self.dim() <= other.dim() && self.vectors().all(|v| other.contains_vector(v))
    }

    /// True iff the dimensions add up and the parts fill the ambient space.
    pub fn is_direct_sum(parts: &[&Subspace]) -> Result<bool> {
        let total = Self::sum_all(parts)?;
        let dims: usize = parts.iter().map(|p| p.dim()).sum();
        Ok(dims == total.dim() && total.is_full())
    }

    /// True iff the parts are independent (their sum is direct), without
    /// requiring them to fill the space.
    pub fn is_independent(parts: &[&Subspace]) -> Result<bool> {
        let total = Self::sum_all(parts)?;
        Ok(parts.iter().map(|p| p.dim()).sum::<usize>() == total.dim())
    }

    /// `V ∩ (E1 + E2) = (V ∩ E1) + (V ∩ E2)`.
    pub fn homogeneous(&self, e1: &Subspace, e2: &Subspace) -> Result<bool> {
        let lhs = self.intersect(&e1.sum(e2)?)?;
        let rhs = self.intersect(e1)?.sum(&self.intersect(e2)?)?;
        Ok(lhs == rhs)
    }

    /// `V + (E1 ∩ E2) = (V + E1) ∩ (V + E2)`.
    pub fn cohomogeneous(&self, e1: &Subspace, e2: &Subspace) -> Result<bool> {
        let lhs = self.sum(&e1.intersect(e2)?)?;
        let rhs = self.sum(e1)?.intersect(&self.sum(e2)?)?;
        Ok(lhs == rhs)
    }

    /// The annihilator in dual coordinates: `{u : u(x) = 0 for x in self}`.
    pub fn annihilator(&self) -> Subspace {
        Self::row_space(&self.basis.kernel())
    }

    /// `{m x : x in self}`.
    pub fn image_under(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient_dim());
        if self.is_zero() {
            return Subspace::zero(self.field(), m.rows());
        }
        Self::row_space(&(m * &self.basis.transpose()).transpose())
    }

    /// `{x : m x in self}`.
    pub fn preimage_under(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.rows(), self.ambient_dim());
        let ann = self.annihilator();
        if ann.is_zero() {
            return Subspace::full(self.field(), m.cols());
        }
        Self::row_space(&(ann.basis() * m).kernel())
    }

    /// True iff `m` maps the subspace into itself.
    pub fn is_invariant_under(&self, m: &Matrix) -> bool {
        self.vectors().all(|v| self.contains_vector(&m.mul_vec(v)))
    }

    /// The matrix of `m` restricted to this (invariant) subspace, in basis
    /// coordinates. `None` when the subspace is not invariant.
    pub fn restrict(&self, m: &Matrix) -> Option<Matrix> {
        let cols: Option<Vec<Vec<Scalar>>> = self
            .vectors()
            .map(|v| self.coordinates(&m.mul_vec(v)))
            .collect();
        Some(Matrix::from_columns(self.field(), self.dim(), &cols?))
    }

    /// Total order: by dimension, then lexicographically on basis entries.
    pub fn canonical_cmp(&self, other: &Subspace) -> Ordering {
        self.dim()
            .cmp(&other.dim())
            .then_with(|| self.basis.entries().cmp(other.basis.entries()))
    }

    /// Coordinates for `self / w`, where `w ⊆ self`.
    pub fn quotient_coords(&self, w: &Subspace) -> Result<Quotient> {
        self.check_compatible(w)?;
        if !w.is_subspace_of(self) {
            return Err(Error::NotContained);
        }
        let field = self.field();
        let du = self.dim();
        let wc_rows: Vec<Vec<Scalar>> = w
            .vectors()
            .map(|v| self.coordinates(v).expect("w inside u"))
            .collect();
        let wc = Matrix::from_rows(field, du, wc_rows)?.rref();
        let pivots = &wc.pivots;
        let free: Vec<usize> = (0..du).filter(|c| !pivots.contains(c)).collect();
        let dq = free.len();
        let mut section = Matrix::zeros(field, du, dq);
        let mut project = Matrix::zeros(field, dq, du);
        for (k, &n) in free.iter().enumerate() {
            section.set(n, k, field.one());
            project.set(k, n, field.one());
            for (r, &p) in pivots.iter().enumerate() {
                project.set(k, p, -wc.reduced.get(r, n));
            }
        }
        Ok(Quotient {
            top: self.clone(),
            bottom: w.clone(),
            section,
            project,
        })
    }

    /// Every subspace of `GF(p)^n` in canonical order.
    pub fn enumerate_all(field: FieldSpec, n: usize) -> Result<Vec<Subspace>> {
        let elems = field
            .elements()
            .ok_or_else(|| Error::Precondition("enumeration needs a finite field".into()))?;
        let mut out = Vec::new();
        for rank in 0..=n {
            let mut level = Vec::new();
            for pivots in combinations(n, rank) {
                // free slots: (row, col) with col > pivot(row) and col not a pivot
                let slots: Vec<(usize, usize)> = pivots
                    .iter()
                    .enumerate()
                    .flat_map(|(r, &p)| {
                        (p + 1..n)
                            .filter(|c| !pivots.contains(c))
                            .map(move |c| (r, c))
                            .collect::<Vec<_>>()
                    })
                    .collect();
                let mut digits = vec![0usize; slots.len()];
                loop {
                    let mut m = Matrix::zeros(field, rank, n);
                    for (r, &p) in pivots.iter().enumerate() {
                        m.set(r, p, field.one());
                    }
                    for (&(r, c), &d) in slots.iter().zip(&digits) {
                        m.set(r, c, elems[d].clone());
                    }
                    level.push(Subspace { basis: m });
                    if !increment(&mut digits, elems.len()) {
                        break;
                    }
                }
            }
            level.sort_by(|a, b| a.canonical_cmp(b));
            out.extend(level);
        }
        Ok(out)
    }
}

fn increment(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Coordinates on `top / bottom`. `section` maps quotient coordinates to
/// coordinates in `top`'s basis, `project` goes the other way.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub top: Subspace,
    pub bottom: Subspace,
    pub section: Matrix,
    pub project: Matrix,
}

impl Quotient {
    pub fn dim(&self) -> usize {
        self.project.rows()
    }

    /// Quotient coordinates of an ambient vector lying in `top`.
    pub fn vector_to_quotient(&self, x: &[Scalar]) -> Option<Vec<Scalar>> {
        let c = self.top.coordinates(x)?;
        Some(self.project.mul_vec(&c))
    }

    /// Image of `s` (with `bottom ⊆ s ⊆ top`) as a subspace of the quotient.
    pub fn to_quotient(&self, s: &Subspace) -> Result<Subspace> {
        if !s.is_subspace_of(&self.top) {
            return Err(Error::NotContained);
        }
        let field = self.top.field();
        let rows: Vec<Vec<Scalar>> = s
            .vectors()
            .map(|v| self.vector_to_quotient(v).expect("inside top"))
            .collect();
        if rows.is_empty() {
            return Ok(Subspace::zero(field, self.dim()));
        }
        Subspace::span(field, self.dim(), &rows)
    }

    /// Lifts quotient coordinates back to an ambient vector in `top`.
    pub fn lift(&self, q: &[Scalar]) -> Vec<Scalar> {
        let c = self.section.mul_vec(q);
        let field = self.top.field();
        let mut x = vec![field.zero(); self.top.ambient_dim()];
        for (a, row) in c.iter().zip(self.top.vectors()) {
            for (xi, b) in x.iter_mut().zip(row) {
                *xi = &*xi + &(a * b);
            }
        }
        x
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "{{0}}");
        }
        write!(f, "<")?;
        for (i, v) in self.vectors().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "(")?;
            for (j, x) in v.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        write!(f, ">")
    }
}

impl Serialize for Subspace {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.basis.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn line(f: FieldSpec, n: usize, i: usize) -> Subspace {
        Subspace::coordinate_line(f, n, i)
    }

    #[test]
    fn sum_examples() {
        let f = q();
        let s = line(f, 3, 0).sum(&line(f, 3, 1)).unwrap();
        assert_eq!(s, Subspace::from_i64(f, 3, &[&[1, 0, 0], &[0, 1, 0]]));
        let a = Subspace::from_i64(f, 3, &[&[1, 2, 3]]);
        assert_eq!(a.sum(&a).unwrap(), a);
        let d = Subspace::from_i64(f, 2, &[&[1, 1]]);
        assert!(line(f, 2, 0).sum(&d).unwrap().is_full());
    }

    #[test]
    fn intersect_examples() {
        let f = q();
        let a = Subspace::from_i64(f, 3, &[&[1, 0, 0], &[0, 1, 0]]);
        let b = Subspace::from_i64(f, 3, &[&[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(a.intersect(&b).unwrap(), line(f, 3, 1));
        assert_eq!(a.intersect(&a).unwrap(), a);
        assert!(a.intersect(&line(q(), 2, 0)).is_err());
        assert_eq!(
            a.intersect(&line(FieldSpec::Prime(3), 3, 0)),
            Err(Error::FieldMismatch)
        );
    }

    #[test]
    fn direct_sum_examples() {
        let f = q();
        assert!(Subspace::is_direct_sum(&[&line(f, 2, 0), &line(f, 2, 1)]).unwrap());
        assert!(!Subspace::is_direct_sum(&[&line(f, 2, 0), &line(f, 2, 0)]).unwrap());
        let d = Subspace::from_i64(f, 2, &[&[1, 1]]);
        assert!(Subspace::is_direct_sum(&[&line(f, 2, 0), &d]).unwrap());
        assert!(Subspace::is_direct_sum(&[]).is_err());
    }

    #[test]
    fn homogeneity_examples() {
        let f = q();
        let (e1, e2) = (line(f, 2, 0), line(f, 2, 1));
        assert!(e1.homogeneous(&e1, &e2).unwrap());
        let d = Subspace::from_i64(f, 2, &[&[1, 1]]);
        assert!(!d.homogeneous(&e1, &e2).unwrap());
        assert!(Subspace::zero(f, 2).cohomogeneous(&e1, &e2).unwrap());
        assert!(Subspace::full(f, 2).cohomogeneous(&e1, &d).unwrap());
    }

    #[test]
    fn annihilator_examples() {
        let f = q();
        assert!(Subspace::zero(f, 3).annihilator().is_full());
        assert!(Subspace::full(f, 3).annihilator().is_zero());
        assert_eq!(line(f, 2, 0).annihilator(), line(f, 2, 1));
    }

    #[test]
    fn quotient_examples() {
        let f = q();
        let e = Subspace::full(f, 2);
        let qt = e.quotient_coords(&Subspace::zero(f, 2)).unwrap();
        assert!(qt.section.is_identity());
        assert!(qt.project.is_identity());

        let u = Subspace::from_i64(f, 3, &[&[1, 0, 0], &[0, 1, 0]]);
        let w = line(f, 3, 0);
        let qt = u.quotient_coords(&w).unwrap();
        assert_eq!(qt.dim(), 1);
        assert!((&qt.project * &qt.section).is_identity());
        let e2 = [f.zero(), f.one(), f.zero()];
        assert_eq!(qt.vector_to_quotient(&e2).unwrap(), vec![f.one()]);
        assert_eq!(qt.lift(&[f.one()]), e2.to_vec());
        let e1 = [f.one(), f.zero(), f.zero()];
        assert_eq!(qt.vector_to_quotient(&e1).unwrap(), vec![f.zero()]);

        assert_eq!(
            w.quotient_coords(&u).unwrap_err(),
            Error::NotContained
        );
    }

    #[test]
    fn enumeration_counts_match_gaussian_binomials() {
        // subspaces of GF(3)^2: 1 + 4 + 1; of GF(3)^4: 1 + 40 + 130 + 40 + 1
        let f = FieldSpec::Prime(3);
        assert_eq!(Subspace::enumerate_all(f, 2).unwrap().len(), 6);
        let all = Subspace::enumerate_all(f, 4).unwrap();
        assert_eq!(all.len(), 212);
        let distinct: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), 212);
        for s in &all {
            assert_eq!(&Subspace::row_space(s.basis()), s);
        }
        assert!(Subspace::enumerate_all(q(), 2).is_err());
    }

    fn vectors_of(s: &Subspace, elems: &[Scalar]) -> std::collections::HashSet<Vec<Scalar>> {
        let n = s.ambient_dim();
        let f = s.field();
        let mut out = std::collections::HashSet::new();
        let k = s.dim();
        let mut digits = vec![0usize; k];
        loop {
            let mut v = vec![f.zero(); n];
            for (d, row) in digits.iter().zip(s.vectors()) {
                for (x, b) in v.iter_mut().zip(row) {
                    *x = &*x + &(&elems[*d] * b);
                }
            }
            out.insert(v);
            if !increment(&mut digits, elems.len()) {
                break;
            }
        }
        out
    }

    pub(crate) fn random_subspace(f: FieldSpec, n: usize, rng: &mut ChaCha8Rng) -> Subspace {
        let k = rng.random_range(0..=n);
        let rows: Vec<Vec<Scalar>> = (0..k)
            .map(|_| (0..n).map(|_| f.random(rng)).collect())
            .collect();
        if rows.is_empty() {
            return Subspace::zero(f, n);
        }
        Subspace::span(f, n, &rows).unwrap()
    }

    #[test]
    fn intersection_matches_brute_force_over_gf3() {
        let f = FieldSpec::Prime(3);
        let elems = f.elements().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let n = rng.random_range(1..=4);
            let a = random_subspace(f, n, &mut rng);
            let b = random_subspace(f, n, &mut rng);
            let va = vectors_of(&a, &elems);
            let vb = vectors_of(&b, &elems);
            let common: std::collections::HashSet<_> = va.intersection(&vb).cloned().collect();
            let i = a.intersect(&b).unwrap();
            assert_eq!(vectors_of(&i, &elems), common);
            assert_eq!(
                i.dim() + a.sum(&b).unwrap().dim(),
                a.dim() + b.dim()
            );
        }
    }

    proptest! {
        #[test]
        fn lattice_laws(seed in any::<u64>(), n in 1usize..5, p in prop::sample::select(vec![0u64, 3, 5])) {
            let f = if p == 0 { q() } else { FieldSpec::Prime(p) };
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let a = random_subspace(f, n, &mut rng);
            let b = random_subspace(f, n, &mut rng);
            let c0 = random_subspace(f, n, &mut rng);
            prop_assert_eq!(a.sum(&a.intersect(&b).unwrap()).unwrap(), a.clone());
            prop_assert_eq!(a.intersect(&a.sum(&b).unwrap()).unwrap(), a.clone());
            // modular law with c ⊆ a
            let c = c0.intersect(&a).unwrap();
            let lhs = a.intersect(&b.sum(&c).unwrap()).unwrap();
            let rhs = a.intersect(&b).unwrap().sum(&c).unwrap();
            prop_assert_eq!(lhs, rhs);
            let meet = a.intersect(&b).unwrap();
            let join = a.sum(&b).unwrap();
            prop_assert_eq!(meet.dim() + join.dim(), a.dim() + b.dim());
        }

        #[test]
        fn annihilator_is_an_order_reversing_involution(seed in any::<u64>(), n in 1usize..5) {
            let f = FieldSpec::Prime(5);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let a = random_subspace(f, n, &mut rng);
            let b = a.sum(&random_subspace(f, n, &mut rng)).unwrap();
            prop_assert_eq!(a.annihilator().annihilator(), a.clone());
            prop_assert_eq!(a.annihilator().dim(), n - a.dim());
            prop_assert!(b.annihilator().is_subspace_of(&a.annihilator()));
        }
    }
}
