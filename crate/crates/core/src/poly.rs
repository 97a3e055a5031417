//! Univariate polynomials over a [`FieldSpec`] and invariant factors of
//! square matrices.

use std::fmt;

use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;

/// Coefficients from the constant term upward, with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: FieldSpec, mut coeffs: Vec<Scalar>) -> Poly {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: FieldSpec) -> Poly {
        Poly::new(field, Vec::new())
    }

    pub fn constant(c: Scalar) -> Poly {
        let field = c.field();
        Poly::new(field, vec![c])
    }

    /// `x − c`.
    pub fn linear(c: &Scalar) -> Poly {
        let field = c.field();
        Poly::new(field, vec![-c, field.one()])
    }

    pub fn x(field: FieldSpec) -> Poly {
        Poly::new(field, vec![field.zero(), field.one()])
    }

    pub fn from_i64(field: FieldSpec, coeffs: &[i64]) -> Poly {
        Poly::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inv().unwrap()),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = self.field.zero();
        let coeffs = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z))
            .collect();
        Poly::new(self.field, coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&-self.field.one()))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(self.field, out)
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let inv = d.leading().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap() * &inv;
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * dc);
            }
            quot[k] = c;
            rem.pop();
            while rem.last().is_some_and(Scalar::is_zero) {
                rem.pop();
            }
        }
        (Poly::new(self.field, quot), Poly::new(self.field, rem))
    }

    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.divrem(self).1.is_zero()
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    /// `p(m)` by Horner's rule.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let n = m.rows();
        self.coeffs.iter().rev().fold(Matrix::zeros(self.field, n, n), |acc, c| {
            &(&acc * m) + &Matrix::scalar_identity(self.field, n, c)
        })
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Invariant factors of `m` from the Smith form of `xI − m`, monic and of
/// positive degree, each dividing the next.
pub fn invariant_factors(m: &Matrix) -> Vec<Poly> {
    assert!(m.is_square(), "invariant factors need a square matrix");
    let f = m.field();
    let n = m.rows();
    let mut a: Vec<Vec<Poly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = -m.get(i, j);
                    if i == j {
                        Poly::new(f, vec![c, f.one()])
                    } else {
                        Poly::constant(c)
                    }
                })
                .collect()
        })
        .collect();

    for t in 0..n {
        loop {
            // smallest-degree pivot in the trailing block
            let pivot = (t..n)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| !a[i][j].is_zero())
                .min_by_key(|&(i, j)| a[i][j].degree().unwrap());
            let Some((pi, pj)) = pivot else { break };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let mut clean = true;
            for i in t + 1..n {
                let (q, r) = a[i][t].divrem(&a[t][t]);
                if !q.is_zero() {
                    for j in t..n {
                        a[i][j] = a[i][j].sub(&q.mul(&a[t][j]));
                    }
                }
                clean &= r.is_zero();
            }
            for j in t + 1..n {
                let (q, r) = a[t][j].divrem(&a[t][t]);
                if !q.is_zero() {
                    for i in t..n {
                        a[i][j] = a[i][j].sub(&q.mul(&a[i][t]));
                    }
                }
                clean &= r.is_zero();
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..n)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !a[t][t].divides(&a[i][j]));
            match bad {
                None => break,
                Some((i, _)) => {
                    for j in t..n {
                        a[t][j] = a[t][j].add(&a[i][j]);
                    }
                }
            }
        }
    }
    (0..n)
        .map(|i| a[i][i].monic())
        .filter(|p| p.degree().is_some_and(|d| d > 0))
        .collect()
}

/// Product of the invariant factors.
pub fn characteristic_polynomial(m: &Matrix) -> Poly {
    invariant_factors(m)
        .iter()
        .fold(Poly::constant(m.field().one()), |acc, p| acc.mul(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn display() {
        let f = q();
        assert_eq!(Poly::from_i64(f, &[-2, 1]).to_string(), "x - 2");
        assert_eq!(Poly::from_i64(f, &[1, 0, 1]).to_string(), "x^2 + 1");
        assert_eq!(Poly::from_i64(f, &[0, -3, 2]).to_string(), "2x^2 - 3x");
        assert_eq!(Poly::from_i64(f, &[5]).to_string(), "5");
        assert_eq!(Poly::zero(f).to_string(), "0");
    }

    #[test]
    fn division_example() {
        let f = q();
        // x^3 - 1 = (x - 1)(x^2 + x + 1)
        let (quot, rem) = Poly::from_i64(f, &[-1, 0, 0, 1]).divrem(&Poly::from_i64(f, &[-1, 1]));
        assert_eq!(quot, Poly::from_i64(f, &[1, 1, 1]));
        assert!(rem.is_zero());
        assert_eq!(
            Poly::from_i64(f, &[-1, 0, 1]).gcd(&Poly::from_i64(f, &[1, 2, 1])),
            Poly::from_i64(f, &[1, 1])
        );
    }

    #[test]
    fn invariant_factor_examples() {
        let f = q();
        assert!(invariant_factors(&Matrix::zeros(f, 0, 0)).is_empty());
        // scalar matrix 2I_3: three copies of x - 2
        let m = Matrix::scalar_identity(f, 3, &f.from_i64(2));
        assert_eq!(invariant_factors(&m), vec![Poly::from_i64(f, &[-2, 1]); 3]);
        // Jordan block of size 2 at 1 plus a 1x1 block at 1
        let m = Matrix::from_i64(f, &[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(
            invariant_factors(&m),
            vec![Poly::from_i64(f, &[-1, 1]), Poly::from_i64(f, &[1, -2, 1])]
        );
        // companion matrix of x^2 + 1 is cyclic
        let m = Matrix::from_i64(f, &[&[0, -1], &[1, 0]]);
        assert_eq!(invariant_factors(&m), vec![Poly::from_i64(f, &[1, 0, 1])]);
    }

    #[test]
    fn invariant_factors_over_gf5() {
        let f = FieldSpec::Prime(5);
        let m = Matrix::from_i64(f, &[&[2, 0], &[0, 3]]);
        // x^2 - 5x + 6 = x^2 + 1 mod 5
        assert_eq!(invariant_factors(&m), vec![Poly::from_i64(f, &[1, 0, 1])]);
    }

    fn small_matrix() -> impl Strategy<Value = Matrix> {
        (1usize..5).prop_flat_map(|n| {
            proptest::collection::vec(-3i64..=3, n * n).prop_map(move |v| {
                let rows: Vec<&[i64]> = v.chunks(n).collect();
                Matrix::from_i64(FieldSpec::Rationals, &rows)
            })
        })
    }

    proptest! {
        #[test]
        fn factors_chain_and_annihilate(m in small_matrix()) {
            let fs = invariant_factors(&m);
            let total: usize = fs.iter().map(|p| p.degree().unwrap()).sum();
            prop_assert_eq!(total, m.rows());
            for w in fs.windows(2) {
                prop_assert!(w[0].divides(&w[1]));
            }
            // the last factor is the minimal polynomial
            prop_assert!(fs.last().unwrap().eval_matrix(&m).is_zero());
            // Cayley-Hamilton via the determinant at a few points
            let chi = characteristic_polynomial(&m);
            for t in -2i64..=2 {
                let x = FieldSpec::Rationals.from_i64(t);
                let shifted = &Matrix::scalar_identity(FieldSpec::Rationals, m.rows(), &x) - &m;
                prop_assert_eq!(chi.eval(&x), shifted.det());
            }
        }
    }
}
