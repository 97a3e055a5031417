//! Lattices of subspaces generated under sum and intersection.

use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::matrix::Matrix;
use crate::poly::{invariant_factors, Poly};
use crate::report::{expect, expect_eq, expect_sub, TheoremReport};
use crate::subspace::Subspace;
use crate::twosum::{CanonicalSplit, TwoSumDecomposition};

pub const DEFAULT_MAX_ELEMENTS: usize = 10_000;

/// How an element first entered the lattice. Indices refer to the final
/// canonical ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum Origin {
    Seed,
    Sum { left: usize, right: usize },
    Meet { left: usize, right: usize },
}

#[derive(Debug, Clone, Serialize)]
pub struct SubspaceLattice {
    /// Sorted by dimension, then by basis entries.
    pub elements: Vec<Subspace>,
    /// `(lower, upper)` pairs of the Hasse diagram.
    pub cover_edges: Vec<(usize, usize)>,
    /// Positions of the seeds, in the order they were given.
    pub generators: Vec<usize>,
    pub truncated: bool,
    pub origins: Vec<Origin>,
}

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Bits {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        if i / 64 >= self.0.len() {
            self.0.resize(i / 64 + 1, 0);
        }
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn get(&self, i: usize) -> bool {
        self.0.get(i / 64).is_some_and(|w| w >> (i % 64) & 1 == 1)
    }
}

/// Closes `seeds` under pairwise sum and intersection. Stops with
/// `truncated = true` once a new element would exceed `max_elements`.
pub fn closure(seeds: &[Subspace], max_elements: usize) -> Result<SubspaceLattice> {
    let first = seeds.first().ok_or(Error::Empty("seed list"))?;
    for s in seeds {
        first.check_compatible(s)?;
    }
    let mut elems: Vec<Subspace> = Vec::new();
    let mut index: HashMap<Subspace, usize> = HashMap::new();
    let mut origins: Vec<Origin> = Vec::new();
    let mut generators = Vec::new();
    for s in seeds {
        let k = *index.entry(s.clone()).or_insert_with(|| {
            elems.push(s.clone());
            origins.push(Origin::Seed);
            elems.len() - 1
        });
        generators.push(k);
    }
    if elems.len() > max_elements {
        return Err(Error::Precondition(format!(
            "{} distinct seeds exceed the cap of {max_elements}",
            elems.len()
        )));
    }

    // below[k] has bit j set when elems[j] ⊊ elems[k]
    let mut below: Vec<Bits> = vec![Bits::new(0); elems.len()];
    let mut truncated = false;
    let mut k = 0;
    'outer: while k < elems.len() {
        let current = elems[k].clone();
        let results: Vec<(Subspace, Subspace)> = elems[..k]
            .par_iter()
            .map(|other| {
                (
                    current.sum(other).expect("compatible"),
                    current.intersect(other).expect("compatible"),
                )
            })
            .collect();
        for (j, (sum, meet)) in results.into_iter().enumerate() {
            if meet == elems[j] {
                below[k].set(j);
            } else if meet == current {
                below[j].set(k);
            }
            for (s, origin) in [
                (sum, Origin::Sum { left: k, right: j }),
                (meet, Origin::Meet { left: k, right: j }),
            ] {
                if index.contains_key(&s) {
                    continue;
                }
                if elems.len() == max_elements {
                    truncated = true;
                    break 'outer;
                }
                index.insert(s.clone(), elems.len());
                elems.push(s);
                origins.push(origin);
                below.push(Bits::new(0));
            }
        }
        k += 1;
    }

    let n = elems.len();
    let contains = |hi: usize, lo: usize| -> bool {
        if truncated {
            hi != lo && elems[lo].is_subspace_of(&elems[hi])
        } else {
            below[hi].get(lo)
        }
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| elems[a].canonical_cmp(&elems[b]));
    let mut rank = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        rank[old] = new;
    }

    let mut cover_edges = Vec::new();
    for (hi_new, &hi) in order.iter().enumerate() {
        let mut covers: Vec<usize> = Vec::new();
        // candidates in decreasing dimension
        for &lo in order[..hi_new].iter().rev() {
            if !contains(hi, lo) {
                continue;
            }
            if covers.iter().any(|&c| contains(c, lo)) {
                continue;
            }
            covers.push(lo);
        }
        for lo in covers {
            cover_edges.push((rank[lo], hi_new));
        }
    }
    cover_edges.sort_unstable();

    let remap = |o: Origin| match o {
        Origin::Seed => Origin::Seed,
        Origin::Sum { left, right } => Origin::Sum {
            left: rank[left],
            right: rank[right],
        },
        Origin::Meet { left, right } => Origin::Meet {
            left: rank[left],
            right: rank[right],
        },
    };
    Ok(SubspaceLattice {
        elements: order.iter().map(|&o| elems[o].clone()).collect(),
        origins: order.iter().map(|&o| remap(origins[o])).collect(),
        generators: generators.iter().map(|&g| rank[g]).collect(),
        cover_edges,
        truncated,
    })
}

impl SubspaceLattice {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, s: &Subspace) -> Option<usize> {
        self.elements
            .binary_search_by(|e| e.canonical_cmp(s))
            .ok()
    }

    pub fn contains(&self, s: &Subspace) -> bool {
        self.position(s).is_some()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Labels {
    Dims,
    Bases,
}

/// Hasse diagram in DOT, bottom to top, with the seeds filled.
pub fn to_dot(lat: &SubspaceLattice, labels: Labels) -> String {
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, e) in lat.elements.iter().enumerate() {
        let label = match labels {
            Labels::Dims => e.dim().to_string(),
            Labels::Bases => e.to_string(),
        };
        let style = if lat.generators.contains(&i) {
            ", style=filled, fillcolor=lightblue"
        } else {
            ""
        };
        writeln!(out, "  n{i} [label=\"{label}\"{style}];").unwrap();
    }
    let max_dim = lat.elements.iter().map(Subspace::dim).max().unwrap_or(0);
    for d in 0..=max_dim {
        let same: Vec<String> = (0..lat.len())
            .filter(|&i| lat.elements[i].dim() == d)
            .map(|i| format!("n{i}"))
            .collect();
        if same.len() > 1 {
            writeln!(out, "  {{ rank=same; {}; }}", same.join("; ")).unwrap();
        }
    }
    for (lo, hi) in &lat.cover_edges {
        writeln!(out, "  n{lo} -> n{hi};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// One line per node: name, dimension, basis.
pub fn legend(lat: &SubspaceLattice) -> String {
    let mut out = String::new();
    for (i, e) in lat.elements.iter().enumerate() {
        writeln!(out, "n{i}\t{}\t{e}", e.dim()).unwrap();
    }
    out
}

/// Checks `V = (V∩F_e) ⊕ (V∩F_τ) ⊕ (V∩F̃)` for every element.
pub fn verify_lattice_homogeneity(
    lat: &SubspaceLattice,
    split: &CanonicalSplit,
) -> Result<TheoremReport> {
    if lat.truncated {
        return Err(Error::TruncatedLattice);
    }
    let mut r = TheoremReport::new("lattice elements split along the canonical decomposition");
    let parts = split.parts();
    let result = lat.elements.iter().try_for_each(|v| {
        let pieces: Vec<Subspace> = parts.iter().map(|p| v.intersect(p).unwrap()).collect();
        let refs: Vec<&Subspace> = pieces.iter().collect();
        expect_eq(None, &Subspace::sum_all(&refs).unwrap(), v)?;
        expect(Subspace::is_independent(&refs).unwrap(), None, || {
            format!("pieces of {v} are not independent")
        })
    });
    r.check(
        "homogeneous-elements",
        "V = (V∩F_e) ⊕ (V∩F_τ) ⊕ (V∩F̃)",
        result,
    );
    r.annotate(format!("{} elements", lat.len()));
    Ok(r)
}

/// `V1 ⊕ W2 = E` and `W1 ⊕ V2 = E`, on top of the two given sums.
pub fn check_four_sums(dec: &TwoSumDecomposition) -> Result<()> {
    if !Subspace::is_direct_sum(&[dec.v1(), dec.w2()])? {
        return Err(Error::FourSumViolated("V1 + W2".into()));
    }
    if !Subspace::is_direct_sum(&[dec.w1(), dec.v2()])? {
        return Err(Error::FourSumViolated("W1 + V2".into()));
    }
    Ok(())
}

/// Data attached to the interval `[V1∩W1, V1+W1]` when all four direct
/// sums hold. Subspaces with a `q` suffix live in quotient coordinates.
#[derive(Debug, Clone, Serialize)]
pub struct FiveSumInvariant {
    pub t1: Subspace,
    pub u1: Subspace,
    pub bottom: Subspace,
    pub top: Subspace,
    pub v1q: Subspace,
    pub w1q: Subspace,
    pub t1q: Subspace,
    pub u1q: Subspace,
    /// Column `k` holds the `W1'`-coordinates of `i` applied to the
    /// `k`-th basis vector of `V1'`.
    pub i_matrix: Matrix,
    pub j_matrix: Matrix,
    /// `j⁻¹∘i` in `V1'` coordinates.
    pub operator: Matrix,
    #[serde(serialize_with = "serialize_polys")]
    pub invariant_factors: Vec<Poly>,
    pub t_meet_u: Subspace,
    pub m3_t: bool,
    pub m3_u: bool,
}

fn serialize_polys<S: serde::Serializer>(ps: &[Poly], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(ps.iter().map(|p| p.to_string()))
}

/// The map `V1' → W1'` whose graph complement is `t`: `v − g(v) ∈ t`.
fn graph_map(v: &Subspace, w: &Subspace, t: &Subspace) -> Result<Matrix> {
    let field = v.field();
    let stacked = t.basis().vstack(w.basis());
    if stacked.rows() != stacked.cols() || stacked.rank() != stacked.rows() {
        return Err(Error::Precondition(format!(
            "{t} and {w} are not complementary in the quotient"
        )));
    }
    let a = stacked.transpose();
    let cols: Vec<Vec<_>> = v
        .vectors()
        .map(|x| {
            let c = a.solve(x).expect("invertible");
            c[t.dim()..].to_vec()
        })
        .collect();
    Ok(Matrix::from_columns(field, w.dim(), &cols))
}

/// Pairwise meets are zero and pairwise joins are everything.
fn is_m3(a: &Subspace, b: &Subspace, c: &Subspace) -> bool {
    let full = Subspace::full(a.field(), a.ambient_dim());
    [(a, b), (a, c), (b, c)].iter().all(|(x, y)| {
        x.intersect(y).unwrap().is_zero() && x.sum(y).unwrap() == full
    })
}

pub fn five_sum_invariant(dec: &TwoSumDecomposition) -> Result<FiveSumInvariant> {
    check_four_sums(dec)?;
    let (v1, v2, w1, w2) = (dec.v1(), dec.v2(), dec.w1(), dec.w2());
    let bottom = v1.intersect(w1)?;
    let top = v1.sum(w1)?;
    let t1 = bottom.sum(&v2.intersect(&top)?)?;
    let u1 = bottom.sum(&w2.intersect(&top)?)?;
    let q = top.quotient_coords(&bottom)?;
    let v1q = q.to_quotient(v1)?;
    let w1q = q.to_quotient(w1)?;
    let t1q = q.to_quotient(&t1)?;
    let u1q = q.to_quotient(&u1)?;
    let i_matrix = graph_map(&v1q, &w1q, &t1q)?;
    let j_matrix = graph_map(&v1q, &w1q, &u1q)?;
    let j_inv = j_matrix
        .inverse()
        .ok_or_else(|| Error::Precondition("j is not invertible".into()))?;
    if i_matrix.rank() != i_matrix.rows() {
        return Err(Error::Precondition("i is not invertible".into()));
    }
    let operator = &j_inv * &i_matrix;
    Ok(FiveSumInvariant {
        invariant_factors: invariant_factors(&operator),
        t_meet_u: t1q.intersect(&u1q)?,
        m3_t: is_m3(&v1q, &w1q, &t1q),
        m3_u: is_m3(&v1q, &w1q, &u1q),
        t1,
        u1,
        bottom,
        top,
        v1q,
        w1q,
        t1q,
        u1q,
        i_matrix,
        j_matrix,
        operator,
    })
}

/// The two increasing chains `X0 ⊆ … ⊆ X3 = V1` and `Y0 ⊆ … ⊆ Y3 = V2`.
pub fn theta2_chains(dec: &TwoSumDecomposition) -> ([Subspace; 4], [Subspace; 4]) {
    let (v1, v2, w1, w2) = (dec.v1(), dec.v2(), dec.w1(), dec.w2());
    let zero = dec.zero();
    let xs = [
        zero.clone(),
        v2.sum(w2).unwrap().intersect(v1).unwrap(),
        v1.intersect(w1).unwrap(),
        v1.clone(),
    ];
    let ys = [
        zero,
        v1.sum(w1).unwrap().intersect(v2).unwrap(),
        v2.intersect(w2).unwrap(),
        v2.clone(),
    ];
    (xs, ys)
}

/// `{X_i ⊕ Y_j} ∪ {W1, W2}`, deduplicated and in canonical order.
pub fn theta2_catalog(dec: &TwoSumDecomposition) -> Vec<Subspace> {
    let (xs, ys) = theta2_chains(dec);
    let mut out: Vec<Subspace> = xs
        .iter()
        .flat_map(|x| ys.iter().map(move |y| x.sum(y).unwrap()))
        .chain([dec.w1().clone(), dec.w2().clone()])
        .collect();
    out.sort_by(|a, b| a.canonical_cmp(b));
    out.dedup();
    out
}

pub fn verify_theta2_lattice(dec: &TwoSumDecomposition, max_elements: usize) -> Result<TheoremReport> {
    check_four_sums(dec)?;
    let theta = dec.theta();
    if !(&theta * &theta).is_zero() {
        return Err(Error::Precondition("θ² ≠ 0".into()));
    }
    let (v1, v2, w1, w2) = (dec.v1(), dec.v2(), dec.w1(), dec.w2());
    let (xs, ys) = theta2_chains(dec);
    let mut r = TheoremReport::new("lattice of a decomposition with θ² = 0");

    let vw1 = v1.sum(w1)?;
    let vw2 = v2.sum(w2)?;
    r.check(
        "lemma-first",
        "(V1+W1)∩V2 = (V1+W1)∩W2 ⊆ V2∩W2",
        {
            let a = vw1.intersect(v2)?;
            expect_eq(None, &a, &vw1.intersect(w2)?)
                .and_then(|()| expect_sub(None, &a, &v2.intersect(w2).unwrap()))
        },
    );
    r.check(
        "lemma-second",
        "(V2+W2)∩V1 = (V2+W2)∩W1 ⊆ V1∩W1",
        {
            let a = vw2.intersect(v1)?;
            expect_eq(None, &a, &vw2.intersect(w1)?)
                .and_then(|()| expect_sub(None, &a, &v1.intersect(w1).unwrap()))
        },
    );
    r.check(
        "increasing-chains",
        "X0 ⊆ X1 ⊆ X2 ⊆ X3, Y0 ⊆ Y1 ⊆ Y2 ⊆ Y3",
        (0..3).try_for_each(|k| {
            expect_sub(Some(k), &xs[k], &xs[k + 1])?;
            expect_sub(Some(k), &ys[k], &ys[k + 1])
        }),
    );
    r.check(
        "product-form",
        "X_i ⊕ Y_j = (X_i ⊕ V2) ∩ (V1 ⊕ Y_j)",
        (0..4).try_for_each(|i| {
            (0..4).try_for_each(|j| {
                let lhs = xs[i].sum(&ys[j]).unwrap();
                let rhs = xs[i].sum(v2).unwrap().intersect(&v1.sum(&ys[j]).unwrap()).unwrap();
                expect_eq(Some(4 * i + j), &lhs, &rhs)
            })
        }),
    );
    r.check(
        "shifted-chains",
        "X1 + V2 = V2 + W2, Y1 + W1 = V1 + W1",
        expect_eq(None, &xs[1].sum(v2)?, &vw2)
            .and_then(|()| expect_eq(None, &ys[1].sum(w1).unwrap(), &vw1)),
    );
    let catalog = theta2_catalog(dec);
    r.check(
        "catalog-closed",
        "{X_i ⊕ Y_j} ∪ {W1, W2} is closed under + and ∩",
        catalog.iter().try_for_each(|a| {
            catalog.iter().try_for_each(|b| {
                for c in [a.sum(b).unwrap(), a.intersect(b).unwrap()] {
                    expect(catalog.contains(&c), None, || {
                        format!("{c} from {a} and {b} is outside the catalog")
                    })?;
                }
                Ok(())
            })
        }),
    );
    let lat = closure(&dec.generators(), max_elements)?;
    r.check(
        "closure-in-catalog",
        "closure(V1, V2, W1, W2) ⊆ {X_i ⊕ Y_j} ∪ {W1, W2}",
        expect(!lat.truncated, None, || "closure truncated".into()).and_then(|()| {
            lat.elements.iter().try_for_each(|e| {
                expect(catalog.contains(e), None, || format!("{e} is outside the catalog"))
            })
        }),
    );
    r.annotate(format!(
        "closure has {} elements, catalog has {}",
        lat.len(),
        catalog.len()
    ));
    r.check(
        "catalog-size",
        "at most 18 elements",
        expect(catalog.len() <= 18, None, || {
            format!("catalog has {} elements", catalog.len())
        }),
    );
    Ok(r)
}

/// Every decomposition of `field^n` with `V1`, `V2` spanned by the first
/// `k` and last `n − k` coordinate vectors, all four direct sums, `θ ≠ 0`
/// and `θ² = 0`.
pub fn theta2_search(field: FieldSpec, n: usize) -> Result<Vec<TwoSumDecomposition>> {
    let all = Subspace::enumerate_all(field, n)?;
    let mut found = Vec::new();
    for k in 1..n {
        let v1 = Subspace::row_space(&Matrix::identity(field, n).select_rows(&(0..k).collect::<Vec<_>>()));
        let v2 = Subspace::row_space(&Matrix::identity(field, n).select_rows(&(k..n).collect::<Vec<_>>()));
        let w1s: Vec<&Subspace> = all
            .iter()
            .filter(|w| w.dim() == k && w.intersect(&v2).unwrap().is_zero())
            .collect();
        let w2s: Vec<&Subspace> = all
            .iter()
            .filter(|w| w.dim() == n - k && w.intersect(&v1).unwrap().is_zero())
            .collect();
        let batch: Vec<TwoSumDecomposition> = w1s
            .par_iter()
            .flat_map_iter(|&w1| {
                let (v1, v2) = (v1.clone(), v2.clone());
                w2s.iter().filter_map(move |&w2| {
                    if !w1.intersect(w2).unwrap().is_zero() {
                        return None;
                    }
                    let dec =
                        TwoSumDecomposition::new(v1.clone(), v2.clone(), w1.clone(), w2.clone())
                            .ok()?;
                    let t = dec.theta();
                    (!t.is_zero() && (&t * &t).is_zero()).then_some(dec)
                })
            })
            .collect();
        found.extend(batch);
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twosum::fixtures::{aligned, g2, swapped};
    use proptest::prelude::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn two_lines_make_a_diamond() {
        let f = q();
        let e1 = Subspace::coordinate_line(f, 2, 0);
        let e2 = Subspace::coordinate_line(f, 2, 1);
        let lat = closure(&[e1.clone(), e2.clone()], DEFAULT_MAX_ELEMENTS).unwrap();
        assert_eq!(lat.len(), 4);
        assert_eq!(lat.cover_edges.len(), 4);
        assert!(!lat.truncated);
        assert!(lat.elements[0].is_zero() && lat.elements[3].is_full());
        let dot = to_dot(&lat, Labels::Dims);
        assert_eq!(dot.matches(" -> ").count(), 4);
        assert_eq!(dot.matches("[label=").count(), 4);
    }

    #[test]
    fn single_seed() {
        let a = Subspace::from_i64(q(), 3, &[&[1, 2, 3]]);
        let lat = closure(std::slice::from_ref(&a), 5).unwrap();
        assert_eq!(lat.elements, vec![a]);
        assert!(lat.cover_edges.is_empty());
        assert_eq!(to_dot(&lat, Labels::Bases).matches(" -> ").count(), 0);
    }

    #[test]
    fn g2_lattice_has_six_elements() {
        let lat = closure(&g2(q()).generators(), DEFAULT_MAX_ELEMENTS).unwrap();
        assert_eq!(lat.len(), 6);
        assert_eq!(lat.cover_edges.len(), 8);
        assert_eq!(lat.generators.len(), 4);
    }

    #[test]
    fn cap_truncates() {
        let lat = closure(&g2(q()).generators(), 4).unwrap();
        assert!(lat.truncated);
        assert_eq!(lat.len(), 4);
        assert!(closure(&g2(q()).generators(), 3).is_err());
        let split = g2(q()).canonical_split();
        assert_eq!(
            verify_lattice_homogeneity(&lat, &split).unwrap_err(),
            Error::TruncatedLattice
        );
    }

    #[test]
    fn fixtures_are_homogeneous() {
        for dec in [g2(q()), aligned(q()), swapped(q())] {
            let lat = closure(&dec.generators(), DEFAULT_MAX_ELEMENTS).unwrap();
            let r = verify_lattice_homogeneity(&lat, &dec.canonical_split()).unwrap();
            assert!(r.all_passed(), "{r}");
        }
    }

    #[test]
    fn five_sum_on_g2() {
        let f = q();
        let inv = five_sum_invariant(&g2(f)).unwrap();
        assert_eq!(inv.t1, Subspace::from_i64(f, 2, &[&[0, 1]]));
        assert_eq!(inv.u1, Subspace::from_i64(f, 2, &[&[1, -1]]));
        // i(e1) = e1 + e2 and j(e1) = (e1 + e2)/2 in the W1 basis (1, 1)
        assert_eq!(inv.i_matrix, Matrix::from_i64(f, &[&[1]]));
        assert_eq!(inv.j_matrix, Matrix::from_i64(f, &[&[1]]).scale(&f.from_ratio(1, 2)));
        assert_eq!(inv.operator, Matrix::from_i64(f, &[&[2]]));
        assert_eq!(inv.invariant_factors, vec![Poly::from_i64(f, &[-2, 1])]);
        assert!(inv.m3_t && inv.m3_u);
        assert!(inv.t_meet_u.is_zero());
    }

    #[test]
    fn five_sum_with_equal_graphs() {
        let f = q();
        let dec = TwoSumDecomposition::new(
            Subspace::from_i64(f, 2, &[&[1, 0]]),
            Subspace::from_i64(f, 2, &[&[0, 1]]),
            Subspace::from_i64(f, 2, &[&[1, 1]]),
            Subspace::from_i64(f, 2, &[&[0, 1]]),
        )
        .unwrap();
        let inv = five_sum_invariant(&dec).unwrap();
        assert_eq!(inv.t1q, inv.u1q);
        assert_eq!(inv.invariant_factors, vec![Poly::from_i64(f, &[-1, 1])]);
    }

    #[test]
    fn five_sum_rejects_swapped() {
        assert_eq!(
            five_sum_invariant(&swapped(q())).unwrap_err(),
            Error::FourSumViolated("V1 + W2".into())
        );
        // the aligned fixture collapses the interval to a point
        let inv = five_sum_invariant(&aligned(q())).unwrap();
        assert!(inv.invariant_factors.is_empty());
    }

    #[test]
    fn g2_fails_theta2_precondition() {
        assert!(matches!(
            verify_theta2_lattice(&g2(q()), DEFAULT_MAX_ELEMENTS),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn theta2_search_over_gf3() {
        let found = theta2_search(FieldSpec::Prime(3), 4).unwrap();
        assert!(!found.is_empty());
        // spot-check a handful; the acceptance suite covers the rest
        for dec in found.iter().step_by(found.len().div_ceil(10)) {
            let r = verify_theta2_lattice(dec, DEFAULT_MAX_ELEMENTS).unwrap();
            assert!(r.all_passed(), "{r}");
        }
    }

    fn gf3_seeds() -> impl Strategy<Value = Vec<Subspace>> {
        let f = FieldSpec::Prime(3);
        let all = Subspace::enumerate_all(f, 3).unwrap();
        proptest::collection::vec(proptest::sample::select(all), 1..5)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn closure_ignores_seed_order(mut seeds in gf3_seeds()) {
            let a = closure(&seeds, DEFAULT_MAX_ELEMENTS).unwrap();
            seeds.reverse();
            let b = closure(&seeds, DEFAULT_MAX_ELEMENTS).unwrap();
            prop_assert_eq!(a.elements, b.elements);
            prop_assert_eq!(a.cover_edges, b.cover_edges);
        }

        #[test]
        fn closure_is_closed_and_origins_rederive(seeds in gf3_seeds()) {
            let lat = closure(&seeds, DEFAULT_MAX_ELEMENTS).unwrap();
            for a in &lat.elements {
                for b in &lat.elements {
                    prop_assert!(lat.contains(&a.sum(b).unwrap()));
                    prop_assert!(lat.contains(&a.intersect(b).unwrap()));
                }
            }
            for (e, o) in lat.elements.iter().zip(&lat.origins) {
                match *o {
                    Origin::Seed => prop_assert!(seeds.contains(e)),
                    Origin::Sum { left, right } => {
                        prop_assert_eq!(&lat.elements[left].sum(&lat.elements[right]).unwrap(), e)
                    }
                    Origin::Meet { left, right } => {
                        prop_assert_eq!(&lat.elements[left].intersect(&lat.elements[right]).unwrap(), e)
                    }
                }
            }
        }

        #[test]
        fn covers_are_the_hasse_relation(seeds in gf3_seeds()) {
            let lat = closure(&seeds, DEFAULT_MAX_ELEMENTS).unwrap();
            let n = lat.len();
            let lt = |a: usize, b: usize| a != b && lat.elements[a].is_subspace_of(&lat.elements[b]);
            let mut expected = Vec::new();
            for a in 0..n {
                for b in 0..n {
                    if lt(a, b) && !(0..n).any(|c| lt(a, c) && lt(c, b)) {
                        expected.push((a, b));
                    }
                }
            }
            prop_assert_eq!(lat.cover_edges, expected);
        }
    }
}
