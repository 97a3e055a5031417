use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sll_core::curvature::{
    berger_algebra, bianchi_check, curvature_solution_space, exterior_product_check, matches,
    sample_tensor, verify_block_vanishing, verify_metric_theorem, verify_pair_symmetry,
    verify_theta2_corollary, CurvatureTensor,
};
use sll_core::lattice::{check_four_sums, closure, five_sum_invariant, DEFAULT_MAX_ELEMENTS};
use sll_core::representation::{
    commutes_with_algebra, invariance_algebra, involution_from_split, l_operator,
    l_prime_operator,
};
use sll_core::sample::{
    random_complement, random_curvature, random_element, random_invertible, random_subspace,
    random_two_sum,
};
use sll_core::twosum::{fixtures, Projector};
use sll_core::{BilinearForm, FieldSpec, Matrix, OracleBounds, Status, Subspace};

fn gf(p: u64) -> FieldSpec {
    FieldSpec::Prime(p)
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn split_follows_change_of_basis(seed in any::<u64>(), n in 2usize..=6) {
        let mut r = rng(seed);
        let dec = random_two_sum(gf(5), n, &mut r);
        let p = random_invertible(gf(5), n, &mut r);
        let moved = dec.transform(&p).unwrap().canonical_split();
        let split = dec.canonical_split();
        prop_assert_eq!(moved.f_e, split.f_e.image_under(&p));
        prop_assert_eq!(moved.f_tau, split.f_tau.image_under(&p));
        prop_assert_eq!(moved.ftilde, split.ftilde.image_under(&p));
    }

    #[test]
    fn five_sum_invariant_is_basis_free(seed in any::<u64>(), n in 2usize..=6) {
        let mut r = rng(seed);
        let dec = random_two_sum(gf(5), n, &mut r);
        prop_assume!(check_four_sums(&dec).is_ok());
        let inv = five_sum_invariant(&dec).unwrap();
        prop_assert!(inv.m3_t && inv.m3_u);
        let p = random_invertible(gf(5), n, &mut r);
        let moved = five_sum_invariant(&dec.transform(&p).unwrap()).unwrap();
        prop_assert_eq!(moved.invariant_factors, inv.invariant_factors);
    }

    #[test]
    fn invariance_algebra_preserves_the_lattice(seed in any::<u64>(), n in 2usize..=5) {
        let mut r = rng(seed);
        let dec = random_two_sum(gf(3), n, &mut r);
        let gens = dec.generators();
        let refs: Vec<&Subspace> = gens.iter().collect();
        let alg = invariance_algebra(gf(3), n, &refs, None).unwrap();
        let a = random_element(&alg, &mut r);
        let lat = closure(&gens, DEFAULT_MAX_ELEMENTS).unwrap();
        for e in &lat.elements {
            prop_assert!(e.is_invariant_under(&a));
        }
        let mut ops: Vec<Matrix> = [Projector::P1, Projector::P2, Projector::Q1, Projector::Q2]
            .iter()
            .map(|&w| dec.projector(w))
            .collect();
        ops.extend([dec.theta(), l_operator(&dec), l_prime_operator(&dec)]);
        for m in &ops {
            prop_assert!(commutes_with_algebra(m, &alg));
        }
    }

    #[test]
    fn involutions_square_to_identity(seed in any::<u64>(), n in 1usize..=5, k in 0usize..=5) {
        let mut r = rng(seed);
        let a = random_subspace(gf(5), n, k.min(n), &mut r);
        let b = random_complement(&a, &mut r);
        let s = involution_from_split(&a, &b).unwrap();
        prop_assert!((&s * &s).is_identity());
        let one = gf(5).one();
        let plus = Subspace::row_space(&(&s - &Matrix::scalar_identity(gf(5), n, &one)).kernel());
        prop_assert_eq!(plus, a);
    }

    #[test]
    fn solution_space_is_bianchi_and_generates_matching_algebra(seed in any::<u64>(), n in 2usize..=3) {
        let mut r = rng(seed);
        let basis = curvature_solution_space(gf(3), n, &[], None).unwrap();
        let list: Vec<CurvatureTensor> = (0..2).map(|_| sample_tensor(gf(3), n, &basis, &mut r)).collect();
        let alg = berger_algebra(gf(3), n, &list).unwrap();
        for t in basis.iter().chain(&list) {
            prop_assert!(bianchi_check(n, t.coeffs()).unwrap());
        }
        for t in &list {
            prop_assert!(matches(t, &alg));
        }
    }

    #[test]
    fn three_invariant_blocks_never_mix(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = random_invertible(gf(5), 4, &mut r);
        let lines = [vec![0], vec![1, 2], vec![3]].map(|idx| {
            let rows: Vec<Vec<_>> = idx
                .iter()
                .map(|&i| Subspace::coordinate_line(gf(5), 4, i).basis().row_vecs().next().unwrap().to_vec())
                .collect();
            Subspace::span(gf(5), 4, &rows).unwrap().image_under(&p)
        });
        let parts: Vec<&Subspace> = lines.iter().collect();
        let basis = curvature_solution_space(gf(5), 4, &parts, None).unwrap();
        let t = sample_tensor(gf(5), 4, &basis, &mut r);
        prop_assert!(verify_block_vanishing(&t, &parts).unwrap().all_passed());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn metric_curvature_kills_theta(seed in any::<u64>(), p in prop::sample::select(vec![3u64, 5])) {
        let inst = random_curvature(gf(p), 4, &mut rng(seed)).unwrap();
        let (form, dec) = (&inst.form, &inst.decomposition);
        for t in &inst.tensors {
            prop_assert!(verify_pair_symmetry(form, t).unwrap());
        }
        let r = verify_metric_theorem(form, dec, &inst.tensors).unwrap();
        prop_assert!(r.all_passed(), "{}", r);
        // the nilpotent part against the invertible part
        let alg = berger_algebra(gf(p), 4, &inst.tensors).unwrap();
        let split = dec.canonical_split();
        let f = split.f();
        let parts: Vec<&Subspace> = [&f, &split.ftilde].into_iter().filter(|s| !s.is_zero()).collect();
        prop_assert!(exterior_product_check(&alg, &parts).unwrap());
    }
}

#[test]
fn corollary_on_aligned_plane_with_assertion() {
    let q = FieldSpec::Rationals;
    let form = BilinearForm::hyperbolic(q, 1);
    let dec = fixtures::aligned(q);
    let t = CurvatureTensor::on_plane(&Matrix::from_i64(q, &[&[1, 0], &[0, -1]])).unwrap();
    let r = verify_theta2_corollary(&form, &dec, &[t], OracleBounds::default(), true).unwrap();
    assert_eq!(r.status_of("theta-squared"), Some(Status::Pass), "{r}");
    assert!(r.clause("theta-squared").unwrap().note.as_deref().unwrap().contains("asserted"));
}
