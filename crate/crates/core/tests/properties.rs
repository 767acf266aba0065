use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use precubical::cohomology::cohomology_groups;
use precubical::complex::{coboundary, cup, Coeff};
use precubical::cubical::{all_subsets_with_sign, PrecubicalSet, Side};
use precubical::document::{parse, serialize};
use precubical::linalg::{field_rank_and_kernel, smith_normal_form, IntMatrix};
use precubical::propcheck::{random_cochain, random_precubical, GenConfig};

const BIG_PRIME: u64 = 4_294_967_291;

fn matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(m, n)| {
        proptest::collection::vec(proptest::collection::vec(-20i64..=20, n), m)
            .prop_map(|rows| IntMatrix::from_rows(&rows))
    })
}

fn instance(max_factors: usize) -> impl Strategy<Value = PrecubicalSet> {
    (any::<u64>(), 1..=max_factors, 1usize..=3, 1usize..=4, 0.2f64..=1.0).prop_map(|(seed, factors, vertices, edges, fraction)| {
        random_precubical(&GenConfig { seed, factors, vertices, edges, fraction, ..GenConfig::default() }).unwrap()
    })
}

fn ring() -> impl Strategy<Value = Coeff> {
    prop_oneof![Just(Coeff::Integers), Just(Coeff::IntegersMod(2)), Just(Coeff::IntegersMod(5)), Just(Coeff::IntegersMod(6))]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn smith_form_invariants(a in matrix()) {
        let f = smith_normal_form(&a);
        prop_assert_eq!(f.u.mul(&a).mul(&f.v), f.s.clone());
        prop_assert_eq!(f.u.mul(&f.u_inv), IntMatrix::identity(a.rows()));
        prop_assert_eq!(f.v.mul(&f.v_inv), IntMatrix::identity(a.cols()));
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                prop_assert!(i == j || f.s[(i, j)].is_zero());
            }
        }
        for (k, d) in f.diag.iter().enumerate() {
            prop_assert_eq!(k < f.rank, !d.is_zero());
            prop_assert!(!d.is_negative());
        }
        for w in f.diag[..f.rank].windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        // No minor of a 5x5 matrix with entries in [-20, 20] reaches BIG_PRIME.
        prop_assert_eq!(f.rank, field_rank_and_kernel(&a, BIG_PRIME).unwrap().rank);
    }

    #[test]
    fn generated_sets_are_valid(x in instance(3)) {
        prop_assert!(x.validate().is_valid());
        prop_assert!(x.max_dim().map_or(true, |d| d <= 3));
    }

    #[test]
    fn documents_round_trip(x in instance(3)) {
        let doc = serialize(&x);
        let back = parse(&doc).unwrap();
        prop_assert_eq!(serialize(&back), doc);
        prop_assert_eq!(back, x);
    }

    #[test]
    fn coboundary_squares_to_zero(x in instance(3), ring in ring(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for n in 0..=x.max_dim().unwrap_or(0) {
            let phi = random_cochain(&x, n, &ring, &mut rng);
            prop_assert!(coboundary(&x, &coboundary(&x, &phi).unwrap()).unwrap().is_zero());
        }
    }

    #[test]
    fn iterated_faces_ignore_order(x in instance(3), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for n in 1..=x.max_dim().unwrap_or(0) {
            let subsets = all_subsets_with_sign(n).unwrap();
            for u in x.cubes(n) {
                for g in &subsets {
                    for side in Side::BOTH {
                        let canonical = x.iterated_face(u, g, side).unwrap();
                        let mut order = g.complement().to_vec();
                        order.shuffle(&mut rng);
                        prop_assert_eq!(x.iterated_face_in_order(u, &order, side).unwrap(), canonical);
                    }
                }
            }
        }
    }

    #[test]
    fn cup_is_bilinear_in_each_slot(x in instance(2), ring in ring(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let top = x.max_dim().unwrap_or(0);
        for p in 0..=top {
            let q = top - p;
            let a = random_cochain(&x, p, &ring, &mut rng);
            let b = random_cochain(&x, q, &ring, &mut rng);
            let c = random_cochain(&x, q, &ring, &mut rng);
            let lhs = cup(&x, &a, &b.sub(&c).unwrap()).unwrap();
            let rhs = cup(&x, &a, &b).unwrap().sub(&cup(&x, &a, &c).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn classes_of_representatives(x in instance(2), p in prop_oneof![Just(0u64), Just(2), Just(3)], seed in any::<u64>()) {
        let ring = if p == 0 { Coeff::Integers } else { Coeff::IntegersMod(p) };
        let groups = cohomology_groups(&x, &ring).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for g in &groups {
            let coords: Vec<BigInt> = (0..g.generator_count()).map(|_| ring.random_elem(&mut rng)).collect();
            let z = g.representative(&x, &coords).unwrap();
            prop_assert!(coboundary(&x, &z).unwrap().is_zero());
            let expected: Vec<BigInt> = coords
                .iter()
                .enumerate()
                .map(|(i, c)| match g.order(i) {
                    Some(d) => ((c % &d) + &d) % &d,
                    None => c.clone(),
                })
                .collect();
            prop_assert_eq!(g.class_of(&z).unwrap(), expected);
            if g.degree() > 0 {
                let h = random_cochain(&x, g.degree() - 1, &ring, &mut rng);
                let shifted = z.add(&coboundary(&x, &h).unwrap()).unwrap();
                prop_assert_eq!(g.class_of(&shifted).unwrap(), g.class_of(&z).unwrap());
            }
        }
    }
}
