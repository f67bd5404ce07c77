use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use zsurf_core::forms::{factor_out_z, HermMatrix, PolyMatrix};
use zsurf_core::isometry::{
    boundary_of_orthogonal, decompose, enumerate_orthogonal, eval_word, format_word, parse_word, random_realized_word,
    StdModuleContext,
};
use zsurf_core::linking::{frac_equal, StdCokerElem, StdLinking};
use zsurf_core::units::{is_unitary, reduce_quadratic, truncated_unitary};
use zsurf_core::LaurentPoly;

fn poly() -> impl Strategy<Value = LaurentPoly> {
    (-3i64..=3, prop::collection::vec(-5i64..=5, 0..5)).prop_map(|(lo, cs)| LaurentPoly::from_i64s(lo, &cs))
}

fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn hermitian(max: usize) -> impl Strategy<Value = PolyMatrix> {
    (1..=max).prop_flat_map(|n| {
        (prop::collection::vec(poly(), n), prop::collection::vec(poly(), n * n)).prop_map(move |(diag, upper)| {
            let mut m = PolyMatrix::zeros(n, n);
            for i in 0..n {
                m.set(i, i, &diag[i] + &diag[i].involute());
                for j in i + 1..n {
                    let q = &upper[i * n + j];
                    m.set(i, j, q.clone());
                    m.set(j, i, q.involute());
                }
            }
            m
        })
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, LaurentPoly::zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
    }

    #[test]
    fn involution_is_ring_antiautomorphism(a in poly(), b in poly()) {
        prop_assert_eq!((&a * &b).involute(), &a.involute() * &b.involute());
        prop_assert_eq!((&a + &b).involute(), &a.involute() + &b.involute());
        prop_assert_eq!(a.involute().involute(), a.clone());
        prop_assert_eq!(a.involute().eval_one(), a.eval_one());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).exact_divide(&b).unwrap(), a);
    }

    #[test]
    fn normalize_unit_picks_one_associate(a in nonzero_poly(), k in -4i64..=4, neg in any::<bool>()) {
        let mut b = a.shift(k);
        if neg {
            b = -&b;
        }
        let na = a.normalize_unit().unwrap();
        prop_assert_eq!(&na, &b.normalize_unit().unwrap());
        prop_assert_eq!(na.lowest_exponent(), 0);
        prop_assert!(na.coeffs()[0] > BigInt::from(0));
    }

    #[test]
    fn gcd_divides_both(a in nonzero_poly(), b in nonzero_poly(), c in nonzero_poly()) {
        let g = (&a * &c).gcd(&(&b * &c)).unwrap();
        prop_assert!(g.divides(&(&a * &c)));
        prop_assert!(g.divides(&(&b * &c)));
        prop_assert!(c.divides(&g));
    }

    #[test]
    fn factor_out_z_inverts_scaling(a in hermitian(3)) {
        let h = HermMatrix::new(a.clone()).unwrap();
        let b = HermMatrix::new(a.scale(&LaurentPoly::z())).unwrap();
        prop_assert_eq!(factor_out_z(&b).unwrap(), h);
    }

    #[test]
    fn reduce_quadratic_is_multiplicative(n in -12i64..=12, a in poly(), b in poly()) {
        prop_assume!(n != 0);
        prop_assert_eq!(reduce_quadratic(&(&a * &b), n), &reduce_quadratic(&a, n) * &reduce_quadratic(&b, n));
        prop_assert_eq!(reduce_quadratic(&a.involute(), n), reduce_quadratic(&a, n).conj());
    }

    #[test]
    fn unitarity_survives_units(idx in 0usize..42, k in -5i64..=5, neg in any::<bool>()) {
        let delta = LaurentPoly::t_minus_one().pow(2);
        let us = truncated_unitary(2, 10);
        let x = &us[idx % us.len()];
        prop_assert!(is_unitary(x, &delta));
        let mut y = x.shift(k);
        if neg {
            y = -&y;
        }
        prop_assert!(is_unitary(&y, &delta));
    }

    #[test]
    fn unitarity_invariant_for_random_elements(x in nonzero_poly(), n in -6i64..=6, k in -3i64..=3) {
        let delta = LaurentPoly::twist_alexander(n);
        prop_assert_eq!(is_unitary(&x, &delta), is_unitary(&(-&x.shift(k)), &delta));
    }

    #[test]
    fn decompose_round_trip(seed in any::<u64>(), cp in 0usize..=2, cm in 0usize..=2, g in 0usize..=2, len in 0usize..=10) {
        let ctx = StdModuleContext::new(cp, cm, g);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let word = random_realized_word(&ctx, len, &mut rng);
        let os = enumerate_orthogonal(cp, cm, 1);
        let n = &os[(seed as usize) % os.len()];
        let f = eval_word(&word, &ctx).unwrap().compose(&boundary_of_orthogonal(n, &ctx).unwrap());
        let d = decompose(&f).unwrap();
        let back = eval_word(&d.word, &ctx).unwrap().compose(&boundary_of_orthogonal(&d.n, &ctx).unwrap());
        prop_assert_eq!(back.matrix(), f.matrix());
        // the text format is lossless
        let text = format_word(&d.word);
        prop_assert_eq!(parse_word(&text).unwrap(), d.word);
    }

    #[test]
    fn linking_is_hermitian_and_sesquilinear(
        signs in prop::collection::vec(prop::sample::select(vec![1i8, -1]), 1..=3),
        g in 0usize..=2,
        cu in prop::collection::vec(-3i64..=3, 10),
        cv in prop::collection::vec(-3i64..=3, 10),
    ) {
        let c = signs.len();
        let dim = 2 * c + 2 * g;
        let mk = |cs: &[i64]| {
            let v: Vec<BigInt> = cs[..dim].iter().map(|&x| BigInt::from(x)).collect();
            StdCokerElem::from_coords(&v, c, g).unwrap()
        };
        let (u, v) = (mk(&cu), mk(&cv));
        let bl = StdLinking::new(&signs, g).unwrap();
        let uv = bl.value(&u, &v).unwrap();
        prop_assert!(frac_equal(&uv, &bl.value(&v, &u).unwrap().involute()));
        let tm1 = LaurentPoly::t_minus_one();
        prop_assert!(frac_equal(&bl.value(&u.times_t_minus_one(), &v).unwrap(), &uv.mul_poly(&tm1)));
        prop_assert!(frac_equal(&bl.value(&u, &v.times_t_minus_one()).unwrap(), &uv.mul_poly(&tm1.involute())));
    }
}
