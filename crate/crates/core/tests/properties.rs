use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use adelic_weil::biext::{cocycle_commutator, Cocycle, ExtensionGroup, FiniteAbelianGroup};
use adelic_weil::curve::{divisor_of, random_divisor, random_function, Curve, Divisor};
use adelic_weil::ff::{factor, Fe, Field, Poly};
use adelic_weil::idele::{commutator_pairing, random_idele};
use adelic_weil::parse::{parse_divisor, parse_element, parse_function, parse_idele, parse_poly};
use adelic_weil::tame::{tame_symbol, weil_reciprocity};

fn fields() -> Vec<Field> {
    vec![
        Field::prime(2).unwrap(),
        Field::prime(7).unwrap(),
        Field::gf(2, 3).unwrap(),
        Field::gf(3, 2).unwrap(),
        Field::gf(5, 2).unwrap(),
    ]
}

fn curves() -> Vec<Curve> {
    let k5 = Field::prime(5).unwrap();
    let k7 = Field::prime(7).unwrap();
    vec![
        Curve::projective_line(&k5),
        Curve::projective_line(&Field::gf(3, 2).unwrap()),
        Curve::elliptic(&k5, k5.from_u64(4), k5.zero()).unwrap(),
        Curve::elliptic(&k7, k7.zero(), k7.from_u64(2)).unwrap(),
    ]
}

fn elem(k: &Field, i: u128) -> Fe {
    k.element(i % k.order())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(fi in 0usize..5, a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let k = &fields()[fi];
        let (a, b, c) = (elem(k, a as u128), elem(k, b as u128), elem(k, c as u128));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
            prop_assert!(a.pow_u128(k.order() - 1).is_one());
        }
        // Frobenius is additive
        let p = k.characteristic() as u128;
        prop_assert_eq!((&a + &b).pow_u128(p), &a.pow_u128(p) + &b.pow_u128(p));
    }

    #[test]
    fn poly_division_and_factoring(fi in 0usize..5, seed in any::<u64>()) {
        let k = &fields()[fi];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = Poly::random(k, 6, &mut rng);
        let g = Poly::random(k, 4, &mut rng);
        prop_assume!(!g.is_zero());
        let (q, r) = f.div_rem(&g).unwrap();
        prop_assert_eq!(q.checked_mul(&g).unwrap().checked_add(&r).unwrap(), f.clone());
        prop_assert!(r.deg_i64() < g.deg_i64());
        let d = f.gcd(&g);
        prop_assert!(f.rem(&d).unwrap().is_zero() && g.rem(&d).unwrap().is_zero());
        if !f.is_zero() {
            let fac = factor(&f).unwrap();
            prop_assert_eq!(fac.expand(), f);
            for (pi, _) in &fac.factors {
                prop_assert!(pi.is_irreducible() && pi.is_monic());
            }
        }
    }

    #[test]
    fn divisor_of_is_a_homomorphism(ci in 0usize..4, seed in any::<u64>()) {
        let c = &curves()[ci];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_function(c, 3, &mut rng);
        let g = random_function(c, 3, &mut rng);
        let fg = f.checked_mul(&g).unwrap();
        let lhs = divisor_of(&fg).unwrap();
        let rhs = divisor_of(&f).unwrap().checked_add(&divisor_of(&g).unwrap()).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(lhs.degree(), 0);
        prop_assert!(divisor_of(&f.inv()).unwrap() == divisor_of(&f).unwrap().neg());
    }

    #[test]
    fn reciprocity_and_symbol_laws(ci in 0usize..4, seed in any::<u64>()) {
        let c = &curves()[ci];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_function(c, 3, &mut rng);
        let g = random_function(c, 3, &mut rng);
        prop_assert!(weil_reciprocity(&f, &g).unwrap().is_one());
        for x in divisor_of(&f).unwrap().support() {
            let s = &tame_symbol(&f, &g, x).unwrap() * &tame_symbol(&g, &f, x).unwrap();
            prop_assert!(s.is_one(), "{} {} at {}", f, g, x);
        }
    }

    #[test]
    fn idele_pairing_is_bilinear(ci in 0usize..4, seed in any::<u64>()) {
        let c = &curves()[ci];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_idele(c, &mut rng).unwrap();
        let b = random_idele(c, &mut rng).unwrap();
        let x = random_idele(c, &mut rng).unwrap();
        let lhs = commutator_pairing(&a.checked_mul(&b).unwrap(), &x).unwrap();
        let rhs = &commutator_pairing(&a, &x).unwrap() * &commutator_pairing(&b, &x).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert!(commutator_pairing(&a, &a.inv()).unwrap().pow_u128(2).is_one());
    }

    #[test]
    fn printed_objects_parse_back(ci in 0usize..4, seed in any::<u64>()) {
        let c = &curves()[ci];
        let k = c.base();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = k.random(&mut rng);
        prop_assert_eq!(parse_element(k, &x.to_string()).unwrap(), x);
        let p = Poly::random(k, 4, &mut rng);
        prop_assert_eq!(parse_poly(k, "t", &p.to_string()).unwrap(), p);
        let f = random_function(c, 3, &mut rng);
        prop_assert_eq!(parse_function(c, &f.to_string()).unwrap(), f);
        let d = random_divisor(c, 4, &mut rng);
        prop_assert_eq!(parse_divisor(c, &d.to_string()).unwrap(), d);
        let a = random_idele(c, &mut rng).unwrap();
        prop_assert_eq!(parse_idele(c, &a.to_string()).unwrap(), a);
    }

    #[test]
    fn divisor_arithmetic(ci in 0usize..4, seed in any::<u64>(), n in -4i64..=4) {
        let c = &curves()[ci];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_divisor(c, 4, &mut rng);
        let e = random_divisor(c, 4, &mut rng);
        prop_assert_eq!(d.checked_add(&e).unwrap().degree(), d.degree() + e.degree());
        prop_assert_eq!(d.scale(n).degree(), n * d.degree());
        prop_assert!(d.checked_sub(&d).unwrap().is_zero());
        prop_assert_eq!(d.checked_add(&Divisor::zero(c)).unwrap(), d);
    }

    #[test]
    fn bilinear_cocycle_commutators(r in 0usize..3, seed in any::<u64>()) {
        let shapes = [vec![4u64], vec![2, 2], vec![2, 4]];
        let g = FiniteAbelianGroup::new(shapes[r].clone()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        // entries scaled so every form is well defined into Z/4
        let rank = g.rank();
        let m: Vec<Vec<u64>> = (0..rank)
            .map(|i| (0..rank).map(|j| {
                let step = 4 / g.orders()[i].min(g.orders()[j]).min(4);
                step * rand::Rng::gen_range(&mut rng, 0..4u64)
            }).collect())
            .collect();
        let sigma = Cocycle::bilinear(g.clone(), 4, &m).unwrap();
        let ext = ExtensionGroup::new(&sigma).unwrap();
        for a in 0..g.size() {
            for b in 0..g.size() {
                prop_assert_eq!(ext.commutator(a, b).unwrap(), cocycle_commutator(&sigma, a, b));
            }
        }
    }
}
