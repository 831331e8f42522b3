use num_bigint::BigUint;
use proptest::prelude::*;

use cycloweight::factorizer::{audit_counts, case_parameters, coset_oracle, factor, FactorKind};
use cycloweight::gfield::FieldTower;
use cycloweight::numth::{gcd, prime_power, radical};
use cycloweight::oracle::{brute_force_distribution, verify_code, VerifyConfig};
use cycloweight::polyring::Poly;
use cycloweight::wdist::{all_codes, lambda_set, undetected_error_probability, Channel};

const PRIME_POWERS: [u64; 22] = [3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 41, 43, 47, 49];

fn in_regime() -> impl Strategy<Value = (u64, u64)> {
    (0..PRIME_POWERS.len(), 2u64..=256).prop_filter_map("rad(n) must divide q - 1", |(i, n)| {
        let q = PRIME_POWERS[i];
        (gcd(n, q) == 1 && (q - 1).is_multiple_of(radical(n).unwrap())).then_some((q, n))
    })
}

fn tower(q: u64) -> FieldTower {
    let (p, e) = prime_power(q).unwrap();
    FieldTower::new(p, e).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn factors_multiply_to_x_n_minus_1((q, n) in in_regime()) {
        let t = tower(q);
        let params = case_parameters(n, q).unwrap();
        let fs = factor(&params, &t).unwrap();
        let prod = fs.iter().fold(Poly::one(), |acc, f| acc.mul(f.poly(), t.base()));
        prop_assert_eq!(prod, Poly::x_n_minus_one(n as usize, t.base()));
        if let Ok(oracle) = coset_oracle(n, t.base()) {
            let ours: Vec<Poly> = fs.iter().map(|f| f.poly().clone()).collect();
            prop_assert_eq!(oracle, ours);
        }
    }

    #[test]
    fn code_record_invariants((q, n) in in_regime()) {
        let t = tower(q);
        let params = case_parameters(n, q).unwrap();
        for c in all_codes(&params, &t).unwrap() {
            prop_assert_eq!(c.dimension, c.check_poly.degree().unwrap());
            prop_assert_eq!(c.check_poly.mul(&c.generator_poly, t.base()), Poly::x_n_minus_one(n as usize, t.base()));
            let e = c.enumerator.expanded();
            prop_assert_eq!(e.get(&0), Some(&BigUint::from(1u32)));
            prop_assert!(e.keys().all(|&w| w <= n as usize));
            prop_assert_eq!(e.keys().copied().find(|&w| w > 0), Some(c.min_distance));
            prop_assert_eq!(e.values().sum::<BigUint>(), BigUint::from(q).pow(c.dimension as u32));
        }
    }

    #[test]
    fn lambda_sets_have_expected_size((q, n) in in_regime()) {
        let t = tower(q);
        let params = case_parameters(n, q).unwrap();
        let Some(r) = params.r else { return Ok(()) };
        for f in factor(&params, &t).unwrap() {
            let FactorKind::Trinomial { a, .. } = *f.kind() else { continue };
            let nu = f.nu2u().unwrap();
            let mut set = lambda_set(a, r, nu, &t).unwrap();
            prop_assert!(set.contains(&t.base().zero()));
            set.sort();
            set.dedup();
            prop_assert_eq!(set.len() as u64, (1u64 << (r - nu)) - 1);
        }
    }

    #[test]
    fn small_codes_verify((q, n) in in_regime()) {
        let t = tower(q);
        let params = case_parameters(n, q).unwrap();
        let config = VerifyConfig { cap: 20_000, ..VerifyConfig::default() };
        for c in all_codes(&params, &t).unwrap() {
            let report = verify_code(&c, &t, &config).unwrap();
            prop_assert!(report.passed(), "{}", report.render());
        }
    }

    #[test]
    fn pue_is_a_probability((q, n) in in_regime(), p in 0.0f64..=1.0) {
        let t = tower(q);
        let params = case_parameters(n, q).unwrap();
        for c in all_codes(&params, &t).unwrap().iter().take(4) {
            let v = undetected_error_probability(c.enumerator.expanded(), q, n, p, Channel::QAry).unwrap();
            prop_assert!((0.0..=1.0 + 1e-12).contains(&v), "{}", v);
        }
    }

    #[test]
    fn alternative_generator_gives_same_codes((q, n) in in_regime(), pick in 0usize..8) {
        let base = tower(q);
        let (p, e) = prime_power(q).unwrap();
        let order = q * q - 1;
        let j = (2..order).filter(|&j| gcd(j, order) == 1).nth(pick).unwrap_or(1);
        let alt = FieldTower::with_generator(p, e, base.ext_encoding(base.ext_pow(base.alpha(), j))).unwrap();
        let params = case_parameters(n, q).unwrap();
        let key = |t: &FieldTower| {
            let mut v: Vec<(String, usize, String)> = all_codes(&params, t)
                .unwrap()
                .iter()
                .map(|c| (c.check_poly.render(), c.min_distance, c.enumerator.render()))
                .collect();
            v.sort();
            v
        };
        prop_assert_eq!(key(&base), key(&alt));
    }
}

#[test]
fn binomial_case_counts_are_exact() {
    for q in PRIME_POWERS {
        for n in (2..=256u64).filter(|&n| gcd(n, q) == 1 && (q - 1) % radical(n).unwrap() == 0) {
            let params = case_parameters(n, q).unwrap();
            let fs = factor(&params, &tower(q)).unwrap();
            for a in audit_counts(&params, &fs).unwrap() {
                assert!(a.agrees || !a.source.is_strict(), "q={q} n={n} {}", a.key);
            }
        }
    }
}

#[test]
fn worked_example_brute_force_for_small_dimensions() {
    let t = tower(31);
    let params = case_parameters(288, 31).unwrap();
    for c in all_codes(&params, &t).unwrap().iter().filter(|c| c.dimension <= 3) {
        let bf = brute_force_distribution(c, 1_000_000).unwrap();
        assert_eq!(&bf.distribution, c.enumerator.expanded(), "{}", c.check_poly.render());
    }
}
