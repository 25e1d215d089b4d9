use super::*;
use num_bigint::BigInt;

fn q(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn fact_u128(n: u128) -> u128 {
    (1..=n).product()
}

/// Counts perfect / near-perfect matchings of `K_n` by recursion on the
/// smallest unmatched vertex.
fn matchings_oracle(n: usize) -> u64 {
    fn rec(free: &mut Vec<bool>, leftover_allowed: bool) -> u64 {
        let Some(v) = free.iter().position(|&f| f) else {
            return 1;
        };
        free[v] = false;
        let mut total = 0;
        for w in v + 1..free.len() {
            if free[w] {
                free[w] = false;
                total += rec(free, leftover_allowed);
                free[w] = true;
            }
        }
        if leftover_allowed {
            total += rec(free, false);
        }
        free[v] = true;
        total
    }
    rec(&mut vec![true; n], n % 2 == 1)
}

#[test]
fn bounds_examples() {
    let r = bounds_m(8, 4);
    assert_eq!(r.theorem, Some(Theorem::T2));
    assert_eq!(r.lower(), Some(&q(2, 1)));
    assert_eq!(r.upper(), Some(&q(13122, 1)));
    assert_eq!(3u128.pow(8) * fact_u128(2), 13122);

    let r = bounds_m(9, 3);
    assert_eq!(r.theorem, Some(Theorem::T3));
    assert_eq!(
        (r.lower(), r.upper()),
        (Some(&q(2, 1)), Some(&q(118098, 1)))
    );
    assert_eq!(3u128.pow(9) * fact_u128(3), 118098);

    let r = bounds_m(6, 2);
    assert_eq!(r.theorem, Some(Theorem::T1));
    assert_eq!(r.lower(), Some(&q(3, 4)));
    assert_eq!(r.effective_lower(), Some(&BigUint::from(1u8)));
    assert_eq!(r.upper(), Some(&q(48, 1)));
    assert_eq!(r.matching_cap(), Some(&BigUint::from(15u8)));

    let r = bounds_m(7, 4);
    assert!(!r.applicable);
    assert!(r.reason.as_deref().unwrap().contains("divisib"));
}

#[test]
fn serialization_uses_strings() {
    let json = serde_json::to_value(bounds_m(6, 2)).unwrap();
    assert_eq!(json["lower"], "3/4");
    assert_eq!(json["effective_lower"], "1");
    assert_eq!(json["upper"], "48");
    assert_eq!(json["theorem"], "T1");
    assert_eq!(json["applicable"], true);
}

#[test]
fn lower_le_upper_sweep() {
    for n in 2..=60 {
        for k in 2..=n {
            let r = bounds_m(n, k);
            if r.applicable {
                assert!(r.lower().unwrap() <= r.upper().unwrap(), "({n},{k})");
                assert!(
                    &int(r.effective_lower().unwrap().clone()) <= r.upper().unwrap(),
                    "({n},{k})"
                );
            }
        }
    }
}

#[test]
fn matching_counts() {
    assert_eq!(count_matchings(4), BigUint::from(3u8));
    assert_eq!(count_matchings(6), BigUint::from(15u8));
    assert_eq!(count_matchings(5), BigUint::from(15u8));
    for n in 2..=11 {
        assert_eq!(
            count_matchings(n),
            BigUint::from(matchings_oracle(n)),
            "n={n}"
        );
    }
}

#[test]
fn class_sizes() {
    assert_eq!(class_size(8, 4).unwrap(), BigUint::from(192u32));
    assert_eq!(class_size(6, 3).unwrap(), BigUint::from(16u32));
    assert_eq!(class_size(4, 2).unwrap(), BigUint::from(8u32));
    assert!(class_size(7, 4).is_err());
    assert!(class_size(4, 1).is_err());
}

#[test]
fn chain_examples() {
    let c = chain_t2(8, 4).unwrap();
    assert!(c.holds);
    assert_eq!(c.members[0].0, q(105, 1));
    assert_eq!(c.members[1].0, q(210, 1));
    assert_eq!(c.members[3].0, q(6561, 2));
    assert_eq!(c.members[4].0, q(13122, 1));
    assert!(check_chain_t2(12, 4).unwrap());
    assert!(check_chain_t2(12, 6).unwrap());
    assert!(check_chain_t2(9, 3).is_err());
    assert!(check_chain_t2(8, 2).is_err());
}

#[test]
fn t1_upper() {
    assert!(check_t1_upper(5));
    assert!(check_t1_upper(4));
    assert!(check_t1_upper(2));
    for n in 2..=40 {
        assert!(check_t1_upper(n), "n={n}");
    }
}

#[test]
fn gilbert_examples() {
    assert_eq!(gilbert_bound(10, 3).unwrap(), q(1024, 56));
    let (num, den) = gilbert_parts(10, 3).unwrap();
    assert_eq!(fraction_string(&num, &den), "1024/56");
    assert_eq!(ceil_div(&num, &den), BigUint::from(19u8));
    assert_eq!(gilbert_bound(9, 1).unwrap(), q(512, 1));
    let sum: u64 = (0..=6)
        .map(|i| binomial(12, i).try_into().unwrap_or(0u64))
        .sum();
    assert_eq!(sum, 1 + 12 + 66 + 220 + 495 + 792 + 924);
    assert_eq!(gilbert_bound(12, 7).unwrap(), q(4096, sum as i64));
    assert!(gilbert_bound(5, 0).is_err());
    assert!(gilbert_bound(5, 6).is_err());
}

#[test]
fn gilbert_weakening() {
    assert!(!gilbert_weakening_holds(1));
    for n in 2..=40 {
        assert!(gilbert_weakening_holds(n), "n={n}");
    }
}

#[test]
fn binomials() {
    assert_eq!(binomial(10, 3), BigUint::from(120u8));
    assert_eq!(binomial(3, 5), BigUint::from(0u8));
    assert_eq!(ball_volume(10, 2), BigUint::from(56u8));
}

#[test]
fn d3_report() {
    let r = bounds_d3(12);
    assert_eq!(r.theorem, Some(Theorem::GV));
    assert!(r.lower().unwrap() <= r.upper().unwrap());
    assert!(!bounds_d3(5).applicable);
}

#[test]
fn admits() {
    let r = bounds_m(6, 2);
    assert_eq!(r.admits(15), Some(true));
    assert_eq!(r.admits(16), Some(false));
    assert_eq!(r.admits(0), Some(false));
    assert_eq!(bounds_m(7, 4).admits(1), None);
}
