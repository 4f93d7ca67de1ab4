use num_bigint::BigInt;
use proptest::prelude::*;

use sytq::qpoly::QPoly;
use sytq::shapes::b_statistic;
use sytq::BlockShape;

fn poly(max_len: usize) -> impl Strategy<Value = QPoly> {
    (0usize..4, prop::collection::vec(-6i64..7, 0..max_len)).prop_map(|(o, c)| QPoly::from_ints(o, &c))
}

/// Nonnegative coefficients, nonzero at both ends, with no internal zeros.
fn gapless() -> impl Strategy<Value = QPoly> {
    (0usize..4, prop::collection::vec(1i64..6, 2..7)).prop_map(|(o, c)| QPoly::from_ints(o, &c))
}

/// Nonnegative coefficients with no two adjacent internal zeros.
fn sparse_ok() -> impl Strategy<Value = QPoly> {
    (0usize..4, prop::collection::vec(0i64..4, 1..9))
        .prop_map(|(o, mut c)| {
            c[0] = c[0].max(1);
            let last = c.len() - 1;
            c[last] = c[last].max(1);
            for i in 1..c.len() {
                if c[i] == 0 && c[i - 1] == 0 {
                    c[i] = 1;
                }
            }
            QPoly::from_ints(o, &c)
        })
}

proptest! {
    #[test]
    fn exact_division_inverts_multiplication(a in poly(8), b in poly(6)) {
        prop_assume!(!b.is_zero());
        let prod = &a * &b;
        prop_assert_eq!(prod.divide_exact(&b).unwrap(), a);
    }

    #[test]
    fn substitute_power_is_a_homomorphism(a in poly(6), b in poly(6), m in 1usize..5) {
        prop_assert_eq!(a.substitute_power(1), a.clone());
        prop_assert_eq!((&a * &b).substitute_power(m), &a.substitute_power(m) * &b.substitute_power(m));
        prop_assert_eq!((&a + &b).substitute_power(m), &a.substitute_power(m) + &b.substitute_power(m));
    }

    #[test]
    fn division_by_non_factor_fails(a in gapless()) {
        let shifted = &a + &QPoly::one().shift(a.degree().unwrap() + 3);
        let r = shifted.divide_exact(&a);
        prop_assert!(r.is_err() || &r.unwrap() * &a == shifted);
    }

    #[test]
    fn gapless_times_sparse_has_no_internal_zeros(f in gapless(), g in sparse_ok()) {
        prop_assert!(!(&f * &g).has_internal_zeros());
    }

    #[test]
    fn rotation_shifts_b(alpha in prop::collection::vec(0usize..5, 1..7), pick in 0usize..6) {
        let m = alpha.len();
        let divisors: Vec<usize> = (1..=m).filter(|d| m % d == 0).collect();
        let d = divisors[pick % divisors.len()];
        let n: usize = alpha.iter().sum();
        let step = m / d;
        let rotated = BlockShape::one_rows(&alpha).rotated(step).alpha();
        let tail: usize = alpha[m - step..].iter().sum();
        let lhs = b_statistic(&rotated) as i64 - b_statistic(&alpha) as i64;
        prop_assert_eq!(lhs, (n * m / d) as i64 - (m * tail) as i64);
    }

    #[test]
    fn scaling_round_trips(a in poly(8), c in 1i64..9) {
        let c = BigInt::from(c);
        prop_assert_eq!(a.scale(&c).div_scalar_exact(&c).unwrap(), a);
    }
}
