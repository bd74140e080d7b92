use qgauss_core::qkernel::{
    brute_force_qbinomial, q_binomial, q_binomial_at_one, q_binomial_by_factorials, QBinom,
    Statistic,
};
use qgauss_core::{BigInt, IntPoly};

#[test]
fn enumeration_agrees_with_recurrence() {
    for n in 0..=10 {
        for k in 0..=n {
            let fast = q_binomial(n, k);
            assert_eq!(
                fast,
                brute_force_qbinomial(n, k, Statistic::Inversion).unwrap(),
                "[{n},{k}] inv"
            );
            assert_eq!(
                fast,
                brute_force_qbinomial(n, k, Statistic::Area).unwrap(),
                "[{n},{k}] area"
            );
        }
    }
}

#[test]
fn enumeration_bound_edge() {
    // the largest admissible case still runs and agrees
    assert_eq!(
        brute_force_qbinomial(22, 3, Statistic::Inversion).unwrap(),
        q_binomial(22, 3)
    );
    assert!(brute_force_qbinomial(23, 1, Statistic::Area).is_err());
}

#[test]
fn factorial_quotient_agrees() {
    for n in 0..=30 {
        for k in 0..=n {
            assert_eq!(
                q_binomial_by_factorials(n, k).unwrap(),
                q_binomial(n, k),
                "[{n},{k}]"
            );
        }
    }
}

#[test]
fn shape_of_gaussian_polynomials() {
    for n in 0..=30 {
        for k in 0..=n {
            let g = q_binomial(n, k);
            assert_eq!(g, q_binomial(n, n - k), "k-symmetry [{n},{k}]");
            assert!(g.is_symmetric(), "palindromic [{n},{k}]");
            assert!(g.is_unimodal(), "unimodal [{n},{k}]");
            assert!(g.is_nonneg());
            assert_eq!(g.degree(), QBinom::new(n, k).degree());
            assert_eq!(g.coeff(0), BigInt::from(1));
            assert_eq!(g.eval_at_one(), q_binomial_at_one(n, k));
        }
    }
}

#[test]
fn both_pascal_recurrences() {
    for a in 1..=25 {
        for b in 0..=a {
            let lhs = q_binomial(a, b);
            let first = q_binomial(a - 1, b) + q_binomial(a - 1, b - 1).shift((a - b) as usize);
            let second = q_binomial(a - 1, b).shift(b as usize) + q_binomial(a - 1, b - 1);
            assert_eq!(lhs, first, "first recurrence [{a},{b}]");
            assert_eq!(lhs, second, "second recurrence [{a},{b}]");
        }
    }
}

#[test]
fn integer_kernel_matches_pascal_triangle() {
    let mut row = vec![BigInt::from(1)];
    for n in 1..=60i64 {
        let mut next = vec![BigInt::from(1); n as usize + 1];
        for k in 1..n as usize {
            next[k] = &row[k - 1] + &row[k];
        }
        row = next;
        for k in 0..=n {
            assert_eq!(q_binomial_at_one(n, k), row[k as usize]);
        }
    }
}

#[test]
fn zero_outside_support() {
    for (n, k) in [(3, 5), (3, -1), (0, 1), (-2, 0)] {
        assert!(q_binomial(n, k).is_zero());
        assert_eq!(q_binomial_at_one(n, k), BigInt::from(0));
    }
    assert_eq!(q_binomial(0, 0), IntPoly::one());
}
