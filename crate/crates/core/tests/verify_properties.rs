use qgauss_core::identities::{theorem2_check, theorem3_check};
use qgauss_core::verify::*;

#[test]
fn bergeron_differences_are_symmetric_nonneg_unimodal() {
    for q in enumerate_quadruples(64) {
        let inst = check_c1_c2(q.a, q.b, q.c, q.d, Conjecture::C2).unwrap();
        assert!(inst.symmetric, "{q:?}");
        assert!(inst.passes(), "counterexample {q:?}: {}", inst.diff);
        assert_eq!(inst.degenerate, inst.diff.is_zero());
        if let Some(deg) = inst.diff.degree() {
            assert!(deg < inst.ambient_degree);
        }
    }
}

#[test]
fn beta_two_is_the_proven_case() {
    for a in 1..=8 {
        for i in 1..=8 {
            let inst = check_c3(a, a + i, 2).unwrap();
            let expansion = theorem3_check(a, i).unwrap();
            assert!(expansion.equal);
            assert_eq!(inst.diff, expansion.rhs, "a={a} i={i}");
        }
    }
}

#[test]
fn beta_conjecture_embeds_into_bergeron() {
    for beta in 1..=4 {
        for a in 1..=6 {
            for b in a + 1..=7 {
                let inst = check_c3(a, b, beta).unwrap();
                if let Some(q) = c3_induced_quadruple(a, b, beta) {
                    assert_eq!(inst.diff, bergeron_diff(q.a, q.b, q.c, q.d).unwrap());
                }
            }
        }
    }
}

#[test]
fn beta_two_at_one_matches_integer_theorem() {
    for a in 1..=10 {
        for i in 1..=10 {
            let inst = check_c3(a, a + i, 2).unwrap();
            assert_eq!(inst.diff.eval_at_one(), theorem2_check(a, i).unwrap().lhs);
        }
    }
}

#[test]
fn wz_q_specializes_to_q1() {
    for a in 1..=6 {
        for i in 1..=6 {
            for k in default_k_range(a, i) {
                assert_eq!(
                    f_q(a, i, k).value_at_one(),
                    Some(f_q1(a, i, k)),
                    "F a={a} i={i} k={k}"
                );
            }
        }
    }
}

#[test]
fn wz_pairs_hold_on_small_grid() {
    for a in 1..=4 {
        for i in 1..=4 {
            let q1 = wz_check_q1(a, i, None).unwrap();
            assert!(q1.holds(), "{:?}", q1.failures);
            let q = wz_check_q(a, i, None).unwrap();
            assert!(q.holds(), "{:?}", q.failures);
        }
    }
}

#[test]
fn wz_detects_a_truncated_range() {
    // Dropping k = 0 breaks the telescoped sum.
    let c = wz_check_q1(2, 2, Some(1..=4)).unwrap();
    assert!(!c.telescope_ok);
    assert!(!c.holds());
    assert!(c.witness.is_some());
}

#[test]
fn conjecture4_scan_small() {
    for a in 0..=6 {
        for b in a + 1..=7 {
            for k in 0..=a {
                let inst = check_c4(a, b, k).unwrap();
                assert!(inst.passes(), "a={a} b={b} k={k}");
            }
        }
    }
}
