use qgauss_core::identities::*;
use qgauss_core::qkernel::{q_binomial as qb, q_binomial_at_one as cb, Word};
use qgauss_core::{BigInt, IntPoly};

#[test]
fn section_three_specializes_to_section_two() {
    for a in 1..=12 {
        for i in 1..=12 {
            let l4 = lemma4_check(a, i).unwrap();
            let l5 = lemma5_check(a, i).unwrap();
            assert!(l4.equal && l5.equal, "a={a} i={i}");
            let l1 = lemma1_check(a, i).unwrap();
            let (l2, l2b) = lemma2_check(a, i).unwrap();
            assert!(l1.equal && l2.equal && l2b.equal);
            assert_eq!(l4.lhs.eval_at_one(), l1.lhs);
            assert_eq!(l4.rhs.eval_at_one(), l1.rhs);
            assert_eq!(l5.lhs.eval_at_one(), l2.lhs);
            assert_eq!(l5.rhs.eval_at_one(), l2b.rhs);
        }
    }
}

#[test]
fn ck_forms_agree_and_are_nonnegative() {
    for i in 1..=12 {
        for k in 1..=i {
            let c = ck_coefficient(i, k).unwrap();
            assert!(c.value >= BigInt::from(0));
            let (tele, pos) = lemma3_check(i, k).unwrap();
            assert!(tele.equal && pos.equal, "i={i} k={k}");
        }
        // c_k(i) vanishes above the diagonal
        assert_eq!(ck_coefficient(i, i + 1).unwrap().value, BigInt::from(0));
    }
}

#[test]
fn bracket_at_one_is_independent_of_a() {
    for i in 1..=8 {
        for k in 1..=i {
            let expected = cb(i + k, 2 * k) + cb(i + k - 1, 2 * k - 1) - cb(i, k);
            assert_eq!(expected, ck_coefficient(i, k).unwrap().value);
            for a in 1..=6 {
                assert_eq!(theorem3_bracket_poly(a, i, k).eval_at_one(), expected);
            }
        }
    }
}

#[test]
fn lemma6_difference_is_its_tail() {
    for i in 1..=12 {
        for k in 1..=i {
            let diff = qb(i + k, 2 * k) - qb(i, k);
            let tail = lemma6_tail(i, k);
            assert_eq!(diff, tail, "i={i} k={k}");
            assert!(tail.is_nonneg());
        }
    }
}

/// Inversions over words with `i - k` zeros and `2k` ones that do not end in
/// `k` ones.
fn lemma7_tail_oracle(i: i64, k: i64) -> IntPoly {
    let (len, zeros) = ((i + k) as usize, (i - k) as usize);
    let mut counts = vec![0i64; zeros * (len - zeros) + 1];
    for w in Word::all_with_zeros(len, zeros) {
        let bits = w.bits();
        let ends_in_ones = bits[len - k as usize..].iter().all(|&b| b == 1);
        if !ends_in_ones {
            counts[w.inversions()] += 1;
        }
    }
    IntPoly::from_ints(&counts)
}

#[test]
fn lemma7_difference_matches_word_split() {
    for i in 1..=12 {
        for k in 0..=i {
            if i + k > 12 {
                continue;
            }
            let c = lemma7_check(i, k).unwrap();
            assert!(c.holds());
            assert_eq!(c.poly, lemma7_tail_oracle(i, k), "i={i} k={k}");
        }
    }
}

#[test]
fn theorem3_expansion_and_positivity() {
    for a in 1..=8 {
        for i in 1..=8 {
            assert!(theorem3_check(a, i).unwrap().equal);
            assert!(theorem3_positivity(a, i).unwrap().holds());
            for k in 1..=i {
                assert!(theorem3_bracket(a, i, k).unwrap().holds());
                assert!(theorem3_bracket_complement(a, i, k).equal);
            }
        }
    }
}

#[test]
fn theorem2_at_top_row_uses_printed_values() {
    // a = 1 only picks up c_1(8) = 36
    let c = theorem2_check(1, 8).unwrap();
    assert_eq!(c.rhs, BigInt::from(36) * cb(11, 0));
    assert!(c.equal);
}

#[test]
fn lemma8_and_lemma9_ranges() {
    for b in 2..=8 {
        for a in 1..b {
            for k in 0..=a {
                assert!(lemma8_check(a, b, k).unwrap().equal, "a={a} b={b} k={k}");
            }
        }
    }
    for n in 2..=30 {
        for k in 1..=n / 2 {
            let c = lemma9_check(n, k).unwrap();
            assert!(c.holds(), "n={n} k={k}");
            assert_eq!(n, c.alpha * k + c.d);
        }
    }
}

#[test]
fn rejected_parameters() {
    assert!(lemma1_check(0, 1).is_err());
    assert!(lemma6_check(1, 0).is_err());
    assert!(theorem3_bracket(1, 1, 0).is_err());
    assert!(lemma9_check(5, 3).is_err());
    assert!(lemma9_check(5, 0).is_err());
    assert!(i1_special_case(0).is_err());
}
