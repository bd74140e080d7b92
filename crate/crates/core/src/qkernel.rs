//! q-integers, q-factorials and Gaussian polynomials.
//!
//! [`q_binomial`] runs the memoized Pascal recurrence. [`q_binomial_by_factorials`]
//! and [`brute_force_qbinomial`] are independent routes kept for
//! cross-validation, and [`q_binomial_at_one`] is a separate integer kernel
//! for the `q = 1` specialisation.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::IntPoly;

/// Largest `n` the enumeration oracle accepts.
pub const ENUMERATION_LIMIT: i64 = 22;

/// A Gaussian polynomial symbol `[n choose k]_q`. `k` may lie outside
/// `0..=n`, in which case the polynomial is zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QBinom {
    pub n: i64,
    pub k: i64,
}

impl QBinom {
    pub fn new(n: i64, k: i64) -> Self {
        QBinom { n, k }
    }

    pub fn in_support(&self) -> bool {
        self.n >= 0 && 0 <= self.k && self.k <= self.n
    }

    /// `k (n - k)` inside the support.
    pub fn degree(&self) -> Option<usize> {
        self.in_support()
            .then(|| (self.k * (self.n - self.k)) as usize)
    }

    pub fn resolve(&self) -> IntPoly {
        q_binomial(self.n, self.k)
    }
}

/// `[n]_q = 1 + q + ... + q^{n-1}`.
pub fn q_int(n: usize) -> IntPoly {
    IntPoly::new(vec![BigInt::one(); n])
}

/// `[n]!_q`, with `[0]!_q = 1`.
pub fn q_factorial(n: usize) -> IntPoly {
    (1..=n).fold(IntPoly::one(), |acc, j| &acc * &q_int(j))
}

/// Memo table for the Pascal recurrence, keyed by `(n, min(k, n - k))`.
///
/// Safe to share between threads; concurrent misses may compute the same
/// entry twice, which is harmless since the result is deterministic.
#[derive(Default)]
pub struct GaussianKernel {
    memo: RwLock<HashMap<(u32, u32), Arc<IntPoly>>>,
}

impl GaussianKernel {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.memo.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn lookup(&self, key: (u32, u32)) -> Option<Arc<IntPoly>> {
        self.memo.read().unwrap().get(&key).cloned()
    }

    pub fn get(&self, n: i64, k: i64) -> Arc<IntPoly> {
        if n < 0 || k < 0 || k > n {
            return Arc::new(IntPoly::zero());
        }
        let key = normalize(n as u32, k as u32);
        if let Some(hit) = self.lookup(key) {
            return hit;
        }
        // Explicit work stack instead of recursion: chains can be as long as n.
        let mut stack = vec![key];
        while let Some(&(m, j)) = stack.last() {
            if self.lookup((m, j)).is_some() {
                stack.pop();
                continue;
            }
            if j == 0 {
                self.insert((m, j), IntPoly::one());
                stack.pop();
                continue;
            }
            // [m, j] = [m-1, j] + q^{m-j} [m-1, j-1]
            let left = normalize(m - 1, j);
            let right = normalize(m - 1, j - 1);
            let (l, r) = (self.lookup(left), self.lookup(right));
            match (l, r) {
                (Some(l), Some(r)) => {
                    let value = &*l + &r.shift((m - j) as usize);
                    self.insert((m, j), value);
                    stack.pop();
                }
                (l, r) => {
                    if l.is_none() {
                        stack.push(left);
                    }
                    if r.is_none() {
                        stack.push(right);
                    }
                }
            }
        }
        self.lookup(key).expect("entry computed above")
    }

    fn insert(&self, key: (u32, u32), value: IntPoly) {
        self.memo
            .write()
            .unwrap()
            .entry(key)
            .or_insert_with(|| Arc::new(value));
    }
}

fn normalize(n: u32, k: u32) -> (u32, u32) {
    if k > n {
        return (n, k);
    }
    (n, k.min(n - k))
}

/// Process-wide kernel used by the free functions.
pub fn kernel() -> &'static GaussianKernel {
    static KERNEL: OnceLock<GaussianKernel> = OnceLock::new();
    KERNEL.get_or_init(GaussianKernel::new)
}

/// `[n choose k]_q`; zero unless `0 <= k <= n`.
pub fn q_binomial(n: i64, k: i64) -> IntPoly {
    (*kernel().get(n, k)).clone()
}

/// `[n]!_q / ([k]!_q [n-k]!_q)` by exact polynomial division.
pub fn q_binomial_by_factorials(n: i64, k: i64) -> Result<IntPoly> {
    if n < 0 || k < 0 || k > n {
        return Ok(IntPoly::zero());
    }
    let (n, k) = (n as usize, k as usize);
    q_factorial(n).exact_div(&(&q_factorial(k) * &q_factorial(n - k)))
}

/// Which combinatorial statistic the enumeration oracle sums over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Statistic {
    /// Inversions of binary words with `k` zeros and `n - k` ones.
    Inversion,
    /// Area above a monotone lattice path in a `k x (n - k)` box.
    Area,
}

/// A binary word over `{0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    bits: Vec<u8>,
    zeros: usize,
    ones: usize,
}

impl Word {
    pub fn new(bits: Vec<u8>) -> Self {
        assert!(bits.iter().all(|&b| b <= 1), "binary word expected");
        let ones = bits.iter().filter(|&&b| b == 1).count();
        Word {
            zeros: bits.len() - ones,
            ones,
            bits,
        }
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn zeros(&self) -> usize {
        self.zeros
    }

    pub fn ones(&self) -> usize {
        self.ones
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Pairs `i < j` with `bits[i] > bits[j]`.
    pub fn inversions(&self) -> usize {
        let mut ones_seen = 0;
        let mut inv = 0;
        for &b in &self.bits {
            if b == 1 {
                ones_seen += 1;
            } else {
                inv += ones_seen;
            }
        }
        inv
    }

    /// Every word of length `n` with exactly `k` zeros, in increasing order
    /// of its bit pattern read as a binary number.
    pub fn all_with_zeros(n: usize, k: usize) -> Vec<Word> {
        if k > n {
            return Vec::new();
        }
        let ones = n - k;
        // Gosper's hack over masks with `ones` set bits.
        let mut out = Vec::new();
        if ones == 0 {
            out.push(Word::new(vec![0; n]));
            return out;
        }
        let limit: u64 = 1 << n;
        let mut mask: u64 = (1 << ones) - 1;
        while mask < limit {
            let bits = (0..n).map(|i| ((mask >> (n - 1 - i)) & 1) as u8).collect();
            out.push(Word::new(bits));
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
        out
    }
}

/// Generating function by exhaustive enumeration, for `n <= 22`.
pub fn brute_force_qbinomial(n: i64, k: i64, mode: Statistic) -> Result<IntPoly> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            n,
            max: ENUMERATION_LIMIT,
        });
    }
    if n < 0 || k < 0 || k > n {
        return Ok(IntPoly::zero());
    }
    let (n, k) = (n as usize, k as usize);
    let mut counts = vec![0u64; k * (n - k) + 1];
    match mode {
        Statistic::Inversion => {
            for w in Word::all_with_zeros(n, k) {
                counts[w.inversions()] += 1;
            }
        }
        Statistic::Area => enumerate_paths(k, n - k, &mut counts),
    }
    Ok(IntPoly::new(counts.into_iter().map(BigInt::from).collect()))
}

/// Walks every path of `height` north steps and `width` east steps from the
/// bottom-left to the top-right corner and tallies the cells above it.
fn enumerate_paths(height: usize, width: usize, counts: &mut [u64]) {
    fn walk(x: usize, y: usize, below: usize, height: usize, width: usize, counts: &mut [u64]) {
        if x == width && y == height {
            counts[height * width - below] += 1;
            return;
        }
        if x < width {
            // an east step at height y leaves y cells beneath it
            walk(x + 1, y, below + y, height, width, counts);
        }
        if y < height {
            walk(x, y + 1, below, height, width, counts);
        }
    }
    walk(0, 0, 0, height, width, counts);
}

/// Ordinary binomial coefficient by exact integer arithmetic; zero outside
/// `0 <= k <= n`.
pub fn q_binomial_at_one(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    // C(n, j) = C(n, j-1) * (n - j + 1) / j, exact at every step
    (1..=k).fold(BigInt::one(), |acc, j| {
        acc * BigInt::from(n - j + 1) / BigInt::from(j)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_ints(c)
    }

    #[test]
    fn q_int_examples() {
        assert_eq!(q_int(1), p(&[1]));
        assert_eq!(q_int(4), p(&[1, 1, 1, 1]));
        assert!(q_int(0).is_zero());
    }

    #[test]
    fn q_factorial_examples() {
        assert_eq!(q_factorial(0), IntPoly::one());
        assert_eq!(q_factorial(2), p(&[1, 1]));
        assert_eq!(q_factorial(3), p(&[1, 2, 2, 1]));
    }

    #[test]
    fn q_binomial_examples() {
        for n in 0..6 {
            assert_eq!(q_binomial(n, 0), IntPoly::one());
        }
        assert_eq!(q_binomial(4, 2), p(&[1, 1, 2, 1, 1]));
        assert!(q_binomial(3, 5).is_zero());
        assert!(q_binomial(3, -1).is_zero());
        assert!(q_binomial(-1, 0).is_zero());
        assert_eq!(QBinom::new(4, 2).degree(), Some(4));
        assert_eq!(QBinom::new(4, 5).degree(), None);
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(
            brute_force_qbinomial(2, 1, Statistic::Inversion).unwrap(),
            p(&[1, 1])
        );
        assert_eq!(
            brute_force_qbinomial(4, 2, Statistic::Inversion).unwrap(),
            p(&[1, 1, 2, 1, 1])
        );
        assert_eq!(
            brute_force_qbinomial(4, 2, Statistic::Area).unwrap(),
            p(&[1, 1, 2, 1, 1])
        );
        assert_eq!(
            brute_force_qbinomial(23, 3, Statistic::Inversion),
            Err(Error::TooLarge { n: 23, max: 22 })
        );
        assert_eq!(
            brute_force_qbinomial(0, 0, Statistic::Area).unwrap(),
            IntPoly::one()
        );
    }

    #[test]
    fn words() {
        let w = Word::new(vec![1, 0]);
        assert_eq!(w.inversions(), 1);
        assert_eq!((w.zeros(), w.ones()), (1, 1));
        assert_eq!(Word::all_with_zeros(4, 2).len(), 6);
        assert_eq!(Word::all_with_zeros(3, 0), vec![Word::new(vec![1, 1, 1])]);
        assert_eq!(Word::all_with_zeros(3, 3), vec![Word::new(vec![0, 0, 0])]);
    }

    #[test]
    fn integer_kernel() {
        assert_eq!(q_binomial_at_one(4, 0), BigInt::from(1));
        assert_eq!(q_binomial_at_one(7, 3), BigInt::from(35));
        assert_eq!(q_binomial_at_one(5, -1), BigInt::from(0));
        assert_eq!(
            q_binomial_at_one(100, 50).to_string(),
            "100891344545564193334812497256"
        );
    }

    #[test]
    fn kernel_is_shared_across_threads() {
        let k = GaussianKernel::new();
        std::thread::scope(|s| {
            for _ in 0..4 {
                s.spawn(|| {
                    assert_eq!(*k.get(12, 5), q_binomial_by_factorials(12, 5).unwrap());
                });
            }
        });
        // symmetric keys share one slot
        let before = k.len();
        k.get(12, 7);
        assert_eq!(k.len(), before);
    }

    #[test]
    fn deep_chain_does_not_recurse() {
        let k = GaussianKernel::new();
        assert_eq!(*k.get(3000, 1), q_int(3000));
    }
}
