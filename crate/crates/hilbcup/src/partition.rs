//! Integer partitions and their statistics.
//!
//! Partitions index conjugacy classes of symmetric groups, power-sum
//! monomials and cohomology basis elements, so this type is the universal
//! key throughout the crate. Parts are kept weakly decreasing; the empty
//! sequence is the unique partition of 0.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A partition: weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from arbitrary positive parts, sorting them into
    /// canonical (weakly decreasing) order. Panics on a zero part.
    pub fn new(mut parts: Vec<usize>) -> Self {
        assert!(parts.iter().all(|&p| p >= 1), "partition parts must be >= 1");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The weight |lambda|, i.e. the sum of the parts.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The length l(lambda), i.e. the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// alpha_i: the number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// The multiplicity profile (alpha_1, ..., alpha_{largest part}).
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut alpha = vec![0usize; self.largest_part()];
        for &p in &self.parts {
            alpha[p - 1] += 1;
        }
        alpha
    }

    /// Degree of a permutation of this cycle type: the minimal number of
    /// transpositions, |lambda| - l(lambda).
    pub fn degree(&self) -> usize {
        self.weight() - self.len()
    }

    /// Centralizer order of the class: prod_i i^{alpha_i} * alpha_i!.
    pub fn z_value(&self) -> BigInt {
        let mut z = BigInt::one();
        for (idx, &alpha) in self.multiplicities().iter().enumerate() {
            let i = idx + 1;
            for _ in 0..alpha {
                z *= BigInt::from(i);
            }
            z *= factorial(alpha);
        }
        z
    }

    /// Number of permutations of this cycle type: |lambda|! / z(lambda).
    pub fn class_size(&self) -> BigInt {
        let (q, r) = num_integer::div_rem(factorial(self.weight()), self.z_value());
        debug_assert!(num_traits::Zero::is_zero(&r));
        q
    }

    /// The partition with one extra part equal to `m`.
    pub fn with_part(&self, m: usize) -> Partition {
        assert!(m >= 1);
        let mut parts = self.parts.clone();
        let pos = parts.partition_point(|&p| p > m);
        parts.insert(pos, m);
        Partition { parts }
    }

    /// Removes one part equal to `m`, if present.
    pub fn without_part(&self, m: usize) -> Option<Partition> {
        let pos = self.parts.iter().position(|&p| p == m)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(Partition { parts })
    }

    /// The associated partition of `n`: every part is shifted up by one and
    /// the weight is padded with 1-parts, so that alpha'_1 = n - d - l(lambda)
    /// and alpha'_i = alpha_{i-1} for i >= 2. Infeasible exactly when
    /// sum_i (i+1) * alpha_i > n.
    pub fn associate(&self, n: usize) -> Result<Partition> {
        let d = self.weight();
        let shifted = d + self.len();
        if shifted > n {
            return Err(Error::Infeasible {
                lambda: self.clone(),
                n,
            });
        }
        let mut parts: Vec<usize> = self.parts.iter().map(|&p| p + 1).collect();
        parts.extend(std::iter::repeat_n(1, n - shifted));
        Ok(Partition { parts })
    }

    /// The weight of the associated partition that `associate` would need,
    /// sum_i (i+1) * alpha_i = |lambda| + l(lambda).
    pub fn associate_threshold(&self) -> usize {
        self.weight() + self.len()
    }

    /// Total order on partitions of equal weight: lexicographic on the
    /// multiplicity profiles (alpha_1, alpha_2, ...), so that (d) is the
    /// smallest partition of d and (1^d) the largest.
    pub fn lex_compare(&self, other: &Partition) -> Result<Ordering> {
        if self.weight() != other.weight() {
            return Err(Error::WeightMismatch {
                left: self.weight(),
                right: other.weight(),
            });
        }
        Ok(mult_lex_cmp(self, other))
    }

    /// The derived order on partitions of equal weight: compare the
    /// associated partitions, mu after lambda iff mu' > lambda'.
    pub fn assoc_compare(&self, other: &Partition) -> Result<Ordering> {
        if self.weight() != other.weight() {
            return Err(Error::WeightMismatch {
                left: self.weight(),
                right: other.weight(),
            });
        }
        let n = 2 * self.weight();
        let a = self.associate(n).expect("2d is always feasible");
        let b = other.associate(n).expect("2d is always feasible");
        Ok(mult_lex_cmp(&a, &b))
    }
}

fn mult_lex_cmp(a: &Partition, b: &Partition) -> Ordering {
    let top = a.largest_part().max(b.largest_part());
    for i in 1..=top {
        match a.multiplicity(i).cmp(&b.multiplicity(i)) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Weight first, then the multiplicity-lex order within a weight. This is
/// the order `enumerate` lists partitions in.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| mult_lex_cmp(self, other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        if parts.contains(&0) {
            return Err(D::Error::custom("partition parts must be positive"));
        }
        Ok(Partition::new(parts))
    }
}

impl From<&[usize]> for Partition {
    fn from(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec())
    }
}

impl<const N: usize> From<[usize; N]> for Partition {
    fn from(parts: [usize; N]) -> Self {
        Partition::new(parts.to_vec())
    }
}

/// All partitions of `n`, each exactly once, sorted ascending in the
/// multiplicity-lex order: (n) first, (1^n) last.
pub fn enumerate(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    gen_rec(n, n, &mut stack, &mut out);
    out.sort();
    out
}

fn gen_rec(rest: usize, max: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition {
            parts: stack.clone(),
        });
        return;
    }
    for p in (1..=rest.min(max)).rev() {
        stack.push(p);
        gen_rec(rest - p, p, stack, out);
        stack.pop();
    }
}

/// p(n, k): the number of partitions of `n` into exactly `k` parts.
pub fn count_into_parts(n: usize, k: usize) -> u64 {
    if n == 0 && k == 0 {
        return 1;
    }
    if k == 0 || k > n {
        return 0;
    }
    // p(n, k) = p(n-1, k-1) + p(n-k, k)
    let mut table = vec![vec![0u64; k + 1]; n + 1];
    table[0][0] = 1;
    for i in 1..=n {
        for j in 1..=k.min(i) {
            table[i][j] = table[i - 1][j - 1] + if i >= j { table[i - j][j] } else { 0 };
        }
    }
    table[n][k]
}

/// Total number of partitions of `n`.
pub fn count(n: usize) -> u64 {
    (0..=n).map(|k| count_into_parts(n, k)).sum()
}

pub fn factorial(n: usize) -> BigInt {
    let mut f = BigInt::one();
    for i in 2..=n {
        f *= BigInt::from(i);
    }
    f
}
