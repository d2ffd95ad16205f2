//! Irreducible characters of symmetric groups via the Murnaghan-Nakayama
//! rule.
//!
//! The recursion removes a border strip of length equal to the largest
//! remaining cycle; border strips are manipulated through beta-numbers
//! (first-column hook lengths), where removing a strip of length m means
//! lowering one beta-number by m without colliding with another.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{enumerate, Partition};

pub const DEFAULT_MAX_N: usize = 14;

/// Complete character table of S_n: rows and columns are indexed by the
/// partitions of n in `enumerate` order. Immutable once built.
#[derive(Debug)]
pub struct CharacterTable {
    n: usize,
    order: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<BigInt>>,
}

impl CharacterTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Partitions of n in the row/column order of the table.
    pub fn order(&self) -> &[Partition] {
        &self.order
    }

    pub fn value(&self, lambda: &Partition, mu: &Partition) -> &BigInt {
        &self.values[self.index[lambda]][self.index[mu]]
    }

    pub fn value_at(&self, lambda_idx: usize, mu_idx: usize) -> &BigInt {
        &self.values[lambda_idx][mu_idx]
    }

    pub fn index_of(&self, lambda: &Partition) -> usize {
        self.index[lambda]
    }

    /// Dimension of the irreducible indexed by `lambda`, i.e. its value on
    /// the identity class.
    pub fn dimension(&self, lambda: &Partition) -> &BigInt {
        let id = self.order.len() - 1; // (1^n) is the largest partition
        &self.values[self.index[lambda]][id]
    }
}

/// Configured table size limit: the HILBCUP_MAX_N environment variable,
/// defaulting to 14.
pub fn max_table_n() -> usize {
    std::env::var("HILBCUP_MAX_N")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_N)
}

/// The character table of S_n, computed once per n and cached. Callers
/// observe either no table or a complete immutable one.
pub fn table(n: usize) -> Result<Arc<CharacterTable>> {
    let limit = max_table_n();
    if n > limit {
        return Err(Error::BoundExceeded { n, limit });
    }
    static TABLES: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
    let cache = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("table cache poisoned");
    if let Some(t) = guard.get(&n) {
        return Ok(Arc::clone(t));
    }
    let t = Arc::new(build_table(n));
    guard.insert(n, Arc::clone(&t));
    Ok(t)
}

fn build_table(n: usize) -> CharacterTable {
    let order = enumerate(n);
    let index: HashMap<Partition, usize> = order
        .iter()
        .enumerate()
        .map(|(i, l)| (l.clone(), i))
        .collect();
    let mut memo = HashMap::new();
    let values = order
        .iter()
        .map(|lambda| {
            order
                .iter()
                .map(|mu| mn_recurse(lambda.parts(), mu.parts(), &mut memo))
                .collect()
        })
        .collect();
    CharacterTable {
        n,
        order,
        index,
        values,
    }
}

/// Murnaghan-Nakayama evaluation of the irreducible character chi^lambda on
/// the class of cycle type mu.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    if lambda.weight() != mu.weight() {
        return Err(Error::WeightMismatch {
            left: lambda.weight(),
            right: mu.weight(),
        });
    }
    let mut memo = HashMap::new();
    Ok(mn_recurse(lambda.parts(), mu.parts(), &mut memo))
}

type Memo = HashMap<(Vec<usize>, Vec<usize>), BigInt>;

fn mn_recurse(lambda: &[usize], mu: &[usize], memo: &mut Memo) -> BigInt {
    if mu.is_empty() {
        debug_assert!(lambda.is_empty());
        return BigInt::one();
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let m = mu[0];
    let mut total = BigInt::zero();
    for (sign, rest) in strip_removals(lambda, m) {
        let sub = mn_recurse(&rest, &mu[1..], memo);
        if sign > 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// All ways to remove a border strip of length `m` from `lambda`: pairs of
/// (-1)^height and the remaining partition.
fn strip_removals(lambda: &[usize], m: usize) -> Vec<(i8, Vec<usize>)> {
    let len = lambda.len();
    let beta: Vec<usize> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (len - 1 - i))
        .collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < m {
            continue;
        }
        let target = b - m;
        if beta.contains(&target) {
            continue;
        }
        // beta is strictly decreasing, so entries between target and b sit
        // at indices > i; their count is the strip height
        let height = beta[i + 1..].iter().filter(|&&x| x > target).count();
        let mut nb = beta.clone();
        nb[i] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let mut rest: Vec<usize> = nb
            .iter()
            .enumerate()
            .map(|(k, &bk)| bk - (len - 1 - k))
            .collect();
        while rest.last() == Some(&0) {
            rest.pop();
        }
        let sign = if height % 2 == 0 { 1 } else { -1 };
        out.push((sign, rest));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::factorial;
    use num_rational::BigRational;

    fn p(parts: &[usize]) -> Partition {
        Partition::from(parts)
    }

    /// Independent oracle: the standard representation of S_3 is the
    /// permutation action on {1,2,3} minus the trivial summand, so its
    /// character is (number of fixed points) - 1.
    fn s3_standard_character(mu: &Partition) -> BigInt {
        let fixed = mu.multiplicity(1);
        BigInt::from(fixed as i64 - 1)
    }

    #[test]
    fn trivial_and_sign_characters() {
        for n in 1..=8 {
            for mu in enumerate(n) {
                assert_eq!(mn_character(&p(&[n]), &mu).unwrap(), BigInt::one());
                let sign = if mu.degree() % 2 == 0 { 1 } else { -1 };
                assert_eq!(
                    mn_character(&p(&vec![1; n]), &mu).unwrap(),
                    BigInt::from(sign)
                );
            }
        }
    }

    #[test]
    fn standard_rep_of_s3() {
        for mu in enumerate(3) {
            assert_eq!(
                mn_character(&p(&[2, 1]), &mu).unwrap(),
                s3_standard_character(&mu),
                "mu={mu}"
            );
        }
        // frozen values from the oracle
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[3])).unwrap(), BigInt::from(-1));
        assert_eq!(
            mn_character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(),
            BigInt::from(2)
        );
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[2, 1])).unwrap(), BigInt::zero());
    }

    #[test]
    fn weight_mismatch_is_rejected() {
        assert!(matches!(
            mn_character(&p(&[2]), &p(&[2, 1])),
            Err(Error::WeightMismatch { .. })
        ));
    }

    #[test]
    fn table_small() {
        let t1 = table(1).unwrap();
        assert_eq!(t1.order().len(), 1);
        assert_eq!(t1.value(&p(&[1]), &p(&[1])), &BigInt::one());

        let t3 = table(3).unwrap();
        let dims: Vec<BigInt> = t3
            .order()
            .iter()
            .map(|l| t3.dimension(l).clone())
            .collect();
        // order is (3), (2,1), (1^3)
        assert_eq!(dims, vec![BigInt::from(1), BigInt::from(2), BigInt::from(1)]);
    }

    #[test]
    fn burnside_sum_of_squares_n5() {
        let t = table(5).unwrap();
        let total: BigInt = t.order().iter().map(|l| t.dimension(l).pow(2)).sum();
        assert_eq!(total, BigInt::from(120));
    }

    #[test]
    fn row_orthogonality_up_to_10() {
        for n in 1..=10 {
            let t = table(n).unwrap();
            let zs: Vec<BigRational> = t
                .order()
                .iter()
                .map(|mu| BigRational::from_integer(mu.z_value()))
                .collect();
            for (a, la) in t.order().iter().enumerate() {
                for b in a..t.order().len() {
                    let mut acc = BigRational::zero();
                    for m in 0..t.order().len() {
                        let prod = t.value_at(a, m) * t.value_at(b, m);
                        acc += BigRational::from_integer(prod) / &zs[m];
                    }
                    let expected = if a == b {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    };
                    assert_eq!(acc, expected, "n={n} rows {la} vs {}", t.order()[b]);
                }
            }
        }
    }

    #[test]
    fn column_orthogonality_up_to_10() {
        for n in 1..=10 {
            let t = table(n).unwrap();
            let k = t.order().len();
            for a in 0..k {
                for b in a..k {
                    let mut acc = BigInt::zero();
                    for l in 0..k {
                        acc += t.value_at(l, a) * t.value_at(l, b);
                    }
                    let expected = if a == b {
                        t.order()[a].z_value()
                    } else {
                        BigInt::zero()
                    };
                    assert_eq!(acc, expected, "n={n} cols {a},{b}");
                }
            }
        }
    }

    #[test]
    fn bound_is_enforced() {
        let limit = max_table_n();
        assert!(matches!(
            table(limit + 1),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn dimensions_match_hook_lengths_n6() {
        // n!/ (product of hooks) for a couple of shapes of S_6
        let t = table(6).unwrap();
        // lambda = (4,2): hooks 5,4,2,1 / 2,1 -> 720/80 = 9
        assert_eq!(t.dimension(&p(&[4, 2])), &BigInt::from(9));
        // lambda = (3,2,1): hooks 5,3,1/3,1/1 -> 720/45 = 16
        assert_eq!(t.dimension(&p(&[3, 2, 1])), &BigInt::from(16));
        let _ = factorial(6);
    }
}
