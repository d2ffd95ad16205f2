//! Exact linear algebra over the rationals and the integers.
//!
//! Everything here works on small dense matrices: rank and solving use
//! rational Gaussian elimination, determinants use fraction-free Bareiss
//! elimination after clearing row denominators, and the lattice checks use
//! Smith normal form over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense matrix in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone + Zero> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }
}

impl<T> std::ops::Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

/// Rank over the rationals by Gaussian elimination.
pub fn rank(m: &Mat<BigRational>) -> usize {
    let mut a = m.clone();
    let mut rank = 0;
    let mut col = 0;
    while rank < a.rows && col < a.cols {
        let pivot = (rank..a.rows).find(|&i| !a[(i, col)].is_zero());
        let Some(p) = pivot else {
            col += 1;
            continue;
        };
        swap_rows(&mut a, rank, p);
        for i in (rank + 1)..a.rows {
            if a[(i, col)].is_zero() {
                continue;
            }
            let factor = &a[(i, col)] / &a[(rank, col)];
            for j in col..a.cols {
                let sub = &factor * &a[(rank, j)];
                let val = &a[(i, j)] - sub;
                a[(i, j)] = val;
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

/// Solves the square system `a * x = b` exactly. Returns `None` when `a`
/// is singular.
pub fn solve(a: &Mat<BigRational>, b: &[BigRational]) -> Option<Vec<BigRational>> {
    assert_eq!(a.rows, a.cols);
    assert_eq!(a.rows, b.len());
    let n = a.rows;
    // augmented elimination
    let mut m = Mat::zeros(n, n + 1);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = a[(i, j)].clone();
        }
        m[(i, n)] = b[i].clone();
    }
    for col in 0..n {
        let pivot = (col..n).find(|&i| !m[(i, col)].is_zero())?;
        swap_rows(&mut m, col, pivot);
        for i in (col + 1)..n {
            if m[(i, col)].is_zero() {
                continue;
            }
            let factor = &m[(i, col)] / &m[(col, col)];
            for j in col..=n {
                let sub = &factor * &m[(col, j)];
                let val = &m[(i, j)] - sub;
                m[(i, j)] = val;
            }
        }
    }
    let mut x = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = m[(i, n)].clone();
        for j in (i + 1)..n {
            acc -= &m[(i, j)] * &x[j];
        }
        x[i] = acc / &m[(i, i)];
    }
    Some(x)
}

fn swap_rows<T>(m: &mut Mat<T>, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..m.cols {
        m.data.swap(a * m.cols + j, b * m.cols + j);
    }
}

/// Fraction-free (Bareiss) determinant of an integer matrix.
pub fn det_bareiss(m: &Mat<BigInt>) -> BigInt {
    assert_eq!(m.rows, m.cols);
    let n = m.rows;
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..(n - 1) {
        if a[(k, k)].is_zero() {
            let Some(p) = ((k + 1)..n).find(|&i| !a[(i, k)].is_zero()) else {
                return BigInt::zero();
            };
            swap_rows(&mut a, k, p);
            sign = -sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = &a[(k, k)] * &a[(i, j)] - &a[(i, k)] * &a[(k, j)];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                a[(i, j)] = q;
            }
            a[(i, k)] = BigInt::zero();
        }
        prev = a[(k, k)].clone();
    }
    sign * a[(n - 1, n - 1)].clone()
}

/// Exact determinant of a rational matrix: rows are scaled integral first,
/// then Bareiss runs on the integer matrix.
pub fn det(m: &Mat<BigRational>) -> BigRational {
    assert_eq!(m.rows, m.cols);
    let n = m.rows;
    if n == 0 {
        return BigRational::one();
    }
    let mut scaled = Mat::zeros(n, n);
    let mut scale = BigInt::one();
    for i in 0..n {
        let mut lcm = BigInt::one();
        for j in 0..n {
            lcm = lcm.lcm(m[(i, j)].denom());
        }
        for j in 0..n {
            let v = &m[(i, j)] * BigRational::from_integer(lcm.clone());
            debug_assert!(v.is_integer());
            scaled[(i, j)] = v.to_integer();
        }
        scale *= lcm;
    }
    BigRational::new(det_bareiss(&scaled), scale)
}

/// Elementary divisors of an integer matrix: the nonzero diagonal of its
/// Smith normal form, each dividing the next, all positive.
pub fn elementary_divisors(m: &Mat<BigInt>) -> Vec<BigInt> {
    let mut a = m.clone();
    let mut divisors = Vec::new();
    let mut offset = 0;
    while offset < a.rows.min(a.cols) {
        // locate a nonzero entry of minimal absolute value in the block
        let mut best: Option<(usize, usize)> = None;
        for i in offset..a.rows {
            for j in offset..a.cols {
                if a[(i, j)].is_zero() {
                    continue;
                }
                match best {
                    None => best = Some((i, j)),
                    Some((bi, bj)) => {
                        if a[(i, j)].abs() < a[(bi, bj)].abs() {
                            best = Some((i, j));
                        }
                    }
                }
            }
        }
        let Some((bi, bj)) = best else {
            break; // block is zero
        };
        swap_rows(&mut a, offset, bi);
        swap_cols(&mut a, offset, bj);

        // clear the pivot row and column, restarting when a remainder
        // produces a smaller entry
        let mut clean = false;
        while !clean {
            clean = true;
            for i in (offset + 1)..a.rows {
                if a[(i, offset)].is_zero() {
                    continue;
                }
                let q = div_round(&a[(i, offset)], &a[(offset, offset)]);
                for j in offset..a.cols {
                    let sub = &q * &a[(offset, j)];
                    let val = &a[(i, j)] - sub;
                    a[(i, j)] = val;
                }
                if !a[(i, offset)].is_zero() {
                    swap_rows(&mut a, offset, i);
                    clean = false;
                }
            }
            for j in (offset + 1)..a.cols {
                if a[(offset, j)].is_zero() {
                    continue;
                }
                let q = div_round(&a[(offset, j)], &a[(offset, offset)]);
                for i in offset..a.rows {
                    let sub = &q * &a[(i, offset)];
                    let val = &a[(i, j)] - sub;
                    a[(i, j)] = val;
                }
                if !a[(offset, j)].is_zero() {
                    swap_cols(&mut a, offset, j);
                    clean = false;
                }
            }
        }

        // enforce divisibility of the remaining block by the pivot
        let pivot = a[(offset, offset)].clone();
        let mut disturbed = false;
        'scan: for i in (offset + 1)..a.rows {
            for j in (offset + 1)..a.cols {
                if !(&a[(i, j)] % &pivot).is_zero() {
                    // fold row i into the pivot row and redo this pivot
                    for jj in offset..a.cols {
                        let add = a[(i, jj)].clone();
                        a[(offset, jj)] += add;
                    }
                    disturbed = true;
                    break 'scan;
                }
            }
        }
        if disturbed {
            continue;
        }
        divisors.push(pivot.abs());
        offset += 1;
    }
    divisors
}

fn swap_cols<T>(m: &mut Mat<T>, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..m.rows {
        m.data.swap(i * m.cols + a, i * m.cols + b);
    }
}

/// Rounded integer division, so the remainder has at most half the pivot's
/// magnitude.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if &r.abs() * BigInt::from(2) > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + BigInt::one()
        } else {
            q - BigInt::one()
        }
    } else {
        q
    }
}
