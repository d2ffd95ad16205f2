//! The bigraded polynomial ring Q[p_1, p_2, ...] in power-sum variables.
//!
//! The variable p_m has conformal weight m and cohomological degree m - 1.
//! `phi` identifies class functions on S_n with the weight-n slice: the
//! class indicator of cycle type lambda goes to its monomial divided by
//! the centralizer order z(lambda).

pub mod ops;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::classalg::{ClassFunction, Coeff, RatClassFunction};
use crate::error::{Error, Result};
use crate::partition::{enumerate, Partition};

/// A power-sum monomial, stored as the exponent vector of p_1, p_2, ...
/// with trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    /// The variable p_i (i >= 1).
    pub fn var(i: usize) -> Self {
        assert!(i >= 1);
        let mut exps = vec![0; i];
        exps[i - 1] = 1;
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, i: usize) -> u32 {
        assert!(i >= 1);
        self.exps.get(i - 1).copied().unwrap_or(0)
    }

    /// Variables with positive exponent, as (index, exponent) pairs.
    pub fn vars(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (i + 1, e))
    }

    /// Conformal weight: sum of i * e_i.
    pub fn weight(&self) -> usize {
        self.vars().map(|(i, e)| i * e as usize).sum()
    }

    /// Cohomological degree: sum of (i - 1) * e_i.
    pub fn degree(&self) -> usize {
        self.vars().map(|(i, e)| (i - 1) * e as usize).sum()
    }

    /// Total exponent, i.e. the length of the underlying partition.
    pub fn total_exponent(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let len = self.exps.len().max(other.exps.len());
        let mut exps = vec![0; len];
        for (i, e) in exps.iter_mut().enumerate() {
            *e = self.exps.get(i).copied().unwrap_or(0) + other.exps.get(i).copied().unwrap_or(0);
        }
        Monomial { exps }
    }

    pub fn mul_var(&self, i: usize, k: u32) -> Monomial {
        assert!(i >= 1);
        let mut exps = self.exps.clone();
        if exps.len() < i {
            exps.resize(i, 0);
        }
        exps[i - 1] += k;
        Monomial { exps }
    }

    /// Divides by p_i once; `None` if p_i does not occur.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exponent(i) == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[i - 1] -= 1;
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Some(Monomial { exps })
    }

    /// Builds a monomial from (index, exponent) pairs; indices must be
    /// positive, repeats accumulate.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u32)>) -> Monomial {
        let mut m = Monomial::one();
        for (i, e) in pairs {
            if e > 0 {
                m = m.mul_var(i, e);
            }
        }
        m
    }

    /// The monomial whose exponent of p_i is the multiplicity of i.
    pub fn from_partition(lambda: &Partition) -> Monomial {
        let exps: Vec<u32> = lambda
            .multiplicities()
            .into_iter()
            .map(|a| a as u32)
            .collect();
        Monomial { exps }
    }

    pub fn to_partition(&self) -> Partition {
        let mut parts = Vec::new();
        for (i, e) in self.vars() {
            parts.extend(std::iter::repeat_n(i, e as usize));
        }
        Partition::new(parts)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Weight first, then lexicographic on the exponent vectors.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (k, (i, e)) in self.vars().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "p{i}")?;
            } else {
                write!(f, "p{i}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial in the power sums with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl PPoly {
    pub fn zero() -> Self {
        PPoly::default()
    }

    pub fn one() -> Self {
        PPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        PPoly { terms }
    }

    pub fn var(i: usize) -> Self {
        PPoly::monomial(Monomial::var(i), BigRational::one())
    }

    pub fn monomial(m: Monomial, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        PPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add(&self, other: &PPoly) -> PPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &PPoly) -> PPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PPoly {
        PPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, by: &BigRational) -> PPoly {
        if by.is_zero() {
            return PPoly::zero();
        }
        PPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * by))
                .collect(),
        }
    }

    pub fn mul(&self, other: &PPoly) -> PPoly {
        let mut out = PPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    /// Multiplication by the variable p_i.
    pub fn mul_var(&self, i: usize) -> PPoly {
        PPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul_var(i, 1), c.clone()))
                .collect(),
        }
    }

    /// Partial derivative with respect to p_i.
    pub fn derivative(&self, i: usize) -> PPoly {
        let mut out = PPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e == 0 {
                continue;
            }
            out.add_term(
                m.div_var(i).expect("exponent checked"),
                c * BigRational::from_integer(BigInt::from(e)),
            );
        }
        out
    }

    pub fn pow(&self, k: usize) -> PPoly {
        let mut out = PPoly::one();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Largest conformal weight among the terms; 0 for the zero polynomial.
    pub fn max_weight(&self) -> usize {
        self.terms.keys().map(|m| m.weight()).max().unwrap_or(0)
    }

    /// The conformal weight if every term shares it.
    pub fn homogeneous_weight(&self) -> Result<Option<usize>> {
        let mut seen: Option<usize> = None;
        for m in self.terms.keys() {
            match seen {
                None => seen = Some(m.weight()),
                Some(w) if w == m.weight() => {}
                Some(w) => {
                    return Err(Error::MixedWeight {
                        first: w,
                        second: m.weight(),
                    })
                }
            }
        }
        Ok(seen)
    }

    /// Terms of the given cohomological degree.
    pub fn degree_component(&self, d: usize) -> PPoly {
        PPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for PPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

/// All monomials of conformal weight n, in the partition enumeration
/// order. These are a basis of the weight-n slice.
pub fn weight_basis(n: usize) -> Vec<Monomial> {
    enumerate(n)
        .iter()
        .map(Monomial::from_partition)
        .collect()
}

/// The isomorphism onto the power-sum side: chi_lambda goes to its
/// monomial divided by z(lambda), extended linearly.
pub fn phi<C>(f: &ClassFunction<C>) -> PPoly
where
    C: Coeff + Into<BigRational>,
{
    let mut out = PPoly::zero();
    for (lambda, c) in f.iter() {
        let m = Monomial::from_partition(lambda);
        let coeff: BigRational = c.clone().into();
        out.add_term(m, coeff / BigRational::from_integer(lambda.z_value()));
    }
    out
}

/// Inverse of `phi` on the weight-n slice. Errors when the polynomial is
/// not homogeneous of weight n.
pub fn phi_inverse(q: &PPoly, n: usize) -> Result<RatClassFunction> {
    let mut out = ClassFunction::zero(n);
    for (m, c) in q.terms() {
        if m.weight() != n {
            return Err(Error::MixedWeight {
                first: n,
                second: m.weight(),
            });
        }
        let lambda = m.to_partition();
        let z = BigRational::from_integer(lambda.z_value());
        out.add_term(lambda, c * z);
    }
    Ok(out)
}
