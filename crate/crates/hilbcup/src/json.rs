//! JSON wire formats for the documented interfaces.
//!
//! All coefficients travel as decimal strings so no fixed-width integer
//! ceiling applies; rationals use "p/q". Emission is canonical: maps are
//! ordered, so identical values serialize to identical bytes.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::classalg::{ClassFunction, Coeff};
use crate::error::{Error, Result};
use crate::hilbert::ChernPoly;
use crate::partition::Partition;
use crate::symfun::{Monomial, PPoly};

/// Coefficients with a canonical decimal-string form.
pub trait CoeffString: Coeff {
    fn to_coeff_string(&self) -> String;
    fn from_coeff_string(s: &str) -> Result<Self>;
}

impl CoeffString for BigInt {
    fn to_coeff_string(&self) -> String {
        self.to_string()
    }

    fn from_coeff_string(s: &str) -> Result<BigInt> {
        s.parse()
            .map_err(|_| Error::InvalidInput(format!("not an integer: {s:?}")))
    }
}

impl CoeffString for BigRational {
    fn to_coeff_string(&self) -> String {
        if self.denom().is_one() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }

    fn from_coeff_string(s: &str) -> Result<BigRational> {
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let n: BigInt = num
            .parse()
            .map_err(|_| Error::InvalidInput(format!("not a rational: {s:?}")))?;
        let d: BigInt = den
            .parse()
            .map_err(|_| Error::InvalidInput(format!("not a rational: {s:?}")))?;
        if d == BigInt::from(0) {
            return Err(Error::InvalidInput(format!("zero denominator: {s:?}")));
        }
        Ok(BigRational::new(n, d))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassFunctionJson {
    pub n: usize,
    pub coeffs: Vec<ClassFunctionTerm>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassFunctionTerm {
    pub partition: Partition,
    pub value: String,
}

pub fn class_function_to_json<C: CoeffString>(f: &ClassFunction<C>) -> ClassFunctionJson {
    ClassFunctionJson {
        n: f.n(),
        coeffs: f
            .iter()
            .map(|(l, c)| ClassFunctionTerm {
                partition: l.clone(),
                value: c.to_coeff_string(),
            })
            .collect(),
    }
}

pub fn class_function_from_json<C: CoeffString>(j: &ClassFunctionJson) -> Result<ClassFunction<C>> {
    ClassFunction::from_pairs(
        j.n,
        j.coeffs
            .iter()
            .map(|t| Ok((t.partition.clone(), C::from_coeff_string(&t.value)?)))
            .collect::<Result<Vec<_>>>()?,
    )
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PPolyTerm {
    pub powers: Vec<(usize, u32)>,
    pub coeff: String,
}

pub fn ppoly_to_json(q: &PPoly) -> Vec<PPolyTerm> {
    q.terms()
        .map(|(m, c)| PPolyTerm {
            powers: m.vars().collect(),
            coeff: c.to_coeff_string(),
        })
        .collect()
}

pub fn ppoly_from_json(terms: &[PPolyTerm]) -> Result<PPoly> {
    let mut out = PPoly::zero();
    for t in terms {
        for &(i, _) in &t.powers {
            if i == 0 {
                return Err(Error::InvalidInput("power-sum index must be >= 1".into()));
            }
        }
        out.add_term(
            Monomial::from_pairs(t.powers.iter().copied()),
            BigRational::from_coeff_string(&t.coeff)?,
        );
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChernPolyTerm {
    pub exponents: Vec<(usize, u32)>,
    pub coeff: String,
}

pub fn chern_poly_to_json(p: &ChernPoly) -> Vec<ChernPolyTerm> {
    p.terms()
        .map(|(m, c)| ChernPolyTerm {
            exponents: m.vars().collect(),
            coeff: c.to_string(),
        })
        .collect()
}

pub fn chern_poly_from_json(terms: &[ChernPolyTerm]) -> Result<ChernPoly> {
    let mut out = ChernPoly::zero();
    for t in terms {
        for &(i, _) in &t.exponents {
            if i == 0 {
                return Err(Error::InvalidInput("chern index must be >= 1".into()));
            }
        }
        out.add_term(
            Monomial::from_pairs(t.exponents.iter().copied()),
            BigInt::from_coeff_string(&t.coeff)?,
        );
    }
    Ok(out)
}
