//! The ring of integer class functions on S_n with its convolution and
//! graded cup products.
//!
//! A class function is stored sparsely in the basis of class indicator
//! sums chi_lambda. Degrees come from the transposition word length
//! deg(pi) = n - (number of cycles); convolution respects the associated
//! filtration, and the cup product keeps exactly the terms where degrees
//! add.

pub mod groupring;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::character;
use crate::error::{Error, Result};
use crate::partition::{enumerate, factorial, Partition};
use groupring::Permutation;

/// Coefficient rings for class functions: the integers for the chi-basis
/// proper, the rationals where identities carry 1/n! normalizations.
pub trait Coeff:
    Clone
    + Eq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + std::ops::Neg<Output = Self>
    + std::ops::Sub<Output = Self>
    + From<BigInt>
    + Send
    + Sync
    + 'static
{
}

impl<T> Coeff for T where
    T: Clone
        + Eq
        + fmt::Debug
        + fmt::Display
        + Zero
        + One
        + std::ops::Neg<Output = T>
        + std::ops::Sub<Output = T>
        + From<BigInt>
        + Send
        + Sync
        + 'static
{
}

/// A class function on S_n, sparse in the chi_lambda basis. Zero
/// coefficients are never stored; the weight n is carried even by the zero
/// function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction<C = BigInt> {
    n: usize,
    coeffs: BTreeMap<Partition, C>,
}

pub type IntClassFunction = ClassFunction<BigInt>;
pub type RatClassFunction = ClassFunction<BigRational>;

impl<C: Coeff> ClassFunction<C> {
    pub fn zero(n: usize) -> Self {
        ClassFunction {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis element chi_lambda.
    pub fn basis(lambda: Partition) -> Self {
        let n = lambda.weight();
        let mut coeffs = BTreeMap::new();
        coeffs.insert(lambda, C::one());
        ClassFunction { n, coeffs }
    }

    pub fn from_pairs(
        n: usize,
        pairs: impl IntoIterator<Item = (Partition, C)>,
    ) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for (lambda, c) in pairs {
            if lambda.weight() != n {
                return Err(Error::WeightMismatch {
                    left: n,
                    right: lambda.weight(),
                });
            }
            if c.is_zero() {
                continue;
            }
            let entry = coeffs.entry(lambda).or_insert_with(C::zero);
            *entry = entry.clone() + c;
        }
        coeffs.retain(|_, c: &mut C| !c.is_zero());
        Ok(ClassFunction { n, coeffs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> C {
        self.coeffs.get(lambda).cloned().unwrap_or_else(C::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.coeffs.iter()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn add_term(&mut self, lambda: Partition, c: C) {
        debug_assert_eq!(lambda.weight(), self.n);
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(lambda).or_insert_with(C::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_weight(other)?;
        let mut out = self.clone();
        for (l, c) in &other.coeffs {
            out.add_term(l.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        ClassFunction {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .map(|(l, c)| (l.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, by: &C) -> Self {
        if by.is_zero() {
            return ClassFunction::zero(self.n);
        }
        ClassFunction {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .map(|(l, c)| (l.clone(), c.clone() * by.clone()))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// The degree-d slice: terms supported on classes of degree d.
    pub fn degree_component(&self, d: usize) -> Self {
        ClassFunction {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(l, _)| l.degree() == d)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    /// Degrees that actually occur in the support.
    pub fn degrees(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self.coeffs.keys().map(|l| l.degree()).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    fn check_weight(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::WeightMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }
}

impl ClassFunction<BigInt> {
    /// Reinterprets the coefficients in a larger ring.
    pub fn cast<C: Coeff>(&self) -> ClassFunction<C> {
        ClassFunction {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .map(|(l, c)| (l.clone(), C::from(c.clone())))
                .collect(),
        }
    }
}

impl ClassFunction<BigRational> {
    /// Converts back to integer coefficients; `None` if any coefficient is
    /// not an integer.
    pub fn to_integer(&self) -> Option<ClassFunction<BigInt>> {
        let mut coeffs = BTreeMap::new();
        for (l, c) in &self.coeffs {
            if !c.is_integer() {
                return None;
            }
            coeffs.insert(l.clone(), c.to_integer());
        }
        Some(ClassFunction {
            n: self.n,
            coeffs,
        })
    }
}

impl<C: Coeff> fmt::Display for ClassFunction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0 (weight {})", self.n);
        }
        for (i, (l, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*chi{l}")?;
        }
        Ok(())
    }
}

/// Engine selection for products: explicit enumeration, the character
/// formula, or an automatic size-based choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    BruteForce,
    Character,
    Auto,
}

impl Engine {
    /// Auto resolves to brute force for n <= 5 and the character formula
    /// beyond that.
    fn resolve(self, n: usize) -> Engine {
        match self {
            Engine::Auto => {
                if n <= 5 {
                    Engine::BruteForce
                } else {
                    Engine::Character
                }
            }
            other => other,
        }
    }
}

impl std::str::FromStr for Engine {
    type Err = Error;
    fn from_str(s: &str) -> Result<Engine> {
        match s {
            "bruteforce" => Ok(Engine::BruteForce),
            "character" => Ok(Engine::Character),
            "auto" => Ok(Engine::Auto),
            other => Err(Error::InvalidInput(format!("unknown engine: {other}"))),
        }
    }
}

/// Structure constants of the convolution product: the map nu -> a, where
/// a is the number of pairs (a, b) with a of type lambda, b of type mu and
/// ab equal to one fixed permutation of type nu. Both engines return the
/// same exact integers.
pub fn structure_constants(
    lambda: &Partition,
    mu: &Partition,
    engine: Engine,
) -> Result<Arc<BTreeMap<Partition, BigInt>>> {
    if lambda.weight() != mu.weight() {
        return Err(Error::WeightMismatch {
            left: lambda.weight(),
            right: mu.weight(),
        });
    }
    let n = lambda.weight();
    match engine.resolve(n) {
        Engine::BruteForce => Ok(Arc::new(scc_bruteforce(lambda, mu))),
        Engine::Character => scc_character_cached(lambda, mu),
        Engine::Auto => unreachable!(),
    }
}

fn scc_bruteforce(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, BigInt> {
    let n = lambda.weight();
    let class_lambda: Vec<Permutation> = Permutation::all(n)
        .into_iter()
        .filter(|p| &p.cycle_type() == lambda)
        .collect();
    let mut out = BTreeMap::new();
    for nu in enumerate(n) {
        let rep = Permutation::of_cycle_type(&nu);
        let mut count: u64 = 0;
        for a in &class_lambda {
            if &a.inverse().compose(&rep).cycle_type() == mu {
                count += 1;
            }
        }
        if count > 0 {
            out.insert(nu, BigInt::from(count));
        }
    }
    out
}

type SccCache = Mutex<HashMap<(Partition, Partition), Arc<BTreeMap<Partition, BigInt>>>>;

fn scc_character_cached(
    lambda: &Partition,
    mu: &Partition,
) -> Result<Arc<BTreeMap<Partition, BigInt>>> {
    static CACHE: OnceLock<SccCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    // the constants are symmetric in (lambda, mu)
    let key = if lambda <= mu {
        (lambda.clone(), mu.clone())
    } else {
        (mu.clone(), lambda.clone())
    };
    if let Some(hit) = cache.lock().expect("scc cache poisoned").get(&key) {
        return Ok(Arc::clone(hit));
    }
    let computed = Arc::new(scc_character(&key.0, &key.1)?);
    cache
        .lock()
        .expect("scc cache poisoned")
        .insert(key, Arc::clone(&computed));
    Ok(computed)
}

/// Frobenius' formula: a_{lambda mu}^nu =
/// |C_lambda| |C_mu| / n! * sum_kappa chi(lambda) chi(mu) chi(nu) / dim.
fn scc_character(lambda: &Partition, mu: &Partition) -> Result<BTreeMap<Partition, BigInt>> {
    let n = lambda.weight();
    let t = character::table(n)?;
    let li = t.index_of(lambda);
    let mi = t.index_of(mu);
    let prefactor = BigRational::new(lambda.class_size() * mu.class_size(), factorial(n));
    let mut out = BTreeMap::new();
    for (ni, nu) in t.order().iter().enumerate() {
        let mut acc = BigRational::zero();
        for ki in 0..t.order().len() {
            let num = t.value_at(ki, li) * t.value_at(ki, mi) * t.value_at(ki, ni);
            if num.is_zero() {
                continue;
            }
            acc += BigRational::new(num, t.dimension(&t.order()[ki]).clone());
        }
        let a = &prefactor * acc;
        if a.is_zero() {
            continue;
        }
        if !a.is_integer() {
            return Err(Error::NonIntegerResult {
                lambda: lambda.clone(),
                mu: mu.clone(),
                nu: nu.clone(),
            });
        }
        out.insert(nu.clone(), a.to_integer());
    }
    Ok(out)
}

/// Convolution product, extended bilinearly from the structure constants.
pub fn convolve<C: Coeff>(
    f: &ClassFunction<C>,
    g: &ClassFunction<C>,
    engine: Engine,
) -> Result<ClassFunction<C>> {
    product(f, g, engine, false)
}

/// Graded cup product: the convolution with every output class whose
/// degree is not the sum of the input degrees discarded, term by term over
/// the homogeneous components.
pub fn cup<C: Coeff>(
    f: &ClassFunction<C>,
    g: &ClassFunction<C>,
    engine: Engine,
) -> Result<ClassFunction<C>> {
    product(f, g, engine, true)
}

fn product<C: Coeff>(
    f: &ClassFunction<C>,
    g: &ClassFunction<C>,
    engine: Engine,
    graded: bool,
) -> Result<ClassFunction<C>> {
    if f.n != g.n {
        return Err(Error::WeightMismatch {
            left: f.n,
            right: g.n,
        });
    }
    let mut out = ClassFunction::zero(f.n);
    for (lambda, cf) in &f.coeffs {
        for (mu, cg) in &g.coeffs {
            let constants = structure_constants(lambda, mu, engine)?;
            let target = lambda.degree() + mu.degree();
            for (nu, a) in constants.iter() {
                if graded && nu.degree() != target {
                    continue;
                }
                out.add_term(nu.clone(), cf.clone() * cg.clone() * C::from(a.clone()));
            }
        }
    }
    Ok(out)
}

/// The unit chi_{(1^n)} of both products.
pub fn unit(n: usize) -> IntClassFunction {
    ClassFunction::basis(Partition::new(vec![1; n]))
}

/// The sum of all transpositions, chi_{(2,1^{n-2})}; zero for n < 2.
pub fn tau(n: usize) -> IntClassFunction {
    if n < 2 {
        return ClassFunction::zero(n);
    }
    let mut parts = vec![1; n - 1];
    parts[0] = 2;
    ClassFunction::basis(Partition::new(parts))
}

/// The alternating character: sum over all classes of (-1)^degree times
/// the class indicator.
pub fn epsilon(n: usize) -> IntClassFunction {
    let pairs = enumerate(n).into_iter().map(|l| {
        let sign = if l.degree() % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        (l, sign)
    });
    ClassFunction::from_pairs(n, pairs).expect("weights match")
}

/// The degree-i homogeneous component of the alternating character.
pub fn epsilon_component(n: usize, i: usize) -> Result<IntClassFunction> {
    let top = n.saturating_sub(1);
    if i > top {
        return Err(Error::OutOfRange { n, degree: i });
    }
    Ok(epsilon(n).degree_component(i))
}

/// Restriction of class functions to S_{n-1}: removes one 1-part from each
/// class, killing classes without fixed points.
pub fn restrict<C: Coeff>(f: &ClassFunction<C>) -> ClassFunction<C> {
    assert!(f.n >= 1, "restriction needs n >= 1");
    let mut out = ClassFunction::zero(f.n - 1);
    for (lambda, c) in &f.coeffs {
        if let Some(rest) = lambda.without_part(1) {
            out.add_term(rest, c.clone());
        }
    }
    out
}

/// The induction operator r_m, in closed form on the chi-basis:
/// r_m(chi_mu) = m * (alpha_m(mu) + 1) * chi_{mu + {m}}. Multiplication by
/// p_m on the power-sum side corresponds to exactly this map.
pub fn induce_r<C: Coeff>(m: usize, f: &ClassFunction<C>) -> ClassFunction<C> {
    assert!(m >= 1);
    let mut out = ClassFunction::zero(f.n + m);
    for (mu, c) in &f.coeffs {
        let factor = BigInt::from(m * (mu.multiplicity(m) + 1));
        out.add_term(mu.with_part(m), c.clone() * C::from(factor));
    }
    out
}

/// Both sides of the commutation identity between the alternating
/// character and r_1.
#[derive(Debug, Clone)]
pub struct EpsCommutatorWitness<C> {
    pub holds: bool,
    pub lhs: ClassFunction<C>,
    pub rhs: ClassFunction<C>,
}

/// Checks eps_{n+1} cup r_1(f) - r_1(eps_n cup f) =
/// -tau_{n+1} cup r_1(eps_n cup f) + r_1(tau_n cup eps_n cup f) exactly,
/// returning both sides.
pub fn verify_eps_commutator<C: Coeff>(
    f: &ClassFunction<C>,
    engine: Engine,
) -> Result<EpsCommutatorWitness<C>> {
    let n = f.n;
    let eps_n = epsilon(n).cast::<C>();
    let eps_n1 = epsilon(n + 1).cast::<C>();
    let tau_n = tau(n).cast::<C>();
    let tau_n1 = tau(n + 1).cast::<C>();

    let eps_f = cup(&eps_n, f, engine)?;
    let r1_f = induce_r(1, f);
    let r1_eps_f = induce_r(1, &eps_f);

    let lhs = cup(&eps_n1, &r1_f, engine)?.sub(&r1_eps_f)?;
    let tau_eps_f = cup(&tau_n, &eps_f, engine)?;
    let rhs = cup(&tau_n1, &r1_eps_f, engine)?
        .neg()
        .add(&induce_r(1, &tau_eps_f))?;
    Ok(EpsCommutatorWitness {
        holds: lhs == rhs,
        lhs,
        rhs,
    })
}
