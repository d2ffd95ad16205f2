//! The cohomology ring of Hilbert schemes of points in the plane, computed
//! on the class-function side.
//!
//! Fix a conformal weight n. Three families indexed by partitions of d
//! span the degree-d slice: the monomial images p_n^lambda of associated
//! classes, the cup monomials gamma_n^lambda in the slices of the
//! alternating character (Chern classes of the tautological sheaf), and
//! the operator monomials ch_n^lambda (its Chern character). Exact change
//! of basis between them yields determinant identities, integer relation
//! polynomials r_lambda, and a generators-and-relations presentation of
//! the ring with Betti numbers p(n, n-i).

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::classalg::{cup, epsilon_component, unit, ClassFunction, Engine, IntClassFunction};
use crate::error::{Error, Result};
use crate::linalg::{self, Mat};
use crate::partition::{count_into_parts, enumerate, factorial, Partition};
use crate::symfun::ops::d_component;
use crate::symfun::{phi, Monomial, PPoly};

/// The cup monomial of the alternating character's slices,
/// prod_i eps_n(i)^{alpha_i(lambda)}, computed in the class algebra.
/// Slices of degree >= n are zero.
pub fn epsilon_monomial(
    lambda: &Partition,
    n: usize,
    engine: Engine,
) -> Result<IntClassFunction> {
    let mut acc = unit(n);
    for (idx, alpha) in lambda.multiplicities().into_iter().enumerate() {
        if alpha == 0 {
            continue;
        }
        let i = idx + 1;
        let eps_i = if i + 1 > n {
            ClassFunction::zero(n)
        } else {
            epsilon_component(n, i)?
        };
        for _ in 0..alpha {
            acc = cup(&acc, &eps_i, engine)?;
            if acc.is_zero() {
                return Ok(acc);
            }
        }
    }
    Ok(acc)
}

/// p_n^lambda: the image of the class indicator of the associated
/// partition.
pub fn basis_p(lambda: &Partition, n: usize) -> Result<PPoly> {
    let assoc = lambda.associate(n)?;
    Ok(phi(&ClassFunction::<BigInt>::basis(assoc)))
}

/// gamma_n^lambda: the image of the epsilon cup monomial.
pub fn basis_gamma(lambda: &Partition, n: usize, engine: Engine) -> Result<PPoly> {
    Ok(phi(&epsilon_monomial(lambda, n, engine)?))
}

/// ch_n^lambda = prod_i D_i^{alpha_i} (p_1^n / n!).
pub fn basis_ch(lambda: &Partition, n: usize) -> PPoly {
    let start = PPoly::monomial(
        Monomial::from_partition(&Partition::new(vec![1; n])),
        BigRational::new(BigInt::one(), factorial(n)),
    );
    lambda
        .parts()
        .iter()
        .fold(start, |q, &i| d_component(i, &q))
}

/// Exact change-of-basis matrix between two of the degree-d families at
/// weight n. Rows and columns are indexed by `index` in the declared
/// order; the entry at (mu, lambda) is the mu-coordinate of the lambda-th
/// target vector.
#[derive(Debug, Clone)]
pub struct BasisMatrix {
    pub d: usize,
    pub n: usize,
    pub index: Vec<Partition>,
    entries: Mat<BigRational>,
}

impl BasisMatrix {
    pub fn entry(&self, mu: &Partition, lambda: &Partition) -> &BigRational {
        let row = self.index.iter().position(|x| x == mu).expect("row index");
        let col = self
            .index
            .iter()
            .position(|x| x == lambda)
            .expect("column index");
        &self.entries[(row, col)]
    }

    pub fn size(&self) -> usize {
        self.index.len()
    }

    /// Exact determinant via fraction-free elimination.
    pub fn determinant(&self) -> BigRational {
        linalg::det(&self.entries)
    }

    pub fn abs_determinant(&self) -> BigRational {
        self.determinant().abs()
    }

    pub fn is_lower_triangular(&self) -> bool {
        let k = self.size();
        (0..k).all(|row| ((row + 1)..k).all(|col| self.entries[(row, col)].is_zero()))
    }

    pub fn diagonal(&self) -> Vec<BigRational> {
        (0..self.size()).map(|i| self.entries[(i, i)].clone()).collect()
    }
}

/// Monomials of weight n and cohomological degree d: the coordinates used
/// for all slice computations.
fn slice_monomials(n: usize, d: usize) -> (Vec<Monomial>, HashMap<Monomial, usize>) {
    let monos: Vec<Monomial> = enumerate(n)
        .iter()
        .filter(|l| l.degree() == d)
        .map(Monomial::from_partition)
        .collect();
    let index = monos
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect();
    (monos, index)
}

fn coordinates(q: &PPoly, index: &HashMap<Monomial, usize>, dim: usize) -> Result<Vec<BigRational>> {
    let mut v = vec![BigRational::zero(); dim];
    for (m, c) in q.terms() {
        let Some(&i) = index.get(m) else {
            return Err(Error::CheckFailed(format!(
                "monomial {m} escapes the degree slice"
            )));
        };
        v[i] = c.clone();
    }
    Ok(v)
}

/// The matrix A with ch_n^lambda = sum_mu A_{mu lambda} gamma_n^mu,
/// indexed ascending in the multiplicity-lex order, which makes it lower
/// triangular.
pub fn matrix_a(d: usize, n: usize, engine: Engine) -> Result<BasisMatrix> {
    assert!(n >= 2 * d, "the gamma family is a basis only for n >= 2d");
    let order = enumerate(d);
    let (monos, mono_index) = slice_monomials(n, d);
    let dim = monos.len();
    let mut gamma_cols = Vec::with_capacity(order.len());
    for mu in &order {
        gamma_cols.push(coordinates(&basis_gamma(mu, n, engine)?, &mono_index, dim)?);
    }
    if dim != order.len() || linalg::rank(&Mat::from_rows(gamma_cols.clone())) != dim {
        return Err(Error::SingularBasis { d, n });
    }
    let mut g = Mat::zeros(dim, dim);
    for (col, gc) in gamma_cols.iter().enumerate() {
        for (row, v) in gc.iter().enumerate() {
            g[(row, col)] = v.clone();
        }
    }
    let mut entries = Mat::zeros(dim, dim);
    for (col, lambda) in order.iter().enumerate() {
        let b = coordinates(&basis_ch(lambda, n), &mono_index, dim)?;
        let x = linalg::solve(&g, &b).ok_or(Error::SingularBasis { d, n })?;
        for (row, v) in x.into_iter().enumerate() {
            entries[(row, col)] = v;
        }
    }
    Ok(BasisMatrix {
        d,
        n,
        index: order,
        entries,
    })
}

/// The matrix B with ch_n^lambda = sum_mu B_{mu lambda} p_n^mu, indexed
/// ascending in the associated-partition order, which makes it lower
/// triangular. The p family is diagonal in monomial coordinates, so no
/// solve is needed.
pub fn matrix_b(d: usize, n: usize) -> Result<BasisMatrix> {
    assert!(n >= 2 * d, "associated partitions need n >= 2d");
    let mut order = enumerate(d);
    order.sort_by(|a, b| a.assoc_compare(b).expect("equal weights"));
    let dim = order.len();
    let mut entries = Mat::zeros(dim, dim);
    for (col, lambda) in order.iter().enumerate() {
        let ch = basis_ch(lambda, n);
        let mut residual = ch.clone();
        for (row, mu) in order.iter().enumerate() {
            let assoc = mu.associate(n)?;
            let mono = Monomial::from_partition(&assoc);
            let c = ch.coeff(&mono);
            if c.is_zero() {
                continue;
            }
            let z = BigRational::from_integer(assoc.z_value());
            let coeff = &c * z;
            residual = residual.sub(&basis_p(mu, n)?.scale(&coeff));
            entries[(row, col)] = coeff;
        }
        if !residual.is_zero() {
            return Err(Error::CheckFailed(format!(
                "ch_{n}^{lambda} does not lie in the span of the p family"
            )));
        }
    }
    Ok(BasisMatrix {
        d,
        n,
        index: order,
        entries,
    })
}

/// |det A| predicted by the product formula
/// prod_{lambda of d} prod_i (1/(i-1)!)^{alpha_i}.
pub fn det_a_formula(d: usize) -> BigRational {
    let mut acc = BigRational::one();
    for lambda in enumerate(d) {
        for (idx, alpha) in lambda.multiplicities().into_iter().enumerate() {
            let i = idx + 1;
            for _ in 0..alpha {
                acc /= BigRational::from_integer(factorial(i - 1));
            }
        }
    }
    acc
}

/// |det B| predicted by the product formula
/// prod_{lambda of d} prod_i (1/i!)^{alpha_i} alpha_i!.
pub fn det_b_formula(d: usize) -> BigRational {
    let mut acc = BigRational::one();
    for lambda in enumerate(d) {
        for (idx, alpha) in lambda.multiplicities().into_iter().enumerate() {
            let i = idx + 1;
            for _ in 0..alpha {
                acc /= BigRational::from_integer(factorial(i));
            }
            acc *= BigRational::from_integer(factorial(alpha));
        }
    }
    acc
}

/// Polynomial in the formal Chern generators c_1, c_2, ... with integer
/// coefficients, keyed by exponent vectors. The weighted degree of a
/// monomial is sum_i i * e_i.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ChernPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl ChernPoly {
    pub fn zero() -> Self {
        ChernPoly::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// The common weighted degree of the terms, if homogeneous.
    pub fn weighted_degree(&self) -> Option<usize> {
        let mut seen = None;
        for m in self.terms.keys() {
            match seen {
                None => seen = Some(m.weight()),
                Some(w) if w == m.weight() => {}
                Some(_) => return None,
            }
        }
        seen
    }

    /// Evaluates in the class algebra of S_n by substituting the degree-i
    /// slice of the alternating character for c_i (zero for i >= n) and
    /// taking cup products.
    pub fn evaluate(&self, n: usize, engine: Engine) -> Result<IntClassFunction> {
        let mut acc = ClassFunction::zero(n);
        for (m, coeff) in &self.terms {
            let value = epsilon_monomial(&m.to_partition(), n, engine)?;
            acc = acc.add(&value.scale(coeff))?;
        }
        Ok(acc)
    }
}

impl fmt::Display for ChernPoly {
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
            let cm = chern_monomial_string(m);
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{cm}")?;
            } else {
                write!(f, "{a}*{cm}")?;
            }
        }
        Ok(())
    }
}

fn chern_monomial_string(m: &Monomial) -> String {
    let mut s = String::new();
    for (k, (i, e)) in m.vars().enumerate() {
        if k > 0 {
            s.push('*');
        }
        if e == 1 {
            s.push_str(&format!("c{i}"));
        } else {
            s.push_str(&format!("c{i}^{e}"));
        }
    }
    s
}

/// The relation polynomial r_lambda at an explicit weight n >= 2d:
/// expresses the image of the associated class in the gamma monomial
/// basis and substitutes c-monomials. Coefficients must come out integral.
pub fn relation_poly_at(lambda: &Partition, n: usize, engine: Engine) -> Result<ChernPoly> {
    let d = lambda.weight();
    assert!(d >= 1, "relations are indexed by nonempty partitions");
    assert!(n >= 2 * d);
    let order = enumerate(d);
    let (monos, mono_index) = slice_monomials(n, d);
    let dim = monos.len();
    let mut g = Mat::zeros(dim, order.len());
    for (col, mu) in order.iter().enumerate() {
        let coords = coordinates(&basis_gamma(mu, n, engine)?, &mono_index, dim)?;
        for (row, v) in coords.into_iter().enumerate() {
            g[(row, col)] = v;
        }
    }
    if dim != order.len() {
        return Err(Error::SingularBasis { d, n });
    }
    let target = coordinates(&basis_p(lambda, n)?, &mono_index, dim)?;
    let x = linalg::solve(&g, &target).ok_or(Error::SingularBasis { d, n })?;
    let mut poly = ChernPoly::zero();
    for (mu, coeff) in order.iter().zip(x) {
        if coeff.is_zero() {
            continue;
        }
        if !coeff.is_integer() {
            return Err(Error::NonIntegerCoefficient {
                lambda: lambda.clone(),
            });
        }
        poly.add_term(Monomial::from_partition(mu), coeff.to_integer());
    }
    Ok(poly)
}

/// r_lambda computed at the stable weight n = 2|lambda|.
pub fn relation_poly(lambda: &Partition, engine: Engine) -> Result<ChernPoly> {
    relation_poly_at(lambda, 2 * lambda.weight(), engine)
}

/// Generators-and-relations description of the weight-n cohomology ring.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub n: usize,
    pub degree_bound: usize,
    /// Generator indices: c_1 through c_{n-1}.
    pub generators: Vec<usize>,
    /// Relations (lambda, r_lambda) for all lambda with
    /// sum_i (i+1) alpha_i > n up to the degree bound.
    pub relations: Vec<(Partition, ChernPoly)>,
    pub betti: Vec<u64>,
}

/// Builds the presentation and verifies it on the class-algebra side:
/// every listed relation evaluates to zero, every feasible lambda
/// evaluates to its associated class.
pub fn presentation(n: usize, degree_bound: usize, engine: Engine) -> Result<Presentation> {
    assert!(n >= 1);
    assert!(degree_bound >= 1);
    let generators: Vec<usize> = (1..n).collect();
    let mut relations = Vec::new();
    for d in 1..=degree_bound {
        for lambda in enumerate(d) {
            let r = relation_poly(&lambda, engine)?;
            let value = r.evaluate(n, engine)?;
            if lambda.associate_threshold() > n {
                if !value.is_zero() {
                    return Err(Error::CheckFailed(format!(
                        "relation r_{lambda} evaluates to {value} at weight {n}"
                    )));
                }
                relations.push((lambda, r));
            } else {
                let expected =
                    ClassFunction::<BigInt>::basis(lambda.associate(n)?);
                if value != expected {
                    return Err(Error::CheckFailed(format!(
                        "r_{lambda} evaluates to {value}, expected {expected}"
                    )));
                }
            }
        }
    }
    Ok(Presentation {
        n,
        degree_bound,
        generators,
        relations,
        betti: betti(n),
    })
}

/// Betti numbers of the weight-n ring: p(n, n-i) for i = 0 .. n-1.
pub fn betti(n: usize) -> Vec<u64> {
    (0..n).map(|i| count_into_parts(n, n - i)).collect()
}

/// One degree of the graded rank and lattice check.
#[derive(Debug, Clone)]
pub struct GradedRankRow {
    pub d: usize,
    pub expected_dim: usize,
    pub rank: usize,
    pub divisors: Vec<BigInt>,
    pub pass: bool,
}

#[derive(Debug, Clone)]
pub struct GradedRankReport {
    pub n: usize,
    pub rows: Vec<GradedRankRow>,
    pub pass: bool,
}

/// For each degree d, checks that the evaluations of the degree-d
/// c-monomials span the degree-d slice: rank p(n, n-d) over the
/// rationals, and all elementary divisors 1 over the integers.
pub fn graded_rank_check(n: usize, degree_bound: usize, engine: Engine) -> Result<GradedRankReport> {
    let top = if n == 0 { 0 } else { degree_bound.min(n - 1) };
    let mut rows = Vec::new();
    for d in 0..=top {
        let slice: Vec<Partition> = enumerate(n)
            .into_iter()
            .filter(|l| l.degree() == d)
            .collect();
        let dim = slice.len();
        debug_assert_eq!(dim as u64, count_into_parts(n, n - d));
        let max_part = n.saturating_sub(1);
        let monomials: Vec<Partition> = enumerate(d)
            .into_iter()
            .filter(|mu| mu.largest_part() <= max_part)
            .collect();
        let mut int_rows: Vec<Vec<BigInt>> = Vec::new();
        for mu in &monomials {
            let value = epsilon_monomial(mu, n, engine)?;
            let mut row = vec![BigInt::zero(); dim];
            for (lam, c) in value.iter() {
                let i = slice.iter().position(|x| x == lam).ok_or_else(|| {
                    Error::CheckFailed("evaluation escapes its degree slice".into())
                })?;
                row[i] = c.clone();
            }
            int_rows.push(row);
        }
        if int_rows.is_empty() {
            int_rows.push(vec![BigInt::zero(); dim]);
        }
        let rat = Mat::from_rows(
            int_rows
                .iter()
                .map(|r| r.iter().map(|c| BigRational::from_integer(c.clone())).collect())
                .collect(),
        );
        let rank = linalg::rank(&rat);
        let divisors = linalg::elementary_divisors(&Mat::from_rows(int_rows));
        let pass = rank == dim && divisors.len() == dim && divisors.iter().all(|e| e.is_one());
        rows.push(GradedRankRow {
            d,
            expected_dim: dim,
            rank,
            divisors,
            pass,
        });
    }
    let pass = rows.iter().all(|r| r.pass);
    Ok(GradedRankReport { n, rows, pass })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::from(parts)
    }

    fn rat(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    fn ppoly(terms: &[(&[u32], (i64, i64))]) -> PPoly {
        let mut out = PPoly::zero();
        for &(exps, (num, den)) in terms {
            let mut m = Monomial::one();
            for (i, &e) in exps.iter().enumerate() {
                m = m.mul_var(i + 1, e);
            }
            out.add_term(m, rat(num, den));
        }
        out
    }

    #[test]
    fn basis_examples() {
        // p_4^{(1,1)} = phi(chi_{(2,2)}) = p2^2/8
        assert_eq!(basis_p(&p(&[1, 1]), 4).unwrap(), ppoly(&[(&[0, 2], (1, 8))]));

        // gamma_4^{(1,1)} = p1 p3 + p2^2/4
        assert_eq!(
            basis_gamma(&p(&[1, 1]), 4, Engine::Auto).unwrap(),
            ppoly(&[(&[1, 0, 1], (1, 1)), (&[0, 2], (1, 4))])
        );

        // ch_4^{(2)} = D_2(p1^4/24) = p1 p3/6
        assert_eq!(basis_ch(&p(&[2]), 4), ppoly(&[(&[1, 0, 1], (1, 6))]));

        assert!(matches!(
            basis_p(&p(&[1, 1]), 3),
            Err(Error::Infeasible { .. })
        ));
    }

    #[test]
    fn matrix_a_frozen_2_4() {
        let a = matrix_a(2, 4, Engine::Auto).unwrap();
        assert_eq!(a.entry(&p(&[1, 1]), &p(&[1, 1])), &rat(1, 1));
        assert_eq!(a.entry(&p(&[1, 1]), &p(&[2])), &rat(1, 2));
        assert_eq!(a.entry(&p(&[2]), &p(&[1, 1])), &rat(0, 1));
        assert_eq!(a.entry(&p(&[2]), &p(&[2])), &rat(-1, 1));
        assert!(a.is_lower_triangular());
        assert_eq!(a.abs_determinant(), rat(1, 1));
    }

    #[test]
    fn matrix_b_frozen_2_4() {
        let b = matrix_b(2, 4).unwrap();
        // index order ascending in the associated order: (1,1) then (2)
        assert_eq!(b.index, vec![p(&[1, 1]), p(&[2])]);
        assert_eq!(b.diagonal(), vec![rat(2, 1), rat(1, 2)]);
        assert_eq!(b.entry(&p(&[2]), &p(&[1, 1])), &rat(3, 1));
        assert!(b.is_lower_triangular());
        assert_eq!(b.abs_determinant(), rat(1, 1));
    }

    #[test]
    fn triangularity_and_diagonals_up_to_5() {
        for d in 1..=5 {
            let n = 2 * d;
            let a = matrix_a(d, n, Engine::Auto).unwrap();
            assert!(a.is_lower_triangular(), "A at d={d}");
            for (lambda, diag) in a.index.iter().zip(a.diagonal()) {
                let mut expected = BigRational::one();
                for (idx, alpha) in lambda.multiplicities().into_iter().enumerate() {
                    let i = idx + 1;
                    let sign = if (i - 1) % 2 == 0 { 1 } else { -1 };
                    for _ in 0..alpha {
                        expected *= BigRational::new(BigInt::from(sign), factorial(i - 1));
                    }
                }
                assert_eq!(diag, expected, "A diagonal at {lambda}");
            }
            let b = matrix_b(d, n).unwrap();
            assert!(b.is_lower_triangular(), "B at d={d}");
            for (lambda, diag) in b.index.iter().zip(b.diagonal()) {
                let mut expected = BigRational::one();
                for (idx, alpha) in lambda.multiplicities().into_iter().enumerate() {
                    let i = idx + 1;
                    for _ in 0..alpha {
                        expected *= BigRational::new(BigInt::one(), factorial(i));
                    }
                    expected *= BigRational::from_integer(factorial(alpha));
                }
                // the parity of the diagonal sign is i*alpha_i summed: the
                // absolute value is what the product formula pins down
                assert_eq!(diag.abs(), expected.abs(), "B diagonal at {lambda}");
            }
        }
    }

    #[test]
    fn determinants_d3() {
        let a = matrix_a(3, 6, Engine::Auto).unwrap();
        let b = matrix_b(3, 6).unwrap();
        assert_eq!(a.abs_determinant(), rat(1, 2));
        assert_eq!(b.abs_determinant(), rat(1, 2));
        assert_eq!(det_a_formula(3), rat(1, 2));
        assert_eq!(det_b_formula(3), rat(1, 2));
    }

    #[test]
    fn relation_polys_frozen() {
        let r1 = relation_poly(&p(&[1]), Engine::Auto).unwrap();
        assert_eq!(r1.to_string(), "-c1");

        let r11 = relation_poly(&p(&[1, 1]), Engine::Auto).unwrap();
        let mut expected = ChernPoly::zero();
        expected.add_term(Monomial::var(2), BigInt::from(3));
        expected.add_term(Monomial::var(1).mul(&Monomial::var(1)), BigInt::from(-1));
        assert_eq!(r11, expected);

        let r2 = relation_poly(&p(&[2]), Engine::Auto).unwrap();
        let mut expected = ChernPoly::zero();
        expected.add_term(Monomial::var(1).mul(&Monomial::var(1)), BigInt::one());
        expected.add_term(Monomial::var(2), BigInt::from(-2));
        assert_eq!(r2, expected);

        // weighted degree matches |lambda|
        assert_eq!(r11.weighted_degree(), Some(2));
    }

    #[test]
    fn relation_stability() {
        for d in 1..=5 {
            for lambda in enumerate(d) {
                let stable = relation_poly(&lambda, Engine::Auto).unwrap();
                for n in (2 * d)..=(2 * d + 3) {
                    assert_eq!(
                        relation_poly_at(&lambda, n, Engine::Auto).unwrap(),
                        stable,
                        "lambda={lambda} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn relation_evaluation_soundness_small() {
        for n in 1..=5 {
            for d in 1..=4 {
                for lambda in enumerate(d) {
                    let r = relation_poly(&lambda, Engine::Auto).unwrap();
                    let value = r.evaluate(n, Engine::Auto).unwrap();
                    if lambda.associate_threshold() > n {
                        assert!(value.is_zero(), "n={n} lambda={lambda}");
                    } else {
                        let expected = ClassFunction::<BigInt>::basis(
                            lambda.associate(n).unwrap(),
                        );
                        assert_eq!(value, expected, "n={n} lambda={lambda}");
                    }
                }
            }
        }
    }

    #[test]
    fn presentation_n3() {
        let pres = presentation(3, 2, Engine::Auto).unwrap();
        assert_eq!(pres.generators, vec![1, 2]);
        assert_eq!(pres.betti, vec![1, 1, 1]);
        assert_eq!(pres.relations.len(), 1);
        let (lambda, r) = &pres.relations[0];
        assert_eq!(lambda, &p(&[1, 1]));
        assert_eq!(r.to_string(), "3*c2 - c1^2");
        // (2) is excluded: its threshold is 3, not above n
        assert!(!pres.relations.iter().any(|(l, _)| l == &p(&[2])));
    }

    #[test]
    fn betti_examples() {
        assert_eq!(betti(1), vec![1]);
        assert_eq!(betti(3), vec![1, 1, 1]);
        assert_eq!(betti(4), vec![1, 1, 2, 1]);
        for n in 0..=12 {
            let total: u64 = betti(n).iter().sum();
            let expected = if n == 0 { 0 } else { crate::partition::count(n) };
            assert_eq!(total, expected, "n={n}");
            // dimensions of the degree slices of the class algebra
            for (i, &b) in betti(n).iter().enumerate() {
                let dim = enumerate(n).iter().filter(|l| l.degree() == i).count();
                assert_eq!(b as usize, dim);
            }
        }
    }

    #[test]
    fn graded_rank_small() {
        let report = graded_rank_check(3, 2, Engine::Auto).unwrap();
        assert!(report.pass);
        let row = &report.rows[2];
        assert_eq!(row.d, 2);
        assert_eq!(row.rank, 1);
        assert_eq!(row.divisors, vec![BigInt::one()]);

        let report = graded_rank_check(4, 3, Engine::Auto).unwrap();
        assert!(report.pass);
        assert_eq!(report.rows[2].rank, 2); // p(4,2) = 2

        // degree 0 is spanned by the unit for any n
        let report = graded_rank_check(6, 0, Engine::Auto).unwrap();
        assert_eq!(report.rows[0].rank, 1);
        assert!(report.pass);
    }

    #[test]
    fn ratio_of_dets_is_one() {
        for d in 1..=5 {
            let fa = det_a_formula(d);
            let fb = det_b_formula(d);
            assert_eq!((fa / fb).abs(), BigRational::one(), "d={d}");
        }
    }
}
