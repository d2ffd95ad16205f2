//! Differential operators on the power-sum ring.
//!
//! Goulden's operator Delta = Delta' + Delta'' realizes convolution by the
//! sum of all transpositions; its graded piece Delta' realizes the cup
//! product with that sum. The operator D, with homogeneous components D_i,
//! realizes cup multiplication by the Chern character components of the
//! tautological sheaf; Newton's identities convert the D_i into the
//! operators C_k for the Chern classes themselves.

use std::rc::Rc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{weight_basis, Monomial, PPoly};
use crate::error::{Error, Result};
use crate::linalg::{self, Mat};
use crate::partition::{count, factorial};

/// Delta' = 1/2 sum_{i,j} i j p_{i+j} d_i d_j. Raises the cohomological
/// degree by one and preserves weight.
pub fn delta_prime(q: &PPoly) -> PPoly {
    let mut out = PPoly::zero();
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    for (m, c) in q.terms() {
        for (i, ei) in m.vars() {
            let mi = m.div_var(i).expect("variable present");
            for (j, ej) in mi.vars() {
                let scale = BigInt::from(i * j) * BigInt::from(ei) * BigInt::from(ej);
                let target = mi.div_var(j).expect("variable present").mul_var(i + j, 1);
                out.add_term(target, c * &half * BigRational::from_integer(scale));
            }
        }
    }
    out
}

/// Delta'' = 1/2 sum_{i,j} (i+j) p_i p_j d_{i+j}. Lowers the cohomological
/// degree by one and preserves weight.
pub fn delta_doubleprime(q: &PPoly) -> PPoly {
    let mut out = PPoly::zero();
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    for (m, c) in q.terms() {
        for (k, ek) in m.vars() {
            if k < 2 {
                continue;
            }
            let mk = m.div_var(k).expect("variable present");
            for i in 1..k {
                let j = k - i;
                let scale = BigInt::from(k) * BigInt::from(ek);
                let target = mk.mul_var(i, 1).mul_var(j, 1);
                out.add_term(target, c * &half * BigRational::from_integer(scale));
            }
        }
    }
    out
}

/// Goulden's operator Delta = Delta' + Delta''.
pub fn goulden_delta(q: &PPoly) -> PPoly {
    delta_prime(q).add(&delta_doubleprime(q))
}

/// The degree-i component D_i = (-1)^i/(i+1)! sum over positive
/// (n_0, ..., n_i) of p_{n_0+...+n_i} prod_j n_j d_{n_j}, applied exactly.
/// Ordered tuples collapse to multisets with binomial weights:
/// D_i(m) = (-1)^i sum over multisets S of size i+1 supported on the
/// variables of m of prod_v v^{mult_v} C(e_v, mult_v) p_{|S|} m / p^S.
pub fn d_component(i: usize, q: &PPoly) -> PPoly {
    let mut out = PPoly::zero();
    for (m, c) in q.terms() {
        let vars: Vec<(usize, u32)> = m.vars().collect();
        let mut choice: Vec<u32> = vec![0; vars.len()];
        d_component_rec(
            i + 1,
            0,
            &vars,
            &mut choice,
            m,
            c,
            i % 2 == 1,
            &mut out,
        );
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn d_component_rec(
    remaining: usize,
    pos: usize,
    vars: &[(usize, u32)],
    choice: &mut Vec<u32>,
    m: &Monomial,
    c: &BigRational,
    negate: bool,
    out: &mut PPoly,
) {
    if remaining == 0 {
        // assemble the term for this multiset of derivatives
        let mut factor = BigInt::one();
        let mut target = m.clone();
        let mut sum = 0usize;
        for (k, &(v, e)) in vars.iter().enumerate() {
            let take = choice[k];
            if take == 0 {
                continue;
            }
            factor *= BigInt::from(v).pow(take) * binomial(e, take);
            for _ in 0..take {
                target = target.div_var(v).expect("multiplicity bounded");
            }
            sum += v * take as usize;
        }
        let target = target.mul_var(sum, 1);
        let mut coeff = c * BigRational::from_integer(factor);
        if negate {
            coeff = -coeff;
        }
        out.add_term(target, coeff);
        return;
    }
    if pos >= vars.len() {
        return;
    }
    let (_, e) = vars[pos];
    let max_take = (e as usize).min(remaining);
    for take in 0..=max_take {
        choice[pos] = take as u32;
        d_component_rec(remaining - take, pos + 1, vars, choice, m, c, negate, out);
    }
    choice[pos] = 0;
}

fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    for t in 0..k {
        num *= BigInt::from(n - t);
    }
    let (q, r) = num_integer::div_rem(num, factorial(k as usize));
    debug_assert!(r.is_zero());
    q
}

/// Sum of all D_i that can act on the polynomial. D_i needs i+1
/// derivatives, so components beyond the longest monomial vanish.
pub fn d_component_sum(q: &PPoly) -> PPoly {
    let max_len = q
        .terms()
        .map(|(m, _)| m.total_exponent() as usize)
        .max()
        .unwrap_or(0);
    let mut out = PPoly::zero();
    for i in 0..max_len {
        out = out.add(&d_component(i, q));
    }
    out
}

/// The operator D expanded from its generating expression: the t^0
/// coefficient of (-sum p_M t^M) exp(-sum m d_m t^{-m}). Expanding the
/// exponential gives, for each M >= 1 and each composition
/// (m_1, ..., m_k) of M, the term (-1)^{k+1}/k! p_M prod_j m_j d_{m_j}.
/// Truncating at the weight of the input loses nothing: heavier tails
/// annihilate every term.
pub fn d_operator(q: &PPoly) -> PPoly {
    let mut out = PPoly::zero();
    let top = q.max_weight();
    for total in 1..=top {
        let mut composition = Vec::new();
        d_operator_rec(total, &mut composition, q, &mut out);
    }
    out
}

fn d_operator_rec(rest: usize, composition: &mut Vec<usize>, q: &PPoly, out: &mut PPoly) {
    if rest == 0 {
        let k = composition.len();
        let mut applied = q.clone();
        for &m in composition.iter() {
            applied = applied
                .derivative(m)
                .scale(&BigRational::from_integer(BigInt::from(m)));
            if applied.is_zero() {
                return;
            }
        }
        let total: usize = composition.iter().sum();
        let sign = if k.is_multiple_of(2) { -BigInt::one() } else { BigInt::one() };
        let scale = BigRational::new(sign, factorial(k));
        *out = out.add(&applied.mul_var(total).scale(&scale));
        return;
    }
    for part in 1..=rest {
        composition.push(part);
        d_operator_rec(rest - part, composition, q, out);
        composition.pop();
    }
}

/// The operator counterpart C_k of cup multiplication by the k-th Chern
/// class, on the weight-n slice. Newton's identities relate the power
/// sums of the Chern roots, realized by P_j = j! D_j, to the elementary
/// symmetric functions: k C_k = sum_{j=1}^{k} (-1)^{j-1} C_{k-j} P_j.
pub fn chern_operator(k: usize, n: usize, q: &PPoly) -> Result<PPoly> {
    if let Some(w) = q.homogeneous_weight()? {
        if w != n {
            return Err(Error::MixedWeight {
                first: n,
                second: w,
            });
        }
    }
    Ok(chern_rec(k, q))
}

fn chern_rec(k: usize, q: &PPoly) -> PPoly {
    if k == 0 {
        return q.clone();
    }
    let mut acc = PPoly::zero();
    for j in 1..=k {
        let pj = d_component(j, q).scale(&BigRational::from_integer(factorial(j)));
        let term = chern_rec(k - j, &pj);
        if j % 2 == 1 {
            acc = acc.add(&term);
        } else {
            acc = acc.sub(&term);
        }
    }
    acc.scale(&BigRational::new(BigInt::one(), BigInt::from(k)))
}

/// The z^n coefficient of exp(sum_{m>0} (-1)^{m-1} z^m p_m / m), the
/// generating series whose coefficients are the images of the
/// alternating characters.
pub fn epsilon_series_coefficient(n: usize) -> PPoly {
    // truncated exponential of a series with zero constant term
    let mut series: Vec<PPoly> = vec![PPoly::zero(); n + 1];
    series[0] = PPoly::one();
    let mut power: Vec<PPoly> = vec![PPoly::zero(); n + 1];
    power[0] = PPoly::one();
    let arg: Vec<PPoly> = (0..=n)
        .map(|m| {
            if m == 0 {
                PPoly::zero()
            } else {
                let sign = if m % 2 == 1 { BigInt::one() } else { -BigInt::one() };
                PPoly::var(m).scale(&BigRational::new(sign, BigInt::from(m)))
            }
        })
        .collect();
    for k in 1..=n {
        // power <- power * arg / k, truncated beyond z^n
        let mut next = vec![PPoly::zero(); n + 1];
        for (a, pa) in power.iter().enumerate() {
            if pa.is_zero() {
                continue;
            }
            for (b, ab) in arg.iter().enumerate().take(n + 1 - a) {
                if ab.is_zero() {
                    continue;
                }
                next[a + b] = next[a + b].add(&pa.mul(ab));
            }
        }
        let inv_k = BigRational::new(BigInt::one(), BigInt::from(k));
        power = next.into_iter().map(|p| p.scale(&inv_k)).collect();
        for (i, p) in power.iter().enumerate() {
            series[i] = series[i].add(p);
        }
        if power.iter().all(|p| p.is_zero()) {
            break;
        }
    }
    series[n].clone()
}

/// Linear operators on the polynomial ring, boxed for commutator algebra.
pub type Operator = Rc<dyn Fn(&PPoly) -> PPoly>;

pub fn op_delta_prime() -> Operator {
    Rc::new(delta_prime)
}

pub fn op_mul_var(i: usize) -> Operator {
    Rc::new(move |q| q.mul_var(i))
}

/// Commutator [x, y] as an operator.
pub fn op_commutator(x: Operator, y: Operator) -> Operator {
    Rc::new(move |q| x(&y(q)).sub(&y(&x(q))))
}

/// The claimed closed form of [Delta', p_1]: sum_j j p_{j+1} d_j.
pub fn shift_operator(q: &PPoly) -> PPoly {
    let mut out = PPoly::zero();
    for (m, c) in q.terms() {
        for (j, ej) in m.vars() {
            let target = m.div_var(j).expect("variable present").mul_var(j + 1, 1);
            let scale = BigInt::from(j) * BigInt::from(ej);
            out.add_term(target, c * BigRational::from_integer(scale));
        }
    }
    out
}

/// One verified identity in a commutator report.
#[derive(Debug, Clone)]
pub struct CommutatorCase {
    pub name: String,
    pub pass: bool,
    pub detail: Option<String>,
}

/// Verifies, on every monomial of weight up to the bound:
/// [Delta', p_1] = sum_j j p_{j+1} d_j,
/// ad([Delta', p_1])^{n-1}(p_1) = (n-1)! p_n, and the spanning property
/// that Delta'(weight-n slice) + p_1 (weight-(n-1) slice) fills the
/// whole weight-n slice.
pub fn commutator_checks(weight_bound: usize) -> Vec<CommutatorCase> {
    let mut cases = Vec::new();

    let bracket = op_commutator(op_delta_prime(), op_mul_var(1));
    for w in 0..=weight_bound {
        let mut pass = true;
        let mut detail = None;
        for m in weight_basis(w) {
            let q = PPoly::monomial(m.clone(), BigRational::one());
            let lhs = bracket(&q);
            let rhs = shift_operator(&q);
            if lhs != rhs {
                pass = false;
                detail = Some(format!("on {m}: [D',p1] = {lhs} but shift gives {rhs}"));
                break;
            }
        }
        cases.push(CommutatorCase {
            name: format!("bracket-closed-form w={w}"),
            pass,
            detail,
        });
    }

    for n in 1..=weight_bound {
        // ad([Delta',p1])^{n-1} applied to multiplication by p_1 must be
        // multiplication by (n-1)! p_n
        let mut op: Operator = op_mul_var(1);
        for _ in 1..n {
            op = op_commutator(bracket.clone(), op);
        }
        let expected_scale = BigRational::from_integer(factorial(n - 1));
        let mut pass = true;
        let mut detail = None;
        'outer: for w in 0..=weight_bound.saturating_sub(n) {
            for m in weight_basis(w) {
                let q = PPoly::monomial(m.clone(), BigRational::one());
                let lhs = op(&q);
                let rhs = q.mul_var(n).scale(&expected_scale);
                if lhs != rhs {
                    pass = false;
                    detail = Some(format!("on {m}: got {lhs}, expected {rhs}"));
                    break 'outer;
                }
            }
        }
        cases.push(CommutatorCase {
            name: format!("ad-power n={n}"),
            pass,
            detail,
        });
    }

    for n in 1..=weight_bound {
        let dim = count(n) as usize;
        let basis_n = weight_basis(n);
        let index: std::collections::HashMap<&Monomial, usize> =
            basis_n.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows: Vec<Vec<BigRational>> = Vec::new();
        let push_image = |p: &PPoly, rows: &mut Vec<Vec<BigRational>>| {
            let mut row = vec![BigRational::zero(); dim];
            for (m, c) in p.terms() {
                row[index[m]] = c.clone();
            }
            rows.push(row);
        };
        for m in &basis_n {
            let q = PPoly::monomial(m.clone(), BigRational::one());
            push_image(&delta_prime(&q), &mut rows);
        }
        for m in weight_basis(n - 1) {
            let q = PPoly::monomial(m, BigRational::one());
            push_image(&q.mul_var(1), &mut rows);
        }
        let rank = linalg::rank(&Mat::from_rows(rows));
        cases.push(CommutatorCase {
            name: format!("spanning n={n}"),
            pass: rank == dim,
            detail: (rank != dim).then(|| format!("rank {rank} of {dim}")),
        });
    }

    cases
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classalg::{convolve, cup, epsilon, tau, ClassFunction, Engine};
    use crate::partition::{enumerate, Partition};
    use crate::symfun::tests::pp;
    use crate::symfun::phi;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn delta_prime_examples() {
        assert!(delta_prime(&PPoly::var(1)).is_zero());
        let p1sq = PPoly::var(1).pow(2);
        assert_eq!(delta_prime(&p1sq), PPoly::var(2));
        assert_eq!(delta_doubleprime(&PPoly::var(2)), p1sq);
    }

    #[test]
    fn goulden_matches_convolution_by_tau() {
        // frozen hand expansion on p1 p2 / 2
        let q = pp(&[(&[1, 1], (1, 2))]);
        let expected = pp(&[(&[0, 0, 1], (1, 1)), (&[3], (1, 2))]);
        assert_eq!(goulden_delta(&q), expected);

        // against the engine for all basis elements, n <= 7
        for n in 1..=7 {
            let t = tau(n);
            for lambda in enumerate(n) {
                let f = ClassFunction::<BigInt>::basis(lambda.clone());
                let lhs = phi(&convolve(&t, &f, Engine::Auto).unwrap());
                let rhs = goulden_delta(&phi(&f));
                assert_eq!(lhs, rhs, "n={n} lambda={lambda}");
                let lhs_cup = phi(&cup(&t, &f, Engine::Auto).unwrap());
                assert_eq!(lhs_cup, delta_prime(&phi(&f)), "graded, n={n}");
            }
        }
    }

    #[test]
    fn d_component_examples() {
        // D_0 is the weight (Euler) operator
        for n in 0..=6 {
            for m in weight_basis(n) {
                let q = PPoly::monomial(m, BigRational::one());
                assert_eq!(d_component(0, &q), q.scale(&rat(n as i64, 1)));
            }
        }

        // D_1 = -Delta' on every slice up to weight 8
        for n in 0..=8 {
            for m in weight_basis(n) {
                let q = PPoly::monomial(m, BigRational::one());
                assert_eq!(d_component(1, &q), delta_prime(&q).neg());
            }
        }

        // D_2(p1^3/6) = p3/6
        let q = pp(&[(&[3], (1, 6))]);
        assert_eq!(d_component(2, &q), pp(&[(&[0, 0, 1], (1, 6))]));
    }

    #[test]
    fn d_operator_examples() {
        assert_eq!(d_operator(&PPoly::var(1)), PPoly::var(1));

        let q = pp(&[(&[2], (1, 2))]);
        let expected = pp(&[(&[2], (1, 1)), (&[0, 1], (-1, 2))]);
        assert_eq!(d_operator(&q), expected);

        let q = pp(&[(&[3], (1, 6))]);
        assert_eq!(d_operator(&q), d_component_sum(&q));
    }

    #[test]
    fn d_operator_equals_component_sum_up_to_8() {
        for n in 0..=8 {
            for m in weight_basis(n) {
                let q = PPoly::monomial(m.clone(), BigRational::one());
                assert_eq!(d_operator(&q), d_component_sum(&q), "monomial {m}");
            }
        }
    }

    #[test]
    fn d_components_shift_degree_and_keep_weight() {
        for n in 0..=7 {
            for m in weight_basis(n) {
                let q = PPoly::monomial(m.clone(), BigRational::one());
                for i in 0..=n {
                    let image = d_component(i, &q);
                    for (im, _) in image.terms() {
                        assert_eq!(im.weight(), n);
                        assert_eq!(im.degree(), m.degree() + i);
                    }
                }
            }
        }
    }

    #[test]
    fn epsilon_series_examples() {
        assert_eq!(epsilon_series_coefficient(0), PPoly::one());
        assert_eq!(
            epsilon_series_coefficient(2),
            pp(&[(&[2], (1, 2)), (&[0, 1], (-1, 2))])
        );
        assert_eq!(
            epsilon_series_coefficient(3),
            pp(&[(&[3], (1, 6)), (&[1, 1], (-1, 2)), (&[0, 0, 1], (1, 3))])
        );
        for n in 0..=10 {
            assert_eq!(epsilon_series_coefficient(n), phi(&epsilon(n)), "n={n}");
        }
    }

    #[test]
    fn chern_operator_examples() {
        // C_1 = D_1
        for n in 1..=6 {
            for m in weight_basis(n) {
                let q = PPoly::monomial(m, BigRational::one());
                assert_eq!(chern_operator(1, n, &q).unwrap(), d_component(1, &q));
            }
        }

        // C_2(p1^4/24) = p1 p3 / 3 + p2^2 / 8, with the intermediate
        // values of the two contributing operators pinned as well
        let q = pp(&[(&[4], (1, 24))]);
        let d1 = d_component(1, &q);
        let d1d1 = d_component(1, &d1);
        assert_eq!(d1d1, pp(&[(&[1, 0, 1], (1, 1)), (&[0, 2], (1, 4))]));
        assert_eq!(d_component(2, &q), pp(&[(&[1, 0, 1], (1, 6))]));
        assert_eq!(
            chern_operator(2, 4, &q).unwrap(),
            pp(&[(&[1, 0, 1], (1, 3)), (&[0, 2], (1, 8))])
        );
        // which is the image of the degree-2 slice of the alternating
        // character on S_4
        let eps42 = crate::classalg::epsilon_component(4, 2).unwrap();
        assert_eq!(chern_operator(2, 4, &q).unwrap(), phi(&eps42));
    }

    #[test]
    fn chern_operators_commute_up_to_7() {
        for n in 1..=7 {
            for m in weight_basis(n) {
                let q = PPoly::monomial(m, BigRational::one());
                for j in 1..=4usize {
                    for k in (j + 1)..=5usize {
                        let jk = chern_operator(j, n, &chern_operator(k, n, &q).unwrap())
                            .unwrap();
                        let kj = chern_operator(k, n, &chern_operator(j, n, &q).unwrap())
                            .unwrap();
                        assert_eq!(jk, kj, "n={n} j={j} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn chern_operator_rejects_mixed_weight() {
        let q = PPoly::var(1).add(&PPoly::var(2));
        assert!(chern_operator(1, 1, &q).is_err());
        let hom = PPoly::var(2);
        assert!(chern_operator(1, 3, &hom).is_err());
    }

    #[test]
    fn main_shadow_small() {
        // cup multiplication by the degree-k slice of the alternating
        // character corresponds to C_k
        for n in 1..=5 {
            for k in 1..n {
                let eps_k = crate::classalg::epsilon_component(n, k).unwrap();
                for lambda in enumerate(n) {
                    let f = ClassFunction::<BigInt>::basis(lambda.clone());
                    let lhs = phi(&cup(&eps_k, &f, Engine::Auto).unwrap());
                    let rhs = chern_operator(k, n, &phi(&f)).unwrap();
                    assert_eq!(lhs, rhs, "n={n} k={k} lambda={lambda}");
                }
            }
        }
        let _ = Partition::empty();
    }

    #[test]
    fn commutator_spot_values() {
        let bracket = op_commutator(op_delta_prime(), op_mul_var(1));
        let p1 = PPoly::var(1);
        assert_eq!(bracket(&p1), PPoly::var(2));

        let ad2 = op_commutator(bracket.clone(), op_commutator(bracket.clone(), op_mul_var(1)));
        assert_eq!(ad2(&PPoly::one()), PPoly::var(3).scale(&rat(2, 1)));
    }

    #[test]
    fn commutator_checks_pass() {
        let cases = commutator_checks(8);
        for case in &cases {
            assert!(case.pass, "{}: {:?}", case.name, case.detail);
        }
        // includes the spanning rank for the weight-4 slice
        assert!(cases.iter().any(|c| c.name == "spanning n=4"));
    }
}
