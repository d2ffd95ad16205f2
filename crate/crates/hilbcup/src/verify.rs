//! Verification harness: every algebraic identity the library realizes,
//! run exhaustively over configurable desk-scale bounds.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::classalg::{
    convolve, cup, epsilon, epsilon_component, restrict, structure_constants, tau,
    verify_eps_commutator, induce_r, ClassFunction, Engine, IntClassFunction,
};
use crate::error::{Error, Result};
use crate::hilbert::{
    det_a_formula, det_b_formula, matrix_a, matrix_b, relation_poly,
};
use crate::linalg::{self, Mat};
use crate::partition::{enumerate, Partition};
use crate::symfun::ops::{
    commutator_checks, d_component, d_component_sum, d_operator, delta_prime, goulden_delta,
    chern_operator,
};
use crate::symfun::{phi, weight_basis, PPoly};

pub const SUITES: &[&str] = &[
    "goulden",
    "cup-goulden",
    "eps-commutator",
    "eps-series",
    "d-consistency",
    "main-shadow",
    "engines",
    "det",
    "relations",
    "spanning",
    "restriction",
    "induction-phi",
    "commutators",
];

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Caps every conformal-weight-like bound.
    pub max_n: Option<usize>,
    /// Caps every cohomological-degree-like bound.
    pub max_d: Option<usize>,
    pub engine: Engine,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_n: None,
            max_d: None,
            engine: Engine::Auto,
        }
    }
}

impl VerifyOptions {
    fn n_bound(&self, default: usize) -> usize {
        self.max_n.map_or(default, |m| m.min(default))
    }

    /// Degree-indexed suites are capped by max_d alone; they work at the
    /// stable weight 2d internally regardless of max_n.
    fn d_bound(&self, default: usize) -> usize {
        self.max_d.map_or(default, |m| m.min(default))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CaseStatus {
    pub name: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Counterexample {
    pub case: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub params: BTreeMap<String, String>,
    pub total: usize,
    pub failures: usize,
    pub pass: bool,
    pub cases: Vec<CaseStatus>,
    pub counterexample: Option<Counterexample>,
}

struct ReportBuilder {
    suite: String,
    params: BTreeMap<String, String>,
    cases: Vec<CaseStatus>,
    counterexample: Option<Counterexample>,
}

impl ReportBuilder {
    fn new(suite: &str) -> Self {
        ReportBuilder {
            suite: suite.to_string(),
            params: BTreeMap::new(),
            cases: Vec::new(),
            counterexample: None,
        }
    }

    fn param(&mut self, key: &str, value: impl ToString) {
        self.params.insert(key.to_string(), value.to_string());
    }

    fn case(&mut self, name: impl Into<String>, pass: bool) {
        self.cases.push(CaseStatus {
            name: name.into(),
            pass,
        });
    }

    fn case_eq<T: PartialEq + std::fmt::Display>(
        &mut self,
        name: impl Into<String>,
        lhs: &T,
        rhs: &T,
    ) {
        let name = name.into();
        let pass = lhs == rhs;
        if !pass && self.counterexample.is_none() {
            self.counterexample = Some(Counterexample {
                case: name.clone(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
        self.cases.push(CaseStatus { name, pass });
    }

    fn fail_detail(&mut self, name: impl Into<String>, lhs: String, rhs: String) {
        let name = name.into();
        if self.counterexample.is_none() {
            self.counterexample = Some(Counterexample {
                case: name.clone(),
                lhs,
                rhs,
            });
        }
        self.cases.push(CaseStatus { name, pass: false });
    }

    fn finish(self) -> VerificationReport {
        let failures = self.cases.iter().filter(|c| !c.pass).count();
        VerificationReport {
            suite: self.suite,
            params: self.params,
            total: self.cases.len(),
            failures,
            pass: failures == 0,
            cases: self.cases,
            counterexample: self.counterexample,
        }
    }
}

/// Runs one named suite.
pub fn run_suite(name: &str, opts: &VerifyOptions) -> Result<VerificationReport> {
    match name {
        "goulden" => suite_goulden(opts, false),
        "cup-goulden" => suite_goulden(opts, true),
        "eps-commutator" => suite_eps_commutator(opts),
        "eps-series" => suite_eps_series(opts),
        "d-consistency" => suite_d_consistency(opts),
        "main-shadow" => suite_main_shadow(opts),
        "engines" => suite_engines(opts),
        "det" => suite_det(opts),
        "relations" => suite_relations(opts),
        "spanning" => suite_spanning(opts),
        "restriction" => suite_restriction(opts),
        "induction-phi" => suite_induction_phi(opts),
        "commutators" => suite_commutators(opts),
        other => Err(Error::UnknownSuite(other.to_string())),
    }
}

/// Runs every suite in declaration order.
pub fn run_all(opts: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    SUITES.iter().map(|s| run_suite(s, opts)).collect()
}

/// Convolution by the transposition sum matches Goulden's operator; the
/// graded variant matches its degree-raising half.
fn suite_goulden(opts: &VerifyOptions, graded: bool) -> Result<VerificationReport> {
    let top = opts.n_bound(9);
    let mut rb = ReportBuilder::new(if graded { "cup-goulden" } else { "goulden" });
    rb.param("max_n", top);
    for n in 1..=top {
        let t = tau(n);
        for lambda in enumerate(n) {
            let f = ClassFunction::<BigInt>::basis(lambda.clone());
            let (lhs, rhs) = if graded {
                (
                    phi(&cup(&t, &f, opts.engine)?),
                    delta_prime(&phi(&f)),
                )
            } else {
                (
                    phi(&convolve(&t, &f, opts.engine)?),
                    goulden_delta(&phi(&f)),
                )
            };
            rb.case_eq(format!("n={n} lambda={lambda}"), &lhs, &rhs);
        }
    }
    Ok(rb.finish())
}

fn suite_eps_commutator(opts: &VerifyOptions) -> Result<VerificationReport> {
    let top = opts.n_bound(7);
    let mut rb = ReportBuilder::new("eps-commutator");
    rb.param("max_n", top);
    for n in 0..=top {
        for lambda in enumerate(n) {
            let f = ClassFunction::<BigInt>::basis(lambda.clone());
            let w = verify_eps_commutator(&f, opts.engine)?;
            if w.holds {
                rb.case(format!("n={n} lambda={lambda}"), true);
            } else {
                rb.fail_detail(
                    format!("n={n} lambda={lambda}"),
                    w.lhs.to_string(),
                    w.rhs.to_string(),
                );
            }
        }
    }
    Ok(rb.finish())
}

fn suite_eps_series(opts: &VerifyOptions) -> Result<VerificationReport> {
    let top = opts.n_bound(10);
    let mut rb = ReportBuilder::new("eps-series");
    rb.param("max_n", top);
    for n in 0..=top {
        let lhs = phi(&epsilon(n));
        let rhs = crate::symfun::ops::epsilon_series_coefficient(n);
        rb.case_eq(format!("n={n}"), &lhs, &rhs);
    }
    Ok(rb.finish())
}

fn suite_d_consistency(opts: &VerifyOptions) -> Result<VerificationReport> {
    let top = opts.n_bound(8);
    let mut rb = ReportBuilder::new("d-consistency");
    rb.param("max_n", top);
    for n in 0..=top {
        for m in weight_basis(n) {
            let q = PPoly::monomial(m.clone(), BigRational::one());
            rb.case_eq(
                format!("series-vs-components {m}"),
                &d_operator(&q),
                &d_component_sum(&q),
            );
            rb.case_eq(
                format!("degree-one-part {m}"),
                &d_component(1, &q),
                &delta_prime(&q).neg(),
            );
        }
    }
    Ok(rb.finish())
}

/// Cup multiplication by the degree-k slice of the alternating character
/// corresponds to the Chern-class operator C_k.
fn suite_main_shadow(opts: &VerifyOptions) -> Result<VerificationReport> {
    let top = opts.n_bound(7);
    let mut rb = ReportBuilder::new("main-shadow");
    rb.param("max_n", top);
    for n in 1..=top {
        for k in 1..n {
            let eps_k = epsilon_component(n, k)?;
            for lambda in enumerate(n) {
                let f = ClassFunction::<BigInt>::basis(lambda.clone());
                let lhs = phi(&cup(&eps_k, &f, opts.engine)?);
                let rhs = chern_operator(k, n, &phi(&f))?;
                rb.case_eq(format!("n={n} k={k} lambda={lambda}"), &lhs, &rhs);
            }
        }
    }
    Ok(rb.finish())
}

fn suite_engines(opts: &VerifyOptions) -> Result<VerificationReport> {
    let top = opts.n_bound(6);
    let mut rb = ReportBuilder::new("engines");
    rb.param("max_n", top);
    for n in 0..=top {
        for lambda in enumerate(n) {
            for mu in enumerate(n) {
                let brute = structure_constants(&lambda, &mu, Engine::BruteForce)?;
                let formula = structure_constants(&lambda, &mu, Engine::Character)?;
                let name = format!("n={n} {lambda}*{mu}");
                if brute != formula {
                    rb.fail_detail(
                        name,
                        format!("{:?}", brute),
                        format!("{:?}", formula),
                    );
                    continue;
                }
                let nonneg = brute.values().all(|a| !a.is_negative());
                rb.case(name, nonneg);
            }
        }
    }
    Ok(rb.finish())
}

fn suite_det(opts: &VerifyOptions) -> Result<VerificationReport> {
    let top = opts.d_bound(5);
    let mut rb = ReportBuilder::new("det");
    rb.param("max_d", top);
    for d in 1..=top {
        let n = 2 * d;
        let a = matrix_a(d, n, opts.engine)?;
        let b = matrix_b(d, n)?;
        rb.case_eq(
            format!("detA d={d}"),
            &a.abs_determinant(),
            &det_a_formula(d),
        );
        rb.case_eq(
            format!("detB d={d}"),
            &b.abs_determinant(),
            &det_b_formula(d),
        );
        rb.case_eq(
            format!("ratio d={d}"),
            &(a.abs_determinant() / b.abs_determinant()),
            &BigRational::one(),
        );
        rb.case(format!("A-triangular d={d}"), a.is_lower_triangular());
        rb.case(format!("B-triangular d={d}"), b.is_lower_triangular());
    }
    Ok(rb.finish())
}

fn suite_relations(opts: &VerifyOptions) -> Result<VerificationReport> {
    let top_d = opts.d_bound(5);
    let top_n = opts.n_bound(7);
    let mut rb = ReportBuilder::new("relations");
    rb.param("max_d", top_d);
    rb.param("max_n", top_n);

    // frozen low-degree relations
    if top_d >= 1 {
        let r1 = relation_poly(&Partition::from([1]), opts.engine)?;
        rb.case_eq("r_(1)", &r1.to_string(), &"-c1".to_string());
    }
    if top_d >= 2 {
        let r11 = relation_poly(&Partition::from([1, 1]), opts.engine)?;
        rb.case_eq("r_(1,1)", &r11.to_string(), &"3*c2 - c1^2".to_string());
        let r2 = relation_poly(&Partition::from([2]), opts.engine)?;
        rb.case_eq("r_(2)", &r2.to_string(), &"-2*c2 + c1^2".to_string());
    }

    // integrality and weighted degree for all indices up to the bound
    for d in 1..=top_d {
        for lambda in enumerate(d) {
            match relation_poly(&lambda, opts.engine) {
                Ok(r) => rb.case(
                    format!("integral r_{lambda}"),
                    r.weighted_degree() == Some(d),
                ),
                Err(e) => rb.fail_detail(
                    format!("integral r_{lambda}"),
                    e.to_string(),
                    "integer coefficients".into(),
                ),
            }
        }
    }

    // evaluation soundness: zero exactly above the threshold
    for n in 1..=top_n {
        for d in 1..=top_d {
            for lambda in enumerate(d) {
                let r = relation_poly(&lambda, opts.engine)?;
                let value = r.evaluate(n, opts.engine)?;
                let name = format!("evaluate n={n} r_{lambda}");
                if lambda.associate_threshold() > n {
                    if value.is_zero() {
                        rb.case(name, true);
                    } else {
                        rb.fail_detail(name, value.to_string(), "0".into());
                    }
                } else {
                    let expected =
                        ClassFunction::<BigInt>::basis(lambda.associate(n)?);
                    rb.case_eq(name, &value, &expected);
                }
            }
        }
    }
    Ok(rb.finish())
}

/// The weight-n algebra is spanned over the rationals by the image of cup
/// multiplication with the transposition sum together with the image of
/// r_1 from one weight below.
fn suite_spanning(opts: &VerifyOptions) -> Result<VerificationReport> {
    let top = opts.n_bound(7);
    let mut rb = ReportBuilder::new("spanning");
    rb.param("max_n", top);
    for n in 1..=top {
        let classes = enumerate(n);
        let dim = classes.len();
        let index: BTreeMap<&Partition, usize> =
            classes.iter().enumerate().map(|(i, l)| (l, i)).collect();
        let mut rows: Vec<Vec<BigRational>> = Vec::new();
        let push = |f: &IntClassFunction, rows: &mut Vec<Vec<BigRational>>| {
            let mut row = vec![BigRational::zero(); dim];
            for (l, c) in f.iter() {
                row[index[l]] = BigRational::from_integer(c.clone());
            }
            rows.push(row);
        };
        let t = tau(n);
        for lambda in &classes {
            let f = ClassFunction::<BigInt>::basis(lambda.clone());
            push(&cup(&t, &f, opts.engine)?, &mut rows);
        }
        for mu in enumerate(n - 1) {
            let f = ClassFunction::<BigInt>::basis(mu);
            push(&induce_r(1, &f), &mut rows);
        }
        let rank = linalg::rank(&Mat::from_rows(rows));
        let name = format!("n={n} rank {rank} of {dim}");
        rb.case(name, rank == dim);
    }
    Ok(rb.finish())
}

fn suite_restriction(opts: &VerifyOptions) -> Result<VerificationReport> {
    let top = opts.n_bound(6);
    let mut rb = ReportBuilder::new("restriction");
    rb.param("max_n", top);
    for n in 1..=top {
        for lambda in enumerate(n) {
            for mu in enumerate(n) {
                let f = ClassFunction::<BigInt>::basis(lambda.clone());
                let g = ClassFunction::<BigInt>::basis(mu.clone());
                let lhs = restrict(&cup(&f, &g, opts.engine)?);
                let rhs = cup(&restrict(&f), &restrict(&g), opts.engine)?;
                rb.case_eq(format!("cup-hom n={n} {lambda},{mu}"), &lhs, &rhs);
            }
        }
        rb.case_eq(
            format!("epsilon n={n}"),
            &restrict(&epsilon(n)),
            &epsilon(n - 1),
        );
    }
    // convolution witness at n=2: restriction of chi_(2)*chi_(2) is the
    // unit below, while the restrictions convolve to zero
    let f = ClassFunction::<BigInt>::basis(Partition::from([2]));
    let lhs = restrict(&convolve(&f, &f, opts.engine)?);
    let expected = ClassFunction::<BigInt>::basis(Partition::from([1]));
    rb.case_eq("witness restrict(chi2*chi2)", &lhs, &expected);
    let rhs = convolve(&restrict(&f), &restrict(&f), opts.engine)?;
    rb.case("witness product of restrictions vanishes", rhs.is_zero());
    Ok(rb.finish())
}

/// The induction operators correspond to multiplication by the power sums.
fn suite_induction_phi(opts: &VerifyOptions) -> Result<VerificationReport> {
    let top = opts.n_bound(7);
    let max_m = 5;
    let mut rb = ReportBuilder::new("induction-phi");
    rb.param("max_n", top);
    rb.param("max_m", max_m);
    for n in 0..=top {
        for m in 1..=max_m {
            for lambda in enumerate(n) {
                let f = ClassFunction::<BigInt>::basis(lambda.clone());
                let lhs = phi(&induce_r(m, &f));
                let rhs = phi(&f).mul_var(m);
                rb.case_eq(format!("n={n} m={m} lambda={lambda}"), &lhs, &rhs);
            }
        }
    }
    Ok(rb.finish())
}

fn suite_commutators(opts: &VerifyOptions) -> Result<VerificationReport> {
    let top = opts.n_bound(8);
    let mut rb = ReportBuilder::new("commutators");
    rb.param("max_w", top);
    for case in commutator_checks(top) {
        match (case.pass, case.detail) {
            (true, _) => rb.case(case.name, true),
            (false, detail) => {
                rb.fail_detail(case.name, detail.unwrap_or_default(), "identity".into())
            }
        }
    }
    Ok(rb.finish())
}
