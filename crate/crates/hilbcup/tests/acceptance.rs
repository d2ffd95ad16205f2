//! Acceptance suite: every exactness and performance gate, one test per
//! criterion, each printing its own pass/fail line.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use hilbcup::classalg::{cup, ClassFunction, Engine};
use hilbcup::hilbert::{det_a_formula, det_b_formula, graded_rank_check, matrix_a, matrix_b};
use hilbcup::partition::{count_into_parts, enumerate, Partition};
use hilbcup::verify::{run_all, run_suite, VerifyOptions};

fn report(criterion: &str, pass: bool, elapsed: Duration) {
    println!(
        "ACCEPTANCE {criterion}: {} ({:.2}s)",
        if pass { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64()
    );
}

fn run_and_assert(criterion: &str, suite: &str, opts: &VerifyOptions, budget: Option<Duration>) {
    let start = Instant::now();
    let r = run_suite(suite, opts).expect("suite must run");
    let elapsed = start.elapsed();
    let within = budget.map_or(true, |b| elapsed <= b);
    report(criterion, r.pass && within, elapsed);
    assert!(
        r.pass,
        "criterion {criterion}: {} of {} cases failed; first counterexample: {:?}",
        r.failures, r.total, r.counterexample
    );
    if let Some(b) = budget {
        assert!(elapsed <= b, "criterion {criterion}: {elapsed:?} over {b:?}");
    }
}

#[test]
fn criterion_01_engine_equivalence() {
    run_and_assert(
        "C1 engine-equivalence n<=6",
        "engines",
        &VerifyOptions {
            max_n: Some(6),
            max_d: None,
            engine: Engine::Auto,
        },
        Some(Duration::from_secs(60)),
    );
}

#[test]
fn criterion_02_goulden() {
    let opts = VerifyOptions {
        max_n: Some(9),
        max_d: None,
        engine: Engine::Character,
    };
    run_and_assert("C2 goulden n<=9", "goulden", &opts, None);
    run_and_assert("C2 cup-goulden n<=9", "cup-goulden", &opts, None);
}

#[test]
fn criterion_03_d_consistency() {
    run_and_assert(
        "C3 d-consistency n<=8",
        "d-consistency",
        &VerifyOptions {
            max_n: Some(8),
            ..Default::default()
        },
        None,
    );
}

#[test]
fn criterion_04_eps_series() {
    run_and_assert(
        "C4 eps-series n<=10",
        "eps-series",
        &VerifyOptions {
            max_n: Some(10),
            ..Default::default()
        },
        None,
    );
}

#[test]
fn criterion_05_eps_commutator() {
    run_and_assert(
        "C5 eps-commutator n<=7",
        "eps-commutator",
        &VerifyOptions {
            max_n: Some(7),
            ..Default::default()
        },
        None,
    );
}

#[test]
fn criterion_06_main_shadow() {
    run_and_assert(
        "C6 main-shadow n<=7",
        "main-shadow",
        &VerifyOptions {
            max_n: Some(7),
            ..Default::default()
        },
        None,
    );
}

#[test]
fn criterion_07_determinants() {
    let start = Instant::now();
    let mut pass = true;
    for d in 1..=5 {
        let a = matrix_a(d, 2 * d, Engine::Auto).expect("matrix A");
        let b = matrix_b(d, 2 * d).expect("matrix B");
        pass &= a.abs_determinant() == det_a_formula(d);
        pass &= b.abs_determinant() == det_b_formula(d);
        pass &= a.abs_determinant() / b.abs_determinant() == BigRational::one();
    }
    let rat = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
    let a2 = matrix_a(2, 4, Engine::Auto).unwrap().abs_determinant();
    let b2 = matrix_b(2, 4).unwrap().abs_determinant();
    let a3 = matrix_a(3, 6, Engine::Auto).unwrap().abs_determinant();
    let b3 = matrix_b(3, 6).unwrap().abs_determinant();
    pass &= a2 == rat(1, 1) && b2 == rat(1, 1);
    pass &= a3 == rat(1, 2) && b3 == rat(1, 2);
    report("C7 determinants d<=5", pass, start.elapsed());
    assert!(pass, "d=2: |A|={a2} |B|={b2}; d=3: |A|={a3} |B|={b3}");
}

#[test]
fn criterion_08_relations() {
    run_and_assert(
        "C8 relations d<=5 n<=7",
        "relations",
        &VerifyOptions {
            max_n: Some(7),
            max_d: Some(5),
            engine: Engine::Auto,
        },
        None,
    );
}

#[test]
fn criterion_09_graded_ranks() {
    let start = Instant::now();
    let mut pass = true;
    for n in 0..=12usize {
        for d in 0..=n {
            let dim = enumerate(n).iter().filter(|l| l.degree() == d).count() as u64;
            if dim != count_into_parts(n, n - d) {
                pass = false;
            }
        }
    }
    for n in 1..=7usize {
        let report = graded_rank_check(n, n.saturating_sub(1), Engine::Auto).expect("rank check");
        pass &= report.pass;
        for row in &report.rows {
            pass &= row.divisors.iter().all(|e| e.is_one());
        }
    }
    report("C9 graded-ranks n<=12, lattice n<=7", pass, start.elapsed());
    assert!(pass);
}

#[test]
fn criterion_10_restriction_homomorphism() {
    run_and_assert(
        "C10 restriction n<=6",
        "restriction",
        &VerifyOptions {
            max_n: Some(6),
            ..Default::default()
        },
        None,
    );
}

#[test]
fn criterion_11_induction_and_spanning() {
    let opts = VerifyOptions {
        max_n: Some(7),
        ..Default::default()
    };
    run_and_assert("C11 induction-phi n<=7", "induction-phi", &opts, None);
    run_and_assert("C11 spanning n<=7", "spanning", &opts, None);
}

#[test]
fn criterion_12_commutators() {
    run_and_assert(
        "C12 commutators w<=8",
        "commutators",
        &VerifyOptions {
            max_n: Some(8),
            ..Default::default()
        },
        None,
    );
}

#[test]
fn criterion_13_performance_gate() {
    // full verification sweep capped at n = 6
    let start = Instant::now();
    let reports = run_all(&VerifyOptions {
        max_n: Some(6),
        max_d: None,
        engine: Engine::Auto,
    })
    .expect("verify all");
    let sweep = start.elapsed();
    let sweep_ok = reports.iter().all(|r| r.pass) && sweep <= Duration::from_secs(300);
    report("C13 verify-all max-n=6 under 5min", sweep_ok, sweep);
    assert!(sweep_ok, "sweep took {sweep:?}");

    // per-pair cup products at n = 12 after the table is built
    hilbcup::character::table(12).expect("table n=12");
    let pairs = [
        (vec![2usize, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1], vec![2usize, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1]),
        (vec![6, 3, 2, 1], vec![4, 4, 2, 2]),
        (vec![12], vec![11, 1]),
        (vec![5, 4, 2, 1], vec![3, 3, 3, 3]),
    ];
    let mut worst = Duration::ZERO;
    for (l, m) in pairs {
        let f = ClassFunction::<BigInt>::basis(Partition::new(l));
        let g = ClassFunction::<BigInt>::basis(Partition::new(m));
        let t0 = Instant::now();
        let product = cup(&f, &g, Engine::Character).expect("cup at n=12");
        let dt = t0.elapsed();
        worst = worst.max(dt);
        std::hint::black_box(product);
    }
    let pair_ok = worst <= Duration::from_secs(1);
    report("C13 cup-per-pair n=12 under 1s", pair_ok, worst);
    assert!(pair_ok, "slowest pair took {worst:?}");
}
