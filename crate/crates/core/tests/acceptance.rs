//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Runs as a plain binary (`harness = false`) so the report is printed even
//! when everything passes.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::{One, Signed, Zero};

use zetarh::enumerator::{classify, family, from_zeta, moment_residual, SelfDuality, WeightEnumerator};
use zetarh::exactnum::{int, rat, rational_to_f64, Rational};
use zetarh::poly::int_poly;
use zetarh::realroots::discriminant;
use zetarh::rh::{genus3_cubic, rh_direct_exact, rh_genus1, rh_genus2, rh_genus3};
use zetarh::scan::{explicit_g_cubic, g_discriminant_factor, rh_q_boundary, scan_n, threshold_constants};
use zetarh::zeta::{mirror_holds, zeta_polynomial};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn within(elapsed: Duration, limit: Duration) -> String {
    format!("{:.2}s of {:.0}s budget", elapsed.as_secs_f64(), limit.as_secs_f64())
}

/// Table reproduction, one row per q. Also returns the verdict string.
fn table_row(q: Rational, expected: usize, n_max: usize, verdict_log: &mut Vec<(Rational, String)>) -> Outcome {
    let start = Instant::now();
    let report = scan_n(&q, n_max).expect("scan");
    let elapsed = start.elapsed();
    let got = report.max_prefix_n;
    let verdicts: String = report
        .rows
        .iter()
        .map(|r| if r.holds { 'T' } else { 'F' })
        .collect();
    verdict_log.push((q.clone(), verdicts.clone()));
    let pass = got == Some(expected) && elapsed <= Duration::from_secs(15 * 60);
    outcome(
        pass,
        format!(
            "q = {q}: max_prefix_n = {} (expected {expected}); verdicts n = 2..{n_max}: {verdicts}; {}",
            got.map_or("none".to_string(), |n| n.to_string()),
            within(elapsed, Duration::from_secs(15 * 60))
        ),
    )
}

/// Each row must read T…TF…F.
fn prefix_monotone(log: &[(Rational, String)]) -> Outcome {
    let bad: Vec<String> = log
        .iter()
        .filter(|(_, v)| v.trim_start_matches('T').contains('T'))
        .map(|(q, v)| format!("q = {q}: {v}"))
        .collect();
    let detail = if bad.is_empty() {
        format!("{} rows", log.len())
    } else {
        format!("not a prefix: {}", bad.join("; "))
    };
    outcome(bad.is_empty() && log.len() == 6, detail)
}

/// Rounds to `sig` significant figures, as a string.
fn sig_figs(x: f64, sig: i32) -> String {
    let mag = x.abs().log10().floor() as i32;
    let decimals = (sig - 1 - mag).max(0) as usize;
    format!("{x:.decimals$}")
}

fn thresholds() -> Outcome {
    let start = Instant::now();
    let eps = rat(1, 1_000_000);
    let t = threshold_constants(&eps).expect("thresholds");
    let elapsed = start.elapsed();
    let printed = [0.53590, 7.46410, 0.47214, 3.46812, 0.47448, 2.47607, 7.38366, 0.356397];
    let mut bad = Vec::new();
    let mut shown = Vec::new();
    for ((name, e), want) in t.named().iter().zip(printed) {
        let mid = rational_to_f64(&e.midpoint());
        let (a, b) = (sig_figs(mid, 5), sig_figs(want, 5));
        shown.push(format!("{name}={a}"));
        if a != b || e.width() > eps {
            bad.push(format!("{name}: {a} vs {b}"));
        }
    }
    let pass = bad.is_empty() && elapsed < Duration::from_secs(10);
    let detail = if bad.is_empty() {
        shown.join(", ")
    } else {
        bad.join("; ")
    };
    outcome(pass, format!("{detail}; {}", within(elapsed, Duration::from_secs(10))))
}

fn g_identity() -> Outcome {
    let mut rng = common::rng(3);
    let mut checked = 0;
    for _ in 0..20 {
        let q = loop {
            let q = common::random_rational(&mut rng, 0.3, 8.0, 97);
            if !q.is_one() && q.is_positive() {
                break q;
            }
        };
        let w = family(4, &q).expect("family");
        let lhs = genus3_cubic(&w).expect("cubic").to_poly().scale(&int(5));
        let g = explicit_g_cubic(&q);
        let rhs = g.scale(&(int(4) * (&q - int(1))));
        if lhs != rhs {
            return outcome(false, format!("cubic identity fails at q = {q}"));
        }
        let disc = discriminant(&g).expect("discriminant");
        let expected = int(35) * g_discriminant_factor().eval(&q);
        if disc != expected {
            return outcome(false, format!("discriminant identity fails at q = {q}"));
        }
        checked += 1;
    }
    let at_two = discriminant(&explicit_g_cubic(&int(2))).expect("discriminant");
    outcome(
        at_two == int(644560),
        format!("{checked} random q exact; D_g(2) = {at_two}"),
    )
}

fn generated(seed: u64) -> Vec<common::Generated> {
    let mut rng = common::rng(seed);
    let mut out = Vec::new();
    for g in 1..=3 {
        for _ in 0..300 {
            let d = if g == 3 { 2..=6 } else { 2..=5 };
            out.push(common::random_self_dual(&mut rng, g, d));
        }
    }
    out
}

fn criterion_equivalence(cases: &[common::Generated]) -> Outcome {
    let start = Instant::now();
    let mut counts = [(0usize, 0usize); 3];
    for c in cases {
        let direct = rh_direct_exact(&c.w).expect("direct").holds;
        let criterion = match c.g {
            1 => rh_genus1(&c.w),
            2 => rh_genus2(&c.w),
            _ => rh_genus3(&c.w),
        }
        .expect("criterion")
        .holds;
        if direct != criterion {
            return outcome(
                false,
                format!(
                    "genus {} disagreement at q = {}, n = {}: direct {direct}, criterion {criterion}",
                    c.g,
                    c.w.q(),
                    c.w.n()
                ),
            );
        }
        let slot = &mut counts[c.g - 1];
        slot.0 += 1;
        slot.1 += usize::from(direct);
    }
    let elapsed = start.elapsed();
    outcome(
        elapsed < Duration::from_secs(300),
        format!(
            "agree on {} cases (RH true in {}/{}, {}/{}, {}/{} for g = 1, 2, 3); {}",
            cases.len(),
            counts[0].1,
            counts[0].0,
            counts[1].1,
            counts[1].0,
            counts[2].1,
            counts[2].0,
            within(elapsed, Duration::from_secs(300))
        ),
    )
}

fn round_trips(cases: &[common::Generated]) -> Outcome {
    for c in cases {
        let w = &c.w;
        let fail = |what: &str| outcome(false, format!("{what} at q = {}, n = {}", w.q(), w.n()));
        let class = classify(w).expect("classify");
        if class.selfdual != Some(SelfDuality::Plus) || class.genus != Some(c.g as i64) {
            return fail("not self-dual of the requested genus");
        }
        let z = zeta_polynomial(w).expect("zeta");
        if z.p() != &c.p {
            return fail("zeta_polynomial ∘ from_zeta ≠ id");
        }
        let back = from_zeta(z.p(), w.n(), z.d(), w.q()).expect("from_zeta");
        if &back != w {
            return fail("from_zeta ∘ zeta_polynomial ≠ id");
        }
        if !mirror_holds(z.p(), w.q(), c.g) {
            return fail("mirror P_i = q^(i−g) P_(2g−i) fails");
        }
        for j in 0..=w.n() {
            if !moment_residual(w, j).expect("moment").is_zero() {
                return fail(&format!("moment residual {j} nonzero"));
            }
        }
    }
    outcome(true, format!("{} generated enumerators", cases.len()))
}

fn known_zeta() -> Outcome {
    let start = Instant::now();
    let mut a = vec![Rational::zero(); 9];
    a[0] = int(1);
    a[4] = int(14);
    a[8] = int(1);
    let w = WeightEnumerator::new(int(2), 8, a).expect("enumerator");
    let z = zeta_polynomial(&w).expect("zeta");
    let expected = int_poly(&[1, 2, 2]).scale(&rat(1, 5));
    // Roots of aT² + bT + c form a conjugate pair of modulus² c/a when
    // b² < 4ac; here that is 1/2 = 1/q.
    let p = z.p();
    let (c0, c1, c2) = (p.coeff(0), p.coeff(1), p.coeff(2));
    let conjugate_pair = &c1 * &c1 < int(4) * &c2 * &c0;
    let modulus_sq = &c0 / &c2;
    let verdict = rh_direct_exact(&w).expect("direct").holds;
    let elapsed = start.elapsed();
    let pass = p == &expected
        && conjugate_pair
        && modulus_sq == rat(1, 2)
        && verdict
        && elapsed < Duration::from_secs(1);
    outcome(
        pass,
        format!(
            "P = {p}; |T|² = {modulus_sq}; direct-exact {verdict}; {}",
            within(elapsed, Duration::from_secs(1))
        ),
    )
}

fn boundaries() -> Outcome {
    let start = Instant::now();
    let t = threshold_constants(&rat(1, 100_000_000)).expect("thresholds");
    let tol = rat(1, 10_000);
    let mut lines = Vec::new();
    let mut pass = true;
    for genus in 1..=3 {
        let b = rh_q_boundary(genus, &rat(1, 100_000)).expect("boundary");
        let (lo, hi) = t.for_genus(genus).expect("genus");
        let check = |flip: Option<&zetarh::scan::Flip>, e: &zetarh::Enclosure| match flip {
            Some(f) => {
                let gap = (f.lo.clone() + &f.hi) / int(2) - e.midpoint();
                gap.abs() <= tol
            }
            None => false,
        };
        let ok = check(b.lower.as_ref(), lo) && check(b.upper.as_ref(), hi);
        pass &= ok;
        let show = |f: Option<&zetarh::scan::Flip>| {
            f.map_or("none".to_string(), |f| format!("{:.6}", rational_to_f64(&f.lo)))
        };
        lines.push(format!(
            "g{genus} [{}, {}] vs [{:.6}, {:.6}]",
            show(b.lower.as_ref()),
            show(b.upper.as_ref()),
            rational_to_f64(&lo.midpoint()),
            rational_to_f64(&hi.midpoint())
        ));
    }
    let elapsed = start.elapsed();
    pass &= elapsed < Duration::from_secs(120);
    outcome(
        pass,
        format!("{}; {}", lines.join(", "), within(elapsed, Duration::from_secs(120))),
    )
}

/// Runs `f`, turning a panic into a failed outcome.
fn guarded(f: impl FnOnce() -> Outcome) -> Outcome {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(o) => o,
        Err(e) => {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            outcome(false, format!("panicked: {msg}"))
        }
    }
}

fn main() -> ExitCode {
    let mut results: Vec<(String, Outcome)> = Vec::new();
    let mut report = |name: &str, o: Outcome| {
        println!("{} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        results.push((name.to_string(), o));
    };

    let rows = [
        (rat(2, 1), 6, 10),
        (rat(3, 2), 8, 10),
        (rat(11, 10), 36, 40),
        (rat(21, 20), 71, 75),
        (rat(4, 5), 29, 33),
        (rat(1, 2), 5, 8),
    ];
    let mut verdict_log = Vec::new();
    for (q, expected, n_max) in rows {
        let name = format!("criterion 1 (table row q = {q})");
        report(&name, guarded(|| table_row(q, expected, n_max, &mut verdict_log)));
    }
    report("prefix monotonicity of table rows", prefix_monotone(&verdict_log));
    report("criterion 2 (threshold constants)", guarded(thresholds));
    report("criterion 3 (explicit cubic identity)", guarded(g_identity));
    let cases = generated(4);
    report(
        "criterion 4 (criterion-direct equivalence)",
        guarded(|| criterion_equivalence(&cases)),
    );
    report("criterion 5 (round trips)", guarded(|| round_trips(&cases)));
    report("criterion 6 (known zeta value)", guarded(known_zeta));
    report("criterion 7 (boundary agreement)", guarded(boundaries));

    let failed: Vec<&str> = results
        .iter()
        .filter(|(_, o)| !o.pass)
        .map(|(n, _)| n.as_str())
        .collect();
    println!(
        "acceptance: {} passed, {} failed",
        results.len() - failed.len(),
        failed.len()
    );
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
