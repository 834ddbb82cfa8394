//! Sweeps over the family `W_{n,q} = (x² + (q−1)y²)^n` and the constants
//! bounding the `q`-ranges where it satisfies the Riemann hypothesis.

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::enumerator::family;
use crate::error::{domain, Error, Result};
use crate::exactnum::{format_decimal, int, parse_rational, rat, Rational};
use crate::poly::{int_poly, ExactPoly, Poly};
use crate::realroots::{isolate_real_roots, shrink_interval, RootInterval};
use crate::rh::{cross_checked, rh_direct_exact, Method};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    pub n: usize,
    pub genus: usize,
    pub holds: bool,
    pub method: Method,
    /// Closed-form criterion that confirmed the verdict, for genus ≤ 3.
    pub cross_check: Option<Method>,
    pub elapsed: Duration,
    pub cached: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub q: Rational,
    pub rows: Vec<ScanRow>,
    /// Largest `N` with the hypothesis true for every `2 ≤ n ≤ N`; `None`
    /// when it already fails at `n = 2`.
    pub max_prefix_n: Option<usize>,
}

#[derive(Debug, Clone, Default)]
pub struct ScanOptions {
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// JSON-lines row cache, read on start and appended as rows finish.
    pub cache: Option<PathBuf>,
}

#[derive(Debug, Serialize, Deserialize)]
struct CachedRow {
    q: String,
    n: usize,
    genus: usize,
    holds: bool,
    method: String,
}

fn load_cache(path: &Path, q: &Rational) -> Result<BTreeMap<usize, ScanRow>> {
    let mut rows = BTreeMap::new();
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(rows),
        Err(e) => return Err(Error::Io(e.to_string())),
    };
    for (lineno, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| Error::Io(e.to_string()))?;
        if line.trim().is_empty() {
            continue;
        }
        let row: CachedRow = serde_json::from_str(&line)
            .map_err(|e| Error::Parse(format!("cache line {}: {e}", lineno + 1)))?;
        if parse_rational(&row.q)? != *q {
            continue;
        }
        rows.insert(
            row.n,
            ScanRow {
                n: row.n,
                genus: row.genus,
                holds: row.holds,
                method: row.method.parse()?,
                cross_check: None,
                elapsed: Duration::ZERO,
                cached: true,
            },
        );
    }
    Ok(rows)
}

fn scan_row(n: usize, q: &Rational) -> Result<ScanRow> {
    let start = Instant::now();
    let w = family(n, q)?;
    let verdict = cross_checked(&w)?;
    let genus = n - 1;
    let cross_check = match genus {
        1 => Some(Method::Genus1),
        2 => Some(Method::Genus2),
        3 => Some(Method::Genus3),
        _ => None,
    };
    Ok(ScanRow {
        n,
        genus,
        holds: verdict.holds,
        method: verdict.method,
        cross_check,
        elapsed: start.elapsed(),
        cached: false,
    })
}

fn max_prefix(rows: &[ScanRow]) -> Option<usize> {
    rows.iter()
        .take_while(|r| r.holds)
        .last()
        .map(|r| r.n)
}

pub fn scan_n(q: &Rational, n_max: usize) -> Result<ScanReport> {
    scan_n_with(q, n_max, &ScanOptions::default())
}

pub fn scan_n_with(q: &Rational, n_max: usize, opts: &ScanOptions) -> Result<ScanReport> {
    if !q.is_positive() || q.is_one() {
        return domain(format!("q must be positive and different from 1, got {q}"));
    }
    if n_max < 2 {
        return domain(format!("n_max must be at least 2, got {n_max}"));
    }
    let mut done = match &opts.cache {
        Some(path) => load_cache(path, q)?,
        None => BTreeMap::new(),
    };
    let todo: Vec<usize> = (2..=n_max).filter(|n| !done.contains_key(n)).collect();
    let sink = match &opts.cache {
        Some(path) => Some(Mutex::new(
            OpenOptions::new()
                .create(true)
                .append(true)
                .open(path)
                .map_err(|e| Error::Io(e.to_string()))?,
        )),
        None => None,
    };
    // Heaviest rows first keeps the pool busy.
    let work = || -> Result<Vec<ScanRow>> {
        todo.par_iter()
            .rev()
            .map(|&n| {
                let row = scan_row(n, q)?;
                if let Some(sink) = &sink {
                    let line = serde_json::to_string(&CachedRow {
                        q: q.to_string(),
                        n,
                        genus: row.genus,
                        holds: row.holds,
                        method: row.method.as_str().to_string(),
                    })
                    .expect("cache rows serialize");
                    let mut f = sink.lock().expect("cache lock");
                    writeln!(f, "{line}")
                        .and_then(|_| f.flush())
                        .map_err(|e| Error::Io(e.to_string()))?;
                }
                Ok(row)
            })
            .collect()
    };
    let fresh = match opts.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| Error::Io(e.to_string()))?
            .install(work)?,
        None => work()?,
    };
    for row in fresh {
        done.insert(row.n, row);
    }
    let rows: Vec<ScanRow> = done.into_values().filter(|r| r.n <= n_max).collect();
    let max_prefix_n = max_prefix(&rows);
    Ok(ScanReport {
        q: q.clone(),
        rows,
        max_prefix_n,
    })
}

impl ScanReport {
    /// Columns `n,genus,verdict,method,ms`; `ms` is left empty unless
    /// `timings` is set so that output is reproducible byte for byte.
    pub fn to_csv(&self, timings: bool) -> String {
        let mut out = String::from("n,genus,verdict,method,ms\n");
        for r in &self.rows {
            let ms = if timings {
                format!("{:.3}", r.elapsed.as_secs_f64() * 1e3)
            } else {
                String::new()
            };
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                r.n,
                r.genus,
                r.holds,
                r.method.as_str(),
                ms
            ));
        }
        out
    }

    pub fn to_json(&self, timings: bool) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                let mut v = json!({
                    "n": r.n,
                    "genus": r.genus,
                    "verdict": r.holds,
                    "method": r.method.as_str(),
                });
                if let Some(c) = r.cross_check {
                    v["cross_check"] = json!(c.as_str());
                }
                if timings {
                    v["ms"] = json!((r.elapsed.as_secs_f64() * 1e6).round() / 1e3);
                }
                v
            })
            .collect();
        json!({
            "q": self.q.to_string(),
            "max_prefix_n": self.max_prefix_n,
            "rows": rows,
        })
    }
}

/// `5X³ + 5(q−2)X² − 2(11q−6)X − 7q² + 20q − 8`: the genus-three criterion
/// cubic of `W_{4,q}` up to the factor `4(q−1)/5`.
pub fn explicit_g_cubic(q: &Rational) -> ExactPoly {
    Poly::new(vec![
        -int(7) * q * q + int(20) * q - int(8),
        -int(2) * (int(11) * q - int(6)),
        int(5) * (q - int(2)),
        int(5),
    ])
}

/// `100q⁵ + 495q⁴ + 2056q³ − 2928q² + 1408q − 256`; the discriminant of
/// [`explicit_g_cubic`] is 35 times this.
pub fn g_discriminant_factor() -> ExactPoly {
    int_poly(&[-256, 1408, -2928, 2056, 495, 100])
}

/// A rational interval known to contain a constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enclosure {
    pub lo: Rational,
    pub hi: Rational,
    pub definition: String,
}

impl Enclosure {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / int(2)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn to_json(&self, digits: usize) -> Value {
        json!({
            "lo": format_decimal(&self.lo, digits),
            "hi": format_decimal(&self.hi, digits),
            "lo_exact": self.lo.to_string(),
            "hi_exact": self.hi.to_string(),
            "definition": self.definition,
        })
    }
}

/// Endpoints of the `q`-ranges for genus one to three, plus the two
/// auxiliary constants of the genus-three analysis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdSet {
    pub g1_lo: Enclosure,
    pub g1_hi: Enclosure,
    pub g2_lo: Enclosure,
    pub g2_hi: Enclosure,
    pub g3_lo: Enclosure,
    pub g3_hi: Enclosure,
    pub beta2: Enclosure,
    pub beta4_sq: Enclosure,
}

impl ThresholdSet {
    pub fn named(&self) -> [(&'static str, &Enclosure); 8] {
        [
            ("g1_lo", &self.g1_lo),
            ("g1_hi", &self.g1_hi),
            ("g2_lo", &self.g2_lo),
            ("g2_hi", &self.g2_hi),
            ("g3_lo", &self.g3_lo),
            ("g3_hi", &self.g3_hi),
            ("beta2", &self.beta2),
            ("beta4_sq", &self.beta4_sq),
        ]
    }

    /// Endpoints of the range for one genus.
    pub fn for_genus(&self, genus: usize) -> Option<(&Enclosure, &Enclosure)> {
        match genus {
            1 => Some((&self.g1_lo, &self.g1_hi)),
            2 => Some((&self.g2_lo, &self.g2_hi)),
            3 => Some((&self.g3_lo, &self.g3_hi)),
            _ => None,
        }
    }

    pub fn to_json(&self, digits: usize) -> Value {
        let mut obj = serde_json::Map::new();
        for (name, e) in self.named() {
            obj.insert(name.to_string(), e.to_json(digits));
        }
        Value::Object(obj)
    }
}

/// Real roots of `p` as isolating intervals of width ≤ `eps`, increasing.
fn roots_within(p: &ExactPoly, eps: &Rational) -> Result<Vec<RootInterval>> {
    isolate_real_roots(p)?
        .iter()
        .map(|iv| shrink_interval(p, iv, eps))
        .collect()
}

fn root_enclosure(
    p: &ExactPoly,
    pick: impl Fn(&[RootInterval]) -> Option<&RootInterval>,
    eps: &Rational,
    definition: String,
) -> Result<Enclosure> {
    let roots = roots_within(p, eps)?;
    let iv = pick(&roots)
        .ok_or_else(|| Error::Inconsistent(format!("no suitable root of {p}")))?;
    Ok(Enclosure {
        lo: iv.lo.clone(),
        hi: iv.hi.clone(),
        definition,
    })
}

/// Square of the positive root `t` of `p`, with `t²` enclosed to `eps`.
fn squared_root_enclosure(p: &ExactPoly, eps: &Rational, definition: String) -> Result<Enclosure> {
    let positive = |rs: &[RootInterval]| {
        let pos: Vec<&RootInterval> = rs.iter().filter(|r| r.lo.is_positive()).collect();
        (pos.len() == 1).then(|| pos[0].clone())
    };
    let mut t_eps = eps.clone();
    loop {
        let roots = roots_within(p, &t_eps)?;
        let iv = positive(&roots)
            .ok_or_else(|| Error::Inconsistent(format!("expected one positive root of {p}")))?;
        let lo = &iv.lo * &iv.lo;
        let hi = &iv.hi * &iv.hi;
        if &hi - &lo <= *eps {
            return Ok(Enclosure { lo, hi, definition });
        }
        t_eps /= int(8);
    }
}

/// Interval containing `∛c` for every `c` in `[lo, hi]`, each end refined
/// to width `eps`.
fn cube_root_interval(lo: &Rational, hi: &Rational, eps: &Rational) -> Result<(Rational, Rational)> {
    let end = |c: &Rational| -> Result<RootInterval> {
        let p = Poly::new(vec![-c.clone(), Rational::zero(), Rational::zero(), Rational::one()]);
        let roots = roots_within(&p, eps)?;
        roots
            .into_iter()
            .next()
            .ok_or_else(|| Error::Inconsistent(format!("no real cube root of {c}")))
    };
    Ok((end(lo)?.lo, end(hi)?.hi))
}

/// `α² = ((1 + ∛(5(29+6√6)) + ∛(5(29−6√6)))/6)²` by interval evaluation.
fn alpha_squared(eps: &Rational) -> Result<Enclosure> {
    let definition = "alpha^2, alpha = (1 + cbrt(5(29+6sqrt(6))) + cbrt(5(29-6sqrt(6))))/6".to_string();
    let mut inner = eps / int(64);
    loop {
        let sqrt6 = roots_within(&int_poly(&[-6, 0, 1]), &inner)?
            .pop()
            .expect("X² − 6 has a positive root");
        let plus = (int(145) + int(30) * &sqrt6.lo, int(145) + int(30) * &sqrt6.hi);
        let minus = (int(145) - int(30) * &sqrt6.hi, int(145) - int(30) * &sqrt6.lo);
        let u = cube_root_interval(&plus.0, &plus.1, &inner)?;
        let v = cube_root_interval(&minus.0, &minus.1, &inner)?;
        let alpha_lo = (int(1) + &u.0 + &v.0) / int(6);
        let alpha_hi = (int(1) + &u.1 + &v.1) / int(6);
        let lo = &alpha_lo * &alpha_lo;
        let hi = &alpha_hi * &alpha_hi;
        if &hi - &lo <= *eps {
            return Ok(Enclosure { lo, hi, definition });
        }
        inner /= int(16);
    }
}

pub fn threshold_constants(eps: &Rational) -> Result<ThresholdSet> {
    if !eps.is_positive() {
        return domain("eps must be positive");
    }
    let g1 = int_poly(&[4, -8, 1]);
    let g1_lo = root_enclosure(&g1, |r| r.first(), eps, "4-2*sqrt(3): smaller root of t^2-8t+4".into())?;
    let g1_hi = root_enclosure(&g1, |r| r.last(), eps, "4+2*sqrt(3): larger root of t^2-8t+4".into())?;
    let g2_lo = root_enclosure(
        &int_poly(&[-4, 8, 1]),
        |r| r.last(),
        eps,
        "-4+2*sqrt(5): positive root of t^2+8t-4".into(),
    )?;
    let g2_hi = alpha_squared(eps)?;
    let g3_lo = root_enclosure(
        &g_discriminant_factor(),
        |r| (r.len() == 1).then(|| &r[0]),
        eps,
        "beta1: unique real root of 100t^5+495t^4+2056t^3-2928t^2+1408t-256".into(),
    )?;
    let g3_hi = squared_root_enclosure(
        &int_poly(&[-8, -24, -20, 4, 13]),
        eps,
        "beta3^2, beta3 the positive root of 13t^4+4t^3-20t^2-24t-8".into(),
    )?;
    let beta2 = squared_root_enclosure(
        &int_poly(&[-6, -20, -19, 10]),
        eps,
        "beta2: square of the unique real root of 10t^3-19t^2-20t-6".into(),
    )?;
    let beta4_sq = squared_root_enclosure(
        &int_poly(&[-8, 24, -20, -4, 13]),
        eps,
        "beta4^2, beta4 the positive root of 13t^4-4t^3-20t^2+24t-8".into(),
    )?;
    Ok(ThresholdSet {
        g1_lo,
        g1_hi,
        g2_lo,
        g2_hi,
        g3_lo,
        g3_hi,
        beta2,
        beta4_sq,
    })
}

/// An interval `[lo, hi]` whose ends carry different verdicts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flip {
    pub lo: Rational,
    pub hi: Rational,
    /// Verdict at `lo`; `hi` has the opposite one.
    pub holds_at_lo: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QBoundary {
    pub genus: usize,
    /// Flip below `q = 1`, closest to it; `None` when unbounded on that side.
    pub lower: Option<Flip>,
    /// Flip above `q = 1`, closest to it; `None` when unbounded on that side.
    pub upper: Option<Flip>,
    /// Every flip found on the sampling grid, increasing.
    pub flips: Vec<Flip>,
}

pub const BOUNDARY_GRID_DENOMINATOR: i64 = 64;
pub const BOUNDARY_Q_MAX: i64 = 100;

fn family_verdict(n: usize, q: &Rational) -> Result<bool> {
    Ok(rh_direct_exact(&family(n, q)?)?.holds)
}

/// Bisects every verdict flip of `W_{genus+1,q}` on `(0, 100]` down to width
/// `eps`, starting from a grid of step 1/64 that skips `q = 1`.
pub fn rh_q_boundary(genus: usize, eps: &Rational) -> Result<QBoundary> {
    if !(1..=3).contains(&genus) {
        return domain(format!("boundary search supports genus 1 to 3, got {genus}"));
    }
    if !eps.is_positive() {
        return domain("eps must be positive");
    }
    let n = genus + 1;
    let den = BOUNDARY_GRID_DENOMINATOR;
    let grid: Vec<Rational> = (1..=BOUNDARY_Q_MAX * den)
        .filter(|&k| k != den)
        .map(|k| rat(k, den))
        .collect();
    let verdicts: Vec<bool> = grid
        .par_iter()
        .map(|q| family_verdict(n, q))
        .collect::<Result<_>>()?;
    let mut flips = Vec::new();
    for i in 1..grid.len() {
        if verdicts[i - 1] == verdicts[i] {
            continue;
        }
        let (mut lo, mut hi) = (grid[i - 1].clone(), grid[i].clone());
        let holds_at_lo = verdicts[i - 1];
        while &hi - &lo > *eps {
            let mid = (&lo + &hi) / int(2);
            if mid.is_one() {
                break;
            }
            if family_verdict(n, &mid)? == holds_at_lo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        flips.push(Flip { lo, hi, holds_at_lo });
    }
    let one = Rational::one();
    let lower = flips.iter().rev().find(|f| f.hi < one).cloned();
    let upper = flips.iter().find(|f| f.lo > one).cloned();
    Ok(QBoundary {
        genus,
        lower,
        upper,
        flips,
    })
}

impl QBoundary {
    pub fn to_json(&self, digits: usize) -> Value {
        let flip = |f: &Flip| {
            json!({
                "lo": format_decimal(&f.lo, digits),
                "hi": format_decimal(&f.hi, digits),
                "holds_at_lo": f.holds_at_lo,
            })
        };
        json!({
            "genus": self.genus,
            "lower": self.lower.as_ref().map(flip),
            "upper": self.upper.as_ref().map(flip),
            "flips": self.flips.iter().map(flip).collect::<Vec<_>>(),
        })
    }
}

/// Exact verdicts for `W_{n,q}` across a grid of `q`.
pub fn conjecture_probe(n: usize, q_grid: &[Rational]) -> Result<Vec<(Rational, bool)>> {
    if n < 2 {
        return domain(format!("n must be at least 2, got {n}"));
    }
    q_grid
        .par_iter()
        .map(|q| {
            if !q.is_positive() || q.is_one() {
                return domain(format!("q must be positive and different from 1, got {q}"));
            }
            Ok((q.clone(), family_verdict(n, q)?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rh::genus3_cubic;

    #[test]
    fn explicit_cubic_examples() {
        assert_eq!(explicit_g_cubic(&int(2)), int_poly(&[4, -32, 0, 5]));
        assert_eq!(explicit_g_cubic(&int(3)), int_poly(&[-11, -54, 5, 5]));
    }

    #[test]
    fn explicit_cubic_matches_criterion() {
        for q in [int(2), int(3), rat(1, 2), rat(21, 20), rat(7, 3)] {
            let lhs = genus3_cubic(&family(4, &q).unwrap()).unwrap().to_poly().scale(&int(5));
            let rhs = explicit_g_cubic(&q).scale(&(int(4) * (&q - int(1))));
            assert_eq!(lhs, rhs, "q = {q}");
        }
    }

    #[test]
    fn small_scans() {
        let r = scan_n(&int(2), 5).unwrap();
        assert_eq!(r.max_prefix_n, Some(5));
        assert_eq!(r.rows.iter().map(|r| r.n).collect::<Vec<_>>(), vec![2, 3, 4, 5]);
        let r = scan_n(&rat(3, 2), 10).unwrap();
        assert_eq!(r.max_prefix_n, Some(8));
        assert!(!r.rows[7].holds && !r.rows[8].holds);
    }

    #[test]
    fn scan_q2_fails_from_six() {
        let r = scan_n(&int(2), 8).unwrap();
        let verdicts: Vec<bool> = r.rows.iter().map(|r| r.holds).collect();
        assert_eq!(verdicts, vec![true, true, true, true, false, false, false]);
        assert_eq!(r.max_prefix_n, Some(5));
    }

    #[test]
    fn scan_rejects_bad_input() {
        assert!(scan_n(&int(1), 5).is_err());
        assert!(scan_n(&int(2), 1).is_err());
    }

    #[test]
    fn csv_is_deterministic() {
        let r = scan_n(&int(2), 3).unwrap();
        assert_eq!(
            r.to_csv(false),
            "n,genus,verdict,method,ms\n2,1,true,direct-exact,\n3,2,true,direct-exact,\n"
        );
    }

    #[test]
    fn cache_round_trip() {
        let dir = std::env::temp_dir().join(format!("zetarh-cache-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("rows.jsonl");
        let _ = std::fs::remove_file(&path);
        let opts = ScanOptions { jobs: Some(2), cache: Some(path.clone()) };
        let first = scan_n_with(&rat(3, 2), 6, &opts).unwrap();
        assert!(first.rows.iter().all(|r| !r.cached));
        let second = scan_n_with(&rat(3, 2), 9, &opts).unwrap();
        assert_eq!(second.rows.iter().filter(|r| r.cached).count(), 5);
        assert_eq!(second.max_prefix_n, Some(8));
        let lines = std::fs::read_to_string(&path).unwrap().lines().count();
        assert_eq!(lines, 8);
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn thresholds_match_printed_decimals() {
        let t = threshold_constants(&rat(1, 1_000_000)).unwrap();
        let expect = [
            (&t.g1_lo, 0.53590),
            (&t.g1_hi, 7.46410),
            (&t.g2_lo, 0.47214),
            (&t.g2_hi, 3.46812),
            (&t.g3_lo, 0.47448),
            (&t.g3_hi, 2.47607),
            (&t.beta2, 7.38366),
            (&t.beta4_sq, 0.356397),
        ];
        for (e, v) in expect {
            assert!(e.width() <= rat(1, 1_000_000));
            let mid = crate::exactnum::rational_to_f64(&e.midpoint());
            assert!((mid - v).abs() < 6e-6, "{} ≉ {v}", mid);
        }
    }

    #[test]
    fn alpha_satisfies_its_cubic() {
        // s = 6α − 1 solves s³ − 75s − 290 = 0.
        let eps = rat(1, 1_000_000_000);
        let a2 = alpha_squared(&eps).unwrap();
        let s_poly = int_poly(&[-290, -75, 0, 1]);
        let s = roots_within(&s_poly, &eps).unwrap().pop().unwrap();
        let alpha = (crate::exactnum::rational_to_f64(&s.midpoint()) + 1.0) / 6.0;
        assert!((alpha * alpha - crate::exactnum::rational_to_f64(&a2.midpoint())).abs() < 1e-8);
    }

    #[test]
    fn beta2_matches_squared_root_cubic() {
        let eps = rat(1, 1_000_000_000);
        let t = threshold_constants(&rat(1, 1_000_000)).unwrap();
        let other = roots_within(&int_poly(&[-36, 172, -761, 100]), &eps).unwrap();
        assert_eq!(other.len(), 1);
        let diff = crate::exactnum::rational_to_f64(&(other[0].midpoint() - t.beta2.midpoint()));
        assert!(diff.abs() < 1e-6);
    }

    #[test]
    fn genus1_boundary() {
        let b = rh_q_boundary(1, &rat(1, 100_000)).unwrap();
        let lo = b.lower.unwrap();
        let hi = b.upper.unwrap();
        assert!(!lo.holds_at_lo && hi.holds_at_lo);
        let s3 = 3f64.sqrt();
        assert!((crate::exactnum::rational_to_f64(&lo.lo) - (4.0 - 2.0 * s3)).abs() < 2e-5);
        assert!((crate::exactnum::rational_to_f64(&hi.hi) - (4.0 + 2.0 * s3)).abs() < 2e-5);
        assert_eq!(b.flips.len(), 2);
    }

    #[test]
    fn probe_examples() {
        let out = conjecture_probe(2, &[int(2), int(8)]).unwrap();
        assert_eq!(out, vec![(int(2), true), (int(8), false)]);
        assert!(conjecture_probe(2, &[int(1)]).is_err());
    }
}
