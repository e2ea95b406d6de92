//! Built-in exact-identity suites behind `equidist selftest`.

use crate::expsum::{verify_parseval, verify_twisted_mult};
use crate::factorize::{FactorTable, Factorization};
use crate::modular::gcd_u64;
use crate::polynomial::{eval_reduced, IntPolynomial};
use crate::roots::{roots_mod_n, RootCache};

#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checked: u64,
    pub failed: u64,
}

#[derive(Debug, Clone)]
pub struct SelftestReport {
    pub suites: Vec<SuiteResult>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.failed == 0)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for s in &self.suites {
            out.push_str(&format!(
                "{:<28} checked {:>6}  failed {:>3}  {}\n",
                s.name,
                s.checked,
                s.failed,
                if s.failed == 0 { "ok" } else { "FAIL" }
            ));
        }
        let total: u64 = self.suites.iter().map(|s| s.failed).sum();
        out.push_str(&format!(
            "selftest: {}\n",
            if total == 0 { "all suites passed".to_string() } else { format!("{total} failures") }
        ));
        out
    }
}

fn fixture_polys() -> Vec<IntPolynomial> {
    vec![
        IntPolynomial::from_i64(&[1, 0, 1]).unwrap(),
        IntPolynomial::from_i64(&[-2, 0, 1]).unwrap(),
        IntPolynomial::from_i64(&[-1, -1, 0, 1]).unwrap(),
    ]
}

/// Pipeline root set equals the direct residue scan.
pub(crate) fn root_set_matches_scan(f: &IntPolynomial, n: u64, roots: &[u64]) -> bool {
    let reduced = f.reduce_mod(n);
    let scanned: Vec<u64> = (0..n).filter(|&m| eval_reduced(&reduced, m, n) == 0).collect();
    scanned == roots
}

fn suite_roots_vs_scan() -> SuiteResult {
    let table = FactorTable::build(400).unwrap();
    let mut checked = 0;
    let mut failed = 0;
    for f in fixture_polys() {
        for n in 1..=400u64 {
            let rs = roots_mod_n(&f, n, &table.factor(n).unwrap()).unwrap();
            checked += 1;
            if !root_set_matches_scan(&f, n, rs.roots()) {
                failed += 1;
            }
        }
    }
    SuiteResult { name: "roots-vs-brute-force", checked, failed }
}

fn suite_parseval() -> SuiteResult {
    let table = FactorTable::build(200).unwrap();
    let mut checked = 0;
    let mut failed = 0;
    for f in fixture_polys() {
        for n in 1..=200u64 {
            let rs = roots_mod_n(&f, n, &table.factor(n).unwrap()).unwrap();
            let tol = 1e-6 * n as f64 * rs.count().max(1) as f64;
            checked += 1;
            if verify_parseval(&rs) > tol {
                failed += 1;
            }
        }
    }
    SuiteResult { name: "parseval-identity", checked, failed }
}

fn suite_twisted_multiplicativity() -> SuiteResult {
    let mut checked = 0;
    let mut failed = 0;
    for f in fixture_polys() {
        for n in 2..=30u64 {
            for n2 in (n + 1)..=31u64 {
                if gcd_u64(n, n2) != 1 {
                    continue;
                }
                let rs_n = roots_mod_n(&f, n, &Factorization::of(n)).unwrap();
                let rs_n2 = roots_mod_n(&f, n2, &Factorization::of(n2)).unwrap();
                let tol = 1e-9 * ((rs_n.count() * rs_n2.count()) as f64 + 1.0);
                let (a, b) = verify_twisted_mult(&f, n, n2, 1, 2).unwrap();
                checked += 1;
                if a > tol || b > tol {
                    failed += 1;
                }
            }
        }
    }
    SuiteResult { name: "twisted-multiplicativity", checked, failed }
}

fn suite_multiplicativity_of_counts() -> SuiteResult {
    let table = FactorTable::build(4900).unwrap();
    let mut checked = 0;
    let mut failed = 0;
    for f in fixture_polys() {
        let cache = RootCache::build(&f, &table).unwrap();
        let counts = cache.count_table(&table);
        for m in 2..=70u64 {
            for n in (m + 1)..=70u64 {
                if m * n > 4900 || gcd_u64(m, n) != 1 {
                    continue;
                }
                checked += 1;
                if counts[(m * n) as usize] != counts[m as usize] * counts[n as usize] {
                    failed += 1;
                }
            }
        }
    }
    SuiteResult { name: "multiplicativity-of-r", checked, failed }
}

pub fn run_selftest() -> SelftestReport {
    SelftestReport {
        suites: vec![
            suite_roots_vs_scan(),
            suite_parseval(),
            suite_twisted_multiplicativity(),
            suite_multiplicativity_of_counts(),
        ],
    }
}
