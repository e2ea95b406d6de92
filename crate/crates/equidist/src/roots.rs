//! Roots of f mod n for every modulus: prime level, Hensel lifting to
//! prime powers, CRT assembly, and a per-prime-power cache for range runs.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::factorize::{FactorTable, Factorization, ModulusFilter};
use crate::fpoly::{self, FPoly};
use crate::modular::{crt_pair, inv_mod};
use crate::polynomial::{eval_reduced, IntPolynomial};

/// Primes up to this bound are scanned directly; larger primes go through
/// gcd(x^p - x, f) splitting.
pub(crate) const BRUTE_FORCE_LIMIT: u64 = 1 << 12;

/// Sorted roots of f mod n in `[0, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSet {
    modulus: u64,
    roots: Vec<u64>,
}

/// Roots divided by their modulus: exact rationals mu/n in `[0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedRoots {
    modulus: u64,
    numerators: Vec<u64>,
}

impl RootSet {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn roots(&self) -> &[u64] {
        &self.roots
    }

    /// r(n)
    pub fn count(&self) -> u64 {
        self.roots.len() as u64
    }

    pub fn normalized(&self) -> NormalizedRoots {
        NormalizedRoots { modulus: self.modulus, numerators: self.roots.clone() }
    }

    /// Check every stored root by exact modular Horner evaluation.
    pub fn verify(&self, f: &IntPolynomial) -> bool {
        let reduced = f.reduce_mod(self.modulus);
        self.roots.iter().all(|&mu| eval_reduced(&reduced, mu, self.modulus) == 0)
    }
}

impl NormalizedRoots {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Exact (numerator, denominator) pairs.
    pub fn values(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        let n = self.modulus;
        self.numerators.iter().map(move |&a| (a, n))
    }

    pub fn to_f64(&self) -> Vec<f64> {
        let n = self.modulus as f64;
        self.numerators.iter().map(|&a| a as f64 / n).collect()
    }
}

/// Sorted roots of f mod p for a prime p.
pub fn roots_mod_p(f: &IntPolynomial, p: u64) -> Result<Vec<u64>> {
    let mut reduced = f.reduce_mod(p);
    fpoly::trim(&mut reduced);
    if reduced.is_empty() {
        return Err(Error::VanishesModP { p });
    }
    if p <= BRUTE_FORCE_LIMIT {
        return Ok(roots_by_scan(&reduced, p));
    }
    Ok(roots_by_splitting(reduced, p))
}

fn roots_by_scan(reduced: &FPoly, m: u64) -> Vec<u64> {
    (0..m).filter(|&x| eval_reduced(reduced, x, m) == 0).collect()
}

/// Distinct roots via gcd(x^p - x, f) and equal-degree splitting into
/// linear factors. Requires odd p (the scan handles small primes).
fn roots_by_splitting(reduced: FPoly, p: u64) -> Vec<u64> {
    debug_assert!(p > 2 && p % 2 == 1);
    let d = fpoly::degree(&reduced).expect("nonzero reduction");
    if d == 0 {
        return Vec::new();
    }
    let f = fpoly::monic(reduced, p);
    if d == 1 {
        return vec![(p - f[0]) % p];
    }
    let xp = fpoly::pow_mod_poly(&fpoly::x_poly(), p, &f, p);
    let linear_part = fpoly::gcd(&fpoly::sub(&xp, &fpoly::x_poly(), p), &f, p);
    let mut roots = Vec::new();
    let mut stack = vec![linear_part];
    while let Some(g) = stack.pop() {
        match fpoly::degree(&g) {
            None | Some(0) => continue,
            Some(1) => {
                roots.push((p - g[0]) % p);
                continue;
            }
            Some(_) => {}
        }
        // split on the quadratic character of (x + a); some shift always
        // separates two distinct roots
        let mut split = None;
        for a in 0..p {
            let base = vec![a % p, 1];
            let w = fpoly::pow_mod_poly(&base, (p - 1) / 2, &g, p);
            let mut w_minus_1 = w;
            if w_minus_1.is_empty() {
                w_minus_1.push(p - 1);
            } else {
                w_minus_1[0] = (w_minus_1[0] + p - 1) % p;
            }
            fpoly::trim(&mut w_minus_1);
            let d1 = fpoly::gcd(&w_minus_1, &g, p);
            let deg1 = fpoly::degree(&d1).map_or(0, |x| x);
            if deg1 > 0 && deg1 < fpoly::degree(&g).unwrap() {
                let rest = fpoly_div_exact(&g, &d1, p);
                split = Some((d1, rest));
                break;
            }
        }
        let (d1, rest) = split.expect("a separating shift exists for distinct roots");
        stack.push(d1);
        stack.push(rest);
    }
    roots.sort_unstable();
    roots
}

/// Exact quotient g / d for monic d dividing g.
fn fpoly_div_exact(g: &FPoly, d: &FPoly, p: u64) -> FPoly {
    let dd = fpoly::degree(d).expect("nonzero divisor");
    let mut r = g.clone();
    let mut q = vec![0u64; g.len() - dd];
    while let Some(dr) = fpoly::degree(&r) {
        if dr < dd {
            break;
        }
        let coef = r[dr];
        let shift = dr - dd;
        q[shift] = coef;
        for (i, &dc) in d.iter().enumerate() {
            let t = crate::modular::mul_mod(coef, dc, p);
            r[i + shift] = (r[i + shift] + p - t) % p;
        }
        fpoly::trim(&mut r);
    }
    debug_assert!(r.is_empty(), "division must be exact");
    fpoly::trim(&mut q);
    q
}

/// Sorted roots of f mod p^k via iterated Hensel lifting.
///
/// Nonsingular roots (f'(mu) != 0 mod p) take the unique Newton lift;
/// singular ones enumerate all p candidates at each level.
pub fn lift_roots(f: &IntPolynomial, p: u64, k: u32) -> Result<Vec<u64>> {
    let q_final = p.checked_pow(k).ok_or(Error::PrimePowerTooLarge { p, k })?;
    let mut roots = roots_mod_p(f, p)?;
    if k == 1 {
        return Ok(roots);
    }
    let deriv_mod_p = f
        .derivative()
        .map(|d| d.reduce_mod(p))
        .unwrap_or_default();
    let mut q_prev = p;
    for _level in 2..=k {
        let q = q_prev * p; // <= q_final, cannot overflow
        let reduced_q = f.reduce_mod(q);
        let mut next = Vec::with_capacity(roots.len());
        for &mu in &roots {
            let fd = eval_reduced(&deriv_mod_p, mu % p, p);
            if fd != 0 {
                // unique lift: mu - f(mu)/p^{level-1} * f'(mu)^{-1} mod p
                let fval = eval_reduced(&reduced_q, mu, q);
                debug_assert_eq!(fval % q_prev, 0);
                let u = (fval / q_prev) % p;
                let inv_fd = inv_mod(fd, p).expect("nonzero mod prime");
                let t = crate::modular::mul_mod((p - u) % p, inv_fd, p);
                next.push(mu + t * q_prev);
            } else {
                for t in 0..p {
                    let cand = mu + t * q_prev;
                    if eval_reduced(&reduced_q, cand, q) == 0 {
                        next.push(cand);
                    }
                }
            }
        }
        roots = next;
        q_prev = q;
    }
    debug_assert_eq!(q_prev, q_final);
    roots.sort_unstable();
    Ok(roots)
}

/// Sorted roots of f mod n assembled by CRT from the prime-power levels.
pub fn roots_mod_n(f: &IntPolynomial, n: u64, fac: &Factorization) -> Result<RootSet> {
    debug_assert_eq!(fac.value(), n, "factorization must match the modulus");
    let mut acc: Vec<u64> = vec![0];
    let mut modulus = 1u64;
    for &(p, k) in fac.pairs() {
        let q = p.checked_pow(k).ok_or(Error::PrimePowerTooLarge { p, k })?;
        let level = lift_roots(f, p, k)?;
        let mut combined = Vec::with_capacity(acc.len() * level.len());
        for &a in &acc {
            for &b in &level {
                combined.push(crt_pair(a, modulus, b, q));
            }
        }
        acc = combined;
        modulus *= q;
        if acc.is_empty() {
            break;
        }
    }
    acc.sort_unstable();
    let set = RootSet { modulus: n, roots: acc };
    debug_assert!(set.verify(f));
    Ok(set)
}

/// Roots of f mod every prime power q = p^k <= limit, computed once up
/// front (in parallel) and shared read-only afterwards.
pub struct RootCache {
    limit: u64,
    map: HashMap<u64, Vec<u64>>,
}

impl RootCache {
    pub fn build(f: &IntPolynomial, table: &FactorTable) -> Result<Self> {
        let entries: Result<Vec<(u64, Vec<u64>)>> = table
            .prime_powers()
            .into_par_iter()
            .map(|(p, k, q)| lift_roots(f, p, k).map(|roots| (q, roots)))
            .collect();
        let map: HashMap<u64, Vec<u64>> = entries?.into_iter().collect();
        Ok(RootCache { limit: table.limit(), map })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn prime_power_roots(&self, q: u64) -> Option<&[u64]> {
        self.map.get(&q).map(|v| v.as_slice())
    }

    /// r(n) as the product of prime-power root counts.
    pub fn count(&self, fac: &Factorization) -> u64 {
        fac.pairs()
            .iter()
            .map(|&(p, k)| self.map[&p.pow(k)].len() as u64)
            .product()
    }

    /// Sorted roots mod n by CRT over cached prime-power roots.
    pub fn assemble(&self, n: u64, fac: &Factorization) -> Vec<u64> {
        let mut acc: Vec<u64> = vec![0];
        let mut modulus = 1u64;
        for &(p, k) in fac.pairs() {
            let q = p.pow(k);
            let level = &self.map[&q];
            if level.is_empty() {
                return Vec::new();
            }
            let mut combined = Vec::with_capacity(acc.len() * level.len());
            for &a in &acc {
                for &b in level {
                    combined.push(crt_pair(a, modulus, b, q));
                }
            }
            acc = combined;
            modulus *= q;
        }
        debug_assert_eq!(modulus, n);
        acc.sort_unstable();
        acc
    }

    /// r(n) for all n in [0, limit] as a flat table (index 0 unused).
    pub fn count_table(&self, table: &FactorTable) -> Vec<u32> {
        let limit = table.limit() as usize;
        let mut r = vec![0u32; limit + 1];
        if limit >= 1 {
            r[1] = 1;
        }
        for n in 2..=limit {
            let p = table.smallest_prime_factor(n as u64);
            let mut m = n as u64;
            let mut q = 1u64;
            while m % p == 0 {
                m /= p;
                q *= p;
            }
            r[n] = r[m as usize] * self.map[&q].len() as u32;
        }
        r
    }
}

/// (n, r(n)) for every modulus in the filtered stream.
pub fn root_counts_up_to<'a>(
    f: &IntPolynomial,
    table: &'a FactorTable,
    filter: ModulusFilter,
) -> Result<impl Iterator<Item = (u64, u64)> + 'a> {
    let cache = RootCache::build(f, table)?;
    Ok(table
        .moduli(filter)
        .map(move |(n, fac)| (n, cache.count(&fac))))
}
