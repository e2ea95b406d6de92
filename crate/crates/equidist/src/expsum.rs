//! Exponential sums over root sets and their exact identities.
//!
//! S(h;n) sums e(h*mu/n) over the roots mu of f mod n, with e(x) =
//! exp(2*pi*i*x). The phase h*mu is reduced mod n in exact integer
//! arithmetic before the single trig call, so per-term phase error stays
//! at one ulp no matter how large h is.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::factorize::Factorization;
use crate::modular::{gcd_u64, inv_mod, scale_mod};
use crate::polynomial::IntPolynomial;
use crate::roots::{roots_mod_n, RootSet};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Frequency {
    Single(i64),
    Pair(i64, i64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpSumValue {
    pub value: Complex64,
    pub modulus: u64,
    pub frequency: Frequency,
}

impl ExpSumValue {
    pub fn re(&self) -> f64 {
        self.value.re
    }

    pub fn im(&self) -> f64 {
        self.value.im
    }

    pub fn abs(&self) -> f64 {
        self.value.norm()
    }
}

#[inline]
pub(crate) fn unit_phase(h: i64, mu: u64, n: u64) -> Complex64 {
    let m = scale_mod(h, mu, n);
    if m == 0 {
        return Complex64::new(1.0, 0.0);
    }
    let theta = 2.0 * std::f64::consts::PI * (m as f64) / (n as f64);
    Complex64::new(theta.cos(), theta.sin())
}

#[inline]
pub(crate) fn exp_sum_raw(roots: &[u64], h: i64, n: u64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for &mu in roots {
        acc += unit_phase(h, mu, n);
    }
    acc
}

/// S(h;n) over the given root set.
pub fn exp_sum(rs: &RootSet, h: i64) -> ExpSumValue {
    ExpSumValue {
        value: exp_sum_raw(rs.roots(), h, rs.modulus()),
        modulus: rs.modulus(),
        frequency: Frequency::Single(h),
    }
}

/// S(h1,h2;n) = S_f(h1;n) * S_g(h2;n); the double sum factors exactly.
pub fn joint_exp_sum(rs_f: &RootSet, rs_g: &RootSet, h1: i64, h2: i64) -> Result<ExpSumValue> {
    if rs_f.modulus() != rs_g.modulus() {
        return Err(Error::ModulusMismatch(rs_f.modulus(), rs_g.modulus()));
    }
    let n = rs_f.modulus();
    Ok(ExpSumValue {
        value: exp_sum_raw(rs_f.roots(), h1, n) * exp_sum_raw(rs_g.roots(), h2, n),
        modulus: n,
        frequency: Frequency::Pair(h1, h2),
    })
}

/// Residual of the exact h=1 orthogonality identity
/// sum_{a=1..n} |S(a;n)|^2 = n * r(n).
pub fn verify_parseval(rs: &RootSet) -> f64 {
    let n = rs.modulus();
    let mut total = 0.0f64;
    for a in 1..=n {
        total += exp_sum_raw(rs.roots(), a as i64, n).norm_sqr();
    }
    (total - (n as f64) * (rs.count() as f64)).abs()
}

/// Residuals of the twisted multiplicativity identities for coprime n, n2:
///   S(h;n) S(h2;n2)         = S(h*n2 + h2*n; n*n2)
///   S(h; n*n2)              = S(h*inv(n2,n); n) * S(h*inv(n,n2); n2)
pub fn verify_twisted_mult(
    f: &IntPolynomial,
    n: u64,
    n2: u64,
    h: i64,
    h2: i64,
) -> Result<(f64, f64)> {
    if gcd_u64(n, n2) != 1 {
        return Err(Error::NotCoprime(n, n2));
    }
    let product = n.checked_mul(n2).ok_or(Error::ProductTooLarge(n, n2))?;
    let rs_n = roots_mod_n(f, n, &Factorization::of(n))?;
    let rs_n2 = roots_mod_n(f, n2, &Factorization::of(n2))?;
    let rs_prod = roots_mod_n(f, product, &Factorization::of(product))?;

    // combined frequency reduced mod n*n2 in exact arithmetic
    let combined =
        (h as i128 * n2 as i128 + h2 as i128 * n as i128).rem_euclid(product as i128) as i64;
    let lhs = exp_sum_raw(rs_n.roots(), h, n) * exp_sum_raw(rs_n2.roots(), h2, n2);
    let rhs = exp_sum_raw(rs_prod.roots(), combined, product);
    let residual_compose = (lhs - rhs).norm();

    // S(h; n*n2) split across the two factors
    let inv_n2_mod_n = if n == 1 { 0 } else { inv_mod(n2 % n, n).expect("coprime") };
    let inv_n_mod_n2 = if n2 == 1 { 0 } else { inv_mod(n % n2, n2).expect("coprime") };
    let t1 = (h as i128 * inv_n2_mod_n as i128).rem_euclid(n.max(1) as i128) as i64;
    let t2 = (h as i128 * inv_n_mod_n2 as i128).rem_euclid(n2.max(1) as i128) as i64;
    let whole = exp_sum_raw(rs_prod.roots(), h, product);
    let split = exp_sum_raw(rs_n.roots(), t1, n) * exp_sum_raw(rs_n2.roots(), t2, n2);
    let residual_split = (whole - split).norm();

    Ok((residual_compose, residual_split))
}
