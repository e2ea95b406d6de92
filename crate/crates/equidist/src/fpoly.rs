//! Dense univariate polynomial arithmetic over F_p for small degrees.
//!
//! Coefficients ascending in `[0, p)`, vectors trimmed so the zero
//! polynomial is the empty vector. Degrees here never exceed the degree
//! of the input polynomial, so schoolbook multiplication is fine.

use crate::modular::{inv_mod, mul_mod};

pub(crate) type FPoly = Vec<u64>;

pub(crate) fn trim(v: &mut FPoly) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub(crate) fn degree(v: &FPoly) -> Option<usize> {
    if v.is_empty() {
        None
    } else {
        Some(v.len() - 1)
    }
}

pub(crate) fn x_poly() -> FPoly {
    vec![0, 1]
}

pub(crate) fn monic(mut v: FPoly, p: u64) -> FPoly {
    if let Some(&lc) = v.last() {
        if lc != 1 {
            let inv = inv_mod(lc, p).expect("leading coefficient invertible mod prime");
            for c in v.iter_mut() {
                *c = mul_mod(*c, inv, p);
            }
        }
    }
    v
}

pub(crate) fn sub(a: &FPoly, b: &FPoly, p: u64) -> FPoly {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = (x + p - y) % p;
    }
    trim(&mut out);
    out
}

pub(crate) fn mul(a: &FPoly, b: &FPoly, p: u64) -> FPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            let t = out[i + j] as u128 + x as u128 * y as u128;
            out[i + j] = (t % p as u128) as u64;
        }
    }
    trim(&mut out);
    out
}

/// Remainder of `a` by `b` (`b` nonzero).
pub(crate) fn rem(a: &FPoly, b: &FPoly, p: u64) -> FPoly {
    let db = degree(b).expect("division by zero polynomial");
    if db == 0 {
        return Vec::new();
    }
    let inv_lc = inv_mod(b[db], p).expect("leading coefficient invertible mod prime");
    let mut r = a.clone();
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let q = mul_mod(r[dr], inv_lc, p);
        let shift = dr - db;
        for (i, &bc) in b.iter().enumerate() {
            let t = mul_mod(q, bc, p);
            r[i + shift] = (r[i + shift] + p - t) % p;
        }
        trim(&mut r);
    }
    r
}

/// Monic gcd.
pub(crate) fn gcd(a: &FPoly, b: &FPoly, p: u64) -> FPoly {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(a, p)
}

/// `base^exp` reduced modulo the polynomial `m`.
pub(crate) fn pow_mod_poly(base: &FPoly, mut exp: u64, m: &FPoly, p: u64) -> FPoly {
    let mut acc = vec![1u64];
    let mut b = rem(base, m, p);
    while exp != 0 {
        if exp & 1 == 1 {
            acc = rem(&mul(&acc, &b, p), m, p);
        }
        b = rem(&mul(&b, &b, p), m, p);
        exp >>= 1;
    }
    acc
}

/// `a(b)` reduced modulo the polynomial `m` (Horner in the quotient ring).
pub(crate) fn compose_mod(a: &FPoly, b: &FPoly, m: &FPoly, p: u64) -> FPoly {
    let mut acc: FPoly = Vec::new();
    for &c in a.iter().rev() {
        acc = rem(&mul(&acc, b, p), m, p);
        if c != 0 {
            if acc.is_empty() {
                acc.push(c);
            } else {
                acc[0] = (acc[0] + c) % p;
            }
        }
        trim(&mut acc);
    }
    acc
}

/// Rabin's irreducibility test over F_p; `f` must have degree >= 1.
pub(crate) fn is_irreducible(f: &FPoly, p: u64) -> bool {
    let d = degree(f).expect("nonzero polynomial") as u64;
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let f = monic(f.clone(), p);
    // Frobenius iterates: frob[j] = x^(p^(j+1)) mod f
    let phi1 = pow_mod_poly(&x_poly(), p, &f, p);
    let mut frob = vec![phi1.clone()];
    for _ in 1..d {
        let next = compose_mod(frob.last().unwrap(), &phi1, &f, p);
        frob.push(next);
    }
    if frob[(d - 1) as usize] != x_poly() {
        return false;
    }
    let mut rem_d = d;
    let mut ell = 2u64;
    let mut prime_divisors = Vec::new();
    while ell * ell <= rem_d {
        if rem_d % ell == 0 {
            prime_divisors.push(ell);
            while rem_d % ell == 0 {
                rem_d /= ell;
            }
        }
        ell += 1;
    }
    if rem_d > 1 {
        prime_divisors.push(rem_d);
    }
    for ell in prime_divisors {
        let j = (d / ell) as usize;
        let diff = sub(&frob[j - 1], &x_poly(), p);
        if degree(&gcd(&diff, &f, p)).is_some_and(|g| g > 0) {
            return false;
        }
    }
    true
}
