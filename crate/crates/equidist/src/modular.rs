//! Overflow-safe modular arithmetic on `u64` moduli (128-bit intermediates).

#[inline(always)]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Inverse of `a` modulo `m`, if it exists.
pub(crate) fn inv_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// Combine x = a (mod m), x = b (mod q) for coprime m, q into x mod m*q.
pub(crate) fn crt_pair(a: u64, m: u64, b: u64, q: u64) -> u64 {
    let inv = inv_mod(m % q, q).expect("crt_pair requires coprime moduli");
    let diff = ((b as i128 - (a % q) as i128).rem_euclid(q as i128)) as u64;
    let t = mul_mod(diff, inv, q);
    a + m * t
}

/// h*mu reduced into [0, n) with exact integer arithmetic.
#[inline]
pub(crate) fn scale_mod(h: i64, mu: u64, n: u64) -> u64 {
    ((h as i128 * mu as i128).rem_euclid(n as i128)) as u64
}
