//! Integer polynomials: primitivity, exact discriminants, irreducibility
//! evidence.
//!
//! Coefficients are arbitrary-precision and stored in ascending order
//! (`coeffs[0]` is the constant term). The discriminant is computed through
//! a subresultant polynomial remainder sequence, so every intermediate
//! division is exact and nothing overflows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

use crate::error::{Error, Result};
use crate::fpoly;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

/// Outcome of the mod-p / rational-root screening.
///
/// A single irreducible reduction mod p certifies irreducibility over Q;
/// a rational root certifies reducibility. Anything else stays
/// inconclusive (e.g. x^4 + 1, which factors mod every prime).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IrreducibilityEvidence {
    ProvedIrreducible { witness_prime: u64 },
    ProvedReducible { rational_root: (BigInt, BigInt) },
    Inconclusive { primes_tested: usize },
}

impl IntPolynomial {
    /// Build from ascending coefficients; trailing zeros are trimmed.
    pub fn new(mut coeffs: Vec<BigInt>) -> Result<Self> {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(IntPolynomial { coeffs })
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Parse a comma-separated ascending coefficient list, e.g. "1,0,1".
    pub fn parse(input: &str) -> Result<Self> {
        let mut coeffs = Vec::new();
        let mut pos = 0usize;
        for token in input.split(',') {
            let trimmed = token.trim();
            let token_pos = pos + (token.len() - token.trim_start().len());
            if trimmed.is_empty() {
                return Err(Error::Parse {
                    input: input.to_string(),
                    position: token_pos,
                    message: "empty coefficient".to_string(),
                });
            }
            let c: BigInt = trimmed.parse().map_err(|_| Error::Parse {
                input: input.to_string(),
                position: token_pos,
                message: format!("invalid integer {trimmed:?}"),
            })?;
            coeffs.push(c);
            pos += token.len() + 1;
        }
        Self::new(coeffs)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("nonzero polynomial")
    }

    /// gcd of all coefficients, as a positive integer.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    pub fn derivative(&self) -> Option<IntPolynomial> {
        if self.degree() == 0 {
            return None;
        }
        let coeffs: Vec<BigInt> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        IntPolynomial::new(coeffs).ok()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Coefficients reduced into `[0, m)`.
    pub fn reduce_mod(&self, m: u64) -> Vec<u64> {
        let mb = BigInt::from(m);
        self.coeffs
            .iter()
            .map(|c| c.mod_floor(&mb).to_u64().expect("reduced coefficient fits u64"))
            .collect()
    }

    /// f(x) mod m via Horner on pre-reduced coefficients.
    pub fn eval_mod(&self, x: u64, m: u64) -> u64 {
        eval_reduced(&self.reduce_mod(m), x, m)
    }

    /// disc(f) = (-1)^(d(d-1)/2) * Res(f, f') / lc(f), exactly.
    pub fn discriminant(&self) -> Result<BigInt> {
        let d = self.degree();
        if d < 2 {
            return Err(Error::DegreeTooSmall(d));
        }
        let deriv = self.derivative().expect("degree >= 2");
        let res = resultant(self, &deriv);
        let (q, r) = res.div_rem(self.leading());
        debug_assert!(r.is_zero(), "lc divides Res(f, f')");
        let sign = if (d * (d - 1) / 2) % 2 == 0 { 1 } else { -1 };
        Ok(q * BigInt::from(sign))
    }

    /// Canonical ascending coefficient string ("1,0,1" for x^2+1).
    pub fn coeff_string(&self) -> String {
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Screen for irreducibility over Q using a rational-root test and
    /// reductions modulo the first `prime_budget` usable primes.
    pub fn irreducibility_evidence(&self, prime_budget: usize) -> Result<IrreducibilityEvidence> {
        if !self.is_primitive() {
            return Err(Error::NotPrimitive(self.content().to_string()));
        }
        let d = self.degree();
        if d < 2 {
            return Err(Error::DegreeTooSmall(d));
        }
        if let Some(root) = self.rational_root() {
            return Ok(IrreducibilityEvidence::ProvedReducible { rational_root: root });
        }
        let mut tested = 0usize;
        let mut p = 2u64;
        while tested < prime_budget {
            if self.leading().mod_floor(&BigInt::from(p)).is_zero() {
                p = next_prime(p);
                continue;
            }
            let reduced = self.reduce_mod(p);
            if fpoly::is_irreducible(&reduced, p) {
                return Ok(IrreducibilityEvidence::ProvedIrreducible { witness_prime: p });
            }
            tested += 1;
            p = next_prime(p);
        }
        Ok(IrreducibilityEvidence::Inconclusive { primes_tested: tested })
    }

    /// A rational root a/b in lowest terms, if one exists (and the
    /// constant/leading coefficients are small enough to enumerate).
    fn rational_root(&self) -> Option<(BigInt, BigInt)> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Some((BigInt::zero(), BigInt::one()));
        }
        const DIVISOR_CAP: u64 = 1_000_000_000_000;
        let c0_abs = c0.abs().to_u64().filter(|&v| v <= DIVISOR_CAP)?;
        let lc_abs = self.leading().abs().to_u64().filter(|&v| v <= DIVISOR_CAP)?;
        let nums = divisors(c0_abs);
        let dens = divisors(lc_abs);
        for &b in &dens {
            for &a in &nums {
                if crate::modular::gcd_u64(a, b) != 1 {
                    continue;
                }
                for sign in [1i64, -1] {
                    let num = BigInt::from(a) * BigInt::from(sign);
                    let den = BigInt::from(b);
                    // b^d * f(a/b) = sum c_i a^i b^(d-i)
                    let d = self.degree();
                    let mut val = BigInt::zero();
                    for (i, c) in self.coeffs.iter().enumerate() {
                        val += c * num.pow(i as u32) * den.pow((d - i) as u32);
                    }
                    if val.is_zero() {
                        return Some((num, den));
                    }
                }
            }
        }
        None
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && self.degree() > 0 {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Horner evaluation of reduced coefficients, 128-bit intermediates.
pub fn eval_reduced(coeffs_mod: &[u64], x: u64, m: u64) -> u64 {
    let mut acc: u64 = 0;
    for &c in coeffs_mod.iter().rev() {
        acc = ((acc as u128 * x as u128 + c as u128) % m as u128) as u64;
    }
    acc
}

/// Resultant of two nonzero integer polynomials via the subresultant PRS.
pub fn resultant(a: &IntPolynomial, b: &IntPolynomial) -> BigInt {
    let mut pa = a.coeffs.clone();
    let mut pb = b.coeffs.clone();
    let mut sign = 1i32;
    if deg(&pa) < deg(&pb) {
        if deg(&pa) % 2 == 1 && deg(&pb) % 2 == 1 {
            sign = -sign;
        }
        std::mem::swap(&mut pa, &mut pb);
    }
    if deg(&pb) == 0 {
        return pb[0].pow(deg(&pa) as u32) * BigInt::from(sign);
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let da = deg(&pa);
        let db = deg(&pb);
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
        let r = pseudo_rem(&pa, &pb);
        pa = pb;
        let scale = &g * h.pow(delta);
        pb = r.into_iter().map(|c| exact_div(c, &scale)).collect();
        trim(&mut pb);
        g = lc(&pa).clone();
        if delta > 0 {
            h = exact_div(g.pow(delta), &h.pow(delta - 1));
        }
        if pb.is_empty() {
            return BigInt::zero();
        }
        if deg(&pb) == 0 {
            break;
        }
    }
    let da = deg(&pa) as u32;
    let res = exact_div(pb[0].pow(da), &h.pow(da.saturating_sub(1)));
    res * BigInt::from(sign)
}

fn deg(v: &[BigInt]) -> usize {
    v.len().saturating_sub(1)
}

fn lc(v: &[BigInt]) -> &BigInt {
    v.last().expect("nonzero polynomial")
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn exact_div(n: BigInt, d: &BigInt) -> BigInt {
    let (q, r) = n.div_rem(d);
    debug_assert!(r.is_zero(), "subresultant division must be exact");
    q
}

/// lc(b)^(deg a - deg b + 1) * a mod b.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = deg(b);
    let d = lc(b);
    let mut r: Vec<BigInt> = a.to_vec();
    let mut e = (deg(a) - db + 1) as i64;
    while !r.is_empty() && deg(&r) >= db {
        let shift = deg(&r) - db;
        let lr = lc(&r).clone();
        let mut next: Vec<BigInt> = r.iter().map(|c| c * d).collect();
        for (i, bc) in b.iter().enumerate() {
            next[i + shift] -= bc * &lr;
        }
        r = next;
        trim(&mut r);
        e -= 1;
        if r.is_empty() {
            break;
        }
    }
    if e > 0 {
        let scale = d.pow(e as u32);
        for c in r.iter_mut() {
            *c *= &scale;
        }
    }
    r
}

fn next_prime(p: u64) -> u64 {
    let mut q = p + 1;
    loop {
        if is_small_prime(q) {
            return q;
        }
        q += 1;
    }
}

fn is_small_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(coeffs).unwrap()
    }

    #[test]
    fn content_examples() {
        assert_eq!(poly(&[1, 0, 1]).content(), BigInt::from(1));
        assert_eq!(poly(&[2, 4]).content(), BigInt::from(2));
        assert_eq!(poly(&[6, 10, 15]).content(), BigInt::from(1));
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert!(matches!(IntPolynomial::from_i64(&[0]), Err(Error::ZeroPolynomial)));
        assert!(matches!(IntPolynomial::from_i64(&[0, 0, 0]), Err(Error::ZeroPolynomial)));
        assert!(matches!(IntPolynomial::parse("0"), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn parse_diagnostics() {
        let p = IntPolynomial::parse("1,0,1").unwrap();
        assert_eq!(p.degree(), 2);
        let err = IntPolynomial::parse("1,x,1").unwrap_err();
        match err {
            Error::Parse { position, .. } => assert_eq!(position, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(IntPolynomial::parse("1,,3").is_err());
        assert!(IntPolynomial::parse(" -2 , 0 , 1 ").is_ok());
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let p = IntPolynomial::from_i64(&[1, 2, 0, 0]).unwrap();
        assert_eq!(p.degree(), 1);
        assert_eq!(p.leading(), &BigInt::from(2));
    }

    #[test]
    fn discriminant_fixtures() {
        assert_eq!(poly(&[1, 0, 1]).discriminant().unwrap(), BigInt::from(-4));
        assert_eq!(poly(&[-2, 0, 1]).discriminant().unwrap(), BigInt::from(8));
        assert_eq!(poly(&[-1, -1, 0, 1]).discriminant().unwrap(), BigInt::from(-23));
        // non-squarefree: (x^2+1)^2 = x^4 + 2x^2 + 1
        assert_eq!(poly(&[1, 0, 2, 0, 1]).discriminant().unwrap(), BigInt::from(0));
        assert!(matches!(poly(&[1, 1]).discriminant(), Err(Error::DegreeTooSmall(1))));
    }

    #[test]
    fn discriminant_more_known_values() {
        // x^3 + x + 1: -4*1 - 27*1 = -31
        assert_eq!(poly(&[1, 1, 0, 1]).discriminant().unwrap(), BigInt::from(-31));
        // 2x^3 - 3x^2 + 1 has roots 1, 1, -1/2 -> disc 0
        assert_eq!(poly(&[1, 0, -3, 2]).discriminant().unwrap(), BigInt::from(0));
        // x^5 - x - 1: known discriminant 2869 = 19*151
        assert_eq!(poly(&[-1, -1, 0, 0, 0, 1]).discriminant().unwrap(), BigInt::from(2869));
        // cyclotomic x^4+x^3+x^2+x+1: disc = 125
        assert_eq!(poly(&[1, 1, 1, 1, 1]).discriminant().unwrap(), BigInt::from(125));
    }

    #[test]
    fn quadratic_discriminant_formula() {
        for a in [-3i64, -1, 1, 2, 7] {
            for b in -4i64..=4 {
                for c in -4i64..=4 {
                    let p = poly(&[c, b, a]);
                    let expect = BigInt::from(b * b - 4 * a * c);
                    assert_eq!(p.discriminant().unwrap(), expect, "a={a} b={b} c={c}");
                }
            }
        }
    }

    #[test]
    fn cubic_discriminant_formula() {
        // depressed cubic x^3 + px + q: disc = -4p^3 - 27q^2
        for p in -5i64..=5 {
            for q in -5i64..=5 {
                let f = poly(&[q, p, 0, 1]);
                let expect = BigInt::from(-4 * p * p * p - 27 * q * q);
                assert_eq!(f.discriminant().unwrap(), expect, "p={p} q={q}");
            }
        }
    }

    #[test]
    fn irreducibility_fixtures() {
        let ev = poly(&[1, 0, 1]).irreducibility_evidence(5).unwrap();
        assert_eq!(ev, IrreducibilityEvidence::ProvedIrreducible { witness_prime: 3 });

        let ev = poly(&[-1, 0, 1]).irreducibility_evidence(5).unwrap();
        match ev {
            IrreducibilityEvidence::ProvedReducible { rational_root: (num, den) } => {
                assert_eq!(den, BigInt::from(1));
                assert_eq!(num.abs(), BigInt::from(1));
            }
            other => panic!("expected reducible, got {other:?}"),
        }

        for budget in [1usize, 5, 20] {
            let ev = poly(&[1, 0, 0, 0, 1]).irreducibility_evidence(budget).unwrap();
            assert!(matches!(ev, IrreducibilityEvidence::Inconclusive { .. }), "budget {budget}");
        }

        // x^3 - x - 1 irreducible mod 2
        let ev = poly(&[-1, -1, 0, 1]).irreducibility_evidence(3).unwrap();
        assert_eq!(ev, IrreducibilityEvidence::ProvedIrreducible { witness_prime: 2 });
    }

    #[test]
    fn rational_root_with_denominator() {
        // 2x^2 - x - 1 = (2x + 1)(x - 1)
        let ev = poly(&[-1, -1, 2]).irreducibility_evidence(5).unwrap();
        assert!(matches!(ev, IrreducibilityEvidence::ProvedReducible { .. }));
        // x^2 with constant 0
        let ev = poly(&[0, 0, 1]).irreducibility_evidence(5).unwrap();
        match ev {
            IrreducibilityEvidence::ProvedReducible { rational_root } => {
                assert!(rational_root.0.is_zero())
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn certified_irreducible_has_nonzero_discriminant() {
        for coeffs in [
            vec![1i64, 0, 1],
            vec![-2, 0, 1],
            vec![-1, -1, 0, 1],
            vec![3, -1, 0, 0, 1],
            vec![7, 2, 0, 1],
        ] {
            let p = poly(&coeffs);
            if matches!(
                p.irreducibility_evidence(8).unwrap(),
                IrreducibilityEvidence::ProvedIrreducible { .. }
            ) {
                assert!(!p.discriminant().unwrap().is_zero(), "{coeffs:?}");
            }
        }
    }

    #[test]
    fn eval_mod_matches_bigint_eval() {
        let f = poly(&[-2, 0, 1]);
        for m in [2u64, 3, 97, 1_000_003] {
            for x in [0u64, 1, 2, 50, 96] {
                let big = f.eval(&BigInt::from(x)).mod_floor(&BigInt::from(m));
                assert_eq!(BigInt::from(f.eval_mod(x, m)), big);
            }
        }
    }

    #[test]
    fn display_pretty() {
        assert_eq!(poly(&[1, 0, 1]).to_string(), "x^2 + 1");
        assert_eq!(poly(&[-2, 0, 1]).to_string(), "x^2 - 2");
        assert_eq!(poly(&[-1, -1, 0, 1]).to_string(), "x^3 - x - 1");
        assert_eq!(poly(&[5]).to_string(), "5");
        assert_eq!(poly(&[0, -3]).to_string(), "-3x");
    }

    // Bareiss fraction-free determinant of the Sylvester matrix: the
    // independent route against which the subresultant PRS is checked.
    fn sylvester_resultant(a: &IntPolynomial, b: &IntPolynomial) -> BigInt {
        let m = a.degree();
        let n = b.degree();
        let size = m + n;
        if size == 0 {
            return BigInt::one();
        }
        let mut mat = vec![vec![BigInt::zero(); size]; size];
        for row in 0..n {
            for (i, c) in a.coeffs().iter().enumerate() {
                mat[row][row + m - i] = c.clone();
            }
        }
        for row in 0..m {
            for (i, c) in b.coeffs().iter().enumerate() {
                mat[n + row][row + n - i] = c.clone();
            }
        }
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..size - 1 {
            if mat[k][k].is_zero() {
                let swap = (k + 1..size).find(|&r| !mat[r][k].is_zero());
                match swap {
                    Some(r) => {
                        mat.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..size {
                for j in k + 1..size {
                    let num = &mat[i][j] * &mat[k][k] - &mat[i][k] * &mat[k][j];
                    let (q, r) = num.div_rem(&prev);
                    debug_assert!(r.is_zero());
                    mat[i][j] = q;
                }
                mat[i][k] = BigInt::zero();
            }
            prev = mat[k][k].clone();
        }
        sign * mat[size - 1][size - 1].clone()
    }

    #[test]
    fn resultant_agrees_with_sylvester_determinant() {
        let cases = [
            (vec![1i64, 0, 1], vec![0i64, 2]),
            (vec![-2, 0, 1], vec![3, 1]),
            (vec![-1, -1, 0, 1], vec![-1, 0, 3]),
            (vec![2, -3, 0, 0, 5], vec![1, 1, 1]),
            (vec![4, 0, -2, 7], vec![-3, 2, 0, 0, 1]),
        ];
        for (ca, cb) in cases {
            let a = poly(&ca);
            let b = poly(&cb);
            assert_eq!(resultant(&a, &b), sylvester_resultant(&a, &b), "{ca:?} vs {cb:?}");
            assert_eq!(resultant(&b, &a), sylvester_resultant(&b, &a), "{cb:?} vs {ca:?}");
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn content_scales_linearly(
                coeffs in proptest::collection::vec(-1000i64..=1000, 1..6),
                k in (-60i64..=60).prop_filter("nonzero", |k| *k != 0),
            ) {
                prop_assume!(coeffs.iter().any(|&c| c != 0));
                let p = IntPolynomial::from_i64(&coeffs).unwrap();
                let scaled =
                    IntPolynomial::new(p.coeffs().iter().map(|c| c * k).collect()).unwrap();
                prop_assert_eq!(scaled.content(), p.content() * BigInt::from(k.abs()));
            }

            #[test]
            fn quadratic_discriminant_is_b2_minus_4ac(
                a in (-10_000i64..=10_000).prop_filter("nonzero", |a| *a != 0),
                b in -10_000i64..=10_000,
                c in -10_000i64..=10_000,
            ) {
                let p = IntPolynomial::from_i64(&[c, b, a]).unwrap();
                let expect =
                    BigInt::from(b) * BigInt::from(b) - BigInt::from(4) * BigInt::from(a) * BigInt::from(c);
                prop_assert_eq!(p.discriminant().unwrap(), expect);
            }

            #[test]
            fn subresultant_matches_bareiss(
                ca in proptest::collection::vec(-40i64..=40, 2..7),
                cb in proptest::collection::vec(-40i64..=40, 2..7),
            ) {
                prop_assume!(*ca.last().unwrap() != 0 && *cb.last().unwrap() != 0);
                let a = IntPolynomial::from_i64(&ca).unwrap();
                let b = IntPolynomial::from_i64(&cb).unwrap();
                prop_assert_eq!(resultant(&a, &b), sylvester_resultant(&a, &b));
            }
        }
    }
}
