//! Smallest-prime-factor sieve over `[1, x]` and per-modulus factorization.

use crate::error::{Error, Result};

/// Hard cap on sieve size: 2^31 entries of 32-bit spf storage.
pub const TABLE_ENTRY_CAP: u64 = 1 << 31;

/// spf[n] = smallest prime factor of n (spf[1] = 1). Immutable after build.
pub struct FactorTable {
    limit: u64,
    spf: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModulusFilter {
    All,
    Prime,
    Squarefree,
}

impl FactorTable {
    pub fn build(limit: u64) -> Result<Self> {
        if limit == 0 || limit > TABLE_ENTRY_CAP {
            return Err(Error::LimitTooLarge { limit, cap: TABLE_ENTRY_CAP });
        }
        let n = limit as usize;
        let mut spf = vec![0u32; n + 1];
        if n >= 1 {
            spf[1] = 1;
        }
        let mut i = 2usize;
        while i <= n {
            if spf[i] == 0 {
                let mut j = i;
                while j <= n {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                    j += i;
                }
            }
            i += 1;
        }
        Ok(FactorTable { limit, spf })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn smallest_prime_factor(&self, n: u64) -> u64 {
        self.spf[n as usize] as u64
    }

    pub fn is_prime(&self, n: u64) -> bool {
        n >= 2 && self.spf[n as usize] as u64 == n
    }

    /// Squarefree test by walking the spf chain, no allocation.
    pub fn is_squarefree(&self, n: u64) -> bool {
        let mut m = n;
        while m > 1 {
            let p = self.spf[m as usize] as u64;
            m /= p;
            if m % p == 0 {
                return false;
            }
        }
        true
    }

    pub fn factor(&self, n: u64) -> Result<Factorization> {
        if n == 0 || n > self.limit {
            return Err(Error::ModulusOutOfRange { n, limit: self.limit });
        }
        let mut pairs = Vec::new();
        let mut m = n;
        while m > 1 {
            let p = self.spf[m as usize] as u64;
            let mut k = 0u32;
            while m % p == 0 {
                m /= p;
                k += 1;
            }
            pairs.push((p, k));
        }
        Ok(Factorization { pairs })
    }

    /// Moduli matching the filter, ascending, with their factorizations.
    pub fn moduli(&self, filter: ModulusFilter) -> impl Iterator<Item = (u64, Factorization)> + '_ {
        (1..=self.limit).filter_map(move |n| {
            let fac = self.factor(n).expect("n within table range");
            let keep = match filter {
                ModulusFilter::All => true,
                ModulusFilter::Prime => self.is_prime(n),
                ModulusFilter::Squarefree => fac.is_squarefree(),
            };
            keep.then_some((n, fac))
        })
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        (2..=self.limit).filter(move |&n| self.is_prime(n))
    }

    /// All prime powers p^k <= limit as (p, k, p^k), ascending by (p, k).
    pub fn prime_powers(&self) -> Vec<(u64, u32, u64)> {
        let mut out = Vec::new();
        for p in self.primes() {
            let mut q = p;
            let mut k = 1u32;
            loop {
                out.push((p, k, q));
                match q.checked_mul(p) {
                    Some(next) if next <= self.limit => {
                        q = next;
                        k += 1;
                    }
                    _ => break,
                }
            }
        }
        out
    }
}

impl Factorization {
    /// Trial-division factorization of an isolated modulus (desk scale).
    pub fn of(n: u64) -> Factorization {
        let mut pairs = Vec::new();
        let mut m = n;
        let mut p = 2u64;
        while p * p <= m {
            if m % p == 0 {
                let mut k = 0u32;
                while m % p == 0 {
                    m /= p;
                    k += 1;
                }
                pairs.push((p, k));
            }
            p += 1;
        }
        if m > 1 {
            pairs.push((m, 1));
        }
        Factorization { pairs }
    }

    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    pub fn value(&self) -> u64 {
        self.pairs.iter().map(|&(p, k)| p.pow(k)).product()
    }

    pub fn is_squarefree(&self) -> bool {
        self.pairs.iter().all(|&(_, k)| k == 1)
    }

    /// Number of distinct prime factors.
    pub fn omega(&self) -> usize {
        self.pairs.len()
    }
}
