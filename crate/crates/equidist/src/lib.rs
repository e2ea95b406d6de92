//! Roots of integer polynomial congruences modulo all n up to a cutoff,
//! and numerical experiments on the joint distribution of the normalized
//! root pairs (mu/n, nu/n) of two polynomials.
//!
//! The pipeline: a smallest-prime-factor sieve factors every modulus,
//! roots mod p are lifted to prime powers by Hensel's lemma and assembled
//! by CRT, and exponential sums / box counts / discrepancy / counting
//! ratios are accumulated over the resulting pair sequence with
//! deterministic parallelism.
//!
//! # Examples
//!
//! ```
//! use equidist::{FactorTable, IntPolynomial, ModulusFilter, SequenceSpec};
//!
//! // roots of x^2 + 1 mod 65
//! let f = IntPolynomial::parse("1,0,1")?;
//! let table = FactorTable::build(100)?;
//! let roots = equidist::roots_mod_n(&f, 65, &table.factor(65)?)?;
//! assert_eq!(roots.roots(), &[8, 18, 47, 57]);
//!
//! // normalized Weyl average over all moduli up to 500
//! let spec = SequenceSpec::new(f.clone(), f, 500, ModulusFilter::All)?;
//! let w = equidist::weyl_average(&spec, 1, 0)?;
//! assert!(w.norm() < 0.1);
//! # Ok::<(), equidist::Error>(())
//! ```

pub mod cli;
pub mod error;
pub mod expsum;
pub mod factorize;
pub mod polynomial;
pub mod roots;
pub mod selftest;
pub mod stats;

mod fpoly;
mod modular;

pub use error::{Error, Result};
pub use expsum::{exp_sum, joint_exp_sum, verify_parseval, verify_twisted_mult, ExpSumValue};
pub use factorize::{FactorTable, Factorization, ModulusFilter};
pub use polynomial::{IntPolynomial, IrreducibilityEvidence};
pub use roots::{
    lift_roots, root_counts_up_to, roots_mod_n, roots_mod_p, NormalizedRoots, RootCache, RootSet,
};
pub use stats::{
    box_count, counting_ratio, diagonal_concentration, normalization_bracket, run_experiment,
    split_prime_density, star_discrepancy_2d, star_discrepancy_of_points, weyl_average,
    BracketCheck, CheckpointReport, DiscrepancyBracket, ExperimentOptions, Frac, Rect,
    SequenceSpec, SplitDensities,
};
