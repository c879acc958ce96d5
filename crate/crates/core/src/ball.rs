//! Numbered-ball analogues of profile matching.
//!
//! A profile is a row of `n` pots, each holding one ball numbered from an
//! alphabet of `m` symbols, so there are `N = m^n` equally likely profiles.
//! A two-person mixture shows the pair of numbers in each pot without
//! saying which number came from whom.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::analysis::AnalysisResult;
use crate::bayes::{likelihood_ratio, posterior_via_odds};
use crate::error::{Error, Result};
use crate::exact::{Prob, Ratio};

/// Largest supported number of pots.
pub const MAX_POSITIONS: u32 = 256;

pub const DEFAULT_ALPHABET: u32 = 10;
pub const DEFAULT_POTS: u32 = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BallScenario {
    pub n_positions: u32,
    pub alphabet_size: u32,
    pub k_contributors: u32,
    /// Pots whose two balls carry the same number.
    pub repeated_positions: u32,
}

impl BallScenario {
    pub fn validate(&self) -> Result<()> {
        check_positions(self.n_positions)?;
        if self.alphabet_size < 2 {
            return Err(Error::Validation("alphabet size must be at least 2".into()));
        }
        if self.k_contributors == 0 {
            return Err(Error::Validation("need at least one contributor".into()));
        }
        if self.repeated_positions > self.n_positions {
            return Err(Error::Validation("more repeated pots than pots".into()));
        }
        Ok(())
    }
}

fn check_positions(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::Validation("need at least one pot".into()));
    }
    if n > MAX_POSITIONS {
        return Err(Error::Validation(format!("at most {MAX_POSITIONS} pots are supported")));
    }
    Ok(())
}

/// `m^n` as a big integer.
pub fn profile_count(n_positions: u32, alphabet_size: u32) -> BigUint {
    num_traits::pow(BigUint::from(alphabet_size), n_positions as usize)
}

fn rational(value: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(value.into())
}

/// A single-profile match against a population where everyone else is a
/// possible source: LR `m^n`, prior `1/population_size`.
pub fn single_profile_analysis(n_positions: u32, alphabet_size: u32, population_size: u64) -> Result<AnalysisResult> {
    check_positions(n_positions)?;
    if alphabet_size < 2 {
        return Err(Error::Validation("alphabet size must be at least 2".into()));
    }
    if population_size == 0 {
        return Err(Error::Validation("population size must be at least 1".into()));
    }
    let profiles = profile_count(n_positions, alphabet_size);
    let p_e_not_h = Prob::from_rational(BigRational::new(BigInt::one(), profiles.into()))?;
    let prior = Prob::new(1, population_size)?;
    AnalysisResult::against_negation(prior, Prob::one(), p_e_not_h)
}

/// Unordered profile pairs that produce an observed two-person mixture
/// with `repeated_positions` single-number pots: `2^(n-1-r)`, or 1 when
/// every pot is repeated.
pub fn mixture_pair_count(n_positions: u32, repeated_positions: u32) -> Result<BigUint> {
    check_positions(n_positions)?;
    if repeated_positions > n_positions {
        return Err(Error::Validation("more repeated pots than pots".into()));
    }
    let distinct = n_positions - repeated_positions;
    if distinct == 0 {
        return Ok(BigUint::one());
    }
    Ok(BigUint::one() << (distinct - 1) as usize)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoContributorResult {
    pub n_positions: u32,
    pub alphabet_size: u32,
    pub prior_h: Prob,
    pub p_e_given_h: Prob,
    pub p_e_given_not_h: Prob,
    pub lr: Ratio,
    pub posterior_h: Prob,
}

/// The suspect's profile against a two-person mixture whose pots all show
/// two distinct numbers, with the suspect's numbers among them.
///
/// With `N = m^n` profiles: prior `2/(N-1)`, `P(E|H) = 1/N`,
/// `P(E|not H) = 2(2^(n-1) - 1) / (N(N-3))`, giving LR
/// `(N-3) / (2(2^(n-1) - 1))` and posterior `1/2^(n-1)`.
pub fn two_contributor_analysis(n_positions: u32, alphabet_size: u32) -> Result<TwoContributorResult> {
    check_positions(n_positions)?;
    if alphabet_size < 2 {
        return Err(Error::Validation("alphabet size must be at least 2".into()));
    }
    let profiles = profile_count(n_positions, alphabet_size);
    if profiles < BigUint::from(4u8) {
        return Err(Error::Validation(
            "need at least 4 distinct profiles for a two-person mixture with distinct numbers".into(),
        ));
    }
    let n = rational(BigInt::from(profiles));
    let one = BigRational::one();
    let two = rational(2);
    let three = rational(3);
    let other_pairs = rational(BigInt::from(mixture_pair_count(n_positions, 0)?)) - &one;

    let prior_h = Prob::from_rational(&two / (&n - &one))?;
    let p_e_given_h = Prob::from_rational(&one / &n)?;
    let p_e_given_not_h = Prob::from_rational(&two * other_pairs / (&n * (&n - &three)))?;
    let lr = likelihood_ratio(&p_e_given_h, &p_e_given_not_h)?;
    let posterior_h = posterior_via_odds(&prior_h, &lr)?;
    Ok(TwoContributorResult {
        n_positions,
        alphabet_size,
        prior_h,
        p_e_given_h,
        p_e_given_not_h,
        lr,
        posterior_h,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContributorTableRow {
    pub k: u32,
    pub p_e_h1: Prob,
    pub p_e_h2: Prob,
    pub lr: Ratio,
}

/// Suspect plus `k - 1` unknowns against `k` unknowns, each pot drawing a
/// single ball from one of the contributors at random.
///
/// Per pot, `P(E|H1) = 1/k + (k-1)·f/k` and `P(E|H2) = f`, where `f` is the
/// chance an unknown matches the suspect's number.
pub fn k_contributor_analysis(k: u32, n_pots: u32, genotype_freq: &BigRational) -> Result<ContributorTableRow> {
    if k == 0 {
        return Err(Error::Validation("need at least one contributor".into()));
    }
    check_positions(n_pots)?;
    if *genotype_freq <= BigRational::zero() || *genotype_freq > BigRational::one() {
        return Err(Error::Validation("genotype frequency must lie in (0, 1]".into()));
    }
    let kk = rational(k);
    let per_pot_h1 = (BigRational::one() + (&kk - BigRational::one()) * genotype_freq) / &kk;
    let p_e_h1 = Prob::from_rational(num_traits::pow(per_pot_h1, n_pots as usize))?;
    let p_e_h2 = Prob::from_rational(num_traits::pow(genotype_freq.clone(), n_pots as usize))?;
    let lr = likelihood_ratio(&p_e_h1, &p_e_h2)?;
    Ok(ContributorTableRow { k, p_e_h1, p_e_h2, lr })
}

/// One row per `k`, in input order.
pub fn contributor_table(
    k_values: &[u32],
    n_pots: u32,
    genotype_freq: &BigRational,
) -> Result<Vec<ContributorTableRow>> {
    k_values
        .iter()
        .map(|&k| k_contributor_analysis(k, n_pots, genotype_freq))
        .collect()
}
