//! Brute-force and Monte Carlo cross-checks for the closed forms.
//!
//! The enumerators here share no code with the analytic modules beyond the
//! value types: compatibility is tested by direct set comparison and every
//! probability is a ratio of counted weights.
//!
//! Monte Carlo sampling uses ChaCha8 (`rand_chacha`). Work is split into
//! fixed chunks of [`MC_CHUNK`] samples; chunk `i` draws from the stream
//! `i` of a generator seeded with the configured seed, and only integer
//! counts are merged, so results do not depend on the thread count.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::ball::{mixture_pair_count, profile_count, two_contributor_analysis};
use crate::bayes::likelihood_ratio;
use crate::error::{Error, Result};
use crate::exact::{rational_string, rational_to_f64, Prob, Ratio};
use crate::genotype::{analyze_profile_in_mixture, AlleleSet, Genotype, LocusUniverse};

pub const DEFAULT_SEED: u64 = 20_160_601;
pub const DEFAULT_MAX_ENUMERATION: u64 = 10_000_000;
pub const DEFAULT_MC_SAMPLES: u64 = 1_000_000;

/// Samples per independent substream.
pub const MC_CHUNK: u64 = 65_536;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_enumeration: u64,
    pub mc_samples: u64,
    pub seed: u64,
    /// Worker threads for sampling; `None` uses the global pool.
    pub threads: Option<usize>,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_enumeration: DEFAULT_MAX_ENUMERATION,
            mc_samples: DEFAULT_MC_SAMPLES,
            seed: DEFAULT_SEED,
            threads: None,
        }
    }
}

impl OracleConfig {
    pub fn validate(&self) -> Result<()> {
        if self.mc_samples == 0 {
            return Err(Error::Validation("mc_samples must be at least 1".into()));
        }
        if self.threads == Some(0) {
            return Err(Error::Validation("threads must be at least 1".into()));
        }
        Ok(())
    }

    fn check_cap(&self, count: BigUint) -> Result<()> {
        if count > BigUint::from(self.max_enumeration) {
            return Err(Error::EnumerationTooLarge {
                count,
                cap: self.max_enumeration.into(),
            });
        }
        Ok(())
    }
}

fn decode(mut index: u64, alphabet: u64, n: usize, out: &mut [u32]) {
    for slot in out.iter_mut().take(n) {
        *slot = (index % alphabet) as u32;
        index /= alphabet;
    }
}

fn check_ball_inputs(alphabet_size: u32, suspect: &[u32], mixture: &[BTreeSet<u32>]) -> Result<()> {
    if suspect.len() != mixture.len() || suspect.is_empty() {
        return Err(Error::Validation(
            "suspect and mixture need the same, non-zero number of pots".into(),
        ));
    }
    if alphabet_size < 2 {
        return Err(Error::Validation("alphabet size must be at least 2".into()));
    }
    let in_range = |b: &u32| *b < alphabet_size;
    if !suspect.iter().all(in_range) || !mixture.iter().flatten().all(in_range) {
        return Err(Error::Validation(format!("ball numbers must be below {alphabet_size}")));
    }
    if mixture.iter().any(|pot| pot.is_empty() || pot.len() > 2) {
        return Err(Error::Validation("each mixture pot shows one or two numbers".into()));
    }
    Ok(())
}

/// Posterior that the suspect's profile is one of two contributors, by
/// enumerating every ordered pair of uniformly drawn profiles and keeping
/// those that reproduce the mixture.
pub fn enumerate_ball_posterior(
    alphabet_size: u32,
    suspect: &[u32],
    mixture: &[BTreeSet<u32>],
    config: &OracleConfig,
) -> Result<Prob> {
    check_ball_inputs(alphabet_size, suspect, mixture)?;
    let n = suspect.len();
    let profiles = profile_count(n as u32, alphabet_size);
    config.check_cap(&profiles * &profiles)?;
    let profiles = profiles.to_u64().expect("bounded by the cap");
    let alphabet = alphabet_size as u64;

    let (matching, with_suspect) = (0..profiles)
        .into_par_iter()
        .map(|a| {
            let mut first = vec![0u32; n];
            let mut second = vec![0u32; n];
            decode(a, alphabet, n, &mut first);
            let mut counts = (0u64, 0u64);
            for b in 0..profiles {
                decode(b, alphabet, n, &mut second);
                let reproduces = mixture.iter().enumerate().all(|(i, pot)| {
                    let shown: BTreeSet<u32> = [first[i], second[i]].into_iter().collect();
                    shown == *pot
                });
                if reproduces {
                    counts.0 += 1;
                    if first == suspect || second == suspect {
                        counts.1 += 1;
                    }
                }
            }
            counts
        })
        .reduce(|| (0, 0), |x, y| (x.0 + y.0, x.1 + y.1));
    if matching == 0 {
        return Err(Error::ImpossibleEvidence);
    }
    Prob::new(with_suspect, matching)
}

/// Prior, likelihoods, LR and posterior for "a person with genotype `g` is
/// a contributor", counted over all unordered genotype multisets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenotypeOracleResult {
    pub prior: Prob,
    pub p_e_given_h: Prob,
    pub p_e_given_not_h: Prob,
    pub lr: Ratio,
    pub posterior: Prob,
}

pub fn enumerate_genotype_analysis(
    universe: &LocusUniverse,
    mixture: &AlleleSet,
    suspect: &Genotype,
    config: &OracleConfig,
) -> Result<GenotypeOracleResult> {
    let entries = universe.entries();
    let n = entries.len() as u64;
    config.check_cap(BigUint::from(n * (n + 1) / 2))?;
    if !entries.iter().any(|(g, _)| g == suspect) {
        return Err(Error::Validation(format!(
            "suspect genotype {suspect} is not in the universe"
        )));
    }
    let zero = BigRational::zero;
    let (mut with_g, mut without_g, mut with_g_compat, mut without_g_compat) = (zero(), zero(), zero(), zero());
    for i in 0..entries.len() {
        for j in i..entries.len() {
            let (a, fa) = &entries[i];
            let (b, fb) = &entries[j];
            let weight = fa * fb;
            let shown: AlleleSet = [a.first(), a.second(), b.first(), b.second()]
                .into_iter()
                .cloned()
                .collect();
            let compatible = shown == *mixture;
            if a == suspect || b == suspect {
                if compatible {
                    with_g_compat += &weight;
                }
                with_g += weight;
            } else {
                if compatible {
                    without_g_compat += &weight;
                }
                without_g += weight;
            }
        }
    }
    let compatible = &with_g_compat + &without_g_compat;
    if compatible.is_zero() {
        return Err(Error::ImpossibleEvidence);
    }
    let total = &with_g + &without_g;
    let p_e_given_not_h = if without_g.is_zero() {
        Prob::zero()
    } else {
        Prob::from_rational(&without_g_compat / &without_g)?
    };
    let p_e_given_h = Prob::from_rational(&with_g_compat / &with_g)?;
    Ok(GenotypeOracleResult {
        prior: Prob::from_rational(&with_g / total)?,
        lr: likelihood_ratio(&p_e_given_h, &p_e_given_not_h)?,
        posterior: Prob::from_rational(with_g_compat / compatible)?,
        p_e_given_h,
        p_e_given_not_h,
    })
}

/// Posterior that genotype `g` is present when the two contributors are
/// drawn independently by frequency (ordered draws). Agrees with the
/// multiset model whenever no compatible pair repeats a genotype.
pub fn iid_genotype_posterior(universe: &LocusUniverse, mixture: &AlleleSet, suspect: &Genotype) -> Result<Prob> {
    let mut compatible = BigRational::zero();
    let mut with_g = BigRational::zero();
    for (a, fa) in universe.entries() {
        for (b, fb) in universe.entries() {
            let shown: AlleleSet = a.alleles().chain(b.alleles()).cloned().collect();
            if shown == *mixture {
                let weight = fa * fb;
                if a == suspect || b == suspect {
                    with_g += &weight;
                }
                compatible += weight;
            }
        }
    }
    if compatible.is_zero() {
        return Err(Error::ImpossibleEvidence);
    }
    Prob::from_rational(with_g / compatible)
}

/// What to simulate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum McScenario {
    /// Suspect plus `k - 1` unknowns; each pot shows one ball from a
    /// random contributor, and an unknown's ball matches the suspect's with
    /// probability `freq`. Estimates the chance that every pot matches.
    KContributorMatch { k: u32, n_pots: u32, freq: BigRational },
    /// Two uniformly drawn profiles, kept when they reproduce the mixture.
    /// Estimates the share of kept pairs that include the suspect.
    BallPosterior {
        alphabet_size: u32,
        suspect: Vec<u32>,
        mixture: Vec<BTreeSet<u32>>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct McEstimate {
    pub estimate: f64,
    pub std_error: f64,
    /// Draws that entered the estimate (accepted draws for rejection sampling).
    pub effective_samples: u64,
    pub hits: u64,
}

/// Bernoulli(`num/den`) without floating point when the fraction fits.
enum Chance {
    Exact { num: u64, den: u64 },
    Float(f64),
}

impl Chance {
    fn new(p: &BigRational) -> Self {
        match (p.numer().to_u64(), p.denom().to_u64()) {
            (Some(num), Some(den)) => Chance::Exact { num, den },
            _ => Chance::Float(rational_to_f64(p)),
        }
    }

    fn draw(&self, rng: &mut ChaCha8Rng) -> bool {
        match *self {
            Chance::Exact { num, den } => rng.random_range(0..den) < num,
            Chance::Float(p) => rng.random::<f64>() < p,
        }
    }
}

/// Per-chunk counts: (draws entering the estimate, hits).
fn sample_chunk(scenario: &McScenario, rng: &mut ChaCha8Rng, samples: u64) -> (u64, u64) {
    match scenario {
        McScenario::KContributorMatch { k, n_pots, freq } => {
            let chance = Chance::new(freq);
            let mut hits = 0;
            for _ in 0..samples {
                let all_match = (0..*n_pots).all(|_| rng.random_range(0..*k) == 0 || chance.draw(rng));
                hits += all_match as u64;
            }
            (samples, hits)
        }
        McScenario::BallPosterior {
            alphabet_size,
            suspect,
            mixture,
        } => {
            let (mut accepted, mut hits) = (0, 0);
            let n = suspect.len();
            let mut first = vec![0u32; n];
            let mut second = vec![0u32; n];
            for _ in 0..samples {
                // Pot by pot, stopping at the first pot that disagrees.
                let mut kept = true;
                for i in 0..n {
                    first[i] = rng.random_range(0..*alphabet_size);
                    second[i] = rng.random_range(0..*alphabet_size);
                    let pot = &mixture[i];
                    let shows = pot.contains(&first[i]) && pot.contains(&second[i]);
                    let covers = pot.len() == 1 || first[i] != second[i];
                    if !(shows && covers) {
                        kept = false;
                        break;
                    }
                }
                if kept {
                    accepted += 1;
                    hits += (first == *suspect || second == *suspect) as u64;
                }
            }
            (accepted, hits)
        }
    }
}

fn check_scenario(scenario: &McScenario) -> Result<()> {
    match scenario {
        McScenario::KContributorMatch { k, n_pots, freq } => {
            if *k == 0 || *n_pots == 0 {
                return Err(Error::Validation("need at least one contributor and one pot".into()));
            }
            if *freq <= BigRational::zero() || *freq > BigRational::one() {
                return Err(Error::Validation("frequency must lie in (0, 1]".into()));
            }
            Ok(())
        }
        McScenario::BallPosterior {
            alphabet_size,
            suspect,
            mixture,
        } => check_ball_inputs(*alphabet_size, suspect, mixture),
    }
}

/// Seeded estimate with its binomial standard error.
pub fn monte_carlo_check(scenario: &McScenario, config: &OracleConfig) -> Result<McEstimate> {
    config.validate()?;
    check_scenario(scenario)?;
    let chunks = config.mc_samples.div_ceil(MC_CHUNK);
    let run_chunk = |chunk: u64| {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        rng.set_stream(chunk);
        let start = chunk * MC_CHUNK;
        let size = MC_CHUNK.min(config.mc_samples - start);
        sample_chunk(scenario, &mut rng, size)
    };
    let merge = |x: (u64, u64), y: (u64, u64)| (x.0 + y.0, x.1 + y.1);
    let (effective, hits) = match config.threads {
        Some(1) => (0..chunks).map(run_chunk).fold((0, 0), merge),
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::Validation(format!("cannot start thread pool: {e}")))?
            .install(|| (0..chunks).into_par_iter().map(run_chunk).reduce(|| (0, 0), merge)),
        None => (0..chunks).into_par_iter().map(run_chunk).reduce(|| (0, 0), merge),
    };
    if effective == 0 {
        return Err(Error::InconclusiveSampling {
            samples: config.mc_samples,
        });
    }
    let estimate = hits as f64 / effective as f64;
    let std_error = (estimate * (1.0 - estimate) / effective as f64).sqrt();
    Ok(McEstimate {
        estimate,
        std_error,
        effective_samples: effective,
        hits,
    })
}

/// A randomly generated single-locus genotype problem.
#[derive(Debug, Clone)]
pub struct GenotypeCase {
    pub universe: LocusUniverse,
    pub mixture: AlleleSet,
    pub suspect: Genotype,
}

/// Case number `index` for a given seed: 3 to 6 genotypes over up to five
/// alleles, integer weights 1..=9, a mixture made from two universe
/// genotypes and a suspect drawn from the universe.
pub fn random_genotype_case(seed: u64, index: u64) -> GenotypeCase {
    use crate::genotype::Allele;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let allele_count = rng.random_range(3..=5u32);
    let alleles: Vec<Allele> = (1..=allele_count)
        .map(|a| Allele::new(a.to_string()).expect("non-empty"))
        .collect();
    let mut all = Vec::new();
    for i in 0..alleles.len() {
        for j in i..alleles.len() {
            all.push(Genotype::new(alleles[i].clone(), alleles[j].clone()));
        }
    }
    let size = rng.random_range(3..=6usize).min(all.len());
    let mut chosen = Vec::new();
    while chosen.len() < size {
        let g = all.swap_remove(rng.random_range(0..all.len()));
        chosen.push(g);
    }
    let weights: Vec<u64> = chosen.iter().map(|_| rng.random_range(1..=9u64)).collect();
    let total: u64 = weights.iter().sum();
    let entries = chosen
        .iter()
        .zip(&weights)
        .map(|(g, &w)| (g.clone(), BigRational::new(w.into(), total.into())))
        .collect();
    let universe = LocusUniverse::new(entries).expect("weights normalized");
    let a = &chosen[rng.random_range(0..chosen.len())];
    let b = &chosen[rng.random_range(0..chosen.len())];
    let mixture = a.alleles().chain(b.alleles()).cloned().collect();
    // Half the time the suspect is one of the genotypes behind the mixture.
    let suspect = if rng.random_bool(0.5) {
        a.clone()
    } else {
        chosen[rng.random_range(0..chosen.len())].clone()
    };
    GenotypeCase {
        universe,
        mixture,
        suspect,
    }
}

/// One oracle-versus-analytic comparison.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationReport {
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("reports always serialize");
        text.push('\n');
        text
    }

    /// Deterministic text, one line per check.
    pub fn render(&self) -> String {
        let mut out = format!("validate seed={}\n", self.seed);
        for c in &self.checks {
            let status = if c.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{status} {}: expected {}, got {}", c.name, c.expected, c.actual);
        }
        let passed = self.checks.iter().filter(|c| c.pass).count();
        let _ = writeln!(out, "{passed}/{} checks passed", self.checks.len());
        out
    }
}

fn exact_check(name: String, expected: &Prob, actual: Result<Prob>) -> Check {
    match actual {
        Ok(actual) => Check {
            name,
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass: actual == *expected,
        },
        Err(e) => Check {
            name,
            expected: expected.to_string(),
            actual: format!("error: {e}"),
            pass: false,
        },
    }
}

fn within_three_se(name: String, target: f64, result: Result<McEstimate>) -> Check {
    let expected = format!("{target:.6e} within 3 SE");
    match result {
        Ok(m) => Check {
            name,
            expected,
            actual: format!("{:.6e} (SE {:.3e}, n {})", m.estimate, m.std_error, m.effective_samples),
            pass: (m.estimate - target).abs() <= 3.0 * m.std_error,
        },
        Err(e) => Check {
            name,
            expected,
            actual: format!("error: {e}"),
            pass: false,
        },
    }
}

/// Standard ball mixture: the suspect has `i+1` in pot `i` (mod alphabet),
/// the other contributor has that plus half the alphabet, and the first
/// `repeated` pots show the suspect's number alone.
pub fn ball_fixture(n: usize, alphabet: u32, repeated: usize) -> (Vec<u32>, Vec<BTreeSet<u32>>) {
    let suspect: Vec<u32> = (0..n as u32).map(|i| (i + 1) % alphabet).collect();
    let mixture = suspect
        .iter()
        .enumerate()
        .map(|(i, &s)| {
            if i < repeated {
                [s].into_iter().collect()
            } else {
                [s, (s + alphabet / 2) % alphabet].into_iter().collect()
            }
        })
        .collect();
    (suspect, mixture)
}

/// Oracle suite comparing enumeration and sampling with the closed forms.
pub fn validate(config: &OracleConfig) -> Result<ValidationReport> {
    config.validate()?;
    let mut checks = Vec::new();

    for (n, alphabet, repeated) in [
        (1, 10, 0),
        (2, 10, 0),
        (3, 10, 0),
        (3, 10, 1),
        (3, 10, 3),
        (4, 4, 0),
        (4, 4, 2),
    ] {
        let (suspect, mixture) = ball_fixture(n, alphabet, repeated);
        let pairs = mixture_pair_count(n as u32, repeated as u32)?;
        let expected = Prob::from_rational(BigRational::new(1.into(), pairs.into()))?;
        checks.push(exact_check(
            format!("ball enumeration n={n} alphabet={alphabet} repeated={repeated}"),
            &expected,
            enumerate_ball_posterior(alphabet, &suspect, &mixture, config),
        ));
    }
    for n in [2, 3] {
        let closed = two_contributor_analysis(n, 10)?.posterior_h;
        let (suspect, mixture) = ball_fixture(n as usize, 10, 0);
        checks.push(exact_check(
            format!("ball closed form n={n}"),
            &closed,
            enumerate_ball_posterior(10, &suspect, &mixture, config),
        ));
    }

    for index in 0..25 {
        let case = random_genotype_case(config.seed, index);
        let name = format!("genotype universe #{index}");
        let outcome = (|| -> Result<(String, String, bool)> {
            let analytic = analyze_profile_in_mixture(&case.mixture, &case.suspect, &case.universe)?;
            let counted = enumerate_genotype_analysis(&case.universe, &case.mixture, &case.suspect, config)?;
            let show = |prior: &Prob, lr: &Ratio, post: &Prob| format!("prior {prior}, lr {lr}, posterior {post}");
            let expected = show(&analytic.prior, &analytic.lr, &analytic.posterior);
            let actual = show(&counted.prior, &counted.lr, &counted.posterior);
            let pass = analytic.prior == counted.prior
                && analytic.lr == counted.lr
                && analytic.posterior == counted.posterior
                && analytic.p_e_given_pros == counted.p_e_given_h
                && analytic.p_e_given_def == counted.p_e_given_not_h;
            Ok((expected, actual, pass))
        })();
        checks.push(match outcome {
            Ok((expected, actual, pass)) => Check {
                name,
                expected,
                actual,
                pass,
            },
            Err(e) => Check {
                name,
                expected: "analysis".into(),
                actual: format!("error: {e}"),
                pass: false,
            },
        });
    }

    let tenth = BigRational::new(1.into(), 10.into());
    let k2 = McScenario::KContributorMatch {
        k: 2,
        n_pots: 20,
        freq: tenth,
    };
    let target = rational_to_f64(&num_traits::pow(BigRational::new(11.into(), 20.into()), 20));
    checks.push(within_three_se(
        "monte carlo k=2 P(E|H1)".into(),
        target,
        monte_carlo_check(&k2, config),
    ));

    let certain = McScenario::KContributorMatch {
        k: 3,
        n_pots: 20,
        freq: BigRational::one(),
    };
    let m = monte_carlo_check(
        &certain,
        &OracleConfig {
            mc_samples: config.mc_samples.min(10_000),
            ..config.clone()
        },
    )?;
    checks.push(Check {
        name: "monte carlo freq=1".into(),
        expected: "1".into(),
        actual: format!("{}", m.estimate),
        pass: m.estimate == 1.0,
    });

    let (suspect, mixture) = ball_fixture(2, 10, 0);
    let ball = McScenario::BallPosterior {
        alphabet_size: 10,
        suspect,
        mixture,
    };
    checks.push(within_three_se(
        "monte carlo ball n=2 posterior".into(),
        0.5,
        monte_carlo_check(&ball, config),
    ));

    let (suspect, mixture) = ball_fixture(3, 10, 0);
    let ball = McScenario::BallPosterior {
        alphabet_size: 10,
        suspect,
        mixture,
    };
    let ball_config = OracleConfig {
        mc_samples: config.mc_samples.saturating_mul(4),
        ..config.clone()
    };
    checks.push(within_three_se(
        "monte carlo ball n=3 posterior".into(),
        0.25,
        monte_carlo_check(&ball, &ball_config),
    ));

    Ok(ValidationReport {
        seed: config.seed,
        checks,
    })
}

/// Exact value as `n/d` followed by its `f64` rendering.
pub fn describe_exact(p: &Prob) -> String {
    format!("{} ({:.6e})", rational_string(p.value()), p.to_f64())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genotype::{allele_set, inclusion_posterior};

    fn p(n: i64, d: i64) -> Prob {
        Prob::new(n, d).unwrap()
    }

    fn pots(list: &[&[u32]]) -> Vec<BTreeSet<u32>> {
        list.iter().map(|pot| pot.iter().copied().collect()).collect()
    }

    fn g(a: &str, b: &str) -> Genotype {
        Genotype::parse(a, b).unwrap()
    }

    fn ten_genotypes() -> LocusUniverse {
        let pairs = [
            ("7", "8"),
            ("7", "9"),
            ("7", "10"),
            ("8", "9"),
            ("8", "10"),
            ("9", "10"),
            ("5", "6"),
            ("6", "7"),
            ("10", "11"),
            ("11", "12"),
        ];
        LocusUniverse::uniform(pairs.iter().map(|(a, b)| g(a, b)).collect()).unwrap()
    }

    #[test]
    fn ball_enumeration_examples() {
        let config = OracleConfig::default();
        let three = enumerate_ball_posterior(10, &[1, 2, 3], &pots(&[&[1, 7], &[2, 8], &[3, 9]]), &config);
        assert_eq!(three.unwrap(), p(1, 4));
        // Both ordered completions of a single pot contain the suspect.
        assert_eq!(
            enumerate_ball_posterior(10, &[1], &pots(&[&[1, 7]]), &config).unwrap(),
            p(1, 1)
        );
        let two = enumerate_ball_posterior(10, &[1, 2], &pots(&[&[1, 7], &[2, 8]]), &config);
        assert_eq!(two.unwrap(), p(1, 2));
    }

    #[test]
    fn ball_enumeration_respects_cap() {
        let config = OracleConfig {
            max_enumeration: 1000,
            ..OracleConfig::default()
        };
        let r = enumerate_ball_posterior(10, &[1, 2], &pots(&[&[1, 7], &[2, 8]]), &config);
        assert!(matches!(r, Err(Error::EnumerationTooLarge { .. })));
    }

    #[test]
    fn ball_enumeration_rejects_bad_input() {
        let config = OracleConfig::default();
        assert!(enumerate_ball_posterior(10, &[1, 2], &pots(&[&[1, 7]]), &config).is_err());
        assert!(enumerate_ball_posterior(5, &[1], &pots(&[&[1, 7]]), &config).is_err());
        assert_eq!(
            enumerate_ball_posterior(10, &[1], &pots(&[&[1, 2, 3]])[..], &config).unwrap_err(),
            Error::Validation("each mixture pot shows one or two numbers".into())
        );
    }

    #[test]
    fn repeated_pots_generalize() {
        let config = OracleConfig::default();
        for n in 1..=3 {
            for r in 0..=n {
                let (suspect, mixture) = ball_fixture(n, 10, r);
                let expected = BigRational::new(1.into(), mixture_pair_count(n as u32, r as u32).unwrap().into());
                let got = enumerate_ball_posterior(10, &suspect, &mixture, &config).unwrap();
                assert_eq!(got.value(), &expected, "n={n} r={r}");
            }
        }
    }

    #[test]
    fn genotype_enumeration_matches_fixture() {
        let m = allele_set(["7", "8", "9", "10"]).unwrap();
        let r = enumerate_genotype_analysis(&ten_genotypes(), &m, &g("7", "8"), &OracleConfig::default()).unwrap();
        assert_eq!(r.prior, p(2, 11));
        assert_eq!(r.p_e_given_not_h, p(2, 45));
        assert_eq!(r.lr.to_string(), "9/4");
        assert_eq!(r.posterior, p(1, 3));
    }

    #[test]
    fn single_genotype_universe() {
        let u = LocusUniverse::uniform(vec![g("7", "8")]).unwrap();
        let m = allele_set(["7", "8"]).unwrap();
        let r = enumerate_genotype_analysis(&u, &m, &g("7", "8"), &OracleConfig::default()).unwrap();
        assert_eq!(r.posterior, p(1, 1));
        assert_eq!(r.prior, p(1, 1));
        assert_eq!(r.lr, Ratio::Infinite);
        let a = analyze_profile_in_mixture(&m, &g("7", "8"), &u).unwrap();
        assert_eq!((a.prior, a.lr, a.posterior), (r.prior, r.lr, r.posterior));
    }

    #[test]
    fn iid_model_gives_same_posterior() {
        let m = allele_set(["7", "8", "9", "10"]).unwrap();
        assert_eq!(
            iid_genotype_posterior(&ten_genotypes(), &m, &g("7", "8")).unwrap(),
            p(1, 3)
        );
    }

    #[test]
    fn random_universes_match_analytics() {
        for index in 0..40 {
            let case = random_genotype_case(7, index);
            let counted =
                enumerate_genotype_analysis(&case.universe, &case.mixture, &case.suspect, &OracleConfig::default())
                    .unwrap();
            let analytic = analyze_profile_in_mixture(&case.mixture, &case.suspect, &case.universe).unwrap();
            assert_eq!(counted.prior, analytic.prior);
            assert_eq!(counted.lr, analytic.lr);
            assert_eq!(counted.posterior, analytic.posterior);
            let direct = inclusion_posterior(&case.mixture, &case.suspect, &case.universe).unwrap();
            assert_eq!(direct, analytic.posterior);
        }
    }

    #[test]
    fn random_cases_are_reproducible() {
        let a = random_genotype_case(11, 3);
        let b = random_genotype_case(11, 3);
        assert_eq!(a.universe, b.universe);
        assert_eq!(a.mixture, b.mixture);
        assert_eq!(a.suspect, b.suspect);
    }

    #[test]
    fn monte_carlo_is_thread_count_independent() {
        let scenario = McScenario::KContributorMatch {
            k: 2,
            n_pots: 3,
            freq: BigRational::new(1.into(), 10.into()),
        };
        let base = OracleConfig {
            mc_samples: 200_000,
            seed: 5,
            threads: Some(1),
            ..OracleConfig::default()
        };
        let one = monte_carlo_check(&scenario, &base).unwrap();
        let four = monte_carlo_check(
            &scenario,
            &OracleConfig {
                threads: Some(4),
                ..base.clone()
            },
        )
        .unwrap();
        let global = monte_carlo_check(&scenario, &OracleConfig { threads: None, ..base }).unwrap();
        assert_eq!(one, four);
        assert_eq!(one, global);
        let target = 0.55f64.powi(3);
        assert!((one.estimate - target).abs() <= 3.0 * one.std_error);
    }

    #[test]
    fn certain_match_estimates_one() {
        let scenario = McScenario::KContributorMatch {
            k: 4,
            n_pots: 20,
            freq: BigRational::one(),
        };
        let m = monte_carlo_check(
            &scenario,
            &OracleConfig {
                mc_samples: 1000,
                ..OracleConfig::default()
            },
        )
        .unwrap();
        assert_eq!(m.estimate, 1.0);
        assert_eq!(m.std_error, 0.0);
    }

    #[test]
    fn rejection_with_no_acceptances_is_inconclusive() {
        let (suspect, mixture) = ball_fixture(6, 10, 0);
        let scenario = McScenario::BallPosterior {
            alphabet_size: 10,
            suspect,
            mixture,
        };
        let config = OracleConfig {
            mc_samples: 10,
            ..OracleConfig::default()
        };
        assert_eq!(
            monte_carlo_check(&scenario, &config),
            Err(Error::InconclusiveSampling { samples: 10 })
        );
    }

    #[test]
    fn more_samples_shrink_standard_error() {
        let scenario = McScenario::KContributorMatch {
            k: 2,
            n_pots: 2,
            freq: BigRational::new(1.into(), 10.into()),
        };
        let mut ratio_sum = 0.0;
        let seeds = 20;
        for seed in 0..seeds {
            let small = OracleConfig {
                mc_samples: 2_000,
                seed,
                threads: Some(1),
                ..OracleConfig::default()
            };
            let large = OracleConfig {
                mc_samples: 6_000,
                ..small.clone()
            };
            let a = monte_carlo_check(&scenario, &small).unwrap();
            let b = monte_carlo_check(&scenario, &large).unwrap();
            ratio_sum += a.std_error / b.std_error;
        }
        assert!(ratio_sum / seeds as f64 >= 2f64.sqrt());
    }

    #[test]
    fn config_validation() {
        assert!(OracleConfig {
            mc_samples: 0,
            ..OracleConfig::default()
        }
        .validate()
        .is_err());
        assert!(OracleConfig {
            threads: Some(0),
            ..OracleConfig::default()
        }
        .validate()
        .is_err());
    }
}
