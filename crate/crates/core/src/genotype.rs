//! Genotypes, mixtures, and exact enumeration of two-person contributor
//! combinations.
//!
//! Contributor model: the two contributors at a locus form an unordered
//! multiset `{a, b}` of genotypes, and the multiset carries weight
//! proportional to `f(a)·f(b)`. With equal genotype frequencies this is
//! uniform over multisets, so a 10-genotype locus has 55 equally likely
//! pairs.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::analysis::AnalysisResult;
use crate::error::{Error, Result};
use crate::exact::{parse_rational, rational_string, Prob};

/// An allele designation such as `"14"` or `"9.3"`.
///
/// Equality is exact string equality. Ordering is numeric where the
/// designation parses as a number, so `"9.3" < "10"`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Allele(String);

impl Allele {
    pub fn new(designation: impl Into<String>) -> Result<Self> {
        let designation = designation.into();
        if designation.trim().is_empty() {
            return Err(Error::Validation("allele designation is empty".into()));
        }
        Ok(Allele(designation))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    fn numeric(&self) -> Option<BigRational> {
        if self.0.contains('/') {
            return None;
        }
        parse_rational(&self.0).ok()
    }
}

impl TryFrom<String> for Allele {
    type Error = Error;

    fn try_from(value: String) -> Result<Self> {
        Allele::new(value)
    }
}

impl From<Allele> for String {
    fn from(value: Allele) -> Self {
        value.0
    }
}

impl Ord for Allele {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.numeric(), other.numeric()) {
            (Some(a), Some(b)) => a.cmp(&b).then_with(|| self.0.cmp(&other.0)),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => self.0.cmp(&other.0),
        }
    }
}

impl PartialOrd for Allele {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Allele {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub type AlleleSet = BTreeSet<Allele>;

/// Parse a list of designations into an allele set.
pub fn allele_set<S: AsRef<str>>(designations: impl IntoIterator<Item = S>) -> Result<AlleleSet> {
    designations.into_iter().map(|d| Allele::new(d.as_ref())).collect()
}

/// Unordered allele pair at one locus, stored with `first <= second`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Genotype {
    first: Allele,
    second: Allele,
}

impl Genotype {
    pub fn new(a: Allele, b: Allele) -> Self {
        if a <= b {
            Genotype { first: a, second: b }
        } else {
            Genotype { first: b, second: a }
        }
    }

    pub fn parse(a: &str, b: &str) -> Result<Self> {
        Ok(Genotype::new(Allele::new(a)?, Allele::new(b)?))
    }

    pub fn first(&self) -> &Allele {
        &self.first
    }

    pub fn second(&self) -> &Allele {
        &self.second
    }

    pub fn is_homozygous(&self) -> bool {
        self.first == self.second
    }

    pub fn alleles(&self) -> impl Iterator<Item = &Allele> {
        [&self.first, &self.second].into_iter()
    }
}

impl fmt::Display for Genotype {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.first, self.second)
    }
}

/// Genotypes possible at one locus, with exact population frequencies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocusUniverse {
    entries: Vec<(Genotype, BigRational)>,
}

impl LocusUniverse {
    pub fn new(entries: Vec<(Genotype, BigRational)>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Validation("genotype universe is empty".into()));
        }
        let mut seen = BTreeSet::new();
        for (g, f) in &entries {
            if !seen.insert(g.clone()) {
                return Err(Error::Validation(format!("genotype {g} listed twice")));
            }
            if f.is_negative() {
                return Err(Error::Validation(format!("genotype {g} has a negative frequency")));
            }
        }
        let total: BigRational = entries.iter().map(|(_, f)| f).sum();
        if !total.is_one() {
            return Err(Error::Validation(format!(
                "genotype frequencies sum to {}, not 1",
                rational_string(&total)
            )));
        }
        Ok(LocusUniverse { entries })
    }

    /// Equal frequencies for every listed genotype.
    pub fn uniform(genotypes: Vec<Genotype>) -> Result<Self> {
        let weight = BigRational::new(1.into(), genotypes.len().max(1).into());
        Self::new(genotypes.into_iter().map(|g| (g, weight.clone())).collect())
    }

    /// Every genotype (homozygotes included) over `alleles`, equally frequent.
    pub fn from_alleles(alleles: &AlleleSet) -> Result<Self> {
        let alleles: Vec<&Allele> = alleles.iter().collect();
        let mut genotypes = Vec::new();
        for (i, a) in alleles.iter().enumerate() {
            for b in &alleles[i..] {
                genotypes.push(Genotype::new((*a).clone(), (*b).clone()));
            }
        }
        Self::uniform(genotypes)
    }

    pub fn entries(&self) -> &[(Genotype, BigRational)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn frequency(&self, g: &Genotype) -> Option<&BigRational> {
        self.entries.iter().find(|(h, _)| h == g).map(|(_, f)| f)
    }
}

/// Named loci, each with its genotype universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenotypeUniverse {
    pub loci: Vec<(String, LocusUniverse)>,
}

/// One genotype per locus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    pub loci: Vec<(String, Genotype)>,
}

impl Profile {
    pub fn genotypes(&self) -> Vec<Genotype> {
        self.loci.iter().map(|(_, g)| g.clone()).collect()
    }
}

/// Alleles observed at each locus of a mixed sample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixtureProfile {
    pub loci: Vec<(String, AlleleSet)>,
}

impl MixtureProfile {
    pub fn new(loci: Vec<(String, AlleleSet)>) -> Result<Self> {
        if let Some((name, _)) = loci.iter().find(|(_, set)| set.is_empty()) {
            return Err(Error::Validation(format!("mixture locus {name} has no alleles")));
        }
        Ok(MixtureProfile { loci })
    }

    /// Universe of all genotypes formed from each locus's observed alleles.
    pub fn implied_universe(&self) -> Result<GenotypeUniverse> {
        let loci = self
            .loci
            .iter()
            .map(|(name, set)| Ok((name.clone(), LocusUniverse::from_alleles(set)?)))
            .collect::<Result<_>>()?;
        Ok(GenotypeUniverse { loci })
    }
}

/// Two contributor genotypes at one locus, `first <= second`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LocusPair {
    pub first: Genotype,
    pub second: Genotype,
}

impl LocusPair {
    pub fn new(a: Genotype, b: Genotype) -> Self {
        if a <= b {
            LocusPair { first: a, second: b }
        } else {
            LocusPair { first: b, second: a }
        }
    }

    pub fn contains(&self, g: &Genotype) -> bool {
        self.first == *g || self.second == *g
    }

    pub fn union(&self) -> AlleleSet {
        self.first.alleles().chain(self.second.alleles()).cloned().collect()
    }
}

impl fmt::Display for LocusPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.first, self.second)
    }
}

/// Two contributors across all loci (`first <= second` lexicographically).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ContributorPair {
    pub first: Vec<Genotype>,
    pub second: Vec<Genotype>,
}

impl ContributorPair {
    pub fn new(a: Vec<Genotype>, b: Vec<Genotype>) -> Self {
        if a <= b {
            ContributorPair { first: a, second: b }
        } else {
            ContributorPair { first: b, second: a }
        }
    }
}

fn join(genotypes: &[Genotype]) -> String {
    genotypes.iter().map(Genotype::to_string).collect::<Vec<_>>().join(" ")
}

impl fmt::Display for ContributorPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] + [{}]", join(&self.first), join(&self.second))
    }
}

/// Every unordered pair of universe genotypes whose alleles together are
/// exactly the mixture's alleles, in canonical order.
pub fn compatible_pairs(mixture: &AlleleSet, universe: &LocusUniverse) -> Vec<LocusPair> {
    let candidates: Vec<&Genotype> = universe
        .entries
        .iter()
        .map(|(g, _)| g)
        .filter(|g| g.alleles().all(|a| mixture.contains(a)))
        .collect();
    let mut pairs = Vec::new();
    for (i, a) in candidates.iter().enumerate() {
        for b in &candidates[i..] {
            let covered = mixture
                .iter()
                .all(|allele| a.alleles().chain(b.alleles()).any(|x| x == allele));
            if covered {
                pairs.push(LocusPair::new((*a).clone(), (*b).clone()));
            }
        }
    }
    pairs.sort();
    pairs
}

fn pair_weight(universe: &LocusUniverse, pair: &LocusPair) -> BigRational {
    let fa = universe.frequency(&pair.first).expect("pair drawn from universe");
    let fb = universe.frequency(&pair.second).expect("pair drawn from universe");
    fa * fb
}

/// Weight sums under the multiset model, relative to a suspect genotype.
struct MultisetSums {
    /// Total weight of all multisets: `(1 + Σf²) / 2`.
    total: BigRational,
    /// Weight of multisets containing the suspect genotype: `f(g)`.
    with_suspect: BigRational,
    /// Compatible multisets containing the suspect genotype.
    compatible_with: BigRational,
    /// Compatible multisets not containing it.
    compatible_without: BigRational,
}

fn multiset_sums(mixture: &AlleleSet, suspect: &Genotype, universe: &LocusUniverse) -> Result<MultisetSums> {
    let f_suspect = universe
        .frequency(suspect)
        .ok_or_else(|| Error::Validation(format!("suspect genotype {suspect} is not in the universe")))?
        .clone();
    let pairs = compatible_pairs(mixture, universe);
    if pairs.is_empty() {
        return Err(Error::ImpossibleEvidence);
    }
    let sum_sq: BigRational = universe.entries.iter().map(|(_, f)| f * f).sum();
    let total = (BigRational::one() + sum_sq) / BigRational::from_integer(2.into());
    let mut compatible_with = BigRational::zero();
    let mut compatible_without = BigRational::zero();
    for pair in &pairs {
        let w = pair_weight(universe, pair);
        if pair.contains(suspect) {
            compatible_with += w;
        } else {
            compatible_without += w;
        }
    }
    if (&compatible_with + &compatible_without).is_zero() {
        return Err(Error::ImpossibleEvidence);
    }
    Ok(MultisetSums {
        total,
        with_suspect: f_suspect,
        compatible_with,
        compatible_without,
    })
}

fn prob(value: BigRational) -> Result<Prob> {
    Prob::from_rational(value)
}

/// Probability that someone with the suspect's genotype is one of the two
/// contributors, given the mixture: the weighted share of compatible pairs
/// that contain the genotype.
pub fn inclusion_posterior(mixture: &AlleleSet, suspect: &Genotype, universe: &LocusUniverse) -> Result<Prob> {
    let sums = multiset_sums(mixture, suspect, universe)?;
    let compatible = &sums.compatible_with + &sums.compatible_without;
    prob(sums.compatible_with / compatible)
}

/// `H'`: a person with the suspect's genotype is one of the contributors,
/// against its negation.
pub fn analyze_profile_in_mixture(
    mixture: &AlleleSet,
    suspect: &Genotype,
    universe: &LocusUniverse,
) -> Result<AnalysisResult> {
    let sums = multiset_sums(mixture, suspect, universe)?;
    let prior = prob(&sums.with_suspect / &sums.total)?;
    let p_e_h = prob(&sums.compatible_with / &sums.with_suspect)?;
    let p_e_not_h = negation_likelihood(&sums, &sums.compatible_without)?;
    AnalysisResult::against_negation(prior, p_e_h, p_e_not_h)
}

/// `H`: the suspect personally is one of the two contributors, drawn from a
/// population of `population_size` people.
///
/// Under `not H` the mixture can also arise from a non-suspect who happens
/// to carry the suspect's genotype, which adds `f(g)·W` to the compatible
/// weight (`W` being the compatible weight that includes the genotype).
pub fn analyze_suspect_is_contributor(
    mixture: &AlleleSet,
    suspect: &Genotype,
    universe: &LocusUniverse,
    population_size: u64,
) -> Result<AnalysisResult> {
    if population_size < 2 {
        return Err(Error::Validation("population size must be at least 2".into()));
    }
    let sums = multiset_sums(mixture, suspect, universe)?;
    let p_e_h = prob(&sums.compatible_with / &sums.with_suspect)?;
    let lookalike = &sums.with_suspect * &sums.compatible_with;
    let p_e_not_h = negation_likelihood(&sums, &(&sums.compatible_without + lookalike))?;
    // C(N-1, 1) / C(N, 2) = 2/N
    let prior = Prob::new(2, population_size)?;
    AnalysisResult::against_negation(prior, p_e_h, p_e_not_h)
}

/// `weight / (total - f(g))`, or 0 when no multiset lacks the genotype.
fn negation_likelihood(sums: &MultisetSums, weight: &BigRational) -> Result<Prob> {
    let without = &sums.total - &sums.with_suspect;
    if without.is_zero() {
        return Ok(Prob::zero());
    }
    prob(weight / without)
}

/// Default bound on materialized multi-locus combinations.
pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

fn aligned<'a>(
    mixture: &'a MixtureProfile,
    universe: &'a GenotypeUniverse,
) -> Result<Vec<(&'a String, &'a AlleleSet, &'a LocusUniverse)>> {
    if mixture.loci.len() != universe.loci.len() {
        return Err(Error::schema(
            "loci",
            format!(
                "mixture has {} loci but the universe has {}",
                mixture.loci.len(),
                universe.loci.len()
            ),
        ));
    }
    mixture
        .loci
        .iter()
        .zip(&universe.loci)
        .enumerate()
        .map(|(i, ((name, set), (uname, u)))| {
            if name != uname {
                return Err(Error::schema(
                    format!("loci[{i}]"),
                    format!("mixture locus {name} does not match universe locus {uname}"),
                ));
            }
            Ok((name, set, u))
        })
        .collect()
}

fn check_suspect_loci(mixture: &MixtureProfile, suspect: &Profile) -> Result<()> {
    if mixture.loci.len() != suspect.loci.len() {
        return Err(Error::schema(
            "loci",
            format!(
                "mixture has {} loci but the suspect profile has {}",
                mixture.loci.len(),
                suspect.loci.len()
            ),
        ));
    }
    for (i, ((m, _), (s, _))) in mixture.loci.iter().zip(&suspect.loci).enumerate() {
        if m != s {
            return Err(Error::schema(
                format!("loci[{i}]"),
                format!("mixture locus {m} does not match suspect locus {s}"),
            ));
        }
    }
    Ok(())
}

/// Number of unordered two-person combinations built from the given
/// per-locus pair lists, with contributor identity tracked across loci.
fn unordered_count(per_locus: &[Vec<LocusPair>]) -> BigUint {
    let mut ordered = BigUint::one();
    let mut symmetric = BigUint::one();
    for pairs in per_locus {
        let same = pairs.iter().filter(|p| p.first == p.second).count();
        ordered *= BigUint::from(2 * pairs.len() - same);
        symmetric *= BigUint::from(same);
    }
    (ordered + symmetric) / 2u8
}

fn materialize(per_locus: &[Vec<LocusPair>], cap: u64) -> Result<Vec<ContributorPair>> {
    let count = unordered_count(per_locus);
    if count > BigUint::from(cap) {
        return Err(Error::EnumerationTooLarge { count, cap: cap.into() });
    }
    if per_locus.iter().any(Vec::is_empty) {
        return Ok(Vec::new());
    }
    // Orientations per locus: (a, b) and, when distinct, (b, a).
    let options: Vec<Vec<(&Genotype, &Genotype)>> = per_locus
        .iter()
        .map(|pairs| {
            pairs
                .iter()
                .flat_map(|p| {
                    let mut o = vec![(&p.first, &p.second)];
                    if p.first != p.second {
                        o.push((&p.second, &p.first));
                    }
                    o
                })
                .collect()
        })
        .collect();
    let mut out = BTreeSet::new();
    let mut cursor = vec![0usize; options.len()];
    loop {
        let first: Vec<Genotype> = cursor.iter().zip(&options).map(|(&i, o)| o[i].0.clone()).collect();
        let second: Vec<Genotype> = cursor.iter().zip(&options).map(|(&i, o)| o[i].1.clone()).collect();
        if first <= second {
            out.insert(ContributorPair { first, second });
        }
        // Odometer step.
        let mut locus = options.len();
        loop {
            if locus == 0 {
                return Ok(out.into_iter().collect());
            }
            locus -= 1;
            cursor[locus] += 1;
            if cursor[locus] < options[locus].len() {
                break;
            }
            cursor[locus] = 0;
        }
    }
}

/// Number of two-person combinations compatible with the whole mixture.
pub fn combination_count(mixture: &MixtureProfile, universe: &GenotypeUniverse) -> Result<BigUint> {
    let per_locus: Vec<Vec<LocusPair>> = aligned(mixture, universe)?
        .into_iter()
        .map(|(_, set, u)| compatible_pairs(set, u))
        .collect();
    Ok(unordered_count(&per_locus))
}

/// All two-person combinations compatible with the mixture at every locus.
pub fn all_combinations(
    mixture: &MixtureProfile,
    universe: &GenotypeUniverse,
    cap: u64,
) -> Result<Vec<ContributorPair>> {
    let per_locus: Vec<Vec<LocusPair>> = aligned(mixture, universe)?
        .into_iter()
        .map(|(_, set, u)| compatible_pairs(set, u))
        .collect();
    materialize(&per_locus, cap)
}

fn exclusion_pairs(
    mixture: &MixtureProfile,
    suspect: &Profile,
    universe: &GenotypeUniverse,
) -> Result<Vec<Vec<LocusPair>>> {
    check_suspect_loci(mixture, suspect)?;
    Ok(aligned(mixture, universe)?
        .into_iter()
        .zip(&suspect.loci)
        .map(|((_, set, u), (_, g))| {
            compatible_pairs(set, u)
                .into_iter()
                .filter(|p| !p.contains(g))
                .collect()
        })
        .collect())
}

/// Number of combinations in which neither contributor shares the
/// suspect's genotype at any locus.
pub fn exclusion_count(mixture: &MixtureProfile, suspect: &Profile, universe: &GenotypeUniverse) -> Result<BigUint> {
    Ok(unordered_count(&exclusion_pairs(mixture, suspect, universe)?))
}

/// Combinations in which neither contributor shares the suspect's genotype
/// at any locus.
pub fn exclusion_combinations(
    mixture: &MixtureProfile,
    suspect: &Profile,
    universe: &GenotypeUniverse,
    cap: u64,
) -> Result<Vec<ContributorPair>> {
    materialize(&exclusion_pairs(mixture, suspect, universe)?, cap)
}

/// Number of combinations in which one contributor carries the suspect's
/// full profile: one per choice of the other contributor's genotypes.
pub fn containing_profile_count(
    mixture: &MixtureProfile,
    suspect: &Profile,
    universe: &GenotypeUniverse,
) -> Result<BigUint> {
    check_suspect_loci(mixture, suspect)?;
    let mut count = BigUint::one();
    for ((_, set, u), (_, g)) in aligned(mixture, universe)?.into_iter().zip(&suspect.loci) {
        count *= BigUint::from(compatible_pairs(set, u).iter().filter(|p| p.contains(g)).count());
    }
    Ok(count)
}

/// Where a combination stands relative to a suspect profile.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuspectRelation {
    /// Neither contributor shares the suspect's genotype at any locus.
    Excluded,
    /// One contributor carries the suspect's full profile.
    ContainsProfile,
    /// The suspect's genotypes appear at some loci, carried by people
    /// whose full profiles differ from the suspect's.
    PartialMatch,
}

pub fn classify(pair: &ContributorPair, suspect: &Profile) -> SuspectRelation {
    let genotypes = suspect.genotypes();
    if pair.first == genotypes || pair.second == genotypes {
        return SuspectRelation::ContainsProfile;
    }
    let touches = genotypes
        .iter()
        .enumerate()
        .any(|(i, g)| pair.first[i] == *g || pair.second[i] == *g);
    if touches {
        SuspectRelation::PartialMatch
    } else {
        SuspectRelation::Excluded
    }
}

/// Loci where at least one suspect allele is missing from the mixture.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VoidReport {
    pub count: usize,
    pub loci: Vec<String>,
}

pub fn count_voids(mixture: &MixtureProfile, suspect: &Profile) -> Result<VoidReport> {
    check_suspect_loci(mixture, suspect)?;
    let loci: Vec<String> = mixture
        .loci
        .iter()
        .zip(&suspect.loci)
        .filter(|((_, set), (_, g))| g.alleles().any(|a| !set.contains(a)))
        .map(|((name, _), _)| name.clone())
        .collect();
    Ok(VoidReport {
        count: loci.len(),
        loci,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ProbativeDirection;

    fn g(a: &str, b: &str) -> Genotype {
        Genotype::parse(a, b).unwrap()
    }

    fn set(alleles: &[&str]) -> AlleleSet {
        allele_set(alleles.iter().copied()).unwrap()
    }

    fn p(n: i64, d: i64) -> Prob {
        Prob::new(n, d).unwrap()
    }

    /// Ten heterozygous genotypes, each with frequency 1/10.
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

    /// Direct brute force over all unordered multisets of the universe.
    fn brute_force_pairs(mixture: &AlleleSet, universe: &LocusUniverse) -> Vec<LocusPair> {
        let gs: Vec<&Genotype> = universe.entries().iter().map(|(g, _)| g).collect();
        let mut out = Vec::new();
        let mut multisets = 0;
        for i in 0..gs.len() {
            for j in i..gs.len() {
                multisets += 1;
                let pair = LocusPair::new(gs[i].clone(), gs[j].clone());
                if pair.union() == *mixture {
                    out.push(pair);
                }
            }
        }
        assert_eq!(multisets, gs.len() * (gs.len() + 1) / 2);
        out.sort();
        out
    }

    #[test]
    fn allele_order_is_numeric() {
        let mut alleles = vec!["10", "9.3", "8", "X", "9"];
        alleles.sort_by_key(|a| Allele::new(*a).unwrap());
        assert_eq!(alleles, ["8", "9", "9.3", "10", "X"]);
        assert_eq!(g("8", "7").to_string(), "(7,8)");
        assert!(g("15", "15").is_homozygous());
        assert!(Allele::new("  ").is_err());
    }

    #[test]
    fn four_allele_mixture_has_three_pairs() {
        let pairs = compatible_pairs(&set(&["7", "8", "9", "10"]), &ten_genotypes());
        let shown: Vec<String> = pairs.iter().map(LocusPair::to_string).collect();
        assert_eq!(shown, ["{(7,8), (9,10)}", "{(7,9), (8,10)}", "{(7,10), (8,9)}"]);
    }

    #[test]
    fn compatible_pairs_match_brute_force() {
        let u = ten_genotypes();
        for mixture in [
            set(&["7", "8", "9", "10"]),
            set(&["7", "8"]),
            set(&["5", "9"]),
            set(&["5", "6", "7"]),
            set(&["10", "11", "12"]),
            set(&["6", "7", "8", "9"]),
        ] {
            assert_eq!(
                compatible_pairs(&mixture, &u),
                brute_force_pairs(&mixture, &u),
                "{mixture:?}"
            );
        }
        // Frozen from the brute force above.
        assert_eq!(
            compatible_pairs(&set(&["7", "8"]), &u),
            vec![LocusPair::new(g("7", "8"), g("7", "8"))]
        );
        assert!(compatible_pairs(&set(&["5", "9"]), &u).is_empty());
    }

    #[test]
    fn inclusion_posteriors() {
        let u = ten_genotypes();
        let m = set(&["7", "8", "9", "10"]);
        assert_eq!(inclusion_posterior(&m, &g("7", "8"), &u).unwrap(), p(1, 3));
        assert_eq!(
            inclusion_posterior(&set(&["7", "8"]), &g("7", "8"), &u).unwrap(),
            p(1, 1)
        );
        assert_eq!(inclusion_posterior(&m, &g("5", "6"), &u).unwrap(), p(0, 1));
        assert_eq!(
            inclusion_posterior(&set(&["5", "9"]), &g("7", "8"), &u),
            Err(Error::ImpossibleEvidence)
        );
    }

    #[test]
    fn profile_in_mixture_analysis() {
        let u = ten_genotypes();
        let m = set(&["7", "8", "9", "10"]);
        let r = analyze_profile_in_mixture(&m, &g("7", "8"), &u).unwrap();
        assert_eq!(r.prior, p(2, 11));
        assert_eq!(r.p_e_given_pros, p(1, 10));
        assert_eq!(r.p_e_given_def, p(2, 45));
        assert_eq!(r.lr.to_string(), "9/4");
        assert_eq!(r.posterior, p(1, 3));
        assert_eq!(r.direction, ProbativeDirection::Supports);
        assert!(r.exhaustive);
    }

    #[test]
    fn suspect_outside_universe_is_rejected() {
        let r = analyze_profile_in_mixture(&set(&["7", "8"]), &g("1", "2"), &ten_genotypes());
        assert!(matches!(r, Err(Error::Validation(_))));
    }

    #[test]
    fn three_genotype_universe() {
        // Multisets: {12,12} {12,13} {12,23} {13,13} {13,23} {23,23}, all
        // weight 1/9. Compatible with {1,2,3}: {12,13} {12,23} {13,23}.
        let u = LocusUniverse::uniform(vec![g("1", "2"), g("1", "3"), g("2", "3")]).unwrap();
        let m = set(&["1", "2", "3"]);
        let r = analyze_profile_in_mixture(&m, &g("1", "2"), &u).unwrap();
        assert_eq!(r.prior, p(1, 2));
        assert_eq!(r.p_e_given_pros, p(2, 3));
        assert_eq!(r.p_e_given_def, p(1, 3));
        assert_eq!(r.posterior, p(2, 3));
        assert_eq!(r.posterior, inclusion_posterior(&m, &g("1", "2"), &u).unwrap());
    }

    #[test]
    fn suspect_is_contributor_analysis() {
        let u = ten_genotypes();
        let m = set(&["7", "8", "9", "10"]);
        let r = analyze_suspect_is_contributor(&m, &g("7", "8"), &u, 1000).unwrap();
        assert_eq!(r.p_e_given_pros, p(1, 10));
        assert_eq!(r.p_e_given_def, p(21, 450));
        assert_eq!(r.lr.to_string(), "15/7");
        assert_eq!(r.prior, p(1, 500));
        // odds 1:499 × 45/21 = 45:10479
        assert_eq!(r.posterior, p(45, 10524));

        let other = analyze_suspect_is_contributor(&m, &g("7", "8"), &u, 10_000).unwrap();
        assert_eq!(other.lr, r.lr);
        assert_ne!(other.posterior, r.posterior);

        let pair = analyze_suspect_is_contributor(&m, &g("7", "8"), &u, 2).unwrap();
        assert_eq!(pair.posterior, p(1, 1));
        assert!(analyze_suspect_is_contributor(&m, &g("7", "8"), &u, 1).is_err());
    }

    fn section_mixture() -> (MixtureProfile, Profile) {
        let mixture = MixtureProfile::new(vec![
            ("D3S1358".into(), set(&["14", "15", "16"])),
            ("vWA".into(), set(&["16", "17", "18"])),
            ("D16S539".into(), set(&["9", "10", "11", "12"])),
        ])
        .unwrap();
        let suspect = Profile {
            loci: vec![
                ("D3S1358".into(), g("15", "16")),
                ("vWA".into(), g("17", "17")),
                ("D16S539".into(), g("9", "11")),
            ],
        };
        (mixture, suspect)
    }

    #[test]
    fn exclusion_combinations_three_loci() {
        let (mixture, suspect) = section_mixture();
        let universe = mixture.implied_universe().unwrap();
        let combos = exclusion_combinations(&mixture, &suspect, &universe, DEFAULT_ENUMERATION_CAP).unwrap();
        // 3 × 5 × 2 locus pairs, 2^3 orientations, halved.
        assert_eq!(combos.len(), 120);
        assert_eq!(
            exclusion_count(&mixture, &suspect, &universe).unwrap(),
            BigUint::from(120u32)
        );
        let listed = [
            (
                [g("14", "16"), g("16", "17"), g("9", "10")],
                [g("14", "15"), g("17", "18"), g("11", "12")],
            ),
            (
                [g("14", "16"), g("16", "17"), g("9", "12")],
                [g("15", "15"), g("18", "18"), g("10", "11")],
            ),
            (
                [g("14", "15"), g("16", "16"), g("9", "12")],
                [g("16", "16"), g("17", "18"), g("10", "11")],
            ),
        ];
        for (a, b) in listed {
            let pair = ContributorPair::new(a.to_vec(), b.to_vec());
            assert!(combos.contains(&pair), "missing {pair}");
        }
        for c in &combos {
            assert_eq!(classify(c, &suspect), SuspectRelation::Excluded);
        }
    }

    #[test]
    fn forced_suspect_genotype_leaves_no_exclusions() {
        let mixture = MixtureProfile::new(vec![("L".into(), set(&["7", "8"]))]).unwrap();
        let suspect = Profile {
            loci: vec![("L".into(), g("7", "8"))],
        };
        let universe = GenotypeUniverse {
            loci: vec![("L".into(), ten_genotypes())],
        };
        assert!(exclusion_combinations(&mixture, &suspect, &universe, 100)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn single_locus_exclusions() {
        let mixture = MixtureProfile::new(vec![("L".into(), set(&["7", "8", "9", "10"]))]).unwrap();
        let suspect = Profile {
            loci: vec![("L".into(), g("7", "8"))],
        };
        let universe = GenotypeUniverse {
            loci: vec![("L".into(), ten_genotypes())],
        };
        let combos = exclusion_combinations(&mixture, &suspect, &universe, 100).unwrap();
        let shown: Vec<String> = combos.iter().map(ContributorPair::to_string).collect();
        assert_eq!(shown, ["[(7,9)] + [(8,10)]", "[(7,10)] + [(8,9)]"]);
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let (mixture, suspect) = section_mixture();
        let universe = mixture.implied_universe().unwrap();
        match exclusion_combinations(&mixture, &suspect, &universe, 100) {
            Err(Error::EnumerationTooLarge { count, .. }) => assert_eq!(count, BigUint::from(120u32)),
            other => panic!("expected cap error, got {other:?}"),
        }
    }

    #[test]
    fn combinations_partition_by_suspect_relation() {
        let (mixture, suspect) = section_mixture();
        let universe = mixture.implied_universe().unwrap();
        let all = all_combinations(&mixture, &universe, DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(
            BigUint::from(all.len()),
            combination_count(&mixture, &universe).unwrap()
        );
        let excluded = exclusion_combinations(&mixture, &suspect, &universe, DEFAULT_ENUMERATION_CAP).unwrap();
        let mut counts = [0usize; 3];
        for c in &all {
            let slot = match classify(c, &suspect) {
                SuspectRelation::Excluded => 0,
                SuspectRelation::ContainsProfile => 1,
                SuspectRelation::PartialMatch => 2,
            };
            counts[slot] += 1;
            assert_eq!(excluded.contains(c), slot == 0);
        }
        assert_eq!(counts[0], excluded.len());
        assert_eq!(
            BigUint::from(counts[1]),
            containing_profile_count(&mixture, &suspect, &universe).unwrap()
        );
        assert_eq!(counts.iter().sum::<usize>(), all.len());
        assert!(counts[1] > 0 && counts[2] > 0);
    }

    #[test]
    fn homozygous_pairs_do_not_double_count() {
        // Only {(7,7),(7,7)} explains a lone 7.
        let mixture = MixtureProfile::new(vec![("A".into(), set(&["7"])), ("B".into(), set(&["1", "2"]))]).unwrap();
        let universe = mixture.implied_universe().unwrap();
        let all = all_combinations(&mixture, &universe, 1000).unwrap();
        // Locus B: {11,22},{11,12},{12,22},{12,12}; orientations: 2+2+2+1 = 7 ordered,
        // symmetric 1, so (7+1)/2 = 4.
        assert_eq!(all.len(), 4);
        assert_eq!(combination_count(&mixture, &universe).unwrap(), BigUint::from(4u8));
    }

    #[test]
    fn locus_alignment_is_checked() {
        let (mixture, _) = section_mixture();
        let wrong = Profile {
            loci: vec![("D3S1358".into(), g("15", "16"))],
        };
        assert!(matches!(count_voids(&mixture, &wrong), Err(Error::Schema { .. })));
        let renamed = Profile {
            loci: vec![
                ("D3S1358".into(), g("15", "16")),
                ("TH01".into(), g("17", "17")),
                ("D16S539".into(), g("9", "11")),
            ],
        };
        assert!(matches!(count_voids(&mixture, &renamed), Err(Error::Schema { .. })));
    }

    #[test]
    fn voids() {
        let (mixture, suspect) = section_mixture();
        assert_eq!(count_voids(&mixture, &suspect).unwrap().count, 0);

        let m = MixtureProfile::new(vec![("D3S1358".into(), set(&["14", "15", "16"]))]).unwrap();
        let homozygous = Profile {
            loci: vec![("D3S1358".into(), g("15", "15"))],
        };
        assert_eq!(count_voids(&m, &homozygous).unwrap().count, 0);
        let missing = Profile {
            loci: vec![("D3S1358".into(), g("13", "15"))],
        };
        let report = count_voids(&m, &missing).unwrap();
        assert_eq!(report.loci, ["D3S1358"]);
    }
}
