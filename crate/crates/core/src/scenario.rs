//! Scenario files and the reports they produce.
//!
//! A scenario is a JSON object whose `kind` field selects one of
//! `screening`, `lottery`, `genotype-mixture`, `ball-two`, `ball-k` or
//! `table-1-report`. Unknown fields are rejected and every error carries
//! the offending field path. Probabilities and rationals are strings such
//! as `"1/200"`, `"0.02"` or `"4e6"`, converted exactly.

use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;
use serde::{de, Deserialize, Deserializer};

use crate::analysis::AnalysisResult;
use crate::ball::{
    contributor_table, mixture_pair_count, single_profile_analysis, two_contributor_analysis, DEFAULT_ALPHABET,
    DEFAULT_POTS,
};
use crate::bayes::{likelihood_ratio, posterior_from_prior, posterior_via_odds, probative_direction};
use crate::display::DEFAULT_SIG_FIGS;
use crate::error::{Error, Result};
use crate::exact::{parse_rational, Prob};
use crate::genotype::{
    analyze_profile_in_mixture, analyze_suspect_is_contributor, combination_count, compatible_pairs,
    containing_profile_count, count_voids, exclusion_combinations, exclusion_count, Allele, AlleleSet, Genotype,
    GenotypeUniverse, LocusUniverse, MixtureProfile, Profile, DEFAULT_ENUMERATION_CAP,
};
use crate::report::{Cell, RenderedReport, Table};
use crate::statement::{render_expert_report, StatementAssumptions, StatementInput, NON_EXHAUSTIVE_WARNING};
use crate::world::OutcomeSpace;

/// Exact rational read from a string (`"1/10"`, `"0.1"`, `"4e6"`) or an
/// integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rational(pub BigRational);

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct Visitor;

        impl de::Visitor<'_> for Visitor {
            type Value = Rational;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational such as \"1/10\", \"0.1\" or an integer")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Rational, E> {
                parse_rational(v).map(Rational).map_err(E::custom)
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Rational, E> {
                Ok(Rational(BigRational::from_integer(v.into())))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Rational, E> {
                Ok(Rational(BigRational::from_integer(v.into())))
            }
        }

        deserializer.deserialize_any(Visitor)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scenario {
    Screening(ScreeningScenario),
    Lottery(LotteryScenario),
    GenotypeMixture(MixtureScenario),
    BallTwo(BallTwoScenario),
    BallK(BallKScenario),
    Table1Report(Table1Scenario),
}

pub const KINDS: [&str; 6] = [
    "screening",
    "lottery",
    "genotype-mixture",
    "ball-two",
    "ball-k",
    "table-1-report",
];

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScreeningScenario {
    pub title: Option<String>,
    pub prior: Prob,
    pub p_e_given_h: Prob,
    pub p_e_given_not_h: Prob,
    pub sig_figs: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum OutcomeSpec {
    Label(String),
    Weighted { label: String, weight: Rational },
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EventSpec {
    pub name: String,
    pub outcomes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Comparison {
    pub prosecution: String,
    pub defence: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LotteryScenario {
    pub title: Option<String>,
    /// Labels (equally likely) or `{label, weight}` objects.
    pub outcomes: Vec<OutcomeSpec>,
    pub events: Vec<EventSpec>,
    /// Name of the evidence event.
    pub evidence: String,
    /// Event names; `!name` is the complement of `name`.
    pub comparisons: Vec<Comparison>,
    pub sig_figs: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UniverseEntry {
    pub genotype: [String; 2],
    /// Omit on every entry for equal frequencies.
    pub frequency: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LocusSpec {
    pub name: String,
    pub mixture: Vec<String>,
    pub suspect: [String; 2],
    /// Defaults to every genotype over the mixture and suspect alleles.
    pub universe: Option<Vec<UniverseEntry>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MixtureScenario {
    pub title: Option<String>,
    pub loci: Vec<LocusSpec>,
    pub population_size: Option<u64>,
    /// Exclusion combinations to list (default 10, 0 for none).
    pub max_listed: Option<usize>,
    pub max_enumeration: Option<u64>,
    pub sig_figs: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BallTwoScenario {
    pub title: Option<String>,
    pub n_positions: u32,
    pub alphabet_size: Option<u32>,
    pub repeated_positions: Option<u32>,
    pub sig_figs: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum KList {
    Values(Vec<u32>),
    Ranges(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BallKScenario {
    pub title: Option<String>,
    pub k: KList,
    pub n_pots: Option<u32>,
    pub freq: Option<Rational>,
    pub sig_figs: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportLocus {
    pub name: String,
    pub mixture: Vec<String>,
    pub suspect: [String; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Table1Scenario {
    pub title: Option<String>,
    /// Likelihood ratio reported by external software; used as given.
    pub external_lr: Rational,
    pub assumed_contributors: u32,
    pub loci: Vec<ReportLocus>,
}

/// Parse scenario JSON, reporting schema errors with their field path.
pub fn parse_scenario(text: &str) -> Result<Scenario> {
    let mut value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::schema("", e.to_string()))?;
    let object = value
        .as_object_mut()
        .ok_or_else(|| Error::schema("", "a scenario must be a JSON object"))?;
    let kind = match object.remove("kind") {
        Some(serde_json::Value::String(kind)) => kind,
        Some(_) => return Err(Error::schema("kind", "must be a string")),
        None => return Err(Error::schema("kind", "missing field")),
    };
    Ok(match kind.as_str() {
        "screening" => Scenario::Screening(typed(value)?),
        "lottery" => Scenario::Lottery(typed(value)?),
        "genotype-mixture" => Scenario::GenotypeMixture(typed(value)?),
        "ball-two" => Scenario::BallTwo(typed(value)?),
        "ball-k" => Scenario::BallK(typed(value)?),
        "table-1-report" => Scenario::Table1Report(typed(value)?),
        other => {
            return Err(Error::schema(
                "kind",
                format!("unknown kind `{other}`, expected one of {}", KINDS.join(", ")),
            ))
        }
    })
}

fn typed<T: de::DeserializeOwned>(value: serde_json::Value) -> Result<T> {
    serde_path_to_error::deserialize(value).map_err(|e| {
        let path = e.path().to_string();
        Error::schema(if path == "." { String::new() } else { path }, e.inner().to_string())
    })
}

impl Scenario {
    pub fn run(&self) -> Result<RenderedReport> {
        match self {
            Scenario::Screening(s) => s.run(),
            Scenario::Lottery(s) => s.run(),
            Scenario::GenotypeMixture(s) => s.run(),
            Scenario::BallTwo(s) => ball_two_report(
                s.title.as_deref(),
                s.n_positions,
                s.alphabet_size.unwrap_or(DEFAULT_ALPHABET),
                s.repeated_positions.unwrap_or(0),
                sig(s.sig_figs)?,
            ),
            Scenario::BallK(s) => {
                let ks = match &s.k {
                    KList::Values(v) => v.clone(),
                    KList::Ranges(text) => parse_k_list(text).map_err(|e| e.at("k"))?,
                };
                let freq = s.freq.as_ref().map(|f| f.0.clone()).unwrap_or_else(default_freq);
                contributor_table_report(
                    s.title.as_deref(),
                    &ks,
                    s.n_pots.unwrap_or(DEFAULT_POTS),
                    &freq,
                    sig(s.sig_figs)?,
                )
            }
            Scenario::Table1Report(s) => s.run(),
        }
    }
}

fn sig(sig_figs: Option<usize>) -> Result<usize> {
    match sig_figs {
        Some(0) => Err(Error::schema("sig_figs", "must be at least 1")),
        Some(n) => Ok(n),
        None => Ok(DEFAULT_SIG_FIGS),
    }
}

pub fn default_freq() -> BigRational {
    BigRational::new(1.into(), 10.into())
}

/// Expand `"1..10,15,20"` into `[1, 2, …, 10, 15, 20]`. Empty input gives
/// an empty list.
pub fn parse_k_list(text: &str) -> Result<Vec<u32>> {
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let bad = || Error::Validation(format!("`{part}` is not a k value or range"));
        match part.split_once("..") {
            Some((lo, hi)) => {
                let lo: u32 = lo.trim().parse().map_err(|_| bad())?;
                let hi: u32 = hi.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
                if lo > hi {
                    return Err(bad());
                }
                out.extend(lo..=hi);
            }
            None => out.push(part.parse().map_err(|_| bad())?),
        }
    }
    Ok(out)
}

fn analysis_rows(label: &str, r: &AnalysisResult, sig: usize) -> Vec<Cell> {
    vec![
        Cell::text(label),
        Cell::prob(&r.prior, sig),
        Cell::prob(&r.p_e_given_pros, sig),
        Cell::prob(&r.p_e_given_def, sig),
        Cell::ratio(&r.lr, sig),
        Cell::prob(&r.posterior, sig),
        Cell::text(r.direction.to_string()),
    ]
}

fn analysis_columns(defence: &str) -> Vec<String> {
    ["hypothesis", "prior", "P(E|H)", defence, "LR", "posterior", "direction"]
        .map(String::from)
        .to_vec()
}

impl ScreeningScenario {
    fn run(&self) -> Result<RenderedReport> {
        let sig = sig(self.sig_figs)?;
        let lr = likelihood_ratio(&self.p_e_given_h, &self.p_e_given_not_h)?;
        let posterior = posterior_from_prior(&self.prior, &self.p_e_given_h, &self.p_e_given_not_h)?;
        let via_odds = posterior_via_odds(&self.prior, &lr)?;
        debug_assert_eq!(posterior, via_odds);
        let direction = probative_direction(&self.prior, &posterior);
        let mut report = RenderedReport::new(self.title.as_deref().unwrap_or("Screening test"));
        report.assumptions.push("H and not H are exhaustive.".into());
        report.tables.push(Table {
            title: "Result".into(),
            columns: vec!["quantity".into(), "value".into()],
            rows: vec![
                vec![Cell::text("prior P(H)"), Cell::prob(&self.prior, sig)],
                vec![Cell::text("P(E|H)"), Cell::prob(&self.p_e_given_h, sig)],
                vec![Cell::text("P(E|not H)"), Cell::prob(&self.p_e_given_not_h, sig)],
                vec![Cell::text("LR"), Cell::ratio(&lr, sig)],
                vec![Cell::text("posterior P(H|E)"), Cell::prob(&posterior, sig)],
                vec![Cell::text("posterior via odds"), Cell::prob(&via_odds, sig)],
                vec![Cell::text("direction"), Cell::text(direction.to_string())],
            ],
        });
        report.caveats.push(crate::analysis::caveat(true, &lr, direction));
        Ok(report)
    }
}

impl LotteryScenario {
    fn space(&self) -> Result<OutcomeSpace> {
        let weighted = self
            .outcomes
            .iter()
            .filter(|o| matches!(o, OutcomeSpec::Weighted { .. }))
            .count();
        if weighted == 0 {
            let labels = self.outcomes.iter().map(|o| match o {
                OutcomeSpec::Label(l) => l.clone(),
                OutcomeSpec::Weighted { label, .. } => label.clone(),
            });
            return OutcomeSpace::uniform(labels);
        }
        if weighted != self.outcomes.len() {
            return Err(Error::schema("outcomes", "give a weight for every outcome or for none"));
        }
        OutcomeSpace::new(self.outcomes.iter().map(|o| match o {
            OutcomeSpec::Weighted { label, weight } => (label.clone(), weight.0.clone()),
            OutcomeSpec::Label(_) => unreachable!("all outcomes are weighted"),
        }))
    }

    fn run(&self) -> Result<RenderedReport> {
        let sig = sig(self.sig_figs)?;
        let space = self.space()?;
        let mut events = Vec::new();
        for (i, spec) in self.events.iter().enumerate() {
            if spec.name.starts_with('!') {
                return Err(Error::schema(
                    format!("events[{i}].name"),
                    "event names cannot start with `!`",
                ));
            }
            if events.iter().any(|(name, _)| name == &spec.name) {
                return Err(Error::schema(
                    format!("events[{i}].name"),
                    format!("duplicate event `{}`", spec.name),
                ));
            }
            let event = space
                .event(&spec.outcomes)
                .map_err(|e| e.at(&format!("events[{i}].outcomes")))?;
            events.push((spec.name.clone(), event));
        }
        let lookup = |name: &str, path: String| {
            let (negate, base) = match name.strip_prefix('!') {
                Some(rest) => (true, rest),
                None => (false, name),
            };
            let event = events
                .iter()
                .find(|(n, _)| n == base)
                .map(|(_, e)| e.clone())
                .ok_or_else(|| Error::schema(path, format!("unknown event `{base}`")))?;
            Ok::<_, Error>(if negate { space.complement(&event) } else { event })
        };
        let evidence = lookup(&self.evidence, "evidence".into())?;

        let mut report = RenderedReport::new(self.title.as_deref().unwrap_or("Lottery"));
        report
            .assumptions
            .push(format!("{} outcomes; evidence E = {}.", space.len(), self.evidence));
        report.tables.push(Table {
            title: "Events".into(),
            columns: vec!["event".into(), "outcomes".into(), "probability".into()],
            rows: events
                .iter()
                .map(|(name, e)| {
                    Ok(vec![
                        Cell::text(name),
                        Cell::text(space.describe(e)),
                        Cell::prob(&space.prob(e)?, sig),
                    ])
                })
                .collect::<Result<_>>()?,
        });

        let mut rows = Vec::new();
        for (i, c) in self.comparisons.iter().enumerate() {
            let pros = lookup(&c.prosecution, format!("comparisons[{i}].prosecution"))?;
            let def = lookup(&c.defence, format!("comparisons[{i}].defence"))?;
            let r = space.analyze_pair(&evidence, &pros, &def)?;
            let label = format!("{} vs {}", c.prosecution, c.defence);
            let mut row = analysis_rows(&label, &r, sig);
            row.push(Cell::text(if r.exhaustive { "yes" } else { "no" }));
            rows.push(row);
            report.caveats.push(format!("{label}: {}", r.caveat));
        }
        let mut columns = analysis_columns("P(E|Hd)");
        columns[0] = "comparison".into();
        columns.push("exhaustive".into());
        report.tables.push(Table {
            title: "Comparisons".into(),
            columns,
            rows,
        });
        Ok(report)
    }
}

fn alleles_at(list: &[String], path: &str) -> Result<AlleleSet> {
    let set: AlleleSet = list
        .iter()
        .map(|a| Allele::new(a.as_str()))
        .collect::<Result<_>>()
        .map_err(|e| e.at(path))?;
    if set.is_empty() {
        return Err(Error::schema(path, "no alleles given"));
    }
    Ok(set)
}

fn genotype_at(pair: &[String; 2], path: &str) -> Result<Genotype> {
    Genotype::parse(&pair[0], &pair[1]).map_err(|e| e.at(path))
}

fn join_alleles(set: &AlleleSet) -> String {
    set.iter().map(Allele::as_str).collect::<Vec<_>>().join(", ")
}

impl MixtureScenario {
    fn build(&self) -> Result<(MixtureProfile, Profile, GenotypeUniverse)> {
        if self.loci.is_empty() {
            return Err(Error::schema("loci", "at least one locus is required"));
        }
        let mut mixture = Vec::new();
        let mut suspect = Vec::new();
        let mut universe = Vec::new();
        for (i, locus) in self.loci.iter().enumerate() {
            let set = alleles_at(&locus.mixture, &format!("loci[{i}].mixture"))?;
            let g = genotype_at(&locus.suspect, &format!("loci[{i}].suspect"))?;
            let u = match &locus.universe {
                None => {
                    let mut alleles = set.clone();
                    alleles.extend(g.alleles().cloned());
                    LocusUniverse::from_alleles(&alleles)?
                }
                Some(entries) => locus_universe(entries, &format!("loci[{i}].universe"))?,
            };
            if u.frequency(&g).is_none() {
                return Err(Error::schema(
                    format!("loci[{i}].suspect"),
                    format!("suspect genotype {g} is not in the universe"),
                ));
            }
            mixture.push((locus.name.clone(), set));
            suspect.push((locus.name.clone(), g));
            universe.push((locus.name.clone(), u));
        }
        Ok((
            MixtureProfile::new(mixture)?,
            Profile { loci: suspect },
            GenotypeUniverse { loci: universe },
        ))
    }

    fn run(&self) -> Result<RenderedReport> {
        let sig = sig(self.sig_figs)?;
        let cap = self.max_enumeration.unwrap_or(DEFAULT_ENUMERATION_CAP);
        let (mixture, suspect, universe) = self.build()?;
        let voids = count_voids(&mixture, &suspect)?;

        let mut report = RenderedReport::new(self.title.as_deref().unwrap_or("Two-person mixture"));
        report.assumptions.push("Exactly two contributors.".into());
        report.assumptions.push(
            "Each unordered pair of contributor genotypes has weight proportional to the product of their frequencies."
                .into(),
        );
        if let Some(n) = self.population_size {
            report
                .assumptions
                .push(format!("The suspect is one of {n} equally likely candidates."));
        }

        let mut locus_rows = Vec::new();
        let mut h_prime_rows = Vec::new();
        let mut h_rows = Vec::new();
        for (i, ((name, set), (_, g))) in mixture.loci.iter().zip(&suspect.loci).enumerate() {
            let u = &universe.loci[i].1;
            let pairs = compatible_pairs(set, u);
            locus_rows.push(vec![
                Cell::text(name),
                Cell::text(join_alleles(set)),
                Cell::text(g.to_string()),
                Cell::text(if voids.loci.contains(name) { "yes" } else { "no" }),
                Cell::integer(u.len()),
                Cell::integer(pairs.len()),
            ]);
            let r = analyze_profile_in_mixture(set, g, u)?;
            h_prime_rows.push(analysis_rows(name, &r, sig));
            if let Some(n) = self.population_size {
                let r = analyze_suspect_is_contributor(set, g, u, n).map_err(|e| e.at("population_size"))?;
                h_rows.push(analysis_rows(name, &r, sig));
            }
        }
        report.tables.push(Table {
            title: "Loci".into(),
            columns: ["locus", "mixture", "suspect", "void", "genotypes", "compatible pairs"]
                .map(String::from)
                .to_vec(),
            rows: locus_rows,
        });
        if let [(name, set)] = &mixture.loci[..] {
            let pairs = compatible_pairs(set, &universe.loci[0].1);
            report.tables.push(Table {
                title: format!("Compatible pairs at {name}"),
                columns: vec!["pair".into(), "contains suspect genotype".into()],
                rows: pairs
                    .iter()
                    .map(|p| {
                        let has = p.contains(&suspect.loci[0].1);
                        vec![Cell::text(p.to_string()), Cell::text(if has { "yes" } else { "no" })]
                    })
                    .collect(),
            });
        }
        report.tables.push(Table {
            title: "A person with the suspect's genotype is a contributor (per locus)".into(),
            columns: analysis_columns("P(E|not H)"),
            rows: h_prime_rows,
        });
        if !h_rows.is_empty() {
            report.tables.push(Table {
                title: "The suspect is a contributor (per locus)".into(),
                columns: analysis_columns("P(E|not H)"),
                rows: h_rows,
            });
        }

        let total = combination_count(&mixture, &universe)?;
        let excluded = exclusion_count(&mixture, &suspect, &universe)?;
        let containing = containing_profile_count(&mixture, &suspect, &universe)?;
        let partial = &total - &excluded - &containing;
        report.tables.push(Table {
            title: "Two-person combinations across all loci".into(),
            columns: vec!["category".into(), "count".into()],
            rows: vec![
                vec![Cell::text("compatible with the mixture"), Cell::integer(&total)],
                vec![
                    Cell::text("one contributor has the suspect's profile"),
                    Cell::integer(&containing),
                ],
                vec![
                    Cell::text("suspect genotypes carried by others only"),
                    Cell::integer(&partial),
                ],
                vec![
                    Cell::text("neither contributor matches the suspect at any locus"),
                    Cell::integer(&excluded),
                ],
            ],
        });
        let listed = self.max_listed.unwrap_or(10);
        if listed > 0 {
            let combos = exclusion_combinations(&mixture, &suspect, &universe, cap)?;
            report.tables.push(Table {
                title: format!(
                    "Combinations excluding the suspect at every locus (first {} of {})",
                    listed.min(combos.len()),
                    combos.len()
                ),
                columns: vec!["contributor 1".into(), "contributor 2".into()],
                rows: combos
                    .iter()
                    .take(listed)
                    .map(|c| {
                        vec![
                            Cell::text(join_genotypes(&c.first)),
                            Cell::text(join_genotypes(&c.second)),
                        ]
                    })
                    .collect(),
            });
        }
        if total > BigUint::one() && excluded > BigUint::from(0u8) {
            report.caveats.push(
                "Every suspect allele can appear in the mixture even when neither contributor has the suspect's profile."
                    .into(),
            );
        }
        if mixture.loci.len() > 1 {
            report
                .caveats
                .push("Per-locus results treat each locus on its own; they are not combined across loci.".into());
        }
        report.caveats.push(PRIOR_NOTE.into());
        Ok(report)
    }
}

const PRIOR_NOTE: &str = "A likelihood ratio above 1 raises the probability of inclusion, but the resulting \
probability depends on the prior and can stay small.";

fn join_genotypes(gs: &[Genotype]) -> String {
    gs.iter().map(Genotype::to_string).collect::<Vec<_>>().join(" ")
}

fn locus_universe(entries: &[UniverseEntry], path: &str) -> Result<LocusUniverse> {
    let given = entries.iter().filter(|e| e.frequency.is_some()).count();
    let genotypes = entries
        .iter()
        .enumerate()
        .map(|(j, e)| genotype_at(&e.genotype, &format!("{path}[{j}].genotype")))
        .collect::<Result<Vec<_>>>()?;
    let universe = if given == 0 {
        LocusUniverse::uniform(genotypes)
    } else if given == entries.len() {
        LocusUniverse::new(
            genotypes
                .into_iter()
                .zip(entries)
                .map(|(g, e)| (g, e.frequency.clone().expect("checked").0))
                .collect(),
        )
    } else {
        return Err(Error::schema(path, "give a frequency for every genotype or for none"));
    };
    universe.map_err(|e| e.at(path))
}

/// Report for `ball two`.
pub fn ball_two_report(
    title: Option<&str>,
    n_positions: u32,
    alphabet_size: u32,
    repeated_positions: u32,
    sig: usize,
) -> Result<RenderedReport> {
    let mut report = RenderedReport::new(title.unwrap_or("Two-contributor ball mixture"));
    report.assumptions.push(format!(
        "Profiles of {n_positions} pots, each ball numbered from {alphabet_size} equally likely values."
    ));
    report
        .assumptions
        .push("Exactly two contributors, one of whom may be the suspect.".into());
    let pairs = mixture_pair_count(n_positions, repeated_positions).map_err(|e| e.at("repeated_positions"))?;
    let share = BigRational::new(1.into(), pairs.clone().into());
    report.tables.push(Table {
        title: "Profile pairs producing the mixture".into(),
        columns: vec![
            "repeated pots".into(),
            "pairs".into(),
            "share containing the suspect".into(),
        ],
        rows: vec![vec![
            Cell::integer(repeated_positions),
            Cell::integer(&pairs),
            Cell::rational(&share, sig),
        ]],
    });
    if repeated_positions == 0 {
        let r = two_contributor_analysis(n_positions, alphabet_size).map_err(|e| e.at("n_positions"))?;
        report.tables.push(Table {
            title: "Suspect is a contributor".into(),
            columns: vec!["quantity".into(), "value".into()],
            rows: vec![
                vec![Cell::text("prior"), Cell::prob(&r.prior_h, sig)],
                vec![Cell::text("P(E|H)"), Cell::prob(&r.p_e_given_h, sig)],
                vec![Cell::text("P(E|not H)"), Cell::prob(&r.p_e_given_not_h, sig)],
                vec![Cell::text("LR"), Cell::ratio(&r.lr, sig)],
                vec![Cell::text("posterior"), Cell::prob(&r.posterior_h, sig)],
            ],
        });
        report.caveats.push(
            "The likelihood ratio grows with the number of pots while the posterior halves with each added pot.".into(),
        );
    }
    Ok(report)
}

/// Report for `ball single`.
pub fn ball_single_report(
    title: Option<&str>,
    n_positions: u32,
    alphabet_size: u32,
    population_size: u64,
    sig: usize,
) -> Result<RenderedReport> {
    let r = single_profile_analysis(n_positions, alphabet_size, population_size)?;
    let mut report = RenderedReport::new(title.unwrap_or("Single-profile ball match"));
    report.assumptions.push(format!(
        "Profiles of {n_positions} pots over {alphabet_size} values; the suspect is one of {population_size} candidates."
    ));
    report.tables.push(Table {
        title: "Suspect is the source".into(),
        columns: analysis_columns("P(E|not H)"),
        rows: vec![analysis_rows("H", &r, sig)],
    });
    report.caveats.push(r.caveat.clone());
    Ok(report)
}

/// Report for `ball table`.
pub fn contributor_table_report(
    title: Option<&str>,
    k_values: &[u32],
    n_pots: u32,
    freq: &BigRational,
    sig: usize,
) -> Result<RenderedReport> {
    let rows = contributor_table(k_values, n_pots, freq)?;
    let mut report = RenderedReport::new(title.unwrap_or("Suspect plus k-1 unknowns against k unknowns"));
    report.assumptions.push(format!(
        "{n_pots} pots; each pot shows one ball from a randomly chosen contributor; an unknown matches the \
         suspect's ball with probability {}.",
        crate::exact::rational_string(freq)
    ));
    report.tables.push(Table {
        title: "Likelihood ratio by number of contributors".into(),
        columns: vec!["k".into(), "P(E|H1)".into(), "P(E|H2)".into(), "LR".into()],
        rows: rows
            .iter()
            .map(|r| {
                vec![
                    Cell::integer(r.k),
                    Cell::prob(&r.p_e_h1, sig),
                    Cell::prob(&r.p_e_h2, sig),
                    Cell::ratio(&r.lr, sig),
                ]
            })
            .collect(),
    });
    if rows.len() > 1 {
        report
            .caveats
            .push("At most one contributor count is true, yet every row reports a likelihood ratio above 1.".into());
    }
    Ok(report)
}

impl Table1Scenario {
    fn run(&self) -> Result<RenderedReport> {
        if self.external_lr.0 < BigRational::from_integer(0.into()) {
            return Err(Error::schema("external_lr", "must not be negative"));
        }
        if self.assumed_contributors == 0 {
            return Err(Error::schema("assumed_contributors", "must be at least 1"));
        }
        let mut mixture = Vec::new();
        let mut suspect = Vec::new();
        for (i, locus) in self.loci.iter().enumerate() {
            mixture.push((
                locus.name.clone(),
                alleles_at(&locus.mixture, &format!("loci[{i}].mixture"))?,
            ));
            suspect.push((
                locus.name.clone(),
                genotype_at(&locus.suspect, &format!("loci[{i}].suspect"))?,
            ));
        }
        let mixture = MixtureProfile::new(mixture)?;
        let suspect = Profile { loci: suspect };
        let voids = count_voids(&mixture, &suspect)?;

        let mut report = RenderedReport::new(self.title.as_deref().unwrap_or("Mixture report"));
        report.assumptions.push(format!(
            "Assumed number of contributors: {}.",
            self.assumed_contributors
        ));
        report
            .assumptions
            .push("The likelihood ratio was computed by external software and is used as given.".into());
        report.tables.push(Table {
            title: "Loci".into(),
            columns: vec!["locus".into(), "mixture".into(), "suspect".into(), "void".into()],
            rows: mixture
                .loci
                .iter()
                .zip(&suspect.loci)
                .map(|((name, set), (_, g))| {
                    vec![
                        Cell::text(name),
                        Cell::text(join_alleles(set)),
                        Cell::text(g.to_string()),
                        Cell::text(if voids.loci.contains(name) { "yes" } else { "no" }),
                    ]
                })
                .collect(),
        });
        let lr = crate::exact::Ratio::Finite(self.external_lr.0.clone());
        report.tables.push(Table {
            title: "Summary".into(),
            columns: vec!["quantity".into(), "value".into()],
            rows: vec![
                vec![
                    Cell::text("likelihood ratio (external)"),
                    Cell::ratio(&lr, DEFAULT_SIG_FIGS),
                ],
                vec![Cell::text("void loci"), Cell::integer(voids.count)],
            ],
        });
        report.caveats.push(NON_EXHAUSTIVE_WARNING.into());
        let input = StatementInput {
            lr,
            exhaustive: false,
            direction: None,
        };
        let assumptions = StatementAssumptions {
            assumed_contributors: Some(self.assumed_contributors),
            void_count: Some(voids.count),
        };
        report.statement = Some(render_expert_report(&input, &assumptions));
        Ok(report)
    }
}
