//! Corrected wording for an expert's likelihood-ratio statement.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::analysis::AnalysisResult;
use crate::display::{decimal, Rounded, DEFAULT_SIG_FIGS};
use crate::exact::{ProbativeDirection, Ratio};

/// What the statement is allowed to take for granted.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct StatementAssumptions {
    /// Number of contributors the LR was computed under, if fixed.
    pub assumed_contributors: Option<u32>,
    /// Loci where suspect alleles are absent from the mixture.
    pub void_count: Option<usize>,
}

/// The numbers a statement is built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatementInput {
    pub lr: Ratio,
    pub exhaustive: bool,
    pub direction: Option<ProbativeDirection>,
}

impl From<&AnalysisResult> for StatementInput {
    fn from(result: &AnalysisResult) -> Self {
        StatementInput {
            lr: result.lr.clone(),
            exhaustive: result.exhaustive,
            direction: Some(result.direction),
        }
    }
}

pub const CONTRIBUTOR_COUNT_CAVEAT: &str = "The number of contributors is an assumption, not a \
finding. Under a different number of contributors the suspect could be excluded altogether.";

pub const RELATEDNESS_CAVEAT: &str = "The alternative considers only people unrelated to the \
suspect. A relative of the suspect could explain the results as well or better.";

pub const PRIOR_CAVEAT: &str = "Even with the number of contributors settled and relatives ruled \
out, the probability that the suspect is a contributor can remain low unless other evidence \
links the suspect to the sample.";

pub const NON_EXHAUSTIVE_WARNING: &str = "Because the defence hypothesis is not the negation of \
the prosecution hypothesis, this likelihood ratio may not provide support that the prosecution \
hypothesis is more likely to be true.";

/// LR for prose: `4×10^6`, `166`, `inf`.
pub fn lr_phrase(lr: &Ratio) -> String {
    match lr {
        Ratio::Infinite => "infinitely many".into(),
        Ratio::Finite(value) => {
            let rounded = Rounded::new(value, DEFAULT_SIG_FIGS);
            if rounded.exponent() >= 4 {
                rounded.times_ten(true)
            } else {
                decimal(value, DEFAULT_SIG_FIGS)
            }
        }
    }
}

/// Deterministic statement text. Non-exhaustive hypotheses get the
/// contributor-count and relatedness caveats; the prior caveat is always
/// present.
pub fn render_expert_report(input: &StatementInput, assumptions: &StatementAssumptions) -> String {
    let lr = lr_phrase(&input.lr);
    let mut text = String::new();
    if input.exhaustive {
        let _ = write!(
            text,
            "The DNA results are {lr} times more likely if the suspect is a contributor than if \
             the suspect is not a contributor."
        );
    } else {
        match assumptions.assumed_contributors {
            Some(k) => {
                let _ = write!(
                    text,
                    "Assuming exactly {k} contributors, the DNA results are {lr} times more likely \
                     if the suspect and {} unknown unrelated people are the contributors than if \
                     {k} unknown unrelated people are.",
                    k.saturating_sub(1)
                );
            }
            None => {
                let _ = write!(
                    text,
                    "The DNA results are {lr} times more likely if the suspect is a contributor \
                     than under the stated alternative."
                );
            }
        }
        text.push('\n');
        text.push_str(CONTRIBUTOR_COUNT_CAVEAT);
        text.push('\n');
        text.push_str(RELATEDNESS_CAVEAT);
        if let Some(voids) = assumptions.void_count.filter(|&v| v > 0) {
            let loci = if voids == 1 { "locus" } else { "loci" };
            let _ = write!(
                text,
                " The suspect has alleles missing from the mixture at {voids} {loci}, which makes \
                 this more plausible."
            );
        }
        text.push('\n');
        text.push_str(NON_EXHAUSTIVE_WARNING);
        if input.direction == Some(ProbativeDirection::Undermines) {
            text.push_str(" Here the evidence in fact lowers that probability.");
        }
    }
    text.push('\n');
    text.push_str(PRIOR_CAVEAT);
    text
}
