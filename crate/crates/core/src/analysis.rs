use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::bayes::{likelihood_ratio, posterior_via_odds, probative_direction};
use crate::error::Result;
use crate::exact::{Prob, ProbativeDirection, Ratio};

/// Outcome of weighing evidence for a prosecution hypothesis against a
/// defence hypothesis.
///
/// `prior` and `posterior` always refer to the prosecution hypothesis
/// against the whole outcome space, whichever defence hypothesis was used
/// for the likelihood ratio.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisResult {
    pub p_e_given_pros: Prob,
    pub p_e_given_def: Prob,
    pub lr: Ratio,
    pub prior: Prob,
    pub posterior: Prob,
    pub exhaustive: bool,
    pub direction: ProbativeDirection,
    pub caveat: String,
}

impl AnalysisResult {
    /// Result for a hypothesis tested against its own negation; the
    /// posterior comes from the odds form of Bayes' theorem.
    pub fn against_negation(prior: Prob, p_e_given_h: Prob, p_e_given_not_h: Prob) -> Result<Self> {
        let lr = likelihood_ratio(&p_e_given_h, &p_e_given_not_h)?;
        let posterior = posterior_via_odds(&prior, &lr)?;
        let direction = probative_direction(&prior, &posterior);
        Ok(AnalysisResult {
            caveat: caveat(true, &lr, direction),
            p_e_given_pros: p_e_given_h,
            p_e_given_def: p_e_given_not_h,
            lr,
            prior,
            posterior,
            exhaustive: true,
            direction,
        })
    }
}

/// Caveat text, a pure function of exhaustivity, LR and direction.
pub fn caveat(exhaustive: bool, lr: &Ratio, direction: ProbativeDirection) -> String {
    if exhaustive {
        let effect = match direction {
            ProbativeDirection::Supports => "raises",
            ProbativeDirection::Neutral => "leaves unchanged",
            ProbativeDirection::Undermines => "lowers",
        };
        return format!(
            "The defence hypothesis is the negation of the prosecution hypothesis, so the \
             likelihood ratio measures probative value: the evidence {effect} the probability \
             of the prosecution hypothesis. The size of that probability still depends on the prior."
        );
    }
    let mut text = String::from(
        "The defence hypothesis is not the negation of the prosecution hypothesis, so the \
         likelihood ratio only compares these two alternatives. It may not provide support \
         that the prosecution hypothesis is more likely to be true.",
    );
    let lr_side = match lr.cmp_one() {
        Ordering::Greater => "above 1",
        Ordering::Equal => "equal to 1",
        Ordering::Less => "below 1",
    };
    let effect = match direction {
        ProbativeDirection::Supports => "raises",
        ProbativeDirection::Neutral => "leaves unchanged",
        ProbativeDirection::Undermines => "lowers",
    };
    let consistent = matches!(
        (lr.cmp_one(), direction),
        (Ordering::Greater, ProbativeDirection::Supports)
            | (Ordering::Equal, ProbativeDirection::Neutral)
            | (Ordering::Less, ProbativeDirection::Undermines)
    );
    if !consistent {
        text.push_str(&format!(
            " Here the likelihood ratio is {lr_side}, yet the evidence {effect} the probability \
             of the prosecution hypothesis."
        ));
    }
    text
}
