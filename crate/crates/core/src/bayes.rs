//! Bayes' theorem in probability and odds form.

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{Odds, Prob, ProbativeDirection, Ratio};

/// `P(E|H) / P(E|H')`, infinite when only the alternative likelihood is 0.
pub fn likelihood_ratio(p_e_given_h: &Prob, p_e_given_alt: &Prob) -> Result<Ratio> {
    match (p_e_given_h.is_zero(), p_e_given_alt.is_zero()) {
        (true, true) => Err(Error::IndeterminateLr),
        (false, true) => Ok(Ratio::Infinite),
        _ => Ok(Ratio::Finite(p_e_given_h.value() / p_e_given_alt.value())),
    }
}

/// `P(H|E)` from the prior and the likelihoods under `H` and `not H`.
pub fn posterior_from_prior(prior: &Prob, p_e_given_h: &Prob, p_e_given_not_h: &Prob) -> Result<Prob> {
    let joint_h = p_e_given_h.times(prior);
    let joint_not_h = p_e_given_not_h.times(&prior.complement());
    let evidence = joint_h.value() + joint_not_h.value();
    if evidence.is_zero() {
        return Err(Error::ImpossibleEvidence);
    }
    Prob::from_rational(joint_h.value() / evidence)
}

/// Posterior odds = likelihood ratio × prior odds.
pub fn update_odds(prior: &Odds, lr: &Ratio) -> Result<Odds> {
    match lr {
        Ratio::Infinite => {
            if prior.favour().is_zero() {
                return Err(Error::Validation(
                    "an infinite likelihood ratio cannot update zero prior odds".into(),
                ));
            }
            Odds::new(1u8, 0u8)
        }
        Ratio::Finite(factor) => {
            if factor.is_zero() && prior.against().is_zero() {
                return Err(Error::Validation(
                    "a zero likelihood ratio cannot update certain prior odds".into(),
                ));
            }
            Ok(prior.scaled(factor))
        }
    }
}

/// Odds `a:b` as the probability `a/(a+b)`.
pub fn odds_to_prob(odds: &Odds) -> Prob {
    let total: BigUint = odds.favour() + odds.against();
    let value = BigRational::new(odds.favour().clone().into(), total.into());
    Prob::from_rational(value).expect("a/(a+b) lies in [0,1]")
}

/// Probability `p` as the odds `p : 1-p`.
pub fn prob_to_odds(p: &Prob) -> Odds {
    let value = p.value();
    let complement = BigRational::one() - value;
    // p = n/d gives n : d-n.
    let n = value.numer().magnitude().clone();
    let d = value.denom().magnitude().clone();
    debug_assert_eq!(complement.denom().magnitude(), &d);
    Odds::new(n.clone(), d - n).expect("a probability has a non-zero denominator")
}

pub fn probative_direction(prior: &Prob, posterior: &Prob) -> ProbativeDirection {
    match posterior.cmp(prior) {
        Ordering::Greater => ProbativeDirection::Supports,
        Ordering::Equal => ProbativeDirection::Neutral,
        Ordering::Less => ProbativeDirection::Undermines,
    }
}

/// Posterior via the odds form: `odds_to_prob(update_odds(prob_to_odds(prior), lr))`.
pub fn posterior_via_odds(prior: &Prob, lr: &Ratio) -> Result<Prob> {
    Ok(odds_to_prob(&update_odds(&prob_to_odds(prior), lr)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: i64, d: i64) -> Prob {
        Prob::new(n, d).unwrap()
    }

    fn odds(a: u64, b: u64) -> Odds {
        Odds::new(a, b).unwrap()
    }

    #[test]
    fn screening_lr() {
        let lr = likelihood_ratio(&p(99, 100), &p(2, 100)).unwrap();
        assert_eq!(lr.to_string(), "99/2");
        assert_eq!(lr.to_f64(), 49.5);
    }

    #[test]
    fn identical_likelihoods_give_unit_lr() {
        for q in [p(1, 3), p(1, 1), p(7, 1000)] {
            assert_eq!(likelihood_ratio(&q, &q).unwrap().cmp_one(), Ordering::Equal);
        }
    }

    #[test]
    fn single_locus_lr() {
        assert_eq!(likelihood_ratio(&p(1, 10), &p(2, 45)).unwrap().to_string(), "9/4");
    }

    #[test]
    fn zero_likelihoods() {
        assert_eq!(likelihood_ratio(&p(0, 1), &p(0, 1)), Err(Error::IndeterminateLr));
        assert_eq!(likelihood_ratio(&p(1, 2), &p(0, 1)), Ok(Ratio::Infinite));
        assert_eq!(likelihood_ratio(&p(0, 1), &p(1, 2)).unwrap().to_string(), "0/1");
    }

    #[test]
    fn screening_posterior() {
        let post = posterior_from_prior(&p(1, 200), &p(1, 1), &p(2, 100)).unwrap();
        assert_eq!(post, p(100, 498));
    }

    #[test]
    fn symmetric_likelihoods_keep_even_prior() {
        assert_eq!(posterior_from_prior(&p(1, 2), &p(3, 7), &p(3, 7)).unwrap(), p(1, 2));
    }

    #[test]
    fn certain_prior_stays_certain() {
        assert_eq!(posterior_from_prior(&p(1, 1), &p(1, 9), &p(4, 5)).unwrap(), p(1, 1));
    }

    #[test]
    fn impossible_evidence() {
        assert_eq!(
            posterior_from_prior(&p(1, 2), &p(0, 1), &p(0, 1)),
            Err(Error::ImpossibleEvidence)
        );
        assert_eq!(
            posterior_from_prior(&p(1, 1), &p(0, 1), &p(1, 2)),
            Err(Error::ImpossibleEvidence)
        );
    }

    #[test]
    fn odds_updates() {
        let lr = Ratio::Finite(crate::exact::ratio_of(9, 4));
        assert_eq!(update_odds(&odds(2, 9), &lr).unwrap(), odds(1, 2));
        let lr = Ratio::Finite(crate::exact::ratio_of(997, 6));
        assert_eq!(update_odds(&odds(2, 997), &lr).unwrap(), odds(1, 3));
        let one = Ratio::Finite(BigRational::one());
        assert_eq!(update_odds(&odds(5, 8), &one).unwrap(), odds(5, 8));
        assert_eq!(update_odds(&odds(3, 7), &Ratio::Infinite).unwrap(), odds(1, 0));
        assert!(update_odds(&odds(0, 1), &Ratio::Infinite).is_err());
    }

    #[test]
    fn odds_prob_conversions() {
        assert_eq!(odds_to_prob(&odds(1, 3)), p(1, 4));
        assert_eq!(prob_to_odds(&p(2, 11)), odds(2, 9));
        assert_eq!(odds_to_prob(&odds(1, 1)), p(1, 2));
        assert_eq!(prob_to_odds(&p(0, 1)), odds(0, 1));
        assert_eq!(prob_to_odds(&p(1, 1)), odds(1, 0));
    }

    #[test]
    fn directions() {
        assert_eq!(probative_direction(&p(3, 10), &p(2, 7)), ProbativeDirection::Undermines);
        assert_eq!(probative_direction(&p(3, 10), &p(1, 2)), ProbativeDirection::Supports);
        assert_eq!(probative_direction(&p(3, 10), &p(3, 10)), ProbativeDirection::Neutral);
    }
}
