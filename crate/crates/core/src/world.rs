//! Finite outcome spaces with hypotheses and evidence as events.
//!
//! This is the generic machinery for comparing a prosecution hypothesis
//! with an arbitrary (possibly cherry-picked) defence hypothesis and seeing
//! what the evidence actually does to the prosecution hypothesis.

use std::collections::{BTreeSet, HashMap};

use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::analysis::{caveat, AnalysisResult};
use crate::bayes::{likelihood_ratio, probative_direction};
use crate::error::{Error, Result};
use crate::exact::{rational_string, Prob};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutcomeSpace {
    labels: Vec<String>,
    weights: Vec<BigRational>,
    index: HashMap<String, usize>,
}

/// A subset of an outcome space, stored as outcome indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Event {
    members: BTreeSet<usize>,
}

impl OutcomeSpace {
    pub fn new<L: Into<String>>(outcomes: impl IntoIterator<Item = (L, BigRational)>) -> Result<Self> {
        let mut labels = Vec::new();
        let mut weights = Vec::new();
        let mut index = HashMap::new();
        for (position, (label, weight)) in outcomes.into_iter().enumerate() {
            let label = label.into();
            if weight.is_negative() {
                return Err(Error::schema(
                    format!("outcomes[{position}].weight"),
                    format!("negative weight {}", rational_string(&weight)),
                ));
            }
            if index.insert(label.clone(), position).is_some() {
                return Err(Error::schema(
                    format!("outcomes[{position}].label"),
                    format!("duplicate label `{label}`"),
                ));
            }
            labels.push(label);
            weights.push(weight);
        }
        if labels.is_empty() {
            return Err(Error::schema("outcomes", "outcome space is empty"));
        }
        let total: BigRational = weights.iter().sum();
        if !total.is_one() {
            return Err(Error::schema(
                "outcomes",
                format!("weights sum to {}, not 1", rational_string(&total)),
            ));
        }
        Ok(OutcomeSpace { labels, weights, index })
    }

    /// Equally weighted outcomes.
    pub fn uniform<L: Into<String>>(labels: impl IntoIterator<Item = L>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let n = labels.len().max(1);
        let weight = BigRational::new(1.into(), n.into());
        Self::new(labels.into_iter().map(|l| (l, weight.clone())))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn event<S: AsRef<str>>(&self, labels: impl IntoIterator<Item = S>) -> Result<Event> {
        let mut members = BTreeSet::new();
        for label in labels {
            let label = label.as_ref();
            let &i = self
                .index
                .get(label)
                .ok_or_else(|| Error::schema("", format!("unknown outcome label `{label}`")))?;
            members.insert(i);
        }
        Ok(Event { members })
    }

    pub fn everything(&self) -> Event {
        Event {
            members: (0..self.len()).collect(),
        }
    }

    pub fn complement(&self, e: &Event) -> Event {
        Event {
            members: (0..self.len()).filter(|i| !e.members.contains(i)).collect(),
        }
    }

    fn check(&self, e: &Event) -> Result<()> {
        match e.members.iter().find(|&&i| i >= self.len()) {
            Some(i) => Err(Error::schema(
                "",
                format!("event refers to outcome #{i} outside the space"),
            )),
            None => Ok(()),
        }
    }

    pub fn prob(&self, e: &Event) -> Result<Prob> {
        self.check(e)?;
        let total: BigRational = e.members.iter().map(|&i| &self.weights[i]).sum();
        Prob::from_rational(total)
    }

    /// `P(e | h) = P(e ∩ h) / P(h)`.
    pub fn conditional(&self, e: &Event, h: &Event) -> Result<Prob> {
        let p_h = self.prob(h)?;
        if p_h.is_zero() {
            return Err(Error::ConditioningOnNull(self.describe(h)));
        }
        let joint = self.prob(&e.intersect(h))?;
        Prob::from_rational(joint.value() / p_h.value())
    }

    /// Weigh evidence `e` for `h_pros` against `h_def`.
    ///
    /// The likelihood ratio uses `h_def`; prior and posterior are those of
    /// `h_pros` against the whole space.
    pub fn analyze_pair(&self, e: &Event, h_pros: &Event, h_def: &Event) -> Result<AnalysisResult> {
        self.check(e)?;
        self.check(h_pros)?;
        self.check(h_def)?;
        if !h_pros.is_disjoint(h_def) {
            return Err(Error::HypothesisOverlap(self.describe(h_pros), self.describe(h_def)));
        }
        let p_e = self.prob(e)?;
        if p_e.is_zero() {
            return Err(Error::ImpossibleEvidence);
        }
        let p_e_given_pros = self.conditional(e, h_pros)?;
        let p_e_given_def = self.conditional(e, h_def)?;
        let lr = likelihood_ratio(&p_e_given_pros, &p_e_given_def)?;
        let prior = self.prob(h_pros)?;
        let joint = self.prob(&e.intersect(h_pros))?;
        let posterior = Prob::from_rational(joint.value() / p_e.value())?;
        let exhaustive = h_pros.union(h_def) == self.everything();
        let direction = probative_direction(&prior, &posterior);
        Ok(AnalysisResult {
            caveat: caveat(exhaustive, &lr, direction),
            p_e_given_pros,
            p_e_given_def,
            lr,
            prior,
            posterior,
            exhaustive,
            direction,
        })
    }

    /// `{a, b, c}` label listing used in error messages.
    pub fn describe(&self, e: &Event) -> String {
        let names: Vec<&str> = e
            .members
            .iter()
            .filter_map(|&i| self.labels.get(i).map(String::as_str))
            .collect();
        format!("{{{}}}", names.join(", "))
    }
}

impl Event {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn intersect(&self, other: &Event) -> Event {
        Event {
            members: self.members.intersection(&other.members).copied().collect(),
        }
    }

    pub fn union(&self, other: &Event) -> Event {
        Event {
            members: self.members.union(&other.members).copied().collect(),
        }
    }

    pub fn is_disjoint(&self, other: &Event) -> bool {
        self.members.is_disjoint(&other.members)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{ProbativeDirection, Ratio};

    fn lottery() -> OutcomeSpace {
        OutcomeSpace::uniform((1..=10).map(|i| i.to_string())).unwrap()
    }

    fn p(n: i64, d: i64) -> Prob {
        Prob::new(n, d).unwrap()
    }

    fn ev(space: &OutcomeSpace, labels: &[u32]) -> Event {
        space.event(labels.iter().map(|l| l.to_string())).unwrap()
    }

    #[test]
    fn event_probabilities() {
        let s = lottery();
        assert_eq!(s.prob(&ev(&s, &[4, 5, 6, 7, 8, 9, 10])).unwrap(), p(7, 10));
        assert_eq!(s.prob(&s.everything()).unwrap(), p(1, 1));
        assert_eq!(s.prob(&ev(&s, &[3, 4, 5])).unwrap(), p(3, 10));
    }

    #[test]
    fn unknown_label_is_schema_error() {
        let s = lottery();
        assert!(matches!(s.event(["11"]), Err(Error::Schema { .. })));
    }

    #[test]
    fn space_validation() {
        let half = BigRational::new(1.into(), 2.into());
        assert!(OutcomeSpace::new([("a", half.clone())]).is_err());
        assert!(OutcomeSpace::new([("a", half.clone()), ("a", half.clone())]).is_err());
        assert!(OutcomeSpace::new(Vec::<(String, BigRational)>::new()).is_err());
        let neg = -half.clone();
        assert!(OutcomeSpace::new([("a", neg), ("b", half.clone() * BigRational::from_integer(3.into()))]).is_err());
    }

    #[test]
    fn conditionals() {
        let s = lottery();
        let e = ev(&s, &[4, 5, 6, 7, 8, 9, 10]);
        let joe = ev(&s, &[3, 4, 5]);
        assert_eq!(s.conditional(&e, &joe).unwrap(), p(2, 3));
        assert_eq!(s.conditional(&e, &s.complement(&joe)).unwrap(), p(5, 7));
        assert_eq!(s.conditional(&joe, &joe).unwrap(), p(1, 1));
        assert!(matches!(
            s.conditional(&e, &Event::default()),
            Err(Error::ConditioningOnNull(_))
        ));
    }

    #[test]
    fn cherry_picked_prosecution_alternative() {
        let s = lottery();
        let e = ev(&s, &[4, 5, 6, 7, 8, 9, 10]);
        let joe = ev(&s, &[3, 4, 5]);
        let jane = ev(&s, &[1, 6]);
        let r = s.analyze_pair(&e, &joe, &jane).unwrap();
        assert_eq!(r.lr.to_string(), "4/3");
        assert!(!r.exhaustive);
        assert_eq!(r.posterior, p(2, 7));
        assert_eq!(r.direction, ProbativeDirection::Undermines);
        assert!(r.caveat.contains("may not provide support"));
        assert!(r.caveat.contains("above 1, yet the evidence lowers"));

        let r = s.analyze_pair(&e, &joe, &s.complement(&joe)).unwrap();
        assert_eq!(r.lr.to_string(), "14/15");
        assert!(r.exhaustive);
        assert_eq!(r.direction, ProbativeDirection::Undermines);
    }

    #[test]
    fn cherry_picked_defence_alternative() {
        let s = lottery();
        let e = ev(&s, &[1, 2, 3, 4, 5, 6]);
        let joe = ev(&s, &[3, 4, 5]);
        let janet = ev(&s, &[1, 2, 6]);
        let r = s.analyze_pair(&e, &joe, &janet).unwrap();
        assert_eq!(r.lr, Ratio::Finite(BigRational::one()));
        assert_eq!(r.posterior, p(1, 2));
        assert_eq!(r.direction, ProbativeDirection::Supports);
        let r = s.analyze_pair(&e, &joe, &s.complement(&joe)).unwrap();
        assert_eq!(r.lr.to_string(), "7/3");
    }

    #[test]
    fn overlapping_hypotheses_rejected() {
        let s = lottery();
        let e = ev(&s, &[1, 2]);
        let a = ev(&s, &[1, 2, 3]);
        let b = ev(&s, &[3, 4]);
        assert!(matches!(s.analyze_pair(&e, &a, &b), Err(Error::HypothesisOverlap(..))));
    }

    #[test]
    fn impossible_evidence_rejected() {
        let s = lottery();
        let a = ev(&s, &[1]);
        let b = ev(&s, &[2]);
        assert_eq!(
            s.analyze_pair(&Event::default(), &a, &b),
            Err(Error::ImpossibleEvidence)
        );
    }
}
