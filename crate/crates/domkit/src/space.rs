//! Outcome spaces, events, credence functions, probability weights, and the
//! arctan metric on extended score vectors.
//!
//! A credence function assigns an arbitrary finite real to every event
//! (subset of outcomes); it need not be coherent. Probability weights are a
//! point of the simplex and expand to the additive credence they induce.

use crate::error::{Error, Result};

/// Hard cap on the number of outcomes. Credence storage is a dense
/// `2^n`-length array, so desk-scale instances only.
pub const MAX_OUTCOMES: usize = 12;

/// Acceptance gate for probability-weight construction; accepted weights are
/// renormalized afterwards.
pub const WEIGHT_TOLERANCE: f64 = 1e-9;

/// A finite, ordered set of mutually exclusive outcomes.
///
/// The ordering is fixed for the lifetime of a computation: index `i` names
/// outcome `ω_i` everywhere (score vectors, weights, event masks).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutcomeSpace {
    labels: Vec<String>,
}

impl OutcomeSpace {
    pub fn new<S: Into<String>>(labels: Vec<S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::InvalidSpace("need at least one outcome".into()));
        }
        if labels.len() > MAX_OUTCOMES {
            return Err(Error::InvalidSpace(format!(
                "{} outcomes exceeds the cap of {MAX_OUTCOMES}",
                labels.len()
            )));
        }
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() {
                return Err(Error::InvalidSpace(format!("outcome {i} has an empty label")));
            }
            if l.contains(',') {
                // Event keys are comma-joined label lists; a comma inside a
                // label would make keys ambiguous.
                return Err(Error::InvalidSpace(format!("label {l:?} contains a comma")));
            }
        }
        for i in 1..labels.len() {
            if labels[..i].contains(&labels[i]) {
                return Err(Error::InvalidSpace(format!("duplicate label {:?}", labels[i])));
            }
        }
        Ok(Self { labels })
    }

    /// Labels `w1..wN`, the default naming used by the CLI.
    pub fn with_default_labels(n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| format!("w{i}")).collect::<Vec<_>>())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Number of events, `2^n`.
    pub fn num_events(&self) -> usize {
        1usize << self.labels.len()
    }

    pub fn events(&self) -> impl Iterator<Item = Event> {
        (0..self.num_events() as u32).map(Event)
    }

    pub fn full_event(&self) -> Event {
        Event((self.num_events() - 1) as u32)
    }

    /// Canonical key of an event: member labels comma-joined in space order;
    /// empty string for the empty event.
    pub fn event_key(&self, event: Event) -> String {
        let mut parts = Vec::new();
        for (i, l) in self.labels.iter().enumerate() {
            if event.contains(i) {
                parts.push(l.as_str());
            }
        }
        parts.join(",")
    }

    /// Parses a canonical event key. The key must list member labels in
    /// space order with no repeats; anything else is rejected.
    pub fn parse_event_key(&self, key: &str) -> Result<Event> {
        if key.is_empty() {
            return Ok(Event(0));
        }
        let mut mask = 0u32;
        let mut last: Option<usize> = None;
        for part in key.split(',') {
            let idx = self
                .labels
                .iter()
                .position(|l| l == part)
                .ok_or_else(|| Error::Parse(format!("unknown outcome label {part:?}")))?;
            if let Some(prev) = last {
                if idx <= prev {
                    return Err(Error::Parse(format!(
                        "event key {key:?} is not in space order"
                    )));
                }
            }
            last = Some(idx);
            mask |= 1 << idx;
        }
        Ok(Event(mask))
    }
}

/// A subset of outcomes, encoded as a bitmask over outcome indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Event(pub u32);

impl Event {
    pub const EMPTY: Event = Event(0);

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn contains(self, outcome: usize) -> bool {
        self.0 >> outcome & 1 == 1
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A real value for every event of an outcome space, stored densely and
/// indexed by event mask. Values may be negative or exceed 1; they must be
/// finite.
#[derive(Debug, Clone, PartialEq)]
pub struct CredenceFunction {
    values: Vec<f64>,
}

impl CredenceFunction {
    pub fn new(space: &OutcomeSpace, values: Vec<f64>) -> Result<Self> {
        if values.len() != space.num_events() {
            return Err(Error::DimensionMismatch {
                expected: space.num_events(),
                got: values.len(),
            });
        }
        for (mask, v) in values.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::InvalidCredence(format!(
                    "value {v} at event {{{}}} is not a finite real",
                    space.event_key(Event(mask as u32))
                )));
            }
        }
        Ok(Self { values })
    }

    pub fn get(&self, event: Event) -> f64 {
        self.values[event.index()]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn num_events(&self) -> usize {
        self.values.len()
    }
}

/// A point of the simplex `T`: nonnegative weights summing to one.
///
/// Construction accepts a sum within `tol` of one (and clamps stray
/// `-tol`-level negatives to zero), then renormalizes so the stored weights
/// sum to one up to machine rounding.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityWeights {
    v: Vec<f64>,
}

impl ProbabilityWeights {
    pub fn new(v: Vec<f64>) -> Result<Self> {
        Self::with_tolerance(v, WEIGHT_TOLERANCE)
    }

    pub fn with_tolerance(mut v: Vec<f64>, tol: f64) -> Result<Self> {
        if v.is_empty() {
            return Err(Error::InvalidWeights("empty weight vector".into()));
        }
        let mut sum = 0.0;
        for (i, w) in v.iter_mut().enumerate() {
            if !w.is_finite() {
                return Err(Error::InvalidWeights(format!("weight {i} is {w}")));
            }
            if *w < -tol {
                return Err(Error::InvalidWeights(format!("weight {i} is negative ({w})")));
            }
            if *w < 0.0 {
                *w = 0.0;
            }
            sum += *w;
        }
        if (sum - 1.0).abs() > tol {
            return Err(Error::InvalidWeights(format!(
                "weights sum to {sum}, not 1 within {tol}"
            )));
        }
        for w in v.iter_mut() {
            *w /= sum;
        }
        Ok(Self { v })
    }

    /// Uniform weights on `n` outcomes.
    pub fn barycenter(n: usize) -> Self {
        Self {
            v: vec![1.0 / n as f64; n],
        }
    }

    pub fn len(&self) -> usize {
        self.v.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, i: usize) -> f64 {
        self.v[i]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.v
    }
}

/// An element of `[0, ∞]^Ω`: per-world inaccuracies, each a nonnegative real
/// or `+∞`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtendedScoreVector {
    entries: Vec<f64>,
}

impl ExtendedScoreVector {
    pub fn new(entries: Vec<f64>) -> Result<Self> {
        for (i, e) in entries.iter().enumerate() {
            if e.is_nan() || *e < 0.0 || *e == f64::NEG_INFINITY {
                return Err(Error::InvalidCredence(format!(
                    "score entry {i} is {e}; entries must be nonnegative or +inf"
                )));
            }
        }
        Ok(Self { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> f64 {
        self.entries[i]
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    /// True when no entry is `+∞` (the score lies in `F_s` territory).
    pub fn is_finite(&self) -> bool {
        self.entries.iter().all(|e| e.is_finite())
    }

    pub fn infinite_coords(&self) -> Vec<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, e)| e.is_infinite())
            .map(|(i, _)| i)
            .collect()
    }
}

/// One violated probability axiom, with the witnessing event.
#[derive(Debug, Clone, PartialEq)]
pub enum ProbabilityViolation {
    /// `c(∅)` is not zero.
    EmptyNonzero { value: f64 },
    /// `c(Ω)` is not one.
    TotalNotOne { value: f64 },
    /// Some event carries a negative credence.
    Negative { event: Event, value: f64 },
    /// `c(A)` disagrees with the sum of its singletons.
    NonAdditive {
        event: Event,
        value: f64,
        singleton_sum: f64,
    },
}

/// Outcome of a probability-axiom check.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityCheck {
    pub passed: bool,
    pub violations: Vec<ProbabilityViolation>,
}

/// Expands simplex weights into the additive credence `p_v` they induce:
/// `c(A) = Σ_{i ∈ A} v_i`.
pub fn credence_from_weights(
    space: &OutcomeSpace,
    v: &ProbabilityWeights,
) -> Result<CredenceFunction> {
    if v.len() != space.len() {
        return Err(Error::DimensionMismatch {
            expected: space.len(),
            got: v.len(),
        });
    }
    let mut values = vec![0.0; space.num_events()];
    for mask in 1..space.num_events() {
        let low = mask.trailing_zeros() as usize;
        // Adding singletons in ascending index order keeps the additivity
        // check below float-exact.
        values[mask] = values[mask & (mask - 1)] + v.get(low);
    }
    CredenceFunction::new(space, values)
}

/// Checks the probability axioms up to `tol`, reporting every violation.
///
/// On a finite space, finite additivity reduces to agreement with singleton
/// sums, checked event by event.
pub fn is_probability(space: &OutcomeSpace, c: &CredenceFunction, tol: f64) -> ProbabilityCheck {
    assert!(tol >= 0.0, "tolerance must be nonnegative");
    assert_eq!(c.num_events(), space.num_events(), "dimension mismatch");
    let mut violations = Vec::new();

    let empty = c.get(Event::EMPTY);
    if empty.abs() > tol {
        violations.push(ProbabilityViolation::EmptyNonzero { value: empty });
    }
    let total = c.get(space.full_event());
    if (total - 1.0).abs() > tol {
        violations.push(ProbabilityViolation::TotalNotOne { value: total });
    }
    for event in space.events() {
        let value = c.get(event);
        if value < -tol {
            violations.push(ProbabilityViolation::Negative { event, value });
        }
        let mut singleton_sum = 0.0;
        for i in 0..space.len() {
            if event.contains(i) {
                singleton_sum += c.get(Event(1 << i));
            }
        }
        if (value - singleton_sum).abs() > tol {
            violations.push(ProbabilityViolation::NonAdditive {
                event,
                value,
                singleton_sum,
            });
        }
    }
    ProbabilityCheck {
        passed: violations.is_empty(),
        violations,
    }
}

/// The metric `d(a, b) = Σ_i |arctan a_i − arctan b_i|` on `[0, ∞]^n`, with
/// `arctan(+∞) = π/2`. Metrizes the product topology.
pub fn arctan_distance(a: &ExtendedScoreVector, b: &ExtendedScoreVector) -> f64 {
    assert_eq!(a.len(), b.len(), "dimension mismatch");
    a.entries()
        .iter()
        .zip(b.entries())
        .map(|(x, y)| (x.atan() - y.atan()).abs())
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    fn space2() -> OutcomeSpace {
        OutcomeSpace::new(vec!["w1", "w2"]).unwrap()
    }

    #[test]
    fn space_rejects_bad_labels() {
        assert!(OutcomeSpace::new(Vec::<String>::new()).is_err());
        assert!(OutcomeSpace::new(vec!["a", "a"]).is_err());
        assert!(OutcomeSpace::new(vec!["a,b"]).is_err());
        assert!(OutcomeSpace::new(vec![""]).is_err());
        assert!(OutcomeSpace::with_default_labels(13).is_err());
        assert!(OutcomeSpace::with_default_labels(12).is_ok());
    }

    #[test]
    fn event_key_round_trip() {
        let space = OutcomeSpace::new(vec!["w1", "w2", "w3"]).unwrap();
        for event in space.events() {
            let key = space.event_key(event);
            assert_eq!(space.parse_event_key(&key).unwrap(), event);
        }
        assert!(space.parse_event_key("w2,w1").is_err());
        assert!(space.parse_event_key("w1,w1").is_err());
        assert!(space.parse_event_key("bogus").is_err());
    }

    #[test]
    fn point_mass_credence() {
        let space = space2();
        let v = ProbabilityWeights::new(vec![1.0, 0.0]).unwrap();
        let c = credence_from_weights(&space, &v).unwrap();
        assert_eq!(c.get(Event(0b00)), 0.0);
        assert_eq!(c.get(Event(0b01)), 1.0);
        assert_eq!(c.get(Event(0b10)), 0.0);
        assert_eq!(c.get(Event(0b11)), 1.0);
    }

    #[test]
    fn additive_extension_is_forced() {
        let space = space2();
        let v = ProbabilityWeights::new(vec![0.45, 0.55]).unwrap();
        let c = credence_from_weights(&space, &v).unwrap();
        assert_eq!(c.get(Event(0b01)), 0.45);
        assert_eq!(c.get(Event(0b10)), 0.55);
        assert_eq!(c.get(Event(0b11)), 1.0);
        assert_eq!(c.get(Event(0b00)), 0.0);
    }

    #[test]
    fn symmetric_credence_counts_members() {
        let space = OutcomeSpace::new(vec!["a", "b", "c"]).unwrap();
        let v = ProbabilityWeights::new(vec![1.0 / 3.0; 3]).unwrap();
        let c = credence_from_weights(&space, &v).unwrap();
        for event in space.events() {
            let members = event.mask().count_ones() as f64;
            assert!((c.get(event) - members / 3.0).abs() < 1e-15);
        }
    }

    #[test]
    fn weights_from_construction_pass_probability_check() {
        let space = space2();
        let v = ProbabilityWeights::new(vec![0.3, 0.7]).unwrap();
        let c = credence_from_weights(&space, &v).unwrap();
        assert!(is_probability(&space, &c, 1e-9).passed);
    }

    #[test]
    fn nonadditive_credence_is_flagged() {
        let space = space2();
        let c = CredenceFunction::new(&space, vec![0.0, 0.6, 0.7, 1.0]).unwrap();
        let check = is_probability(&space, &c, 1e-9);
        assert!(!check.passed);
        assert!(check.violations.iter().any(|v| matches!(
            v,
            ProbabilityViolation::NonAdditive { event, .. } if *event == Event(0b11)
        )));
    }

    #[test]
    fn nonzero_empty_event_is_flagged() {
        let space = space2();
        let c = CredenceFunction::new(&space, vec![0.1, 0.3, 0.7, 1.0]).unwrap();
        let check = is_probability(&space, &c, 1e-9);
        assert!(!check.passed);
        assert!(check
            .violations
            .iter()
            .any(|v| matches!(v, ProbabilityViolation::EmptyNonzero { .. })));
    }

    #[test]
    fn weight_gate_and_renormalization() {
        assert!(ProbabilityWeights::new(vec![0.5, 0.6]).is_err());
        assert!(ProbabilityWeights::new(vec![-0.1, 1.1]).is_err());
        assert!(ProbabilityWeights::new(vec![f64::NAN, 1.0]).is_err());
        let w = ProbabilityWeights::new(vec![0.5 + 4e-10, 0.5 + 4e-10]).unwrap();
        let sum: f64 = w.as_slice().iter().sum();
        assert!((sum - 1.0).abs() < 1e-15);
        // A -0.0-scale stray clamps to zero.
        let w = ProbabilityWeights::new(vec![1.0 + 5e-10, -5e-10]).unwrap();
        assert_eq!(w.get(1), 0.0);
    }

    #[test]
    fn credence_rejects_non_finite() {
        let space = space2();
        assert!(CredenceFunction::new(&space, vec![0.0, f64::INFINITY, 0.0, 1.0]).is_err());
        assert!(CredenceFunction::new(&space, vec![0.0, f64::NAN, 0.0, 1.0]).is_err());
        assert!(CredenceFunction::new(&space, vec![0.0, 1.0]).is_err());
        // Negative and >1 values are allowed; credences are arbitrary reals.
        assert!(CredenceFunction::new(&space, vec![-2.0, 3.5, 0.0, 1.0]).is_ok());
    }

    #[test]
    fn score_vector_invariants() {
        assert!(ExtendedScoreVector::new(vec![0.0, f64::INFINITY]).is_ok());
        assert!(ExtendedScoreVector::new(vec![-1e-300]).is_err());
        assert!(ExtendedScoreVector::new(vec![f64::NAN]).is_err());
        assert!(ExtendedScoreVector::new(vec![f64::NEG_INFINITY]).is_err());
    }

    #[test]
    fn arctan_metric_unit_values() {
        let a = ExtendedScoreVector::new(vec![0.0, f64::INFINITY]).unwrap();
        let b = ExtendedScoreVector::new(vec![0.0, 0.0]).unwrap();
        assert!((arctan_distance(&a, &b) - FRAC_PI_2).abs() < 1e-15);

        let a = ExtendedScoreVector::new(vec![1.0]).unwrap();
        let b = ExtendedScoreVector::new(vec![0.0]).unwrap();
        assert!((arctan_distance(&a, &b) - FRAC_PI_4).abs() < 1e-15);

        let a = ExtendedScoreVector::new(vec![0.3, 7.0]).unwrap();
        assert_eq!(arctan_distance(&a, &a), 0.0);
    }
}
