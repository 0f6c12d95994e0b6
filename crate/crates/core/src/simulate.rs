//! Round-based simulation of a decision tree solving EAR(S) on one input.
//!
//! Every round covers the maximal-length reduct of the current system,
//! queries the cover's attributes, and restricts the original system by
//! everything learned so far. The loop stops once no rule has a remaining
//! left-hand side; the answer is the set of rules consistent with the
//! accumulated equations.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::covers::CoverStrategy;
use crate::error::{Error, Result};
use crate::rules::{
    AttributeId, DecisionRule, EquationSystem, ExtendedTuple, ExtendedValue, Measures, RuleId,
    RuleSystem,
};
use crate::transform::{restrict_rules, s_max};

/// Answers attribute queries for the simulator.
///
/// Implementations must be stable: the same attribute always yields the same
/// value. Values need not lie in `V_S(a)`; they are normalized before use.
pub trait ValueProvider {
    fn value(&mut self, attr: AttributeId) -> Result<ExtendedValue>;
}

impl ValueProvider for ExtendedTuple {
    fn value(&mut self, attr: AttributeId) -> Result<ExtendedValue> {
        self.get(attr).ok_or(Error::MissingAttribute(attr))
    }
}

impl ValueProvider for &ExtendedTuple {
    fn value(&mut self, attr: AttributeId) -> Result<ExtendedValue> {
        self.get(attr).ok_or(Error::MissingAttribute(attr))
    }
}

/// Raw assignment; values outside `V_S(a)` are allowed.
impl ValueProvider for BTreeMap<AttributeId, ExtendedValue> {
    fn value(&mut self, attr: AttributeId) -> Result<ExtendedValue> {
        self.get(&attr).copied().ok_or(Error::MissingAttribute(attr))
    }
}

/// Folds any value outside `V_S(a)` into `∗`.
pub fn normalize_value(
    system: &RuleSystem,
    attr: AttributeId,
    value: ExtendedValue,
) -> Result<ExtendedValue> {
    normalize_with(&system.measures(), attr, value)
}

pub(crate) fn normalize_with(
    measures: &Measures,
    attr: AttributeId,
    value: ExtendedValue,
) -> Result<ExtendedValue> {
    let values = measures
        .values
        .get(&attr)
        .ok_or(Error::UnknownAttribute(attr))?;
    Ok(match value {
        ExtendedValue::Concrete(v) if values.contains(&v) => value,
        _ => ExtendedValue::Star,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Query {
    pub attribute: AttributeId,
    pub value: ExtendedValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimulationResult {
    /// Ids of the rules of S found realizable.
    pub answer: BTreeSet<RuleId>,
    /// Queries in the order they were made.
    pub trace: Vec<Query>,
    /// Number of queries made in each round.
    pub rounds: Vec<usize>,
    /// Total number of queries.
    pub depth: usize,
    /// d of the current system before each round, plus one final entry for
    /// the terminal system (0 when it is empty or has only empty rules).
    pub lengths: Vec<usize>,
}

impl SimulationResult {
    pub fn equations(&self) -> EquationSystem {
        self.trace.iter().map(|q| (q.attribute, q.value)).collect()
    }
}

/// Runs the round-based simulation of a decision tree over `system`.
///
/// `strategy` selects the cover built on each round's `S^max`:
/// [`CoverStrategy::Greedy`] or the rule-based [`CoverStrategy::Rule`].
pub fn simulate_ear<P: ValueProvider>(
    system: &RuleSystem,
    mut provider: P,
    strategy: CoverStrategy,
) -> Result<SimulationResult> {
    let measures = system.measures();
    if measures.n == 0 {
        return Err(Error::NoAttributes);
    }
    let mut alpha: BTreeMap<AttributeId, ExtendedValue> = BTreeMap::new();
    let mut trace = Vec::new();
    let mut rounds = Vec::new();
    let mut lengths = Vec::new();
    let mut current = system.clone();
    loop {
        lengths.push(current.max_len());
        let cover = strategy.cover(&s_max(&current))?;
        for &attr in cover.attributes() {
            debug_assert!(!alpha.contains_key(&attr));
            let value = normalize_with(&measures, attr, provider.value(attr)?)?;
            alpha.insert(attr, value);
            trace.push(Query {
                attribute: attr,
                value,
            });
        }
        rounds.push(cover.len());

        let remaining = restrict_rules(system.rules(), &alpha);
        if remaining.iter().all(DecisionRule::is_empty) {
            lengths.push(0);
            let answer = remaining.iter().map(DecisionRule::id).collect();
            return Ok(SimulationResult {
                answer,
                depth: trace.len(),
                trace,
                rounds,
                lengths,
            });
        }
        current = RuleSystem::with_ids(remaining).expect("nonempty");
    }
}
