//! Decision rules, rule systems and their measures.
//!
//! A rule `(a_i1 = d1) & ... & (a_im = dm) -> s` is stored with its
//! left-hand side sorted by attribute index. Rules inside a [`RuleSystem`]
//! carry a stable id (their position in the original input), which survives
//! restriction and reduction so answer sets can always be reported in terms
//! of the original system.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Stable ordinal of a rule within the system it was first built in.
pub type RuleId = usize;

/// An attribute `a_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AttributeId(pub u32);

impl AttributeId {
    pub fn index(self) -> u32 {
        self.0
    }
}

impl fmt::Display for AttributeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a{}", self.0)
    }
}

impl Serialize for AttributeId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A value from `ω ∪ {∗}`.
///
/// `Star` stands for "some value that does not occur in the system"; it is
/// never equal to a concrete value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedValue {
    Concrete(u32),
    Star,
}

impl ExtendedValue {
    pub fn concrete(self) -> Option<u32> {
        match self {
            ExtendedValue::Concrete(v) => Some(v),
            ExtendedValue::Star => None,
        }
    }
}

impl From<u32> for ExtendedValue {
    fn from(v: u32) -> Self {
        ExtendedValue::Concrete(v)
    }
}

impl fmt::Display for ExtendedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedValue::Concrete(v) => write!(f, "{v}"),
            ExtendedValue::Star => f.write_str("*"),
        }
    }
}

impl Serialize for ExtendedValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtendedValue::Concrete(v) => serializer.serialize_u32(*v),
            ExtendedValue::Star => serializer.serialize_str("*"),
        }
    }
}

/// A single decision rule.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DecisionRule {
    id: RuleId,
    lhs: Vec<(AttributeId, u32)>,
    rhs: u32,
}

impl DecisionRule {
    /// Builds a rule, rejecting left-hand sides that mention an attribute twice.
    /// The id is assigned when the rule is placed into a [`RuleSystem`].
    pub fn new(mut lhs: Vec<(AttributeId, u32)>, rhs: u32) -> Result<Self> {
        lhs.sort_by_key(|&(a, _)| a);
        if let Some(w) = lhs.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::RepeatedAttribute(w[0].0));
        }
        Ok(DecisionRule { id: 0, lhs, rhs })
    }

    /// Internal constructor for already-validated, sorted left-hand sides.
    pub(crate) fn from_sorted(id: RuleId, lhs: Vec<(AttributeId, u32)>, rhs: u32) -> Self {
        debug_assert!(lhs.windows(2).all(|w| w[0].0 < w[1].0));
        DecisionRule { id, lhs, rhs }
    }

    pub fn id(&self) -> RuleId {
        self.id
    }

    /// K(r), sorted by attribute.
    pub fn lhs(&self) -> &[(AttributeId, u32)] {
        &self.lhs
    }

    pub fn rhs(&self) -> u32 {
        self.rhs
    }

    pub fn len(&self) -> usize {
        self.lhs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lhs.is_empty()
    }

    /// A(r) in increasing index order.
    pub fn attributes(&self) -> impl Iterator<Item = AttributeId> + '_ {
        self.lhs.iter().map(|&(a, _)| a)
    }

    pub fn contains_attribute(&self, attr: AttributeId) -> bool {
        self.lhs.binary_search_by_key(&attr, |&(a, _)| a).is_ok()
    }

    pub fn value_of(&self, attr: AttributeId) -> Option<u32> {
        self.lhs
            .binary_search_by_key(&attr, |&(a, _)| a)
            .ok()
            .map(|i| self.lhs[i].1)
    }
}

impl fmt::Display for DecisionRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (a, v)) in self.lhs.iter().enumerate() {
            if i > 0 {
                f.write_str(" & ")?;
            }
            write!(f, "{a}={v}")?;
        }
        if !self.lhs.is_empty() {
            f.write_str(" ")?;
        }
        write!(f, "-> {}", self.rhs)
    }
}

/// Derived measures of a rule system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Measures {
    /// A(S)
    pub attrs: BTreeSet<AttributeId>,
    /// n(S) = |A(S)|
    pub n: usize,
    /// d(S), the maximum rule length
    pub d: usize,
    /// k(S) = max |V_S(a)|, or 0 when n(S) = 0
    pub k: usize,
    /// V_S(a) for every a in A(S)
    pub values: BTreeMap<AttributeId, BTreeSet<u32>>,
}

impl Measures {
    /// EV_S(a) = V_S(a) ∪ {∗}, concrete values first.
    pub fn extended_values(&self, attr: AttributeId) -> Option<Vec<ExtendedValue>> {
        self.values.get(&attr).map(|vs| {
            vs.iter()
                .copied()
                .map(ExtendedValue::Concrete)
                .chain(std::iter::once(ExtendedValue::Star))
                .collect()
        })
    }

    /// |EV(S)|, saturating.
    pub fn tuple_count(&self) -> u64 {
        self.values
            .values()
            .fold(1u64, |acc, vs| acc.saturating_mul(vs.len() as u64 + 1))
    }
}

/// A finite nonempty multiset of decision rules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleSystem {
    rules: Vec<DecisionRule>,
}

impl RuleSystem {
    /// Builds a system and numbers its rules `0..len` in input order.
    pub fn new(rules: Vec<DecisionRule>) -> Result<Self> {
        if rules.is_empty() {
            return Err(Error::EmptySystem);
        }
        let rules = rules
            .into_iter()
            .enumerate()
            .map(|(id, mut r)| {
                r.id = id;
                r
            })
            .collect();
        Ok(RuleSystem { rules })
    }

    /// Keeps the ids already carried by `rules`. Returns `None` when empty.
    pub(crate) fn with_ids(rules: Vec<DecisionRule>) -> Option<Self> {
        if rules.is_empty() {
            None
        } else {
            Some(RuleSystem { rules })
        }
    }

    pub fn rules(&self) -> &[DecisionRule] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn rule(&self, id: RuleId) -> Option<&DecisionRule> {
        self.rules.iter().find(|r| r.id == id)
    }

    pub fn ids(&self) -> BTreeSet<RuleId> {
        self.rules.iter().map(|r| r.id).collect()
    }

    pub fn measures(&self) -> Measures {
        let mut values: BTreeMap<AttributeId, BTreeSet<u32>> = BTreeMap::new();
        let mut d = 0;
        for r in &self.rules {
            d = d.max(r.len());
            for &(a, v) in r.lhs() {
                values.entry(a).or_default().insert(v);
            }
        }
        let attrs: BTreeSet<AttributeId> = values.keys().copied().collect();
        let k = values.values().map(BTreeSet::len).max().unwrap_or(0);
        Measures {
            n: attrs.len(),
            attrs,
            d,
            k,
            values,
        }
    }

    /// A(S) in increasing index order.
    pub fn attributes(&self) -> BTreeSet<AttributeId> {
        self.rules.iter().flat_map(|r| r.attributes()).collect()
    }

    pub fn max_len(&self) -> usize {
        self.rules.iter().map(DecisionRule::len).max().unwrap_or(0)
    }

    /// True if every rule has an empty left-hand side, i.e. n(S) = 0.
    pub fn all_empty_lhs(&self) -> bool {
        self.rules.iter().all(DecisionRule::is_empty)
    }

    /// Iterates over every tuple of EV(S), attributes in increasing index
    /// order, varying the last attribute fastest.
    pub fn extended_tuples(&self) -> ExtendedTuples {
        let m = self.measures();
        let domains: Vec<(AttributeId, Vec<ExtendedValue>)> = m
            .attrs
            .iter()
            .map(|&a| (a, m.extended_values(a).expect("attribute in A(S)")))
            .collect();
        ExtendedTuples {
            odometer: vec![0; domains.len()],
            domains,
            done: false,
        }
    }
}

impl fmt::Display for RuleSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rules {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

/// Anything that can be viewed as a (possibly empty) list of rules.
pub trait RuleSet {
    fn rule_slice(&self) -> &[DecisionRule];
}

impl RuleSet for RuleSystem {
    fn rule_slice(&self) -> &[DecisionRule] {
        &self.rules
    }
}

impl RuleSet for [DecisionRule] {
    fn rule_slice(&self) -> &[DecisionRule] {
        self
    }
}

/// A set of equations `a = δ` with `δ ∈ ω ∪ {∗}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct EquationSystem {
    equations: BTreeSet<(AttributeId, ExtendedValue)>,
}

impl EquationSystem {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, attr: AttributeId, value: ExtendedValue) {
        self.equations.insert((attr, value));
    }

    pub fn len(&self) -> usize {
        self.equations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.equations.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(AttributeId, ExtendedValue)> {
        self.equations.iter()
    }

    pub fn attributes(&self) -> BTreeSet<AttributeId> {
        self.equations.iter().map(|&(a, _)| a).collect()
    }

    /// Consistent iff no attribute occurs with two different values.
    pub fn is_consistent(&self) -> bool {
        self.first_conflict().is_none()
    }

    fn first_conflict(&self) -> Option<AttributeId> {
        // The set is sorted by attribute, so conflicting pairs are adjacent.
        let eqs: Vec<_> = self.equations.iter().collect();
        eqs.windows(2).find(|w| w[0].0 == w[1].0).map(|w| w[0].0)
    }

    /// The system as a function from attributes to values.
    pub fn as_map(&self) -> Result<BTreeMap<AttributeId, ExtendedValue>> {
        if let Some(a) = self.first_conflict() {
            return Err(Error::Inconsistent(a));
        }
        Ok(self.equations.iter().copied().collect())
    }

    /// `K(r) ∪ self` is consistent.
    pub fn consistent_with(&self, rule: &DecisionRule) -> bool {
        match self.as_map() {
            Ok(map) => consistent_with_map(&map, rule),
            Err(_) => false,
        }
    }
}

impl FromIterator<(AttributeId, ExtendedValue)> for EquationSystem {
    fn from_iter<I: IntoIterator<Item = (AttributeId, ExtendedValue)>>(iter: I) -> Self {
        EquationSystem {
            equations: iter.into_iter().collect(),
        }
    }
}

impl fmt::Display for EquationSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (a, v)) in self.equations.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}={v}")?;
        }
        f.write_str("}")
    }
}

pub(crate) fn consistent_with_map(
    alpha: &BTreeMap<AttributeId, ExtendedValue>,
    rule: &DecisionRule,
) -> bool {
    rule.lhs().iter().all(|&(a, v)| match alpha.get(&a) {
        Some(&x) => x == ExtendedValue::Concrete(v),
        None => true,
    })
}

/// A total assignment of EV_S values to the attributes of A(S).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtendedTuple {
    values: BTreeMap<AttributeId, ExtendedValue>,
}

impl ExtendedTuple {
    /// Validates that `values` is defined exactly on A(S) and takes values in EV_S.
    pub fn new(system: &RuleSystem, values: BTreeMap<AttributeId, ExtendedValue>) -> Result<Self> {
        let m = system.measures();
        for (&a, &v) in &values {
            let vs = m.values.get(&a).ok_or(Error::UnknownAttribute(a))?;
            if let ExtendedValue::Concrete(c) = v {
                if !vs.contains(&c) {
                    return Err(Error::ValueOutOfDomain {
                        attr: a,
                        value: c.to_string(),
                    });
                }
            }
        }
        if let Some(&a) = m.attrs.iter().find(|a| !values.contains_key(a)) {
            return Err(Error::MissingAttribute(a));
        }
        Ok(ExtendedTuple { values })
    }

    pub fn get(&self, attr: AttributeId) -> Option<ExtendedValue> {
        self.values.get(&attr).copied()
    }

    pub fn values(&self) -> &BTreeMap<AttributeId, ExtendedValue> {
        &self.values
    }

    /// K(S, δ̄)
    pub fn equations(&self) -> EquationSystem {
        self.values.iter().map(|(&a, &v)| (a, v)).collect()
    }

    /// Whether `K(rule) ⊆ K(S, δ̄)`.
    pub fn satisfies(&self, rule: &DecisionRule) -> bool {
        rule.lhs()
            .iter()
            .all(|&(a, v)| self.values.get(&a) == Some(&ExtendedValue::Concrete(v)))
    }
}

impl fmt::Display for ExtendedTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (a, v)) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}={v}")?;
        }
        Ok(())
    }
}

/// Iterator over EV(S); see [`RuleSystem::extended_tuples`].
pub struct ExtendedTuples {
    domains: Vec<(AttributeId, Vec<ExtendedValue>)>,
    odometer: Vec<usize>,
    done: bool,
}

impl Iterator for ExtendedTuples {
    type Item = ExtendedTuple;

    fn next(&mut self) -> Option<ExtendedTuple> {
        if self.done {
            return None;
        }
        let values = self
            .domains
            .iter()
            .zip(&self.odometer)
            .map(|((a, dom), &i)| (*a, dom[i]))
            .collect();
        self.done = true;
        for pos in (0..self.odometer.len()).rev() {
            self.odometer[pos] += 1;
            if self.odometer[pos] < self.domains[pos].1.len() {
                self.done = false;
                break;
            }
            self.odometer[pos] = 0;
        }
        Some(ExtendedTuple { values })
    }
}

/// The ids of all rules of `system` realizable for `tuple`.
pub fn realizable_rules(system: &RuleSystem, tuple: &ExtendedTuple) -> BTreeSet<RuleId> {
    system
        .rules()
        .iter()
        .filter(|r| tuple.satisfies(r))
        .map(DecisionRule::id)
        .collect()
}

/// When n(S) = 0 the whole of S is the answer to EAR(S).
pub fn ear_solution_for_degenerate(system: &RuleSystem) -> Result<BTreeSet<RuleId>> {
    let n = system.attributes().len();
    if n > 0 {
        return Err(Error::NotDegenerate(n));
    }
    Ok(system.ids())
}
