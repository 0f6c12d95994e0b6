//! Restriction `S_α`, the reduct `S^max` and the hypergraph `G(S)`.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::rules::{
    consistent_with_map, AttributeId, DecisionRule, EquationSystem, ExtendedValue, RuleId,
    RuleSystem,
};

/// A rule system that may have become empty through restriction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedSystem(Option<RuleSystem>);

impl RestrictedSystem {
    pub fn empty() -> Self {
        RestrictedSystem(None)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_none()
    }

    /// Empty, or every remaining rule has an empty left-hand side.
    pub fn is_terminal(&self) -> bool {
        self.0.as_ref().is_none_or(RuleSystem::all_empty_lhs)
    }

    pub fn system(&self) -> Option<&RuleSystem> {
        self.0.as_ref()
    }

    pub fn into_system(self) -> Option<RuleSystem> {
        self.0
    }

    pub fn rules(&self) -> &[DecisionRule] {
        self.0.as_ref().map_or(&[], RuleSystem::rules)
    }

    pub fn ids(&self) -> BTreeSet<RuleId> {
        self.rules().iter().map(DecisionRule::id).collect()
    }

    /// d of the remaining rules; 0 when empty.
    pub fn max_len(&self) -> usize {
        self.0.as_ref().map_or(0, RuleSystem::max_len)
    }

    pub fn restrict(&self, alpha: &EquationSystem) -> Result<RestrictedSystem> {
        match &self.0 {
            Some(s) => restrict(s, alpha),
            None => {
                alpha.as_map()?;
                Ok(RestrictedSystem::empty())
            }
        }
    }
}

impl crate::rules::RuleSet for RestrictedSystem {
    fn rule_slice(&self) -> &[DecisionRule] {
        self.rules()
    }
}

impl From<RuleSystem> for RestrictedSystem {
    fn from(s: RuleSystem) -> Self {
        RestrictedSystem(Some(s))
    }
}

impl fmt::Display for RestrictedSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Some(s) => s.fmt(f),
            None => Ok(()),
        }
    }
}

/// `S_α`: rules consistent with `α`, with the equations of `α` removed from
/// their left-hand sides. Rule ids are inherited from `system`.
pub fn restrict(system: &RuleSystem, alpha: &EquationSystem) -> Result<RestrictedSystem> {
    let map = alpha.as_map()?;
    Ok(RestrictedSystem(RuleSystem::with_ids(restrict_rules(
        system.rules(),
        &map,
    ))))
}

pub(crate) fn restrict_rules(
    rules: &[DecisionRule],
    alpha: &BTreeMap<AttributeId, ExtendedValue>,
) -> Vec<DecisionRule> {
    rules
        .iter()
        .filter(|r| consistent_with_map(alpha, r))
        .map(|r| {
            let lhs = r
                .lhs()
                .iter()
                .filter(|(a, _)| !alpha.contains_key(a))
                .copied()
                .collect();
            DecisionRule::from_sorted(r.id(), lhs, r.rhs())
        })
        .collect()
}

/// `S^max`: one rule per K(r)-class among the rules of length d(S). The
/// representative of a class is its member with the smallest id.
pub fn s_max(system: &RuleSystem) -> RuleSystem {
    let d = system.max_len();
    let mut longest: Vec<&DecisionRule> = system.rules().iter().filter(|r| r.len() == d).collect();
    longest.sort_by_key(|r| r.id());
    let mut seen: HashSet<&[(AttributeId, u32)]> = HashSet::new();
    let kept: Vec<DecisionRule> = longest
        .into_iter()
        .filter(|r| seen.insert(r.lhs()))
        .cloned()
        .collect();
    RuleSystem::with_ids(kept).expect("S^max of a nonempty system")
}

/// The hypergraph G(S): nodes A(S), one edge A(r) per rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    pub nodes: BTreeSet<AttributeId>,
    pub edges: Vec<(RuleId, BTreeSet<AttributeId>)>,
}

impl Hypergraph {
    /// Whether `attrs` hits every nonempty edge.
    pub fn is_cover(&self, attrs: &BTreeSet<AttributeId>) -> bool {
        self.edges
            .iter()
            .all(|(_, e)| e.is_empty() || !e.is_disjoint(attrs))
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nodes: Vec<String> = self.nodes.iter().map(ToString::to_string).collect();
        writeln!(f, "nodes: {}", nodes.join(" "))?;
        for (id, e) in &self.edges {
            let e: Vec<String> = e.iter().map(ToString::to_string).collect();
            writeln!(f, "edge r{id}: {}", e.join(" "))?;
        }
        Ok(())
    }
}

pub fn hypergraph(system: &RuleSystem) -> Hypergraph {
    Hypergraph {
        nodes: system.attributes(),
        edges: system
            .rules()
            .iter()
            .map(|r| (r.id(), r.attributes().collect()))
            .collect(),
    }
}

/// A node cover of G(S), attributes kept in selection order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeCover {
    attributes: Vec<AttributeId>,
}

impl NodeCover {
    /// Checks the cover property against `system` before accepting `attributes`.
    pub fn new(system: &RuleSystem, attributes: Vec<AttributeId>) -> Result<Self> {
        let set: BTreeSet<AttributeId> = attributes.iter().copied().collect();
        if let Some(&a) = set.iter().find(|a| !system.rules().iter().any(|r| r.contains_attribute(**a))) {
            return Err(Error::UnknownAttribute(a));
        }
        if let Some(r) = system
            .rules()
            .iter()
            .find(|r| !r.is_empty() && !r.attributes().any(|a| set.contains(&a)))
        {
            return Err(Error::InvalidParams(format!(
                "attributes do not cover rule {} ({r})",
                r.id()
            )));
        }
        Ok(NodeCover { attributes })
    }

    pub fn attributes(&self) -> &[AttributeId] {
        &self.attributes
    }

    pub fn len(&self) -> usize {
        self.attributes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.attributes.is_empty()
    }
}

impl fmt::Display for NodeCover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.attributes.iter().map(ToString::to_string).collect();
        f.write_str(&names.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(text: &str) -> RuleSystem {
        text.parse().unwrap()
    }

    fn eqs(pairs: &[(u32, ExtendedValue)]) -> EquationSystem {
        pairs.iter().map(|&(i, v)| (AttributeId(i), v)).collect()
    }

    #[test]
    fn restrict_drops_inconsistent_and_known() {
        let s = sys("a1=0 & a2=1 -> 1\na1=1 -> 2");
        let r = restrict(&s, &eqs(&[(1, 0.into())])).unwrap();
        assert_eq!(r.to_string(), "a2=1 -> 1\n");
        assert_eq!(r.ids(), BTreeSet::from([0]));

        let r = restrict(&s, &EquationSystem::new()).unwrap();
        assert_eq!(r.system(), Some(&s));

        let r = restrict(&sys("a1=0 -> 1"), &eqs(&[(1, ExtendedValue::Star)])).unwrap();
        assert!(r.is_empty());
        assert!(r.is_terminal());
    }

    #[test]
    fn restrict_rejects_inconsistent_alpha() {
        let s = sys("a1=0 -> 1");
        let alpha = eqs(&[(1, 0.into()), (1, 1.into())]);
        assert_eq!(restrict(&s, &alpha), Err(Error::Inconsistent(AttributeId(1))));
    }

    #[test]
    fn restrict_ignores_foreign_attributes() {
        let s = sys("a1=0 -> 1");
        let r = restrict(&s, &eqs(&[(9, 3.into())])).unwrap();
        assert_eq!(r.system(), Some(&s));
    }

    #[test]
    fn s_max_examples() {
        let m = s_max(&sys("a1=0 -> 1\na1=0 -> 2\na2=1 -> 3"));
        assert_eq!(m.to_string(), "a1=0 -> 1\na2=1 -> 3\n");
        assert_eq!(m.ids(), BTreeSet::from([0, 2]));

        let m = s_max(&sys("a1=0 & a2=1 -> 1\na1=1 -> 2"));
        assert_eq!(m.to_string(), "a1=0 & a2=1 -> 1\n");

        let m = s_max(&sys("-> 1"));
        assert_eq!(m.to_string(), "-> 1\n");
    }

    #[test]
    fn s_max_keeps_smallest_id_after_restriction() {
        // ids 2 and 0 share K after restriction; 0 must win regardless of order
        let s = sys("a1=0 & a2=5 -> 7\na3=1 -> 1\na2=5 & a4=1 -> 9");
        let r = restrict(&s, &eqs(&[(1, 0.into()), (4, 1.into())])).unwrap();
        let m = s_max(r.system().unwrap());
        assert_eq!(m.ids(), BTreeSet::from([0, 1]));
    }

    #[test]
    fn hypergraph_examples() {
        let g = hypergraph(&sys("a1=0 & a2=1 -> 1"));
        assert_eq!(g.nodes, BTreeSet::from([AttributeId(1), AttributeId(2)]));
        assert_eq!(g.edges, vec![(0, BTreeSet::from([AttributeId(1), AttributeId(2)]))]);

        let g = hypergraph(&sys("-> 1"));
        assert!(g.nodes.is_empty());
        assert_eq!(g.edges, vec![(0, BTreeSet::new())]);
        assert!(g.is_cover(&BTreeSet::new()));

        let g = hypergraph(&sys("a1=0 -> 1\na1=1 -> 2"));
        assert_eq!(g.edges.len(), 2);
        assert!(g.edges.iter().all(|(_, e)| e == &BTreeSet::from([AttributeId(1)])));
    }

    #[test]
    fn node_cover_validation() {
        let s = sys("a1=0 -> 1\na2=0 -> 2");
        assert!(NodeCover::new(&s, vec![AttributeId(1)]).is_err());
        assert!(NodeCover::new(&s, vec![AttributeId(2), AttributeId(1)]).is_ok());
        assert!(NodeCover::new(&sys("-> 1"), vec![]).is_ok());
    }
}
