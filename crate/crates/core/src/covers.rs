//! Node covers of G(S): the greedy cover, the rule-based cover, and an exact
//! minimum cover used as the β(S) oracle.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rules::{AttributeId, DecisionRule, RuleSystem};
use crate::transform::NodeCover;

/// How a cover is built for each round of the simulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CoverStrategy {
    /// Pick the attribute that covers the most uncovered rules.
    Greedy,
    /// Add every attribute of the first uncovered rule.
    Rule,
}

impl CoverStrategy {
    pub const ALL: [CoverStrategy; 2] = [CoverStrategy::Greedy, CoverStrategy::Rule];

    pub fn cover(self, system: &RuleSystem) -> Result<NodeCover> {
        match self {
            CoverStrategy::Greedy => greedy_cover(system),
            CoverStrategy::Rule => rule_cover(system),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CoverStrategy::Greedy => "greedy",
            CoverStrategy::Rule => "rule",
        }
    }
}

impl fmt::Display for CoverStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CoverStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "greedy" => Ok(CoverStrategy::Greedy),
            "rule" => Ok(CoverStrategy::Rule),
            other => Err(Error::InvalidParams(format!(
                "unknown strategy {other:?}, expected greedy|rule"
            ))),
        }
    }
}

fn nonempty_rules(system: &RuleSystem) -> Result<Vec<&DecisionRule>> {
    let rules: Vec<&DecisionRule> = system.rules().iter().filter(|r| !r.is_empty()).collect();
    if rules.is_empty() {
        return Err(Error::NoAttributes);
    }
    Ok(rules)
}

/// Greedy cover. Each step takes the attribute covering the largest number of
/// still-uncovered rules, the smallest attribute index winning ties. Rules
/// are counted individually, so two rules with the same A(r) count twice.
pub fn greedy_cover(system: &RuleSystem) -> Result<NodeCover> {
    let mut uncovered = nonempty_rules(system)?;
    let attrs = system.attributes();
    let mut chosen = Vec::new();
    while !uncovered.is_empty() {
        let mut best: Option<(AttributeId, usize)> = None;
        for &a in &attrs {
            let count = uncovered.iter().filter(|r| r.contains_attribute(a)).count();
            // attrs ascend, so strict > keeps the minimum index on ties
            if count > best.map_or(0, |(_, c)| c) {
                best = Some((a, count));
            }
        }
        let (a, _) = best.expect("an uncovered rule has at least one attribute");
        chosen.push(a);
        uncovered.retain(|r| !r.contains_attribute(a));
    }
    NodeCover::new(system, chosen)
}

/// Rule-based cover: while some rule is uncovered, take the one with the
/// smallest id and add all of its attributes.
pub fn rule_cover(system: &RuleSystem) -> Result<NodeCover> {
    let mut uncovered = nonempty_rules(system)?;
    uncovered.sort_by_key(|r| r.id());
    let mut chosen: Vec<AttributeId> = Vec::new();
    let mut in_cover = BTreeSet::new();
    while let Some(first) = uncovered.first() {
        for a in first.attributes() {
            if in_cover.insert(a) {
                chosen.push(a);
            }
        }
        uncovered.retain(|r| !r.attributes().any(|a| in_cover.contains(&a)));
    }
    NodeCover::new(system, chosen)
}

/// Size limit for [`exact_min_cover`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverBudget {
    pub max_attrs: usize,
}

impl CoverBudget {
    /// Attribute sets are held in a `u64` bitmask.
    pub const HARD_LIMIT: usize = 64;
}

impl Default for CoverBudget {
    fn default() -> Self {
        CoverBudget { max_attrs: 20 }
    }
}

/// A minimum-cardinality node cover and β(S).
///
/// Subsets are tried by increasing size and, within a size, in lexicographic
/// order of attribute index, so the returned cover is the lexicographically
/// smallest among the minimum ones.
pub fn exact_min_cover(system: &RuleSystem, budget: CoverBudget) -> Result<(NodeCover, usize)> {
    let attrs: Vec<AttributeId> = system.attributes().into_iter().collect();
    let limit = budget.max_attrs.min(CoverBudget::HARD_LIMIT);
    if attrs.len() > limit {
        return Err(Error::BudgetExceeded {
            dimension: "n(S)",
            actual: attrs.len(),
            limit,
        });
    }
    let mut edges: Vec<u64> = system
        .rules()
        .iter()
        .filter(|r| !r.is_empty())
        .map(|r| {
            r.attributes().fold(0u64, |m, a| {
                m | 1 << attrs.binary_search(&a).expect("attribute in A(S)")
            })
        })
        .collect();
    edges.sort_unstable();
    edges.dedup();

    for size in 0..=attrs.len() {
        let mut picked = Vec::with_capacity(size);
        if search(&edges, attrs.len(), 0, size, 0, &mut picked) {
            let cover = picked.iter().map(|&i| attrs[i]).collect();
            return Ok((NodeCover::new(system, cover)?, size));
        }
    }
    unreachable!("A(S) itself is a cover")
}

fn search(
    edges: &[u64],
    n: usize,
    start: usize,
    slots: usize,
    mask: u64,
    picked: &mut Vec<usize>,
) -> bool {
    let Some(&open) = edges.iter().find(|&&e| e & mask == 0) else {
        return true;
    };
    if slots == 0 || open >> start == 0 {
        return false;
    }
    for i in start..n {
        picked.push(i);
        if search(edges, n, i + 1, slots - 1, mask | 1 << i, picked) {
            return true;
        }
        picked.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transform::hypergraph;

    fn sys(text: &str) -> RuleSystem {
        text.parse().unwrap()
    }

    fn names(c: &NodeCover) -> String {
        c.to_string()
    }

    #[test]
    fn greedy_examples() {
        assert_eq!(names(&greedy_cover(&sys("a1=0 & a2=1 -> 1")).unwrap()), "a1");
        assert_eq!(
            names(&greedy_cover(&sys("a1=0 -> 1\na1=1 -> 2\na2=0 -> 3")).unwrap()),
            "a1 a2"
        );
        assert_eq!(
            names(&greedy_cover(&sys("a2=0 & a3=0 -> 1\na3=1 & a4=1 -> 2")).unwrap()),
            "a3"
        );
    }

    #[test]
    fn greedy_counts_rules_not_edges() {
        // a2 covers two rules sharing A(r) = {a2}; a1 covers one larger edge set
        let s = sys("a2=0 -> 1\na2=1 -> 2\na1=0 & a3=0 -> 3\na1=1 & a4=0 -> 4\na1=2 & a5=0 -> 5");
        assert_eq!(names(&greedy_cover(&s).unwrap()), "a1 a2");
        let s = sys("a2=0 -> 1\na2=1 -> 2\na1=0 & a3=0 -> 3");
        assert_eq!(names(&greedy_cover(&s).unwrap()), "a2 a1");
    }

    #[test]
    fn rule_cover_examples() {
        assert_eq!(names(&rule_cover(&sys("a1=0 & a2=1 -> 1")).unwrap()), "a1 a2");
        assert_eq!(names(&rule_cover(&sys("a1=0 -> 1\na1=1 -> 2")).unwrap()), "a1");
        assert_eq!(
            names(&rule_cover(&sys("a1=0 -> 1\na2=0 & a3=0 -> 2")).unwrap()),
            "a1 a2 a3"
        );
    }

    #[test]
    fn heuristics_reject_attributeless_systems() {
        assert_eq!(greedy_cover(&sys("-> 1")), Err(Error::NoAttributes));
        assert_eq!(rule_cover(&sys("-> 1\n-> 2")), Err(Error::NoAttributes));
    }

    #[test]
    fn empty_lhs_rules_are_ignored() {
        let s = sys("-> 4\na3=1 -> 1");
        assert_eq!(names(&greedy_cover(&s).unwrap()), "a3");
        assert_eq!(names(&rule_cover(&s).unwrap()), "a3");
    }

    #[test]
    fn exact_examples() {
        let (c, beta) = exact_min_cover(&sys("-> 1"), CoverBudget::default()).unwrap();
        assert!(c.is_empty());
        assert_eq!(beta, 0);

        let (c, beta) = exact_min_cover(&sys("a1=0 -> 1\na2=0 -> 2"), CoverBudget::default()).unwrap();
        assert_eq!((names(&c).as_str(), beta), ("a1 a2", 2));

        let (c, beta) = exact_min_cover(
            &sys("a1=0 & a2=0 -> 1\na2=0 & a3=0 -> 2"),
            CoverBudget::default(),
        )
        .unwrap();
        assert_eq!((names(&c).as_str(), beta), ("a2", 1));
    }

    #[test]
    fn exact_prefers_lexicographically_smallest() {
        // {a1,a3} and {a2,a4} are both minimum; also {a1,a4}, {a2,a3}
        let s = sys("a1=0 & a2=0 -> 1\na3=0 & a4=0 -> 2");
        let (c, _) = exact_min_cover(&s, CoverBudget::default()).unwrap();
        assert_eq!(names(&c), "a1 a3");
    }

    #[test]
    fn exact_respects_budget() {
        let text: String = (1..=5).map(|i| format!("a{i}=0 -> {i}\n")).collect();
        let err = exact_min_cover(&sys(&text), CoverBudget { max_attrs: 4 }).unwrap_err();
        assert_eq!(
            err,
            Error::BudgetExceeded {
                dimension: "n(S)",
                actual: 5,
                limit: 4
            }
        );
    }

    #[test]
    fn exact_matches_subset_enumeration() {
        // brute force over every subset, independent of the pruned search
        let s = sys("a1=0 & a2=0 -> 1\na2=1 & a5=0 -> 2\na3=0 & a4=0 -> 3\na4=1 & a5=1 -> 4\na6=0 -> 5");
        let g = hypergraph(&s);
        let nodes: Vec<AttributeId> = g.nodes.iter().copied().collect();
        let best = (0u32..1 << nodes.len())
            .filter(|m| {
                let set = (0..nodes.len())
                    .filter(|i| m >> i & 1 == 1)
                    .map(|i| nodes[i])
                    .collect();
                g.is_cover(&set)
            })
            .map(u32::count_ones)
            .min()
            .unwrap();
        let (_, beta) = exact_min_cover(&s, CoverBudget::default()).unwrap();
        assert_eq!(beta as u32, best);
        assert!(greedy_cover(&s).unwrap().len() >= beta);
        assert!(rule_cover(&s).unwrap().len() >= beta);
    }
}
