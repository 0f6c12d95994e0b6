//! Exact oracles: minimum decision tree depth `h_EAR(S)` by memoized minimax
//! search, the bound report built on top of it, and exhaustive enumeration
//! of small rule systems.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use itertools::Itertools;
use serde::Serialize;

use crate::covers::{exact_min_cover, greedy_cover, CoverBudget, CoverStrategy};
use crate::error::{Error, Result};
use crate::rules::{
    realizable_rules, AttributeId, DecisionRule, EquationSystem, ExtendedTuple, ExtendedValue,
    Measures, RuleId, RuleSet, RuleSystem,
};
use crate::simulate::{simulate_ear, SimulationResult};
use crate::transform::{restrict, restrict_rules, s_max};

/// Which values a search node branches on after querying `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BranchDomain {
    /// `EV_C(a)` of the current restricted system `C`.
    #[default]
    Current,
    /// `EV_S(a)` of the system the search started from.
    Original,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_attrs: usize,
    pub max_rules: usize,
    pub max_values: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_attrs: 8,
            max_rules: 10,
            max_values: 3,
        }
    }
}

impl SearchBudget {
    pub fn check(&self, rules: &[DecisionRule]) -> Result<()> {
        let mut values: BTreeMap<AttributeId, BTreeSet<u32>> = BTreeMap::new();
        for r in rules {
            for &(a, v) in r.lhs() {
                values.entry(a).or_default().insert(v);
            }
        }
        let k = values.values().map(BTreeSet::len).max().unwrap_or(0);
        let dims = [
            ("n(S)", values.len(), self.max_attrs),
            ("|S|", rules.len(), self.max_rules),
            ("k(S)", k, self.max_values),
        ];
        for (dimension, actual, limit) in dims {
            if actual > limit {
                return Err(Error::BudgetExceeded {
                    dimension,
                    actual,
                    limit,
                });
            }
        }
        Ok(())
    }
}

type CanonicalKey = Vec<(Vec<(AttributeId, u32)>, u32)>;

fn canonical_key(rules: &[DecisionRule]) -> CanonicalKey {
    let mut key: CanonicalKey = rules.iter().map(|r| (r.lhs().to_vec(), r.rhs())).collect();
    key.sort_unstable();
    key
}

fn value_sets(rules: &[DecisionRule]) -> BTreeMap<AttributeId, BTreeSet<u32>> {
    let mut values: BTreeMap<AttributeId, BTreeSet<u32>> = BTreeMap::new();
    for r in rules {
        for &(a, v) in r.lhs() {
            values.entry(a).or_default().insert(v);
        }
    }
    values
}

/// Minimax search for `h_EAR`. The memo table persists across calls on the
/// same solver, so checking many restrictions of one system is cheap.
#[derive(Debug, Default)]
pub struct ExactSolver {
    budget: SearchBudget,
    memoize: bool,
    domain: BranchDomain,
    memo: HashMap<CanonicalKey, usize>,
    root_values: BTreeMap<AttributeId, BTreeSet<u32>>,
}

impl ExactSolver {
    pub fn new(budget: SearchBudget) -> Self {
        ExactSolver {
            budget,
            memoize: true,
            ..Default::default()
        }
    }

    pub fn with_memoization(mut self, on: bool) -> Self {
        self.memoize = on;
        self
    }

    pub fn with_domain(mut self, domain: BranchDomain) -> Self {
        self.domain = domain;
        self
    }

    pub fn budget(&self) -> SearchBudget {
        self.budget
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// `h_EAR` of a possibly empty system.
    pub fn min_depth<S: RuleSet + ?Sized>(&mut self, system: &S) -> Result<usize> {
        let rules = system.rule_slice();
        self.budget.check(rules)?;
        if self.domain == BranchDomain::Original {
            // the branching domain depends on the root, so cached depths do not transfer
            self.memo.clear();
            self.root_values = value_sets(rules);
        }
        Ok(self.solve(rules))
    }

    fn solve(&mut self, rules: &[DecisionRule]) -> usize {
        if rules.iter().all(DecisionRule::is_empty) {
            return 0;
        }
        let key = self.memoize.then(|| canonical_key(rules));
        if let Some(&h) = key.as_ref().and_then(|k| self.memo.get(k)) {
            return h;
        }
        let values = value_sets(rules);
        let mut best = usize::MAX;
        for (&attr, current) in &values {
            let domain: Vec<ExtendedValue> = match self.domain {
                BranchDomain::Current => current.iter(),
                BranchDomain::Original => self.root_values[&attr].iter(),
            }
            .copied()
            .map(ExtendedValue::Concrete)
            .chain(std::iter::once(ExtendedValue::Star))
            .collect();
            let mut worst = 0;
            for value in domain {
                let alpha = BTreeMap::from([(attr, value)]);
                let sub = restrict_rules(rules, &alpha);
                worst = worst.max(self.solve(&sub));
                if worst + 1 >= best {
                    break;
                }
            }
            best = best.min(worst + 1);
            if best == 1 {
                break;
            }
        }
        if let Some(k) = key {
            self.memo.insert(k, best);
        }
        best
    }
}

/// `h_EAR(S)` with a fresh memo table.
pub fn exact_min_depth<S: RuleSet + ?Sized>(system: &S, budget: SearchBudget) -> Result<usize> {
    ExactSolver::new(budget).min_depth(system)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    /// h ≥ β(S)
    pub lemma2: bool,
    /// h ≥ d(S)
    pub lemma3: bool,
    /// h ≥ ln|S^max| / ln(k+1)
    pub lemma4: bool,
    /// greedy depth ≤ h³ ln(k+1) + h on every tuple
    pub theorem1: bool,
    /// every greedy round queries at most h² ln(k+1) + 1 attributes
    pub round_size: bool,
    /// rounds ≤ d(S), no attribute queried twice, d strictly decreasing
    pub round_discipline: bool,
    /// both strategies return exactly the realizable rules
    pub answers: bool,
}

impl Verdicts {
    pub fn all(&self) -> bool {
        self.lemma2
            && self.lemma3
            && self.lemma4
            && self.theorem1
            && self.round_size
            && self.round_discipline
            && self.answers
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub h_exact: usize,
    pub beta: usize,
    pub d: usize,
    pub k: usize,
    pub smax_size: usize,
    pub lb_cover: usize,
    pub lb_length: usize,
    pub lb_count: f64,
    pub ub_theorem1: f64,
    pub ub_round: f64,
    pub tuples: u64,
    pub max_depth_greedy: usize,
    pub max_depth_rule: usize,
    pub verdicts: Verdicts,
}

/// `h³ ln(k+1) + h`
pub fn theorem1_bound(h: usize, k: usize) -> f64 {
    let h = h as f64;
    h * h * h * ((k + 1) as f64).ln() + h
}

/// `h² ln(k+1) + 1`
pub fn round_bound(h: usize, k: usize) -> f64 {
    let h = h as f64;
    h * h * ((k + 1) as f64).ln() + 1.0
}

/// `ln|S^max| / ln(k+1)`, or 0 when n(S) = 0.
pub fn count_bound(smax_size: usize, k: usize) -> f64 {
    if k == 0 {
        return 0.0;
    }
    (smax_size as f64).ln() / ((k + 1) as f64).ln()
}

/// Checks that a simulation followed the round structure: no repeated
/// attribute, at most d(S) rounds, and d strictly decreasing round by round.
pub fn round_discipline_holds(result: &SimulationResult, d: usize) -> bool {
    let distinct = result.trace.iter().map(|q| q.attribute).collect::<BTreeSet<_>>().len()
        == result.trace.len();
    let decreasing = result.lengths.windows(2).all(|w| w[0] > w[1]);
    distinct
        && decreasing
        && result.rounds.len() <= d
        && result.lengths.first() == Some(&d)
        && result.rounds.iter().sum::<usize>() == result.depth
}

impl ExactSolver {
    /// Computes every lower and upper bound for `system` and checks them
    /// against the exact depth and against simulations on all of EV(S).
    pub fn verify_bounds(&mut self, system: &RuleSystem) -> Result<BoundReport> {
        let h = self.min_depth(system)?;
        let m = system.measures();
        let (_, beta) = exact_min_cover(system, CoverBudget::default())?;
        let smax_size = s_max(system).len();
        let lb_count = count_bound(smax_size, m.k);
        let ub_theorem1 = theorem1_bound(h, m.k);
        let ub_round = round_bound(h, m.k);

        let mut max_depth = [0usize; 2];
        let mut round_size = true;
        let mut discipline = true;
        let mut answers = true;
        let mut tuples = 0;
        if m.n > 0 {
            for t in system.extended_tuples() {
                tuples += 1;
                let expected = realizable_rules(system, &t);
                for (i, strategy) in CoverStrategy::ALL.into_iter().enumerate() {
                    let r = simulate_ear(system, &t, strategy)?;
                    max_depth[i] = max_depth[i].max(r.depth);
                    answers &= r.answer == expected;
                    discipline &= round_discipline_holds(&r, m.d);
                    if strategy == CoverStrategy::Greedy {
                        round_size &= r.rounds.iter().all(|&q| q as f64 <= ub_round);
                    }
                }
            }
        } else {
            tuples = 1;
        }

        let verdicts = Verdicts {
            lemma2: h >= beta,
            lemma3: h >= m.d,
            lemma4: m.n == 0 || h as f64 >= lb_count,
            theorem1: max_depth[0] as f64 <= ub_theorem1,
            round_size,
            round_discipline: discipline,
            answers,
        };
        Ok(BoundReport {
            h_exact: h,
            beta,
            d: m.d,
            k: m.k,
            smax_size,
            lb_cover: beta,
            lb_length: m.d,
            lb_count,
            ub_theorem1,
            ub_round,
            tuples,
            max_depth_greedy: max_depth[0],
            max_depth_rule: max_depth[1],
            verdicts,
        })
    }

    /// `h_EAR(S) ≥ h_EAR(S_α)`.
    pub fn check_lemma1(&mut self, system: &RuleSystem, alpha: &EquationSystem) -> Result<bool> {
        let m = system.measures();
        validate_alpha(&m, alpha)?;
        let restricted = restrict(system, alpha)?;
        let h = self.min_depth(system)?;
        let h_alpha = self.min_depth(&restricted)?;
        Ok(h >= h_alpha)
    }
}

fn validate_alpha(m: &Measures, alpha: &EquationSystem) -> Result<()> {
    alpha.as_map()?;
    for &(a, v) in alpha.iter() {
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
    Ok(())
}

pub fn verify_bounds(system: &RuleSystem, budget: SearchBudget) -> Result<BoundReport> {
    ExactSolver::new(budget).verify_bounds(system)
}

pub fn check_lemma1(system: &RuleSystem, alpha: &EquationSystem, budget: SearchBudget) -> Result<bool> {
    ExactSolver::new(budget).check_lemma1(system, alpha)
}

/// The tuple δ̄(r): r's values on A(r), `∗` on the rest of A(S).
pub fn lemma4_tuple(system: &RuleSystem, rule: &DecisionRule) -> ExtendedTuple {
    let values = system
        .attributes()
        .into_iter()
        .map(|a| {
            let v = rule
                .value_of(a)
                .map_or(ExtendedValue::Star, ExtendedValue::Concrete);
            (a, v)
        })
        .collect();
    ExtendedTuple::new(system, values).expect("δ̄(r) lies in EV(S)")
}

/// Whether `r` is the only rule of `S^max` realizable for δ̄(r).
pub fn check_lemma4_tuple(system: &RuleSystem, rule_id: RuleId) -> Result<bool> {
    let smax = s_max(system);
    let rule = smax.rule(rule_id).ok_or(Error::NotInSmax(rule_id))?;
    let tuple = lemma4_tuple(system, rule);
    Ok(realizable_rules(&smax, &tuple) == BTreeSet::from([rule_id]))
}

/// Lemma 5 bound: `|greedy(S^max)| ≤ β(S^max) ln|S^max| + 1`.
pub fn check_lemma5(system: &RuleSystem) -> Result<bool> {
    let smax = s_max(system);
    let greedy = greedy_cover(&smax)?;
    let (_, beta) = exact_min_cover(&smax, CoverBudget::default())?;
    Ok(greedy.len() as f64 <= beta as f64 * (smax.len() as f64).ln() + 1.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumParams {
    pub max_n: u32,
    pub max_rules: usize,
    pub max_len: usize,
    pub value_set_size: u32,
    pub cap: u64,
}

impl EnumParams {
    pub const DEFAULT_CAP: u64 = 1_000_000;

    pub fn new(max_n: u32, max_rules: usize, max_len: usize, value_set_size: u32) -> Self {
        EnumParams {
            max_n,
            max_rules,
            max_len,
            value_set_size,
            cap: Self::DEFAULT_CAP,
        }
    }
}

/// Every distinct rule over attributes `a1..a_max_n`, values and decisions in
/// `0..value_set_size`, sorted by (K(r), σ).
fn rule_universe(p: &EnumParams) -> Vec<(Vec<(AttributeId, u32)>, u32)> {
    let mut out = Vec::new();
    for len in 0..=p.max_len.min(p.max_n as usize) {
        for attrs in (1..=p.max_n).combinations(len) {
            let assignments: Vec<Vec<u32>> = if len == 0 {
                vec![vec![]]
            } else {
                itertools::repeat_n(0..p.value_set_size, len)
                    .multi_cartesian_product()
                    .collect()
            };
            for vals in assignments {
                let lhs: Vec<(AttributeId, u32)> =
                    attrs.iter().map(|&i| AttributeId(i)).zip(vals).collect();
                for sigma in 0..p.value_set_size {
                    out.push((lhs.clone(), sigma));
                }
            }
        }
    }
    out.sort();
    out
}

fn multichoose(n: u64, k: u64) -> Option<u64> {
    // C(n + k - 1, k)
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc.checked_mul(n + i)? / (i + 1);
    }
    Some(acc)
}

/// Lazily yields every rule system within `params`, as multisets of rules in
/// canonical order, smaller systems first.
pub struct SystemEnumerator {
    universe: Vec<(Vec<(AttributeId, u32)>, u32)>,
    max_rules: usize,
    current: Vec<usize>,
    total: u64,
}

impl SystemEnumerator {
    pub fn total(&self) -> u64 {
        self.total
    }
}

impl Iterator for SystemEnumerator {
    type Item = RuleSystem;

    fn next(&mut self) -> Option<RuleSystem> {
        let len = self.universe.len();
        if self.current.len() > self.max_rules {
            return None;
        }
        let rules = self
            .current
            .iter()
            .map(|&i| {
                let (lhs, rhs) = &self.universe[i];
                DecisionRule::new(lhs.clone(), *rhs).expect("distinct attributes")
            })
            .collect();
        let system = RuleSystem::new(rules).expect("nonempty");

        // advance to the next nondecreasing index sequence
        let m = self.current.len();
        match (0..m).rev().find(|&i| self.current[i] + 1 < len) {
            Some(i) => {
                let v = self.current[i] + 1;
                for x in &mut self.current[i..] {
                    *x = v;
                }
            }
            None => self.current = vec![0; m + 1],
        }
        Some(system)
    }
}

pub fn enumerate_systems(params: EnumParams) -> Result<SystemEnumerator> {
    if params.max_n == 0 || params.max_rules == 0 || params.value_set_size == 0 {
        return Err(Error::InvalidParams(
            "max_n, max_rules and value_set_size must all be at least 1".into(),
        ));
    }
    let universe = rule_universe(&params);
    let l = universe.len() as u64;
    let total = (1..=params.max_rules as u64)
        .try_fold(0u64, |acc, m| acc.checked_add(multichoose(l, m)?))
        .filter(|&t| t <= params.cap)
        .ok_or_else(|| {
            Error::InvalidParams(format!(
                "enumeration exceeds the cap of {} systems",
                params.cap
            ))
        })?;
    Ok(SystemEnumerator {
        universe,
        max_rules: params.max_rules,
        current: vec![0],
        total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn sys(text: &str) -> RuleSystem {
        text.parse().unwrap()
    }

    fn h(text: &str) -> usize {
        exact_min_depth(&sys(text), SearchBudget::default()).unwrap()
    }

    /// Independent oracle: does a tree of depth ≤ `depth` exist, searching
    /// over the original system with EV_S branching and no restriction.
    fn solvable(
        s: &RuleSystem,
        m: &Measures,
        alpha: &mut BTreeMap<AttributeId, ExtendedValue>,
        depth: usize,
    ) -> bool {
        let done = s.rules().iter().all(|r| {
            let inconsistent = r
                .lhs()
                .iter()
                .any(|&(a, v)| alpha.get(&a).is_some_and(|&x| x != ExtendedValue::Concrete(v)));
            let contained = r.lhs().iter().all(|&(a, v)| alpha.get(&a) == Some(&ExtendedValue::Concrete(v)));
            inconsistent || contained
        });
        if done {
            return true;
        }
        if depth == 0 {
            return false;
        }
        for &a in &m.attrs {
            if alpha.contains_key(&a) {
                continue;
            }
            let all = m.extended_values(a).unwrap().into_iter().all(|v| {
                alpha.insert(a, v);
                let ok = solvable(s, m, alpha, depth - 1);
                alpha.remove(&a);
                ok
            });
            if all {
                return true;
            }
        }
        false
    }

    fn brute_depth(s: &RuleSystem) -> usize {
        let m = s.measures();
        (0..=m.n)
            .find(|&d| solvable(s, &m, &mut BTreeMap::new(), d))
            .unwrap()
    }

    #[test]
    fn depth_examples() {
        assert_eq!(h("-> 1"), 0);
        assert_eq!(h("a1=0 & a2=1 -> 1\na1=1 -> 2"), 2);
        assert_eq!(h("a1=0 -> 1\na1=1 -> 2"), 1);
        assert_eq!(h("a1=0 -> 1\na2=0 -> 2"), 2);
    }

    #[test]
    fn empty_system_has_depth_zero() {
        let r = crate::transform::RestrictedSystem::empty();
        assert_eq!(exact_min_depth(&r, SearchBudget::default()).unwrap(), 0);
    }

    #[test]
    fn budget_names_dimension() {
        let text: String = (1..=9).map(|i| format!("a{i}=0 -> 0\n")).collect();
        let err = exact_min_depth(&sys(&text), SearchBudget::default()).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { dimension: "n(S)", actual: 9, limit: 8 }));

        let err = exact_min_depth(&sys("a1=0 -> 0\na1=1 -> 0\na1=2 -> 0\na1=3 -> 0"), SearchBudget::default())
            .unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { dimension: "k(S)", .. }));
    }

    #[test]
    fn minimax_matches_brute_force_on_enumeration() {
        let mut solver = ExactSolver::new(SearchBudget::default());
        for s in enumerate_systems(EnumParams::new(3, 2, 2, 2)).unwrap() {
            assert_eq!(solver.min_depth(&s).unwrap(), brute_depth(&s), "{s}");
        }
    }

    #[test]
    fn branch_domains_agree() {
        // includes restricted systems whose value sets shrank
        let mut cur = ExactSolver::new(SearchBudget::default());
        let mut orig = ExactSolver::new(SearchBudget::default()).with_domain(BranchDomain::Original);
        for s in enumerate_systems(EnumParams::new(2, 3, 2, 2)).unwrap() {
            assert_eq!(cur.min_depth(&s).unwrap(), orig.min_depth(&s).unwrap(), "{s}");
        }
        let s = sys("a1=0 & a2=1 -> 1\na1=1 & a3=0 -> 2\na2=0 & a3=1 -> 3\na1=2 -> 4");
        assert_eq!(cur.min_depth(&s).unwrap(), orig.min_depth(&s).unwrap());
        assert_eq!(cur.min_depth(&s).unwrap(), brute_depth(&s));
    }

    #[test]
    fn zero_depth_iff_no_attributes() {
        for s in enumerate_systems(EnumParams::new(2, 2, 1, 2)).unwrap() {
            let zero = exact_min_depth(&s, SearchBudget::default()).unwrap() == 0;
            assert_eq!(zero, s.all_empty_lhs());
        }
    }

    #[test]
    fn bound_report_examples() {
        let r = verify_bounds(&sys("a1=0 & a2=1 -> 1\na1=1 -> 2"), SearchBudget::default()).unwrap();
        assert_eq!((r.h_exact, r.beta, r.d, r.smax_size), (2, 1, 2, 1));
        assert_eq!(r.lb_count, 0.0);
        assert!((r.ub_theorem1 - (8.0 * 3f64.ln() + 2.0)).abs() < 1e-12);
        assert!((r.ub_theorem1 - 10.79).abs() < 0.01);
        assert!(r.verdicts.all());

        let r = verify_bounds(&sys("a1=0 -> 1\na2=0 -> 2"), SearchBudget::default()).unwrap();
        assert_eq!((r.h_exact, r.beta, r.d), (2, 2, 1));
        assert!(r.verdicts.all());

        let r = verify_bounds(&sys("-> 1"), SearchBudget::default()).unwrap();
        assert_eq!((r.h_exact, r.beta, r.d), (0, 0, 0));
        assert!(r.verdicts.all());
    }

    #[test]
    fn lemma1_examples() {
        let budget = SearchBudget::default();
        let s = sys("a1=0 & a2=1 -> 1\na1=1 -> 2");
        assert!(check_lemma1(&s, &EquationSystem::new(), budget).unwrap());
        let alpha: EquationSystem = [(AttributeId(1), 0.into())].into_iter().collect();
        assert!(check_lemma1(&s, &alpha, budget).unwrap());
        let r = restrict(&s, &alpha).unwrap();
        assert_eq!(exact_min_depth(&r, budget).unwrap(), 1);

        let s = sys("a1=0 -> 1");
        let alpha: EquationSystem = [(AttributeId(1), ExtendedValue::Star)].into_iter().collect();
        assert!(check_lemma1(&s, &alpha, budget).unwrap());

        let bad: EquationSystem = [(AttributeId(1), 5.into())].into_iter().collect();
        assert!(check_lemma1(&s, &bad, budget).is_err());
    }

    #[test]
    fn lemma4_examples() {
        let s = sys("a1=0 -> 1\na1=1 -> 2");
        assert_eq!(lemma4_tuple(&s, &s.rules()[0]).to_string(), "a1=0");
        assert!(check_lemma4_tuple(&s, 0).unwrap());
        assert!(check_lemma4_tuple(&sys("a1=0 & a2=1 -> 1"), 0).unwrap());
        let s = sys("a1=0 -> 1\na2=0 -> 2");
        assert_eq!(lemma4_tuple(&s, &s.rules()[0]).to_string(), "a1=0,a2=*");
        assert!(check_lemma4_tuple(&s, 0).unwrap());
        // rule 1 is shorter than d(S), so not in S^max
        let s = sys("a1=0 & a2=0 -> 1\na1=1 -> 2");
        assert_eq!(check_lemma4_tuple(&s, 1), Err(Error::NotInSmax(1)));
    }

    /// Closed-form count of multisets of size 1..=max_rules drawn from
    /// `rules` distinct rules; computed with f64 binomials as a cross-check.
    fn closed_form(rules: u64, max_rules: u64) -> u64 {
        (1..=max_rules)
            .map(|m| {
                let n = rules + m - 1;
                ((0..m).fold(1.0, |acc: f64, i| acc * (n - i) as f64 / (i + 1) as f64)).round() as u64
            })
            .sum()
    }

    #[test]
    fn enumeration_counts() {
        // one attribute, one value: rules "-> 0" and "a1=0 -> 0"
        let all: Vec<String> = enumerate_systems(EnumParams::new(1, 1, 1, 1))
            .unwrap()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(all, vec!["-> 0\n", "a1=0 -> 0\n"]);

        // distinct rules for n=3, len<=2, v=2: (1 + 3*2 + 3*4) * 2 = 38
        let e = enumerate_systems(EnumParams::new(3, 3, 2, 2)).unwrap();
        assert_eq!(e.total(), closed_form(38, 3));
        assert_eq!(e.total(), 10659);
        assert_eq!(e.count(), 10659);

        let e = enumerate_systems(EnumParams::new(2, 2, 2, 2)).unwrap();
        // (1 + 2*2 + 1*4) * 2 = 18
        assert_eq!(e.total(), closed_form(18, 2));
    }

    #[test]
    fn enumeration_has_no_duplicates() {
        let mut seen = HashSet::new();
        for s in enumerate_systems(EnumParams::new(2, 3, 2, 2)).unwrap() {
            assert!(seen.insert(canonical_key(s.rules())));
        }
    }

    #[test]
    fn enumeration_guards() {
        assert!(enumerate_systems(EnumParams::new(0, 1, 1, 1)).is_err());
        let mut p = EnumParams::new(3, 3, 2, 2);
        p.cap = 1000;
        assert!(matches!(enumerate_systems(p), Err(Error::InvalidParams(_))));
    }
}
