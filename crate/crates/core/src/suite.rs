//! Exhaustive verification suite: runs every oracle check over a stream of
//! rule systems and tallies violations per check.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::covers::CoverStrategy;
use crate::error::Result;
use crate::exact::{
    check_lemma4_tuple, check_lemma5, count_bound, round_bound, round_discipline_holds,
    theorem1_bound, ExactSolver, SearchBudget,
};
use crate::rules::{realizable_rules, EquationSystem, RuleSystem};
use crate::simulate::simulate_ear;
use crate::transform::{restrict, s_max};
use crate::covers::{exact_min_cover, CoverBudget};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub name: &'static str,
    pub cases: u64,
    pub violations: u64,
    /// False for checks reported for comparison only (the rule strategy
    /// carries no depth guarantee).
    pub required: bool,
}

impl CheckRow {
    pub fn passed(&self) -> bool {
        !self.required || self.violations == 0
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub systems: u64,
    pub checks: Vec<CheckRow>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckRow::passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckRow> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "systems checked: {}", self.systems)?;
        writeln!(f, "{:<34} {:>10} {:>10}  result", "check", "cases", "violations")?;
        for c in &self.checks {
            let verdict = match (c.passed(), c.required) {
                (_, false) => "info",
                (true, true) => "PASS",
                (false, true) => "FAIL",
            };
            writeln!(f, "{:<34} {:>10} {:>10}  {verdict}", c.name, c.cases, c.violations)?;
        }
        Ok(())
    }
}

pub const ANSWERS_GREEDY: &str = "answers = realizable (greedy)";
pub const ANSWERS_RULE: &str = "answers = realizable (rule)";
pub const THEOREM1_GREEDY: &str = "theorem 1 depth bound (greedy)";
pub const THEOREM1_RULE: &str = "theorem 1 depth bound (rule)";
pub const ROUND_SIZE: &str = "per-round query bound (greedy)";
pub const DISCIPLINE: &str = "round discipline (both)";
pub const LEMMA1: &str = "lemma 1 monotonicity";
pub const LEMMA2: &str = "lemma 2 h >= beta";
pub const LEMMA3: &str = "lemma 3 h >= d";
pub const LEMMA4: &str = "lemma 4 h >= ln|S^max|/ln(k+1)";
pub const LEMMA4_TUPLE: &str = "lemma 4 tuple construction";
pub const LEMMA5: &str = "lemma 5 greedy cover size";

#[derive(Debug, Clone, Copy)]
pub struct SuiteOptions {
    pub budget: SearchBudget,
    /// Check Lemma 1 against every consistent α over A(S) with EV_S values.
    pub all_alphas: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            budget: SearchBudget::default(),
            all_alphas: true,
        }
    }
}

#[derive(Default)]
struct Tally(BTreeMap<&'static str, (u64, u64)>);

impl Tally {
    fn record(&mut self, name: &'static str, ok: bool) {
        let e = self.0.entry(name).or_default();
        e.0 += 1;
        e.1 += u64::from(!ok);
    }
}

/// Every α over A(S): each attribute is either absent or set to a value of EV_S.
pub fn all_alphas(system: &RuleSystem) -> Vec<EquationSystem> {
    let m = system.measures();
    m.attrs
        .iter()
        .map(|&a| {
            std::iter::once(None)
                .chain(m.extended_values(a).unwrap().into_iter().map(move |v| Some((a, v))))
                .collect::<Vec<_>>()
        })
        .multi_cartesian_product()
        .map(|choice| choice.into_iter().flatten().collect())
        .collect()
}

pub fn run_suite<I>(systems: I, options: SuiteOptions) -> Result<SuiteReport>
where
    I: IntoIterator<Item = RuleSystem>,
{
    let mut solver = ExactSolver::new(options.budget);
    let mut tally = Tally::default();
    let mut count = 0;
    for system in systems {
        count += 1;
        check_system(&mut solver, &system, options, &mut tally)?;
    }
    let order = [
        ANSWERS_GREEDY,
        ANSWERS_RULE,
        THEOREM1_GREEDY,
        ROUND_SIZE,
        DISCIPLINE,
        LEMMA1,
        LEMMA2,
        LEMMA3,
        LEMMA4,
        LEMMA4_TUPLE,
        LEMMA5,
        THEOREM1_RULE,
    ];
    let checks = order
        .into_iter()
        .map(|name| {
            let (cases, violations) = tally.0.get(name).copied().unwrap_or_default();
            CheckRow {
                name,
                cases,
                violations,
                required: name != THEOREM1_RULE,
            }
        })
        .collect();
    Ok(SuiteReport {
        systems: count,
        checks,
    })
}

fn check_system(
    solver: &mut ExactSolver,
    system: &RuleSystem,
    options: SuiteOptions,
    tally: &mut Tally,
) -> Result<()> {
    let m = system.measures();
    let h = solver.min_depth(system)?;
    let (_, beta) = exact_min_cover(system, CoverBudget::default())?;
    let smax = s_max(system);

    tally.record(LEMMA2, h >= beta);
    tally.record(LEMMA3, h >= m.d);
    if m.n == 0 {
        return Ok(());
    }
    tally.record(LEMMA4, h as f64 >= count_bound(smax.len(), m.k));
    for r in smax.rules() {
        tally.record(LEMMA4_TUPLE, check_lemma4_tuple(system, r.id())?);
    }
    tally.record(LEMMA5, check_lemma5(system)?);

    let ub = theorem1_bound(h, m.k);
    let ub_round = round_bound(h, m.k);
    for t in system.extended_tuples() {
        let expected = realizable_rules(system, &t);
        for strategy in CoverStrategy::ALL {
            let r = simulate_ear(system, &t, strategy)?;
            let (answers, bound) = match strategy {
                CoverStrategy::Greedy => (ANSWERS_GREEDY, THEOREM1_GREEDY),
                CoverStrategy::Rule => (ANSWERS_RULE, THEOREM1_RULE),
            };
            tally.record(answers, r.answer == expected);
            tally.record(bound, r.depth as f64 <= ub);
            tally.record(DISCIPLINE, round_discipline_holds(&r, m.d));
            if strategy == CoverStrategy::Greedy {
                tally.record(ROUND_SIZE, r.rounds.iter().all(|&q| q as f64 <= ub_round));
            }
        }
    }

    if options.all_alphas {
        for alpha in all_alphas(system) {
            let restricted = restrict(system, &alpha)?;
            tally.record(LEMMA1, h >= solver.min_depth(&restricted)?);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{enumerate_systems, EnumParams};

    #[test]
    fn alphas_cover_every_partial_assignment() {
        let s: RuleSystem = "a1=0 & a2=1 -> 1\na1=1 -> 2".parse().unwrap();
        // (|EV(a1)| + 1) * (|EV(a2)| + 1) = 4 * 3
        let alphas = all_alphas(&s);
        assert_eq!(alphas.len(), 12);
        assert!(alphas.iter().any(EquationSystem::is_empty));
        assert!(alphas.iter().all(EquationSystem::is_consistent));
    }

    #[test]
    fn small_suite_passes() {
        let systems = enumerate_systems(EnumParams::new(2, 2, 2, 2)).unwrap();
        let report = run_suite(systems, SuiteOptions::default()).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(report.systems, 189);
        assert!(report.check(LEMMA1).unwrap().cases > report.systems);
    }
}
