//! Simulating decision trees over systems of decision rules.
//!
//! Given a rule system `S` and one input tuple, [`simulate::simulate_ear`]
//! reproduces the queries a decision tree for the "all realizable rules"
//! problem would make, round by round, without building the tree. The
//! [`exact`] module holds brute-force oracles (minimum depth, lower bounds)
//! against which the simulation is checked on small systems.
//!
//! ```
//! use dtsim::{parse_tuple, simulate_ear, CoverStrategy, RuleSystem};
//!
//! let s: RuleSystem = "a1=0 & a2=1 -> 1\na1=1 -> 2".parse()?;
//! let t = parse_tuple(&s, "a1=1,a2=*")?;
//! let r = simulate_ear(&s, &t, CoverStrategy::Greedy)?;
//! assert_eq!(r.answer.into_iter().collect::<Vec<_>>(), vec![1]);
//! # Ok::<(), dtsim::Error>(())
//! ```

pub mod cli;
pub mod covers;
pub mod error;
pub mod exact;
pub mod gen;
pub mod io;
pub mod rules;
pub mod simulate;
pub mod suite;
pub mod transform;

pub use covers::{exact_min_cover, greedy_cover, rule_cover, CoverBudget, CoverStrategy};
pub use error::{Error, Result};
pub use io::{parse_rules, parse_tuple, serialize_rules, serialize_tuple};
pub use exact::{exact_min_depth, verify_bounds, BoundReport, ExactSolver, SearchBudget};
pub use rules::{
    realizable_rules, AttributeId, DecisionRule, EquationSystem, ExtendedTuple, ExtendedValue,
    Measures, RuleId, RuleSystem,
};
pub use simulate::{simulate_ear, SimulationResult, ValueProvider};
pub use transform::{hypergraph, restrict, s_max, Hypergraph, NodeCover, RestrictedSystem};
