//! Text formats: rule files, tuple strings, JSON simulation results and
//! benchmark CSV rows.
//!
//! Rule file grammar, one rule per line, `#` starts a comment:
//!
//! ```text
//! rule := lhs "->" NAT | "->" NAT
//! lhs  := term (" & " term)*
//! term := "a" NAT "=" NAT
//! ```
//!
//! Tuple strings are `term ("," term)*` where a term is `a NAT = (NAT | *)`.

use std::collections::{BTreeMap, BTreeSet};
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rules::{AttributeId, DecisionRule, ExtendedTuple, ExtendedValue, RuleSystem};
use crate::simulate::{normalize_value, SimulationResult};

pub const RULE_GRAMMAR: &str = "\
rule  := lhs \"->\" NAT | \"->\" NAT
lhs   := term (\" & \" term)*
term  := \"a\" NAT \"=\" NAT
example: a1=0 & a2=1 -> 1";

pub const TUPLE_GRAMMAR: &str = "\
tuple := term (\",\" term)*
term  := \"a\" NAT \"=\" (NAT | \"*\")
example: a1=0,a2=*";

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str, line: usize) -> Self {
        Cursor { text, pos: 0, line }
    }

    fn error_at(&self, pos: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.text[..pos].chars().count() + 1,
            message: message.into(),
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        self.error_at(self.pos, message)
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.text.len()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str, what: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(format!("expected {what}")))
        }
    }

    fn nat(&mut self) -> Result<u32> {
        self.skip_ws();
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error("expected a natural number"));
        }
        let start = self.pos;
        let value = self.rest()[..digits]
            .parse()
            .map_err(|_| self.error_at(start, "number out of range"))?;
        self.pos += digits;
        Ok(value)
    }

    fn attribute(&mut self) -> Result<(AttributeId, usize)> {
        self.skip_ws();
        let start = self.pos;
        self.expect("a", "an attribute `a<NAT>`")?;
        if !self.rest().starts_with(|c: char| c.is_ascii_digit()) {
            return Err(self.error("expected an attribute index"));
        }
        Ok((AttributeId(self.nat()?), start))
    }
}

fn parse_rule_line(line: &str, line_no: usize) -> Result<Option<DecisionRule>> {
    let content = line.split('#').next().unwrap_or("");
    let mut cur = Cursor::new(content, line_no);
    if cur.at_end() {
        return Ok(None);
    }
    let mut lhs = Vec::new();
    let mut seen = BTreeSet::new();
    if !cur.eat("->") {
        loop {
            let (attr, start) = cur.attribute()?;
            if !seen.insert(attr) {
                return Err(cur.error_at(start, format!("repeated attribute {attr}")));
            }
            cur.expect("=", "`=`")?;
            lhs.push((attr, cur.nat()?));
            if cur.eat("&") {
                continue;
            }
            cur.expect("->", "`&` or `->`")?;
            break;
        }
    }
    let rhs = cur.nat()?;
    if !cur.at_end() {
        return Err(cur.error("expected end of line"));
    }
    DecisionRule::new(lhs, rhs).map(Some)
}

/// Parses a rule file. Rule ids follow line order.
pub fn parse_rules(text: &str) -> Result<RuleSystem> {
    let mut rules = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if let Some(rule) = parse_rule_line(line, i + 1)? {
            rules.push(rule);
        }
    }
    RuleSystem::new(rules)
}

impl FromStr for RuleSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_rules(s)
    }
}

/// Canonical rule-file text: one rule per line, attributes in increasing order.
pub fn serialize_rules(system: &RuleSystem) -> String {
    system.to_string()
}

/// Parses a tuple string into raw values; values are not checked against
/// V_S. Every attribute of A(S) must be assigned, and nothing else.
pub fn parse_raw_tuple(
    system: &RuleSystem,
    text: &str,
) -> Result<BTreeMap<AttributeId, ExtendedValue>> {
    let mut cur = Cursor::new(text, 1);
    let mut values = BTreeMap::new();
    let attrs = system.attributes();
    if !cur.at_end() {
        loop {
            let (attr, start) = cur.attribute()?;
            cur.expect("=", "`=`")?;
            let value = if cur.eat("*") {
                ExtendedValue::Star
            } else {
                ExtendedValue::Concrete(cur.nat()?)
            };
            if values.insert(attr, value).is_some() {
                return Err(cur.error_at(start, format!("repeated attribute {attr}")));
            }
            if !attrs.contains(&attr) {
                return Err(Error::UnknownAttribute(attr));
            }
            if cur.at_end() {
                break;
            }
            cur.expect(",", "`,` or end of input")?;
        }
    }
    if let Some(&missing) = attrs.iter().find(|a| !values.contains_key(a)) {
        return Err(Error::MissingAttribute(missing));
    }
    Ok(values)
}

/// Parses a tuple string into a tuple of EV(S), folding values outside
/// V_S(a) into `∗`.
pub fn parse_tuple(system: &RuleSystem, text: &str) -> Result<ExtendedTuple> {
    let raw = parse_raw_tuple(system, text)?;
    let normalized = raw
        .into_iter()
        .map(|(a, v)| Ok((a, normalize_value(system, a, v)?)))
        .collect::<Result<_>>()?;
    ExtendedTuple::new(system, normalized)
}

pub fn serialize_tuple(tuple: &ExtendedTuple) -> String {
    tuple.to_string()
}

pub fn simulation_json(result: &SimulationResult) -> String {
    serde_json::to_string_pretty(result).expect("serializable")
}

/// One benchmark CSV row.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub seed: u64,
    pub n: usize,
    pub d: usize,
    pub k: usize,
    pub rules: usize,
    pub tuple_id: usize,
    pub strategy: String,
    pub depth: usize,
    pub rounds: usize,
    pub h_exact: Option<usize>,
    pub ub_theorem1: Option<f64>,
    pub answer_size: usize,
}

pub const CSV_HEADER: [&str; 12] = [
    "seed",
    "n",
    "d",
    "k",
    "rules",
    "tuple_id",
    "strategy",
    "depth",
    "rounds",
    "h_exact",
    "ub_theorem1",
    "answer_size",
];

/// Writes `rows` as CSV with the fixed header.
pub fn write_csv<W: std::io::Write>(out: W, rows: &[BenchRow]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io_err = |e: csv::Error| Error::InvalidParams(format!("csv: {e}"));
    if rows.is_empty() {
        w.write_record(CSV_HEADER).map_err(io_err)?;
    }
    for row in rows {
        w.serialize(row).map_err(io_err)?;
    }
    w.flush()
        .map_err(|e| Error::InvalidParams(format!("csv: {e}")))?;
    Ok(())
}
