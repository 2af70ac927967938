//! Inequality rows: both sides of a bound evaluated on a concrete input.
//!
//! Rows never fail a run. Many of the bounds only have to hold for
//! hypothetical extremal graphs, so a violated row on a real input is data.

use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = ">")]
    Gt,
}

impl Relation {
    pub fn eval(self, lhs: Rational, rhs: Rational) -> bool {
        match self {
            Relation::Lt => lhs < rhs,
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Gt => lhs > rhs,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Lt => "<",
            Relation::Le => "<=",
            Relation::Eq => "=",
            Relation::Ge => ">=",
            Relation::Gt => ">",
        })
    }
}

fn ratio_str<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagnosticRow {
    pub name: &'static str,
    /// The vertex, edge or pair the row was evaluated at, e.g. `"v=3"`.
    pub subject: String,
    #[serde(serialize_with = "ratio_str")]
    pub lhs: Rational,
    pub relation: Relation,
    #[serde(serialize_with = "ratio_str")]
    pub rhs: Rational,
    pub holds: bool,
}

impl DiagnosticRow {
    pub fn new(
        name: &'static str,
        subject: impl Into<String>,
        lhs: impl Into<Rational>,
        relation: Relation,
        rhs: impl Into<Rational>,
    ) -> Self {
        let (lhs, rhs) = (lhs.into(), rhs.into());
        DiagnosticRow {
            name,
            subject: subject.into(),
            lhs,
            relation,
            rhs,
            holds: relation.eval(lhs, rhs),
        }
    }
}

impl fmt::Display for DiagnosticRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}]: {} {} {} ({})",
            self.name,
            self.subject,
            self.lhs,
            self.relation,
            self.rhs,
            if self.holds { "holds" } else { "violated" }
        )
    }
}

pub fn int(v: impl TryInto<i64>) -> Rational {
    Rational::from_integer(v.try_into().unwrap_or_else(|_| panic!("value out of i64 range")))
}
