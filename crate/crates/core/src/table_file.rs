//! On-disk form of a [`GenCharTable`].
//!
//! JSON layout:
//!
//! ```text
//! {"n": 3, "version": "1", "entries": [
//!   {"lambda": [3], "mu": [2], "class": {"type": [3], "mark": 3}, "value": "1"}, ...]}
//! ```
//!
//! Values are reduced fractions `"p/q"` with `q > 0`, or plain integers.
//! Entries are pair-major in the table's canonical order, so emitting a
//! parsed file reproduces it byte for byte.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::genchar::GenCharTable;
use crate::partitions::Partition;
use crate::permutations::MarkedClass;
use crate::Rational;

pub const FORMAT_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableFile {
    pub n: usize,
    pub version: String,
    pub entries: Vec<TableEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub lambda: Partition,
    pub mu: Partition,
    pub class: MarkedClass,
    pub value: String,
}

/// `"p/q"`, or `"p"` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Parses a value written by [`format_rational`]; anything not in that
/// canonical form is rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let r = Rational::from_str(s).map_err(|e| Error::InvalidTable(format!("value {s:?}: {e}")))?;
    if format_rational(&r) != s {
        return Err(Error::InvalidTable(format!("value {s:?} is not a reduced fraction")));
    }
    Ok(r)
}

impl TableFile {
    pub fn from_table(table: &GenCharTable) -> Self {
        let entries = table
            .entries()
            .map(|(lam, mu, class, v)| TableEntry {
                lambda: lam.clone(),
                mu: mu.clone(),
                class: class.clone(),
                value: format_rational(v),
            })
            .collect();
        TableFile { n: table.n(), version: FORMAT_VERSION.to_string(), entries }
    }

    /// Rebuilds the table, checking version, key coverage and order.
    pub fn to_table(&self) -> Result<GenCharTable> {
        if self.version != FORMAT_VERSION {
            return Err(Error::InvalidTable(format!("unsupported version {:?}", self.version)));
        }
        let mut pairs: Vec<(Partition, Partition)> = Vec::new();
        let mut classes: Vec<MarkedClass> = Vec::new();
        let mut values: Vec<Vec<Rational>> = Vec::new();
        for e in &self.entries {
            let pair = (e.lambda.clone(), e.mu.clone());
            if pairs.last() != Some(&pair) {
                pairs.push(pair);
                values.push(Vec::new());
            }
            let row = values.last_mut().expect("row pushed above");
            if pairs.len() == 1 {
                classes.push(e.class.clone());
            } else if classes.get(row.len()) != Some(&e.class) {
                return Err(Error::InvalidTable(format!("entry for {} out of order", e.class)));
            }
            row.push(parse_rational(&e.value)?);
        }
        GenCharTable::from_rows(self.n, pairs, classes, values)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("table file serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InvalidTable(e.to_string()))
    }

    /// CSV with columns `lambda,mu,type,mark,value`; partitions in their
    /// comma-separated text form, quoted.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["lambda", "mu", "type", "mark", "value"])
            .map_err(|e| Error::InvalidTable(e.to_string()))?;
        for e in &self.entries {
            w.write_record([
                e.lambda.to_string(),
                e.mu.to_string(),
                e.class.cycle_type.to_string(),
                e.class.mark.to_string(),
                e.value.clone(),
            ])
            .map_err(|e| Error::InvalidTable(e.to_string()))?;
        }
        let bytes = w.into_inner().map_err(|e| Error::InvalidTable(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv of ascii fields"))
    }
}
