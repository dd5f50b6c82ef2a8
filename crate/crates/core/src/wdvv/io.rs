//! The `known.json` input format.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{EqScalar, TruncatedSeries, VarSet};

/// How positive-degree parts of the step-(1) entries are obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PositiveDegree {
    /// Read from the entry series as given.
    #[default]
    Input,
    /// Only `s^0` is read; higher powers come from the closed forms.
    Geometric,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairValue {
    pub pair: [String; 2],
    pub value: EqScalar,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesTerm {
    pub s: u32,
    pub value: EqScalar,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryData {
    pub triple: [String; 3],
    pub series: Vec<SeriesTerm>,
}

impl EntryData {
    pub fn from_series(triple: [String; 3], s: &TruncatedSeries) -> Self {
        let series = s
            .terms()
            .map(|(e, c)| SeriesTerm { s: e[0], value: c.clone() })
            .collect();
        EntryData { triple, series }
    }

    /// Series truncated at `order`; terms beyond it are dropped.
    pub fn to_series(&self, order: u32) -> TruncatedSeries {
        let mut out = TruncatedSeries::zero(VarSet::S(1), vec![order]);
        for t in &self.series {
            out.add_term_truncating(vec![t.s], t.value.clone());
        }
        out
    }

    pub fn degree_zero(&self) -> EqScalar {
        self.series.iter().filter(|t| t.s == 0).map(|t| t.value.clone()).sum()
    }
}

/// Contents of `known.json`.
///
/// `pairs` absent means the geometric pairing; pairs not listed are zero.
/// `unknown` lists triples to leave unknown even if they would be seeded.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct KnownData {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairs: Option<Vec<PairValue>>,
    pub entries: Vec<EntryData>,
    /// Order up to which the listed series are exact.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s_order: Option<u32>,
    #[serde(default)]
    pub positive_degree: PositiveDegree,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub unknown: Vec<[String; 3]>,
}

impl KnownData {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Input(format!("known.json: {e}")))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}
