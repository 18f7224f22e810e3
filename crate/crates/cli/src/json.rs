//! Serialized forms for `--json`. Field order follows declaration order;
//! rationals are `num/den` strings and integers are decimal strings.

use std::collections::BTreeMap;

use quadec_core::rational::to_fraction_string;
use quadec_core::{format_poly, CaseTag, Decomposition, FinitenessVerdict};
use serde::Serialize;

#[derive(Serialize)]
pub struct DecompositionJson {
    pub g: String,
    pub h: String,
    pub case: &'static str,
    pub params: BTreeMap<&'static str, String>,
}

impl From<&Decomposition> for DecompositionJson {
    fn from(d: &Decomposition) -> Self {
        let mut params = BTreeMap::new();
        match &d.case {
            CaseTag::Cyclic(k) => {
                params.insert("d", k.to_string());
            }
            CaseTag::CaseFour(c) => {
                params.insert("c", to_fraction_string(c));
            }
            CaseTag::Trivial | CaseTag::SymmetricSquare | CaseTag::Generic => {}
        }
        Self {
            g: format_poly(&d.g),
            h: format_poly(&d.h),
            case: d.case.name(),
            params,
        }
    }
}

#[derive(Serialize)]
pub struct ConditionJson {
    pub name: String,
    pub ok: bool,
}

#[derive(Serialize)]
pub struct VerdictJson {
    pub status: &'static str,
    pub conditions: Vec<ConditionJson>,
}

impl From<&FinitenessVerdict> for VerdictJson {
    fn from(v: &FinitenessVerdict) -> Self {
        Self {
            status: v.status.name(),
            conditions: v
                .conditions
                .iter()
                .map(|c| ConditionJson { name: c.name.clone(), ok: c.satisfied })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct SolutionJson {
    pub x: String,
    pub y: String,
}

pub fn render<T: Serialize + ?Sized>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("plain data serializes");
    out.push('\n');
    out
}
