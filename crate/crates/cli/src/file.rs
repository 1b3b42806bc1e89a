//! JSON algebra files.
//!
//! ```json
//! {"name": "L", "even_basis": ["a"], "odd_basis": ["α", "β"],
//!  "brackets": [{"left": "β", "right": "β", "value": [{"basis": "a", "coeff": "1"}]}]}
//! ```
//!
//! Coefficients are strings holding exact rationals. Each unordered pair is
//! listed once with `left` no later than `right` in basis order (even block
//! first).

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::Path;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use superschur_core::linalg::{parse_scalar, zero_vec};
use superschur_core::LieSuperalgebra;

use crate::Failure;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub even_basis: Vec<String>,
    pub odd_basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub left: String,
    pub right: String,
    pub value: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub basis: String,
    pub coeff: String,
}

impl AlgebraFile {
    pub fn from_json(text: &str) -> Result<Self, Failure> {
        serde_json::from_str(text).map_err(|e| Failure::Parse(format!("invalid algebra file: {e}")))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn from_algebra(algebra: &LieSuperalgebra) -> Self {
        let brackets = algebra
            .stored_brackets()
            .iter()
            .map(|(&(i, j), v)| BracketEntry {
                left: algebra.basis_name(i).to_string(),
                right: algebra.basis_name(j).to_string(),
                value: v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| Term {
                        basis: algebra.basis_name(k).to_string(),
                        coeff: c.to_string(),
                    })
                    .collect(),
            })
            .collect();
        AlgebraFile {
            name: algebra.name().to_string(),
            even_basis: algebra.even_names().to_vec(),
            odd_basis: algebra.odd_names().to_vec(),
            brackets,
        }
    }

    pub fn to_algebra(&self) -> Result<LieSuperalgebra, Failure> {
        let mut index = HashMap::new();
        for (field, names, offset) in [
            ("even_basis", &self.even_basis, 0),
            ("odd_basis", &self.odd_basis, self.even_basis.len()),
        ] {
            for (k, name) in names.iter().enumerate() {
                if name.trim().is_empty() {
                    return Err(parse_err(format!("{field}[{k}]"), "empty basis name"));
                }
                if index.insert(name.as_str(), offset + k).is_some() {
                    return Err(parse_err(
                        format!("{field}[{k}]"),
                        format!("duplicate basis name {name:?}"),
                    ));
                }
            }
        }
        let dim = index.len();
        let lookup = |path: String, name: &str| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| parse_err(path, format!("unknown basis name {name:?}")))
        };

        let mut brackets = BTreeMap::new();
        for (b, entry) in self.brackets.iter().enumerate() {
            let i = lookup(format!("brackets[{b}].left"), &entry.left)?;
            let j = lookup(format!("brackets[{b}].right"), &entry.right)?;
            if i > j {
                return Err(parse_err(
                    format!("brackets[{b}]"),
                    format!(
                        "left {:?} comes after right {:?} in basis order",
                        entry.left, entry.right
                    ),
                ));
            }
            let mut v = zero_vec(dim);
            let mut used = vec![false; dim];
            for (t, term) in entry.value.iter().enumerate() {
                let path = format!("brackets[{b}].value[{t}]");
                let k = lookup(format!("{path}.basis"), &term.basis)?;
                if std::mem::replace(&mut used[k], true) {
                    return Err(parse_err(
                        path,
                        format!("basis {:?} listed twice", term.basis),
                    ));
                }
                v[k] =
                    parse_scalar(&term.coeff).map_err(|e| parse_err(format!("{path}.coeff"), e))?;
            }
            if brackets.insert((i, j), v).is_some() {
                return Err(parse_err(
                    format!("brackets[{b}]"),
                    format!("pair ({}, {}) listed twice", entry.left, entry.right),
                ));
            }
        }
        LieSuperalgebra::new(
            &self.name,
            self.even_basis.clone(),
            self.odd_basis.clone(),
            brackets,
        )
        .map_err(|e| Failure::Parse(e.to_string()))
    }
}

fn parse_err(path: String, msg: impl std::fmt::Display) -> Failure {
    Failure::Parse(format!("{path}: {msg}"))
}

pub fn read_algebra(path: &Path) -> Result<LieSuperalgebra, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    AlgebraFile::from_json(&text)?.to_algebra()
}
