//! JSON input and output formats.
//!
//! Cyclotomic entries are coefficient-list strings such as `"[1, 1]"`
//! (`1 + q` at `N = 3`) and rationals are strings such as `"3/7"`, so nothing
//! passes through floating point. A bare rational string is accepted wherever
//! a cyclotomic entry is expected and read as a constant.
//!
//! * complex: `{"N":5,"lo":0,"hi":4,"ranks":[...],"borders":{"1":[["[1,0,0,0]"]]}}`
//! * simplicial: `{"cells":{"0":["v0","v1"],"1":["e"]},"faces":{"1":{"e":["v1","v0"]}}}`,
//!   optionally with `"truncated": true` and, for a pair, `"subcomplex": [...]`
//! * affine chain: `{"d":2,"degree":1,"terms":[{"coeff":"[1,0]","vertices":[["0","0"],["1/2","1"]]}]}`

use std::collections::BTreeMap;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::affine::{AffineChain, AffineSimplex};
use crate::cyclotomic::{CyclotomicRational, Order};
use crate::error::{Error, Result};
use crate::ncomplex::{Degree, GradedNComplex};
use crate::pairs::SimplicialPair;
use crate::simplicial::SemiSimplicialSet;
use crate::Matrix;

/// Reads a cyclotomic entry at a known order.
pub fn parse_entry(order: Order, s: &str) -> Result<CyclotomicRational> {
    if s.trim_start().starts_with('[') {
        let x: CyclotomicRational = s.parse()?;
        if x.order() != order {
            return Err(Error::Parse(format!(
                "entry `{s}` has {} coefficients, expected {} for N = {order}",
                x.coeffs().len(),
                order.dim()
            )));
        }
        Ok(x)
    } else {
        let r = parse_rational(s)?;
        Ok(CyclotomicRational::constant(order, r))
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational `{s}`")))
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    #[serde(rename = "N")]
    pub order: u32,
    pub lo: Degree,
    pub hi: Degree,
    pub ranks: Vec<usize>,
    #[serde(default)]
    pub borders: BTreeMap<String, Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncated: Option<bool>,
}

impl ComplexFile {
    pub fn into_complex(self) -> Result<GradedNComplex> {
        let order = Order::new(self.order)?;
        if self.hi - self.lo + 1 != self.ranks.len() as Degree {
            return Err(Error::Shape(format!(
                "window [{}, {}] needs {} ranks, got {}",
                self.lo,
                self.hi,
                self.hi - self.lo + 1,
                self.ranks.len()
            )));
        }
        let mut borders = BTreeMap::new();
        for (key, rows) in self.borders {
            let d: Degree = key
                .parse()
                .map_err(|_| Error::Parse(format!("border key `{key}` is not a degree")))?;
            let cols = if d >= self.lo && d <= self.hi {
                self.ranks[(d - self.lo) as usize]
            } else {
                0
            };
            let rows = rows
                .iter()
                .map(|r| r.iter().map(|s| parse_entry(order, s)).collect())
                .collect::<Result<Vec<Vec<_>>>>()?;
            borders.insert(d, Matrix::from_rows(order, cols, rows)?);
        }
        GradedNComplex::new_validated(order, self.lo, self.ranks, borders, self.truncated.unwrap_or(false))
    }

    pub fn from_complex(c: &GradedNComplex) -> Self {
        let borders = c
            .degrees()
            .filter(|&d| c.rank(d) > 0 && c.rank(d - 1) > 0)
            .map(|d| {
                let rows = c
                    .border(d)
                    .to_rows()
                    .into_iter()
                    .map(|r| r.iter().map(ToString::to_string).collect())
                    .collect();
                (d.to_string(), rows)
            })
            .collect();
        ComplexFile {
            order: c.order().get(),
            lo: c.lo(),
            hi: c.hi(),
            ranks: c.ranks().to_vec(),
            borders,
            truncated: c.truncated().then_some(true),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimplicialFile {
    pub cells: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    pub faces: BTreeMap<String, BTreeMap<String, Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncated: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subcomplex: Option<Vec<String>>,
}

fn dimension_key(key: &str) -> Result<usize> {
    key.parse()
        .map_err(|_| Error::Parse(format!("dimension key `{key}` is not a natural number")))
}

impl SimplicialFile {
    pub fn into_set(&self) -> Result<SemiSimplicialSet> {
        let mut by_dim = BTreeMap::new();
        for (key, names) in &self.cells {
            by_dim.insert(dimension_key(key)?, names.clone());
        }
        let top = by_dim.keys().next_back().copied().unwrap_or(0);
        let cells = (0..=top)
            .map(|n| by_dim.remove(&n).unwrap_or_default())
            .collect();
        let faces = self
            .faces
            .iter()
            .map(|(k, v)| Ok((dimension_key(k)?, v.clone())))
            .collect::<Result<BTreeMap<_, _>>>()?;
        SemiSimplicialSet::from_named(cells, &faces, self.truncated.unwrap_or(false))
    }

    pub fn from_set(x: &SemiSimplicialSet) -> Self {
        let cells = x
            .all_cells()
            .iter()
            .enumerate()
            .map(|(n, names)| (n.to_string(), names.clone()))
            .collect();
        let faces = (1..x.all_cells().len())
            .map(|n| {
                let table = (0..x.cell_count(n as Degree))
                    .map(|c| {
                        let images = x.face_names(n, c).into_iter().map(str::to_string).collect();
                        (x.cell_name(n, c).to_string(), images)
                    })
                    .collect();
                (n.to_string(), table)
            })
            .collect();
        SimplicialFile {
            cells,
            faces,
            truncated: x.truncated().then_some(true),
            subcomplex: None,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AffineTermFile {
    pub coeff: String,
    pub vertices: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AffineChainFile {
    /// Optional when some coefficient is a coefficient list.
    #[serde(rename = "N", default, skip_serializing_if = "Option::is_none")]
    pub order: Option<u32>,
    pub d: usize,
    pub degree: Degree,
    pub terms: Vec<AffineTermFile>,
}

impl AffineChainFile {
    pub fn into_chain(&self, default_order: Option<Order>) -> Result<AffineChain> {
        let inferred = self
            .terms
            .iter()
            .find(|t| t.coeff.trim_start().starts_with('['))
            .map(|t| t.coeff.parse::<CyclotomicRational>().map(|c| c.order()))
            .transpose()?;
        let order = match (self.order.map(Order::new).transpose()?, inferred, default_order) {
            (Some(o), _, _) | (None, Some(o), _) | (None, None, Some(o)) => o,
            (None, None, None) => {
                return Err(Error::Parse(
                    "cannot tell N: give \"N\" or a coefficient list".into(),
                ))
            }
        };
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let coeff = parse_entry(order, &t.coeff)?;
                let vertices = t
                    .vertices
                    .iter()
                    .map(|v| v.iter().map(|x| parse_rational(x)).collect())
                    .collect::<Result<Vec<Vec<_>>>>()?;
                Ok((coeff, AffineSimplex::new(vertices)?))
            })
            .collect::<Result<Vec<_>>>()?;
        AffineChain::from_terms(order, self.degree, self.d, terms)
    }

    pub fn from_chain(c: &AffineChain) -> Self {
        AffineChainFile {
            order: Some(c.order().get()),
            d: c.ambient(),
            degree: c.degree(),
            terms: c
                .terms()
                .iter()
                .map(|(s, a)| AffineTermFile {
                    coeff: a.to_string(),
                    vertices: s
                        .vertices()
                        .iter()
                        .map(|v| v.iter().map(ToString::to_string).collect())
                        .collect(),
                })
                .collect(),
        }
    }
}

/// Any of the accepted input documents.
#[derive(Clone, Debug)]
pub enum Document {
    Complex(GradedNComplex),
    Simplicial(SemiSimplicialSet),
    Pair(SimplicialPair),
    AffineChain(AffineChain),
}

/// Parses a document, telling the kinds apart by their keys.
pub fn parse_document(text: &str, order: Option<Order>) -> Result<Document> {
    let value: Value = serde_json::from_str(text).map_err(json_error)?;
    let Some(obj) = value.as_object() else {
        return Err(Error::Parse("expected a JSON object at the top level".into()));
    };
    if obj.contains_key("ranks") {
        let file: ComplexFile = serde_json::from_value(value).map_err(json_error)?;
        Ok(Document::Complex(file.into_complex()?))
    } else if obj.contains_key("cells") {
        let file: SimplicialFile = serde_json::from_value(value).map_err(json_error)?;
        let x = file.into_set()?;
        match &file.subcomplex {
            Some(sub) => Ok(Document::Pair(SimplicialPair::new(x, sub)?)),
            None => Ok(Document::Simplicial(x)),
        }
    } else if obj.contains_key("terms") {
        let file: AffineChainFile = serde_json::from_value(value).map_err(json_error)?;
        Ok(Document::AffineChain(file.into_chain(order)?))
    } else {
        Err(Error::Parse(
            "unrecognised document: expected \"ranks\", \"cells\" or \"terms\"".into(),
        ))
    }
}

pub fn complex_to_json(c: &GradedNComplex) -> String {
    serde_json::to_string_pretty(&ComplexFile::from_complex(c)).expect("serializable")
}

pub fn simplicial_to_json(x: &SemiSimplicialSet) -> String {
    serde_json::to_string_pretty(&SimplicialFile::from_set(x)).expect("serializable")
}

pub fn affine_chain_to_json(c: &AffineChain) -> String {
    serde_json::to_string_pretty(&AffineChainFile::from_chain(c)).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncomplex::build_point_complex;

    #[test]
    fn simplicial_example_parses() {
        let text = r#"{"cells":{"0":["v0","v1"],"1":["e"]},"faces":{"1":{"e":["v1","v0"]}}}"#;
        let Document::Simplicial(x) = parse_document(text, None).unwrap() else {
            panic!("expected a simplicial set");
        };
        assert_eq!(x.face_names(1, 0), vec!["v1", "v0"]);
        assert!(!x.truncated());
    }

    #[test]
    fn pair_example_parses() {
        let text = r#"{"cells":{"0":["v0","v1"],"1":["e"]},"faces":{"1":{"e":["v1","v0"]}},"subcomplex":["v0"]}"#;
        assert!(matches!(parse_document(text, None).unwrap(), Document::Pair(_)));
        let open = r#"{"cells":{"0":["v0","v1"],"1":["e"]},"faces":{"1":{"e":["v1","v0"]}},"subcomplex":["e"]}"#;
        assert!(matches!(
            parse_document(open, None),
            Err(Error::NotFaceClosed { .. })
        ));
    }

    #[test]
    fn affine_example_parses() {
        let text = r#"{"d":2,"degree":1,"terms":[{"coeff":"[1,0]","vertices":[["0","0"],["1/2","1"]]}]}"#;
        let Document::AffineChain(c) = parse_document(text, None).unwrap() else {
            panic!("expected an affine chain");
        };
        assert_eq!(c.order().get(), 3);
        assert_eq!(c.len(), 1);
        let back = affine_chain_to_json(&c);
        let Document::AffineChain(again) = parse_document(&back, None).unwrap() else {
            panic!();
        };
        assert_eq!(again, c);
        let bare = r#"{"d":1,"degree":0,"terms":[{"coeff":"2","vertices":[["0"]]}]}"#;
        assert!(parse_document(bare, None).is_err());
        assert!(parse_document(bare, Some(Order::new(5).unwrap())).is_ok());
    }

    #[test]
    fn complex_round_trip() {
        let c = build_point_complex(Order::new(5).unwrap(), 6);
        let text = complex_to_json(&c);
        let Document::Complex(back) = parse_document(&text, None).unwrap() else {
            panic!();
        };
        assert_eq!(back, c);
    }

    #[test]
    fn complex_errors() {
        let bad_power = r#"{"N":2,"lo":0,"hi":2,"ranks":[1,1,1],"borders":{"1":[["1"]],"2":[["1"]]}}"#;
        assert!(matches!(parse_document(bad_power, None), Err(Error::Precondition(_))));
        let wrong_len = r#"{"N":5,"lo":0,"hi":1,"ranks":[1,1],"borders":{"1":[["[1,0]"]]}}"#;
        assert!(matches!(parse_document(wrong_len, None), Err(Error::Parse(_))));
        let err = parse_document("", None).unwrap_err().to_string();
        assert!(err.contains("line 1"), "{err}");
        assert!(parse_document("{\"x\":1}", None).is_err());
    }

    #[test]
    fn simplicial_round_trip() {
        let x = SemiSimplicialSet::simplex_boundary(3);
        let Document::Simplicial(back) = parse_document(&simplicial_to_json(&x), None).unwrap() else {
            panic!();
        };
        assert_eq!(back, x);
        let p = SemiSimplicialSet::point(4);
        let Document::Simplicial(back) = parse_document(&simplicial_to_json(&p), None).unwrap() else {
            panic!();
        };
        assert!(back.truncated());
    }
}
