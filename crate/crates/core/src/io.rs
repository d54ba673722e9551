//! JSON file formats for vertices, cubes, group elements and raw elements.
//!
//! Vertex file: `{"instance": "v", "elements": [...]}` or
//! `{"instance": "houghton", "n": 2, "elements": [...]}`. Cube files carry
//! `base` and `active` instead of `elements`; group files carry `element`.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::complex::Cube;
use crate::error::{Error, Result};
use crate::expansion::{validate_vertex, ExpansionInstance, Vertex};
use crate::houghton::{canonicalize_h, Domain, Houghton, HoughtonElement, HoughtonRawMap};
use crate::thompson::{canonicalize, PrefixMap, PrefixMapTable, ThompsonV, Word};

/// `v` or `houghton:N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InstanceSelector {
    V,
    Houghton(u32),
}

/// Number of branches when a Houghton input omits `n`.
pub const DEFAULT_N: u32 = 2;

impl InstanceSelector {
    /// `n` defaults to [`DEFAULT_N`] for `houghton`.
    pub fn from_tag(tag: &str, n: Option<u32>) -> Result<Self> {
        match (tag, n) {
            ("v", None) => Ok(InstanceSelector::V),
            ("v", Some(_)) => Err(Error::Parse("the v instance takes no parameter n".into())),
            ("houghton", None) => Ok(InstanceSelector::Houghton(DEFAULT_N)),
            ("houghton", Some(n)) if n >= 1 => Ok(InstanceSelector::Houghton(n)),
            ("houghton", _) => Err(Error::Parse("houghton needs n >= 1".into())),
            (other, _) => Err(Error::Parse(format!("unknown instance {other:?}"))),
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            InstanceSelector::V => "v",
            InstanceSelector::Houghton(_) => "houghton",
        }
    }

    pub fn n(&self) -> Option<u32> {
        match self {
            InstanceSelector::V => None,
            InstanceSelector::Houghton(n) => Some(*n),
        }
    }

    pub fn houghton(&self) -> Option<Houghton> {
        self.n().map(|n| Houghton::new(n).expect("selectors hold n >= 1"))
    }
}

impl FromStr for InstanceSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(':') {
            None => InstanceSelector::from_tag(s, None),
            Some((tag, n)) => {
                let n = n.parse().map_err(|_| Error::Parse(format!("bad instance parameter in {s:?}")))?;
                InstanceSelector::from_tag(tag, Some(n))
            }
        }
    }
}

impl fmt::Display for InstanceSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InstanceSelector::V => f.write_str("v"),
            InstanceSelector::Houghton(n) => write!(f, "houghton:{n}"),
        }
    }
}

pub fn read_json<T: DeserializeOwned>(path: impl AsRef<Path>) -> Result<T> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

pub fn write_json<T: Serialize>(path: impl AsRef<Path>, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

fn parse_value<T: DeserializeOwned>(value: &Value, what: &str) -> Result<T> {
    serde_json::from_value(value.clone()).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

fn parse_elements<I: ExpansionInstance>(inst: &I, value: &Value) -> Result<Vec<I::Element>> {
    let els: Vec<I::Element> = parse_value(value, "elements")?;
    for b in &els {
        inst.check_element(b)?;
    }
    Ok(els)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexFile {
    pub instance: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    pub elements: Value,
}

impl VertexFile {
    pub fn selector(&self) -> Result<InstanceSelector> {
        InstanceSelector::from_tag(&self.instance, self.n)
    }

    pub fn vertex<I: ExpansionInstance>(&self, inst: &I) -> Result<Vertex<I::Element>> {
        validate_vertex(inst, parse_elements(inst, &self.elements)?)
    }

    pub fn new<E: Serialize>(sel: InstanceSelector, v: &Vertex<E>) -> Self {
        VertexFile {
            instance: sel.tag().into(),
            n: sel.n(),
            elements: serde_json::to_value(v).expect("vertices serialize"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CubeFile {
    pub instance: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    pub base: Value,
    pub active: Value,
}

impl CubeFile {
    pub fn selector(&self) -> Result<InstanceSelector> {
        InstanceSelector::from_tag(&self.instance, self.n)
    }

    pub fn cube<I: ExpansionInstance>(&self, inst: &I) -> Result<Cube<I::Element>> {
        let base = validate_vertex(inst, parse_elements(inst, &self.base)?)?;
        Cube::new(inst, base, parse_elements(inst, &self.active)?)
    }

    pub fn new<E: Serialize>(sel: InstanceSelector, c: &Cube<E>) -> Self {
        CubeFile {
            instance: sel.tag().into(),
            n: sel.n(),
            base: serde_json::to_value(c.base()).expect("vertices serialize"),
            active: serde_json::to_value(c.active()).expect("elements serialize"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub instance: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    pub element: Value,
}

impl GroupFile {
    pub fn selector(&self) -> Result<InstanceSelector> {
        InstanceSelector::from_tag(&self.instance, self.n)
    }

    pub fn element<I: ExpansionInstance>(&self, inst: &I) -> Result<I::Group> {
        let g: I::Group = parse_value(&self.element, "group element")?;
        inst.check_group(&g)?;
        Ok(g)
    }

    pub fn new<G: Serialize>(sel: InstanceSelector, g: &G) -> Self {
        GroupFile { instance: sel.tag().into(), n: sel.n(), element: serde_json::to_value(g).expect("serializes") }
    }
}

/// A raw pair `(f, D)` to canonicalize.
///
/// V: `{"domain": "01", "map": "010->1, 011->00"}` (or `map` as a list of
/// `[domain, image]` pairs). H_n: `{"domain": {"tail": {"branch": 1,
/// "start": 3}}, "map": {"points": [[[1,3],[2,1]]], "tails": [[{"branch":1,
/// "start":4},{"branch":1,"start":2}]]}}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementFile {
    pub domain: Value,
    pub map: Value,
}

impl ElementFile {
    pub fn canon_v(&self) -> Result<PrefixMapTable> {
        let domain: Word = parse_value(&self.domain, "domain")?;
        let map: PrefixMap = match &self.map {
            Value::String(s) => s.parse()?,
            other => parse_value(other, "map")?,
        };
        canonicalize(&map, &domain)
    }

    pub fn canon_h(&self, inst: &Houghton) -> Result<HoughtonElement> {
        let domain: Domain = parse_value(&self.domain, "domain")?;
        let map: HoughtonRawMap = parse_value(&self.map, "map")?;
        let b = canonicalize_h(&map, domain)?;
        inst.check_element(&b)?;
        Ok(b)
    }

    /// Canonical literal as JSON.
    pub fn canon(&self, sel: InstanceSelector) -> Result<Value> {
        Ok(match sel.houghton() {
            None => serde_json::to_value(self.canon_v()?)?,
            Some(h) => serde_json::to_value(self.canon_h(&h)?)?,
        })
    }
}

/// The V instance for a selector, or an error naming the mismatch.
pub fn expect_v(sel: InstanceSelector) -> Result<ThompsonV> {
    match sel {
        InstanceSelector::V => Ok(ThompsonV),
        other => Err(Error::Parse(format!("expected the v instance, found {other}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::thompson::ball_vertex;

    #[test]
    fn selectors() {
        assert_eq!("v".parse::<InstanceSelector>().unwrap(), InstanceSelector::V);
        assert_eq!("houghton:3".parse::<InstanceSelector>().unwrap(), InstanceSelector::Houghton(3));
        assert_eq!("houghton".parse::<InstanceSelector>().unwrap(), InstanceSelector::Houghton(2));
        assert!("houghton:0".parse::<InstanceSelector>().is_err());
        assert!("t".parse::<InstanceSelector>().is_err());
        assert_eq!(InstanceSelector::Houghton(2).to_string(), "houghton:2");
    }

    #[test]
    fn vertex_file_round_trip() {
        let v = ball_vertex(["0", "1"]).unwrap();
        let file = VertexFile::new(InstanceSelector::V, &v);
        let text = serde_json::to_string(&file).unwrap();
        assert_eq!(text, r#"{"instance":"v","elements":[[["","0"]],[["","1"]]]}"#);
        let back: VertexFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.vertex(&ThompsonV).unwrap(), v);
    }

    #[test]
    fn houghton_vertex_file() {
        let text = r#"{"instance":"houghton","n":2,"elements":[[2,1],{"branch":1,"tail":1},{"branch":2,"tail":2}]}"#;
        let file: VertexFile = serde_json::from_str(text).unwrap();
        let h = file.selector().unwrap().houghton().unwrap();
        assert_eq!(file.vertex(&h).unwrap(), h.standard_vertex(&[1, 2]));
        let bad = r#"{"instance":"houghton","n":1,"elements":[[2,1]]}"#;
        let file: VertexFile = serde_json::from_str(bad).unwrap();
        assert!(file.vertex(&file.selector().unwrap().houghton().unwrap()).is_err());
    }

    #[test]
    fn canon_files() {
        let file: ElementFile = serde_json::from_str(r#"{"domain":"1","map":"10->0, 11->1"}"#).unwrap();
        assert_eq!(file.canon(InstanceSelector::V).unwrap(), serde_json::json!([["", ""]]));
        let file: ElementFile = serde_json::from_str(
            r#"{"domain":{"tail":{"branch":1,"start":3}},"map":{"points":[[[1,3],[2,1]]],"tails":[[{"branch":1,"start":4},{"branch":1,"start":2}]]}}"#,
        )
        .unwrap();
        assert_eq!(
            file.canon(InstanceSelector::Houghton(2)).unwrap(),
            serde_json::json!({"branch": 1, "exceptions": [[2, 1]], "tail": 2})
        );
    }
}
