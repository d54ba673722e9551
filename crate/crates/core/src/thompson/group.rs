use std::fmt;

use serde::{Deserialize, Serialize};

use super::table::{reduce_table, PrefixMap, PrefixMapTable};
use super::word::is_complete_code;
use crate::error::{Error, Result};

/// An element of Thompson's group V: a reduced table whose domains and
/// images are both complete prefix codes.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PrefixMapTable", into = "PrefixMapTable")]
pub struct VGroupElement(PrefixMapTable);

impl VGroupElement {
    pub fn identity() -> Self {
        VGroupElement(PrefixMapTable::identity())
    }

    /// The transposition of the two halves.
    pub fn swap_halves() -> Self {
        VGroupElement("0->1, 1->0".parse().expect("valid literal"))
    }

    pub fn from_map(raw: &PrefixMap) -> Result<Self> {
        let table = reduce_table(raw).map_err(|e| Error::NotABijection(e.to_string()))?;
        Self::try_from(table)
    }

    pub fn table(&self) -> &PrefixMapTable {
        &self.0
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &VGroupElement) -> VGroupElement {
        let raw = self.0.to_map().compose(&other.0.to_map());
        VGroupElement(reduce_table(&raw).expect("composition of bijections is a bijection"))
    }

    pub fn inverse(&self) -> VGroupElement {
        VGroupElement(reduce_table(&self.0.to_map().inverse()).expect("inverse of a bijection is a bijection"))
    }

    /// `[g ∘ f, X]`.
    pub fn act(&self, b: &PrefixMapTable) -> PrefixMapTable {
        reduce_table(&self.0.to_map().compose(&b.to_map())).expect("g is total, so g ∘ f keeps f's domain")
    }
}

impl TryFrom<PrefixMapTable> for VGroupElement {
    type Error = Error;

    fn try_from(t: PrefixMapTable) -> Result<Self> {
        let images: Vec<_> = t.entries().iter().map(|(_, g)| g.clone()).collect();
        if !is_complete_code(&images) {
            return Err(Error::NotABijection("images do not cover X".into()));
        }
        Ok(VGroupElement(t))
    }
}

impl From<VGroupElement> for PrefixMapTable {
    fn from(g: VGroupElement) -> Self {
        g.0
    }
}

impl fmt::Debug for VGroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V{:?}", self.0)
    }
}

impl fmt::Display for VGroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
