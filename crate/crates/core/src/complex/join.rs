use serde::Serialize;

use crate::error::{Error, Result};
use crate::expansion::{is_full_support, AscendingPath, ExpansionInstance, Vertex};

/// A common upper bound of two vertices with explicit ascending paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinWitness<E> {
    pub upper: Vertex<E>,
    pub from_first: AscendingPath<E>,
    pub from_second: AscendingPath<E>,
}

impl<E: Clone + Eq + Serialize> JoinWitness<E> {
    /// Replays both paths and checks that they end at `upper`.
    pub fn verify<I: ExpansionInstance<Element = E>>(&self, inst: &I, v1: &Vertex<E>, v2: &Vertex<E>) -> Result<()> {
        for (path, start) in [(&self.from_first, v1), (&self.from_second, v2)] {
            if &path.start != start {
                return Err(Error::MoveNotApplicable("path does not start at its input".into()));
            }
            if path.end() != &self.upper {
                return Err(Error::MoveNotApplicable("path does not end at the join".into()));
            }
            path.verify(inst)?;
        }
        Ok(())
    }
}

pub fn join<I: ExpansionInstance>(
    inst: &I,
    v1: &Vertex<I::Element>,
    v2: &Vertex<I::Element>,
) -> Result<JoinWitness<I::Element>> {
    if !is_full_support(inst, v1) || !is_full_support(inst, v2) {
        return Err(Error::NotFullSupport);
    }
    let s1 = inst.standardize(v1);
    let s2 = inst.standardize(v2);
    let (p1, p2) = inst.join_standard(s1.end(), s2.end());
    let upper = p1.end().clone();
    Ok(JoinWitness { upper, from_first: s1.concat(p1), from_second: s2.concat(p2) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::houghton::Houghton;
    use crate::thompson::{ball_vertex, ThompsonV};

    #[test]
    fn join_with_root() {
        let v = ball_vertex(["0", "10", "11"]).unwrap();
        let w = join(&ThompsonV, &ThompsonV.base_vertex(), &v).unwrap();
        assert_eq!(w.upper, v);
        assert_eq!(w.from_first.len(), 2);
        assert!(w.from_second.is_empty());
        w.verify(&ThompsonV, &ThompsonV.base_vertex(), &v).unwrap();
    }

    #[test]
    fn join_is_idempotent_on_standard_vertices() {
        let h = Houghton::new(3).unwrap();
        let s = h.standard_vertex(&[2, 1, 4]);
        let w = join(&h, &s, &s).unwrap();
        assert_eq!(w.upper, s);
        w.verify(&h, &s, &s).unwrap();
    }

    #[test]
    fn partial_vertices_rejected() {
        let v = ball_vertex(["0"]).unwrap();
        assert!(matches!(join(&ThompsonV, &v, &v), Err(Error::NotFullSupport)));
    }
}
