//! Bound ice quivers and the combinatorics living on them.

mod blowup;
pub mod families;
mod parse;
mod rep;
mod walk;

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::id::{ArrowId, VertexId};

pub use blowup::{blow_up, pushforward, BlowUp, Winding};
pub use rep::{closure_and_border, string_module, Representation};
pub use walk::{
    enumerate_strings, enumerate_strings_up_to_inverse, projective_string, string_violation,
    validate_string, Dir, Step, StringViolation, Walk,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub id: ArrowId,
    pub source: VertexId,
    pub target: VertexId,
}

/// A finite quiver with a set of frozen vertices and monomial relations.
///
/// Relations are paths composed left to right: `[a, b]` is "first `a`,
/// then `b`", so `t(a) = s(b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundIceQuiver {
    vertices: BTreeSet<VertexId>,
    frozen: BTreeSet<VertexId>,
    arrows: BTreeMap<ArrowId, Arrow>,
    relations: Vec<Vec<ArrowId>>,
}

#[derive(Default, Debug, Clone)]
pub struct QuiverBuilder {
    vertices: Vec<VertexId>,
    frozen: Vec<VertexId>,
    arrows: Vec<Arrow>,
    relations: Vec<Vec<ArrowId>>,
}

impl QuiverBuilder {
    pub fn vertex(mut self, v: impl Into<VertexId>) -> Self {
        self.vertices.push(v.into());
        self
    }

    pub fn vertices<I: IntoIterator<Item = V>, V: Into<VertexId>>(mut self, vs: I) -> Self {
        self.vertices.extend(vs.into_iter().map(Into::into));
        self
    }

    pub fn frozen(mut self, v: impl Into<VertexId>) -> Self {
        let v = v.into();
        self.vertices.push(v.clone());
        self.frozen.push(v);
        self
    }

    pub fn arrow(
        mut self,
        id: impl Into<ArrowId>,
        source: impl Into<VertexId>,
        target: impl Into<VertexId>,
    ) -> Self {
        self.arrows.push(Arrow {
            id: id.into(),
            source: source.into(),
            target: target.into(),
        });
        self
    }

    pub fn relation<I: IntoIterator<Item = A>, A: Into<ArrowId>>(mut self, path: I) -> Self {
        self.relations
            .push(path.into_iter().map(Into::into).collect());
        self
    }

    pub fn build(self) -> Result<BoundIceQuiver> {
        BoundIceQuiver::new(self.vertices, self.frozen, self.arrows, self.relations)
    }
}

impl BoundIceQuiver {
    pub fn builder() -> QuiverBuilder {
        QuiverBuilder::default()
    }

    pub fn new(
        vertices: impl IntoIterator<Item = VertexId>,
        frozen: impl IntoIterator<Item = VertexId>,
        arrows: impl IntoIterator<Item = Arrow>,
        relations: impl IntoIterator<Item = Vec<ArrowId>>,
    ) -> Result<Self> {
        let mut vs = BTreeSet::new();
        for v in vertices {
            if v.as_str().is_empty() {
                return Err(Error::InvalidQuiver("empty vertex id".into()));
            }
            if !vs.insert(v.clone()) {
                return Err(Error::InvalidQuiver(format!("duplicate vertex `{v}`")));
            }
        }
        let frozen: BTreeSet<VertexId> = frozen.into_iter().collect();
        if let Some(v) = frozen.iter().find(|v| !vs.contains(*v)) {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        let mut am = BTreeMap::new();
        for a in arrows {
            for end in [&a.source, &a.target] {
                if !vs.contains(end) {
                    return Err(Error::UnknownVertex(end.to_string()));
                }
            }
            if frozen.contains(&a.source) && frozen.contains(&a.target) {
                return Err(Error::InvalidQuiver(format!(
                    "arrow `{}` joins two frozen vertices",
                    a.id
                )));
            }
            if am.insert(a.id.clone(), a.clone()).is_some() {
                return Err(Error::InvalidQuiver(format!("duplicate arrow `{}`", a.id)));
            }
        }
        let relations: Vec<Vec<ArrowId>> = relations.into_iter().collect();
        for r in &relations {
            if r.len() < 2 {
                return Err(Error::InvalidQuiver("relation of length < 2".into()));
            }
            for a in r {
                if !am.contains_key(a) {
                    return Err(Error::UnknownArrow(a.to_string()));
                }
            }
            for w in r.windows(2) {
                if am[&w[0]].target != am[&w[1]].source {
                    return Err(Error::InvalidQuiver(format!(
                        "relation is not composable at `{}` `{}`",
                        w[0], w[1]
                    )));
                }
            }
        }
        Ok(BoundIceQuiver {
            vertices: vs,
            frozen,
            arrows: am,
            relations,
        })
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn frozen(&self) -> &BTreeSet<VertexId> {
        &self.frozen
    }

    pub fn unfrozen(&self) -> BTreeSet<VertexId> {
        self.vertices.difference(&self.frozen).cloned().collect()
    }

    pub fn is_frozen(&self, v: &VertexId) -> bool {
        self.frozen.contains(v)
    }

    pub fn has_vertex(&self, v: &VertexId) -> bool {
        self.vertices.contains(v)
    }

    pub fn check_vertex(&self, v: &VertexId) -> Result<()> {
        if self.has_vertex(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v.to_string()))
        }
    }

    /// Arrows in id order.
    pub fn arrows(&self) -> impl Iterator<Item = &Arrow> {
        self.arrows.values()
    }

    pub fn arrow(&self, id: &ArrowId) -> Result<&Arrow> {
        self.arrows
            .get(id)
            .ok_or_else(|| Error::UnknownArrow(id.to_string()))
    }

    pub fn arrows_from<'a>(&'a self, v: &'a VertexId) -> impl Iterator<Item = &'a Arrow> + 'a {
        self.arrows.values().filter(move |a| &a.source == v)
    }

    pub fn arrows_into<'a>(&'a self, v: &'a VertexId) -> impl Iterator<Item = &'a Arrow> + 'a {
        self.arrows.values().filter(move |a| &a.target == v)
    }

    /// `|Q_1(i, j)|`.
    pub fn arrow_count(&self, i: &VertexId, j: &VertexId) -> usize {
        self.arrows
            .values()
            .filter(|a| &a.source == i && &a.target == j)
            .count()
    }

    pub fn relations(&self) -> &[Vec<ArrowId>] {
        &self.relations
    }

    /// Every frozen vertex meets at most one arrow.
    pub fn is_blown_up(&self) -> bool {
        self.frozen.iter().all(|f| {
            self.arrows
                .values()
                .filter(|a| &a.source == f || &a.target == f)
                .count()
                <= 1
        })
    }

    /// A vertex carrying a loop or lying on a 2-cycle.
    pub fn loop_or_two_cycle(&self) -> Option<&VertexId> {
        self.arrows.values().find_map(|a| {
            if a.source == a.target || self.arrow_count(&a.target, &a.source) > 0 {
                Some(&a.source)
            } else {
                None
            }
        })
    }

    pub fn is_acyclic(&self) -> bool {
        let mut indeg: BTreeMap<&VertexId, usize> = self.vertices.iter().map(|v| (v, 0)).collect();
        for a in self.arrows.values() {
            *indeg.get_mut(&a.target).unwrap() += 1;
        }
        let mut ready: Vec<&VertexId> = indeg
            .iter()
            .filter(|(_, d)| **d == 0)
            .map(|(v, _)| *v)
            .collect();
        let mut seen = 0;
        while let Some(v) = ready.pop() {
            seen += 1;
            for a in self.arrows_from(v) {
                let d = indeg.get_mut(&a.target).unwrap();
                *d -= 1;
                if *d == 0 {
                    ready.push(&a.target);
                }
            }
        }
        seen == self.vertices.len()
    }

    /// Full subquiver on `keep`; frozen status and the relations lying
    /// entirely inside are inherited.
    pub fn full_subquiver(&self, keep: &BTreeSet<VertexId>) -> Result<BoundIceQuiver> {
        let arrows: Vec<Arrow> = self
            .arrows
            .values()
            .filter(|a| keep.contains(&a.source) && keep.contains(&a.target))
            .cloned()
            .collect();
        let ids: BTreeSet<&ArrowId> = arrows.iter().map(|a| &a.id).collect();
        let relations: Vec<Vec<ArrowId>> = self
            .relations
            .iter()
            .filter(|r| r.iter().all(|a| ids.contains(a)))
            .cloned()
            .collect();
        BoundIceQuiver::new(
            keep.iter().cloned(),
            self.frozen.intersection(keep).cloned(),
            arrows,
            relations,
        )
    }

    /// The same quiver with a different frozen set.
    pub fn with_frozen(
        &self,
        frozen: impl IntoIterator<Item = VertexId>,
    ) -> Result<BoundIceQuiver> {
        BoundIceQuiver::new(
            self.vertices.iter().cloned(),
            frozen,
            self.arrows.values().cloned(),
            self.relations.iter().cloned(),
        )
    }

    /// The full subquiver on the unfrozen vertices.
    pub fn unfrozen_part(&self) -> BoundIceQuiver {
        self.full_subquiver(&self.unfrozen())
            .expect("subquiver of a valid quiver")
    }

    /// Adds a frozen vertex `i'` and an arrow `i' -> i` (id `i'`) for every
    /// vertex `i`.
    pub fn principal_extension(&self) -> Result<BoundIceQuiver> {
        if !self.frozen.is_empty() {
            return Err(Error::InvalidQuiver(
                "principal extension needs a quiver without frozen vertices".into(),
            ));
        }
        let mut b = QuiverBuilder {
            vertices: self.vertices.iter().cloned().collect(),
            arrows: self.arrows.values().cloned().collect(),
            relations: self.relations.clone(),
            ..Default::default()
        };
        for v in &self.vertices {
            let p = VertexId::from(format!("{v}'"));
            b = b
                .frozen(p.clone())
                .arrow(ArrowId::from(format!("{v}'")), p, v.clone());
        }
        b.build()
    }

    /// Adds frozen `i'` with `i' -> i` and frozen `i''` with `i -> i''` for
    /// every unfrozen `i`, so that `y_i = x_{i'}` and `z_i = x_{i''}`.
    pub fn decorated(&self) -> Result<BoundIceQuiver> {
        let mut b = QuiverBuilder {
            vertices: self.vertices.iter().cloned().collect(),
            frozen: self.frozen.iter().cloned().collect(),
            arrows: self.arrows.values().cloned().collect(),
            relations: self.relations.clone(),
        };
        for v in self.unfrozen() {
            let p = VertexId::from(format!("{v}'"));
            let pp = VertexId::from(format!("{v}''"));
            b = b
                .frozen(p.clone())
                .arrow(ArrowId::from(format!("{v}'")), p, v.clone())
                .frozen(pp.clone())
                .arrow(ArrowId::from(format!("{v}''")), v.clone(), pp);
        }
        b.build()
    }

    /// Parses the line-oriented quiver format.
    pub fn parse(src: &str) -> Result<BoundIceQuiver> {
        parse::parse_quiver(src)
    }
}

impl std::str::FromStr for BoundIceQuiver {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BoundIceQuiver::parse(s)
    }
}

impl std::fmt::Display for BoundIceQuiver {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for v in &self.vertices {
            if self.is_frozen(v) {
                writeln!(f, "vertex {v} frozen")?;
            } else {
                writeln!(f, "vertex {v}")?;
            }
        }
        for a in self.arrows.values() {
            writeln!(f, "arrow {} {} -> {}", a.id, a.source, a.target)?;
        }
        for r in &self.relations {
            let ids: Vec<&str> = r.iter().map(ArrowId::as_str).collect();
            writeln!(f, "relation {}", ids.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> BoundIceQuiver {
        BoundIceQuiver::builder()
            .vertices(["1", "2"])
            .arrow("a", "1", "2")
            .build()
            .unwrap()
    }

    #[test]
    fn invariants_are_enforced() {
        let dup = BoundIceQuiver::builder().vertices(["1", "1"]).build();
        assert!(matches!(dup, Err(Error::InvalidQuiver(_))));
        let dangling = BoundIceQuiver::builder()
            .vertex("1")
            .arrow("a", "1", "2")
            .build();
        assert_eq!(dangling, Err(Error::UnknownVertex("2".into())));
        let ff = BoundIceQuiver::builder()
            .frozen("1")
            .frozen("2")
            .arrow("a", "1", "2")
            .build();
        assert!(matches!(ff, Err(Error::InvalidQuiver(_))));
        let short = BoundIceQuiver::builder()
            .vertices(["1", "2"])
            .arrow("a", "1", "2")
            .relation(["a"])
            .build();
        assert!(matches!(short, Err(Error::InvalidQuiver(_))));
        let bad = BoundIceQuiver::builder()
            .vertices(["1", "2", "3"])
            .arrow("a", "1", "2")
            .arrow("b", "1", "3")
            .relation(["a", "b"])
            .build();
        assert!(matches!(bad, Err(Error::InvalidQuiver(_))));
    }

    #[test]
    fn principal_extension_examples() {
        let one = BoundIceQuiver::builder().vertex("1").build().unwrap();
        let pp = one.principal_extension().unwrap();
        assert_eq!(pp.vertices().len(), 2);
        assert_eq!(pp.frozen(), &BTreeSet::from([VertexId::from("1'")]));
        assert_eq!(pp.arrow_count(&"1'".into(), &"1".into()), 1);
        assert!(pp.is_blown_up());

        let pp = a2().principal_extension().unwrap();
        assert_eq!(pp.vertices().len(), 4);
        assert_eq!(pp.arrows().count(), 3);
        assert_eq!(pp.frozen().len(), 2);
        assert!(pp.is_blown_up());
        assert!(pp.principal_extension().is_err());
    }

    #[test]
    fn loops_cycles_and_acyclicity() {
        assert!(a2().loop_or_two_cycle().is_none());
        assert!(a2().is_acyclic());
        let c = families::cyclic(3);
        assert!(c.loop_or_two_cycle().is_none());
        assert!(!c.is_acyclic());
        let two = BoundIceQuiver::builder()
            .vertices(["1", "2"])
            .arrow("a", "1", "2")
            .arrow("b", "2", "1")
            .build()
            .unwrap();
        assert!(two.loop_or_two_cycle().is_some());
    }

    #[test]
    fn display_round_trip() {
        let q = families::ice_a2();
        let back: BoundIceQuiver = q.to_string().parse().unwrap();
        assert_eq!(back, q);
    }
}
