use std::collections::{BTreeMap, BTreeSet};

use super::rep::{closure_and_border, string_module, Representation};
use super::walk::{validate_string, Dir, Step, Walk};
use super::{Arrow, BoundIceQuiver, QuiverBuilder};
use crate::error::{Error, Result};
use crate::id::{ArrowId, VertexId};
use crate::linalg::QMatrix;

/// A morphism of quivers that is injective on arrows sharing a source and
/// on arrows sharing a target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Winding {
    pub source: BoundIceQuiver,
    pub target: BoundIceQuiver,
    pub vertex_map: BTreeMap<VertexId, VertexId>,
    pub arrow_map: BTreeMap<ArrowId, ArrowId>,
}

impl Winding {
    pub fn new(
        source: BoundIceQuiver,
        target: BoundIceQuiver,
        vertex_map: BTreeMap<VertexId, VertexId>,
        arrow_map: BTreeMap<ArrowId, ArrowId>,
    ) -> Result<Winding> {
        let w = Winding {
            source,
            target,
            vertex_map,
            arrow_map,
        };
        w.validate()?;
        Ok(w)
    }

    pub fn identity(q: &BoundIceQuiver) -> Winding {
        Winding {
            source: q.clone(),
            target: q.clone(),
            vertex_map: q
                .vertices()
                .iter()
                .map(|v| (v.clone(), v.clone()))
                .collect(),
            arrow_map: q.arrows().map(|a| (a.id.clone(), a.id.clone())).collect(),
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Malformed(format!("not a winding: {m}")));
        for v in self.source.vertices() {
            match self.vertex_map.get(v) {
                Some(w) if self.target.has_vertex(w) => {}
                _ => return bad(format!("vertex `{v}` has no image")),
            }
        }
        for a in self.source.arrows() {
            let Some(b) = self.arrow_map.get(&a.id) else {
                return bad(format!("arrow `{}` has no image", a.id));
            };
            let b = self.target.arrow(b)?;
            if self.vertex_map[&a.source] != b.source || self.vertex_map[&a.target] != b.target {
                return bad(format!("arrow `{}` is not mapped compatibly", a.id));
            }
        }
        for v in self.source.vertices() {
            let outs: Vec<&ArrowId> = self
                .source
                .arrows_from(v)
                .map(|a| &self.arrow_map[&a.id])
                .collect();
            let ins: Vec<&ArrowId> = self
                .source
                .arrows_into(v)
                .map(|a| &self.arrow_map[&a.id])
                .collect();
            for list in [outs, ins] {
                let set: BTreeSet<&ArrowId> = list.iter().copied().collect();
                if set.len() != list.len() {
                    return bad(format!("two arrows at `{v}` have the same image"));
                }
            }
        }
        Ok(())
    }

    /// Vertices of the source over `i`, in id order.
    pub fn vertex_preimage(&self, i: &VertexId) -> Vec<&VertexId> {
        self.vertex_map
            .iter()
            .filter(|(_, w)| *w == i)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn arrow_preimage(&self, a: &ArrowId) -> Vec<&ArrowId> {
        self.arrow_map
            .iter()
            .filter(|(_, b)| *b == a)
            .map(|(x, _)| x)
            .collect()
    }

    /// `φ`: the induced map on dimension vectors.
    pub fn push_dims(&self, d: &BTreeMap<VertexId, usize>) -> BTreeMap<VertexId, usize> {
        let mut out: BTreeMap<VertexId, usize> = self
            .target
            .vertices()
            .iter()
            .map(|v| (v.clone(), 0))
            .collect();
        for (v, n) in d {
            if let Some(w) = self.vertex_map.get(v) {
                *out.get_mut(w).expect("target vertex") += n;
            }
        }
        out
    }
}

/// `Φ_*`: `V(i)` is the direct sum of `Ṽ(j)` over the preimages `j` of `i`
/// in id order, and `V(a)` collects the blocks `Ṽ(b)` of the preimages of
/// `a` at the matching offsets.
pub fn pushforward(phi: &Winding, v: &Representation) -> Result<Representation> {
    let mut offsets: BTreeMap<&VertexId, usize> = BTreeMap::new();
    let mut dims: BTreeMap<VertexId, usize> = BTreeMap::new();
    for i in phi.target.vertices() {
        let mut off = 0;
        for j in phi.vertex_preimage(i) {
            offsets.insert(j, off);
            off += v.dim(j);
        }
        dims.insert(i.clone(), off);
    }
    let mut maps = BTreeMap::new();
    for a in phi.target.arrows() {
        let mut m = QMatrix::zeros(dims[&a.target], dims[&a.source]);
        for b in phi.arrow_preimage(&a.id) {
            let arrow = phi.source.arrow(b)?;
            let (r0, c0) = (offsets[&arrow.target], offsets[&arrow.source]);
            let block = v.map(b);
            for r in 0..block.rows() {
                for c in 0..block.cols() {
                    m.set(r0 + r, c0 + c, block.get(r, c).clone());
                }
            }
        }
        maps.insert(a.id.clone(), m);
    }
    Representation::new(&phi.target, dims, maps)
}

/// The blow-up of a quiver along a string module.
#[derive(Clone, Debug)]
pub struct BlowUp {
    /// Spine `v1..v{n+1}` plus pendants, frozen set = pendants.
    pub quiver: BoundIceQuiver,
    /// Onto the closure of the support of `M`.
    pub winding: Winding,
    /// `k` on the spine with identities along the spine arrows.
    pub module: Representation,
    /// The string of `M̃` along the spine.
    pub spine: Walk,
}

/// Blow-up along the string module `M_c`.
///
/// Spine vertices are `v1, …, v{n+1}` joined by `b1, …, bn` oriented like
/// the steps of `c`. Every arrow `α` at `v_i` other than the underlying
/// arrows of `c_{i-1}`, `c_i` gets a frozen pendant named `j^{α;i}`, where
/// `j` is the other end of `α`, joined to `v_i` by an arrow `α_v{i}` of the
/// same orientation as `α`.
pub fn blow_up(q: &BoundIceQuiver, c: &Walk) -> Result<BlowUp> {
    validate_string(q, c)?;
    if let Some(a) = q.arrows().find(|a| a.source == a.target) {
        return Err(Error::LoopOrTwoCycle(a.source.to_string()));
    }
    let m = string_module(q, c)?;
    let (closure, _) = closure_and_border(q, &m)?;
    let vs = c.vertices(q)?;
    let steps = c.steps();
    let spine: Vec<VertexId> = (1..=vs.len())
        .map(|i| VertexId::from(format!("v{i}")))
        .collect();

    let mut b = QuiverBuilder::default().vertices(spine.iter().cloned());
    let mut vmap: BTreeMap<VertexId, VertexId> =
        spine.iter().cloned().zip(vs.iter().cloned()).collect();
    let mut amap: BTreeMap<ArrowId, ArrowId> = BTreeMap::new();
    let mut spine_steps = Vec::new();
    for (i, s) in steps.iter().enumerate() {
        let id = ArrowId::from(format!("b{}", i + 1));
        let (src, tgt) = match s.dir {
            Dir::Forward => (&spine[i], &spine[i + 1]),
            Dir::Inverse => (&spine[i + 1], &spine[i]),
        };
        b = b.arrow(id.clone(), src.clone(), tgt.clone());
        amap.insert(id.clone(), s.arrow.clone());
        spine_steps.push(Step {
            arrow: id,
            dir: s.dir,
        });
    }
    for (i, v) in vs.iter().enumerate() {
        let used: BTreeSet<&ArrowId> = [i.checked_sub(1).map(|k| &steps[k]), steps.get(i)]
            .into_iter()
            .flatten()
            .map(|s| &s.arrow)
            .collect();
        let at = &spine[i];
        let pendant = |a: &Arrow, other: &VertexId| {
            (
                VertexId::from(format!("{other}^{{{};{}}}", a.id, i + 1)),
                ArrowId::from(format!("{}_v{}", a.id, i + 1)),
            )
        };
        for a in q.arrows_from(v).filter(|a| !used.contains(&a.id)) {
            let (p, id) = pendant(a, &a.target);
            b = b.frozen(p.clone()).arrow(id.clone(), at.clone(), p.clone());
            vmap.insert(p, a.target.clone());
            amap.insert(id, a.id.clone());
        }
        for a in q.arrows_into(v).filter(|a| !used.contains(&a.id)) {
            let (p, id) = pendant(a, &a.source);
            b = b.frozen(p.clone()).arrow(id.clone(), p.clone(), at.clone());
            vmap.insert(p, a.source.clone());
            amap.insert(id, a.id.clone());
        }
    }
    let quiver = b.build()?;
    let dims = spine.iter().map(|v| (v.clone(), 1)).collect();
    let maps = spine_steps
        .iter()
        .map(|st| (st.arrow.clone(), QMatrix::identity(1)))
        .collect();
    let module = Representation::new(&quiver, dims, maps)?;
    let winding = Winding::new(quiver.clone(), closure, vmap, amap)?;
    let spine = if steps.is_empty() {
        Walk::Trivial(spine[0].clone())
    } else {
        Walk::Steps(spine_steps)
    };
    Ok(BlowUp {
        quiver,
        winding,
        module,
        spine,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::families;

    fn names(s: &BTreeSet<VertexId>) -> Vec<String> {
        s.iter().map(|v| v.to_string()).collect()
    }

    #[test]
    fn blow_up_double_arrow() {
        let q = families::double_arrow();
        let c: Walk = "epsilon^-1 gamma".parse().unwrap();
        let bu = blow_up(&q, &c).unwrap();
        assert_eq!(bu.quiver.vertices().len(), 8);
        assert_eq!(
            names(bu.quiver.frozen()),
            [
                "1^{alpha;2}",
                "2^{epsilon;3}",
                "2^{gamma;1}",
                "4^{delta;1}",
                "4^{delta;3}"
            ]
        );
        assert!(bu.quiver.is_blown_up());
        let pushed = pushforward(&bu.winding, &bu.module).unwrap();
        let m = string_module(&q, &c).unwrap();
        assert_eq!(pushed, m.restrict(&bu.winding.target).unwrap());
    }

    #[test]
    fn blow_up_ice_a2() {
        let q = families::ice_a2();
        let bu = blow_up(&q, &"alpha".parse().unwrap()).unwrap();
        assert_eq!(names(bu.quiver.frozen()), ["3^{beta;2}", "3^{gamma;1}"]);
        assert_eq!(
            bu.quiver.arrow_count(&"3^{gamma;1}".into(), &"v1".into()),
            1
        );
        assert_eq!(bu.quiver.arrow_count(&"v2".into(), &"3^{beta;2}".into()), 1);
        let pushed = pushforward(&bu.winding, &bu.module).unwrap();
        let d: Vec<usize> = pushed.dim_vector().values().copied().collect();
        assert_eq!(d, [1, 1, 0]);
        assert_eq!(
            bu.winding.push_dims(bu.module.dim_vector()),
            *pushed.dim_vector()
        );
    }

    #[test]
    fn blow_up_isolated_vertex() {
        let q = BoundIceQuiver::builder().vertex("1").build().unwrap();
        let bu = blow_up(&q, &Walk::trivial("1")).unwrap();
        assert_eq!(bu.quiver.vertices().len(), 1);
        assert!(bu.quiver.frozen().is_empty());
        assert_eq!(bu.module.total_dim(), 1);
    }

    #[test]
    fn identity_pushforward() {
        let q = families::ice_a2();
        let m = string_module(&q, &"beta".parse().unwrap()).unwrap();
        assert_eq!(pushforward(&Winding::identity(&q), &m).unwrap(), m);
    }

    #[test]
    fn winding_axioms() {
        let q = families::linear_a(2);
        let mut vmap = BTreeMap::new();
        vmap.insert(VertexId::from("1"), VertexId::from("2"));
        vmap.insert(VertexId::from("2"), VertexId::from("1"));
        let amap = BTreeMap::from([(ArrowId::from("a1"), ArrowId::from("a1"))]);
        assert!(Winding::new(q.clone(), q, vmap, amap).is_err());
    }
}
