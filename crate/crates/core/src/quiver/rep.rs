use std::collections::{BTreeMap, BTreeSet};

use num_traits::One;

use super::walk::{validate_string, Dir, Walk};
use super::BoundIceQuiver;
use crate::error::{Error, Result};
use crate::id::{ArrowId, VertexId};
use crate::linalg::{QMatrix, Q};

/// A finite-dimensional representation over `Q`.
///
/// `M(a)` has shape `dim M(t(a)) × dim M(s(a))` and acts on columns, so a
/// path `a b` acts as the product `M(b) · M(a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    dims: BTreeMap<VertexId, usize>,
    maps: BTreeMap<ArrowId, QMatrix>,
}

impl Representation {
    /// Checks shapes and relations. Vertices and arrows absent from the
    /// input get dimension 0 and the empty matrix.
    pub fn new(
        q: &BoundIceQuiver,
        dims: BTreeMap<VertexId, usize>,
        mut maps: BTreeMap<ArrowId, QMatrix>,
    ) -> Result<Representation> {
        for v in dims.keys() {
            q.check_vertex(v)?;
        }
        for a in maps.keys() {
            q.arrow(a)?;
        }
        let dims: BTreeMap<VertexId, usize> = q
            .vertices()
            .iter()
            .map(|v| (v.clone(), dims.get(v).copied().unwrap_or(0)))
            .collect();
        for a in q.arrows() {
            let (r, c) = (dims[&a.target], dims[&a.source]);
            let m = maps
                .entry(a.id.clone())
                .or_insert_with(|| QMatrix::zeros(r, c));
            if (m.rows(), m.cols()) != (r, c) {
                return Err(Error::Malformed(format!(
                    "matrix of `{}` is {}x{}, expected {r}x{c}",
                    a.id,
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let rep = Representation { dims, maps };
        if let Some(r) = rep.violated_relation(q) {
            let ids: Vec<&str> = r.iter().map(ArrowId::as_str).collect();
            return Err(Error::Malformed(format!(
                "relation `{}` does not act as zero",
                ids.join(" ")
            )));
        }
        Ok(rep)
    }

    pub fn zero(q: &BoundIceQuiver) -> Representation {
        Representation::new(q, BTreeMap::new(), BTreeMap::new()).expect("zero representation")
    }

    pub fn dim(&self, v: &VertexId) -> usize {
        self.dims.get(v).copied().unwrap_or(0)
    }

    /// Dimension vector over every vertex of the quiver, zeros included.
    pub fn dim_vector(&self) -> &BTreeMap<VertexId, usize> {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn map(&self, a: &ArrowId) -> &QMatrix {
        &self.maps[a]
    }

    pub fn maps(&self) -> &BTreeMap<ArrowId, QMatrix> {
        &self.maps
    }

    pub fn support(&self) -> BTreeSet<VertexId> {
        self.dims
            .iter()
            .filter(|(_, d)| **d > 0)
            .map(|(v, _)| v.clone())
            .collect()
    }

    /// Matrix of a path `a_1 ... a_k`, i.e. `M(a_k) ⋯ M(a_1)`.
    pub fn path_map(&self, q: &BoundIceQuiver, path: &[ArrowId]) -> Result<QMatrix> {
        let first = q.arrow(&path[0])?;
        let mut m = QMatrix::identity(self.dim(&first.source));
        for a in path {
            m = self.map(a) * &m;
        }
        Ok(m)
    }

    fn violated_relation<'a>(&self, q: &'a BoundIceQuiver) -> Option<&'a Vec<ArrowId>> {
        q.relations()
            .iter()
            .find(|r| !self.path_map(q, r).map(|m| m.is_zero()).unwrap_or(false))
    }

    pub fn satisfies_relations(&self, q: &BoundIceQuiver) -> bool {
        self.violated_relation(q).is_none()
    }

    pub fn direct_sum(&self, other: &Representation) -> Representation {
        let dims = self
            .dims
            .iter()
            .map(|(v, d)| (v.clone(), d + other.dim(v)))
            .collect();
        let maps = self
            .maps
            .iter()
            .map(|(a, m)| {
                (
                    a.clone(),
                    QMatrix::block_diag(&[m.clone(), other.maps[a].clone()]),
                )
            })
            .collect();
        Representation { dims, maps }
    }

    /// Restriction to a full subquiver containing the support.
    pub fn restrict(&self, sub: &BoundIceQuiver) -> Result<Representation> {
        let dims = sub
            .vertices()
            .iter()
            .map(|v| (v.clone(), self.dim(v)))
            .collect();
        let maps = sub
            .arrows()
            .map(|a| (a.id.clone(), self.maps[&a.id].clone()))
            .collect();
        Representation::new(sub, dims, maps)
    }

    /// The simple representation at `v`.
    pub fn simple(q: &BoundIceQuiver, v: &VertexId) -> Result<Representation> {
        string_module(q, &Walk::Trivial(v.clone()))
    }
}

/// The string module `M_c`: basis `z_1..z_{n+1}` with `z_i` at `v_i`;
/// a forward step `c_i = b` sends `z_i` to `z_{i+1}`, an inverse step
/// `c_i = b^{-1}` sends `z_{i+1}` to `z_i`.
///
/// Within `M(v)`, basis vectors are ordered by position along the walk.
pub fn string_module(q: &BoundIceQuiver, c: &Walk) -> Result<Representation> {
    validate_string(q, c)?;
    let vs = c.vertices(q)?;
    let mut local = Vec::with_capacity(vs.len());
    let mut dims: BTreeMap<VertexId, usize> = BTreeMap::new();
    for v in &vs {
        let d = dims.entry(v.clone()).or_insert(0);
        local.push(*d);
        *d += 1;
    }
    let dim = |v: &VertexId| dims.get(v).copied().unwrap_or(0);
    let mut maps: BTreeMap<ArrowId, QMatrix> = q
        .arrows()
        .map(|a| (a.id.clone(), QMatrix::zeros(dim(&a.target), dim(&a.source))))
        .collect();
    for (i, s) in c.steps().iter().enumerate() {
        let m = maps.get_mut(&s.arrow).expect("arrow of q");
        let (from, to) = match s.dir {
            Dir::Forward => (i, i + 1),
            Dir::Inverse => (i + 1, i),
        };
        m.set(local[to], local[from], Q::one());
    }
    Representation::new(q, dims, maps)
}

/// The full subquiver on `supp M` and its one-arrow neighbourhood, and the
/// border: closure minus support.
pub fn closure_and_border(
    q: &BoundIceQuiver,
    m: &Representation,
) -> Result<(BoundIceQuiver, BTreeSet<VertexId>)> {
    let supp = m.support();
    let mut closure = supp.clone();
    for a in q.arrows() {
        if supp.contains(&a.source) {
            closure.insert(a.target.clone());
        }
        if supp.contains(&a.target) {
            closure.insert(a.source.clone());
        }
    }
    let border = closure.difference(&supp).cloned().collect();
    Ok((q.full_subquiver(&closure)?, border))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::families;

    fn dims(r: &Representation) -> Vec<usize> {
        r.dim_vector().values().copied().collect()
    }

    #[test]
    fn simple_module() {
        let q = families::ice_a2();
        let s = Representation::simple(&q, &"2".into()).unwrap();
        assert_eq!(dims(&s), [0, 1, 0]);
    }

    #[test]
    fn double_arrow_string() {
        let q = families::double_arrow();
        let m = string_module(&q, &"epsilon^-1 gamma".parse().unwrap()).unwrap();
        assert_eq!(dims(&m), [0, 1, 2, 0]);
        assert_eq!(m.map(&"epsilon".into()), &QMatrix::from_rows(2, 1, &[1, 0]));
        assert_eq!(m.map(&"gamma".into()), &QMatrix::from_rows(2, 1, &[0, 1]));
    }

    #[test]
    fn a2_projective() {
        let q = families::linear_a(2);
        let m = string_module(&q, &"a1".parse().unwrap()).unwrap();
        assert_eq!(dims(&m), [1, 1]);
        assert_eq!(m.map(&"a1".into()), &QMatrix::identity(1));
    }

    #[test]
    fn relations_are_checked() {
        let q = families::ice_a2();
        let mut maps = BTreeMap::new();
        maps.insert("alpha".into(), QMatrix::identity(1));
        maps.insert("beta".into(), QMatrix::identity(1));
        let dims = [("1", 1), ("2", 1), ("3", 1)]
            .into_iter()
            .map(|(v, d)| (VertexId::from(v), d))
            .collect();
        assert!(matches!(
            Representation::new(&q, dims, maps),
            Err(Error::Malformed(_))
        ));
    }

    #[test]
    fn closure_examples() {
        let q = families::ice_a2();
        let p1 = string_module(&q, &"alpha".parse().unwrap()).unwrap();
        let (cl, border) = closure_and_border(&q, &p1).unwrap();
        assert_eq!(cl.vertices().len(), 3);
        assert_eq!(border, BTreeSet::from(["3".into()]));

        let iso = BoundIceQuiver::builder().vertex("v").build().unwrap();
        let s = Representation::simple(&iso, &"v".into()).unwrap();
        let (cl, border) = closure_and_border(&iso, &s).unwrap();
        assert_eq!(cl.vertices().len(), 1);
        assert!(border.is_empty());

        let a3 = families::linear_a(3);
        let s2 = Representation::simple(&a3, &"2".into()).unwrap();
        let (cl, border) = closure_and_border(&a3, &s2).unwrap();
        assert_eq!(cl.vertices().len(), 3);
        assert_eq!(border, BTreeSet::from(["1".into(), "3".into()]));
    }

    #[test]
    fn direct_sum_dims() {
        let q = families::linear_a(3);
        let a = string_module(&q, &"a1".parse().unwrap()).unwrap();
        let b = string_module(&q, &"a2".parse().unwrap()).unwrap();
        assert_eq!(dims(&a.direct_sum(&b)), [1, 2, 1]);
    }
}
