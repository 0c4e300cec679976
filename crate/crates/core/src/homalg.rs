//! Hom, Ext¹ and Euler forms over monomial bound quiver algebras.
//!
//! Modules are right modules, i.e. representations; the projective `P_i`
//! has the nonzero paths starting at `i` as basis and `Hom(P_i, M) = M(i)`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::id::{ArrowId, VertexId};
use crate::linalg::{QMatrix, Q};
use crate::quiver::{
    blow_up, closure_and_border, string_module, BoundIceQuiver, Representation, Walk,
};

/// Nonzero paths of a bound quiver, grouped by starting vertex.
#[derive(Clone, Debug)]
pub struct PathBasis {
    paths: BTreeMap<VertexId, Vec<(Vec<ArrowId>, VertexId)>>,
}

impl PathBasis {
    /// Default length bound: `10 · |Q_1|`.
    pub fn new(q: &BoundIceQuiver) -> Result<PathBasis> {
        PathBasis::with_bound(q, 10 * q.arrows().count().max(1))
    }

    pub fn with_bound(q: &BoundIceQuiver, bound: usize) -> Result<PathBasis> {
        let mut paths = BTreeMap::new();
        for i in q.vertices() {
            let mut all: Vec<(Vec<ArrowId>, VertexId)> = vec![(Vec::new(), i.clone())];
            let mut frontier = all.clone();
            while !frontier.is_empty() {
                let mut next = Vec::new();
                for (p, at) in &frontier {
                    for a in q.arrows_from(at) {
                        let mut np = p.clone();
                        np.push(a.id.clone());
                        if ends_in_relation(q, &np) {
                            continue;
                        }
                        if np.len() > bound {
                            return Err(Error::InfiniteDimensional(bound));
                        }
                        next.push((np, a.target.clone()));
                    }
                }
                all.extend(next.iter().cloned());
                frontier = next;
            }
            paths.insert(i.clone(), all);
        }
        Ok(PathBasis { paths })
    }

    /// Paths from `i` with their end vertices, shortest first.
    pub fn from_vertex(&self, i: &VertexId) -> &[(Vec<ArrowId>, VertexId)] {
        &self.paths[i]
    }

    /// `P_i` as a representation.
    pub fn projective(&self, q: &BoundIceQuiver, i: &VertexId) -> Result<Representation> {
        let ps = self.from_vertex(i);
        let mut local: Vec<usize> = Vec::with_capacity(ps.len());
        let mut dims: BTreeMap<VertexId, usize> = BTreeMap::new();
        for (_, end) in ps {
            let d = dims.entry(end.clone()).or_insert(0);
            local.push(*d);
            *d += 1;
        }
        let index: BTreeMap<&[ArrowId], usize> = ps
            .iter()
            .enumerate()
            .map(|(k, (p, _))| (p.as_slice(), k))
            .collect();
        let dim = |v: &VertexId| dims.get(v).copied().unwrap_or(0);
        let mut maps = BTreeMap::new();
        for a in q.arrows() {
            let mut m = QMatrix::zeros(dim(&a.target), dim(&a.source));
            for (k, (p, end)) in ps.iter().enumerate() {
                if *end != a.source {
                    continue;
                }
                let mut pa = p.clone();
                pa.push(a.id.clone());
                if let Some(&t) = index.get(pa.as_slice()) {
                    m.set(local[t], local[k], Q::one());
                }
            }
            maps.insert(a.id.clone(), m);
        }
        Representation::new(q, dims, maps)
    }
}

fn ends_in_relation(q: &BoundIceQuiver, p: &[ArrowId]) -> bool {
    q.relations()
        .iter()
        .any(|r| r.len() <= p.len() && p[p.len() - r.len()..] == r[..])
}

/// The commuting-square system whose kernel is `Hom(M, N)`: unknowns are
/// the entries of `f_v: M(v) -> N(v)`, row-major per vertex.
fn hom_system(
    q: &BoundIceQuiver,
    m: &Representation,
    n: &Representation,
) -> (QMatrix, BTreeMap<VertexId, usize>) {
    let mut offset = BTreeMap::new();
    let mut unknowns = 0;
    for v in q.vertices() {
        offset.insert(v.clone(), unknowns);
        unknowns += n.dim(v) * m.dim(v);
    }
    let rows: usize = q
        .arrows()
        .map(|a| n.dim(&a.target) * m.dim(&a.source))
        .sum();
    let mut sys = QMatrix::zeros(rows, unknowns);
    let mut row = 0;
    for a in q.arrows() {
        let (s, t) = (&a.source, &a.target);
        let (ma, na) = (m.map(&a.id), n.map(&a.id));
        let (ms, mt, ns) = (m.dim(s), m.dim(t), n.dim(s));
        // (f_t M(a) - N(a) f_s)[r][c] = 0
        for r in 0..n.dim(t) {
            for c in 0..ms {
                for k in 0..mt {
                    let coef = ma.get(k, c);
                    if !coef.is_zero() {
                        let col = offset[t] + r * mt + k;
                        let v = sys.get(row, col) + coef;
                        sys.set(row, col, v);
                    }
                }
                for k in 0..ns {
                    let coef = na.get(r, k);
                    if !coef.is_zero() {
                        let col = offset[s] + k * ms + c;
                        let v = sys.get(row, col) - coef;
                        sys.set(row, col, v);
                    }
                }
                row += 1;
            }
        }
    }
    (sys, offset)
}

/// `dim Hom(M, N)`.
pub fn hom_dim(q: &BoundIceQuiver, m: &Representation, n: &Representation) -> usize {
    let (sys, _) = hom_system(q, m, n);
    sys.cols() - sys.rank()
}

/// `dim M(i) / rad M(i)`, with `rad M(i)` the sum of the images of the
/// arrows ending at `i`, and vectors spanning a complement of the radical.
fn top(q: &BoundIceQuiver, m: &Representation, i: &VertexId) -> Vec<Vec<Q>> {
    let d = m.dim(i);
    let mut cols: Vec<Vec<Q>> = Vec::new();
    for a in q.arrows_into(i) {
        let ma = m.map(&a.id);
        cols.extend((0..ma.cols()).map(|c| ma.column(c)));
    }
    let mut rank = QMatrix::from_columns(d, &cols).rank();
    let mut out = Vec::new();
    for k in 0..d {
        let mut e = vec![Q::zero(); d];
        e[k] = Q::one();
        cols.push(e.clone());
        let r = QMatrix::from_columns(d, &cols).rank();
        if r > rank {
            rank = r;
            out.push(e);
        } else {
            cols.pop();
        }
    }
    out
}

/// A projective cover `π: P_0 -> M` and its kernel `ΩM`.
pub struct Syzygy {
    pub cover: Representation,
    /// Multiplicity of `P_i` in `P_0`.
    pub top: BTreeMap<VertexId, usize>,
    pub kernel: Representation,
}

pub fn syzygy(q: &BoundIceQuiver, basis: &PathBasis, m: &Representation) -> Result<Syzygy> {
    let mut cover = Representation::zero(q);
    let mut top_mult = BTreeMap::new();
    // images of every basis path of P_0, grouped by end vertex
    let mut images: BTreeMap<VertexId, Vec<Vec<Q>>> = BTreeMap::new();
    for i in q.vertices() {
        let gens = top(q, m, i);
        top_mult.insert(i.clone(), gens.len());
        if gens.is_empty() {
            continue;
        }
        let p = basis.projective(q, i)?;
        for g in &gens {
            cover = cover.direct_sum(&p);
            for (path, end) in basis.from_vertex(i) {
                let mut v = g.clone();
                for a in path {
                    v = m.map(a).apply(&v);
                }
                images.entry(end.clone()).or_default().push(v);
            }
        }
    }
    let mut kernel_basis: BTreeMap<VertexId, QMatrix> = BTreeMap::new();
    let mut dims = BTreeMap::new();
    for v in q.vertices() {
        let cols = images.remove(v).unwrap_or_default();
        let pi = QMatrix::from_columns(m.dim(v), &cols);
        let ns = pi.nullspace();
        dims.insert(v.clone(), ns.len());
        kernel_basis.insert(v.clone(), QMatrix::from_columns(cover.dim(v), &ns));
    }
    let mut maps = BTreeMap::new();
    for a in q.arrows() {
        let (ks, kt) = (&kernel_basis[&a.source], &kernel_basis[&a.target]);
        let mut mat = QMatrix::zeros(kt.cols(), ks.cols());
        for c in 0..ks.cols() {
            let image = cover.map(&a.id).apply(&ks.column(c));
            let y = kt
                .solve(&image)
                .ok_or_else(|| Error::Malformed("syzygy is not a subrepresentation".into()))?;
            for (r, val) in y.into_iter().enumerate() {
                mat.set(r, c, val);
            }
        }
        maps.insert(a.id.clone(), mat);
    }
    let kernel = Representation::new(q, dims, maps)?;
    Ok(Syzygy {
        cover,
        top: top_mult,
        kernel,
    })
}

/// `dim Ext¹(M, N)` from `0 -> ΩM -> P_0 -> M -> 0`:
/// `hom(ΩM, N) − hom(P_0, N) + hom(M, N)`.
pub fn ext1_dim(q: &BoundIceQuiver, m: &Representation, n: &Representation) -> Result<usize> {
    let basis = PathBasis::new(q)?;
    ext1_dim_with(q, &basis, m, n)
}

pub fn ext1_dim_with(
    q: &BoundIceQuiver,
    basis: &PathBasis,
    m: &Representation,
    n: &Representation,
) -> Result<usize> {
    let s = syzygy(q, basis, m)?;
    let hom_p0: usize = s.top.iter().map(|(i, k)| k * n.dim(i)).sum();
    let total = hom_dim(q, &s.kernel, n) + hom_dim(q, m, n);
    Ok(total - hom_p0)
}

/// `(⟨M, N⟩, ⟨M, N⟩_a)` with `⟨M, N⟩ = hom − ext¹` and
/// `⟨M, N⟩_a = ⟨M, N⟩ − ⟨N, M⟩`.
pub fn euler_forms(
    q: &BoundIceQuiver,
    m: &Representation,
    n: &Representation,
) -> Result<(i64, i64)> {
    let basis = PathBasis::new(q)?;
    euler_forms_with(q, &basis, m, n)
}

pub fn euler_forms_with(
    q: &BoundIceQuiver,
    basis: &PathBasis,
    m: &Representation,
    n: &Representation,
) -> Result<(i64, i64)> {
    let mn = truncated_euler_with(q, basis, m, n)?;
    let nm = truncated_euler_with(q, basis, n, m)?;
    Ok((mn, mn - nm))
}

pub fn truncated_euler_with(
    q: &BoundIceQuiver,
    basis: &PathBasis,
    m: &Representation,
    n: &Representation,
) -> Result<i64> {
    Ok(hom_dim(q, m, n) as i64 - ext1_dim_with(q, basis, m, n)? as i64)
}

/// `Σ d_i e_i − Σ_α d_{s(α)} e_{t(α)}` on an acyclic relation-free quiver.
pub fn hereditary_euler(
    q: &BoundIceQuiver,
    d: &BTreeMap<VertexId, usize>,
    e: &BTreeMap<VertexId, usize>,
) -> Result<i64> {
    if !q.relations().is_empty() {
        return Err(Error::NotHereditary("quiver has relations".into()));
    }
    if !q.is_acyclic() {
        return Err(Error::NotHereditary("quiver has an oriented cycle".into()));
    }
    let get = |m: &BTreeMap<VertexId, usize>, v: &VertexId| m.get(v).copied().unwrap_or(0) as i64;
    let diag: i64 = q.vertices().iter().map(|v| get(d, v) * get(e, v)).sum();
    let off: i64 = q
        .arrows()
        .map(|a| get(d, &a.source) * get(e, &a.target))
        .sum();
    Ok(diag - off)
}

/// `n_i = ⟨S_i, M⟩ − Σ_{j ∈ Φ_0^{-1}(i)} ⟨S_j, M̃⟩` over the closure of the
/// support of `M = M_c`, the second form taken in the path algebra of the
/// blow-up.
pub fn normalisation_vector(q: &BoundIceQuiver, c: &Walk) -> Result<BTreeMap<VertexId, i64>> {
    let m = string_module(q, c)?;
    let bu = blow_up(q, c)?;
    let (closure, _) = closure_and_border(q, &m)?;
    let basis = PathBasis::new(q)?;
    let mut out = BTreeMap::new();
    for i in closure.vertices() {
        let s = Representation::simple(q, i)?;
        let mut n = truncated_euler_with(q, &basis, &s, &m)?;
        for j in bu.winding.vertex_preimage(i) {
            let sj = BTreeMap::from([(j.clone(), 1usize)]);
            n -= hereditary_euler(&bu.quiver, &sj, bu.module.dim_vector())?;
        }
        out.insert(i.clone(), n);
    }
    Ok(out)
}

/// `Ext¹(M, M) = 0`.
pub fn is_rigid(q: &BoundIceQuiver, m: &Representation) -> Result<bool> {
    Ok(ext1_dim(q, m, m)? == 0)
}

/// The matrix `⟨S_i, S_j⟩_a` over all vertices.
pub fn simple_antisymmetric_matrix(
    q: &BoundIceQuiver,
    basis: &PathBasis,
) -> Result<BTreeMap<(VertexId, VertexId), i64>> {
    let simples: BTreeMap<&VertexId, Representation> = q
        .vertices()
        .iter()
        .map(|v| Ok((v, Representation::simple(q, v)?)))
        .collect::<Result<_>>()?;
    let mut out = BTreeMap::new();
    for (i, si) in &simples {
        for (j, sj) in &simples {
            let (_, a) = euler_forms_with(q, basis, si, sj)?;
            out.insert(((*i).clone(), (*j).clone()), a);
        }
    }
    Ok(out)
}

/// Checks that `⟨S_i, M⟩_a = Σ_j dim M(j) ⟨S_i, S_j⟩_a` for every vertex
/// `i`, returning the first vertex where it fails.
pub fn k0_defect(
    q: &BoundIceQuiver,
    basis: &PathBasis,
    simples_a: &BTreeMap<(VertexId, VertexId), i64>,
    m: &Representation,
) -> Result<Option<VertexId>> {
    for i in q.vertices() {
        let si = Representation::simple(q, i)?;
        let (_, direct) = euler_forms_with(q, basis, &si, m)?;
        let linear: i64 = m
            .dim_vector()
            .iter()
            .map(|(j, d)| *d as i64 * simples_a[&(i.clone(), j.clone())])
            .sum();
        if direct != linear {
            return Ok(Some(i.clone()));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::families;

    fn s(q: &BoundIceQuiver, v: &str) -> Representation {
        Representation::simple(q, &v.into()).unwrap()
    }

    fn sm(q: &BoundIceQuiver, w: &str) -> Representation {
        string_module(q, &w.parse().unwrap()).unwrap()
    }

    #[test]
    fn hom_examples() {
        let a2 = families::linear_a(2);
        assert_eq!(hom_dim(&a2, &s(&a2, "1"), &s(&a2, "1")), 1);
        assert_eq!(hom_dim(&a2, &s(&a2, "1"), &s(&a2, "2")), 0);
        let q = families::ice_a2();
        let b = PathBasis::new(&q).unwrap();
        let p1 = b.projective(&q, &"1".into()).unwrap();
        let p2 = b.projective(&q, &"2".into()).unwrap();
        assert_eq!(p1, sm(&q, "alpha"));
        assert_eq!(hom_dim(&q, &p2, &p1), 1);
    }

    #[test]
    fn ext_examples() {
        let a2 = families::linear_a(2);
        assert_eq!(ext1_dim(&a2, &s(&a2, "1"), &s(&a2, "2")).unwrap(), 1);
        assert_eq!(ext1_dim(&a2, &s(&a2, "2"), &s(&a2, "1")).unwrap(), 0);
        let q = families::ice_a2();
        assert_eq!(ext1_dim(&q, &s(&q, "1"), &s(&q, "2")).unwrap(), 1);
        let b = PathBasis::new(&q).unwrap();
        for i in q.vertices() {
            let p = b.projective(&q, i).unwrap();
            for w in ["e(1)", "e(2)", "e(3)", "alpha", "beta", "gamma"] {
                assert_eq!(ext1_dim(&q, &p, &sm(&q, w)).unwrap(), 0);
            }
        }
    }

    #[test]
    fn euler_form_examples() {
        let a2 = families::linear_a(2);
        assert_eq!(euler_forms(&a2, &s(&a2, "1"), &s(&a2, "1")).unwrap().1, 0);
        assert_eq!(euler_forms(&a2, &s(&a2, "1"), &s(&a2, "2")).unwrap().1, -1);
        let p1 = sm(&a2, "a1");
        assert!(euler_forms(&a2, &p1, &p1).unwrap().0 >= 1);
        let d1 = s(&a2, "1").dim_vector().clone();
        let d2 = s(&a2, "2").dim_vector().clone();
        assert_eq!(hereditary_euler(&a2, &d1, &d2).unwrap(), -1);
        assert_eq!(hereditary_euler(&a2, &d2, &d1).unwrap(), 0);
        assert!(matches!(
            hereditary_euler(&families::ice_a2(), &d1, &d2),
            Err(Error::NotHereditary(_))
        ));
    }

    #[test]
    fn normalisation_examples() {
        let q = families::ice_a2();
        let n = normalisation_vector(&q, &"alpha".parse().unwrap()).unwrap();
        let v: Vec<i64> = n.values().copied().collect();
        assert_eq!(v, [0, 0, 1]);
        let n = normalisation_vector(&q, &Walk::trivial("1")).unwrap();
        assert!(n.values().all(|x| *x == 0));
        let a3 = families::oriented_a(&[true, false]);
        for c in crate::quiver::enumerate_strings(&a3, 3) {
            let n = normalisation_vector(&a3, &c).unwrap();
            assert!(n.values().all(|x| *x == 0), "{c}");
        }
    }

    #[test]
    fn rigidity() {
        let a2 = families::linear_a(2);
        assert!(is_rigid(&a2, &s(&a2, "1")).unwrap());
        assert!(is_rigid(&a2, &s(&a2, "2")).unwrap());
        assert!(!is_rigid(&a2, &s(&a2, "1").direct_sum(&s(&a2, "2"))).unwrap());
        let q = families::ice_a2();
        assert!(is_rigid(&q, &sm(&q, "alpha")).unwrap());
    }

    #[test]
    fn infinite_algebra_is_reported() {
        let q = BoundIceQuiver::builder()
            .vertices(["1", "2"])
            .arrow("a", "1", "2")
            .arrow("b", "2", "1")
            .build()
            .unwrap();
        assert!(matches!(
            PathBasis::new(&q),
            Err(Error::InfiniteDimensional(_))
        ));
    }
}
