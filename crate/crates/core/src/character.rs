//! Grassmannian Euler characteristics and cluster characters of string
//! modules.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::homalg::{euler_forms_with, hereditary_euler, PathBasis};
use crate::id::VertexId;
use crate::laurent::{LaurentPoly, Monomial};
use crate::quiver::{
    closure_and_border, string_module, validate_string, BoundIceQuiver, Dir, Representation, Walk,
    Winding,
};

pub type DimVector = BTreeMap<VertexId, usize>;

/// The coefficient quiver of a string module: one basis vector per
/// position of the walk and one edge per step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StringDiagram {
    pub labels: Vec<VertexId>,
    /// `Forward` at index `k` is an edge `k -> k+1`, `Inverse` is `k+1 -> k`.
    pub edges: Vec<Dir>,
}

impl StringDiagram {
    pub fn new(q: &BoundIceQuiver, c: &Walk) -> Result<StringDiagram> {
        validate_string(q, c)?;
        Ok(StringDiagram {
            labels: c.vertices(q)?,
            edges: c.steps().iter().map(|s| s.dir).collect(),
        })
    }

    /// Closed under the edges: `p ∈ S` and `p -> q` imply `q ∈ S`.
    pub fn is_closed(&self, subset: &[bool]) -> bool {
        self.edges.iter().enumerate().all(|(k, d)| match d {
            Dir::Forward => !subset[k] || subset[k + 1],
            Dir::Inverse => !subset[k + 1] || subset[k],
        })
    }

    /// Number of closed subsets for each dimension vector, by a left to
    /// right scan over the positions.
    pub fn submodule_counts(&self) -> BTreeMap<DimVector, BigInt> {
        let names: Vec<VertexId> = self
            .labels
            .iter()
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let slot: Vec<usize> = self
            .labels
            .iter()
            .map(|v| names.binary_search(v).expect("label"))
            .collect();
        // state: (last position chosen, counts per slot)
        let mut states: BTreeMap<(bool, Vec<usize>), BigInt> = BTreeMap::new();
        let zero = vec![0; names.len()];
        states.insert((false, zero.clone()), BigInt::one());
        let mut with_first = zero;
        with_first[slot[0]] += 1;
        states.insert((true, with_first), BigInt::one());
        for (k, d) in self.edges.iter().enumerate() {
            let mut next: BTreeMap<(bool, Vec<usize>), BigInt> = BTreeMap::new();
            for ((prev, dims), n) in states {
                for take in [false, true] {
                    let ok = match d {
                        Dir::Forward => !prev || take,
                        Dir::Inverse => !take || prev,
                    };
                    if !ok {
                        continue;
                    }
                    let mut e = dims.clone();
                    if take {
                        e[slot[k + 1]] += 1;
                    }
                    *next.entry((take, e)).or_insert_with(BigInt::zero) += &n;
                }
            }
            states = next;
        }
        let mut out: BTreeMap<DimVector, BigInt> = BTreeMap::new();
        for ((_, dims), n) in states {
            let e: DimVector = names
                .iter()
                .zip(dims)
                .filter(|(_, d)| *d > 0)
                .map(|(v, d)| (v.clone(), d))
                .collect();
            *out.entry(e).or_insert_with(BigInt::zero) += n;
        }
        out
    }
}

/// `χ(Gr_e(M_c))`; zero entries of `e` may be omitted.
pub fn gr_euler(q: &BoundIceQuiver, c: &Walk, e: &DimVector) -> Result<BigInt> {
    let key: DimVector = e
        .iter()
        .filter(|(_, d)| **d > 0)
        .map(|(v, d)| (v.clone(), *d))
        .collect();
    Ok(StringDiagram::new(q, c)?
        .submodule_counts()
        .remove(&key)
        .unwrap_or_else(BigInt::zero))
}

/// `χ(Gr(M_c)) = Σ_e χ(Gr_e(M_c))`.
pub fn total_gr_euler(q: &BoundIceQuiver, c: &Walk) -> Result<BigInt> {
    Ok(StringDiagram::new(q, c)?
        .submodule_counts()
        .into_values()
        .sum())
}

fn check_ice(q: &BoundIceQuiver) -> Result<()> {
    match q.loop_or_two_cycle() {
        Some(v) => Err(Error::LoopOrTwoCycle(v.to_string())),
        None => Ok(()),
    }
}

/// `X_M = Σ_e χ(Gr_e(M)) ∏_i x_i^{⟨S_i, e⟩_a − ⟨S_i, M⟩}` for `M = M_c`,
/// the product running over the closure of the support.
///
/// `⟨S_i, e⟩_a` is extended bilinearly from the simples; this is refused
/// with `K0IllDefined` when `⟨S_i, M⟩_a` itself disagrees with that
/// extension.
pub fn cluster_character(q: &BoundIceQuiver, c: &Walk) -> Result<LaurentPoly> {
    check_ice(q)?;
    let diagram = StringDiagram::new(q, c)?;
    if let Some(v) = diagram.labels.iter().find(|v| q.is_frozen(v)) {
        return Err(Error::UnfrozenViolation(v.to_string()));
    }
    let m = string_module(q, c)?;
    let (closure, _) = closure_and_border(q, &m)?;
    let basis = PathBasis::new(q)?;
    let support = m.support();
    let simples: BTreeMap<&VertexId, Representation> = closure
        .vertices()
        .iter()
        .map(|v| Ok((v, Representation::simple(q, v)?)))
        .collect::<Result<_>>()?;
    let mut anti: BTreeMap<(&VertexId, &VertexId), i64> = BTreeMap::new();
    let mut shift: BTreeMap<&VertexId, i64> = BTreeMap::new();
    for i in closure.vertices() {
        for k in &support {
            let (_, a) = euler_forms_with(q, &basis, &simples[i], &simples[k])?;
            anti.insert((i, k), a);
        }
        let (t, a) = euler_forms_with(q, &basis, &simples[i], &m)?;
        let linear: i64 = support
            .iter()
            .map(|k| m.dim(k) as i64 * anti[&(i, k)])
            .sum();
        if a != linear {
            return Err(Error::K0IllDefined {
                vertex: i.to_string(),
            });
        }
        shift.insert(i, t);
    }
    let mut out = LaurentPoly::zero();
    for (e, n) in diagram.submodule_counts() {
        let exps = closure.vertices().iter().map(|i| {
            let s: i64 = e.iter().map(|(k, d)| *d as i64 * anti[&(i, k)]).sum();
            (i.clone(), s - shift[i])
        });
        out += LaurentPoly::term(Monomial::from_exponents(exps), n);
    }
    Ok(out)
}

/// The name of the frozen vertex attached to `i` by the principal
/// extension; its variable is `y_i`.
pub fn principal_vertex(i: &VertexId) -> VertexId {
    VertexId::from(format!("{i}'"))
}

/// `X^pp_M = Σ_e χ(Gr_e(M)) ∏_i x_i^{−⟨e, S_i⟩ − ⟨S_i, m − e⟩} y_i^{m_i − e_i}`
/// with the Euler form of the path algebra of `q`.
pub fn pp_character(q: &BoundIceQuiver, c: &Walk) -> Result<LaurentPoly> {
    let diagram = StringDiagram::new(q, c)?;
    let m: DimVector = string_module(q, c)?
        .dim_vector()
        .iter()
        .filter(|(_, d)| **d > 0)
        .map(|(v, d)| (v.clone(), *d))
        .collect();
    let mut out = LaurentPoly::zero();
    for (e, n) in diagram.submodule_counts() {
        let rest: DimVector = m
            .iter()
            .map(|(v, d)| (v.clone(), d - e.get(v).copied().unwrap_or(0)))
            .collect();
        let mut exps = Vec::new();
        for i in q.vertices() {
            let si = DimVector::from([(i.clone(), 1)]);
            let xe = -hereditary_euler(q, &e, &si)? - hereditary_euler(q, &si, &rest)?;
            exps.push((i.clone(), xe));
            let ye = rest.get(i).copied().unwrap_or(0) as i64;
            exps.push((principal_vertex(i), ye));
        }
        out += LaurentPoly::term(Monomial::from_exponents(exps), n);
    }
    Ok(out)
}

/// The matrix formula over the principal extension of `q`.
pub fn pp_walk_laurent(q: &BoundIceQuiver, c: &Walk) -> Result<LaurentPoly> {
    crate::formula::walk_laurent(&q.principal_extension()?, c)
}

/// `i' ↦ w_i` for every unfrozen vertex of the ice quiver `q`.
pub fn separation_weights(q: &BoundIceQuiver) -> BTreeMap<VertexId, Monomial> {
    q.unfrozen()
        .iter()
        .map(|i| (principal_vertex(i), crate::formula::w_monomial(q, i)))
        .collect()
}

/// The separation `σ(f) = f(x, w) / f|_ℙ(1, …, 1, w)`.
///
/// The keys of `w` are the variables being replaced; the tropical
/// semifield is generated by the variables occurring in the `w_i`.
pub fn separate(f: &LaurentPoly, w: &BTreeMap<VertexId, Monomial>) -> Result<LaurentPoly> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    if !f.is_nonnegative() {
        return Err(Error::NotSubtractionFree);
    }
    let assignment: BTreeMap<VertexId, LaurentPoly> = w
        .iter()
        .map(|(k, m)| (k.clone(), LaurentPoly::monomial(m.clone())))
        .collect();
    let g = f.substitute(&assignment)?;
    let generators: BTreeSet<VertexId> = w
        .values()
        .flat_map(|m| m.iter().map(|(v, _)| v.clone()))
        .collect();
    let d = g.tropical_min_eval(&generators)?;
    Ok(g.mul_monomial(&d.inverse()))
}

/// The ring map induced by a winding on variables.
pub fn wind(phi: &Winding, f: &LaurentPoly) -> Result<LaurentPoly> {
    let assignment: BTreeMap<VertexId, LaurentPoly> = phi
        .vertex_map
        .iter()
        .map(|(s, t)| (s.clone(), LaurentPoly::var(t.clone())))
        .collect();
    f.substitute(&assignment)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::walk_laurent;
    use crate::laurent::x;
    use crate::quiver::{enumerate_strings, families};

    fn w(s: &str) -> Walk {
        s.parse().unwrap()
    }

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn e(pairs: &[(&str, usize)]) -> DimVector {
        pairs
            .iter()
            .map(|(v, d)| (VertexId::from(*v), *d))
            .collect()
    }

    #[test]
    fn grassmannian_counts() {
        let a2 = families::linear_a(2);
        assert_eq!(gr_euler(&a2, &w("a1"), &e(&[])).unwrap(), 1.into());
        assert_eq!(gr_euler(&a2, &w("a1"), &e(&[("2", 1)])).unwrap(), 1.into());
        assert_eq!(gr_euler(&a2, &w("a1"), &e(&[("1", 1)])).unwrap(), 0.into());
        let q = families::double_arrow();
        assert_eq!(
            gr_euler(&q, &w("epsilon^-1 gamma"), &e(&[("3", 1)])).unwrap(),
            2.into()
        );
        assert_eq!(total_gr_euler(&a2, &w("e(1)")).unwrap(), 2.into());
        assert_eq!(total_gr_euler(&a2, &w("a1")).unwrap(), 3.into());
        assert_eq!(
            total_gr_euler(&families::kronecker(2), &w("a1^-1 a2")).unwrap(),
            5.into()
        );
    }

    #[test]
    fn counts_match_brute_force() {
        let q = families::five_vertex();
        for c in enumerate_strings(&q, 4) {
            let d = StringDiagram::new(&q, &c).unwrap();
            let n = d.labels.len();
            let mut brute: BTreeMap<DimVector, BigInt> = BTreeMap::new();
            for mask in 0u32..(1 << n) {
                let s: Vec<bool> = (0..n).map(|k| mask >> k & 1 == 1).collect();
                if d.is_closed(&s) {
                    let mut dv = DimVector::new();
                    for (k, v) in d.labels.iter().enumerate() {
                        if s[k] {
                            *dv.entry(v.clone()).or_insert(0) += 1;
                        }
                    }
                    *brute.entry(dv).or_insert_with(BigInt::zero) += 1;
                }
            }
            assert_eq!(d.submodule_counts(), brute, "{c}");
        }
    }

    #[test]
    fn cluster_character_examples() {
        let a2 = families::linear_a(2);
        assert_eq!(
            cluster_character(&a2, &w("e(1)")).unwrap(),
            p("x[1]^-1 x[2] + x[1]^-1")
        );
        let q = families::ice_a2();
        let xp1 = cluster_character(&q, &w("alpha")).unwrap();
        let expect = p("x[1]^-1 + x[2]^-1 + x[1]^-1 x[2]^-1 x[3]");
        assert_eq!(xp1, expect);
        assert_eq!(
            cluster_character(&q, &w("e(2)")).unwrap(),
            walk_laurent(&q, &w("e(2)")).unwrap()
        );
        assert!(matches!(
            cluster_character(&q, &w("beta")),
            Err(Error::UnfrozenViolation(_))
        ));
    }

    #[test]
    fn pp_examples() {
        let a2 = families::linear_a(2);
        assert_eq!(
            pp_character(&a2, &w("e(1)")).unwrap(),
            p("x[1]^-1 x[2] + x[1]^-1 x[1']")
        );
        assert_eq!(
            pp_character(&a2, &w("a1")).unwrap(),
            p("x[1]^-1 x[2]^-1 x[1'] + x[1]^-1 + x[2]^-1 x[1'] x[2']")
        );
        let pe = a2.principal_extension().unwrap();
        for c in enumerate_strings(&a2, 2) {
            assert_eq!(
                pp_character(&a2, &c).unwrap(),
                cluster_character(&pe, &c).unwrap(),
                "{c}"
            );
        }
    }

    #[test]
    fn separation_examples() {
        let w1 = BTreeMap::from([(VertexId::from("1'"), Monomial::var("3"))]);
        assert_eq!(separate(&x("1'"), &w1).unwrap(), LaurentPoly::one());
        let q = families::ice_a2();
        let wts = separation_weights(&q);
        assert_eq!(wts[&VertexId::from("1'")], Monomial::var("3"));
        assert_eq!(wts[&VertexId::from("2'")], Monomial::var("3").inverse());
        let a2 = q.unfrozen_part();
        let s1 = pp_character(&a2, &w("e(1)")).unwrap();
        assert_eq!(
            separate(&s1, &wts).unwrap(),
            cluster_character(&q, &w("e(1)")).unwrap()
        );
        assert!(matches!(
            separate(&-x("1"), &wts),
            Err(Error::NotSubtractionFree)
        ));
    }
}
