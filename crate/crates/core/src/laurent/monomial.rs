use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::id::VertexId;

/// A Laurent monomial `x^d` with sparse, vertex-keyed exponents.
///
/// Stored sorted by vertex with no zero exponents, so structural equality
/// is equality of monomials.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Monomial(Vec<(VertexId, i64)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: impl Into<VertexId>) -> Self {
        Monomial(vec![(v.into(), 1)])
    }

    pub fn from_exponents<I, V>(it: I) -> Self
    where
        I: IntoIterator<Item = (V, i64)>,
        V: Into<VertexId>,
    {
        let mut map: BTreeMap<VertexId, i64> = BTreeMap::new();
        for (v, e) in it {
            *map.entry(v.into()).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|(_, e)| *e != 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, v: &VertexId) -> i64 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(v))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VertexId, i64)> {
        self.0.iter().map(|(v, e)| (v, *e))
    }

    pub fn to_map(&self) -> BTreeMap<VertexId, i64> {
        self.0.iter().cloned().collect()
    }

    /// Total degree (sum of exponents).
    pub fn degree(&self) -> i64 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(i64, i64) -> i64) -> Self {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let (v, e) = match (a.get(i), b.get(j)) {
                (Some((u, x)), Some((w, y))) => match u.cmp(w) {
                    Ordering::Less => {
                        i += 1;
                        (u, f(*x, 0))
                    }
                    Ordering::Greater => {
                        j += 1;
                        (w, f(0, *y))
                    }
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                        (u, f(*x, *y))
                    }
                },
                (Some((u, x)), None) => {
                    i += 1;
                    (u, f(*x, 0))
                }
                (None, Some((w, y))) => {
                    j += 1;
                    (w, f(0, *y))
                }
                (None, None) => unreachable!(),
            };
            if e != 0 {
                out.push((v.clone(), e));
            }
        }
        Monomial(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.zip_with(other, |x, y| x + y)
    }

    pub fn div(&self, other: &Self) -> Self {
        self.zip_with(other, |x, y| x - y)
    }

    pub fn inverse(&self) -> Self {
        Monomial(self.0.iter().map(|(v, e)| (v.clone(), -e)).collect())
    }

    pub fn pow(&self, k: i64) -> Self {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|(v, e)| (v.clone(), e * k)).collect())
    }

    /// Componentwise minimum of exponents (missing exponents count as 0).
    pub fn gcd_like_min(&self, other: &Self) -> Self {
        self.zip_with(other, i64::min)
    }

    /// Componentwise `self <= other`, i.e. `self` divides `other` in the
    /// polynomial sense.
    pub fn divides(&self, other: &Self) -> bool {
        other.div(self).0.iter().all(|(_, e)| *e >= 0)
    }

    pub fn is_polynomial(&self) -> bool {
        self.0.iter().all(|(_, e)| *e >= 0)
    }

    /// Keep only the listed variables.
    pub fn restrict(&self, keep: impl Fn(&VertexId) -> bool) -> Self {
        Monomial(self.0.iter().filter(|(v, _)| keep(v)).cloned().collect())
    }
}

/// Lexicographic order of the dense exponent vectors, variables taken in
/// natural vertex order. Translation invariant, hence a monomial order on
/// the nonnegative part.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some((_, x)), None) => return x.cmp(&0),
                (None, Some((_, y))) => return 0.cmp(y),
                (Some((u, x)), Some((w, y))) => match u.cmp(w) {
                    Ordering::Less => return x.cmp(&0),
                    Ordering::Greater => return 0.cmp(y),
                    Ordering::Equal => {
                        if x != y {
                            return x.cmp(y);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
