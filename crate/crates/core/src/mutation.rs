//! Seeds of cluster algebras of geometric type and their mutations.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::id::VertexId;
use crate::laurent::{x, LaurentPoly};
use crate::quiver::BoundIceQuiver;

/// An extended exchange matrix with rows indexed by all vertices (unfrozen
/// first, then frozen) and columns by the unfrozen ones, together with a
/// cluster in the initial variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Seed {
    rows: Vec<VertexId>,
    cols: usize,
    b: Vec<Vec<i64>>,
    cluster: Vec<LaurentPoly>,
}

impl Seed {
    /// Builds a seed from raw data; `b` has one row per entry of `rows` and
    /// `cluster.len()` columns, the first `cluster.len()` rows being the
    /// mutable ones.
    pub fn new(rows: Vec<VertexId>, b: Vec<Vec<i64>>, cluster: Vec<LaurentPoly>) -> Result<Seed> {
        let n = cluster.len();
        if rows.len() < n || b.len() != rows.len() || b.iter().any(|r| r.len() != n) {
            return Err(Error::Malformed(
                "exchange matrix has the wrong shape".into(),
            ));
        }
        if (0..n).any(|i| (0..n).any(|j| b[i][j] != -b[j][i])) {
            return Err(Error::Malformed(
                "principal part is not skew-symmetric".into(),
            ));
        }
        Ok(Seed {
            rows,
            cols: n,
            b,
            cluster,
        })
    }

    pub fn rows(&self) -> &[VertexId] {
        &self.rows
    }

    pub fn unfrozen(&self) -> &[VertexId] {
        &self.rows[..self.cols]
    }

    pub fn frozen(&self) -> &[VertexId] {
        &self.rows[self.cols..]
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.b
    }

    pub fn entry(&self, i: &VertexId, j: &VertexId) -> Option<i64> {
        let r = self.rows.iter().position(|v| v == i)?;
        let c = self.unfrozen().iter().position(|v| v == j)?;
        Some(self.b[r][c])
    }

    pub fn cluster(&self) -> &[LaurentPoly] {
        &self.cluster
    }

    pub fn variable(&self, k: &VertexId) -> Option<&LaurentPoly> {
        self.unfrozen()
            .iter()
            .position(|v| v == k)
            .map(|i| &self.cluster[i])
    }

    fn value(&self, r: usize) -> LaurentPoly {
        match self.cluster.get(r) {
            Some(f) => f.clone(),
            None => x(&self.rows[r]),
        }
    }

    fn column_of(&self, k: &VertexId) -> Result<usize> {
        if let Some(c) = self.unfrozen().iter().position(|v| v == k) {
            return Ok(c);
        }
        if self.frozen().contains(k) {
            return Err(Error::FrozenMutation(k.to_string()));
        }
        Err(Error::UnknownVertex(k.to_string()))
    }

    /// Mutation in direction `k`.
    pub fn mutate(&self, k: &VertexId) -> Result<Seed> {
        let k = self.column_of(k)?;
        self.mutate_at(k)
    }

    fn mutate_at(&self, k: usize) -> Result<Seed> {
        let mut plus = LaurentPoly::one();
        let mut minus = LaurentPoly::one();
        for (r, row) in self.b.iter().enumerate() {
            let e = row[k];
            if e > 0 {
                plus = &plus * &self.value(r).pow(e as u32);
            } else if e < 0 {
                minus = &minus * &self.value(r).pow((-e) as u32);
            }
        }
        let fresh = (&plus + &minus).exact_div(&self.cluster[k])?;
        let b = self
            .b
            .iter()
            .enumerate()
            .map(|(i, row)| {
                (0..self.cols)
                    .map(|j| {
                        if i == k || j == k {
                            -row[j]
                        } else {
                            let (bik, bkj) = (row[k], self.b[k][j]);
                            row[j] + bik.signum() * (bik * bkj).max(0)
                        }
                    })
                    .collect()
            })
            .collect();
        let mut cluster = self.cluster.clone();
        cluster[k] = fresh;
        Ok(Seed {
            rows: self.rows.clone(),
            cols: self.cols,
            b,
            cluster,
        })
    }

    /// Orders the mutable positions by their variables' text so that
    /// seeds differing by a relabelling compare equal.
    pub fn canonical_key(&self) -> (Vec<String>, Vec<Vec<i64>>) {
        let texts: Vec<String> = self.cluster.iter().map(|f| f.to_string()).collect();
        let mut order: Vec<usize> = (0..self.cols).collect();
        order.sort_by(|&a, &b| texts[a].cmp(&texts[b]));
        let all_rows = order.iter().copied().chain(self.cols..self.rows.len());
        let b = all_rows
            .map(|r| order.iter().map(|&c| self.b[r][c]).collect())
            .collect();
        (order.iter().map(|&i| texts[i].clone()).collect(), b)
    }
}

/// `b_ij = |Q_1(i, j)| − |Q_1(j, i)|`, with cluster variable `x_i` at `i`.
pub fn seed_from_ice_quiver(q: &BoundIceQuiver) -> Result<Seed> {
    if let Some(v) = q.loop_or_two_cycle() {
        return Err(Error::LoopOrTwoCycle(v.to_string()));
    }
    let unfrozen: Vec<VertexId> = q.unfrozen().into_iter().collect();
    let rows: Vec<VertexId> = unfrozen
        .iter()
        .cloned()
        .chain(q.frozen().iter().cloned())
        .collect();
    let b = rows
        .iter()
        .map(|i| {
            unfrozen
                .iter()
                .map(|j| q.arrow_count(i, j) as i64 - q.arrow_count(j, i) as i64)
                .collect()
        })
        .collect();
    let cluster = unfrozen.iter().map(x).collect();
    Seed::new(rows, b, cluster)
}

/// All cluster variables in seeds reachable by at most `max_depth`
/// mutations.
pub fn enumerate_cluster_variables(s: &Seed, max_depth: usize) -> Result<BTreeSet<LaurentPoly>> {
    let mut seen = BTreeSet::from([s.canonical_key()]);
    let mut vars: BTreeSet<LaurentPoly> = s.cluster.iter().cloned().collect();
    let mut frontier = vec![s.clone()];
    for _ in 0..max_depth {
        let next: Vec<Seed> = frontier
            .par_iter()
            .flat_map_iter(|seed| (0..seed.cols).map(move |k| seed.mutate_at(k)))
            .collect::<Result<_>>()?;
        let mut fresh: BTreeMap<(Vec<String>, Vec<Vec<i64>>), Seed> = BTreeMap::new();
        for seed in next {
            let key = seed.canonical_key();
            if !seen.contains(&key) {
                fresh.entry(key).or_insert(seed);
            }
        }
        if fresh.is_empty() {
            break;
        }
        frontier = Vec::with_capacity(fresh.len());
        for (key, seed) in fresh {
            seen.insert(key);
            vars.extend(seed.cluster.iter().cloned());
            frontier.push(seed);
        }
    }
    Ok(vars)
}

/// Whether `f` occurs among the cluster variables within `max_depth`
/// mutations.
pub fn match_character(s: &Seed, f: &LaurentPoly, max_depth: usize) -> Result<bool> {
    Ok(enumerate_cluster_variables(s, max_depth)?.contains(f))
}
