use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::BoundIceQuiver;
use crate::error::{Error, Result};
use crate::id::{ArrowId, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    Forward,
    Inverse,
}

impl Dir {
    pub fn flip(self) -> Dir {
        match self {
            Dir::Forward => Dir::Inverse,
            Dir::Inverse => Dir::Forward,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Step {
    pub arrow: ArrowId,
    pub dir: Dir,
}

impl Step {
    pub fn forward(a: impl Into<ArrowId>) -> Step {
        Step {
            arrow: a.into(),
            dir: Dir::Forward,
        }
    }

    pub fn inverse(a: impl Into<ArrowId>) -> Step {
        Step {
            arrow: a.into(),
            dir: Dir::Inverse,
        }
    }

    pub fn flip(&self) -> Step {
        Step {
            arrow: self.arrow.clone(),
            dir: self.dir.flip(),
        }
    }

    /// Start and end vertex of the step.
    pub fn ends(&self, q: &BoundIceQuiver) -> Result<(VertexId, VertexId)> {
        let a = q.arrow(&self.arrow)?;
        Ok(match self.dir {
            Dir::Forward => (a.source.clone(), a.target.clone()),
            Dir::Inverse => (a.target.clone(), a.source.clone()),
        })
    }
}

/// A walk: a trivial path `e(v)` or a nonempty sequence of arrows and
/// formal inverses.
///
/// Walks are syntax; [`Walk::vertices`] checks them against a quiver.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Walk {
    Trivial(VertexId),
    Steps(Vec<Step>),
}

impl Walk {
    pub fn trivial(v: impl Into<VertexId>) -> Walk {
        Walk::Trivial(v.into())
    }

    /// Panics on an empty step list.
    pub fn from_steps(steps: Vec<Step>) -> Walk {
        assert!(!steps.is_empty(), "a nontrivial walk needs a step");
        Walk::Steps(steps)
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        match self {
            Walk::Trivial(_) => 0,
            Walk::Steps(s) => s.len(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, Walk::Trivial(_))
    }

    pub fn steps(&self) -> &[Step] {
        match self {
            Walk::Trivial(_) => &[],
            Walk::Steps(s) => s,
        }
    }

    pub fn inverse(&self) -> Walk {
        match self {
            Walk::Trivial(v) => Walk::Trivial(v.clone()),
            Walk::Steps(s) => Walk::Steps(s.iter().rev().map(Step::flip).collect()),
        }
    }

    /// `v_1, ..., v_{n+1}`, checking that every step composes.
    pub fn vertices(&self, q: &BoundIceQuiver) -> Result<Vec<VertexId>> {
        match self {
            Walk::Trivial(v) => {
                q.check_vertex(v)?;
                Ok(vec![v.clone()])
            }
            Walk::Steps(steps) => {
                let mut out = Vec::with_capacity(steps.len() + 1);
                for (i, s) in steps.iter().enumerate() {
                    let (a, b) = s.ends(q)?;
                    if let Some(last) = out.last() {
                        if *last != a {
                            return Err(Error::InvalidWalk(format!(
                                "step {} starts at `{a}` but the walk is at `{last}`",
                                i + 1
                            )));
                        }
                    } else {
                        out.push(a);
                    }
                    out.push(b);
                }
                Ok(out)
            }
        }
    }

    pub fn source(&self, q: &BoundIceQuiver) -> Result<VertexId> {
        Ok(self.vertices(q)?.swap_remove(0))
    }

    pub fn target(&self, q: &BoundIceQuiver) -> Result<VertexId> {
        Ok(self.vertices(q)?.pop().expect("nonempty"))
    }

    /// Appends a step, turning a trivial walk into a one-step walk.
    pub fn extended(&self, s: Step) -> Walk {
        let mut steps = self.steps().to_vec();
        steps.push(s);
        Walk::Steps(steps)
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Walk::Trivial(v) => write!(f, "e({v})"),
            Walk::Steps(steps) => {
                for (i, s) in steps.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    match s.dir {
                        Dir::Forward => write!(f, "{}", s.arrow)?,
                        Dir::Inverse => write!(f, "{}^-1", s.arrow)?,
                    }
                }
                Ok(())
            }
        }
    }
}

impl FromStr for Walk {
    type Err = Error;

    fn from_str(s: &str) -> Result<Walk> {
        let perr = |col: usize, message: String| Error::Parse {
            line: 1,
            column: col,
            message,
        };
        let mut steps = Vec::new();
        let mut trivial = None;
        let mut count = 0;
        let mut offset = 0;
        for tok in s.split_whitespace() {
            let col = s[offset..].find(tok).map_or(0, |p| p + offset);
            offset = col + tok.len();
            let col = s[..col].chars().count() + 1;
            count += 1;
            if let Some(inner) = tok.strip_prefix("e(").and_then(|t| t.strip_suffix(')')) {
                if inner.is_empty() {
                    return Err(perr(col, "empty vertex in `e(...)`".into()));
                }
                trivial = Some((col, VertexId::from(inner)));
            } else if let Some(a) = tok.strip_suffix("^-1") {
                if a.is_empty() {
                    return Err(perr(col, "missing arrow before `^-1`".into()));
                }
                steps.push(Step::inverse(a));
            } else if tok.contains('^') || tok.contains('(') || tok.contains(')') {
                return Err(perr(col, format!("malformed step `{tok}`")));
            } else {
                steps.push(Step::forward(tok));
            }
        }
        match (trivial, steps.is_empty()) {
            (Some((_, v)), true) if count == 1 => Ok(Walk::Trivial(v)),
            (Some((col, _)), _) => Err(perr(col, "`e(v)` must be the only token".into())),
            (None, true) => Err(perr(1, "empty walk".into())),
            (None, false) => Ok(Walk::Steps(steps)),
        }
    }
}

/// Why a walk fails to be a string. Indices are 1-based step positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StringViolation {
    /// `c_i = c_{i+1}^{-1}`.
    Backtrack { index: usize, arrow: ArrowId },
    /// Steps `start..=end`, read forward (or inverted when `inverted`),
    /// spell the relation.
    Relation {
        start: usize,
        end: usize,
        relation: Vec<ArrowId>,
        inverted: bool,
    },
}

impl fmt::Display for StringViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StringViolation::Backtrack { index, arrow } => write!(
                f,
                "c_{index} = c_{}^-1 (arrow `{arrow}` is immediately undone)",
                index + 1
            ),
            StringViolation::Relation {
                start,
                end,
                relation,
                inverted,
            } => {
                let r: Vec<&str> = relation.iter().map(ArrowId::as_str).collect();
                write!(
                    f,
                    "steps {start}..{end}{} spell the relation `{}`",
                    if *inverted { " inverted" } else { "" },
                    r.join(" ")
                )
            }
        }
    }
}

/// First violation of the string conditions, `None` for a string.
/// Errors only when the walk is not a walk of `q`.
pub fn string_violation(q: &BoundIceQuiver, c: &Walk) -> Result<Option<StringViolation>> {
    c.vertices(q)?;
    let steps = c.steps();
    for (i, w) in steps.windows(2).enumerate() {
        if w[0].arrow == w[1].arrow && w[0].dir != w[1].dir {
            return Ok(Some(StringViolation::Backtrack {
                index: i + 1,
                arrow: w[0].arrow.clone(),
            }));
        }
    }
    for i in 0..steps.len() {
        for r in q.relations() {
            let end = i + r.len();
            if end > steps.len() {
                continue;
            }
            let window = &steps[i..end];
            let fwd = window
                .iter()
                .zip(r)
                .all(|(s, a)| s.dir == Dir::Forward && &s.arrow == a);
            let inv = window
                .iter()
                .rev()
                .zip(r)
                .all(|(s, a)| s.dir == Dir::Inverse && &s.arrow == a);
            if fwd || inv {
                return Ok(Some(StringViolation::Relation {
                    start: i + 1,
                    end,
                    relation: r.clone(),
                    inverted: inv,
                }));
            }
        }
    }
    Ok(None)
}

/// `Ok(())` for strings, [`Error::NotAString`] otherwise.
pub fn validate_string(q: &BoundIceQuiver, c: &Walk) -> Result<()> {
    match string_violation(q, c)? {
        None => Ok(()),
        Some(v) => Err(Error::NotAString(v)),
    }
}

/// All strings of length at most `max_len`, trivial ones included, in a
/// deterministic order. Each string and its inverse both appear.
pub fn enumerate_strings(q: &BoundIceQuiver, max_len: usize) -> Vec<Walk> {
    let mut out: Vec<Walk> = q.vertices().iter().cloned().map(Walk::Trivial).collect();
    let mut frontier: Vec<(Walk, VertexId)> = out
        .iter()
        .map(|w| match w {
            Walk::Trivial(v) => (w.clone(), v.clone()),
            Walk::Steps(_) => unreachable!(),
        })
        .collect();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (w, at) in &frontier {
            let mut cands: Vec<(Step, VertexId)> = Vec::new();
            for a in q.arrows_from(at) {
                cands.push((Step::forward(a.id.clone()), a.target.clone()));
            }
            for a in q.arrows_into(at) {
                cands.push((Step::inverse(a.id.clone()), a.source.clone()));
            }
            for (s, to) in cands {
                let c = w.extended(s);
                if matches!(string_violation(q, &c), Ok(None)) {
                    next.push((c, to));
                }
            }
        }
        out.extend(next.iter().map(|(w, _)| w.clone()));
        frontier = next;
    }
    out
}

/// Strings up to length `max_len`, one from each pair `{c, c^{-1}}`.
pub fn enumerate_strings_up_to_inverse(q: &BoundIceQuiver, max_len: usize) -> Vec<Walk> {
    let mut seen: BTreeSet<Walk> = BTreeSet::new();
    let mut out = Vec::new();
    for c in enumerate_strings(q, max_len) {
        let inv = c.inverse();
        if seen.contains(&inv) {
            continue;
        }
        seen.insert(c.clone());
        out.push(c);
    }
    out
}

/// The string of the indecomposable projective at `i`, when that module is
/// a string module: at most two arrows leave `i` and each branch of nonzero
/// paths is linear.
pub fn projective_string(q: &BoundIceQuiver, i: &VertexId) -> Result<Walk> {
    q.check_vertex(i)?;
    let bound = 10 * q.arrows().count().max(1);
    let mut branches: Vec<Vec<ArrowId>> = Vec::new();
    for first in q.arrows_from(i) {
        let mut path = vec![first.id.clone()];
        let mut at = first.target.clone();
        loop {
            let next: Vec<_> = q
                .arrows_from(&at)
                .filter(|b| {
                    !q.relations().iter().any(|r| {
                        r.len() <= path.len() + 1
                            && r.last() == Some(&b.id)
                            && path[path.len() + 1 - r.len()..] == r[..r.len() - 1]
                    })
                })
                .collect();
            match next.as_slice() {
                [] => break,
                [b] => {
                    path.push(b.id.clone());
                    at = b.target.clone();
                }
                _ => {
                    return Err(Error::Malformed(format!(
                        "projective at `{i}` is not a string module"
                    )))
                }
            }
            if path.len() > bound {
                return Err(Error::InfiniteDimensional(bound));
            }
        }
        branches.push(path);
    }
    Ok(match branches.as_slice() {
        [] => Walk::Trivial(i.clone()),
        [p] => Walk::Steps(p.iter().cloned().map(Step::forward).collect()),
        [p, r] => Walk::Steps(
            p.iter()
                .rev()
                .cloned()
                .map(Step::inverse)
                .chain(r.iter().cloned().map(Step::forward))
                .collect(),
        ),
        _ => {
            return Err(Error::Malformed(format!(
                "projective at `{i}` is not a string module"
            )))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::families;

    #[test]
    fn parse_and_display() {
        let w: Walk = "delta^-1  beta gamma".parse().unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(w.to_string(), "delta^-1 beta gamma");
        assert_eq!("e(3)".parse::<Walk>().unwrap(), Walk::trivial("3"));
        assert!("".parse::<Walk>().is_err());
        assert!("a e(1)".parse::<Walk>().is_err());
        assert!("a^2".parse::<Walk>().is_err());
        let e = "a b^-2".parse::<Walk>().unwrap_err();
        assert!(matches!(e, Error::Parse { column: 3, .. }), "{e:?}");
    }

    #[test]
    fn vertices_and_composability() {
        let q = families::five_vertex();
        let w: Walk = "delta^-1 beta gamma".parse().unwrap();
        let vs: Vec<String> = w
            .vertices(&q)
            .unwrap()
            .iter()
            .map(|v| v.to_string())
            .collect();
        assert_eq!(vs, ["3", "2", "4", "3"]);
        let bad: Walk = "beta delta".parse().unwrap();
        assert!(matches!(bad.vertices(&q), Err(Error::InvalidWalk(_))));
        let unknown: Walk = "zeta".parse().unwrap();
        assert!(matches!(unknown.vertices(&q), Err(Error::UnknownArrow(_))));
    }

    #[test]
    fn string_conditions() {
        let q = families::ice_a2();
        assert_eq!(validate_string(&q, &"alpha".parse().unwrap()), Ok(()));
        let v = string_violation(&q, &"alpha beta".parse().unwrap()).unwrap();
        assert!(matches!(
            v,
            Some(StringViolation::Relation {
                start: 1,
                end: 2,
                inverted: false,
                ..
            })
        ));
        let v = string_violation(&q, &"beta^-1 alpha^-1".parse().unwrap()).unwrap();
        assert!(matches!(
            v,
            Some(StringViolation::Relation { inverted: true, .. })
        ));
        let v = string_violation(&q, &"alpha alpha^-1".parse().unwrap()).unwrap();
        assert!(matches!(
            v,
            Some(StringViolation::Backtrack { index: 1, .. })
        ));
        assert!(matches!(
            validate_string(&q, &"alpha alpha^-1".parse().unwrap()),
            Err(Error::NotAString(_))
        ));
        assert_eq!(validate_string(&q, &Walk::trivial("2")), Ok(()));
    }

    #[test]
    fn projective_strings() {
        let q = families::oriented_a(&[true, false]);
        assert_eq!(
            projective_string(&q, &"2".into()).unwrap(),
            Walk::trivial("2")
        );
        assert_eq!(
            projective_string(&q, &"1".into()).unwrap().to_string(),
            "a1"
        );
        let q = families::oriented_a(&[false, true]);
        assert_eq!(
            projective_string(&q, &"2".into()).unwrap().to_string(),
            "a1^-1 a2"
        );
        let c = families::cyclic(4);
        assert_eq!(
            projective_string(&c, &"1".into()).unwrap().to_string(),
            "a1 a2"
        );
        let k = families::kronecker(3);
        assert!(projective_string(&k, &"1".into()).is_err());
    }

    #[test]
    fn enumeration_of_a3_cyclic() {
        let q = families::ice_a2();
        let all = enumerate_strings(&q, 4);
        // 3 trivial, alpha, beta, gamma and their inverses; nothing longer.
        assert_eq!(all.len(), 9);
        assert_eq!(enumerate_strings_up_to_inverse(&q, 4).len(), 6);
        for c in &all {
            assert_eq!(validate_string(&q, c), Ok(()));
        }
    }
}
