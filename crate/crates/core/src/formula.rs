//! The matrix-product formula for walks and the identities it satisfies.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::id::{ArrowId, VertexId};
use crate::laurent::{x, LaurentPoly, Mat2, Monomial};
use crate::quiver::{projective_string, BoundIceQuiver, Dir, Step, Walk};

/// `A(β) = [[x_t, 0], [1, x_s]]`, `A(β^{-1}) = [[x_t, 1], [0, x_s]]`, with
/// `s`, `t` the source and target of the arrow `β` itself.
pub fn step_matrix(q: &BoundIceQuiver, s: &Step) -> Result<Mat2> {
    let a = q.arrow(&s.arrow)?;
    let (xt, xs) = (x(&a.target), x(&a.source));
    Ok(match s.dir {
        Dir::Forward => Mat2::new(xt, LaurentPoly::zero(), LaurentPoly::one(), xs),
        Dir::Inverse => Mat2::new(xt, LaurentPoly::one(), LaurentPoly::zero(), xs),
    })
}

/// `V_c(i)` for `1 <= i <= n + 1`: the diagonal matrix of the arrows at
/// `v_i` not used by the neighbouring steps `c_{i-1}`, `c_i`. Outgoing
/// arrows contribute their targets on top, incoming ones their sources
/// below.
pub fn vertex_matrix(q: &BoundIceQuiver, c: &Walk, i: usize) -> Result<Mat2> {
    let vs = c.vertices(q)?;
    if i == 0 || i > vs.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: vs.len(),
        });
    }
    Ok(vertex_matrix_at(q, c.steps(), &vs, i - 1))
}

fn vertex_matrix_at(q: &BoundIceQuiver, steps: &[Step], vs: &[VertexId], k: usize) -> Mat2 {
    let used: BTreeSet<&ArrowId> = [k.checked_sub(1).map(|j| &steps[j]), steps.get(k)]
        .into_iter()
        .flatten()
        .map(|s| &s.arrow)
        .collect();
    let v = &vs[k];
    let top = q
        .arrows_from(v)
        .filter(|a| !used.contains(&a.id))
        .map(|a| x(&a.target))
        .product();
    let bottom = q
        .arrows_into(v)
        .filter(|a| !used.contains(&a.id))
        .map(|a| x(&a.source))
        .product();
    Mat2::diag(top, bottom)
}

/// `V_c(1) A(c_1) V_c(2) ⋯ A(c_n) V_c(n+1)`.
pub fn walk_matrix(q: &BoundIceQuiver, c: &Walk) -> Result<Mat2> {
    let vs = c.vertices(q)?;
    let steps = c.steps();
    let mut m = vertex_matrix_at(q, steps, &vs, 0);
    for (i, s) in steps.iter().enumerate() {
        m = &(&m * &step_matrix(q, s)?) * &vertex_matrix_at(q, steps, &vs, i + 1);
    }
    Ok(m)
}

/// `N_c = [1, 1] · walk_matrix · [1; 1]`.
pub fn numerator(q: &BoundIceQuiver, c: &Walk) -> Result<LaurentPoly> {
    Ok(walk_matrix(q, c)?.bracket())
}

/// `x^{v_1} ⋯ x^{v_{n+1}}`, the denominator of `L_c`.
pub fn walk_denominator(q: &BoundIceQuiver, c: &Walk) -> Result<Monomial> {
    Ok(Monomial::from_exponents(
        c.vertices(q)?.into_iter().map(|v| (v, 1)),
    ))
}

/// `L_c = N_c / (x_{v_1} ⋯ x_{v_{n+1}})`. Defined for every walk.
pub fn walk_laurent(q: &BoundIceQuiver, c: &Walk) -> Result<LaurentPoly> {
    let n = numerator(q, c)?;
    Ok(n.mul_monomial(&walk_denominator(q, c)?.inverse()))
}

/// `η_c`: the largest monomial dividing `N_c`.
pub fn numerator_normalisation(q: &BoundIceQuiver, c: &Walk) -> Result<Monomial> {
    Ok(numerator(q, c)?.monomial_content()?.0)
}

/// `l_c = [1, 1] ∏ a(c_i) [1; 1]` with `a(β) = [[1,0],[1,1]]` and
/// `a(β^{-1}) = [[1,1],[0,1]]`; `l_c = 2` for trivial walks.
pub fn walk_count(c: &Walk) -> BigInt {
    let one = BigInt::from(1);
    let zero = BigInt::from(0);
    let mut m = [[one.clone(), zero.clone()], [zero, one]];
    for s in c.steps() {
        let a = match s.dir {
            Dir::Forward => [[1, 0], [1, 1]],
            Dir::Inverse => [[1, 1], [0, 1]],
        };
        let mut n: [[BigInt; 2]; 2] = Default::default();
        for (i, row) in n.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = &m[i][0] * a[0][j] + &m[i][1] * a[1][j];
            }
        }
        m = n;
    }
    m.iter().flatten().sum()
}

/// Where a letter of a frieze word sits relative to the next one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Placement {
    Left,
    Below,
}

/// A word `x_k x_{k+1} ⋯ x_{k+l+1}` read off a frieze grid, with the
/// relative placement of each inner pair `(x_{k+j}, x_{k+j+1})`,
/// `1 <= j <= l - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FriezeWord {
    pub letters: Vec<VertexId>,
    pub placements: Vec<Placement>,
}

impl FriezeWord {
    fn check(&self) -> Result<()> {
        if self.letters.len() < 3 || self.placements.len() + 3 != self.letters.len() {
            return Err(Error::WordTooShort(format!(
                "{} letters, {} placements",
                self.letters.len(),
                self.placements.len()
            )));
        }
        Ok(())
    }

    /// The coefficient-free type A quiver on the letters, with the arrows
    /// `x_k -> x_{k+1}` and `x_{k+l+1} -> x_{k+l}` at the ends, together
    /// with the string from `x_{k+1}` to `x_{k+l}` whose module sits at the
    /// cell of the word.
    pub fn type_a_string(&self) -> Result<(BoundIceQuiver, Walk)> {
        self.check()?;
        let n = self.letters.len();
        let mut b = BoundIceQuiver::builder().vertices(self.letters.iter().cloned());
        b = b.arrow("in", self.letters[0].clone(), self.letters[1].clone());
        b = b.arrow(
            "out",
            self.letters[n - 1].clone(),
            self.letters[n - 2].clone(),
        );
        let mut steps = Vec::new();
        for (j, p) in self.placements.iter().enumerate() {
            let (u, v) = (&self.letters[j + 1], &self.letters[j + 2]);
            let id = format!("s{}", j + 1);
            match p {
                Placement::Left => {
                    b = b.arrow(id.as_str(), v.clone(), u.clone());
                    steps.push(Step::inverse(id.as_str()));
                }
                Placement::Below => {
                    b = b.arrow(id.as_str(), u.clone(), v.clone());
                    steps.push(Step::forward(id.as_str()));
                }
            }
        }
        let q = b.build()?;
        let c = if steps.is_empty() {
            Walk::Trivial(self.letters[1].clone())
        } else {
            Walk::Steps(steps)
        };
        Ok((q, c))
    }
}

/// `(x_{k+1} ⋯ x_{k+l})^{-1} [1, x_k] ∏ M(x_{k+j}, x_{k+j+1}) [1; x_{k+l+1}]`
/// with `M(a, b) = [[a, 1], [0, b]]` when `a` is left of `b` and
/// `[[b, 0], [1, a]]` when `a` is below `b`.
pub fn frieze_entry(word: &FriezeWord) -> Result<LaurentPoly> {
    word.check()?;
    let l = &word.letters;
    let mut m = Mat2::identity();
    for (j, p) in word.placements.iter().enumerate() {
        let (a, b) = (x(&l[j + 1]), x(&l[j + 2]));
        let f = match p {
            Placement::Left => Mat2::new(a, LaurentPoly::one(), LaurentPoly::zero(), b),
            Placement::Below => Mat2::new(b, LaurentPoly::zero(), LaurentPoly::one(), a),
        };
        m = &m * &f;
    }
    let one = LaurentPoly::one();
    let (first, last) = (x(&l[0]), x(&l[l.len() - 1]));
    let val = m.sandwich([&one, &first], [&one, &last]);
    let den = Monomial::from_exponents(l[1..l.len() - 1].iter().map(|v| (v.clone(), 1)));
    Ok(val.mul_monomial(&den.inverse()))
}

/// `y_i = ∏_{α: f -> i, f frozen} x_f`.
pub fn y_monomial(q: &BoundIceQuiver, i: &VertexId) -> Monomial {
    Monomial::from_exponents(
        q.arrows_into(i)
            .filter(|a| q.is_frozen(&a.source))
            .map(|a| (a.source.clone(), 1)),
    )
}

/// `z_i = ∏_{α: i -> f, f frozen} x_f`.
pub fn z_monomial(q: &BoundIceQuiver, i: &VertexId) -> Monomial {
    Monomial::from_exponents(
        q.arrows_from(i)
            .filter(|a| q.is_frozen(&a.target))
            .map(|a| (a.target.clone(), 1)),
    )
}

/// `w_i = y_i z_i^{-1}`.
pub fn w_monomial(q: &BoundIceQuiver, i: &VertexId) -> Monomial {
    y_monomial(q, i).div(&z_monomial(q, i))
}

fn power_monomial(
    q: &BoundIceQuiver,
    f: fn(&BoundIceQuiver, &VertexId) -> Monomial,
    c: &Walk,
) -> Result<Monomial> {
    let mut m = Monomial::one();
    for v in c.vertices(q)? {
        m = m.mul(&f(q, &v));
    }
    Ok(m)
}

/// `y^{dim M_c}`.
pub fn y_power(q: &BoundIceQuiver, c: &Walk) -> Result<Monomial> {
    power_monomial(q, y_monomial, c)
}

/// `z^{dim M_c}`.
pub fn z_power(q: &BoundIceQuiver, c: &Walk) -> Result<Monomial> {
    power_monomial(q, z_monomial, c)
}

/// An almost split sequence `0 -> τM -> E -> M -> 0` given by strings,
/// with `E` a direct sum of string modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArTriple {
    pub tau_m: Walk,
    pub middle: Vec<Walk>,
    pub m: Walk,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdentityKind {
    /// `x_i F(P_i) − y_i ∏ F(P_{t(α)}) ∏ x_{s(α)} = z^{dim P_i}` for the
    /// matrix formula over an ice quiver of type A.
    ProjectiveWalk,
    /// `F(τM) F(M) − F(E) = y^{dim τM} z^{dim M}` for the matrix formula.
    MeshWalk,
    /// The projective recurrence for principal-coefficient characters,
    /// where the right side is 1.
    ProjectiveCharacter,
    /// The mesh relation for principal-coefficient characters, where the
    /// right side is `y^{dim τM}`.
    MeshCharacter,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdentityInput {
    Vertex(VertexId),
    Triple(ArTriple),
}

/// Evaluates one of the recurrences exactly.
///
/// `q` is the ice quiver fixing `y` and `z` (the principal extension for
/// `ProjectiveCharacter` and `MeshCharacter`); `value` maps a string of the unfrozen part to the
/// Laurent polynomial under test (the matrix formula or a character).
/// Direct sums in `E` are evaluated multiplicatively.
pub fn check_identity<F>(
    q: &BoundIceQuiver,
    kind: IdentityKind,
    input: &IdentityInput,
    value: F,
) -> Result<bool>
where
    F: Fn(&Walk) -> Result<LaurentPoly>,
{
    let (lhs, rhs) = identity_sides(q, kind, input, value)?;
    Ok(lhs == rhs)
}

/// Both sides of [`check_identity`].
pub fn identity_sides<F>(
    q: &BoundIceQuiver,
    kind: IdentityKind,
    input: &IdentityInput,
    value: F,
) -> Result<(LaurentPoly, LaurentPoly)>
where
    F: Fn(&Walk) -> Result<LaurentPoly>,
{
    let unfrozen = q.unfrozen_part();
    match (kind, input) {
        (
            IdentityKind::ProjectiveWalk | IdentityKind::ProjectiveCharacter,
            IdentityInput::Vertex(i),
        ) => {
            if q.is_frozen(i) {
                return Err(Error::UnfrozenViolation(i.to_string()));
            }
            let p = projective_string(&unfrozen, i)?;
            let mut prod = LaurentPoly::monomial(y_monomial(q, i));
            for a in unfrozen.arrows_from(i) {
                prod = &prod * &value(&projective_string(&unfrozen, &a.target)?)?;
            }
            for a in unfrozen.arrows_into(i) {
                prod = &prod * &x(&a.source);
            }
            let lhs = &(&x(i) * &value(&p)?) - &prod;
            let rhs = match kind {
                IdentityKind::ProjectiveWalk => LaurentPoly::monomial(z_power(q, &p)?),
                _ => LaurentPoly::one(),
            };
            Ok((lhs, rhs))
        }
        (IdentityKind::MeshWalk | IdentityKind::MeshCharacter, IdentityInput::Triple(t)) => {
            let e: LaurentPoly = t
                .middle
                .iter()
                .map(&value)
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .product();
            let lhs = &(&value(&t.tau_m)? * &value(&t.m)?) - &e;
            let mut rhs = y_power(q, &t.tau_m)?;
            if kind == IdentityKind::MeshWalk {
                rhs = rhs.mul(&z_power(q, &t.m)?);
            }
            Ok((lhs, LaurentPoly::monomial(rhs)))
        }
        _ => Err(Error::Malformed(format!(
            "{kind:?} does not take {input:?}"
        ))),
    }
}
