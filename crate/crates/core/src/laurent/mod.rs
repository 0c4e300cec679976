//! Exact multivariate Laurent polynomials over `Z`.
//!
//! Variables are named by [`VertexId`], so the Laurent ring of a subquiver
//! is literally a subring of the ring of the ambient quiver.

mod mat2;
mod monomial;
mod text;

use std::collections::{BTreeMap, BTreeSet};
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use mat2::Mat2;
pub use monomial::Monomial;

use crate::error::{Error, Result};
use crate::id::VertexId;

/// A Laurent polynomial in canonical form: no zero coefficient is stored.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        LaurentPoly::term(Monomial::one(), c)
    }

    pub fn var(v: impl Into<VertexId>) -> Self {
        LaurentPoly::term(Monomial::var(v), 1)
    }

    pub fn term(m: Monomial, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        LaurentPoly::term(m, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(it: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The single term of a one-term polynomial.
    pub fn as_term(&self) -> Option<(&Monomial, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// `Some(m)` when `self = x^m` exactly.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        self.as_term().filter(|(_, c)| c.is_one()).map(|(m, _)| m)
    }

    /// Units of `Z[x^{±1}]` are `±x^m`.
    pub fn as_unit(&self) -> Option<(&Monomial, bool)> {
        self.as_term()
            .filter(|(_, c)| c.abs().is_one())
            .map(|(m, c)| (m, c.is_negative()))
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn variables(&self) -> BTreeSet<VertexId> {
        self.terms
            .keys()
            .flat_map(|m| m.iter().map(|(v, _)| v.clone()))
            .collect()
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(Monomial::is_polynomial)
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(k, d)| (k.clone(), d * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = LaurentPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Inverse of a unit `±x^m`.
    pub fn unit_inverse(&self) -> Option<Self> {
        let (m, neg) = self.as_unit()?;
        Some(LaurentPoly::term(m.inverse(), if neg { -1 } else { 1 }))
    }

    /// Sum of the coefficients, i.e. the value at `x_i = 1` for all `i`.
    pub fn eval_at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Componentwise minimum of the exponent vectors of all terms.
    pub fn min_exponents(&self) -> Option<Monomial> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, m| acc.gcd_like_min(m)))
    }

    /// True iff every coefficient is positive (the zero polynomial counts).
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    /// Exact quotient `self / divisor`, or [`Error::NotDivisible`].
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        if divisor.is_zero() {
            return Err(Error::ZeroInput);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        if let Some((m, neg)) = divisor.as_unit() {
            let q = self.mul_monomial(&m.inverse());
            return Ok(if neg { -q } else { q });
        }
        // Shift both sides to polynomials free of monomial factors; a Laurent
        // quotient of such polynomials is then itself a polynomial.
        let sa = self.min_exponents().expect("nonzero");
        let sb = divisor.min_exponents().expect("nonzero");
        let a = self.mul_monomial(&sa.inverse());
        let b = divisor.mul_monomial(&sb.inverse());
        let (lm_b, lc_b) = b
            .leading_term()
            .map(|(m, c)| (m.clone(), c.clone()))
            .unwrap();
        let mut rem = a;
        let mut quot = LaurentPoly::zero();
        while let Some((lm_r, lc_r)) = rem.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
            if !lm_b.divides(&lm_r) || !(&lc_r % &lc_b).is_zero() {
                return Err(Error::NotDivisible);
            }
            let t = LaurentPoly::term(lm_r.div(&lm_b), &lc_r / &lc_b);
            rem = &rem - &(&t * &b);
            quot = &quot + &t;
        }
        Ok(quot.mul_monomial(&sa.div(&sb)))
    }

    /// Ring homomorphism fixing unassigned variables.
    ///
    /// A variable occurring with a negative exponent must be sent to a unit,
    /// otherwise [`Error::NotInvertible`].
    pub fn substitute(&self, assignment: &BTreeMap<VertexId, LaurentPoly>) -> Result<LaurentPoly> {
        let mut cache: BTreeMap<(VertexId, i64), LaurentPoly> = BTreeMap::new();
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let mut kept: Vec<(VertexId, i64)> = Vec::new();
            let mut factor = LaurentPoly::constant(c.clone());
            for (v, e) in m.iter() {
                let Some(val) = assignment.get(v) else {
                    kept.push((v.clone(), e));
                    continue;
                };
                let key = (v.clone(), e);
                if !cache.contains_key(&key) {
                    let p = if e >= 0 {
                        val.pow(e as u32)
                    } else {
                        val.unit_inverse()
                            .ok_or_else(|| Error::NotInvertible(v.to_string()))?
                            .pow((-e) as u32)
                    };
                    cache.insert(key.clone(), p);
                }
                factor = &factor * &cache[&key];
            }
            out += factor.mul_monomial(&Monomial::from_exponents(kept));
        }
        Ok(out)
    }

    /// `self = x^eta * P` with `eta` the componentwise minimum of exponents,
    /// so that `P` is divisible by no variable.
    pub fn monomial_content(&self) -> Result<(Monomial, LaurentPoly)> {
        let eta = self.min_exponents().ok_or(Error::ZeroInput)?;
        let p = self.mul_monomial(&eta.inverse());
        Ok((eta, p))
    }

    /// Evaluation in the tropical semifield generated by `frozen`, after
    /// setting every other variable to 1: the componentwise minimum of the
    /// frozen parts of the exponent vectors.
    pub fn tropical_min_eval(&self, frozen: &BTreeSet<VertexId>) -> Result<Monomial> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        if !self.is_nonnegative() {
            return Err(Error::NotSubtractionFree);
        }
        let mut it = self
            .terms
            .keys()
            .map(|m| m.restrict(|v| frozen.contains(v)));
        let first = it.next().expect("nonzero");
        Ok(it.fold(first, |acc, m| acc.gcd_like_min(&m)))
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<Monomial> for LaurentPoly {
    fn from(m: Monomial) -> Self {
        LaurentPoly::monomial(m)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs.clone();
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += rhs;
        self
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |a, b| a * b)
    }
}

/// `x_v` as a polynomial; short-hand used throughout the tests.
pub fn x(v: impl Into<VertexId>) -> LaurentPoly {
    LaurentPoly::var(v)
}
