use std::ops::{Add, Mul};

use super::LaurentPoly;

/// A 2×2 matrix over the Laurent ring, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2 {
    pub m: [[LaurentPoly; 2]; 2],
}

impl Mat2 {
    pub fn new(a: LaurentPoly, b: LaurentPoly, c: LaurentPoly, d: LaurentPoly) -> Self {
        Mat2 {
            m: [[a, b], [c, d]],
        }
    }

    pub fn identity() -> Self {
        Mat2::diag(LaurentPoly::one(), LaurentPoly::one())
    }

    pub fn diag(a: LaurentPoly, d: LaurentPoly) -> Self {
        Mat2::new(a, LaurentPoly::zero(), LaurentPoly::zero(), d)
    }

    pub fn det(&self) -> LaurentPoly {
        let [[a, b], [c, d]] = &self.m;
        &(a * d) - &(b * c)
    }

    pub fn transpose(&self) -> Self {
        let [[a, b], [c, d]] = self.m.clone();
        Mat2::new(a, c, b, d)
    }

    /// `row · self · col`.
    pub fn sandwich(&self, row: [&LaurentPoly; 2], col: [&LaurentPoly; 2]) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (r, line) in row.iter().zip(&self.m) {
            for (c, entry) in col.iter().zip(line) {
                out += &(*r * entry) * *c;
            }
        }
        out
    }

    /// `self · col`.
    pub fn apply(&self, col: [&LaurentPoly; 2]) -> [LaurentPoly; 2] {
        [
            &(&self.m[0][0] * col[0]) + &(&self.m[0][1] * col[1]),
            &(&self.m[1][0] * col[0]) + &(&self.m[1][1] * col[1]),
        ]
    }

    /// `[1, 1] · self · [1; 1]`, the sum of all four entries.
    pub fn bracket(&self) -> LaurentPoly {
        self.m.iter().flatten().cloned().sum()
    }
}

impl<'a> Mul<&'a Mat2> for &'a Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: &Mat2) -> Mat2 {
        let e =
            |i: usize, j: usize| &(&self.m[i][0] * &rhs.m[0][j]) + &(&self.m[i][1] * &rhs.m[1][j]);
        Mat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        &self * &rhs
    }
}

impl<'a> Add<&'a Mat2> for &'a Mat2 {
    type Output = Mat2;
    fn add(self, rhs: &Mat2) -> Mat2 {
        let e = |i: usize, j: usize| &self.m[i][j] + &rhs.m[i][j];
        Mat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }
}
