//! Closed forms for a few families of strings, written independently of
//! the matrix formula so the two can be compared.

use crate::id::VertexId;
use crate::laurent::{x, LaurentPoly, Mat2, Monomial};

fn xi(i: usize) -> LaurentPoly {
    x(i.to_string())
}

fn product(it: impl IntoIterator<Item = LaurentPoly>) -> LaurentPoly {
    it.into_iter().product()
}

/// The quasi-simple regular module `α_1 ⋯ α_{n-1}` of the affine quiver
/// `0 <- 1 -> 2 -> ⋯ -> n <- n+1`:
///
/// ```text
/// 1/(x_1⋯x_n) [1 1] diag(x_0, 1) [[∏ x_{i+1}, 0], [Σ_j x_1⋯x_n/(x_j x_{j+1}), ∏ x_i]] diag(1, x_{n+1}) [1 1]ᵀ
/// ```
pub fn affine_quasi_simple(n: usize) -> LaurentPoly {
    assert!(n >= 2);
    let all = Monomial::from_exponents((1..=n).map(|i| (VertexId::from(i.to_string()), 1)));
    let sum: LaurentPoly = (1..n)
        .map(|j| {
            let m = all
                .div(&Monomial::var(j.to_string()))
                .div(&Monomial::var((j + 1).to_string()));
            LaurentPoly::monomial(m)
        })
        .sum();
    let mid = Mat2::new(
        product((1..n).map(|i| xi(i + 1))),
        LaurentPoly::zero(),
        sum,
        product((1..n).map(xi)),
    );
    let one = LaurentPoly::one();
    let m = &(&Mat2::diag(xi(0), one.clone()) * &mid) * &Mat2::diag(one, xi(n + 1));
    m.bracket().mul_monomial(&all.inverse())
}

/// `L_{M^p}` for the string `(α^{-1}β)^p` of the principal extension of the
/// `n`-Kronecker quiver, with `y_i = x_{i'}`:
///
/// ```text
/// 1/(x_1^p x_2^{p+1}) [1 1] diag(1, y_2 x_1^{n-1}) [[y_1 + x_2^n, y_1 y_2 x_1^{n-1}], [y_1 x_1, y_1 y_2 x_1^n]]^p [1 x_1]ᵀ
/// ```
pub fn kronecker_pp(n: usize, p: usize) -> LaurentPoly {
    let (x1, x2, y1, y2) = (xi(1), xi(2), x("1'"), x("2'"));
    let n1 = (n - 1) as u32;
    let block = Mat2::new(
        &y1 + &x2.pow(n as u32),
        &(&y1 * &y2) * &x1.pow(n1),
        &y1 * &x1,
        &(&y1 * &y2) * &x1.pow(n as u32),
    );
    let mut power = Mat2::identity();
    for _ in 0..p {
        power = &power * &block;
    }
    let left = Mat2::diag(LaurentPoly::one(), &y2 * &x1.pow(n1));
    let m = &left * &power;
    let value = m.sandwich(
        [&LaurentPoly::one(), &LaurentPoly::one()],
        [&LaurentPoly::one(), &x1],
    );
    let den = Monomial::from_exponents([
        (VertexId::from("1"), p as i64),
        (VertexId::from("2"), p as i64 + 1),
    ]);
    value.mul_monomial(&den.inverse())
}

/// The module with Loewy series `2, 3, …, m` over the cyclic quiver on `n`
/// vertices, decorated with `y_i = x_{i'}` and `z_i = x_{i''}`:
///
/// ```text
/// Σ_{ℓ=1}^{m} x_1⋯x_{m+1}/(x_ℓ x_{ℓ+1}) ∏_{i=2}^{ℓ} y_i ∏_{i=ℓ+1}^{m} z_i / ∏_{j=2}^{m} x_j
/// ```
///
/// Indices are taken modulo `n`, so `x_{n+1} = x_1`.
pub fn cyclic_loewy(n: usize, m: usize) -> LaurentPoly {
    assert!(2 <= m && m <= n);
    let v = |i: usize| ((i - 1) % n + 1).to_string();
    let top = Monomial::from_exponents((1..=m + 1).map(|i| (VertexId::from(v(i)), 1)));
    let mut sum = LaurentPoly::zero();
    for l in 1..=m {
        let mut t = top.div(&Monomial::var(v(l))).div(&Monomial::var(v(l + 1)));
        for i in 2..=l {
            t = t.mul(&Monomial::var(format!("{i}'")));
        }
        for i in l + 1..=m {
            t = t.mul(&Monomial::var(format!("{i}''")));
        }
        sum += LaurentPoly::monomial(t);
    }
    let den = Monomial::from_exponents((2..=m).map(|j| (VertexId::from(v(j)), 1)));
    sum.mul_monomial(&den.inverse())
}
