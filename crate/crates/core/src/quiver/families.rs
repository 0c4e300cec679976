//! Quivers used throughout the tests, the fixtures and the CLI.

use super::{BoundIceQuiver, QuiverBuilder};

fn numbered(n: usize) -> QuiverBuilder {
    BoundIceQuiver::builder().vertices((1..=n).map(|i| i.to_string()))
}

/// `1 -> 2 -> ... -> n` with arrows `a1, ..., a{n-1}`.
pub fn linear_a(n: usize) -> BoundIceQuiver {
    oriented_a(&vec![true; n.saturating_sub(1)])
}

/// Type A on `1..=k+1` where arrow `a{i}` joins `i` and `i+1`, pointing
/// to `i+1` when `forward[i-1]` holds and to `i` otherwise.
pub fn oriented_a(forward: &[bool]) -> BoundIceQuiver {
    let mut b = numbered(forward.len() + 1);
    for (k, &f) in forward.iter().enumerate() {
        let (i, j) = (k + 1, k + 2);
        let (s, t) = if f { (i, j) } else { (j, i) };
        b = b.arrow(format!("a{i}"), s.to_string(), t.to_string());
    }
    b.build().expect("type A quiver")
}

/// The oriented cycle `1 -> 2 -> ... -> n -> 1` (arrow `a{i}` leaves `i`)
/// bound by all paths of length `n - 1`.
pub fn cyclic(n: usize) -> BoundIceQuiver {
    assert!(n >= 3, "cyclic quiver needs n >= 3");
    let mut b = numbered(n);
    for i in 1..=n {
        b = b.arrow(format!("a{i}"), i.to_string(), (i % n + 1).to_string());
    }
    for start in 1..=n {
        b = b.relation((0..n - 1).map(|k| format!("a{}", (start - 1 + k) % n + 1)));
    }
    b.build().expect("cyclic quiver")
}

/// `n` parallel arrows `a1, ..., an` from `1` to `2`.
pub fn kronecker(n: usize) -> BoundIceQuiver {
    let mut b = numbered(2);
    for k in 1..=n {
        b = b.arrow(format!("a{k}"), "1", "2");
    }
    b.build().expect("Kronecker quiver")
}

/// The oriented 3-cycle `1 -alpha-> 2 -beta-> 3 -gamma-> 1` with `3`
/// frozen and all paths of length two vanishing.
pub fn ice_a2() -> BoundIceQuiver {
    BoundIceQuiver::builder()
        .vertices(["1", "2"])
        .frozen("3")
        .arrow("alpha", "1", "2")
        .arrow("beta", "2", "3")
        .arrow("gamma", "3", "1")
        .relation(["alpha", "beta"])
        .relation(["beta", "gamma"])
        .relation(["gamma", "alpha"])
        .build()
        .expect("ice A2")
}

/// `1 -alpha-> 2`, `2 -beta-> 4`, `2 -delta-> 3`, `4 -gamma-> 3`,
/// `3 -epsilon-> 5`.
pub fn five_vertex() -> BoundIceQuiver {
    numbered(5)
        .arrow("alpha", "1", "2")
        .arrow("beta", "2", "4")
        .arrow("delta", "2", "3")
        .arrow("gamma", "4", "3")
        .arrow("epsilon", "3", "5")
        .build()
        .expect("quiver")
}

/// `1 -alpha-> 2`, two arrows `gamma, epsilon: 2 -> 3`, `3 -delta-> 4`.
pub fn double_arrow() -> BoundIceQuiver {
    numbered(4)
        .arrow("alpha", "1", "2")
        .arrow("gamma", "2", "3")
        .arrow("epsilon", "2", "3")
        .arrow("delta", "3", "4")
        .build()
        .expect("quiver")
}

/// Type Ã on `0..=n+1`: `1 -l-> 0`, `a{i}: i -> i+1` for `1 <= i < n`,
/// `n+1 -r-> n` and `n+1 -c-> 0`. The walk `a1 ⋯ a{n-1}` is the string of
/// a quasi-simple regular module.
pub fn affine_a(n: usize) -> BoundIceQuiver {
    assert!(n >= 2, "affine quiver needs n >= 2");
    let mut b = BoundIceQuiver::builder().vertices((0..=n + 1).map(|i| i.to_string()));
    b = b.arrow("l", "1", "0");
    for i in 1..n {
        b = b.arrow(format!("a{i}"), i.to_string(), (i + 1).to_string());
    }
    b = b
        .arrow("r", (n + 1).to_string(), n.to_string())
        .arrow("c", (n + 1).to_string(), "0");
    b.build().expect("affine quiver")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        assert_eq!(linear_a(1).arrows().count(), 0);
        assert_eq!(linear_a(4).arrows().count(), 3);
        let q = oriented_a(&[true, false]);
        assert_eq!(q.arrow_count(&"3".into(), &"2".into()), 1);
        let c = cyclic(4);
        assert_eq!(c.relations().len(), 4);
        assert!(c.relations().iter().all(|r| r.len() == 3));
        assert_eq!(kronecker(3).arrow_count(&"1".into(), &"2".into()), 3);
        assert!(affine_a(3).is_acyclic());
        assert!(!ice_a2().is_blown_up());
    }
}
