//! Double description for pointed cones inside the nonnegative orthant.

use crate::scalar::Scalar;

pub(crate) fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

#[derive(Clone, Debug)]
struct Ray<S> {
    v: Vec<S>,
    /// Bit `k < n`: coordinate `k` vanishes. Bit `n + t`: constraint `t`
    /// is tight.
    zeros: u128,
}

/// Extreme rays, as primitive vectors, of
/// `{x >= 0} ∩ {c . x >= 0 for c in constraints}`.
///
/// Rays are added one halfspace at a time; two rays are joined only when
/// they are adjacent, which is decided combinatorially: no third ray is
/// tight on every constraint the pair shares. That test is exact for
/// pointed cones, and the orthant keeps every intermediate cone pointed.
pub(crate) fn extreme_rays<S: Scalar>(n: usize, constraints: &[Vec<S>]) -> Vec<Vec<S>> {
    assert!(
        n + constraints.len() <= 128,
        "too many constraints for the bit sets"
    );
    let all_coords: u128 = if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    };
    let mut rays: Vec<Ray<S>> = (0..n)
        .map(|k| {
            let mut v = vec![S::zero(); n];
            v[k] = S::one();
            Ray {
                v,
                zeros: all_coords & !(1u128 << k),
            }
        })
        .collect();

    for (t, c) in constraints.iter().enumerate() {
        let bit = 1u128 << (n + t);
        let vals: Vec<S> = rays.iter().map(|r| dot(c, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&k| vals[k].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&k| vals[k].is_negative()).collect();
        let mut next: Vec<Ray<S>> = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].zeros & rays[q].zeros;
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(k, r)| k != p && k != q && r.zeros & common == common);
                if blocked {
                    continue;
                }
                // vals[p] > 0 > vals[q], so both weights are positive
                let mut v: Vec<S> = rays[q]
                    .v
                    .iter()
                    .zip(&rays[p].v)
                    .map(|(a, b)| vals[p].clone() * a.clone() - vals[q].clone() * b.clone())
                    .collect();
                S::make_primitive(&mut v);
                let mut zeros = common | bit;
                for (k, x) in v.iter().enumerate() {
                    if x.is_zero() {
                        zeros |= 1u128 << k;
                    }
                }
                next.push(Ray { v, zeros });
            }
        }
        for (k, r) in rays.into_iter().enumerate() {
            if vals[k].is_positive() {
                next.push(r);
            } else if vals[k].is_zero() {
                next.push(Ray {
                    zeros: r.zeros | bit,
                    ..r
                });
            }
        }
        rays = next;
    }
    rays.into_iter().map(|r| r.v).collect()
}

/// Rank of a list of vectors by exact elimination.
pub(crate) fn rank<S: Scalar>(vectors: &[Vec<S>]) -> usize {
    let mut rows: Vec<(usize, Vec<S>)> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        for (p, r) in &rows {
            if w[*p].is_zero() {
                continue;
            }
            let c = w[*p].clone();
            for (x, y) in w.iter_mut().zip(r) {
                *x = x.clone() - c.clone() * y.clone();
            }
        }
        if let Some(p) = w.iter().position(|x| !x.is_zero()) {
            let inv = S::one() / w[p].clone();
            for x in w.iter_mut() {
                *x = x.clone() * inv.clone();
            }
            rows.push((p, w));
        }
    }
    rows.len()
}
