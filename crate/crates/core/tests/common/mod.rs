//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::HashMap;

use nilsplit_core::algebra::{Algebra, Element, Monomial};
use nilsplit_core::cohomology::monomial_basis;
use nilsplit_core::lie::{Bracket, LieAlgebraSpec};
use nilsplit_core::Rational;
use num::{One, Zero};
use proptest::prelude::*;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Rank by textbook Gaussian elimination on a dense rational matrix.
pub fn naive_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = &rows[r][c] / &pivot;
                for cc in c..cols {
                    let v = &f * &rows[rank][cc];
                    rows[r][cc] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Sign and union of two sorted wedge monomials encoded as bitmasks.
fn wedge(a: u32, b: u32) -> Option<(u32, bool)> {
    if a & b != 0 {
        return None;
    }
    let mut swaps = 0;
    for i in 0..32 {
        if b >> i & 1 == 1 {
            swaps += (a >> (i + 1)).count_ones();
        }
    }
    Some((a | b, swaps % 2 == 1))
}

/// Chevalley-Eilenberg Betti numbers `b_0..b_n` computed on bitmask wedge
/// monomials with `d x_k = -sum_{i<j} c_ij^k x_i x_j`.
pub fn ce_betti_oracle(spec: &LieAlgebraSpec) -> Vec<usize> {
    let n = spec.dim();
    let mut dx: Vec<Vec<(u32, Rational)>> = vec![Vec::new(); n];
    for b in spec.brackets() {
        dx[b.k - 1].push(((1 << (b.i - 1)) | (1 << (b.j - 1)), -b.c.clone()));
    }
    let d = |mask: u32| -> HashMap<u32, Rational> {
        let mut out: HashMap<u32, Rational> = HashMap::new();
        let mut t = 0;
        for p in 0..n {
            if mask >> p & 1 == 0 {
                continue;
            }
            let left = mask & ((1 << p) - 1);
            let right = mask & !((1u32 << (p + 1)) - 1);
            for (pair, c) in &dx[p] {
                let Some((lm, s1)) = wedge(left, *pair) else {
                    continue;
                };
                let Some((full, s2)) = wedge(lm, right) else {
                    continue;
                };
                let negative = (t % 2 == 1) ^ s1 ^ s2;
                let v = if negative { -c.clone() } else { c.clone() };
                *out.entry(full).or_insert_with(Rational::zero) += v;
            }
            t += 1;
        }
        out
    };
    let basis: Vec<Vec<u32>> = (0..=n)
        .map(|k| {
            (0u32..1 << n)
                .filter(|m| m.count_ones() as usize == k)
                .collect()
        })
        .collect();
    let rank_out: Vec<usize> = (0..=n)
        .map(|k| {
            if k == n {
                return 0;
            }
            let target = &basis[k + 1];
            let rows = basis[k]
                .iter()
                .map(|&m| {
                    let image = d(m);
                    target
                        .iter()
                        .map(|t| image.get(t).cloned().unwrap_or_else(Rational::zero))
                        .collect()
                })
                .collect();
            naive_rank(rows)
        })
        .collect();
    (0..=n)
        .map(|k| basis[k].len() - rank_out[k] - if k > 0 { rank_out[k - 1] } else { 0 })
        .collect()
}

/// Betti numbers `b_0..b_cap` of `Lambda(a, b) (x) Lambda(x_1..x_n)` with
/// `da = 0`, `db = a^2`, `D x_k = alpha_k a` (torus fiber over `S^2`).
/// Monomials are `(p, e, S)` meaning `a^p b^e x^S`.
pub fn torus_over_s2_oracle(alpha: &[i64], cap: usize) -> Vec<usize> {
    let n = alpha.len();
    type Mono = (usize, usize, u32);
    let degree = |(p, e, s): Mono| 2 * p + 3 * e + s.count_ones() as usize;
    let basis = |k: usize| -> Vec<Mono> {
        let mut out = Vec::new();
        for p in 0..=k / 2 {
            for e in 0..=1 {
                for s in 0u32..1 << n {
                    if degree((p, e, s)) == k {
                        out.push((p, e, s));
                    }
                }
            }
        }
        out
    };
    let d = |(p, e, s): Mono| -> HashMap<Mono, i64> {
        let mut out = HashMap::new();
        if e == 1 {
            *out.entry((p + 2, 0, s)).or_insert(0) += 1;
        }
        let sign = if e == 1 { -1 } else { 1 };
        let mut t = 0;
        for k in 0..n {
            if s >> k & 1 == 1 {
                let coeff = sign * if t % 2 == 0 { 1 } else { -1 } * alpha[k];
                *out.entry((p + 1, e, s & !(1 << k))).or_insert(0) += coeff;
                t += 1;
            }
        }
        out
    };
    let rank_out = |k: usize| -> usize {
        let target = basis(k + 1);
        let rows = basis(k)
            .into_iter()
            .map(|m| {
                let image = d(m);
                target
                    .iter()
                    .map(|t| q(*image.get(t).unwrap_or(&0)))
                    .collect()
            })
            .collect();
        naive_rank(rows)
    };
    let ranks: Vec<usize> = (0..=cap).map(rank_out).collect();
    (0..=cap)
        .map(|k| basis(k).len() - ranks[k] - if k > 0 { ranks[k - 1] } else { 0 })
        .collect()
}

/// Generators `a`(2), `x1`(1), `b`(3), `x2`(1), `c`(2), `x3`(1): interleaved
/// parities so that Koszul signs are exercised across even factors.
pub fn mixed_algebra() -> Algebra {
    Algebra::new([
        ("a", 2),
        ("x1", 1),
        ("b", 3),
        ("x2", 1),
        ("c", 2),
        ("x3", 1),
    ])
    .unwrap()
}

fn monomial_strategy(algebra: &Algebra) -> impl Strategy<Value = Monomial> {
    let limits: Vec<u32> = algebra
        .generators()
        .iter()
        .map(|g| if g.is_odd() { 1 } else { 2 })
        .collect();
    limits
        .into_iter()
        .map(|l| 0..=l)
        .collect::<Vec<_>>()
        .prop_map(|e| Monomial::from_exponents(e.into_iter().enumerate()))
}

pub fn element_strategy(algebra: Algebra) -> impl Strategy<Value = Element> {
    prop::collection::vec((monomial_strategy(&algebra), -3i64..=3), 0..4).prop_map(move |terms| {
        Element::from_terms(&algebra, terms.into_iter().map(|(m, c)| (m, q(c))))
    })
}

/// A random homogeneous element of degree `k` (possibly zero).
pub fn homogeneous_strategy(algebra: Algebra, k: u32) -> BoxedStrategy<Element> {
    let basis = monomial_basis(&algebra, k);
    if basis.is_empty() {
        return Just(Element::zero(&algebra)).boxed();
    }
    let len = basis.len();
    prop::collection::vec((0..len, -2i64..=2), 0..3)
        .prop_map(move |picks| {
            Element::from_terms(
                &algebra,
                picks.into_iter().map(|(i, c)| (basis[i].clone(), q(c))),
            )
        })
        .boxed()
}

/// A homogeneous element (possibly zero) of a random degree in `1..=4`.
pub fn homogeneous_any(algebra: Algebra) -> BoxedStrategy<Element> {
    (1u32..=4)
        .prop_flat_map(move |k| homogeneous_strategy(algebra.clone(), k))
        .boxed()
}

/// Images of a degree +1 derivation of [`mixed_algebra`].
pub fn derivation_strategy(algebra: Algebra) -> impl Strategy<Value = Vec<Element>> {
    algebra
        .generators()
        .iter()
        .map(|g| homogeneous_strategy(algebra.clone(), g.degree + 1))
        .collect::<Vec<_>>()
}

/// Random bracket tables on `dim in 2..=5` with small integer coefficients.
/// Roughly half of them violate the Jacobi identity.
pub fn spec_strategy() -> impl Strategy<Value = LieAlgebraSpec> {
    (2usize..=5).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .collect();
        let slots = pairs.len() * n;
        prop::collection::vec(prop_oneof![6 => Just(0i64), 1 => -2i64..=2], slots).prop_map(
            move |coeffs| {
                let brackets = coeffs
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| **c != 0)
                    .map(|(s, c)| {
                        let (i, j) = pairs[s / n];
                        Bracket::new(i, j, s % n + 1, q(*c))
                    })
                    .collect();
                LieAlgebraSpec::new(n, brackets).unwrap()
            },
        )
    })
}

/// Strictly upper-triangular bracket tables: `[X_i, X_j]` only involves
/// `X_k` with `k > j`, so the algebra is nilpotent, but Jacobi may fail.
pub fn triangular_spec_strategy() -> impl Strategy<Value = LieAlgebraSpec> {
    (3usize..=5).prop_flat_map(|n| {
        let slots: Vec<(usize, usize, usize)> = (1..=n)
            .flat_map(|i| (i + 1..=n).flat_map(move |j| (j + 1..=n).map(move |k| (i, j, k))))
            .collect();
        let len = slots.len();
        prop::collection::vec(prop_oneof![2 => Just(0i64), 1 => -2i64..=2], len).prop_map(
            move |coeffs| {
                let brackets = slots
                    .iter()
                    .zip(&coeffs)
                    .filter(|(_, c)| **c != 0)
                    .map(|(&(i, j, k), c)| Bracket::new(i, j, k, q(*c)))
                    .collect();
                LieAlgebraSpec::new(n, brackets).unwrap()
            },
        )
    })
}

pub fn one() -> Rational {
    Rational::one()
}
