//! Test-only oracles shared by the integration suites.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::f64::consts::TAU;

use num_traits::{One, Zero};
use powersum::{HarmonicMode, Rational};

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Harmonic → coefficient of f_k, via the product rule
/// cos(a)cos(b) = (cos(a+b) + cos(a-b))/2 applied k times, then the shift
/// sum Σ_j cos(h(θ + 2πj/N)) = N cos(hθ) when N | h, else 0.
pub fn expansion_by_products(shift_count: u32, power: u32) -> BTreeMap<u32, Rational> {
    let mut current: BTreeMap<u32, Rational> = BTreeMap::from([(0, int(1))]);
    for _ in 0..power {
        let mut next: BTreeMap<u32, Rational> = BTreeMap::new();
        for (h, c) in &current {
            let half = c / int(2);
            *next.entry(h + 1).or_insert_with(Rational::zero) += &half;
            *next.entry(h.abs_diff(1)).or_insert_with(Rational::zero) += &half;
        }
        current = next;
    }
    current
        .into_iter()
        .filter(|(h, c)| h % shift_count == 0 && !c.is_zero())
        .map(|(h, c)| (h, c * int(shift_count as i64)))
        .collect()
}

/// Chebyshev T_h as ascending coefficient vectors, h = 0..=max.
fn chebyshev(max: u32) -> Vec<Vec<Rational>> {
    let mut t = vec![vec![int(1)], vec![int(0), int(1)]];
    for h in 2..=max as usize {
        let mut next = vec![Rational::zero(); h + 1];
        for (i, c) in t[h - 1].iter().enumerate() {
            next[i + 1] += c * int(2);
        }
        for (i, c) in t[h - 2].iter().enumerate() {
            next[i] -= c;
        }
        t.push(next);
    }
    t.truncate(max as usize + 1);
    t
}

fn eval_univariate(coeffs: &[Rational], x: &Rational) -> Rational {
    coeffs
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + c)
}

/// 64 rational sample points for cos θ in [-1, 1).
pub fn grid() -> Vec<Rational> {
    (0..64).map(|j| ratio(j - 32, 32)).collect()
}

/// f_k as a polynomial in c = cos θ, evaluated on the grid.
pub fn grid_values(shift_count: u32, power: u32, points: &[Rational]) -> Vec<Rational> {
    let t = chebyshev(power.max(1));
    let mut poly = vec![Rational::zero(); power as usize + 1];
    for (h, c) in expansion_by_products(shift_count, power) {
        for (i, tc) in t[h as usize].iter().enumerate() {
            poly[i] += &c * tc;
        }
    }
    points.iter().map(|x| eval_univariate(&poly, x)).collect()
}

/// `Some(λ)` with `u = λ v` on every sample, `λ ≠ 0`, `v` not identically 0.
fn proportional<I: Iterator<Item = (Rational, Rational)>>(samples: I) -> Option<Rational> {
    let mut lambda: Option<Rational> = None;
    for (u, v) in samples {
        match &lambda {
            Some(l) => {
                if u != l * &v {
                    return None;
                }
            }
            None if v.is_zero() => {
                if !u.is_zero() {
                    return None;
                }
            }
            None => {
                let l = &u / &v;
                if l.is_zero() {
                    return None;
                }
                lambda = Some(l);
            }
        }
    }
    lambda
}

/// Exhaustive re-derivation of the product-equals-square identities:
/// every `m < n <= max_power` with `m + n = 2p` whose grid samples are
/// proportional. Returns `(m, n, p, P/Q)` sorted by `(p, m, n)`.
pub fn brute_force(
    shift_count: u32,
    max_power: u32,
    mode: HarmonicMode,
) -> Vec<(u32, u32, u32, Rational)> {
    let points = grid();
    let values: Vec<Vec<Rational>> = (0..=max_power)
        .map(|k| grid_values(shift_count, k, &points))
        .collect();
    let mut out = Vec::new();
    for m in 1..=max_power {
        for n in (m + 1)..=max_power {
            if (m + n) % 2 != 0 {
                continue;
            }
            let p = (m + n) / 2;
            let (fm, fn_, fp) = (&values[m as usize], &values[n as usize], &values[p as usize]);
            let lambda = match mode {
                HarmonicMode::Pointwise => {
                    proportional((0..points.len()).map(|i| (&fm[i] * &fn_[i], &fp[i] * &fp[i])))
                }
                HarmonicMode::Difference => proportional((0..points.len()).flat_map(|i| {
                    (0..points.len()).map(move |j| {
                        let dp = &fp[i] - &fp[j];
                        ((&fm[i] - &fm[j]) * (&fn_[i] - &fn_[j]), &dp * &dp)
                    })
                })),
            };
            if let Some(l) = lambda {
                out.push((m, n, p, l));
            }
        }
    }
    out.sort_by_key(|(m, n, p, _)| (*p, *m, *n));
    out
}

/// True when f_k takes one value on the whole grid.
pub fn is_constant(shift_count: u32, power: u32) -> bool {
    let values = grid_values(shift_count, power, &grid());
    values.iter().all(|v| v == &values[0])
}

/// f_k(θ) summed directly in floating point.
pub fn shift_sum(shift_count: u32, power: u32, theta: f64) -> f64 {
    (0..shift_count)
        .map(|k| (theta + TAU * k as f64 / shift_count as f64).cos().powi(power as i32))
        .sum()
}

pub fn one() -> Rational {
    Rational::one()
}
