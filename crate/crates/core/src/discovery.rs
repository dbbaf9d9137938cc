//! Search for product-equals-square identities
//!
//! ```text
//! Q · Δ_m · Δ_n = P · Δ_p²        (difference mode, Δ_k = f_k(θ1) - f_k(θ2))
//! Q · f_m · f_n = P · f_p²        (pointwise mode)
//! ```
//!
//! Such an identity holds whenever `f_m`, `f_n`, `f_p` each reduce to a
//! single cosine of one shared harmonic; then `P/Q = A_m A_n / A_p²` with
//! `A_k` the amplitudes. Radial homogeneity forces `m + n = 2p`.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::fourier::{linearize_closed, HarmonicMode};
use crate::identity::{catalog, BracketKind, Expr, IdentityStatement};
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiscoveryQuery {
    pub shift_count: u32,
    pub max_power: u32,
    pub mode: HarmonicMode,
}

/// `Q · X_m · X_n = P · X_p²` with `gcd(P, Q) = 1`, `Q > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscoveredIdentity {
    #[serde(skip)]
    pub shift_count: u32,
    #[serde(skip)]
    pub mode: HarmonicMode,
    pub m: u32,
    pub n: u32,
    pub p: u32,
    pub harmonic: u32,
    /// `P`
    #[serde(rename = "P", serialize_with = "integer")]
    pub square_coeff: BigInt,
    /// `Q`
    #[serde(rename = "Q", serialize_with = "integer")]
    pub product_coeff: BigInt,
}

fn integer<S: Serializer>(value: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match value.to_i64() {
        Some(v) => s.serialize_i64(v),
        None => s.serialize_str(&value.to_string()),
    }
}

impl DiscoveredIdentity {
    /// `P / Q`
    pub fn ratio(&self) -> Rational {
        Rational::new(self.square_coeff.clone(), self.product_coeff.clone())
    }
}

fn amplitude(shift_count: u32, power: u32, mode: HarmonicMode) -> Option<(u32, Rational)> {
    linearize_closed::<Rational>(shift_count, power).single_harmonic(mode)
}

/// Coprime `(P, Q)` with `P/Q = A_m A_n / A_p²`, if `f_m`, `f_n`, `f_p` are
/// single-harmonic in `mode` with one common harmonic.
pub fn derive_constant(
    shift_count: u32,
    m: u32,
    n: u32,
    p: u32,
    mode: HarmonicMode,
) -> Option<(BigInt, BigInt)> {
    let (hm, am) = amplitude(shift_count, m, mode)?;
    let (hn, an) = amplitude(shift_count, n, mode)?;
    let (hp, ap) = amplitude(shift_count, p, mode)?;
    if hm != hn || hn != hp {
        return None;
    }
    let ratio = am * an / (&ap * &ap);
    Some((ratio.numer().clone(), ratio.denom().clone()))
}

/// All identities with `1 <= m < n <= max_power`, `m + n = 2p`, sorted by
/// `(p, m, n)`.
pub fn discover(query: &DiscoveryQuery) -> Vec<DiscoveredIdentity> {
    let DiscoveryQuery {
        shift_count,
        max_power,
        mode,
    } = *query;
    let singles: Vec<Option<(u32, Rational)>> = (0..=max_power)
        .into_par_iter()
        .map(|k| if k == 0 { None } else { amplitude(shift_count, k, mode) })
        .collect();

    let candidates: Vec<(u32, u32)> = (1..=max_power)
        .flat_map(|m| ((m + 1)..=max_power).map(move |n| (m, n)))
        .filter(|(m, n)| (m + n) % 2 == 0)
        .collect();

    let mut found: Vec<DiscoveredIdentity> = candidates
        .into_par_iter()
        .filter_map(|(m, n)| {
            let p = (m + n) / 2;
            let (hm, am) = singles[m as usize].as_ref()?;
            let (hn, an) = singles[n as usize].as_ref()?;
            let (hp, ap) = singles[p as usize].as_ref()?;
            if hm != hn || hn != hp {
                return None;
            }
            let ratio = am * an / (ap * ap);
            if ratio.is_zero() {
                return None;
            }
            Some(DiscoveredIdentity {
                shift_count,
                mode,
                m,
                n,
                p,
                harmonic: *hm,
                square_coeff: ratio.numer().clone(),
                product_coeff: ratio.denom().clone(),
            })
        })
        .collect();
    found.sort_by_key(|d| (d.p, d.m, d.n));
    found
}

/// A discovered identity in presentable form.
#[derive(Clone, Debug, PartialEq)]
pub enum Emitted {
    /// Bracket statement over `a, b, c, d` (three shifts only).
    Statement(IdentityStatement),
    /// Angle form for other shift counts.
    Trigonometric(String),
}

/// Three shifts map onto the bracket parameterization: `D` brackets under
/// `ad = bc` in difference mode, `A` brackets unconstrained in pointwise
/// mode. Other shift counts give the angle form.
pub fn emit_statement(d: &DiscoveredIdentity) -> Emitted {
    if d.shift_count != 3 {
        return Emitted::Trigonometric(trig_text(d));
    }
    let (kind, constrained, tag) = match d.mode {
        HarmonicMode::Difference => (BracketKind::Difference, true, "diff"),
        HarmonicMode::Pointwise => (BracketKind::First, false, "point"),
    };
    let q = Expr::Rational(Rational::from_integer(d.product_coeff.clone()));
    let p = Expr::Rational(Rational::from_integer(d.square_coeff.clone()));
    let lhs = q * Expr::bracket(kind, d.m) * Expr::bracket(kind, d.n);
    let rhs = p * Expr::bracket(kind, d.p).pow(2);
    let mut stmt = IdentityStatement::new(
        format!("discovered-3-{tag}-{}-{}-{}", d.m, d.n, d.p),
        lhs,
        rhs,
        constrained,
    );
    if let Some(known) = catalog().into_iter().find(|c| c.same_identity(&stmt)) {
        stmt.name = known.name;
    }
    Emitted::Statement(stmt)
}

/// `Q·(f_m(θ1)−f_m(θ2))·(f_n(θ1)−f_n(θ2)) = P·(f_p(θ1)−f_p(θ2))²`
pub fn trig_text(d: &DiscoveredIdentity) -> String {
    let (q, p) = (&d.product_coeff, &d.square_coeff);
    match d.mode {
        HarmonicMode::Difference => {
            let delta = |k: u32| format!("(f_{k}(θ1)−f_{k}(θ2))");
            format!("{q}·{}·{} = {p}·{}²", delta(d.m), delta(d.n), delta(d.p))
        }
        HarmonicMode::Pointwise => format!(
            "{q}·f_{}(θ)·f_{}(θ) = {p}·f_{}(θ)²",
            d.m, d.n, d.p
        ),
    }
}

pub fn trig_latex(d: &DiscoveredIdentity) -> String {
    let (q, p) = (&d.product_coeff, &d.square_coeff);
    match d.mode {
        HarmonicMode::Difference => {
            let delta = |k: u32| {
                format!("\\left(f_{{{k}}}(\\theta_1)-f_{{{k}}}(\\theta_2)\\right)")
            };
            format!("{q}{}{} = {p}{}^{{2}}", delta(d.m), delta(d.n), delta(d.p))
        }
        HarmonicMode::Pointwise => format!(
            "{q}f_{{{}}}(\\theta)f_{{{}}}(\\theta) = {p}f_{{{}}}(\\theta)^{{2}}",
            d.m, d.n, d.p
        ),
    }
}

/// `[{"m":..,"n":..,"p":..,"harmonic":..,"P":..,"Q":..}, ...]`
pub fn to_json(found: &[DiscoveredIdentity]) -> String {
    serde_json::to_string(found).expect("discoveries serialize")
}
