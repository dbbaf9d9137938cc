use std::fmt;
use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::IdentityStatement;
use crate::algebra::{Polynomial, Var};
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Proved,
    Falsified,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Proved => "PROVED",
            Verdict::Falsified => "FALSIFIED",
        })
    }
}

/// Outcome of a symbolic or numeric check.
///
/// `verdict == Proved` iff `reduced_terms == 0` iff `witness` is `None`.
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub name: String,
    pub verdict: Verdict,
    pub witness: Option<[Rational; 4]>,
    pub reduced_terms: usize,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn is_proved(&self) -> bool {
        self.verdict == Verdict::Proved
    }

    /// `PROVED <name> reduced_terms=0 elapsed=<ms>` or
    /// `FALSIFIED <name> witness=(a,b,c,d)`.
    pub fn render_plain(&self) -> String {
        match &self.witness {
            None => format!(
                "{} {} reduced_terms={} elapsed={:.3}ms",
                self.verdict,
                self.name,
                self.reduced_terms,
                self.elapsed_ms()
            ),
            Some(w) => format!(
                "{} {} witness=({},{},{},{})",
                self.verdict, self.name, w[0], w[1], w[2], w[3]
            ),
        }
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Doc<'a> {
            verdict: Verdict,
            name: &'a str,
            witness: Option<Vec<String>>,
            reduced_terms: usize,
            elapsed_ms: f64,
        }
        let doc = Doc {
            verdict: self.verdict,
            name: &self.name,
            witness: self
                .witness
                .as_ref()
                .map(|w| w.iter().map(ToString::to_string).collect()),
            reduced_terms: self.reduced_terms,
            elapsed_ms: self.elapsed_ms(),
        };
        serde_json::to_string(&doc).expect("report serializes")
    }

    fn elapsed_ms(&self) -> f64 {
        self.elapsed.as_secs_f64() * 1e3
    }
}

/// `lhs - rhs` expanded; under the constraint, `d` is replaced by `bc/a`
/// and the result multiplied by `a^k` (`k` the degree in `d`).
pub fn reduce(stmt: &IdentityStatement) -> Polynomial<Rational> {
    let diff = &stmt.lhs.expand::<Rational>() - &stmt.rhs.expand::<Rational>();
    if stmt.constrained {
        let bc = &Polynomial::var(Var::B) * &Polynomial::var(Var::C);
        diff.substitute_clear(Var::D, &bc, &Polynomial::var(Var::A))
    } else {
        diff
    }
}

/// Symbolic verification. A falsified statement carries a rational witness
/// (on the constraint variety with `a ≠ 0` when constrained).
pub fn verify(stmt: &IdentityStatement) -> VerificationReport {
    let start = Instant::now();
    let reduced = reduce(stmt);
    let witness = if reduced.is_zero() {
        None
    } else {
        Some(find_witness(stmt, &reduced, RANDOM_WITNESS_ATTEMPTS))
    };
    report(stmt, witness, reduced.len(), start)
}

/// Exact evaluation of both sides at `trials` pseudo-random rational points.
///
/// Entries are `p/q` with `p ∈ [-9, 9] \ {0}`, `q ∈ [1, 9]`. Under the
/// constraint, points cycle through `d := bc/a`, `a := bc/d` and the
/// `a = 0` slice (`a = 0` with `b = 0` or `c = 0`).
pub fn spot_check(stmt: &IdentityStatement, trials: u32, seed: u64) -> VerificationReport {
    let start = Instant::now();
    let mut sampler = PointSampler::new(seed);
    for i in 0..trials {
        let point = if stmt.constrained {
            sampler.constrained_point(i)
        } else {
            sampler.free_point()
        };
        if stmt.lhs.evaluate(&point) != stmt.rhs.evaluate(&point) {
            let reduced_terms = reduce(stmt).len().max(1);
            return report(stmt, Some(point), reduced_terms, start);
        }
    }
    report(stmt, None, 0, start)
}

fn report(
    stmt: &IdentityStatement,
    witness: Option<[Rational; 4]>,
    reduced_terms: usize,
    start: Instant,
) -> VerificationReport {
    VerificationReport {
        name: stmt.name.clone(),
        verdict: if witness.is_some() {
            Verdict::Falsified
        } else {
            Verdict::Proved
        },
        witness,
        reduced_terms,
        elapsed: start.elapsed(),
    }
}

const RANDOM_WITNESS_ATTEMPTS: u32 = 256;

fn find_witness(
    stmt: &IdentityStatement,
    reduced: &Polynomial<Rational>,
    random_attempts: u32,
) -> [Rational; 4] {
    let differs = |p: &[Rational; 4]| stmt.lhs.evaluate(p) != stmt.rhs.evaluate(p);

    let mut sampler = PointSampler::new(0);
    for _ in 0..random_attempts {
        let point = if stmt.constrained {
            sampler.eliminated_point()
        } else {
            sampler.free_point()
        };
        if differs(&point) {
            return point;
        }
    }

    // A nonzero polynomial of degree <= k in each variable cannot vanish on
    // the whole grid {1..k+1}^4, so this search always terminates.
    let bound = Var::ALL
        .iter()
        .map(|v| reduced.degree_in(*v))
        .max()
        .unwrap_or(0) as i64
        + 1;
    let int = |n: i64| Rational::from_integer(n.into());
    for a in 1..=bound {
        for b in 1..=bound {
            for c in 1..=bound {
                for d in 1..=bound {
                    let d_value = if stmt.constrained {
                        int(b) * int(c) / int(a)
                    } else {
                        int(d)
                    };
                    let point = [int(a), int(b), int(c), d_value];
                    if differs(&point) {
                        return point;
                    }
                    if stmt.constrained {
                        break;
                    }
                }
            }
        }
    }
    unreachable!("nonzero reduced polynomial must have a nonvanishing grid point")
}

struct PointSampler {
    rng: ChaCha8Rng,
}

impl PointSampler {
    fn new(seed: u64) -> Self {
        PointSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn nonzero(&mut self) -> Rational {
        let mut numer: i64 = self.rng.random_range(1..=9);
        if self.rng.random_bool(0.5) {
            numer = -numer;
        }
        let denom: i64 = self.rng.random_range(1..=9);
        Rational::new(numer.into(), denom.into())
    }

    fn free_point(&mut self) -> [Rational; 4] {
        [self.nonzero(), self.nonzero(), self.nonzero(), self.nonzero()]
    }

    /// `(a, b, c, bc/a)`
    fn eliminated_point(&mut self) -> [Rational; 4] {
        let (a, b, c) = (self.nonzero(), self.nonzero(), self.nonzero());
        let d = &b * &c / &a;
        [a, b, c, d]
    }

    fn constrained_point(&mut self, trial: u32) -> [Rational; 4] {
        match trial % 4 {
            0 | 1 => self.eliminated_point(),
            2 => {
                let (b, c, d) = (self.nonzero(), self.nonzero(), self.nonzero());
                let a = &b * &c / &d;
                [a, b, c, d]
            }
            _ => {
                let (x, d) = (self.nonzero(), self.nonzero());
                if self.rng.random_bool(0.5) {
                    [Rational::zero(), Rational::zero(), x, d]
                } else {
                    [Rational::zero(), x, Rational::zero(), d]
                }
            }
        }
    }
}
