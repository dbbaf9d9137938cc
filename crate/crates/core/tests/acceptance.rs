//! End-to-end acceptance run. Every criterion prints one PASS/FAIL line;
//! the test fails if any criterion fails.
//!
//! Run with `cargo test -p powersum --test acceptance -- --nocapture`.

mod support;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::binomial;
use powersum::discovery::DiscoveredIdentity;
use powersum::dsl::{parse_named, render, Format};
use powersum::identity::{bracket_poly, catalog, lookup, reduce, spot_check, verify, BracketKind, Expr, IdentityStatement};
use powersum::polar::{decompose, pair_product_sum, ZeroSumTriple};
use powersum::{
    derive_constant, discover, linearize_closed, linearize_oracle, DiscoveryQuery, Expansion,
    HarmonicMode, Rational, RationalPolynomial, Var,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use support::{brute_force, int, ratio, shift_sum};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    ensure(elapsed < limit, || format!("{what} took {elapsed:?}, limit {limit:?}"))
}

fn terms(e: &Expansion) -> Vec<(u32, Rational)> {
    e.terms().map(|(h, c)| (h, c.clone())).collect()
}

fn check_expansion(n_shift: u32, power: u32, expected: &[(u32, Rational)]) -> Result<(), String> {
    let got = terms(&linearize_closed(n_shift, power));
    ensure(got == expected, || format!("f_{power} at N={n_shift}: got {got:?}"))
}

fn even_values() -> Outcome {
    let start = Instant::now();
    let cases = [
        (6, vec![(0, ratio(15, 16)), (6, ratio(3, 32))]),
        (8, vec![(0, ratio(105, 128)), (6, ratio(3, 16))]),
        (10, vec![(0, ratio(189, 256)), (6, ratio(135, 512))]),
    ];
    let results: Vec<_> = cases.iter().map(|(n, want)| check_expansion(3, *n, want)).collect();
    let elapsed = start.elapsed();
    results.into_iter().collect::<Result<(), _>>()?;
    within(elapsed, Duration::from_millis(10), "three expansions")?;
    Ok(format!("f_6, f_8, f_10 exact in {elapsed:?}"))
}

/// Odd coefficient of cos(3θ) for N = 3 and n = 2p+1, with a chosen
/// power-of-two denominator exponent.
fn odd_coefficient(p: u32, denominator_exponent: u32) -> Rational {
    let m = 1; // harmonic 2m+1 = 3
    let numer = binomial(BigInt::from(2 * p + 1), BigInt::from(p - m));
    Rational::new(numer * 3, BigInt::from(2).pow(denominator_exponent))
}

fn odd_values() -> Outcome {
    let expected = [(3, ratio(3, 4)), (5, ratio(15, 16)), (7, ratio(63, 64))];
    for (n, value) in &expected {
        check_expansion(3, *n, &[(3, value.clone())])?;
        let p = (n - 1) / 2;
        ensure(odd_coefficient(p, 2 * p) == *value, || format!("2^(2p) form misses f_{n}"))?;
        let printed = odd_coefficient(p, 2 * p + 1);
        ensure(printed != *value && printed * int(2) == *value, || {
            format!("2^(2p+1) form should be off by exactly 2 for f_{n}")
        })?;
    }
    Ok("f_3, f_5, f_7 exact; the 2^(2p+1) denominator halves all three".into())
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    for n_shift in 1..=8 {
        for power in 0..=16 {
            let closed: Expansion = linearize_closed(n_shift, power);
            let oracle: Expansion = linearize_oracle(n_shift, power);
            ensure(closed == oracle, || format!("N={n_shift} n={power}"))?;
            let products = support::expansion_by_products(n_shift, power);
            let got: Vec<_> = terms(&closed);
            let want: Vec<_> = products.into_iter().collect();
            ensure(got == want, || format!("product oracle N={n_shift} n={power}"))?;
            cases += 1;
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(5), "oracle sweep")?;
    Ok(format!("{cases} (N, n) pairs agree in {elapsed:?}"))
}

fn proved_within(name: &str, limit: Duration) -> Outcome {
    let stmt = lookup(name).ok_or_else(|| format!("{name} missing from catalog"))?;
    let start = Instant::now();
    let report = verify(&stmt);
    let elapsed = start.elapsed();
    ensure(report.is_proved() && report.reduced_terms == 0, || report.render_plain())?;
    within(elapsed, limit, name)?;
    Ok(format!("{name} PROVED in {elapsed:?}"))
}

fn classic_proof() -> Outcome {
    proved_within("ramanujan-6-10-8", Duration::from_secs(5))
}

fn other_catalog_proofs() -> Outcome {
    let names = ["gen-3-7-5-six", "gen-3-7-5-three", "asym-6-8-factored", "asym-6-8-r2"];
    let mut lines = Vec::new();
    for name in names {
        lines.push(proved_within(name, Duration::from_secs(5))?);
    }
    Ok(lines.join("; "))
}

fn bracket_facts() -> Outcome {
    let d = |n| bracket_poly::<Rational>(BracketKind::Difference, n);
    ensure(d(0).is_zero() && d(1).is_zero(), || "D(0), D(1) not zero".into())?;
    let v = RationalPolynomial::var;
    let ad_bc = &(&v(Var::A) * &v(Var::D)) - &(&v(Var::B) * &v(Var::C));
    ensure(d(2) == ad_bc.scale(&int(-6)), || format!("D(2) = {}", d(2)))?;

    let (a, b, c) = (Expr::var(Var::A), Expr::var(Var::B), Expr::var(Var::C));
    let q = |x: &Expr, y: &Expr| x.clone().pow(2) + x.clone() * y.clone() + y.clone().pow(2);
    let stmt = IdentityStatement::new(
        "prefactor",
        a.clone().pow(2) * Expr::bracket(BracketKind::First, 2),
        Expr::int(2) * q(&a, &b) * q(&a, &c),
        true,
    );
    let residue = reduce(&stmt);
    ensure(residue.is_zero(), || format!("prefactor residue {residue}"))?;
    Ok("D(0)=D(1)=0, D(2)=6bc-6ad, a^2 A(2) = 2(a^2+ab+b^2)(a^2+ac+c^2)".into())
}

fn single_amplitude(power: u32) -> Rational {
    let e: Expansion = linearize_closed(3, power);
    e.coefficient(6).cloned().unwrap_or_else(|| e.coefficient(3).unwrap().clone())
}

fn constants() -> Outcome {
    let big = |x: i64| BigInt::from(x);
    let diff = derive_constant(3, 6, 10, 8, HarmonicMode::Difference);
    ensure(diff == Some((big(45), big(64))), || format!("(6,10,8) gave {diff:?}"))?;
    let point = derive_constant(3, 3, 7, 5, HarmonicMode::Pointwise);
    ensure(point == Some((big(21), big(25))), || format!("(3,7,5) gave {point:?}"))?;

    let product = single_amplitude(6) * single_amplitude(10);
    let square = single_amplitude(8) * single_amplitude(8);
    ensure(product == ratio(405, 16384), || format!("A6 A10 = {product}"))?;
    ensure(square == ratio(9, 256), || format!("A8^2 = {square}"))?;
    ensure(product / square == ratio(45, 64), || "ratio is not 45/64".into())?;
    Ok("(45,64) and (21,25); 405/16384 over 9/256 is 45/64".into())
}

fn summary(found: &[DiscoveredIdentity]) -> Vec<(u32, u32, u32, Rational)> {
    found.iter().map(|d| (d.m, d.n, d.p, d.ratio())).collect()
}

fn discovery_n3_n4() -> Outcome {
    let query = |shift_count, max_power| DiscoveryQuery {
        shift_count,
        max_power,
        mode: HarmonicMode::Difference,
    };
    let start = Instant::now();
    let three = discover(&query(3, 11));
    let t3 = start.elapsed();
    let start = Instant::now();
    let four = discover(&query(4, 9));
    let t4 = start.elapsed();

    let want3 = vec![(3, 7, 5, ratio(21, 25)), (6, 10, 8, ratio(45, 64))];
    ensure(summary(&three) == want3, || format!("N=3: {:?}", summary(&three)))?;
    ensure(four.is_empty(), || format!("N=4: {:?}", summary(&four)))?;
    ensure(brute_force(3, 11, HarmonicMode::Difference) == want3, || "N=3 brute force disagrees".into())?;
    ensure(brute_force(4, 9, HarmonicMode::Difference).is_empty(), || "N=4 brute force disagrees".into())?;
    within(t3, Duration::from_secs(1), "discover N=3")?;
    within(t4, Duration::from_secs(1), "discover N=4")?;
    Ok(format!("N=3 two identities in {t3:?}; N=4 none in {t4:?}; brute force agrees"))
}

fn discovery_n5() -> Outcome {
    let found = discover(&DiscoveryQuery {
        shift_count: 5,
        max_power: 13,
        mode: HarmonicMode::Difference,
    });
    let triples: Vec<_> = found.iter().map(|d| (d.m, d.n, d.p)).collect();
    ensure(triples == [(5, 9, 7), (5, 13, 9), (7, 11, 9), (9, 13, 11)], || format!("{triples:?}"))?;

    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut worst = 0.0f64;
    for d in &found {
        let p = d.square_coeff.to_string().parse::<f64>().unwrap();
        let q = d.product_coeff.to_string().parse::<f64>().unwrap();
        for _ in 0..100 {
            let t1 = rng.random_range(-std::f64::consts::PI..std::f64::consts::PI);
            let t2 = rng.random_range(-std::f64::consts::PI..std::f64::consts::PI);
            let rho: f64 = rng.random_range(0.5..2.0);
            let delta = |k: u32| rho.powi(k as i32) * (shift_sum(5, k, t1) - shift_sum(5, k, t2));
            let lhs = q * delta(d.m) * delta(d.n);
            let rhs = p * delta(d.p) * delta(d.p);
            // Relative to the size of the terms being cancelled, since
            // both sides vanish together at θ1 = θ2.
            let scale = (q + p) * rho.powi(2 * d.p as i32) * 25.0;
            worst = worst.max((lhs - rhs).abs() / scale);
        }
    }
    ensure(worst <= 1e-9, || format!("worst relative error {worst:e}"))?;
    let constants: Vec<String> = found
        .iter()
        .map(|d| format!("({},{},{}):{}/{}", d.m, d.n, d.p, d.square_coeff, d.product_coeff))
        .collect();
    Ok(format!("{}; worst relative error {worst:.1e}", constants.join(" ")))
}

fn polar_properties() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..1000 {
        let scale = 10f64.powi(rng.random_range(-3..=3));
        let t = ZeroSumTriple::from_pair(rng.random_range(-scale..scale), rng.random_range(-scale..scale));
        let back = powersum::polar::compose(&decompose(&t)).components();
        let comps = t.components();
        let max = comps.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        for (got, want) in back.iter().zip(comps) {
            ensure((got - want).abs() <= 1e-12 * (1.0 + max), || format!("{comps:?} -> {back:?}"))?;
        }
    }
    for _ in 0..1000 {
        let t = ZeroSumTriple::from_pair(rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0));
        let target = pair_product_sum(&t);
        // Another triple on the same level set: rotate the polar angle.
        let polar = decompose(&t);
        let other = powersum::polar::compose(
            &powersum::Polar64::new(polar.rho(), polar.theta() + rng.random_range(-3.0..3.0)).unwrap(),
        );
        ensure((pair_product_sum(&other) - target).abs() <= 1e-9 * (1.0 + target.abs()), || {
            "rotation changed the pair-product sum".into()
        })?;
        // Any triple with the same pair-product sum has the same radius.
        let rho_from_sum = (-4.0 * target / 3.0).sqrt();
        ensure((decompose(&other).rho() - rho_from_sum).abs() <= 1e-9 * (1.0 + rho_from_sum), || {
            "radius differs on a level set".into()
        })?;
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(1), "polar checks")?;
    Ok(format!("1000 round trips and 1000 level-set checks in {elapsed:?}"))
}

fn spot_checks() -> Outcome {
    for stmt in catalog() {
        let report = spot_check(&stmt, 100, 0);
        ensure(report.is_proved(), || format!("{} failed a spot check", stmt.name))?;
    }
    let mut corrupted = lookup("ramanujan-6-10-8").unwrap();
    corrupted.rhs = Expr::int(44) * Expr::bracket(BracketKind::Difference, 8).pow(2);
    let report = spot_check(&corrupted, 100, 0);
    let witness = report.witness.clone().ok_or("corrupted identity has no witness")?;
    ensure(!report.is_proved(), || "corrupted identity passed".into())?;
    ensure(corrupted.lhs.evaluate(&witness) != corrupted.rhs.evaluate(&witness), || "witness does not separate sides".into())?;
    ensure(&witness[0] * &witness[3] == &witness[1] * &witness[2], || "witness off the constraint".into())?;
    Ok(format!(
        "5 entries pass 100 checks; 44 falsified at ({})",
        witness.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
    ))
}

fn random_expr(rng: &mut ChaCha8Rng, depth: u32) -> Expr {
    if depth == 0 || rng.random_bool(0.3) {
        return match rng.random_range(0..3) {
            0 => Expr::Rational(ratio(rng.random_range(-20..=20), rng.random_range(1..=9))),
            1 => Expr::var(Var::ALL[rng.random_range(0..4)]),
            _ => Expr::bracket(BracketKind::ALL[rng.random_range(0..3)], rng.random_range(0..12)),
        };
    }
    let left = random_expr(rng, depth - 1);
    match rng.random_range(0..4) {
        0 => left + random_expr(rng, depth - 1),
        1 => left - random_expr(rng, depth - 1),
        2 => left * random_expr(rng, depth - 1),
        _ => left.pow(rng.random_range(0..5)),
    }
}

fn exit_code(args: &[&str]) -> Option<i32> {
    Command::new(env!("CARGO_BIN_EXE_powersum")).args(args).output().ok()?.status.code()
}

fn dsl_round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let generated = (0..100).map(|i| {
        let lhs = random_expr(&mut rng, 4);
        let rhs = random_expr(&mut rng, 4);
        IdentityStatement::new(format!("generated-{i}"), lhs, rhs, rng.random_bool(0.5))
    });
    for stmt in catalog().into_iter().chain(generated) {
        let text = render(&stmt, Format::Plain);
        let back = parse_named(&stmt.name, &text).map_err(|e| format!("{text}: {e}"))?;
        ensure(back == stmt, || format!("round trip changed {text}"))?;
    }

    let data = |f: &str| format!("{}/tests/data/{f}", env!("CARGO_MANIFEST_DIR"));
    let cases = [
        (vec!["verify".to_string(), "ramanujan-6-10-8".into()], 0),
        (vec!["verify".into(), data("wrong-constant.rid")], 1),
        (vec!["verify".into(), "no-such-identity".into()], 2),
        (vec!["verify".into(), data("truncated.rid")], 2),
    ];
    for (args, want) in cases {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let got = exit_code(&args);
        ensure(got == Some(want), || format!("{args:?} exited {got:?}, expected {want}"))?;
    }
    Ok("5 catalog + 100 generated statements round trip; exit codes 0/1/2".into())
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("even N=3 expansions", even_values),
        ("odd N=3 expansions", odd_values),
        ("closed form matches oracle", oracle_equivalence),
        ("classic identity proved", classic_proof),
        ("remaining catalog proved", other_catalog_proofs),
        ("bracket facts", bracket_facts),
        ("constant derivation", constants),
        ("discovery at N=3 and N=4", discovery_n3_n4),
        ("discovery at N=5", discovery_n5),
        ("polar map", polar_properties),
        ("spot checks", spot_checks),
        ("DSL round trip and exit codes", dsl_round_trip),
    ];
    let total = Instant::now();
    let mut failures = Vec::new();
    for (i, (label, criterion)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(criterion))
            .unwrap_or_else(|_| Err("panicked".into()));
        match result {
            Ok(detail) => println!("PASS {:>2} {label}: {detail}", i + 1),
            Err(why) => {
                println!("FAIL {:>2} {label}: {why}", i + 1);
                failures.push(i + 1);
            }
        }
    }
    println!("acceptance finished in {:?}", total.elapsed());
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
