//! Acceptance criteria. One line per criterion; the process fails if any
//! criterion fails. Exact arithmetic throughout, so every tolerance is
//! equality; the only numeric limits are wall-clock budgets.

use hopfgs::complexes::{averaging_check, gs_complex, hochschild_complex, ResolutionMaps};
use hopfgs::hopf::{builtin_finite, BeAlgebra};
use hopfgs::linalg::CochainComplex;
use hopfgs::measured::MeasuredAlgebra;
use hopfgs::yd::{
    chi_coinvariant_check, fundamental_comodule, iota_mu_check, sigma_section, Bimodule, Comodule, FiniteYd, TwistYd,
};
use hopfgs::Scalar;
use serde_json::Value;
use std::time::{Duration, Instant};

type Check = Result<String, String>;

/// Name, wall-clock limit in seconds, criterion.
type Criterion = (&'static str, u64, fn() -> Check);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err(e: hopfgs::Error) -> String {
    e.to_string()
}

fn cli_homology(args: &[&str]) -> Result<Vec<u64>, String> {
    let out = hopfgs::cli::run(std::iter::once("hopfgs").chain(args.iter().copied()));
    ensure(out.code == 0, format!("{:?} exited {}: {}", args, out.code, out.stderr))?;
    let v: Value = serde_json::from_str(&out.stdout).map_err(|e| e.to_string())?;
    v["result"]["complex"]["homology"]
        .as_array()
        .ok_or("no homology in report")?
        .iter()
        .map(|x| x.as_u64().ok_or_else(|| "non-integer homology".to_string()))
        .collect()
}

fn homology(c: &CochainComplex, top: usize) -> Vec<usize> {
    c.homology_dims()[..=top].to_vec()
}

// 1. PSL homology (1, 0, 0, 1) at q = 2, 3, 1, each under 60 s.
fn psl_flagship() -> Check {
    let mut slowest = Duration::ZERO;
    for q in ["2", "3", "1"] {
        let t = Instant::now();
        let h = cli_homology(&["cohomology", "psl2", "--q", q])?;
        let dt = t.elapsed();
        slowest = slowest.max(dt);
        ensure(h == [1, 0, 0, 1], format!("q = {}: homology {:?}", q, h))?;
        ensure(dt < Duration::from_secs(60), format!("q = {} took {:?}", q, dt))?;
    }
    Ok(format!("homology [1, 0, 0, 1] at q = 2, 3, 1; slowest {:.2?}", slowest))
}

// 2. SL: H⁰ = H³ = 1 at q = 2; degrees 1, 2 agree across q = 2, 3 and Q(q).
fn sl_flagship() -> Check {
    let t = Instant::now();
    let h2 = cli_homology(&["cohomology", "sl2", "--q", "2"])?;
    ensure(
        t.elapsed() < Duration::from_secs(60),
        format!("q = 2 took {:?}", t.elapsed()),
    )?;
    ensure(h2[0] == 1 && h2[3] == 1, format!("q = 2: homology {:?}", h2))?;
    let h3 = cli_homology(&["cohomology", "sl2", "--q", "3"])?;
    let hs = cli_homology(&["cohomology", "sl2", "--symbolic-q"])?;
    ensure(
        h2[1..3] == h3[1..3] && h2[1..3] == hs[1..3],
        format!("degrees 1, 2 differ: q=2 {:?}, q=3 {:?}, Q(q) {:?}", h2, h3, hs),
    )?;
    Ok(format!("q = 2 {:?}, q = 3 {:?}, Q(q) {:?}", h2, h3, hs))
}

// 3. φ compositions vanish on w ⊗ m, deg m ≤ 2, over B and its even part.
fn zero_compositions() -> Check {
    let mut parts = Vec::new();
    for q in [Scalar::from_i64(2), Scalar::from_i64(3), Scalar::q()] {
        let b = BeAlgebra::quantum_sl2(&q, 4).map_err(err)?;
        let (all, even, _) = ResolutionMaps::new(&b).map_err(err)?.check_suite(2).map_err(err)?;
        ensure(all && even, format!("q = {}: all {}, even {}", q, all, even))?;
        parts.push(q.to_string());
    }
    Ok(format!("all inputs and even inputs at q = {}", parts.join(", ")))
}

// 4. Hochschild and GS homology agree for three algebras and three bimodules.
fn gs_hochschild() -> Check {
    let mut n_cases = 0;
    for (alg, top) in [("CZ2", 3), ("CS3", 2), ("OS3", 2)] {
        let h = builtin_finite(alg).map_err(err)?;
        for m in [
            Bimodule::trivial(&h),
            Bimodule::regular(&h),
            Bimodule::random(&h, 7).map_err(err)?,
        ] {
            let hoch = hochschild_complex(&h, &m, top).map_err(err)?;
            let v = FiniteYd::materialize(&TwistYd::new(&h, &m)).map_err(err)?;
            let gs = gs_complex(&v, top).map_err(err)?.report().homology;
            let hh = homology(&hoch, top);
            ensure(
                gs == hh,
                format!("{} / {}: GS {:?}, Hochschild {:?}", alg, m.name, gs, hh),
            )?;
            n_cases += 1;
        }
    }
    Ok(format!("{} (algebra, bimodule) pairs agree degreewise", n_cases))
}

// 5. Trivial-coefficient GS homology of group algebras is (1, 0, …, 0).
fn group_vanishing() -> Check {
    let mut seen = Vec::new();
    for (g, tops) in [("Z2", &[2, 3][..]), ("Z3", &[2, 3]), ("Z4", &[2]), ("S3", &[2])] {
        let h = builtin_finite(&format!("C{}", g)).map_err(err)?;
        for &top in tops {
            let got = gs_complex(&FiniteYd::trivial(&h), top).map_err(err)?.report().homology;
            let mut want = vec![0; top + 1];
            want[0] = 1;
            ensure(got == want, format!("{} at N = {}: {:?}", g, top, got))?;
            seen.push(format!("{}@{}", g, top));
        }
    }
    Ok(seen.join(" "))
}

// 6. ∂M = M∂, M² = M, and M f = f iff f colinear.
fn averaging() -> Check {
    let mut samples = 0;
    for alg in ["CZ2", "CS3", "OS3"] {
        let h = builtin_finite(alg).map_err(err)?;
        let v = FiniteYd::materialize(&TwistYd::new(&h, &Bimodule::trivial(&h))).map_err(err)?;
        for n in 1..=2 {
            let r = averaging_check(&v, n, 50, 1).map_err(err)?;
            ensure(r.pass(), format!("{} degree {}: {:?}", alg, n, r))?;
            ensure(
                r.samples >= 50,
                format!("{} degree {}: only {} samples", alg, n, r.samples),
            )?;
            samples += r.samples;
        }
    }
    Ok(format!(
        "{} random cochains, idempotent, fixed points exactly the colinear ones",
        samples
    ))
}

// 7. σ conditions, μι = id for W ∈ {ℂ, fundamental}, χ coinvariant.
fn sigma_splitting() -> Check {
    for q in [2, 3] {
        let b = BeAlgebra::quantum_sl2(&Scalar::from_i64(q), 10).map_err(err)?;
        let s = sigma_section(&b).map_err(err)?.check(&b).map_err(err)?;
        ensure(s.pass(), format!("q = {}: {:?}", q, s))?;
        for w in [Comodule::trivial(&b), fundamental_comodule(&b)] {
            let r = iota_mu_check(&b, &w, 2).map_err(err)?;
            ensure(
                r.mu_iota_identity,
                format!("q = {}: μι ≠ id on {}: {:?}", q, w.name, r.witness),
            )?;
        }
        let c = chi_coinvariant_check(&b).map_err(err)?;
        ensure(c.pass(), format!("q = {}: {:?}", q, c))?;
    }
    Ok("q = 2, 3".into())
}

// 8. Normalizability of the built-in measured algebras.
fn normalizability() -> Check {
    for n in 2..=9 {
        let r = MeasuredAlgebra::cn(n).map_err(err)?.normalizability();
        ensure(
            r.normalizable
                && r.lambda == Some(Scalar::one())
                && r.mu_squared == Some(Scalar::from_i64(n as i64))
                && r.snake_identities,
            format!("C^{}: {:?}", n, r),
        )?;
    }
    let w = MeasuredAlgebra::weighted("weighted", &[Scalar::one(), Scalar::from_i64(2)]).map_err(err)?;
    let r = w.normalizability();
    ensure(
        !r.normalizable && r.witness.is_some() && r.snake_identities,
        format!("weighted: {:?}", r),
    )?;
    let others = [
        MeasuredAlgebra::matrix_trace(2),
        MeasuredAlgebra::matrix_trace(3),
        MeasuredAlgebra::trq(&Scalar::from_i64(3)),
    ];
    for a in others {
        let r = a.map_err(err)?.normalizability();
        ensure(r.snake_identities, format!("{}: snake identities fail", r.algebra))?;
    }
    Ok(format!(
        "C^2..C^9 give λ = 1, μ² = n; weighted rejected at {}",
        r.witness_basis.unwrap_or_default()
    ))
}

// 9. Confluence to degree 5 and standard monomial counts match q = 1.
fn rewriting() -> Check {
    let b = BeAlgebra::quantum_sl2(&Scalar::from_i64(2), 5).map_err(err)?;
    let one = BeAlgebra::quantum_sl2(&Scalar::one(), 5).map_err(err)?;
    ensure(b.system().is_confluent(), "not confluent up to degree 5")?;
    let (got, want) = (b.standard_monomial_counts(5), one.standard_monomial_counts(5));
    ensure(got == want, format!("counts {:?} vs q = 1 {:?}", got, want))?;
    Ok(format!(
        "{} overlaps resolve; counts {:?}",
        b.system().overlaps.len(),
        got
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("PSL flagship", 3 * 60, psl_flagship),
        ("SL flagship", 60, sl_flagship),
        ("zero compositions", 30, zero_compositions),
        ("GS = Hochschild", 300, gs_hochschild),
        ("group vanishing", 120, group_vanishing),
        ("averaging", 120, averaging),
        ("section and splitting", 60, sigma_splitting),
        ("normalizability", 10, normalizability),
        ("rewriting", 60, rewriting),
    ];
    let mut failed = 0;
    for (i, (name, limit, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = f();
        let dt = t.elapsed();
        let outcome = match outcome {
            Ok(msg) if dt > Duration::from_secs(*limit) => Err(format!("{} but exceeded {} s", msg, limit)),
            o => o,
        };
        let (tag, msg) = match &outcome {
            Ok(m) => ("PASS", m),
            Err(m) => ("FAIL", m),
        };
        if outcome.is_err() {
            failed += 1;
        }
        println!(
            "criterion {} [{}] {}: {} ({:.2?}, limit {} s)",
            i + 1,
            tag,
            name,
            msg,
            dt,
            limit
        );
    }
    if failed > 0 {
        println!("{} criteria failed", failed);
        std::process::exit(1);
    }
    println!("all 9 criteria pass");
}
