use super::args::{Algebra, BimoduleKind, Builtin, Cli, Command, Options, Suite, Target};
use super::{Report, RunConfig, SCHEMAS, VERSIONS};
use crate::complexes::{
    averaging_check, classical_hochschild_complex, gs_complex, gs_equals_hochschild_check, hochschild_complex,
    hochschild_homotopy_check, resolution_complex_psl2, resolution_complex_sl2, ComplexReport, ResolutionComplex,
    ResolutionMaps,
};
use crate::error::{Error, Result};
use crate::hopf::{
    builtin_finite, check_hopf_axioms, check_kac, presentation_check_as_ah, BeAlgebra, EvenPart, FiniteHopf,
    HopfAlgebra,
};
use crate::measured::{MeasuredAlgebra, NormalizabilityReport};
use crate::scalar::{parse_scalar, Scalar};
use crate::yd::{
    adjoint_restriction_check, check_yd, chi_coinvariant_check, fundamental_comodule, iota_mu_check, sigma_section,
    Bimodule, CoadPower, CofreeYd, Comodule, FiniteYd, FreeYd, RightModule, TwistYd,
};
use serde::Serialize;
use serde_json::{json, Value};
use std::sync::Arc;

pub enum Output {
    Report(Box<Report>),
    Text(String),
}

#[derive(Clone, Debug, Serialize)]
struct Check {
    name: String,
    pass: bool,
    detail: Value,
}

#[derive(Clone, Debug, Serialize)]
struct SuiteResult {
    suite: &'static str,
    pass: bool,
    checks: Vec<Check>,
}

impl SuiteResult {
    fn new(suite: &'static str) -> Self {
        SuiteResult {
            suite,
            pass: true,
            checks: Vec::new(),
        }
    }

    fn add(&mut self, name: impl Into<String>, pass: bool, detail: impl Serialize) {
        self.pass &= pass;
        self.checks.push(Check {
            name: name.into(),
            pass,
            detail: to_value(detail),
        });
    }
}

fn to_value(x: impl Serialize) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

/// Mutable view of the configuration; each command fills in the values it
/// actually uses so the echo shows effective settings.
struct Ctx<'a> {
    opts: &'a Options,
    config: RunConfig,
}

impl<'a> Ctx<'a> {
    fn new(cli: &'a Cli, command: String) -> Self {
        let opts = &cli.opts;
        Ctx {
            opts,
            config: RunConfig {
                command,
                q: None,
                degree_bound: None,
                max_degree: None,
                group: None,
                algebra: None,
                bimodule: None,
                input: opts.input.as_ref().map(|p| p.display().to_string()),
                builtin: None,
                n: None,
                format: format!("{:?}", opts.format).to_lowercase(),
                seed: opts.seed,
            },
        }
    }

    fn q(&mut self) -> Result<Scalar> {
        if self.opts.symbolic_q {
            self.config.q = Some("symbolic".into());
            return Ok(Scalar::q());
        }
        let text = self.opts.q.clone().unwrap_or_else(|| "2".into());
        let q = parse_scalar(&text)?;
        if !q.is_rational() {
            return Err(Error::Invalid(
                "q must be a rational number; use --symbolic-q for Q(q)".into(),
            ));
        }
        if q.is_zero() {
            return Err(Error::Invalid("q must be nonzero".into()));
        }
        self.config.q = Some(q.to_string());
        Ok(q)
    }

    fn degree_bound(&mut self, default: usize) -> usize {
        let d = self.opts.degree_bound.unwrap_or(default);
        self.config.degree_bound = Some(d);
        d
    }

    fn max_degree(&mut self, default: usize) -> usize {
        let n = self.opts.max_degree.unwrap_or(default);
        self.config.max_degree = Some(n);
        n
    }

    fn group(&mut self, default: &str) -> String {
        let g = self.opts.group.clone().unwrap_or_else(|| default.into());
        self.config.group = Some(g.clone());
        g
    }

    fn finite(&mut self, default_group: &str) -> Result<FiniteHopf> {
        let g = self.group(default_group);
        let kind = self.opts.algebra.unwrap_or(Algebra::Group);
        self.config.algebra = Some(format!("{:?}", kind).to_lowercase());
        let prefix = if kind == Algebra::Group { "C" } else { "O" };
        builtin_finite(&format!("{}{}", prefix, g))
    }

    fn bimodule(&mut self, h: &FiniteHopf, default: BimoduleKind) -> Result<Bimodule> {
        let kind = self.opts.bimodule.unwrap_or(default);
        self.config.bimodule = Some(format!("{:?}", kind).to_lowercase());
        bimodule_of(h, kind, self.opts.seed)
    }

    fn report(self, pass: bool, result: impl Serialize) -> Output {
        Output::Report(Box::new(Report {
            tool: "hopfgs",
            versions: VERSIONS,
            seed: self.config.seed,
            config: self.config,
            pass,
            result: to_value(result),
        }))
    }
}

fn bimodule_of(h: &FiniteHopf, kind: BimoduleKind, seed: u64) -> Result<Bimodule> {
    match kind {
        BimoduleKind::Trivial => Ok(Bimodule::trivial(h)),
        BimoduleKind::Regular => Ok(Bimodule::regular(h)),
        BimoduleKind::Random => Bimodule::random(h, seed),
    }
}

pub fn execute(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Cohomology { target } => {
            let name = format!("cohomology {}", value_name(target));
            cohomology(Ctx::new(cli, name), *target)
        }
        Command::Verify { suite } => {
            let name = format!("verify {}", value_name(suite));
            verify(Ctx::new(cli, name), *suite)
        }
        Command::Normalizability => normalizability(Ctx::new(cli, "normalizability".into())),
        Command::ReportSchema { kind } => SCHEMAS
            .iter()
            .find(|(k, _)| k == kind)
            .map(|(_, s)| Output::Text(s.to_string()))
            .ok_or_else(|| {
                let known: Vec<&str> = SCHEMAS.iter().map(|(k, _)| *k).collect();
                Error::Invalid(format!("unknown schema {:?}; known: {}", kind, known.join(", ")))
            }),
    }
}

fn value_name(v: &impl clap::ValueEnum) -> String {
    v.to_possible_value()
        .map(|p| p.get_name().to_string())
        .unwrap_or_default()
}

fn matrices(c: &crate::linalg::CochainComplex) -> Vec<Vec<Vec<String>>> {
    c.differentials().iter().map(|d| d.to_dense_strings()).collect()
}

fn resolution_algebra(ctx: &mut Ctx) -> Result<(BeAlgebra, usize)> {
    let q = ctx.q()?;
    let d = ctx.degree_bound(6);
    let n = ctx.max_degree(2);
    if d < n + 2 {
        return Err(Error::Invalid(format!(
            "degree bound {} must be at least max degree + 2 = {}",
            d,
            n + 2
        )));
    }
    Ok((BeAlgebra::quantum_sl2(&q, d)?, n))
}

fn resolution_result(r: &ResolutionComplex) -> Value {
    json!({
        "complex": r.report,
        "differentials": matrices(&r.complex),
        "checks": r.check,
    })
}

fn cohomology(mut ctx: Ctx, target: Target) -> Result<Output> {
    match target {
        Target::Sl2 | Target::Psl2 => {
            let (b, n) = resolution_algebra(&mut ctx)?;
            let r = if target == Target::Sl2 {
                resolution_complex_sl2(&b, n)?
            } else {
                resolution_complex_psl2(&b, n)?
            };
            let pass = r.check.pass() && r.report.d_squared_zero;
            Ok(ctx.report(pass, resolution_result(&r)))
        }
        Target::GroupGs => {
            let h = ctx.finite("Z2")?;
            let n = ctx.max_degree(2);
            let kind = ctx.opts.bimodule.unwrap_or(BimoduleKind::Trivial);
            let v = if kind == BimoduleKind::Trivial {
                ctx.config.bimodule = Some("trivial".into());
                FiniteYd::trivial(&h)
            } else {
                let m = ctx.bimodule(&h, kind)?;
                FiniteYd::materialize(&TwistYd::new(&h, &m))?
            };
            let gs = gs_complex(&v, n)?;
            let report = gs.report();
            let pass = report.d_squared_zero;
            Ok(ctx.report(pass, json!({ "complex": report })))
        }
        Target::Hochschild => {
            let h = ctx.finite("Z2")?;
            let n = ctx.max_degree(2);
            let m = ctx.bimodule(&h, BimoduleKind::Regular)?;
            let c = hochschild_complex(&h, &m, n)?;
            let report = ComplexReport::from_complex(&h.name(), &format!("{}'", m.name), None, &c, n);
            let classical = classical_hochschild_complex(&h, &m, n)?;
            let classical = ComplexReport::from_complex(&h.name(), &m.name, None, &classical, n);
            let homotopy = hochschild_homotopy_check(&h, &m, n)?;
            let comparison = gs_equals_hochschild_check(&h, &m, n)?;
            let pass = report.d_squared_zero && homotopy.pass() && comparison.pass();
            Ok(ctx.report(
                pass,
                json!({
                    "complex": report,
                    "classical": classical,
                    "homotopy": homotopy,
                    "comparison": comparison,
                }),
            ))
        }
    }
}

fn verify(mut ctx: Ctx, suite: Suite) -> Result<Output> {
    let suites = match suite {
        Suite::All => vec![
            Suite::Axioms,
            Suite::Yd,
            Suite::Sigma,
            Suite::Averaging,
            Suite::Relations,
            Suite::Normalizability,
        ],
        s => vec![s],
    };
    let mut results = Vec::new();
    for s in suites {
        results.push(match s {
            Suite::Axioms => suite_axioms(&mut ctx)?,
            Suite::Yd => suite_yd(&mut ctx)?,
            Suite::Sigma => suite_sigma(&mut ctx)?,
            Suite::Averaging => suite_averaging(&mut ctx)?,
            Suite::Relations => suite_relations(&mut ctx)?,
            Suite::Normalizability => suite_normalizability(&mut ctx)?,
            Suite::All => unreachable!(),
        });
    }
    let pass = results.iter().all(|r| r.pass);
    Ok(ctx.report(pass, json!({ "suites": results })))
}

fn finite_pair(ctx: &mut Ctx, default_group: &str) -> Result<Vec<FiniteHopf>> {
    let g = ctx.group(default_group);
    let list = match ctx.opts.algebra {
        Some(Algebra::Group) => vec![format!("C{}", g)],
        Some(Algebra::Function) => vec![format!("O{}", g)],
        None => vec![format!("C{}", g), format!("O{}", g)],
    };
    ctx.config.algebra = ctx.opts.algebra.map(|a| format!("{:?}", a).to_lowercase());
    list.iter().map(|n| builtin_finite(n)).collect()
}

fn suite_axioms(ctx: &mut Ctx) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("axioms");
    let q = ctx.q()?;
    let d = ctx.degree_bound(6);
    let b = Arc::new(BeAlgebra::quantum_sl2(&q, d)?);
    let depth = 3.min(d / 2);
    let r = check_hopf_axioms(b.as_ref(), depth)?;
    s.add(format!("Hopf axioms of {} to degree {}", b.name(), depth), r.pass(), &r);
    let kac = check_kac(b.as_ref(), 1)?;
    let expect = q.is_rational() && (&q * &q).is_one();
    s.add(
        format!("S^2 = id on generators of {} iff q^2 = 1", b.name()),
        kac == expect,
        json!({ "kac": kac }),
    );
    let even = EvenPart(b.clone());
    let r = check_hopf_axioms(&even, 2.min(depth))?;
    s.add(format!("Hopf axioms of {} to degree 2", even.name()), r.pass(), &r);
    for h in finite_pair(ctx, "S3")? {
        let r = check_hopf_axioms(&h, 0)?;
        s.add(format!("Hopf axioms and Haar state of {}", h.name()), r.pass(), &r);
        s.add(
            format!("{} is of Kac type", h.name()),
            h.is_kac(),
            json!({ "kac": h.is_kac() }),
        );
    }
    Ok(s)
}

fn suite_yd(ctx: &mut Ctx) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("yd");
    for h in finite_pair(ctx, "S3")? {
        let mut modules = vec![FiniteYd::trivial(&h)];
        for kind in [BimoduleKind::Trivial, BimoduleKind::Regular, BimoduleKind::Random] {
            let m = bimodule_of(&h, kind, ctx.opts.seed)?;
            modules.push(FiniteYd::materialize(&TwistYd::new(&h, &m))?);
        }
        modules.push(FiniteYd::materialize(&CoadPower::new(&h, 2))?);
        modules.push(FiniteYd::materialize(&FreeYd::new(&h, Comodule::trivial(&h)))?);
        for m in &modules {
            let r = check_yd(m, 0, 0)?;
            s.add(format!("{} over {}", m.name, h.name()), r.pass(), &r);
        }
    }
    let q = ctx.q()?;
    let d = ctx.degree_bound(10);
    let b = BeAlgebra::quantum_sl2(&q, d)?;
    let free = FreeYd::new(&b, fundamental_comodule(&b));
    let r = check_yd(&free, 1, 2)?;
    s.add(format!("V ⊠ A over {}", b.name()), r.pass(), &r);
    let cofree = CofreeYd::new(&b, RightModule::trivial(&b));
    let r = check_yd(&cofree, 2, 2)?;
    s.add(format!("C # A over {}", b.name()), r.pass(), &r);
    let p = CoadPower::new(&b, 2);
    let r = check_yd(&p, 2, 1)?;
    s.add(format!("A ⊠ A over {}", b.name()), r.pass(), &r);
    Ok(s)
}

fn suite_sigma(ctx: &mut Ctx) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("sigma");
    let q = ctx.q()?;
    let d = ctx.degree_bound(10);
    let b = BeAlgebra::quantum_sl2(&q, d)?;
    let r = sigma_section(&b)?.check(&b)?;
    s.add("section conditions (1)-(3)", r.pass(), &r);
    let v = fundamental_comodule(&b);
    let vv = v.dual(&b)?.tensor(&v, &b)?;
    for (w, deg) in [(Comodule::trivial(&b), 2), (v, 2), (vv, 1)] {
        let r = iota_mu_check(&b, &w, deg)?;
        s.add(format!("splitting of {} ⊠ A to degree {}", w.name, deg), r.pass(), &r);
    }
    let r = chi_coinvariant_check(&b)?;
    s.add("χ is coinvariant", r.pass(), &r);
    let r = adjoint_restriction_check(&b, 2, 2)?;
    s.add("coadjoint action preserves the even part", r.pass, &r);
    Ok(s)
}

fn suite_averaging(ctx: &mut Ctx) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("averaging");
    for h in finite_pair(ctx, "S3")? {
        let v = FiniteYd::materialize(&TwistYd::new(&h, &Bimodule::trivial(&h)))?;
        for n in 1..=2 {
            let r = averaging_check(&v, n, 50, ctx.opts.seed)?;
            s.add(format!("averaging over {} in degree {}", h.name(), n), r.pass(), &r);
        }
    }
    Ok(s)
}

fn suite_relations(ctx: &mut Ctx) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("relations");
    let ns: Vec<usize> = match ctx.opts.n {
        Some(n) => vec![n],
        None => vec![2, 3, 4],
    };
    ctx.config.n = ctx.opts.n;
    for n in ns {
        let r = presentation_check_as_ah(n)?;
        s.add(format!("A_s({}) and A_h({}) presentations", n, n), r.pass(), &r);
    }
    let q = ctx.q()?;
    let d = ctx.degree_bound(5);
    let b = BeAlgebra::quantum_sl2(&q, d)?;
    let sys = b.system();
    s.add(
        format!("rewriting system of {} is confluent up to length {}", b.name(), d),
        sys.is_confluent(),
        json!({ "rules": sys.rules.len(), "overlaps": sys.overlaps.len() }),
    );
    s.add("rules preserve length parity", sys.is_parity_homogeneous(), Value::Null);
    let commutative = BeAlgebra::quantum_sl2(&Scalar::one(), d)?;
    let (got, want) = (b.standard_monomial_counts(d), commutative.standard_monomial_counts(d));
    s.add(
        "standard monomial counts agree with q = 1",
        got == want,
        json!({ "counts": got, "q_one": want }),
    );
    let rb = if d >= 4 { b } else { BeAlgebra::quantum_sl2(&q, 4)? };
    let (all, even, linear) = ResolutionMaps::new(&rb)?.check_suite(2)?;
    s.add(
        "resolution maps compose to zero on degree ≤ 2 inputs",
        all && even,
        json!({ "all": all, "even": even }),
    );
    s.add("resolution maps are right linear", linear, Value::Null);
    Ok(s)
}

fn builtin_measured(ctx: &mut Ctx, kind: Builtin) -> Result<MeasuredAlgebra> {
    ctx.config.builtin = Some(format!("{:?}", kind).to_lowercase());
    match kind {
        Builtin::Cn => {
            let n = ctx.opts.n.unwrap_or(4);
            ctx.config.n = Some(n);
            MeasuredAlgebra::cn(n)
        }
        Builtin::Matrix => {
            let n = ctx.opts.n.unwrap_or(2);
            ctx.config.n = Some(n);
            MeasuredAlgebra::matrix_trace(n)
        }
        Builtin::Trq => {
            let q = ctx.q()?;
            MeasuredAlgebra::trq(&q)
        }
        Builtin::Weighted => {
            let w = ctx
                .opts
                .weights
                .as_deref()
                .ok_or_else(|| Error::Invalid("--builtin weighted needs --weights".into()))?;
            let weights = w
                .split(',')
                .map(|x| parse_scalar(x.trim()))
                .collect::<Result<Vec<_>>>()?;
            MeasuredAlgebra::weighted(&format!("C^{} weighted", weights.len()), &weights)
        }
    }
}

fn read_measured(ctx: &Ctx) -> Result<Option<MeasuredAlgebra>> {
    let Some(path) = &ctx.opts.input else {
        return Ok(None);
    };
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("cannot read {}: {}", path.display(), e)))?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().to_string())
        .unwrap_or_else(|| "input".into());
    MeasuredAlgebra::from_json(&name, &text).map(Some)
}

fn suite_normalizability(ctx: &mut Ctx) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("normalizability");
    if let Some(r) = read_measured(ctx)? {
        let rep = r.normalizability();
        s.add(
            format!("snake identities for {}", rep.algebra),
            rep.snake_identities,
            &rep,
        );
        return Ok(s);
    }
    for n in 2..=9 {
        let rep = MeasuredAlgebra::cn(n)?.normalizability();
        let ok = rep.normalizable
            && rep.lambda == Some(Scalar::one())
            && rep.mu_squared == Some(Scalar::from_i64(n as i64))
            && rep.snake_identities;
        s.add(format!("C^{}: λ = 1, μ² = {}", n, n), ok, &rep);
    }
    let rep =
        MeasuredAlgebra::weighted("C^2 with weights (1, 2)", &[Scalar::one(), Scalar::from_i64(2)])?.normalizability();
    let ok = !rep.normalizable && rep.witness.is_some() && rep.snake_identities;
    s.add("weighted C^2 is rejected with a witness", ok, &rep);
    for n in 2..=3 {
        let rep = MeasuredAlgebra::matrix_trace(n)?.normalizability();
        s.add(
            format!("M_{} with trace", n),
            rep.normalizable && rep.snake_identities,
            &rep,
        );
    }
    let q = ctx.q()?;
    let rep = MeasuredAlgebra::trq(&q)?.normalizability();
    let s_q = &q + &q.inv()?;
    let ok = rep.normalizable && rep.lambda.as_ref() == Some(&s_q) && rep.mu_squared == Some(&s_q * &s_q);
    s.add("M_2 with tr_q: λ = μ = q + 1/q", ok && rep.snake_identities, &rep);
    Ok(s)
}

fn normalizability(mut ctx: Ctx) -> Result<Output> {
    let r = match (read_measured(&ctx)?, ctx.opts.builtin) {
        (Some(r), None) => r,
        (None, Some(kind)) => builtin_measured(&mut ctx, kind)?,
        (Some(_), Some(_)) => return Err(Error::Invalid("give either --input or --builtin, not both".into())),
        (None, None) => {
            return Err(Error::Invalid(
                "give --input FILE or --builtin cn|weighted|matrix|trq".into(),
            ))
        }
    };
    let rep: NormalizabilityReport = r.normalizability();
    let pass = rep.snake_identities;
    Ok(ctx.report(pass, rep))
}
