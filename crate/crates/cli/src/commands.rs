use std::path::Path;

use ccwidth::decompose::DecompositionReport;
use ccwidth::generators;
use ccwidth::io::detect_format;
use ccwidth::oracles::s_exact_with_limits;
use ccwidth::ramsey::{Normalized, RamseyVerification};
use ccwidth::{
    ccw_exact, ccw_two_approx, cover_width, decompose, find_transitive_orientation, parse_graph, ramsey_lookup,
    random_poset_graph, serialize_graph, trivial_cover, validate_cover, verify_decomposition, verify_ramsey_tiny,
    Decomposition, Error, Format, Graph, OrderedCliqueCover, Orientation, RamseyAnswer, RamseyQuery, RamseyTable,
    SearchLimits, StarCertificate,
};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use crate::report::{to_json, CmdResult, Context, Failure, Outcome, EXIT_PARSE, EXIT_RECOGNITION, EXIT_VERIFY};
use crate::{CcwArgs, Command, DecomposeArgs, EmitFormat, GenArgs, GenKind, InputFormat, RamseyArgs, VerifyArgs};

pub enum Printed {
    Report(Outcome),
    Raw(String),
}

pub fn run(ctx: &mut Context, format: InputFormat, command: Command) -> CmdResult<Printed> {
    let report = |r: CmdResult<Outcome>| r.map(Printed::Report);
    match command {
        Command::Parse { input, emit } => {
            let g = read_graph(ctx, &input, format)?;
            match emit {
                Some(f) => Ok(Printed::Raw(serialize_graph(&g, emit_format(f)))),
                None => report(Ok(Outcome::ok(graph_facts(&g)))),
            }
        }
        Command::Ccw(args) => report(ccw(ctx, format, args)),
        Command::Decompose(args) => report(cmd_decompose(ctx, format, args)),
        Command::Verify(args) => report(verify(ctx, format, args)),
        Command::Star { input } => report(star(ctx, format, &input)),
        Command::Gen(args) => report(gen(ctx, args)),
        Command::Ramsey(args) => report(ramsey(ctx, args)),
        Command::Stats { input } => report(stats(ctx, format, &input)),
    }
}

fn emit_format(f: EmitFormat) -> Format {
    match f {
        EmitFormat::EdgeList => Format::EdgeList,
        EmitFormat::Json => Format::Json,
        EmitFormat::Dot => Format::Dot,
    }
}

fn extension(f: EmitFormat) -> &'static str {
    match f {
        EmitFormat::EdgeList => "txt",
        EmitFormat::Json => "json",
        EmitFormat::Dot => "dot",
    }
}

fn read_graph(ctx: &mut Context, path: &Path, format: InputFormat) -> CmdResult<Graph> {
    let text = ctx.read(path)?;
    let fmt = match format {
        InputFormat::Auto => detect_format(&text),
        InputFormat::EdgeList => Format::EdgeList,
        InputFormat::Json => Format::Json,
    };
    parse_graph(&text, fmt).map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn read_json<T: DeserializeOwned>(ctx: &mut Context, path: &Path, what: &str) -> CmdResult<T> {
    let text = ctx.read(path)?;
    serde_json::from_str(&text).map_err(|e| Failure::new(EXIT_PARSE, format!("{} ({what}): {e}", path.display())))
}

fn graph_facts(g: &Graph) -> Value {
    json!({
        "n": g.n(),
        "m": g.edge_count(),
        "components": g.components().len(),
        "connected": g.is_connected(),
    })
}

fn ccw(ctx: &mut Context, format: InputFormat, args: CcwArgs) -> CmdResult<Outcome> {
    let g = read_graph(ctx, &args.input, format)?;
    if args.exact {
        let (w, cover) = ccw_exact(&g, &ctx.limits(SearchLimits::ccw()))?;
        ctx.witness("cover.json", &to_json(&cover))?;
        return Ok(Outcome::ok(json!({"mode": "exact", "ccw": w, "cover": cover})));
    }

    let given = match &args.orientation {
        Some(path) => Some(read_json::<Orientation>(ctx, path, "orientation")?),
        None => None,
    };
    if given.is_none() {
        ctx.notice("no orientation given; searching for a transitive orientation of the complement");
    }
    let approx = ccw_two_approx(&g, given.as_ref(), !args.assume_transitive, &ctx.limits(SearchLimits::orientation()))
        .map_err(|e| match e {
            // A supplied orientation that does not fit the complement is a
            // failed recognition, not malformed input.
            Error::InvalidArgument(m) => Failure::new(EXIT_RECOGNITION, m),
            other => other.into(),
        })?;
    ctx.witness("cover.json", &to_json(&approx.witness_cover))?;
    ctx.witness("star.json", &to_json(&approx.witness_star))?;
    Ok(Outcome::ok(json!({
        "mode": "greedy",
        "interval": [approx.lower, approx.upper],
        "lower": approx.lower,
        "upper": approx.upper,
        "cover": approx.witness_cover,
        "star": approx.witness_star,
    })))
}

fn auto_cover(ctx: &mut Context, g: &Graph) -> CmdResult<(OrderedCliqueCover, &'static str)> {
    match ccw_exact(g, &ctx.limits(SearchLimits::ccw())) {
        Ok((_, c)) => return Ok((c, "optimal")),
        Err(Error::LimitExceeded(m)) => ctx.notice(format!("exact cover skipped: {m}")),
        Err(e) => return Err(e.into()),
    }
    match find_transitive_orientation(&g.complement(), &ctx.limits(SearchLimits::orientation())) {
        Ok(Some(o)) => {
            let approx = ccw_two_approx(g, Some(&o), false, &SearchLimits::orientation())?;
            Ok((approx.witness_cover, "greedy"))
        }
        Ok(None) => {
            ctx.notice("complement is not transitively orientable; using the trivial cover");
            Ok((trivial_cover(g), "trivial"))
        }
        Err(Error::LimitExceeded(m)) => {
            ctx.notice(format!("orientation search skipped: {m}; using the trivial cover"));
            Ok((trivial_cover(g), "trivial"))
        }
        Err(e) => Err(e.into()),
    }
}

fn cmd_decompose(ctx: &mut Context, format: InputFormat, args: DecomposeArgs) -> CmdResult<Outcome> {
    let g = read_graph(ctx, &args.input, format)?;
    let (cover, source) = match &args.cover {
        Some(path) => (read_json::<OrderedCliqueCover>(ctx, path, "cover")?, "file"),
        None => auto_cover(ctx, &g)?,
    };
    let d = decompose(&g, &cover)?;
    if d.is_degenerate() {
        ctx.notice("cover has width 0: every component is a clique and the graph is its own single factor");
    }
    ctx.witness("decomposition.json", &to_json(&d))?;
    for i in 0..d.factors.len() {
        ctx.witness(&format!("factor-{}.dot", i + 1), &d.factor_dot(i))?;
    }
    let mut results = json!({
        "cover_source": source,
        "width": d.width,
        "factor_count": d.factors.len(),
        "decomposition": d,
    });
    let mut code = 0;
    if args.verify {
        let report = verify_decomposition(&g, &d);
        if !report.all_passed() {
            code = EXIT_VERIFY;
        }
        results["verification"] = serde_json::to_value(&report).expect("serializable");
    }
    Ok(Outcome { results, code })
}

fn verify(ctx: &mut Context, format: InputFormat, args: VerifyArgs) -> CmdResult<Outcome> {
    let g = read_graph(ctx, &args.input, format)?;
    let mut results = serde_json::Map::new();
    let mut ok = true;

    if let Some(path) = &args.decomposition {
        let d: Decomposition = read_json(ctx, path, "decomposition")?;
        let report: DecompositionReport = verify_decomposition(&g, &d);
        ok &= report.all_passed();
        results.insert("decomposition".into(), json!({"passed": report.all_passed(), "checks": report.checks}));
    }
    if let Some(path) = &args.cover {
        let c: OrderedCliqueCover = read_json(ctx, path, "cover")?;
        let report = validate_cover(&g, &c);
        let width = report.is_valid().then(|| cover_width(&g, &c)).transpose()?;
        ok &= report.is_valid();
        results.insert(
            "cover".into(),
            json!({"passed": report.is_valid(), "width": width, "violations": report.violations}),
        );
    }
    if let Some(path) = &args.star {
        let s: StarCertificate = read_json(ctx, path, "star certificate")?;
        let outcome = s.validate(&g);
        ok &= outcome.is_ok();
        results.insert(
            "star".into(),
            json!({"passed": outcome.is_ok(), "leaves": s.leaf_count(), "error": outcome.err()}),
        );
    }
    if let Some(path) = &args.orientation {
        let o: Orientation = read_json(ctx, path, "orientation")?;
        let problem = orientation_problem(&g, &o);
        ok &= problem.is_none();
        results.insert("orientation".into(), json!({"passed": problem.is_none(), "error": problem}));
    }
    results.insert("passed".into(), json!(ok));
    Ok(Outcome {
        results: Value::Object(results),
        code: if ok { 0 } else { EXIT_VERIFY },
    })
}

/// Why `o` is not a transitive orientation of the complement of `g`.
fn orientation_problem(g: &Graph, o: &Orientation) -> Option<String> {
    if o.n() != g.n() {
        return Some(format!("orientation has {} vertices, graph has {}", o.n(), g.n()));
    }
    if let Some(why) = o.transitivity_violation() {
        return Some(why);
    }
    if o.underlying_graph() != g.complement() {
        return Some("arcs do not match the non-edges of the graph".into());
    }
    None
}

fn star(ctx: &mut Context, format: InputFormat, input: &Path) -> CmdResult<Outcome> {
    let g = read_graph(ctx, input, format)?;
    let (s, cert) = s_exact_with_limits(&g, &ctx.limits(SearchLimits::star()))?;
    ctx.witness("star.json", &to_json(&cert))?;
    Ok(Outcome::ok(json!({"s": s, "certificate": cert})))
}

fn gen(ctx: &mut Context, args: GenArgs) -> CmdResult<Outcome> {
    let seed = args.seed_override.unwrap_or(ctx.seed);
    if !(0.0..=1.0).contains(&args.density) {
        return Err(Failure::new(EXIT_PARSE, "density must lie in [0, 1]"));
    }
    let (g, orientation) = match args.kind {
        GenKind::Poset => {
            let (g, o) = random_poset_graph(args.n, args.density, seed);
            (g, Some(o))
        }
        GenKind::Cobipartite => (generators::random_cobipartite(args.n, args.density, seed), None),
        GenKind::Grid => (generators::grid(args.n, args.n), None),
        GenKind::Star => (generators::star(args.n), None),
        GenKind::Random => (generators::random_gnp(args.n, args.density, seed), None),
    };
    if ctx.out.is_none() {
        ctx.out = Some(".".into());
    }
    ctx.witness(&format!("graph.{}", extension(args.emit)), &serialize_graph(&g, emit_format(args.emit)))?;
    if let Some(o) = &orientation {
        ctx.witness("orientation.json", &to_json(o))?;
    }
    let mut results = graph_facts(&g);
    results["seed"] = json!(seed);
    results["density"] = json!(args.density);
    Ok(Outcome::ok(results))
}

fn label(targets: &[usize]) -> String {
    let parts: Vec<String> = targets.iter().map(ToString::to_string).collect();
    format!("R({})", parts.join(","))
}

fn ramsey(ctx: &mut Context, args: RamseyArgs) -> CmdResult<Outcome> {
    let targets = match args.corollary {
        Some(0) => return Err(Failure::new(EXIT_PARSE, "--corollary needs a width of at least 1")),
        Some(w) => {
            let mut t = vec![3; w - 1];
            t.push(4);
            t
        }
        None => args.targets.clone(),
    };
    let q = RamseyQuery::new(targets)?;
    let answer = match &args.table {
        Some(path) => {
            let text = ctx.read(path)?;
            RamseyTable::from_json(&text)?.lookup(&q)
        }
        None => ramsey_lookup(&q),
    };
    let name = match q.normalize() {
        Normalized::Key(k) => label(&k),
        Normalized::Trivial(_) => label(q.targets()),
    };
    let value = match answer {
        RamseyAnswer::Exact { value } => format!("{name}={value}"),
        RamseyAnswer::Range { lo, hi } => format!("{lo}<={name}<={hi}"),
        RamseyAnswer::Unknown => format!("{name} unknown"),
    };
    let summary = match (args.corollary, answer.bounds()) {
        (Some(_), Some((_, hi))) => format!("s(G) ≤ {} ({value})", hi - 1),
        (Some(_), None) => format!("no bound available ({value})"),
        (None, _) => value,
    };
    let mut results = json!({"targets": q.targets(), "answer": answer, "summary": summary});
    let mut code = 0;
    if args.verify {
        if args.table.is_some() {
            ctx.notice("verification checks the bundled table, not --table");
        }
        let v: RamseyVerification = verify_ramsey_tiny(&q, &ctx.limits(SearchLimits::with_max_n(64)))?;
        if v.failed() {
            code = EXIT_VERIFY;
        }
        results["verification"] = serde_json::to_value(&v).expect("serializable");
    }
    Ok(Outcome { results, code })
}

fn stats(ctx: &mut Context, format: InputFormat, input: &Path) -> CmdResult<Outcome> {
    let g = read_graph(ctx, input, format)?;
    let n = g.n();
    let degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let pairs = n * n.saturating_sub(1) / 2;
    let mut results = graph_facts(&g);
    results["density"] = json!(if pairs == 0 { 0.0 } else { g.edge_count() as f64 / pairs as f64 });
    results["min_degree"] = json!(degrees.iter().min());
    results["max_degree"] = json!(degrees.iter().max());
    results["is_clique"] = json!(g.is_clique());
    results["s"] = match s_exact_with_limits(&g, &ctx.limits(SearchLimits::star())) {
        Ok((s, _)) => json!(s),
        Err(Error::LimitExceeded(m)) => {
            ctx.notice(format!("s(G) skipped: {m}"));
            Value::Null
        }
        Err(e) => return Err(e.into()),
    };
    Ok(Outcome::ok(results))
}
