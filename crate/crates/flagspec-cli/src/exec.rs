//! Command execution: builds the flag variety, runs the requested
//! computation, and renders the outcome.
//!
//! Failures fall into two classes with distinct exit codes. Usage failures
//! (malformed or inconsistent inputs) exit with code 1. Mathematical
//! precondition failures (a line bundle without a spin-c structure, a class
//! outside the Kähler cone, mixed units, a singular input) exit with code 2
//! and carry a machine-readable kind.

use crate::args::{
    self, BoundArgs, Cli, Command, DescribeArgs, HarmonicArgs, MinArgs, ScanArgs,
    SpectrumArgs, SpincCheckArgs, ThetaSpectrumArgs, Units,
};
use crate::document::{
    self, imaginary_value, int_strings, kahler_value, paren_list, pi_value, rat_strings,
    render_table, JobContext,
};
use flagspec::{
    Error, FlagVariety, HarmonicOutcome, Int, KahlerClass, LieType, LineBundleClass, PiScalar,
    Rat, RootSystem, Spectrum, SpectrumData, Weight, DEFAULT_MAX_DISTINCT,
};
use num_traits::{One, Zero};
use serde_json::{json, Value};

pub enum Failure {
    Usage(String),
    Precondition {
        kind: &'static str,
        message: String,
        json_doc: Option<String>,
    },
}

pub fn execute(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Describe(a) => describe(a),
        Command::SpincCheck(a) => spinc_check(a),
        Command::ThetaSpectrum(a) => theta_spectrum(a),
        Command::Spectrum(a) => spectrum(a),
        Command::Min(a) => min(a),
        Command::Bound(a) => bound(a),
        Command::Harmonic(a) => harmonic(a),
        Command::Scan(a) => scan(a),
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure::Usage(message.into())
}

fn precondition_kind(err: &Error) -> Option<&'static str> {
    match err {
        Error::NotSpinc { .. } => Some("not-spinc"),
        Error::NotKahler { .. } => Some("not-kahler"),
        Error::UnitMismatch => Some("unit-mismatch"),
        Error::SingularInput => Some("singular-input"),
        _ => None,
    }
}

fn core_failure(err: Error, job: &JobContext) -> Failure {
    match precondition_kind(&err) {
        Some(kind) => Failure::Precondition {
            kind,
            message: err.to_string(),
            json_doc: job
                .json
                .then(|| document::error_document(job, kind, &err.to_string())),
        },
        None => Failure::Usage(err.to_string()),
    }
}

fn build_variety(lie_type: LieType, painted: &[usize]) -> Result<FlagVariety, Failure> {
    FlagVariety::new(RootSystem::new(lie_type), painted).map_err(|e| usage(e.to_string()))
}

fn setup(
    command: &'static str,
    target: &args::Target,
    json: bool,
) -> Result<(FlagVariety, LieType, JobContext), Failure> {
    let (lie_type, painted) = args::resolve_target(target).map_err(Failure::Usage)?;
    let x = build_variety(lie_type, &painted)?;
    let mut job = JobContext::new(
        command,
        lie_type.family().letter(),
        lie_type.rank(),
        x.painted().to_vec(),
    );
    job.json = json;
    Ok((x, lie_type, job))
}

fn units_tag(pi_units: bool) -> &'static str {
    if pi_units {
        "pi"
    } else {
        "plain"
    }
}

fn resolve_cap(flag: Option<usize>) -> Result<usize, Failure> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match std::env::var("FLAGSPEC_MAX_DISTINCT") {
        Ok(text) => text.trim().parse::<usize>().map_err(|_| {
            usage(format!(
                "FLAGSPEC_MAX_DISTINCT must be a non-negative integer, got {text:?}"
            ))
        }),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_MAX_DISTINCT),
        Err(std::env::VarError::NotUnicode(_)) => {
            Err(usage("FLAGSPEC_MAX_DISTINCT is not valid unicode"))
        }
    }
}

/// Kähler class from an explicit `--kahler` vector, a `--scalar-target`
/// value, or both; both together must agree exactly.
fn resolve_omega(
    x: &FlagVariety,
    kahler: Option<&str>,
    units: Units,
    scalar_target: Option<&str>,
    job: &mut JobContext,
) -> Result<KahlerClass, Failure> {
    let given = match kahler {
        Some(text) => {
            let coeffs = args::parse_rat_list(text, "--kahler").map_err(Failure::Usage)?;
            job.kahler = Some(coeffs.clone());
            job.kahler_units = Some(units.label());
            Some(KahlerClass::new(coeffs, units.is_pi()))
        }
        None => None,
    };
    if let Some(text) = scalar_target {
        job.scalar_target = Some(text.to_string());
    }
    match (given, scalar_target) {
        (None, None) => Err(usage("provide --kahler or --scalar-target")),
        (Some(k), None) => Ok(k),
        (None, Some(text)) => ke_from_target(x, text, job),
        (Some(k), Some(text)) => {
            let computed = ke_from_target(x, text, job)?;
            if k != computed {
                return Err(usage(format!(
                    "--kahler disagrees with the class fixed by --scalar-target {text}: \
                     expected {} in {} units",
                    paren_list(computed.coeffs()),
                    units_tag(computed.pi_units()),
                )));
            }
            Ok(computed)
        }
    }
}

/// Kähler-Einstein class scaled so the total scalar curvature hits the
/// target; `auto-ke` selects 4m(m+1).
fn ke_from_target(x: &FlagVariety, text: &str, job: &JobContext) -> Result<KahlerClass, Failure> {
    let target = if text == "auto-ke" {
        let m = x.dim_c();
        PiScalar::rational(Rat::from_integer(Int::from(4 * m * (m + 1))))
    } else {
        PiScalar::rational(args::parse_rational(text).map_err(Failure::Usage)?)
    };
    x.ke_class(Some(&target)).map_err(|e| core_failure(e, job))
}

fn parse_line_bundle(text: &str, job: &mut JobContext) -> Result<LineBundleClass, Failure> {
    let coeffs = args::parse_int_list(text, "--line-bundle").map_err(Failure::Usage)?;
    job.line_bundle = Some(coeffs.clone());
    Ok(LineBundleClass::new(coeffs))
}

fn emit(job: &JobContext, result: Value, table: String) -> String {
    if job.json {
        document::document(job, result)
    } else {
        table
    }
}

fn describe(a: DescribeArgs) -> Result<String, Failure> {
    let (x, lie_type, job) = setup("describe", &a.target, a.output.json)?;
    let rank = x.root_system().rank();

    let mut radical = Vec::new();
    for beta in x.radical_roots() {
        let mut pairings = Vec::new();
        for &node in x.painted() {
            let mut coords = vec![Rat::zero(); rank];
            coords[node - 1] = Rat::one();
            let p = x
                .curve_pairing(&Weight::new(coords), beta)
                .map_err(|e| core_failure(e, &job))?;
            pairings.push(p.to_string());
        }
        radical.push((beta.clone(), pairings));
    }

    let delta = x.delta_p_coeffs();
    let result = json!({
        "complex_dimension": x.dim_c(),
        "delta_p": int_strings(&delta),
        "fano_index": x.fano_index(),
        "lie_type": lie_type.to_string(),
        "radical_roots": radical
            .iter()
            .map(|(beta, pairings)| json!({
                "pairings": pairings,
                "root": beta.simple_coords(),
            }))
            .collect::<Vec<_>>(),
        "spinc_parities": x.spinc_parities(),
    });

    let mut table = String::new();
    table.push_str(&format!(
        "{lie_type}, painted nodes {}\n",
        paren_list(x.painted())
    ));
    table.push_str(&format!("complex dimension: {}\n", x.dim_c()));
    table.push_str(&format!("anticanonical class delta_P: {}\n", paren_list(&delta)));
    table.push_str(&format!("Fano index: {}\n", x.fano_index()));
    table.push_str(&format!(
        "spin-c parities: {}\n",
        paren_list(&x.spinc_parities())
    ));
    table.push_str("radical roots with pairings against painted nodes:\n");
    for (beta, pairings) in &radical {
        table.push_str(&format!("  {beta}  ({})\n", pairings.join(", ")));
    }

    Ok(emit(&job, result, table))
}

fn spinc_check(a: SpincCheckArgs) -> Result<String, Failure> {
    let (x, _, mut job) = setup("spinc-check", &a.target, a.output.json)?;
    let l = parse_line_bundle(&a.line_bundle, &mut job)?;
    let ok = x.is_spinc(&l).map_err(|e| core_failure(e, &job))?;
    let failing = x
        .spinc_parity_failure(&l)
        .map_err(|e| core_failure(e, &job))?;
    let twist = if ok {
        Some(x.twist_weight(&l).map_err(|e| core_failure(e, &job))?)
    } else {
        None
    };

    let result = json!({
        "failing_node": failing,
        "is_spinc": ok,
        "twist": twist.as_ref().map(|t| int_strings(t.coeffs())),
    });

    let mut table = String::new();
    table.push_str(&format!("spin-c admissible: {}\n", if ok { "yes" } else { "no" }));
    match (&twist, failing) {
        (Some(t), _) => table.push_str(&format!("twist: {}\n", paren_list(t.coeffs()))),
        (None, Some(node)) => table.push_str(&format!("parity fails at node: {node}\n")),
        (None, None) => {}
    }

    Ok(emit(&job, result, table))
}

/// Shared JSON and table rendering for full or summarized spectra.
fn spectrum_payload<V, F>(
    spectrum: &Spectrum<V>,
    value_fn: F,
    cap: usize,
) -> (Value, String)
where
    V: std::fmt::Display,
    F: Fn(&V) -> Value,
{
    let total = spectrum.total().to_string();
    match spectrum.data() {
        SpectrumData::Full(entries) => {
            let json_entries: Vec<Value> = entries
                .iter()
                .map(|(v, m)| json!({ "multiplicity": m.to_string(), "value": value_fn(v) }))
                .collect();
            let result = json!({
                "entries": json_entries,
                "summary": Value::Null,
                "total": total,
                "truncated": false,
            });
            let rows: Vec<Vec<String>> = entries
                .iter()
                .map(|(v, m)| vec![v.to_string(), m.to_string()])
                .collect();
            let mut table = format!("total multiplicity: {total}\n\n");
            table.push_str(&render_table(&["eigenvalue", "multiplicity"], &rows));
            (result, table)
        }
        SpectrumData::Truncated { min, max } => {
            let result = json!({
                "entries": Value::Null,
                "summary": { "max": value_fn(max), "min": value_fn(min) },
                "total": total,
                "truncated": true,
            });
            let table = format!(
                "total multiplicity: {total}\n\
                 truncated: yes (more than {cap} distinct eigenvalues)\n\
                 minimum: {min}\n\
                 maximum: {max}\n"
            );
            (result, table)
        }
    }
}

fn theta_spectrum(a: ThetaSpectrumArgs) -> Result<String, Failure> {
    let (x, lie_type, mut job) = setup("theta-spectrum", &a.target, a.output.json)?;
    let theta_coeffs = args::parse_rat_list(&a.theta, "--theta").map_err(Failure::Usage)?;
    let omega_coeffs = args::parse_rat_list(&a.kahler, "--kahler").map_err(Failure::Usage)?;
    let cap = resolve_cap(a.max_distinct)?;
    job.theta = Some(theta_coeffs.clone());
    job.kahler = Some(omega_coeffs.clone());
    job.kahler_units = Some(a.kahler_units.label());
    job.max_distinct = Some(cap);

    let theta = KahlerClass::new(theta_coeffs, a.kahler_units.is_pi());
    let omega = KahlerClass::new(omega_coeffs, a.kahler_units.is_pi());
    let spectrum = x
        .theta_spectrum_with_cap(&theta, &omega, cap)
        .map_err(|e| core_failure(e, &job))?;

    let (payload, body) = spectrum_payload(&spectrum, imaginary_value, cap);
    let mut result = payload;
    result["omega"] = kahler_value(&omega);
    result["theta"] = json!({
        "coefficients": rat_strings(theta.coeffs()),
        "units": units_tag(theta.pi_units()),
    });

    let mut table = format!(
        "{lie_type}, painted nodes {}\n\
         theta: {} [{} units]\n\
         omega: {} [{} units]\n",
        paren_list(x.painted()),
        paren_list(theta.coeffs()),
        units_tag(theta.pi_units()),
        paren_list(omega.coeffs()),
        units_tag(omega.pi_units()),
    );
    table.push_str(&body);
    Ok(emit(&job, result, table))
}

fn spectrum(a: SpectrumArgs) -> Result<String, Failure> {
    let (x, lie_type, mut job) = setup("spectrum", &a.target, a.output.json)?;
    let l = parse_line_bundle(&a.line_bundle, &mut job)?;
    let cap = resolve_cap(a.max_distinct)?;
    job.max_distinct = Some(cap);
    let omega = resolve_omega(
        &x,
        a.kahler.as_deref(),
        a.kahler_units,
        a.scalar_target.as_deref(),
        &mut job,
    )?;
    let spectrum = x
        .weitzenboeck_spectrum_with_cap(&l, &omega, cap)
        .map_err(|e| core_failure(e, &job))?;

    let (payload, body) = spectrum_payload(&spectrum, pi_value, cap);
    let mut result = payload;
    result["omega"] = kahler_value(&omega);

    let mut table = format!(
        "{lie_type}, painted nodes {}\n\
         line bundle: {}\n\
         omega: {} [{} units]\n",
        paren_list(x.painted()),
        paren_list(l.coeffs()),
        paren_list(omega.coeffs()),
        units_tag(omega.pi_units()),
    );
    table.push_str(&body);
    Ok(emit(&job, result, table))
}

fn min(a: MinArgs) -> Result<String, Failure> {
    let (x, _, mut job) = setup("min", &a.target, a.output.json)?;
    let l = parse_line_bundle(&a.line_bundle, &mut job)?;
    let omega = resolve_omega(
        &x,
        a.kahler.as_deref(),
        a.kahler_units,
        a.scalar_target.as_deref(),
        &mut job,
    )?;
    let value = x
        .weitzenboeck_min(&l, &omega)
        .map_err(|e| core_failure(e, &job))?;

    let result = json!({ "min": pi_value(&value), "omega": kahler_value(&omega) });
    let table = format!("minimum eigenvalue: {value}\n");
    Ok(emit(&job, result, table))
}

fn bound(a: BoundArgs) -> Result<String, Failure> {
    let (x, _, mut job) = setup("bound", &a.target, a.output.json)?;
    let l = parse_line_bundle(&a.line_bundle, &mut job)?;
    let omega = resolve_omega(
        &x,
        a.kahler.as_deref(),
        a.kahler_units,
        a.scalar_target.as_deref(),
        &mut job,
    )?;
    let value = x
        .dirac_lower_bound(&l, &omega)
        .map_err(|e| core_failure(e, &job))?;
    let vacuous = value.is_negative();

    let result = json!({
        "bound": pi_value(&value),
        "omega": kahler_value(&omega),
        "vacuous": vacuous,
    });
    let table = format!(
        "eigenvalue-square lower bound: {value}\nvacuous: {}\n",
        if vacuous { "yes" } else { "no" }
    );
    Ok(emit(&job, result, table))
}

fn harmonic_fields(outcome: &HarmonicOutcome) -> (&'static str, Value, String, String) {
    match outcome {
        HarmonicOutcome::NoHarmonicSpinors => {
            ("none", Value::Null, "0".to_string(), "0".to_string())
        }
        HarmonicOutcome::Harmonic {
            kernel_dimension,
            concentration_degree,
            index,
        } => (
            "harmonic",
            json!(concentration_degree),
            kernel_dimension.to_string(),
            index.to_string(),
        ),
    }
}

fn harmonic(a: HarmonicArgs) -> Result<String, Failure> {
    let (x, _, mut job) = setup("harmonic", &a.target, a.output.json)?;
    let l = parse_line_bundle(&a.line_bundle, &mut job)?;
    let report = x.harmonic_spinors(&l).map_err(|e| core_failure(e, &job))?;
    let (outcome, degree, kernel, index) = harmonic_fields(&report.outcome);

    let result = json!({
        "outcome": {
            "degree": degree,
            "index": index,
            "kernel_dimension": kernel,
            "kind": outcome,
        },
        "spinc_ok": report.spinc_ok,
        "twist": int_strings(report.twist.coeffs()),
    });

    let mut table = format!("twist: {}\n", paren_list(report.twist.coeffs()));
    match &report.outcome {
        HarmonicOutcome::NoHarmonicSpinors => table.push_str("harmonic spinors: none\n"),
        HarmonicOutcome::Harmonic {
            kernel_dimension,
            concentration_degree,
            index,
        } => {
            table.push_str("harmonic spinors: yes\n");
            table.push_str(&format!("kernel dimension: {kernel_dimension}\n"));
            table.push_str(&format!("concentration degree: {concentration_degree}\n"));
            table.push_str(&format!("index: {index}\n"));
        }
    }
    Ok(emit(&job, result, table))
}

fn scan(a: ScanArgs) -> Result<String, Failure> {
    let (x, lie_type, mut job) = setup("scan", &a.target, a.output.json)?;
    let (lo, hi) = args::parse_q_range(&a.q_range).map_err(Failure::Usage)?;
    job.q_range = Some((lo, hi));
    let target_text = a.scalar_target.unwrap_or_else(|| "auto-ke".to_string());
    job.scalar_target = Some(target_text.clone());
    let omega = ke_from_target(&x, &target_text, &job)?;

    let p = x.fano_index() as i64;
    let delta = x.delta_p_coeffs();
    let mut rows_json = Vec::new();
    let mut rows_table = Vec::new();
    for q in lo..=hi {
        if (p + q) % 2 != 0 {
            continue;
        }
        let coeffs: Vec<Int> = delta
            .iter()
            .map(|d| d * Int::from(-q) / Int::from(p))
            .collect();
        let l = LineBundleClass::new(coeffs.clone());
        let spinc = x.is_spinc(&l).map_err(|e| core_failure(e, &job))?;
        let bound = x
            .dirac_lower_bound(&l, &omega)
            .map_err(|e| core_failure(e, &job))?;
        let vacuous = bound.is_negative();
        let report = x.harmonic_spinors(&l).map_err(|e| core_failure(e, &job))?;
        let (outcome, degree, kernel, index) = harmonic_fields(&report.outcome);

        rows_json.push(json!({
            "bound": pi_value(&bound),
            "charge": q,
            "degree": degree,
            "index": index,
            "kernel_dimension": kernel,
            "line_bundle": int_strings(&coeffs),
            "outcome": outcome,
            "spinc": spinc,
            "vacuous": vacuous,
        }));
        let degree_cell = match &report.outcome {
            HarmonicOutcome::NoHarmonicSpinors => "-".to_string(),
            HarmonicOutcome::Harmonic {
                concentration_degree,
                ..
            } => concentration_degree.to_string(),
        };
        rows_table.push(vec![
            q.to_string(),
            if spinc { "yes" } else { "no" }.to_string(),
            bound.to_string(),
            if vacuous { "yes" } else { "no" }.to_string(),
            outcome.to_string(),
            degree_cell,
            kernel,
            index,
        ]);
    }

    let result = json!({
        "fano_index": x.fano_index(),
        "omega": kahler_value(&omega),
        "rows": rows_json,
    });

    let mut table = format!(
        "{lie_type}, painted nodes {}\n\
         Fano index: {}\n\
         omega: {} [{} units]\n\n",
        paren_list(x.painted()),
        x.fano_index(),
        paren_list(omega.coeffs()),
        units_tag(omega.pi_units()),
    );
    table.push_str(&render_table(
        &["q", "spin-c", "bound", "vacuous", "outcome", "degree", "kernel", "index"],
        &rows_table,
    ));
    Ok(emit(&job, result, table))
}
