//! Command-line surface. Every successful invocation prints exactly one
//! JSON envelope to stdout; diagnostics go to stderr with exit status 2 for
//! usage and domain errors, 1 for I/O failures. Floats are always printed
//! with 17 significant digits so identical invocations are byte-identical.

use crate::bounds::{self, BoundConstants};
use crate::classify::{classify, Certificate, PolyKind};
use crate::error::{Error, Result};
use crate::geodesic;
use crate::measure::{jensen_measure, mahler_measure, MeasureResult};
use crate::poly::IntPolynomial;
use crate::search::{self, SearchSpec};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::value::RawValue;
use std::ffi::OsString;
use std::path::PathBuf;

/// 17-significant-digit JSON number token.
fn jreal(x: f64) -> Box<RawValue> {
    RawValue::from_string(format!("{x:.16e}")).expect("valid JSON number")
}

fn jreal_opt(x: Option<f64>) -> Option<Box<RawValue>> {
    x.map(jreal)
}

#[derive(Parser)]
#[command(
    name = "mahler",
    version,
    about = "Mahler measures, Salem/Pisot classification, geodesic lengths, and systole-volume bounds for integer polynomials",
    long_about = None
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Mahler measure of a polynomial (wire format: constant term first)
    Measure(MeasureArgs),
    /// Classify as cyclotomic product, Salem, Pisot, or other
    Classify(ClassifyArgs),
    /// Hyperbolic translation length from trace data
    Geodesic(GeodesicArgs),
    /// Evaluate one of the inequality-chain bounds
    Bound(BoundArgs),
    /// Exhaustive minimum-measure search over a bounded family
    Search(SearchArgs),
    /// Tabulate arithmetic vs non-arithmetic systole regimes as CSV
    CompareGrowth(CompareGrowthArgs),
}

#[derive(Args)]
struct MeasureArgs {
    /// Polynomial, comma-separated coefficients, constant first
    #[arg(allow_hyphen_values = true)]
    poly: String,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = Method::Roots)]
    method: Method,
    /// Sample count for the Jensen quadrature methods
    #[arg(long, default_value_t = 65536)]
    jensen_samples: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Roots,
    Jensen,
    Both,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Roots => "roots",
            Method::Jensen => "jensen",
            Method::Both => "both",
        }
    }
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(allow_hyphen_values = true)]
    poly: String,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GeodesicInput {
    /// Minimal polynomial of the trace (lifted to the u-polynomial)
    #[arg(long, allow_hyphen_values = true)]
    trace_poly: Option<String>,
    /// Polynomial of u directly
    #[arg(long, allow_hyphen_values = true)]
    u_poly: Option<String>,
}

#[derive(Args)]
struct GeodesicArgs {
    #[command(flatten)]
    input: GeodesicInput,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
}

#[derive(Args, Clone, Copy)]
struct ConstantFlags {
    /// Dobrowolski constant C1
    #[arg(long, default_value_t = 0.25)]
    c1: f64,
    /// Volume inequality slope C2
    #[arg(long, default_value_t = 1.0)]
    c2: f64,
    /// Volume inequality offset C3
    #[arg(long, default_value_t = 0.0)]
    c3: f64,
    /// Aggregate exponent C in Vol^C
    #[arg(long, default_value_t = 1.0)]
    c_agg: f64,
    /// Theorem constant C_n
    #[arg(long = "cn", default_value_t = 1.0)]
    c_n: f64,
    /// Manifold dimension n
    #[arg(long, default_value_t = 3)]
    dim_n: u32,
}

impl ConstantFlags {
    fn build(&self) -> Result<BoundConstants> {
        BoundConstants::new(self.c1, self.c2, self.c3, self.c_agg, self.c_n, self.dim_n)
    }
}

#[derive(Args)]
struct BoundArgs {
    #[command(subcommand)]
    which: BoundCommand,
}

#[derive(Subcommand)]
enum BoundCommand {
    /// Lower bound on log M(P) from the polynomial degree
    Dobrowolski {
        /// Polynomial degree
        #[arg(long)]
        d: u32,
        #[command(flatten)]
        constants: ConstantFlags,
    },
    /// Upper bound on the field degree from the volume
    DegreeVolume {
        #[arg(long)]
        vol: f64,
        #[command(flatten)]
        constants: ConstantFlags,
    },
    /// Triple-log systole lower bound from the volume
    SystoleVolume {
        #[arg(long)]
        vol: f64,
        #[command(flatten)]
        constants: ConstantFlags,
    },
    /// Volume lower bound from the systole in dimension n
    Theorem1b {
        #[arg(long)]
        systole: f64,
        #[command(flatten)]
        constants: ConstantFlags,
    },
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, required_unless_present = "resume")]
    degree: Option<usize>,
    #[arg(long, required_unless_present = "resume")]
    coeff_bound: Option<i64>,
    #[arg(long)]
    reciprocal_only: bool,
    #[arg(long, default_value_t = 1)]
    shards: usize,
    #[arg(long)]
    tol: Option<f64>,
    /// Write a checkpoint file (at completion, or at --max-scan interruption)
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Resume from a checkpoint written by a single-shard run
    #[arg(long)]
    resume: Option<PathBuf>,
    /// Stop after measuring/skipping this many candidates (needs --checkpoint)
    #[arg(long)]
    max_scan: Option<u64>,
}

#[derive(Args)]
struct CompareGrowthArgs {
    #[arg(long)]
    vol_min: f64,
    #[arg(long)]
    vol_max: f64,
    #[arg(long)]
    steps: usize,
    #[command(flatten)]
    constants: ConstantFlags,
    /// CSV output path
    #[arg(long)]
    out: PathBuf,
}

#[derive(Serialize)]
struct Envelope<I: Serialize, R: Serialize> {
    command: &'static str,
    inputs: I,
    result: R,
    warnings: Vec<String>,
}

fn emit<I: Serialize, R: Serialize>(env: &Envelope<I, R>) -> Result<String> {
    serde_json::to_string(env).map_err(|e| Error::Domain(format!("serialization failed: {e}")))
}

/// Entry point used by the binary; returns the process exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(json) => {
            println!("{json}");
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Io(_) => 1,
                _ => 2,
            }
        }
    }
}

fn dispatch(cli: Cli) -> Result<String> {
    match cli.command {
        Command::Measure(a) => cmd_measure(a),
        Command::Classify(a) => cmd_classify(a),
        Command::Geodesic(a) => cmd_geodesic(a),
        Command::Bound(a) => cmd_bound(a),
        Command::Search(a) => cmd_search(a),
        Command::CompareGrowth(a) => cmd_compare_growth(a),
    }
}

#[derive(Serialize)]
struct MeasureInputs {
    polynomial: String,
    tol: Box<RawValue>,
    method: &'static str,
    jensen_samples: usize,
}

#[derive(Serialize)]
struct MeasurePayload {
    value: Box<RawValue>,
    error_radius: Box<RawValue>,
    method: &'static str,
    log_mahler: Box<RawValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    jensen_value: Option<Box<RawValue>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    jensen_error_radius: Option<Box<RawValue>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agreement_delta: Option<Box<RawValue>>,
}

fn cmd_measure(a: MeasureArgs) -> Result<String> {
    let p = IntPolynomial::parse(&a.poly)?;
    let mut warnings = Vec::new();
    if p.is_zero() {
        return Err(Error::Domain("the zero polynomial has no measure".into()));
    }
    if p.is_monic() && crate::cyclotomic::is_cyclotomic_product(&p)? {
        warnings.push("cyclotomic product: the measure is exactly 1".into());
    }
    if !p.is_monic() {
        warnings
            .push("non-monic input: the leading coefficient multiplies the root product".into());
    }

    let roots_result: Option<MeasureResult> = match a.method {
        Method::Roots | Method::Both => Some(mahler_measure(&p, a.tol)?),
        Method::Jensen => None,
    };
    let jensen_result: Option<MeasureResult> = match a.method {
        Method::Jensen | Method::Both => Some(jensen_measure(&p, a.jensen_samples)?),
        Method::Roots => None,
    };

    let primary = roots_result.as_ref().or(jensen_result.as_ref()).unwrap();
    let agreement = match (&roots_result, &jensen_result) {
        (Some(r), Some(j)) => Some((r.value - j.value).abs()),
        _ => None,
    };
    let payload = MeasurePayload {
        value: jreal(primary.value),
        error_radius: jreal(primary.error_radius),
        method: a.method.name(),
        log_mahler: jreal(primary.value.ln()),
        jensen_value: match (&roots_result, &jensen_result) {
            (Some(_), Some(j)) => Some(jreal(j.value)),
            _ => None,
        },
        jensen_error_radius: match (&roots_result, &jensen_result) {
            (Some(_), Some(j)) => Some(jreal(j.error_radius)),
            _ => None,
        },
        agreement_delta: jreal_opt(agreement),
    };
    emit(&Envelope {
        command: "measure",
        inputs: MeasureInputs {
            polynomial: p.to_wire(),
            tol: jreal(a.tol),
            method: a.method.name(),
            jensen_samples: a.jensen_samples,
        },
        result: payload,
        warnings,
    })
}

#[derive(Serialize)]
struct ClassifyInputs {
    polynomial: String,
}

#[derive(Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
enum CertificatePayload {
    CyclotomicProduct {
        removed_degree: usize,
    },
    Salem {
        removed_cyclotomic_degree: usize,
        residual_degree: usize,
        half_degree: usize,
        trace_polynomial: String,
        roots_above_two: usize,
        roots_in_band: usize,
        irreducibility_checked: bool,
    },
    Pisot {
        removed_cyclotomic_degree: usize,
        residual_degree: usize,
        margin: Option<Box<RawValue>>,
        uncertain: bool,
        irreducibility_checked: bool,
    },
    Other {
        note: String,
    },
}

#[derive(Serialize)]
struct ClassifyPayload {
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    dominant_root: Option<Box<RawValue>>,
    certificate: CertificatePayload,
}

fn cmd_classify(a: ClassifyArgs) -> Result<String> {
    let p = IntPolynomial::parse(&a.poly)?;
    let class = classify(&p)?;
    let mut warnings = Vec::new();
    let kind = match class.kind {
        PolyKind::CyclotomicProduct => "cyclotomic-product",
        PolyKind::Salem => "salem",
        PolyKind::Pisot => "pisot",
        PolyKind::Other => "other",
    };
    let certificate = match class.certificate {
        Certificate::Cyclotomic { removed_degree } => {
            CertificatePayload::CyclotomicProduct { removed_degree }
        }
        Certificate::Salem(c) => {
            warnings.push("irreducibility not verified".into());
            CertificatePayload::Salem {
                removed_cyclotomic_degree: c.removed_cyclotomic_degree,
                residual_degree: c.residual_degree,
                half_degree: c.half_degree,
                trace_polynomial: c.trace_polynomial.map(|q| q.to_wire()).unwrap_or_default(),
                roots_above_two: c.roots_above_two,
                roots_in_band: c.roots_in_band,
                irreducibility_checked: c.irreducibility_checked,
            }
        }
        Certificate::Pisot(c) => {
            warnings.push("irreducibility not verified".into());
            CertificatePayload::Pisot {
                removed_cyclotomic_degree: c.removed_cyclotomic_degree,
                residual_degree: c.residual_degree,
                margin: jreal_opt(c.margin),
                uncertain: c.uncertain,
                irreducibility_checked: c.irreducibility_checked,
            }
        }
        Certificate::Other { note } => CertificatePayload::Other { note },
    };
    emit(&Envelope {
        command: "classify",
        inputs: ClassifyInputs {
            polynomial: p.to_wire(),
        },
        result: ClassifyPayload {
            kind,
            dominant_root: jreal_opt(class.dominant_root),
            certificate,
        },
        warnings,
    })
}

#[derive(Serialize)]
struct GeodesicInputs {
    #[serde(skip_serializing_if = "Option::is_none")]
    trace_polynomial: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    u_polynomial: Option<String>,
    tol: Box<RawValue>,
}

#[derive(Serialize)]
struct GeodesicPayload {
    u_polynomial: String,
    measure_value: Box<RawValue>,
    measure_error_radius: Box<RawValue>,
    length_dim2: Box<RawValue>,
    length_dim3: Box<RawValue>,
}

fn cmd_geodesic(a: GeodesicArgs) -> Result<String> {
    let (result, inputs) = match (&a.input.trace_poly, &a.input.u_poly) {
        (Some(text), None) => {
            let q = IntPolynomial::parse(text)?;
            (
                geodesic::displacement_from_trace(&q, a.tol)?,
                GeodesicInputs {
                    trace_polynomial: Some(q.to_wire()),
                    u_polynomial: None,
                    tol: jreal(a.tol),
                },
            )
        }
        (None, Some(text)) => {
            let p = IntPolynomial::parse(text)?;
            (
                geodesic::displacement_from_u_polynomial(&p, a.tol)?,
                GeodesicInputs {
                    trace_polynomial: None,
                    u_polynomial: Some(p.to_wire()),
                    tol: jreal(a.tol),
                },
            )
        }
        _ => unreachable!("clap group enforces exactly one input"),
    };
    emit(&Envelope {
        command: "geodesic",
        inputs,
        result: GeodesicPayload {
            u_polynomial: result.u_polynomial.to_wire(),
            measure_value: jreal(result.measure.value),
            measure_error_radius: jreal(result.measure.error_radius),
            length_dim2: jreal(result.length_dim2),
            length_dim3: jreal(result.length_dim3),
        },
        warnings: Vec::new(),
    })
}

#[derive(Serialize)]
struct ConstantsEcho {
    c1: Box<RawValue>,
    c2: Box<RawValue>,
    c3: Box<RawValue>,
    c_agg: Box<RawValue>,
    c_n: Box<RawValue>,
    dim_n: u32,
}

impl ConstantsEcho {
    fn from(k: &BoundConstants) -> Self {
        ConstantsEcho {
            c1: jreal(k.c1),
            c2: jreal(k.c2),
            c3: jreal(k.c3),
            c_agg: jreal(k.c_agg),
            c_n: jreal(k.c_n),
            dim_n: k.dim_n,
        }
    }
}

#[derive(Serialize)]
struct BoundInputs {
    #[serde(skip_serializing_if = "Option::is_none")]
    d: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    vol: Option<Box<RawValue>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    systole: Option<Box<RawValue>>,
    constants: ConstantsEcho,
}

#[derive(Serialize)]
struct BoundPayload {
    bound: &'static str,
    value: Box<RawValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    form: Option<&'static str>,
}

fn cmd_bound(a: BoundArgs) -> Result<String> {
    let mut warnings = Vec::new();
    let (name, value, form, inputs) = match a.which {
        BoundCommand::Dobrowolski { d, constants } => {
            let k = constants.build()?;
            let value = bounds::dobrowolski_lower_bound(d, &k)?;
            if value <= 0.0 {
                warnings.push("vacuous bound: the formula is non-positive at this degree".into());
            }
            (
                "dobrowolski",
                value,
                None,
                BoundInputs {
                    d: Some(d),
                    vol: None,
                    systole: None,
                    constants: ConstantsEcho::from(&k),
                },
            )
        }
        BoundCommand::DegreeVolume { vol, constants } => {
            let k = constants.build()?;
            (
                "degree-volume",
                bounds::degree_volume_upper_bound(vol, &k)?,
                None,
                BoundInputs {
                    d: None,
                    vol: Some(jreal(vol)),
                    systole: None,
                    constants: ConstantsEcho::from(&k),
                },
            )
        }
        BoundCommand::SystoleVolume { vol, constants } => {
            let k = constants.build()?;
            let form = bounds::systole_bound_form(&k);
            let value = if form == "affine" {
                bounds::systole_volume_lower_bound_affine(vol, &k)?
            } else {
                bounds::systole_volume_lower_bound(vol, &k)?
            };
            (
                "systole-volume",
                value,
                Some(form),
                BoundInputs {
                    d: None,
                    vol: Some(jreal(vol)),
                    systole: None,
                    constants: ConstantsEcho::from(&k),
                },
            )
        }
        BoundCommand::Theorem1b { systole, constants } => {
            let k = constants.build()?;
            (
                "theorem1b",
                bounds::theorem1b_volume_lower_bound(systole, &k)?,
                None,
                BoundInputs {
                    d: None,
                    vol: None,
                    systole: Some(jreal(systole)),
                    constants: ConstantsEcho::from(&k),
                },
            )
        }
    };
    emit(&Envelope {
        command: "bound",
        inputs,
        result: BoundPayload {
            bound: name,
            value: jreal(value),
            form,
        },
        warnings,
    })
}

// Session mechanics (checkpoint/resume paths, scan limits) are not part of
// the echoed inputs: a resumed search must produce an envelope byte-equal
// to an uninterrupted one.
#[derive(Serialize)]
struct SearchInputs {
    degree: usize,
    coeff_bound: i64,
    reciprocal_only: bool,
    tol: Box<RawValue>,
    shards: usize,
}

#[derive(Serialize)]
struct SearchPayload {
    complete: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    best_polynomial: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    measure_value: Option<Box<RawValue>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    measure_error_radius: Option<Box<RawValue>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    log_mahler: Option<Box<RawValue>>,
    scanned: u64,
    skipped_cyclotomic: u64,
    skipped_pruned: u64,
    family_size: u64,
}

fn cmd_search(a: SearchArgs) -> Result<String> {
    // Resolve the spec: either from flags or from a checkpoint being resumed.
    let mut state = if let Some(path) = &a.resume {
        let state = search::checkpoint_resume(path)?;
        if state.spec.shard_count != 1 {
            return Err(Error::Checkpoint(
                "only single-shard checkpoints can be resumed from the command line".into(),
            ));
        }
        if let Some(d) = a.degree {
            if d != state.spec.degree {
                return Err(Error::Checkpoint(
                    "requested degree does not match the checkpoint".into(),
                ));
            }
        }
        if let Some(b) = a.coeff_bound {
            if b != state.spec.coeff_bound {
                return Err(Error::Checkpoint(
                    "requested coefficient bound does not match the checkpoint".into(),
                ));
            }
        }
        if a.reciprocal_only && !state.spec.reciprocal_only {
            return Err(Error::Checkpoint(
                "requested reciprocal-only does not match the checkpoint".into(),
            ));
        }
        if let Some(t) = a.tol {
            if t != state.spec.tol {
                return Err(Error::Checkpoint(
                    "requested tolerance does not match the checkpoint".into(),
                ));
            }
        }
        state
    } else {
        let spec = SearchSpec::new(
            a.degree.expect("clap requires degree"),
            a.coeff_bound.expect("clap requires coeff-bound"),
            a.reciprocal_only,
            a.tol.unwrap_or(1e-9),
        )?;
        search::SearchState::fresh(spec)
    };

    let spec = state.spec.clone();
    let inputs = SearchInputs {
        degree: spec.degree,
        coeff_bound: spec.coeff_bound,
        reciprocal_only: spec.reciprocal_only,
        tol: jreal(spec.tol),
        shards: a.shards,
    };

    if a.max_scan.is_some() && a.shards > 1 {
        return Err(Error::Domain(
            "--max-scan applies to single-shard runs only".into(),
        ));
    }
    if a.max_scan.is_some() && a.checkpoint.is_none() {
        return Err(Error::Domain(
            "--max-scan needs --checkpoint to persist the interrupted state".into(),
        ));
    }

    let family_size = spec.family_size();
    if a.shards > 1 {
        if a.resume.is_some() {
            return Err(Error::Domain(
                "resuming applies to single-shard runs only".into(),
            ));
        }
        let record = search::search_sharded(&spec, a.shards)?;
        if let Some(path) = &a.checkpoint {
            // merged quiescent checkpoint: a completed single-shard view
            let last = search::enumerate(&spec).last().map(|p| tuple_of(&p));
            let merged = search::SearchState {
                spec: spec.clone(),
                cursor: last,
                best: Some(search::BestEntry {
                    polynomial: record.best_polynomial.clone(),
                    tuple: tuple_of(&record.best_polynomial),
                    measure: record.best_measure.clone(),
                }),
                scanned: record.scanned,
                skipped_cyclotomic: record.skipped_cyclotomic,
                skipped_pruned: record.skipped_pruned,
                elapsed: record.elapsed,
            };
            search::checkpoint_save(&merged, path)?;
        }
        return emit(&Envelope {
            command: "search",
            inputs,
            result: payload_from_record(&record, family_size),
            warnings: Vec::new(),
        });
    }

    let complete = search::run_search(&mut state, a.max_scan)?;
    if let Some(path) = &a.checkpoint {
        search::checkpoint_save(&state, path)?;
    }
    if complete {
        let record = search::finalize(state)?;
        emit(&Envelope {
            command: "search",
            inputs,
            result: payload_from_record(&record, family_size),
            warnings: Vec::new(),
        })
    } else {
        let payload = SearchPayload {
            complete: false,
            best_polynomial: state.best.as_ref().map(|b| b.polynomial.to_wire()),
            measure_value: state.best.as_ref().map(|b| jreal(b.measure.value)),
            measure_error_radius: state.best.as_ref().map(|b| jreal(b.measure.error_radius)),
            log_mahler: state.best.as_ref().map(|b| jreal(b.measure.value.ln())),
            scanned: state.scanned,
            skipped_cyclotomic: state.skipped_cyclotomic,
            skipped_pruned: state.skipped_pruned,
            family_size,
        };
        emit(&Envelope {
            command: "search",
            inputs,
            result: payload,
            warnings: vec!["search interrupted by --max-scan; resume from the checkpoint".into()],
        })
    }
}

fn tuple_of(p: &IntPolynomial) -> Vec<i64> {
    use num_traits::ToPrimitive;
    p.coeffs()
        .iter()
        .map(|c| c.to_i64().expect("search coefficients fit i64"))
        .collect()
}

fn payload_from_record(record: &search::SearchRecord, family_size: u64) -> SearchPayload {
    SearchPayload {
        complete: true,
        best_polynomial: Some(record.best_polynomial.to_wire()),
        measure_value: Some(jreal(record.best_measure.value)),
        measure_error_radius: Some(jreal(record.best_measure.error_radius)),
        log_mahler: Some(jreal(record.best_measure.value.ln())),
        scanned: record.scanned,
        skipped_cyclotomic: record.skipped_cyclotomic,
        skipped_pruned: record.skipped_pruned,
        family_size,
    }
}

#[derive(Serialize)]
struct GrowthInputs {
    vol_min: Box<RawValue>,
    vol_max: Box<RawValue>,
    steps: usize,
    out: String,
    constants: ConstantsEcho,
}

#[derive(Serialize)]
struct GrowthPayload {
    rows_written: usize,
    out: String,
    form: &'static str,
}

fn cmd_compare_growth(a: CompareGrowthArgs) -> Result<String> {
    let k = a.constants.build()?;
    let rows = bounds::growth_table(a.vol_min, a.vol_max, a.steps, &k)?;
    let csv = bounds::growth_table_csv(&rows);
    std::fs::write(&a.out, csv)?;
    let out = a.out.display().to_string();
    emit(&Envelope {
        command: "compare-growth",
        inputs: GrowthInputs {
            vol_min: jreal(a.vol_min),
            vol_max: jreal(a.vol_max),
            steps: a.steps,
            out: out.clone(),
            constants: ConstantsEcho::from(&k),
        },
        result: GrowthPayload {
            rows_written: rows.len(),
            out,
            form: bounds::systole_bound_form(&k),
        },
        warnings: Vec::new(),
    })
}
