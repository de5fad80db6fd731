//! Command-line front end: `center`, `verify-all`, `blocks`, `hh`, `export`.
//!
//! Exit codes: 0 all pass, 1 verification failure, 2 usage error.

use crate::cyc::CycNum;
use crate::error::EngineError;
use crate::hopf::algebra::AlgElem;
use crate::hopf::invariants::map_subspace;
use crate::hopf::{self, json as hjson};
use crate::linalg::Subspace;
use crate::report::VerificationReport;
use crate::uqsl2::{divided, kerler, ostrik, Analysis};
use crate::weyl;
use clap::{Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "smallq",
    about = "Exact computations with small quantum groups at odd roots of unity",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
pub enum Command {
    /// Compute the center of u_q(sl2): dimension, block idempotents and the
    /// nilpotent generator presentation.
    Center {
        #[arg(long)]
        l: u64,
        #[arg(long, value_enum, default_value = "text")]
        output: OutputFormat,
        /// Work over Q(ζ_4l) so that √l is available.
        #[arg(long = "ext-field")]
        ext_field: bool,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        #[arg(long = "no-timestamp")]
        no_timestamp: bool,
    },
    /// Run the full verification suite for one l.
    VerifyAll {
        #[arg(long)]
        l: u64,
        #[arg(long, value_enum, default_value = "text")]
        output: OutputFormat,
        #[arg(long = "ext-field")]
        ext_field: bool,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        #[arg(long = "no-timestamp")]
        no_timestamp: bool,
    },
    /// Affine Weyl orbit counts for sl_n over a range of l.
    Blocks {
        #[arg(long)]
        n: usize,
        /// Comma list and/or inclusive ranges: "5,7" or "3..9".
        #[arg(long)]
        l: String,
        #[arg(long, value_enum, default_value = "csv")]
        output: OutputFormat,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Graded cohomology table of the principal block and the derived-center
    /// dimension vector.
    Hh {
        #[arg(long)]
        l: u64,
        #[arg(long, default_value = "8")]
        smax: i64,
        #[arg(long)]
        kmax: Option<i64>,
        #[arg(long, value_enum, default_value = "text")]
        output: OutputFormat,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Export the structure tensors, the center presentation and the
    /// divided-power operators as JSON files.
    Export {
        #[arg(long)]
        l: u64,
        #[arg(long = "ext-field")]
        ext_field: bool,
        /// Output directory.
        #[arg(long, default_value = ".")]
        out: std::path::PathBuf,
    },
}

fn validate_l(l: u64) -> Result<(), String> {
    if l < 3 {
        return Err("l must be at least 3".into());
    }
    if l % 2 == 0 {
        return Err("l must be odd".into());
    }
    Ok(())
}

fn write_or_print(path: &Option<std::path::PathBuf>, content: &str) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, content),
        None => {
            std::io::stdout().write_all(content.as_bytes())?;
            Ok(())
        }
    }
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return 2;
        }
    };
    match dispatch(cli) {
        Ok(pass) => {
            if pass {
                0
            } else {
                1
            }
        }
        Err(CommandError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CommandError::Engine(e)) => {
            eprintln!("engine error: {e}");
            1
        }
        Err(CommandError::Io(e)) => {
            eprintln!("io error: {e}");
            1
        }
    }
}

pub enum CommandError {
    Usage(String),
    Engine(EngineError),
    Io(std::io::Error),
}

impl From<EngineError> for CommandError {
    fn from(e: EngineError) -> Self {
        CommandError::Engine(e)
    }
}

impl From<std::io::Error> for CommandError {
    fn from(e: std::io::Error) -> Self {
        CommandError::Io(e)
    }
}

fn dispatch(cli: Cli) -> Result<bool, CommandError> {
    match cli.command {
        Command::Center {
            l,
            output,
            ext_field,
            out,
            no_timestamp,
        } => {
            validate_l(l).map_err(CommandError::Usage)?;
            let report = cmd_center(l, ext_field, !no_timestamp)?;
            let rendered = render(&report.0, output, Some(&report.1));
            write_or_print(&out, &rendered)?;
            Ok(report.0.passed())
        }
        Command::VerifyAll {
            l,
            output,
            ext_field,
            out,
            no_timestamp,
        } => {
            validate_l(l).map_err(CommandError::Usage)?;
            let report = verify_all(l, ext_field, !no_timestamp)?;
            let rendered = render(&report, output, None);
            write_or_print(&out, &rendered)?;
            Ok(report.passed())
        }
        Command::Blocks { n, l, output, out } => {
            if n < 2 || n > 8 {
                return Err(CommandError::Usage("n must be between 2 and 8".into()));
            }
            let ls = parse_l_spec(&l).map_err(CommandError::Usage)?;
            let text = cmd_blocks(n, &ls, output)?;
            write_or_print(&out, &text)?;
            Ok(true)
        }
        Command::Hh {
            l,
            smax,
            kmax,
            output,
            out,
        } => {
            validate_l(l).map_err(CommandError::Usage)?;
            if smax < 0 {
                return Err(CommandError::Usage("smax must be >= 0".into()));
            }
            let kmax = kmax.unwrap_or((2 * smax).max(16));
            if kmax < smax {
                return Err(CommandError::Usage("kmax must be >= smax".into()));
            }
            let text = cmd_hh(l, smax, kmax, output)?;
            write_or_print(&out, &text)?;
            Ok(true)
        }
        Command::Export { l, ext_field, out } => {
            validate_l(l).map_err(CommandError::Usage)?;
            cmd_export(l, ext_field, &out)?;
            Ok(true)
        }
    }
}

fn render(
    report: &VerificationReport,
    output: OutputFormat,
    extra_json: Option<&serde_json::Value>,
) -> String {
    match output {
        OutputFormat::Text => report.to_text(),
        OutputFormat::Csv => report.to_csv(),
        OutputFormat::Json => match extra_json {
            Some(v) => {
                let mut base: serde_json::Value =
                    serde_json::from_str(&report.to_json()).expect("report JSON");
                base.as_object_mut()
                    .unwrap()
                    .insert("data".to_string(), v.clone());
                serde_json::to_string_pretty(&base).unwrap()
            }
            None => report.to_json(),
        },
    }
}

pub fn parse_l_spec(spec: &str) -> Result<Vec<u64>, String> {
    let mut out = Vec::new();
    for part in spec.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        if let Some((a, b)) = part.split_once("..") {
            let a: u64 = a.trim().parse().map_err(|_| format!("bad range start {a}"))?;
            let b: u64 = b.trim().parse().map_err(|_| format!("bad range end {b}"))?;
            if a > b {
                return Err(format!("empty range {part}"));
            }
            out.extend(a..=b);
        } else {
            out.push(part.parse().map_err(|_| format!("bad value {part}"))?);
        }
    }
    if out.is_empty() {
        return Err("no l values given".into());
    }
    Ok(out)
}

/// The `center` command: dimension, blocks, the nilpotent presentation and a
/// JSON payload with the basis elements.
pub fn cmd_center(
    l: u64,
    ext_field: bool,
    with_timestamp: bool,
) -> Result<(VerificationReport, serde_json::Value), CommandError> {
    let mut report = VerificationReport::new("center", &format!("l={l}"), with_timestamp);
    let an = Analysis::new(l, ext_field)?;
    let t0 = Instant::now();
    let expected_dim = ((3 * l - 1) / 2) as usize;
    report.record(
        "center-dimension",
        "center-dimension",
        an.center.dim() == expected_dim,
        an.center.dim(),
        expected_dim,
        t0,
    );
    let t0 = Instant::now();
    let kb = kerler::kerler_generators(&an)?;
    report.record(
        "kerler-relations",
        "center-presentation",
        true,
        "all relations hold",
        "x²=xy=y²=0, orthogonal idempotents",
        t0,
    );
    let t0 = Instant::now();
    let regular = an.blocks.classes.iter().filter(|c| c.len() == 2).count();
    let steinberg = an.blocks.classes.iter().filter(|c| c.len() == 1).count();
    report.record(
        "block-counts",
        "block-count",
        regular == ((l - 1) / 2) as usize && steinberg == 1,
        format!("{regular} regular, {steinberg} steinberg"),
        format!("{} regular, 1 steinberg", (l - 1) / 2),
        t0,
    );
    let h = &an.q.h;
    let mut named = serde_json::Map::new();
    for (i, e) in kb.e.iter().enumerate() {
        named.insert(format!("e_{}", i + 1), hjson::algelem_to_json(e));
    }
    for (i, x) in kb.x.iter().enumerate() {
        named.insert(format!("x_{}", i + 1), hjson::algelem_to_json(x));
    }
    for (i, y) in kb.y.iter().enumerate() {
        named.insert(format!("y_{}", i + 1), hjson::algelem_to_json(y));
    }
    named.insert("e_st".to_string(), hjson::algelem_to_json(&kb.e_st));
    let data = serde_json::json!({
        "l": l,
        "dimension": an.center.dim(),
        "center_basis": hjson::subspace_to_json(h, &an.center),
        "kerler": named,
        "lambda_notes": kb.lambda_label_notes,
    });
    Ok((report, data))
}

/// The `blocks` command: one row per (n, l) cell.
pub fn cmd_blocks(
    n: usize,
    ls: &[u64],
    output: OutputFormat,
) -> Result<String, CommandError> {
    let rd = weyl::RootData::sl(n)?;
    #[derive(serde::Serialize)]
    struct Row {
        n: usize,
        l: u64,
        status: String,
        reason: String,
        total_orbits: usize,
        regular: usize,
        singular: usize,
        steinberg: usize,
        alcove_root_points: usize,
        catalan_total: String,
        catalan_regular: String,
        total_matches: bool,
        regular_matches: bool,
        hc_dimension: usize,
    }
    let mut rows = Vec::new();
    for &l in ls {
        match weyl::orbit_count(&rd, l) {
            Ok(rep) => {
                let alcove = weyl::alcove_root_points(&rd, l)?;
                let cat = weyl::rational_catalan(l, n as u64)?;
                let reg_cat = weyl::regular_catalan(l, n as u64)?;
                let hc = weyl::hc_dimension_prediction(&rd, &rep);
                rows.push(Row {
                    n,
                    l,
                    status: "ok".into(),
                    reason: String::new(),
                    total_orbits: rep.total(),
                    regular: rep.regular(),
                    singular: rep.singular(),
                    steinberg: rep.steinberg(),
                    alcove_root_points: alcove,
                    catalan_total: cat.to_string(),
                    catalan_regular: reg_cat.to_string(),
                    total_matches: rep.total().to_string() == cat.to_string()
                        && alcove.to_string() == cat.to_string(),
                    regular_matches: rep.regular().to_string() == reg_cat.to_string(),
                    hc_dimension: hc,
                });
            }
            Err(e) => rows.push(Row {
                n,
                l,
                status: "skipped".into(),
                reason: e.to_string(),
                total_orbits: 0,
                regular: 0,
                singular: 0,
                steinberg: 0,
                alcove_root_points: 0,
                catalan_total: String::new(),
                catalan_regular: String::new(),
                total_matches: false,
                regular_matches: false,
                hc_dimension: 0,
            }),
        }
    }
    match output {
        OutputFormat::Json => Ok(serde_json::to_string_pretty(&rows).unwrap()),
        _ => {
            let mut out = String::from(
                "n,l,status,reason,total_orbits,regular,singular,steinberg,alcove_root_points,catalan_total,catalan_regular,total_matches,regular_matches,hc_dimension\n",
            );
            for r in rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                    r.n,
                    r.l,
                    r.status,
                    r.reason.replace(',', ";"),
                    r.total_orbits,
                    r.regular,
                    r.singular,
                    r.steinberg,
                    r.alcove_root_points,
                    r.catalan_total,
                    r.catalan_regular,
                    r.total_matches,
                    r.regular_matches,
                    r.hc_dimension
                ));
            }
            Ok(out)
        }
    }
}

/// The `hh` command: table rows and the graded dimension vector.
pub fn cmd_hh(l: u64, smax: i64, kmax: i64, output: OutputFormat) -> Result<String, CommandError> {
    let table = crate::hhgeom::pushforward_table(kmax)?;
    let dims = crate::hhgeom::hh_block_dims(smax, &table)?;
    let alg = crate::hhgeom::HHAlgebra::new(l)?;
    let blocks = (l - 1) / 2;
    let mut degree_dims = Vec::new();
    for (s, block_dim, _) in &dims {
        let total = blocks * block_dim + u64::from(*s == 0);
        let from_algebra = alg.graded_dim(*s) as u64;
        if from_algebra != total {
            return Err(CommandError::Engine(EngineError::Internal(format!(
                "presented algebra dimension {from_algebra} differs from geometric {total} at degree {s}"
            ))));
        }
        degree_dims.push(total);
    }
    match output {
        OutputFormat::Json => {
            let rows: Vec<serde_json::Value> = table
                .entries
                .iter()
                .flat_map(|((i, j, k), ws)| {
                    let mut counts: std::collections::BTreeMap<u64, usize> =
                        std::collections::BTreeMap::new();
                    for w in ws {
                        *counts.entry(*w).or_insert(0) += 1;
                    }
                    let (i, j, k) = (*i, *j, *k);
                    counts.into_iter().map(move |(w, mult)| {
                        serde_json::json!({"i": i, "j": j, "k": k, "weight": w, "multiplicity": mult})
                    })
                })
                .collect();
            Ok(serde_json::to_string_pretty(&serde_json::json!({
                "schema": 1,
                "l": l,
                "smax": smax,
                "kmax": kmax,
                "table": rows,
                "derived_center_dims": degree_dims,
            }))
            .unwrap())
        }
        _ => {
            let mut out = String::from("i,j,k,weight,multiplicity\n");
            for ((i, j, k), ws) in &table.entries {
                let mut counts: std::collections::BTreeMap<u64, usize> =
                    std::collections::BTreeMap::new();
                for w in ws {
                    *counts.entry(*w).or_insert(0) += 1;
                }
                for (w, mult) in counts {
                    out.push_str(&format!("{i},{j},{k},{w},{mult}\n"));
                }
            }
            out.push_str("\ndegree,total_dim\n");
            for (s, d) in degree_dims.iter().enumerate() {
                out.push_str(&format!("{s},{d}\n"));
            }
            Ok(out)
        }
    }
}

/// The `export` command: structure tensors, presentation and operators.
pub fn cmd_export(
    l: u64,
    ext_field: bool,
    out_dir: &std::path::Path,
) -> Result<(), CommandError> {
    std::fs::create_dir_all(out_dir)?;
    let an = Analysis::new(l, ext_field)?;
    let kb = kerler::kerler_generators(&an)?;
    let ops = divided::divided_power_ops(&an.q)?;
    let h = &an.q.h;
    std::fs::write(
        out_dir.join(format!("uqsl2_l{l}.json")),
        serde_json::to_string(&hjson::hopf_to_json(h)).unwrap(),
    )?;
    let mut named = serde_json::Map::new();
    for (i, e) in kb.e.iter().enumerate() {
        named.insert(format!("e_{}", i + 1), hjson::algelem_to_json(e));
    }
    for (i, x) in kb.x.iter().enumerate() {
        named.insert(format!("x_{}", i + 1), hjson::algelem_to_json(x));
    }
    for (i, y) in kb.y.iter().enumerate() {
        named.insert(format!("y_{}", i + 1), hjson::algelem_to_json(y));
    }
    named.insert("e_st".to_string(), hjson::algelem_to_json(&kb.e_st));
    std::fs::write(
        out_dir.join(format!("kerler_l{l}.json")),
        serde_json::to_string_pretty(&serde_json::Value::Object(named)).unwrap(),
    )?;
    let mat_json = |m: &crate::linalg::Mat| -> serde_json::Value {
        serde_json::Value::Array(
            m.data
                .iter()
                .map(|row| {
                    serde_json::Value::Array(
                        row.iter()
                            .map(|(j, c)| serde_json::json!([j, hjson::cycnum_to_json(c)]))
                            .collect(),
                    )
                })
                .collect(),
        )
    };
    std::fs::write(
        out_dir.join(format!("divided_powers_l{l}.json")),
        serde_json::to_string(&serde_json::json!({
            "schema": 1,
            "l": l,
            "ad_e_divided": mat_json(&ops.ad_e),
            "ad_f_divided": mat_json(&ops.ad_f),
            "comm_e_divided": mat_json(&ops.comm_e),
            "comm_f_divided": mat_json(&ops.comm_f),
        }))
        .unwrap(),
    )?;
    Ok(())
}

/// The complete per-l verification suite.
pub fn verify_all(
    l: u64,
    ext_field: bool,
    with_timestamp: bool,
) -> Result<VerificationReport, EngineError> {
    let mut rep = VerificationReport::new("verify-all", &format!("l={l}"), with_timestamp);
    let half = (l - 1) / 2;

    // group-algebra control
    let t = Instant::now();
    let control = hopf::cyclic_group_algebra(3, 3);
    let control_ax = hopf::verify_hopf_axioms(&control)?;
    rep.record(
        "hopf-axioms-control",
        "hopf-axioms",
        control_ax.all_pass(),
        if control_ax.all_pass() { "all pass" } else { "failure" },
        "all pass on k[Z/3]",
        t,
    );

    let t = Instant::now();
    let an = Analysis::new(l, ext_field)?;
    let ax = hopf::verify_hopf_axioms(&an.q.h)?;
    rep.record(
        "hopf-axioms",
        "hopf-axioms",
        ax.all_pass(),
        if ax.all_pass() {
            "all pass".to_string()
        } else {
            ax.checks
                .iter()
                .filter(|c| !c.pass)
                .map(|c| c.detail.clone())
                .collect::<Vec<_>>()
                .join("; ")
        },
        "all pass",
        t,
    );

    // center
    let t = Instant::now();
    let zdim = ((3 * l - 1) / 2) as usize;
    rep.record(
        "center-dimension",
        "center-dimension",
        an.center.dim() == zdim,
        an.center.dim(),
        zdim,
        t,
    );

    // integrals
    let t = Instant::now();
    let eps_lambda = an.q.h.counit_of(&an.integrals.left)?;
    let closed = an.q.integral_closed_form()?;
    let closed_span = Subspace::from_rows(an.q.ctx.order, an.q.h.dim, vec![closed.as_sparse_row()])?;
    let integral_span = Subspace::from_rows(
        an.q.ctx.order,
        an.q.h.dim,
        vec![an.integrals.left.as_sparse_row()],
    )?;
    let lambda_in_radical = hopf::invariants::in_trace_form_radical(&an.q.h, &an.integrals.left)?;
    rep.record(
        "integral",
        "integral-structure",
        an.integrals.unimodular
            && eps_lambda.is_zero()
            && closed_span == integral_span
            && lambda_in_radical,
        format!(
            "unimodular={}, ε(Λ)={}, closed-form match={}, Λ∈rad={}",
            an.integrals.unimodular,
            eps_lambda,
            closed_span == integral_span,
            lambda_in_radical
        ),
        "unimodular, ε(Λ)=0, (ΣK^b)F^{l−1}E^{l−1} span, Λ∈rad",
        t,
    );

    // cointegral support
    let t = Instant::now();
    let lam = &an.cointegrals.lambda_left;
    let support_ok = lam.values.iter().enumerate().all(|(idx, v)| {
        if v.is_zero() {
            return true;
        }
        let (a, _, c) = an.q.monomial_exponents(idx);
        a == l - 1 && c == l - 1
    });
    let lam_in_cl = an.traces.c_l.contains_vector(&lam.as_sparse_row());
    rep.record(
        "cointegral-support",
        "cointegral-structure",
        support_ok && lam_in_cl,
        format!("support on F^{{l-1}}K^bE^{{l-1}}={support_ok}, λ∈c_l={lam_in_cl}"),
        "support pattern and λ∈c_l",
        t,
    );

    // trace spaces
    let t = Instant::now();
    let s_mat = an.q.h.antipode_matrix();
    let cl_via_s = map_subspace(&s_mat.transpose(), &an.traces.c_l)?;
    rep.record(
        "trace-spaces",
        "shifted-trace-spaces",
        an.traces.c_l.dim() == zdim
            && an.traces.c_r.dim() == zdim
            && cl_via_s == an.traces.c_r,
        format!(
            "dim c_l={}, dim c_r={}, S-precompose bijection={}",
            an.traces.c_l.dim(),
            an.traces.c_r.dim(),
            cl_via_s == an.traces.c_r
        ),
        format!("both {zdim}, bijection"),
        t,
    );

    // Radford maps
    let t = Instant::now();
    let psi_center = map_subspace(&an.radford.psi_l, &an.center)?;
    let psi_r_center = map_subspace(&an.radford.psi_r, &an.center)?;
    let intertwines = hopf::invariants::radford_intertwines(&an.q.h, &an.radford, l == 3)?;
    rep.record(
        "radford",
        "radford-isomorphism",
        psi_center == an.traces.c_l && psi_r_center == an.traces.c_r && intertwines,
        format!(
            "ψ_l(z)=c_l: {}, ψ_r(z)=c_r: {}, intertwines ad: {}",
            psi_center == an.traces.c_l,
            psi_r_center == an.traces.c_r,
            intertwines
        ),
        "bijective with ψ(z(H)) the shifted traces",
        t,
    );

    // Higman ideal
    let t = Instant::now();
    let hig_dim_ok = an.higman.dim() == ((l + 1) / 2) as usize;
    let mut traces_kill = true;
    for f in an.traces.c_l.basis.data.iter() {
        for z in an.higman.basis.data.iter() {
            let mut acc = CycNum::zero(an.q.ctx.order);
            for (i, fv) in f {
                for (j, zv) in z {
                    if i == j {
                        acc = acc.add(&fv.mul(zv)?)?;
                    }
                }
            }
            if !acc.is_zero() {
                traces_kill = false;
            }
        }
    }
    let lambda_not_in_higman = !an.higman.contains_vector(&an.integrals.left.as_sparse_row());
    rep.record(
        "higman-ideal",
        "higman-ideal",
        hig_dim_ok && traces_kill && lambda_not_in_higman,
        format!(
            "dim={}, c_l kills={}, Λ∉z_Hig={}",
            an.higman.dim(),
            traces_kill,
            lambda_not_in_higman
        ),
        format!("dim {}, annihilated by c_l, Λ outside", (l + 1) / 2),
        t,
    );

    // R-matrix and Drinfeld machinery
    let t = Instant::now();
    let jr_eps = {
        let eps = crate::hopf::algebra::Functional {
            order: an.q.ctx.order,
            values: an.q.h.counit.clone(),
        };
        an.drinfeld.monodromy.slice_left(&eps)?
    };
    let d_balance = (0..l).find(|b| {
        let kb = an.q.monomial(0, *b, 0, an.q.ctx.one());
        let prod = an.q.h.mult_elems(&an.drinfeld.drinfeld, &kb).unwrap();
        an.center.contains_vector(&prod.as_sparse_row())
    });
    rep.record(
        "r-matrix",
        "quasi-triangularity",
        an.drinfeld.factorizable && jr_eps == an.q.h.unit && d_balance.is_some(),
        format!(
            "{}; factorizable rank {}; j_r(ε)=1: {}; d·K^b central for b={:?}",
            an.rmatrix.notes.join(", "),
            an.q.h.dim,
            jr_eps == an.q.h.unit,
            d_balance
        ),
        format!("factorizable of rank {}", an.q.h.dim),
        t,
    );

    let t = Instant::now();
    let dr_intertwines = hopf::quasitriangular::drinfeld_intertwines(&an.q.h, &an.drinfeld, l == 3)?;
    rep.record(
        "drinfeld-intertwiner",
        "drinfeld-map",
        dr_intertwines,
        dr_intertwines,
        "j_l intertwines ad* and ad",
        t,
    );

    // Fourier transform
    let t = Instant::now();
    let f_center = map_subspace(&an.fourier.f, &an.center)?;
    let f_higman = map_subspace(&an.fourier.f, &an.higman)?;
    let f_z = hopf::restrict_operator(&an.fourier.f, &an.center)?;
    let s_z = hopf::restrict_operator(&an.q.h.antipode_matrix(), &an.center)?;
    let f2_eq_s = f_z.mul(&f_z)? == s_z;
    let f4_id = f_z.mul(&f_z)?.mul(&f_z)?.mul(&f_z)?
        == crate::linalg::Mat::identity(an.q.ctx.order, an.center.dim());
    rep.record(
        "fourier",
        "fourier-transform",
        f_center == an.center && f_higman == an.higman && f2_eq_s && f4_id,
        format!(
            "F(z)=z: {}, F(z_Hig)=z_Hig: {}, F²|_z=S: {f2_eq_s}, F⁴|_z=id: {f4_id}",
            f_center == an.center,
            f_higman == an.higman
        ),
        "center and Higman invariant, F²=S and F⁴=id on center",
        t,
    );

    // Harish-Chandra center
    let t = Instant::now();
    let f_hc = an.fourier_of_hc()?;
    let intersection = an.z_hc.intersect(&f_hc)?;
    let hc_ok = an.z_hc.dim() == l as usize
        && an.z_hc.contains(&an.higman)?
        && intersection == an.higman;
    let sum_dim = an.z_hc.sum(&f_hc)?.dim();
    // F(z_HC) = ψ_l⁻¹(span of shifted simple characters)
    let r_l_span = hopf::blocks::shifted_character_span(&an.q.h, &an.drinfeld.drinfeld, &an.simples)?;
    let psi_of_fhc = map_subspace(&an.radford.psi_l, &f_hc)?;
    // F(z_HC) is annihilated by the radical of the center
    let z_center_alg = center_radical_annihilates(&an, &f_hc)?;
    rep.record(
        "harish-chandra",
        "higman-equals-intersection",
        hc_ok && sum_dim == zdim && psi_of_fhc == r_l_span && z_center_alg,
        format!(
            "dim z_HC={}, z_Hig⊆z_HC ok, z_HC∩F(z_HC)=z_Hig: {}, dim(z_HC+F(z_HC))={}, ψ_l(F(z_HC))=r_l: {}, rad kills: {}",
            an.z_hc.dim(),
            intersection == an.higman,
            sum_dim,
            psi_of_fhc == r_l_span,
            z_center_alg
        ),
        format!("dim {l}, intersection equals Higman, sum dim {zdim}"),
        t,
    );

    // blocks and Cartan
    let t = Instant::now();
    let nblocks = an.blocks.classes.len();
    let ranks_ok = an.blocks.block_cartan_ranks.iter().all(|r| *r == 1);
    let mut cartan_ok = true;
    for (ci, class) in an.blocks.classes.iter().enumerate() {
        let sub: Vec<Vec<u64>> = class
            .iter()
            .map(|i| class.iter().map(|j| an.blocks.cartan[*i][*j]).collect())
            .collect();
        let expect: Vec<Vec<u64>> = if class.len() == 2 {
            vec![vec![2, 2], vec![2, 2]]
        } else {
            vec![vec![1]]
        };
        if sub != expect {
            cartan_ok = false;
        }
        let _ = ci;
    }
    let rd2 = weyl::RootData::sl(2)?;
    let orbit_blocks = weyl::orbit_count(&rd2, l)?.total();
    rep.record(
        "blocks-cartan",
        "cartan-rank-one",
        nblocks == ((l + 1) / 2) as usize
            && ranks_ok
            && cartan_ok
            && an.blocks.cartan_rank == nblocks
            && orbit_blocks == nblocks
            && an.higman.dim() == nblocks,
        format!(
            "blocks={nblocks}, ranks all 1: {ranks_ok}, shapes ok: {cartan_ok}, rank C={}, orbit count={orbit_blocks}",
            an.blocks.cartan_rank
        ),
        format!("blocks={}, each rank 1, orbit count equal", (l + 1) / 2),
        t,
    );

    // nilpotent presentation
    let t = Instant::now();
    let kb = kerler::kerler_generators(&an)?;
    let psi_hig = map_subspace(&an.radford.psi_l, &an.higman)?;
    let proj_chars = hopf::blocks::shifted_projective_character_span(
        &an.q.h,
        &an.drinfeld.drinfeld,
        &an.simples,
        &an.blocks.cartan,
    )?;
    let plus = kb.plus_span(an.q.h.dim, an.q.ctx.order)?;
    rep.record(
        "kerler-basis",
        "center-presentation",
        psi_hig == proj_chars && plus == an.higman,
        format!(
            "ψ_l(z_Hig)=p_l: {}, span{{x+y, e_St}}=z_Hig: {}; λ notes: {}",
            psi_hig == proj_chars,
            plus == an.higman,
            kb.lambda_label_notes.join(" | ")
        ),
        "projective characters and socle span",
        t,
    );

    // radical
    let t = Instant::now();
    let rad = hopf::radical(&an.q.h, Some(&an.simples))?;
    let ss_dim: usize = an.simples.iter().map(|r| r.mdim * r.mdim).sum();
    rep.record(
        "radical",
        "radical-dimension",
        rad.dim() + ss_dim == an.q.h.dim,
        rad.dim(),
        an.q.h.dim - ss_dim,
        t,
    );

    // ribbon element and modular action
    let t = Instant::now();
    let ribbon = hopf::ribbon_solve(
        &an.q.h,
        &an.drinfeld,
        &an.center,
        &an.blocks.idempotents,
        &|z, block| hopf::blocks::block_scalar(&an.simples, &an.blocks.classes, z, block),
        &|v| {
            an.simples
                .iter()
                .map(|rep| hopf::blocks::central_character(rep, v))
                .collect()
        },
    )?;
    let trivial_scalar = ribbon.simple_scalars[0].clone();
    rep.record(
        "ribbon",
        "ribbon-element",
        trivial_scalar.is_one(),
        format!(
            "scalar on L(0) = {trivial_scalar}; scalars: {}",
            ribbon
                .simple_scalars
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        ),
        "v acts by 1 on the trivial module",
        t,
    );

    let t = Instant::now();
    let modular = hopf::modular_check(&an.q.h, &an.fourier.f, &ribbon.v, &an.center, &an.higman)?;
    rep.record(
        "modular-action",
        "modular-group-action",
        modular.alpha_center.is_some()
            && modular.beta_center.as_ref().map_or(false, |b| b.is_one())
            && modular.preserves_center
            && modular.preserves_higman,
        format!(
            "α={}, global={}, β={}, preserves z: {}, preserves z_Hig: {}",
            modular
                .alpha_center
                .as_ref()
                .map_or("none".to_string(), |a| a.to_string()),
            modular.alpha_global,
            modular
                .beta_center
                .as_ref()
                .map_or("none".to_string(), |b| b.to_string()),
            modular.preserves_center,
            modular.preserves_higman
        ),
        "(FL)³ = α·F², F⁴ = id on the center, invariant ideals",
        t,
    );

    // modular subspace decomposition
    let t = Instant::now();
    let minus = kb.minus_span(an.q.h.dim, an.q.ctx.order)?;
    let l_op = an.q.h.left_mult_elem(&ribbon.v)?;
    let plus_invariant = hopf::restrict_operator(&an.fourier.f, &plus).is_ok()
        && hopf::restrict_operator(&l_op, &plus).is_ok();
    let minus_invariant = hopf::restrict_operator(&an.fourier.f, &minus).is_ok()
        && hopf::restrict_operator(&l_op, &minus).is_ok();
    let dims_ok = plus.dim() == ((l + 1) / 2) as usize && minus.dim() == (l - 1) as usize;
    // v·e_St = (Steinberg scalar)·e_St
    let st_scalar = &ribbon.simple_scalars[(l - 1) as usize];
    let v_est = an.q.h.mult_elems(&ribbon.v, &kb.e_st)?;
    let st_ok = v_est == kb.e_st.scale(st_scalar)?;
    rep.record(
        "modular-subspaces",
        "modular-decomposition",
        plus_invariant && minus_invariant && dims_ok && st_ok,
        format!(
            "span{{x+y,e_St}} invariant: {plus_invariant}, span{{x−y,e_i}} invariant: {minus_invariant}, dims {}+{}, v·e_St scalar: {st_ok}",
            plus.dim(),
            minus.dim()
        ),
        format!("dims {} and {}", (l + 1) / 2, l - 1),
        t,
    );

    // divided powers
    let t = Instant::now();
    let ops = divided::divided_power_ops(&an.q)?;
    let dp = divided::verify_divided_powers(
        &an.q,
        &ops,
        &an.center,
        &an.higman,
        &an.blocks.idempotents,
    )?;
    rep.record(
        "divided-powers",
        "divided-power-action",
        dp.agrees_with_commutator_on_center
            && dp.trivial_on_center
            && dp.preserves_block_decomposition
            && dp.trivial_on_higman
            && dp.kills_unit,
        format!(
            "commutator agreement: {}, trivial on center: {}, blocks preserved: {}, kills z_Hig: {}, kills 1: {}",
            dp.agrees_with_commutator_on_center,
            dp.trivial_on_center,
            dp.preserves_block_decomposition,
            dp.trivial_on_higman,
            dp.kills_unit
        ),
        "all hold",
        t,
    );

    // adjoint multiplicity counts
    let t = Instant::now();
    let ost = ostrik::ostrik_counts(&an)?;
    rep.record(
        "adjoint-multiplicities",
        "adjoint-decomposition",
        ost.hom_into_ad == zdim
            && ost.hom_from_ad == zdim
            && ost.pairing_rank == (l - 1) as usize
            && ost.pairing_corank == ((l + 1) / 2) as usize
            && ost.kernel_is_higman,
        format!(
            "hom dims {}/{}, pairing rank {}, corank {}, kernel=z_Hig: {}",
            ost.hom_into_ad,
            ost.hom_from_ad,
            ost.pairing_rank,
            ost.pairing_corank,
            ost.kernel_is_higman
        ),
        format!(
            "dims {zdim}, rank {}, corank {}",
            l - 1,
            (l + 1) / 2
        ),
        t,
    );

    // geometric table cross-check
    let t = Instant::now();
    let table = crate::hhgeom::pushforward_table(16)?;
    let dims = crate::hhgeom::hh_block_dims(8, &table)?;
    let alg = crate::hhgeom::HHAlgebra::new(l)?;
    let degree0 = alg.graded_dim(0);
    let mut algebra_matches = true;
    for (s, block_dim, _) in &dims {
        if *s > 6 {
            continue;
        }
        let total = half * block_dim + u64::from(*s == 0);
        if alg.graded_dim(*s) as u64 != total {
            algebra_matches = false;
        }
    }
    let hig_cell = crate::hhgeom::higman_table_position(&table)?;
    rep.record(
        "derived-center-table",
        "graded-table",
        degree0 == zdim && algebra_matches && hig_cell.middle_entry_dim == 1
            && hig_cell.middle_column_vanishes_elsewhere,
        format!(
            "degree-0 total {degree0}, presentation matches table ≤ 6: {algebra_matches}, (1,1,−2) cell dim {}",
            hig_cell.middle_entry_dim
        ),
        format!("degree-0 {zdim}, matching dims, cell dim 1"),
        t,
    );

    Ok(rep)
}

fn center_radical_annihilates(an: &Analysis, f_hc: &Subspace) -> Result<bool, EngineError> {
    // the radical of the center: central elements acting nilpotently,
    // computed as center ∩ radical of the trace form restricted to products
    let h = &an.q.h;
    // center basis elements with zero central character on every block are
    // exactly the radical of the center
    let mut rad_rows = Vec::new();
    for row in &an.center.basis.data {
        let _ = row;
    }
    // build the radical of the center by solving: z in center with all
    // central characters zero
    let zbasis: Vec<AlgElem> = an
        .center
        .basis
        .data
        .iter()
        .map(|r| AlgElem::from_sparse_row(h.order, h.dim, r))
        .collect();
    let mut rows: Vec<crate::linalg::SparseRow> = Vec::new();
    for rep in &an.simples {
        let mut row: crate::linalg::SparseRow = Vec::new();
        for (j, z) in zbasis.iter().enumerate() {
            let val = hopf::blocks::central_character(rep, z)?;
            if !val.is_zero() {
                row.push((j, val));
            }
        }
        rows.push(row);
    }
    let coords_kernel = crate::linalg::Mat::from_rows(h.order, zbasis.len(), rows).kernel()?;
    for coord in &coords_kernel.basis.data {
        let mut z = AlgElem::zero(h.order, h.dim);
        for (j, c) in coord {
            z = z.add(&zbasis[*j].scale(c)?)?;
        }
        rad_rows.push(z);
    }
    for r in &rad_rows {
        for v in &f_hc.basis.data {
            let ve = AlgElem::from_sparse_row(h.order, h.dim, v);
            if !h.mult_elems(r, &ve)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
