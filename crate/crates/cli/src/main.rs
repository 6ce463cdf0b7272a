//! `hilbcount`: polynomials, tables, zeta functions, identity suites and
//! brute-force oracles from the command line.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage error, 3 the requested
//! enumeration exceeds the work limit (`HILBCOUNT_WORK_LIMIT`).

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use hilbcount::algebra::laurent::bigint_to_json;
use hilbcount::algebra::{format_rational, parse_rational, FqPoly, LaurentPoly, Modulus, Partition, Ring, TruncSeries};
use hilbcount::arith::{abs_at_root, section_s, value_a_d, RootDegree};
use hilbcount::census::{coeff_a, poly_a, poly_b, poly_bcirc, poly_c, poly_p, Flavor};
use hilbcount::identities;
use hilbcount::oracle::{
    cell_census, cell_enumeration_count_via, count_coprime_tuples, matrix_pair_census, sample_coprime_families,
    CriterionRoute, OracleConfig, OracleReport,
};
use hilbcount::tables::{csv_field, table, Column, Table};
use hilbcount::verify::{run_suite, Fault, Model, Suite, VerifyOptions};
use hilbcount::zeta::zeta_factorization;
use hilbcount::{Error, Result};

#[derive(Parser, Debug)]
#[command(name = "hilbcount", version, about = "Counts of finite-codimension ideals of F_q[x,y] and its localizations")]
struct Cli {
    /// Output format (oracle defaults to json, everything else to plain).
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    /// Seed for randomized checks.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// One polynomial with its companion values.
    Poly {
        #[arg(value_enum, ignore_case = true)]
        which: Which,
        n: u32,
    },
    /// One of the seven reference tables.
    Table {
        id: u32,
        #[arg(long)]
        max_n: Option<u32>,
    },
    /// Runs an identity suite: census, series, zeta, values, oracle or all.
    Verify(VerifyArgs),
    /// Factored zeta function of the torus Hilbert scheme, optionally evaluated.
    Zeta {
        n: u32,
        #[arg(long, requires = "t")]
        q: Option<u64>,
        #[arg(long, requires = "q", allow_hyphen_values = true)]
        t: Option<String>,
    },
    /// `a_d(n) = C_n(ω)/ω^n` for a primitive `d`-th root of unity.
    Values {
        #[arg(long)]
        d: RootDegree,
        #[arg(long, default_value_t = 18)]
        max_n: u32,
    },
    /// `s_k(n)`: the sum of the coefficients of `q^{ki}` in `P_n(q)`.
    Sections {
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 18)]
        max_n: u32,
    },
    /// Brute-force count over a prime field, compared with the closed form.
    Oracle(OracleArgs),
    /// Coefficients of a generating function.
    Gf {
        #[arg(value_enum)]
        name: GfName,
        #[arg(long, default_value_t = 16)]
        order: usize,
        /// Row index for rect, a-coeff and c-coeff.
        #[arg(long)]
        i: Option<u32>,
        /// Root order (2, 3, 4 or 6) for root.
        #[arg(long)]
        d: Option<RootDegree>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Which {
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
    #[value(name = "Bcirc")]
    Bcirc,
    #[value(name = "C")]
    C,
    #[value(name = "P")]
    P,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    suite: Suite,
    /// Series order for the series suite.
    #[arg(long)]
    order: Option<usize>,
    /// Largest n for the census, values and oracle suites.
    #[arg(long)]
    max_n: Option<u32>,
    /// Largest n for the zeta suite.
    #[arg(long)]
    n: Option<u32>,
    /// Restrict the zeta expansion check to this q.
    #[arg(long)]
    q: Option<u64>,
    /// Number of functional-equation samples.
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, hide = true)]
    inject_fault: Option<Fault>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OracleKind {
    Coprime,
    Cell,
    Matrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    Criteria,
    Minors,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[arg(long, value_enum)]
    kind: OracleKind,
    /// Size n (for coprime: the degree d of P).
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    q: u64,
    /// Partition for the cell oracle, e.g. 2,1.
    #[arg(long, value_delimiter = ',')]
    lambda: Option<Vec<u32>>,
    #[arg(long, default_value = "affine")]
    flavor: Flavor,
    #[arg(long, value_enum, default_value = "criteria")]
    route: RouteArg,
    /// Coprime oracle: one Q_i per flag, ascending coefficients, e.g. 1,1 for 1 + y.
    #[arg(long)]
    qpoly: Vec<String>,
    /// Coprime oracle without --qpoly: use the first sample family of this length.
    #[arg(long, default_value_t = 1)]
    h: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GfName {
    A,
    B,
    C,
    P,
    Rect,
    ACoeff,
    CCoeff,
    Root,
    GaussProduct,
    GaussSum,
    Euler,
    Phi,
    Psi,
}

/// What a command produced, before formatting.
enum Output {
    Text { plain: String, csv: String, json: Value },
    Table(Table),
}

struct Outcome {
    output: Output,
    ok: bool,
}

impl Outcome {
    fn ok(output: Output) -> Self {
        Outcome { output, ok: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(k) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(k.max(1)).build_global() {
            eprintln!("error: thread pool: {e}");
            return ExitCode::from(1);
        }
    }
    let default_format = match cli.command {
        Command::Oracle(_) => Format::Json,
        _ => Format::Plain,
    };
    let format = cli.format.unwrap_or(default_format);
    match run(&cli) {
        Ok(outcome) => {
            print!("{}", render(&outcome.output, format));
            ExitCode::from(if outcome.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidArgument(_) | Error::Parse(_) => 2,
        Error::WorkBound { .. } => 3,
        Error::Domain(_) | Error::TheoremViolation(_) | Error::Internal(_) => 1,
    }
}

fn render(output: &Output, format: Format) -> String {
    let mut s = match (output, format) {
        (Output::Text { plain, .. }, Format::Plain) => plain.clone(),
        (Output::Text { csv, .. }, Format::Csv) => csv.clone(),
        (Output::Text { json, .. }, Format::Json) => pretty(json),
        (Output::Table(t), Format::Plain) => t.render_plain(),
        (Output::Table(t), Format::Csv) => t.render_csv(),
        (Output::Table(t), Format::Json) => pretty(&t.to_json()),
    };
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values always serialize")
}

fn oracle_config(cli: &Cli) -> Result<OracleConfig> {
    let cfg = OracleConfig::from_env()?;
    Ok(match cli.threads {
        Some(k) => cfg.with_threads(k),
        None => cfg,
    })
}

fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Poly { which, n } => cmd_poly(*which, *n).map(Outcome::ok),
        Command::Table { id, max_n } => Ok(Outcome::ok(Output::Table(table(*id, *max_n)?))),
        Command::Verify(args) => cmd_verify(cli, args),
        Command::Zeta { n, q, t } => cmd_zeta(*n, *q, t.as_deref()).map(Outcome::ok),
        Command::Values { d, max_n } => cmd_values(*d, *max_n).map(Outcome::ok),
        Command::Sections { k, max_n } => cmd_sections(*k, *max_n).map(Outcome::ok),
        Command::Oracle(args) => cmd_oracle(cli, args),
        Command::Gf { name, order, i, d } => cmd_gf(*name, *order, *i, *d).map(Outcome::ok),
    }
}

fn cmd_poly(which: Which, n: u32) -> Result<Output> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let (name, poly) = match which {
        Which::A => ("A", poly_a(n)?),
        Which::B => ("B", poly_b(n)?),
        Which::Bcirc => ("B°", poly_bcirc(n)?),
        Which::C => ("C", poly_c(n)?),
        Which::P => ("P", poly_p(n)?),
    };
    let mut values: Vec<(String, String, BigInt)> = Vec::new();
    let mut at = |label: &str, key: &str, v: BigInt| values.push((label.to_string(), key.to_string(), v));
    match which {
        Which::C => at(&format!("C_{n}(-1)"), "at_-1", poly.eval_i64(-1)?),
        Which::P => {
            at(&format!("P_{n}(1)"), "at_1", poly.eval_i64(1)?);
            at(&format!("P_{n}(-1)"), "at_-1", poly.eval_i64(-1)?);
            at(&format!("|P_{n}(j)|"), "abs_at_j", abs_at_root(&poly, 3)?);
            at(&format!("|P_{n}(i)|"), "abs_at_i", abs_at_root(&poly, 4)?);
            at(&format!("a_{{{n},0}}"), "a_n0", BigInt::from(coeff_a(n, 0)));
        }
        Which::A | Which::B | Which::Bcirc => {
            at(&format!("{name}_{n}(1)"), "at_1", poly.eval_i64(1)?);
            at(&format!("{name}_{n}(-1)"), "at_-1", poly.eval_i64(-1)?);
        }
    }
    let display = poly.display_in("q");
    let mut plain = format!("{name}_{n}(q) = {display}\n");
    let mut csv = format!("quantity,value\n{},{}\n", csv_field(&format!("{name}_{n}(q)")), csv_field(&display));
    let mut json_values = serde_json::Map::new();
    for (label, key, v) in &values {
        plain.push_str(&format!("{label} = {v}\n"));
        csv.push_str(&format!("{},{v}\n", csv_field(label)));
        json_values.insert(key.clone(), bigint_to_json(v));
    }
    let json = json!({
        "name": name,
        "n": n,
        "display": display,
        "poly": poly.to_json(),
        "values": json_values,
    });
    Ok(Output::Text { plain, csv, json })
}

fn cmd_verify(cli: &Cli, args: &VerifyArgs) -> Result<Outcome> {
    let mut opts = VerifyOptions {
        oracle: oracle_config(cli)?,
        ..VerifyOptions::default()
    };
    if let Some(seed) = cli.seed {
        opts.seed = seed;
    }
    if let Some(fault) = args.inject_fault {
        opts.model = Model::with_fault(fault);
    }
    if let Some(order) = args.order {
        opts.series_order = order;
        opts.gauss_order = opts.gauss_order.min(order.max(1));
        opts.euler_order = opts.euler_order.min(order.max(1));
    }
    if let Some(max_n) = args.max_n {
        opts.census_max_n = max_n;
        opts.values_max_n = max_n;
        opts.values_root_max_n = opts.values_root_max_n.min(max_n);
        opts.oracle_cell_max_n = opts.oracle_cell_max_n.min(max_n);
    }
    if let Some(n) = args.n {
        opts.zeta_max_n = n;
        opts.fe_max_n = n;
    }
    if let Some(q) = args.q {
        opts.zeta_qs = vec![q];
    }
    if let Some(samples) = args.samples {
        opts.fe_samples = samples;
    }
    let report = run_suite(args.suite, &opts)?;
    let mut csv = String::from("status,suite,name,scope,detail\n");
    for line in &report.lines {
        csv.push_str(&format!(
            "{},{},{},{},{}\n",
            line.status.name(),
            line.suite,
            csv_field(&line.name),
            csv_field(&line.scope),
            csv_field(line.detail.as_deref().unwrap_or(""))
        ));
    }
    Ok(Outcome {
        ok: report.all_pass(),
        output: Output::Text {
            plain: report.render_plain(),
            csv,
            json: report.to_json(),
        },
    })
}

fn cmd_zeta(n: u32, q: Option<u64>, t: Option<&str>) -> Result<Output> {
    let z = zeta_factorization(n)?;
    let hw = z.hasse_weil()?;
    let mut plain = format!("Z_{{H^{n}/F_q}}(t) = {}\nζ_{{H^{n}}}(s) = {}\n", z.render(), hw.render());
    let mut csv = format!("quantity,value\nZ(t),{}\nzeta(s),{}\n", csv_field(&z.render()), csv_field(&hw.render()));
    let mut json = z.to_json();
    json["display"] = json!(z.render());
    json["hasse_weil"] = json!(hw.render());
    if let (Some(q), Some(t)) = (q, t) {
        let t = parse_rational(t)?;
        let v = z.eval(&BigInt::from(q), &t)?;
        let (ts, vs) = (format_rational(&t), format_rational(&v));
        plain.push_str(&format!("Z(q={q}, t={ts}) = {vs}\n"));
        csv.push_str(&format!("Z(q={q} t={ts}),{vs}\n"));
        json["evaluation"] = json!({"q": q, "t": ts, "value": vs});
    }
    Ok(Output::Text { plain, csv, json })
}

fn cmd_values(d: RootDegree, max_n: u32) -> Result<Output> {
    let mut rows = Vec::new();
    for n in 1..=max_n {
        let v = value_a_d(d.0, n)?;
        let abs = BigInt::from(v.magnitude().clone());
        rows.push(vec![json!(n), bigint_to_json(&v), bigint_to_json(&abs)]);
    }
    Ok(Output::Table(Table {
        id: 0,
        title: format!("a_{d}(n) = C_n(ω)/ω^n, ω a root of unity of order {d}"),
        columns: vec![
            Column::new("n", "n"),
            Column::new("value", format!("a_{d}(n)")),
            Column::new("abs", format!("|a_{d}(n)|")),
        ],
        rows,
    }))
}

fn cmd_sections(k: u32, max_n: u32) -> Result<Output> {
    let mut rows = Vec::new();
    for n in 1..=max_n {
        rows.push(vec![json!(n), bigint_to_json(&section_s(k, n)?)]);
    }
    Ok(Output::Table(Table {
        id: 0,
        title: format!("Sections s_{k}(n) of P_n(q)"),
        columns: vec![Column::new("n", "n"), Column::new("value", format!("s_{k}(n)"))],
        rows,
    }))
}

fn parse_fq_poly(p: Modulus, s: &str) -> Result<FqPoly> {
    let coeffs = s
        .split(',')
        .filter(|c| !c.is_empty())
        .map(|c| {
            c.parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad coefficient {c:?} in --qpoly {s:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FqPoly::from_i64s(p, &coeffs))
}

fn cmd_oracle(cli: &Cli, args: &OracleArgs) -> Result<Outcome> {
    let cfg = oracle_config(cli)?;
    let need_n = || args.n.ok_or_else(|| Error::InvalidArgument("--n is required for this oracle".into()));
    let report: OracleReport = match args.kind {
        OracleKind::Coprime => {
            let p = Modulus::new(args.q)?;
            let qs = if args.qpoly.is_empty() {
                sample_coprime_families(args.q, args.h)?
                    .into_iter()
                    .next()
                    .ok_or_else(|| Error::InvalidArgument(format!("no sample family with h = {}", args.h)))?
            } else {
                args.qpoly.iter().map(|s| parse_fq_poly(p, s)).collect::<Result<_>>()?
            };
            count_coprime_tuples(args.q, need_n()?, &qs, &cfg)?
        }
        OracleKind::Cell => {
            let route = match args.route {
                RouteArg::Criteria => CriterionRoute::Criteria,
                RouteArg::Minors => CriterionRoute::Minors,
            };
            match &args.lambda {
                Some(parts) => {
                    let lambda = Partition::new(parts.clone())?;
                    if let Some(n) = args.n {
                        if n != lambda.n() {
                            return Err(Error::InvalidArgument(format!("--n {n} but the partition has size {}", lambda.n())));
                        }
                    }
                    cell_enumeration_count_via(&lambda, args.q, args.flavor, route, &cfg)?
                }
                None => cell_census(need_n()?, args.q, args.flavor, &cfg)?,
            }
        }
        OracleKind::Matrix => matrix_pair_census(need_n()?, args.q, args.flavor, &cfg)?,
    };
    let csv = format!(
        "kind,input,count,formula_value,match,instances,elapsed\n{},{},{},{},{},{},{}\n",
        report.kind,
        csv_field(&report.input),
        report.count,
        report.formula_value,
        report.matches(),
        report.instances,
        report.elapsed.as_secs_f64()
    );
    Ok(Outcome {
        ok: report.matches(),
        output: Output::Text {
            plain: format!("{}\n", report.summary()),
            csv,
            json: report.to_json(),
        },
    })
}

fn series_output<R: Ring>(title: &str, series: &[(&str, &TruncSeries<R>)], show: impl Fn(&R) -> String) -> Output {
    let mut plain = format!("{title}\n");
    let mut csv = String::from("series,k,coefficient\n");
    let mut json = serde_json::Map::new();
    for (label, s) in series {
        if series.len() > 1 {
            plain.push_str(&format!("[{label}]\n"));
        }
        for (k, c) in s.coeffs().iter().enumerate() {
            let text = show(c);
            plain.push_str(&format!("t^{k}: {text}\n"));
            csv.push_str(&format!("{},{k},{}\n", csv_field(label), csv_field(&text)));
        }
        json.insert(label.to_string(), s.to_json());
    }
    Output::Text {
        plain,
        csv,
        json: json!({"name": title, "series": json}),
    }
}

fn cmd_gf(name: GfName, order: usize, i: Option<u32>, d: Option<RootDegree>) -> Result<Output> {
    let need_i = || i.ok_or_else(|| Error::InvalidArgument("--i is required for this series".into()));
    let laurent = |p: &LaurentPoly| p.display_in("q");
    let integer = |c: &BigInt| c.to_string();
    Ok(match name {
        GfName::A => series_output("Σ A_n(q) s^n = ∏ 1/(1 - q^{i+1} s^i)", &[("A", &identities::gf_a(order)?)], laurent),
        GfName::B => series_output("Σ (q - 1) B°_n(q) t^n = ∏ (1 - t^i)/(1 - q t^i)", &[("B", &identities::gf_b(order)?)], laurent),
        GfName::C => series_output("Σ C_n(q) t^n / q^n", &[("C", &identities::gf_c(order)?)], laurent),
        GfName::P => series_output("Σ P_n(q) t^n / q^{n-1}", &[("P", &identities::gf_p_closed(order)?)], laurent),
        GfName::Rect => {
            let i = need_i()?;
            let (left, right) = identities::gf_rect_factor(i, order)?;
            series_output(&format!("rectangular factor, i = {i}"), &[("cells", &left), ("product", &right)], laurent)
        }
        GfName::ACoeff => {
            let i = need_i()?;
            series_output(&format!("Σ_n a_{{n,{i}}} t^n"), &[("a", &identities::gf_a_coeff(i, order)?)], integer)
        }
        GfName::CCoeff => {
            let i = need_i()?;
            series_output(&format!("Σ_n c_{{n,{i}}} t^n"), &[("c", &identities::gf_c_coeff(i, order))], integer)
        }
        GfName::Root => {
            let d = d.ok_or_else(|| Error::InvalidArgument("--d is required for root".into()))?;
            series_output(
                &format!("Σ_n a_{d}(n) t^n"),
                &[("a_d", &identities::gf_root_of_unity(d.0, order)?)],
                integer,
            )
        }
        GfName::GaussProduct => series_output("∏ (1 - t^i)/(1 + t^i)", &[("product", &identities::gauss_product(order)?)], integer),
        GfName::GaussSum => series_output("Σ_{k ∈ Z} (-1)^k t^{k^2}", &[("sum", &identities::gauss_sum(order))], integer),
        GfName::Euler => {
            let (left, right) = identities::euler_pair(order)?;
            series_output("distinct parts = odd parts", &[("distinct", &left), ("odd", &right)], integer)
        }
        GfName::Phi => series_output("φ(t) = Σ_{k ∈ Z} t^{k^2}", &[("phi", &identities::theta_phi(order))], integer),
        GfName::Psi => series_output("ψ(t) = Σ_{k ≥ 0} t^{k(k+1)/2}", &[("psi", &identities::theta_psi(order))], integer),
    })
}
