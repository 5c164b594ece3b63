//! The `pgf` command-line front end.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or domain error,
//! 3 oracle size cap exceeded.

use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::closedform::{self, Mode};
use crate::grouptypes::GroupType;
use crate::lattice_oracle::{self, ConcreteGroup, Lattice, OracleError, DEFAULT_MAX_ORDER};
use crate::mobius_engine;
use crate::report::VerificationReport;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Cap(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Cap(_) => EXIT_CAP,
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::TooLarge { .. } => CliError::Cap(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

#[derive(Debug, Parser)]
#[command(name = "pgf", version, about = "Subgroup counts and factorization numbers of abelian p-groups of rank <= 3")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of subgroups.
    Count(ValueArgs),
    /// Factorization number F2.
    F2 {
        #[command(flatten)]
        value: ValueArgs,
        #[arg(long, value_enum, default_value_t = F2Method::Theorem3)]
        method: F2Method,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Cross-check the closed forms, the Möbius engine and the brute-force oracle.
    Verify {
        #[arg(long = "type")]
        group_type: GroupType,
        #[arg(long)]
        p: u64,
        /// Subset of count,f2,hall,eq2,census
        #[arg(long, value_enum, value_delimiter = ',')]
        checks: Option<Vec<CheckKind>>,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Tabulate f and F2 over a grid of types and primes.
    Table {
        #[arg(long)]
        max_lambda: u32,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        primes: Vec<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        cap: CapArgs,
    },
}

#[derive(Debug, Args)]
pub struct ValueArgs {
    #[arg(long = "type")]
    pub group_type: GroupType,
    #[arg(long, conflicts_with = "symbolic", required_unless_present = "symbolic")]
    pub p: Option<u64>,
    #[arg(long)]
    pub symbolic: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CapArgs {
    /// Largest group order the brute-force oracle will enumerate
    #[arg(long, env = "PGF_MAX_ORDER", default_value_t = DEFAULT_MAX_ORDER)]
    pub max_order: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum F2Method {
    Theorem3,
    Mobius,
    Oracle,
}

impl F2Method {
    fn as_str(&self) -> &'static str {
        match self {
            F2Method::Theorem3 => "theorem3",
            F2Method::Mobius => "mobius",
            F2Method::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Count,
    F2,
    Hall,
    Eq2,
    Census,
}

/// One computed quantity, in the JSON output schema.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValueRecord {
    #[serde(rename = "type")]
    pub group_type: [u32; 3],
    pub p: Option<u64>,
    pub quantity: &'static str,
    pub method: &'static str,
    pub value: String,
}

impl ValueRecord {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Text => format!("{}\n", self.value),
            Format::Json => format!("{}\n", serde_json::to_string(self).expect("serializable")),
            Format::Csv => {
                let [a, b, c] = self.group_type;
                let p = self.p.map(|p| p.to_string()).unwrap_or_default();
                format!(
                    "lambda1,lambda2,lambda3,p,quantity,method,value\n{a},{b},{c},{p},{},{},{}\n",
                    self.quantity, self.method, self.value
                )
            }
        }
    }
}

fn check_prime(p: u64) -> Result<(), CliError> {
    if lattice_oracle::is_prime(p) {
        Ok(())
    } else {
        Err(usage(format!("--p {p} is not prime")))
    }
}

fn mode_of(args: &ValueArgs) -> Result<Mode, CliError> {
    match (args.p, args.symbolic) {
        (Some(p), false) => {
            check_prime(p)?;
            Ok(Mode::Numeric(p))
        }
        (None, true) => Ok(Mode::Symbolic),
        _ => Err(usage("exactly one of --p and --symbolic is required")),
    }
}

fn p_of(mode: Mode) -> Option<u64> {
    match mode {
        Mode::Numeric(p) => Some(p),
        Mode::Symbolic => None,
    }
}

pub fn cmd_count(args: &ValueArgs) -> Result<ValueRecord, CliError> {
    let mode = mode_of(args)?;
    let f = closedform::subgroup_count_f(args.group_type, mode).map_err(|e| usage(e.to_string()))?;
    Ok(ValueRecord {
        group_type: args.group_type.exponents(),
        p: p_of(mode),
        quantity: "f",
        method: f.method.as_str(),
        value: f.value.to_string(),
    })
}

fn oracle(t: GroupType, p: u64, max_order: u64) -> Result<(ConcreteGroup, Lattice), CliError> {
    let g = lattice_oracle::build_group(t, p, max_order)?;
    let lattice = lattice_oracle::all_subgroups(&g);
    Ok((g, lattice))
}

pub fn cmd_f2(args: &ValueArgs, method: F2Method, max_order: u64) -> Result<ValueRecord, CliError> {
    let mode = mode_of(args)?;
    let t = args.group_type;
    let value = match (method, mode) {
        (F2Method::Theorem3, _) => closedform::f2_theorem3(t, mode)
            .map_err(|e| usage(e.to_string()))?
            .value
            .to_string(),
        (_, Mode::Symbolic) => {
            return Err(usage(format!("--method {} needs --p", method.as_str())));
        }
        (F2Method::Mobius, Mode::Numeric(p)) => mobius_engine::f2_via_mobius(t, p).to_string(),
        (F2Method::Oracle, Mode::Numeric(p)) => {
            let (g, lattice) = oracle(t, p, max_order)?;
            lattice_oracle::count_factorizations(&g, &lattice).to_string()
        }
    };
    Ok(ValueRecord {
        group_type: t.exponents(),
        p: p_of(mode),
        quantity: "f2",
        method: method.as_str(),
        value,
    })
}

const ALL_CHECKS: [CheckKind; 5] = [
    CheckKind::Count,
    CheckKind::F2,
    CheckKind::Hall,
    CheckKind::Eq2,
    CheckKind::Census,
];

pub fn cmd_verify(
    t: GroupType,
    p: u64,
    checks: Option<&[CheckKind]>,
    max_order: u64,
) -> Result<VerificationReport, CliError> {
    check_prime(p)?;
    let selected: Vec<CheckKind> = match checks {
        Some(c) => {
            if c.contains(&CheckKind::Census) && t.rank() != 3 {
                return Err(usage("the census check needs a rank-3 type"));
            }
            c.to_vec()
        }
        None => ALL_CHECKS
            .into_iter()
            .filter(|&c| c != CheckKind::Census || t.rank() == 3)
            .collect(),
    };
    let wants = |c: CheckKind| selected.contains(&c);
    let needs_oracle = selected.iter().any(|&c| c != CheckKind::Census);
    let built = if needs_oracle {
        Some(oracle(t, p, max_order)?)
    } else {
        None
    };
    let p_big = BigInt::from(p);

    let mut report = VerificationReport::new(t, p);
    if wants(CheckKind::Count) {
        let (g, lattice) = built.as_ref().expect("oracle built");
        let f = closedform::subgroup_count(t, p);
        report.compare("count.formula_vs_oracle", &f, lattice.len());
        let sym = closedform::count_generic(t, &crate::exactpoly::IntPolynomial::p())
            .map_err(|e| usage(e.to_string()))?;
        report.compare("count.symbolic_eval", &f, sym.eval(&p_big));
        report.compare("count.lattice_closed", true, lattice.is_closed(g));
    }
    if wants(CheckKind::F2) {
        let (g, lattice) = built.as_ref().expect("oracle built");
        let brute = lattice_oracle::count_factorizations(g, lattice);
        let theorem3 = closedform::f2(t, p);
        report.compare("f2.theorem3_vs_oracle", brute, &theorem3);
        report.compare("f2.mobius_vs_oracle", brute, mobius_engine::f2_via_mobius(t, p));
        let sym = closedform::theorem3_generic(t, &crate::exactpoly::IntPolynomial::p())
            .map_err(|e| usage(e.to_string()))?;
        report.compare("f2.symbolic_eval", &theorem3, sym.eval(&p_big));
        let [a, b, c] = t.exponents();
        if a == b && b == c {
            let c4 = closedform::corollary4_generic(a, &p_big).map_err(|e| usage(e.to_string()))?;
            report.compare("f2.corollary4", &theorem3, c4);
        }
    }
    if wants(CheckKind::Hall) {
        let (g, lattice) = built.as_ref().expect("oracle built");
        report.extend(lattice_oracle::verify_hall(g, lattice));
    }
    if wants(CheckKind::Eq2) {
        let (g, lattice) = built.as_ref().expect("oracle built");
        report.extend(lattice_oracle::verify_eq2_forms(g, lattice));
    }
    if wants(CheckKind::Census) {
        for k in [1, 2] {
            let census = mobius_engine::quotient_type_census(t, k, p);
            let expected = mobius_engine::expected_census(t, k, p);
            report.compare(
                format!("census.k{k}"),
                render_census(&expected.entries),
                render_census(&census.entries),
            );
            if let Some((g, lattice)) = built.as_ref() {
                report.compare(
                    format!("census.k{k}.oracle"),
                    render_census(&census.entries),
                    render_census(&oracle_census(t, k, g, lattice)),
                );
            }
        }
        let socle = &mobius_engine::enumerate_subspaces(3, 3, p)[0];
        let [a, b, c] = t.exponents();
        let phi = GroupType::new(a - 1, b - 1, c - 1).expect("descending");
        let q = mobius_engine::quotient_type(t, socle, p).map_err(|e| usage(e.to_string()))?;
        report.compare("census.full_socle", phi, q);
    }
    Ok(report)
}

fn render_census(entries: &std::collections::BTreeMap<GroupType, u64>) -> String {
    entries
        .iter()
        .map(|(t, n)| format!("({t}):{n}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Quotient types by socle subgroups of order `p^k`, computed in the explicit group.
fn oracle_census(
    t: GroupType,
    k: usize,
    g: &ConcreteGroup,
    lattice: &Lattice,
) -> std::collections::BTreeMap<GroupType, u64> {
    let p = g.p();
    let lambdas = t.exponents();
    let mut out = std::collections::BTreeMap::new();
    for e in mobius_engine::enumerate_subspaces(t.rank(), k, p) {
        let gens: Vec<usize> = e
            .basis()
            .iter()
            .map(|row| {
                g.index(std::array::from_fn(|j| {
                    if lambdas[j] == 0 {
                        0
                    } else {
                        p.pow(lambdas[j] - 1) * row[j]
                    }
                }))
            })
            .collect();
        let trivial = &lattice.get(lattice.bottom()).members;
        let members = g.join(trivial, &gens);
        let id = lattice.find(&members).expect("lattice is complete");
        *out.entry(lattice_oracle::quotient_type(g, lattice.get(id))).or_insert(0) += 1;
    }
    out
}

/// One row of `pgf table`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    #[serde(rename = "type")]
    pub group_type: [u32; 3],
    pub p: u64,
    pub f: String,
    pub f2_theorem3: String,
    pub f2_mobius: String,
    pub f2_oracle: Option<String>,
}

impl TableRow {
    pub fn consistent(&self) -> bool {
        self.f2_theorem3 == self.f2_mobius
            && self.f2_oracle.as_ref().is_none_or(|o| *o == self.f2_theorem3)
    }
}

pub fn table_rows(max_lambda: u32, primes: &[u64], max_order: u64) -> Result<Vec<TableRow>, CliError> {
    if primes.is_empty() {
        return Err(usage("--primes must list at least one prime"));
    }
    for &p in primes {
        check_prime(p)?;
    }
    let mut rows = Vec::new();
    for t in GroupType::grid(max_lambda).into_iter().filter(|t| t.rank() > 0) {
        for &p in primes {
            let f2_oracle = match lattice_oracle::build_group(t, p, max_order) {
                Ok(g) => {
                    let lattice = lattice_oracle::all_subgroups(&g);
                    Some(lattice_oracle::count_factorizations(&g, &lattice).to_string())
                }
                Err(OracleError::TooLarge { .. }) => None,
                Err(e) => return Err(e.into()),
            };
            rows.push(TableRow {
                group_type: t.exponents(),
                p,
                f: closedform::subgroup_count(t, p).to_string(),
                f2_theorem3: closedform::f2(t, p).to_string(),
                f2_mobius: mobius_engine::f2_via_mobius(t, p).to_string(),
                f2_oracle,
            });
        }
    }
    Ok(rows)
}

pub fn render_table(rows: &[TableRow], format: Format) -> String {
    const HEADER: [&str; 8] = [
        "lambda1", "lambda2", "lambda3", "p", "f", "f2_theorem3", "f2_mobius", "f2_oracle",
    ];
    let cells = |r: &TableRow| -> Vec<String> {
        let [a, b, c] = r.group_type;
        vec![
            a.to_string(),
            b.to_string(),
            c.to_string(),
            r.p.to_string(),
            r.f.clone(),
            r.f2_theorem3.clone(),
            r.f2_mobius.clone(),
            r.f2_oracle.clone().unwrap_or_default(),
        ]
    };
    let mut out = String::new();
    match format {
        Format::Json => {
            out.push_str(&serde_json::to_string(rows).expect("serializable"));
            out.push('\n');
        }
        Format::Csv => {
            out.push_str(&HEADER.join(","));
            out.push('\n');
            for r in rows {
                out.push_str(&cells(r).join(","));
                out.push('\n');
            }
        }
        Format::Text => {
            let body: Vec<Vec<String>> = rows.iter().map(cells).collect();
            let widths: Vec<usize> = (0..HEADER.len())
                .map(|i| body.iter().map(|r| r[i].len()).chain([HEADER[i].len()]).max().unwrap_or(0))
                .collect();
            let header: Vec<String> = HEADER.iter().map(|h| h.to_string()).collect();
            for line in std::iter::once(&header).chain(&body) {
                let padded: Vec<String> = line
                    .iter()
                    .zip(&widths)
                    .map(|(cell, w)| format!("{cell:>w$}"))
                    .collect();
                let _ = writeln!(out, "{}", padded.join("  ").trim_end());
            }
        }
    }
    out
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(rendered.as_bytes());
                return EXIT_OK;
            }
            let _ = err.write_all(rendered.as_bytes());
            return EXIT_USAGE;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let emit = |out: &mut dyn Write, s: &str| {
        out.write_all(s.as_bytes())
            .map_err(|e| usage(format!("cannot write output: {e}")))
    };
    match command {
        Command::Count(args) => {
            let rec = cmd_count(&args)?;
            emit(out, &rec.render(args.format))?;
            Ok(EXIT_OK)
        }
        Command::F2 { value, method, cap } => {
            let rec = cmd_f2(&value, method, cap.max_order)?;
            emit(out, &rec.render(value.format))?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            group_type,
            p,
            checks,
            cap,
        } => {
            let report = cmd_verify(group_type, p, checks.as_deref(), cap.max_order)?;
            emit(out, &format!("{}\n", serde_json::to_string(&report).expect("serializable")))?;
            Ok(if report.overall { EXIT_OK } else { EXIT_MISMATCH })
        }
        Command::Table {
            max_lambda,
            primes,
            format,
            cap,
        } => {
            let rows = table_rows(max_lambda, &primes, cap.max_order)?;
            emit(out, &render_table(&rows, format))?;
            let bad: Vec<&TableRow> = rows.iter().filter(|r| !r.consistent()).collect();
            for r in &bad {
                let _ = writeln!(err, "methods disagree for type {:?} at p={}", r.group_type, r.p);
            }
            Ok(if bad.is_empty() { EXIT_OK } else { EXIT_MISMATCH })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("pgf").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn count_examples() {
        assert_eq!(call(&["count", "--type", "3,2,1", "--p", "2"]).1, "81\n");
        assert_eq!(call(&["count", "--type", "1,1,0", "--symbolic"]).1, "p+3\n");
        let (code, _, err) = call(&["count", "--type", "2,3,1", "--p", "2"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("descending"), "{err}");
    }

    #[test]
    fn p_and_symbolic_are_exclusive() {
        assert_eq!(call(&["count", "--type", "1,1,0"]).0, EXIT_USAGE);
        assert_eq!(call(&["count", "--type", "1,1,0", "--p", "2", "--symbolic"]).0, EXIT_USAGE);
        assert_eq!(call(&["count", "--type", "1,1,0", "--p", "9"]).0, EXIT_USAGE);
    }

    #[test]
    fn f2_examples() {
        let (code, out, _) = call(&["f2", "--type", "3,2,1", "--symbolic", "--method", "theorem3"]);
        assert_eq!(code, 0);
        assert_eq!(out, "9p^6+15p^5+21p^4+16p^3+20p^2+11p+13\n");
        assert_eq!(
            call(&["f2", "--type", "2,2,2", "--symbolic"]).1,
            "5p^8+8p^7+16p^6+15p^5+21p^4+16p^3+20p^2+11p+13\n"
        );
        assert_eq!(call(&["f2", "--type", "3,2,1", "--p", "2", "--method", "oracle"]).1, "1635\n");
        assert_eq!(call(&["f2", "--type", "3,2,1", "--p", "2", "--method", "mobius"]).1, "1635\n");
        assert_eq!(call(&["f2", "--type", "3,2,1", "--symbolic", "--method", "mobius"]).0, EXIT_USAGE);
    }

    #[test]
    fn f2_oracle_cap() {
        let (code, _, err) = call(&["f2", "--type", "2,2,2", "--p", "5", "--method", "oracle"]);
        assert_eq!(code, EXIT_CAP);
        assert!(err.contains("15625"), "{err}");
        let (code, out, _) = call(&["f2", "--type", "3,3,0", "--p", "2", "--method", "oracle", "--max-order", "64"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, format!("{}\n", closedform::f2(GroupType::new(3, 3, 0).unwrap(), 2)));
        assert_eq!(call(&["f2", "--type", "3,3,0", "--p", "2", "--method", "oracle", "--max-order", "63"]).0, EXIT_CAP);
    }

    #[test]
    fn json_and_csv_values() {
        let (_, out, _) = call(&["f2", "--type", "3,2,1", "--p", "2", "--format", "json"]);
        assert_eq!(
            out,
            "{\"type\":[3,2,1],\"p\":2,\"quantity\":\"f2\",\"method\":\"theorem3\",\"value\":\"1635\"}\n"
        );
        let (_, out, _) = call(&["count", "--type", "1,1,0", "--symbolic", "--format", "json"]);
        assert_eq!(
            out,
            "{\"type\":[1,1,0],\"p\":null,\"quantity\":\"f\",\"method\":\"eq3\",\"value\":\"p+3\"}\n"
        );
        let (_, out, _) = call(&["count", "--type", "3,2,1", "--p", "2", "--format", "csv"]);
        assert_eq!(out, "lambda1,lambda2,lambda3,p,quantity,method,value\n3,2,1,2,f,eq3,81\n");
    }

    #[test]
    fn verify_examples() {
        let (code, out, _) = call(&["verify", "--type", "3,2,1", "--p", "2"]);
        assert_eq!(code, EXIT_OK, "{out}");
        let report: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(report["overall"], true);
        let names: Vec<&str> = report["checks"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| c["name"].as_str().unwrap())
            .collect();
        for want in ["count.formula_vs_oracle", "f2.mobius_vs_oracle", "hall", "eq2.lattice_form", "census.k1", "census.full_socle"] {
            assert!(names.contains(&want), "{want} missing from {names:?}");
        }

        let (code, out, _) = call(&["verify", "--type", "1,1,1", "--p", "3", "--checks", "hall,eq2"]);
        assert_eq!(code, EXIT_OK, "{out}");
        assert!(!out.contains("census"));

        assert_eq!(call(&["verify", "--type", "3,2,1", "--p", "1"]).0, EXIT_USAGE);
        assert_eq!(call(&["verify", "--type", "2,1,0", "--p", "2", "--checks", "census"]).0, EXIT_USAGE);
        assert_eq!(call(&["verify", "--type", "2,2,2", "--p", "5"]).0, EXIT_CAP);
        // census alone needs no oracle
        assert_eq!(call(&["verify", "--type", "2,2,2", "--p", "5", "--checks", "census"]).0, EXIT_OK);
    }

    #[test]
    fn table_examples() {
        let (code, out, _) = call(&["table", "--max-lambda", "2", "--primes", "2", "--format", "csv"]);
        assert_eq!(code, 0);
        let mut lines = out.lines();
        assert_eq!(lines.next(), Some("lambda1,lambda2,lambda3,p,f,f2_theorem3,f2_mobius,f2_oracle"));
        let f = closedform::subgroup_count(GroupType::new(2, 2, 2).unwrap(), 2);
        let f2 = closedform::f2(GroupType::new(2, 2, 2).unwrap(), 2);
        assert!(out.contains(&format!("2,2,2,2,{f},{f2},{f2},{f2}\n")), "{out}");

        let (code, out, _) = call(&["table", "--max-lambda", "1", "--primes", "2,3", "--format", "json"]);
        assert_eq!(code, 0);
        let rows: Vec<serde_json::Value> = serde_json::from_str(&out).unwrap();
        let types: Vec<String> = rows.iter().map(|r| format!("{}@{}", r["type"], r["p"])).collect();
        assert_eq!(
            types,
            ["[1,0,0]@2", "[1,0,0]@3", "[1,1,0]@2", "[1,1,0]@3", "[1,1,1]@2", "[1,1,1]@3"]
        );

        assert_eq!(call(&["table", "--max-lambda", "1", "--primes", ""]).0, EXIT_USAGE);
        assert_eq!(call(&["table", "--max-lambda", "1"]).0, EXIT_USAGE);
        assert_eq!(call(&["table", "--max-lambda", "1", "--primes", "4"]).0, EXIT_USAGE);
    }

    #[test]
    fn table_omits_oracle_above_cap() {
        let rows = table_rows(1, &[2, 3], 10).unwrap();
        let with_oracle: Vec<_> = rows
            .iter()
            .filter(|r| r.f2_oracle.is_some())
            .map(|r| (r.group_type, r.p))
            .collect();
        assert_eq!(
            with_oracle,
            [([1, 0, 0], 2), ([1, 0, 0], 3), ([1, 1, 0], 2), ([1, 1, 0], 3), ([1, 1, 1], 2)]
        );
        assert!(rows.iter().all(TableRow::consistent));
        let csv = render_table(&rows, Format::Csv);
        assert!(csv.contains("\n1,1,1,3,"), "{csv}");
        assert!(csv.lines().any(|l| l.starts_with("1,1,1,3,") && l.ends_with(',')));
    }

    #[test]
    fn inconsistent_rows_are_flagged() {
        let mut row = table_rows(1, &[2], DEFAULT_MAX_ORDER).unwrap().remove(0);
        assert!(row.consistent());
        row.f2_oracle = Some("0".into());
        assert!(!row.consistent());
    }
}
