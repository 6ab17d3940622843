//! `contactlie`: check contact and Frobenius structures on Lie algebras given
//! in the `.lie` text format.
//!
//! Exit status: 0 when every asserted check passes, 1 when a check fails,
//! 2 on input errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde::Serialize;

use contactlie::catalog::{self, Filter};
use contactlie::contact::{
    contact_exists, format_scaled, frobenius_exists, is_contact_form, is_exact_symplectic, kernel_radical_check,
    liouville_vector, ExistenceVerdict,
};
use contactlie::construct::{check_extension_cocycle, contactization_condition, contactize};
use contactlie::format::{emit_lie, parse_assignment, parse_lie, parse_one_form, parse_scalar, LieFile};
use contactlie::obstruct::{center_obstruction, codim1_abelian_obstruction, rank_one_bracket_detect};
use contactlie::report::{Check, Report, Verdict};
use contactlie::{Algebra, Error, Form, Scalar};

#[derive(Parser)]
#[command(name = "contactlie", version, about = "Contact and Frobenius structures on Lie algebras")]
struct Cli {
    /// Emit the machine-readable JSON report instead of the table.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Contact,
    Frobenius,
}

#[derive(Subcommand)]
enum Command {
    /// Jacobi identity, structure summary and verdicts for given 1-forms.
    Check {
        file: PathBuf,
        /// 1-form such as "e1* + (1-p) e3*"; repeatable.
        #[arg(long = "form")]
        forms: Vec<String>,
        /// Parameter values, e.g. p=1,q=2.
        #[arg(long)]
        params: Option<String>,
    },
    /// Decide whether some contact (or Frobenius) form exists.
    Exists {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "contact")]
        mode: Mode,
        #[arg(long)]
        params: Option<String>,
        /// Include the generic polynomial in the report.
        #[arg(long)]
        print_polynomial: bool,
    },
    /// Build the contactization from the file's extension block.
    Contactize {
        file: PathBuf,
        /// Primitive α of the exact symplectic form on the base.
        #[arg(long = "form")]
        form: String,
        /// Value of s; overrides `extend s` in the file.
        #[arg(long)]
        s: Option<String>,
        /// Write the constructed algebra to this path.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the golden suite over the built-in catalog.
    Suite {
        #[arg(long)]
        filter: Option<String>,
    },
    /// Browse the built-in catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List entries, e.g. --filter solvable,dim=5.
    List {
        #[arg(long)]
        filter: Option<String>,
    },
    /// Print an entry in the `.lie` format.
    Export { id: String },
}

#[derive(Serialize, Default)]
struct Output {
    command: Vec<String>,
    status: &'static str,
    exit_code: u8,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    reports: Vec<Report>,
    #[serde(skip_serializing_if = "Option::is_none")]
    entries: Option<Vec<EntrySummary>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    emitted: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    /// Already written to a file; not echoed in the table output.
    #[serde(skip)]
    quiet_emit: bool,
}

#[derive(Serialize)]
struct EntrySummary {
    id: String,
    title: String,
    dim: usize,
    params: Vec<String>,
    solvable: bool,
    nilpotent: bool,
    nondecomposable: Option<bool>,
    contact: Option<bool>,
    frobenius: Option<bool>,
}

/// Error from bad input; exits with status 2.
struct InputError(String);

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

type CmdResult = Result<Output, InputError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command: Vec<String> = std::env::args().skip(1).collect();
    let json = cli.json;
    let result = match cli.command {
        Command::Check { file, forms, params } => cmd_check(&file, &forms, params.as_deref()),
        Command::Exists {
            file,
            mode,
            params,
            print_polynomial,
        } => cmd_exists(&file, mode, params.as_deref(), print_polynomial),
        Command::Contactize { file, form, s, output } => cmd_contactize(&file, &form, s.as_deref(), output.as_deref()),
        Command::Suite { filter } => cmd_suite(filter.as_deref()),
        Command::Catalog { action } => match action {
            CatalogAction::List { filter } => cmd_list(filter.as_deref()),
            CatalogAction::Export { id } => cmd_export(&id),
        },
    };
    let mut output = match result {
        Ok(out) => out,
        Err(InputError(message)) => Output {
            status: "error",
            exit_code: 2,
            error: Some(message),
            ..Output::default()
        },
    };
    output.command = command;
    if output.status.is_empty() {
        let failed = output.reports.iter().any(|r| !r.passed());
        output.status = if failed { "fail" } else { "pass" };
        output.exit_code = u8::from(failed);
    }
    if json {
        println!("{}", serde_json::to_string_pretty(&output).expect("serializable report"));
    } else {
        print_human(&output);
    }
    ExitCode::from(output.exit_code)
}

fn print_human(out: &Output) {
    for r in &out.reports {
        print!("{r}");
    }
    if let Some(entries) = &out.entries {
        let width = entries.iter().map(|e| e.id.len()).max().unwrap_or(0);
        for e in entries {
            let mut flags = Vec::new();
            if e.solvable {
                flags.push("solvable");
            }
            if e.nilpotent {
                flags.push("nilpotent");
            }
            if e.nondecomposable == Some(true) {
                flags.push("nondecomposable");
            }
            if !e.params.is_empty() {
                flags.push("parameterized");
            }
            println!("{:width$}  dim {:2}  {:40}  {}", e.id, e.dim, flags.join(","), e.title);
        }
    }
    if !out.reports.is_empty() {
        let checks: usize = out.reports.iter().map(|r| r.checks.len()).sum();
        let failed: usize = out.reports.iter().map(|r| r.failures().count()).sum();
        println!("{}: {checks} checks, {failed} failed", out.status);
    }
    if let Some(text) = out.emitted.as_ref().filter(|_| !out.quiet_emit) {
        if !out.reports.is_empty() {
            println!();
        }
        print!("{text}");
    }
    if let Some(e) = &out.error {
        eprintln!("error: {e}");
    }
}

fn load(path: &Path) -> Result<LieFile, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    parse_lie(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

/// Substitute `--params` after checking the constraints hold there.
fn specialize(file: &LieFile, params: Option<&str>) -> Result<(Algebra, contactlie::Assignment), InputError> {
    let Some(text) = params else {
        return Ok((file.algebra.clone(), Default::default()));
    };
    let assignment = parse_assignment(text)?;
    for name in assignment.keys() {
        if !file.algebra.params().contains(name) {
            return Err(InputError(format!("`{name}` is not a parameter of the algebra")));
        }
    }
    if !file.algebra.satisfies_constraints(&assignment)? {
        return Err(InputError(format!("parameters {text} violate a declared constraint")));
    }
    Ok((file.algebra.substitute(&assignment)?, assignment))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn structure_report(l: &Algebra) -> Result<Report, InputError> {
    let mut report = Report::new("structure");
    let jacobi = l.jacobi_check();
    let mut c = Check::assert("jacobi", jacobi.passed(), if jacobi.passed() { "holds" } else { "FAILS" });
    if let Some(((i, j, k), v)) = jacobi.failures.first() {
        let labels = l.labels();
        c = c
            .with("triple", format!("({},{},{})", labels[*i], labels[*j], labels[*k]))
            .with("cyclic_sum", l.format_vector(v));
    }
    report.push(c);
    report.push(Check::info("dimension", l.dim().to_string()));
    if !l.params().is_empty() {
        report.push(Check::info("parameters", l.params().join(" ")));
    }
    if !jacobi.passed() {
        return Ok(report);
    }
    let center = settle("center", l.center().map(|center| {
        let basis: Vec<String> = center.basis().iter().map(|v| l.format_vector(v)).collect();
        let c = Check::info("center", format!("dim {}", center.dim()));
        if basis.is_empty() {
            c
        } else {
            c.with("basis", basis.join(", "))
        }
    }))?;
    report.push(center);
    let dims = |series: Vec<contactlie::Subspace<Scalar>>| series.iter().map(|s| s.dim().to_string()).collect::<Vec<_>>().join(" > ");
    report.push(settle("derived-series", l.derived_series().map(|s| Check::info("derived-series", dims(s))))?);
    report.push(settle("lower-central-series", l.lower_central_series().map(|s| Check::info("lower-central-series", dims(s))))?);
    report.push(settle("solvable", l.is_solvable().map(|b| Check::info("solvable", yes_no(b))))?);
    report.push(settle("nilpotent", l.is_nilpotent().map(|b| Check::info("nilpotent", yes_no(b))))?);
    report.push(Check::info("unimodular", yes_no(l.is_unimodular())));
    Ok(report)
}

/// Rank instability leaves a summary undetermined instead of aborting the run.
fn settle(name: &str, result: contactlie::Result<Check>) -> Result<Check, InputError> {
    match result {
        Ok(c) => Ok(c),
        Err(e @ Error::RankInstability { .. }) => Ok(Check::info(name, "undetermined").with("reason", e)),
        Err(e) => Err(e.into()),
    }
}

fn parse_form(l: &Algebra, text: &str) -> Result<Form, InputError> {
    parse_one_form(text, l.labels(), Some(l.params())).map_err(|e| InputError(format!("form `{text}`: {e}")))
}

fn cmd_check(path: &Path, forms: &[String], params: Option<&str>) -> CmdResult {
    let file = load(path)?;
    let (l, assignment) = specialize(&file, params)?;
    let forms: Vec<Form> = forms
        .iter()
        .map(|f| parse_form(&file.algebra, f).map(|f| f.substitute(&assignment)))
        .collect::<Result<_, _>>()?;
    let structure = structure_report(&l)?;
    let jacobi_ok = structure.passed();
    let mut reports = vec![structure];
    if jacobi_ok {
        for eta in &forms {
            let shown = eta.format_with(l.labels());
            let mut report = Report::new(format!("form {shown}"));
            if l.dim() % 2 == 1 {
                let v = is_contact_form(&l, eta)?;
                let mut c = Check::assert("contact", v.is_contact(), yes_no(v.is_contact()))
                    .with("top_coefficient", &v.top_coefficient);
                if let Some(r) = &v.reeb {
                    c = c.with("reeb", format_scaled(&l, r));
                }
                report.push(c);
                if v.is_contact() {
                    report.extend(kernel_radical_check(&l, eta)?);
                }
            } else {
                let v = is_exact_symplectic(&l, eta)?;
                let mut c = Check::assert("frobenius", v.is_symplectic(), yes_no(v.is_symplectic()))
                    .with("top_coefficient", &v.top_coefficient);
                if v.is_symplectic() {
                    c = c.with("liouville", format_scaled(&l, &liouville_vector(&l, eta)?));
                }
                report.push(c);
            }
            reports.push(report);
        }
    }
    Ok(Output {
        reports,
        ..Output::default()
    })
}

fn cmd_exists(path: &Path, mode: Mode, params: Option<&str>, print_polynomial: bool) -> CmdResult {
    let file = load(path)?;
    let (l, _) = specialize(&file, params)?;
    let odd = l.dim() % 2 == 1;
    match (mode, odd) {
        (Mode::Contact, false) => {
            return Err(InputError(format!("contact forms need odd dimension, algebra has dimension {}", l.dim())))
        }
        (Mode::Frobenius, true) => {
            return Err(InputError(format!("Frobenius forms need even dimension, algebra has dimension {}", l.dim())))
        }
        _ => {}
    }
    let jacobi = l.jacobi_check();
    if !jacobi.passed() {
        let mut report = Report::new("structure");
        report.push(Check::fail("jacobi", "FAILS"));
        return Ok(Output {
            reports: vec![report],
            ..Output::default()
        });
    }
    let verdict: ExistenceVerdict = match mode {
        Mode::Contact => contact_exists(&l)?,
        Mode::Frobenius => frobenius_exists(&l)?,
    };
    let kind = verdict.kind.name();
    let mut report = Report::new(format!("{kind} existence"));
    let detail = if verdict.exists {
        "yes".to_string()
    } else if verdict.polynomial.is_zero() {
        "no (P ≡ 0)".to_string()
    } else {
        "no".to_string()
    };
    let mut c = Check::info("exists", detail);
    if print_polynomial {
        c = c
            .with("polynomial", &verdict.polynomial)
            .with("variables", verdict.variables.join(" "));
    }
    if let Some(sample) = verdict.sample.as_ref().filter(|s| !s.is_empty()) {
        c = c.with("sample", catalog::format_assignment(sample));
    }
    report.push(c);
    if let Some(w) = &verdict.witness {
        let at = verdict.sample.clone().unwrap_or_default();
        let inst = if at.is_empty() { l.clone() } else { l.substitute(&at)? };
        let w = w.to_symbolic();
        let ok = match mode {
            Mode::Contact => is_contact_form(&inst, &w)?.is_contact(),
            Mode::Frobenius => is_exact_symplectic(&inst, &w)?.is_symplectic(),
        };
        report.push(Check::assert("witness", ok, w.format_with(l.labels())));
    }
    let inst = match &verdict.sample {
        Some(s) if !s.is_empty() => l.substitute(s)?,
        _ => l.clone(),
    };
    let mut obstructions = vec![center_obstruction(&inst)?, codim1_abelian_obstruction(&inst, &[])?];
    if inst.dim() >= 2 {
        obstructions.push(rank_one_bracket_detect(&inst)?.0);
    }
    for o in obstructions.iter().filter(|o| o.applies && (o.blocks_contact || o.blocks_frobenius)) {
        report.push(Check::assert(format!("obstruction: {}", o.name), o.agrees(), o.detail.clone()));
    }
    Ok(Output {
        reports: vec![report],
        ..Output::default()
    })
}

fn cmd_contactize(path: &Path, alpha: &str, s: Option<&str>, output: Option<&Path>) -> CmdResult {
    let file = load(path)?;
    let h = &file.algebra;
    let mut data = file
        .extension
        .clone()
        .ok_or_else(|| InputError(format!("{}: no `extend` block", path.display())))?;
    if let Some(s) = s {
        data.s = parse_scalar(s, None).map_err(|e| InputError(format!("--s: {e}")))?;
    }
    let alpha = parse_form(h, alpha)?;
    let cocycle = check_extension_cocycle(h, &data.psi, &data.f)?;
    if !cocycle.passed() {
        let names: Vec<String> = cocycle.failures().map(|c| format!("{} ({})", c.name, c.detail)).collect();
        return Err(InputError(format!("extension data violates the cocycle conditions: {}", names.join("; "))));
    }
    let mut generic = data.clone();
    generic.s = Scalar::var("s");
    let locus = contactization_condition(h, &alpha, &generic)?;
    let result = match contactize(h, &alpha, &data) {
        Ok(r) => r,
        Err(Error::Inadmissible(_)) => {
            return Err(InputError(format!("inadmissible s = {}: admissibility locus is {locus} != 0", data.s)));
        }
        Err(e) => return Err(e.into()),
    };
    let g = &result.algebra;
    let mut report = Report::new("contactization");
    report.extend(cocycle);
    report.push(Check::info("admissibility", format!("{locus} != 0")).with("s", &data.s));
    report.push(Check::assert("jacobi", g.jacobi_check().passed(), format!("dimension {}", g.dim())));
    let mut c = Check::assert("contact", result.verdict.is_contact(), yes_no(result.verdict.is_contact()))
        .with("form", result.form.format_with(g.labels()))
        .with("top_coefficient", &result.verdict.top_coefficient);
    if let Some(r) = &result.verdict.reeb {
        c = c.with("reeb", format_scaled(g, r));
    }
    report.push(c);
    report.push(Check::assert(
        "restricts-to-base",
        result.restricts_to_base_form,
        format!("restriction to the base is {}", alpha.format_with(h.labels())),
    ));
    let emitted = emit_lie(g, None);
    if let Some(out) = output {
        std::fs::write(out, &emitted).map_err(|e| InputError(format!("{}: {e}", out.display())))?;
    }
    Ok(Output {
        reports: vec![report],
        emitted: Some(emitted),
        quiet_emit: output.is_some(),
        ..Output::default()
    })
}

fn cmd_suite(filter: Option<&str>) -> CmdResult {
    let filter = Filter::parse(filter.unwrap_or(""))?;
    let reports = catalog::list(&filter)
        .into_iter()
        .map(catalog::golden_report)
        .collect::<Result<Vec<_>, _>>()?;
    let mut summary = Report::new("summary");
    let count = |v: Verdict| reports.iter().flat_map(|r| &r.checks).filter(|c| c.verdict == v).count();
    summary.push(Check::info(
        "totals",
        format!("{} entries, {} passed, {} failed, {} findings", reports.len(), count(Verdict::Pass), count(Verdict::Fail), count(Verdict::Info)),
    ));
    let mut all = reports;
    all.push(summary);
    Ok(Output {
        reports: all,
        ..Output::default()
    })
}

fn cmd_list(filter: Option<&str>) -> CmdResult {
    let filter = Filter::parse(filter.unwrap_or(""))?;
    let entries = catalog::list(&filter)
        .into_iter()
        .map(|e| EntrySummary {
            id: e.id.clone(),
            title: e.title.clone(),
            dim: e.dim(),
            params: e.algebra.params().to_vec(),
            solvable: e.flags.solvable,
            nilpotent: e.flags.nilpotent,
            nondecomposable: e.flags.nondecomposable,
            contact: e.contact,
            frobenius: e.frobenius,
        })
        .collect();
    Ok(Output {
        entries: Some(entries),
        ..Output::default()
    })
}

fn cmd_export(id: &str) -> CmdResult {
    let entry = catalog::get(id)?;
    Ok(Output {
        emitted: Some(entry.export()),
        ..Output::default()
    })
}
