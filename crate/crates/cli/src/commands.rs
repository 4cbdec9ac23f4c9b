//! Argument parsing and the subcommands.

use std::ffi::OsString;
use std::fmt::Display;

use clap::{Parser, Subcommand, ValueEnum};
use doubled_bcd::{enumerate_doubled, BcdError, DoubledFilter};
use lie_core::{Family, LieType, RealForm, ThetaSet, Weight};
use monoid::{
    m_table_membership, oracle_invariant_dim, primitive_basis, primitive_labels, table1_row,
    tableau_invariant_dim, MonoidError, Verdict,
};
use oracle::{weight_multiplicities_budget, CharacterTable, OracleError};
use serde::Serialize;
use serde_json::json;
use young_a::{enumerate_fillings_a, FillingFilter, SkewDiagram, YoungDiagram, YoungError};

use crate::checks::{self, Check, Status, BOX_BUDGET, DIM_BUDGET};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "cli", version, about = "Levi-invariant vectors in irreducible representations of real simple Lie algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// output format
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// maximum number of boxes for tableau enumeration
    #[arg(long, default_value_t = BOX_BUDGET, global = true)]
    pub budget: usize,
    /// worker threads (0 = one per core)
    #[arg(long, default_value_t = 0, global = true)]
    pub jobs: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide membership of a highest weight in the classification table.
    Classify {
        form_pos: Option<String>,
        lambda_pos: Option<String>,
        #[arg(long)]
        form: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// also compute the invariant dimension by the Weyl-group oracle
        #[arg(long)]
        oracle: bool,
        /// print the table row that applies to the form
        #[arg(long)]
        table1: bool,
    },
    /// List the tableaux of a shape passing the filters, one per line.
    Enumerate {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        shape: String,
        /// order of the alphabet in type A, when --type is just "A"
        #[arg(long)]
        n: Option<usize>,
        /// total weight zero (type B, C, D)
        #[arg(long)]
        null: bool,
        /// every symbol equally often (type A)
        #[arg(long)]
        balanced: bool,
        /// codominance with respect to these simple roots
        #[arg(long)]
        theta: Option<String>,
        /// sign of a type D tableau
        #[arg(long, allow_hyphen_values = true)]
        sign: Option<i8>,
    },
    /// Weight multiplicities of V_lambda computed from tableaux.
    Character {
        #[arg(long = "type")]
        ty: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// use Freudenthal's formula instead
        #[arg(long)]
        oracle: bool,
    },
    /// Dimension of the Levi-invariant subspace of V_lambda.
    InvariantDim {
        #[arg(long)]
        form: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        oracle: bool,
    },
    /// Primitive elements of the monoid of radical dominant weights.
    PrimitiveBasis {
        #[arg(long = "type")]
        ty: String,
    },
    /// Run a verification sweep.
    Verify {
        #[arg(value_enum)]
        scope: Scope,
        #[arg(long = "type")]
        ty: Option<String>,
        /// weight bound: lambda_1 in types B, C, D, half of sum |lambda_i| in type A
        #[arg(long)]
        lmax: Option<i64>,
        /// family parameter bound
        #[arg(long, default_value_t = 4)]
        kmax: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Scope {
    FormSweep,
    Character,
    Admissible,
    Families,
    PrimitiveBasis,
}

#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

fn usage(e: impl Display) -> Failure {
    Failure { code: EXIT_USAGE, message: e.to_string() }
}

fn budget_or_usage(e: impl Display, budget: bool) -> Failure {
    Failure { code: if budget { EXIT_BUDGET } else { EXIT_USAGE }, message: e.to_string() }
}

fn from_monoid(e: MonoidError) -> Failure {
    let b = e.is_budget();
    budget_or_usage(e, b)
}

fn from_young(e: YoungError) -> Failure {
    let b = matches!(e, YoungError::Budget { .. });
    budget_or_usage(e, b)
}

fn from_bcd(e: BcdError) -> Failure {
    let b = matches!(e, BcdError::Budget { .. } | BcdError::Young(YoungError::Budget { .. }));
    budget_or_usage(e, b)
}

fn from_oracle(e: OracleError) -> Failure {
    let b = matches!(e, OracleError::Budget { .. });
    budget_or_usage(e, b)
}

/// Output text and exit code of a run.
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

fn parse_form(s: &str) -> Result<RealForm, Failure> {
    s.parse().map_err(|e| usage(format!("bad form '{s}': {e}")))
}

fn parse_weight(s: &str) -> Result<Weight, Failure> {
    s.parse().map_err(|e| usage(format!("bad weight '{s}': {e}")))
}

fn parse_type(s: &str) -> Result<LieType, Failure> {
    s.parse().map_err(|e| usage(format!("bad type '{s}': {e}")))
}

fn parse_theta(s: &str) -> Result<ThetaSet, Failure> {
    ThetaSet::parse(s).map_err(|e| usage(format!("bad theta '{s}': {e}")))
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                return Outcome { stdout: text, code };
            }
            eprint!("{text}");
            return Outcome { stdout: String::new(), code };
        }
    };
    if cli.jobs > 0 {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global();
    }
    match dispatch(&cli) {
        Ok(o) => o,
        Err(f) => {
            eprintln!("error: {}", f.message);
            Outcome { stdout: String::new(), code: f.code }
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome, Failure> {
    let fmt = cli.format;
    let ok = |stdout: String| Ok(Outcome { stdout, code: EXIT_OK });
    match &cli.command {
        Command::Classify { form_pos, lambda_pos, form, lambda, oracle, table1 } => {
            let form_s = form.as_ref().or(form_pos.as_ref()).ok_or_else(|| usage("missing form"))?;
            let form = parse_form(form_s)?;
            if *table1 {
                return ok(line(table1_row(&form).map_err(from_monoid)?));
            }
            let lambda_s = lambda.as_ref().or(lambda_pos.as_ref()).ok_or_else(|| usage("missing weight"))?;
            let lambda = parse_weight(lambda_s)?;
            let v = classify(&form, &lambda, *oracle, cli.budget)?;
            ok(render_verdict(&v, fmt))
        }
        Command::Enumerate { ty, shape, n, null, balanced, theta, sign } => {
            let theta = theta.as_deref().map(parse_theta).transpose()?;
            ok(enumerate(ty, shape, *n, *null, *balanced, theta, *sign, cli.budget, fmt)?)
        }
        Command::Character { ty, lambda, oracle } => {
            let ty = parse_type(ty)?;
            let lambda = parse_weight(lambda)?;
            let table = if *oracle {
                weight_multiplicities_budget(&lambda, ty, DIM_BUDGET).map_err(from_oracle)?
            } else {
                CharacterTable { entries: tableau_character(&lambda, ty, cli.budget)? }
            };
            ok(render_character(&table, fmt))
        }
        Command::InvariantDim { form, lambda, oracle } => {
            let form = parse_form(form)?;
            let lambda = parse_weight(lambda)?;
            let tab = match tableau_invariant_dim(&form, &lambda, cli.budget) {
                Ok(d) => Some(d),
                Err(MonoidError::Unsupported(_)) if *oracle => None,
                Err(e) => return Err(from_monoid(e)),
            };
            let orc = if *oracle { Some(oracle_invariant_dim(&form, &lambda, DIM_BUDGET).map_err(from_monoid)?) } else { None };
            let rec = json!({"form": form.to_string(), "lambda": lambda.to_string(), "dim_tableaux": tab, "dim_oracle": orc});
            let out = match fmt {
                Format::Json => line(rec.to_string()),
                Format::Tsv => format!("form\tlambda\tdim_tableaux\tdim_oracle\n{form}\t{lambda}\t{}\t{}\n", opt(tab), opt(orc)),
                Format::Text => line(format!("{form} λ=({lambda}): tableaux {} oracle {}", opt(tab), opt(orc))),
            };
            ok(out)
        }
        Command::PrimitiveBasis { ty } => {
            let ty = parse_type(ty)?;
            let set = primitive_basis(ty).map_err(from_monoid)?;
            let labels = primitive_labels(ty).map_err(from_monoid)?;
            let out = match fmt {
                Format::Json => {
                    let els: Vec<_> = set
                        .elements
                        .iter()
                        .zip(&labels)
                        .map(|(w, l)| json!({"weight": w.to_string(), "labels": l}))
                        .collect();
                    line(json!({"type": ty.to_string(), "count": els.len(), "elements": els}).to_string())
                }
                _ => {
                    let mut s = if fmt == Format::Tsv { "labels\tweight\n".to_string() } else { String::new() };
                    for (w, l) in set.elements.iter().zip(&labels) {
                        let l: Vec<String> = l.iter().map(|x| x.to_string()).collect();
                        s.push_str(&format!("{}\t{w}\n", l.join(",")));
                    }
                    s
                }
            };
            ok(out)
        }
        Command::Verify { scope, ty, lmax, kmax } => {
            let ty = ty.as_deref().map(parse_type).transpose()?;
            let report = verify(*scope, ty, *lmax, *kmax)?;
            let code = report_code(&report);
            Ok(Outcome { stdout: render_report(*scope, &report, fmt), code })
        }
    }
}

fn line(s: String) -> String {
    s + "\n"
}

fn opt(x: Option<u64>) -> String {
    x.map_or_else(|| "-".to_string(), |d| d.to_string())
}

pub fn classify(form: &RealForm, lambda: &Weight, with_oracle: bool, budget: usize) -> Result<Verdict, Failure> {
    let v = m_table_membership(form, lambda).map_err(from_monoid)?;
    let dim_tableaux = match tableau_invariant_dim(form, lambda, budget) {
        Ok(d) => Some(d),
        Err(MonoidError::Unsupported(_)) => None,
        Err(e) if e.is_budget() => None,
        Err(e) => return Err(from_monoid(e)),
    };
    let dim_oracle = if with_oracle { Some(oracle_invariant_dim(form, lambda, DIM_BUDGET).map_err(from_monoid)?) } else { None };
    Ok(Verdict {
        form: *form,
        lambda: lambda.clone(),
        in_table: v.in_table,
        failed_condition: v.failed_condition,
        dim_tableaux,
        dim_oracle,
    })
}

fn render_verdict(v: &Verdict, fmt: Format) -> String {
    let cond = v.failed_condition.clone().unwrap_or_default();
    match fmt {
        Format::Json => line(serde_json::to_string(v).expect("serializable")),
        Format::Tsv => format!(
            "form\tlambda\tin_table\tfailed_condition\tdim_tableaux\tdim_oracle\n{}\t{}\t{}\t{cond}\t{}\t{}\n",
            v.form,
            v.lambda,
            v.in_table,
            opt(v.dim_tableaux),
            opt(v.dim_oracle)
        ),
        Format::Text => {
            let mut s = format!("{} λ=({}): {}", v.form, v.lambda, if v.in_table { "in table" } else { "not in table" });
            if !cond.is_empty() {
                s.push_str(&format!(", fails {cond}"));
            }
            if let Some(d) = v.dim_tableaux {
                s.push_str(&format!(", tableaux {d}"));
            }
            if let Some(d) = v.dim_oracle {
                s.push_str(&format!(", oracle {d}"));
            }
            line(s)
        }
    }
}

fn type_a_order(ty: &str, n: Option<usize>) -> Result<Option<usize>, Failure> {
    let t = ty.trim();
    if t.eq_ignore_ascii_case("A") {
        return n.map(Some).ok_or_else(|| usage("type A needs --n"));
    }
    if t.starts_with(['A', 'a']) {
        let g = parse_type(t)?;
        let order = g.rank + 1;
        if n.is_some_and(|n| n != order) {
            return Err(usage(format!("--n {} does not match {g}", n.unwrap_or_default())));
        }
        return Ok(Some(order));
    }
    Ok(None)
}

#[allow(clippy::too_many_arguments)]
fn enumerate(
    ty: &str,
    shape: &str,
    n: Option<usize>,
    null: bool,
    balanced: bool,
    theta: Option<ThetaSet>,
    sign: Option<i8>,
    budget: usize,
    fmt: Format,
) -> Result<String, Failure> {
    let mut out = String::new();
    if let Some(n) = type_a_order(ty, n)? {
        let p = YoungDiagram::parse(shape, Some(n)).map_err(from_young)?;
        let filter = FillingFilter { balanced: balanced || null, codominant: theta };
        let all = enumerate_fillings_a(&SkewDiagram::straight(p), n, &filter, budget).map_err(from_young)?;
        for t in all {
            match fmt {
                Format::Json => out.push_str(&line(t.to_json().to_string())),
                _ => {
                    let rows: Vec<String> =
                        t.rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ")).collect();
                    out.push_str(&line(rows.join(" / ")));
                }
            }
        }
        return Ok(out);
    }
    let g = parse_type(ty)?;
    if !g.is_bcd() {
        return Err(usage(format!("enumerate supports types A, B, C, D, got {g}")));
    }
    let p = YoungDiagram::parse(shape, Some(g.rank)).map_err(from_young)?;
    let filter = DoubledFilter { null, sign, codominant: theta };
    for t in enumerate_doubled(&p, &g, &filter, budget).map_err(from_bcd)? {
        match fmt {
            Format::Json => out.push_str(&line(t.to_json().to_string())),
            _ => out.push_str(&line(t.pretty())),
        }
    }
    Ok(out)
}

fn tableau_character(lambda: &Weight, ty: LieType, budget: usize) -> Result<std::collections::BTreeMap<Weight, u64>, Failure> {
    match ty.family {
        Family::A => young_a::walk::character_a_budget(lambda, ty.rank + 1, budget).map_err(from_young),
        Family::B | Family::C | Family::D => doubled_bcd::character_bcd_budget(lambda, &ty, budget).map_err(from_bcd),
        _ => Err(usage(format!("no tableau character for {ty}; use --oracle"))),
    }
}

fn render_character(t: &CharacterTable, fmt: Format) -> String {
    match fmt {
        Format::Json => line(t.to_json().to_string()),
        Format::Tsv | Format::Text => {
            let mut s = if fmt == Format::Tsv { "weight\tmultiplicity\n".to_string() } else { String::new() };
            for (w, m) in &t.entries {
                s.push_str(&format!("{w}\t{m}\n"));
            }
            s
        }
    }
}

fn bcd_types(max_rank: usize) -> Vec<LieType> {
    let mut v = Vec::new();
    for r in 1..=max_rank {
        v.extend([LieType::b(r), LieType::c(r)]);
        if r >= 3 {
            v.push(LieType::d(r));
        }
    }
    v
}

pub fn verify(scope: Scope, ty: Option<LieType>, lmax: Option<i64>, kmax: usize) -> Result<Vec<Check>, Failure> {
    let report = match scope {
        Scope::FormSweep => {
            let types = ty.map_or_else(checks::sweep_types, |t| vec![t]);
            if types.iter().any(|t| !t.is_classical()) {
                return Err(usage("form-sweep needs a classical type"));
            }
            vec![checks::classification_sweep(&types, lmax.unwrap_or(4))]
        }
        Scope::Character => {
            let bound = lmax.unwrap_or(3);
            match ty {
                Some(t) if !t.is_classical() => return Err(usage("character needs a classical type")),
                Some(t) => vec![checks::character(&[t], bound)],
                None => {
                    let types = [LieType::a(1), LieType::a(2), LieType::b(2), LieType::b(3), LieType::c(2), LieType::c(3), LieType::d(3), LieType::d(4)];
                    vec![checks::character(&types, bound)]
                }
            }
        }
        Scope::Admissible => {
            let types = ty.map_or_else(|| bcd_types(4), |t| vec![t]);
            if types.iter().any(|t| !t.is_bcd()) {
                return Err(usage("admissible needs type B, C or D"));
            }
            vec![checks::admissible(&types)]
        }
        Scope::Families => vec![checks::families(kmax, lmax.map_or(kmax, |l| l.max(0) as usize)), checks::generator_fillings(9)],
        Scope::PrimitiveBasis => {
            let t = ty.unwrap_or(LieType::exceptional(Family::F4));
            vec![checks::primitive_basis(t)]
        }
    };
    Ok(report)
}

pub fn report_code(report: &[Check]) -> i32 {
    if report.iter().any(|c| c.status == Status::Fail) {
        EXIT_FAIL
    } else if report.iter().any(|c| c.status == Status::Skipped) {
        EXIT_BUDGET
    } else {
        EXIT_OK
    }
}

#[derive(Serialize)]
struct Report<'a> {
    scope: String,
    passed: bool,
    checks: &'a [Check],
}

fn render_report(scope: Scope, checks: &[Check], fmt: Format) -> String {
    let name = scope.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    match fmt {
        Format::Json => {
            let r = Report { scope: name, passed: report_code(checks) == EXIT_OK, checks };
            line(serde_json::to_string(&r).expect("serializable"))
        }
        Format::Tsv => {
            let mut s = "check\tstatus\tcases\tskipped\tcounterexamples\n".to_string();
            for c in checks {
                let st = serde_json::to_value(c.status).expect("serializable");
                s.push_str(&format!("{}\t{}\t{}\t{}\t{}\n", c.name, st.as_str().unwrap_or(""), c.cases, c.skipped, c.counterexamples.len()));
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for c in checks {
                s.push_str(&line(c.summary()));
                for x in &c.counterexamples {
                    s.push_str(&format!("  {x}\n"));
                }
            }
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn out(args: &[&str]) -> Outcome {
        run(std::iter::once("cli").chain(args.iter().copied()))
    }

    #[test]
    fn classify_examples() {
        let o = out(&["classify", "su(1,2)", "1,0,-1"]);
        assert_eq!(o.code, 0);
        let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["in_table"], true);
        let o = out(&["classify", "sp2(1,1)", "1,1"]);
        let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["in_table"], false);
        assert_eq!(v["failed_condition"], "λ_2 ∈ 2Z");
        assert_eq!(v["dim_tableaux"], 0);
        let o = out(&["classify", "--form", "so(0,9)", "--lambda", "0,0,0,0", "--oracle"]);
        let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["in_table"], true);
        assert_eq!(v["dim_oracle"], 1);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(out(&["classify", "su(1,", "1,0,-1"]).code, EXIT_USAGE);
        assert_eq!(out(&["classify", "su(1,2)", "1,x,-1"]).code, EXIT_USAGE);
        assert_eq!(out(&["frobnicate"]).code, EXIT_USAGE);
        assert_eq!(out(&["enumerate", "--type", "A", "--shape", "2"]).code, EXIT_USAGE);
    }

    #[test]
    fn budget_exit() {
        let o = out(&["enumerate", "--type", "B3", "--shape", "9,9,9", "--null", "--budget", "8"]);
        assert_eq!(o.code, EXIT_BUDGET);
        assert!(o.stdout.is_empty());
    }

    #[test]
    fn enumerate_examples() {
        let o = out(&["enumerate", "--type", "B2", "--shape", "2", "--null"]);
        assert_eq!(o.stdout.lines().count(), 1);
        let o = out(&["enumerate", "--type", "A", "--n", "3", "--shape", "2,2,2", "--balanced", "--theta", "1,2"]);
        assert_eq!(o.stdout, "[[1,1],[2,2],[3,3]]\n");
        let o = out(&["enumerate", "--type", "D3", "--shape", "0"]);
        assert_eq!(o.stdout.lines().count(), 1);
    }

    #[test]
    fn table1_mode() {
        let o = out(&["classify", "--table1", "so(1,4)"]);
        assert!(o.stdout.starts_with("so(1,4) [B2]"), "{}", o.stdout);
    }
}
