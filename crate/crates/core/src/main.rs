use clap::{Args, Parser, Subcommand, ValueEnum};
use qproj::cotangent::{Calculus, CalculusConfig};
use qproj::holomorphic::{top_form_coaction, Decomposition};
use qproj::prolong::{format_tensor, wedge_label};
use qproj::rewrite::default_degree;
use qproj::ncpoly::Algebra;
use qproj::session::SessionFile;
use qproj::verify::{summary, verify, Context, Suite};
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "qproj", version, about = "Differential calculi on quantum projective space, computed exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Complete the rewrite systems, derive the action table and write a session file.
    Construct {
        #[command(flatten)]
        common: Common,
    },
    /// Run verification suites.
    Verify {
        #[arg(value_enum)]
        which: Which,
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "canonical")]
        decomposition: DecompositionArg,
    },
    /// Export a computed object.
    Compute {
        #[arg(value_enum)]
        what: What,
        #[command(flatten)]
        common: Common,
        /// Form degree for `vk`.
        #[arg(long)]
        k: Option<usize>,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    degree_g: Option<usize>,
    #[arg(long)]
    degree_h: Option<usize>,
    #[arg(long, default_value_t = 3)]
    quotient_degree: usize,
    #[arg(long, value_enum, default_value = "markdown")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Session file; `construct` writes it, other commands read it.
    #[arg(long)]
    session: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Hopf,
    Fodc,
    Acs,
    Integrability,
    Dolbeault,
    Topform,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    I2,
    Vk,
    Table,
    Topform,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

#[derive(Clone, Copy, ValueEnum)]
enum DecompositionArg {
    Canonical,
    Swapped,
}

/// Configuration or construction problem: exit code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

impl Common {
    fn config(&self) -> Result<CalculusConfig, UsageError> {
        let n = self.n.ok_or_else(|| UsageError("--n is required without --session".into()))?;
        if n < 2 {
            return Err(UsageError(format!("N must be at least 2, got {n}")));
        }
        let mut cfg = CalculusConfig::new(n);
        if let Some(d) = self.degree_g {
            cfg.degree_g = d;
        }
        if let Some(d) = self.degree_h {
            cfg.degree_h = d;
        }
        if cfg.degree_g < 2 * n || cfg.degree_h < n + 1 {
            return Err(UsageError(format!(
                "completion degrees must be at least {} (G) and {} (H); defaults are {} and {}",
                2 * n,
                n + 1,
                default_degree(Algebra::G(n)),
                default_degree(Algebra::H(n))
            )));
        }
        if self.quotient_degree < 2 {
            return Err(UsageError("--quotient-degree must be at least 2".into()));
        }
        Ok(cfg)
    }

    /// Loads the session if one is given, otherwise constructs from the flags.
    fn calculus(&self) -> Result<(Calculus, usize), UsageError> {
        match &self.session {
            Some(path) => {
                if !path.exists() {
                    return Err(UsageError(format!("session file {} does not exist", path.display())));
                }
                let s = SessionFile::load(path)?;
                if let Some(n) = self.n {
                    if n != s.n {
                        return Err(UsageError(format!("--n {n} does not match the session (N = {})", s.n)));
                    }
                }
                Ok((s.calculus()?, s.quotient_degree))
            }
            None => Ok((Calculus::construct(self.config()?)?, self.quotient_degree)),
        }
    }

    fn emit(&self, text: &str) -> Result<(), UsageError> {
        match &self.out {
            Some(p) => std::fs::write(p, text)?,
            None => print!("{text}"),
        }
        Ok(())
    }

    fn emit_json(&self, v: &serde_json::Value) -> Result<(), UsageError> {
        self.emit(&(serde_json::to_string_pretty(v)? + "\n"))
    }
}

fn markdown_list(title: &str, items: &[String]) -> String {
    let mut s = format!("# {title}\n\n");
    for i in items {
        s.push_str(&format!("- `{i}`\n"));
    }
    s
}

fn run(cli: Cli) -> Result<bool, UsageError> {
    match cli.command {
        Command::Construct { common } => {
            let cfg = common.config()?;
            let calc = Calculus::construct(cfg)?;
            let session = SessionFile::from_calculus(&calc, common.quotient_degree);
            let path = common.session.clone().unwrap_or_else(|| PathBuf::from(format!("qproj-session-n{}.json", cfg.n)));
            session.save(&path)?;
            let info = json!({
                "n": calc.n,
                "session": path.display().to_string(),
                "lambda1_dim": calc.basis.dim(),
                "v_dim": calc.basis.v_dim(),
                "g_rules": calc.gsys.rules().len(),
                "h_rules": calc.hsys.rules().len(),
                "degree_g": calc.gsys.max_degree,
                "degree_h": calc.hsys.max_degree,
            });
            match common.format {
                Format::Json => common.emit_json(&info)?,
                Format::Markdown => common.emit(&format!(
                    "# Session, N = {}\n\n- file: `{}`\n- dim Lambda^1 = {}\n- dim V = {}\n- rules: {} (G, degree {}), {} (H, degree {})\n",
                    calc.n,
                    path.display(),
                    calc.basis.dim(),
                    calc.basis.v_dim(),
                    calc.gsys.rules().len(),
                    calc.gsys.max_degree,
                    calc.hsys.rules().len(),
                    calc.hsys.max_degree
                ))?,
            }
            Ok(true)
        }
        Command::Verify { which, common, decomposition } => {
            let (calc, qd) = common.calculus()?;
            let n = calc.n;
            let ctx = Context::new(calc, qd)?;
            let dec = match decomposition {
                DecompositionArg::Canonical => Decomposition::canonical(n),
                DecompositionArg::Swapped => Decomposition::swapped(n),
            };
            let suites: Vec<Suite> = match which {
                Which::Hopf => vec![Suite::Hopf],
                Which::Fodc => vec![Suite::Fodc],
                Which::Acs => vec![Suite::Acs],
                Which::Integrability => vec![Suite::Integrability],
                Which::Dolbeault => vec![Suite::Dolbeault],
                Which::Topform => vec![Suite::Topform],
                Which::All => Suite::ALL.to_vec(),
            };
            let report = verify(&ctx, &suites, &dec)?;
            match common.format {
                Format::Json => common.emit_json(&report.to_json())?,
                Format::Markdown => common.emit(&report.to_markdown())?,
            }
            let (pass, fail, mismatch) = summary(&report);
            eprintln!("{pass} passed, {fail} failed, {mismatch} differ from the printed formulas");
            Ok(report.ok())
        }
        Command::Compute { what, common, k } => {
            let (calc, qd) = common.calculus()?;
            let n = calc.n;
            let b = calc.basis;
            match what {
                What::Table => {
                    let v = json!({"n": n, "basis": (0..b.dim()).map(|k| b.label(k).to_string()).collect::<Vec<_>>(), "table": calc.table.to_json(&b)});
                    match common.format {
                        Format::Json => common.emit_json(&v)?,
                        Format::Markdown => {
                            let letters: Vec<u8> = calc.g.letters().collect();
                            let mut s = format!("# Action table, N = {n}\n\n| | {} |\n|---|{}\n", letters.iter().map(|&l| calc.g.letter_name(l)).collect::<Vec<_>>().join(" | "), "---|".repeat(letters.len()));
                            let fmt = |x: &[qproj::qscalar::QScalar]| qproj::cotangent::format_vector(&b, x);
                            s.push_str(&format!("| [x^+] | {} |\n", letters.iter().map(|&l| fmt(&calc.table.base[l as usize])).collect::<Vec<_>>().join(" | ")));
                            for kk in 0..b.dim() {
                                s.push_str(&format!(
                                    "| {} <| x | {} |\n",
                                    b.label(kk),
                                    letters.iter().map(|&l| fmt(&calc.table.action[kk][l as usize])).collect::<Vec<_>>().join(" | ")
                                ));
                            }
                            common.emit(&s)?
                        }
                    }
                }
                What::I2 | What::Vk | What::Topform => {
                    let ctx = Context::new(calc, qd)?;
                    match what {
                        What::I2 => {
                            let rows: Vec<String> = ctx.i2.rows.iter().map(|r| format_tensor(&b, 2, r)).collect();
                            match common.format {
                                Format::Json => common.emit_json(&json!({"n": n, "dim": rows.len(), "rows": rows}))?,
                                Format::Markdown => common.emit(&markdown_list(&format!("I^2, N = {n}, dimension {}", rows.len()), &rows))?,
                            }
                        }
                        What::Vk => {
                            let k = k.ok_or_else(|| UsageError("compute vk needs --k".into()))?;
                            let labels: Vec<String> = match ctx.ext.powers.get(k) {
                                Some(p) => p.labels.iter().map(|t| wedge_label(&b, t)).collect(),
                                None => Vec::new(),
                            };
                            match common.format {
                                Format::Json => common.emit_json(&json!({"n": n, "k": k, "dim": labels.len(), "basis": labels}))?,
                                Format::Markdown => common.emit(&markdown_list(&format!("V^{k}, N = {n}, dimension {}", labels.len()), &labels))?,
                            }
                        }
                        _ => {
                            let mut v = serde_json::Map::new();
                            v.insert("n".into(), n.into());
                            let mut total = Some(0);
                            for (key, holo) in [("holomorphic", true), ("antiholomorphic", false)] {
                                let t = top_form_coaction(&ctx.calc, &ctx.ext, holo)?;
                                total = total.zip(t.det_power).map(|(a, p)| a + p);
                                v.insert(
                                    key.into(),
                                    json!({
                                        "coefficient": t.coefficient.to_string(),
                                        "det_power": t.det_power,
                                        "scale": t.scale.map(|s| s.to_string()),
                                    }),
                                );
                            }
                            v.insert("total_det_power".into(), json!(total));
                            let v = serde_json::Value::Object(v);
                            match common.format {
                                Format::Json => common.emit_json(&v)?,
                                Format::Markdown => {
                                    let mut s = format!("# Top forms, N = {n}\n\n");
                                    for key in ["holomorphic", "antiholomorphic"] {
                                        s.push_str(&format!(
                                            "- {key}: coefficient `{}`, det power {}\n",
                                            v[key]["coefficient"].as_str().unwrap_or(""),
                                            v[key]["det_power"]
                                        ));
                                    }
                                    s.push_str(&format!("- total det power: {}\n", v["total_det_power"]));
                                    common.emit(&s)?
                                }
                            }
                        }
                    }
                }
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
