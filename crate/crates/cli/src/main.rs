use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dyercat::polytope::{canonical_representation, dihedral_corner, face_poset_check, polytope};
use dyercat::presentation::{dyer_presentation, Embedding, Variant};
use dyercat::scwol::{development_ball, dyer_scwol};
use dyercat::sigma::{certify_ball, dimension_stats, sigma_ball};
use dyercat::{Budget, DyerGraph, Error, WordEngine};

#[derive(Parser)]
#[command(name = "dyercat", version, about = "Dyer groups: words, embeddings, developments and the complex Sigma")]
struct Cli {
    /// Search budgets, e.g. `closure=200000,length=30,order=5000`.
    /// Overrides DYERCAT_BUDGET.
    #[arg(long, global = true)]
    budget: Option<String>,
    /// Numeric tolerance for geometric comparisons, in (0, 1e-3).
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Lambda,
    Omega,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check the labeling rules and print the vertex partition.
    Validate { graph: PathBuf },
    /// Print the standard presentation.
    Present { graph: PathBuf },
    /// Print the Coxeter graph Λ and the maps; with --verify check the
    /// embedding relators.
    Embed {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "lambda")]
        variant: VariantArg,
        #[arg(long)]
        verify: bool,
        /// Print every check, not just the summary.
        #[arg(long)]
        verbose: bool,
    },
    /// Print the canonical form of a word, e.g. "b c b c b".
    Reduce { graph: PathBuf, word: String },
    /// List the spherical subsets.
    Spherical {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the scwol of spherical subsets.
    Scwol {
        graph: PathBuf,
        #[arg(long)]
        dot: bool,
    },
    /// Print a ball in the development.
    Develop {
        graph: PathBuf,
        #[arg(long)]
        radius: usize,
    },
    /// Build a ball of Sigma (radius counts block hops from the identity).
    Sigma {
        graph: PathBuf,
        #[arg(long)]
        radius: usize,
        #[arg(long)]
        certify: bool,
        #[arg(long, conflicts_with_all = ["dot", "certify"])]
        obj: bool,
        #[arg(long, conflicts_with = "certify")]
        dot: bool,
    },
    /// Coxeter polytope of a finite Coxeter graph (all f = 2).
    Polytope {
        graph: PathBuf,
        #[arg(long)]
        obj: bool,
        /// List the faces as cosets.
        #[arg(long)]
        faces: bool,
    },
    /// dim Sigma and dim Sigma(W).
    Dim { graph: PathBuf },
}

enum Failure {
    /// Verification or validation failed; the report goes to stdout.
    Report(String),
    Err(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Err(e)
    }
}

fn load(path: &PathBuf) -> Result<DyerGraph, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    Ok(DyerGraph::from_json(&text)?)
}

fn budget(cli: &Cli) -> Result<Budget, Failure> {
    let mut b = Budget::default();
    if let Ok(env) = std::env::var("DYERCAT_BUDGET") {
        b = b.parse_overrides(&env)?;
    }
    if let Some(s) = &cli.budget {
        b = b.parse_overrides(s)?;
    }
    Ok(b)
}

fn run(cli: &Cli) -> Result<String, Failure> {
    if !(cli.tol > 0.0 && cli.tol < 1e-3) {
        return Err(Error::InvalidArgument(format!("--tol must lie in (0, 1e-3), got {}", cli.tol)).into());
    }
    let budget = budget(cli)?;
    let mut out = String::new();
    match &cli.command {
        Command::Validate { graph } => {
            let g = load(graph)?;
            let p = g.partition();
            writeln!(out, "valid: {} vertices, {} edges", g.vertex_count(), g.edge_count()).unwrap();
            writeln!(out, "V2 = {}", g.format_set(p.v2)).unwrap();
            writeln!(out, "Vp = {}", g.format_set(p.vp)).unwrap();
            writeln!(out, "Vinf = {}", g.format_set(p.vinf)).unwrap();
        }
        Command::Present { graph } => {
            out = dyer_presentation(&load(graph)?).to_text();
        }
        Command::Embed { graph, variant, verify, verbose } => {
            let g = load(graph)?;
            let variant = match variant {
                VariantArg::Lambda => Variant::Lambda,
                VariantArg::Omega => Variant::Omega,
            };
            let emb = Embedding::new(&g, variant);
            if *verify {
                let report = emb.verify(budget);
                if report.budget_exceeded() {
                    return Err(Error::SearchBudgetExceeded(report.summary()).into());
                }
                let text = if *verbose { report.to_text() } else { format!("{}\n", report.summary()) };
                if !report.passed() {
                    return Err(Failure::Report(text));
                }
                out = text;
            } else {
                writeln!(out, "index: {}", emb.index()).unwrap();
                writeln!(out, "lambda:").unwrap();
                out.push_str(&emb.lambda().to_json());
                if variant == Variant::Omega {
                    writeln!(out, "omega:").unwrap();
                    out.push_str(&emb.normal_graph().to_json());
                }
                writeln!(out, "phi:").unwrap();
                let lam = emb.lambda();
                for k in 0..lam.vertex_count() {
                    let w = dyercat::SyllableWord::letter(k, 1);
                    writeln!(out, "  {} -> {}", lam.id(k), emb.display_u(&emb.phi(&w))).unwrap();
                }
                writeln!(out, "psi:").unwrap();
                for u in emb.u_generators() {
                    let img = emb.psi(&u);
                    writeln!(out, "  {} -> {}", emb.display_u(&u), img.display(lam.ids())).unwrap();
                }
            }
        }
        Command::Reduce { graph, word } => {
            let g = load(graph)?;
            let e = WordEngine::new(&g, budget);
            let w = e.parse(word)?;
            let r = e.reduce(&w)?;
            writeln!(out, "{}", if r.is_empty() { "e".to_string() } else { e.display(&r) }).unwrap();
        }
        Command::Spherical { graph, format } => {
            let g = load(graph)?;
            let sets: Vec<String> = g.spherical_subsets().into_iter().map(|s| g.format_set(s)).collect();
            match format {
                Format::Text => sets.iter().for_each(|s| writeln!(out, "{s}").unwrap()),
                Format::Json => {
                    let lists: Vec<Vec<&str>> = g
                        .spherical_subsets()
                        .into_iter()
                        .map(|s| s.iter().map(|v| g.id(v)).collect())
                        .collect();
                    out = format!("{}\n", serde_json::to_string(&lists).expect("string lists serialize"));
                }
            }
        }
        Command::Scwol { graph, dot } => {
            let g = load(graph)?;
            let x = dyer_scwol(&g);
            if *dot {
                out = x.to_dot(|s| g.format_set(*s), |e| g.format_set(e.omega));
            } else {
                writeln!(out, "{} vertices, {} edges", x.vertex_count(), x.edge_count()).unwrap();
                for e in x.edges() {
                    writeln!(out, "{}", e.display(&g)).unwrap();
                }
            }
        }
        Command::Develop { graph, radius } => {
            let g = load(graph)?;
            let e = WordEngine::new(&g, budget);
            out = development_ball(&e, *radius)?.to_text(&g);
        }
        Command::Sigma { graph, radius, certify, obj, dot } => {
            let g = load(graph)?;
            let e = WordEngine::new(&g, budget);
            let ball = sigma_ball(&e, *radius)?;
            if *obj {
                out = ball.to_obj()?;
            } else if *dot {
                out = ball.to_dot(&g);
            } else {
                writeln!(
                    out,
                    "radius {}: {} vertices ({} interior), {} edges, {} blocks, dimension {}",
                    radius,
                    ball.vertices.len(),
                    ball.interior_count(),
                    ball.edges.len(),
                    ball.blocks.len(),
                    ball.dimension()
                )
                .unwrap();
                if *certify {
                    if *radius == 0 {
                        return Err(Error::InvalidArgument("certificate needs radius at least 1".into()).into());
                    }
                    let cert = certify_ball(&ball, &g)?;
                    out.push_str(&cert.to_text(&g));
                    if !cert.passed() {
                        return Err(Failure::Report(out));
                    }
                }
            }
        }
        Command::Polytope { graph, obj, faces } => {
            let g = load(graph)?;
            let rep = canonical_representation(&g)?;
            let p = polytope(&g, &rep, budget)?;
            if *obj {
                out = p.to_obj()?;
            } else if *faces {
                out = p.face_dump();
            } else {
                let check = face_poset_check(&p);
                let lengths: Vec<f64> = p
                    .edges()
                    .map(|f| p.distance(f.members[0], f.members[1]))
                    .collect();
                let worst_len = lengths.iter().map(|l| (l - 2.0).abs()).fold(0.0, f64::max);
                let mut worst_angle: f64 = 0.0;
                for s in 0..g.vertex_count() {
                    for t in s + 1..g.vertex_count() {
                        let m = g.label(s, t).unwrap_or(0);
                        if m >= 2 {
                            worst_angle = worst_angle.max((p.corner_angle(s, t) - dihedral_corner(m)).abs());
                        }
                    }
                }
                let ok = check.ok && worst_len <= cli.tol && worst_angle <= cli.tol;
                writeln!(out, "vertices: {}", p.vertex_count()).unwrap();
                writeln!(out, "edges: {}", lengths.len()).unwrap();
                writeln!(out, "faces: {}", check.faces).unwrap();
                writeln!(out, "edge length deviation from 2: {worst_len:.3e}").unwrap();
                writeln!(out, "corner angle deviation: {worst_angle:.3e}").unwrap();
                if let Some(w) = &check.witness {
                    writeln!(out, "face poset witness: {w}").unwrap();
                }
                writeln!(out, "{}", if ok { "PASS" } else { "FAIL" }).unwrap();
                if !ok {
                    return Err(Failure::Report(out));
                }
            }
        }
        Command::Dim { graph } => {
            let (d, dw) = dimension_stats(&load(graph)?);
            writeln!(out, "dim Sigma = {d}").unwrap();
            writeln!(out, "dim Sigma(W) = {dw}").unwrap();
        }
    }
    Ok(out)
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::SearchBudgetExceeded(_) | Error::OrderBudgetExceeded(_) => 2,
        Error::Parse(_) | Error::UnknownGenerator(_) | Error::UnknownVertex(_) => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Report(text)) => {
            print!("{text}");
            ExitCode::from(1)
        }
        Err(Failure::Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
