//! Command-line front end. [`run`] parses arguments, dispatches, writes the
//! report and returns the process exit code.

use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use toric_gauss_core::borel::{borel_closure, borel_generators, principal_gauss_generator};
use toric_gauss_core::gauss::{
    algebra_dimension, is_birational, normality_probe, relation_report, NormalityProbe, DEFAULT_LEVEL_BOUND,
    DEFAULT_SUBSET_LIMIT,
};
use toric_gauss_core::graphs::{self, LoopedGraph};
use toric_gauss_core::veronese::{
    expected_gauss_squarefree2, polymatroid_exchange_check, squarefree_veronese, ExchangeOutcome,
};
use toric_gauss_core::{Error, Monomial, MonomialAlgebra, MonomialSet};

use crate::format::{self, AlgebraFile, MonomialStyle, ParseError, Styled};
use crate::{parallel, reproduce};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "toric-gauss", version, about = "Gauss algebras of toric algebras")]
pub struct Cli {
    #[command(flatten)]
    pub opts: GlobalOpts,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Maximum number of d-subsets examined by one Gauss enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_SUBSET_LIMIT)]
    pub limit_subsets: u64,

    /// Highest level searched by the normality probe.
    #[arg(long, global = true, default_value_t = DEFAULT_LEVEL_BOUND)]
    pub level_bound: u32,

    /// Monomial output style.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::String)]
    pub format: OutputFormat,

    /// Worker threads for the Gauss enumeration and the conjecture scan.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Expvec,
    String,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Input file, or `-` for standard input.
    #[arg(short = 'i', long = "input")]
    pub path: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Gauss generating set of the algebra in an algebra file.
    Gauss(Input),
    /// Krull dimension (rank of the exponent matrix).
    Dim(Input),
    /// Smallest strongly stable set containing the listed monomials.
    BorelClosure(Input),
    /// Borel generators of a strongly stable set.
    BorelGens(Input),
    /// Borel generator of the Gauss algebra of a principal Borel algebra.
    Principal {
        /// The Borel generator, e.g. `x2*x4`.
        monomial: String,
        /// Number of variables.
        #[arg(long)]
        dim: usize,
    },
    /// Compare the Gauss set of the squarefree quadratic Veronese algebra
    /// with the predicted family.
    VeroneseCheck {
        /// Number of variables, at least 4.
        d: usize,
    },
    /// Polymatroid exchange property of the listed monomials.
    ExchangeCheck(Input),
    /// Generators of the edge ring of a graph file.
    EdgeRing(Input),
    /// Gauss generators of a bipartite graph with loops from rooted forests,
    /// or the forests for one root set.
    Forests {
        #[command(flatten)]
        input: Input,
        /// Comma-separated 1-based root vertices; lists the rooted forests.
        #[arg(long, value_delimiter = ',')]
        roots: Option<Vec<usize>>,
    },
    /// Number of spanning trees.
    TreeCount(Input),
    /// Whether the Gauss map of the algebra is birational.
    Birational(Input),
    /// Bounded search for saturation gaps.
    Normality(Input),
    /// Dimension, embedding dimension and relation rank of the Gauss
    /// algebra, with the defining binomial of a hypersurface.
    Hypersurface {
        #[command(flatten)]
        input: Input,
        /// Report on the listed monomials themselves instead of on the
        /// Gauss set of the algebra they generate.
        #[arg(long)]
        as_is: bool,
    },
    /// The path-graph sequence value lambda_d.
    Lambda { d: usize },
    /// Connected bipartite graphs with one loop whose Gauss algebra is a
    /// hypersurface of dimension d - 1.
    ConjectureScan {
        /// Largest vertex count, at most 8.
        max_d: usize,
        /// Print every scanned row, not just the hypersurface ones.
        #[arg(long)]
        all: bool,
    },
    /// Recompute the stated examples and values.
    ReproducePaper,
}

/// Failure of a command, mapped to an exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{0}")]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::LimitExceeded { .. }) => EXIT_BUDGET,
            CliError::Core(Error::Internal(_)) | CliError::Mismatch(_) => EXIT_INTERNAL,
            _ => EXIT_INPUT,
        }
    }
}

type CmdResult = Result<(), CliError>;

struct Ctx<'a> {
    opts: &'a GlobalOpts,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn style(&self) -> MonomialStyle {
        match self.opts.format {
            OutputFormat::Expvec => MonomialStyle::Expvec,
            OutputFormat::String => MonomialStyle::Product,
        }
    }

    fn line(&mut self, s: impl std::fmt::Display) -> CmdResult {
        writeln!(self.out, "{}", s).map_err(|e| CliError::Io {
            path: "<stdout>".into(),
            source: e,
        })
    }

    fn monomials<'m>(&mut self, ms: impl IntoIterator<Item = &'m Monomial>) -> CmdResult {
        let style = self.style();
        for m in ms {
            self.line(Styled(m, style))?;
        }
        Ok(())
    }

    fn warn(&mut self, s: impl std::fmt::Display) {
        let _ = writeln!(self.err, "warning: {}", s);
    }

    fn algebra(&mut self, input: &Input) -> Result<(AlgebraFile, MonomialAlgebra), CliError> {
        let file = read_algebra(&input.path)?;
        let alg = file.algebra();
        if alg.duplicates_removed() > 0 {
            self.warn(format_args!(
                "{}: {} duplicate generators removed",
                input.path.display(),
                alg.duplicates_removed()
            ));
        }
        Ok((file, alg))
    }

    fn gauss(&self, alg: &MonomialAlgebra) -> Result<MonomialSet, CliError> {
        Ok(parallel::gauss_generators(alg, Some(self.opts.limit_subsets), self.opts.threads)?.gens)
    }
}

fn read_text(path: &Path) -> Result<String, CliError> {
    let name = path.display().to_string();
    if name == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io { path: name, source: e })?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::Io { path: name, source: e })
}

fn read_algebra(path: &Path) -> Result<AlgebraFile, CliError> {
    AlgebraFile::parse(&read_text(path)?).map_err(|e| CliError::Parse {
        path: path.display().to_string(),
        source: e,
    })
}

fn read_graph(path: &Path) -> Result<LoopedGraph, CliError> {
    format::parse_graph(&read_text(path)?).map_err(|e| CliError::Parse {
        path: path.display().to_string(),
        source: e,
    })
}

/// Runs the command line `args` (program name first).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let mut ctx = Ctx {
        opts: &cli.opts,
        out,
        err,
    };
    match dispatch(&cli.command, &mut ctx) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(ctx.err, "error: {}", e);
            e.exit_code()
        }
    }
}

fn dispatch(command: &Command, ctx: &mut Ctx<'_>) -> CmdResult {
    if ctx.opts.threads == 0 {
        return Err(CliError::Usage("--threads must be at least 1".into()));
    }
    match command {
        Command::Gauss(input) => {
            let (_, alg) = ctx.algebra(input)?;
            let result = parallel::gauss_generators(&alg, Some(ctx.opts.limit_subsets), ctx.opts.threads)?;
            ctx.line(format_args!(
                "# {} generators of degree {} in {} variables",
                result.gens.len(),
                result.degree(),
                result.dim
            ))?;
            ctx.monomials(&result.gens)
        }
        Command::Dim(input) => {
            let (_, alg) = ctx.algebra(input)?;
            ctx.line(algebra_dimension(&alg))
        }
        Command::BorelClosure(input) => {
            let file = read_algebra(&input.path)?;
            let closure = borel_closure(&file.set())?;
            ctx.monomials(closure.members())
        }
        Command::BorelGens(input) => {
            let file = read_algebra(&input.path)?;
            let gens = borel_generators(&file.set())?;
            ctx.monomials(&gens)
        }
        Command::Principal { monomial, dim } => {
            let m = Monomial::parse_product(*dim, monomial)?;
            let g = principal_gauss_generator(&m)?;
            ctx.monomials([&g])
        }
        Command::VeroneseCheck { d } => {
            let want = expected_gauss_squarefree2(*d)?;
            let alg = MonomialAlgebra::from_set(squarefree_veronese(2, *d)?)?;
            let got = ctx.gauss(&alg)?;
            if got != want {
                let missing = want.difference(&got);
                let extra = got.difference(&want);
                return Err(CliError::Mismatch(format!(
                    "d = {}: {} generators computed, {} predicted; missing {}, unexpected {}",
                    d,
                    got.len(),
                    want.len(),
                    missing,
                    extra
                )));
            }
            ctx.line(format_args!("match: {} generators in {} variables", got.len(), d))
        }
        Command::ExchangeCheck(input) => {
            let file = read_algebra(&input.path)?;
            match polymatroid_exchange_check(&file.set())? {
                ExchangeOutcome::Holds => ctx.line("ok"),
                ExchangeOutcome::Violation { u, v, i } => {
                    ctx.line(format_args!("violation: u = {}, v = {}, i = {}", u, v, i + 1))
                }
            }
        }
        Command::EdgeRing(input) => {
            let g = read_graph(&input.path)?;
            let alg = graphs::edge_ring(&g)?;
            ctx.monomials(alg.gens())
        }
        Command::Forests { input, roots } => {
            let g = read_graph(&input.path)?;
            match roots {
                None => {
                    let gens = graphs::gauss_from_forests(&g)?;
                    ctx.monomials(&gens)
                }
                Some(roots) => {
                    let mut zero_based = Vec::with_capacity(roots.len());
                    for &r in roots {
                        if r == 0 || r > g.vertex_count() {
                            return Err(CliError::Usage(format!("root {} is not in 1..{}", r, g.vertex_count())));
                        }
                        zero_based.push(r - 1);
                    }
                    for cert in graphs::rooted_spanning_forests(&g, &zero_based)? {
                        let edges: Vec<String> = cert
                            .edges
                            .iter()
                            .map(|&(a, b)| format!("{}-{}", a + 1, b + 1))
                            .collect();
                        let g_vt = cert.generator(g.vertex_count());
                        let style = ctx.style();
                        let listed = if edges.is_empty() {
                            "(none)".to_string()
                        } else {
                            edges.join(" ")
                        };
                        ctx.line(format_args!("{}\t{}", listed, Styled(&g_vt, style)))?;
                    }
                    Ok(())
                }
            }
        }
        Command::TreeCount(input) => {
            let g = read_graph(&input.path)?;
            ctx.line(graphs::spanning_tree_count(&g)?)
        }
        Command::Birational(input) => {
            let (_, alg) = ctx.algebra(input)?;
            let gauss = ctx.gauss(&alg)?;
            ctx.line(is_birational(&alg, &gauss)?)
        }
        Command::Normality(input) => {
            let (_, alg) = ctx.algebra(input)?;
            match normality_probe(&alg, ctx.opts.level_bound)? {
                NormalityProbe::Clean { levels } => ctx.line(format_args!("clean up to level {}", levels)),
                NormalityProbe::Gap { level, point } => {
                    let style = ctx.style();
                    ctx.line(format_args!("gap at level {}: {}", level, Styled(&point, style)))
                }
            }
        }
        Command::Hypersurface { input, as_is } => {
            let (file, alg) = ctx.algebra(input)?;
            let set = if *as_is { file.set() } else { ctx.gauss(&alg)? };
            let report = relation_report(&set)?;
            ctx.line(format_args!("dim {}", report.dim))?;
            ctx.line(format_args!("edim {}", report.edim))?;
            ctx.line(format_args!("kernel_rank {}", report.kernel_rank))?;
            for (k, g) in set.iter().enumerate() {
                let style = ctx.style();
                ctx.line(format_args!("y{} = {}", k + 1, Styled(g, style)))?;
            }
            if let Some((plus, minus)) = &report.hypersurface_witness {
                let mut plus_s = String::new();
                let mut minus_s = String::new();
                plus.fmt_with("y", &mut plus_s).expect("write to string");
                minus.fmt_with("y", &mut minus_s).expect("write to string");
                ctx.line(format_args!("hypersurface: {} - {}", plus_s, minus_s))?;
            } else {
                ctx.line("not a hypersurface")?;
            }
            Ok(())
        }
        Command::Lambda { d } => ctx.line(graphs::path_lambda(*d)?),
        Command::ConjectureScan { max_d, all } => {
            let rows = parallel::conjecture_scan(*max_d, ctx.opts.threads)?;
            ctx.line("# d\tdim\tedim\tkernel\ttrees\teven_cycle\tgraph")?;
            let mut hyper = 0;
            let mut candidates = 0;
            for r in &rows {
                let flagged = r.is_hypersurface_of_codim_one();
                hyper += usize::from(flagged);
                candidates += usize::from(r.is_counterexample_candidate());
                if flagged || *all {
                    let mark = if r.is_counterexample_candidate() {
                        "\tCANDIDATE"
                    } else {
                        ""
                    };
                    ctx.line(format_args!(
                        "{}\t{}\t{}\t{}\t{}\t{}\t{}{}",
                        r.graph.vertex_count(),
                        r.dim,
                        r.edim,
                        r.kernel_rank,
                        r.spanning_trees,
                        r.graph.is_even_cycle(),
                        r.graph,
                        mark
                    ))?;
                }
            }
            ctx.line(format_args!(
                "# {} instances scanned, {} hypersurfaces of dimension d - 1, {} not even cycles",
                rows.len(),
                hyper,
                candidates
            ))
        }
        Command::ReproducePaper => {
            let checks = reproduce::checks(ctx.opts.threads);
            let failed = checks.iter().filter(|c| !c.passed()).count();
            for c in &checks {
                match &c.outcome {
                    Ok(detail) => ctx.line(format_args!("PASS  {}: {}", c.name, detail))?,
                    Err(detail) => ctx.line(format_args!("FAIL  {}: {}", c.name, detail))?,
                }
            }
            ctx.line(format_args!(
                "{} of {} checks passed",
                checks.len() - failed,
                checks.len()
            ))?;
            if failed > 0 {
                return Err(CliError::Mismatch(format!("{} checks failed", failed)));
            }
            Ok(())
        }
    }
}
