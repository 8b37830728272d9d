//! The `twd` command line.
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success, certificate verified |
//! | 1 | verification failed or certificate invalid |
//! | 2 | usage, I/O or parse error |
//! | 3 | size guard exceeded (raise it with `--max-n`) |

use std::ffi::OsString;
use std::fmt::Display;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::bramble::{find_covering_bag, min_cover, verify_bramble, Bramble, BrambleError, CoverLocation};
use crate::decomposition::{as_partial, verify_td, Flap, TreeDecomposition};
use crate::duality::{duality_certificates, synthesize_bramble, treewidth, DualityError};
use crate::format::{parse_br, parse_gr, parse_td, write_br, write_td};
use crate::graph::Graph;
use crate::separation::{merge_flaps_lemma1, SeparationError};
use crate::vertex_set::VertexSet;
use crate::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Ok = 0,
    Failed = 1,
    Usage = 2,
    Guard = 3,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Parser)]
#[command(name = "twd", version, about = "Exact tree-width with decomposition and bramble certificates")]
struct Cli {
    /// Override every vertex-count guard.
    #[arg(long, global = true, value_name = "N")]
    max_n: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the tree-width of a .gr graph.
    Tw { graph: PathBuf },
    /// Compute a decomposition of minimum width.
    Decompose {
        graph: PathBuf,
        /// Fail unless the width is at most K.
        #[arg(long)]
        k: Option<usize>,
        /// Output .td file (stdout if absent).
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Compute a bramble of order greater than K (K defaults to the tree-width).
    Bramble {
        graph: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        /// Output .br file (stdout if absent).
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check a .td or .br certificate against a graph.
    Verify {
        graph: PathBuf,
        cert: PathBuf,
        /// Certificate kind; taken from the file extension if absent.
        #[arg(long, value_enum)]
        format: Option<CertFormat>,
    },
    /// Find a bag or adhesion of a decomposition that covers a bramble.
    Cover { graph: PathBuf, td: PathBuf, br: PathBuf },
    /// Merge two partial decompositions along their first non-touching flaps.
    Merge {
        graph: PathBuf,
        td1: PathBuf,
        td2: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Compute and check both certificates.
    Duality { graph: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CertFormat {
    Td,
    Br,
}

struct Failure {
    status: ExitStatus,
    message: Option<String>,
}

impl Failure {
    fn new(status: ExitStatus, message: impl Display) -> Self {
        Self {
            status,
            message: Some(message.to_string()),
        }
    }

    fn failed(message: impl Display) -> Self {
        Self::new(ExitStatus::Failed, message)
    }

    fn usage(message: impl Display) -> Self {
        Self::new(ExitStatus::Usage, message)
    }
}

impl From<DualityError> for Failure {
    fn from(e: DualityError) -> Self {
        match e {
            DualityError::TooLarge { .. } | DualityError::Bramble(BrambleError::TooLarge { .. }) => {
                Self::new(ExitStatus::Guard, format!("{e}; raise the limit with --max-n"))
            }
            _ => Self::failed(e),
        }
    }
}

impl From<BrambleError> for Failure {
    fn from(e: BrambleError) -> Self {
        DualityError::Bramble(e).into()
    }
}

type Outcome = Result<(), Failure>;

/// Runs the command line given by `args` (program name first) and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                ExitStatus::Usage.code()
            } else {
                let _ = write!(out, "{text}");
                ExitStatus::Ok.code()
            };
        }
    };
    let limits = match cli.max_n {
        Some(n) => Limits::default().with_max_n(n),
        None => Limits::default(),
    };
    match dispatch(cli.command, &limits, out) {
        Ok(()) => ExitStatus::Ok.code(),
        Err(f) => {
            if let Some(m) = f.message {
                let _ = writeln!(err, "twd: {m}");
            }
            f.status.code()
        }
    }
}

fn dispatch(command: Command, limits: &Limits, out: &mut impl Write) -> Outcome {
    match command {
        Command::Tw { graph } => {
            let g = load_graph(&graph)?;
            let (tw, _) = treewidth(&g, limits)?;
            emit(out, format!("{tw}\n"))
        }
        Command::Decompose { graph, k, out: path } => decompose(&graph, k, path.as_deref(), limits, out),
        Command::Bramble { graph, k, out: path } => bramble(&graph, k, path.as_deref(), limits, out),
        Command::Verify { graph, cert, format } => verify(&graph, &cert, format, limits, out),
        Command::Cover { graph, td, br } => cover(&graph, &td, &br, out),
        Command::Merge {
            graph,
            td1,
            td2,
            k,
            out: path,
        } => merge(&graph, &td1, &td2, k, path.as_deref(), out),
        Command::Duality { graph } => duality(&graph, limits, out),
    }
}

fn decompose(graph: &Path, k: Option<usize>, path: Option<&Path>, limits: &Limits, out: &mut impl Write) -> Outcome {
    let g = load_graph(graph)?;
    let (tw, td) = treewidth(&g, limits)?;
    if let Some(k) = k.filter(|&k| tw > k as isize) {
        return Err(Failure::failed(format!("tree-width {tw} > {k}")));
    }
    save(path, &write_td(&td), &format!("width {tw}"), out)
}

fn bramble(graph: &Path, k: Option<usize>, path: Option<&Path>, limits: &Limits, out: &mut impl Write) -> Outcome {
    let g = load_graph(graph)?;
    if g.n() == 0 {
        return Err(Failure::failed("the empty graph has no bramble"));
    }
    let k = match k {
        Some(k) => k,
        None => treewidth(&g, limits)?.0 as usize,
    };
    let b = match synthesize_bramble(&g, k, limits) {
        Err(DualityError::TreewidthTooSmall { .. }) => {
            let (tw, _) = treewidth(&g, limits)?;
            return Err(Failure::failed(format!("tree-width {tw} < {k}")));
        }
        other => other?,
    };
    let order = b.claimed_order().unwrap_or(0);
    save(path, &write_br(&b), &format!("order {order}"), out)
}

fn verify(graph: &Path, cert: &Path, format: Option<CertFormat>, limits: &Limits, out: &mut impl Write) -> Outcome {
    let format = match format {
        Some(f) => f,
        None => match cert.extension().and_then(|e| e.to_str()) {
            Some("td") => CertFormat::Td,
            Some("br") => CertFormat::Br,
            _ => {
                return Err(Failure::usage(format!(
                    "{}: unknown certificate kind, use --format td|br",
                    cert.display()
                )))
            }
        },
    };
    let g = load_graph(graph)?;
    match format {
        CertFormat::Td => {
            let td = load_td(cert)?;
            if let Err(v) = verify_td(&g, &td) {
                return reject(out, v);
            }
            emit(out, format!("OK width={}\n", td.width()))
        }
        CertFormat::Br => {
            let b = load_br(cert)?;
            if let Err(v) = verify_bramble(&g, &b) {
                return reject(out, v);
            }
            let order = min_cover(&g, &b, limits)?.len();
            match b.claimed_order() {
                Some(claimed) if claimed != order => reject(out, format!("claimed order {claimed}, actual order {order}")),
                _ => emit(out, format!("OK order={order}\n")),
            }
        }
    }
}

fn cover(graph: &Path, td: &Path, br: &Path, out: &mut impl Write) -> Outcome {
    let g = load_graph(graph)?;
    let d = load_td(td)?;
    let b = load_br(br)?;
    if let Err(v) = verify_td(&g, &d) {
        return Err(Failure::failed(format!("{}: {v}", td.display())));
    }
    if let Err(v) = verify_bramble(&g, &b) {
        return Err(Failure::failed(format!("{}: {v}", br.display())));
    }
    let w = find_covering_bag(&g, &d, &b)?;
    let place = match w.location {
        CoverLocation::Bag(t) => format!("bag {}", t + 1),
        CoverLocation::Adhesion(a, c) => format!("adhesion {}-{}", a + 1, c + 1),
    };
    emit(out, format!("{place}:{}\n", ids(&w.cover)))
}

fn merge(graph: &Path, td1: &Path, td2: &Path, k: usize, path: Option<&Path>, out: &mut impl Write) -> Outcome {
    let g = load_graph(graph)?;
    let mut sides = Vec::new();
    for p in [td1, td2] {
        let d = load_td(p)?;
        if let Err(v) = verify_td(&g, &d) {
            return Err(Failure::failed(format!("{}: {v}", p.display())));
        }
        let partial = as_partial(d, k).map_err(|e| Failure::failed(format!("{}: {e}", p.display())))?;
        let mut flaps = partial.flaps();
        flaps.sort_by(|a, b| a.vertices.cmp(&b.vertices));
        sides.push((partial, flaps));
    }
    let pair: Option<(&Flap, &Flap)> = sides[0]
        .1
        .iter()
        .flat_map(|x| sides[1].1.iter().map(move |y| (x, y)))
        .find(|(x, y)| !g.touches(&x.vertices, &y.vertices));
    let Some((x, y)) = pair else {
        return Err(Failure::failed("no pair of non-touching flaps"));
    };
    let merged = merge_flaps_lemma1(&g, k, &sides[0].0, x, &sides[1].0, y).map_err(|e| match e {
        SeparationError::Decomposition(d) => Failure::failed(d),
        other => Failure::failed(other),
    })?;
    let td = merged.decomposition();
    if let Err(v) = verify_td(&g, td) {
        return Err(Failure::failed(format!("merged decomposition: {v}")));
    }
    let summary = format!(
        "merged flaps{} and{}: width {}, {} flaps",
        ids(&x.vertices),
        ids(&y.vertices),
        td.width(),
        merged.flaps().len()
    );
    save(path, &write_td(td), &summary, out)
}

fn duality(graph: &Path, limits: &Limits, out: &mut impl Write) -> Outcome {
    let g = load_graph(graph)?;
    let c = duality_certificates(&g, limits)?;
    if let Err(v) = verify_td(&g, &c.decomposition) {
        return Err(Failure::failed(format!("decomposition: {v}")));
    }
    if let Err(v) = verify_bramble(&g, &c.bramble) {
        return Err(Failure::failed(format!("bramble: {v}")));
    }
    let order = min_cover(&g, &c.bramble, limits)?.len();
    if c.decomposition.width() != c.tw || order as isize != c.tw + 1 {
        return Err(Failure::failed(format!("tw={} order={order} MISMATCH", c.tw)));
    }
    emit(out, format!("tw={} order={order} OK\n", c.tw))
}

fn ids(set: &VertexSet) -> String {
    set.iter().map(|v| format!(" {}", v + 1)).collect()
}

fn emit(out: &mut impl Write, text: String) -> Outcome {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::usage(format!("cannot write output: {e}")))
}

fn reject(out: &mut impl Write, reason: impl Display) -> Outcome {
    emit(out, format!("FAIL {reason}\n"))?;
    Err(Failure {
        status: ExitStatus::Failed,
        message: None,
    })
}

/// Writes `text` to `path` and prints `summary`, or prints `text` alone when
/// there is no path.
fn save(path: Option<&Path>, text: &str, summary: &str, out: &mut impl Write) -> Outcome {
    match path {
        Some(p) => {
            fs::write(p, text).map_err(|e| Failure::usage(format!("cannot write {}: {e}", p.display())))?;
            emit(out, format!("{summary}\n"))
        }
        None => {
            log::info!("{summary}");
            emit(out, text.to_string())
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    parse_gr(&read(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn load_td(path: &Path) -> Result<TreeDecomposition, Failure> {
    parse_td(&read(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn load_br(path: &Path) -> Result<Bramble, Failure> {
    parse_br(&read(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}
