use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};

use clap::{Parser, Subcommand};
use dclat_core::graph::{color_set, ColorSet, Recoloring};
use dclat_core::lattice::{LatticeView, ModularLattice};
use dclat_core::paths::{distance, mountainize, rank_via_path, shortest_path, valleyize, Path};
use dclat_core::substructure::{enumerate_subordinates, j_components};

use crate::dcp::{emit, parse, Structure};
use crate::dot::render_dot;
use crate::error::{usage, CliError, Result};
use crate::generate::{generate, GeneratorSpec};
use crate::registry::{birkhoff_ops, property_checks, theorem_suites, transforms, ArgKind, SuiteInput, TransformArg};

/// Top-level command names, for the coverage test over the command table.
pub const COMMANDS: &[&str] = &[
    "parse",
    "check",
    "birkhoff",
    "verify",
    "components",
    "subordinates",
    "transform",
    "dist",
    "gen",
    "render",
    "list",
];

#[derive(Debug, Parser)]
#[command(name = "dclat", version, about = "Diamond-colored distributive and modular lattices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a DCP file and print it in canonical form.
    Parse { file: String },
    /// Test one property; exit 1 with a witness when it fails.
    Check {
        file: String,
        #[arg(long)]
        prop: String,
    },
    /// J, M (vertex-poset to lattice) or j, m (lattice to vertex-poset).
    Birkhoff {
        file: String,
        #[arg(long)]
        op: String,
    },
    /// Run a theorem verification suite.
    Verify {
        file: String,
        #[arg(long)]
        theorem: String,
        /// Second input (Q for cor8 and thm11, K for prop10).
        #[arg(long)]
        with: Option<String>,
        /// Further product factors for prop10.
        #[arg(long = "factor")]
        factors: Vec<String>,
        #[arg(long)]
        colors: Option<String>,
        /// Recoloring for cor8, `old=new[,old=new]*`.
        #[arg(long)]
        map: Option<String>,
    },
    /// List the J-components of a modular lattice.
    Components {
        file: String,
        #[arg(long)]
        colors: String,
    },
    /// List the J-subordinates of a vertex-poset.
    Subordinates {
        file: String,
        #[arg(long)]
        colors: String,
    },
    /// dual, recolor:MAP, product:FILE or sum:FILE.
    Transform {
        file: String,
        #[arg(long)]
        op: String,
    },
    /// Distance between two vertices, with mountain and valley paths in a modular lattice.
    Dist {
        file: String,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Generate an instance as DCP.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    Render {
        file: String,
        #[arg(long, default_value = "dot")]
        format: String,
    },
    /// Registered properties, theorems, Birkhoff operations and transforms.
    List,
}

#[derive(Debug, Subcommand)]
pub enum GenKind {
    /// n + 1 elements in one chain.
    Chain {
        n: usize,
        #[arg(long, default_value_t = 1)]
        color: u32,
    },
    Antichain {
        n: usize,
        #[arg(long, default_value_t = 1)]
        color: u32,
    },
    /// The lattice of subsets of an n-element antichain.
    Boolean {
        n: usize,
        #[arg(long, default_value_t = 1)]
        color: u32,
    },
    Random {
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "1,2")]
        colors: String,
    },
}

/// Stdout text and exit code of a successful run.
pub struct Outcome {
    pub code: i32,
    pub text: String,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { code: 0, text }
    }

    fn verdict(holds: bool, text: String) -> Self {
        Outcome {
            code: if holds { 0 } else { 1 },
            text,
        }
    }
}

pub fn read_source(path: &str) -> Result<String> {
    let io = |source| CliError::Io {
        path: path.to_string(),
        source,
    };
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

/// Reads and parses, prefixing diagnostics with the file name.
pub fn load(path: &str) -> Result<Structure> {
    let text = read_source(path)?;
    parse(&text).map_err(|e| match e {
        CliError::Parse { line, col, msg } => CliError::Parse {
            line,
            col,
            msg: format!("{msg} (in {path})"),
        },
        CliError::Validation { line, msg } => CliError::Validation {
            line,
            msg: format!("{msg} (in {path})"),
        },
        other => other,
    })
}

pub fn parse_colors(text: &str) -> Result<ColorSet> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<u32>().map_err(|_| usage(format!("`{s}` is not a color"))))
        .collect::<Result<Vec<_>>>()
        .map(color_set)
}

/// `old=new[,old=new]*`.
pub fn parse_map(text: &str) -> Result<Recoloring> {
    let pairs = text
        .split(',')
        .map(|pair| {
            let (a, b) = pair
                .split_once('=')
                .ok_or_else(|| usage(format!("`{pair}` is not old=new")))?;
            let num = |s: &str| {
                s.trim()
                    .parse::<u32>()
                    .map_err(|_| usage(format!("`{s}` is not a color")))
            };
            Ok((num(a)?, num(b)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Recoloring::from_pairs(pairs))
}

fn path_text(s: &Structure, path: &Path) -> String {
    path.vertices()
        .iter()
        .map(|&v| s.label(v))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn execute(command: Command) -> Result<Outcome> {
    match command {
        Command::Parse { file } => Ok(Outcome::ok(emit(&load(&file)?))),
        Command::Check { file, prop } => {
            let checks = property_checks();
            let check = checks.lookup(&prop, "property")?;
            let v = check.check(&load(&file)?)?;
            let mut text = format!("{}: {}\n", prop, if v.holds { "holds" } else { "fails" });
            for l in &v.lines {
                writeln!(text, "  {l}").unwrap();
            }
            Ok(Outcome::verdict(v.holds, text))
        }
        Command::Birkhoff { file, op } => {
            let ops = birkhoff_ops();
            Ok(Outcome::ok(emit(&ops.lookup(&op, "operation")?.apply(&load(&file)?)?)))
        }
        Command::Verify {
            file,
            theorem,
            with,
            factors,
            colors,
            map,
        } => {
            let suites = theorem_suites();
            let suite = suites.lookup(&theorem, "theorem")?;
            let main = load(&file)?;
            let with = with.as_deref().map(load).transpose()?;
            let factors = factors.iter().map(|f| load(f)).collect::<Result<Vec<_>>>()?;
            let input = SuiteInput {
                main: &main,
                with: with.as_ref(),
                factors: &factors,
                colors: colors.as_deref().map(parse_colors).transpose()?,
                map: map.as_deref().map(parse_map).transpose()?,
            };
            let report = suite.run(&input)?;
            Ok(Outcome::verdict(report.holds(), report.to_string()))
        }
        Command::Components { file, colors } => {
            let s = load(&file)?;
            let colors = parse_colors(&colors)?;
            let m = ModularLattice::from_poset(s.as_edge()?.clone())?;
            let d = j_components(&m, &colors)?;
            let mut text = format!("{} components\n", d.components.len());
            for (i, c) in d.components.iter().enumerate() {
                let names: Vec<&str> = c.vertices.iter().map(|&v| s.label(v)).collect();
                writeln!(
                    text,
                    "component {i}: {} elements, min {}, max {}: {}",
                    c.vertices.len(),
                    s.label(c.min),
                    s.label(c.max),
                    names.join(" ")
                )
                .unwrap();
            }
            text.push_str(&d.report.to_string());
            Ok(Outcome::verdict(d.report.holds(), text))
        }
        Command::Subordinates { file, colors } => {
            let s = load(&file)?;
            let p = s.as_vertex()?;
            let subs = enumerate_subordinates(p, &parse_colors(&colors)?)?;
            let mut text = format!("{} subordinates\n", subs.len());
            for q in &subs {
                let qs: Vec<&str> = q.q_set.ones().map(|v| p.label(v)).collect();
                let rs: Vec<&str> = q.r.ones().map(|v| p.label(v)).collect();
                writeln!(
                    text,
                    "Q = {{{}}} over r = {{{}}}, component of {} elements",
                    qs.join(","),
                    rs.join(","),
                    q.component.len()
                )
                .unwrap();
            }
            Ok(Outcome::ok(text))
        }
        Command::Transform { file, op } => {
            let (name, arg) = match op.split_once(':') {
                Some((n, a)) => (n, Some(a)),
                None => (op.as_str(), None),
            };
            let all = transforms();
            let t = all.lookup(name, "transform")?;
            let arg = match (t.arg_kind(), arg) {
                (ArgKind::None, None) => TransformArg::None,
                (ArgKind::Map, Some(a)) => TransformArg::Map(parse_map(a)?),
                (ArgKind::File, Some(a)) => TransformArg::Other(load(a)?),
                (ArgKind::None, Some(_)) => return Err(usage(format!("`{name}` takes no argument"))),
                (_, None) => return Err(usage(format!("`{name}` needs an argument: {name}:ARG"))),
            };
            Ok(Outcome::ok(emit(&t.apply(&load(&file)?, arg)?)))
        }
        Command::Dist { file, from, to } => {
            let s = load(&file)?;
            let p = s.as_edge()?;
            let (a, b) = (p.id(&from)?, p.id(&to)?);
            let d = distance(p, a, b)?;
            let path = shortest_path(p, a, b)?;
            let mut text = format!("distance {d}\npath {}\n", path_text(&s, &path));
            if let Ok(m) = LatticeView::new(p.clone()).and_then(ModularLattice::new) {
                let rank_at_end = rank_via_path(p, &path)?;
                let up = mountainize(&m, &path)?;
                let down = valleyize(&m, &path)?;
                writeln!(text, "formula {}", dclat_core::paths::distance_modular(&m, a, b)?).unwrap();
                writeln!(text, "rank {} -> {rank_at_end}", m.rank_fn().of(a)).unwrap();
                writeln!(text, "mountain {}", path_text(&s, &up)).unwrap();
                writeln!(text, "valley {}", path_text(&s, &down)).unwrap();
            }
            Ok(Outcome::ok(text))
        }
        Command::Gen { kind } => {
            let spec = match kind {
                GenKind::Chain { n, color } => GeneratorSpec::Chain { n, color },
                GenKind::Antichain { n, color } => GeneratorSpec::Antichain { n, color },
                GenKind::Boolean { n, color } => GeneratorSpec::Boolean { n, color },
                GenKind::Random { n, p, seed, colors } => GeneratorSpec::Random {
                    n,
                    p,
                    seed,
                    palette: parse_colors(&colors)?.into_iter().map(|c| c.0).collect(),
                },
            };
            Ok(Outcome::ok(emit(&generate(&spec)?)))
        }
        Command::Render { file, format } => match format.as_str() {
            "dot" => Ok(Outcome::ok(render_dot(&load(&file)?))),
            other => Err(usage(format!("unknown format `{other}` (expected dot)"))),
        },
        Command::List => {
            let mut text = String::new();
            let mut section = |title: &str, rows: Vec<(&'static str, &'static str)>| {
                writeln!(text, "{title}:").unwrap();
                for (n, a) in rows {
                    writeln!(text, "  {n:<14} {a}").unwrap();
                }
            };
            section(
                "properties",
                property_checks().iter().map(|e| (e.name(), e.about())).collect(),
            );
            section(
                "theorems",
                theorem_suites().iter().map(|e| (e.name(), e.about())).collect(),
            );
            section(
                "birkhoff",
                birkhoff_ops().iter().map(|e| (e.name(), e.about())).collect(),
            );
            section(
                "transforms",
                transforms().iter().map(|e| (e.name(), e.about())).collect(),
            );
            Ok(Outcome::ok(text))
        }
    }
}

/// Parses `args`, runs the command and returns the exit code: 0 holds,
/// 1 fails (witness on `out`), 2 usage, parse or validation error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return 2;
            }
            let _ = write!(out, "{}", e.render());
            return 0;
        }
    };
    match execute(cli.command) {
        Ok(o) => {
            let _ = out.write_all(o.text.as_bytes());
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
