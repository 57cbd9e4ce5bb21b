use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};

use twofactor::constructions::{self, named};
use twofactor::digraphs::classify_digraph;
use twofactor::io::{
    digraph_report_to_json, parse_digraph, parse_graph6, parse_graph6_lines, report_to_json,
    scan_report_to_json_lines, snark_verdict_to_json, write_graph6,
};
use twofactor::snarks::{conjecture_scan, is_snark, SnarkCriteria};
use twofactor::tables::{check_section, render, Section};
use twofactor::two_factors::{classify_with, ClassifyOptions};
use twofactor::Graph;

/// Exit code when a classification hit `--max-factors`.
const EXIT_INCONCLUSIVE: u8 = 3;
/// Exit code when `tables` finds a row that disagrees.
const EXIT_MISMATCH: u8 = 4;

#[derive(Parser)]
#[command(
    name = "twofactor",
    version,
    about = "2-factor enumeration and classification for regular graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a generated graph as a graph6 line.
    #[command(subcommand)]
    Generate(Generate),
    /// Classify each graph6 line into the 2-factor hierarchy (JSON per line).
    Classify {
        /// Stop after this many 2-factors and report the result as inconclusive.
        #[arg(long, default_value_t = ClassifyOptions::default().max_factors)]
        max_factors: u64,
        /// graph6 file, or `-` for standard input.
        input: Option<String>,
    },
    /// Snark criteria for each graph6 line (JSON per line).
    SnarkCheck {
        #[arg(long, default_value_t = 5)]
        girth: usize,
        #[arg(long, default_value_t = 4)]
        cyclic_connectivity: usize,
        input: Option<String>,
    },
    /// Look for odd 2-factored snarks outside the known families.
    Scan { input: Option<String> },
    /// Recompute a reference table and compare with the stored rows.
    Tables {
        #[arg(value_parser = ["section5", "section4"], default_value = "section5")]
        section: String,
    },
    /// Classify a digraph given as `n m` plus arc lines.
    ClassifyDigraph { input: Option<String> },
}

/// Graph arguments accept a catalog key, `flower:T`, `hn:N`, `hstar:K` or
/// `g6:STRING`.
#[derive(Subcommand)]
enum Generate {
    /// Flower snark J(t).
    Flower { t: usize },
    /// H(n); `--k33-positions` places the K*3,3 blocks explicitly.
    Hn {
        n: usize,
        #[arg(long, value_delimiter = ',')]
        k33_positions: Option<Vec<usize>>,
    },
    /// H*(5(2k+1)).
    Hstar { k: usize },
    /// A catalog graph; `list` prints the keys instead.
    Named { key: String },
    /// Star product of G1 at y and G2 at x.
    Starprod {
        g1: String,
        y: usize,
        g2: String,
        x: usize,
        /// Neighbour of x (by rank) paired with each neighbour of y.
        #[arg(long, value_delimiter = ',')]
        pairing: Option<Vec<usize>>,
    },
    /// 3-join of three cubic graphs along edges x1-y1, x2-y2, x3-y3.
    Threejoin {
        g1: String,
        x1: usize,
        y1: usize,
        g2: String,
        x2: usize,
        y2: usize,
        g3: String,
        x3: usize,
        y3: usize,
    },
    /// 4-seed graft of a 4-regular graph along edge x-y.
    Graft { g: String, x: usize, y: usize },
    /// Replace vertex v by a triangle.
    Inflate { g: String, v: usize },
}

fn resolve(spec: &str) -> Result<Graph> {
    let num = |s: &str| {
        s.parse::<usize>()
            .with_context(|| format!("bad number in `{spec}`"))
    };
    let g = if let Some(rest) = spec.strip_prefix("flower:") {
        constructions::flower_snark(num(rest)?)?
    } else if let Some(rest) = spec.strip_prefix("hn:") {
        constructions::h_family(num(rest)?)?
    } else if let Some(rest) = spec.strip_prefix("hstar:") {
        constructions::h_star(num(rest)?)?
    } else if let Some(rest) = spec.strip_prefix("g6:") {
        parse_graph6(rest)?
    } else {
        named(spec)?.graph
    };
    Ok(g)
}

fn generate(cmd: Generate) -> Result<String> {
    let g = match cmd {
        Generate::Flower { t } => constructions::flower_snark(t)?,
        Generate::Hn {
            n,
            k33_positions: None,
        } => constructions::h_family(n)?,
        Generate::Hn {
            n,
            k33_positions: Some(p),
        } => constructions::h_family_arranged(n, &p)?,
        Generate::Hstar { k } => constructions::h_star(k)?,
        Generate::Named { key } if key == "list" => {
            return Ok(constructions::CATALOG_KEYS.join("\n"));
        }
        Generate::Named { key } => named(&key)?.graph,
        Generate::Starprod {
            g1,
            y,
            g2,
            x,
            pairing,
        } => {
            let pairing = match pairing.as_deref() {
                None => [0, 1, 2],
                Some(&[a, b, c]) => [a, b, c],
                Some(_) => bail!("--pairing takes exactly three ranks"),
            };
            constructions::star_product_paired(&resolve(&g1)?, y, &resolve(&g2)?, x, pairing)?.0
        }
        Generate::Threejoin {
            g1,
            x1,
            y1,
            g2,
            x2,
            y2,
            g3,
            x3,
            y3,
        } => {
            let (a, b, c) = (resolve(&g1)?, resolve(&g2)?, resolve(&g3)?);
            constructions::three_join([(&a, (x1, y1)), (&b, (x2, y2)), (&c, (x3, y3))])?
        }
        Generate::Graft { g, x, y } => constructions::four_seed_graft(&resolve(&g)?, (x, y))?,
        Generate::Inflate { g, v } => constructions::inflate_triangle(&resolve(&g)?, v)?,
    };
    Ok(write_graph6(&g)?)
}

fn read_input(input: Option<&str>) -> Result<String> {
    match input {
        None | Some("-") => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .context("reading standard input")?;
            Ok(s)
        }
        Some(path) => fs::read_to_string(path).with_context(|| format!("reading {path}")),
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<u8> {
    let mut code = 0;
    match cli.command {
        Command::Generate(g) => writeln!(out, "{}", generate(g)?)?,
        Command::Classify { max_factors, input } => {
            let options = ClassifyOptions { max_factors };
            for g in parse_graph6_lines(&read_input(input.as_deref())?)? {
                let report = classify_with(&g, &options);
                if report.inconclusive {
                    code = EXIT_INCONCLUSIVE;
                }
                writeln!(out, "{}", report_to_json(&g, &report)?)?;
            }
        }
        Command::SnarkCheck {
            girth,
            cyclic_connectivity,
            input,
        } => {
            let criteria = SnarkCriteria {
                girth,
                cyclic_connectivity,
            };
            for g in parse_graph6_lines(&read_input(input.as_deref())?)? {
                writeln!(
                    out,
                    "{}",
                    snark_verdict_to_json(&g, &is_snark(&g, criteria))?
                )?;
            }
        }
        Command::Scan { input } => {
            let graphs = parse_graph6_lines(&read_input(input.as_deref())?)?;
            let report = conjecture_scan(&graphs);
            write!(out, "{}", scan_report_to_json_lines(&report))?;
        }
        Command::Tables { section } => {
            let section = match section.as_str() {
                "section5" => Section::Hierarchy,
                "section4" => Section::Snarks,
                other => return Err(anyhow!("unknown table `{other}`")),
            };
            let rows = check_section(section);
            write!(out, "{}", render(section, &rows))?;
            let bad = rows.iter().filter(|r| !r.matches()).count();
            if bad > 0 {
                writeln!(out, "{bad} of {} rows disagree", rows.len())?;
                code = EXIT_MISMATCH;
            } else {
                writeln!(out, "all {} rows match", rows.len())?;
            }
        }
        Command::ClassifyDigraph { input } => {
            let d = parse_digraph(&read_input(input.as_deref())?)?;
            writeln!(out, "{}", digraph_report_to_json(&d, &classify_digraph(&d)))?;
        }
    }
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
