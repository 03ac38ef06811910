//! Command-line front end.
//!
//! Subcommands: `expand` (p̄-expansion), `ipoly` (independence polynomials),
//! `exponents` (the a_V(k) sequence), `classic` (Stanley's chromatic
//! p-expansion), and `verify` (the full cross-check report).
//!
//! Exit codes: 0 success, 1 verification failure, 2 input/parse error,
//! 3 invalid configuration.

use std::io::Read;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::expansion::{
    classical_p_expansion, exponents_by_integer_recurrence, exponents_by_log,
    kromatic_pbar_expansion_with, ExponentVector, SymExpansion,
};
use crate::graph::{parse_graph_with_labels, render_polynomial, VertexSet, WeightedGraph};
use crate::oracle::verify_graph_with;

const DEFAULT_MAX_SUBSETS: u128 = 1 << 22;

const DEMO_K21: &str = "v a 2\nv b 1\ne a b\n";
const DEMO_EDGE: &str = "v a\nv b\ne a b\n";

#[derive(Parser)]
#[command(
    name = "kromatic",
    version,
    about = "Exact p̄-expansions of the Kromatic symmetric function of weighted graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DemoGraph {
    /// one edge joining a weight-2 vertex and a weight-1 vertex
    K21,
    /// one unweighted edge
    Edge,
}

#[derive(Args)]
pub struct InputArgs {
    /// Graph file path, or "-" to read from stdin
    pub input: Option<String>,

    /// Use a built-in demo graph instead of a file
    #[arg(long, value_enum)]
    pub demo: Option<DemoGraph>,
}

#[derive(Subcommand)]
pub enum Command {
    /// Compute the p̄-expansion of the Kromatic symmetric function
    Expand {
        #[command(flatten)]
        input: InputArgs,
        /// Truncation degree D (required: the expansion is an infinite series)
        #[arg(short = 'd', long)]
        degree: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Compute partition coefficients on multiple threads
        #[arg(long)]
        parallel: bool,
    },
    /// Print the independence polynomial
    Ipoly {
        #[command(flatten)]
        input: InputArgs,
        /// Also print the polynomial of every induced subgraph
        #[arg(long)]
        all_subsets: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the exponents a_V(k) of the independence-polynomial factorization
    Exponents {
        #[command(flatten)]
        input: InputArgs,
        #[arg(short = 'd', long)]
        degree: usize,
        /// Recompute with the rational logarithm recurrence and compare
        #[arg(long)]
        cross_check: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the classical chromatic p-expansion (edge-subset sum)
    Classic {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run every cross-check and report pass/fail per check
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(short = 'd', long)]
        degree: usize,
        /// Number of variables for the coloring oracle (default: the degree)
        #[arg(short = 'n', long)]
        colors: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        parallel: bool,
    },
}

enum CliError {
    Config(String),
    Input(String),
    Verification(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Input(_) => 2,
            CliError::Config(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Config(m) | CliError::Input(m) | CliError::Verification(m) => m,
        }
    }
}

/// Parses `std::env::args`, runs the command, prints its output, and
/// returns the process exit code.
pub fn main_entry() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = err.print();
            return code;
        }
    };
    match run(cli.command) {
        Ok(output) => {
            println!("{}", output);
            0
        }
        Err(err) => {
            eprintln!("kromatic: {}", err.message());
            err.exit_code()
        }
    }
}

fn run(command: Command) -> Result<String, CliError> {
    match command {
        Command::Expand { input, degree, format, parallel } => {
            let (graph, _) = load_graph(&input)?;
            let expansion = kromatic_pbar_expansion_with(&graph, degree, parallel);
            Ok(match format {
                Format::Text => render_expansion_text(&expansion),
                Format::Json => expansion.to_json_string(),
            })
        }
        Command::Ipoly { input, all_subsets, format } => {
            let (graph, labels) = load_graph(&input)?;
            Ok(render_ipoly(&graph, &labels, all_subsets, format))
        }
        Command::Exponents { input, degree, cross_check, format } => {
            let (graph, _) = load_graph(&input)?;
            let poly = graph.independence_polynomial();
            let exponents = exponents_by_integer_recurrence(&poly, degree);
            if cross_check {
                let by_log = exponents_by_log(&poly, degree);
                if by_log != exponents {
                    return Err(CliError::Verification(format!(
                        "recurrences disagree: integer route gives [{}], log route gives [{}]",
                        exponents, by_log
                    )));
                }
            }
            Ok(render_exponents(&exponents, cross_check, format))
        }
        Command::Classic { input, format } => {
            let (graph, _) = load_graph(&input)?;
            let expansion = classical_p_expansion(&graph);
            Ok(match format {
                Format::Text => render_expansion_text(&expansion),
                Format::Json => expansion.to_json_string(),
            })
        }
        Command::Verify { input, degree, colors, format, parallel } => {
            let (graph, _) = load_graph(&input)?;
            let colors = colors.unwrap_or(degree);
            if colors < 1 {
                return Err(CliError::Config("--colors must be at least 1".to_string()));
            }
            let report = verify_graph_with(&graph, degree, colors, parallel);
            let rendered = match format {
                Format::Text => render_report_text(&report),
                Format::Json => report.to_json_string(),
            };
            if report.all_passed() {
                Ok(rendered)
            } else {
                // the report itself is still the output; the exit code signals failure
                println!("{}", rendered);
                Err(CliError::Verification("verification failed".to_string()))
            }
        }
    }
}

fn load_graph(input: &InputArgs) -> Result<(WeightedGraph, Vec<String>), CliError> {
    let text = match (&input.input, input.demo) {
        (Some(_), Some(_)) => {
            return Err(CliError::Config(
                "give either an input file or --demo, not both".to_string(),
            ))
        }
        (None, None) => {
            return Err(CliError::Config(
                "no input: pass a graph file, \"-\" for stdin, or --demo".to_string(),
            ))
        }
        (None, Some(DemoGraph::K21)) => DEMO_K21.to_string(),
        (None, Some(DemoGraph::Edge)) => DEMO_EDGE.to_string(),
        (Some(path), None) if path == "-" => {
            let mut buffer = String::new();
            std::io::stdin()
                .read_to_string(&mut buffer)
                .map_err(|e| CliError::Input(format!("cannot read stdin: {}", e)))?;
            buffer
        }
        (Some(path), None) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {}", path, e)))?,
    };
    let (graph, labels) =
        parse_graph_with_labels(&text).map_err(|e| CliError::Input(e.to_string()))?;
    enforce_subset_cap(graph.vertex_count())?;
    Ok((graph, labels))
}

fn enforce_subset_cap(vertices: usize) -> Result<(), CliError> {
    let cap = match std::env::var("KROMATIC_MAX_SUBSETS") {
        Err(_) => DEFAULT_MAX_SUBSETS,
        Ok(raw) => raw.parse::<u128>().map_err(|_| {
            CliError::Config(format!(
                "KROMATIC_MAX_SUBSETS must be a nonnegative integer, got {:?}",
                raw
            ))
        })?,
    };
    let subsets = 1u128 << vertices;
    if subsets > cap {
        return Err(CliError::Input(format!(
            "graph has {} vertices ({} subsets), above the KROMATIC_MAX_SUBSETS cap of {}",
            vertices, subsets, cap
        )));
    }
    Ok(())
}

/// Renders an expansion grouped by `|λ|` ascending, each group
/// parenthesized with its terms in the grouped display order (coarsest
/// partition first), signs explicit, and unit coefficients elided:
/// `(-p[3] + p[21]) + (p[4] - p[31])`.
pub fn render_expansion_text(expansion: &SymExpansion) -> String {
    if expansion.is_empty() {
        return "0".to_string();
    }
    let symbol = expansion.basis().term_symbol();
    let mut groups: Vec<String> = Vec::new();
    for size in 0..=expansion.degree() {
        let mut slice = expansion.slice(size);
        if slice.is_empty() {
            continue;
        }
        slice.reverse();
        if size == 0 {
            groups.push(slice[0].1.to_string());
            continue;
        }
        let mut text = String::from("(");
        for (i, (partition, coeff)) in slice.iter().enumerate() {
            let negative = coeff.is_negative();
            let magnitude = if negative { -(*coeff).clone() } else { (*coeff).clone() };
            if i == 0 {
                if negative {
                    text.push('-');
                }
            } else {
                text.push_str(if negative { " - " } else { " + " });
            }
            if !magnitude.is_one() {
                text.push_str(&magnitude.to_string());
            }
            text.push_str(symbol);
            text.push('[');
            text.push_str(&partition.to_string());
            text.push(']');
        }
        text.push(')');
        groups.push(text);
    }
    groups.join(" + ")
}

#[derive(Serialize)]
struct ExponentsJson {
    degree: usize,
    exponents: Vec<String>,
    cross_checked: bool,
}

fn render_exponents(exponents: &ExponentVector, cross_checked: bool, format: Format) -> String {
    match format {
        Format::Text => {
            let mut line = exponents.to_string();
            if cross_checked {
                line.push_str("\ncross-check: log recurrence agrees");
            }
            line
        }
        Format::Json => {
            let repr = ExponentsJson {
                degree: exponents.degree(),
                exponents: exponents.entries().iter().map(BigInt::to_string).collect(),
                cross_checked,
            };
            serde_json::to_string(&repr).expect("serialization cannot fail")
        }
    }
}

#[derive(Serialize)]
struct PolynomialJson {
    coefficients: Vec<String>,
}

#[derive(Serialize)]
struct SubsetPolynomialJson {
    vertices: Vec<String>,
    coefficients: Vec<String>,
}

#[derive(Serialize)]
struct AllSubsetsJson {
    subsets: Vec<SubsetPolynomialJson>,
}

fn subset_label(w: VertexSet, labels: &[String]) -> String {
    let names: Vec<&str> = w.iter().map(|v| labels[v].as_str()).collect();
    format!("{{{}}}", names.join(","))
}

fn render_ipoly(
    graph: &WeightedGraph,
    labels: &[String],
    all_subsets: bool,
    format: Format,
) -> String {
    let coeff_strings = |poly: &crate::graph::IntPolynomial| -> Vec<String> {
        poly.coeffs().iter().map(BigInt::to_string).collect()
    };
    if !all_subsets {
        let poly = graph.independence_polynomial();
        return match format {
            Format::Text => render_polynomial(&poly),
            Format::Json => {
                serde_json::to_string(&PolynomialJson { coefficients: coeff_strings(&poly) })
                    .expect("serialization cannot fail")
            }
        };
    }
    let table = graph.independence_polynomials_all_subsets();
    match format {
        Format::Text => {
            let lines: Vec<String> = table
                .iter()
                .enumerate()
                .map(|(mask, poly)| {
                    format!(
                        "{}: {}",
                        subset_label(VertexSet(mask as u64), labels),
                        render_polynomial(poly)
                    )
                })
                .collect();
            lines.join("\n")
        }
        Format::Json => {
            let subsets = table
                .iter()
                .enumerate()
                .map(|(mask, poly)| SubsetPolynomialJson {
                    vertices: VertexSet(mask as u64).iter().map(|v| labels[v].clone()).collect(),
                    coefficients: coeff_strings(poly),
                })
                .collect();
            serde_json::to_string(&AllSubsetsJson { subsets }).expect("serialization cannot fail")
        }
    }
}

fn render_report_text(report: &crate::oracle::VerificationReport) -> String {
    let mut lines = Vec::new();
    for check in &report.checks {
        lines.push(format!("{}: {}", check.check, check.status));
        for detail in &check.details {
            lines.push(format!("  - {}", detail));
        }
    }
    lines.push(format!("result: {}", if report.all_passed() { "PASS" } else { "FAIL" }));
    lines.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expansion::kromatic_pbar_expansion;
    use crate::graph::parse_graph;

    #[test]
    fn expansion_text_matches_display_convention() {
        let k21 = parse_graph(DEMO_K21).unwrap();
        let text = render_expansion_text(&kromatic_pbar_expansion(&k21, 4));
        assert_eq!(text, "(-p[3] + p[21]) + (p[4] - p[31])");
    }

    #[test]
    fn expansion_text_for_edge_carries_magnitudes() {
        let edge = parse_graph(DEMO_EDGE).unwrap();
        let text = render_expansion_text(&kromatic_pbar_expansion(&edge, 4));
        assert_eq!(
            text,
            "(-p[2] + p[11]) + (2p[3] - 2p[21]) + (-4p[4] + 4p[31] + p[22] - p[211])"
        );
    }

    #[test]
    fn expansion_text_of_empty_graph() {
        let empty = parse_graph("").unwrap();
        assert_eq!(render_expansion_text(&kromatic_pbar_expansion(&empty, 3)), "1");
    }

    #[test]
    fn expansion_text_of_zero_expansion() {
        let expansion = SymExpansion::new(crate::expansion::Basis::Pbar, 3);
        assert_eq!(render_expansion_text(&expansion), "0");
    }

    #[test]
    fn exponents_line_format() {
        let poly = crate::graph::IntPolynomial::from_i64_coeffs(&[1, 2]);
        let exponents = exponents_by_integer_recurrence(&poly, 5);
        assert_eq!(
            render_exponents(&exponents, false, Format::Text),
            "a(1)=2 a(2)=-1 a(3)=2 a(4)=-4 a(5)=6"
        );
    }

    #[test]
    fn subset_cap_enforcement() {
        assert!(enforce_subset_cap(10).is_ok());
        let err = enforce_subset_cap(63).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }
}
