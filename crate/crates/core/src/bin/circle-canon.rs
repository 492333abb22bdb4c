use std::fs;
use std::process::ExitCode;

use circle_canon::canon::decode;
use circle_canon::chord::random_rep;
use circle_canon::oracle::{brute_find_rep, FIND_REP_LIMIT};
use circle_canon::pipeline::{canon_graph, CanonInput};
use circle_canon::text::{format_encoding, format_graph, format_rep, parse_document, parse_encoding, parse_graph, Document};
use circle_canon::tree::{minimal_split_tree, SplitTree};
use circle_canon::{Error, SeedOrder};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "circle-canon", version, about = "Canonical encodings of circle graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical encoding of a graph or rep file
    Canon { file: String },
    /// Compare two files; exit 0 if isomorphic, 1 if not
    Iso { first: String, second: String },
    /// Print the minimal split tree as Graphviz DOT
    Tree { file: String },
    /// Print a uniformly random chord diagram
    Gen {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Rebuild a graph from an encoding line
    Decode { file: String },
    /// Find a chord diagram for a small graph
    Recognize { file: String },
}

fn read(path: &str) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
}

fn input(path: &str) -> Result<CanonInput, String> {
    let doc = parse_document(&read(path)?).map_err(|e| format!("{path}: {e}"))?;
    Ok(match doc {
        Document::Graph(g) => CanonInput::from_graph(&g),
        Document::Rep(rep, _) => CanonInput::from_rep(rep),
    })
}

fn split_forest(input: &CanonInput) -> Result<Vec<SplitTree>, Error> {
    let g = input.graph();
    g.components().iter().map(|c| minimal_split_tree(&g.induced(c), SeedOrder::Lexicographic)).collect()
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let fail = |e: Error| e.to_string();
    match cli.command {
        Command::Canon { file } => {
            print!("{}", format_encoding(&canon_graph(&input(&file)?).map_err(fail)?));
        }
        Command::Iso { first, second } => {
            let a = canon_graph(&input(&first)?).map_err(fail)?;
            let b = canon_graph(&input(&second)?).map_err(fail)?;
            if a == b {
                println!("isomorphic");
            } else {
                println!("non-isomorphic");
                return Ok(ExitCode::from(1));
            }
        }
        Command::Tree { file } => {
            for t in split_forest(&input(&file)?).map_err(fail)? {
                print!("{}", t.to_dot());
            }
        }
        Command::Gen { n, seed } => {
            print!("{}", format_rep(&random_rep(n, seed).map_err(fail)?));
        }
        Command::Decode { file } => {
            let e = parse_encoding(&read(&file)?).map_err(fail)?;
            print!("{}", format_graph(&decode_graph(&e).map_err(fail)?));
        }
        Command::Recognize { file } => {
            let g = parse_graph(&read(&file)?).map_err(|e| format!("{file}: {e}"))?;
            if g.vertex_count() > FIND_REP_LIMIT {
                return Err(format!("recognition is limited to {FIND_REP_LIMIT} vertices"));
            }
            match brute_find_rep(&g).map_err(fail)? {
                Some(rep) => print!("{}", format_rep(&rep)),
                None => println!("not a circle graph"),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Undoes `canon_graph`: one decoded tree per component, placed side by side.
fn decode_graph(e: &circle_canon::Encoding) -> Result<circle_canon::ColoredGraph, Error> {
    let bad = |m: &str| Error::MalformedEncoding(m.to_string());
    let values = e.values();
    let (&k, mut rest) = values.split_first().ok_or_else(|| bad("empty encoding"))?;
    let mut edges = Vec::new();
    let mut n = 0;
    for _ in 0..k {
        let (&len, tail) = rest.split_first().ok_or_else(|| bad("component list ends early"))?;
        if tail.len() < len as usize {
            return Err(bad("component overruns the encoding"));
        }
        let (part, tail) = tail.split_at(len as usize);
        let g = decode(&circle_canon::Encoding(part.to_vec()))?.join_all();
        edges.extend(g.edges().map(|(u, v)| (u + n, v + n)));
        n += g.vertex_count();
        rest = tail;
    }
    if !rest.is_empty() {
        return Err(bad("trailing values"));
    }
    circle_canon::ColoredGraph::uncolored(n, &edges)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
