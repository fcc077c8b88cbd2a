//! `ribbon`: command-line front end for the ribbon-twist library.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ribbon_twist::medial::{all_cycle_family_graphs, count_admissible_valuations, medial, ValuationRule};
use ribbon_twist::polynomials::{
    bollobas_riordan, chromatic, las_vergnas, parse_rational, parse_weights, penrose_by_chromatic_sum,
    penrose_by_subsets, penrose_by_weights, signed_topochromatic, symbolic_weights, topochromatic,
    transition_recursive, transition_statesum, LaurentPoly, SignedRibbonGraph, Var,
};
use ribbon_twist::ribbon_core::{canonical_embedded, enumerate, invariants, underlying_abstract};
use ribbon_twist::twisted_duality::{apply, geometric_dual, orbit, partial_dual_set, GammaAssignment, Subgroup};
use ribbon_twist::verify::{self, VerifyReport};
use ribbon_twist::{ArrowPresentation, EdgeLabel, Error};

#[derive(Parser)]
#[command(name = "ribbon", version, about = "Ribbon graphs, twisted duality, medial graphs and graph polynomials")]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

/// A graph given inline or read from a file; the inline form wins when both are present.
#[derive(Args)]
struct GraphInput {
    /// Arrow presentation such as "(a+ b+)(a+ b+)".
    graph: Option<String>,
    /// File holding an arrow presentation, in the text format or as JSON.
    #[arg(long, short)]
    file: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Print vertex, edge and face counts, genus and orientability.
    Info(GraphInput),
    /// Apply a group element to edges, e.g. --gamma "tau(a),delta(b,c)".
    Apply {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        gamma: String,
    },
    /// Partial dual with respect to the given edges, or the geometric dual.
    Dual {
        #[command(flatten)]
        input: GraphInput,
        /// Comma-separated edge labels; all edges when omitted.
        #[arg(long, value_delimiter = ',')]
        edges: Option<Vec<String>>,
    },
    /// List the orbit of a graph under a subgroup of the ribbon group.
    Orbit {
        #[command(flatten)]
        input: GraphInput,
        /// full, delta, tau, taudelta or deltataudelta.
        #[arg(long, default_value = "full")]
        subgroup: String,
    },
    /// Build the checkerboard-coloured medial graph.
    Medial(GraphInput),
    /// List the cycle family graphs of a checkerboard-colourable 4-regular graph.
    Cfg {
        #[command(flatten)]
        input: GraphInput,
        /// Use duality states only.
        #[arg(long)]
        duality_only: bool,
    },
    /// Count admissible k-valuations of the medial graph.
    Valuations {
        #[command(flatten)]
        input: GraphInput,
        #[arg(short, long)]
        k: usize,
        /// Let a crossing carry one colour on all four edges.
        #[arg(long)]
        crossing_allows_equal: bool,
    },
    /// Compute a graph polynomial.
    Poly {
        kind: PolyKind,
        #[command(flatten)]
        input: GraphInput,
        /// Transition weights as JSON: one [white, black, crossing] triple, or an object keyed by edge label.
        #[arg(long)]
        weights: Option<String>,
        /// Evaluate or substitute a variable, e.g. --at x=3; repeatable.
        #[arg(long, value_name = "VAR=VALUE")]
        at: Vec<String>,
        /// Penrose route.
        #[arg(long, value_enum, default_value = "subsets")]
        route: PenroseRoute,
        /// Compute the transition polynomial by the memoised recursion.
        #[arg(long)]
        recursive: bool,
    },
    /// Run named identity checks over every graph with at most --max-edges edges.
    Verify {
        /// Check name; omit with --all or --list.
        name: Option<String>,
        #[arg(long, default_value_t = 3)]
        max_edges: usize,
        /// Print the identity instead of running it.
        #[arg(long)]
        describe: bool,
        /// Run every check in the catalog.
        #[arg(long)]
        all: bool,
        /// List the catalog.
        #[arg(long)]
        list: bool,
    },
    /// List every embedded graph with exactly n edges, up to equivalence.
    Enumerate { n: usize },
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyKind {
    Penrose,
    Transition,
    Topochromatic,
    Br,
    Lv,
    Sbr,
    Chromatic,
}

#[derive(Clone, Copy, ValueEnum)]
enum PenroseRoute {
    Weights,
    Subsets,
    ChromaticSum,
}

/// Failure kinds mapped to exit codes.
enum Failure {
    Input(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Info(input) => info(&input.read()?, json),
        Command::Apply { input, gamma } => {
            let gamma: GammaAssignment = gamma.parse()?;
            graph_out(&apply(&input.read()?, &gamma)?, json)
        }
        Command::Dual { input, edges } => {
            let g = input.read()?;
            let h = match edges {
                None => geometric_dual(&g),
                Some(names) => partial_dual_set(&g, &labels(names)?)?,
            };
            graph_out(&h, json)
        }
        Command::Orbit { input, subgroup } => {
            let subgroup: Subgroup = subgroup.parse()?;
            graph_list(orbit(&input.read()?, &subgroup.moves())?, json)
        }
        Command::Medial(input) => medial_out(&input.read()?, json),
        Command::Cfg { input, duality_only } => graph_list(all_cycle_family_graphs(&input.read()?, *duality_only)?, json),
        Command::Valuations {
            input,
            k,
            crossing_allows_equal,
        } => {
            let rule = if *crossing_allows_equal {
                ValuationRule::CrossingAllowsEqual
            } else {
                ValuationRule::Strict
            };
            let count = count_admissible_valuations(&input.read()?, *k, rule)?;
            Ok(if json {
                line(json!({ "k": k, "count": count }))
            } else {
                format!("{count}\n")
            })
        }
        Command::Poly {
            kind,
            input,
            weights,
            at,
            route,
            recursive,
        } => {
            let p = polynomial(*kind, input, weights.as_deref(), *route, *recursive)?;
            poly_out(&p, at, json)
        }
        Command::Verify {
            name,
            max_edges,
            describe,
            all,
            list,
        } => verify_cmd(name.as_deref(), *max_edges, *describe, *all, *list, json),
        Command::Enumerate { n } => graph_list(enumerate(*n)?, json),
    }
}

impl GraphInput {
    fn text(&self) -> Result<String, Failure> {
        match (&self.graph, &self.file) {
            (Some(g), _) => Ok(g.clone()),
            (None, Some(path)) => {
                std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read {path}: {e}")))
            }
            (None, None) => Err(Failure::Input("no graph given: pass it inline or with --file".into())),
        }
    }

    fn read(&self) -> Result<ArrowPresentation, Failure> {
        let text = self.text()?;
        let text = text.trim();
        Ok(if text.starts_with('{') {
            ArrowPresentation::from_json(text)?
        } else {
            text.parse()?
        })
    }
}

fn labels(names: &[String]) -> Result<Vec<EdgeLabel>, Failure> {
    Ok(names.iter().map(|n| EdgeLabel::new(n.trim())).collect::<ribbon_twist::Result<_>>()?)
}

fn line(v: Value) -> String {
    format!("{v}\n")
}

fn info(g: &ArrowPresentation, json: bool) -> Outcome {
    let r = invariants(g);
    Ok(if json {
        let mut v = serde_json::to_value(r).expect("serializable record");
        v["genus"] = json!(r.genus());
        v["graph"] = json!(g.serialize());
        line(v)
    } else {
        format!("{r}\n")
    })
}

fn graph_out(g: &ArrowPresentation, json: bool) -> Outcome {
    Ok(if json {
        line(json!({ "graph": g.serialize(), "circles": g.to_json_value()["circles"] }))
    } else {
        format!("{g}\n")
    })
}

/// Canonical serializations, sorted so the output is stable.
fn graph_list(graphs: Vec<ArrowPresentation>, json: bool) -> Outcome {
    let forms: BTreeSet<String> = graphs.iter().map(|g| canonical_embedded(g).serialize()).collect();
    Ok(if json {
        line(json!({ "count": forms.len(), "graphs": forms }))
    } else {
        forms.iter().map(|f| format!("{f}\n")).collect()
    })
}

fn medial_out(g: &ArrowPresentation, json: bool) -> Outcome {
    let m = medial(g);
    if json {
        return Ok(line(serde_json::to_value(&m).expect("serializable medial")));
    }
    let mut out = format!("{}\n", m.graph);
    let names: Vec<String> = m.origin.iter().map(|l| format!("v_{l}")).collect();
    let _ = writeln!(out, "vertices: {}", names.join(" "));
    let black = m.face_black.iter().filter(|&&b| b).count();
    let _ = writeln!(out, "faces: {black} black, {} white", m.face_black.len() - black);
    Ok(out)
}

fn polynomial(
    kind: PolyKind,
    input: &GraphInput,
    weights: Option<&str>,
    route: PenroseRoute,
    recursive: bool,
) -> Result<LaurentPoly, Failure> {
    if let PolyKind::Sbr = kind {
        let text = input.text()?;
        let signed: SignedRibbonGraph = if text.contains("signs:") {
            text.trim().parse()?
        } else {
            SignedRibbonGraph::all_positive(text.trim().parse()?)
        };
        return Ok(signed_topochromatic(&signed)?);
    }
    let g = input.read()?;
    Ok(match kind {
        PolyKind::Penrose => {
            let p = match route {
                PenroseRoute::Weights => penrose_by_weights(&g)?,
                PenroseRoute::Subsets => penrose_by_subsets(&g)?,
                PenroseRoute::ChromaticSum => penrose_by_chromatic_sum(&g)?,
            };
            p.rename(&Var::Lambda, Var::X)
        }
        PolyKind::Transition => {
            let labels = g.labels();
            let w = match weights {
                Some(text) => parse_weights(text, &labels)?,
                None => symbolic_weights(&labels),
            };
            if recursive {
                transition_recursive(&g, &w)?
            } else {
                transition_statesum(&g, &w)?
            }
        }
        PolyKind::Topochromatic => topochromatic(&g)?,
        PolyKind::Br => bollobas_riordan(&g)?,
        PolyKind::Lv => las_vergnas(&g)?,
        PolyKind::Chromatic => chromatic(&underlying_abstract(&g)).rename(&Var::Lambda, Var::X),
        PolyKind::Sbr => unreachable!("handled above"),
    })
}

/// Substitutes the `--at` values; the result is a number when every variable is fixed.
fn poly_out(p: &LaurentPoly, at: &[String], json: bool) -> Outcome {
    let mut point = BTreeMap::new();
    for item in at {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| Failure::Input(format!("expected VAR=VALUE, got `{item}`")))?;
        let var: Var = name.trim().parse()?;
        point.insert(var, parse_rational(value.trim())?);
    }
    if point.is_empty() {
        return Ok(if json {
            line(p.to_json_value())
        } else {
            format!("{p}\n")
        });
    }
    let vars: BTreeSet<Var> = p.terms().flat_map(|(m, _)| m.powers().map(|(v, _)| v.clone())).collect();
    if vars.iter().all(|v| point.contains_key(v)) {
        let value = p.eval_at(&point)?;
        return Ok(if json {
            line(json!({ "value": value.to_string() }))
        } else {
            format!("{value}\n")
        });
    }
    let mut subst = BTreeMap::new();
    for (var, value) in point {
        if !value.is_integer() {
            return Err(Failure::Input(format!(
                "{var}={value}: partial substitution needs integer values; fix every variable to evaluate at rationals"
            )));
        }
        subst.insert(var, LaurentPoly::constant(value.to_integer()));
    }
    let q = p.substitute(&subst)?;
    Ok(if json {
        line(q.to_json_value())
    } else {
        format!("{q}\n")
    })
}

fn verify_cmd(name: Option<&str>, max_edges: usize, describe: bool, all: bool, list: bool, json: bool) -> Outcome {
    if list {
        let names = verify::catalog();
        return Ok(if json {
            line(json!(names))
        } else {
            names.iter().map(|n| format!("{n}\n")).collect()
        });
    }
    let names: Vec<&str> = match (name, all) {
        (Some(n), false) => vec![n],
        (None, true) => verify::catalog(),
        _ => return Err(Failure::Input("give exactly one check name, or --all, or --list".into())),
    };
    if describe {
        let mut out = String::new();
        for n in &names {
            let d = verify::describe(n)?;
            out += &if json {
                line(json!({ "name": n, "description": d }))
            } else {
                format!("{n}: {d}\n")
            };
        }
        return Ok(out);
    }
    let graphs = verify::instances(max_edges)?;
    let mut out = String::new();
    let mut passed = true;
    for n in names {
        let report = verify::run_on(n, &graphs)?;
        passed &= report.passed();
        out += &report_out(&report, json);
    }
    if passed {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Verification)
    }
}

fn report_out(r: &VerifyReport, json: bool) -> String {
    if json {
        return line(serde_json::to_value(r).expect("serializable report"));
    }
    let status = if r.passed() { "PASS" } else { "FAIL" };
    let mut out = format!(
        "{}: {status} ({} instances, {} failures, {} ms)\n",
        r.name,
        r.instances,
        r.failures.len(),
        r.elapsed_ms
    );
    for f in &r.failures {
        let witness = if f.witness.is_empty() { "-" } else { &f.witness };
        let _ = writeln!(out, "  {witness}: {}", f.detail);
    }
    out
}
