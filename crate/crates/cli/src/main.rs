//! `psalg`: command-line front end for the forest-algebra library.
//!
//! Every subcommand prints JSON on stdout (or a plain table with `--table`).
//! The exit status is nonzero when the input is rejected, a limit is hit, or
//! a requested verification disagrees.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use psalg::evidence::{conjecture_evidence, whitney_report, Classification};
use psalg::graphs::{
    clone_graph, io::graph_to_json, io::parse_graph, whitney_cleave, whitney_identify,
    whitney_twist, Multigraph,
};
use psalg::hypergraphs::{
    contains_cycle, edge_to_pair_assignment, hypergraph_hilbert, io::parse_hypergraph,
    is_pair_forest, random_parameters, try_pair_assignment, Hypergraph, RankOracle,
};
use psalg::limits::Limits;
use psalg::nilalg::{
    graph_linear_forms, graph_quotient_generators, graph_tree_generators, quotient_hilbert,
    subalgebra_hilbert, TruncatedAlgebra,
};
use psalg::tutte::io::{parse_hilbert, polynomial_to_json};
use psalg::tutte::{
    forest_hilbert_from_rank, forest_hilbert_from_tutte, reconstruct_tutte, tlabel_hilbert,
    tree_hilbert_from_tutte, tutte_activity, tutte_corank_nullity, tutte_deletion_contraction,
    BivariatePolynomial, HilbertSeries,
};

#[derive(Parser)]
#[command(
    name = "psalg",
    version,
    about = "Forest and tree algebras, Hilbert series and Tutte polynomials"
)]
struct Cli {
    /// Print a human-readable table instead of JSON.
    #[arg(long, global = true)]
    table: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tutte polynomial of a graph by deletion-contraction.
    Tutte {
        /// Graph file, or `-` for stdin.
        graph: PathBuf,
        /// Cross-check against the activity and corank-nullity sums.
        #[arg(long)]
        verify: bool,
        /// Edge order as a comma-separated permutation of edge indices.
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<usize>>,
    },
    /// Hilbert series of the forest, tree or t-labelled algebra of a graph.
    Hilbert {
        #[arg(value_enum)]
        kind: Kind,
        graph: PathBuf,
        /// Label count for `tlabel`.
        #[arg(long, default_value_t = 1)]
        t: usize,
        /// Compute the series by every available route and compare.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<usize>>,
    },
    /// Recover a Tutte polynomial from a t-labelled forest series.
    Reconstruct {
        /// Hilbert series file (`hilbert` output is accepted), or `-`.
        hilbert: PathBuf,
        #[arg(long)]
        t: usize,
        /// Vertex count of the graph.
        #[arg(long)]
        n: usize,
    },
    /// Hypergraphical matroid computations.
    Hyper {
        #[arg(value_enum)]
        action: HyperAction,
        hypergraph: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random parameter sets per rank query.
        #[arg(long, default_value_t = 2)]
        trials: usize,
    },
    /// Whitney operations with an invariance report.
    Whitney {
        #[command(subcommand)]
        op: WhitneyOp,
    },
    /// Compare tree-algebra series with bridge-free matroids of two graphs.
    Conjecture {
        a: PathBuf,
        b: PathBuf,
        /// JSON array mapping the k-th non-bridge edge of A to an edge index of B.
        #[arg(long)]
        bijection: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Forest,
    Tree,
    Tlabel,
}

#[derive(Clone, Copy, ValueEnum)]
enum HyperAction {
    Tutte,
    Forests,
    Trees,
    Hilbert,
    Check,
}

#[derive(Subcommand)]
enum WhitneyOp {
    /// Glue vertex `w` of one component onto vertex `v` of another.
    Identify { graph: PathBuf, v: usize, w: usize },
    /// Split a cut vertex, moving the edges in `side` to a new vertex.
    Cleave {
        graph: PathBuf,
        vertex: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        side: Vec<usize>,
    },
    /// Swap `u` and `v` on the edges in `side`.
    Twist {
        graph: PathBuf,
        u: usize,
        v: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        side: Vec<usize>,
    },
}

/// A named alternative computation of the same series.
type Route<'a> = (&'static str, Box<dyn Fn() -> Result<HilbertSeries> + 'a>);

/// A result ready for printing, plus whether its verification passed.
struct Output {
    json: Value,
    table: String,
    ok: bool,
}

impl Output {
    fn new(json: Value, table: String) -> Self {
        Output {
            json,
            table,
            ok: true,
        }
    }
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")?;
        return Ok(s);
    }
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_graph(path: &Path, order: Option<&[usize]>) -> Result<Multigraph> {
    let g = parse_graph(&read_input(path)?).with_context(|| format!("{}", path.display()))?;
    match order {
        None => Ok(g),
        Some(order) => {
            let mut seen = vec![false; g.edge_count()];
            if order.len() != g.edge_count()
                || order
                    .iter()
                    .any(|&i| i >= seen.len() || std::mem::replace(&mut seen[i], true))
            {
                bail!("--order must be a permutation of 0..{}", g.edge_count());
            }
            Ok(Multigraph::new(
                g.vertex_count(),
                order.iter().map(|&i| g.edge(i)).collect(),
            )?)
        }
    }
}

fn load_hypergraph(path: &Path) -> Result<Hypergraph> {
    parse_hypergraph(&read_input(path)?).with_context(|| format!("{}", path.display()))
}

fn poly_output(p: &BivariatePolynomial) -> Output {
    Output::new(polynomial_to_json(p), format!("{p}\n"))
}

fn series_table(hs: &HilbertSeries) -> String {
    let mut s = String::from("degree  dim\n");
    for (k, d) in hs.dims().iter().enumerate() {
        s += &format!("{k:>6}  {d}\n");
    }
    s + &format!(" total  {}\n", hs.total())
}

fn sets_table(label: &str, sets: &[Vec<usize>]) -> String {
    let mut s = format!("{} {label}\n", sets.len());
    for set in sets {
        s += &format!("  {set:?}\n");
    }
    s
}

fn cmd_tutte(path: &Path, verify: bool, order: Option<&[usize]>) -> Result<Output> {
    let g = load_graph(path, order)?;
    let t = tutte_deletion_contraction(&g);
    let e = g.edge_count();
    let mut out = poly_output(&t);
    if verify {
        let activity = tutte_activity(&g, &g.natural_order())?;
        let corank = tutte_corank_nullity(|s| g.edge_subgraph(|i| s >> i & 1 == 1).rank(), e)?;
        out.ok = activity == t && corank == t;
        out.json["verify"] = json!({ "activity": activity == t, "corank_nullity": corank == t });
        out.table += &format!(
            "activity sum agrees: {}\ncorank-nullity sum agrees: {}\n",
            activity == t,
            corank == t
        );
    }
    Ok(out)
}

fn forest_c_side(g: &Multigraph, cap: u32) -> Result<HilbertSeries> {
    let alg = TruncatedAlgebra::forest(g, cap)?;
    Ok(subalgebra_hilbert(&alg, &graph_linear_forms(g))?)
}

fn cmd_hilbert(
    kind: Kind,
    path: &Path,
    t: usize,
    verify: bool,
    order: Option<&[usize]>,
) -> Result<Output> {
    if t == 0 {
        bail!("--t must be at least 1");
    }
    let g = load_graph(path, order)?;
    let (v, e, c) = (g.vertex_count(), g.edge_count(), g.component_count());
    if matches!(kind, Kind::Tree) && !g.is_connected() {
        bail!("the tree algebra needs a connected graph; this one has {c} components");
    }
    let tp = u32::try_from(t).context("--t is too large")?;
    // Primary value first, then the other routes when verifying.
    let (primary, routes): (HilbertSeries, Vec<Route>) = match kind {
        Kind::Forest => (
            forest_c_side(&g, 1)?,
            vec![
                (
                    "quotient",
                    Box::new(|| Ok(quotient_hilbert(v, &graph_quotient_generators(&g, 1)?)?)),
                ),
                (
                    "tutte",
                    Box::new(|| {
                        Ok(forest_hilbert_from_tutte(
                            &tutte_deletion_contraction(&g),
                            e,
                            v,
                            c,
                        )?)
                    }),
                ),
            ],
        ),
        Kind::Tree => (
            subalgebra_hilbert(&TruncatedAlgebra::tree(&g)?, &graph_linear_forms(&g))?,
            vec![
                (
                    "quotient",
                    Box::new(|| Ok(quotient_hilbert(v, &graph_tree_generators(&g)?)?)),
                ),
                (
                    "tutte",
                    Box::new(|| {
                        Ok(tree_hilbert_from_tutte(
                            &tutte_deletion_contraction(&g),
                            e,
                            v,
                            c,
                        )?)
                    }),
                ),
            ],
        ),
        Kind::Tlabel => (
            tlabel_hilbert(&g, t)?,
            vec![
                ("capped_subalgebra", Box::new(|| forest_c_side(&g, tp))),
                (
                    "clone_subalgebra",
                    Box::new(|| forest_c_side(&clone_graph(&g, t), 1)),
                ),
                (
                    "quotient",
                    Box::new(|| Ok(quotient_hilbert(v, &graph_quotient_generators(&g, tp)?)?)),
                ),
            ],
        ),
    };
    let mut out = Output::new(json!({ "dims": primary.dims() }), series_table(&primary));
    if verify {
        let mut block = serde_json::Map::new();
        for (name, route) in routes {
            let hs = route()?;
            let agrees = hs == primary;
            out.ok &= agrees;
            out.table += &format!(
                "{name}: {:?} {}\n",
                hs.dims(),
                if agrees { "agrees" } else { "DISAGREES" }
            );
            block.insert(name.into(), json!({ "dims": hs.dims(), "agrees": agrees }));
        }
        out.json["verify"] = Value::Object(block);
    }
    Ok(out)
}

fn cmd_reconstruct(path: &Path, t: usize, n: usize) -> Result<Output> {
    let mut value: Value =
        serde_json::from_str(&read_input(path)?).with_context(|| format!("{}", path.display()))?;
    // Accept `hilbert --verify` output by dropping its cross-check block.
    if let Some(obj) = value.as_object_mut() {
        obj.remove("verify");
    }
    let hs = parse_hilbert(&value.to_string()).with_context(|| format!("{}", path.display()))?;
    Ok(poly_output(&reconstruct_tutte(&hs, t, n)?))
}

fn all_subsets(m: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..1 << m).map(move |mask| (0..m).filter(|i| mask >> i & 1 == 1).collect())
}

fn check_battery(
    h: &Hypergraph,
    oracle: &mut RankOracle,
    seed: u64,
) -> Result<Vec<(&'static str, bool)>> {
    let m = h.edge_count();
    let cap = Limits::global().enumeration_cap;
    if m > cap {
        bail!("{m} hyperedges exceeds the enumeration cap of {cap}");
    }
    let (mut independence, mut assignment, mut refusal) = (true, true, true);
    let mut forest_count = 0u64;
    for s in all_subsets(m) {
        let acyclic = !contains_cycle(h, &s)?;
        independence &= oracle.is_independent(&s)? == acyclic;
        if acyclic {
            forest_count += 1;
            assignment &= edge_to_pair_assignment(h, &s).is_ok_and(|p| is_pair_forest(h, &s, &p));
        } else {
            refusal &= try_pair_assignment(h, &s)?.is_none();
        }
    }
    let t = oracle.tutte()?;
    let expected = forest_hilbert_from_rank(&t, m, oracle.maximal_forest_size())?;
    let stable = (seed..seed + 5)
        .map(|s| hypergraph_hilbert(h, &random_parameters(h, s)))
        .collect::<Result<Vec<_>, _>>()?
        .iter()
        .all(|hs| *hs == expected);
    Ok(vec![
        ("independent_iff_no_cycle", independence),
        ("forests_have_pair_assignments", assignment),
        ("dependent_sets_have_none", refusal),
        (
            "tutte_2_1_counts_forests",
            t.eval_int(2, 1) == forest_count.into(),
        ),
        ("hilbert_stable_across_seeds", stable),
    ])
}

fn cmd_hyper(action: HyperAction, path: &Path, seed: u64, trials: usize) -> Result<Output> {
    let h = load_hypergraph(path)?;
    let mut oracle = RankOracle::new(&h, trials, seed)?;
    Ok(match action {
        HyperAction::Tutte => poly_output(&oracle.tutte()?),
        HyperAction::Forests => {
            let f = oracle.forests()?;
            Output::new(
                json!({ "count": f.len(), "forests": f }),
                sets_table("hyperforests", &f),
            )
        }
        HyperAction::Trees => {
            let t = oracle.trees()?;
            Output::new(
                json!({ "count": t.len(), "trees": t }),
                sets_table("hypertrees", &t),
            )
        }
        HyperAction::Hilbert => {
            let hs = hypergraph_hilbert(&h, &random_parameters(&h, seed))?;
            Output::new(json!({ "dims": hs.dims() }), series_table(&hs))
        }
        HyperAction::Check => {
            let results = check_battery(&h, &mut oracle, seed)?;
            let passed = results.iter().all(|r| r.1);
            let mut table = String::new();
            for (name, ok) in &results {
                table += &format!("{name}: {}\n", if *ok { "pass" } else { "FAIL" });
            }
            let props: serde_json::Map<_, _> = results
                .iter()
                .map(|&(k, v)| (k.to_string(), json!(v)))
                .collect();
            Output {
                json: json!({ "properties": props, "passed": passed }),
                table,
                ok: passed,
            }
        }
    })
}

fn cmd_whitney(op: &WhitneyOp) -> Result<Output> {
    let (path, result) = match op {
        WhitneyOp::Identify { graph, v, w } => (
            graph,
            load_graph(graph, None).and_then(|g| Ok((whitney_identify(&g, *v, *w)?, g))),
        ),
        WhitneyOp::Cleave {
            graph,
            vertex,
            side,
        } => (
            graph,
            load_graph(graph, None).and_then(|g| Ok((whitney_cleave(&g, *vertex, side)?, g))),
        ),
        WhitneyOp::Twist { graph, u, v, side } => (
            graph,
            load_graph(graph, None).and_then(|g| Ok((whitney_twist(&g, *u, *v, side)?, g))),
        ),
    };
    let (after, before) = result.with_context(|| format!("{}", path.display()))?;
    let report = whitney_report(&before, &after)?;
    let table = format!(
        "graph: {}\nsame cycle space: {}\nforest series before: {:?}\nforest series after:  {:?}\n",
        graph_to_json(&after),
        report.same_cycle_space,
        report.forest_series_before.dims(),
        report.forest_series_after.dims(),
    );
    Ok(Output {
        json: json!({ "graph": graph_to_json(&after), "report": report }),
        table,
        ok: report.invariant(),
    })
}

fn cmd_conjecture(a: &Path, b: &Path, bijection: Option<&Path>) -> Result<Output> {
    let ga = load_graph(a, None)?;
    let gb = load_graph(b, None)?;
    let map: Option<Vec<usize>> =
        match bijection {
            Some(p) => Some(serde_json::from_str(&read_input(p)?).with_context(|| {
                format!("{}: expected a JSON array of edge indices", p.display())
            })?),
            None => None,
        };
    let report = conjecture_evidence(&ga, &gb, map.as_deref())?;
    let json = serde_json::to_value(&report)?;
    let table = format!(
        "bridge-free edges: {:?} / {:?}\nmatroids: {}\ntree series: {:?} / {:?}\nclassification: {}\n",
        report.bridge_free_edges[0],
        report.bridge_free_edges[1],
        json["matroids"],
        report.tree_series[0].dims(),
        report.tree_series[1].dims(),
        json["classification"].as_str().unwrap_or_default(),
    );
    // Evidence either way is a successful run; a violation of the proven
    // direction is not.
    let ok = report.classification != Classification::ForwardDirectionViolation;
    Ok(Output { json, table, ok })
}

fn run(cli: &Cli) -> Result<Output> {
    if let Ok(spec) = std::env::var("PSALG_BUDGET") {
        Limits::parse(&spec).map_err(|e| anyhow::anyhow!("PSALG_BUDGET: {e}"))?;
    }
    match &cli.command {
        Command::Tutte {
            graph,
            verify,
            order,
        } => cmd_tutte(graph, *verify, order.as_deref()),
        Command::Hilbert {
            kind,
            graph,
            t,
            verify,
            order,
        } => cmd_hilbert(*kind, graph, *t, *verify, order.as_deref()),
        Command::Reconstruct { hilbert, t, n } => cmd_reconstruct(hilbert, *t, *n),
        Command::Hyper {
            action,
            hypergraph,
            seed,
            trials,
        } => cmd_hyper(*action, hypergraph, *seed, *trials),
        Command::Whitney { op } => cmd_whitney(op),
        Command::Conjecture { a, b, bijection } => cmd_conjecture(a, b, bijection.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.table {
                print!("{}", out.table);
            } else {
                println!("{}", out.json);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("psalg: verification failed");
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("psalg: {e:#}");
            ExitCode::from(2)
        }
    }
}
