//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! the run fails if any criterion does. This target has no libtest harness,
//! so the lines are visible under a plain `cargo test`.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;

use psalg::corpus::{connected_multigraphs, multigraphs, random_hypergraphs, HypergraphShape};
use psalg::evidence::{add_pendant, conjecture_evidence, whitney_report, MatroidComparison};
use psalg::graphs::{
    bridge_free, clone_graph, cycle_space, enumerate_forests, whitney_cleave, whitney_identify,
    whitney_twist, Multigraph,
};
use psalg::hypergraphs::{
    contains_cycle, edge_to_pair_assignment, hypergraph_hilbert, is_pair_forest, random_parameters,
    try_pair_assignment, HyperError, Hypergraph, RankOracle,
};
use psalg::nilalg::{
    graph_linear_forms, graph_quotient_generators, graph_tree_generators, quotient_hilbert,
    subalgebra_hilbert, TruncatedAlgebra,
};
use psalg::tutte::{
    clone_tutte_identity_check, forest_hilbert_from_rank, forest_hilbert_from_tutte,
    reconstruct_tutte, tlabel_hilbert, tree_hilbert_from_tutte, tutte_deletion_contraction,
    HilbertSeries,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn forest_c_side(g: &Multigraph, t: u32) -> HilbertSeries {
    let alg = TruncatedAlgebra::forest(g, t).unwrap();
    subalgebra_hilbert(&alg, &graph_linear_forms(g)).unwrap()
}

fn activity_histogram(g: &Multigraph) -> HilbertSeries {
    let e = g.edge_count();
    let mut dims = vec![0u64; e + 1];
    for f in enumerate_forests(g, &g.natural_order()).unwrap() {
        dims[e - f.size - f.activity] += 1;
    }
    HilbertSeries::new(dims)
}

fn forest_algebra_presentations() -> Outcome {
    let corpus = connected_multigraphs(5, 7);
    for g in &corpus {
        let (v, e) = (g.vertex_count(), g.edge_count());
        let c_side = forest_c_side(g, 1);
        let b_side = quotient_hilbert(v, &graph_quotient_generators(g, 1).unwrap()).unwrap();
        let hist = activity_histogram(g);
        let tutte = forest_hilbert_from_tutte(&tutte_deletion_contraction(g), e, v, 1).unwrap();
        check(c_side == b_side && b_side == hist && hist == tutte, || {
            format!("{g:?}: C {c_side:?} B {b_side:?} activity {hist:?} Tutte {tutte:?}")
        })?;
    }
    Ok(format!(
        "{} connected multigraphs (n <= 5, e <= 7): C = B = activity = Tutte",
        corpus.len()
    ))
}

fn tree_algebra_presentations() -> Outcome {
    let corpus = connected_multigraphs(5, 7);
    for g in &corpus {
        let (v, e) = (g.vertex_count(), g.edge_count());
        let t = tutte_deletion_contraction(g);
        let alg = TruncatedAlgebra::tree(g).unwrap();
        let c_side = subalgebra_hilbert(&alg, &graph_linear_forms(g)).unwrap();
        let b_side = quotient_hilbert(v, &graph_tree_generators(g).unwrap()).unwrap();
        let tutte = tree_hilbert_from_tutte(&t, e, v, 1).unwrap();
        check(c_side == b_side && b_side == tutte, || {
            format!("{g:?}: C {c_side:?} B {b_side:?} Tutte {tutte:?}")
        })?;
        check(BigInt::from(tutte.total()) == t.eval_int(1, 1), || {
            format!(
                "{g:?}: total {} but T(1,1) = {}",
                tutte.total(),
                t.eval_int(1, 1)
            )
        })?;
    }
    Ok(format!(
        "{} connected multigraphs: C^T = B^T = Tutte, total = T(1,1)",
        corpus.len()
    ))
}

fn labelled_equivalences() -> Outcome {
    let corpus = multigraphs(5, 4, false);
    let samples: Vec<BigRational> = [2, 3, 5]
        .iter()
        .map(|&y| BigRational::from_integer(BigInt::from(y)))
        .collect();
    let mut cases = 0;
    for g in &corpus {
        for t in [2usize, 3] {
            let series = tlabel_hilbert(g, t).unwrap();
            let cloned = clone_graph(g, t);
            let clone_series = forest_c_side(&cloned, 1);
            let capped = forest_c_side(g, t as u32);
            let b_side = quotient_hilbert(
                g.vertex_count(),
                &graph_quotient_generators(g, t as u32).unwrap(),
            )
            .unwrap();
            check(
                series == clone_series && series == capped && series == b_side,
                || {
                    format!("{g:?} t={t}: tlabel {series:?} clone {clone_series:?} capped {capped:?} B {b_side:?}")
                },
            )?;
            let weighted: u64 = enumerate_forests(g, &g.natural_order())
                .unwrap()
                .iter()
                .map(|f| (t as u64).pow(f.size as u32))
                .sum();
            check(series.total() == weighted, || {
                format!(
                    "{g:?} t={t}: total {} but weighted count {weighted}",
                    series.total()
                )
            })?;
            check(clone_tutte_identity_check(g, t, &samples).unwrap(), || {
                format!("{g:?} t={t}: clone identity fails")
            })?;
            cases += 1;
        }
    }
    Ok(format!(
        "{} multigraphs (n <= 5, e <= 4) x t in {{2, 3}} = {cases} cases: tlabel = clone = capped C = B, totals, identity at y = 2, 3, 5",
        corpus.len()
    ))
}

fn reconstruction_round_trip() -> Outcome {
    let corpus = connected_multigraphs(4, 6);
    let mut cases = 0;
    for g in &corpus {
        let n = g.vertex_count();
        let expected = tutte_deletion_contraction(g);
        for t in [n, n + 1] {
            let hs = tlabel_hilbert(g, t).unwrap();
            let got = reconstruct_tutte(&hs, t, n).map_err(|e| format!("{g:?} t={t}: {e}"))?;
            check(got == expected, || {
                format!("{g:?} t={t}: got {got}, expected {expected}")
            })?;
            cases += 1;
        }
    }
    Ok(format!(
        "{} connected multigraphs (n <= 4, e <= 6), {cases} round trips",
        corpus.len()
    ))
}

fn g(n: usize, edges: &[(usize, usize)]) -> Multigraph {
    Multigraph::new(n, edges.to_vec()).unwrap()
}

fn whitney_invariance() -> Outcome {
    let two_triangles = g(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
    let bowtie = g(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]);
    let k3_pendant = g(4, &[(0, 1), (1, 2), (2, 0), (0, 3)]);
    let k4_minus = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]);
    let c5 = Multigraph::cycle(5);
    let c6_chord = g(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]);
    let three_paths = g(5, &[(0, 1), (1, 4), (0, 2), (2, 4), (0, 3), (3, 4)]);
    let parallel = g(4, &[(0, 1), (0, 1), (1, 2), (2, 0), (1, 3), (3, 2)]);
    let instances: Vec<(&str, Multigraph, Multigraph)> = vec![
        (
            "identify two triangles",
            two_triangles.clone(),
            whitney_identify(&two_triangles, 0, 3).unwrap(),
        ),
        (
            "identify triangle and edge",
            g(5, &[(0, 1), (1, 2), (2, 0), (3, 4)]),
            whitney_identify(&g(5, &[(0, 1), (1, 2), (2, 0), (3, 4)]), 2, 4).unwrap(),
        ),
        (
            "identify square and digon",
            g(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (4, 5)]),
            whitney_identify(
                &g(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (4, 5)]),
                5,
                1,
            )
            .unwrap(),
        ),
        (
            "cleave bowtie",
            bowtie.clone(),
            whitney_cleave(&bowtie, 0, &[3, 4, 5]).unwrap(),
        ),
        (
            "cleave pendant",
            k3_pendant.clone(),
            whitney_cleave(&k3_pendant, 0, &[3]).unwrap(),
        ),
        (
            "cleave path",
            Multigraph::path(3),
            whitney_cleave(&Multigraph::path(3), 1, &[0]).unwrap(),
        ),
        (
            "twist K4 minus edge",
            k4_minus.clone(),
            whitney_twist(&k4_minus, 0, 2, &[0, 1]).unwrap(),
        ),
        (
            "twist pentagon",
            c5.clone(),
            whitney_twist(&c5, 0, 2, &[0, 1]).unwrap(),
        ),
        (
            "twist hexagon with chord",
            c6_chord.clone(),
            whitney_twist(&c6_chord, 0, 3, &[0, 1, 2]).unwrap(),
        ),
        (
            "twist three paths",
            three_paths.clone(),
            whitney_twist(&three_paths, 0, 4, &[0, 1]).unwrap(),
        ),
        (
            "twist with parallel edges",
            parallel.clone(),
            whitney_twist(&parallel, 1, 2, &[4, 5]).unwrap(),
        ),
    ];
    for (name, before, after) in &instances {
        let report = whitney_report(before, after).unwrap();
        check(report.invariant(), || format!("{name}: {report:?}"))?;
        let (a, b) = (forest_c_side(before, 1), forest_c_side(after, 1));
        check(a == b, || format!("{name}: algebra series {a:?} vs {b:?}"))?;
    }
    Ok(format!(
        "{} identify/cleave/twist instances: cycle spaces and forest series preserved",
        instances.len()
    ))
}

fn hyper_corpus() -> Vec<Hypergraph> {
    random_hypergraphs(200, 2024, HypergraphShape::default())
}

fn subsets(m: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..1 << m).map(move |mask| (0..m).filter(|i| mask >> i & 1 == 1).collect())
}

fn hypergraph_matroid() -> Outcome {
    let corpus = hyper_corpus();
    let mut queries = 0;
    let mut disagreements = Vec::new();
    for seed in 0..5u64 {
        for (k, h) in corpus.iter().enumerate() {
            let mut oracle = RankOracle::new(h, 2, seed).unwrap();
            for s in subsets(h.edge_count()) {
                queries += 1;
                if oracle.is_independent(&s).unwrap() == contains_cycle(h, &s).unwrap() {
                    disagreements.push(format!("seed {seed}, hypergraph {k}, subset {s:?}"));
                }
            }
        }
    }
    check(disagreements.is_empty(), || {
        format!(
            "{} disagreements, first: {}",
            disagreements.len(),
            disagreements[0]
        )
    })?;
    Ok(format!(
        "200 hypergraphs x 5 seeds, {queries} subsets: independence = no cycle, 0 disagreements"
    ))
}

/// Cycle-free subsets, found without the rank oracle.
fn combinatorial_forests(h: &Hypergraph) -> Vec<Vec<usize>> {
    subsets(h.edge_count())
        .filter(|s| !contains_cycle(h, s).unwrap())
        .collect()
}

fn hypergraph_tutte_counts() -> Outcome {
    for (k, h) in hyper_corpus().iter().enumerate() {
        let t = RankOracle::new(h, 2, 0).unwrap().tutte().unwrap();
        let forests = combinatorial_forests(h);
        let maximal = forests
            .iter()
            .filter(|f| {
                (0..h.edge_count()).filter(|e| !f.contains(e)).all(|e| {
                    let mut bigger = (*f).clone();
                    bigger.push(e);
                    contains_cycle(h, &bigger).unwrap()
                })
            })
            .count();
        check(t.eval_int(2, 1) == BigInt::from(forests.len()), || {
            format!(
                "hypergraph {k}: T(2,1) = {} but {} forests",
                t.eval_int(2, 1),
                forests.len()
            )
        })?;
        check(t.eval_int(1, 1) == BigInt::from(maximal), || {
            format!(
                "hypergraph {k}: T(1,1) = {} but {maximal} maximal forests",
                t.eval_int(1, 1)
            )
        })?;
    }
    Ok("200 hypergraphs: T(2,1) = #forests, T(1,1) = #maximal forests".into())
}

fn pair_assignment() -> Outcome {
    let (mut forests, mut dependent) = (0, 0);
    for (k, h) in hyper_corpus().iter().enumerate() {
        for s in subsets(h.edge_count()) {
            if contains_cycle(h, &s).unwrap() {
                dependent += 1;
                let refused = matches!(
                    edge_to_pair_assignment(h, &s),
                    Err(HyperError::Dependent { .. })
                );
                let stuck = try_pair_assignment(h, &s).unwrap().is_none();
                check(refused && stuck, || {
                    format!("hypergraph {k}: dependent {s:?} was assigned")
                })?;
            } else {
                forests += 1;
                let pairs = edge_to_pair_assignment(h, &s)
                    .map_err(|e| format!("hypergraph {k}: forest {s:?}: {e}"))?;
                check(is_pair_forest(h, &s, &pairs), || {
                    format!("hypergraph {k}: {s:?} -> {pairs:?} fails the postcondition")
                })?;
            }
        }
    }
    Ok(format!(
        "{forests} forests assigned with valid pair forests, {dependent} dependent sets refused"
    ))
}

fn genericity_stability() -> Outcome {
    for (k, h) in hyper_corpus().iter().enumerate() {
        let mut oracle = RankOracle::new(h, 2, 0).unwrap();
        let t = oracle.tutte().unwrap();
        let expected =
            forest_hilbert_from_rank(&t, h.edge_count(), oracle.maximal_forest_size()).unwrap();
        for seed in 0..5 {
            let hs = hypergraph_hilbert(h, &random_parameters(h, seed)).unwrap();
            check(hs == expected, || {
                format!("hypergraph {k}, seed {seed}: {hs:?}, expected {expected:?}")
            })?;
        }
    }
    Ok("200 hypergraphs x 5 seeds: identical series, equal to the Tutte specialization".into())
}

/// Sizes of the circuits of the bridge-free part, computed from the cycle space.
fn circuit_sizes(g: &Multigraph) -> Vec<usize> {
    let elements = cycle_space(&bridge_free(g).0).row_space();
    let mut sizes: Vec<usize> = elements
        .iter()
        .filter(|c| !c.is_empty())
        .filter(|c| {
            !elements
                .iter()
                .any(|d| !d.is_empty() && d.len() < c.len() && d.iter().all(|x| c.contains(x)))
        })
        .map(Vec::len)
        .collect();
    sizes.sort_unstable();
    sizes
}

fn bridge_free_evidence() -> Outcome {
    let mut same: Vec<(Multigraph, Multigraph)> = Vec::new();
    for base in connected_multigraphs(4, 5)
        .into_iter()
        .filter(|b| b.edge_count() >= b.vertex_count())
        .take(8)
    {
        let last = base.vertex_count() - 1;
        same.push((base.clone(), add_pendant(&base, 0).unwrap()));
        same.push((
            add_pendant(&base, last).unwrap(),
            add_pendant(&add_pendant(&base, 0).unwrap(), 1).unwrap(),
        ));
    }
    let k4_minus = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]);
    let c6_chord = g(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]);
    let three_paths = g(5, &[(0, 1), (1, 4), (0, 2), (2, 4), (0, 3), (3, 4)]);
    for (base, u, v, side) in [
        (&k4_minus, 0, 2, vec![0, 1]),
        (&c6_chord, 0, 3, vec![0, 1, 2]),
        (&three_paths, 0, 4, vec![0, 1]),
    ] {
        let twisted = whitney_twist(base, u, v, &side).unwrap();
        same.push((add_pendant(base, 1).unwrap(), twisted.clone()));
        same.push((base.clone(), add_pendant(&twisted, 2).unwrap()));
    }
    for (a, b) in &same {
        let r = conjecture_evidence(a, b, None).unwrap();
        check(
            matches!(r.matroids, MatroidComparison::Isomorphic { .. }) && r.series_equal,
            || format!("{a:?} vs {b:?}: {r:?}"),
        )?;
    }

    // Different bridge-free matroids with the same number of edges and the
    // same cycle rank, told apart by their circuit sizes.
    let pool: Vec<Multigraph> = connected_multigraphs(5, 6)
        .into_iter()
        .filter(|g| cycle_space(g).rank() >= 1)
        .collect();
    let mut different = Vec::new();
    'outer: for (i, a) in pool.iter().enumerate() {
        for b in &pool[i + 1..] {
            let (fa, fb) = (bridge_free(a).0, bridge_free(b).0);
            if fa.edge_count() == fb.edge_count()
                && cycle_space(&fa).rank() == cycle_space(&fb).rank()
                && circuit_sizes(a) != circuit_sizes(b)
            {
                different.push((a.clone(), b.clone()));
                if different.len() == 12 {
                    break 'outer;
                }
            }
        }
    }
    let mut flagged = 0;
    for (a, b) in &different {
        let r = conjecture_evidence(a, b, None).unwrap();
        check(
            matches!(r.matroids, MatroidComparison::NotIsomorphic { .. }),
            || format!("{a:?} vs {b:?} not distinguished: {r:?}"),
        )?;
        if r.series_equal {
            flagged += 1;
        }
    }
    check(same.len() >= 10 && different.len() >= 10, || {
        format!(
            "only {} equal and {} different pairs",
            same.len(),
            different.len()
        )
    })?;
    Ok(format!(
        "{} pairs with equal bridge-free matroids have equal tree series; {} pairs with different matroids distinguished ({flagged} with equal series)",
        same.len(),
        different.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("forest algebra presentations", forest_algebra_presentations),
        ("tree algebra presentations", tree_algebra_presentations),
        ("t-labelled equivalences", labelled_equivalences),
        ("reconstruction round trip", reconstruction_round_trip),
        ("Whitney invariance", whitney_invariance),
        ("hypergraph matroid", hypergraph_matroid),
        ("hypergraph Tutte counts", hypergraph_tutte_counts),
        ("edge-to-pair assignment", pair_assignment),
        ("genericity stability", genericity_stability),
        ("bridge-free evidence", bridge_free_evidence),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .unwrap_or_else(|| "panicked".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(summary) => println!(
                "criterion {:>2} PASS  {name}: {summary} [{secs:.1}s]",
                i + 1
            ),
            Err(why) => {
                println!("criterion {:>2} FAIL  {name}: {why} [{secs:.1}s]", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", criteria.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
