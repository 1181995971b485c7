//! Test corpora: small multigraphs up to isomorphism and seeded random
//! hypergraphs.

use std::collections::BTreeSet;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graphs::Multigraph;
use crate::hypergraphs::Hypergraph;

/// Smallest sorted edge list over all relabellings of the vertices.
fn canonical(n: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    loop {
        let mut image: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        image.sort_unstable();
        if best.as_ref().is_none_or(|b| image < *b) {
            best = Some(image);
        }
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            break;
        };
        let j = (i..n)
            .rev()
            .find(|&j| perm[j] > perm[i - 1])
            .expect("larger entry exists");
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    best.unwrap_or_default()
}

/// Loopless multigraphs with `1..=max_vertices` vertices and at most
/// `max_edges` edges, one per isomorphism class, ordered by vertex count,
/// then edge count, then canonical edge list.
pub fn multigraphs(max_vertices: usize, max_edges: usize, connected_only: bool) -> Vec<Multigraph> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let mut classes = BTreeSet::new();
        let mut current = Vec::new();
        multisets(&pairs, 0, max_edges, &mut current, &mut |edges| {
            classes.insert((edges.len(), canonical(n, edges)));
        });
        for (_, edges) in classes {
            let g = Multigraph::new(n, edges).expect("pairs are valid edges");
            if !connected_only || g.is_connected() {
                out.push(g);
            }
        }
    }
    out
}

fn multisets(
    pairs: &[(usize, usize)],
    from: usize,
    budget: usize,
    current: &mut Vec<(usize, usize)>,
    visit: &mut impl FnMut(&[(usize, usize)]),
) {
    visit(current);
    if budget == 0 {
        return;
    }
    for i in from..pairs.len() {
        current.push(pairs[i]);
        multisets(pairs, i, budget - 1, current, visit);
        current.pop();
    }
}

pub fn connected_multigraphs(max_vertices: usize, max_edges: usize) -> Vec<Multigraph> {
    multigraphs(max_vertices, max_edges, true)
}

/// Shape of random hypergraphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HypergraphShape {
    pub max_vertices: usize,
    pub max_edges: usize,
    pub max_edge_size: usize,
}

impl Default for HypergraphShape {
    fn default() -> Self {
        Self {
            max_vertices: 5,
            max_edges: 5,
            max_edge_size: 4,
        }
    }
}

/// `count` hypergraphs with `2..=max_vertices` vertices, `0..=max_edges`
/// edges, and edge sizes in `2..=max_edge_size`, all uniform.
pub fn random_hypergraphs(count: usize, seed: u64, shape: HypergraphShape) -> Vec<Hypergraph> {
    assert!(shape.max_vertices >= 2 && shape.max_edge_size >= 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=shape.max_vertices);
            let m = rng.gen_range(0..=shape.max_edges);
            let edges = (0..m)
                .map(|_| {
                    let size = rng.gen_range(2..=shape.max_edge_size.min(n));
                    sample(&mut rng, n, size).into_vec()
                })
                .collect();
            Hypergraph::new(n, edges).expect("sampled edges are valid")
        })
        .collect()
}
