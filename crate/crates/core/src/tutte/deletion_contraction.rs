use std::collections::HashMap;

use super::poly::BivariatePolynomial;
use crate::graphs::Multigraph;

/// Minors with more vertices than this are not memoized.
const MEMO_MAX_VERTICES: usize = 12;

/// Multigraph stored as a symmetric multiplicity matrix. Parallel edges are
/// handled a whole class at a time.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Minor {
    n: usize,
    mult: Vec<u32>,
}

impl Minor {
    fn from_graph(g: &Multigraph) -> Self {
        let n = g.vertex_count();
        let mut m = Minor {
            n,
            mult: vec![0; n * n],
        };
        for &(u, v) in g.edges() {
            m.mult[u * n + v] += 1;
            m.mult[v * n + u] += 1;
        }
        m
    }

    fn at(&self, u: usize, v: usize) -> u32 {
        self.mult[u * self.n + v]
    }

    fn degree(&self, u: usize) -> u32 {
        (0..self.n).map(|v| self.at(u, v)).sum()
    }

    fn induced(&self, verts: &[usize]) -> Minor {
        let k = verts.len();
        let mut mult = Vec::with_capacity(k * k);
        for &a in verts {
            for &b in verts {
                mult.push(self.at(a, b));
            }
        }
        Minor { n: k, mult }
    }

    /// Vertex sets of the connected components that have at least one edge.
    fn nontrivial_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] || self.degree(s) == 0 {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for w in 0..self.n {
                    if !seen[w] && self.at(u, w) > 0 {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Relabeling by (degree, sorted incident multiplicities). Any
    /// deterministic relabeling is a sound memo key: equal keys mean equal
    /// labeled graphs. Refining by degree data just makes hits more likely.
    fn canonical(&self) -> Minor {
        let mut keys: Vec<(u32, Vec<u32>, usize)> = (0..self.n)
            .map(|u| {
                let mut row: Vec<u32> = (0..self.n)
                    .map(|v| self.at(u, v))
                    .filter(|&m| m > 0)
                    .collect();
                row.sort_unstable_by(|a, b| b.cmp(a));
                (self.degree(u), row, u)
            })
            .collect();
        keys.sort();
        let order: Vec<usize> = keys.into_iter().map(|k| k.2).collect();
        self.induced(&order)
    }

    fn without_class(&self, u: usize, v: usize) -> Minor {
        let mut m = self.clone();
        m.mult[u * self.n + v] = 0;
        m.mult[v * self.n + u] = 0;
        m
    }

    /// Contracts the `u`-`v` class: `v` merges into `u`, the class itself
    /// (which would become loops) is dropped.
    fn contract_class(&self, u: usize, v: usize) -> Minor {
        let keep: Vec<usize> = (0..self.n).filter(|&w| w != v).collect();
        let mut m = self.without_class(u, v);
        for w in 0..self.n {
            if w != u && w != v {
                let add = m.at(v, w);
                m.mult[u * self.n + w] += add;
                m.mult[w * self.n + u] += add;
            }
        }
        m.induced(&keep)
    }

    fn connects(&self, a: usize, b: usize) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![a];
        seen[a] = true;
        while let Some(u) = stack.pop() {
            if u == b {
                return true;
            }
            for w in 0..self.n {
                if !seen[w] && self.at(u, w) > 0 {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        false
    }
}

/// `1 + y + ... + y^(m-1)`, optionally with the constant replaced by `x`.
fn class_factor(m: u32, bridge: bool) -> BivariatePolynomial {
    let mut p = BivariatePolynomial::zero();
    for j in 0..m {
        p.add_term(0, j, 1.into());
    }
    if bridge {
        p = &(&p - &BivariatePolynomial::one()) + &BivariatePolynomial::x();
    }
    p
}

/// Tutte polynomial by deletion and contraction.
///
/// A parallel class of size `m` between `u` and `v` is processed at once:
/// contracting one member turns the other `m - 1` into loops, so
/// `T(G) = T(G - P) + (1 + y + ... + y^(m-1)) T(G / P)`, and when `P` is the
/// only connection between its ends, `T(G) = (x + y + ... + y^(m-1)) T(G / P)`.
/// Components multiply; minors are memoized on a relabeled form.
pub fn tutte_deletion_contraction(g: &Multigraph) -> BivariatePolynomial {
    let mut memo = HashMap::new();
    tutte_of(&Minor::from_graph(g), &mut memo)
}

fn tutte_of(g: &Minor, memo: &mut HashMap<Minor, BivariatePolynomial>) -> BivariatePolynomial {
    let comps = g.nontrivial_components();
    let mut product = BivariatePolynomial::one();
    for comp in comps {
        let part = tutte_connected(&g.induced(&comp).canonical(), memo);
        product = &product * &part;
    }
    product
}

fn tutte_connected(
    g: &Minor,
    memo: &mut HashMap<Minor, BivariatePolynomial>,
) -> BivariatePolynomial {
    if g.n <= 1 {
        return BivariatePolynomial::one();
    }
    if g.n <= MEMO_MAX_VERTICES {
        if let Some(p) = memo.get(g) {
            return p.clone();
        }
    }
    // Vertex 0 has the smallest degree after relabeling; take its heaviest class.
    let u = 0;
    let v = (1..g.n)
        .max_by_key(|&w| (g.at(u, w), std::cmp::Reverse(w)))
        .expect("n >= 2");
    let m = g.at(u, v);
    debug_assert!(m > 0, "connected minor has an edge at vertex 0");
    let deleted = g.without_class(u, v);
    let contracted = tutte_of(&g.contract_class(u, v), memo);
    let result = if deleted.connects(u, v) {
        let rest = tutte_of(&deleted, memo);
        &rest + &(&class_factor(m, false) * &contracted)
    } else {
        &class_factor(m, true) * &contracted
    };
    if g.n <= MEMO_MAX_VERTICES {
        memo.insert(g.clone(), result.clone());
    }
    result
}
