use std::collections::VecDeque;

use super::{components_with, GraphError, Multigraph, MAX_MASK_EDGES};
use crate::limits::Limits;

/// Matrix over GF(2) whose columns are indexed by edges. Rows are packed
/// into 64-bit words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Matrix {
    cols: usize,
    rows: Vec<Vec<u64>>,
}

impl Gf2Matrix {
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            rows: Vec::new(),
        }
    }

    fn words(&self) -> usize {
        self.cols.div_ceil(64)
    }

    /// Appends the indicator vector of `support` (column indices, repeats cancel).
    pub fn push_support(&mut self, support: impl IntoIterator<Item = usize>) {
        let mut row = vec![0u64; self.words()];
        for c in support {
            assert!(c < self.cols, "column {c} out of range");
            row[c / 64] ^= 1 << (c % 64);
        }
        self.rows.push(row);
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// Column indices set in row `r`.
    pub fn support(&self, r: usize) -> Vec<usize> {
        bits(&self.rows[r], self.cols)
    }

    /// Reduced row echelon form with zero rows dropped. Two matrices have the
    /// same row space iff their reduced forms are equal.
    pub fn reduced(&self) -> Gf2Matrix {
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for c in 0..self.cols {
            let (w, b) = (c / 64, 1u64 << (c % 64));
            let Some(p) = (rank..rows.len()).find(|&r| rows[r][w] & b != 0) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row[w] & b != 0 {
                    for (x, y) in row.iter_mut().zip(&pivot) {
                        *x ^= y;
                    }
                }
            }
            rank += 1;
        }
        rows.truncate(rank);
        Gf2Matrix {
            cols: self.cols,
            rows,
        }
    }

    pub fn rank(&self) -> usize {
        self.reduced().rows.len()
    }

    pub fn same_row_space(&self, other: &Gf2Matrix) -> bool {
        self.cols == other.cols && self.reduced() == other.reduced()
    }

    /// Whether the indicator vector of `support` lies in the row space.
    pub fn contains(&self, support: &[usize]) -> bool {
        let mut extended = self.clone();
        extended.push_support(support.iter().copied());
        extended.rank() == self.rank()
    }

    /// All vectors of the row space as sorted column sets. Intended for small ranks.
    pub fn row_space(&self) -> Vec<Vec<usize>> {
        let basis = self.reduced();
        let k = basis.rows.len();
        assert!(k <= 24, "row space of rank {k} is too large to list");
        let mut out = Vec::with_capacity(1 << k);
        for mask in 0u64..1 << k {
            let mut acc = vec![0u64; self.words()];
            for (i, row) in basis.rows.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    for (x, y) in acc.iter_mut().zip(row) {
                        *x ^= y;
                    }
                }
            }
            out.push(bits(&acc, self.cols));
        }
        out.sort();
        out
    }

    /// Moves column `c` to `map[c]`.
    pub fn relabel_columns(&self, map: &[usize]) -> Gf2Matrix {
        let mut out = Gf2Matrix::new(self.cols);
        for r in 0..self.rows.len() {
            out.push_support(self.support(r).into_iter().map(|c| map[c]));
        }
        out
    }

    /// Every row of `self` has even overlap with every row of `other`.
    pub fn is_orthogonal_to(&self, other: &Gf2Matrix) -> bool {
        self.rows.iter().all(|a| {
            other.rows.iter().all(|b| {
                a.iter()
                    .zip(b)
                    .map(|(x, y)| (x & y).count_ones())
                    .sum::<u32>()
                    % 2
                    == 0
            })
        })
    }
}

fn bits(words: &[u64], cols: usize) -> Vec<usize> {
    (0..cols)
        .filter(|&c| words[c / 64] >> (c % 64) & 1 == 1)
        .collect()
}

/// BFS spanning forest: `parent[v] = Some((p, edge))` for non-root vertices,
/// plus vertices in visiting order.
fn spanning_forest(g: &Multigraph) -> (Vec<Option<(usize, usize)>>, Vec<usize>, Vec<bool>) {
    let n = g.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        adj[u].push((v, i));
        adj[v].push((u, i));
    }
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    let mut tree_edge = vec![false; g.edge_count()];
    let mut visit = Vec::with_capacity(n);
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            visit.push(u);
            for &(w, e) in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some((u, e));
                    tree_edge[e] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    (parent, visit, tree_edge)
}

/// Basis of the cut space: the fundamental cut of every non-root vertex of a
/// BFS spanning forest (the edges leaving that vertex's subtree).
pub fn cut_space(g: &Multigraph) -> Gf2Matrix {
    let n = g.vertex_count();
    let (parent, visit, _) = spanning_forest(g);
    let mut m = Gf2Matrix::new(g.edge_count());
    // Children appear after their parents in BFS order, so a reverse sweep
    // accumulates subtree membership.
    let mut in_subtree = vec![vec![false; n]; n];
    for &v in visit.iter().rev() {
        in_subtree[v][v] = true;
        if let Some((p, _)) = parent[v] {
            let child = in_subtree[v].clone();
            for (x, y) in in_subtree[p].iter_mut().zip(child) {
                *x |= y;
            }
        }
    }
    for &v in &visit {
        if parent[v].is_none() {
            continue;
        }
        let side = &in_subtree[v];
        m.push_support(
            g.edges()
                .iter()
                .enumerate()
                .filter(|(_, &(a, b))| side[a] != side[b])
                .map(|(i, _)| i),
        );
    }
    m
}

/// Basis of the cycle space: the fundamental cycle of every non-forest edge.
pub fn cycle_space(g: &Multigraph) -> Gf2Matrix {
    let (parent, _, tree_edge) = spanning_forest(g);
    let path_to_root = |mut v: usize| {
        let mut path = vec![(v, None)];
        while let Some((p, e)) = parent[v] {
            path.push((p, Some(e)));
            v = p;
        }
        path
    };
    let mut m = Gf2Matrix::new(g.edge_count());
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        if tree_edge[i] {
            continue;
        }
        // Tree edges on both root paths cancel, leaving the a-b tree path.
        let support = path_to_root(a)
            .into_iter()
            .chain(path_to_root(b))
            .filter_map(|(_, e)| e)
            .chain(std::iter::once(i));
        m.push_support(support);
    }
    m
}

/// `true` iff removing `s` does not increase the number of components, i.e.
/// `s` contains no cut.
pub fn is_cut_free_support(g: &Multigraph, s: &[usize]) -> Result<bool, GraphError> {
    g.check_subset(s)?;
    let mut removed = vec![false; g.edge_count()];
    for &e in s {
        removed[e] = true;
    }
    let rest = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(i, _)| !removed[*i])
        .map(|(_, &e)| e);
    Ok(components_with(g.vertex_count(), rest) == g.component_count())
}

/// Minimal cuts (bonds) as edge bitmasks, sorted. A vertex set `S` inside a
/// component `C` yields a bond iff both `S` and `C \ S` induce connected subgraphs.
pub fn minimal_cuts(g: &Multigraph) -> Result<Vec<u64>, GraphError> {
    if g.edge_count() > MAX_MASK_EDGES {
        return Err(GraphError::CapExceeded {
            edges: g.edge_count(),
            cap: MAX_MASK_EDGES,
        });
    }
    let labels = g.component_labels();
    let cap = Limits::global().enumeration_cap;
    let mut cuts = Vec::new();
    for root in 0..g.vertex_count() {
        if labels[root] != root {
            continue;
        }
        let members: Vec<usize> = (0..g.vertex_count())
            .filter(|&v| labels[v] == root)
            .collect();
        let k = members.len();
        if k > cap {
            return Err(GraphError::CapExceeded { edges: k, cap });
        }
        let mut index = vec![usize::MAX; g.vertex_count()];
        for (i, &v) in members.iter().enumerate() {
            index[v] = i;
        }
        let local_edges: Vec<(usize, usize, usize)> = g
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, &(u, _))| labels[u] == root)
            .map(|(e, &(u, v))| (e, index[u], index[v]))
            .collect();
        let induced_connected = |mask: u64| {
            let verts = mask.count_ones() as usize;
            let inside = local_edges
                .iter()
                .filter(|&&(_, a, b)| mask >> a & 1 == 1 && mask >> b & 1 == 1)
                .map(|&(_, a, b)| (a, b));
            components_with(k, inside) == k - verts + 1
        };
        let full = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
        // Bit 0 (the root) always on the S side so each bond is seen once.
        for rest in 0..1u64 << (k - 1) {
            let side = 1 | rest << 1;
            if side == full || !induced_connected(side) || !induced_connected(full & !side) {
                continue;
            }
            let cut = local_edges
                .iter()
                .filter(|&&(_, a, b)| (side >> a & 1) != (side >> b & 1))
                .fold(0u64, |acc, &(e, _, _)| acc | 1 << e);
            cuts.push(cut);
        }
    }
    cuts.sort_unstable();
    cuts.dedup();
    Ok(cuts)
}

/// Edges whose removal increases the number of components.
pub fn bridges(g: &Multigraph) -> Vec<usize> {
    let c = g.component_count();
    (0..g.edge_count())
        .filter(|&i| {
            let rest = g
                .edges()
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, &e)| e);
            components_with(g.vertex_count(), rest) > c
        })
        .collect()
}

/// `g` with every bridge removed; vertices are kept. Also returns, for each
/// surviving edge, its index in `g`.
pub fn bridge_free(g: &Multigraph) -> (Multigraph, Vec<usize>) {
    let b = bridges(g);
    let kept: Vec<usize> = (0..g.edge_count()).filter(|i| !b.contains(i)).collect();
    (g.edge_subgraph(|i| !b.contains(&i)), kept)
}

/// Whether the cycle spaces agree when edge `i` of `g1` is identified with
/// edge `bijection[i]` of `g2`.
pub fn same_cycle_space(
    g1: &Multigraph,
    g2: &Multigraph,
    bijection: &[usize],
) -> Result<bool, GraphError> {
    if g1.edge_count() != g2.edge_count() {
        return Err(GraphError::SizeMismatch {
            left: g1.edge_count(),
            right: g2.edge_count(),
        });
    }
    g2.order_positions(bijection)?;
    Ok(cycle_space(g1)
        .relabel_columns(bijection)
        .same_row_space(&cycle_space(g2)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Multigraph {
        Multigraph::new(n, edges.to_vec()).unwrap()
    }

    /// All vertex-set boundaries, as the defining oracle for the cut space.
    fn boundaries(g: &Multigraph) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = (0u32..1 << g.vertex_count())
            .map(|s| {
                g.edges()
                    .iter()
                    .enumerate()
                    .filter(|(_, &(a, b))| (s >> a & 1) != (s >> b & 1))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn single_edge_cut_space() {
        let m = cut_space(&g(2, &[(0, 1)]));
        assert_eq!(m.row_count(), 1);
        assert_eq!(m.support(0), vec![0]);
    }

    #[test]
    fn k3_and_parallel_cut_spaces() {
        let k3 = Multigraph::complete(3);
        assert_eq!(
            cut_space(&k3).row_space(),
            vec![vec![], vec![0, 1], vec![0, 2], vec![1, 2]]
        );
        let par = g(2, &[(0, 1), (0, 1)]);
        assert_eq!(cut_space(&par).row_space(), vec![vec![], vec![0, 1]]);
    }

    #[test]
    fn cut_space_is_boundary_space_and_orthogonal_to_cycles() {
        let graphs = [
            Multigraph::complete(4),
            g(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (0, 1)]),
            g(6, &[(0, 1), (2, 3), (3, 4), (4, 2), (4, 5)]),
            Multigraph::edgeless(3),
        ];
        for gr in &graphs {
            let cuts = cut_space(gr);
            let cycles = cycle_space(gr);
            assert_eq!(cuts.row_space(), boundaries(gr));
            assert!(cuts.is_orthogonal_to(&cycles));
            let (v, e, c) = (gr.vertex_count(), gr.edge_count(), gr.component_count());
            assert_eq!(cuts.rank(), v - c);
            assert_eq!(cycles.rank(), e + c - v);
        }
    }

    #[test]
    fn cut_free_supports() {
        let k3 = Multigraph::complete(3);
        // Edges 01 and 02 form the star of vertex 0.
        assert!(!is_cut_free_support(&k3, &[0, 1]).unwrap());
        assert!(is_cut_free_support(&k3, &[0]).unwrap());
        let c4 = Multigraph::cycle(4);
        assert!(!is_cut_free_support(&c4, &[0, 2]).unwrap());
        assert!(is_cut_free_support(&g(2, &[(0, 1), (0, 1)]), &[1]).unwrap());
        assert!(!is_cut_free_support(&k3, &[0, 1, 2]).unwrap());
        assert!(!is_cut_free_support(&g(2, &[(0, 1)]), &[0]).unwrap());
        assert!(is_cut_free_support(&k3, &[]).unwrap());
    }

    #[test]
    fn minimal_cuts_of_k3_and_bowtie() {
        let k3 = Multigraph::complete(3);
        assert_eq!(minimal_cuts(&k3).unwrap(), vec![0b011, 0b101, 0b110]);
        let bowtie = g(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]);
        let cuts = minimal_cuts(&bowtie).unwrap();
        assert_eq!(cuts.len(), 6);
        for c in cuts {
            let s: Vec<usize> = (0..6).filter(|i| c >> i & 1 == 1).collect();
            assert!(!is_cut_free_support(&bowtie, &s).unwrap());
            for &drop in &s {
                let smaller: Vec<usize> = s.iter().copied().filter(|&x| x != drop).collect();
                assert!(is_cut_free_support(&bowtie, &smaller).unwrap());
            }
        }
    }

    #[test]
    fn bridge_detection() {
        assert_eq!(bridges(&Multigraph::path(3)), vec![0, 1]);
        assert_eq!(bridge_free(&Multigraph::path(3)).0.edge_count(), 0);
        assert!(bridges(&Multigraph::complete(3)).is_empty());
        let pendant = g(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]);
        assert_eq!(bridges(&pendant), vec![3]);
        // A bridge lies on no cycle and is a singleton cut.
        for gr in [&pendant, &Multigraph::complete(4)] {
            let cycles = cycle_space(gr);
            let b = bridges(gr);
            for e in 0..gr.edge_count() {
                let on_cycle = cycles.row_space().iter().any(|c| c.contains(&e));
                assert_eq!(b.contains(&e), !on_cycle);
                assert_eq!(b.contains(&e), !is_cut_free_support(gr, &[e]).unwrap());
            }
        }
    }

    #[test]
    fn cycle_space_comparisons() {
        let k3 = Multigraph::complete(3);
        assert!(same_cycle_space(&k3, &k3, &[0, 1, 2]).unwrap());
        let triple = g(2, &[(0, 1), (0, 1), (0, 1)]);
        for bij in [[0, 1, 2], [2, 0, 1], [1, 2, 0]] {
            assert!(!same_cycle_space(&k3, &triple, &bij).unwrap());
        }
        assert!(matches!(
            same_cycle_space(&k3, &Multigraph::path(3), &[0, 1]),
            Err(GraphError::SizeMismatch { .. })
        ));
    }
}
