use super::{GraphError, Multigraph};

/// Replaces every edge by `t` parallel copies. Copy `j` (0-based) of edge `e`
/// gets index `e * t + j`, so the copies of one edge sit together and
/// different edges keep their relative order.
///
/// # Panics
/// If `t == 0`.
pub fn clone_graph(g: &Multigraph, t: usize) -> Multigraph {
    assert!(t >= 1, "clone multiplicity must be positive");
    let edges = g
        .edges()
        .iter()
        .flat_map(|&e| std::iter::repeat_n(e, t))
        .collect();
    Multigraph {
        n: g.vertex_count(),
        edges,
    }
}

/// Glues `w` onto `v`. The two must lie in different components. Vertex `w`
/// disappears and the vertices above it shift down by one; edge indices are
/// unchanged.
pub fn whitney_identify(g: &Multigraph, v: usize, w: usize) -> Result<Multigraph, GraphError> {
    g.check_vertex(v)?;
    g.check_vertex(w)?;
    let labels = g.component_labels();
    if labels[v] == labels[w] {
        return Err(GraphError::Whitney(format!(
            "vertices {v} and {w} are in the same component"
        )));
    }
    let relabel = |x: usize| {
        let x = if x == w { v } else { x };
        if x > w {
            x - 1
        } else {
            x
        }
    };
    Ok(Multigraph {
        n: g.vertex_count() - 1,
        edges: g
            .edges()
            .iter()
            .map(|&(a, b)| (relabel(a), relabel(b)))
            .collect(),
    })
}

/// Finds a vertex other than `allowed` touched by an edge inside `side` and an
/// edge outside it.
fn crossing_vertex(
    g: &Multigraph,
    side: &[bool],
    allowed: &[usize],
) -> Option<(usize, usize, usize)> {
    let mut first_in = vec![None; g.vertex_count()];
    let mut first_out = vec![None; g.vertex_count()];
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        for x in [a, b] {
            if allowed.contains(&x) {
                continue;
            }
            let slot = if side[i] {
                &mut first_in[x]
            } else {
                &mut first_out[x]
            };
            slot.get_or_insert(i);
        }
    }
    (0..g.vertex_count()).find_map(|x| match (first_in[x], first_out[x]) {
        (Some(e1), Some(e2)) => Some((x, e1, e2)),
        _ => None,
    })
}

fn side_mask(g: &Multigraph, side: &[usize]) -> Result<Vec<bool>, GraphError> {
    g.check_subset(side)?;
    let mut mask = vec![false; g.edge_count()];
    for &e in side {
        mask[e] = true;
    }
    Ok(mask)
}

/// Splits `cut_vertex` in two. Edges in `side` move to a new vertex with index
/// `n`; the remaining edges stay on `cut_vertex`. The side must touch
/// `cut_vertex`, so must its complement, and the two may share no other vertex.
pub fn whitney_cleave(
    g: &Multigraph,
    cut_vertex: usize,
    side: &[usize],
) -> Result<Multigraph, GraphError> {
    g.check_vertex(cut_vertex)?;
    let mask = side_mask(g, side)?;
    let touches = |inside: bool| {
        g.edges()
            .iter()
            .enumerate()
            .any(|(i, &(a, b))| mask[i] == inside && (a == cut_vertex || b == cut_vertex))
    };
    if !touches(true) || !touches(false) {
        return Err(GraphError::Whitney(format!(
            "vertex {cut_vertex} must have incident edges both inside and outside the side"
        )));
    }
    if let Some((x, e1, e2)) = crossing_vertex(g, &mask, &[cut_vertex]) {
        return Err(GraphError::Whitney(format!(
            "vertex {cut_vertex} does not separate the side: edges {e1} (side) and {e2} (rest) meet at vertex {x}"
        )));
    }
    let fresh = g.vertex_count();
    let moved = |x: usize| if x == cut_vertex { fresh } else { x };
    Ok(Multigraph {
        n: fresh + 1,
        edges: g
            .edges()
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| {
                if mask[i] {
                    (moved(a), moved(b))
                } else {
                    (a, b)
                }
            })
            .collect(),
    })
}

/// Twists about `{u, v}`: the edges outside `side` have `u` and `v` exchanged.
/// Removing `u` and `v` must separate `side` from the remaining edges.
pub fn whitney_twist(
    g: &Multigraph,
    u: usize,
    v: usize,
    side: &[usize],
) -> Result<Multigraph, GraphError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(GraphError::Whitney(
            "twist needs two distinct vertices".into(),
        ));
    }
    let mask = side_mask(g, side)?;
    if let Some((x, e1, e2)) = crossing_vertex(g, &mask, &[u, v]) {
        return Err(GraphError::Whitney(format!(
            "{{{u}, {v}}} does not separate the side: edges {e1} (side) and {e2} (rest) meet at vertex {x}"
        )));
    }
    let swap = |x: usize| {
        if x == u {
            v
        } else if x == v {
            u
        } else {
            x
        }
    };
    Ok(Multigraph {
        n: g.vertex_count(),
        edges: g
            .edges()
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| if mask[i] { (a, b) } else { (swap(a), swap(b)) })
            .collect(),
    })
}
