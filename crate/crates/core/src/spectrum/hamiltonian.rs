//! Hamiltonian path search by backtracking.

use crate::graph::Graph;

/// A hamiltonian path of `g` as a vertex sequence, if one exists.
/// Branches are ordered fail-first (fewest unvisited neighbors first)
/// and pruned when the unvisited remainder disconnects or when two
/// unvisited vertices have no unvisited neighbors left.
pub fn hamiltonian_path(g: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if n == 0 {
        return None;
    }
    if n == 1 {
        return Some(vec![0]);
    }
    if !g.is_connected() {
        return None;
    }
    // Degree-1 vertices must be path endpoints.
    let pendant: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 1).collect();
    if pendant.len() > 2 {
        return None;
    }
    let starts: Vec<usize> = if pendant.is_empty() {
        let mut all: Vec<usize> = (0..n).collect();
        all.sort_by_key(|&v| (g.degree(v), v));
        all
    } else {
        pendant
    };
    let mut visited = vec![false; n];
    let mut path = Vec::with_capacity(n);
    for s in starts {
        visited[s] = true;
        path.push(s);
        if extend(g, &mut visited, &mut path) {
            return Some(path);
        }
        path.pop();
        visited[s] = false;
    }
    None
}

fn extend(g: &Graph, visited: &mut Vec<bool>, path: &mut Vec<usize>) -> bool {
    let n = g.vertex_count();
    if path.len() == n {
        return true;
    }
    let current = *path.last().unwrap();
    if !remainder_viable(g, visited, current) {
        return false;
    }
    let mut options: Vec<(usize, usize)> = g
        .neighbors(current)
        .iter()
        .copied()
        .filter(|&w| !visited[w])
        .map(|w| {
            let free = g.neighbors(w).iter().filter(|&&x| !visited[x]).count();
            (free, w)
        })
        .collect();
    options.sort_unstable();
    for (_, w) in options {
        visited[w] = true;
        path.push(w);
        if extend(g, visited, path) {
            return true;
        }
        path.pop();
        visited[w] = false;
    }
    false
}

/// The unvisited vertices plus the current endpoint must stay connected,
/// and at most one unvisited vertex may have all its unvisited neighbors
/// exhausted (it can only be the final vertex, reached from the
/// endpoint).
fn remainder_viable(g: &Graph, visited: &[bool], current: usize) -> bool {
    let n = g.vertex_count();
    let mut stack = vec![current];
    let mut seen = vec![false; n];
    seen[current] = true;
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if !visited[w] && !seen[w] {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    let unvisited = visited.iter().filter(|&&b| !b).count();
    if reached != unvisited + 1 {
        return false;
    }
    let mut dead_ends = 0;
    for v in 0..n {
        if visited[v] {
            continue;
        }
        let free = g.neighbors(v).iter().filter(|&&x| !visited[x]).count();
        if free == 0 {
            // Only reachable directly from the endpoint, as the last vertex.
            if !g.neighbors(v).contains(&current) {
                return false;
            }
            dead_ends += 1;
            if dead_ends > 1 {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::graph::Edge;
    use crate::graph::SpanningTree;

    fn assert_is_ham_path(g: &Graph, path: &[usize]) {
        assert_eq!(path.len(), g.vertex_count());
        let edges: Vec<Edge> = path.windows(2).map(|w| Edge::new(w[0], w[1])).collect();
        let t = SpanningTree::new(g, edges).unwrap();
        assert!(t.leaf_count() <= 2);
    }

    #[test]
    fn petersen_is_traceable() {
        let g = corpus::petersen();
        let path = hamiltonian_path(&g).unwrap();
        assert_is_ham_path(&g, &path);
    }

    #[test]
    fn star_is_not_traceable() {
        assert_eq!(hamiltonian_path(&corpus::star(5)), None);
    }

    #[test]
    fn paths_and_cycles_are_traceable() {
        let p6 = corpus::path(6);
        assert_is_ham_path(&p6, &hamiltonian_path(&p6).unwrap());
        let c7 = corpus::cycle(7);
        assert_is_ham_path(&c7, &hamiltonian_path(&c7).unwrap());
    }

    #[test]
    fn spider_is_not_traceable() {
        // Three legs of length 2 from a center: no hamiltonian path.
        let g = Graph::new(
            7,
            &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)],
        )
        .unwrap();
        assert_eq!(hamiltonian_path(&g), None);
    }
}
