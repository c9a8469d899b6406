//! Union-find over integer offsets. Each node stores `idx(node) - idx(parent)`.

use super::constraints::IndexConstraint;
use std::collections::VecDeque;

pub struct OffsetUnionFind {
    parent: Vec<usize>,
    offset: Vec<i64>,
    size: Vec<usize>,
}

impl OffsetUnionFind {
    pub fn new(n: usize) -> Self {
        OffsetUnionFind {
            parent: (0..n).collect(),
            offset: vec![0; n],
            size: vec![1; n],
        }
    }

    /// Returns `(root, idx(i) - idx(root))`, compressing the path.
    pub fn find(&mut self, i: usize) -> (usize, i64) {
        let mut path = Vec::new();
        let mut cur = i;
        while self.parent[cur] != cur {
            path.push(cur);
            cur = self.parent[cur];
        }
        let root = cur;
        // walk back from the node nearest the root, accumulating offsets
        let mut acc = 0;
        for &node in path.iter().rev() {
            acc += self.offset[node];
            self.offset[node] = acc;
            self.parent[node] = root;
        }
        (root, if path.is_empty() { 0 } else { self.offset[i] })
    }

    /// Imposes `idx(l) = idx(r) + off`. Returns false on contradiction.
    pub fn union(&mut self, l: usize, r: usize, off: i64) -> bool {
        let (rl, pl) = self.find(l);
        let (rr, pr) = self.find(r);
        if rl == rr {
            return pl == pr + off;
        }
        // idx(rl) - idx(rr) = pr + off - pl
        let d = pr + off - pl;
        if self.size[rl] <= self.size[rr] {
            self.parent[rl] = rr;
            self.offset[rl] = d;
            self.size[rr] += self.size[rl];
        } else {
            self.parent[rr] = rl;
            self.offset[rr] = -d;
            self.size[rl] += self.size[rr];
        }
        true
    }
}

/// Solves the system. On success returns one index per node with each
/// connected component shifted so its minimum is 0. On failure returns the
/// indices (into `constraints`) of a cycle with nonzero net offset, the
/// violated constraint first.
pub fn solve(n: usize, constraints: &[IndexConstraint]) -> Result<Vec<i64>, Vec<usize>> {
    let mut uf = OffsetUnionFind::new(n);
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (ci, c) in constraints.iter().enumerate() {
        let (rl, _) = uf.find(c.left);
        let (rr, _) = uf.find(c.right);
        let joined = rl != rr;
        if !uf.union(c.left, c.right, c.offset) {
            let mut cycle = vec![ci];
            cycle.extend(forest_path(&adj, c.right, c.left));
            return Err(cycle);
        }
        if joined {
            adj[c.left].push((c.right, ci));
            adj[c.right].push((c.left, ci));
        }
    }
    let mut rel = vec![0i64; n];
    let mut min_by_root = vec![i64::MAX; n];
    for i in 0..n {
        let (root, d) = uf.find(i);
        rel[i] = d;
        min_by_root[root] = min_by_root[root].min(d);
    }
    Ok((0..n)
        .map(|i| {
            let (root, _) = uf.find(i);
            rel[i] - min_by_root[root]
        })
        .collect())
}

/// Constraint indices along the spanning-forest path from `from` to `to`.
fn forest_path(adj: &[Vec<(usize, usize)>], from: usize, to: usize) -> Vec<usize> {
    if from == to {
        return Vec::new();
    }
    let mut prev: Vec<Option<(usize, usize)>> = vec![None; adj.len()];
    let mut seen = vec![false; adj.len()];
    let mut queue = VecDeque::from([from]);
    seen[from] = true;
    while let Some(u) = queue.pop_front() {
        if u == to {
            break;
        }
        for &(v, ci) in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                prev[v] = Some((u, ci));
                queue.push_back(v);
            }
        }
    }
    let mut path = Vec::new();
    let mut cur = to;
    while let Some((p, ci)) = prev[cur] {
        path.push(ci);
        cur = p;
    }
    path.reverse();
    path
}

/// Net offset of a closed walk through `cycle`, starting at the left node
/// of the first constraint. `None` if the constraints do not chain into a
/// closed walk.
pub fn cycle_net_offset(cycle: &[IndexConstraint]) -> Option<i64> {
    let start = cycle.first()?.left;
    let mut cur = start;
    let mut net = 0;
    for c in cycle {
        if c.left == cur {
            net += c.offset;
            cur = c.right;
        } else if c.right == cur {
            net -= c.offset;
            cur = c.left;
        } else {
            return None;
        }
    }
    (cur == start).then_some(net)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(left: usize, right: usize, offset: i64) -> IndexConstraint {
        IndexConstraint {
            left,
            right,
            offset,
            origin: String::new(),
        }
    }

    #[test]
    fn solves_chain_and_normalizes() {
        let cs = [c(1, 0, 1), c(2, 1, 1), c(3, 3, 0)];
        assert_eq!(solve(4, &cs).unwrap(), vec![0, 1, 2, 0]);
    }

    #[test]
    fn negative_offsets_shift_to_zero() {
        let cs = [c(1, 0, -3)];
        assert_eq!(solve(2, &cs).unwrap(), vec![3, 0]);
    }

    #[test]
    fn conflict_cycle_has_nonzero_net() {
        // 1 = 0 + 1, 2 = 1 + 1, 0 = 2 + 0
        let cs = vec![c(1, 0, 1), c(2, 1, 1), c(0, 2, 0)];
        let cycle = solve(3, &cs).unwrap_err();
        assert_eq!(cycle[0], 2);
        let picked: Vec<_> = cycle.iter().map(|&i| cs[i].clone()).collect();
        assert_eq!(cycle_net_offset(&picked), Some(2));
    }

    #[test]
    fn self_loop_conflict() {
        let cs = vec![c(0, 0, 1)];
        let cycle = solve(1, &cs).unwrap_err();
        assert_eq!(cycle, vec![0]);
        assert_eq!(cycle_net_offset(&[cs[0].clone()]), Some(1));
    }
}
