use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};

/// Chain of `2i-1` intervals whose center interval carries a doubled origin,
/// with an involution acting on it.
///
/// Vertices of the combinatorial model: junctions `v_0..v_(2i-1)` (interval
/// `j` runs from `v_(j-1)` to `v_j`) followed by the two origin copies, which
/// both sit inside the center interval.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntervalStar {
    intervals: usize,
    /// `perm[j-1]` is the image of interval `j`.
    perm: Vec<usize>,
    swap_origins: bool,
}

impl IntervalStar {
    /// `perm` must be the identity or the reversal of the chain.
    pub fn new(intervals: usize, perm: Vec<usize>, swap_origins: bool) -> Result<Self> {
        if intervals == 0 || intervals.is_multiple_of(2) {
            return Err(Error::Parameter(format!("need an odd number of intervals, got {intervals}")));
        }
        let identity: Vec<usize> = (1..=intervals).collect();
        let reversal: Vec<usize> = (1..=intervals).rev().collect();
        if perm != identity && perm != reversal {
            return Err(Error::Parameter(
                "interval map must be the identity or the reversal of the chain".into(),
            ));
        }
        Ok(IntervalStar { intervals, perm, swap_origins })
    }

    pub fn intervals(&self) -> usize {
        self.intervals
    }

    /// 1-based index of the interval holding the doubled origin.
    pub fn center(&self) -> usize {
        self.intervals / 2 + 1
    }

    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    pub fn swaps_origins(&self) -> bool {
        self.swap_origins
    }

    fn reverses(&self) -> bool {
        self.intervals > 1 && self.perm[0] != 1
    }

    fn origin(&self, copy: usize) -> usize {
        self.intervals + 1 + copy
    }

    fn vertex_count(&self) -> usize {
        self.intervals + 3
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        let mut link = |a: usize, b: usize| {
            adj[a].push(b);
            adj[b].push(a);
        };
        let c = self.center();
        for j in 1..=self.intervals {
            if j != c {
                link(j - 1, j);
            }
        }
        for copy in 0..2 {
            link(c - 1, self.origin(copy));
            link(self.origin(copy), c);
        }
        adj
    }

    /// Image of a vertex under the involution.
    pub fn map_vertex(&self, v: usize) -> usize {
        if v <= self.intervals {
            if self.reverses() {
                self.intervals - v
            } else {
                v
            }
        } else if self.swap_origins {
            self.origin(1 - (v - self.intervals - 1))
        } else {
            v
        }
    }

    pub fn is_involution(&self) -> bool {
        (0..self.vertex_count()).all(|v| self.map_vertex(self.map_vertex(v)) == v)
            && self.perm.iter().enumerate().all(|(j, &p)| self.perm[p - 1] == j + 1)
    }

    /// Every simple path between two interval endpoints that passes through
    /// exactly one origin copy, as a vertex set.
    pub fn candidate_embeddings(&self) -> Vec<BTreeSet<usize>> {
        let adj = self.adjacency();
        let origins = [self.origin(0), self.origin(1)];
        let mut found: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        for start in 0..=self.intervals {
            let mut path = vec![start];
            let mut on_path = vec![false; self.vertex_count()];
            on_path[start] = true;
            self.extend(&adj, &mut path, &mut on_path, &origins, &mut found);
        }
        found.into_iter().collect()
    }

    fn extend(
        &self,
        adj: &[Vec<usize>],
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        origins: &[usize; 2],
        found: &mut BTreeSet<BTreeSet<usize>>,
    ) {
        let last = *path.last().expect("nonempty path");
        let copies = path.iter().filter(|v| origins.contains(v)).count();
        if path.len() > 1 && last <= self.intervals && copies == 1 {
            found.insert(path.iter().copied().collect());
        }
        for &next in &adj[last] {
            if !on_path[next] {
                on_path[next] = true;
                path.push(next);
                self.extend(adj, path, on_path, origins, found);
                path.pop();
                on_path[next] = false;
            }
        }
    }
}

/// The quotient `I*` for index `i`: reversal of the chain, origins swapped.
pub fn interval_quotient(i: usize) -> Result<IntervalStar> {
    if i == 0 {
        return Err(Error::Parameter("i must be >= 1".into()));
    }
    let n = 2 * i - 1;
    IntervalStar::new(n, (1..=n).rev().collect(), true)
}

/// True when no candidate embedded interval is invariant under the involution.
pub fn invariant_embedding_obstruction(star: &IntervalStar) -> bool {
    star.candidate_embeddings().iter().all(|set| {
        let image: BTreeSet<usize> = set.iter().map(|&v| star.map_vertex(v)).collect();
        image != *set
    })
}
