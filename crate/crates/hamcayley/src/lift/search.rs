//! Deterministic backtracking hamiltonian-cycle search.

use crate::graph::{verify_hamiltonian, Label, VertexGraph, Walk};

/// Result of a bounded search. `NoCycle` means the search space was
/// exhausted; `Timeout` means the expansion budget ran out first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found { walk: Walk, expansions: u64 },
    NoCycle { expansions: u64 },
    Timeout { expansions: u64 },
}

impl SearchOutcome {
    pub fn expansions(&self) -> u64 {
        match self {
            SearchOutcome::Found { expansions, .. }
            | SearchOutcome::NoCycle { expansions }
            | SearchOutcome::Timeout { expansions } => *expansions,
        }
    }
}

struct Searcher {
    /// Distinct neighbor targets per vertex, with the least label reaching
    /// each (ordered by seed-permuted label priority).
    adj: Vec<Vec<(u32, Label)>>,
    start: usize,
    visited: Vec<bool>,
    /// Unvisited-neighbor counts, maintained incrementally.
    free: Vec<u32>,
    path: Vec<Label>,
    budget: u64,
    expansions: u64,
}

enum Dfs {
    Found,
    Exhausted,
    Timeout,
}

impl Searcher {
    fn prune_violates(&self, head: usize) -> bool {
        // every unvisited vertex still needs two free connections; being
        // adjacent to the head or to the start counts as one each
        for u in 0..self.adj.len() {
            if self.visited[u] {
                continue;
            }
            let mut need = self.free[u];
            if need >= 2 {
                continue;
            }
            for &(t, _) in &self.adj[u] {
                let t = t as usize;
                if t == head || t == self.start {
                    need += 1;
                }
            }
            if need < 2 {
                return true;
            }
        }
        false
    }

    /// Same condition, but only for vertices whose situation can have
    /// changed when the head moved: neighbors of the old and new head.
    fn prune_violates_near(&self, old_head: usize, head: usize) -> bool {
        let check = |u: usize| -> bool {
            if self.visited[u] {
                return false;
            }
            let mut need = self.free[u];
            if need >= 2 {
                return false;
            }
            for &(t, _) in &self.adj[u] {
                let t = t as usize;
                if t == head || t == self.start {
                    need += 1;
                }
            }
            need < 2
        };
        self.adj[old_head].iter().any(|&(t, _)| check(t as usize))
            || self.adj[head].iter().any(|&(t, _)| check(t as usize))
    }

    fn dfs(&mut self, head: usize, depth: usize) -> Dfs {
        self.expansions += 1;
        if self.expansions > self.budget {
            return Dfs::Timeout;
        }
        let n = self.adj.len();
        if depth == n {
            if let Some(&(_, l)) = self.adj[head].iter().find(|&&(t, _)| t as usize == self.start)
            {
                self.path.push(l);
                return Dfs::Found;
            }
            return Dfs::Exhausted;
        }
        // Warnsdorff order: fewest onward options first, label priority as
        // the tie-break (candidate lists are already in priority order)
        let mut cands: Vec<(u32, u32, Label)> = self.adj[head]
            .iter()
            .filter(|&&(t, _)| !self.visited[t as usize])
            .map(|&(t, l)| (self.free[t as usize], t, l))
            .collect();
        cands.sort_by_key(|&(f, _, _)| f);
        for (_, t, l) in cands {
            let t = t as usize;
            self.visited[t] = true;
            for i in 0..self.adj[t].len() {
                let u = self.adj[t][i].0 as usize;
                self.free[u] -= 1;
            }
            self.path.push(l);
            let dead = depth + 1 < n && self.prune_violates_near(head, t);
            if !dead {
                match self.dfs(t, depth + 1) {
                    Dfs::Found => return Dfs::Found,
                    Dfs::Timeout => return Dfs::Timeout,
                    Dfs::Exhausted => {}
                }
            }
            self.path.pop();
            for i in 0..self.adj[t].len() {
                let u = self.adj[t][i].0 as usize;
                self.free[u] += 1;
            }
            self.visited[t] = false;
        }
        Dfs::Exhausted
    }
}

/// Searches for a hamiltonian cycle by depth-first backtracking with
/// fewest-options-first ordering and a degree feasibility prune.
///
/// The budget counts node expansions, so outcomes are reproducible across
/// machines. The seed permutes the label priority used for tie-breaking
/// (seed 0 keeps natural label order); for a fixed (graph, budget, seed)
/// the outcome is deterministic. Any returned walk has already passed
/// [`verify_hamiltonian`].
pub fn ham_search<G: VertexGraph + ?Sized>(graph: &G, budget: u64, seed: u64) -> SearchOutcome {
    let n = graph.vertex_count();
    if n < 3 {
        // a cycle needs three distinct edges
        return SearchOutcome::NoCycle { expansions: 0 };
    }
    let priority = label_priority(graph.alphabet(), seed);
    let mut adj: Vec<Vec<(u32, Label)>> = Vec::with_capacity(n);
    for v in 0..n {
        let mut targets: Vec<(u32, Label)> = Vec::new();
        for &l in &priority {
            if let Some(t) = graph.step(v, l) {
                if t != v && !targets.iter().any(|&(u, _)| u as usize == t) {
                    targets.push((t as u32, l));
                }
            }
        }
        adj.push(targets);
    }
    let start = 0usize;
    let mut free: Vec<u32> = adj.iter().map(|a| a.len() as u32).collect();
    let mut visited = vec![false; n];
    visited[start] = true;
    for &(t, _) in &adj[start] {
        free[t as usize] -= 1;
    }
    let mut s = Searcher {
        adj,
        start,
        visited,
        free,
        path: Vec::with_capacity(n),
        budget,
        expansions: 0,
    };
    if s.prune_violates(start) {
        return SearchOutcome::NoCycle { expansions: 0 };
    }
    match s.dfs(start, 1) {
        Dfs::Found => {
            let walk = Walk::new(graph.vertex_element(start), s.path.clone());
            debug_assert!(verify_hamiltonian(graph, &walk).is_ok());
            SearchOutcome::Found { walk, expansions: s.expansions }
        }
        Dfs::Exhausted => SearchOutcome::NoCycle { expansions: s.expansions },
        Dfs::Timeout => SearchOutcome::Timeout { expansions: s.expansions },
    }
}

/// Label priority: natural order for seed 0, otherwise a seeded
/// Fisher-Yates permutation driven by splitmix64.
fn label_priority(alphabet: &[Label], seed: u64) -> Vec<Label> {
    let mut order: Vec<Label> = alphabet.to_vec();
    if seed != 0 {
        let mut state = seed;
        let mut next = || {
            state = state.wrapping_add(0x9e3779b97f4a7c15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
            z ^ (z >> 31)
        };
        for i in (1..order.len()).rev() {
            let j = (next() % (i as u64 + 1)) as usize;
            order.swap(i, j);
        }
    }
    order
}
