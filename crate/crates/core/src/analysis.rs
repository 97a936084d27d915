//! Whole-space analyses: exhaustive pure-Nash search, standard-die
//! neutrality, one-step connectivity, and the beats digraph with directed
//! cycle search.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::dice::Die;
use crate::enumeration::all_dice;
use crate::par;
use crate::payoff::{beats, payoff, BeatsOutcome};
use crate::rational::Rational;

/// Outcome of the exhaustive pure-Nash search over the whole die space for
/// one side count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquilibriumReport {
    pub n: u32,
    pub space_size: u64,
    /// Ordered pairs (A, B) where A is a best response to B and B to A,
    /// listed in lexicographic pair order.
    pub equilibria: Vec<(Die, Die)>,
    /// True iff the only equilibrium is the standard die against itself.
    pub unique_standard: bool,
}

/// The full tournament as a digraph: nodes are all dice in lexicographic
/// order, an edge a→b means die a beats die b (strictly more winning face
/// pairs). Edges are (node index, node index), row-major.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BeatsDigraph {
    pub n: u32,
    pub nodes: Vec<Die>,
    pub edges: Vec<(u32, u32)>,
}

impl BeatsDigraph {
    /// Out-neighbor lists indexed like `nodes`.
    pub fn adjacency(&self) -> Vec<Vec<u32>> {
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for &(a, b) in &self.edges {
            adj[a as usize].push(b);
        }
        adj
    }
}

/// Finds every pure-strategy Nash equilibrium of the pick-a-die game for
/// side count `n` by exhaustive scan: (A, B) is an equilibrium iff no
/// alternative die improves either player's payoff against the other's
/// choice.
pub fn find_pure_nash(n: u32) -> EquilibriumReport {
    let dice = all_dice(n);
    let m = dice.len();
    // best_response[b] = indices a maximizing payoff(dice[a], dice[b])
    let best_response: Vec<Vec<usize>> = par::ordered_map(&dice, |b| {
        let scores: Vec<Rational> = dice
            .iter()
            .map(|a| payoff(a, b).expect("equal side counts"))
            .collect();
        let top = *scores.iter().max().expect("non-empty die space");
        (0..m).filter(|&a| scores[a] == top).collect()
    });
    let mut is_best = vec![false; m * m];
    for (b, rows) in best_response.iter().enumerate() {
        for &a in rows {
            is_best[a * m + b] = true;
        }
    }
    let mut equilibria = Vec::new();
    for a in 0..m {
        for b in 0..m {
            if is_best[a * m + b] && is_best[b * m + a] {
                equilibria.push((dice[a].clone(), dice[b].clone()));
            }
        }
    }
    let standard = Die::standard(n).ok();
    let unique_standard = match (&equilibria[..], standard) {
        ([(a, b)], Some(s)) => *a == s && *b == s,
        _ => false,
    };
    EquilibriumReport {
        n,
        space_size: m as u64,
        equilibria,
        unique_standard,
    }
}

/// True iff every die in the space scores exactly 1/2 against the standard
/// die — the standard die ties everything.
pub fn verify_standard_neutrality(n: u32) -> bool {
    let Ok(standard) = Die::standard(n) else {
        return true;
    };
    let dice = all_dice(n);
    par::all_of(&dice, |d| {
        payoff(d, &standard).expect("equal side counts") == Rational::ONE_HALF
    })
}

/// True iff the undirected one-step graph on the whole die space is
/// connected: breadth-first search from the standard die reaches every die.
pub fn verify_one_step_connectivity(n: u32) -> bool {
    let dice = all_dice(n);
    if dice.is_empty() {
        return true;
    }
    let index: BTreeMap<&Die, usize> = dice.iter().zip(0..).collect();
    let standard = Die::standard(n).expect("space is non-empty");
    let mut seen = vec![false; dice.len()];
    seen[index[&standard]] = true;
    let mut queue = VecDeque::from([standard]);
    let mut reached = 1usize;
    while let Some(die) = queue.pop_front() {
        for neighbor in die.one_step_neighbors() {
            let &i = index
                .get(&neighbor)
                .expect("one-step moves stay inside the die space");
            if !seen[i] {
                seen[i] = true;
                reached += 1;
                queue.push_back(neighbor);
            }
        }
    }
    reached == dice.len()
}

/// Evaluates the complete pairwise tournament and materializes the beats
/// relation as a digraph.
pub fn build_beats_digraph(n: u32) -> BeatsDigraph {
    let nodes = all_dice(n);
    let rows: Vec<Vec<u32>> = par::ordered_map(&nodes, |a| {
        nodes
            .iter()
            .enumerate()
            .filter(|(_, b)| beats(a, b).expect("equal side counts") == BeatsOutcome::AWins)
            .map(|(j, _)| j as u32)
            .collect()
    });
    let edges = rows
        .into_iter()
        .enumerate()
        .flat_map(|(i, row)| row.into_iter().map(move |j| (i as u32, j)))
        .collect();
    BeatsDigraph { n, nodes, edges }
}

/// All directed cycles of exactly `length` dice in the beats digraph,
/// deduplicated up to rotation. Each cycle is reported starting from its
/// lexicographically smallest die; the list is sorted.
pub fn find_nontransitive_cycles(n: u32, length: usize) -> Vec<Vec<Die>> {
    let graph = build_beats_digraph(n);
    let adj = graph.adjacency();
    let mut cycles: Vec<Vec<u32>> = Vec::new();
    let mut path: Vec<u32> = Vec::with_capacity(length);
    // every node on a cycle must exceed the start index, so each rotation
    // class is discovered exactly once, anchored at its smallest node
    fn extend(
        start: u32,
        path: &mut Vec<u32>,
        adj: &[Vec<u32>],
        length: usize,
        cycles: &mut Vec<Vec<u32>>,
    ) {
        let last = *path.last().expect("path starts non-empty") as usize;
        if path.len() == length {
            if adj[last].contains(&start) {
                cycles.push(path.clone());
            }
            return;
        }
        for &next in &adj[last] {
            if next > start && !path.contains(&next) {
                path.push(next);
                extend(start, path, adj, length, cycles);
                path.pop();
            }
        }
    }
    if length >= 2 {
        for start in 0..graph.nodes.len() as u32 {
            path.clear();
            path.push(start);
            extend(start, &mut path, &adj, length, &mut cycles);
        }
    }
    cycles.sort();
    cycles
        .into_iter()
        .map(|c| {
            c.into_iter()
                .map(|i| graph.nodes[i as usize].clone())
                .collect()
        })
        .collect()
}
