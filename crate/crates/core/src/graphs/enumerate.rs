//! Exhaustive generation of small graph families, one representative per
//! isomorphism class.

use super::{CanonicalLabel, Dir, Graph, GraphBuilder, GraphError, Result};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VacuumOptions {
    /// Largest vertex count; `None` means `2 · max_order`, which is exact
    /// when every valence is at least 3.
    pub vertex_cap: Option<usize>,
    /// Maximum number of candidate multigraphs generated before giving up.
    pub budget: u64,
    /// Flag bound passed to the canonical labeller.
    pub flag_bound: usize,
}

impl Default for VacuumOptions {
    fn default() -> Self {
        VacuumOptions { vertex_cap: None, budget: 2_000_000, flag_bound: 64 }
    }
}

impl VacuumOptions {
    pub fn cap_for(&self, max_order: usize) -> usize {
        self.vertex_cap.unwrap_or(2 * max_order)
    }
}

/// Tail-free graphs whose vertex valences lie in `valences` and with
/// `|E| − |V| ≤ max_order`, including the empty graph, sorted by
/// `(|E| − |V|, |V|, label)`.
pub fn enumerate_vacuum_graphs(
    max_order: usize,
    valences: &BTreeSet<usize>,
    options: &VacuumOptions,
) -> Result<Vec<Graph>> {
    if let Some(&0) = valences.first() {
        return Err(GraphError::BadValence(0));
    }
    let cap = options.cap_for(max_order);
    let valences: Vec<usize> = valences.iter().copied().collect();
    let mut classes: BTreeMap<(i64, usize, CanonicalLabel), Graph> = BTreeMap::new();
    let mut spent = 0u64;
    for v in 0..=cap {
        for degrees in degree_sequences(&valences, v) {
            let sum: usize = degrees.iter().sum();
            if sum % 2 == 1 || (sum / 2) as i64 - v as i64 > max_order as i64 {
                continue;
            }
            let mut adj = vec![vec![0usize; v]; v];
            let mut remaining = degrees.clone();
            let mut emit = |adj: &Vec<Vec<usize>>| -> Result<()> {
                spent += 1;
                if spent > options.budget {
                    return Err(GraphError::BudgetExceeded { budget: options.budget });
                }
                let g = multigraph(adj)?;
                let label = g.canonical_label_bounded(options.flag_bound)?;
                let key = (-g.euler_characteristic(), g.vertex_count(), label);
                classes.entry(key).or_insert(g);
                Ok(())
            };
            fill(0, 0, &mut adj, &mut remaining, &mut emit)?;
        }
    }
    Ok(classes.into_values().collect())
}

/// Non-decreasing sequences of length `n` drawn from `valences`.
fn degree_sequences(valences: &[usize], n: usize) -> Vec<Vec<usize>> {
    fn rec(valences: &[usize], start: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in start..valences.len() {
            cur.push(valences[i]);
            rec(valences, i, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(valences, 0, n, &mut Vec::new(), &mut out);
    out
}

/// Fills the upper triangle row by row; `adj[i][i]` counts loops, which use
/// two units of degree.
fn fill(
    i: usize,
    j: usize,
    adj: &mut Vec<Vec<usize>>,
    remaining: &mut Vec<usize>,
    emit: &mut dyn FnMut(&Vec<Vec<usize>>) -> Result<()>,
) -> Result<()> {
    let n = adj.len();
    if i == n {
        return emit(adj);
    }
    if j == n {
        // Row i must be exhausted before moving on.
        return if remaining[i] == 0 { fill(i + 1, i + 1, adj, remaining, emit) } else { Ok(()) };
    }
    let max = if i == j { remaining[i] / 2 } else { remaining[i].min(remaining[j]) };
    for m in 0..=max {
        adj[i][j] = m;
        if i == j {
            remaining[i] -= 2 * m;
        } else {
            remaining[i] -= m;
            remaining[j] -= m;
        }
        fill(i, j + 1, adj, remaining, emit)?;
        if i == j {
            remaining[i] += 2 * m;
        } else {
            remaining[i] += m;
            remaining[j] += m;
        }
    }
    adj[i][j] = 0;
    Ok(())
}

fn multigraph(adj: &[Vec<usize>]) -> Result<Graph> {
    let mut b = GraphBuilder::new();
    b.vertices(adj.len());
    for i in 0..adj.len() {
        for j in i..adj.len() {
            for _ in 0..adj[i][j] {
                b.edge(i, j);
            }
        }
    }
    b.build()
}

/// Oriented graphs (tails allowed, wheels allowed) with `1..=max_vertices`
/// vertices and at most `max_flags` flags, sorted by
/// `(|V|, |F|, label)`. With `connected` only connected graphs are kept.
pub fn enumerate_oriented_graphs(max_vertices: usize, max_flags: usize, connected: bool) -> Result<Vec<Graph>> {
    let mut classes: BTreeMap<(usize, usize, CanonicalLabel), Graph> = BTreeMap::new();
    for n in 1..=max_vertices {
        // Slots: per vertex (in tails, out tails, loops), then ordered pairs.
        let mut slots: Vec<(Slot, usize)> = Vec::new();
        for v in 0..n {
            slots.push((Slot::Tail(v, Dir::In), 1));
            slots.push((Slot::Tail(v, Dir::Out), 1));
            slots.push((Slot::Arrow(v, v), 2));
        }
        for s in 0..n {
            for t in 0..n {
                if s != t {
                    slots.push((Slot::Arrow(s, t), 2));
                }
            }
        }
        let mut counts = vec![0usize; slots.len()];
        let mut err = None;
        distribute(0, max_flags, &slots, &mut counts, &mut |counts| {
            if err.is_some() {
                return;
            }
            let mut b = GraphBuilder::new();
            b.vertices(n);
            for ((slot, _), &c) in slots.iter().zip(counts) {
                for _ in 0..c {
                    match *slot {
                        Slot::Tail(v, d) => b.oriented_tail(v, d),
                        Slot::Arrow(s, t) => b.arrow(s, t),
                    };
                }
            }
            let g = match b.build() {
                Ok(g) => g,
                Err(e) => return err = Some(e),
            };
            // Flagless graphs carry no orientation of their own.
            let g = if g.flag_count() == 0 { g.with_orientation(Vec::new()).expect("no flags") } else { g };
            if connected && !g.is_connected() {
                return;
            }
            match g.canonical_label() {
                Ok(label) => {
                    classes.entry((n, g.flag_count(), label)).or_insert(g);
                }
                Err(e) => err = Some(e),
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
    }
    Ok(classes.into_values().collect())
}

#[derive(Debug, Clone, Copy)]
enum Slot {
    Tail(usize, Dir),
    Arrow(usize, usize),
}

fn distribute(i: usize, budget: usize, slots: &[(Slot, usize)], counts: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
    if i == slots.len() {
        emit(counts);
        return;
    }
    let cost = slots[i].1;
    for c in 0..=budget / cost {
        counts[i] = c;
        distribute(i + 1, budget - c * cost, slots, counts, emit);
    }
    counts[i] = 0;
}
