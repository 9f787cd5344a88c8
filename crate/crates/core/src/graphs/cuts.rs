//! Directedness and cuts of oriented graphs.
//!
//! A cut splits the vertices into an upper and a lower part. It is admissible
//! when no oriented cycle (wheel) is split and every crossing edge runs from
//! the upper part to the lower part. The two improper cuts put everything on
//! one side.

use super::{Graph, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cut {
    pub upper: Vec<usize>,
    pub lower: Vec<usize>,
}

impl Cut {
    pub fn is_proper(&self) -> bool {
        !self.upper.is_empty() && !self.lower.is_empty()
    }

    fn upper_mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        self.upper.iter().for_each(|&v| m[v] = true);
        m
    }

    /// Re-checks both conditions against `g`.
    pub fn is_admissible(&self, g: &Graph) -> Result<bool> {
        let n = g.vertex_count();
        let up = self.upper_mask(n);
        let mut all: Vec<usize> = self.upper.iter().chain(&self.lower).copied().collect();
        all.sort_unstable();
        if all != (0..n).collect::<Vec<_>>() {
            return Ok(false);
        }
        let arrows = g.arrows()?;
        let downward = arrows.iter().all(|&(s, t)| up[s] || !up[t]);
        let scc = strong_components(n, &arrows);
        let wheels_whole = arrows.iter().all(|&(s, t)| scc[s] != scc[t] || up[s] == up[t]);
        Ok(downward && wheels_whole)
    }

    /// `(upper, lower)` subgraphs; crossing edges become a tail on each side
    /// with their orientation labels.
    pub fn halves(&self, g: &Graph) -> (Graph, Graph) {
        let up = self.upper_mask(g.vertex_count());
        let down: Vec<bool> = up.iter().map(|b| !b).collect();
        (g.induced(&up), g.induced(&down))
    }
}

/// Component index per vertex for the strongly connected components.
fn strong_components(n: usize, arrows: &[(usize, usize)]) -> Vec<usize> {
    let mut reach = vec![vec![false; n]; n];
    for v in 0..n {
        reach[v][v] = true;
    }
    for &(s, t) in arrows {
        reach[s][t] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] {
                for j in 0..n {
                    if reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }
    (0..n).map(|v| (0..n).find(|&w| reach[v][w] && reach[w][v]).unwrap()).collect()
}

impl Graph {
    /// True iff there is no oriented cycle, equivalently a strictly
    /// increasing time function exists on every component.
    pub fn is_directed(&self) -> Result<bool> {
        let arrows = self.arrows()?;
        let n = self.vertex_count();
        let mut indegree = vec![0usize; n];
        for &(_, t) in &arrows {
            indegree[t] += 1;
        }
        let mut ready: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut removed = 0;
        while let Some(v) = ready.pop() {
            removed += 1;
            for &(s, t) in &arrows {
                if s == v {
                    indegree[t] -= 1;
                    if indegree[t] == 0 {
                        ready.push(t);
                    }
                }
            }
        }
        Ok(removed == n)
    }

    /// Both improper cuts and every admissible proper cut, in a fixed order.
    pub fn enumerate_cuts(&self) -> Result<Vec<Cut>> {
        let n = self.vertex_count();
        let arrows = self.arrows()?;
        let scc = strong_components(n, &arrows);
        // Each wheel (strong component) moves as one block.
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut block_of = vec![usize::MAX; n];
        for v in 0..n {
            let root = scc[v];
            if block_of[root] == usize::MAX {
                block_of[root] = blocks.len();
                blocks.push(Vec::new());
            }
            block_of[v] = block_of[root];
            blocks[block_of[v]].push(v);
        }
        let block_arrows: Vec<(usize, usize)> = arrows
            .iter()
            .map(|&(s, t)| (block_of[s], block_of[t]))
            .filter(|(a, b)| a != b)
            .collect();
        let mut cuts = Vec::new();
        let mut side = vec![None; blocks.len()];
        assign(0, &blocks, &block_arrows, &mut side, &mut cuts);
        cuts.sort();
        Ok(cuts)
    }
}

fn assign(
    i: usize,
    blocks: &[Vec<usize>],
    arrows: &[(usize, usize)],
    side: &mut Vec<Option<bool>>,
    out: &mut Vec<Cut>,
) {
    if i == blocks.len() {
        let mut cut = Cut { upper: Vec::new(), lower: Vec::new() };
        for (b, vs) in blocks.iter().enumerate() {
            if side[b] == Some(true) { &mut cut.upper } else { &mut cut.lower }.extend(vs);
        }
        cut.upper.sort_unstable();
        cut.lower.sort_unstable();
        out.push(cut);
        return;
    }
    for upper in [true, false] {
        // An arrow s → t may not run from lower to upper.
        let ok = arrows.iter().all(|&(s, t)| match (s == i, t == i) {
            (true, _) => !(side[t] == Some(true) && !upper),
            (_, true) => !(side[s] == Some(false) && upper),
            _ => true,
        });
        if ok {
            side[i] = Some(upper);
            assign(i + 1, blocks, arrows, side, out);
            side[i] = None;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::{Dir, GraphBuilder};
    use super::*;

    fn chain(n: usize) -> Graph {
        let mut b = GraphBuilder::new();
        let vs = b.vertices(n);
        for w in vs.windows(2) {
            b.arrow(w[0], w[1]);
        }
        b.build().unwrap()
    }

    fn two_cycle() -> Graph {
        let mut b = GraphBuilder::new();
        let [u, v] = [b.vertex(), b.vertex()];
        b.arrow(u, v).arrow(v, u);
        b.build().unwrap()
    }

    #[test]
    fn directedness() {
        assert!(chain(2).is_directed().unwrap());
        assert!(!two_cycle().is_directed().unwrap());
        assert!(chain(2).disjoint_union(&chain(3)).unwrap().is_directed().unwrap());
        let mut b = GraphBuilder::new();
        let v = b.vertex();
        b.arrow(v, v);
        assert!(!b.build().unwrap().is_directed().unwrap());
        let mut b = GraphBuilder::new();
        let [u, v] = [b.vertex(), b.vertex()];
        b.edge(u, v);
        assert!(b.build().unwrap().is_directed().is_err());
    }

    #[test]
    fn cut_examples() {
        assert_eq!(chain(1).enumerate_cuts().unwrap().len(), 2);
        let cuts = chain(2).enumerate_cuts().unwrap();
        assert_eq!(cuts.len(), 3);
        let proper: Vec<_> = cuts.iter().filter(|c| c.is_proper()).collect();
        assert_eq!(proper, vec![&Cut { upper: vec![0], lower: vec![1] }]);
        assert_eq!(two_cycle().enumerate_cuts().unwrap().len(), 2);
        // A chain of n vertices has n + 1 cuts.
        assert_eq!(chain(4).enumerate_cuts().unwrap().len(), 5);
    }

    #[test]
    fn halves_keep_flags_and_orientation() {
        let g = chain(3);
        for cut in g.enumerate_cuts().unwrap() {
            assert!(cut.is_admissible(&g).unwrap());
            let (up, down) = cut.halves(&g);
            assert_eq!(up.flag_count() + down.flag_count(), g.flag_count());
            assert_eq!(up.vertex_count() + down.vertex_count(), g.vertex_count());
        }
        let cut = Cut { upper: vec![0], lower: vec![1, 2] };
        let (up, down) = cut.halves(&g);
        assert_eq!(up.orientation(), Some(&[Dir::Out][..]));
        assert_eq!(down.tails().len(), 1);
        assert!(!Cut { upper: vec![1], lower: vec![0, 2] }.is_admissible(&g).unwrap());
    }

    #[test]
    fn brute_force_agrees() {
        // Independent check: filter all 2^V subsets by both conditions.
        let mut b = GraphBuilder::new();
        let vs = b.vertices(4);
        b.arrow(vs[0], vs[1]).arrow(vs[1], vs[2]).arrow(vs[2], vs[1]).arrow(vs[0], vs[3]).arrow(vs[3], vs[3]);
        let g = b.build().unwrap();
        let mut expected = Vec::new();
        for mask in 0u32..16 {
            let cut = Cut {
                upper: (0..4).filter(|v| mask >> v & 1 == 1).collect(),
                lower: (0..4).filter(|v| mask >> v & 1 == 0).collect(),
            };
            if cut.is_admissible(&g).unwrap() {
                expected.push(cut);
            }
        }
        expected.sort();
        assert_eq!(g.enumerate_cuts().unwrap(), expected);
    }
}
