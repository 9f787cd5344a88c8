//! Canonical labels and automorphism counts by pruned permutation search.
//!
//! Up to isomorphism a graph is determined by its vertex data (decoration,
//! tail counts, loop count) and the edge multiplicities between vertices;
//! flags inside one multiplicity class are interchangeable. The label is the
//! serialization of that count structure under the vertex order minimizing
//! it, searched over orders compatible with a color refinement.

use super::{Dir, Graph, GraphBuilder, GraphError, Result};
use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Flag count above which the brute-force searches refuse to run.
pub const DEFAULT_FLAG_BOUND: usize = 16;

/// Isomorphism-class label: `{o|u}{V}|vertex entries|edge entries`.
///
/// Vertex entries are `token:tails.loops` (unoriented) or
/// `token:in_tails.out_tails.loops` (oriented), with an empty token for
/// undecorated vertices. Edge entries are `i-j*m` or, oriented, `i>j*m`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalLabel(String);

impl CanonicalLabel {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Accepts any string the label grammar can rebuild into a graph and
    /// that is already canonical.
    pub fn parse(s: &str) -> Result<Self> {
        let g = label_to_graph(s)?;
        let canonical = g.canonical_label_bounded(usize::MAX)?;
        if canonical.0 != s {
            return Err(GraphError::Label { pos: 0, message: format!("not canonical, expected {canonical}") });
        }
        Ok(canonical)
    }

    pub fn to_graph(&self) -> Graph {
        label_to_graph(&self.0).expect("labels are produced canonical")
    }

    pub fn is_empty_graph(&self) -> bool {
        self.0 == "u0||"
    }
}

impl fmt::Display for CanonicalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Count structure of a graph.
struct Shape {
    n: usize,
    oriented: bool,
    tokens: Vec<String>,
    /// 0 for undecorated, else 1 + index into `tokens`.
    tok: Vec<u32>,
    /// `[in, out]` oriented, `[all, 0]` unoriented.
    tails: Vec<[u32; 2]>,
    loops: Vec<u32>,
    /// Oriented: `adj[u][w]` edges `u → w`. Unoriented: symmetric counts.
    adj: Vec<Vec<u32>>,
    flagless: Vec<bool>,
}

impl Shape {
    fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let oriented = g.is_oriented() && g.flag_count() > 0;
        let mut tokens: Vec<String> = g.decorations().iter().flatten().cloned().collect();
        tokens.sort();
        tokens.dedup();
        let tok = g
            .decorations()
            .iter()
            .map(|d| d.as_ref().map_or(0, |t| 1 + tokens.binary_search(t).unwrap() as u32))
            .collect();
        let mut tails = vec![[0u32; 2]; n];
        let mut loops = vec![0u32; n];
        let mut adj = vec![vec![0u32; n]; n];
        let mut flagless = vec![true; n];
        let o = g.orientation();
        for f in 0..g.flag_count() {
            let v = g.incidence()[f];
            flagless[v] = false;
            let j = g.involution()[f];
            if j == f {
                let slot = match o {
                    Some(o) if oriented && o[f] == Dir::Out => 1,
                    _ => 0,
                };
                tails[v][slot] += 1;
            } else if j > f {
                let w = g.incidence()[j];
                if v == w {
                    loops[v] += 1;
                } else if oriented {
                    let (s, t) = if o.unwrap()[f] == Dir::Out { (v, w) } else { (w, v) };
                    adj[s][t] += 1;
                } else {
                    adj[v][w] += 1;
                    adj[w][v] += 1;
                }
            }
        }
        Shape { n, oriented, tokens, tok, tails, loops, adj, flagless }
    }

    fn vertex_row(&self, v: usize, row: &mut Vec<u32>) {
        row.push(self.tok[v]);
        row.push(self.tails[v][0]);
        if self.oriented {
            row.push(self.tails[v][1]);
        }
        row.push(self.loops[v]);
    }

    /// Iterated neighbourhood refinement; colors are canonical ranks.
    fn colors(&self) -> Vec<usize> {
        let initial: Vec<Vec<u32>> = (0..self.n)
            .map(|v| {
                let mut r = Vec::new();
                self.vertex_row(v, &mut r);
                r.push(self.flagless[v] as u32);
                r
            })
            .collect();
        let mut colors = rank(&initial);
        loop {
            let keys: Vec<(usize, Vec<(usize, u32, u32)>)> = (0..self.n)
                .map(|v| {
                    let mut nb: Vec<(usize, u32, u32)> = (0..self.n)
                        .filter(|&w| w != v && (self.adj[v][w] > 0 || self.adj[w][v] > 0))
                        .map(|w| (colors[w], self.adj[v][w], self.adj[w][v]))
                        .collect();
                    nb.sort_unstable();
                    (colors[v], nb)
                })
                .collect();
            let next = rank(&keys);
            let classes = |c: &[usize]| c.iter().max().map_or(0, |m| m + 1);
            if classes(&next) == classes(&colors) {
                return next;
            }
            colors = next;
        }
    }

    /// Multiplicity factor: ways to match flags once the vertex map is fixed.
    fn flag_factor(&self) -> BigUint {
        let fact = |k: u32| (1..=k as u64).fold(BigUint::one(), |a, i| a * i);
        let mut total = BigUint::one();
        for v in 0..self.n {
            total *= fact(self.tails[v][0]) * fact(self.tails[v][1]);
            total *= fact(self.loops[v]);
            if !self.oriented {
                total <<= self.loops[v] as usize;
            }
            for w in 0..self.n {
                if w != v && (self.oriented || w > v) {
                    total *= fact(self.adj[v][w]);
                }
            }
        }
        total
    }
}

fn rank<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter().map(|k| sorted.binary_search(k).unwrap()).collect()
}

struct CanonSearch<'a> {
    shape: &'a Shape,
    colors: Vec<usize>,
    slots: Vec<usize>,
    order: Vec<usize>,
    used: Vec<bool>,
    rows: Vec<Vec<u32>>,
    best: Option<(Vec<Vec<u32>>, Vec<usize>)>,
}

impl CanonSearch<'_> {
    fn row(&self, v: usize) -> Vec<u32> {
        let s = self.shape;
        let mut row = Vec::with_capacity(4 + 2 * self.order.len());
        s.vertex_row(v, &mut row);
        for &u in &self.order {
            row.push(s.adj[v][u]);
            if s.oriented {
                row.push(s.adj[u][v]);
            }
        }
        row
    }

    fn run(&mut self, pos: usize) {
        if pos == self.shape.n {
            let better = match &self.best {
                None => true,
                Some((best, _)) => self.rows < *best,
            };
            if better {
                self.best = Some((self.rows.clone(), self.order.clone()));
            }
            return;
        }
        let mut tried_flagless = false;
        for v in 0..self.shape.n {
            if self.used[v] || self.colors[v] != self.slots[pos] {
                continue;
            }
            // Flagless vertices of one color are interchangeable.
            if self.shape.flagless[v] {
                if tried_flagless {
                    continue;
                }
                tried_flagless = true;
            }
            self.rows.push(self.row(v));
            // The best order may have changed in an earlier sibling, so the
            // whole prefix is compared.
            let prune = matches!(&self.best, Some((best, _)) if self.rows[..] > best[..=pos]);
            if !prune {
                self.used[v] = true;
                self.order.push(v);
                self.run(pos + 1);
                self.order.pop();
                self.used[v] = false;
            }
            self.rows.pop();
        }
    }
}

fn check_bound(g: &Graph, bound: usize) -> Result<()> {
    if g.flag_count() > bound {
        return Err(GraphError::BoundExceeded { flags: g.flag_count(), bound });
    }
    Ok(())
}

impl Graph {
    pub fn canonical_label(&self) -> Result<CanonicalLabel> {
        self.canonical_label_bounded(DEFAULT_FLAG_BOUND)
    }

    pub fn canonical_label_bounded(&self, bound: usize) -> Result<CanonicalLabel> {
        check_bound(self, bound)?;
        let shape = Shape::new(self);
        let colors = shape.colors();
        let mut slots = colors.clone();
        slots.sort_unstable();
        let mut search = CanonSearch {
            shape: &shape,
            colors,
            slots,
            order: Vec::new(),
            used: vec![false; shape.n],
            rows: Vec::new(),
            best: None,
        };
        search.run(0);
        let order = search.best.map(|(_, o)| o).unwrap_or_default();
        Ok(CanonicalLabel(serialize(&shape, &order)))
    }

    pub fn is_isomorphic(&self, other: &Graph) -> Result<bool> {
        Ok(self.canonical_label_bounded(usize::MAX)? == other.canonical_label_bounded(usize::MAX)?)
    }

    /// `|Aut|`: pairs of vertex and flag permutations commuting with the
    /// involution and incidence, preserving orientation and decorations.
    pub fn automorphism_order(&self) -> Result<BigUint> {
        self.automorphism_order_bounded(DEFAULT_FLAG_BOUND)
    }

    pub fn automorphism_order_bounded(&self, bound: usize) -> Result<BigUint> {
        check_bound(self, bound)?;
        let shape = Shape::new(self);
        let colors = shape.colors();
        // Flagless vertices permute freely within their color.
        let mut flagless_classes: std::collections::BTreeMap<usize, u64> = Default::default();
        let mut order = Vec::new();
        for v in 0..shape.n {
            if shape.flagless[v] {
                *flagless_classes.entry(colors[v]).or_default() += 1;
            }
        }
        // Visit connected vertices early so adjacency checks prune.
        let mut seen = vec![false; shape.n];
        for start in 0..shape.n {
            if seen[start] || shape.flagless[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                order.push(v);
                for w in 0..shape.n {
                    if !seen[w] && (shape.adj[v][w] > 0 || shape.adj[w][v] > 0) {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        let mut image = vec![usize::MAX; shape.n];
        let mut used = vec![false; shape.n];
        let maps = count_maps(&shape, &colors, &order, 0, &mut image, &mut used);
        let mut total = shape.flag_factor() * maps;
        for &k in flagless_classes.values() {
            total *= (1..=k).fold(BigUint::one(), |a, i| a * i);
        }
        Ok(total)
    }
}

fn count_maps(
    s: &Shape,
    colors: &[usize],
    order: &[usize],
    pos: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> BigUint {
    if pos == order.len() {
        return BigUint::one();
    }
    let v = order[pos];
    let mut total = BigUint::default();
    for w in 0..s.n {
        if used[w] || colors[w] != colors[v] {
            continue;
        }
        let consistent = order[..pos].iter().all(|&u| {
            let pu = image[u];
            s.adj[v][u] == s.adj[w][pu] && s.adj[u][v] == s.adj[pu][w]
        });
        if !consistent {
            continue;
        }
        image[v] = w;
        used[w] = true;
        total += count_maps(s, colors, order, pos + 1, image, used);
        used[w] = false;
        image[v] = usize::MAX;
    }
    total
}

fn serialize(s: &Shape, order: &[usize]) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    write!(out, "{}{}|", if s.oriented { 'o' } else { 'u' }, s.n).unwrap();
    let entries: Vec<String> = order
        .iter()
        .map(|&v| {
            let tok = if s.tok[v] == 0 { "" } else { &s.tokens[s.tok[v] as usize - 1] };
            if s.oriented {
                format!("{tok}:{}.{}.{}", s.tails[v][0], s.tails[v][1], s.loops[v])
            } else {
                format!("{tok}:{}.{}", s.tails[v][0], s.loops[v])
            }
        })
        .collect();
    out.push_str(&entries.join(","));
    out.push('|');
    let mut edges = Vec::new();
    for (i, &u) in order.iter().enumerate() {
        for (j, &w) in order.iter().enumerate() {
            let m = s.adj[u][w];
            if m > 0 && i != j && (s.oriented || i < j) {
                edges.push(format!("{i}{}{j}*{m}", if s.oriented { '>' } else { '-' }));
            }
        }
    }
    out.push_str(&edges.join(","));
    out
}

struct LabelParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl LabelParser<'_> {
    fn err<T>(&self, message: &str) -> Result<T> {
        Err(GraphError::Label { pos: self.pos, message: message.to_string() })
    }

    fn eat(&mut self, c: u8) -> Result<()> {
        if self.s.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(&format!("expected '{}'", c as char))
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().or_else(|_| self.err("number too large"))
    }

    fn token(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_') {
            self.pos += 1;
        }
        String::from_utf8(self.s[start..self.pos].to_vec()).unwrap()
    }
}

fn label_to_graph(label: &str) -> Result<Graph> {
    let mut p = LabelParser { s: label.as_bytes(), pos: 0 };
    let oriented = match p.peek() {
        Some(b'o') => true,
        Some(b'u') => false,
        _ => return p.err("expected 'o' or 'u'"),
    };
    p.pos += 1;
    let n = p.number()?;
    p.eat(b'|')?;
    let mut b = GraphBuilder::new();
    for i in 0..n {
        if i > 0 {
            p.eat(b',')?;
        }
        let tok = p.token();
        p.eat(b':')?;
        let v = b.decorated_vertex(if tok.is_empty() { None } else { Some(&tok) });
        let first = p.number()?;
        p.eat(b'.')?;
        let second = p.number()?;
        if oriented {
            p.eat(b'.')?;
            let loops = p.number()?;
            for _ in 0..first {
                b.oriented_tail(v, Dir::In);
            }
            for _ in 0..second {
                b.oriented_tail(v, Dir::Out);
            }
            for _ in 0..loops {
                b.arrow(v, v);
            }
        } else {
            for _ in 0..first {
                b.tail(v);
            }
            for _ in 0..second {
                b.edge(v, v);
            }
        }
    }
    p.eat(b'|')?;
    let mut first = true;
    while p.peek().is_some() {
        if !first {
            p.eat(b',')?;
        }
        first = false;
        let i = p.number()?;
        let arrow = match p.peek() {
            Some(b'>') if oriented => true,
            Some(b'-') if !oriented => false,
            _ => return p.err("expected an edge marker"),
        };
        p.pos += 1;
        let j = p.number()?;
        p.eat(b'*')?;
        let m = p.number()?;
        if i >= n || j >= n || i == j {
            return p.err("edge endpoints out of range");
        }
        for _ in 0..m {
            if arrow {
                b.arrow(i, j);
            } else {
                b.edge(i, j);
            }
        }
    }
    let g = b.build()?;
    if oriented && !g.is_oriented() {
        // An oriented label always has flags; an empty builder cannot tell.
        return p.err("oriented label without flags");
    }
    Ok(g)
}
