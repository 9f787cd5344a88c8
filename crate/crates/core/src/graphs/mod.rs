//! Graphs built from flags (half-edges), an involution pairing flags into
//! edges, and an incidence map to vertices.
//!
//! Fixed points of the involution are tails. An optional orientation labels
//! every flag `in` or `out`; an edge runs from the vertex of its `out` flag to
//! the vertex of its `in` flag. Vertices may carry opaque decoration tokens.

mod canon;
mod cuts;
mod enumerate;
mod json;

pub use canon::{CanonicalLabel, DEFAULT_FLAG_BOUND};
pub use cuts::Cut;
pub use enumerate::{enumerate_oriented_graphs, enumerate_vacuum_graphs, VacuumOptions};
pub use json::GraphJson;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("{field} has {found} entries, expected {expected}")]
    LengthMismatch { field: &'static str, expected: usize, found: usize },
    #[error("{field}[{index}]: duplicate id {id}")]
    DuplicateId { field: &'static str, index: usize, id: i64 },
    #[error("{field}[{index}]: unknown id {id}")]
    UnknownId { field: &'static str, index: usize, id: i64 },
    #[error("involution[{flag}]: j(j(f)) != f")]
    NotInvolution { flag: usize },
    #[error("orientation[{flag}]: both halves of an edge carry the same label")]
    OrientationConflict { flag: usize },
    #[error("orientation[{index}]: expected \"in\" or \"out\", found {found:?}")]
    BadDirection { index: usize, found: String },
    #[error("decorations[{vertex}]: token {token:?} must be nonempty [A-Za-z0-9_]")]
    BadDecoration { vertex: usize, token: String },
    #[error("graph has {flags} flags, above the brute-force bound {bound}")]
    BoundExceeded { flags: usize, bound: usize },
    #[error("enumeration budget of {budget} candidates exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("valence {0} is not allowed in vacuum graphs")]
    BadValence(usize),
    #[error("operation needs an oriented graph")]
    Unoriented,
    #[error("cannot mix oriented and unoriented flags")]
    MixedOrientation,
    #[error("invalid canonical label at byte {pos}: {message}")]
    Label { pos: usize, message: String },
    #[error("invalid graph JSON: {0}")]
    Json(String),
}

pub type Result<T, E = GraphError> = std::result::Result<T, E>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Dir {
    In,
    Out,
}

impl Dir {
    pub fn flip(self) -> Dir {
        match self {
            Dir::In => Dir::Out,
            Dir::Out => Dir::In,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Dir::In => "in",
            Dir::Out => "out",
        }
    }
}

/// Flags are `0..flag_count()`, vertices `0..vertex_count()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    involution: Vec<usize>,
    incidence: Vec<usize>,
    orientation: Option<Vec<Dir>>,
    decorations: Vec<Option<String>>,
}

fn valid_token(t: &str) -> bool {
    !t.is_empty() && t.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

impl Graph {
    pub fn new(vertex_count: usize, involution: Vec<usize>, incidence: Vec<usize>) -> Result<Self> {
        if incidence.len() != involution.len() {
            return Err(GraphError::LengthMismatch {
                field: "incidence",
                expected: involution.len(),
                found: incidence.len(),
            });
        }
        for (f, &g) in involution.iter().enumerate() {
            if g >= involution.len() {
                return Err(GraphError::UnknownId { field: "involution", index: f, id: g as i64 });
            }
            if involution[g] != f {
                return Err(GraphError::NotInvolution { flag: f });
            }
        }
        for (f, &v) in incidence.iter().enumerate() {
            if v >= vertex_count {
                return Err(GraphError::UnknownId { field: "incidence", index: f, id: v as i64 });
            }
        }
        Ok(Graph { vertex_count, involution, incidence, orientation: None, decorations: vec![None; vertex_count] })
    }

    pub fn empty() -> Self {
        Graph { vertex_count: 0, involution: vec![], incidence: vec![], orientation: None, decorations: vec![] }
    }

    pub fn with_orientation(mut self, orientation: Vec<Dir>) -> Result<Self> {
        if orientation.len() != self.flag_count() {
            return Err(GraphError::LengthMismatch {
                field: "orientation",
                expected: self.flag_count(),
                found: orientation.len(),
            });
        }
        for (f, &g) in self.involution.iter().enumerate() {
            if g != f && orientation[f] == orientation[g] {
                return Err(GraphError::OrientationConflict { flag: f });
            }
        }
        self.orientation = Some(orientation);
        Ok(self)
    }

    pub fn with_decorations(mut self, decorations: Vec<Option<String>>) -> Result<Self> {
        if decorations.len() != self.vertex_count {
            return Err(GraphError::LengthMismatch {
                field: "decorations",
                expected: self.vertex_count,
                found: decorations.len(),
            });
        }
        for (v, d) in decorations.iter().enumerate() {
            if let Some(t) = d {
                if !valid_token(t) {
                    return Err(GraphError::BadDecoration { vertex: v, token: t.clone() });
                }
            }
        }
        self.decorations = decorations;
        Ok(self)
    }

    pub fn flag_count(&self) -> usize {
        self.involution.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn involution(&self) -> &[usize] {
        &self.involution
    }

    pub fn incidence(&self) -> &[usize] {
        &self.incidence
    }

    pub fn orientation(&self) -> Option<&[Dir]> {
        self.orientation.as_deref()
    }

    pub fn is_oriented(&self) -> bool {
        self.orientation.is_some()
    }

    pub fn decorations(&self) -> &[Option<String>] {
        &self.decorations
    }

    pub fn is_tail(&self, flag: usize) -> bool {
        self.involution[flag] == flag
    }

    /// Edges as flag pairs `(f, j f)` with `f < j f`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.flag_count())
            .filter(|&f| self.involution[f] > f)
            .map(|f| (f, self.involution[f]))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    pub fn tails(&self) -> Vec<usize> {
        (0..self.flag_count()).filter(|&f| self.is_tail(f)).collect()
    }

    pub fn is_vacuum(&self) -> bool {
        self.involution.iter().enumerate().all(|(f, &g)| f != g)
    }

    /// Flags at each vertex.
    pub fn flags_at(&self) -> Vec<Vec<usize>> {
        let mut at = vec![Vec::new(); self.vertex_count];
        for (f, &v) in self.incidence.iter().enumerate() {
            at[v].push(f);
        }
        at
    }

    pub fn valence(&self, v: usize) -> usize {
        self.incidence.iter().filter(|&&w| w == v).count()
    }

    /// `|V| − |E|`; tails are contractible and do not contribute.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edge_count() as i64
    }

    /// For an oriented graph, the directed edges `(source, target)` as vertex pairs.
    /// Flagless graphs count as oriented.
    pub fn arrows(&self) -> Result<Vec<(usize, usize)>> {
        if self.flag_count() == 0 {
            return Ok(Vec::new());
        }
        let o = self.orientation.as_ref().ok_or(GraphError::Unoriented)?;
        Ok(self
            .edges()
            .into_iter()
            .map(|(f, g)| {
                let (out, inn) = if o[f] == Dir::Out { (f, g) } else { (g, f) };
                (self.incidence[out], self.incidence[inn])
            })
            .collect())
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        if self.flag_count() > 0 && other.flag_count() > 0 && self.is_oriented() != other.is_oriented() {
            return Err(GraphError::MixedOrientation);
        }
        let shift_f = self.flag_count();
        let shift_v = self.vertex_count;
        let involution = self.involution.iter().copied().chain(other.involution.iter().map(|g| g + shift_f)).collect();
        let incidence = self.incidence.iter().copied().chain(other.incidence.iter().map(|v| v + shift_v)).collect();
        let orientation = match (&self.orientation, &other.orientation) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).copied().collect()),
            (Some(a), None) if other.flag_count() == 0 => Some(a.clone()),
            (None, Some(b)) if self.flag_count() == 0 => Some(b.clone()),
            _ => None,
        };
        Ok(Graph {
            vertex_count: shift_v + other.vertex_count,
            involution,
            incidence,
            orientation,
            decorations: self.decorations.iter().chain(&other.decorations).cloned().collect(),
        })
    }

    /// Component index of every vertex, numbered by smallest member.
    pub fn component_ids(&self) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.vertex_count).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for (f, g) in self.edges() {
            let (a, b) = (find(&mut parent, self.incidence[f]), find(&mut parent, self.incidence[g]));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut ids = vec![usize::MAX; self.vertex_count];
        let mut next = 0;
        for v in 0..self.vertex_count {
            let r = find(&mut parent, v);
            if ids[r] == usize::MAX {
                ids[r] = next;
                next += 1;
            }
            ids[v] = ids[r];
        }
        ids
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count > 0 && self.component_ids().iter().all(|&c| c == 0)
    }

    pub fn components(&self) -> Vec<Graph> {
        let ids = self.component_ids();
        let count = ids.iter().max().map_or(0, |m| m + 1);
        (0..count)
            .map(|c| {
                let keep: Vec<bool> = ids.iter().map(|&i| i == c).collect();
                self.induced(&keep)
            })
            .collect()
    }

    /// Subgraph on the vertices with `keep[v]`. Edges leaving the set are
    /// severed: the surviving half becomes a tail with its orientation label.
    pub(crate) fn induced(&self, keep: &[bool]) -> Graph {
        let mut vmap = vec![usize::MAX; self.vertex_count];
        let mut decorations = Vec::new();
        for v in 0..self.vertex_count {
            if keep[v] {
                vmap[v] = decorations.len();
                decorations.push(self.decorations[v].clone());
            }
        }
        let mut fmap = vec![usize::MAX; self.flag_count()];
        let mut next = 0;
        for f in 0..self.flag_count() {
            if keep[self.incidence[f]] {
                fmap[f] = next;
                next += 1;
            }
        }
        let mut involution = Vec::with_capacity(next);
        let mut incidence = Vec::with_capacity(next);
        let mut orientation = self.orientation.as_ref().map(|_| Vec::with_capacity(next));
        for f in 0..self.flag_count() {
            if fmap[f] == usize::MAX {
                continue;
            }
            let g = self.involution[f];
            involution.push(if fmap[g] == usize::MAX { fmap[f] } else { fmap[g] });
            incidence.push(vmap[self.incidence[f]]);
            if let (Some(out), Some(o)) = (orientation.as_mut(), &self.orientation) {
                out.push(o[f]);
            }
        }
        Graph { vertex_count: decorations.len(), involution, incidence, orientation, decorations }
    }
}

/// Incremental construction with dense ids.
#[derive(Debug, Default, Clone)]
pub struct GraphBuilder {
    vertices: usize,
    involution: Vec<usize>,
    incidence: Vec<usize>,
    orientation: Vec<Option<Dir>>,
    decorations: Vec<Option<String>>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(&mut self) -> usize {
        self.decorated_vertex(None)
    }

    pub fn vertices(&mut self, n: usize) -> Vec<usize> {
        (0..n).map(|_| self.vertex()).collect()
    }

    pub fn decorated_vertex(&mut self, token: Option<&str>) -> usize {
        self.vertices += 1;
        self.decorations.push(token.map(str::to_string));
        self.vertices - 1
    }

    fn flag(&mut self, v: usize, dir: Option<Dir>) -> usize {
        let f = self.involution.len();
        self.involution.push(f);
        self.incidence.push(v);
        self.orientation.push(dir);
        f
    }

    fn pair(&mut self, a: usize, b: usize) {
        self.involution[a] = b;
        self.involution[b] = a;
    }

    pub fn tail(&mut self, v: usize) -> &mut Self {
        self.flag(v, None);
        self
    }

    pub fn oriented_tail(&mut self, v: usize, dir: Dir) -> &mut Self {
        self.flag(v, Some(dir));
        self
    }

    pub fn edge(&mut self, u: usize, v: usize) -> &mut Self {
        let a = self.flag(u, None);
        let b = self.flag(v, None);
        self.pair(a, b);
        self
    }

    /// Oriented edge `u → v`.
    pub fn arrow(&mut self, u: usize, v: usize) -> &mut Self {
        let a = self.flag(u, Some(Dir::Out));
        let b = self.flag(v, Some(Dir::In));
        self.pair(a, b);
        self
    }

    pub fn build(&self) -> Result<Graph> {
        let g = Graph::new(self.vertices, self.involution.clone(), self.incidence.clone())?
            .with_decorations(self.decorations.clone())?;
        if self.orientation.iter().all(Option::is_none) {
            return Ok(g);
        }
        let dirs: Option<Vec<Dir>> = self.orientation.iter().copied().collect();
        g.with_orientation(dirs.ok_or(GraphError::MixedOrientation)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn theta() -> Graph {
        let mut b = GraphBuilder::new();
        let [u, v] = [b.vertex(), b.vertex()];
        b.edge(u, v).edge(u, v).edge(u, v);
        b.build().unwrap()
    }

    #[test]
    fn euler_characteristics() {
        let mut b = GraphBuilder::new();
        b.vertex();
        assert_eq!(b.build().unwrap().euler_characteristic(), 1);
        let v = 0;
        b.edge(v, v);
        assert_eq!(b.build().unwrap().euler_characteristic(), 0);
        assert_eq!(theta().euler_characteristic(), -1);
        b.tail(v);
        assert_eq!(b.build().unwrap().euler_characteristic(), 0);
    }

    #[test]
    fn validation() {
        assert_eq!(Graph::new(1, vec![1, 2, 0], vec![0, 0, 0]), Err(GraphError::NotInvolution { flag: 0 }));
        assert_eq!(
            Graph::new(1, vec![0, 5], vec![0, 0]),
            Err(GraphError::UnknownId { field: "involution", index: 1, id: 5 })
        );
        assert_eq!(
            Graph::new(1, vec![1, 0], vec![0, 1]),
            Err(GraphError::UnknownId { field: "incidence", index: 1, id: 1 })
        );
        let g = Graph::new(2, vec![1, 0], vec![0, 1]).unwrap();
        assert_eq!(g.clone().with_orientation(vec![Dir::In, Dir::In]), Err(GraphError::OrientationConflict { flag: 0 }));
        assert!(g.clone().with_orientation(vec![Dir::Out, Dir::In]).is_ok());
        assert!(matches!(
            g.with_decorations(vec![Some("a b".into()), None]),
            Err(GraphError::BadDecoration { vertex: 0, .. })
        ));
        let mut b = GraphBuilder::new();
        let v = b.vertex();
        b.tail(v).oriented_tail(v, Dir::In);
        assert_eq!(b.build(), Err(GraphError::MixedOrientation));
    }

    #[test]
    fn components_and_unions() {
        let t = theta();
        let u = t.disjoint_union(&t).unwrap();
        assert_eq!(u.vertex_count(), 4);
        assert!(!u.is_connected());
        let parts = u.components();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0], t);
        assert!(t.is_connected());
        assert!(!Graph::empty().is_connected());
        assert!(Graph::empty().components().is_empty());
    }

    #[test]
    fn induced_subgraphs_sever_edges_into_tails() {
        let mut b = GraphBuilder::new();
        let [u, v] = [b.vertex(), b.vertex()];
        b.arrow(u, v);
        let g = b.build().unwrap();
        let up = g.induced(&[true, false]);
        assert_eq!(up.flag_count(), 1);
        assert!(up.is_tail(0));
        assert_eq!(up.orientation(), Some(&[Dir::Out][..]));
        assert_eq!(g.arrows().unwrap(), vec![(0, 1)]);
    }
}
