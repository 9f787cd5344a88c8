//! JSON form of a graph with arbitrary integer ids.
//!
//! `involution[i]` is the partner of `flags[i]`, `incidence[i]` its vertex
//! and `orientation[i]` its label. Ids are remapped to dense indices in list
//! order; decoration keys are vertex ids written as strings.

use super::{Dir, Graph, GraphError, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub flags: Vec<i64>,
    pub vertices: Vec<i64>,
    pub involution: Vec<i64>,
    pub incidence: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientation: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub decorations: BTreeMap<String, String>,
}

fn index(field: &'static str, ids: &[i64]) -> Result<HashMap<i64, usize>> {
    let mut map = HashMap::with_capacity(ids.len());
    for (i, &id) in ids.iter().enumerate() {
        if map.insert(id, i).is_some() {
            return Err(GraphError::DuplicateId { field, index: i, id });
        }
    }
    Ok(map)
}

fn lookup(map: &HashMap<i64, usize>, field: &'static str, index: usize, id: i64) -> Result<usize> {
    map.get(&id).copied().ok_or(GraphError::UnknownId { field, index, id })
}

fn check_len(field: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(GraphError::LengthMismatch { field, expected, found })
    }
}

impl GraphJson {
    pub fn to_graph(&self) -> Result<Graph> {
        let flags = index("flags", &self.flags)?;
        let vertices = index("vertices", &self.vertices)?;
        let nf = self.flags.len();
        check_len("involution", nf, self.involution.len())?;
        check_len("incidence", nf, self.incidence.len())?;
        let involution = self
            .involution
            .iter()
            .enumerate()
            .map(|(i, &id)| lookup(&flags, "involution", i, id))
            .collect::<Result<Vec<_>>>()?;
        let incidence = self
            .incidence
            .iter()
            .enumerate()
            .map(|(i, &id)| lookup(&vertices, "incidence", i, id))
            .collect::<Result<Vec<_>>>()?;
        let mut decorations = vec![None; self.vertices.len()];
        for (i, (key, token)) in self.decorations.iter().enumerate() {
            let id: i64 = key.parse().map_err(|_| GraphError::Json(format!("decorations: key {key:?} is not a vertex id")))?;
            decorations[lookup(&vertices, "decorations", i, id)?] = Some(token.clone());
        }
        let g = Graph::new(self.vertices.len(), involution, incidence)?.with_decorations(decorations)?;
        match &self.orientation {
            None => Ok(g),
            Some(labels) => {
                check_len("orientation", nf, labels.len())?;
                let dirs = labels
                    .iter()
                    .enumerate()
                    .map(|(i, l)| match l.as_str() {
                        "in" => Ok(Dir::In),
                        "out" => Ok(Dir::Out),
                        _ => Err(GraphError::BadDirection { index: i, found: l.clone() }),
                    })
                    .collect::<Result<Vec<_>>>()?;
                g.with_orientation(dirs)
            }
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        let ids = |n: usize| (0..n as i64).collect::<Vec<_>>();
        GraphJson {
            flags: ids(g.flag_count()),
            vertices: ids(g.vertex_count()),
            involution: g.involution().iter().map(|&f| f as i64).collect(),
            incidence: g.incidence().iter().map(|&v| v as i64).collect(),
            orientation: g.orientation().map(|o| o.iter().map(|d| d.as_str().to_string()).collect()),
            decorations: g
                .decorations()
                .iter()
                .enumerate()
                .filter_map(|(v, d)| d.as_ref().map(|t| (v.to_string(), t.clone())))
                .collect(),
        }
    }
}

impl Graph {
    pub fn from_json(text: &str) -> Result<Graph> {
        let parsed: GraphJson = serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
        parsed.to_graph()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphJson::from_graph(self)).expect("graph JSON serializes")
    }
}
