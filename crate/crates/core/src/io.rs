//! JSON formats for complexes, ideals, graphs, Betti tables and relation trees.
//!
//! Vertices, variables and facet indices are 1-based in every format.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::complexes::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graphs::{parse_graph6, Graph};
use crate::homological::BettiTable;
use crate::ideals::{minimalize, Monomial, MonomialIdeal};
use crate::quasitrees::RelationTree;
use crate::vertex::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexJson {
    pub ambient: usize,
    pub facets: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GeneratorJson {
    Exponents(Vec<u32>),
    Text(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealJson {
    pub vars: usize,
    pub generators: Vec<GeneratorJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// Parses a complex. With `minimalize`, non-maximal faces are dropped
/// instead of rejected.
pub fn parse_complex(text: &str, minimalize: bool) -> Result<SimplicialComplex> {
    complex_from_json(&parse_json(text)?, minimalize)
}

pub fn complex_from_json(data: &ComplexJson, minimalize: bool) -> Result<SimplicialComplex> {
    if minimalize {
        let faces = data.facets.iter().map(|f| VertexSet::new(data.ambient, f)).collect::<Result<_>>()?;
        SimplicialComplex::generated_by(data.ambient, faces)
    } else {
        SimplicialComplex::from_lists(data.ambient, &data.facets)
    }
}

pub fn complex_to_json(complex: &SimplicialComplex) -> ComplexJson {
    ComplexJson { ambient: complex.ambient(), facets: complex.facet_lists() }
}

pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    ideal_from_json(&parse_json(text)?)
}

pub fn ideal_from_json(data: &IdealJson) -> Result<MonomialIdeal> {
    let gens = data
        .generators
        .iter()
        .map(|g| match g {
            GeneratorJson::Exponents(e) if e.len() == data.vars => Ok(Monomial::new(e.clone())),
            GeneratorJson::Exponents(e) => Err(Error::VariableCount(data.vars, e.len())),
            GeneratorJson::Text(s) => Monomial::parse(data.vars, s),
        })
        .collect::<Result<Vec<_>>>()?;
    if gens.is_empty() {
        return Ok(MonomialIdeal::zero(data.vars));
    }
    minimalize(&gens)
}

pub fn monomial_json(m: &Monomial, pretty: bool) -> Value {
    if pretty {
        json!(m.to_string())
    } else {
        json!(m.exponents())
    }
}

pub fn ideal_to_json(ideal: &MonomialIdeal, pretty: bool) -> Value {
    json!({
        "vars": ideal.num_vars(),
        "generators": ideal.generators().iter().map(|g| monomial_json(g, pretty)).collect::<Vec<_>>(),
    })
}

/// Parses a graph from JSON or, failing that, from a graph6 string.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        graph_from_json(&parse_json(text)?)
    } else {
        parse_graph6(text)
    }
}

pub fn graph_from_json(data: &GraphJson) -> Result<Graph> {
    Graph::new(data.n, &data.edges)
}

pub fn graph_to_json(g: &Graph) -> GraphJson {
    GraphJson { n: g.num_vertices(), edges: g.edges() }
}

pub fn betti_to_json(table: &BettiTable) -> Value {
    let entries: Vec<Value> =
        table.entries().map(|e| json!({"i": e.i, "multidegree": e.multidegree, "rank": e.rank})).collect();
    json!({
        "vars": table.num_vars(),
        "entries": entries,
        "projdim": table.projdim(),
        "reg": table.reg(),
        "linear": table.is_linear(),
    })
}

pub fn relation_tree_to_json(tree: &RelationTree, pretty: bool) -> Value {
    let mut labels = serde_json::Map::new();
    for (&(i, j), (uij, uji)) in tree.edges().iter().zip(tree.labels()) {
        labels.insert(
            format!("{}-{}", i + 1, j + 1),
            json!({"u_ij": monomial_json(uij, pretty), "u_ji": monomial_json(uji, pretty)}),
        );
    }
    json!({
        "t": tree.num_generators(),
        "edges": tree.edges().iter().map(|&(i, j)| [i + 1, j + 1]).collect::<Vec<_>>(),
        "labels": labels,
    })
}
