//! Trees of finite groups: the vertex alphabet with its branching data,
//! enumeration of trees with prescribed ends, and the two-vertex amalgams
//! realized as permutation groups.

mod amalgam;
mod label;
mod tree;

pub use amalgam::{
    canonical_cyclic_generator, expected_genus, is_maximal_cyclic, realize_amalgam, vertex_group, AmalgamSpec,
};
pub use label::VertexLabel;
pub use tree::{enumerate_normalizer_trees, TreeOfGroups};

use thiserror::Error;

use crate::permgrp::GroupError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("invalid vertex or end label `{0}`")]
    InvalidLabel(String),
    #[error("search cap too small: {0}")]
    CapTooSmall(String),
    #[error("invalid tree: {0}")]
    Invalid(String),
    #[error("cannot parse tree: {0}")]
    Parse(String),
    #[error("{0} is not a maximal cyclic subgroup")]
    NotMaximalCyclic(String),
    #[error("order {order} gives genus {genus}, not an integer of at least 2")]
    IncompatibleOrder { order: u64, genus: String },
    #[error(transparent)]
    Group(#[from] GroupError),
}
