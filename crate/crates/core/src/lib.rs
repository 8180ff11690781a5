//! Certifying 3-edge-connectivity for multigraphs.

pub mod cactus_builder;
pub mod cli;
pub mod decomposer;
pub mod dfs_ear;
pub mod mader_cs;
pub mod multigraph;
pub mod oracle;
pub mod verifier;

pub use decomposer::{decompose, decompose_all, decompose_with, Component, EngineOptions, ThreeEccReport};
pub use multigraph::{parse_graph, Multigraph, ParseError};
