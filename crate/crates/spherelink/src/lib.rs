//! Spherical embeddings of small planar graphs and intrinsic spherical
//! 3-linking: embedding enumeration up to equivalence, non-split link
//! detection, minor-minimality certification, the vert-bar and sub-dangle
//! moves, and bounded searches, with machine-checkable certificates.

pub mod arrange;
pub mod catalog;
pub mod embed;
pub mod graph;
pub mod intrinsic;
pub mod io;
pub mod link;
pub mod render;

pub use arrange::{
    equivalent, is_outerplanar, is_planar, read_arrangement, spherical_arrangements,
    write_arrangement, Arrangement, PartEmbedding,
};
pub use embed::{Dart, EmbedError, RotationSystem};
pub use graph::{Graph, GraphError, MinorStep};
