//! Column-aware entity embeddings for multi-table relational databases.
//!
//! The pipeline: a declarative schema plus CSV files become an in-memory
//! [`database::Database`]; [`corpus`] turns rows into per-column tokenized
//! sentences with masked-cell and next-tuple training signals; [`model`] is a
//! small transformer encoder over per-column embedding spaces built on the
//! reverse-mode [`tensor`] core; [`train`] optimizes it; [`eval`] scores
//! missing-value imputation (MR / MRR / Hit@k) and tuple classification
//! (micro P@k / R@k); [`skipgram`] is a row-linearizing word2vec baseline
//! sharing the same vocabulary and evaluation harness.

pub mod checkpoint;
pub mod corpus;
pub mod database;
pub mod eval;
pub mod metrics;
pub mod model;
pub mod rng;
pub mod schema;
pub mod skipgram;
pub mod synth;
pub mod tensor;
pub mod train;

pub use database::Database;
pub use schema::SchemaSet;
