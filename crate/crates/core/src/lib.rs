//! Extraction and classification of class comments from Java, Python, and
//! Smalltalk source corpora.
//!
//! The pipeline has four stages: harvest class comments from source trees
//! ([`extract`]), draw statistically significant length-stratified samples
//! ([`sampling`]), turn labeled sentences into NLP-pattern and tf-idf feature
//! matrices ([`nlp`], [`text`], [`matrix`]), and train/evaluate per-category
//! binary classifiers with stratified cross-validation and rank-based
//! statistics ([`model`], [`eval`]).
//!
//! All numeric stages are generic over the scalar type through [`Real`];
//! the crate-root aliases pin the default `f64` pipeline.

pub mod corpus;
pub mod error;
pub mod eval;
pub mod extract;
pub mod matrix;
pub mod model;
pub mod nlp;
pub mod sampling;
pub mod scalar;
pub mod seed;
pub mod text;

pub use error::{Error, Result};
pub use scalar::Real;

/// Scalar used by the concrete (CLI-facing) pipeline.
pub type Scalar = f64;
