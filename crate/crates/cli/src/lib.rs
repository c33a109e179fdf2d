//! Command-line front end: document ingestion, the built-in catalog and
//! one report per analysis.

pub mod commands;
pub mod document;
pub mod report;
