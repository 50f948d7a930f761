//! Serializable documents for the command line: JSON via serde, and DOT for
//! the specialization order.

pub mod dot;
pub mod json;

pub use dot::export_dot;
