pub mod ring;
pub mod spectrum;
pub mod flatness;
pub mod sring;
pub mod dsl;
pub mod harness;
pub mod export;
pub mod cli;
