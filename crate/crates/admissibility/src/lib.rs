pub mod arith;
pub mod brauer;
pub mod cli;
pub mod engine;
pub mod group;
pub mod liedahl;
pub mod local;
pub mod report;
pub mod suite;
pub mod words;
