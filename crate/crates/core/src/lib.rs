#![allow(clippy::type_complexity)]

pub mod cartesian;
pub mod cli;
pub mod contracts;
pub mod effects;
pub mod finite;
pub mod fixtures;
pub mod laws;
pub mod minilang;
pub mod multiplate;
pub mod samples;
pub mod store;
pub mod suites;
pub mod vanlaarhoven;
