//! Library side of the `cyclify` command-line tool.

pub mod corpus;
pub mod job;
pub mod parse;
pub mod report;
pub mod run;
