//! Library half of the `tamari` command: table builders and the
//! point-evaluation grammar.

pub mod expr;
pub mod tables;
