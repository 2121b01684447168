//! Reports and diagrams for the `cqsres` command-line tool.

pub mod report;
pub mod svg;

pub use report::Report;
pub use svg::SvgScene;
