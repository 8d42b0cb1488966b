//! Request handling behind the `minexp` command: typed requests, dispatch to
//! the computation routes, and reports rendered as text or JSON.
//!
//! Exit codes: 0 when every request succeeds or passes, 1 for input errors,
//! 2 when a verification fails.

pub mod commands;
pub mod report;
pub mod request;
pub mod scan;

pub use commands::{aggregate, Runner};
pub use report::{Quantity, Report, Status, SCHEMA_VERSION};
pub use request::{parse_manifest, RationalInput, Request};
pub use scan::ScanBounds;
