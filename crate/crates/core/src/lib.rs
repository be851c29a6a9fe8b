//! Exact polynomial sequences, truncated rational power series, Greg and
//! Cayley tree enumeration, and numeric Lambert W checks, tied together by a
//! verification suite.

pub mod error;
pub mod fps;
pub mod numeric;
pub mod polyseq;
pub mod report;
pub mod trees;
pub mod verify;

pub use error::{Error, Result};
pub use fps::RatSeries;
pub use polyseq::{Poly, PolyTriangle};
pub use report::CheckReport;
pub use verify::{run_suite, Budget, Config, SuiteResult};
