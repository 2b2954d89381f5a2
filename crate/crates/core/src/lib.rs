//! Symbolic computation for the closed fragment of the polymodal
//! provability logic GLP.
//!
//! * [`ordinal`]: ordinals below Γ₀, hyperexponentials and hyperlogarithms;
//! * [`worm`]: worms, their normal forms, order types, the orders `<_ξ` and
//!   Ω-sequences;
//! * [`turing`]: Turing-progression schedules of worms;
//! * [`syntax`]: the text format;
//! * [`oracle`]: brute-force cross-checks.

pub mod error;
pub mod oracle;
pub mod ordinal;
pub mod syntax;
pub mod turing;
pub mod worm;

pub use error::{Error, Result};
pub use ordinal::Ordinal;
pub use syntax::{parse_ordinal, parse_worm, print_ordinal, print_worm, Style};
pub use worm::Worm;
