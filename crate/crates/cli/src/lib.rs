//! Front end for the `ics` command: the poset expression language and the
//! experiment commands.

pub mod app;
pub mod expr;

pub use app::{run, Cli, CliError, Verdict};
pub use expr::{parse_expr, ExprError, PosetExpr};
