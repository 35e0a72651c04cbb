//! Command-line front end for `menage-core`: each command builds an
//! [`OutputDocument`] that renders as JSON, CSV or plain text.

pub mod commands;
pub mod document;
pub mod verify;

pub use commands::{
    cmd_fixed_seat, cmd_problem3, cmd_rook, cmd_rook_text, cmd_straight, cmd_table, CommandError, Method,
    SeatMethod,
};
pub use document::{Format, OutputDocument, Record, Status, Value};
pub use verify::cmd_verify;
