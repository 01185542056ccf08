//! Library half of the `gradedk` command-line tool: document handling,
//! command implementations and the output record. The binary in `main.rs`
//! only parses argv and maps outcomes to exit codes.

pub mod commands;
pub mod matrix_doc;
pub mod report;
