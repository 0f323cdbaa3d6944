//! Problem files, the five commands and their reports.

mod commands;
mod problem;
mod report;

pub use commands::{
    cmd_arc_test, cmd_certify, cmd_family_check, cmd_milnor, cmd_newton, run_command, Command, RunOptions,
};
pub use problem::{parse_problem, Configuration, ProblemFile};
pub use report::{condition_name, validate_conditions, ConditionMap, Format, ReportDocument, Status, IMPLICATIONS};
