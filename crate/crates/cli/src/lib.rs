//! Verification harness for the k-PSD closure laboratory: the experiment
//! drivers, their CSV row format, and the logic behind the `kpsd` binary's
//! subcommands.

pub mod commands;
pub mod row;
pub mod verify;
