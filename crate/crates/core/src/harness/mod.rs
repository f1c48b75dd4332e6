//! Performance formulas, erasure-channel simulation, and the Reed-Muller
//! reference table.

mod analytic;
mod simulate;
mod table1;

pub use analytic::{analytic_pud, check_epsilon};
pub use simulate::{monte_carlo, ChannelConfig, Estimate, PerformanceReport, RNG_DESCRIPTION, Z_99};
pub use table1::{table1_report, Table1Entry, Table1Report, EXPECTED_TABLE1};
