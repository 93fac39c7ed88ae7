//! Library face of the `entsort` CLI: state-file format, command
//! implementations, and report rendering.

pub mod commands;
pub mod format;
pub mod output;

pub use commands::{
    bench, generate, load_states, schmidt_report, sort_linear, sort_poset, BenchMode, BenchRow,
    CommandError, GenerateKind, GenerateSpec, LinearReport, PosetReport, SchmidtReport,
    StateFailure,
};
pub use format::{FormatError, RecordKind, StateFile, StateRecord, FORMAT_VERSION};
pub use output::{render_bench, render_linear, render_poset, render_schmidt, OutputFormat};
