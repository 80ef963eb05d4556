//! File formats, the solve/verify pipeline and the scaling benchmark.

mod bench;
mod graph_file;
mod instance;
mod pipeline;

pub use bench::{bench_scaling, write_bench_rows, BenchConfig, BenchRow, BENCH_HEADER};
pub use graph_file::parse_graph;
pub use instance::{read_instance, write_instance, InstanceFile, ParamsFile, PointEntry};
pub use pipeline::{solve_instance, verify_gadget, Outcome, Verdict};
