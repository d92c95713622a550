//! Instance generators, reduction gadgets, file formats and the
//! interdependent random-network experiment.

mod gadgets;
mod generate;
pub mod io;
mod table1;

pub use gadgets::{gen_hitting_set_gadget, gen_vertex_cover_gadget, worked_example_cover_graph};
pub use generate::{derive_seed, gen_connected_erdos_renyi, gen_erdos_renyi};
pub use io::Instance;
pub use table1::{
    evaluate, run_table1, Cell, ExperimentConfig, ExperimentReport, InstanceRow, SideMeans,
    SideResult,
};
