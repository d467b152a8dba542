//! Symbol-level classification: isotropy generators, induced actions,
//! exact intertwiner solving, contraction spanning sets and operator symbols.

pub mod classify;
pub mod generators;
pub mod solver;
pub mod spanning;
pub mod symbols;
pub mod tensor;

pub use classify::{classify, classify_with, r_space_operators, ClassifyReport, ClassifyRow};
pub use generators::{isotropy_generators, Algebra, GeneratorLabel, LieGenerator};
pub use solver::{solve_intertwiners, IntertwinerSolution};
pub use spanning::contraction_spanning_set;
pub use symbols::{p_symbol, symbol_of};
pub use tensor::{induced_action, ActionMatrix, Space, SymMonomial, SymbolMap, TensorSpaceBasis};
