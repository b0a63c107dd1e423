pub mod checks;
pub mod ck;
pub mod formulas;
pub mod gamma;
pub mod report;

pub use report::{Basis, CheckReport, FactorizationReport, Verdict};
