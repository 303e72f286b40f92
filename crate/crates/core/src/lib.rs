pub mod cherednik;
pub mod cli;
pub mod clifford;
pub mod dihedral;
pub mod harmonics;
pub mod linalg;
pub mod report;
pub mod scalars;
pub mod suites;
