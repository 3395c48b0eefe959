//! Bigraded Hilbert functions of `G_m(G_I(A))` and of `N = ⊕ J I^n / I^{n+1}`:
//! tabulation, sum transforms and exact polynomial fits.

pub mod cells;
pub mod fit;
pub mod interp;
pub mod table;

pub use cells::{h10_cell, h10_cell_of_n, CellFunction, FnCells, NCells, TCells};
pub use fit::{stable_fit, stable_fit_1d, FitConfig, FitProvenance, FitReport, UnivariateFit};
pub use interp::{binomial, interpolate, BinomialPoly2};
pub use table::{sum_transform_j, tabulate, BigradedTable, TableKind};
