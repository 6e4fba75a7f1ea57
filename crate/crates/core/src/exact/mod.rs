//! Exact arithmetic substrate: rationals, integer/rational linear algebra,
//! exterior powers, characteristic polynomials, root-radius enclosures and
//! rational linear programming.

pub mod lp;
pub mod mat;
pub mod poly;
pub mod rat;

pub use lp::{lp_feasible, simplex_minimize, Feasibility, LpOutcome};
pub use mat::{lattice_index, primitivize, rref, IntMat, QMat};
pub use poly::{char_poly, perron_radius, UniPoly};
pub use rat::{approx, fmt_rat, int, nth_root_bounds, parse_rat, rat, rat_from_int, rat_pq, Int, Rat};
