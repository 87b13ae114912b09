//! Exact arithmetic for the Jones polynomials of rational (two-bridge) links.
//!
//! The library computes q-deformed integers `(a, b)_q` from coprime pairs,
//! q-rational numbers `N_q/D_q`, writhes of rational link diagrams by three
//! combinatorial methods, and the normalized and original Jones polynomials
//! `J_α(q)` / `V_α(t)` — all from continued-fraction and Farey-sum arithmetic
//! over exact integers. An independent Kauffman-bracket oracle (state sum and
//! twist-region transfer matrices on an explicit 4-plat diagram) cross-checks
//! every formula; see [`verify`].

pub mod ancestor;
pub mod cfrac;
pub mod diagram;
pub mod error;
pub mod formats;
pub mod fraction;
pub mod grid;
pub mod jones;
pub mod laurent;
pub mod qint;
pub mod qrational;
pub mod quiver;
pub mod verify;
pub mod writhe;

pub use error::{Error, Result};
pub use fraction::{Fraction, FractionType};
pub use grid::GridPoly;
pub use laurent::LaurentPoly;
