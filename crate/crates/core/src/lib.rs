//! A numerical laboratory for the k-PSD closure.
//!
//! The k-PSD closure of order (n, k) is the cone of n-by-n symmetric real
//! matrices whose every k-by-k principal submatrix is positive semidefinite.
//! It relaxes the PSD cone (and equals it at k = n), and this crate exists to
//! study how good a relaxation it is: construct members, decide membership
//! with certificates, measure Frobenius distance to the PSD cone, and test
//! the averaging, design, eigenvector-sparsification, and restricted-isometry
//! arguments that bound the farthest normalized distance in each (n, k)
//! regime.
//!
//! Modules:
//!
//! - [`symmat`]: dense symmetric matrices, principal submatrices, and a
//!   cyclic Jacobi eigensolver.
//! - [`cone`]: distance and projection to the PSD cone, negative-spectrum
//!   diagnostics.
//! - [`closure`]: membership tests with k-sparse counterexample certificates,
//!   and a shift-based member generator.
//! - [`averaging`]: the minor-averaging operator (full, sampled, and
//!   design-based) with its exact distance identity and sample-size bounds.
//! - [`constructions`]: structured members — the two-parameter constant
//!   matrix family, restricted-isometry Bernoulli constructions, and the
//!   eigenvector sparsifier.
//! - [`designs`]: balanced incomplete block designs used as structured minor
//!   selectors.
//! - [`rng`]: seeded, splittable random streams for reproducible experiments.
//!
//! Everything is pure and deterministic given explicit seeds; values are
//! immutable after construction, so concurrent reads and data-parallel
//! mapping over independent matrices are safe.

pub mod averaging;
pub mod closure;
pub mod cone;
pub mod constructions;
pub mod designs;
pub mod error;
pub mod rng;
pub mod symmat;

pub use error::{Error, Result};
pub use symmat::{EigenDecomposition, KSet, SymMatrix, DEFAULT_PSD_TOL};

// The guide chapters under book/src double as doctests so their snippets
// cannot rot; `cargo test --doc` compiles and runs every fenced example.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            pub struct $name;
        };
    }

    chapter!(Introduction, "../../../book/src/introduction.md");
    chapter!(SymmetricMatrices, "../../../book/src/symmetric-matrices.md");
    chapter!(PsdCone, "../../../book/src/psd-cone.md");
    chapter!(ClosureMembership, "../../../book/src/closure-membership.md");
    chapter!(Averaging, "../../../book/src/averaging.md");
    chapter!(GabFamily, "../../../book/src/gab-family.md");
    chapter!(RipConstruction, "../../../book/src/rip-construction.md");
    chapter!(Sparsifier, "../../../book/src/sparsifier.md");
    chapter!(BlockDesigns, "../../../book/src/block-designs.md");
}
