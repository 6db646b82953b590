//! Small numeric kernels shared by the physics modules: dense complex LU,
//! bracketed bisection, Gauss-Legendre quadrature, randomized quasi-Monte-Carlo
//! sampling and a Jacobi eigenvalue sweep for small Hermitian matrices.

pub mod hermitian;
pub mod linsolve;
pub mod qmc;
pub mod quadrature;
pub mod rootfind;

pub use hermitian::hermitian_eigenvalues;
pub use linsolve::solve_dense;
pub use qmc::{QmcEstimate, qmc_integrate};
pub use quadrature::{gauss_legendre, integrate_2d, integrate_2d_adaptive};
pub use rootfind::bisect;
