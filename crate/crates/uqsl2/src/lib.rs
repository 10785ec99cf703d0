//! Exact computer algebra for the quantized enveloping algebra U_q(sl2).
//!
//! The crate provides, over either the rational function field Q(q) or a
//! cyclotomic field at a root of unity:
//!
//! - [`scalars`]: Laurent polynomials, Q(q), cyclotomic fields, q-integers;
//! - [`uq`]: PBW-basis arithmetic in U_q(sl2), Hopf operations, Casimir
//!   elements, centrality tests and the Harish-Chandra maps;
//! - [`clifford`]: the four-dimensional Clifford algebra on two isotropic
//!   generators, the homomorphism from Laurent polynomials in K, and the
//!   spin module;
//! - [`tensoralg`]: the tensor algebra housing the Dirac element D, the
//!   diagonal embedding, and symbolic verification of its identities;
//! - [`matrix`]: exact matrices over the active field;
//! - [`repmod`]: weight-module constructors (finite families and windowed
//!   Verma-type modules) behind a name-keyed registry;
//! - [`cohomology`]: exact kernel/image/quotient computations and Dirac
//!   cohomology reports with K-eigenvalue data.
//!
//! ```
//! use uqsl2::cohomology::dirac_cohomology_finite;
//! use uqsl2::repmod::make_t_omega_k;
//! use uqsl2::scalars::FieldMode;
//! use uqsl2::tensoralg::TensorAlgebra;
//!
//! // the square of the Dirac element matches its Casimir decomposition,
//! // exactly, at a primitive fifth root of unity
//! let mode = FieldMode::root_of_unity(5).unwrap();
//! let algebra = TensorAlgebra::new(mode);
//! assert!(algebra.verify_d_squared().unwrap().ok);
//!
//! // the five-dimensional module T_(+1,2) has one cohomology class at
//! // each extreme weight, with delta(K)-eigenvalues q^(-5) and q^5
//! let module = make_t_omega_k(1, 4, FieldMode::Generic).unwrap();
//! let report = dirac_cohomology_finite(&module).unwrap();
//! assert_eq!(report.total_dim, Some(2));
//! assert_eq!(report.s_plus[0].vector, "v_2");
//! assert_eq!(report.s_plus[0].eigenvalue, "q^5");
//! ```

pub mod clifford;
pub mod cohomology;
pub mod matrix;
pub mod report;
pub mod repmod;
pub mod scalars;
pub mod tensoralg;
pub mod uq;

pub use scalars::{FieldMode, Scalar, ScalarError};
