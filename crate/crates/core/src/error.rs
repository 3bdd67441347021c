use thiserror::Error;

/// Errors shared across the exact and numeric stages.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular over the rationals")]
    Singular,

    #[error("matrix entry ({row},{col}) is not finite")]
    NonFinite { row: usize, col: usize },

    #[error("matrix is not symmetric: defect {defect:.3e} exceeds tolerance {tol:.1e}")]
    NotSymmetric { defect: f64, tol: f64 },

    #[error("signed permutation matrix invariant violated: {0}")]
    SignedPermInvariant(String),

    #[error("ghost index {index} out of range 1..={n}")]
    GhostIndexOutOfRange { index: usize, n: usize },

    #[error("cochain degree {degree} out of range 0..={n}")]
    DegreeOutOfRange { degree: usize, n: usize },

    #[error("structure tensor violates antisymmetry or the Jacobi identity ({count} violations)")]
    JacobiFailed { count: usize },

    #[error("matrices do not realize the bracket: commutator defect at pair ({i},{j})")]
    NotARepresentation { i: usize, j: usize },

    #[error("action matrix for generator {generator} is not a derivation (fails Leibniz at pair ({u},{v}))")]
    NotADerivation { generator: usize, u: usize, v: usize },

    #[error("action is not a homomorphism: b([X_{i},X_{j}]) != [b(X_{i}),b(X_{j})]")]
    NotAHomomorphism { i: usize, j: usize },

    #[error("parameter {value} lies outside the family domain [{lo}, {hi}]")]
    OutsideDomain {
        value: String,
        lo: String,
        hi: String,
    },

    #[error("invalid family parameter: {0}")]
    BadFamilyParameter(String),

    #[error("tensor does not have the expected solvable shape: {0}")]
    BadSolvableShape(String),

    #[error("Behr constraint n*a = 0 violated")]
    BehrConstraint,

    #[error("classification requires dimension 3, got {0}")]
    NotDimensionThree(usize),

    #[error("operator is not square-zero: Q^2 != 0")]
    NotSquareZero,

    #[error("vertex operator has no definite parity with respect to the grading (even defect {even:.3e}, odd defect {odd:.3e})")]
    IndefiniteParity { even: f64, odd: f64 },

    #[error("quadrature order {0} is too small (minimum 2)")]
    QuadratureOrder(usize),

    #[error("series did not converge within {0} terms")]
    SeriesDiverged(usize),

    #[error("beta must be positive, got {0}")]
    NonPositiveBeta(f64),

    #[error("empty grid")]
    EmptyGrid,

    #[error("grid values must be strictly ascending")]
    GridNotAscending,

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
