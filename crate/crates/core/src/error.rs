use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("lattice is not contained in the claimed superlattice")]
    NotSublattice,
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("bilinear form is degenerate on the lattice")]
    DegenerateForm,
    #[error("degree {degree} exceeds the supported cap {cap}")]
    DegreeTooLarge { degree: usize, cap: usize },
    #[error("polynomial is not irreducible over Q")]
    NotIrreducible,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("generators do not commute")]
    NonCommuting,
    #[error("generated algebra is not semisimple: {0}")]
    NonSemisimple(String),
    #[error("matrix is singular")]
    Singular,
    #[error("canonical tensor generator is not primitive (gcd {0})")]
    PrimitivityViolation(String),
    #[error("finite ring of size {size} exceeds the enumeration budget {budget}")]
    ModulusTooLarge { size: String, budget: u64 },
    #[error("every g value equals 1 while some f value exceeds 1")]
    AllOnes,
    #[error("witness fails exact verification at sample {0}")]
    InvalidWitness(usize),
    #[error("supplied integral basis rejected: {0}")]
    BadIntegralBasis(String),
}

pub type Result<T> = std::result::Result<T, Error>;
