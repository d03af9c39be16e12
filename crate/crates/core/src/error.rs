use alloc::string::String;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {point} appears twice")]
    RepeatedPoint { point: usize },
    #[error("image array is not a bijection")]
    NotBijective,
    #[error("cycle notation: {0}")]
    Syntax(String),
}

/// Which limit was hit when a cap error is raised.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cap {
    GroupOrder,
    Orbit,
    Enumeration,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Perm(#[from] PermError),

    #[error("{what} cap of {cap} exceeded (reached {reached})")]
    CapExceeded {
        what: &'static str,
        which: Cap,
        cap: usize,
        reached: usize,
    },

    #[error("element {0} is not in the group")]
    NotInGroup(String),

    #[error("a datum needs at least 3 entries, got {0}")]
    TooFewEntries(usize),
    #[error("product of the entries is {0}, not the identity")]
    ProductNotIdentity(String),
    #[error("entry {index} is the identity")]
    TrivialEntry { index: usize },
    #[error("entries generate a proper subgroup of order {generated} (group order {order})")]
    ProperSubgroup { generated: usize, order: usize },
    #[error("data belong to different groups")]
    GroupMismatch,

    #[error("braid generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("braid word is on {word} strands but the datum has {datum} entries")]
    StrandMismatch { word: usize, datum: usize },
    #[error("braid word: {0}")]
    BraidSyntax(String),

    #[error("mover {0} does not commute with the canonicalizer")]
    IncompatibleCanonicalizer(String),
    #[error("coset actions have different mover sets")]
    MoverMismatch,
    #[error("no transversal word recorded for point {0}")]
    MissingTransversal(usize),

    #[error("hypothesis violated: the center of G has order {0}, it must be trivial")]
    NotCenterless(usize),
    #[error("hypothesis violated: G is not abelian")]
    NotAbelian,
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn cap(what: &'static str, which: Cap, cap: usize, reached: usize) -> Self {
        Error::CapExceeded {
            what,
            which,
            cap,
            reached,
        }
    }

    /// True for violated hypotheses (non-centerless, non-abelian input).
    pub fn is_hypothesis(&self) -> bool {
        matches!(self, Error::NotCenterless(_) | Error::NotAbelian)
    }

    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
