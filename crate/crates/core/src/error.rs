use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("poset has no elements")]
    EmptyPoset,
    #[error("poset has {0} elements, at most {max} are supported", max = crate::MAX_ELEMENTS)]
    TooManyElements(usize),
    #[error("invalid element name {0:?}")]
    InvalidName(String),
    #[error("duplicate element name {0:?}")]
    DuplicateName(String),
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("element index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("order is not antisymmetric: {0} and {1} lie on a cycle")]
    Cycle(String, String),
    #[error("meets and joins are only taken over nonempty sets")]
    EmptySet,
    #[error("unknown standard poset {0:?}")]
    UnknownStandardPoset(String),
    #[error("standard poset {0:?} needs a size of at least 1")]
    ZeroSize(String),
    #[error("parameter bound must be at least 2, got {0}")]
    BoundTooSmall(u32),
    #[error("exhaustive search over {size} elements exceeds the bound of {bound}")]
    BoundExceeded { size: usize, bound: usize },
    #[error("{0} <= {1}, so no filter can separate them")]
    NotSeparable(String, String),
    #[error("illegal move")]
    IllegalMove,
    #[error("variable X{0} is not bound by the assignment")]
    UnboundVariable(u32),
    #[error("formula has free variable X{0}")]
    FreeVariable(u32),
    #[error("formula arities must be at least 1")]
    ZeroArity,
    #[error("poset is not a meet semilattice")]
    NotMeetSemilattice,
    #[error("poset is not a lattice")]
    NotLattice,
}
