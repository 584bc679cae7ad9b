use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Malformed polynomial text; `pos` is a byte offset into the input.
    Parse {
        pos: usize,
        msg: String,
    },
    /// A letter `xi` with `i` outside `1..=g`.
    VariableOutOfRange {
        index: usize,
        g: usize,
    },
    NotHomogeneous,
    DegreeMismatch {
        expected: usize,
        found: usize,
    },
    ZeroPolynomial,
    ConstantPolynomial,
    NotSymmetric,
    Dimension(String),
    EmptyInput,
    InvalidArgument(String),
    MalformedCertificate(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { pos, msg } => write!(f, "parse error at offset {pos}: {msg}"),
            Error::VariableOutOfRange { index, g } => {
                write!(f, "variable x{index} out of range (g = {g})")
            }
            Error::NotHomogeneous => f.write_str("polynomial is not homogeneous"),
            Error::DegreeMismatch { expected, found } => {
                write!(f, "degree mismatch: expected {expected}, found {found}")
            }
            Error::ZeroPolynomial => f.write_str("zero polynomial not allowed here"),
            Error::ConstantPolynomial => f.write_str("constant polynomial not allowed here"),
            Error::NotSymmetric => f.write_str("matrix is not symmetric"),
            Error::Dimension(msg) => write!(f, "dimension mismatch: {msg}"),
            Error::EmptyInput => f.write_str("empty input"),
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::MalformedCertificate(msg) => write!(f, "malformed certificate: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
