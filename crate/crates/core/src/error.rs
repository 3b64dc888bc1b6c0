use alloc::string::String;
use core::fmt;

/// Errors raised by the algebraic layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `gcd(n, q) != 1` or `n == 0`.
    InvalidModulus { n: u64, q: u64 },
    /// A residue outside `[0, n)`.
    ResidueOutOfRange { value: u64, modulus: u64 },
    NotPrimePower(u64),
    NotPrime(u64),
    DivisionByZero,
    /// `n` does not divide the order of the multiplicative group.
    NoRootOfUnity { n: u64, order: u64 },
    /// Field too large for the word-sized representation.
    FieldTooLarge { p: u64, degree: u32 },
    /// A consecutive run index outside `0..=s-2`.
    RunIndexOutOfRange { k: u64, max: u64 },
    /// `n` is not an odd divisor of `q^2 + 1`.
    BadLength { q: u64, n: u64 },
    /// The defining set covers all of `Z_n`.
    DegenerateCode,
    /// `c` outside `0..=n-1` in the EA-Singleton check.
    EbitsOutOfRange { c: u64, n: u64 },
    /// Family parameters rejected (the reason is human readable).
    InvalidFamily(String),
    /// A construction produced an inconsistent object. Indicates a bug or
    /// a defining set that is not a union of cosets.
    Internal(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidModulus { n, q } => {
                write!(f, "invalid modulus: gcd(n={n}, q={q}) must be 1 and n positive")
            }
            Error::ResidueOutOfRange { value, modulus } => {
                write!(f, "residue {value} out of range for modulus {modulus}")
            }
            Error::NotPrimePower(q) => write!(f, "{q} is not a prime power"),
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::NoRootOfUnity { n, order } => {
                write!(f, "{n} does not divide the group order {order}")
            }
            Error::FieldTooLarge { p, degree } => {
                write!(f, "GF({p}^{degree}) does not fit the 64-bit representation")
            }
            Error::RunIndexOutOfRange { k, max } => {
                write!(f, "run index {k} out of range (max {max})")
            }
            Error::BadLength { q, n } => write!(f, "n={n} is not an odd divisor of q^2+1 (q={q})"),
            Error::DegenerateCode => write!(f, "defining set is all of Z_n; the code is zero"),
            Error::EbitsOutOfRange { c, n } => write!(f, "ebit count {c} outside 0..={}", n.saturating_sub(1)),
            Error::InvalidFamily(reason) => write!(f, "invalid family parameters: {reason}"),
            Error::Internal(msg) => write!(f, "internal consistency error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
