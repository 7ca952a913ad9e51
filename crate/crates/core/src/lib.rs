//! Exact codecs for posits, linear takums and IEEE 754 style minifloats,
//! closed forms for how many bits an integer needs and for the largest
//! consecutive integer of each format, and an exhaustive oracle that
//! checks those closed forms at small widths.

pub mod bits;
pub mod dyadic;
pub mod error;
pub mod format;
pub mod lambert;
pub mod minifloat;
pub mod oracle;
pub mod posit;
pub mod report;
pub mod takum;
pub mod verify;

pub use bits::{truncate_trailing_zeros, twos_complement, BitString};
pub use dyadic::{integer_profile, DyadicValue, IntegerProfile};
pub use error::{Error, Result};
pub use format::{signed_integer_ratio, FormatSpec, Tapered};
pub use lambert::{lambert_w0, LambertW0};
pub use minifloat::{MinifloatSpec, SpecialValues};
pub use oracle::{ConsecutiveReport, RepresentableSet, Source};
