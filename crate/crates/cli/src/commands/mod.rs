pub mod convert;
pub mod energy;
pub mod figure3;
pub mod sweep;
pub mod validate;
