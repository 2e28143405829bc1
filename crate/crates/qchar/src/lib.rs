pub mod expr;
pub mod files;
pub mod suite;
