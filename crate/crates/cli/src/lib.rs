//! Companion crate for the exact elliptic sheaf library: file formats,
//! the command line surface and the acceptance battery.

pub mod battery;
pub mod formats;
