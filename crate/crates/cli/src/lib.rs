//! Library surface of the command-line front end: the argument
//! parsers and the versioned JSON schema.  The binary in main.rs is a
//! thin dispatcher over these plus the core crate; keeping them in a
//! lib target lets integration tests type-check JSON round-trips
//! instead of scraping strings.

pub mod parse;
pub mod schema;
