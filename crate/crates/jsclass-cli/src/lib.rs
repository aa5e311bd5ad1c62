//! Filesystem-facing companion to `jsclass-core`: walks source trees, loads
//! programs from JavaScript or ESTree JSON files, and drives the analyze and
//! report commands used by the `jsclass` binary.

#![deny(missing_docs)]

pub mod run;
pub mod walking;
