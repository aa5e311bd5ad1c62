//! Static analysis of ES5 JavaScript that recovers emulated object-oriented
//! structure: constructor-function classes, their attributes and methods, and
//! prototype-based inheritance. On top of the recovered model it computes
//! classic OO metrics (NOC, NOM, NOA, children, DIT, LOC) and renders UML
//! class diagrams (DOT), distribution maps (SVG), metric tables, and a
//! canonical JSON model.
//!
//! The crate is `no_std` + `alloc`: it maps source text (or ESTree JSON
//! documents) to values and back to text, with no IO of its own. The
//! companion CLI crate supplies file walking and artifact writing.
//!
//! Pipeline: [`parser`] or [`estree`] produce [`ast::Program`]s, [`detect`]
//! derives an [`detect::OOModel`], [`metrics`] scores it, and [`report`]
//! serializes both into the output formats.

#![cfg_attr(not(test), no_std)]
#![deny(missing_docs)]

extern crate alloc;

pub mod ast;
pub mod detect;
pub mod diag;
pub mod estree;
pub mod lexer;
pub mod metrics;
pub mod parser;
pub mod report;
