#![no_std]

extern crate alloc;

pub mod catalog;
pub mod classifier;
pub mod contraction;
pub mod dual_graph;
pub mod rational;
pub mod twig;
