//! Random planar quadrangulations, their tree encodings, and continuum
//! approximations of the Brownian map and the Brownian plane.

pub mod brownian_map;
pub mod cvs;
pub mod error;
pub mod map;
pub mod plane;
pub mod rmq;
pub mod rng;
pub mod runner;
pub mod snake;
pub mod stats;
pub mod tree;

pub use error::{Error, Result};
