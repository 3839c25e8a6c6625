//! Measuring how information is integrated by lossless maps.
//!
//! * [`pid`]: exact partial information decomposition of two-input channels.
//! * [`aitk`]: computable complexity estimates from a toy machine and LZSS.
//! * [`synergy`]: the dual-advice program for the concatenation map.
//! * [`integration`]: edit-distance integration of injective encoders.
//! * [`cli`], [`report`], [`corpus`]: the `itk` command line and its data.

pub mod aitk;
pub mod bits;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod integration;
pub mod pid;
pub mod report;
pub mod rng;
pub mod synergy;
