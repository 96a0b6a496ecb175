//! File formats, the exhaustive verification harness and the command line
//! for [`tdvc_core`].

pub mod cli;
pub mod format;
pub mod verify;
