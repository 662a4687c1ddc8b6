//! Terminal and HTTP front ends for the `coeffgame` engine.

pub mod cli;
pub mod http;
pub mod session;
