//! Algorithms behind the `lame-atlas` tool: exact arithmetic, permutation
//! groups, trees of finite groups, ramification bookkeeping and the explicit
//! curve computations.

pub mod classify;
pub mod curvegeo;
pub mod exactalg;
pub mod permgrp;
pub mod ramify;
pub mod treegrp;
