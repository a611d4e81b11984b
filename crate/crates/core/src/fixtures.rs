//! The presentations shipped under `fixtures/`, embedded at compile time.

use crate::presentation::Presentation;

pub const A3: &str = include_str!("../../../fixtures/a3.sba");
pub const A3NR: &str = include_str!("../../../fixtures/a3nr.sba");
pub const KRONECKER: &str = include_str!("../../../fixtures/kronecker.sba");
pub const GP: &str = include_str!("../../../fixtures/gp.sba");
pub const D4SUB: &str = include_str!("../../../fixtures/d4sub.sba");
pub const D4SUB_M2111: &str = include_str!("../../../fixtures/d4sub_m2111.mod");
pub const D4SUB_S0: &str = include_str!("../../../fixtures/d4sub_s0.mod");

fn load(text: &str) -> Presentation {
    Presentation::parse(text).expect("shipped fixture parses")
}

pub fn a3() -> Presentation {
    load(A3)
}

pub fn a3nr() -> Presentation {
    load(A3NR)
}

pub fn kronecker() -> Presentation {
    load(KRONECKER)
}

pub fn gp() -> Presentation {
    load(GP)
}

pub fn d4sub() -> Presentation {
    load(D4SUB)
}

pub fn all() -> Vec<Presentation> {
    vec![a3(), a3nr(), kronecker(), gp(), d4sub()]
}
