//! Presentations, maps and polynomials of the reference example, written
//! out independently of the bundled data files.

use foxhom_core::laurent::vars;
use foxhom_core::{AbelianizationMap, LaurentPoly, Presentation, SignedMonomial, Vars};

pub const N_GENERATORS: [&str; 6] = ["m", "m1", "m2", "s", "t", "u"];

pub const N_RELATORS: [&str; 5] = [
    "m1^-1 m^-1 u^-1 t^-1 s^-1 m s t u m",
    "m2^-1 s t^-1 s t m1 t^-1 s^-1 t s^-1",
    "m1^-1 t^-1 s^-1 t^2 u m2 u^-1 t^-2 s t m1 m^-1",
    "s^2 t^2 m^-1 u^-1 t^-1 s^-1 m2 u^-1 t^-1 s^-1",
    "t^-1 s t^-1 s^-1 m^-1 s t u m t^-1 s^-1 t^2 u m2^-1 m",
];

pub fn n_final() -> Presentation {
    Presentation::parse("N-final", &N_GENERATORS, &N_RELATORS).unwrap()
}

pub fn nb() -> Presentation {
    Presentation::parse(
        "Nb",
        &["f4", "g1", "g2"],
        &["f4^-1 g2 g1 g2^-1 g1^-1 f4 g2 g1^-1 g2^-1 g1"],
    )
    .unwrap()
}

pub fn xyz() -> Vars {
    vars(&["x", "y", "z"])
}

fn map(v: Vars, images: &[(&str, &[i32])]) -> AbelianizationMap {
    AbelianizationMap::from_pairs(
        v,
        images.iter().map(|(g, e)| (*g, SignedMonomial::positive(e.to_vec()))),
    )
    .unwrap()
}

pub fn free_abelian_map() -> AbelianizationMap {
    map(
        xyz(),
        &[
            ("m", &[1, 0, 0]),
            ("m1", &[1, 0, 0]),
            ("m2", &[1, 0, 0]),
            ("s", &[0, 1, 0]),
            ("t", &[0, 0, 1]),
            ("u", &[0, 0, 0]),
        ],
    )
}

pub fn infinite_cyclic_map() -> AbelianizationMap {
    map(
        vars(&["x"]),
        &[
            ("m", &[2]),
            ("m1", &[2]),
            ("m2", &[2]),
            ("s", &[1]),
            ("t", &[1]),
            ("u", &[0]),
        ],
    )
}

/// Rows m, m1, m2, s, t, u; columns R1..R5.
pub const PRINTED_MATRIX: [[&str; 5]; 6] = [
    [
        "(1-y*z+x*y*z)/(x^2*y*z)",
        "0",
        "-1",
        "-(y^2*z^2)/x",
        "(-1+y*z+z^2)/(x*z^2)",
    ],
    ["-1/x", "y^2/x", "(x-1)/x", "0", "0"],
    ["0", "-1/x", "z/(x*y)", "(y*z)/x", "-1/x"],
    [
        "(x-1)/(x^2*y*z)",
        "-((x-1)*(y+z))/(x*z)",
        "(x-1)/(x*y*z)",
        "(y*(x-z))/x",
        "(1-2*x+x*z)/(x*z^2)",
    ],
    [
        "(x-1)/(x^2*z)",
        "-(y*(x-1)*(y-1))/(x*z)",
        "((x-1)*(-1+y-z))/(x*y*z)",
        "(y*(-x+x*y+x*y*z-y*z))/x",
        "(x+y-2*x*y)/(x*z^2)",
    ],
    [
        "(x-1)/x^2",
        "0",
        "-(z*(x-1))/(x*y)",
        "-(y*z*(x+y*z))/x",
        "(y+x*z)/(x*z)",
    ],
];

pub const Q: &str = "(y+z+4*y*z+y^2*z+y*z^2)";

pub fn delta_xyz() -> LaurentPoly {
    LaurentPoly::parse(&format!("(x-1)*(y-1)*(z-1)*{Q}"), &xyz()).unwrap()
}

pub fn delta_l() -> LaurentPoly {
    LaurentPoly::parse("(x-1)*(x*y-1)*(y-1)^2*(x-y)/x^3", &vars(&["x", "y"])).unwrap()
}

/// Degrees of (m, m1, m2, s, t, u) under the infinite-cyclic map.
pub const N_DEGREES: [i64; 6] = [2, 2, 2, 1, 1, 0];

pub const SLOPES: [&str; 3] = ["m", "s t s^-1 t", "t^-1 s^-1 t s^-1"];

pub fn delta_infinity() -> LaurentPoly {
    LaurentPoly::parse("2*x*(x-1)^3*(x+1)^3", &vars(&["x"])).unwrap()
}

pub fn nb_faces() -> Presentation {
    Presentation::parse(
        "Nb-faces",
        &["f1", "f2", "f3", "f4", "g1", "g2"],
        &[
            "f1 g2 f2^-1 g1^-1",
            "f2^-1 g2^-1 f3 g1^-1",
            "f3 g2^-1 f4^-1 g1",
            "f4^-1 g2 f1 g1",
        ],
    )
    .unwrap()
}

pub fn amalgam() -> Presentation {
    Presentation::parse(
        "amalgam",
        &["f4", "g1", "g2", "s", "t"],
        &[
            "f4^-1 g2 g1 g2^-1 g1^-1 f4 g2 g1^-1 g2^-1 g1",
            "t^-2 s^-2 = f4^-1 g2^-1 g1^-1 f4 g2 g1^-1",
            "s t s^-1 t = g2 g1 g2^-1 f4^-1 g1 g2 g1^-1 f4",
            "t^-1 s^-1 t s^-1 = f4^-1 g1^-1 f4 g2",
        ],
    )
    .unwrap()
}

/// The printed presentation after eliminating `g2`; brackets expanded with
/// `[a, b] = a b a^-1 b^-1`.
pub fn amalgam_reduced() -> Presentation {
    let w = "f4 t^-1 s^-1 t s^-1";
    let wi = "s t^-1 s t f4^-1";
    Presentation::parse(
        "amalgam-reduced",
        &["f4", "g1", "s", "t"],
        &[
            format!("f4^-2 g1 {w} g1 {wi} g1^-1 f4 {w} g1^-1 {wi} g1 g1^-2 f4 g1"),
            "t^-2 s^-2 = f4^-1 s t^-1 s t f4^-1 g1^-1 f4^2 t^-1 s^-1 t s^-1 g1^-1".to_string(),
            "s t s^-1 t = f4^-1 g1 f4 t^-1 s^-1 t s^-1 g1 s t^-1 s t f4^-2 g1 f4 t^-1 s^-1 t s^-1 g1^-1 f4".to_string(),
        ],
    )
    .unwrap()
}
