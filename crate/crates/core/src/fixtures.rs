//! Generator specs for test groups outside the named catalog.

/// Quaternion group of order 8, regular representation.
pub const Q8: &str = "gens:(1 3 2 4)(5 8 6 7);(1 5 2 6)(3 7 4 8)";

/// SL(2,5), order 120, acting on the 24 nonzero vectors of `F_5^2` by the
/// matrices `[[1,1],[0,1]]` and `[[0,-1],[1,0]]`.
pub const SL2_5: &str = "gens:(5 6 7 8 9)(10 12 14 11 13)(15 18 16 19 17)(20 24 23 22 21);\
(1 5 4 20)(2 10 3 15)(6 9 24 21)(7 14 23 16)(8 19 22 11)(12 13 18 17)";

/// `Alt(5) ≀ C_2` on 10 points, order 7200: the socle `Alt(5)^2` is its
/// unique minimal normal subgroup.
pub const ALT5_WR_C2: &str = "gens:(1 2 3 4 5);(1 2 3);(1 6)(2 7)(3 8)(4 9)(5 10)";

/// The Hall-check fixture set, as `(name, spec)` pairs.
pub const HALL_FIXTURES: [(&str, &str); 9] = [
    ("C6", "cyclic:6"),
    ("Sym(3)", "sym:3"),
    ("D8", "dihedral:4"),
    ("Q8", Q8),
    ("Alt(4)", "alt:4"),
    ("Sym(4)", "sym:4"),
    ("SL(2,5)", SL2_5),
    ("Alt(5)", "alt:5"),
    ("Sym(5)", "sym:5"),
];
