//! Frozen cycle data for the catalogued cases.
//!
//! Label symbols are signed bindings: `+1 = a`, `-1 = a^{-1}`, `+2 = b`,
//! `-2 = b^{-1}`, where `a`, `b` are the case's bound labels. The vertex
//! sequences are kept alongside so the replay can be compared entry by
//! entry; any disagreement is resolved by group arithmetic, never by
//! patching the tables.

/// The 16-term compressed cycle used by every exponent-9 case.
pub const HC_PATTERN: &str =
    "(a^3, b^-1, a, b^-1, a^4, b^2, a^-2, b, a^2, b, a^3, b, a^-1, b^-1, a^-1, b^-2)";

/// Compressed cycle of the second exponent-3 case.
pub const EXP3B_PATTERN: &str = "((a,b^2)^3#,a)^3";

/// Explicit 27-step cycle of the first exponent-3 case.
pub const EXP3A_LABELS: [i8; 27] = [
    1, 1, 2, -1, -1, 2, 2, 1, 1, 2, 1, 1, 2, 1, 2, 2, -1, 2, 1, 1, 2, 1, -2, 1, 1, -2, -2,
];

/// Cosets visited by `EXP3A_LABELS`, as exponent triples `x^i y^j z^k` of
/// the exponent-3 group.
pub const EXP3A_COSETS: [(u8, u8, u8); 27] = [
    (0, 0, 0),
    (1, 0, 0),
    (2, 0, 0),
    (2, 1, 0),
    (1, 1, 1),
    (0, 1, 2),
    (0, 2, 2),
    (0, 0, 2),
    (1, 0, 2),
    (2, 0, 2),
    (2, 1, 2),
    (0, 1, 1),
    (1, 1, 0),
    (1, 2, 0),
    (2, 2, 1),
    (2, 0, 1),
    (2, 1, 1),
    (1, 1, 2),
    (1, 2, 2),
    (2, 2, 0),
    (0, 2, 1),
    (0, 0, 1),
    (1, 0, 1),
    (1, 2, 1),
    (2, 2, 2),
    (0, 2, 0),
    (0, 1, 0),
];

/// Cosets visited by the compressed cycle under the order-9/order-3
/// binding, as powers `(i, j)` meaning `a^i b^j` in the quotient.
pub const HC3_COSETS: [(u8, u8); 27] = [
    (0, 0),
    (1, 0),
    (2, 0),
    (3, 0),
    (3, 2),
    (7, 2),
    (7, 1),
    (5, 1),
    (3, 1),
    (1, 1),
    (8, 1),
    (8, 2),
    (8, 0),
    (7, 0),
    (6, 0),
    (6, 1),
    (4, 1),
    (2, 1),
    (2, 2),
    (6, 2),
    (1, 2),
    (5, 2),
    (5, 0),
    (4, 0),
    (4, 2),
    (0, 2),
    (0, 1),
];

/// Cosets visited by the compressed cycle under the order-9/order-9
/// binding.
pub const HC9_COSETS: [(u8, u8); 27] = [
    (0, 0),
    (1, 0),
    (2, 0),
    (3, 0),
    (6, 2),
    (4, 2),
    (4, 1),
    (8, 1),
    (3, 1),
    (7, 1),
    (2, 1),
    (2, 2),
    (8, 0),
    (7, 0),
    (6, 0),
    (6, 1),
    (1, 1),
    (5, 1),
    (5, 2),
    (3, 2),
    (1, 2),
    (8, 2),
    (5, 0),
    (4, 0),
    (7, 2),
    (0, 2),
    (0, 1),
];

/// One order-351 case: `S = {w^i, w^j v}`, an explicit 27-step cycle of
/// the 27-coset quotient, and the doubled coset pair it crosses.
pub struct Z13Listing {
    pub i: u8,
    pub j: u8,
    pub labels: [i8; 27],
    /// Vector parts of the visited cosets, digit triples.
    pub cosets: [(u8, u8, u8); 27],
    pub double_source: (u8, u8, u8),
    pub double_target: (u8, u8, u8),
    /// The two parallel labels carrying source -> target.
    pub double_labels: (i8, i8),
}

pub const Z13_LISTINGS: [Z13Listing; 7] = [
    Z13Listing {
        i: 1,
        j: 0,
        labels: [
            -2, 1, 1, 1, -2, 1, 1, 1, 2, 1, 1, 1, 1, -2, -1, -1, -1, 2, 2, -1, -1, -2, -1, -1,
            -1, -1, -2,
        ],
        cosets: [
            (0, 0, 0),
            (2, 0, 0),
            (0, 2, 0),
            (0, 0, 2),
            (2, 2, 0),
            (1, 2, 0),
            (0, 1, 2),
            (2, 2, 1),
            (1, 0, 2),
            (2, 0, 2),
            (2, 1, 0),
            (0, 2, 1),
            (1, 1, 2),
            (2, 0, 1),
            (1, 0, 1),
            (2, 1, 1),
            (2, 1, 2),
            (2, 2, 2),
            (0, 2, 2),
            (1, 2, 2),
            (1, 2, 1),
            (1, 1, 1),
            (0, 1, 1),
            (1, 1, 0),
            (0, 0, 1),
            (0, 1, 0),
            (1, 0, 0),
        ],
        double_source: (2, 2, 2),
        double_target: (0, 2, 2),
        double_labels: (-1, 2),
    },
    Z13Listing {
        i: 2,
        j: 0,
        labels: [
            -2, 1, 1, 1, -2, -1, -1, -1, -1, -2, -1, -2, 1, 1, 1, -2, 1, 1, 1, 1, 2, -1, -1, -1,
            -1, -1, -2,
        ],
        cosets: [
            (0, 0, 0),
            (2, 0, 0),
            (0, 0, 2),
            (0, 2, 2),
            (2, 1, 2),
            (1, 1, 2),
            (2, 1, 0),
            (1, 2, 2),
            (1, 1, 1),
            (1, 1, 0),
            (0, 1, 0),
            (2, 0, 1),
            (1, 0, 1),
            (0, 1, 2),
            (1, 0, 2),
            (0, 2, 0),
            (2, 2, 0),
            (2, 2, 2),
            (2, 1, 1),
            (1, 2, 0),
            (2, 2, 1),
            (0, 2, 1),
            (2, 0, 2),
            (1, 2, 1),
            (0, 1, 1),
            (0, 0, 1),
            (1, 0, 0),
        ],
        double_source: (0, 2, 0),
        double_target: (2, 2, 0),
        double_labels: (1, -2),
    },
    Z13Listing {
        i: 1,
        j: 2,
        labels: [
            -2, -1, -1, -2, -2, 1, 1, 1, 2, 1, 2, 1, 1, 1, 1, 1, 1, 1, -2, -1, -1, 2, 2, -1, -1,
            -1, -2,
        ],
        cosets: [
            (0, 0, 0),
            (2, 2, 1),
            (0, 1, 2),
            (1, 2, 0),
            (1, 0, 2),
            (2, 0, 0),
            (0, 2, 0),
            (0, 0, 2),
            (2, 2, 0),
            (0, 2, 2),
            (2, 2, 2),
            (0, 1, 1),
            (1, 1, 1),
            (1, 2, 1),
            (1, 2, 2),
            (2, 0, 2),
            (2, 1, 0),
            (0, 2, 1),
            (1, 1, 2),
            (1, 0, 1),
            (2, 1, 1),
            (2, 1, 2),
            (2, 0, 1),
            (1, 1, 0),
            (0, 0, 1),
            (0, 1, 0),
            (1, 0, 0),
        ],
        double_source: (2, 2, 0),
        double_target: (0, 2, 2),
        double_labels: (1, 2),
    },
    Z13Listing {
        i: 1,
        j: 3,
        labels: [
            -2, -1, -2, 1, 1, 2, 1, 1, 1, 1, 1, 1, 1, -2, -1, -1, -1, -1, -1, 2, -1, -1, -1, -1,
            -1, -1, -2,
        ],
        cosets: [
            (0, 0, 0),
            (0, 1, 2),
            (1, 2, 0),
            (2, 2, 1),
            (1, 0, 2),
            (2, 0, 0),
            (0, 2, 0),
            (0, 0, 2),
            (2, 2, 0),
            (0, 2, 2),
            (2, 2, 2),
            (2, 1, 2),
            (2, 1, 1),
            (1, 0, 1),
            (2, 0, 1),
            (1, 1, 2),
            (0, 2, 1),
            (2, 1, 0),
            (2, 0, 2),
            (1, 2, 2),
            (1, 2, 1),
            (1, 1, 1),
            (0, 1, 1),
            (1, 1, 0),
            (0, 0, 1),
            (0, 1, 0),
            (1, 0, 0),
        ],
        double_source: (2, 0, 0),
        double_target: (0, 2, 0),
        double_labels: (1, 2),
    },
    Z13Listing {
        i: 1,
        j: 5,
        labels: [
            -2, 1, 1, 1, -2, 1, 1, 1, 1, 2, 1, -2, 1, 1, 1, 1, -2, 1, 1, 1, 2, 1, 1, 1, 1, 1, -2,
        ],
        cosets: [
            (0, 0, 0),
            (1, 0, 1),
            (1, 2, 0),
            (0, 1, 2),
            (2, 2, 1),
            (0, 1, 0),
            (0, 0, 1),
            (1, 1, 0),
            (0, 1, 1),
            (1, 1, 1),
            (1, 2, 1),
            (1, 2, 2),
            (1, 0, 2),
            (2, 0, 0),
            (0, 2, 0),
            (0, 0, 2),
            (2, 2, 0),
            (0, 2, 2),
            (2, 2, 2),
            (2, 1, 2),
            (2, 1, 1),
            (2, 0, 2),
            (2, 1, 0),
            (0, 2, 1),
            (1, 1, 2),
            (2, 0, 1),
            (1, 0, 0),
        ],
        double_source: (2, 2, 0),
        double_target: (0, 2, 2),
        double_labels: (1, -2),
    },
    Z13Listing {
        i: 1,
        j: 6,
        labels: [
            -2, -2, -1, -1, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, -1, -1, -1, -1, -1, -1, -1,
            -1, -2,
        ],
        cosets: [
            (0, 0, 0),
            (2, 1, 1),
            (2, 0, 1),
            (1, 1, 2),
            (0, 2, 1),
            (2, 1, 0),
            (1, 0, 1),
            (1, 2, 0),
            (0, 1, 2),
            (2, 2, 1),
            (1, 0, 2),
            (2, 0, 0),
            (0, 2, 0),
            (0, 0, 2),
            (2, 2, 0),
            (0, 2, 2),
            (2, 2, 2),
            (2, 1, 2),
            (2, 0, 2),
            (1, 2, 2),
            (1, 2, 1),
            (1, 1, 1),
            (0, 1, 1),
            (1, 1, 0),
            (0, 0, 1),
            (0, 1, 0),
            (1, 0, 0),
        ],
        double_source: (0, 2, 1),
        double_target: (2, 1, 0),
        double_labels: (-1, 2),
    },
    Z13Listing {
        i: 2,
        j: 5,
        labels: [
            -2, 1, 2, 1, 1, 1, 2, 2, -1, -1, -1, -1, -1, -1, -1, -2, 1, 1, 1, 1, 1, 1, -2, -1,
            -1, -1, -2,
        ],
        cosets: [
            (0, 0, 0),
            (1, 0, 1),
            (0, 1, 2),
            (1, 0, 2),
            (0, 2, 0),
            (2, 2, 0),
            (2, 2, 2),
            (1, 1, 2),
            (2, 1, 0),
            (1, 2, 2),
            (1, 1, 1),
            (1, 1, 0),
            (0, 1, 0),
            (2, 0, 1),
            (0, 2, 1),
            (2, 0, 2),
            (2, 1, 1),
            (1, 2, 0),
            (2, 2, 1),
            (2, 0, 0),
            (0, 0, 2),
            (0, 2, 2),
            (2, 1, 2),
            (1, 2, 1),
            (0, 1, 1),
            (0, 0, 1),
            (1, 0, 0),
        ],
        double_source: (1, 1, 2),
        double_target: (2, 1, 0),
        double_labels: (-1, 2),
    },
];
