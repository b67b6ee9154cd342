use std::fmt;

use crate::arith::Factorization;
use crate::Order;

/// The 26 sporadic simple groups and the Tits group `2F4(2)'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sporadic {
    M11,
    M12,
    M22,
    M23,
    M24,
    J1,
    J2,
    J3,
    J4,
    HS,
    McL,
    Suz,
    Ru,
    He,
    Ly,
    ON,
    Co1,
    Co2,
    Co3,
    Fi22,
    Fi23,
    Fi24,
    HN,
    Th,
    B,
    M,
    Tits,
}

use Sporadic::*;

pub const ALL_SPORADIC: [Sporadic; 27] = [
    M11, M12, M22, M23, M24, J1, J2, J3, J4, HS, McL, Suz, Ru, He, Ly, ON, Co1, Co2, Co3, Fi22,
    Fi23, Fi24, HN, Th, B, M, Tits,
];

impl Sporadic {
    pub fn name(self) -> &'static str {
        match self {
            M11 => "M11",
            M12 => "M12",
            M22 => "M22",
            M23 => "M23",
            M24 => "M24",
            J1 => "J1",
            J2 => "J2",
            J3 => "J3",
            J4 => "J4",
            HS => "HS",
            McL => "McL",
            Suz => "Suz",
            Ru => "Ru",
            He => "He",
            Ly => "Ly",
            ON => "ON",
            Co1 => "Co1",
            Co2 => "Co2",
            Co3 => "Co3",
            Fi22 => "Fi22",
            Fi23 => "Fi23",
            Fi24 => "Fi24'",
            HN => "HN",
            Th => "Th",
            B => "B",
            M => "M",
            Tits => "2F4(2)'",
        }
    }

    /// Case-insensitive lookup; the Tits group answers to `T`, `Tits` and
    /// `2F4(2)'`.
    pub fn from_name(name: &str) -> Option<Self> {
        let upper = name.to_ascii_uppercase();
        match upper.as_str() {
            "T" | "TITS" | "2F4(2)'" => return Some(Tits),
            "FI24" => return Some(Fi24),
            _ => {}
        }
        ALL_SPORADIC
            .into_iter()
            .find(|s| s.name().to_ascii_uppercase() == upper)
    }

    fn prime_powers(self) -> &'static [(u32, u32)] {
        match self {
            M11 => &[(2, 4), (3, 2), (5, 1), (11, 1)],
            M12 => &[(2, 6), (3, 3), (5, 1), (11, 1)],
            M22 => &[(2, 7), (3, 2), (5, 1), (7, 1), (11, 1)],
            M23 => &[(2, 7), (3, 2), (5, 1), (7, 1), (11, 1), (23, 1)],
            M24 => &[(2, 10), (3, 3), (5, 1), (7, 1), (11, 1), (23, 1)],
            J1 => &[(2, 3), (3, 1), (5, 1), (7, 1), (11, 1), (19, 1)],
            J2 => &[(2, 7), (3, 3), (5, 2), (7, 1)],
            J3 => &[(2, 7), (3, 5), (5, 1), (17, 1), (19, 1)],
            J4 => &[
                (2, 21),
                (3, 3),
                (5, 1),
                (7, 1),
                (11, 3),
                (23, 1),
                (29, 1),
                (31, 1),
                (37, 1),
                (43, 1),
            ],
            HS => &[(2, 9), (3, 2), (5, 3), (7, 1), (11, 1)],
            McL => &[(2, 7), (3, 6), (5, 3), (7, 1), (11, 1)],
            Suz => &[(2, 13), (3, 7), (5, 2), (7, 1), (11, 1), (13, 1)],
            Ru => &[(2, 14), (3, 3), (5, 3), (7, 1), (13, 1), (29, 1)],
            He => &[(2, 10), (3, 3), (5, 2), (7, 3), (17, 1)],
            Ly => &[
                (2, 8),
                (3, 7),
                (5, 6),
                (7, 1),
                (11, 1),
                (31, 1),
                (37, 1),
                (67, 1),
            ],
            ON => &[(2, 9), (3, 4), (5, 1), (7, 3), (11, 1), (19, 1), (31, 1)],
            Co1 => &[(2, 21), (3, 9), (5, 4), (7, 2), (11, 1), (13, 1), (23, 1)],
            Co2 => &[(2, 18), (3, 6), (5, 3), (7, 1), (11, 1), (23, 1)],
            Co3 => &[(2, 10), (3, 7), (5, 3), (7, 1), (11, 1), (23, 1)],
            Fi22 => &[(2, 17), (3, 9), (5, 2), (7, 1), (11, 1), (13, 1)],
            Fi23 => &[
                (2, 18),
                (3, 13),
                (5, 2),
                (7, 1),
                (11, 1),
                (13, 1),
                (17, 1),
                (23, 1),
            ],
            Fi24 => &[
                (2, 21),
                (3, 16),
                (5, 2),
                (7, 3),
                (11, 1),
                (13, 1),
                (17, 1),
                (23, 1),
                (29, 1),
            ],
            HN => &[(2, 14), (3, 6), (5, 6), (7, 1), (11, 1), (19, 1)],
            Th => &[(2, 15), (3, 10), (5, 3), (7, 2), (13, 1), (19, 1), (31, 1)],
            B => &[
                (2, 41),
                (3, 13),
                (5, 6),
                (7, 2),
                (11, 1),
                (13, 1),
                (17, 1),
                (19, 1),
                (23, 1),
                (31, 1),
                (47, 1),
            ],
            M => &[
                (2, 46),
                (3, 20),
                (5, 9),
                (7, 6),
                (11, 2),
                (13, 3),
                (17, 1),
                (19, 1),
                (23, 1),
                (29, 1),
                (31, 1),
                (41, 1),
                (47, 1),
                (59, 1),
                (71, 1),
            ],
            Tits => &[(2, 11), (3, 3), (5, 2), (13, 1)],
        }
    }

    /// Factored order from the embedded table; every base is re-checked for
    /// primality on construction.
    pub fn order(self) -> Order {
        Factorization::from_prime_powers(self.prime_powers().iter().map(|&(p, e)| (p.into(), e)))
            .expect("sporadic table holds only primes")
    }
}

impl fmt::Display for Sporadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
