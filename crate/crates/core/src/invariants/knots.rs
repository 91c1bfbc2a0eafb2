//! Identification of small knots by Alexander polynomial and genus.

use std::fmt;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use super::{alexander_of_closure, genus_of_positive_closure};
use crate::braid::{closure_component_count, BraidWord};
use crate::error::{BraidError, Result};
use crate::poly::LaurentPoly1;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KnotType {
    Unknot,
    /// The `(p, q)` torus knot; the trefoil is `Torus(2, 3)`.
    Torus(u32, u32),
    ConnectedSum(Vec<KnotType>),
    Unidentified,
}

impl fmt::Display for KnotType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotType::Unknot => f.write_str("Unknot"),
            KnotType::Torus(p, q) => write!(f, "Torus({p},{q})"),
            KnotType::ConnectedSum(parts) => {
                f.write_str("ConnectedSum[")?;
                for (k, part) in parts.iter().enumerate() {
                    if k > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{part}")?;
                }
                f.write_str("]")
            }
            KnotType::Unidentified => f.write_str("Unidentified"),
        }
    }
}

impl Serialize for KnotType {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Identified knot type of a closure together with the invariants used.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KnotId {
    pub knot: KnotType,
    /// Symmetric Alexander polynomial with `Δ(1) = 1`.
    pub alexander: LaurentPoly1,
    /// From the crossing count for positive non-split braids, otherwise from the
    /// table entry when identified.
    pub genus: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotTableEntry {
    pub knot: KnotType,
    pub alexander: LaurentPoly1,
    pub genus: u32,
}

struct PrimeEntry {
    p: u32,
    q: u32,
    genus: u32,
    // symmetric Alexander polynomial from t^low upward
    low: i64,
    coeffs: &'static [i64],
}

const PRIME_KNOTS: &[PrimeEntry] = &[
    PrimeEntry {
        p: 2,
        q: 3,
        genus: 1,
        low: -1,
        coeffs: &[1, -1, 1],
    },
    PrimeEntry {
        p: 2,
        q: 5,
        genus: 2,
        low: -2,
        coeffs: &[1, -1, 1, -1, 1],
    },
    PrimeEntry {
        p: 2,
        q: 7,
        genus: 3,
        low: -3,
        coeffs: &[1, -1, 1, -1, 1, -1, 1],
    },
    PrimeEntry {
        p: 3,
        q: 4,
        genus: 3,
        low: -3,
        coeffs: &[1, -1, 0, 1, 0, -1, 1],
    },
    PrimeEntry {
        p: 3,
        q: 5,
        genus: 4,
        low: -4,
        coeffs: &[1, -1, 0, 1, -1, 1, 0, -1, 1],
    },
];

/// Most summands in a connected sum the table recognizes.
const MAX_SUMMANDS: usize = 3;

/// The recognized knots: the unknot, the prime torus knots above, and their
/// connected sums with up to three summands.
pub fn knot_table() -> &'static [KnotTableEntry] {
    static TABLE: OnceLock<Vec<KnotTableEntry>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let primes: Vec<KnotTableEntry> = PRIME_KNOTS
            .iter()
            .map(|e| KnotTableEntry {
                knot: KnotType::Torus(e.p, e.q),
                alexander: LaurentPoly1::from_i64s(e.low, e.coeffs),
                genus: e.genus,
            })
            .collect();
        let mut table = vec![KnotTableEntry {
            knot: KnotType::Unknot,
            alexander: LaurentPoly1::one(),
            genus: 0,
        }];
        table.extend(primes.iter().cloned());
        // multisets of summand indices, non-decreasing
        let mut stack: Vec<Vec<usize>> = (0..primes.len()).map(|i| vec![i]).collect();
        while let Some(sum) = stack.pop() {
            if sum.len() >= 2 {
                table.push(KnotTableEntry {
                    knot: KnotType::ConnectedSum(
                        sum.iter().map(|&i| primes[i].knot.clone()).collect(),
                    ),
                    alexander: sum
                        .iter()
                        .fold(LaurentPoly1::one(), |acc, &i| &acc * &primes[i].alexander),
                    genus: sum.iter().map(|&i| primes[i].genus).sum(),
                });
            }
            if sum.len() < MAX_SUMMANDS {
                for j in *sum.last().unwrap()..primes.len() {
                    let mut longer = sum.clone();
                    longer.push(j);
                    stack.push(longer);
                }
            }
        }
        table[1 + primes.len()..].sort_by(|a, b| a.knot.cmp(&b.knot));
        table
    })
}

/// Identifies the knot type of the closure of `w` from its Alexander
/// polynomial, and its genus when `w` is positive and non-split.
pub fn identify_knot(w: &BraidWord) -> Result<KnotId> {
    let components = closure_component_count(w);
    if components != 1 {
        return Err(BraidError::NotAKnot { components });
    }
    let alexander = alexander_of_closure(w)?;
    let genus = genus_of_positive_closure(w).ok();
    let mut matches = knot_table()
        .iter()
        .filter(|e| e.alexander == alexander && genus.is_none_or(|g| g == e.genus));
    let (knot, genus) = match (matches.next(), matches.next()) {
        (Some(entry), None) => (entry.knot.clone(), Some(entry.genus)),
        _ => (KnotType::Unidentified, genus),
    };
    Ok(KnotId {
        knot,
        alexander,
        genus,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn table_is_unambiguous() {
        let table = knot_table();
        // unknot, 5 primes, 15 two-term and 35 three-term sums
        assert_eq!(table.len(), 1 + 5 + 15 + 35);
        for (i, a) in table.iter().enumerate() {
            for b in &table[i + 1..] {
                assert!(
                    a.alexander != b.alexander || a.genus != b.genus,
                    "{} and {} collide",
                    a.knot,
                    b.knot
                );
            }
        }
    }

    #[test]
    fn torus_genus_formula() {
        for entry in knot_table() {
            match &entry.knot {
                KnotType::Torus(p, q) => assert_eq!(entry.genus, (p - 1) * (q - 1) / 2),
                KnotType::ConnectedSum(parts) => {
                    let sum: u32 = parts
                        .iter()
                        .map(|k| match k {
                            KnotType::Torus(p, q) => (p - 1) * (q - 1) / 2,
                            _ => unreachable!(),
                        })
                        .sum();
                    assert_eq!(entry.genus, sum);
                }
                _ => {}
            }
            assert_eq!(entry.alexander.high_exp(), entry.genus as i64);
            assert_eq!(entry.alexander.reflect(), entry.alexander);
        }
    }

    #[test]
    fn identifies_small_closures() {
        let k = identify_knot(&word(5, &[2, 1, 3, 2, 1, 4])).unwrap();
        assert_eq!(k.knot, KnotType::Torus(2, 3));
        assert_eq!(k.genus, Some(1));
        let k = identify_knot(&word(6, &[2, 1, 4, 3, 5, 4, 3, 2, 1])).unwrap();
        assert_eq!(
            k.knot,
            KnotType::ConnectedSum(vec![KnotType::Torus(2, 3), KnotType::Torus(2, 3)])
        );
        assert_eq!(k.knot.to_string(), "ConnectedSum[Torus(2,3), Torus(2,3)]");
        let k = identify_knot(&word(6, &[3, 4, 3, 2, 5, 4, 3, 2, 1])).unwrap();
        assert_eq!(k.knot, KnotType::Torus(2, 5));
        assert_eq!(
            identify_knot(&BraidWord::staircase(5)).unwrap().knot,
            KnotType::Unknot
        );
        assert_eq!(
            identify_knot(&word(2, &[1, 1, 1])).unwrap().knot,
            KnotType::Torus(2, 3)
        );
        assert!(identify_knot(&word(3, &[1, 2, 1])).is_err());
    }

    #[test]
    fn non_positive_braids_use_polynomial_only() {
        // figure eight knot: Δ = -t + 3 - t^-1, not in the table
        let k = identify_knot(&word(3, &[1, -2, 1, -2])).unwrap();
        assert_eq!(k.knot, KnotType::Unidentified);
        assert_eq!(k.alexander, LaurentPoly1::from_i64s(-1, &[-1, 3, -1]));
        assert_eq!(k.genus, None);
        // trefoil with a cancelling pair
        let k = identify_knot(&word(2, &[1, 1, -1, 1, 1])).unwrap();
        assert_eq!(k.knot, KnotType::Torus(2, 3));
        assert_eq!(k.genus, Some(1));
    }
}
