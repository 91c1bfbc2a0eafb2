//! Permutations of braid strands and the positive permutation braids they index.
//!
//! Strands and positions are 1-based throughout. A permutation stores, for each
//! start position `j`, the position where the string beginning at `j` ends.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{BraidError, Result};
use crate::MAX_STRANDS;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    image: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            image: (1..=n as u8).collect(),
        }
    }

    /// The reversal `j ↦ n + 1 − j`, the permutation of the half twist.
    pub fn reversal(n: usize) -> Self {
        Self {
            image: (1..=n as u8).rev().collect(),
        }
    }

    /// The transposition of positions `i` and `i + 1`.
    pub fn transposition(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.image.swap(i - 1, i);
        p
    }

    pub fn from_image(image: &[usize]) -> Result<Self> {
        let n = image.len();
        if n == 0 || n > MAX_STRANDS {
            return Err(BraidError::UnsupportedStrandCount(n));
        }
        let mut seen = vec![false; n];
        for &v in image {
            if v == 0 || v > n || seen[v - 1] {
                return Err(BraidError::NotAPermutation(format!("{image:?}")));
            }
            seen[v - 1] = true;
        }
        Ok(Self {
            image: image.iter().map(|&v| v as u8).collect(),
        })
    }

    /// Builds a permutation of `{1..n}` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        if n == 0 || n > MAX_STRANDS {
            return Err(BraidError::UnsupportedStrandCount(n));
        }
        let mut image: Vec<usize> = (1..=n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a == 0 || a > n || used[a - 1] {
                    return Err(BraidError::NotAPermutation(format!("{cycles:?}")));
                }
                used[a - 1] = true;
                image[a - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Self::from_image(&image)
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    /// End position of the string starting at `j`.
    #[inline]
    pub fn apply(&self, j: usize) -> usize {
        self.image[j - 1] as usize
    }

    /// The image as a 1-based vector.
    pub fn image(&self) -> Vec<usize> {
        self.image.iter().map(|&v| v as usize).collect()
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.image
    }

    pub(crate) fn from_raw(image: Vec<u8>) -> Self {
        Self { image }
    }

    pub fn is_identity(&self) -> bool {
        self.image
            .iter()
            .enumerate()
            .all(|(j, &v)| v as usize == j + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.len()];
        for (j, &v) in self.image.iter().enumerate() {
            inv[v as usize - 1] = j as u8 + 1;
        }
        Self { image: inv }
    }

    /// `self` followed by `other`: `j ↦ other(self(j))`.
    ///
    /// This is the permutation of the braid product `self · other`.
    pub fn then(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        Self {
            image: self
                .image
                .iter()
                .map(|&v| other.image[v as usize - 1])
                .collect(),
        }
    }

    /// Number of pairs `i < j` with `π(i) > π(j)`; the crossing count of the
    /// corresponding positive permutation braid.
    pub fn inversions(&self) -> usize {
        let im = &self.image;
        let mut count = 0;
        for i in 0..im.len() {
            for j in i + 1..im.len() {
                if im[i] > im[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Disjoint cycles including fixed points, each starting at its smallest
    /// element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut j = start;
            while !seen[j - 1] {
                seen[j - 1] = true;
                cycle.push(j);
                j = self.apply(j);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    pub fn is_full_cycle(&self) -> bool {
        self.cycle_count() == 1
    }

    /// Cycle notation, omitting fixed points. Entries are written without
    /// separators when `n ≤ 9` (`(1423)`), space separated otherwise.
    pub fn to_cycle_string(&self) -> String {
        let sep = if self.len() >= 10 { " " } else { "" };
        let mut out = String::new();
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            let body: Vec<String> = cycle.iter().map(|v| v.to_string()).collect();
            out.push('(');
            out.push_str(&body.join(sep));
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }

    /// Parses cycle notation (`(1423)`, `(1 4 2 3)(5 6)`) or image notation
    /// (`4 3 1 2`). Cycle notation needs `n` unless it can be inferred from the
    /// largest entry.
    pub fn parse(text: &str, n: Option<usize>) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.starts_with('(') {
            parse_cycles(trimmed, n)
        } else {
            let mut image = Vec::new();
            let mut offset = 0;
            for token in trimmed.split_whitespace() {
                let position = text[offset..].find(token).unwrap_or(0) + offset;
                offset = position + token.len();
                let v: usize = token.parse().map_err(|_| BraidError::Parse {
                    position,
                    message: format!("expected a positive integer, found {token:?}"),
                })?;
                image.push(v);
            }
            if let Some(n) = n {
                if n != image.len() {
                    return Err(BraidError::Parse {
                        position: 0,
                        message: format!("image has {} entries but n = {n}", image.len()),
                    });
                }
            }
            Self::from_image(&image)
        }
    }
}

fn parse_cycles(text: &str, n: Option<usize>) -> Result<Permutation> {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut current: Option<Vec<usize>> = None;
    let mut separated = false;
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut k = 0;
    while k < chars.len() {
        let (pos, c) = chars[k];
        match c {
            '(' if current.is_none() => {
                current = Some(Vec::new());
                separated = text[pos + 1..]
                    .split(')')
                    .next()
                    .is_some_and(|b| b.contains(|ch: char| ch.is_whitespace() || ch == ','));
            }
            ')' if current.is_some() => cycles.push(current.take().unwrap()),
            c if c.is_whitespace() || c == ',' => {}
            c if c.is_ascii_digit() && current.is_some() => {
                let cycle = current.as_mut().unwrap();
                if separated {
                    let mut end = k;
                    while end < chars.len() && chars[end].1.is_ascii_digit() {
                        end += 1;
                    }
                    let s: String = chars[k..end].iter().map(|&(_, ch)| ch).collect();
                    cycle.push(s.parse().expect("digits"));
                    k = end;
                    continue;
                }
                cycle.push(c.to_digit(10).unwrap() as usize);
            }
            _ => {
                return Err(BraidError::Parse {
                    position: pos,
                    message: format!("unexpected character {c:?} in cycle notation"),
                })
            }
        }
        k += 1;
    }
    if current.is_some() {
        return Err(BraidError::Parse {
            position: text.len(),
            message: "unterminated cycle".into(),
        });
    }
    let largest = cycles.iter().flatten().copied().max().unwrap_or(1);
    let n = n.unwrap_or(largest);
    if largest > n {
        return Err(BraidError::Parse {
            position: 0,
            message: format!("cycle entry {largest} exceeds n = {n}"),
        });
    }
    Permutation::from_cycles(n, &cycles)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.image)
    }
}

impl FromStr for Permutation {
    type Err = BraidError;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s, None)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = BraidError;

    fn try_from(image: Vec<usize>) -> Result<Self> {
        Self::from_image(&image)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.image()
    }
}

/// A positive permutation braid, stored canonically as its permutation.
///
/// Every pair of strings crosses at most once, so the crossing count is the
/// inversion count of the permutation. These are exactly the left (and right)
/// divisors of the half twist.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SimpleFactor(Permutation);

impl SimpleFactor {
    pub fn new(perm: Permutation) -> Self {
        Self(perm)
    }

    pub fn identity(n: usize) -> Self {
        Self(Permutation::identity(n))
    }

    pub fn generator(n: usize, i: usize) -> Self {
        Self(Permutation::transposition(n, i))
    }

    pub fn perm(&self) -> &Permutation {
        &self.0
    }

    pub fn into_perm(self) -> Permutation {
        self.0
    }

    pub fn strands(&self) -> usize {
        self.0.len()
    }

    pub fn crossings(&self) -> usize {
        self.0.inversions()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    pub fn is_delta(&self) -> bool {
        self.0
            .raw()
            .iter()
            .rev()
            .enumerate()
            .all(|(j, &v)| v as usize == j + 1)
    }

    /// Bitmask of generators `σ_i` (bit `i − 1`) that divide the factor on the
    /// left: the strings starting at `i` and `i + 1` cross.
    pub fn starting_set(&self) -> u64 {
        let im = self.0.raw();
        let mut mask = 0;
        for i in 0..im.len().saturating_sub(1) {
            if im[i] > im[i + 1] {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Bitmask of generators `σ_i` that divide the factor on the right: the
    /// strings ending at `i` and `i + 1` cross.
    pub fn finishing_set(&self) -> u64 {
        self.0
            .inverse()
            .raw()
            .windows(2)
            .enumerate()
            .fold(
                0,
                |mask, (i, w)| {
                    if w[0] > w[1] {
                        mask | (1 << i)
                    } else {
                        mask
                    }
                },
            )
    }

    /// Canonical positive word for this factor.
    pub fn word(&self) -> crate::braid::BraidWord {
        crate::braid::permutation_to_braid(&self.0)
    }
}

impl fmt::Display for SimpleFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}
