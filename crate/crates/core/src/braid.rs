//! Braid words in the Artin generators and the dictionary between positive
//! permutation braids and permutations.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{BraidError, Result};
use crate::perm::Permutation;
use crate::{Limits, MAX_STRANDS};

/// A word in the Artin generators of `B_n`.
///
/// Letter `k > 0` is `σ_k`, letter `k < 0` is `σ_{|k|}^{-1}`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 || strands > MAX_STRANDS {
            return Err(BraidError::UnsupportedStrandCount(strands));
        }
        for &letter in &letters {
            if letter == 0 || letter.unsigned_abs() as usize >= strands {
                return Err(BraidError::LetterOutOfRange { letter, strands });
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        Self {
            strands,
            letters: Vec::new(),
        }
    }

    /// `σ_1 σ_2 ⋯ σ_{n−1}`.
    pub fn staircase(strands: usize) -> Self {
        Self {
            strands,
            letters: (1..strands as i32).collect(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&l| l > 0)
    }

    pub fn inverse(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self {
            strands: self.strands,
            letters,
        })
    }

    /// `u^{-1} · self · u`.
    pub fn conjugate_by(&self, u: &Self) -> Result<Self> {
        u.inverse().concat(self)?.concat(u)
    }

    /// Parses the text format: an optional `n=<int>` header followed by
    /// whitespace-separated nonzero integers. Without a header the strand count
    /// comes from `n`, or is inferred as one more than the largest generator.
    pub fn parse(text: &str, n: Option<usize>) -> Result<Self> {
        let mut strands = None;
        let mut letters = Vec::new();
        let mut offset = 0;
        for (index, token) in text.split_whitespace().enumerate() {
            let position = text[offset..].find(token).unwrap_or(0) + offset;
            offset = position + token.len();
            if index == 0 {
                if let Some(header) = token.strip_prefix("n=") {
                    let value: usize = header.parse().map_err(|_| BraidError::Parse {
                        position,
                        message: format!("invalid strand header {token:?}"),
                    })?;
                    strands = Some(value);
                    continue;
                }
            }
            let letter: i32 = token.parse().map_err(|_| BraidError::Parse {
                position,
                message: format!("expected a nonzero integer, found {token:?}"),
            })?;
            if letter == 0 {
                return Err(BraidError::Parse {
                    position,
                    message: "letter 0 is not a generator".into(),
                });
            }
            letters.push(letter);
        }
        if let (Some(header), Some(given)) = (strands, n) {
            if header != given {
                return Err(BraidError::Parse {
                    position: 0,
                    message: format!("header n={header} disagrees with n = {given}"),
                });
            }
        }
        let strands = match strands.or(n) {
            Some(s) => s,
            None if letters.is_empty() => {
                return Err(BraidError::Parse {
                    position: 0,
                    message: "cannot infer the strand count of an empty word".into(),
                })
            }
            None => {
                letters
                    .iter()
                    .map(|l| l.unsigned_abs() as usize)
                    .max()
                    .unwrap()
                    + 1
            }
        };
        Self::new(strands, letters)
    }

    /// Generator notation, e.g. `σ1σ3σ2^-1`; `1` for the empty word.
    pub fn to_sigma_string(&self) -> String {
        if self.letters.is_empty() {
            return "1".into();
        }
        self.letters
            .iter()
            .map(|&l| {
                if l > 0 {
                    format!("σ{l}")
                } else {
                    format!("σ{}^-1", -l)
                }
            })
            .collect()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidWord({self})")
    }
}

impl FromStr for BraidWord {
    type Err = BraidError;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s, None)
    }
}

impl TryFrom<String> for BraidWord {
    type Error = BraidError;

    fn try_from(s: String) -> Result<Self> {
        Self::parse(&s, None)
    }
}

impl From<BraidWord> for String {
    fn from(w: BraidWord) -> Self {
        w.to_string()
    }
}

/// The permutation `φ(w)`: where each string ends. Inverse letters give the
/// same transposition as positive ones.
pub fn word_to_permutation(w: &BraidWord) -> Permutation {
    let n = w.strands;
    // position -> strand currently there
    let mut at: Vec<u8> = (1..=n as u8).collect();
    for &l in &w.letters {
        let i = l.unsigned_abs() as usize;
        at.swap(i - 1, i);
    }
    let mut image = vec![0u8; n];
    for (pos, &strand) in at.iter().enumerate() {
        image[strand as usize - 1] = pos as u8 + 1;
    }
    Permutation::from_raw(image)
}

/// Canonical positive word of the permutation braid for `p`.
///
/// Left-greedy: repeatedly peel off `σ_i` for the smallest `i` whose strings
/// still have to cross. The result has `inversions(p)` letters.
pub fn permutation_to_braid(p: &Permutation) -> BraidWord {
    let mut rest: Vec<u8> = p.raw().to_vec();
    let mut letters = Vec::with_capacity(p.inversions());
    let mut i = 0;
    while i + 1 < rest.len() {
        if rest[i] > rest[i + 1] {
            rest.swap(i, i + 1);
            letters.push(i as i32 + 1);
            i = i.saturating_sub(1);
        } else {
            i += 1;
        }
    }
    BraidWord {
        strands: p.len(),
        letters,
    }
}

/// True iff `w` is positive and no two strings cross twice.
pub fn is_permutation_braid(w: &BraidWord) -> bool {
    w.is_positive() && w.len() == word_to_permutation(w).inversions()
}

pub fn writhe(w: &BraidWord) -> i64 {
    w.letters.iter().map(|&l| l.signum() as i64).sum()
}

/// Number of components of the closure, i.e. cycles of the permutation.
pub fn closure_component_count(w: &BraidWord) -> usize {
    word_to_permutation(w).cycle_count()
}

pub fn braid_power(w: &BraidWord, m: usize) -> BraidWord {
    BraidWord {
        strands: w.strands,
        letters: w.letters.repeat(m),
    }
}

/// Removes every string not starting at a position in `keep`, together with all
/// crossings involving it. Kept strings are renumbered in order.
pub fn delete_strands(w: &BraidWord, keep: &[usize]) -> Result<BraidWord> {
    let n = w.strands;
    if keep.is_empty() || keep.iter().any(|&k| k == 0 || k > n) {
        return Err(BraidError::InvalidStrandSelection);
    }
    let mut kept_at = vec![false; n];
    for &k in keep {
        kept_at[k - 1] = true;
    }
    let strands = kept_at.iter().filter(|&&b| b).count();
    let mut letters = Vec::new();
    for &l in &w.letters {
        let i = l.unsigned_abs() as usize;
        if kept_at[i - 1] && kept_at[i] {
            let rank = kept_at[..i - 1].iter().filter(|&&b| b).count() as i32 + 1;
            letters.push(rank * l.signum());
        }
        kept_at.swap(i - 1, i);
    }
    Ok(BraidWord { strands, letters })
}

/// One row of the census of positive permutation braids closing to knots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NCycleBraid {
    pub permutation: Permutation,
    pub word: BraidWord,
    pub crossings: usize,
}

/// All `(n − 1)!` positive permutation braids whose permutation is an
/// `n`-cycle, sorted by crossing number and then by permutation image.
pub fn enumerate_ncycle_braids(n: usize, limits: &Limits) -> Result<Vec<NCycleBraid>> {
    if n < 2 || n > limits.max_n {
        return Err(BraidError::OutOfRange {
            n,
            min: 2,
            max: limits.max_n,
        });
    }
    let mut out = Vec::new();
    let mut order: Vec<usize> = (2..=n).collect();
    each_arrangement(&mut order, 0, &mut |tail| {
        // the cycle (1 tail[0] tail[1] ...)
        let mut image = vec![0usize; n];
        let mut prev = 1;
        for &next in tail {
            image[prev - 1] = next;
            prev = next;
        }
        image[prev - 1] = 1;
        let permutation = Permutation::from_image(&image).expect("n-cycle");
        let word = permutation_to_braid(&permutation);
        out.push(NCycleBraid {
            crossings: word.len(),
            permutation,
            word,
        });
    });
    out.sort_by(|a, b| (a.crossings, &a.permutation).cmp(&(b.crossings, &b.permutation)));
    Ok(out)
}

fn each_arrangement(items: &mut [usize], k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for j in k..items.len() {
        items.swap(k, j);
        each_arrangement(items, k + 1, visit);
        items.swap(k, j);
    }
}
