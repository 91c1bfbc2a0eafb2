//! Garside left-canonical normal form in `B_n`.
//!
//! Every braid is written uniquely as `Δ^inf · A_1 ⋯ A_k` where the `A_j` are
//! positive permutation braids other than `1` and `Δ`, and each adjacent pair is
//! left-weighted: every generator that starts `A_{j+1}` already finishes `A_j`.

mod summit;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{BraidError, Result};
use crate::perm::{Permutation, SimpleFactor};

pub use summit::{
    are_conjugate, cycling, decycling, summit_set, Conjugacy, SummitCertificate, SummitSet,
};

/// The half twist `Δ_n`.
pub fn delta(n: usize) -> SimpleFactor {
    SimpleFactor::new(Permutation::reversal(n))
}

/// Conjugation by the half twist, `Δ f Δ^{-1}`; sends `σ_i` to `σ_{n−i}`.
pub fn tau(f: &SimpleFactor) -> SimpleFactor {
    SimpleFactor::new(Permutation::from_raw(tau_raw(f.perm().raw())))
}

/// The unique `g` with `f · g = Δ`.
pub fn complement(f: &SimpleFactor) -> SimpleFactor {
    let n = f.strands() as u8;
    let inv = f.perm().inverse();
    SimpleFactor::new(Permutation::from_raw(
        inv.raw().iter().map(|&v| n + 1 - v).collect(),
    ))
}

/// The unique `g` with `g · f = Δ`.
pub fn left_complement(f: &SimpleFactor) -> SimpleFactor {
    SimpleFactor::new(Permutation::from_raw(left_complement_raw(f.perm().raw())))
}

fn tau_raw(p: &[u8]) -> Vec<u8> {
    let n = p.len() as u8;
    p.iter().rev().map(|&v| n + 1 - v).collect()
}

fn left_complement_raw(p: &[u8]) -> Vec<u8> {
    // g(j) = p^{-1}(n + 1 - j)
    let n = p.len();
    let mut inv = vec![0u8; n];
    for (j, &v) in p.iter().enumerate() {
        inv[v as usize - 1] = j as u8 + 1;
    }
    inv.reverse();
    inv
}

fn starting_mask(p: &[u8]) -> u64 {
    let mut mask = 0;
    for i in 0..p.len().saturating_sub(1) {
        if p[i] > p[i + 1] {
            mask |= 1 << i;
        }
    }
    mask
}

fn finishing_mask(p: &[u8]) -> u64 {
    // strings ending at i, i+1 cross iff the one ending at i started further right
    let mut start_of = [0u8; crate::MAX_STRANDS];
    for (j, &v) in p.iter().enumerate() {
        start_of[v as usize - 1] = j as u8;
    }
    let mut mask = 0;
    for i in 0..p.len().saturating_sub(1) {
        if start_of[i] > start_of[i + 1] {
            mask |= 1 << i;
        }
    }
    mask
}

fn is_identity_raw(p: &[u8]) -> bool {
    p.iter().enumerate().all(|(j, &v)| v as usize == j + 1)
}

fn is_delta_raw(p: &[u8]) -> bool {
    let n = p.len();
    p.iter().enumerate().all(|(j, &v)| v as usize == n - j)
}

/// Moves generators from the front of `b` to the back of `a` until the pair is
/// left-weighted. Returns whether anything moved.
fn left_weight(a: &mut [u8], b: &mut [u8]) -> bool {
    let mut moved = false;
    loop {
        let movable = starting_mask(b) & !finishing_mask(a);
        if movable == 0 {
            return moved;
        }
        let i = movable.trailing_zeros() as u8;
        // a <- a·σ_{i+1}: swap the end positions i+1 and i+2
        for v in a.iter_mut() {
            if *v == i + 1 {
                *v = i + 2;
            } else if *v == i + 2 {
                *v = i + 1;
            }
        }
        // b <- σ_{i+1}^{-1}·b: swap the start positions
        b.swap(i as usize, i as usize + 1);
        moved = true;
    }
}

/// Running product `Δ^inf · f_1 ⋯ f_k` of simple factors, not yet normalized.
#[derive(Clone, Debug)]
pub(crate) struct Product {
    strands: usize,
    inf: i64,
    factors: Vec<Vec<u8>>,
}

impl Product {
    pub(crate) fn new(strands: usize) -> Self {
        Self {
            strands,
            inf: 0,
            factors: Vec::new(),
        }
    }

    /// Multiplies by `Δ^m` on the right, moving it to the front.
    pub(crate) fn push_delta(&mut self, m: i64) {
        if m % 2 != 0 {
            for f in &mut self.factors {
                *f = tau_raw(f);
            }
        }
        self.inf += m;
    }

    pub(crate) fn push_simple(&mut self, f: &[u8]) {
        self.factors.push(f.to_vec());
    }

    /// Multiplies by `f^{-1} = Δ^{-1} · (Δ f^{-1})`.
    pub(crate) fn push_inverse_simple(&mut self, f: &[u8]) {
        self.push_delta(-1);
        self.factors.push(left_complement_raw(f));
    }

    /// Multiplies by a single generator, merging it into the last factor when
    /// the result is still a permutation braid.
    fn push_generator(&mut self, i: usize) {
        if let Some(last) = self.factors.last_mut() {
            if finishing_mask(last) & (1 << (i - 1)) == 0 {
                for v in last.iter_mut() {
                    if *v as usize == i {
                        *v = i as u8 + 1;
                    } else if *v as usize == i + 1 {
                        *v = i as u8;
                    }
                }
                return;
            }
        }
        self.factors
            .push(Permutation::transposition(self.strands, i).raw().to_vec());
    }

    pub(crate) fn push_nf(&mut self, nf: &NormalForm) {
        self.push_delta(nf.inf);
        for f in &nf.factors {
            self.push_simple(f.perm().raw());
        }
    }

    pub(crate) fn finish(mut self) -> NormalForm {
        let factors = &mut self.factors;
        loop {
            let mut changed = false;
            for k in (1..factors.len()).rev() {
                let (head, tail) = factors.split_at_mut(k);
                if left_weight(&mut head[k - 1], &mut tail[0]) {
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let leading = factors.iter().take_while(|f| is_delta_raw(f)).count();
        let mut inf = self.inf + leading as i64;
        let mut kept: Vec<SimpleFactor> = factors
            .drain(leading..)
            .filter(|f| !is_identity_raw(f))
            .map(|f| SimpleFactor::new(Permutation::from_raw(f)))
            .collect();
        // B_1 is trivial: its only simple element is both 1 and Δ.
        if self.strands == 1 {
            inf = 0;
            kept.clear();
        }
        NormalForm {
            strands: self.strands,
            inf,
            factors: kept,
        }
    }
}

/// Left-canonical form `Δ^inf · A_1 ⋯ A_k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm {
    strands: usize,
    inf: i64,
    factors: Vec<SimpleFactor>,
}

impl NormalForm {
    pub fn identity(strands: usize) -> Self {
        Self {
            strands,
            inf: 0,
            factors: Vec::new(),
        }
    }

    pub fn from_simple(f: &SimpleFactor) -> Self {
        let mut p = Product::new(f.strands());
        p.push_simple(f.perm().raw());
        p.finish()
    }

    pub fn from_inverse_simple(f: &SimpleFactor) -> Self {
        let mut p = Product::new(f.strands());
        p.push_inverse_simple(f.perm().raw());
        p.finish()
    }

    /// Builds a normal form from arbitrary parts `Δ^inf · f_1 ⋯ f_k`.
    pub fn from_parts(strands: usize, inf: i64, factors: &[SimpleFactor]) -> Result<Self> {
        let mut p = Product::new(strands);
        p.push_delta(inf);
        for f in factors {
            if f.strands() != strands {
                return Err(BraidError::StrandMismatch {
                    left: strands,
                    right: f.strands(),
                });
            }
            p.push_simple(f.perm().raw());
        }
        Ok(p.finish())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn inf(&self) -> i64 {
        self.inf
    }

    pub fn sup(&self) -> i64 {
        self.inf + self.factors.len() as i64
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[SimpleFactor] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.strands, other.strands);
        let mut p = Product::new(self.strands);
        p.push_nf(self);
        p.push_nf(other);
        p.finish()
    }

    pub fn inverse(&self) -> Self {
        let mut p = Product::new(self.strands);
        for f in self.factors.iter().rev() {
            p.push_inverse_simple(f.perm().raw());
        }
        p.push_delta(-self.inf);
        p.finish()
    }

    /// `c^{-1} · self · c`.
    pub fn conjugate_by(&self, c: &Self) -> Self {
        let mut p = Product::new(self.strands);
        p.push_nf(&c.inverse());
        p.push_nf(self);
        p.push_nf(c);
        p.finish()
    }

    /// `s^{-1} · self · s` for a simple `s`.
    pub fn conjugate_by_simple(&self, s: &SimpleFactor) -> Self {
        let mut p = Product::new(self.strands);
        p.push_inverse_simple(s.perm().raw());
        p.push_nf(self);
        p.push_simple(s.perm().raw());
        p.finish()
    }

    /// A braid word for this element: `Δ^inf` followed by the factor words.
    pub fn to_word(&self) -> BraidWord {
        let delta_word = delta(self.strands).word();
        let mut letters = Vec::new();
        let block = if self.inf >= 0 {
            delta_word
        } else {
            delta_word.inverse()
        };
        for _ in 0..self.inf.unsigned_abs() {
            letters.extend_from_slice(block.letters());
        }
        for f in &self.factors {
            letters.extend_from_slice(f.word().letters());
        }
        BraidWord::new(self.strands, letters).expect("letters in range")
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ^{}", self.inf)?;
        for factor in &self.factors {
            write!(f, " · {}", factor.word().to_sigma_string())?;
        }
        Ok(())
    }
}

impl fmt::Debug for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NormalForm(n={}, {self})", self.strands)
    }
}

#[derive(Serialize, Deserialize)]
struct NormalFormJson {
    n: usize,
    inf: i64,
    factors: Vec<Vec<usize>>,
}

impl Serialize for NormalForm {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        NormalFormJson {
            n: self.strands,
            inf: self.inf,
            factors: self.factors.iter().map(|f| f.perm().image()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for NormalForm {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = NormalFormJson::deserialize(deserializer)?;
        let factors = raw
            .factors
            .iter()
            .map(|img| Permutation::from_image(img).map(SimpleFactor::new))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        let nf = NormalForm::from_parts(raw.n, raw.inf, &factors).map_err(D::Error::custom)?;
        if nf.factors != factors || nf.inf != raw.inf {
            return Err(D::Error::custom("factors are not in left-canonical form"));
        }
        Ok(nf)
    }
}

/// Left-canonical form of a braid word. Inverse letters are rewritten as
/// `σ_i^{-1} = Δ^{-1} · (Δ σ_i^{-1})`.
pub fn normal_form(w: &BraidWord) -> NormalForm {
    let n = w.strands();
    let mut p = Product::new(n);
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize;
        if l > 0 {
            p.push_generator(i);
        } else {
            p.push_inverse_simple(Permutation::transposition(n, i).raw());
        }
    }
    p.finish()
}

/// Solves the word problem by comparing normal forms.
pub fn equal_in_group(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.strands() != b.strands() {
        return Err(BraidError::StrandMismatch {
            left: a.strands(),
            right: b.strands(),
        });
    }
    Ok(normal_form(a) == normal_form(b))
}

/// All simple elements of `B_n` other than the identity, ordered by crossing
/// number and then by permutation image.
pub(crate) fn nontrivial_simples(n: usize) -> std::sync::Arc<Vec<SimpleFactor>> {
    use std::collections::HashMap;
    use std::sync::{Arc, Mutex, OnceLock};
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<SimpleFactor>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(list) = cache.lock().unwrap().get(&n) {
        return list.clone();
    }
    let mut all = Vec::new();
    let mut image: Vec<usize> = (1..=n).collect();
    permutations(&mut image, 0, &mut |img| {
        let p = Permutation::from_image(img).expect("permutation");
        if !p.is_identity() {
            all.push((p.inversions(), p));
        }
    });
    all.sort();
    let list = Arc::new(all.into_iter().map(|(_, p)| SimpleFactor::new(p)).collect());
    cache.lock().unwrap().insert(n, Arc::clone(&list));
    list
}

fn permutations(items: &mut [usize], k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for j in k..items.len() {
        items.swap(k, j);
        permutations(items, k + 1, visit);
        items.swap(k, j);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{is_permutation_braid, word_to_permutation};

    fn word(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    fn simple(n: usize, letters: &[i32]) -> SimpleFactor {
        SimpleFactor::new(word_to_permutation(&word(n, letters)))
    }

    #[test]
    fn half_twist() {
        assert_eq!(delta(2).word().letters(), &[1]);
        assert_eq!(delta(3).word().letters(), &[1, 2, 1]);
        assert_eq!(delta(6).crossings(), 15);
        assert!(is_permutation_braid(&delta(6).word()));
    }

    #[test]
    fn tau_flips_generators() {
        assert_eq!(
            tau(&SimpleFactor::generator(6, 1)),
            SimpleFactor::generator(6, 5)
        );
        assert_eq!(tau(&delta(5)), delta(5));
        let f = simple(5, &[1, 2, 4]);
        assert_eq!(tau(&tau(&f)), f);
    }

    #[test]
    fn complements() {
        for n in 2..6 {
            assert!(complement(&delta(n)).is_identity());
            assert_eq!(complement(&SimpleFactor::identity(n)), delta(n));
        }
        let c = complement(&SimpleFactor::generator(3, 1));
        assert_eq!(c, simple(3, &[2, 1]));
        let f = simple(5, &[2, 1, 3]);
        let g = complement(&f);
        assert_eq!(f.perm().then(g.perm()), Permutation::reversal(5));
        assert_eq!(f.crossings() + g.crossings(), 10);
        let l = left_complement(&f);
        assert_eq!(l.perm().then(f.perm()), Permutation::reversal(5));
        assert_eq!(complement(&tau(&f)), l);
    }

    #[test]
    fn small_normal_forms() {
        let nf = normal_form(&word(3, &[1, 2, 1]));
        assert_eq!((nf.inf(), nf.canonical_length()), (1, 0));
        let nf = normal_form(&word(2, &[1, 1]));
        assert_eq!((nf.inf(), nf.canonical_length()), (2, 0));
        let nf = normal_form(&word(3, &[1, 2, 1, 2]));
        assert_eq!(nf.inf(), 1);
        assert_eq!(nf.factors(), &[SimpleFactor::generator(3, 2)]);
        let nf = normal_form(&word(3, &[-1]));
        assert_eq!(nf.inf(), -1);
        assert_eq!(nf.factors(), &[simple(3, &[1, 2])]);
        assert!(normal_form(&word(4, &[2, -2, 3, -3])).is_identity());
    }

    #[test]
    fn word_problem() {
        assert!(equal_in_group(&word(4, &[1, 2, 3, 1, 2]), &word(4, &[2, 1, 3, 2, 3])).unwrap());
        assert!(equal_in_group(&word(3, &[1, 2, 1]), &word(3, &[2, 1, 2])).unwrap());
        assert!(!equal_in_group(&word(3, &[1]), &word(3, &[2])).unwrap());
        assert!(equal_in_group(&word(3, &[1]), &word(4, &[1])).is_err());
    }

    #[test]
    fn left_weighted_output() {
        let nf = normal_form(&word(5, &[1, 3, 2, 4, 4, 3, 1, 2, -3, 2, 2, 1, 4]));
        for pair in nf.factors().windows(2) {
            assert_eq!(pair[1].starting_set() & !pair[0].finishing_set(), 0);
        }
        for f in nf.factors() {
            assert!(!f.is_identity() && !f.is_delta());
        }
        assert_eq!(normal_form(&nf.to_word()), nf);
    }

    #[test]
    fn inverse_and_conjugation() {
        let a = normal_form(&word(4, &[1, -2, 3, 3, 1, -2]));
        assert!(a.mul(&a.inverse()).is_identity());
        let c = normal_form(&word(4, &[2, 1, -3]));
        let conj = a.conjugate_by(&c);
        let expect = normal_form(&a.to_word().conjugate_by(&c.to_word()).unwrap());
        assert_eq!(conj, expect);
        let s = simple(4, &[1, 2]);
        assert_eq!(
            a.conjugate_by_simple(&s),
            a.conjugate_by(&NormalForm::from_simple(&s))
        );
    }

    #[test]
    fn json_shape() {
        let nf = normal_form(&word(3, &[1, 2, 1, 2]));
        let json = serde_json::to_string(&nf).unwrap();
        assert_eq!(json, r#"{"n":3,"inf":1,"factors":[[1,3,2]]}"#);
        let back: NormalForm = serde_json::from_str(&json).unwrap();
        assert_eq!(back, nf);
        assert!(
            serde_json::from_str::<NormalForm>(r#"{"n":3,"inf":0,"factors":[[3,2,1]]}"#).is_err()
        );
    }

    #[test]
    fn simple_list_order() {
        let list = nontrivial_simples(3);
        assert_eq!(list.len(), 5);
        assert_eq!(list[0], SimpleFactor::generator(3, 2));
        assert_eq!(list[1], SimpleFactor::generator(3, 1));
        assert_eq!(list[4], delta(3));
    }
}
