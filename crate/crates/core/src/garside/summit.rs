//! Cycling, decycling and super summit sets.
//!
//! Two braids are conjugate iff their super summit sets (the conjugates with
//! maximal `inf` and minimal `sup`) coincide. The set is reached from any
//! conjugate by iterated cycling and decycling, and it is connected under
//! conjugation by simple elements, so a breadth-first closure enumerates it.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use super::{nontrivial_simples, normal_form, tau, NormalForm, Product};
use crate::braid::BraidWord;
use crate::error::{BraidError, Result};
use crate::perm::SimpleFactor;
use crate::Limits;

/// One cycling step and its conjugator `c` (`c^{-1} x c` is the result).
fn cycle_once(nf: &NormalForm) -> (NormalForm, SimpleFactor) {
    let first = &nf.factors[0];
    let c = if nf.inf % 2 == 0 {
        first.clone()
    } else {
        tau(first)
    };
    let mut p = Product::new(nf.strands);
    p.push_delta(nf.inf);
    for f in &nf.factors[1..] {
        p.push_simple(f.perm().raw());
    }
    p.push_simple(c.perm().raw());
    (p.finish(), c)
}

/// One decycling step; the conjugator is the inverse of the returned factor.
fn decycle_once(nf: &NormalForm) -> (NormalForm, SimpleFactor) {
    let last = nf.factors.last().unwrap().clone();
    let mut p = Product::new(nf.strands);
    p.push_delta(nf.inf);
    let moved = if nf.inf % 2 == 0 {
        last.clone()
    } else {
        tau(&last)
    };
    p.push_simple(moved.perm().raw());
    for f in &nf.factors[..nf.factors.len() - 1] {
        p.push_simple(f.perm().raw());
    }
    (p.finish(), last)
}

/// Conjugates `Δ^p A_1 ⋯ A_k` to `Δ^p A_2 ⋯ A_k τ^{-p}(A_1)`.
pub fn cycling(nf: &NormalForm) -> NormalForm {
    if nf.factors.is_empty() {
        return nf.clone();
    }
    cycle_once(nf).0
}

/// Conjugates `Δ^p A_1 ⋯ A_k` to `A_k Δ^p A_1 ⋯ A_{k−1}`.
pub fn decycling(nf: &NormalForm) -> NormalForm {
    if nf.factors.is_empty() {
        return nf.clone();
    }
    decycle_once(nf).0
}

/// Iterates cycling until `inf` stops growing, then decycling until `sup` stops
/// shrinking. A deterministic orbit that revisits an element without improving
/// can never improve, so revisits are the stopping rule.
///
/// Returns the summit element and `c` with `c^{-1} x c` equal to it.
pub(crate) fn reach_summit(x: &NormalForm) -> (NormalForm, NormalForm) {
    let mut current = x.clone();
    let mut conjugator = NormalForm::identity(x.strands);

    let mut seen = HashSet::from([current.clone()]);
    while !current.factors.is_empty() {
        let (next, c) = cycle_once(&current);
        conjugator = conjugator.mul(&NormalForm::from_simple(&c));
        if next.inf > current.inf {
            seen.clear();
        }
        current = next;
        if !seen.insert(current.clone()) {
            break;
        }
    }

    let mut seen = HashSet::from([current.clone()]);
    while !current.factors.is_empty() {
        let (next, c) = decycle_once(&current);
        conjugator = conjugator.mul(&NormalForm::from_inverse_simple(&c));
        if next.sup() < current.sup() {
            seen.clear();
        }
        current = next;
        if !seen.insert(current.clone()) {
            break;
        }
    }
    (current, conjugator)
}

/// Audit record tying a summit representative back to the input braid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SummitCertificate {
    pub representative: NormalForm,
    /// `conjugator^{-1} · input · conjugator = representative`.
    pub conjugator: BraidWord,
    pub summit_inf: i64,
    pub summit_sup: i64,
}

/// The super summit set of a braid, with a conjugator for every member.
#[derive(Clone, Debug)]
pub struct SummitSet {
    input: NormalForm,
    strands: usize,
    inf: i64,
    sup: i64,
    members: Vec<NormalForm>,
    index: HashMap<NormalForm, usize>,
    // (parent member, simple conjugator) in breadth-first order
    parents: Vec<Option<(usize, SimpleFactor)>>,
    to_representative: NormalForm,
    certificate: SummitCertificate,
}

impl SummitSet {
    /// Builds the super summit set of the element `x`.
    pub fn of_normal_form(x: &NormalForm, limits: &Limits) -> Result<Self> {
        let (representative, to_representative) = reach_summit(x);
        let strands = x.strands;
        let (inf, sup) = (representative.inf, representative.sup());
        let simples = nontrivial_simples(strands);

        let mut members = vec![representative.clone()];
        let mut index = HashMap::from([(representative.clone(), 0)]);
        let mut parents = vec![None];
        let mut frontier = vec![0usize];
        while !frontier.is_empty() {
            let found: Vec<Vec<(usize, NormalForm)>> = frontier
                .par_iter()
                .map(|&m| {
                    let z = &members[m];
                    simples
                        .iter()
                        .enumerate()
                        .filter_map(|(s, simple)| {
                            let y = z.conjugate_by_simple(simple);
                            (y.inf == inf && y.sup() == sup).then_some((s, y))
                        })
                        .collect()
                })
                .collect();
            let mut next = Vec::new();
            for (&m, candidates) in frontier.iter().zip(found) {
                for (s, y) in candidates {
                    if index.contains_key(&y) {
                        continue;
                    }
                    if members.len() >= limits.summit_cap {
                        return Err(BraidError::SummitCapExceeded {
                            cap: limits.summit_cap,
                        });
                    }
                    index.insert(y.clone(), members.len());
                    next.push(members.len());
                    members.push(y);
                    parents.push(Some((m, simples[s].clone())));
                }
            }
            frontier = next;
        }

        let certificate = SummitCertificate {
            representative,
            conjugator: to_representative.to_word(),
            summit_inf: inf,
            summit_sup: sup,
        };
        Ok(Self {
            input: x.clone(),
            strands,
            inf,
            sup,
            members,
            index,
            parents,
            to_representative,
            certificate,
        })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn inf(&self) -> i64 {
        self.inf
    }

    pub fn sup(&self) -> i64 {
        self.sup
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, nf: &NormalForm) -> bool {
        self.index.contains_key(nf)
    }

    pub fn certificate(&self) -> &SummitCertificate {
        &self.certificate
    }

    /// Members in breadth-first discovery order.
    pub fn members(&self) -> &[NormalForm] {
        &self.members
    }

    /// Members in sorted order, the stable export order.
    pub fn sorted_members(&self) -> Vec<NormalForm> {
        let mut out = self.members.clone();
        out.sort();
        out
    }

    /// A conjugator `u` with `u^{-1} · input · u = member`.
    pub fn conjugator_to(&self, member: &NormalForm) -> Option<NormalForm> {
        let mut at = *self.index.get(member)?;
        let mut path = Vec::new();
        while let Some((parent, s)) = &self.parents[at] {
            path.push(s);
            at = *parent;
        }
        let mut p = Product::new(self.strands);
        p.push_nf(&self.to_representative);
        for s in path.into_iter().rev() {
            p.push_simple(s.perm().raw());
        }
        Some(p.finish())
    }

    /// Decides whether `other` is conjugate to the braid this set was built
    /// from, returning a verified witness when it is.
    pub fn decide(&self, other: &NormalForm) -> Result<Conjugacy> {
        if other.strands != self.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let (summit, to_summit) = reach_summit(other);
        if summit.inf != self.inf || summit.sup() != self.sup || !self.contains(&summit) {
            return Ok(Conjugacy {
                conjugate: false,
                witness: None,
            });
        }
        let witness = self
            .conjugator_to(&summit)
            .expect("member")
            .mul(&to_summit.inverse());
        assert_eq!(
            &self.input.conjugate_by(&witness),
            other,
            "conjugacy witness failed verification"
        );
        Ok(Conjugacy {
            conjugate: true,
            witness: Some(witness.to_word()),
        })
    }
}

/// Outcome of a conjugacy test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Conjugacy {
    pub conjugate: bool,
    /// When conjugate: `u` with `u^{-1} a u = b`, checked in the group.
    pub witness: Option<BraidWord>,
}

/// The super summit set of `w`.
pub fn summit_set(w: &BraidWord, limits: &Limits) -> Result<SummitSet> {
    SummitSet::of_normal_form(&normal_form(w), limits)
}

/// Complete conjugacy test in `B_n`.
pub fn are_conjugate(a: &BraidWord, b: &BraidWord, limits: &Limits) -> Result<Conjugacy> {
    if a.strands() != b.strands() {
        return Err(BraidError::StrandMismatch {
            left: a.strands(),
            right: b.strands(),
        });
    }
    summit_set(a, limits)?.decide(&normal_form(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::{delta, equal_in_group};

    fn word(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn delta_power_is_fixed() {
        let d = NormalForm::from_simple(&delta(4));
        assert_eq!(cycling(&d), d);
        assert_eq!(decycling(&d), d);
        let set = summit_set(&delta(4).word(), &Limits::default()).unwrap();
        assert_eq!(set.len(), 1);
    }

    #[test]
    fn cycling_is_monotone() {
        let nf = normal_form(&word(4, &[1, -2, 3, 2, 2, -1, 3, 1]));
        let mut cur = nf.clone();
        for _ in 0..10 {
            let next = cycling(&cur);
            assert!(next.inf() >= cur.inf());
            assert!(next.sup() <= cur.sup());
            let back = decycling(&cur);
            assert!(back.sup() <= cur.sup());
            assert!(back.inf() >= cur.inf());
            cur = next;
        }
    }

    #[test]
    fn cycling_conjugators() {
        let nf = normal_form(&word(4, &[1, -2, 3, 2, 2, -1, 3, 1]));
        let (next, c) = cycle_once(&nf);
        assert_eq!(nf.conjugate_by(&NormalForm::from_simple(&c)), next);
        let (next, c) = decycle_once(&nf);
        assert_eq!(nf.conjugate_by(&NormalForm::from_inverse_simple(&c)), next);
        let (summit, to) = reach_summit(&nf);
        assert_eq!(nf.conjugate_by(&to), summit);
    }

    #[test]
    fn three_strand_stabilizes_at_inf_one() {
        // σ1σ2σ1σ2 = Δσ2 is already rigid; no conjugate has inf 2
        let set = summit_set(&word(3, &[1, 2, 1, 2]), &Limits::default()).unwrap();
        assert_eq!((set.inf(), set.sup()), (1, 2));
        assert_eq!(set.len(), 2);
    }

    #[test]
    fn staircases_conjugate() {
        let limits = Limits::default();
        let r = are_conjugate(&word(3, &[2, 1]), &word(3, &[1, 2]), &limits).unwrap();
        assert!(r.conjugate);
        let u = r.witness.unwrap();
        assert!(equal_in_group(
            &word(3, &[2, 1]).conjugate_by(&u).unwrap(),
            &word(3, &[1, 2])
        )
        .unwrap());
        let r = are_conjugate(&word(3, &[1]), &word(3, &[1, 1]), &limits).unwrap();
        assert!(!r.conjugate && r.witness.is_none());
        assert!(are_conjugate(&word(3, &[1]), &word(4, &[1]), &limits).is_err());
    }

    #[test]
    fn summit_cap_is_enforced() {
        let limits = Limits {
            summit_cap: 2,
            ..Limits::default()
        };
        assert_eq!(
            summit_set(&word(5, &[1, 2, 3, 4]), &limits).unwrap_err(),
            BraidError::SummitCapExceeded { cap: 2 }
        );
    }
}
