//! Conjugacy census of positive permutation braids whose closure is a knot.
//!
//! Braids are bucketed by crossing number and Burau characteristic polynomial
//! (both conjugacy invariants), then merged only when the summit-set decision
//! produces a verified conjugator. Equal invariants are never taken as proof of
//! conjugacy.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::braid::{
    braid_power, delete_strands, enumerate_ncycle_braids, word_to_permutation, BraidWord,
    NCycleBraid,
};
use crate::error::{BraidError, Result};
use crate::garside::{complement, normal_form, tau, SummitSet};
use crate::invariants::{burau_char_poly, identify_knot, KnotId, KnotType};
use crate::perm::{Permutation, SimpleFactor};
use crate::poly::LaurentPoly2;
use crate::union_find::DisjointSets;
use crate::Limits;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusEntry {
    pub n: usize,
    pub permutation: Permutation,
    pub cycle: String,
    pub word: BraidWord,
    pub crossings: usize,
    pub class_id: usize,
    pub knot: KnotId,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugacyClass {
    /// Classes are numbered from 1 in order of their first census entry.
    pub class_id: usize,
    pub size: usize,
    /// Indices into [`Census::entries`], ascending.
    pub members: Vec<usize>,
    pub representative: BraidWord,
    pub knot: KnotType,
    pub char_poly: LaurentPoly2,
}

/// The classes of one crossing number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub n: usize,
    pub crossings: usize,
    pub total: usize,
    pub classes: Vec<ConjugacyClass>,
}

impl ClassReport {
    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.size).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    pub n: usize,
    pub entries: Vec<CensusEntry>,
    pub reports: Vec<ClassReport>,
}

impl Census {
    pub fn class_count(&self) -> usize {
        self.reports.iter().map(|r| r.classes.len()).sum()
    }

    pub fn report(&self, crossings: usize) -> Option<&ClassReport> {
        self.reports.iter().find(|r| r.crossings == crossings)
    }

    /// One JSON object per line, one line per census entry.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&serde_json::to_string(e).expect("census entry serializes"));
            out.push('\n');
        }
        out
    }
}

fn check_range(n: usize, min: usize, limits: &Limits) -> Result<()> {
    if n < min || n > limits.max_n {
        return Err(BraidError::OutOfRange {
            n,
            min,
            max: limits.max_n,
        });
    }
    Ok(())
}

fn knot_ids(braids: &[NCycleBraid]) -> Vec<KnotId> {
    braids
        .par_iter()
        .map(|b| identify_knot(&b.word).expect("n-cycle braids close to knots"))
        .collect()
}

/// Partitions the `n`-cycle positive permutation braids into conjugacy classes.
pub fn classify(n: usize, limits: &Limits) -> Result<Census> {
    check_range(n, 2, limits)?;
    let braids = enumerate_ncycle_braids(n, limits)?;
    let knots = knot_ids(&braids);
    let polys: Vec<LaurentPoly2> = braids
        .par_iter()
        .map(|b| burau_char_poly(&b.word))
        .collect();

    // invariant buckets: (crossings, char poly) -> entry indices
    let mut buckets: BTreeMap<(usize, String), Vec<usize>> = BTreeMap::new();
    for (i, b) in braids.iter().enumerate() {
        buckets
            .entry((b.crossings, polys[i].to_string()))
            .or_default()
            .push(i);
    }
    let merges: Vec<Vec<(usize, usize)>> = buckets
        .into_values()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|members| merge_bucket(&braids, members, limits))
        .collect::<Result<_>>()?;

    let mut sets = DisjointSets::new(braids.len());
    for (a, b) in merges.into_iter().flatten() {
        sets.union(a, b);
    }
    let roots: Vec<usize> = (0..braids.len()).map(|i| sets.find(i)).collect();
    let mut class_of_root = BTreeMap::new();
    for &r in &roots {
        let next = class_of_root.len() + 1;
        class_of_root.entry(r).or_insert(next);
    }

    let entries: Vec<CensusEntry> = braids
        .iter()
        .zip(knots)
        .enumerate()
        .map(|(i, (b, knot))| CensusEntry {
            n,
            cycle: b.permutation.to_cycle_string(),
            permutation: b.permutation.clone(),
            word: b.word.clone(),
            crossings: b.crossings,
            class_id: class_of_root[&roots[i]],
            knot,
        })
        .collect();

    let mut by_crossings: BTreeMap<usize, BTreeMap<usize, Vec<usize>>> = BTreeMap::new();
    for (i, e) in entries.iter().enumerate() {
        by_crossings
            .entry(e.crossings)
            .or_default()
            .entry(e.class_id)
            .or_default()
            .push(i);
    }
    let reports = by_crossings
        .into_iter()
        .map(|(crossings, classes)| {
            let classes: Vec<ConjugacyClass> = classes
                .into_iter()
                .map(|(class_id, members)| {
                    let first = &entries[members[0]];
                    ConjugacyClass {
                        class_id,
                        size: members.len(),
                        representative: first.word.clone(),
                        knot: first.knot.knot.clone(),
                        char_poly: polys[members[0]].clone(),
                        members,
                    }
                })
                .collect();
            ClassReport {
                n,
                crossings,
                total: classes.iter().map(|c| c.size).sum(),
                classes,
            }
        })
        .collect();
    Ok(Census {
        n,
        entries,
        reports,
    })
}

/// Conjugacy merges inside one invariant bucket, each backed by a verified
/// witness from the summit-set decision.
fn merge_bucket(
    braids: &[NCycleBraid],
    members: &[usize],
    limits: &Limits,
) -> Result<Vec<(usize, usize)>> {
    let mut assigned = vec![false; members.len()];
    let mut merges = Vec::new();
    for k in 0..members.len() {
        if assigned[k] {
            continue;
        }
        assigned[k] = true;
        let seed = members[k];
        let summit = SummitSet::of_normal_form(&normal_form(&braids[seed].word), limits)?;
        for j in k + 1..members.len() {
            if assigned[j] {
                continue;
            }
            let other = normal_form(&braids[members[j]].word);
            if summit.decide(&other)?.conjugate {
                assigned[j] = true;
                merges.push((seed, members[j]));
            }
        }
    }
    Ok(merges)
}

/// Number of `n`-cycle permutation braids whose closure is the unknot.
pub fn unknot_count(n: usize, limits: &Limits) -> Result<usize> {
    let braids = enumerate_ncycle_braids(n, limits)?;
    Ok(knot_ids(&braids)
        .iter()
        .filter(|k| k.knot == KnotType::Unknot)
        .count())
}

/// Result of checking one classification statement over a whole census.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremCheck {
    pub theorem: String,
    pub n: usize,
    pub reference: Option<BraidWord>,
    pub checked: usize,
    pub passed: bool,
    pub log: Vec<String>,
}

fn check_all_conjugate_to(
    theorem: &str,
    n: usize,
    reference: BraidWord,
    braids: &[&NCycleBraid],
    limits: &Limits,
) -> Result<TheoremCheck> {
    let summit = SummitSet::of_normal_form(&normal_form(&reference), limits)?;
    let outcomes: Vec<_> = braids
        .par_iter()
        .map(|b| summit.decide(&normal_form(&b.word)))
        .collect::<Result<_>>()?;
    let mut log = Vec::new();
    let mut passed = true;
    for (b, outcome) in braids.iter().zip(outcomes) {
        match outcome.witness {
            Some(u) if outcome.conjugate => log.push(format!(
                "{} {} ~ reference, conjugator {}",
                b.permutation,
                b.word.to_sigma_string(),
                u.to_sigma_string()
            )),
            _ => {
                passed = false;
                log.push(format!(
                    "{} {} NOT conjugate to reference",
                    b.permutation,
                    b.word.to_sigma_string()
                ));
            }
        }
    }
    Ok(TheoremCheck {
        theorem: theorem.into(),
        n,
        reference: Some(reference),
        checked: braids.len(),
        passed,
        log,
    })
}

/// Every braid closing to the unknot is conjugate to `σ_1 σ_2 ⋯ σ_{n−1}`.
pub fn verify_theorem_1(n: usize, limits: &Limits) -> Result<TheoremCheck> {
    check_range(n, 2, limits)?;
    let braids = enumerate_ncycle_braids(n, limits)?;
    let knots = knot_ids(&braids);
    let unknots: Vec<&NCycleBraid> = braids
        .iter()
        .zip(&knots)
        .filter(|(_, k)| k.knot == KnotType::Unknot)
        .map(|(b, _)| b)
        .collect();
    check_all_conjugate_to("thm1", n, BraidWord::staircase(n), &unknots, limits)
}

/// `σ_1^3 σ_2 ⋯ σ_{n−1}`.
pub fn trefoil_reference(n: usize) -> BraidWord {
    let mut letters = vec![1, 1];
    letters.extend(1..n as i32);
    BraidWord::new(n, letters).expect("n >= 2")
}

/// Every braid closing to the trefoil is conjugate to `σ_1^3 σ_2 ⋯ σ_{n−1}`.
pub fn verify_theorem_2(n: usize, limits: &Limits) -> Result<TheoremCheck> {
    check_range(n, 2, limits)?;
    let braids = enumerate_ncycle_braids(n, limits)?;
    let knots = knot_ids(&braids);
    let trefoils: Vec<&NCycleBraid> = braids
        .iter()
        .zip(&knots)
        .filter(|(_, k)| k.knot == KnotType::Torus(2, 3))
        .map(|(b, _)| b)
        .collect();
    check_all_conjugate_to("thm2", n, trefoil_reference(n), &trefoils, limits)
}

/// Crossings of the longest `n`-cycle permutation braid:
/// `n(n−1)/2 − ⌊(n−1)/2⌋`.
pub fn max_knot_crossings(n: usize) -> usize {
    n * (n - 1) / 2 - (n - 1) / 2
}

/// `Δ_n σ_1^{-1} ⋯ σ_k^{-1}` with `k = ⌊(n−1)/2⌋`, written as a positive
/// permutation braid.
pub fn maximal_reference(n: usize) -> BraidWord {
    let k = (n - 1) / 2;
    // σ_k ⋯ σ_1 as a simple element; Δ (σ_k ⋯ σ_1)^{-1} is its left complement
    let tail = BraidWord::new(n, (1..=k as i32).rev().collect()).expect("letters in range");
    let tail = SimpleFactor::new(word_to_permutation(&tail));
    complement(&tau(&tail)).word()
}

/// Every maximal-crossing braid closing to a knot is conjugate to
/// `Δ_n σ_1^{-1} ⋯ σ_k^{-1}`.
pub fn verify_theorem_4(n: usize, limits: &Limits) -> Result<TheoremCheck> {
    check_range(n, 2, limits)?;
    let braids = enumerate_ncycle_braids(n, limits)?;
    let top = max_knot_crossings(n);
    let maximal: Vec<&NCycleBraid> = braids.iter().filter(|b| b.crossings == top).collect();
    check_all_conjugate_to("thm4", n, maximal_reference(n), &maximal, limits)
}

/// For `n ≤ 5`: classes correspond exactly to crossing numbers.
pub fn verify_theorem_3(n: usize, limits: &Limits) -> Result<TheoremCheck> {
    check_range(n, 2, limits)?;
    let census = classify(n, limits)?;
    let log: Vec<String> = census
        .reports
        .iter()
        .map(|r| format!("{} crossings: class sizes {:?}", r.crossings, r.sizes()))
        .collect();
    Ok(TheoremCheck {
        theorem: "thm3".into(),
        n,
        reference: None,
        checked: census.entries.len(),
        passed: census.reports.iter().all(|r| r.classes.len() == 1),
        log,
    })
}

/// `β(i) = σ_1 ⋯ σ_{i−1} σ_i^3 σ_{i+1} ⋯ σ_{n−1}`, a positive braid closing to
/// the trefoil that is not a permutation braid.
pub fn beta_family(n: usize, i: usize) -> Result<BraidWord> {
    if n < 2 || i == 0 || i >= n {
        return Err(BraidError::OutOfRange {
            n: i,
            min: 1,
            max: n.saturating_sub(1),
        });
    }
    let mut letters = Vec::with_capacity(n + 1);
    for k in 1..n as i32 {
        letters.push(k);
        if k as usize == i {
            letters.extend([k, k]);
        }
    }
    BraidWord::new(n, letters)
}

/// `β(i)` and `β(k)` are conjugate iff `k ∈ {i, n − i}`; every non-conjugate
/// pair is also separated by the Burau characteristic polynomial.
pub fn verify_theorem_6(n: usize, limits: &Limits) -> Result<TheoremCheck> {
    if n < 2 {
        return Err(BraidError::OutOfRange {
            n,
            min: 2,
            max: crate::MAX_STRANDS,
        });
    }
    let words: Vec<BraidWord> = (1..n).map(|i| beta_family(n, i)).collect::<Result<_>>()?;
    let summits: Vec<SummitSet> = words
        .par_iter()
        .map(|w| SummitSet::of_normal_form(&normal_form(w), limits))
        .collect::<Result<_>>()?;
    let polys: Vec<LaurentPoly2> = words.iter().map(burau_char_poly).collect();
    let mut log = Vec::new();
    let mut passed = true;
    let mut checked = 0;
    for i in 1..n {
        for k in i + 1..n {
            checked += 1;
            let conjugate = summits[i - 1]
                .decide(&normal_form(&words[k - 1]))?
                .conjugate;
            let expected = k == n - i;
            let polys_differ = polys[i - 1] != polys[k - 1];
            let ok = conjugate == expected && (conjugate || polys_differ);
            passed &= ok;
            log.push(format!(
                "beta({i}) vs beta({k}): conjugate={conjugate} expected={expected} char polys differ={polys_differ}{}",
                if ok { "" } else { "  MISMATCH" }
            ));
        }
    }
    Ok(TheoremCheck {
        theorem: "thm6".into(),
        n,
        reference: None,
        checked,
        passed,
        log,
    })
}

/// Knot types of the components of the closure of `w`, one per cycle of its
/// permutation (ordered by smallest start position).
pub fn component_knots(w: &BraidWord) -> Result<Vec<KnotId>> {
    word_to_permutation(w)
        .cycles()
        .iter()
        .map(|cycle| identify_knot(&delete_strands(w, cycle)?))
        .collect()
}

/// The 6-strand pair with the same closure that are not conjugate.
pub fn nonconjugate_pair() -> (BraidWord, BraidWord) {
    (
        BraidWord::new(6, vec![1, 3, 5, 2, 4, 1, 3, 2, 1]).unwrap(),
        BraidWord::new(6, vec![2, 4, 3, 5, 2, 4, 1, 3, 2]).unwrap(),
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonConjugateDemo {
    pub beta: BraidWord,
    pub gamma: BraidWord,
    pub beta_permutation: String,
    pub gamma_permutation: String,
    /// Permutations of the words read right to left (the inverses of the above).
    pub beta_permutation_rtl: String,
    pub gamma_permutation_rtl: String,
    pub beta_knot: KnotType,
    pub gamma_knot: KnotType,
    pub conjugate: bool,
    pub beta_square_components: Vec<KnotType>,
    pub gamma_square_components: Vec<KnotType>,
    pub beta_char_poly: LaurentPoly2,
    pub gamma_char_poly: LaurentPoly2,
}

impl NonConjugateDemo {
    pub fn char_polys_differ(&self) -> bool {
        self.beta_char_poly != self.gamma_char_poly
    }

    /// The full argument holds: same closure, different squared components,
    /// and the decision procedure agrees.
    pub fn holds(&self) -> bool {
        self.beta_knot == self.gamma_knot
            && self.beta_knot == KnotType::Torus(2, 5)
            && !self.conjugate
            && self.beta_square_components != self.gamma_square_components
    }
}

pub fn nonconjugate_pair_demo(limits: &Limits) -> Result<NonConjugateDemo> {
    let (beta, gamma) = nonconjugate_pair();
    let squares = |w: &BraidWord| -> Result<Vec<KnotType>> {
        Ok(component_knots(&braid_power(w, 2))?
            .into_iter()
            .map(|k| k.knot)
            .collect())
    };
    let conjugate = crate::garside::are_conjugate(&beta, &gamma, limits)?.conjugate;
    Ok(NonConjugateDemo {
        beta_permutation: word_to_permutation(&beta).to_cycle_string(),
        gamma_permutation: word_to_permutation(&gamma).to_cycle_string(),
        beta_permutation_rtl: word_to_permutation(&beta).inverse().to_cycle_string(),
        gamma_permutation_rtl: word_to_permutation(&gamma).inverse().to_cycle_string(),
        beta_knot: identify_knot(&beta)?.knot,
        gamma_knot: identify_knot(&gamma)?.knot,
        conjugate,
        beta_square_components: squares(&beta)?,
        gamma_square_components: squares(&gamma)?,
        beta_char_poly: burau_char_poly(&beta),
        gamma_char_poly: burau_char_poly(&gamma),
        beta,
        gamma,
    })
}

/// Table with columns Permutation | Braid word | Number of crossings, rows
/// ordered by crossings and then cycle notation.
pub fn markdown_table(braids: &[NCycleBraid]) -> String {
    let mut rows: Vec<&NCycleBraid> = braids.iter().collect();
    rows.sort_by_key(|b| (b.crossings, b.permutation.cycles()));
    let mut out = String::from("| Permutation | Braid word | Number of crossings |\n");
    out.push_str("|---|---|---|\n");
    for b in rows {
        let _ = writeln!(
            out,
            "| {} | {} | {} |",
            b.permutation,
            b.word.to_sigma_string(),
            b.crossings
        );
    }
    out
}
