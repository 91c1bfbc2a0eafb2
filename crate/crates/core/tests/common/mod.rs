//! Brute-force conjugacy search shared by the integration tests.
//!
//! Explores conjugates `u⁻¹ x u` with `u` ranging over words of bounded
//! length, one generator at a time, without any summit-set machinery.

use std::collections::{HashMap, VecDeque};

use braidtk::{normal_form, BraidWord, NormalForm};

fn generator(n: usize, letter: i32) -> NormalForm {
    normal_form(&BraidWord::new(n, vec![letter]).unwrap())
}

/// Conjugates of `x` reachable with conjugators of at most `radius` letters,
/// with one such conjugator each.
pub fn conjugates_within(x: &NormalForm, radius: usize) -> HashMap<NormalForm, Vec<i32>> {
    let n = x.strands();
    let letters: Vec<i32> = (1..n as i32).flat_map(|i| [i, -i]).collect();
    let gens: Vec<(i32, NormalForm)> = letters.iter().map(|&l| (l, generator(n, l))).collect();
    let mut seen = HashMap::from([(x.clone(), Vec::new())]);
    let mut queue = VecDeque::from([(x.clone(), 0)]);
    while let Some((y, depth)) = queue.pop_front() {
        if depth == radius {
            continue;
        }
        for (l, g) in &gens {
            let z = y.conjugate_by(g);
            if !seen.contains_key(&z) {
                let mut path = seen[&y].clone();
                path.push(*l);
                seen.insert(z.clone(), path);
                queue.push_back((z, depth + 1));
            }
        }
    }
    seen
}
