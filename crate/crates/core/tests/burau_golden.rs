//! Burau matrices and polynomials against independent oracles.

use braidtk::invariants::{burau_determinant, reduced_burau, PolyMatrix};
use braidtk::{
    alexander_of_closure, burau_char_poly, classify::nonconjugate_pair, genus_of_positive_closure,
    BraidWord, LaurentPoly1, LaurentPoly2,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const BETA_POLY: &str = "t^9*x^5 + t^7*x^4 + t^5*x^3 + t^4*x^2 + t^2*x + 1";
// from a symbolic computation of det(I - xB) with the same generator matrices
const GAMMA_POLY: &str =
    "t^9*x^5 + t^7*x^4 - t^4*x^3 + 2*t^5*x^3 + 2*t^4*x^2 - t^5*x^2 + t^2*x + 1";

#[test]
fn beta_and_gamma_polynomials() {
    let (beta, gamma) = nonconjugate_pair();
    let pb = burau_char_poly(&beta);
    let pg = burau_char_poly(&gamma);
    assert_eq!(pb.to_string(), BETA_POLY);
    assert_eq!(pg.to_string(), GAMMA_POLY);
    assert_ne!(pb, pg);
    // individual coefficients
    for (c, t, x) in [
        (1, 9, 5),
        (1, 7, 4),
        (1, 2, 1),
        (1, 0, 0),
        (2, 5, 3),
        (-1, 4, 3),
        (2, 4, 2),
    ] {
        assert_eq!(pg.coeff(t, x), BigInt::from(c), "t^{t} x^{x}");
    }
    let mut expected = LaurentPoly2::zero();
    for (t, x) in [(9, 5), (7, 4), (5, 3), (4, 2), (2, 1), (0, 0)] {
        expected = &expected + &LaurentPoly2::monomial(1, t, x);
    }
    assert_eq!(pb, expected);
}

fn eval(p: &LaurentPoly1, t: &BigRational) -> BigRational {
    p.terms().fold(BigRational::zero(), |acc, (e, c)| {
        acc + BigRational::from_integer(c.clone()) * t.pow(e as i32)
    })
}

fn eval_matrix(m: &PolyMatrix, t: &BigRational) -> Vec<Vec<BigRational>> {
    (0..m.dim())
        .map(|r| (0..m.dim()).map(|c| eval(m.get(r, c), t)).collect())
        .collect()
}

// cofactor expansion along successive rows
fn leibniz(m: &[Vec<BigRational>]) -> BigRational {
    fn go(m: &[Vec<BigRational>], row: usize, used: &mut [bool]) -> BigRational {
        if row == m.len() {
            return BigRational::one();
        }
        let mut total = BigRational::zero();
        let mut position = 0;
        for c in 0..m.len() {
            if used[c] {
                continue;
            }
            if !m[row][c].is_zero() {
                used[c] = true;
                let term = &m[row][c] * go(m, row + 1, used);
                used[c] = false;
                if position % 2 == 0 {
                    total += term;
                } else {
                    total -= term;
                }
            }
            position += 1;
        }
        total
    }
    go(m, 0, &mut vec![false; m.len()])
}

fn identity(d: usize) -> Vec<Vec<BigRational>> {
    (0..d)
        .map(|r| {
            (0..d)
                .map(|c| {
                    if r == c {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

// plain matrix of a generator at a numeric t, built from the column images
fn generator_at(n: usize, letter: i32, t: &BigRational) -> Vec<Vec<BigRational>> {
    let d = n - 1;
    let i = letter.unsigned_abs() as usize - 1;
    let mut m = identity(d);
    if letter > 0 {
        if i >= 1 {
            m[i][i - 1] = t.clone();
        }
        m[i][i] = -t.clone();
        if i + 1 < d {
            m[i][i + 1] = BigRational::one();
        }
    } else {
        let inv = t.recip();
        if i >= 1 {
            m[i][i - 1] = BigRational::one();
        }
        m[i][i] = -inv.clone();
        if i + 1 < d {
            m[i][i + 1] = inv;
        }
    }
    m
}

fn mat_mul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let d = a.len();
    (0..d)
        .map(|r| {
            (0..d)
                .map(|c| (0..d).fold(BigRational::zero(), |acc, k| acc + &a[r][k] * &b[k][c]))
                .collect()
        })
        .collect()
}

fn random_word(rng: &mut ChaCha8Rng, n: usize, len: std::ops::Range<usize>) -> BraidWord {
    let len = rng.gen_range(len);
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::new(n, letters).unwrap()
}

#[test]
fn matrices_agree_with_numeric_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let n = rng.gen_range(2..6);
        let w = random_word(&mut rng, n, 0..12);
        for t in [2i64, -3, 5] {
            let t = BigRational::from_integer(t.into());
            let mut numeric = identity(n - 1);
            for &l in w.letters() {
                numeric = mat_mul(&numeric, &generator_at(n, l, &t));
            }
            assert_eq!(eval_matrix(&reduced_burau(&w), &t), numeric, "{w}");
            assert_eq!(eval(&burau_determinant(&w), &t), leibniz(&numeric), "{w}");
        }
    }
}

#[test]
fn char_poly_matches_leibniz_at_sample_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..25 {
        let n = rng.gen_range(2..6);
        let w = random_word(&mut rng, n, 1..10);
        let b = reduced_burau(&w);
        let coeffs = b.char_poly_coefficients();
        for t in [2i64, 3] {
            let tv = BigRational::from_integer(t.into());
            let m = eval_matrix(&b, &tv);
            for x in [-2i64, 1, 4] {
                let xv = BigRational::from_integer(x.into());
                // det(xI - M) by Leibniz
                let shifted: Vec<Vec<BigRational>> = m
                    .iter()
                    .enumerate()
                    .map(|(r, row)| {
                        row.iter()
                            .enumerate()
                            .map(|(c, v)| if r == c { &xv - v } else { -v.clone() })
                            .collect()
                    })
                    .collect();
                let d = coeffs.len() - 1;
                let value = coeffs
                    .iter()
                    .enumerate()
                    .fold(BigRational::zero(), |acc, (k, c)| {
                        acc + eval(c, &tv) * xv.pow((d - k) as i32)
                    });
                assert_eq!(value, leibniz(&shifted), "{w} at t={t}, x={x}");
            }
        }
    }
}

fn torus_braid(p: usize, q: usize) -> BraidWord {
    let mut letters = Vec::new();
    for _ in 0..q {
        letters.extend(1..p as i32);
    }
    BraidWord::new(p, letters).unwrap()
}

// (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)), centred
fn torus_alexander(p: i64, q: i64) -> LaurentPoly1 {
    let pm = |k: i64| &LaurentPoly1::monomial(1, k) - &LaurentPoly1::one();
    let num = &pm(p * q) * &pm(1);
    let den = &pm(p) * &pm(q);
    let quotient = num.div_exact(&den).unwrap();
    let half = (quotient.high_exp() + quotient.low_exp()) / 2;
    quotient.shift(-half)
}

#[test]
fn torus_knots_match_closed_form() {
    for (p, q) in [
        (2, 3),
        (2, 5),
        (2, 7),
        (2, 9),
        (3, 4),
        (3, 5),
        (3, 7),
        (4, 5),
        (5, 6),
    ] {
        let w = torus_braid(p, q);
        assert_eq!(
            alexander_of_closure(&w).unwrap(),
            torus_alexander(p as i64, q as i64),
            "T({p},{q})"
        );
        assert_eq!(
            genus_of_positive_closure(&w).unwrap() as usize,
            (p - 1) * (q - 1) / 2,
            "T({p},{q})"
        );
    }
}

#[test]
fn alexander_is_independent_of_orientation_reversal() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut seen = 0;
    while seen < 30 {
        let n = rng.gen_range(2..6);
        let w = random_word(&mut rng, n, 1..12);
        let Ok(a) = alexander_of_closure(&w) else {
            continue;
        };
        seen += 1;
        let reversed = BraidWord::new(n, w.letters().iter().rev().copied().collect()).unwrap();
        assert_eq!(alexander_of_closure(&reversed).unwrap(), a);
        assert_eq!(a.reflect(), a);
        assert_eq!(a.eval_one(), BigInt::one());
    }
}
