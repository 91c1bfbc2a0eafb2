use std::collections::BTreeMap;
use std::fmt::Write as _;

use braidtk::classify::{
    self as census, component_knots, nonconjugate_pair_demo, verify_theorem_1, verify_theorem_2,
    verify_theorem_3, verify_theorem_4, verify_theorem_6, Census, TheoremCheck,
};
use braidtk::invariants::KnotId;
use braidtk::props::run_property_suite;
use braidtk::{
    alexander_of_closure, braid_power, burau_char_poly, closure_component_count,
    enumerate_ncycle_braids, genus_of_positive_closure, identify_knot, is_permutation_braid,
    normal_form, permutation_to_braid, summit_set, word_to_permutation, writhe, BraidError,
    BraidWord, KnotType, Permutation,
};
use serde_json::{json, Value};

use crate::{Check, Config, Failure, OutputFormat, Report};

type Outcome = Result<Report, Failure>;

fn emit(
    config: &Config,
    success: bool,
    text: String,
    value: Value,
    markdown: Option<String>,
) -> Outcome {
    let body = match config.format {
        OutputFormat::Text => text,
        OutputFormat::Json => format!("{}\n", serde_json::to_string_pretty(&value).expect("json")),
        OutputFormat::Markdown => markdown.unwrap_or(text),
    };
    Ok(Report { body, success })
}

pub fn perm2braid(config: &Config, text: &str, n: Option<usize>) -> Outcome {
    let p = Permutation::parse(text, n)?;
    let w = permutation_to_braid(&p);
    let value = json!({
        "permutation": p.image(),
        "cycle": p.to_cycle_string(),
        "word": w.to_string(),
        "sigma": w.to_sigma_string(),
        "crossings": w.len(),
    });
    emit(
        config,
        true,
        format!("{w}\n"),
        value,
        Some(format!("{}\n", w.to_sigma_string())),
    )
}

pub fn braid2perm(config: &Config, text: &str, n: Option<usize>) -> Outcome {
    let w = BraidWord::parse(text, n)?;
    let p = word_to_permutation(&w);
    let value = json!({
        "word": w.to_string(),
        "permutation": p.image(),
        "cycle": p.to_cycle_string(),
        "is_permutation_braid": is_permutation_braid(&w),
        "components": closure_component_count(&w),
    });
    emit(
        config,
        true,
        format!("{}\n", p.to_cycle_string()),
        value,
        None,
    )
}

pub fn nf(config: &Config, text: &str, n: Option<usize>) -> Outcome {
    let w = BraidWord::parse(text, n)?;
    let nf = normal_form(&w);
    let text = format!(
        "{nf}\ninf {}  sup {}  canonical length {}\n",
        nf.inf(),
        nf.sup(),
        nf.canonical_length()
    );
    let value = json!({
        "word": w.to_string(),
        "normal_form": nf,
        "sup": nf.sup(),
        "canonical_length": nf.canonical_length(),
        "as_word": nf.to_word().to_string(),
    });
    emit(config, true, text, value, None)
}

fn square_components(w: &BraidWord) -> Option<Vec<KnotType>> {
    component_knots(&braid_power(w, 2))
        .ok()
        .map(|ks| ks.into_iter().map(|k| k.knot).collect())
}

fn join(ks: &[KnotType]) -> String {
    ks.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn conj(config: &Config, a: &str, b: &str, n: Option<usize>) -> Outcome {
    let a = BraidWord::parse(a, n)?;
    let b = BraidWord::parse(b, n)?;
    if a.strands() != b.strands() {
        return Err(Failure::Usage(
            BraidError::StrandMismatch {
                left: a.strands(),
                right: b.strands(),
            }
            .to_string()
                + " (pass --n to fix the strand count)",
        ));
    }
    let limits = config.limits();
    let sa = summit_set(&a, &limits)?;
    let decision = sa.decide(&normal_form(&b))?;
    if let Some(u) = &decision.witness {
        let text = format!(
            "conjugate\nwitness u = {u} ({})\nu^-1 a u = b\n",
            u.to_sigma_string()
        );
        let value = json!({
            "conjugate": true,
            "a": a.to_string(),
            "b": b.to_string(),
            "witness": u.to_string(),
        });
        return emit(config, true, text, value, None);
    }
    let sb = summit_set(&b, &limits)?;
    let mut text = String::from("not conjugate\n");
    let _ = writeln!(
        text,
        "summit sets disjoint: a has inf {} sup {} ({} elements), b has inf {} sup {} ({} elements)",
        sa.inf(),
        sa.sup(),
        sa.len(),
        sb.inf(),
        sb.sup(),
        sb.len()
    );
    let (pa, pb) = (burau_char_poly(&a), burau_char_poly(&b));
    let polys_differ = pa != pb;
    if polys_differ {
        let _ = writeln!(
            text,
            "Burau characteristic polynomials differ:\n  a: {pa}\n  b: {pb}"
        );
    } else {
        let _ = writeln!(text, "Burau characteristic polynomials agree: {pa}");
    }
    let squares = (square_components(&a), square_components(&b));
    let squares_differ = matches!(&squares, (Some(x), Some(y)) if x != y);
    if let (true, Some(x), Some(y)) = (squares_differ, &squares.0, &squares.1) {
        let _ = writeln!(
            text,
            "components of the squared closures differ:\n  a^2: [{}]\n  b^2: [{}]",
            join(x),
            join(y)
        );
    }
    let value = json!({
        "conjugate": false,
        "a": a.to_string(),
        "b": b.to_string(),
        "summit": [
            { "inf": sa.inf(), "sup": sa.sup(), "size": sa.len() },
            { "inf": sb.inf(), "sup": sb.sup(), "size": sb.len() },
        ],
        "char_polys": [pa, pb],
        "char_polys_differ": polys_differ,
        "square_components": if squares_differ {
            json!([squares.0, squares.1])
        } else {
            Value::Null
        },
    });
    emit(config, false, text, value, None)
}

pub fn invariants(config: &Config, text: &str, n: Option<usize>) -> Outcome {
    let w = BraidWord::parse(text, n)?;
    let p = word_to_permutation(&w);
    let components = closure_component_count(&w);
    let genus = genus_of_positive_closure(&w).ok();
    let char_poly = burau_char_poly(&w);
    let knot: Option<KnotId> = identify_knot(&w).ok();
    let alexander = alexander_of_closure(&w).ok();
    let mut out = String::new();
    let _ = writeln!(out, "word: {w} ({})", w.to_sigma_string());
    let _ = writeln!(out, "writhe: {}", writhe(&w));
    let _ = writeln!(out, "permutation: {}", p.to_cycle_string());
    let _ = writeln!(out, "components: {components}");
    if let Some(g) = genus {
        let _ = writeln!(out, "genus: {g}");
    }
    let _ = writeln!(out, "burau char poly: {char_poly}");
    if let Some(a) = &alexander {
        let _ = writeln!(out, "alexander: {a}");
    }
    if let Some(k) = &knot {
        let _ = writeln!(out, "knot: {}", k.knot);
    }
    let value = json!({
        "word": w.to_string(),
        "writhe": writhe(&w),
        "permutation": p.image(),
        "cycle": p.to_cycle_string(),
        "components": components,
        "genus": genus,
        "char_poly": char_poly,
        "char_poly_text": char_poly.to_string(),
        "alexander": alexander,
        "alexander_text": alexander.as_ref().map(ToString::to_string),
        "knot": knot,
    });
    emit(config, true, out, value, None)
}

pub fn enumerate(config: &Config, n: usize) -> Outcome {
    let braids = enumerate_ncycle_braids(n, &config.limits())?;
    let mut text = String::new();
    for b in &braids {
        let _ = writeln!(text, "{}\t{}\t{}", b.permutation, b.word, b.crossings);
    }
    let value = json!(braids
        .iter()
        .map(|b| json!({
            "permutation": b.permutation,
            "cycle": b.permutation.to_cycle_string(),
            "word": b.word,
            "crossings": b.crossings,
        }))
        .collect::<Vec<_>>());
    emit(
        config,
        true,
        text,
        value,
        Some(census::markdown_table(&braids)),
    )
}

fn count(k: usize, noun: &str) -> String {
    if k == 1 {
        format!("1 {noun}")
    } else if noun.ends_with('s') {
        format!("{k} {noun}es")
    } else {
        format!("{k} {noun}s")
    }
}

/// Differences from the class structure pinned for small `n`.
fn pinned_mismatches(c: &Census) -> Vec<String> {
    let sizes: BTreeMap<usize, Vec<usize>> = c
        .reports
        .iter()
        .map(|r| {
            let mut s = r.sizes();
            s.sort_unstable();
            (r.crossings, s)
        })
        .collect();
    let expected: BTreeMap<usize, Vec<usize>> = match c.n {
        2 => BTreeMap::from([(1, vec![1])]),
        3 => BTreeMap::from([(2, vec![2])]),
        4 => BTreeMap::from([(3, vec![4]), (5, vec![2])]),
        5 => BTreeMap::from([(4, vec![8]), (6, vec![10]), (8, vec![6])]),
        6 => BTreeMap::from([
            (5, vec![16]),
            (7, vec![32]),
            (9, vec![2, 4, 38]),
            (11, vec![6, 16]),
            (13, vec![6]),
        ]),
        7 => {
            let totals: BTreeMap<usize, usize> =
                c.reports.iter().map(|r| (r.crossings, r.total)).collect();
            let pinned = BTreeMap::from([
                (6, 32),
                (8, 88),
                (10, 176),
                (12, 202),
                (14, 134),
                (16, 70),
                (18, 18),
            ]);
            return if totals == pinned {
                Vec::new()
            } else {
                vec![format!(
                    "crossing distribution {totals:?}, expected {pinned:?}"
                )]
            };
        }
        _ => return Vec::new(),
    };
    if sizes == expected {
        Vec::new()
    } else {
        vec![format!("class sizes {sizes:?}, expected {expected:?}")]
    }
}

pub fn classify(config: &Config, n: usize, census_lines: bool) -> Outcome {
    let c = census::classify(n, &config.limits())?;
    let mismatches = pinned_mismatches(&c);
    let mut text = String::new();
    let _ = writeln!(
        text,
        "n = {n}: {}, {}",
        count(c.entries.len(), "braid"),
        count(c.class_count(), "class")
    );
    for r in &c.reports {
        let _ = writeln!(
            text,
            "{} crossings: {}, {}",
            r.crossings,
            count(r.total, "braid"),
            count(r.classes.len(), "class")
        );
        for class in &r.classes {
            let _ = writeln!(
                text,
                "  class {}: {}, {}, representative {}",
                class.class_id,
                count(class.size, "braid"),
                class.knot,
                class.representative.to_sigma_string()
            );
        }
    }
    let mut markdown = String::from(
        "| Crossings | Class | Size | Knot | Representative |\n|---|---|---|---|---|\n",
    );
    for r in &c.reports {
        for class in &r.classes {
            let _ = writeln!(
                markdown,
                "| {} | {} | {} | {} | {} |",
                r.crossings,
                class.class_id,
                class.size,
                class.knot,
                class.representative.to_sigma_string()
            );
        }
    }
    for m in &mismatches {
        let _ = writeln!(text, "MISMATCH: {m}");
        let _ = writeln!(markdown, "\nMISMATCH: {m}");
    }
    let success = mismatches.is_empty();
    if census_lines && config.format == OutputFormat::Json {
        return Ok(Report {
            body: c.to_json_lines(),
            success,
        });
    }
    let value = json!({ "n": n, "reports": c.reports, "mismatches": mismatches });
    emit(config, success, text, value, Some(markdown))
}

fn check_text(check: &TheoremCheck) -> String {
    let mut text = format!(
        "{} n={}: {} ({} checked)\n",
        check.theorem,
        check.n,
        if check.passed { "PASS" } else { "FAIL" },
        check.checked
    );
    if let Some(r) = &check.reference {
        let _ = writeln!(text, "reference: {} ({})", r, r.to_sigma_string());
    }
    for line in &check.log {
        let _ = writeln!(text, "  {line}");
    }
    text
}

pub fn verify(config: &Config, check: Check, n: Option<usize>) -> Outcome {
    let limits = config.limits();
    if check == Check::Props {
        let census_n = n.unwrap_or(6).min(config.max_n);
        let report = run_property_suite(config.seed, 1000, 500, census_n);
        let mut text = format!(
            "props seed={}: {}\n",
            config.seed,
            if report.passed() { "PASS" } else { "FAIL" }
        );
        for c in &report.checks {
            let _ = writeln!(text, "  {}: {}/{} failed", c.name, c.failures, c.trials);
            if let Some(f) = &c.first_failure {
                let _ = writeln!(text, "    first failure: {f}");
            }
        }
        return emit(config, report.passed(), text, json!(report), None);
    }
    let n = n.ok_or_else(|| Failure::Usage("verify needs a strand count".into()))?;
    let result = match check {
        Check::Thm1 => verify_theorem_1(n, &limits)?,
        Check::Thm2 => verify_theorem_2(n, &limits)?,
        Check::Thm3 => verify_theorem_3(n, &limits)?,
        Check::Thm4 => verify_theorem_4(n, &limits)?,
        Check::Thm6 => verify_theorem_6(n, &limits)?,
        Check::Props => unreachable!(),
    };
    let text = check_text(&result);
    emit(config, result.passed, text, json!(result), None)
}

pub fn demo_nonconj(config: &Config) -> Outcome {
    let d = nonconjugate_pair_demo(&config.limits())?;
    let mut text = String::new();
    let _ = writeln!(text, "beta  = {} = {}", d.beta.to_sigma_string(), d.beta);
    let _ = writeln!(text, "gamma = {} = {}", d.gamma.to_sigma_string(), d.gamma);
    let _ = writeln!(
        text,
        "permutations: {} and {} (read right to left: {} and {})",
        d.beta_permutation, d.gamma_permutation, d.beta_permutation_rtl, d.gamma_permutation_rtl
    );
    let _ = writeln!(text, "closures: {} and {}", d.beta_knot, d.gamma_knot);
    let _ = writeln!(text, "conjugate: {}", d.conjugate);
    let _ = writeln!(
        text,
        "components of beta^2: [{}]",
        join(&d.beta_square_components)
    );
    let _ = writeln!(
        text,
        "components of gamma^2: [{}]",
        join(&d.gamma_square_components)
    );
    let _ = writeln!(text, "char poly beta:  {}", d.beta_char_poly);
    let _ = writeln!(text, "char poly gamma: {}", d.gamma_char_poly);
    let _ = writeln!(text, "{}", if d.holds() { "PASS" } else { "FAIL" });
    let mut value = json!(d);
    value["holds"] = json!(d.holds());
    value["char_polys_differ"] = json!(d.char_polys_differ());
    emit(config, d.holds(), text, value, None)
}
