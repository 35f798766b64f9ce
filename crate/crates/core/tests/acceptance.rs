//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use dsc::byleen::{rewrite_pair, Byleen, Factor, Indexed, Letter, NormalForm, SpanCase};
use dsc::cli::{cmd_models, ModelName};
use dsc::finite::{
    cyclic_group, enumerate_semigroups, generate_symmetric_inverse, is_group, klein_four,
    natural_partial_order, quotient, symmetric_group, trivial, FiniteSemigroup,
};
use dsc::models::{baer_levi_witness, shares_b_prime, APSet, DEFAULT_WINDOW};
use dsc::relations::{
    all_congruences, axiom_report, brute_force_is_dsc, diagonal_closure, witness_non_dsc,
    RelationsError, Strategy,
};
use dsc::PairSet;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

/// Name, check, and optional runtime budget.
type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// ---------------------------------------------------------------------------
// Independent finite oracles

fn associative(n: usize, t: &[usize]) -> bool {
    (0..n)
        .all(|x| (0..n).all(|y| (0..n).all(|z| t[t[x * n + y] * n + z] == t[x * n + t[y * n + z]])))
}

/// Every associative table of order `n`, by counting through all `n^(n²)`.
fn all_tables_naive(n: usize) -> BTreeSet<Vec<usize>> {
    let cells = n * n;
    let mut t = vec![0; cells];
    let mut out = BTreeSet::new();
    loop {
        if associative(n, &t) {
            out.insert(t.clone());
        }
        let mut k = 0;
        loop {
            if k == cells {
                return out;
            }
            t[k] += 1;
            if t[k] < n {
                break;
            }
            t[k] = 0;
            k += 1;
        }
    }
}

/// Identity plus two-sided inverses.
fn group_oracle(s: &FiniteSemigroup) -> bool {
    let n = s.order();
    let Some(e) = (0..n).find(|&e| (0..n).all(|x| s.mul(e, x) == x && s.mul(x, e) == x)) else {
        return false;
    };
    (0..n).all(|x| (0..n).any(|y| s.mul(x, y) == e && s.mul(y, x) == e))
}

fn diagonal_subsemigroup_oracle(s: &FiniteSemigroup, rho: &PairSet) -> bool {
    let pairs = rho.pairs();
    (0..s.order()).all(|x| rho.contains(x, x))
        && pairs.iter().all(|&(a, b)| {
            pairs
                .iter()
                .all(|&(c, d)| rho.contains(s.mul(a, c), s.mul(b, d)))
        })
}

fn symmetric_oracle(rho: &PairSet) -> bool {
    rho.iter().all(|(x, y)| rho.contains(y, x))
}

/// Number of subgroups, by scanning subsets closed under the product that
/// contain the identity. Every subgroup of an abelian group is normal.
fn subgroup_count(s: &FiniteSemigroup) -> usize {
    let n = s.order();
    let e = s.identity().expect("group");
    (1u32..1 << n)
        .filter(|mask| {
            let has = |x: usize| mask & (1 << x) != 0;
            has(e) && (0..n).all(|x| !has(x) || (0..n).all(|y| !has(y) || has(s.mul(x, y))))
        })
        .count()
}

// ---------------------------------------------------------------------------
// Criteria

fn finite_oracle() -> Outcome {
    let golden = [1usize, 8, 113];
    let mut details = Vec::new();
    for n in 1..=3 {
        let tables: Vec<FiniteSemigroup> = enumerate_semigroups(n)
            .map_err(|e| e.to_string())?
            .collect();
        ensure(tables.len() == golden[n - 1], || {
            format!(
                "order {n}: {} tables, expected {}",
                tables.len(),
                golden[n - 1]
            )
        })?;
        let flat: BTreeSet<Vec<usize>> = tables.iter().map(|s| s.flat_table().to_vec()).collect();
        ensure(flat == all_tables_naive(n), || {
            format!("order {n}: enumerator differs from naive scan")
        })?;
        let mut groups = 0;
        for s in &tables {
            let scan = brute_force_is_dsc(s).map_err(|e| e.to_string())?;
            let group = group_oracle(s);
            groups += usize::from(group);
            ensure(scan.is_dsc == group && is_group(s) == group, || {
                format!(
                    "order {n}: table {:?} dsc={} group={group}",
                    s.rows(),
                    scan.is_dsc
                )
            })?;
        }
        details.push(format!("n={n}: {} tables, {groups} groups", tables.len()));
    }
    Ok(details.join("; "))
}

fn order_four_sweep() -> Outcome {
    let mut tables = 0;
    let mut groups = 0;
    let mut strategies: BTreeMap<&str, usize> = BTreeMap::new();
    for s in enumerate_semigroups(4).map_err(|e| e.to_string())? {
        tables += 1;
        if group_oracle(&s) {
            groups += 1;
            let scan = brute_force_is_dsc(&s).map_err(|e| e.to_string())?;
            ensure(scan.non_congruences() == 0 && scan.is_dsc, || {
                format!(
                    "group {:?} has a non-congruence diagonal subsemigroup",
                    s.rows()
                )
            })?;
        } else {
            let w = witness_non_dsc(&s).map_err(|e| format!("{:?}: {e}", s.rows()))?;
            ensure(
                diagonal_subsemigroup_oracle(&s, &w.relation) && !symmetric_oracle(&w.relation),
                || format!("witness for {:?} does not verify", s.rows()),
            )?;
            let (x, y) = w.failing_pair;
            ensure(
                w.relation.contains(x, y) && !w.relation.contains(y, x),
                || format!("failing pair of {:?} is wrong", s.rows()),
            )?;
            *strategies.entry(w.strategy.tag()).or_default() += 1;
        }
    }
    ensure(tables == 3492 && groups == 16, || {
        format!("{tables} tables, {groups} groups")
    })?;
    Ok(format!(
        "{tables} tables, {groups} groups, strategies {strategies:?}"
    ))
}

fn group_shadow() -> Outcome {
    // Subgroup counts of C2, C3, C4, V4, checked against the subset oracle.
    let subjects = [
        ("C2", cyclic_group(2), 2usize),
        ("C3", cyclic_group(3), 2),
        ("C4", cyclic_group(4), 3),
        ("V4", klein_four(), 5),
    ];
    let mut details = Vec::new();
    for (name, s, golden) in subjects {
        let oracle = subgroup_count(&s);
        ensure(oracle == golden, || {
            format!("{name}: oracle found {oracle} subgroups")
        })?;
        let scan = brute_force_is_dsc(&s).map_err(|e| e.to_string())?;
        ensure(scan.is_dsc && scan.witness.is_none(), || {
            format!("{name}: not DSC")
        })?;
        ensure(
            scan.diagonal_subsemigroups == golden
                && scan.congruences == golden
                && all_congruences(&s).len() == golden,
            || {
                format!(
                    "{name}: {} diagonal subsemigroups, {} congruences, expected {golden}",
                    scan.diagonal_subsemigroups, scan.congruences
                )
            },
        )?;
        details.push(format!("{name}={golden}"));
    }
    Ok(details.join(" "))
}

fn inverse_monoid_shadow() -> Outcome {
    let i2 = generate_symmetric_inverse(2).map_err(|e| e.to_string())?;
    ensure(i2.order() == 7, || format!("I2 has order {}", i2.order()))?;
    let order = natural_partial_order(&i2).map_err(|e| e.to_string())?;
    ensure(diagonal_subsemigroup_oracle(&i2, &order), || {
        "order is not a diagonal subsemigroup".into()
    })?;
    ensure(!symmetric_oracle(&order), || "order is symmetric".into())?;
    let inv = |x: usize| {
        (0..7)
            .find(|&y| i2.mul(i2.mul(x, y), x) == x && i2.mul(i2.mul(y, x), y) == y)
            .expect("inverse semigroup")
    };
    ensure(
        order.iter().all(|(x, y)| order.contains(inv(x), inv(y))),
        || "order is not closed under inversion".into(),
    )?;
    ensure(
        matches!(
            brute_force_is_dsc(&i2),
            Err(RelationsError::TooLarge { .. })
        ),
        || "exhaustive scan was not skipped".into(),
    )?;
    let w = witness_non_dsc(&i2).map_err(|e| e.to_string())?;
    ensure(w.strategy == Strategy::Ideal, || {
        format!("strategy {}", w.strategy)
    })?;
    ensure(
        diagonal_subsemigroup_oracle(&i2, &w.relation) && !symmetric_oracle(&w.relation),
        || "witness does not verify".into(),
    )?;
    Ok(format!(
        "order has {} pairs; witness via {}",
        order.len(),
        w.strategy
    ))
}

// ---------------------------------------------------------------------------
// Byleen helpers

fn random_indexed(rng: &mut ChaCha8Rng, order: usize) -> Indexed {
    Indexed::new(rng.gen_range(0u32..8), rng.gen_range(0..order))
}

fn random_letter(rng: &mut ChaCha8Rng, order: usize) -> Letter {
    match rng.gen_range(0..3) {
        0 => Letter::A(random_indexed(rng, order)),
        1 => Letter::B(random_indexed(rng, order)),
        _ => Letter::S(rng.gen_range(0..order)),
    }
}

fn random_word(rng: &mut ChaCha8Rng, order: usize, max: usize) -> Vec<Letter> {
    let len = rng.gen_range(0..=max);
    (0..len).map(|_| random_letter(rng, order)).collect()
}

/// Repeatedly rewrites the rightmost reducible adjacent pair.
fn right_to_left_nf(m: &Byleen, word: &[Letter]) -> Vec<Letter> {
    let e = m.base_identity();
    let mut w: Vec<Letter> = word.to_vec();
    'outer: loop {
        for i in (0..w.len().saturating_sub(1)).rev() {
            if let Some(r) = rewrite_pair(m.matrix(), &w[i], &w[i + 1]) {
                w.splice(i..i + 2, [r]);
                continue 'outer;
            }
        }
        break;
    }
    w.retain(|l| *l != Letter::S(e));
    w
}

fn concat(parts: &[&NormalForm]) -> Vec<Letter> {
    parts.iter().flat_map(|p| p.letters()).collect()
}

fn byleen_rewriting() -> Outcome {
    let m = Byleen::new(cyclic_group(2)).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..1000 {
        let word = random_word(&mut rng, 2, 12);
        let nf = m.reduce(&word);
        let oracle = right_to_left_nf(&m, &word);
        ensure(nf.letters() == oracle, || {
            format!("{word:?}: stack {nf}, right-to-left {oracle:?}")
        })?;
        ensure(m.reduce(&nf.letters()) == nf, || {
            format!("reduce not idempotent on {nf}")
        })?;
    }
    for _ in 0..1000 {
        let [x, y, z] = [0; 3].map(|_| {
            let w = random_word(&mut rng, 2, 12);
            m.reduce(&w)
        });
        let left = m
            .mul(&m.mul(&x, &y).map_err(|e| e.to_string())?, &z)
            .map_err(|e| e.to_string())?;
        let right = m
            .mul(&x, &m.mul(&y, &z).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        ensure(left == right, || format!("({x})({y})({z}) not associative"))?;
    }
    Ok("1000 words, 1000 triples".into())
}

fn random_nf(rng: &mut ChaCha8Rng, m: &Byleen, v_len: usize, u_len: usize) -> NormalForm {
    let order = m.base().order();
    let v = (0..v_len).map(|_| random_indexed(rng, order)).collect();
    let u = (0..u_len).map(|_| random_indexed(rng, order)).collect();
    NormalForm::from_parts(v, rng.gen_range(0..order), u, m.base_identity())
}

fn distinct(
    rng: &mut ChaCha8Rng,
    f: impl Fn(&mut ChaCha8Rng) -> Vec<Indexed>,
    avoid: &[Indexed],
) -> Vec<Indexed> {
    loop {
        let w = f(rng);
        if w != avoid {
            return w;
        }
    }
}

/// A generating pair shaped for `kind`: 0 equal words with different base
/// elements, 1 exactly one side's words differ, 2 both differ.
fn generating_pair(rng: &mut ChaCha8Rng, m: &Byleen, kind: usize) -> (NormalForm, NormalForm) {
    let e = m.base_identity();
    let order = m.base().order();
    let g = {
        let (vl, ul) = (rng.gen_range(0..3), rng.gen_range(0..3));
        random_nf(rng, m, vl, ul)
    };
    let words = |rng: &mut ChaCha8Rng| {
        let len = rng.gen_range(0..3);
        (0..len)
            .map(|_| random_indexed(rng, order))
            .collect::<Vec<_>>()
    };
    let h = match kind {
        0 => NormalForm::from_parts(g.v.clone(), 1 - g.s, g.u.clone(), e),
        1 if rng.gen_bool(0.5) => NormalForm::from_parts(
            g.v.clone(),
            rng.gen_range(0..order),
            distinct(rng, words, &g.u),
            e,
        ),
        1 => NormalForm::from_parts(
            distinct(rng, words, &g.v),
            rng.gen_range(0..order),
            g.u.clone(),
            e,
        ),
        _ => {
            let v = distinct(rng, words, &g.v);
            let u = distinct(rng, words, &g.u);
            NormalForm::from_parts(v, rng.gen_range(0..order), u, e)
        }
    };
    if rng.gen_bool(0.5) {
        (g, h)
    } else {
        (h, g)
    }
}

/// Evaluates a certificate's factors coordinatewise without the library's
/// evaluator.
fn evaluate_independently(
    m: &Byleen,
    g: &NormalForm,
    h: &NormalForm,
    factors: &[Factor],
) -> (NormalForm, NormalForm) {
    let side = |gen: &NormalForm| {
        let word: Vec<Letter> = factors
            .iter()
            .flat_map(|f| match f {
                Factor::Diag(t) => t.letters(),
                Factor::Gen => gen.letters(),
            })
            .collect();
        m.reduce(&word)
    };
    (side(g), side(h))
}

fn byleen_certificates() -> Outcome {
    let m = Byleen::new(cyclic_group(2)).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut cases: BTreeMap<&str, usize> = BTreeMap::new();
    for i in 0..500 {
        let (g, h) = generating_pair(&mut rng, &m, i % 3);
        let (w1, w2) = (random_letter(&mut rng, 2), random_letter(&mut rng, 2));
        let cert = m
            .span_witness(&g, &h, &w1, &w2)
            .map_err(|e| format!("({g}, {h}) → ({w1}, {w2}): {e}"))?;
        let target = (m.letter(&w1), m.letter(&w2));
        let value = evaluate_independently(&m, &g, &h, cert.factors());
        ensure(value == target && *cert.value() == target, || {
            format!(
                "span ({g}, {h}) → ({w1}, {w2}) evaluates to ({}, {})",
                value.0, value.1
            )
        })?;
        let tag = match cert.case() {
            SpanCase::FaithfulAction => "faithful-action",
            SpanCase::AWordsDiffer | SpanCase::BWordsDiffer => "one-side-differs",
            SpanCase::BothDiffer => "both-differ",
            other => return Err(format!("unexpected case {other:?}")),
        };
        *cases.entry(tag).or_default() += 1;
    }
    for _ in 0..200 {
        let kind = rng.gen_range(0..3);
        let (g, h) = generating_pair(&mut rng, &m, kind);
        let p = m.reduce(&random_word(&mut rng, 2, 6));
        let q = m.reduce(&random_word(&mut rng, 2, 6));
        let cert = m
            .express_pair(&g, &h, &p, &q)
            .map_err(|e| format!("express ({p}, {q}): {e}"))?;
        let value = evaluate_independently(&m, &g, &h, cert.factors());
        ensure(
            value == (p.clone(), q.clone()) && *cert.value() == (p.clone(), q.clone()),
            || {
                format!(
                    "express ({g}, {h}) → ({p}, {q}) evaluates to ({}, {})",
                    value.0, value.1
                )
            },
        )?;
    }
    ensure(cases.len() == 3 && cases.values().all(|&c| c >= 50), || {
        format!("case counts {cases:?}")
    })?;
    Ok(format!("500 spans, 200 expressions, cases {cases:?}"))
}

fn byleen_inverses() -> Outcome {
    let m = Byleen::new(cyclic_group(2)).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let t = m.reduce(&random_word(&mut rng, 2, 10));
        let inv = m
            .inverse_of(&t, |s| Some((2 - s) % 2))
            .map_err(|e| format!("{t}: {e}"))?;
        ensure(m.reduce(&concat(&[&t, &inv, &t])) == t, || {
            format!("t t' t ≠ t for {t}")
        })?;
        ensure(m.reduce(&concat(&[&inv, &t, &inv])) == inv, || {
            format!("t' t t' ≠ t' for {t}")
        })?;
    }
    Ok("200 elements".into())
}

fn infinite_models() -> Outcome {
    let mut passed = Vec::new();
    for (model, required) in [
        (
            ModelName::Bicyclic,
            &[
                "reflexive",
                "antisymmetric",
                "transitive",
                "compatible",
                "closed-form-matches-search",
            ][..],
        ),
        (
            ModelName::BruckReilly,
            &[
                "constant-identity/projection-homomorphism",
                "identity/projection-homomorphism",
            ][..],
        ),
        (
            ModelName::BaerLevi,
            &["membership-pattern", "fg-intersection-is-4"][..],
        ),
    ] {
        let outcome = cmd_models(model, DEFAULT_WINDOW).map_err(|e| e.to_string())?;
        let checks = outcome.report["checks"]
            .as_array()
            .cloned()
            .unwrap_or_default();
        let failed: Vec<_> = checks.iter().filter(|c| c["pass"] != true).collect();
        ensure(failed.is_empty() && outcome.exit == 0, || {
            format!("{}: {failed:?}", model.tag())
        })?;
        for name in required {
            ensure(checks.iter().any(|c| c["name"] == *name), || {
                format!("{}: no check {name}", model.tag())
            })?;
        }
        passed.push(format!("{} ({} checks)", model.tag(), checks.len()));
    }
    let w = baer_levi_witness();
    ensure(w.pattern() == (true, true, false), || {
        format!("pattern {:?}", w.pattern())
    })?;
    ensure(w.pairs[0].intersection == APSet::points([4]), || {
        "fg intersection is not {4}".into()
    })?;
    ensure(shares_b_prime(&w.pairs[1]), || {
        "gh intersection misses B′".into()
    })?;
    ensure(w.pairs[2].intersection.is_empty(), || {
        "fh intersection is not empty".into()
    })?;
    passed.push(format!("pattern {:?}", w.pattern()));
    Ok(passed.join(", "))
}

fn pullback(class_of: &[usize], rho: &PairSet) -> PairSet {
    let n = class_of.len();
    PairSet::from_pairs(
        n,
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| rho.contains(class_of[x], class_of[y])),
    )
}

fn quotient_shadow() -> Outcome {
    let subjects = [
        ("C1", trivial()),
        ("C2", cyclic_group(2)),
        ("C3", cyclic_group(3)),
        ("C4", cyclic_group(4)),
        ("V4", klein_four()),
        ("C5", cyclic_group(5)),
        ("C6", cyclic_group(6)),
        ("S3", symmetric_group(3)),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut quotients = 0;
    let (mut subsemigroups, mut others) = (0, 0);
    for (name, s) in subjects {
        for sigma in all_congruences(&s) {
            let q = quotient(&s, &sigma).map_err(|e| e.to_string())?;
            quotients += 1;
            ensure(is_group(&q.semigroup) && group_oracle(&q.semigroup), || {
                format!("{name}: quotient by {:?} is not a group", sigma.pairs())
            })?;
            let k = q.semigroup.order();
            let all_pairs: Vec<(usize, usize)> =
                (0..k).flat_map(|x| (0..k).map(move |y| (x, y))).collect();
            for i in 0..50 {
                let rho = if i % 2 == 0 {
                    let count = rng.gen_range(0..3);
                    let gens: Vec<_> = all_pairs
                        .choose_multiple(&mut rng, count)
                        .copied()
                        .collect();
                    diagonal_closure(&q.semigroup, &gens)
                } else {
                    PairSet::from_pairs(k, all_pairs.iter().copied().filter(|_| rng.gen_bool(0.6)))
                };
                let lifted = pullback(&q.class_of, &rho);
                let here = axiom_report(&q.semigroup, &rho).is_diagonal_subsemigroup();
                let there = diagonal_subsemigroup_oracle(&s, &lifted);
                ensure(here == there, || {
                    format!(
                        "{name}: ρ = {:?} gives {here}, pullback gives {there}",
                        rho.pairs()
                    )
                })?;
                if here {
                    subsemigroups += 1;
                } else {
                    others += 1;
                }
            }
        }
    }
    Ok(format!(
        "{quotients} quotients; sampled ρ: {subsemigroups} diagonal subsemigroups, {others} not"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (
            "finite oracle, orders 1-3",
            finite_oracle,
            Some(Duration::from_secs(10)),
        ),
        (
            "order-4 sweep",
            order_four_sweep,
            Some(Duration::from_secs(300)),
        ),
        (
            "groups: diagonal subsemigroups are congruences",
            group_shadow,
            None,
        ),
        ("I2 natural partial order", inverse_monoid_shadow, None),
        ("Byleen rewriting", byleen_rewriting, None),
        (
            "Byleen span certificates",
            byleen_certificates,
            Some(Duration::from_secs(60)),
        ),
        ("Byleen inverses", byleen_inverses, None),
        ("infinite models", infinite_models, None),
        ("quotients and pullbacks", quotient_shadow, None),
    ];
    let mut failures = 0;
    for (i, (name, run, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let mut result = run();
        let elapsed = start.elapsed();
        if let (Ok(_), Some(limit)) = (&result, budget) {
            if elapsed > limit {
                result = Err(format!("took {elapsed:.1?}, budget {limit:?}"));
            }
        }
        match result {
            Ok(detail) => println!("PASS criterion {}: {name} [{elapsed:.2?}] {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL criterion {}: {name} [{elapsed:.2?}] {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} of 9 criteria passed", 9 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
