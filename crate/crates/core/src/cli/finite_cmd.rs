use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use itertools::Itertools;
use serde_json::{json, Value};

use super::report::{all_pass, checks_json, Check};
use super::{read_file, CliError, Outcome};
use crate::finite::{
    canonical_form, greens, is_completely_simple, is_group, is_inverse, is_simple, CanonicalForm,
    FiniteSemigroup, SemigroupEnumerator, MAX_ENUMERATION_ORDER,
};
use crate::relations::{
    brute_force_is_dsc, is_dsc_fast, witness_non_dsc, NonDscWitness, PairSet, MAX_BRUTE_FORCE_ORDER,
};

#[derive(Debug, Clone, Default)]
pub struct CheckOptions {
    pub brute: bool,
    pub witness: bool,
    pub strict: bool,
}

#[derive(Debug, Clone, Default)]
pub struct EnumerateOptions {
    pub oracle: bool,
    pub count: bool,
    pub jobs: Option<usize>,
}

fn load(path: &Path) -> Result<FiniteSemigroup, CliError> {
    let text = read_file(path)?;
    FiniteSemigroup::from_json(&text).map_err(|e| CliError::Parse(e.to_string()))
}

fn pair_names(s: &FiniteSemigroup, (x, y): (usize, usize)) -> Value {
    json!([s.name(x), s.name(y)])
}

fn relation_json(s: &FiniteSemigroup, rho: &PairSet) -> Value {
    Value::Array(rho.iter().map(|p| pair_names(s, p)).collect())
}

pub fn witness_json(s: &FiniteSemigroup, w: &NonDscWitness, full: bool) -> Value {
    let (x, y) = w.failing_pair;
    let mut out = json!({
        "strategy": w.strategy.tag(),
        "pair": pair_names(s, (x, y)),
        "missing_reverse": pair_names(s, (y, x)),
    });
    if full {
        out["relation"] = relation_json(s, &w.relation);
        out["axioms"] = serde_json::to_value(&w.axioms).expect("axioms serialize");
    }
    out
}

fn properties(s: &FiniteSemigroup) -> Value {
    let g = greens(s);
    let count = |ids: &[usize]| ids.iter().collect::<BTreeSet<_>>().len();
    json!({
        "group": is_group(s),
        "monoid": s.identity().is_some(),
        "simple": is_simple(s),
        "completely_simple": is_completely_simple(s),
        "inverse": is_inverse(s),
        "dsc": is_dsc_fast(s),
        "greens": {
            "R": count(&g.r_class),
            "L": count(&g.l_class),
            "J": count(&g.j_class),
            "H": count(&g.h_class),
            "D": count(&g.d_class),
        },
    })
}

/// Validates the table at `path` and reports structure and DSC status.
pub fn cmd_check(path: &Path, options: &CheckOptions) -> Result<Outcome, CliError> {
    let s = load(path)?;
    let fast = is_dsc_fast(&s);
    let mut checks = vec![Check::passed("associative")];

    let dsc = if fast {
        Check::passed("dsc")
    } else {
        let w = witness_non_dsc(&s).map_err(|e| CliError::Verification(e.to_string()))?;
        Check::failed("dsc", witness_json(&s, &w, options.witness))
    };
    checks.push(dsc);

    if options.brute {
        if s.order() > MAX_BRUTE_FORCE_ORDER {
            checks.push(Check::passed("brute-force").with_detail(json!({
                "skipped": format!("order {} exceeds {}", s.order(), MAX_BRUTE_FORCE_ORDER)
            })));
        } else {
            let scan = brute_force_is_dsc(&s).map_err(|e| CliError::Usage(e.to_string()))?;
            let detail = json!({
                "diagonal_subsemigroups": scan.diagonal_subsemigroups,
                "congruences": scan.congruences,
            });
            let brute = match &scan.witness {
                None => Check::passed("brute-force"),
                Some(rho) => Check::failed("brute-force", relation_json(&s, rho)),
            };
            checks.push(brute.with_detail(detail));
            let agree = Check::from_search(
                "brute-force-agrees",
                (scan.is_dsc != fast).then(|| json!({ "fast": fast, "brute": scan.is_dsc })),
            );
            checks.push(agree);
        }
    }

    let pass = all_pass(&checks);
    let report = json!({
        "subject": { "kind": "cayley", "path": path.display().to_string(), "order": s.order() },
        "properties": properties(&s),
        "checks": checks_json(&checks),
    });
    Ok(Outcome::new(report, pass || !options.strict))
}

/// Prints a verified non-congruence diagonal subsemigroup, or `null` for a
/// group.
pub fn cmd_witness(path: &Path) -> Result<Outcome, CliError> {
    let s = load(path)?;
    let witness = if is_group(&s) {
        Value::Null
    } else {
        let w = witness_non_dsc(&s).map_err(|e| CliError::Verification(e.to_string()))?;
        witness_json(&s, &w, true)
    };
    let report = json!({
        "subject": { "kind": "cayley", "path": path.display().to_string(), "order": s.order() },
        "dsc": witness.is_null(),
        "witness": witness,
    });
    Ok(Outcome::new(report, true))
}

#[derive(Debug, Default)]
struct Tally {
    tables: usize,
    groups: usize,
    classes: BTreeSet<CanonicalForm>,
    strategies: BTreeMap<&'static str, usize>,
    first_failure: Option<Value>,
}

impl Tally {
    fn merge(&mut self, other: Tally) {
        self.tables += other.tables;
        self.groups += other.groups;
        self.classes.extend(other.classes);
        for (k, v) in other.strategies {
            *self.strategies.entry(k).or_default() += v;
        }
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
    }
}

/// The exhaustive scan for `n ≤ 3`; for larger orders groups get the scan
/// and non-groups a verified witness.
fn oracle_disagreement(s: &FiniteSemigroup, tally: &mut Tally) -> Option<Value> {
    let group = is_group(s);
    if !group {
        match witness_non_dsc(s) {
            Ok(w) => *tally.strategies.entry(w.strategy.tag()).or_default() += 1,
            Err(e) => return Some(json!({ "table": s.rows(), "error": e.to_string() })),
        }
    }
    if group || s.order() <= 3 {
        let scan = brute_force_is_dsc(s).expect("order within the scan limit");
        if scan.is_dsc != group || (group && scan.non_congruences() != 0) {
            return Some(json!({ "table": s.rows(), "group": group, "brute_dsc": scan.is_dsc }));
        }
    }
    None
}

fn scan_rows(n: usize, rows: &[Vec<usize>], options: &EnumerateOptions) -> Tally {
    let mut tally = Tally::default();
    for row in rows {
        let tables = SemigroupEnumerator::with_first_row(n, row).expect("valid first row");
        for s in tables {
            tally.tables += 1;
            if is_group(&s) {
                tally.groups += 1;
            }
            if options.count {
                tally
                    .classes
                    .insert(canonical_form(&s).expect("small order"));
            }
            if options.oracle && tally.first_failure.is_none() {
                tally.first_failure = oracle_disagreement(&s, &mut tally);
            }
        }
    }
    tally
}

/// Enumerates all labeled semigroups of order `n`, spreading first rows
/// over worker threads and merging the tallies in row order.
pub fn cmd_enumerate(n: usize, options: &EnumerateOptions) -> Result<Outcome, CliError> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(CliError::Usage(format!(
            "order must be between 1 and {MAX_ENUMERATION_ORDER}"
        )));
    }
    let rows: Vec<Vec<usize>> = (0..n).map(|_| 0..n).multi_cartesian_product().collect();
    let jobs = options
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |p| p.get()))
        .clamp(1, rows.len());
    let chunk = rows.len().div_ceil(jobs);
    let tallies: Vec<Tally> = std::thread::scope(|scope| {
        let handles: Vec<_> = rows
            .chunks(chunk)
            .map(|part| scope.spawn(move || scan_rows(n, part, options)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    let mut tally = Tally::default();
    for t in tallies {
        tally.merge(t);
    }

    let mut report = json!({
        "subject": { "kind": "enumeration", "order": n },
        "tables": tally.tables,
        "groups": tally.groups,
    });
    if options.count {
        report["counts"] = json!({ "labeled": tally.tables, "classes": tally.classes.len() });
    }
    let mut checks = Vec::new();
    if options.oracle {
        let check = Check::from_search("dsc-iff-group", tally.first_failure.clone())
            .with_detail(json!({ "witness_strategies": tally.strategies }));
        checks.push(check);
    }
    let pass = all_pass(&checks);
    report["checks"] = checks_json(&checks);
    Ok(Outcome::new(report, pass))
}
