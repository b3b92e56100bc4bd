//! Acceptance criteria. Each test prints one `[PASS]`/`[FAIL]` line.
//!
//! Criteria 1, 2, 3, 6 and 7 share one pass over the full grid: ranks 1..=4,
//! up to 3 marked points, flag lengths 1..=3 (ordered tuples), every monotone
//! filling, genus 0..=3. All comparisons are exact.

use std::collections::BTreeSet;
use std::io::Write;
use std::process::{Command, Stdio};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use parbun::grid::{instances, vectors_of_rank, weight_types, GridBounds};
use parbun::oracle::OracleTable;
use parbun::{
    check_g0, check_g1, check_g_high, decide, decompositions, euler_form, q, stack_dims,
    Classification, DimVector, Locus, WeightType,
};
use parbun_cli::report::Report;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

const GRID: GridBounds = GridBounds { max_rank: 4, max_points: 3, max_flag_len: 3 };
const GENERA: [u32; 4] = [0, 1, 2, 3];

fn report(id: &str, name: &str, failures: &[String]) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("[{status}] criterion {id}: {name}");
    for f in failures.iter().take(10) {
        println!("    {f}");
    }
    assert!(failures.is_empty(), "criterion {id} failed with {} problems", failures.len());
}

/// What the shared grid pass found, one list of failure messages per check.
#[derive(Default)]
struct Findings {
    instances: usize,
    decompositions: usize,
    elapsed: Duration,
    oracle_sets: Vec<String>,
    oracle_verdicts: Vec<String>,
    high_genus: Vec<String>,
    genus_one: Vec<String>,
    cross_checks: Vec<String>,
    q_identity: Vec<String>,
    rank_one_q: Vec<String>,
    euler_bound: Vec<String>,
    margin_decrease: Vec<String>,
    witnesses: Vec<String>,
    /// `(nontrivial points, classification, margin)` at genus 1.
    genus_one_rows: Vec<(DimVector, usize, Classification, Option<i64>)>,
}

fn findings() -> &'static Findings {
    static CELL: OnceLock<Findings> = OnceLock::new();
    CELL.get_or_init(|| {
        let start = Instant::now();
        let mut f = Findings::default();
        for (_, a) in instances::<i64>(GRID) {
            check_instance(&a, &mut f);
            f.instances += 1;
        }
        f.elapsed = start.elapsed();
        f
    })
}

fn check_instance(a: &DimVector, f: &mut Findings) {
    let table = OracleTable::new(a).unwrap();

    // decomposition sets, for every part-count window the dims use
    let fast: Vec<_> = decompositions(a, 1, None).unwrap().collect();
    f.decompositions += fast.len();
    let fast_set: BTreeSet<_> = fast.iter().map(|d| d.parts().to_vec()).collect();
    if fast_set.len() != fast.len() || &fast_set != table.decompositions() {
        f.oracle_sets.push(format!("{a}: {} fast vs {} oracle", fast.len(), table.decompositions().len()));
    }
    let fast_two: BTreeSet<_> = decompositions(a, 2, None).unwrap().map(|d| d.parts().to_vec()).collect();
    let oracle_two: BTreeSet<_> = table.decompositions().iter().filter(|p| p.len() >= 2).cloned().collect();
    if fast_two != oracle_two {
        f.oracle_sets.push(format!("{a}: t >= 2 sets differ"));
    }

    // pairwise identity, Euler bound on every pair of parts
    let qa = q(a).unwrap();
    for dec in &fast {
        let parts = dec.parts();
        let mut sum: i64 = parts.iter().map(|b| q(b).unwrap()).sum();
        for (l, bl) in parts.iter().enumerate() {
            if euler_form(a, bl).unwrap() > a.rank() * bl.rank() {
                f.euler_bound.push(format!("<{a},{bl}>"));
            }
            for (m, bm) in parts.iter().enumerate() {
                let e = euler_form(bl, bm).unwrap();
                if e > bl.rank() * bm.rank() {
                    f.euler_bound.push(format!("<{bl},{bm}> = {e}"));
                }
                if l != m {
                    sum += e;
                }
            }
        }
        if sum != qa {
            f.q_identity.push(format!("{dec}: {sum} != q = {qa}"));
        }
    }
    if a.rank() == 1 && qa != 1 {
        f.rank_one_q.push(format!("q{a} = {qa}"));
    }

    let mut margins = Vec::new();
    for g in GENERA {
        let verdict = decide(a, g).unwrap();
        let want = table.decide(g).unwrap();
        let goodness = verdict.classification.goodness();
        if verdict.margin != want.margin
            || goodness.almost_good != want.almost_good
            || goodness.almost_very_good != want.almost_very_good
        {
            f.oracle_verdicts.push(format!("{a} g={g}: {:?} vs oracle {:?}", verdict.margin, want.margin));
        }

        let dims = stack_dims(a, g).unwrap();
        let od = table.dims(g).unwrap();
        if (dims.dim_bun, dims.dim_nilp.value(), dims.dim_pairs.value(), dims.dim_inertia_excess.value())
            != (od.dim_bun, Some(od.nilp), Some(od.pairs), od.inertia_excess)
        {
            f.oracle_verdicts.push(format!("{a} g={g}: dimensions differ from oracle"));
        }
        for (result, locus) in [
            (&dims.dim_nilp, Locus::Nilpotent),
            (&dims.dim_pairs, Locus::Pairs),
            (&dims.dim_inertia_excess, Locus::InertiaExcess),
        ] {
            if let Some(w) = &result.0 {
                if locus.evaluate(&w.witness, g).unwrap() != w.value || w.witness.total().unwrap() != *a {
                    f.witnesses.push(format!("{a} g={g} {locus:?}"));
                }
            }
        }
        if let (Some(m), Some(w)) = (verdict.margin, &verdict.witness) {
            let recomputed = Locus::InertiaExcess.evaluate(w, g).unwrap() - 1 - dims.dim_bun;
            if recomputed != m {
                f.witnesses.push(format!("{a} g={g}: verdict witness gives {recomputed}, margin {m}"));
            }
        }

        match g {
            0 => {
                if check_g0(a).unwrap() != goodness {
                    f.cross_checks.push(format!("check_g0 {a}"));
                }
            }
            1 => {
                if check_g1(a).unwrap() != goodness {
                    f.cross_checks.push(format!("check_g1 {a}"));
                }
                let nontrivial = a.nontrivial_points();
                if (nontrivial >= 1 && verdict.classification == Classification::NotAlmostGood)
                    || (nontrivial >= 2 && verdict.classification != Classification::AlmostVeryGood)
                {
                    f.genus_one.push(format!("{a}: {} with {nontrivial} nontrivial points", verdict.classification));
                }
                f.genus_one_rows.push((a.clone(), nontrivial, verdict.classification, verdict.margin));
            }
            _ => {
                if verdict.classification != Classification::AlmostVeryGood {
                    f.high_genus.push(format!("{a} g={g}: {}", verdict.classification));
                }
                if check_g_high(a, g).unwrap() != verdict.classification {
                    f.cross_checks.push(format!("check_g_high {a} g={g}"));
                }
            }
        }
        margins.push(verdict.margin);
    }
    if a.rank() >= 2 {
        let m: Vec<i64> = margins.iter().map(|m| m.expect("rank >= 2 has a margin")).collect();
        if !m.windows(2).all(|w| w[1] < w[0]) {
            f.margin_decrease.push(format!("{a}: {m:?}"));
        }
    }
}

fn v(rank: i64, rows: &[&[i64]]) -> DimVector {
    DimVector::from_rows(rank, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn verdict_of(a: &DimVector, g: u32) -> (Classification, Option<i64>) {
    let verdict = decide(a, g).unwrap();
    (verdict.classification, verdict.margin)
}

#[test]
fn criterion_1_oracle_equivalence() {
    let f = findings();
    println!(
        "    grid: {} instances, {} decompositions, {:.1?}",
        f.instances, f.decompositions, f.elapsed
    );
    let mut failures = f.oracle_sets.clone();
    failures.extend(f.oracle_verdicts.iter().cloned());
    if f.instances != 14_710 {
        failures.push(format!("expected 14710 grid instances, saw {}", f.instances));
    }
    if f.elapsed > Duration::from_secs(300) {
        failures.push(format!("grid pass took {:.1?}, limit 5 minutes", f.elapsed));
    }
    report("1", "enumerator and verdicts equal the naive oracle on the full grid", &failures);
}

#[test]
fn criterion_2_high_genus_always_very_good() {
    report("2", "every grid instance with g in {2,3} is almost very good", &findings().high_genus);
}

#[test]
fn criterion_3_genus_one() {
    let f = findings();
    let mut failures = f.genus_one.clone();
    let one = f.genus_one_rows.iter().filter(|r| r.1 >= 1).count();
    let two = f.genus_one_rows.iter().filter(|r| r.1 >= 2).count();
    println!("    g=1: {one} instances with a nontrivial point, {two} with two or more");
    for (a, want) in [
        (v(2, &[&[1]]), (Classification::AlmostGoodOnly, Some(0))),
        (v(2, &[&[1], &[1]]), (Classification::AlmostVeryGood, Some(-1))),
    ] {
        let got = verdict_of(&a, 1);
        if got != want {
            failures.push(format!("{a}: got {got:?}, want {want:?}"));
        }
    }
    report("3", "genus 1: one nontrivial point => almost good, two => almost very good", &failures);
}

#[test]
fn criterion_4_negative_controls() {
    let mut failures = Vec::new();
    for (g, want) in [(1, (Classification::NotAlmostGood, Some(1))), (0, (Classification::NotAlmostGood, Some(3)))] {
        let got = verdict_of(&v(2, &[]), g);
        if got != want {
            failures.push(format!("rank 2, no points, g={g}: got {got:?}, want {want:?}"));
        }
    }
    report("4", "rank 2 without flags fails at g=1 (margin 1) and g=0 (margin 3)", &failures);
}

#[test]
fn criterion_5_genus_zero_boundary() {
    let mut failures = Vec::new();
    for (a, want) in [
        (v(2, &[&[1], &[1], &[1]]), (Classification::AlmostGoodOnly, Some(0))),
        (v(2, &[&[1], &[1], &[1], &[1]]), (Classification::AlmostVeryGood, Some(-1))),
    ] {
        let got = verdict_of(&a, 0);
        if got != want {
            failures.push(format!("{a}: got {got:?}, want {want:?}"));
        }
    }
    report("5", "g=0: three points give margin 0, four points give margin -1", &failures);
}

#[test]
fn criterion_6_cross_check_identities() {
    let f = findings();
    let mut failures = f.cross_checks.clone();
    failures.extend(f.q_identity.iter().cloned());
    report("6", "genus-specific checks agree with decide; q(sum) splits bilinearly", &failures);
}

#[test]
fn criterion_7_structural_invariants() {
    let f = findings();
    let mut failures = f.rank_one_q.clone();
    failures.extend(f.euler_bound.iter().cloned());
    failures.extend(f.margin_decrease.iter().cloned());
    failures.extend(f.witnesses.iter().cloned());
    // exhaustive pairs for every weight type with at most two points
    for w in weight_types(2, 3) {
        let wt = WeightType::new(w.flag_lengths().to_vec()).unwrap();
        let all: Vec<DimVector> = (0..=4).flat_map(|r| vectors_of_rank(&wt, r)).collect();
        for a in &all {
            for b in &all {
                if euler_form(a, b).unwrap() > a.rank() * b.rank() {
                    failures.push(format!("<{a},{b}> exceeds rank product"));
                }
            }
        }
    }
    report("7", "q = 1 at rank 1, Euler bound, strictly falling margins, witnesses", &failures);
}

fn run_cli(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_parbun"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn parbun");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn criterion_8_cli_contract() {
    // Let the shared grid pass finish first so the timing below measures the
    // CLI alone rather than CPU contention with the other criteria.
    findings();
    let mut failures = Vec::new();
    let start = Instant::now();

    let (code, stdout, stderr) = run_cli(
        &["scan", "--max-rank", "4", "--max-points", "3", "--max-flag-len", "3", "--genus", "1,2,3", "--assert-remark38"],
        "",
    );
    if code != 0 || !stdout.contains("genus-regime check: pass") {
        failures.push(format!("scan --assert-remark38 exited {code}: {stderr}"));
    }
    println!("    scan over 3 x 14710 instances: {:.1?}", start.elapsed());

    let mut rng = StdRng::seed_from_u64(0x5eed);
    let grid = instances::<i64>(GRID);
    for (_, a) in grid.choose_multiple(&mut rng, 100) {
        let spec = serde_json::json!({
            "genus": rng.gen_range(0..=5u32),
            "weights": a.weight_type().flag_lengths(),
            "alpha": { "rank": a.rank(), "flags": a.rows() },
        });
        let (code, first, _) = run_cli(&["decide", "--format", "json"], &spec.to_string());
        let parsed: Report = match serde_json::from_str(&first) {
            Ok(r) if code == 0 => r,
            _ => {
                failures.push(format!("decide {spec} exited {code}"));
                continue;
            }
        };
        let echo = serde_json::to_string(&parsed.input).unwrap();
        let (code, second, _) = run_cli(&["decide", "--format", "json"], &echo);
        if code != 0 || second != first {
            failures.push(format!("round trip changed the report for {spec}"));
        }
    }

    // exit-code contract; no stdout on bad input
    for bad in [
        r#"{"genus":1,"weights":[2],"alpha":{"rank":1,"flags":[[2]]}}"#,
        r#"{"genus":1,"weights":[2],"alpha":{"rank":2,"flags":[]}}"#,
        r#"{"genus":1,"weights":[],"alpha":{"rank":0,"flags":[]}}"#,
        "{",
    ] {
        let (code, stdout, _) = run_cli(&["decide"], bad);
        if code != 1 || !stdout.is_empty() {
            failures.push(format!("bad input {bad} gave exit {code} with output {stdout:?}"));
        }
    }
    let (code, _, _) = run_cli(&["scan", "--max-rank", "0", "--max-points", "1", "--max-flag-len", "2", "--genus", "1"], "");
    if code != 1 {
        failures.push(format!("rank-0 scan bound gave exit {code}"));
    }

    let elapsed = start.elapsed();
    println!("    total CLI time {elapsed:.1?}");
    if elapsed > Duration::from_secs(60) {
        failures.push(format!("CLI checks took {elapsed:.1?}, limit 1 minute"));
    }
    report("8", "scan assertion passes; JSON reports round-trip on 100 random instances", &failures);
}
