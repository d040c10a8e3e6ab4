//! Acceptance suite. Run with `cargo test --test acceptance -- --nocapture`
//! to see one PASS/FAIL line per criterion.

mod common;

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use wilfkit::cli::{verify, Filter};
use wilfkit::enumeration::Enumerator;
use wilfkit::verifiers::{Evidence, GasOutcome, GasSpec};
use wilfkit::{eta_closed_form, AperyPoset, LemmaId, Semigroup, WilfReport};

fn report(id: &str, title: &str, pass: bool, detail: String) {
    let tag = if pass { "PASS" } else { "FAIL" };
    println!("[{tag}] {id} {title}: {detail}");
    assert!(pass, "{id} {title}: {detail}");
}

#[test]
fn ac1_worked_example() {
    let start = Instant::now();
    let s = Semigroup::new(&[7, 8, 10, 19]).unwrap();
    let poset = AperyPoset::new(&s);
    let t = s.type_number().unwrap();
    let elapsed = start.elapsed();

    let nu = s.embedding_dimension();
    let pass = s.apery() == [0, 8, 10, 16, 18, 19, 20]
        && poset.max_elements == [16, 18, 19, 20]
        && s.max_apery() == [16, 18, 19, 20]
        && t == 4
        && poset.type_number() == 4
        && nu == 4
        && s.multiplicity() - nu as u64 == 3
        && elapsed < Duration::from_millis(1);
    report(
        "AC1",
        "worked example <7,8,10,19>",
        pass,
        format!(
            "Ap={:?} maxAp={:?} t={t} nu={nu} m-nu={} in {elapsed:?}",
            s.apery(),
            poset.max_elements,
            s.multiplicity() - nu as u64
        ),
    );
}

#[test]
fn ac2_triple_route_wilf_equality() {
    let start = Instant::now();
    let (checked, mismatches) = Enumerator::new(20)
        .fold(
            || (0u64, 0u64),
            |acc, node| {
                let r = WilfReport::new(&node.semigroup)?;
                acc.0 += 1;
                if r.slack_direct != r.slack_interval || r.slack_direct != r.slack_epsilon {
                    acc.1 += 1;
                }
                Ok(())
            },
            |a, b| (a.0 + b.0, a.1 + b.1),
        )
        .unwrap();
    let elapsed = start.elapsed();
    report(
        "AC2",
        "three Wilf slacks agree, genus <= 20",
        mismatches == 0 && elapsed < Duration::from_secs(120),
        format!("{checked} semigroups, {mismatches} mismatches in {elapsed:?}"),
    );
}

#[test]
fn ac3_eta_closed_form() {
    let (checked, mismatches) = Enumerator::new(18)
        .fold(
            || (0u64, 0u64),
            |acc, node| {
                let s = &node.semigroup;
                if s.is_naturals() {
                    return Ok(());
                }
                acc.0 += 1;
                let m = s.multiplicity() as usize;
                let table = s.small_members();
                let last = s.frobenius() as usize / m;
                let mut direct = vec![0u64; m];
                for k in 0..=last {
                    let c = table.count_range(k * m, (k + 1) * m);
                    if c < m {
                        direct[c] += 1;
                    }
                }
                for (j, &count) in direct.iter().enumerate().skip(1) {
                    if eta_closed_form(s, j)? != count {
                        acc.1 += 1;
                    }
                }
                Ok(())
            },
            |a, b| (a.0 + b.0, a.1 + b.1),
        )
        .unwrap();
    report(
        "AC3",
        "eta closed form equals direct count, genus <= 18",
        mismatches == 0 && checked > 0,
        format!("{checked} semigroups, {mismatches} mismatches"),
    );
}

#[test]
fn ac4_theorem_checkers() {
    let ids = [
        LemmaId::Nok,
        LemmaId::Make,
        LemmaId::Box,
        LemmaId::Mos,
        LemmaId::God,
        LemmaId::Fail,
        LemmaId::Unfor,
        LemmaId::TypeBound,
    ];
    let start = Instant::now();
    let summary = Enumerator::new(22)
        .run(|s, acc| {
            let ev = Evidence::new(s)?;
            for f in ev.check_all(&ids)? {
                acc.record(&f);
            }
            Ok(())
        })
        .unwrap();
    let elapsed = start.elapsed();
    let detail: Vec<String> = summary
        .checker_stats
        .iter()
        .map(|(id, s)| format!("{id} {}/{}", s.hypothesis_met, s.counterexamples.len()))
        .collect();
    report(
        "AC4",
        "zero counterexamples, genus <= 22",
        summary.counterexample_count() == 0
            && summary.checker_stats.len() == ids.len()
            && elapsed < Duration::from_secs(600),
        format!(
            "{} semigroups; hypothesis-met/counterexamples: {} in {elapsed:?}",
            summary.total(),
            detail.join(", ")
        ),
    );
}

#[test]
fn ac5_wilf_up_to_genus_25() {
    let start = Instant::now();
    let summary = verify(&Enumerator::new(25).jobs(4), &[], Filter::All).unwrap();
    let elapsed = start.elapsed();
    let min = summary.wilf_min_slack.clone().unwrap();
    report(
        "AC5",
        "Wilf holds, genus <= 25",
        min.slack >= 0 && elapsed < Duration::from_secs(900),
        format!(
            "{} semigroups, min slack {} at {:?} in {elapsed:?}",
            summary.total(),
            min.slack,
            min.witness
        ),
    );
}

#[test]
fn ac6_genus_counts() {
    const EXPECTED: [u64; 11] = [1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204];
    let oracle = common::genus_counts_oracle(10);
    let summary = wilfkit::enumerate(10, |_, _| Ok(())).unwrap();
    report(
        "AC6",
        "genus counts up to 10",
        oracle == EXPECTED && summary.genus_counts == EXPECTED,
        format!("tree {:?}, oracle {:?}", summary.genus_counts, oracle),
    );
}

#[test]
fn ac7_gas_type_formula() {
    let start = Instant::now();
    let mut checked = 0u64;
    let mut failures = Vec::new();
    for h in 1..=4 {
        for spec in GasSpec::grid((2, 60), (h, h), (1, 120), None) {
            if spec.d > 2 * spec.m {
                continue;
            }
            checked += 1;
            let o = GasOutcome::new(&spec).unwrap();
            let formula = spec.m - (spec.m - 2) / spec.l * spec.l - 1;
            if o.t_computed as u64 != formula || o.t_computed >= o.nu {
                failures.push(spec);
            }
        }
    }
    let elapsed = start.elapsed();
    report(
        "AC7",
        "generalized arithmetic sequence type formula",
        failures.is_empty() && checked > 0 && elapsed < Duration::from_secs(60),
        format!(
            "{checked} specs, {} failures {:?} in {elapsed:?}",
            failures.len(),
            &failures[..failures.len().min(3)]
        ),
    );
}

#[test]
fn ac8_large_multiplicity_performance() {
    let m = 100_000u64;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
    let gens = loop {
        let mut gens = vec![m];
        gens.extend((0..19).map(|_| rng.gen_range(m + 1..10 * m)));
        if gens.iter().fold(0, |a, &b| gcd(a, b)) == 1 {
            break gens;
        }
    };

    let start = Instant::now();
    let s = Semigroup::new(&gens).unwrap();
    let f = s.frobenius();
    let conductor = s.conductor();
    let genus = s.genus();
    let n = s.n_of();
    let t = s.type_number().unwrap();
    let pf = s.pseudo_frobenius().unwrap();
    let min_ap = s.min_apery().len();
    let max_ap = s.max_apery();
    let elapsed = start.elapsed();

    let consistent = s.apery().len() as u64 == m
        && genus + n == conductor
        && pf.len() == t
        && max_ap.len() == t
        && pf.last() == Some(&f)
        && min_ap + 1 == s.embedding_dimension();
    report(
        "AC8",
        "20 generators, m = 1e5, construct + invariants",
        consistent && elapsed < Duration::from_secs(1),
        format!(
            "nu={} f={f} genus={genus} t={t} in {elapsed:?}",
            s.embedding_dimension()
        ),
    );
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
