//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use chainring::gh::alpha_equals_trimmed_a;
use chainring::gray::{hamming_weight, GrayMap};
use chainring::griesmer::griesmer_report;
use chainring::simplex::beta_length;
use chainring::structure;
use chainring::verify::{default_sweep, run_suite};
use chainring::weights::{
    empirical_distribution, gray_image_distribution, gray_image_parameters, order_form_weights,
    predicted_distribution, predicted_gray_parameters,
};
use chainring::{CodeFamily, Family, Limits, Ring, RingSpec, SimplexCode, Valuation, WeightKind};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ring(spec: &RingSpec) -> Arc<Ring> {
    Arc::new(Ring::new(spec.clone()).expect("sweep ring builds"))
}

fn code(spec: &RingSpec, family: CodeFamily, k: u32) -> SimplexCode {
    SimplexCode::new(ring(spec), family, k, &Limits::default()).expect("code builds")
}

/// Rings of the oracle sweep with their dimensions.
fn oracle_sweep() -> Vec<(RingSpec, Vec<u32>)> {
    vec![
        (RingSpec::zps(2, 2), vec![1, 2, 3]),
        (RingSpec::zps(2, 3), vec![1, 2]),
        (RingSpec::zps(3, 2), vec![1, 2]),
        (RingSpec::galois(2, 2, 2), vec![1, 2]),
        (RingSpec::fqu(2, 1, 2), vec![1, 2, 3]),
    ]
}

fn full_sweep() -> Vec<(RingSpec, Vec<u32>)> {
    default_sweep().instance.into_iter().map(|i| (i.ring, i.k)).collect()
}

fn oracle(family: CodeFamily, kinds: &[WeightKind], min_k: u32, sweep: &[(RingSpec, Vec<u32>)]) -> Check {
    let l = Limits::default();
    let mut runs = 0;
    for (spec, ks) in sweep {
        for &k in ks.iter().filter(|&&k| k >= min_k) {
            let c = code(spec, family, k);
            for &kind in kinds {
                let found = empirical_distribution(&c, kind, &l).map_err(|e| e.to_string())?;
                let want = predicted_distribution(family, kind, c.q() as u64, c.s(), k).map_err(|e| e.to_string())?;
                if found != want {
                    return Err(format!("{spec} {family} {kind} k={k}: found {found}, predicted {want}"));
                }
                runs += 1;
            }
        }
    }
    if runs == 0 {
        return Err("no instances".into());
    }
    Ok(())
}

fn criterion_1() -> Check {
    oracle(CodeFamily::Alpha, &[WeightKind::Hamming], 1, &oracle_sweep())
}

fn criterion_2() -> Check {
    oracle(CodeFamily::Beta, &[WeightKind::Hamming], 2, &oracle_sweep())?;
    let c = code(&RingSpec::zps(3, 2), CodeFamily::Beta, 2);
    let d = empirical_distribution(&c, WeightKind::Hamming, &Limits::default()).unwrap();
    let want = [(0, 1), (9, 8), (11, 72)].into_iter().collect();
    if c.n() != 12 || beta_length(3, 2, 2) != Some(12) || d.counts != want {
        return Err(format!("Z_9 beta k=2: n={}, distribution {d}", c.n()));
    }
    Ok(())
}

fn criterion_3() -> Check {
    let kinds = [WeightKind::Homogeneous];
    oracle(CodeFamily::Alpha, &kinds, 1, &oracle_sweep())?;
    oracle(CodeFamily::Beta, &kinds, 1, &oracle_sweep())?;
    oracle(CodeFamily::Alpha, &kinds, 1, &full_sweep())?;
    oracle(CodeFamily::Beta, &kinds, 1, &full_sweep())
}

fn criterion_4() -> Check {
    let l = Limits::default();
    let mut mismatches = 0u64;
    for (spec, ks) in full_sweep().into_iter().chain(oracle_sweep()) {
        let r = ring(&spec);
        let gray = GrayMap::new(&r);
        for x in r.elements() {
            if hamming_weight(&gray.map(x)) as u64 != r.homogeneous_weight(x) {
                mismatches += 1;
            }
        }
        for k in ks {
            for family in [CodeFamily::Alpha, CodeFamily::Beta] {
                if family == CodeFamily::Beta && k < 2 {
                    continue;
                }
                let want = predicted_gray_parameters(family, r.q() as u64, r.s(), k).map_err(|e| e.to_string())?;
                let c = code(&spec, family, k);
                let img = gray_image_distribution(&c, &l).map_err(|e| e.to_string())?;
                let found = (img.distribution.length, img.distinct, img.distribution.min_distance().map_err(|e| e.to_string())?);
                if found != (want.length, want.size, want.distance) {
                    return Err(format!("{spec} {family} k={k}: image {found:?}, predicted {want}"));
                }
                let hom = empirical_distribution(&c, WeightKind::Homogeneous, &l).unwrap();
                if hom.counts != img.distribution.counts {
                    return Err(format!("{spec} {family} k={k}: image distribution differs from homogeneous"));
                }
            }
        }
    }
    if mismatches > 0 {
        return Err(format!("{mismatches} isometry mismatches"));
    }
    let z4 = ring(&RingSpec::zps(2, 2));
    let a = gray_image_parameters(CodeFamily::Alpha, &z4, 1, true, &l).map_err(|e| e.to_string())?;
    let b = gray_image_parameters(CodeFamily::Beta, &z4, 2, true, &l).map_err(|e| e.to_string())?;
    if a.to_string() != "(8, 4, 4)" || b.to_string() != "(12, 16, 6)" {
        return Err(format!("Z_4 triples {a} and {b}"));
    }
    Ok(())
}

fn criterion_5() -> Check {
    let l = Limits::default();
    let lift = |r: chainring::Result<structure::Outcome>| r.map_err(|e| e.to_string()).and_then(|o| o);
    for (spec, ks) in full_sweep() {
        for k in ks {
            let tag = format!("{spec} k={k}");
            let a = code(&spec, CodeFamily::Alpha, k);
            let b = code(&spec, CodeFamily::Beta, k);
            structure::alpha_row_closed_form(a.generator()).map_err(|e| format!("{tag} row form: {e}"))?;
            structure::gamma_multiple_rows(a.generator()).map_err(|e| format!("{tag} gamma rows: {e}"))?;
            if k >= 2 {
                lift(structure::beta_row_content(b.generator())).map_err(|e| format!("{tag} beta rows: {e}"))?;
            }
            if let Some(m) = b.generator().first_column_multiple() {
                return Err(format!("{tag}: beta column {} is a multiple of column {}", m.i, m.j));
            }
            lift(structure::alpha_codeword_content(&a, &l)).map_err(|e| format!("{tag} alpha content: {e}"))?;
            lift(structure::beta_codeword_content(&b, &l)).map_err(|e| format!("{tag} beta content: {e}"))?;
            for c in [&a, &b] {
                let g = c.generator();
                lift(structure::check_valuation_census(g, &l)).map_err(|e| format!("{tag} census: {e}"))?;
                lift(structure::check_free(g, &l)).map_err(|e| format!("{tag} freeness: {e}"))?;
                if !chainring::simplex::codeword_valuation_check(g, &l).unwrap() {
                    return Err(format!("{tag}: codeword valuation formula fails"));
                }
            }
        }
    }
    Ok(())
}

fn criterion_6() -> Check {
    let l = Limits::default();
    for (spec, ks) in full_sweep() {
        for k in ks {
            for family in [CodeFamily::Alpha, CodeFamily::Beta] {
                let c = code(&spec, family, k);
                let d = empirical_distribution(&c, WeightKind::Hamming, &l).unwrap().min_distance().unwrap();
                let q = c.q() as u64;
                let report = griesmer_report(c.n() as u64, k, d, q);
                let want = match family {
                    CodeFamily::Beta => 0,
                    CodeFamily::Alpha => q.pow((c.s() - 1) * k) as i128,
                };
                if report.slack != want || report.optimal != (want == 0) {
                    return Err(format!("{spec} {family} k={k}: {report}, want slack {want}"));
                }
            }
        }
    }
    Ok(())
}

fn criterion_7() -> Check {
    let l = Limits::default();
    let mut checked = 0u64;
    for (spec, ks) in full_sweep().into_iter().filter(|(s, _)| s.family == Family::Zps) {
        let r = ring(&spec);
        for &k in &ks {
            for family in [CodeFamily::Alpha, CodeFamily::Beta] {
                let c = code(&spec, family, k);
                for cw in c.codewords(&l).unwrap().skip(1) {
                    let nu = match r.vector_valuation(&cw.word).unwrap() {
                        Valuation::Finite(v) => v,
                        Valuation::Infinity => return Err(format!("{spec}: zero codeword after the first")),
                    };
                    let of = order_form_weights(&c, &cw.word).map_err(|e| format!("{spec} {family} k={k}: {e}"))?;
                    let want = (r.p() as u64).pow(r.s() - nu);
                    if of.order != want || of.weight != hamming_weight(&cw.word) as u64 {
                        return Err(format!("{spec} {family} k={k}: ord {} want {want}", of.order));
                    }
                    checked += 1;
                }
            }
        }
    }
    for (spec, k) in [(RingSpec::zps(2, 2), 1), (RingSpec::zps(2, 2), 2), (RingSpec::zps(3, 2), 1)] {
        if !alpha_equals_trimmed_a(&ring(&spec), k, &l).map_err(|e| e.to_string())? {
            return Err(format!("{spec} k={k}: G^alpha differs from trimmed A"));
        }
    }
    if checked == 0 {
        return Err("no codewords checked".into());
    }
    Ok(())
}

fn criterion_8() -> Check {
    let l = Limits::default();
    let (z4, f2u) = (RingSpec::zps(2, 2), RingSpec::fqu(2, 1, 2));
    for k in 1..=3 {
        for family in [CodeFamily::Alpha, CodeFamily::Beta] {
            for kind in [WeightKind::Hamming, WeightKind::Homogeneous] {
                let record = |spec: &RingSpec| {
                    let d = empirical_distribution(&code(spec, family, k), kind, &l).unwrap();
                    let mut v: serde_json::Value = serde_json::from_str(&d.to_json(&spec.to_string(), family, k, None)).unwrap();
                    v.as_object_mut().unwrap().remove("ring");
                    v
                };
                if record(&z4) != record(&f2u) {
                    return Err(format!("{family} {kind} k={k}: records differ"));
                }
            }
        }
    }
    Ok(())
}

fn criterion_9() -> Check {
    let l = Limits::default();
    for k in 1..=3u32 {
        let c = code(&RingSpec::zps(3, 1), CodeFamily::Beta, k);
        let d = empirical_distribution(&c, WeightKind::Hamming, &l).unwrap();
        let found = (c.n() as u64, d.total(), d.min_distance().unwrap());
        let want = ((3u64.pow(k) - 1) / 2, 3u64.pow(k), 3u64.pow(k - 1));
        if found != want {
            return Err(format!("k={k}: (n, M, d) = {found:?}, want {want:?}"));
        }
    }
    Ok(())
}

fn criterion_runtime() -> Check {
    let start = Instant::now();
    let report = run_suite(&default_sweep(), &Limits::default());
    let elapsed = start.elapsed();
    if let Some(f) = report.failures().next() {
        return Err(format!("{} checks, first failure: {f}", report.results.len()));
    }
    if elapsed >= Duration::from_secs(120) {
        return Err(format!("took {elapsed:?}"));
    }
    println!("    default sweep: {} checks in {:.2?}", report.results.len(), elapsed);
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 alpha Hamming oracle equivalence", criterion_1),
        ("2 beta Hamming oracle equivalence", criterion_2),
        ("3 homogeneous oracle equivalence", criterion_3),
        ("4 Gray isometry and image parameters", criterion_4),
        ("5 structure lemmas", criterion_5),
        ("6 Griesmer verdicts", criterion_6),
        ("7 Z_(p^s) order form and trimmed A", criterion_7),
        ("8 ring independence Z_4 vs F_2[u]/(u^2)", criterion_8),
        ("9 classical ternary simplex anchor", criterion_9),
        ("10 default sweep under two minutes", criterion_runtime),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(()) => println!("PASS criterion {name}"),
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {name}: {e}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
