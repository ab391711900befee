//! The verification suite: every structural and weight check over a sweep of
//! rings and dimensions.
//!
//! Sweep files are TOML:
//!
//! ```toml
//! [[instance]]
//! family = "zps"
//! p = 2
//! s = 2
//! k = [1, 2, 3]
//! ```

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gh::alpha_equals_trimmed_a;
use crate::gray::{check_generalized_hadamard, hamming_weight, GrayMap};
use crate::griesmer::simplex_griesmer;
use crate::ring::{Family, Ring, RingSpec};
use crate::simplex::{codeword_valuation_check, CodeFamily, SimplexCode};
use crate::structure::{self, Outcome};
use crate::valuation::Valuation;
use crate::weights::{
    empirical_distribution, gray_image_parameters, order_form_weights, predicted_distribution, WeightKind,
};
use crate::Limits;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepInstance {
    #[serde(flatten)]
    pub ring: RingSpec,
    pub k: Vec<u32>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sweep {
    #[serde(default)]
    pub instance: Vec<SweepInstance>,
}

impl Sweep {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("sweep serializes")
    }

    pub fn is_empty(&self) -> bool {
        self.instance.iter().all(|i| i.k.is_empty())
    }
}

/// `Z_4` (k <= 3), `Z_8` (k <= 2), `Z_9` (k <= 2), `Z_27` (k = 1), `GR(4,2)`
/// (k <= 2), `F_2[u]/(u^2)` (k <= 3), `F_4[u]/(u^2)` (k = 1), `F_3` (k <= 3).
pub fn default_sweep() -> Sweep {
    let inst = |ring, k: &[u32]| SweepInstance { ring, k: k.to_vec() };
    Sweep {
        instance: vec![
            inst(RingSpec::zps(2, 2), &[1, 2, 3]),
            inst(RingSpec::zps(2, 3), &[1, 2]),
            inst(RingSpec::zps(3, 2), &[1, 2]),
            inst(RingSpec::zps(3, 3), &[1]),
            inst(RingSpec::galois(2, 2, 2), &[1, 2]),
            inst(RingSpec::fqu(2, 1, 2), &[1, 2, 3]),
            inst(RingSpec::fqu(2, 2, 2), &[1]),
            inst(RingSpec::zps(3, 1), &[1, 2, 3]),
        ],
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub instance: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} [{}]", if self.passed { "PASS" } else { "FAIL" }, self.name, self.instance)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub results: Vec<CheckResult>,
    pub warnings: Vec<String>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| !r.passed)
    }

    fn record(&mut self, name: &str, instance: &str, outcome: Result<Outcome>) {
        let (passed, detail) = match outcome {
            Ok(Ok(())) => (true, String::new()),
            Ok(Err(d)) => (false, d),
            Err(e) => (false, e.to_string()),
        };
        self.results.push(CheckResult { name: name.into(), instance: instance.into(), passed, detail });
    }
}

fn expect(cond: bool, detail: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(detail())
    }
}

/// Commutative ring axioms, exhaustively for rings of at most 64 elements
/// (pairs only above that).
pub fn ring_axioms(ring: &Ring) -> Outcome {
    let elems: Vec<_> = ring.elements().collect();
    let (zero, one) = (ring.zero(), ring.one());
    for &a in &elems {
        expect(ring.add(a, zero) == a && ring.mul(a, one) == a, || format!("identity fails at {}", a.rank()))?;
        expect(ring.add(a, ring.neg(a)) == zero, || format!("negation fails at {}", a.rank()))?;
        for &b in &elems {
            expect(ring.add(a, b) == ring.add(b, a), || format!("a+b != b+a at {},{}", a.rank(), b.rank()))?;
            expect(ring.mul(a, b) == ring.mul(b, a), || format!("ab != ba at {},{}", a.rank(), b.rank()))?;
            if elems.len() > 64 {
                continue;
            }
            for &c in &elems {
                let (ar, br, cr) = (a.rank(), b.rank(), c.rank());
                expect(ring.add(ring.add(a, b), c) == ring.add(a, ring.add(b, c)), || format!("+ assoc at {ar},{br},{cr}"))?;
                expect(ring.mul(ring.mul(a, b), c) == ring.mul(a, ring.mul(b, c)), || format!("* assoc at {ar},{br},{cr}"))?;
                expect(
                    ring.mul(a, ring.add(b, c)) == ring.add(ring.mul(a, b), ring.mul(a, c)),
                    || format!("distributivity at {ar},{br},{cr}"),
                )?;
            }
        }
    }
    Ok(())
}

/// `nu(xy) = nu(x) + nu(y)`, `nu(x+y) >= min`, `x = gamma^{nu(x)} u` for a unit
/// `u`, `|<gamma^j>| = q^{s-j}`, and units are exactly the valuation-0 elements.
pub fn valuation_properties(ring: &Ring) -> Outcome {
    let s = ring.s();
    let elems: Vec<_> = ring.elements().collect();
    let units: Vec<_> = elems.iter().copied().filter(|&x| ring.is_unit(x)).collect();
    for &x in &elems {
        let vx = ring.valuation(x);
        expect((vx == Valuation::Finite(0)) == ring.is_unit(x), || format!("unit test disagrees at {}", x.rank()))?;
        if let Valuation::Finite(v) = vx {
            let g = ring.gamma_pow(v);
            expect(units.iter().any(|&u| ring.mul(g, u) == x), || format!("{} is not gamma^{v} times a unit", x.rank()))?;
        }
        for &y in &elems {
            let (vy, r) = (ring.valuation(y), (x.rank(), y.rank()));
            expect(ring.valuation(ring.mul(x, y)) == vx.saturating_add(vy, s), || format!("nu(xy) at {r:?}"))?;
            expect(ring.valuation(ring.add(x, y)) >= vx.min(vy), || format!("nu(x+y) at {r:?}"))?;
        }
    }
    for j in 0..s {
        let size = ring.ideal_elements(j).map_err(|e| e.to_string())?.len() as u64;
        let want = (ring.q() as u64).pow(s - j);
        expect(size == want, || format!("|<gamma^{j}>| = {size}, want {want}"))?;
    }
    Ok(())
}

/// `w_H(Phi(x)) = w_Hom(x)` for every element and `Phi` injective.
pub fn gray_isometry(ring: &Ring) -> Outcome {
    let gray = GrayMap::new(ring);
    let mut images = Vec::with_capacity(ring.size() as usize);
    for x in ring.elements() {
        let img = gray.map(x);
        let (h, w) = (hamming_weight(&img) as u64, ring.homogeneous_weight(x));
        expect(h == w, || format!("element {}: w_H(Phi) = {h}, w_Hom = {w}", x.rank()))?;
        images.push(img);
    }
    images.sort();
    images.dedup();
    expect(images.len() == ring.size() as usize, || "Gray map is not injective".into())
}

fn matches(found: Result<crate::WeightDistribution>, want: Result<crate::WeightDistribution>) -> Result<Outcome> {
    let (found, want) = (found?, want?);
    Ok(match want.first_difference(&found) {
        None if want == found => Ok(()),
        None => Err("lengths differ".into()),
        Some((w, a, b)) => Err(format!("weight {w}: predicted {a}, found {b}")),
    })
}

/// Runs every check on every instance of the sweep.
pub fn run_suite(sweep: &Sweep, limits: &Limits) -> SuiteReport {
    let mut report = SuiteReport::default();
    if sweep.is_empty() {
        report.warnings.push("sweep is empty; no checks run".into());
        return report;
    }
    for inst in &sweep.instance {
        let label = inst.ring.to_string();
        let ring = match Ring::with_cap(inst.ring.clone(), limits.max_elements) {
            Ok(r) => Arc::new(r),
            Err(e) => {
                report.record("ring construction", &label, Err(e));
                continue;
            }
        };
        run_ring_checks(&ring, &label, &mut report);
        for &k in &inst.k {
            run_code_checks(&ring, k, &label, limits, &mut report);
        }
    }
    report
}

fn run_ring_checks(ring: &Arc<Ring>, label: &str, report: &mut SuiteReport) {
    report.record("ring axioms", label, Ok(ring_axioms(ring)));
    report.record("valuation properties", label, Ok(valuation_properties(ring)));
    report.record("gray isometry", label, Ok(gray_isometry(ring)));
    if ring.s() >= 2 {
        report.record("generalized Hadamard", label, Ok(check_generalized_hadamard(ring)));
    }
}

fn run_code_checks(ring: &Arc<Ring>, k: u32, label: &str, limits: &Limits, report: &mut SuiteReport) {
    let (q, s) = (ring.q() as u64, ring.s());
    let mut dmin = [None, None];
    for family in [CodeFamily::Alpha, CodeFamily::Beta] {
        let tag = format!("{label} {family} k={k}");
        let code = match SimplexCode::new(ring.clone(), family, k, limits) {
            Ok(c) => c,
            Err(e) => {
                report.record("construction", &tag, Err(e));
                continue;
            }
        };
        let g = code.generator();
        match family {
            CodeFamily::Alpha => {
                report.record("row closed form", &tag, Ok(structure::alpha_row_closed_form(g)));
                report.record("gamma-multiple rows", &tag, Ok(structure::gamma_multiple_rows(g)));
                report.record("codeword content", &tag, structure::alpha_codeword_content(&code, limits));
                report.record("zero column present", &tag, Ok(expect(!g.columns_distinct(), || "no column multiple found".into())));
            }
            CodeFamily::Beta => {
                if k >= 2 {
                    report.record("row content", &tag, structure::beta_row_content(g));
                }
                report.record("codeword content", &tag, structure::beta_codeword_content(&code, limits));
                let distinct = match g.first_column_multiple() {
                    None => Ok(()),
                    Some(m) => Err(format!("column {} = {} * column {}", m.i, ring.serialize_element(m.lambda), m.j)),
                };
                report.record("column distinctness", &tag, Ok(distinct));
            }
        }
        report.record("valuation census", &tag, structure::check_valuation_census(g, limits));
        report.record("free type", &tag, structure::check_free(g, limits));
        report.record(
            "codeword valuation",
            &tag,
            codeword_valuation_check(g, limits).map(|ok| expect(ok, || "nu(c) != min nu(alpha_i)".into())),
        );
        for kind in [WeightKind::Hamming, WeightKind::Homogeneous] {
            let found = empirical_distribution(&code, kind, limits);
            if kind == WeightKind::Hamming {
                if let Ok(d) = &found {
                    dmin[family as usize] = d.min_distance().ok();
                }
            }
            let want = predicted_distribution(family, kind, q, s, k);
            report.record(&format!("{kind} distribution"), &tag, matches(found, want));
        }
        if family == CodeFamily::Alpha || k >= 2 {
            report.record("gray image", &tag, gray_image_parameters(family, ring, k, true, limits).map(|_| Ok(())));
        }
        report.record(
            "griesmer",
            &tag,
            simplex_griesmer(family, q, s, k).map(|r| match family {
                CodeFamily::Beta => expect(r.optimal, || format!("slack {}", r.slack)),
                CodeFamily::Alpha => {
                    let want = q.pow((s - 1) * k) as i128;
                    expect(r.slack == want, || format!("slack {}, want {want}", r.slack))
                }
            }),
        );
        if ring.family() == Family::Zps {
            report.record("order form", &tag, order_form_check(&code, limits));
        }
    }
    let tag = format!("{label} k={k}");
    if let [Some(a), Some(b)] = dmin {
        let outcome = if q == 2 && s == 1 {
            expect(a == b, || format!("d_beta = {b}, d_alpha = {a}, want equal"))
        } else {
            expect(b < a, || format!("d_beta = {b}, d_alpha = {a}, want d_beta < d_alpha"))
        };
        report.record("distance comparison", &tag, Ok(outcome));
    }
    if ring.family() == Family::Zps {
        report.record(
            "alpha equals trimmed A",
            &tag,
            alpha_equals_trimmed_a(ring, k, limits).map(|ok| expect(ok, || "matrices differ".into())),
        );
    }
}

fn order_form_check(code: &SimplexCode, limits: &Limits) -> Result<Outcome> {
    for cw in code.codewords(limits)?.skip(1) {
        if let Err(e) = order_form_weights(code, &cw.word) {
            let coeffs: Vec<u32> = cw.coefficients.iter().map(|x| x.rank()).collect();
            return Ok(Err(format!("coefficients {coeffs:?}: {e}")));
        }
    }
    Ok(Ok(()))
}
