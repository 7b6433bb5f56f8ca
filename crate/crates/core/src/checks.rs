//! Verification suites. Each check returns a named pass/fail record with a
//! JSON detail; failing checks carry a serialized counterexample.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::lattice::{tableau_from_lattice, verify_bijection, z_of};
use crate::pluecker::{
    relation_from_terms, restrict_to_richardson, sample_richardson_point_with, shuffle_terms, MinorTable, Monomial,
    PlueckerPolynomial, PointMatrix, ShuffleKind,
};
use crate::rings::{basis_a, basis_r, hilbert, multiply_r, phi, phi_element, InvariantElement};
use crate::setup::{all_index_tuples, tuple_leq, vanishes_on_richardson, IndexTuple, QuotientSetup};
use crate::straighten::{
    straighten_invariant_product, straighten_invariant_product_with, straighten_p1_with, straighten_p2_with, Regime,
    Schedule,
};
use crate::tableaux::{
    box_partition, check_boundary_steps, check_box_structure, enumerate_invariant_tableaux, is_t_invariant_via_boxes,
    Tableau,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub status: Status,
    pub detail: Value,
}

impl CheckResult {
    fn new(check: &str, ok: bool, detail: Value) -> Self {
        Self { check: check.into(), status: if ok { Status::Pass } else { Status::Fail }, detail }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Independent generator for one named stream of a run.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn richardson_minors(s: &QuotientSetup, samples: usize, seed: u64, stream: u64) -> crate::Result<Vec<MinorTable>> {
    let mut rng = stream_rng(seed, stream);
    (0..samples).map(|_| sample_richardson_point_with(s, &mut rng).map(|x| MinorTable::new(&x))).collect()
}

const MAX_REPORTED: usize = 5;

fn capped(mut failures: Vec<Value>) -> (usize, Vec<Value>) {
    let total = failures.len();
    failures.truncate(MAX_REPORTED);
    (total, failures)
}

/// Setup invariants, the interval disjointness facts, and the equivalence
/// of the vanishing predicate with `v_l ≤ τ ≤ w` over all of `I(r, n)`.
pub fn check_setup(s: &QuotientSetup) -> CheckResult {
    let mut bad = s.invariant_violations();
    bad.extend(s.disjointness_violations());
    for tau in all_index_tuples(s.r(), s.n()) {
        let in_interval = tuple_leq(s.vl(), &tau) && tuple_leq(&tau, s.w());
        if vanishes_on_richardson(&tau, s) == in_interval {
            bad.push(format!("vanishing predicate disagrees with the order at {tau}"));
        }
    }
    CheckResult::new("setup", bad.is_empty(), json!({ "violations": bad }))
}

/// Both round trips of `P_d ↔ ST(λ_d)` and the three counts, `1 <= d <= d_max`.
pub fn check_bijection(s: &QuotientSetup, d_max: usize) -> CheckResult {
    let reports: Vec<_> = (1..=d_max).map(|d| verify_bijection(s, d)).collect();
    let ok = reports.iter().all(|r| r.passed());
    let detail: Vec<Value> = reports
        .iter()
        .map(|r| {
            json!({
                "d": r.d, "pd": r.pd_count, "st": r.st_count, "formula": r.formula,
                "failures": r.failures.iter().take(MAX_REPORTED).collect_vec(),
            })
        })
        .collect();
    CheckResult::new("bijection", ok, json!(detail))
}

/// Facts about every enumerated member of `ST(λ_d)`, `1 <= d <= d_max`:
/// the intermediate steps of the box-wise characterisation, the box
/// positions of each value range, agreement of the two membership tests,
/// the split into P1/P2 halves, and uniqueness given the `B_{i,2}` contents.
pub fn check_tableau_structure(s: &QuotientSetup, d_max: usize) -> Vec<CheckResult> {
    let mut boundary = Vec::new();
    let mut boxes = Vec::new();
    let mut equivalence = Vec::new();
    let mut split = Vec::new();
    let mut members = 0usize;
    for d in 1..=d_max {
        let st = enumerate_invariant_tableaux(s, d);
        let part = box_partition(s, d);
        let mut lower_contents = BTreeSet::new();
        for g in &st {
            members += 1;
            let rep = check_boundary_steps(g, s, d);
            if !rep.passed() {
                boundary.push(json!({ "d": d, "grid": g, "failures": rep.failures }));
            }
            let bad = check_box_structure(g, s, d);
            if !bad.is_empty() {
                boxes.push(json!({ "d": d, "grid": g, "failures": bad }));
            }
            if !is_t_invariant_via_boxes(g, s, d) {
                equivalence.push(json!({ "d": d, "grid": g }));
            }
            match g.split(s, d) {
                Ok((g1, g2)) => {
                    let zero = z_of(&g2, s).flat().iter().all(|&x| x == 0);
                    if !g1.satisfies_p1(s) || !g2.satisfies_p2(s) || !zero || z_of(&g1, s) != z_of(g, s) {
                        split.push(json!({ "d": d, "grid": g }));
                    }
                }
                Err(e) => split.push(json!({ "d": d, "grid": g, "error": e.to_string() })),
            }
            let contents: Vec<Vec<usize>> = (1..s.r())
                .map(|i| {
                    let b = part.b2(i);
                    b.cols.iter().map(|j| g.get(b.row, j)).collect()
                })
                .collect();
            lower_contents.insert(contents);
        }
        if lower_contents.len() != st.len() {
            boxes.push(json!({ "d": d, "failure": "two members share every B_(i,2) filling" }));
        }
    }
    let mk = |name: &str, fails: Vec<Value>| {
        let (total, shown) = capped(fails);
        CheckResult::new(name, total == 0, json!({ "members": members, "failures": total, "examples": shown }))
    };
    vec![
        mk("boundary_steps", boundary),
        mk("box_structure", boxes),
        mk("membership_equivalence", equivalence),
        mk("split", split),
    ]
}

/// Deliberate corruption of the relation harness, used to confirm that the
/// oracle catches a wrong sign.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SignFault {
    /// Index of the relation (in enumeration order) to corrupt.
    pub relation: usize,
}

/// Every valid `(alpha, beta, k)` in `G(r, n)`: `alpha_k > beta_k`.
pub fn all_relation_triples(r: usize, n: usize) -> Vec<(IndexTuple, IndexTuple, usize)> {
    let tuples = all_index_tuples(r, n);
    let mut out = Vec::new();
    for alpha in &tuples {
        for beta in &tuples {
            for k in 1..=r {
                if alpha.at(k) > beta.at(k) {
                    out.push((alpha.clone(), beta.clone(), k));
                }
            }
        }
    }
    out
}

/// Every shuffle relation of `G(r, n)` must evaluate to exactly zero on
/// `samples` random full-rank integer matrices.
pub fn check_oracle_soundness(r: usize, n: usize, samples: usize, seed: u64, fault: Option<SignFault>) -> CheckResult {
    let name = "oracle_soundness";
    let mut rng = stream_rng(seed, 4);
    let points: Vec<PointMatrix> = match (0..samples).map(|_| PointMatrix::random(r, n, &mut rng)).collect() {
        Ok(p) => p,
        Err(e) => return CheckResult::new(name, false, json!({ "grassmannian": [r, n], "error": e.to_string() })),
    };
    let tables: Vec<MinorTable> = points.iter().map(MinorTable::new).collect();
    let triples = all_relation_triples(r, n);
    let mut evaluated = 0usize;
    for (idx, (alpha, beta, k)) in triples.iter().enumerate() {
        let mut terms = shuffle_terms(alpha, beta, *k).expect("triple satisfies alpha_k > beta_k");
        if fault.is_some_and(|f| f.relation == idx) {
            if let Some(t) = terms.iter_mut().find(|t| t.kind != ShuffleKind::Identity && !t.has_repeat()) {
                t.coef = -t.coef;
            } else if let Some(t) = terms.first_mut() {
                t.coef = -t.coef;
            }
        }
        let rel = relation_from_terms(&terms);
        for (x, minors) in points.iter().zip(&tables) {
            evaluated += 1;
            let value = rel.evaluate_with(minors);
            if !value.is_zero() {
                return CheckResult::new(
                    name,
                    false,
                    json!({
                        "grassmannian": [r, n],
                        "counterexample": {
                            "alpha": alpha, "beta": beta, "k": k,
                            "relation": rel.to_json(),
                            "matrix": x,
                            "value": value.to_string(),
                        }
                    }),
                );
            }
        }
    }
    CheckResult::new(
        name,
        true,
        json!({ "grassmannian": [r, n], "relations": triples.len(), "evaluations": evaluated }),
    )
}

/// Column pairs `(alpha, beta)` with every entry of row `i` inside `range(i)`.
fn regime_columns(s: &QuotientSetup, regime: Regime) -> Vec<IndexTuple> {
    (1..=s.r())
        .map(|i| match regime {
            Regime::P1 => s.p1_range(i).iter(),
            Regime::P2 => s.p2_range(i).iter(),
        })
        .multi_cartesian_product()
        .filter_map(|v| IndexTuple::new(v, s.n()).ok())
        .collect()
}

/// The binomial collapse of shuffle relations on `X^{v_l}_w`: for every
/// two-column column-standard P1 (resp. P2) tableau with an inversion, the
/// relation at the first (resp. last) inverted row keeps only the identity
/// and the exchange of the inverted pair, and the surviving binomial
/// vanishes on sampled points of `X^{v_l}_w`.
pub fn check_binomial_law(s: &QuotientSetup, samples: usize, seed: u64) -> CheckResult {
    let minors = match richardson_minors(s, samples, seed, 5) {
        Ok(m) => m,
        Err(e) => return CheckResult::new("binomial_law", false, json!({ "error": e.to_string() })),
    };
    let mut pairs = [0usize; 2];
    let mut failures = Vec::new();
    for (slot, regime) in [Regime::P1, Regime::P2].into_iter().enumerate() {
        let columns = regime_columns(s, regime);
        for alpha in &columns {
            for beta in &columns {
                let inverted = (1..=s.r()).filter(|&i| alpha.at(i) > beta.at(i));
                let k = match regime {
                    Regime::P1 => inverted.min(),
                    Regime::P2 => inverted.max(),
                };
                let Some(k) = k else { continue };
                pairs[slot] += 1;
                let terms = shuffle_terms(alpha, beta, k).expect("inversion at k");
                let culprits: Vec<_> = terms
                    .iter()
                    .filter(|t| t.kind == ShuffleKind::Other && !t.has_repeat() && !t.vanishes_on(s))
                    .map(|t| json!({ "alpha_sigma": t.alpha_sigma, "beta_sigma": t.beta_sigma }))
                    .collect();
                let trans = terms.iter().find(|t| t.kind == ShuffleKind::Transposition).expect("always present");
                let restricted = restrict_to_richardson(&relation_from_terms(&terms), s);
                // p_α p_β - p_{α^σ} p_{β^σ}
                let mut binomial = PlueckerPolynomial::zero();
                binomial.add_term(Monomial::new(vec![alpha.clone(), beta.clone()]), 1);
                if let Some(m) = trans.monomial() {
                    binomial.add_term(m, -1);
                }
                let shape_ok = restricted == binomial;
                let nonzero_at = minors.iter().position(|m| !binomial.evaluate_with(m).is_zero());
                if !culprits.is_empty() || !shape_ok || nonzero_at.is_some() {
                    failures.push(json!({
                        "regime": regime, "alpha": alpha, "beta": beta, "k": k,
                        "surviving_other_terms": culprits,
                        "restricted": restricted.to_json(),
                        "nonzero_sample": nonzero_at,
                    }));
                }
            }
        }
    }
    let (total, shown) = capped(failures);
    CheckResult::new(
        "binomial_law",
        total == 0,
        json!({ "p1_pairs": pairs[0], "p2_pairs": pairs[1], "samples": samples, "failures": total, "examples": shown }),
    )
}

fn f_value(g: &Tableau, m: &MinorTable) -> num_bigint::BigInt {
    Monomial::of_tableau(g).expect("column standard").evaluate_with(m)
}

/// For all pairs from `ST(λ_1) × ST(λ_1)`: the straightened product is an
/// invariant tableau, `z` adds, `f_{Γ1} f_{Γ2} = f_{s(Γ1Γ2)}` on sampled
/// points of `X^{v_l}_w` (with at least one nonzero sample), and the result
/// does not depend on the exchange schedule.
pub fn check_straightening(s: &QuotientSetup, samples: usize, seed: u64) -> CheckResult {
    let minors = match richardson_minors(s, samples, seed, 6) {
        Ok(m) => m,
        Err(e) => return CheckResult::new("straightening", false, json!({ "error": e.to_string() })),
    };
    let st = enumerate_invariant_tableaux(s, 1);
    let mut failures = Vec::new();
    let mut pairs = 0;
    for (g1, g2) in st.iter().cartesian_product(&st) {
        pairs += 1;
        let out = match straighten_invariant_product(g1, g2, s, 1, 1) {
            Ok(t) => t,
            Err(e) => {
                failures.push(json!({ "g1": g1, "g2": g2, "error": e.to_string() }));
                continue;
            }
        };
        let mut problems = Vec::new();
        if !out.is_semistandard() || !out.is_t_invariant(s, 2) {
            problems.push("not a member of ST(λ_2)".to_string());
        }
        if z_of(&out, s) != z_of(g1, s).add(&z_of(g2, s)) {
            problems.push("z is not additive".into());
        }
        let mut nonzero = false;
        for (idx, m) in minors.iter().enumerate() {
            let lhs = f_value(g1, m) * f_value(g2, m);
            let rhs = f_value(&out, m);
            nonzero |= !rhs.is_zero();
            if lhs != rhs {
                problems.push(format!("f mismatch at sample {idx}: {lhs} vs {rhs}"));
                break;
            }
        }
        if !nonzero {
            problems.push("f_s vanished on every sample".into());
        }
        match straighten_invariant_product_with(g1, g2, s, 1, 1, Schedule::RightmostFirst) {
            Ok(alt) if alt == out => {}
            Ok(alt) => problems.push(format!("schedule dependence:\n{out}\nvs\n{alt}")),
            Err(e) => problems.push(e.to_string()),
        }
        if !problems.is_empty() {
            failures.push(json!({ "g1": g1, "g2": g2, "result": out, "problems": problems }));
        }
    }
    let (total, shown) = capped(failures);
    CheckResult::new(
        "straightening",
        total == 0,
        json!({ "pairs": pairs, "samples": samples, "failures": total, "examples": shown }),
    )
}

/// Straightening of arbitrary column-standard P1/P2 tableaux: the output is
/// the row-wise sort, independent of schedule, within the exchange bound.
pub fn check_row_straightening(s: &QuotientSetup, width: usize, trials: usize, seed: u64) -> CheckResult {
    use rand::seq::SliceRandom;
    let mut rng = stream_rng(seed, 7);
    let mut failures = Vec::new();
    for regime in [Regime::P1, Regime::P2] {
        let columns = regime_columns(s, regime);
        if columns.is_empty() {
            continue;
        }
        for _ in 0..trials {
            let picked: Vec<Vec<usize>> =
                (0..width).map(|_| columns.choose(&mut rng).unwrap().entries().to_vec()).collect();
            let g = Tableau::from_columns(s.r(), &picked).expect("uniform columns");
            let expected = Tableau::new(g.grid().iter().map(|row| row.iter().copied().sorted().collect()).collect())
                .expect("rectangular");
            let run = |schedule| match regime {
                Regime::P1 => straighten_p1_with(&g, s, schedule),
                Regime::P2 => straighten_p2_with(&g, s, schedule),
            };
            let bound = s.r() * width * width;
            match (run(Schedule::LeftmostFirst), run(Schedule::RightmostFirst)) {
                (Ok((a, sa)), Ok((b, sb)))
                    if a == expected && b == expected && sa <= bound && sb <= bound && z_of(&a, s) == z_of(&g, s) => {}
                (a, b) => failures.push(json!({
                    "regime": regime, "input": g,
                    "leftmost": format!("{a:?}"), "rightmost": format!("{b:?}"),
                })),
            }
        }
    }
    let (total, shown) = capped(failures);
    CheckResult::new("row_straightening", total == 0, json!({ "failures": total, "examples": shown }))
}

/// `Φ` is a bijection of bases for `0 <= d <= d_max`, multiplicative on
/// basis pairs with `d1 + d2 <= d_max`, structure constants are 0/1 and
/// each basis product is a single basis element; degree-one products
/// commute and associate.
pub fn check_isomorphism(s: &QuotientSetup, d_max: usize) -> CheckResult {
    let mut failures: Vec<Value> = Vec::new();
    let mut bases = Vec::new();
    for d in 0..=d_max {
        match basis_r(s, d) {
            Ok(b) => bases.push(b),
            Err(e) => {
                return CheckResult::new("isomorphism", false, json!({ "error": e.to_string(), "d": d }));
            }
        }
    }
    for b in &bases {
        let images: Result<BTreeSet<_>, _> = b.labels.iter().map(|g| phi(g, s, b.degree)).collect();
        let target: BTreeSet<_> = basis_a(s, b.degree).labels.into_iter().collect();
        match images {
            Ok(img) if img.len() == b.dim() && img == target => {}
            Ok(img) => failures.push(json!({ "d": b.degree, "failure": "Φ_d is not a bijection", "images": img.len(), "target": target.len() })),
            Err(e) => failures.push(json!({ "d": b.degree, "error": e.to_string() })),
        }
    }
    let mut products = 0usize;
    for d1 in 0..=d_max {
        for d2 in 0..=d_max - d1 {
            for g1 in &bases[d1].labels {
                for g2 in &bases[d2].labels {
                    products += 1;
                    let f = InvariantElement::basis(g1.clone(), d1);
                    let g = InvariantElement::basis(g2.clone(), d2);
                    let fg = match multiply_r(&f, &g, s) {
                        Ok(p) => p,
                        Err(e) => {
                            failures.push(json!({ "g1": g1, "g2": g2, "error": e.to_string() }));
                            continue;
                        }
                    };
                    let single = fg.coeffs.len() == 1
                        && fg.coeffs.values().all(|c| *c == num_rational::Rational64::from_integer(1))
                        && fg.coeffs.keys().all(|t| bases[d1 + d2].labels.contains(t));
                    let lhs = phi_element(&fg, s);
                    let rhs = phi_element(&f, s).and_then(|a| phi_element(&g, s).map(|b| a.mul(&b)));
                    if !single || lhs.ok() != rhs.ok() {
                        failures.push(json!({ "g1": g1, "g2": g2, "single_basis_element": single }));
                    }
                }
            }
        }
    }
    if d_max >= 2 {
        let deg1 = &bases[1].labels;
        let el = |g: &Tableau, d| InvariantElement::basis(g.clone(), d);
        for (a, b) in deg1.iter().cartesian_product(deg1) {
            let ab = multiply_r(&el(a, 1), &el(b, 1), s);
            let ba = multiply_r(&el(b, 1), &el(a, 1), s);
            if ab.ok() != ba.ok() {
                failures.push(json!({ "failure": "not commutative", "a": a, "b": b }));
            }
        }
        if d_max >= 3 {
            for ((a, b), c) in deg1.iter().cartesian_product(deg1).cartesian_product(deg1) {
                let left = multiply_r(&el(a, 1), &el(b, 1), s).and_then(|ab| multiply_r(&ab, &el(c, 1), s));
                let right = multiply_r(&el(b, 1), &el(c, 1), s).and_then(|bc| multiply_r(&el(a, 1), &bc, s));
                if left.ok() != right.ok() {
                    failures.push(json!({ "failure": "not associative", "a": a, "b": b, "c": c }));
                }
            }
        }
    }
    let (total, shown) = capped(failures);
    CheckResult::new(
        "isomorphism",
        total == 0,
        json!({
            "dims": bases.iter().map(|b| b.dim()).collect_vec(),
            "basis_products": products,
            "failures": total,
            "examples": shown,
        }),
    )
}

/// `dim R_d = dim A_d = ∏ binom(a_i - l_i + d c_i, a_i - l_i)` for `1 <= d <= d_max`.
pub fn check_hilbert(s: &QuotientSetup, d_max: usize) -> CheckResult {
    let rows = hilbert(s, d_max);
    let ok = rows.iter().all(|r| r.equal());
    CheckResult::new("hilbert", ok, json!(rows))
}

/// Round trip `z(Γ_z) = z` through the explicit construction for `d <= d_max`,
/// used by the enumerate command.
pub fn bijection_table(s: &QuotientSetup, d: usize) -> crate::Result<Vec<(crate::LatticePoint, Tableau)>> {
    crate::lattice::enumerate_pd(s, d).into_iter().map(|z| tableau_from_lattice(&z, s, d).map(|g| (z, g))).collect()
}

/// Full suite for one setup, in a fixed order.
pub fn run_suite(
    s: &QuotientSetup,
    d_max: usize,
    samples: usize,
    seed: u64,
    fault: Option<SignFault>,
) -> Vec<CheckResult> {
    let mut out = vec![check_setup(s), check_bijection(s, d_max)];
    out.extend(check_tableau_structure(s, d_max));
    out.push(check_oracle_soundness(s.r(), s.n(), samples, seed, fault));
    out.push(check_binomial_law(s, samples, seed));
    out.push(check_straightening(s, samples, seed));
    out.push(check_row_straightening(s, 4, 25, seed));
    out.push(check_isomorphism(s, d_max));
    out.push(check_hilbert(s, d_max));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_on_2_5() {
        let s = QuotientSetup::new(2, 5, &[2]).unwrap();
        for c in run_suite(&s, 3, 10, 1, None) {
            assert!(c.passed(), "{} failed: {}", c.check, c.detail);
        }
    }

    #[test]
    fn sign_fault_is_caught() {
        let res = check_oracle_soundness(2, 4, 10, 1, Some(SignFault { relation: 0 }));
        assert!(!res.passed());
        assert!(res.detail["counterexample"]["value"].as_str().is_some());
    }

    #[test]
    fn relation_triples_g24() {
        let triples = all_relation_triples(2, 4);
        assert!(triples.iter().any(|(a, b, k)| a.entries() == [2, 4] && b.entries() == [1, 3] && *k == 1));
        assert!(triples.iter().all(|(a, b, k)| a.at(*k) > b.at(*k)));
    }
}
