//! Exit criteria. Each test prints one `[PASS]`/`[FAIL]` line; run with
//! `cargo test -p monideal --test acceptance -- --nocapture` to see them.

mod common;

use std::time::{Duration, Instant};

use common::*;
use monideal::groebner::is_groebner_basis;
use monideal::monoideal::ChainEntry;
use monideal::poly::{ExponentVector, Field, MonomialOrder, Polynomial};
use monideal::textio::parse_monomial;
use monideal::{
    associated_primes, buchberger, check_theorem, gin_with, irreducible_decomposition, is_borel_fixed,
    is_equidimensional, saturated_chain_property, GinOptions, MonomialIdeal, VarPrime,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const J_LISTED: [&str; 8] = ["z^2", "y*z", "x*z", "z*b^2", "z*a^2", "y*t*b^2", "x*t*b^2", "x*t*a^2"];

const ASS_LISTED: [&[&str]; 5] = [
    &["x", "y", "z"],
    &["y", "t", "z"],
    &["t", "a", "z"],
    &["z", "a", "b"],
    &["x", "y", "z", "a", "b"],
];

const COMPONENTS_LISTED: [&[&str]; 5] = [
    &["x", "y", "z"],
    &["y", "t", "z"],
    &["t", "z", "a^2"],
    &["z", "a^2", "b^2"],
    &["x", "y", "z^2", "a^2", "b^2"],
];

fn report(criterion: u32, passed: bool, detail: &str) {
    println!(
        "[{}] criterion {criterion}: {detail}",
        if passed { "PASS" } else { "FAIL" }
    );
    assert!(passed, "criterion {criterion} failed: {detail}");
}

fn computed_j() -> MonomialIdeal {
    buchberger(&counterexample(), MonomialOrder::GrevLex)
        .unwrap()
        .initial_ideal()
}

fn prime(names: &[&str]) -> VarPrime {
    let c = ctx(&COUNTEREXAMPLE_VARS);
    VarPrime::new(names.iter().map(|n| c.position(n).unwrap()).collect())
}

#[test]
fn criterion_1_counterexample_initial_ideal() {
    let start = Instant::now();
    let gb = buchberger(&counterexample(), MonomialOrder::GrevLex).unwrap();
    let j = gb.initial_ideal();
    let elapsed = start.elapsed();
    let c = ctx(&COUNTEREXAMPLE_VARS);
    let mut computed: Vec<ExponentVector> = j.gens().to_vec();
    let mut listed: Vec<ExponentVector> = J_LISTED.iter().map(|m| parse_monomial(m, &c).unwrap()).collect();
    computed.sort();
    listed.sort();
    let exact = computed == listed;
    report(
        1,
        exact && elapsed < Duration::from_secs(5),
        &format!("in(P) = ({j}) in {elapsed:?}; expected exactly ({})", J_LISTED.join(", ")),
    );
}

#[test]
fn criterion_2_associated_primes_of_j() {
    let j = computed_j();
    let ass = associated_primes(&j).unwrap();
    let mut computed: Vec<VarPrime> = ass.primes.iter().map(|a| a.prime.clone()).collect();
    let mut listed: Vec<VarPrime> = ASS_LISTED.iter().map(|p| prime(p)).collect();
    computed.sort();
    listed.sort();
    let c = ctx(&COUNTEREXAMPLE_VARS);
    let shown: Vec<String> = computed.iter().map(|p| p.display(&c).to_string()).collect();
    report(2, computed == listed, &format!("Ass(R/J) = {{{}}}", shown.join(", ")));
}

#[test]
fn criterion_3_displayed_components_intersect_to_j() {
    let c = ctx(&COUNTEREXAMPLE_VARS);
    let j = computed_j();
    let intersection = COMPONENTS_LISTED
        .iter()
        .map(|comp| monomial_ideal(&c, comp))
        .reduce(|a, b| a.intersect(&b).unwrap())
        .unwrap();
    // the computed irredundant decomposition is the displayed one
    let comps = irreducible_decomposition(&j).unwrap();
    let mut shown: Vec<MonomialIdeal> = comps.iter().map(|k| k.to_ideal(&c)).collect();
    let mut listed: Vec<MonomialIdeal> = COMPONENTS_LISTED.iter().map(|comp| monomial_ideal(&c, comp)).collect();
    shown.sort_by_key(|i| i.to_string());
    listed.sort_by_key(|i| i.to_string());
    report(
        3,
        intersection == j && shown == listed,
        &format!("intersection of displayed components = ({intersection})"),
    );
}

#[test]
fn criterion_4_chain_property_fails_at_the_embedded_prime() {
    let ass = associated_primes(&computed_j()).unwrap();
    let chains = saturated_chain_property(&ass);
    let q = prime(&["x", "y", "z", "a", "b"]);
    let violations: Vec<&VarPrime> = chains.violations().collect();
    let codim4_inside = ass
        .primes
        .iter()
        .any(|a| a.prime.codim() == 4 && a.prime.is_subset(&q));
    let only_entry = chains.entries == vec![ChainEntry::Violation { prime: q.clone() }];
    report(
        4,
        !chains.holds && violations == [&q] && !codim4_inside && only_entry,
        &format!("verdict holds={}, violations={:?}", chains.holds, violations.iter().map(|p| p.display(&ctx(&COUNTEREXAMPLE_VARS)).to_string()).collect::<Vec<_>>()),
    );
}

#[test]
fn criterion_5_borel_nzd_equidimensional() {
    let c = ctx(&COUNTEREXAMPLE_VARS);
    let j = computed_j();
    let borel = is_borel_fixed(&j);
    let witness_ok = borel.witness.as_ref().is_some_and(|w| {
        j.contains(&w.generator) && !j.contains(&w.image) && w.mv.apply(&w.generator).as_ref() == Some(&w.image)
    });
    let nzd = j.is_nzd(c.position("c").unwrap());
    let equi = is_equidimensional(&j).unwrap();
    let detail = format!(
        "borel-fixed={} witness={} nzd(c)={nzd} equidimensional={equi}",
        borel.fixed,
        borel.witness.as_ref().map(|w| w.describe(&c)).unwrap_or_default()
    );
    report(5, !borel.fixed && witness_ok && nzd && equi, &detail);
}

fn theorem_family(name: &str, r: usize, seeds: u64) -> (bool, String) {
    let ideal = rational_normal_cone(r);
    assert!(ideal.is_homogeneous());
    let mut failures = Vec::new();
    let mut slowest = Duration::ZERO;
    let mut seen = Vec::new();
    for seed in 0..seeds {
        let start = Instant::now();
        let opts = GinOptions {
            seed,
            trials: 2,
            ..GinOptions::default()
        };
        let g = gin_with(&ideal, MonomialOrder::GrevLex, &opts).unwrap();
        let rep = check_theorem(&g).unwrap();
        let elapsed = start.elapsed();
        slowest = slowest.max(elapsed);
        let ok = rep.hypotheses.borel
            && rep.hypotheses.codim_r_minus_2
            && rep.hypotheses.equidimensional
            && rep.conclusion.prefix_primes
            && rep.conclusion.chain.holds
            && rep.conclusion.embedded_implies_r_minus_1
            && elapsed < Duration::from_secs(10);
        if !ok {
            failures.push(seed);
        }
        if !seen.contains(&g.to_string()) {
            seen.push(g.to_string());
        }
    }
    (
        failures.is_empty(),
        format!(
            "{name}: {seeds} seeds, failures {failures:?}, slowest run {slowest:?}, gin = {}",
            seen.join(" | ")
        ),
    )
}

#[test]
fn criterion_6_theorem_on_rational_normal_cones() {
    let (cubic_ok, cubic) = theorem_family("twisted cubic cone (r=4)", 4, 25);
    let (quartic_ok, quartic) = theorem_family("rational normal quartic cone (r=5)", 5, 25);
    report(6, cubic_ok && quartic_ok, &format!("{cubic}; {quartic}"));
}

#[test]
fn criterion_7_groebner_property_suite() {
    let field = Field::prime(32003).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6762);
    let mut failures = 0;
    let instances = 500;
    for _ in 0..instances {
        let r = rng.random_range(1..=3);
        let c = monideal::VarContext::indexed("x", r).unwrap();
        let order = MonomialOrder::ALL[rng.random_range(0..3)];
        let n = rng.random_range(1..=3);
        let gens: Vec<Polynomial> = (0..n)
            .map(|_| loop {
                let p = random_poly(&mut rng, &c, field, order, 3, 4);
                if !p.is_zero() {
                    break p;
                }
            })
            .collect();
        let ideal = monideal::IdealGens::new(gens.clone()).unwrap();
        let gb = buchberger(&ideal, order).unwrap();
        let mut ok = is_groebner_basis(gb.gens(), order).unwrap();
        for _ in 0..3 {
            let mut combo = Polynomial::zero(&c, field, order);
            for g in &gens {
                let q = random_poly(&mut rng, &c, field, order, 2, 3);
                combo = &combo + &(&q * g);
            }
            ok &= gb.contains(&combo).unwrap();
        }
        let initial = gb.initial_ideal();
        ok &= gens.iter().all(|g| initial.contains(g.leading_monomial().unwrap()));
        if !ok {
            failures += 1;
        }
    }
    report(
        7,
        failures == 0,
        &format!("{instances} random instances over F_32003, {failures} failures"),
    );
}

#[test]
fn criterion_8_decomposition_oracle_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xdec0);
    let instances = 500;
    let mut failures = 0;
    for _ in 0..instances {
        let i = random_monomial_ideal(&mut rng, 4, 3, 5);
        let comps = irreducible_decomposition(&i).unwrap();
        let c = i.context();
        let intersection = comps
            .iter()
            .map(|k| k.to_ideal(c))
            .reduce(|a, b| a.intersect(&b).unwrap())
            .unwrap();
        let ass = associated_primes(&i).unwrap();
        let computed: Vec<Vec<usize>> = {
            let mut v: Vec<Vec<usize>> = ass.primes.iter().map(|a| a.prime.vars().to_vec()).collect();
            v.sort();
            v
        };
        if intersection != i || computed != ass_oracle(&i) {
            failures += 1;
        }
    }
    report(
        8,
        failures == 0,
        &format!("{instances} random monomial ideals, {failures} failures"),
    );
}

