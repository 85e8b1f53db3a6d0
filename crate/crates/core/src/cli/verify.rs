use serde_json::{json, Value};

use crate::error::Result;
use crate::groebner::{buchberger, is_groebner_basis, IdealGens, LinearChange};
use crate::monoideal::{
    associated_primes, is_borel_fixed, is_equidimensional, saturated_chain_property,
    ChainEntry, IrreducibleComponent, MonomialIdeal, VarPrime,
};
use crate::poly::{Field, MonomialOrder, VarContext};
use crate::textio::{parse_monomial, parse_polynomial, Render};

/// Every input and expected value of the substituted-toric-ideal
/// counterexample. The default is embedded; tests perturb copies of it.
#[derive(Debug, Clone)]
pub struct PaperFixture {
    pub vars: Vec<String>,
    pub toric_gens: Vec<String>,
    /// Variable replaced by a linear form, e.g. `t -> z - t`.
    pub substitution: (String, String),
    pub substituted_gens: Vec<String>,
    pub initial_ideal: Vec<String>,
    pub associated_primes: Vec<Vec<String>>,
    /// Displayed components, each a list of pure powers.
    pub components: Vec<Vec<String>>,
    pub chain_violation: Vec<String>,
    pub nzd_var: String,
}

fn strings(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

impl Default for PaperFixture {
    fn default() -> Self {
        PaperFixture {
            vars: strings(&["x", "y", "z", "t", "a", "b", "c"]),
            toric_gens: strings(&["x*z - a^2", "y*z - b^2", "t*z - c^2"]),
            substitution: ("t".into(), "z - t".into()),
            substituted_gens: strings(&["x*z - a^2", "y*z - b^2", "z^2 - t*z - c^2"]),
            initial_ideal: strings(&[
                "z^2", "y*z", "x*z", "z*b^2", "z*a^2", "y*t*b^2", "x*t*b^2", "x*t*a^2",
            ]),
            associated_primes: vec![
                strings(&["x", "y", "z"]),
                strings(&["y", "t", "z"]),
                strings(&["t", "a", "z"]),
                strings(&["z", "a", "b"]),
                strings(&["x", "y", "z", "a", "b"]),
            ],
            components: vec![
                strings(&["x", "y", "z"]),
                strings(&["y", "t", "z"]),
                strings(&["t", "z", "a^2"]),
                strings(&["z", "a^2", "b^2"]),
                strings(&["x", "y", "z^2", "a^2", "b^2"]),
            ],
            chain_violation: strings(&["x", "y", "z", "a", "b"]),
            nzd_var: "c".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub id: char,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, id: char) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }
}

impl Render for VerifyReport {
    fn kind(&self) -> &'static str {
        "verify-paper"
    }

    fn text(&self, _ctx: &VarContext) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{} ({}) {}: {}\n",
                if c.passed { "PASS" } else { "FAIL" },
                c.id,
                c.name,
                c.detail
            ));
        }
        let n = self.checks.iter().filter(|c| c.passed).count();
        out.push_str(&format!("{n}/{} checks passed\n", self.checks.len()));
        out
    }

    fn json(&self, _ctx: &VarContext) -> Value {
        json!({
            "passed": self.passed(),
            "checks": self.checks.iter().map(|c| json!({
                "id": c.id.to_string(),
                "name": c.name,
                "passed": c.passed,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
        })
    }
}

fn prime_of(ctx: &VarContext, names: &[String]) -> Result<VarPrime> {
    let vars = names
        .iter()
        .map(|n| {
            ctx.position(n)
                .ok_or_else(|| crate::Error::InvalidInput(format!("unknown variable `{n}` in fixture")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VarPrime::new(vars))
}

/// Runs the nine counterexample checks against the embedded fixture.
pub fn verify_paper() -> Result<VerifyReport> {
    verify_fixture(&PaperFixture::default())
}

/// Runs the nine checks, in order, against `fx`. Checks after (c) use the
/// computed initial ideal, so a wrong expected value only fails its own
/// check.
pub fn verify_fixture(fx: &PaperFixture) -> Result<VerifyReport> {
    let ctx = VarContext::new(&fx.vars)?;
    let k = Field::Rational;
    let order = MonomialOrder::GrevLex;
    let parse = |s: &str| parse_polynomial(s, &ctx, k, order);
    let mut checks = Vec::new();

    // (a) t -> z - t turns the toric ideal into the substituted one
    let target = ctx
        .position(&fx.substitution.0)
        .ok_or_else(|| crate::Error::InvalidInput("unknown substitution variable".into()))?;
    let image = parse(&fx.substitution.1)?;
    let r = ctx.len();
    let mut rows: Vec<Vec<_>> = (0..r)
        .map(|i| (0..r).map(|j| if i == j { k.one() } else { k.zero() }).collect())
        .collect();
    rows[target] = vec![k.zero(); r];
    for t in image.terms() {
        let j = t.exps.support().next().expect("linear form");
        rows[target][j] = t.coeff.clone();
    }
    let change = LinearChange::new(k, rows)?;
    let toric = IdealGens::new(fx.toric_gens.iter().map(|g| parse(g)).collect::<Result<_>>()?)?;
    let moved = change.apply_ideal(&toric)?;
    let expected: Vec<_> = fx.substituted_gens.iter().map(|g| parse(g)).collect::<Result<_>>()?;
    let shown: Vec<String> = moved.gens().iter().map(|g| g.to_string()).collect();
    checks.push(CheckResult {
        id: 'a',
        name: "substitution",
        passed: moved.gens() == expected.as_slice(),
        detail: format!("{} -> {}: {}", fx.substitution.0, fx.substitution.1, shown.join(", ")),
    });

    // (b) reduced grevlex Gröbner basis
    let gb = buchberger(&moved, order)?;
    let is_gb = is_groebner_basis(gb.gens(), order)?;
    checks.push(CheckResult {
        id: 'b',
        name: "groebner-basis",
        passed: gb.is_reduced() && is_gb,
        detail: format!("{} generators, all S-polynomials reduce to 0: {is_gb}", gb.gens().len()),
    });

    // (c) initial ideal equals J
    let j = gb.initial_ideal();
    let expected_j = MonomialIdeal::new(
        &ctx,
        fx.initial_ideal.iter().map(|m| parse_monomial(m, &ctx)).collect::<Result<_>>()?,
    )?;
    let matches = j == expected_j && j.gens().len() == fx.initial_ideal.len();
    let mut detail = format!("J = ({j})");
    if !matches {
        let show = |v: Vec<&crate::poly::ExponentVector>| {
            v.iter().map(|m| m.display(&ctx).to_string()).collect::<Vec<_>>().join(", ")
        };
        let extra: Vec<_> = j.gens().iter().filter(|g| !expected_j.gens().contains(g)).collect();
        let missing: Vec<_> = expected_j.gens().iter().filter(|g| !j.gens().contains(g)).collect();
        detail.push_str(&format!(
            "; not in the expected list: [{}]; expected but not computed: [{}]",
            show(extra),
            show(missing)
        ));
    }
    checks.push(CheckResult {
        id: 'c',
        name: "initial-ideal",
        passed: matches,
        detail,
    });

    // (d) Ass(R/J)
    let ass = associated_primes(&j)?;
    let mut computed: Vec<VarPrime> = ass.primes.iter().map(|a| a.prime.clone()).collect();
    let mut listed = fx
        .associated_primes
        .iter()
        .map(|p| prime_of(&ctx, p))
        .collect::<Result<Vec<_>>>()?;
    computed.sort();
    listed.sort();
    listed.dedup();
    checks.push(CheckResult {
        id: 'd',
        name: "associated-primes",
        passed: computed == listed,
        detail: computed
            .iter()
            .map(|p| p.display(&ctx).to_string())
            .collect::<Vec<_>>()
            .join(", "),
    });

    // (e) the displayed components intersect to J
    let mut intersection: Option<MonomialIdeal> = None;
    let mut irreducible = true;
    for comp in &fx.components {
        let gens = comp.iter().map(|m| parse_monomial(m, &ctx)).collect::<Result<Vec<_>>>()?;
        irreducible &= gens.iter().all(|g| g.support().count() == 1);
        let ideal = MonomialIdeal::new(&ctx, gens)?;
        intersection = Some(match intersection {
            None => ideal,
            Some(acc) => acc.intersect(&ideal)?,
        });
    }
    let decomposition_ok = intersection.as_ref() == Some(&j);
    checks.push(CheckResult {
        id: 'e',
        name: "primary-decomposition",
        passed: irreducible && decomposition_ok,
        detail: format!(
            "{} components, intersection equals J: {decomposition_ok}",
            fx.components.len()
        ),
    });

    // (f) saturated chain property fails at the listed prime
    let chains = saturated_chain_property(&ass);
    let witness = prime_of(&ctx, &fx.chain_violation)?;
    let violations: Vec<&VarPrime> = chains.violations().collect();
    let no_step = !ass
        .primes
        .iter()
        .any(|a| a.prime.codim() + 1 == witness.codim() && a.prime.is_subset(&witness));
    checks.push(CheckResult {
        id: 'f',
        name: "chain-failure",
        passed: !chains.holds && violations == [&witness] && no_step,
        detail: format!(
            "verdict {}, violations: {}",
            if chains.holds { "holds" } else { "fails" },
            violations
                .iter()
                .map(|p| p.display(&ctx).to_string())
                .collect::<Vec<_>>()
                .join(", ")
        ),
    });
    debug_assert!(chains
        .entries
        .iter()
        .all(|e| !matches!(e, ChainEntry::Incomplete { .. })));

    // (g) J is not Borel-fixed
    let borel = is_borel_fixed(&j);
    checks.push(CheckResult {
        id: 'g',
        name: "not-borel-fixed",
        passed: !borel.fixed && borel.witness.is_some(),
        detail: match &borel.witness {
            Some(w) => w.describe(&ctx),
            None => "no witness".into(),
        },
    });

    // (h) the last variable is a non-zero divisor on R/J
    let v = ctx
        .position(&fx.nzd_var)
        .ok_or_else(|| crate::Error::InvalidInput("unknown nzd variable".into()))?;
    let nzd = j.is_nzd(v);
    checks.push(CheckResult {
        id: 'h',
        name: "last-variable-nzd",
        passed: nzd,
        detail: format!("{} is a non-zero divisor on R/J: {nzd}", fx.nzd_var),
    });

    // (i) J is equidimensional
    let equi = is_equidimensional(&j)?;
    let codims: Vec<usize> = ass.minimal_primes().map(VarPrime::codim).collect();
    checks.push(CheckResult {
        id: 'i',
        name: "equidimensional",
        passed: equi,
        detail: format!("minimal prime codims {codims:?}"),
    });

    Ok(VerifyReport { checks })
}

/// The components the fixture lists, as irreducible components.
pub fn fixture_components(fx: &PaperFixture) -> Result<Vec<IrreducibleComponent>> {
    let ctx = VarContext::new(&fx.vars)?;
    fx.components
        .iter()
        .map(|comp| {
            let powers = comp
                .iter()
                .map(|m| {
                    let e = parse_monomial(m, &ctx)?;
                    let i = e.support().next().expect("pure power");
                    Ok((i, e.get(i)))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(IrreducibleComponent::new(powers))
        })
        .collect()
}
