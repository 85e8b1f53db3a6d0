use serde_json::{json, Map, Value};

use crate::groebner::GroebnerBasis;
use crate::monoideal::{
    AssReport, BorelReport, ChainEntry, ChainReport, IrreducibleComponent, MonomialIdeal,
    PrimaryComponent, TheoremReport, VarPrime,
};
use crate::poly::{Polynomial, VarContext};

/// Version stamped into every JSON document as `format-version`.
pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

/// Canonical text and JSON renderings. `kind` names the top-level JSON
/// document type.
pub trait Render {
    fn kind(&self) -> &'static str;
    fn text(&self, ctx: &VarContext) -> String;
    fn json(&self, ctx: &VarContext) -> Value;
}

/// Deterministic rendering. JSON documents are objects carrying
/// `format-version` and `kind` ahead of the type-specific fields.
pub fn print_canonical<T: Render + ?Sized>(value: &T, ctx: &VarContext, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => value.text(ctx),
        OutputFormat::Json => {
            let mut doc = Map::new();
            doc.insert("format-version".into(), json!(FORMAT_VERSION));
            doc.insert("kind".into(), json!(value.kind()));
            if let Value::Object(body) = value.json(ctx) {
                doc.extend(body);
            }
            serde_json::to_string_pretty(&Value::Object(doc)).expect("serializable")
        }
    }
}

fn prime_json(p: &VarPrime, ctx: &VarContext) -> Value {
    json!({
        "vars": p.vars().iter().map(|&v| ctx.name(v)).collect::<Vec<_>>(),
        "codim": p.codim(),
        "text": p.display(ctx).to_string(),
    })
}

fn component_json(c: &IrreducibleComponent, ctx: &VarContext) -> Value {
    json!({
        "powers": c.powers().iter().map(|(&i, &a)| json!({"var": ctx.name(i), "exp": a})).collect::<Vec<_>>(),
        "radical": prime_json(&c.radical(), ctx),
        "text": c.display(ctx).to_string(),
    })
}

impl Render for Polynomial {
    fn kind(&self) -> &'static str {
        "polynomial"
    }

    fn text(&self, _ctx: &VarContext) -> String {
        self.to_string()
    }

    fn json(&self, ctx: &VarContext) -> Value {
        json!({
            "vars": ctx.names(),
            "field": self.field().to_string(),
            "order": self.order().name(),
            "text": self.to_string(),
            "terms": self.terms().iter().map(|t| json!({
                "coeff": t.coeff.to_string(),
                "exponents": t.exps.exps(),
            })).collect::<Vec<_>>(),
        })
    }
}

impl Render for GroebnerBasis {
    fn kind(&self) -> &'static str {
        "groebner-basis"
    }

    fn text(&self, _ctx: &VarContext) -> String {
        self.gens()
            .iter()
            .map(|g| format!("{g}\n"))
            .collect()
    }

    fn json(&self, ctx: &VarContext) -> Value {
        json!({
            "vars": ctx.names(),
            "order": self.order().name(),
            "reduced": self.is_reduced(),
            "field": self.gens().first().map(|g| g.field().to_string()),
            "generators": self.gens().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        })
    }
}

impl Render for MonomialIdeal {
    fn kind(&self) -> &'static str {
        "monomial-ideal"
    }

    fn text(&self, _ctx: &VarContext) -> String {
        format!("{self}\n")
    }

    fn json(&self, ctx: &VarContext) -> Value {
        json!({
            "vars": ctx.names(),
            "generators": self.gens().iter().map(|g| g.display(ctx).to_string()).collect::<Vec<_>>(),
            "exponents": self.gens().iter().map(|g| g.exps()).collect::<Vec<_>>(),
        })
    }
}

impl Render for BorelReport {
    fn kind(&self) -> &'static str {
        "borel"
    }

    fn text(&self, ctx: &VarContext) -> String {
        let mut out = format!(
            "borel-fixed: {}\ncriterion: elementary moves on minimal generators (char-0 criterion)\n",
            self.fixed
        );
        if let Some(w) = &self.witness {
            out.push_str(&format!("witness: {}\n", w.describe(ctx)));
        }
        out
    }

    fn json(&self, ctx: &VarContext) -> Value {
        json!({
            "borel-fixed": self.fixed,
            "criterion": "char-0",
            "witness": self.witness.as_ref().map(|w| json!({
                "generator": w.generator.display(ctx).to_string(),
                "move": w.mv.k(),
                "image": w.image.display(ctx).to_string(),
            })),
        })
    }
}

impl Render for [IrreducibleComponent] {
    fn kind(&self) -> &'static str {
        "irreducible-decomposition"
    }

    fn text(&self, ctx: &VarContext) -> String {
        self.iter().map(|c| format!("{}\n", c.display(ctx))).collect()
    }

    fn json(&self, ctx: &VarContext) -> Value {
        json!({ "components": self.iter().map(|c| component_json(c, ctx)).collect::<Vec<_>>() })
    }
}

impl Render for [PrimaryComponent] {
    fn kind(&self) -> &'static str {
        "primary-decomposition"
    }

    fn text(&self, ctx: &VarContext) -> String {
        let mut out = String::new();
        for p in self {
            let pieces: Vec<String> = p.irreducible.iter().map(|c| c.display(ctx).to_string()).collect();
            out.push_str(&format!("{}: {}", p.radical.display(ctx), pieces.join(" ∩ ")));
            if let Some(m) = &p.merged {
                out.push_str(&format!(" = ({m})"));
            }
            out.push('\n');
        }
        out
    }

    fn json(&self, ctx: &VarContext) -> Value {
        json!({
            "components": self.iter().map(|p| json!({
                "radical": prime_json(&p.radical, ctx),
                "irreducible": p.irreducible.iter().map(|c| component_json(c, ctx)).collect::<Vec<_>>(),
                "merged": p.merged.as_ref().map(|m| m.gens().iter().map(|g| g.display(ctx).to_string()).collect::<Vec<_>>()),
            })).collect::<Vec<_>>(),
        })
    }
}

impl Render for AssReport {
    fn kind(&self) -> &'static str {
        "associated-primes"
    }

    fn text(&self, ctx: &VarContext) -> String {
        let mut out = String::new();
        for a in &self.primes {
            out.push_str(&format!(
                "{} codim {} {}\n",
                a.prime.display(ctx),
                a.prime.codim(),
                if a.minimal { "minimal" } else { "embedded" }
            ));
        }
        out.push_str(&format!("codim: {}\ndim: {}\n", self.codim, self.dim));
        out
    }

    fn json(&self, ctx: &VarContext) -> Value {
        json!({
            "num-vars": self.num_vars,
            "codim": self.codim,
            "dim": self.dim,
            "primes": self.primes.iter().map(|a| {
                let mut p = prime_json(&a.prime, ctx);
                p["minimal"] = json!(a.minimal);
                p
            }).collect::<Vec<_>>(),
        })
    }
}

fn chain_text(chain: &[VarPrime], ctx: &VarContext) -> String {
    chain
        .iter()
        .map(|p| p.display(ctx).to_string())
        .collect::<Vec<_>>()
        .join(" < ")
}

impl Render for ChainReport {
    fn kind(&self) -> &'static str {
        "saturated-chain-property"
    }

    fn text(&self, ctx: &VarContext) -> String {
        let mut out = format!(
            "saturated-chain-property: {}\n",
            if self.holds { "holds" } else { "fails" }
        );
        for e in &self.entries {
            let line = match e {
                ChainEntry::Saturated { chain, .. } => format!("chain: {}", chain_text(chain, ctx)),
                ChainEntry::Incomplete { prime, step } => format!(
                    "incomplete: {} steps to {} but no chain reaches a minimal prime",
                    prime.display(ctx),
                    step.display(ctx)
                ),
                ChainEntry::Violation { prime } => format!(
                    "violation: {} contains no associated prime of codim {}",
                    prime.display(ctx),
                    prime.codim() - 1
                ),
            };
            out.push_str(&line);
            out.push('\n');
        }
        out
    }

    fn json(&self, ctx: &VarContext) -> Value {
        json!({
            "verdict": if self.holds { "holds" } else { "fails" },
            "entries": self.entries.iter().map(|e| match e {
                ChainEntry::Saturated { prime, chain } => json!({
                    "status": "saturated",
                    "prime": prime_json(prime, ctx),
                    "chain": chain.iter().map(|p| prime_json(p, ctx)).collect::<Vec<_>>(),
                }),
                ChainEntry::Incomplete { prime, step } => json!({
                    "status": "incomplete",
                    "prime": prime_json(prime, ctx),
                    "step": prime_json(step, ctx),
                }),
                ChainEntry::Violation { prime } => json!({
                    "status": "violation",
                    "prime": prime_json(prime, ctx),
                }),
            }).collect::<Vec<_>>(),
        })
    }
}

impl Render for TheoremReport {
    fn kind(&self) -> &'static str {
        "theorem-check"
    }

    fn text(&self, ctx: &VarContext) -> String {
        let h = &self.hypotheses;
        let c = &self.conclusion;
        let mut out = String::new();
        out.push_str(&format!("status: {}\n", self.status.as_str()));
        out.push_str(&format!("hypothesis borel-fixed (char-0 criterion): {}\n", h.borel));
        if let Some(w) = &self.borel.witness {
            out.push_str(&format!("  witness: {}\n", w.describe(ctx)));
        }
        out.push_str(&format!("hypothesis codim = r - 2: {} (codim {}, r {})\n", h.codim_r_minus_2, self.ass.codim, self.ass.num_vars));
        out.push_str(&format!("hypothesis equidimensional: {}\n", h.equidimensional));
        out.push_str(&format!("conclusion prefix associated primes: {}\n", c.prefix_primes));
        out.push_str(&format!("conclusion saturated chain property: {}\n", c.chain.holds));
        out.push_str(&format!(
            "conclusion maximal ideal associated implies (x_1..x_(r-1)) associated: {}\n",
            c.embedded_implies_r_minus_1
        ));
        out.push_str("associated primes:\n");
        for a in &self.ass.primes {
            out.push_str(&format!("  {}\n", a.prime.display(ctx)));
        }
        for line in c.chain.text(ctx).lines().skip(1) {
            out.push_str(&format!("  {line}\n"));
        }
        out
    }

    fn json(&self, ctx: &VarContext) -> Value {
        json!({
            "status": self.status.as_str(),
            "hypotheses": {
                "borel": self.hypotheses.borel,
                "codim-r-minus-2": self.hypotheses.codim_r_minus_2,
                "equidimensional": self.hypotheses.equidimensional,
            },
            "conclusion": {
                "prefix-primes": self.conclusion.prefix_primes,
                "chain": self.conclusion.chain.json(ctx),
                "embedded-implies-r-minus-1": self.conclusion.embedded_implies_r_minus_1,
            },
            "borel": self.borel.json(ctx),
            "associated-primes": self.ass.json(ctx),
        })
    }
}
