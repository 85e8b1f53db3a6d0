use std::fmt::Write as _;
use std::sync::Arc;

use super::parse_polynomial;
use crate::error::{Error, Result};
use crate::groebner::IdealGens;
use crate::poly::{Field, MonomialOrder, VarContext};

/// A line-oriented ideal description:
///
/// ```text
/// # comment
/// vars: x, y, z, t, a, b, c
/// order: grevlex
/// field: Q
/// gens:
/// x*z - a^2
/// y*z - b^2
/// ```
///
/// `vars:` and `gens:` are required; `order:` defaults to `grevlex` and
/// `field:` to `Q`. Variables are separated by commas or whitespace.
#[derive(Debug, Clone)]
pub struct IdealFile {
    pub vars: Vec<String>,
    pub order: MonomialOrder,
    pub field: Field,
    pub gens: Vec<String>,
    pub comments: Vec<String>,
    /// Byte offset of each generator line, for error positions.
    gen_offsets: Vec<usize>,
}

impl IdealFile {
    pub fn new(vars: Vec<String>, order: MonomialOrder, field: Field, gens: Vec<String>) -> Self {
        let n = gens.len();
        IdealFile {
            vars,
            order,
            field,
            gens,
            comments: Vec::new(),
            gen_offsets: vec![0; n],
        }
    }

    pub fn parse(text: &str) -> Result<IdealFile> {
        let mut vars: Option<Vec<String>> = None;
        let mut order = None;
        let mut field = None;
        let mut gens = Vec::new();
        let mut gen_offsets = Vec::new();
        let mut comments = Vec::new();
        let mut in_gens = false;

        let mut offset = 0;
        for raw in text.split('\n') {
            let line_start = offset;
            offset += raw.len() + 1;
            let lead = raw.len() - raw.trim_start().len();
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(c) = line.strip_prefix('#') {
                comments.push(c.trim().to_string());
                continue;
            }
            let at = line_start + lead;
            if let Some((key, value)) = header(line) {
                let value_at = at + line.find(':').expect("header has a colon") + 1;
                let value_at = value_at + (value.len() - value.trim_start().len());
                let value = value.trim();
                in_gens = false;
                match key {
                    "vars" => {
                        if vars.is_some() {
                            return Err(Error::parse(at, "duplicate `vars:` header"));
                        }
                        let names: Vec<String> = value
                            .split(|c: char| c == ',' || c.is_whitespace())
                            .filter(|s| !s.is_empty())
                            .map(str::to_string)
                            .collect();
                        VarContext::new(&names).map_err(|e| Error::parse(value_at, e.to_string()))?;
                        vars = Some(names);
                    }
                    "order" => {
                        order = Some(value.parse().map_err(|e: Error| Error::parse(value_at, e.to_string()))?);
                    }
                    "field" => {
                        field = Some(value.parse().map_err(|e: Error| Error::parse(value_at, e.to_string()))?);
                    }
                    "gens" => {
                        in_gens = true;
                        if !value.is_empty() {
                            gens.push(value.to_string());
                            gen_offsets.push(value_at);
                        }
                    }
                    _ => unreachable!(),
                }
                continue;
            }
            if !in_gens {
                return Err(Error::parse(
                    at,
                    "expected a `vars:`, `order:`, `field:` or `gens:` header",
                ));
            }
            gens.push(line.to_string());
            gen_offsets.push(at);
        }

        let vars = vars.ok_or_else(|| Error::parse(0, "missing `vars:` header"))?;
        if gens.is_empty() {
            return Err(Error::parse(text.len(), "no generators after `gens:`"));
        }
        let file = IdealFile {
            vars,
            order: order.unwrap_or_default(),
            field: field.unwrap_or_default(),
            gens,
            comments,
            gen_offsets,
        };
        // every generator must parse in the declared context
        file.ideal(None, None)?;
        Ok(file)
    }

    pub fn context(&self) -> Result<Arc<VarContext>> {
        VarContext::new(&self.vars)
    }

    /// The generators parsed in the file's context, with optional order and
    /// field overrides.
    pub fn ideal(&self, order: Option<MonomialOrder>, field: Option<Field>) -> Result<IdealGens> {
        let ctx = self.context()?;
        let order = order.unwrap_or(self.order);
        let field = field.unwrap_or(self.field);
        let mut polys = Vec::with_capacity(self.gens.len());
        for (g, &off) in self.gens.iter().zip(&self.gen_offsets) {
            let p = parse_polynomial(g, &ctx, field, order).map_err(|e| match e {
                Error::Parse { pos, msg } => Error::Parse {
                    pos: off + pos,
                    msg,
                },
                other => other,
            })?;
            if p.is_zero() {
                return Err(Error::parse(off, format!("generator `{g}` is zero")));
            }
            polys.push(p);
        }
        IdealGens::new(polys)
    }

    /// Canonical serialization; `parse(to_text())` reproduces the file.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            let _ = writeln!(out, "# {c}");
        }
        let _ = writeln!(out, "vars: {}", self.vars.join(", "));
        let _ = writeln!(out, "order: {}", self.order);
        let _ = writeln!(out, "field: {}", self.field);
        let _ = writeln!(out, "gens:");
        for g in &self.gens {
            let _ = writeln!(out, "{g}");
        }
        out
    }
}

impl PartialEq for IdealFile {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars
            && self.order == other.order
            && self.field == other.field
            && self.gens == other.gens
            && self.comments == other.comments
    }
}

fn header(line: &str) -> Option<(&str, &str)> {
    let (key, value) = line.split_once(':')?;
    let key = key.trim();
    matches!(key, "vars" | "order" | "field" | "gens").then_some((key, value))
}
