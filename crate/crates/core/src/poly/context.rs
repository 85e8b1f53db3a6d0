use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};

/// The ordered variables of a polynomial ring. The first name is the largest
/// variable: `x_1 > x_2 > ... > x_r`.
#[derive(Debug, Clone)]
pub struct VarContext {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl VarContext {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Arc<VarContext>> {
        if names.is_empty() {
            return Err(Error::InvalidContext("at least one variable required".into()));
        }
        let mut index = HashMap::with_capacity(names.len());
        let mut owned = Vec::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            let name = name.as_ref();
            if !is_identifier(name) {
                return Err(Error::InvalidContext(format!(
                    "`{name}` is not a valid variable name"
                )));
            }
            if index.insert(name.to_string(), i).is_some() {
                return Err(Error::InvalidContext(format!("duplicate variable `{name}`")));
            }
            owned.push(name.to_string());
        }
        Ok(Arc::new(VarContext {
            names: owned,
            index,
        }))
    }

    /// `x1, ..., xr`.
    pub fn indexed(prefix: &str, r: usize) -> Result<Arc<VarContext>> {
        let names: Vec<String> = (1..=r).map(|i| format!("{prefix}{i}")).collect();
        VarContext::new(&names)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }
}

impl PartialEq for VarContext {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for VarContext {}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_alphanumeric() || c == '_')
}

pub(crate) fn same_context(a: &Arc<VarContext>, b: &Arc<VarContext>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}
