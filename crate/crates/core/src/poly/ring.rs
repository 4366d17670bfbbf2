use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::{PolyError, Result};

/// An ordered list of distinct variable names; the ambient polynomial ring.
///
/// Cloning is cheap (shared `Arc`). Two rings compare equal when their
/// variable lists are equal, so rings deserialized from files interoperate
/// with freshly built ones.
#[derive(Clone)]
pub struct Ring(Arc<Inner>);

struct Inner {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    /// Builds a ring from variable names. Names must be distinct and match
    /// the identifier grammar `[A-Za-z][A-Za-z0-9_]*`.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let mut index = HashMap::with_capacity(names.len());
        let mut owned = Vec::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            let n = n.as_ref();
            if !valid_name(n) {
                return Err(PolyError::InvalidName(n.to_string()));
            }
            if index.insert(n.to_string(), i).is_some() {
                return Err(PolyError::DuplicateName(n.to_string()));
            }
            owned.push(n.to_string());
        }
        Ok(Ring(Arc::new(Inner {
            names: owned,
            index,
        })))
    }

    pub fn arity(&self) -> usize {
        self.0.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.0.names[index]
    }

    /// Index of a variable by name, if present.
    pub fn var(&self, name: &str) -> Option<usize> {
        self.0.index.get(name).copied()
    }

    /// Checks that `other` is the same ring, for binary operations.
    pub fn expect_same(&self, other: &Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(PolyError::RingMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.names == other.0.names
    }
}

impl Eq for Ring {}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.names.join(", "))
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring[{}]", self)
    }
}
