use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Role of a variable inside a [`VariableSet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VarRole {
    /// An ordinary source variable.
    Plain,
    /// The primed companion x' of the plain variable at the given index.
    PrimedCompanionOf(usize),
    /// A deformation parameter (at most one per ring).
    Parameter,
}

/// An ordered set of distinct variable names defining a polynomial ring.
///
/// The order of the names fixes the exponent-vector layout of every
/// polynomial over the ring, so two rings interoperate only when they are
/// structurally equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableSet {
    names: Vec<String>,
    roles: Vec<VarRole>,
}

impl VariableSet {
    /// A ring of plain variables.
    pub fn plain<S: AsRef<str>>(names: &[S]) -> Result<Arc<Self>> {
        Self::build(
            names.iter().map(|s| s.as_ref().to_owned()).collect(),
            vec![VarRole::Plain; names.len()],
        )
    }

    /// A ring of plain variables followed by a single parameter variable.
    pub fn with_parameter<S: AsRef<str>>(names: &[S], parameter: &str) -> Result<Arc<Self>> {
        let mut all: Vec<String> = names.iter().map(|s| s.as_ref().to_owned()).collect();
        let mut roles = vec![VarRole::Plain; names.len()];
        all.push(parameter.to_owned());
        roles.push(VarRole::Parameter);
        Self::build(all, roles)
    }

    fn build(names: Vec<String>, roles: Vec<VarRole>) -> Result<Arc<Self>> {
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() {
                return Err(Error::Invalid("empty variable name".into()));
            }
            if names[..i].contains(n) {
                return Err(Error::Invalid(format!("duplicate variable name `{n}`")));
            }
        }
        if roles.iter().filter(|r| **r == VarRole::Parameter).count() > 1 {
            return Err(Error::Invalid("at most one parameter variable allowed".into()));
        }
        for r in &roles {
            if let VarRole::PrimedCompanionOf(i) = r {
                if *i >= names.len() || roles[*i] != VarRole::Plain {
                    return Err(Error::Invalid("primed companion must refer to a plain variable".into()));
                }
            }
        }
        Ok(Arc::new(VariableSet { names, roles }))
    }

    /// The primed extension of an all-plain ring: `x1,...,xn,x1',...,xn'`.
    ///
    /// The original variables keep their positions, so exponent vectors over
    /// the plain ring embed by zero-padding.
    pub fn primed_extension(self: &Arc<Self>) -> Result<Arc<Self>> {
        if !self.is_all_plain() {
            return Err(Error::Invalid(
                "primed extension is only defined for all-plain rings".into(),
            ));
        }
        let n = self.len();
        let mut names = self.names.clone();
        let mut roles = self.roles.clone();
        for i in 0..n {
            names.push(format!("{}'", self.names[i]));
            roles.push(VarRole::PrimedCompanionOf(i));
        }
        Self::build(names, roles)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn role(&self, i: usize) -> VarRole {
        self.roles[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_all_plain(&self) -> bool {
        self.roles.iter().all(|r| *r == VarRole::Plain)
    }

    /// Number of plain variables.
    pub fn plain_count(&self) -> usize {
        self.roles.iter().filter(|r| **r == VarRole::Plain).count()
    }

    /// Index of the parameter variable, if any.
    pub fn parameter_index(&self) -> Option<usize> {
        self.roles.iter().position(|r| *r == VarRole::Parameter)
    }

    /// Index of the primed companion of plain variable `i`, if present.
    pub fn primed_companion(&self, i: usize) -> Option<usize> {
        self.roles
            .iter()
            .position(|r| *r == VarRole::PrimedCompanionOf(i))
    }

    /// True when the ring is a primed extension (n plain + n primed, in order).
    pub fn is_primed_extension(&self) -> bool {
        let n = self.len() / 2;
        self.len() == 2 * n
            && n > 0
            && (0..n).all(|i| self.roles[i] == VarRole::Plain)
            && (0..n).all(|i| self.roles[n + i] == VarRole::PrimedCompanionOf(i))
    }
}

impl fmt::Display for VariableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primed_extension_layout() {
        let r = VariableSet::plain(&["x", "y"]).unwrap();
        let p = r.primed_extension().unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(p.names(), &["x", "y", "x'", "y'"]);
        assert_eq!(p.role(2), VarRole::PrimedCompanionOf(0));
        assert_eq!(p.role(3), VarRole::PrimedCompanionOf(1));
        assert!(p.is_primed_extension());
        assert_eq!(p.primed_companion(1), Some(3));
    }

    #[test]
    fn rejects_duplicates_and_double_parameters() {
        assert!(VariableSet::plain(&["x", "x"]).is_err());
        assert!(VariableSet::with_parameter(&["x", "t"], "t").is_err());
        let f = VariableSet::with_parameter(&["u"], "t").unwrap();
        assert_eq!(f.parameter_index(), Some(1));
        assert!(!f.is_all_plain());
    }
}
