use std::collections::HashSet;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};

/// Grading of a single variable or of a homogeneous function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Grade {
    Even,
    Odd,
}

impl Grade {
    /// Degree in {0, 1}; sign exponents are computed mod 2 from this.
    pub fn deg(self) -> u32 {
        match self {
            Grade::Even => 0,
            Grade::Odd => 1,
        }
    }

    pub fn from_deg(deg: u32) -> Self {
        if deg.is_multiple_of(2) {
            Grade::Even
        } else {
            Grade::Odd
        }
    }

    /// `(-1)^(self * other)`.
    pub fn sign_with(self, other: Grade) -> f64 {
        if (self.deg() * other.deg()).is_multiple_of(2) {
            1.0
        } else {
            -1.0
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Role {
    Coordinate,
    Momentum,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct VarEntry {
    pub name: String,
    pub grade: Grade,
    pub role: Role,
    /// Index of the conjugate variable in the same table.
    pub partner: usize,
}

/// Ordered declaration of phase-space variables.
///
/// Variables are declared in conjugate pairs. The declaration order of the odd
/// variables is the global ordering used for canonical monomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct VarTable {
    entries: Vec<VarEntry>,
}

impl VarTable {
    /// Build a table from `(coordinate, momentum, grade)` triples. The coordinate
    /// of each pair is declared before its momentum.
    pub fn from_pairs<S: AsRef<str>>(pairs: &[(S, S, Grade)]) -> Result<Arc<Self>> {
        let mut entries = Vec::with_capacity(pairs.len() * 2);
        for (coord, mom, grade) in pairs {
            let i = entries.len();
            entries.push(VarEntry {
                name: coord.as_ref().to_string(),
                grade: *grade,
                role: Role::Coordinate,
                partner: i + 1,
            });
            entries.push(VarEntry {
                name: mom.as_ref().to_string(),
                grade: *grade,
                role: Role::Momentum,
                partner: i,
            });
        }
        Self::from_entries(entries)
    }

    /// Build a table from explicit entries, validating names and pairing.
    pub fn from_entries(entries: Vec<VarEntry>) -> Result<Arc<Self>> {
        let mut seen = HashSet::new();
        for e in &entries {
            if e.name.is_empty() {
                return Err(Error::InvalidVarTable("empty variable name".into()));
            }
            if !seen.insert(e.name.as_str()) {
                return Err(Error::InvalidVarTable(format!("duplicate name `{}`", e.name)));
            }
        }
        for (i, e) in entries.iter().enumerate() {
            let partner = entries.get(e.partner).ok_or_else(|| {
                Error::InvalidVarTable(format!("`{}` has no partner at {}", e.name, e.partner))
            })?;
            if partner.partner != i {
                return Err(Error::InvalidVarTable(format!(
                    "`{}` and `{}` are not mutual partners",
                    e.name, partner.name
                )));
            }
            if partner.grade != e.grade {
                return Err(Error::InvalidVarTable(format!(
                    "`{}` and `{}` differ in parity",
                    e.name, partner.name
                )));
            }
            if partner.role == e.role {
                return Err(Error::InvalidVarTable(format!(
                    "`{}` and `{}` have the same role",
                    e.name, partner.name
                )));
            }
        }
        Ok(Arc::new(VarTable { entries }))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[VarEntry] {
        &self.entries
    }

    pub fn entry(&self, idx: usize) -> &VarEntry {
        &self.entries[idx]
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.entries[idx].name
    }

    pub fn grade(&self, idx: usize) -> Grade {
        self.entries[idx].grade
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.entries
            .iter()
            .position(|e| e.name == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// `(coordinate, momentum)` index pairs in declaration order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, e)| e.role == Role::Coordinate)
            .map(|(i, e)| (i, e.partner))
            .collect()
    }

    pub fn odd_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, e)| e.grade == Grade::Odd)
            .map(|(i, _)| i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs_are_linked() {
        let t = VarTable::from_pairs(&[("q", "p", Grade::Even), ("theta", "pi", Grade::Odd)]).unwrap();
        assert_eq!(t.len(), 4);
        assert_eq!(t.pairs(), vec![(0, 1), (2, 3)]);
        assert_eq!(t.entry(3).role, Role::Momentum);
        assert_eq!(t.odd_indices().collect::<Vec<_>>(), vec![2, 3]);
    }

    #[test]
    fn duplicate_names_rejected() {
        let err = VarTable::from_pairs(&[("q", "p", Grade::Even), ("q", "pi", Grade::Odd)]).unwrap_err();
        assert!(matches!(err, Error::InvalidVarTable(_)));
    }

    #[test]
    fn mixed_parity_partner_rejected() {
        let entries = vec![
            VarEntry { name: "q".into(), grade: Grade::Even, role: Role::Coordinate, partner: 1 },
            VarEntry { name: "pi".into(), grade: Grade::Odd, role: Role::Momentum, partner: 0 },
        ];
        assert!(VarTable::from_entries(entries).is_err());
    }

    #[test]
    fn unknown_name() {
        let t = VarTable::from_pairs(&[("q", "p", Grade::Even)]).unwrap();
        assert_eq!(t.index_of("x"), Err(Error::UnknownVariable("x".into())));
    }
}
