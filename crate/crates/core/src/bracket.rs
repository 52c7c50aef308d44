//! Poisson brackets presented by generator tables.
//!
//! A table stores `{x_i, x_j}` for `i < j`; the bracket extends to the whole
//! polynomial algebra as the unique biderivation
//! `{p, q} = sum_{i<j} ({x_i, x_j}) (dp/dx_i dq/dx_j - dp/dx_j dq/dx_i)`.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{CPoly, VarId, VarRegistry};

#[derive(Clone, Debug, PartialEq)]
pub struct BracketTable {
    registry: Arc<VarRegistry>,
    // keyed by (i, j) with i < j
    entries: BTreeMap<(usize, usize), CPoly>,
}

/// Outcome of the generator-triple Jacobi check.
#[derive(Clone, Debug, PartialEq)]
pub enum JacobiCheck {
    Pass,
    Witness {
        i: VarId,
        j: VarId,
        k: VarId,
        residual: CPoly,
    },
}

impl JacobiCheck {
    pub fn is_pass(&self) -> bool {
        matches!(self, JacobiCheck::Pass)
    }
}

impl BracketTable {
    /// The trivial (zero) bracket.
    pub fn trivial(registry: &Arc<VarRegistry>) -> Self {
        BracketTable {
            registry: Arc::clone(registry),
            entries: BTreeMap::new(),
        }
    }

    pub fn registry(&self) -> &Arc<VarRegistry> {
        &self.registry
    }

    /// Record `{x_i, x_j} = p`. Either orientation is accepted and stored
    /// canonically with `i < j`.
    pub fn set(&mut self, i: VarId, j: VarId, p: CPoly) -> Result<()> {
        if i == j {
            if p.is_zero() {
                return Ok(());
            }
            return Err(Error::InvalidParameter(format!(
                "{{{v}, {v}}} must be 0",
                v = self.registry.name(i)
            )));
        }
        if !p.registry().same_as(&self.registry) {
            return Err(Error::RegistryMismatch);
        }
        let (key, val) = if i < j { ((i.0, j.0), p) } else { ((j.0, i.0), p.neg()) };
        if val.is_zero() {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, val);
        }
        Ok(())
    }

    /// `{x_i, x_j}` for any orientation.
    pub fn of_vars(&self, i: VarId, j: VarId) -> CPoly {
        if i == j {
            return CPoly::zero(&self.registry);
        }
        let key = (i.0.min(j.0), i.0.max(j.0));
        match self.entries.get(&key) {
            None => CPoly::zero(&self.registry),
            Some(p) => {
                if i < j {
                    p.clone()
                } else {
                    p.neg()
                }
            }
        }
    }

    pub fn stored_entries(&self) -> impl Iterator<Item = (VarId, VarId, &CPoly)> {
        self.entries
            .iter()
            .map(|(&(i, j), p)| (VarId(i), VarId(j), p))
    }

    /// Leibniz/biderivation extension of the generator table.
    pub fn extend(&self, a: &CPoly, b: &CPoly) -> Result<CPoly> {
        if !a.registry().same_as(&self.registry) || !b.registry().same_as(&self.registry) {
            return Err(Error::RegistryMismatch);
        }
        let mut out = CPoly::zero(&self.registry);
        for (&(i, j), table) in &self.entries {
            let da_i = a.partial(VarId(i));
            let db_j = b.partial(VarId(j));
            let da_j = a.partial(VarId(j));
            let db_i = b.partial(VarId(i));
            let cross = &(&da_i * &db_j) - &(&da_j * &db_i);
            if !cross.is_zero() {
                out = &out + &(table * &cross);
            }
        }
        Ok(out)
    }

    /// Check the Jacobi identity on all generator triples; generator triples
    /// suffice because the Jacobiator of a biderivation extension is itself a
    /// derivation in each argument.
    pub fn jacobi_check(&self) -> JacobiCheck {
        let n = self.registry.len();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let (xi, xj, xk) = (VarId(i), VarId(j), VarId(k));
                    let pi = CPoly::var(&self.registry, xi);
                    let pj = CPoly::var(&self.registry, xj);
                    let pk = CPoly::var(&self.registry, xk);
                    let t1 = self.extend(&pi, &self.of_vars(xj, xk)).unwrap();
                    let t2 = self.extend(&pj, &self.of_vars(xk, xi)).unwrap();
                    let t3 = self.extend(&pk, &self.of_vars(xi, xj)).unwrap();
                    let residual = &(&t1 + &t2) + &t3;
                    if !residual.is_zero() {
                        return JacobiCheck::Witness {
                            i: xi,
                            j: xj,
                            k: xk,
                            residual,
                        };
                    }
                }
            }
        }
        JacobiCheck::Pass
    }

    /// Degree-0 graded bracket: every entry `{x_i, x_j}` homogeneous of
    /// degree `deg x_i + deg x_j`.
    pub fn is_graded(&self) -> bool {
        self.entries.iter().all(|(&(i, j), p)| {
            let d = self.registry.degree(VarId(i)) + self.registry.degree(VarId(j));
            p.is_homogeneous_of(d)
        })
    }
}
