//! Iterated Poisson-Ore extensions: a trivial-bracket polynomial base plus
//! ordered `(alpha, delta)` steps, with the derivation-axiom validators that
//! make `{x, r} = alpha(r) x + delta(r)` a Poisson bracket.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::bracket::{BracketTable, JacobiCheck};
use crate::error::{Error, Result};
use crate::poly::{CPoly, VarId, VarRegistry};

/// A derivation specified by generator images and extended by the Leibniz
/// rule; condition (1) of the derivation axioms holds by construction.
#[derive(Clone, Debug, PartialEq)]
pub struct Derivation {
    registry: Arc<VarRegistry>,
    images: BTreeMap<usize, CPoly>,
}

impl Derivation {
    pub fn zero(registry: &Arc<VarRegistry>) -> Self {
        Derivation {
            registry: Arc::clone(registry),
            images: BTreeMap::new(),
        }
    }

    pub fn set_image(&mut self, v: VarId, p: CPoly) -> Result<()> {
        if !p.registry().same_as(&self.registry) {
            return Err(Error::RegistryMismatch);
        }
        if p.is_zero() {
            self.images.remove(&v.0);
        } else {
            self.images.insert(v.0, p);
        }
        Ok(())
    }

    pub fn image(&self, v: VarId) -> CPoly {
        self.images
            .get(&v.0)
            .cloned()
            .unwrap_or_else(|| CPoly::zero(&self.registry))
    }

    pub fn images(&self) -> impl Iterator<Item = (VarId, &CPoly)> {
        self.images.iter().map(|(&v, p)| (VarId(v), p))
    }

    pub fn is_zero(&self) -> bool {
        self.images.is_empty()
    }

    /// Leibniz extension: `D(p) = sum_v dp/dx_v * D(x_v)`.
    pub fn apply(&self, p: &CPoly) -> CPoly {
        let mut out = CPoly::zero(&self.registry);
        for (&v, image) in &self.images {
            let dp = p.partial(VarId(v));
            if !dp.is_zero() {
                out = &out + &(&dp * image);
            }
        }
        out
    }

    /// True when every image only involves variables strictly below `bound`.
    pub fn supported_below(&self, bound: VarId) -> bool {
        self.images
            .iter()
            .all(|(&v, p)| v < bound.0 && p.supported_below(bound))
    }
}

/// Outcome of a derivation-axiom check on generator pairs.
#[derive(Clone, Debug, PartialEq)]
pub enum DerivationCheck {
    Pass,
    Witness { r: VarId, s: VarId, residual: CPoly },
}

impl DerivationCheck {
    pub fn is_pass(&self) -> bool {
        matches!(self, DerivationCheck::Pass)
    }
}

/// Poisson-derivation condition `alpha({r,s}) = {alpha(r), s} + {r, alpha(s)}`
/// checked on generator pairs of the lower bracket. Pairs suffice because the
/// defect of the condition is a biderivation.
pub fn check_poisson_derivation(
    lower: &BracketTable,
    alpha: &Derivation,
    n_lower: usize,
) -> DerivationCheck {
    for i in 0..n_lower {
        for j in (i + 1)..n_lower {
            let (r, s) = (VarId(i), VarId(j));
            let xr = CPoly::var(lower.registry(), r);
            let xs = CPoly::var(lower.registry(), s);
            let lhs = alpha.apply(&lower.of_vars(r, s));
            let rhs = &lower.extend(&alpha.image(r), &xs).unwrap()
                + &lower.extend(&xr, &alpha.image(s)).unwrap();
            let residual = &lhs - &rhs;
            if !residual.is_zero() {
                return DerivationCheck::Witness { r, s, residual };
            }
        }
    }
    DerivationCheck::Pass
}

/// Poisson alpha-derivation condition
/// `delta({r,s}) = {delta(r), s} + {r, delta(s)} + alpha(r) delta(s) - delta(r) alpha(s)`
/// checked on generator pairs, which suffice by the same defect-closure
/// argument.
pub fn check_poisson_alpha_derivation(
    lower: &BracketTable,
    alpha: &Derivation,
    delta: &Derivation,
    n_lower: usize,
) -> DerivationCheck {
    for i in 0..n_lower {
        for j in (i + 1)..n_lower {
            let (r, s) = (VarId(i), VarId(j));
            let xr = CPoly::var(lower.registry(), r);
            let xs = CPoly::var(lower.registry(), s);
            let residual = alpha_derivation_defect(lower, alpha, delta, &xr, &xs);
            if !residual.is_zero() {
                return DerivationCheck::Witness { r, s, residual };
            }
        }
    }
    DerivationCheck::Pass
}

/// The defect `D(r, s)` of the alpha-derivation condition on arbitrary
/// elements; exposed for the defect-closure property tests.
pub fn alpha_derivation_defect(
    lower: &BracketTable,
    alpha: &Derivation,
    delta: &Derivation,
    r: &CPoly,
    s: &CPoly,
) -> CPoly {
    let lhs = delta.apply(&lower.extend(r, s).unwrap());
    let rhs = &(&lower.extend(&delta.apply(r), s).unwrap()
        + &lower.extend(r, &delta.apply(s)).unwrap())
        + &(&(&alpha.apply(r) * &delta.apply(s)) - &(&delta.apply(r) * &alpha.apply(s)));
    &lhs - &rhs
}

/// One Poisson-Ore step: adjoin `var` with `{var, r} = alpha(r) var + delta(r)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PoissonStep {
    pub var: VarId,
    pub alpha: Derivation,
    pub delta: Derivation,
}

/// An iterated Poisson-Ore extension of a trivial-bracket polynomial base.
///
/// Variables `0..n_base` form the base; step `i` adjoins variable
/// `n_base + i`. Construction validates every step against the bracket of
/// the algebra below it and checks Jacobi on the full table.
#[derive(Clone, Debug, PartialEq)]
pub struct PoissonTower {
    registry: Arc<VarRegistry>,
    n_base: usize,
    steps: Vec<PoissonStep>,
}

impl PoissonTower {
    pub fn new(
        registry: Arc<VarRegistry>,
        n_base: usize,
        steps: Vec<PoissonStep>,
    ) -> Result<Self> {
        if registry.len() != n_base + steps.len() {
            return Err(Error::InvalidParameter(format!(
                "registry has {} variables but tower declares {} base + {} steps",
                registry.len(),
                n_base,
                steps.len()
            )));
        }
        let tower = PoissonTower {
            registry,
            n_base,
            steps,
        };
        tower.validate()?;
        Ok(tower)
    }

    fn validate(&self) -> Result<()> {
        let mut table = BracketTable::trivial(&self.registry);
        for (idx, step) in self.steps.iter().enumerate() {
            let var = VarId(self.n_base + idx);
            let name = self.registry.name(var).to_string();
            if step.var != var {
                return Err(Error::InvalidStep {
                    var: name,
                    detail: format!(
                        "step variable must be #{} in registration order",
                        var.0
                    ),
                });
            }
            if !step.alpha.supported_below(var) || !step.delta.supported_below(var) {
                return Err(Error::InvalidStep {
                    var: name,
                    detail: "alpha/delta images must involve only earlier variables".to_string(),
                });
            }
            let n_lower = var.0;
            if let DerivationCheck::Witness { r, s, residual } =
                check_poisson_derivation(&table, &step.alpha, n_lower)
            {
                return Err(Error::InvalidStep {
                    var: name,
                    detail: format!(
                        "alpha is not a Poisson derivation: defect at ({}, {}) is {}",
                        self.registry.name(r),
                        self.registry.name(s),
                        residual
                    ),
                });
            }
            if let DerivationCheck::Witness { r, s, residual } =
                check_poisson_alpha_derivation(&table, &step.alpha, &step.delta, n_lower)
            {
                return Err(Error::InvalidStep {
                    var: name,
                    detail: format!(
                        "delta is not a Poisson alpha-derivation: defect at ({}, {}) is {}",
                        self.registry.name(r),
                        self.registry.name(s),
                        residual
                    ),
                });
            }
            extend_table_with_step(&mut table, self, step, var);
        }
        // Guaranteed by the step axioms; asserted anyway.
        if let JacobiCheck::Witness { i, j, k, .. } = table.jacobi_check() {
            return Err(Error::NotPoisson(format!(
                "tower table fails Jacobi at ({}, {}, {})",
                self.registry.name(i),
                self.registry.name(j),
                self.registry.name(k)
            )));
        }
        Ok(())
    }

    pub fn registry(&self) -> &Arc<VarRegistry> {
        &self.registry
    }

    pub fn n_base(&self) -> usize {
        self.n_base
    }

    pub fn n_vars(&self) -> usize {
        self.registry.len()
    }

    pub fn steps(&self) -> &[PoissonStep] {
        &self.steps
    }

    pub fn base_vars(&self) -> impl Iterator<Item = VarId> {
        (0..self.n_base).map(VarId)
    }

    /// The generator bracket table induced by `{x, r} = alpha(r) x + delta(r)`.
    pub fn to_table(&self) -> BracketTable {
        let mut table = BracketTable::trivial(&self.registry);
        for (idx, step) in self.steps.iter().enumerate() {
            let var = VarId(self.n_base + idx);
            extend_table_with_step(&mut table, self, step, var);
        }
        table
    }

    /// The table of the sub-tower strictly below step `step_idx`.
    pub fn lower_table(&self, step_idx: usize) -> BracketTable {
        let mut table = BracketTable::trivial(&self.registry);
        for (idx, step) in self.steps.iter().take(step_idx).enumerate() {
            let var = VarId(self.n_base + idx);
            extend_table_with_step(&mut table, self, step, var);
        }
        table
    }

    /// True when every step keeps the bracket graded: `alpha(v)` homogeneous
    /// of `deg v` and `delta(v)` homogeneous of `deg x + deg v`.
    pub fn is_graded(&self) -> bool {
        self.to_table().is_graded()
    }
}

fn extend_table_with_step(
    table: &mut BracketTable,
    tower: &PoissonTower,
    step: &PoissonStep,
    var: VarId,
) {
    let x = CPoly::var(&tower.registry, var);
    for g in 0..var.0 {
        let g = VarId(g);
        let value = &(&step.alpha.image(g) * &x) + &step.delta.image(g);
        table.set(var, g, value).unwrap();
    }
}

/// The closed form of the bracket on the top step:
/// `{r x^p, s x^q} = ({r,s} + p r alpha(s) - q alpha(r) s) x^(p+q)
///                 + (p r delta(s) - q delta(r) s) x^(p+q-1)`.
pub fn bracket_closed_form(
    tower: &PoissonTower,
    r: &CPoly,
    p: u32,
    s: &CPoly,
    q: u32,
) -> Result<CPoly> {
    let Some(step) = tower.steps.last() else {
        return Err(Error::InvalidParameter(
            "closed form requires at least one step".to_string(),
        ));
    };
    let x_var = step.var;
    if !r.supported_below(x_var) || !s.supported_below(x_var) {
        return Err(Error::InvalidParameter(
            "closed-form arguments must lie below the top step".to_string(),
        ));
    }
    let lower = tower.lower_table(tower.steps.len() - 1);
    let x = CPoly::var(&tower.registry, x_var);
    let p_scalar = crate::scalar::GScalar::from_int(p as i64);
    let q_scalar = crate::scalar::GScalar::from_int(q as i64);
    let head = &lower.extend(r, s)?
        + &(&(r * &step.alpha.apply(s)).scale(&p_scalar)
            - &(&step.alpha.apply(r) * s).scale(&q_scalar));
    let tail = &(r * &step.delta.apply(s)).scale(&p_scalar)
        - &(&step.delta.apply(r) * s).scale(&q_scalar);
    let mut out = &head * &x.pow(p + q);
    if p + q > 0 {
        out = &out + &(&tail * &x.pow(p + q - 1));
    } else {
        debug_assert!(tail.is_zero());
    }
    Ok(out)
}
