//! Commutative multivariate polynomials over Q(i) with graded variable
//! degrees.
//!
//! Exponent vectors are dense (one slot per registered variable) and terms
//! are kept in a `BTreeMap`, so every polynomial is a canonical normal form
//! and iteration order is the lexicographic order on exponent vectors.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::GScalar;

/// Index into a [`VarRegistry`]. Registration order is the total variable
/// order used everywhere downstream.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct VarId(pub usize);

/// Named variables with assigned degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarRegistry {
    names: Vec<String>,
    degrees: Vec<u32>,
}

impl VarRegistry {
    pub fn new() -> Self {
        VarRegistry {
            names: Vec::new(),
            degrees: Vec::new(),
        }
    }

    pub fn add(&mut self, name: &str, degree: u32) -> Result<VarId> {
        if self.names.iter().any(|n| n == name) {
            return Err(Error::DuplicateVariable(name.to_string()));
        }
        self.names.push(name.to_string());
        self.degrees.push(degree);
        Ok(VarId(self.names.len() - 1))
    }

    /// Build a registry of degree-1 variables in one call.
    pub fn of_names(names: &[&str]) -> Result<Arc<VarRegistry>> {
        let mut reg = VarRegistry::new();
        for n in names {
            reg.add(n, 1)?;
        }
        Ok(Arc::new(reg))
    }

    pub fn id_of(&self, name: &str) -> Option<VarId> {
        self.names.iter().position(|n| n == name).map(VarId)
    }

    pub fn name(&self, v: VarId) -> &str {
        &self.names[v.0]
    }

    pub fn degree(&self, v: VarId) -> u32 {
        self.degrees[v.0]
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn vars(&self) -> impl Iterator<Item = VarId> {
        (0..self.len()).map(VarId)
    }

    pub fn same_as(&self, other: &VarRegistry) -> bool {
        self.names == other.names && self.degrees == other.degrees
    }
}

impl Default for VarRegistry {
    fn default() -> Self {
        VarRegistry::new()
    }
}

/// A commutative polynomial in canonical form: no zero coefficients, dense
/// exponent vectors of length `registry.len()`.
#[derive(Clone, Debug)]
pub struct CPoly {
    registry: Arc<VarRegistry>,
    terms: BTreeMap<Vec<u32>, GScalar>,
}

impl PartialEq for CPoly {
    fn eq(&self, other: &Self) -> bool {
        self.compatible(other) && self.terms == other.terms
    }
}

impl Eq for CPoly {}

impl CPoly {
    pub fn zero(registry: &Arc<VarRegistry>) -> Self {
        CPoly {
            registry: Arc::clone(registry),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(registry: &Arc<VarRegistry>, c: GScalar) -> Self {
        let mut p = CPoly::zero(registry);
        if !c.is_zero() {
            p.terms.insert(vec![0; registry.len()], c);
        }
        p
    }

    pub fn one(registry: &Arc<VarRegistry>) -> Self {
        CPoly::constant(registry, GScalar::one())
    }

    pub fn var(registry: &Arc<VarRegistry>, v: VarId) -> Self {
        let mut exps = vec![0; registry.len()];
        exps[v.0] = 1;
        CPoly::monomial(registry, exps, GScalar::one())
    }

    pub fn monomial(registry: &Arc<VarRegistry>, exps: Vec<u32>, c: GScalar) -> Self {
        assert_eq!(exps.len(), registry.len(), "exponent vector length");
        let mut p = CPoly::zero(registry);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn registry(&self) -> &Arc<VarRegistry> {
        &self.registry
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Some(c) when the polynomial is the constant c (including 0).
    pub fn as_constant(&self) -> Option<GScalar> {
        if self.terms.is_empty() {
            return Some(GScalar::zero());
        }
        if self.terms.len() == 1 {
            let (exps, c) = self.terms.iter().next().unwrap();
            if exps.iter().all(|&e| e == 0) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &GScalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn compatible(&self, other: &CPoly) -> bool {
        Arc::ptr_eq(&self.registry, &other.registry) || self.registry.same_as(&other.registry)
    }

    fn insert_term(&mut self, exps: Vec<u32>, c: GScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn try_add(&self, rhs: &CPoly) -> Result<CPoly> {
        if !self.compatible(rhs) {
            return Err(Error::RegistryMismatch);
        }
        let mut out = self.clone();
        for (exps, c) in &rhs.terms {
            out.insert_term(exps.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &CPoly) -> Result<CPoly> {
        self.try_add(&rhs.neg())
    }

    pub fn try_mul(&self, rhs: &CPoly) -> Result<CPoly> {
        if !self.compatible(rhs) {
            return Err(Error::RegistryMismatch);
        }
        let mut out = CPoly::zero(&self.registry);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.insert_term(exps, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> CPoly {
        CPoly {
            registry: Arc::clone(&self.registry),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &GScalar) -> CPoly {
        if c.is_zero() {
            return CPoly::zero(&self.registry);
        }
        CPoly {
            registry: Arc::clone(&self.registry),
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> CPoly {
        let mut acc = CPoly::one(&self.registry);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative with respect to `v`.
    pub fn partial(&self, v: VarId) -> CPoly {
        let mut out = CPoly::zero(&self.registry);
        for (exps, c) in &self.terms {
            let e = exps[v.0];
            if e == 0 {
                continue;
            }
            let mut down = exps.clone();
            down[v.0] -= 1;
            out.insert_term(down, c * &GScalar::from_int(e as i64));
        }
        out
    }

    fn term_weighted_degree(&self, exps: &[u32]) -> u32 {
        exps.iter()
            .enumerate()
            .map(|(v, &e)| e * self.registry.degree(VarId(v)))
            .sum()
    }

    /// Maximum graded degree over terms; None for the zero polynomial.
    pub fn weighted_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|e| self.term_weighted_degree(e))
            .max()
    }

    /// Maximum total degree (unweighted) over terms.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms
            .keys()
            .all(|e| self.term_weighted_degree(e) == d)
    }

    /// Variables appearing with nonzero exponent.
    pub fn support(&self) -> Vec<VarId> {
        let n = self.registry.len();
        let mut used = vec![false; n];
        for exps in self.terms.keys() {
            for (v, &e) in exps.iter().enumerate() {
                if e > 0 {
                    used[v] = true;
                }
            }
        }
        used.iter()
            .enumerate()
            .filter(|(_, &u)| u)
            .map(|(v, _)| VarId(v))
            .collect()
    }

    /// True when every variable appearing is strictly below `bound`.
    pub fn supported_below(&self, bound: VarId) -> bool {
        self.support().iter().all(|v| v.0 < bound.0)
    }

    /// Substitute `images[v]` for each variable `v`. All images must share a
    /// registry; the result lives in that registry.
    pub fn substitute(&self, images: &[CPoly]) -> Result<CPoly> {
        if images.len() != self.registry.len() {
            return Err(Error::DimMismatch(format!(
                "substitution needs {} images, got {}",
                self.registry.len(),
                images.len()
            )));
        }
        let target = match images.first() {
            Some(p) => p.registry(),
            None => &self.registry,
        };
        let mut out = CPoly::zero(target);
        for (exps, c) in &self.terms {
            let mut term = CPoly::constant(target, c.clone());
            for (v, &e) in exps.iter().enumerate() {
                if e > 0 {
                    term = term.try_mul(&images[v].pow(e))?;
                }
            }
            out = out.try_add(&term)?;
        }
        Ok(out)
    }
}

impl Add for &CPoly {
    type Output = CPoly;
    fn add(self, rhs: &CPoly) -> CPoly {
        self.try_add(rhs).expect("registry mismatch in +")
    }
}

impl Sub for &CPoly {
    type Output = CPoly;
    fn sub(self, rhs: &CPoly) -> CPoly {
        self.try_sub(rhs).expect("registry mismatch in -")
    }
}

impl Mul for &CPoly {
    type Output = CPoly;
    fn mul(self, rhs: &CPoly) -> CPoly {
        self.try_mul(rhs).expect("registry mismatch in *")
    }
}

impl Neg for &CPoly {
    type Output = CPoly;
    fn neg(self) -> CPoly {
        CPoly::neg(self)
    }
}

fn fmt_monomial(registry: &VarRegistry, exps: &[u32]) -> String {
    let mut factors = Vec::new();
    for (v, &e) in exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if e == 1 {
            factors.push(registry.name(VarId(v)).to_string());
        } else {
            factors.push(format!("{}^{}", registry.name(VarId(v)), e));
        }
    }
    factors.join("*")
}

/// Shared term-list printer for polynomial-like sums. `atoms` are
/// `(monomial string, coefficient)` pairs in print order.
pub(crate) fn fmt_terms(atoms: &[(String, GScalar)]) -> String {
    if atoms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (mono, c)) in atoms.iter().enumerate() {
        let negative = c.is_display_negative();
        let abs = c.abs_display();
        let simple = abs.is_real() || abs.is_imaginary();
        let piece = if mono.is_empty() {
            if simple {
                abs.to_string()
            } else {
                format!("({})", abs)
            }
        } else if abs.is_one() {
            mono.clone()
        } else if simple {
            format!("{}*{}", abs, mono)
        } else {
            format!("({})*{}", abs, mono)
        };
        if idx == 0 {
            if negative {
                out.push('-');
            }
            out.push_str(&piece);
        } else {
            out.push_str(if negative { " - " } else { " + " });
            out.push_str(&piece);
        }
    }
    out
}

impl fmt::Display for CPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Print in descending lexicographic order on exponent vectors.
        let atoms: Vec<(String, GScalar)> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| (fmt_monomial(&self.registry, e), c.clone()))
            .collect();
        write!(f, "{}", fmt_terms(&atoms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn reg_xy() -> Arc<VarRegistry> {
        VarRegistry::of_names(&["x", "y"]).unwrap()
    }

    #[test]
    fn partial_derivative() {
        let reg = reg_xy();
        let x = CPoly::var(&reg, VarId(0));
        let y = CPoly::var(&reg, VarId(1));
        // d/dx (x^2 y) = 2 x y
        let p = &(&x * &x) * &y;
        let expect = (&x * &y).scale(&GScalar::from_int(2));
        assert_eq!(p.partial(VarId(0)), expect);
    }

    #[test]
    fn gaussian_conjugate_factorization() {
        let reg = reg_xy();
        let x = CPoly::var(&reg, VarId(0));
        let y = CPoly::var(&reg, VarId(1));
        let iy = y.scale(&GScalar::i());
        let lhs = &(&x + &iy) * &(&x - &iy);
        let expect = &(&x * &x) + &(&y * &y);
        assert_eq!(lhs, expect);
    }

    #[test]
    fn add_inverse_is_zero() {
        let reg = reg_xy();
        let x = CPoly::var(&reg, VarId(0));
        let p = &x * &x;
        assert!((&p + &p.neg()).is_zero());
    }

    #[test]
    fn registry_mismatch_is_an_error() {
        let a = CPoly::var(&reg_xy(), VarId(0));
        let other = VarRegistry::of_names(&["u", "v"]).unwrap();
        let b = CPoly::var(&other, VarId(0));
        assert_eq!(a.try_add(&b), Err(crate::error::Error::RegistryMismatch));
    }

    #[test]
    fn display_order_and_forms() {
        let reg = reg_xy();
        let x = CPoly::var(&reg, VarId(0));
        let y = CPoly::var(&reg, VarId(1));
        let p = &(&(&x * &x) + &(&y * &y)) + &CPoly::one(&reg);
        assert_eq!(p.to_string(), "x^2 + y^2 + 1");
        let q = &x.scale(&GScalar::from_int(-2)) + &y.scale(&GScalar::i());
        assert_eq!(q.to_string(), "-2*x + i*y");
        let r = x.scale(&GScalar::gauss(1, 1));
        assert_eq!(r.to_string(), "(1 + i)*x");
        assert_eq!(CPoly::zero(&reg).to_string(), "0");
    }

    fn arb_poly(reg: Arc<VarRegistry>) -> impl Strategy<Value = CPoly> {
        let n = reg.len();
        let term = (
            proptest::collection::vec(0u32..=2, n),
            -3i64..=3,
            prop::bool::ANY,
        );
        proptest::collection::vec(term, 0..4).prop_map(move |terms| {
            let mut p = CPoly::zero(&reg);
            for (exps, a, imag) in terms {
                let c = if imag {
                    GScalar::gauss(0, a)
                } else {
                    GScalar::from_int(a)
                };
                p = &p + &CPoly::monomial(&reg, exps, c);
            }
            p
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn mul_commutative_associative(
            a in arb_poly(VarRegistry::of_names(&["x", "y", "z", "u", "v"]).unwrap()),
            b in arb_poly(VarRegistry::of_names(&["x", "y", "z", "u", "v"]).unwrap()),
            c in arb_poly(VarRegistry::of_names(&["x", "y", "z", "u", "v"]).unwrap()),
        ) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }
    }
}
