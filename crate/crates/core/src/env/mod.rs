//! Universal enveloping algebras of Poisson towers, built as iterated Ore
//! extensions of double length.
//!
//! Each tower variable `v` contributes two generators: `m[v]` (index `2v`)
//! and `h[v]` (index `2v + 1`). Base generators commute; each step adjoins
//! `m[x]` and then `h[x]` as skew-polynomial layers whose commutation data
//! comes from the sigma/eta generator images
//!
//! ```text
//! sigma(m_r) = (m_r, 0; m_{a(r)}, m_r)
//! sigma(h_r) = (h_r + m_{a(r)}, 0; h_{a(r)} + m_{a^2(r)}, h_r + m_{a(r)})
//! eta(m_r) = (0, m_{d(r)})          eta(h_r) = (m_{d(r)}, h_{d(r)} + m_{da(r)})
//! ```
//!
//! with `a = alpha`, `d = delta` of the step. Layer rules follow the
//! iterated form: the `m[x]` layer twists by `sigma_11` with derivation
//! `eta_1`; the `h[x]` layer twists by `sigma_22` extended by
//! `sigma'(m[x]) = m[x]`, with derivation `eta'(c) = sigma_21(c) m[x] + eta_2(c)`.

pub mod verify;

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::bracket::BracketTable;
use crate::error::{Error, Result};
use crate::poly::{fmt_terms, CPoly, VarId};
use crate::scalar::GScalar;
use crate::tower::PoissonTower;

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum GenKind {
    M,
    H,
}

/// One generator of the enveloping algebra.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct GenSym {
    pub kind: GenKind,
    pub var: VarId,
}

impl GenSym {
    pub fn index(&self) -> usize {
        2 * self.var.0
            + match self.kind {
                GenKind::M => 0,
                GenKind::H => 1,
            }
    }

    pub fn from_index(g: usize) -> Self {
        GenSym {
            kind: if g % 2 == 0 { GenKind::M } else { GenKind::H },
            var: VarId(g / 2),
        }
    }
}

/// A normal-ordered monomial: exponent vector over the generators in global
/// order. The `Ord` instance sorts by the highest generator first, in
/// descending exponent, which is the order the paper's displays use
/// (`y_2`-terms, then `y_1`-terms, then lower terms).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EnvMonomial(pub Vec<u32>);

impl EnvMonomial {
    pub fn unit(n_gens: usize) -> Self {
        EnvMonomial(vec![0; n_gens])
    }

    pub fn gen(n_gens: usize, g: usize) -> Self {
        let mut e = vec![0; n_gens];
        e[g] = 1;
        EnvMonomial(e)
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn max_support(&self) -> Option<usize> {
        self.0.iter().rposition(|&e| e > 0)
    }

    fn min_support(&self) -> Option<usize> {
        self.0.iter().position(|&e| e > 0)
    }

    fn merge_add(&self, other: &EnvMonomial) -> EnvMonomial {
        EnvMonomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Ord for EnvMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.0.len(), other.0.len());
        for (a, b) in self.0.iter().rev().zip(other.0.iter().rev()) {
            match b.cmp(a) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for EnvMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A normal-form element: finite sum of scalars times normal-ordered
/// monomials. Structural equality is algebra equality.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct EnvElement {
    terms: BTreeMap<EnvMonomial, GScalar>,
}

impl EnvElement {
    pub fn zero() -> Self {
        EnvElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(mono: EnvMonomial, c: GScalar) -> Self {
        let mut e = EnvElement::zero();
        e.insert(mono, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&EnvMonomial, &GScalar)> {
        self.terms.iter()
    }

    fn insert(&mut self, mono: EnvMonomial, c: GScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
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

    pub fn add(&self, rhs: &EnvElement) -> EnvElement {
        let mut out = self.clone();
        for (mono, c) in &rhs.terms {
            out.insert(mono.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &EnvElement) -> EnvElement {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> EnvElement {
        EnvElement {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &GScalar) -> EnvElement {
        if c.is_zero() {
            return EnvElement::zero();
        }
        EnvElement {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Right-multiply by `g_k^d`. Valid only when no term involves a
    /// generator above `k`; callers maintain that invariant.
    fn shift_gen(&self, k: usize, d: u32) -> EnvElement {
        if d == 0 {
            return self.clone();
        }
        EnvElement {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    debug_assert!(m.max_support().map_or(true, |t| t <= k));
                    let mut e = m.clone();
                    e.0[k] += d;
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Some(c) when the element is the constant c (including 0).
    pub fn as_constant(&self) -> Option<GScalar> {
        if self.terms.is_empty() {
            return Some(GScalar::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_unit() {
                return Some(c.clone());
            }
        }
        None
    }
}

/// Per-step rewrite data: generator images of the sigma entries and eta
/// components, indexed by lower generator index.
#[derive(Clone, Debug)]
pub(crate) struct StepRewrite {
    pub sigma11: Vec<EnvElement>,
    pub sigma21: Vec<EnvElement>,
    pub eta1: Vec<EnvElement>,
    pub eta2: Vec<EnvElement>,
    /// `sigma21[g] * m[x] + eta2[g]`: the derivation the `h[x]` layer
    /// actually multiplies with.
    pub eta2_prime: Vec<EnvElement>,
}

/// The enveloping algebra of a Poisson tower with normal-form arithmetic.
#[derive(Clone, Debug)]
pub struct EnvAlgebra {
    tower: PoissonTower,
    table: BracketTable,
    steps: Vec<StepRewrite>,
}

/// Construct the enveloping algebra of a validated tower.
pub fn build_env(tower: PoissonTower) -> EnvAlgebra {
    let table = tower.to_table();
    let mut alg = EnvAlgebra {
        tower,
        table,
        steps: Vec::new(),
    };
    for s in 0..alg.tower.steps().len() {
        let rw = alg.step_rewrite(s);
        alg.steps.push(rw);
    }
    alg
}

impl EnvAlgebra {
    pub fn tower(&self) -> &PoissonTower {
        &self.tower
    }

    pub fn table(&self) -> &BracketTable {
        &self.table
    }

    pub fn n_gens(&self) -> usize {
        2 * self.tower.n_vars()
    }

    fn n_base_gens(&self) -> usize {
        2 * self.tower.n_base()
    }

    pub fn gens(&self) -> impl Iterator<Item = GenSym> {
        (0..self.n_gens()).map(GenSym::from_index)
    }

    pub fn gen_name(&self, g: usize) -> String {
        let sym = GenSym::from_index(g);
        let name = self.tower.registry().name(sym.var);
        match sym.kind {
            GenKind::M => format!("m[{}]", name),
            GenKind::H => format!("h[{}]", name),
        }
    }

    pub fn one(&self) -> EnvElement {
        EnvElement::monomial(EnvMonomial::unit(self.n_gens()), GScalar::one())
    }

    pub fn constant(&self, c: GScalar) -> EnvElement {
        EnvElement::monomial(EnvMonomial::unit(self.n_gens()), c)
    }

    pub fn gen_elem(&self, g: usize) -> EnvElement {
        EnvElement::monomial(EnvMonomial::gen(self.n_gens(), g), GScalar::one())
    }

    fn is_bare_gen(elem: &EnvElement, g: usize) -> bool {
        elem.terms.len() == 1 && {
            let (m, c) = elem.terms.iter().next().unwrap();
            c.is_one() && m.0[g] == 1 && m.0.iter().sum::<u32>() == 1
        }
    }

    // ------------------------------------------------------------------
    // construction of the per-step rewrite images
    // ------------------------------------------------------------------

    fn step_rewrite(&self, s: usize) -> StepRewrite {
        let step = &self.tower.steps()[s];
        let var = step.var;
        let n_lower = 2 * var.0;
        let y1 = 2 * var.0;
        let mut rw = StepRewrite {
            sigma11: Vec::with_capacity(n_lower),
            sigma21: Vec::with_capacity(n_lower),
            eta1: Vec::with_capacity(n_lower),
            eta2: Vec::with_capacity(n_lower),
            eta2_prime: Vec::with_capacity(n_lower),
        };
        for v in 0..var.0 {
            let v = VarId(v);
            let alpha_v = step.alpha.image(v);
            let alpha2_v = step.alpha.apply(&alpha_v);
            let delta_v = step.delta.image(v);
            let delta_alpha_v = step.delta.apply(&alpha_v);
            let m_alpha = self.expand_m(&alpha_v);
            let m_alpha2 = self.expand_m(&alpha2_v);
            let h_alpha = self.expand_h(&alpha_v);
            let m_delta = self.expand_m(&delta_v);
            let h_delta = self.expand_h(&delta_v);
            let m_delta_alpha = self.expand_m(&delta_alpha_v);

            // m[v]
            rw.sigma11.push(self.gen_elem(2 * v.0));
            rw.sigma21.push(m_alpha.clone());
            rw.eta1.push(EnvElement::zero());
            rw.eta2.push(m_delta.clone());

            // h[v]
            rw.sigma11.push(self.gen_elem(2 * v.0 + 1).add(&m_alpha));
            rw.sigma21.push(h_alpha.add(&m_alpha2));
            rw.eta1.push(m_delta.clone());
            rw.eta2.push(h_delta.add(&m_delta_alpha));
        }
        for g in 0..n_lower {
            rw.eta2_prime
                .push(rw.sigma21[g].shift_gen(y1, 1).add(&rw.eta2[g]));
        }
        rw
    }

    // ------------------------------------------------------------------
    // layer maps used by multiplication
    // ------------------------------------------------------------------

    fn gen_step(&self, g: usize) -> usize {
        debug_assert!(g >= self.n_base_gens());
        g / 2 - self.tower.n_base()
    }

    /// Image of lower generator `j` under the layer-`k` automorphism.
    fn layer_sigma_image(&self, k: usize, j: usize) -> EnvElement {
        debug_assert!(j < k);
        let s = self.gen_step(k);
        if k % 2 == 1 && j == k - 1 {
            return self.gen_elem(j);
        }
        self.steps[s].sigma11[j].clone()
    }

    /// Image of lower generator `j` under the layer-`k` derivation.
    fn layer_eta_image(&self, k: usize, j: usize) -> EnvElement {
        debug_assert!(j < k);
        let s = self.gen_step(k);
        if k % 2 == 0 {
            self.steps[s].eta1[j].clone()
        } else if j == k - 1 {
            EnvElement::zero()
        } else {
            self.steps[s].eta2_prime[j].clone()
        }
    }

    fn layer_sigma(&self, k: usize, elem: &EnvElement) -> EnvElement {
        if k < self.n_base_gens() {
            return elem.clone();
        }
        self.apply_endo_by(&|j| self.layer_sigma_image(k, j), elem)
    }

    fn layer_eta(&self, k: usize, elem: &EnvElement) -> EnvElement {
        if k < self.n_base_gens() {
            return EnvElement::zero();
        }
        self.apply_twisted_by(
            &|j| self.layer_eta_image(k, j),
            Some(&|j| self.layer_sigma_image(k, j)),
            None,
            elem,
        )
    }

    // ------------------------------------------------------------------
    // generic map extension machinery
    // ------------------------------------------------------------------

    pub(crate) fn elem_pow(&self, e: &EnvElement, n: u32) -> EnvElement {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(&acc, e);
        }
        acc
    }

    /// Extend generator images multiplicatively to an algebra endomorphism.
    pub(crate) fn apply_endo_by(
        &self,
        images: &dyn Fn(usize) -> EnvElement,
        elem: &EnvElement,
    ) -> EnvElement {
        let mut out = EnvElement::zero();
        for (mono, c) in elem.terms() {
            let mut acc = self.one();
            let mut trivial = true;
            for (j, &e) in mono.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let img = images(j);
                if Self::is_bare_gen(&img, j) {
                    acc = self.mul(
                        &acc,
                        &EnvElement::monomial(
                            {
                                let mut m = EnvMonomial::unit(self.n_gens());
                                m.0[j] = e;
                                m
                            },
                            GScalar::one(),
                        ),
                    );
                } else {
                    trivial = false;
                    acc = self.mul(&acc, &self.elem_pow(&img, e));
                }
            }
            if trivial {
                out.insert(mono.clone(), c.clone());
            } else {
                out = out.add(&acc.scale(c));
            }
        }
        out
    }

    /// Extend a twisted derivation from generator images:
    /// `D(ab) = L(a) D(b) + D(a) R(b)` where `L`, `R` are endomorphisms
    /// given by generator images (`None` meaning the identity).
    pub(crate) fn apply_twisted_by(
        &self,
        d_images: &dyn Fn(usize) -> EnvElement,
        left: Option<&dyn Fn(usize) -> EnvElement>,
        right: Option<&dyn Fn(usize) -> EnvElement>,
        elem: &EnvElement,
    ) -> EnvElement {
        let mut out = EnvElement::zero();
        for (mono, c) in elem.terms() {
            let d = self.twisted_mono(d_images, left, right, mono);
            if !d.is_zero() {
                out = out.add(&d.scale(c));
            }
        }
        out
    }

    fn endo_opt(
        &self,
        images: Option<&dyn Fn(usize) -> EnvElement>,
        elem: &EnvElement,
    ) -> EnvElement {
        match images {
            None => elem.clone(),
            Some(f) => self.apply_endo_by(f, elem),
        }
    }

    fn twisted_mono(
        &self,
        d_images: &dyn Fn(usize) -> EnvElement,
        left: Option<&dyn Fn(usize) -> EnvElement>,
        right: Option<&dyn Fn(usize) -> EnvElement>,
        mono: &EnvMonomial,
    ) -> EnvElement {
        let Some(j) = mono.min_support() else {
            return EnvElement::zero();
        };
        let e = mono.0[j];
        let mut rest = mono.clone();
        rest.0[j] = 0;
        let rest_elem = EnvElement::monomial(rest.clone(), GScalar::one());
        let g_pow = EnvElement::monomial(
            {
                let mut m = EnvMonomial::unit(self.n_gens());
                m.0[j] = e;
                m
            },
            GScalar::one(),
        );

        let mut out = EnvElement::zero();
        // L(g^e) D(rest)
        if !rest.is_unit() {
            let d_rest = self.twisted_mono(d_images, left, right, &rest);
            if !d_rest.is_zero() {
                out = out.add(&self.mul(&self.endo_opt(left, &g_pow), &d_rest));
            }
        }
        // D(g^e) R(rest)
        let d_ge = self.twisted_power(d_images, left, right, j, e);
        if !d_ge.is_zero() {
            let r = self.endo_opt(right, &rest_elem);
            out = out.add(&self.mul(&d_ge, &r));
        }
        out
    }

    /// `D(g^e) = sum_t L(g)^t D(g) R(g)^(e-1-t)`.
    fn twisted_power(
        &self,
        d_images: &dyn Fn(usize) -> EnvElement,
        left: Option<&dyn Fn(usize) -> EnvElement>,
        right: Option<&dyn Fn(usize) -> EnvElement>,
        j: usize,
        e: u32,
    ) -> EnvElement {
        let d_g = d_images(j);
        if d_g.is_zero() {
            return EnvElement::zero();
        }
        let g = self.gen_elem(j);
        let l_g = self.endo_opt(left, &g);
        let r_g = self.endo_opt(right, &g);
        let mut out = EnvElement::zero();
        for t in 0..e {
            let lhs = self.elem_pow(&l_g, t);
            let rhs = self.elem_pow(&r_g, e - 1 - t);
            out = out.add(&self.mul(&self.mul(&lhs, &d_g), &rhs));
        }
        out
    }

    // ------------------------------------------------------------------
    // multiplication
    // ------------------------------------------------------------------

    pub fn mul(&self, a: &EnvElement, b: &EnvElement) -> EnvElement {
        let mut out = EnvElement::zero();
        for (u, cu) in a.terms() {
            for (v, cv) in b.terms() {
                let prod = self.mul_mono(u, v);
                out = out.add(&prod.scale(&(cu * cv)));
            }
        }
        out
    }

    pub fn commutator(&self, a: &EnvElement, b: &EnvElement) -> EnvElement {
        self.mul(a, b).sub(&self.mul(b, a))
    }

    fn mul_mono(&self, u: &EnvMonomial, v: &EnvMonomial) -> EnvElement {
        let (u_max, v_min) = (u.max_support(), v.min_support());
        match (u_max, v_min) {
            (None, _) | (_, None) => {
                return EnvElement::monomial(u.merge_add(v), GScalar::one());
            }
            (Some(um), Some(vm)) if um <= vm => {
                // already normal-ordered
                return EnvElement::monomial(u.merge_add(v), GScalar::one());
            }
            _ => {}
        }
        let k = u
            .max_support()
            .unwrap()
            .max(v.max_support().unwrap());
        if k < self.n_base_gens() {
            // base generators pairwise commute
            return EnvElement::monomial(u.merge_add(v), GScalar::one());
        }
        let (uk, vk) = (u.0[k], v.0[k]);
        let mut u_low = u.clone();
        u_low.0[k] = 0;
        let mut v_low = v.clone();
        v_low.0[k] = 0;
        let v_low_elem = EnvElement::monomial(v_low, GScalar::one());
        let passed = if uk == 0 {
            v_low_elem
        } else {
            self.push_power(k, uk, &v_low_elem)
        };
        let prod = self.mul(&EnvElement::monomial(u_low, GScalar::one()), &passed);
        prod.shift_gen(k, vk)
    }

    /// `g_k^e * w` for `w` supported strictly below `k`; the result is
    /// supported at or below `k`.
    fn push_power(&self, k: usize, e: u32, w: &EnvElement) -> EnvElement {
        let mut acc = w.clone();
        for _ in 0..e {
            acc = self.push_once(k, &acc);
        }
        acc
    }

    fn push_once(&self, k: usize, w: &EnvElement) -> EnvElement {
        let mut out = EnvElement::zero();
        for (mono, c) in w.terms() {
            let d = mono.0[k];
            let mut low = mono.clone();
            low.0[k] = 0;
            let low_elem = EnvElement::monomial(low, GScalar::one());
            let s = self.layer_sigma(k, &low_elem);
            out = out.add(&s.shift_gen(k, d + 1).scale(c));
            let h = self.layer_eta(k, &low_elem);
            if !h.is_zero() {
                out = out.add(&h.shift_gen(k, d).scale(c));
            }
        }
        out
    }

    // ------------------------------------------------------------------
    // the m / h expansion maps
    // ------------------------------------------------------------------

    /// The algebra map `m`: substitute `m[v]` for every variable.
    pub fn expand_m(&self, p: &CPoly) -> EnvElement {
        let n = self.n_gens();
        let mut out = EnvElement::zero();
        for (exps, c) in p.terms() {
            let mut m = EnvMonomial::unit(n);
            for (v, &e) in exps.iter().enumerate() {
                m.0[2 * v] = e;
            }
            out.insert(m, c.clone());
        }
        out
    }

    /// The linear map `h`: kills scalars and satisfies
    /// `h(rs) = m(r) h(s) + m(s) h(r)`.
    pub fn expand_h(&self, p: &CPoly) -> EnvElement {
        let mut out = EnvElement::zero();
        for (exps, c) in p.terms() {
            let part = self.h_mono(exps);
            if !part.is_zero() {
                out = out.add(&part.scale(c));
            }
        }
        out
    }

    fn h_mono(&self, exps: &[u32]) -> EnvElement {
        let n = self.n_gens();
        let Some(v) = exps.iter().rposition(|&e| e > 0) else {
            return EnvElement::zero();
        };
        let e = exps[v];
        let mut rest = exps.to_vec();
        rest[v] = 0;
        // m(rest) * h(v^e): normal-ordered by construction since all of
        // rest's generators sit below m[v] < h[v].
        let mut lead = EnvMonomial::unit(n);
        for (w, &ew) in rest.iter().enumerate() {
            lead.0[2 * w] = ew;
        }
        lead.0[2 * v] = e - 1;
        lead.0[2 * v + 1] = 1;
        let term1 = EnvElement::monomial(lead, GScalar::from_int(e as i64));
        if rest.iter().all(|&x| x == 0) {
            return term1;
        }
        // m(v^e) * h(rest) needs reordering.
        let mut mv = EnvMonomial::unit(n);
        mv.0[2 * v] = e;
        let term2 = self.mul(
            &EnvElement::monomial(mv, GScalar::one()),
            &self.h_mono(&rest),
        );
        term1.add(&term2)
    }

    // ------------------------------------------------------------------
    // grading
    // ------------------------------------------------------------------

    /// Weighted degree of a monomial under `deg m[v] = deg h[v] = deg v`.
    pub fn mono_degree(&self, mono: &EnvMonomial) -> u32 {
        mono.0
            .iter()
            .enumerate()
            .map(|(g, &e)| e * self.tower.registry().degree(VarId(g / 2)))
            .sum()
    }

    /// Total `h`-exponent of step generators: the `y_2`-filtration degree.
    pub fn y2_degree(&self, elem: &EnvElement) -> u32 {
        elem.terms()
            .map(|(m, _)| {
                m.0.iter()
                    .enumerate()
                    .filter(|(g, _)| g % 2 == 1 && g / 2 >= self.tower.n_base())
                    .map(|(_, &e)| e)
                    .sum()
            })
            .max()
            .unwrap_or(0)
    }

    /// Count normal-ordered monomials of weighted degree exactly `d` by
    /// explicit enumeration.
    pub fn hilbert_count(&self, d: u32) -> Result<u64> {
        let reg = self.tower.registry();
        if reg.vars().any(|v| reg.degree(v) == 0) {
            return Err(Error::NotGraded(
                "all variables must have degree >= 1".to_string(),
            ));
        }
        if !self.table.is_graded() {
            return Err(Error::NotGraded(
                "the tower bracket is not graded".to_string(),
            ));
        }
        let degrees: Vec<u32> = (0..self.n_gens())
            .map(|g| reg.degree(VarId(g / 2)))
            .collect();
        fn enumerate(degrees: &[u32], d: u32) -> u64 {
            match degrees.split_first() {
                None => u64::from(d == 0),
                Some((&w, rest)) => {
                    let mut total = 0;
                    let mut used = 0;
                    while used <= d {
                        total += enumerate(rest, d - used);
                        used += w;
                    }
                    total
                }
            }
        }
        Ok(enumerate(&degrees, d))
    }

    // ------------------------------------------------------------------
    // printing
    // ------------------------------------------------------------------

    pub fn render(&self, elem: &EnvElement) -> String {
        let atoms: Vec<(String, GScalar)> = elem
            .terms()
            .map(|(m, c)| (self.mono_string(m), c.clone()))
            .collect();
        fmt_terms(&atoms)
    }

    fn mono_string(&self, mono: &EnvMonomial) -> String {
        let mut parts = Vec::new();
        for (g, &e) in mono.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if e == 1 {
                parts.push(self.gen_name(g));
            } else {
                parts.push(format!("{}^{}", self.gen_name(g), e));
            }
        }
        parts.join("*")
    }
}

#[cfg(test)]
mod tests;
