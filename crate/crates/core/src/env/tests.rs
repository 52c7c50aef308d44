use std::sync::Arc;

use super::*;
use crate::poly::{VarId, VarRegistry};
use crate::tower::{Derivation, PoissonStep, PoissonTower};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// k[t][x; alpha = t d/dt, delta = d/dt]: generators m[t], h[t], m[x], h[x].
pub(crate) fn weyl_env() -> EnvAlgebra {
    let reg = VarRegistry::of_names(&["t", "x"]).unwrap();
    let t = CPoly::var(&reg, VarId(0));
    let mut alpha = Derivation::zero(&reg);
    alpha.set_image(VarId(0), t).unwrap();
    let mut delta = Derivation::zero(&reg);
    delta.set_image(VarId(0), CPoly::one(&reg)).unwrap();
    let tower = PoissonTower::new(
        reg,
        1,
        vec![PoissonStep {
            var: VarId(1),
            alpha,
            delta,
        }],
    )
    .unwrap();
    build_env(tower)
}

/// Quantum-affine-style tower on three variables: {x2, x1} = x1 x2,
/// {x3, x1} = x1 x3, {x3, x2} = 2 x2 x3.
pub(crate) fn affine3_env() -> EnvAlgebra {
    let reg = VarRegistry::of_names(&["x1", "x2", "x3"]).unwrap();
    let x1 = CPoly::var(&reg, VarId(0));
    let x2 = CPoly::var(&reg, VarId(1));
    let mut a2 = Derivation::zero(&reg);
    a2.set_image(VarId(0), x1.clone()).unwrap();
    let mut a3 = Derivation::zero(&reg);
    a3.set_image(VarId(0), x1).unwrap();
    a3.set_image(VarId(1), x2.scale(&GScalar::from_int(2))).unwrap();
    let tower = PoissonTower::new(
        reg,
        1,
        vec![
            PoissonStep {
                var: VarId(1),
                alpha: a2,
                delta: Derivation::zero(crate::poly::CPoly::one(&VarRegistry::of_names(&["x1", "x2", "x3"]).unwrap()).registry()),
            },
            PoissonStep {
                var: VarId(2),
                alpha: a3,
                delta: Derivation::zero(&VarRegistry::of_names(&["x1", "x2", "x3"]).unwrap()),
            },
        ],
    )
    .unwrap();
    build_env(tower)
}

/// Shorthand: build an element from (generator index, exponent) pairs.
pub(crate) fn mono(alg: &EnvAlgebra, gens: &[(usize, u32)], c: GScalar) -> EnvElement {
    let mut m = EnvMonomial::unit(alg.n_gens());
    for &(g, e) in gens {
        m.0[g] += e;
    }
    EnvElement::monomial(m, c)
}

const MT: usize = 0;
const HT: usize = 1;
const MX: usize = 2;
const HX: usize = 3;

#[test]
fn base_only_tower_has_two_commuting_generators() {
    let reg = VarRegistry::of_names(&["t"]).unwrap();
    let tower = PoissonTower::new(reg, 1, vec![]).unwrap();
    let alg = build_env(tower);
    assert_eq!(alg.n_gens(), 2);
    let m = alg.gen_elem(0);
    let h = alg.gen_elem(1);
    assert_eq!(alg.mul(&h, &m), alg.mul(&m, &h));
}

#[test]
fn step_rewrite_images_match_the_sigma_eta_display() {
    let alg = weyl_env();
    assert_eq!(alg.n_gens(), 4);
    let rw = &alg.steps[0];
    // sigma21(m_t) = m_{alpha(t)} = m[t]
    assert_eq!(rw.sigma21[MT], alg.gen_elem(MT));
    // eta2(m_t) = m_{delta(t)} = 1
    assert_eq!(rw.eta2[MT], alg.one());
    // sigma11(h_t) = h[t] + m[t]
    assert_eq!(rw.sigma11[HT], alg.gen_elem(HT).add(&alg.gen_elem(MT)));
    // sigma21(h_t) = h_{alpha(t)} + m_{alpha^2(t)} = h[t] + m[t]
    assert_eq!(rw.sigma21[HT], alg.gen_elem(HT).add(&alg.gen_elem(MT)));
    // eta1(h_t) = m_{delta(t)} = 1
    assert_eq!(rw.eta1[HT], alg.one());
    // eta2(h_t) = h_{delta(t)} + m_{delta(alpha(t))} = 0 + 1
    assert_eq!(rw.eta2[HT], alg.one());
}

#[test]
fn commutation_identity_2_5() {
    // h[x] * m[t] = m[t] h[x] + m[t] m[x] + 1
    let alg = weyl_env();
    let got = alg.mul(&alg.gen_elem(HX), &alg.gen_elem(MT));
    let expect = mono(&alg, &[(MT, 1), (HX, 1)], GScalar::one())
        .add(&mono(&alg, &[(MT, 1), (MX, 1)], GScalar::one()))
        .add(&alg.one());
    assert_eq!(got, expect);
    assert_eq!(alg.render(&got), "m[t]*h[x] + m[t]*m[x] + 1");
}

#[test]
fn commutation_identity_2_6() {
    let alg = weyl_env();
    // m[x] * h[t] = (h[t] + m[t]) m[x] + 1
    let got = alg.mul(&alg.gen_elem(MX), &alg.gen_elem(HT));
    let expect = mono(&alg, &[(HT, 1), (MX, 1)], GScalar::one())
        .add(&mono(&alg, &[(MT, 1), (MX, 1)], GScalar::one()))
        .add(&alg.one());
    assert_eq!(got, expect);

    // m[x]^2 * h[t] = (h[t] + 2 m[t]) m[x]^2 + 2 m[x]
    let mx2 = mono(&alg, &[(MX, 2)], GScalar::one());
    let got = alg.mul(&mx2, &alg.gen_elem(HT));
    let expect = mono(&alg, &[(HT, 1), (MX, 2)], GScalar::one())
        .add(&mono(&alg, &[(MT, 1), (MX, 2)], GScalar::from_int(2)))
        .add(&mono(&alg, &[(MX, 1)], GScalar::from_int(2)));
    assert_eq!(got, expect);
}

#[test]
fn expansion_maps() {
    let alg = weyl_env();
    let reg = alg.tower().registry();
    let t = CPoly::var(reg, VarId(0));
    let x = CPoly::var(reg, VarId(1));

    // m(t x) = m[t] m[x]
    assert_eq!(
        alg.expand_m(&(&t * &x)),
        mono(&alg, &[(MT, 1), (MX, 1)], GScalar::one())
    );

    // h(x^2) = 2 m[x] h[x]
    assert_eq!(
        alg.expand_h(&x.pow(2)),
        mono(&alg, &[(MX, 1), (HX, 1)], GScalar::from_int(2))
    );

    // h(t x) = m[t] h[x] + (h[t] + m[t]) m[x] + 1
    let got = alg.expand_h(&(&t * &x));
    let expect = mono(&alg, &[(MT, 1), (HX, 1)], GScalar::one())
        .add(&mono(&alg, &[(HT, 1), (MX, 1)], GScalar::one()))
        .add(&mono(&alg, &[(MT, 1), (MX, 1)], GScalar::one()))
        .add(&alg.one());
    assert_eq!(got, expect);
    assert_eq!(alg.render(&got), "m[t]*h[x] + h[t]*m[x] + m[t]*m[x] + 1");

    // h of a constant vanishes
    assert!(alg
        .expand_h(&CPoly::constant(reg, GScalar::ratio(7, 3)))
        .is_zero());
}

#[test]
fn expand_h_matches_eq_2_4_closed_form() {
    // For p = r x^i: h(p) = i m_r y1^(i-1) y2 + (h_r + i m_{a(r)}) y1^i
    //                      + i m_{d(r)} y1^(i-1)
    let alg = weyl_env();
    let reg = alg.tower().registry();
    let x = CPoly::var(reg, VarId(1));
    let step = &alg.tower().steps()[0];
    let mut rng = StdRng::seed_from_u64(17);
    for _ in 0..20 {
        let deg = rng.gen_range(0u32..=3);
        let mut r = CPoly::zero(reg);
        for _ in 0..2 {
            let e = rng.gen_range(0..=deg);
            let mut exps = vec![0; 2];
            exps[0] = e;
            r = &r + &CPoly::monomial(reg, exps, GScalar::gauss(rng.gen_range(-2..=2), rng.gen_range(-1..=1)));
        }
        for i in 1u32..=3 {
            let p = &r * &x.pow(i);
            let got = alg.expand_h(&p);
            let i_scalar = GScalar::from_int(i as i64);
            let y1_pow_im1 = mono(&alg, &[(MX, i - 1)], GScalar::one());
            let y1_pow_i = mono(&alg, &[(MX, i)], GScalar::one());
            let y2 = alg.gen_elem(HX);
            let lead = alg
                .mul(&alg.expand_m(&r), &alg.mul(&y1_pow_im1, &y2))
                .scale(&i_scalar);
            let mid = alg.mul(
                &alg.expand_h(&r)
                    .add(&alg.expand_m(&step.alpha.apply(&r)).scale(&i_scalar)),
                &y1_pow_i,
            );
            let tail = alg
                .mul(&alg.expand_m(&step.delta.apply(&r)), &y1_pow_im1)
                .scale(&i_scalar);
            assert_eq!(got, lead.add(&mid).add(&tail));
        }
    }
}

#[test]
fn r1_mixed_identity_example() {
    // m({t, x}) = [h_t, m_x] = -m[t] m[x] - 1
    let alg = weyl_env();
    let reg = alg.tower().registry();
    let t = CPoly::var(reg, VarId(0));
    let x = CPoly::var(reg, VarId(1));
    let bracket_tx = alg.table().extend(&t, &x).unwrap();
    let lhs = alg.expand_m(&bracket_tx);
    let rhs = alg.commutator(&alg.gen_elem(HT), &alg.gen_elem(MX));
    assert_eq!(lhs, rhs);
    assert_eq!(alg.render(&lhs), "-m[t]*m[x] - 1");
}

#[test]
fn one_is_a_two_sided_identity() {
    let alg = weyl_env();
    let mut rng = StdRng::seed_from_u64(23);
    for _ in 0..10 {
        let a = random_elem(&alg, &mut rng, 3);
        assert_eq!(alg.mul(&alg.one(), &a), a);
        assert_eq!(alg.mul(&a, &alg.one()), a);
    }
}

pub(crate) fn random_elem(alg: &EnvAlgebra, rng: &mut StdRng, max_deg: u32) -> EnvElement {
    let n = alg.n_gens();
    let mut out = EnvElement::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let mut m = EnvMonomial::unit(n);
        let mut budget = max_deg;
        for _ in 0..max_deg {
            if budget == 0 {
                break;
            }
            let g = rng.gen_range(0..n);
            if rng.gen_bool(0.7) {
                m.0[g] += 1;
                budget -= 1;
            }
        }
        let c = GScalar::gauss(rng.gen_range(-2..=2), rng.gen_range(-1..=1));
        out = out.add(&EnvElement::monomial(m, c));
    }
    out
}

#[test]
fn associativity_on_random_triples() {
    for alg in [weyl_env(), affine3_env()] {
        let mut rng = StdRng::seed_from_u64(31);
        for _ in 0..40 {
            let a = random_elem(&alg, &mut rng, 3);
            let b = random_elem(&alg, &mut rng, 3);
            let c = random_elem(&alg, &mut rng, 3);
            assert_eq!(
                alg.mul(&a, &alg.mul(&b, &c)),
                alg.mul(&alg.mul(&a, &b), &c)
            );
        }
    }
}

#[test]
fn expand_m_is_multiplicative_and_h_satisfies_leibniz() {
    let alg = weyl_env();
    let reg = alg.tower().registry();
    let mut rng = StdRng::seed_from_u64(37);
    for _ in 0..25 {
        let p = random_poly(&mut rng, reg, 3);
        let q = random_poly(&mut rng, reg, 3);
        assert_eq!(
            alg.expand_m(&(&p * &q)),
            alg.mul(&alg.expand_m(&p), &alg.expand_m(&q))
        );
        let lhs = alg.expand_h(&(&p * &q));
        let rhs = alg
            .mul(&alg.expand_m(&p), &alg.expand_h(&q))
            .add(&alg.mul(&alg.expand_m(&q), &alg.expand_h(&p)));
        assert_eq!(lhs, rhs);
    }
}

pub(crate) fn random_poly(
    rng: &mut StdRng,
    reg: &Arc<VarRegistry>,
    max_deg: u32,
) -> CPoly {
    let n = reg.len();
    let mut p = CPoly::zero(reg);
    for _ in 0..rng.gen_range(1..=3) {
        let mut exps = vec![0u32; n];
        let mut budget = max_deg;
        for e in exps.iter_mut() {
            let d = rng.gen_range(0..=budget.min(2));
            *e = d;
            budget -= d;
        }
        let c = GScalar::gauss(rng.gen_range(-2..=2), rng.gen_range(-1..=1));
        p = &p + &CPoly::monomial(reg, exps, c);
    }
    p
}

#[test]
fn sigma_extension_laws_hold_on_products() {
    // sigma11 extends multiplicatively; sigma21 obeys
    // sigma21(ab) = sigma21(a) sigma11(b) + sigma22(a) sigma21(b).
    let alg = affine3_env();
    let step_idx = 1;
    let rw = &alg.steps[step_idx];
    let n_lower = rw.sigma11.len();
    let s11 = |j: usize| rw.sigma11[j].clone();
    let s21 = |j: usize| rw.sigma21[j].clone();
    let mut rng = StdRng::seed_from_u64(41);
    for _ in 0..20 {
        let a = random_lower_elem(&alg, &mut rng, n_lower, 2);
        let b = random_lower_elem(&alg, &mut rng, n_lower, 2);
        let ab = alg.mul(&a, &b);
        assert_eq!(
            alg.apply_endo_by(&s11, &ab),
            alg.mul(&alg.apply_endo_by(&s11, &a), &alg.apply_endo_by(&s11, &b))
        );
        let lhs = alg.apply_twisted_by(&s21, Some(&s11), Some(&s11), &ab);
        let rhs = alg
            .mul(
                &alg.apply_twisted_by(&s21, Some(&s11), Some(&s11), &a),
                &alg.apply_endo_by(&s11, &b),
            )
            .add(&alg.mul(
                &alg.apply_endo_by(&s11, &a),
                &alg.apply_twisted_by(&s21, Some(&s11), Some(&s11), &b),
            ));
        assert_eq!(lhs, rhs);
    }
}

pub(crate) fn random_lower_elem(
    alg: &EnvAlgebra,
    rng: &mut StdRng,
    n_lower: usize,
    max_deg: u32,
) -> EnvElement {
    let n = alg.n_gens();
    let mut out = EnvElement::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let mut m = EnvMonomial::unit(n);
        for _ in 0..max_deg {
            if rng.gen_bool(0.7) {
                m.0[rng.gen_range(0..n_lower)] += 1;
            }
        }
        out = out.add(&EnvElement::monomial(
            m,
            GScalar::gauss(rng.gen_range(-2..=2), 0),
        ));
    }
    out
}

#[test]
fn y2_filtration_is_submultiplicative() {
    let alg = weyl_env();
    let mut rng = StdRng::seed_from_u64(43);
    for _ in 0..30 {
        let a = random_elem(&alg, &mut rng, 3);
        let b = random_elem(&alg, &mut rng, 3);
        let p = alg.mul(&a, &b);
        if !p.is_zero() {
            assert!(alg.y2_degree(&p) <= alg.y2_degree(&a) + alg.y2_degree(&b));
        }
    }
}

#[test]
fn hilbert_counts() {
    let alg = weyl_env();
    // d = 0: connected
    assert_eq!(alg.hilbert_count(0).unwrap(), 1);
    // d = 1: the 2N generators
    assert_eq!(alg.hilbert_count(1).unwrap(), 4);
    // N = 2 variables, d = 2: C(5, 2) = 10
    assert_eq!(alg.hilbert_count(2).unwrap(), 10);
    // cross-check the stars-and-bars closed form in low degrees
    for d in 0..=5u32 {
        let n = alg.n_gens() as u64;
        let expect = binomial(n + d as u64 - 1, d as u64);
        assert_eq!(alg.hilbert_count(d).unwrap(), expect);
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k == 0 {
        return 1;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}
