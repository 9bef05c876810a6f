#![allow(dead_code)]

//! Shared helpers for the integration suites: seeded random polynomials and
//! ideals over the test fields.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sympow::field::{Field, FieldElement};
use sympow::monomial::MonomialOrder;
use sympow::poly::{Polynomial, Ring};

pub const SEED: u64 = 0x5ca1ab1e;

pub fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED)
}

pub fn random_element(rng: &mut ChaCha8Rng, field: Field) -> FieldElement {
    match field {
        Field::Rationals => {
            let num = rng.gen_range(-6i64..=6);
            let den = rng.gen_range(1i64..=4);
            field.from_ratio(num, den).unwrap()
        }
        Field::Prime(p) => FieldElement::Zp(rng.gen_range(0..p)),
        Field::PrimeExt(p) => FieldElement::ZpExt(rng.gen_range(0..p), rng.gen_range(0..p)),
        Field::RationalExt => {
            let a = field.from_i64(rng.gen_range(-4i64..=4));
            let c = field.generator().unwrap();
            let b = field.from_i64(rng.gen_range(-2i64..=2));
            field.add(&a, &field.mul(&b, &c))
        }
    }
}

pub fn random_nonzero_element(rng: &mut ChaCha8Rng, field: Field) -> FieldElement {
    loop {
        let e = random_element(rng, field);
        if !field.is_zero(&e) {
            return e;
        }
    }
}

/// A random polynomial with terms of degree at most `max_deg`.
pub fn random_poly(rng: &mut ChaCha8Rng, ring: &Ring, max_deg: u32, terms: usize) -> Polynomial {
    let mut acc = Vec::new();
    for _ in 0..terms {
        let d = rng.gen_range(0..=max_deg);
        let basis = ring.graded_basis(d, MonomialOrder::Grevlex);
        let mono = basis[rng.gen_range(0..basis.len())];
        acc.push((mono, random_element(rng, ring.field())));
    }
    ring.from_terms(acc)
}

/// A random homogeneous polynomial of exact degree `deg` (nonzero).
pub fn random_homogeneous(rng: &mut ChaCha8Rng, ring: &Ring, deg: u32, terms: usize) -> Polynomial {
    loop {
        let basis = ring.graded_basis(deg, MonomialOrder::Grevlex);
        let mut acc = Vec::new();
        for _ in 0..terms.max(1) {
            let mono = basis[rng.gen_range(0..basis.len())];
            acc.push((mono, random_element(rng, ring.field())));
        }
        let p = ring.from_terms(acc);
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn test_fields() -> Vec<Field> {
    vec![
        Field::Rationals,
        Field::prime(7).unwrap(),
        Field::prime(11).unwrap(),
        Field::prime_ext(5).unwrap(),
    ]
}
