//! Property suites: algebraic invariants of the polynomial arithmetic, the
//! division contract, Groebner canonicity, syzygy identities, and the
//! membership/saturation cross-checks.

mod common;

use common::{random_homogeneous, random_nonzero_element, random_poly, rng, test_fields};
use proptest::prelude::*;
use sympow::configs;
use sympow::field::Field;
use sympow::groebner::{buchberger, reduce, Ideal};
use sympow::monomial::MonomialOrder;
use sympow::parse::parse_poly;
use sympow::poly::Ring;
use sympow::syzygy::syzygies;

fn arb_gf13_poly() -> impl Strategy<Value = (Ring, sympow::poly::Polynomial)> {
    let ring = Ring::xyz(Field::prime(13).unwrap());
    proptest::collection::vec((0u32..4, 0u32..4, 0u32..4, 0i64..13), 0..8).prop_map(move |terms| {
        let acc = terms
            .iter()
            .map(|&(a, b, c, coeff)| {
                (
                    sympow::monomial::Monomial::from_exps(&[a as u16, b as u16, c as u16]),
                    ring.field().from_i64(coeff),
                )
            })
            .collect();
        (ring.clone(), ring.from_terms(acc))
    })
}

proptest! {
    #[test]
    fn ring_axioms((_, a) in arb_gf13_poly(), (_, b) in arb_gf13_poly(), (_, c) in arb_gf13_poly()) {
        let ab = a.mul(&b).unwrap();
        let ba = b.mul(&a).unwrap();
        prop_assert_eq!(&ab, &ba);
        let left = ab.mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let dist_l = a.mul(&b.add(&c).unwrap()).unwrap();
        let dist_r = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(dist_l, dist_r);
    }

    #[test]
    fn print_parse_roundtrip((ring, a) in arb_gf13_poly()) {
        let back = parse_poly(&ring, &a.to_string()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn homogeneous_degrees_add(d1 in 1u32..4, d2 in 1u32..4, seed in 0u64..1000) {
        let ring = Ring::xyz(Field::prime(11).unwrap());
        let mut r = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        use rand_chacha::rand_core::SeedableRng;
        let a = random_homogeneous(&mut r, &ring, d1, 3);
        let b = random_homogeneous(&mut r, &ring, d2, 3);
        let ab = a.mul(&b).unwrap();
        if !ab.is_zero() {
            prop_assert_eq!(ab.homogeneous_degree(), Some(d1 + d2));
        }
    }
}

#[test]
fn division_identity_reconstruction() {
    // f = sum(q_i g_i) + r exactly, for 100 random pairs per field
    let mut rng = rng();
    for field in test_fields() {
        let ring = Ring::xyz(field);
        for _ in 0..100 {
            let f = random_poly(&mut rng, &ring, 5, 6);
            let divisors: Vec<_> = (0..3).map(|_| random_poly(&mut rng, &ring, 3, 3)).collect();
            let divisors: Vec<_> = divisors.into_iter().filter(|d| !d.is_zero()).collect();
            if divisors.is_empty() {
                continue;
            }
            let (nf, quots) = reduce(&f, &divisors, MonomialOrder::Grevlex);
            let mut back = nf.clone();
            for (q, d) in quots.iter().zip(&divisors) {
                back = back.add(&q.mul(d).unwrap()).unwrap();
            }
            assert_eq!(back, f, "division identity failed over {field}");
            for (m, _) in nf.terms() {
                for d in &divisors {
                    let (lm, _) = d.leading_term(MonomialOrder::Grevlex).unwrap();
                    assert!(!lm.divides(m), "normal form still reducible over {field}");
                }
            }
        }
    }
}

#[test]
fn groebner_canonical_under_input_presentation() {
    // permuting or unit-scaling the generators yields the identical reduced
    // basis
    let mut rng = rng();
    for field in test_fields() {
        let ring = Ring::xyz(field);
        for _ in 0..25 {
            let gens: Vec<_> = (0..3)
                .map(|_| random_homogeneous(&mut rng, &ring, 2, 3))
                .collect();
            let gb1 = buchberger(&gens, MonomialOrder::Grevlex);
            let mut shuffled = vec![gens[2].clone(), gens[0].clone(), gens[1].clone()];
            for g in shuffled.iter_mut() {
                let unit = random_nonzero_element(&mut rng, field);
                *g = g.scale(&unit);
            }
            let gb2 = buchberger(&shuffled, MonomialOrder::Grevlex);
            assert_eq!(gb1, gb2, "reduced basis not canonical over {field}");
        }
    }
}

#[test]
fn syzygies_annihilate_exactly() {
    let mut rng = rng();
    for field in [Field::prime(7).unwrap(), Field::prime(11).unwrap()] {
        let ring = Ring::xyz(field);
        for _ in 0..20 {
            let gens: Vec<_> = (0..3)
                .map(|_| random_homogeneous(&mut rng, &ring, 3, 4))
                .collect();
            for v in syzygies(&gens).unwrap() {
                assert!(v.dot(&gens).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn membership_respects_intersection() {
    // f in I ∩ J iff f in I and f in J, for 50 random f
    let mut rng = rng();
    let ring = Ring::xyz(Field::prime(7).unwrap());
    let p = |s: &str| parse_poly(&ring, s).unwrap();
    let i = Ideal::new(ring.clone(), vec![p("x*y - z^2"), p("x^2")]);
    let j = Ideal::new(ring.clone(), vec![p("y^2 - x*z"), p("z^3")]);
    let meet = i.intersect(&j).unwrap();
    let mut seen_member = 0;
    for _ in 0..50 {
        let f = random_poly(&mut rng, &ring, 5, 5);
        // salt the sample with actual members so both branches are hit
        let g = meet.gens().first().cloned().unwrap_or_else(|| ring.zero());
        for cand in [f.clone(), f.mul(&g).unwrap()] {
            let in_meet = meet.contains(&cand);
            assert_eq!(in_meet, i.contains(&cand) && j.contains(&cand));
            if in_meet {
                seen_member += 1;
            }
        }
    }
    assert!(seen_member > 0, "sample never hit the intersection");
}

#[test]
fn symbolic_powers_by_saturation_and_intersection_agree() {
    // for configurations with at most 12 points, saturate(I^m, m-irrelevant)
    // equals the intersection of the m-th powers of the point ideals
    for (cfg, field) in [
        (configs::star3(Field::rationals()), Field::rationals()),
        (
            configs::fermat(3, Field::prime(7).unwrap()).unwrap(),
            Field::prime(7).unwrap(),
        ),
    ] {
        let ring = Ring::xyz(field);
        let irrelevant = Ideal::new(ring.clone(), (0..3).map(|i| ring.var(i)).collect());
        for m in [2u32, 3] {
            let via_sat = cfg.ideal.power(m).saturate(&irrelevant).unwrap();
            let mut via_int: Option<Ideal> = None;
            for pt in &cfg.points {
                // the point ideal is generated by the 2x2 minors of the
                // coordinate matrix
                let gens = vec![
                    ring.var(0).scale(&pt[1]).sub(&ring.var(1).scale(&pt[0])).unwrap(),
                    ring.var(0).scale(&pt[2]).sub(&ring.var(2).scale(&pt[0])).unwrap(),
                    ring.var(1).scale(&pt[2]).sub(&ring.var(2).scale(&pt[1])).unwrap(),
                ];
                let power = Ideal::new(ring.clone(), gens).power(m);
                via_int = Some(match via_int {
                    None => power,
                    Some(acc) => acc.intersect(&power).unwrap(),
                });
            }
            let via_int = via_int.unwrap();
            assert!(
                via_sat.equals(&via_int),
                "symbolic power routes disagree for {} at m = {m}",
                cfg.name
            );
        }
    }
}

#[test]
fn elimination_members_reduce_to_zero() {
    let mut rng = rng();
    let ring = Ring::xyz(Field::prime(11).unwrap());
    for _ in 0..15 {
        let gens: Vec<_> = (0..2).map(|_| random_poly(&mut rng, &ring, 3, 4)).collect();
        let i = Ideal::new(ring.clone(), gens);
        let e = i.eliminate(&[0]).unwrap();
        for g in e.gens() {
            assert!(g.terms().iter().all(|(m, _)| m.exps[0] == 0));
            assert!(i.contains(g));
        }
    }
}

#[test]
fn nine_line_product_memberships() {
    // dual Hesse: the 9-line product lies in the saturated cube but not in
    // the square; the 12-line product is f*g*h and lies in both
    let cfg = configs::fermat(3, Field::prime(7).unwrap()).unwrap();
    let nine = configs::fermat_reduced_line_product(&cfg).unwrap();
    assert_eq!(nine.homogeneous_degree(), Some(9));
    let ring = cfg.ring.clone();
    let irrelevant = Ideal::new(ring.clone(), (0..3).map(|i| ring.var(i)).collect());
    let sym3 = cfg.ideal.power(3).saturate(&irrelevant).unwrap();
    assert!(sym3.contains(&nine));
    assert!(!cfg.ideal.power(2).contains(&nine));

    let twelve = configs::product_of_lines(&cfg).unwrap();
    let gens = cfg.ideal.gens();
    let fgh = gens[0].mul(&gens[1]).unwrap().mul(&gens[2]).unwrap();
    assert_eq!(twelve, fgh);
    assert!(cfg.ideal.power(2).contains(&twelve));
}

#[test]
fn canonicalization_is_idempotent() {
    // rebuilding a polynomial from its own terms is the identity
    let mut rng = rng();
    for field in test_fields() {
        let ring = Ring::xyz(field);
        for _ in 0..20 {
            let f = random_poly(&mut rng, &ring, 4, 5);
            let rebuilt = ring.from_terms(f.terms().to_vec());
            assert_eq!(rebuilt, f);
        }
    }
}
