use eaqmds_core::gfield::{make_field, Element, FieldSpec, TowerMap, ZechField};
use eaqmds_core::intmath::factorize;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TRIPLES: usize = 1000;

fn random(f: &FieldSpec, rng: &mut impl Rng) -> Element {
    f.from_index(rng.gen_range(0..f.order()))
}

fn check_axioms(f: &FieldSpec, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (zero, one) = (f.zero(), f.one());
    for _ in 0..TRIPLES {
        let (a, b, c) = (random(f, &mut rng), random(f, &mut rng), random(f, &mut rng));
        assert_eq!(f.add(&a, &b), f.add(&b, &a));
        assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
        assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
        assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        assert_eq!(
            f.mul(&a, &f.add(&b, &c)),
            f.add(&f.mul(&a, &b), &f.mul(&a, &c))
        );
        assert_eq!(f.add(&a, &zero), a);
        assert_eq!(f.mul(&a, &one), a);
        assert_eq!(f.add(&a, &f.neg(&a)), zero);
        if !a.is_zero() {
            assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), one);
            assert_eq!(f.div(&f.mul(&b, &a), &a).unwrap(), b);
        }
        // Frobenius is additive and multiplicative
        assert_eq!(f.frobenius(&f.add(&a, &b)), f.add(&f.frobenius(&a), &f.frobenius(&b)));
        assert_eq!(f.frobenius(&f.mul(&a, &b)), f.mul(&f.frobenius(&a), &f.frobenius(&b)));
    }
    assert!(f.inv(&zero).is_err());
}

fn check_tower(q: u64, seed: u64) {
    let t = TowerMap::new(q).unwrap();
    let (base, top) = (t.base(), t.top());
    assert_eq!(top.order(), base.order() * base.order());
    check_axioms(top, seed);

    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    for _ in 0..TRIPLES {
        let (a, b) = (random(base, &mut rng), random(base, &mut rng));
        let (ea, eb) = (t.embed(&a), t.embed(&b));
        assert_eq!(t.embed(&base.add(&a, &b)), top.add(&ea, &eb));
        assert_eq!(t.embed(&base.mul(&a, &b)), top.mul(&ea, &eb));
        assert!(t.in_subfield(&ea));
        assert_eq!(t.project(&ea), (a.clone(), base.zero()));

        // x = b0 + b1 * beta round-trips
        let x = random(top, &mut rng);
        let (b0, b1) = t.project(&x);
        let back = top.add(&t.embed(&b0), &top.mul(&t.embed(&b1), t.beta()));
        assert_eq!(back, x);
    }
}

#[test]
fn axioms_gf_13_squared() {
    check_axioms(&make_field(13, 2).unwrap(), 1);
}

#[test]
fn axioms_gf_17_squared() {
    check_axioms(&make_field(17, 2).unwrap(), 2);
}

#[test]
fn axioms_gf_3_to_6() {
    check_axioms(&make_field(3, 6).unwrap(), 3);
}

#[test]
fn tower_over_gf_13_squared() {
    check_tower(13, 4);
}

#[test]
fn tower_over_gf_17_squared() {
    check_tower(17, 5);
}

#[test]
fn tower_over_gf_3_to_6() {
    check_tower(27, 6);
}

#[test]
fn zech_tables_agree_with_polynomial_arithmetic() {
    for (p, e) in [(13, 2), (17, 2), (3, 6)] {
        let f = make_field(p, e).unwrap();
        let z = ZechField::new(&f).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(p);
        for _ in 0..TRIPLES {
            let (a, b) = (random(&f, &mut rng), random(&f, &mut rng));
            let (za, zb) = (z.from_element(&a), z.from_element(&b));
            assert_eq!(z.to_element(z.add(za, zb)), f.add(&a, &b));
            assert_eq!(z.to_element(z.mul(za, zb)), f.mul(&a, &b));
            assert_eq!(z.to_element(z.conj(za)), f.conjugate(&a).unwrap());
        }
    }
}

#[test]
fn roots_of_unity_have_exact_order() {
    for (n, q) in [(17, 13), (29, 17), (37, 31), (65, 47), (73, 27)] {
        let t = TowerMap::new(q).unwrap();
        let top = t.top();
        let gamma = t.nth_root_of_unity(n).unwrap();
        assert_eq!(top.pow(&gamma, n), top.one(), "n = {n}");
        for (p, _) in factorize(n) {
            assert_ne!(top.pow(&gamma, n / p), top.one(), "n = {n}, p = {p}");
        }
        // n divides q^2 + 1, so gamma is outside GF(q^2)
        assert!(!t.in_subfield(&gamma));
    }
}

#[test]
fn modulus_is_smallest_irreducible() {
    assert_eq!(make_field(13, 2).unwrap().modulus(), &[2, 0, 1]);
    assert_eq!(make_field(3, 2).unwrap().modulus(), &[1, 0, 1]);
}
