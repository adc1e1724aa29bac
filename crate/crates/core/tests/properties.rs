mod common;

use bicyclic::{
    BElement, Bicyclic, Heis, Heisenberg, Integers, Lex2, LexPairs, Rat, Rationals, Side,
    SolutionSet,
};
use common::{h_inv, h_mul, h_shift, z_mul};
use proptest::prelude::*;

fn coord() -> impl Strategy<Value = i64> {
    -1000i64..1000
}

fn z_pair() -> impl Strategy<Value = BElement<i64>> {
    (coord(), coord()).prop_map(|(a, b)| BElement::new(a, b))
}

fn small_z_pair() -> impl Strategy<Value = BElement<i64>> {
    (-6i64..6, -6i64..6).prop_map(|(a, b)| BElement::new(a, b))
}

fn heis() -> impl Strategy<Value = Heis> {
    (-20i64..20, -20i64..20, -20i64..20).prop_map(|(x, y, z)| Heis(x, y, z))
}

fn h_pair() -> impl Strategy<Value = BElement<Heis>> {
    (heis(), heis()).prop_map(|(a, b)| BElement::new(a, b))
}

fn rat() -> impl Strategy<Value = Rat> {
    (-40i64..40, 1i64..12).prop_map(|(n, d)| Rat::new(n, d).unwrap())
}

fn q_pair() -> impl Strategy<Value = BElement<Rat>> {
    (rat(), rat()).prop_map(|(a, b)| BElement::new(a, b))
}

fn tup(h: &Heis) -> (i64, i64, i64) {
    (h.0, h.1, h.2)
}

proptest! {
    #[test]
    fn z_product_matches_independent_formula(s in z_pair(), t in z_pair()) {
        let b = Bicyclic::new(&Integers);
        let p = b.mul(&s, &t).unwrap();
        prop_assert_eq!((p.left, p.right), z_mul((s.left, s.right), (t.left, t.right)));
    }

    #[test]
    fn z_associative(s in z_pair(), t in z_pair(), u in z_pair()) {
        let b = Bicyclic::new(&Integers);
        prop_assert_eq!(
            b.mul(&b.mul(&s, &t).unwrap(), &u).unwrap(),
            b.mul(&s, &b.mul(&t, &u).unwrap()).unwrap()
        );
    }

    #[test]
    fn heisenberg_associative(s in h_pair(), t in h_pair(), u in h_pair()) {
        let b = Bicyclic::new(&Heisenberg);
        prop_assert_eq!(
            b.mul(&b.mul(&s, &t).unwrap(), &u).unwrap(),
            b.mul(&s, &b.mul(&t, &u).unwrap()).unwrap()
        );
    }

    #[test]
    fn heisenberg_product_is_shift_composition(s in h_pair(), t in h_pair(), x in heis(), w in heis()) {
        let b = Bicyclic::new(&Heisenberg);
        let p = b.mul(&s, &t).unwrap();
        // Probe both an arbitrary point and one just above the composite's anchor.
        for x in [tup(&x), above(&p.left, &w)] {
            let pointwise = h_shift(tup(&s.left), tup(&s.right), x)
                .and_then(|y| h_shift(tup(&t.left), tup(&t.right), y));
            prop_assert_eq!(pointwise, h_shift(tup(&p.left), tup(&p.right), x));
        }
    }

    #[test]
    fn rational_inverse_law(s in q_pair(), t in q_pair()) {
        let b = Bicyclic::new(&Rationals);
        let si = b.inverse(&s).unwrap();
        prop_assert_eq!(b.product(&[&s, &si, &s]).unwrap(), s.clone());
        let (e, f) = (b.mul(&s, &si).unwrap(), b.mul(&t, &t.swapped()).unwrap());
        prop_assert_eq!(b.mul(&e, &f).unwrap(), b.mul(&f, &e).unwrap());
    }

    #[test]
    fn natural_order_matches_oracle(s in small_z_pair(), t in small_z_pair()) {
        let b = Bicyclic::new(&Integers);
        prop_assert_eq!(b.nat_leq(&s, &t).unwrap(), b.nat_leq_oracle(&s, &t).unwrap());
        prop_assert_eq!(b.nat_leq(&s, &t).unwrap(), b.nat_leq_mirrored(&s, &t).unwrap());
    }

    #[test]
    fn lex_natural_order_is_compatible(s in (-3i64..3, -3i64..3, -3i64..3, -3i64..3), c in (-3i64..3, -3i64..3), u in (-3i64..3, -3i64..3, -3i64..3, -3i64..3)) {
        let g = LexPairs;
        let b = Bicyclic::new(&g);
        let t = BElement::new(Lex2(s.0, s.1), Lex2(s.2, s.3));
        let u = BElement::new(Lex2(u.0, u.1), Lex2(u.2, u.3));
        let below = b.mul(&BElement::diagonal(Lex2(c.0, c.1)), &t).unwrap();
        prop_assert!(b.nat_leq(&below, &t).unwrap());
        prop_assert!(b.nat_leq(&b.mul(&below, &u).unwrap(), &b.mul(&t, &u).unwrap()).unwrap());
        prop_assert!(b.nat_leq(&b.mul(&u, &below).unwrap(), &b.mul(&u, &t).unwrap()).unwrap());
    }

    #[test]
    fn solvers_contain_every_solution(known in h_pair(), w in h_pair()) {
        let b = Bicyclic::new(&Heisenberg);
        let target = b.mul(&known, &w).unwrap();
        let set = b.solve(Side::Right, &target, &known).unwrap();
        prop_assert!(b.solution_contains(&set, &w).unwrap());
        if let SolutionSet::Unique(u) = &set {
            prop_assert_eq!(u, &w);
        }
        let target = b.mul(&w, &known).unwrap();
        let set = b.solve(Side::Left, &target, &known).unwrap();
        prop_assert!(b.solution_contains(&set, &w).unwrap());
    }

    #[test]
    fn positive_solver_never_leaves_bplus(t in (0i64..8, 0i64..8), k in (0i64..8, 0i64..8), w in (-8i64..8, -8i64..8)) {
        let b = Bicyclic::positive(&Integers);
        let target = BElement::new(t.0, t.1);
        let known = BElement::new(k.0, k.1);
        let w = BElement::new(w.0, w.1);
        let set = b.solve_right(&target, &known).unwrap();
        if b.solution_contains(&set, &w).unwrap() {
            prop_assert!(b.in_bplus(&w));
            prop_assert_eq!(b.full().mul(&known, &w).unwrap(), target);
        }
    }
}

/// `anchor * |w|`, a point of the cone above `anchor`.
fn above(anchor: &Heis, w: &Heis) -> (i64, i64, i64) {
    let w = tup(w);
    let pos = if w >= (0, 0, 0) { w } else { h_inv(w) };
    h_mul(tup(anchor), pos)
}
