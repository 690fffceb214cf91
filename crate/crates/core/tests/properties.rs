use jack_laurent::coeff::{field_arith, q, FieldOp};
use jack_laurent::finite_n::phi_n_map;
use jack_laurent::partitions::{chi_n, dominance_leq};
use jack_laurent::{Bipartition, IntSequence, Lsf, PMonomial, ParamRat, Partition};
use proptest::prelude::*;

fn poly(c: [i64; 5]) -> ParamRat {
    let k = ParamRat::k();
    let p = ParamRat::p0();
    let terms = [
        ParamRat::from_int(c[0]),
        &ParamRat::from_int(c[1]) * &k,
        &ParamRat::from_int(c[2]) * &p,
        &(&ParamRat::from_int(c[3]) * &k) * &p,
        &ParamRat::from_int(c[4]) * &(&k * &k),
    ];
    terms.iter().fold(ParamRat::zero(), |acc, t| &acc + t)
}

fn param_rat() -> impl Strategy<Value = ParamRat> {
    (prop::array::uniform5(-4i64..5), prop::array::uniform5(-3i64..4)).prop_map(|(n, d)| {
        let den = poly(d);
        let den = if den.is_zero() { ParamRat::one() } else { den };
        &poly(n) / &den
    })
}

fn monomial() -> impl Strategy<Value = PMonomial> {
    prop::collection::vec(prop_oneof![-3i32..0, 1i32..4], 0..3).prop_map(|idx| PMonomial::from_indices(&idx))
}

fn lsf() -> impl Strategy<Value = Lsf> {
    prop::collection::vec((monomial(), -3i64..4), 0..4)
        .prop_map(|ts| Lsf::from_terms(ts.into_iter().map(|(m, c)| (m, ParamRat::from_int(c)))))
}

fn small_lsf() -> impl Strategy<Value = Lsf> {
    prop::collection::vec((monomial(), param_rat()), 0..3).prop_map(Lsf::from_terms)
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..5, 0..5).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in param_rat(), b in param_rat(), c in param_rat()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a / &a).is_one());
        }
    }

    #[test]
    fn canonical_form_is_stable(a in param_rat()) {
        let text = a.to_string();
        let back: ParamRat = text.parse().unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn specialize_commutes(a in param_rat(), b in param_rat(), kn in -5i64..6, pn in -5i64..6) {
        let (k0, p00) = (q(kn, 3), q(pn, 2));
        for op in [FieldOp::Add, FieldOp::Sub, FieldOp::Mul, FieldOp::Div] {
            let (Ok(x), Ok(y)) = (a.specialize(&k0, &p00), b.specialize(&k0, &p00)) else { continue };
            let Ok(r) = field_arith(&a, &b, op) else { continue };
            let Ok(rs) = r.specialize(&k0, &p00) else { continue };
            let want = match op {
                FieldOp::Add => &x + &y,
                FieldOp::Sub => &x - &y,
                FieldOp::Mul => &x * &y,
                FieldOp::Div => {
                    if y == q(0, 1) { continue }
                    &x / &y
                }
            };
            prop_assert_eq!(rs, want);
        }
    }

    #[test]
    fn conjugation_and_boxes(p in partition()) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
        for b in p.add_box_candidates() {
            prop_assert_eq!(p.add_box(b).unwrap().remove_box(b).unwrap(), p.clone());
        }
        for b in p.remove_box_candidates() {
            prop_assert_eq!(p.remove_box(b).unwrap().add_box(b).unwrap(), p.clone());
        }
    }

    #[test]
    fn chi_is_decreasing(l in partition(), m in partition(), extra in 0usize..3) {
        let a = Bipartition::new(l, m);
        let n = a.len().max(1) + extra;
        let chi = chi_n(&a, n).unwrap();
        prop_assert!(chi.entries().windows(2).all(|w| w[0] >= w[1]));
        prop_assert_eq!(chi.to_bipartition(), a);
    }

    #[test]
    fn involutions_are_homomorphisms(f in lsf(), g in lsf()) {
        let k = ParamRat::k();
        prop_assert_eq!(f.mul(&g).star(), f.star().mul(&g.star()));
        prop_assert_eq!(f.mul(&g).theta(&k, false).unwrap(), f.theta(&k, false).unwrap().mul(&g.theta(&k, false).unwrap()));
        prop_assert_eq!(f.star().star(), f.clone());
        prop_assert_eq!(f.theta(&k, false).unwrap().theta(&k, true).unwrap(), f);
    }

    #[test]
    fn partial_is_derivation(f in lsf(), g in lsf(), a in prop_oneof![-3i32..0, 1i32..4]) {
        let lhs = f.mul(&g).partial(a);
        let rhs = f.partial(a).mul(&g).add(&f.mul(&g.partial(a)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn phi_n_is_multiplicative(f in lsf(), g in lsf(), n in 1usize..4) {
        prop_assert_eq!(phi_n_map(&f.mul(&g), n), phi_n_map(&f, n).mul(&phi_n_map(&g, n)));
    }

    #[test]
    fn text_and_json_round_trip(f in small_lsf()) {
        prop_assert_eq!(Lsf::parse(&f.to_string()).unwrap(), f.clone());
        prop_assert_eq!(Lsf::from_json(&f.to_json()).unwrap(), f);
    }
}

#[test]
fn dominance_is_a_partial_order() {
    for n in 0..=6 {
        let seqs: Vec<IntSequence> = Partition::all_of(n)
            .iter()
            .map(|p| IntSequence::new(p.padded(n.max(1)).iter().map(|&x| x as i64).collect()).unwrap())
            .collect();
        for a in &seqs {
            assert!(dominance_leq(a, a).unwrap());
            for b in &seqs {
                let ab = dominance_leq(a, b).unwrap();
                let ba = dominance_leq(b, a).unwrap();
                if ab && ba {
                    assert_eq!(a, b);
                }
                for c in &seqs {
                    if ab && dominance_leq(b, c).unwrap() {
                        assert!(dominance_leq(a, c).unwrap());
                    }
                }
            }
        }
    }
}
