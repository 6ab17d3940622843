mod common;

use common::*;
use contactlie::contact::{contact_exists, is_contact_form};
use contactlie::obstruct::rank_one_bracket_detect;
use contactlie::{Assignment, KForm, LieAlgebra, Rational, RationalAlgebra, Scalar};
use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn poly() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((-4i64..=4, 0u32..3, 0u32..3), 0..5).prop_map(|terms| {
        terms.into_iter().fold(Scalar::int(0), |acc, (c, a, b)| {
            acc + Scalar::int(c) * Scalar::var("x").pow(a) * Scalar::var("y").pow(b)
        })
    })
}

fn point() -> impl Strategy<Value = Assignment> {
    (-5i64..=5, 1i64..=3, -5i64..=5).prop_map(|(x, d, y)| {
        Assignment::from([("x".to_string(), Rational::new(x.into(), d.into())), ("y".to_string(), q(y))])
    })
}

fn form(dim: usize, degree: usize, rng: &mut ChaCha8Rng) -> KForm<Rational> {
    let mut terms = Vec::new();
    let mut idx: Vec<usize> = (0..dim).collect();
    for _ in 0..rng.gen_range(0..4) {
        for i in (1..dim).rev() {
            idx.swap(i, rng.gen_range(0..=i));
        }
        let mut s = idx[..degree].to_vec();
        s.sort();
        terms.push((s, q(rng.gen_range(-3..=3))));
    }
    let mut out = KForm::zero(dim, degree);
    for t in terms {
        out = out.add(&KForm::from_terms(dim, degree, [t]).unwrap()).unwrap();
    }
    out
}

/// A valid algebra: ℝ^{n-1} ⋊ ℝ, or a direct sum with a random 3-dim piece.
fn valid_algebra(n: usize, rng: &mut ChaCha8Rng) -> RationalAlgebra {
    let mut t = vec![vec![vec![q(0); n]; n]; n];
    for i in 0..n - 1 {
        for k in 0..n - 1 {
            if rng.gen_bool(0.4) {
                let c = q(rng.gen_range(-2..=2));
                t[n - 1][i][k] = c.clone();
                t[i][n - 1][k] = -c;
            }
        }
    }
    let l = from_table(&t);
    if n >= 4 && rng.gen_bool(0.5) {
        let h3: RationalAlgebra = LieAlgebra::from_brackets(3, &[(0, 1, &[(2, q(1))])]);
        let rest: RationalAlgebra = from_table(&{
            let m = n - 3;
            let mut s = vec![vec![vec![q(0); m]; m]; m];
            if m == 2 {
                s[0][1][1] = q(1);
                s[1][0][1] = q(-1);
            }
            s
        });
        return h3.direct_sum(&rest);
    }
    l
}

/// `[x, y] = l(y) x - l(x) y`.
fn rank_one(l: &[Rational]) -> RationalAlgebra {
    let n = l.len();
    let mut t = vec![vec![vec![q(0); n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                t[i][j][i] += l[j].clone();
                t[i][j][j] -= l[i].clone();
            }
        }
    }
    from_table(&t)
}

fn random_basis(n: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<Rational>> {
    loop {
        let p: Vec<Vec<Rational>> = (0..n).map(|_| random_covector(rng, n, 2)).collect();
        if !det(p.clone()).is_zero() {
            return p;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert!((a.clone() - a.clone()).is_zero());
        prop_assert_eq!(a.clone() * Scalar::int(1), a);
    }

    #[test]
    fn substitution_is_a_homomorphism(a in poly(), b in poly(), at in point()) {
        let (sa, sb) = (a.substitute(&at).unwrap(), b.substitute(&at).unwrap());
        prop_assert_eq!((a.clone() + b.clone()).substitute(&at).unwrap(), &sa + &sb);
        prop_assert_eq!((a * b).substitute(&at).unwrap(), sa * sb);
    }

    #[test]
    fn wedge_graded_commutative_and_associative(seed in any::<u64>(), dim in 2usize..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = rng.gen_range(0..=dim);
        let r = rng.gen_range(0..=dim - p);
        let s = rng.gen_range(0..=dim - p - r);
        let (a, b, c) = (form(dim, p, &mut rng), form(dim, r, &mut rng), form(dim, s, &mut rng));
        let ab = a.wedge(&b).unwrap();
        let ba = b.wedge(&a).unwrap();
        let expected = if (p * r) % 2 == 1 { ba.neg() } else { ba };
        prop_assert_eq!(&ab, &expected);
        prop_assert_eq!(ab.wedge(&c).unwrap(), a.wedge(&b.wedge(&c).unwrap()).unwrap());
    }

    #[test]
    fn leibniz_and_d_squared(seed in any::<u64>(), n in 2usize..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let l = valid_algebra(n, &mut rng);
        prop_assert!(jacobi_oracle(&table_of(&l)));
        let p = rng.gen_range(0..n);
        let r = rng.gen_range(0..n - p);
        let (a, b) = (form(n, p, &mut rng), form(n, r, &mut rng));
        let lhs = a.wedge(&b).unwrap().ce_d(&l).unwrap();
        let da_b = a.ce_d(&l).unwrap().wedge(&b).unwrap();
        let a_db = a.wedge(&b.ce_d(&l).unwrap()).unwrap();
        let rhs = if p % 2 == 1 { da_b.sub(&a_db) } else { da_b.add(&a_db) }.unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert!(a.ce_d(&l).unwrap().ce_d(&l).unwrap().is_zero());
    }

    #[test]
    fn contact_is_scale_invariant(seed in any::<u64>(), c in prop_oneof![-5i64..=-1, 1i64..=5]) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let l = valid_algebra(if rng.gen_bool(0.5) { 3 } else { 5 }, &mut rng);
        let eta = KForm::from_covector(&random_covector(&mut rng, l.dim(), 3));
        let v = is_contact_form(&l, &eta).unwrap();
        let w = is_contact_form(&l, &eta.scale(&q(c))).unwrap();
        prop_assert_eq!(v.is_contact(), w.is_contact());
        let k = (l.dim() as u32 + 1) / 2;
        prop_assert_eq!(w.top_coefficient.clone(), v.top_coefficient.clone() * q(c).pow(k as i32));
        prop_assert_eq!(v.is_contact(), contact_oracle(&table_of(&l), &eta.as_covector().unwrap()));
    }

    #[test]
    fn rank_one_detection_is_basis_independent(seed in any::<u64>(), n in 3usize..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ell = random_covector(&mut rng, n, 2);
        let l = rank_one(&ell);
        prop_assert!(jacobi_oracle(&table_of(&l)));
        let p = random_basis(n, &mut rng);
        let moved = l.change_basis(&p).unwrap();
        let (o, found) = rank_one_bracket_detect(&moved).unwrap();
        prop_assert!(o.applies);
        // l transforms covariantly: l'(f_a) = l(f_a).
        let expected: Vec<Rational> = p.iter().map(|f| f.iter().zip(&ell).map(|(a, b)| a * b).sum()).collect();
        prop_assert_eq!(found.unwrap(), expected);

        let h: RationalAlgebra = LieAlgebra::from_brackets(3, &[(0, 1, &[(2, q(1))])]);
        let h = h.direct_sum(&LieAlgebra::abelian(n - 3));
        let p = random_basis(n, &mut rng);
        prop_assert!(!rank_one_bracket_detect(&h.change_basis(&p).unwrap()).unwrap().0.applies);
    }

    #[test]
    fn witness_search_agrees_with_sampling(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let l = valid_algebra(if rng.gen_bool(0.5) { 3 } else { 5 }, &mut rng);
        let t = table_of(&l);
        let v = contact_exists(&l).unwrap();
        if let Some(w) = &v.witness {
            prop_assert!(contact_oracle(&t, &w.as_covector().unwrap()));
        }
        prop_assert_eq!(v.exists, v.witness.is_some());
        if some_random_form(&mut rng, &t, 30, contact_oracle) {
            prop_assert!(v.exists);
        }
        if !v.exists {
            prop_assert!(v.polynomial.is_zero());
        }
    }
}
