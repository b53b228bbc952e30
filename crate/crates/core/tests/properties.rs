mod common;

use common::{det_q, rank_q};
use dnlat::cohomology::tate_minus1;
use dnlat::lattice::{self, lattice_by_name, perm_mod_sigma, perm_mod_tau, regular, triv};
use dnlat::relation::{dihedral_schreier_system, FreeWord};
use dnlat::witness::ShortExactSequence;
use dnlat::*;
use proptest::prelude::*;

fn small_matrix(max: usize) -> impl Strategy<Value = IntMatrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(-9i64..=9, r * c).prop_map(move |v| {
            IntMatrix::from_vec(r, c, v.into_iter().map(Integer::from).collect()).unwrap()
        })
    })
}

fn square_matrix(max: usize) -> impl Strategy<Value = IntMatrix> {
    (1..=max).prop_flat_map(|k| {
        prop::collection::vec(-9i64..=9, k * k)
            .prop_map(move |v| IntMatrix::from_vec(k, k, v.into_iter().map(Integer::from).collect()).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn smith_form_factorization(a in small_matrix(5)) {
        let s = snf(&a);
        prop_assert_eq!(s.u.mm(&a).mm(&s.v), s.d.clone());
        prop_assert!(det_q(&s.u).is_unit());
        prop_assert!(det_q(&s.v).is_unit());
        let diag: Vec<Integer> = s.diagonal().into_iter().filter(|x| !x.is_zero()).collect();
        prop_assert_eq!(diag.len(), rank_q(&a));
        for w in diag.windows(2) {
            prop_assert!(w[0].divides(&w[1]));
        }
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    prop_assert!(s.d[(i, j)].is_zero());
                } else {
                    prop_assert!(!s.d[(i, j)].is_negative());
                }
            }
        }
    }

    #[test]
    fn determinant_matches_rational_elimination(a in square_matrix(5)) {
        let d = det(&a).unwrap();
        prop_assert_eq!(d.clone(), det_q(&a));
        let product = smith_invariants(&a).iter().fold(Integer::ONE, |acc, x| &acc * x);
        if d.is_zero() {
            prop_assert!(smith_invariants(&a).len() < a.rows());
        } else {
            prop_assert_eq!(product, d.abs());
        }
    }

    #[test]
    fn determinant_is_multiplicative(a in square_matrix(4), seed in prop::collection::vec(-9i64..=9, 16)) {
        let k = a.rows();
        let b = IntMatrix::from_vec(k, k, seed[..k * k].iter().map(|&x| Integer::from(x)).collect()).unwrap();
        prop_assert_eq!(det(&a.mm(&b)).unwrap(), &det(&a).unwrap() * &det(&b).unwrap());
    }

    #[test]
    fn hnf_depends_only_on_the_span(a in small_matrix(5)) {
        let h = hnf_column_span(&a);
        let v = snf(&a).v;
        prop_assert_eq!(hnf_column_span(&a.mm(&v)), h.clone());
        prop_assert_eq!(h.cols(), rank_q(&a));
        if h.cols() > 0 {
            prop_assert!(solve_integer_many(&a, &h).unwrap().is_some());
            prop_assert!(solve_integer_many(&h, &a).unwrap().is_some());
        }
    }

    #[test]
    fn kernel_is_saturated_and_complete(a in small_matrix(5)) {
        let k = kernel_basis(&a);
        prop_assert_eq!(k.cols(), a.cols() - rank_q(&a));
        if k.cols() > 0 {
            prop_assert!(a.mm(&k).is_zero());
            prop_assert!(smith_invariants(&k).iter().all(|x| x.is_one()));
            prop_assert_eq!(smith_invariants(&k).len(), k.cols());
        }
    }

    #[test]
    fn kernel_agrees_with_smith_form(a in small_matrix(6)) {
        let s = snf(&a);
        let r = rank_q(&a);
        let dense = s.v.submatrix(0..a.cols(), r..a.cols());
        let k = kernel_basis(&a);
        prop_assert_eq!(hnf_column_span(&k), hnf_column_span(&dense));
    }

    #[test]
    fn solving_recovers_a_preimage(a in small_matrix(5), xs in prop::collection::vec(-9i64..=9, 5)) {
        let x: Vec<Integer> = xs[..a.cols()].iter().map(|&v| Integer::from(v)).collect();
        let b = IntMatrix::column_vector(&a.mul_vec(&x));
        let y = solve_integer(&a, &b).unwrap().expect("b is in the image");
        prop_assert_eq!(a.mm(&y), b);
    }

    #[test]
    fn cokernel_order_is_absolute_determinant(a in square_matrix(5)) {
        let d = det(&a).unwrap();
        let inv = cokernel_invariants(&a);
        if d.is_zero() {
            prop_assert!(inv.free_rank > 0);
        } else {
            prop_assert_eq!(inv.order().unwrap(), d.abs());
        }
    }
}

fn all_names() -> Vec<String> {
    let mut names: Vec<String> = lattice::LATTICE_NAMES.iter().map(|s| s.to_string()).collect();
    names.extend(["Rab", "IG", "IG2", "dual:m_plus", "dual:Rab"].map(String::from));
    names
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn constructors_satisfy_dihedral_relations(n in 2u32..=12, idx in 0usize..17) {
        let names = all_names();
        let name = &names[idx % names.len()];
        match lattice_by_name(name, n) {
            Ok(l) => {
                let id = IntMatrix::identity(l.rank);
                prop_assert_eq!(l.sigma.pow(n as usize), id.clone());
                prop_assert_eq!(l.tau.mm(&l.tau), id.clone());
                let st = l.tau.mm(&l.sigma).mm(&l.tau);
                prop_assert_eq!(st.mm(&l.sigma), id);
                prop_assert!(det(&l.sigma).unwrap().is_unit());
            }
            // odd-only constructors
            Err(_) => prop_assert!(n % 2 == 0),
        }
    }

    #[test]
    fn rewriting_round_trips(n in 2u32..=7, letters in prop::collection::vec(prop::sample::select(vec![1i32, -1, 2, -2]), 0..12)) {
        let sys = dihedral_schreier_system(n);
        let w = FreeWord::from_letters(letters);
        // close w up into R by appending its transversal representative's inverse
        let g = sys.group().eval(&w);
        let rep = sys.transversal_word(g);
        let r = w.mul(&rep.inverse());
        let parts = sys.rewrite(&r).unwrap();
        prop_assert_eq!(sys.expand(&parts), r);
    }
}

#[test]
fn permutation_lattices_have_vanishing_tate_minus_one() {
    for n in 2..=8u32 {
        let mut ls = vec![triv(n).unwrap(), regular(n).unwrap(), perm_mod_sigma(n).unwrap(), perm_mod_tau(n).unwrap()];
        ls.push(ls[2].dsum(&ls[3]).unwrap());
        for l in &ls {
            for s in dnlat::subgroups(n) {
                let g = tate_minus1(l, &s).unwrap();
                assert!(g.is_trivial(), "Ĥ⁻¹({s}, {}) = {g} at n={n}", l.label);
            }
        }
    }
}

#[test]
fn sections_survive_block_sums() {
    for n in [3u32, 4, 5] {
        let a = ShortExactSequence::split(&triv(n).unwrap(), &perm_mod_tau(n).unwrap()).unwrap();
        let b = ShortExactSequence::split(&regular(n).unwrap(), &triv(n).unwrap()).unwrap();
        assert!(has_section(&a).unwrap() && has_section(&b).unwrap());
        let ab = a.dsum(&b).unwrap();
        assert!(verify_ses(&ab));
        assert!(has_section(&ab).unwrap());
    }
}
