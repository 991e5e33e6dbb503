use std::sync::Arc;

use matrep::decide::*;
use matrep::groebner::{buchberger_field, GbConfig};
use matrep::matroid::{k_subsets, ElementSet, Matroid};
use matrep::pattern::{build_pattern, circuit_polynomials};
use matrep::poly::gf::{GaloisField, Gf};
use matrep::poly::{Domain, Monomial, MonomialOrder, PolyRing, Polynomial, PrimeField};
use proptest::prelude::*;

/// Simple rank-3 matroids on `n` points: sets of lines (at least three points
/// each, pairwise meeting in at most one point), not all points on one line.
fn linear_spaces(n: usize) -> Vec<Matroid> {
    let lines: Vec<u64> = (3..=n).flat_map(|k| k_subsets(n, k)).map(|s| s.bits()).collect();
    let full = ElementSet::full(n).bits();
    let mut out = Vec::new();
    fn go(i: usize, lines: &[u64], chosen: &mut Vec<u64>, full: u64, n: usize, out: &mut Vec<Matroid>) {
        if i == lines.len() {
            if !chosen.contains(&full) {
                let circuits = chosen
                    .iter()
                    .flat_map(|&l| k_subsets(n, 3).into_iter().filter(move |t| t.bits() & !l == 0))
                    .collect();
                out.push(Matroid::new(n, 3, circuits).unwrap());
            }
            return;
        }
        go(i + 1, lines, chosen, full, n, out);
        if chosen.iter().all(|&c| (c & lines[i]).count_ones() <= 1) {
            chosen.push(lines[i]);
            go(i + 1, lines, chosen, full, n, out);
            chosen.pop();
        }
    }
    go(0, &lines, &mut Vec::new(), full, n, &mut out);
    out
}

fn small_matroids() -> Vec<Matroid> {
    let mut out: Vec<Matroid> = (2..=6).map(|n| Matroid::uniform(2, n).unwrap()).collect();
    for n in 3..=6 {
        out.extend(linear_spaces(n));
    }
    out
}

#[test]
fn linear_space_counts() {
    let counts: Vec<usize> = (3..=6).map(|n| linear_spaces(n).len()).collect();
    assert_eq!(counts, vec![1, 5, 31, 352]);
    assert!(linear_spaces(6).iter().all(|m| m.validate().is_empty()));
}

fn assignments(field: &GaloisField, k: usize) -> Vec<Vec<Gf>> {
    let nz: Vec<Gf> = field.nonzero_elements().collect();
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out.into_iter().flat_map(|a| nz.iter().map(move |&x| [a.clone(), vec![x]].concat())).collect();
    }
    out
}

/// Circuit minors vanish at a point exactly when the circuit's columns are dependent there.
#[test]
fn circuit_minors_detect_dependence_over_f3() {
    let f3 = GaloisField::new(3).unwrap();
    let mut checked = 0;
    for m in small_matroids() {
        let p = prepare(&m, false).unwrap();
        let pm = &p.matroid;
        let s = build_pattern(pm).unwrap();
        if s.num_vars() > 4 {
            continue;
        }
        let ring = s.ring(MonomialOrder::DEGREVLEX);
        let polys = circuit_polynomials(pm, &s, &ring);
        for values in assignments(&f3, s.num_vars()) {
            let a = s.substitute(&f3, &values);
            let mut point: Vec<Option<Gf>> = values.iter().map(|&v| Some(v)).collect();
            point.push(None);
            for &c in pm.circuits() {
                let cols: Vec<usize> = c.iter().map(|e| e - 1).collect();
                let dependent = f3.column_rank(&a, &cols) < c.len();
                let vanish = polys
                    .iter()
                    .filter(|t| t.tag == c)
                    .all(|t| t.poly.evaluate(&f3, &point).unwrap() == f3.zero());
                assert_eq!(dependent, vanish, "{c} in {:?} at {values:?}", pm.circuits());
            }
            if verify_representation(&f3, &a, pm).unwrap().valid {
                assert!(polys.iter().all(|t| t.poly.evaluate(&f3, &point).unwrap() == f3.zero()));
            }
            checked += 1;
        }
    }
    assert!(checked > 100, "{checked}");
}

fn fano_and_non_fano() -> [Matroid; 2] {
    let lines = [[1, 2, 3], [1, 4, 5], [1, 6, 7], [2, 4, 6], [2, 5, 7], [3, 4, 7], [3, 5, 6]];
    let set = |t: &[usize; 3]| t.iter().fold(ElementSet::EMPTY, |s, &e| s.with(e));
    let fano = Matroid::new(7, 3, lines.iter().map(set).collect()).unwrap();
    let non_fano = Matroid::new(7, 3, lines[..6].iter().map(set).collect()).unwrap();
    [fano, non_fano]
}

/// Fast-mode verdicts over F_p never contradict an exhaustive search over F_p and F_{p^2}.
#[test]
fn fast_verdicts_agree_with_brute_force() {
    let cfg = DecideConfig::default();
    let mut nonrep = 0;
    for m in small_matroids().into_iter().chain(fano_and_non_fano()) {
        let prep = prepare(&m, true).unwrap();
        let sys = SaturatedSystem::build(&prep, MonomialOrder::DEGREVLEX).unwrap();
        if sys.pattern.num_vars() > 6 {
            continue;
        }
        for (p, qs) in [(2, [2, 4]), (3, [3, 9])] {
            let v = decide_over_char(&sys, p, &cfg).unwrap().verdict;
            if !v.is_non_representable() {
                continue;
            }
            nonrep += 1;
            for q in qs {
                assert_eq!(brute_force_search(&m, q, 1 << 24).unwrap(), None, "{:?} over GF({q})", m.circuits());
            }
        }
    }
    // Fano over F_3, non-Fano over F_2
    assert_eq!(nonrep, 2);
}

fn matrix_strategy() -> impl Strategy<Value = (u32, Vec<Vec<u8>>)> {
    (prop::sample::select(vec![2u32, 3]), 1usize..=3, 0usize..=3).prop_flat_map(|(q, r, extra)| {
        let n = (r + extra).min(6);
        (Just(q), prop::collection::vec(prop::collection::vec(0u8..q as u8, n), r))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// A matroid read off a matrix over F_p is never declared non-representable in characteristic p.
    #[test]
    fn matrix_matroids_are_not_rejected((q, raw) in matrix_strategy()) {
        let field = GaloisField::new(q).unwrap();
        let a: Vec<Vec<Gf>> = raw.iter().map(|row| row.iter().map(|&x| field.from_i64(x as i64)).collect()).collect();
        let r = a.len();
        let n = a[0].len();
        prop_assume!(field.column_rank(&a, &(0..n).collect::<Vec<_>>()) == r);
        let m = matroid_of_matrix(&field, &a).unwrap();
        prop_assert!(m.validate().is_empty());
        let full: Vec<ElementSet> = k_subsets(n, r)
            .into_iter()
            .filter(|s| field.column_rank(&a, &s.iter().map(|e| e - 1).collect::<Vec<_>>()) == r)
            .collect();
        prop_assert_eq!(m.bases(), full);
        prop_assert!(verify_representation(&field, &a, &m).unwrap().valid);

        let sys = SaturatedSystem::build(&prepare(&m, true).unwrap(), MonomialOrder::DEGREVLEX).unwrap();
        let fast = decide_over_char(&sys, q as u64, &DecideConfig::default()).unwrap().verdict;
        prop_assert!(!fast.is_non_representable(), "{:?}", fast);
        let exact = DecideConfig { mode: Mode::Exact, ..Default::default() };
        prop_assert_eq!(decide_over_char(&sys, q as u64, &exact).unwrap().verdict, Verdict::RepresentableOverClosure);
    }
}

fn ring7() -> Arc<PolyRing<PrimeField>> {
    PolyRing::new(PrimeField::new(7).unwrap(), vec!["x".into(), "y".into(), "z".into()], MonomialOrder::DEGREVLEX)
}

fn poly_strategy() -> impl Strategy<Value = Vec<(i64, [u16; 3])>> {
    prop::collection::vec((-3i64..4, prop::array::uniform3(0u16..3)), 1..5)
}

fn build(r: &Arc<PolyRing<PrimeField>>, t: &[(i64, [u16; 3])]) -> Polynomial<PrimeField> {
    let d = *r.domain();
    Polynomial::from_terms(r, t.iter().map(|(c, e)| (d.from_i64(*c), Monomial::from_exponents(e))).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn normal_form_is_idempotent(
        gens in prop::collection::vec(poly_strategy(), 1..4),
        f in poly_strategy(),
    ) {
        let r = ring7();
        let gens: Vec<_> = gens.iter().map(|t| build(&r, t)).filter(|p| !p.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let g = buchberger_field(&r, &gens, &GbConfig::default()).unwrap();
        prop_assert!(g.criterion_holds());
        prop_assert!(g.is_reduced());
        let f = build(&r, &f);
        let nf = g.normal_form(&f).unwrap();
        prop_assert_eq!(g.normal_form(&nf).unwrap(), nf.clone());
        prop_assert!(g.ideal_membership(&(&f - &nf)).unwrap());
        for p in &gens {
            prop_assert!(g.ideal_membership(p).unwrap());
        }
    }
}
