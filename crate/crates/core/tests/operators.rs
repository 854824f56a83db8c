use macdonald::families::macdonald_m;
use macdonald::macops::{a_k_apply, a_k_eigen, apply_an};
use macdonald::symfun::{convert, inner_product, restrict};
use macdonald::{Basis, Partition, RatFun, SymFun};
use proptest::prelude::*;

fn partitions_up_to(w: usize) -> Vec<Partition> {
    (0..=w).flat_map(Partition::all).collect()
}

// The renormalized D_N(u) in N >= l(l) variables has the same
// coefficients on M_l as A(u): the extra factors cancel against the
// Pochhammer symbol.
#[test]
fn finite_route_matches_stable_operators() {
    for l in partitions_up_to(3) {
        let m = macdonald_m(&l);
        for n in l.len().max(1)..=3 {
            let finite = apply_an(&restrict(&m, n).unwrap(), n).unwrap();
            let eigen = a_k_eigen(&l).unwrap();
            for k in 0..=n {
                let got = finite.entry(k).cloned().unwrap_or_else(|| restrict(&m, n).unwrap().scale(&RatFun::zero()));
                let e = eigen.entry(k).cloned().unwrap_or_else(RatFun::zero);
                assert_eq!(got, restrict(&m, n).unwrap().scale(&e), "l = {l}, N = {n}, k = {k}");
                if k >= 1 {
                    let stable = a_k_apply(k, &m, l.weight()).unwrap();
                    assert_eq!(got, restrict(&stable, n).unwrap(), "l = {l}, N = {n}, k = {k}");
                }
            }
        }
    }
}

fn small_coeff() -> impl Strategy<Value = RatFun> {
    (-3i64..=3, 0i32..=2, 0i32..=2).prop_map(|(c, a, b)| RatFun::monomial(c, a, b))
}

fn symfun_of_degree(d: usize) -> impl Strategy<Value = SymFun> {
    let parts = Partition::all(d);
    prop::collection::vec(small_coeff(), parts.len())
        .prop_map(move |cs| SymFun::from_terms(Basis::P, d, parts.iter().cloned().zip(cs)))
}

fn pair_of_degree() -> impl Strategy<Value = (usize, SymFun, SymFun)> {
    (1usize..=3).prop_flat_map(|d| (Just(d), symfun_of_degree(d), symfun_of_degree(d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn a_k_is_self_adjoint((d, f, g) in pair_of_degree(), k in 1usize..=3) {
        let af = a_k_apply(k, &f, d).unwrap();
        let ag = a_k_apply(k, &g, d).unwrap();
        prop_assert_eq!(inner_product(&af, &g).unwrap(), inner_product(&f, &ag).unwrap());
    }

    #[test]
    fn a_k_commute(f in symfun_of_degree(3), j in 1usize..=3, k in 1usize..=3) {
        let jk = a_k_apply(j, &a_k_apply(k, &f, 3).unwrap(), 3).unwrap();
        let kj = a_k_apply(k, &a_k_apply(j, &f, 3).unwrap(), 3).unwrap();
        prop_assert_eq!(convert(&jk, Basis::P).unwrap(), convert(&kj, Basis::P).unwrap());
    }

    #[test]
    fn basis_round_trips(f in symfun_of_degree(4), via in prop::sample::select(vec![Basis::M, Basis::S, Basis::HlP, Basis::HlQ, Basis::MacM])) {
        let back = convert(&convert(&f, via).unwrap(), Basis::P).unwrap();
        prop_assert_eq!(back, f);
    }
}
