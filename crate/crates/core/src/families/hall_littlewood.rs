//! Hall-Littlewood polynomials from their alternant formula, and the
//! coefficients attached to them.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::partitions::{v_factor, Partition};
use crate::rq::mode::mode_key;
use crate::rq::{IntPoly2, RatFun};
use crate::symfun::{alternate, Basis, NSymPoly, SymFun, XPoly};

/// Which of the two normalizations, `P` or `Q = b P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HlKind {
    P,
    Q,
}

fn seed_cache() -> &'static RwLock<HashMap<usize, Arc<XPoly<IntPoly2>>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<XPoly<IntPoly2>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `prod_{1 <= i < j <= n} (x_i - t x_j)`.
fn seed_product(n: usize) -> Arc<XPoly<IntPoly2>> {
    if let Some(s) = seed_cache().read().unwrap().get(&n) {
        return s.clone();
    }
    let mut acc = XPoly::one(n);
    for i in 0..n {
        for j in i + 1..n {
            let mut ei = vec![0; n];
            ei[i] = 1;
            let mut ej = vec![0; n];
            ej[j] = 1;
            let mut f = XPoly::monomial(ei, IntPoly2::one());
            f.add_term(ej, -IntPoly2::t());
            acc = acc.mul(&f);
        }
    }
    let acc = Arc::new(acc);
    seed_cache().write().unwrap().entry(n).or_insert(acc).clone()
}

/// `P_l(x_1..x_n)` with coefficients in `Z[t]`.
pub fn hl_alternant_int(l: &Partition, n: usize) -> Result<NSymPoly<IntPoly2>> {
    if l.len() > n {
        return Err(Error::LengthExceedsN { partition: l.clone(), n });
    }
    let seed = seed_product(n);
    let mut shifted = XPoly::zero(n);
    for (e, c) in seed.terms() {
        let f = e.iter().enumerate().map(|(i, &a)| a + l.part(i + 1) as u32).collect();
        shifted.add_term(f, c.clone());
    }
    let sym = alternate(&shifted).divide_by_vandermonde();
    let mut v = v_factor(n - l.len());
    for (_, k) in l.multiplicities() {
        v = &v * &v_factor(k);
    }
    let mut out = NSymPoly::zero(n);
    for (mu, c) in sym.terms() {
        let d = c.divexact(&v).ok_or_else(|| {
            Error::NotDivisible(format!("coefficient of m{mu} in P{l} with N = {n} is {c}, not divisible by {v}"))
        })?;
        out.add_term(mu, d);
    }
    Ok(out)
}

/// `P_l(x_1..x_n)` in the monomial basis.
pub fn hl_alternant(l: &Partition, n: usize) -> Result<NSymPoly> {
    Ok(hl_alternant_int(l, n)?.map_coeffs(|c| RatFun::from_poly(c.clone())))
}

type Key = (String, Partition);

fn stable_cache() -> &'static RwLock<HashMap<Key, SymFun>> {
    static CACHE: OnceLock<RwLock<HashMap<Key, SymFun>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The Hall-Littlewood function `P_l` in the monomial basis, read off in
/// `|l|` variables. The degree bound is `|l|`.
pub fn hall_littlewood_p_m(l: &Partition) -> SymFun {
    let key = (mode_key(), l.clone());
    if let Some(f) = stable_cache().read().unwrap().get(&key) {
        return f.clone();
    }
    let n = l.weight().max(1);
    let f = hl_alternant(l, n).expect("|l| variables suffice").to_symfun(l.weight());
    stable_cache().write().unwrap().entry(key).or_insert(f).clone()
}

/// `P_l` or `Q_l` in the monomial basis.
pub fn hall_littlewood(l: &Partition, kind: HlKind, degree_bound: usize) -> SymFun {
    let p = hall_littlewood_p_m(l).with_bound(degree_bound);
    match kind {
        HlKind::P => p,
        HlKind::Q => p.scale(&RatFun::from_poly(l.t_factors(None).expect("no N").b)),
    }
}

/// The Schur function `s_l`, as `P_l` at `t = 0`, in the monomial basis.
pub fn schur(l: &Partition) -> SymFun {
    let n = l.weight().max(1);
    let zero = num_rational::BigRational::from_integer(0.into());
    let p = hl_alternant_int(l, n).expect("|l| variables suffice");
    SymFun::from_terms(
        Basis::M,
        l.weight(),
        p.terms().map(|(mu, c)| (mu.clone(), RatFun::from_rational(&c.eval(&zero, &zero)))),
    )
}

/// `Q_1, ..., Q_d` in the power-sum basis, from
/// `n Q_n = sum_{k=1}^n (1 - t^k) p_k Q_{n-k}`.
pub fn q_row_series(degree_bound: usize) -> Vec<SymFun> {
    let mut qs: Vec<SymFun> = vec![SymFun::scalar(Basis::P, RatFun::one(), degree_bound)];
    for n in 1..=degree_bound {
        let mut acc = SymFun::zero(Basis::P, degree_bound);
        for k in 1..=n {
            let c = RatFun::one_minus(0, k as i32);
            for (mu, d) in qs[n - k].terms() {
                let mut parts = mu.parts().to_vec();
                parts.push(k);
                acc.add_term(&Partition::new(parts), &(&c * d));
            }
        }
        qs.push(acc.scale(&RatFun::from_rational(&num_rational::BigRational::new(1.into(), (n as i64).into()))));
    }
    qs.remove(0);
    qs
}

/// Coefficient of `P_l` in `Q_n P_mu`, `n = |l| - |mu|`: zero unless `l/mu`
/// is a horizontal strip, otherwise the product of `1 - t^{k_i(l)}` over
/// the `i` with `l'_i - mu'_i > l'_{i+1} - mu'_{i+1}`.
pub fn morris_phi(l: &Partition, mu: &Partition) -> IntPoly2 {
    if !l.is_horizontal_strip_over(mu) {
        return IntPoly2::zero();
    }
    let lc = l.conjugate();
    let mc = mu.conjugate();
    let diff = |i: usize| lc.part(i) as i64 - mc.part(i) as i64;
    let mut acc = IntPoly2::one();
    for i in 1..=l.part(1) {
        if diff(i) > diff(i + 1) {
            acc = &acc * &IntPoly2::from_terms([(0, 0, 1), (0, l.multiplicity(i), -1)]);
        }
    }
    acc
}

/// Coefficient of `P_mu` in `dP_l/dp_1`, for `mu` obtained from `l` by
/// lowering one term by 1: `1` when that term was 1, otherwise `1 - t^m`
/// with `m` the multiplicity of the lowered part in `mu`. Zero for any
/// other `mu`.
pub fn psi_coeff(l: &Partition, mu: &Partition) -> IntPoly2 {
    let i = match l.box_index_over(mu) {
        Some(i) if l.remove_box(i).as_ref() == Some(mu) => i,
        _ => return IntPoly2::zero(),
    };
    if l.part(i) == 1 {
        return IntPoly2::one();
    }
    IntPoly2::from_terms([(0, 0, 1), (0, mu.multiplicity(mu.part(i)), -1)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfun::convert;

    fn p(v: &[usize]) -> Partition {
        Partition::from(v)
    }

    fn r(s: &str) -> RatFun {
        s.parse().unwrap()
    }

    fn poly(s: &str) -> IntPoly2 {
        r(s).as_poly().unwrap().clone()
    }

    fn msym(n: usize, terms: &[(&[usize], &str)]) -> NSymPoly {
        let mut out = NSymPoly::zero(n);
        for (l, c) in terms {
            out.add_term(&p(l), r(c));
        }
        out
    }

    #[test]
    fn alternant_examples() {
        assert_eq!(hl_alternant(&p(&[2]), 2).unwrap(), msym(2, &[(&[2], "1"), (&[1, 1], "1-t")]));
        assert_eq!(hl_alternant(&p(&[1, 1]), 2).unwrap(), msym(2, &[(&[1, 1], "1")]));
        assert_eq!(hl_alternant(&p(&[1]), 3).unwrap(), msym(3, &[(&[1], "1")]));
        assert!(matches!(hl_alternant(&p(&[1, 1, 1]), 2), Err(Error::LengthExceedsN { .. })));
    }

    #[test]
    fn two_variable_oracle() {
        // (x1^3 - x2^3 - t x1 x2 (x1 - x2)) / (x1 - x2), literally
        let n = 2;
        let mut num: XPoly<IntPoly2> = XPoly::zero(n);
        num.add_term(vec![3, 0], IntPoly2::one());
        num.add_term(vec![0, 3], IntPoly2::constant(-1));
        num.add_term(vec![2, 1], -IntPoly2::t());
        num.add_term(vec![1, 2], IntPoly2::t());
        let q = crate::symfun::divide_by_vandermonde(&num).unwrap();
        assert_eq!(q, hl_alternant_int(&p(&[2]), 2).unwrap());
    }

    #[test]
    fn stability() {
        for l in Partition::up_to(4) {
            for n in l.len().max(1)..=4 {
                let big = hl_alternant_int(&l, n + 1).unwrap().set_last_zero();
                assert_eq!(big, hl_alternant_int(&l, n).unwrap(), "{l} {n}");
            }
            if !l.is_empty() {
                assert!(hl_alternant_int(&l, l.len()).unwrap().set_last_zero().is_zero());
            }
        }
    }

    #[test]
    fn specializations() {
        let p2 = hall_littlewood(&p(&[2]), HlKind::P, 2);
        let s2 = p2.specialize(None, Some(&RatFun::zero())).unwrap();
        assert_eq!(s2, SymFun::from_terms(Basis::M, 2, [(p(&[2]), r("1")), (p(&[1, 1]), r("1"))]));
        let p21 = hall_littlewood(&p(&[2, 1]), HlKind::P, 3);
        let at1 = p21.specialize(None, Some(&RatFun::one())).unwrap();
        assert_eq!(at1, SymFun::basis_element(Basis::M, &p(&[2, 1]), 3));
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur(&p(&[1, 1])), SymFun::basis_element(Basis::M, &p(&[1, 1]), 2));
        assert_eq!(schur(&p(&[2])), SymFun::from_terms(Basis::M, 2, [(p(&[2]), r("1")), (p(&[1, 1]), r("1"))]));
        assert_eq!(
            schur(&p(&[2, 1])),
            SymFun::from_terms(Basis::M, 3, [(p(&[2, 1]), r("1")), (p(&[1, 1, 1]), r("2"))])
        );
    }

    #[test]
    fn q_rows() {
        let qs = q_row_series(3);
        assert_eq!(qs[0], SymFun::from_terms(Basis::P, 3, [(p(&[1]), r("1-t"))]));
        assert_eq!(
            qs[1],
            SymFun::from_terms(Basis::P, 3, [(p(&[2]), r("(1-t^2)/2")), (p(&[1, 1]), r("(1-t)^2/2"))])
        );
        for q in &qs {
            assert!(q.specialize(None, Some(&RatFun::one())).unwrap().is_zero());
        }
        for (n, q) in qs.iter().enumerate() {
            let direct = convert(&hall_littlewood(&p(&[n + 1]), HlKind::Q, 3), Basis::P).unwrap();
            assert_eq!(*q, direct);
        }
    }

    #[test]
    fn phi_examples() {
        assert_eq!(morris_phi(&p(&[2]), &p(&[1])), poly("1-t"));
        assert_eq!(morris_phi(&p(&[1, 1]), &p(&[1])), poly("1-t^2"));
        assert!(morris_phi(&p(&[2, 2]), &p(&[1])).is_zero());
        assert!(morris_phi(&p(&[2, 1]), &p(&[2, 1])).is_one());
        assert_eq!(morris_phi(&p(&[1]), &p(&[])), poly("1-t"));
    }

    #[test]
    fn psi_examples() {
        assert!(psi_coeff(&p(&[2, 1]), &p(&[2])).is_one());
        assert_eq!(psi_coeff(&p(&[2]), &p(&[1])), poly("1-t"));
        assert_eq!(psi_coeff(&p(&[2, 2]), &p(&[2, 1])), poly("1-t"));
        assert!(psi_coeff(&p(&[2, 2]), &p(&[1, 1])).is_zero());
        assert_eq!(psi_coeff(&p(&[3, 1, 1]), &p(&[2, 1, 1])), poly("1-t"));
    }
}
