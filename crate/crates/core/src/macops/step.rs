//! Pieri coefficients and the step operators `B(u)`, `C(u)`.

use crate::error::{Error, Result};
use crate::families::{hall_littlewood, HlKind};
use crate::partitions::{Constraints, Partition};
use crate::rq::RatFun;
use crate::symfun::{adjoint_apply, convert, p_multiply, Basis, SymFun};

use super::ufamily::{UFamily, UPoly, URational};

/// Which of the two step families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StepKind {
    B,
    C,
}

impl std::fmt::Display for StepKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            StepKind::B => "B",
            StepKind::C => "C",
        })
    }
}

fn ratio(num: RatFun, den: RatFun) -> RatFun {
    num.try_div(&den).expect("Pieri denominators do not vanish")
}

/// The coefficient of `M_l` in `p_1 M_mu`.
pub fn pieri_up_coeff(l: &Partition, mu: &Partition) -> Result<RatFun> {
    let i = l.box_index_over(mu).ok_or_else(|| Error::NotOneBoxUp { lambda: l.clone(), mu: mu.clone() })?;
    let li = l.part(i) as i32;
    let mut acc = RatFun::one();
    for j in 1..i {
        let a = l.part(j) as i32 - li;
        let d = (i - j) as i32;
        acc = &acc * &ratio(RatFun::one_minus(a, d + 1), RatFun::one_minus(a + 1, d));
        acc = &acc * &ratio(RatFun::one_minus(a + 1, d - 1), RatFun::one_minus(a, d));
    }
    Ok(acc)
}

/// The coefficient of `M_mu` in `dM_l/dp_1`.
pub fn pieri_down_coeff(mu: &Partition, l: &Partition) -> Result<RatFun> {
    let i = l.box_index_over(mu).ok_or_else(|| Error::NotOneBoxDown { mu: mu.clone(), lambda: l.clone() })?;
    let li = l.part(i) as i32;
    let lc = l.conjugate();
    let mut acc = RatFun::one();
    for j in 1..li {
        let a = li - j;
        let b = lc.part(j as usize) as i32 - i as i32;
        acc = &acc * &ratio(RatFun::one_minus(a - 1, b + 1), RatFun::one_minus(a, b));
        acc = &acc * &ratio(RatFun::one_minus(a + 1, b), RatFun::one_minus(a, b + 1));
    }
    Ok(acc)
}

/// `t^{1-i}/(1 - u t^{1-i}) prod_{j != i} (q^{-l_j} - u t^{1-j})/(1 - u t^{1-j})`
/// with `j` running over `1..=l(l)`.
pub fn iskip(l: &Partition, i: usize) -> URational {
    let shift = |j: usize| 1 - j as i32;
    let mut out = URational {
        num: UPoly::constant(RatFun::monomial(1, 0, shift(i))),
        den: UPoly::linear(RatFun::one(), RatFun::monomial(-1, 0, shift(i))),
    };
    for j in (1..=l.len()).filter(|&j| j != i) {
        out = out.mul(&URational {
            num: UPoly::linear(RatFun::monomial(1, -(l.part(j) as i32), 0), RatFun::monomial(-1, 0, shift(j))),
            den: UPoly::linear(RatFun::one(), RatFun::monomial(-1, 0, shift(j))),
        });
    }
    out
}

/// The value of the product `iskip(l, i)` at `u = q^{-l_i} t^{i-1}`, in the
/// closed form `t^{1-i} prod_j 1/(q^{l_i} - t^{i-j}) prod_{j != i} (q^{l_i - l_j} - t^{i-j})`.
pub fn iskipla(l: &Partition, i: usize) -> RatFun {
    let li = l.part(i) as i32;
    let mut num = RatFun::monomial(1, 0, 1 - i as i32);
    let mut den = RatFun::one();
    for j in 1..=l.len() {
        let d = i as i32 - j as i32;
        den = &den * &(&RatFun::monomial(1, li, 0) - &RatFun::monomial(1, 0, d));
        if j != i {
            num = &num * &(&RatFun::monomial(1, li - l.part(j) as i32, 0) - &RatFun::monomial(1, 0, d));
        }
    }
    ratio(num, den)
}

/// `B_{l mu}(u)` (kind B, `l` is `mu` plus a box) or `C_{mu l}(u)` (kind C,
/// `mu` is `l` minus a box), as a rational function of `u`.
pub fn bc_matrix_coeff(kind: StepKind, l: &Partition, mu: &Partition) -> Result<URational> {
    let (pieri, extra) = match kind {
        StepKind::B => (pieri_up_coeff(l, mu)?, RatFun::one_minus(0, 1)),
        StepKind::C => (pieri_down_coeff(mu, l)?, RatFun::one_minus(1, 0)),
    };
    let i = l.box_index_over(mu).expect("checked by the Pieri coefficient");
    Ok(iskip(l, i).scale(&(&pieri * &extra)))
}

/// `B^(k+1) f` or `C^(k+1) f`, returned in the basis of `f`.
pub fn step_series_apply(kind: StepKind, k: usize, f: &SymFun, degree_bound: usize) -> Result<SymFun> {
    let top = f.max_degree().unwrap_or(0);
    let mut out = SymFun::zero(Basis::P, degree_bound);
    for w in k..=top {
        for mu in Partition::enumerate(w, Constraints { exact_length: Some(k), ..Default::default() }) {
            let plus = mu.append_one();
            let (mult, adj) = match kind {
                StepKind::B => (hall_littlewood(&plus, HlKind::Q, w + 1), SymFun::basis_element(Basis::HlP, &mu, w)),
                StepKind::C => {
                    if w + 1 > top {
                        continue;
                    }
                    (hall_littlewood(&mu, HlKind::P, w), hall_littlewood(&plus, HlKind::Q, w + 1))
                }
            };
            let d = adjoint_apply(&adj, f)?;
            if d.is_zero() {
                continue;
            }
            let term = p_multiply(&convert(&mult, Basis::P)?, &d, degree_bound)?;
            out = out.checked_add(&term.scale(&RatFun::monomial(1, -(w as i32), 0)))?;
        }
    }
    let out = out.scale(&RatFun::monomial(1, 0, -(k as i32)));
    convert(&out, f.basis())
}

/// `B(u) f` or `C(u) f` in the basis `1/(u; t^{-1})_k`; entry 0 vanishes.
/// The series is finite on `f`: entries stop once every term is zero.
pub fn step_family(kind: StepKind, f: &SymFun, degree_bound: usize) -> Result<UFamily<SymFun>> {
    let top = f.max_degree().unwrap_or(0);
    let mut entries = vec![SymFun::zero(f.basis(), degree_bound)];
    for k in 0..=top {
        entries.push(step_series_apply(kind, k, f, degree_bound)?);
    }
    while entries.len() > 1 && entries.last().is_some_and(SymFun::is_zero) {
        entries.pop();
    }
    Ok(UFamily::new(entries))
}

/// One-box evaluation of a step family.
#[derive(Clone, Debug, PartialEq)]
pub struct StepValue {
    /// Exponents `(a, b)` of the point `u = q^a t^b`.
    pub point: (i32, i32),
    /// For kind B the smaller partition `mu`, for kind C also `mu`.
    pub partner: Partition,
    /// The matrix coefficient evaluated directly at the point.
    pub coeff: RatFun,
    /// Pieri coefficient times `1 - t` (or `1 - q`) times the closed-form
    /// product `iskipla`.
    pub closed_form: RatFun,
    /// `coeff / closed_form`.
    pub ratio: RatFun,
}

impl StepValue {
    pub fn point_value(&self) -> RatFun {
        RatFun::monomial(1, self.point.0, self.point.1)
    }
}

/// Evaluates the matrix coefficient between `M_l` and `M_mu`, where `mu` is
/// `l` with row `i` shortened, at `u = q^{-l_i} t^{i-1}`.
pub fn step_evaluate(kind: StepKind, l: &Partition, i: usize) -> Result<StepValue> {
    let mu = l.remove_box(i).ok_or_else(|| Error::InvalidStep { lambda: l.clone(), row: i })?;
    let point = (-(l.part(i) as i32), i as i32 - 1);
    let u0 = RatFun::monomial(1, point.0, point.1);
    let coeff = bc_matrix_coeff(kind, l, &mu)?.eval(&u0)?;
    let (pieri, extra) = match kind {
        StepKind::B => (pieri_up_coeff(l, &mu)?, RatFun::one_minus(0, 1)),
        StepKind::C => (pieri_down_coeff(&mu, l)?, RatFun::one_minus(1, 0)),
    };
    let closed_form = &(&pieri * &extra) * &iskipla(l, i);
    let ratio = coeff.try_div(&closed_form)?;
    Ok(StepValue { point, partner: mu, coeff, closed_form, ratio })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::macdonald_m;
    use crate::symfun::dp1;

    fn p(v: &[usize]) -> Partition {
        Partition::from(v)
    }

    fn r(s: &str) -> RatFun {
        s.parse().unwrap()
    }

    #[test]
    fn pieri_examples() {
        assert!(pieri_up_coeff(&p(&[1]), &Partition::empty()).unwrap().is_one());
        assert_eq!(pieri_up_coeff(&p(&[1, 1]), &p(&[1])).unwrap(), r("(1-q)*(1+t)/(1-q*t)"));
        assert!(pieri_up_coeff(&p(&[2]), &p(&[1])).unwrap().is_one());
        assert!(pieri_up_coeff(&p(&[2]), &p(&[2])).is_err());
        assert!(pieri_down_coeff(&Partition::empty(), &p(&[1])).unwrap().is_one());
        assert_eq!(pieri_down_coeff(&p(&[1]), &p(&[2])).unwrap(), r("(1+q)*(1-t)/(1-q*t)"));
        assert!(pieri_down_coeff(&p(&[2]), &p(&[2, 1])).unwrap().is_one());
        assert!(pieri_down_coeff(&p(&[1, 1]), &p(&[3])).is_err());
    }

    #[test]
    fn pieri_against_products() {
        for mu in Partition::up_to(3) {
            let m = macdonald_m(&mu);
            let up = convert(
                &p_multiply(&SymFun::basis_element(Basis::P, &p(&[1]), 1), &convert(&m, Basis::P).unwrap(), 4)
                    .unwrap(),
                Basis::MacM,
            )
            .unwrap();
            let mut want = SymFun::zero(Basis::MacM, 4);
            for l in mu.add_one_box() {
                want.add_term(&l, &pieri_up_coeff(&l, &mu).unwrap());
            }
            assert_eq!(up, want, "{mu}");
            let down = convert(&dp1(&m).unwrap(), Basis::MacM).unwrap();
            let mut want = SymFun::zero(Basis::MacM, mu.weight());
            for nu in mu.remove_one_box() {
                want.add_term(&nu, &pieri_down_coeff(&nu, &mu).unwrap());
            }
            assert_eq!(down.with_bound(mu.weight()), want, "{mu}");
        }
    }

    #[test]
    fn series_examples() {
        let f = SymFun::basis_element(Basis::P, &p(&[2]), 3);
        let b = step_series_apply(StepKind::B, 0, &f, 3).unwrap();
        assert_eq!(b, SymFun::basis_element(Basis::P, &p(&[2, 1]), 3).scale(&r("1-t")));
        let p1 = SymFun::basis_element(Basis::P, &p(&[1]), 1);
        let c = step_series_apply(StepKind::C, 0, &p1, 1).unwrap();
        assert_eq!(c, SymFun::scalar(Basis::P, r("1-q"), 1));
        let m1 = SymFun::basis_element(Basis::MacM, &p(&[1]), 1);
        assert!(step_series_apply(StepKind::C, 1, &m1, 1).unwrap().is_zero());
    }

    #[test]
    fn matrix_coefficients() {
        let u0 = r("7");
        let b = bc_matrix_coeff(StepKind::B, &p(&[1]), &Partition::empty()).unwrap();
        assert_eq!(b.eval(&u0).unwrap(), r("(1-t)/(1-7)"));
        let c = bc_matrix_coeff(StepKind::C, &p(&[1]), &Partition::empty()).unwrap();
        assert_eq!(c.eval(&u0).unwrap(), r("(1-q)/(1-7)"));
        let b = bc_matrix_coeff(StepKind::B, &p(&[1, 1]), &p(&[1])).unwrap();
        assert_eq!(
            b.eval(&u0).unwrap(),
            r("(1-q)*(1+t)/(1-q*t) * (1/t)/(1-7/t) * (1/q-7)/(1-7) * (1-t)")
        );
    }

    #[test]
    fn evaluations() {
        let v = step_evaluate(StepKind::B, &p(&[1]), 1).unwrap();
        assert_eq!(v.point, (-1, 0));
        assert_eq!(v.partner, Partition::empty());
        assert_eq!(v.coeff, r("(1-t)*q/(q-1)"));
        assert_eq!(v.closed_form, r("(1-t)/(q-1)"));
        assert_eq!(v.ratio, r("q"));
        let v = step_evaluate(StepKind::C, &p(&[1]), 1).unwrap();
        assert_eq!(v.coeff, r("-q"));
        let v = step_evaluate(StepKind::B, &p(&[2]), 1).unwrap();
        assert_eq!(v.partner, p(&[1]));
        assert_eq!(v.coeff, r("(1-t)*q^2/(q^2-1)"));
        assert_eq!(v.ratio, r("q^2"));
        assert!(matches!(step_evaluate(StepKind::B, &p(&[1, 1]), 1), Err(Error::InvalidStep { .. })));
    }
}
