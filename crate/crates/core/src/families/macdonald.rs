//! Macdonald functions by Gram-Schmidt over the monomial basis.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::partitions::Partition;
use crate::rq::mode::mode_key;
use crate::rq::RatFun;
use crate::symfun::{p_norm, transition_matrix, Basis, SymFun};

type Key = (String, usize);
type Degree = Arc<HashMap<Partition, Arc<SymFun>>>;

fn cache() -> &'static RwLock<HashMap<Key, Degree>> {
    static CACHE: OnceLock<RwLock<HashMap<Key, Degree>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `M_l` in the monomial basis, with degree bound `|l|`.
pub fn macdonald_m(l: &Partition) -> Arc<SymFun> {
    macdonald_degree(l.weight())[l].clone()
}

/// All `M_l` with `|l| = n`.
///
/// Partitions are processed from `(1^n)` upwards in reverse canonical
/// order, which refines dominance, and each result is checked to be
/// supported on partitions it dominates.
pub fn macdonald_degree(n: usize) -> Degree {
    let key = (mode_key(), n);
    if let Some(d) = cache().read().unwrap().get(&key) {
        return d.clone();
    }
    let d = Arc::new(gram_schmidt(n));
    cache().write().unwrap().entry(key).or_insert(d).clone()
}

fn gram_schmidt(n: usize) -> HashMap<Partition, Arc<SymFun>> {
    let m_to_p = transition_matrix(Basis::M, Basis::P, n).expect("m to p is invertible");
    let parts = &m_to_p.partitions;
    let len = parts.len();
    let a = &m_to_p.entries;
    let norms: Vec<RatFun> = parts.iter().map(p_norm).collect();
    // gram[x][y] = <m_x, m_y>
    let mut gram = vec![vec![RatFun::zero(); len]; len];
    for x in 0..len {
        for y in x..len {
            let mut acc = RatFun::zero();
            for i in 0..len {
                if !a[i][x].is_zero() && !a[i][y].is_zero() {
                    acc += &(&(&a[i][x] * &a[i][y]) * &norms[i]);
                }
            }
            gram[y][x] = acc.clone();
            gram[x][y] = acc;
        }
    }
    // coeffs[x] = coefficients of M_{parts[x]} on m; sq[x] = <M_x, M_x>
    let mut coeffs: Vec<Vec<RatFun>> = vec![Vec::new(); len];
    let mut sq: Vec<RatFun> = vec![RatFun::zero(); len];
    for x in (0..len).rev() {
        let mut c = vec![RatFun::zero(); len];
        c[x] = RatFun::one();
        for y in x + 1..len {
            let mut ip = RatFun::zero();
            for (z, cz) in coeffs[y].iter().enumerate() {
                if !cz.is_zero() {
                    ip += &(cz * &gram[x][z]);
                }
            }
            if ip.is_zero() {
                continue;
            }
            let k = ip.try_div(&sq[y]).expect("Macdonald norms do not vanish");
            for z in 0..len {
                if !coeffs[y][z].is_zero() {
                    c[z] -= &(&k * &coeffs[y][z]);
                }
            }
        }
        let mut norm = RatFun::zero();
        for (z, cz) in c.iter().enumerate() {
            if !cz.is_zero() {
                norm += &(cz * &gram[x][z]);
            }
        }
        sq[x] = norm;
        for (z, cz) in c.iter().enumerate() {
            assert!(
                cz.is_zero() || parts[x].dominates(&parts[z]),
                "M{} has a term on m{}, which it does not dominate",
                parts[x],
                parts[z]
            );
        }
        coeffs[x] = c;
    }
    parts
        .iter()
        .zip(coeffs)
        .map(|(l, c)| {
            let f = SymFun::from_terms(Basis::M, n, parts.iter().cloned().zip(c));
            (l.clone(), Arc::new(f))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{hall_littlewood, HlKind};
    use crate::symfun::inner_product;

    fn p(v: &[usize]) -> Partition {
        Partition::from(v)
    }

    fn r(s: &str) -> RatFun {
        s.parse().unwrap()
    }

    #[test]
    fn degree_two() {
        assert_eq!(*macdonald_m(&p(&[1, 1])), SymFun::basis_element(Basis::M, &p(&[1, 1]), 2));
        let m2 = SymFun::from_terms(Basis::M, 2, [(p(&[2]), r("1")), (p(&[1, 1]), r("(1+q)*(1-t)/(1-q*t)"))]);
        assert_eq!(*macdonald_m(&p(&[2])), m2);
        let at0 = m2.specialize(Some(&RatFun::zero()), None).unwrap();
        assert_eq!(at0, hall_littlewood(&p(&[2]), HlKind::P, 2));
    }

    #[test]
    fn orthogonal_in_degree_three() {
        let all = Partition::all(3);
        for a in &all {
            for b in &all {
                let ip = inner_product(&macdonald_m(a), &macdonald_m(b)).unwrap();
                assert_eq!(ip.is_zero(), a != b, "{a} {b}");
            }
        }
    }

    #[test]
    fn empty_and_one() {
        assert!(macdonald_m(&Partition::empty()).coeff(&Partition::empty()).is_one());
        assert_eq!(*macdonald_m(&p(&[1])), SymFun::basis_element(Basis::M, &p(&[1]), 1));
    }
}
