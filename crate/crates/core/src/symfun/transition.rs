//! Transition matrices between bases, one degree at a time.
//!
//! The power-sum to monomial matrix is computed from the monomial expansion
//! of `p_l`, Schur to monomial from Kostka numbers, and the family bases from
//! their constructors. Every other pair is obtained by composing with the
//! inverse of a `* -> m` matrix.
//!
//! Matrices are memoized per evaluation mode, basis pair and degree. Filling
//! a slot is idempotent, so concurrent first fills are harmless. If the
//! environment variable `SYMFUN_CACHE_DIR` names a directory, symbolic
//! matrices are also persisted there as JSON arrays of columns, one file per
//! `(from, to, degree)`.

use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::families;
use crate::partitions::Partition;
use crate::rq::{mode, RatFun};

use super::{Basis, SymFun};

/// Square matrix indexed by the partitions of one degree, in canonical order.
///
/// `entries[i][j]` is the coefficient of the target basis element
/// `partitions[i]` in the source basis element `partitions[j]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Transition {
    pub from: Basis,
    pub to: Basis,
    pub degree: usize,
    pub partitions: Vec<Partition>,
    pub entries: Vec<Vec<RatFun>>,
}

impl Transition {
    fn index(&self, l: &Partition) -> usize {
        self.partitions.binary_search(l).expect("partition of this degree")
    }

    pub fn entry(&self, row: &Partition, col: &Partition) -> RatFun {
        self.entries[self.index(row)][self.index(col)].clone()
    }

    /// The column of `l` as a symmetric function in the target basis.
    pub fn column(&self, l: &Partition, degree_bound: usize) -> SymFun {
        let j = self.index(l);
        SymFun::from_terms(
            self.to,
            degree_bound,
            self.partitions
                .iter()
                .enumerate()
                .map(|(i, m)| (m.clone(), self.entries[i][j].clone())),
        )
    }

    /// True when `entries` times `other.entries` is the identity.
    pub fn is_inverse_of(&self, other: &Transition) -> bool {
        let prod = matmul(&self.entries, &other.entries);
        prod.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
        })
    }
}

type Key = (String, Basis, Basis, usize);

fn cache() -> &'static RwLock<HashMap<Key, Arc<Transition>>> {
    static CACHE: OnceLock<RwLock<HashMap<Key, Arc<Transition>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The matrix expressing `from`-basis elements of degree `degree` in the
/// `to` basis.
pub fn transition_matrix(from: Basis, to: Basis, degree: usize) -> Result<Arc<Transition>> {
    let key = (mode::mode_key(), from, to, degree);
    if let Some(t) = cache().read().unwrap().get(&key) {
        return Ok(t.clone());
    }
    let t = match load_from_disk(from, to, degree) {
        Some(t) => t,
        None => {
            let t = compute(from, to, degree)?;
            store_to_disk(&t);
            t
        }
    };
    let t = Arc::new(t);
    cache().write().unwrap().entry(key).or_insert_with(|| t.clone());
    Ok(t)
}

fn compute(from: Basis, to: Basis, degree: usize) -> Result<Transition> {
    let partitions = Partition::all(degree);
    let entries = if from == to {
        identity(partitions.len())
    } else if to == Basis::M {
        to_m_columns(from, &partitions)?
    } else if from == Basis::M {
        let fwd = transition_matrix(to, Basis::M, degree)?;
        invert(&fwd.entries).ok_or(Error::SingularTransition { degree })?
    } else {
        let a = transition_matrix(from, Basis::M, degree)?;
        let b = transition_matrix(Basis::M, to, degree)?;
        matmul(&b.entries, &a.entries)
    };
    Ok(Transition { from, to, degree, partitions, entries })
}

fn identity(n: usize) -> Vec<Vec<RatFun>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { RatFun::one() } else { RatFun::zero() }).collect())
        .collect()
}

fn from_columns(cols: Vec<SymFun>, partitions: &[Partition]) -> Vec<Vec<RatFun>> {
    partitions
        .iter()
        .map(|row| cols.iter().map(|c| c.coeff(row)).collect())
        .collect()
}

fn to_m_columns(from: Basis, partitions: &[Partition]) -> Result<Vec<Vec<RatFun>>> {
    Ok(match from {
        Basis::M => identity(partitions.len()),
        Basis::P => partitions
            .iter()
            .map(|mu| {
                partitions
                    .iter()
                    .map(|l| RatFun::from_int(power_sum_monomial_coeff(l, mu)))
                    .collect()
            })
            .collect(),
        Basis::S => partitions
            .iter()
            .map(|mu| partitions.iter().map(|nu| RatFun::from_int(kostka(nu, mu))).collect())
            .collect(),
        Basis::HlP => {
            let cols = partitions.iter().map(|l| families::hall_littlewood_p_m(l)).collect();
            from_columns(cols, partitions)
        }
        Basis::HlQ => {
            let cols = partitions
                .iter()
                .map(|l| {
                    let b = RatFun::from_poly(l.t_factors(None).unwrap().b);
                    families::hall_littlewood_p_m(l).scale(&b)
                })
                .collect();
            from_columns(cols, partitions)
        }
        Basis::MacM => {
            let cols = partitions.iter().map(|l| (*families::macdonald_m(l)).clone()).collect();
            from_columns(cols, partitions)
        }
    })
}

/// Coefficient of `x^mu` in `p_l`: the number of ways to distribute the
/// parts of `l` among the variables so that variable `j` receives total
/// degree `mu_j`.
pub(crate) fn power_sum_monomial_coeff(l: &Partition, mu: &Partition) -> u64 {
    fn go(parts: &[usize], caps: &mut Vec<usize>, memo: &mut HashMap<(usize, Vec<usize>), u64>) -> u64 {
        if parts.is_empty() {
            return caps.iter().all(|&c| c == 0) as u64;
        }
        let mut key_caps = caps.clone();
        key_caps.sort_unstable();
        let key = (parts.len(), key_caps);
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut total = 0;
        for j in 0..caps.len() {
            if caps[j] >= parts[0] {
                caps[j] -= parts[0];
                total += go(&parts[1..], caps, memo);
                caps[j] += parts[0];
            }
        }
        memo.insert(key, total);
        total
    }
    if l.weight() != mu.weight() {
        return 0;
    }
    let mut caps = mu.parts().to_vec();
    go(l.parts(), &mut caps, &mut HashMap::new())
}

/// The Kostka number `K_{nu mu}`: semistandard tableaux of shape `nu` and
/// content `mu`, counted by peeling off horizontal strips.
pub fn kostka(nu: &Partition, mu: &Partition) -> u64 {
    type Memo = Mutex<HashMap<(Partition, Partition), u64>>;
    static MEMO: OnceLock<Memo> = OnceLock::new();
    fn go(nu: &Partition, content: &[usize], memo: &Memo) -> u64 {
        let Some((&last, rest)) = content.split_last() else {
            return nu.is_empty() as u64;
        };
        let key = (nu.clone(), Partition::new(content.to_vec()));
        if let Some(&v) = memo.lock().unwrap().get(&key) {
            return v;
        }
        let mut total = 0;
        for rho in horizontal_strips_below(nu, last) {
            total += go(&rho, rest, memo);
        }
        memo.lock().unwrap().insert(key, total);
        total
    }
    if nu.weight() != mu.weight() || !nu.dominates(mu) {
        return 0;
    }
    go(nu, mu.parts(), MEMO.get_or_init(Default::default))
}

/// All `rho` with `nu / rho` a horizontal strip of `size` boxes.
pub(crate) fn horizontal_strips_below(nu: &Partition, size: usize) -> Vec<Partition> {
    fn go(nu: &Partition, i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i > nu.len() {
            if left == 0 {
                out.push(Partition::new(cur.clone()));
            }
            return;
        }
        let hi = nu.part(i);
        let lo = nu.part(i + 1);
        for r in (lo..=hi).rev() {
            let taken = hi - r;
            if taken > left {
                break;
            }
            cur.push(r);
            go(nu, i + 1, left - taken, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(nu, 1, size, &mut Vec::new(), &mut out);
    out
}

pub(crate) fn matmul(a: &[Vec<RatFun>], b: &[Vec<RatFun>]) -> Vec<Vec<RatFun>> {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![RatFun::zero(); m]; n];
    for i in 0..n {
        for (k, aik) in a[i].iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[k][j].is_zero() {
                    out[i][j] += &(aik * &b[k][j]);
                }
            }
        }
    }
    out
}

/// Inverse of a square matrix; triangular matrices are solved directly.
pub(crate) fn invert(a: &[Vec<RatFun>]) -> Option<Vec<Vec<RatFun>>> {
    let n = a.len();
    let lower = (0..n).all(|i| (i + 1..n).all(|j| a[i][j].is_zero()));
    let upper = (0..n).all(|i| (0..i).all(|j| a[i][j].is_zero()));
    if lower || upper {
        if (0..n).any(|i| a[i][i].is_zero()) {
            return None;
        }
        return Some(triangular_inverse(a, lower));
    }
    gauss_jordan(a)
}

fn triangular_inverse(a: &[Vec<RatFun>], lower: bool) -> Vec<Vec<RatFun>> {
    let n = a.len();
    let mut x = vec![vec![RatFun::zero(); n]; n];
    let inv_diag: Vec<RatFun> = (0..n).map(|i| a[i][i].inv().unwrap()).collect();
    for col in 0..n {
        let order: Vec<usize> = if lower { (col..n).collect() } else { (0..=col).rev().collect() };
        for &i in &order {
            let mut s = if i == col { RatFun::one() } else { RatFun::zero() };
            let range: Vec<usize> = if lower { (col..i).collect() } else { (i + 1..=col).collect() };
            for k in range {
                if !a[i][k].is_zero() && !x[k][col].is_zero() {
                    s -= &(&a[i][k] * &x[k][col]);
                }
            }
            x[i][col] = &s * &inv_diag[i];
        }
    }
    x
}

fn gauss_jordan(a: &[Vec<RatFun>]) -> Option<Vec<Vec<RatFun>>> {
    let n = a.len();
    let mut m: Vec<Vec<RatFun>> = a.to_vec();
    let mut inv = identity(n);
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero())?;
        m.swap(c, p);
        inv.swap(c, p);
        let pinv = m[c][c].inv().unwrap();
        for j in 0..n {
            m[c][j] = &m[c][j] * &pinv;
            inv[c][j] = &inv[c][j] * &pinv;
        }
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for j in 0..n {
                    let d = &f * &m[c][j];
                    m[r][j] -= &d;
                    let e = &f * &inv[c][j];
                    inv[r][j] -= &e;
                }
            }
        }
    }
    Some(inv)
}

/// Re-expresses `f` in the basis `to`, degree by degree.
pub fn convert(f: &SymFun, to: Basis) -> Result<SymFun> {
    if f.basis() == to {
        return Ok(f.clone());
    }
    let mut out = SymFun::zero(to, f.degree_bound());
    for d in f.degrees() {
        let t = transition_matrix(f.basis(), to, d)?;
        for (l, c) in f.terms().filter(|(l, _)| l.weight() == d) {
            let j = t.index(l);
            for (i, row) in t.partitions.iter().enumerate() {
                let e = &t.entries[i][j];
                if !e.is_zero() {
                    out.add_term(row, &(c * e));
                }
            }
        }
    }
    Ok(out)
}

fn disk_path(from: Basis, to: Basis, degree: usize) -> Option<PathBuf> {
    if mode::is_numeric() {
        return None;
    }
    let dir = std::env::var_os("SYMFUN_CACHE_DIR")?;
    Some(PathBuf::from(dir).join(format!("{}-{}-{}.json", from.tag(), to.tag(), degree)))
}

fn load_from_disk(from: Basis, to: Basis, degree: usize) -> Option<Transition> {
    let path = disk_path(from, to, degree)?;
    let text = std::fs::read_to_string(path).ok()?;
    let cols: Vec<SymFun> = serde_json::from_str(&text).ok()?;
    let partitions = Partition::all(degree);
    if cols.len() != partitions.len() || cols.iter().any(|c| c.basis() != to) {
        return None;
    }
    let entries = from_columns(cols, &partitions);
    Some(Transition { from, to, degree, partitions, entries })
}

fn store_to_disk(t: &Transition) {
    let Some(path) = disk_path(t.from, t.to, t.degree) else {
        return;
    };
    let cols: Vec<SymFun> = t.partitions.iter().map(|l| t.column(l, t.degree)).collect();
    if let Ok(text) = serde_json::to_string(&cols) {
        // a failed write only costs a recomputation next time
        let tmp = path.with_extension(format!("json.{}", std::process::id()));
        if std::fs::write(&tmp, text).is_ok() {
            let _ = std::fs::rename(&tmp, &path);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rq::IntPoly2;
    use crate::symfun::{collect_symmetric, XPoly};

    fn p(v: &[usize]) -> Partition {
        Partition::from(v)
    }

    fn half() -> RatFun {
        "1/2".parse().unwrap()
    }

    #[test]
    fn p_to_m_degree_two() {
        let t = transition_matrix(Basis::P, Basis::M, 2).unwrap();
        assert!(t.entry(&p(&[2]), &p(&[2])).is_one());
        assert!(t.entry(&p(&[1, 1]), &p(&[2])).is_zero());
        assert!(t.entry(&p(&[2]), &p(&[1, 1])).is_one());
        assert_eq!(t.entry(&p(&[1, 1]), &p(&[1, 1])), RatFun::from_int(2));
    }

    #[test]
    fn m_to_p_degree_two() {
        let f = SymFun::basis_element(Basis::M, &p(&[1, 1]), 2);
        let g = convert(&f, Basis::P).unwrap();
        let expect = SymFun::from_terms(Basis::P, 2, [(p(&[1, 1]), half()), (p(&[2]), -half())]);
        assert_eq!(g, expect);
    }

    #[test]
    fn p_to_m_is_triangular() {
        for d in 1..=6 {
            let t = transition_matrix(Basis::P, Basis::M, d).unwrap();
            for (i, row) in t.partitions.iter().enumerate() {
                for (j, col) in t.partitions.iter().enumerate() {
                    if !t.entries[i][j].is_zero() {
                        // m_row occurs in p_col only for row >= col
                        assert!(row.dominates(col));
                    }
                    if i == j {
                        assert!(!t.entries[i][j].is_zero());
                    }
                }
            }
        }
    }

    /// Literal expansion of `p_l` in `d` variables.
    fn expanded_power_sum(l: &Partition, n: usize) -> XPoly<IntPoly2> {
        let mut acc = XPoly::one(n);
        for &k in l.parts() {
            let mut pk = XPoly::zero(n);
            for i in 0..n {
                let mut e = vec![0; n];
                e[i] = k as u32;
                pk.add_term(e, IntPoly2::one());
            }
            acc = acc.mul(&pk);
        }
        acc
    }

    #[test]
    fn counting_matches_literal_expansion() {
        for d in 1..=5 {
            for l in Partition::all(d) {
                let sym = collect_symmetric(&expanded_power_sum(&l, d)).unwrap();
                for mu in Partition::all(d) {
                    let c = sym.coeff(&mu).as_constant().unwrap();
                    assert_eq!(c, power_sum_monomial_coeff(&l, &mu).into(), "{l} {mu}");
                }
            }
        }
    }

    #[test]
    fn kostka_small_values() {
        assert_eq!(kostka(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
        assert_eq!(kostka(&p(&[3, 2]), &p(&[2, 2, 1])), 2);
        assert_eq!(kostka(&p(&[2, 2]), &p(&[3, 1])), 0);
        assert_eq!(kostka(&p(&[3, 1]), &p(&[1, 1, 1, 1])), 3);
    }

    #[test]
    fn round_trip_p_m_to_degree_six() {
        for d in 0..=6 {
            let a = transition_matrix(Basis::P, Basis::M, d).unwrap();
            let b = transition_matrix(Basis::M, Basis::P, d).unwrap();
            assert!(a.is_inverse_of(&b));
            assert!(b.is_inverse_of(&a));
        }
    }

    #[test]
    fn general_inverse() {
        let m: Vec<Vec<RatFun>> = vec![
            vec![RatFun::from_int(0), RatFun::from_int(1)],
            vec![RatFun::from_int(1), RatFun::q()],
        ];
        let inv = invert(&m).unwrap();
        let prod = matmul(&m, &inv);
        assert_eq!(prod, identity(2));
    }
}
