//! Green polynomials: the coefficients of `p_l` on the `P_mu`.

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::rq::IntPoly2;
use crate::symfun::{transition_matrix, Basis};

/// `X_{l mu}(t)` for all partitions of one degree, defined by
/// `p_l = sum_mu X_{l mu}(t) P_mu`.
#[derive(Clone, Debug, PartialEq)]
pub struct GreenTable {
    pub degree: usize,
    pub partitions: Vec<Partition>,
    /// `entries[i][j] = X_{partitions[i], partitions[j]}`.
    pub entries: Vec<Vec<IntPoly2>>,
}

impl GreenTable {
    pub fn entry(&self, l: &Partition, mu: &Partition) -> &IntPoly2 {
        let i = self.partitions.iter().position(|x| x == l).expect("partition of the degree");
        let j = self.partitions.iter().position(|x| x == mu).expect("partition of the degree");
        &self.entries[i][j]
    }
}

/// Reads the table off the `p -> HL_P` transition matrix. Fails with
/// `NotDivisible` if an entry is not a polynomial with integer coefficients.
pub fn green_table(degree: usize) -> Result<GreenTable> {
    let tr = transition_matrix(Basis::P, Basis::HlP, degree)?;
    let len = tr.partitions.len();
    let mut entries = vec![vec![IntPoly2::zero(); len]; len];
    for (i, row) in entries.iter_mut().enumerate() {
        for (j, e) in row.iter_mut().enumerate() {
            // column i of the transition is p_{partitions[i]}
            let c = &tr.entries[j][i];
            *e = c.as_poly().cloned().ok_or_else(|| {
                Error::NotDivisible(format!(
                    "X_{}{} = {c} is not a polynomial",
                    tr.partitions[i], tr.partitions[j]
                ))
            })?;
        }
    }
    Ok(GreenTable { degree, partitions: tr.partitions.clone(), entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rq::RatFun;

    fn p(v: &[usize]) -> Partition {
        Partition::from(v)
    }

    fn poly(s: &str) -> IntPoly2 {
        s.parse::<RatFun>().unwrap().as_poly().unwrap().clone()
    }

    #[test]
    fn degree_two() {
        let g = green_table(2).unwrap();
        assert!(g.entry(&p(&[2]), &p(&[2])).is_one());
        assert_eq!(*g.entry(&p(&[2]), &p(&[1, 1])), poly("t-1"));
        assert!(g.entry(&p(&[1, 1]), &p(&[2])).is_one());
        assert_eq!(*g.entry(&p(&[1, 1]), &p(&[1, 1])), poly("1+t"));
    }
}
