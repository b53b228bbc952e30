//! Determinants, Smith and Hermite normal forms, integer kernels and solving.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::int::Integer;
use crate::matrix::IntMatrix;
use crate::sparse::{sparse_rows, Eliminator};

/// Fraction-free determinant (Bareiss).
pub fn det(a: &IntMatrix) -> Result<Integer> {
    if !a.is_square() {
        return Err(Error::Dimension(format!(
            "determinant of a {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    if n == 0 {
        return Ok(Integer::ONE);
    }
    let mut m = a.clone();
    let mut negate = false;
    let mut prev = Integer::ONE;
    for k in 0..n - 1 {
        if m[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                Some(i) => {
                    m.swap_rows(i, k);
                    negate = !negate;
                }
                None => return Ok(Integer::ZERO),
            }
        }
        let p = m[(k, k)].clone();
        for i in k + 1..n {
            let f = m[(i, k)].clone();
            for j in k + 1..n {
                let mut v = &m[(i, j)] * &p;
                if !f.is_zero() {
                    v.sub_mul(&f, &m[(k, j)]);
                }
                m[(i, j)] = v.div_exact(&prev);
            }
            m[(i, k)] = Integer::ZERO;
        }
        prev = p;
    }
    let d = m[(n - 1, n - 1)].clone();
    Ok(if negate { -d } else { d })
}

/// Smith decomposition `u * a * v = d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    pub fn diagonal(&self) -> Vec<Integer> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].clone())
            .collect()
    }
}

fn find_min(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let v = &a[(i, j)];
            if v.is_zero() {
                continue;
            }
            match best {
                None => best = Some((i, j)),
                Some((bi, bj)) => {
                    if v.cmp_abs(&a[(bi, bj)]).is_lt() {
                        best = Some((i, j));
                    }
                }
            }
            if v.is_unit() {
                return best;
            }
        }
    }
    best
}

/// Diagonalize `a` in place, mirroring row operations on `left` and column
/// operations on `right`. Returns the rank.
pub(crate) fn smith_core(
    a: &mut IntMatrix,
    mut left: Option<&mut IntMatrix>,
    mut right: Option<&mut IntMatrix>,
) -> usize {
    let (m, n) = (a.rows(), a.cols());
    let mut t = 0;
    while t < m.min(n) {
        let Some((pi, pj)) = find_min(a, t) else { break };
        a.swap_rows(t, pi);
        if let Some(l) = left.as_deref_mut() {
            l.swap_rows(t, pi);
        }
        a.swap_cols(t, pj);
        if let Some(r) = right.as_deref_mut() {
            r.swap_cols(t, pj);
        }
        loop {
            let p = a[(t, t)].clone();
            let mut remainder = false;
            for i in t + 1..m {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = a[(i, t)].div_rem(&p).0;
                let nq = -q;
                a.add_row_multiple(i, t, &nq);
                if let Some(l) = left.as_deref_mut() {
                    l.add_row_multiple(i, t, &nq);
                }
                if !a[(i, t)].is_zero() {
                    remainder = true;
                }
            }
            for j in t + 1..n {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = a[(t, j)].div_rem(&p).0;
                let nq = -q;
                a.add_col_multiple(j, t, &nq);
                if let Some(r) = right.as_deref_mut() {
                    r.add_col_multiple(j, t, &nq);
                }
                if !a[(t, j)].is_zero() {
                    remainder = true;
                }
            }
            if remainder {
                // Move the smallest remainder in row t or column t to the pivot spot.
                let mut best: Option<(usize, usize)> = None;
                let consider = |i: usize, j: usize, best: &mut Option<(usize, usize)>| {
                    let v = &a[(i, j)];
                    if v.is_zero() {
                        return;
                    }
                    if best.map_or(true, |(bi, bj)| v.cmp_abs(&a[(bi, bj)]).is_lt()) {
                        *best = Some((i, j));
                    }
                };
                for i in t + 1..m {
                    consider(i, t, &mut best);
                }
                for j in t + 1..n {
                    consider(t, j, &mut best);
                }
                let (bi, bj) = best.expect("remainder present");
                a.swap_rows(t, bi);
                if let Some(l) = left.as_deref_mut() {
                    l.swap_rows(t, bi);
                }
                a.swap_cols(t, bj);
                if let Some(r) = right.as_deref_mut() {
                    r.swap_cols(t, bj);
                }
                continue;
            }
            let bad_row = (t + 1..m).find(|&i| (t + 1..n).any(|j| !p.divides(&a[(i, j)])));
            match bad_row {
                Some(i) => {
                    a.add_row_multiple(t, i, &Integer::ONE);
                    if let Some(l) = left.as_deref_mut() {
                        l.add_row_multiple(t, i, &Integer::ONE);
                    }
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            if let Some(l) = left.as_deref_mut() {
                l.negate_row(t);
            }
        }
        t += 1;
    }
    t
}

/// Smith normal form with unimodular transforms.
pub fn snf(a: &IntMatrix) -> SnfResult {
    let mut d = a.clone();
    let mut u = IntMatrix::identity(a.rows());
    let mut v = IntMatrix::identity(a.cols());
    smith_core(&mut d, Some(&mut u), Some(&mut v));
    SnfResult { d, u, v }
}

/// Nonzero Smith invariants of `a` in divisibility order.
pub fn smith_invariants(a: &IntMatrix) -> Vec<Integer> {
    let mut d = a.clone();
    let r = smith_core(&mut d, None, None);
    (0..r).map(|i| d[(i, i)].clone()).collect()
}

pub fn rank(a: &IntMatrix) -> usize {
    smith_invariants(a).len()
}

/// Canonical column Hermite form of the column span of `a`.
///
/// Each column's lowest nonzero entry is its pivot; pivots are positive,
/// columns are ordered by ascending pivot row, and every entry to the right
/// of a pivot in its row lies in `[0, pivot)`. Zero columns are dropped.
pub fn hnf_column_span(a: &IntMatrix) -> IntMatrix {
    let m = a.rows();
    let mut w = a.clone();
    let mut active: Vec<usize> = (0..a.cols()).collect();
    // (pivot row, column index in w)
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    for i in (0..m).rev() {
        let nz: Vec<usize> = active.iter().copied().filter(|&j| !w[(i, j)].is_zero()).collect();
        if nz.is_empty() {
            continue;
        }
        let piv = nz[0];
        for &j in &nz[1..] {
            let (x, y) = (w[(i, piv)].clone(), w[(i, j)].clone());
            if x.divides(&y) {
                let q = -y.div_exact(&x);
                w.add_col_multiple(j, piv, &q);
                continue;
            }
            let (g, s, t) = Integer::ext_gcd(&x, &y);
            let (xg, yg) = (x.div_exact(&g), y.div_exact(&g));
            // [piv, j] <- [s*piv + t*j, -yg*piv + xg*j]
            w.combine_cols(piv, j, &s, &t, &-yg, &xg);
        }
        if w[(i, piv)].is_negative() {
            w.negate_col(piv);
        }
        active.retain(|&j| j != piv);
        pivots.push((i, piv));
    }
    pivots.sort();
    let mut h = w.select_columns(&pivots.iter().map(|p| p.1).collect::<Vec<_>>());
    let k = pivots.len();
    for c in 1..k {
        for j in (0..c).rev() {
            let r = pivots[j].0;
            let p = h[(r, j)].clone();
            let q = h[(r, c)].div_floor(&p);
            if !q.is_zero() {
                h.add_col_multiple(c, j, &-q);
            }
        }
    }
    h
}

/// Kernel of a dense matrix via Smith form.
pub(crate) fn dense_kernel(a: &IntMatrix) -> IntMatrix {
    let mut d = a.clone();
    let mut v = IntMatrix::identity(a.cols());
    let r = smith_core(&mut d, None, Some(&mut v));
    v.select_columns(&(r..a.cols()).collect::<Vec<_>>())
}

/// Some integer `x` with `a x = b`, via Smith form.
pub(crate) fn dense_solve(a: &IntMatrix, b: &IntMatrix) -> Option<IntMatrix> {
    assert_eq!(a.rows(), b.rows());
    let mut d = a.clone();
    let mut ub = b.clone();
    let mut v = IntMatrix::identity(a.cols());
    let r = smith_core(&mut d, Some(&mut ub), Some(&mut v));
    let mut z = IntMatrix::zeros(a.cols(), b.cols());
    for i in 0..a.rows() {
        for j in 0..b.cols() {
            let val = &ub[(i, j)];
            if i < r {
                let (q, rem) = val.div_rem(&d[(i, i)]);
                if !rem.is_zero() {
                    return None;
                }
                z[(i, j)] = q;
            } else if !val.is_zero() {
                return None;
            }
        }
    }
    Some(v.mm(&z))
}

/// Basis of `{x : a x = 0}` as columns.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let mut e = Eliminator::new(a.cols(), 0);
    for row in sparse_rows(a) {
        e.push_row(&row);
    }
    e.finish().kernel()
}

/// Kernel of a system given directly as sparse rows over `nvars` unknowns.
pub fn kernel_basis_rows<I>(nvars: usize, rows: I) -> IntMatrix
where
    I: IntoIterator<Item = Vec<(usize, Integer)>>,
{
    let mut e = Eliminator::new(nvars, 0);
    for row in rows {
        e.push_row(&row);
    }
    e.finish().kernel()
}

/// Some integer solution of `a x = b` for a column `b`.
pub fn solve_integer(a: &IntMatrix, b: &IntMatrix) -> Result<Option<IntMatrix>> {
    if b.cols() != 1 {
        return Err(Error::Dimension("right-hand side must be a single column".into()));
    }
    solve_integer_many(a, b)
}

/// Some integer `X` with `a X = b`, or `None` if any column is unsolvable.
pub fn solve_integer_many(a: &IntMatrix, b: &IntMatrix) -> Result<Option<IntMatrix>> {
    if a.rows() != b.rows() {
        return Err(Error::Dimension(format!(
            "{}x{} system with {} right-hand rows",
            a.rows(),
            a.cols(),
            b.rows()
        )));
    }
    let nv = a.cols();
    let mut e = Eliminator::new(nv, b.cols());
    for i in 0..a.rows() {
        let mut row: Vec<(usize, Integer)> = a
            .row(i)
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(j, v)| (j, v.clone()))
            .collect();
        for (j, v) in b.row(i).iter().enumerate() {
            if !v.is_zero() {
                row.push((nv + j, -v));
            }
        }
        e.push_row(&row);
    }
    Ok(e.finish().solution())
}

/// A finitely generated abelian group `Z^free_rank + Z/f_1 + ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianInvariants {
    pub factors: Vec<Integer>,
    pub free_rank: usize,
}

impl AbelianInvariants {
    pub fn trivial() -> AbelianInvariants {
        AbelianInvariants {
            factors: Vec::new(),
            free_rank: 0,
        }
    }

    pub fn cyclic(k: i64) -> AbelianInvariants {
        AbelianInvariants {
            factors: vec![Integer::from(k)],
            free_rank: 0,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty() && self.free_rank == 0
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Group order for a finite group.
    pub fn order(&self) -> Option<Integer> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.factors.iter().fold(Integer::ONE, |acc, f| &acc * f))
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = self.factors.iter().map(|k| format!("Z/{k}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Invariants of `Z^rows / colspan(a)`.
pub fn cokernel_invariants(a: &IntMatrix) -> AbelianInvariants {
    let d = smith_invariants(a);
    let free_rank = a.rows() - d.len();
    AbelianInvariants {
        factors: d.into_iter().filter(|v| !v.is_one()).collect(),
        free_rank,
    }
}

/// `Circ(c_0, ..., c_{n-1})`: first column `c`, each further column the
/// previous one shifted cyclically down by one place.
pub fn circulant(c: &[Integer]) -> IntMatrix {
    let n = c.len();
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = c[(i + n - j) % n].clone();
        }
    }
    m
}

/// First vector: `(n-1)/2` ones then `(n+1)/2` zeros.
pub fn circulant_ones_vector(n: usize) -> Vec<Integer> {
    let h = (n - 1) / 2;
    (0..n).map(|i| Integer::from(i64::from(i < h))).collect()
}

/// Second vector: `(n-1)/2` entries -1, then 0, then `(n-3)/2` ones, then 0.
pub fn circulant_signed_vector(n: usize) -> Vec<Integer> {
    let h = (n - 1) / 2;
    let mut v = vec![Integer::from(-1); h];
    v.push(Integer::ZERO);
    v.extend(std::iter::repeat(Integer::ONE).take((n - 3) / 2));
    v.push(Integer::ZERO);
    v
}

/// Checks the two circulant determinant closed forms for odd `n >= 3`:
/// `det Circ(ones) = (n-1)/2` and `det Circ(signed) = -1`.
pub fn circulant_closed_forms(n: usize) -> Result<(bool, bool)> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidParameter(format!("n = {n} must be odd and at least 3")));
    }
    let d1 = det(&circulant(&circulant_ones_vector(n)))?;
    let d2 = det(&circulant(&circulant_signed_vector(n)))?;
    Ok((d1 == Integer::from((n - 1) / 2), d2 == Integer::from(-1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows)
    }

    #[test]
    fn det_small() {
        assert_eq!(det(&IntMatrix::identity(3)).unwrap(), Integer::ONE);
        assert_eq!(det(&m(&[&[0, 1], &[1, 0]])).unwrap(), Integer::from(-1));
        assert_eq!(det(&m(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]])).unwrap(), Integer::from(6));
        assert!(det(&IntMatrix::zeros(2, 3)).is_err());
        assert_eq!(det(&m(&[&[1, 2], &[2, 4]])).unwrap(), Integer::ZERO);
    }

    #[test]
    fn snf_examples() {
        let r = snf(&m(&[&[2, 0], &[0, 3]]));
        assert_eq!(r.d, m(&[&[1, 0], &[0, 6]]));
        let r = snf(&m(&[&[4, 6]]));
        assert_eq!(r.d, m(&[&[2, 0]]));
        assert_eq!(r.u.mm(&m(&[&[4, 6]])).mm(&r.v), r.d);
        let r = snf(&IntMatrix::identity(3));
        assert_eq!(r.d, IntMatrix::identity(3));
    }

    #[test]
    fn hnf_examples() {
        let h = hnf_column_span(&m(&[&[2, 0, 1], &[0, 2, 1]]));
        // {(x, y): x + y even} has basis (2, 0), (1, 1) in this normal form
        assert_eq!(h, m(&[&[2, 1], &[0, 1]]));
        assert_eq!(hnf_column_span(&m(&[&[2, 3]])), m(&[&[1]]));
        assert_eq!(hnf_column_span(&IntMatrix::identity(3)), IntMatrix::identity(3));
    }

    #[test]
    fn kernel_and_solve_examples() {
        let k = kernel_basis(&m(&[&[1, 1]]));
        assert_eq!(k.cols(), 1);
        assert!(k == m(&[&[1], &[-1]]) || k == m(&[&[-1], &[1]]));
        assert_eq!(kernel_basis(&IntMatrix::identity(3)).cols(), 0);
        assert_eq!(kernel_basis(&IntMatrix::zeros(2, 2)), IntMatrix::identity(2));
        assert_eq!(solve_integer(&m(&[&[2]]), &m(&[&[4]])).unwrap(), Some(m(&[&[2]])));
        assert_eq!(solve_integer(&m(&[&[2]]), &m(&[&[3]])).unwrap(), None);
        assert_eq!(
            solve_integer(&m(&[&[2, 0], &[0, 3]]), &m(&[&[4], &[9]])).unwrap(),
            Some(m(&[&[2], &[3]]))
        );
    }

    #[test]
    fn cokernel_examples() {
        assert_eq!(cokernel_invariants(&m(&[&[2]])), AbelianInvariants::cyclic(2));
        assert!(cokernel_invariants(&IntMatrix::identity(2)).is_trivial());
        let g = cokernel_invariants(&m(&[&[2, 0], &[0, 6]]));
        assert_eq!(g.factors, vec![Integer::from(2), Integer::from(6)]);
        assert_eq!(g.to_string(), "Z/2 + Z/6");
        let g = cokernel_invariants(&m(&[&[2], &[0]]));
        assert_eq!(g.to_string(), "Z/2 + Z");
    }

    #[test]
    fn circulant_examples() {
        let i3 = circulant(&[1, 0, 0].map(Integer::from));
        assert_eq!(i3, IntMatrix::identity(3));
        let p = circulant(&[0, 1, 0].map(Integer::from));
        assert_eq!(p, m(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]));
        let c = circulant(&[1, 1, 0, 0, 0].map(Integer::from));
        assert_eq!(det(&c).unwrap(), Integer::from(2));
        assert_eq!(circulant_signed_vector(3), vec![Integer::from(-1), Integer::ZERO, Integer::ZERO]);
        assert_eq!(circulant_closed_forms(3).unwrap(), (true, true));
        assert!(circulant_closed_forms(4).is_err());
    }
}
