//! Integer elimination on unit pivots for large, sparse systems.
//!
//! Rows are added one at a time. Whenever a reduced row has a coefficient of
//! +1 or -1 on some variable, that variable is eliminated exactly over Z and
//! recorded as a substitution in terms of the remaining variables. Rows with
//! no unit coefficient are kept aside and retried; whatever is left at the
//! end is a small dense system that is settled by Smith form.

use crate::int::Integer;
use crate::linalg::{dense_kernel, dense_solve};
use crate::matrix::IntMatrix;

pub(crate) type SparseVec = Vec<(usize, Integer)>;

/// Equations are `sum_i coef_i * z_i = 0` where `z = (x_0..x_{nvars}, p_0..p_{nparams})`.
/// Parameters are never eliminated; they stand for right-hand-side columns.
pub(crate) struct Eliminator {
    nvars: usize,
    nparams: usize,
    subs: Vec<Option<SparseVec>>,
    users: Vec<Vec<usize>>,
    hard: Vec<SparseVec>,
    inconsistent: bool,
    eliminated: usize,
    acc: Vec<Integer>,
    touched: Vec<usize>,
    mark: Vec<bool>,
}

pub(crate) struct Reduced {
    nvars: usize,
    nparams: usize,
    subs: Vec<Option<SparseVec>>,
    free: Vec<usize>,
    hard: Vec<SparseVec>,
    inconsistent: bool,
}

impl Eliminator {
    pub(crate) fn new(nvars: usize, nparams: usize) -> Eliminator {
        let total = nvars + nparams;
        Eliminator {
            nvars,
            nparams,
            subs: vec![None; nvars],
            users: vec![Vec::new(); nvars],
            hard: Vec::new(),
            inconsistent: false,
            eliminated: 0,
            acc: vec![Integer::ZERO; total],
            touched: Vec::new(),
            mark: vec![false; total],
        }
    }

    fn reduce(&mut self, row: &[(usize, Integer)]) -> SparseVec {
        for (i, v) in row {
            if v.is_zero() {
                continue;
            }
            match self.subs.get(*i).and_then(|s| s.as_ref()) {
                Some(sub) => {
                    for (k, s) in sub {
                        if !self.mark[*k] {
                            self.mark[*k] = true;
                            self.touched.push(*k);
                        }
                        self.acc[*k].add_mul(v, s);
                    }
                }
                None => {
                    if !self.mark[*i] {
                        self.mark[*i] = true;
                        self.touched.push(*i);
                    }
                    self.acc[*i] += v;
                }
            }
        }
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &k in &self.touched {
            self.mark[k] = false;
            let v = std::mem::take(&mut self.acc[k]);
            if !v.is_zero() {
                out.push((k, v));
            }
        }
        self.touched.clear();
        out
    }

    pub(crate) fn push_row(&mut self, row: &[(usize, Integer)]) {
        let r = self.reduce(row);
        let nv = self.nvars;
        if r.iter().all(|(i, _)| *i >= nv) {
            if !r.is_empty() {
                self.inconsistent = true;
            }
            return;
        }
        let pivot = r
            .iter()
            .filter(|(i, v)| *i < nv && v.is_unit())
            .min_by_key(|(i, _)| (self.users[*i].len(), std::cmp::Reverse(*i)))
            .map(|(i, v)| (*i, v.clone()));
        let Some((c, u)) = pivot else {
            self.hard.push(r);
            return;
        };
        // x_c = -u * sum_{i != c} v_i z_i, using u^{-1} = u.
        let neg_u = -&u;
        let sub: SparseVec = r
            .into_iter()
            .filter(|(i, _)| *i != c)
            .map(|(i, v)| (i, &neg_u * &v))
            .collect();
        let users = std::mem::take(&mut self.users[c]);
        for d in users {
            let Some(sd) = self.subs[d].take() else { continue };
            match sd.binary_search_by_key(&c, |(i, _)| *i) {
                Ok(pos) => {
                    let k = sd[pos].1.clone();
                    let merged = merge_scaled(&sd, c, &k, &sub);
                    for (i, _) in &merged {
                        if *i < nv && sd.binary_search_by_key(i, |(j, _)| *j).is_err() {
                            self.users[*i].push(d);
                        }
                    }
                    self.subs[d] = Some(merged);
                }
                Err(_) => self.subs[d] = Some(sd),
            }
        }
        for (i, _) in &sub {
            if *i < nv {
                self.users[*i].push(c);
            }
        }
        self.subs[c] = Some(sub);
        self.eliminated += 1;
    }

    pub(crate) fn finish(mut self) -> Reduced {
        loop {
            let before = self.eliminated;
            let rows = std::mem::take(&mut self.hard);
            for r in &rows {
                self.push_row(r);
            }
            if self.eliminated == before {
                break;
            }
        }
        let free = (0..self.nvars).filter(|&i| self.subs[i].is_none()).collect();
        Reduced {
            nvars: self.nvars,
            nparams: self.nparams,
            subs: self.subs,
            free,
            hard: self.hard,
            inconsistent: self.inconsistent,
        }
    }
}

/// `a` with entry `c` removed plus `k * b`.
fn merge_scaled(a: &SparseVec, c: usize, k: &Integer, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ai = a.get(i).map(|x| x.0);
        let bj = b.get(j).map(|x| x.0);
        match (ai, bj) {
            (Some(x), _) if x == c => i += 1,
            (Some(x), Some(y)) if x == y => {
                let mut v = a[i].1.clone();
                v.add_mul(k, &b[j].1);
                if !v.is_zero() {
                    out.push((x, v));
                }
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                out.push(a[i].clone());
                i += 1;
            }
            (Some(_), None) => {
                out.push(a[i].clone());
                i += 1;
            }
            (_, Some(y)) => {
                out.push((y, k * &b[j].1));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

impl Reduced {
    fn hard_dense(&self) -> (IntMatrix, IntMatrix) {
        let pos: std::collections::HashMap<usize, usize> =
            self.free.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let mut hv = IntMatrix::zeros(self.hard.len(), self.free.len());
        let mut hp = IntMatrix::zeros(self.hard.len(), self.nparams);
        for (r, row) in self.hard.iter().enumerate() {
            for (i, v) in row {
                if *i < self.nvars {
                    hv[(r, pos[i])] = v.clone();
                } else {
                    hp[(r, *i - self.nvars)] = v.clone();
                }
            }
        }
        (hv, hp)
    }

    /// Expand values of the free variables (plus a parameter column) to a full solution.
    fn expand(&self, free_vals: &[Integer], param: Option<usize>) -> Vec<Integer> {
        let mut x = vec![Integer::ZERO; self.nvars];
        for (k, &i) in self.free.iter().enumerate() {
            x[i] = free_vals[k].clone();
        }
        for c in 0..self.nvars {
            if let Some(sub) = &self.subs[c] {
                let mut v = Integer::ZERO;
                for (i, s) in sub {
                    if *i < self.nvars {
                        if !x[*i].is_zero() {
                            v.add_mul(s, &x[*i]);
                        }
                    } else if Some(*i - self.nvars) == param {
                        v += s;
                    }
                }
                x[c] = v;
            }
        }
        x
    }

    pub(crate) fn kernel(&self) -> IntMatrix {
        let (hv, _) = self.hard_dense();
        let kb = dense_kernel(&hv);
        let cols: Vec<Vec<Integer>> = (0..kb.cols()).map(|j| self.expand(&kb.column(j), None)).collect();
        IntMatrix::from_columns(self.nvars, &cols)
    }

    /// Solution matrix X (nvars x nparams) or None when some column has no integer solution.
    pub(crate) fn solution(&self) -> Option<IntMatrix> {
        if self.inconsistent {
            return None;
        }
        let (hv, hp) = self.hard_dense();
        let y = dense_solve(&hv, &hp.neg())?;
        let cols: Vec<Vec<Integer>> = (0..self.nparams)
            .map(|j| self.expand(&y.column(j), Some(j)))
            .collect();
        Some(IntMatrix::from_columns(self.nvars, &cols))
    }
}

pub(crate) fn sparse_rows(a: &IntMatrix) -> impl Iterator<Item = SparseVec> + '_ {
    (0..a.rows()).map(move |i| {
        a.row(i)
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(j, v)| (j, v.clone()))
            .collect()
    })
}
