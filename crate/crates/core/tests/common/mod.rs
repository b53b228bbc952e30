//! Independent oracles: Gaussian elimination over the rationals.

#![allow(dead_code)]

use dnlat::{IntMatrix, Integer};
use num_bigint::BigInt;
use num_rational::BigRational;

fn to_q(m: &IntMatrix) -> Vec<Vec<BigRational>> {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|v| BigRational::from_integer(v.to_string().parse::<BigInt>().unwrap()))
                .collect()
        })
        .collect()
}

/// Row echelon form over Q, returning (rank, determinant sign-correct for square input).
fn eliminate(m: &IntMatrix) -> (usize, BigRational) {
    let mut a = to_q(m);
    let (rows, cols) = (m.rows(), m.cols());
    let mut det = BigRational::from_integer(1.into());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| a[i][c] != BigRational::from_integer(0.into())) else {
            det = BigRational::from_integer(0.into());
            continue;
        };
        if p != r {
            a.swap(p, r);
            det = -det;
        }
        let pivot = a[r][c].clone();
        det *= pivot.clone();
        for i in r + 1..rows {
            let f = a[i][c].clone() / pivot.clone();
            for j in c..cols {
                let t = a[r][j].clone() * f.clone();
                a[i][j] -= t;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    (r, det)
}

pub fn rank_q(m: &IntMatrix) -> usize {
    eliminate(m).0
}

pub fn det_q(m: &IntMatrix) -> Integer {
    assert!(m.is_square());
    if m.rows() == 0 {
        return Integer::ONE;
    }
    let (r, d) = eliminate(m);
    if r < m.rows() {
        return Integer::ZERO;
    }
    assert!(d.is_integer());
    d.to_integer().to_string().parse().unwrap()
}
