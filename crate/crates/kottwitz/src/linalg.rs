//! Exact linear algebra over `Q` and `Z`: dense Gaussian elimination and
//! Smith normal form with unimodular transform tracking.

use num::{BigInt, BigRational, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Solves `A x = b` exactly. `a` is row-major, `m` rows by `n` columns.
/// Returns a particular solution with free variables set to zero, or `None`
/// if the system is inconsistent.
pub fn solve_exact(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let m = a.len();
    assert_eq!(m, b.len(), "matrix/vector size mismatch");
    let n = if m == 0 { 0 } else { a[0].len() };
    let mut aug: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), n, "ragged matrix");
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m).find(|&i| !aug[i][c].is_zero()) else {
            continue;
        };
        aug.swap(r, p);
        let inv = aug[r][c].clone();
        for x in aug[r].iter_mut() {
            *x = &*x / &inv;
        }
        for i in 0..m {
            if i != r && !aug[i][c].is_zero() {
                let f = aug[i][c].clone();
                for j in c..=n {
                    let t = &aug[r][j] * &f;
                    aug[i][j] = &aug[i][j] - t;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == m {
            break;
        }
    }
    if aug.iter().skip(r).any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut x = vec![Rat::zero(); n];
    for (i, &c) in pivot_cols.iter().enumerate() {
        x[c] = aug[i][n].clone();
    }
    Some(x)
}

/// Result of a Smith normal form computation `U A V = S`.
///
/// Only the row transform is kept: `u` and its inverse `uinv`, plus the
/// diagonal of `S` padded with zeros to the number of rows. That is enough
/// to present the cokernel `Z^m / col-span(A)`.
pub struct Snf {
    pub diag: Vec<Int>,
    pub u: Vec<Vec<Int>>,
    pub uinv: Vec<Vec<Int>>,
}

pub fn identity_int(n: usize) -> Vec<Vec<Int>> {
    (0..n)
        .map(|i| (0..n).map(|j| Int::from((i == j) as i64)).collect())
        .collect()
}

pub fn smith_normal_form(a: &[Vec<Int>]) -> Snf {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    let mut s: Vec<Vec<Int>> = a.to_vec();
    for row in &s {
        assert_eq!(row.len(), n, "ragged matrix");
    }
    let mut u = identity_int(m);
    let mut uinv = identity_int(m);

    // Row op helpers keep U and U^-1 in sync: each op R gives U <- R U and
    // U^-1 <- U^-1 R^-1.
    fn swap_rows(s: &mut [Vec<Int>], u: &mut [Vec<Int>], uinv: &mut [Vec<Int>], i: usize, j: usize) {
        s.swap(i, j);
        u.swap(i, j);
        for row in uinv.iter_mut() {
            row.swap(i, j);
        }
    }
    fn add_row(s: &mut [Vec<Int>], u: &mut [Vec<Int>], uinv: &mut [Vec<Int>], i: usize, j: usize, k: &Int) {
        // row_i += k * row_j
        for c in 0..s[i].len() {
            let t = &s[j][c] * k;
            s[i][c] += t;
        }
        for c in 0..u[i].len() {
            let t = &u[j][c] * k;
            u[i][c] += t;
        }
        for row in uinv.iter_mut() {
            let t = &row[i] * k;
            row[j] -= t;
        }
    }
    fn negate_row(s: &mut [Vec<Int>], u: &mut [Vec<Int>], uinv: &mut [Vec<Int>], i: usize) {
        for x in s[i].iter_mut() {
            *x = -x.clone();
        }
        for x in u[i].iter_mut() {
            *x = -x.clone();
        }
        for row in uinv.iter_mut() {
            row[i] = -row[i].clone();
        }
    }
    fn swap_cols(s: &mut [Vec<Int>], i: usize, j: usize) {
        for row in s.iter_mut() {
            row.swap(i, j);
        }
    }
    fn add_col(s: &mut [Vec<Int>], i: usize, j: usize, k: &Int) {
        // col_i += k * col_j
        for row in s.iter_mut() {
            let t = &row[j] * k;
            row[i] += t;
        }
    }

    let mut t = 0;
    while t < m && t < n {
        // Locate a pivot of minimal absolute value in the remaining block.
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if !s[i][j].is_zero()
                    && pivot
                        .map(|(pi, pj)| s[i][j].abs() < s[pi][pj].abs())
                        .unwrap_or(true)
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        swap_rows(&mut s, &mut u, &mut uinv, t, pi);
        swap_cols(&mut s, t, pj);

        // Clear row and column t; restart whenever a remainder shrinks the pivot.
        loop {
            let mut clean = true;
            for i in t + 1..m {
                if !s[i][t].is_zero() {
                    let q = div_round(&s[i][t], &s[t][t]);
                    add_row(&mut s, &mut u, &mut uinv, i, t, &(-q));
                    if !s[i][t].is_zero() {
                        swap_rows(&mut s, &mut u, &mut uinv, t, i);
                        clean = false;
                    }
                }
            }
            for j in t + 1..n {
                if !s[t][j].is_zero() {
                    let q = div_round(&s[t][j], &s[t][t]);
                    add_col(&mut s, j, t, &(-q));
                    if !s[t][j].is_zero() {
                        swap_cols(&mut s, t, j);
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }

        // Enforce divisibility of every remaining entry by the pivot.
        let mut fixed = false;
        'outer: for i in t + 1..m {
            for j in t + 1..n {
                if !(&s[i][j] % &s[t][t]).is_zero() {
                    add_row(&mut s, &mut u, &mut uinv, t, i, &Int::from(1));
                    fixed = true;
                    break 'outer;
                }
            }
        }
        if fixed {
            continue;
        }
        if s[t][t].is_negative() {
            negate_row(&mut s, &mut u, &mut uinv, t);
        }
        t += 1;
    }

    let diag = (0..m)
        .map(|i| if i < n { s[i][i].clone() } else { Int::zero() })
        .collect();
    Snf { diag, u, uinv }
}

fn div_round(a: &Int, b: &Int) -> Int {
    // Quotient minimizing |a - q b|, so remainders strictly shrink.
    let (q, r) = num::Integer::div_rem(a, b);
    if &r.abs() * 2 > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

pub fn mat_vec_int(m: &[Vec<Int>], v: &[Int]) -> Vec<Int> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn mat_vec_rat_int(m: &[Vec<Int>], v: &[Rat]) -> Vec<Rat> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .map(|(a, b)| Rat::from_integer(a.clone()) * b)
                .sum()
        })
        .collect()
}

pub fn mat_mul_int(a: &[Vec<Int>], b: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let n = if a.is_empty() { 0 } else { a[0].len() };
    assert_eq!(n, b.len());
    let cols = if b.is_empty() { 0 } else { b[0].len() };
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| row.iter().zip(b).map(|(x, br)| x * &br[j]).sum())
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_mat(rows: &[&[i64]]) -> Vec<Vec<Int>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| Int::from(x)).collect())
            .collect()
    }

    #[test]
    fn solve_unique() {
        let a = vec![vec![rat(2), rat(1)], vec![rat(1), rat(-1)]];
        let b = vec![rat(4), rat(-1)];
        let x = solve_exact(&a, &b).unwrap();
        assert_eq!(x, vec![rat(1), rat(2)]);
    }

    #[test]
    fn solve_inconsistent() {
        let a = vec![vec![rat(1), rat(1)], vec![rat(2), rat(2)]];
        assert!(solve_exact(&a, &[rat(1), rat(3)]).is_none());
    }

    #[test]
    fn solve_underdetermined() {
        let a = vec![vec![rat(1), rat(1), rat(0)]];
        let x = solve_exact(&a, &[rat(5)]).unwrap();
        let lhs: Rat = a[0].iter().zip(&x).map(|(c, v)| c * v).sum();
        assert_eq!(lhs, rat(5));
    }

    #[test]
    fn snf_transforms_consistent() {
        let a = int_mat(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]);
        let snf = smith_normal_form(&a);
        assert_eq!(
            snf.diag,
            vec![Int::from(2), Int::from(2), Int::from(156)]
        );
        let id = mat_mul_int(&snf.u, &snf.uinv);
        assert_eq!(id, identity_int(3));
        // U*A has column span equal to diag lattice: check det magnitude.
        let ua = mat_mul_int(&snf.u, &a);
        let det = |m: &Vec<Vec<Int>>| -> Int {
            let [a, b, c] = [&m[0][0], &m[0][1], &m[0][2]];
            let [d, e, f] = [&m[1][0], &m[1][1], &m[1][2]];
            let [g, h, i] = [&m[2][0], &m[2][1], &m[2][2]];
            a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
        };
        assert_eq!(det(&ua).abs(), Int::from(2 * 2 * 156));
    }

    #[test]
    fn snf_rectangular_and_divisibility() {
        let a = int_mat(&[&[2, 0], &[0, 3], &[0, 0]]);
        let snf = smith_normal_form(&a);
        assert_eq!(snf.diag, vec![Int::from(1), Int::from(6), Int::zero()]);
    }

    #[test]
    fn div_round_minimizes() {
        for a in -20i64..=20 {
            for b in [-7i64, -3, 2, 5] {
                let q = div_round(&Int::from(a), &Int::from(b));
                let r = Int::from(a) - &q * Int::from(b);
                assert!(&r.abs() * 2 <= Int::from(b).abs(), "a={a} b={b}");
            }
        }
    }
}
