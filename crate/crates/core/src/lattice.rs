//! Exact integer and rational lattice linear algebra.
//!
//! Everything in this crate runs on arbitrary-precision integers (`Int`) and
//! rationals (`Rat`); there is no floating point anywhere. This module holds
//! the shared kernels: primitive vectors, Gaussian elimination over ℚ, Smith
//! and Hermite normal forms over ℤ, integral linear solvers and quotient
//! lattices N → N/N_τ.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Int = num_bigint::BigInt;
pub type Rat = num_rational::BigRational;

/// A point of the lattice N ≅ ℤⁿ (or of the dual lattice M).
pub type LatticeVector = Vec<Int>;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn vec_i(coords: &[i64]) -> LatticeVector {
    coords.iter().map(|&c| Int::from(c)).collect()
}

pub fn to_rat_vec(v: &[Int]) -> Vec<Rat> {
    v.iter().map(|c| Rat::from_integer(c.clone())).collect()
}

pub fn is_zero_vec(v: &[Int]) -> bool {
    v.iter().all(|c| c.is_zero())
}

pub fn is_zero_rat_vec(v: &[Rat]) -> bool {
    v.iter().all(|c| c.is_zero())
}

pub fn dot(a: &[Int], b: &[Int]) -> Int {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_rat(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_int_rat(a: &[Int], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| Rat::from_integer(x.clone()) * y).sum()
}

pub fn add_vec(a: &[Int], b: &[Int]) -> LatticeVector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Int], b: &[Int]) -> LatticeVector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn neg_vec(a: &[Int]) -> LatticeVector {
    a.iter().map(|x| -x).collect()
}

pub fn scale_vec(c: &Int, a: &[Int]) -> LatticeVector {
    a.iter().map(|x| c * x).collect()
}

pub fn gcd_of(v: &[Int]) -> Int {
    v.iter().fold(Int::zero(), |g, c| g.gcd(c))
}

/// Divides a nonzero vector by the gcd of its coordinates.
///
/// The result has coordinate gcd 1 and spans the same ray.
pub fn primitive(v: &[Int]) -> Result<LatticeVector> {
    let g = gcd_of(v);
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(v.iter().map(|c| c / &g).collect())
}

/// Clears denominators of a nonzero rational vector and divides by the gcd,
/// preserving the direction.
pub fn primitive_of_rat(v: &[Rat]) -> Result<LatticeVector> {
    let lcm = v
        .iter()
        .fold(Int::one(), |l, c| l.lcm(c.denom()));
    let ints: Vec<Int> = v
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    primitive(&ints)
}

// ---------------------------------------------------------------------------
// Rational Gaussian elimination
// ---------------------------------------------------------------------------

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(rows: &mut [Vec<Rat>]) -> Vec<usize> {
    let m = rows.len();
    if m == 0 {
        return vec![];
    }
    let n = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..n {
                    let t = &rows[r][j] * &f;
                    rows[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m {
            break;
        }
    }
    pivots
}

pub fn rank_rat(rows: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    rref(&mut m).len()
}

pub fn rank_int(rows: &[Vec<Int>]) -> usize {
    let m: Vec<Vec<Rat>> = rows.iter().map(|r| to_rat_vec(r)).collect();
    rank_rat(&m)
}

/// Basis of the rational null space {x : R·x = 0} of the row functionals.
pub fn kernel_rat(rows: &[Vec<Rat>], n: usize) -> Vec<Vec<Rat>> {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let pivots = rref(&mut m);
    let pivot_set: Vec<usize> = pivots.clone();
    let mut basis = Vec::new();
    for free in 0..n {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![Rat::zero(); n];
        v[free] = Rat::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Solves R·x = b over ℚ. Returns a particular solution (free variables set
/// to zero), or `None` when the system is inconsistent.
pub fn solve_rat(rows: &[Vec<Rat>], b: &[Rat], n: usize) -> Option<Vec<Rat>> {
    let mut m: Vec<Vec<Rat>> = rows
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut row = r.clone();
            row.push(bi.clone());
            row
        })
        .collect();
    let pivots = rref(&mut m);
    // A pivot in the augmented column means the system is inconsistent.
    if pivots.contains(&n) {
        return None;
    }
    let mut x = vec![Rat::zero(); n];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = m[r][n].clone();
    }
    Some(x)
}

// ---------------------------------------------------------------------------
// Smith normal form
// ---------------------------------------------------------------------------

/// Smith normal form `U · A · V = S` with `U`, `V` unimodular and `S`
/// diagonal with nonnegative entries satisfying s₁ | s₂ | … .
pub struct Smith {
    pub u: Vec<Vec<Int>>,
    pub u_inv: Vec<Vec<Int>>,
    pub v: Vec<Vec<Int>>,
    /// Diagonal of S, including trailing zeros, length min(m, n).
    pub diag: Vec<Int>,
    pub rows: usize,
    pub cols: usize,
}

impl Smith {
    pub fn rank(&self) -> usize {
        self.diag.iter().filter(|d| !d.is_zero()).count()
    }
}

fn identity(n: usize) -> Vec<Vec<Int>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Int::one() } else { Int::zero() })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &[Vec<Int>], b: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let n = b[0].len();
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| row.iter().zip(b).map(|(x, br)| x * &br[j]).sum())
                .collect()
        })
        .collect()
}

pub fn mat_apply(a: &[Vec<Int>], x: &[Int]) -> Vec<Int> {
    a.iter().map(|row| dot(row, x)).collect()
}

pub fn mat_transpose(a: &[Vec<Int>]) -> Vec<Vec<Int>> {
    if a.is_empty() {
        return vec![];
    }
    let n = a[0].len();
    (0..n)
        .map(|j| a.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// Computes the Smith normal form of an integer matrix.
pub fn smith(a: &[Vec<Int>], rows: usize, cols: usize) -> Smith {
    let mut s: Vec<Vec<Int>> = if rows == 0 {
        vec![]
    } else {
        a.to_vec()
    };
    let mut u = identity(rows);
    let mut u_inv = identity(rows);
    let mut v = identity(cols);

    // Row op: row i += f * row j  (on S and U; inverse op on U_inv columns).
    // For U_inv we use U_inv ← U_inv · L⁻¹, i.e. column j -= f * column i.
    fn row_add(s: &mut [Vec<Int>], u: &mut [Vec<Int>], u_inv: &mut [Vec<Int>], i: usize, j: usize, f: &Int) {
        for x in 0..s[j].len() {
            let t = &s[j][x] * f;
            s[i][x] += t;
        }
        for x in 0..u[j].len() {
            let t = &u[j][x] * f;
            u[i][x] += t;
        }
        for r in u_inv.iter_mut() {
            let t = &r[i] * f;
            r[j] -= t;
        }
    }
    fn row_swap(s: &mut [Vec<Int>], u: &mut [Vec<Int>], u_inv: &mut [Vec<Int>], i: usize, j: usize) {
        s.swap(i, j);
        u.swap(i, j);
        for r in u_inv.iter_mut() {
            r.swap(i, j);
        }
    }
    fn row_neg(s: &mut [Vec<Int>], u: &mut [Vec<Int>], u_inv: &mut [Vec<Int>], i: usize) {
        for x in s[i].iter_mut() {
            *x = -x.clone();
        }
        for x in u[i].iter_mut() {
            *x = -x.clone();
        }
        for r in u_inv.iter_mut() {
            r[i] = -r[i].clone();
        }
    }
    fn col_add(s: &mut [Vec<Int>], v: &mut [Vec<Int>], i: usize, j: usize, f: &Int) {
        // column i += f * column j
        for r in s.iter_mut() {
            let t = &r[j] * f;
            r[i] += t;
        }
        for r in v.iter_mut() {
            let t = &r[j] * f;
            r[i] += t;
        }
    }
    fn col_swap(s: &mut [Vec<Int>], v: &mut [Vec<Int>], i: usize, j: usize) {
        for r in s.iter_mut() {
            r.swap(i, j);
        }
        for r in v.iter_mut() {
            r.swap(i, j);
        }
    }
    fn col_neg(s: &mut [Vec<Int>], v: &mut [Vec<Int>], i: usize) {
        for r in s.iter_mut() {
            r[i] = -r[i].clone();
        }
        for r in v.iter_mut() {
            r[i] = -r[i].clone();
        }
    }

    let k = rows.min(cols);
    let mut t = 0;
    while t < k {
        // Pivot: nonzero entry of smallest absolute value in the remaining block.
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !s[i][j].is_zero() {
                    let better = match pivot {
                        None => true,
                        Some((pi, pj)) => s[i][j].abs() < s[pi][pj].abs(),
                    };
                    if better {
                        pivot = Some((i, j));
                    }
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        row_swap(&mut s, &mut u, &mut u_inv, t, pi);
        col_swap(&mut s, &mut v, t, pj);
        if s[t][t].is_negative() {
            row_neg(&mut s, &mut u, &mut u_inv, t);
        }
        // Reduce the rest of the column and row.
        let mut clean = true;
        for i in (t + 1)..rows {
            if !s[i][t].is_zero() {
                let q = s[i][t].div_floor(&s[t][t]);
                row_add(&mut s, &mut u, &mut u_inv, i, t, &-q);
                if !s[i][t].is_zero() {
                    clean = false;
                }
            }
        }
        for j in (t + 1)..cols {
            if !s[t][j].is_zero() {
                let q = s[t][j].div_floor(&s[t][t]);
                col_add(&mut s, &mut v, j, t, &-q);
                if !s[t][j].is_zero() {
                    clean = false;
                }
            }
        }
        if !clean {
            continue; // a smaller remainder appeared; pick a new pivot
        }
        // Divisibility: the pivot must divide every remaining entry.
        let mut fixed = false;
        'outer: for i in (t + 1)..rows {
            for j in (t + 1)..cols {
                if !(&s[i][j] % &s[t][t]).is_zero() {
                    row_add(&mut s, &mut u, &mut u_inv, t, i, &Int::one());
                    fixed = true;
                    break 'outer;
                }
            }
        }
        if fixed {
            continue;
        }
        t += 1;
    }

    let diag: Vec<Int> = (0..k).map(|i| s[i][i].clone()).collect();
    Smith {
        u,
        u_inv,
        v,
        diag,
        rows,
        cols,
    }
}

/// Solves A·x = b over ℤ. Returns a particular solution together with a
/// basis of the integral kernel lattice, or `None` when no integral solution
/// exists.
pub fn solve_int(a: &[Vec<Int>], b: &[Int]) -> Option<(Vec<Int>, Vec<Vec<Int>>)> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    if rows == 0 {
        return Some((vec![], vec![]));
    }
    let snf = smith(a, rows, cols);
    let ub = mat_apply(&snf.u, b);
    let r = snf.rank();
    let mut y = vec![Int::zero(); cols];
    for i in 0..rows {
        if i < r {
            let (q, rem) = ub[i].div_rem(&snf.diag[i]);
            if !rem.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !ub[i].is_zero() {
            return None;
        }
    }
    let vt = mat_transpose(&snf.v);
    let x = mat_apply(&snf.v, &y);
    let kernel: Vec<Vec<Int>> = (r..cols).map(|j| vt[j].clone()).collect();
    Some((x, kernel))
}

/// Basis of the saturated integral kernel lattice {x ∈ ℤⁿ : A·x = 0}.
pub fn kernel_int(a: &[Vec<Int>], n: usize) -> Vec<Vec<Int>> {
    if a.is_empty() {
        return identity(n);
    }
    let snf = smith(a, a.len(), n);
    let vt = mat_transpose(&snf.v);
    (snf.rank()..n).map(|j| vt[j].clone()).collect()
}

// ---------------------------------------------------------------------------
// Hermite normal form
// ---------------------------------------------------------------------------

/// Row-style Hermite normal form of the lattice spanned by the input rows:
/// pivot entries positive, entries above a pivot reduced into [0, pivot).
/// Zero rows are dropped.
pub fn hnf_rows(rows_in: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let mut rows: Vec<Vec<Int>> = rows_in.iter().filter(|r| !is_zero_vec(r)).cloned().collect();
    if rows.is_empty() {
        return vec![];
    }
    let n = rows[0].len();
    let mut out: Vec<Vec<Int>> = Vec::new();
    let mut r = 0;
    for c in 0..n {
        // Euclid on column c across rows[r..].
        loop {
            let mut best: Option<usize> = None;
            for i in r..rows.len() {
                if !rows[i][c].is_zero() {
                    let better = match best {
                        None => true,
                        Some(b) => rows[i][c].abs() < rows[b][c].abs(),
                    };
                    if better {
                        best = Some(i);
                    }
                }
            }
            let Some(p) = best else { break };
            rows.swap(r, p);
            if rows[r][c].is_negative() {
                for x in rows[r].iter_mut() {
                    *x = -x.clone();
                }
            }
            let mut done = true;
            for i in (r + 1)..rows.len() {
                if !rows[i][c].is_zero() {
                    let q = rows[i][c].div_floor(&rows[r][c]);
                    for j in 0..n {
                        let t = &rows[r][j] * &q;
                        rows[i][j] -= t;
                    }
                    if !rows[i][c].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                // Reduce earlier pivot rows above this one.
                let pivot = rows[r][c].clone();
                for prev in out.iter_mut() {
                    let q = prev[c].div_floor(&pivot);
                    if !q.is_zero() {
                        for j in 0..n {
                            let t = &rows[r][j] * &q;
                            prev[j] -= t;
                        }
                    }
                }
                out.push(rows[r].clone());
                r += 1;
                break;
            }
        }
        if r == rows.len() {
            break;
        }
    }
    out
}

/// Canonical representative of `v` modulo the lattice spanned by `hnf`
/// (which must be in row HNF): pivot coordinates land in [0, pivot).
pub fn reduce_mod_lattice(v: &[Int], hnf: &[Vec<Int>]) -> Vec<Int> {
    let mut x = v.to_vec();
    for row in hnf {
        let p = row.iter().position(|e| !e.is_zero()).expect("HNF row is nonzero");
        let q = x[p].div_floor(&row[p]);
        if !q.is_zero() {
            for j in 0..x.len() {
                let t = &row[j] * &q;
                x[j] -= t;
            }
        }
    }
    x
}

/// Does `v` lie in the lattice spanned by the rows of `hnf`?
pub fn lattice_contains(hnf: &[Vec<Int>], v: &[Int]) -> bool {
    is_zero_vec(&reduce_mod_lattice(v, hnf))
}

// ---------------------------------------------------------------------------
// Quotient lattices
// ---------------------------------------------------------------------------

/// The quotient N → N/N_τ by the saturated sublattice N_τ spanned by a set
/// of integer vectors, presented by an integral surjection onto ℤ^(n−d).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientLattice {
    ambient_rank: usize,
    /// Basis of the saturated sublattice N_τ (d rows).
    sublattice: Vec<Vec<Int>>,
    /// Projection matrix, (n−d) × n, surjective with kernel N_τ.
    projection: Vec<Vec<Int>>,
    /// Integral section of the projection: n × (n−d), projection·section = id.
    section: Vec<Vec<Int>>,
}

impl QuotientLattice {
    /// Quotient by the saturation of the span of `generators`.
    pub fn by_span(generators: &[Vec<Int>], rank: usize) -> QuotientLattice {
        // Columns of B are the generators.
        let cols = generators.len();
        if cols == 0 {
            return QuotientLattice {
                ambient_rank: rank,
                sublattice: vec![],
                projection: identity(rank),
                section: identity(rank),
            };
        }
        let b: Vec<Vec<Int>> = (0..rank)
            .map(|i| generators.iter().map(|g| g[i].clone()).collect())
            .collect();
        let snf = smith(&b, rank, cols);
        let r = snf.rank();
        // Saturated sublattice: first r columns of U⁻¹; projection: last
        // n−r rows of U. Both are then put in row HNF so the presentation is
        // canonical (HNF is reached by unimodular row operations, which do
        // not change the sublattice or the quotient map up to GL(ℤ)).
        let u_inv_t = mat_transpose(&snf.u_inv);
        let sublattice = hnf_rows(&(0..r).map(|j| u_inv_t[j].clone()).collect::<Vec<_>>());
        let projection = hnf_rows(&(r..rank).map(|i| snf.u[i].clone()).collect::<Vec<_>>());
        // Integral section: solve projection · s_j = e_j column by column.
        let q_rank = projection.len();
        let mut section_cols: Vec<Vec<Int>> = Vec::with_capacity(q_rank);
        for j in 0..q_rank {
            let mut e = vec![Int::zero(); q_rank];
            e[j] = Int::one();
            let (s, _) = solve_int(&projection, &e)
                .expect("canonical projection stays surjective");
            section_cols.push(s);
        }
        let section: Vec<Vec<Int>> = (0..rank)
            .map(|i| section_cols.iter().map(|c| c[i].clone()).collect())
            .collect();
        QuotientLattice {
            ambient_rank: rank,
            sublattice,
            projection,
            section,
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    /// Rank of the quotient lattice N/N_τ.
    pub fn quotient_rank(&self) -> usize {
        self.projection.len()
    }

    pub fn sublattice_basis(&self) -> &[Vec<Int>] {
        &self.sublattice
    }

    pub fn projection_matrix(&self) -> &[Vec<Int>] {
        &self.projection
    }

    pub fn project(&self, v: &[Int]) -> Vec<Int> {
        mat_apply(&self.projection, v)
    }

    pub fn project_rat(&self, v: &[Rat]) -> Vec<Rat> {
        self.projection
            .iter()
            .map(|row| dot_int_rat(row, v))
            .collect()
    }

    /// An integral preimage of a quotient vector.
    pub fn lift(&self, q: &[Int]) -> Vec<Int> {
        self.section
            .iter()
            .map(|row| dot(row, q))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat_i(rows: &[&[i64]]) -> Vec<Vec<Int>> {
        rows.iter().map(|r| vec_i(r)).collect()
    }

    #[test]
    fn primitive_divides_by_gcd() {
        assert_eq!(primitive(&vec_i(&[2, 4, 6])).unwrap(), vec_i(&[1, 2, 3]));
        assert_eq!(primitive(&vec_i(&[-3, 6])).unwrap(), vec_i(&[-1, 2]));
        assert_eq!(primitive(&vec_i(&[0, 0, 0])), Err(Error::ZeroVector));
    }

    #[test]
    fn smith_props() {
        let cases = [
            mat_i(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]),
            mat_i(&[&[1, 0], &[1, 2]]),
            mat_i(&[&[0, 0], &[0, 0]]),
            mat_i(&[&[0], &[0], &[1]]),
            mat_i(&[&[6, 10, 15]]),
        ];
        for a in cases {
            let rows = a.len();
            let cols = a[0].len();
            let snf = smith(&a, rows, cols);
            // U·A·V = diag
            let uav = mat_mul(&mat_mul(&snf.u, &a), &snf.v);
            for i in 0..rows {
                for j in 0..cols {
                    let expect = if i == j && i < snf.diag.len() {
                        snf.diag[i].clone()
                    } else {
                        Int::zero()
                    };
                    assert_eq!(uav[i][j], expect, "at ({i},{j})");
                }
            }
            // U · U⁻¹ = id
            let id = mat_mul(&snf.u, &snf.u_inv);
            for i in 0..rows {
                for j in 0..rows {
                    assert_eq!(id[i][j], if i == j { Int::one() } else { Int::zero() });
                }
            }
            // divisibility chain
            for w in snf.diag.windows(2) {
                if !w[1].is_zero() {
                    assert!(!w[0].is_zero());
                    assert!((&w[1] % &w[0]).is_zero());
                }
            }
        }
    }

    #[test]
    fn smith_classic_example() {
        // diag of SNF of [[2,4,4],[-6,6,12],[10,4,16]] is (2, 2, 156).
        let a = mat_i(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]);
        let snf = smith(&a, 3, 3);
        assert_eq!(snf.diag, vec_i(&[2, 2, 156]));
    }

    #[test]
    fn solve_int_works() {
        let a = mat_i(&[&[1, 2], &[3, 4]]);
        let (x, k) = solve_int(&a, &vec_i(&[5, 11])).unwrap();
        assert_eq!(x, vec_i(&[1, 2]));
        assert!(k.is_empty());

        // 2x = 3 has no integral solution
        let a = mat_i(&[&[2]]);
        assert!(solve_int(&a, &vec_i(&[3])).is_none());

        // underdetermined: x + 2y = 3
        let a = mat_i(&[&[1, 2]]);
        let (x, k) = solve_int(&a, &vec_i(&[3])).unwrap();
        assert_eq!(dot(&a[0], &x), int(3));
        assert_eq!(k.len(), 1);
        assert_eq!(dot(&a[0], &k[0]), int(0));
    }

    #[test]
    fn hnf_and_reduction() {
        let h = hnf_rows(&mat_i(&[&[2, 3, 1], &[4, 6, 2], &[1, 1, 1]]));
        // pivots positive, echelon
        assert_eq!(h.len(), 2);
        for row in &h {
            let p = row.iter().position(|e| !e.is_zero()).unwrap();
            assert!(row[p].is_positive());
        }
        // membership
        assert!(lattice_contains(&h, &vec_i(&[2, 3, 1])));
        assert!(lattice_contains(&h, &vec_i(&[3, 4, 2])));
        assert!(!lattice_contains(&h, &vec_i(&[0, 0, 1])));
        // reduction idempotent
        let v = vec_i(&[7, -5, 3]);
        let r1 = reduce_mod_lattice(&v, &h);
        let r2 = reduce_mod_lattice(&r1, &h);
        assert_eq!(r1, r2);
    }

    #[test]
    fn quotient_by_coordinate_ray() {
        // N = ℤ³, τ spanned by e₃: projection must kill e₃ and restrict to an
        // isomorphism on ⟨e₁, e₂⟩.
        let q = QuotientLattice::by_span(&[vec_i(&[0, 0, 1])], 3);
        assert_eq!(q.quotient_rank(), 2);
        assert!(is_zero_vec(&q.project(&vec_i(&[0, 0, 1]))));
        let p1 = q.project(&vec_i(&[1, 0, 0]));
        let p2 = q.project(&vec_i(&[0, 1, 0]));
        // p1, p2 must form a ℤ-basis of ℤ².
        let m = vec![p1.clone(), p2.clone()];
        let snf = smith(&m, 2, 2);
        assert_eq!(snf.diag, vec_i(&[1, 1]));
        assert_eq!(p1, vec_i(&[1, 0]));
    }

    #[test]
    fn quotient_by_diagonal_ray() {
        // τ spanned by (1,1) in ℤ²: projection is ±(x − y).
        let q = QuotientLattice::by_span(&[vec_i(&[1, 1])], 2);
        assert_eq!(q.quotient_rank(), 1);
        assert!(is_zero_vec(&q.project(&vec_i(&[1, 1]))));
        let img = q.project(&vec_i(&[1, 0]));
        assert_eq!(img[0].abs(), int(1));
        let e1 = q.project(&vec_i(&[1, 0]));
        let e2 = q.project(&vec_i(&[0, 1]));
        assert_eq!(e1[0], -e2[0].clone());
    }

    #[test]
    fn quotient_by_zero_cone_is_identity() {
        let q = QuotientLattice::by_span(&[], 2);
        assert_eq!(q.quotient_rank(), 2);
        assert_eq!(q.project(&vec_i(&[3, -4])), vec_i(&[3, -4]));
    }

    #[test]
    fn quotient_saturates() {
        // Span of (2, 0) saturates to ⟨e₁⟩, so the quotient is ℤ (not ℤ ⊕ ℤ/2).
        let q = QuotientLattice::by_span(&[vec_i(&[2, 0])], 2);
        assert_eq!(q.quotient_rank(), 1);
        assert!(is_zero_vec(&q.project(&vec_i(&[1, 0]))));
        assert_eq!(q.project(&vec_i(&[0, 1]))[0].abs(), int(1));
    }

    #[test]
    fn quotient_lift_is_section() {
        let q = QuotientLattice::by_span(&[vec_i(&[1, 0, 1])], 3);
        for v in [vec_i(&[1, 0]), vec_i(&[0, 1]), vec_i(&[3, -2])] {
            assert_eq!(q.project(&q.lift(&v)), v);
        }
    }

    #[test]
    fn rational_solve_and_kernel() {
        let rows = vec![vec![rat(1, 1), rat(2, 1)], vec![rat(2, 1), rat(4, 1)]];
        let x = solve_rat(&rows, &[rat(3, 1), rat(6, 1)], 2).unwrap();
        assert_eq!(
            &x[0] + &x[1] * rat(2, 1),
            rat(3, 1)
        );
        assert!(solve_rat(&rows, &[rat(3, 1), rat(7, 1)], 2).is_none());
        let k = kernel_rat(&rows, 2);
        assert_eq!(k.len(), 1);
        assert!(dot_rat(&rows[0], &k[0]).is_zero());
    }
}
