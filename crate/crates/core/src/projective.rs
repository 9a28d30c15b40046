use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::index_set::IndexSet;

/// A linear subspace of F_q^(d+1) in canonical form: a reduced row-echelon
/// basis over the prime field, rows ordered by pivot column. Canonical form
/// gives O(1) equality and hashing; projective dimension is `rank() - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    rows: Vec<Vec<u64>>,
}

impl Subspace {
    pub fn zero() -> Subspace {
        Subspace { rows: Vec::new() }
    }

    /// Number of basis rows (linear dimension).
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// Canonicalizes arbitrary spanning rows into RREF over F_q.
    pub fn from_span(rows: &[Vec<u64>], q: u64) -> Subspace {
        let mut work: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|&x| x % q).collect()).collect();
        rref(&mut work, q);
        Subspace { rows: work }
    }

    /// True iff `self` contains `other` as a subspace, by reducing each of
    /// `other`'s rows against this RREF basis (a rank test, no order matrix).
    pub fn contains_subspace(&self, other: &Subspace, q: u64) -> bool {
        other.rows.iter().all(|r| self.reduces_to_zero(r, q))
    }

    fn reduces_to_zero(&self, row: &[u64], q: u64) -> bool {
        let mut r = row.to_vec();
        for basis in &self.rows {
            let pivot = basis.iter().position(|&x| x != 0).expect("RREF rows are nonzero");
            if r[pivot] != 0 {
                let factor = r[pivot];
                for (x, &b) in r.iter_mut().zip(basis.iter()) {
                    *x = (*x + (q - factor % q) % q * b) % q;
                }
            }
        }
        r.iter().all(|&x| x == 0)
    }

    /// The normalized representatives of the 1-dimensional subspaces below
    /// this one, i.e. the projective points it contains.
    pub fn points(&self, q: u64) -> Vec<Subspace> {
        let r = self.rank();
        let mut out = Vec::new();
        let mut combo = vec![0u64; r];
        loop {
            if combo.iter().any(|&c| c != 0) {
                let width = self.rows[0].len();
                let mut v = vec![0u64; width];
                for (c, row) in combo.iter().zip(&self.rows) {
                    for (x, &y) in v.iter_mut().zip(row.iter()) {
                        *x = (*x + c * y) % q;
                    }
                }
                out.push(Subspace::from_span(&[v], q));
            }
            // next combination in counting order
            let mut i = 0;
            loop {
                if i == r {
                    out.sort();
                    out.dedup();
                    return out;
                }
                combo[i] += 1;
                if combo[i] < q {
                    break;
                }
                combo[i] = 0;
                i += 1;
            }
        }
    }
}

/// In-place reduced row echelon form over F_q (q prime), dropping zero rows.
fn rref(rows: &mut Vec<Vec<u64>>, q: u64) {
    if rows.is_empty() {
        return;
    }
    let width = rows[0].len();
    let mut pivot_row = 0;
    for col in 0..width {
        let Some(src) = (pivot_row..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(pivot_row, src);
        let inv = mod_inverse(rows[pivot_row][col], q);
        for x in rows[pivot_row].iter_mut() {
            *x = *x * inv % q;
        }
        let pivot_values = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == pivot_row || row[col] == 0 {
                continue;
            }
            let factor = row[col];
            for (x, &p) in row.iter_mut().zip(&pivot_values) {
                *x = (*x + q - factor * p % q) % q;
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.truncate(pivot_row);
}

fn mod_inverse(a: u64, q: u64) -> u64 {
    // q is a small prime; Fermat
    mod_pow(a % q, q - 2, q)
}

fn mod_pow(mut base: u64, mut exp: u64, q: u64) -> u64 {
    let mut acc = 1u64;
    base %= q;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % q;
        }
        base = base * base % q;
        exp >>= 1;
    }
    acc
}

pub fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut f = 2;
    while f * f <= q {
        if q.is_multiple_of(f) {
            return false;
        }
        f += 1;
    }
    true
}

/// All subspaces of F_q^width with `rank` basis rows, enumerated as RREF
/// matrices: choose the pivot columns, then fill the free entries in
/// counting order. Deterministic.
pub fn enumerate_subspaces(width: usize, rank: usize, q: u64) -> Vec<Subspace> {
    assert!(rank <= width);
    if rank == 0 {
        return vec![Subspace::zero()];
    }
    let mut out = Vec::new();
    let mut pivots: Vec<usize> = (0..rank).collect();
    loop {
        emit_with_pivots(width, &pivots, q, &mut out);
        // next pivot combination in lexicographic order
        let mut i = rank;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if pivots[i] < width - (rank - i) {
                pivots[i] += 1;
                for j in i + 1..rank {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn emit_with_pivots(width: usize, pivots: &[usize], q: u64, out: &mut Vec<Subspace>) {
    let rank = pivots.len();
    let is_pivot: Vec<bool> = (0..width).map(|c| pivots.contains(&c)).collect();
    // free positions: (row, col) with col right of the row's pivot and not a pivot column
    let mut free: Vec<(usize, usize)> = Vec::new();
    for (r, &p) in pivots.iter().enumerate() {
        free.extend((p + 1..width).filter(|&c| !is_pivot[c]).map(|c| (r, c)));
    }
    let mut values = vec![0u64; free.len()];
    loop {
        let mut rows = vec![vec![0u64; width]; rank];
        for (r, &p) in pivots.iter().enumerate() {
            rows[r][p] = 1;
        }
        for (&(r, c), &v) in free.iter().zip(values.iter()) {
            rows[r][c] = v;
        }
        out.push(Subspace { rows });
        let mut i = 0;
        loop {
            if i == free.len() {
                return;
            }
            values[i] += 1;
            if values[i] < q {
                break;
            }
            values[i] = 0;
            i += 1;
        }
    }
}

/// The lattice of subspaces of the projective space PG(d, q): elements are
/// graded by projective dimension −1..d (linear dimension 0..d+1), atoms are
/// the projective points, labeled 1..n in canonical order.
#[derive(Clone, Debug)]
pub struct ProjectiveLattice {
    d: u32,
    q: u64,
    /// `grades[r]` = subspaces of linear dimension r (projective r − 1).
    grades: Vec<Vec<Subspace>>,
    atom_labels: HashMap<Subspace, u32>,
}

impl ProjectiveLattice {
    /// Enumerates the full lattice. `q` must be prime; refuses when the
    /// closed-form element count exceeds `budget`.
    pub fn build(d: u32, q: u64, budget: u64) -> Result<ProjectiveLattice> {
        use crate::generators::gauss_binomial;
        use num_traits::ToPrimitive;

        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        if d < 1 {
            return Err(Error::InvalidInput("projective dimension must be at least 1".into()));
        }
        let width = (d + 1) as usize;
        let total: u64 = (0..=width)
            .map(|r| {
                gauss_binomial(width as u32, r as u32, q)
                    .to_u64()
                    .unwrap_or(u64::MAX)
            })
            .fold(0u64, |acc, c| acc.saturating_add(c));
        if total > budget {
            return Err(Error::LatticeBudget { size: total, budget });
        }

        let grades: Vec<Vec<Subspace>> =
            (0..=width).map(|r| enumerate_subspaces(width, r, q)).collect();
        let mut atom_labels = HashMap::new();
        for (i, point) in grades[1].iter().enumerate() {
            atom_labels.insert(point.clone(), i as u32 + 1);
        }
        Ok(ProjectiveLattice { d, q, grades, atom_labels })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Number of atoms (projective points), n = [d+1]_q.
    pub fn atom_count(&self) -> u32 {
        self.grades[1].len() as u32
    }

    /// Subspaces of projective dimension `k`, for k in −1..=d.
    pub fn elements_of_dim(&self, k: i32) -> &[Subspace] {
        &self.grades[(k + 1) as usize]
    }

    /// Every lattice element except the zero subspace, in grade order.
    pub fn nonzero_elements(&self) -> impl Iterator<Item = &Subspace> {
        self.grades[1..].iter().flatten()
    }

    pub fn atom_label(&self, point: &Subspace) -> Option<u32> {
        self.atom_labels.get(point).copied()
    }

    /// The atom set At_x = {a : a ≤ x} as labels.
    pub fn atoms_below(&self, x: &Subspace) -> IndexSet {
        x.points(self.q)
            .iter()
            .map(|p| self.atom_labels[p])
            .collect()
    }

    /// Atomistic check: every element is the span (join) of its atoms.
    pub fn is_atomistic(&self) -> bool {
        self.nonzero_elements().all(|x| {
            let pts = x.points(self.q);
            let rows: Vec<Vec<u64>> = pts.iter().map(|p| p.rows()[0].clone()).collect();
            &Subspace::from_span(&rows, self.q) == x
        })
    }
}
