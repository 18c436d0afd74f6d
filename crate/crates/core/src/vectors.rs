//! Column-vector kernels shared by the matroid operations and the searches.
//!
//! A binary matroid on `n <= 64` elements is handled here as a slice of
//! column words; subsets of the ground set are `u64` masks.

use crate::gf2::{BitMatrix, XorBasis};

#[inline]
pub(crate) fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn rank_of_mask(cols: &[u64], mask: u64) -> usize {
    let mut basis = XorBasis::default();
    bits(mask).filter(|&i| basis.insert(cols[i])).count()
}

pub(crate) fn rank(cols: &[u64]) -> usize {
    rank_of_mask(cols, full_mask(cols.len()))
}

fn ambient_dim(cols: &[u64]) -> usize {
    let all = cols.iter().fold(0, |a, &c| a | c);
    64 - all.leading_zeros() as usize
}

/// Reduced row echelon form of the columns, as columns over `rank` rows.
pub(crate) fn rref(cols: &[u64]) -> (Vec<u64>, usize) {
    let m = BitMatrix::from_columns(ambient_dim(cols), cols);
    let (reduced, pivots) = m.rref();
    (reduced.columns(), pivots.len())
}

/// Contracts element `t`, removing it. A loop is simply removed.
pub(crate) fn contract(cols: &mut Vec<u64>, t: usize) {
    let c = cols.remove(t);
    if c == 0 {
        return;
    }
    let p = c.trailing_zeros();
    let below = (1u64 << p) - 1;
    for v in cols.iter_mut() {
        if (*v >> p) & 1 == 1 {
            *v ^= c;
        }
        *v = (*v & below) | ((*v >> (p + 1)) << p);
    }
}

/// Applies a minor given by masks. Contractions happen before deletions,
/// which gives the same matroid as any other order.
pub(crate) fn minor(cols: &[u64], delete: u64, contract_mask: u64) -> Vec<u64> {
    let mut work = cols.to_vec();
    let mut alive: Vec<usize> = (0..cols.len()).collect();
    for t in bits(contract_mask).collect::<Vec<_>>().into_iter().rev() {
        contract(&mut work, t);
        alive.remove(t);
    }
    alive
        .iter()
        .zip(work)
        .filter(|(&i, _)| (delete >> i) & 1 == 0)
        .map(|(_, c)| c)
        .collect()
}

/// A basis of the cycle space: one fundamental circuit per non-basis element.
pub(crate) fn kernel_basis(cols: &[u64]) -> Vec<u64> {
    let mut lead = [(0u64, 0u64); 64];
    let mut present = 0u64;
    let mut kernel = Vec::new();
    for (i, &c) in cols.iter().enumerate() {
        let mut v = c;
        let mut comb = 1u64 << i;
        loop {
            let live = v & present;
            if live == 0 {
                break;
            }
            let b = 63 - live.leading_zeros() as usize;
            v ^= lead[b].0;
            comb ^= lead[b].1;
        }
        if v == 0 {
            kernel.push(comb);
        } else {
            let b = 63 - v.leading_zeros() as usize;
            lead[b] = (v, comb);
            present |= 1 << b;
        }
    }
    kernel
}

/// All vectors of the span of `basis`, including zero.
pub(crate) fn span(basis: &[u64]) -> Vec<u64> {
    let mut out = Vec::with_capacity(1 << basis.len());
    let mut acc = 0u64;
    out.push(0);
    for g in 1u64..(1u64 << basis.len()) {
        acc ^= basis[g.trailing_zeros() as usize];
        out.push(acc);
    }
    out
}

/// Minimal nonzero supports in a linear code, sorted by size then value.
pub(crate) fn minimal_supports(code: &mut Vec<u64>) -> Vec<u64> {
    code.retain(|&v| v != 0);
    code.sort_unstable_by_key(|&v| (v.count_ones(), v));
    let mut minimal: Vec<u64> = Vec::new();
    for &v in code.iter() {
        if !minimal.iter().any(|&c| c & !v == 0) {
            minimal.push(v);
        }
    }
    minimal
}

/// Circuits of the vector matroid on `cols`.
pub(crate) fn circuits(cols: &[u64]) -> Vec<u64> {
    minimal_supports(&mut span(&kernel_basis(cols)))
}

/// Rows of the representation as element masks: the cocycle space generators.
pub(crate) fn row_masks(cols: &[u64]) -> Vec<u64> {
    let dim = ambient_dim(cols);
    (0..dim)
        .map(|i| cols.iter().enumerate().fold(0u64, |a, (j, &c)| a | (((c >> i) & 1) << j)))
        .collect()
}

/// Cocircuits: minimal supports of the row space.
pub(crate) fn cocircuits(cols: &[u64]) -> Vec<u64> {
    let rows = row_masks(cols);
    let mut basis = XorBasis::default();
    let indep: Vec<u64> = rows.into_iter().filter(|&r| basis.insert(r)).collect();
    minimal_supports(&mut span(&indep))
}

/// Columns of the dual matroid, in reduced echelon form.
pub(crate) fn dual(cols: &[u64]) -> Vec<u64> {
    let n = cols.len();
    let kernel = kernel_basis(cols);
    // The kernel rows form a representation of the dual.
    let mut out = vec![0u64; n];
    for (row, &k) in kernel.iter().enumerate() {
        for j in bits(k) {
            out[j] |= 1 << row;
        }
    }
    rref(&out).0
}

/// Mask of coloops: elements whose removal lowers the rank.
pub(crate) fn coloops(cols: &[u64]) -> u64 {
    let n = cols.len();
    let r = rank(cols);
    (0..n).filter(|&e| rank_of_mask(cols, full_mask(n) & !(1 << e)) < r).fold(0, |a, e| a | (1 << e))
}

pub(crate) fn loops(cols: &[u64]) -> u64 {
    cols.iter().enumerate().filter(|(_, &c)| c == 0).fold(0, |a, (e, _)| a | (1 << e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_circuits(cols: &[u64]) -> Vec<u64> {
        let n = cols.len();
        let mut out = Vec::new();
        for s in 1u64..(1 << n) {
            let k = s.count_ones() as usize;
            let dependent = rank_of_mask(cols, s) < k;
            let minimal = bits(s).all(|e| rank_of_mask(cols, s & !(1 << e)) == k - 1);
            if dependent && minimal {
                out.push(s);
            }
        }
        out.sort_unstable_by_key(|&v| (v.count_ones(), v));
        out
    }

    #[test]
    fn circuits_match_brute_force() {
        let samples: [&[u64]; 4] = [
            &[0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111],
            &[0, 0b1, 0b1, 0b10],
            &[0b11, 0b01, 0b10, 0b11, 0],
            &[0b1, 0b10, 0b100],
        ];
        for cols in samples {
            assert_eq!(circuits(cols), brute_circuits(cols), "{cols:?}");
            let d = dual(cols);
            assert_eq!(cocircuits(cols), brute_circuits(&d), "{cols:?}");
        }
    }

    #[test]
    fn contraction_of_fano_point() {
        // F7 / e is a rank-2 matroid with three parallel pairs
        let mut f7 = vec![0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111];
        contract(&mut f7, 0);
        assert_eq!(rank(&f7), 2);
        let c = circuits(&f7);
        assert_eq!(c.iter().filter(|m| m.count_ones() == 2).count(), 3);
    }

    #[test]
    fn minor_order_is_irrelevant() {
        let cols = [0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111];
        let a = minor(&cols, 0b0100000, 0b0000001);
        let mut b = cols.to_vec();
        b.remove(5);
        contract(&mut b, 0);
        assert_eq!(rref(&a), rref(&b));
    }
}
