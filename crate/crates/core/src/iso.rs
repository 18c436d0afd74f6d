//! Matroid isomorphism by backtracking over element assignments.
//!
//! Candidates for each element are restricted to elements with the same
//! refined signature (circuit sizes through the element, refined twice by
//! the signatures of circuit neighbours). A partial assignment is kept only
//! while every circuit completed on either side maps onto a circuit.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashSet;
use std::hash::{Hash, Hasher};

use crate::vectors::{self, bits};

const REFINEMENT_ROUNDS: usize = 2;

/// Circuit data of a matroid, the input to isomorphism tests.
#[derive(Clone, Debug)]
pub(crate) struct Profile {
    pub n: usize,
    pub rank: usize,
    pub circuits: Vec<u64>,
    /// `size_hist[k]` = number of circuits of size `k`.
    pub size_hist: Vec<u32>,
    refined: Option<Refined>,
}

#[derive(Clone, Debug)]
struct Refined {
    circuit_set: HashSet<u64>,
    by_element: Vec<Vec<u64>>,
    sig: Vec<u64>,
    sorted_sig: Vec<u64>,
}

fn hash_of<T: Hash>(t: &T) -> u64 {
    let mut h = DefaultHasher::new();
    t.hash(&mut h);
    h.finish()
}

impl Profile {
    pub fn new(cols: &[u64]) -> Self {
        let n = cols.len();
        let circuits = vectors::circuits(cols);
        let mut size_hist = vec![0u32; n + 1];
        for c in &circuits {
            size_hist[c.count_ones() as usize] += 1;
        }
        Profile { n, rank: vectors::rank(cols), circuits, size_hist, refined: None }
    }

    /// Cheap necessary condition for isomorphism.
    pub fn coarse_match(&self, other: &Profile) -> bool {
        self.n == other.n && self.rank == other.rank && self.size_hist == other.size_hist
    }

    /// Computes the refined signatures now; required for the second
    /// argument of [`find_isomorphism`].
    pub fn refine_now(&mut self) {
        if self.refined.is_none() {
            self.refined = Some(self.refine());
        }
    }

    pub fn refined_new(cols: &[u64]) -> Self {
        let mut p = Self::new(cols);
        p.refine_now();
        p
    }

    fn refine(&self) -> Refined {
        let n = self.n;
        let mut by_element = vec![Vec::new(); n];
        for &c in &self.circuits {
            for e in bits(c) {
                by_element[e].push(c);
            }
        }
        let mut sig: Vec<u64> = (0..n)
            .map(|e| {
                let mut hist = vec![0u32; n + 1];
                for c in &by_element[e] {
                    hist[c.count_ones() as usize] += 1;
                }
                hash_of(&hist)
            })
            .collect();
        for _ in 0..REFINEMENT_ROUNDS {
            sig = (0..n)
                .map(|e| {
                    let mut around: Vec<u64> = by_element[e]
                        .iter()
                        .map(|&c| {
                            let mut inner: Vec<u64> = bits(c & !(1 << e)).map(|f| sig[f]).collect();
                            inner.sort_unstable();
                            hash_of(&(c.count_ones(), inner))
                        })
                        .collect();
                    around.sort_unstable();
                    hash_of(&(sig[e], around))
                })
                .collect();
        }
        let mut sorted_sig = sig.clone();
        sorted_sig.sort_unstable();
        Refined { circuit_set: self.circuits.iter().copied().collect(), by_element, sig, sorted_sig }
    }
}

fn image(mask: u64, map: &[usize]) -> u64 {
    bits(mask).fold(0, |a, e| a | (1 << map[e]))
}

/// Finds an isomorphism from `a` to `b` as a map of element indices.
/// `b` must already be refined.
pub(crate) fn find_isomorphism(a: &mut Profile, b: &Profile) -> Option<Vec<usize>> {
    if !a.coarse_match(b) {
        return None;
    }
    let n = a.n;
    a.refine_now();
    let ra = a.refined.as_ref().unwrap();
    let rb = b.refined.as_ref().expect("target profile must be refined");
    if ra.sorted_sig != rb.sorted_sig {
        return None;
    }

    let class_size = |s: u64| ra.sig.iter().filter(|&&t| t == s).count();
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u64;
    for _ in 0..n {
        let next = (0..n)
            .filter(|&e| (placed >> e) & 1 == 0)
            .max_by_key(|&e| {
                let links = ra.by_element[e].iter().filter(|&&c| c & placed != 0).count();
                (links, std::cmp::Reverse(class_size(ra.sig[e])), std::cmp::Reverse(e))
            })
            .unwrap();
        order.push(next);
        placed |= 1 << next;
    }
    // circuits of `a` whose last element in `order` sits at each position
    let mut position = vec![0usize; n];
    for (p, &e) in order.iter().enumerate() {
        position[e] = p;
    }
    let mut completes: Vec<Vec<u64>> = vec![Vec::new(); n];
    for &c in &a.circuits {
        let last = bits(c).map(|e| position[e]).max().unwrap();
        completes[last].push(c);
    }

    let mut search = Search {
        ra,
        rb,
        order: &order,
        completes: &completes,
        a_to_b: vec![usize::MAX; n],
        b_to_a: vec![usize::MAX; n],
        image_mask: 0,
    };
    if search.extend(0) {
        Some(search.a_to_b)
    } else {
        None
    }
}

struct Search<'a> {
    ra: &'a Refined,
    rb: &'a Refined,
    order: &'a [usize],
    completes: &'a [Vec<u64>],
    a_to_b: Vec<usize>,
    b_to_a: Vec<usize>,
    image_mask: u64,
}

impl Search<'_> {
    fn extend(&mut self, pos: usize) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let e = self.order[pos];
        let want = self.ra.sig[e];
        for f in 0..self.rb.sig.len() {
            if self.rb.sig[f] != want || (self.image_mask >> f) & 1 == 1 {
                continue;
            }
            self.a_to_b[e] = f;
            self.b_to_a[f] = e;
            self.image_mask |= 1 << f;
            if self.consistent(pos, f) && self.extend(pos + 1) {
                return true;
            }
            self.image_mask &= !(1 << f);
            self.a_to_b[e] = usize::MAX;
            self.b_to_a[f] = usize::MAX;
        }
        false
    }

    fn consistent(&self, pos: usize, f: usize) -> bool {
        let forward = self.completes[pos].iter().all(|&c| self.rb.circuit_set.contains(&image(c, &self.a_to_b)));
        forward
            && self.rb.by_element[f]
                .iter()
                .filter(|&&d| d & !self.image_mask == 0)
                .all(|&d| self.ra.circuit_set.contains(&image(d, &self.b_to_a)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const F7: [u64; 7] = [0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111];

    #[test]
    fn fano_is_self_isomorphic_under_relabeling() {
        let perm = [3, 6, 0, 5, 1, 4, 2];
        let mut shuffled = [0u64; 7];
        for (i, &p) in perm.iter().enumerate() {
            shuffled[p] = F7[i];
        }
        let mut a = Profile::new(&F7);
        let b = Profile::refined_new(&shuffled);
        let map = find_isomorphism(&mut a, &b).unwrap();
        let circuits_b: HashSet<u64> = b.circuits.iter().copied().collect();
        for &c in &a.circuits {
            assert!(circuits_b.contains(&image(c, &map)));
        }
    }

    #[test]
    fn fano_and_dual_differ() {
        let mut a = Profile::new(&F7);
        let b = Profile::refined_new(&vectors::dual(&F7));
        assert!(find_isomorphism(&mut a, &b).is_none());
    }

    #[test]
    fn parallel_versus_series_pair() {
        // U_{1,2} plus coloop vs two coloops plus loop: same size, different circuits
        let mut a = Profile::new(&[1, 1, 2]);
        let b = Profile::refined_new(&[1, 2, 0]);
        assert!(find_isomorphism(&mut a, &b).is_none());
        let c = Profile::refined_new(&[2, 1, 2]);
        assert_eq!(find_isomorphism(&mut a, &c).map(|m| m[2]), Some(1));
    }
}
