//! Bitmask encoding of strictly increasing multi-indices.

use std::cmp::Ordering;
use std::sync::OnceLock;

pub(crate) const MAX_DIM: usize = 8;

/// A set of axes encoded as a bitmask (bit `i` set ⇔ axis `i` present).
///
/// The ordering is lexicographic on the sorted index lists for masks of
/// equal size, which is the order in which coefficients are reported.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Blade(pub u16);

impl Blade {
    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, axis: usize) -> bool {
        self.0 & (1 << axis) != 0
    }

    pub fn indices(self) -> Vec<usize> {
        (0..16).filter(|&i| self.contains(i)).collect()
    }

    /// Sorts `idx` into a blade, returning the permutation sign, or `None`
    /// if an axis repeats.
    pub fn from_unsorted(idx: &[usize]) -> Option<(Blade, f64)> {
        let mut mask = 0u16;
        let mut sign = 1.0;
        for &i in idx {
            let bit = 1u16 << i;
            if mask & bit != 0 {
                return None;
            }
            // every already-present axis above `i` must be jumped over
            if (mask >> i).count_ones() % 2 == 1 {
                sign = -sign;
            }
            mask |= bit;
        }
        Some((Blade(mask), sign))
    }
}

impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.0 == other.0 {
            return Ordering::Equal;
        }
        let (ga, gb) = (self.grade(), other.grade());
        if ga != gb {
            return ga.cmp(&gb);
        }
        // lowest axis where the two index sets differ decides
        let diff = self.0 ^ other.0;
        let low = diff & diff.wrapping_neg();
        if self.0 & low != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sign of `e^a ∧ e^b` relative to `e^{a∪b}`; zero if they overlap.
pub(crate) fn wedge_sign(a: u16, b: u16) -> f64 {
    if a & b != 0 {
        return 0.0;
    }
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        swaps += (a >> (j + 1)).count_ones();
        rest &= rest - 1;
    }
    if swaps.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// Sign picked up when the vector `e_axis` is inserted into the first slot
/// of `e^mask` (the mask must contain `axis`).
pub(crate) fn contraction_sign(mask: u16, axis: usize) -> f64 {
    if (mask & ((1u16 << axis) - 1)).count_ones().is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

struct Tables {
    /// `basis[n][k]`: all k-subsets of n axes in lexicographic order.
    basis: Vec<Vec<Vec<u16>>>,
    /// `position[n][mask]`: index of `mask` inside `basis[n][popcount]`.
    position: Vec<Vec<u16>>,
}

fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let mut basis = Vec::with_capacity(MAX_DIM + 1);
        let mut position = Vec::with_capacity(MAX_DIM + 1);
        for n in 0..=MAX_DIM {
            let mut per_k: Vec<Vec<u16>> = vec![Vec::new(); n + 1];
            for mask in 0u16..(1 << n) {
                per_k[mask.count_ones() as usize].push(mask);
            }
            let mut pos = vec![u16::MAX; 1 << n];
            for list in per_k.iter_mut() {
                list.sort_by_key(|&m| Blade(m));
                for (p, &m) in list.iter().enumerate() {
                    pos[m as usize] = p as u16;
                }
            }
            basis.push(per_k);
            position.push(pos);
        }
        Tables { basis, position }
    })
}

/// All k-subsets of `n` axes in lexicographic order.
pub(crate) fn basis(n: usize, k: usize) -> &'static [u16] {
    &tables().basis[n][k]
}

/// Position of `mask` within [`basis`]`(n, popcount(mask))`.
pub(crate) fn position(n: usize, mask: u16) -> usize {
    tables().position[n][mask as usize] as usize
}

/// Binomial coefficient C(n, k) for n ≤ 8.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        0
    } else {
        basis(n, k).len()
    }
}
