//! Numerical semigroups: construction, membership, Apery sets,
//! pseudo-Frobenius numbers and the symmetry classification.
//!
//! A [`NumericalSemigroup`] stores its minimal generators together with the
//! Apery set of the smallest generator; that single cache answers
//! membership, gap counting and pseudo-Frobenius queries without ever
//! scanning `[0, F(H)]`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use crate::error::{Error, Result};

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn gcd_all(values: &[i64]) -> i64 {
    values.iter().fold(0, |acc, &v| gcd(acc, v))
}

/// Smallest element of the monoid generated by `gens` in each residue class
/// modulo `base` (Dijkstra over `Z/base` with the generators as edge
/// weights). Classes that are unreachable stay at `i64::MAX`; with
/// `gcd(gens) = 1` every class is reachable.
pub(crate) fn shortest_class_reps(gens: &[i64], base: i64) -> Vec<i64> {
    let n = base as usize;
    let mut dist = vec![i64::MAX; n];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0i64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in gens {
            if g % base == 0 {
                continue;
            }
            let nd = d + g;
            let nr = ((r as i64 + g) % base) as usize;
            if nd < dist[nr] {
                dist[nr] = nd;
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    dist
}

/// Minimal generators of the monoid generated by `sorted` (sorted, deduped,
/// gcd 1): an element is redundant exactly when it is a sum of two nonzero
/// monoid elements.
fn minimalize(sorted: &[i64]) -> Vec<i64> {
    if sorted[0] == 1 {
        return vec![1];
    }
    let max = *sorted.last().unwrap();
    let mut member = vec![false; (max + 1) as usize];
    member[0] = true;
    for v in 1..=max {
        for &g in sorted {
            if g <= v && member[(v - g) as usize] {
                member[v as usize] = true;
                break;
            }
        }
    }
    sorted
        .iter()
        .copied()
        .filter(|&g| !(1..g).any(|h| member[h as usize] && member[(g - h) as usize]))
        .collect()
}

/// Symmetry classification of a numerical semigroup.
///
/// `Symmetric` and `PseudoSymmetric` are the almost symmetric semigroups of
/// type 1 and 2; `AlmostSymmetric { t }` is reserved for type `t >= 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    Symmetric,
    PseudoSymmetric,
    AlmostSymmetric { t: usize },
    NotAlmostSymmetric,
}

impl Classification {
    pub fn is_almost_symmetric(&self) -> bool {
        !matches!(self, Classification::NotAlmostSymmetric)
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Symmetric => write!(f, "symmetric"),
            Classification::PseudoSymmetric => write!(f, "pseudo-symmetric"),
            Classification::AlmostSymmetric { .. } => write!(f, "almost-symmetric"),
            Classification::NotAlmostSymmetric => write!(f, "none"),
        }
    }
}

/// Frobenius number, genus, pseudo-Frobenius numbers and classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PFData {
    pub frobenius: i64,
    pub genus: i64,
    /// PF(H), sorted ascending; the last entry is the Frobenius number.
    pub pf: Vec<i64>,
    /// PF'(H) = PF(H) \ {F(H)}.
    pub pf_prime: Vec<i64>,
    /// t(H) = |PF(H)|.
    pub semigroup_type: usize,
    pub classification: Classification,
}

impl PFData {
    /// Nari's pairing: with PF(H) = {f_1 < ... < f_{t-1} < F}, test
    /// f_i + f_{t-i} = F for i = 1, ..., t-1. Holds exactly for almost
    /// symmetric semigroups.
    pub fn nari_pairing_holds(&self) -> bool {
        let t = self.pf.len();
        (1..t).all(|i| self.pf[i - 1] + self.pf[t - 1 - i] == self.frobenius)
    }
}

/// The Apery set Ap(a, H) = { h in H : h - a not in H }.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AperyTable {
    base: i64,
    elements: Vec<i64>,
}

impl AperyTable {
    pub fn base(&self) -> i64 {
        self.base
    }

    /// Elements sorted ascending; exactly `base` of them, one per residue
    /// class mod `base`.
    pub fn elements(&self) -> &[i64] {
        &self.elements
    }

    pub fn max(&self) -> i64 {
        *self.elements.last().unwrap()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, h: i64) -> bool {
        self.elements.binary_search(&h).is_ok()
    }
}

/// A numerical semigroup given by its (minimal) generators.
///
/// Construction removes redundant generators silently, rejects gcd != 1 and
/// caches the Apery set of the smallest generator. Immutable afterwards;
/// all operations are pure reads, safe to share across threads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    /// apery_min[r] = least element of H congruent to r mod n_1.
    apery_min: Vec<i64>,
    generator_sum: i64,
    pf_data: PFData,
}

impl NumericalSemigroup {
    pub fn new(raw: &[i64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(&bad) = raw.iter().find(|&&g| g < 1) {
            return Err(Error::InvalidGenerator { value: bad });
        }
        let g = gcd_all(raw);
        if g != 1 {
            return Err(Error::GcdNotOne { gcd: g });
        }
        let mut sorted = raw.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let generators = minimalize(&sorted);
        let apery_min = shortest_class_reps(&generators, generators[0]);
        let generator_sum = generators.iter().sum();
        let pf_data = compute_pf(&generators, &apery_min);
        Ok(NumericalSemigroup {
            generators,
            apery_min,
            generator_sum,
            pf_data,
        })
    }

    /// Minimal generators, sorted ascending.
    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    /// Embedding dimension e = number of minimal generators.
    pub fn embedding_dim(&self) -> usize {
        self.generators.len()
    }

    /// The multiplicity n_1 (smallest generator).
    pub fn multiplicity(&self) -> i64 {
        self.generators[0]
    }

    /// N = n_1 + ... + n_e.
    pub fn generator_sum(&self) -> i64 {
        self.generator_sum
    }

    /// Exact membership: h in H iff h >= apery_min[h mod n_1].
    pub fn contains(&self, h: i64) -> bool {
        if h < 0 {
            return false;
        }
        let r = (h % self.generators[0]) as usize;
        h >= self.apery_min[r]
    }

    /// The partial order a <=_H b iff b - a in H.
    pub fn leq_h(&self, a: i64, b: i64) -> bool {
        self.contains(b - a)
    }

    /// Ap(a, H) for a positive member a.
    pub fn apery(&self, a: i64) -> Result<AperyTable> {
        if a <= 0 {
            return Err(Error::precond(format!("Apery base must be positive, got {a}")));
        }
        if !self.contains(a) {
            return Err(Error::NotMember { value: a });
        }
        let mut elements = if a == self.generators[0] {
            self.apery_min.clone()
        } else {
            shortest_class_reps(&self.generators, a)
        };
        elements.sort_unstable();
        Ok(AperyTable { base: a, elements })
    }

    /// Frobenius number, genus, PF(H) and classification.
    pub fn pf_data(&self) -> &PFData {
        &self.pf_data
    }

    pub fn frobenius(&self) -> i64 {
        self.pf_data.frobenius
    }

    pub fn genus(&self) -> i64 {
        self.pf_data.genus
    }

    pub fn classification(&self) -> Classification {
        self.pf_data.classification
    }

    pub fn is_almost_symmetric(&self) -> bool {
        self.pf_data.classification.is_almost_symmetric()
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

fn compute_pf(generators: &[i64], apery_min: &[i64]) -> PFData {
    // H = N: no gaps, PF empty by convention, downstream verifiers reject.
    if generators == [1] {
        return PFData {
            frobenius: -1,
            genus: 0,
            pf: Vec::new(),
            pf_prime: Vec::new(),
            semigroup_type: 0,
            classification: Classification::NotAlmostSymmetric,
        };
    }
    let n1 = generators[0];
    let contains = |h: i64| -> bool {
        if h < 0 {
            return false;
        }
        h >= apery_min[(h % n1) as usize]
    };
    let frobenius = apery_min.iter().max().unwrap() - n1;
    let genus: i64 = apery_min.iter().map(|&w| w / n1).sum();
    // PF(H) = { w - n_1 : w in Ap(n_1, H), (w - n_1) + n_i in H for all i }.
    // w - n_1 is never in H (Apery), and i = 1 gives back w.
    let mut pf: Vec<i64> = apery_min
        .iter()
        .filter(|&&w| {
            let x = w - n1;
            generators.iter().skip(1).all(|&g| contains(x + g))
        })
        .map(|&w| w - n1)
        .collect();
    pf.sort_unstable();
    let pf_prime: Vec<i64> = pf[..pf.len() - 1].to_vec();
    let t = pf.len();
    let classification = if 2 * genus == frobenius + t as i64 {
        match t {
            1 => Classification::Symmetric,
            2 => Classification::PseudoSymmetric,
            _ => Classification::AlmostSymmetric { t },
        }
    } else {
        Classification::NotAlmostSymmetric
    };
    debug_assert_eq!(*pf.last().unwrap(), frobenius);
    debug_assert!(2 * genus >= frobenius + t as i64);
    debug_assert_eq!(
        classification == Classification::PseudoSymmetric,
        t == 2 && pf[0] * 2 == frobenius
    );
    PFData {
        frobenius,
        genus,
        pf,
        pf_prime,
        semigroup_type: t,
        classification,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::new(gens).unwrap()
    }

    #[test]
    fn smallest_nontrivial_semigroup() {
        let h = sg(&[2, 3]);
        assert_eq!(h.generators(), &[2, 3]);
        assert_eq!(h.frobenius(), 1);
        assert_eq!(h.genus(), 1);
        assert_eq!(h.classification(), Classification::Symmetric);
    }

    #[test]
    fn redundant_generator_removed() {
        let h = sg(&[5, 6, 7, 9, 11]);
        assert_eq!(h.generators(), &[5, 6, 7, 9]);
    }

    #[test]
    fn four_generators_kept() {
        let h = sg(&[22, 28, 47, 53]);
        assert_eq!(h.embedding_dim(), 4);
        assert_eq!(h.generators(), &[22, 28, 47, 53]);
    }

    #[test]
    fn gcd_not_one_is_rejected() {
        assert_eq!(
            NumericalSemigroup::new(&[4, 6]),
            Err(Error::GcdNotOne { gcd: 2 })
        );
        assert_eq!(NumericalSemigroup::new(&[]), Err(Error::EmptyInput));
        assert_eq!(
            NumericalSemigroup::new(&[0, 3]),
            Err(Error::InvalidGenerator { value: 0 })
        );
    }

    #[test]
    fn membership() {
        let h = sg(&[5, 6, 7, 9]);
        assert!(!h.contains(8)); // 8 = F(H)
        assert!(h.contains(0));
        assert!(h.contains(13)); // 6 + 7
        assert!(!h.contains(-3));
    }

    #[test]
    fn apery_of_multiplicity() {
        let h = sg(&[5, 6, 7, 9]);
        let ap = h.apery(5).unwrap();
        assert_eq!(ap.elements(), &[0, 6, 7, 9, 13]);
        assert_eq!(ap.max(), 5 + h.frobenius());
    }

    #[test]
    fn apery_of_cusp() {
        let h = sg(&[2, 3]);
        assert_eq!(h.apery(2).unwrap().elements(), &[0, 3]);
    }

    #[test]
    fn apery_rejects_non_members() {
        let h = sg(&[5, 6, 7, 9]);
        assert_eq!(h.apery(8), Err(Error::NotMember { value: 8 }));
        assert!(h.apery(0).is_err());
    }

    #[test]
    fn pf_of_pseudo_symmetric_example() {
        let h = sg(&[7, 12, 13, 22]);
        let pf = h.pf_data();
        assert_eq!(pf.pf, vec![15, 30]);
        assert_eq!(pf.classification, Classification::PseudoSymmetric);
    }

    #[test]
    fn pf_of_type3_example() {
        let h = sg(&[5, 6, 8, 9]);
        let pf = h.pf_data();
        assert_eq!(pf.pf, vec![3, 4, 7]);
        assert_eq!(pf.semigroup_type, 3);
        assert_eq!(pf.classification, Classification::AlmostSymmetric { t: 3 });
        assert!(pf.nari_pairing_holds());
    }

    #[test]
    fn pf_of_five_generated_type4_example() {
        let h = sg(&[10, 11, 15, 16, 28]);
        let pf = h.pf_data();
        assert_eq!(pf.pf, vec![5, 17, 29, 34]);
        assert_eq!(pf.classification, Classification::AlmostSymmetric { t: 4 });
    }

    #[test]
    fn leq_h_examples() {
        let h = sg(&[5, 6, 7, 9]);
        assert!(h.leq_h(4, 4));
        assert!(h.leq_h(6, 13));
        assert!(!h.leq_h(0, 8));
    }

    #[test]
    fn natural_numbers_edge_case() {
        let h = sg(&[1]);
        assert_eq!(h.generators(), &[1]);
        let h2 = sg(&[3, 5, 1]);
        assert_eq!(h2.generators(), &[1]);
        let pf = h.pf_data();
        assert_eq!(pf.frobenius, -1);
        assert_eq!(pf.genus, 0);
        assert!(pf.pf.is_empty());
        assert_eq!(pf.classification, Classification::NotAlmostSymmetric);
        assert!(h.contains(1));
    }
}
