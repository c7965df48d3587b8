//! Factorizations of semigroup elements, unique-factorization tests, and
//! the minimal-multiple table alpha with witnesses.

use crate::error::{Error, Result};
use crate::semigroup::{gcd_all, shortest_class_reps, NumericalSemigroup};

/// Default cap on the number of factorizations enumerated per element.
/// Exceeding it is an error, never a truncation.
pub const DEFAULT_FACTORIZATION_CAP: usize = 1_000_000;

/// A presentation h = sum beta_i * n_i with non-negative coefficients.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Factorization {
    coeffs: Vec<i64>,
    degree: i64,
}

impl Factorization {
    pub fn new(h: &NumericalSemigroup, coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len() != h.embedding_dim() {
            return Err(Error::precond(format!(
                "coefficient tuple has length {}, expected {}",
                coeffs.len(),
                h.embedding_dim()
            )));
        }
        if let Some(&bad) = coeffs.iter().find(|&&c| c < 0) {
            return Err(Error::precond(format!("negative coefficient {bad}")));
        }
        let degree = degree_of(h.generators(), &coeffs);
        Ok(Factorization { coeffs, degree })
    }

    pub(crate) fn from_parts(coeffs: Vec<i64>, degree: i64) -> Self {
        Factorization { coeffs, degree }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// Indices with positive coefficient.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, _)| i)
    }

    pub fn nonzero_count(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c > 0).count()
    }

    /// Total coefficient sum (a factorization pair with equal totals is a
    /// homogeneous relation, stable under shifting).
    pub fn total(&self) -> i64 {
        self.coeffs.iter().sum()
    }
}

pub(crate) fn degree_of(gens: &[i64], coeffs: &[i64]) -> i64 {
    gens.iter().zip(coeffs).map(|(&g, &c)| g * c).sum()
}

/// All factorizations of `value` over the generators of `h`, in descending
/// lexicographic order of the coefficient tuple. Empty when `value` is not
/// a member; `{(0,...,0)}` for `value = 0`.
pub fn factorizations(h: &NumericalSemigroup, value: i64) -> Result<Vec<Factorization>> {
    factorizations_capped(h, value, DEFAULT_FACTORIZATION_CAP)
}

pub fn factorizations_capped(
    h: &NumericalSemigroup,
    value: i64,
    cap: usize,
) -> Result<Vec<Factorization>> {
    if value < 0 {
        return Ok(Vec::new());
    }
    let gens = h.generators();
    let e = gens.len();
    // suffix_gcd[i] = gcd of gens[i..]; prunes unreachable remainders.
    let mut suffix_gcd = vec![0i64; e + 1];
    for i in (0..e).rev() {
        suffix_gcd[i] = crate::semigroup::gcd(gens[i], suffix_gcd[i + 1]);
    }
    let mut out = Vec::new();
    let mut coeffs = vec![0i64; e];
    dfs_factorizations(gens, &suffix_gcd, 0, value, &mut coeffs, &mut out, cap)
        .map_err(|_| Error::FactorizationOverflow { element: value, cap })?;
    Ok(out)
}

fn dfs_factorizations(
    gens: &[i64],
    suffix_gcd: &[i64],
    i: usize,
    remaining: i64,
    coeffs: &mut Vec<i64>,
    out: &mut Vec<Factorization>,
    cap: usize,
) -> std::result::Result<(), ()> {
    let e = gens.len();
    if remaining % suffix_gcd[i].max(1) != 0 && i < e {
        return Ok(());
    }
    if i == e - 1 {
        if remaining % gens[i] == 0 {
            coeffs[i] = remaining / gens[i];
            if out.len() >= cap {
                return Err(());
            }
            let degree = degree_of(gens, coeffs);
            out.push(Factorization::from_parts(coeffs.clone(), degree));
            coeffs[i] = 0;
        }
        return Ok(());
    }
    for c in (0..=remaining / gens[i]).rev() {
        coeffs[i] = c;
        dfs_factorizations(gens, suffix_gcd, i + 1, remaining - c * gens[i], coeffs, out, cap)?;
    }
    coeffs[i] = 0;
    Ok(())
}

/// Count factorizations of `value`, stopping as soon as `limit` are found.
pub(crate) fn count_factorizations_at_most(
    h: &NumericalSemigroup,
    value: i64,
    limit: usize,
) -> usize {
    if value < 0 {
        return 0;
    }
    let gens = h.generators();
    let mut count = 0usize;
    count_dfs(gens, 0, value, limit, &mut count);
    count
}

fn count_dfs(gens: &[i64], i: usize, remaining: i64, limit: usize, count: &mut usize) {
    if *count >= limit {
        return;
    }
    if i == gens.len() - 1 {
        if remaining % gens[i] == 0 {
            *count += 1;
        }
        return;
    }
    for c in 0..=remaining / gens[i] {
        count_dfs(gens, i + 1, remaining - c * gens[i], limit, count);
        if *count >= limit {
            return;
        }
    }
}

/// Unique factorization: true iff `value` has exactly one factorization.
pub fn has_uf(h: &NumericalSemigroup, value: i64) -> Result<bool> {
    if !h.contains(value) {
        return Err(Error::NotMember { value });
    }
    Ok(count_factorizations_at_most(h, value, 2) == 1)
}

/// Membership oracle for the submonoid generated by an arbitrary nonempty
/// list of positive integers (gcd may exceed 1).
pub(crate) struct SubMonoid {
    d: i64,
    base: i64,
    reps: Vec<i64>,
}

impl SubMonoid {
    pub(crate) fn new(gens: &[i64]) -> Self {
        debug_assert!(!gens.is_empty());
        let d = gcd_all(gens);
        let reduced: Vec<i64> = gens.iter().map(|&g| g / d).collect();
        let base = *reduced.iter().min().unwrap();
        let reps = shortest_class_reps(&reduced, base);
        SubMonoid { d, base, reps }
    }

    pub(crate) fn contains(&self, v: i64) -> bool {
        if v == 0 {
            return true;
        }
        if v < 0 || v % self.d != 0 {
            return false;
        }
        let w = v / self.d;
        w >= self.reps[(w % self.base) as usize]
    }
}

/// The minimal-multiple table: alpha_i is the least positive integer with
/// alpha_i * n_i representable over the other generators, together with one
/// witness tuple per i (the lexicographically smallest coefficient tuple).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaTable {
    alpha: Vec<i64>,
    witnesses: Vec<Vec<i64>>,
}

impl AlphaTable {
    pub fn alpha(&self) -> &[i64] {
        &self.alpha
    }

    pub fn get(&self, i: usize) -> i64 {
        self.alpha[i]
    }

    /// Witness coefficients (alpha_{ij})_j as a full-length tuple with a
    /// zero in position i.
    pub fn witness(&self, i: usize) -> &[i64] {
        &self.witnesses[i]
    }

    pub fn len(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alpha.is_empty()
    }
}

pub fn alphas(h: &NumericalSemigroup) -> Result<AlphaTable> {
    let gens = h.generators();
    let e = gens.len();
    if e < 2 {
        return Err(Error::precond("alpha table needs at least 2 generators"));
    }
    let mut alpha = Vec::with_capacity(e);
    let mut witnesses = Vec::with_capacity(e);
    for i in 0..e {
        let others: Vec<i64> = gens
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &g)| g)
            .collect();
        let monoid = SubMonoid::new(&others);
        // alpha_i <= min(others): (min others) * n_i is a multiple of a
        // single other generator.
        let a_i = (1..)
            .find(|&a| monoid.contains(a * gens[i]))
            .expect("alpha search terminates");
        alpha.push(a_i);
        witnesses.push(lex_min_witness(gens, i, &others, a_i * gens[i]));
    }
    Ok(AlphaTable { alpha, witnesses })
}

/// Lexicographically smallest coefficient tuple over `others` summing to
/// `target`, written back into full e-length coordinates.
fn lex_min_witness(gens: &[i64], skip: usize, others: &[i64], target: i64) -> Vec<i64> {
    let k = others.len();
    let mut suffix: Vec<SubMonoid> = Vec::with_capacity(k);
    for start in 0..k {
        suffix.push(SubMonoid::new(&others[start..]));
    }
    let mut witness = vec![0i64; gens.len()];
    let mut remaining = target;
    let mut pos = 0usize;
    for (idx, &g) in others.iter().enumerate() {
        let c = if idx + 1 == k {
            debug_assert_eq!(remaining % g, 0);
            remaining / g
        } else {
            (0..=remaining / g)
                .find(|&c| suffix[idx + 1].contains(remaining - c * g))
                .expect("witness exists by definition of alpha")
        };
        // map back to the original index
        while pos == skip {
            pos += 1;
        }
        witness[pos] = c;
        pos += 1;
        remaining -= c * g;
    }
    debug_assert_eq!(remaining, 0);
    witness
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::new(gens).unwrap()
    }

    #[test]
    fn factorizations_of_zero_and_non_members() {
        let h = sg(&[5, 6, 7, 9]);
        let z = factorizations(&h, 0).unwrap();
        assert_eq!(z.len(), 1);
        assert_eq!(z[0].coeffs(), &[0, 0, 0, 0]);
        assert!(factorizations(&h, 8).unwrap().is_empty());
        assert!(factorizations(&h, -2).unwrap().is_empty());
    }

    #[test]
    fn six_factorizations_example() {
        let h = sg(&[33, 56, 61, 84]);
        let fs = factorizations(&h, 835 + 61).unwrap();
        assert_eq!(fs.len(), 6);
        assert!(fs.iter().any(|f| f.coeffs() == &[0, 16, 0, 0]));
        for f in &fs {
            assert_eq!(f.degree(), 896);
        }
    }

    #[test]
    fn three_factorizations_example() {
        let h = sg(&[22, 28, 47, 53]);
        let fs = factorizations(&h, 283 + 47).unwrap();
        assert_eq!(fs.len(), 3);
    }

    #[test]
    fn descending_lexicographic_order() {
        let h = sg(&[22, 28, 47, 53]);
        let fs = factorizations(&h, 283 + 47).unwrap();
        let mut sorted = fs.clone();
        sorted.sort_by(|a, b| b.cmp(a));
        assert_eq!(fs, sorted);
    }

    #[test]
    fn uf_examples() {
        let h = sg(&[22, 28, 47, 53]);
        assert!(has_uf(&h, 25 + 22).unwrap());
        assert!(has_uf(&h, 22).unwrap());
        let h2 = sg(&[33, 56, 61, 84]);
        assert!(!has_uf(&h2, 896).unwrap());
        assert_eq!(has_uf(&h, 283), Err(Error::NotMember { value: 283 }));
    }

    #[test]
    fn alpha_fixtures() {
        assert_eq!(alphas(&sg(&[22, 28, 47, 53])).unwrap().alpha(), &[14, 11, 2, 2]);
        assert_eq!(alphas(&sg(&[33, 56, 61, 84])).unwrap().alpha(), &[28, 3, 2, 2]);
        assert_eq!(alphas(&sg(&[9, 22, 46, 57])).unwrap().alpha(), &[10, 3, 3, 2]);
    }

    #[test]
    fn alpha_witnesses_are_valid_and_lex_minimal() {
        for gens in [[22i64, 28, 47, 53], [9, 22, 46, 57], [5, 6, 8, 9]] {
            let h = sg(&gens);
            let table = alphas(&h).unwrap();
            for i in 0..4 {
                let w = table.witness(i);
                assert_eq!(w[i], 0);
                let total: i64 = w.iter().zip(h.generators()).map(|(&c, &g)| c * g).sum();
                assert_eq!(total, table.get(i) * h.generators()[i]);
                assert!(table.get(i) >= 2, "minimal generators force alpha_i >= 2");
                // lex-minimality against the full enumeration
                let fs = factorizations(&h, total).unwrap();
                let best = fs
                    .iter()
                    .filter(|f| f.coeffs()[i] == 0)
                    .map(|f| f.coeffs().to_vec())
                    .min()
                    .unwrap();
                assert_eq!(w, &best[..]);
            }
        }
    }

    #[test]
    fn alpha_minus_one_multiple_is_in_every_apery_set() {
        // (alpha_i - 1) n_i lies in Ap(n_k, H) for all k != i.
        for gens in [[22i64, 28, 47, 53], [5, 6, 8, 9], [7, 12, 13, 22]] {
            let h = sg(&gens);
            let table = alphas(&h).unwrap();
            for i in 0..4 {
                let v = (table.get(i) - 1) * h.generators()[i];
                for k in 0..4 {
                    if k != i {
                        let ap = h.apery(h.generators()[k]).unwrap();
                        assert!(ap.contains(v));
                    }
                }
            }
        }
    }

    #[test]
    fn alpha_rejects_trivial_semigroup() {
        assert!(alphas(&sg(&[1])).is_err());
    }
}
