//! Minimal binomial generators of the toric ideal I_H via fiber graphs, and
//! graded Betti numbers of K[H] via squarefree divisor complexes.
//!
//! Two independent routes compute the number of minimal generators: the
//! per-degree fiber-graph component count, and the rank of reduced homology
//! of the divisor complex. Their agreement is asserted by the test suite,
//! never assumed.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::factorization::{factorizations, Factorization};
use crate::report::StructureReport;
use crate::rf::Binomial;
use crate::semigroup::NumericalSemigroup;

/// The fiber of a degree d: all factorizations of d, with edges between
/// factorizations whose supports overlap. The number of components minus
/// one is the number of minimal generators of I_H in degree d.
#[derive(Clone, Debug)]
pub struct FiberGraph {
    pub degree: i64,
    pub vertices: Vec<Factorization>,
    /// Component id per vertex (ids are arbitrary but consistent).
    pub component: Vec<usize>,
    pub components: usize,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

pub fn fiber_graph(h: &NumericalSemigroup, degree: i64) -> Result<FiberGraph> {
    let vertices = factorizations(h, degree)?;
    let n = vertices.len();
    let e = h.embedding_dim();
    let mut uf = UnionFind::new(n);
    // vertices sharing generator g in their support are linked
    for g in 0..e {
        let mut prev: Option<usize> = None;
        for (v, fac) in vertices.iter().enumerate() {
            if fac.coeffs()[g] > 0 {
                if let Some(p) = prev {
                    uf.union(p, v);
                }
                prev = Some(v);
            }
        }
    }
    let mut ids: HashMap<usize, usize> = HashMap::new();
    let mut component = Vec::with_capacity(n);
    for v in 0..n {
        let root = uf.find(v);
        let next = ids.len();
        let id = *ids.entry(root).or_insert(next);
        component.push(id);
    }
    Ok(FiberGraph {
        degree,
        vertices,
        component,
        components: ids.len(),
    })
}

/// A minimal binomial generating set of I_H.
///
/// Degrees are scanned in increasing order up to F(H) + N. At each degree
/// the fiber graph (support edges plus moves by the generators emitted so
/// far) is built; one binomial per extra component is emitted, connecting
/// the component's lexicographically smallest vertex to the smallest vertex
/// of the first component.
pub fn minimal_generators(h: &NumericalSemigroup) -> Result<Vec<Binomial>> {
    let bound = h.frobenius() + h.generator_sum();
    let mut gens: Vec<Binomial> = Vec::new();
    for d in 2..=bound {
        if !h.contains(d) {
            continue;
        }
        let fg = fiber_graph(h, d)?;
        if fg.components <= 1 {
            continue;
        }
        // extra edges: moves by already-emitted generators (these never
        // merge support components for strictly smaller degrees, but the
        // invariant is cheap to honor directly)
        let index: HashMap<&[i64], usize> = fg
            .vertices
            .iter()
            .enumerate()
            .map(|(i, f)| (f.coeffs(), i))
            .collect();
        let mut uf = UnionFind::new(fg.vertices.len());
        // seed with the support components
        let mut first_of: HashMap<usize, usize> = HashMap::new();
        for (v, &c) in fg.component.iter().enumerate() {
            match first_of.get(&c) {
                Some(&f0) => uf.union(v, f0),
                None => {
                    first_of.insert(c, v);
                }
            }
        }
        for (v, fac) in fg.vertices.iter().enumerate() {
            for b in &gens {
                for (from, to) in [
                    (b.plus().coeffs(), b.minus().coeffs()),
                    (b.minus().coeffs(), b.plus().coeffs()),
                ] {
                    if fac.coeffs().iter().zip(from).all(|(&c, &m)| c >= m) {
                        let target: Vec<i64> = fac
                            .coeffs()
                            .iter()
                            .zip(from.iter().zip(to))
                            .map(|(&c, (&x, &y))| c - x + y)
                            .collect();
                        if let Some(&w) = index.get(target.as_slice()) {
                            uf.union(v, w);
                        }
                    }
                }
            }
        }
        // group by final root, order groups by their lex-smallest vertex
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..fg.vertices.len() {
            let r = uf.find(v);
            groups.entry(r).or_default().push(v);
        }
        if groups.len() <= 1 {
            continue;
        }
        let mut reps: Vec<&Factorization> = groups
            .values()
            .map(|vs| {
                vs.iter()
                    .map(|&v| &fg.vertices[v])
                    .min()
                    .expect("nonempty component")
            })
            .collect();
        reps.sort();
        let anchor = reps[0];
        for other in reps.iter().skip(1) {
            let diff: Vec<i64> = anchor
                .coeffs()
                .iter()
                .zip(other.coeffs())
                .map(|(&a, &b)| a - b)
                .collect();
            let b = Binomial::from_difference(h, &diff).expect("distinct components");
            gens.push(b);
        }
    }
    Ok(gens)
}

/// The squarefree divisor complex of an element h: all subsets S of the
/// generator indices with h - sum_{i in S} n_i still in H. Downward closed.
#[derive(Clone, Debug)]
pub struct DivisorComplex {
    pub element: i64,
    /// Faces as bitmasks over the generator indices, sorted.
    pub faces: Vec<u32>,
}

pub fn divisor_complex(h: &NumericalSemigroup, element: i64) -> DivisorComplex {
    let gens = h.generators();
    let e = gens.len();
    let mut faces = Vec::new();
    for mask in 0u32..(1 << e) {
        let total: i64 = (0..e)
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| gens[i])
            .sum();
        if h.contains(element - total) {
            faces.push(mask);
        }
    }
    DivisorComplex {
        element,
        faces,
    }
}

/// Exact rank of an integer matrix by fraction-free Gaussian elimination.
fn rank_i128(mut m: Vec<Vec<i128>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0usize;
    let mut prev = 1i128;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in (rank + 1)..rows {
            for cc in (c + 1)..cols {
                m[r][cc] = (m[rank][c] * m[r][cc] - m[r][c] * m[rank][cc]) / prev;
            }
            m[r][c] = 0;
        }
        prev = m[rank][c];
        rank += 1;
    }
    rank
}

/// Reduced rational homology dimensions of a simplicial complex given by
/// its faces (bitmasks, including the empty face). Returns dims[c] =
/// dim H~_{c-1} for c = 0..=e, i.e. indexed by face cardinality.
fn reduced_homology_dims(faces: &[u32], e: usize) -> Vec<i64> {
    let mut by_card: Vec<Vec<u32>> = vec![Vec::new(); e + 2];
    for &f in faces {
        by_card[f.count_ones() as usize].push(f);
    }
    for v in &mut by_card {
        v.sort_unstable();
    }
    // rank of the boundary map C_c -> C_{c-1} (cardinality c to c-1)
    let mut ranks = vec![0usize; e + 2];
    for c in 1..=e {
        let rows = &by_card[c - 1];
        let cols = &by_card[c];
        if rows.is_empty() || cols.is_empty() {
            continue;
        }
        let mut mat = vec![vec![0i128; cols.len()]; rows.len()];
        for (j, &face) in cols.iter().enumerate() {
            let mut sign = 1i128;
            for bit in 0..e {
                if face & (1 << bit) != 0 {
                    let sub = face & !(1 << bit);
                    let i = rows.binary_search(&sub).expect("downward closed");
                    mat[i][j] = sign;
                    sign = -sign;
                }
            }
        }
        ranks[c] = rank_i128(mat);
    }
    (0..=e)
        .map(|c| by_card[c].len() as i64 - ranks[c] as i64 - ranks[c + 1] as i64)
        .collect()
}

/// Graded Betti numbers of K[H] together with the degree multisets used by
/// the resolution comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    /// entries[i] maps degree d to beta_{i,d} (nonzero entries only),
    /// for i = 0..e-1.
    pub entries: Vec<BTreeMap<i64, i64>>,
    /// Total Betti numbers beta_i.
    pub betti: Vec<i64>,
    /// mu(I_H) = beta_1.
    pub mu: i64,
    /// First-syzygy degrees {a_i}, sorted with multiplicity.
    pub a_degrees: Vec<i64>,
    /// Second-syzygy degrees {b_i}, sorted with multiplicity.
    pub b_degrees: Vec<i64>,
    /// Degrees of the last module; always {f + N : f in PF(H)}.
    pub last_degrees: Vec<i64>,
    /// m_0 = 3(t - 1).
    pub m0: i64,
    /// s = mu - m_0 (meaningful for 4-generated almost symmetric H).
    pub surplus: i64,
}

/// Compute the full graded Betti table by divisor-complex homology,
/// scanning h in H up to F(H) + N.
pub fn graded_betti(h: &NumericalSemigroup) -> Result<BettiTable> {
    let e = h.embedding_dim();
    if e > 6 {
        return Err(Error::precond("graded Betti computation supports e <= 6"));
    }
    let pf = h.pf_data();
    let bound = pf.frobenius + h.generator_sum();
    let mut entries: Vec<BTreeMap<i64, i64>> = vec![BTreeMap::new(); e];
    for d in 0..=bound {
        if !h.contains(d) {
            continue;
        }
        let dc = divisor_complex(h, d);
        let dims = reduced_homology_dims(&dc.faces, e);
        for i in 0..e {
            // beta_{i,d} = dim H~_{i-1}(complex), cardinality index i
            if dims[i] > 0 {
                entries[i].insert(d, dims[i]);
            }
        }
    }
    let betti: Vec<i64> = entries.iter().map(|m| m.values().sum()).collect();
    let expand = |m: &BTreeMap<i64, i64>| -> Vec<i64> {
        let mut v = Vec::new();
        for (&d, &c) in m {
            for _ in 0..c {
                v.push(d);
            }
        }
        v
    };
    let mu = if e >= 2 { betti[1] } else { 0 };
    let a_degrees = if e >= 2 { expand(&entries[1]) } else { Vec::new() };
    let b_degrees = if e >= 3 { expand(&entries[2]) } else { Vec::new() };
    let last_degrees = expand(&entries[e - 1]);
    let m0 = 3 * (pf.semigroup_type as i64 - 1);
    Ok(BettiTable {
        mu,
        a_degrees,
        b_degrees,
        last_degrees,
        m0,
        surplus: mu - m0,
        betti,
        entries,
    })
}

/// Remove the multiset `needles` from `haystack`; None when `needles` is
/// not a sub-multiset.
fn multiset_subtract(haystack: &[i64], needles: &[i64]) -> Option<Vec<i64>> {
    let mut counts: BTreeMap<i64, i64> = BTreeMap::new();
    for &x in haystack {
        *counts.entry(x).or_insert(0) += 1;
    }
    for &x in needles {
        let c = counts.entry(x).or_insert(0);
        *c -= 1;
        if *c < 0 {
            return None;
        }
    }
    let mut rest = Vec::new();
    for (&x, &c) in &counts {
        for _ in 0..c {
            rest.push(x);
        }
    }
    Some(rest)
}

/// Resolution-degree comparison for 4-generated almost symmetric H:
///
/// 1. a sub-multiset A0 of size m_0 of the a-degrees satisfies
///    A0 UNION (F + N - A0) = { f + n_i + n_j : f in PF'(H), i < j };
/// 2. a sub-multiset of the b-degrees of size m_0 + t - 1 equals
///    { f + N - n_i : f in PF'(H), i };
/// 3. the s surplus degrees pair up as a = (F + N) - b_extra.
///
/// The published statement prints the surplus pairing with F alone; the
/// worked examples use F + N, which is what this follows (flagged in the
/// report).
pub fn verify_comparison(h: &NumericalSemigroup) -> Result<StructureReport> {
    let pf = h.pf_data();
    if h.embedding_dim() != 4 {
        return Err(Error::precond("comparison requires exactly 4 generators"));
    }
    if !h.is_almost_symmetric() {
        return Err(Error::precond("comparison requires an almost symmetric semigroup"));
    }
    let table = graded_betti(h)?;
    let gens = h.generators();
    let n = h.generator_sum();
    let fn_total = pf.frobenius + n;
    let mut report = StructureReport::new(format!("resolution degree comparison for {h}"));
    report.push(
        "surplus pairing convention",
        crate::report::Verdict::Pass,
        vec![
            "pairing checked against F(H)+N (the printed statement uses F(H); the worked examples use F(H)+N)"
                .into(),
        ],
    );

    // (2): b-degrees contain {f + N - n_i}
    let mut expected_b: Vec<i64> = Vec::new();
    for &f in &pf.pf_prime {
        for &g in gens {
            expected_b.push(f + n - g);
        }
    }
    expected_b.sort_unstable();
    let b_rest = multiset_subtract(&table.b_degrees, &expected_b);
    report.check(
        "b-degrees contain {f + N - n_i : f in PF'}",
        b_rest.is_some(),
        format!("expected sub-multiset {expected_b:?} of {:?}", table.b_degrees),
    );
    let Some(b_extra) = b_rest else {
        return Ok(report);
    };
    report.check(
        "surplus size",
        b_extra.len() as i64 == table.surplus && table.surplus >= 0,
        format!(
            "mu = {}, m0 = {}, surplus = {}, extra b-degrees {:?}",
            table.mu, table.m0, table.surplus, b_extra
        ),
    );

    // (3): surplus a-degrees are F + N - b for the extra b's
    let a1: Vec<i64> = b_extra.iter().map(|&b| fn_total - b).collect();
    let a0 = multiset_subtract(&table.a_degrees, &a1);
    report.check(
        "surplus pairing a = F + N - b_extra",
        a0.is_some(),
        format!("surplus a-degrees {a1:?} inside {:?}", table.a_degrees),
    );
    let Some(a0) = a0 else {
        return Ok(report);
    };

    // (1): A0 and its reflection tile {f + n_i + n_j}
    let mut expected_a: Vec<i64> = Vec::new();
    for &f in &pf.pf_prime {
        for i in 0..4 {
            for j in (i + 1)..4 {
                expected_a.push(f + gens[i] + gens[j]);
            }
        }
    }
    expected_a.sort_unstable();
    let mut tiled: Vec<i64> = a0.iter().copied().chain(a0.iter().map(|&a| fn_total - a)).collect();
    tiled.sort_unstable();
    report.check(
        "a-degrees + reflections = {f + n_i + n_j : f in PF'}",
        tiled == expected_a && a0.len() as i64 == table.m0,
        format!("A0 = {a0:?}, tiled {tiled:?}, expected {expected_a:?}"),
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::new(gens).unwrap()
    }

    #[test]
    fn cusp_has_one_generator() {
        let h = sg(&[2, 3]);
        let gens = minimal_generators(&h).unwrap();
        assert_eq!(gens.len(), 1);
        assert_eq!(gens[0].degree(), 6);
        assert_eq!(gens[0].plus().coeffs(), &[3, 0]);
        assert_eq!(gens[0].minus().coeffs(), &[0, 2]);
    }

    #[test]
    fn six_generators_for_5_6_8_9() {
        let h = sg(&[5, 6, 8, 9]);
        let gens = minimal_generators(&h).unwrap();
        assert_eq!(gens.len(), 6);
        let expected = [
            Binomial::new(&h, &[3, 0, 0, 0], &[0, 1, 0, 1]).unwrap(),
            Binomial::new(&h, &[0, 3, 0, 0], &[2, 0, 1, 0]).unwrap(),
            Binomial::new(&h, &[0, 0, 2, 0], &[2, 1, 0, 0]).unwrap(),
            Binomial::new(&h, &[0, 0, 0, 2], &[0, 3, 0, 0]).unwrap(),
            Binomial::new(&h, &[1, 2, 0, 0], &[0, 0, 1, 1]).unwrap(),
            Binomial::new(&h, &[1, 0, 0, 1], &[0, 1, 1, 0]).unwrap(),
        ];
        // same ideal: equal cardinality and each printed generator lies in
        // I_H with the printed set generating
        assert!(crate::rf::generates_check(&h, &expected).unwrap());
        let mut got_degrees: Vec<i64> = gens.iter().map(|b| b.degree()).collect();
        let mut want_degrees: Vec<i64> = expected.iter().map(|b| b.degree()).collect();
        got_degrees.sort_unstable();
        want_degrees.sort_unstable();
        assert_eq!(got_degrees, want_degrees);
    }

    #[test]
    fn seven_generators_for_18_21_23_26() {
        let h = sg(&[18, 21, 23, 26]);
        assert_eq!(minimal_generators(&h).unwrap().len(), 7);
    }

    #[test]
    fn betti_table_of_example_621() {
        let h = sg(&[5, 6, 7, 9]);
        let t = graded_betti(&h).unwrap();
        assert_eq!(t.mu, 5);
        let mut a = t.a_degrees.clone();
        a.sort_unstable();
        assert_eq!(a, vec![12, 14, 15, 16, 18]);
        let mut b = t.b_degrees.clone();
        b.sort_unstable();
        assert_eq!(b, vec![21, 22, 23, 24, 25, 26]);
        assert_eq!(t.last_degrees, vec![31, 35]);
        assert_eq!(t.betti, vec![1, 5, 6, 2]);
    }

    #[test]
    fn betti_table_of_example_622() {
        let h = sg(&[18, 21, 23, 26]);
        let t = graded_betti(&h).unwrap();
        assert_eq!(t.mu, 7);
        assert_eq!(t.a_degrees, vec![44, 72, 75, 78, 105, 110, 115]);
        assert_eq!(
            t.b_degrees,
            vec![93, 96, 98, 101, 128, 131, 133, 136, 141]
        );
        assert_eq!(t.m0, 6);
        assert_eq!(t.surplus, 1);
    }

    #[test]
    fn betti_table_of_cusp() {
        let h = sg(&[2, 3]);
        let t = graded_betti(&h).unwrap();
        assert_eq!(t.mu, 1);
        assert_eq!(t.a_degrees, vec![6]);
        assert_eq!(t.last_degrees, vec![6]);
        assert_eq!(t.betti, vec![1, 1]);
        assert_eq!(t.last_degrees.len(), h.pf_data().semigroup_type);
    }

    #[test]
    fn comparison_examples() {
        for gens in [[5i64, 6, 7, 9], [18, 21, 23, 26], [5, 6, 8, 9]] {
            let h = sg(&gens);
            let rep = verify_comparison(&h).unwrap();
            assert!(rep.passed(), "comparison failed for {h}: {rep}");
        }
    }

    #[test]
    fn comparison_rejects_non_almost_symmetric() {
        assert!(verify_comparison(&sg(&[2, 3])).is_err());
    }

    #[test]
    fn betti_last_module_is_pf_shifts() {
        for gens in [
            vec![5i64, 6, 7, 9],
            vec![5, 6, 8, 9],
            vec![7, 12, 13, 22],
            vec![3, 4, 5],
        ] {
            let h = sg(&gens);
            let t = graded_betti(&h).unwrap();
            let pf = h.pf_data();
            let expected: Vec<i64> =
                pf.pf.iter().map(|f| f + h.generator_sum()).collect();
            assert_eq!(t.last_degrees, expected);
            // Euler characteristic of the resolution
            let signed: i64 = t
                .betti
                .iter()
                .enumerate()
                .map(|(i, &b)| if i % 2 == 0 { b } else { -b })
                .sum();
            assert_eq!(signed, 0);
        }
    }

    #[test]
    fn mu_agrees_between_fiber_graphs_and_homology() {
        for gens in [
            vec![5i64, 6, 7, 9],
            vec![5, 6, 8, 9],
            vec![7, 12, 13, 22],
            vec![18, 21, 23, 26],
            vec![3, 4, 5],
            vec![4, 5, 6],
            vec![9, 22, 46, 57],
        ] {
            let h = sg(&gens);
            let gens_list = minimal_generators(&h).unwrap();
            let t = graded_betti(&h).unwrap();
            assert_eq!(gens_list.len() as i64, t.mu, "mu mismatch for {h}");
            // per-degree agreement as well
            let mut by_degree: BTreeMap<i64, i64> = BTreeMap::new();
            for b in &gens_list {
                *by_degree.entry(b.degree()).or_insert(0) += 1;
            }
            assert_eq!(by_degree, t.entries[1], "degree mismatch for {h}");
        }
    }
}
