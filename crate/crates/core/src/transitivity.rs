//! Permutation actions on coordinates and cosets, orbit counting, the
//! complete-transitivity check, and the dual low-weight census.
//!
//! The symmetric group on the `m` indices is always handled through two
//! generators (a transposition and an `m`-cycle); orbit closure under the
//! generated group equals orbit closure under the full group, so the group is
//! never materialized. The coset action routes through stored BFS leaders —
//! any leader works, because a code automorphism maps cosets to cosets —
//! and permutations that do not preserve the code are rejected up front.

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::BitVec;
use crate::code::{CosetTable, LinearCode};
use crate::error::Error;
use crate::families::PairIndex;
use crate::limits;
use crate::uf::UnionFind;

/// A permutation of `{0, …, degree−1}`, stored as its image table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Perm {
    image: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm {
            image: (0..degree as u32).collect(),
        }
    }

    /// Build from an image table, validating bijectivity.
    pub fn from_image(image: Vec<u32>) -> Result<Perm, Error> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v as usize >= n || seen[v as usize] {
                return Err(Error::InvalidParameter("image table is not a bijection"));
            }
            seen[v as usize] = true;
        }
        Ok(Perm { image })
    }

    /// The transposition `(a b)`.
    pub fn transposition(degree: usize, a: usize, b: usize) -> Perm {
        assert!(a < degree && b < degree && a != b);
        let mut p = Perm::identity(degree);
        p.image.swap(a, b);
        p
    }

    /// The full cycle `0 → 1 → … → degree−1 → 0`.
    pub fn cycle(degree: usize) -> Perm {
        assert!(degree >= 1);
        Perm {
            image: (0..degree as u32)
                .map(|i| (i + 1) % degree as u32)
                .collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.image[i] as usize
    }

    pub fn image(&self) -> &[u32] {
        &self.image
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree());
        Perm {
            image: other.image.iter().map(|&i| self.image[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut image = vec![0u32; self.degree()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v as usize] = i as u32;
        }
        Perm { image }
    }
}

/// Two generators of the symmetric group on `m` points (one for `m ≤ 2`).
pub fn symmetric_group_generators(m: usize) -> Vec<Perm> {
    match m {
        0 | 1 => vec![Perm::identity(m)],
        2 => vec![Perm::transposition(2, 0, 1)],
        _ => vec![Perm::transposition(m, 0, 1), Perm::cycle(m)],
    }
}

/// The permutation induced on pair columns by a permutation of the `m`
/// indices: the column for `{i, j}` goes to the column for `{σ(i), σ(j)}`.
/// This is a group homomorphism.
pub fn induced_pair_permutation(m: usize, sigma: &Perm) -> Result<Perm, Error> {
    if sigma.degree() != m {
        return Err(Error::Dimension {
            expected: m,
            got: sigma.degree(),
        });
    }
    let idx = PairIndex::new(m);
    let mut image = vec![0u32; idx.len()];
    for p in 0..idx.len() {
        let (i, j) = idx.pair(p);
        let (a, b) = (sigma.apply(i), sigma.apply(j));
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        image[p] = idx.index_of(a, b) as u32;
    }
    Perm::from_image(image)
}

/// Move coordinates: position `i` of `v` lands at position `tau(i)`.
pub fn permute_coordinates(v: &BitVec, tau: &Perm) -> BitVec {
    assert_eq!(v.len(), tau.degree(), "length mismatch");
    let mut out = BitVec::zeros(v.len());
    for i in 0..v.len() {
        if v.get(i) {
            out.set(tau.apply(i), true);
        }
    }
    out
}

/// Does the coordinate permutation send the code into itself? True iff every
/// generator row, after permutation, still has zero syndrome.
pub fn preserves_code(code: &LinearCode, tau: &Perm) -> Result<bool, Error> {
    if tau.degree() != code.n() {
        return Err(Error::Dimension {
            expected: code.n(),
            got: tau.degree(),
        });
    }
    Ok((0..code.k()).all(|i| code.contains(&permute_coordinates(&code.generator().row(i), tau))))
}

/// The induced action on cosets: permute a stored leader of `s` and read off
/// the new syndrome. Only meaningful when `tau` preserves the code.
pub fn coset_apply(code: &LinearCode, table: &CosetTable, tau: &Perm, s: u32) -> u32 {
    let moved = permute_coordinates(&table.leader(s), tau);
    table.pack_syndrome(&code.syndrome(&moved).expect("degree was checked"))
}

/// Materialize the coset action of `tau` as a permutation of all packed
/// syndromes. Validates that `tau` preserves the code.
pub fn coset_action_vertex_perm(
    code: &LinearCode,
    table: &CosetTable,
    tau: &Perm,
) -> Result<Perm, Error> {
    if !preserves_code(code, tau)? {
        return Err(Error::NotAutomorphism(
            "coordinate permutation does not preserve the code",
        ));
    }
    let image: Vec<u32> = (0..table.size() as u32)
        .map(|s| coset_apply(code, table, tau, s))
        .collect();
    Perm::from_image(image)
}

/// Orbit decomposition of the syndrome space under code-preserving
/// coordinate permutations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    pub orbit_count: usize,
    /// Per-syndrome canonical orbit label: the minimal packed syndrome in the
    /// same orbit. Independent of generator order.
    pub representative: Vec<u32>,
    /// Orbit sizes, listed by increasing representative.
    pub orbit_sizes: Vec<u64>,
}

/// Union-find closure of the coset action of the generated group over all
/// `2^r` syndromes.
pub fn coset_orbit_count(
    code: &LinearCode,
    table: &CosetTable,
    generators: &[Perm],
) -> Result<OrbitReport, Error> {
    let size = table.size();
    let mut uf = UnionFind::new(size);
    for gen in generators {
        let vertex_perm = coset_action_vertex_perm(code, table, gen)?;
        for s in 0..size {
            uf.union(s, vertex_perm.apply(s));
        }
    }
    // Canonical labels: minimum element of each class.
    let mut min_of_root: Vec<u32> = (0..size as u32).collect();
    for s in 0..size {
        let root = uf.find(s);
        if (s as u32) < min_of_root[root] {
            min_of_root[root] = s as u32;
        }
    }
    let representative: Vec<u32> = (0..size).map(|s| min_of_root[uf.find(s)]).collect();
    let mut reps_sorted: Vec<u32> = representative.clone();
    reps_sorted.sort_unstable();
    reps_sorted.dedup();
    let mut size_by_rep = vec![0u64; reps_sorted.len()];
    for &rep in &representative {
        let slot = reps_sorted.binary_search(&rep).expect("rep is present");
        size_by_rep[slot] += 1;
    }
    Ok(OrbitReport {
        orbit_count: reps_sorted.len(),
        representative,
        orbit_sizes: size_by_rep,
    })
}

/// Outcome of the complete-transitivity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CtReport {
    pub completely_transitive: bool,
    pub orbit_count: usize,
    pub rho_plus_1: usize,
    pub orbit_sizes: Vec<u64>,
}

/// Completely transitive iff the orbit count equals `ρ + 1` and every orbit
/// sits inside a single weight class. (Orbit count `ρ + 1` under a subgroup
/// of the automorphism group is already enough for the full group.)
pub fn is_completely_transitive(
    code: &LinearCode,
    table: &CosetTable,
    generators: &[Perm],
) -> Result<CtReport, Error> {
    let orbits = coset_orbit_count(code, table, generators)?;
    let rho_plus_1 = table.covering_radius() + 1;
    let orbits_refine_weights = (0..table.size() as u32)
        .all(|s| table.weight_of(s) == table.weight_of(orbits.representative[s as usize]));
    Ok(CtReport {
        completely_transitive: orbits.orbit_count == rho_plus_1 && orbits_refine_weights,
        orbit_count: orbits.orbit_count,
        rho_plus_1,
        orbit_sizes: orbits.orbit_sizes,
    })
}

/// Dual codewords of one fixed weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualCensus {
    pub count: u64,
    /// The matching codewords (sorted by bit content for determinism),
    /// capped at [`CENSUS_WORD_CAP`] entries; `count` is always exact.
    pub words: Vec<BitVec>,
}

/// Cap on collected census words (the count stays exact regardless).
pub const CENSUS_WORD_CAP: usize = 10_000;

/// Enumerate the whole dual code — the row space of the check matrix, `2^r`
/// words — by a Gray-code walk and count the words of the target weight.
pub fn dual_low_weight_census(code: &LinearCode, weight_target: usize) -> Result<DualCensus, Error> {
    dual_low_weight_census_with_limit(code, weight_target, limits::TABLE_BITS)
}

pub fn dual_low_weight_census_with_limit(
    code: &LinearCode,
    weight_target: usize,
    max_bits: usize,
) -> Result<DualCensus, Error> {
    let max_bits = max_bits.min(limits::TABLE_BITS_HARD);
    let r = code.redundancy();
    if r > max_bits {
        return Err(Error::TooLarge {
            what: "dual enumeration redundancy (bits)",
            value: r,
            limit: max_bits,
        });
    }
    let rows: Vec<BitVec> = (0..r).map(|i| code.check().row(i)).collect();
    let mut current = BitVec::zeros(code.n());
    let mut count = 0u64;
    let mut words = Vec::new();
    let total = 1u64 << r;
    for g in 0..total {
        if g > 0 {
            let flip = g.trailing_zeros() as usize;
            current.xor_assign(&rows[flip]);
        }
        if current.weight() == weight_target {
            count += 1;
            if words.len() < CENSUS_WORD_CAP {
                words.push(current.clone());
            }
        }
    }
    words.sort_by(|a, b| {
        (0..a.len())
            .map(|i| a.get(i))
            .cmp((0..b.len()).map(|i| b.get(i)))
    });
    Ok(DualCensus { count, words })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::CosetTable;
    use crate::families::{build_cm, build_cm_union, build_hm};

    #[test]
    fn induced_transposition_on_pairs_m4() {
        // Swapping the first two indices fixes {0,1} and {2,3} and swaps
        // {0,2}↔{1,2}, {0,3}↔{1,3}.
        let sigma = Perm::transposition(4, 0, 1);
        let tau = induced_pair_permutation(4, &sigma).unwrap();
        let idx = PairIndex::new(4);
        assert_eq!(tau.apply(idx.index_of(0, 1)), idx.index_of(0, 1));
        assert_eq!(tau.apply(idx.index_of(2, 3)), idx.index_of(2, 3));
        assert_eq!(tau.apply(idx.index_of(0, 2)), idx.index_of(1, 2));
        assert_eq!(tau.apply(idx.index_of(0, 3)), idx.index_of(1, 3));
    }

    #[test]
    fn induced_identity_and_cycle() {
        let id = induced_pair_permutation(5, &Perm::identity(5)).unwrap();
        assert_eq!(id, Perm::identity(10));

        // The 4-cycle sends {0,1}→{1,2}→{2,3}→{0,3}→{0,1}.
        let tau = induced_pair_permutation(4, &Perm::cycle(4)).unwrap();
        let idx = PairIndex::new(4);
        let orbit_start = idx.index_of(0, 1);
        let mut p = orbit_start;
        let expected = [
            idx.index_of(1, 2),
            idx.index_of(2, 3),
            idx.index_of(0, 3),
            orbit_start,
        ];
        for e in expected {
            p = tau.apply(p);
            assert_eq!(p, e);
        }
    }

    #[test]
    fn induced_is_homomorphism_spot_check() {
        let s = Perm::transposition(6, 2, 4);
        let t = Perm::cycle(6);
        let lhs = induced_pair_permutation(6, &s.compose(&t)).unwrap();
        let rhs = induced_pair_permutation(6, &s)
            .unwrap()
            .compose(&induced_pair_permutation(6, &t).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn symmetric_generators_preserve_both_families() {
        for m in [5usize, 6, 8] {
            let c = build_cm(m).unwrap();
            for sigma in symmetric_group_generators(m) {
                let tau = induced_pair_permutation(m, &sigma).unwrap();
                assert_eq!(preserves_code(&c, &tau), Ok(true));
            }
        }
        for m in [6usize, 8] {
            let u = build_cm_union(m).unwrap();
            for sigma in symmetric_group_generators(m) {
                let tau = induced_pair_permutation(m, &sigma).unwrap();
                assert_eq!(preserves_code(&u, &tau), Ok(true));
            }
        }
    }

    #[test]
    fn a_lone_column_swap_does_not_preserve_c4() {
        // Swapping only the columns {0,1} and {0,2} is not induced by any
        // index permutation and breaks the code.
        let c = build_cm(4).unwrap();
        let idx = PairIndex::new(4);
        let tau = Perm::transposition(6, idx.index_of(0, 1), idx.index_of(0, 2));
        assert_eq!(preserves_code(&c, &tau), Ok(false));
    }

    #[test]
    fn coset_action_preserves_weight() {
        let m = 6;
        let c = build_cm(m).unwrap();
        let t = CosetTable::build(&c).unwrap();
        for sigma in symmetric_group_generators(m) {
            let tau = induced_pair_permutation(m, &sigma).unwrap();
            let vp = coset_action_vertex_perm(&c, &t, &tau).unwrap();
            for s in 0..t.size() {
                assert_eq!(t.weight_of(s as u32), t.weight_of(vp.apply(s) as u32));
            }
        }
    }

    #[test]
    fn c6_has_rho_plus_one_orbits() {
        let m = 6;
        let c = build_cm(m).unwrap();
        let t = CosetTable::build(&c).unwrap();
        let gens: Vec<Perm> = symmetric_group_generators(m)
            .iter()
            .map(|s| induced_pair_permutation(m, s).unwrap())
            .collect();
        let report = is_completely_transitive(&c, &t, &gens).unwrap();
        assert!(report.completely_transitive);
        assert_eq!(report.orbit_count, 4);
        assert_eq!(report.orbit_sizes, vec![1, 15, 15, 1]);
    }

    #[test]
    fn identity_only_generators_fail_transitivity() {
        // A code with no exploited symmetry: identity generators give one
        // orbit per syndrome.
        let c = build_cm(4).unwrap();
        let t = CosetTable::build(&c).unwrap();
        let report =
            is_completely_transitive(&c, &t, &[Perm::identity(c.n())]).unwrap();
        assert!(!report.completely_transitive);
        assert_eq!(report.orbit_count, t.size());
    }

    #[test]
    fn non_preserving_generator_is_rejected() {
        let c = build_cm(4).unwrap();
        let t = CosetTable::build(&c).unwrap();
        let idx = PairIndex::new(4);
        let bad = Perm::transposition(6, idx.index_of(0, 1), idx.index_of(0, 2));
        assert!(matches!(
            coset_orbit_count(&c, &t, &[bad]),
            Err(Error::NotAutomorphism(_))
        ));
    }

    #[test]
    fn dual_census_counts_check_rows() {
        // All weight-(m−1) dual words are exactly the rows of the raw check.
        for m in [5usize, 6] {
            let c = build_cm(m).unwrap();
            let census = dual_low_weight_census(&c, m - 1).unwrap();
            assert_eq!(census.count, m as u64, "m = {m}");
            let h = build_hm(m).unwrap();
            for i in 0..m {
                assert!(
                    census.words.contains(&h.row(i)),
                    "raw check row {i} missing from census at m = {m}"
                );
            }
        }
        // No weight-1 dual words: no coordinate is identically checked.
        let c6 = build_cm(6).unwrap();
        assert_eq!(dual_low_weight_census(&c6, 1).unwrap().count, 0);
    }
}
