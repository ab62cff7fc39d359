//! Cross-validation of the fast table machinery against independent oracles:
//! exhaustive vector-space enumeration for coset weights and minimum
//! distance, the closed forms for the pair and union families, the
//! halved-cube spectrum for the character oracle, and agreement between the
//! two spectrum oracles.

use std::collections::BTreeMap;

use crclab_core::bits::BitVec;
use crclab_core::code::{
    extend_with_parity, minimum_distance_upto, CosetTable, LinearCode, MinDistance,
};
use crclab_core::families::{
    build_cm, build_cm_union, build_hm, closed_form_cm, closed_form_cm_union,
};
use crclab_core::graph::{array_spectrum, build_coset_graph, character_spectrum};
use crclab_core::regularity::intersection_profile;
use crclab_core::transitivity::{
    coset_orbit_count, induced_pair_permutation, symmetric_group_generators,
};

/// Coset weights by brute force: enumerate all 2^n vectors and keep the
/// minimum weight per packed syndrome. Only sensible for n ≤ ~22.
fn brute_force_coset_weights(code: &LinearCode) -> Vec<u32> {
    let n = code.n();
    let r = code.redundancy();
    assert!(n <= 24, "brute force oracle is exponential in n");
    let cols: Vec<u32> = (0..n)
        .map(|j| code.check().column(j).pack_u32())
        .collect();
    let mut best = vec![u32::MAX; 1 << r];
    for x in 0u64..1 << n {
        let mut s = 0u32;
        let mut bits = x;
        while bits != 0 {
            s ^= cols[bits.trailing_zeros() as usize];
            bits &= bits - 1;
        }
        let w = x.count_ones();
        if w < best[s as usize] {
            best[s as usize] = w;
        }
    }
    best
}

/// Minimum distance by exhaustive codeword enumeration (nonzero minimum
/// weight); only sensible for k ≤ ~16.
fn brute_force_min_distance(code: &LinearCode) -> usize {
    let k = code.k();
    assert!(k <= 16 && k >= 1);
    let mut best = usize::MAX;
    for x in 1u64..1 << k {
        let mut word = BitVec::zeros(code.n());
        for i in 0..k {
            if x >> i & 1 == 1 {
                word.xor_assign(&code.generator().row(i));
            }
        }
        best = best.min(word.weight());
    }
    best
}

#[test]
fn table_weights_match_exhaustive_enumeration() {
    let mut subjects: Vec<LinearCode> = Vec::new();
    for m in 3..=7 {
        subjects.push(build_cm(m).unwrap());
    }
    subjects.push(build_cm_union(6).unwrap());
    subjects.push(extend_with_parity(&build_cm_union(6).unwrap()));
    for code in subjects {
        let table = CosetTable::build(&code).unwrap();
        let brute = brute_force_coset_weights(&code);
        assert_eq!(brute.len(), table.size());
        for (s, &w) in brute.iter().enumerate() {
            assert_eq!(
                table.weight_of(s as u32) as u32,
                w,
                "coset weight mismatch at syndrome {s} (n = {})",
                code.n()
            );
        }
    }
}

#[test]
fn min_distance_matches_exhaustive_enumeration() {
    for m in 3..=6 {
        let code = build_cm(m).unwrap();
        let brute = brute_force_min_distance(&code);
        assert_eq!(brute, 3);
        assert_eq!(minimum_distance_upto(&code, 4), MinDistance::Exact(3));
    }
    let union6 = build_cm_union(6).unwrap();
    assert_eq!(brute_force_min_distance(&union6), 3);
    assert_eq!(
        minimum_distance_upto(&union6, 4),
        MinDistance::Exact(3)
    );
    let ext = extend_with_parity(&union6);
    assert_eq!(brute_force_min_distance(&ext), 4);
    assert_eq!(minimum_distance_upto(&ext, 4), MinDistance::Exact(4));
}

/// The raw syndrome of a coset leader of the pair code is an even-weight
/// vector whose weight is exactly twice the coset weight, so the coset
/// weight enumerator is the even half of the binomial row.
#[test]
fn pair_code_coset_weights_read_off_raw_syndromes() {
    for m in 3..=10 {
        let code = build_cm(m).unwrap();
        let table = CosetTable::build(&code).unwrap();
        let raw = build_hm(m).unwrap();
        for s in 0..table.size() as u32 {
            let label = table.leader_image_packed(&raw, s).unwrap();
            assert_eq!(label.count_ones() % 2, 0, "raw syndromes have even weight");
            assert_eq!(
                table.weight_of(s) as u32,
                label.count_ones() / 2,
                "coset weight is half the raw syndrome weight (m = {m}, s = {s})"
            );
        }
        let dist = table.weight_distribution();
        for (w, &count) in dist.iter().enumerate() {
            let expected = binomial(m as u64, 2 * w as u64);
            assert_eq!(count, expected, "distribution[{w}] at m = {m}");
        }
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[test]
fn closed_forms_match_measurement_over_the_full_range() {
    for m in 3..=12 {
        let spec = closed_form_cm(m).unwrap();
        let code = build_cm(m).unwrap();
        let table = CosetTable::build(&code).unwrap();
        assert_eq!((code.n(), code.k()), (spec.n, spec.k));
        assert_eq!(table.covering_radius(), spec.rho);
        assert_eq!(minimum_distance_upto(&code, 4), MinDistance::Exact(spec.d));
        let rep = intersection_profile(&table);
        assert!(rep.completely_regular, "pair code must be regular at m = {m}");
        assert_eq!(rep.array.unwrap(), spec.array);
    }
    for m in [6usize, 8, 10, 12] {
        let spec = closed_form_cm_union(m).unwrap();
        let code = build_cm_union(m).unwrap();
        let table = CosetTable::build(&code).unwrap();
        assert_eq!((code.n(), code.k()), (spec.n, spec.k));
        assert_eq!(table.covering_radius(), spec.rho);
        assert_eq!(minimum_distance_upto(&code, 4), MinDistance::Exact(spec.d));
        let rep = intersection_profile(&table);
        assert!(rep.completely_regular, "union code must be regular at m = {m}");
        assert_eq!(rep.array.unwrap(), spec.array);
    }
}

#[test]
fn orbit_counts_match_radius_over_the_full_range() {
    for m in 3..=12 {
        let code = build_cm(m).unwrap();
        let table = CosetTable::build(&code).unwrap();
        let gens: Vec<_> = symmetric_group_generators(m)
            .iter()
            .map(|s| induced_pair_permutation(m, s).unwrap())
            .collect();
        let rep = coset_orbit_count(&code, &table, &gens).unwrap();
        assert_eq!(rep.orbit_count, table.covering_radius() + 1, "m = {m}");
    }
    for m in [6usize, 8, 10, 12] {
        let code = build_cm_union(m).unwrap();
        let table = CosetTable::build(&code).unwrap();
        let gens: Vec<_> = symmetric_group_generators(m)
            .iter()
            .map(|s| induced_pair_permutation(m, s).unwrap())
            .collect();
        let rep = coset_orbit_count(&code, &table, &gens).unwrap();
        assert_eq!(rep.orbit_count, table.covering_radius() + 1, "union m = {m}");
    }
}

/// The character oracle must reproduce the halved-cube spectrum: eigenvalue
/// `(m−2j)²/2 − m/2` with multiplicity `binom(m,j)`, except that for even
/// `m` the middle `j = m/2` contributes only half its binomial (the halved
/// cube identifies complementary splits).
#[test]
fn pair_code_spectrum_is_the_halved_cube_spectrum() {
    for m in 4..=10usize {
        let code = build_cm(m).unwrap();
        let spec = character_spectrum(&code).unwrap();
        let mut expected: BTreeMap<i64, u64> = BTreeMap::new();
        for j in 0..=m / 2 {
            // (m−2j)² and m share parity, so the half is exact.
            let lambda = ((m as i64 - 2 * j as i64).pow(2) - m as i64) / 2;
            let mult = if m % 2 == 0 && j == m / 2 {
                binomial(m as u64, j as u64) / 2
            } else {
                binomial(m as u64, j as u64)
            };
            *expected.entry(lambda).or_insert(0) += mult;
        }
        let measured: BTreeMap<i64, u64> = spec.eigs.iter().copied().collect();
        assert_eq!(measured, expected, "m = {m}");
    }
}

#[test]
fn spectrum_oracles_agree_and_are_balanced() {
    let mut graphs: Vec<(String, LinearCode)> = Vec::new();
    for m in 4..=10 {
        graphs.push((format!("pair m={m}"), build_cm(m).unwrap()));
    }
    for m in [6usize, 8, 10] {
        graphs.push((format!("union m={m}"), build_cm_union(m).unwrap()));
    }
    for (name, code) in graphs {
        let table = CosetTable::build(&code).unwrap();
        let g = build_coset_graph(&code, &table).unwrap();
        let drg = crclab_core::graph::distance_regular_check(&g).unwrap();
        assert!(drg.distance_regular, "{name}");
        let chars = character_spectrum(&code).unwrap();
        let matrix = array_spectrum(&drg.array.unwrap()).unwrap();
        assert!(matrix.noninteger_intervals.is_empty(), "{name}");
        let char_set: Vec<i64> = chars.eigs.iter().map(|&(v, _)| v).collect();
        let matrix_set: Vec<i64> = matrix.eigs.iter().map(|&(v, _)| v).collect();
        assert_eq!(char_set, matrix_set, "{name}: oracles must agree as sets");
        let total: u64 = chars.eigs.iter().map(|&(_, m)| m).sum();
        assert_eq!(total as usize, g.vertex_count(), "{name}");
        let weighted: i64 = chars.eigs.iter().map(|&(v, m)| v * m as i64).sum();
        assert_eq!(weighted, 0, "{name}: trace of an adjacency matrix");
    }
}
