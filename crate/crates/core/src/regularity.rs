//! Brute-force verification of complete regularity, measured intersection
//! arrays, and the array transformations (reversal for the covering-set view,
//! merge for the union with the covering set).
//!
//! All checking happens on syndromes, not on the `2^n` ambient vectors: for a
//! linear code the neighbor counts of a vector depend only on its syndrome,
//! so the per-coset counts are exact, not a sampling shortcut. Violations are
//! collected exhaustively up to a cap so near-miss constructions stay
//! diagnosable.

use alloc::vec::Vec;

use crate::code::{
    nonantipodal_with_coset_cover, translate_view, CosetTable, LinearCode, TranslateView,
};
use crate::error::Error;

/// Cap on the number of reported violations per check.
pub const VIOLATION_CAP: usize = 100;

/// The intersection array `(b_0, …, b_{ρ−1}; c_1, …, c_ρ)` of an equitable
/// distance partition, with the valency kept for computing `a_l`.
///
/// Index conventions: `b[l]` is `b_l` for `l` in `0..ρ`; `c[l−1]` is `c_l`
/// for `l` in `1..=ρ`; the boundary values `c_0` and `b_ρ` are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionArray {
    pub rho: usize,
    pub b: Vec<u64>,
    pub c: Vec<u64>,
    pub valency: u64,
}

impl IntersectionArray {
    pub fn new(valency: u64, b: Vec<u64>, c: Vec<u64>) -> Self {
        assert_eq!(b.len(), c.len(), "b and c must both have ρ entries");
        IntersectionArray {
            rho: b.len(),
            b,
            c,
            valency,
        }
    }

    /// `b_l`, with `b_ρ = 0`.
    pub fn b_at(&self, l: usize) -> u64 {
        if l < self.rho {
            self.b[l]
        } else {
            0
        }
    }

    /// `c_l`, with `c_0 = 0`.
    pub fn c_at(&self, l: usize) -> u64 {
        if l == 0 {
            0
        } else {
            self.c[l - 1]
        }
    }

    /// `a_l = valency − b_l − c_l` (may be negative for inconsistent data).
    pub fn a_at(&self, l: usize) -> i64 {
        self.valency as i64 - self.b_at(l) as i64 - self.c_at(l) as i64
    }

    /// All interior entries positive and every `a_l` nonnegative.
    pub fn is_consistent(&self) -> bool {
        self.b.iter().all(|&x| x > 0)
            && self.c.iter().all(|&x| x > 0)
            && (0..=self.rho).all(|l| self.a_at(l) >= 0)
    }
}

/// One coset whose neighbor counts disagree with its level's first-seen pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub syndrome: u32,
    pub level: u16,
    pub c_seen: u64,
    pub b_seen: u64,
    pub c_expected: u64,
    pub b_expected: u64,
}

/// Outcome of the exhaustive per-coset neighbor count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityReport {
    pub completely_regular: bool,
    /// Present exactly when the partition is equitable.
    pub array: Option<IntersectionArray>,
    pub violations: Vec<Violation>,
}

/// Exhaustive complete-regularity check of a code via its coset table.
pub fn intersection_profile(table: &CosetTable) -> RegularityReport {
    profile_impl(table.size(), table.columns(), |s| table.weight_of(s))
}

/// The same check for the coset-weight view of a translate `C + t`.
pub fn intersection_profile_of_view(view: &TranslateView<'_>) -> RegularityReport {
    profile_impl(view.size(), view.table().columns(), |s| view.weight_of(s))
}

fn profile_impl(
    size: usize,
    cols: &[u32],
    weight_of: impl Fn(u32) -> usize,
) -> RegularityReport {
    let rho = (0..size as u32).map(&weight_of).max().unwrap_or(0);
    // First-seen (c, b) pair per level.
    let mut expected: Vec<Option<(u64, u64)>> = alloc::vec![None; rho + 1];
    let mut violations = Vec::new();
    for s in 0..size as u32 {
        let l = weight_of(s);
        let mut c = 0u64;
        let mut b = 0u64;
        for &h in cols {
            let w = weight_of(s ^ h);
            if l > 0 && w == l - 1 {
                c += 1;
            } else if w == l + 1 {
                b += 1;
            }
        }
        match expected[l] {
            None => expected[l] = Some((c, b)),
            Some((ce, be)) => {
                if (c, b) != (ce, be) && violations.len() < VIOLATION_CAP {
                    violations.push(Violation {
                        syndrome: s,
                        level: l as u16,
                        c_seen: c,
                        b_seen: b,
                        c_expected: ce,
                        b_expected: be,
                    });
                }
            }
        }
    }
    let completely_regular = violations.is_empty();
    let array = if completely_regular {
        let b: Vec<u64> = (0..rho)
            .map(|l| expected[l].expect("every level is populated").1)
            .collect();
        let c: Vec<u64> = (1..=rho)
            .map(|l| expected[l].expect("every level is populated").0)
            .collect();
        Some(IntersectionArray::new(cols.len() as u64, b, c))
    } else {
        None
    };
    RegularityReport {
        completely_regular,
        array,
        violations,
    }
}

/// The array of the covering-set view: `b'_i = c_{ρ−i}`, `c'_i = b_{ρ−i}`.
/// Applying it twice gives back the original array.
pub fn inverse_array(arr: &IntersectionArray) -> IntersectionArray {
    let rho = arr.rho;
    let b: Vec<u64> = (0..rho).map(|i| arr.c_at(rho - i)).collect();
    let c: Vec<u64> = (1..=rho).map(|i| arr.b_at(rho - i)).collect();
    IntersectionArray::new(arr.valency, b, c)
}

/// Measure the covering-set view of a non-antipodal code and compare it with
/// `inverse_array` of the code's own measured array.
///
/// Errors when the covering set is not the all-ones coset or the base code is
/// not completely regular (the statement presupposes both).
pub fn verify_inverse_array(code: &LinearCode, table: &CosetTable) -> Result<bool, Error> {
    let cover = nonantipodal_with_coset_cover(code, table);
    if !(cover.single_top_coset && cover.covers_all_ones) {
        return Err(Error::NotApplicable(
            "covering set is not the all-ones coset",
        ));
    }
    let base = intersection_profile(table);
    let Some(base_array) = base.array else {
        return Err(Error::NotApplicable("base code is not completely regular"));
    };
    let ones = crate::bits::BitVec::ones(code.n());
    let view = translate_view(table, code, &ones)?;
    let measured = intersection_profile_of_view(&view);
    Ok(match measured.array {
        Some(view_array) => view_array == inverse_array(&base_array),
        None => false,
    })
}

fn union_compatibility(arr: &IntersectionArray) -> Result<(), Error> {
    let rho = arr.rho;
    for s in 0..=rho / 2 {
        if rho - s == s {
            continue;
        }
        if arr.c_at(s) != arr.b_at(rho - s) || arr.b_at(s) != arr.c_at(rho - s) {
            return Err(Error::NotApplicable(
                "levels merged by the union have mismatched neighbor counts",
            ));
        }
    }
    Ok(())
}

/// The array of `C ∪ C(ρ)` derived from the array of `C`.
///
/// Levels `s` and `ρ−s` merge, so the new radius is `ρ_a = ⌊ρ/2⌋` and the
/// merge is only equitable under the cross conditions `c_s = b_{ρ−s}` and
/// `b_s = c_{ρ−s}`, which are checked. Below the top level the entries carry
/// over unchanged. At the top level `s = ρ_a`:
///
/// * `ρ` even — levels `ρ/2 − 1` and `ρ/2 + 1` both sit one step down, so
///   `c^a = c_s + b_s`, and `b^a = 0`;
/// * `ρ` odd — the two merged cells `s` and `s+1` each keep a single downward
///   transition (`c_s` resp. `b_{s+1}`, equal by the cross condition), so
///   `c^a = c_s` and `b^a = 0`.
pub fn union_array(arr: &IntersectionArray) -> Result<IntersectionArray, Error> {
    union_compatibility(arr)?;
    let rho_a = arr.rho / 2;
    // b gains no top entry: b^a at the new radius is zero by definition.
    let b: Vec<u64> = (0..rho_a).map(|s| arr.b_at(s)).collect();
    let mut c: Vec<u64> = (1..rho_a).map(|s| arr.c_at(s)).collect();
    if rho_a > 0 {
        if arr.rho % 2 == 0 {
            c.push(arr.c_at(rho_a) + arr.b_at(rho_a));
        } else {
            c.push(arr.c_at(rho_a));
        }
    }
    Ok(IntersectionArray::new(arr.valency, b, c))
}

/// Foil variant of [`union_array`] with the odd-`ρ` top transition
/// transposed: it sets the top `c^a` to zero (the downward count moved into
/// the upward slot). This reading looks plausible on paper but is wrong — a
/// partition's top level must always have a way down — and it is kept so the
/// measurement harness can demonstrate that it disagrees with the exhaustive
/// profile of the union code (see the negative tests).
pub fn union_array_transposed_top(arr: &IntersectionArray) -> Result<IntersectionArray, Error> {
    union_compatibility(arr)?;
    let rho_a = arr.rho / 2;
    let b: Vec<u64> = (0..rho_a).map(|s| arr.b_at(s)).collect();
    let mut c: Vec<u64> = (1..rho_a).map(|s| arr.c_at(s)).collect();
    if rho_a > 0 {
        if arr.rho % 2 == 0 {
            c.push(arr.c_at(rho_a) + arr.b_at(rho_a));
        } else {
            c.push(0);
        }
    }
    Ok(IntersectionArray::new(arr.valency, b, c))
}

/// The weight-reflection identity of non-antipodal completely regular codes:
/// for every syndrome, `weight(s) + weight(s ⊕ t) = ρ`, where `t` is the
/// syndrome of the all-ones vector.
pub fn weight_reflection_holds(table: &CosetTable, t: u32) -> bool {
    let rho = table.covering_radius();
    (0..table.size() as u32).all(|s| table.weight_of(s) + table.weight_of(s ^ t) == rho)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{extend_with_parity, CosetTable};
    use crate::families::{build_cm, build_cm_union, closed_form_cm};

    #[test]
    fn c6_is_completely_regular_with_known_array() {
        let t = CosetTable::build(&build_cm(6).unwrap()).unwrap();
        let rep = intersection_profile(&t);
        assert!(rep.completely_regular);
        let arr = rep.array.unwrap();
        assert_eq!(arr.b, vec![15, 6, 1]);
        assert_eq!(arr.c, vec![1, 6, 15]);
        assert!(arr.is_consistent());
    }

    #[test]
    fn union8_is_completely_regular_with_known_array() {
        let u = build_cm_union(8).unwrap();
        let t = CosetTable::build(&u).unwrap();
        let rep = intersection_profile(&t);
        assert!(rep.completely_regular);
        let arr = rep.array.unwrap();
        assert_eq!(arr.b, vec![28, 15]);
        assert_eq!(arr.c, vec![1, 12]);
    }

    /// Regularity of the parity extension splits on whether the union code
    /// is perfect. At m = 6 the union code is a [15,11,3] Hamming code, so
    /// its extension is the [16,11,4] extended Hamming code — completely
    /// regular with array (16,15;1,16), as a direct neighbor count of the
    /// 32 extended syndromes confirms. From m = 8 on the union code is not
    /// perfect and the extension measurably fails complete regularity.
    #[test]
    fn extension_regularity_splits_at_the_perfect_case() {
        let ext6 = extend_with_parity(&build_cm_union(6).unwrap());
        let rep = intersection_profile(&CosetTable::build(&ext6).unwrap());
        assert!(rep.completely_regular);
        let arr = rep.array.unwrap();
        assert_eq!(arr.b, vec![16, 15]);
        assert_eq!(arr.c, vec![1, 16]);

        for m in [8usize, 10] {
            let u = build_cm_union(m).unwrap();
            let ext = extend_with_parity(&u);
            let t = CosetTable::build(&ext).unwrap();
            let rep = intersection_profile(&t);
            assert!(
                !rep.completely_regular,
                "parity extension must break regularity at m = {m}"
            );
            assert!(!rep.violations.is_empty());
        }
    }

    #[test]
    fn inverse_array_bookkeeping() {
        // ρ = 2 example: b = (10, 3), c = (1, 6).
        let arr = IntersectionArray::new(10, vec![10, 3], vec![1, 6]);
        let inv = inverse_array(&arr);
        assert_eq!(inv.b, vec![6, 1]);
        assert_eq!(inv.c, vec![3, 10]);
        // Involution.
        assert_eq!(inverse_array(&inv), arr);
        // The self-mirrored array of m = 6 is its own inverse.
        let arr6 = IntersectionArray::new(15, vec![15, 6, 1], vec![1, 6, 15]);
        assert_eq!(inverse_array(&arr6), arr6);
    }

    #[test]
    fn verify_inverse_array_even_m() {
        for m in [6usize, 8] {
            let c = build_cm(m).unwrap();
            let t = CosetTable::build(&c).unwrap();
            assert_eq!(verify_inverse_array(&c, &t), Ok(true), "m = {m}");
        }
        // Odd m: precondition fails.
        let c5 = build_cm(5).unwrap();
        let t5 = CosetTable::build(&c5).unwrap();
        assert!(verify_inverse_array(&c5, &t5).is_err());
    }

    #[test]
    fn union_array_examples() {
        // m = 8: ρ = 4 even; top level merges c and b.
        let arr = closed_form_cm(8).unwrap().array;
        let ua = union_array(&arr).unwrap();
        assert_eq!(ua.b, vec![28, 15]);
        assert_eq!(ua.c, vec![1, 12]);
        // m = 10: ρ = 5 odd; top level keeps its downward count.
        let arr = closed_form_cm(10).unwrap().array;
        let ua = union_array(&arr).unwrap();
        assert_eq!(ua.b, vec![45, 28]);
        assert_eq!(ua.c, vec![1, 6]);
        // m = 6: ρ = 3 odd.
        let arr = closed_form_cm(6).unwrap().array;
        let ua = union_array(&arr).unwrap();
        assert_eq!(ua.b, vec![15]);
        assert_eq!(ua.c, vec![1]);
    }

    #[test]
    fn transposed_top_variant_is_detectably_wrong_for_odd_radius() {
        for m in [6usize, 10] {
            let arr = closed_form_cm(m).unwrap().array;
            let foil = union_array_transposed_top(&arr).unwrap();
            let u = build_cm_union(m).unwrap();
            let t = CosetTable::build(&u).unwrap();
            let measured = intersection_profile(&t).array.unwrap();
            assert_ne!(
                foil, measured,
                "the transposed top reading must be rejected by measurement at m = {m}"
            );
            assert_eq!(*foil.c.last().unwrap(), 0, "the foil's fingerprint");
        }
    }

    #[test]
    fn union_array_rejects_incompatible_input() {
        // An array violating the cross conditions.
        let arr = IntersectionArray::new(6, vec![6, 2], vec![1, 5]);
        assert!(union_array(&arr).is_err());
    }

    #[test]
    fn weight_reflection_even_m() {
        for m in [6usize, 8] {
            let c = build_cm(m).unwrap();
            let t = CosetTable::build(&c).unwrap();
            let t1 = t.pack_syndrome(&c.all_ones_syndrome());
            assert!(weight_reflection_holds(&t, t1), "m = {m}");
        }
    }
}
