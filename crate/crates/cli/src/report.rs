//! The JSON verification report. Field order is fixed by declaration order
//! and every value is a pure function of (family, m, selected sections), so
//! identical invocations serialize byte-identically. Timing never goes into
//! the report; the binary prints it to stderr.

use serde::Serialize;

use crclab_core::graph::{SpectrumReport, SpectrumSource};
use crclab_core::regularity::Violation;

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub family: &'static str,
    pub m: usize,
    pub parameters: ParamsSection,
    pub cover: CoverSection,
    pub cr: Option<CrSection>,
    pub ct: Option<CtSection>,
    pub inverse_array: Option<InverseSection>,
    pub weight_reflection: Option<ReflectionSection>,
    pub graph: Option<GraphSection>,
    pub spectra: Option<SpectraSection>,
    /// Assertion rows in a fixed order: `[name, passed]`.
    pub checks: Vec<(&'static str, bool)>,
    pub passed: bool,
}

#[derive(Debug, Serialize)]
pub struct Params {
    pub n: usize,
    pub k: usize,
    /// Measured minimum distance; null if it exceeded the search bound.
    pub d: Option<usize>,
    pub rho: usize,
}

#[derive(Debug, Serialize)]
pub struct ParamsSection {
    pub measured: Params,
    pub closed_form: Params,
    pub agrees: bool,
    pub coset_weight_distribution: Vec<u64>,
}

/// Covering-set shape (the code-level antipodality dichotomy): is the top
/// weight attained by a single coset, and is that coset the all-ones
/// translate?
#[derive(Debug, Serialize)]
pub struct CoverSection {
    pub single_top_coset: bool,
    pub witness: Option<u32>,
    pub covers_all_ones: bool,
    /// What the parity of m predicts for `single_top_coset`.
    pub expected_single: bool,
}

#[derive(Debug, Serialize)]
pub struct ViolationRow {
    pub syndrome: u32,
    pub level: usize,
    pub c_seen: u64,
    pub b_seen: u64,
    pub c_expected: u64,
    pub b_expected: u64,
}

impl From<&Violation> for ViolationRow {
    fn from(v: &Violation) -> ViolationRow {
        ViolationRow {
            syndrome: v.syndrome,
            level: v.level as usize,
            c_seen: v.c_seen,
            b_seen: v.b_seen,
            c_expected: v.c_expected,
            b_expected: v.b_expected,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CrSection {
    pub cr: bool,
    pub rho: usize,
    pub b: Vec<u64>,
    pub c: Vec<u64>,
    pub violations: Vec<ViolationRow>,
    pub array_matches_closed_form: bool,
    /// Union family only: does the measured array also equal the union
    /// transform of the pair family's closed-form array?
    pub array_matches_union_transform: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct CensusSection {
    pub weight: usize,
    pub count: u64,
    /// Do the census words coincide exactly with the defining check rows?
    pub matches_defining_rows: bool,
}

#[derive(Debug, Serialize)]
pub struct CtSection {
    pub orbits: usize,
    pub rho_plus_1: usize,
    pub ct: bool,
    pub orbit_sizes: Vec<u64>,
    /// Pair family only.
    pub dual_census: Option<CensusSection>,
}

#[derive(Debug, Serialize)]
pub struct InverseSection {
    pub b: Vec<u64>,
    pub c: Vec<u64>,
    /// Measured covering-coset view equals the inverse array.
    pub verified: bool,
}

#[derive(Debug, Serialize)]
pub struct ReflectionSection {
    /// weight(s) + weight(s ⊕ t₁) = ρ for every syndrome s, where t₁ is the
    /// all-ones syndrome.
    pub holds: bool,
}

#[derive(Debug, Serialize)]
pub struct DrgSection {
    pub distance_regular: bool,
    pub b: Vec<u64>,
    pub c: Vec<u64>,
    pub matches_code_array: bool,
    pub violations: usize,
}

#[derive(Debug, Serialize)]
pub struct PrimitivitySection {
    pub connected_per_distance: Vec<bool>,
    pub primitive: bool,
}

#[derive(Debug, Serialize)]
pub struct AntipodalitySection {
    pub antipodal: bool,
    pub class_count: usize,
    pub max_class_size: usize,
}

#[derive(Debug, Serialize)]
pub struct FoldSection {
    /// fold of this graph is isomorphic to the union-family graph under the
    /// canonical class-to-union-syndrome relabeling.
    pub isomorphic_to_union: bool,
}

#[derive(Debug, Serialize)]
pub struct GraphSection {
    pub vertices: usize,
    pub valency: usize,
    pub edges: usize,
    pub diameter: usize,
    pub warning: Option<String>,
    pub drg: DrgSection,
    /// Null when the pair-orbit guard skipped the stage.
    pub dt: Option<bool>,
    pub primitivity: PrimitivitySection,
    pub antipodality: AntipodalitySection,
    /// Pair family, even m ≥ 6 only.
    pub fold: Option<FoldSection>,
    /// Pair family only: identity-map isomorphism with the halved m-cube.
    pub halved_cube: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct SpectrumJson {
    pub source: &'static str,
    pub eigs: Vec<(i64, u64)>,
    pub noninteger_intervals: Vec<(i64, i64)>,
}

impl From<&SpectrumReport> for SpectrumJson {
    fn from(s: &SpectrumReport) -> SpectrumJson {
        SpectrumJson {
            source: match s.source {
                SpectrumSource::CharacterSum => "character_sum",
                SpectrumSource::IntersectionMatrix => "intersection_matrix",
            },
            eigs: s.eigs.clone(),
            noninteger_intervals: s.noninteger_intervals.clone(),
        }
    }
}

/// The closed-form eigenvalue audit: reported, never asserted.
#[derive(Debug, Serialize)]
pub struct AuditSection {
    pub candidates: Vec<i64>,
    pub oracle: Vec<i64>,
    pub agree: bool,
}

#[derive(Debug, Serialize)]
pub struct SpectraSection {
    pub character: SpectrumJson,
    /// Null if the code measured as not completely regular (no array).
    pub intersection_matrix: Option<SpectrumJson>,
    pub sets_agree: bool,
    pub multiplicity_sum: u64,
    pub weighted_sum: i64,
    /// Union family only.
    pub formula_audit: Option<AuditSection>,
}
