//! The verification runner: builds the code and its coset table once, then
//! computes the requested report sections (independent of one another) on a
//! small thread pool, and assembles the deterministic report.
//!
//! Parallelism is section-level: each worker takes every k-th section from
//! the fixed section list. `CRCLAB_THREADS` caps the worker count. Results
//! are assembled in fixed order regardless of completion order, so the
//! emitted JSON does not depend on scheduling.

use std::time::{Duration, Instant};

use crclab_core::code::{
    minimum_distance_upto, nonantipodal_with_coset_cover, CosetTable, LinearCode, MinDistance,
};
use crclab_core::families::{build_cm_union_with_limit, build_hm, closed_form_cm, closed_form_cm_union};
use crclab_core::graph::{
    antipodality_check, array_spectrum, audit_union_eigenvalues, build_coset_graph_with_limit,
    character_spectrum_with_limit, distance_regular_check, distance_transitive_check_with_limit,
    fold, graphs_isomorphic_by_map, halved_cube_isomorphism_check, primitivity_check,
    translation_perm, Graph,
};
use crclab_core::regularity::{
    intersection_profile, inverse_array, union_array, verify_inverse_array,
    weight_reflection_holds, IntersectionArray,
};
use crclab_core::transitivity::{
    coset_action_vertex_perm, dual_low_weight_census_with_limit, induced_pair_permutation,
    is_completely_transitive, symmetric_group_generators, Perm,
};
use crclab_core::{limits, Error};

use crate::report::*;
use crate::{CliError, Family};

/// Which report sections to compute.
#[derive(Debug, Clone, Copy)]
pub struct Selection {
    pub cr: bool,
    pub ct: bool,
    pub inverse_array: bool,
    pub lemma32: bool,
    pub graph: bool,
    pub spectra: bool,
}

impl Selection {
    pub fn all() -> Selection {
        Selection {
            cr: true,
            ct: true,
            inverse_array: true,
            lemma32: true,
            graph: true,
            spectra: true,
        }
    }

    pub fn none_requested(&self) -> bool {
        !(self.cr || self.ct || self.inverse_array || self.lemma32 || self.graph || self.spectra)
    }
}

/// Effective guard values for one invocation.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub table_bits: usize,
    pub graph_bits: usize,
    pub pair_vertices: usize,
}

impl Limits {
    pub fn new(unsafe_large: bool) -> Limits {
        if unsafe_large {
            Limits {
                table_bits: limits::TABLE_BITS_HARD,
                graph_bits: limits::GRAPH_BITS_HARD,
                pair_vertices: limits::PAIR_ORBIT_VERTICES_HARD,
            }
        } else {
            Limits {
                table_bits: limits::TABLE_BITS,
                graph_bits: limits::GRAPH_BITS,
                pair_vertices: limits::PAIR_ORBIT_VERTICES,
            }
        }
    }
}

/// Worker count: CRCLAB_THREADS caps the machine's parallelism, and there is
/// never a point in more workers than sections.
fn thread_count(jobs: usize) -> usize {
    let available = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1);
    let cap = std::env::var("CRCLAB_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or(available);
    cap.min(available).min(jobs).max(1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum SectionKind {
    Cr,
    Ct,
    Inverse,
    Reflection,
    Graph,
    Spectra,
}

impl SectionKind {
    fn name(self) -> &'static str {
        match self {
            SectionKind::Cr => "cr",
            SectionKind::Ct => "ct",
            SectionKind::Inverse => "inverse-array",
            SectionKind::Reflection => "lemma32",
            SectionKind::Graph => "graph",
            SectionKind::Spectra => "spectra",
        }
    }
}

enum Computed {
    Cr(CrSection),
    Ct(CtSection),
    Inverse(InverseSection),
    Reflection(ReflectionSection),
    Graph(Box<GraphSection>),
    Spectra(SpectraSection),
}

struct Ctx<'a> {
    family: Family,
    m: usize,
    code: &'a LinearCode,
    table: &'a CosetTable,
    limits: Limits,
}

pub fn run_verify(
    family: Family,
    m: usize,
    selection: Selection,
    limits: Limits,
) -> Result<RunReport, CliError> {
    let total_start = Instant::now();
    let code = family.build(m, limits.table_bits)?;
    let table = CosetTable::build_with_limit(&code, limits.table_bits)?;

    let parameters = parameters_section(family, m, &code, &table)?;
    let cover_rep = nonantipodal_with_coset_cover(&code, &table);
    let expected_single = match family {
        Family::Pair => m % 2 == 0,
        Family::Union => false,
    };
    let cover = CoverSection {
        single_top_coset: cover_rep.single_top_coset,
        witness: cover_rep.witness,
        covers_all_ones: cover_rep.covers_all_ones,
        expected_single,
    };

    // The inverse-array and reflection sections only have content for the
    // pair family at even m (they live on the all-ones covering coset).
    let covering_sections_apply = family == Family::Pair && m % 2 == 0;

    let ctx = Ctx {
        family,
        m,
        code: &code,
        table: &table,
        limits,
    };
    let mut jobs: Vec<SectionKind> = Vec::new();
    if selection.cr {
        jobs.push(SectionKind::Cr);
    }
    if selection.ct {
        jobs.push(SectionKind::Ct);
    }
    if selection.inverse_array && covering_sections_apply {
        jobs.push(SectionKind::Inverse);
    }
    if selection.lemma32 && covering_sections_apply {
        jobs.push(SectionKind::Reflection);
    }
    if selection.graph {
        jobs.push(SectionKind::Graph);
    }
    if selection.spectra {
        jobs.push(SectionKind::Spectra);
    }

    let threads = thread_count(jobs.len());
    let mut results: Vec<(usize, Result<Computed, Error>, Duration)> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                let ctx = &ctx;
                let jobs = &jobs;
                s.spawn(move || {
                    let mut out = Vec::new();
                    for (i, &kind) in jobs.iter().enumerate() {
                        if i % threads == t {
                            let start = Instant::now();
                            let computed = compute_section(ctx, kind);
                            out.push((i, computed, start.elapsed()));
                        }
                    }
                    out
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("section worker panicked"))
            .collect()
    });
    results.sort_by_key(|&(i, _, _)| i);

    let mut cr = None;
    let mut ct = None;
    let mut inverse = None;
    let mut reflection = None;
    let mut graph = None;
    let mut spectra = None;
    let mut timing = String::new();
    for (i, computed, elapsed) in results {
        timing.push_str(&format!(" {} {:.1}ms", jobs[i].name(), elapsed.as_secs_f64() * 1e3));
        match computed? {
            Computed::Cr(s) => cr = Some(s),
            Computed::Ct(s) => ct = Some(s),
            Computed::Inverse(s) => inverse = Some(s),
            Computed::Reflection(s) => reflection = Some(s),
            Computed::Graph(s) => graph = Some(*s),
            Computed::Spectra(s) => spectra = Some(s),
        }
    }

    let mut checks: Vec<(&'static str, bool)> = Vec::new();
    checks.push(("parameters", parameters.agrees));
    if family == Family::Pair {
        let dist_ok = parameters
            .coset_weight_distribution
            .iter()
            .enumerate()
            .all(|(w, &count)| count == binomial(m as u64, 2 * w as u64))
            && parameters.coset_weight_distribution.len() == table.covering_radius() + 1;
        checks.push(("weight_distribution", dist_ok));
    }
    let cover_ok = if expected_single {
        cover.single_top_coset && cover.covers_all_ones
    } else {
        !cover.single_top_coset
    };
    checks.push(("code_antipodality", cover_ok));
    if let Some(sec) = &cr {
        checks.push(("completely_regular", sec.cr));
        checks.push(("array_matches_closed_form", sec.array_matches_closed_form));
        if let Some(ok) = sec.array_matches_union_transform {
            checks.push(("array_matches_union_transform", ok));
        }
    }
    if let Some(sec) = &ct {
        checks.push(("completely_transitive", sec.ct));
        if let Some(census) = &sec.dual_census {
            checks.push(("dual_census", census.matches_defining_rows));
        }
    }
    if let Some(sec) = &inverse {
        checks.push(("inverse_array", sec.verified));
    }
    if let Some(sec) = &reflection {
        checks.push(("weight_reflection", sec.holds));
    }
    if let Some(sec) = &graph {
        checks.push(("graph_distance_regular", sec.drg.distance_regular));
        checks.push(("graph_array_matches_code", sec.drg.matches_code_array));
        if let Some(dt) = sec.dt {
            checks.push(("graph_distance_transitive", dt));
        }
        match family {
            Family::Pair if m % 2 == 0 => {
                checks.push(("graph_imprimitive", !sec.primitivity.primitive));
                checks.push(("graph_antipodal", sec.antipodality.antipodal));
                checks.push((
                    "graph_antipodal_pairs",
                    sec.antipodality.antipodal
                        && sec.antipodality.max_class_size == 2
                        && sec.antipodality.class_count * 2 == sec.vertices,
                ));
            }
            Family::Pair => {
                // Odd m: primitivity and antipodality are measured and
                // reported, but no family-level value is asserted.
            }
            Family::Union => {
                if m == 6 {
                    // The complete graph: antipodal with a single class.
                    checks.push((
                        "graph_complete_antipodal",
                        sec.antipodality.antipodal && sec.antipodality.class_count == 1,
                    ));
                } else {
                    checks.push(("graph_primitive", sec.primitivity.primitive));
                }
            }
        }
        if let Some(f) = &sec.fold {
            checks.push(("graph_fold_isomorphic", f.isomorphic_to_union));
        }
        if let Some(h) = sec.halved_cube {
            checks.push(("graph_halved_cube", h));
        }
    }
    if let Some(sec) = &spectra {
        checks.push(("spectra_oracles_agree", sec.sets_agree));
        checks.push((
            "spectra_balanced",
            sec.multiplicity_sum == 1u64 << code.redundancy() && sec.weighted_sum == 0,
        ));
    }
    let passed = checks.iter().all(|&(_, ok)| ok);

    eprintln!(
        "timing: total {:.1}ms{}",
        total_start.elapsed().as_secs_f64() * 1e3,
        timing
    );

    Ok(RunReport {
        family: family.name(),
        m,
        parameters,
        cover,
        cr,
        ct,
        inverse_array: inverse,
        weight_reflection: reflection,
        graph,
        spectra,
        checks,
        passed,
    })
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

fn parameters_section(
    family: Family,
    m: usize,
    code: &LinearCode,
    table: &CosetTable,
) -> Result<ParamsSection, CliError> {
    let spec = match family {
        Family::Pair => closed_form_cm(m)?,
        Family::Union => closed_form_cm_union(m)?,
    };
    let measured_d = match minimum_distance_upto(code, 4) {
        MinDistance::Exact(d) => Some(d),
        MinDistance::GreaterThan(_) => None,
    };
    let measured = Params {
        n: code.n(),
        k: code.k(),
        d: measured_d,
        rho: table.covering_radius(),
    };
    let closed_form = Params {
        n: spec.n,
        k: spec.k,
        d: Some(spec.d),
        rho: spec.rho,
    };
    let agrees = measured.n == closed_form.n
        && measured.k == closed_form.k
        && measured.d == closed_form.d
        && measured.rho == closed_form.rho;
    Ok(ParamsSection {
        measured,
        closed_form,
        agrees,
        coset_weight_distribution: table.weight_distribution(),
    })
}

fn compute_section(ctx: &Ctx<'_>, kind: SectionKind) -> Result<Computed, Error> {
    match kind {
        SectionKind::Cr => cr_section(ctx).map(Computed::Cr),
        SectionKind::Ct => ct_section(ctx).map(Computed::Ct),
        SectionKind::Inverse => inverse_section(ctx).map(Computed::Inverse),
        SectionKind::Reflection => Ok(Computed::Reflection(reflection_section(ctx))),
        SectionKind::Graph => graph_section(ctx).map(|s| Computed::Graph(Box::new(s))),
        SectionKind::Spectra => spectra_section(ctx).map(Computed::Spectra),
    }
}

fn closed_array(ctx: &Ctx<'_>) -> Result<IntersectionArray, Error> {
    Ok(match ctx.family {
        Family::Pair => closed_form_cm(ctx.m)?.array,
        Family::Union => closed_form_cm_union(ctx.m)?.array,
    })
}

fn cr_section(ctx: &Ctx<'_>) -> Result<CrSection, Error> {
    let rep = intersection_profile(ctx.table);
    let closed = closed_array(ctx)?;
    let (b, c) = match &rep.array {
        Some(arr) => (arr.b.clone(), arr.c.clone()),
        None => (Vec::new(), Vec::new()),
    };
    let array_matches_closed_form = rep.array.as_ref() == Some(&closed);
    let array_matches_union_transform = match ctx.family {
        Family::Union => {
            let transformed = union_array(&closed_form_cm(ctx.m)?.array)?;
            Some(rep.array.as_ref() == Some(&transformed))
        }
        Family::Pair => None,
    };
    Ok(CrSection {
        cr: rep.completely_regular,
        rho: ctx.table.covering_radius(),
        b,
        c,
        violations: rep.violations.iter().map(ViolationRow::from).collect(),
        array_matches_closed_form,
        array_matches_union_transform,
    })
}

fn induced_generators(ctx: &Ctx<'_>) -> Result<Vec<Perm>, Error> {
    symmetric_group_generators(ctx.m)
        .iter()
        .map(|sigma| induced_pair_permutation(ctx.m, sigma))
        .collect()
}

fn ct_section(ctx: &Ctx<'_>) -> Result<CtSection, Error> {
    let gens = induced_generators(ctx)?;
    let rep = is_completely_transitive(ctx.code, ctx.table, &gens)?;
    let dual_census = match ctx.family {
        Family::Pair => {
            let census = dual_low_weight_census_with_limit(
                ctx.code,
                ctx.m - 1,
                ctx.limits.table_bits,
            )?;
            let hm = build_hm(ctx.m)?;
            let mut expected: Vec<String> =
                (0..hm.rows()).map(|i| hm.row(i).to_string()).collect();
            expected.sort();
            let mut got: Vec<String> = census.words.iter().map(|w| w.to_string()).collect();
            got.sort();
            Some(CensusSection {
                weight: ctx.m - 1,
                count: census.count,
                matches_defining_rows: census.count == ctx.m as u64 && got == expected,
            })
        }
        Family::Union => None,
    };
    Ok(CtSection {
        orbits: rep.orbit_count,
        rho_plus_1: rep.rho_plus_1,
        ct: rep.completely_transitive,
        orbit_sizes: rep.orbit_sizes,
        dual_census,
    })
}

fn inverse_section(ctx: &Ctx<'_>) -> Result<InverseSection, Error> {
    let profile = intersection_profile(ctx.table);
    let (b, c) = match &profile.array {
        Some(arr) => {
            let inv = inverse_array(arr);
            (inv.b, inv.c)
        }
        None => (Vec::new(), Vec::new()),
    };
    let verified = verify_inverse_array(ctx.code, ctx.table)?;
    Ok(InverseSection { b, c, verified })
}

fn reflection_section(ctx: &Ctx<'_>) -> ReflectionSection {
    let t1 = ctx.table.pack_syndrome(&ctx.code.all_ones_syndrome());
    ReflectionSection {
        holds: weight_reflection_holds(ctx.table, t1),
    }
}

/// Vertex generators for the distance-transitivity stage: every translation
/// by a connection-set element, plus the coset action of the coordinate
/// symmetric group. Translations alone are transitive on vertices but fix
/// the edge "directions"; the induced action alone fixes the zero vertex.
fn vertex_generators(ctx: &Ctx<'_>) -> Result<Vec<Perm>, Error> {
    let mut gens: Vec<Perm> = ctx
        .table
        .distinct_nonzero_columns()
        .iter()
        .map(|&h| translation_perm(ctx.table.redundancy(), h))
        .collect();
    for tau in induced_generators(ctx)? {
        gens.push(coset_action_vertex_perm(ctx.code, ctx.table, &tau)?);
    }
    Ok(gens)
}

fn graph_section(ctx: &Ctx<'_>) -> Result<GraphSection, Error> {
    let g = build_coset_graph_with_limit(ctx.code, ctx.table, ctx.limits.graph_bits)?;
    let drg = distance_regular_check(&g)?;
    let code_array = intersection_profile(ctx.table).array;
    let matches_code_array = drg.array.is_some() && drg.array == code_array;
    let (b, c) = match &drg.array {
        Some(arr) => (arr.b.clone(), arr.c.clone()),
        None => (Vec::new(), Vec::new()),
    };
    let dt = if g.vertex_count() <= ctx.limits.pair_vertices {
        let gens = vertex_generators(ctx)?;
        Some(distance_transitive_check_with_limit(
            &g,
            &gens,
            ctx.limits.pair_vertices,
        )?)
    } else {
        eprintln!(
            "note: pair-orbit stage skipped ({} vertices exceed the {}-vertex guard; --unsafe-large raises it)",
            g.vertex_count(),
            ctx.limits.pair_vertices
        );
        None
    };
    let prim = primitivity_check(&g)?;
    let anti = antipodality_check(&g)?;
    let fold_section = match (ctx.family, ctx.m % 2 == 0 && ctx.m >= 6) {
        (Family::Pair, true) => Some(fold_against_union(ctx, &g)?),
        _ => None,
    };
    let halved_cube = match ctx.family {
        Family::Pair => {
            let hm = build_hm(ctx.m)?;
            let labels: Vec<u32> = (0..ctx.table.size() as u32)
                .map(|s| ctx.table.leader_image_packed(&hm, s))
                .collect::<Result<_, _>>()?;
            Some(halved_cube_isomorphism_check(ctx.m, &g, &labels)?)
        }
        Family::Union => None,
    };
    Ok(GraphSection {
        vertices: g.vertex_count(),
        valency: g.degree(0),
        edges: g.edge_count(),
        diameter: drg.diameter,
        warning: g.warning.map(str::to_owned),
        drg: DrgSection {
            distance_regular: drg.distance_regular,
            b,
            c,
            matches_code_array,
            violations: drg.violations.len(),
        },
        dt,
        primitivity: PrimitivitySection {
            connected_per_distance: prim.connected_per_distance,
            primitive: prim.primitive,
        },
        antipodality: AntipodalitySection {
            antipodal: anti.antipodal,
            class_count: anti.classes.len(),
            max_class_size: anti.classes.iter().map(Vec::len).max().unwrap_or(0),
        },
        fold: fold_section,
        halved_cube,
    })
}

/// Fold the pair graph and compare with the union graph under the canonical
/// relabeling (each antipodal class maps to the union-code syndrome of its
/// leaders, which must agree across the class).
fn fold_against_union(ctx: &Ctx<'_>, g: &Graph) -> Result<FoldSection, Error> {
    let union = build_cm_union_with_limit(ctx.m, ctx.limits.table_bits)?;
    let union_table = CosetTable::build_with_limit(&union, ctx.limits.table_bits)?;
    let union_graph = build_coset_graph_with_limit(&union, &union_table, ctx.limits.graph_bits)?;
    let (folded, projection) = fold(g)?;
    let mut map = vec![u32::MAX; folded.vertex_count()];
    let mut well_defined = true;
    for s in 0..ctx.table.size() as u32 {
        let class = projection[s as usize] as usize;
        let target = ctx.table.leader_image_packed(union.check(), s)?;
        if map[class] == u32::MAX {
            map[class] = target;
        } else if map[class] != target {
            well_defined = false;
        }
    }
    let isomorphic =
        well_defined && graphs_isomorphic_by_map(&folded, &union_graph, &map);
    Ok(FoldSection {
        isomorphic_to_union: isomorphic,
    })
}

fn spectra_section(ctx: &Ctx<'_>) -> Result<SpectraSection, Error> {
    let character = character_spectrum_with_limit(ctx.code, ctx.limits.graph_bits)?;
    let profile = intersection_profile(ctx.table);
    let matrix = match &profile.array {
        Some(arr) => Some(array_spectrum(arr)?),
        None => None,
    };
    let char_values: Vec<i64> = character.eigs.iter().map(|&(v, _)| v).collect();
    let sets_agree = matrix
        .as_ref()
        .map(|m| {
            let matrix_values: Vec<i64> = m.eigs.iter().map(|&(v, _)| v).collect();
            matrix_values == char_values && m.noninteger_intervals.is_empty()
        })
        .unwrap_or(false);
    let multiplicity_sum = character.eigs.iter().map(|&(_, mult)| mult).sum();
    let weighted_sum = character
        .eigs
        .iter()
        .map(|&(v, mult)| v * mult as i64)
        .sum();
    let formula_audit = match ctx.family {
        Family::Union => {
            let audit = audit_union_eigenvalues(ctx.m, &char_values)?;
            Some(AuditSection {
                candidates: audit.candidates,
                oracle: audit.oracle,
                agree: audit.agree,
            })
        }
        Family::Pair => None,
    };
    Ok(SpectraSection {
        character: SpectrumJson::from(&character),
        intersection_matrix: matrix.as_ref().map(SpectrumJson::from),
        sets_agree,
        multiplicity_sum,
        weighted_sum,
        formula_audit,
    })
}
