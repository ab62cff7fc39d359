//! Text formats: the repo-wide matrix format, the two-block code file, and
//! the graph exports (edge list and DOT).
//!
//! Matrix text: a header line "rows cols", then one line of space-free `0`/`1`
//! characters per row. A code file is a header line "n k" followed by the
//! generator and check matrices, each in matrix text. All formats round-trip
//! bit-exactly.

use crclab_core::bits::{BitMatrix, BitVec};
use crclab_core::code::LinearCode;
use crclab_core::graph::Graph;

use crate::CliError;

pub fn render_matrix(m: &BitMatrix) -> String {
    let mut out = String::new();
    out.push_str(&format!("{} {}\n", m.rows(), m.cols()));
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            out.push(if m.get(i, j) { '1' } else { '0' });
        }
        out.push('\n');
    }
    out
}

/// Parse one matrix block from the front of `lines`, consuming what it uses.
fn parse_matrix_block<'a, I: Iterator<Item = &'a str>>(
    lines: &mut I,
) -> Result<BitMatrix, CliError> {
    let header = lines
        .next()
        .ok_or_else(|| CliError::Format("missing matrix header line".into()))?;
    let mut parts = header.split_whitespace();
    let rows: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| CliError::Format(format!("bad matrix header {header:?}")))?;
    let cols: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| CliError::Format(format!("bad matrix header {header:?}")))?;
    if parts.next().is_some() {
        return Err(CliError::Format(format!("bad matrix header {header:?}")));
    }
    let mut row_vecs = Vec::with_capacity(rows);
    for i in 0..rows {
        let line = lines
            .next()
            .ok_or_else(|| CliError::Format(format!("matrix row {i} missing")))?
            .trim();
        if line.len() != cols {
            return Err(CliError::Format(format!(
                "matrix row {i} has {} characters, expected {cols}",
                line.len()
            )));
        }
        let mut bits = Vec::with_capacity(cols);
        for ch in line.chars() {
            match ch {
                '0' => bits.push(0u8),
                '1' => bits.push(1u8),
                other => {
                    return Err(CliError::Format(format!(
                        "matrix row {i} contains {other:?}; only 0/1 allowed"
                    )))
                }
            }
        }
        row_vecs.push(BitVec::from_bits(&bits));
    }
    Ok(BitMatrix::from_rows(cols, &row_vecs))
}

pub fn parse_matrix(text: &str) -> Result<BitMatrix, CliError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let m = parse_matrix_block(&mut lines)?;
    if lines.next().is_some() {
        return Err(CliError::Format("trailing content after matrix".into()));
    }
    Ok(m)
}

pub fn render_code(code: &LinearCode) -> String {
    let mut out = String::new();
    out.push_str(&format!("{} {}\n", code.n(), code.k()));
    out.push_str(&render_matrix(code.generator()));
    out.push_str(&render_matrix(code.check()));
    out
}

pub fn parse_code(text: &str) -> Result<LinearCode, CliError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| CliError::Format("missing code header line".into()))?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| CliError::Format(format!("bad code header {header:?}")))?;
    let k: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| CliError::Format(format!("bad code header {header:?}")))?;
    let generator = parse_matrix_block(&mut lines)?;
    let check = parse_matrix_block(&mut lines)?;
    if lines.next().is_some() {
        return Err(CliError::Format("trailing content after code blocks".into()));
    }
    if generator.rows() != k || generator.cols() != n {
        return Err(CliError::Format(format!(
            "generator block is {}x{}, header says {k}x{n}",
            generator.rows(),
            generator.cols()
        )));
    }
    if check.rows() != n - k || check.cols() != n {
        return Err(CliError::Format(format!(
            "check block is {}x{}, header says {}x{n}",
            check.rows(),
            check.cols(),
            n - k
        )));
    }
    LinearCode::from_parts(generator, check).map_err(CliError::Core)
}

/// Edge list: one "u v" line per edge with u < v, zero-based, sorted.
pub fn render_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for u in 0..g.vertex_count() {
        for &v in g.neighbors(u) {
            if (u as u32) < v {
                out.push_str(&format!("{u} {v}\n"));
            }
        }
    }
    out
}

/// DOT with syndrome bitstring labels (coordinate 0 printed first).
pub fn render_dot(g: &Graph, r_bits: usize) -> String {
    let mut out = String::new();
    out.push_str("graph coset {\n");
    for u in 0..g.vertex_count() {
        let label = BitVec::from_packed_u32(u as u32, r_bits);
        out.push_str(&format!("  {u} [label=\"{label}\"];\n"));
    }
    for u in 0..g.vertex_count() {
        for &v in g.neighbors(u) {
            if (u as u32) < v {
                out.push_str(&format!("  {u} -- {v};\n"));
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crclab_core::families::{build_cm, build_cm_union};

    #[test]
    fn matrix_round_trip() {
        let h = crclab_core::families::build_hm(5).unwrap();
        let text = render_matrix(&h);
        let back = parse_matrix(&text).unwrap();
        assert_eq!(back, h);
        assert_eq!(render_matrix(&back), text);
    }

    #[test]
    fn code_round_trip() {
        for code in [build_cm(6).unwrap(), build_cm_union(8).unwrap()] {
            let text = render_code(&code);
            let back = parse_code(&text).unwrap();
            assert_eq!(back.n(), code.n());
            assert_eq!(back.k(), code.k());
            assert_eq!(back.generator(), code.generator());
            assert_eq!(back.check(), code.check());
            assert_eq!(render_code(&back), text);
        }
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert!(parse_matrix("2 3\n010\n01\n").is_err());
        assert!(parse_matrix("2 3\n010\n01x\n").is_err());
        assert!(parse_matrix("nonsense\n").is_err());
        assert!(parse_matrix("1 2\n01\n01\n").is_err());
        // Inconsistent generator/check pair: G row with nonzero syndrome.
        let bad = "3 1\n1 3\n110\n2 3\n101\n011\n";
        assert!(parse_code(bad).is_err());
    }

    #[test]
    fn edge_list_and_dot_shapes() {
        let code = build_cm(4).unwrap();
        let table = crclab_core::code::CosetTable::build(&code).unwrap();
        let g = crclab_core::graph::build_coset_graph(&code, &table).unwrap();
        let edges = render_edge_list(&g);
        assert_eq!(edges.lines().count(), 24);
        assert_eq!(edges.lines().next(), Some("0 1"));
        let dot = render_dot(&g, table.redundancy());
        assert_eq!(dot.lines().filter(|l| l.contains("[label=")).count(), 8);
        assert_eq!(dot.lines().filter(|l| l.contains(" -- ")).count(), 24);
    }
}
