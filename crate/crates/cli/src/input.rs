//! Parser for user-supplied basis files.
//!
//! Format: plain text. The first data line is `RANK WIDTH` (width must be
//! 23), followed by one basis vector per line as space-separated integers.
//! Lines starting with `#` and blank lines are ignored.

use cubic_lattice::lattice_core::{LatticeVector, AMBIENT_RANK};
use num_bigint::BigInt;
use std::path::Path;
use std::str::FromStr;

pub fn parse_basis_file(path: &Path) -> Result<Vec<LatticeVector>, String> {
    let content = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let mut data_lines = content
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line_no, header) = data_lines
        .next()
        .ok_or_else(|| "empty input: expected a `RANK WIDTH` header line".to_string())?;
    let header_fields: Vec<&str> = header.split_whitespace().collect();
    if header_fields.len() != 2 {
        return Err(format!(
            "line {line_no}: expected header `RANK WIDTH`, got {} fields",
            header_fields.len()
        ));
    }
    let rank: usize = header_fields[0]
        .parse()
        .map_err(|_| format!("line {line_no}: invalid rank `{}`", header_fields[0]))?;
    let width: usize = header_fields[1]
        .parse()
        .map_err(|_| format!("line {line_no}: invalid width `{}`", header_fields[1]))?;
    if width != AMBIENT_RANK {
        return Err(format!(
            "width error: vectors must have {AMBIENT_RANK} coordinates, header declares {width}"
        ));
    }
    if rank == 0 {
        return Err("rank must be at least 1".to_string());
    }

    let mut basis = Vec::with_capacity(rank);
    for (line_no, line) in data_lines.by_ref().take(rank) {
        let mut coords = Vec::with_capacity(AMBIENT_RANK);
        for tok in line.split_whitespace() {
            let v = BigInt::from_str(tok)
                .map_err(|_| format!("line {line_no}: invalid integer `{tok}`"))?;
            coords.push(v);
        }
        if coords.len() != AMBIENT_RANK {
            return Err(format!(
                "width error: line {line_no} has {} coordinates, expected {AMBIENT_RANK}",
                coords.len()
            ));
        }
        basis.push(LatticeVector::new(coords).expect("width checked"));
    }
    if basis.len() != rank {
        return Err(format!("expected {rank} basis rows, found {}", basis.len()));
    }
    if let Some((line_no, _)) = data_lines.next() {
        return Err(format!(
            "line {line_no}: unexpected data after {rank} basis rows"
        ));
    }
    Ok(basis)
}
