//! Deterministic text and image serialization for orbits, diagrams, and
//! spread maps.
//!
//! CSV output is UTF-8 with LF newlines, comma separators, a mandatory
//! header row, and no trailing separators. Floats use Rust's shortest
//! round-trip decimal form, so parsing an emitted file reproduces the
//! in-memory values bit for bit; divergent entries are written as `NaN`.
//! Images are plain ASCII PGM ("P2") with single-space token separation.

use std::io::{self, Write};

use crate::bifurcation::DiagramDataset;
use crate::orbit::OrbitSample;
use crate::spread::SpreadMapResult;

/// Orbit CSV: header `n,Y`, one row per sample, `n` counting post-transient
/// indices from 0.
pub fn write_orbit_csv<W: Write>(sample: &OrbitSample, w: &mut W) -> io::Result<()> {
    if sample.values.is_empty() {
        return Err(io::Error::new(io::ErrorKind::InvalidInput, "orbit sample is empty"));
    }
    w.write_all(b"n,Y\n")?;
    for (n, y) in sample.values.iter().enumerate() {
        writeln!(w, "{n},{y}")?;
    }
    Ok(())
}

/// Diagram CSV: header `C,Y`, one row per (c, sample value) with c repeated
/// per sample, ascending c. A divergent row contributes a single `c,NaN`.
pub fn write_diagram_csv<W: Write>(dataset: &DiagramDataset, w: &mut W) -> io::Result<()> {
    if dataset.rows.is_empty() {
        return Err(io::Error::new(io::ErrorKind::InvalidInput, "diagram dataset is empty"));
    }
    w.write_all(b"C,Y\n")?;
    for row in &dataset.rows {
        if row.divergent {
            writeln!(w, "{},NaN", row.c)?;
        } else {
            for y in &row.values {
                writeln!(w, "{},{y}", row.c)?;
            }
        }
    }
    Ok(())
}

/// Spread CSV: header `gamma_min,C,occupied,spread_percent`, rows ordered by
/// gamma_min then C. Divergent cells carry a trailing `divergent` flag field.
pub fn write_spread_csv<W: Write>(result: &SpreadMapResult, w: &mut W) -> io::Result<()> {
    w.write_all(b"gamma_min,C,occupied,spread_percent\n")?;
    for (i, &gmin) in result.gamma_min_axis.iter().enumerate() {
        for (j, &c) in result.c_axis.iter().enumerate() {
            let cell = result.cell(i, j);
            if cell.divergent {
                writeln!(w, "{gmin},{c},0,0,divergent")?;
            } else {
                writeln!(w, "{gmin},{c},{occ},{occ}", occ = cell.occupied)?;
            }
        }
    }
    Ok(())
}

/// Plain PGM ("P2") with maxval 100; pixel value = occupied count. Row 0 is
/// the largest gamma_min, so the gamma_min axis increases upward when the
/// image is viewed conventionally.
pub fn write_spread_pgm<W: Write>(result: &SpreadMapResult, w: &mut W) -> io::Result<()> {
    let width = result.c_axis.len();
    let height = result.gamma_min_axis.len();
    writeln!(w, "P2")?;
    writeln!(w, "{width} {height}")?;
    writeln!(w, "100")?;
    for i in (0..height).rev() {
        let mut line = String::with_capacity(width * 4);
        for (j, cell) in result.row(i).iter().enumerate() {
            if j > 0 {
                line.push(' ');
            }
            line.push_str(&cell.occupied.to_string());
        }
        writeln!(w, "{line}")?;
    }
    Ok(())
}
