//! Dependency-free binary PPM (P6) and PGM (P5) writers.

use std::io::Write;
use std::path::Path;

use dynmahler_core::raster::{binary_mask, grayscale, EscapeGrid, RasterMode};

use crate::{CliError, CliResult};

fn io_err(path: &Path, e: std::io::Error) -> CliError {
    CliError::Domain(format!("cannot write '{}': {e}", path.display()))
}

/// Black/white P6 image from a raster mask.
pub fn write_ppm(path: &Path, grid: &EscapeGrid, mode: RasterMode) -> CliResult<()> {
    let mask = binary_mask(grid, mode);
    let mut buf = Vec::with_capacity(grid.width * grid.height * 3 + 32);
    write!(buf, "P6\n{} {}\n255\n", grid.width, grid.height)
        .expect("in-memory write cannot fail");
    for black in mask {
        let v = if black { 0u8 } else { 255u8 };
        buf.extend_from_slice(&[v, v, v]);
    }
    std::fs::write(path, buf).map_err(|e| io_err(path, e))
}

/// Grayscale escape-time P5 image.
pub fn write_pgm(path: &Path, grid: &EscapeGrid, max_iter: u32) -> CliResult<()> {
    let shades = grayscale(grid, max_iter);
    let mut buf = Vec::with_capacity(grid.width * grid.height + 32);
    write!(buf, "P5\n{} {}\n255\n", grid.width, grid.height)
        .expect("in-memory write cannot fail");
    buf.extend_from_slice(&shades);
    std::fs::write(path, buf).map_err(|e| io_err(path, e))
}
