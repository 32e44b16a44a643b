//! Escape-time rasterization of filled Julia sets, Julia boundaries, and
//! Multibrot sets.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
// `Float` supplies the libm-backed float methods in no_std builds.
#[allow(unused_imports)]
use num_traits::Float;

use crate::dynamics::escape_radius;
use crate::poly::ZPoly;
use crate::{Error, Result};

/// What a raster pixel represents.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RasterMode {
    /// Black iff the pixel's orbit stays bounded through `max_iter`.
    FilledJulia,
    /// Black iff bounded with at least one escaping 4-neighbor.
    JuliaBoundary,
    /// Critical-orbit test of `z^d + c` at the pixel's `c`.
    Multibrot,
}

#[derive(Clone, Copy, Debug)]
pub struct RasterConfig {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
    pub width: usize,
    pub height: usize,
    pub max_iter: u32,
    pub mode: RasterMode,
}

impl RasterConfig {
    pub fn validate(&self) -> Result<()> {
        if self.width == 0 || self.height == 0 {
            return Err(Error::InvalidInput("raster needs width, height >= 1"));
        }
        if !(self.re_min < self.re_max && self.im_min < self.im_max) {
            return Err(Error::InvalidInput("raster window must have positive extent"));
        }
        Ok(())
    }

    /// Pixel-center coordinate; row 0 is the top of the window (`im_max`).
    fn point(&self, col: usize, row: usize) -> Complex64 {
        let re = self.re_min
            + (col as f64 + 0.5) * (self.re_max - self.re_min) / self.width as f64;
        let im = self.im_max
            - (row as f64 + 0.5) * (self.im_max - self.im_min) / self.height as f64;
        Complex64::new(re, im)
    }
}

/// Per-pixel escape steps in row-major order; `None` means the orbit stayed
/// bounded through the budget.
#[derive(Clone, Debug)]
pub struct EscapeGrid {
    pub width: usize,
    pub height: usize,
    pub steps: Vec<Option<u32>>,
}

impl EscapeGrid {
    pub fn bounded(&self, col: usize, row: usize) -> bool {
        self.steps[row * self.width + col].is_none()
    }
}

/// Escape-time grid for the filled Julia set of monic `f`.
pub fn escape_grid_julia(f: &ZPoly, cfg: &RasterConfig) -> Result<EscapeGrid> {
    cfg.validate()?;
    let fc = f.to_cpoly();
    let radius = escape_radius(f);
    let mut steps = Vec::with_capacity(cfg.width * cfg.height);
    for row in 0..cfg.height {
        for col in 0..cfg.width {
            let mut z = cfg.point(col, row);
            let mut out = None;
            for n in 0..cfg.max_iter {
                if z.norm() > radius {
                    out = Some(n);
                    break;
                }
                z = fc.eval(&z);
            }
            steps.push(out);
        }
    }
    Ok(EscapeGrid {
        width: cfg.width,
        height: cfg.height,
        steps,
    })
}

/// Escape-time grid for the Multibrot set `M_d` (critical orbit per pixel).
pub fn escape_grid_multibrot(d: u32, cfg: &RasterConfig) -> Result<EscapeGrid> {
    cfg.validate()?;
    assert!(d >= 2);
    let mut steps = Vec::with_capacity(cfg.width * cfg.height);
    for row in 0..cfg.height {
        for col in 0..cfg.width {
            let c = cfg.point(col, row);
            let radius = 2.0 * c.norm().max(2.0);
            let mut z = Complex64::new(0.0, 0.0);
            let mut out = None;
            for n in 0..cfg.max_iter {
                if z.norm() > radius {
                    out = Some(n);
                    break;
                }
                z = z.powu(d) + c;
            }
            steps.push(out);
        }
    }
    Ok(EscapeGrid {
        width: cfg.width,
        height: cfg.height,
        steps,
    })
}

/// Black/white mask for the requested mode. `true` = black.
pub fn binary_mask(grid: &EscapeGrid, mode: RasterMode) -> Vec<bool> {
    match mode {
        RasterMode::FilledJulia | RasterMode::Multibrot => {
            grid.steps.iter().map(|s| s.is_none()).collect()
        }
        RasterMode::JuliaBoundary => {
            let (w, h) = (grid.width, grid.height);
            let mut mask = vec![false; w * h];
            for row in 0..h {
                for col in 0..w {
                    if !grid.bounded(col, row) {
                        continue;
                    }
                    let mut edge = false;
                    if col > 0 && !grid.bounded(col - 1, row) {
                        edge = true;
                    }
                    if col + 1 < w && !grid.bounded(col + 1, row) {
                        edge = true;
                    }
                    if row > 0 && !grid.bounded(col, row - 1) {
                        edge = true;
                    }
                    if row + 1 < h && !grid.bounded(col, row + 1) {
                        edge = true;
                    }
                    mask[row * w + col] = edge;
                }
            }
            mask
        }
    }
}

/// Grayscale escape-time shading: bounded pixels are 0 (black), escaped
/// pixels ramp with escape step.
pub fn grayscale(grid: &EscapeGrid, max_iter: u32) -> Vec<u8> {
    grid.steps
        .iter()
        .map(|s| match s {
            None => 0u8,
            Some(n) => {
                let t = (*n as f64 + 1.0) / (max_iter as f64 + 1.0);
                (55.0 + 200.0 * (1.0 - t)).round().clamp(0.0, 255.0) as u8
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(coeffs: &[i64]) -> ZPoly {
        ZPoly::from_i64(coeffs)
    }

    #[test]
    fn square_map_renders_unit_disk() {
        let cfg = RasterConfig {
            re_min: -1.5,
            re_max: 1.5,
            im_min: -1.5,
            im_max: 1.5,
            width: 400,
            height: 400,
            max_iter: 200,
            mode: RasterMode::FilledJulia,
        };
        let grid = escape_grid_julia(&zp(&[0, 0, 1]), &cfg).unwrap();
        let mask = binary_mask(&grid, RasterMode::FilledJulia);
        let mut agree = 0usize;
        for row in 0..cfg.height {
            for col in 0..cfg.width {
                let z = cfg.point(col, row);
                let analytic = z.norm() <= 1.0;
                if mask[row * cfg.width + col] == analytic {
                    agree += 1;
                }
            }
        }
        let frac = agree as f64 / (cfg.width * cfg.height) as f64;
        assert!(frac >= 0.99, "agreement {frac}");
        // spot checks from the spec examples
        assert!(grid.bounded(200, 200)); // center ~ 0
        let col_14 = ((1.4 - cfg.re_min) / 3.0 * 400.0) as usize;
        assert!(!grid.bounded(col_14, 200)); // re ~ 1.4
    }

    #[test]
    fn chebyshev_black_pixels_hug_the_segment() {
        let cfg = RasterConfig {
            re_min: -2.4,
            re_max: 2.4,
            im_min: -0.1,
            im_max: 0.1,
            width: 240,
            // odd so one pixel row is centered exactly on the real axis
            height: 21,
            max_iter: 100,
            mode: RasterMode::FilledJulia,
        };
        let grid = escape_grid_julia(&zp(&[-2, 0, 1]), &cfg).unwrap();
        for row in 0..cfg.height {
            for col in 0..cfg.width {
                if grid.bounded(col, row) {
                    let z = cfg.point(col, row);
                    assert!(z.re.abs() <= 2.1, "black pixel off segment at {z}");
                }
            }
        }
        // the segment interior itself is black
        assert!(grid.bounded(cfg.width / 2, cfg.height / 2));
    }

    #[test]
    fn black_set_shrinks_with_more_iterations() {
        let base = RasterConfig {
            re_min: -2.0,
            re_max: 1.0,
            im_min: -1.2,
            im_max: 1.2,
            width: 80,
            height: 64,
            max_iter: 40,
            mode: RasterMode::FilledJulia,
        };
        let g1 = escape_grid_julia(&zp(&[-1, 0, 1]), &base).unwrap();
        let mut more = base;
        more.max_iter = 160;
        let g2 = escape_grid_julia(&zp(&[-1, 0, 1]), &more).unwrap();
        for i in 0..g1.steps.len() {
            if g2.steps[i].is_none() {
                assert!(g1.steps[i].is_none(), "black set must shrink, pixel {i}");
            }
        }
    }

    #[test]
    fn multibrot_pixels() {
        let cfg = RasterConfig {
            re_min: -2.5,
            re_max: 1.5,
            im_min: -1.5,
            im_max: 1.5,
            width: 200,
            height: 150,
            max_iter: 300,
            mode: RasterMode::Multibrot,
        };
        let grid = escape_grid_multibrot(2, &cfg).unwrap();
        let pixel_of = |re: f64, im: f64| {
            let col = ((re - cfg.re_min) / (cfg.re_max - cfg.re_min) * cfg.width as f64) as usize;
            let row = ((cfg.im_max - im) / (cfg.im_max - cfg.im_min) * cfg.height as f64) as usize;
            (col, row)
        };
        let (c1, r1) = pixel_of(-1.0, 0.0);
        assert!(grid.bounded(c1, r1));
        let (c2, r2) = pixel_of(1.0, 0.0);
        assert!(!grid.bounded(c2, r2));
    }

    #[test]
    fn boundary_mode_traces_the_circle() {
        let cfg = RasterConfig {
            re_min: -1.5,
            re_max: 1.5,
            im_min: -1.5,
            im_max: 1.5,
            width: 120,
            height: 120,
            max_iter: 100,
            mode: RasterMode::JuliaBoundary,
        };
        let grid = escape_grid_julia(&zp(&[0, 0, 1]), &cfg).unwrap();
        let mask = binary_mask(&grid, RasterMode::JuliaBoundary);
        let mut black = 0usize;
        for row in 0..cfg.height {
            for col in 0..cfg.width {
                if mask[row * cfg.width + col] {
                    black += 1;
                    let z = cfg.point(col, row);
                    assert!(
                        (z.norm() - 1.0).abs() < 0.1,
                        "boundary pixel far from circle: {z}"
                    );
                }
            }
        }
        assert!(black > 50, "boundary should be a visible ring");
    }

    #[test]
    fn invalid_configs_rejected() {
        let cfg = RasterConfig {
            re_min: 1.0,
            re_max: -1.0,
            im_min: -1.0,
            im_max: 1.0,
            width: 10,
            height: 10,
            max_iter: 10,
            mode: RasterMode::FilledJulia,
        };
        assert!(escape_grid_julia(&zp(&[0, 0, 1]), &cfg).is_err());
    }
}
