//! Pixel-occupancy spread: how widely post-transient orbit values scatter
//! over a 100-pixel partition of [0, 1].
//!
//! A fixed point fills one pixel (a spread of 1%); chaotic attractors fill
//! many. Sweeping (gamma_min, C) cells yields a 2D occupancy map whose
//! structure separates chaotic from periodic regimes.

use rayon::prelude::*;

use crate::map::{GrowthRange, GrowthShape, MapParams, ParamError};
use crate::orbit::{sample_orbit, OrbitSample, OrbitSpec};

/// Number of pixels partitioning [0, 1].
pub const SPREAD_BINS: usize = 100;

/// Pixel index for a value in [0, 1]: bin k covers [k/100, (k+1)/100), with
/// the top bin closed at 1.0. Values outside [0, 1] fall off the grid (the
/// map legitimately exceeds 1) and get no index.
pub fn bin_index(y: f64) -> Option<usize> {
    if !(0.0..=1.0).contains(&y) {
        return None;
    }
    if y == 1.0 {
        return Some(SPREAD_BINS - 1);
    }
    Some((y * SPREAD_BINS as f64).floor() as usize)
}

/// Occupancy counters over the 100-pixel grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpreadGrid {
    bins: [u32; SPREAD_BINS],
}

impl SpreadGrid {
    fn new() -> Self {
        SpreadGrid { bins: [0; SPREAD_BINS] }
    }

    fn record(&mut self, y: f64) {
        if let Some(k) = bin_index(y) {
            self.bins[k] += 1;
        }
    }

    /// Per-bin hit counters.
    pub fn counts(&self) -> &[u32; SPREAD_BINS] {
        &self.bins
    }

    /// Number of bins hit at least once.
    pub fn occupied(&self) -> usize {
        self.bins.iter().filter(|&&n| n > 0).count()
    }

    /// Spread as a percentage; with 100 bins this equals the occupied count.
    pub fn spread_percent(&self) -> f64 {
        self.occupied() as f64
    }
}

/// Bins every in-range sample value.
pub fn spread_of_sample(sample: &OrbitSample) -> SpreadGrid {
    assert!(!sample.values.is_empty(), "orbit sample must be nonempty");
    let mut grid = SpreadGrid::new();
    for &y in &sample.values {
        grid.record(y);
    }
    grid
}

/// One cell of a spread map: occupied-pixel count, with a divergence flag
/// for orbits that tripped the guard (occupied is 0 there).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpreadCell {
    pub occupied: u32,
    pub divergent: bool,
}

/// Occupancy counts over a (gamma_min, C) grid, row-major with gamma_min as
/// the slow axis.
#[derive(Debug, Clone, PartialEq)]
pub struct SpreadMapResult {
    pub gamma_min_axis: Vec<f64>,
    pub c_axis: Vec<f64>,
    pub cells: Vec<SpreadCell>,
    pub protocol: OrbitSpec,
}

impl SpreadMapResult {
    pub fn cell(&self, gamma_min_idx: usize, c_idx: usize) -> &SpreadCell {
        &self.cells[gamma_min_idx * self.c_axis.len() + c_idx]
    }

    /// All cells of one gamma_min row, in ascending-c order.
    pub fn row(&self, gamma_min_idx: usize) -> &[SpreadCell] {
        let w = self.c_axis.len();
        &self.cells[gamma_min_idx * w..(gamma_min_idx + 1) * w]
    }
}

fn validate_axis(axis: &[f64], name: &'static str) -> Result<(), ParamError> {
    if axis.is_empty() {
        return Err(ParamError::InvalidAxis { reason: name });
    }
    if axis.iter().any(|v| !v.is_finite()) {
        return Err(ParamError::InvalidAxis { reason: "axis values must be finite" });
    }
    if axis.windows(2).any(|w| w[0] >= w[1]) {
        return Err(ParamError::InvalidAxis { reason: "axis must be strictly ascending" });
    }
    Ok(())
}

/// Computes the occupied-pixel count for every (gamma_min, c) cell under a
/// shared protocol. Cells are evaluated in parallel; assembly order is
/// fixed, so the result is independent of the schedule.
pub fn spread_sweep(
    shape: GrowthShape,
    gamma_max: f64,
    gamma_min_axis: &[f64],
    c_axis: &[f64],
    spec: &OrbitSpec,
) -> Result<SpreadMapResult, ParamError> {
    shape.validate()?;
    spec.validate()?;
    validate_axis(gamma_min_axis, "gamma_min axis must be nonempty")?;
    validate_axis(c_axis, "c axis must be nonempty")?;
    for &gmin in gamma_min_axis {
        // Surfaces gamma_min >= gamma_max (and out-of-range bounds) up front.
        GrowthRange::new(gmin, gamma_max)?;
    }
    for &c in c_axis {
        if !(c.is_finite() && c > 0.0) {
            return Err(ParamError::InvalidC { c });
        }
    }

    let width = c_axis.len();
    let cells: Vec<SpreadCell> = (0..gamma_min_axis.len() * width)
        .into_par_iter()
        .map(|idx| {
            let gmin = gamma_min_axis[idx / width];
            let c = c_axis[idx % width];
            let range = GrowthRange::new(gmin, gamma_max).expect("validated above");
            let params = MapParams::new(shape, range, c).expect("validated above");
            match sample_orbit(&params, spec) {
                Ok(sample) => SpreadCell {
                    occupied: spread_of_sample(&sample).occupied() as u32,
                    divergent: false,
                },
                Err(_) => SpreadCell { occupied: 0, divergent: true },
            }
        })
        .collect();

    Ok(SpreadMapResult {
        gamma_min_axis: gamma_min_axis.to_vec(),
        c_axis: c_axis.to_vec(),
        cells,
        protocol: *spec,
    })
}

/// Uniform inclusive axis helper for CLI and sweeps: `steps` points from
/// `min` to `max` (a single point when `steps` is 1).
pub fn uniform_axis(min: f64, max: f64, steps: usize) -> Vec<f64> {
    if steps <= 1 {
        return vec![min];
    }
    (0..steps)
        .map(|i| min + (i as f64) * (max - min) / ((steps - 1) as f64))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tanh_params(a_y: f64, gmin: f64, gmax: f64, c: f64) -> MapParams {
        MapParams::new(
            GrowthShape::tanh(a_y).unwrap(),
            GrowthRange::new(gmin, gmax).unwrap(),
            c,
        )
        .unwrap()
    }

    #[test]
    fn bin_index_edges() {
        assert_eq!(bin_index(0.0), Some(0));
        assert_eq!(bin_index(1.0), Some(99));
        assert_eq!(bin_index(0.999_999), Some(99));
        assert_eq!(bin_index(0.005), Some(0));
        assert_eq!(bin_index(0.01), Some(1));
        assert_eq!(bin_index(1.05), None);
        assert_eq!(bin_index(-0.001), None);
        assert_eq!(bin_index(f64::NAN), None);
    }

    #[test]
    fn fixed_point_sample_fills_one_pixel() {
        let params =
            MapParams::new(GrowthShape::Linear, GrowthRange::unit(), 2.0).unwrap();
        for sample_len in [1usize, 2, 7, 50, 500] {
            let spec = OrbitSpec { sample_len, ..OrbitSpec::default() };
            let grid = spread_of_sample(&sample_orbit(&params, &spec).unwrap());
            assert_eq!(grid.occupied(), 1, "sample_len={sample_len}");
            assert_eq!(grid.spread_percent(), 1.0);
        }
    }

    #[test]
    fn period_three_fills_three_pixels() {
        let spec = OrbitSpec { sample_len: 500, ..OrbitSpec::default() };
        let sample = sample_orbit(&tanh_params(5.0, 0.02, 1.0, 3.5), &spec).unwrap();
        let grid = spread_of_sample(&sample);
        assert_eq!(grid.occupied(), 3);
    }

    #[test]
    fn cycle_values_above_one_fall_off_the_grid() {
        // The period-6 cycle at gamma_min = 0.018 has one value near 1.03,
        // which lies outside [0, 1] and must not be clamped into the top bin.
        let spec = OrbitSpec { sample_len: 500, ..OrbitSpec::default() };
        let sample = sample_orbit(&tanh_params(5.0, 0.018, 1.0, 3.5), &spec).unwrap();
        assert!(sample.values.iter().any(|&v| v > 1.0));
        assert_eq!(spread_of_sample(&sample).occupied(), 5);
    }

    #[test]
    fn chaotic_sample_fills_many_pixels() {
        let spec = OrbitSpec { sample_len: 500, ..OrbitSpec::default() };
        let sample = sample_orbit(&tanh_params(5.0, 0.0, 1.0, 3.5), &spec).unwrap();
        assert!(spread_of_sample(&sample).occupied() >= 20);
    }

    #[test]
    fn occupied_bounded_by_distinct_values() {
        let spec = OrbitSpec { sample_len: 500, ..OrbitSpec::default() };
        for params in [
            tanh_params(5.0, 0.02, 1.0, 3.5),
            tanh_params(5.0, 0.018, 1.0, 3.5),
            tanh_params(5.0, 0.0, 1.0, 3.5),
        ] {
            let sample = sample_orbit(&params, &spec).unwrap();
            let distinct: std::collections::BTreeSet<u64> =
                sample.values.iter().map(|v| v.to_bits()).collect();
            let occ = spread_of_sample(&sample).occupied();
            assert!(occ <= distinct.len().min(SPREAD_BINS));
        }
    }

    #[test]
    fn single_cell_sweep_matches_direct_sample() {
        let spec = OrbitSpec { sample_len: 500, ..OrbitSpec::default() };
        let shape = GrowthShape::tanh(5.0).unwrap();
        let result = spread_sweep(shape, 1.0, &[0.02], &[3.5], &spec).unwrap();
        assert_eq!(result.cells.len(), 1);
        let direct = spread_of_sample(&sample_orbit(&tanh_params(5.0, 0.02, 1.0, 3.5), &spec).unwrap());
        assert_eq!(result.cell(0, 0).occupied as usize, direct.occupied());
    }

    #[test]
    fn sweep_validates_axes() {
        let shape = GrowthShape::tanh(5.0).unwrap();
        let spec = OrbitSpec::default();
        assert!(spread_sweep(shape, 1.0, &[], &[3.5], &spec).is_err());
        assert!(spread_sweep(shape, 1.0, &[0.1, 0.05], &[3.5], &spec).is_err());
        assert!(spread_sweep(shape, 0.5, &[0.6], &[3.5], &spec).is_err());
        assert!(spread_sweep(shape, 1.0, &[0.0], &[-1.0], &spec).is_err());
    }

    #[test]
    fn divergent_cells_flagged() {
        let spec = OrbitSpec::default();
        let result = spread_sweep(GrowthShape::Linear, 1.0, &[0.0], &[5.0], &spec).unwrap();
        assert_eq!(result.cell(0, 0), &SpreadCell { occupied: 0, divergent: true });
    }

    #[test]
    fn sweep_is_schedule_independent() {
        let spec = OrbitSpec { sample_len: 200, ..OrbitSpec::default() };
        let shape = GrowthShape::tanh(5.0).unwrap();
        let gmins = uniform_axis(0.0, 0.1, 5);
        let cs = uniform_axis(2.0, 4.0, 21);
        let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let many = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap();
        let a = one.install(|| spread_sweep(shape, 1.0, &gmins, &cs, &spec).unwrap());
        let b = many.install(|| spread_sweep(shape, 1.0, &gmins, &cs, &spec).unwrap());
        assert_eq!(a, b);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            // Order-preserving and total on [0, 1].
            #[test]
            fn bin_index_monotone(a in 0.0f64..=1.0, b in 0.0f64..=1.0) {
                let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
                let (ka, kb) = (bin_index(lo).unwrap(), bin_index(hi).unwrap());
                prop_assert!(ka <= kb);
            }
        }
    }
}
