//! Sweeps over the bifurcation constant C: diagram datasets, per-C
//! classification, and onset estimates.
//!
//! Grid rows are independent and evaluated in parallel, but results are
//! always assembled in ascending-c order, so serial and parallel sweeps
//! produce bit-identical datasets.

use rayon::prelude::*;

use crate::map::{GrowthRange, GrowthShape, MapParams, ParamError};
use crate::orbit::{
    detect_period, lyapunov, sample_orbit, AttractorClass, OrbitSpec, PeriodDetectorConfig,
    LYAPUNOV_DEFAULT_STEPS,
};

/// Uniform inclusive grid over the bifurcation constant.
///
/// The default grid [1, 4] with 601 points (step 0.005) localizes the
/// reported onsets well inside their quoted tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CSweepSpec {
    c_min: f64,
    c_max: f64,
    c_steps: usize,
}

impl Default for CSweepSpec {
    fn default() -> Self {
        CSweepSpec { c_min: 1.0, c_max: 4.0, c_steps: 601 }
    }
}

impl CSweepSpec {
    pub fn new(c_min: f64, c_max: f64, c_steps: usize) -> Result<Self, ParamError> {
        let ok = c_min.is_finite() && c_max.is_finite() && 0.0 < c_min && c_min < c_max && c_steps >= 2;
        if ok {
            Ok(CSweepSpec { c_min, c_max, c_steps })
        } else {
            Err(ParamError::InvalidCSweep { c_min, c_max, c_steps })
        }
    }

    pub fn c_min(&self) -> f64 {
        self.c_min
    }

    pub fn c_max(&self) -> f64 {
        self.c_max
    }

    pub fn c_steps(&self) -> usize {
        self.c_steps
    }

    /// Grid point i = c_min + i * (c_max - c_min) / (c_steps - 1).
    pub fn grid_point(&self, i: usize) -> f64 {
        self.c_min + (i as f64) * (self.c_max - self.c_min) / ((self.c_steps - 1) as f64)
    }

    pub fn grid(&self) -> Vec<f64> {
        (0..self.c_steps).map(|i| self.grid_point(i)).collect()
    }

    pub fn resolution(&self) -> f64 {
        (self.c_max - self.c_min) / ((self.c_steps - 1) as f64)
    }
}

/// One row of a bifurcation diagram. Divergent rows keep their grid slot
/// with an empty value list so datasets stay rectangular.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagramRow {
    pub c: f64,
    pub values: Vec<f64>,
    pub divergent: bool,
}

/// Bifurcation diagram dataset: per-c post-transient samples, plus the
/// template (shape, range) and protocol shared by all rows.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagramDataset {
    pub shape: GrowthShape,
    pub range: GrowthRange,
    pub spec: OrbitSpec,
    pub rows: Vec<DiagramRow>,
}

/// Classification of one grid point. `lyapunov` is NaN for divergent rows
/// and `-inf` on superstable orbits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassifiedPoint {
    pub c: f64,
    pub class: AttractorClass,
    pub lyapunov: f64,
}

/// Onset estimates read off a classified sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OnsetReport {
    pub period_doubling_c: Option<f64>,
    pub chaos_c: Option<f64>,
    pub grid_resolution: f64,
}

/// Per-row envelope comparison against the `0.3 * gamma_max * C` line that
/// the maximum orbit values trace out.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnvelopePoint {
    pub c: f64,
    pub max_y: f64,
    pub ratio: f64,
}

/// Samples an orbit per grid point. Divergence is per-row data, not failure.
pub fn sweep_c(
    shape: GrowthShape,
    range: GrowthRange,
    sweep: &CSweepSpec,
    spec: &OrbitSpec,
) -> DiagramDataset {
    let rows: Vec<DiagramRow> = (0..sweep.c_steps)
        .into_par_iter()
        .map(|i| {
            let c = sweep.grid_point(i);
            let params = MapParams::new(shape, range, c).expect("grid c is positive and finite");
            match sample_orbit(&params, spec) {
                Ok(sample) => DiagramRow { c, values: sample.values, divergent: false },
                Err(_) => DiagramRow { c, values: Vec::new(), divergent: true },
            }
        })
        .collect();
    DiagramDataset { shape, range, spec: *spec, rows }
}

/// Classifies every grid point and estimates its Lyapunov exponent under a
/// shared protocol (y0 and transient from `spec`).
pub fn classify_sweep(
    shape: GrowthShape,
    range: GrowthRange,
    sweep: &CSweepSpec,
    spec: &OrbitSpec,
    cfg: &PeriodDetectorConfig,
) -> Vec<ClassifiedPoint> {
    (0..sweep.c_steps)
        .into_par_iter()
        .map(|i| {
            let c = sweep.grid_point(i);
            let params = MapParams::new(shape, range, c).expect("grid c is positive and finite");
            let class = detect_period(&params, spec, cfg);
            let lam = lyapunov(&params, spec.y0, spec.transient_len, LYAPUNOV_DEFAULT_STEPS)
                .unwrap_or(f64::NAN);
            ClassifiedPoint { c, class, lyapunov: lam }
        })
        .collect()
}

/// Reads onsets off a classified sweep (ascending in c).
///
/// Each onset requires its condition to hold at a grid point and at the next
/// one, suppressing isolated misclassifications inside periodic windows. The
/// chaos onset additionally requires a positive Lyapunov exponent so long
/// transients are not mistaken for chaos.
pub fn find_onsets(classified: &[ClassifiedPoint]) -> OnsetReport {
    assert!(!classified.is_empty(), "classified sweep must be nonempty");
    let resolution = if classified.len() >= 2 {
        classified[1].c - classified[0].c
    } else {
        0.0
    };
    let is_doubling = |pt: &ClassifiedPoint| matches!(pt.class, AttractorClass::Periodic { p } if p >= 2);
    let is_chaotic = |pt: &ClassifiedPoint| pt.class == AttractorClass::Aperiodic && pt.lyapunov > 0.0;

    let mut period_doubling_c = None;
    let mut chaos_c = None;
    for pair in classified.windows(2) {
        if period_doubling_c.is_none() && is_doubling(&pair[0]) && is_doubling(&pair[1]) {
            period_doubling_c = Some(pair[0].c);
        }
        if chaos_c.is_none() && is_chaotic(&pair[0]) && is_chaotic(&pair[1]) {
            chaos_c = Some(pair[0].c);
        }
        if period_doubling_c.is_some() && chaos_c.is_some() {
            break;
        }
    }
    OnsetReport { period_doubling_c, chaos_c, grid_resolution: resolution }
}

/// Compares each row's maximum sampled value against `0.3 * gamma_max * c`.
/// Divergent (empty) rows yield NaN entries.
pub fn envelope_check(dataset: &DiagramDataset, gamma_max: f64) -> Vec<EnvelopePoint> {
    assert!(!dataset.rows.is_empty(), "dataset must be nonempty");
    dataset
        .rows
        .iter()
        .map(|row| {
            if row.divergent || row.values.is_empty() {
                return EnvelopePoint { c: row.c, max_y: f64::NAN, ratio: f64::NAN };
            }
            let max_y = row.values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            let predicted = 0.3 * gamma_max * row.c;
            EnvelopePoint { c: row.c, max_y, ratio: max_y / predicted }
        })
        .collect()
}
