//! Momentum-map images: occupancy sampling of the `(J, H)` plane,
//! critical-value curves of the reduced Hamiltonian, cusp typing, and
//! detection of the bifurcation events the curves undergo as `t4` moves.

use crate::linear::{self, Side};
use crate::model::{eval_h, eval_j, FixedPoint, ModelParams};
use crate::normal_form::{classify_criticality, CoefficientSource, Verdict};
use crate::GaudinError;
use serde::Serialize;

/// Type of a reduced critical point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CriticalKind {
    EllipticRegular,
    HyperbolicRegular,
    Cusp,
    RankZero,
}

/// A critical point of the reduced Hamiltonian at fixed `j`, lying on one
/// branch of the `sigma = 0` locus.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ReducedCriticalPoint {
    pub j: f64,
    pub k: f64,
    /// Sign of the square root eliminating the inner product.
    pub branch: i8,
    pub h: f64,
    pub kind: CriticalKind,
    /// Determinant of the reduced Hessian, recorded for diagnostics.
    pub hessian_det: f64,
}

/// Admissible `K` interval at fixed `j`: both poles stay on their spheres.
pub fn k_interval(params: &ModelParams, j: f64) -> (f64, f64) {
    let lo = (-2.0 * params.r1 - j).max(j - 2.0 * params.r2);
    let hi = (2.0 * params.r1 - j).min(j + 2.0 * params.r2);
    (lo, hi)
}

fn z_coords(params: &ModelParams, j: f64, k: f64) -> (f64, f64) {
    ((j + k) / (2.0 * params.r1), (j - k) / (2.0 * params.r2))
}

/// Product `(1 - z1^2)(1 - z2^2)` under the square root of the branch.
fn branch_radicand(params: &ModelParams, j: f64, k: f64) -> f64 {
    let (z1, z2) = z_coords(params, j, k);
    (1.0 - z1 * z1) * (1.0 - z2 * z2)
}

/// Reduced Hamiltonian on the `sigma = 0` locus with the inner product
/// eliminated along the chosen branch.
pub fn reduced_hamiltonian(
    params: &ModelParams,
    j: f64,
    k: f64,
    branch: i8,
) -> Result<f64, GaudinError> {
    let (lo, hi) = k_interval(params, j);
    if k < lo - 1e-12 || k > hi + 1e-12 {
        return Err(GaudinError::domain(
            "reduced_hamiltonian",
            format!("K = {k} outside admissible interval [{lo}, {hi}] at j = {j}"),
        ));
    }
    let (z1, z2) = z_coords(params, j, k);
    let p = branch_radicand(params, j, k).max(0.0);
    let xi_rel = branch as f64 * p.sqrt();
    let zsum = z1 + z2;
    Ok(params.t0 * zsum * zsum
        + params.w * (params.t1 * z1 + params.t2 * z2)
        + params.t3 * xi_rel
        + params.t4 * z1 * z2)
}

/// Analytic `dH/dK` along a branch, the criticality function whose zeros are
/// the rank-1 critical values. Only meaningful strictly inside the interval.
pub fn criticality_function(params: &ModelParams, j: f64, k: f64, branch: i8) -> f64 {
    let (z1, z2) = z_coords(params, j, k);
    let dz1 = 1.0 / (2.0 * params.r1);
    let dz2 = -1.0 / (2.0 * params.r2);
    let p = branch_radicand(params, j, k).max(1e-300);
    let dp = -2.0 * z1 * dz1 * (1.0 - z2 * z2) - 2.0 * z2 * dz2 * (1.0 - z1 * z1);
    params.t0 * 2.0 * (z1 + z2) * (dz1 + dz2)
        + params.w * (params.t1 * dz1 + params.t2 * dz2)
        + params.t3 * branch as f64 * dp / (2.0 * p.sqrt())
        + params.t4 * (dz1 * z2 + z1 * dz2)
}

/// Analytic `d2H/dK2` along a branch.
pub fn d2h_dk2(params: &ModelParams, j: f64, k: f64, branch: i8) -> f64 {
    let (z1, z2) = z_coords(params, j, k);
    let dz1 = 1.0 / (2.0 * params.r1);
    let dz2 = -1.0 / (2.0 * params.r2);
    let p = branch_radicand(params, j, k).max(1e-300);
    let dp = -2.0 * z1 * dz1 * (1.0 - z2 * z2) - 2.0 * z2 * dz2 * (1.0 - z1 * z1);
    let ddp = -2.0 * dz1 * dz1 * (1.0 - z2 * z2) - 2.0 * dz2 * dz2 * (1.0 - z1 * z1)
        + 8.0 * z1 * dz1 * z2 * dz2;
    let sqrt_term = ddp / (2.0 * p.sqrt()) - dp * dp / (4.0 * p.powf(1.5));
    2.0 * params.t0 * (dz1 + dz2) * (dz1 + dz2)
        + 2.0 * params.t4 * dz1 * dz2
        + params.t3 * branch as f64 * sqrt_term
}

/// `d2H/dsigma2` at `sigma = 0` along a branch.
pub fn d2h_dsigma2(params: &ModelParams, j: f64, k: f64, branch: i8) -> f64 {
    let p = branch_radicand(params, j, k).max(1e-300);
    -params.t3 * branch as f64 / p.sqrt()
}

/// Determinant of the reduced Hessian `diag(d2H/dK2, d2H/dsigma2)`.
pub fn reduced_hessian_det(params: &ModelParams, j: f64, k: f64, branch: i8) -> f64 {
    d2h_dk2(params, j, k, branch) * d2h_dsigma2(params, j, k, branch)
}

/// Subintervals of the sign-change scan in `K`.
const SCAN_SUBDIVISIONS: usize = 400;
/// Margin keeping the scan away from the interval endpoints, where one
/// sphere coordinate hits a pole and the branch square root degenerates.
const ENDPOINT_MARGIN: f64 = 1e-7;
/// Absolute tolerance for typing a point as a cusp.
const CUSP_DET_TOL: f64 = 1e-9;

fn bisect(params: &ModelParams, j: f64, branch: i8, mut a: f64, mut b: f64, mut fa: f64) -> f64 {
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if (b - a).abs() < 1e-12 {
            return mid;
        }
        let fm = criticality_function(params, j, mid, branch);
        if fm == 0.0 {
            return mid;
        }
        if (fa < 0.0) == (fm < 0.0) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    0.5 * (a + b)
}

/// The `J` values of the four rank-0 points.
pub fn rank0_j_values(params: &ModelParams) -> [(FixedPoint, f64); 4] {
    FixedPoint::ALL.map(|fp| (fp, eval_j(params, &fp.point())))
}

/// All critical points of the reduced Hamiltonian at fixed `j`, over both
/// branches, found by a sign-change scan refined with bisection. Interval
/// endpoints contribute rank-0 markers when `j` matches a fixed-point value.
pub fn critical_points(
    params: &ModelParams,
    j: f64,
) -> Result<Vec<ReducedCriticalPoint>, GaudinError> {
    params.require_t3_nonzero()?;
    let (lo, hi) = k_interval(params, j);
    let mut out = Vec::new();
    if hi - lo > 2.0 * ENDPOINT_MARGIN {
        let margin = ENDPOINT_MARGIN * (hi - lo).max(1.0);
        let (a, b) = (lo + margin, hi - margin);
        for branch in [1i8, -1i8] {
            let mut prev_k = a;
            let mut prev_f = criticality_function(params, j, prev_k, branch);
            let mut roots: Vec<f64> = Vec::new();
            for i in 1..=SCAN_SUBDIVISIONS {
                let k = a + (b - a) * i as f64 / SCAN_SUBDIVISIONS as f64;
                let f = criticality_function(params, j, k, branch);
                if prev_f == 0.0 {
                    roots.push(prev_k);
                } else if (prev_f < 0.0) != (f < 0.0) {
                    roots.push(bisect(params, j, branch, prev_k, k, prev_f));
                }
                prev_k = k;
                prev_f = f;
            }
            roots.dedup_by(|x, y| (*x - *y).abs() < 1e-9);
            for k in roots {
                let det = reduced_hessian_det(params, j, k, branch);
                let kind = if det.abs() <= CUSP_DET_TOL {
                    CriticalKind::Cusp
                } else if det > 0.0 {
                    CriticalKind::EllipticRegular
                } else {
                    CriticalKind::HyperbolicRegular
                };
                out.push(ReducedCriticalPoint {
                    j,
                    k,
                    branch,
                    h: reduced_hamiltonian(params, j, k, branch)?,
                    kind,
                    hessian_det: det,
                });
            }
        }
    }
    for (fp, jv) in rank0_j_values(params) {
        if (j - jv).abs() < 1e-9 {
            let pt = fp.point();
            let k = params.r1 * pt.z1 - params.r2 * pt.z2;
            out.push(ReducedCriticalPoint {
                j,
                k,
                branch: 1,
                h: eval_h(params, &pt),
                kind: CriticalKind::RankZero,
                hessian_det: 0.0,
            });
        }
    }
    Ok(out)
}

/// One traced polyline of critical values, typed and carrying its branch.
#[derive(Clone, Debug, Serialize)]
pub struct CurveSegment {
    pub kind: CriticalKind,
    pub branch: i8,
    /// Points as `(j, k, h)` triples.
    pub points: Vec<(f64, f64, f64)>,
}

/// A cusp marker on a traced curve.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct CuspMarker {
    pub j: f64,
    pub k: f64,
    pub h: f64,
    pub branch: i8,
}

/// Rank-0 markers with their linear class.
#[derive(Clone, Debug, Serialize)]
pub struct Rank0Marker {
    pub fixed_point: FixedPoint,
    pub j: f64,
    pub h: f64,
    pub class: linear::EigenClass,
}

/// Traced critical-value curves over a `j` grid.
#[derive(Clone, Debug, Serialize, Default)]
pub struct TracedCurves {
    pub segments: Vec<CurveSegment>,
    pub cusps: Vec<CuspMarker>,
    pub rank0: Vec<Rank0Marker>,
}

impl TracedCurves {
    pub fn hyperbolic_segment_count(&self) -> usize {
        self.segments
            .iter()
            .filter(|s| s.kind == CriticalKind::HyperbolicRegular && s.points.len() >= 2)
            .count()
    }
}

struct Chain {
    branch: i8,
    points: Vec<(usize, ReducedCriticalPoint)>,
    open: bool,
}

/// Damped Newton on `(F, G) = 0` over `(j, k)` at fixed parameters, used to
/// polish the fold endpoint of a hyperbolic segment into a cusp location.
fn newton_cusp(params: &ModelParams, branch: i8, mut j: f64, mut k: f64) -> Option<(f64, f64)> {
    let h = 1e-7;
    let eval = |j: f64, k: f64| -> Option<[f64; 2]> {
        let (lo, hi) = k_interval(params, j);
        if k <= lo || k >= hi || j.abs() >= params.r1 + params.r2 {
            return None;
        }
        Some([
            criticality_function(params, j, k, branch),
            d2h_dk2(params, j, k, branch),
        ])
    };
    for _ in 0..60 {
        let r = eval(j, k)?;
        let norm = r[0].abs().max(r[1].abs());
        if norm < 1e-10 {
            return Some((j, k));
        }
        let rj = eval(j + h, k)?;
        let rjm = eval(j - h, k)?;
        let rk = eval(j, k + h)?;
        let rkm = eval(j, k - h)?;
        let a = (rj[0] - rjm[0]) / (2.0 * h);
        let b = (rk[0] - rkm[0]) / (2.0 * h);
        let c = (rj[1] - rjm[1]) / (2.0 * h);
        let d = (rk[1] - rkm[1]) / (2.0 * h);
        let det = a * d - b * c;
        if det.abs() < 1e-16 {
            return None;
        }
        let dj = -(d * r[0] - b * r[1]) / det;
        let dk = -(-c * r[0] + a * r[1]) / det;
        let mut lambda = 1.0;
        loop {
            let cand = eval(j + lambda * dj, k + lambda * dk);
            if let Some(rc) = cand {
                if rc[0].abs().max(rc[1].abs()) < norm || lambda < 1e-4 {
                    j += lambda * dj;
                    k += lambda * dk;
                    break;
                }
            }
            lambda *= 0.5;
            if lambda < 1e-6 {
                return None;
            }
        }
    }
    None
}

/// Sweeps `critical_points` over the grid and links the results into typed
/// polylines by nearest-neighbor continuation in `(k, branch)`; segments are
/// split where the Hessian type changes and cusp markers emitted at the
/// splits.
pub fn trace_curves(params: &ModelParams, j_grid: &[f64]) -> Result<TracedCurves, GaudinError> {
    params.require_t3_nonzero()?;
    let mut chains: Vec<Chain> = Vec::new();
    let j_span: f64 = params.r1 + params.r2;
    for (gi, &j) in j_grid.iter().enumerate() {
        if j.abs() > j_span {
            return Err(GaudinError::domain(
                "trace_curves",
                format!("j = {j} outside the momentum range"),
            ));
        }
        let pts: Vec<ReducedCriticalPoint> = critical_points(params, j)?
            .into_iter()
            .filter(|p| p.kind != CriticalKind::RankZero)
            .collect();
        let (lo, hi) = k_interval(params, j);
        let gate = 0.2 * (hi - lo).max(1e-6);
        let mut claimed = vec![false; pts.len()];
        for chain in chains.iter_mut().filter(|c| c.open) {
            let last = &chain.points.last().unwrap().1;
            let mut best: Option<(usize, f64)> = None;
            for (i, p) in pts.iter().enumerate() {
                if claimed[i] || p.branch != chain.branch {
                    continue;
                }
                let d = (p.k - last.k).abs();
                if d <= gate && best.map_or(true, |(_, bd)| d < bd) {
                    best = Some((i, d));
                }
            }
            match best {
                Some((i, _)) => {
                    claimed[i] = true;
                    chain.points.push((gi, pts[i]));
                }
                None => chain.open = false,
            }
        }
        for (i, p) in pts.iter().enumerate() {
            if !claimed[i] {
                chains.push(Chain { branch: p.branch, points: vec![(gi, *p)], open: true });
            }
        }
    }

    let mut traced = TracedCurves::default();
    let last_grid = j_grid.len().saturating_sub(1);
    let grid_step = if j_grid.len() >= 2 {
        (j_grid[1] - j_grid[0]).abs()
    } else {
        1e-2
    };
    for chain in &chains {
        // split the chain into maximal runs of one Hessian type
        let mut runs: Vec<(CriticalKind, Vec<(usize, ReducedCriticalPoint)>)> = Vec::new();
        for (gi, p) in &chain.points {
            let kind = match p.kind {
                CriticalKind::Cusp => runs
                    .last()
                    .map(|(k, _)| *k)
                    .unwrap_or(CriticalKind::EllipticRegular),
                k => k,
            };
            match runs.last_mut() {
                Some((k, pts)) if *k == kind => pts.push((*gi, *p)),
                _ => runs.push((kind, vec![(*gi, *p)])),
            }
        }
        for (kind, pts) in &runs {
            traced.segments.push(CurveSegment {
                kind: *kind,
                branch: chain.branch,
                points: pts.iter().map(|(_, q)| (q.j, q.k, q.h)).collect(),
            });
            if *kind != CriticalKind::HyperbolicRegular {
                continue;
            }
            // a hyperbolic run ends either at a fold (cusp) or at the sweep
            // boundary; polish each interior endpoint on the (F, G) system
            for (gi, q) in [pts.first().unwrap(), pts.last().unwrap()] {
                if *gi == 0 || *gi == last_grid {
                    continue;
                }
                if let Some((jc, kc)) = newton_cusp(params, chain.branch, q.j, q.k) {
                    if (jc - q.j).abs() <= 4.0 * grid_step {
                        if let Ok(h) = reduced_hamiltonian(params, jc, kc, chain.branch) {
                            let dup = traced.cusps.iter().any(|c| {
                                c.branch == chain.branch
                                    && (c.j - jc).abs() < 1e-6
                                    && (c.k - kc).abs() < 1e-6
                            });
                            if !dup {
                                traced.cusps.push(CuspMarker {
                                    j: jc,
                                    k: kc,
                                    h,
                                    branch: chain.branch,
                                });
                            }
                        }
                    }
                }
            }
        }
    }

    for (fp, jv) in rank0_j_values(params) {
        traced.rank0.push(Rank0Marker {
            fixed_point: fp,
            j: jv,
            h: eval_h(params, &fp.point()),
            class: linear::classify(params, fp).class,
        });
    }
    Ok(traced)
}

/// Occupancy bitmap of the momentum-map image.
#[derive(Clone, Debug, Serialize)]
pub struct OccupancyBitmap {
    pub j_min: f64,
    pub j_max: f64,
    pub h_min: f64,
    pub h_max: f64,
    pub nx: usize,
    pub ny: usize,
    /// Row-major cells; bit 0 marks occupancy, bit 1 a double cover.
    pub cells: Vec<u8>,
}

impl OccupancyBitmap {
    pub fn index(&self, ix: usize, iy: usize) -> usize {
        iy * self.nx + ix
    }

    pub fn cell_of(&self, j: f64, h: f64) -> Option<(usize, usize)> {
        if !(self.j_min..=self.j_max).contains(&j) || !(self.h_min..=self.h_max).contains(&h) {
            return None;
        }
        let fx = (j - self.j_min) / (self.j_max - self.j_min);
        let fy = (h - self.h_min) / (self.h_max - self.h_min);
        let ix = ((fx * self.nx as f64) as usize).min(self.nx - 1);
        let iy = ((fy * self.ny as f64) as usize).min(self.ny - 1);
        Some((ix, iy))
    }

    pub fn occupied(&self, ix: usize, iy: usize) -> bool {
        self.cells[self.index(ix, iy)] & 1 != 0
    }

    /// Whether `(j, h)` lies in an occupied cell or next to one (the one-cell
    /// tolerance of the containment checks).
    pub fn contains_within_one_cell(&self, j: f64, h: f64) -> bool {
        let Some((ix, iy)) = self.cell_of(j, h) else {
            return false;
        };
        let (ix, iy) = (ix as isize, iy as isize);
        for dy in -1..=1 {
            for dx in -1..=1 {
                let (x, y) = (ix + dx, iy + dy);
                if x >= 0
                    && y >= 0
                    && (x as usize) < self.nx
                    && (y as usize) < self.ny
                    && self.occupied(x as usize, y as usize)
                {
                    return true;
                }
            }
        }
        false
    }

    pub fn occupied_count(&self) -> usize {
        self.cells.iter().filter(|&&c| c & 1 != 0).count()
    }

    pub fn double_cover_count(&self) -> usize {
        self.cells.iter().filter(|&&c| c & 2 != 0).count()
    }
}

/// Exhaustive occupancy sampling: for each `(z1, z2)` pair the fiber's `H`
/// values fill the interval between the two inner-product extremes, so the
/// whole vertical cell span is stamped. Deterministic for a given density.
pub fn sample_image(
    params: &ModelParams,
    resolution: usize,
) -> Result<OccupancyBitmap, GaudinError> {
    if resolution == 0 || resolution > 4096 {
        return Err(GaudinError::domain(
            "sample_image",
            format!("resolution {resolution} outside 1..=4096"),
        ));
    }
    let span = params.r1 + params.r2;
    let (j_min, j_max) = (-span, span);

    let nz = (2 * resolution).clamp(512, 4096);
    let mut h_min = f64::INFINITY;
    let mut h_max = f64::NEG_INFINITY;
    let eval_pair = |z1: f64, z2: f64, c: f64| {
        let zsum = z1 + z2;
        let cross = ((1.0 - z1 * z1) * (1.0 - z2 * z2)).max(0.0).sqrt();
        params.t0 * zsum * zsum
            + params.w * (params.t1 * z1 + params.t2 * z2)
            + params.t3 * c * cross
            + params.t4 * z1 * z2
    };
    for i in 0..=nz {
        let z1 = -1.0 + 2.0 * i as f64 / nz as f64;
        for kdx in 0..=nz {
            let z2 = -1.0 + 2.0 * kdx as f64 / nz as f64;
            let (ha, hb) = (eval_pair(z1, z2, -1.0), eval_pair(z1, z2, 1.0));
            h_min = h_min.min(ha.min(hb));
            h_max = h_max.max(ha.max(hb));
        }
    }
    if !(h_min.is_finite() && h_max.is_finite()) {
        return Err(GaudinError::domain("sample_image", "H range is not finite"));
    }
    if h_max - h_min < 1e-12 {
        h_max = h_min + 1.0;
    }

    let (nx, ny) = (resolution, resolution);
    let mut bmp =
        OccupancyBitmap { j_min, j_max, h_min, h_max, nx, ny, cells: vec![0; nx * ny] };
    let dh = (h_max - h_min) / ny as f64;
    for i in 0..=nz {
        let z1 = -1.0 + 2.0 * i as f64 / nz as f64;
        for kdx in 0..=nz {
            let z2 = -1.0 + 2.0 * kdx as f64 / nz as f64;
            let j = params.r1 * z1 + params.r2 * z2;
            let (ha, hb) = (eval_pair(z1, z2, -1.0), eval_pair(z1, z2, 1.0));
            let (hlo, hhi) = (ha.min(hb), ha.max(hb));
            let fx = (j - j_min) / (j_max - j_min);
            let ix = ((fx * nx as f64) as usize).min(nx - 1);
            let mut iy = (((hlo - h_min) / dh) as usize).min(ny - 1);
            let iy_hi = (((hhi - h_min) / dh) as usize).min(ny - 1);
            loop {
                let idx = bmp.index(ix, iy);
                bmp.cells[idx] |= 1;
                if iy >= iy_hi {
                    break;
                }
                iy += 1;
            }
        }
    }

    if params.t3 == 0.0 {
        mark_double_cover(params, &mut bmp);
    }
    Ok(bmp)
}

/// Counts `(z1, z2)` sheets over a value `(j, h)` when the image map factors
/// through `(z1, z2)` (the `t3 = 0` case), by a dense root scan along the
/// line `R1 z1 + R2 z2 = j`.
pub fn sheet_count(params: &ModelParams, j: f64, h: f64) -> usize {
    let scan = 512;
    let z2_lo = ((j - params.r1) / params.r2).max(-1.0);
    let z2_hi = ((j + params.r1) / params.r2).min(1.0);
    if z2_hi <= z2_lo {
        return 0;
    }
    let g = |z2: f64| {
        let z1 = (j - params.r2 * z2) / params.r1;
        let zsum = z1 + z2;
        params.t0 * zsum * zsum + params.w * (params.t1 * z1 + params.t2 * z2)
            + params.t4 * z1 * z2
            - h
    };
    let mut count = 0;
    let mut prev = g(z2_lo);
    for i in 1..=scan {
        let z2 = z2_lo + (z2_hi - z2_lo) * i as f64 / scan as f64;
        let cur = g(z2);
        if (prev < 0.0) != (cur < 0.0) {
            count += 1;
        }
        prev = cur;
    }
    count
}

fn mark_double_cover(params: &ModelParams, bmp: &mut OccupancyBitmap) {
    let step = (bmp.nx / 256).max(1);
    for iy in (0..bmp.ny).step_by(step) {
        let h = bmp.h_min + (iy as f64 + 0.5) * (bmp.h_max - bmp.h_min) / bmp.ny as f64;
        for ix in (0..bmp.nx).step_by(step) {
            let j = bmp.j_min + (ix as f64 + 0.5) * (bmp.j_max - bmp.j_min) / bmp.nx as f64;
            let idx = bmp.index(ix, iy);
            if bmp.cells[idx] & 1 != 0 && sheet_count(params, j, h) >= 2 {
                for dy in 0..step.min(bmp.ny - iy) {
                    for dx in 0..step.min(bmp.nx - ix) {
                        let i2 = bmp.index(ix + dx, iy + dy);
                        bmp.cells[i2] |= 2;
                    }
                }
            }
        }
    }
}

/// Kinds of parameter-space events.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EventKind {
    HopfSuper,
    HopfSub,
    HopfDegenerate,
    CuspBirthDeath,
    CuspCollision,
    PleatSplit,
}

/// A detected bifurcation event in `(t4, J, H)`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct BifurcationEvent {
    pub kind: EventKind,
    pub t4: f64,
    pub j: f64,
    pub k: f64,
    pub h: f64,
    /// Whether the local cusp count change was confirmed by re-tracing.
    pub confirmed: bool,
}

fn g_branch(params: &ModelParams, t4: f64, j: f64, k: f64, branch: i8) -> f64 {
    d2h_dk2(&params.with_t4(t4), j, k, branch)
}

fn f_branch(params: &ModelParams, t4: f64, j: f64, k: f64, branch: i8) -> f64 {
    criticality_function(&params.with_t4(t4), j, k, branch)
}

/// Counts cusps of the traced image near `(j0, k0)` by type transitions.
fn transition_cusp_count(params: &ModelParams, t4: f64, j0: f64, k0: f64, radius: f64) -> usize {
    let p = params.with_t4(t4);
    let n = 60;
    let span = params.r1 + params.r2 - 1e-6;
    let grid: Vec<f64> = (0..=n)
        .map(|i| (j0 - radius + 2.0 * radius * i as f64 / n as f64).clamp(-span, span))
        .collect();
    match trace_curves(&p, &grid) {
        Ok(t) => t.cusps.iter().filter(|c| (c.k - k0).abs() <= 3.0 * radius).count(),
        Err(_) => 0,
    }
}

/// Damped Newton on the cusp-degeneracy closure system over `(t4, j, k)`:
/// `F = 0`, `G = 0`, `det D_(j,k)(F, G) = 0`.
fn newton_collision(
    params: &ModelParams,
    branch: i8,
    mut t4: f64,
    mut j: f64,
    mut k: f64,
) -> Option<(f64, f64, f64)> {
    let h = 1e-6;
    let system = |t4: f64, j: f64, k: f64| -> [f64; 3] {
        let f = f_branch(params, t4, j, k, branch);
        let g = g_branch(params, t4, j, k, branch);
        let dfj =
            (f_branch(params, t4, j + h, k, branch) - f_branch(params, t4, j - h, k, branch))
                / (2.0 * h);
        let dfk =
            (f_branch(params, t4, j, k + h, branch) - f_branch(params, t4, j, k - h, branch))
                / (2.0 * h);
        let dgj =
            (g_branch(params, t4, j + h, k, branch) - g_branch(params, t4, j - h, k, branch))
                / (2.0 * h);
        let dgk =
            (g_branch(params, t4, j, k + h, branch) - g_branch(params, t4, j, k - h, branch))
                / (2.0 * h);
        [f, g, dfj * dgk - dfk * dgj]
    };
    for _ in 0..80 {
        let r = system(t4, j, k);
        let norm = r.iter().map(|x| x.abs()).fold(0.0, f64::max);
        if norm < 1e-11 {
            return Some((t4, j, k));
        }
        let mut jac = [[0.0f64; 3]; 3];
        let base = [t4, j, k];
        for col in 0..3 {
            let mut up = base;
            let mut dn = base;
            up[col] += h;
            dn[col] -= h;
            let ru = system(up[0], up[1], up[2]);
            let rd = system(dn[0], dn[1], dn[2]);
            for row in 0..3 {
                jac[row][col] = (ru[row] - rd[row]) / (2.0 * h);
            }
        }
        let det = jac[0][0] * (jac[1][1] * jac[2][2] - jac[1][2] * jac[2][1])
            - jac[0][1] * (jac[1][0] * jac[2][2] - jac[1][2] * jac[2][0])
            + jac[0][2] * (jac[1][0] * jac[2][1] - jac[1][1] * jac[2][0]);
        if det.abs() < 1e-18 {
            return None;
        }
        let minor = |a: usize, b: usize| jac[a][b];
        let adj = [
            [
                minor(1, 1) * minor(2, 2) - minor(1, 2) * minor(2, 1),
                -(minor(0, 1) * minor(2, 2) - minor(0, 2) * minor(2, 1)),
                minor(0, 1) * minor(1, 2) - minor(0, 2) * minor(1, 1),
            ],
            [
                -(minor(1, 0) * minor(2, 2) - minor(1, 2) * minor(2, 0)),
                minor(0, 0) * minor(2, 2) - minor(0, 2) * minor(2, 0),
                -(minor(0, 0) * minor(1, 2) - minor(0, 2) * minor(1, 0)),
            ],
            [
                minor(1, 0) * minor(2, 1) - minor(1, 1) * minor(2, 0),
                -(minor(0, 0) * minor(2, 1) - minor(0, 1) * minor(2, 0)),
                minor(0, 0) * minor(1, 1) - minor(0, 1) * minor(1, 0),
            ],
        ];
        let mut delta = [0.0f64; 3];
        for row in 0..3 {
            delta[row] =
                -(adj[row][0] * r[0] + adj[row][1] * r[1] + adj[row][2] * r[2]) / det;
        }
        let mut lambda = 1.0;
        let norm0 = norm;
        loop {
            let cand =
                [t4 + lambda * delta[0], j + lambda * delta[1], k + lambda * delta[2]];
            let rc = system(cand[0], cand[1], cand[2]);
            let nc = rc.iter().map(|x| x.abs()).fold(0.0, f64::max);
            if nc < norm0 || lambda < 1e-4 {
                t4 = cand[0];
                j = cand[1];
                k = cand[2];
                break;
            }
            lambda *= 0.5;
        }
    }
    None
}

/// Scans a `t4` range for all event kinds: Hopf events from the thresholds
/// plus criticality, central cusp birth/death events from the symmetric
/// degeneracy, and cusp collision/split events from the three-equation
/// closure polished by damped Newton.
pub fn detect_events(
    params: &ModelParams,
    t4_lo: f64,
    t4_hi: f64,
) -> Result<Vec<BifurcationEvent>, GaudinError> {
    params.require_t3_nonzero()?;
    let mut events = Vec::new();

    for fp in [FixedPoint::M0, FixedPoint::M2] {
        let th = linear::thresholds(params, fp)?;
        for (side, t4) in [(Side::Minus, th.t4_minus), (Side::Plus, th.t4_plus)] {
            if t4 < t4_lo || t4 > t4_hi {
                continue;
            }
            let crit = classify_criticality(params, fp, side, CoefficientSource::LieSeries)?;
            let kind = match crit.verdict {
                Verdict::Supercritical => EventKind::HopfSuper,
                Verdict::Subcritical => EventKind::HopfSub,
                Verdict::Degenerate | Verdict::PossiblyHigherDegenerate => {
                    EventKind::HopfDegenerate
                }
                Verdict::NotAtBifurcation => continue,
            };
            let at = params.with_t4(t4);
            let pt = fp.point();
            events.push(BifurcationEvent {
                kind,
                t4,
                j: eval_j(&at, &pt),
                k: at.r1 * pt.z1 - at.r2 * pt.z2,
                h: eval_h(&at, &pt),
                confirmed: true,
            });
        }
    }

    // central cusp degeneracies: j = 0, K = 0 is critical by symmetry;
    // scan G(t4) for roots on both branches
    for branch in [1i8, -1i8] {
        let n = 400;
        let mut prev_t4 = t4_lo;
        let mut prev_g = g_branch(params, prev_t4, 0.0, 0.0, branch);
        for i in 1..=n {
            let t4 = t4_lo + (t4_hi - t4_lo) * i as f64 / n as f64;
            let g = g_branch(params, t4, 0.0, 0.0, branch);
            if (prev_g < 0.0) != (g < 0.0) {
                let mut a = prev_t4;
                let mut b = t4;
                let mut fa = prev_g;
                for _ in 0..100 {
                    let mid = 0.5 * (a + b);
                    let fm = g_branch(params, mid, 0.0, 0.0, branch);
                    if (fa < 0.0) == (fm < 0.0) {
                        a = mid;
                        fa = fm;
                    } else {
                        b = mid;
                    }
                }
                let t4_star = 0.5 * (a + b);
                let fval = f_branch(params, t4_star, 0.0, 0.0, branch);
                if fval.abs() < 1e-8 {
                    let h = reduced_hamiltonian(&params.with_t4(t4_star), 0.0, 0.0, branch)?;
                    // the central degeneracy changes the number of critical
                    // roots in the slice through the event
                    let count_at = |t4: f64| -> usize {
                        critical_points(&params.with_t4(t4), 0.0)
                            .map(|pts| pts.iter().filter(|p| p.branch == branch).count())
                            .unwrap_or(0)
                    };
                    let before = count_at(t4_star - 0.01);
                    let after = count_at(t4_star + 0.01);
                    events.push(BifurcationEvent {
                        kind: EventKind::CuspBirthDeath,
                        t4: t4_star,
                        j: 0.0,
                        k: 0.0,
                        h,
                        confirmed: before != after,
                    });
                }
            }
            prev_t4 = t4;
            prev_g = g;
        }
    }

    // off-center collision/split events from the three-equation closure
    let span = params.r1 + params.r2;
    let mut candidates: Vec<(i8, f64, f64, f64)> = Vec::new();
    let (nt, nj, nk) = (48usize, 24usize, 24usize);
    for branch in [1i8, -1i8] {
        for it in 0..=nt {
            let t4 = t4_lo + (t4_hi - t4_lo) * it as f64 / nt as f64;
            let p = params.with_t4(t4);
            for ij in 1..nj {
                let j = -span + 2.0 * span * ij as f64 / nj as f64;
                let (klo, khi) = k_interval(&p, j);
                if khi - klo < 1e-3 {
                    continue;
                }
                for ik in 1..nk {
                    let k = klo + (khi - klo) * ik as f64 / nk as f64;
                    let f = f_branch(params, t4, j, k, branch);
                    let g = g_branch(params, t4, j, k, branch);
                    let scale = 1.0 + f.abs().max(g.abs());
                    if f.abs() / scale < 0.08 && g.abs() / scale < 0.08 && j.abs() > 0.05 {
                        candidates.push((branch, t4, j, k));
                    }
                }
            }
        }
    }
    let mut found: Vec<(i8, f64, f64, f64)> = Vec::new();
    for (branch, t4, j, k) in candidates {
        if let Some((t4s, js, ks)) = newton_collision(params, branch, t4, j, k) {
            if !(t4s.is_finite() && js.is_finite() && ks.is_finite()) {
                continue;
            }
            if t4s < t4_lo - 1e-9 || t4s > t4_hi + 1e-9 || js.abs() < 1e-6 {
                continue;
            }
            let (klo, khi) = k_interval(&params.with_t4(t4s), js);
            if ks < klo || ks > khi {
                continue;
            }
            let dup = found.iter().any(|&(b2, t2, j2, k2)| {
                b2 == branch
                    && (t2 - t4s).abs() < 1e-6
                    && (j2 - js).abs() < 1e-6
                    && (k2 - ks).abs() < 1e-6
            });
            if !dup {
                found.push((branch, t4s, js, ks));
            }
        }
    }
    found.sort_by(|a, b| a.1.total_cmp(&b.1).then(a.2.total_cmp(&b.2)));
    for (branch, t4s, js, ks) in found {
        let h = reduced_hamiltonian(&params.with_t4(t4s), js, ks, branch)?;
        let before = transition_cusp_count(params, t4s - 1e-3, js, ks, 0.25);
        let after = transition_cusp_count(params, t4s + 1e-3, js, ks, 0.25);
        let kind = if after < before { EventKind::CuspCollision } else { EventKind::PleatSplit };
        events.push(BifurcationEvent { kind, t4: t4s, j: js, k: ks, h, confirmed: before != after });
    }

    events.sort_by(|a, b| a.t4.total_cmp(&b.t4).then(a.j.total_cmp(&b.j)));
    Ok(events)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The trigonometric configuration the printed reduced quantities are
    /// specific to: R1=1, R2=2, w=0, t0=-1/2, t3=1/2.
    fn paper_config(t4: f64) -> ModelParams {
        ModelParams::new(1.0, 2.0, 0.0, [-0.5, 0.0, 0.0, 0.5, t4]).unwrap()
    }

    /// Printed `f_j(K0, sigma0)`.
    fn f_j_printed(j: f64, k0: f64, sigma0: f64) -> f64 {
        (64.0 + j.powi(4) - 24.0 * j * k0 - 20.0 * k0 * k0 + k0.powi(4)
            - 2.0 * j * j * (10.0 + k0 * k0)
            - 64.0 * sigma0 * sigma0)
            .powf(-0.5)
    }

    /// Printed `F^{+-}_{j,t4}(K0, 0)`.
    fn f_printed(j: f64, t4: f64, k0: f64, sign: f64) -> f64 {
        1.5 * j
            + 2.0 * (t4 + 0.25) * k0
            + sign
                * 0.25
                * f_j_printed(j, k0, 0.0)
                * (24.0 * j + 40.0 * k0 + 4.0 * j * j * k0 - 4.0 * k0 * k0 * k0)
    }

    /// Printed `G_{j,t4}(K0)` with the branch carried by `sign`.
    fn g_printed(j: f64, t4: f64, k0: f64, sign: f64) -> f64 {
        let f = f_j_printed(j, k0, 0.0);
        sign * (f.powi(3) / 4.0) * (6.0 * j + 10.0 * k0 + j * j * k0 - k0 * k0 * k0).powi(2)
            + sign * f * (1.25 + j * j / 8.0 - 3.0 * k0 * k0 / 8.0)
            - t4 / 4.0
            - 1.0 / 16.0
    }

    #[test]
    fn reduced_hamiltonian_matches_printed_center_values() {
        let h = reduced_hamiltonian(&paper_config(-0.875), 0.0, 0.0, 1).unwrap();
        assert!((h - 0.5).abs() < 1e-15);
        let h = reduced_hamiltonian(&paper_config(0.375), 0.0, 0.0, -1).unwrap();
        assert!((h + 0.5).abs() < 1e-15);
        // t3 = 0 makes the branch irrelevant
        let p = ModelParams::new(1.0, 2.0, 0.0, [-0.25, 0.0, 0.0, 0.0, -1.0]).unwrap();
        let a = reduced_hamiltonian(&p, 0.3, 0.2, 1).unwrap();
        let b = reduced_hamiltonian(&p, 0.3, 0.2, -1).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn reduced_hamiltonian_rejects_out_of_interval_k() {
        assert!(reduced_hamiltonian(&paper_config(0.0), 0.0, 5.9, 1).is_err());
    }

    #[test]
    fn k_interval_matches_the_sphere_bounds() {
        let p = paper_config(0.0);
        let (lo, hi) = k_interval(&p, 0.7071067811865476);
        assert!((lo + 2.707106781186547).abs() < 1e-12);
        assert!((hi - 1.2928932188134525).abs() < 1e-12);
    }

    #[test]
    fn criticality_function_is_minus_one_eighth_of_printed_f() {
        let t4 = 0.3;
        let p = paper_config(t4);
        for (j, k0) in [(0.0, 0.7), (0.4, -0.9), (-0.6, 1.3), (0.9, 0.05)] {
            for (branch, sign) in [(1i8, 1.0), (-1i8, -1.0)] {
                let ours = criticality_function(&p, j, k0, branch);
                let printed = f_printed(j, t4, k0, sign);
                assert!(
                    (printed + 8.0 * ours).abs() < 1e-10,
                    "j={j}, k0={k0}, branch={branch}: printed {printed} vs -8 dH/dK {}",
                    -8.0 * ours
                );
            }
        }
    }

    #[test]
    fn criticality_vanishes_at_the_center_by_symmetry() {
        for t4 in [-0.875, 0.0, 0.375, 1.2] {
            for branch in [1i8, -1i8] {
                assert!(criticality_function(&paper_config(t4), 0.0, 0.0, branch).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn printed_f0_value() {
        assert!((f_j_printed(0.0, 0.0, 0.0) - 0.125).abs() < 1e-15);
    }

    #[test]
    fn branch_consistency_of_printed_hessian_entry() {
        // the printed G corresponds to the minus branch of our convention:
        // G(+printed) vanishes at t4 = 3/8 where our branch -1 degenerates,
        // and G(-printed) at t4 = -7/8 where our branch +1 does.
        let p38 = paper_config(0.375);
        assert!(g_printed(0.0, 0.375, 0.0, 1.0).abs() < 1e-15);
        assert!(d2h_dk2(&p38, 0.0, 0.0, -1).abs() < 1e-14);

        let pm78 = paper_config(-0.875);
        assert!(g_printed(0.0, -0.875, 0.0, -1.0).abs() < 1e-15);
        assert!(d2h_dk2(&pm78, 0.0, 0.0, 1).abs() < 1e-14);

        for (t4, k0, j) in [(0.1, 0.4, 0.0), (0.7, -0.8, 0.3)] {
            let p = paper_config(t4);
            let ours = d2h_dk2(&p, j, k0, -1);
            let printed = g_printed(j, t4, k0, 1.0);
            assert!((ours - printed).abs() < 1e-10, "{ours} vs {printed}");
            let ours = d2h_dk2(&p, j, k0, 1);
            let printed = g_printed(j, t4, k0, -1.0);
            assert!((ours - printed).abs() < 1e-10, "{ours} vs {printed}");
        }
    }

    #[test]
    fn analytic_derivative_matches_finite_differences() {
        let p = paper_config(0.45);
        let h = 1e-6;
        let mut checked = 0;
        for i in 0..40 {
            let j = -2.6 + 5.2 * i as f64 / 39.0;
            let (lo, hi) = k_interval(&p, j);
            if hi - lo < 0.2 {
                continue;
            }
            for t in 1..8 {
                let k = lo + (hi - lo) * t as f64 / 8.0;
                if k - lo < 0.05 || hi - k < 0.05 {
                    continue;
                }
                for branch in [1i8, -1i8] {
                    let f_analytic = criticality_function(&p, j, k, branch);
                    let f_num = (reduced_hamiltonian(&p, j, k + h, branch).unwrap()
                        - reduced_hamiltonian(&p, j, k - h, branch).unwrap())
                        / (2.0 * h);
                    let scale = f_analytic.abs().max(1.0);
                    assert!(
                        (f_analytic - f_num).abs() < 1e-6 * scale,
                        "j={j} k={k} branch={branch}: {f_analytic} vs {f_num}"
                    );
                    checked += 1;
                }
            }
        }
        assert!(checked > 100);
    }

    #[test]
    fn central_cusp_points_appear_at_the_printed_parameters() {
        let pts = critical_points(&paper_config(-0.875), 0.0).unwrap();
        let cusp = pts
            .iter()
            .find(|q| q.branch == 1 && q.k.abs() < 1e-6)
            .expect("central point missing");
        assert!(cusp.hessian_det.abs() < 1e-9, "det = {}", cusp.hessian_det);
        assert!((cusp.h - 0.5).abs() < 1e-9);
    }

    #[test]
    fn occupancy_extends_over_the_momentum_range() {
        let p = paper_config(0.0);
        let bmp = sample_image(&p, 128).unwrap();
        assert_eq!(bmp.j_min, -3.0);
        assert_eq!(bmp.j_max, 3.0);
        assert!((0..bmp.ny).any(|iy| bmp.occupied(0, iy)));
        assert!((0..bmp.ny).any(|iy| bmp.occupied(bmp.nx - 1, iy)));
    }

    #[test]
    fn double_cover_region_appears_for_t3_zero() {
        let p = ModelParams::new(1.0, 2.0, 0.0, [-0.25, 0.0, 0.0, 0.0, -1.0]).unwrap();
        let bmp = sample_image(&p, 128).unwrap();
        assert!(bmp.double_cover_count() > 0, "no double-covered cells found");
        assert!(bmp.double_cover_count() < bmp.occupied_count());
    }

    #[test]
    fn curves_lie_inside_the_occupancy_region() {
        let p = paper_config(0.45);
        let bmp = sample_image(&p, 256).unwrap();
        let grid: Vec<f64> = (0..=200).map(|i| -2.95 + 5.9 * i as f64 / 200.0).collect();
        let traced = trace_curves(&p, &grid).unwrap();
        assert!(!traced.segments.is_empty());
        for seg in &traced.segments {
            for &(j, _, h) in &seg.points {
                assert!(
                    bmp.contains_within_one_cell(j, h),
                    "({j}, {h}) escapes the occupancy region"
                );
            }
        }
    }

    #[test]
    fn flap_count_in_the_rational_family() {
        // one hyperbolic segment with two cusps after the second transition
        let p = ModelParams::new(1.0, 1.0, 1.0, [0.0, 0.5, 0.0, 0.5, -1.5]).unwrap();
        let grid: Vec<f64> = (0..=400).map(|i| -1.995 + 3.99 * i as f64 / 400.0).collect();
        let traced = trace_curves(&p, &grid).unwrap();
        assert_eq!(traced.hyperbolic_segment_count(), 1);
        assert_eq!(traced.cusps.len(), 2);

        // two focus-focus stage: no hyperbolic segments, m0 focus-focus
        let p = ModelParams::new(1.0, 1.0, 1.0, [0.0, 0.5, 0.0, 0.5, 0.5]).unwrap();
        let traced = trace_curves(&p, &grid).unwrap();
        assert_eq!(traced.hyperbolic_segment_count(), 0);
        assert!(traced.cusps.is_empty());
        let m0 = traced.rank0.iter().find(|m| m.fixed_point == FixedPoint::M0).unwrap();
        assert_eq!(m0.class, crate::linear::EigenClass::FocusFocus);
    }

    #[test]
    fn two_flaps_and_a_pleat_at_the_late_trigonometric_stage() {
        let p = paper_config(0.495);
        let grid: Vec<f64> = (0..=500).map(|i| -2.99 + 5.98 * i as f64 / 500.0).collect();
        let traced = trace_curves(&p, &grid).unwrap();
        assert_eq!(traced.hyperbolic_segment_count(), 3, "two flaps plus the pleat");
        assert_eq!(traced.cusps.len(), 6);
    }
}
