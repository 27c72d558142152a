//! Per-component link data: writhes, the linking matrix, the band census
//! and the structural validity checks on dotted components.

use std::collections::BTreeMap;

use super::{
    lay_out_row, trace_components_of, CellKind, ColorRole, Components, Diagram, DiagramError,
    Orientation,
};

/// Link data extracted from a closed diagram. `linking` is the full
/// symmetric matrix over all components (diagonal = writhe); the Kirby
/// matrix restricts to the h1/h2 components in first-appearance order.
#[derive(Clone, Debug)]
pub struct LinkSummary {
    pub components: Components,
    /// Signed self-crossing counts plus twist cells, per component.
    pub writhe: Vec<i64>,
    /// Full linking matrix over all components; diagonal is the writhe.
    pub linking: Vec<Vec<i64>>,
    /// Component ids of the Kirby components (h1 and h2), in order.
    pub kirby_components: Vec<usize>,
    /// Linking matrix restricted to the Kirby components.
    pub kirby_matrix: Vec<Vec<i64>>,
    /// Per Kirby component: true when it is dotted (h1).
    pub dotted_flags: Vec<bool>,
    pub surface_components: usize,
    /// Number of self-bands (all feet on one surface component).
    pub s: usize,
    /// Number of other-bands (feet on distinct surface components).
    pub omega: usize,
    pub warnings: Vec<String>,
}

fn orientation_sign(o: Orientation) -> i64 {
    match o {
        Orientation::Down => 1,
        Orientation::Up => -1,
    }
}

/// Geometric sign of a crossing cell under the frozen convention: for
/// `/+` the strand entering at the top left passes over, and the sign is
/// -eps(left) * eps(right); `/-` is the mirror. The convention is
/// calibrated once against the negatively curled unknot anchor.
pub fn crossing_sign(kind: CellKind, left: Orientation, right: Orientation) -> i64 {
    let token = match kind {
        CellKind::CrossPos => -1,
        CellKind::CrossNeg => 1,
        _ => panic!("not a crossing"),
    };
    token * orientation_sign(left) * orientation_sign(right)
}

pub fn link_summary(diag: &Diagram) -> Result<LinkSummary, DiagramError> {
    let boundaries = diag.boundaries()?;
    let components = trace_components_of(&diag.rows, &boundaries)?;
    let n = components.count;
    let mut warnings = Vec::new();

    // signed crossing sums; diagonal accumulates self-crossings directly
    let mut signed = vec![vec![0i64; n]; n];
    let mut writhe = vec![0i64; n];
    // feet of each band component, as surface component ids
    let mut feet: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut band_loose_ends: BTreeMap<usize, usize> = BTreeMap::new();

    for (r, row) in diag.rows.iter().enumerate() {
        let (placements, _) = lay_out_row(row, &boundaries[r])
            .map_err(|message| DiagramError::Boundary { row: r + 1, message })?;
        for p in placements {
            let comp_in = |k: usize| components.component_of((r, p.in_start + k));
            match p.kind {
                CellKind::CrossPos | CellKind::CrossNeg => {
                    let (a, b) = (comp_in(0), comp_in(1));
                    let sign = crossing_sign(
                        p.kind,
                        boundaries[r][p.in_start].orientation,
                        boundaries[r][p.in_start + 1].orientation,
                    );
                    if a == b {
                        writhe[a] += sign;
                    } else {
                        signed[a][b] += sign;
                        signed[b][a] += sign;
                    }
                }
                CellKind::TwistPos => writhe[comp_in(0)] += 1,
                CellKind::TwistNeg => writhe[comp_in(0)] -= 1,
                CellKind::Act => {
                    feet.entry(comp_in(0)).or_default().push(comp_in(1));
                }
                CellKind::Coact => {
                    let band = components.component_of((r + 1, p.out_start));
                    feet.entry(band).or_default().push(comp_in(0));
                }
                CellKind::DualAct => {
                    feet.entry(comp_in(1)).or_default().push(comp_in(0));
                }
                CellKind::DualCoact => {
                    let band = components.component_of((r + 1, p.out_start + 1));
                    feet.entry(band).or_default().push(comp_in(0));
                }
                CellKind::Unit => {
                    let band = components.component_of((r + 1, p.out_start));
                    *band_loose_ends.entry(band).or_insert(0) += 1;
                }
                CellKind::Counit => {
                    *band_loose_ends.entry(comp_in(0)).or_insert(0) += 1;
                }
                _ => {}
            }
        }
    }

    // linking numbers are half the signed inter-component sums
    let mut linking = vec![vec![0i64; n]; n];
    for a in 0..n {
        for b in 0..n {
            if a == b {
                linking[a][a] = writhe[a];
            } else {
                if signed[a][b] % 2 != 0 {
                    warnings.push(format!(
                        "components {a} and {b} cross an odd number of signed times"
                    ));
                }
                linking[a][b] = signed[a][b] / 2;
            }
        }
    }

    let kirby_components: Vec<usize> = (0..n)
        .filter(|&i| matches!(components.roles[i], ColorRole::H1 | ColorRole::H2))
        .collect();
    let kirby_matrix: Vec<Vec<i64>> = kirby_components
        .iter()
        .map(|&a| kirby_components.iter().map(|&b| linking[a][b]).collect())
        .collect();
    let dotted_flags: Vec<bool> = kirby_components
        .iter()
        .map(|&i| components.roles[i] == ColorRole::H1)
        .collect();
    let surface_components = components
        .roles
        .iter()
        .filter(|r| **r == ColorRole::Sf)
        .count();

    // band census: a band with f feet counts as f - 1 one-handles
    let mut s = 0;
    let mut omega = 0;
    for (band, band_feet) in &feet {
        if let Some(ends) = band_loose_ends.get(band) {
            warnings.push(format!(
                "band component {band} has {ends} loose end(s); excluded from the census"
            ));
            continue;
        }
        let distinct: std::collections::BTreeSet<usize> = band_feet.iter().copied().collect();
        match band_feet.len() {
            0 | 1 => warnings.push(format!(
                "band component {band} has {} feet; excluded from the census",
                band_feet.len()
            )),
            2 => {
                if distinct.len() == 1 {
                    s += 1;
                } else {
                    omega += 1;
                }
            }
            f => {
                if distinct.len() == 1 {
                    s += f - 1;
                } else {
                    omega += f - 1;
                    warnings.push(format!(
                        "band component {band} is a tree with feet on several surface components"
                    ));
                }
            }
        }
    }

    Ok(LinkSummary {
        components,
        writhe,
        linking,
        kirby_components,
        kirby_matrix,
        dotted_flags,
        surface_components,
        s,
        omega,
        warnings,
    })
}

/// Result of the structural validity checks.
#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub errors: Vec<String>,
    pub warnings: Vec<String>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.errors.is_empty()
    }
}

/// Necessary conditions on a Kirby diagram with banded unlink: dotted
/// components must be 0-framed and pairwise unlinked; linking between the
/// surface and dotted components is flagged as a warning. Unknottedness of
/// the dotted unlink is not decided here.
pub fn validate(diag: &Diagram) -> Result<ValidationReport, DiagramError> {
    let summary = link_summary(diag)?;
    let mut report = ValidationReport::default();
    report.warnings.extend(summary.warnings.iter().cloned());
    let roles = &summary.components.roles;
    for (i, role) in roles.iter().enumerate() {
        if *role != ColorRole::H1 {
            continue;
        }
        if summary.writhe[i] != 0 {
            report
                .errors
                .push(format!("dotted component {i} has nonzero framing {}", summary.writhe[i]));
        }
        for (j, other) in roles.iter().enumerate() {
            if j <= i {
                continue;
            }
            if *other == ColorRole::H1 && summary.linking[i][j] != 0 {
                report.errors.push(format!(
                    "dotted components {i} and {j} have nonzero linking {}",
                    summary.linking[i][j]
                ));
            }
        }
    }
    for (i, role) in roles.iter().enumerate() {
        if *role != ColorRole::Sf {
            continue;
        }
        for (j, other) in roles.iter().enumerate() {
            if *other == ColorRole::H1 && summary.linking[i][j] != 0 {
                report.warnings.push(format!(
                    "surface component {i} links dotted component {j} ({})",
                    summary.linking[i][j]
                ));
            }
        }
    }
    Ok(report)
}
