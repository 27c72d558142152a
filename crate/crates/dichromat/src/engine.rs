//! Sparse slice-by-slice evaluation of diagrams to exact scalars (closed)
//! or graded maps (open fragments), plus an independent state-sum oracle
//! for band-free diagrams.

use std::collections::HashMap;

use thiserror::Error;

use crate::algebra::CycloNumber;
use crate::category::{
    frobenius_data, module_data, CategoryError, CategoryParams, FrobeniusData, GradedMap,
    GradedObject, KirbyScope, ModuleData,
};
use crate::diagram::{
    lay_out_row, link_summary, CellKind, ColorRole, Diagram, DiagramError, Header, Orientation,
    Strand,
};

/// Default cap on the number of simultaneously live contraction states.
pub const DEFAULT_BUDGET: usize = 1_000_000;

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("diagram error: {0}")]
    Diagram(#[from] DiagramError),
    #[error("category error: {0}")]
    Category(#[from] CategoryError),
    #[error("surface strands present but no module degree g in the header")]
    MissingModule,
    #[error("band strands present but no frobenius degree c in the header")]
    MissingFrobenius,
    #[error("state-sum path requires band-free diagram")]
    NotBandFree,
    #[error("state budget exceeded: {0} live states (budget {1})")]
    BudgetExceeded(usize, usize),
    #[error("boundary mismatch: {0}")]
    BoundaryMismatch(String),
}

/// Everything needed to color and evaluate a diagram: the category
/// parameters and, when surface or band strands occur, the Frobenius
/// algebra and module data.
#[derive(Clone, Debug)]
pub struct EvalContext {
    pub params: CategoryParams,
    pub frob: Option<FrobeniusData>,
    pub module: Option<ModuleData>,
    pub budget: usize,
}

impl EvalContext {
    pub fn new(params: CategoryParams) -> Self {
        EvalContext { params, frob: None, module: None, budget: DEFAULT_BUDGET }
    }

    /// Build a context from a diagram header, constructing the Frobenius
    /// and module data when their degrees are declared.
    pub fn from_header(header: &Header) -> Result<Self, EngineError> {
        let mut ctx = EvalContext::new(header.params);
        if let Some(c) = header.c {
            ctx.frob = Some(frobenius_data(&header.params, c)?);
        }
        if let Some(g) = header.g {
            let frob = ctx.frob.as_ref().ok_or(EngineError::MissingFrobenius)?;
            ctx.module = Some(module_data(&header.params, frob, g)?);
        }
        Ok(ctx)
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    /// The graded object carried by a strand.
    pub fn strand_object(&self, strand: Strand) -> Result<GradedObject, EngineError> {
        let n = self.params.n;
        let obj = match strand.role {
            ColorRole::H1 => self.params.kirby_object(KirbyScope::Full),
            ColorRole::H2 => self.params.kirby_object(KirbyScope::Sub),
            ColorRole::Bd => self.frob.as_ref().ok_or(EngineError::MissingFrobenius)?.object.clone(),
            ColorRole::Sf => {
                let module = self.module.as_ref().ok_or(EngineError::MissingModule)?;
                match strand.orientation {
                    Orientation::Down => module.object.clone(),
                    Orientation::Up => module.dual_object.clone(),
                }
            }
            ColorRole::Simple(d) => GradedObject::simple(n, d as i64, format!("k{d}")),
        };
        Ok(match (strand.role, strand.orientation) {
            (ColorRole::Sf, _) | (ColorRole::Bd, _) => obj,
            (_, Orientation::Down) => obj,
            (_, Orientation::Up) => obj.dual(n),
        })
    }
}

/// Matrix-unit transpose on the band object basis: E11, E12, E21, E22.
fn transpose_band_index(e: u16) -> u16 {
    match e {
        1 => 2,
        2 => 1,
        other => other,
    }
}

/// Expand one cell on one input index tuple. Returns the produced output
/// tuples with coefficients; dropped states mean the coefficient is zero.
fn apply_cell(
    kind: CellKind,
    params: &CategoryParams,
    in_objs: &[&GradedObject],
    out_objs: &[&GradedObject],
    ins: &[u16],
) -> Vec<(Vec<u16>, CycloNumber)> {
    let one = || CycloNumber::one(params.n);
    match kind {
        CellKind::Identity | CellKind::Dot => vec![(vec![ins[0]], one())],
        CellKind::TwistPos | CellKind::TwistNeg => {
            let d = in_objs[0].degree(ins[0] as usize) as i64;
            let e = params.t * d * d;
            let e = if kind == CellKind::TwistPos { e } else { -e };
            vec![(vec![ins[0]], params.zeta(e))]
        }
        CellKind::CrossPos | CellKind::CrossNeg => {
            let a = in_objs[0].degree(ins[0] as usize) as i64;
            let b = in_objs[1].degree(ins[1] as usize) as i64;
            let e = params.t * a * b;
            let e = if kind == CellKind::CrossPos { -e } else { e };
            vec![(vec![ins[1], ins[0]], params.zeta(e))]
        }
        CellKind::Cup(role) | CellKind::Puc(role) => {
            let dim = out_objs[0].dim();
            (0..dim as u16)
                .map(|i| {
                    let j = if role == ColorRole::Bd { transpose_band_index(i) } else { i };
                    (vec![i, j], one())
                })
                .collect()
        }
        CellKind::Cap | CellKind::Pac => {
            let is_band = in_objs[0].degree(ins[0] as usize) != u32::MAX
                && matches!(in_objs[0].dim(), 4)
                && in_objs[0] == in_objs[1]
                && in_objs[0].basis.first().map(|b| b.label.as_str()) == Some("E11");
            let matched = if is_band {
                ins[1] == transpose_band_index(ins[0])
            } else {
                ins[0] == ins[1]
            };
            if matched {
                vec![(vec![], one())]
            } else {
                vec![]
            }
        }
        CellKind::Mu => {
            let (i, j) = ((ins[0] / 2) + 1, (ins[0] % 2) + 1);
            let (k, l) = ((ins[1] / 2) + 1, (ins[1] % 2) + 1);
            if j == k {
                vec![(vec![(i - 1) * 2 + (l - 1)], one())]
            } else {
                vec![]
            }
        }
        CellKind::Comul => {
            let (i, j) = ((ins[0] / 2) + 1, (ins[0] % 2) + 1);
            (1..=2u16)
                .map(|k| (vec![(i - 1) * 2 + (k - 1), (k - 1) * 2 + (j - 1)], one()))
                .collect()
        }
        CellKind::Unit => vec![(vec![0], one()), (vec![3], one())],
        CellKind::Counit => {
            if ins[0] == 0 || ins[0] == 3 {
                vec![(vec![], one())]
            } else {
                vec![]
            }
        }
        CellKind::Act => {
            let (i, j) = ((ins[0] / 2) + 1, (ins[0] % 2) + 1);
            let k = ins[1] + 1;
            if j == k {
                vec![(vec![i - 1], one())]
            } else {
                vec![]
            }
        }
        CellKind::Coact => {
            let k = ins[0] + 1;
            (1..=2u16)
                .map(|j| (vec![(k - 1) * 2 + (j - 1), j - 1], one()))
                .collect()
        }
        CellKind::DualAct => {
            let i = ins[0] + 1;
            let (p, q) = ((ins[1] / 2) + 1, (ins[1] % 2) + 1);
            if i == p {
                vec![(vec![q - 1], one())]
            } else {
                vec![]
            }
        }
        CellKind::DualCoact => {
            let i = ins[0] + 1;
            (1..=2u16)
                .map(|q| (vec![q - 1, (q - 1) * 2 + (i - 1)], one()))
                .collect()
        }
    }
}

struct ResolvedRow {
    placements: Vec<crate::diagram::CellPlacement>,
    in_objs: Vec<GradedObject>,
    out_objs: Vec<GradedObject>,
}

fn resolve_rows(
    rows: &[Vec<CellKind>],
    input: &[Strand],
    ctx: &EvalContext,
) -> Result<Vec<ResolvedRow>, EngineError> {
    let boundaries = Diagram::boundaries_from(rows, input)?;
    let mut resolved = Vec::with_capacity(rows.len());
    for (r, row) in rows.iter().enumerate() {
        let (placements, _) = lay_out_row(row, &boundaries[r])
            .map_err(|message| DiagramError::Boundary { row: r + 1, message })?;
        let in_objs = boundaries[r]
            .iter()
            .map(|&s| ctx.strand_object(s))
            .collect::<Result<Vec<_>, _>>()?;
        let out_objs = boundaries[r + 1]
            .iter()
            .map(|&s| ctx.strand_object(s))
            .collect::<Result<Vec<_>, _>>()?;
        resolved.push(ResolvedRow { placements, in_objs, out_objs });
    }
    Ok(resolved)
}

fn fold_rows<K>(
    resolved: &[ResolvedRow],
    start: HashMap<K, CycloNumber>,
    key_split: impl Fn(&K) -> (Vec<u16>, Vec<u16>),
    key_join: impl Fn(Vec<u16>, Vec<u16>) -> K,
    params: &CategoryParams,
    budget: usize,
) -> Result<HashMap<K, CycloNumber>, EngineError>
where
    K: std::hash::Hash + Eq + Clone,
{
    let mut state = start;
    for row in resolved {
        let mut next: HashMap<K, CycloNumber> = HashMap::new();
        for (key, coeff) in &state {
            let (fixed, cur) = key_split(key);
            let mut partials: Vec<(Vec<u16>, CycloNumber)> = vec![(Vec::new(), coeff.clone())];
            for p in &row.placements {
                let ins = &cur[p.in_start..p.in_start + p.in_len];
                let in_objs: Vec<&GradedObject> =
                    row.in_objs[p.in_start..p.in_start + p.in_len].iter().collect();
                let out_objs: Vec<&GradedObject> =
                    row.out_objs[p.out_start..p.out_start + p.out_len].iter().collect();
                let expansions = apply_cell(p.kind, params, &in_objs, &out_objs, ins);
                if expansions.is_empty() {
                    partials.clear();
                    break;
                }
                let mut grown = Vec::with_capacity(partials.len() * expansions.len());
                for (prefix, c) in &partials {
                    for (out, ec) in &expansions {
                        let mut idx = prefix.clone();
                        idx.extend_from_slice(out);
                        grown.push((idx, c.mul(ec)));
                    }
                }
                partials = grown;
            }
            for (out, c) in partials {
                if c.is_zero() {
                    continue;
                }
                let k = key_join(fixed.clone(), out);
                let entry = match next.remove(&k) {
                    Some(prev) => prev.add(&c),
                    None => c,
                };
                if entry.is_zero() {
                    next.remove(&k);
                } else {
                    next.insert(k, entry);
                }
            }
            if next.len() > budget {
                return Err(EngineError::BudgetExceeded(next.len(), budget));
            }
        }
        state = next;
    }
    Ok(state)
}

/// Evaluate a closed diagram to its exact scalar. The empty diagram
/// evaluates to 1.
pub fn eval_closed(diag: &Diagram, ctx: &EvalContext) -> Result<CycloNumber, EngineError> {
    let boundaries = diag.boundaries()?;
    let _ = &boundaries;
    let resolved = resolve_rows(&diag.rows, &[], ctx)?;
    let start = HashMap::from([(Vec::new(), CycloNumber::one(ctx.params.n))]);
    let end = fold_rows(
        &resolved,
        start,
        |k: &Vec<u16>| (Vec::new(), k.clone()),
        |_, cur| cur,
        &ctx.params,
        ctx.budget,
    )?;
    Ok(end
        .get(&Vec::new())
        .cloned()
        .unwrap_or_else(|| CycloNumber::zero(ctx.params.n)))
}

/// Evaluate an open fragment (rows over a declared input boundary) to the
/// graded map it represents.
pub fn eval_morphism(
    rows: &[Vec<CellKind>],
    input: &[Strand],
    ctx: &EvalContext,
) -> Result<GradedMap, EngineError> {
    let boundaries = Diagram::boundaries_from(rows, input)?;
    let out_strands = boundaries.last().cloned().unwrap_or_default();
    let in_objs: Vec<GradedObject> = input
        .iter()
        .map(|&s| ctx.strand_object(s))
        .collect::<Result<_, _>>()?;
    let out_objs: Vec<GradedObject> = out_strands
        .iter()
        .map(|&s| ctx.strand_object(s))
        .collect::<Result<_, _>>()?;
    let resolved = resolve_rows(rows, input, ctx)?;

    let mut start: HashMap<(Vec<u16>, Vec<u16>), CycloNumber> = HashMap::new();
    for idx in crate::category::enumerate_indices(&in_objs) {
        start.insert((idx.clone(), idx), CycloNumber::one(ctx.params.n));
    }
    let end = fold_rows(
        &resolved,
        start,
        |k: &(Vec<u16>, Vec<u16>)| (k.0.clone(), k.1.clone()),
        |fixed, cur| (fixed, cur),
        &ctx.params,
        ctx.budget,
    )?;
    let mut map = GradedMap::zero(ctx.params.n, in_objs, out_objs);
    for ((input_idx, output_idx), coeff) in end {
        map.add_entry(input_idx, output_idx, coeff);
    }
    Ok(map)
}

/// Independent state-sum evaluation of a band-free diagram: one simple
/// degree per component, with the quadratic form given by framings and
/// linking numbers.
pub fn statesum_eval(diag: &Diagram, ctx: &EvalContext) -> Result<CycloNumber, EngineError> {
    let band_free = diag.rows.iter().flatten().all(|cell| {
        !matches!(
            cell,
            CellKind::Cup(ColorRole::Bd)
                | CellKind::Puc(ColorRole::Bd)
                | CellKind::Mu
                | CellKind::Comul
                | CellKind::Unit
                | CellKind::Counit
                | CellKind::Act
                | CellKind::Coact
                | CellKind::DualAct
                | CellKind::DualCoact
        )
    });
    if !band_free {
        return Err(EngineError::NotBandFree);
    }
    let summary = link_summary(diag)?;
    let n_comp = summary.components.count;
    let mut degree_ranges: Vec<Vec<i64>> = Vec::with_capacity(n_comp);
    for role in &summary.components.roles {
        let degrees: Vec<i64> = match role {
            ColorRole::H1 => (0..ctx.params.n as i64).collect(),
            ColorRole::H2 => ctx.params.subgroup().into_iter().map(|d| d as i64).collect(),
            ColorRole::Sf => {
                let module = ctx.module.as_ref().ok_or(EngineError::MissingModule)?;
                module.object.basis.iter().map(|b| b.degree as i64).collect()
            }
            ColorRole::Bd => return Err(EngineError::NotBandFree),
            ColorRole::Simple(d) => vec![*d as i64],
        };
        degree_ranges.push(degrees);
    }
    let mut total = CycloNumber::zero(ctx.params.n);
    let mut assignment = vec![0usize; n_comp];
    loop {
        // exponent t * (sum_i f_i g_i^2 + 2 sum_{i<j} lk_ij g_i g_j)
        let mut e: i64 = 0;
        for i in 0..n_comp {
            let gi = degree_ranges[i][assignment[i]];
            e += summary.writhe[i] * gi * gi;
            for j in (i + 1)..n_comp {
                let gj = degree_ranges[j][assignment[j]];
                e += 2 * summary.linking[i][j] * gi * gj;
            }
        }
        total = total.add(&ctx.params.zeta(ctx.params.t * e));
        // advance the mixed-radix assignment
        let mut pos = 0;
        loop {
            if pos == n_comp {
                return Ok(total);
            }
            assignment[pos] += 1;
            if assignment[pos] < degree_ranges[pos].len() {
                break;
            }
            assignment[pos] = 0;
            pos += 1;
        }
    }
}
