//! The sliced string-diagram IR: rows of generator cells with colored,
//! oriented strand boundaries, plus structural validation, component
//! tracing and the link summary.

mod parse;
mod summary;

pub use parse::{parse, serialize, ParseError};
pub use summary::{link_summary, validate, LinkSummary, ValidationReport};

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::category::CategoryParams;

/// Arrow direction of a strand relative to the page: `Down` strands carry
/// the object itself, `Up` strands its dual. Band strands are self-dual and
/// always stored `Down`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Down,
    Up,
}

/// What a strand is colored by: dotted components carry the full Kirby
/// object, 2-handle curves the subcategory Kirby object, surface strands
/// the module, bands the Frobenius algebra. `Simple(d)` strands carry the
/// simple object k_d (used by encirclement diagrams).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ColorRole {
    H1,
    H2,
    Sf,
    Bd,
    Simple(u32),
}

impl fmt::Display for ColorRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColorRole::H1 => write!(f, "h1"),
            ColorRole::H2 => write!(f, "h2"),
            ColorRole::Sf => write!(f, "sf"),
            ColorRole::Bd => write!(f, "bd"),
            ColorRole::Simple(d) => write!(f, "g{d}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Strand {
    pub role: ColorRole,
    pub orientation: Orientation,
}

impl Strand {
    pub fn down(role: ColorRole) -> Self {
        Strand { role, orientation: Orientation::Down }
    }
    pub fn up(role: ColorRole) -> Self {
        Strand { role, orientation: Orientation::Up }
    }
}

/// A generator cell. Arities are fixed by the kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellKind {
    Identity,
    Dot,
    TwistPos,
    TwistNeg,
    CrossPos,
    CrossNeg,
    Cup(ColorRole),
    Puc(ColorRole),
    Cap,
    Pac,
    Mu,
    Comul,
    Unit,
    Counit,
    Act,
    Coact,
    DualAct,
    DualCoact,
}

impl CellKind {
    pub fn arity(&self) -> (usize, usize) {
        match self {
            CellKind::Identity | CellKind::Dot | CellKind::TwistPos | CellKind::TwistNeg => (1, 1),
            CellKind::CrossPos | CellKind::CrossNeg => (2, 2),
            CellKind::Cup(_) | CellKind::Puc(_) => (0, 2),
            CellKind::Cap | CellKind::Pac => (2, 0),
            CellKind::Mu | CellKind::Act | CellKind::DualAct => (2, 1),
            CellKind::Comul | CellKind::Coact | CellKind::DualCoact => (1, 2),
            CellKind::Unit => (0, 1),
            CellKind::Counit => (1, 0),
        }
    }

    pub fn token(&self) -> String {
        match self {
            CellKind::Identity => "|".into(),
            CellKind::Dot => "dot".into(),
            CellKind::TwistPos => "tw+".into(),
            CellKind::TwistNeg => "tw-".into(),
            CellKind::CrossPos => "/+".into(),
            CellKind::CrossNeg => "/-".into(),
            CellKind::Cup(c) => format!("cup:{c}"),
            CellKind::Puc(c) => format!("puc:{c}"),
            CellKind::Cap => "cap".into(),
            CellKind::Pac => "pac".into(),
            CellKind::Mu => "mu".into(),
            CellKind::Comul => "cm".into(),
            CellKind::Unit => "eta".into(),
            CellKind::Counit => "eps".into(),
            CellKind::Act => "act".into(),
            CellKind::Coact => "coa".into(),
            CellKind::DualAct => "dact".into(),
            CellKind::DualCoact => "dcoa".into(),
        }
    }

    /// Given the consumed input strands, the produced output strands, or a
    /// description of the type error.
    pub fn outputs(&self, inputs: &[Strand]) -> Result<Vec<Strand>, String> {
        use CellKind::*;
        use Orientation::*;
        let pass = |s: &Strand| Ok(vec![*s]);
        match self {
            Identity | Dot | TwistPos | TwistNeg => pass(&inputs[0]),
            CrossPos | CrossNeg => Ok(vec![inputs[1], inputs[0]]),
            Cup(role) => Ok(if *role == ColorRole::Bd {
                vec![Strand::down(*role), Strand::down(*role)]
            } else {
                vec![Strand::up(*role), Strand::down(*role)]
            }),
            Puc(role) => Ok(if *role == ColorRole::Bd {
                vec![Strand::down(*role), Strand::down(*role)]
            } else {
                vec![Strand::down(*role), Strand::up(*role)]
            }),
            Cap => {
                let (a, b) = (inputs[0], inputs[1]);
                if a.role != b.role {
                    return Err(format!("cap joining different colors {} and {}", a.role, b.role));
                }
                if a.role == ColorRole::Bd
                    || (a.orientation == Down && b.orientation == Up)
                {
                    Ok(vec![])
                } else {
                    Err("non-dual pair at cap".into())
                }
            }
            Pac => {
                let (a, b) = (inputs[0], inputs[1]);
                if a.role != b.role {
                    return Err(format!("pac joining different colors {} and {}", a.role, b.role));
                }
                if a.role == ColorRole::Bd
                    || (a.orientation == Up && b.orientation == Down)
                {
                    Ok(vec![])
                } else {
                    Err("non-dual pair at pac".into())
                }
            }
            Mu => {
                if inputs[0].role == ColorRole::Bd && inputs[1].role == ColorRole::Bd {
                    Ok(vec![Strand::down(ColorRole::Bd)])
                } else {
                    Err("mu requires two band strands".into())
                }
            }
            Comul => {
                if inputs[0].role == ColorRole::Bd {
                    Ok(vec![Strand::down(ColorRole::Bd), Strand::down(ColorRole::Bd)])
                } else {
                    Err("cm requires a band strand".into())
                }
            }
            Unit => Ok(vec![Strand::down(ColorRole::Bd)]),
            Counit => {
                if inputs[0].role == ColorRole::Bd {
                    Ok(vec![])
                } else {
                    Err("eps requires a band strand".into())
                }
            }
            Act => {
                let (f, m) = (inputs[0], inputs[1]);
                if f.role == ColorRole::Bd
                    && m.role == ColorRole::Sf
                    && m.orientation == Down
                {
                    Ok(vec![m])
                } else {
                    Err("act requires a band strand left of a downward surface strand".into())
                }
            }
            Coact => {
                let m = inputs[0];
                if m.role == ColorRole::Sf && m.orientation == Down {
                    Ok(vec![Strand::down(ColorRole::Bd), m])
                } else {
                    Err("coa requires a downward surface strand".into())
                }
            }
            DualAct => {
                let (m, f) = (inputs[0], inputs[1]);
                if m.role == ColorRole::Sf
                    && m.orientation == Up
                    && f.role == ColorRole::Bd
                {
                    Ok(vec![m])
                } else {
                    Err("dact requires a band strand right of an upward surface strand".into())
                }
            }
            DualCoact => {
                let m = inputs[0];
                if m.role == ColorRole::Sf && m.orientation == Up {
                    Ok(vec![m, Strand::down(ColorRole::Bd)])
                } else {
                    Err("dcoa requires an upward surface strand".into())
                }
            }
        }
    }
}

/// Category parameters plus the optional Frobenius/module degrees carried
/// in a diagram header.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Header {
    pub params: CategoryParams,
    pub c: Option<u32>,
    pub g: Option<u32>,
}

/// A closed sliced diagram: rows compose top to bottom, row 1 first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    pub header: Header,
    pub rows: Vec<Vec<CellKind>>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("row {row}: {message}")]
    Boundary { row: usize, message: String },
    #[error("diagram does not close (final boundary has {0} strands)")]
    OpenBoundary(usize),
}

/// One cell's strand footprint within a row.
#[derive(Clone, Copy, Debug)]
pub struct CellPlacement {
    pub kind: CellKind,
    pub cell_index: usize,
    pub in_start: usize,
    pub in_len: usize,
    pub out_start: usize,
    pub out_len: usize,
}

/// Lay a row of cells over its input boundary, producing each cell's strand
/// spans and the output boundary.
pub fn lay_out_row(
    cells: &[CellKind],
    input: &[Strand],
) -> Result<(Vec<CellPlacement>, Vec<Strand>), String> {
    let mut placements = Vec::with_capacity(cells.len());
    let mut output = Vec::new();
    let mut in_pos = 0;
    for (cell_index, kind) in cells.iter().enumerate() {
        let (n_in, _) = kind.arity();
        if in_pos + n_in > input.len() {
            return Err(format!(
                "cell {} (`{}`) consumes more strands than remain",
                cell_index + 1,
                kind.token()
            ));
        }
        let ins = &input[in_pos..in_pos + n_in];
        let outs = kind
            .outputs(ins)
            .map_err(|m| format!("cell {} (`{}`): {}", cell_index + 1, kind.token(), m))?;
        placements.push(CellPlacement {
            kind: *kind,
            cell_index,
            in_start: in_pos,
            in_len: n_in,
            out_start: output.len(),
            out_len: outs.len(),
        });
        in_pos += n_in;
        output.extend(outs);
    }
    if in_pos != input.len() {
        return Err(format!(
            "row consumes {} of {} input strands",
            in_pos,
            input.len()
        ));
    }
    Ok((placements, output))
}

impl Diagram {
    /// All between-row boundaries (length rows + 1) of a fragment starting
    /// from the given input boundary.
    pub fn boundaries_from(
        rows: &[Vec<CellKind>],
        input: &[Strand],
    ) -> Result<Vec<Vec<Strand>>, DiagramError> {
        let mut out = vec![input.to_vec()];
        for (r, row) in rows.iter().enumerate() {
            let (_, next) = lay_out_row(row, out.last().unwrap())
                .map_err(|message| DiagramError::Boundary { row: r + 1, message })?;
            out.push(next);
        }
        Ok(out)
    }

    /// Boundaries of this closed diagram; errors if rows do not chain or the
    /// diagram does not close.
    pub fn boundaries(&self) -> Result<Vec<Vec<Strand>>, DiagramError> {
        let b = Self::boundaries_from(&self.rows, &[])?;
        match b.last().map(Vec::len) {
            Some(0) | None => Ok(b),
            Some(n) => Err(DiagramError::OpenBoundary(n)),
        }
    }

    /// Separated union of two closed diagrams over the same parameters: the
    /// second diagram's rows run after the first closes.
    pub fn disjoint_union(&self, other: &Diagram) -> Diagram {
        assert_eq!(
            self.header.params, other.header.params,
            "disjoint union needs matching category parameters"
        );
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        let header = Header {
            params: self.header.params,
            c: self.header.c.or(other.header.c),
            g: self.header.g.or(other.header.g),
        };
        Diagram { header, rows }
    }
}

/// A strand-segment address: (boundary index, position within boundary).
pub type Slot = (usize, usize);

/// Component assignment: every strand segment mapped to a component id, in
/// first-appearance order.
#[derive(Clone, Debug)]
pub struct Components {
    pub count: usize,
    pub roles: Vec<ColorRole>,
    slot_map: HashMap<Slot, usize>,
}

impl Components {
    pub fn component_of(&self, slot: Slot) -> usize {
        self.slot_map[&slot]
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }
    fn find(&mut self, i: usize) -> usize {
        if self.parent[i] != i {
            let root = self.find(self.parent[i]);
            self.parent[i] = root;
        }
        self.parent[i]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Assign a component id to every strand segment by following strands
/// through cells. Band cells never merge surface components with band
/// components.
pub fn trace_components(diag: &Diagram) -> Result<Components, DiagramError> {
    let boundaries = diag.boundaries()?;
    trace_components_of(&diag.rows, &boundaries)
}

pub(crate) fn trace_components_of(
    rows: &[Vec<CellKind>],
    boundaries: &[Vec<Strand>],
) -> Result<Components, DiagramError> {
    // flatten slots
    let mut slot_ids = HashMap::new();
    let mut slots = Vec::new();
    for (b, boundary) in boundaries.iter().enumerate() {
        for p in 0..boundary.len() {
            slot_ids.insert((b, p), slots.len());
            slots.push((b, p));
        }
    }
    let mut uf = UnionFind::new(slots.len());
    for (r, row) in rows.iter().enumerate() {
        let (placements, _) = lay_out_row(row, &boundaries[r])
            .map_err(|message| DiagramError::Boundary { row: r + 1, message })?;
        for p in placements {
            let i = |k: usize| slot_ids[&(r, p.in_start + k)];
            let o = |k: usize| slot_ids[&(r + 1, p.out_start + k)];
            use CellKind::*;
            match p.kind {
                Identity | Dot | TwistPos | TwistNeg => uf.union(i(0), o(0)),
                CrossPos | CrossNeg => {
                    uf.union(i(0), o(1));
                    uf.union(i(1), o(0));
                }
                Cup(_) | Puc(_) => uf.union(o(0), o(1)),
                Cap | Pac => uf.union(i(0), i(1)),
                Mu => {
                    uf.union(i(0), i(1));
                    uf.union(i(0), o(0));
                }
                Comul => {
                    uf.union(i(0), o(0));
                    uf.union(i(0), o(1));
                }
                Unit | Counit => {}
                Act => uf.union(i(1), o(0)),
                Coact => uf.union(i(0), o(1)),
                DualAct => uf.union(i(0), o(0)),
                DualCoact => uf.union(i(0), o(0)),
            }
        }
    }
    // number components in first-appearance order
    let mut comp_of_root: HashMap<usize, usize> = HashMap::new();
    let mut roles = Vec::new();
    let mut slot_map = HashMap::new();
    for (idx, &(b, p)) in slots.iter().enumerate() {
        let root = uf.find(idx);
        let next_id = comp_of_root.len();
        let id = *comp_of_root.entry(root).or_insert(next_id);
        if id == roles.len() {
            roles.push(boundaries[b][p].role);
        }
        slot_map.insert((b, p), id);
    }
    Ok(Components { count: roles.len(), roles, slot_map })
}
