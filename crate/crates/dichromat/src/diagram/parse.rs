//! Line-oriented text format for diagrams.
//!
//! ```text
//! # comments run to end of line
//! category N=6 t=1 H=2
//! frobenius c=2        # optional
//! module g=1           # optional
//! diagram
//! cup:h2
//! /-
//! cap
//! end
//! ```

use std::fmt;

use crate::category::CategoryParams;

use super::{lay_out_row, CellKind, ColorRole, Diagram, Header};

/// A positioned parse or structure error. Lines and columns are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, col: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, col, message: message.into() }
}

fn parse_color(text: &str) -> Option<ColorRole> {
    match text {
        "h1" => Some(ColorRole::H1),
        "h2" => Some(ColorRole::H2),
        "sf" => Some(ColorRole::Sf),
        "bd" => Some(ColorRole::Bd),
        _ => text
            .strip_prefix('g')
            .and_then(|d| d.parse::<u32>().ok())
            .map(ColorRole::Simple),
    }
}

fn parse_token(tok: &str) -> Option<CellKind> {
    match tok {
        "|" => Some(CellKind::Identity),
        "/+" => Some(CellKind::CrossPos),
        "/-" => Some(CellKind::CrossNeg),
        "cap" => Some(CellKind::Cap),
        "pac" => Some(CellKind::Pac),
        "dot" => Some(CellKind::Dot),
        "tw+" => Some(CellKind::TwistPos),
        "tw-" => Some(CellKind::TwistNeg),
        "mu" => Some(CellKind::Mu),
        "cm" => Some(CellKind::Comul),
        "eta" => Some(CellKind::Unit),
        "eps" => Some(CellKind::Counit),
        "act" => Some(CellKind::Act),
        "coa" => Some(CellKind::Coact),
        "dact" => Some(CellKind::DualAct),
        "dcoa" => Some(CellKind::DualCoact),
        _ => {
            if let Some(c) = tok.strip_prefix("cup:") {
                return parse_color(c).map(CellKind::Cup);
            }
            if let Some(c) = tok.strip_prefix("puc:") {
                return parse_color(c).map(CellKind::Puc);
            }
            None
        }
    }
}

fn parse_kv(part: &str, key: &str) -> Option<i64> {
    part.strip_prefix(key)
        .and_then(|rest| rest.strip_prefix('='))
        .and_then(|v| v.parse().ok())
}

/// Parse diagram text into a structurally valid [`Diagram`], or collect
/// every positioned error found.
pub fn parse(text: &str) -> Result<Diagram, Vec<ParseError>> {
    let mut errors = Vec::new();
    let mut header: Option<Header> = None;
    let mut c: Option<u32> = None;
    let mut g: Option<u32> = None;
    let mut rows: Vec<Vec<CellKind>> = Vec::new();
    let mut row_lines: Vec<usize> = Vec::new();
    let mut in_body = false;
    let mut body_done = false;
    let mut saw_end = false;

    for (li, raw) in text.lines().enumerate() {
        let line_no = li + 1;
        let line = raw.split('#').next().unwrap_or("");
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if !in_body {
            if let Some(rest) = trimmed.strip_prefix("category") {
                let mut n = None;
                let mut t = None;
                let mut h = None;
                for part in rest.split_whitespace() {
                    if let Some(v) = parse_kv(part, "N") {
                        n = Some(v);
                    } else if let Some(v) = parse_kv(part, "t") {
                        t = Some(v);
                    } else if let Some(v) = parse_kv(part, "H") {
                        h = Some(v);
                    } else {
                        errors.push(err(line_no, 1, format!("unknown category field `{part}`")));
                    }
                }
                match (n, t, h) {
                    (Some(n), Some(t), Some(h)) if n >= 1 && h >= 0 => {
                        match CategoryParams::new(n as u32, t, h as u32) {
                            Ok(params) => header = Some(Header { params, c: None, g: None }),
                            Err(e) => errors.push(err(line_no, 1, e.to_string())),
                        }
                    }
                    _ => errors.push(err(line_no, 1, "category line needs N=<int> t=<int> H=<int>")),
                }
            } else if let Some(rest) = trimmed.strip_prefix("frobenius") {
                match rest.split_whitespace().find_map(|p| parse_kv(p, "c")) {
                    Some(v) if v >= 0 => c = Some(v as u32),
                    _ => errors.push(err(line_no, 1, "frobenius line needs c=<nonnegative int>")),
                }
            } else if let Some(rest) = trimmed.strip_prefix("module") {
                match rest.split_whitespace().find_map(|p| parse_kv(p, "g")) {
                    Some(v) if v >= 0 => g = Some(v as u32),
                    _ => errors.push(err(line_no, 1, "module line needs g=<nonnegative int>")),
                }
            } else if trimmed == "diagram" {
                if header.is_none() {
                    errors.push(err(line_no, 1, "missing header: `category N=.. t=.. H=..` must precede `diagram`"));
                }
                in_body = true;
            } else {
                errors.push(err(line_no, 1, format!("unexpected line `{trimmed}` before `diagram`")));
            }
        } else if trimmed == "end" {
            in_body = false;
            body_done = true;
            saw_end = true;
        } else if body_done {
            errors.push(err(line_no, 1, format!("unexpected line `{trimmed}` after `end`")));
        } else {
            let mut row = Vec::new();
            let mut col = 1;
            for tok in line.split_whitespace() {
                let tok_col = line[col - 1..]
                    .find(tok)
                    .map(|p| p + col)
                    .unwrap_or(col);
                col = tok_col + tok.len();
                match parse_token(tok) {
                    Some(kind) => row.push(kind),
                    None => errors.push(err(line_no, tok_col, format!("unknown token `{tok}`"))),
                }
            }
            rows.push(row);
            row_lines.push(line_no);
        }
    }

    if header.is_none() && errors.is_empty() {
        errors.push(err(1, 1, "missing header"));
    }
    if in_body || (!saw_end && !rows.is_empty()) {
        errors.push(err(text.lines().count().max(1), 1, "missing `end`"));
    }
    if !errors.is_empty() {
        return Err(errors);
    }

    let mut header = header.unwrap();
    header.c = c;
    header.g = g;
    let diag = Diagram { header, rows };

    // structural validation: arity and color chaining, closedness
    let mut boundary = Vec::new();
    for (r, row) in diag.rows.iter().enumerate() {
        match lay_out_row(row, &boundary) {
            Ok((_, next)) => boundary = next,
            Err(message) => {
                errors.push(err(row_lines[r], 1, message));
                return Err(errors);
            }
        }
    }
    if !boundary.is_empty() {
        errors.push(err(
            row_lines.last().copied().unwrap_or(1),
            1,
            format!("open boundary: {} strand(s) left unconsumed", boundary.len()),
        ));
        return Err(errors);
    }
    Ok(diag)
}

/// Canonical text rendering; `parse(serialize(d))` structurally equals `d`.
pub fn serialize(diag: &Diagram) -> String {
    let mut out = String::new();
    let p = diag.header.params;
    out.push_str(&format!("category N={} t={} H={}\n", p.n, p.t, p.subgroup_gen));
    if let Some(c) = diag.header.c {
        out.push_str(&format!("frobenius c={c}\n"));
    }
    if let Some(g) = diag.header.g {
        out.push_str(&format!("module g={g}\n"));
    }
    out.push_str("diagram\n");
    for row in &diag.rows {
        let tokens: Vec<String> = row.iter().map(CellKind::token).collect();
        out.push_str(&tokens.join(" "));
        out.push('\n');
    }
    out.push_str("end\n");
    out
}
