use taumute::repcat::{IndecId, ModCat};
use taumute::taut::{Slot, StPair, TauTilting};

use crate::{CliError, CliResult};

/// `P3`, `S2`, `I1` when the module is one of those (in that order of
/// preference), else its dimension vector `M(0,1,1)`.
pub fn indec_name(cat: &ModCat, id: IndecId) -> String {
    let n = cat.algebra().vertex_count();
    for v in 0..n {
        if cat.projective_id(v).ok() == Some(id) {
            return format!("P{}", v + 1);
        }
    }
    for v in 0..n {
        if cat.simple_id(v).ok() == Some(id) {
            return format!("S{}", v + 1);
        }
    }
    for v in 0..n {
        if cat.injective_id(v).ok() == Some(id) {
            return format!("I{}", v + 1);
        }
    }
    let d: Vec<String> = cat.dims(id).iter().map(usize::to_string).collect();
    format!("M({})", d.join(","))
}

/// `(P1+S1+P3, ∅)`, `(P2+P3, {1})`, `(0, {1,2,3})`. A `mark` is appended
/// to each module name, for pairs over the opposite algebra.
pub fn pair_name_marked(tt: &TauTilting, p: &StPair, mark: &str) -> String {
    let m = if p.module.is_empty() {
        "0".to_string()
    } else {
        p.module.iter().map(|&x| format!("{}{mark}", indec_name(tt.cat(), x))).collect::<Vec<_>>().join("+")
    };
    let s = if p.support.is_empty() {
        "∅".to_string()
    } else {
        format!("{{{}}}", p.support.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(","))
    };
    format!("({m}, {s})")
}

pub fn pair_name(tt: &TauTilting, p: &StPair) -> String {
    pair_name_marked(tt, p, "")
}

pub fn slot_name(tt: &TauTilting, s: Slot) -> String {
    match s {
        Slot::Summand(x) => indec_name(tt.cat(), x),
        Slot::Vertex(v) => format!("vertex {}", v + 1),
    }
}

fn vertex(tt: &TauTilting, s: &str) -> CliResult<usize> {
    let v: usize = s.trim().parse().map_err(|_| CliError::Input(format!("expected a vertex number, got '{s}'")))?;
    if v == 0 || v > tt.n() {
        return Err(CliError::Input(format!("vertex {v} out of range 1..{}", tt.n())));
    }
    Ok(v - 1)
}

/// `P2`, `I1`, `S3` or a dimension vector `M(1,1,0)` naming a unique
/// indecomposable in the (saturated) registry.
pub fn parse_indec(tt: &TauTilting, s: &str) -> CliResult<IndecId> {
    let s = s.trim();
    let cat = tt.cat();
    let kind = s.chars().next().ok_or_else(|| CliError::Input("empty module name".into()))?;
    if let Some(rest) = s.strip_prefix("M(").and_then(|r| r.strip_suffix(')')) {
        let dims: Vec<usize> = rest
            .split(',')
            .map(|d| d.trim().parse().map_err(|_| CliError::Input(format!("bad dimension vector '{s}'"))))
            .collect::<CliResult<_>>()?;
        cat.saturate(500)?;
        let hits: Vec<IndecId> = cat.ids().into_iter().filter(|&i| cat.dims(i) == dims).collect();
        return match hits.as_slice() {
            [one] => Ok(*one),
            [] => Err(CliError::Input(format!("no known indecomposable with dimension vector {s}"))),
            _ => Err(CliError::Input(format!("dimension vector {s} is ambiguous"))),
        };
    }
    let v = vertex(tt, &s[kind.len_utf8()..])?;
    Ok(match kind {
        'P' => cat.projective_id(v)?,
        'I' => cat.injective_id(v)?,
        'S' => cat.simple_id(v)?,
        _ => return Err(CliError::Input(format!("unknown module name '{s}'"))),
    })
}

/// `top` (the pair `(Λ, ∅)`), `0` for the zero module, or
/// `P1+S1;3`: summands joined by `+`, then optional support vertices
/// after `;`, comma separated.
pub fn parse_pair(tt: &TauTilting, s: &str) -> CliResult<StPair> {
    let s = s.trim();
    if s == "top" || s == "Λ" {
        return Ok(tt.top_pair()?);
    }
    let (m, sup) = s.split_once(';').unwrap_or((s, ""));
    let module = if m.trim() == "0" || m.trim().is_empty() {
        Vec::new()
    } else {
        m.split('+').map(|x| parse_indec(tt, x)).collect::<CliResult<Vec<_>>>()?
    };
    let support =
        sup.split(',').filter(|x| !x.trim().is_empty()).map(|x| vertex(tt, x)).collect::<CliResult<Vec<_>>>()?;
    Ok(StPair::new(module, support))
}

/// A vertex number for a support slot, otherwise a module name.
pub fn parse_slot(tt: &TauTilting, s: &str) -> CliResult<Slot> {
    let s = s.trim();
    if s.chars().all(|c| c.is_ascii_digit()) {
        Ok(Slot::Vertex(vertex(tt, s)?))
    } else {
        Ok(Slot::Summand(parse_indec(tt, s)?))
    }
}
