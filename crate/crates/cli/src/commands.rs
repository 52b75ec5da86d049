use std::fmt::Write as _;

use clap::ValueEnum;
use taumute::cluster::{check_laurent, enumerate_seeds};
use taumute::models::{check_adachi, check_mizuno};
use taumute::repcat::Rep;
use taumute::silt2::check_silting_bijection;
use taumute::taut::{
    check_dagger, check_edge_comparability, check_exchange_sequences, check_g_vectors, check_hasse_equals_exchange,
    check_idempotent_quotient, check_sincere_faithful, check_three_conditions, check_tilting_complements,
    check_torsion_pair, check_two_complements, enumerate, support_tilting_pairs, CheckReport, ExchangePoset,
    MutationCase, TauTilting,
};

use crate::format::PosetExport;
use crate::names::{indec_name, pair_name, pair_name_marked, parse_pair, parse_slot, slot_name};
use crate::presets::{load, load_quiver, Family};
use crate::{CliError, CliResult, Outcome};

/// Registry budget for the checks that quantify over all indecomposables.
pub const REGISTRY_CAP: usize = 500;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Order,
    Gvec,
    Silt,
    Torsion,
    Mizuno,
    Adachi,
    Tilting,
}

fn dims(v: &[usize]) -> String {
    format!("({})", v.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
}

pub fn alg_info(input: &str) -> CliResult<Outcome> {
    let l = load(input)?;
    let a = &l.algebra;
    let n = a.vertex_count();
    let mut t = String::new();
    writeln!(t, "algebra {}", l.name).unwrap();
    writeln!(t, "vertices {n}, arrows {}", a.quiver().arrows().len()).unwrap();
    writeln!(t, "dim {}", a.dim()).unwrap();
    let by_degree: Vec<String> = a.degree_dims().iter().map(usize::to_string).collect();
    writeln!(t, "basis by degree {}", by_degree.join(" ")).unwrap();
    for v in 0..n {
        let p = Rep::projective(a, v)?;
        let i = Rep::injective(a, v)?;
        writeln!(t, "P{} {}  I{} {}", v + 1, dims(p.dims()), v + 1, dims(i.dims())).unwrap();
    }
    Ok(Outcome { text: t, code: 0 })
}

pub fn enumerate_cmd(input: &str, cap: usize, format: OutputFormat) -> CliResult<Outcome> {
    let l = load(input)?;
    let tt = TauTilting::new(&l.algebra);
    let poset = enumerate(&tt, cap)?;
    let export = PosetExport::new(&l.name, &tt, &poset);
    let text = match format {
        OutputFormat::Json => export.to_json() + "\n",
        OutputFormat::Dot => export.to_dot(),
        OutputFormat::Text => {
            let mut t = String::new();
            for node in &export.nodes {
                writeln!(t, "{:>4}  {}", node.index, node.name).unwrap();
            }
            for e in &export.edges {
                writeln!(t, "{} -> {}  at {} / {}", e.upper, e.lower, e.upper_slot, e.lower_slot).unwrap();
            }
            if poset.complete {
                writeln!(t, "{} nodes, {} edges", poset.len(), poset.edges.len()).unwrap();
            } else {
                writeln!(t, "truncated at cap {cap}: {} nodes so far", poset.len()).unwrap();
            }
            t
        }
    };
    Ok(Outcome { text, code: if poset.complete { 0 } else { 3 } })
}

pub fn mutate_cmd(input: &str, pair: &str, slot: &str) -> CliResult<Outcome> {
    let l = load(input)?;
    let tt = TauTilting::new(&l.algebra);
    let p = parse_pair(&tt, pair)?;
    let s = parse_slot(&tt, slot)?;
    let m = tt.mutate(&p, s)?;
    let mut t = String::new();
    writeln!(t, "{} at {} -> {}", pair_name(&tt, &p), slot_name(&tt, s), pair_name(&tt, &m.result)).unwrap();
    writeln!(t, "new slot {}", slot_name(&tt, m.new_slot)).unwrap();
    // in case (B) the sequence lives over the opposite algebra
    let (side, mark) = match m.case {
        MutationCase::A => (tt.clone(), ""),
        MutationCase::B => (tt.opposite(), "'"),
    };
    let name = |x| format!("{}{mark}", indec_name(side.cat(), x));
    let r = &m.report;
    let u: Vec<String> = r.u_prime.iter().map(|&x| name(x)).collect();
    let u = if u.is_empty() { "0".to_string() } else { u.join("+") };
    match m.case {
        MutationCase::A => writeln!(t, "case A").unwrap(),
        MutationCase::B => {
            let (q, q2) = m.via_dagger.as_ref().expect("case B records the dagger route");
            writeln!(
                t,
                "case B via dagger: {} -> {}",
                pair_name_marked(&side, q, "'"),
                pair_name_marked(&side, q2, "'")
            )
            .unwrap();
        }
    }
    if r.surjective {
        writeln!(t, "exchange sequence {} -> {u} -> 0, surjective branch", name(r.x)).unwrap();
    } else {
        let y = r.y.map(name).unwrap_or_else(|| "?".into());
        writeln!(t, "exchange sequence {} -> {u} -> {y}^{} -> 0, r = {}", name(r.x), r.r, r.r).unwrap();
    }
    writeln!(t, "exact {}, left approximation {}, left minimal {}", r.exact, r.left_approximation, r.left_minimal)
        .unwrap();
    Ok(Outcome { text: t, code: if r.verified() { 0 } else { 1 } })
}

fn merged(name: &str, parts: Vec<CheckReport>) -> CheckReport {
    let mut out = CheckReport::new(name);
    for p in parts {
        out.checked += p.checked;
        out.violations.extend(p.violations);
    }
    out
}

fn suite_reports(tt: &TauTilting, poset: &ExchangePoset, suite: Suite) -> CliResult<Vec<CheckReport>> {
    let all = suite == Suite::All;
    let mut out = Vec::new();
    if all || suite == Suite::Order {
        let op = enumerate(&tt.opposite(), poset.cap)?;
        op.require_complete()?;
        out.push(check_two_complements(tt, poset)?);
        out.push(check_hasse_equals_exchange(tt, poset)?);
        out.push(check_edge_comparability(tt, poset)?);
        out.push(check_dagger(tt, poset, &op)?);
        out.push(check_exchange_sequences(tt, poset)?.0);
    }
    if all || suite == Suite::Gvec {
        out.push(check_g_vectors(tt, poset, REGISTRY_CAP)?);
    }
    if all || suite == Suite::Silt {
        out.push(check_silting_bijection(tt, poset)?);
    }
    if all || suite == Suite::Torsion {
        let parts =
            poset.nodes.iter().map(|p| check_torsion_pair(tt, p, REGISTRY_CAP)).collect::<Result<Vec<_>, _>>()?;
        out.push(merged("torsion pairs", parts));
        out.push(check_three_conditions(tt, poset, REGISTRY_CAP)?);
        out.push(check_sincere_faithful(tt, poset)?);
        out.push(check_idempotent_quotient(tt, poset, REGISTRY_CAP)?);
    }
    if all || suite == Suite::Tilting {
        let mut r = check_tilting_complements(tt, poset)?;
        r.notes.push(format!("{} support tilting pairs", support_tilting_pairs(tt, poset)?.len()));
        out.push(r);
    }
    Ok(out)
}

pub fn check_cmd(input: &str, suite: Suite, cap: usize) -> CliResult<Outcome> {
    let l = load(input)?;
    let mut reports = Vec::new();
    match (suite, l.family) {
        (Suite::Mizuno | Suite::All, Family::Preprojective(kind)) => {
            let m = check_mizuno(kind, cap)?;
            reports.push(m.report);
        }
        (Suite::Mizuno, _) => return Err(CliError::Input("the mizuno suite needs a preproj:TYPE preset".into())),
        _ => {}
    }
    match (suite, l.family) {
        (Suite::Adachi | Suite::All, Family::Cyclic(n, m)) if m >= n => {
            reports.push(check_adachi(n, m, cap)?.0);
        }
        (Suite::Adachi, _) => {
            return Err(CliError::Input("the adachi suite needs a cyclic:N,M preset with M ≥ N".into()))
        }
        _ => {}
    }
    let mut t = String::new();
    if suite != Suite::Mizuno && suite != Suite::Adachi {
        let tt = TauTilting::new(&l.algebra);
        let poset = enumerate(&tt, cap)?;
        if !poset.complete {
            return Err(CliError::Truncated(cap));
        }
        writeln!(t, "{}: {} nodes, {} edges", l.name, poset.len(), poset.edges.len()).unwrap();
        reports.extend(suite_reports(&tt, &poset, suite)?);
    }
    for r in &reports {
        writeln!(t, "{r}").unwrap();
        for note in &r.notes {
            writeln!(t, "  {note}").unwrap();
        }
    }
    let pass = reports.iter().all(CheckReport::passed);
    writeln!(t, "{}", if pass { "all checks pass" } else { "violations found" }).unwrap();
    Ok(Outcome { text: t, code: if pass { 0 } else { 1 } })
}

pub fn cluster_cmd(input: &str, cap: usize) -> CliResult<Outcome> {
    let q = load_quiver(input)?;
    let g = enumerate_seeds(&q, cap)?;
    if !g.complete {
        return Ok(Outcome { text: format!("truncated at cap {cap}: {} seeds so far\n", g.seeds.len()), code: 3 });
    }
    let r = check_laurent(&g)?;
    let mut t = format!("{}\n{r}\n", r.notes.join("\n"));
    if r.passed() {
        for x in g.variables() {
            writeln!(t, "  {x}").unwrap();
        }
    }
    Ok(Outcome { text: t, code: if r.passed() { 0 } else { 1 } })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn info() {
        let o = alg_info("a3").unwrap();
        assert!(o.text.contains("dim 6\n"), "{}", o.text);
        assert!(o.text.contains("P1 (1,1,1)"), "{}", o.text);
        assert!(alg_info("a3-mod-ba").unwrap().text.contains("dim 5\n"));
    }

    #[test]
    fn enumerate_counts() {
        let o = enumerate_cmd("a3-mod-ba", 100, OutputFormat::Text).unwrap();
        assert!(o.text.ends_with("12 nodes, 18 edges\n"), "{}", o.text);
        let o = enumerate_cmd("a3-mod-ba", 5, OutputFormat::Text).unwrap();
        assert_eq!(o.code, 3);
    }

    #[test]
    fn mutations() {
        let o = mutate_cmd("a3-mod-ba", "top", "P2").unwrap();
        assert!(o.text.starts_with("(P1+P2+P3, ∅) at P2 -> (P1+P3+S1, ∅)\n"), "{}", o.text);
        assert!(o.text.contains("r = 1"), "{}", o.text);
        let o = mutate_cmd("a3-mod-ba", "top", "P1").unwrap();
        assert!(o.text.starts_with("(P1+P2+P3, ∅) at P1 -> (P2+P3, {1})\n"), "{}", o.text);
        assert!(o.text.contains("surjective branch"), "{}", o.text);
        let o = mutate_cmd("a3-mod-ba", "P1+S1;3", "3").unwrap();
        assert!(o.text.starts_with("(P1+S1, {3}) at vertex 3 -> (P1+S1+P3, ∅)\n"), "{}", o.text);
        assert!(o.text.contains("via dagger: (S2'+P3', {1})"), "{}", o.text);
        assert_eq!(mutate_cmd("a3-mod-ba", "top", "S1").unwrap_err().exit_code(), 2);
    }

    #[test]
    fn checks() {
        let o = check_cmd("a3", Suite::Tilting, 100).unwrap();
        assert_eq!(o.code, 0, "{}", o.text);
        assert!(o.text.contains("5 tilting modules"), "{}", o.text);
        assert_eq!(check_cmd("a3", Suite::Mizuno, 100).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn clusters() {
        let o = cluster_cmd("a3", 100).unwrap();
        assert!(o.text.starts_with("14 clusters, 9 variables\n"), "{}", o.text);
        assert!(cluster_cmd("a2", 100).unwrap().text.starts_with("5 clusters, 5 variables\n"));
    }
}
