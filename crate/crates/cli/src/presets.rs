use std::path::Path;

use taumute::bqa::Algebra;
use taumute::cluster::ExchangeQuiver;
use taumute::models::{cyclic_nakayama, kq_mod_ba, kronecker, linear_an, preprojective, DynkinType};

use crate::format::parse_algebra;
use crate::{CliError, CliResult};

/// Which example family an algebra belongs to, for family-specific suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Preprojective(DynkinType),
    Cyclic(usize, usize),
    Other,
}

pub struct Loaded {
    pub name: String,
    pub algebra: Algebra,
    pub family: Family,
}

pub const PRESET_HELP: &str =
    "a2, a3, linear:N, a3-mod-ba, kronecker, cyclic:N,M, preproj:TYPE (e.g. preproj:A2), or a JSON file";

fn number(s: &str, what: &str) -> CliResult<usize> {
    s.trim().parse().map_err(|_| CliError::Input(format!("expected a number for {what}, got '{s}'")))
}

/// A preset name or a path to an algebra JSON file.
pub fn load(input: &str) -> CliResult<Loaded> {
    if Path::new(input).is_file() {
        let text = std::fs::read_to_string(input).map_err(|e| CliError::Input(format!("{input}: {e}")))?;
        let algebra = parse_algebra(&text).map_err(|e| match e {
            CliError::Input(m) => CliError::Input(format!("{input}: {m}")),
            other => other,
        })?;
        return Ok(Loaded { name: input.to_string(), algebra, family: Family::Other });
    }
    let (algebra, family) = match input {
        "a2" => (linear_an(2)?, Family::Other),
        "a3" => (linear_an(3)?, Family::Other),
        "a3-mod-ba" => (kq_mod_ba()?, Family::Other),
        "kronecker" => (kronecker()?, Family::Other),
        _ => {
            if let Some(n) = input.strip_prefix("linear:") {
                (linear_an(number(n, "linear:N")?)?, Family::Other)
            } else if let Some(rest) = input.strip_prefix("cyclic:") {
                let (n, m) = rest
                    .split_once(',')
                    .ok_or_else(|| CliError::Input(format!("expected cyclic:N,M, got '{input}'")))?;
                let (n, m) = (number(n, "N")?, number(m, "M")?);
                (cyclic_nakayama(n, m)?, Family::Cyclic(n, m))
            } else if let Some(t) = input.strip_prefix("preproj:") {
                let t: DynkinType = t.parse()?;
                (preprojective(t)?, Family::Preprojective(t))
            } else {
                return Err(CliError::Input(format!("unknown algebra '{input}'; expected {PRESET_HELP}")));
            }
        }
    };
    Ok(Loaded { name: input.to_string(), algebra, family })
}

/// The quiver of a preset or file, read as an exchange quiver.
pub fn load_quiver(input: &str) -> CliResult<ExchangeQuiver> {
    let alg = load(input)?.algebra;
    ExchangeQuiver::from_algebra(&alg).map_err(|e| CliError::Input(format!("{input}: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_load() {
        assert_eq!(load("a3").unwrap().algebra.dim(), 6);
        assert_eq!(load("a3-mod-ba").unwrap().algebra.dim(), 5);
        assert_eq!(load("linear:4").unwrap().algebra.dim(), 10);
        let c = load("cyclic:3,3").unwrap();
        assert_eq!((c.algebra.dim(), c.family), (9, Family::Cyclic(3, 3)));
        assert_eq!(load("preproj:A2").unwrap().family, Family::Preprojective(DynkinType::A(2)));
        assert!(matches!(load("nonsense"), Err(CliError::Input(_))));
        assert!(matches!(load("cyclic:3"), Err(CliError::Input(_))));
        assert!(load("preproj:D3").is_err());
    }

    #[test]
    fn quivers() {
        assert_eq!(load_quiver("a3").unwrap().n(), 3);
        assert!(load_quiver("preproj:A2").is_err());
    }
}
