use std::fmt;
use std::str::FromStr;

use crate::bqa::{Algebra, Arrow, Quiver, Relation};
use crate::error::{Error, Result};
use crate::exactla::int;

fn letter_name(i: usize) -> String {
    let letters = b"abcdefghijklmnopqrstuvwxyz";
    if i < letters.len() {
        (letters[i] as char).to_string()
    } else {
        format!("a{}", i + 1)
    }
}

/// Path algebra of `1 → 2 → ⋯ → n`, arrows named `a, b, c, …`.
pub fn linear_an(n: usize) -> Result<Algebra> {
    if n == 0 {
        return Err(Error::InvalidParameter("linear A_n needs n ≥ 1".into()));
    }
    let arrows = (0..n - 1).map(|i| Arrow { name: letter_name(i), source: i, target: i + 1 }).collect();
    Algebra::build(Quiver::new(n, arrows)?, vec![])
}

/// `kQ/(ba)` for `Q = 1 →a 2 →b 3`.
pub fn kq_mod_ba() -> Result<Algebra> {
    let q = Quiver::from_triples(3, &[("a", 0, 1), ("b", 1, 2)])?;
    Algebra::build(q, vec![Relation::zero_path(vec![0, 1])])
}

/// Kronecker algebra `1 ⇉ 2`.
pub fn kronecker() -> Result<Algebra> {
    Algebra::build(Quiver::from_triples(2, &[("a", 0, 1), ("b", 0, 1)])?, vec![])
}

/// Cyclic quiver `1 → 2 → ⋯ → n → 1` modulo all paths of length `m`.
/// Adachi's count applies for `m ≥ n`; `m = 2, n = 3` is the cluster-tilted
/// algebra of type A3.
pub fn cyclic_nakayama(n: usize, m: usize) -> Result<Algebra> {
    if n == 0 || m < 2 {
        return Err(Error::InvalidParameter(format!("cyclic Nakayama needs n ≥ 1 and m ≥ 2, got n={n}, m={m}")));
    }
    let arrows = (0..n).map(|i| Arrow { name: format!("a{}", i + 1), source: i, target: (i + 1) % n }).collect();
    let rels = (0..n).map(|s| Relation::zero_path((0..m).map(|k| (s + k) % n).collect())).collect();
    Algebra::build(Quiver::new(n, arrows)?, rels)
}

/// Simply-laced Dynkin types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E(usize),
}

impl DynkinType {
    pub fn rank(&self) -> usize {
        match *self {
            DynkinType::A(n) | DynkinType::D(n) | DynkinType::E(n) => n,
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = match *self {
            DynkinType::A(n) => n >= 1,
            DynkinType::D(n) => n >= 4,
            DynkinType::E(n) => (6..=8).contains(&n),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!("no Dynkin diagram {self}")))
        }
    }

    /// Edges of the diagram, oriented from smaller to larger index.
    pub fn edges(&self) -> Result<Vec<(usize, usize)>> {
        self.validate()?;
        Ok(match *self {
            DynkinType::A(n) => (0..n - 1).map(|i| (i, i + 1)).collect(),
            DynkinType::D(n) => {
                let mut e: Vec<(usize, usize)> = (0..n - 2).map(|i| (i, i + 1)).collect();
                e.push((n - 3, n - 1));
                e
            }
            DynkinType::E(n) => {
                let mut e: Vec<(usize, usize)> = (0..n - 2).map(|i| (i, i + 1)).collect();
                e.push((2, n - 1));
                e
            }
        })
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E(n) => write!(f, "E{n}"),
        }
    }
}

impl FromStr for DynkinType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("unknown Dynkin type '{s}'"));
        let (head, rest) = s.split_at(s.char_indices().nth(1).map(|(i, _)| i).ok_or_else(bad)?);
        let n: usize = rest.parse().map_err(|_| bad())?;
        let t = match head {
            "A" | "a" => DynkinType::A(n),
            "D" | "d" => DynkinType::D(n),
            "E" | "e" => DynkinType::E(n),
            _ => return Err(bad()),
        };
        t.validate()?;
        Ok(t)
    }
}

/// Preprojective algebra of a Dynkin diagram: the doubled quiver with one
/// relation per vertex, `Σ_{t(a)=v} a a* − Σ_{s(a)=v} a* a`.
pub fn preprojective(t: DynkinType) -> Result<Algebra> {
    let n = t.rank();
    let edges = t.edges()?;
    let single = edges.len() < 26 && matches!(t, DynkinType::A(_));
    let mut arrows = Vec::new();
    for (k, &(s, d)) in edges.iter().enumerate() {
        let name = if single { letter_name(k) } else { format!("a{}", k + 1) };
        arrows.push(Arrow { name: name.clone(), source: s, target: d });
        arrows.push(Arrow { name: format!("{name}*"), source: d, target: s });
    }
    let mut rels = Vec::new();
    for v in 0..n {
        let mut terms = Vec::new();
        for (k, &(s, d)) in edges.iter().enumerate() {
            let (a, astar) = (2 * k, 2 * k + 1);
            if d == v {
                terms.push((int(1), vec![astar, a]));
            }
            if s == v {
                terms.push((int(-1), vec![a, astar]));
            }
        }
        if !terms.is_empty() {
            rels.push(Relation { terms });
        }
    }
    Algebra::build(Quiver::new(n, arrows)?, rels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcat::{ModCat, Rep};

    #[test]
    fn dimensions() {
        assert_eq!(linear_an(3).unwrap().dim(), 6);
        assert_eq!(kq_mod_ba().unwrap().dim(), 5);
        assert_eq!(cyclic_nakayama(3, 3).unwrap().dim(), 9);
        assert_eq!(cyclic_nakayama(3, 2).unwrap().dim(), 6);
        assert_eq!(preprojective(DynkinType::A(2)).unwrap().dim(), 4);
        assert_eq!(preprojective(DynkinType::A(3)).unwrap().dim(), 10);
        // dim Π(A_n) = n(n+1)(n+2)/6
        assert_eq!(preprojective(DynkinType::A(4)).unwrap().dim(), 20);
        // dim Π(D4) = 28
        assert_eq!(preprojective(DynkinType::D(4)).unwrap().dim(), 28);
    }

    #[test]
    fn preprojective_is_selfinjective() {
        for t in [DynkinType::A(2), DynkinType::A(3)] {
            let p = preprojective(t).unwrap();
            let cat = ModCat::new(&p);
            assert!(cat.is_isomorphic(&Rep::regular(&p), &Rep::dual_regular(&p)).unwrap());
        }
        let a3 = linear_an(3).unwrap();
        let cat = ModCat::new(&a3);
        assert!(!cat.is_isomorphic(&Rep::regular(&a3), &Rep::dual_regular(&a3)).unwrap());
    }

    #[test]
    fn parameters_are_validated() {
        assert!(cyclic_nakayama(3, 1).is_err());
        assert!(linear_an(0).is_err());
        assert!("D3".parse::<DynkinType>().is_err());
        assert_eq!("E6".parse::<DynkinType>().unwrap(), DynkinType::E(6));
        assert!("X2".parse::<DynkinType>().is_err());
    }
}
