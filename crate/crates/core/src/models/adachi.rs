use super::cyclic_nakayama;
use crate::error::{Error, Result};
use crate::taut::{enumerate, CheckReport, TauTilting};

/// Node counts for the cyclic Nakayama algebra with all length-`m` paths zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdachiCounts {
    /// Pairs with empty support part.
    pub tau_tilting: usize,
    /// Pairs with nonempty support part.
    pub support_only: usize,
    /// Sequences of `n` non-negative integers summing to `n`.
    pub sequences: usize,
}

/// Sequences `(a_1, …, a_len)` of non-negative integers with sum `total`,
/// counted by walking the lattice points one coordinate at a time.
pub fn lattice_points(len: usize, total: usize) -> usize {
    fn go(len: usize, left: usize) -> usize {
        if len == 1 {
            return 1;
        }
        (0..=left).map(|a| go(len - 1, left - a)).sum()
    }
    if len == 0 {
        return usize::from(total == 0);
    }
    go(len, total)
}

/// Enumerate the poset of `cyclic_nakayama(n, m)` and compare both halves
/// with the sequence count.
pub fn check_adachi(n: usize, m: usize, cap: usize) -> Result<(CheckReport, AdachiCounts)> {
    if m < n {
        return Err(Error::InvalidParameter(format!("the count needs m ≥ n, got n={n}, m={m}")));
    }
    let tt = TauTilting::new(&cyclic_nakayama(n, m)?);
    let poset = enumerate(&tt, cap)?;
    poset.require_complete()?;
    let tau_tilting = poset.nodes.iter().filter(|p| p.support.is_empty()).count();
    let counts = AdachiCounts { tau_tilting, support_only: poset.len() - tau_tilting, sequences: lattice_points(n, n) };
    let mut report = CheckReport::new("cyclic Nakayama counts");
    report.expect(counts.tau_tilting == counts.sequences, || {
        format!("{} τ-tilting modules but {} sequences", counts.tau_tilting, counts.sequences)
    });
    report.expect(counts.support_only == counts.sequences, || {
        format!("{} strictly support pairs but {} sequences", counts.support_only, counts.sequences)
    });
    report.notes.push(format!(
        "n={n}, m={m}: {} τ-tilting + {} support = {} nodes; {} sequences",
        counts.tau_tilting,
        counts.support_only,
        poset.len(),
        counts.sequences
    ));
    Ok((report, counts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;
    use proptest::prelude::*;

    fn binomial(n: u64, k: u64) -> BigUint {
        (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn lattice_point_counts() {
        assert_eq!(lattice_points(3, 3), 10);
        assert_eq!(lattice_points(2, 2), 3);
        assert_eq!(lattice_points(1, 1), 1);
        assert_eq!(lattice_points(0, 0), 1);
    }

    proptest! {
        #[test]
        fn lattice_points_match_binomial(n in 1usize..8) {
            prop_assert_eq!(BigUint::from(lattice_points(n, n)), binomial(2 * n as u64 - 1, n as u64 - 1));
        }
    }

    #[test]
    fn three_three() {
        let (r, c) = check_adachi(3, 3, 1000).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(c, AdachiCounts { tau_tilting: 10, support_only: 10, sequences: 10 });
    }

    #[test]
    fn counts_depend_only_on_n() {
        let (r, c) = check_adachi(2, 2, 1000).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!((c.tau_tilting, c.support_only), (3, 3));
        let (r, c2) = check_adachi(2, 3, 1000).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(c, c2);
        let (r, _) = check_adachi(1, 2, 1000).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn rejects_short_relations() {
        assert!(check_adachi(3, 2, 1000).is_err());
    }
}
