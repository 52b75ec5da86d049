use std::collections::{HashMap, VecDeque};
use std::fmt;

use super::DynkinType;
use crate::error::{Error, Result};

/// An element of the Weyl group of type `A_n`, stored as a permutation of
/// `n + 1` letters in one-line notation together with one reduced word.
/// Generator `s_i` (0-based) swaps positions `i` and `i + 1`; `w·s_i` acts
/// on the right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    pub kind: DynkinType,
    pub perm: Vec<usize>,
    pub word: Vec<usize>,
}

fn rank_a(kind: DynkinType) -> Result<usize> {
    match kind {
        DynkinType::A(n) if n >= 1 => Ok(n),
        _ => Err(Error::InvalidParameter(format!("Weyl group enumeration is implemented for type A only, got {kind}"))),
    }
}

impl WeylElement {
    pub fn identity(kind: DynkinType) -> Result<Self> {
        let n = rank_a(kind)?;
        Ok(WeylElement { kind, perm: (0..=n).collect(), word: vec![] })
    }

    /// The element `s_{w[0]} ⋯ s_{w[k]}`; errors unless the word is reduced.
    pub fn from_word(kind: DynkinType, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(kind)?;
        for &i in word {
            if i >= w.rank() {
                return Err(Error::InvalidParameter(format!("generator s{} out of range", i + 1)));
            }
            w = w.times(i);
        }
        if w.length() != word.len() {
            return Err(Error::NonReducedWord(word.to_vec()));
        }
        w.word = word.to_vec();
        Ok(w)
    }

    pub fn rank(&self) -> usize {
        self.perm.len() - 1
    }

    /// Inversion count.
    pub fn length(&self) -> usize {
        let p = &self.perm;
        (0..p.len()).map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count()).sum()
    }

    /// `w·s_i`; the stored word is extended, so it stays reduced only when
    /// `i` is an ascent.
    pub fn times(&self, i: usize) -> Self {
        let mut perm = self.perm.clone();
        perm.swap(i, i + 1);
        let mut word = self.word.clone();
        word.push(i);
        WeylElement { kind: self.kind, perm, word }
    }

    /// Right descents: `ℓ(w·s_i) < ℓ(w)`.
    pub fn is_descent(&self, i: usize) -> bool {
        self.perm[i] > self.perm[i + 1]
    }

    pub fn inverse(&self) -> Self {
        let mut perm = vec![0; self.perm.len()];
        for (k, &v) in self.perm.iter().enumerate() {
            perm[v] = k;
        }
        WeylElement { kind: self.kind, perm, word: self.word.iter().rev().copied().collect() }
    }

    /// The product `self · other`.
    pub fn compose(&self, other: &Self) -> Self {
        let perm = other.perm.iter().map(|&k| self.perm[k]).collect();
        let word = self.word.iter().chain(&other.word).copied().collect();
        WeylElement { kind: self.kind, perm, word }
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self.word.iter().map(|i| format!("s{}", i + 1)).collect();
        write!(f, "{}", parts.join(""))
    }
}

/// All elements, in order of length, each carrying a reduced word.
pub fn weyl_elements(kind: DynkinType) -> Result<Vec<WeylElement>> {
    let e = WeylElement::identity(kind)?;
    let n = e.rank();
    let mut seen = HashMap::from([(e.perm.clone(), 0usize)]);
    let mut out = vec![e];
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for i in 0..n {
            if out[k].is_descent(i) {
                continue;
            }
            let w = out[k].times(i);
            if !seen.contains_key(&w.perm) {
                seen.insert(w.perm.clone(), out.len());
                queue.push_back(out.len());
                out.push(w);
            }
        }
    }
    Ok(out)
}

/// `w' ≤ w` in the right order: `ℓ(w) = ℓ(w') + ℓ(w'⁻¹w)`.
pub fn right_order_leq(lower: &WeylElement, upper: &WeylElement) -> bool {
    upper.length() == lower.length() + lower.inverse().compose(upper).length()
}

/// Every reduced word of `w`, found by peeling right descents.
pub fn all_reduced_words(w: &WeylElement) -> Vec<Vec<usize>> {
    fn go(perm: &mut Vec<usize>, suffix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let descents: Vec<usize> = (0..perm.len() - 1).filter(|&i| perm[i] > perm[i + 1]).collect();
        if descents.is_empty() {
            out.push(suffix.iter().rev().copied().collect());
            return;
        }
        for i in descents {
            perm.swap(i, i + 1);
            suffix.push(i);
            go(perm, suffix, out);
            suffix.pop();
            perm.swap(i, i + 1);
        }
    }
    let mut out = Vec::new();
    go(&mut w.perm.clone(), &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn group_orders() {
        assert_eq!(weyl_elements(DynkinType::A(2)).unwrap().len(), 6);
        assert_eq!(weyl_elements(DynkinType::A(3)).unwrap().len(), 24);
        assert_eq!(weyl_elements(DynkinType::A(4)).unwrap().len(), 120);
        assert!(weyl_elements(DynkinType::D(4)).is_err());
    }

    #[test]
    fn longest_element_of_a2() {
        let w = WeylElement::from_word(DynkinType::A(2), &[0, 1, 0]).unwrap();
        assert_eq!(w.perm, vec![2, 1, 0]);
        assert_eq!(all_reduced_words(&w), vec![vec![0, 1, 0], vec![1, 0, 1]]);
        // 16 reduced words for the longest element of S4
        let w0 = WeylElement::from_word(DynkinType::A(3), &[0, 1, 0, 2, 1, 0]).unwrap();
        assert_eq!(all_reduced_words(&w0).len(), 16);
    }

    #[test]
    fn non_reduced_words_are_rejected() {
        assert!(matches!(WeylElement::from_word(DynkinType::A(2), &[0, 0]), Err(Error::NonReducedWord(_))));
        assert!(WeylElement::from_word(DynkinType::A(2), &[2]).is_err());
    }

    #[test]
    fn right_order_basics() {
        let all = weyl_elements(DynkinType::A(2)).unwrap();
        let e = &all[0];
        let s1 = WeylElement::from_word(DynkinType::A(2), &[0]).unwrap();
        let s2s1 = WeylElement::from_word(DynkinType::A(2), &[1, 0]).unwrap();
        for w in &all {
            assert!(right_order_leq(e, w));
        }
        // s1 is not a prefix of s2 s1
        assert!(!right_order_leq(&s1, &s2s1));
        let s1s2 = WeylElement::from_word(DynkinType::A(2), &[0, 1]).unwrap();
        assert!(right_order_leq(&s1, &s1s2));
        // the Hasse diagram of S3 is a hexagon
        let covers = all
            .iter()
            .flat_map(|a| all.iter().map(move |b| (a, b)))
            .filter(|(a, b)| b.length() == a.length() + 1 && right_order_leq(a, b))
            .count();
        assert_eq!(covers, 6);
    }

    proptest! {
        #[test]
        fn reduced_words_are_reduced_and_consistent(k in 0usize..24) {
            let all = weyl_elements(DynkinType::A(3)).unwrap();
            let w = &all[k];
            prop_assert_eq!(w.word.len(), w.length());
            for word in all_reduced_words(w) {
                let v = WeylElement::from_word(DynkinType::A(3), &word).unwrap();
                prop_assert_eq!(&v.perm, &w.perm);
            }
        }

        #[test]
        fn right_order_is_a_partial_order(a in 0usize..24, b in 0usize..24, c in 0usize..24) {
            let all = weyl_elements(DynkinType::A(3)).unwrap();
            let (x, y, z) = (&all[a], &all[b], &all[c]);
            prop_assert!(right_order_leq(x, x));
            if right_order_leq(x, y) && right_order_leq(y, x) {
                prop_assert_eq!(&x.perm, &y.perm);
            }
            if right_order_leq(x, y) && right_order_leq(y, z) {
                prop_assert!(right_order_leq(x, z));
            }
        }
    }
}
