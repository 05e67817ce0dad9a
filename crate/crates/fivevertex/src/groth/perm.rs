//! Permutations in one-line notation (1-based entries).

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum PermError {
    #[error("permutation sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("not a permutation of 1..={0}")]
    NotBijective(usize),
    #[error("simple transposition index {0} out of range for S_{1}")]
    BadTransposition(usize, usize),
}

/// A permutation of {1, …, N}, stored in one-line notation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Perm {
    oneline: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm { oneline: (1..=n as u8).collect() }
    }

    /// ω_N, the longest element (N, N−1, …, 1).
    pub fn longest(n: usize) -> Perm {
        Perm { oneline: (1..=n as u8).rev().collect() }
    }

    /// ρ_k = s_1 s_2 ⋯ s_k; ρ_0 is the identity.
    pub fn rho(k: usize, n: usize) -> Perm {
        let mut p = Perm::identity(n);
        for i in 1..=k {
            p = p.mul_right_simple(i).expect("rho index in range");
        }
        p
    }

    pub fn from_oneline(oneline: Vec<u8>) -> Result<Perm, PermError> {
        let n = oneline.len();
        let mut seen = vec![false; n + 1];
        for &v in &oneline {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(PermError::NotBijective(n));
            }
            seen[v as usize] = true;
        }
        Ok(Perm { oneline })
    }

    pub fn n(&self) -> usize {
        self.oneline.len()
    }

    pub fn oneline(&self) -> &[u8] {
        &self.oneline
    }

    /// w(i), 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.oneline[i - 1] as usize
    }

    /// (self ∘ other)(i) = self(other(i)).
    pub fn compose(&self, other: &Perm) -> Result<Perm, PermError> {
        if self.n() != other.n() {
            return Err(PermError::SizeMismatch(self.n(), other.n()));
        }
        Ok(Perm {
            oneline: (1..=self.n()).map(|i| self.apply(other.apply(i)) as u8).collect(),
        })
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.n()];
        for i in 1..=self.n() {
            inv[self.apply(i) - 1] = i as u8;
        }
        Perm { oneline: inv }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let mut l = 0;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.oneline[i] > self.oneline[j] {
                    l += 1;
                }
            }
        }
        l
    }

    pub fn is_identity(&self) -> bool {
        self.oneline.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// self · s_i (swaps positions i, i+1).
    pub fn mul_right_simple(&self, i: usize) -> Result<Perm, PermError> {
        if i < 1 || i >= self.n() {
            return Err(PermError::BadTransposition(i, self.n()));
        }
        let mut oneline = self.oneline.clone();
        oneline.swap(i - 1, i);
        Ok(Perm { oneline })
    }

    /// s_i · self (swaps values i, i+1).
    pub fn mul_left_simple(&self, i: usize) -> Result<Perm, PermError> {
        if i < 1 || i >= self.n() {
            return Err(PermError::BadTransposition(i, self.n()));
        }
        let oneline = self
            .oneline
            .iter()
            .map(|&v| {
                if v as usize == i {
                    (i + 1) as u8
                } else if v as usize == i + 1 {
                    i as u8
                } else {
                    v
                }
            })
            .collect();
        Ok(Perm { oneline })
    }

    /// Whether l(s_i · self) < l(self).
    pub fn has_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.apply(i) > inv.apply(i + 1)
    }

    /// Whether l(self · s_i) < l(self).
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.apply(i) > self.apply(i + 1)
    }

    /// The lexicographically least reduced word (letters i meaning s_i, the
    /// leftmost factor first): greedily take the smallest left descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut v = self.clone();
        'outer: while !v.is_identity() {
            for i in 1..v.n() {
                if v.has_left_descent(i) {
                    word.push(i);
                    v = v.mul_left_simple(i).unwrap();
                    continue 'outer;
                }
            }
            unreachable!("non-identity permutation has a descent");
        }
        word
    }

    /// Every reduced word, in lexicographic order.
    pub fn all_reduced_words(&self) -> Vec<Vec<usize>> {
        if self.is_identity() {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for i in 1..self.n() {
            if self.has_left_descent(i) {
                let rest = self.mul_left_simple(i).unwrap();
                for mut w in rest.all_reduced_words() {
                    w.insert(0, i);
                    out.push(w);
                }
            }
        }
        out
    }

    /// The occupation word with letter w(i)−1 at site i.
    pub fn apply_to_word(&self) -> Vec<u8> {
        self.oneline.iter().map(|&v| v - 1).collect()
    }

    /// The permutation whose occupation word this is, if the letters are
    /// exactly {0, …, N−1}.
    pub fn from_word(word: &[u8]) -> Option<Perm> {
        Perm::from_oneline(word.iter().map(|&l| l + 1).collect()).ok()
    }

    /// All of S_n in lexicographic order on one-line notation.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (1..=n as u8).collect();
        loop {
            out.push(Perm { oneline: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

impl std::fmt::Display for Perm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for &v in &self.oneline {
            if v < 10 {
                write!(f, "{v}")?;
            } else {
                write!(f, "({v})")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn longest_word_on_sites() {
        assert_eq!(Perm::longest(3).apply_to_word(), vec![2, 1, 0]);
    }

    #[test]
    fn example_word_from_composition() {
        // ω_3 ∘ (213)^{-1} has word (1,2,0).
        let w = Perm::from_oneline(vec![2, 1, 3]).unwrap();
        let k = Perm::longest(3).compose(&w.inverse()).unwrap();
        assert_eq!(k.apply_to_word(), vec![1, 2, 0]);
    }

    #[test]
    fn rho_k_has_length_k() {
        for k in 0..4 {
            assert_eq!(Perm::rho(k, 5).length(), k);
        }
    }

    #[test]
    fn reduced_word_is_reduced_and_least() {
        let w = Perm::longest(4);
        let word = w.reduced_word();
        assert_eq!(word.len(), w.length());
        let mut v = Perm::identity(4);
        for &i in word.iter().rev() {
            v = v.mul_left_simple(i).unwrap();
        }
        // rebuilding left-to-right: w = s_{i_1} ... s_{i_l}
        let mut u = Perm::identity(4);
        for &i in &word {
            u = u.compose(&Perm::identity(4).mul_left_simple(i).unwrap()).unwrap();
        }
        assert_eq!(u, w);
        let all = w.all_reduced_words();
        assert_eq!(all.iter().min().unwrap(), &word);
    }

    #[test]
    fn compose_convention() {
        // compose(w, v)(i) = w(v(i))
        let w = Perm::from_oneline(vec![3, 1, 2]).unwrap();
        let v = Perm::from_oneline(vec![2, 3, 1]).unwrap();
        let wv = w.compose(&v).unwrap();
        assert_eq!(wv.apply(1), w.apply(v.apply(1)));
        assert!(w.compose(&Perm::identity(4)).is_err());
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let all = Perm::all(3);
        assert_eq!(all.len(), 6);
        assert_eq!(all[0].oneline(), &[1, 2, 3]);
        assert_eq!(all[5].oneline(), &[3, 2, 1]);
    }
}
