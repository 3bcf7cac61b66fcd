//! Permutations in one-line notation (0-based).
//!
//! Products are composites of functions: `(σσ')(i) = σ(σ'(i))`. With that
//! convention the place-permutation action `(v₁⊗…⊗v_d).σ = ±v_{σ(1)}⊗…⊗v_{σ(d)}`
//! is a right action.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(d: usize) -> Self {
        Permutation((0..d).collect())
    }

    /// Validates one-line notation.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Permutation(images))
    }

    /// The simple transposition swapping positions `i` and `i+1` (0-based).
    pub fn simple(d: usize, i: usize) -> Self {
        assert!(i + 1 < d, "simple transposition s_{} outside S_{d}", i + 1);
        let mut v: Vec<usize> = (0..d).collect();
        v.swap(i, i + 1);
        Permutation(v)
    }

    /// Product `s_{w₀} s_{w₁} …` of simple transpositions (0-based letters).
    pub fn from_word(d: usize, word: &[usize]) -> Self {
        word.iter().fold(Permutation::identity(d), |acc, &i| {
            acc.compose(&Permutation::simple(d, i))
        })
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }

    pub fn inversions(&self) -> usize {
        let n = self.degree();
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.0[a] > self.0[b])
            .count()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// A reduced word found by bubble sort: `self == from_word(d, &word)` and
    /// `word.len() == inversions()`.
    pub fn reduced_word(&self) -> Vec<usize> {
        // Sorting one-line notation by adjacent swaps on the right multiplies
        // by s_i; recording the swaps in reverse order recovers self.
        let mut cur = self.0.clone();
        let mut swaps = Vec::new();
        let n = cur.len();
        for pass in 0..n {
            for i in 0..n.saturating_sub(1 + pass) {
                if cur[i] > cur[i + 1] {
                    cur.swap(i, i + 1);
                    swaps.push(i);
                }
            }
        }
        swaps.reverse();
        swaps
    }

    /// All permutations of `0..d` in lexicographic one-line order.
    pub fn all(d: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..d).collect();
        loop {
            out.push(Permutation(cur.clone()));
            // next lexicographic permutation
            let Some(i) = (0..d.saturating_sub(1))
                .rev()
                .find(|&i| cur[i] < cur[i + 1])
            else {
                break;
            };
            let j = (i + 1..d).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }

    /// Position of `self` in [`Permutation::all`].
    pub fn lex_rank(&self) -> usize {
        let d = self.degree();
        let mut rank = 0;
        let mut fact = vec![1usize; d + 1];
        for k in 1..=d {
            fact[k] = fact[k - 1] * k;
        }
        for i in 0..d {
            let smaller = (i + 1..d).filter(|&j| self.0[j] < self.0[i]).count();
            rank += smaller * fact[d - 1 - i];
        }
        rank
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "]")
    }
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Multiset coefficient `C(n+k-1, k)`, zero when `n == 0 < k`.
pub fn multichoose(n: usize, k: usize) -> usize {
    if k == 0 {
        1
    } else if n == 0 {
        0
    } else {
        binomial(n + k - 1, k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn all_is_lexicographic_and_complete() {
        let ps = Permutation::all(4);
        assert_eq!(ps.len(), 24);
        assert!(ps.windows(2).all(|w| w[0] < w[1]));
        for (k, p) in ps.iter().enumerate() {
            assert_eq!(p.lex_rank(), k);
        }
        assert_eq!(Permutation::all(0).len(), 1);
    }

    #[test]
    fn braid_relation() {
        let s1 = Permutation::simple(3, 0);
        let s2 = Permutation::simple(3, 1);
        assert_eq!(s1.compose(&s2).compose(&s1), s2.compose(&s1).compose(&s2));
        assert!(s1.compose(&s1).is_identity());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(1, 2), 0);
        assert_eq!(multichoose(0, 0), 1);
        assert_eq!(multichoose(0, 2), 0);
        assert_eq!(multichoose(2, 3), 4);
    }

    proptest! {
        #[test]
        fn reduced_word_reconstructs(p in (1usize..6).prop_flat_map(|d| Just(d).prop_perturb(move |d, mut rng| {
            let mut v: Vec<usize> = (0..d).collect();
            for i in (1..d).rev() { let j = (rng.next_u32() as usize) % (i + 1); v.swap(i, j); }
            Permutation::from_images(v).unwrap()
        }))) {
            let w = p.reduced_word();
            prop_assert_eq!(w.len(), p.inversions());
            prop_assert_eq!(Permutation::from_word(p.degree(), &w), p.clone());
            prop_assert!(p.compose(&p.inverse()).is_identity());
        }
    }
}
