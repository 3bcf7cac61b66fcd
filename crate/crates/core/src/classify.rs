//! Labels of the simple objects in the polynomial categories of each type.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition as weakly decreasing positive parts; `∅` is empty.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of `d`, in reverse lexicographic order.
pub fn partitions(d: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(d, d, &mut Vec::new(), &mut out);
    out
}

fn check_prime(p: u32) -> Result<()> {
    let prime = p > 2
        && (3..)
            .step_by(2)
            .take_while(|k| k * k <= p)
            .all(|k| !p.is_multiple_of(k));
    if prime {
        Ok(())
    } else {
        Err(Error::InvalidField(format!("{p} is not an odd prime")))
    }
}

/// Pairs `(λ, μ)` with `|λ| + p|μ| = d`. Only odd primes are accepted: at
/// `p = 0` the condition does not bound `μ`.
pub fn labels_type_i(d: usize, p: u32) -> Result<Vec<(Partition, Partition)>> {
    if p == 0 {
        return Err(Error::Unsupported(
            "type I labels need p > 0: with p = 0 the second partition is unconstrained".into(),
        ));
    }
    check_prime(p)?;
    let p = p as usize;
    let mut out = Vec::new();
    for k in 0..=d / p {
        for lambda in partitions(d - p * k) {
            for mu in partitions(k) {
                out.push((lambda.clone(), mu));
            }
        }
    }
    Ok(out)
}

/// Partitions of `d` in which equal neighbouring parts are divisible by `p`
/// (strict partitions when `p = 0`).
pub fn labels_type_ii(d: usize, p: u32) -> Result<Vec<Partition>> {
    if p != 0 {
        check_prime(p)?;
    }
    let p = p as usize;
    Ok(partitions(d)
        .into_iter()
        .filter(|l| {
            l.parts()
                .windows(2)
                .all(|w| w[0] != w[1] || (p > 0 && w[0] % p == 0))
        })
        .collect())
}

/// `Λ(n, d)`: n-tuples of nonnegative integers summing to `d`, in
/// decreasing lexicographic order.
pub fn weight_compositions(n: usize, d: usize) -> Result<Vec<Vec<usize>>> {
    if n == 0 {
        return Err(Error::OutOfRange("weight compositions need n ≥ 1".into()));
    }
    fn go(n: usize, rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 1 {
            cur.push(rest);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for k in (0..=rest).rev() {
            cur.push(k);
            go(n - 1, rest - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, d, &mut Vec::new(), &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn show(ls: &[Partition]) -> Vec<String> {
        ls.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn partition_basics() {
        assert_eq!(Partition::new(vec![1, 0, 3, 1]).parts(), &[3, 1, 1]);
        assert_eq!(partitions(0), vec![Partition::new(vec![])]);
        assert_eq!(partitions(5).len(), 7);
        assert_eq!(Partition::new(vec![0]).to_string(), "∅");
    }

    #[test]
    fn type_i_examples() {
        assert_eq!(labels_type_i(1, 3).unwrap().len(), 1);
        let l = labels_type_i(3, 3).unwrap();
        assert_eq!(l.len(), 4);
        assert!(l.contains(&(Partition::new(vec![]), Partition::new(vec![1]))));
        assert_eq!(
            labels_type_i(0, 5).unwrap(),
            vec![(Partition::new(vec![]), Partition::new(vec![]))]
        );
        assert!(labels_type_i(3, 0).is_err());
        assert!(labels_type_i(3, 9).is_err());
    }

    #[test]
    fn type_ii_examples() {
        assert_eq!(show(&labels_type_ii(4, 0).unwrap()), ["(4)", "(3,1)"]);
        assert_eq!(show(&labels_type_ii(4, 3).unwrap()), ["(4)", "(3,1)"]);
        let six = show(&labels_type_ii(6, 3).unwrap());
        assert!(six.contains(&"(3,3)".to_string()));
        assert!(!six.contains(&"(2,2,2)".to_string()));
        assert_eq!(show(&labels_type_ii(0, 3).unwrap()), ["∅"]);
    }

    #[test]
    fn compositions() {
        assert_eq!(
            weight_compositions(2, 2).unwrap(),
            vec![vec![2, 0], vec![1, 1], vec![0, 2]]
        );
        assert_eq!(weight_compositions(3, 2).unwrap().len(), 6);
        assert_eq!(weight_compositions(1, 4).unwrap(), vec![vec![4]]);
        assert!(weight_compositions(0, 1).is_err());
    }
}
