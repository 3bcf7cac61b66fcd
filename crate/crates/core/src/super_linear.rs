//! ℤ₂-graded spaces and maps with Koszul signs.
//!
//! Every space keeps its basis in canonical order: all even vectors first,
//! then all odd vectors. Constructions that produce a new basis (direct sums,
//! tensor products, hom spaces) build it in a natural "raw" order and then
//! stable-sort it by parity, returning the permutation they applied.
//!
//! Signs are always computed from the parities of basis vectors; matrices
//! never carry pre-applied signs.

use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{SparseMatrix, Vector};
use crate::scalars::{Field, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(b: u8) -> Parity {
        if b & 1 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
    pub fn bit(self) -> u8 {
        self as u8
    }
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
    pub fn flip(self) -> Parity {
        self + Parity::Odd
    }
    /// `|a||b|` as a parity, i.e. whether `(-1)^{|a||b|}` is negative.
    pub fn times(self, other: Parity) -> bool {
        self.is_odd() && other.is_odd()
    }
}

impl Add for Parity {
    type Output = Parity;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.bit() ^ rhs.bit())
    }
}

impl From<Parity> for u8 {
    fn from(p: Parity) -> u8 {
        p.bit()
    }
}

impl TryFrom<u8> for Parity {
    type Error = String;
    fn try_from(b: u8) -> std::result::Result<Self, String> {
        match b {
            0 => Ok(Parity::Even),
            1 => Ok(Parity::Odd),
            _ => Err(format!("parity must be 0 or 1, got {b}")),
        }
    }
}

/// Stable even-first ordering: `result[raw] = canonical position`.
pub fn canonical_positions(parities: &[Parity]) -> Vec<usize> {
    let evens = parities.iter().filter(|p| !p.is_odd()).count();
    let (mut e, mut o) = (0, evens);
    parities
        .iter()
        .map(|p| {
            let slot = if p.is_odd() { &mut o } else { &mut e };
            *slot += 1;
            *slot - 1
        })
        .collect()
}

/// A finite dimensional superspace with an ordered homogeneous basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuperSpace {
    field: Field,
    parities: Vec<Parity>,
    labels: Vec<String>,
}

impl SuperSpace {
    /// Validates even-first order and label count.
    pub fn new(field: Field, parities: Vec<Parity>, labels: Vec<String>) -> Result<Self> {
        if parities.len() != labels.len() {
            return Err(Error::Shape(format!(
                "{} parities but {} labels",
                parities.len(),
                labels.len()
            )));
        }
        if parities.windows(2).any(|w| w[0].is_odd() && !w[1].is_odd()) {
            return Err(Error::Shape("basis must list even vectors first".into()));
        }
        Ok(SuperSpace {
            field,
            parities,
            labels,
        })
    }

    /// Re-sorts a raw basis into canonical order; returns the space and the
    /// raw-to-canonical permutation.
    pub fn from_raw(
        field: Field,
        parities: Vec<Parity>,
        labels: Vec<String>,
    ) -> (Self, Vec<usize>) {
        let pos = canonical_positions(&parities);
        let mut p = vec![Parity::Even; parities.len()];
        let mut l = vec![String::new(); labels.len()];
        for (raw, &c) in pos.iter().enumerate() {
            p[c] = parities[raw];
            l[c] = labels[raw].clone();
        }
        (
            SuperSpace {
                field,
                parities: p,
                labels: l,
            },
            pos,
        )
    }

    pub fn field(&self) -> Field {
        self.field
    }
    pub fn dim(&self) -> usize {
        self.parities.len()
    }
    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }
    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn sdim(&self) -> (usize, usize) {
        let odd = self.parities.iter().filter(|p| p.is_odd()).count();
        (self.dim() - odd, odd)
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Same field and parity sequence (labels are cosmetic).
    pub fn compatible(&self, other: &SuperSpace) -> bool {
        self.field == other.field && self.parities == other.parities
    }

    fn check_field(&self, other: &SuperSpace) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ));
        }
        Ok(())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim());
        self.labels = labels;
        self
    }
}

impl fmt::Display for SuperSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (m, n) = self.sdim();
        write!(f, "{}^{{{m}|{n}}}", self.field)
    }
}

/// `k^{m|n}` with basis `e1..em, e'1..e'n`.
pub fn make_space(field: Field, m: usize, n: usize) -> SuperSpace {
    let mut parities = vec![Parity::Even; m];
    parities.extend(std::iter::repeat_n(Parity::Odd, n));
    let mut labels: Vec<String> = (1..=m).map(|i| format!("e{i}")).collect();
    labels.extend((1..=n).map(|i| format!("e'{i}")));
    SuperSpace {
        field,
        parities,
        labels,
    }
}

/// A space with an explicit sdim and generic labels `prefix1, prefix2, …`.
pub fn graded_space(field: Field, m: usize, n: usize, prefix: &str) -> SuperSpace {
    make_space(field, m, n).with_labels((1..=m + n).map(|i| format!("{prefix}{i}")).collect())
}

/// `M ⊕ N` with its inclusions; `perm[raw]` maps the raw order (M then N)
/// into canonical positions.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub space: SuperSpace,
    pub perm: Vec<usize>,
    pub incl_left: SuperMap,
    pub incl_right: SuperMap,
}

pub fn direct_sum(m: &SuperSpace, n: &SuperSpace) -> Result<DirectSum> {
    m.check_field(n)?;
    let parities: Vec<Parity> = m.parities.iter().chain(&n.parities).copied().collect();
    let labels: Vec<String> = m
        .labels
        .iter()
        .map(|l| format!("{l}⊕0"))
        .chain(n.labels.iter().map(|l| format!("0⊕{l}")))
        .collect();
    let (space, perm) = SuperSpace::from_raw(m.field, parities, labels);
    let one = m.field.one();
    let incl_left = SuperMap::new(
        m.clone(),
        space.clone(),
        SparseMatrix::from_triples(
            m.field,
            space.dim(),
            m.dim(),
            (0..m.dim()).map(|i| (perm[i], i, one.clone())),
        ),
    )?;
    let incl_right = SuperMap::new(
        n.clone(),
        space.clone(),
        SparseMatrix::from_triples(
            m.field,
            space.dim(),
            n.dim(),
            (0..n.dim()).map(|i| (perm[m.dim() + i], i, one.clone())),
        ),
    )?;
    Ok(DirectSum {
        space,
        perm,
        incl_left,
        incl_right,
    })
}

/// A tensor product of several spaces together with the bijection between
/// multi-indices and canonical basis positions.
#[derive(Clone, Debug)]
pub struct TensorSpace {
    pub space: SuperSpace,
    pub factors: Vec<SuperSpace>,
    to_canonical: Vec<usize>,
    from_canonical: Vec<usize>,
}

impl TensorSpace {
    /// Lexicographic rank of a multi-index.
    pub fn lex_index(&self, multi: &[usize]) -> usize {
        debug_assert_eq!(multi.len(), self.factors.len());
        multi
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&i, f)| acc * f.dim() + i)
    }

    pub fn position(&self, multi: &[usize]) -> usize {
        self.to_canonical[self.lex_index(multi)]
    }

    pub fn multi_index(&self, pos: usize) -> Vec<usize> {
        let mut lex = self.from_canonical[pos];
        let mut out = vec![0; self.factors.len()];
        for (k, f) in self.factors.iter().enumerate().rev() {
            out[k] = lex % f.dim();
            lex /= f.dim();
        }
        out
    }

    /// Raw (lexicographic) to canonical permutation.
    pub fn permutation(&self) -> &[usize] {
        &self.to_canonical
    }

    pub fn order(&self) -> usize {
        self.factors.len()
    }
}

/// Iterates all multi-indices for the given factor dimensions in
/// lexicographic order.
pub fn multi_indices(dims: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let total: usize = dims.iter().product();
    (0..total).map(move |mut lex| {
        let mut out = vec![0; dims.len()];
        for k in (0..dims.len()).rev() {
            out[k] = lex % dims[k];
            lex /= dims[k];
        }
        out
    })
}

/// Tensor product of any number of spaces (the empty product is the one
/// dimensional even space).
pub fn tensor_many(field: Field, factors: &[SuperSpace]) -> Result<TensorSpace> {
    for f in factors {
        if f.field != field {
            return Err(Error::FieldMismatch(field.to_string(), f.field.to_string()));
        }
    }
    let dims: Vec<usize> = factors.iter().map(SuperSpace::dim).collect();
    let mut parities = Vec::new();
    let mut labels = Vec::new();
    for multi in multi_indices(&dims) {
        let p = multi
            .iter()
            .zip(factors)
            .fold(Parity::Even, |acc, (&i, f)| acc + f.parities[i]);
        parities.push(p);
        labels.push(if factors.is_empty() {
            "1".to_string()
        } else {
            multi
                .iter()
                .zip(factors)
                .map(|(&i, f)| f.labels[i].as_str())
                .collect::<Vec<_>>()
                .join("⊗")
        });
    }
    let (space, to_canonical) = SuperSpace::from_raw(field, parities, labels);
    let mut from_canonical = vec![0; to_canonical.len()];
    for (raw, &c) in to_canonical.iter().enumerate() {
        from_canonical[c] = raw;
    }
    Ok(TensorSpace {
        space,
        factors: factors.to_vec(),
        to_canonical,
        from_canonical,
    })
}

pub fn tensor(m: &SuperSpace, n: &SuperSpace) -> Result<TensorSpace> {
    m.check_field(n)?;
    tensor_many(m.field, &[m.clone(), n.clone()])
}

pub fn tensor_power(m: &SuperSpace, d: usize) -> TensorSpace {
    tensor_many(m.field, &vec![m.clone(); d]).expect("single field")
}

/// `ΠM`: same vectors with opposite parity, re-sorted even-first.
pub fn parity_change(m: &SuperSpace) -> (SuperSpace, Vec<usize>) {
    SuperSpace::from_raw(
        m.field,
        m.parities.iter().map(|p| p.flip()).collect(),
        m.labels.clone(),
    )
}

/// `M^∨` with the dual basis; parities are preserved so the order stays
/// canonical.
pub fn dual_space(m: &SuperSpace) -> SuperSpace {
    SuperSpace {
        field: m.field,
        parities: m.parities.clone(),
        labels: m.labels.iter().map(|l| format!("{l}^∨")).collect(),
    }
}

/// `⟨f, v⟩` for coordinate vectors of `f ∈ M^∨` and `v ∈ M`.
pub fn pair(f: &[Scalar], v: &[Scalar]) -> Scalar {
    assert_eq!(f.len(), v.len());
    let field = f.first().map(Scalar::field).unwrap_or(Field::rationals());
    f.iter()
        .zip(v)
        .fold(field.zero(), |acc, (a, b)| acc + a * b)
}

/// `⟨v, f⟩ = (-1)^{|v||f|}⟨f, v⟩`, the pairing that identifies `M` with its
/// double dual, extended bilinearly over homogeneous components.
pub fn pair_reversed(m: &SuperSpace, v: &[Scalar], f: &[Scalar]) -> Scalar {
    let field = m.field;
    (0..m.dim()).fold(field.zero(), |acc, i| {
        let t = &v[i] * &f[i];
        if m.parity(i).is_odd() {
            acc - t
        } else {
            acc + t
        }
    })
}

/// The even isomorphism `M → (M^∨)^∨`, `v ↦ ⟨v, -⟩`.
pub fn double_dual_identification(m: &SuperSpace) -> SuperMap {
    let dd = dual_space(&dual_space(m));
    let field = m.field;
    SuperMap::new(
        m.clone(),
        dd,
        SparseMatrix::from_triples(
            field,
            m.dim(),
            m.dim(),
            (0..m.dim()).map(|i| (i, i, field.sign(m.parity(i).is_odd()))),
        ),
    )
    .expect("square")
}

/// `Hom(M, N)` with basis the matrix units `E_{ts}`.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub space: SuperSpace,
    pub source: SuperSpace,
    pub target: SuperSpace,
    /// raw index `t * dim M + s` to canonical position
    perm: Vec<usize>,
}

impl HomSpace {
    pub fn position(&self, t: usize, s: usize) -> usize {
        self.perm[t * self.source.dim() + s]
    }

    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    pub fn to_vector(&self, f: &SuperMap) -> Vector {
        assert!(f.source.compatible(&self.source) && f.target.compatible(&self.target));
        let mut v = crate::linalg::zero_vector(self.space.field, self.space.dim());
        for (t, s, x) in f.matrix.triples() {
            v[self.position(t, s)] = x.clone();
        }
        v
    }

    pub fn to_map(&self, v: &[Scalar]) -> SuperMap {
        let field = self.space.field;
        let ds = self.source.dim();
        let triples = (0..self.target.dim()).flat_map(|t| {
            (0..ds).filter_map(move |s| {
                let x = &v[self.position(t, s)];
                (!x.is_zero()).then(|| (t, s, x.clone()))
            })
        });
        SuperMap::new(
            self.source.clone(),
            self.target.clone(),
            SparseMatrix::from_triples(field, self.target.dim(), ds, triples),
        )
        .expect("shape")
    }
}

pub fn hom_space(m: &SuperSpace, n: &SuperSpace) -> Result<HomSpace> {
    m.check_field(n)?;
    let mut parities = Vec::with_capacity(m.dim() * n.dim());
    let mut labels = Vec::with_capacity(m.dim() * n.dim());
    for t in 0..n.dim() {
        for s in 0..m.dim() {
            parities.push(n.parity(t) + m.parity(s));
            labels.push(format!("E[{},{}]", n.label(t), m.label(s)));
        }
    }
    let (space, perm) = SuperSpace::from_raw(m.field, parities, labels);
    Ok(HomSpace {
        space,
        source: m.clone(),
        target: n.clone(),
        perm,
    })
}

/// A linear map between superspaces; columns are indexed by the source basis.
/// The map need not be homogeneous.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperMap {
    pub source: SuperSpace,
    pub target: SuperSpace,
    pub matrix: SparseMatrix,
}

impl SuperMap {
    pub fn new(source: SuperSpace, target: SuperSpace, matrix: SparseMatrix) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::Shape(format!(
                "matrix {}x{} for map {} -> {}",
                matrix.rows(),
                matrix.cols(),
                source.dim(),
                target.dim()
            )));
        }
        if matrix.field() != source.field || source.field != target.field {
            return Err(Error::FieldMismatch(
                source.field.to_string(),
                target.field.to_string(),
            ));
        }
        Ok(SuperMap {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(m: &SuperSpace) -> Self {
        SuperMap {
            source: m.clone(),
            target: m.clone(),
            matrix: SparseMatrix::identity(m.field, m.dim()),
        }
    }

    pub fn zero(m: &SuperSpace, n: &SuperSpace) -> Self {
        SuperMap {
            source: m.clone(),
            target: n.clone(),
            matrix: SparseMatrix::zeros(m.field, n.dim(), m.dim()),
        }
    }

    /// Matrix unit `E_{ts}`.
    pub fn unit(m: &SuperSpace, n: &SuperSpace, t: usize, s: usize) -> Self {
        let field = m.field;
        SuperMap {
            source: m.clone(),
            target: n.clone(),
            matrix: SparseMatrix::from_triples(field, n.dim(), m.dim(), [(t, s, field.one())]),
        }
    }

    pub fn field(&self) -> Field {
        self.source.field
    }

    /// Parity of the matrix entry at `(t, s)`.
    pub fn entry_parity(&self, t: usize, s: usize) -> Parity {
        self.target.parity(t) + self.source.parity(s)
    }

    pub fn part(&self, p: Parity) -> SuperMap {
        SuperMap {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self
                .matrix
                .map_entries(|t, s, v| (self.entry_parity(t, s) == p).then(|| v.clone())),
        }
    }

    pub fn even_part(&self) -> SuperMap {
        self.part(Parity::Even)
    }

    pub fn odd_part(&self) -> SuperMap {
        self.part(Parity::Odd)
    }

    /// Degree of a homogeneous map; zero counts as even, mixed maps give `None`.
    pub fn parity(&self) -> Option<Parity> {
        let mut seen: Option<Parity> = None;
        for (t, s, _) in self.matrix.triples() {
            let p = self.entry_parity(t, s);
            match seen {
                None => seen = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        Some(seen.unwrap_or(Parity::Even))
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn add(&self, other: &SuperMap) -> Result<SuperMap> {
        self.check_same_spaces(other)?;
        Ok(SuperMap {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.add(&other.matrix),
        })
    }

    pub fn sub(&self, other: &SuperMap) -> Result<SuperMap> {
        self.check_same_spaces(other)?;
        Ok(SuperMap {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.sub(&other.matrix),
        })
    }

    pub fn scale(&self, c: &Scalar) -> SuperMap {
        SuperMap {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.scale(c),
        }
    }

    fn check_same_spaces(&self, other: &SuperMap) -> Result<()> {
        if !self.source.compatible(&other.source) || !self.target.compatible(&other.target) {
            return Err(Error::Shape("maps between different spaces".into()));
        }
        Ok(())
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        self.matrix.apply(v)
    }
}

/// `g ∘ f`.
pub fn compose(g: &SuperMap, f: &SuperMap) -> Result<SuperMap> {
    if !f.target.compatible(&g.source) {
        return Err(Error::Shape(format!(
            "cannot compose: {} -> {} then {} -> {}",
            f.source, f.target, g.source, g.target
        )));
    }
    Ok(SuperMap {
        source: f.source.clone(),
        target: g.target.clone(),
        matrix: g.matrix.mul(&f.matrix),
    })
}

/// `f ⊠ g` on `M ⊗ M'`, with `(f⊠g)(v⊗w) = (-1)^{|g||v|} f v ⊗ g w`.
pub fn boxtimes(f: &SuperMap, g: &SuperMap) -> Result<SuperMap> {
    boxtimes_many(&[f.clone(), g.clone()])
}

/// `f₁ ⊠ … ⊠ f_d`; on a basis tensor `v₁⊗…⊗v_d` the sign is
/// `(-1)^{Σ_{i<j} |f_j||v_i|}`, taken per homogeneous component.
pub fn boxtimes_many(maps: &[SuperMap]) -> Result<SuperMap> {
    let field = match maps.first() {
        Some(f) => f.field(),
        None => {
            let one = tensor_many(Field::rationals(), &[])?.space;
            return Ok(SuperMap::identity(&one));
        }
    };
    let sources: Vec<SuperSpace> = maps.iter().map(|f| f.source.clone()).collect();
    let targets: Vec<SuperSpace> = maps.iter().map(|f| f.target.clone()).collect();
    let src = tensor_many(field, &sources)?;
    let tgt = tensor_many(field, &targets)?;
    let dims: Vec<usize> = sources.iter().map(SuperSpace::dim).collect();
    let mut triples = Vec::new();
    for multi in multi_indices(&dims) {
        let cols: Vec<&[(usize, Scalar)]> = multi
            .iter()
            .zip(maps)
            .map(|(&s, f)| f.matrix.column(s))
            .collect();
        if cols.iter().any(|c| c.is_empty()) {
            continue;
        }
        let col = src.position(&multi);
        // odometer over the entries chosen in each column
        let mut choice = vec![0usize; maps.len()];
        'outer: loop {
            let mut val = field.one();
            let mut negative = false;
            let mut odd_prefix = Parity::Even;
            let mut trow = Vec::with_capacity(maps.len());
            for (k, f) in maps.iter().enumerate() {
                let (t, x) = &cols[k][choice[k]];
                let p = f.entry_parity(*t, multi[k]);
                negative ^= p.times(odd_prefix);
                odd_prefix = odd_prefix + f.source.parity(multi[k]);
                val *= x;
                trow.push(*t);
            }
            if negative {
                val.negate();
            }
            triples.push((tgt.position(&trow), col, val));
            for k in (0..maps.len()).rev() {
                choice[k] += 1;
                if choice[k] < cols[k].len() {
                    continue 'outer;
                }
                choice[k] = 0;
            }
            break;
        }
    }
    SuperMap::new(
        src.space.clone(),
        tgt.space.clone(),
        SparseMatrix::from_triples(field, tgt.space.dim(), src.space.dim(), triples),
    )
}

/// `f^∨ : N^∨ → M^∨` with `⟨f^∨(φ), v⟩ = (-1)^{|f||φ|}⟨φ, f(v)⟩`.
pub fn dual_map(f: &SuperMap) -> SuperMap {
    // entry (k, j) of f has parity |k|+|j|; it lands at (j, k) with sign
    // (-1)^{(|k|+|j|)|k|}
    let matrix = SparseMatrix::from_triples(
        f.field(),
        f.source.dim(),
        f.target.dim(),
        f.matrix.triples().map(|(k, j, v)| {
            let neg = f.entry_parity(k, j).times(f.target.parity(k));
            (j, k, if neg { -v } else { v.clone() })
        }),
    );
    SuperMap {
        source: dual_space(&f.target),
        target: dual_space(&f.source),
        matrix,
    }
}

/// `f^-(v) = (-1)^{|f||v|} f(v)`.
pub fn minus_twist(f: &SuperMap) -> SuperMap {
    SuperMap {
        source: f.source.clone(),
        target: f.target.clone(),
        matrix: f.matrix.map_entries(|t, s, v| {
            Some(if f.entry_parity(t, s).times(f.source.parity(s)) {
                -v
            } else {
                v.clone()
            })
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rationals()
    }

    #[test]
    fn make_space_examples() {
        assert_eq!(make_space(q(), 1, 1).sdim(), (1, 1));
        assert_eq!(make_space(Field::gf(3), 0, 0).dim(), 0);
        let s = make_space(q(), 2, 3);
        assert_eq!((s.sdim(), s.dim()), ((2, 3), 5));
    }

    #[test]
    fn new_rejects_odd_before_even() {
        let r = SuperSpace::new(
            q(),
            vec![Parity::Odd, Parity::Even],
            vec!["a".into(), "b".into()],
        );
        assert!(r.is_err());
    }

    #[test]
    fn direct_sum_examples() {
        let a = make_space(q(), 1, 0);
        let b = make_space(q(), 0, 1);
        assert_eq!(direct_sum(&a, &b).unwrap().space.sdim(), (1, 1));
        let u = make_space(q(), 1, 1);
        let s = direct_sum(&u, &u).unwrap();
        assert_eq!(s.space.sdim(), (2, 2));
        // raw order e1, e'1, e1, e'1 -> e1, e1, e'1, e'1
        assert_eq!(s.perm, vec![0, 2, 1, 3]);
        let z = make_space(q(), 0, 0);
        let s = direct_sum(&make_space(q(), 2, 1), &z).unwrap();
        assert_eq!(s.perm, vec![0, 1, 2]);
        assert!(direct_sum(&a, &make_space(Field::gf(3), 1, 0)).is_err());
    }

    #[test]
    fn tensor_examples() {
        let u = make_space(q(), 1, 1);
        assert_eq!(tensor(&u, &u).unwrap().space.sdim(), (2, 2));
        let o = make_space(q(), 0, 1);
        assert_eq!(tensor(&o, &o).unwrap().space.sdim(), (1, 0));
        let m = make_space(q(), 2, 3);
        let t = tensor(&m, &make_space(q(), 1, 0)).unwrap();
        assert_eq!(t.space.parities(), m.parities());
        for pos in 0..t.space.dim() {
            assert_eq!(t.position(&t.multi_index(pos)), pos);
        }
    }

    #[test]
    fn parity_change_examples() {
        let m = make_space(q(), 2, 3);
        assert_eq!(parity_change(&m).0.sdim(), (3, 2));
        assert_eq!(parity_change(&parity_change(&m).0).0, m);
        assert_eq!(parity_change(&make_space(q(), 0, 0)).0.dim(), 0);
    }

    #[test]
    fn dual_pairing_signs() {
        let m = make_space(q(), 0, 1);
        let v = vec![q().one()];
        let f = vec![q().one()];
        assert_eq!(pair(&f, &v), q().one());
        assert_eq!(pair_reversed(&m, &v, &f), q().from_i64(-1));
        assert_eq!(dual_space(&make_space(q(), 1, 2)).sdim(), (1, 2));
        assert_eq!(dual_space(&make_space(q(), 0, 0)).dim(), 0);
    }

    #[test]
    fn hom_space_examples() {
        let u = make_space(q(), 1, 1);
        assert_eq!(hom_space(&u, &u).unwrap().space.sdim(), (2, 2));
        let m = make_space(q(), 2, 3);
        let h = hom_space(&m, &make_space(q(), 1, 0)).unwrap();
        assert_eq!(h.space.parities(), dual_space(&m).parities());
        let h = hom_space(&make_space(q(), 1, 0), &make_space(q(), 0, 1)).unwrap();
        assert_eq!(h.space.sdim(), (0, 1));
        for (m, n) in [((1, 2), (2, 1)), ((2, 2), (0, 3)), ((3, 0), (1, 1))] {
            let a = make_space(q(), m.0, m.1);
            let b = make_space(q(), n.0, n.1);
            let h = hom_space(&a, &b).unwrap();
            assert_eq!(
                h.space.sdim(),
                (m.0 * n.0 + m.1 * n.1, m.0 * n.1 + m.1 * n.0)
            );
            let f = SuperMap::unit(&a, &b, 0, a.dim() - 1);
            assert_eq!(h.to_map(&h.to_vector(&f)), f);
        }
    }

    #[test]
    fn compose_examples() {
        let m = make_space(q(), 3, 0);
        let e32 = SuperMap::unit(&m, &m, 2, 1);
        let e21 = SuperMap::unit(&m, &m, 1, 0);
        assert_eq!(compose(&e32, &e21).unwrap(), SuperMap::unit(&m, &m, 2, 0));
        assert_eq!(compose(&e32, &SuperMap::identity(&m)).unwrap(), e32);
        let u = make_space(q(), 1, 1);
        let odd = SuperMap::unit(&u, &u, 1, 0)
            .add(&SuperMap::unit(&u, &u, 0, 1))
            .unwrap();
        assert_eq!(odd.parity(), Some(Parity::Odd));
        assert_eq!(compose(&odd, &odd).unwrap().parity(), Some(Parity::Even));
        assert!(compose(&e32, &SuperMap::identity(&u)).is_err());
    }

    #[test]
    fn boxtimes_odd_odd_sign() {
        let o = make_space(q(), 0, 1);
        let f = SuperMap::identity(&o);
        // identity on an odd line is even; build odd maps k^{0|1} -> k^{1|0}
        let e = make_space(q(), 1, 0);
        let g = SuperMap::unit(&o, &e, 0, 0);
        assert_eq!(g.parity(), Some(Parity::Odd));
        let h = boxtimes(&g, &g).unwrap();
        // (g⊠g)(v⊗v) = (-1)^{|g||v|} g v ⊗ g v = -(e⊗e)
        assert_eq!(h.matrix.get(0, 0), q().from_i64(-1));
        assert_eq!(
            boxtimes(&f, &f).unwrap(),
            SuperMap::identity(&tensor(&o, &o).unwrap().space)
        );
    }

    #[test]
    fn boxtimes_three_odd_maps() {
        let o = make_space(q(), 0, 1);
        let e = make_space(q(), 1, 0);
        let g = SuperMap::unit(&o, &e, 0, 0);
        let h = boxtimes_many(&[g.clone(), g.clone(), g]).unwrap();
        // exponent 0 + 1 + 2 (pairs i<j with v_i odd, f_j odd: (1,2),(1,3),(2,3)) = 3
        assert_eq!(h.matrix.get(0, 0), q().from_i64(-1));
    }

    #[test]
    fn boxtimes_empty_is_scalar_identity() {
        let h = boxtimes_many(&[]).unwrap();
        assert_eq!(h.source.dim(), 1);
        assert!(h.matrix.get(0, 0).is_one());
    }

    #[test]
    fn dual_map_examples() {
        let u = make_space(q(), 1, 1);
        let id = SuperMap::identity(&u);
        assert_eq!(dual_map(&id).matrix, id.matrix);
        // odd φ = E_{e,e'}; f = dual of e (even), ⟨φ^∨ f, e'⟩ = (-1)^{|φ||f|}⟨f, φ e'⟩ = 1
        let phi = SuperMap::unit(&u, &u, 0, 1);
        let d = dual_map(&phi);
        assert_eq!(d.matrix.get(1, 0), q().one());
        // odd φ = E_{e',e}, odd f = e'^∨: ⟨φ^∨ f, e⟩ = -⟨f, φ e⟩ = -1
        let phi = SuperMap::unit(&u, &u, 1, 0);
        assert_eq!(dual_map(&phi).matrix.get(0, 1), q().from_i64(-1));
    }

    #[test]
    fn minus_twist_examples() {
        let u = make_space(q(), 1, 1);
        let even = SuperMap::unit(&u, &u, 1, 1);
        assert_eq!(minus_twist(&even), even);
        let a = SuperMap::unit(&u, &u, 1, 0); // E_{e'e}, acts on even e
        assert_eq!(minus_twist(&a), a);
        let b = SuperMap::unit(&u, &u, 0, 1); // E_{ee'}
        assert_eq!(minus_twist(&b), b.scale(&q().from_i64(-1)));
    }

    #[test]
    fn double_dual_identification_signs() {
        let m = make_space(q(), 1, 1);
        let d = double_dual_identification(&m);
        assert!(d.matrix.get(0, 0).is_one());
        assert_eq!(d.matrix.get(1, 1), q().from_i64(-1));
    }
}
