//! The signed right action of the symmetric group on tensor powers, divided
//! powers `Γ^d M = (M^{⊗d})^{S_d}` and symmetric powers `S^d M = (M^{⊗d})_{S_d}`.
//!
//! Divided powers are computed twice: as the common kernel of `s_i - 1` and
//! as explicit orbit sums over coset representatives (no division by
//! stabiliser orders, so the construction is valid in characteristic p).
//! [`gamma_invariants`] refuses to return unless the two agree.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{common_kernel, zero_vector, Matrix, Span, SparseMatrix, Vector};
use crate::perm::{binomial, multichoose, Permutation};
use crate::scalars::{Field, Scalar};
use crate::super_linear::{direct_sum, tensor_power, Parity, SuperMap, SuperSpace, TensorSpace};

/// `M^{⊗d}` with its multi-index bookkeeping.
#[derive(Clone, Debug)]
pub struct TensorPower {
    pub base: SuperSpace,
    pub d: usize,
    pub tensor: TensorSpace,
}

impl TensorPower {
    pub fn new(base: &SuperSpace, d: usize) -> Self {
        TensorPower {
            base: base.clone(),
            d,
            tensor: tensor_power(base, d),
        }
    }

    pub fn space(&self) -> &SuperSpace {
        &self.tensor.space
    }

    pub fn dim(&self) -> usize {
        self.tensor.space.dim()
    }

    pub fn field(&self) -> Field {
        self.base.field()
    }

    pub fn position(&self, multi: &[usize]) -> usize {
        self.tensor.position(multi)
    }

    pub fn multi_index(&self, pos: usize) -> Vec<usize> {
        self.tensor.multi_index(pos)
    }

    /// `(e_{k₁}⊗…⊗e_{k_d}).σ = sign · e_{k_{σ(1)}}⊗…⊗e_{k_{σ(d)}}`; returns the
    /// new multi-index and whether the Koszul sign is negative.
    pub fn act_on_index(&self, multi: &[usize], sigma: &Permutation) -> (Vec<usize>, bool) {
        place_permutation(multi, |k| self.base.parity(k), sigma)
    }

    /// `v.σ` for a coordinate vector.
    pub fn act(&self, v: &[Scalar], sigma: &Permutation) -> Vector {
        let mut out = zero_vector(self.field(), self.dim());
        for (pos, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let (img, neg) = self.act_on_index(&self.multi_index(pos), sigma);
            let q = self.position(&img);
            if neg {
                out[q] -= x;
            } else {
                out[q] += x;
            }
        }
        out
    }

    /// Matrix of `v ↦ v.σ` computed directly from the Koszul rule.
    pub fn action_matrix(&self, sigma: &Permutation) -> SparseMatrix {
        let field = self.field();
        SparseMatrix::from_triples(
            field,
            self.dim(),
            self.dim(),
            (0..self.dim()).map(|pos| {
                let (img, neg) = self.act_on_index(&self.multi_index(pos), sigma);
                (self.position(&img), pos, field.sign(neg))
            }),
        )
    }

    /// Basis tensor with the given multi-index as a coordinate vector.
    pub fn basis_vector(&self, multi: &[usize]) -> Vector {
        let mut v = zero_vector(self.field(), self.dim());
        v[self.position(multi)] = self.field().one();
        v
    }
}

/// Signed place permutation of a multi-index:
/// `(x₁⊗…⊗x_d).σ = ±x_{σ(1)}⊗…⊗x_{σ(d)}`, the sign counting inversions of
/// `σ` among odd factors. Returns the permuted indices and whether the sign
/// is negative.
pub fn place_permutation(
    multi: &[usize],
    parity: impl Fn(usize) -> Parity,
    sigma: &Permutation,
) -> (Vec<usize>, bool) {
    let img: Vec<usize> = sigma.images().iter().map(|&j| multi[j]).collect();
    let odd: Vec<bool> = img.iter().map(|&k| parity(k).is_odd()).collect();
    let d = img.len();
    let mut negative = false;
    for a in 0..d {
        for b in a + 1..d {
            if odd[a] && odd[b] && sigma.apply(a) > sigma.apply(b) {
                negative = !negative;
            }
        }
    }
    (img, negative)
}

/// Action of the simple transposition `s_i = (i i+1)` on `M^{⊗d}`, `1 ≤ i ≤ d-1`.
pub fn transposition_action(m: &SuperSpace, d: usize, i: usize) -> Result<SuperMap> {
    if i == 0 || i >= d {
        return Err(Error::OutOfRange(format!("s_{i} in S_{d}")));
    }
    let tp = TensorPower::new(m, d);
    let mat = tp.action_matrix(&Permutation::simple(d, i - 1));
    SuperMap::new(tp.space().clone(), tp.space().clone(), mat)
}

/// Action of `σ` obtained by multiplying transposition actions along the
/// given word (0-based letters); `v.(s_a s_b) = (v.s_a).s_b`.
pub fn action_along_word(tp: &TensorPower, word: &[usize]) -> SparseMatrix {
    let field = tp.field();
    word.iter()
        .fold(SparseMatrix::identity(field, tp.dim()), |acc, &i| {
            tp.action_matrix(&Permutation::simple(tp.d, i)).mul(&acc)
        })
}

/// Action of `σ ∈ S_d` on `M^{⊗d}` as a product of transposition actions
/// along the bubble-sort reduced word of `σ`.
pub fn permutation_action(m: &SuperSpace, d: usize, sigma: &Permutation) -> Result<SuperMap> {
    if sigma.degree() != d {
        return Err(Error::Shape(format!(
            "permutation of degree {} on d={d}",
            sigma.degree()
        )));
    }
    let tp = TensorPower::new(m, d);
    let mat = action_along_word(&tp, &sigma.reduced_word());
    SuperMap::new(tp.space().clone(), tp.space().clone(), mat)
}

/// Label of a divided-power basis vector: distinct even indices with
/// multiplicities, and a strictly increasing list of odd indices. Indices are
/// 1-based within their parity block.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GammaLabel {
    pub even: Vec<(usize, usize)>,
    pub odd: Vec<usize>,
}

impl GammaLabel {
    pub fn degree(&self) -> usize {
        self.even.iter().map(|(_, k)| k).sum::<usize>() + self.odd.len()
    }

    pub fn parity(&self) -> Parity {
        Parity::from_bit((self.odd.len() % 2) as u8)
    }

    /// The sorted multi-index (positions in the base space with `m` even
    /// vectors) that the label symmetrises.
    pub fn multi_index(&self, m: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.degree());
        for &(i, k) in &self.even {
            out.extend(std::iter::repeat_n(i - 1, k));
        }
        out.extend(self.odd.iter().map(|&j| m + j - 1));
        out
    }

    /// Inverse of [`GammaLabel::multi_index`] on sorted indices; `None` if an
    /// odd index repeats.
    pub fn from_sorted(multi: &[usize], m: usize) -> Option<GammaLabel> {
        let mut even: Vec<(usize, usize)> = Vec::new();
        let mut odd = Vec::new();
        for &k in multi {
            if k < m {
                match even.last_mut() {
                    Some((i, c)) if *i == k + 1 => *c += 1,
                    _ => even.push((k + 1, 1)),
                }
            } else {
                let j = k - m + 1;
                if odd.last() == Some(&j) {
                    return None;
                }
                odd.push(j);
            }
        }
        Some(GammaLabel { even, odd })
    }
}

impl fmt::Display for GammaLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (n, (i, k)) in self.even.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            if *k == 1 {
                write!(f, "e{i}")?;
            } else {
                write!(f, "e{i}^{k}")?;
            }
        }
        write!(f, ")(")?;
        for (n, j) in self.odd.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "e'{j}")?;
        }
        write!(f, ")")
    }
}

fn multisets(m: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k == 0 {
        out.push(cur.clone());
        return;
    }
    for i in start..m {
        cur.push(i);
        multisets(m, k - 1, i, cur, out);
        cur.pop();
    }
}

fn subsets(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k == 0 {
        out.push(cur.clone());
        return;
    }
    for j in start..n {
        cur.push(j);
        subsets(n, k - 1, j + 1, cur, out);
        cur.pop();
    }
}

/// All labels for `sdim M = (m, n)` in degree `d`, even labels first; within
/// each parity, larger even part first, then lexicographic.
pub fn gamma_labels(m: usize, n: usize, d: usize) -> Vec<GammaLabel> {
    let mut out = Vec::new();
    for k in (0..=d).rev() {
        let l = d - k;
        let mut evens = Vec::new();
        multisets(m, k, 0, &mut Vec::new(), &mut evens);
        let mut odds = Vec::new();
        subsets(n, l, 0, &mut Vec::new(), &mut odds);
        for e in &evens {
            for o in &odds {
                let mut multi = e.clone();
                multi.extend(o.iter().map(|j| m + j));
                out.push(GammaLabel::from_sorted(&multi, m).expect("distinct odd indices"));
            }
        }
    }
    out.sort_by_key(|l| l.parity());
    out
}

/// `dim Γ^d M = Σ_{k+l=d} C(m+k-1, k)·C(n, l)` for `sdim M = (m, n)`.
pub fn gamma_dimension(m: usize, n: usize, d: usize) -> usize {
    (0..=d)
        .map(|k| multichoose(m, k) * binomial(n, d - k))
        .sum()
}

/// Graded version of [`gamma_dimension`]: `(even, odd)`.
pub fn gamma_sdim(m: usize, n: usize, d: usize) -> (usize, usize) {
    let (mut e, mut o) = (0, 0);
    for k in 0..=d {
        let c = multichoose(m, k) * binomial(n, d - k);
        if (d - k).is_multiple_of(2) {
            e += c;
        } else {
            o += c;
        }
    }
    (e, o)
}

/// One representative per right coset `H\S_d`, where `H` is the Young
/// subgroup permuting positions with equal `blocks` value. The
/// representative listed is the lexicographically first.
pub fn young_coset_representatives(blocks: &[usize]) -> Vec<Permutation> {
    let d = blocks.len();
    let mut seen = std::collections::HashSet::new();
    Permutation::all(d)
        .into_iter()
        .filter(|s| seen.insert(s.images().iter().map(|&j| blocks[j]).collect::<Vec<_>>()))
        .collect()
}

/// `Σ_{Hσ} w.σ` over right cosets of the Young subgroup `H` described by
/// `blocks`; `w` must be `H`-invariant for the result to be `S_d`-invariant.
pub fn coset_sum(tp: &TensorPower, w: &[Scalar], blocks: &[usize]) -> Vector {
    let mut out = zero_vector(tp.field(), tp.dim());
    for sigma in young_coset_representatives(blocks) {
        let x = tp.act(w, &sigma);
        for (o, v) in out.iter_mut().zip(&x) {
            if !v.is_zero() {
                *o += v;
            }
        }
    }
    out
}

/// Orbit-sum vector for a label: the basis tensor of the sorted multi-index,
/// summed over coset representatives of its stabiliser (equal even indices).
pub fn orbit_sum_vector(tp: &TensorPower, label: &GammaLabel) -> Vector {
    let (m, _) = tp.base.sdim();
    let multi = label.multi_index(m);
    // equal even indices share a block; every odd slot is its own block
    let blocks: Vec<usize> = multi
        .iter()
        .enumerate()
        .map(|(pos, &k)| if k < m { k } else { m + pos })
        .collect();
    coset_sum(tp, &tp.basis_vector(&multi), &blocks)
}

/// A basis of `Γ^d M` inside `M^{⊗d}`.
#[derive(Clone, Debug)]
pub struct GammaBasis {
    pub power: TensorPower,
    pub labels: Vec<GammaLabel>,
    /// orbit-sum vectors, one per label, in `M^{⊗d}` coordinates
    pub vectors: Vec<Vector>,
    /// kernel basis from the `s_i - 1` equations
    pub kernel: Vec<Vector>,
    span: Span,
}

impl GammaBasis {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// `Γ^d M` as a superspace, labels in the same order as `vectors`.
    pub fn space(&self) -> SuperSpace {
        SuperSpace::new(
            self.power.field(),
            self.labels.iter().map(GammaLabel::parity).collect(),
            self.labels.iter().map(ToString::to_string).collect(),
        )
        .expect("labels are even-first")
    }

    /// Coordinates of an invariant vector in the orbit-sum basis.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vector> {
        self.span.coords(v)
    }

    pub fn span(&self) -> &Span {
        &self.span
    }

    /// The embedding `Γ^d M → M^{⊗d}` as a map.
    pub fn embedding(&self) -> SuperMap {
        let field = self.power.field();
        SuperMap::new(
            self.space(),
            self.power.space().clone(),
            SparseMatrix::from_columns(field, self.power.dim(), &self.vectors),
        )
        .expect("shape")
    }
}

/// Divided powers of `M`, computed by the orbit-sum construction and certified
/// against the kernel of the `s_i - 1`.
pub fn gamma_invariants(m: &SuperSpace, d: usize) -> Result<GammaBasis> {
    let field = m.field();
    let tp = TensorPower::new(m, d);
    let (em, on) = m.sdim();
    let labels = gamma_labels(em, on, d);
    let vectors: Vec<Vector> = labels.iter().map(|l| orbit_sum_vector(&tp, l)).collect();
    let ops: Vec<SparseMatrix> = (0..d.saturating_sub(1))
        .map(|i| {
            tp.action_matrix(&Permutation::simple(d, i))
                .sub(&SparseMatrix::identity(field, tp.dim()))
        })
        .collect();
    let kernel = common_kernel(field, tp.dim(), &ops);
    let span = Span::from_vectors(field, tp.dim(), &vectors);
    let kspan = Span::from_vectors(field, tp.dim(), &kernel);
    if span.dim() != vectors.len() {
        return Err(Error::Audit(format!(
            "orbit sums dependent: rank {} of {}",
            span.dim(),
            vectors.len()
        )));
    }
    if !span.same_subspace(&kspan) {
        return Err(Error::Audit(format!(
            "orbit sums (dim {}) and invariant kernel (dim {}) differ",
            span.dim(),
            kspan.dim()
        )));
    }
    Ok(GammaBasis {
        power: tp,
        labels,
        vectors,
        kernel,
        span,
    })
}

/// `S^d M` with the monomial section (sorted multi-indices) and the quotient
/// map from `M^{⊗d}`.
#[derive(Clone, Debug)]
pub struct SymmetricPower {
    pub power: TensorPower,
    pub labels: Vec<GammaLabel>,
    /// `dim S^d M × dim M^{⊗d}`
    pub quotient: SparseMatrix,
    /// positions in `M^{⊗d}` of the chosen representatives
    pub section: Vec<usize>,
}

impl SymmetricPower {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn space(&self) -> SuperSpace {
        SuperSpace::new(
            self.power.field(),
            self.labels.iter().map(GammaLabel::parity).collect(),
            self.labels.iter().map(|l| format!("[{l}]")).collect(),
        )
        .expect("labels are even-first")
    }

    /// Class of a basis tensor: `(label position, negative sign)`, or `None`
    /// if it vanishes (a repeated odd vector).
    pub fn class_of(&self, multi: &[usize]) -> Option<(usize, bool)> {
        let (m, _) = self.power.base.sdim();
        let mut order: Vec<usize> = (0..multi.len()).collect();
        order.sort_by_key(|&j| multi[j]);
        let sigma = Permutation::from_images(order).expect("permutation");
        let (sorted, neg) = self.power.act_on_index(multi, &sigma);
        let label = GammaLabel::from_sorted(&sorted, m)?;
        let pos = self.labels.iter().position(|l| *l == label)?;
        Some((pos, neg))
    }
}

/// Symmetric power `S^d M = (M^{⊗d})_{S_d}`; the quotient map is checked to
/// kill every `x - x.s_i` and to have exactly that kernel.
pub fn symmetric_power(m: &SuperSpace, d: usize) -> Result<SymmetricPower> {
    let field = m.field();
    let tp = TensorPower::new(m, d);
    let (em, on) = m.sdim();
    let labels = gamma_labels(em, on, d);
    let index: HashMap<GammaLabel, usize> = labels
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, l)| (l, i))
        .collect();
    let section: Vec<usize> = labels
        .iter()
        .map(|l| tp.position(&l.multi_index(em)))
        .collect();
    let mut sp = SymmetricPower {
        power: tp.clone(),
        labels,
        quotient: SparseMatrix::zeros(field, 0, 0),
        section,
    };
    let mut triples = Vec::new();
    for pos in 0..tp.dim() {
        let multi = tp.multi_index(pos);
        let mut order: Vec<usize> = (0..d).collect();
        order.sort_by_key(|&j| multi[j]);
        let sigma = Permutation::from_images(order).expect("permutation");
        let (sorted, neg) = tp.act_on_index(&multi, &sigma);
        if let Some(label) = GammaLabel::from_sorted(&sorted, em) {
            triples.push((index[&label], pos, field.sign(neg)));
        }
    }
    sp.quotient = SparseMatrix::from_triples(field, sp.labels.len(), tp.dim(), triples);
    // relations x - x.s_i span the kernel of the quotient
    let mut rel = Span::new(field, tp.dim());
    for i in 0..d.saturating_sub(1) {
        let a = tp
            .action_matrix(&Permutation::simple(d, i))
            .sub(&SparseMatrix::identity(field, tp.dim()));
        if !sp.quotient.mul(&a).is_zero() {
            return Err(Error::Audit(format!(
                "quotient does not kill x - x.s_{}",
                i + 1
            )));
        }
        for c in 0..tp.dim() {
            let mut col = zero_vector(field, tp.dim());
            for (r, v) in a.column(c) {
                col[*r] = v.clone();
            }
            rel.push(&col);
        }
    }
    if tp.dim() - rel.dim() != sp.labels.len() {
        return Err(Error::Audit(format!(
            "coinvariants have dim {} but {} monomials",
            tp.dim() - rel.dim(),
            sp.labels.len()
        )));
    }
    Ok(sp)
}

/// Juxtaposition `M^{⊗a} ⊗ M^{⊗b} → M^{⊗(a+b)}` of coordinate vectors.
pub fn juxtapose(
    left: &TensorPower,
    x: &[Scalar],
    right: &TensorPower,
    y: &[Scalar],
    out: &TensorPower,
) -> Vector {
    let mut v = zero_vector(out.field(), out.dim());
    for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
        let mi = left.multi_index(i);
        for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
            let mut multi = mi.clone();
            multi.extend(right.multi_index(j));
            v[out.position(&multi)] += &(a * b);
        }
    }
    v
}

/// The isomorphism `⊕_i Γ^{d-i}M ⊗ Γ^i N → Γ^d(M ⊕ N)` given by shuffle
/// products.
#[derive(Clone, Debug)]
pub struct ExponentialDecomposition {
    /// `(i, dim Γ^{d-i}M, dim Γ^i N)`
    pub blocks: Vec<(usize, usize, usize)>,
    pub total_dim: usize,
    /// columns: images of the product basis, in orbit-sum coordinates of
    /// `Γ^d(M⊕N)`
    pub change_of_basis: Matrix,
    pub invertible: bool,
}

pub fn exponential_decomposition(
    m: &SuperSpace,
    n: &SuperSpace,
    d: usize,
) -> Result<ExponentialDecomposition> {
    let field = m.field();
    let sum = direct_sum(m, n)?;
    let big = gamma_invariants(&sum.space, d)?;
    let mut columns = Vec::new();
    let mut blocks = Vec::new();
    for i in 0..=d {
        let gm = gamma_invariants(m, d - i)?;
        let gn = gamma_invariants(n, i)?;
        blocks.push((i, gm.dim(), gn.dim()));
        let left = TensorPower::new(&sum.space, d - i);
        let right = TensorPower::new(&sum.space, i);
        let push_m = |v: &Vector, tp: &TensorPower, src: &TensorPower, offset: usize| {
            let mut out = zero_vector(field, tp.dim());
            for (pos, x) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let multi: Vec<usize> = src
                    .multi_index(pos)
                    .iter()
                    .map(|&k| sum.perm[offset + k])
                    .collect();
                out[tp.position(&multi)] = x.clone();
            }
            out
        };
        let blocks_shuffle: Vec<usize> = (0..d).map(|p| usize::from(p >= d - i)).collect();
        for x in &gm.vectors {
            let xi = push_m(x, &left, &gm.power, 0);
            for y in &gn.vectors {
                let yi = push_m(y, &right, &gn.power, m.dim());
                let w = juxtapose(&left, &xi, &right, &yi, &big.power);
                let v = coset_sum(&big.power, &w, &blocks_shuffle);
                let c = big
                    .coords(&v)
                    .ok_or_else(|| Error::Audit("shuffle product not invariant".into()))?;
                columns.push(c);
            }
        }
    }
    let change_of_basis = Matrix::from_columns(field, big.dim(), &columns);
    let invertible = columns.len() == big.dim() && change_of_basis.rank() == big.dim();
    Ok(ExponentialDecomposition {
        blocks,
        total_dim: big.dim(),
        change_of_basis,
        invertible,
    })
}

/// Checks `Γ^{d+e}M ⊆ Γ^d M ⊗ Γ^e M` inside `M^{⊗(d+e)}`.
pub fn gamma_embedding_holds(m: &SuperSpace, d: usize, e: usize) -> Result<bool> {
    let field = m.field();
    let whole = gamma_invariants(m, d + e)?;
    let a = gamma_invariants(m, d)?;
    let b = gamma_invariants(m, e)?;
    let mut span = Span::new(field, whole.power.dim());
    for x in &a.vectors {
        for y in &b.vectors {
            span.push(&juxtapose(&a.power, x, &b.power, y, &whole.power));
        }
    }
    Ok(whole.vectors.iter().all(|v| span.contains(v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::super_linear::make_space;

    fn q() -> Field {
        Field::rationals()
    }

    #[test]
    fn transposition_on_even_line_is_plain_swap() {
        let s = transposition_action(&make_space(q(), 1, 0), 2, 1).unwrap();
        assert_eq!(s.matrix, SparseMatrix::identity(q(), 1));
        let m = make_space(q(), 2, 0);
        let s = transposition_action(&m, 2, 1).unwrap();
        assert_eq!(s.matrix.mul(&s.matrix), SparseMatrix::identity(q(), 4));
        assert!(s.matrix.get(0, 0).is_one());
    }

    #[test]
    fn transposition_on_odd_line_negates() {
        let s = transposition_action(&make_space(q(), 0, 1), 2, 1).unwrap();
        assert_eq!(s.matrix.get(0, 0), q().from_i64(-1));
    }

    #[test]
    fn transposition_out_of_range() {
        let m = make_space(q(), 1, 1);
        assert!(transposition_action(&m, 3, 0).is_err());
        assert!(transposition_action(&m, 3, 3).is_err());
    }

    #[test]
    fn transpositions_are_involutions_on_k11_cubed() {
        let m = make_space(q(), 1, 1);
        for i in 1..=2 {
            let s = transposition_action(&m, 3, i).unwrap();
            assert_eq!(s.matrix.mul(&s.matrix), SparseMatrix::identity(q(), 8));
        }
    }

    #[test]
    fn three_cycle_two_reduced_words() {
        let m = make_space(q(), 1, 1);
        let tp = TensorPower::new(&m, 3);
        // s1 s2 s1 = s2 s1 s2
        let a = action_along_word(&tp, &[0, 1, 0]);
        let b = action_along_word(&tp, &[1, 0, 1]);
        assert_eq!(a, b);
        assert_eq!(a, tp.action_matrix(&Permutation::from_word(3, &[0, 1, 0])));
        // 3-cycle s1 s2 against its direct matrix
        let c = Permutation::from_word(3, &[0, 1]);
        assert_eq!(action_along_word(&tp, &[0, 1]), tp.action_matrix(&c));
        assert_eq!(
            permutation_action(&m, 3, &Permutation::identity(3))
                .unwrap()
                .matrix,
            SparseMatrix::identity(q(), 8)
        );
    }

    #[test]
    fn right_action_homomorphism_s3() {
        let m = make_space(Field::gf(3), 1, 1);
        let tp = TensorPower::new(&m, 3);
        for s in Permutation::all(3) {
            for t in Permutation::all(3) {
                // P(σσ') = P(σ')P(σ)
                let lhs = tp.action_matrix(&s.compose(&t));
                let rhs = tp.action_matrix(&t).mul(&tp.action_matrix(&s));
                assert_eq!(lhs, rhs, "{s} {t}");
            }
        }
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(
            gamma_invariants(&make_space(q(), 0, 1), 2).unwrap().dim(),
            0
        );
        assert_eq!(
            gamma_invariants(&make_space(q(), 1, 1), 2).unwrap().dim(),
            2
        );
        for f in [q(), Field::gf(3)] {
            let g = gamma_invariants(&make_space(f, 2, 2), 2).unwrap();
            assert_eq!(g.dim(), 8);
            assert_eq!(g.kernel.len(), 8);
        }
        assert_eq!(gamma_dimension(2, 2, 2), 3 + 4 + 1);
    }

    #[test]
    fn gamma_in_characteristic_three_degree_three() {
        // e1⊗e1⊗e1 is invariant but not a symmetrisation image when 3 = 0
        let f = Field::gf(3);
        let g = gamma_invariants(&make_space(f, 1, 0), 3).unwrap();
        assert_eq!(g.dim(), 1);
        assert_eq!(g.vectors[0], vec![f.one()]);
    }

    #[test]
    fn gamma_dimension_formula_grid() {
        for f in [q(), Field::gf(3)] {
            for m in 0..=2 {
                for n in 0..=2 {
                    for d in 0..=3 {
                        let g = gamma_invariants(&make_space(f, m, n), d).unwrap();
                        assert_eq!(g.dim(), gamma_dimension(m, n, d), "({m},{n},{d})");
                        let (e, o) = gamma_sdim(m, n, d);
                        assert_eq!(g.space().sdim(), (e, o));
                    }
                }
            }
        }
    }

    #[test]
    fn symmetric_power_examples() {
        assert_eq!(symmetric_power(&make_space(q(), 0, 1), 2).unwrap().dim(), 0);
        assert_eq!(symmetric_power(&make_space(q(), 1, 1), 2).unwrap().dim(), 2);
        assert_eq!(symmetric_power(&make_space(q(), 2, 0), 3).unwrap().dim(), 4);
        let s = symmetric_power(&make_space(Field::gf(3), 2, 1), 3).unwrap();
        assert_eq!(s.dim(), gamma_dimension(2, 1, 3));
    }

    #[test]
    fn exponential_examples() {
        let z = make_space(q(), 0, 0);
        let m = make_space(q(), 1, 1);
        let e = exponential_decomposition(&m, &z, 2).unwrap();
        assert!(e.invertible);
        assert_eq!(e.total_dim, 2);
        let l = make_space(q(), 1, 0);
        let e = exponential_decomposition(&l, &l, 2).unwrap();
        assert_eq!(e.total_dim, 3);
        assert_eq!(e.blocks.iter().map(|(_, a, b)| a * b).sum::<usize>(), 3);
        let e = exponential_decomposition(&m, &m, 2).unwrap();
        assert_eq!(e.total_dim, 8);
        let parts: Vec<usize> = e.blocks.iter().map(|(_, a, b)| a * b).collect();
        assert_eq!(parts, vec![2, 4, 2]);
        assert!(e.invertible);
        let e = exponential_decomposition(
            &make_space(Field::gf(3), 1, 1),
            &make_space(Field::gf(3), 1, 0),
            3,
        )
        .unwrap();
        assert!(e.invertible);
    }

    #[test]
    fn embedding_of_divided_powers() {
        for f in [q(), Field::gf(3)] {
            assert!(gamma_embedding_holds(&make_space(f, 1, 1), 1, 2).unwrap());
            assert!(gamma_embedding_holds(&make_space(f, 2, 1), 2, 1).unwrap());
        }
    }

    #[test]
    fn label_round_trip() {
        let l = GammaLabel {
            even: vec![(1, 2), (3, 1)],
            odd: vec![1, 2],
        };
        let multi = l.multi_index(3);
        assert_eq!(multi, vec![0, 0, 2, 3, 4]);
        assert_eq!(GammaLabel::from_sorted(&multi, 3).unwrap(), l);
        assert!(GammaLabel::from_sorted(&[3, 3], 3).is_none());
        assert_eq!(gamma_labels(2, 2, 2).len(), 8);
    }
}
