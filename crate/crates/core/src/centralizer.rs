//! Commutants of module actions, the Schur superalgebras `S(m|n,d)` and
//! `Q(n,d)`, the double centralizer check for `W(d)`, and the weight
//! decomposition of `(U(1)^{⊕n})^{⊗d}`.
//!
//! A commutant is solved one parity block at a time. Generators acting by
//! monomial matrices (every module built here) are handled by propagating
//! the invariance `X = ±ρ_W(g) X ρ_V(g)^{-1}` along orbits of matrix units;
//! any other generator refines the solution space by an exact kernel
//! computation. The final basis is audited against every algebra basis
//! element.

use std::collections::{BTreeMap, VecDeque};

use crate::algebras::SuperAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Span, SparseMatrix, Vector};
use crate::modules_actions::{sergeev_action, sym_group_action_module, ModuleAction, Side};
use crate::scalars::{Field, Scalar};
use crate::super_linear::{Parity, SuperMap, SuperSpace};
use crate::sym_action::gamma_dimension;

/// A linear constraint `X ρ_V(g) = (-1)^{|X||g|·twist} ρ_W(g) X`.
#[derive(Clone, Debug)]
pub struct Constraint {
    pub on_source: SparseMatrix,
    pub on_target: SparseMatrix,
    pub parity: Parity,
}

/// A homogeneous basis of the space of maps `X : V → W` satisfying a family
/// of commutation constraints.
#[derive(Clone, Debug)]
pub struct Commutant {
    pub source: SuperSpace,
    pub target: SuperSpace,
    /// even elements first, then odd
    pub basis: Vec<SuperMap>,
    /// `(row, col)` where basis element `i` is nonzero and all others vanish
    pivots: Vec<(usize, usize)>,
}

impl Commutant {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn sdim(&self) -> (usize, usize) {
        let even = self
            .basis
            .iter()
            .filter(|m| m.parity() == Some(Parity::Even))
            .count();
        (even, self.basis.len() - even)
    }

    pub fn field(&self) -> Field {
        self.source.field()
    }

    /// Coordinates of `x` in the basis, or `None` if `x` is not in the span.
    pub fn coords(&self, x: &SparseMatrix) -> Option<Vector> {
        let field = self.field();
        let c: Vector = self
            .basis
            .iter()
            .zip(&self.pivots)
            .map(|(b, &(r, s))| &x.get(r, s) * &b.matrix.get(r, s).inv().expect("pivot entry"))
            .collect();
        (x.field() == field && self.combine(&c) == *x).then_some(c)
    }

    /// `Σ c_i X_i`.
    pub fn combine(&self, c: &[Scalar]) -> SparseMatrix {
        let field = self.field();
        c.iter()
            .zip(&self.basis)
            .filter(|(x, _)| !x.is_zero())
            .fold(
                SparseMatrix::zeros(field, self.target.dim(), self.source.dim()),
                |acc, (x, b)| acc.add(&b.matrix.scale(x)),
            )
    }

    /// The flattened basis as a span (for subspace comparisons).
    pub fn span(&self) -> Span {
        let flats: Vec<Vector> = self.basis.iter().map(|b| b.matrix.flatten()).collect();
        Span::from_vectors(self.field(), self.target.dim() * self.source.dim(), &flats)
    }
}

fn is_monomial(m: &SparseMatrix) -> bool {
    if m.rows() != m.cols() {
        return false;
    }
    let mut seen = vec![false; m.rows()];
    for c in 0..m.cols() {
        match m.column(c) {
            [(r, _)] if !seen[*r] => seen[*r] = true,
            _ => return false,
        }
    }
    true
}

/// For a monomial matrix, `col ↦ (row, value)`.
fn monomial_image(m: &SparseMatrix) -> Vec<(usize, Scalar)> {
    (0..m.cols()).map(|c| m.column(c)[0].clone()).collect()
}

/// Source-side and target-side sparse actions of one generator, and whether it is odd.
type MonomialConstraint = (Vec<(usize, Scalar)>, Vec<(usize, Scalar)>, bool);

/// Orbit solution for monomial constraints: returns one basis matrix per
/// sign-consistent orbit of matrix units of the given parity.
fn orbit_solve(
    source: &SuperSpace,
    target: &SuperSpace,
    parity: Parity,
    cons: &[MonomialConstraint],
) -> Vec<SparseMatrix> {
    let field = source.field();
    let (rows, cols) = (target.dim(), source.dim());
    let idx = |t: usize, s: usize| t * cols + s;
    let allowed = |t: usize, s: usize| target.parity(t) + source.parity(s) == parity;
    // value[u] = coefficient of unit u relative to its orbit representative
    let mut value: Vec<Option<Scalar>> = vec![None; rows * cols];
    let mut out = Vec::new();
    for t0 in 0..rows {
        for s0 in 0..cols {
            if !allowed(t0, s0) || value[idx(t0, s0)].is_some() {
                continue;
            }
            let mut members = vec![(t0, s0)];
            value[idx(t0, s0)] = Some(field.one());
            let mut queue = VecDeque::from([(t0, s0)]);
            let mut consistent = true;
            while let Some((t, s)) = queue.pop_front() {
                let x = value[idx(t, s)].clone().expect("visited");
                // X = γ T(X) with T(E_ts) = α β^{-1} E_{t'k}, where
                // ρ_W e_t = α e_{t'} and ρ_V e_s = β e_k
                for (w_img, v_img, odd_sign) in cons {
                    let (t2, alpha) = &w_img[t];
                    let (k, beta) = &v_img[s];
                    let mut gamma = alpha * &beta.inv().expect("monomial entry");
                    if *odd_sign && (target.parity(t) + source.parity(s)).is_odd() {
                        gamma.negate();
                    }
                    let y = &x * &gamma;
                    match &value[idx(*t2, *k)] {
                        None => {
                            value[idx(*t2, *k)] = Some(y);
                            members.push((*t2, *k));
                            queue.push_back((*t2, *k));
                        }
                        Some(z) => {
                            if *z != y {
                                consistent = false;
                            }
                        }
                    }
                }
            }
            if consistent {
                out.push(SparseMatrix::from_triples(
                    field,
                    rows,
                    cols,
                    members
                        .iter()
                        .map(|&(t, s)| (t, s, value[idx(t, s)].clone().expect("visited"))),
                ));
            }
        }
    }
    out
}

/// Refines a basis of candidate matrices by one general constraint.
fn refine_matrices(
    field: Field,
    basis: &[SparseMatrix],
    c: &Constraint,
    super_sign: bool,
    parity: Parity,
) -> Vec<SparseMatrix> {
    if basis.is_empty() {
        return Vec::new();
    }
    let negate = super_sign && parity.times(c.parity);
    let images: Vec<Vector> = basis
        .iter()
        .map(|x| {
            let lhs = x.mul(&c.on_source);
            let rhs = c.on_target.mul(x);
            let diff = if negate { lhs.add(&rhs) } else { lhs.sub(&rhs) };
            diff.flatten()
        })
        .collect();
    if images.iter().all(|v| v.iter().all(Scalar::is_zero)) {
        return basis.to_vec();
    }
    let m = Matrix::from_columns(field, images[0].len(), &images);
    m.kernel()
        .into_iter()
        .map(|t| {
            t.iter().zip(basis).filter(|(x, _)| !x.is_zero()).fold(
                SparseMatrix::zeros(field, basis[0].rows(), basis[0].cols()),
                |acc, (x, b)| acc.add(&b.scale(x)),
            )
        })
        .collect()
}

/// Puts a basis into reduced echelon form (on flattened entries), so each
/// element has a pivot where the others vanish.
fn echelon_basis(
    field: Field,
    rows: usize,
    cols: usize,
    basis: &[SparseMatrix],
) -> Vec<SparseMatrix> {
    let flats: Vec<Vector> = basis.iter().map(SparseMatrix::flatten).collect();
    let span = Span::from_vectors(field, rows * cols, &flats);
    span.echelon_rows()
        .iter()
        .map(|r| SparseMatrix::unflatten(field, rows, cols, r))
        .collect()
}

/// Solves `{X : X·A_g = (-1)^{|X||g|·super_sign} B_g·X}` for homogeneous
/// constraints, one parity block at a time.
pub fn solve_commutant(
    source: &SuperSpace,
    target: &SuperSpace,
    constraints: &[Constraint],
    super_sign: bool,
) -> Result<Commutant> {
    let field = source.field();
    if target.field() != field {
        return Err(Error::FieldMismatch(
            field.to_string(),
            target.field().to_string(),
        ));
    }
    let (rows, cols) = (target.dim(), source.dim());
    let (mono, general): (Vec<&Constraint>, Vec<&Constraint>) = constraints
        .iter()
        .partition(|c| is_monomial(&c.on_source) && is_monomial(&c.on_target));
    let mono_data: Vec<_> = mono
        .iter()
        .map(|c| {
            (
                monomial_image(&c.on_target),
                monomial_image(&c.on_source),
                super_sign && c.parity.is_odd(),
            )
        })
        .collect();
    let mut basis = Vec::new();
    for parity in [Parity::Even, Parity::Odd] {
        let mut block = orbit_solve(source, target, parity, &mono_data);
        if !general.is_empty() {
            for c in &general {
                block = refine_matrices(field, &block, c, super_sign, parity);
            }
            block = echelon_basis(field, rows, cols, &block);
        }
        basis.extend(block);
    }
    let mut hits: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for b in &basis {
        for (r, c, _) in b.triples() {
            *hits.entry((r, c)).or_insert(0) += 1;
        }
    }
    let pivots = basis
        .iter()
        .map(|b| {
            b.triples()
                .map(|(r, c, _)| (r, c))
                .find(|p| hits[p] == 1)
                .ok_or_else(|| Error::Audit("commutant basis lacks pivots".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let basis = basis
        .into_iter()
        .map(|m| SuperMap::new(source.clone(), target.clone(), m))
        .collect::<Result<Vec<_>>>()?;
    Ok(Commutant {
        source: source.clone(),
        target: target.clone(),
        basis,
        pivots,
    })
}

/// Homogeneous parts of an algebra element.
fn homogeneous_parts(a: &SuperAlgebra, x: &[Scalar]) -> Vec<(Vector, Parity)> {
    let field = a.field();
    [Parity::Even, Parity::Odd]
        .into_iter()
        .map(|p| {
            let v: Vector = x
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    if a.parity(i) == p {
                        c.clone()
                    } else {
                        field.zero()
                    }
                })
                .collect();
            (v, p)
        })
        .filter(|(v, _)| v.iter().any(|c| !c.is_zero()))
        .collect()
}

/// `Hom_A(V, W)`: for right modules `X(v.a) = X(v).a`, for left modules
/// `X(a v) = (-1)^{|X||a|} a X(v)`. Solved on the generators of `A` and
/// audited on every basis element.
pub fn commutant(v: &ModuleAction, w: &ModuleAction) -> Result<Commutant> {
    if v.side != w.side {
        return Err(Error::AlgebraMismatch("modules on different sides".into()));
    }
    if !v.algebra.same_table(&w.algebra) {
        return Err(Error::AlgebraMismatch(format!(
            "{} vs {}",
            v.algebra.name, w.algebra.name
        )));
    }
    let a = &v.algebra;
    let super_sign = v.side == Side::Left;
    let constraints: Vec<Constraint> = a
        .generators()
        .iter()
        .flat_map(|g| homogeneous_parts(a, g))
        .map(|(g, parity)| Constraint {
            on_source: v.matrix_of(&g),
            on_target: w.matrix_of(&g),
            parity,
        })
        .collect();
    let c = solve_commutant(&v.space, &w.space, &constraints, super_sign)?;
    audit_commutant(&c, v, w)?;
    Ok(c)
}

/// Checks every commutant basis element against every algebra basis element.
pub fn audit_commutant(c: &Commutant, v: &ModuleAction, w: &ModuleAction) -> Result<()> {
    let super_sign = v.side == Side::Left;
    for (i, (rv, rw)) in v.matrices.iter().zip(&w.matrices).enumerate() {
        let pg = v.algebra.parity(i);
        for x in &c.basis {
            let lhs = x.matrix.mul(rv);
            let mut rhs = rw.mul(&x.matrix);
            if super_sign && x.parity().unwrap_or(Parity::Even).times(pg) {
                rhs = rhs.scale(&c.field().from_i64(-1));
            }
            if lhs != rhs {
                return Err(Error::Audit(format!(
                    "commutant element fails against {}",
                    v.algebra.labels()[i]
                )));
            }
        }
    }
    Ok(())
}

/// Plain commutant `{X : X M = M X for all M}` of a set of matrices on a
/// superspace.
pub fn plain_commutant(space: &SuperSpace, mats: &[SparseMatrix]) -> Result<Commutant> {
    let constraints: Vec<Constraint> = mats
        .iter()
        .map(|m| Constraint {
            on_source: m.clone(),
            on_target: m.clone(),
            parity: Parity::Even,
        })
        .collect();
    let c = solve_commutant(space, space, &constraints, false)?;
    for x in &c.basis {
        for m in mats {
            if x.matrix.mul(m) != m.mul(&x.matrix) {
                return Err(Error::Audit("plain commutant element fails".into()));
            }
        }
    }
    Ok(c)
}

/// `End_A(V)` as a superalgebra with its multiplication table.
pub fn commutant_algebra(c: &Commutant, name: &str) -> Result<SuperAlgebra> {
    if !c.source.compatible(&c.target) {
        return Err(Error::Shape(
            "commutant algebra needs source = target".into(),
        ));
    }
    let field = c.field();
    let n = c.dim();
    let unit = c
        .coords(&SparseMatrix::identity(field, c.source.dim()))
        .ok_or_else(|| Error::Audit(format!("{name}: identity not in commutant")))?;
    let mut constants = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let prod = c.basis[i].matrix.mul(&c.basis[j].matrix);
            let coeffs = c.coords(&prod).ok_or_else(|| {
                Error::Audit(format!("{name}: commutant not closed under composition"))
            })?;
            constants.extend(
                coeffs
                    .into_iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(k, x)| (i, j, k, x)),
            );
        }
    }
    let parities = c
        .basis
        .iter()
        .map(|b| b.parity().unwrap_or(Parity::Even))
        .collect();
    let labels = (0..n).map(|i| format!("x{}", i + 1)).collect();
    let generators = (0..n)
        .map(|i| {
            let mut v = vec![field.zero(); n];
            v[i] = field.one();
            v
        })
        .collect();
    SuperAlgebra::new(name, field, parities, labels, unit, constants, generators)
}

/// `Q_n`: the matrices `[[A, B], [-B, A]]` on `k^{n|n}`, even part `B = 0`,
/// odd part `A = 0`. Returns the algebra with its basis matrices.
pub fn q_matrix_algebra(n: usize, field: Field) -> Result<(SuperAlgebra, Vec<SparseMatrix>)> {
    let one = field.one();
    let minus = field.from_i64(-1);
    let mut mats = Vec::new();
    let mut parities = Vec::new();
    let mut labels = Vec::new();
    for odd in [false, true] {
        for i in 0..n {
            for j in 0..n {
                let t = if odd {
                    vec![(i, n + j, one.clone()), (n + i, j, minus.clone())]
                } else {
                    vec![(i, j, one.clone()), (n + i, n + j, one.clone())]
                };
                mats.push(SparseMatrix::from_triples(field, 2 * n, 2 * n, t));
                parities.push(Parity::from_bit(u8::from(odd)));
                labels.push(format!("{}{}{}", if odd { "B" } else { "A" }, i + 1, j + 1));
            }
        }
    }
    let alg = SuperAlgebra::from_matrix_basis(format!("Q_{n}"), field, parities, labels, &mats)?;
    Ok((alg, mats))
}

/// A square root of `-1` in the field, if there is one.
pub fn sqrt_minus_one(field: Field) -> Option<Scalar> {
    let p = field.characteristic();
    if field.is_rational() || p % 4 == 3 {
        return None;
    }
    let target = field.from_i64(-1);
    (1..p as i64)
        .map(|v| field.from_i64(v))
        .find(|x| x * x == target)
}

#[derive(Clone, Debug)]
pub struct QIdentification {
    pub side: Side,
    pub commutant_dim: usize,
    /// the root used for right modules
    pub root: Option<Scalar>,
    /// `None` when the check needs `√-1` and the field has none
    pub isomorphic: Option<bool>,
}

/// Compares `End_{C(1)}(V)` for `V = U(1)^{⊕n}` (right) or `U_l(1)^{⊕n}`
/// (left) with `Q_n`. Left modules give `Q_n` on the nose; right modules
/// are carried onto `Q_n` by conjugating with `diag(I, iI)`, `i² = -1`.
pub fn q_identification(n: usize, side: Side, field: Field) -> Result<QIdentification> {
    let v = crate::modules_actions::u1_module(n, side, field)?;
    let c = commutant(&v, &v)?;
    let (q, qmats) = q_matrix_algebra(n, field)?;
    let qspan = Span::from_vectors(
        field,
        4 * n * n,
        &qmats.iter().map(SparseMatrix::flatten).collect::<Vec<_>>(),
    );
    let root = match side {
        Side::Left => Some(field.one()),
        Side::Right => sqrt_minus_one(field),
    };
    let Some(i) = root.clone() else {
        return Ok(QIdentification {
            side,
            commutant_dim: c.dim(),
            root: None,
            isomorphic: None,
        });
    };
    let inv = i.inv().expect("nonzero");
    let diag = |x: &Scalar| {
        SparseMatrix::from_triples(
            field,
            2 * n,
            2 * n,
            (0..2 * n)
                .map(|k| (k, k, if k < n { field.one() } else { x.clone() }))
                .collect::<Vec<_>>(),
        )
    };
    let (d, dinv) = (diag(&i), diag(&inv));
    let mut images = Vec::with_capacity(c.dim());
    for b in &c.basis {
        let y = dinv.mul(&b.matrix).mul(&d);
        match qspan.coords(&y.flatten()) {
            Some(coords) => images.push(coords),
            None => {
                return Ok(QIdentification {
                    side,
                    commutant_dim: c.dim(),
                    root,
                    isomorphic: Some(false),
                })
            }
        }
    }
    let end = commutant_algebra(&c, "End_C(1)(V)")?;
    let iso = crate::algebras::AlgebraMap::from_images(end, q, &images, false)
        .map(|f| f.is_bijective())
        .unwrap_or(false);
    Ok(QIdentification {
        side,
        commutant_dim: c.dim(),
        root: match side {
            Side::Left => None,
            Side::Right => root,
        },
        isomorphic: Some(iso),
    })
}

/// `dim S(m|n,d) = dim Γ^d End(k^{m|n})`.
pub fn schur_i_dimension(m: usize, n: usize, d: usize) -> usize {
    gamma_dimension(m * m + n * n, 2 * m * n, d)
}

/// `dim Q(n,d) = dim Γ^d End_{C(1)}(U(1)^{⊕n})`.
pub fn schur_ii_dimension(n: usize, d: usize) -> usize {
    gamma_dimension(n * n, n * n, d)
}

/// `End_{kS_d}((k^{m|n})^{⊗d})` as a commutant (basis only).
pub fn schur_i_commutant(m: usize, n: usize, d: usize, field: Field) -> Result<Commutant> {
    let a = sym_group_action_module(m, n, d, field)?;
    commutant(&a, &a)
}

/// `End_{W(d)}((U(1)^{⊕n})^{⊗d})` as a commutant (basis only).
pub fn schur_ii_commutant(n: usize, d: usize, field: Field) -> Result<Commutant> {
    let a = sergeev_action(n, d, field)?;
    commutant(&a, &a)
}

/// The Schur superalgebra `S(m|n,d)`.
pub fn schur_i(m: usize, n: usize, d: usize, field: Field) -> Result<SuperAlgebra> {
    commutant_algebra(
        &schur_i_commutant(m, n, d, field)?,
        &format!("S({m}|{n},{d})"),
    )
}

/// The Schur superalgebra `Q(n,d)`.
pub fn schur_ii(n: usize, d: usize, field: Field) -> Result<SuperAlgebra> {
    commutant_algebra(&schur_ii_commutant(n, d, field)?, &format!("Q({n},{d})"))
}

#[derive(Clone, Debug)]
pub struct DoubleCentralizerReport {
    pub n: usize,
    pub d: usize,
    pub hypothesis_holds: bool,
    pub w_dim: usize,
    pub image_dim: usize,
    pub q_dim: usize,
    pub commutant_dim: usize,
    /// image of `W(d)` equals the commutant of `Q(n,d)`
    pub equal: bool,
    pub injective: bool,
}

impl DoubleCentralizerReport {
    /// The assertion holds (vacuously when `n < d`).
    pub fn passed(&self) -> bool {
        !self.hypothesis_holds || (self.equal && self.injective)
    }
}

/// Compares the image of `W(d)` in `End(V^{⊗d})` with the commutant of
/// `Q(n,d)` acting on `V^{⊗d}`, for `V = U(1)^{⊕n}`.
pub fn double_centralizer(n: usize, d: usize, field: Field) -> Result<DoubleCentralizerReport> {
    let act = sergeev_action(n, d, field)?;
    let q = commutant(&act, &act)?;
    let size = act.dim();
    let image: Vec<Vector> = act.matrices.iter().map(SparseMatrix::flatten).collect();
    let image_span = Span::from_vectors(field, size * size, &image);
    let qmats: Vec<SparseMatrix> = q.basis.iter().map(|b| b.matrix.clone()).collect();
    let cc = plain_commutant(&act.space, &qmats)?;
    let equal = image_span.same_subspace(&cc.span());
    Ok(DoubleCentralizerReport {
        n,
        d,
        hypothesis_holds: n >= d,
        w_dim: act.algebra.dim(),
        image_dim: image_span.dim(),
        q_dim: q.dim(),
        commutant_dim: cc.dim(),
        equal,
        injective: image_span.dim() == act.algebra.dim(),
    })
}

#[derive(Clone, Debug)]
pub struct WeightDecomposition {
    /// weight `λ` (counts of each copy index) ↦ dimension
    pub dims: BTreeMap<Vec<usize>, usize>,
    /// each weight space is stable under every `W(d)` basis element
    pub stable: bool,
}

/// Weight of a basis tensor: how many factors come from each copy of `U(1)`.
fn weight_of(multi: &[usize], n: usize) -> Vec<usize> {
    let mut w = vec![0; n];
    for &k in multi {
        w[k % n] += 1;
    }
    w
}

/// Splits `(U(1)^{⊕n})^{⊗d}` by weight and checks `W(d)`-stability.
pub fn weight_decomposition(n: usize, d: usize, field: Field) -> Result<WeightDecomposition> {
    let act = sergeev_action(n, d, field)?;
    let tp = crate::sym_action::TensorPower::new(&crate::super_linear::make_space(field, n, n), d);
    let weights: Vec<Vec<usize>> = (0..tp.dim())
        .map(|p| weight_of(&tp.multi_index(p), n))
        .collect();
    let mut dims = BTreeMap::new();
    for w in &weights {
        *dims.entry(w.clone()).or_insert(0) += 1;
    }
    let stable = act
        .matrices
        .iter()
        .all(|m| m.triples().all(|(r, c, _)| weights[r] == weights[c]));
    Ok(WeightDecomposition { dims, stable })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::clifford;
    use crate::modules_actions::{regular_module, u1_module};

    fn q() -> Field {
        Field::rationals()
    }

    #[test]
    fn trivial_group_commutant_is_everything() {
        let a = sym_group_action_module(1, 1, 1, q()).unwrap();
        assert_eq!(commutant(&a, &a).unwrap().sdim(), (2, 2));
    }

    #[test]
    fn q_identifications() {
        for n in 1..=2 {
            let r = q_identification(n, Side::Left, q()).unwrap();
            assert_eq!((r.commutant_dim, r.isomorphic), (2 * n * n, Some(true)));
            assert_eq!(
                q_identification(n, Side::Right, q()).unwrap().isomorphic,
                None
            );
            assert_eq!(
                q_identification(n, Side::Right, Field::gf(3))
                    .unwrap()
                    .isomorphic,
                None
            );
            let r = q_identification(n, Side::Right, Field::gf(5)).unwrap();
            assert_eq!(r.isomorphic, Some(true));
            assert_eq!(r.root, Some(Field::gf(5).from_i64(2)));
        }
    }

    #[test]
    fn type_q_signature() {
        for side in [Side::Left, Side::Right] {
            let u = u1_module(1, side, q()).unwrap();
            assert_eq!(commutant(&u, &u).unwrap().sdim(), (1, 1));
            let r = regular_module(&clifford(1, q()).unwrap(), side).unwrap();
            assert_eq!(commutant(&r, &r).unwrap().dim(), 2);
        }
    }

    #[test]
    fn c1_hom_block_shapes() {
        // right: [[A, B], [B, A]]; left: [[A, B], [-B, A]]
        for (nv, nw) in [(1, 2), (2, 2), (2, 1)] {
            let v = u1_module(nv, Side::Right, q()).unwrap();
            let w = u1_module(nw, Side::Right, q()).unwrap();
            let c = commutant(&v, &w).unwrap();
            assert_eq!(c.dim(), 2 * nv * nw);
            for x in &c.basis {
                for t in 0..nw {
                    for s in 0..nv {
                        assert_eq!(x.matrix.get(t, s), x.matrix.get(nw + t, nv + s));
                        assert_eq!(x.matrix.get(t, nv + s), x.matrix.get(nw + t, s));
                    }
                }
            }
            let vl = u1_module(nv, Side::Left, q()).unwrap();
            let wl = u1_module(nw, Side::Left, q()).unwrap();
            let cl = commutant(&vl, &wl).unwrap();
            assert_eq!(cl.dim(), 2 * nv * nw);
            for x in &cl.basis {
                for t in 0..nw {
                    for s in 0..nv {
                        assert_eq!(x.matrix.get(t, s), x.matrix.get(nw + t, nv + s));
                        assert_eq!(x.matrix.get(t, nv + s), -&x.matrix.get(nw + t, s));
                    }
                }
            }
        }
    }

    #[test]
    fn schur_dimensions() {
        for f in [q(), Field::gf(3)] {
            assert_eq!(schur_i_commutant(2, 0, 2, f).unwrap().dim(), 10);
            assert_eq!(schur_i_commutant(1, 1, 2, f).unwrap().dim(), 8);
            for d in 1..=3 {
                assert_eq!(schur_i_commutant(1, 0, d, f).unwrap().dim(), 1);
            }
            assert_eq!(schur_ii_commutant(1, 1, f).unwrap().dim(), 2);
            assert_eq!(schur_ii_commutant(1, 2, f).unwrap().dim(), 2);
        }
        assert_eq!(schur_i_dimension(2, 0, 2), 10);
        assert_eq!(schur_ii_dimension(2, 2), 32);
    }

    #[test]
    fn schur_algebras_audit() {
        let s = schur_i(1, 1, 2, Field::gf(3)).unwrap();
        assert_eq!(s.dim(), 8);
        let qa = schur_ii(1, 2, q()).unwrap();
        assert_eq!(qa.dim(), 2);
    }

    #[test]
    fn double_centralizer_small() {
        for (n, d) in [(1, 1), (2, 1)] {
            let r = double_centralizer(n, d, q()).unwrap();
            assert!(r.passed(), "{r:?}");
            assert_eq!(r.commutant_dim, 2);
        }
        let r = double_centralizer(1, 2, q()).unwrap();
        assert!(!r.hypothesis_holds);
    }

    #[test]
    fn weights() {
        let w = weight_decomposition(2, 2, q()).unwrap();
        assert!(w.stable);
        assert_eq!(w.dims[&vec![2, 0]], 4);
        assert_eq!(w.dims[&vec![1, 1]], 8);
        assert_eq!(w.dims[&vec![0, 2]], 4);
        let w = weight_decomposition(1, 3, q()).unwrap();
        assert_eq!(w.dims.len(), 1);
        assert_eq!(w.dims[&vec![3]], 8);
        let w = weight_decomposition(3, 3, Field::gf(3)).unwrap();
        assert_eq!(w.dims[&vec![1, 1, 1]], 48);
    }
}
