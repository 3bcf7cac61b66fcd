//! Supermodules given by action matrices: `U(1)^{⊕n}` over `C(1)`, tensor
//! powers under `kS_d`, `A^{⊗d}` and `A ≀ S_d`, and regular modules.
//!
//! Matrices act on column coordinate vectors. For a right module the matrix
//! of `x` is the map `v ↦ v.x`, so `ρ(xy) = ρ(y)ρ(x)`; for a left module
//! `ρ(xy) = ρ(x)ρ(y)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebras::{
    group_algebra, sergeev, tensor_algebra, wreath, SuperAlgebra, EXHAUSTIVE_AUDIT_DIM,
};
use crate::error::{Error, Result};
use crate::linalg::{SparseMatrix, Vector};
use crate::perm::Permutation;
use crate::scalars::{Field, Scalar};
use crate::super_linear::{make_space, multi_indices, SuperMap, SuperSpace};
use crate::sym_action::{place_permutation, TensorPower};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug)]
pub struct ModuleAction {
    pub algebra: SuperAlgebra,
    pub space: SuperSpace,
    pub side: Side,
    /// one matrix per algebra basis element
    pub matrices: Vec<SparseMatrix>,
}

impl ModuleAction {
    /// Builds the action and runs [`ModuleAction::audit`].
    pub fn new(
        algebra: SuperAlgebra,
        space: SuperSpace,
        side: Side,
        matrices: Vec<SparseMatrix>,
    ) -> Result<Self> {
        let m = ModuleAction {
            algebra,
            space,
            side,
            matrices,
        };
        m.audit()?;
        Ok(m)
    }

    pub fn field(&self) -> Field {
        self.space.field()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Matrix of an arbitrary algebra element.
    pub fn matrix_of(&self, x: &[Scalar]) -> SparseMatrix {
        let n = self.dim();
        x.iter()
            .zip(&self.matrices)
            .filter(|(c, _)| !c.is_zero())
            .fold(SparseMatrix::zeros(self.field(), n, n), |acc, (c, m)| {
                acc.add(&m.scale(c))
            })
    }

    /// `v.x` for right modules, `x v` for left modules.
    pub fn apply(&self, v: &[Scalar], x: &[Scalar]) -> Vector {
        self.matrix_of(x).apply(v)
    }

    /// The action of `x` as a map of the underlying space.
    pub fn as_map(&self, x: &[Scalar]) -> SuperMap {
        SuperMap {
            source: self.space.clone(),
            target: self.space.clone(),
            matrix: self.matrix_of(x),
        }
    }

    /// Unit acts as the identity, each basis element acts homogeneously of its
    /// own parity, and the (anti)representation law holds on basis pairs
    /// (sampled above [`EXHAUSTIVE_AUDIT_DIM`]).
    pub fn audit(&self) -> Result<()> {
        let a = &self.algebra;
        let n = self.dim();
        if self.matrices.len() != a.dim() {
            return Err(Error::Shape(format!(
                "{} matrices for {} of dim {}",
                self.matrices.len(),
                a.name,
                a.dim()
            )));
        }
        for (i, m) in self.matrices.iter().enumerate() {
            if m.rows() != n || m.cols() != n {
                return Err(Error::Shape(format!("action matrix of {}", a.labels()[i])));
            }
            for (r, c, _) in m.triples() {
                if self.space.parity(r) + self.space.parity(c) != a.parity(i) {
                    return Err(Error::Audit(format!(
                        "{} does not act with parity {:?}",
                        a.labels()[i],
                        a.parity(i)
                    )));
                }
            }
        }
        if self.matrix_of(a.unit()) != SparseMatrix::identity(self.field(), n) {
            return Err(Error::Audit(format!(
                "unit of {} does not act as the identity",
                a.name
            )));
        }
        let check = |i: usize, j: usize| -> Result<()> {
            let prod = self.matrix_of(&a.mul(&a.basis_vector(i), &a.basis_vector(j)));
            let comp = match self.side {
                Side::Left => self.matrices[i].mul(&self.matrices[j]),
                Side::Right => self.matrices[j].mul(&self.matrices[i]),
            };
            if prod != comp {
                return Err(Error::Audit(format!(
                    "{:?} action of {} fails on ({}, {})",
                    self.side,
                    a.name,
                    a.labels()[i],
                    a.labels()[j]
                )));
            }
            Ok(())
        };
        if a.dim() <= EXHAUSTIVE_AUDIT_DIM {
            for i in 0..a.dim() {
                for j in 0..a.dim() {
                    check(i, j)?;
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x3d);
            for _ in 0..4000 {
                check(rng.gen_range(0..a.dim()), rng.gen_range(0..a.dim()))?;
            }
        }
        Ok(())
    }
}

/// `A` acting on itself by left or right multiplication.
pub fn regular_module(a: &SuperAlgebra, side: Side) -> Result<ModuleAction> {
    let (space, pos) = a.as_space();
    let field = a.field();
    let n = a.dim();
    let pos = &pos;
    let matrices = (0..n)
        .map(|i| {
            SparseMatrix::from_triples(
                field,
                n,
                n,
                (0..n).flat_map(|j| {
                    let prod = match side {
                        Side::Left => a.product_basis(i, j),
                        Side::Right => a.product_basis(j, i),
                    };
                    prod.iter().map(move |(k, c)| (pos[*k], pos[j], c.clone()))
                }),
            )
        })
        .collect();
    ModuleAction::new(a.clone(), space, side, matrices)
}

/// `U(1)^{⊕n}` (right) or `U_l(1)^{⊕n}` (left): `C(1)` acting on `k^{n|n}`
/// with `c ↦ [[0, I_n], [I_n, 0]]`.
pub fn u1_module(n: usize, side: Side, field: Field) -> Result<ModuleAction> {
    let c1 = crate::algebras::clifford(1, field)?;
    let space = make_space(field, n, n);
    let one = field.one();
    let j = SparseMatrix::from_triples(
        field,
        2 * n,
        2 * n,
        (0..n).flat_map(|i| [(i, n + i, one.clone()), (n + i, i, one.clone())]),
    );
    ModuleAction::new(
        c1,
        space,
        side,
        vec![SparseMatrix::identity(field, 2 * n), j],
    )
}

/// `A^{⊗d}` as an iterated tensor algebra; basis in lexicographic
/// multi-index order.
pub fn tensor_power_algebra(a: &SuperAlgebra, d: usize) -> Result<SuperAlgebra> {
    if d == 0 {
        return Err(Error::OutOfRange("tensor power needs d ≥ 1".into()));
    }
    let mut out = a.clone();
    for _ in 1..d {
        out = tensor_algebra(a, &out)?;
    }
    Ok(out)
}

/// Matrix of `v ↦ v.(a₁⊗…⊗a_d)` on `V^{⊗d}` for basis elements `a_k`, with
/// `(v₁⊗…⊗v_d).(a₁⊗…⊗a_d) = (-1)^{Σ_{i<j}|a_i||v_j|} v₁.a₁⊗…⊗v_d.a_d`.
fn tensor_action_matrix(action: &ModuleAction, tp: &TensorPower, alpha: &[usize]) -> SparseMatrix {
    let field = action.field();
    let a = &action.algebra;
    let v = &action.space;
    let dims = vec![v.dim(); tp.d];
    let mut triples = Vec::new();
    for beta in multi_indices(&dims) {
        let mut neg = false;
        let mut odd_a = false;
        for k in 0..tp.d {
            neg ^= odd_a && v.parity(beta[k]).is_odd();
            odd_a ^= a.parity(alpha[k]).is_odd();
        }
        let mut acc: Vec<(Vec<usize>, Scalar)> = vec![(Vec::new(), field.sign(neg))];
        for k in 0..tp.d {
            let col = action.matrices[alpha[k]].column(beta[k]);
            let mut next = Vec::with_capacity(acc.len() * col.len());
            for (m, c) in &acc {
                for (r, x) in col {
                    let mut m2 = m.clone();
                    m2.push(*r);
                    next.push((m2, c * x));
                }
            }
            acc = next;
        }
        let src = tp.position(&beta);
        triples.extend(acc.into_iter().map(|(m, c)| (tp.position(&m), src, c)));
    }
    SparseMatrix::from_triples(field, tp.dim(), tp.dim(), triples)
}

/// `V^{⊗d}` as a right `A^{⊗d}`-module. Also checks the compatibility
/// `(v.a).σ = (v.σ).(a·σ)` with the place-permutation action for every `σ`
/// and basis element `a`.
pub fn tensor_module(action: &ModuleAction, d: usize) -> Result<ModuleAction> {
    if action.side != Side::Right {
        return Err(Error::Unsupported(
            "tensor powers are built for right modules".into(),
        ));
    }
    let a = &action.algebra;
    let algebra = tensor_power_algebra(a, d)?;
    let tp = TensorPower::new(&action.space, d);
    let dims = vec![a.dim(); d];
    let alphas: Vec<Vec<usize>> = multi_indices(&dims).collect();
    let matrices: Vec<SparseMatrix> = alphas
        .iter()
        .map(|al| tensor_action_matrix(action, &tp, al))
        .collect();
    let lex = |m: &[usize]| m.iter().fold(0, |acc, &k| acc * a.dim() + k);
    for sigma in Permutation::all(d) {
        let p = tp.action_matrix(&sigma);
        for (i, al) in alphas.iter().enumerate() {
            let (moved, neg) = place_permutation(al, |k| a.parity(k), &sigma);
            let mut rhs = matrices[lex(&moved)].mul(&p);
            if neg {
                rhs = rhs.scale(&action.field().from_i64(-1));
            }
            if p.mul(&matrices[i]) != rhs {
                return Err(Error::Audit(format!("compatibility fails for σ = {sigma}")));
            }
        }
    }
    ModuleAction::new(algebra, tp.space().clone(), Side::Right, matrices)
}

/// `V^{⊗d}` as a right `A ≀ S_d`-module: `v.(σ⊗a) = (v.σ).a`.
pub fn wreath_action(action: &ModuleAction, d: usize) -> Result<ModuleAction> {
    let t = tensor_module(action, d)?;
    let algebra = wreath(&action.algebra, d)?;
    wreath_action_on(algebra, action, &t, d)
}

fn wreath_action_on(
    algebra: SuperAlgebra,
    action: &ModuleAction,
    t: &ModuleAction,
    d: usize,
) -> Result<ModuleAction> {
    let tp = TensorPower::new(&action.space, d);
    let layout = algebra.wreath_layout()?.clone();
    let block = layout.block();
    let perms = Permutation::all(d);
    let pmats: Vec<SparseMatrix> = perms.iter().map(|s| tp.action_matrix(s)).collect();
    let matrices = (0..algebra.dim())
        .map(|idx| t.matrices[idx % block].mul(&pmats[idx / block]))
        .collect();
    ModuleAction::new(algebra, tp.space().clone(), Side::Right, matrices)
}

/// `(U(1)^{⊕n})^{⊗d}` as a right `W(d)`-module.
pub fn sergeev_action(n: usize, d: usize, field: Field) -> Result<ModuleAction> {
    let u = u1_module(n, Side::Right, field)?;
    let t = tensor_module(&u, d)?;
    wreath_action_on(sergeev(d, field)?, &u, &t, d)
}

/// `(k^{m|n})^{⊗d}` as a right `kS_d`-module.
pub fn sym_group_action_module(m: usize, n: usize, d: usize, field: Field) -> Result<ModuleAction> {
    let algebra = group_algebra(d, field)?;
    let tp = TensorPower::new(&make_space(field, m, n), d);
    let matrices = Permutation::all(d)
        .iter()
        .map(|s| tp.action_matrix(s))
        .collect();
    ModuleAction::new(algebra, tp.space().clone(), Side::Right, matrices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::clifford;

    fn q() -> Field {
        Field::rationals()
    }

    #[test]
    fn u1_squares_to_identity() {
        for side in [Side::Left, Side::Right] {
            let u = u1_module(2, side, q()).unwrap();
            assert_eq!(
                u.matrices[1].mul(&u.matrices[1]),
                SparseMatrix::identity(q(), 4)
            );
            assert_eq!(u.matrices[1].get(0, 2), q().one());
            assert_eq!(u.space.sdim(), (2, 2));
        }
    }

    #[test]
    fn tensor_module_sign() {
        let u = u1_module(1, Side::Right, q()).unwrap();
        let t = tensor_module(&u, 2).unwrap();
        assert!(tensor_module(&u, 1).unwrap().matrices == u.matrices);
        // (v⊗w).(c⊗1) = (-1)^{|w|} v.c ⊗ w
        let c_1 = t.algebra.index_of_label("c1⊗1").unwrap();
        let tp = TensorPower::new(&u.space, 2);
        for v in 0..2 {
            for w in 0..2 {
                let out = t.apply(&tp.basis_vector(&[v, w]), &t.algebra.basis_vector(c_1));
                let expected = q().sign(u.space.parity(w).is_odd());
                assert_eq!(out[tp.position(&[1 - v, w])], expected);
            }
        }
    }

    #[test]
    fn sergeev_actions_audit() {
        let a = sergeev_action(1, 1, q()).unwrap();
        assert_eq!(a.space.sdim(), (1, 1));
        let a = sergeev_action(1, 2, q()).unwrap();
        assert_eq!(a.dim(), 4);
        let b = sergeev_action(2, 2, Field::gf(3)).unwrap();
        assert_eq!(b.dim(), 16);
        assert_eq!(b.algebra.dim(), 8);
        // s₁⊗c⊗1 acts by a signed permutation matrix
        let idx = b.algebra.index_of_label("[2 1]⊗c1⊗1").unwrap();
        let m = &b.matrices[idx];
        assert!((0..16).all(|c| m.column(c).len() == 1));
        assert!(wreath_action(&u1_module(1, Side::Right, q()).unwrap(), 3).is_ok());
    }

    #[test]
    fn sym_group_modules() {
        let a = sym_group_action_module(0, 1, 2, q()).unwrap();
        assert_eq!(a.matrices[1].get(0, 0), q().from_i64(-1));
        let b = sym_group_action_module(1, 1, 2, q()).unwrap();
        let s = &b.matrices[1];
        let fixed = crate::linalg::common_kernel(q(), 4, &[s.sub(&SparseMatrix::identity(q(), 4))]);
        assert_eq!(fixed.len(), 2);
    }

    #[test]
    fn regular_modules() {
        let c = clifford(2, q()).unwrap();
        assert!(regular_module(&c, Side::Left).is_ok());
        assert!(regular_module(&c, Side::Right).is_ok());
    }
}
