//! Pairings and dualities: `Γ^d(M)^∨ ≅ S^d(M^∨)`, twisted duals of modules,
//! coalgebras dual to superalgebras, and `S^d(B^∨)^∨ ≅ Γ^d(B^-)`.
//!
//! Dual algebras of coalgebras are formed with the unsigned pairing
//! `⟨φ⊗ψ, f⊗g⟩ = φ(f)ψ(g)` ([`DualConvention::Plain`]); the Koszul-signed
//! pairing is available for comparison.

use crate::algebras::{minus_algebra, AlgebraMap, SuperAlgebra};
use crate::centralizer::{commutant, Commutant};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Span, SparseMatrix, Vector};
use crate::modules_actions::{tensor_power_algebra, ModuleAction, Side};
use crate::scalars::{Field, Scalar};
use crate::super_linear::{dual_map, dual_space, minus_twist, multi_indices, Parity, SuperSpace};
use crate::sym_action::{
    gamma_invariants, symmetric_power, GammaBasis, SymmetricPower, TensorPower,
};

/// A bilinear pairing between two superspaces.
#[derive(Clone, Debug)]
pub struct Pairing {
    pub left: SuperSpace,
    pub right: SuperSpace,
    /// `gram[i][j] = ⟨left_i, right_j⟩`
    pub gram: Matrix,
}

impl Pairing {
    pub fn is_perfect(&self) -> bool {
        self.left.dim() == self.right.dim() && self.gram.rank() == self.left.dim()
    }
}

/// `⟨f₁⊗…⊗f_d, v₁⊗…⊗v_d⟩ = (-1)^{Σ_{i<j}|f_j||v_i|} Π⟨f_i, v_i⟩` on dual
/// basis tensors: nonzero only for equal multi-indices.
fn tensor_pairing_sign(tp: &TensorPower, multi: &[usize]) -> bool {
    let odd = multi
        .iter()
        .filter(|&&k| tp.base.parity(k).is_odd())
        .count();
    (odd * odd.saturating_sub(1) / 2) % 2 == 1
}

/// Pairing `S^d(M^∨) × Γ^d M → k` evaluating a representative of each
/// symmetric class on the invariant vectors, with its well-definedness
/// certified on every representative.
pub fn gamma_sym_pairing(m: &SuperSpace, d: usize) -> Result<Pairing> {
    let field = m.field();
    let gamma = gamma_invariants(m, d)?;
    let sym = symmetric_power(&dual_space(m), d)?;
    let tp = &gamma.power;
    let eval = |multi: &[usize], g: &Vector| -> Scalar {
        let x = &g[tp.position(multi)];
        if tensor_pairing_sign(tp, multi) {
            -x
        } else {
            x.clone()
        }
    };
    let (em, _) = m.sdim();
    let reps: Vec<Vec<usize>> = sym.labels.iter().map(|l| l.multi_index(em)).collect();
    let mut gram = Matrix::zeros(field, sym.dim(), gamma.dim());
    for (s, rep) in reps.iter().enumerate() {
        for (g, v) in gamma.vectors.iter().enumerate() {
            gram[(s, g)] = eval(rep, v);
        }
    }
    // every basis tensor is ± its class representative (or zero in S^d);
    // the pairing must agree
    for pos in 0..tp.dim() {
        let multi = tp.multi_index(pos);
        for (g, v) in gamma.vectors.iter().enumerate() {
            let direct = eval(&multi, v);
            let via_class = match sym.class_of(&multi) {
                Some((s, neg)) => {
                    let x = gram[(s, g)].clone();
                    if neg {
                        -&x
                    } else {
                        x
                    }
                }
                None => field.zero(),
            };
            if direct != via_class {
                return Err(Error::Audit(format!(
                    "pairing not well defined on {multi:?}"
                )));
            }
        }
    }
    Ok(Pairing {
        left: sym.space(),
        right: gamma.space(),
        gram,
    })
}

/// `V^{τ,∨}`: the dual space with `⟨f.a, v⟩ = ⟨f, v.τ(a)⟩`.
pub fn twisted_dual_module(action: &ModuleAction, tau: &AlgebraMap) -> Result<ModuleAction> {
    if action.side != Side::Right {
        return Err(Error::Unsupported(
            "twisted duals are built for right modules".into(),
        ));
    }
    if !tau.anti
        || !tau.source.same_table(&action.algebra)
        || !tau.target.same_table(&action.algebra)
    {
        return Err(Error::AlgebraMismatch(
            "τ must be an antiautomorphism of the acting algebra".into(),
        ));
    }
    tau.check()?;
    let a = &action.algebra;
    let matrices = (0..a.dim())
        .map(|i| action.matrix_of(&tau.apply(&a.basis_vector(i))).transpose())
        .collect();
    ModuleAction::new(a.clone(), dual_space(&action.space), Side::Right, matrices)
}

#[derive(Clone, Debug)]
pub struct HomDualReport {
    pub hom_dim: usize,
    pub dual_hom_dim: usize,
    /// `φ^∨(f.a) = (-1)^{|φ||a|} φ^∨(f).a` for every basis `φ` and `a`
    pub signed_intertwining: bool,
    /// the minus twist of `φ^∨` (the plain transpose) lies in the dual hom
    /// space, and these images form a basis of it
    pub twisted_duals_span: bool,
}

/// Compares `Hom_B(V,W)` with `Hom_B(W^{τ,∨}, V^{τ,∨})`.
pub fn hom_dual_check(
    v: &ModuleAction,
    w: &ModuleAction,
    tau: &AlgebraMap,
) -> Result<HomDualReport> {
    let hom = commutant(v, w)?;
    let vd = twisted_dual_module(v, tau)?;
    let wd = twisted_dual_module(w, tau)?;
    let dual_hom: Commutant = commutant(&wd, &vd)?;
    let a = &v.algebra;
    let field = v.field();
    let mut signed = true;
    let mut span = Span::new(field, vd.dim() * wd.dim());
    for phi in &hom.basis {
        let pd = dual_map(phi);
        let p_phi = phi.parity().unwrap_or(Parity::Even);
        for i in 0..a.dim() {
            let lhs = pd.matrix.mul(&wd.matrices[i]);
            let mut rhs = vd.matrices[i].mul(&pd.matrix);
            if p_phi.times(a.parity(i)) {
                rhs = rhs.scale(&field.from_i64(-1));
            }
            signed &= lhs == rhs;
        }
        let t = minus_twist(&pd);
        if dual_hom.coords(&t.matrix).is_none() {
            span = Span::new(field, vd.dim() * wd.dim());
            break;
        }
        span.push(&t.matrix.flatten());
    }
    Ok(HomDualReport {
        hom_dim: hom.dim(),
        dual_hom_dim: dual_hom.dim(),
        signed_intertwining: signed,
        twisted_duals_span: span.dim() == dual_hom.dim() && hom.dim() == dual_hom.dim(),
    })
}

/// Conventions for the dual algebra of a coalgebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualConvention {
    /// `⟨φ⊗ψ, f⊗g⟩ = φ(f)ψ(g)`
    Plain,
    /// `⟨φ⊗ψ, f⊗g⟩ = (-1)^{|ψ||f|} φ(f)ψ(g)`
    Koszul,
}

/// A finite-dimensional supercoalgebra by structure constants.
#[derive(Clone, Debug)]
pub struct Coalgebra {
    pub field: Field,
    pub parities: Vec<Parity>,
    pub labels: Vec<String>,
    pub counit: Vector,
    /// `coproduct[m]` lists `(i, j, c)` with `Δ(x_m) = Σ c x_i ⊗ x_j`
    pub coproduct: Vec<Vec<(usize, usize, Scalar)>>,
}

impl Coalgebra {
    pub fn dim(&self) -> usize {
        self.parities.len()
    }
}

/// `B^∨` with `⟨Δ(f), a⊗b⟩ = ⟨f, ab⟩` (tensor pairing with its Koszul
/// sign) and `ε(f) = ⟨f, 1⟩`.
pub fn dual_coalgebra(b: &SuperAlgebra) -> Coalgebra {
    let n = b.dim();
    let mut coproduct = vec![Vec::new(); n];
    for (i, j, k, c) in b.constants() {
        let c = if b.parity(i).times(b.parity(j)) {
            -c
        } else {
            c.clone()
        };
        coproduct[k].push((i, j, c));
    }
    Coalgebra {
        field: b.field(),
        parities: b.parities().to_vec(),
        labels: b.labels().iter().map(|l| format!("{l}^∨")).collect(),
        counit: b.unit().clone(),
        coproduct,
    }
}

/// The algebra dual to a coalgebra.
pub fn dual_algebra(c: &Coalgebra, conv: DualConvention, name: &str) -> Result<SuperAlgebra> {
    let field = c.field;
    let mut constants = Vec::new();
    for (m, terms) in c.coproduct.iter().enumerate() {
        for (i, j, x) in terms {
            let neg = conv == DualConvention::Koszul && c.parities[*i].times(c.parities[*j]);
            constants.push((*i, *j, m, if neg { -x } else { x.clone() }));
        }
    }
    let n = c.dim();
    let generators = (0..n)
        .map(|i| {
            let mut v = vec![field.zero(); n];
            v[i] = field.one();
            v
        })
        .collect();
    SuperAlgebra::new(
        name,
        field,
        c.parities.clone(),
        c.labels.iter().map(|l| format!("{l}^∨")).collect(),
        c.counit.clone(),
        constants,
        generators,
    )
}

/// `T^d(A)`: the tensor power coalgebra, basis in lexicographic multi-index
/// order, with `Δ(x₁⊗…⊗x_d) = Σ ± (x₁'⊗…⊗x_d') ⊗ (x₁''⊗…⊗x_d'')`, the sign
/// from moving each `x_i'` left past the `x_j''` with `j < i`.
pub fn tensor_coalgebra(a: &Coalgebra, d: usize) -> Coalgebra {
    let field = a.field;
    let n = a.dim();
    let dims = vec![n; d];
    let lex = |m: &[usize]| m.iter().fold(0, |acc, &k| acc * n + k);
    let multis: Vec<Vec<usize>> = multi_indices(&dims).collect();
    let mut coproduct = Vec::with_capacity(multis.len());
    let mut parities = Vec::new();
    let mut labels = Vec::new();
    let mut counit = Vec::new();
    for m in &multis {
        parities.push(m.iter().fold(Parity::Even, |p, &k| p + a.parities[k]));
        labels.push(
            m.iter()
                .map(|&k| a.labels[k].as_str())
                .collect::<Vec<_>>()
                .join("⊗"),
        );
        counit.push(m.iter().fold(field.one(), |acc, &k| &acc * &a.counit[k]));
        let mut acc: Vec<(Vec<usize>, Vec<usize>, Scalar)> =
            vec![(Vec::new(), Vec::new(), field.one())];
        for &k in m {
            let mut next = Vec::new();
            for (is, js, c) in &acc {
                let odd_right = js.iter().filter(|&&j| a.parities[j].is_odd()).count() % 2 == 1;
                for (i, j, x) in &a.coproduct[k] {
                    let mut y = c * x;
                    if odd_right && a.parities[*i].is_odd() {
                        y.negate();
                    }
                    let mut is2 = is.clone();
                    is2.push(*i);
                    let mut js2 = js.clone();
                    js2.push(*j);
                    next.push((is2, js2, y));
                }
            }
            acc = next;
        }
        coproduct.push(
            acc.into_iter()
                .map(|(is, js, c)| (lex(&is), lex(&js), c))
                .collect(),
        );
    }
    Coalgebra {
        field,
        parities,
        labels,
        counit,
        coproduct,
    }
}

/// Checks `(A^∨)^{⊗d} ≅ (A^{⊗d})^∨` as an exact structure-constant match
/// (identity on basis indices).
pub fn tensor_dual_check(a: &Coalgebra, d: usize) -> Result<bool> {
    let dual = dual_algebra(a, DualConvention::Plain, "A^∨")?;
    let lhs = tensor_power_algebra(&dual, d)?;
    let rhs = dual_algebra(&tensor_coalgebra(a, d), DualConvention::Plain, "(A^⊗d)^∨")?;
    Ok(lhs.same_table(&rhs))
}

#[derive(Clone, Debug)]
pub struct DoubleDualReport {
    pub dim: usize,
    /// `(B^∨)^∨` (unsigned pairing) is isomorphic to `B^-` via the canonical
    /// identification `v ↦ ⟨v, ·⟩`
    pub iso_to_minus: bool,
    /// `(B^∨)^∨` with the Koszul-signed pairing has the table of `B`
    pub koszul_gives_original: bool,
}

pub fn double_dual_algebra_check(b: &SuperAlgebra) -> Result<DoubleDualReport> {
    let field = b.field();
    let coalg = dual_coalgebra(b);
    let plain = dual_algebra(&coalg, DualConvention::Plain, "(B^∨)^∨")?;
    let minus = minus_algebra(b);
    // v ↦ ⟨v, ·⟩ sends e_a to (-1)^{|a|} times the dual-dual basis vector
    let ident = SparseMatrix::from_triples(
        field,
        b.dim(),
        b.dim(),
        (0..b.dim()).map(|a| (a, a, field.sign(b.parity(a).is_odd()))),
    );
    let iso = AlgebraMap::new(minus, plain, ident, false)
        .map(|f| f.is_bijective())
        .unwrap_or(false);
    let koszul = dual_algebra(&coalg, DualConvention::Koszul, "(B^∨)^∨")?;
    Ok(DoubleDualReport {
        dim: b.dim(),
        iso_to_minus: iso,
        koszul_gives_original: koszul.same_table(b),
    })
}

#[derive(Clone, Debug)]
pub struct CosalgReport {
    pub gamma_dim: usize,
    pub sym_dim: usize,
    /// the coproduct on `S^d(B^∨)` does not depend on representatives
    pub well_defined: bool,
    pub isomorphism: bool,
}

/// Coproduct of `S^d(A)` on its monomial basis, with a flag recording
/// whether every representative gives the same answer.
type CoproductTable = Vec<Vec<(usize, usize, Scalar)>>;

fn sym_coproduct(
    a: &Coalgebra,
    a_pos: &[usize],
    sym: &SymmetricPower,
    d: usize,
) -> (CoproductTable, bool) {
    let field = a.field;
    let t = tensor_coalgebra(a, d);
    let n = a.dim();
    let tp = &sym.power;
    // lexicographic T^d(A) index ↦ multi-index in the even-first space
    let to_space = |lex: usize| -> Vec<usize> {
        let mut l = lex;
        let mut out = vec![0; d];
        for k in (0..d).rev() {
            out[k] = a_pos[l % n];
            l /= n;
        }
        out
    };
    let project = |terms: &[(usize, usize, Scalar)]| -> Vec<(usize, usize, Scalar)> {
        let mut acc: std::collections::BTreeMap<(usize, usize), Scalar> = Default::default();
        for (i, j, c) in terms {
            let (Some((p, n1)), Some((q, n2))) =
                (sym.class_of(&to_space(*i)), sym.class_of(&to_space(*j)))
            else {
                continue;
            };
            let x = if n1 != n2 { -c } else { c.clone() };
            *acc.entry((p, q)).or_insert_with(|| field.zero()) += &x;
        }
        acc.into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((p, q), c)| (p, q, c))
            .collect()
    };
    let mut lex_of_pos = vec![0; tp.dim()];
    for lex in 0..t.dim() {
        lex_of_pos[tp.position(&to_space(lex))] = lex;
    }
    let cop: Vec<Vec<(usize, usize, Scalar)>> = sym
        .section
        .iter()
        .map(|&pos| project(&t.coproduct[lex_of_pos[pos]]))
        .collect();
    let mut ok = true;
    for lex in 0..t.dim() {
        let here = project(&t.coproduct[lex]);
        let expected = match sym.class_of(&to_space(lex)) {
            Some((s, neg)) => cop[s]
                .iter()
                .map(|(p, q, c)| (*p, *q, if neg { -c } else { c.clone() }))
                .collect(),
            None => Vec::new(),
        };
        ok &= here == expected;
    }
    (cop, ok)
}

/// `Γ^d(B^-)` as a subalgebra of `(B^-)^{⊗d}`, in the orbit-sum basis.
fn gamma_subalgebra(
    b: &SuperAlgebra,
    gamma: &GammaBasis,
    a_pos: &[usize],
    d: usize,
) -> Result<SuperAlgebra> {
    let field = b.field();
    let bm = tensor_power_algebra(&minus_algebra(b), d)?;
    let n = b.dim();
    let tp = &gamma.power;
    // canonical tensor position ↦ lexicographic algebra index
    let mut b_of_space = vec![0; n];
    for (bi, &sp) in a_pos.iter().enumerate() {
        b_of_space[sp] = bi;
    }
    let to_alg = |v: &Vector| -> Vector {
        let mut out = vec![field.zero(); bm.dim()];
        for (pos, x) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            let lex = tp
                .multi_index(pos)
                .iter()
                .fold(0, |acc, &k| acc * n + b_of_space[k]);
            out[lex] = x.clone();
        }
        out
    };
    let elems: Vec<Vector> = gamma.vectors.iter().map(to_alg).collect();
    let span = Span::from_vectors(field, bm.dim(), &elems);
    let unit = span
        .coords(bm.unit())
        .ok_or_else(|| Error::Audit("unit not in Γ^d".into()))?;
    let mut constants = Vec::new();
    for (i, x) in elems.iter().enumerate() {
        for (j, y) in elems.iter().enumerate() {
            let c = span
                .coords(&bm.mul(x, y))
                .ok_or_else(|| Error::Audit("Γ^d not closed under multiplication".into()))?;
            constants.extend(
                c.into_iter()
                    .enumerate()
                    .filter(|(_, z)| !z.is_zero())
                    .map(|(k, z)| (i, j, k, z)),
            );
        }
    }
    let gens = (0..elems.len())
        .map(|i| {
            let mut v = vec![field.zero(); elems.len()];
            v[i] = field.one();
            v
        })
        .collect();
    SuperAlgebra::new(
        format!("Γ^{d}({}⁻)", b.name),
        field,
        gamma.labels.iter().map(|l| l.parity()).collect(),
        gamma.labels.iter().map(ToString::to_string).collect(),
        unit,
        constants,
        gens,
    )
}

/// Verifies that the pairing-induced map `Γ^d(B^-) → S^d(B^∨)^∨` is a
/// unital superalgebra isomorphism.
pub fn cosalg_duality_check(b: &SuperAlgebra, d: usize) -> Result<CosalgReport> {
    let field = b.field();
    let (space, a_pos) = b.as_space();
    let gamma = gamma_invariants(&space, d)?;
    let coalg = dual_coalgebra(b);
    let sym = symmetric_power(&dual_space(&space), d)?;
    let (cop, well_defined) = sym_coproduct(&coalg, &a_pos, &sym, d);
    let sym_coalg = Coalgebra {
        field,
        parities: sym.labels.iter().map(|l| l.parity()).collect(),
        labels: sym.labels.iter().map(ToString::to_string).collect(),
        counit: sym
            .section
            .iter()
            .map(|&pos| {
                sym.power
                    .multi_index(pos)
                    .iter()
                    .fold(field.one(), |acc, &k| {
                        let bi = a_pos.iter().position(|&p| p == k).expect("bijection");
                        &acc * &coalg.counit[bi]
                    })
            })
            .collect(),
        coproduct: cop,
    };
    let sym_dual = dual_algebra(&sym_coalg, DualConvention::Plain, "S^d(B^∨)^∨")?;
    let gamma_alg = gamma_subalgebra(b, &gamma, &a_pos, d)?;
    // γ ↦ (s ↦ ⟨rep(s), γ⟩), unsigned
    let (em, _) = space.sdim();
    let tp = &gamma.power;
    let m = SparseMatrix::from_triples(
        field,
        sym.dim(),
        gamma.dim(),
        sym.labels.iter().enumerate().flat_map(|(s, l)| {
            let pos = tp.position(&l.multi_index(em));
            gamma
                .vectors
                .iter()
                .enumerate()
                .map(move |(g, v)| (s, g, v[pos].clone()))
                .collect::<Vec<_>>()
        }),
    );
    let iso = match AlgebraMap::new(gamma_alg, sym_dual, m, false) {
        Ok(f) => f.is_bijective(),
        Err(Error::Audit(_)) => false,
        Err(e) => return Err(e),
    };
    Ok(CosalgReport {
        gamma_dim: gamma.dim(),
        sym_dim: sym.dim(),
        well_defined,
        isomorphism: iso && well_defined,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::{clifford, diagonal_algebra, sergeev};
    use crate::modules_actions::u1_module;
    use crate::super_linear::make_space;

    fn q() -> Field {
        Field::rationals()
    }

    #[test]
    fn pairing_examples() {
        let p = gamma_sym_pairing(&make_space(q(), 1, 0), 2).unwrap();
        assert_eq!(p.gram[(0, 0)], q().one());
        let p = gamma_sym_pairing(&make_space(q(), 0, 1), 2).unwrap();
        assert_eq!((p.left.dim(), p.right.dim()), (0, 0));
        for f in [q(), Field::gf(3)] {
            let p = gamma_sym_pairing(&make_space(f, 1, 1), 2).unwrap();
            assert_eq!(p.gram.rows(), 2);
            assert!(p.is_perfect());
        }
    }

    #[test]
    fn twisted_duals() {
        let c = clifford(1, q()).unwrap();
        let tau =
            AlgebraMap::new(c.clone(), c.clone(), SparseMatrix::identity(q(), 2), true).unwrap();
        let u = u1_module(1, Side::Right, q()).unwrap();
        let ud = twisted_dual_module(&u, &tau).unwrap();
        assert_eq!(ud.space.sdim(), (1, 1));
        let u2 = u1_module(2, Side::Right, q()).unwrap();
        let r = hom_dual_check(&u, &u2, &tau).unwrap();
        assert_eq!(r.hom_dim, r.dual_hom_dim);
        assert!(r.signed_intertwining && r.twisted_duals_span);
    }

    #[test]
    fn double_duals() {
        let r = double_dual_algebra_check(&clifford(1, q()).unwrap()).unwrap();
        assert!(r.iso_to_minus);
        assert!(r.koszul_gives_original);
        let r = double_dual_algebra_check(&diagonal_algebra(2, q()).unwrap()).unwrap();
        assert!(r.iso_to_minus);
        let r = double_dual_algebra_check(&sergeev(2, Field::gf(3)).unwrap()).unwrap();
        assert!(r.iso_to_minus);
    }

    #[test]
    fn cosalg_examples() {
        for f in [q(), Field::gf(3)] {
            let k = clifford(0, f).unwrap();
            for d in 1..=3 {
                let r = cosalg_duality_check(&k, d).unwrap();
                assert_eq!(r.gamma_dim, 1);
                assert!(r.isomorphism);
            }
            let r = cosalg_duality_check(&diagonal_algebra(2, f).unwrap(), 2).unwrap();
            assert_eq!((r.gamma_dim, r.sym_dim), (3, 3));
            assert!(r.isomorphism);
            let r = cosalg_duality_check(&clifford(1, f).unwrap(), 2).unwrap();
            assert_eq!((r.gamma_dim, r.sym_dim), (2, 2));
            assert!(r.isomorphism, "{r:?}");
        }
    }

    #[test]
    fn tensor_dual() {
        let a = dual_coalgebra(&clifford(1, q()).unwrap());
        assert!(tensor_dual_check(&a, 2).unwrap());
    }
}
