//! Divided-power hom spaces `Γ^d Hom_B(V, W)` realised as maps
//! `V^{⊗d} → W^{⊗d}`, their composition, and the surjectivity of
//! composition through an intermediate module `P`.

use crate::algebras::clifford;
use crate::centralizer::{commutant, Commutant};
use crate::error::{Error, Result};
use crate::linalg::{Span, SparseMatrix, Vector};
use crate::modules_actions::{wreath_action, ModuleAction, Side};
use crate::scalars::Scalar;
use crate::super_linear::{boxtimes_many, compose, multi_indices, SuperMap, SuperSpace};
use crate::sym_action::{gamma_dimension, gamma_invariants, GammaLabel};

/// `V` as a module over the ground field.
pub fn trivial_module(space: &SuperSpace) -> Result<ModuleAction> {
    let k = clifford(0, space.field())?;
    ModuleAction::new(
        k,
        space.clone(),
        Side::Right,
        vec![SparseMatrix::identity(space.field(), space.dim())],
    )
}

/// `Γ^d Hom_B(V, W)` with each basis element realised as a map
/// `V^{⊗d} → W^{⊗d}`.
#[derive(Clone, Debug)]
pub struct GammaHom {
    pub source: ModuleAction,
    pub target: ModuleAction,
    pub d: usize,
    /// `Hom_B(V, W)`
    pub hom: Commutant,
    pub labels: Vec<GammaLabel>,
    /// realised basis maps
    pub maps: Vec<SuperMap>,
    span: Span,
}

impl GammaHom {
    pub fn dim(&self) -> usize {
        self.maps.len()
    }

    pub fn sdim(&self) -> (usize, usize) {
        let even = self.labels.iter().filter(|l| !l.parity().is_odd()).count();
        (even, self.dim() - even)
    }

    /// `Σ c_i φ_i`.
    pub fn realize(&self, coeffs: &[Scalar]) -> SparseMatrix {
        let field = self.source.field();
        let (r, c) = (
            self.target.space.dim().pow(self.d as u32),
            self.source.space.dim().pow(self.d as u32),
        );
        coeffs
            .iter()
            .zip(&self.maps)
            .filter(|(x, _)| !x.is_zero())
            .fold(SparseMatrix::zeros(field, r, c), |acc, (x, m)| {
                acc.add(&m.matrix.scale(x))
            })
    }

    /// Coordinates of a map in the realised basis, if it lies in the span.
    pub fn coords(&self, m: &SparseMatrix) -> Option<Vector> {
        self.span.coords(&m.flatten())
    }

    /// The invariant `id^{⊗d}` when `V = W`.
    pub fn identity(&self) -> Option<Vector> {
        let n = self.source.space.dim().pow(self.d as u32);
        self.coords(&SparseMatrix::identity(self.source.field(), n))
    }

    pub fn span(&self) -> &Span {
        &self.span
    }
}

fn check_supported(m: &ModuleAction) -> Result<()> {
    if m.side != Side::Right {
        return Err(Error::Unsupported(
            "divided-power homs are built for right modules".into(),
        ));
    }
    let f = m.field();
    if m.algebra.same_table(&clifford(0, f)?) || m.algebra.same_table(&clifford(1, f)?) {
        Ok(())
    } else {
        Err(Error::Unsupported(format!(
            "algebra {} (expected k or C(1))",
            m.algebra.name
        )))
    }
}

/// Builds `Γ^d Hom_B(V, W)` from the invariants of `Hom_B(V,W)^{⊗d}`, and
/// checks the result against the commutant of `B ≀ S_d` acting on
/// `V^{⊗d}` and `W^{⊗d}`.
pub fn gamma_hom(source: &ModuleAction, target: &ModuleAction, d: usize) -> Result<GammaHom> {
    check_supported(source)?;
    check_supported(target)?;
    if d == 0 {
        return Err(Error::OutOfRange("d ≥ 1".into()));
    }
    let field = source.field();
    let hom = commutant(source, target)?;
    let hspace = SuperSpace::new(
        field,
        hom.basis
            .iter()
            .map(|b| b.parity().expect("homogeneous"))
            .collect(),
        (1..=hom.dim()).map(|i| format!("h{i}")).collect(),
    )?;
    let gamma = gamma_invariants(&hspace, d)?;
    let dims = vec![hom.dim(); d];
    let products: Vec<(Vec<usize>, SuperMap)> = multi_indices(&dims)
        .map(|multi| {
            let factors: Vec<SuperMap> = multi.iter().map(|&i| hom.basis[i].clone()).collect();
            boxtimes_many(&factors).map(|m| (multi, m))
        })
        .collect::<Result<_>>()?;
    let src_space = products.first().map(|(_, m)| m.source.clone());
    let tgt_space = products.first().map(|(_, m)| m.target.clone());
    let mut maps = Vec::with_capacity(gamma.dim());
    for v in &gamma.vectors {
        let (Some(s), Some(t)) = (&src_space, &tgt_space) else {
            break;
        };
        let mut acc = SparseMatrix::zeros(field, t.dim(), s.dim());
        for (multi, m) in &products {
            let c = &v[gamma.power.position(multi)];
            if !c.is_zero() {
                acc = acc.add(&m.matrix.scale(c));
            }
        }
        maps.push(SuperMap::new(s.clone(), t.clone(), acc)?);
    }
    let ambient = target.space.dim().pow(d as u32) * source.space.dim().pow(d as u32);
    let flats: Vec<Vector> = maps.iter().map(|m| m.matrix.flatten()).collect();
    let span = Span::from_vectors(field, ambient, &flats);
    if span.dim() != maps.len() {
        return Err(Error::Audit(
            "realised divided-power maps are dependent".into(),
        ));
    }
    // second construction: homomorphisms of B ≀ S_d-modules
    let direct = commutant(&wreath_action(source, d)?, &wreath_action(target, d)?)?;
    if !direct.span().same_subspace(&span) {
        return Err(Error::Audit(format!(
            "Γ^d Hom (dim {}) differs from the wreath commutant (dim {})",
            span.dim(),
            direct.dim()
        )));
    }
    let (e, o) = hom.sdim();
    if maps.len() != gamma_dimension(e, o, d) {
        return Err(Error::Audit("divided-power dimension formula fails".into()));
    }
    Ok(GammaHom {
        source: source.clone(),
        target: target.clone(),
        d,
        hom,
        labels: gamma.labels,
        maps,
        span,
    })
}

/// `g ∘ f` for `f ∈ Γ^d Hom(V,P)` and `g ∈ Γ^d Hom(P,W)`, returned in the
/// basis of `Γ^d Hom(V,W)`.
pub fn gamma_compose(
    outer: &GammaHom,
    g: &[Scalar],
    inner: &GammaHom,
    f: &[Scalar],
    result: &GammaHom,
) -> Result<Vector> {
    if outer.d != inner.d || outer.d != result.d {
        return Err(Error::Shape("degrees differ".into()));
    }
    if !outer.source.space.compatible(&inner.target.space)
        || !outer.source.algebra.same_table(&inner.target.algebra)
        || outer.source.matrices != inner.target.matrices
    {
        return Err(Error::Shape("middle objects differ".into()));
    }
    if !result.source.space.compatible(&inner.source.space)
        || !result.target.space.compatible(&outer.target.space)
    {
        return Err(Error::Shape("result hom space does not match".into()));
    }
    let m = outer.realize(g).mul(&inner.realize(f));
    result
        .coords(&m)
        .ok_or_else(|| Error::Audit("composite is not a divided-power map".into()))
}

#[derive(Clone, Debug)]
pub struct SurjectivityReport {
    pub rank: usize,
    pub target_dim: usize,
    pub surjective: bool,
}

/// Rank of composition `Γ^d Hom(P,W) ⊗ Γ^d Hom(V,P) → Γ^d Hom(V,W)`.
pub fn surjectivity_report(
    v: &ModuleAction,
    p: &ModuleAction,
    w: &ModuleAction,
    d: usize,
) -> Result<SurjectivityReport> {
    let vp = gamma_hom(v, p, d)?;
    let pw = gamma_hom(p, w, d)?;
    let vw = gamma_hom(v, w, d)?;
    let field = v.field();
    let mut span = Span::new(field, vw.dim());
    'outer: for g in &pw.maps {
        for f in &vp.maps {
            let m = compose(g, f)?;
            let c = vw
                .coords(&m.matrix)
                .ok_or_else(|| Error::Audit("composite is not a divided-power map".into()))?;
            span.push(&c);
            if span.dim() == vw.dim() {
                break 'outer;
            }
        }
    }
    Ok(SurjectivityReport {
        rank: span.dim(),
        target_dim: vw.dim(),
        surjective: span.dim() == vw.dim(),
    })
}

#[derive(Clone, Debug)]
pub struct RestrictionReport {
    pub over_c1: (usize, usize),
    pub over_k: (usize, usize),
    pub contained: bool,
    pub composition_agrees: bool,
    pub identity_preserved: bool,
    /// `sdim V = (n, n)`, so `ΠV` and `V` have equal graded dimension
    pub parity_shift_dim_ok: bool,
}

/// Compares `Γ^d End_{C(1)}(V)` with `Γ^d End_k(V)` for `V = U(1)^{⊕n}`.
pub fn restriction_functor_check(
    n: usize,
    d: usize,
    field: crate::scalars::Field,
) -> Result<RestrictionReport> {
    let u = crate::modules_actions::u1_module(n, Side::Right, field)?;
    let k = trivial_module(&u.space)?;
    let gq = gamma_hom(&u, &u, d)?;
    let gk = gamma_hom(&k, &k, d)?;
    let incl: Vec<Vector> = gq
        .maps
        .iter()
        .map(|m| gk.coords(&m.matrix))
        .collect::<Option<_>>()
        .unwrap_or_default();
    let contained = incl.len() == gq.dim();
    let mut agrees = contained;
    if contained {
        for a in &gq.maps {
            for b in &gq.maps {
                let via_q = gq.coords(&a.matrix.mul(&b.matrix));
                let via_k = gk.coords(&a.matrix.mul(&b.matrix));
                match (via_q, via_k) {
                    (Some(cq), Some(ck)) => {
                        let pushed = gk.span().coords(&gq.realize(&cq).flatten());
                        agrees &= pushed.as_ref() == Some(&ck);
                    }
                    _ => agrees = false,
                }
            }
        }
    }
    let identity_preserved = match (gq.identity(), gk.identity()) {
        (Some(iq), Some(ik)) => gk.coords(&gq.realize(&iq)) == Some(ik),
        _ => false,
    };
    let (e, o) = u.space.sdim();
    Ok(RestrictionReport {
        over_c1: gq.sdim(),
        over_k: gk.sdim(),
        contained,
        composition_agrees: agrees,
        identity_preserved,
        parity_shift_dim_ok: e == o,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modules_actions::u1_module;
    use crate::scalars::Field;
    use crate::super_linear::make_space;

    fn q() -> Field {
        Field::rationals()
    }

    #[test]
    fn examples() {
        let k11 = trivial_module(&make_space(q(), 1, 1)).unwrap();
        assert_eq!(gamma_hom(&k11, &k11, 2).unwrap().dim(), 8);
        let u = u1_module(1, Side::Right, q()).unwrap();
        assert_eq!(gamma_hom(&u, &u, 2).unwrap().dim(), 2);
        let u2 = u1_module(2, Side::Right, Field::gf(3)).unwrap();
        let u1 = u1_module(1, Side::Right, Field::gf(3)).unwrap();
        assert_eq!(gamma_hom(&u1, &u2, 1).unwrap().sdim(), (2, 2));
    }

    #[test]
    fn composition_with_identity_and_closure() {
        let u = u1_module(1, Side::Right, q()).unwrap();
        let g = gamma_hom(&u, &u, 2).unwrap();
        let id = g.identity().unwrap();
        for i in 0..g.dim() {
            let mut e = vec![q().zero(); g.dim()];
            e[i] = q().one();
            assert_eq!(gamma_compose(&g, &id, &g, &e, &g).unwrap(), e);
            assert_eq!(gamma_compose(&g, &e, &g, &id, &g).unwrap(), e);
        }
    }

    #[test]
    fn surjectivity_examples() {
        let f = Field::gf(3);
        let u = u1_module(1, Side::Right, f).unwrap();
        let p = u1_module(2, Side::Right, f).unwrap();
        let r = surjectivity_report(&u, &p, &u, 2).unwrap();
        assert!(r.surjective);
        assert_eq!(r.rank, 2);
        let k11 = trivial_module(&make_space(f, 1, 1)).unwrap();
        let k22 = trivial_module(&make_space(f, 2, 2)).unwrap();
        let r = surjectivity_report(&k11, &k22, &k11, 2).unwrap();
        assert_eq!((r.rank, r.surjective), (8, true));
    }

    #[test]
    fn restriction() {
        let r = restriction_functor_check(1, 1, q()).unwrap();
        assert_eq!((r.over_c1, r.over_k), ((1, 1), (2, 2)));
        assert!(r.contained && r.composition_agrees && r.identity_preserved);
        let r = restriction_functor_check(1, 2, q()).unwrap();
        assert_eq!(r.over_c1.0 + r.over_c1.1, 2);
        assert_eq!(r.over_k.0 + r.over_k.1, 8);
        assert!(r.contained && r.composition_agrees);
    }

    #[test]
    fn left_modules_unsupported() {
        let u = u1_module(1, Side::Left, q()).unwrap();
        assert!(matches!(gamma_hom(&u, &u, 1), Err(Error::Unsupported(_))));
    }
}
