//! Finite-dimensional superalgebras given by structure constants: Clifford
//! algebras, group algebras of symmetric groups, tensor products, wreath
//! products `A ≀ S_d`, the Sergeev superalgebra `W(d) = C(1) ≀ S_d`, minus
//! twists, and the antiautomorphism `τ_d`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{zero_vector, Span, SparseMatrix, Vector};
use crate::perm::Permutation;
use crate::scalars::{Field, Scalar};
use crate::super_linear::{multi_indices, Parity, SuperSpace};
use crate::sym_action::place_permutation;

/// Exhaustive triple audits up to this dimension; random triples above.
pub const EXHAUSTIVE_AUDIT_DIM: usize = 64;
const SAMPLED_TRIPLES: usize = 4000;

/// Records how a wreath product's basis is laid out: permutation-major (in
/// lexicographic one-line order), then multi-indices of `A^{⊗d}`.
#[derive(Clone, Debug)]
pub struct WreathLayout {
    pub base: Box<SuperAlgebra>,
    pub d: usize,
}

impl WreathLayout {
    pub fn block(&self) -> usize {
        self.base.dim().pow(self.d as u32)
    }

    pub fn index(&self, sigma: &Permutation, multi: &[usize]) -> usize {
        let a = self.base.dim();
        sigma.lex_rank() * self.block() + multi.iter().fold(0, |acc, &k| acc * a + k)
    }

    pub fn split(&self, idx: usize) -> (Permutation, Vec<usize>) {
        let a = self.base.dim();
        let sigma = Permutation::all(self.d).swap_remove(idx / self.block());
        let mut lex = idx % self.block();
        let mut multi = vec![0; self.d];
        for k in (0..self.d).rev() {
            multi[k] = lex % a;
            lex /= a;
        }
        (sigma, multi)
    }
}

/// A superalgebra with a homogeneous basis.
#[derive(Clone, Debug)]
pub struct SuperAlgebra {
    pub name: String,
    field: Field,
    parities: Vec<Parity>,
    labels: Vec<String>,
    unit: Vector,
    /// `table[i*dim + j]` lists `(k, c_{ij}^k)` with nonzero coefficient
    table: Vec<Vec<(usize, Scalar)>>,
    /// elements generating the algebra (used to cut down commutant systems)
    generators: Vec<Vector>,
    pub wreath: Option<WreathLayout>,
}

impl SuperAlgebra {
    /// Builds from structure constants and audits the result.
    pub fn new(
        name: impl Into<String>,
        field: Field,
        parities: Vec<Parity>,
        labels: Vec<String>,
        unit: Vector,
        constants: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
        generators: Vec<Vector>,
    ) -> Result<Self> {
        let alg = Self::new_unchecked(name, field, parities, labels, unit, constants, generators)?;
        alg.audit()?;
        Ok(alg)
    }

    fn new_unchecked(
        name: impl Into<String>,
        field: Field,
        parities: Vec<Parity>,
        labels: Vec<String>,
        unit: Vector,
        constants: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
        generators: Vec<Vector>,
    ) -> Result<Self> {
        let n = parities.len();
        if labels.len() != n || unit.len() != n {
            return Err(Error::Shape("algebra data lengths disagree".into()));
        }
        let mut dense: Vec<std::collections::BTreeMap<usize, Scalar>> =
            vec![Default::default(); n * n];
        for (i, j, k, c) in constants {
            if i >= n || j >= n || k >= n {
                return Err(Error::OutOfRange(format!(
                    "constant ({i},{j},{k}) in dim {n}"
                )));
            }
            if c.field() != field {
                return Err(Error::FieldMismatch(
                    field.to_string(),
                    c.field().to_string(),
                ));
            }
            *dense[i * n + j].entry(k).or_insert_with(|| field.zero()) += &c;
        }
        let table = dense
            .into_iter()
            .map(|m| m.into_iter().filter(|(_, c)| !c.is_zero()).collect())
            .collect();
        Ok(SuperAlgebra {
            name: name.into(),
            field,
            parities,
            labels,
            unit,
            table,
            generators,
            wreath: None,
        })
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
    pub fn unit(&self) -> &Vector {
        &self.unit
    }
    pub fn generators(&self) -> &[Vector] {
        &self.generators
    }
    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `e_i e_j` as sparse `(k, c)` pairs.
    pub fn product_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim() + j]
    }

    /// All nonzero structure constants `(i, j, k, c_{ij}^k)`.
    pub fn constants(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> + '_ {
        let n = self.dim();
        self.table
            .iter()
            .enumerate()
            .flat_map(move |(ij, row)| row.iter().map(move |(k, c)| (ij / n, ij % n, *k, c)))
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        let mut v = zero_vector(self.field, self.dim());
        v[i] = self.field.one();
        v
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.field, self.dim());
        let ys: Vec<(usize, &Scalar)> =
            y.iter().enumerate().filter(|(_, b)| !b.is_zero()).collect();
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for &(j, b) in &ys {
                let ab = a * b;
                for (k, c) in self.product_basis(i, j) {
                    out[*k] += &(&ab * c);
                }
            }
        }
        out
    }

    /// Parity of a vector if homogeneous (zero counts as even).
    pub fn element_parity(&self, x: &[Scalar]) -> Option<Parity> {
        let mut seen = None;
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            match seen {
                None => seen = Some(self.parities[i]),
                Some(p) if p != self.parities[i] => return None,
                _ => {}
            }
        }
        Some(seen.unwrap_or(Parity::Even))
    }

    /// Underlying superspace, re-sorted even-first; the returned vector maps
    /// algebra basis indices to positions in the space.
    pub fn as_space(&self) -> (SuperSpace, Vec<usize>) {
        SuperSpace::from_raw(self.field, self.parities.clone(), self.labels.clone())
    }

    /// Unit laws, parity additivity and associativity (exhaustive up to
    /// [`EXHAUSTIVE_AUDIT_DIM`], sampled above).
    pub fn audit(&self) -> Result<()> {
        let n = self.dim();
        for (i, j, k, _) in self.constants() {
            if self.parities[k] != self.parities[i] + self.parities[j] {
                return Err(Error::Audit(format!(
                    "{}: {}·{} has a component of the wrong parity",
                    self.name, self.labels[i], self.labels[j]
                )));
            }
        }
        if self.element_parity(&self.unit) != Some(Parity::Even) {
            return Err(Error::Audit(format!("{}: unit not even", self.name)));
        }
        for i in 0..n {
            let e = self.basis_vector(i);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                return Err(Error::Audit(format!(
                    "{}: unit law fails at {}",
                    self.name, self.labels[i]
                )));
            }
        }
        // sparse triple products straight from the table
        let triple = |left: bool, i: usize, j: usize, k: usize| {
            let mut acc: std::collections::BTreeMap<usize, Scalar> = Default::default();
            let (first, rest) = if left {
                (self.product_basis(i, j), k)
            } else {
                (self.product_basis(j, k), i)
            };
            for (l, c) in first {
                let terms = if left {
                    self.product_basis(*l, rest)
                } else {
                    self.product_basis(rest, *l)
                };
                for (m, x) in terms {
                    *acc.entry(*m).or_insert_with(|| self.field.zero()) += &(c * x);
                }
            }
            acc.retain(|_, x| !x.is_zero());
            acc
        };
        let check = |i: usize, j: usize, k: usize| -> Result<()> {
            if triple(true, i, j, k) != triple(false, i, j, k) {
                return Err(Error::Audit(format!(
                    "{}: associativity fails on ({}, {}, {})",
                    self.name, self.labels[i], self.labels[j], self.labels[k]
                )));
            }
            Ok(())
        };
        if n <= EXHAUSTIVE_AUDIT_DIM {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        check(i, j, k)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..SAMPLED_TRIPLES {
                check(
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                )?;
            }
        }
        Ok(())
    }

    /// True when the subalgebra generated by [`SuperAlgebra::generators`] is
    /// everything.
    pub fn generators_span(&self) -> bool {
        let n = self.dim();
        let mut span = Span::new(self.field, n);
        let mut frontier = vec![self.unit.clone()];
        span.push(&self.unit);
        while let Some(x) = frontier.pop() {
            for g in &self.generators {
                let y = self.mul(&x, g);
                if span.push(&y) {
                    frontier.push(y);
                }
            }
        }
        span.dim() == n
    }

    /// Builds the algebra spanned by a set of homogeneous square matrices
    /// closed under multiplication and containing the identity.
    pub fn from_matrix_basis(
        name: impl Into<String>,
        field: Field,
        parities: Vec<Parity>,
        labels: Vec<String>,
        mats: &[SparseMatrix],
    ) -> Result<Self> {
        let name = name.into();
        let n = mats.len();
        let size = mats.first().map_or(0, SparseMatrix::rows);
        let flats: Vec<Vector> = mats.iter().map(SparseMatrix::flatten).collect();
        let span = Span::from_vectors(field, size * size, &flats);
        if span.dim() != n {
            return Err(Error::Audit(format!("{name}: matrix basis is dependent")));
        }
        let unit = span
            .coords(&SparseMatrix::identity(field, size).flatten())
            .ok_or_else(|| Error::Audit(format!("{name}: identity not in span")))?;
        let mut constants = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let prod = mats[i].mul(&mats[j]).flatten();
                let c = span.coords(&prod).ok_or_else(|| {
                    Error::Audit(format!("{name}: span not closed under products"))
                })?;
                constants.extend(
                    c.into_iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .map(|(k, x)| (i, j, k, x)),
                );
            }
        }
        let generators = (0..n)
            .map(|i| {
                let mut v = zero_vector(field, n);
                v[i] = field.one();
                v
            })
            .collect();
        Self::new(name, field, parities, labels, unit, constants, generators)
    }

    /// Permutation element `σ ⊗ 1` of a wreath product.
    pub fn wreath_permutation(&self, sigma: &Permutation) -> Result<Vector> {
        let w = self.wreath_layout()?;
        let units = vec![w.base.unit.clone(); w.d];
        Ok(self.wreath_element(sigma, &units))
    }

    /// `e ⊗ 1 ⊗ … ⊗ a ⊗ … ⊗ 1` with `a` in the given slot (0-based).
    pub fn wreath_slot(&self, slot: usize, a: &[Scalar]) -> Result<Vector> {
        let w = self.wreath_layout()?;
        if slot >= w.d {
            return Err(Error::OutOfRange(format!("slot {slot} in degree {}", w.d)));
        }
        let mut factors = vec![w.base.unit.clone(); w.d];
        factors[slot] = a.to_vec();
        Ok(self.wreath_element(&Permutation::identity(w.d), &factors))
    }

    /// `σ ⊗ a₁ ⊗ … ⊗ a_d` for arbitrary factor vectors.
    pub fn wreath_element(&self, sigma: &Permutation, factors: &[Vector]) -> Vector {
        let w = self.wreath.as_ref().expect("wreath product");
        let dims = vec![w.base.dim(); w.d];
        let mut out = zero_vector(self.field, self.dim());
        for multi in multi_indices(&dims) {
            let mut c = self.field.one();
            for (k, &i) in multi.iter().enumerate() {
                c *= &factors[k][i];
                if c.is_zero() {
                    break;
                }
            }
            if !c.is_zero() {
                out[w.index(sigma, &multi)] = c;
            }
        }
        out
    }

    pub fn wreath_layout(&self) -> Result<&WreathLayout> {
        self.wreath
            .as_ref()
            .ok_or_else(|| Error::AlgebraMismatch(format!("{} is not a wreath product", self.name)))
    }

    /// Structure constants equal up to field, name and labels.
    pub fn same_table(&self, other: &SuperAlgebra) -> bool {
        self.field == other.field
            && self.parities == other.parities
            && self.unit == other.unit
            && self.table == other.table
    }
}

/// An even linear map between superalgebras, multiplicative or (when `anti`)
/// anti-multiplicative.
#[derive(Clone, Debug)]
pub struct AlgebraMap {
    pub source: SuperAlgebra,
    pub target: SuperAlgebra,
    /// `target.dim × source.dim`
    pub matrix: SparseMatrix,
    pub anti: bool,
}

impl AlgebraMap {
    /// Builds and checks the map.
    pub fn new(
        source: SuperAlgebra,
        target: SuperAlgebra,
        matrix: SparseMatrix,
        anti: bool,
    ) -> Result<Self> {
        let f = AlgebraMap {
            source,
            target,
            matrix,
            anti,
        };
        f.check()?;
        Ok(f)
    }

    /// Builds the map sending each source basis element `e_i` to `images[i]`.
    pub fn from_images(
        source: SuperAlgebra,
        target: SuperAlgebra,
        images: &[Vector],
        anti: bool,
    ) -> Result<Self> {
        let m = SparseMatrix::from_columns(source.field(), target.dim(), images);
        Self::new(source, target, m, anti)
    }

    pub fn apply(&self, x: &[Scalar]) -> Vector {
        self.matrix.apply(x)
    }

    /// Evenness, unit preservation and (anti)multiplicativity on basis pairs
    /// (sampled above [`EXHAUSTIVE_AUDIT_DIM`]).
    pub fn check(&self) -> Result<()> {
        let (s, t) = (&self.source, &self.target);
        if s.field() != t.field() {
            return Err(Error::FieldMismatch(
                s.field().to_string(),
                t.field().to_string(),
            ));
        }
        if self.matrix.rows() != t.dim() || self.matrix.cols() != s.dim() {
            return Err(Error::Shape("algebra map matrix".into()));
        }
        for (r, c, _) in self.matrix.triples() {
            if t.parity(r) != s.parity(c) {
                return Err(Error::Audit(format!(
                    "map {} → {} is not even",
                    s.name, t.name
                )));
            }
        }
        if self.apply(s.unit()) != *t.unit() {
            return Err(Error::Audit(format!(
                "map {} → {} does not preserve the unit",
                s.name, t.name
            )));
        }
        let images: Vec<Vector> = (0..s.dim())
            .map(|i| self.apply(&s.basis_vector(i)))
            .collect();
        let check = |i: usize, j: usize| -> Result<()> {
            let lhs = self.apply(&s.mul(&s.basis_vector(i), &s.basis_vector(j)));
            let rhs = if self.anti {
                t.mul(&images[j], &images[i])
            } else {
                t.mul(&images[i], &images[j])
            };
            if lhs != rhs {
                return Err(Error::Audit(format!(
                    "map {} → {} not {}multiplicative on ({}, {})",
                    s.name,
                    t.name,
                    if self.anti { "anti-" } else { "" },
                    s.labels()[i],
                    s.labels()[j]
                )));
            }
            Ok(())
        };
        if s.dim() <= EXHAUSTIVE_AUDIT_DIM {
            for i in 0..s.dim() {
                for j in 0..s.dim() {
                    check(i, j)?;
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0xa1);
            for _ in 0..SAMPLED_TRIPLES {
                check(rng.gen_range(0..s.dim()), rng.gen_range(0..s.dim()))?;
            }
        }
        Ok(())
    }

    pub fn is_bijective(&self) -> bool {
        self.source.dim() == self.target.dim() && self.matrix.to_dense().rank() == self.source.dim()
    }
}

fn clifford_label(mask: u32, d: usize) -> String {
    if mask == 0 {
        return "1".into();
    }
    (0..d)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| format!("c{}", i + 1))
        .collect()
}

/// Square-free monomials on `d` letters, by size then lexicographically.
fn clifford_masks(d: usize) -> Vec<u32> {
    let mut masks: Vec<u32> = (0..1u32 << d).collect();
    masks.sort_by_key(|&m| {
        let sorted: Vec<u32> = (0..d as u32).filter(|i| m >> i & 1 == 1).collect();
        (m.count_ones(), sorted)
    });
    masks
}

/// The Clifford superalgebra `C(d)` on odd generators `c₁…c_d` with
/// `c_i² = 1` and `c_i c_j = -c_j c_i`.
pub fn clifford(d: usize, field: Field) -> Result<SuperAlgebra> {
    let masks = clifford_masks(d);
    let pos: std::collections::HashMap<u32, usize> =
        masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let mut constants = Vec::new();
    for (i, &s) in masks.iter().enumerate() {
        for (j, &t) in masks.iter().enumerate() {
            // c_S c_T: each c_t passes the c_s with s > t
            let swaps: u32 = (0..d)
                .filter(|&b| t >> b & 1 == 1)
                .map(|b| (s >> (b + 1)).count_ones())
                .sum();
            constants.push((i, j, pos[&(s ^ t)], field.sign(swaps % 2 == 1)));
        }
    }
    let parities = masks
        .iter()
        .map(|m| Parity::from_bit((m.count_ones() % 2) as u8))
        .collect();
    let labels = masks.iter().map(|&m| clifford_label(m, d)).collect();
    let n = masks.len();
    let basis = |i: usize| {
        let mut v = zero_vector(field, n);
        v[i] = field.one();
        v
    };
    let generators = (0..d).map(|i| basis(pos[&(1 << i)])).collect();
    SuperAlgebra::new(
        format!("C({d})"),
        field,
        parities,
        labels,
        basis(0),
        constants,
        generators,
    )
}

/// `k^n` with orthogonal idempotents `e₁…e_n`, all even.
pub fn diagonal_algebra(n: usize, field: Field) -> Result<SuperAlgebra> {
    let basis = |i: usize| {
        let mut v = zero_vector(field, n);
        v[i] = field.one();
        v
    };
    let unit = vec![field.one(); n];
    let labels = (1..=n).map(|i| format!("e{i}")).collect();
    let name = vec!["k"; n.max(1)].join("⊕");
    SuperAlgebra::new(
        name,
        field,
        vec![Parity::Even; n],
        labels,
        unit,
        (0..n).map(|i| (i, i, i, field.one())),
        (0..n).map(basis).collect(),
    )
}

/// `C(1)` realised as the matrices `[[a, b], [b, a]]` with even part the
/// diagonal and odd part the antidiagonal, together with the isomorphism
/// from [`clifford`]`(1)`.
pub fn clifford_matrix_model(field: Field) -> Result<(SuperAlgebra, AlgebraMap)> {
    let one = field.one();
    let ident = SparseMatrix::identity(field, 2);
    let j1 = SparseMatrix::from_triples(field, 2, 2, [(0, 1, one.clone()), (1, 0, one)]);
    let model = SuperAlgebra::from_matrix_basis(
        "C(1) matrices",
        field,
        vec![Parity::Even, Parity::Odd],
        vec!["I".into(), "J1".into()],
        &[ident, j1],
    )?;
    let c1 = clifford(1, field)?;
    let iso = AlgebraMap::new(c1, model.clone(), SparseMatrix::identity(field, 2), false)?;
    if !iso.is_bijective() {
        return Err(Error::Audit(
            "matrix model of C(1) is not isomorphic".into(),
        ));
    }
    Ok((model, iso))
}

/// `A ⊗ B` with `(a⊗b)(a'⊗b') = (-1)^{|b||a'|} aa' ⊗ bb'`; basis pairs in
/// lexicographic order.
pub fn tensor_algebra(a: &SuperAlgebra, b: &SuperAlgebra) -> Result<SuperAlgebra> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch(
            a.field().to_string(),
            b.field().to_string(),
        ));
    }
    let field = a.field();
    let (na, nb) = (a.dim(), b.dim());
    let idx = |i: usize, j: usize| i * nb + j;
    let mut constants = Vec::new();
    for i in 0..na {
        for j in 0..nb {
            for i2 in 0..na {
                for j2 in 0..nb {
                    let neg = b.parity(j).times(a.parity(i2));
                    for (k, x) in a.product_basis(i, i2) {
                        for (l, y) in b.product_basis(j, j2) {
                            let mut c = x * y;
                            if neg {
                                c.negate();
                            }
                            constants.push((idx(i, j), idx(i2, j2), idx(*k, *l), c));
                        }
                    }
                }
            }
        }
    }
    let parities = (0..na * nb)
        .map(|ij| a.parity(ij / nb) + b.parity(ij % nb))
        .collect();
    let labels = (0..na * nb)
        .map(|ij| format!("{}⊗{}", a.labels()[ij / nb], b.labels()[ij % nb]))
        .collect();
    let kron = |x: &[Scalar], y: &[Scalar]| -> Vector {
        let mut v = zero_vector(field, na * nb);
        for (i, p) in x.iter().enumerate() {
            for (j, q) in y.iter().enumerate() {
                v[idx(i, j)] = p * q;
            }
        }
        v
    };
    let mut generators: Vec<Vector> = a.generators().iter().map(|g| kron(g, b.unit())).collect();
    generators.extend(b.generators().iter().map(|h| kron(a.unit(), h)));
    SuperAlgebra::new(
        format!("{}⊗{}", a.name, b.name),
        field,
        parities,
        labels,
        kron(a.unit(), b.unit()),
        constants,
        generators,
    )
}

/// The symmetric swap `a⊗b ↦ (-1)^{|a||b|} b⊗a` as a map `A⊗B → B⊗A`,
/// checked to be an algebra isomorphism.
pub fn swap_isomorphism(a: &SuperAlgebra, b: &SuperAlgebra) -> Result<AlgebraMap> {
    let ab = tensor_algebra(a, b)?;
    let ba = tensor_algebra(b, a)?;
    let (na, nb) = (a.dim(), b.dim());
    let field = a.field();
    let m = SparseMatrix::from_triples(
        field,
        na * nb,
        na * nb,
        (0..na).flat_map(|i| {
            (0..nb).map(move |j| {
                (
                    j * na + i,
                    i * nb + j,
                    field.sign(a.parity(i).times(b.parity(j))),
                )
            })
        }),
    );
    let f = AlgebraMap::new(ab, ba, m, false)?;
    if !f.is_bijective() {
        return Err(Error::Audit("swap is not bijective".into()));
    }
    Ok(f)
}

/// The isomorphism `C(d₁+d₂) → C(d₁) ⊗ C(d₂)`, `c_i ↦ c_i⊗1`,
/// `c_{d₁+j} ↦ 1⊗c_j`.
pub fn clifford_factorization(d1: usize, d2: usize, field: Field) -> Result<AlgebraMap> {
    let src = clifford(d1 + d2, field)?;
    let a = clifford(d1, field)?;
    let b = clifford(d2, field)?;
    let tgt = tensor_algebra(&a, &b)?;
    let gen_images: Vec<Vector> = tgt.generators().to_vec();
    let masks = clifford_masks(d1 + d2);
    let images: Vec<Vector> = masks
        .iter()
        .map(|&m| {
            (0..d1 + d2)
                .filter(|i| m >> i & 1 == 1)
                .fold(tgt.unit().clone(), |acc, i| tgt.mul(&acc, &gen_images[i]))
        })
        .collect();
    let f = AlgebraMap::from_images(src, tgt, &images, false)?;
    if !f.is_bijective() {
        return Err(Error::Audit(
            "Clifford factorisation is not bijective".into(),
        ));
    }
    Ok(f)
}

/// The group algebra `kS_d`, basis in lexicographic one-line order.
pub fn group_algebra(d: usize, field: Field) -> Result<SuperAlgebra> {
    if d == 0 {
        return Err(Error::OutOfRange("group algebra needs d ≥ 1".into()));
    }
    let perms = Permutation::all(d);
    let n = perms.len();
    let constants = perms.iter().enumerate().flat_map(|(i, s)| {
        perms
            .iter()
            .enumerate()
            .map(move |(j, t)| (i, j, s.compose(t).lex_rank(), field.one()))
    });
    let basis = |i: usize| {
        let mut v = zero_vector(field, n);
        v[i] = field.one();
        v
    };
    let generators = (0..d - 1)
        .map(|i| basis(Permutation::simple(d, i).lex_rank()))
        .collect();
    SuperAlgebra::new(
        format!("kS{d}"),
        field,
        vec![Parity::Even; n],
        perms.iter().map(ToString::to_string).collect(),
        basis(0),
        constants.collect::<Vec<_>>(),
        generators,
    )
}

/// Product of basis tensors in `A^{⊗d}`:
/// `(a₁⊗…⊗a_d)(b₁⊗…⊗b_d) = (-1)^{Σ_{i>j}|a_i||b_j|} a₁b₁⊗…⊗a_db_d`.
pub fn tensor_power_product(
    a: &SuperAlgebra,
    x: &[usize],
    y: &[usize],
) -> Vec<(Vec<usize>, Scalar)> {
    let field = a.field();
    let mut neg = false;
    let mut odd_b = false;
    for k in 0..x.len() {
        // odd_b holds the parity of b_1..b_{k-1}
        neg ^= a.parity(x[k]).is_odd() && odd_b;
        odd_b ^= a.parity(y[k]).is_odd();
    }
    let mut acc: Vec<(Vec<usize>, Scalar)> = vec![(Vec::new(), field.sign(neg))];
    for k in 0..x.len() {
        let prods = a.product_basis(x[k], y[k]);
        let mut next = Vec::with_capacity(acc.len() * prods.len());
        for (m, c) in &acc {
            for (z, v) in prods {
                let mut m2 = m.clone();
                m2.push(*z);
                next.push((m2, c * v));
            }
        }
        acc = next;
    }
    acc
}

/// `A ≀ S_d`: the space `kS_d ⊗ A^{⊗d}` with
/// `(σ⊗a)(σ'⊗b) = σσ' ⊗ (a·σ')b`, where `a·σ'` is the signed place
/// permutation.
pub fn wreath(a: &SuperAlgebra, d: usize) -> Result<SuperAlgebra> {
    if d == 0 {
        return Err(Error::OutOfRange("wreath product needs d ≥ 1".into()));
    }
    let field = a.field();
    let layout = WreathLayout {
        base: Box::new(a.clone()),
        d,
    };
    let perms = Permutation::all(d);
    let dims = vec![a.dim(); d];
    let multis: Vec<Vec<usize>> = multi_indices(&dims).collect();
    let par = |multi: &[usize]| multi.iter().fold(Parity::Even, |p, &k| p + a.parity(k));
    let mut constants = Vec::new();
    for s in &perms {
        for x in &multis {
            let i = layout.index(s, x);
            for t in &perms {
                let st = s.compose(t);
                let (xt, neg) = place_permutation(x, |k| a.parity(k), t);
                for y in &multis {
                    let j = layout.index(t, y);
                    for (z, mut c) in tensor_power_product(a, &xt, y) {
                        if neg {
                            c.negate();
                        }
                        constants.push((i, j, layout.index(&st, &z), c));
                    }
                }
            }
        }
    }
    let mut parities = Vec::new();
    let mut labels = Vec::new();
    for s in &perms {
        for x in &multis {
            parities.push(par(x));
            let factors: Vec<&str> = x.iter().map(|&k| a.labels()[k].as_str()).collect();
            labels.push(format!("{s}⊗{}", factors.join("⊗")));
        }
    }
    let n = parities.len();
    let mut alg = SuperAlgebra::new_unchecked(
        format!("{}≀S{d}", a.name),
        field,
        parities,
        labels,
        zero_vector(field, n),
        constants,
        Vec::new(),
    )?;
    alg.wreath = Some(layout);
    alg.unit = alg.wreath_permutation(&Permutation::identity(d))?;
    let mut generators: Vec<Vector> = (0..d - 1)
        .map(|i| alg.wreath_permutation(&Permutation::simple(d, i)))
        .collect::<Result<_>>()?;
    for g in a.generators() {
        generators.push(alg.wreath_slot(0, g)?);
    }
    alg.generators = generators;
    alg.audit()?;
    Ok(alg)
}

/// The Sergeev superalgebra `W(d) = C(1) ≀ S_d`.
pub fn sergeev(d: usize, field: Field) -> Result<SuperAlgebra> {
    let mut w = wreath(&clifford(1, field)?, d)?;
    w.name = format!("W({d})");
    Ok(w)
}

/// `c_i ∈ W(d)` (1-based `i`).
pub fn sergeev_c(w: &SuperAlgebra, i: usize) -> Result<Vector> {
    let base = &w.wreath_layout()?.base;
    let c = base
        .index_of_label("c1")
        .ok_or_else(|| Error::AlgebraMismatch(format!("{} is not built on C(1)", w.name)))?;
    if i == 0 {
        return Err(Error::OutOfRange("Clifford generators are 1-based".into()));
    }
    w.wreath_slot(i - 1, &base.basis_vector(c))
}

/// `A^-` with product `a·b = (-1)^{|a||b|} ab`.
pub fn minus_algebra(a: &SuperAlgebra) -> SuperAlgebra {
    let mut out = a.clone();
    let n = a.dim();
    for (ij, row) in out.table.iter_mut().enumerate() {
        if a.parity(ij / n).times(a.parity(ij % n)) {
            row.iter_mut().for_each(|(_, c)| c.negate());
        }
    }
    out.name = match a.name.strip_suffix('⁻') {
        Some(base) => base.to_string(),
        None => format!("{}⁻", a.name),
    };
    out
}

/// Extends an antiautomorphism `τ` of `A` to `A ≀ S_d`: on `A^{⊗d}`,
/// `τ(a₁⊗…⊗a_d) = (-1)^{Σ_{i<j}|a_i||a_j|} τ(a₁)⊗…⊗τ(a_d)`, and
/// `τ(σ⊗a) = σ^{-1} ⊗ τ(a)·σ^{-1}` (so each `s_i` is fixed).
pub fn tau_antiautomorphism(a: &SuperAlgebra, tau: &AlgebraMap, d: usize) -> Result<AlgebraMap> {
    if !tau.anti || !a.same_table(&tau.source) || !a.same_table(&tau.target) {
        return Err(Error::AlgebraMismatch(
            "τ must be an antiautomorphism of A".into(),
        ));
    }
    tau.check()?;
    let w = wreath(a, d)?;
    let layout = w.wreath_layout()?.clone();
    let field = a.field();
    let tau_cols: Vec<Vector> = (0..a.dim())
        .map(|i| tau.apply(&a.basis_vector(i)))
        .collect();
    let images: Vec<Vector> = (0..w.dim())
        .map(|idx| {
            let (sigma, multi) = layout.split(idx);
            let inv = sigma.inverse();
            let odd: Vec<bool> = multi.iter().map(|&k| a.parity(k).is_odd()).collect();
            let pairs = (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j)));
            let neg = pairs.filter(|&(i, j)| odd[i] && odd[j]).count() % 2 == 1;
            let mut out = zero_vector(field, w.dim());
            // expand τ(a₁)⊗…⊗τ(a_d) and apply ·σ^{-1} termwise
            let dims = vec![a.dim(); d];
            for z in multi_indices(&dims) {
                let mut c = field.sign(neg);
                for k in 0..d {
                    c *= &tau_cols[multi[k]][z[k]];
                    if c.is_zero() {
                        break;
                    }
                }
                if c.is_zero() {
                    continue;
                }
                let (zp, n2) = place_permutation(&z, |k| a.parity(k), &inv);
                if n2 {
                    c.negate();
                }
                out[layout.index(&inv, &zp)] += &c;
            }
            out
        })
        .collect();
    AlgebraMap::from_images(w.clone(), w, &images, true)
}

/// Checks whether the span of the given algebra elements is a subalgebra.
pub fn is_subalgebra(a: &SuperAlgebra, elems: &[Vector]) -> bool {
    let span = Span::from_vectors(a.field(), a.dim(), elems);
    elems
        .iter()
        .all(|x| elems.iter().all(|y| span.contains(&a.mul(x, y))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rationals()
    }

    fn el(a: &SuperAlgebra, label: &str) -> Vector {
        a.basis_vector(
            a.index_of_label(label)
                .unwrap_or_else(|| panic!("no {label}")),
        )
    }

    #[test]
    fn clifford_small() {
        let c0 = clifford(0, q()).unwrap();
        assert_eq!(c0.dim(), 1);
        let c1 = clifford(1, q()).unwrap();
        assert_eq!(c1.mul(&el(&c1, "c1"), &el(&c1, "c1")), el(&c1, "1"));
        let c2 = clifford(2, Field::gf(3)).unwrap();
        assert_eq!(c2.dim(), 4);
        let c12 = el(&c2, "c1c2");
        let minus_one: Vector = el(&c2, "1").iter().map(|x| -x).collect();
        assert_eq!(c2.mul(&c12, &c12), minus_one);
        let c21 = c2.mul(&el(&c2, "c2"), &el(&c2, "c1"));
        assert_eq!(c21, el(&c2, "c1c2").iter().map(|x| -x).collect::<Vector>());
        assert!(c2.generators_span());
        assert_eq!(clifford(4, q()).unwrap().dim(), 16);
    }

    #[test]
    fn matrix_model() {
        let (m, iso) = clifford_matrix_model(q()).unwrap();
        assert!(iso.is_bijective());
        assert!(m.same_table(&clifford(1, q()).unwrap()));
    }

    #[test]
    fn tensor_signs_in_c1_c1() {
        let c = clifford(1, q()).unwrap();
        let t = tensor_algebra(&c, &c).unwrap();
        let c1 = el(&t, "c1⊗1");
        let c2 = el(&t, "1⊗c1");
        assert_eq!(t.mul(&c1, &c2), el(&t, "c1⊗c1"));
        assert_eq!(
            t.mul(&c2, &c1),
            el(&t, "c1⊗c1").iter().map(|x| -x).collect::<Vector>()
        );
        assert!(swap_isomorphism(&c, &c).unwrap().is_bijective());
        let k = clifford(0, q()).unwrap();
        assert!(tensor_algebra(&c, &k).unwrap().same_table(&c));
    }

    #[test]
    fn clifford_factorisations() {
        for (a, b) in [(1, 1), (0, 2), (2, 1), (1, 2)] {
            let f = clifford_factorization(a, b, q()).unwrap();
            assert!(f.is_bijective());
        }
        let f = clifford_factorization(0, 2, q()).unwrap();
        assert_eq!(f.matrix, SparseMatrix::identity(q(), 4));
    }

    #[test]
    fn group_algebras() {
        assert_eq!(group_algebra(1, q()).unwrap().dim(), 1);
        let g = group_algebra(3, q()).unwrap();
        assert_eq!(g.dim(), 6);
        let s1 = g.generators()[0].clone();
        let s2 = g.generators()[1].clone();
        assert_eq!(g.mul(&g.mul(&s1, &s2), &s1), g.mul(&g.mul(&s2, &s1), &s2));
        assert_eq!(g.mul(&s1, &s1), *g.unit());
        assert!(wreath(&clifford(0, q()).unwrap(), 3)
            .unwrap()
            .same_table(&g));
    }

    #[test]
    fn sergeev_relations() {
        let w2 = sergeev(2, q()).unwrap();
        assert_eq!(w2.dim(), 8);
        let s = w2.wreath_permutation(&Permutation::simple(2, 0)).unwrap();
        let c1 = sergeev_c(&w2, 1).unwrap();
        let c2 = sergeev_c(&w2, 2).unwrap();
        assert_eq!(w2.mul(&w2.mul(&s, &c1), &s), c2);
        // (s₁⊗c⊗1)(s₁⊗1⊗c) = e⊗1⊗1
        let x = w2.mul(&s, &c1);
        let y = w2.mul(&s, &c2);
        assert_eq!(w2.mul(&x, &y), *w2.unit());
        assert!(w2.generators_span());
        let w3 = sergeev(3, Field::gf(3)).unwrap();
        assert_eq!(w3.dim(), 48);
        for i in 1..=3 {
            for j in 1..=3 {
                if i != j {
                    let ci = sergeev_c(&w3, i).unwrap();
                    let cj = sergeev_c(&w3, j).unwrap();
                    let lhs = w3.mul(&ci, &cj);
                    let rhs: Vector = w3.mul(&cj, &ci).iter().map(|x| -x).collect();
                    assert_eq!(lhs, rhs);
                }
            }
        }
        // σ c_i σ^{-1} = c_{σ(i)}
        for sigma in Permutation::all(3) {
            let sv = w3.wreath_permutation(&sigma).unwrap();
            let si = w3.wreath_permutation(&sigma.inverse()).unwrap();
            for i in 0..3 {
                let lhs = w3.mul(&w3.mul(&sv, &sergeev_c(&w3, i + 1).unwrap()), &si);
                assert_eq!(lhs, sergeev_c(&w3, sigma.apply(i) + 1).unwrap());
            }
        }
        assert!(sergeev(1, q())
            .unwrap()
            .same_table(&clifford(1, q()).unwrap()));
    }

    #[test]
    fn minus_twist_algebra() {
        let c = clifford(1, q()).unwrap();
        let cm = minus_algebra(&c);
        let cc = cm.mul(&el(&cm, "c1"), &el(&cm, "c1"));
        assert_eq!(cc, el(&cm, "1").iter().map(|x| -x).collect::<Vector>());
        assert!(cm.audit().is_ok());
        assert!(minus_algebra(&cm).same_table(&c));
        let g = group_algebra(3, q()).unwrap();
        assert!(minus_algebra(&g).same_table(&g));
    }

    #[test]
    fn tau_on_sergeev() {
        for f in [q(), Field::gf(5)] {
            let c = clifford(1, f).unwrap();
            let id =
                AlgebraMap::new(c.clone(), c.clone(), SparseMatrix::identity(f, 2), true).unwrap();
            let t1 = tau_antiautomorphism(&c, &id, 1).unwrap();
            assert_eq!(t1.matrix, SparseMatrix::identity(f, 2));
            let t2 = tau_antiautomorphism(&c, &id, 2).unwrap();
            let w = &t2.source;
            let s = w.wreath_permutation(&Permutation::simple(2, 0)).unwrap();
            assert_eq!(t2.apply(&s), s);
            let c12 = w.mul(&sergeev_c(w, 1).unwrap(), &sergeev_c(w, 2).unwrap());
            assert_eq!(t2.apply(&c12), c12.iter().map(|x| -x).collect::<Vector>());
        }
    }

    #[test]
    fn sampled_audit_on_w4() {
        let w4 = sergeev(4, Field::gf(3)).unwrap();
        assert_eq!(w4.dim(), 384);
        assert!(w4.generators_span());
    }
}
