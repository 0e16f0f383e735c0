//! Clifford algebras with the convention `vw + wv = 2B(v,w)`, spin modules
//! realized on the exterior algebra of a polarization, the degree-two
//! embedding `α : r → C(s)`, and the graded spin module for odd-dimensional
//! quadratic spaces.
//!
//! Monomials are bitmasks over a fixed ordered generator basis; an element is
//! a sparse map from monomials to scalars, always in canonical (strictly
//! increasing) form.

use crate::linalg::{solve, unit_vec, vec_is_zero, Coord, SparseMatrix};
use crate::liecore::{Decomposition, LieAlgebra};
use crate::scalar::Scalar;
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// A monomial: bit `i` set means generator `e_i` occurs (indices increasing).
pub type CliffMono = u64;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CliffordAlgebra {
    pub dim: usize,
    /// B restricted to the generator basis.
    pub gram: Vec<Vec<Scalar>>,
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct CliffordElement {
    pub terms: BTreeMap<CliffMono, Scalar>,
}

pub fn mono_degree(m: CliffMono) -> u32 {
    m.count_ones()
}

pub fn mono_indices(m: CliffMono) -> Vec<usize> {
    (0..64).filter(|i| m >> i & 1 == 1).collect()
}

impl CliffordElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn scalar(c: Scalar) -> Self {
        let mut e = Self::zero();
        e.add_term(0, c);
        e
    }

    pub fn one() -> Self {
        Self::scalar(Scalar::one())
    }

    pub fn generator(i: usize) -> Self {
        let mut e = Self::zero();
        e.add_term(1 << i, Scalar::one());
        e
    }

    pub fn add_term(&mut self, m: CliffMono, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Scalar::zero);
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero();
        for (m, v) in &self.terms {
            out.add_term(*m, v * c);
        }
        out
    }

    /// ℤ₂-degree: Some(0)/Some(1) for homogeneous elements, None for mixed.
    pub fn parity(&self) -> Option<u8> {
        let mut p = None;
        for m in self.terms.keys() {
            let q = (mono_degree(*m) % 2) as u8;
            match p {
                None => p = Some(q),
                Some(r) if r != q => return None,
                _ => {}
            }
        }
        p.or(Some(0))
    }

    pub fn even_part(&self) -> Self {
        let mut e = Self::zero();
        for (m, c) in &self.terms {
            if mono_degree(*m) % 2 == 0 {
                e.add_term(*m, c.clone());
            }
        }
        e
    }

    pub fn odd_part(&self) -> Self {
        self.sub(&self.even_part())
    }
}

impl fmt::Debug for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if *m == 0 {
                    format!("({c})")
                } else {
                    let gens: Vec<String> =
                        mono_indices(*m).iter().map(|i| format!("e{i}")).collect();
                    format!("({c})·{}", gens.join(""))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl CliffordAlgebra {
    pub fn new(gram: Vec<Vec<Scalar>>) -> Self {
        let dim = gram.len();
        Self { dim, gram }
    }

    fn b(&self, i: usize, j: usize) -> &Scalar {
        &self.gram[i][j]
    }

    /// e_i · (monomial), reduced to canonical form.
    fn gen_times_mono(&self, i: usize, mono: CliffMono) -> CliffordElement {
        let mut out = CliffordElement::zero();
        if mono == 0 {
            out.add_term(1 << i, Scalar::one());
            return out;
        }
        let j = mono.trailing_zeros() as usize;
        let rest = mono & !(1 << j);
        if i < j {
            out.add_term(mono | (1 << i), Scalar::one());
        } else if i == j {
            // e_i e_i = B(i,i)
            out.add_term(rest, self.b(i, i).clone());
        } else {
            // e_i e_j = 2B(i,j) - e_j e_i
            let two_b = self.b(i, j).clone() + self.b(i, j);
            out.add_term(rest, two_b);
            let tail = self.gen_times_mono(i, rest);
            for (m, c) in tail.terms {
                // j is smaller than every index in m
                debug_assert_eq!(m & (1 << j), 0);
                out.add_term(m | (1 << j), -&c);
            }
        }
        out
    }

    fn mono_times_mono(&self, m1: CliffMono, m2: CliffMono) -> CliffordElement {
        let mut acc = CliffordElement::one();
        acc.terms.clear();
        acc.add_term(m2, Scalar::one());
        for &i in mono_indices(m1).iter().rev() {
            let mut next = CliffordElement::zero();
            for (m, c) in &acc.terms {
                let prod = self.gen_times_mono(i, *m);
                for (pm, pc) in prod.terms {
                    next.add_term(pm, &pc * c);
                }
            }
            acc = next;
        }
        acc
    }

    pub fn product(&self, x: &CliffordElement, y: &CliffordElement) -> CliffordElement {
        let mut out = CliffordElement::zero();
        for (m1, c1) in &x.terms {
            for (m2, c2) in &y.terms {
                let prod = self.mono_times_mono(*m1, *m2);
                let c = c1 * c2;
                for (m, pc) in prod.terms {
                    out.add_term(m, &pc * &c);
                }
            }
        }
        out
    }

    /// Element of degree one from coordinates over the generator basis.
    pub fn vector(&self, coords: &[Scalar]) -> CliffordElement {
        let mut e = CliffordElement::zero();
        for (i, c) in coords.iter().enumerate() {
            e.add_term(1 << i, c.clone());
        }
        e
    }

    /// Supercommutator [x, y] = xy − (−1)^{deg x · deg y} yx, extended
    /// bilinearly from homogeneous parts.
    pub fn supercommutator(&self, x: &CliffordElement, y: &CliffordElement) -> CliffordElement {
        let mut out = CliffordElement::zero();
        for (xp, xpart) in [(0u8, x.even_part()), (1u8, x.odd_part())] {
            if xpart.is_zero() {
                continue;
            }
            for (yp, ypart) in [(0u8, y.even_part()), (1u8, y.odd_part())] {
                if ypart.is_zero() {
                    continue;
                }
                let xy = self.product(&xpart, &ypart);
                let yx = self.product(&ypart, &xpart);
                let signed = if xp * yp == 1 { xy.add(&yx) } else { xy.sub(&yx) };
                out = out.add(&signed);
            }
        }
        out
    }

    /// Full antisymmetrization (1/k!)·Σ sgn(σ)·v_{σ(1)}···v_{σ(k)}; this is
    /// the exterior product of the vectors viewed inside the Clifford algebra.
    pub fn wedge_vectors(&self, vectors: &[CliffordElement]) -> CliffordElement {
        let k = vectors.len();
        let mut total = CliffordElement::zero();
        let mut idx: Vec<usize> = (0..k).collect();
        let mut count = 0u64;
        loop {
            let sign = permutation_sign(&idx);
            let mut prod = CliffordElement::one();
            for &i in &idx {
                prod = self.product(&prod, &vectors[i]);
            }
            total = if sign { total.sub(&prod) } else { total.add(&prod) };
            count += 1;
            if !next_permutation(&mut idx) {
                break;
            }
        }
        let inv = Scalar::from_int(count as i64).inv();
        total.scale(&inv)
    }
}

fn permutation_sign(perm: &[usize]) -> bool {
    let mut inv = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    inv % 2 == 1
}

fn next_permutation(arr: &mut [usize]) -> bool {
    if arr.len() < 2 {
        return false;
    }
    let mut i = arr.len() - 1;
    while i > 0 && arr[i - 1] >= arr[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = arr.len() - 1;
    while arr[j] <= arr[i - 1] {
        j -= 1;
    }
    arr.swap(i - 1, j);
    arr[i..].reverse();
    true
}

/// A Clifford algebra attached to a subspace of g: remembers how each
/// generator sits inside g and the B-dual basis of the span.
#[derive(Clone, Debug)]
pub struct CliffContext {
    pub algebra: Arc<LieAlgebra>,
    pub basis_in_g: Vec<Coord>,
    pub dual_in_g: Vec<Coord>,
    pub cliff: CliffordAlgebra,
    basis_matrix: SparseMatrix,
}

impl CliffContext {
    pub fn new(algebra: Arc<LieAlgebra>, basis_in_g: Vec<Coord>) -> Result<Self> {
        let gdim = algebra.dim;
        let m = basis_in_g.len();
        let mut gram = vec![vec![Scalar::zero(); m]; m];
        for i in 0..m {
            for j in 0..m {
                gram[i][j] = algebra.pairing(&basis_in_g[i], &basis_in_g[j]);
            }
        }
        // dual basis within the span: d_i = Σ_j (G⁻¹)_{ji} b_j with G the Gram
        let gram_mat = SparseMatrix::from_columns(
            m,
            &(0..m).map(|j| (0..m).map(|i| gram[i][j].clone()).collect::<Coord>()).collect::<Vec<_>>(),
        );
        let mut dual_in_g = Vec::new();
        for i in 0..m {
            let c = solve(&gram_mat, &unit_vec(m, i))
                .ok_or_else(|| Error::Polarization("B degenerate on Clifford factor".into()))?;
            let mut v = crate::linalg::zero_vec(gdim);
            for (j, cj) in c.iter().enumerate() {
                if !cj.is_zero() {
                    v = crate::linalg::vec_add(&v, &crate::linalg::vec_scale(&basis_in_g[j], cj));
                }
            }
            dual_in_g.push(v);
        }
        let basis_matrix = SparseMatrix::from_columns(gdim, &basis_in_g);
        Ok(Self {
            algebra,
            basis_in_g,
            dual_in_g,
            cliff: CliffordAlgebra::new(gram),
            basis_matrix,
        })
    }

    /// From a polarized decomposition: generators u₁..u_n, u*₁..u*_n.
    pub fn from_decomposition(dec: &Decomposition) -> Result<Self> {
        Self::new(Arc::clone(&dec.algebra), dec.s_basis())
    }

    pub fn dim(&self) -> usize {
        self.cliff.dim
    }

    /// Coordinates of a g-vector in the generator basis (must lie in the span).
    pub fn coords_of(&self, x: &Coord) -> Result<Vec<Scalar>> {
        solve(&self.basis_matrix, x)
            .ok_or_else(|| Error::Polarization("vector not in the Clifford factor".into()))
    }

    pub fn vector_elt(&self, x: &Coord) -> Result<CliffordElement> {
        Ok(self.cliff.vector(&self.coords_of(x)?))
    }

    /// α(X) = −¼ Σ_{r,s} B([d_r, d_s], X) b_r b_s: the image of ad X under
    /// so(span) ≅ Λ²(span) ⊂ C(span). Requires X to normalize the span.
    pub fn alpha(&self, x: &Coord) -> Result<CliffordElement> {
        let g = &self.algebra;
        for b in &self.basis_in_g {
            let br = g.bracket(x, b);
            if !vec_is_zero(&br) && self.coords_of(&br).is_err() {
                return Err(Error::NotStable("element does not normalize the Clifford factor".into()));
            }
        }
        let m = self.dim();
        let quarter = Scalar::from_ratio(-1, 4);
        let mut out = CliffordElement::zero();
        for r in 0..m {
            for s in 0..m {
                if r == s {
                    continue;
                }
                let coeff = g.pairing(&g.bracket(&self.dual_in_g[r], &self.dual_in_g[s]), x);
                if coeff.is_zero() {
                    continue;
                }
                let prod = self.cliff.mono_times_mono(1 << r, 1 << s);
                for (mm, c) in prod.terms {
                    out.add_term(mm, &(&coeff * &c) * &quarter);
                }
            }
        }
        Ok(out)
    }
}

/// The decomposition of a Clifford product of a vector against a monomial of
/// pairwise-orthogonal vectors into its exterior part and contraction terms.
pub struct ContractExpansion {
    pub product: CliffordElement,
    pub wedge_part: CliffordElement,
    pub contraction: CliffordElement,
}

/// v·(w₁∧…∧w_p) = v∧w₁∧…∧w_p + Σ_i (−1)^{i−1} B(v,w_i)·w₁∧…ŵ_i…∧w_p for
/// pairwise-orthogonal w_i. The exterior part is computed independently by
/// antisymmetrization, so the identity doubles as a consistency check.
pub fn contract_expand(
    ctx: &CliffContext,
    v: &Coord,
    w: &[Coord],
) -> Result<ContractExpansion> {
    let g = &ctx.algebra;
    for a in 0..w.len() {
        for b in a + 1..w.len() {
            if !g.pairing(&w[a], &w[b]).is_zero() {
                return Err(Error::Polarization(
                    "monomial vectors must be pairwise orthogonal".into(),
                ));
            }
        }
    }
    let ve = ctx.vector_elt(v)?;
    let wels: Vec<CliffordElement> =
        w.iter().map(|x| ctx.vector_elt(x)).collect::<Result<_>>()?;
    let mut wprod = CliffordElement::one();
    for we in &wels {
        wprod = ctx.cliff.product(&wprod, we);
    }
    let product = ctx.cliff.product(&ve, &wprod);
    let mut all = vec![ve];
    all.extend(wels.iter().cloned());
    let wedge_part = ctx.cliff.wedge_vectors(&all);
    let mut contraction = CliffordElement::zero();
    for i in 0..w.len() {
        let coeff = g.pairing(v, &w[i]);
        if coeff.is_zero() {
            continue;
        }
        let mut rest = CliffordElement::one();
        for (j, we) in wels.iter().enumerate() {
            if j != i {
                rest = ctx.cliff.product(&rest, we);
            }
        }
        let sign = if i % 2 == 0 { coeff } else { -&coeff };
        contraction = contraction.add(&rest.scale(&sign));
    }
    Ok(ContractExpansion { product, wedge_part, contraction })
}

/// A spin module on Λ·(polarization): each Clifford generator acts as a
/// combination of wedges and contractions against the polarization basis.
#[derive(Clone, Debug)]
pub struct SpinModule {
    /// Rank of the polarization; the module has 2^n monomial basis vectors.
    pub n: usize,
    /// Per Clifford generator: wedge coefficients on u_1..u_n.
    gen_wedge: Vec<Vec<Scalar>>,
    /// Per Clifford generator: contraction coefficients (dual pairings).
    gen_contract: Vec<Vec<Scalar>>,
}

impl SpinModule {
    /// Standard module for an even space with generators u₁..u_n, u*₁..u_n*:
    /// u acts by wedging, u* by the double contraction.
    pub fn from_polarization(n: usize) -> Self {
        let mut gen_wedge = Vec::new();
        let mut gen_contract = Vec::new();
        for i in 0..2 * n {
            let mut w = vec![Scalar::zero(); n];
            let mut c = vec![Scalar::zero(); n];
            if i < n {
                w[i] = Scalar::one();
            } else {
                c[i - n] = Scalar::one();
            }
            gen_wedge.push(w);
            gen_contract.push(c);
        }
        Self { n, gen_wedge, gen_contract }
    }

    /// Graded module for an odd space with generators ordered
    /// u₁..u_m, u*₁..u_m*, z (z last, B(z,z) = z_norm ≠ 0). Obtained by
    /// restricting the spin module of the extension by one more hyperbolic
    /// direction: z = ½·u_{m+1} + z_norm·u*_{m+1} inside the extended space.
    pub fn graded_odd(m: usize, z_norm: &Scalar) -> Result<Self> {
        if z_norm.is_zero() {
            return Err(Error::Polarization("z must be anisotropic".into()));
        }
        let n = m + 1;
        let mut gen_wedge = Vec::new();
        let mut gen_contract = Vec::new();
        for i in 0..2 * m + 1 {
            let mut w = vec![Scalar::zero(); n];
            let mut c = vec![Scalar::zero(); n];
            if i < m {
                w[i] = Scalar::one();
            } else if i < 2 * m {
                c[i - m] = Scalar::one();
            } else {
                w[m] = Scalar::from_ratio(1, 2);
                c[m] = z_norm.clone();
            }
            gen_wedge.push(w);
            gen_contract.push(c);
        }
        Ok(Self { n, gen_wedge, gen_contract })
    }

    pub fn dim(&self) -> usize {
        1 << self.n
    }

    /// Weight of bit i under the polarization (index into u-basis).
    pub fn mono_mask_indices(mono: CliffMono) -> Vec<usize> {
        mono_indices(mono)
    }

    /// Action of generator g_idx on a basis monomial, as (monomial, coeff)
    /// pairs. Wedge: u∧Y; contraction: 2·Σ (−1)^{pos} B(u*, Y_pos)·(Y∖pos).
    pub fn gen_action(&self, g_idx: usize, mono: CliffMono) -> Vec<(CliffMono, Scalar)> {
        let mut out = Vec::new();
        for (i, wcoeff) in self.gen_wedge[g_idx].iter().enumerate() {
            if wcoeff.is_zero() || mono >> i & 1 == 1 {
                continue;
            }
            let below = (mono & ((1u64 << i) - 1)).count_ones();
            let sign = if below % 2 == 0 { wcoeff.clone() } else { -wcoeff };
            out.push((mono | (1 << i), sign));
        }
        for (i, ccoeff) in self.gen_contract[g_idx].iter().enumerate() {
            if ccoeff.is_zero() || mono >> i & 1 == 0 {
                continue;
            }
            let pos = (mono & ((1u64 << i) - 1)).count_ones();
            let two = Scalar::from_int(2);
            let base = &two * ccoeff;
            let sign = if pos % 2 == 0 { base } else { -&base };
            out.push((mono & !(1 << i), sign));
        }
        out
    }

    /// Action of a full Clifford element as a (2^n × 2^n) matrix.
    pub fn action_matrix(&self, elt: &CliffordElement) -> SparseMatrix {
        let d = self.dim();
        let mut m = SparseMatrix::zero(d, d);
        for (cmono, coeff) in &elt.terms {
            // apply generators right-to-left
            let gens = mono_indices(*cmono);
            for col in 0..d as u64 {
                let mut acc: Vec<(CliffMono, Scalar)> = vec![(col, coeff.clone())];
                for &gidx in gens.iter().rev() {
                    let mut next = Vec::new();
                    for (mono, c) in &acc {
                        for (m2, c2) in self.gen_action(gidx, *mono) {
                            next.push((m2, &c2 * c));
                        }
                    }
                    acc = next;
                }
                for (mono, c) in acc {
                    let cur = m.get(mono as usize, col as usize) + &c;
                    m.set(mono as usize, col as usize, cur);
                }
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liecore::{builtin_algebra, builtin_decomposition, FormChoice};

    fn sc(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn sl2_ctx() -> CliffContext {
        let g = builtin_algebra("sl2", FormChoice::Trace).unwrap();
        let dec = builtin_decomposition(&g, "borel").unwrap();
        CliffContext::from_decomposition(&dec).unwrap()
    }

    fn sl3_borel_ctx() -> CliffContext {
        let g = builtin_algebra("sl3", FormChoice::Trace).unwrap();
        let dec = builtin_decomposition(&g, "borel").unwrap();
        CliffContext::from_decomposition(&dec).unwrap()
    }

    #[test]
    fn defining_relation_on_basis_pairs() {
        for ctx in [sl2_ctx(), sl3_borel_ctx()] {
            let d = ctx.dim();
            for i in 0..d {
                for j in 0..d {
                    let ei = CliffordElement::generator(i);
                    let ej = CliffordElement::generator(j);
                    let lhs = ctx.cliff.product(&ei, &ej).add(&ctx.cliff.product(&ej, &ei));
                    let b2 = ctx.cliff.gram[i][j].clone() + &ctx.cliff.gram[i][j];
                    assert_eq!(lhs, CliffordElement::scalar(b2), "relation at ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn isotropic_squares_vanish_and_unit_vectors_square_to_one() {
        let ctx = sl2_ctx();
        // u isotropic: u² = 0
        let u = CliffordElement::generator(0);
        assert!(ctx.cliff.product(&u, &u).is_zero());
        // u*·u + u·u* = 2
        let us = CliffordElement::generator(1);
        let sum = ctx.cliff.product(&us, &u).add(&ctx.cliff.product(&u, &us));
        assert_eq!(sum, CliffordElement::scalar(sc(2)));
        // B(v,v) = 1 gives v² = 1: v = (u + u*/... ) pick v with B(v,v)=1:
        // B(u + u*/2, u + u*/2) = B(u,u*) = 1
        let v = ctx.cliff.vector(&[sc(1), Scalar::from_ratio(1, 2)]);
        assert_eq!(ctx.cliff.product(&v, &v), CliffordElement::one());
    }

    #[test]
    fn product_is_associative() {
        let ctx = sl3_borel_ctx();
        let a = ctx.cliff.vector(&[sc(1), sc(0), sc(2), sc(1), sc(0), sc(0)]);
        let b = ctx.cliff.product(
            &CliffordElement::generator(3),
            &ctx.cliff.vector(&[sc(0), sc(1), sc(0), sc(0), sc(1), sc(-1)]),
        );
        let c = ctx.cliff.product(&CliffordElement::generator(0), &CliffordElement::generator(4));
        let ab_c = ctx.cliff.product(&ctx.cliff.product(&a, &b), &c);
        let a_bc = ctx.cliff.product(&a, &ctx.cliff.product(&b, &c));
        assert_eq!(ab_c, a_bc);
    }

    #[test]
    fn parity_is_multiplicative() {
        let ctx = sl3_borel_ctx();
        let a = ctx.cliff.mono_times_mono(0b101, 0b010);
        assert_eq!(a.parity(), Some(1));
        let b = ctx.cliff.mono_times_mono(0b11, 0b1100);
        assert_eq!(b.parity(), Some(0));
    }

    #[test]
    fn contract_expand_examples() {
        let ctx = sl3_borel_ctx();
        let g = builtin_algebra("sl3", FormChoice::Trace).unwrap();
        // u*₁·(u₁∧u₂): wedge plus one contraction with B(u*₁,u₁) = 1
        let ustar1 = ctx.basis_in_g[3].clone();
        let u1 = ctx.basis_in_g[0].clone();
        let u2 = ctx.basis_in_g[1].clone();
        let exp = contract_expand(&ctx, &ustar1, &[u1.clone(), u2.clone()]).unwrap();
        assert_eq!(exp.product, exp.wedge_part.add(&exp.contraction));
        let u2elt = ctx.vector_elt(&u2).unwrap();
        assert_eq!(exp.contraction, u2elt, "single contraction term B(u*₁,u₁)·u₂");
        // disjoint index: u*₃·(u₁∧u₂) is a pure wedge
        let ustar3 = ctx.basis_in_g[5].clone();
        let exp = contract_expand(&ctx, &ustar3, &[u1.clone(), u2.clone()]).unwrap();
        assert!(exp.contraction.is_zero());
        assert_eq!(exp.product, exp.wedge_part);
        // v orthogonal to the whole monomial: product = wedge = v∧w
        let exp = contract_expand(&ctx, &u2, &[u1.clone()]).unwrap();
        assert!(exp.contraction.is_zero());
        assert_eq!(exp.product, ctx.cliff.product(&u2elt, &ctx.vector_elt(&u1).unwrap()));
        // non-orthogonal monomial is rejected
        assert!(contract_expand(&ctx, &u2, &[u1, ustar1]).is_err());
        let _ = g;
    }

    #[test]
    fn alpha_reproduces_adjoint_action() {
        // sl2: [α(h), e] = 2e and [α(h), f] = -2f inside C(s)
        let ctx = sl2_ctx();
        let g = ctx.algebra.clone();
        let h = unit_vec(3, 2);
        let ah = ctx.alpha(&h).unwrap();
        for (idx, vg) in [(0usize, 2i64), (1usize, -2i64)] {
            let v = CliffordElement::generator(idx);
            let lhs = ctx.cliff.supercommutator(&ah, &v);
            assert_eq!(lhs, v.scale(&sc(vg)));
        }
        // α is a Lie algebra map on all basis pairs of r = span{h}
        let hh = g.bracket(&h, &h);
        assert!(vec_is_zero(&hh));
    }

    #[test]
    fn alpha_is_lie_algebra_map_on_levi() {
        // sl3 Levi gl2 acting on s = p⁺ ⊕ p⁻
        let g = builtin_algebra("sl3", FormChoice::Trace).unwrap();
        let dec = builtin_decomposition(&g, "levi-gl2").unwrap();
        let ctx = CliffContext::from_decomposition(&dec).unwrap();
        for x in &dec.r_basis {
            // commutator action agrees with the bracket on every s-vector
            let ax = ctx.alpha(x).unwrap();
            for b in &ctx.basis_in_g.clone() {
                let v = ctx.vector_elt(b).unwrap();
                let lhs = ctx.cliff.supercommutator(&ax, &v);
                let rhs = ctx.vector_elt(&g.bracket(x, b)).unwrap();
                assert_eq!(lhs, rhs);
            }
            for y in &dec.r_basis {
                let ay = ctx.alpha(y).unwrap();
                let axy = ctx.alpha(&g.bracket(x, y)).unwrap();
                let comm = ctx.cliff.supercommutator(&ax, &ay);
                assert_eq!(comm, axy, "α([x,y]) = [α(x),α(y)]");
            }
        }
        // central elements acting trivially on s map to 0: z of gl2 acts by
        // ±3 on p±, so instead check X = 0
        let zero = crate::linalg::zero_vec(8);
        assert!(ctx.alpha(&zero).unwrap().is_zero());
    }

    #[test]
    fn alpha_mixed_basis_matches_orthonormal_style_formula() {
        // both the dual-pair expansion and a hand-built orthogonal basis give
        // the same α on the sl3 Levi
        let g = builtin_algebra("sl3", FormChoice::Trace).unwrap();
        let dec = builtin_decomposition(&g, "levi-gl2").unwrap();
        let ctx = CliffContext::from_decomposition(&dec).unwrap();
        // orthogonal (not orthonormal) basis of s: a_i = u_i + u*_i, b_i = u_i - u*_i
        let mut alt_basis = Vec::new();
        for i in 0..2 {
            alt_basis.push(crate::linalg::vec_add(&dec.u_basis[i], &dec.ustar_basis[i]));
        }
        for i in 0..2 {
            alt_basis.push(crate::linalg::vec_sub(&dec.u_basis[i], &dec.ustar_basis[i]));
        }
        let ctx2 = CliffContext::new(g.clone(), alt_basis).unwrap();
        for x in &dec.r_basis {
            let a1 = ctx.alpha(x).unwrap();
            let a2 = ctx2.alpha(x).unwrap();
            // compare by action on every vector of s
            for b in &ctx.basis_in_g {
                let lhs = ctx.cliff.supercommutator(&a1, &ctx.vector_elt(b).unwrap());
                let rhs = ctx2.cliff.supercommutator(&a2, &ctx2.vector_elt(b).unwrap());
                // both equal [x, b] expressed in their own coordinates
                assert_eq!(lhs, ctx.vector_elt(&g.bracket(x, b)).unwrap());
                assert_eq!(rhs, ctx2.vector_elt(&g.bracket(x, b)).unwrap());
            }
        }
    }

    #[test]
    fn spin_action_is_a_module() {
        let ctx = sl3_borel_ctx();
        let s = SpinModule::from_polarization(3);
        // action respects the defining relations on all generator pairs
        for i in 0..6 {
            for j in 0..6 {
                let ai = s.action_matrix(&CliffordElement::generator(i));
                let aj = s.action_matrix(&CliffordElement::generator(j));
                let anti = ai.matmul(&aj).add(&aj.matmul(&ai));
                let b2 = ctx.cliff.gram[i][j].clone() + &ctx.cliff.gram[i][j];
                assert_eq!(anti, SparseMatrix::identity(8).scale(&b2));
            }
        }
        // multiplicativity on a sample pair
        let x = ctx.cliff.mono_times_mono(0b011, 0b100100);
        let y = ctx.cliff.mono_times_mono(0b1000, 0b10);
        let xy = ctx.cliff.product(&x, &y);
        assert_eq!(
            s.action_matrix(&xy),
            s.action_matrix(&x).matmul(&s.action_matrix(&y))
        );
    }

    #[test]
    fn spin_action_examples() {
        let s = SpinModule::from_polarization(2);
        // u₁ wedging a monomial containing u₁ gives zero
        let m = s.action_matrix(&CliffordElement::generator(0));
        assert!(crate::linalg::vec_is_zero(&m.apply(&{
            let mut v = crate::linalg::zero_vec(4);
            v[0b01] = sc(1);
            v
        })));
        // u*₁ · (u₁∧u₂) = 2u₂
        let mstar = s.action_matrix(&CliffordElement::generator(2));
        let mut v = crate::linalg::zero_vec(4);
        v[0b11] = sc(1);
        let out = mstar.apply(&v);
        let mut expect = crate::linalg::zero_vec(4);
        expect[0b10] = sc(2);
        assert_eq!(out, expect);
    }

    #[test]
    fn spin_representation_is_faithful() {
        // dim s = 4 (sl3 Levi): C(s) → End(S) has full rank 4^n
        let g = builtin_algebra("sl3", FormChoice::Trace).unwrap();
        let dec = builtin_decomposition(&g, "levi-gl2").unwrap();
        let _ctx = CliffContext::from_decomposition(&dec).unwrap();
        let s = SpinModule::from_polarization(2);
        let n = 2;
        let total = 1usize << (2 * n);
        let mut cols = Vec::new();
        for mono in 0..total as u64 {
            let mat = s.action_matrix(&{
                let mut e = CliffordElement::zero();
                e.add_term(mono, Scalar::one());
                e
            });
            let mut col = Vec::new();
            for r in 0..s.dim() {
                for c in 0..s.dim() {
                    col.push(mat.get(r, c));
                }
            }
            cols.push(col);
        }
        let m = SparseMatrix::from_columns(s.dim() * s.dim(), &cols);
        assert_eq!(crate::linalg::rank(&m), total);
    }

    #[test]
    fn graded_spin_module_rank_one() {
        // dim s = 1, B(z,z) = 1: two-dimensional graded module, z² = 1,
        // z swaps the even and odd lines
        let s = SpinModule::graded_odd(0, &sc(1)).unwrap();
        assert_eq!(s.dim(), 2);
        let z = s.action_matrix(&CliffordElement::generator(0));
        assert_eq!(z.matmul(&z), SparseMatrix::identity(2));
        assert!(z.get(0, 0).is_zero() && z.get(1, 1).is_zero());
        assert!(!z.get(1, 0).is_zero() && !z.get(0, 1).is_zero());
    }

    #[test]
    fn graded_spin_module_rank_three() {
        // dim s = 3 with a hyperbolic pair and B(z,z) = c: 4-dim module,
        // defining relations hold, every generator acts oddly
        let c = Scalar::from_ratio(3, 2);
        let s = SpinModule::graded_odd(1, &c).unwrap();
        assert_eq!(s.dim(), 4);
        let gram = vec![
            vec![sc(0), sc(1), sc(0)],
            vec![sc(1), sc(0), sc(0)],
            vec![sc(0), sc(0), c.clone()],
        ];
        for i in 0..3 {
            for j in 0..3 {
                let ai = s.action_matrix(&CliffordElement::generator(i));
                let aj = s.action_matrix(&CliffordElement::generator(j));
                let anti = ai.matmul(&aj).add(&aj.matmul(&ai));
                let b2 = gram[i][j].clone() + &gram[i][j];
                assert_eq!(anti, SparseMatrix::identity(4).scale(&b2), "({i},{j})");
            }
        }
        // odd parity: generators exchange even and odd exterior degrees
        for i in 0..3 {
            let a = s.action_matrix(&CliffordElement::generator(i));
            for (&(r, c_), _) in a.entries() {
                let pr = (r as u64).count_ones() % 2;
                let pc = (c_ as u64).count_ones() % 2;
                assert_ne!(pr, pc, "generator {i} must be parity-odd");
            }
        }
        // even input dimension is rejected by the public constructor path
        assert!(SpinModule::graded_odd(1, &Scalar::zero()).is_err());
    }
}
