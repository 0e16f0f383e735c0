//! Lie algebra data: structure constants, invariant forms, involutions,
//! parabolic decompositions with dual bases, ρ-characters and Weyl orbits.
//!
//! An algebra is loaded from structure constants (or a built-in table) and
//! every axiom is checked exactly before it is used: antisymmetry, Jacobi,
//! invariance and nondegeneracy of the form, involutivity of θ and σ.

use crate::linalg::{
    solve, stable_kernel, unit_vec, vec_is_zero, vec_scale, zero_vec, Coord, SparseMatrix, Subspace,
};
use crate::scalar::Scalar;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::sync::Arc;

/// Which invariant bilinear form an algebra is equipped with.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormChoice {
    Trace,
    Killing,
}

/// Simple reflection data: the root as a functional on the Cartan basis and
/// the coroot as an element of the algebra.
#[derive(Clone, Debug)]
pub struct Reflection {
    pub root: Vec<Scalar>,
    pub coroot: Coord,
}

#[derive(Clone, Debug)]
pub struct LieAlgebra {
    pub name: String,
    pub dim: usize,
    pub labels: Vec<String>,
    /// bracket_table[i][j] = coordinates of [x_i, x_j]
    bracket_table: Vec<Vec<Coord>>,
    pub form: SparseMatrix,
    pub theta: SparseMatrix,
    pub sigma: SparseMatrix,
    pub cartan: Vec<usize>,
    /// Designated positive root vector indices (fixes ρ and dominance).
    pub positive: Vec<usize>,
    pub reflections: Vec<Reflection>,
}

impl LieAlgebra {
    /// Bracket of two coordinate vectors, extended bilinearly.
    pub fn bracket(&self, x: &Coord, y: &Coord) -> Coord {
        let mut out = zero_vec(self.dim);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let coeff = a * b;
                for (k, c) in self.bracket_table[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &(&coeff * c);
                    }
                }
            }
        }
        out
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &Coord {
        &self.bracket_table[i][j]
    }

    /// B(x, y), extended bilinearly (B is ℂ-bilinear, not hermitian).
    pub fn pairing(&self, x: &Coord, y: &Coord) -> Scalar {
        let mut out = Scalar::zero();
        for (&(i, j), v) in self.form.entries() {
            if !x[i].is_zero() && !y[j].is_zero() {
                out += &(&(&x[i] * &y[j]) * v);
            }
        }
        out
    }

    pub fn theta_apply(&self, x: &Coord) -> Coord {
        self.theta.apply(x)
    }

    /// σ is conjugate-linear: conjugate the coordinates, then apply the matrix.
    pub fn sigma_apply(&self, x: &Coord) -> Coord {
        let conj: Coord = x.iter().map(Scalar::conj).collect();
        self.sigma.apply(&conj)
    }

    /// Matrix of ad x on the adjoint representation.
    pub fn ad(&self, x: &Coord) -> SparseMatrix {
        let mut m = SparseMatrix::zero(self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.bracket(x, &unit_vec(self.dim, j));
            for (i, v) in col.into_iter().enumerate() {
                if !v.is_zero() {
                    m.set(i, j, v);
                }
            }
        }
        m
    }

    /// Killing form K(x, y) = tr(ad x ∘ ad y), from structure constants.
    pub fn killing_form(&self) -> SparseMatrix {
        let ads: Vec<SparseMatrix> =
            (0..self.dim).map(|i| self.ad(&unit_vec(self.dim, i))).collect();
        let mut k = SparseMatrix::zero(self.dim, self.dim);
        for i in 0..self.dim {
            for j in i..self.dim {
                let prod = ads[i].matmul(&ads[j]);
                let mut tr = Scalar::zero();
                for d in 0..self.dim {
                    tr += &prod.get(d, d);
                }
                if !tr.is_zero() {
                    k.set(i, j, tr.clone());
                    if i != j {
                        k.set(j, i, tr);
                    }
                }
            }
        }
        k
    }

    /// Weight of basis vector `j` under the designated Cartan, if it is a
    /// simultaneous eigenvector of all `ad h_k`.
    pub fn basis_weight(&self, j: usize) -> Option<Vec<Scalar>> {
        let mut w = Vec::with_capacity(self.cartan.len());
        for &hk in &self.cartan {
            let br = &self.bracket_table[hk][j];
            let mut eig = Scalar::zero();
            for (m, c) in br.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if m != j {
                    return None;
                }
                eig = c.clone();
            }
            w.push(eig);
        }
        Some(w)
    }

    /// Cartan coordinates of an element lying in the span of the Cartan basis.
    pub fn cartan_coords(&self, x: &Coord) -> Result<Vec<Scalar>> {
        let mut coords = Vec::new();
        let mut residue = x.clone();
        for &hk in &self.cartan {
            coords.push(x[hk].clone());
            residue[hk] = Scalar::zero();
        }
        if !vec_is_zero(&residue) {
            return Err(Error::NotStable("element not in the Cartan span".into()));
        }
        Ok(coords)
    }

    /// Gram matrix of B restricted to the Cartan basis.
    pub fn cartan_gram(&self) -> SparseMatrix {
        let r = self.cartan.len();
        let mut m = SparseMatrix::zero(r, r);
        for (a, &i) in self.cartan.iter().enumerate() {
            for (b, &j) in self.cartan.iter().enumerate() {
                m.set(a, b, self.form.get(i, j));
            }
        }
        m
    }

    /// ρ = half the sum of designated positive roots, as a weight functional.
    pub fn rho(&self) -> WeightFunctional {
        let mut vals = vec![Scalar::zero(); self.cartan.len()];
        for &p in &self.positive {
            let w = self.basis_weight(p).expect("positive vectors must be root vectors");
            for (k, v) in w.iter().enumerate() {
                vals[k] += v;
            }
        }
        let half = Scalar::from_ratio(1, 2);
        WeightFunctional { values: vals.into_iter().map(|v| &v * &half).collect() }
    }

    fn validate(&self) -> Result<()> {
        let n = self.dim;
        if self.labels.len() != n || self.bracket_table.len() != n {
            return Err(Error::Dimension("labels/brackets length must equal dim".into()));
        }
        // antisymmetry
        for i in 0..n {
            for j in 0..n {
                let mut s = self.bracket_table[i][j].clone();
                for (k, v) in self.bracket_table[j][i].iter().enumerate() {
                    s[k] = s[k].clone() + v;
                }
                if !vec_is_zero(&s) {
                    return Err(Error::Antisymmetry(i, j));
                }
            }
        }
        // Jacobi
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let xi = unit_vec(n, i);
                    let xj = unit_vec(n, j);
                    let xk = unit_vec(n, k);
                    let mut s = self.bracket(&self.bracket(&xi, &xj), &xk);
                    let t = self.bracket(&self.bracket(&xj, &xk), &xi);
                    let u = self.bracket(&self.bracket(&xk, &xi), &xj);
                    for m in 0..n {
                        s[m] = s[m].clone() + &t[m] + &u[m];
                    }
                    if !vec_is_zero(&s) {
                        return Err(Error::Jacobi(i, j, k));
                    }
                }
            }
        }
        // form: symmetric, invariant, nondegenerate
        for i in 0..n {
            for j in 0..n {
                if self.form.get(i, j) != self.form.get(j, i) {
                    return Err(Error::FormInvariance(i, j, j));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let xi = unit_vec(n, i);
                    let xj = unit_vec(n, j);
                    let xk = unit_vec(n, k);
                    let lhs = self.pairing(&self.bracket(&xi, &xj), &xk);
                    let rhs = self.pairing(&xi, &self.bracket(&xj, &xk));
                    if lhs != rhs {
                        return Err(Error::FormInvariance(i, j, k));
                    }
                }
            }
        }
        if crate::linalg::rank(&self.form) != n {
            return Err(Error::DegenerateForm);
        }
        // theta
        let th2 = self.theta.matmul(&self.theta);
        if th2 != SparseMatrix::identity(n) {
            return Err(Error::BadTheta("theta squared is not the identity".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let xi = unit_vec(n, i);
                let xj = unit_vec(n, j);
                let lhs = self.theta_apply(&self.bracket(&xi, &xj));
                let rhs = self.bracket(&self.theta_apply(&xi), &self.theta_apply(&xj));
                if lhs != rhs {
                    return Err(Error::BadTheta(format!("bracket not preserved at ({i},{j})")));
                }
                if self.pairing(&self.theta_apply(&xi), &self.theta_apply(&xj))
                    != self.pairing(&xi, &xj)
                {
                    return Err(Error::BadTheta(format!("form not preserved at ({i},{j})")));
                }
            }
        }
        // sigma: conjugate-linear involution preserving brackets
        for j in 0..n {
            let xj = unit_vec(n, j);
            if self.sigma_apply(&self.sigma_apply(&xj)) != xj {
                return Err(Error::BadSigma(format!("sigma squared fails on basis {j}")));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let xi = unit_vec(n, i);
                let xj = unit_vec(n, j);
                let lhs = self.sigma_apply(&self.bracket(&xi, &xj));
                let rhs = self.bracket(&self.sigma_apply(&xi), &self.sigma_apply(&xj));
                if lhs != rhs {
                    return Err(Error::BadSigma(format!("bracket not preserved at ({i},{j})")));
                }
            }
        }
        for &c in &self.cartan {
            if c >= n {
                return Err(Error::Dimension("cartan index out of range".into()));
            }
        }
        Ok(())
    }
}

/// A weight: a linear functional on the designated Cartan, stored by its
/// values on the Cartan basis elements.
#[derive(Clone, PartialEq, Eq, Debug, PartialOrd, Ord, Serialize)]
pub struct WeightFunctional {
    pub values: Vec<Scalar>,
}

impl WeightFunctional {
    pub fn zero(rank: usize) -> Self {
        Self { values: vec![Scalar::zero(); rank] }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            values: self.values.iter().zip(&other.values).map(|(a, b)| a.clone() + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            values: self.values.iter().zip(&other.values).map(|(a, b)| a.clone() - b).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self { values: self.values.iter().map(|v| v * c).collect() }
    }

    /// Evaluate on an element of the Cartan span.
    pub fn eval(&self, g: &LieAlgebra, x: &Coord) -> Result<Scalar> {
        let coords = g.cartan_coords(x)?;
        let mut out = Scalar::zero();
        for (v, c) in self.values.iter().zip(&coords) {
            out += &(v * c);
        }
        Ok(out)
    }

    pub fn to_string_canonical(&self) -> String {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        format!("[{}]", parts.join(","))
    }
}

/// The B-dual inner product ⟨λ, μ⟩ on the Cartan dual.
pub fn weight_inner(g: &LieAlgebra, lam: &WeightFunctional, mu: &WeightFunctional) -> Scalar {
    let gram = g.cartan_gram();
    // t_mu solves G t = mu
    let t = solve(&gram, &mu.values).expect("Cartan Gram is invertible");
    let mut out = Scalar::zero();
    for (a, b) in lam.values.iter().zip(&t) {
        out += &(a * b);
    }
    out
}

/// χ_λ(Ω) = ⟨λ+ρ, λ+ρ⟩ − ⟨ρ, ρ⟩ for the configured form.
pub fn infinitesimal_character_scalar(g: &LieAlgebra, lam: &WeightFunctional) -> Scalar {
    let rho = g.rho();
    let lr = lam.add(&rho);
    weight_inner(g, &lr, &lr) - weight_inner(g, &rho, &rho)
}

/// An orthogonal decomposition g = r ⊕ s together with a polarization
/// s = u ⊕ ū and the B-dual basis of ū.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub algebra: Arc<LieAlgebra>,
    pub name: String,
    pub r_basis: Vec<Coord>,
    /// Ordered basis of u; when θ splits u, the k-part comes first.
    pub u_basis: Vec<Coord>,
    /// Dual basis of ū: B(ustar_i, u_j) = δ_ij.
    pub ustar_basis: Vec<Coord>,
    /// Number of leading u-vectors lying in k (θ = +1); None when u is not
    /// spanned by θ-eigenvectors.
    pub k_count: Option<usize>,
}

impl Decomposition {
    pub fn n(&self) -> usize {
        self.u_basis.len()
    }

    /// Basis of s in the fixed global order: u₁..u_n, u*₁..u*_n.
    pub fn s_basis(&self) -> Vec<Coord> {
        let mut v = self.u_basis.clone();
        v.extend(self.ustar_basis.iter().cloned());
        v
    }

    pub fn s_subspace(&self) -> Subspace {
        Subspace::from_spanning(self.algebra.dim, &self.s_basis())
    }

    pub fn r_subspace(&self) -> Subspace {
        Subspace::from_spanning(self.algebra.dim, &self.r_basis)
    }

    /// Verify the structural invariants: orthogonality of r and s, isotropy
    /// of u and ū, duality of the bases, and r-stability of u and ū.
    pub fn verify(&self) -> Result<()> {
        let g = &self.algebra;
        let n = self.n();
        for r in &self.r_basis {
            for s in self.s_basis() {
                if !g.pairing(r, &s).is_zero() {
                    return Err(Error::Polarization("r and s are not orthogonal".into()));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if !g.pairing(&self.u_basis[i], &self.u_basis[j]).is_zero() {
                    return Err(Error::Polarization("u is not isotropic".into()));
                }
                if !g.pairing(&self.ustar_basis[i], &self.ustar_basis[j]).is_zero() {
                    return Err(Error::Polarization("ū is not isotropic".into()));
                }
                let expected = if i == j { Scalar::one() } else { Scalar::zero() };
                if g.pairing(&self.ustar_basis[i], &self.u_basis[j]) != expected {
                    return Err(Error::Polarization("bases are not B-dual".into()));
                }
            }
        }
        let u_span = Subspace::from_spanning(g.dim, &self.u_basis);
        let ubar_span = Subspace::from_spanning(g.dim, &self.ustar_basis);
        for r in &self.r_basis {
            for u in &self.u_basis {
                if !u_span.contains(&g.bracket(r, u)) {
                    return Err(Error::NotStable("[r, u] ⊄ u".into()));
                }
            }
            for w in &self.ustar_basis {
                if !ubar_span.contains(&g.bracket(r, w)) {
                    return Err(Error::NotStable("[r, ū] ⊄ ū".into()));
                }
            }
        }
        Ok(())
    }
}

/// Eigenvalues of ad h are searched among these rational candidates; the
/// decomposition is rejected unless the eigenspaces exhaust g.
fn grading_candidates(adh: &SparseMatrix) -> Vec<Scalar> {
    let mut seen: BTreeSet<String> = BTreeSet::new();
    let mut out: Vec<Scalar> = Vec::new();
    let push = |v: Scalar, out: &mut Vec<Scalar>, seen: &mut BTreeSet<String>| {
        if v.is_real() && seen.insert(v.to_string()) {
            out.push(v);
        }
    };
    push(Scalar::zero(), &mut out, &mut seen);
    let entries: Vec<Scalar> = adh.entries().map(|(_, v)| v.clone()).collect();
    for e in &entries {
        push(e.clone(), &mut out, &mut seen);
        push(-e, &mut out, &mut seen);
    }
    for a in &entries {
        for b in &entries {
            push(a.clone() - b, &mut out, &mut seen);
        }
    }
    out
}

/// Build the parabolic-type decomposition induced by a grading element h:
/// l is the zero eigenspace of ad h, u the sum of positive eigenspaces and
/// ū the sum of negative ones, with B-dual bases emitted.
pub fn parabolic_from_grading(g: &Arc<LieAlgebra>, h: &Coord) -> Result<Decomposition> {
    let adh = g.ad(h);
    let mut pieces: Vec<(Scalar, Vec<Coord>)> = Vec::new();
    let mut total = 0;
    for lam in grading_candidates(&adh) {
        let shifted = adh.sub(&SparseMatrix::identity(g.dim).scale(&lam));
        let st = stable_kernel(&shifted);
        if st.kernel.dim() == 0 {
            continue;
        }
        if !st.semisimple_at_zero {
            return Err(Error::BadGrading(format!(
                "generalized eigenspace at {lam} exceeds the eigenspace"
            )));
        }
        total += st.kernel.dim();
        pieces.push((lam, st.kernel.basis().to_vec()));
    }
    if total != g.dim {
        return Err(Error::BadGrading(
            "eigenspaces do not exhaust g (non-semisimple or irrational grading)".into(),
        ));
    }
    let mut r_basis = Vec::new();
    let mut u_raw: Vec<(Scalar, Vec<Coord>)> = Vec::new();
    let mut ubar_raw: Vec<(Scalar, Vec<Coord>)> = Vec::new();
    for (lam, basis) in pieces {
        if lam.is_zero() {
            r_basis.extend(basis);
        } else if lam.is_positive_real() {
            u_raw.push((lam, basis));
        } else {
            ubar_raw.push((lam, basis));
        }
    }
    // deterministic order: ascending eigenvalue within u
    u_raw.sort_by(|(a, _), (b, _)| a.re.cmp(&b.re));
    ubar_raw.sort_by(|(a, _), (b, _)| b.re.cmp(&a.re));
    let mut u_basis: Vec<Coord> = u_raw.into_iter().flat_map(|(_, b)| b).collect();
    let ubar_basis: Vec<Coord> = ubar_raw.into_iter().flat_map(|(_, b)| b).collect();
    if u_basis.len() != ubar_basis.len() {
        return Err(Error::BadGrading("positive and negative parts differ in dimension".into()));
    }
    // k-part first when u consists of θ-eigenvectors
    let k_count = sort_by_theta(g, &mut u_basis);
    let ustar_basis = dual_basis(g, &u_basis, &ubar_basis)?;
    let dec = Decomposition {
        algebra: Arc::clone(g),
        name: format!("grading[{}]", coord_label(g, h)),
        r_basis,
        u_basis,
        ustar_basis,
        k_count,
    };
    dec.verify()?;
    Ok(dec)
}

fn coord_label(g: &LieAlgebra, x: &Coord) -> String {
    let mut parts = Vec::new();
    for (i, v) in x.iter().enumerate() {
        if !v.is_zero() {
            if v.is_one() {
                parts.push(g.labels[i].clone());
            } else {
                parts.push(format!("{}·{}", v, g.labels[i]));
            }
        }
    }
    parts.join("+")
}

/// Stable-partition u so θ-fixed vectors come first; returns the k-count if
/// every vector is a θ-eigenvector.
fn sort_by_theta(g: &LieAlgebra, u_basis: &mut Vec<Coord>) -> Option<usize> {
    let mut kpart = Vec::new();
    let mut ppart = Vec::new();
    for v in u_basis.iter() {
        let tv = g.theta_apply(v);
        if tv == *v {
            kpart.push(v.clone());
        } else if tv == vec_scale(v, &Scalar::from_int(-1)) {
            ppart.push(v.clone());
        } else {
            return None;
        }
    }
    let k = kpart.len();
    kpart.extend(ppart);
    *u_basis = kpart;
    Some(k)
}

/// Solve for the basis of ū dual to the given u-basis.
pub fn dual_basis(g: &LieAlgebra, u_basis: &[Coord], ubar_span: &[Coord]) -> Result<Vec<Coord>> {
    let n = u_basis.len();
    let mut gram_cols = Vec::new();
    for w in ubar_span {
        gram_cols.push(u_basis.iter().map(|u| g.pairing(w, u)).collect::<Coord>());
    }
    let gram = SparseMatrix::from_columns(n, &gram_cols);
    let mut out = Vec::new();
    for i in 0..n {
        let c = solve(&gram, &unit_vec(n, i))
            .ok_or_else(|| Error::Polarization("u and ū are not in perfect duality".into()))?;
        let mut v = zero_vec(g.dim);
        for (k, ck) in c.iter().enumerate() {
            if !ck.is_zero() {
                v = crate::linalg::vec_add(&v, &vec_scale(&ubar_span[k], ck));
            }
        }
        out.push(v);
    }
    Ok(out)
}

/// Report of a compatibility check between two decompositions (the four
/// intersection splittings and their orthogonality).
#[derive(Clone, Debug, Serialize)]
pub struct CompatibilityReport {
    pub compatible: bool,
    pub failures: Vec<String>,
    pub dim_r_cap_rp: usize,
}

pub fn check_compatible(
    g: &LieAlgebra,
    dec_r: &Decomposition,
    dec_rp: &Decomposition,
) -> Result<CompatibilityReport> {
    if dec_r.algebra.name != dec_rp.algebra.name {
        return Err(Error::Dimension("decompositions over different algebras".into()));
    }
    let r = dec_r.r_subspace();
    let s = dec_r.s_subspace();
    let rp = dec_rp.r_subspace();
    let sp = dec_rp.s_subspace();
    let mut failures = Vec::new();
    {
        let mut check_split = |name: &str, whole: &Subspace, a: &Subspace, b: &Subspace| {
            let cap_a = whole.intersect(a).unwrap();
            let cap_b = whole.intersect(b).unwrap();
            if cap_a.dim() + cap_b.dim() != whole.dim() {
                failures.push(format!("{name}: intersections do not span"));
                return;
            }
            for x in cap_a.basis() {
                for y in cap_b.basis() {
                    if !g.pairing(x, y).is_zero() {
                        failures.push(format!("{name}: parts not orthogonal"));
                        return;
                    }
                }
            }
        };
        check_split("r = r∩r' ⊕ r∩s'", &r, &rp, &sp);
        check_split("s = s∩r' ⊕ s∩s'", &s, &rp, &sp);
        check_split("r' = r'∩r ⊕ r'∩s", &rp, &r, &s);
        check_split("s' = s'∩r ⊕ s'∩s", &sp, &r, &s);
    }
    // B must stay nondegenerate on r∩r'
    let cap = r.intersect(&rp)?;
    let m = cap.dim();
    if m > 0 {
        let mut gram = SparseMatrix::zero(m, m);
        for (i, x) in cap.basis().iter().enumerate() {
            for (j, y) in cap.basis().iter().enumerate() {
                gram.set(i, j, g.pairing(x, y));
            }
        }
        if crate::linalg::rank(&gram) != m {
            failures.push("B degenerate on r∩r'".into());
        }
    }
    Ok(CompatibilityReport { compatible: failures.is_empty(), failures, dim_r_cap_rp: cap.dim() })
}

/// ρ(part): the functional X ↦ ½·tr(ad X |_part) on the Cartan, for an
/// ad-l-stable subspace spanned by `part`.
pub fn rho_character(g: &LieAlgebra, l_basis: &[Coord], part: &[Coord]) -> Result<WeightFunctional> {
    let span = Subspace::from_spanning(g.dim, part);
    for x in l_basis {
        for p in part {
            if !span.contains(&g.bracket(x, p)) {
                return Err(Error::NotStable("part is not ad-l-stable".into()));
            }
        }
    }
    let part_mat = SparseMatrix::from_columns(g.dim, &span.basis().to_vec());
    let mut values = Vec::new();
    for &hk in &g.cartan {
        let h = unit_vec(g.dim, hk);
        let mut tr = Scalar::zero();
        for (i, p) in span.basis().iter().enumerate() {
            let img = g.bracket(&h, p);
            let coeffs = solve(&part_mat, &img)
                .ok_or_else(|| Error::NotStable("part is not stable under the Cartan".into()))?;
            tr += &coeffs[i];
        }
        values.push(&tr * &Scalar::from_ratio(1, 2));
    }
    Ok(WeightFunctional { values })
}

/// Full W-orbit {w(λ)} as a multiset (duplicates retained when λ is on a wall).
pub fn weyl_orbit(g: &LieAlgebra, lam: &WeightFunctional) -> Result<Vec<WeightFunctional>> {
    let rank = g.cartan.len();
    if lam.values.len() != rank {
        return Err(Error::Dimension("weight rank mismatch".into()));
    }
    type Mat = Vec<Vec<Scalar>>;
    let mut gens: Vec<Mat> = Vec::new();
    for refl in &g.reflections {
        let c = g.cartan_coords(&refl.coroot)?;
        let mut m = vec![vec![Scalar::zero(); rank]; rank];
        for (k, row) in m.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                let mut v = if k == j { Scalar::one() } else { Scalar::zero() };
                v -= &(&refl.root[k] * &c[j]);
                *entry = v;
            }
        }
        gens.push(m);
    }
    let apply = |m: &Mat, v: &Vec<Scalar>| -> Vec<Scalar> {
        (0..rank)
            .map(|k| {
                let mut s = Scalar::zero();
                for j in 0..rank {
                    s += &(&m[k][j] * &v[j]);
                }
                s
            })
            .collect()
    };
    let compose = |a: &Mat, b: &Mat| -> Mat {
        (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        let mut s = Scalar::zero();
                        for k in 0..rank {
                            s += &(&a[i][k] * &b[k][j]);
                        }
                        s
                    })
                    .collect()
            })
            .collect()
    };
    let key = |m: &Mat| format!("{m:?}");
    let id: Mat = (0..rank)
        .map(|i| (0..rank).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
        .collect();
    let mut group = vec![id.clone()];
    let mut seen = BTreeSet::new();
    seen.insert(key(&id));
    let mut frontier = vec![id];
    while let Some(w) = frontier.pop() {
        for gmat in &gens {
            let prod = compose(gmat, &w);
            if seen.insert(key(&prod)) {
                group.push(prod.clone());
                frontier.push(prod);
            }
        }
        if group.len() > 1024 {
            return Err(Error::UnsupportedRank("Weyl group closure too large".into()));
        }
    }
    let mut orbit: Vec<WeightFunctional> =
        group.iter().map(|w| WeightFunctional { values: apply(w, &lam.values) }).collect();
    orbit.sort();
    Ok(orbit)
}

// ---------------------------------------------------------------------------
// loading and built-ins
// ---------------------------------------------------------------------------

/// JSON schema for an algebra specification file.
#[derive(Serialize, Deserialize)]
pub struct AlgebraSpec {
    pub name: String,
    pub dim: usize,
    pub labels: Vec<String>,
    /// Entries [i, j, [[k, coeff], ...]] for i < j; antisymmetry is implied.
    pub brackets: Vec<(usize, usize, Vec<(usize, String)>)>,
    /// "killing" or an explicit symmetric matrix of exact literals.
    pub form: serde_json::Value,
    pub theta: Vec<Vec<String>>,
    pub sigma: Vec<Vec<String>>,
    pub cartan: Vec<usize>,
    #[serde(default)]
    pub positive: Vec<usize>,
}

fn matrix_from_strings(rows: &[Vec<String>]) -> Result<SparseMatrix> {
    let n = rows.len();
    let mut m = SparseMatrix::zero(n, n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Parse("matrix is not square".into()));
        }
        for (j, s) in row.iter().enumerate() {
            m.set(i, j, Scalar::parse(s)?);
        }
    }
    Ok(m)
}

/// Load and fully validate an algebra from a parsed spec.
pub fn load_algebra(spec: &AlgebraSpec) -> Result<Arc<LieAlgebra>> {
    let n = spec.dim;
    let mut table = vec![vec![zero_vec(n); n]; n];
    for (i, j, terms) in &spec.brackets {
        if *i >= n || *j >= n {
            return Err(Error::Parse("bracket index out of range".into()));
        }
        let mut v = zero_vec(n);
        for (k, c) in terms {
            if *k >= n {
                return Err(Error::Parse("bracket target index out of range".into()));
            }
            v[*k] = v[*k].clone() + &Scalar::parse(c)?;
        }
        table[*i][*j] = v.clone();
        table[*j][*i] = v.iter().map(|x| -x.clone()).collect();
    }
    let theta = matrix_from_strings(&spec.theta)?;
    let sigma = matrix_from_strings(&spec.sigma)?;
    let mut alg = LieAlgebra {
        name: spec.name.clone(),
        dim: n,
        labels: spec.labels.clone(),
        bracket_table: table,
        form: SparseMatrix::zero(n, n),
        theta,
        sigma,
        cartan: spec.cartan.clone(),
        positive: spec.positive.clone(),
        reflections: Vec::new(),
    };
    alg.form = match &spec.form {
        serde_json::Value::String(s) if s == "killing" => alg.killing_form(),
        serde_json::Value::Array(rows) => {
            let rows: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    r.as_array()
                        .ok_or_else(|| Error::Parse("form row is not an array".into()))
                        .and_then(|a| {
                            a.iter()
                                .map(|v| {
                                    v.as_str().map(|s| s.to_string()).ok_or_else(|| {
                                        Error::Parse("form entry not a string".into())
                                    })
                                })
                                .collect()
                        })
                })
                .collect::<Result<_>>()?;
            matrix_from_strings(&rows)?
        }
        _ => return Err(Error::Parse("form must be \"killing\" or a matrix".into())),
    };
    alg.validate()?;
    Ok(Arc::new(alg))
}

fn sc(n: i64) -> Scalar {
    Scalar::from_int(n)
}

struct BuiltinTable {
    labels: Vec<&'static str>,
    brackets: Vec<(usize, usize, Vec<(usize, i64)>)>,
    trace_form: Vec<(usize, usize, i64)>,
    theta_diag: Vec<i64>,
    sigma: Vec<(usize, usize, i64)>,
    cartan: Vec<usize>,
    positive: Vec<usize>,
    reflections: Vec<(Vec<i64>, usize)>, // (root values, coroot basis index)
}

fn build(name: &str, t: BuiltinTable, form_choice: FormChoice) -> Arc<LieAlgebra> {
    let n = t.labels.len();
    let mut table = vec![vec![zero_vec(n); n]; n];
    for (i, j, terms) in &t.brackets {
        let mut v = zero_vec(n);
        for (k, c) in terms {
            v[*k] = sc(*c);
        }
        table[*i][*j] = v.clone();
        table[*j][*i] = v.iter().map(|x| -x.clone()).collect();
    }
    let mut form = SparseMatrix::zero(n, n);
    for (i, j, c) in &t.trace_form {
        form.set(*i, *j, sc(*c));
        form.set(*j, *i, sc(*c));
    }
    let mut theta = SparseMatrix::zero(n, n);
    for (i, c) in t.theta_diag.iter().enumerate() {
        theta.set(i, i, sc(*c));
    }
    let mut sigma = SparseMatrix::zero(n, n);
    for (i, j, c) in &t.sigma {
        sigma.set(*i, *j, sc(*c));
    }
    let mut alg = LieAlgebra {
        name: name.to_string(),
        dim: n,
        labels: t.labels.iter().map(|s| s.to_string()).collect(),
        bracket_table: table,
        form,
        theta,
        sigma,
        cartan: t.cartan,
        positive: t.positive,
        reflections: Vec::new(),
    };
    if form_choice == FormChoice::Killing {
        alg.form = alg.killing_form();
    }
    alg.reflections = t
        .reflections
        .iter()
        .map(|(root, coroot_idx)| Reflection {
            root: root.iter().map(|v| sc(*v)).collect(),
            coroot: unit_vec(n, *coroot_idx),
        })
        .collect();
    alg.validate().expect("built-in algebra must validate");
    Arc::new(alg)
}

/// Construct a built-in algebra: `sl2`, `sl2x2`, `sl3` (with the rank-one
/// hermitian real form data) or `gl2`.
pub fn builtin_algebra(name: &str, form_choice: FormChoice) -> Result<Arc<LieAlgebra>> {
    match name {
        // Basis (e, f, h) with k = so(2) spanned by h: θ fixes h and flips
        // e, f; σ swaps e and f and negates h. With the trace form,
        // B(e,f) = 1 and B(h,h) = 2, so (e, f) is already a dual pair.
        "sl2" => Ok(build(
            "sl2",
            BuiltinTable {
                labels: vec!["e", "f", "h"],
                brackets: vec![(0, 1, vec![(2, 1)]), (2, 0, vec![(0, 2)]), (2, 1, vec![(1, -2)])],
                trace_form: vec![(0, 1, 1), (2, 2, 2)],
                theta_diag: vec![-1, -1, 1],
                sigma: vec![(0, 1, 1), (1, 0, 1), (2, 2, -1)],
                cartan: vec![2],
                positive: vec![0],
                reflections: vec![(vec![2], 2)],
            },
            form_choice,
        )),
        "sl2x2" => Ok(build(
            "sl2x2",
            BuiltinTable {
                labels: vec!["e1", "f1", "h1", "e2", "f2", "h2"],
                brackets: vec![
                    (0, 1, vec![(2, 1)]),
                    (2, 0, vec![(0, 2)]),
                    (2, 1, vec![(1, -2)]),
                    (3, 4, vec![(5, 1)]),
                    (5, 3, vec![(3, 2)]),
                    (5, 4, vec![(4, -2)]),
                ],
                trace_form: vec![(0, 1, 1), (2, 2, 2), (3, 4, 1), (5, 5, 2)],
                theta_diag: vec![-1, -1, 1, -1, -1, 1],
                sigma: vec![(0, 1, 1), (1, 0, 1), (2, 2, -1), (3, 4, 1), (4, 3, 1), (5, 5, -1)],
                cartan: vec![2, 5],
                positive: vec![0, 3],
                reflections: vec![(vec![2, 0], 2), (vec![0, 2], 5)],
            },
            form_choice,
        )),
        // Root vectors e12, e13, e23, f12, f13, f23 and the Cartan h1, h2.
        // θ = Ad diag(1,1,-1) gives k = gl(2); σ is the corresponding
        // rank-one hermitian real form conjugation.
        "sl3" => Ok(build(
            "sl3",
            BuiltinTable {
                labels: vec!["e12", "e13", "e23", "f12", "f13", "f23", "h1", "h2"],
                brackets: vec![
                    (0, 2, vec![(1, 1)]),
                    (0, 3, vec![(6, 1)]),
                    (0, 4, vec![(5, -1)]),
                    (1, 3, vec![(2, -1)]),
                    (1, 4, vec![(6, 1), (7, 1)]),
                    (1, 5, vec![(0, 1)]),
                    (2, 4, vec![(3, 1)]),
                    (2, 5, vec![(7, 1)]),
                    (3, 5, vec![(4, -1)]),
                    (6, 0, vec![(0, 2)]),
                    (6, 1, vec![(1, 1)]),
                    (6, 2, vec![(2, -1)]),
                    (6, 3, vec![(3, -2)]),
                    (6, 4, vec![(4, -1)]),
                    (6, 5, vec![(5, 1)]),
                    (7, 0, vec![(0, -1)]),
                    (7, 1, vec![(1, 1)]),
                    (7, 2, vec![(2, 2)]),
                    (7, 3, vec![(3, 1)]),
                    (7, 4, vec![(4, -1)]),
                    (7, 5, vec![(5, -2)]),
                ],
                trace_form: vec![(0, 3, 1), (1, 4, 1), (2, 5, 1), (6, 6, 2), (7, 7, 2), (6, 7, -1)],
                theta_diag: vec![1, -1, -1, 1, -1, -1, 1, 1],
                sigma: vec![
                    (3, 0, -1),
                    (0, 3, -1),
                    (4, 1, 1),
                    (1, 4, 1),
                    (5, 2, 1),
                    (2, 5, 1),
                    (6, 6, -1),
                    (7, 7, -1),
                ],
                cartan: vec![6, 7],
                positive: vec![0, 1, 2],
                reflections: vec![(vec![2, -1], 6), (vec![-1, 2], 7)],
            },
            form_choice,
        )),
        // k of the rank-one hermitian picture as a standalone reductive
        // algebra: sl2 plus a central z with B(z,z) = 6 (trace form of
        // diag(1,1,-2)). The Killing form is degenerate on the center.
        "gl2" if form_choice == FormChoice::Killing => Err(Error::DegenerateForm),
        "gl2" => Ok(build(
            "gl2",
            BuiltinTable {
                labels: vec!["e", "f", "h", "z"],
                brackets: vec![(0, 1, vec![(2, 1)]), (2, 0, vec![(0, 2)]), (2, 1, vec![(1, -2)])],
                trace_form: vec![(0, 1, 1), (2, 2, 2), (3, 3, 6)],
                theta_diag: vec![1, 1, 1, 1],
                sigma: vec![(0, 1, -1), (1, 0, -1), (2, 2, -1), (3, 3, -1)],
                cartan: vec![2, 3],
                positive: vec![0],
                reflections: vec![(vec![2, 0], 2)],
            },
            form_choice,
        )),
        _ => Err(Error::Unknown(format!("no built-in algebra named '{name}'"))),
    }
}

/// Named built-in decompositions per algebra.
pub fn builtin_decomposition(g: &Arc<LieAlgebra>, name: &str) -> Result<Decomposition> {
    let mk_h = |coords: &[(usize, i64)]| {
        let mut h = zero_vec(g.dim);
        for (i, c) in coords {
            h[*i] = sc(*c);
        }
        h
    };
    let mut dec = match (g.name.as_str(), name) {
        ("sl2", "borel") => parabolic_from_grading(g, &mk_h(&[(2, 1)]))?,
        ("sl2x2", "borel") => parabolic_from_grading(g, &mk_h(&[(2, 1), (5, 1)]))?,
        ("sl3", "borel") => parabolic_from_grading(g, &mk_h(&[(6, 2), (7, 2)]))?,
        // Levi gl(2) = k: grading by h1 + 2·h2 = diag(1,1,-2)
        ("sl3", "levi-gl2") | ("sl3", "compact-k") => {
            parabolic_from_grading(g, &mk_h(&[(6, 1), (7, 2)]))?
        }
        // Borel for the opposite compact root: u = span{f12, e13, e23}.
        // Witnesses that C and E depend on the choice of polarization.
        ("sl3", "borel-opp-compact") => {
            let u = vec![unit_vec(g.dim, 3), unit_vec(g.dim, 1), unit_vec(g.dim, 2)];
            let ubar = vec![unit_vec(g.dim, 0), unit_vec(g.dim, 4), unit_vec(g.dim, 5)];
            make_decomposition(
                g,
                "borel-opp-compact",
                &[unit_vec(g.dim, 6), unit_vec(g.dim, 7)],
                &u,
                &ubar,
            )?
        }
        // Non-aligned Borel: u∩p = span{e23, f13} is neither p⁺ nor p⁻, so
        // the mixed cubic pieces are all nonzero.
        ("sl3", "borel-mixed") => {
            let u = vec![unit_vec(g.dim, 3), unit_vec(g.dim, 2), unit_vec(g.dim, 4)];
            let ubar = vec![unit_vec(g.dim, 0), unit_vec(g.dim, 5), unit_vec(g.dim, 1)];
            make_decomposition(
                g,
                "borel-mixed",
                &[unit_vec(g.dim, 6), unit_vec(g.dim, 7)],
                &u,
                &ubar,
            )?
        }
        ("gl2", "borel") => parabolic_from_grading(g, &mk_h(&[(2, 1)]))?,
        _ => {
            return Err(Error::Unknown(format!(
                "no built-in decomposition '{name}' for algebra '{}'",
                g.name
            )))
        }
    };
    dec.name = format!("{}/{}", g.name, name);
    Ok(dec)
}

/// Assemble and verify a decomposition from explicit bases. The ū basis is
/// rescaled into the B-dual basis of the given u-basis.
pub fn make_decomposition(
    g: &Arc<LieAlgebra>,
    name: &str,
    r_basis: &[Coord],
    u_basis: &[Coord],
    ubar_span: &[Coord],
) -> Result<Decomposition> {
    let mut u_basis = u_basis.to_vec();
    let k_count = sort_by_theta(g, &mut u_basis);
    let ustar_basis = dual_basis(g, &u_basis, ubar_span)?;
    let dec = Decomposition {
        algebra: Arc::clone(g),
        name: name.to_string(),
        r_basis: r_basis.to_vec(),
        u_basis,
        ustar_basis,
        k_count,
    };
    dec.verify()?;
    Ok(dec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_validate() {
        for name in ["sl2", "sl2x2", "sl3", "gl2"] {
            builtin_algebra(name, FormChoice::Trace).unwrap();
        }
        for name in ["sl2", "sl2x2", "sl3"] {
            builtin_algebra(name, FormChoice::Killing).unwrap();
        }
        // the Killing form is degenerate on the center of gl2
        assert!(matches!(builtin_algebra("gl2", FormChoice::Killing), Err(Error::DegenerateForm)));
    }

    #[test]
    fn sl2_forms_match_matrix_oracles() {
        // trace form on 2x2 matrices: B(e,f) = 1, B(h,h) = 2
        let g = builtin_algebra("sl2", FormChoice::Trace).unwrap();
        assert_eq!(g.form.get(0, 1), sc(1));
        assert_eq!(g.form.get(2, 2), sc(2));
        // Killing form: brute-force trace of ad-products gives 4 and 8
        let gk = builtin_algebra("sl2", FormChoice::Killing).unwrap();
        assert_eq!(gk.form.get(0, 1), sc(4));
        assert_eq!(gk.form.get(2, 2), sc(8));
    }

    #[test]
    fn corrupted_brackets_are_rejected() {
        // [h,f] = +2f breaks Jacobi for [e,f] = h, [h,e] = 2e
        let spec = AlgebraSpec {
            name: "bad".into(),
            dim: 3,
            labels: vec!["e".into(), "f".into(), "h".into()],
            brackets: vec![
                (0, 1, vec![(2, "1".into())]),
                (2, 0, vec![(0, "2".into())]),
                (2, 1, vec![(1, "2".into())]),
            ],
            form: serde_json::json!("killing"),
            theta: vec![
                vec!["-1".into(), "0".into(), "0".into()],
                vec!["0".into(), "-1".into(), "0".into()],
                vec!["0".into(), "0".into(), "1".into()],
            ],
            sigma: vec![
                vec!["0".into(), "1".into(), "0".into()],
                vec!["1".into(), "0".into(), "0".into()],
                vec!["0".into(), "0".into(), "-1".into()],
            ],
            cartan: vec![2],
            positive: vec![0],
        };
        match load_algebra(&spec) {
            Err(Error::Jacobi(..)) | Err(Error::DegenerateForm) => {}
            other => panic!("expected Jacobi or degeneracy failure, got {other:?}"),
        }
    }

    #[test]
    fn sl2_borel_decomposition() {
        let g = builtin_algebra("sl2", FormChoice::Trace).unwrap();
        let dec = builtin_decomposition(&g, "borel").unwrap();
        assert_eq!(dec.r_basis.len(), 1);
        assert_eq!(dec.n(), 1);
        assert_eq!(dec.u_basis[0], unit_vec(3, 0));
        assert_eq!(dec.ustar_basis[0], unit_vec(3, 1));
    }

    #[test]
    fn sl3_levi_decomposition_has_gl2_levi() {
        let g = builtin_algebra("sl3", FormChoice::Trace).unwrap();
        let dec = builtin_decomposition(&g, "levi-gl2").unwrap();
        assert_eq!(dec.r_basis.len(), 4);
        assert_eq!(dec.n(), 2);
        // eigenvalues of ad(diag(1,1,-2)) on root vectors: u = {e13, e23}
        let u = Subspace::from_spanning(8, &dec.u_basis);
        assert!(u.contains(&unit_vec(8, 1)) && u.contains(&unit_vec(8, 2)));
    }

    #[test]
    fn nilpotent_grading_rejected() {
        let g = builtin_algebra("sl2", FormChoice::Trace).unwrap();
        let e = unit_vec(3, 0);
        assert!(matches!(parabolic_from_grading(&g, &e), Err(Error::BadGrading(_))));
    }

    #[test]
    fn compatibility_examples() {
        let g = builtin_algebra("sl3", FormChoice::Trace).unwrap();
        let levi = builtin_decomposition(&g, "levi-gl2").unwrap();
        // r = r' is trivially compatible
        let rep = check_compatible(&g, &levi, &levi).unwrap();
        assert!(rep.compatible, "{:?}", rep.failures);
        // Borel Levi t against k = gl2
        let borel = builtin_decomposition(&g, "borel").unwrap();
        let rep = check_compatible(&g, &borel, &levi).unwrap();
        assert!(rep.compatible, "{:?}", rep.failures);
        assert_eq!(rep.dim_r_cap_rp, 2);
    }

    #[test]
    fn incompatible_when_form_degenerate_on_cap() {
        let g = builtin_algebra("sl2", FormChoice::Trace).unwrap();
        let borel = builtin_decomposition(&g, "borel").unwrap();
        // r' = span{e, h} has degenerate B and fails the splitting checks
        let fake = Decomposition {
            algebra: g.clone(),
            name: "fake".into(),
            r_basis: vec![unit_vec(3, 0), unit_vec(3, 2)],
            u_basis: vec![],
            ustar_basis: vec![],
            k_count: Some(0),
        };
        let rep = check_compatible(&g, &fake, &borel).unwrap();
        assert!(!rep.compatible);
    }

    #[test]
    fn rho_characters() {
        let g = builtin_algebra("sl2", FormChoice::Trace).unwrap();
        let dec = builtin_decomposition(&g, "borel").unwrap();
        let rho_u = rho_character(&g, &dec.r_basis, &dec.u_basis).unwrap();
        assert_eq!(rho_u.values, vec![sc(1)]);
        let rho_ubar = rho_character(&g, &dec.r_basis, &dec.ustar_basis).unwrap();
        assert_eq!(rho_ubar.values, vec![sc(-1)]);

        // sl3 Borel: ρ(n) on both coroots is 1 (sum of fundamental weights)
        let g3 = builtin_algebra("sl3", FormChoice::Trace).unwrap();
        let dec3 = builtin_decomposition(&g3, "borel").unwrap();
        let rho_n = rho_character(&g3, &dec3.r_basis, &dec3.u_basis).unwrap();
        assert_eq!(rho_n.values, vec![sc(1), sc(1)]);
        assert_eq!(g3.rho().values, vec![sc(1), sc(1)]);
    }

    #[test]
    fn rho_character_rejects_unstable_part() {
        let g = builtin_algebra("sl2", FormChoice::Trace).unwrap();
        let dec = builtin_decomposition(&g, "borel").unwrap();
        let part = vec![crate::linalg::vec_add(&unit_vec(3, 0), &unit_vec(3, 2))];
        assert!(rho_character(&g, &dec.r_basis, &part).is_err());
    }

    #[test]
    fn weyl_orbits() {
        let g = builtin_algebra("sl2", FormChoice::Trace).unwrap();
        let lam = WeightFunctional { values: vec![sc(3)] };
        let orbit = weyl_orbit(&g, &lam).unwrap();
        assert_eq!(orbit.len(), 2);
        assert!(orbit.contains(&WeightFunctional { values: vec![sc(3)] }));
        assert!(orbit.contains(&WeightFunctional { values: vec![sc(-3)] }));

        let g3 = builtin_algebra("sl3", FormChoice::Trace).unwrap();
        let lam = WeightFunctional { values: vec![sc(3), sc(1)] };
        let orbit = weyl_orbit(&g3, &lam).unwrap();
        assert_eq!(orbit.len(), 6);
        let distinct: BTreeSet<String> = orbit.iter().map(|w| format!("{w:?}")).collect();
        assert_eq!(distinct.len(), 6, "generic weight has trivial stabilizer");
        // closure under each generator reflection
        for w in &orbit {
            for refl in &g3.reflections {
                let c = g3.cartan_coords(&refl.coroot).unwrap();
                let pairing: Scalar = w
                    .values
                    .iter()
                    .zip(&c)
                    .map(|(a, b)| a * b)
                    .fold(Scalar::zero(), |acc, x| acc + &x);
                let reflected = WeightFunctional {
                    values: w
                        .values
                        .iter()
                        .zip(&refl.root)
                        .map(|(v, r)| v.clone() - &(&pairing * r))
                        .collect(),
                };
                assert!(orbit.contains(&reflected));
            }
        }
        // weight on a wall: sl3 with λ(h1) = 0 has a 2-element stabilizer
        let wall = WeightFunctional { values: vec![sc(0), sc(1)] };
        let orbit = weyl_orbit(&g3, &wall).unwrap();
        assert_eq!(orbit.len(), 6);
        let distinct: BTreeSet<String> = orbit.iter().map(|w| format!("{w:?}")).collect();
        assert_eq!(distinct.len(), 3, "wall weight appears with multiplicity 2");
        // torus: trivial Weyl group
        let mut torus = (*builtin_algebra("gl2", FormChoice::Trace).unwrap()).clone();
        torus.reflections.clear();
        let lam = WeightFunctional { values: vec![sc(5), sc(1)] };
        let orbit = weyl_orbit(&torus, &lam).unwrap();
        assert_eq!(orbit, vec![lam]);
    }

    #[test]
    fn infinitesimal_character_values() {
        let g = builtin_algebra("sl2", FormChoice::Trace).unwrap();
        assert_eq!(infinitesimal_character_scalar(&g, &WeightFunctional::zero(1)), Scalar::zero());
        // λ(h) = m gives (m² + 2m)/2 for the trace form
        for m in 1..4i64 {
            let lam = WeightFunctional { values: vec![sc(m)] };
            assert_eq!(
                infinitesimal_character_scalar(&g, &lam),
                Scalar::from_ratio(m * m + 2 * m, 2)
            );
        }
    }
}
