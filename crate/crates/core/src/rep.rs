//! Orthogonal representations of finite groups and the subspace machinery
//! built on top of them.
//!
//! A `Representation` attaches one orthogonal `d x d` matrix per group
//! element and validates orthogonality and the homomorphism property on
//! construction. From it we derive the kernel, the averaging (fixed-space)
//! projector, orbits and stabilizers, and orthonormal bases for the
//! subspaces of the block space `R^d[G] = R^{d*r}`:
//!
//! * `V0`   - blockwise-constant vectors,
//! * `Vrho` - vectors of the form `(rho(g) v)_g`,
//! * `W0`   - vectors whose blocks sum to zero,
//! * `Wrho` - vectors with `sum_g rho(g)^{-1} w_g = 0`,
//! * `W`    - the intersection `W0 ∩ Wrho`, of dimension `d(r-2)` when the
//!   representation contains no trivial subrepresentation,
//! * `RperpG` - the sum-zero hyperplane of `R^r`.

use nalgebra::{DMatrix, DVector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::linalg;

/// Structural identities (orthogonality, homomorphism, projector) are held
/// to this tolerance.
pub const STRUCT_TOL: f64 = 1e-10;

/// Rank, stabilizer and kernel decisions use this relative tolerance.
pub const RANK_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SubspaceName {
    V0,
    Vrho,
    W0,
    Wrho,
    W,
    RperpG,
}

/// An orthonormal basis of a named subspace, stored column-wise.
#[derive(Debug, Clone)]
pub struct SubspaceBasis {
    pub ambient_dim: usize,
    pub basis: DMatrix<f64>,
    pub name: SubspaceName,
}

impl SubspaceBasis {
    fn new(name: SubspaceName, basis: DMatrix<f64>) -> Self {
        debug_assert!(linalg::orthonormal_defect(&basis) <= 1e-10);
        Self {
            ambient_dim: basis.nrows(),
            basis,
            name,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    /// `max |B^T B - I|`.
    pub fn orthonormal_defect(&self) -> f64 {
        linalg::orthonormal_defect(&self.basis)
    }
}

#[derive(Debug, Clone)]
pub struct Representation {
    group: FiniteGroup,
    dim: usize,
    mats: Vec<DMatrix<f64>>,
    tol_ortho: f64,
}

impl Representation {
    /// Validate and construct. `rho(identity)` is snapped to the exact
    /// identity matrix after checking it is within tolerance.
    pub fn new(group: FiniteGroup, mats: Vec<DMatrix<f64>>) -> Result<Self> {
        Self::with_tolerance(group, mats, STRUCT_TOL)
    }

    pub fn with_tolerance(
        group: FiniteGroup,
        mut mats: Vec<DMatrix<f64>>,
        tol_ortho: f64,
    ) -> Result<Self> {
        let r = group.order();
        if mats.len() != r {
            return Err(Error::InvalidMatrix(format!(
                "{} matrices for {} group elements",
                mats.len(),
                r
            )));
        }
        let dim = mats[0].nrows();
        if dim == 0 {
            return Err(Error::InvalidMatrix("zero-dimensional matrices".into()));
        }
        for (g, m) in mats.iter().enumerate() {
            if m.shape() != (dim, dim) {
                return Err(Error::InvalidMatrix(format!(
                    "matrix {g} has shape {:?}, expected ({dim},{dim})",
                    m.shape()
                )));
            }
            if m.iter().any(|x| !x.is_finite()) {
                return Err(Error::InvalidMatrix(format!("matrix {g} has non-finite entries")));
            }
            let defect = linalg::max_abs(&(m.transpose() * m - DMatrix::identity(dim, dim)));
            if defect > tol_ortho {
                return Err(Error::InvalidMatrix(format!(
                    "matrix {g} is not orthogonal (defect {defect:.3e})"
                )));
            }
        }
        let e = group.identity();
        let id_defect = linalg::max_abs(&(&mats[e] - DMatrix::identity(dim, dim)));
        if id_defect > tol_ortho {
            return Err(Error::InvalidMatrix(format!(
                "identity element maps to a non-identity matrix (defect {id_defect:.3e})"
            )));
        }
        mats[e] = DMatrix::identity(dim, dim);
        for a in 0..r {
            for b in 0..r {
                let prod = &mats[a] * &mats[b];
                let defect = linalg::max_abs(&(prod - &mats[group.mul(a, b)]));
                if defect > tol_ortho {
                    return Err(Error::InvalidMatrix(format!(
                        "homomorphism fails on ({a},{b}) with defect {defect:.3e}"
                    )));
                }
            }
        }
        Ok(Self {
            group,
            dim,
            mats,
            tol_ortho,
        })
    }

    /// Close a set of orthogonal generators under multiplication, matching
    /// products within `1e-8`, and build the group alongside the matrices.
    /// Element 0 is the identity.
    pub fn from_generators(generators: &[DMatrix<f64>], cap: usize) -> Result<Self> {
        const MATCH_TOL: f64 = 1e-8;
        if generators.is_empty() {
            return Err(Error::InvalidParameter("no generators".into()));
        }
        let dim = generators[0].nrows();
        for (i, g) in generators.iter().enumerate() {
            if g.shape() != (dim, dim) {
                return Err(Error::InvalidMatrix(format!(
                    "generator {i} has shape {:?}",
                    g.shape()
                )));
            }
            let defect = linalg::max_abs(&(g.transpose() * g - DMatrix::identity(dim, dim)));
            if defect > MATCH_TOL {
                return Err(Error::InvalidMatrix(format!(
                    "generator {i} is not orthogonal (defect {defect:.3e})"
                )));
            }
        }
        let cap = cap.min(crate::group::MAX_ORDER);
        let mut elements: Vec<DMatrix<f64>> = vec![DMatrix::identity(dim, dim)];
        let mut frontier = vec![0usize];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &idx in &frontier {
                for gen in generators {
                    let prod = &elements[idx] * gen;
                    if find_match(&elements, &prod, MATCH_TOL).is_none() {
                        elements.push(prod);
                        if elements.len() > cap {
                            return Err(Error::NotFiniteWithinCap { cap });
                        }
                        next.push(elements.len() - 1);
                    }
                }
            }
            frontier = next;
        }
        let r = elements.len();
        let mut mul = vec![0usize; r * r];
        for a in 0..r {
            for b in 0..r {
                let prod = &elements[a] * &elements[b];
                let idx = find_match(&elements, &prod, MATCH_TOL).ok_or_else(|| {
                    Error::InvalidMatrix(format!("closure is not multiplication-closed at ({a},{b})"))
                })?;
                mul[a * r + b] = idx;
            }
        }
        let group = FiniteGroup::from_table(r, mul, None)?;
        Self::new(group, elements)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn tol_ortho(&self) -> f64 {
        self.tol_ortho
    }

    pub fn mat(&self, g: usize) -> &DMatrix<f64> {
        &self.mats[g]
    }

    /// `rho(g) v`.
    pub fn apply(&self, g: usize, v: &DVector<f64>) -> DVector<f64> {
        &self.mats[g] * v
    }

    /// `rho(g)^{-1} v`, using the transpose.
    pub fn apply_inv(&self, g: usize, v: &DVector<f64>) -> DVector<f64> {
        self.mats[g].tr_mul(v)
    }

    /// Elements represented by the identity matrix (within 1e-8), sorted.
    pub fn kernel(&self) -> Vec<usize> {
        let id = DMatrix::identity(self.dim, self.dim);
        (0..self.order())
            .filter(|&g| linalg::max_abs(&(&self.mats[g] - &id)) <= RANK_TOL)
            .collect()
    }

    pub fn is_faithful(&self) -> bool {
        self.kernel().len() == 1
    }

    /// The averaging operator `P = (1/r) sum_g rho(g)`, the orthogonal
    /// projector onto the fixed subspace.
    pub fn fixed_projector(&self) -> DMatrix<f64> {
        let mut p = DMatrix::zeros(self.dim, self.dim);
        for m in &self.mats {
            p += m;
        }
        p / self.order() as f64
    }

    /// A representation is full-dimensional iff it has no trivial
    /// subrepresentation, iff the averaging operator vanishes.
    pub fn has_trivial_subrep(&self) -> bool {
        linalg::max_abs(&self.fixed_projector()) > STRUCT_TOL
    }

    /// Orthonormal basis of `W = W0 ∩ Wrho`, the nullspace of the stacked
    /// `2d x dr` constraint matrix. Requires no trivial subrepresentation;
    /// the result has exactly `d(r-2)` columns.
    pub fn basis_w(&self) -> Result<SubspaceBasis> {
        if self.has_trivial_subrep() {
            return Err(Error::TrivialSubrepresentation);
        }
        let (d, r) = (self.dim, self.order());
        let mut constraints = DMatrix::zeros(2 * d, d * r);
        for g in 0..r {
            constraints
                .view_mut((0, g * d), (d, d))
                .copy_from(&DMatrix::identity(d, d));
            constraints
                .view_mut((d, g * d), (d, d))
                .copy_from(&self.mats[g].transpose());
        }
        let basis = linalg::nullspace(&constraints, RANK_TOL);
        let expected = d * r.saturating_sub(2);
        if basis.ncols() != expected {
            return Err(Error::DegenerateRepresentation(format!(
                "W has dimension {}, expected {}",
                basis.ncols(),
                expected
            )));
        }
        Ok(SubspaceBasis::new(SubspaceName::W, basis))
    }

    /// Orthonormal basis of `Vrho = span{(rho(g) v)_g : v}`, of dimension d.
    pub fn basis_v_rho(&self) -> SubspaceBasis {
        let (d, r) = (self.dim, self.order());
        let mut stacked = DMatrix::zeros(d * r, d);
        for g in 0..r {
            stacked.view_mut((g * d, 0), (d, d)).copy_from(&self.mats[g]);
        }
        SubspaceBasis::new(SubspaceName::Vrho, linalg::column_space(&stacked, RANK_TOL))
    }

    /// Orthonormal basis of the blockwise-constant subspace `V0`.
    pub fn basis_v0(&self) -> SubspaceBasis {
        let (d, r) = (self.dim, self.order());
        let scale = 1.0 / (r as f64).sqrt();
        let mut basis = DMatrix::zeros(d * r, d);
        for g in 0..r {
            for i in 0..d {
                basis[(g * d + i, i)] = scale;
            }
        }
        SubspaceBasis::new(SubspaceName::V0, basis)
    }

    /// Orthonormal basis of `W0` (blocks summing to zero).
    pub fn basis_w0(&self) -> SubspaceBasis {
        let (d, r) = (self.dim, self.order());
        let mut constraints = DMatrix::zeros(d, d * r);
        for g in 0..r {
            constraints
                .view_mut((0, g * d), (d, d))
                .copy_from(&DMatrix::identity(d, d));
        }
        SubspaceBasis::new(SubspaceName::W0, linalg::nullspace(&constraints, RANK_TOL))
    }

    /// Orthonormal basis of `Wrho` (`sum_g rho(g)^{-1} w_g = 0`).
    pub fn basis_w_rho(&self) -> SubspaceBasis {
        let (d, r) = (self.dim, self.order());
        let mut constraints = DMatrix::zeros(d, d * r);
        for g in 0..r {
            constraints
                .view_mut((0, g * d), (d, d))
                .copy_from(&self.mats[g].transpose());
        }
        SubspaceBasis::new(SubspaceName::Wrho, linalg::nullspace(&constraints, RANK_TOL))
    }

    /// Apply the block-permutation action `h . (w_g)_g = (w_{gh})_g` of the
    /// group on `R^d[G]` to a stacked vector.
    pub fn block_action(&self, h: usize, w: &DVector<f64>) -> DVector<f64> {
        let (d, r) = (self.dim, self.order());
        assert_eq!(w.len(), d * r);
        let mut out = DVector::zeros(d * r);
        for g in 0..r {
            let src = self.group.mul(g, h);
            out.rows_mut(g * d, d).copy_from(&w.rows(src * d, d));
        }
        out
    }

    /// Dimension and intersection checks for the subspace decompositions.
    pub fn verify_decomposition(&self) -> DecompositionChecks {
        let (d, r) = (self.dim, self.order());
        let v_rho = self.basis_v_rho();
        let w_rho = self.basis_w_rho();
        let cross_v_w_rho = linalg::max_principal_cosine(&v_rho.basis, &w_rho.basis);
        let mut checks = DecompositionChecks {
            dim_v_rho: v_rho.dim(),
            dim_w_rho: w_rho.dim(),
            v_rho_plus_w_rho_ok: v_rho.dim() + w_rho.dim() == d * r,
            cross_v_w_rho,
            intersection_v_w_rho_ok: cross_v_w_rho <= RANK_TOL,
            w_checks: None,
        };
        if !self.has_trivial_subrep() {
            let w = self.basis_w().ok();
            if let Some(w) = w {
                let v0 = self.basis_v0();
                let mut vprime_cols = DMatrix::zeros(d * r, v0.dim() + v_rho.dim());
                vprime_cols
                    .view_mut((0, 0), (d * r, v0.dim()))
                    .copy_from(&v0.basis);
                vprime_cols
                    .view_mut((0, v0.dim()), (d * r, v_rho.dim()))
                    .copy_from(&v_rho.basis);
                let vprime = linalg::column_space(&vprime_cols, RANK_TOL);
                let cross = linalg::max_principal_cosine(&vprime, &w.basis);
                checks.w_checks = Some(WChecks {
                    dim_w: w.dim(),
                    dim_vprime: vprime.ncols(),
                    vprime_plus_w_ok: vprime.ncols() + w.dim() == d * r,
                    cross_vprime_w: cross,
                    intersection_ok: cross <= RANK_TOL,
                });
            }
        }
        checks
    }

    /// The orbit `[rho(g) u]_g` in element order.
    pub fn orbit(&self, u: &DVector<f64>) -> Vec<DVector<f64>> {
        (0..self.order()).map(|g| self.apply(g, u)).collect()
    }

    /// Elements fixing `u` within `1e-8 * (1 + |u|)`.
    pub fn stabilizer(&self, u: &DVector<f64>) -> Vec<usize> {
        let tol = RANK_TOL * (1.0 + u.norm());
        (0..self.order())
            .filter(|&g| (self.apply(g, u) - u).norm() <= tol)
            .collect()
    }

    /// Dimension of the affine hull of the orbit of `u`.
    pub fn affine_dim_orbit(&self, u: &DVector<f64>) -> usize {
        linalg::affine_rank(&self.orbit(u), RANK_TOL)
    }

    /// Maximum orbit affine dimension over seeded standard-normal samples.
    pub fn max_orbit_dim(&self, samples: usize, seed: u64) -> usize {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut best = 0;
        for _ in 0..samples.max(1) {
            let u = DVector::from_fn(self.dim, |_, _| StandardNormal.sample(&mut rng));
            best = best.max(self.affine_dim_orbit(&u));
            if best == self.dim {
                break;
            }
        }
        best
    }

    /// Full-dimensional iff some sampled orbit spans `R^d` affinely.
    pub fn is_full_dimensional(&self, samples: usize, seed: u64) -> bool {
        self.max_orbit_dim(samples, seed) == self.dim
    }

    /// Normalized character norm `(1/r) sum_g tr(rho(g))^2`. A value of 1
    /// certifies an absolutely irreducible real representation; 2 indicates
    /// a complex-type irreducible.
    pub fn character_norm(&self) -> f64 {
        let sum: f64 = self.mats.iter().map(|m| m.trace() * m.trace()).sum();
        sum / self.order() as f64
    }

    /// Wire form for JSON serialization.
    pub fn to_wire(&self) -> RepresentationWire {
        RepresentationWire {
            order: self.order(),
            mul: self.group.table().to_vec(),
            labels: self.group.labels().to_vec(),
            dim: self.dim,
            mats: self
                .mats
                .iter()
                .map(|m| {
                    // row-major per element
                    let mut rows = Vec::with_capacity(self.dim * self.dim);
                    for i in 0..self.dim {
                        for j in 0..self.dim {
                            rows.push(m[(i, j)]);
                        }
                    }
                    rows
                })
                .collect(),
        }
    }

    pub fn from_wire(wire: &RepresentationWire) -> Result<Self> {
        let group = FiniteGroup::from_table(
            wire.order,
            wire.mul.clone(),
            Some(wire.labels.clone()),
        )?;
        let d = wire.dim;
        let mats = wire
            .mats
            .iter()
            .map(|flat| DMatrix::from_row_slice(d, d, flat))
            .collect();
        Self::new(group, mats)
    }
}

/// JSON schema: `{order, mul (row-major), labels, dim, mats (row-major per
/// element)}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RepresentationWire {
    pub order: usize,
    pub mul: Vec<usize>,
    pub labels: Vec<String>,
    pub dim: usize,
    pub mats: Vec<Vec<f64>>,
}

#[derive(Debug, Clone)]
pub struct DecompositionChecks {
    pub dim_v_rho: usize,
    pub dim_w_rho: usize,
    pub v_rho_plus_w_rho_ok: bool,
    pub cross_v_w_rho: f64,
    pub intersection_v_w_rho_ok: bool,
    pub w_checks: Option<WChecks>,
}

#[derive(Debug, Clone)]
pub struct WChecks {
    pub dim_w: usize,
    pub dim_vprime: usize,
    pub vprime_plus_w_ok: bool,
    pub cross_vprime_w: f64,
    pub intersection_ok: bool,
}

impl DecompositionChecks {
    pub fn passed(&self) -> bool {
        self.v_rho_plus_w_rho_ok
            && self.intersection_v_w_rho_ok
            && self
                .w_checks
                .as_ref()
                .map(|w| w.vprime_plus_w_ok && w.intersection_ok)
                .unwrap_or(true)
    }
}

fn find_match(mats: &[DMatrix<f64>], m: &DMatrix<f64>, tol: f64) -> Option<usize> {
    mats.iter()
        .position(|c| linalg::max_abs(&(c - m)) <= tol)
}

/// Planar rotation by `angle`.
pub fn rotation2(angle: f64) -> DMatrix<f64> {
    let (s, c) = angle.sin_cos();
    DMatrix::from_row_slice(2, 2, &[c, -s, s, c])
}

/// Rotation by `angle` about a (not necessarily unit) axis in `R^3`.
pub fn rotation3(axis: [f64; 3], angle: f64) -> DMatrix<f64> {
    let n = (axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]).sqrt();
    let (x, y, z) = (axis[0] / n, axis[1] / n, axis[2] / n);
    let (s, c) = angle.sin_cos();
    let t = 1.0 - c;
    DMatrix::from_row_slice(
        3,
        3,
        &[
            t * x * x + c,
            t * x * y - s * z,
            t * x * z + s * y,
            t * x * y + s * z,
            t * y * y + c,
            t * y * z - s * x,
            t * x * z - s * y,
            t * y * z + s * x,
            t * z * z + c,
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn cyclic_rotation_rep(r: usize) -> Representation {
        let group = FiniteGroup::cyclic(r).unwrap();
        let mats = (0..r)
            .map(|k| rotation2(2.0 * PI * k as f64 / r as f64))
            .collect();
        Representation::new(group, mats).unwrap()
    }

    #[test]
    fn cyclic_rep_is_faithful() {
        let rep = cyclic_rotation_rep(5);
        assert_eq!(rep.kernel(), vec![0]);
        assert!(rep.is_faithful());
    }

    #[test]
    fn trivial_image_kernel_is_everything() {
        let group = FiniteGroup::cyclic(4).unwrap();
        let mats = (0..4).map(|_| DMatrix::identity(3, 3)).collect();
        let rep = Representation::new(group, mats).unwrap();
        assert_eq!(rep.kernel(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn fixed_projector_of_rotations_vanishes() {
        let rep = cyclic_rotation_rep(3);
        assert!(linalg::max_abs(&rep.fixed_projector()) < 1e-12);
        assert!(!rep.has_trivial_subrep());
    }

    #[test]
    fn fixed_projector_of_trivial_rep_is_identity() {
        let group = FiniteGroup::cyclic(3).unwrap();
        let mats = (0..3).map(|_| DMatrix::identity(2, 2)).collect();
        let rep = Representation::new(group, mats).unwrap();
        let p = rep.fixed_projector();
        assert!(linalg::max_abs(&(p.clone() - DMatrix::identity(2, 2))) < 1e-12);
        // Idempotence.
        assert!(linalg::max_abs(&(&p * &p - &p)) < 1e-9);
    }

    #[test]
    fn basis_w_dimension_z3() {
        let rep = cyclic_rotation_rep(3);
        let w = rep.basis_w().unwrap();
        assert_eq!(w.dim(), 2 * (3 - 2));
        assert!(w.orthonormal_defect() < 1e-10);
    }

    #[test]
    fn basis_w_empty_for_order_two() {
        // Z_2 acting by the sign flip on R^1: no trivial subrep, dim W = 0.
        let group = FiniteGroup::cyclic(2).unwrap();
        let mats = vec![
            DMatrix::identity(1, 1),
            DMatrix::from_row_slice(1, 1, &[-1.0]),
        ];
        let rep = Representation::new(group, mats).unwrap();
        let w = rep.basis_w().unwrap();
        assert_eq!(w.dim(), 0);
    }

    #[test]
    fn decomposition_dimensions_z3() {
        let rep = cyclic_rotation_rep(3);
        let checks = rep.verify_decomposition();
        assert_eq!(checks.dim_v_rho, 2);
        assert_eq!(checks.dim_w_rho, 2 * (3 - 1));
        assert!(checks.passed());
    }

    #[test]
    fn trivial_group_decomposition() {
        let group = FiniteGroup::cyclic(1).unwrap();
        let rep = Representation::new(group, vec![DMatrix::identity(2, 2)]).unwrap();
        let checks = rep.verify_decomposition();
        assert_eq!(checks.dim_v_rho, 2);
        assert_eq!(checks.dim_w_rho, 0);
        assert!(checks.passed());
    }

    #[test]
    fn orbit_of_square() {
        let rep = cyclic_rotation_rep(4);
        let u = DVector::from_vec(vec![1.0, 0.0]);
        let orbit = rep.orbit(&u);
        assert_eq!(orbit.len(), 4);
        assert!((orbit[1].clone() - DVector::from_vec(vec![0.0, 1.0])).norm() < 1e-12);
        assert_eq!(rep.stabilizer(&u), vec![0]);
        assert_eq!(rep.affine_dim_orbit(&u), 2);
    }

    #[test]
    fn zero_vector_stabilized_by_everything() {
        let rep = cyclic_rotation_rep(4);
        let u = DVector::zeros(2);
        assert_eq!(rep.stabilizer(&u).len(), 4);
        assert_eq!(rep.affine_dim_orbit(&u), 0);
    }

    #[test]
    fn max_orbit_dim_cyclic() {
        let rep = cyclic_rotation_rep(5);
        assert_eq!(rep.max_orbit_dim(8, 1), 2);
        let group = FiniteGroup::cyclic(3).unwrap();
        let trivial =
            Representation::new(group, (0..3).map(|_| DMatrix::identity(2, 2)).collect()).unwrap();
        assert_eq!(trivial.max_orbit_dim(8, 1), 0);
    }

    #[test]
    fn character_norms() {
        // Trivial 1-dim rep of Z_1.
        let group = FiniteGroup::cyclic(1).unwrap();
        let rep = Representation::new(group, vec![DMatrix::identity(1, 1)]).unwrap();
        assert!((rep.character_norm() - 1.0).abs() < 1e-12);
        // Z_5 rotations: complex-type irreducible.
        let rep = cyclic_rotation_rep(5);
        assert!((rep.character_norm() - 2.0).abs() < 1e-9);
        // Dihedral D_4 standard rep: absolutely irreducible.
        let gens = vec![
            rotation2(2.0 * PI / 4.0),
            DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, -1.0]),
        ];
        let rep = Representation::from_generators(&gens, 16).unwrap();
        assert_eq!(rep.order(), 8);
        assert!((rep.character_norm() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn generator_closure_cases() {
        // Identity alone: trivial group.
        let rep = Representation::from_generators(&[DMatrix::identity(2, 2)], 4).unwrap();
        assert_eq!(rep.order(), 1);
        // Rotation by 2 pi / 5 closes to Z_5.
        let rep = Representation::from_generators(&[rotation2(2.0 * PI / 5.0)], 10).unwrap();
        assert_eq!(rep.order(), 5);
        // Cap exceeded.
        let err = Representation::from_generators(&[rotation2(2.0 * PI / 7.0)], 5);
        assert!(matches!(err, Err(Error::NotFiniteWithinCap { cap: 5 })));
        // Non-orthogonal generator.
        let err = Representation::from_generators(
            &[DMatrix::from_row_slice(2, 2, &[1.0, 1.0, 0.0, 1.0])],
            4,
        );
        assert!(matches!(err, Err(Error::InvalidMatrix(_))));
    }

    #[test]
    fn wire_round_trip() {
        let rep = cyclic_rotation_rep(4);
        let wire = rep.to_wire();
        let back = Representation::from_wire(&wire).unwrap();
        assert_eq!(back.order(), 4);
        for g in 0..4 {
            assert!(linalg::max_abs(&(back.mat(g) - rep.mat(g))) < 1e-15);
        }
    }
}
