//! Rational polyhedral fans: cones as face-closed ray-index sets, with the
//! operations the rest of the crate is built on (quotient lattices, lateral
//! generators, star subdivision, refinement tests, the cone-over-a-complex
//! construction and unimodularization).
//!
//! A fan is canonicalized at construction: primitive rays sorted
//! lexicographically, cones sorted by dimension then ray-index set, every
//! face present. Values are immutable afterwards.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::convex::{self, HRep};
use crate::error::{Error, Result};
use crate::lattice::{
    self, add_vec, dot, is_zero_vec, primitive, to_rat_vec, Int, LatticeVector, QuotientLattice,
    Rat,
};

pub type ConeId = usize;

/// A strongly convex rational cone of a fan, stored as sorted indices into
/// the fan's ray list together with its cached inequality presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone {
    rays: Vec<usize>,
    dim: usize,
    hrep: HRep,
}

impl Cone {
    pub fn ray_indices(&self) -> &[usize] {
        &self.rays
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn hrep(&self) -> &HRep {
        &self.hrep
    }

    pub fn is_simplicial(&self) -> bool {
        self.rays.len() == self.dim
    }

    pub fn contains_point(&self, x: &[Rat]) -> bool {
        self.hrep.contains_rat(x)
    }
}

/// A rational polyhedral fan in N ≅ ℤⁿ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    rank: usize,
    rays: Vec<LatticeVector>,
    cones: Vec<Cone>,
    complete: Option<bool>,
}

impl Fan {
    /// Builds a fan from explicit rays and cones given as ray-index sets.
    /// Rays must be primitive, pairwise distinct and each used by some cone;
    /// every listed cone must be generated by exactly its extreme rays.
    /// Faces are added automatically.
    pub fn from_cones(
        rank: usize,
        rays: Vec<LatticeVector>,
        cones: Vec<Vec<usize>>,
    ) -> Result<Fan> {
        for r in &rays {
            if r.len() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    actual: r.len(),
                });
            }
            if is_zero_vec(r) {
                return Err(Error::ZeroVector);
            }
            if primitive(r)? != *r {
                return Err(Error::InvalidCone("ray is not primitive".to_string()));
            }
        }
        let mut sorted = rays.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != rays.len() {
            return Err(Error::InvalidCone("duplicate ray".to_string()));
        }
        let mut used = vec![false; rays.len()];
        let mut gen_cones: Vec<Vec<LatticeVector>> = Vec::new();
        for c in &cones {
            for &i in c {
                if i >= rays.len() {
                    return Err(Error::InvalidCone(format!("ray index {i} out of range")));
                }
                used[i] = true;
            }
            gen_cones.push(c.iter().map(|&i| rays[i].clone()).collect());
        }
        if let Some(i) = used.iter().position(|u| !u) {
            return Err(Error::InvalidCone(format!("ray {i} not used by any cone")));
        }
        let fan = Fan::from_ray_cones(rank, &gen_cones)?;
        // The listed cones must already be generated by extreme rays.
        for (c, gens) in cones.iter().zip(&gen_cones) {
            let mut sorted_gens: Vec<LatticeVector> = gens.clone();
            sorted_gens.sort();
            let ext = convex::extreme_rays(gens, rank)?;
            if ext != sorted_gens {
                return Err(Error::InvalidCone(format!(
                    "cone {c:?} lists non-extreme generators"
                )));
            }
        }
        Ok(fan)
    }

    /// Builds a fan from cones given by generator vectors. Generators are
    /// primitivized and reduced to extreme rays; faces are added.
    pub fn from_ray_cones(rank: usize, cones: &[Vec<LatticeVector>]) -> Result<Fan> {
        let mut face_set: BTreeSet<Vec<LatticeVector>> = BTreeSet::new();
        face_set.insert(vec![]);
        for gens in cones {
            for g in gens {
                if g.len() != rank {
                    return Err(Error::RankMismatch {
                        expected: rank,
                        actual: g.len(),
                    });
                }
            }
            let ext = convex::extreme_rays(gens, rank)?;
            let hrep = convex::cone_hrep(&ext, rank);
            for face in convex::cone_faces(&ext, &hrep) {
                face_set.insert(face);
            }
        }
        let mut rays: Vec<LatticeVector> = face_set
            .iter()
            .filter(|f| f.len() == 1)
            .map(|f| f[0].clone())
            .collect();
        rays.sort();
        let ray_index = |v: &LatticeVector| -> usize {
            rays.binary_search(v).expect("face generator is a fan ray")
        };
        let mut cone_list: Vec<Cone> = Vec::new();
        for face in &face_set {
            let mut idx: Vec<usize> = face.iter().map(|g| ray_index(g)).collect();
            idx.sort();
            let hrep = convex::cone_hrep(face, rank);
            let dim = rank - hrep.equations.len();
            cone_list.push(Cone {
                rays: idx,
                dim,
                hrep,
            });
        }
        cone_list.sort_by(|a, b| (a.dim, &a.rays).cmp(&(b.dim, &b.rays)));
        cone_list.dedup_by(|a, b| a.rays == b.rays);
        Ok(Fan {
            rank,
            rays,
            cones: cone_list,
            complete: None,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn ray(&self, i: usize) -> &LatticeVector {
        &self.rays[i]
    }

    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    pub fn cone(&self, id: ConeId) -> &Cone {
        &self.cones[id]
    }

    pub fn declared_complete(&self) -> Option<bool> {
        self.complete
    }

    pub fn declare_complete(mut self, flag: bool) -> Fan {
        self.complete = Some(flag);
        self
    }

    /// Generator vectors (primitive ray representatives) of a cone.
    pub fn generators(&self, id: ConeId) -> Vec<LatticeVector> {
        self.cones[id]
            .rays
            .iter()
            .map(|&i| self.rays[i].clone())
            .collect()
    }

    pub fn find_cone(&self, ray_indices: &[usize]) -> Option<ConeId> {
        let mut key: Vec<usize> = ray_indices.to_vec();
        key.sort();
        key.dedup();
        self.cones.iter().position(|c| c.rays == key)
    }

    pub fn cones_of_dim(&self, d: usize) -> Vec<ConeId> {
        (0..self.cones.len())
            .filter(|&i| self.cones[i].dim == d)
            .collect()
    }

    pub fn max_dim(&self) -> usize {
        self.cones.iter().map(|c| c.dim).max().unwrap_or(0)
    }

    /// Cones that are not proper faces of another cone.
    pub fn maximal_cones(&self) -> Vec<ConeId> {
        (0..self.cones.len())
            .filter(|&i| {
                !self
                    .cones
                    .iter()
                    .any(|other| other.rays.len() > self.cones[i].rays.len()
                        && self.cones[i].rays.iter().all(|r| other.rays.contains(r)))
            })
            .collect()
    }

    /// Is `inner` a face of `outer`? Both must be cones of this fan.
    pub fn is_face_of(&self, inner: ConeId, outer: ConeId) -> bool {
        let inner_set = &self.cones[inner].rays;
        let outer_cone = &self.cones[outer];
        if !inner_set.iter().all(|r| outer_cone.rays.contains(r)) {
            return false;
        }
        // inner is the face of outer cut out by the facet normals of outer
        // vanishing on it.
        let tight: Vec<&LatticeVector> = outer_cone
            .hrep
            .facets
            .iter()
            .filter(|f| inner_set.iter().all(|&r| dot(f, &self.rays[r]).is_zero()))
            .collect();
        let cut: Vec<usize> = outer_cone
            .rays
            .iter()
            .filter(|&&r| tight.iter().all(|f| dot(f, &self.rays[r]).is_zero()))
            .copied()
            .collect();
        cut == *inner_set
    }

    /// Cones of dimension `dim(τ) + 1` having τ as a face.
    pub fn cones_above(&self, tau: ConeId) -> Vec<ConeId> {
        let d = self.cones[tau].dim;
        (0..self.cones.len())
            .filter(|&i| self.cones[i].dim == d + 1 && self.is_face_of(tau, i))
            .collect()
    }

    /// Re-checks the fan axioms: every face of a cone is a cone, and the
    /// intersection of any two cones is a face of each.
    pub fn validate(&self) -> Result<()> {
        for (id, cone) in self.cones.iter().enumerate() {
            let gens = self.generators(id);
            for face in convex::cone_faces(&gens, &cone.hrep) {
                let idx: Result<Vec<usize>> = face
                    .iter()
                    .map(|g| {
                        self.rays
                            .binary_search(g)
                            .map_err(|_| Error::NotAFan("missing face ray".to_string()))
                    })
                    .collect();
                let idx = idx?;
                if self.find_cone(&idx).is_none() {
                    return Err(Error::NotAFan(format!(
                        "face {idx:?} of cone {:?} is missing",
                        cone.rays
                    )));
                }
            }
        }
        for a in 0..self.cones.len() {
            for b in (a + 1)..self.cones.len() {
                let mut ineqs: Vec<Vec<Rat>> = Vec::new();
                let mut eqs: Vec<Vec<Rat>> = Vec::new();
                for c in [a, b] {
                    for f in &self.cones[c].hrep.facets {
                        ineqs.push(to_rat_vec(f));
                    }
                    for e in &self.cones[c].hrep.equations {
                        eqs.push(to_rat_vec(e));
                    }
                }
                let meet = convex::dual_description(&ineqs, &eqs, self.rank);
                if !meet.lineality.is_empty() {
                    return Err(Error::NotAFan("cone intersection contains a line".to_string()));
                }
                let idx: Result<Vec<usize>> = meet
                    .rays
                    .iter()
                    .map(|g| {
                        self.rays
                            .binary_search(g)
                            .map_err(|_| Error::NotAFan("intersection is not a face".to_string()))
                    })
                    .collect();
                let idx = idx?;
                let Some(meet_id) = self.find_cone(&idx) else {
                    return Err(Error::NotAFan(format!(
                        "intersection {idx:?} of cones {:?} and {:?} is not a cone of the fan",
                        self.cones[a].rays, self.cones[b].rays
                    )));
                };
                if !self.is_face_of(meet_id, a) || !self.is_face_of(meet_id, b) {
                    return Err(Error::NotAFan(format!(
                        "intersection {idx:?} is not a face of both cones",
                        )));
                }
            }
        }
        Ok(())
    }

    /// Support check for the declared completeness flag: the fan is complete
    /// iff it has a full-dimensional cone, is pure, and every cone of
    /// dimension n−1 is a wall of exactly two full-dimensional cones.
    pub fn verify_completeness(&self) -> bool {
        let n = self.rank;
        if n == 0 {
            return !self.cones.is_empty();
        }
        let top = self.cones_of_dim(n);
        if top.is_empty() {
            return false;
        }
        for id in self.maximal_cones() {
            if self.cones[id].dim != n {
                return false;
            }
        }
        for wall in self.cones_of_dim(n - 1) {
            let above = self.cones_above(wall);
            if above.len() != 2 {
                return false;
            }
        }
        true
    }

    /// The unique minimal cone containing the point, if the point lies in
    /// the support of the fan.
    pub fn support_membership(&self, point: &[Rat]) -> Result<Option<ConeId>> {
        if point.len() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                actual: point.len(),
            });
        }
        let mut best: Option<ConeId> = None;
        for (id, cone) in self.cones.iter().enumerate() {
            if cone.contains_point(point) {
                let better = match best {
                    None => true,
                    Some(b) => cone.dim < self.cones[b].dim,
                };
                if better {
                    best = Some(id);
                }
            }
        }
        Ok(best)
    }

    /// The quotient lattice N → N/N_τ by the saturated span of a cone.
    pub fn quotient_by_cone(&self, tau: ConeId) -> Result<QuotientLattice> {
        if tau >= self.cones.len() {
            return Err(Error::ConeNotInFan);
        }
        Ok(QuotientLattice::by_span(&self.generators(tau), self.rank))
    }

    /// For a codimension-one face pair τ ⊂ σ, the primitive generator
    /// v_{σ/τ} of the image ray of σ in N/N_τ, together with a canonical
    /// integral lift lying in σ.
    pub fn lateral_generator(
        &self,
        tau: ConeId,
        sigma: ConeId,
    ) -> Result<(LatticeVector, LatticeVector)> {
        if tau >= self.cones.len() || sigma >= self.cones.len() {
            return Err(Error::ConeNotInFan);
        }
        let tc = &self.cones[tau];
        let sc = &self.cones[sigma];
        if sc.dim != tc.dim + 1 || !self.is_face_of(tau, sigma) {
            return Err(Error::NotAFacetPair);
        }
        let quot = self.quotient_by_cone(tau)?;
        let outside: Vec<&usize> = sc.rays.iter().filter(|r| !tc.rays.contains(r)).collect();
        let images: Vec<LatticeVector> = outside
            .iter()
            .map(|&&r| primitive(&quot.project(&self.rays[r])).expect("generator off τ"))
            .collect();
        debug_assert!(images.windows(2).all(|w| w[0] == w[1]));
        let v_bar = images[0].clone();
        if tc.dim == 0 {
            // quotient is the identity; the lift is the ray generator itself
            return Ok((v_bar.clone(), v_bar));
        }
        let w0 = quot.lift(&v_bar);
        let z: LatticeVector = tc
            .rays
            .iter()
            .fold(vec![Int::zero(); self.rank], |acc, &r| add_vec(&acc, &self.rays[r]));
        // Smallest integral t with w₀ + t·z ∈ σ. Facets with h·z = 0 vanish
        // on span τ and hold automatically.
        let mut t: Option<Rat> = None;
        for h in &sc.hrep.facets {
            let hz = dot(h, &z);
            if hz.is_positive() {
                let bound = Rat::new(-dot(h, &w0), hz);
                let bound = Rat::from_integer(bound.ceil().to_integer());
                t = Some(match t {
                    None => bound,
                    Some(cur) => cur.max(bound),
                });
            }
        }
        let t = t.expect("a facet of σ is positive on the interior of τ").to_integer();
        let lift: LatticeVector = w0
            .iter()
            .zip(&z)
            .map(|(w, zi)| w + &t * zi)
            .collect();
        debug_assert!(sc.hrep.contains(&lift));
        debug_assert_eq!(quot.project(&lift), v_bar);
        Ok((v_bar, lift))
    }

    /// A maximal cone is unimodular when it is simplicial and its generators
    /// extend to a ℤ-basis (all elementary divisors 1). Returns the verdict
    /// and the offending maximal cones.
    pub fn is_unimodular(&self) -> (bool, Vec<ConeId>) {
        let mut offenders = Vec::new();
        for id in self.maximal_cones() {
            let cone = &self.cones[id];
            if cone.dim == 0 {
                continue;
            }
            if !cone.is_simplicial() || !self.elementary_divisors(id).iter().all(|d| d.is_one()) {
                offenders.push(id);
            }
        }
        (offenders.is_empty(), offenders)
    }

    fn elementary_divisors(&self, id: ConeId) -> Vec<Int> {
        let gens = self.generators(id);
        if gens.is_empty() {
            return vec![];
        }
        let snf = lattice::smith(&gens, gens.len(), self.rank);
        snf.diag
    }

    /// Stellar subdivision at a cone γ: inserts the primitive ray of
    /// Σ_{ρ ∈ γ(1)} u_ρ and replaces every cone containing γ by the joins of
    /// that ray with its faces not containing γ. For dim γ = 1 the fan is
    /// returned unchanged with `unchanged` set.
    pub fn star_subdivide(&self, gamma: ConeId) -> Result<StarSubdivision> {
        if gamma >= self.cones.len() {
            return Err(Error::ConeNotInFan);
        }
        let gc = &self.cones[gamma];
        if gc.dim == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                actual: 0,
            });
        }
        if gc.dim == 1 {
            return Ok(StarSubdivision {
                fan: self.clone(),
                new_ray: gc.rays[0],
                unchanged: true,
            });
        }
        let sum: LatticeVector = gc
            .rays
            .iter()
            .fold(vec![Int::zero(); self.rank], |acc, &r| add_vec(&acc, &self.rays[r]));
        let u_e = primitive(&sum)?;
        let gamma_set = gc.rays.clone();
        let mut new_cones: Vec<Vec<LatticeVector>> = Vec::new();
        for id in self.maximal_cones() {
            let cone = &self.cones[id];
            let contains_gamma = gamma_set.iter().all(|r| cone.rays.contains(r));
            if !contains_gamma {
                new_cones.push(self.generators(id));
                continue;
            }
            // joins of u_E with the faces of σ not containing γ
            for (fid, face) in self.cones.iter().enumerate() {
                if face.rays.iter().all(|r| cone.rays.contains(r))
                    && self.is_face_of(fid, id)
                    && !gamma_set.iter().all(|r| face.rays.contains(r))
                {
                    let mut gens = self.generators(fid);
                    gens.push(u_e.clone());
                    new_cones.push(gens);
                }
            }
        }
        let fan = Fan::from_ray_cones(self.rank, &new_cones)?;
        let fan = match self.complete {
            Some(flag) => fan.declare_complete(flag),
            None => fan,
        };
        let new_ray = fan
            .rays
            .binary_search(&u_e)
            .expect("inserted ray is a ray of the subdivision");
        Ok(StarSubdivision {
            fan,
            new_ray,
            unchanged: false,
        })
    }

    /// True iff the supports agree and every cone of `self` is contained in
    /// a cone of `coarse`.
    pub fn refines(&self, coarse: &Fan) -> bool {
        if self.rank != coarse.rank {
            return false;
        }
        // every fine cone inside some coarse cone
        for id in 0..self.cones.len() {
            let gens = self.generators(id);
            let inside = coarse
                .cones
                .iter()
                .any(|c| gens.iter().all(|g| c.hrep.contains(g)));
            if !inside {
                return false;
            }
        }
        // every maximal coarse cone covered by fine cones of the same
        // dimension: a facet of a covering cone that is not shared by two of
        // them must lie on the boundary of the coarse cone
        for cid in coarse.maximal_cones() {
            let ccone = &coarse.cones[cid];
            let d = ccone.dim;
            if d == 0 {
                continue;
            }
            let inside: Vec<ConeId> = self
                .cones_of_dim(d)
                .into_iter()
                .filter(|&i| {
                    self.generators(i)
                        .iter()
                        .all(|g| ccone.hrep.contains(g))
                })
                .collect();
            if inside.is_empty() {
                return false;
            }
            for wall in self.cones_of_dim(d - 1) {
                let wall_gens = self.generators(wall);
                if !wall_gens.iter().all(|g| ccone.hrep.contains(g)) {
                    continue;
                }
                let count = inside
                    .iter()
                    .filter(|&&i| self.is_face_of(wall, i))
                    .count();
                if count == 1 {
                    // must lie in the boundary of the coarse cone
                    let on_boundary = ccone.hrep.facets.iter().any(|f| {
                        wall_gens.iter().all(|g| dot(f, g).is_zero())
                            && (wall_gens.len() < d || !wall_gens.is_empty())
                    });
                    let on_boundary = on_boundary
                        || (wall_gens.is_empty() && d == 1 && !ccone.hrep.facets.is_empty());
                    if !on_boundary {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Heuristic unimodularization: repeatedly star-subdivide at an
    /// offending maximal cone with the largest elementary divisor,
    /// tie-broken by ray-index set. Not guaranteed minimal; errors out after
    /// an iteration budget rather than looping.
    pub fn unimodularize(&self) -> Result<Fan> {
        let mut fan = self.clone();
        for _ in 0..1000 {
            let (ok, offenders) = fan.is_unimodular();
            if ok {
                return Ok(fan);
            }
            let target = offenders
                .into_iter()
                .max_by(|&a, &b| {
                    let da = fan.elementary_divisors(a).into_iter().max().unwrap_or_default();
                    let db = fan.elementary_divisors(b).into_iter().max().unwrap_or_default();
                    // prefer the larger divisor; break ties toward the
                    // lexicographically smaller ray set
                    da.cmp(&db)
                        .then_with(|| fan.cones[b].rays.cmp(&fan.cones[a].rays))
                })
                .expect("offender list is nonempty");
            fan = fan.star_subdivide(target)?.fan;
        }
        Err(Error::IterationLimit)
    }
}

/// Result of a stellar subdivision.
#[derive(Debug, Clone)]
pub struct StarSubdivision {
    pub fan: Fan,
    /// Index of u_E in the subdivided fan's ray list (the existing ray when
    /// the subdivision was trivial).
    pub new_ray: usize,
    /// Set when γ was a ray and the fan is unchanged.
    pub unchanged: bool,
}

/// A polyhedron of a rational complex, by vertices and recession rays.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolyhedron {
    pub vertices: Vec<Vec<Rat>>,
    pub rays: Vec<LatticeVector>,
}

/// A finite rational polyhedral complex in N_ℚ, presented by its cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalComplex {
    pub rank: usize,
    pub polyhedra: Vec<RationalPolyhedron>,
}

/// Cones over the cells of a complex placed at height one: a cell with
/// vertices v and recession rays r becomes cone({(v,1)} ∪ {(r,0)}) in rank
/// n+1. Errors with `NotAFan` when the lifted cones violate the fan axioms.
pub fn cone_over_complex(complex: &RationalComplex) -> Result<Fan> {
    let n = complex.rank;
    let mut cones: Vec<Vec<LatticeVector>> = Vec::new();
    for cell in &complex.polyhedra {
        if cell.vertices.is_empty() {
            return Err(Error::NotAFan("cell has no vertices".to_string()));
        }
        let mut gens: Vec<LatticeVector> = Vec::new();
        for v in &cell.vertices {
            if v.len() != n {
                return Err(Error::RankMismatch {
                    expected: n,
                    actual: v.len(),
                });
            }
            let mut lifted = v.clone();
            lifted.push(Rat::one());
            gens.push(lattice::primitive_of_rat(&lifted)?);
        }
        for r in &cell.rays {
            if r.len() != n {
                return Err(Error::RankMismatch {
                    expected: n,
                    actual: r.len(),
                });
            }
            let mut lifted = r.clone();
            lifted.push(Int::zero());
            gens.push(primitive(&lifted)?);
        }
        cones.push(gens);
    }
    let fan = Fan::from_ray_cones(n + 1, &cones).map_err(|e| match e {
        Error::InvalidCone(msg) => Error::NotAFan(msg),
        other => other,
    })?;
    fan.validate()?;
    Ok(fan)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::vec_i;
    use crate::shapes;

    #[test]
    fn p2_fan_structure() {
        let fan = shapes::projective_plane();
        assert_eq!(fan.rank(), 2);
        assert_eq!(fan.rays().len(), 3);
        // zero cone + 3 rays + 3 two-cones
        assert_eq!(fan.cones().len(), 7);
        assert_eq!(fan.maximal_cones().len(), 3);
        fan.validate().unwrap();
        assert!(fan.verify_completeness());
    }

    #[test]
    fn unimodularity_checks() {
        let (ok, offenders) = shapes::projective_plane().is_unimodular();
        assert!(ok);
        assert!(offenders.is_empty());

        let singular = Fan::from_ray_cones(2, &[vec![vec_i(&[1, 0]), vec_i(&[1, 2])]]).unwrap();
        let (ok, offenders) = singular.is_unimodular();
        assert!(!ok);
        assert_eq!(offenders.len(), 1);
        assert_eq!(singular.cone(offenders[0]).ray_indices().len(), 2);

        let zero_fan = Fan::from_ray_cones(3, &[]).unwrap();
        assert!(zero_fan.is_unimodular().0);
    }

    #[test]
    fn star_subdivision_of_p2() {
        let fan = shapes::projective_plane();
        let gamma = fan
            .find_cone(&[
                fan.rays().iter().position(|r| r == &vec_i(&[1, 0])).unwrap(),
                fan.rays().iter().position(|r| r == &vec_i(&[0, 1])).unwrap(),
            ])
            .unwrap();
        let sub = fan.star_subdivide(gamma).unwrap();
        assert!(!sub.unchanged);
        let f1 = &sub.fan;
        f1.validate().unwrap();
        assert_eq!(f1.rays().len(), 4);
        assert!(f1.rays().contains(&vec_i(&[1, 1])));
        assert_eq!(f1.ray(sub.new_ray), &vec_i(&[1, 1]));
        assert_eq!(f1.cones_of_dim(2).len(), 4);
        assert!(f1.refines(&fan));
        assert!(f1.is_unimodular().0);
    }

    #[test]
    fn star_subdivision_at_ray_is_trivial() {
        let fan = shapes::projective_plane();
        let ray_cone = fan.cones_of_dim(1)[0];
        let sub = fan.star_subdivide(ray_cone).unwrap();
        assert!(sub.unchanged);
        assert_eq!(sub.fan, fan);
    }

    #[test]
    fn star_subdivision_of_hyperplane_fan() {
        let fan = shapes::hyperplane_tropical_fan();
        let e1 = fan.rays().iter().position(|r| r == &vec_i(&[1, 0, 0])).unwrap();
        let e2 = fan.rays().iter().position(|r| r == &vec_i(&[0, 1, 0])).unwrap();
        let gamma = fan.find_cone(&[e1, e2]).unwrap();
        let sub = fan.star_subdivide(gamma).unwrap();
        assert_eq!(sub.fan.ray(sub.new_ray), &vec_i(&[1, 1, 0]));
        assert_eq!(sub.fan.cones_of_dim(2).len(), 7);
        assert!(sub.fan.refines(&fan));
        sub.fan.validate().unwrap();
    }

    #[test]
    fn refinement_checks() {
        let p2 = shapes::projective_plane();
        assert!(p2.refines(&p2));
        let p1p1 = shapes::p1xp1();
        assert!(!p2.refines(&p1p1));
        assert!(!p1p1.refines(&p2));
    }

    #[test]
    fn support_membership_examples() {
        let p2 = shapes::projective_plane();
        let pt = |a: i64, b: i64| vec![Rat::from_integer(a.into()), Rat::from_integer(b.into())];
        let id = p2.support_membership(&pt(2, 3)).unwrap().unwrap();
        assert_eq!(p2.cone(id).dim(), 2);
        let id = p2.support_membership(&pt(1, 0)).unwrap().unwrap();
        assert_eq!(p2.cone(id).dim(), 1);
        assert_eq!(p2.generators(id), vec![vec_i(&[1, 0])]);
        let id = p2.support_membership(&pt(0, 0)).unwrap().unwrap();
        assert_eq!(p2.cone(id).dim(), 0);

        let ex0 = shapes::hyperplane_tropical_fan();
        let q = |a: i64, b: i64, c: i64| {
            vec![
                Rat::from_integer(a.into()),
                Rat::from_integer(b.into()),
                Rat::from_integer(c.into()),
            ]
        };
        let id = ex0.support_membership(&q(-1, -1, -1)).unwrap().unwrap();
        assert_eq!(ex0.generators(id), vec![vec_i(&[-1, -1, -1])]);
        // interior of the torus but off the tropical locus
        assert!(ex0.support_membership(&q(1, 2, 3)).unwrap().is_none());
    }

    #[test]
    fn lateral_generator_on_p2() {
        let p2 = shapes::projective_plane();
        let e1 = p2.rays().iter().position(|r| r == &vec_i(&[1, 0])).unwrap();
        let e2 = p2.rays().iter().position(|r| r == &vec_i(&[0, 1])).unwrap();
        let tau = p2.find_cone(&[e1]).unwrap();
        let sigma = p2.find_cone(&[e1, e2]).unwrap();
        let (v_bar, lift) = p2.lateral_generator(tau, sigma).unwrap();
        assert_eq!(v_bar, vec_i(&[1]));
        assert_eq!(lift, vec_i(&[0, 1]));
    }

    #[test]
    fn lateral_generator_from_zero_cone() {
        let p2 = shapes::projective_plane();
        let zero = p2.find_cone(&[]).unwrap();
        for ray in p2.cones_of_dim(1) {
            let (v_bar, lift) = p2.lateral_generator(zero, ray).unwrap();
            let gen = p2.generators(ray).remove(0);
            assert_eq!(v_bar, gen);
            assert_eq!(lift, gen);
        }
    }

    #[test]
    fn lateral_generator_on_plane_fan() {
        let fan = shapes::segre_quadric_fan();
        let r1 = fan.rays().iter().position(|r| r == &vec_i(&[1, 0, 1])).unwrap();
        let r2 = fan.rays().iter().position(|r| r == &vec_i(&[0, 1, 1])).unwrap();
        let tau = fan.find_cone(&[r1]).unwrap();
        let sigma = fan.find_cone(&[r1, r2]).unwrap();
        let (_, lift) = fan.lateral_generator(tau, sigma).unwrap();
        assert_eq!(lift, vec_i(&[0, 1, 1]));
    }

    #[test]
    fn lateral_generator_needs_deep_lift() {
        // σ = cone((1,1),(1,-1)), τ = ray (1,1): no generator of σ projects
        // to the primitive quotient generator, so the lift is computed.
        let fan = Fan::from_ray_cones(2, &[vec![vec_i(&[1, 1]), vec_i(&[1, -1])]]).unwrap();
        let r_tau = fan.rays().iter().position(|r| r == &vec_i(&[1, 1])).unwrap();
        let tau = fan.find_cone(&[r_tau]).unwrap();
        let sigma = fan.maximal_cones()[0];
        let (v_bar, lift) = fan.lateral_generator(tau, sigma).unwrap();
        assert_eq!(v_bar.len(), 1);
        assert!(fan.cone(sigma).hrep().contains(&lift));
        let quot = fan.quotient_by_cone(tau).unwrap();
        assert_eq!(quot.project(&lift), v_bar);
    }

    #[test]
    fn cone_over_segment() {
        let complex = RationalComplex {
            rank: 1,
            polyhedra: vec![RationalPolyhedron {
                vertices: vec![
                    vec![Rat::from_integer(1.into())],
                    vec![Rat::from_integer(2.into())],
                ],
                rays: vec![],
            }],
        };
        let fan = cone_over_complex(&complex).unwrap();
        assert_eq!(fan.rank(), 2);
        assert_eq!(fan.rays(), &[vec_i(&[1, 1]), vec_i(&[2, 1])]);
        assert_eq!(fan.cones_of_dim(2).len(), 1);
    }

    #[test]
    fn cone_over_halfline_and_point() {
        let complex = RationalComplex {
            rank: 1,
            polyhedra: vec![RationalPolyhedron {
                vertices: vec![vec![Rat::from_integer(2.into())]],
                rays: vec![vec_i(&[1])],
            }],
        };
        let fan = cone_over_complex(&complex).unwrap();
        assert_eq!(fan.rays(), &[vec_i(&[1, 0]), vec_i(&[2, 1])]);
        assert_eq!(fan.cones_of_dim(2).len(), 1);

        let point = RationalComplex {
            rank: 1,
            polyhedra: vec![RationalPolyhedron {
                vertices: vec![vec![Rat::zero()]],
                rays: vec![],
            }],
        };
        let fan = cone_over_complex(&point).unwrap();
        assert_eq!(fan.rays(), &[vec_i(&[0, 1])]);
        assert_eq!(fan.max_dim(), 1);
    }

    #[test]
    fn cone_over_bad_complex_fails() {
        // two overlapping segments that do not meet face-to-face
        let complex = RationalComplex {
            rank: 1,
            polyhedra: vec![
                RationalPolyhedron {
                    vertices: vec![
                        vec![Rat::from_integer(1.into())],
                        vec![Rat::from_integer(3.into())],
                    ],
                    rays: vec![],
                },
                RationalPolyhedron {
                    vertices: vec![
                        vec![Rat::from_integer(2.into())],
                        vec![Rat::from_integer(4.into())],
                    ],
                    rays: vec![],
                },
            ],
        };
        assert!(matches!(cone_over_complex(&complex), Err(Error::NotAFan(_))));
    }

    #[test]
    fn unimodularize_singular_cone() {
        let singular = Fan::from_ray_cones(2, &[vec![vec_i(&[1, 0]), vec_i(&[1, 2])]]).unwrap();
        let resolved = singular.unimodularize().unwrap();
        assert!(resolved.is_unimodular().0);
        assert!(resolved.refines(&singular));
        assert!(resolved.rays().contains(&vec_i(&[1, 1])));
    }

    #[test]
    fn unimodularize_terminates_without_monotone_divisors() {
        let singular = Fan::from_ray_cones(2, &[vec![vec_i(&[1, 0]), vec_i(&[1, 3])]]).unwrap();
        let resolved = singular.unimodularize().unwrap();
        assert!(resolved.is_unimodular().0);
        assert!(resolved.refines(&singular));
    }

    #[test]
    fn from_cones_rejects_bad_input() {
        // duplicate ray
        assert!(Fan::from_cones(2, vec![vec_i(&[1, 0]), vec_i(&[1, 0])], vec![vec![0, 1]]).is_err());
        // non-primitive ray
        assert!(Fan::from_cones(2, vec![vec_i(&[2, 0])], vec![vec![0]]).is_err());
        // unused ray
        assert!(Fan::from_cones(2, vec![vec_i(&[1, 0]), vec_i(&[0, 1])], vec![vec![0]]).is_err());
        // non-extreme generator list
        assert!(Fan::from_cones(
            2,
            vec![vec_i(&[0, 1]), vec_i(&[1, 0]), vec_i(&[1, 1])],
            vec![vec![0, 1, 2]]
        )
        .is_err());
        // a line is not strongly convex
        assert!(Fan::from_cones(2, vec![vec_i(&[1, 0]), vec_i(&[-1, 0])], vec![vec![0, 1]]).is_err());
    }
}
