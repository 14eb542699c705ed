//! Exact convex-geometry kernel: double description over ℚ.
//!
//! Converts between the two presentations of rational cones and polyhedra
//! (inequalities vs. generators), enumerates faces, triangulates, and
//! computes Hilbert bases of cone monoids. Inputs and outputs are
//! canonicalized (primitive integer vectors, lexicographic sort), so every
//! function here is deterministic.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{
    self, dot, dot_int_rat, dot_rat, is_zero_vec, kernel_rat, primitive, primitive_of_rat,
    to_rat_vec, Int, QuotientLattice, Rat,
};

/// Generator presentation of a cone: span of `lineality` plus the
/// nonnegative hull of `rays`. Rays are primitive and lex-sorted; the
/// lineality basis is in row Hermite normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VRep {
    pub rays: Vec<Vec<Int>>,
    pub lineality: Vec<Vec<Int>>,
}

impl VRep {
    pub fn dim(&self) -> usize {
        let mut rows: Vec<Vec<Int>> = self.lineality.clone();
        rows.extend(self.rays.iter().cloned());
        lattice::rank_int(&rows)
    }

    pub fn is_trivial(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }
}

fn clear_row(row: &[Rat]) -> Option<Vec<Int>> {
    if is_zero_rat_vec(row) {
        None
    } else {
        Some(primitive_of_rat(row).expect("nonzero row"))
    }
}

fn is_zero_rat_vec(v: &[Rat]) -> bool {
    v.iter().all(|c| c.is_zero())
}

/// Extreme rays of the pointed cone {x ∈ ℚⁿ : A·x ≥ 0}, where the rows of
/// `a` must have a trivial common kernel. Standard incremental double
/// description with the combinatorial adjacency test.
fn dd_pointed(a: &[Vec<Int>], n: usize) -> Vec<Vec<Int>> {
    if n == 0 {
        return vec![];
    }
    assert!(a.len() <= 128, "double description limited to 128 inequalities");

    // Initial simplicial cone from n linearly independent rows.
    let mut order: Vec<usize> = Vec::new();
    let mut rows_rat: Vec<Vec<Rat>> = Vec::new();
    for (i, row) in a.iter().enumerate() {
        let mut test = rows_rat.clone();
        test.push(to_rat_vec(row));
        if lattice::rref(&mut test).len() > rows_rat.len() {
            rows_rat.push(to_rat_vec(row));
            order.push(i);
            if order.len() == n {
                break;
            }
        }
    }
    assert_eq!(order.len(), n, "dd_pointed requires a pointed cone");
    for i in 0..a.len() {
        if !order.contains(&i) {
            order.push(i);
        }
    }

    // Rays of the initial cone: columns of the inverse of the chosen rows.
    let mut rays: Vec<(Vec<Int>, u128)> = Vec::new();
    for j in 0..n {
        let mut e = vec![Rat::zero(); n];
        e[j] = Rat::one();
        let x = lattice::solve_rat(&rows_rat, &e, n).expect("independent rows invert");
        let r = primitive_of_rat(&x).expect("basis vector is nonzero");
        let mut tight: u128 = 0;
        for k in 0..n {
            if k != j {
                tight |= 1 << k;
            }
        }
        rays.push((r, tight));
    }

    for step in n..order.len() {
        let row = &a[order[step]];
        let evals: Vec<Int> = rays.iter().map(|(r, _)| dot(row, r)).collect();
        if evals.iter().all(|e| !e.is_negative()) {
            for (i, (_, tight)) in rays.iter_mut().enumerate() {
                if evals[i].is_zero() {
                    *tight |= 1 << step;
                }
            }
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| evals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| evals[i].is_negative()).collect();
        let mut next: Vec<(Vec<Int>, u128)> = Vec::new();
        for (i, (r, tight)) in rays.iter().enumerate() {
            if !evals[i].is_negative() {
                let t = if evals[i].is_zero() { tight | 1 << step } else { *tight };
                next.push((r.clone(), t));
            }
        }
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].1 & rays[q].1;
                // p and q are adjacent iff no third ray is tight on their
                // common tight set.
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(k, (_, t))| k == p || k == q || (*t & common) != common);
                if !adjacent {
                    continue;
                }
                let sp = &evals[p];
                let sq = &evals[q];
                let w: Vec<Int> = rays[q]
                    .0
                    .iter()
                    .zip(&rays[p].0)
                    .map(|(xq, xp)| sp * xq - sq * xp)
                    .collect();
                let w = primitive(&w).expect("combination of adjacent rays is nonzero");
                next.push((w, common | 1 << step));
            }
        }
        rays = next;
    }

    let mut out: Vec<Vec<Int>> = rays.into_iter().map(|(r, _)| r).collect();
    out.sort();
    out.dedup();
    out
}

/// Generators (extreme rays modulo lineality) of
/// {x ∈ ℚⁿ : ineq·x ≥ 0, eq·x = 0}.
pub fn dual_description(ineqs: &[Vec<Rat>], eqs: &[Vec<Rat>], n: usize) -> VRep {
    let mut ineq_rows: Vec<Vec<Int>> = ineqs.iter().filter_map(|r| clear_row(r)).collect();
    ineq_rows.sort();
    ineq_rows.dedup();
    let eq_rows: Vec<Vec<Int>> = eqs.iter().filter_map(|r| clear_row(r)).collect();

    // Lineality lattice: saturated integer kernel of all rows.
    let mut all_rows = eq_rows.clone();
    all_rows.extend(ineq_rows.iter().cloned());
    let lineality = lattice::hnf_rows(&lattice::kernel_int(&all_rows, n));

    // Subspace cut out by the equations.
    let eq_rat: Vec<Vec<Rat>> = eq_rows.iter().map(|r| to_rat_vec(r)).collect();
    let w = kernel_rat(&eq_rat, n); // columns of the subspace basis
    let k = w.len();
    if k == 0 {
        return VRep {
            rays: vec![],
            lineality,
        };
    }

    // Restrict the inequalities to the subspace.
    let a_sub: Vec<Vec<Rat>> = ineq_rows
        .iter()
        .map(|row| {
            let row_rat = to_rat_vec(row);
            w.iter().map(|wj| dot_rat(&row_rat, wj)).collect()
        })
        .collect();

    // Split off the lineality inside the subspace.
    let lin_sub = kernel_rat(&a_sub, k);
    let mut lin_mat: Vec<Vec<Rat>> = lin_sub.clone();
    let pivots = lattice::rref(&mut lin_mat);
    let complement: Vec<usize> = (0..k).filter(|j| !pivots.contains(j)).collect();
    let k2 = complement.len();

    let a_pointed: Vec<Vec<Int>> = a_sub
        .iter()
        .filter_map(|row| {
            let sub: Vec<Rat> = complement.iter().map(|&j| row[j].clone()).collect();
            clear_row(&sub)
        })
        .collect();

    let rays_pointed = dd_pointed(&a_pointed, k2);

    // Map a pointed-coordinate vector back to ambient coordinates.
    let back = |z: &[Int]| -> Vec<Int> {
        let mut x = vec![Rat::zero(); n];
        for (zi, &j) in z.iter().zip(&complement) {
            for (xi, wc) in x.iter_mut().zip(&w[j]) {
                *xi += Rat::from_integer(zi.clone()) * wc;
            }
        }
        primitive_of_rat(&x).expect("nonzero ray")
    };
    let mut rays: Vec<Vec<Int>> = rays_pointed.iter().map(|z| back(z)).collect();
    rays.sort();
    VRep { rays, lineality }
}

/// Inequality presentation of a cone: `equations` span the orthogonal
/// complement of the cone's span; `facets` are the facet normals, valid
/// within the span.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HRep {
    pub equations: Vec<Vec<Int>>,
    pub facets: Vec<Vec<Int>>,
}

impl HRep {
    pub fn contains(&self, x: &[Int]) -> bool {
        self.equations.iter().all(|e| dot(e, x).is_zero())
            && self.facets.iter().all(|f| !dot(f, x).is_negative())
    }

    pub fn contains_rat(&self, x: &[Rat]) -> bool {
        self.equations.iter().all(|e| dot_int_rat(e, x).is_zero())
            && self.facets.iter().all(|f| !dot_int_rat(f, x).is_negative())
    }

    /// Facet normals evaluating to zero on `x` (x assumed inside).
    pub fn tight_facets(&self, x: &[Int]) -> Vec<usize> {
        self.facets
            .iter()
            .enumerate()
            .filter(|(_, f)| dot(f, x).is_zero())
            .map(|(i, _)| i)
            .collect()
    }
}

/// Inequality presentation of the cone generated by `gens`.
pub fn cone_hrep(gens: &[Vec<Int>], n: usize) -> HRep {
    let equations = lattice::hnf_rows(&lattice::kernel_int(gens, n));
    let ineqs: Vec<Vec<Rat>> = gens.iter().map(|g| to_rat_vec(g)).collect();
    let dual = dual_description(&ineqs, &[], n);
    HRep {
        equations,
        facets: dual.rays,
    }
}

/// The subset of `gens` that are extreme rays of the cone they generate,
/// primitivized, deduplicated and sorted. Errors when the hull is not
/// strongly convex.
pub fn extreme_rays(gens: &[Vec<Int>], n: usize) -> Result<Vec<Vec<Int>>> {
    let mut prim: Vec<Vec<Int>> = Vec::new();
    for g in gens {
        if is_zero_vec(g) {
            continue;
        }
        prim.push(primitive(g)?);
    }
    prim.sort();
    prim.dedup();
    if prim.is_empty() {
        return Ok(vec![]);
    }
    let hrep = cone_hrep(&prim, n);
    let lin = lattice::kernel_int(
        &{
            let mut rows = hrep.equations.clone();
            rows.extend(hrep.facets.iter().cloned());
            rows
        },
        n,
    );
    if !lin.is_empty() {
        return Err(Error::InvalidCone("cone contains a line".to_string()));
    }
    let dim = n - hrep.equations.len();
    let keep: Vec<Vec<Int>> = prim
        .into_iter()
        .filter(|g| {
            if dim == 1 {
                return true;
            }
            // g spans a 1-dimensional minimal face iff the tight facet
            // normals together with the span equations have rank n−1.
            let mut rows: Vec<Vec<Rat>> = hrep
                .equations
                .iter()
                .map(|e| to_rat_vec(e))
                .collect();
            for f in &hrep.facets {
                if dot(f, g).is_zero() {
                    rows.push(to_rat_vec(f));
                }
            }
            lattice::rank_rat(&rows) == n - 1
        })
        .collect();
    Ok(keep)
}

/// All faces of the cone generated by `gens` (which must be its extreme
/// rays), returned as sorted generator subsets. Includes the cone itself and
/// the zero cone.
pub fn cone_faces(gens: &[Vec<Int>], hrep: &HRep) -> Vec<Vec<Vec<Int>>> {
    let mut seen: BTreeSet<Vec<Vec<Int>>> = BTreeSet::new();
    let full: Vec<Vec<Int>> = gens.to_vec();
    let mut queue = vec![full.clone()];
    seen.insert(full);
    while let Some(face) = queue.pop() {
        for f in &hrep.facets {
            let sub: Vec<Vec<Int>> = face
                .iter()
                .filter(|g| dot(f, g).is_zero())
                .cloned()
                .collect();
            if seen.insert(sub.clone()) {
                queue.push(sub);
            }
        }
    }
    seen.into_iter().collect()
}

/// A rational polyhedron {x : A·x ≥ b} presented by generators:
/// points + nonnegative hull of rays + span of lineality. The polyhedron is
/// empty iff `points` is empty. When the lineality space is nontrivial the
/// points are canonical representatives of the minimal faces rather than
/// vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polyhedron {
    pub points: Vec<Vec<Rat>>,
    pub rays: Vec<Vec<Int>>,
    pub lineality: Vec<Vec<Int>>,
}

impl Polyhedron {
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn is_bounded(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }
}

/// Generator presentation of {x ∈ ℚⁿ : row·x ≥ rhs for every (row, rhs)}.
pub fn polyhedron_from_hrep(rows: &[(Vec<Rat>, Rat)], n: usize) -> Polyhedron {
    // Homogenize: (x, t) with row·x − rhs·t ≥ 0 and t ≥ 0.
    let mut ineqs: Vec<Vec<Rat>> = rows
        .iter()
        .map(|(row, rhs)| {
            let mut v = row.clone();
            v.push(-rhs.clone());
            v
        })
        .collect();
    let mut t_pos = vec![Rat::zero(); n];
    t_pos.push(Rat::one());
    ineqs.push(t_pos);
    let vrep = dual_description(&ineqs, &[], n + 1);

    let mut points: Vec<Vec<Rat>> = Vec::new();
    let mut rays: Vec<Vec<Int>> = Vec::new();
    for r in &vrep.rays {
        let t = &r[n];
        if t.is_zero() {
            rays.push(r[..n].to_vec());
        } else {
            let tr = Rat::from_integer(t.clone());
            points.push(r[..n].iter().map(|c| Rat::from_integer(c.clone()) / &tr).collect());
        }
    }
    let lineality: Vec<Vec<Int>> = vrep
        .lineality
        .iter()
        .map(|l| {
            debug_assert!(l[n].is_zero());
            l[..n].to_vec()
        })
        .collect();
    points.sort();
    rays.sort();
    Polyhedron {
        points,
        rays,
        lineality: lattice::hnf_rows(&lineality),
    }
}

/// Pulling triangulation of a strongly convex cone into simplicial subcones
/// spanned by its extreme rays. Uses the global lexicographic ray order, so
/// triangulations of shared faces agree across neighbouring cones.
pub fn triangulate(gens: &[Vec<Int>], n: usize) -> Vec<Vec<Vec<Int>>> {
    let mut gens = gens.to_vec();
    gens.sort();
    if gens.is_empty() {
        return vec![];
    }
    if lattice::rank_int(&gens) == gens.len() {
        return vec![gens];
    }
    let hrep = cone_hrep(&gens, n);
    let v0 = gens[0].clone();
    let mut out = Vec::new();
    for f in &hrep.facets {
        if !dot(f, &v0).is_positive() {
            continue;
        }
        let face: Vec<Vec<Int>> = gens.iter().filter(|g| dot(f, g).is_zero()).cloned().collect();
        for simplex in triangulate(&face, n) {
            let mut s = simplex;
            s.push(v0.clone());
            s.sort();
            out.push(s);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Hilbert basis of the monoid C ∩ ℤⁿ for a pointed full-dimensional cone C
/// given by its extreme rays.
fn pointed_hilbert_basis(gens: &[Vec<Int>], n: usize) -> Vec<Vec<Int>> {
    if gens.is_empty() {
        return vec![];
    }
    let hrep = cone_hrep(gens, n);
    let mut candidates: BTreeSet<Vec<Int>> = gens.iter().cloned().collect();
    for simplex in triangulate(gens, n) {
        let rat_rows: Vec<Vec<Rat>> = (0..n)
            .map(|i| simplex.iter().map(|g| Rat::from_integer(g[i].clone())).collect())
            .collect();
        // Bounding box of the closed parallelepiped spanned by the simplex.
        let (lo, hi): (Vec<Int>, Vec<Int>) = (0..n)
            .map(|i| {
                let neg: Int = simplex.iter().map(|g| g[i].clone()).filter(|c| c.is_negative()).sum();
                let pos: Int = simplex.iter().map(|g| g[i].clone()).filter(|c| c.is_positive()).sum();
                (neg, pos)
            })
            .unzip();
        let mut cursor: Vec<Int> = lo.clone();
        'enumerate: loop {
            let target: Vec<Rat> = cursor.iter().map(|c| Rat::from_integer(c.clone())).collect();
            if let Some(lambda) = lattice::solve_rat(&rat_rows, &target, simplex.len()) {
                let in_box = lambda
                    .iter()
                    .all(|l| !l.is_negative() && l < &Rat::one());
                if in_box && !is_zero_vec(&cursor) {
                    candidates.insert(cursor.clone());
                }
            }
            // advance odometer
            let mut i = 0;
            loop {
                if i == n {
                    break 'enumerate;
                }
                cursor[i] += Int::one();
                if cursor[i] <= hi[i] {
                    break;
                }
                cursor[i] = lo[i].clone();
                i += 1;
            }
        }
    }
    // Keep the irreducible elements.
    let all: Vec<Vec<Int>> = candidates.iter().cloned().collect();
    all.iter()
        .filter(|x| {
            !all.iter().any(|h| {
                if h == *x {
                    return false;
                }
                let diff = lattice::sub_vec(x, h);
                !is_zero_vec(&diff) && hrep.contains(&diff)
            })
        })
        .cloned()
        .collect()
}

/// Generating set of the monoid {m ∈ ℤⁿ : ⟨m, g⟩ ≥ 0 for all g} — the
/// lattice points of the cone dual to cone(`gens`). Unit directions (the
/// lineality of the dual cone) are returned as ± pairs.
pub fn dual_monoid_generators(gens: &[Vec<Int>], n: usize) -> Vec<Vec<Int>> {
    let ineqs: Vec<Vec<Rat>> = gens.iter().map(|g| to_rat_vec(g)).collect();
    let dual = dual_description(&ineqs, &[], n);
    let mut out: Vec<Vec<Int>> = Vec::new();
    for l in &dual.lineality {
        out.push(l.clone());
        out.push(lattice::neg_vec(l));
    }
    if !dual.rays.is_empty() {
        let quot = QuotientLattice::by_span(&dual.lineality, n);
        let k = quot.quotient_rank();
        let mut proj_rays: Vec<Vec<Int>> = dual
            .rays
            .iter()
            .map(|r| primitive(&quot.project(r)).expect("ray survives the quotient"))
            .collect();
        proj_rays.sort();
        proj_rays.dedup();
        for h in pointed_hilbert_basis(&proj_rays, k) {
            out.push(quot.lift(&h));
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Integer points of a bounded polyhedron given by inequalities.
pub fn lattice_points(rows: &[(Vec<Rat>, Rat)], n: usize) -> Result<Vec<Vec<Int>>> {
    let poly = polyhedron_from_hrep(rows, n);
    if poly.is_empty() {
        return Ok(vec![]);
    }
    if !poly.is_bounded() {
        return Err(Error::UnboundedOnSupport);
    }
    let floor = |r: &Rat| -> Int { r.floor().to_integer() };
    let ceil = |r: &Rat| -> Int { r.ceil().to_integer() };
    let lo: Vec<Int> = (0..n)
        .map(|i| ceil(&poly.points.iter().map(|p| p[i].clone()).min().unwrap()))
        .collect();
    let hi: Vec<Int> = (0..n)
        .map(|i| floor(&poly.points.iter().map(|p| p[i].clone()).max().unwrap()))
        .collect();
    if (0..n).any(|i| lo[i] > hi[i]) {
        return Ok(vec![]);
    }
    let mut out = Vec::new();
    let mut cursor = lo.clone();
    'enumerate: loop {
        let x_rat = to_rat_vec(&cursor);
        if rows
            .iter()
            .all(|(row, rhs)| dot_rat(row, &x_rat) >= *rhs)
        {
            out.push(cursor.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                break 'enumerate;
            }
            cursor[i] += Int::one();
            if cursor[i] <= hi[i] {
                break;
            }
            cursor[i] = lo[i].clone();
            i += 1;
        }
    }
    Ok(out)
}

/// Vertices of the convex hull of an integer point set: the subset of points
/// that are extreme.
pub fn hull_vertices(points: &[Vec<Int>], n: usize) -> Vec<Vec<Int>> {
    let mut pts: Vec<Vec<Int>> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 1 {
        return pts;
    }
    // Lift to height one and test extremality in the homogenization cone.
    let lifted: Vec<Vec<Int>> = pts
        .iter()
        .map(|p| {
            let mut v = p.clone();
            v.push(Int::one());
            v
        })
        .collect();
    let hrep = cone_hrep(&lifted, n + 1);
    let dim = n + 1 - hrep.equations.len();
    pts.iter()
        .zip(&lifted)
        .filter(|(_, l)| {
            if dim == 1 {
                return true;
            }
            let mut rows: Vec<Vec<Rat>> =
                hrep.equations.iter().map(|e| to_rat_vec(e)).collect();
            for f in &hrep.facets {
                if dot(f, l).is_zero() {
                    rows.push(to_rat_vec(f));
                }
            }
            lattice::rank_rat(&rows) == n
        })
        .map(|(p, _)| p.clone())
        .collect()
}

/// Groups a list of (key, value) pairs into a map of value lists.
pub fn group_by_key<K: Ord, V>(pairs: Vec<(K, V)>) -> BTreeMap<K, Vec<V>> {
    let mut map: BTreeMap<K, Vec<V>> = BTreeMap::new();
    for (k, v) in pairs {
        map.entry(k).or_default().push(v);
    }
    map
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::vec_i;

    fn rays_i(rows: &[&[i64]]) -> Vec<Vec<Int>> {
        rows.iter().map(|r| vec_i(r)).collect()
    }

    fn rat_rows(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter()
            .map(|r| r.iter().map(|&c| Rat::from_integer(Int::from(c))).collect())
            .collect()
    }

    #[test]
    fn orthant_dual() {
        let v = dual_description(&rat_rows(&[&[1, 0], &[0, 1]]), &[], 2);
        assert_eq!(v.rays, rays_i(&[&[0, 1], &[1, 0]]));
        assert!(v.lineality.is_empty());
    }

    #[test]
    fn implicit_equality() {
        // x₁ ≥ 0, −x₁ ≥ 0, x₂ ≥ 0 is the ray e₂.
        let v = dual_description(&rat_rows(&[&[1, 0], &[-1, 0], &[0, 1]]), &[], 2);
        assert_eq!(v.rays, rays_i(&[&[0, 1]]));
        assert!(v.lineality.is_empty());
    }

    #[test]
    fn halfplane_has_lineality() {
        let v = dual_description(&rat_rows(&[&[1, 0]]), &[], 2);
        assert_eq!(v.lineality, rays_i(&[&[0, 1]]));
        assert_eq!(v.rays, rays_i(&[&[1, 0]]));
    }

    #[test]
    fn plane_cone_hrep() {
        // cone((1,0,1), (0,1,1)) spans the plane x + y − z = 0.
        let h = cone_hrep(&rays_i(&[&[1, 0, 1], &[0, 1, 1]]), 3);
        assert_eq!(h.equations.len(), 1);
        assert!(dot(&h.equations[0], &vec_i(&[1, 0, 1])).is_zero());
        assert!(dot(&h.equations[0], &vec_i(&[0, 1, 1])).is_zero());
        assert_eq!(h.facets.len(), 2);
        assert!(h.contains(&vec_i(&[1, 1, 2])));
        assert!(!h.contains(&vec_i(&[1, 1, 1])));
        assert!(!h.contains(&vec_i(&[-1, 0, -1])));
    }

    #[test]
    fn extreme_ray_extraction() {
        // (1,1) is interior to cone(e₁, e₂).
        let ext = extreme_rays(&rays_i(&[&[1, 0], &[1, 1], &[0, 1], &[2, 0]]), 2).unwrap();
        assert_eq!(ext, rays_i(&[&[0, 1], &[1, 0]]));
        // A halfplane is rejected.
        assert!(extreme_rays(&rays_i(&[&[1, 0], &[-1, 0], &[0, 1]]), 2).is_err());
    }

    #[test]
    fn faces_of_orthant() {
        let gens = rays_i(&[&[0, 1], &[1, 0]]);
        let hrep = cone_hrep(&gens, 2);
        let faces = cone_faces(&gens, &hrep);
        // faces: ∅, {e₂}, {e₁}, {e₂, e₁}
        assert_eq!(faces.len(), 4);
        assert!(faces.contains(&vec![]));
    }

    #[test]
    fn polytope_vertices() {
        // P_H on the projective-plane fan: m₁ ≥ 0, m₂ ≥ 0, −m₁ − m₂ ≥ −1.
        let rows = vec![
            (rat_rows(&[&[1, 0]])[0].clone(), Rat::zero()),
            (rat_rows(&[&[0, 1]])[0].clone(), Rat::zero()),
            (rat_rows(&[&[-1, -1]])[0].clone(), -Rat::one()),
        ];
        let p = polyhedron_from_hrep(&rows, 2);
        assert!(p.is_bounded());
        let expect: Vec<Vec<Rat>> = rat_rows(&[&[0, 0], &[0, 1], &[1, 0]]);
        assert_eq!(p.points, expect);
        let pts = lattice_points(&rows, 2).unwrap();
        assert_eq!(pts.len(), 3);
    }

    #[test]
    fn polytope_empty_and_unbounded() {
        let empty = polyhedron_from_hrep(
            &[
                (rat_rows(&[&[1]])[0].clone(), Rat::zero()),
                (rat_rows(&[&[-1]])[0].clone(), Rat::one()),
            ],
            1,
        );
        assert!(empty.is_empty());

        let orthant = polyhedron_from_hrep(
            &[
                (rat_rows(&[&[1, 0]])[0].clone(), Rat::zero()),
                (rat_rows(&[&[0, 1]])[0].clone(), Rat::zero()),
            ],
            2,
        );
        assert!(!orthant.is_empty());
        assert_eq!(orthant.rays, rays_i(&[&[0, 1], &[1, 0]]));
        assert_eq!(orthant.points, rat_rows(&[&[0, 0]]));
    }

    #[test]
    fn polyhedron_with_lineality() {
        let p = polyhedron_from_hrep(&[(rat_rows(&[&[1, 0]])[0].clone(), Rat::zero())], 2);
        assert_eq!(p.lineality, rays_i(&[&[0, 1]]));
        assert_eq!(p.rays, rays_i(&[&[1, 0]]));
        assert_eq!(p.points.len(), 1);
    }

    #[test]
    fn triangulate_cone_over_square() {
        let gens = rays_i(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1]]);
        let tris = triangulate(&gens, 3);
        assert_eq!(tris.len(), 2);
        for t in &tris {
            assert_eq!(t.len(), 3);
            assert_eq!(lattice::rank_int(t), 3);
        }
    }

    #[test]
    fn hilbert_basis_of_singular_cone_dual() {
        // Dual of cone((1,0),(1,2)): {m : m₁ ≥ 0, m₁ + 2m₂ ≥ 0}.
        let hb = dual_monoid_generators(&rays_i(&[&[1, 0], &[1, 2]]), 2);
        assert_eq!(hb, rays_i(&[&[0, 1], &[1, 0], &[2, -1]]));
    }

    #[test]
    fn hilbert_basis_of_smooth_cone_dual() {
        let hb = dual_monoid_generators(&rays_i(&[&[1, 0], &[0, 1]]), 2);
        assert_eq!(hb, rays_i(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn monoid_generators_of_full_lattice() {
        // Dual of the zero cone is all of M; generators are ± unit vectors.
        let hb = dual_monoid_generators(&[], 2);
        assert_eq!(hb, rays_i(&[&[-1, 0], &[0, -1], &[0, 1], &[1, 0]]));
    }

    #[test]
    fn hull_vertices_drop_interior_points() {
        let pts = rays_i(&[&[0, 0], &[2, 0], &[0, 2], &[1, 1], &[1, 0]]);
        let v = hull_vertices(&pts, 2);
        assert_eq!(v, rays_i(&[&[0, 0], &[0, 2], &[2, 0]]));
    }

    #[test]
    fn hull_of_segment_and_point() {
        let v = hull_vertices(&rays_i(&[&[1, 1, 0], &[0, 0, 1]]), 3);
        assert_eq!(v.len(), 2);
        let v = hull_vertices(&rays_i(&[&[3, 5]]), 2);
        assert_eq!(v, rays_i(&[&[3, 5]]));
        // collinear points: middle one goes
        let v = hull_vertices(&rays_i(&[&[0, 0], &[1, 1], &[2, 2]]), 2);
        assert_eq!(v, rays_i(&[&[0, 0], &[2, 2]]));
    }
}
