//! Finite simplicial complexes on the vertex set `[n] = {1, .., n}`.
//!
//! A complex is stored by its facets (the inclusion-maximal faces) together
//! with the size `n` of the vertex universe. The universe is part of the
//! value: operators like the cone and the facet Betti count depend on `n`,
//! not just on the vertices actually used. Two degenerate complexes are
//! representable: the void complex (no faces at all, empty facet list) and
//! the complex `{∅}` whose single facet is the empty face.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::util::binom;

/// Largest universe accepted by [`enumerate_shifted`].
pub const ENUMERATION_CAP: u32 = 6;

/// A face: a strictly increasing sequence of vertex indices, possibly empty.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Face(Vec<u32>);

impl Face {
    /// Builds a face from strictly increasing vertex indices (all `>= 1`).
    pub fn new(vertices: Vec<u32>) -> Result<Self> {
        let increasing = vertices.windows(2).all(|w| w[0] < w[1]);
        if !increasing || vertices.first().is_some_and(|&v| v == 0) {
            return Err(Error::Parse(format!(
                "face {vertices:?} is not a strictly increasing sequence of positive integers"
            )));
        }
        Ok(Face(vertices))
    }

    /// Builds a face from arbitrary vertices, sorting and deduplicating.
    pub fn from_unsorted(mut vertices: Vec<u32>) -> Result<Self> {
        vertices.sort_unstable();
        vertices.dedup();
        Face::new(vertices)
    }

    pub fn empty() -> Self {
        Face(Vec::new())
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    /// Number of vertices; the dimension is `card() - 1`.
    pub fn card(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Face) -> bool {
        self.0.iter().all(|v| other.contains(*v))
    }

    pub fn without(&self, v: u32) -> Face {
        Face(self.0.iter().copied().filter(|&x| x != v).collect())
    }

    pub fn with(&self, v: u32) -> Face {
        let mut verts = self.0.clone();
        match verts.binary_search(&v) {
            Ok(_) => {}
            Err(pos) => verts.insert(pos, v),
        }
        Face(verts)
    }

    /// All subsets of this face, the face itself included.
    pub fn subsets(&self) -> impl Iterator<Item = Face> + '_ {
        let k = self.0.len();
        (0u64..(1 << k)).map(move |mask| {
            Face(
                (0..k)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| self.0[i])
                    .collect(),
            )
        })
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// The face-count vector `(f_{-1}, f_0, .., f_{dim})`; entry `k` counts faces
/// of cardinality `k`. The void complex has the empty vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector(pub Vec<u64>);

/// The h-vector `(h_0, .., h_d)` with `d = dim + 1`; entries may be negative
/// when not every singleton is a face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HVector(pub Vec<i64>);

#[derive(Serialize, Deserialize)]
struct ComplexRepr {
    n: u32,
    facets: Vec<Vec<u32>>,
}

/// A simplicial complex on `[n]`, canonically stored by its facet antichain
/// sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "ComplexRepr", into = "ComplexRepr")]
pub struct SimplicialComplex {
    n: u32,
    facets: Vec<Face>,
}

impl TryFrom<ComplexRepr> for SimplicialComplex {
    type Error = Error;
    fn try_from(repr: ComplexRepr) -> Result<Self> {
        let faces = repr
            .facets
            .into_iter()
            .map(Face::new)
            .collect::<Result<Vec<_>>>()?;
        SimplicialComplex::from_facets(repr.n, faces)
    }
}

impl From<SimplicialComplex> for ComplexRepr {
    fn from(c: SimplicialComplex) -> Self {
        ComplexRepr {
            n: c.n,
            facets: c.facets.into_iter().map(|f| f.0).collect(),
        }
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<[{}];", self.n)?;
        for (i, fc) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, " {fc}")?;
        }
        write!(f, ">")
    }
}

impl SimplicialComplex {
    /// Canonicalizes: validates vertices, prunes non-maximal faces, sorts.
    pub fn from_facets(n: u32, faces: impl IntoIterator<Item = Face>) -> Result<Self> {
        let mut faces: Vec<Face> = faces.into_iter().collect();
        for face in &faces {
            if let Some(&v) = face.vertices().last() {
                if v > n {
                    return Err(Error::VertexOutOfRange(v, n));
                }
            }
        }
        faces.sort();
        faces.dedup();
        let facets: Vec<Face> = faces
            .iter()
            .filter(|f| !faces.iter().any(|g| *f != g && f.is_subset_of(g)))
            .cloned()
            .collect();
        Ok(SimplicialComplex { n, facets })
    }

    /// The void complex: no faces at all.
    pub fn void(n: u32) -> Self {
        SimplicialComplex { n, facets: Vec::new() }
    }

    /// The complex `{∅}` containing only the empty face.
    pub fn empty_face_only(n: u32) -> Self {
        SimplicialComplex { n, facets: vec![Face::empty()] }
    }

    /// The full simplex on `[n]`.
    pub fn simplex(n: u32) -> Self {
        SimplicialComplex {
            n,
            facets: vec![Face((1..=n).collect())],
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension as `i64`; `-1` for `{∅}`, `None` for the void complex.
    pub fn dim(&self) -> Option<i64> {
        self.facets
            .iter()
            .map(|f| f.card() as i64 - 1)
            .max()
    }

    pub fn contains(&self, face: &Face) -> bool {
        self.facets.iter().any(|f| face.is_subset_of(f))
    }

    /// The downward closure: every face of the complex.
    pub fn faces(&self) -> BTreeSet<Face> {
        let mut all = BTreeSet::new();
        for facet in &self.facets {
            all.extend(facet.subsets());
        }
        all
    }

    pub fn f_vector(&self) -> FVector {
        let mut counts = vec![0u64; self.dim().map_or(0, |d| (d + 2) as usize)];
        for face in self.faces() {
            counts[face.card()] += 1;
        }
        FVector(counts)
    }

    /// `h_j = sum_{i=0..j} (-1)^{j-i} C(d-i, j-i) f_{i-1}` with `d = dim + 1`.
    pub fn h_vector(&self) -> HVector {
        let f = self.f_vector().0;
        if f.is_empty() {
            return HVector(Vec::new());
        }
        let d = f.len() as i64 - 1;
        let mut h = Vec::with_capacity(f.len());
        for j in 0..=d {
            let mut acc: i64 = 0;
            for i in 0..=j {
                let sign = if (j - i) % 2 == 0 { 1 } else { -1 };
                acc += sign * binom(d - i, j - i) * f[i as usize] as i64;
            }
            h.push(acc);
        }
        HVector(h)
    }

    /// Reduced Euler characteristic `sum_{j >= -1} (-1)^j f_j`.
    pub fn reduced_euler(&self) -> i64 {
        self.f_vector()
            .0
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { -(c as i64) } else { c as i64 })
            .sum()
    }

    fn check_vertex(&self, v: u32) -> Result<()> {
        if v == 0 || v > self.n {
            return Err(Error::VertexOutOfRange(v, self.n));
        }
        Ok(())
    }

    /// Universe for link/antistar: `[n-1]` when `v = n`, otherwise `[n]`.
    fn sub_universe(&self, v: u32) -> u32 {
        if v == self.n {
            self.n - 1
        } else {
            self.n
        }
    }

    /// Faces `F` with `v ∉ F` and `F ∪ {v}` a face.
    pub fn link(&self, v: u32) -> Result<SimplicialComplex> {
        self.check_vertex(v)?;
        let all = self.faces();
        let kept: Vec<Face> = all
            .iter()
            .filter(|f| !f.contains(v) && all.contains(&f.with(v)))
            .cloned()
            .collect();
        SimplicialComplex::from_facets(self.sub_universe(v), kept)
    }

    /// Faces avoiding `v`.
    pub fn antistar(&self, v: u32) -> Result<SimplicialComplex> {
        self.check_vertex(v)?;
        let kept: Vec<Face> = self
            .faces()
            .into_iter()
            .filter(|f| !f.contains(v))
            .collect();
        SimplicialComplex::from_facets(self.sub_universe(v), kept)
    }

    /// The cone with apex `n + 1`.
    pub fn cone(&self) -> SimplicialComplex {
        SimplicialComplex {
            n: self.n + 1,
            facets: self.facets.iter().map(|f| f.with(self.n + 1)).collect(),
        }
    }

    /// True iff for every face `F`, `i ∈ F` and `i < j <= n`, the set
    /// `(F \ {i}) ∪ {j}` is again a face.
    pub fn is_shifted(&self) -> bool {
        let all = self.faces();
        for face in &all {
            for &i in face.vertices() {
                for j in i + 1..=self.n {
                    if face.contains(j) {
                        continue;
                    }
                    if !all.contains(&face.without(i).with(j)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Facet Betti count of a shifted complex: entry `k` is the number of
    /// facets of cardinality `k` avoiding the vertex `n` (so it matches
    /// [`Self::reduced_betti`]'s indexing, `k = i + 1`).
    pub fn shifted_betti(&self) -> Result<Vec<u64>> {
        if !self.is_shifted() {
            return Err(Error::NotShifted);
        }
        let len = self.dim().map_or(0, |d| (d + 2) as usize);
        let mut counts = vec![0u64; len];
        for facet in &self.facets {
            if !facet.contains(self.n) {
                counts[facet.card()] += 1;
            }
        }
        Ok(counts)
    }

    /// Reduced rational Betti numbers via exact boundary-matrix ranks.
    /// Entry `k` is the rank of the reduced homology in dimension `k - 1`,
    /// aligning indices with [`Self::f_vector`].
    pub fn reduced_betti(&self) -> Vec<u64> {
        let by_card = self.faces_by_card();
        let depth = by_card.len();
        if depth == 0 {
            return Vec::new();
        }
        // ranks[k] = rank of the boundary map from cardinality k to k-1
        let mut ranks = vec![0usize; depth + 1];
        for k in 1..depth {
            let mut mat = boundary_matrix(&by_card[k], &by_card[k - 1]);
            ranks[k] = linalg::rank(&mut mat);
        }
        (0..depth)
            .map(|k| (by_card[k].len() - ranks[k] - ranks[k + 1]) as u64)
            .collect()
    }

    fn faces_by_card(&self) -> Vec<Vec<Face>> {
        let depth = self.dim().map_or(0, |d| (d + 2) as usize);
        let mut by_card = vec![Vec::new(); depth];
        for face in self.faces() {
            by_card[face.card()].push(face);
        }
        by_card
    }
}

fn boundary_matrix(sources: &[Face], targets: &[Face]) -> Vec<Vec<BigRational>> {
    let zero = BigRational::default();
    sources
        .iter()
        .map(|face| {
            let mut row = vec![zero.clone(); targets.len()];
            for (l, &v) in face.vertices().iter().enumerate() {
                let sub = face.without(v);
                let idx = targets.binary_search(&sub).expect("boundary face present");
                let one = BigRational::one();
                row[idx] = if l % 2 == 0 { one } else { -one };
            }
            row
        })
        .collect()
}

/// Every shifted complex on `[n]`, each exactly once, in a deterministic
/// order. Shifted complexes are exactly the order ideals of the dominance
/// order on subsets of `[n]` (delete a vertex, or replace one by a larger
/// one), generated depth-first over a linear extension.
pub fn enumerate_shifted(n: u32) -> Result<Vec<SimplicialComplex>> {
    if n > ENUMERATION_CAP {
        return Err(Error::EnumerationCap(n, ENUMERATION_CAP));
    }
    let mut elems: Vec<Vec<u32>> = Vec::new();
    for mask in 0u64..(1 << n) {
        elems.push((1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect());
    }
    // linear extension: size ascending, then entries descending lexicographically,
    // so every dominated subset precedes its dominators
    elems.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| b.cmp(a))
    });
    let m = elems.len();
    let mut below: Vec<Vec<usize>> = vec![Vec::new(); m];
    for i in 0..m {
        for j in 0..m {
            if i != j && dominates(&elems[j], &elems[i]) {
                below[i].push(j);
            }
        }
    }
    let mut out = Vec::new();
    let mut included = vec![false; m];
    dfs(0, &mut included, &below, &elems, n, &mut out);
    Ok(out)
}

fn dominates(g: &[u32], f: &[u32]) -> bool {
    // g is reachable from f by deletions and index raises
    g.len() <= f.len() && g.iter().zip(f).all(|(a, b)| a >= b)
}

fn dfs(
    i: usize,
    included: &mut Vec<bool>,
    below: &[Vec<usize>],
    elems: &[Vec<u32>],
    n: u32,
    out: &mut Vec<SimplicialComplex>,
) {
    if i == elems.len() {
        // facets are the inclusion-maximal members of the ideal
        let members: Vec<Face> = (0..elems.len())
            .filter(|&j| included[j])
            .map(|j| Face(elems[j].clone()))
            .collect();
        let facets = members
            .iter()
            .filter(|f| !members.iter().any(|g| *f != g && f.is_subset_of(g)))
            .cloned()
            .collect::<Vec<_>>();
        out.push(SimplicialComplex { n, facets: sorted(facets) });
        return;
    }
    dfs(i + 1, included, below, elems, n, out);
    if below[i].iter().all(|&j| included[j]) {
        included[i] = true;
        dfs(i + 1, included, below, elems, n, out);
        included[i] = false;
    }
}

fn sorted(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort();
    faces
}

/// A seed-deterministic random complex: facet count uniform up to the largest
/// possible antichain, then the maximal elements of that many uniform subsets.
pub fn random_complex(n: u32, seed: u64) -> SimplicialComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(0x9E37_79B9_7F4A_7C15u64.wrapping_mul(n as u64 + 1)));
    let max_antichain = binom(n as i64, n as i64 / 2).max(1) as u64;
    let t = rng.gen_range(0..=max_antichain);
    let mut faces = Vec::new();
    for _ in 0..t {
        let mask: u64 = rng.gen_range(0..(1u64 << n));
        faces.push(Face((1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect()));
    }
    SimplicialComplex::from_facets(n, faces).expect("sampled vertices are in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn complex(n: u32, facets: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(
            n,
            facets.iter().map(|f| Face::new(f.to_vec()).unwrap()),
        )
        .unwrap()
    }

    fn three_points() -> SimplicialComplex {
        complex(3, &[&[1], &[2], &[3]])
    }

    #[test]
    fn f_vector_examples() {
        assert_eq!(three_points().f_vector(), FVector(vec![1, 3]));
        assert_eq!(
            SimplicialComplex::simplex(3).f_vector(),
            FVector(vec![1, 3, 3, 1])
        );
        // oracle: enumerate the downward closure by hand for the mixed complex
        let c = complex(4, &[&[2, 3], &[2, 4], &[3, 4], &[1]]);
        let mut by_hand = BTreeSet::new();
        for f in [&[2u32, 3][..], &[2, 4], &[3, 4], &[1]] {
            let face = Face::new(f.to_vec()).unwrap();
            by_hand.extend(face.subsets());
        }
        let mut counts = vec![0u64; 3];
        for f in &by_hand {
            counts[f.card()] += 1;
        }
        assert_eq!(counts, vec![1, 4, 3]);
        assert_eq!(c.f_vector(), FVector(counts));
    }

    #[test]
    fn f_vector_degenerate() {
        assert_eq!(SimplicialComplex::void(4).f_vector(), FVector(vec![]));
        assert_eq!(
            SimplicialComplex::empty_face_only(4).f_vector(),
            FVector(vec![1])
        );
    }

    #[test]
    fn h_vector_examples() {
        assert_eq!(three_points().h_vector(), HVector(vec![1, 2]));
        assert_eq!(
            SimplicialComplex::simplex(3).h_vector(),
            HVector(vec![1, 0, 0, 0])
        );
        let triangle_boundary = complex(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(triangle_boundary.h_vector(), HVector(vec![1, 1, 1]));
    }

    #[test]
    fn cone_link_antistar_examples() {
        let cone = three_points().cone();
        assert_eq!(cone, complex(4, &[&[1, 4], &[2, 4], &[3, 4]]));
        assert_eq!(cone.link(4).unwrap(), three_points());
        assert_eq!(cone.antistar(4).unwrap(), three_points());
        assert!(cone.link(5).is_err());
        assert!(cone.link(0).is_err());
    }

    #[test]
    fn link_antistar_at_inner_vertex_keep_universe() {
        let c = complex(3, &[&[1, 2], &[2, 3]]);
        let lk = c.link(2).unwrap();
        assert_eq!(lk.n(), 3);
        assert_eq!(lk, complex(3, &[&[1], &[3]]));
        let ast = c.antistar(2).unwrap();
        assert_eq!(ast, complex(3, &[&[1], &[3]]));
    }

    #[test]
    fn link_join_antistar_identity() {
        for (n, facets) in [
            (3u32, vec![vec![1u32, 2], vec![3]]),
            (4, vec![vec![2, 3], vec![2, 4], vec![3, 4], vec![1]]),
            (4, vec![vec![1, 2, 3], vec![2, 3, 4]]),
        ] {
            let c = SimplicialComplex::from_facets(
                n,
                facets.into_iter().map(|f| Face::new(f).unwrap()),
            )
            .unwrap();
            for v in 1..=n {
                let mut rebuilt: BTreeSet<Face> = c
                    .link(v)
                    .unwrap()
                    .faces()
                    .into_iter()
                    .flat_map(|f| [f.clone(), f.with(v)])
                    .collect();
                rebuilt.extend(c.antistar(v).unwrap().faces());
                assert_eq!(rebuilt, c.faces(), "identity fails at v={v}");
            }
        }
    }

    #[test]
    fn is_shifted_examples() {
        assert!(three_points().is_shifted());
        assert!(!complex(3, &[&[1, 2], &[3]]).is_shifted());
        assert!(SimplicialComplex::simplex(4).is_shifted());
        assert!(SimplicialComplex::void(3).is_shifted());
        assert!(SimplicialComplex::empty_face_only(3).is_shifted());
    }

    #[test]
    fn shifted_betti_examples() {
        let c = complex(4, &[&[2, 3], &[2, 4], &[3, 4], &[1]]);
        assert_eq!(c.shifted_betti().unwrap(), vec![0, 1, 1]);
        assert_eq!(c.reduced_betti(), vec![0, 1, 1]);
        let cone = c.cone();
        assert_eq!(cone.shifted_betti().unwrap(), vec![0, 0, 0, 0]);
        assert_eq!(three_points().shifted_betti().unwrap(), vec![0, 2]);
        assert!(complex(3, &[&[1, 2], &[3]]).shifted_betti().is_err());
    }

    #[test]
    fn reduced_betti_examples() {
        assert_eq!(three_points().reduced_betti(), vec![0, 2]);
        let triangle_boundary = complex(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(triangle_boundary.reduced_betti(), vec![0, 0, 1]);
        assert_eq!(SimplicialComplex::simplex(3).reduced_betti(), vec![0, 0, 0, 0]);
        assert_eq!(SimplicialComplex::empty_face_only(2).reduced_betti(), vec![1]);
        assert_eq!(SimplicialComplex::void(2).reduced_betti(), Vec::<u64>::new());
    }

    #[test]
    fn euler_examples() {
        assert_eq!(three_points().reduced_euler(), 2);
        assert_eq!(SimplicialComplex::simplex(3).reduced_euler(), 0);
        assert_eq!(
            complex(4, &[&[2, 3], &[2, 4], &[3, 4], &[1]]).reduced_euler(),
            0
        );
    }

    #[test]
    fn euler_poincare_on_samples() {
        for seed in 0..40 {
            let c = random_complex(5, seed);
            let betti = c.reduced_betti();
            let euler_from_homology: i64 = betti
                .iter()
                .enumerate()
                .map(|(k, &b)| if k % 2 == 0 { -(b as i64) } else { b as i64 })
                .sum();
            assert_eq!(c.reduced_euler(), euler_from_homology);
        }
    }

    #[test]
    fn enumerate_small_counts() {
        assert_eq!(enumerate_shifted(0).unwrap().len(), 2);
        assert_eq!(enumerate_shifted(1).unwrap().len(), 3);
        assert_eq!(enumerate_shifted(2).unwrap().len(), 5);
        assert_eq!(enumerate_shifted(3).unwrap().len(), 10);
        assert!(enumerate_shifted(7).is_err());
    }

    #[test]
    fn enumerate_is_complete_and_duplicate_free() {
        for n in 0..=4u32 {
            let listed = enumerate_shifted(n).unwrap();
            let set: BTreeSet<_> = listed.iter().cloned().collect();
            assert_eq!(set.len(), listed.len(), "duplicates at n={n}");
            assert!(listed.iter().all(SimplicialComplex::is_shifted));
            // brute force: every inclusion-closed family that passes is_shifted
            let subsets: Vec<Face> = SimplicialComplex::simplex(n)
                .faces()
                .into_iter()
                .collect();
            let mut brute = 0u64;
            for mask in 0u64..(1 << subsets.len()) {
                let family: Vec<Face> = (0..subsets.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| subsets[i].clone())
                    .collect();
                let closed = family.iter().all(|f| {
                    f.subsets().all(|s| family.contains(&s))
                });
                if !closed {
                    continue;
                }
                let facets: Vec<Face> = family
                    .iter()
                    .filter(|f| !family.iter().any(|g| *f != g && f.is_subset_of(g)))
                    .cloned()
                    .collect();
                let c = SimplicialComplex::from_facets(n, facets).unwrap();
                if c.is_shifted() {
                    brute += 1;
                    assert!(set.contains(&c), "missing {c} at n={n}");
                }
            }
            assert_eq!(brute, listed.len() as u64, "count mismatch at n={n}");
        }
    }

    #[test]
    fn shifted_complexes_have_shifted_links() {
        for c in enumerate_shifted(4).unwrap() {
            if c.is_void() || c.n() == 0 {
                continue;
            }
            assert!(c.link(c.n()).unwrap().is_shifted());
            assert!(c.antistar(c.n()).unwrap().is_shifted());
        }
    }

    #[test]
    fn random_complex_is_deterministic() {
        assert_eq!(random_complex(3, 1), random_complex(3, 1));
        let c = random_complex(0, 7);
        assert!(c.is_void() || c == SimplicialComplex::empty_face_only(0));
        for seed in 0..20 {
            let c = random_complex(4, seed);
            for f in c.facets() {
                assert!(!c.facets().iter().any(|g| f != g && f.is_subset_of(g)));
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let c = complex(4, &[&[2, 3], &[2, 4], &[3, 4], &[1]]);
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"n":4,"facets":[[1],[2,3],[2,4],[3,4]]}"#);
        let back: SimplicialComplex = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
        let void: SimplicialComplex = serde_json::from_str(r#"{"n":2,"facets":[]}"#).unwrap();
        assert!(void.is_void());
        let ef: SimplicialComplex = serde_json::from_str(r#"{"n":2,"facets":[[]]}"#).unwrap();
        assert_eq!(ef, SimplicialComplex::empty_face_only(2));
        assert!(serde_json::from_str::<SimplicialComplex>(r#"{"n":2,"facets":[[2,1]]}"#).is_err());
        assert!(serde_json::from_str::<SimplicialComplex>(r#"{"n":2,"facets":[[3]]}"#).is_err());
    }
}
