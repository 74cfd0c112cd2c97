//! Universal squarefree lexsegment ideals (USLIs) and almost-USLIs.
//!
//! A USLI is determined by its generator-count sequence `k`: with
//! `R_j = j + k_1 + .. + k_j`, the degree-`r` minimal generators are
//! `(prod_{j<r} x_{R_j}) * x_l` for `R_{r-1} + 1 <= l <= R_r - 1`.
//! Recognition pattern-matches a candidate against this reconstruction
//! instead of quantifying over lex-larger monomials, which is equivalent and
//! linear in the generator count. The zero ideal counts as the USLI with
//! `k = 0`, making the full simplex a fixed point of the whole theory.

use serde::{Deserialize, Serialize};

use crate::betti::KSequence;
use crate::error::{Error, Result};
use crate::monom::{Monomial, MonomialIdeal};
use crate::simplex::Face;

/// A degree-truncated USLI: the k-sequence together with the induced minimal
/// generators of degree at most the truncation bound. The serialized form
/// embeds both for cross-validation on load.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "UsliRepr", into = "UsliRepr")]
pub struct UsliPrefix {
    k: KSequence,
    generators: MonomialIdeal,
}

#[derive(Serialize, Deserialize)]
struct UsliRepr {
    k: KSequence,
    generators: Vec<String>,
}

impl TryFrom<UsliRepr> for UsliPrefix {
    type Error = Error;
    fn try_from(repr: UsliRepr) -> Result<Self> {
        let rebuilt = usli_from_k(&repr.k, repr.k.dmax());
        let listed: Vec<Monomial> = repr
            .generators
            .iter()
            .map(|s| s.parse())
            .collect::<Result<_>>()?;
        let listed = MonomialIdeal::minimalize(listed)?;
        if listed != rebuilt.generators {
            return Err(Error::Parse(
                "generator list does not match the k-sequence".into(),
            ));
        }
        Ok(rebuilt)
    }
}

impl From<UsliPrefix> for UsliRepr {
    fn from(u: UsliPrefix) -> Self {
        UsliRepr {
            k: u.k,
            generators: u
                .generators
                .generators()
                .iter()
                .map(Monomial::to_string)
                .collect(),
        }
    }
}

impl UsliPrefix {
    pub fn k(&self) -> &KSequence {
        &self.k
    }

    pub fn generators(&self) -> &MonomialIdeal {
        &self.generators
    }

    pub fn dmax(&self) -> u32 {
        self.k.dmax()
    }
}

/// All minimal generators of degree `<= dmax` of the USLI `L(k)`.
pub fn usli_from_k(k: &KSequence, dmax: u32) -> UsliPrefix {
    let k = KSequence::new(dmax, k.iter().filter(|&(j, _)| j <= dmax));
    let mut gens: Vec<Monomial> = Vec::new();
    for r in 1..=dmax {
        let prefix: Vec<u32> = (1..r).map(|j| k.r(j)).collect();
        for l in k.r(r - 1) + 1..k.r(r) {
            gens.push(Monomial::squarefree(prefix.iter().copied().chain([l])));
        }
    }
    let generators = MonomialIdeal::minimalize(gens).expect("USLI generators are not units");
    UsliPrefix { k, generators }
}

/// Counts generators by degree.
fn k_of(ideal: &MonomialIdeal) -> KSequence {
    let dmax = ideal.regularity().unwrap_or(0);
    KSequence::new(
        dmax,
        (1..=dmax).map(|d| (d, ideal.gens_of_degree(d).count() as u64)),
    )
}

/// True iff the ideal is squarefree and its generators are exactly the USLI
/// reconstruction from its own degree counts.
pub fn is_usli(ideal: &MonomialIdeal) -> bool {
    if ideal.is_zero() {
        return true;
    }
    if !ideal.is_squarefree() {
        return false;
    }
    let k = k_of(ideal);
    let rebuilt = usli_from_k(&k, k.dmax());
    rebuilt.generators() == ideal
}

/// True iff the ideal is squarefree strongly stable, not a USLI, but becomes
/// one after dropping the last generator in the canonical (degree-ascending,
/// lex-descending) order.
pub fn is_almost_usli(ideal: &MonomialIdeal) -> bool {
    if ideal.is_zero() || !ideal.is_squarefree() {
        return false;
    }
    if !ideal.is_sq_strongly_stable().unwrap_or(false) || is_usli(ideal) {
        return false;
    }
    let gens = ideal.generators();
    let head = MonomialIdeal::minimalize(gens[..gens.len() - 1].to_vec())
        .expect("generators are not units");
    // dropping the lex-last generator of an antichain keeps the rest minimal
    debug_assert_eq!(head.generators().len(), gens.len() - 1);
    is_usli(&head)
}

/// The facets of the USLI complex of `L(k)` on the vertex set `[n]`, by the
/// closed formula: with `d` the last nonzero index of `k`,
/// `F_i = {R_1, .., R_{i-1}} ∪ [R_i + 1, n]` for `i < d` and
/// `F_d = {R_1, .., R_{d-1}} ∪ [R_d, n]`.
pub fn usli_facets(k: &KSequence, n: u32) -> Result<Vec<Face>> {
    let d = k.last_nonzero().ok_or(Error::ZeroKSequence)?;
    let rd = k.r(d);
    if rd > n + 1 {
        return Err(Error::UniverseTooSmall(rd, n + 1));
    }
    let mut facets = Vec::with_capacity(d as usize);
    for i in 1..=d {
        let head = (1..i).map(|j| k.r(j));
        let tail_from = if i < d { k.r(i) + 1 } else { rd };
        let verts: Vec<u32> = head.chain(tail_from..=n).collect();
        facets.push(Face::new(verts).expect("R_j are strictly increasing"));
    }
    Ok(facets)
}
