//! Graded Betti numbers of (squarefree) strongly stable ideals, B-sequences,
//! and the recursion recovering a k-sequence from a B-sequence.
//!
//! General monomial ideals get a B-sequence through the Hilbert numerator
//! only; full Betti tables exist just for the (squarefree) strongly stable
//! case, where the closed formulas apply. Everything is truncated at an
//! explicit degree bound: the limit objects are only degreewise finite, and
//! the truncation is the honest computational object.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monom::MonomialIdeal;
use crate::simplex::HVector;
use crate::util::binom;

/// Bigraded Betti table: `(i, j)` is the homological index and the internal
/// degree, with `beta_{i,j} = 0` for `i >= j`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BettiTable {
    entries: BTreeMap<(u32, u32), u64>,
}

impl BettiTable {
    pub fn get(&self, i: u32, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(u32, u32), &u64)> {
        self.entries.iter()
    }

    /// `sum_i (-1)^i beta_{i,j}` for a fixed internal degree `j`.
    pub fn alternating_column_sum(&self, j: u32) -> i64 {
        self.entries
            .iter()
            .filter(|(&(_, jj), _)| jj == j)
            .map(|(&(i, _), &v)| if i % 2 == 0 { v as i64 } else { -(v as i64) })
            .sum()
    }

    fn add(&mut self, i: u32, j: u32, value: u64) {
        if value > 0 {
            *self.entries.entry((i, j)).or_default() += value;
        }
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        for (k, ((i, j), v)) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "b[{i},{j}]={v}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct SeqRepr {
    dmax: u32,
    values: BTreeMap<String, i64>,
}

/// The degree-indexed sequence `B_j = sum_i (-1)^i beta_{i,j}`, truncated at
/// `dmax`; zero entries are omitted from the serialized form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SeqRepr", into = "SeqRepr")]
pub struct BSequence {
    dmax: u32,
    values: BTreeMap<u32, i64>,
}

impl BSequence {
    pub fn new(dmax: u32, values: impl IntoIterator<Item = (u32, i64)>) -> Self {
        let values = values
            .into_iter()
            .filter(|&(j, v)| v != 0 && j >= 1 && j <= dmax)
            .collect();
        BSequence { dmax, values }
    }

    pub fn dmax(&self) -> u32 {
        self.dmax
    }

    pub fn get(&self, j: u32) -> i64 {
        self.values.get(&j).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.values.iter().map(|(&j, &v)| (j, v))
    }
}

impl TryFrom<SeqRepr> for BSequence {
    type Error = Error;
    fn try_from(repr: SeqRepr) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (k, v) in repr.values {
            let j: u32 = k
                .parse()
                .map_err(|_| Error::Parse(format!("bad degree key '{k}'")))?;
            values.insert(j, v);
        }
        Ok(BSequence::new(repr.dmax, values))
    }
}

impl From<BSequence> for SeqRepr {
    fn from(b: BSequence) -> Self {
        SeqRepr {
            dmax: b.dmax,
            values: b.values.iter().map(|(j, &v)| (j.to_string(), v)).collect(),
        }
    }
}

/// Generator counts by degree for a universal squarefree lexsegment ideal,
/// truncated at `dmax`. The derived indices `R_j = j + k_1 + .. + k_j` are
/// strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SeqRepr", into = "SeqRepr")]
pub struct KSequence {
    dmax: u32,
    values: BTreeMap<u32, u64>,
}

impl KSequence {
    pub fn new(dmax: u32, values: impl IntoIterator<Item = (u32, u64)>) -> Self {
        let values = values
            .into_iter()
            .filter(|&(j, v)| v != 0 && j >= 1 && j <= dmax)
            .collect();
        KSequence { dmax, values }
    }

    /// Packs a dense prefix `(k_1, k_2, ..)`.
    pub fn from_prefix(ks: &[u64]) -> Self {
        KSequence::new(
            ks.len() as u32,
            ks.iter().enumerate().map(|(i, &k)| (i as u32 + 1, k)),
        )
    }

    pub fn dmax(&self) -> u32 {
        self.dmax
    }

    pub fn get(&self, j: u32) -> u64 {
        self.values.get(&j).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// `R_j = j + sum_{i <= j} k_i`.
    pub fn r(&self, j: u32) -> u32 {
        let sum: u64 = self
            .values
            .iter()
            .take_while(|(&i, _)| i <= j)
            .map(|(_, &v)| v)
            .sum();
        j + sum as u32
    }

    pub fn last_nonzero(&self) -> Option<u32> {
        self.values.keys().next_back().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.values.iter().map(|(&j, &v)| (j, v))
    }
}

impl TryFrom<SeqRepr> for KSequence {
    type Error = Error;
    fn try_from(repr: SeqRepr) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (k, v) in repr.values {
            let j: u32 = k
                .parse()
                .map_err(|_| Error::Parse(format!("bad degree key '{k}'")))?;
            if v < 0 {
                return Err(Error::Parse(format!("negative k_{j}")));
            }
            values.insert(j, v as u64);
        }
        Ok(KSequence::new(repr.dmax, values))
    }
}

impl From<KSequence> for SeqRepr {
    fn from(k: KSequence) -> Self {
        SeqRepr {
            dmax: k.dmax,
            values: k
                .values
                .iter()
                .map(|(j, &v)| (j.to_string(), v as i64))
                .collect(),
        }
    }
}

/// Betti table of a strongly stable ideal:
/// `beta_{i, i+j} = sum over degree-j generators u of C(m(u) - 1, i)`.
pub fn ek_betti(ideal: &MonomialIdeal) -> Result<BettiTable> {
    if !ideal.is_strongly_stable() {
        return Err(Error::NotStronglyStable);
    }
    let mut table = BettiTable::default();
    for u in ideal.generators() {
        let j = u.degree();
        let top = u.max_var() as i64 - 1;
        for i in 0..=top.max(0) {
            table.add(i as u32, i as u32 + j, binom(top, i) as u64);
        }
    }
    Ok(table)
}

/// Betti table of a squarefree strongly stable ideal:
/// `beta_{i, i+j} = sum over degree-j generators u of C(m(u) - j, i)`.
pub fn ek_betti_sqfree(ideal: &MonomialIdeal) -> Result<BettiTable> {
    if !ideal.is_sq_strongly_stable()? {
        return Err(Error::NotSqStronglyStable);
    }
    let mut table = BettiTable::default();
    for u in ideal.generators() {
        let j = u.degree();
        let top = u.max_var() as i64 - j as i64;
        for i in 0..=top.max(0) {
            table.add(i as u32, i as u32 + j, binom(top, i) as u64);
        }
    }
    Ok(table)
}

/// B-sequence through `dmax`. Strongly stable input (squarefree or plain) is
/// resolved through the closed Betti formulas; anything else falls back to
/// the Hilbert-numerator coefficients. The two routes agree where both apply.
pub fn b_sequence(ideal: &MonomialIdeal, n: u32, dmax: u32) -> Result<BSequence> {
    let table = if ideal.is_squarefree() && ideal.is_sq_strongly_stable()? {
        Some(ek_betti_sqfree(ideal)?)
    } else if ideal.is_strongly_stable() {
        Some(ek_betti(ideal)?)
    } else {
        None
    };
    match table {
        Some(t) => Ok(BSequence::new(
            dmax,
            (1..=dmax).map(|j| (j, t.alternating_column_sum(j))),
        )),
        None => {
            let coeffs = crate::monom::hilbert_numerator(ideal, n, dmax)?;
            Ok(BSequence::new(
                dmax,
                coeffs
                    .iter()
                    .enumerate()
                    .skip(1)
                    .map(|(j, &c)| (j as u32, c)),
            ))
        }
    }
}

/// B-sequence of a Stanley-Reisner ideal straight from the h-vector:
/// coefficients of `1 - (1-x)^{h_1} * sum_i h_i x^i`. Valid when every
/// singleton is a face, so `h_0 = 1` and `h_1 >= 0` are required.
pub fn b_from_h(h: &HVector, dmax: u32) -> Result<BSequence> {
    let hv = &h.0;
    if hv.first() != Some(&1) {
        return Err(Error::BadHVector);
    }
    let h1 = *hv.get(1).unwrap_or(&0);
    if h1 < 0 {
        return Err(Error::BadHVector);
    }
    // (1 - x)^{h_1}
    let mut pow = vec![1i64];
    for _ in 0..h1 {
        let mut next = vec![0i64; pow.len() + 1];
        for (i, &c) in pow.iter().enumerate() {
            next[i] += c;
            next[i + 1] -= c;
        }
        pow = next;
    }
    let mut prod = vec![0i64; pow.len() + hv.len() - 1];
    for (i, &a) in pow.iter().enumerate() {
        for (j, &b) in hv.iter().enumerate() {
            prod[i + j] += a * b;
        }
    }
    let coeff = |j: usize| -> i64 {
        let p = prod.get(j).copied().unwrap_or(0);
        if j == 0 {
            1 - p
        } else {
            -p
        }
    };
    Ok(BSequence::new(
        dmax,
        (1..=dmax).map(|j| (j, coeff(j as usize))),
    ))
}

/// Inverts the USLI Betti formula degree by degree:
/// `k_j = B_j - sum_{i=1..j-1} (-1)^i sum_{l=1..k_{j-i}} C(k_1+..+k_{j-i-1}+l-1, i)`.
/// A negative `k_j` means no USLI realizes the B-sequence, reported as a
/// distinguished error.
pub fn k_from_b(b: &BSequence, dmax: u32) -> Result<KSequence> {
    let mut ks: Vec<u64> = Vec::new();
    let mut prefix_sums: Vec<u64> = vec![0]; // prefix_sums[t] = k_1 + .. + k_t
    for j in 1..=dmax {
        let mut lower: i64 = 0;
        for i in 1..j {
            let deg = j - i; // generator degree contributing to column j
            let k_deg = *ks.get(deg as usize - 1).unwrap_or(&0);
            let before = prefix_sums[deg as usize - 1];
            let mut inner: i64 = 0;
            for l in 1..=k_deg {
                inner += binom((before + l - 1) as i64, i as i64);
            }
            if i % 2 == 1 {
                lower -= inner;
            } else {
                lower += inner;
            }
        }
        let kj = b.get(j) - lower;
        if kj < 0 {
            return Err(Error::NotRealizable(j, kj));
        }
        ks.push(kj as u64);
        prefix_sums.push(prefix_sums.last().unwrap() + kj as u64);
    }
    Ok(KSequence::from_prefix(&ks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monom::tests::ideal;

    #[test]
    fn ek_betti_examples() {
        let t = ek_betti(&ideal(&["x1^2", "x1*x2", "x2^2"])).unwrap();
        assert_eq!(t.get(0, 2), 3);
        assert_eq!(t.get(1, 3), 2);
        assert_eq!(t.iter().count(), 2);

        let t = ek_betti(&ideal(&["x1"])).unwrap();
        assert_eq!(t.get(0, 1), 1);
        assert_eq!(t.iter().count(), 1);

        let i = ideal(&["x1^2", "x1*x2", "x1*x3", "x2^3"]);
        let t = ek_betti(&i).unwrap();
        assert_eq!(t.get(0, 2), 3);
        assert_eq!(t.alternating_column_sum(2), 3);
        assert_eq!(t.alternating_column_sum(3), -2);
        // cross-check against the Hilbert route on the same ideal
        let hn = crate::monom::hilbert_numerator(&i, 3, 4).unwrap();
        assert_eq!(hn[2], 3);
        assert_eq!(hn[3], -2);

        assert!(ek_betti(&ideal(&["x2^2"])).is_err());
    }

    #[test]
    fn ek_betti_sqfree_examples() {
        let t = ek_betti_sqfree(&ideal(&["x1*x2", "x1*x3"])).unwrap();
        assert_eq!(t.get(0, 2), 2);
        assert_eq!(t.get(1, 3), 1);
        assert_eq!(t.iter().count(), 2);

        let t = ek_betti_sqfree(&ideal(&["x1*x2", "x1*x3", "x2*x3"])).unwrap();
        assert_eq!(t.get(0, 2), 3);
        assert_eq!(t.get(1, 3), 2);

        assert!(ek_betti_sqfree(&MonomialIdeal::zero()).unwrap().is_empty());
        assert!(ek_betti_sqfree(&ideal(&["x2*x3"])).is_err());
        assert!(ek_betti_sqfree(&ideal(&["x1^2"])).is_err());
    }

    #[test]
    fn b_sequence_examples() {
        let b = b_sequence(&ideal(&["x1*x2", "x1*x3", "x2*x3"]), 3, 4).unwrap();
        assert_eq!(b.get(2), 3);
        assert_eq!(b.get(3), -2);
        assert_eq!(b.get(4), 0);

        let b = b_sequence(&ideal(&["x1*x2", "x1*x3"]), 3, 4).unwrap();
        assert_eq!(b.get(2), 2);
        assert_eq!(b.get(3), -1);

        assert!(b_sequence(&MonomialIdeal::zero(), 3, 5).unwrap().is_zero());
    }

    #[test]
    fn b_routes_agree_on_strongly_stable_input() {
        // EK route (strongly stable, not squarefree) vs Hilbert route
        let i = ideal(&["x1^2", "x1*x2", "x1*x3", "x2^3"]);
        let via_ek = b_sequence(&i, 3, 6).unwrap();
        let hn = crate::monom::hilbert_numerator(&i, 3, 6).unwrap();
        for j in 1..=6u32 {
            assert_eq!(via_ek.get(j), hn[j as usize], "degree {j}");
        }
    }

    #[test]
    fn b_from_h_examples() {
        let b = b_from_h(&HVector(vec![1, 2]), 4).unwrap();
        assert_eq!(b.get(2), 3);
        assert_eq!(b.get(3), -2);
        assert!(b_from_h(&HVector(vec![1, 0]), 4).unwrap().is_zero());
        assert!(b_from_h(&HVector(vec![2]), 4).is_err());
        assert!(b_from_h(&HVector(vec![]), 4).is_err());
        // triangle boundary: h = (1,1,1) matches the ideal route
        let via_h = b_from_h(&HVector(vec![1, 1, 1]), 5).unwrap();
        let via_ideal = b_sequence(&ideal(&["x1*x2*x3"]), 3, 5).unwrap();
        assert_eq!(via_h, via_ideal);
    }

    #[test]
    fn k_from_b_examples() {
        let b = BSequence::new(4, [(2, 3), (3, -2)]);
        let k = k_from_b(&b, 4).unwrap();
        assert_eq!(k.get(1), 0);
        assert_eq!(k.get(2), 3);
        assert_eq!(k.get(3), 1);
        assert_eq!(k.get(4), 2);
        assert_eq!(k.r(2), 5);

        let b = BSequence::new(4, [(2, 2), (3, -1)]);
        let k = k_from_b(&b, 4).unwrap();
        assert_eq!(k.get(2), 2);
        assert_eq!(k.get(3), 0);
        assert_eq!(k.get(4), 0);

        let zero = BSequence::new(4, []);
        assert!(k_from_b(&zero, 4).unwrap().is_zero());

        // B_1 = 0 but B_2 very negative cannot come from a USLI
        let bad = BSequence::new(3, [(2, -1)]);
        assert!(matches!(k_from_b(&bad, 3), Err(Error::NotRealizable(2, -1))));
    }

    #[test]
    fn sequence_json_shape() {
        let b = BSequence::new(6, [(2, 3), (3, -2)]);
        let s = serde_json::to_string(&b).unwrap();
        assert_eq!(s, r#"{"dmax":6,"values":{"2":3,"3":-2}}"#);
        let back: BSequence = serde_json::from_str(&s).unwrap();
        assert_eq!(back, b);
        let k = KSequence::from_prefix(&[0, 3, 1, 2]);
        let s = serde_json::to_string(&k).unwrap();
        assert_eq!(s, r#"{"dmax":4,"values":{"2":3,"3":1,"4":2}}"#);
    }
}
