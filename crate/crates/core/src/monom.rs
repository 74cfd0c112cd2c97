//! Monomials, degree-refining term orders, and monomial ideals.
//!
//! Variable indices are unbounded positive integers: ideals live in the
//! limit ring with countably many variables, and a universe bound `n` is
//! supplied per operation where the ambient polynomial ring matters.
//!
//! Two degree policies share one order type. Ideal comparison and generator
//! sorting follow the convention that lower-degree monomials are the more
//! expensive ones (`Paper`), while the Gröbner engine needs an honest
//! well-order with degree ascending (`Groebner`). On homogeneous data the
//! two agree, which is why a single within-degree comparator serves both.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::simplex::{Face, SimplicialComplex};
use crate::util::binom;

/// A monomial as a sparse exponent vector: strictly increasing variable
/// indices, all exponents positive. The unit monomial has no entries.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    exps: Vec<(u32, u32)>,
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial::default()
    }

    pub fn var(v: u32) -> Self {
        assert!(v >= 1, "variable indices start at 1");
        Monomial { exps: vec![(v, 1)] }
    }

    /// Builds from (variable, exponent) pairs; zero exponents are dropped,
    /// repeated variables accumulate.
    pub fn from_exponents(pairs: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut map: Vec<(u32, u32)> = Vec::new();
        for (v, e) in pairs {
            assert!(v >= 1, "variable indices start at 1");
            if e == 0 {
                continue;
            }
            match map.binary_search_by_key(&v, |p| p.0) {
                Ok(i) => map[i].1 += e,
                Err(i) => map.insert(i, (v, e)),
            }
        }
        Monomial { exps: map }
    }

    /// Squarefree monomial with the given support.
    pub fn squarefree(support: impl IntoIterator<Item = u32>) -> Self {
        Monomial::from_exponents(support.into_iter().map(|v| (v, 1)))
    }

    pub fn exponents(&self) -> &[(u32, u32)] {
        &self.exps
    }

    pub fn exponent_of(&self, v: u32) -> u32 {
        self.exps
            .binary_search_by_key(&v, |p| p.0)
            .map_or(0, |i| self.exps[i].1)
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.is_empty()
    }

    /// `m(u)`: the largest variable index dividing the monomial; 0 for the unit.
    pub fn max_var(&self) -> u32 {
        self.exps.last().map_or(0, |&(v, _)| v)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&(_, e)| e == 1)
    }

    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_exponents(self.exps.iter().chain(&other.exps).copied())
    }

    pub fn mul_var(&self, v: u32) -> Monomial {
        Monomial::from_exponents(self.exps.iter().copied().chain([(v, 1)]))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|&(v, e)| other.exponent_of(v) >= e)
    }

    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial::from_exponents(self.exps.iter().map(|&(v, e)| {
            (v, e - other.exponent_of(v))
        })))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let vars: BTreeSet<u32> = self.support().chain(other.support()).collect();
        Monomial::from_exponents(
            vars.into_iter()
                .map(|v| (v, self.exponent_of(v).max(other.exponent_of(v)))),
        )
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.support().all(|v| other.exponent_of(v) == 0)
    }

    /// The exchange `x_i * m / x_j`; requires `x_j | m`.
    pub fn exchange(&self, i: u32, j: u32) -> Monomial {
        debug_assert!(self.exponent_of(j) >= 1);
        Monomial::from_exponents(
            self.exps
                .iter()
                .map(|&(v, e)| if v == j { (v, e - 1) } else { (v, e) })
                .chain([(i, 1)]),
        )
    }

    /// The squarefree operator: with the exponent sequence written as a
    /// weakly increasing list `i_1 <= .. <= i_k`, maps to the squarefree
    /// monomial with support `{i_j + j - 1}`.
    pub fn phi(&self) -> Monomial {
        let mut support = Vec::with_capacity(self.degree() as usize);
        let mut pos = 0u32;
        for &(v, e) in &self.exps {
            for _ in 0..e {
                support.push(v + pos);
                pos += 1;
            }
        }
        Monomial::squarefree(support)
    }

    /// Inverse of [`Self::phi`] on squarefree monomials: support
    /// `j_1 < .. < j_k` maps to the product of `x_{j_l - l + 1}`.
    pub fn phi_inv(&self) -> Result<Monomial> {
        if !self.is_squarefree() {
            return Err(Error::NotSquarefree(self.to_string()));
        }
        Ok(Monomial::from_exponents(
            self.exps
                .iter()
                .enumerate()
                .map(|(l, &(v, _))| (v - l as u32, 1)),
        ))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for (i, &(v, e)) in self.exps.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "x{v}")?;
            } else {
                write!(f, "x{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Monomial {
    type Err = Error;

    /// Grammar: `x<k>` optionally `^<e>`, joined by `*`; `1` is the unit.
    fn from_str(s: &str) -> Result<Monomial> {
        let s = s.trim();
        if s == "1" {
            return Ok(Monomial::unit());
        }
        let mut pairs = Vec::new();
        for part in s.split('*') {
            let part = part.trim();
            let rest = part
                .strip_prefix('x')
                .ok_or_else(|| Error::Parse(format!("bad monomial factor '{part}'")))?;
            let (var, exp) = match rest.split_once('^') {
                Some((v, e)) => (v, e),
                None => (rest, "1"),
            };
            let v: u32 = var
                .parse()
                .map_err(|_| Error::Parse(format!("bad variable index '{var}'")))?;
            let e: u32 = exp
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent '{exp}'")))?;
            if v == 0 || e == 0 {
                return Err(Error::Parse(format!("bad factor '{part}'")));
            }
            pairs.push((v, e));
        }
        Ok(Monomial::from_exponents(pairs))
    }
}

impl Serialize for Monomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// How degrees tie-break: `Groebner` is the usual well-order (lower degree
/// smaller); `Paper` makes lower-degree monomials the more expensive ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DegreePolicy {
    Groebner,
    Paper,
}

/// Within-degree comparator; always a total order refining `x_1 > x_2 > ..`.
#[derive(Clone, Copy, Debug)]
pub enum WithinDegree {
    Lex,
    RevLex,
    Plugin(&'static PluginOrder),
}

impl PartialEq for WithinDegree {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (WithinDegree::Lex, WithinDegree::Lex) => true,
            (WithinDegree::RevLex, WithinDegree::RevLex) => true,
            (WithinDegree::Plugin(a), WithinDegree::Plugin(b)) => a.name == b.name,
            _ => false,
        }
    }
}
impl Eq for WithinDegree {}

/// A named plug-in comparator for monomials of equal degree. Plug-ins carry
/// an obligation: compatibility with the squarefree operator and
/// multiplicativity are spot-tested, not proven.
pub struct PluginOrder {
    pub name: &'static str,
    pub cmp: fn(&Monomial, &Monomial) -> Ordering,
}

impl fmt::Debug for PluginOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PluginOrder({})", self.name)
    }
}

/// Block order: the exponent of `x_1` decides first (larger wins), revlex on
/// the remaining variables breaks ties. A genuine term order, but it fails
/// the squarefree-compatibility spot test; it exists to exercise that
/// obligation.
static X1_BLOCK_REVLEX: PluginOrder = PluginOrder {
    name: "x1block",
    cmp: |a, b| {
        let a1 = a.exponent_of(1);
        let b1 = b.exponent_of(1);
        a1.cmp(&b1).then_with(|| cmp_revlex_skipping_x1(a, b))
    },
};

fn cmp_revlex_skipping_x1(a: &Monomial, b: &Monomial) -> Ordering {
    let strip = |m: &Monomial| {
        Monomial::from_exponents(m.exponents().iter().copied().filter(|&(v, _)| v != 1))
    };
    cmp_revlex(&strip(a), &strip(b))
}

/// Looks up a registered plug-in order by name.
pub fn plugin_order(name: &str) -> Option<&'static PluginOrder> {
    match name {
        "x1block" => Some(&X1_BLOCK_REVLEX),
        _ => None,
    }
}

/// A term order: a within-degree comparator plus a degree policy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TermOrder {
    pub within: WithinDegree,
    pub policy: DegreePolicy,
}

impl TermOrder {
    /// Graded lex with the ideal-comparison degree convention.
    pub fn lex() -> Self {
        TermOrder { within: WithinDegree::Lex, policy: DegreePolicy::Paper }
    }

    /// Graded revlex with the ideal-comparison degree convention.
    pub fn revlex() -> Self {
        TermOrder { within: WithinDegree::RevLex, policy: DegreePolicy::Paper }
    }

    pub fn plugin(order: &'static PluginOrder) -> Self {
        TermOrder { within: WithinDegree::Plugin(order), policy: DegreePolicy::Paper }
    }

    /// Same comparator with the Gröbner well-order degree policy.
    pub fn groebner(self) -> Self {
        TermOrder { policy: DegreePolicy::Groebner, ..self }
    }

    pub fn name(&self) -> String {
        let base = match self.within {
            WithinDegree::Lex => "lex",
            WithinDegree::RevLex => "revlex",
            WithinDegree::Plugin(p) => p.name,
        };
        base.to_string()
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (da, db) = (a.degree(), b.degree());
        if da != db {
            return match self.policy {
                DegreePolicy::Groebner => da.cmp(&db),
                DegreePolicy::Paper => db.cmp(&da),
            };
        }
        match self.within {
            WithinDegree::Lex => cmp_lex(a, b),
            WithinDegree::RevLex => cmp_revlex(a, b),
            WithinDegree::Plugin(p) => (p.cmp)(a, b),
        }
    }
}

/// Lex within equal degree: at the first variable where the exponents
/// differ, the larger exponent wins.
fn cmp_lex(a: &Monomial, b: &Monomial) -> Ordering {
    let (xs, ys) = (a.exponents(), b.exponents());
    let (mut i, mut j) = (0, 0);
    loop {
        match (xs.get(i), ys.get(j)) {
            (None, None) => return Ordering::Equal,
            // a has run out: b still has exponents on later variables; the
            // first difference is a variable where b is positive and a zero
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => {
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                    i += 1;
                    j += 1;
                }
            },
        }
    }
}

/// Revlex within equal degree: at the last variable where the exponents
/// differ, the smaller exponent wins.
fn cmp_revlex(a: &Monomial, b: &Monomial) -> Ordering {
    let (xs, ys) = (a.exponents(), b.exponents());
    let (mut i, mut j) = (xs.len() as isize - 1, ys.len() as isize - 1);
    loop {
        match (
            if i >= 0 { Some(xs[i as usize]) } else { None },
            if j >= 0 { Some(ys[j as usize]) } else { None },
        ) {
            (None, None) => return Ordering::Equal,
            // b still has a positive exponent on its trailing variable while
            // a is zero there: a is revlex-larger
            (None, Some(_)) => return Ordering::Greater,
            (Some(_), None) => return Ordering::Less,
            (Some((va, ea)), Some((vb, eb))) => match va.cmp(&vb) {
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => {
                    if ea != eb {
                        return eb.cmp(&ea);
                    }
                    i -= 1;
                    j -= 1;
                }
            },
        }
    }
}

/// Canonical generator comparison: degree ascending, lex-descending within a
/// degree (the sorted list reads largest-first in the `Paper` lex order).
pub fn canonical_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    TermOrder::lex().compare(b, a)
}

/// All monomials of the given degree in variables `x_1 .. x_n`.
pub fn monomials_of_degree(n: u32, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(v: u32, n: u32, left: u32, current: &mut Vec<(u32, u32)>, out: &mut Vec<Monomial>) {
        if left == 0 {
            out.push(Monomial::from_exponents(current.iter().copied()));
            return;
        }
        if v > n {
            return;
        }
        for e in (0..=left).rev() {
            if e > 0 {
                current.push((v, e));
            }
            rec(v + 1, n, left - e, current, out);
            if e > 0 {
                current.pop();
            }
        }
    }
    rec(1, n, d, &mut current, &mut out);
    out
}

/// All squarefree monomials of the given degree in variables `x_1 .. x_n`.
pub fn squarefree_monomials_of_degree(n: u32, d: u32) -> Vec<Monomial> {
    use itertools::Itertools;
    (1..=n)
        .combinations(d as usize)
        .map(Monomial::squarefree)
        .collect()
}

/// Spot check that `m > m'` implies `phi(m) > phi(m')` on all equal-degree
/// pairs of degree at most 4 in 6 variables.
pub fn phi_compatible_on_low_degrees(ord: &TermOrder) -> bool {
    for d in 1..=4 {
        let ms = monomials_of_degree(6, d);
        for a in &ms {
            for b in &ms {
                if ord.compare(a, b) != ord.compare(&a.phi(), &b.phi()) {
                    return false;
                }
            }
        }
    }
    true
}

/// Spot check multiplicativity, `m > m'` implies `u m > u m'`, on low degrees.
pub fn multiplicative_on_low_degrees(ord: &TermOrder) -> bool {
    for d in 1..=3 {
        let ms = monomials_of_degree(5, d);
        let us: Vec<Monomial> = (1..=2).flat_map(|e| monomials_of_degree(5, e)).collect();
        for a in &ms {
            for b in &ms {
                let c = ord.compare(a, b);
                for u in &us {
                    if ord.compare(&a.mul(u), &b.mul(u)) != c {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[derive(Serialize, Deserialize)]
struct IdealRepr {
    generators: Vec<String>,
}

/// A monomial ideal held by its canonical minimal generating set: a
/// divisibility antichain sorted degree-ascending, lex-descending within a
/// degree. The zero ideal has no generators; the unit ideal is excluded.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IdealRepr", into = "IdealRepr")]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
}

impl TryFrom<IdealRepr> for MonomialIdeal {
    type Error = Error;
    fn try_from(repr: IdealRepr) -> Result<Self> {
        let gens = repr
            .generators
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<Monomial>>>()?;
        MonomialIdeal::minimalize(gens)
    }
}

impl From<MonomialIdeal> for IdealRepr {
    fn from(i: MonomialIdeal) -> Self {
        IdealRepr {
            generators: i.gens.iter().map(Monomial::to_string).collect(),
        }
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "<0>");
        }
        write!(f, "<")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

impl MonomialIdeal {
    pub fn zero() -> Self {
        MonomialIdeal { gens: Vec::new() }
    }

    /// Prunes to the divisibility antichain and sorts canonically. Rejects
    /// the unit monomial.
    pub fn minimalize(gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut gens: Vec<Monomial> = gens.into_iter().collect();
        if gens.iter().any(Monomial::is_unit) {
            return Err(Error::UnitIdeal);
        }
        gens.sort();
        gens.dedup();
        let minimal: Vec<Monomial> = gens
            .iter()
            .filter(|m| !gens.iter().any(|d| *m != d && d.divides(m)))
            .cloned()
            .collect();
        let mut gens = minimal;
        gens.sort_by(canonical_cmp);
        Ok(MonomialIdeal { gens })
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Ideal membership: divisibility by some generator.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn gens_of_degree(&self, d: u32) -> impl Iterator<Item = &Monomial> {
        self.gens.iter().filter(move |g| g.degree() == d)
    }

    /// Generators of degree at most `d`, in canonical order.
    pub fn prefix(&self, d: u32) -> Vec<Monomial> {
        self.gens
            .iter()
            .filter(|g| g.degree() <= d)
            .cloned()
            .collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Largest variable index appearing in any generator; 0 for the zero ideal.
    pub fn max_support(&self) -> u32 {
        self.gens.iter().map(Monomial::max_var).max().unwrap_or(0)
    }

    /// Maximal degree of a minimal generator.
    pub fn regularity(&self) -> Result<u32> {
        self.gens
            .iter()
            .map(Monomial::degree)
            .max()
            .ok_or(Error::ZeroIdeal)
    }

    /// Strong stability: every exchange `x_i m / x_j` (for `i < j`, `x_j | m`)
    /// of every generator stays in the ideal.
    pub fn is_strongly_stable(&self) -> bool {
        self.gens.iter().all(|m| {
            m.support().all(|j| {
                (1..j).all(|i| self.contains(&m.exchange(i, j)))
            })
        })
    }

    /// Squarefree strong stability: exchanges restricted to `x_i` not already
    /// dividing the generator. Errors when a generator is not squarefree.
    pub fn is_sq_strongly_stable(&self) -> Result<bool> {
        if let Some(bad) = self.gens.iter().find(|g| !g.is_squarefree()) {
            return Err(Error::NotSquarefree(bad.to_string()));
        }
        Ok(self.gens.iter().all(|m| {
            m.support().all(|j| {
                (1..j)
                    .filter(|&i| m.exponent_of(i) == 0)
                    .all(|i| self.contains(&m.exchange(i, j)))
            })
        }))
    }

    fn check_support(&self, n: u32) -> Result<()> {
        for g in &self.gens {
            if g.max_var() > n {
                return Err(Error::SupportExceedsUniverse(g.to_string(), n));
            }
        }
        Ok(())
    }
}

/// Compares two monomial ideals by the largest monomial in the symmetric
/// difference of their generator sets; ties only on identical ideals. The
/// degree policy is forced to the ideal-comparison convention.
pub fn ideal_compare(a: &MonomialIdeal, b: &MonomialIdeal, ord: &TermOrder) -> Ordering {
    let ord = TermOrder { policy: DegreePolicy::Paper, ..*ord };
    let ga: BTreeSet<&Monomial> = a.generators().iter().collect();
    let gb: BTreeSet<&Monomial> = b.generators().iter().collect();
    let largest = ga
        .symmetric_difference(&gb)
        .max_by(|x, y| ord.compare(x, y));
    match largest {
        None => Ordering::Equal,
        Some(m) => {
            if ga.contains(*m) {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        }
    }
}

/// Dimension of the degree-`d` component of `I ∩ k[x_1..x_n]`: the number of
/// degree-`d` monomials in `[n]` divisible by some generator. Uses
/// inclusion-exclusion over generator lcms up to 20 generators, complement
/// counting through the Hilbert numerator beyond that.
pub fn dim_degree(ideal: &MonomialIdeal, n: u32, d: u32) -> Result<u64> {
    ideal.check_support(n)?;
    if ideal.is_zero() {
        return Ok(0);
    }
    if ideal.gens.len() <= 20 {
        let mut acc: i64 = 0;
        inclusion_exclusion(&ideal.gens, 0, &Monomial::unit(), 1, n, d, &mut acc);
        Ok(acc as u64)
    } else {
        let total = binom(n as i64 - 1 + d as i64, n as i64 - 1);
        let ns = numerator_quotient(&ideal.gens, &mut HashMap::new());
        let quotient_dim: i64 = ns
            .iter()
            .enumerate()
            .map(|(j, &c)| c * binom(n as i64 - 1 + d as i64 - j as i64, n as i64 - 1))
            .sum();
        Ok((total - quotient_dim) as u64)
    }
}

fn inclusion_exclusion(
    gens: &[Monomial],
    from: usize,
    lcm: &Monomial,
    sign: i64,
    n: u32,
    d: u32,
    acc: &mut i64,
) {
    for idx in from..gens.len() {
        let l = lcm.lcm(&gens[idx]);
        let deg = l.degree();
        if deg > d {
            // the lcm only grows along this branch
            continue;
        }
        *acc += sign * binom(n as i64 - 1 + (d - deg) as i64, n as i64 - 1);
        inclusion_exclusion(gens, idx + 1, &l, -sign, n, d, acc);
    }
}

/// Coefficients (through degree `dmax`) of `(1-x)^n Hilb(I ∩ k[x_1..x_n])`.
/// Computed as `1 - N` where `N` is the quotient-ring numerator from the
/// pivot-variable recursion; the result does not depend on `n` as long as
/// the supports fit.
pub fn hilbert_numerator(ideal: &MonomialIdeal, n: u32, dmax: u32) -> Result<Vec<i64>> {
    ideal.check_support(n)?;
    let ns = numerator_quotient(&ideal.gens, &mut HashMap::new());
    let mut out = vec![0i64; dmax as usize + 1];
    out[0] = 1;
    for (j, &c) in ns.iter().enumerate() {
        if j <= dmax as usize {
            out[j] -= c;
        }
    }
    Ok(out)
}

/// Numerator of the quotient ring: `(1-x)^n Hilb(S/I)` as an exact integer
/// polynomial, via the colon/sum pivot recursion `N(I) = N(I + x) + x N(I : x)`.
fn numerator_quotient(gens: &[Monomial], memo: &mut HashMap<Vec<Monomial>, Vec<i64>>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if let Some(hit) = memo.get(gens) {
        return hit.clone();
    }
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, g)| gens[i + 1..].iter().all(|h| g.coprime(h)));
    let result = if pairwise_coprime {
        let mut poly = vec![1i64];
        for g in gens {
            let d = g.degree() as usize;
            let mut next = vec![0i64; poly.len() + d];
            for (i, &c) in poly.iter().enumerate() {
                next[i] += c;
                next[i + d] -= c;
            }
            poly = next;
        }
        poly
    } else {
        let pivot = most_shared_variable(gens);
        let colon: Vec<Monomial> = gens
            .iter()
            .map(|g| {
                if g.exponent_of(pivot) > 0 {
                    g.try_div(&Monomial::var(pivot)).expect("divisible")
                } else {
                    g.clone()
                }
            })
            .collect();
        let colon = MonomialIdeal::minimalize(colon).expect("no unit: pivot divides a non-unit");
        let plus: Vec<Monomial> = gens
            .iter()
            .filter(|g| g.exponent_of(pivot) == 0)
            .cloned()
            .chain([Monomial::var(pivot)])
            .collect();
        let plus = MonomialIdeal::minimalize(plus).expect("variables are not units");
        let np = numerator_quotient(&plus.gens, memo);
        let nc = numerator_quotient(&colon.gens, memo);
        let mut poly = vec![0i64; np.len().max(nc.len() + 1)];
        for (i, &c) in np.iter().enumerate() {
            poly[i] += c;
        }
        for (i, &c) in nc.iter().enumerate() {
            poly[i + 1] += c;
        }
        while poly.len() > 1 && *poly.last().unwrap() == 0 {
            poly.pop();
        }
        poly
    };
    memo.insert(gens.to_vec(), result.clone());
    result
}

fn most_shared_variable(gens: &[Monomial]) -> u32 {
    let mut counts: HashMap<u32, u32> = HashMap::new();
    for g in gens {
        for v in g.support() {
            *counts.entry(v).or_default() += 1;
        }
    }
    counts
        .into_iter()
        .max_by_key(|&(v, c)| (c, std::cmp::Reverse(v)))
        .map(|(v, _)| v)
        .expect("nonempty generators")
}

/// The squarefree ideal generated by the minimal nonfaces of the complex.
/// The void complex would need the unit ideal and is rejected.
pub fn stanley_reisner(complex: &SimplicialComplex) -> Result<MonomialIdeal> {
    if complex.is_void() {
        return Err(Error::UnitIdeal);
    }
    let n = complex.n();
    let mut gens = Vec::new();
    let universe: Vec<u32> = (1..=n).collect();
    for mask in 0u64..(1 << n) {
        let verts: Vec<u32> = universe
            .iter()
            .copied()
            .filter(|v| mask >> (v - 1) & 1 == 1)
            .collect();
        let face = Face::new(verts.clone()).expect("increasing by construction");
        if complex.contains(&face) {
            continue;
        }
        let minimal = verts.iter().all(|&v| complex.contains(&face.without(v)));
        if minimal {
            gens.push(Monomial::squarefree(verts));
        }
    }
    MonomialIdeal::minimalize(gens)
}

/// The complex on `[n]` whose faces are the squarefree monomials outside the
/// ideal. Inverse to [`stanley_reisner`] for fixed `n`.
pub fn complex_of(ideal: &MonomialIdeal, n: u32) -> Result<SimplicialComplex> {
    ideal.check_support(n)?;
    let masks: Vec<u64> = ideal
        .gens
        .iter()
        .map(|g| {
            if !g.is_squarefree() {
                return Err(Error::NotSquarefree(g.to_string()));
            }
            Ok(g.support().fold(0u64, |m, v| m | 1 << (v - 1)))
        })
        .collect::<Result<_>>()?;
    let is_face = |mask: u64| masks.iter().all(|&g| g & mask != g);
    let mut facets = Vec::new();
    for mask in 0u64..(1 << n) {
        if !is_face(mask) {
            continue;
        }
        let maximal = (0..n).all(|b| mask >> b & 1 == 1 || !is_face(mask | 1 << b));
        if maximal {
            facets.push(Face::new(
                (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect(),
            )?);
        }
    }
    SimplicialComplex::from_facets(n, facets)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn m(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    pub(crate) fn ideal(gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::minimalize(gens.iter().map(|s| m(s))).unwrap()
    }

    #[test]
    fn parse_display_round_trip() {
        for s in ["1", "x1", "x1*x4^2", "x2^3", "x1*x2*x3"] {
            assert_eq!(m(s).to_string(), s);
        }
        assert_eq!(m("x4^2*x1").to_string(), "x1*x4^2");
        assert!("x0".parse::<Monomial>().is_err());
        assert!("y1".parse::<Monomial>().is_err());
        assert!("x1^0".parse::<Monomial>().is_err());
    }

    #[test]
    fn order_examples() {
        let lex = TermOrder::lex();
        let rl = TermOrder::revlex();
        assert_eq!(lex.compare(&m("x1*x3"), &m("x2^2")), Ordering::Greater);
        assert_eq!(rl.compare(&m("x2^2"), &m("x1*x3")), Ordering::Greater);
        // lower degree is more expensive under the Paper policy
        assert_eq!(lex.compare(&m("x1"), &m("x1*x2*x3")), Ordering::Greater);
        // and cheaper under the Groebner policy
        assert_eq!(
            lex.groebner().compare(&m("x1"), &m("x1*x2*x3")),
            Ordering::Less
        );
        assert_eq!(rl.compare(&m("x2*x3"), &m("x1*x4")), Ordering::Greater);
        assert_eq!(lex.compare(&m("x1*x4"), &m("x2*x3")), Ordering::Greater);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(m("x1^3").phi(), m("x1*x2*x3"));
        assert_eq!(m("x1*x2").phi(), m("x1*x3"));
        assert_eq!(m("x1*x2").phi_inv().unwrap(), m("x1^2"));
        assert_eq!(m("x2^3").phi(), m("x2*x3*x4"));
        assert!(m("x1^2").phi_inv().is_err());
    }

    #[test]
    fn phi_round_trip_low_degrees() {
        for d in 0..=4 {
            for mo in monomials_of_degree(6, d) {
                let sq = mo.phi();
                assert!(sq.is_squarefree());
                assert_eq!(sq.degree(), mo.degree());
                assert_eq!(sq.phi_inv().unwrap(), mo);
            }
        }
    }

    #[test]
    fn phi_preserves_lex_and_revlex() {
        assert!(phi_compatible_on_low_degrees(&TermOrder::lex()));
        assert!(phi_compatible_on_low_degrees(&TermOrder::revlex()));
        let block = TermOrder::plugin(plugin_order("x1block").unwrap());
        assert!(!phi_compatible_on_low_degrees(&block));
        assert!(multiplicative_on_low_degrees(&block));
        assert!(multiplicative_on_low_degrees(&TermOrder::lex()));
        assert!(multiplicative_on_low_degrees(&TermOrder::revlex()));
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(
            ideal(&["x1*x2", "x1*x2*x3", "x2*x3"]).generators(),
            ideal(&["x1*x2", "x2*x3"]).generators()
        );
        assert!(MonomialIdeal::minimalize([]).unwrap().is_zero());
        assert_eq!(ideal(&["x1", "x1^2"]), ideal(&["x1"]));
        assert!(MonomialIdeal::minimalize([Monomial::unit()]).is_err());
    }

    #[test]
    fn canonical_generator_order() {
        let i = ideal(&["x2^3", "x1*x3", "x1^2", "x1*x2"]);
        let shown: Vec<String> = i.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(shown, vec!["x1^2", "x1*x2", "x1*x3", "x2^3"]);
    }

    #[test]
    fn strongly_stable_examples() {
        assert!(ideal(&["x1^2", "x1*x2", "x2^2"]).is_strongly_stable());
        assert!(!ideal(&["x2^2"]).is_strongly_stable());
        let sq = ideal(&["x1*x2", "x1*x3", "x2*x3"]);
        assert!(sq.is_sq_strongly_stable().unwrap());
        assert!(!ideal(&["x2*x3"]).is_sq_strongly_stable().unwrap());
        assert!(ideal(&["x1^2"]).is_sq_strongly_stable().is_err());
        // squarefree strongly stable but not strongly stable in the plain sense
        assert!(!sq.is_strongly_stable());
    }

    #[test]
    fn ideal_compare_examples() {
        let lex = TermOrder::lex();
        let a = ideal(&["x1^2", "x1*x2", "x1*x3", "x2^3"]);
        let b = ideal(&["x1^2", "x1*x2", "x2^2"]);
        assert_eq!(ideal_compare(&a, &b, &lex), Ordering::Greater);
        assert_eq!(ideal_compare(&a, &a, &lex), Ordering::Equal);
        assert_eq!(
            ideal_compare(&ideal(&["x1"]), &ideal(&["x2"]), &lex),
            Ordering::Greater
        );
    }

    #[test]
    fn regularity_examples() {
        assert_eq!(ideal(&["x1*x2", "x1*x3", "x2*x3"]).regularity().unwrap(), 2);
        assert_eq!(
            ideal(&["x1*x2", "x1*x3", "x1*x4*x5*x6*x7"]).regularity().unwrap(),
            5
        );
        assert_eq!(ideal(&["x1"]).regularity().unwrap(), 1);
        assert!(MonomialIdeal::zero().regularity().is_err());
    }

    #[test]
    fn dim_degree_examples() {
        let i = ideal(&["x1*x2", "x1*x3", "x2*x3"]);
        assert_eq!(dim_degree(&i, 3, 2).unwrap(), 3);
        assert_eq!(dim_degree(&i, 3, 3).unwrap(), 7);
        assert_eq!(dim_degree(&MonomialIdeal::zero(), 5, 3).unwrap(), 0);
        assert!(dim_degree(&i, 2, 2).is_err());
    }

    #[test]
    fn dim_degree_matches_brute_force() {
        let ideals = [
            ideal(&["x1*x2", "x1*x3", "x2*x3"]),
            ideal(&["x1^2", "x2^3", "x3*x4"]),
            ideal(&["x1*x2*x3", "x2^2", "x4^3"]),
            ideal(&["x1", "x2*x3^2"]),
        ];
        for i in &ideals {
            for n in 4..=5 {
                for d in 0..=6 {
                    let brute = monomials_of_degree(n, d)
                        .into_iter()
                        .filter(|mo| i.contains(mo))
                        .count() as u64;
                    assert_eq!(dim_degree(i, n, d).unwrap(), brute, "{i} n={n} d={d}");
                }
            }
        }
    }

    #[test]
    fn hilbert_numerator_examples() {
        let i = ideal(&["x1*x2", "x1*x3", "x2*x3"]);
        assert_eq!(hilbert_numerator(&i, 3, 4).unwrap(), vec![0, 0, 3, -2, 0]);
        assert_eq!(
            hilbert_numerator(&MonomialIdeal::zero(), 3, 3).unwrap(),
            vec![0, 0, 0, 0]
        );
        assert_eq!(hilbert_numerator(&ideal(&["x1"]), 1, 3).unwrap(), vec![0, 1, 0, 0]);
    }

    #[test]
    fn hilbert_numerator_is_universe_independent() {
        let i = ideal(&["x1*x2", "x1*x3", "x2*x3"]);
        assert_eq!(
            hilbert_numerator(&i, 3, 6).unwrap(),
            hilbert_numerator(&i, 5, 6).unwrap()
        );
    }

    #[test]
    fn stanley_reisner_examples() {
        use crate::simplex::SimplicialComplex;
        let three_points = SimplicialComplex::from_facets(
            3,
            (1..=3).map(|v| Face::new(vec![v]).unwrap()),
        )
        .unwrap();
        assert_eq!(
            stanley_reisner(&three_points).unwrap(),
            ideal(&["x1*x2", "x1*x3", "x2*x3"])
        );
        assert!(stanley_reisner(&SimplicialComplex::simplex(4)).unwrap().is_zero());
        assert!(stanley_reisner(&SimplicialComplex::void(3)).is_err());

        let i = ideal(&["x1*x2", "x1*x3", "x1*x4", "x2*x3*x4"]);
        let c = complex_of(&i, 4).unwrap();
        let facets: Vec<Vec<u32>> = c.facets().iter().map(|f| f.vertices().to_vec()).collect();
        assert_eq!(facets, vec![vec![1], vec![2, 3], vec![2, 4], vec![3, 4]]);
        assert_eq!(stanley_reisner(&c).unwrap(), i);
        assert!(complex_of(&ideal(&["x1^2"]), 2).is_err());
    }

    #[test]
    fn stanley_reisner_round_trip_on_shifted_complexes() {
        for c in crate::simplex::enumerate_shifted(4).unwrap() {
            if c.is_void() {
                continue;
            }
            let i = stanley_reisner(&c).unwrap();
            assert_eq!(complex_of(&i, 4).unwrap(), c);
            // shiftedness matches squarefree strong stability across the bridge
            assert_eq!(c.is_shifted(), i.is_sq_strongly_stable().unwrap());
        }
        for seed in 0..60 {
            let c = crate::simplex::random_complex(4, seed);
            if c.is_void() {
                continue;
            }
            let i = stanley_reisner(&c).unwrap();
            assert_eq!(c.is_shifted(), i.is_sq_strongly_stable().unwrap(), "{c}");
        }
    }

    #[test]
    fn ideal_json_round_trip() {
        let i = ideal(&["x2^3", "x1*x3", "x1^2", "x1*x2"]);
        let s = serde_json::to_string(&i).unwrap();
        assert_eq!(s, r#"{"generators":["x1^2","x1*x2","x1*x3","x2^3"]}"#);
        let back: MonomialIdeal = serde_json::from_str(&s).unwrap();
        assert_eq!(back, i);
    }
}
