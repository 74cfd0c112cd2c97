//! Generic initial ideals over exact rationals.
//!
//! A seeded upper-triangular change of coordinates is applied to the
//! generators, a reduced Gröbner basis is computed with Buchberger's
//! algorithm, and the leading monomials give the candidate generic initial
//! ideal. Genericity is never assumed from a single run: independently
//! seeded trials must agree, the result must be strongly stable, and its
//! Hilbert function must match the input's. A degreewise Gaussian
//! elimination over the monomial basis serves as an independent oracle for
//! cross-checking; it never feeds the primary path.

mod buchberger;
mod poly;

pub use buchberger::{buchberger, buchberger_with, initial_ideal, BuchbergerOptions};
pub use poly::Polynomial;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;
use crate::monom::{dim_degree, monomials_of_degree, Monomial, MonomialIdeal, TermOrder};

/// Default coefficient range for generic entries. Kept small: genericity is
/// certified by agreeing trials plus the stability and Hilbert checks, never
/// assumed from entry size, and reduced-basis coefficient growth scales with
/// the entry bit length. The range squares on each disagreeing round.
pub const GENERIC_RANGE: i64 = 100;

/// A seeded generic upper-triangular matrix acting on variables by
/// `x_j -> sum_{i <= j} g_ij x_i`; all sampled entries are nonzero integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericMatrix {
    n: u32,
    seed: u64,
    entries: Vec<Vec<BigInt>>, // entries[j-1][i-1] for i <= j
}

impl GenericMatrix {
    /// Samples entries uniformly from the nonzero integers in
    /// `[-range, range]`, reproducibly from the seed.
    pub fn sample(n: u32, seed: u64, range: i64) -> GenericMatrix {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut entries = Vec::with_capacity(n as usize);
        for j in 1..=n {
            let mut col = Vec::with_capacity(j as usize);
            for _i in 1..=j {
                let mut v: i64 = 0;
                while v == 0 {
                    v = rng.gen_range(-range..=range);
                }
                col.push(BigInt::from(v));
            }
            entries.push(col);
        }
        GenericMatrix { n, seed, entries }
    }

    pub fn identity(n: u32) -> GenericMatrix {
        GenericMatrix {
            n,
            seed: 0,
            entries: (1..=n)
                .map(|j| {
                    (1..=j)
                        .map(|i| if i == j { BigInt::from(1) } else { BigInt::zero() })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// The image `g x_j` as a linear form.
    pub fn image_of_var(&self, j: u32) -> Polynomial {
        Polynomial::from_terms(self.entries[j as usize - 1].iter().enumerate().map(
            |(i, c)| {
                (
                    Monomial::var(i as u32 + 1),
                    BigRational::from_integer(c.clone()),
                )
            },
        ))
    }
}

/// Debug-dump serialization: exact entries as integer strings.
impl Serialize for GenericMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("GenericMatrix", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("seed", &self.seed)?;
        let rows: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|col| col.iter().map(|c| format!("{c}/1")).collect())
            .collect();
        st.serialize_field("columns", &rows)?;
        st.end()
    }
}

/// Substitutes `x_j -> g x_j` and expands exactly; degrees are preserved.
pub fn apply_change(g: &GenericMatrix, f: &Polynomial) -> Result<Polynomial> {
    if f.max_var() > g.n {
        return Err(Error::SupportExceedsUniverse(
            format!("{f}"),
            g.n,
        ));
    }
    let mut powers: HashMap<(u32, u32), Polynomial> = HashMap::new();
    let mut out = Polynomial::zero();
    for (m, c) in f.terms() {
        let mut term = Polynomial::constant(c.clone());
        for &(v, e) in m.exponents() {
            let p = power_of_image(g, v, e, &mut powers);
            term = term.mul(&p);
        }
        out = out.add(&term);
    }
    Ok(out)
}

fn power_of_image(
    g: &GenericMatrix,
    v: u32,
    e: u32,
    memo: &mut HashMap<(u32, u32), Polynomial>,
) -> Polynomial {
    if let Some(p) = memo.get(&(v, e)) {
        return p.clone();
    }
    let result = if e == 1 {
        g.image_of_var(v)
    } else {
        let lower = power_of_image(g, v, e - 1, memo);
        lower.mul(&g.image_of_var(v))
    };
    memo.insert((v, e), result.clone());
    result
}

/// Options for [`gin_with`].
#[derive(Clone, Copy, Debug)]
pub struct GinOptions {
    pub seed: u64,
    /// Independently seeded matrices that must agree; at least 2.
    pub trials: u32,
    /// Base coefficient range; squared after each disagreeing round.
    pub range: i64,
    /// Rounds of widening before giving up.
    pub rounds: u32,
    /// Compute only the generators of degree at most the bound.
    pub max_degree: Option<u32>,
    /// Work budget forwarded to Buchberger, per trial.
    pub budget: Option<u64>,
}

impl Default for GinOptions {
    fn default() -> Self {
        GinOptions {
            seed: 0x5eed_ba5e,
            trials: 2,
            range: GENERIC_RANGE,
            rounds: 3,
            max_degree: None,
            budget: None,
        }
    }
}

fn trial_seed(seed: u64, round: u32, trial: u32) -> u64 {
    // splitmix64 step keeps trials decorrelated but reproducible
    let mut z = seed
        .wrapping_add((round as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15))
        .wrapping_add((trial as u64 + 1).wrapping_mul(0xBF58_476D_1CE4_E5B9));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// The generic initial ideal of a monomial ideal inside `k[x_1..x_n]`,
/// certified: all trials agree, the result is strongly stable, and the
/// Hilbert function matches the input through `reg(result) + 1`.
pub fn gin(
    ideal: &MonomialIdeal,
    n: u32,
    ord: &TermOrder,
    seed: u64,
    trials: u32,
) -> Result<MonomialIdeal> {
    gin_with(
        ideal,
        n,
        ord,
        &GinOptions { seed, trials, ..GinOptions::default() },
    )
}

pub fn gin_with(
    ideal: &MonomialIdeal,
    n: u32,
    ord: &TermOrder,
    opts: &GinOptions,
) -> Result<MonomialIdeal> {
    if opts.trials < 2 {
        return Err(Error::InvalidArgument(
            "genericity needs at least two agreeing trials".into(),
        ));
    }
    if let Some(g) = ideal.generators().iter().find(|g| g.max_var() > n) {
        return Err(Error::SupportExceedsUniverse(g.to_string(), n));
    }
    if ideal.is_zero() {
        return Ok(MonomialIdeal::zero());
    }
    let mut range = opts.range;
    let mut last_err = Error::GinTrialsDisagree;
    for round in 0..opts.rounds {
        let results: Vec<Result<MonomialIdeal>> = (0..opts.trials)
            .into_par_iter()
            .map(|t| single_trial(ideal, n, ord, trial_seed(opts.seed, round, t), range, opts))
            .collect();
        let mut iter = results.into_iter();
        let first = iter.next().expect("at least two trials")?;
        let mut agree = true;
        for r in iter {
            if r? != first {
                agree = false;
                break;
            }
        }
        if agree {
            return certify(ideal, &first, n, opts);
        }
        last_err = Error::GinTrialsDisagree;
        range = range.saturating_mul(range);
    }
    Err(last_err)
}

fn single_trial(
    ideal: &MonomialIdeal,
    n: u32,
    ord: &TermOrder,
    seed: u64,
    range: i64,
    opts: &GinOptions,
) -> Result<MonomialIdeal> {
    let g = GenericMatrix::sample(n, seed, range);
    let polys: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .map(|m| apply_change(&g, &Polynomial::monomial(m.clone())))
        .collect::<Result<_>>()?;
    let gb = buchberger_with(
        &polys,
        ord,
        &BuchbergerOptions { max_degree: opts.max_degree, budget: opts.budget },
    )?;
    let init = initial_ideal(&gb, ord)?;
    match opts.max_degree {
        None => Ok(init),
        Some(d) => MonomialIdeal::minimalize(init.prefix(d)),
    }
}

fn certify(
    input: &MonomialIdeal,
    candidate: &MonomialIdeal,
    n: u32,
    opts: &GinOptions,
) -> Result<MonomialIdeal> {
    if !candidate.is_strongly_stable() {
        return Err(Error::StabilityCertificate);
    }
    let top = candidate.regularity()? + 1;
    let top = match opts.max_degree {
        Some(d) => top.min(d),
        None => top,
    };
    for e in 0..=top {
        if dim_degree(candidate, n, e)? != dim_degree(input, n, e)? {
            return Err(Error::HilbertCertificate(e));
        }
    }
    Ok(candidate.clone())
}

/// Degreewise Gaussian oracle: for each degree `e <= d`, applies the change
/// of coordinates to the monomial basis of the degree-`e` component, row
/// reduces exactly with columns sorted order-descending, and reads the pivot
/// columns. Returns every monomial of the generic initial ideal in degrees
/// up to `d` (not just minimal generators), deterministically ordered.
pub fn gin_truncated(
    ideal: &MonomialIdeal,
    n: u32,
    ord: &TermOrder,
    d: u32,
    seed: u64,
) -> Result<Vec<Monomial>> {
    if let Some(g) = ideal.generators().iter().find(|g| g.max_var() > n) {
        return Err(Error::SupportExceedsUniverse(g.to_string(), n));
    }
    let g = GenericMatrix::sample(n, trial_seed(seed, 0, 0), GENERIC_RANGE);
    let mut out = Vec::new();
    for e in 1..=d {
        let mut columns = monomials_of_degree(n, e);
        columns.sort_by(|a, b| ord.compare(b, a));
        let index: HashMap<&Monomial, usize> =
            columns.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let basis: Vec<&Monomial> = columns.iter().filter(|m| ideal.contains(m)).collect();
        if basis.is_empty() {
            continue;
        }
        let mut mat: Vec<Vec<BigRational>> = Vec::with_capacity(basis.len());
        for b in &basis {
            let image = apply_change(&g, &Polynomial::monomial((*b).clone()))?;
            let mut row = vec![BigRational::zero(); columns.len()];
            for (m, c) in image.terms() {
                row[index[m]] = c.clone();
            }
            mat.push(row);
        }
        let pivots = linalg::row_reduce(&mut mat);
        debug_assert_eq!(pivots.len(), basis.len());
        out.extend(pivots.into_iter().map(|p| columns[p].clone()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monom::tests::{ideal, m};
    use num_traits::One;

    #[test]
    fn identity_change_is_identity() {
        let g = GenericMatrix::identity(3);
        let f = Polynomial::monomial(m("x1*x2^2"));
        assert_eq!(apply_change(&g, &f).unwrap(), f);
    }

    #[test]
    fn shear_moves_x2() {
        // g x_2 = x_1 + x_2
        let mut g = GenericMatrix::identity(2);
        g.entries[1][0] = BigInt::one();
        let f = Polynomial::monomial(m("x2"));
        let image = apply_change(&g, &f).unwrap();
        assert_eq!(image.coefficient(&m("x1")), BigRational::one());
        assert_eq!(image.coefficient(&m("x2")), BigRational::one());
    }

    #[test]
    fn generic_image_of_x1x2_has_two_monomials() {
        let g = GenericMatrix::sample(2, 17, 100);
        let image = apply_change(&g, &Polynomial::monomial(m("x1*x2"))).unwrap();
        let mut support: Vec<&Monomial> = image.terms().map(|(mm, _)| mm).collect();
        support.sort_by(|a, b| TermOrder::lex().compare(b, a));
        assert_eq!(support, vec![&m("x1^2"), &m("x1*x2")]);
        assert!(apply_change(&g, &Polynomial::monomial(m("x3"))).is_err());
    }

    #[test]
    fn matrix_is_reproducible_and_nonzero() {
        let a = GenericMatrix::sample(4, 42, GENERIC_RANGE);
        let b = GenericMatrix::sample(4, 42, GENERIC_RANGE);
        assert_eq!(a, b);
        for col in &a.entries {
            for e in col {
                assert!(!e.is_zero());
            }
        }
        assert_ne!(a, GenericMatrix::sample(4, 43, GENERIC_RANGE));
    }

    #[test]
    fn gin_revlex_of_three_points() {
        let i = ideal(&["x1*x2", "x1*x3", "x2*x3"]);
        let got = gin(&i, 3, &TermOrder::revlex(), 7, 2).unwrap();
        assert_eq!(got, ideal(&["x1^2", "x1*x2", "x2^2"]));
    }

    #[test]
    fn gin_lex_of_three_points() {
        let i = ideal(&["x1*x2", "x1*x3", "x2*x3"]);
        let got = gin(&i, 3, &TermOrder::lex(), 7, 2).unwrap();
        assert_eq!(got, ideal(&["x1^2", "x1*x2", "x1*x3", "x2^3"]));
        // seed independence
        let again = gin(&i, 3, &TermOrder::lex(), 12345, 2).unwrap();
        assert_eq!(got, again);
    }

    #[test]
    fn gin_of_principal_and_zero() {
        assert_eq!(
            gin(&ideal(&["x1"]), 1, &TermOrder::revlex(), 3, 2).unwrap(),
            ideal(&["x1"])
        );
        assert!(gin(&MonomialIdeal::zero(), 3, &TermOrder::lex(), 3, 2)
            .unwrap()
            .is_zero());
        assert!(gin(&ideal(&["x1"]), 1, &TermOrder::lex(), 3, 1).is_err());
        assert!(gin(&ideal(&["x3"]), 2, &TermOrder::lex(), 3, 2).is_err());
    }

    #[test]
    fn gin_truncated_examples() {
        let i = ideal(&["x1*x2", "x1*x3", "x2*x3"]);
        let got = gin_truncated(&i, 3, &TermOrder::lex(), 2, 7).unwrap();
        assert_eq!(got, vec![m("x1^2"), m("x1*x2"), m("x1*x3")]);
        assert!(gin_truncated(&MonomialIdeal::zero(), 3, &TermOrder::lex(), 4, 7)
            .unwrap()
            .is_empty());
        let principal = gin_truncated(&ideal(&["x1"]), 1, &TermOrder::lex(), 3, 7).unwrap();
        assert_eq!(principal, vec![m("x1"), m("x1^2"), m("x1^3")]);
    }

    #[test]
    fn engines_cross_validate_on_three_points() {
        let i = ideal(&["x1*x2", "x1*x3", "x2*x3"]);
        for ord in [TermOrder::lex(), TermOrder::revlex()] {
            let full = gin(&i, 3, &ord, 99, 2).unwrap();
            let oracle = gin_truncated(&i, 3, &ord, 4, 99).unwrap();
            for e in 1..=4u32 {
                let mut from_full: Vec<Monomial> = monomials_of_degree(3, e)
                    .into_iter()
                    .filter(|mm| full.contains(mm))
                    .collect();
                from_full.sort_by(|a, b| ord.compare(b, a));
                let from_oracle: Vec<Monomial> = oracle
                    .iter()
                    .filter(|mm| mm.degree() == e)
                    .cloned()
                    .collect();
                assert_eq!(from_full, from_oracle, "degree {e} under {}", ord.name());
            }
        }
    }

    #[test]
    fn truncated_gin_prefix_matches_full() {
        let i = ideal(&["x1*x2", "x1*x3", "x2*x3"]);
        let full = gin(&i, 3, &TermOrder::lex(), 7, 2).unwrap();
        let opts = GinOptions { max_degree: Some(2), ..GinOptions::default() };
        let trunc = gin_with(&i, 3, &TermOrder::lex(), &opts).unwrap();
        assert_eq!(trunc.generators().to_vec(), full.prefix(2));
    }
}
