//! Buchberger's algorithm over exact rationals, for homogeneous input.
//!
//! Pair selection follows the normal strategy (smallest lcm first), with the
//! coprime-leading-term criterion as the only pair pruning. Because inputs
//! are homogeneous and pairs are processed by increasing lcm degree, the
//! computation can be truncated at a degree bound: leading terms of degree
//! at most the bound are then final, which is what the degree-truncated
//! generic initial ideals rely on.
//!
//! Internally the reducers are primitive integer polynomials and every
//! reduction step cross-multiplies instead of dividing, stripping the
//! content as it goes; rationals only reappear when the final basis is made
//! monic. This is still exact arithmetic throughout, just without a gcd per
//! coefficient operation.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::One;
use rug::Integer;

use crate::error::{Error, Result};
use crate::monom::{DegreePolicy, Monomial, TermOrder};

use super::poly::Polynomial;

/// Tuning knobs for a Buchberger run.
#[derive(Clone, Copy, Debug, Default)]
pub struct BuchbergerOptions {
    /// Stop expanding S-pairs whose lcm degree exceeds the bound; the
    /// returned basis is then only trusted in degrees up to the bound.
    pub max_degree: Option<u32>,
    /// Abort with an error after this many head-reduction steps.
    pub budget: Option<u64>,
}

/// Primitive integer polynomial: terms sorted descending in the active
/// order, coprime coefficients, positive lead. Coefficients are GMP
/// integers; the content gcds and cross-multiplications dominate the
/// runtime on deep eliminations.
#[derive(Clone, Debug)]
struct IntPoly {
    terms: Vec<(Monomial, Integer)>,
}

fn to_rug(b: &BigInt) -> Integer {
    let (sign, bytes) = b.to_bytes_le();
    let mut i = Integer::from_digits(&bytes, rug::integer::Order::Lsf);
    if sign == num_bigint::Sign::Minus {
        i = -i;
    }
    i
}

fn from_rug(i: &Integer) -> BigInt {
    let mut bytes = vec![0u8; i.significant_digits::<u8>()];
    i.write_digits(&mut bytes, rug::integer::Order::Lsf);
    let sign = match i.cmp0() {
        std::cmp::Ordering::Less => num_bigint::Sign::Minus,
        std::cmp::Ordering::Equal => num_bigint::Sign::NoSign,
        std::cmp::Ordering::Greater => num_bigint::Sign::Plus,
    };
    BigInt::from_bytes_le(sign, &bytes)
}

impl IntPoly {
    fn lead(&self) -> &(Monomial, Integer) {
        &self.terms[0]
    }

    fn from_polynomial(p: &Polynomial, ord: &TermOrder) -> Self {
        let mut den_lcm = BigInt::one();
        for (_, c) in p.terms() {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut terms: Vec<(Monomial, Integer)> = p
            .terms()
            .map(|(m, c)| {
                let scaled = c * BigRational::from_integer(den_lcm.clone());
                debug_assert!(scaled.denom().is_one());
                (m.clone(), to_rug(scaled.numer()))
            })
            .collect();
        terms.sort_by(|a, b| ord.compare(&b.0, &a.0));
        let mut out = IntPoly { terms };
        out.strip_content();
        out
    }

    /// Monic rational polynomial.
    fn to_polynomial(&self) -> Polynomial {
        let Some((_, lc)) = self.terms.first() else {
            return Polynomial::zero();
        };
        let inv = BigRational::new(BigInt::one(), from_rug(lc));
        Polynomial::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (m.clone(), BigRational::from_integer(from_rug(c)) * &inv)),
        )
    }

    /// Divides out the coefficient gcd and makes the lead positive.
    fn strip_content(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let mut g = Integer::new();
        for (_, c) in &self.terms {
            g.gcd_mut(c);
            if g == 1u32 {
                break;
            }
        }
        if self.terms[0].1.cmp0() == std::cmp::Ordering::Less {
            g = -g;
        }
        if g != 1u32 {
            for (_, c) in &mut self.terms {
                c.div_exact_mut(&g);
            }
        }
    }
}

/// One cross-multiplied reduction step: `g_lc * work - w_lc * (q * g)`.
/// The heads cancel by construction and are skipped.
fn reduce_step(
    work: &[(Monomial, Integer)],
    g: &[(Monomial, Integer)],
    q: &Monomial,
    ord: &TermOrder,
) -> Vec<(Monomial, Integer)> {
    let g_lc = &g[0].1;
    let w_lc = &work[0].1;
    let mut out = Vec::with_capacity(work.len() + g.len());
    let (mut i, mut j) = (1, 1);
    while i < work.len() && j < g.len() {
        let gm = g[j].0.mul(q);
        match ord.compare(&work[i].0, &gm) {
            std::cmp::Ordering::Greater => {
                out.push((work[i].0.clone(), Integer::from(&work[i].1 * g_lc)));
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push((gm, -Integer::from(w_lc * &g[j].1)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = Integer::from(&work[i].1 * g_lc) - Integer::from(w_lc * &g[j].1);
                if c.cmp0() != std::cmp::Ordering::Equal {
                    out.push((gm, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    for t in &work[i..] {
        out.push((t.0.clone(), Integer::from(&t.1 * g_lc)));
    }
    for t in &g[j..] {
        out.push((t.0.mul(q), -Integer::from(w_lc * &t.1)));
    }
    out
}

struct Engine<'a> {
    ord: TermOrder,
    opts: &'a BuchbergerOptions,
    steps: u64,
}

impl Engine<'_> {
    fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if let Some(budget) = self.opts.budget {
            if self.steps > budget {
                return Err(Error::BudgetExceeded(format!("{budget} head reductions")));
            }
        }
        Ok(())
    }

    /// Normal form. With `full` every term of the remainder is irreducible;
    /// otherwise reduction stops at the first irreducible head, which is all
    /// the main loop needs and much cheaper on dense tails. Content is
    /// stripped only after the cross-multiplication scale has accumulated a
    /// few thousand bits; per-step gcd scans would dominate the runtime.
    fn normal_form(&mut self, f: IntPoly, basis: &[IntPoly], full: bool) -> Result<IntPoly> {
        let mut work = f;
        let mut done: Vec<(Monomial, Integer)> = Vec::new();
        let mut pending_bits: u64 = 0;
        'heads: while let Some((lm, _)) = work.terms.first() {
            self.tick()?;
            let mut reducer: Option<(&IntPoly, Monomial)> = None;
            for g in basis {
                if let Some(q) = lm.try_div(&g.lead().0) {
                    let better = match &reducer {
                        None => true,
                        Some((best, _)) => {
                            (g.terms.len(), g.lead().1.significant_bits())
                                < (best.terms.len(), best.lead().1.significant_bits())
                        }
                    };
                    if better {
                        reducer = Some((g, q));
                    }
                }
            }
            match reducer {
                Some((g, q)) => {
                    pending_bits += g.lead().1.significant_bits() as u64;
                    work.terms = reduce_step(&work.terms, &g.terms, &q, &self.ord);
                    if pending_bits >= 4096 {
                        work.strip_content();
                        pending_bits = 0;
                    }
                    continue 'heads;
                }
                None => {
                    if !full {
                        done.extend(work.terms.drain(..));
                        break;
                    }
                    done.push(work.terms.remove(0));
                }
            }
        }
        let mut out = IntPoly { terms: done };
        out.strip_content();
        Ok(out)
    }

    /// S-polynomial up to a positive scalar: pre-scale `f` by `(lcm/fm) gc`
    /// so the heads cancel, then one cross-multiplied step against `g`.
    fn s_poly(&self, f: &IntPoly, g: &IntPoly) -> IntPoly {
        let (fm, _) = f.lead();
        let (gm, gc) = g.lead();
        let lcm = fm.lcm(gm);
        let qf = lcm.try_div(fm).expect("lcm divisible by lead");
        let qg = lcm.try_div(gm).expect("lcm divisible by lead");
        let scaled: Vec<(Monomial, Integer)> = f
            .terms
            .iter()
            .map(|(m, c)| (m.mul(&qf), Integer::from(c * gc)))
            .collect();
        let terms = reduce_step(&scaled, &g.terms, &qg, &self.ord);
        let mut s = IntPoly { terms };
        s.strip_content();
        s
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    degree: u32,
}

/// Reduced Gröbner basis of homogeneous generators: pairwise fully reduced,
/// monic, unique for the ideal and order, listed with leading monomials
/// descending. Zero inputs are dropped; non-homogeneous input is rejected
/// because the ideal-comparison degree convention is not a well-order, so
/// the engine forces the Gröbner policy and relies on homogeneity to make
/// the restriction harmless.
pub fn buchberger(gens: &[Polynomial], ord: &TermOrder) -> Result<Vec<Polynomial>> {
    buchberger_with(gens, ord, &BuchbergerOptions::default())
}

pub fn buchberger_with(
    gens: &[Polynomial],
    ord: &TermOrder,
    opts: &BuchbergerOptions,
) -> Result<Vec<Polynomial>> {
    let ord = ord.groebner();
    let degree_cap = opts.max_degree;
    for g in gens {
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
    }
    let mut input: Vec<IntPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| IntPoly::from_polynomial(g, &ord))
        .collect();
    // deterministic start: by degree, then lead order
    input.sort_by(|a, b| {
        let (am, bm) = (&a.lead().0, &b.lead().0);
        am.degree()
            .cmp(&bm.degree())
            .then_with(|| ord.compare(am, bm))
    });

    let mut engine = Engine { ord, opts, steps: 0 };
    let mut basis: Vec<IntPoly> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    for f in input {
        let r = engine.normal_form(f, &basis, false)?;
        if !r.terms.is_empty() {
            push_with_pairs(r, &mut basis, &mut pairs, degree_cap);
        }
    }

    let trace = std::env::var_os("ASHIFT_GB_TRACE").is_some();
    let mut processed = 0u64;
    while let Some(at) = select_pair(&pairs, &engine.ord, opts.max_degree) {
        let pair = pairs.swap_remove(at);
        if trace {
            processed += 1;
            if processed % 50 == 0 {
                let maxbits = basis
                    .iter()
                    .flat_map(|b| b.terms.iter().map(|(_, c)| c.significant_bits()))
                    .max()
                    .unwrap_or(0);
                let maxterms = basis.iter().map(|b| b.terms.len()).max().unwrap_or(0);
                eprintln!(
                    "gb: pair#{processed} deg={} pairs={} basis={} steps={} maxbits={maxbits} maxterms={maxterms}",
                    pair.degree, pairs.len(), basis.len(), engine.steps
                );
            }
        }
        if basis[pair.i].lead().0.coprime(&basis[pair.j].lead().0) {
            continue;
        }
        let s = engine.s_poly(&basis[pair.i], &basis[pair.j]);
        let r = engine.normal_form(s, &basis, false)?;
        if !r.terms.is_empty() {
            push_with_pairs(r, &mut basis, &mut pairs, degree_cap);
        }
    }

    Ok(reduce_basis(&mut engine, basis)?
        .into_iter()
        .map(|p| p.to_polynomial())
        .collect())
}

/// Installs a new basis element, updating the pair set with the
/// Gebauer-Möller rules: new pairs whose lcm is properly divided by another
/// new pair's lcm are dropped, equal-lcm classes collapse to one pair (or to
/// none when some member has coprime leads), and old pairs strictly
/// refinable through the new lead are dropped. Cross-validated against the
/// degreewise Gaussian oracle and the Hilbert certificate.
fn push_with_pairs(
    p: IntPoly,
    basis: &mut Vec<IntPoly>,
    pairs: &mut Vec<Pair>,
    degree_cap: Option<u32>,
) {
    let new = basis.len();
    let new_lead = &p.lead().0;
    let lcms: Vec<Monomial> = basis
        .iter()
        .map(|g| g.lead().0.lcm(new_lead))
        .collect();

    // old pairs refinable through the new lead are superfluous
    pairs.retain(|pr| {
        !new_lead.divides(&pr.lcm) || lcms[pr.i] == pr.lcm || lcms[pr.j] == pr.lcm
    });

    let mut keep: Vec<usize> = Vec::new();
    'cand: for i in 0..basis.len() {
        for j in 0..basis.len() {
            if j != i && lcms[j].divides(&lcms[i]) && lcms[j] != lcms[i] {
                continue 'cand;
            }
        }
        keep.push(i);
    }
    // one representative per lcm class; none when a member has coprime leads
    let mut by_class: Vec<(Monomial, Option<usize>)> = Vec::new();
    for &i in &keep {
        let coprime = basis[i].lead().0.coprime(new_lead);
        match by_class.iter_mut().find(|(l, _)| *l == lcms[i]) {
            Some((_, rep)) => {
                if coprime {
                    *rep = None;
                }
            }
            None => by_class.push((lcms[i].clone(), if coprime { None } else { Some(i) })),
        }
    }
    for (lcm, rep) in by_class {
        let degree = lcm.degree();
        if degree_cap.is_some_and(|cap| degree > cap) {
            continue;
        }
        if let Some(i) = rep {
            pairs.push(Pair { i, j: new, degree, lcm });
        }
    }
    basis.push(p);
}

/// Normal strategy: the pair with the smallest lcm (degree first, then the
/// order); ties broken by indices for determinism. Pairs beyond the degree
/// bound are never selected.
fn select_pair(pairs: &[Pair], ord: &TermOrder, max_degree: Option<u32>) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (idx, p) in pairs.iter().enumerate() {
        if max_degree.is_some_and(|d| p.degree > d) {
            continue;
        }
        best = match best {
            None => Some(idx),
            Some(b) => {
                let q = &pairs[b];
                let ordering = p
                    .degree
                    .cmp(&q.degree)
                    .then_with(|| ord.compare(&p.lcm, &q.lcm))
                    .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)));
                if ordering == std::cmp::Ordering::Less {
                    Some(idx)
                } else {
                    Some(b)
                }
            }
        };
    }
    best
}

/// Drops basis elements whose lead is divisible by another lead, then fully
/// tail-reduces each survivor and makes it monic.
fn reduce_basis(engine: &mut Engine, basis: Vec<IntPoly>) -> Result<Vec<IntPoly>> {
    let mut keep: Vec<IntPoly> = Vec::new();
    let mut sorted = basis;
    sorted.sort_by(|a, b| {
        let (am, bm) = (&a.lead().0, &b.lead().0);
        am.degree()
            .cmp(&bm.degree())
            .then_with(|| engine.ord.compare(am, bm))
    });
    for p in sorted {
        if !keep.iter().any(|k| k.lead().0.divides(&p.lead().0)) {
            keep.push(p);
        }
    }
    keep.reverse();
    let mut out = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<IntPoly> = keep
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, p)| p.clone())
            .collect();
        let r = engine.normal_form(keep[i].clone(), &others, true)?;
        debug_assert_eq!(r.lead().0, keep[i].lead().0);
        out.push(r);
    }
    Ok(out)
}

/// Leading monomials of a reduced Gröbner basis, minimalized.
pub fn initial_ideal(
    gb: &[Polynomial],
    ord: &TermOrder,
) -> Result<crate::monom::MonomialIdeal> {
    let ord = TermOrder { policy: DegreePolicy::Groebner, ..*ord };
    crate::monom::MonomialIdeal::minimalize(
        gb.iter()
            .filter_map(|p| p.leading(&ord).map(|(m, _)| m.clone())),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monom::tests::m;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn poly(terms: &[(&str, i64)]) -> Polynomial {
        Polynomial::from_terms(terms.iter().map(|&(s, c)| (m(s), q(c))))
    }

    #[test]
    fn monomial_input_is_its_own_basis() {
        let gens = vec![poly(&[("x1*x2", 1)]), poly(&[("x1*x2*x3", 2)]), poly(&[("x2*x3", 5)])];
        let gb = buchberger(&gens, &TermOrder::lex()).unwrap();
        let leads: Vec<String> = gb.iter().map(|p| p.to_string()).collect();
        assert_eq!(leads, vec!["x1*x2", "x2*x3"]);
    }

    #[test]
    fn linear_elimination() {
        let gens = vec![poly(&[("x1", 1), ("x2", 1)]), poly(&[("x1", 1), ("x2", -1)])];
        let gb = buchberger(&gens, &TermOrder::lex()).unwrap();
        let shown: Vec<String> = gb.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, vec!["x1", "x2"]);
    }

    #[test]
    fn rejects_inhomogeneous_input() {
        let gens = vec![poly(&[("x1", 1), ("x1*x2", 1)])];
        assert!(matches!(
            buchberger(&gens, &TermOrder::lex()),
            Err(Error::NotHomogeneous)
        ));
    }

    #[test]
    fn classic_two_generator_example() {
        let gens = vec![poly(&[("x1^2", 1), ("x2*x3", 1)]), poly(&[("x2^2", 1)])];
        let gb = buchberger(&gens, &TermOrder::lex()).unwrap();
        let init = initial_ideal(&gb, &TermOrder::lex()).unwrap();
        assert!(init.contains(&m("x1^2")));
        assert!(init.contains(&m("x2^2")));
        // Groebner property spot check: S-polynomials of the output reduce to zero
        let ord = TermOrder::lex().groebner();
        let opts = BuchbergerOptions::default();
        let mut engine = Engine { ord, opts: &opts, steps: 0 };
        let basis: Vec<IntPoly> = gb.iter().map(|p| IntPoly::from_polynomial(p, &ord)).collect();
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                let s = engine.s_poly(&basis[i], &basis[j]);
                let r = engine.normal_form(s, &basis, true).unwrap();
                assert!(r.terms.is_empty(), "S({i},{j}) does not reduce to zero");
            }
        }
    }

    #[test]
    fn output_is_reduced_and_monic() {
        let gens = vec![
            poly(&[("x1^2", 2), ("x1*x2", 4)]),
            poly(&[("x2^2", 3), ("x1*x2", 3)]),
        ];
        let gb = buchberger(&gens, &TermOrder::lex()).unwrap();
        let init = initial_ideal(&gb, &TermOrder::lex()).unwrap();
        for p in &gb {
            let (lm, lc) = p.leading(&TermOrder::lex().groebner()).unwrap();
            assert!(lc.is_one());
            for (mm, _) in p.terms() {
                if mm != lm {
                    // no term of a reduced basis element is divisible by any lead
                    assert!(!init.contains(mm), "unreduced tail term {mm} in {p}");
                }
            }
        }
    }

    #[test]
    fn budget_is_honored() {
        let gens = vec![poly(&[("x1^2", 1), ("x2*x3", 1)]), poly(&[("x2^2", 1)])];
        let opts = BuchbergerOptions { max_degree: None, budget: Some(1) };
        assert!(matches!(
            buchberger_with(&gens, &TermOrder::lex(), &opts),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn determinism() {
        let gens = vec![
            poly(&[("x1*x2", 3), ("x2^2", -2), ("x1*x3", 1)]),
            poly(&[("x2*x3", 7), ("x3^2", 5)]),
            poly(&[("x1^2", 1), ("x2*x3", -4)]),
        ];
        let a = buchberger(&gens, &TermOrder::revlex()).unwrap();
        let b = buchberger(&gens, &TermOrder::revlex()).unwrap();
        assert_eq!(a, b);
    }
}
