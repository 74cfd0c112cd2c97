//! The shifting operators and everything built on them: reverse
//! lexicographic shifting of complexes, lexicographic shifting of ideals,
//! orbits with stabilization certificates, the analytic limit USLI, the
//! Pardue witness monomial, the shifting-axioms verifier and the term-order
//! conjecture probe.
//!
//! Reverse lexicographic shifting of a squarefree strongly stable ideal has
//! a fast path: its revlex gin is just the inverse squarefree operator
//! applied to the generators. The Gröbner path stays available (and is what
//! the verification suites use) via [`ShiftOptions::force_groebner`].

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::betti::{b_sequence, k_from_b};
use crate::error::{Error, Result};
use crate::gin::{gin_with, GinOptions};
use crate::monom::{
    complex_of, ideal_compare, multiplicative_on_low_degrees, phi_compatible_on_low_degrees,
    squarefree_monomials_of_degree, stanley_reisner, Monomial, MonomialIdeal, TermOrder,
    WithinDegree,
};
use crate::simplex::{Face, SimplicialComplex};
use crate::usli::{is_usli, usli_from_k, UsliPrefix};

/// Knobs shared by the shifting operators.
#[derive(Clone, Copy, Debug)]
pub struct ShiftOptions {
    pub seed: u64,
    pub trials: u32,
    /// Bypass the squarefree-strongly-stable fast path and always run the
    /// Gröbner engine.
    pub force_groebner: bool,
    /// Work budget per Buchberger run.
    pub budget: Option<u64>,
}

impl Default for ShiftOptions {
    fn default() -> Self {
        ShiftOptions {
            seed: 0x5eed_ba5e,
            trials: 2,
            force_groebner: false,
            budget: None,
        }
    }
}

impl ShiftOptions {
    fn gin_options(&self) -> GinOptions {
        GinOptions {
            seed: self.seed,
            trials: self.trials,
            budget: self.budget,
            ..GinOptions::default()
        }
    }
}

/// The revlex gin of a squarefree ideal, taking the inverse-squarefree fast
/// path when the ideal is squarefree strongly stable and the options allow.
fn gin_rl(ideal: &MonomialIdeal, n: u32, opts: &ShiftOptions) -> Result<MonomialIdeal> {
    if !opts.force_groebner
        && ideal.is_squarefree()
        && ideal.is_sq_strongly_stable()?
    {
        let inv: Vec<Monomial> = ideal
            .generators()
            .iter()
            .map(Monomial::phi_inv)
            .collect::<Result<_>>()?;
        return MonomialIdeal::minimalize(inv);
    }
    gin_with(ideal, n, &TermOrder::revlex(), &opts.gin_options())
}

/// Reverse lexicographic shifting: the complex on the same vertex set whose
/// Stanley-Reisner ideal is generated by the squarefree images of the revlex
/// gin's generators. The image staying inside `[n]` is a theorem; a
/// violation signals a non-generic matrix or an engine bug and is an error.
pub fn delta_rl(complex: &SimplicialComplex) -> Result<SimplicialComplex> {
    delta_rl_opts(complex, &ShiftOptions::default())
}

pub fn delta_rl_opts(
    complex: &SimplicialComplex,
    opts: &ShiftOptions,
) -> Result<SimplicialComplex> {
    if complex.is_void() {
        return Ok(complex.clone());
    }
    let n = complex.n();
    let ideal = stanley_reisner(complex)?;
    let gin = gin_rl(&ideal, n, opts)?;
    let mut images = Vec::with_capacity(gin.generators().len());
    for m in gin.generators() {
        let img = m.phi();
        if img.max_var() > n {
            return Err(Error::PhiImageEscapes(m.to_string(), n));
        }
        images.push(img);
    }
    complex_of(&MonomialIdeal::minimalize(images)?, n)
}

/// Lexicographic shifting of a monomial ideal: the squarefree image of its
/// lex gin, computed inside `k[x_1..x_n]` for `n` the largest support index
/// (enough, since extending the ring extends the gin by base change).
pub fn delta_lex(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    delta_lex_opts(ideal, &ShiftOptions::default())
}

pub fn delta_lex_opts(ideal: &MonomialIdeal, opts: &ShiftOptions) -> Result<MonomialIdeal> {
    delta_generic_unchecked(ideal, &TermOrder::lex(), opts)
}

/// Shifting with respect to any squarefree-compatible term order; the
/// compatibility obligation is spot-tested before the engine runs.
pub fn delta_generic(
    ideal: &MonomialIdeal,
    ord: &TermOrder,
    opts: &ShiftOptions,
) -> Result<MonomialIdeal> {
    if !phi_compatible_on_low_degrees(ord) {
        return Err(Error::OrderNotPhiCompatible(ord.name()));
    }
    delta_generic_unchecked(ideal, ord, opts)
}

fn delta_generic_unchecked(
    ideal: &MonomialIdeal,
    ord: &TermOrder,
    opts: &ShiftOptions,
) -> Result<MonomialIdeal> {
    if ideal.is_zero() {
        return Ok(MonomialIdeal::zero());
    }
    let n = ideal.max_support();
    let gin = gin_with(ideal, n, ord, &opts.gin_options())?;
    MonomialIdeal::minimalize(gin.generators().iter().map(Monomial::phi))
}

/// The minimal generators of `delta_lex(ideal)` of degree at most `d`,
/// without computing the full gin: the degree-`<= d` part of a gin depends
/// only on the degree-`<= d` part of the ideal, so the engine runs on the
/// generator prefix with all S-pairs beyond `d` pruned.
pub fn delta_lex_prefix(
    ideal: &MonomialIdeal,
    d: u32,
    opts: &ShiftOptions,
) -> Result<Vec<Monomial>> {
    let low = MonomialIdeal::minimalize(ideal.prefix(d))?;
    if low.is_zero() {
        return Ok(Vec::new());
    }
    let n = low.max_support();
    let gin_opts = GinOptions {
        max_degree: Some(d),
        ..opts.gin_options()
    };
    let gin = gin_with(&low, n, &TermOrder::lex(), &gin_opts)?;
    let shifted = MonomialIdeal::minimalize(gin.generators().iter().map(Monomial::phi))?;
    Ok(shifted.prefix(d))
}

/// Compares `delta_lex(ideal)` against `ideal` in the graded lex order,
/// exactly, by escalating degree-truncated computations: the comparison is
/// decided at the first degree where the generator sets differ. When no
/// difference shows up through the regularity, the full computation settles
/// equality outright.
pub fn delta_lex_compare(ideal: &MonomialIdeal, opts: &ShiftOptions) -> Result<Ordering> {
    if ideal.is_zero() {
        return Ok(Ordering::Equal);
    }
    let reg = ideal.regularity()?;
    for d in 1..=reg {
        let shifted = delta_lex_prefix(ideal, d, opts)?;
        let own = ideal.prefix(d);
        if let Some(decision) = first_difference_verdict(&shifted, &own, d) {
            return Ok(decision);
        }
    }
    let full = delta_lex_opts(ideal, opts)?;
    Ok(ideal_compare(&full, ideal, &TermOrder::lex()))
}

/// Where two generator prefixes (through degree `upto`) first differ, the
/// graded-lex ideal comparison is already decided: lower degree monomials
/// outrank everything deeper.
fn first_difference_verdict(a: &[Monomial], b: &[Monomial], upto: u32) -> Option<Ordering> {
    for e in 1..=upto {
        let ae: Vec<&Monomial> = a.iter().filter(|m| m.degree() == e).collect();
        let be: Vec<&Monomial> = b.iter().filter(|m| m.degree() == e).collect();
        if ae == be {
            continue;
        }
        let lex = TermOrder::lex();
        let largest = ae
            .iter()
            .filter(|m| !be.contains(m))
            .chain(be.iter().filter(|m| !ae.contains(m)))
            .max_by(|x, y| lex.compare(x, y))
            .expect("sets differ");
        return Some(if ae.contains(largest) {
            Ordering::Greater
        } else {
            Ordering::Less
        });
    }
    None
}

/// A lex-shifting orbit: the starting ideal, the computed iterates, and the
/// certified degree-bounded stabilization data when a stopping rule fired.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftOrbit {
    pub start: MonomialIdeal,
    pub iterates: Vec<MonomialIdeal>,
    pub dbound: u32,
    pub stabilized_prefix: Option<Vec<Monomial>>,
    pub certified: bool,
}

/// Applies `delta_lex` repeatedly to a squarefree strongly stable ideal.
/// Stops when a USLI is reached (a fixed point), or when two consecutive
/// iterates share their degree-`<= dbound` generator prefix *and* that
/// prefix matches the analytic prediction from the B-sequence (agreement of
/// two iterates alone would not certify all later ones; the uniqueness of
/// the limit does). Strict lex increase is asserted at every non-fixed step.
pub fn iterate_lex(
    ideal: &MonomialIdeal,
    max_steps: u32,
    dbound: u32,
    opts: &ShiftOptions,
) -> Result<ShiftOrbit> {
    if !ideal.is_sq_strongly_stable()? {
        return Err(Error::NotSqStronglyStable);
    }
    let n = ideal.max_support();
    let target = usli_from_k(&k_from_b(&b_sequence(ideal, n, dbound)?, dbound)?, dbound);
    let target_prefix = target.generators().prefix(dbound);

    let mut iterates: Vec<MonomialIdeal> = Vec::new();
    let mut current = ideal.clone();
    let mut stabilized_prefix = None;
    let mut certified = false;
    for step in 0..max_steps as usize {
        if is_usli(&current) {
            stabilized_prefix = Some(current.prefix(dbound));
            certified = true;
            break;
        }
        let next = delta_lex_opts(&current, opts)?;
        if ideal_compare(&next, &current, &TermOrder::lex()) != Ordering::Greater {
            return Err(Error::LexIncreaseViolated(step));
        }
        iterates.push(next.clone());
        if next.prefix(dbound) == current.prefix(dbound)
            && next.prefix(dbound) == target_prefix
        {
            stabilized_prefix = Some(target_prefix.clone());
            certified = true;
            current = next;
            break;
        }
        current = next;
    }
    Ok(ShiftOrbit {
        start: ideal.clone(),
        iterates,
        dbound,
        stabilized_prefix,
        certified,
    })
}

/// The limit of the lex-shifting orbit, computed without iterating: it is
/// the unique USLI with the same B-sequence, so the k-sequence recursion on
/// the B-sequence already determines its generators through `dbound`.
pub fn limit_usli(ideal: &MonomialIdeal, n: u32, dbound: u32) -> Result<UsliPrefix> {
    let b = b_sequence(ideal, n, dbound)?;
    let k = k_from_b(&b, dbound)?;
    Ok(usli_from_k(&k, dbound))
}

/// The witness monomial `prod x_i^{r_i}` with `r_i` the number of facets of
/// codimension `i`. For a complex other than the full simplex its degree is
/// the facet count and it is a minimal generator of the lex gin of the
/// Stanley-Reisner ideal. The full simplex contributes only the codimension
/// zero facet, leaving the empty product, flagged as degenerate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PardueWitness {
    pub monomial: Monomial,
    pub degenerate: bool,
}

pub fn pardue_witness(complex: &SimplicialComplex) -> Result<PardueWitness> {
    if complex.is_void() {
        return Err(Error::EmptyComplex);
    }
    let n = complex.n();
    let mut degenerate = false;
    let mut exps: Vec<(u32, u32)> = Vec::new();
    for facet in complex.facets() {
        let codim = n - facet.card() as u32;
        if codim == 0 {
            degenerate = true;
        } else {
            exps.push((codim, 1));
        }
    }
    Ok(PardueWitness {
        monomial: Monomial::from_exponents(exps),
        degenerate,
    })
}

/// One failing witness of an axiom property.
#[derive(Clone, Debug, Serialize)]
pub struct AxiomFailure {
    pub complex: SimplicialComplex,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct PropertyOutcome {
    pub checked: u64,
    pub failures: Vec<AxiomFailure>,
}

impl PropertyOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Outcome of the shifting-axioms verification for `delta_rl`.
#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    /// Face counts are preserved.
    pub f_vector: PropertyOutcome,
    /// Shifting commutes with coning.
    pub cone: PropertyOutcome,
    /// Subcomplexes map to subcomplexes.
    pub monotone: PropertyOutcome,
    /// The reduced Betti sum never drops.
    pub betti_sum: PropertyOutcome,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.f_vector.passed()
            && self.cone.passed()
            && self.monotone.passed()
            && self.betti_sum.passed()
    }
}

/// Betti sum over homological dimensions `i >= 0` (entry 0 tracks the empty
/// face and stays out of the axiom inequality).
fn betti_sum_tail(betti: &[u64]) -> u64 {
    betti.iter().skip(1).sum()
}

/// Verifies the four shifting axioms for `delta_rl` over every shifted
/// complex on up to `n_max` vertices plus `samples` random complexes on
/// `n_max + 1` vertices; monotonicity runs on `samples` seeded nested pairs
/// built by deleting random stars. Failures are collected, not raised.
pub fn verify_axioms(
    n_max: u32,
    samples: u32,
    seed: u64,
    opts: &ShiftOptions,
) -> Result<AxiomReport> {
    let mut corpus: Vec<SimplicialComplex> = Vec::new();
    for n in 0..=n_max {
        corpus.extend(crate::simplex::enumerate_shifted(n)?);
    }
    for s in 0..samples {
        corpus.push(crate::simplex::random_complex(
            n_max + 1,
            seed.wrapping_add(s as u64),
        ));
    }

    let per_complex: Vec<Result<Vec<(usize, String)>>> = corpus
        .par_iter()
        .map(|gamma| {
            let mut fails: Vec<(usize, String)> = Vec::new();
            let shifted = delta_rl_opts(gamma, opts)?;
            if shifted.f_vector() != gamma.f_vector() {
                fails.push((0, format!("f-vector changed: image {shifted}")));
            }
            let cone_then_shift = delta_rl_opts(&gamma.cone(), opts)?;
            let shift_then_cone = shifted.cone();
            if cone_then_shift != shift_then_cone {
                fails.push((
                    1,
                    format!("cone images differ: {cone_then_shift} vs {shift_then_cone}"),
                ));
            }
            let before = betti_sum_tail(&gamma.reduced_betti());
            let after = betti_sum_tail(&shifted.shifted_betti()?);
            if before > after {
                fails.push((3, format!("betti sum dropped: {before} > {after}")));
            }
            Ok(fails)
        })
        .collect();

    let mut report = AxiomReport {
        f_vector: PropertyOutcome::default(),
        cone: PropertyOutcome::default(),
        monotone: PropertyOutcome::default(),
        betti_sum: PropertyOutcome::default(),
    };
    for (gamma, outcome) in corpus.iter().zip(per_complex) {
        let fails = outcome?;
        report.f_vector.checked += 1;
        report.cone.checked += 1;
        report.betti_sum.checked += 1;
        for (which, detail) in fails {
            let failure = AxiomFailure { complex: gamma.clone(), detail };
            match which {
                0 => report.f_vector.failures.push(failure),
                1 => report.cone.failures.push(failure),
                _ => report.betti_sum.failures.push(failure),
            }
        }
    }

    let pairs: Vec<(SimplicialComplex, SimplicialComplex)> = (0..samples)
        .map(|s| {
            let gamma = crate::simplex::random_complex(
                n_max + 1,
                seed.wrapping_add(0x7777).wrapping_add(s as u64),
            );
            let sub = delete_random_stars(&gamma, seed.wrapping_add(s as u64));
            (sub, gamma)
        })
        .collect();
    let monotone: Vec<Result<Option<String>>> = pairs
        .par_iter()
        .map(|(sub, gamma)| {
            let small = delta_rl_opts(sub, opts)?;
            let big = delta_rl_opts(gamma, opts)?;
            let contained = small.facets().iter().all(|f| big.contains(f));
            Ok((!contained).then(|| format!("image of {sub} not inside image of {gamma}")))
        })
        .collect();
    for ((sub, _), outcome) in pairs.iter().zip(monotone) {
        report.monotone.checked += 1;
        if let Some(detail) = outcome? {
            report
                .monotone
                .failures
                .push(AxiomFailure { complex: sub.clone(), detail });
        }
    }
    Ok(report)
}

/// A subcomplex obtained by repeatedly removing the closed star of a random
/// face: deleting everything above a face keeps the family inclusion-closed.
fn delete_random_stars(gamma: &SimplicialComplex, seed: u64) -> SimplicialComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xdead_beef);
    let mut faces: Vec<Face> = gamma.faces().into_iter().collect();
    for _ in 0..=rng.gen_range(0..3) {
        if faces.is_empty() {
            break;
        }
        let doomed = faces[rng.gen_range(0..faces.len())].clone();
        faces.retain(|f| !doomed.is_subset_of(f));
    }
    let facets: Vec<Face> = faces
        .iter()
        .filter(|f| !faces.iter().any(|g| *f != g && f.is_subset_of(g)))
        .cloned()
        .collect();
    SimplicialComplex::from_facets(gamma.n(), facets).expect("vertices unchanged")
}

/// Outcome of the term-order conjecture probe: reported, never asserted.
#[derive(Clone, Debug, Serialize)]
pub struct ConjectureProbe {
    pub order: String,
    pub phi_compatible_spot: bool,
    pub multiplicative_spot: bool,
    /// Smallest degree where the order disagrees with revlex.
    pub disagreement_degree: Option<u32>,
    /// Index of the first revlex-initial squarefree segment that fails to be
    /// an initial segment for the probed order.
    pub i0: Option<usize>,
    pub prefix_ideal: Option<MonomialIdeal>,
    /// Whether shifting moved the prefix ideal.
    pub shift_moves_it: Option<bool>,
}

/// Probes the conjecture that the first revlex segment which is not an
/// initial segment for the given order is moved by the corresponding
/// shifting. The squarefree-compatibility and multiplicativity obligations
/// are spot-tested and reported; an incompatible order stops before the
/// engine runs. All searches are truncated to a support window.
pub fn probe_conjecture(ord: &TermOrder, opts: &ShiftOptions) -> Result<ConjectureProbe> {
    let window = 9u32;
    let mut probe = ConjectureProbe {
        order: ord.name(),
        phi_compatible_spot: phi_compatible_on_low_degrees(ord),
        multiplicative_spot: multiplicative_on_low_degrees(ord),
        disagreement_degree: None,
        i0: None,
        prefix_ideal: None,
        shift_moves_it: None,
    };
    if matches!(ord.within, WithinDegree::RevLex) {
        return Ok(probe);
    }
    let revlex = TermOrder::revlex();
    let k = (1..=5u32).find(|&d| {
        let ms = crate::monom::monomials_of_degree(window, d);
        ms.iter().enumerate().any(|(i, a)| {
            ms[i + 1..]
                .iter()
                .any(|b| ord.compare(a, b) != revlex.compare(a, b))
        })
    });
    probe.disagreement_degree = k;
    let Some(k) = k else {
        return Ok(probe);
    };

    let mut segment = squarefree_monomials_of_degree(window, k);
    segment.sort_by(|a, b| revlex.compare(b, a));
    for i in 1..=segment.len() {
        let ideal = MonomialIdeal::minimalize(segment[..i].to_vec())?;
        if !is_initial_segment_ideal(&ideal, ord, k, window) {
            probe.i0 = Some(i);
            probe.prefix_ideal = Some(ideal.clone());
            if probe.phi_compatible_spot {
                let shifted = delta_generic(&ideal, ord, opts)?;
                probe.shift_moves_it = Some(shifted != ideal);
            }
            return Ok(probe);
        }
    }
    Ok(probe)
}

/// Truncated check that every squarefree monomial of the ideal, degree by
/// degree within the support window, forms an initial segment for the order.
fn is_initial_segment_ideal(ideal: &MonomialIdeal, ord: &TermOrder, k: u32, window: u32) -> bool {
    let reg = ideal.regularity().unwrap_or(0);
    for d in k..=(reg + 2).min(window) {
        let mut all = squarefree_monomials_of_degree(window, d);
        all.sort_by(|a, b| ord.compare(b, a));
        let mut seen_outside = false;
        for m in &all {
            if ideal.contains(m) {
                if seen_outside {
                    return false;
                }
            } else {
                seen_outside = true;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monom::tests::{ideal, m};
    use crate::simplex::enumerate_shifted;

    fn complex(n: u32, facets: &[&[u32]]) -> SimplicialComplex {
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
    fn delta_rl_fixes_shifted_examples() {
        assert_eq!(delta_rl(&three_points()).unwrap(), three_points());
        // the same through the full Gröbner path
        let opts = ShiftOptions { force_groebner: true, ..Default::default() };
        assert_eq!(delta_rl_opts(&three_points(), &opts).unwrap(), three_points());
        let void = SimplicialComplex::void(3);
        assert_eq!(delta_rl(&void).unwrap(), void);
    }

    #[test]
    fn delta_rl_shifts_a_nonshifted_complex() {
        let gamma = complex(3, &[&[1, 2], &[3]]);
        let shifted = delta_rl(&gamma).unwrap();
        assert!(shifted.is_shifted());
        assert_eq!(shifted.f_vector(), gamma.f_vector());
        assert_eq!(shifted, complex(3, &[&[2, 3], &[1]]));
    }

    #[test]
    fn delta_lex_examples() {
        let usli = ideal(&["x1*x2", "x1*x3", "x1*x4*x5*x6*x7"]);
        assert_eq!(delta_lex(&usli).unwrap(), usli);
        let three = ideal(&["x1*x2", "x1*x3", "x2*x3"]);
        assert_eq!(
            delta_lex(&three).unwrap(),
            ideal(&["x1*x2", "x1*x3", "x1*x4", "x2*x3*x4"])
        );
        assert!(delta_lex(&MonomialIdeal::zero()).unwrap().is_zero());
    }

    #[test]
    fn delta_lex_prefix_matches_full() {
        let three = ideal(&["x1*x2", "x1*x3", "x2*x3"]);
        let full = delta_lex(&three).unwrap();
        for d in 1..=3 {
            assert_eq!(
                delta_lex_prefix(&three, d, &ShiftOptions::default()).unwrap(),
                full.prefix(d),
                "degree {d}"
            );
        }
    }

    #[test]
    fn delta_lex_compare_trichotomy_small() {
        let opts = ShiftOptions::default();
        let usli = ideal(&["x1*x2", "x1*x3"]);
        assert_eq!(delta_lex_compare(&usli, &opts).unwrap(), Ordering::Equal);
        let three = ideal(&["x1*x2", "x1*x3", "x2*x3"]);
        assert_eq!(delta_lex_compare(&three, &opts).unwrap(), Ordering::Greater);
    }

    #[test]
    fn delta_generic_dispatch() {
        let three = ideal(&["x1*x2", "x1*x3", "x2*x3"]);
        let opts = ShiftOptions::default();
        assert_eq!(
            delta_generic(&three, &TermOrder::revlex(), &opts).unwrap(),
            three
        );
        assert_eq!(
            delta_generic(&three, &TermOrder::lex(), &opts).unwrap(),
            delta_lex(&three).unwrap()
        );
        let block = TermOrder::plugin(crate::monom::plugin_order("x1block").unwrap());
        assert!(matches!(
            delta_generic(&three, &block, &opts),
            Err(Error::OrderNotPhiCompatible(_))
        ));
    }

    #[test]
    fn orbit_of_a_usli_is_fixed() {
        let usli = ideal(&["x1*x2", "x1*x3"]);
        let orbit = iterate_lex(&usli, 8, 4, &ShiftOptions::default()).unwrap();
        assert!(orbit.iterates.is_empty());
        assert!(orbit.certified);
        assert_eq!(
            orbit.stabilized_prefix.unwrap(),
            usli.generators().to_vec()
        );
    }

    #[test]
    fn orbit_rejects_non_stable_input() {
        assert!(matches!(
            iterate_lex(&ideal(&["x2*x3"]), 4, 3, &ShiftOptions::default()),
            Err(Error::NotSqStronglyStable)
        ));
    }

    #[test]
    fn limit_of_three_points() {
        let three = ideal(&["x1*x2", "x1*x3", "x2*x3"]);
        let limit = limit_usli(&three, 3, 4).unwrap();
        let k = limit.k();
        assert_eq!(
            (1..=4).map(|j| k.get(j)).collect::<Vec<_>>(),
            vec![0, 3, 1, 2]
        );
        // a USLI prefix is its own limit
        let usli = ideal(&["x1*x2", "x1*x3"]);
        assert_eq!(limit_usli(&usli, 3, 3).unwrap().generators(), &usli);
    }

    #[test]
    fn limit_depends_only_on_h_data() {
        let three = three_points();
        let cone = three.cone();
        let a = limit_usli(&stanley_reisner(&three).unwrap(), 3, 5).unwrap();
        let b = limit_usli(&stanley_reisner(&cone).unwrap(), 4, 5).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn pardue_witness_examples() {
        let w = pardue_witness(&three_points()).unwrap();
        assert_eq!(w.monomial, m("x2^3"));
        assert!(!w.degenerate);

        let w = pardue_witness(&SimplicialComplex::simplex(4)).unwrap();
        assert!(w.degenerate);
        assert!(w.monomial.is_unit());

        let w = pardue_witness(&complex(3, &[&[1, 2], &[3]])).unwrap();
        assert_eq!(w.monomial, m("x1*x2"));
        assert_eq!(w.monomial.degree() as usize, 2);

        assert!(pardue_witness(&SimplicialComplex::void(2)).is_err());

        let w = pardue_witness(&SimplicialComplex::empty_face_only(3)).unwrap();
        assert_eq!(w.monomial, m("x3"));
    }

    #[test]
    fn axioms_hold_on_tiny_corpus() {
        let report = verify_axioms(2, 6, 11, &ShiftOptions::default()).unwrap();
        assert!(report.passed(), "{report:?}");
        assert!(report.f_vector.checked >= 10);
        assert_eq!(report.monotone.checked, 6);
    }

    #[test]
    fn conjecture_probe_with_lex() {
        let probe = probe_conjecture(&TermOrder::lex(), &ShiftOptions::default()).unwrap();
        assert!(probe.phi_compatible_spot);
        assert!(probe.multiplicative_spot);
        assert_eq!(probe.disagreement_degree, Some(2));
        assert_eq!(probe.i0, Some(3));
        assert_eq!(
            probe.prefix_ideal.unwrap(),
            ideal(&["x1*x2", "x1*x3", "x2*x3"])
        );
        assert_eq!(probe.shift_moves_it, Some(true));
    }

    #[test]
    fn conjecture_probe_with_incompatible_plugin() {
        let block = TermOrder::plugin(crate::monom::plugin_order("x1block").unwrap());
        let probe = probe_conjecture(&block, &ShiftOptions::default()).unwrap();
        assert!(!probe.phi_compatible_spot);
        assert!(probe.multiplicative_spot);
        assert_eq!(probe.disagreement_degree, Some(2));
        assert!(probe.i0.is_some());
        assert_eq!(probe.shift_moves_it, None);
    }

    #[test]
    fn rl_shift_is_idempotent_on_enumerated_complexes() {
        for gamma in enumerate_shifted(3).unwrap() {
            let once = delta_rl(&gamma).unwrap();
            assert_eq!(once, gamma, "shifted complexes are fixed");
        }
        for seed in 0..10 {
            let gamma = crate::simplex::random_complex(4, seed);
            let once = delta_rl(&gamma).unwrap();
            let twice = delta_rl(&once).unwrap();
            assert!(once.is_shifted());
            assert_eq!(once, twice, "{gamma}");
        }
    }
}
