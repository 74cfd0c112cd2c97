use ashift::monom::{stanley_reisner, MonomialIdeal};
use ashift::shift::{delta_lex_compare, delta_lex_prefix, delta_rl_opts, ShiftOptions};
use ashift::simplex::enumerate_shifted;
use ashift::usli::is_usli;
use rayon::prelude::*;
use std::cmp::Ordering;
use std::time::Instant;

fn main() {
    let opts = ShiftOptions::default();
    let mut complexes = Vec::new();
    for n in 0..=5u32 {
        complexes.extend(enumerate_shifted(n).unwrap());
    }
    println!("shifted complexes n<=5: {}", complexes.len());

    // criterion 1: revlex fixed points via the full Groebner path
    let t = Instant::now();
    let rl_opts = ShiftOptions { force_groebner: true, ..opts };
    let fixed = complexes
        .par_iter()
        .map(|c| delta_rl_opts(c, &rl_opts).unwrap() == *c)
        .reduce(|| true, |a, b| a && b);
    println!("criterion 1 (all fixed): {fixed} in {:?}", t.elapsed());

    // criterion 4
    let t = Instant::now();
    let verdicts: Vec<(bool, Option<u32>)> = complexes
        .par_iter()
        .map(|gamma| {
            if gamma.is_void() {
                return (true, None);
            }
            let ideal = stanley_reisner(&gamma).unwrap();
            let usli = is_usli(&ideal);
            let cmp = delta_lex_compare(&ideal, &opts).unwrap();
            let tri_ok = (usli && cmp == Ordering::Equal) || (!usli && cmp == Ordering::Greater);
            if usli {
                return (tri_ok, None);
            }
            // distinctness of I, ΔI, Δ²I via truncated prefixes
            for d in 1..=8u32 {
                let p1 = delta_lex_prefix(&ideal, d, &opts).unwrap();
                let j = MonomialIdeal::minimalize(p1.clone()).unwrap();
                let p2 = delta_lex_prefix(&j, d, &opts).unwrap();
                if p1 != p2 {
                    return (tri_ok, Some(d));
                }
            }
            (false, None)
        })
        .collect();
    let all_ok = verdicts.iter().all(|(ok, _)| *ok);
    let max_d = verdicts.iter().filter_map(|(_, d)| *d).max();
    let undecided = verdicts
        .iter()
        .zip(&complexes)
        .filter(|((ok, d), c)| {
            !c.is_void() && d.is_none() && !*ok
        })
        .count();
    println!(
        "criterion 4: all_ok={all_ok} max_escalation_degree={max_d:?} undecided={undecided} in {:?}",
        t.elapsed()
    );
}
