use ashift::gin::{gin_with, GinOptions};
use ashift::monom::{stanley_reisner, TermOrder};
use ashift::shift::pardue_witness;
use ashift::simplex::enumerate_shifted;
use ashift::usli::is_almost_usli;
use rayon::prelude::*;
use std::time::Instant;

fn main() {
    let t0 = Instant::now();
    let mut jobs = Vec::new();
    for n in 2..=6u32 {
        for gamma in enumerate_shifted(n).unwrap() {
            if gamma.is_void() {
                continue;
            }
            let ideal = stanley_reisner(&gamma).unwrap();
            if is_almost_usli(&ideal) {
                jobs.push((gamma, ideal, n));
            }
        }
    }
    println!("almost-USLIs: {} (collect {:?})", jobs.len(), t0.elapsed());
    let t1 = Instant::now();
    let results: Vec<(usize, u32, bool, bool, std::time::Duration)> = jobs
        .par_iter()
        .map(|(gamma, ideal, n)| {
            let t = Instant::now();
            let facets = gamma.facets().len() as u32;
            let reg = ideal.regularity().unwrap();
            let law1 = facets > reg;
            let opts = GinOptions { max_degree: Some(facets), ..GinOptions::default() };
            let g = gin_with(ideal, *n, &TermOrder::lex(), &opts).unwrap();
            let w = pardue_witness(gamma).unwrap();
            let in_g = g.generators().contains(&w.monomial);
            let law2 = g.regularity().unwrap() >= facets;
            (facets as usize, reg, law1, law2 && in_g, t.elapsed())
        })
        .collect();
    let mut worst = std::time::Duration::ZERO;
    let mut all_ok = true;
    for (f, _r, l1, l2, d) in &results {
        if *d > worst {
            worst = *d;
            println!("  slowest so far: facets={f} took {d:?}");
        }
        all_ok &= l1 & l2;
    }
    println!("criterion-9 laws all hold: {all_ok}; total {:?}", t1.elapsed());
}
