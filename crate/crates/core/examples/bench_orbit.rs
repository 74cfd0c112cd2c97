use ashift::gin::{gin_with, GinOptions};
use ashift::monom::{Monomial, MonomialIdeal, TermOrder};
use ashift::shift::{iterate_lex, ShiftOptions};
use std::time::Instant;

fn ideal(gens: &[&str]) -> MonomialIdeal {
    MonomialIdeal::minimalize(gens.iter().map(|s| s.parse::<Monomial>().unwrap())).unwrap()
}

fn main() {
    let three = ideal(&["x1*x2", "x1*x3", "x2*x3"]);
    let t = Instant::now();
    let orbit = iterate_lex(&three, 32, 3, &ShiftOptions::default()).unwrap();
    println!(
        "orbit: steps={} certified={} prefix={:?} in {:?}",
        orbit.iterates.len(),
        orbit.certified,
        orbit
            .stabilized_prefix
            .as_ref()
            .map(|p| p.iter().map(|m| m.to_string()).collect::<Vec<_>>()),
        t.elapsed()
    );
    for (i, it) in orbit.iterates.iter().enumerate() {
        println!(
            "  iterate {}: {} gens, reg {}, support {}",
            i + 1,
            it.generators().len(),
            it.regularity().unwrap(),
            it.max_support()
        );
    }

    // criterion-9 style: truncated lex gin at degree = facet count,
    // almost-USLI with 7 facets on [5]: <x1, x2*x3, x2*x4*x5, x3*x4*x5>? build one:
    // from the scan: (1,)(2,3)(2,4,5)(3,4,5) had 5 facets; take the 7-facet one at n=5:
    // the almost-USLI with max facets at n=5 per histogram has 7 facets; use
    // <x1*x2, x1*x3, x1*x4, x1*x5, x2*x3*x4*x5>? check: prefix is USLI k2=4; classify later.
    let au = ideal(&["x1*x2", "x1*x3", "x1*x4", "x1*x5", "x2*x3*x4*x5"]);
    println!("au sqss: {:?}, usli {}, almost {}",
        au.is_sq_strongly_stable(), ashift::usli::is_usli(&au), ashift::usli::is_almost_usli(&au));
    let c = ashift::monom::complex_of(&au, 5).unwrap();
    println!("facets: {}", c.facets().len());
    let t = Instant::now();
    let opts = GinOptions { max_degree: Some(c.facets().len() as u32), ..GinOptions::default() };
    let g = gin_with(&au, 5, &TermOrder::lex(), &opts).unwrap();
    println!(
        "truncated lex gin at degree {}: {} gens, reg {}, in {:?}",
        c.facets().len(),
        g.generators().len(),
        g.regularity().unwrap(),
        t.elapsed()
    );
}
