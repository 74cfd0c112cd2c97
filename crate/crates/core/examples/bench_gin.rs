use ashift::gin::{gin, gin_with, GinOptions};
use ashift::monom::{MonomialIdeal, Monomial, TermOrder};
use std::time::Instant;

fn ideal(gens: &[&str]) -> MonomialIdeal {
    MonomialIdeal::minimalize(gens.iter().map(|s| s.parse::<Monomial>().unwrap())).unwrap()
}

fn main() {
    // 1-skeleton of the 4-simplex: Stanley-Reisner ideal = all 10 triangles
    let mut gens = Vec::new();
    for a in 1..=5u32 {
        for b in a + 1..=5 {
            for c in b + 1..=5 {
                gens.push(format!("x{a}*x{b}*x{c}"));
            }
        }
    }
    let skel1 = MonomialIdeal::minimalize(gens.iter().map(|s| s.parse::<Monomial>().unwrap())).unwrap();

    // 2-skeleton: all 5 four-subsets
    let mut gens = Vec::new();
    for a in 1..=5u32 {
        for b in a + 1..=5 {
            for c in b + 1..=5 {
                for d in c + 1..=5 {
                    gens.push(format!("x{a}*x{b}*x{c}*x{d}"));
                }
            }
        }
    }
    let skel2 = MonomialIdeal::minimalize(gens.iter().map(|s| s.parse::<Monomial>().unwrap())).unwrap();

    for (name, i) in [("three-points", ideal(&["x1*x2", "x1*x3", "x2*x3"])),
                      ("skel2(5 gens deg4)", skel2),
                      ("skel1(10 gens deg3)", skel1)] {
        let n = i.max_support();
        let t = Instant::now();
        let rl = gin(&i, n, &TermOrder::revlex(), 7, 2).unwrap();
        println!("{name}: revlex gin {} gens, reg {}, {:?}", rl.generators().len(), rl.regularity().unwrap(), t.elapsed());
        let t = Instant::now();
        let lex = gin_with(&i, n, &TermOrder::lex(), &GinOptions { seed: 7, budget: Some(50_000_000), ..Default::default() });
        match lex {
            Ok(lex) => {
                println!("{name}: lex gin {} gens, reg {}, {:?}", lex.generators().len(), lex.regularity().unwrap(), t.elapsed());
                let phis: Vec<String> = lex.generators().iter().map(|g| g.phi().to_string()).collect();
                let maxsupp = lex.generators().iter().map(|g| g.phi().max_var()).max().unwrap();
                println!("   max support after squarefree op: {maxsupp}; sample {:?}", &phis[..phis.len().min(4)]);
            }
            Err(e) => println!("{name}: lex gin FAILED: {e} after {:?}", t.elapsed()),
        }
    }
}
