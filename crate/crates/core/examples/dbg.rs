fn main() {
    for n in 0..=3u32 {
        let listed = ashift::simplex::enumerate_shifted(n).unwrap();
        println!("n={} count={}", n, listed.len());
        for c in &listed {
            if !c.is_shifted() {
                println!("  NOT SHIFTED: {}", c);
            }
        }
    }
}
