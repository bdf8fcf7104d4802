//! Isometry classes of cyclic orbit codes in G_q(n, k).
//!
//! cargo run --release --example classify -- 2 6 3

use orbitcode::structure::{classify, ClassifyOptions};
use orbitcode::make_field;

fn main() -> orbitcode::Result<()> {
    let args: Vec<u32> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let (q, n, k) = match args[..] {
        [q, n, k] => (q, n, k),
        _ => (2, 6, 3),
    };
    let (p, e) = prime_power(q);
    let tower = make_field(p, e, n, None)?;
    let c = classify(&tower, k as usize, ClassifyOptions::default())?;
    println!("q = {q}, n = {n}, k = {k}: {} orbits, {} classes", c.orbit_count, c.classes.len());
    for cl in &c.classes {
        let fit = cl.ell2.map(|f| format!(" eps={} r={}", f.epsilon, f.r)).unwrap_or_default();
        println!(
            "nu={:<3} len={:<5} d={} weights={:?} aut={}{fit} [{:?}]",
            cl.nu(),
            cl.orbit_length,
            cl.distance.unwrap_or(0),
            cl.weights.omegas,
            cl.aut,
            cl.resolution
        );
    }
    Ok(())
}

fn prime_power(q: u32) -> (u32, u32) {
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).expect("q >= 2");
    let mut e = 0;
    let mut x = q;
    while x > 1 {
        assert_eq!(x % p, 0, "q must be a prime power");
        x /= p;
        e += 1;
    }
    (p, e)
}
