//! Automorphism groups of orbit codes, checked against exhaustive search.

use orbitcode::structure::{automorphism_group, brute_force_automorphisms, AutMode};
use orbitcode::subspace::Subspace;
use orbitcode::{make_field, normalizer_orbit, singer_orbit};

fn main() -> orbitcode::Result<()> {
    let t = make_field(2, 1, 4, None)?;
    for lit in ["1;w", "1;w^5"] {
        let u = Subspace::parse(&t, lit)?;
        let a = automorphism_group(&u, AutMode::Singer, 10_000)?;
        let brute = brute_force_automorphisms(&singer_orbit(&u), 30_000)?.len();
        println!("{lit}: {a}  exhaustive {brute}");
    }

    let t = make_field(2, 1, 6, None)?;
    let u = Subspace::parse(&t, "1;w^9;w^18")?;
    println!("F_8 in F_64: {}", automorphism_group(&u, AutMode::Singer, 10_000)?);

    let t = make_field(2, 1, 8, None)?;
    let u = Subspace::parse(&t, "1;w^17;w^34")?;
    let n = automorphism_group(&u, AutMode::Normalizer, 100_000)?;
    println!("normalizer orbit of size {}: {n}", normalizer_orbit(&u).len());
    println!("exceptional divisors {:?}, contained {:?}", n.exceptional, n.contained_ext_groups);
    Ok(())
}
