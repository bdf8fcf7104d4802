//! The canonical map rho and duals of orbit codes.

use orbitcode::adjoint::{canonical_rho, dual_orbit, lfsr_sequence, verify_adjoint_theorem};
use orbitcode::subspace::Subspace;
use orbitcode::{make_field, singer_orbit};

fn main() -> orbitcode::Result<()> {
    let t = make_field(2, 1, 4, None)?;
    let seq = lfsr_sequence(&t, &t.fq_coords(t.one()), 20)?;
    println!("recurrence: {}", seq.iter().map(|x| x.index().to_string()).collect::<String>());

    for (p, e, n) in [(2, 1, 6), (3, 1, 4), (2, 2, 3)] {
        let t = make_field(p, e, n, None)?;
        let rho = canonical_rho(&t);
        let r = verify_adjoint_theorem(&t, 50, 1)?;
        println!("(p,e,n) = ({p},{e},{n}) rho(1) = {} passed {}", t.format_element(rho.apply(t.one())), r.passed());
    }

    let t = make_field(2, 1, 6, None)?;
    let c = singer_orbit(&Subspace::parse(&t, "1;w;w^3")?);
    let d = dual_orbit(&c)?;
    println!("dual of {}: {} members of dimension {}", c.generator().literal(), d.len(), d.generator().k());
    println!("distance multisets agree: {}", c.distance_multiset() == d.distance_multiset());
    Ok(())
}
