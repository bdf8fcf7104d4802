//! Weight distributions of Singer orbits against the closed formulas.

use orbitcode::structure::{fit_ell2, predicted_weights, weight_distribution};
use orbitcode::subspace::Subspace;
use orbitcode::{make_field, singer_orbit};

fn main() -> orbitcode::Result<()> {
    let t = make_field(2, 1, 7, None)?;
    let sidon = Subspace::parse(&t, "1;w;w^3")?;
    let w = weight_distribution(&singer_orbit(&sidon))?;
    println!("(2,7,3) {}: {:?}", sidon.literal(), w.omegas);
    println!("predicted:          {:?}", predicted_weights(2, 7, 3, 1, 0, 0)?.omegas);

    let t = make_field(2, 1, 8, None)?;
    for lit in ["1;w;w^2", "1;w^17;w^34"] {
        let u = Subspace::parse(&t, lit)?;
        let o = singer_orbit(&u);
        let w = weight_distribution(&o)?;
        let fit = fit_ell2(2, w.omega(2));
        println!("(2,8,3) {lit}: length {} omegas {:?} fit {fit:?}", o.len(), w.omegas);
    }
    Ok(())
}
