//! Canonical subspaces: distances, subfield spans, duals and the Grassmannian.

use orbitcode::subspace::{enumerate_grassmannian, Subspace};
use orbitcode::make_field;

fn main() -> orbitcode::Result<()> {
    let t = make_field(2, 1, 6, None)?;
    let u = Subspace::parse(&t, "1;w;w^3")?;
    let v = u.scalar_shift(t.omega_pow(5))?;
    println!("U = {}  (k = {})", u.literal(), u.k());
    println!("w^5 U = {}", v.literal());
    println!("d(U, w^5 U) = {}", u.distance(&v)?);
    println!("delta profile of U: {:?}", u.delta_profile());
    println!("stabilizer field degree: {}", u.stabilizer_field_degree());

    let f8 = Subspace::subfield(&t, 3)?;
    println!("F_8 = {}  generic: {}", f8.literal(), f8.is_generic()?);
    println!("U^perp = {}", u.dual().literal());

    let all = enumerate_grassmannian(&t, 2, false, 1 << 20)?.count();
    let with_one = enumerate_grassmannian(&t, 2, true, 1 << 20)?.count();
    println!("|G_2(2, 6)| = {all}, containing 1: {with_one}");
    Ok(())
}
