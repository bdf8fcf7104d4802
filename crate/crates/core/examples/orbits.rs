//! Orbits under the Singer cycle, its normalizer and GL_{n/s}(q^s), and the
//! orbit-size lower bound.

use orbitcode::orbit::{extension_group_orbit, orbit_size_lower_bound};
use orbitcode::subspace::Subspace;
use orbitcode::{make_field, normalizer_orbit, singer_orbit};

fn main() -> orbitcode::Result<()> {
    let t = make_field(2, 1, 4, None)?;
    let u = Subspace::parse(&t, "1;w")?;
    println!("(2,4): |Orb_S| = {}, |Orb_N| = {}", singer_orbit(&u).len(), normalizer_orbit(&u).len());
    let gl = extension_group_orbit(&u, 2, 1000)?;
    println!("(2,4): |Orb_GL_2(4)| = {}", gl.len());

    let t = make_field(2, 1, 8, None)?;
    let u = Subspace::parse(&t, "1;w;w^2")?;
    for s in [2, 4] {
        let o = extension_group_orbit(&u, s, 1_000_000)?;
        let r = u.delta_s(s)? as u32;
        let bound = orbit_size_lower_bound(2, 8, 3, s, r)?;
        println!("(2,8,3) s = {s}: orbit {} >= bound {bound} (delta = {r})", o.len());
    }
    let spread = singer_orbit(&Subspace::subfield(&t, 4)?);
    println!("spread of F_16 in F_256: {} members, distance {:?}", spread.len(), spread.min_distance());
    println!("digest {}", spread.digest());
    Ok(())
}
