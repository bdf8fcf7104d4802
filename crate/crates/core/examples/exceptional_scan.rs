//! Subspaces with delta_s = 2 whose extension-field orbit equals the
//! normalizer orbit.

use orbitcode::make_field;
use orbitcode::structure::{check_shift_family, scan_exceptional};

fn main() -> orbitcode::Result<()> {
    for (n, k, s) in [(4, 2, 2), (5, 2, 1), (6, 3, 2), (6, 3, 3), (8, 4, 4)] {
        let t = make_field(2, 1, n, None)?;
        let r = scan_exceptional(&t, k, s, 1 << 22)?;
        let hits: Vec<_> = r.hits.iter().map(|h| (h.size, h.singer_size)).collect();
        println!("(2,{n},{k}) s = {s}: {} subspaces, hits {hits:?}", r.delta2_count);
    }
    for (p, e) in [(2, 1), (2, 2), (3, 1)] {
        let t = make_field(p, e, 4, None)?;
        let f = check_shift_family(&t, 1)?;
        println!("q = {}: all shifts in orbit {}, |Orb_N| sizes {:?}", f.q, f.all_in_orbit, f.normalizer_sizes);
    }
    Ok(())
}
