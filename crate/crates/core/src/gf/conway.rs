//! Conway polynomials for small prime fields.
//!
//! Each entry is `(p, m, [c_0, .., c_{m-1}])` describing the monic polynomial
//! `x^m + c_{m-1} x^{m-1} + .. + c_0` over `F_p`. Entries are Frank Lübeck's
//! Conway polynomials; every one of them is checked for primitivity when a
//! field is built from it.

pub(crate) static CONWAY: &[(u32, u32, &[u32])] = &[
    (2, 1, &[1]),
    (2, 2, &[1, 1]),
    (2, 3, &[1, 1, 0]),
    (2, 4, &[1, 1, 0, 0]),
    (2, 5, &[1, 0, 1, 0, 0]),
    (2, 6, &[1, 1, 0, 1, 1, 0]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0]),
    (2, 9, &[1, 0, 0, 0, 1, 0, 0, 0, 0]),
    (2, 10, &[1, 1, 1, 1, 0, 1, 1, 0, 0, 0]),
    (2, 11, &[1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
    (2, 12, &[1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0]),
    (2, 13, &[1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
    (2, 14, &[1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0]),
    (2, 15, &[1, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (2, 16, &[1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (2, 17, &[1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (2, 18, &[1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0]),
    (2, 19, &[1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (2, 20, &[1, 1, 0, 0, 1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (3, 1, &[1]),
    (3, 2, &[2, 2]),
    (3, 3, &[1, 2, 0]),
    (3, 4, &[2, 0, 0, 2]),
    (3, 5, &[1, 2, 0, 0, 0]),
    (3, 6, &[2, 2, 1, 0, 2, 0]),
    (3, 7, &[1, 0, 2, 0, 0, 0, 0]),
    (3, 8, &[2, 2, 2, 0, 1, 2, 0, 0]),
    (3, 9, &[1, 1, 2, 2, 0, 0, 0, 0, 0]),
    (3, 10, &[2, 1, 0, 0, 2, 2, 2, 0, 0, 0]),
    (3, 11, &[1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0]),
    (3, 12, &[2, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 0]),
    (3, 13, &[1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (3, 14, &[2, 0, 1, 2, 0, 1, 2, 1, 1, 2, 0, 0, 0, 0]),
    (3, 15, &[1, 1, 2, 0, 0, 1, 0, 0, 2, 0, 0, 0, 0, 0, 0]),
    (3, 16, &[2, 1, 2, 2, 2, 0, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0]),
    (3, 17, &[1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (3, 18, &[2, 0, 2, 0, 2, 1, 2, 0, 2, 0, 1, 0, 0, 0, 0, 0, 0, 0]),
    (3, 19, &[1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (3, 20, &[2, 1, 0, 2, 2, 2, 0, 0, 1, 1, 1, 1, 0, 2, 0, 0, 0, 0, 0, 0]),
    (5, 1, &[3]),
    (5, 2, &[2, 4]),
    (5, 3, &[3, 3, 0]),
    (5, 4, &[2, 4, 4, 0]),
    (5, 5, &[3, 4, 0, 0, 0]),
    (5, 6, &[2, 0, 1, 4, 1, 0]),
    (5, 7, &[3, 3, 0, 0, 0, 0, 0]),
    (5, 8, &[2, 4, 3, 0, 1, 0, 0, 0]),
    (5, 9, &[3, 1, 0, 2, 0, 0, 0, 0, 0]),
    (5, 10, &[2, 1, 4, 2, 3, 3, 0, 0, 0, 0]),
    (5, 11, &[3, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (5, 12, &[2, 2, 3, 4, 4, 0, 1, 1, 0, 0, 0, 0]),
    (5, 13, &[3, 3, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (5, 14, &[2, 1, 0, 3, 2, 4, 4, 0, 1, 0, 0, 0, 0, 0]),
    (5, 15, &[3, 4, 3, 3, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (5, 16, &[2, 1, 4, 4, 2, 4, 4, 4, 1, 0, 0, 0, 0, 0, 0, 0]),
    (5, 17, &[3, 2, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (5, 18, &[2, 0, 2, 2, 0, 1, 2, 0, 2, 1, 1, 1, 1, 0, 0, 0, 0, 0]),
    (5, 19, &[3, 2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (5, 20, &[2, 1, 0, 4, 0, 0, 3, 0, 2, 3, 4, 0, 3, 0, 0, 0, 0, 0, 0, 0]),
    (7, 1, &[4]),
    (7, 2, &[3, 6]),
    (7, 3, &[4, 0, 6]),
    (7, 4, &[3, 4, 5, 0]),
    (7, 5, &[4, 1, 0, 0, 0]),
    (7, 6, &[3, 6, 4, 5, 1, 0]),
    (7, 7, &[4, 6, 0, 0, 0, 0, 0]),
    (7, 8, &[3, 2, 6, 4, 0, 0, 0, 0]),
    (7, 9, &[4, 6, 0, 1, 6, 0, 0, 0, 0]),
    (7, 10, &[3, 3, 2, 1, 4, 1, 1, 0, 0, 0]),
    (7, 11, &[4, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (7, 12, &[3, 0, 5, 0, 4, 2, 3, 5, 2, 0, 0, 0]),
    (7, 13, &[4, 0, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (7, 14, &[3, 6, 3, 0, 2, 6, 0, 5, 0, 0, 0, 0, 0, 0]),
    (7, 15, &[4, 2, 1, 4, 6, 6, 5, 0, 0, 0, 0, 0, 0, 0, 0]),
    (7, 16, &[3, 4, 2, 6, 1, 4, 3, 5, 4, 0, 0, 0, 0, 0, 0, 0]),
    (7, 17, &[4, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (7, 18, &[3, 2, 6, 0, 0, 3, 1, 5, 6, 1, 6, 2, 1, 0, 0, 0, 0, 0]),
    (7, 19, &[4, 0, 5, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (7, 20, &[3, 1, 0, 3, 0, 3, 1, 3, 2, 5, 2, 6, 1, 0, 0, 0, 0, 0, 0, 0]),
    (11, 2, &[2, 7]),
    (11, 3, &[9, 2, 0]),
    (11, 4, &[2, 10, 8, 0]),
    (11, 5, &[9, 0, 10, 0, 0]),
    (11, 6, &[2, 7, 6, 4, 3, 0]),
    (13, 2, &[2, 12]),
    (13, 3, &[11, 2, 0]),
    (13, 4, &[2, 12, 3, 0]),
    (13, 5, &[11, 4, 0, 0, 0]),
    (13, 6, &[2, 11, 11, 10, 0, 0]),
    (17, 2, &[3, 16]),
    (17, 3, &[14, 1, 0]),
    (17, 4, &[3, 10, 7, 0]),
    (17, 5, &[14, 1, 0, 0, 0]),
    (19, 2, &[2, 18]),
    (19, 3, &[17, 4, 0]),
    (19, 4, &[2, 11, 2, 0]),
    (19, 5, &[17, 5, 0, 0, 0]),
    (23, 2, &[5, 21]),
    (23, 3, &[18, 2, 0]),
    (23, 4, &[5, 19, 3, 0]),
    (23, 5, &[18, 3, 0, 0, 0]),
    (29, 2, &[2, 24]),
    (29, 3, &[27, 2, 0]),
    (29, 4, &[2, 15, 2, 0]),
    (31, 2, &[3, 29]),
    (31, 3, &[28, 1, 0]),
    (31, 4, &[3, 16, 3, 0]),
    (37, 2, &[2, 33]),
    (37, 3, &[35, 6, 0]),
    (37, 4, &[2, 24, 6, 0]),
    (41, 2, &[6, 38]),
    (41, 3, &[35, 1, 0]),
    (41, 4, &[6, 23, 0, 0]),
    (43, 2, &[3, 42]),
    (43, 3, &[40, 1, 0]),
    (43, 4, &[3, 42, 5, 0]),
    (47, 2, &[5, 45]),
    (47, 3, &[42, 3, 0]),
    (47, 4, &[5, 40, 8, 0]),
    (53, 2, &[2, 49]),
    (53, 3, &[51, 3, 0]),
    (53, 4, &[2, 38, 9, 0]),
    (59, 2, &[2, 58]),
    (59, 3, &[57, 5, 0]),
    (59, 4, &[2, 40, 2, 0]),
    (61, 2, &[2, 60]),
    (61, 3, &[59, 7, 0]),
    (61, 4, &[2, 40, 3, 0]),
    (67, 2, &[2, 63]),
    (67, 3, &[65, 6, 0]),
    (71, 2, &[7, 69]),
    (71, 3, &[64, 4, 0]),
    (73, 2, &[5, 70]),
    (73, 3, &[68, 2, 0]),
    (79, 2, &[3, 78]),
    (79, 3, &[76, 9, 0]),
    (83, 2, &[2, 82]),
    (83, 3, &[81, 3, 0]),
    (89, 2, &[3, 82]),
    (89, 3, &[86, 3, 0]),
    (97, 2, &[5, 96]),
    (97, 3, &[92, 9, 0]),
];

/// Looks up the Conway polynomial of degree `m` over `F_p`. Degree one is
/// `x - g` for the least primitive root `g`.
pub fn conway_polynomial(p: u32, m: u32) -> Option<Vec<u32>> {
    if m == 1 && p > 2 {
        return least_primitive_root(p).map(|g| vec![p - g]);
    }
    CONWAY
        .iter()
        .find(|(pp, mm, _)| *pp == p && *mm == m)
        .map(|(_, _, c)| c.to_vec())
}

fn least_primitive_root(p: u32) -> Option<u32> {
    let order = (p - 1) as u64;
    let mut factors = Vec::new();
    let mut x = order;
    let mut d = 2;
    while d * d <= x {
        if x.is_multiple_of(d) {
            factors.push(d);
            while x.is_multiple_of(d) {
                x /= d;
            }
        }
        d += 1;
    }
    if x > 1 {
        factors.push(x);
    }
    (1..p).find(|&g| factors.iter().all(|&f| super::mod_pow(g as u64, order / f, p as u64) != 1))
}
