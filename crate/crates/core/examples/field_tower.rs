//! Arithmetic in F_{q^n} built over a Conway polynomial.

use orbitcode::make_field;

fn main() -> orbitcode::Result<()> {
    let t = make_field(2, 2, 3, None)?;
    println!("F_{{{}^{}}} over F_{}: q = {}, |F| = {}", t.p(), t.degree(), t.q(), t.q(), t.size());
    println!("polynomial coefficients (low first): {:?}", t.polynomial());

    let w = t.omega();
    let x = t.omega_pow(17);
    let y = t.add(w, x);
    println!("w + w^17 = {} = w^{}", t.format_element(y), t.log(y).unwrap());
    println!("(w^17)^-1 = w^{}", t.log(t.inv(x)?).unwrap());
    println!("Frobenius of w^17: w^{}", t.log(t.frobenius(x, 1)).unwrap());

    for s in t.divisors() {
        let g = t.subfield_generator(s)?;
        println!("F_{{q^{s}}} generated by w^{} (order {})", t.log(g).unwrap(), t.multiplicative_order(g).unwrap());
    }
    println!("F_q-coordinates of w^17: {:?}", t.fq_coords(x).iter().map(|c| t.log(*c)).collect::<Vec<_>>());
    Ok(())
}
