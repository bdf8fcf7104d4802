//! Exact sweep of the orbit-size and group-order inequalities.

use orbitcode::orbit::verify_inequality_lemmas;

fn main() {
    let r = verify_inequality_lemmas(5, 4, 12);
    for (lemma, n) in &r.checked {
        println!("{lemma:<36} {n} cases");
    }
    println!("violations: {}", r.violations.len());
    println!("r = 2 failures: {:?}", r.normalizer_r2_failure_triples());
}
