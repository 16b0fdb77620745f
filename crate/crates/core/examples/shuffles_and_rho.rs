//! Shuffle permutations, the signed inverse tilde, and the operators ρ and τ,
//! including the composition identity for ρ.

use leibcoh::shuffle::{check_rho_identity, check_rho_identity_with, rho, rho_explicit, shuffle_sum, shuffles, tau, tilde};
use leibcoh::Field;

fn main() -> leibcoh::Result<()> {
    let q = Field::Rational;
    for s in shuffles(2, 1) {
        println!("(2,1)-shuffle {s:?}");
    }
    let t = tilde(&shuffle_sum(q, 1, 1));
    for (p, c) in t.terms() {
        println!("tilde(sh_1,1) term {p:?} coefficient {c}");
    }

    let word = [0, 1, 2];
    for (w, c) in rho(q, 2, 1)?.apply_to_word(&word) {
        println!("ρ_2,1(x1x2x3) term {c} x{:?}", w.iter().map(|i| i + 1).collect::<Vec<_>>());
    }
    println!("explicit formula agrees: {}", rho(q, 2, 1)?.apply_to_word(&word) == rho_explicit(q, 2, 1, &word)?);
    println!("τ_2,1(v1v2v3) = {:?}", tau(q, 2, 1).apply_to_word(&word).keys().next());

    let mut all = true;
    for p in 1..=3 {
        for qq in 1..=3 {
            for r in 1..=3 {
                all &= check_rho_identity(p, qq, r)?.ok;
            }
        }
    }
    println!("ρ-identity for 1 <= p,q,r <= 3: {all}");
    println!("ρ-identity (3,3,3): {}", check_rho_identity(3, 3, 3)?.ok);
    let flipped = check_rho_identity_with(1, 1, 1, true)?;
    println!("with the sign flipped at (1,1,1): ok = {}, first difference {:?}", flipped.ok, flipped.first_failure.map(|f| f.1));
    Ok(())
}
