//! The half-shuffle product on the free zinbiel algebra and an exhaustive
//! check of ((rs)t) = (r(st)) + (r(ts)).

use leibcoh::shuffle::{check_zinbiel_axiom, check_zinbiel_axiom_with, free_zinbiel_product, FreeZinbielElement};

fn main() {
    let v = |w: &[usize]| FreeZinbielElement::word(3, 4, w);
    let show = |x: &FreeZinbielElement| {
        x.terms()
            .iter()
            .map(|(w, c)| format!("{c}·{}", w.iter().map(|i| format!("v{i}")).collect::<String>()))
            .collect::<Vec<_>>()
            .join(" + ")
    };
    println!("(v0)(v1) = {}", show(&free_zinbiel_product(&v(&[0]), &v(&[1]), 4)));
    println!("(v0v1)(v2) = {}", show(&free_zinbiel_product(&v(&[0, 1]), &v(&[2]), 4)));

    for (alphabet, n) in [(1, 3), (2, 4), (3, 4)] {
        let verdict = check_zinbiel_axiom(alphabet, n);
        println!("alphabet {alphabet}, degree <= {n}: {} triples, ok {}", verdict.triples_checked, verdict.ok);
    }
    let swapped = check_zinbiel_axiom_with(2, 4, true);
    println!("with sh_q,p in place of sh_p,q: ok {}, first failure {:?}", swapped.ok, swapped.first_failure);
}
