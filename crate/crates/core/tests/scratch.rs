use numsgp::semigroup::{Classification, NumericalSemigroup};
use numsgp::structure::analyze_cyclic_rf;

#[test]
fn explore_cyclic_corpus() {
    let bound = 60i64;
    let mut found = Vec::new();
    for n1 in 2..=bound {
        for n2 in (n1 + 1)..=bound {
            for n3 in (n2 + 1)..=bound {
                for n4 in (n3 + 1)..=bound {
                    let gens = [n1, n2, n3, n4];
                    let Ok(h) = NumericalSemigroup::new(&gens) else {
                        continue;
                    };
                    if h.generators() != gens {
                        continue;
                    }
                    if h.classification() != (Classification::AlmostSymmetric { t: 3 }) {
                        continue;
                    }
                    if h.frobenius() % 2 == 0 {
                        continue;
                    }
                    if let Ok(rep) = analyze_cyclic_rf(&h) {
                        found.push((gens, rep.passed()));
                        if !rep.passed() {
                            println!("{rep}");
                        }
                    }
                }
            }
        }
    }
    println!("cyclic members: {found:?}");
    println!("count = {}", found.len());
    assert!(found.iter().all(|&(_, p)| p));
}
