use affsat::delta_max::{delta_max_shift, is_delta_maximal, n_k_closed_form};
use affsat::{Algebra, Oracle, Weight, WeylElement};

fn height_of(alg: Algebra, lambda: &Weight, gamma: &Weight) -> i64 {
    alg.height(&(*lambda - *gamma)).unwrap()
}

#[test]
fn closed_form_is_delta_maximal_by_freudenthal() {
    let alg = Algebra::A11;
    let oracle = Oracle::<i64>::new(alg);
    for m in 1..=4 {
        for j in 0..=m {
            let lam = alg.from_labels(m - j, j);
            for k in -12..=12 {
                let n = n_k_closed_form(alg, &lam, k).unwrap();
                let gamma = lam + Weight::ALPHA * k + Weight::DELTA * n;
                let h = height_of(alg, &lam, &gamma);
                assert!(is_delta_maximal(&oracle, &lam, &gamma, h).unwrap(), "m={m} j={j} k={k}");
                // one step up is not a weight, one step down is not δ-maximal
                assert!(!is_delta_maximal(&oracle, &lam, &gamma.shift_delta(1), h).unwrap());
                assert!(!is_delta_maximal(&oracle, &lam, &gamma.shift_delta(-1), h + 2).unwrap());
            }
        }
    }
}

#[test]
fn shift_is_weyl_stable() {
    for alg in [Algebra::A11, Algebra::A22] {
        let words = WeylElement::all_up_to(6);
        for l0 in 0..=2 {
            for l1 in 0..=2 {
                let lam = alg.from_labels(l0, l1);
                if lam.level2() == 0 {
                    continue;
                }
                for k in -3..=3 {
                    let gamma = lam + Weight::ALPHA * k;
                    let n = delta_max_shift(alg, &lam, &gamma).unwrap();
                    for w in &words {
                        let moved = alg.act(w, &gamma);
                        assert_eq!(delta_max_shift(alg, &lam, &moved).unwrap(), n, "{alg} {w}");
                    }
                }
            }
        }
    }
}

#[test]
fn twisted_shift_matches_freudenthal() {
    let alg = Algebra::A22;
    let oracle = Oracle::<i64>::new(alg);
    for l0 in 0..=2 {
        for l1 in 0..=2 {
            let lam = alg.from_labels(l0, l1);
            if lam.level2() == 0 {
                continue;
            }
            for k in -4..=4 {
                let gamma = lam + Weight::ALPHA * k;
                let n = delta_max_shift(alg, &lam, &gamma).unwrap().expect("reachable");
                let top = gamma.shift_delta(n);
                let h = height_of(alg, &lam, &top) + 2;
                assert!(is_delta_maximal(&oracle, &lam, &top, h).unwrap(), "{} k={k}", lam.format(alg));
            }
        }
    }
}

#[test]
fn untwisted_shift_scales() {
    let alg = Algebra::A11;
    for l0 in 0..=3 {
        for l1 in 0..=3 {
            let lam = alg.from_labels(l0, l1);
            if lam.level2() == 0 {
                continue;
            }
            for k in -6..=6 {
                let gamma = lam + Weight::ALPHA * k;
                let n = delta_max_shift(alg, &lam, &gamma).unwrap().unwrap();
                for big in [2, 3] {
                    let scaled = delta_max_shift(alg, &(lam * big), &(gamma * big)).unwrap();
                    assert_eq!(scaled, Some(big * n));
                }
            }
        }
    }
}

/// In A₂⁽²⁾, `ω₀ + α − δ` is δ-maximal in `L(ω₀)` but `N(ω₀ + α) − Nδ + δ`
/// is still a weight of `L(Nω₀)`, so shifts do not scale.
#[test]
fn twisted_shift_does_not_scale() {
    let alg = Algebra::A22;
    let oracle = Oracle::<i64>::new(alg);
    let w0 = Weight::BASIC;
    let gamma = w0 + Weight::ALPHA;
    assert_eq!(delta_max_shift(alg, &w0, &gamma).unwrap(), Some(-1));
    for big in [2, 3, 4] {
        let scaled = delta_max_shift(alg, &(w0 * big), &(gamma * big)).unwrap().unwrap();
        assert!(scaled > -big, "N={big}");
        let above = (gamma * big).shift_delta(-big + 1);
        let h = height_of(alg, &(w0 * big), &above);
        assert!(oracle.weight_multiplicity(&(w0 * big), &above, h).unwrap() > 0);
    }
}
