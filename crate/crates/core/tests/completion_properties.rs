use energy_core::completion::{complete_spectrum_with, CompletionOptions, SplitRange};
use energy_core::search::brute::isomorphism_classes;
use energy_core::spectrum::eigenvalues;
use energy_core::{
    best_candidates, complete_spectrum, third_moment_test, CandidateFilter, CompletionCandidate, KnownFamily,
    Objective, Spectrum,
};
use proptest::prelude::*;

fn max_energy(cands: &[CompletionCandidate]) -> f64 {
    cands.iter().map(|c| c.energy).fold(f64::NEG_INFINITY, f64::max)
}

/// Every graph containing `K` in its spectrum has energy at most the best
/// two-value completion of `K`.
#[test]
fn completion_bounds_every_graph_up_to_7() {
    for n in 2..=7 {
        for g in isomorphism_classes(n).unwrap() {
            if g.m() == 0 {
                continue;
            }
            let s = eigenvalues(&g);
            let e = s.energy();
            for known in [vec![], vec![s.values()[0]], vec![s.values()[0], s.values()[n - 1]]] {
                if known.len() + 2 > n {
                    continue;
                }
                let k = KnownFamily::new(known);
                let cands = complete_spectrum(n, g.m(), &k).unwrap();
                assert!(e <= max_energy(&cands) + 1e-9, "{:?} exceeds the completion bound", g.edges());
            }
        }
    }
}

/// If a graph realises the best completion of the index of a maximal graph,
/// it is maximal too.
#[test]
fn realised_best_completions_are_maximal() {
    let mut realised = 0;
    for n in 3..=7 {
        let all = isomorphism_classes(n).unwrap();
        let spectra: Vec<Spectrum> = all.iter().map(eigenvalues).collect();
        for m in 1..=n * (n - 1) / 2 {
            let members: Vec<usize> = (0..all.len()).filter(|&i| all[i].m() == m).collect();
            let best = members.iter().map(|&i| spectra[i].energy()).fold(f64::NEG_INFINITY, f64::max);
            for &i in &members {
                if (spectra[i].energy() - best).abs() > 1e-9 {
                    continue;
                }
                let k = KnownFamily::new(vec![spectra[i].values()[0]]);
                let cands = complete_spectrum(n, m, &k).unwrap();
                let top = best_candidates(&cands, CandidateFilter::All, Objective::Max).unwrap();
                for c in top.iter().take_while(|c| (c.energy - top[0].energy).abs() < 1e-9) {
                    let target = c.assemble(&k);
                    for &h in &members {
                        if spectra[h].matches(&target, 1e-6) {
                            assert!((spectra[h].energy() - best).abs() < 1e-9);
                            realised += 1;
                        }
                    }
                }
            }
        }
    }
    assert!(realised > 0);
}

#[test]
fn heawood_from_cubic_bipartite_assumption() {
    let k = KnownFamily::new(vec![3.0, -3.0]);
    let cands = complete_spectrum(14, 21, &k).unwrap();
    let top = &best_candidates(&cands, CandidateFilter::MomentPassOnly, Objective::Max).unwrap()[0];
    let r2 = 2f64.sqrt();
    let want = Spectrum::from_groups(&[(3.0, 1), (r2, 6), (-r2, 6), (-3.0, 1)]);
    assert!(top.assemble(&k).matches(&want, 1e-12));
    // neither the empty family nor the index alone admit a realisable optimum
    for known in [vec![], vec![3.0]] {
        let k = KnownFamily::new(known);
        let c = complete_spectrum(14, 21, &k).unwrap();
        let top = &best_candidates(&c, CandidateFilter::All, Objective::Max).unwrap()[0];
        assert!(!top.passes_moment_test || top.energy > want.energy() + 1e-6);
    }
}

fn family() -> impl Strategy<Value = (usize, usize, Vec<f64>)> {
    (4usize..=30)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(-6.0f64..6.0, 0..=n - 2)))
        .prop_flat_map(|(n, known)| {
            let d: f64 = known.iter().map(|x| x * x).sum();
            let lo = (d / 2.0).ceil().max(1.0) as usize;
            let hi = (n * (n - 1) / 2).max(lo);
            (Just(n), lo..=hi, Just(known))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn candidates_satisfy_both_constraints((n, m, known) in family()) {
        let k = KnownFamily::new(known);
        let Ok(cands) = complete_spectrum(n, m, &k) else { return Ok(()) };
        let scale = 1.0 + 2.0 * m as f64;
        for c in &cands {
            prop_assert_eq!(c.p + c.q + k.len(), n);
            let s = c.assemble(&k);
            prop_assert!(s.moment(1).abs() <= 1e-9 * scale);
            prop_assert!((s.moment(2) - 2.0 * m as f64).abs() <= 1e-9 * scale);
            prop_assert!((s.energy() - c.energy).abs() <= 1e-9 * scale);
            let (third, pass) = third_moment_test(c, &k, 1e-6);
            prop_assert!((third - s.moment(3) / 6.0).abs() <= 1e-8 * scale.powf(1.5));
            prop_assert_eq!(pass, c.passes_moment_test);
        }
    }

    #[test]
    fn full_range_is_half_range_plus_mirrors((n, m, known) in family()) {
        let k = KnownFamily::new(known);
        let half = complete_spectrum_with(n, m, &k, &CompletionOptions { range: SplitRange::Half, ..Default::default() });
        let full = complete_spectrum_with(n, m, &k, &CompletionOptions { range: SplitRange::Full, ..Default::default() });
        let (Ok(half), Ok(full)) = (half, full) else { return Ok(()) };
        let j = n - k.len();
        for c in &full {
            let mirrored = half.iter().any(|h| {
                let same = h.p == c.p && (h.x - c.x).abs() < 1e-9 && (h.y - c.y).abs() < 1e-9;
                let flip = h.p == c.q && (h.x - c.y).abs() < 1e-9 && (h.y - c.x).abs() < 1e-9;
                (same || flip) && (h.energy - c.energy).abs() < 1e-9
            });
            prop_assert!(mirrored, "p = {} x = {}", c.p, c.x);
        }
        for h in &half {
            prop_assert!(h.p <= j / 2);
            prop_assert!(full.iter().any(|c| c.p == h.p && (c.x - h.x).abs() < 1e-12));
        }
    }

    #[test]
    fn feasibility_does_not_depend_on_the_split((n, m, known) in family()) {
        let k = KnownFamily::new(known);
        let j = (n - k.len()) as f64;
        let spread = j * (2.0 * m as f64 - k.d) - k.c * k.c;
        match complete_spectrum(n, m, &k) {
            Ok(c) => {
                prop_assert!(spread >= -1e-9 * (1.0 + spread.abs()));
                prop_assert!(!c.is_empty());
            }
            Err(_) => prop_assert!(spread < 1e-9 * (1.0 + j * 2.0 * m as f64)),
        }
    }
}
