mod common;

use std::f64::consts::LN_2;

use proptest::prelude::*;

use cubenoise::codes::{
    cond_exp_norm_exponent, macwilliams_transform, weight_distribution, LinearCode,
};
use cubenoise::cube::{conditional_expectation, lq_norm, noise_operator, wht_forward, wht_inverse, CubeFunction};
use cubenoise::gf2::BitMatrix;
use cubenoise::inequalities::{
    main_inequality_gap, noisy_entropy_gap, subset_expectation_exact, subset_expectation_mc, SubsetMode,
};
use cubenoise::matroids::{connected_components, graphic_matroid, matroid_rank, Graph};
use cubenoise::SubsetMask;

fn function(max_n: usize) -> impl Strategy<Value = CubeFunction> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(0.0..1.0f64, 1 << n).prop_map(move |v| CubeFunction::new(n, v).unwrap())
    })
}

fn positive_function(max_n: usize) -> impl Strategy<Value = CubeFunction> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(0.01..1.0f64, 1 << n).prop_map(move |v| CubeFunction::new(n, v).unwrap())
    })
}

fn code(max_n: usize) -> impl Strategy<Value = LinearCode> {
    (2..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<u64>(), 1..=n)
            .prop_map(move |rows| LinearCode::spanned_by(n, rows.iter().map(|r| r & ((1 << n) - 1)).collect()).unwrap())
    })
}

fn graph(max_v: usize, max_e: usize) -> impl Strategy<Value = Graph> {
    (1..=max_v).prop_flat_map(move |v| {
        prop::collection::vec((0..v, 0..v), 0..=max_e).prop_map(move |e| Graph::new(v, e).unwrap())
    })
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn wht_roundtrip_and_parseval(f in function(8)) {
        let spec = wht_forward(&f);
        let back = wht_inverse(&spec);
        for (a, b) in f.values().iter().zip(back.values()) {
            prop_assert!((a - b).abs() < 1e-12);
        }
        let energy: f64 = f.values().iter().map(|v| v * v).sum::<f64>() / f.len() as f64;
        prop_assert!((energy - spec.energy()).abs() < 1e-12);
    }

    #[test]
    fn noise_semigroup(f in function(6), a in 0.0..0.5f64, b in 0.0..0.5f64) {
        let c = (1.0 - (1.0 - 2.0 * a) * (1.0 - 2.0 * b)) / 2.0;
        let twice = noise_operator(&noise_operator(&f, a).unwrap(), b).unwrap();
        let once = noise_operator(&f, c).unwrap();
        for (x, y) in twice.values().iter().zip(once.values()) {
            prop_assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn noise_matches_direct_convolution(f in function(6), eps in 0.0..0.5f64) {
        let n = f.n();
        let g = noise_operator(&f, eps).unwrap();
        for x in 0..f.len() {
            let direct: f64 = (0..f.len())
                .map(|y| {
                    let d = (x ^ y).count_ones() as i32;
                    eps.powi(d) * (1.0 - eps).powi(n as i32 - d) * f.get(y)
                })
                .sum();
            prop_assert!((direct - g.get(x)).abs() < 1e-12);
        }
    }

    #[test]
    fn conditional_expectation_is_fourier_truncation(f in function(6), bits in any::<u64>()) {
        let n = f.n();
        let t = SubsetMask(bits & ((1 << n) - 1));
        let e = conditional_expectation(&f, t).unwrap();
        let (sf, se) = (wht_forward(&f), wht_forward(&e));
        for r in SubsetMask::all(n) {
            let expect = if r.is_subset_of(t) { sf.coeff(r.bits()) } else { 0.0 };
            prop_assert!((se.coeff(r.bits()) - expect).abs() < 1e-12);
        }
        // Tower property.
        let inner = SubsetMask(t.bits() & (t.bits() >> 1));
        let twice = conditional_expectation(&e, inner).unwrap();
        let direct = conditional_expectation(&f, inner).unwrap();
        for (a, b) in twice.values().iter().zip(direct.values()) {
            prop_assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn norms_increase_with_q(f in function(6), p in 1.0..6.0f64, dq in 0.0..4.0f64) {
        let a = lq_norm(&f, p).unwrap();
        let b = lq_norm(&f, p + dq).unwrap();
        let m = lq_norm(&f, f64::INFINITY).unwrap();
        prop_assert!(a <= b * (1.0 + 1e-12));
        prop_assert!(b <= m * (1.0 + 1e-12));
    }

    #[test]
    fn main_gap_is_scale_invariant(f in positive_function(4), c in 0.01..100.0f64, q in 1.05..8.0f64, eps in 0.0..0.5f64) {
        let a = main_inequality_gap(&f, q, eps, &SubsetMode::Exact).unwrap();
        let b = main_inequality_gap(&f.scale(c), q, eps, &SubsetMode::Exact).unwrap();
        prop_assert!((a.gap - b.gap).abs() < 1e-10);
        prop_assert!(a.gap >= -1e-9);
    }

    #[test]
    fn entropy_inequality_is_the_q_to_one_limit(f in positive_function(3), eps in 0.02..0.48f64) {
        let f = f.scale(1.0 / f.mean());
        let q = 1.0 + 1e-4;
        let main = main_inequality_gap(&f, q, eps, &SubsetMode::Exact).unwrap();
        let ent = noisy_entropy_gap(&f, eps, &SubsetMode::Exact).unwrap();
        // ln ‖g‖_q ≈ (q−1) Ent(g) ln 2 for E g = 1.
        let limit = main.gap / (q - 1.0) / LN_2;
        prop_assert!((limit - ent.gap).abs() < 2e-3 * (1.0 + ent.gap.abs()), "{limit} vs {}", ent.gap);
    }

    #[test]
    fn monte_carlo_agrees_with_exact(n in 1usize..10, lambda in 0.0..1.0f64, seed in any::<u64>()) {
        let h = |t: SubsetMask| (t.len() as f64).sqrt() + (t.bits() % 3) as f64;
        let exact = subset_expectation_exact(n, lambda, h, 22).unwrap();
        let mc = subset_expectation_mc(n, lambda, h, 4000, seed).unwrap();
        prop_assert!((mc.mean - exact).abs() <= 6.0 * mc.std_error + 1e-12, "{} vs {exact} ± {}", mc.mean, mc.std_error);
    }

    #[test]
    fn punctured_dual_dimension(c in code(10)) {
        let n = c.n();
        let dual = c.dual_code();
        let mut dual_words = Vec::new();
        dual.for_each_codeword(&cubenoise::Caps::default(), |w| dual_words.push(w)).unwrap();
        for t in SubsetMask::all(n) {
            let inside = dual_words.iter().filter(|&&w| w & !t.bits() == 0).count();
            let expected = 1usize << (t.len() - c.rank_of_columns(t));
            prop_assert_eq!(inside, expected);
        }
    }

    #[test]
    fn conditional_expectation_of_code_indicator(c in code(8)) {
        let n = c.n();
        let f = c.scaled_indicator().unwrap();
        let dual = c.dual_code();
        for t in SubsetMask::all(n) {
            let e = conditional_expectation(&f, t).unwrap();
            // Words of the dual supported inside T; E(f|T) lives on their orthogonal complement.
            let mut local = Vec::new();
            dual.for_each_codeword(&cubenoise::Caps::default(), |w| if w & !t.bits() == 0 { local.push(w) }).unwrap();
            let height = ((t.len() - c.rank_of_columns(t)) as f64).exp2();
            for x in 0..f.len() as u64 {
                let orthogonal = local.iter().all(|w| (w & x).count_ones() % 2 == 0);
                prop_assert_eq!(e.get(x as usize), if orthogonal { height } else { 0.0 });
            }
            for q in [1.5, 2.0, 3.0] {
                let lhs = q * lq_norm(&e, q).unwrap().ln();
                prop_assert!(close(lhs, cond_exp_norm_exponent(&c, t, q).unwrap(), 1e-12));
            }
        }
    }

    #[test]
    fn macwilliams_matches_dual_and_inverts(c in code(14)) {
        let (n, k) = (c.n(), c.k());
        let a = weight_distribution(&c).unwrap();
        let b = weight_distribution(&c.dual_code()).unwrap();
        let t = macwilliams_transform(&a, n, k).unwrap();
        prop_assert_eq!(&t, &b);
        prop_assert_eq!(macwilliams_transform(&t, n, n - k).unwrap(), a);
    }

    #[test]
    fn rank_is_submodular(rows in prop::collection::vec(any::<u64>(), 1..6), n in 1usize..10, a in any::<u64>(), b in any::<u64>()) {
        let m = cubenoise::matroids::BinaryMatroid::new(
            BitMatrix::new(n, rows.iter().map(|r| r & ((1 << n) - 1)).collect()).unwrap());
        let (a, b) = (SubsetMask(a & ((1 << n) - 1)), SubsetMask(b & ((1 << n) - 1)));
        let r = |s| matroid_rank(&m, s);
        prop_assert!(r(a.union(b)) + r(a.intersection(b)) <= r(a) + r(b));
        prop_assert!(r(a) <= a.len());
        prop_assert!(r(a.intersection(b)) <= r(a));
    }

    #[test]
    fn graphic_rank_counts_components(g in graph(7, 12)) {
        let m = graphic_matroid(&g);
        for s in SubsetMask::all(g.edge_count()) {
            prop_assert_eq!(matroid_rank(&m, s), g.vertex_count() - connected_components(&g, s));
        }
    }
}
