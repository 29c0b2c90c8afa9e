use bohr_lab::classes::{
    boundary_distance_lower, coeff_bound_sum, extremal_model, growth_envelope, majorant_model,
};
use bohr_lab::cli::Table;
use bohr_lab::verify::{check_theorem, dominance_violations, sample_admissible_model, sharpness_gap, Status};
use bohr_lab::{eval_alternating, eval_tail_bounded, q_value, solve_radius, ClassParams, RadiusProblem, TermRule};
use proptest::prelude::*;
use proptest::test_runner::RngSeed;

fn class_strategy() -> impl Strategy<Value = ClassParams> {
    prop_oneof![
        (0.01f64..0.99).prop_map(|beta| ClassParams::TildeG0H { beta }),
        (0.0f64..0.95).prop_map(|alpha| ClassParams::W0H { alpha }),
        (1u32..4, 0.0f64..3.0).prop_map(|(k, extra)| ClassParams::GkH {
            k,
            alpha: 1.0 / k as f64 + extra
        }),
    ]
}

fn harmonic_problem_strategy() -> impl Strategy<Value = RadiusProblem> {
    prop_oneof![
        (0.01f64..0.99).prop_map(|beta| RadiusProblem::T31 { beta }),
        (0.01f64..0.99).prop_map(|beta| RadiusProblem::T32 { beta }),
        (0.0f64..0.95).prop_map(|alpha| RadiusProblem::T33 { alpha }),
        (0.0f64..0.95).prop_map(|alpha| RadiusProblem::T34 { alpha }),
        (1u32..4, 0.0f64..3.0).prop_map(|(k, x)| RadiusProblem::T35 { k, alpha: 1.0 / k as f64 + x }),
        (1u32..4, 0.0f64..3.0).prop_map(|(k, x)| RadiusProblem::T36 { k, alpha: 1.0 / k as f64 + x }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 64,
        rng_seed: RngSeed::Fixed(0x5eed),
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn coefficient_bounds_are_nonnegative_and_nonincreasing(class in class_strategy(), n in 2usize..200) {
        let c = coeff_bound_sum(&class, n).unwrap();
        let next = coeff_bound_sum(&class, n + 1).unwrap();
        prop_assert!(c >= 0.0);
        match class {
            ClassParams::GkH { k, .. } if n <= k as usize => prop_assert_eq!(c, 0.0),
            ClassParams::TildeG0H { .. } => prop_assert_eq!(c, next),
            _ => prop_assert!(next <= c),
        }
    }

    #[test]
    fn extremal_is_dominated_by_majorant(class in class_strategy(), n in 4usize..60) {
        let ext = extremal_model(&class, n).unwrap();
        let maj = majorant_model(&class, n).unwrap();
        for i in 2..=n {
            prop_assert!(ext.a(i).norm() <= maj.a(i).norm());
        }
        prop_assert_eq!(dominance_violations(&ext, &class).unwrap(), 0);
        prop_assert!(ext.satisfies_normalization(&class));
    }

    #[test]
    fn samples_respect_coefficient_bounds(class in class_strategy(), seed in any::<u64>()) {
        let model = sample_admissible_model(&class, seed, 40).unwrap();
        prop_assert_eq!(dominance_violations(&model, &class).unwrap(), 0);
        prop_assert!(model.satisfies_normalization(&class));
    }

    #[test]
    fn growth_envelope_is_ordered_and_grows(class in class_strategy(), r in 0.0f64..0.9, dr in 0.001f64..0.09) {
        let (lo1, hi1) = growth_envelope(&class, r, 1e-10).unwrap();
        let (lo2, hi2) = growth_envelope(&class, r + dr, 1e-10).unwrap();
        prop_assert!(lo1.lo() <= hi1.hi());
        prop_assert!(lo1.lo() >= 0.0 || r == 0.0);
        prop_assert!(hi2.hi() >= hi1.lo());
        prop_assert!(lo2.lo() >= 0.0);
    }

    #[test]
    fn distance_bound_lies_in_unit_interval(class in class_strategy()) {
        let d = boundary_distance_lower(&class, 1e-10).unwrap();
        prop_assert!(d.lo() > 0.0 && d.hi() < 1.0 + 1e-12);
        prop_assert!(d.width() <= 1e-10);
    }

    #[test]
    fn root_is_certified(problem in harmonic_problem_strategy()) {
        let root = solve_radius(&problem, 1e-9).unwrap();
        prop_assert!(root.half_width <= 1e-9);
        prop_assert!(root.q_lo.is_negative() && root.q_hi.is_positive());
        let (a, b) = root.bracket();
        prop_assert!(q_value(&problem, a, 1e-12).unwrap().hi() < 1e-9);
        prop_assert!(q_value(&problem, b, 1e-12).unwrap().lo() > -1e-9);
        prop_assert!(root.r > 0.0 && root.r < 1.0);
    }

    #[test]
    fn samples_hold_below_the_radius(problem in harmonic_problem_strategy(), seed in any::<u64>(), frac in 0.1f64..0.9) {
        let class = problem.class().unwrap();
        let r = solve_radius(&problem, 1e-10).unwrap().r * frac;
        let model = sample_admissible_model(&class, seed, 80).unwrap();
        let v = check_theorem(&model, &class, &problem, r, 1e-9).unwrap();
        prop_assert_eq!(v.status, Status::Holds, "{:?}", v);
    }

    #[test]
    fn geometric_tail_contains_closed_form(q in 0.0f64..0.95, start in 0u64..5) {
        let rule = TermRule::new(start, move |n| q.powi(n as i32)).with_ratio_bound(move |_| q);
        let exact = q.powi(start as i32) / (1.0 - q);
        let loose = eval_tail_bounded(&rule, 1e-6).unwrap();
        let tight = eval_tail_bounded(&rule, 1e-12).unwrap();
        prop_assert!(tight.inflate(4.0 * f64::EPSILON * exact).contains(exact), "{tight:?} {exact}");
        // Summation slack of the tighter run: gamma_M times the sum of |t_n|.
        let terms = ((1e-12 * (1.0 - q)).ln() / q.ln()).ceil().max(1.0) + start as f64 + 2.0;
        let rounding = 2.0 * terms * f64::EPSILON * exact;
        prop_assert!(loose.inflate(rounding).contains_enclosure(&tight), "{loose:?} {tight:?}");
    }

    #[test]
    fn alternating_log_series_contains_closed_form(r in 0.0f64..=1.0) {
        // sum_{n>=2} (-1)^(n-1) r^n / n = ln(1 + r) - r
        let rule = TermRule::new(2, move |n| {
            let s = if n % 2 == 0 { -1.0 } else { 1.0 };
            s * r.powi(n as i32) / n as f64
        })
        .with_term_error(8.0 * f64::EPSILON);
        let exact = r.ln_1p() - r;
        let loose = eval_alternating(&rule, 1e-6).unwrap();
        let tight = eval_alternating(&rule, 1e-11).unwrap();
        prop_assert!(tight.inflate(4.0 * f64::EPSILON).contains(exact), "{tight:?} {exact}");
        prop_assert!(tight.width() <= 1e-11);
        prop_assert!(loose.inflate(1e3 * f64::EPSILON).contains_enclosure(&tight), "{loose:?} {tight:?}");
    }

    #[test]
    fn radius_grows_with_parameter(x in 0.05f64..0.85, dx in 0.01f64..0.1) {
        for make in [
            (|b| RadiusProblem::T31 { beta: b }) as fn(f64) -> RadiusProblem,
            |b| RadiusProblem::T32 { beta: b },
            |a| RadiusProblem::T33 { alpha: a },
            |a| RadiusProblem::T34 { alpha: a },
        ] {
            let r1 = solve_radius(&make(x), 1e-10).unwrap().r;
            let r2 = solve_radius(&make(x + dx), 1e-10).unwrap().r;
            prop_assert!(r2 > r1);
        }
    }

    #[test]
    fn tilde_sharpness_vanishes(beta in 0.02f64..0.98, area in any::<bool>()) {
        let problem = if area { RadiusProblem::T32 { beta } } else { RadiusProblem::T31 { beta } };
        let gap = sharpness_gap(&problem, 1e-6).unwrap();
        prop_assert!(gap.abs() <= 1e-6, "{gap}");
    }

    #[test]
    fn csv_table_round_trips(values in proptest::collection::vec((0.0f64..1.0, 0u32..1000), 1..20)) {
        let mut table = Table::new(&["theorem", "beta", "alpha", "iterations"]);
        for (x, i) in values {
            table.rows.push(vec![
                bohr_lab::cli::Cell::Text("t31".into()),
                bohr_lab::cli::Cell::Float(x),
                bohr_lab::cli::Cell::Empty,
                bohr_lab::cli::Cell::Int(i.into()),
            ]);
        }
        let csv = table.to_csv().unwrap();
        let again = Table::from_csv(&csv).unwrap().to_csv().unwrap();
        prop_assert_eq!(csv, again);
    }
}
