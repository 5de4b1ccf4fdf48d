use qecmetro::ecc::{bitflip_state, qfi_bitflip, recurrence_data, solve_recurrence};
use qecmetro::kernels::{round_factor, signal_kernel};
use qecmetro::noec::{hamming_spectrum, qfi_noec_exact};
use qecmetro::oracle::{
    apply_parity_check, build_generators, evolve, expm, qfi_numeric, scenario_state, AmplitudeState, Propagator,
};
use qecmetro::{qfi_exact, Scenario, SystemParams};

fn params(n: u32, omega: f64, gamma: f64, xi: f64, p: f64, rounds: u64) -> SystemParams {
    SystemParams {
        n,
        omega,
        gamma,
        xi,
        p,
        tau: 1.0,
        rounds,
    }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

#[test]
fn round_factor_matches_dense_single_qubit_evolution() {
    let (w, g, tau) = (20.0, 1.0, 0.01);
    let gen = build_generators(1, w, g, 0.0, false).unwrap();
    let eb = expm::expm(&gen.b.mapv(|z| z * tau));
    // Column sums of e^{Bτ} applied to the GHZ coherence: b₁ = r·e^{iφ}/2.
    let b1 = eb[[1, 0]] + eb[[1, 1]];
    let rf = round_factor(w, g, tau);
    assert!(rel(rf.modulus(), b1.norm()) < 1e-10);
    assert!((rf.phase - b1.arg()).abs() < 1e-10);
}

#[test]
fn signal_kernel_matches_dense_exponential() {
    let (w, g, tau) = (2.0, 0.1, 0.01);
    let gen = build_generators(1, w, g, 0.0, false).unwrap();
    let eb = expm::expm(&gen.b.mapv(|z| z * tau));
    let k = signal_kernel(w, g, tau);
    let scale = (-g * tau).exp();
    assert!((eb[[0, 0]] - k.x_minus.v * scale).norm() < 1e-10);
    assert!((eb[[1, 1]] - k.x_plus.v * scale).norm() < 1e-10);
    assert!((eb[[0, 1]].re - k.y.v * scale).abs() < 1e-10);
}

#[test]
fn hamming_spectrum_matches_dense_eigenvalues() {
    let p = params(2, 1.0, 0.1, 0.0, 0.0, 1);
    let s = scenario_state(&p, Scenario::NoEc).unwrap();
    let spectrum = hamming_spectrum(&p, p.t());
    let mut oracle: Vec<f64> = Vec::new();
    for k in 0..s.dim() {
        let kb = s.complement(k);
        if k < kb {
            let mean = 0.5 * (s.a[k] + s.a[kb]);
            let rad = (0.5 * (s.a[k] - s.a[kb])).hypot(s.b[k].norm());
            oracle.extend([mean + rad, mean - rad]);
        }
    }
    for c in &spectrum.classes {
        let (lp, lm) = c.eigenvalues();
        assert!(oracle.iter().any(|x| (x - lp).abs() < 1e-10));
        assert!(oracle.iter().any(|x| (x - lm).abs() < 1e-10));
    }
}

#[test]
fn noec_matches_oracle_on_grid() {
    for n in 1..=3 {
        for i in 0..5 {
            for j in 0..5 {
                let wt = 0.1 + 1.9 * i as f64 / 4.0;
                let gt = 0.01 + 0.49 * j as f64 / 4.0;
                let p = params(n, wt, gt, 0.0, 0.0, 1);
                let exact = qfi_noec_exact(&p, 1.0).qfi;
                let oracle = qfi_numeric(&p, Scenario::NoEc).unwrap().qfi;
                assert!(rel(exact, oracle) < 1e-7, "n={n} wt={wt} gt={gt}: {exact} {oracle}");
            }
        }
    }
}

#[test]
fn general_recurrence_matches_explicit_rounds() {
    let p = SystemParams {
        n: 2,
        omega: 0.2,
        gamma: 0.01,
        xi: 1e-6,
        p: 0.01,
        tau: 1.0,
        rounds: 4,
    };
    let s = scenario_state(&p, Scenario::ParityGeneral).unwrap();
    let closed = solve_recurrence(&p).unwrap();
    let corner = closed.amplitude.conj().to_complex_dual().v;
    // The all-zeros string carries syndrome weight (1−p)ⁿ.
    assert!((2.0 * s.b[0] / closed.weights[0] - corner).norm() < 1e-9);
}

#[test]
fn one_round_prediction_with_syndrome_errors() {
    let p = params(2, 0.3, 0.01, 0.0, 0.06, 1);
    let gen = build_generators(2, p.omega, p.gamma, 0.0, true).unwrap();
    let s = apply_parity_check(&evolve(&AmplitudeState::ghz(3, true), &gen, 1.0), p.p).unwrap();
    let closed = solve_recurrence(&p).unwrap();
    let corner = closed.amplitude.conj().to_complex_dual().v;
    for k in 0..s.dim() {
        let j = k >> 1;
        if k & 1 == 0 {
            let w = closed.weights[j.count_ones() as usize];
            assert!((s.b[k] - corner * (0.5 * w)).norm() < 1e-10);
            assert!((s.a[k] - 0.5 * w).abs() < 1e-10);
        }
    }
}

#[test]
fn bitflip_matches_explicit_majority_vote() {
    let p = SystemParams {
        n: 3,
        omega: 0.2,
        gamma: 0.01,
        xi: 0.0,
        p: 0.0,
        tau: 1.0,
        rounds: 4,
    };
    let s = scenario_state(&p, Scenario::Bitflip).unwrap();
    let closed = bitflip_state(&p).unwrap();
    let corner = closed.amplitude.conj().to_complex_dual().v;
    assert!((2.0 * s.b[0] - corner).norm() < 1e-9);

    let p8 = SystemParams { gamma: 0.01, rounds: 8, ..p };
    let exact = qfi_bitflip(&p8).unwrap().qfi;
    let oracle = qfi_numeric(&p8, Scenario::Bitflip).unwrap().qfi;
    assert!(rel(exact, oracle) < 1e-7, "{exact} {oracle}");
}

#[test]
fn evolution_matches_kronecker_kernel() {
    let (w, g, tau) = (0.3, 0.05, 1.0);
    let gen = build_generators(2, w, g, 0.0, false).unwrap();
    let s = evolve(&AmplitudeState::ghz(2, false), &gen, tau);
    let k = signal_kernel(w, g, tau);
    let e = (-g * tau).exp();
    let (xm, xp, y) = (k.x_minus.v * e, k.x_plus.v * e, k.y.v * e);
    // b_0 = ½(x₋² + y²), b_1 = ½(x₋y + y x₊) for the |01⟩ coherence.
    assert!((s.b[0] - 0.5 * (xm * xm + y * y)).norm() < 1e-10);
    assert!((s.b[1] - 0.5 * (xm * y + y * xp)).norm() < 1e-10);
}

#[test]
fn ideal_small_grid_matches_oracle() {
    let p = params(2, 0.2, 0.02, 0.0, 0.0, 4);
    let exact = qfi_exact(&p, Scenario::ParityIdeal).unwrap().qfi;
    let oracle = qfi_numeric(&p, Scenario::ParityIdeal).unwrap().qfi;
    assert!(rel(exact, oracle) < 1e-7);
    let _ = recurrence_data(&p);
}

#[test]
fn noiseless_oracle_reaches_heisenberg() {
    for s in [Scenario::NoEc, Scenario::ParityIdeal, Scenario::Bitflip] {
        let p = params(3, 0.4, 0.0, 0.0, 0.0, 3);
        let q = qfi_numeric(&p, s).unwrap();
        assert!((q.normalized - 1.0).abs() < 1e-6, "{s}: {}", q.normalized);
    }
}

#[test]
fn propagator_semigroup() {
    let gen = build_generators(2, 0.7, 0.3, 0.1, true).unwrap();
    let s = AmplitudeState::ghz(3, true);
    let one = Propagator::new(&gen, 0.9).apply(&s);
    let two = Propagator::new(&gen, 0.5).apply(&Propagator::new(&gen, 0.4).apply(&s));
    assert!((&one.a - &two.a).iter().all(|x| x.abs() < 1e-10));
    assert!((&one.b - &two.b).iter().all(|x| x.norm() < 1e-10));
}
