mod common;

use std::f64::consts::PI;

use billiard_core::specfun::{bessel_j_zero, BesselZeros};
use billiard_core::spectra::*;
use billiard_core::Units;
use proptest::prelude::*;

fn orders(cs: &[AngularChannel]) -> Vec<(f64, u32)> {
    cs.iter().map(|c| (c.nu(), c.degeneracy)).collect()
}

fn energies(s: &Spectrum) -> Vec<f64> {
    s.states.iter().map(|s| s.energy).collect()
}

#[test]
fn channel_examples() {
    assert_eq!(orders(&channels(Geometry::FullCircle, 2.0).unwrap()), [(0.0, 1), (1.0, 2), (2.0, 2)]);
    assert_eq!(
        orders(&channels(Geometry::CircleWithBaffle, 2.0).unwrap()),
        [(0.5, 1), (1.0, 1), (1.5, 1), (2.0, 1)]
    );
    let w = channels(Geometry::wedge(1.0 / 3.0).unwrap(), 2.0).unwrap();
    assert_eq!(w.len(), 2);
    assert!((w[0].nu() - 0.75).abs() < 1e-15 && (w[1].nu() - 1.5).abs() < 1e-15);
    let h = channels(Geometry::HalfCircle, 3.0).unwrap();
    assert_eq!(orders(&h), [(1.0, 1), (2.0, 1), (3.0, 1)]);
    assert!(h.iter().all(|c| c.symmetry == SymmetryClass::SineOnly));
    let a = channels(Geometry::annulus(0.3).unwrap(), 1.0).unwrap();
    assert_eq!(orders(&a), [(0.0, 1), (1.0, 2)]);
    let ab = channels(Geometry::annulus_with_baffle(0.3).unwrap(), 1.0).unwrap();
    assert_eq!(orders(&ab), [(0.5, 1), (1.0, 1)]);
}

#[test]
fn geometry_validation() {
    assert!(Geometry::wedge(-1.0).is_err());
    assert!(Geometry::wedge(1.01).is_err());
    assert!(Geometry::wedge(1.0).is_ok());
    assert!(Geometry::wedge(-0.99).is_ok());
    assert!(Geometry::annulus(0.0).is_err());
    assert!(Geometry::annulus(1.0).is_err());
    assert!(Geometry::annulus_with_baffle(f64::NAN).is_err());
    assert!(spectrum(Geometry::Wedge { f: 2.0 }, 10.0).is_err());
    assert!(spectrum(Geometry::FullCircle, -1.0).is_err());
    assert!(spectrum(Geometry::FullCircle, 2e6).is_err());
}

#[test]
fn half_order_channel_is_pi_squared_ladder() {
    let c = channel_for_order(Geometry::CircleWithBaffle, 0.5).unwrap();
    let s = channel_spectrum(Geometry::CircleWithBaffle, c, 100.0, 1e-12).unwrap();
    let e: Vec<f64> = s.iter().map(|s| s.energy).collect();
    assert_eq!(e.len(), 3);
    for (i, e) in e.iter().enumerate() {
        let n = (i + 1) as f64;
        assert!((e - n * n * PI * PI).abs() < 1e-9);
    }
}

#[test]
fn lowest_levels_examples() {
    let s = spectrum(Geometry::FullCircle, 6.0).unwrap();
    assert_eq!(s.states.len(), 1);
    assert!((s.states[0].energy - 5.783185962946785).abs() < 1e-11);
    assert_eq!(s.states[0].multiplicity, 1);
    let s = spectrum(Geometry::HalfCircle, 15.0).unwrap();
    assert_eq!(s.states.len(), 1);
    assert!((s.states[0].energy - 3.831705970207512f64.powi(2)).abs() < 1e-10);
    assert_eq!((s.states[0].nu(), s.states[0].n_r), (1.0, 1));
}

#[test]
fn baffle_partition() {
    let (int, half) = baffle_decomposition(200.0).unwrap();
    let all = spectrum(Geometry::CircleWithBaffle, 200.0).unwrap();
    assert_eq!(int.total() + half.total(), all.total());
    assert_eq!(int, spectrum(Geometry::HalfCircle, 200.0).unwrap().staircase());
    assert!((half.steps()[0].energy - PI * PI).abs() < 1e-10);
}

#[test]
fn energy_is_z_squared() {
    for s in spectrum(Geometry::wedge(0.4).unwrap(), 300.0).unwrap().states {
        assert_eq!(s.energy, s.z * s.z);
    }
}

#[test]
fn wedge_endpoints_match() {
    let w0 = lowest_levels(Geometry::wedge(0.0).unwrap(), 100).unwrap();
    let h = lowest_levels(Geometry::HalfCircle, 100).unwrap();
    let w1 = lowest_levels(Geometry::wedge(1.0).unwrap(), 100).unwrap();
    let b = lowest_levels(Geometry::CircleWithBaffle, 100).unwrap();
    for (x, y) in energies(&w0).iter().zip(energies(&h)).take(100) {
        assert!((x - y).abs() <= 1e-10);
    }
    for (x, y) in energies(&w1).iter().zip(energies(&b)).take(100) {
        assert!((x - y).abs() <= 1e-10);
    }
}

#[test]
fn wedge_levels_fall_as_opening_grows() {
    let fs = [0.0, 0.25, 0.5, 0.75, 1.0];
    for n in 1..=6u32 {
        for n_r in 1..=4usize {
            let mut prev = f64::INFINITY;
            for f in fs {
                let c = channel(Geometry::wedge(f).unwrap(), n).unwrap();
                let e = bessel_j_zero(c.nu(), n_r).unwrap().z.powi(2);
                assert!(e <= prev, "n={n} n_r={n_r} f={f}");
                prev = e;
            }
        }
    }
}

#[test]
fn ordering_within_and_across_channels() {
    let g = Geometry::CircleWithBaffle;
    let spec = spectrum(g, 500.0).unwrap();
    for c in channels(g, 10.0).unwrap() {
        let e: Vec<f64> = spec.states.iter().filter(|s| s.channel.n == c.n).map(|s| s.energy).collect();
        assert!(e.windows(2).all(|w| w[0] < w[1]));
    }
    for n_r in 1..=3usize {
        let e: Vec<f64> = spec.states.iter().filter(|s| s.n_r == n_r).map(|s| s.energy).collect();
        // States are sorted by energy; at fixed n_r they must also be sorted by order.
        let nus: Vec<f64> = spec.states.iter().filter(|s| s.n_r == n_r).map(|s| s.nu()).collect();
        assert!(e.windows(2).all(|w| w[0] < w[1]));
        assert!(nus.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn full_circle_count_matches_direct_enumeration() {
    for e_max in [50.0, 333.0, 1200.0] {
        let z_max = f64::sqrt(e_max);
        let mut expected = 0u32;
        let mut nu = 0u32;
        loop {
            let count = BesselZeros::new(nu as f64)
                .unwrap()
                .map(|z| z.unwrap().z)
                .take_while(|&z| z <= z_max)
                .count() as u32;
            if count == 0 {
                break;
            }
            expected += if nu == 0 { count } else { 2 * count };
            nu += 1;
        }
        assert_eq!(spectrum(Geometry::FullCircle, e_max).unwrap().total(), expected);
    }
}

#[test]
fn lowest_levels_keeps_clusters_whole() {
    let s = lowest_levels(Geometry::FullCircle, 2).unwrap();
    // The first level is single, the second is a doublet; asking for two states gets both.
    assert_eq!(s.total(), 3);
    let s = lowest_levels(Geometry::CircleWithBaffle, 300).unwrap();
    assert!(s.total() >= 300);
}

#[test]
fn units_rescale_only_at_the_interface() {
    let u = Units::new(2.0, 0.5);
    assert!((u.energy(4.0) - 4.0 * 0.5 / 4.0).abs() < 1e-15);
    assert!((u.to_natural_energy(u.energy(7.3)) - 7.3).abs() < 1e-14);
    assert_eq!(u.length(0.5), 1.0);
    assert!(Units::default().is_natural());
}

proptest! {
    #[test]
    fn staircase_counts_by_lookup(levels in prop::collection::vec((0.1f64..100.0, 1u32..3), 1..60), probe in 0.0f64..110.0) {
        let st = Staircase::from_levels(levels.clone());
        let steps = st.steps();
        prop_assert!(steps.windows(2).all(|w| w[0].energy < w[1].energy));
        prop_assert!(steps.windows(2).all(|w| w[1].cumulative == w[0].cumulative + w[1].multiplicity));
        let brute: u32 = levels.iter().filter(|(e, _)| *e <= probe).map(|(_, m)| m).sum();
        // Merged clusters sit at their lowest member; probes inside a cluster are excluded.
        let in_cluster = levels.iter().any(|(e, _)| (e - probe).abs() <= 1e-9 * e.max(1.0));
        if !in_cluster {
            prop_assert_eq!(st.count(probe), brute);
        }
    }

    #[test]
    fn annulus_approaches_disk(nu in 1u32..8, n_r in 1usize..4) {
        let a = billiard_core::specfun::annulus_zero(nu as f64, 1e-3, n_r).unwrap().z;
        let d = bessel_j_zero(nu as f64, n_r).unwrap().z;
        prop_assert!((a - d).abs() <= 1e-4 * d, "{} vs {}", a, d);
    }

    #[test]
    fn wedge_spectrum_is_complete(f in -0.9f64..1.0, e_max in 20.0f64..400.0) {
        let g = Geometry::wedge(f).unwrap();
        let spec = spectrum(g, e_max).unwrap();
        let z_max = e_max.sqrt();
        let mut expected = 0usize;
        let mut n = 1;
        loop {
            let nu = channel(g, n).unwrap().nu();
            let c = BesselZeros::new(nu).unwrap().map(|z| z.unwrap().z).take_while(|&z| z <= z_max).count();
            if c == 0 {
                break;
            }
            expected += c;
            n += 1;
        }
        prop_assert_eq!(spec.states.len(), expected);
        prop_assert!(spec.states.windows(2).all(|w| w[0].energy <= w[1].energy));
    }
}
