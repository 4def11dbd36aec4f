//! Property tests over randomly generated lattices.
//!
//! Two generators drive the suite: intersection-closed set families on a
//! small ground set (which realize every finite lattice shape up to
//! isomorphism at this scale, distributive or not) and down-set lattices of
//! random posets (which are exactly the finite distributive lattices).
//! Each property restates a structural fact independently of the code paths
//! that produce it.

use latspec::adjunctions::{
    classify, factor_through_fspcnt, free_frame_d, omega, support_from_map,
};
use latspec::compare::{hochster_dual, matsui_comparison, mspec};
use latspec::props::{is_distributive, is_modular, is_semimodular, separating_prime};
use latspec::spectra::{fspcnt, meet_primes, points, points_oracle, semipoints, spcnt};
use latspec::{Classification, Elt, FiniteLattice, LatticeMap, MapFlags};
use proptest::prelude::*;

/// An intersection-closed family of subsets of a small ground set, ordered
/// by inclusion. Contains the full set; meets are intersections.
fn closure_lattice() -> impl Strategy<Value = FiniteLattice> {
    (2u32..=4, proptest::collection::vec(0u32..16, 0..6)).prop_map(|(ground, generators)| {
        let full = (1u32 << ground) - 1;
        let mut family: Vec<u32> = vec![full];
        for g in generators {
            let g = g & full;
            if !family.contains(&g) {
                family.push(g);
            }
        }
        loop {
            let mut added = false;
            for i in 0..family.len() {
                for j in 0..family.len() {
                    let meet = family[i] & family[j];
                    if !family.contains(&meet) {
                        family.push(meet);
                        added = true;
                    }
                }
            }
            if !added {
                break;
            }
        }
        family.sort_unstable();
        let labels = family.iter().map(|m| format!("s{m}")).collect();
        let sets = family.clone();
        FiniteLattice::from_leq(labels, move |a, b| sets[a] & sets[b] == sets[a])
            .expect("an intersection-closed family is a lattice under inclusion")
    })
}

/// The lattice of down-sets of a random poset on up to four nodes: a finite
/// distributive lattice, and every finite distributive lattice arises so.
fn downset_lattice() -> impl Strategy<Value = FiniteLattice> {
    (
        1usize..=4,
        proptest::collection::vec((0usize..4, 0usize..4), 0..8),
    )
        .prop_map(|(n, edges)| {
            let mut le = [[false; 4]; 4];
            for (i, row) in le.iter_mut().enumerate() {
                row[i] = true;
            }
            for (a, b) in edges {
                let (a, b) = (a.min(b), a.max(b));
                if a != b && b < n {
                    le[a][b] = true;
                }
            }
            for k in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        if le[i][k] && le[k][j] {
                            le[i][j] = true;
                        }
                    }
                }
            }
            let down_closed = |mask: u32| {
                (0..n).all(|j| {
                    mask & (1 << j) == 0 || (0..n).all(|i| !le[i][j] || mask & (1 << i) != 0)
                })
            };
            let downs: Vec<u32> = (0..1u32 << n).filter(|&m| down_closed(m)).collect();
            let labels = downs.iter().map(|m| format!("d{m}")).collect();
            let sets = downs.clone();
            FiniteLattice::from_leq(labels, move |a, b| sets[a] & sets[b] == sets[a])
                .expect("down-sets of a poset form a lattice under inclusion")
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn lattice_laws_hold(lat in closure_lattice()) {
        for a in lat.elements() {
            prop_assert_eq!(lat.meet(a, a), a);
            prop_assert_eq!(lat.join(a, a), a);
            prop_assert!(lat.leq(lat.bottom(), a) && lat.leq(a, lat.top()));
            for b in lat.elements() {
                prop_assert_eq!(lat.meet(a, b), lat.meet(b, a));
                prop_assert_eq!(lat.join(a, b), lat.join(b, a));
                prop_assert_eq!(lat.join(a, lat.meet(a, b)), a);
                prop_assert_eq!(lat.meet(a, lat.join(a, b)), a);
                for c in lat.elements() {
                    prop_assert_eq!(
                        lat.meet(a, lat.meet(b, c)),
                        lat.meet(lat.meet(a, b), c)
                    );
                    prop_assert_eq!(
                        lat.join(a, lat.join(b, c)),
                        lat.join(lat.join(a, b), c)
                    );
                }
            }
        }
    }

    #[test]
    fn opposite_is_an_involution_and_swaps_the_operations(lat in closure_lattice()) {
        let op = lat.opposite();
        let back = op.opposite();
        prop_assert_eq!(lat.labels(), back.labels());
        for a in lat.elements() {
            for b in lat.elements() {
                prop_assert_eq!(lat.leq(a, b), back.leq(a, b));
                prop_assert_eq!(lat.leq(a, b), op.leq(b, a));
                prop_assert_eq!(lat.meet(a, b), op.join(a, b));
            }
        }
        prop_assert_eq!(lat.bottom(), op.top());
    }

    #[test]
    fn product_points_are_points_in_one_coordinate(lat in closure_lattice()) {
        let two = FiniteLattice::from_covers(["0", "1"], [("0", "1")]).unwrap();
        let prod = lat.product(&two, 64).unwrap();
        // Meet-primes of a product pair a meet-prime with the other top.
        let expected: Vec<usize> = meet_primes(&lat)
            .iter()
            .map(|&p| p * 2 + 1)
            .chain([lat.top() * 2])
            .collect();
        let mut expected = expected;
        expected.sort_unstable();
        prop_assert_eq!(meet_primes(&prod), expected);
    }

    #[test]
    fn certificates_agree_with_their_definitions(lat in closure_lattice(), c in 0usize..16) {
        let c = c % lat.len();
        // Join- and meet-translations and the constant map, reckoned
        // directly against the definition of each flag.
        let families: [Vec<Elt>; 3] = [
            lat.elements().map(|x| lat.join(x, c)).collect(),
            lat.elements().map(|x| lat.meet(x, c)).collect(),
            lat.elements().map(|_| c).collect(),
        ];
        for image in families {
            let (flags, witnesses) =
                LatticeMap::flags_holding(&lat, &lat, &image);
            let joins = lat.elements().all(|a| {
                lat.elements().all(|b| image[lat.join(a, b)] == lat.join(image[a], image[b]))
            }) && image[lat.bottom()] == lat.bottom();
            let meets = lat.elements().all(|a| {
                lat.elements().all(|b| image[lat.meet(a, b)] == lat.meet(image[a], image[b]))
            });
            prop_assert_eq!(flags.joins, joins);
            prop_assert_eq!(flags.finite_meets, meets);
            prop_assert_eq!(flags.bottom, image[lat.bottom()] == lat.bottom());
            prop_assert_eq!(flags.top, image[lat.top()] == lat.top());
            // A failing flag always carries a witness that replays, either
            // as a binary violation or through the bottom clause.
            if !flags.joins {
                let (a, b) = witnesses[0].unwrap();
                prop_assert!(
                    image[lat.join(a, b)] != lat.join(image[a], image[b])
                        || image[lat.bottom()] != lat.bottom()
                );
            }
            if !flags.finite_meets {
                let (a, b) = witnesses[1].unwrap();
                prop_assert!(image[lat.meet(a, b)] != lat.meet(image[a], image[b]));
            }
        }
    }

    #[test]
    fn property_implications_hold(lat in closure_lattice()) {
        let d = is_distributive(&lat).verdict;
        let m = is_modular(&lat).verdict;
        let s = is_semimodular(&lat).verdict;
        prop_assert!(!d || m, "distributive implies modular");
        prop_assert!(!m || s, "modular implies semimodular");
    }

    #[test]
    fn semipoints_count_the_elements_and_points_replay(lat in closure_lattice()) {
        prop_assert_eq!(semipoints(&lat).len(), lat.len());
        for p in points(&lat) {
            prop_assert!(p.is_valid_for(&lat));
        }
        prop_assert_eq!(points_oracle(&lat, 16).unwrap(), points(&lat));
    }

    #[test]
    fn a_diamond_obstruction_forbids_points(lat in closure_lattice()) {
        if lat.find_diamond_obstruction().is_some() {
            prop_assert!(meet_primes(&lat).is_empty());
        }
    }

    #[test]
    fn spectra_specialize_along_the_order(lat in closure_lattice()) {
        let fsp = fspcnt(&lat);
        for l in lat.elements() {
            prop_assert_eq!(fsp.closure_of_point(l), lat.up_set(l));
        }
        let sp = spcnt(&lat);
        let primes = meet_primes(&lat);
        for (i, &p) in primes.iter().enumerate() {
            for (j, &q) in primes.iter().enumerate() {
                prop_assert_eq!(sp.specializes(i, j), lat.leq(p, q));
            }
        }
    }

    #[test]
    fn hochster_duality_is_an_involution(lat in closure_lattice()) {
        for space in [spcnt(&lat), fspcnt(&lat), mspec(&lat)] {
            let dual = hochster_dual(&space).unwrap();
            prop_assert!(hochster_dual(&dual).unwrap().same_topology(&space));
        }
    }

    #[test]
    fn free_frame_unit_embeds_and_supports_round_trip(lat in closure_lattice()) {
        let d = free_frame_d(&lat, 20).unwrap();
        for a in lat.elements() {
            for b in lat.elements() {
                prop_assert_eq!(
                    lat.leq(a, b),
                    d.opens.lattice.leq(d.unit.apply(a), d.unit.apply(b))
                );
            }
        }
        prop_assert!(is_distributive(&d.opens.lattice).verdict);
        let sd = support_from_map(&d.unit, &d.opens).unwrap();
        let back = latspec::adjunctions::map_from_support(&sd);
        prop_assert_eq!(back.image(), d.unit.image());
        // The unit factors through the semipoint spectrum by the identity.
        let g = factor_through_fspcnt(&d.unit, &d.opens).unwrap();
        for x in 0..lat.len() {
            prop_assert_eq!(g.apply(x), x);
        }
    }

    #[test]
    fn classification_and_matsui_on_distributive_lattices(lat in downset_lattice()) {
        prop_assert!(is_distributive(&lat).verdict);
        match classify(&lat) {
            Classification::Isomorphism { approximation, inverse } => {
                prop_assert_eq!(approximation.opens.lattice.len(), lat.len());
                for l in lat.elements() {
                    prop_assert_eq!(inverse[approximation.unit.apply(l)], l);
                }
            }
            Classification::NotInjective { a, b, .. } => {
                return Err(TestCaseError::fail(format!(
                    "unit collapsed {a} and {b} on a distributive lattice"
                )));
            }
        }
        let m = matsui_comparison(&lat).unwrap();
        prop_assert!(m.forward.is_homeomorphism_with(&m.backward));
    }

    #[test]
    fn triangle_identity_on_distributive_lattices(lat in downset_lattice()) {
        let o = omega(&lat);
        let o_eta = latspec::adjunctions::omega_map(&o.unit).unwrap();
        match classify(&o.opens.lattice) {
            Classification::Isomorphism { inverse, .. } => {
                for u in o.opens.lattice.elements() {
                    prop_assert_eq!(inverse[o_eta.apply(u)], u);
                }
            }
            Classification::NotInjective { .. } => {
                return Err(TestCaseError::fail("opens failed to form a spatial frame"));
            }
        }
    }

    #[test]
    fn separating_primes_separate(lat in downset_lattice()) {
        for s in lat.elements() {
            for m in lat.elements() {
                if !lat.leq(s, m) {
                    let p = separating_prime(&lat, s, m).unwrap();
                    prop_assert!(lat.leq(m, p) && !lat.leq(s, p));
                    prop_assert!(meet_primes(&lat).contains(&p));
                }
            }
        }
    }

    #[test]
    fn omega_unit_certificate_replays(lat in closure_lattice()) {
        let o = omega(&lat);
        let recheck = LatticeMap::checked(
            lat.clone(),
            o.opens.lattice.clone(),
            o.unit.image().to_vec(),
            MapFlags::ALL,
        );
        prop_assert!(recheck.is_ok());
        prop_assert!(o.unit.is_confluent());
    }
}
