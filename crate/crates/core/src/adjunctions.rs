//! Frame approximations of a lattice and the support-datum correspondence.
//!
//! A finite bounded lattice maps into two open-set frames: the free spatial
//! frame on its join structure, built on the semipoint spectrum, and the
//! frame of opens of its point spectrum. Both units send an element to the
//! open set of points not killing it; the first is certified for joins, the
//! second for the full complete-lattice structure. [`classify`] decides
//! whether the second unit is an isomorphism — which happens exactly for
//! distributive lattices — and produces the inverse `U ↦ ⋀ { p : p ∉ U }`
//! when it is. Support data tie join-preserving maps into an open-set
//! lattice to point maps into the semipoint spectrum.

use crate::bits::Mask;
use crate::error::{LatticeError, Result};
use crate::lattice::{Elt, FiniteLattice, LatticeMap, MapFlags};
use crate::space::{
    generate_topology, is_sober, open_set_lattice, FiniteSpace, OpenSetLattice, SpaceMap,
};
use crate::spectra::{fspcnt, meet_primes};

/// An approximation of a lattice by the open-set frame of a space: the frame
/// itself (with its backing space and opens) and the unit map into it.
#[derive(Debug, Clone)]
pub struct FrameApproximation {
    /// The open-set lattice of the approximating space.
    pub opens: OpenSetLattice,
    /// The unit `l ↦ U_l` into the frame, stamped with its certificate.
    pub unit: LatticeMap,
}

/// The free spatial frame on the join structure of `lat`: the topology on
/// the semipoint spectrum generated by the subbasic opens
/// `U_l = { x : l ≰ x }` under finite intersections and arbitrary unions.
/// The unit `l ↦ U_l` preserves joins (meets and top genuinely fail in
/// general) and embeds the order: `l ≤ m` iff `U_l ⊆ U_m`.
///
/// The frame can be exponentially larger than the lattice, so the input size
/// is guarded by `limit`.
pub fn free_frame_d(lat: &FiniteLattice, limit: usize) -> Result<FrameApproximation> {
    if lat.len() > limit {
        return Err(LatticeError::SizeGuard {
            size: lat.len(),
            limit,
        });
    }
    let subbase: Vec<Mask> = lat.elements().map(|l| lat.up_set(l).complement()).collect();
    let opens = generate_topology(lat.len(), &subbase);
    let closed = opens.iter().map(Mask::complement).collect();
    let space = FiniteSpace::new(lat.labels().to_vec(), closed)
        .expect("a generated topology is a closed-set family");
    let olat = open_set_lattice(&space);
    let image = subbase
        .iter()
        .map(|u| olat.element_of(u).expect("subbasic sets are open"))
        .collect();
    let unit = LatticeMap::checked(lat.clone(), olat.lattice.clone(), image, MapFlags::JOINS)
        .expect("the unit into the free spatial frame preserves joins");
    Ok(FrameApproximation { opens: olat, unit })
}

/// The frame of opens of the point spectrum, with the unit
/// `η: l ↦ U_l = { p meet-prime : l ≰ p }`. Because `U_{l∧m} = U_l ∩ U_m`
/// (meet-primality) and `U_{l∨m} = U_l ∪ U_m`, the subbasic sets already
/// form the whole topology, so the frame has at most as many elements as the
/// lattice and the unit is onto and fully certified.
pub fn omega(lat: &FiniteLattice) -> FrameApproximation {
    let space = crate::spectra::spcnt(lat);
    let olat = open_set_lattice(&space);
    let primes = meet_primes(lat);
    let image = lat
        .elements()
        .map(|l| {
            let u = Mask::from_indices(
                primes.len(),
                primes
                    .iter()
                    .enumerate()
                    .filter(|&(_, &p)| !lat.leq(l, p))
                    .map(|(i, _)| i),
            );
            olat.element_of(&u)
                .expect("sets of primes avoiding an element are open")
        })
        .collect();
    let unit = LatticeMap::checked(lat.clone(), olat.lattice.clone(), image, MapFlags::ALL)
        .expect("the unit into the point-spectrum frame is a complete-lattice map");
    FrameApproximation { opens: olat, unit }
}

/// Functorial action of [`omega`] on a fully certified map `f`: a point of
/// the target pulls back along `f` to a point of the source, and an open set
/// of source points is carried to its preimage under that pullback.
///
/// Requires the full certificate — the pullback of a prime is computed from
/// join, meet, and top preservation — and fails with `NotApplicable`
/// otherwise.
pub fn omega_map(f: &LatticeMap) -> Result<LatticeMap> {
    if !f.certified().includes(MapFlags::ALL) {
        return Err(LatticeError::NotApplicable(
            "functoriality of the point-spectrum frame needs a map certified for joins, finite meets, bottom, and top".into(),
        ));
    }
    let src = f.source();
    let tgt = f.target();
    let src_primes = meet_primes(src);
    let tgt_primes = meet_primes(tgt);
    // A target prime q pulls back to the largest source element mapped
    // under q; its principal down-set is the zero set of a source point.
    let pullback: Vec<usize> = tgt_primes
        .iter()
        .map(|&q| {
            let e = src.join_all(src.elements().filter(|&x| tgt.leq(f.apply(x), q)));
            src_primes
                .iter()
                .position(|&p| p == e)
                .expect("the pullback of a meet-prime along a certified map is meet-prime")
        })
        .collect();
    let a = omega(src);
    let b = omega(tgt);
    let image = a
        .opens
        .opens
        .iter()
        .map(|u| {
            let pre = Mask::from_indices(
                tgt_primes.len(),
                (0..tgt_primes.len()).filter(|&q| u.contains(pullback[q])),
            );
            b.opens
                .element_of(&pre)
                .expect("the preimage of an open set along the point pullback is open")
        })
        .collect();
    LatticeMap::checked(
        a.opens.lattice.clone(),
        b.opens.lattice.clone(),
        image,
        MapFlags::ALL,
    )
}

/// Outcome of comparing a lattice with the frame of opens of its point
/// spectrum via the unit of [`omega`].
#[derive(Debug, Clone)]
pub enum Classification {
    /// The unit is an isomorphism. `inverse` sends each frame element (in
    /// element order) to the meet of the primes outside the corresponding
    /// open set; both round trips are verified before this is returned.
    Isomorphism {
        approximation: FrameApproximation,
        inverse: Vec<Elt>,
    },
    /// The unit identifies two elements; `(a, b)` is the least such pair in
    /// element order. The unit is always onto, so failure is always failure
    /// of injectivity, and happens exactly when the lattice is not
    /// distributive.
    NotInjective {
        approximation: FrameApproximation,
        a: Elt,
        b: Elt,
    },
}

/// Decides whether the unit into the opens of the point spectrum is an
/// isomorphism, returning the verified inverse `U ↦ ⋀ { p : p ∉ U }` when it
/// is and the least collapsed pair when it is not.
pub fn classify(lat: &FiniteLattice) -> Classification {
    let approximation = omega(lat);
    for a in lat.elements() {
        for b in (a + 1)..lat.len() {
            if approximation.unit.apply(a) == approximation.unit.apply(b) {
                return Classification::NotInjective {
                    approximation,
                    a,
                    b,
                };
            }
        }
    }
    // The unit is injective and always onto, so it is a bijection; verify
    // the inverse formula both ways before certifying the isomorphism.
    let primes = meet_primes(lat);
    let frame = &approximation.opens;
    assert_eq!(frame.lattice.len(), lat.len(), "an injective unit is onto");
    let inverse: Vec<Elt> = frame
        .opens
        .iter()
        .map(|u| {
            lat.meet_all(
                primes
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| !u.contains(i))
                    .map(|(_, &p)| p),
            )
        })
        .collect();
    for l in lat.elements() {
        assert_eq!(
            inverse[approximation.unit.apply(l)],
            l,
            "the meet of the primes outside U_l recovers l"
        );
    }
    for (u, &l) in inverse.iter().enumerate() {
        assert_eq!(
            approximation.unit.apply(l),
            u,
            "the unit recovers each open set from its meet"
        );
    }
    Classification::Isomorphism {
        approximation,
        inverse,
    }
}

/// An assignment of an open subset of a space to each lattice element,
/// sending bottom to the empty set and compatible with joins: whenever
/// `x ≤ a ∨ b`, the set of `x` lies inside the union of the sets of `a` and
/// `b`. The binary condition together with the bottom axiom is equivalent to
/// the arbitrary-join form by induction on the join.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportDatum {
    source: FiniteLattice,
    space: FiniteSpace,
    assign: Vec<Mask>,
}

impl SupportDatum {
    /// Validates the assignment: one open set per element, the empty set on
    /// bottom, and join compatibility (least violating triple reported).
    pub fn new(
        source: FiniteLattice,
        space: FiniteSpace,
        assign: Vec<Mask>,
    ) -> Result<SupportDatum> {
        if assign.len() != source.len() || assign.iter().any(|s| s.universe() != space.len()) {
            return Err(LatticeError::Mismatch(
                "a support datum assigns one subset of the space per lattice element".into(),
            ));
        }
        for (x, s) in assign.iter().enumerate() {
            if !space.is_closed(&s.complement()) {
                return Err(LatticeError::Mismatch(format!(
                    "the set assigned to {:?} is not open",
                    source.label(x)
                )));
            }
        }
        if !assign[source.bottom()].is_empty() {
            return Err(LatticeError::Mismatch(
                "the bottom element must carry the empty open set".into(),
            ));
        }
        for x in source.elements() {
            for a in source.elements() {
                for b in source.elements() {
                    if source.leq(x, source.join(a, b))
                        && !assign[x].is_subset(&assign[a].union(&assign[b]))
                    {
                        return Err(LatticeError::SupportViolation {
                            x: source.label(x).to_owned(),
                            a: source.label(a).to_owned(),
                            b: source.label(b).to_owned(),
                        });
                    }
                }
            }
        }
        Ok(SupportDatum {
            source,
            space,
            assign,
        })
    }

    pub fn source(&self) -> &FiniteLattice {
        &self.source
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    /// The open set assigned to an element.
    pub fn assigned(&self, x: Elt) -> &Mask {
        &self.assign[x]
    }
}

/// Reads a support datum off a join-certified map into an open-set lattice:
/// the datum assigns to `x` the open set backing `phi(x)`.
pub fn support_from_map(phi: &LatticeMap, target: &OpenSetLattice) -> Result<SupportDatum> {
    if phi.target() != &target.lattice {
        return Err(LatticeError::Mismatch(
            "the map does not land in the given open-set lattice".into(),
        ));
    }
    if !phi.certified().joins {
        return Err(LatticeError::NotJoinPreserving);
    }
    let assign = phi
        .image()
        .iter()
        .map(|&u| target.opens[u].clone())
        .collect();
    SupportDatum::new(phi.source().clone(), target.space.clone(), assign)
}

/// Rebuilds the join-certified map from a support datum:
/// `φ(m) = ⋃_{x ≤ m} σ(x)`, landing in the open-set lattice of the datum's
/// space. Inverse to [`support_from_map`] in both directions: on a datum the
/// union collapses to `σ(m)` by monotonicity, and on a map it restates
/// monotonicity of the map.
pub fn map_from_support(sd: &SupportDatum) -> LatticeMap {
    let olat = open_set_lattice(&sd.space);
    let image = sd
        .source
        .elements()
        .map(|m| {
            let mut u = Mask::empty(sd.space.len());
            for x in sd.source.elements() {
                if sd.source.leq(x, m) {
                    u = u.union(&sd.assign[x]);
                }
            }
            olat.element_of(&u).expect("a union of opens is open")
        })
        .collect();
    LatticeMap::checked(sd.source.clone(), olat.lattice, image, MapFlags::JOINS)
        .expect("a support datum induces a join-preserving map")
}

/// Factors a join-certified map `f: L → O(X)` through the semipoint
/// spectrum: the continuous map `g: X → fspcnt(L)` sending a point to the
/// semipoint whose zero set is `{ l : x ∉ f(l) }`. The subbasic opens pull
/// back along `g` to exactly the sets of `f`, which is verified before
/// returning; `g` is the unique continuous map with that property (see
/// [`factorization_is_unique`]).
pub fn factor_through_fspcnt(f: &LatticeMap, target: &OpenSetLattice) -> Result<SpaceMap> {
    if f.target() != &target.lattice {
        return Err(LatticeError::Mismatch(
            "the map does not land in the given open-set lattice".into(),
        ));
    }
    if !f.certified().joins {
        return Err(LatticeError::NotJoinPreserving);
    }
    if !is_sober(&target.space).verdict {
        return Err(LatticeError::NotSober);
    }
    let lat = f.source();
    let space = &target.space;
    let point_map: Vec<usize> = space
        .points()
        .map(|x| {
            lat.join_all(
                lat.elements()
                    .filter(|&l| !target.opens[f.apply(l)].contains(x)),
            )
        })
        .collect();
    let g = SpaceMap::continuous(space.clone(), fspcnt(lat), point_map)
        .expect("the factorization through the semipoint spectrum is continuous");
    for l in lat.elements() {
        let pulled = Mask::from_indices(
            space.len(),
            space.points().filter(|&x| !lat.leq(l, g.apply(x))),
        );
        assert_eq!(
            pulled,
            target.opens[f.apply(l)],
            "the universal datum pulls back to the given map"
        );
    }
    Ok(g)
}

/// Exhaustively confirms that [`factor_through_fspcnt`] returns the only
/// continuous point map whose pullback of the universal datum is `f`. The
/// candidate count is `|L|^|X|`, so it is guarded by `limit`.
pub fn factorization_is_unique(
    f: &LatticeMap,
    target: &OpenSetLattice,
    limit: usize,
) -> Result<bool> {
    let g = factor_through_fspcnt(f, target)?;
    let lat = f.source();
    let space = &target.space;
    let total = (lat.len() as u128)
        .checked_pow(space.len() as u32)
        .unwrap_or(u128::MAX);
    if total > limit as u128 {
        return Err(LatticeError::SizeGuard {
            size: usize::try_from(total).unwrap_or(usize::MAX),
            limit,
        });
    }
    let fsp = fspcnt(lat);
    let mut candidate = vec![0usize; space.len()];
    let mut matches = 0usize;
    let mut found_g = false;
    loop {
        let continuous = SpaceMap::continuous(space.clone(), fsp.clone(), candidate.clone());
        if let Ok(map) = continuous {
            let pulls_back = lat.elements().all(|l| {
                let pulled = Mask::from_indices(
                    space.len(),
                    space.points().filter(|&x| !lat.leq(l, map.apply(x))),
                );
                pulled == target.opens[f.apply(l)]
            });
            if pulls_back {
                matches += 1;
                found_g |= candidate == g.point_map();
            }
        }
        // Advance the mixed-radix counter over all point maps.
        let mut i = 0;
        loop {
            if i == candidate.len() {
                return Ok(matches == 1 && found_g);
            }
            candidate[i] += 1;
            if candidate[i] < lat.len() {
                break;
            }
            candidate[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;
    use crate::props::is_distributive;

    #[test]
    fn free_frame_on_small_lattices() {
        let one = gallery::one().lattice;
        let d = free_frame_d(&one, 20).unwrap();
        assert_eq!(d.opens.lattice.len(), 2);

        // The free frame strictly enlarges even the two-element frame: the
        // subbase {∅, {0}} generates the three-chain ∅ ⊂ {0} ⊂ X and the
        // unit misses the top.
        let two = gallery::two().lattice;
        let d = free_frame_d(&two, 20).unwrap();
        assert_eq!(d.opens.lattice.len(), 3);
        assert!(!d.unit.image().contains(&d.opens.lattice.top()));

        let diamond = gallery::diamond().lattice;
        let d = free_frame_d(&diamond, 20).unwrap();
        assert_eq!(d.opens.lattice.len(), 10);

        assert!(matches!(
            free_frame_d(&diamond, 3),
            Err(LatticeError::SizeGuard { size: 5, limit: 3 })
        ));
    }

    #[test]
    fn free_frame_unit_embeds_the_order_and_lands_in_a_frame() {
        for name in gallery::names() {
            let lat = gallery::by_name(name).unwrap().lattice;
            let d = free_frame_d(&lat, 20).unwrap();
            assert!(is_distributive(&d.opens.lattice).verdict, "{name}");
            for a in lat.elements() {
                for b in lat.elements() {
                    assert_eq!(
                        lat.leq(a, b),
                        d.opens.lattice.leq(d.unit.apply(a), d.unit.apply(b)),
                        "{name}: the unit reflects and preserves order"
                    );
                }
            }
        }
    }

    #[test]
    fn omega_replays_the_three_worked_spectra() {
        let diamond = gallery::diamond().lattice;
        assert_eq!(omega(&diamond).opens.lattice.len(), 1);

        let pentagon = gallery::pentagon().lattice;
        let o = omega(&pentagon);
        assert_eq!(o.opens.lattice.len(), 4);
        assert!(o
            .opens
            .lattice
            .is_isomorphic_to(&gallery::by_name("boolean2").unwrap().lattice));
        let m = pentagon.index_of("m").unwrap();
        let n = pentagon.index_of("n").unwrap();
        assert_eq!(o.unit.apply(m), o.unit.apply(n), "m and n collapse");

        let stem = gallery::stem_diamond().lattice;
        assert_eq!(omega(&stem).opens.lattice.len(), 2);
    }

    #[test]
    fn omega_unit_is_confluent_and_functorial() {
        let b3 = gallery::by_name("boolean3").unwrap().lattice;
        let o = omega(&b3);
        assert!(o.unit.is_confluent());

        // Ω of the identity is the identity.
        let id = LatticeMap::checked(
            b3.clone(),
            b3.clone(),
            b3.elements().collect(),
            MapFlags::ALL,
        )
        .unwrap();
        let oid = omega_map(&id).unwrap();
        for u in o.opens.lattice.elements() {
            assert_eq!(oid.apply(u), u);
        }

        let squash = LatticeMap::checked(
            gallery::two().lattice,
            gallery::two().lattice,
            vec![0, 1],
            MapFlags::JOINS,
        )
        .unwrap();
        assert!(matches!(
            omega_map(&squash),
            Err(LatticeError::NotApplicable(_))
        ));
    }

    #[test]
    fn classification_splits_along_distributivity() {
        for name in gallery::names() {
            let lat = gallery::by_name(name).unwrap().lattice;
            let distributive = is_distributive(&lat).verdict;
            match classify(&lat) {
                Classification::Isomorphism { .. } => assert!(distributive, "{name}"),
                Classification::NotInjective { a, b, .. } => {
                    assert!(!distributive, "{name}");
                    let o = omega(&lat);
                    assert_eq!(o.unit.apply(a), o.unit.apply(b), "{name}");
                }
            }
        }
    }

    #[test]
    fn classification_witnesses_on_the_worked_examples() {
        let pentagon = gallery::pentagon().lattice;
        match classify(&pentagon) {
            Classification::NotInjective { a, b, .. } => {
                assert_eq!(
                    (pentagon.label(a), pentagon.label(b)),
                    ("m", "n"),
                    "the least collapsed pair"
                );
            }
            other => panic!("pentagon is not distributive: {other:?}"),
        }

        let b3 = gallery::by_name("boolean3").unwrap().lattice;
        match classify(&b3) {
            Classification::Isomorphism { inverse, .. } => assert_eq!(inverse.len(), b3.len()),
            other => panic!("Boolean(3) is distributive: {other:?}"),
        }
    }

    #[test]
    fn triangle_identity_for_the_point_spectrum_adjunction() {
        for name in ["two", "boolean3", "chain4", "k_times_k"] {
            let lat = gallery::by_name(name).unwrap().lattice;
            let o = omega(&lat);
            // Apply Ω to the unit, then collapse with the counit of the
            // frame ΩL — the inverse produced by classification, since an
            // open-set lattice is distributive.
            let o_eta = omega_map(&o.unit).unwrap();
            match classify(&o.opens.lattice) {
                Classification::Isomorphism { inverse, .. } => {
                    for u in o.opens.lattice.elements() {
                        assert_eq!(inverse[o_eta.apply(u)], u, "{name}");
                    }
                }
                other => panic!("{name}: opens form a spatial frame: {other:?}"),
            }
        }
    }

    #[test]
    fn support_data_round_trip_through_maps() {
        // The universal datum: the unit of the free frame read as a datum on
        // the semipoint spectrum assigns U_l to l.
        let pentagon = gallery::pentagon().lattice;
        let d = free_frame_d(&pentagon, 20).unwrap();
        let sd = support_from_map(&d.unit, &d.opens).unwrap();
        for l in pentagon.elements() {
            assert_eq!(*sd.assigned(l), pentagon.up_set(l).complement());
        }
        let back = map_from_support(&sd);
        assert_eq!(back.image(), d.unit.image());
        let again = support_from_map(&back, &d.opens).unwrap();
        assert_eq!(again, sd);

        // The constant-empty assignment is a datum and corresponds to the
        // constant-bottom map.
        let zero = SupportDatum::new(
            pentagon.clone(),
            d.opens.space.clone(),
            vec![Mask::empty(pentagon.len()); pentagon.len()],
        )
        .unwrap();
        let phi = map_from_support(&zero);
        assert!(phi.image().iter().all(|&u| u == phi.target().bottom()));

        // The point-spectrum unit of the pentagon forces σ(m) = σ(n).
        let o = omega(&pentagon);
        let sd = support_from_map(&o.unit, &o.opens).unwrap();
        let m = pentagon.index_of("m").unwrap();
        let n = pentagon.index_of("n").unwrap();
        assert_eq!(sd.assigned(m), sd.assigned(n));
    }

    #[test]
    fn support_validation_rejects_join_incompatibility() {
        let diamond = gallery::diamond().lattice;
        let space = crate::spectra::spcnt(&gallery::by_name("k_times_k").unwrap().lattice);
        assert_eq!(space.len(), 2);
        let one_pt = Mask::from_indices(2, [0]);
        let assign = vec![
            Mask::empty(2),
            one_pt.clone(),
            one_pt.clone(),
            one_pt,
            Mask::full(2),
        ];
        assert_eq!(
            SupportDatum::new(diamond.clone(), space.clone(), assign),
            Err(LatticeError::SupportViolation {
                x: "1".into(),
                a: "l".into(),
                b: "m".into(),
            })
        );

        let bad_bottom = vec![Mask::full(2); 5];
        assert!(matches!(
            SupportDatum::new(diamond, space, bad_bottom),
            Err(LatticeError::Mismatch(_))
        ));
    }

    #[test]
    fn factorization_through_the_semipoint_spectrum() {
        // The unit of the free frame factors through the identity.
        let pentagon = gallery::pentagon().lattice;
        let d = free_frame_d(&pentagon, 20).unwrap();
        let g = factor_through_fspcnt(&d.unit, &d.opens).unwrap();
        for x in 0..pentagon.len() {
            assert_eq!(g.apply(x), x);
        }

        // The point-spectrum unit factors by sending each of the two
        // discrete points to the element it is a point of.
        let o = omega(&pentagon);
        let g = factor_through_fspcnt(&o.unit, &o.opens).unwrap();
        let labels: Vec<&str> = g
            .source()
            .points()
            .map(|x| pentagon.label(g.apply(x)))
            .collect();
        assert_eq!(labels, ["l", "n"]);
        assert_eq!(
            factorization_is_unique(&o.unit, &o.opens, 1_000_000),
            Ok(true)
        );

        // The empty space factors by the empty map.
        let diamond = gallery::diamond().lattice;
        let od = omega(&diamond);
        assert_eq!(od.opens.space.len(), 0);
        let unit_flags = LatticeMap::checked(
            diamond.clone(),
            od.opens.lattice.clone(),
            od.unit.image().to_vec(),
            MapFlags::JOINS,
        )
        .unwrap();
        let g = factor_through_fspcnt(&unit_flags, &od.opens).unwrap();
        assert!(g.point_map().is_empty());
        assert_eq!(
            factorization_is_unique(&unit_flags, &od.opens, 1_000_000),
            Ok(true)
        );
    }

    #[test]
    fn factorization_requires_a_join_certificate_and_a_sober_space() {
        let two = gallery::two().lattice;
        let o = omega(&two);
        let uncertified = LatticeMap::checked(
            two.clone(),
            o.opens.lattice.clone(),
            o.unit.image().to_vec(),
            MapFlags::NONE,
        )
        .unwrap();
        assert_eq!(
            factor_through_fspcnt(&uncertified, &o.opens),
            Err(LatticeError::NotJoinPreserving)
        );

        // An indiscrete two-point space is not sober.
        let indiscrete = FiniteSpace::new(
            vec!["a".into(), "b".into()],
            vec![Mask::empty(2), Mask::full(2)],
        )
        .unwrap();
        let olat = open_set_lattice(&indiscrete);
        let f = LatticeMap::checked(
            two.clone(),
            olat.lattice.clone(),
            vec![olat.lattice.bottom(), olat.lattice.top()],
            MapFlags::JOINS,
        )
        .unwrap();
        assert_eq!(
            factor_through_fspcnt(&f, &olat),
            Err(LatticeError::NotSober)
        );

        // With too small a guard the uniqueness sweep refuses to run.
        let o4 = omega(&gallery::by_name("chain4").unwrap().lattice);
        assert!(matches!(
            factorization_is_unique(&o4.unit, &o4.opens, 10),
            Err(LatticeError::SizeGuard { .. })
        ));
    }
}
