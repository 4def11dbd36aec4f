//! Points of a finite lattice and the two spectra built from them.
//!
//! A two-valued map out of a lattice is determined by its zero set. Maps
//! preserving arbitrary joins (semipoints) have principal down-sets as zero
//! sets, one per element, and carry the topology whose closed sets are the
//! up-closed subsets. Maps preserving joins, finite meets, and top (points)
//! have zero sets `[0, p]` for `p` meet-prime, and carry the topology whose
//! closed sets are `Z_l = { p : l <= p }`. Exhaustive oracles enumerate all
//! candidate zero sets and back the fast paths in tests.

use crate::bits::Mask;
use crate::error::{LatticeError, Result};
use crate::lattice::{Elt, FiniteLattice};
use crate::space::{generate_topology, FiniteSpace, SpaceMap};

/// Which structure a two-valued map is certified to preserve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointKind {
    /// Preserves arbitrary joins.
    Semipoint,
    /// Preserves arbitrary joins, finite meets, and top.
    Point,
}

/// A two-valued map out of a lattice, stored by its zero set together with
/// the element the zero set is the principal down-set of.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoPoint {
    pub kind: PointKind,
    /// The largest element sent to zero; the zero set is `[0, element]`.
    pub element: Elt,
    pub zero_set: Mask,
}

impl TwoPoint {
    /// Value of the map at `x`: `false` on the zero set, `true` off it.
    pub fn eval(&self, x: Elt) -> bool {
        !self.zero_set.contains(x)
    }

    /// Replays the defining conditions against the lattice.
    pub fn is_valid_for(&self, lat: &FiniteLattice) -> bool {
        if self.zero_set != lat.down_set(self.element) {
            return false;
        }
        let z = &self.zero_set;
        let join_closed = lat.elements().all(|a| {
            lat.elements()
                .all(|b| !(z.contains(a) && z.contains(b)) || z.contains(lat.join(a, b)))
        });
        let down_closed = lat
            .elements()
            .all(|a| !z.contains(a) || lat.down_set(a).is_subset(z));
        let base = z.contains(lat.bottom()) && join_closed && down_closed;
        match self.kind {
            PointKind::Semipoint => base,
            PointKind::Point => {
                base && !z.contains(lat.top())
                    && lat.elements().all(|a| {
                        lat.elements()
                            .all(|b| !z.contains(lat.meet(a, b)) || z.contains(a) || z.contains(b))
                    })
            }
        }
    }
}

/// Elements `p != 1` with `a ∧ b <= p` forcing `a <= p` or `b <= p`, in input
/// order. Scans all pairs for each candidate.
pub fn meet_primes(lat: &FiniteLattice) -> Vec<Elt> {
    lat.elements()
        .filter(|&p| {
            p != lat.top()
                && lat.elements().all(|a| {
                    lat.elements()
                        .all(|b| !lat.leq(lat.meet(a, b), p) || lat.leq(a, p) || lat.leq(b, p))
                })
        })
        .collect()
}

/// Elements `j != 0` with `j <= a ∨ b` forcing `j <= a` or `j <= b`; the
/// order-dual of [`meet_primes`].
pub fn join_primes(lat: &FiniteLattice) -> Vec<Elt> {
    lat.elements()
        .filter(|&j| {
            j != lat.bottom()
                && lat.elements().all(|a| {
                    lat.elements()
                        .all(|b| !lat.leq(j, lat.join(a, b)) || lat.leq(j, a) || lat.leq(j, b))
                })
        })
        .collect()
}

/// The join-preserving two-valued maps: one per element, with zero set the
/// principal down-set. The count always equals the size of the lattice.
pub fn semipoints(lat: &FiniteLattice) -> Vec<TwoPoint> {
    lat.elements()
        .map(|x| TwoPoint {
            kind: PointKind::Semipoint,
            element: x,
            zero_set: lat.down_set(x),
        })
        .collect()
}

/// The maps preserving joins, finite meets, and top: one per meet-prime.
pub fn points(lat: &FiniteLattice) -> Vec<TwoPoint> {
    meet_primes(lat)
        .into_iter()
        .map(|p| TwoPoint {
            kind: PointKind::Point,
            element: p,
            zero_set: lat.down_set(p),
        })
        .collect()
}

fn zero_set_candidates(lat: &FiniteLattice, limit: usize) -> Result<Vec<Mask>> {
    let n = lat.len();
    if n > limit {
        return Err(LatticeError::SizeGuard { size: n, limit });
    }
    Ok((0u64..1 << n)
        .map(|bits| Mask::from_indices(n, (0..n).filter(|i| bits >> i & 1 == 1)))
        .collect())
}

/// Brute-force enumeration of semipoints over all two-valued assignments,
/// keeping those whose zero set contains bottom and is closed downward and
/// under binary joins. Agrees with [`semipoints`] and exists to prove it.
pub fn semipoints_oracle(lat: &FiniteLattice, limit: usize) -> Result<Vec<TwoPoint>> {
    let mut found: Vec<TwoPoint> = zero_set_candidates(lat, limit)?
        .into_iter()
        .filter(|z| {
            z.contains(lat.bottom())
                && z.iter().all(|a| lat.down_set(a).is_subset(z))
                && z.iter()
                    .all(|a| z.iter().all(|b| z.contains(lat.join(a, b))))
        })
        .map(|z| TwoPoint {
            kind: PointKind::Semipoint,
            element: lat.join_all(z.iter()),
            zero_set: z,
        })
        .collect();
    found.sort_by_key(|p| p.element);
    Ok(found)
}

/// Brute-force enumeration of points: semipoint zero sets avoiding top whose
/// complement is closed under meets. Agrees with [`points`].
pub fn points_oracle(lat: &FiniteLattice, limit: usize) -> Result<Vec<TwoPoint>> {
    let mut found: Vec<TwoPoint> = zero_set_candidates(lat, limit)?
        .into_iter()
        .filter(|z| {
            z.contains(lat.bottom())
                && !z.contains(lat.top())
                && z.iter().all(|a| lat.down_set(a).is_subset(z))
                && z.iter()
                    .all(|a| z.iter().all(|b| z.contains(lat.join(a, b))))
                && lat.elements().all(|a| {
                    lat.elements()
                        .all(|b| !z.contains(lat.meet(a, b)) || z.contains(a) || z.contains(b))
                })
        })
        .map(|z| TwoPoint {
            kind: PointKind::Point,
            element: lat.join_all(z.iter()),
            zero_set: z,
        })
        .collect();
    found.sort_by_key(|p| p.element);
    Ok(found)
}

/// The semipoint spectrum: one point per lattice element, closed sets the
/// up-closed subsets. The closure of a point is its principal up-set, so
/// specialization agrees with the lattice order.
pub fn fspcnt(lat: &FiniteLattice) -> FiniteSpace {
    let n = lat.len();
    let up_sets: Vec<Mask> = lat.elements().map(|x| lat.up_set(x)).collect();
    let closed = generate_topology(n, &up_sets);
    FiniteSpace::new(lat.labels().to_vec(), closed)
        .expect("up-closed subsets form a closed-set family")
}

/// The point spectrum: one point per meet-prime, closed sets
/// `Z_l = { p : l <= p }` for `l` running over the lattice.
pub fn spcnt(lat: &FiniteLattice) -> FiniteSpace {
    let primes = meet_primes(lat);
    let labels = primes.iter().map(|&p| lat.label(p).to_owned()).collect();
    let closed = lat
        .elements()
        .map(|l| {
            Mask::from_indices(
                primes.len(),
                primes
                    .iter()
                    .enumerate()
                    .filter(|&(_, &p)| lat.leq(l, p))
                    .map(|(i, _)| i),
            )
        })
        .collect();
    FiniteSpace::new(labels, closed).expect("prime up-sets form a closed-set family")
}

/// The inclusion of the point spectrum into the semipoint spectrum: each
/// meet-prime is in particular an element. Continuity is certified by
/// construction of the returned map.
pub fn comparison_map(lat: &FiniteLattice) -> SpaceMap {
    let primes = meet_primes(lat);
    SpaceMap::continuous(spcnt(lat), fspcnt(lat), primes)
        .expect("primes include continuously into the semipoint spectrum")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;

    #[test]
    fn prime_scans_match_the_worked_examples() {
        let d = gallery::diamond().lattice;
        assert!(meet_primes(&d).is_empty());
        assert!(join_primes(&d).is_empty());

        let p = gallery::pentagon().lattice;
        let mp: Vec<&str> = meet_primes(&p).iter().map(|&x| p.label(x)).collect();
        assert_eq!(mp, ["l", "n"]);
        let jp: Vec<&str> = join_primes(&p).iter().map(|&x| p.label(x)).collect();
        assert_eq!(jp, ["m", "l"]);

        let s = gallery::stem_diamond().lattice;
        assert_eq!(meet_primes(&s), vec![s.bottom()]);

        let two = gallery::two().lattice;
        assert_eq!(meet_primes(&two), vec![0]);
        assert_eq!(join_primes(&two), vec![1]);

        let one = gallery::one().lattice;
        assert!(meet_primes(&one).is_empty());
        assert!(join_primes(&one).is_empty());
    }

    #[test]
    fn chain_primes_are_everything_but_the_bound() {
        let c = gallery::chain(4, 20).unwrap().lattice;
        assert_eq!(meet_primes(&c), vec![0, 1, 2]);
        assert_eq!(join_primes(&c), vec![1, 2, 3]);
    }

    #[test]
    fn one_semipoint_per_element() {
        for entry in [gallery::diamond(), gallery::pentagon(), gallery::one()] {
            let lat = entry.lattice;
            let sp = semipoints(&lat);
            assert_eq!(sp.len(), lat.len());
            for p in &sp {
                assert!(p.is_valid_for(&lat));
            }
        }
    }

    #[test]
    fn oracles_agree_with_fast_paths() {
        for entry in [
            gallery::diamond(),
            gallery::pentagon(),
            gallery::stem_diamond(),
            gallery::k_times_k(),
            gallery::preprojective_a2(),
        ] {
            let lat = entry.lattice;
            assert_eq!(semipoints_oracle(&lat, 20).unwrap(), semipoints(&lat));
            assert_eq!(points_oracle(&lat, 20).unwrap(), points(&lat));
        }
        let d = gallery::diamond().lattice;
        assert!(matches!(
            points_oracle(&d, 3),
            Err(LatticeError::SizeGuard { size: 5, limit: 3 })
        ));
    }

    #[test]
    fn pentagon_points_as_computed_by_hand() {
        let p = gallery::pentagon().lattice;
        let pts = points(&p);
        assert_eq!(pts.len(), 2);
        // Zero sets {0, l} and {0, m, n} as two-valued maps.
        assert!(pts[0].eval(p.index_of("m").unwrap()));
        assert!(!pts[0].eval(p.index_of("l").unwrap()));
        assert!(!pts[1].eval(p.index_of("m").unwrap()));
        assert!(pts[1].eval(p.index_of("l").unwrap()));
    }

    #[test]
    fn fspcnt_closed_sets_are_the_up_closed_subsets() {
        let d = gallery::diamond().lattice;
        let x = fspcnt(&d);
        assert_eq!(x.len(), 5);
        // Up-closed subsets of the diamond: mirror the 10 down-sets.
        assert_eq!(x.closed_sets().len(), 10);
        for l in d.elements() {
            assert_eq!(
                x.closure_of_point(l),
                d.up_set(l),
                "closure of a point is its principal up-set"
            );
        }
        // Specialization agrees with the lattice order.
        for a in d.elements() {
            for b in d.elements() {
                assert_eq!(x.specializes(a, b), d.leq(a, b));
            }
        }
    }

    #[test]
    fn spcnt_of_the_pentagon_is_two_discrete_points() {
        let x = spcnt(&gallery::pentagon().lattice);
        assert_eq!(x.len(), 2);
        assert_eq!(x.labels(), ["l", "n"]);
        assert_eq!(x.closed_sets().len(), 4);

        let d = spcnt(&gallery::diamond().lattice);
        assert!(d.is_empty());
        assert_eq!(d.closed_sets().len(), 1);
    }

    #[test]
    fn comparison_sends_primes_to_themselves() {
        let lat = gallery::pentagon().lattice;
        let cmp = comparison_map(&lat);
        assert_eq!(cmp.point_map(), meet_primes(&lat).as_slice());
        assert_eq!(cmp.source().len(), 2);
        assert_eq!(cmp.target().len(), 5);

        // Empty source: nothing to map, still continuous.
        let cmp = comparison_map(&gallery::diamond().lattice);
        assert!(cmp.source().is_empty());
    }
}
