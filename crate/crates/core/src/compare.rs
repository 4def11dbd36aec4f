//! Comparisons between spectra: Hochster duality for finite sober spaces,
//! restriction of points along a designated bounded sublattice, the
//! join-prime spectrum, and the dual-topology spectrum of a semiprime-ideal
//! sublattice.
//!
//! A finite sober space is determined by its specialization order, so its
//! Hochster dual simply reverses that order; duality is an involution. Every
//! point of an ambient lattice restricts along a bounded sublattice
//! inclusion to a point of the sublattice, giving a continuous comparison
//! map between the spectra. The join-prime spectrum is the point spectrum of
//! the opposite lattice, and for distributive lattices it is homeomorphic to
//! the Hochster dual of the point spectrum.

use crate::bits::Mask;
use crate::error::{LatticeError, Result};
use crate::lattice::{Elt, FiniteLattice, LatticeMap};
use crate::props::is_distributive;
use crate::space::{generate_topology, is_sober, FiniteSpace, SpaceMap};
use crate::spectra::{join_primes, meet_primes, spcnt};

/// What a designated sublattice is meant to model. Operations that only make
/// sense for one reading check the tag and refuse otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SublatticeTag {
    /// Thick subcategories closed under tensoring, inside all thick ones.
    TensorIdeals,
    /// Semiprime thick tensor ideals, inside all thick ones.
    SemiprimeIdeals,
    /// The fixed points of a Serre-type automorphism.
    SerreFixed,
    Other,
}

impl std::fmt::Display for SublatticeTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SublatticeTag::TensorIdeals => write!(f, "tensor ideals"),
            SublatticeTag::SemiprimeIdeals => write!(f, "semiprime ideals"),
            SublatticeTag::SerreFixed => write!(f, "fixed sublattice"),
            SublatticeTag::Other => write!(f, "other"),
        }
    }
}

/// A bounded sublattice of an ambient lattice, with the fully certified
/// inclusion map and a tag recording what the sublattice models.
#[derive(Debug, Clone)]
pub struct SublatticeDesignation {
    ambient: FiniteLattice,
    inclusion: LatticeMap,
    tag: SublatticeTag,
}

impl SublatticeDesignation {
    /// Designates the bounded sublattice spanned by `elements` (indices into
    /// the ambient lattice). Fails if the subset misses a bound or is not
    /// closed under meet and join.
    pub fn new(
        ambient: &FiniteLattice,
        elements: &[Elt],
        tag: SublatticeTag,
    ) -> Result<SublatticeDesignation> {
        let (_, inclusion) = ambient.bounded_sublattice(elements)?;
        Ok(SublatticeDesignation {
            ambient: ambient.clone(),
            inclusion,
            tag,
        })
    }

    pub fn ambient(&self) -> &FiniteLattice {
        &self.ambient
    }

    pub fn sublattice(&self) -> &FiniteLattice {
        self.inclusion.source()
    }

    pub fn inclusion(&self) -> &LatticeMap {
        &self.inclusion
    }

    pub fn tag(&self) -> SublatticeTag {
        self.tag
    }
}

/// The Hochster dual of a finite sober space: same points, specialization
/// order reversed. The closed sets of the dual are generated by the sets of
/// generizations of each point, which makes the construction an involution.
pub fn hochster_dual(space: &FiniteSpace) -> Result<FiniteSpace> {
    if !is_sober(space).verdict {
        return Err(LatticeError::NotSober);
    }
    let n = space.len();
    let generizations: Vec<Mask> = space
        .points()
        .map(|y| Mask::from_indices(n, space.points().filter(|&x| space.specializes(x, y))))
        .collect();
    FiniteSpace::new(
        space.labels().to_vec(),
        generate_topology(n, &generizations),
    )
}

/// The restriction comparison along a designated sublattice: each point `p`
/// of the ambient lattice restricts to the sublattice point with zero set
/// `{ s : ι(s) ≤ p }`, giving a continuous map from the ambient point
/// spectrum to the sublattice's. The sublattice spectrum itself is reached
/// through `balmer_space`, which carries the Hochster-dual (support-style)
/// topology on the same points, so `comparison` lands in its dual.
#[derive(Debug, Clone)]
pub struct BalmerComparison {
    /// The sublattice point set under the dual topology.
    pub balmer_space: FiniteSpace,
    /// Restriction, from the ambient point spectrum to the sublattice point
    /// spectrum (the Hochster dual of `balmer_space`).
    pub comparison: SpaceMap,
}

/// Restricts every ambient point along the inclusion of a designated
/// sublattice. The restricted zero set is down-closed, join-closed, and
/// meet-reflecting because the inclusion is fully certified, so its largest
/// element is meet-prime in the sublattice; `RestrictionNotPoint` guards
/// that reasoning rather than ever firing on a certified designation.
pub fn balmer_comparison(d: &SublatticeDesignation) -> Result<BalmerComparison> {
    let ambient = d.ambient();
    let sub = d.sublattice();
    let sub_primes = meet_primes(sub);
    let mut point_map = Vec::new();
    for &p in &meet_primes(ambient) {
        let restricted = sub.join_all(
            sub.elements()
                .filter(|&s| ambient.leq(d.inclusion.apply(s), p)),
        );
        match sub_primes.iter().position(|&q| q == restricted) {
            Some(index) => point_map.push(index),
            None => return Err(LatticeError::RestrictionNotPoint),
        }
    }
    let target = spcnt(sub);
    let comparison = SpaceMap::continuous(spcnt(ambient), target.clone(), point_map)
        .expect("restriction along a bounded inclusion is monotone, hence continuous");
    let balmer_space = hochster_dual(&target).expect("point spectra are sober");
    Ok(BalmerComparison {
        balmer_space,
        comparison,
    })
}

/// The join-prime spectrum: points are the join-prime elements, and the
/// basic closed sets `Z_x = { j join-prime : j ≤ x }` are exactly the basic
/// closed sets of the point spectrum of the opposite lattice, so that is how
/// the space is built.
pub fn mspec(lat: &FiniteLattice) -> FiniteSpace {
    spcnt(&lat.opposite())
}

/// The mutually inverse continuous bijections realizing the join-prime
/// spectrum as the Hochster dual of the point spectrum.
#[derive(Debug, Clone)]
pub struct MatsuiComparison {
    /// `j ↦ ⋁ { x : j ≰ x }`, from [`mspec`] to the dual point spectrum.
    pub forward: SpaceMap,
    /// `p ↦ ⋀ { x : x ≰ p }`, back again.
    pub backward: SpaceMap,
}

/// Builds the bijection between join-primes and meet-primes of a
/// distributive lattice and verifies it is a homeomorphism
/// `mspec(L) ≅ hochster_dual(spcnt(L))`. The verification cannot fail for a
/// distributive lattice; a failure is reported as `Mismatch` with the
/// offending prime named.
pub fn matsui_comparison(lat: &FiniteLattice) -> Result<MatsuiComparison> {
    if !is_distributive(lat).verdict {
        return Err(LatticeError::NotDistributive);
    }
    let jp = join_primes(lat);
    let mp = meet_primes(lat);
    let source = mspec(lat);
    let dual = hochster_dual(&spcnt(lat))?;
    let mut forward = Vec::with_capacity(jp.len());
    for &j in &jp {
        let p = lat.join_all(lat.elements().filter(|&x| !lat.leq(j, x)));
        match mp.iter().position(|&q| q == p) {
            Some(index) => forward.push(index),
            None => {
                return Err(LatticeError::Mismatch(format!(
                    "join-prime {:?} does not land on a meet-prime",
                    lat.label(j)
                )))
            }
        }
    }
    let mut backward = Vec::with_capacity(mp.len());
    for &p in &mp {
        let j = lat.meet_all(lat.elements().filter(|&x| !lat.leq(x, p)));
        match jp.iter().position(|&q| q == j) {
            Some(index) => backward.push(index),
            None => {
                return Err(LatticeError::Mismatch(format!(
                    "meet-prime {:?} does not land on a join-prime",
                    lat.label(p)
                )))
            }
        }
    }
    let forward = SpaceMap::continuous(source.clone(), dual.clone(), forward)?;
    let backward = SpaceMap::continuous(dual, source, backward)?;
    if !forward.is_homeomorphism_with(&backward) {
        return Err(LatticeError::Mismatch(
            "the prime bijection is not a homeomorphism".into(),
        ));
    }
    Ok(MatsuiComparison { forward, backward })
}

/// The dual-topology spectrum of a semiprime-ideal sublattice: the
/// sublattice point set under the dual topology, with the restriction
/// comparison transported to the duals on both sides.
#[derive(Debug, Clone)]
pub struct NcDualSpectrum {
    /// The sublattice points under the Hochster-dual topology.
    pub space: FiniteSpace,
    /// Restriction, from the dual of the ambient point spectrum.
    pub comparison: SpaceMap,
    /// Degeneracies absorbed by finiteness, recorded for the caller.
    pub notes: String,
}

/// Computes the dual-topology spectrum of a designation tagged as semiprime
/// ideals; any other tag is refused with `WrongTag`.
pub fn nc_dual_spectrum(d: &SublatticeDesignation) -> Result<NcDualSpectrum> {
    if d.tag() != SublatticeTag::SemiprimeIdeals {
        return Err(LatticeError::WrongTag {
            found: d.tag().to_string(),
            needs: SublatticeTag::SemiprimeIdeals.to_string(),
        });
    }
    let b = balmer_comparison(d)?;
    let dual_ambient = hochster_dual(b.comparison.source())?;
    let comparison = SpaceMap::continuous(
        dual_ambient,
        b.balmer_space.clone(),
        b.comparison.point_map().to_vec(),
    )
    .expect("restriction is monotone, hence continuous for the dual topologies");
    Ok(NcDualSpectrum {
        space: b.balmer_space,
        comparison,
        notes: "every element of a finite lattice is compact, so the inclusion preserves \
                finite presentation and the comparison is defined on every point"
            .into(),
    })
}
