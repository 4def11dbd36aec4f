//! Finite topological spaces, stored by their full closed-set families in
//! canonical sorted order. At finite scale arbitrary unions and intersections
//! are finite ones, so a family closed under binary union and intersection
//! and containing the empty and full subsets is exactly a topology.

use crate::bits::Mask;
use crate::error::{LatticeError, Result};
use crate::lattice::{Elt, FiniteLattice};
use crate::props::PropertyReport;

/// A finite space: labeled points plus every closed subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSpace {
    labels: Vec<String>,
    /// All closed sets, sorted and deduplicated.
    closed: Vec<Mask>,
}

impl FiniteSpace {
    /// Canonicalizes and validates a closed-set family: it must contain the
    /// empty and full subsets and be closed under union and intersection.
    pub fn new(labels: Vec<String>, closed_sets: Vec<Mask>) -> Result<FiniteSpace> {
        let n = labels.len();
        let mut closed = closed_sets;
        closed.push(Mask::empty(n));
        closed.push(Mask::full(n));
        closed.sort();
        closed.dedup();
        if closed.iter().any(|c| c.universe() != n) {
            return Err(LatticeError::Mismatch(
                "closed set drawn from a different point set".into(),
            ));
        }
        for a in &closed {
            for b in &closed {
                for combined in [a.union(b), a.intersection(b)] {
                    if closed.binary_search(&combined).is_err() {
                        return Err(LatticeError::Mismatch(format!(
                            "family is not closed under union/intersection at {:?}",
                            combined.iter().collect::<Vec<_>>()
                        )));
                    }
                }
            }
        }
        Ok(FiniteSpace { labels, closed })
    }

    /// The space with no points and the one (empty) closed set.
    pub fn empty() -> FiniteSpace {
        FiniteSpace {
            labels: Vec::new(),
            closed: vec![Mask::empty(0)],
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, p: usize) -> &str {
        &self.labels[p]
    }

    pub fn points(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    /// Closed sets in canonical order.
    pub fn closed_sets(&self) -> &[Mask] {
        &self.closed
    }

    /// Open sets, as complements of the closed family, in canonical order.
    pub fn open_sets(&self) -> Vec<Mask> {
        let mut opens: Vec<Mask> = self.closed.iter().map(Mask::complement).collect();
        opens.sort();
        opens
    }

    pub fn is_closed(&self, set: &Mask) -> bool {
        self.closed.binary_search(set).is_ok()
    }

    /// Smallest closed set containing the given subset.
    pub fn closure(&self, set: &Mask) -> Mask {
        self.closed
            .iter()
            .filter(|c| set.is_subset(c))
            .fold(Mask::full(self.len()), |acc, c| acc.intersection(c))
    }

    pub fn closure_of_point(&self, p: usize) -> Mask {
        self.closure(&Mask::from_indices(self.len(), [p]))
    }

    /// Specialization: `x ~> y` iff `y` lies in the closure of `{x}`.
    pub fn specializes(&self, x: usize, y: usize) -> bool {
        self.closure_of_point(x).contains(y)
    }

    /// All specialization pairs `(x, y)` with `x ~> y` and `x != y`.
    pub fn specialization_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in self.points() {
            let cl = self.closure_of_point(x);
            for y in cl.iter() {
                if y != x {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Points whose singleton is closed.
    pub fn closed_points(&self) -> Vec<usize> {
        self.points()
            .filter(|&p| self.closure_of_point(p).count() == 1)
            .collect()
    }

    /// Points whose closure is the whole space.
    pub fn generic_points(&self) -> Vec<usize> {
        self.points()
            .filter(|&p| self.closure_of_point(p).count() == self.len())
            .collect()
    }

    /// Compares topologies, ignoring point labels.
    pub fn same_topology(&self, other: &FiniteSpace) -> bool {
        self.len() == other.len() && self.closed == other.closed
    }
}

/// Sobriety: every irreducible closed set must have exactly one generic
/// point. The witness lists the points of the least offending closed set.
pub fn is_sober(space: &FiniteSpace) -> PropertyReport {
    for c in space.closed_sets() {
        if c.is_empty() {
            continue;
        }
        let irreducible = !space.closed_sets().iter().any(|a| {
            space.closed_sets().iter().any(|b| {
                let a_c = a.intersection(c);
                let b_c = b.intersection(c);
                a_c != *c && b_c != *c && a_c.union(&b_c) == *c
            })
        });
        if !irreducible {
            continue;
        }
        let generics = c
            .iter()
            .filter(|&p| space.closure_of_point(p) == *c)
            .count();
        if generics != 1 {
            return PropertyReport {
                property: "sober",
                verdict: false,
                witness: Some(c.iter().collect()),
                notes: format!("irreducible closed set with {generics} generic points"),
            };
        }
    }
    PropertyReport {
        property: "sober",
        verdict: true,
        witness: None,
        notes: String::new(),
    }
}

/// A point map between finite spaces, verified continuous at construction:
/// the preimage of every closed set of the target is closed in the source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceMap {
    source: FiniteSpace,
    target: FiniteSpace,
    point_map: Vec<usize>,
}

impl SpaceMap {
    pub fn continuous(
        source: FiniteSpace,
        target: FiniteSpace,
        point_map: Vec<usize>,
    ) -> Result<SpaceMap> {
        if point_map.len() != source.len() || point_map.iter().any(|&q| q >= target.len()) {
            return Err(LatticeError::Mismatch(
                "point map does not match the spaces".into(),
            ));
        }
        for c in target.closed_sets() {
            let pre = Mask::from_indices(
                source.len(),
                source.points().filter(|&p| c.contains(point_map[p])),
            );
            if !source.is_closed(&pre) {
                return Err(LatticeError::Mismatch(format!(
                    "preimage of a closed set is not closed: {:?}",
                    c.iter().map(|q| target.label(q)).collect::<Vec<_>>()
                )));
            }
        }
        Ok(SpaceMap {
            source,
            target,
            point_map,
        })
    }

    pub fn source(&self) -> &FiniteSpace {
        &self.source
    }

    pub fn target(&self) -> &FiniteSpace {
        &self.target
    }

    pub fn apply(&self, p: usize) -> usize {
        self.point_map[p]
    }

    pub fn point_map(&self) -> &[usize] {
        &self.point_map
    }

    /// Whether this map and `inverse` exhibit mutually inverse continuous
    /// bijections. Both maps are already continuous by construction.
    pub fn is_homeomorphism_with(&self, inverse: &SpaceMap) -> bool {
        self.source == *inverse.target()
            && self.target == *inverse.source()
            && self
                .source
                .points()
                .all(|p| inverse.apply(self.apply(p)) == p)
            && self
                .target
                .points()
                .all(|q| self.apply(inverse.apply(q)) == q)
    }
}

/// The complete lattice of open sets of a space, ordered by inclusion.
/// Elements are labeled by the point indices they contain, e.g. `{0,2}`, and
/// appear in canonical family order, so construction is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpenSetLattice {
    pub space: FiniteSpace,
    pub lattice: FiniteLattice,
    /// The open set backing each lattice element, parallel to element order.
    pub opens: Vec<Mask>,
}

impl OpenSetLattice {
    /// Index of an open set in element order.
    pub fn element_of(&self, open: &Mask) -> Option<Elt> {
        self.opens.iter().position(|o| o == open)
    }
}

/// Builds the open-set lattice of a space. Meets and joins are intersections
/// and unions, and the bounds are the empty and full open sets.
pub fn open_set_lattice(space: &FiniteSpace) -> OpenSetLattice {
    let opens = space.open_sets();
    let labels = opens
        .iter()
        .map(|o| {
            let mut s = String::from("{");
            for (k, p) in o.iter().enumerate() {
                if k > 0 {
                    s.push(',');
                }
                s.push_str(&p.to_string());
            }
            s.push('}');
            s
        })
        .collect();
    let lattice = FiniteLattice::from_leq(labels, |a, b| opens[a].is_subset(&opens[b]))
        .expect("open sets ordered by inclusion form a lattice");
    OpenSetLattice {
        space: space.clone(),
        lattice,
        opens,
    }
}

/// Generates a topology on `n_points` from a subbase of opens: closes the
/// subbase under finite intersections (the empty intersection being the full
/// set), then under arbitrary unions (the empty union being the empty set).
/// Returns the open-set family in canonical order.
pub fn generate_topology(n_points: usize, subbase: &[Mask]) -> Vec<Mask> {
    // Minimal neighbourhood of each point: the intersection of all subbasic
    // opens containing it. A set is open iff it contains the minimal
    // neighbourhood of each of its points, so opens are exactly the unions of
    // minimal neighbourhoods — finitely many, found by a closure walk.
    let min_nbhd: Vec<Mask> = (0..n_points)
        .map(|p| {
            subbase
                .iter()
                .filter(|u| u.contains(p))
                .fold(Mask::full(n_points), |acc, u| acc.intersection(u))
        })
        .collect();
    let mut opens = std::collections::BTreeSet::new();
    opens.insert(Mask::empty(n_points));
    let mut frontier = vec![Mask::empty(n_points)];
    while let Some(open) = frontier.pop() {
        for (p, nbhd) in min_nbhd.iter().enumerate() {
            if open.contains(p) {
                continue;
            }
            let bigger = open.union(nbhd);
            if opens.insert(bigger.clone()) {
                frontier.push(bigger);
            }
        }
    }
    opens.into_iter().collect()
}
