//! Finite bounded lattices and the structure-preserving maps between them.
//!
//! A [`FiniteLattice`] stores its elements in input order together with the
//! full order relation and meet/join tables, so every operation downstream of
//! construction is table lookup. Finiteness means the lattice is complete:
//! arbitrary meets and joins are folds of the binary tables, with the empty
//! meet equal to the top element and the empty join equal to the bottom.

use crate::bits::Mask;
use crate::error::{BinOp, BoundKind, Flag, LatticeError, Result};

/// Index of an element in a lattice's input order.
pub type Elt = usize;

/// Default bound for operations whose oracles enumerate subsets.
pub const DEFAULT_SIZE_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    labels: Vec<String>,
    /// Row-major `n on n`: `leq[a * n + b]` holds iff `a <= b`.
    leq: Vec<bool>,
    meet: Vec<Elt>,
    join: Vec<Elt>,
    bottom: Elt,
    top: Elt,
}

impl FiniteLattice {
    /// Builds a lattice from labels and a cover relation given by label pairs
    /// `(lower, upper)`. The order is the reflexive-transitive closure of the
    /// covers; construction fails if that closure is not a lattice.
    pub fn from_covers<'a>(
        labels: impl IntoIterator<Item = &'a str>,
        covers: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<FiniteLattice> {
        let labels: Vec<String> = labels.into_iter().map(str::to_owned).collect();
        if labels.is_empty() {
            return Err(LatticeError::EmptyElements);
        }
        let mut index = std::collections::HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.as_str(), i).is_some() {
                return Err(LatticeError::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (lo, hi) in covers {
            let a = *index
                .get(lo)
                .ok_or_else(|| LatticeError::UnknownLabel(lo.to_owned()))?;
            let b = *index
                .get(hi)
                .ok_or_else(|| LatticeError::UnknownLabel(hi.to_owned()))?;
            leq[a * n + b] = true;
        }
        // Reflexive-transitive closure.
        for k in 0..n {
            for a in 0..n {
                if leq[a * n + k] {
                    for b in 0..n {
                        if leq[k * n + b] {
                            leq[a * n + b] = true;
                        }
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if a != b && leq[a * n + b] && leq[b * n + a] {
                    return Err(LatticeError::CyclicCovers);
                }
            }
        }
        Self::from_leq(labels, |a, b| leq[a * n + b])
    }

    /// Builds a lattice from labels and an arbitrary order predicate. The
    /// relation is checked to be a partial order, and every pair of elements
    /// must have a unique greatest lower and least upper bound.
    pub fn from_leq(labels: Vec<String>, le: impl Fn(Elt, Elt) -> bool) -> Result<FiniteLattice> {
        if labels.is_empty() {
            return Err(LatticeError::EmptyElements);
        }
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(LatticeError::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len();
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                leq[a * n + b] = a == b || le(a, b);
            }
        }
        for a in 0..n {
            for b in 0..n {
                if a != b && leq[a * n + b] && leq[b * n + a] {
                    return Err(LatticeError::CyclicCovers);
                }
                for c in 0..n {
                    if leq[a * n + b] && leq[b * n + c] && !leq[a * n + c] {
                        return Err(LatticeError::Mismatch(format!(
                            "order relation is not transitive at ({:?}, {:?}, {:?})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }

        let bound = |a: Elt, b: Elt, lower: bool| -> Option<Elt> {
            let within = |c: Elt, x: Elt| {
                if lower {
                    leq[c * n + x]
                } else {
                    leq[x * n + c]
                }
            };
            let cands: Vec<Elt> = (0..n).filter(|&c| within(c, a) && within(c, b)).collect();
            cands
                .iter()
                .copied()
                .find(|&m| cands.iter().all(|&c| within(c, m)))
        };
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                meet[a * n + b] = bound(a, b, true).ok_or_else(|| LatticeError::NotALattice {
                    a: labels[a].clone(),
                    b: labels[b].clone(),
                    missing: BoundKind::Glb,
                })?;
                join[a * n + b] = bound(a, b, false).ok_or_else(|| LatticeError::NotALattice {
                    a: labels[a].clone(),
                    b: labels[b].clone(),
                    missing: BoundKind::Lub,
                })?;
            }
        }
        let mut bottom = 0;
        let mut top = 0;
        for x in 1..n {
            bottom = meet[bottom * n + x];
            top = join[top * n + x];
        }
        Ok(FiniteLattice {
            labels,
            leq,
            meet,
            join,
            bottom,
            top,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// A lattice is never empty; this exists for iterator-style call sites.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: Elt) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<Elt> {
        self.labels.iter().position(|l| l == label)
    }

    /// All element indices in input order.
    pub fn elements(&self) -> std::ops::Range<Elt> {
        0..self.len()
    }

    pub fn leq(&self, a: Elt, b: Elt) -> bool {
        self.leq[a * self.len() + b]
    }

    pub fn lt(&self, a: Elt, b: Elt) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn meet(&self, a: Elt, b: Elt) -> Elt {
        self.meet[a * self.len() + b]
    }

    pub fn join(&self, a: Elt, b: Elt) -> Elt {
        self.join[a * self.len() + b]
    }

    pub fn bottom(&self) -> Elt {
        self.bottom
    }

    pub fn top(&self) -> Elt {
        self.top
    }

    /// Meet of arbitrarily many elements; the empty meet is the top element.
    pub fn meet_all(&self, xs: impl IntoIterator<Item = Elt>) -> Elt {
        xs.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Join of arbitrarily many elements; the empty join is the bottom element.
    pub fn join_all(&self, xs: impl IntoIterator<Item = Elt>) -> Elt {
        xs.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// The principal down-set `[0, x]`.
    pub fn down_set(&self, x: Elt) -> Mask {
        Mask::from_indices(self.len(), self.elements().filter(|&y| self.leq(y, x)))
    }

    /// The principal up-set `[x, 1]`.
    pub fn up_set(&self, x: Elt) -> Mask {
        Mask::from_indices(self.len(), self.elements().filter(|&y| self.leq(x, y)))
    }

    /// Cover pairs `(a, b)` with `b` covering `a`, derived from the order on
    /// demand, in lexicographic input order.
    pub fn covers(&self) -> Vec<(Elt, Elt)> {
        let mut out = Vec::new();
        for a in self.elements() {
            for b in self.elements() {
                if self.lt(a, b) && !self.elements().any(|c| self.lt(a, c) && self.lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Direct product with elements in lexicographic `(self, other)` order and
    /// componentwise structure. Guarded because products grow quadratically.
    pub fn product(&self, other: &FiniteLattice, limit: usize) -> Result<FiniteLattice> {
        let size = self.len() * other.len();
        if size > limit {
            return Err(LatticeError::SizeGuard { size, limit });
        }
        let n2 = other.len();
        let labels = self
            .labels
            .iter()
            .flat_map(|a| other.labels.iter().map(move |b| format!("({a},{b})")))
            .collect();
        Self::from_leq(labels, |x, y| {
            self.leq(x / n2, y / n2) && other.leq(x % n2, y % n2)
        })
    }

    /// The opposite lattice: same elements, order reversed, meet and join
    /// exchanged. Applying it twice gives back the original lattice.
    pub fn opposite(&self) -> FiniteLattice {
        Self::from_leq(self.labels.clone(), |a, b| self.leq(b, a))
            .expect("reversing a lattice order yields a lattice")
    }

    /// Restricts the lattice to a subset that must contain both bounds and be
    /// closed under meet and join. Returns the induced lattice together with
    /// the inclusion map, certified for joins, finite meets, and both bounds.
    pub fn bounded_sublattice(&self, subset: &[Elt]) -> Result<(FiniteLattice, LatticeMap)> {
        let mut sub: Vec<Elt> = subset.to_vec();
        sub.sort_unstable();
        sub.dedup();
        if !sub.contains(&self.bottom) || !sub.contains(&self.top) {
            return Err(LatticeError::MissingBounds);
        }
        for &a in &sub {
            for &b in &sub {
                for (op, v) in [
                    (BinOp::Meet, self.meet(a, b)),
                    (BinOp::Join, self.join(a, b)),
                ] {
                    if !sub.contains(&v) {
                        return Err(LatticeError::NotClosed {
                            a: self.labels[a].clone(),
                            b: self.labels[b].clone(),
                            op,
                        });
                    }
                }
            }
        }
        let labels: Vec<String> = sub.iter().map(|&x| self.labels[x].clone()).collect();
        let induced = Self::from_leq(labels, |a, b| self.leq(sub[a], sub[b]))
            .expect("a closed subset inherits the lattice structure");
        let inclusion = LatticeMap::checked(induced.clone(), self.clone(), sub, MapFlags::ALL)
            .expect("inclusion of a closed subset preserves all structure");
        Ok((induced, inclusion))
    }

    /// Searches for three distinct elements that pairwise meet to bottom and
    /// pairwise join to top. Such a triple spans a copy of the diamond with
    /// the same bounds, which rules out any two-valued lattice map preserving
    /// joins, finite meets, and top. Returns the least triple in input order.
    pub fn find_diamond_obstruction(&self) -> Option<(Elt, Elt, Elt)> {
        for a in self.elements() {
            for b in a + 1..self.len() {
                if self.meet(a, b) != self.bottom || self.join(a, b) != self.top {
                    continue;
                }
                for c in b + 1..self.len() {
                    if self.meet(a, c) == self.bottom
                        && self.meet(b, c) == self.bottom
                        && self.join(a, c) == self.top
                        && self.join(b, c) == self.top
                    {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// Restricts to the elements fixed by a lattice automorphism, given as a
    /// permutation of element indices. The fixed elements always contain both
    /// bounds and are closed under meet and join.
    pub fn fixed_sublattice(&self, sigma: &[Elt]) -> Result<(FiniteLattice, LatticeMap)> {
        let n = self.len();
        if sigma.len() != n {
            return Err(LatticeError::Mismatch(format!(
                "permutation has {} entries for {} elements",
                sigma.len(),
                n
            )));
        }
        let mut hit = vec![false; n];
        for (a, &img) in sigma.iter().enumerate() {
            if img >= n || hit[img] {
                return Err(LatticeError::NotAutomorphism {
                    a: self.labels[a].clone(),
                    b: self.labels[a].clone(),
                });
            }
            hit[img] = true;
        }
        for a in 0..n {
            for b in 0..n {
                if self.leq(a, b) != self.leq(sigma[a], sigma[b]) {
                    return Err(LatticeError::NotAutomorphism {
                        a: self.labels[a].clone(),
                        b: self.labels[b].clone(),
                    });
                }
            }
        }
        let fixed: Vec<Elt> = (0..n).filter(|&x| sigma[x] == x).collect();
        self.bounded_sublattice(&fixed)
    }

    /// Exhaustive isomorphism test, pruned by order-theoretic signatures.
    /// Intended for the small lattices this crate works with.
    pub fn is_isomorphic_to(&self, other: &FiniteLattice) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let sig = |l: &FiniteLattice, x: Elt| {
            let down: Vec<usize> = l
                .elements()
                .filter(|&y| l.leq(y, x))
                .map(|y| l.elements().filter(|&z| l.leq(z, y)).count())
                .collect();
            let mut down = down;
            down.sort_unstable();
            let up = l.elements().filter(|&y| l.leq(x, y)).count();
            (down, up)
        };
        let sigs_a: Vec<_> = self.elements().map(|x| sig(self, x)).collect();
        let sigs_b: Vec<_> = other.elements().map(|x| sig(other, x)).collect();

        fn assign(
            a: &FiniteLattice,
            b: &FiniteLattice,
            sigs_a: &[(Vec<usize>, usize)],
            sigs_b: &[(Vec<usize>, usize)],
            map: &mut Vec<Option<Elt>>,
            used: &mut Vec<bool>,
            x: Elt,
        ) -> bool {
            if x == a.len() {
                return true;
            }
            for y in b.elements() {
                if used[y] || sigs_a[x] != sigs_b[y] {
                    continue;
                }
                let ok = (0..x).all(|x2| {
                    let y2 = map[x2].unwrap();
                    a.leq(x, x2) == b.leq(y, y2) && a.leq(x2, x) == b.leq(y2, y)
                });
                if ok {
                    map[x] = Some(y);
                    used[y] = true;
                    if assign(a, b, sigs_a, sigs_b, map, used, x + 1) {
                        return true;
                    }
                    map[x] = None;
                    used[y] = false;
                }
            }
            false
        }
        let mut map = vec![None; self.len()];
        let mut used = vec![false; self.len()];
        assign(self, other, &sigs_a, &sigs_b, &mut map, &mut used, 0)
    }
}

/// Preservation certificates attached to a [`LatticeMap`]. `joins` means all
/// joins including the empty one, so it subsumes `bottom`; `finite_meets`
/// covers binary (hence all non-empty finite) meets, with `top` kept separate
/// as the empty meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct MapFlags {
    pub joins: bool,
    pub finite_meets: bool,
    pub bottom: bool,
    pub top: bool,
}

impl MapFlags {
    pub const NONE: MapFlags = MapFlags {
        joins: false,
        finite_meets: false,
        bottom: false,
        top: false,
    };
    pub const ALL: MapFlags = MapFlags {
        joins: true,
        finite_meets: true,
        bottom: true,
        top: true,
    };
    /// What a map of complete join-semilattices must preserve.
    pub const JOINS: MapFlags = MapFlags {
        joins: true,
        finite_meets: false,
        bottom: true,
        top: false,
    };
    /// What a map of complete lattices must preserve.
    pub const COMPLETE: MapFlags = MapFlags::ALL;

    /// Set intersection of two certificates.
    pub fn and(self, other: MapFlags) -> MapFlags {
        MapFlags {
            joins: self.joins && other.joins,
            finite_meets: self.finite_meets && other.finite_meets,
            bottom: self.bottom && other.bottom,
            top: self.top && other.top,
        }
    }

    pub fn includes(self, other: MapFlags) -> bool {
        self.and(other) == other
    }
}

/// A monotone map between finite lattices carrying verified preservation
/// certificates. Construction via [`LatticeMap::checked`] is the only way to
/// obtain one, so a certificate can be trusted downstream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeMap {
    source: FiniteLattice,
    target: FiniteLattice,
    image: Vec<Elt>,
    certified: MapFlags,
}

impl LatticeMap {
    /// Verifies monotonicity and each requested flag exhaustively, returning
    /// the map stamped with exactly the requested certificate. Arbitrary-join
    /// preservation reduces to binary joins plus bottom in a finite lattice,
    /// which is the check performed.
    pub fn checked(
        source: FiniteLattice,
        target: FiniteLattice,
        image: Vec<Elt>,
        requested: MapFlags,
    ) -> Result<LatticeMap> {
        if image.len() != source.len() || image.iter().any(|&y| y >= target.len()) {
            return Err(LatticeError::Mismatch(format!(
                "image assigns {} of {} source elements",
                image.len(),
                source.len()
            )));
        }
        for a in source.elements() {
            for b in source.elements() {
                if source.leq(a, b) && !target.leq(image[a], image[b]) {
                    return Err(LatticeError::NotMonotone {
                        a: source.label(a).to_owned(),
                        b: source.label(b).to_owned(),
                    });
                }
            }
        }
        let holding = Self::flags_holding(&source, &target, &image);
        for (flag, requested, holds) in [
            (Flag::Joins, requested.joins, holding.0.joins),
            (
                Flag::FiniteMeets,
                requested.finite_meets,
                holding.0.finite_meets,
            ),
            (Flag::Bottom, requested.bottom, holding.0.bottom),
            (Flag::Top, requested.top, holding.0.top),
        ] {
            if requested && !holds {
                let (a, b) = holding.1[match flag {
                    Flag::Joins => 0,
                    Flag::FiniteMeets => 1,
                    Flag::Bottom => 2,
                    Flag::Top => 3,
                }]
                .expect("failed flag records a witness");
                return Err(LatticeError::FlagFailed {
                    flag,
                    a: source.label(a).to_owned(),
                    b: source.label(b).to_owned(),
                });
            }
        }
        Ok(LatticeMap {
            source,
            target,
            image,
            certified: requested,
        })
    }

    /// Computes the maximal certificate an assignment satisfies, along with
    /// the least witness pair for each flag that fails.
    #[allow(clippy::type_complexity)]
    pub fn flags_holding(
        source: &FiniteLattice,
        target: &FiniteLattice,
        image: &[Elt],
    ) -> (MapFlags, [Option<(Elt, Elt)>; 4]) {
        let mut flags = MapFlags::ALL;
        let mut witness: [Option<(Elt, Elt)>; 4] = [None; 4];
        let bot = source.bottom();
        if image[bot] != target.bottom() {
            flags.bottom = false;
            flags.joins = false;
            witness[2] = Some((bot, bot));
            witness[0] = Some((bot, bot));
        }
        if image[source.top()] != target.top() {
            flags.top = false;
            witness[3] = Some((source.top(), source.top()));
        }
        'joins: for a in source.elements() {
            for b in source.elements() {
                if image[source.join(a, b)] != target.join(image[a], image[b]) {
                    flags.joins = false;
                    if witness[0].is_none() {
                        witness[0] = Some((a, b));
                    }
                    break 'joins;
                }
            }
        }
        'meets: for a in source.elements() {
            for b in source.elements() {
                if image[source.meet(a, b)] != target.meet(image[a], image[b]) {
                    flags.finite_meets = false;
                    witness[1] = Some((a, b));
                    break 'meets;
                }
            }
        }
        (flags, witness)
    }

    pub fn identity(lattice: &FiniteLattice) -> LatticeMap {
        LatticeMap {
            source: lattice.clone(),
            target: lattice.clone(),
            image: lattice.elements().collect(),
            certified: MapFlags::ALL,
        }
    }

    pub fn source(&self) -> &FiniteLattice {
        &self.source
    }

    pub fn target(&self) -> &FiniteLattice {
        &self.target
    }

    pub fn apply(&self, x: Elt) -> Elt {
        self.image[x]
    }

    pub fn image(&self) -> &[Elt] {
        &self.image
    }

    pub fn certified(&self) -> MapFlags {
        self.certified
    }

    /// Whether this map is certified to preserve joins, finite meets, and the
    /// top element — the conditions under which spectra pull back.
    pub fn is_confluent(&self) -> bool {
        self.certified.joins && self.certified.finite_meets && self.certified.top
    }

    /// Composition `other . self`, certified for the flags both factors carry.
    pub fn then(&self, other: &LatticeMap) -> Result<LatticeMap> {
        if self.target != other.source {
            return Err(LatticeError::Mismatch(
                "composition needs matching middle lattice".into(),
            ));
        }
        let image = self.image.iter().map(|&y| other.image[y]).collect();
        LatticeMap::checked(
            self.source.clone(),
            other.target.clone(),
            image,
            self.certified.and(other.certified),
        )
    }
}
