//! Worked lattices with their expected invariants frozen alongside.
//!
//! Each entry packages a lattice with the values the rest of the crate is
//! supposed to compute for it — property verdicts with their least
//! witnesses, point counts, spectrum sizes, frame approximations, fixed
//! sublattices. [`verify_expected`] replays every recorded value against the
//! live implementation and reports mismatches, so the gallery doubles as the
//! golden test corpus; [`names`] and [`by_name`] expose the frozen registry.

use crate::adjunctions::{classify, free_frame_d, omega, Classification};
use crate::error::{LatticeError, Result};
use crate::lattice::{Elt, FiniteLattice, DEFAULT_SIZE_LIMIT};
use crate::props::{is_distributive, is_modular, is_semimodular};
use crate::spectra::{fspcnt, meet_primes};

/// Expected values for a gallery entry; `None` means "not recorded", and
/// every `Some` is enforced by [`verify_expected`].
#[derive(Debug, Clone, Default)]
pub struct Expected {
    pub size: Option<usize>,
    pub distributive: Option<bool>,
    pub modular: Option<bool>,
    /// Least triple `(l, m, s)` with `l ≤ m` violating the modular law.
    pub modular_witness: Option<[&'static str; 3]>,
    pub semimodular: Option<bool>,
    /// Least pair `(l, m)` where `l ∧ m ⋖ l` but `m` is not covered by `l ∨ m`.
    pub semimodular_witness: Option<[&'static str; 2]>,
    /// Number of meet-primes, i.e. of points of the point spectrum.
    pub point_count: Option<usize>,
    pub fspcnt_point_count: Option<usize>,
    pub fspcnt_open_count: Option<usize>,
    /// Whether the semipoint spectrum has exactly one generic and exactly
    /// one closed point.
    pub unique_generic_and_closed: Option<bool>,
    pub omega_size: Option<usize>,
    /// Registry name of a lattice isomorphic to the point-spectrum frame.
    pub omega_iso_to: Option<&'static str>,
    /// A pair of distinct elements identified by the unit into that frame.
    pub unit_collapses: Option<[&'static str; 2]>,
    pub free_frame_size: Option<usize>,
    /// Whether classification certifies the unit as an isomorphism.
    pub classify_iso: Option<bool>,
    /// Least triple of distinct elements pairwise meeting at bottom and
    /// joining at top.
    pub diamond_obstruction: Option<[&'static str; 3]>,
    /// Size of the fixed sublattice of the entry's automorphism.
    pub serre_fixed_size: Option<usize>,
}

/// A named lattice with optional extra structure: an automorphism of
/// interest (`serre`), a designated bounded sublattice (`tensor_sub`, by
/// ambient indices), and the expected values for the golden suite.
#[derive(Debug, Clone)]
pub struct GalleryEntry {
    pub name: String,
    pub description: String,
    pub lattice: FiniteLattice,
    /// An automorphism given elementwise, when the entry carries one.
    pub serre: Option<Vec<Elt>>,
    /// A bounded sublattice of tensor ideals, when the entry carries one.
    pub tensor_sub: Option<Vec<Elt>>,
    pub expected: Expected,
}

/// The one-element lattice.
pub fn one() -> GalleryEntry {
    GalleryEntry {
        name: "one".into(),
        description: "The terminal lattice: a single element serving as both bounds.".into(),
        lattice: FiniteLattice::from_covers(["*"], std::iter::empty())
            .expect("a singleton is a lattice"),
        serre: None,
        tensor_sub: None,
        expected: Expected {
            size: Some(1),
            distributive: Some(true),
            point_count: Some(0),
            omega_size: Some(1),
            free_frame_size: Some(2),
            classify_iso: Some(true),
            ..Expected::default()
        },
    }
}

/// The two-element lattice.
pub fn two() -> GalleryEntry {
    GalleryEntry {
        name: "two".into(),
        description: "The two-element lattice of truth values.".into(),
        lattice: FiniteLattice::from_covers(["0", "1"], [("0", "1")])
            .expect("the two-chain is a lattice"),
        serre: None,
        tensor_sub: None,
        expected: Expected {
            size: Some(2),
            distributive: Some(true),
            point_count: Some(1),
            omega_size: Some(2),
            free_frame_size: Some(3),
            classify_iso: Some(true),
            ..Expected::default()
        },
    }
}

/// Three incomparable middle elements sharing bottom and top: the minimal
/// modular non-distributive lattice.
pub fn diamond() -> GalleryEntry {
    GalleryEntry {
        name: "diamond".into(),
        description: "Three incomparable atoms sharing bottom and top: the minimal modular \
                      non-distributive lattice, with no points at all."
            .into(),
        lattice: FiniteLattice::from_covers(
            ["0", "l", "m", "n", "1"],
            [
                ("0", "l"),
                ("0", "m"),
                ("0", "n"),
                ("l", "1"),
                ("m", "1"),
                ("n", "1"),
            ],
        )
        .expect("the diamond is a lattice"),
        serre: None,
        tensor_sub: None,
        expected: Expected {
            size: Some(5),
            distributive: Some(false),
            modular: Some(true),
            semimodular: Some(true),
            point_count: Some(0),
            omega_size: Some(1),
            free_frame_size: Some(10),
            classify_iso: Some(false),
            diamond_obstruction: Some(["l", "m", "n"]),
            ..Expected::default()
        },
    }
}

/// A two-step chain against a single side element: the minimal non-modular
/// lattice.
pub fn pentagon() -> GalleryEntry {
    GalleryEntry {
        name: "pentagon".into(),
        description: "A two-step chain m < n against a side element l: the minimal non-modular \
                      lattice; its two points separate l from n but not m from n."
            .into(),
        lattice: FiniteLattice::from_covers(
            ["0", "m", "l", "n", "1"],
            [("0", "m"), ("m", "n"), ("n", "1"), ("0", "l"), ("l", "1")],
        )
        .expect("the pentagon is a lattice"),
        serre: None,
        tensor_sub: None,
        expected: Expected {
            size: Some(5),
            distributive: Some(false),
            modular: Some(false),
            modular_witness: Some(["m", "n", "l"]),
            semimodular: Some(false),
            semimodular_witness: Some(["l", "m"]),
            point_count: Some(2),
            omega_size: Some(4),
            omega_iso_to: Some("boolean2"),
            unit_collapses: Some(["m", "n"]),
            free_frame_size: Some(8),
            classify_iso: Some(false),
            ..Expected::default()
        },
    }
}

/// A diamond sitting on a stem: the three middle elements meet in the stem
/// atom instead of at bottom, so only the bottom remains meet-prime.
pub fn stem_diamond() -> GalleryEntry {
    GalleryEntry {
        name: "stem_diamond".into(),
        description: "A diamond on a stem: the middle elements meet in the stem atom x rather \
                      than at bottom, leaving the bottom as the unique point."
            .into(),
        lattice: FiniteLattice::from_covers(
            ["0", "x", "l", "m", "n", "1"],
            [
                ("0", "x"),
                ("x", "l"),
                ("x", "m"),
                ("x", "n"),
                ("l", "1"),
                ("m", "1"),
                ("n", "1"),
            ],
        )
        .expect("the stem diamond is a lattice"),
        serre: None,
        tensor_sub: None,
        expected: Expected {
            size: Some(6),
            distributive: Some(false),
            modular: Some(true),
            point_count: Some(1),
            omega_size: Some(2),
            omega_iso_to: Some("two"),
            classify_iso: Some(false),
            ..Expected::default()
        },
    }
}

/// The Boolean lattice of subsets of `n` letters, guarded by `limit`.
pub fn boolean(n: usize, limit: usize) -> Result<GalleryEntry> {
    let size = if n >= usize::BITS as usize {
        usize::MAX
    } else {
        1usize << n
    };
    if size > limit {
        return Err(LatticeError::SizeGuard { size, limit });
    }
    let labels = (0..size).map(subset_label).collect();
    let lattice = FiniteLattice::from_leq(labels, |a, b| a & b == a)
        .expect("subsets under inclusion form a lattice");
    Ok(GalleryEntry {
        name: format!("boolean{n}"),
        description: format!("The Boolean lattice of subsets of {n} letters."),
        lattice,
        serre: None,
        tensor_sub: None,
        expected: Expected::default(),
    })
}

/// The chain with `n` elements, guarded by `limit`.
pub fn chain(n: usize, limit: usize) -> Result<GalleryEntry> {
    if n > limit {
        return Err(LatticeError::SizeGuard { size: n, limit });
    }
    let labels = (0..n).map(|i| format!("c{i}")).collect();
    let lattice = FiniteLattice::from_leq(labels, |a, b| a <= b)?;
    Ok(GalleryEntry {
        name: format!("chain{n}"),
        description: format!("The {n}-element chain."),
        lattice,
        serre: None,
        tensor_sub: None,
        expected: Expected::default(),
    })
}

/// Thick subcategories of the bounded derived category of the A2 quiver: a
/// diamond on the two simples and the remaining indecomposable.
pub fn a2_lattice() -> GalleryEntry {
    GalleryEntry {
        name: "a2".into(),
        description: "Thick subcategories of the bounded derived category of the A2 quiver: \
                      the two simples and the third indecomposable sit as incomparable atoms \
                      of a diamond."
            .into(),
        lattice: FiniteLattice::from_covers(
            ["0", "P1", "P2", "S2", "1"],
            [
                ("0", "P1"),
                ("0", "P2"),
                ("0", "S2"),
                ("P1", "1"),
                ("P2", "1"),
                ("S2", "1"),
            ],
        )
        .expect("the relabeled diamond is a lattice"),
        serre: None,
        tensor_sub: None,
        expected: Expected {
            size: Some(5),
            distributive: Some(false),
            point_count: Some(0),
            fspcnt_point_count: Some(5),
            unique_generic_and_closed: Some(true),
            omega_size: Some(1),
            classify_iso: Some(false),
            diamond_obstruction: Some(["P1", "P2", "S2"]),
            ..Expected::default()
        },
    }
}

/// Thick subcategories of modules over a product of two fields: the Boolean
/// square on the two factors.
pub fn k_times_k() -> GalleryEntry {
    GalleryEntry {
        name: "k_times_k".into(),
        description: "Thick subcategories of modules over a product of two fields: the Boolean \
                      square on the factors M and N, a disjoint union of two points."
            .into(),
        lattice: FiniteLattice::from_covers(
            ["0", "M", "N", "1"],
            [("0", "M"), ("0", "N"), ("M", "1"), ("N", "1")],
        )
        .expect("the square is a lattice"),
        serre: None,
        tensor_sub: None,
        expected: Expected {
            size: Some(4),
            distributive: Some(true),
            point_count: Some(2),
            fspcnt_point_count: Some(4),
            fspcnt_open_count: Some(6),
            unique_generic_and_closed: Some(true),
            omega_size: Some(4),
            omega_iso_to: Some("k_times_k"),
            classify_iso: Some(true),
            ..Expected::default()
        },
    }
}

/// A finite model of the specialization-closed subsets of the projective
/// line with a window of twists: subsets of `num_points` closed points form
/// an ideal part, `num_twists` pairwise incomparable twists sit above bottom
/// and below top, and a twist joins any nonzero ideal at the top. The Serre
/// automorphism shifts the twist index by −2 (mod `num_twists`, so it is
/// only interesting for odd counts ≥ 3) and fixes the ideal part.
pub fn p1_model(num_points: usize, num_twists: usize, limit: usize) -> Result<GalleryEntry> {
    let ideal_count = if num_points >= usize::BITS as usize {
        usize::MAX
    } else {
        1usize << num_points
    };
    let size = ideal_count.saturating_add(num_twists).saturating_add(1);
    if size > limit {
        return Err(LatticeError::SizeGuard { size, limit });
    }
    let top = size - 1;
    let mut labels: Vec<String> = (0..ideal_count).map(subset_label).collect();
    labels.extend((0..num_twists).map(|i| format!("O({i})")));
    labels.push("1".into());
    let lattice = FiniteLattice::from_leq(labels, move |a, b| {
        if b == top {
            return true;
        }
        if a == top {
            return false;
        }
        match (a < ideal_count, b < ideal_count) {
            (true, true) => a & b == a,
            (true, false) => a == 0,
            (false, true) => false,
            (false, false) => a == b,
        }
    })
    .expect("the twisted ideal model is a lattice");
    let serre = (num_twists > 0).then(|| {
        let mut sigma: Vec<Elt> = (0..size).collect();
        for i in 0..num_twists {
            // Shift by −2 modulo the twist window.
            sigma[ideal_count + i] = ideal_count + (i + 2 * num_twists - 2) % num_twists;
        }
        sigma
    });
    let tensor_sub = Some((0..ideal_count).chain([top]).collect());
    Ok(GalleryEntry {
        name: format!("p1_{num_points}_{num_twists}"),
        description: format!(
            "Specialization-closed subsets of the projective line with a twist window: \
             subsets of {num_points} closed points as an ideal part, {num_twists} pairwise \
             incomparable twists below the top, and the Serre shift acting on the window."
        ),
        lattice,
        serre,
        tensor_sub,
        expected: Expected::default(),
    })
}

/// Thick subcategories of the bounded derived category of the preprojective
/// algebra of type A2: four incomparable atoms, swapped in pairs by the
/// Serre functor.
pub fn preprojective_a2() -> GalleryEntry {
    GalleryEntry {
        name: "preprojective_a2".into(),
        description: "Thick subcategories over the preprojective algebra of type A2: four \
                      incomparable atoms P1, P2, A, B; the Serre functor swaps P1 with P2 \
                      and A with B."
            .into(),
        lattice: FiniteLattice::from_covers(
            ["0", "P1", "P2", "A", "B", "1"],
            [
                ("0", "P1"),
                ("0", "P2"),
                ("0", "A"),
                ("0", "B"),
                ("P1", "1"),
                ("P2", "1"),
                ("A", "1"),
                ("B", "1"),
            ],
        )
        .expect("the four-atom lattice is a lattice"),
        serre: Some(vec![0, 2, 1, 4, 3, 5]),
        tensor_sub: None,
        expected: Expected {
            size: Some(6),
            distributive: Some(false),
            modular: Some(true),
            point_count: Some(0),
            omega_size: Some(1),
            classify_iso: Some(false),
            diamond_obstruction: Some(["P1", "P2", "A"]),
            serre_fixed_size: Some(2),
            ..Expected::default()
        },
    }
}

/// Label for a subset of letters encoded as a bitmask.
fn subset_label(mask: usize) -> String {
    const LETTERS: [&str; 10] = ["x", "y", "z", "w", "v", "u", "t", "s", "r", "q"];
    let mut s = String::from("{");
    let mut first = true;
    let mut bit = 0;
    let mut rest = mask;
    while rest != 0 {
        if rest & 1 == 1 {
            if !first {
                s.push(',');
            }
            match LETTERS.get(bit) {
                Some(letter) => s.push_str(letter),
                None => s.push_str(&format!("p{bit}")),
            }
            first = false;
        }
        rest >>= 1;
        bit += 1;
    }
    s.push('}');
    s
}

/// The names in the frozen registry, in presentation order.
pub fn names() -> Vec<&'static str> {
    vec![
        "one",
        "two",
        "diamond",
        "pentagon",
        "stem_diamond",
        "a2",
        "k_times_k",
        "preprojective_a2",
        "boolean2",
        "boolean3",
        "chain4",
        "p1_2_1",
        "p1_0_3",
        "p1_2_3",
    ]
}

/// Looks up a registry entry by name, attaching the frozen expected values
/// for the parametric families.
pub fn by_name(name: &str) -> Option<GalleryEntry> {
    let entry = match name {
        "one" => one(),
        "two" => two(),
        "diamond" => diamond(),
        "pentagon" => pentagon(),
        "stem_diamond" => stem_diamond(),
        "a2" => a2_lattice(),
        "k_times_k" => k_times_k(),
        "preprojective_a2" => preprojective_a2(),
        "boolean2" => {
            let mut e = boolean(2, DEFAULT_SIZE_LIMIT).expect("within the guard");
            e.expected = Expected {
                size: Some(4),
                distributive: Some(true),
                point_count: Some(2),
                classify_iso: Some(true),
                ..Expected::default()
            };
            e
        }
        "boolean3" => {
            let mut e = boolean(3, DEFAULT_SIZE_LIMIT).expect("within the guard");
            e.expected = Expected {
                size: Some(8),
                distributive: Some(true),
                point_count: Some(3),
                omega_size: Some(8),
                classify_iso: Some(true),
                ..Expected::default()
            };
            e
        }
        "chain4" => {
            let mut e = chain(4, DEFAULT_SIZE_LIMIT).expect("within the guard");
            e.expected = Expected {
                size: Some(4),
                distributive: Some(true),
                point_count: Some(3),
                free_frame_size: Some(5),
                classify_iso: Some(true),
                ..Expected::default()
            };
            e
        }
        "p1_2_1" => {
            let mut e = p1_model(2, 1, DEFAULT_SIZE_LIMIT).expect("within the guard");
            e.expected = Expected {
                size: Some(6),
                distributive: Some(false),
                modular: Some(false),
                modular_witness: Some(["{x}", "{x,y}", "O(0)"]),
                semimodular: Some(false),
                semimodular_witness: Some(["O(0)", "{x}"]),
                ..Expected::default()
            };
            e
        }
        "p1_0_3" => {
            let mut e = p1_model(0, 3, DEFAULT_SIZE_LIMIT).expect("within the guard");
            e.expected = Expected {
                size: Some(5),
                distributive: Some(false),
                point_count: Some(0),
                omega_size: Some(1),
                classify_iso: Some(false),
                diamond_obstruction: Some(["O(0)", "O(1)", "O(2)"]),
                ..Expected::default()
            };
            e
        }
        "p1_2_3" => {
            let mut e = p1_model(2, 3, DEFAULT_SIZE_LIMIT).expect("within the guard");
            e.expected = Expected {
                size: Some(8),
                distributive: Some(false),
                modular: Some(false),
                point_count: Some(0),
                classify_iso: Some(false),
                diamond_obstruction: Some(["{x}", "O(0)", "O(1)"]),
                serre_fixed_size: Some(5),
                ..Expected::default()
            };
            e
        }
        _ => return None,
    };
    Some(entry)
}

/// Replays every recorded expectation of an entry against the live
/// implementation, returning one message per mismatch (empty means all
/// recorded values check out).
pub fn verify_expected(entry: &GalleryEntry) -> Vec<String> {
    let mut failures = Vec::new();
    let lat = &entry.lattice;
    let e = &entry.expected;

    if let Some(want) = e.size {
        expect_eq(&mut failures, &entry.name, "size", lat.len(), want);
    }
    if let Some(want) = e.distributive {
        expect_eq(
            &mut failures,
            &entry.name,
            "distributive",
            is_distributive(lat).verdict,
            want,
        );
    }
    if let Some(want) = e.modular {
        expect_eq(
            &mut failures,
            &entry.name,
            "modular",
            is_modular(lat).verdict,
            want,
        );
    }
    if let Some(want) = e.modular_witness {
        let got = is_modular(lat).witness.map(|w| {
            w.iter()
                .map(|&x| lat.label(x).to_owned())
                .collect::<Vec<_>>()
        });
        expect_eq(
            &mut failures,
            &entry.name,
            "modular witness",
            got,
            Some(want.iter().map(|s| s.to_string()).collect()),
        );
    }
    if let Some(want) = e.semimodular {
        expect_eq(
            &mut failures,
            &entry.name,
            "semimodular",
            is_semimodular(lat).verdict,
            want,
        );
    }
    if let Some(want) = e.semimodular_witness {
        let got = is_semimodular(lat).witness.map(|w| {
            w.iter()
                .map(|&x| lat.label(x).to_owned())
                .collect::<Vec<_>>()
        });
        expect_eq(
            &mut failures,
            &entry.name,
            "semimodular witness",
            got,
            Some(want.iter().map(|s| s.to_string()).collect()),
        );
    }
    if let Some(want) = e.point_count {
        expect_eq(
            &mut failures,
            &entry.name,
            "point count",
            meet_primes(lat).len(),
            want,
        );
    }
    if let Some(want) = e.fspcnt_point_count {
        expect_eq(
            &mut failures,
            &entry.name,
            "semipoint spectrum size",
            fspcnt(lat).len(),
            want,
        );
    }
    if let Some(want) = e.fspcnt_open_count {
        expect_eq(
            &mut failures,
            &entry.name,
            "semipoint spectrum opens",
            fspcnt(lat).open_sets().len(),
            want,
        );
    }
    if let Some(want) = e.unique_generic_and_closed {
        let sp = fspcnt(lat);
        expect_eq(
            &mut failures,
            &entry.name,
            "unique generic and closed point",
            sp.generic_points().len() == 1 && sp.closed_points().len() == 1,
            want,
        );
    }
    if let Some(want) = e.omega_size {
        expect_eq(
            &mut failures,
            &entry.name,
            "point-spectrum frame size",
            omega(lat).opens.lattice.len(),
            want,
        );
    }
    if let Some(name) = e.omega_iso_to {
        let target = by_name(name).expect("expected values reference registry names");
        expect_eq(
            &mut failures,
            &entry.name,
            "point-spectrum frame shape",
            omega(lat).opens.lattice.is_isomorphic_to(&target.lattice),
            true,
        );
    }
    if let Some([a, b]) = e.unit_collapses {
        let o = omega(lat);
        let a = lat.index_of(a).expect("expected values use entry labels");
        let b = lat.index_of(b).expect("expected values use entry labels");
        expect_eq(
            &mut failures,
            &entry.name,
            "unit collapse",
            o.unit.apply(a) == o.unit.apply(b),
            true,
        );
    }
    if let Some(want) = e.free_frame_size {
        let d = free_frame_d(lat, DEFAULT_SIZE_LIMIT).expect("gallery entries fit the guard");
        expect_eq(
            &mut failures,
            &entry.name,
            "free frame size",
            d.opens.lattice.len(),
            want,
        );
    }
    if let Some(want) = e.classify_iso {
        let got = matches!(classify(lat), Classification::Isomorphism { .. });
        expect_eq(&mut failures, &entry.name, "classification", got, want);
    }
    if let Some(want) = e.diamond_obstruction {
        let got = lat
            .find_diamond_obstruction()
            .map(|(a, b, c)| [lat.label(a), lat.label(b), lat.label(c)]);
        expect_eq(
            &mut failures,
            &entry.name,
            "diamond obstruction",
            got,
            Some(want),
        );
    }
    if let Some(want) = e.serre_fixed_size {
        let sigma = entry
            .serre
            .as_ref()
            .expect("fixed-size expectations require an automorphism");
        let (fixed, _) = lat
            .fixed_sublattice(sigma)
            .expect("the recorded automorphism is valid");
        expect_eq(
            &mut failures,
            &entry.name,
            "fixed sublattice size",
            fixed.len(),
            want,
        );
    }
    failures
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(
    failures: &mut Vec<String>,
    name: &str,
    what: &str,
    got: T,
    want: T,
) {
    if got != want {
        failures.push(format!("{name}: {what}: expected {want:?}, got {got:?}"));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_recorded_expectation_holds() {
        for name in names() {
            let entry = by_name(name).expect("registry names resolve");
            let failures = verify_expected(&entry);
            assert!(failures.is_empty(), "{}", failures.join("\n"));
        }
    }

    #[test]
    fn registry_lookup_is_total_on_names_and_rejects_strangers() {
        for name in names() {
            assert!(by_name(name).is_some(), "{name}");
        }
        assert!(by_name("m3").is_none());
    }

    #[test]
    fn relabelings_preserve_shape() {
        assert!(a2_lattice().lattice.is_isomorphic_to(&diamond().lattice));
        assert!(k_times_k()
            .lattice
            .is_isomorphic_to(&boolean(2, 20).unwrap().lattice));
        assert!(p1_model(0, 3, 20)
            .unwrap()
            .lattice
            .is_isomorphic_to(&diamond().lattice));
    }

    #[test]
    fn twisted_ideal_models_are_lattices_across_the_matrix() {
        for num_points in 0..=3 {
            for num_twists in 0..=5 {
                let entry = p1_model(num_points, num_twists, 64).unwrap();
                let lat = &entry.lattice;
                let ideal_count = 1usize << num_points;
                // Twists meet each other and every ideal at bottom and join
                // anything nonzero at top.
                for i in 0..num_twists {
                    let ti = ideal_count + i;
                    for j in 0..num_twists {
                        let tj = ideal_count + j;
                        if i != j {
                            assert_eq!(lat.meet(ti, tj), lat.bottom());
                            assert_eq!(lat.join(ti, tj), lat.top());
                        }
                    }
                    for s in 0..ideal_count {
                        assert_eq!(lat.meet(ti, s), lat.bottom());
                        let join = lat.join(ti, s);
                        if s == 0 {
                            assert_eq!(join, ti);
                        } else {
                            assert_eq!(join, lat.top());
                        }
                    }
                }
                // The recorded shift is an automorphism whenever present.
                if let Some(sigma) = &entry.serre {
                    assert!(lat.fixed_sublattice(sigma).is_ok());
                }
            }
        }
    }

    #[test]
    fn twist_free_model_degenerates_to_ideals_plus_top() {
        let entry = p1_model(2, 0, 20).unwrap();
        assert_eq!(entry.lattice.len(), 5);
        assert!(entry.serre.is_none());
        let labels: Vec<&str> = entry.lattice.labels().iter().map(|s| s.as_str()).collect();
        assert_eq!(labels, ["{}", "{x}", "{y}", "{x,y}", "1"]);
    }

    #[test]
    fn guards_refuse_oversized_families() {
        assert!(matches!(
            boolean(10, 20),
            Err(LatticeError::SizeGuard {
                size: 1024,
                limit: 20
            })
        ));
        assert!(matches!(chain(25, 20), Err(LatticeError::SizeGuard { .. })));
        assert!(matches!(
            p1_model(4, 10, 20),
            Err(LatticeError::SizeGuard {
                size: 27,
                limit: 20
            })
        ));
    }

    #[test]
    fn serre_shift_fixes_ideals_and_moves_twists() {
        let entry = by_name("p1_2_3").unwrap();
        let sigma = entry.serre.as_ref().unwrap();
        let lat = &entry.lattice;
        // Ideals and top are fixed; the twist window shifts by −2 ≡ +1 mod 3.
        assert_eq!(&sigma[0..4], &[0, 1, 2, 3]);
        assert_eq!(lat.label(sigma[lat.index_of("O(0)").unwrap()]), "O(1)");
        assert_eq!(lat.label(sigma[lat.index_of("O(1)").unwrap()]), "O(2)");
        assert_eq!(lat.label(sigma[lat.index_of("O(2)").unwrap()]), "O(0)");
        assert_eq!(sigma[lat.top()], lat.top());

        let fixed_set: Vec<Elt> = entry.tensor_sub.clone().unwrap();
        let (fixed, _) = lat.fixed_sublattice(sigma).unwrap();
        assert_eq!(fixed.len(), fixed_set.len());
    }
}
