use num_bigint::BigInt;
use proptest::prelude::*;
use replica_knots::bands::*;
use replica_knots::seifert::{
    alexander_polynomial, knot_determinant, normalize_alexander, torus_2n_alexander,
};
use RungSign::{Over as O, Under as U};

fn det(d: &LadderDiagram) -> BigInt {
    knot_determinant(&alexander_polynomial(
        &seifert_matrix_from_ladder(d).unwrap(),
    ))
}

#[test]
fn two_strand_census() {
    let c3 = enumerate_assignments(&Skeleton::two_strand(3), DEFAULT_CENSUS_CAP, true).unwrap();
    assert_eq!(c3.total(), 8);
    assert_eq!(c3.knot_candidate, 2);
    let cands: Vec<_> = c3
        .records
        .iter()
        .filter(|r| r.verdict == Verdict::KnotCandidate)
        .collect();
    assert_eq!(cands[0].signs, vec![O; 3]);
    assert_eq!(cands[1].signs, vec![U; 3]);

    let c2 = enumerate_assignments(&Skeleton::two_strand(2), DEFAULT_CENSUS_CAP, true).unwrap();
    assert_eq!(c2.knot_candidate, 0);
    assert_eq!(c2.multi_component, 4);
    assert_eq!(c2.linked, 2);
    assert!(c2.records.iter().all(|r| r.components == 2));
}

#[test]
fn census_sizes() {
    let sk = three_strand_skeleton();
    let c = enumerate_assignments(&sk, DEFAULT_CENSUS_CAP, false).unwrap();
    assert_eq!(c.total(), 256);
    assert_eq!(c.unclassified, 256);
    assert!(c.records.is_empty());
    for n in 0..=10 {
        let c = enumerate_assignments(&Skeleton::two_strand(n), DEFAULT_CENSUS_CAP, false).unwrap();
        assert_eq!(c.total(), 1 << n);
    }
    assert_eq!(
        enumerate_assignments(&Skeleton::two_strand(21), DEFAULT_CENSUS_CAP, false),
        Err(BandsError::CapExceeded { rungs: 21, cap: 20 })
    );
}

#[test]
fn ladder_seifert_matrices() {
    for n in [3usize, 5, 7] {
        for sign in [O, U] {
            let d = LadderDiagram::two_strand(vec![sign; n]);
            let delta = normalize_alexander(&alexander_polynomial(
                &seifert_matrix_from_ladder(&d).unwrap(),
            ));
            assert_eq!(delta, torus_2n_alexander(n as u32).unwrap(), "n={n}");
        }
    }
    assert_eq!(det(&LadderDiagram::two_strand(vec![U; 7])), BigInt::from(7));
    // σσσ⁻¹ closes to the unknot
    assert_eq!(
        det(&LadderDiagram::two_strand(vec![U, U, O])),
        BigInt::from(1)
    );
    assert!(matches!(
        seifert_matrix_from_ladder(&three_strand_skeleton().with_signs(vec![O; 8]).unwrap()),
        Err(BandsError::Unsupported(_))
    ));
}

/// The row-sum filter never accepts a diagram with trivial determinant, but it is far
/// from complete: for n >= 5 it rejects most knotted closures (σ⁴σ⁻¹ is a trefoil).
#[test]
fn filter_against_determinant() {
    for n in (1..=9).step_by(2) {
        let c = enumerate_assignments(&Skeleton::two_strand(n), DEFAULT_CENSUS_CAP, true).unwrap();
        let mut missed = 0;
        for r in &c.records {
            let d = LadderDiagram::two_strand(r.signs.clone());
            let knotted = det(&d) > BigInt::from(1);
            if r.verdict == Verdict::KnotCandidate {
                assert!(knotted, "{:?}", r.signs);
            } else if knotted {
                missed += 1;
            }
        }
        assert_eq!(missed == 0, n <= 3, "n={n} missed={missed}");
    }
    let d = LadderDiagram::two_strand(vec![U, U, U, U, O]);
    assert_eq!(det(&d), BigInt::from(3));
    assert_eq!(classify(&d).unwrap(), Verdict::UnknotReducible);
}

#[test]
fn alternating_odd_ladders_are_candidates() {
    for n in (3..=15).step_by(2) {
        for s in [O, U] {
            let d = LadderDiagram::two_strand(vec![s; n]);
            let m = crossing_matrix(&floor_numbering(&d, &NumberingOptions::default()).unwrap())
                .unwrap();
            assert_eq!(m.verdict, Verdict::KnotCandidate);
            assert_eq!(m.row_sums[0], m.row_sums[1]);
        }
    }
}

fn skeleton_and_signs() -> impl Strategy<Value = (usize, Vec<usize>, Vec<bool>)> {
    (2usize..=5).prop_flat_map(|s| {
        (1usize..=12).prop_flat_map(move |r| {
            (
                Just(s),
                prop::collection::vec(0..s - 1, r),
                prop::collection::vec(any::<bool>(), r),
            )
        })
    })
}

proptest! {
    #[test]
    fn conservation_and_connectivity((s, lefts, bits) in skeleton_and_signs()) {
        let sk = Skeleton::new(s, lefts).unwrap();
        let signs: Vec<RungSign> = bits.iter().map(|&b| if b { U } else { O }).collect();
        let d = sk.with_signs(signs).unwrap();
        let flipped = d.flip(0);
        prop_assert_eq!(d.component_count(), flipped.component_count());
        match floor_numbering(&d, &NumberingOptions::default()) {
            Ok(seq) => {
                prop_assert_eq!(seq.sequence.len(), 2 * sk.rungs() + 1);
                prop_assert_eq!(seq.sequence.first(), seq.sequence.last());
                // crossing_matrix checks every column at every cut
                prop_assert!(crossing_matrix(&seq).is_ok());
            }
            Err(BandsError::MultiComponent { components }) => prop_assert!(components > 1),
            Err(e) => prop_assert!(false, "{e}"),
        }
    }
}
