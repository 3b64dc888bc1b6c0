use eaqmds_core::families::{
    family1, family2, predicted_tss, run_family, DiscrepancyKind, FamilyParams, FamilyTag,
    PredictedTss, ReportWitness, Verification,
};
use eaqmds_core::tables::{reproduce_tables, row_m, WhichTable, TABLE1, TABLE2};
use eaqmds_core::verify::{MdsStatus, Saturation};
use eaqmds_core::Error;

fn kinds(reports: &[eaqmds_core::families::DiscrepancyReport], claim: &str) -> usize {
    reports.iter().filter(|r| r.claim == claim).count()
}

#[test]
fn family1_anchor_records() {
    let out = family1(3, 1, Verification::Full { minor_cap: 1_000_000 }).unwrap();
    let got: Vec<_> = out.records.iter().map(|r| (r.n, r.k, r.d, r.c)).collect();
    assert_eq!(got, [(17, 9, 7, 4), (17, 5, 9, 4), (17, 1, 11, 4)]);
    for r in &out.records {
        assert_eq!(r.q, 13);
        assert_eq!(r.saturation, Saturation::Saturated);
        assert_eq!(r.mds, MdsStatus::Verified);
        assert!(r.ebits.unwrap().agree);
    }
}

#[test]
fn family2_anchor_records() {
    let out = family2(7, 1, Verification::Full { minor_cap: 100_000_000 }).unwrap();
    let got: Vec<_> = out.records.iter().map(|r| (r.n, r.k, r.d, r.c)).collect();
    assert_eq!(got, [(29, 17, 9, 4), (29, 13, 11, 4), (29, 9, 13, 4)]);
    assert!(out.records.iter().all(|r| r.mds == MdsStatus::Verified));
}

#[test]
fn non_prime_power_is_a_skip() {
    assert_eq!(
        family1(3, 3, Verification::Cosets).unwrap_err(),
        Error::NotPrimePower(33)
    );
}

#[test]
fn computed_ranges_match_both_printed_tables() {
    for (tag, rows) in [(FamilyTag::One, &TABLE1[..]), (FamilyTag::Two, &TABLE2[..])] {
        for row in rows {
            let out = run_family(tag, row.l, row_m(tag, row), Verification::Cosets).unwrap();
            let c = out.computed.unwrap();
            assert_eq!((c.d_min, c.d_max), (row.d_min, row.d_max), "q = {}", row.q);
            for r in &out.records {
                assert_eq!((r.c, r.k), (4, r.n as i64 - 2 * r.d as i64 + 6));
                assert_eq!(r.saturation, Saturation::Saturated);
            }
        }
    }
}

#[test]
fn family1_upper_bound_is_reported_for_every_row() {
    for row in &TABLE1 {
        let m = row_m(FamilyTag::One, row);
        let out = family1(row.l, m, Verification::Cosets).unwrap();
        let r = out
            .reports
            .iter()
            .find(|r| r.claim == "family1.d_range")
            .unwrap_or_else(|| panic!("no range report at q = {}", row.q));
        let ReportWitness::DistanceRange { stated, computed } = r.witness else {
            panic!("wrong witness");
        };
        assert_eq!(stated.1, (3 * row.l - 4) * m + 3);
        assert_eq!(computed.1, (3 * row.l - 1) * m + 3);
        assert_eq!(kinds(&out.reports, "family1.tss_run"), 0);
    }
}

#[test]
fn family2_run_index_overshoot_at_7_1() {
    let out = family2(7, 1, Verification::Cosets).unwrap();
    assert_eq!(kinds(&out.reports, "family2.d_range"), 0);
    let r = out.reports.iter().find(|r| r.claim == "family2.tss_run").unwrap();
    assert_eq!(r.kind, DiscrepancyKind::RangeMismatch);
    let ReportWitness::EbitCount { k, tss, ref pairs } = r.witness else {
        panic!("wrong witness");
    };
    assert_eq!((k, tss), (6, 8));
    assert_eq!(pairs.len(), 2);
}

#[test]
fn family2_coset_formula_mismatches() {
    for (l, m) in [(7, 1), (13, 1)] {
        let out = family2(l, m, Verification::Cosets).unwrap();
        let r = out
            .reports
            .iter()
            .find(|r| r.kind == DiscrepancyKind::TssFormulaMismatch)
            .unwrap_or_else(|| panic!("no coset report at l = {l}"));
        let ReportWitness::CosetPairs { predicted, computed } = &r.witness else {
            panic!("wrong witness");
        };
        assert_eq!(predicted.len(), 2);
        assert!(!computed.is_empty());
    }
    let out = family2(7, 1, Verification::Cosets).unwrap();
    let r = out
        .reports
        .iter()
        .find(|r| r.kind == DiscrepancyKind::TssFormulaMismatch)
        .unwrap();
    let ReportWitness::CosetPairs { predicted, computed } = &r.witness else {
        unreachable!()
    };
    assert_eq!(predicted[0].coset, [12, 17]);
    assert_eq!(predicted[1].coset, [13, 16]);
    assert_eq!(computed, &[(11, 13)]);
}

#[test]
fn family1_closed_form_matches_computation() {
    for (l, m) in [(3, 1), (3, 2), (5, 1)] {
        let out = family1(l, m, Verification::Cosets).unwrap();
        assert_eq!(
            out.reports
                .iter()
                .filter(|r| r.kind == DiscrepancyKind::TssFormulaMismatch)
                .count(),
            0,
            "l = {l}, m = {m}"
        );
        assert!(matches!(
            predicted_tss(&FamilyParams::new(FamilyTag::One, l, m).unwrap()),
            PredictedTss::Cosets { .. }
        ));
    }
}

#[test]
fn table_typos() {
    let t1 = reproduce_tables(WhichTable::One, Verification::Cosets).unwrap();
    assert_eq!(t1.rows.len(), 12);
    let typos: Vec<_> = t1
        .reports
        .iter()
        .filter(|r| r.kind == DiscrepancyKind::TableTypo)
        .collect();
    assert_eq!(typos.len(), 1);
    assert!(matches!(
        typos[0].witness,
        ReportWitness::TableCell { q: 31, printed: 37, computed: 31, .. }
    ));

    let t2 = reproduce_tables(WhichTable::Two, Verification::Cosets).unwrap();
    assert_eq!(t2.rows.len(), 9);
    assert!(t2.reports.iter().any(|r| r.claim == "table2.header"));
    assert!(t2.reports.iter().any(|r| matches!(
        r.witness,
        ReportWitness::TableCell { q: 37, printed: 142, computed: 143, .. }
    )));
    // the printed ranges themselves are right
    assert!(!t2.reports.iter().any(|r| r.claim.starts_with("table2.row")
        && r.kind == DiscrepancyKind::RangeMismatch));

    let t3 = reproduce_tables(WhichTable::Three, Verification::Cosets).unwrap();
    assert_eq!(t3.summary.len(), 2);
    assert!(t3.reports.iter().any(|r| r.claim == "table3.notation"));
    assert!(t3.summary[0].checks.iter().all(|c| !c.agrees()));
}

#[test]
fn rendering_is_deterministic() {
    let a = reproduce_tables(WhichTable::One, Verification::Cosets).unwrap().render();
    let b = reproduce_tables(WhichTable::One, Verification::Cosets).unwrap().render();
    assert_eq!(a, b);
    assert!(a.contains("[[17,23-2d,d;4]]_13"));
}

