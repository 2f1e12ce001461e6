use broadcast_lab::constructions::{decrement_reduction, irredundant_reduction};
use broadcast_lab::io::{export_certificate, import_certificate, parse_graph6, write_graph6};
use broadcast_lab::{
    build, distances, generate, solve, CertificateName, CertificateSpec, Error, FamilySpec,
    ParameterKind, SolveOptions,
};

fn check(name: CertificateName, family: FamilySpec) -> u32 {
    let spec = CertificateSpec::new(name, family);
    let f = build(&spec).unwrap_or_else(|e| panic!("{name} on {}: {e}", spec.family));
    assert_eq!(Some(f.weight()), spec.expected_weight().ok());
    f.weight()
}

#[test]
fn tk_certificates_scale() {
    for k in 2..=5 {
        assert_eq!(
            check(CertificateName::TkGammaF, FamilySpec::ChainTreeTk(k)),
            4 * k as u32
        );
        assert_eq!(
            check(CertificateName::TkBnrG, FamilySpec::ChainTreeTk(k)),
            3 * k as u32
        );
    }
}

#[test]
fn gk_certificates_scale() {
    for k in 1..=4 {
        assert_eq!(
            check(CertificateName::GkBnrF, FamilySpec::LayeredGk(k)),
            3 * (k as u32 + 1)
        );
        check(CertificateName::GkDomSet, FamilySpec::LayeredGk(k));
    }
}

#[test]
fn complete_times_p3_certificates() {
    for n in 2..=4 {
        assert_eq!(
            check(CertificateName::KnP3GammaF, FamilySpec::CompleteTimesP3(n)),
            2 * n as u32
        );
        check(CertificateName::KnP3AlphaH, FamilySpec::CompleteTimesP3(n));
    }
}

#[test]
fn grid_and_spider_certificates() {
    for k in 3..=6 {
        check(CertificateName::Grid3kGamma, FamilySpec::Grid(3, k));
    }
    for (r, k) in [(2, 3), (2, 4), (3, 3), (4, 3)] {
        let legs = FamilySpec::Spider(vec![r; k]);
        check(CertificateName::SpiderBnrF0, legs.clone());
        check(CertificateName::SpiderBnFull, legs.clone());
        check(CertificateName::SpiderHFull, legs);
    }
}

#[test]
fn certificates_match_exact_values_where_tight() {
    let opts = SolveOptions::default();
    let g = generate(&FamilySpec::Spider(vec![2, 2, 2])).unwrap();
    let v = solve(&g, ParameterKind::AlphaBn, &opts).unwrap().value;
    assert_eq!(
        v,
        check(
            CertificateName::SpiderBnFull,
            FamilySpec::Spider(vec![2, 2, 2])
        )
    );
    let g = generate(&FamilySpec::ChainTreeTk(2)).unwrap();
    let v = solve(&g, ParameterKind::AlphaBnr, &opts).unwrap().value;
    assert_eq!(
        v,
        check(CertificateName::TkBnrG, FamilySpec::ChainTreeTk(2))
    );
}

#[test]
fn anchor_and_linked_tree_certificates() {
    assert_eq!(
        check(CertificateName::TGammaG13, FamilySpec::AnchorTreeT),
        13
    );
    assert_eq!(check(CertificateName::TBnrF14, FamilySpec::AnchorTreeT), 14);
    assert_eq!(
        check(CertificateName::HkLambda, FamilySpec::LinkedTreesHk(1)),
        41
    );
    assert_eq!(
        check(CertificateName::HkBnrUnion, FamilySpec::LinkedTreesHk(1)),
        42
    );
}

#[test]
fn incompatible_family_is_rejected() {
    let spec = CertificateSpec::new(CertificateName::TkGammaF, FamilySpec::Path(4));
    assert!(build(&spec).is_err());
    assert!(matches!(
        "no_such".parse::<CertificateName>(),
        Err(Error::InvalidCertificate(_))
    ));
}

#[test]
fn certificate_export_round_trip() {
    let spec = CertificateSpec::new(CertificateName::TBnrF14, FamilySpec::AnchorTreeT);
    let g = generate(&spec.family).unwrap();
    let f = build(&spec).unwrap();
    let text = export_certificate(&spec, &f, &g).unwrap();
    let (back, h) = import_certificate(&text).unwrap();
    assert_eq!(back, spec);
    assert_eq!(h, f);
    // tampering with a strength is caught
    let tampered = text.replacen(":2", ":1", 1);
    assert!(import_certificate(&tampered).is_err());
}

#[test]
fn reductions_on_exact_witnesses() {
    let opts = SolveOptions::default();
    for spec in [
        FamilySpec::Spider(vec![3, 3, 3]),
        FamilySpec::Grid(3, 3),
        FamilySpec::ChainTreeTk(2),
        FamilySpec::CompleteTimesP3(3),
    ] {
        let g = generate(&spec).unwrap();
        let d = distances(&g);
        let f = solve(&g, ParameterKind::AlphaBn, &opts).unwrap().witness;
        let (r, steps) = irredundant_reduction(&f, &g, &d).unwrap();
        assert_eq!(r.weight() + steps as u32, f.weight(), "{spec}");
        assert!(2 * r.weight() > f.weight(), "{spec}");
        assert!(ParameterKind::GammaUpper.is_feasible(&r, &g, &d), "{spec}");
        let analysis = broadcast_lab::broadcast::analyze(&f, &g, &d).unwrap();
        for b in analysis
            .broadcasters
            .iter()
            .filter(|b| b.private_boundary.is_empty())
        {
            decrement_reduction(&f, b.vertex, &g, &d).unwrap();
        }
    }
}

#[test]
fn graph6_round_trip_on_families() {
    let mut specs = vec![
        FamilySpec::AnchorTreeT,
        FamilySpec::OpenQuestionExample,
        FamilySpec::LinkedTreesHk(1),
        FamilySpec::LinkedTreesHk(2),
    ];
    for k in 1..=6 {
        specs.extend([
            FamilySpec::Path(k * 10),
            FamilySpec::Cycle(k + 2),
            FamilySpec::Complete(k + 1),
            FamilySpec::Grid(k, k + 1),
            FamilySpec::ChainTreeTk(k),
            FamilySpec::LayeredGk(k),
            FamilySpec::CompleteTimesP3(k),
        ]);
    }
    for spec in specs {
        let g = generate(&spec).unwrap();
        let text = write_graph6(&g);
        assert_eq!(text.starts_with('~'), g.n() >= 63, "{spec}");
        let back = parse_graph6(&text).unwrap();
        assert_eq!(
            back.edges().collect::<Vec<_>>(),
            g.edges().collect::<Vec<_>>(),
            "{spec}"
        );
        assert_eq!(write_graph6(&back), text, "{spec}");
    }
}
