use pvsinv::corpus::{corpus_entries, corpus_list, corpus_run, corpus_run_all, Origin};

#[test]
fn every_entry_passes() {
    let outcomes = corpus_run_all();
    let failed: Vec<String> = outcomes
        .iter()
        .filter(|o| !o.passed)
        .map(|o| {
            format!(
                "{}: {:?}",
                o.name,
                o.comparisons
                    .iter()
                    .filter(|c| !c.passed)
                    .collect::<Vec<_>>()
            )
        })
        .collect();
    assert!(failed.is_empty(), "{failed:#?}");
    assert_eq!(outcomes.len(), corpus_entries().len() + 1);
}

#[test]
fn coverage() {
    let names: Vec<String> = corpus_list().into_iter().map(|(n, _)| n).collect();
    for want in [
        "aac",
        "2addinvs-3",
        "2addinvs-4",
        "2addinvs-5",
        "ex-A",
        "ex-A-contrast",
        "denompowers-3",
        "denompowers-6",
        "lu-2x2",
        "lu-2x3",
        "lu-3x3",
        "lu-3x4",
        "complicated",
        "normal-crossings-2",
        "normal-crossings-5",
        "d1",
        "d2",
        "d1-vs-d2",
    ] {
        assert!(names.iter().any(|n| n == want), "missing {want}");
    }
}

#[test]
fn expectations_carry_an_origin() {
    for e in corpus_entries() {
        let x = &e.expected;
        let origins: Vec<Origin> = [
            x.r.as_ref().map(|v| v.origin),
            x.dim_a1.as_ref().map(|v| v.origin),
        ]
        .into_iter()
        .flatten()
        .collect();
        assert!(!origins.is_empty(), "{} has no expectations", e.name);
    }
}

#[test]
fn families_and_pairs_by_name() {
    let lu = corpus_run("lu").unwrap();
    assert_eq!(lu.len(), 4);
    assert!(lu.iter().all(|o| o.passed));
    assert!(lu.iter().all(|o| o
        .comparisons
        .iter()
        .any(|c| c.check.starts_with("closed-form"))));

    let t = corpus_run("denompowers-4").unwrap();
    let checks: Vec<&str> = t[0].comparisons.iter().map(|c| c.check.as_str()).collect();
    for c in [
        "homomorphism-2",
        "homomorphism-3",
        "representative-2",
        "representative-3",
    ] {
        assert!(checks.contains(&c), "{checks:?}");
    }

    let pair = corpus_run("d1-vs-d2").unwrap();
    assert_eq!(pair.last().unwrap().name, "d1-vs-d2");
    assert!(pair.iter().all(|o| o.passed));

    assert!(corpus_run("no-such-entry").is_err());
}

#[test]
fn echoed_polynomials_reparse() {
    use pvsinv::ratpoly::parse_poly;
    for e in corpus_entries()
        .iter()
        .filter(|e| !e.name.starts_with("complicated"))
    {
        let o = pvsinv::corpus::run_entry(e);
        let a = o.analysis.unwrap();
        let vars = &e.input.variables;
        let (Some(b), Some(rb)) = (&a.basics, &a.report.basics) else {
            continue;
        };
        for (f, shown) in b.basics.iter().zip(&rb.invariants) {
            assert_eq!(parse_poly(&shown.f, vars).unwrap(), f.f, "{}", e.name);
        }
        let (Some(x), Some(rx)) = (&a.additive, &a.report.additive) else {
            continue;
        };
        for (h, shown) in x.basis.iter().zip(&rx.basis) {
            assert_eq!(
                parse_poly(&shown.numerator, vars).unwrap(),
                h.h1,
                "{}",
                e.name
            );
            assert_eq!(
                parse_poly(&shown.denominator, vars).unwrap(),
                h.denominator(&b.basics),
                "{}",
                e.name
            );
        }
    }
}
