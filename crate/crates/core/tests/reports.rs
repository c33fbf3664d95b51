use lscrystal::decomp::{leibniz_check, recursive_component};
use lscrystal::lspath::PathJson;
use lscrystal::{decompose, product_report, DecomposeOptions, Error, LsPath, Session, Weight};

fn w(c: &[i64]) -> Weight {
    Weight(c.to_vec())
}

#[test]
fn decomposition_report_json_shape() {
    let s = Session::from_name("A2").unwrap();
    let v = s.element(&[1, 2]).unwrap();
    let rep = decompose(&s, &v, &v, &w(&[1, 1]), &w(&[1, 0]), DecomposeOptions::default()).unwrap();
    let json = serde_json::to_value(&rep).unwrap();
    assert_eq!(json["condition_holds"], false);
    assert_eq!(json["root_system"], "A2");
    for e in json["entries"].as_array().unwrap() {
        for key in ["pi", "lambda_plus_wt", "u", "demazure", "witness"] {
            assert!(e.get(key).is_some(), "{key}");
        }
        assert!(e.get("component").is_none());
        assert!(e["pi"]["breaks"].as_array().unwrap().iter().all(|b| b.is_string()));
        assert_eq!(e["u"].is_null(), e["demazure"] == false);
    }
    let again = decompose(&s, &v, &v, &w(&[1, 1]), &w(&[1, 0]), DecomposeOptions::default()).unwrap();
    assert_eq!(serde_json::to_string(&rep).unwrap(), serde_json::to_string(&again).unwrap());
}

#[test]
fn paths_round_trip_through_json() {
    let s = Session::from_name("A2").unwrap();
    for pi in s.crystal(&w(&[1, 2])).unwrap().iter() {
        let text = serde_json::to_string(pi).unwrap();
        let back: PathJson = serde_json::from_str(&text).unwrap();
        assert_eq!(&LsPath::from_json(s.rs(), back).unwrap(), pi);
    }
    let bad: PathJson = serde_json::from_str(r#"{"directions":[[-3,1],[3,-2]],"breaks":["0","1/4","1"]}"#).unwrap();
    assert!(LsPath::from_json(s.rs(), bad).is_err());
}

#[test]
fn errors_surface_as_values() {
    let s = Session::from_name("A2").unwrap();
    let e = s.group().identity();
    let s1 = s.element(&[1]).unwrap();
    assert!(matches!(
        decompose(&s, &e, &e, &w(&[1, -1]), &w(&[1, 0]), DecomposeOptions::default()),
        Err(Error::NotDominant(_))
    ));
    assert!(matches!(
        decompose(&s, &e, &e, &w(&[1, 0, 0]), &w(&[1, 0]), DecomposeOptions::default()),
        Err(Error::RankMismatch { .. })
    ));
    assert!(matches!(s.element(&[3]), Err(Error::IndexOutOfRange { .. })));
    // s1 has a descent at 1, so both recursions reject it
    let om1 = w(&[1, 0]);
    assert!(matches!(leibniz_check(&s, &s1, &e, &om1, &om1, 0), Err(Error::Precondition(_))));
    let pi = LsPath::highest(&om1);
    assert!(matches!(
        recursive_component(&s, &pi, &s1, 0, &e, &om1, &om1),
        Err(Error::Precondition(_))
    ));
    assert!(product_report(&s, &e, &e, &w(&[0, -1]), &om1).is_err());
}

#[test]
fn other_types_decompose() {
    for (ty, v, x, lam, mu) in [
        ("B2", vec![1], vec![2, 1], vec![1, 0], vec![0, 1]),
        ("C2", vec![2, 1], vec![1, 2, 1, 2], vec![0, 1], vec![1, 0]),
        ("G2", vec![1], vec![2, 1], vec![1, 0], vec![1, 0]),
        ("A3", vec![1, 2], vec![2, 1, 3, 2], vec![1, 0, 1], vec![0, 1, 0]),
    ] {
        let s = Session::from_name(ty).unwrap();
        let v = s.element(&v).unwrap();
        let x = s.element(&x).unwrap();
        let rep = decompose(&s, &v, &x, &Weight(lam), &Weight(mu), DecomposeOptions { oracle: true }).unwrap();
        assert_eq!(rep.condition_holds, rep.all_demazure(), "{ty}");
        let total: usize = rep.entries.iter().map(|e| e.size).sum();
        assert_eq!(total, rep.total_size, "{ty}");
    }
}
