use std::path::PathBuf;

use maxilat::io::{load_extension, load_map, load_poset, map_to_json, parse_map, parse_poset, poset_to_json};
use maxilat::residuation::{is_completely_maxitive, is_residuated};
use maxilat::{FinitePoset, Subset};

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

#[test]
fn seven_fixture_has_exactly_the_stated_relations() {
    let p = load_poset(&fixtures().join("seven.json")).unwrap();
    let names = ["a", "b", "c", "α", "β", "γ", "z"];
    let ix = |n: &str| p.index_of(n).unwrap();
    let mut strict = Vec::new();
    for x in names {
        for y in names {
            if p.lt(ix(x), ix(y)) {
                strict.push(format!("{x}<{y}"));
            }
        }
    }
    strict.sort();
    let mut expected: Vec<String> = ["a<α", "b<α", "b<β", "c<β", "c<γ", "a<γ", "a<z", "b<z", "c<z"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    expected.sort();
    assert_eq!(strict, expected);
    assert!(p.same_order(&FinitePoset::seven_element()));
}

#[test]
fn every_poset_fixture_round_trips() {
    for name in ["seven.json", "claw.json", "halves.json"] {
        let p = load_poset(&fixtures().join(name)).unwrap();
        let text = poset_to_json(&p);
        let back = parse_poset(&text, name).unwrap();
        assert_eq!(back, p, "{name}");
        assert_eq!(poset_to_json(&back), text, "{name}");
    }
}

#[test]
fn map_fixtures_round_trip_inline() {
    for name in [
        "seven_map.json",
        "antichain_map.json",
        "claw_u.json",
        "diamond_max.json",
        "chain_id.json",
    ] {
        let v = load_map(&fixtures().join(name)).unwrap();
        let text = map_to_json(&v);
        let back = parse_map(&text, &fixtures(), name).unwrap();
        assert!(back.source().same_order(v.source()), "{name}");
        assert!(back.target().same_order(v.target()), "{name}");
        assert_eq!(back.values(), v.values(), "{name}");
        assert_eq!(map_to_json(&back), text, "{name}");
    }
}

#[test]
fn seven_map_separates_pairwise_from_full_maxitivity() {
    let v = load_map(&fixtures().join("seven_map.json")).unwrap();
    let abc: Subset = ["a", "b", "c"]
        .iter()
        .map(|n| v.source().index_of(n).unwrap())
        .collect();
    assert!(v.is_pairwise_maxitive());
    assert_eq!(v.maxitivity_witness().unwrap(), Some(abc));
}

#[test]
fn antichain_in_m3_is_completely_maxitive_but_not_residuated() {
    let ext = load_extension(&fixtures().join("antichain_in_m3.json")).unwrap();
    let v = load_map(&fixtures().join("antichain_map.json")).unwrap();
    assert!(ext.complete().same_order(&FinitePoset::m3()));
    assert!(is_completely_maxitive(&v));
    assert!(!is_residuated(&v, &ext));
}
