use super::*;
use crate::algebra::NCPoly;

fn lab(b: &[(u8, u8)]) -> Label {
    Label::from_blocks(b).unwrap()
}

fn c(b: &[(u8, u8)]) -> Poly {
    Poly::letter(lab(b))
}

#[test]
fn alphabet_at_three() {
    let o = LetterOrder::default_for(3);
    assert_eq!(o.letters, vec![lab(&[(1, 1), (3, 3)]), lab(&[(2, 3)]), lab(&[(1, 2)])]);
}

#[test]
fn rule_c12_c23_at_three() {
    let rs = seed_rules(3, LetterOrder::default_for(3)).unwrap();
    let rhs = rs.rule_rhs(&lab(&[(1, 2)]), &lab(&[(2, 3)])).expect("rule present");
    let qm2 = Poly::scalar(&QRat::q_pow(-2));
    let f = &QRat::one() - &QRat::q_pow(-2);
    let tail = c(&[(1, 1)])
        .mul(&c(&[(3, 3)]))
        .add(&c(&[(2, 2)]).mul(&c(&[(1, 3)])))
        .sub(&c(&[(1, 1), (3, 3)]));
    let want = qm2.mul(&c(&[(2, 3)])).mul(&c(&[(1, 2)])).add(&tail.scale(&f));
    assert_eq!(rs.reduce(&rhs.sub(&want)).unwrap(), NCPoly::zero());
    assert!(rs.gaps.is_empty(), "gaps: {:?}", rs.gaps);
}

#[test]
fn trivial_cancellation() {
    let rs = seed_rules(3, LetterOrder::default_for(3)).unwrap();
    let x = crate::algebra::expand(&lab(&[(1, 1), (3, 3)]));
    assert!(rs.reduce(&x.sub(&x)).unwrap().is_zero());
}

#[test]
fn all_pairs_covered_at_four() {
    let rs = seed_rules(4, LetterOrder::default_for(4)).unwrap();
    assert_eq!(rs.rule_count(), 45, "gaps: {:?}", rs.gaps);
}

fn cache_probe_set(n: u8) -> Vec<Poly> {
    let gens = crate::morphisms::generators(n);
    let mut v = Vec::new();
    for a in &gens {
        for b in &gens {
            v.push(Poly::letter(a.clone()).mul(&Poly::letter(b.clone())).mul(&Poly::letter(a.clone())));
        }
    }
    v
}

#[test]
fn cache_round_trip() {
    for n in [3u8, 4] {
        let mut rs = seed_rules(n, LetterOrder::default_for(n)).unwrap();
        rs.complete(if n == 3 { 6 } else { 5 }, DEFAULT_MAX_ITER);
        let text = rs.to_cache();
        assert!(text.starts_with(&format!("awcache v1 n={n} degbound=")));
        let back = RuleSet::from_cache(&text).unwrap();
        assert_eq!(back.to_cache(), text);
        assert_eq!(back.rules(), rs.rules());
        assert_eq!(back.completed_at(), rs.completed_at());
        for x in cache_probe_set(n) {
            assert_eq!(back.reduce(&x).unwrap(), rs.reduce(&x).unwrap());
        }
    }
}

#[test]
fn cache_file_is_reused() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("aw3.cache");
    let (a, loaded) = load_or_complete(&path, 3, 5, DEFAULT_MAX_ITER).unwrap();
    assert!(!loaded);
    let (b, loaded) = load_or_complete(&path, 3, 5, DEFAULT_MAX_ITER).unwrap();
    assert!(loaded);
    assert_eq!(a.to_cache(), b.to_cache());
    assert!(matches!(load_or_complete(&path, 3, 6, DEFAULT_MAX_ITER), Err(CacheError::Mismatch { .. })));
    assert!(!dir.path().join("aw3.cache.tmp").exists());
    let text = std::fs::read_to_string(&path).unwrap();
    let swapped: Vec<String> = text
        .lines()
        .map(|l| match l.strip_prefix("order: ") {
            Some(o) => format!("order: {}", o.split(' ').rev().collect::<Vec<_>>().join(" ")),
            None => l.to_string(),
        })
        .collect();
    std::fs::write(&path, swapped.join("\n")).unwrap();
    assert!(matches!(load_or_complete(&path, 3, 5, DEFAULT_MAX_ITER), Err(CacheError::OrderMismatch)));
}

#[test]
fn malformed_cache_rejected() {
    assert!(matches!(RuleSet::from_cache("awcache v2 n=3 degbound=6"), Err(CacheError::Format { line: 1, .. })));
    let bad = "awcache v1 n=3 degbound=6\nrule: C[1..2]*C[2..3] := 0\n";
    assert!(matches!(RuleSet::from_cache(bad), Err(CacheError::Format { line: 2, .. })));
}
