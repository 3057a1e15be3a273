use hodgekit::basepoint::partition_of;
use hodgekit::blocks::{dim_g11, dim_gpp, graded_piece, Halves};
use hodgekit::hodge::{describe, HodgeNumbers};
use hodgekit::roots::GroupType;
use hodgekit::triples::{check_bracket, enumerate_triples, hodge_bracket, parse_triple};

fn hn(weight: usize, half: &[u32]) -> HodgeNumbers {
    HodgeNumbers::from_half(weight, half).unwrap()
}

fn spans(weight: usize, half: &[u32]) -> Vec<Vec<usize>> {
    let p = partition_of(&hn(weight, half)).unwrap();
    (0..=weight).map(|k| p.span_of(k).unwrap()).collect()
}

fn sorted(mut v: Vec<&str>) -> Vec<&str> {
    v.sort();
    v
}

#[test]
fn so20_weight_eight() {
    let d = describe(&hn(8, &[2, 3, 2, 1, 4])).unwrap();
    assert_eq!(d.complex_group(), "SO(20,C)");
    assert_eq!(d.group_type, GroupType::D);
    assert_eq!(d.real_form.to_string(), "SO(12,8)");
    assert_eq!(d.display_sequence(), vec![2, 3, 2, 1, 4, 1, 2, 3, 2]);
    assert_eq!(
        spans(8, &[2, 3, 2, 1, 4]),
        vec![
            vec![1, 2],
            vec![7, 8, 9],
            vec![3, 4],
            vec![10],
            vec![5, 6, 15, 16],
            vec![20],
            vec![13, 14],
            vec![17, 18, 19],
            vec![11, 12],
        ]
    );
}

#[test]
fn sp14_weight_five() {
    let d = describe(&hn(5, &[2, 3, 2])).unwrap();
    assert_eq!(d.complex_group(), "Sp(14,C)");
    assert_eq!(d.real_form.to_string(), "Sp(7,7)");
    assert_eq!(
        spans(5, &[2, 3, 2]),
        vec![vec![1, 2], vec![5, 6, 7], vec![3, 4], vec![10, 11], vec![12, 13, 14], vec![8, 9]]
    );
}

#[test]
fn so11_middle_span_order() {
    let d = describe(&hn(4, &[2, 2, 3])).unwrap();
    assert_eq!((d.complex_group().as_str(), d.group_type), ("SO(11,C)", GroupType::B));
    assert_eq!(d.real_form.to_string(), "SO(7,4)");
    assert_eq!(spans(4, &[2, 2, 3])[2], vec![3, 9, 6]);
}

#[test]
fn so12_graded_pieces() {
    let p = partition_of(&hn(4, &[2, 2, 4])).unwrap();
    let expect: [(i64, &[&str]); 9] = [
        (0, &["A00", "A11", "A22", "B22", "C22"]),
        (1, &["A10", "A21", "C21", "C32"]),
        (-1, &["A01", "A12", "B12", "B23"]),
        (2, &["A20", "C20", "C31", "C42"]),
        (-2, &["A02", "B02", "B13", "B24"]),
        (3, &["C30", "C41"]),
        (-3, &["B03", "B14"]),
        (4, &["C40"]),
        (-4, &["B04"]),
    ];
    let mut total = 0;
    for (level, names) in expect {
        let piece = graded_piece(&p, level);
        assert_eq!(sorted(piece.names()), sorted(names.to_vec()), "level {level}");
        total += piece.dim;
    }
    assert_eq!(total, 66);
    let d = &p.descriptor;
    assert_eq!(dim_g11(d), graded_piece(&p, 1).dim);
    assert_eq!(dim_gpp(d, 3), Some(Halves(2 * graded_piece(&p, 3).dim as u64)));
}

#[test]
fn so12_triples_and_bracket() {
    let p = partition_of(&hn(4, &[2, 2, 4])).unwrap();
    let names: Vec<String> = enumerate_triples(&p, 1).unwrap().triples.into_iter().map(|t| t.name).collect();
    assert_eq!(names, ["H10", "H21", "Hc32"]);
    let h10 = parse_triple(&p, "H10").unwrap();
    let hc41 = parse_triple(&p, "Hc41").unwrap();
    assert_eq!(hc41.positive_block.name, "B14");
    let r = hodge_bracket(&p, &h10, &hc41).unwrap();
    let out: Vec<&str> = r.terms.iter().map(|t| t.result.name.as_str()).collect();
    assert_eq!(out, ["Hc31", "Hc40"]);
    let check = check_bracket(&p, &h10, &hc41, &r).unwrap();
    assert!(check.sum_matches);
    assert!(!check.each_clause_matches);
}
