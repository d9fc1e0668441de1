use chanmetric::rational::{format_rat, rat};
use chanmetric::subsets::SubsetVector;
use chanmetric::{DistanceMatrix, SquareMatrix};
use chanmetric_cli::format::{format_matrix, format_subset_vector, parse_distance, parse_matrix, parse_subset_vector};
use chanmetric_cli::run;
use proptest::prelude::*;

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn temp_file(name: &str, contents: &str) -> String {
    let path = std::env::temp_dir().join(format!("chanmetric-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        vec!["chanmetric"],
        vec!["chanmetric", "order", "x.mat"],
        vec!["chanmetric", "metrize", "x", "--mode", "cubic"],
        vec!["chanmetric", "embed", "--weight", "a", "--distance", "b"],
        vec!["chanmetric", "embed", "--weight", "a", "--minimal", "--scale", "2", "--shift", "0"],
    ] {
        let out = run(args.clone());
        assert_eq!(out.code, 1, "{args:?}");
        assert!(out.stdout.is_empty());
    }
    assert_eq!(run(["chanmetric", "--help"]).code, 0);
}

#[test]
fn validation_errors_name_the_location() {
    let bad = temp_file("rowsum.ch", "2\n1/2 1/3\n1/2 1/2\n");
    let out = run(["chanmetric", "metrize", &bad]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("line 2, column 1"), "{}", out.stderr);
    assert!(out.stderr.contains("5/6"));

    let missing = run(["chanmetric", "metrize", "/nonexistent/channel"]);
    assert_eq!(missing.code, 1);

    let out = run(["chanmetric", "verify-embed", &data("twelve.emb"), &data("witness.dist")]);
    assert_eq!(out.code, 1, "a linear embedding needs a weight file");
}

#[test]
fn explicit_witness_must_be_valid() {
    let out = run(["chanmetric", "embed", "--weight", &data("f23.wt"), "--scale", "1", "--shift", "0"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("not a nonnegative integer vector"), "{}", out.stderr);
}

#[test]
fn runs_are_identical() {
    let args = ["chanmetric", "embed", "--weight", &data("f23.wt"), "--minimal", "--json"];
    assert_eq!(run(args), run(args));
    let gen = ["chanmetric", "gen", "channel", "6", "--seed", "42"];
    assert_eq!(run(gen), run(gen));
    assert_ne!(run(gen).stdout, run(["chanmetric", "gen", "channel", "6", "--seed", "43"]).stdout);
}

#[test]
fn pipeline_output_is_a_distance_file() {
    let out = run(["chanmetric", "metrize", &data("metrizable.ch"), "--mode", "metric"]);
    let d = temp_file("metric.dist", &out.stdout);
    let check = run(["chanmetric", "matched", &data("metrizable.ch"), &d, "--oracle"]);
    assert!(check.stdout.starts_with("matched: yes"), "{}", check.stdout);
    let emb = run(["chanmetric", "embed", "--distance", &d]);
    let e = temp_file("points.emb", &emb.stdout);
    let verified = run(["chanmetric", "verify-embed", &e, &d]);
    assert!(verified.stdout.starts_with("ok: yes"), "{}", verified.stdout);
}

#[test]
fn generated_files_parse() {
    for seed in 0..20 {
        let ch = run(["chanmetric", "gen", "channel", "5", "--seed", &seed.to_string()]);
        let path = temp_file("gen.ch", &ch.stdout);
        assert_ne!(run(["chanmetric", "metrize", &path]).code, 1);
        let d = run(["chanmetric", "gen", "distance", "5", "--seed", &seed.to_string()]);
        parse_distance(&d.stdout).unwrap();
    }
}

fn rational() -> impl Strategy<Value = chanmetric::Rat> {
    (-50i64..50, 1i64..12).prop_map(|(p, q)| rat(p, q))
}

proptest! {
    #[test]
    fn matrices_round_trip(n in 1usize..6, values in prop::collection::vec(rational(), 36)) {
        let m = SquareMatrix::from_fn(n, |i, j| values[i * 6 + j].clone());
        let text = format_matrix(&m);
        prop_assert_eq!(parse_matrix(&text).unwrap(), m);
        let d = DistanceMatrix::from_pairs(n, |i, j| { let v = values[i * 6 + j].clone(); if v < rat(0, 1) { -v } else { v } }).unwrap();
        prop_assert_eq!(parse_distance(&format_matrix(d.matrix())).unwrap(), d);
    }

    #[test]
    fn vectors_round_trip(n in 1usize..6, values in prop::collection::vec(rational(), 31)) {
        let v = SubsetVector::new(n, values[..(1 << n) - 1].to_vec()).unwrap();
        prop_assert_eq!(parse_subset_vector(&format_subset_vector(&v)).unwrap(), v);
    }

    #[test]
    fn rationals_print_reduced(p in -50i64..50, q in 1i64..12) {
        let text = format_rat(&rat(p, q));
        let g = gcd(p.abs(), q);
        let expected = if q / g == 1 { (p / g).to_string() } else { format!("{}/{}", p / g, q / g) };
        prop_assert_eq!(text, expected);
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
