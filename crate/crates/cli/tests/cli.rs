use std::path::PathBuf;

use dclat::dcp::{emit, parse, Structure};
use dclat::generate::{boolean, chain, random_lattice, random_poset};
use dclat::run;
use dclat_core::graph::isomorphism;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn dclat(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("dclat").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn temp_file(name: &str, text: &str) -> String {
    let dir = std::env::temp_dir().join(format!("dclat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn golden_files_round_trip() {
    for name in ["fig1P.dcp", "fig1L.dcp", "m3.dcp", "n5.dcp", "fig5P1.dcp", "fig5P2.dcp"] {
        let text = std::fs::read_to_string(data(name)).unwrap();
        let once = emit(&parse(&text).unwrap());
        assert_eq!(emit(&parse(&once).unwrap()), once, "{name}");
        let (code, out, _) = dclat(&["parse", &data(name)]);
        assert_eq!((code, out), (0, once));
    }
    let p = parse(&std::fs::read_to_string(data("fig1P.dcp")).unwrap()).unwrap();
    assert_eq!(p.len(), 6);
    assert_eq!(p.as_vertex().unwrap().edge_count(), 6);
}

#[test]
fn documented_exit_codes() {
    let (code, out, _) = dclat(&["check", &data("fig1L.dcp"), "--prop", "distributive"]);
    assert_eq!(code, 0, "{out}");
    let (code, out, _) = dclat(&["check", &data("n5.dcp"), "--prop", "modular"]);
    assert_eq!(code, 1);
    assert!(out.contains("witness:"), "{out}");
    let (code, out, _) = dclat(&["check", &data("m3.dcp"), "--prop", "distributive"]);
    assert_eq!(code, 1);
    assert!(out.contains("witness: not distributive"), "{out}");
    let (code, out, _) = dclat(&["components", &data("fig1L.dcp"), "--colors", "2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("4 components"), "{out}");
}

#[test]
fn usage_and_validation_errors_exit_2() {
    let (code, _, err) = dclat(&["check", &data("m3.dcp"), "--prop", "pretty"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown property"));
    let (code, _, _) = dclat(&["frobnicate"]);
    assert_eq!(code, 2);
    let bad = temp_file("bad.dcp", "type vertex-poset\nvertex a color 1\nedge a b\n");
    let (code, _, err) = dclat(&["parse", &bad]);
    assert_eq!(code, 2);
    assert!(err.contains("3:"), "{err}");
    let (code, _, _) = dclat(&["birkhoff", &data("m3.dcp"), "--op", "J"]);
    assert_eq!(code, 2);
    let (code, _, _) = dclat(&["parse", "/nonexistent/file.dcp"]);
    assert_eq!(code, 2);
    let (code, out, _) = dclat(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("Usage"));
}

#[test]
fn birkhoff_and_transforms() {
    let (code, lattice, _) = dclat(&["birkhoff", &data("fig1P.dcp"), "--op", "M"]);
    assert_eq!(code, 0);
    assert_eq!(parse(&lattice).unwrap().len(), 15);
    let m = temp_file("fig1M.dcp", &lattice);
    let (code, back, _) = dclat(&["birkhoff", &m, "--op", "m"]);
    assert_eq!(code, 0);
    let p = parse(&std::fs::read_to_string(data("fig1P.dcp")).unwrap()).unwrap();
    assert!(isomorphism(parse(&back).unwrap().as_vertex().unwrap(), p.as_vertex().unwrap()).is_some());

    let (_, dual, _) = dclat(&["transform", &data("fig1P.dcp"), "--op", "dual"]);
    assert!(dual.contains("vertex v1* color 2"));
    let (_, recolored, _) = dclat(&["transform", &data("fig1P.dcp"), "--op", "recolor:1=5,2=6"]);
    assert!(recolored.contains("vertex v3 color 5"));
    let (code, _, _) = dclat(&["transform", &data("fig1P.dcp"), "--op", "recolor:1=5"]);
    assert_eq!(code, 2);
    let (_, sum, _) = dclat(&[
        "transform",
        &data("fig5P1.dcp"),
        "--op",
        &format!("sum:{}", data("fig5P2.dcp")),
    ]);
    assert_eq!(parse(&sum).unwrap().len(), 6);
    let (_, product, _) = dclat(&[
        "transform",
        &data("m3.dcp"),
        "--op",
        &format!("product:{}", data("m3.dcp")),
    ]);
    assert_eq!(parse(&product).unwrap().len(), 25);
}

#[test]
fn theorem_suites_on_goldens() {
    for (file, theorem) in [
        ("fig1P.dcp", "ft"),
        ("fig1L.dcp", "ft"),
        ("fig1P.dcp", "cor8"),
        ("fig1L.dcp", "prop1"),
        ("m3.dcp", "prop1"),
        ("n5.dcp", "prop1"),
        ("fig1L.dcp", "prop3"),
        ("fig1L.dcp", "prop12"),
        ("fig1L.dcp", "prop13"),
        ("fig1P.dcp", "subord"),
    ] {
        let (code, out, err) = dclat(&["verify", &data(file), "--theorem", theorem]);
        assert_eq!(code, 0, "{theorem} on {file}: {out}{err}");
    }
    let (code, out, _) = dclat(&[
        "verify",
        &data("fig5P1.dcp"),
        "--theorem",
        "cor8",
        "--with",
        &data("fig5P2.dcp"),
        "--map",
        "1=2,2=1",
    ]);
    assert_eq!(code, 0, "{out}");
    let (code, out, _) = dclat(&[
        "verify",
        &data("fig1P.dcp"),
        "--theorem",
        "thm11",
        "--with",
        &data("fig1P.dcp"),
    ]);
    assert_eq!(code, 0, "{out}");
    let chain2 = temp_file("chain2.dcp", &emit(&Structure::Edge(chain(1, 1))));
    let k = temp_file(
        "k.dcp",
        "type edge-lattice\nvertex (c0,c0)\nvertex (c1,c0)\nvertex (c1,c1)\n",
    );
    let (code, out, err) = dclat(&[
        "verify",
        &chain2,
        "--theorem",
        "prop10",
        "--factor",
        &chain2,
        "--with",
        &k,
    ]);
    assert_eq!(code, 0, "{out}{err}");
    // Prop 3 needs a modular lattice.
    let (code, _, _) = dclat(&["verify", &data("n5.dcp"), "--theorem", "prop3"]);
    assert_eq!(code, 2);
}

#[test]
fn distances_and_listings() {
    let (code, out, _) = dclat(&["dist", &data("fig1L.dcp"), "--from", "L14", "--to", "L0"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("distance 6\n"), "{out}");
    assert!(out.contains("formula 6"));
    let (_, out, _) = dclat(&["subordinates", &data("fig1P.dcp"), "--colors", "2"]);
    assert!(out.starts_with("4 subordinates"), "{out}");
    let (_, out, _) = dclat(&["list"]);
    for name in ["ranked", "prop13", "J", "recolor"] {
        assert!(out.contains(name));
    }
}

#[test]
fn generators_and_rendering() {
    let (_, b3, _) = dclat(&["gen", "boolean", "3"]);
    assert_eq!(parse(&b3).unwrap().len(), 8);
    let (_, c0, _) = dclat(&["gen", "chain", "0"]);
    assert_eq!(parse(&c0).unwrap().len(), 1);
    let (_, a, _) = dclat(&["gen", "random", "6", "--p", "0.3", "--seed", "42"]);
    let (_, b, _) = dclat(&["gen", "random", "6", "--p", "0.3", "--seed", "42"]);
    assert_eq!(a, b);
    let (code, _, _) = dclat(&["gen", "random", "6", "--p", "1.5"]);
    assert_eq!(code, 2);

    let b2 = temp_file("b2.dcp", &emit(&Structure::Edge(boolean(2, 1).unwrap())));
    let (code, dot, _) = dclat(&["render", &b2, "--format", "dot"]);
    assert_eq!(code, 0);
    assert_eq!(
        dot.lines().filter(|l| l.contains("->") && l.contains("label=")).count(),
        4
    );
    assert_eq!(dclat(&["render", &b2]).1, dot);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_round_trip(seed in any::<u64>(), n in 0usize..9, p in 0.0f64..1.0, lattice in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = if lattice {
            Structure::Edge(random_lattice(&mut rng, 3, n, &[1, 2, 3]))
        } else {
            Structure::Vertex(random_poset(&mut rng, n, p, &[1, 2, 3]))
        };
        let text = emit(&s);
        let again = emit(&parse(&text).unwrap());
        prop_assert_eq!(&again, &text);
        prop_assert_eq!(emit(&parse(&again).unwrap()), again);
    }
}
