mod common;

use common::{golden, ncforms};
use ncforms_cli::parse::{parse, parse_element, print, Value};
use ncforms_core::instances::{self, Params};
use ncforms_core::scalars::Scalar;

#[test]
fn golden_outputs() {
    let cases: [(&[&str], &str); 5] = [
        (
            &["diff", "--algebra", "quantum-plane", "x*y"],
            "diff_quantum_plane_xy.txt",
        ),
        (
            &[
                "integrate",
                "--algebra",
                "laurent",
                "--normalize",
                "c",
                "5*x^-1 + 3*x^2",
            ],
            "integrate_laurent.txt",
        ),
        (
            &["check", "--suite", "axioms", "--algebra", "super"],
            "check_axioms_super.txt",
        ),
        (
            &["diff", "--algebra", "quantum-plane", "--json", "x*y"],
            "diff_quantum_plane_xy.json",
        ),
        (
            &["check", "--suite", "axioms", "--algebra", "super", "--json"],
            "check_axioms_super.json",
        ),
    ];
    for (args, file) in cases {
        let run = ncforms(args);
        assert_eq!(run.code, 0, "{args:?}: {}", run.stderr);
        assert_eq!(run.stdout, golden(file), "{args:?}");
    }
}

#[test]
fn exit_codes() {
    let run = ncforms(&["diff", "--algebra", "laurent", "y + 1"]);
    assert_eq!(run.code, 1);
    assert!(run.stderr.contains("token 'y' not in algebra 'laurent'"));
    assert_eq!(ncforms(&["frobnicate"]).code, 2);
    assert_eq!(ncforms(&["diff", "--algebra", "torus", "x"]).code, 2);
    assert_eq!(
        ncforms(&["diff", "--algebra", "laurent", "--set", "r=1", "x"]).code,
        2
    );
    assert_eq!(
        ncforms(&["diff", "--algebra", "laurent", "--set", "q=a", "x"]).code,
        2
    );
    assert_eq!(
        ncforms(&["integrate", "--algebra", "quantum-plane", "x"]).code,
        1
    );
    assert_eq!(
        ncforms(&["div", "--algebra", "laurent", "--fy", "x"]).code,
        1
    );
    assert_eq!(
        ncforms(&["diff", "--algebra", "quantum-plane", "x +"]).code,
        1
    );
    assert_eq!(
        ncforms(&["check", "--algebra", "super", "--suite", "flatness"]).code,
        1
    );
}

#[test]
fn commands() {
    let out = |args: &[&str]| {
        let r = ncforms(args);
        assert_eq!(r.code, 0, "{args:?}: {}", r.stderr);
        r.stdout.trim_end().to_string()
    };
    assert_eq!(
        out(&["diff", "--algebra", "laurent", "x^2"]),
        "(q + 1)*x*dx"
    );
    assert_eq!(
        out(&["diff", "--algebra", "laurent", "--set", "q=1", "x^2"]),
        "2*x*dx"
    );
    assert_eq!(
        out(&["diff", "--algebra", "quantum-plane", "x*dy"]),
        "dx*dy"
    );
    assert_eq!(out(&["diff", "--algebra", "quantum-plane", "x*dx*dy"]), "0");
    assert_eq!(
        out(&["diff", "--algebra", "super", "u*th"]),
        "tau*u*th*dx + u*dth"
    );
    assert_eq!(
        out(&["normalize", "--algebra", "quantum-plane", "y*x"]),
        "q^-1*x*y"
    );
    assert_eq!(
        out(&["normalize", "--algebra", "laurent", "-x^-2 + x"]),
        "x - x^-2"
    );
    assert_eq!(out(&["div", "--algebra", "laurent", "--fx", "x"]), "q");
    assert_eq!(
        out(&[
            "div",
            "--algebra",
            "laurent",
            "--divergence",
            "inner",
            "--fx",
            "x"
        ]),
        "-q/(q - 1)"
    );
    assert_eq!(
        out(&[
            "div",
            "--algebra",
            "super",
            "--divergence",
            "diagonal",
            "--fth",
            "-u*th"
        ]),
        "u"
    );
    assert_eq!(
        out(&["integrate", "--algebra", "super", "u^-1*th + 3*th + u"]),
        "3"
    );
    assert_eq!(
        out(&[
            "integrate",
            "--algebra",
            "laurent",
            "--normalize",
            "tau",
            "5*x^-1"
        ]),
        "5*tau"
    );
    assert_eq!(
        out(&[
            "diff",
            "--algebra",
            "quantum-plane",
            "--set",
            "q=2/3,p=-5",
            "--json",
            "x*y"
        ]),
        r#"{"command":"diff","algebra":"quantum-plane","params":{"q":"2/3","p":"-5"},"result":"2/3*y*dx - 5*x*dy"}"#
    );
    for algebra in ["quantum-plane", "laurent", "super"] {
        let r = ncforms(&["check", "--algebra", algebra, "--degree-bound", "3"]);
        assert_eq!(r.code, 0, "{algebra}: {}", r.stdout);
        assert!(r.stdout.lines().all(|l| l.starts_with("PASS")));
    }
}

#[test]
fn forms_round_trip() {
    let md = instances::quantum_plane(Scalar::q(), Scalar::p()).unwrap();
    let params = Params::default();
    for src in [
        "x*dx + (q + p)*y^2*dy",
        "dy*x*y",
        "(1 - x)*dx*dy",
        "x^3*y - 1/2",
    ] {
        let v = parse(src, &md, &params).unwrap();
        let again = parse(&print(&v, &md), &md, &params).unwrap();
        assert_eq!(v, again, "{src}");
    }
    let sc = instances::supercircle(Scalar::tau()).unwrap();
    let v = parse_element("(u + th)^3", &sc, &params).unwrap();
    assert_eq!(parse_element(&v.to_string(), &sc, &params).unwrap(), v);
    assert!(matches!(
        parse("dx*u", &sc, &params).unwrap(),
        Value::OneForm(_)
    ));
}
