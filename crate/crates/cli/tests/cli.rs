mod common;

use common::{check_well_formed, run};
use pedal_cli::{Document, Value};

const UNIT: &str = "triangle = [[0, 1], [0, 0], [1, 0]]\n";

fn stdout(out: &std::process::Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn pedal_reports_both_ratios() {
    let out = run(&["pedal"], &format!("{UNIT}point = [0.25, 0.25]\n"));
    assert_eq!(out.status.code(), Some(0));
    let doc = Document::parse(&stdout(&out)).unwrap();
    assert_eq!(doc.get_number("ratio.formula").unwrap(), 0.1875);
    assert!((doc.get_number("ratio.constructed").unwrap() - 0.1875).abs() < 1e-15);
    assert_eq!(doc.get("signs.circumcircle"), Some(&Value::word("inside")));
}

#[test]
fn files_in_and_out() {
    let dir = std::env::temp_dir().join(format!("pedal-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("in.txt");
    let output = dir.join("out.txt");
    std::fs::write(&input, format!("{UNIT}ratios = [1, 1, 1]\n")).unwrap();
    let out = run(
        &[
            "inscribe",
            "--input",
            input.to_str().unwrap(),
            "--output",
            output.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let doc = Document::parse(&std::fs::read_to_string(&output).unwrap()).unwrap();
    let areas = ["area.outer", "area.b", "area.c"].map(|k| doc.get_number(k).unwrap());
    assert_eq!(areas, [0.5, 0.125, 0.03125]);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_2() {
    for (args, input) in [
        (vec!["nonsense"], ""),
        (vec!["verify", "--trials", "0"], ""),
        (vec!["--tolerance", "-1", "verify"], ""),
        (vec!["pedal"], "triangle = [[0, 1], [0, 0]\n"),
        (vec!["pedal"], UNIT),
        (
            vec!["locus"],
            "triangle = [[0, 1], [0, 0], [1, 0]]\nratio = yes\n",
        ),
        (vec!["pedal", "--input", "/nonexistent/file"], ""),
    ] {
        let out = run(&args, input);
        assert_eq!(out.status.code(), Some(2), "{args:?} {input:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn geometry_errors_exit_3_and_name_the_element() {
    let cases = [
        (
            vec!["pedal"],
            "triangle = [[0, 0], [1, 1], [2, 2]]\npoint = [0, 0]\n",
            "triangle",
        ),
        (
            vec!["antipedal"],
            &*format!("{UNIT}point = [0, 1]\n"),
            "point",
        ),
        (vec!["locus"], &*format!("{UNIT}ratio = -1\n"), "ratio"),
        (
            vec!["svg"],
            &*format!("{UNIT}antipedal.points = [[0.2, 0.2], [1, 1]]\n"),
            "antipedal.points[1]",
        ),
    ];
    for (args, input, element) in cases {
        let out = run(&args, input);
        assert_eq!(out.status.code(), Some(3), "{args:?}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(err.contains(element), "{err}");
    }
}

#[test]
fn verify_is_deterministic_and_fails_loudly() {
    let a = run(&["verify", "--seed", "9", "--trials", "20"], "");
    let b = run(&["verify", "--seed", "9", "--trials", "20"], "");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let doc = Document::parse(&stdout(&a)).unwrap();
    assert_eq!(doc.get_integer("trials").unwrap(), 20);
    assert_eq!(doc.get("pass"), Some(&Value::Bool(true)));

    // A loose tolerance widens the Simson band until off-circle points
    // are flagged collinear.
    let loose = run(&["--tolerance", "0.5", "verify", "--trials", "20"], "");
    assert_eq!(loose.status.code(), Some(1));
    let doc = Document::parse(&stdout(&loose)).unwrap();
    assert_eq!(doc.get("pass"), Some(&Value::Bool(false)));
}

#[test]
fn svg_is_well_formed_with_all_layers() {
    let scene = format!(
        "{UNIT}pedal.points = [[1, 1], [0.25, 0.25]]\nantipedal.points = [[0.2, 0.3]]\n\
         draw.simson = true\ndraw.locus = [0.1, 0.5]\ndraw.inscribed = [1, 2, 3]\n"
    );
    let out = run(&["svg"], &scene);
    assert_eq!(out.status.code(), Some(0));
    let svg = stdout(&out);
    check_well_formed(&svg).unwrap();
    for id in [
        "circumcircle",
        "reference",
        "constructions",
        "points",
        "labels",
    ] {
        assert!(svg.contains(&format!("<g id=\"{id}\"")), "{id}");
    }
    // Simson line from (1, 0) to (0, 1), y flipped.
    assert!(
        svg.contains(r#"<line x1="0" y1="-1" x2="1" y2="0""#),
        "{svg}"
    );
}

#[test]
fn simson_line_only_when_collinear() {
    let scene = format!("{UNIT}pedal.points = [[0.25, 0.25]]\ndraw.simson = true\n");
    let svg = stdout(&run(&["svg"], &scene));
    assert!(!svg.contains("#d35400"));
}

#[test]
fn emitted_documents_round_trip() {
    for (cmd, input) in [
        ("pedal", format!("{UNIT}point = [3, -2]\n")),
        ("isogonal", format!("{UNIT}point = [0.2, 0.3]\n")),
        ("locus", format!("{UNIT}ratio = 0.1875\n")),
        ("simson", format!("{UNIT}point = [1, 1]\n")),
    ] {
        let text = stdout(&run(&[cmd], &input));
        assert_eq!(Document::parse(&text).unwrap().emit(), text, "{cmd}");
    }
}
