use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subcount"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn count_command() {
    let cases: [(&[&str], &str); 4] = [
        (&["count", "--group", "free:2", "--index", "3", "--what", "subgroups"], "13\n"),
        (&["count", "--group", "orient:1", "--index", "6", "--what", "classes"], "12\n"),
        (&["count", "--group", "nonorient:3", "--index", "2", "--what", "split"], "1 6\n"),
        (&["count", "--group", "free:2", "--index", "6", "--what", "classes"], "624\n"),
    ];
    for (args, want) in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", stderr(&out));
        assert_eq!(stdout(&out), want);
    }
}

#[test]
fn count_errors_exit_two() {
    for args in [
        &["count", "--group", "orient:2", "--index", "2", "--what", "split"][..],
        &["count", "--group", "nonorient:1", "--index", "2"],
        &["count", "--group", "sphere", "--index", "2"],
        &["count", "--group", "free:2", "--index", "0"],
        &["count", "--group", "free:2", "--index", "x"],
        &["count", "--group", "free:2"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(stdout(&out).is_empty());
        assert!(!stderr(&out).is_empty());
    }
    let out = run(&["count", "--group", "orient:2", "--index", "2", "--what", "split"]);
    assert_eq!(stderr(&out).lines().count(), 1);
}

#[test]
fn table_command() {
    let out = run(&["table", "--group", "free:2", "--max-index", "2", "--format", "csv"]);
    assert_eq!(stdout(&out), "n,M,N\n1,1,1\n2,3,3\n");
    let out = run(&["table", "--group", "orient:2", "--max-index", "1", "--format", "json"]);
    assert_eq!(stdout(&out), "[{\"n\":1,\"M\":1,\"N\":1}]\n");
    let out = run(&["table", "--group", "nonorient:2", "--max-index", "2", "--format", "csv"]);
    assert_eq!(stdout(&out), "n,M,M_plus,M_minus,N\n1,1,0,1,1\n2,3,1,2,3\n");
    let out = run(&["table", "--group", "free:0", "--max-index", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_and_csv_agree() {
    for group in ["free:3", "orient:2", "nonorient:3"] {
        let csv = stdout(&run(&["table", "--group", group, "--max-index", "15", "--format", "csv"]));
        let json = stdout(&run(&["table", "--group", group, "--max-index", "15", "--format", "json"]));
        let mut lines = csv.lines();
        let header: Vec<&str> = lines.next().unwrap().split(',').collect();
        // Compare the decimal text of each JSON number with the CSV field.
        let body = json.trim().trim_start_matches("[{").trim_end_matches("}]");
        for (obj, line) in body.split("},{").zip(lines) {
            let fields: Vec<(&str, &str)> = obj
                .split(',')
                .map(|kv| {
                    let (k, v) = kv.split_once(':').unwrap();
                    (k.trim_matches('"'), v)
                })
                .collect();
            let keys: Vec<&str> = fields.iter().map(|(k, _)| *k).collect();
            assert_eq!(keys, header);
            let vals: Vec<&str> = fields.iter().map(|(_, v)| *v).collect();
            assert_eq!(vals, line.split(',').collect::<Vec<_>>());
        }
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["table", "--group", "nonorient:4", "--max-index", "12", "--format", "json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn verify_command() {
    let out = run(&["verify", "--group", "free:2", "--max-index", "4"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 4);
    assert!(text.lines().all(|l| l.starts_with("PASS")));

    let out = run(&["verify", "--group", "nonorient:3", "--max-index", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("M_plus"));
    assert!(stdout(&out).lines().all(|l| l.starts_with("PASS")));

    let out = run(&["verify", "--group", "free:2", "--max-index", "50"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("resource"));
    assert!(stdout(&out).is_empty());
}

#[test]
fn epi_command() {
    let cases: [(&[&str], &str); 4] = [
        (&["epi", "--rank", "2", "--order", "2"], "3\n"),
        (&["epi", "--torsion", "2", "--rank", "1", "--order", "2"], "3\n"),
        (&["epi", "--torsion", "3,5", "--rank", "4", "--order", "1"], "1\n"),
        (&["epi", "--torsion", "", "--rank", "1", "--order", "6"], "2\n"),
    ];
    for (args, want) in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert_eq!(stdout(&out), want);
    }
    for args in [
        &["epi", "--torsion", "1", "--order", "2"][..],
        &["epi", "--torsion", "2,x", "--order", "2"],
        &["epi", "--order", "0"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}
