use std::process::{Command, Output};

fn monopro(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monopro"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> &str {
    std::str::from_utf8(&output.stdout).expect("utf-8 output")
}

#[test]
fn fold_concatenates() {
    for (arity, values, expected) in [
        ("3", "AA,BB,CC", "AABBCC\n"),
        ("2", ",", "\n"),
        ("4", "a,b,c,d", "abcd\n"),
    ] {
        let out = monopro(&["monocle", "fold", "--arity", arity, "--values", values]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout(&out), expected);
    }
}

#[test]
fn foldmap_maps_then_combines() {
    for (arity, map, values, expected) in [
        ("3", "len", "a,bb,ccc", "6\n"),
        ("2", "upper", "ab,cd", "ABCD\n"),
        ("2", "len", ",", "0\n"),
    ] {
        let out = monopro(&["monocle", "foldmap", "--arity", arity, "--map", map, "--values", values]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout(&out), expected);
    }
}

#[test]
fn usage_errors_exit_with_2() {
    for args in [
        &["monocle", "fold", "--arity", "3", "--values", "a,b"][..],
        &["monocle", "fold", "--arity", "5", "--values", "a,b,c,d,e"],
        &[
            "monocle", "foldmap", "--arity", "2", "--map", "reverse", "--values", "a,b",
        ],
        &["monocle", "fold", "--values", "a,b"],
        &["unknown"],
    ] {
        let out = monopro(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn qsort_prints_log_then_result() {
    let out = monopro(&["qsort", "b", "a", "c"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("Splitting: "));
    assert!(text.ends_with("RESULT: a b c\n"));

    let empty = monopro(&["qsort"]);
    assert_eq!(empty.status.code(), Some(0));
    assert_eq!(stdout(&empty), "RESULT: \n");
}

#[test]
fn qsort_failure_keeps_the_log() {
    let out = monopro(&["qsort", "b", "", "c"]);
    assert_eq!(out.status.code(), Some(1));
    let lines: Vec<&str> = stdout(&out).lines().collect();
    assert_eq!(lines.last(), Some(&"FAIL"));
    assert!(lines[..lines.len() - 1].iter().all(|l| l.starts_with("Splitting: ")));
    assert!(lines.len() > 1);
}

#[test]
fn qsort_accepts_words_that_look_like_flags() {
    let out = monopro(&["qsort", "-x", "a"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("RESULT: -x a\n"));
}
