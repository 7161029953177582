mod common;

use ctseq::harness::scripts::{CAT3_BLOCKS, CAT5_MAX0, EVEN_MOT, MOT3_SLICES};
use ctseq::harness::{emit, load_automaton, parse_automaton, run_check, save_automaton};

const SCRIPTS: &[&str] = &[EVEN_MOT, MOT3_SLICES, CAT3_BLOCKS, CAT5_MAX0];

#[test]
fn emitted_automata_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let all = common::script_automata(SCRIPTS, Some(dir.path().join("cache")));
    assert!(all.len() > 20);
    for (k, (name, a)) in all.iter().enumerate() {
        let text = emit(a);
        assert_eq!(&parse_automaton(&text).unwrap(), a, "{name}");
        let path = dir.path().join(format!("{k}.ctaut"));
        save_automaton(a, &path).unwrap();
        assert_eq!(&load_automaton(&path).unwrap(), a, "{name}");
        assert_eq!(std::fs::read_to_string(&path).unwrap(), text, "{name}");
    }
}

#[test]
fn independent_runs_emit_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let cached = common::script_automata(SCRIPTS, Some(dir.path().to_path_buf()));
    let fresh = common::script_automata(SCRIPTS, None);
    // The second cached run loads the built-ins from disk.
    let reloaded = common::script_automata(SCRIPTS, Some(dir.path().to_path_buf()));
    assert_eq!(cached.len(), fresh.len());
    for ((n1, a), ((n2, b), (_, c))) in cached.iter().zip(fresh.iter().zip(&reloaded)) {
        assert_eq!(n1, n2);
        assert_eq!(emit(a), emit(b), "{n1}");
        assert_eq!(emit(a), emit(c), "{n1}");
    }
}

#[test]
fn check_results_are_reproducible() {
    for name in ["even_mot", "mot3_characterization", "cat3_blocks", "tri5_critical_exponent"] {
        let a = run_check(name).unwrap();
        let b = run_check(name).unwrap();
        assert_eq!((a.passed, &a.steps, &a.error), (b.passed, &b.steps, &b.error), "{name}");
    }
}
