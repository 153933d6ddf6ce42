use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_philotope"));
    c.env_remove("PHILOTOPE_SEED").env_remove("RUST_LOG");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn fixture() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/data/corpus")
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn ok(o: &Output) -> String {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// H1 persistences above `fraction` of the largest.
fn dominant_h1(diagram: &str, fraction: f64) -> usize {
    let pers: Vec<f64> = diagram
        .lines()
        .filter(|l| l.starts_with("1 "))
        .map(|l| {
            let f: Vec<f64> = l.split_whitespace().skip(1).map(|x| x.parse().unwrap()).collect();
            f[1] - f[0]
        })
        .collect();
    let top = pers.iter().copied().fold(0.0, f64::max);
    pers.iter().filter(|&&p| p > fraction * top).count()
}

#[test]
fn synthetic_diagram_bottleneck_chain() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let mut dominant = Vec::new();
    for shape in ["circle", "two-circles"] {
        let cloud = d.join(format!("{shape}.txt"));
        let dgm = d.join(format!("{shape}.dgm"));
        ok(&run(&["synthetic", shape, "--n", "100", "--seed", "1", "--output", s(&cloud)]));
        ok(&run(&[
            "diagram", s(&cloud), "--metric", "euclidean", "--dim", "1", "--threshold", "2", "--output", s(&dgm),
        ]));
        dominant.push(dominant_h1(&std::fs::read_to_string(&dgm).unwrap(), 0.25));
    }
    assert_eq!(dominant, [1, 2]);
    let c = d.join("circle.dgm");
    assert_eq!(ok(&run(&["bottleneck", s(&c), s(&c), "--dim", "1"])).trim(), "0");
    let between = ok(&run(&["bottleneck", s(&c), s(&d.join("two-circles.dgm")), "--dim", "1"]));
    assert!(between.trim().parse::<f64>().unwrap() > 0.0);
}

#[test]
fn synthetic_is_seeded_by_flag_or_env() {
    let a = ok(&run(&["synthetic", "noisy-circle", "--n", "20", "--seed", "4"]));
    let b = ok(&bin().args(["synthetic", "noisy-circle", "--n", "20"]).env("PHILOTOPE_SEED", "4").output().unwrap());
    assert_eq!(a, b);
    assert_ne!(a, ok(&run(&["synthetic", "noisy-circle", "--n", "20", "--seed", "5"])));
}

#[test]
fn preprocess_is_byte_stable_and_guarded() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("p.json");
    let root = fixture();
    let args = ["preprocess", "--corpus-root", s(&root), "--sonnets-per-poet", "3", "--output", s(&out)];
    let msg = ok(&run(&args));
    assert!(msg.starts_with("9 sonnets from 3 poets"), "{msg}");
    let first = std::fs::read(&out).unwrap();
    assert_eq!(run(&args).status.code(), Some(1));
    let mut forced = args.to_vec();
    forced.push("--force");
    ok(&run(&forced));
    assert_eq!(std::fs::read(&out).unwrap(), first);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let missing = run(&["preprocess", "--corpus-root", "/no/such/dir", "--output-dir", s(dir.path())]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&missing.stderr).contains("/no/such/dir"));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["synthetic", "square"]).status.code(), Some(1));
    assert_eq!(run(&["run", "--trials", "0"]).status.code(), Some(1));
    assert_eq!(run(&["run", "--poets", "lope"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));

    let bad = dir.path().join("bad.dgm");
    std::fs::write(&bad, "0 0 1\n0 x 2\n").unwrap();
    let o = run(&["bottleneck", s(&bad), s(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn full_run_then_stats_and_plot() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out");
    let cfg = dir.path().join("exp.toml");
    std::fs::write(
        &cfg,
        format!(
            "corpus-root = {:?}\nsonnets-per-poet = 3\nepochs = 4\ndim = 12\nwindow = 5\nseed = 3\n",
            s(&fixture())
        ),
    )
    .unwrap();
    let tables = ok(&run(&["run", "--config", s(&cfg), "--trials", "2", "--output-dir", s(&out)]));
    assert!(tables.contains("Greenhouse-Geisser"));
    let csv = std::fs::read_to_string(out.join("trials.csv")).unwrap();
    let lines: Vec<_> = csv.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("0,3,") && lines[2].starts_with("1,4,"), "{csv}");
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out.join("anova.json")).unwrap()).unwrap();
    assert_eq!(json["anova"]["trials"], 2);
    assert_eq!(json["config"]["embedding"]["epochs"], 4);
    assert!(std::fs::read_to_string(out.join("boxplot.svg")).unwrap().starts_with("<svg"));
    assert!(out.join("corpus.json").exists());

    let trials = out.join("trials.csv");
    let again = ok(&run(&["stats", s(&trials), "--json", s(&dir.path().join("a.json"))]));
    assert!(tables.starts_with(&again), "{again}\n---\n{tables}");
    let svg = dir.path().join("b.svg");
    ok(&run(&["plot", s(&trials), "--output", s(&svg)]));
    assert_eq!(std::fs::read(&svg).unwrap(), std::fs::read(out.join("boxplot.svg")).unwrap());
}

#[test]
fn embed_writes_checkpoint_and_clouds() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(&run(&["preprocess", "--corpus-root", s(&fixture()), "--sonnets-per-poet", "2", "--output-dir", s(d)]));
    ok(&run(&["embed", "--output-dir", s(d), "--epochs", "3", "--dim", "10"]));
    assert!(d.join("embedding.bin").exists() && d.join("embedding.bin.vocab.json").exists());
    let lope = d.join("cloud-lope.txt");
    let dgm = ok(&run(&["diagram", s(&lope)]));
    assert!(dgm.contains("# metric=cosine"));
    assert_eq!(dgm.lines().filter(|l| l.ends_with(" inf")).count(), 1);
}

#[test]
fn fetch_converts_a_local_checkout() {
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("src/tei");
    std::fs::create_dir_all(&src).unwrap();
    for (name, verse) in [("Quevedo_1.xml", "Miré los muros"), ("Lope_de_Vega_1.xml", "Un soneto"), ("Góngora_1.xml", "La dulce boca")] {
        std::fs::write(src.join(name), format!("<TEI><text><body><lg><l>{verse}</l><l>otro verso</l></lg></body></text></TEI>")).unwrap();
    }
    let root = dir.path().join("corpus");
    let o = ok(&run(&["fetch-corpus", "--source", s(&dir.path().join("src")), "--corpus-root", s(&root)]));
    assert!(o.contains("gongora: 1 sonnets"), "{o}");
    assert_eq!(std::fs::read_to_string(root.join("lope/0001.txt")).unwrap(), "Un soneto\notro verso\n");
}
