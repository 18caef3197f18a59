//! Golden JSON dumps of the quartic series.
//!
//! The files are written from the hand-transcribed closed forms, never from the
//! pipeline: `UPDATE_GOLDEN=1 cargo test -p adiageo --test golden` regenerates them.

use std::path::PathBuf;

use adiageo::series::dump::{component_label, dump, from_json, series_entries, to_json, Dump, DumpTarget};
use adiageo::series::quartic::COMPONENTS;
use adiageo::series::{quartic_pipeline, reference};

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.json"))
}

fn transcribed(target: DumpTarget) -> Dump {
    let mut d = Dump::new();
    match target {
        DumpTarget::W => {
            d.insert("W".into(), series_entries(&reference::w()).unwrap());
        }
        DumpTarget::G => {
            for (i, g) in reference::generators().iter().enumerate() {
                d.insert(format!("G{}", i + 1), series_entries(g).unwrap());
            }
        }
        DumpTarget::Metric => {
            for (g, &(i, j)) in reference::metric().iter().zip(COMPONENTS.iter()) {
                d.insert(component_label(i, j), series_entries(g).unwrap());
            }
        }
    }
    d
}

const TARGETS: [(DumpTarget, &str); 3] = [(DumpTarget::W, "W"), (DumpTarget::G, "G"), (DumpTarget::Metric, "metric")];

fn golden(target: DumpTarget, name: &str) -> String {
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, to_json(&transcribed(target)).unwrap()).unwrap();
    }
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[test]
fn pipeline_dump_matches_golden_bytes() {
    let s = quartic_pipeline().unwrap();
    for (t, name) in TARGETS {
        assert_eq!(to_json(&dump(s, t).unwrap()).unwrap(), golden(t, name), "{name}");
    }
}

#[test]
fn golden_files_parse_back_to_transcriptions() {
    for (t, name) in TARGETS {
        assert_eq!(from_json(&golden(t, name)).unwrap(), transcribed(t), "{name}");
    }
}

#[test]
fn printed_entries_are_present() {
    let w = from_json(&golden(DumpTarget::W, "W")).unwrap();
    // 8/192 sin 2φ₀ in lowest terms.
    assert!(w["W"].iter().any(|e| e.order == 1 && e.harmonic == 2 && e.num == 1 && e.den == 24));
    let g = from_json(&golden(DumpTarget::Metric, "metric")).unwrap();
    assert!(g["g11"].iter().any(|e| e.order == 2 && e.num == 47 && e.den == 32768));
    assert!(g["g33"].iter().any(|e| e.order == 2 && e.num == 130621 && e.den == 382205952));
}
