use plantlab_wasm::{balanced_motif_json, ldlr_curve_json, phase_grid_json};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn curve_spans_the_requested_grid() {
    let v = parse(ldlr_curve_json(2, 0.48, 0.5, 0.6, 10, 3.0, 6.0, 4).unwrap());
    assert_eq!(v["regime"], "hard");
    let curve = v["curve"].as_array().unwrap();
    let ns: Vec<u64> = curve.iter().map(|c| c["n"].as_u64().unwrap()).collect();
    assert_eq!(ns, [1_000, 10_000, 100_000, 1_000_000]);
    let first = curve[0]["log10_ldlr_minus_1"].as_f64().unwrap();
    assert!((10f64.powf(first) - 5.7067e-3).abs() < 1e-6);
}

#[test]
fn curve_rejects_bad_input() {
    assert!(ldlr_curve_json(2, 0.6, 0.5, 0.6, 10, 3.0, 6.0, 4).is_err());
    assert!(ldlr_curve_json(2, 0.3, 0.5, 0.6, 10, 6.0, 3.0, 4).is_err());
}

#[test]
fn phase_grid_labels_cells_by_threshold() {
    let v = parse(phase_grid_json(2, 0.5, 1000, 6, 8).unwrap());
    let cells = v["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 64);
    for c in cells {
        let (a, g) = (c["alpha"].as_f64().unwrap(), c["gamma"].as_f64().unwrap());
        let t = if g >= 0.5 { 0.25 + 2.0 * (g - 0.5) } else { 0.5 * g };
        let want = if (a - t).abs() <= 1e-12 {
            "boundary"
        } else if a < t {
            "easy"
        } else {
            "hard"
        };
        assert_eq!(c["regime"], want, "alpha {a} gamma {g}");
        assert!(c["log10_ldlr_minus_1"].is_number());
    }
}

#[test]
fn motif_for_k4_region() {
    let v = parse(balanced_motif_json(0.3, 0.75, 0.48, 2).unwrap());
    assert_eq!(v["motif"]["ell"], 4);
    assert_eq!(v["motif"]["m"], 6);
    assert_eq!(v["target"], "3/2");
    assert!(balanced_motif_json(0.3, 0.75, 0.6, 2).is_err());
}
