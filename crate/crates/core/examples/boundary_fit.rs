// Fitting a max of affine forms from below a grid point, counting the
// points left off the boundary, and probing for a violated radical element.

use tropical_entropy::linearization::{GridFunction, Window, ZeroDimPrevariety};
use tropical_entropy::rational::{format, int};
use tropical_entropy::sweep::{boundary_deficiency, maxplus_fit, zero_dim_radical_probe};

fn main() {
    // Forms 0, X and Y: the prevariety points (0,0), (-1,0), (0,-1).
    let v =
        ZeroDimPrevariety::from_forms(vec![vec![int(0), int(0)], vec![int(1), int(0)], vec![int(0), int(1)]]).unwrap();
    let c0 = [int(0), int(-2), int(-2)];
    let window = Window::new(2, 4);
    let mut w = GridFunction::from_fn(window, |a| -v.roof(&c0, a));

    let fit = maxplus_fit(&v, &w).unwrap();
    let offsets: Vec<String> = fit.offsets.iter().map(format).collect();
    println!("exact data: offsets {offsets:?}, deficiency {:?}", fit.deficiency);
    println!("probe: {:?}", zero_dim_radical_probe(&v, &w).unwrap().hit.map(|h| h.anchor));

    let i = window.index(&[1, 1]);
    w.values[i] -= int(2);
    let r = boundary_deficiency(&v, &w, &int(1)).unwrap();
    println!("raised (1,1): deficiency {:?}, certified {}, bound {:?}", r.fit.deficiency, r.certified, r.bound);
    let probe = zero_dim_radical_probe(&v, &w).unwrap();
    let hit = probe.hit.unwrap();
    println!("violated generator: {}", serde_json::to_string(&hit.generator).unwrap());
    let vals: Vec<String> = hit.term_values.iter().map(format).collect();
    println!("  term values {vals:?}, unique minimum at {:?}", hit.anchor);
}
