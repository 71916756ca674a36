#![allow(dead_code)]

use std::collections::BTreeSet;

use kottwitz::linalg::{Int, Rat};
use kottwitz::rootdata::{build_datum, BasedRootDatum, RootFamily};

/// Every supported connected datum of rank at most eight, split and twisted.
pub fn all_small_data() -> Vec<BasedRootDatum> {
    let mut out = Vec::new();
    let mut push = |f: RootFamily, n: usize, g: usize| {
        out.push(build_datum(f, n, g).expect("supported datum"));
    };
    for n in 1..=8 {
        push(RootFamily::A, n, 1);
        if n >= 2 {
            push(RootFamily::A, n, 2);
        }
    }
    for n in 2..=8 {
        push(RootFamily::B, n, 1);
        push(RootFamily::C, n, 1);
    }
    for n in 3..=8 {
        push(RootFamily::D, n, 1);
        push(RootFamily::D, n, 2);
    }
    push(RootFamily::D, 4, 3);
    push(RootFamily::E, 6, 1);
    push(RootFamily::E, 6, 2);
    push(RootFamily::E, 7, 1);
    push(RootFamily::E, 8, 1);
    push(RootFamily::F, 4, 1);
    push(RootFamily::G, 2, 1);
    out
}

/// Newton points of `B(GL_n, omega_r)` by direct lattice-path search:
/// polygons from `(0,0)` to `(n,r)` with strictly increasing slopes and
/// integral break points, staying weakly above the Hodge polygon
/// `x -> max(0, x - (n - r))`.  Slope vectors are returned dominant
/// (weakly decreasing).
pub fn polygon_oracle(n: usize, r: usize) -> BTreeSet<Vec<Rat>> {
    assert!(r <= n);
    let mut out = BTreeSet::new();
    let mut segments: Vec<(i64, i64)> = Vec::new();
    extend(n as i64, r as i64, 0, 0, &mut segments, &mut out);
    out
}

fn extend(
    n: i64,
    r: i64,
    x: i64,
    y: i64,
    segments: &mut Vec<(i64, i64)>,
    out: &mut BTreeSet<Vec<Rat>>,
) {
    if x == n {
        if y == r {
            let mut slopes: Vec<Rat> = Vec::with_capacity(n as usize);
            for &(rise, run) in segments.iter().rev() {
                for _ in 0..run {
                    slopes.push(Rat::new(Int::from(rise), Int::from(run)));
                }
            }
            out.insert(slopes);
        }
        return;
    }
    let hodge = |t: i64| (t - (n - r)).max(0);
    for x1 in x + 1..=n {
        let run = x1 - x;
        for y1 in hodge(x1)..=r {
            let rise = y1 - y;
            if let Some(&(pr, pn)) = segments.last() {
                if rise * pn <= pr * run {
                    continue;
                }
            }
            segments.push((rise, run));
            extend(n, r, x1, y1, segments, out);
            segments.pop();
        }
    }
}
