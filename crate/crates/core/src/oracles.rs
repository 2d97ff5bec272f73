//! Slow reference implementations used only to check the real ones.
//!
//! Nothing here shares code with the deciders it checks: every function
//! enumerates the defining objects directly.

use itertools::Itertools;

use crate::words::{Permutation, Word};

/// Every balanced split, with the first half holding position 0.
pub fn brute_force_shuffle_square(w: &Word) -> bool {
    let len = w.len();
    if len % 2 != 0 {
        return false;
    }
    if len == 0 {
        return true;
    }
    let n = len / 2;
    (1..len).combinations(n - 1).any(|rest| {
        let mut in_first = vec![false; len];
        in_first[0] = true;
        for &i in &rest {
            in_first[i] = true;
        }
        let first: Vec<u8> = (0..len).filter(|&i| in_first[i]).map(|i| w.letters()[i]).collect();
        let second: Vec<u8> = (0..len).filter(|&i| !in_first[i]).map(|i| w.letters()[i]).collect();
        first == second
    })
}

/// Every balanced split, either orientation of `gamma`.
pub fn brute_force_gamma_square(w: &Word, gamma: &Permutation) -> bool {
    let len = w.len();
    let n = gamma.degree();
    if len != 2 * n {
        return false;
    }
    (0..len).combinations(n).any(|first| {
        let second: Vec<usize> = (0..len).filter(|i| !first.contains(i)).collect();
        let u: Vec<u8> = first.iter().map(|&i| w.letters()[i]).collect();
        let v: Vec<u8> = second.iter().map(|&i| w.letters()[i]).collect();
        let gv: Vec<u8> = gamma.zero_based().iter().map(|&i| v[i]).collect();
        let gu: Vec<u8> = gamma.zero_based().iter().map(|&i| u[i]).collect();
        gv == u || gu == v
    })
}

/// Number of cyclic shifts (with multiplicity) that are shuffle squares.
pub fn brute_force_s(w: &Word) -> usize {
    (0..w.len())
        .filter(|&j| brute_force_shuffle_square(&w.rotate_left(j)))
        .count()
}

/// Quartic scan for a subsequence `X Y Y X` with `X != Y`.
pub fn quartic_xyyx(w: &Word) -> bool {
    let l = w.letters();
    (0..l.len()).combinations(4).any(|q| {
        l[q[0]] == l[q[3]] && l[q[1]] == l[q[2]] && l[q[0]] != l[q[1]]
    })
}

/// Chords `(a, b)` and `(c, d)` drawn as straight segments between points on
/// the unit circle; true iff the segments cross.
pub fn segments_cross(points: usize, a: usize, b: usize, c: usize, d: usize) -> bool {
    let at = |i: usize| {
        let t = std::f64::consts::TAU * i as f64 / points as f64;
        (t.cos(), t.sin())
    };
    let orient = |p: (f64, f64), q: (f64, f64), r: (f64, f64)| {
        (q.0 - p.0) * (r.1 - p.1) - (q.1 - p.1) * (r.0 - p.0)
    };
    let (pa, pb, pc, pd) = (at(a), at(b), at(c), at(d));
    let d1 = orient(pa, pb, pc);
    let d2 = orient(pa, pb, pd);
    let d3 = orient(pc, pd, pa);
    let d4 = orient(pc, pd, pb);
    d1 * d2 < 0.0 && d3 * d4 < 0.0
}

/// Smallest covering subset by increasing size, lexicographic within a size.
pub fn exhaustive_min_cover(adjacency: &[Vec<usize>], perms: usize) -> Option<Vec<usize>> {
    (0..=perms).find_map(|size| {
        (0..perms).combinations(size).find(|chosen| {
            adjacency
                .iter()
                .all(|nb| nb.iter().any(|p| chosen.contains(p)))
        })
    })
}

/// Eulerian circuits found by walking every arc sequence from the anchor,
/// arcs given as a list (parallel arcs distinct). Returns the sequences of
/// visited vertices.
pub fn all_circuits(arcs: &[(u8, u8)], anchor: usize) -> Vec<Vec<u8>> {
    fn walk(arcs: &[(u8, u8)], used: &mut [bool], at: u8, trail: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if used.iter().all(|&u| u) {
            out.push(trail.clone());
            return;
        }
        for i in 0..arcs.len() {
            if !used[i] && arcs[i].0 == at {
                used[i] = true;
                trail.push(arcs[i].1);
                walk(arcs, used, arcs[i].1, trail, out);
                trail.pop();
                used[i] = false;
            }
        }
    }
    let mut used = vec![false; arcs.len()];
    let mut out = Vec::new();
    if arcs.is_empty() {
        return out;
    }
    used[anchor] = true;
    let mut trail = vec![arcs[anchor].0, arcs[anchor].1];
    walk(arcs, &mut used, arcs[anchor].1, &mut trail, &mut out);
    out
}
