#![allow(dead_code)]

use bdfreeze::BlochVector64;
use proptest::prelude::*;

/// Tetrahedron vertices (the four Bell states).
pub const VERTICES: [[f64; 3]; 4] = [[1.0, -1.0, 1.0], [-1.0, 1.0, 1.0], [1.0, 1.0, -1.0], [-1.0, -1.0, -1.0]];

/// Physical correlation vectors as convex combinations of the vertices,
/// including faces and edges through zero weights.
pub fn physical_c() -> impl Strategy<Value = BlochVector64> {
    prop::array::uniform4(prop_oneof![1 => Just(0.0), 6 => 0.0f64..1.0]).prop_filter_map("all weights zero", |w| {
        let total: f64 = w.iter().sum();
        (total > 1e-6).then(|| {
            let mut c = [0.0; 3];
            for (wi, v) in w.iter().zip(VERTICES) {
                for k in 0..3 {
                    c[k] += wi / total * v[k];
                }
            }
            BlochVector64::from_array(c)
        })
    })
}

/// Permutation of the axes composed with an even number of sign flips.
pub fn local_symmetry() -> impl Strategy<Value = ([usize; 3], [f64; 3])> {
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let signs = [[1.0, 1.0, 1.0], [-1.0, -1.0, 1.0], [-1.0, 1.0, -1.0], [1.0, -1.0, -1.0]];
    (0..6usize, 0..4usize).prop_map(move |(p, s)| (perms[p], signs[s]))
}

pub fn apply(c: BlochVector64, (perm, signs): ([usize; 3], [f64; 3])) -> BlochVector64 {
    let a = c.to_array();
    BlochVector64::new(signs[0] * a[perm[0]], signs[1] * a[perm[1]], signs[2] * a[perm[2]])
}

pub fn sorted4(mut v: [f64; 4]) -> [f64; 4] {
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    v
}
