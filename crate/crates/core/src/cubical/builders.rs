//! Standard precubical sets.

use super::set::{CubeId, PrecubicalBuilder, PrecubicalSet, Side};

/// A single vertex.
pub fn point() -> PrecubicalSet {
    standard_cube(0)
}

/// Two vertices `a`, `b` joined by the edge `t` from `a` to `b`.
pub fn interval() -> PrecubicalSet {
    let mut b = PrecubicalBuilder::new();
    let a0 = b.vertex("a");
    let a1 = b.vertex("b");
    b.cube("t", &[(a0, a1)]);
    b.build_unchecked()
}

/// One vertex `o` and one loop `t`.
pub fn circle() -> PrecubicalSet {
    let mut b = PrecubicalBuilder::new();
    let o = b.vertex("o");
    b.cube("t", &[(o, o)]);
    b.build_unchecked()
}

/// The square with opposite sides identified: vertex `o`, edges `t1`, `t2`
/// and the 2-cube `v` with `∂_1^ε v = t1`, `∂_2^ε v = t2`.
pub fn torus() -> PrecubicalSet {
    let mut b = PrecubicalBuilder::new();
    let o = b.vertex("o");
    let t1 = b.cube("t1", &[(o, o)]);
    let t2 = b.cube("t2", &[(o, o)]);
    b.cube("v", &[(t1, t1), (t2, t2)]);
    b.build_unchecked()
}

/// One vertex `o`, loops `a`, `b` and a square `s` with `∂_1 s = (a, b)` and
/// `∂_2 s = (b, a)`. The vertex link is a circle, so this is a closed
/// surface; it is the Klein bottle.
pub fn klein_bottle() -> PrecubicalSet {
    let mut b = PrecubicalBuilder::new();
    let o = b.vertex("o");
    let a = b.cube("a", &[(o, o)]);
    let c = b.cube("b", &[(o, o)]);
    b.cube("s", &[(a, c), (c, a)]);
    b.build_unchecked()
}

/// The standard `n`-cube. Its cubes are the words over `{0, 1, *}` of length
/// `n`, a `k`-cube having `k` stars; `∂_i^ε` replaces the `i`-th star by `ε`.
/// Within a dimension cubes are ordered lexicographically with `0 < 1 < *`.
///
/// Panics if `n` exceeds the supported maximum dimension.
pub fn standard_cube(n: usize) -> PrecubicalSet {
    assert!(n <= super::MAX_DIM, "standard_cube: dimension {n} exceeds the cap");
    const STAR: u8 = 2;
    let total = 3usize.pow(n as u32);
    let mut words: Vec<Vec<Vec<u8>>> = vec![Vec::new(); n + 1];
    for code in 0..total {
        let mut word = Vec::with_capacity(n);
        let mut c = code;
        for _ in 0..n {
            word.push((c % 3) as u8);
            c /= 3;
        }
        word.reverse();
        let dim = word.iter().filter(|&&ch| ch == STAR).count();
        words[dim].push(word);
    }
    // `code` order is already lexicographic in 0 < 1 < *.
    let labels: Vec<Vec<String>> = words
        .iter()
        .map(|ws| {
            ws.iter()
                .map(|w| {
                    if w.is_empty() {
                        "pt".to_string()
                    } else {
                        w.iter().map(|&d| ['0', '1', '*'][d as usize]).collect()
                    }
                })
                .collect()
        })
        .collect();
    let mut faces = vec![Vec::new(); n + 1];
    for dim in 1..=n {
        for word in &words[dim] {
            let stars: Vec<usize> = word
                .iter()
                .enumerate()
                .filter(|(_, &ch)| ch == STAR)
                .map(|(pos, _)| pos)
                .collect();
            for &pos in &stars {
                for side in Side::BOTH {
                    let mut w = word.clone();
                    w[pos] = side.index() as u8;
                    let index = words[dim - 1].binary_search(&w).expect("face word exists");
                    faces[dim].push(CubeId::new(dim - 1, index));
                }
            }
        }
    }
    PrecubicalSet::from_parts_unchecked(labels, faces)
}

fn join_labels(left: &str, right: &str) -> String {
    let wrap = |s: &str| {
        if s.contains('.') {
            format!("({s})")
        } else {
            s.to_string()
        }
    };
    format!("{}.{}", wrap(left), wrap(right))
}

/// The tensor product: its `n`-cubes are the pairs `(x, y)` with
/// `dim x + dim y = n`, ordered by `(dim x, index of x, index of y)`. Direction
/// `i` acts on `x` when `i <= dim x` and on `y` (as direction `i - dim x`)
/// otherwise. Labels are `x.y`.
pub fn tensor_product(left: &PrecubicalSet, right: &PrecubicalSet) -> PrecubicalSet {
    let (Some(ltop), Some(rtop)) = (left.max_dim(), right.max_dim()) else {
        return PrecubicalSet::empty();
    };
    let top = ltop + rtop;
    // offsets[n][p] = position of the first pair with dim x = p among n-cubes
    let mut offsets = vec![vec![0usize; ltop + 1]; top + 1];
    let mut labels: Vec<Vec<String>> = vec![Vec::new(); top + 1];
    for (n, names) in labels.iter_mut().enumerate() {
        for p in 0..=ltop.min(n) {
            let q = n - p;
            if q > rtop {
                continue;
            }
            offsets[n][p] = names.len();
            for x in left.labels(p) {
                for y in right.labels(q) {
                    names.push(join_labels(x, y));
                }
            }
        }
    }
    let pair_id = |p: usize, xi: usize, q: usize, yi: usize| {
        let n = p + q;
        CubeId::new(n, offsets[n][p] + xi * right.cube_count(q) + yi)
    };
    let mut faces = vec![Vec::new(); top + 1];
    for (n, table) in faces.iter_mut().enumerate().skip(1) {
        for p in 0..=ltop.min(n) {
            let q = n - p;
            if q > rtop {
                continue;
            }
            for x in left.cubes(p) {
                for y in right.cubes(q) {
                    for i in 1..=n {
                        for side in Side::BOTH {
                            let face = if i <= p {
                                let fx = left.face(x, i, side);
                                pair_id(p - 1, fx.index, q, y.index)
                            } else {
                                let fy = right.face(y, i - p, side);
                                pair_id(p, x.index, q - 1, fy.index)
                            };
                            table.push(face);
                        }
                    }
                }
            }
        }
    }
    PrecubicalSet::from_parts_unchecked(labels, faces)
}
