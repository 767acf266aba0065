use std::collections::BTreeMap;

use crate::cubical::{all_subsets_with_sign, CubeId, PrecubicalSet, Side};

use super::ComplexError;

/// A finitely supported integer combination of `dim`-cubes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    dim: usize,
    coeffs: BTreeMap<usize, i64>,
}

impl Chain {
    pub fn zero(dim: usize) -> Self {
        Chain { dim, coeffs: BTreeMap::new() }
    }

    /// The chain consisting of the single cube `u` with coefficient one.
    pub fn cube(u: CubeId) -> Self {
        let mut c = Chain::zero(u.dim);
        c.add_term(u.index, 1);
        c
    }

    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut c = Chain::zero(dim);
        for (idx, k) in terms {
            c.add_term(idx, k);
        }
        c
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn add_term(&mut self, index: usize, k: i64) {
        if k == 0 {
            return;
        }
        let e = self.coeffs.entry(index).or_insert(0);
        *e += k;
        if *e == 0 {
            self.coeffs.remove(&index);
        }
    }

    pub fn coefficient(&self, index: usize) -> i64 {
        self.coeffs.get(&index).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (CubeId, i64)> + '_ {
        self.coeffs.iter().map(|(&i, &k)| (CubeId::new(self.dim, i), k))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// A finitely supported integer combination of pairs `x ⊗ y`, all with
/// `dim x + dim y = dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorChain {
    dim: usize,
    coeffs: BTreeMap<(CubeId, CubeId), i64>,
}

impl TensorChain {
    pub fn zero(dim: usize) -> Self {
        TensorChain { dim, coeffs: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Adds `k · (x ⊗ y)`. Panics if the dimensions do not add up.
    pub fn add_term(&mut self, x: CubeId, y: CubeId, k: i64) {
        assert_eq!(x.dim + y.dim, self.dim, "tensor term of the wrong dimension");
        if k == 0 {
            return;
        }
        let e = self.coeffs.entry((x, y)).or_insert(0);
        *e += k;
        if *e == 0 {
            self.coeffs.remove(&(x, y));
        }
    }

    pub fn coefficient(&self, x: CubeId, y: CubeId) -> i64 {
        self.coeffs.get(&(x, y)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (CubeId, CubeId, i64)> + '_ {
        self.coeffs.iter().map(|(&(x, y), &k)| (x, y, k))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

#[inline]
fn alternating(i: usize) -> i64 {
    if i % 2 == 0 {
        1
    } else {
        -1
    }
}

// D(u) = Σ_i (-1)^i (∂_i^1 u - ∂_i^0 u), accumulated into `out` scaled by `k`.
fn boundary_of_cube(x: &PrecubicalSet, u: CubeId, k: i64, mut emit: impl FnMut(CubeId, i64)) {
    for i in 1..=u.dim {
        let s = alternating(i) * k;
        emit(x.face(u, i, Side::One), s);
        emit(x.face(u, i, Side::Zero), -s);
    }
}

fn check_chain(x: &PrecubicalSet, dim: usize, indices: impl Iterator<Item = usize>) -> Result<(), ComplexError> {
    for idx in indices {
        let u = CubeId::new(dim, idx);
        if !x.contains(u) {
            return Err(ComplexError::NoSuchCube(u));
        }
    }
    Ok(())
}

/// The cubical boundary `D = Σ_{i=1}^p (-1)^i (D_i^1 - D_i^0)`.
pub fn boundary(x: &PrecubicalSet, c: &Chain) -> Result<Chain, ComplexError> {
    if c.dim == 0 {
        return Err(ComplexError::BoundaryOfDimensionZero);
    }
    check_chain(x, c.dim, c.coeffs.keys().copied())?;
    let mut out = Chain::zero(c.dim - 1);
    for (u, k) in c.terms() {
        boundary_of_cube(x, u, k, |f, s| out.add_term(f.index, s));
    }
    Ok(out)
}

/// The boundary of the tensor square,
/// `∂(x ⊗ y) = ∂x ⊗ y + (-1)^{dim x} x ⊗ ∂y`; terms with a 0-dimensional
/// factor drop the corresponding summand.
pub fn tensor_boundary(x: &PrecubicalSet, c: &TensorChain) -> Result<TensorChain, ComplexError> {
    if c.dim == 0 {
        return Err(ComplexError::BoundaryOfDimensionZero);
    }
    for (a, b, _) in c.terms() {
        for cube in [a, b] {
            if !x.contains(cube) {
                return Err(ComplexError::NoSuchCube(cube));
            }
        }
    }
    let mut out = TensorChain::zero(c.dim - 1);
    for (a, b, k) in c.terms() {
        if a.dim > 0 {
            boundary_of_cube(x, a, k, |f, s| out.add_term(f, b, s));
        }
        if b.dim > 0 {
            let sign = alternating(a.dim);
            boundary_of_cube(x, b, k * sign, |f, s| out.add_term(a, f, s));
        }
    }
    Ok(out)
}

/// The diagonal `Δ(u) = Σ_G ρ_GK (front face of u along G) ⊗ (back face of u
/// along K)`, the front face fixing the complement of `G` to 0 and the back
/// face fixing the complement of `K` (that is, `G`) to 1.
pub fn diagonal(x: &PrecubicalSet, c: &Chain) -> Result<TensorChain, ComplexError> {
    check_chain(x, c.dim, c.coeffs.keys().copied())?;
    let subsets = all_subsets_with_sign(c.dim)?;
    let mut out = TensorChain::zero(c.dim);
    for (u, k) in c.terms() {
        for g in &subsets {
            let front = x.fix_coordinates(u, g.complement(), Side::Zero);
            let back = x.fix_coordinates(u, g.chosen(), Side::One);
            out.add_term(front, back, k * i64::from(g.sign()));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubical::builders;

    #[test]
    fn torus_top_cube_has_zero_boundary() {
        let t = builders::torus();
        let d = boundary(&t, &Chain::cube(CubeId::new(2, 0))).unwrap();
        assert!(d.is_zero());
    }

    #[test]
    fn interval_edge() {
        let i = builders::interval();
        let d = boundary(&i, &Chain::cube(CubeId::new(1, 0))).unwrap();
        // a - b
        assert_eq!(d, Chain::from_terms(0, [(0, 1), (1, -1)]));
    }

    #[test]
    fn vertex_has_no_boundary() {
        let i = builders::interval();
        assert_eq!(
            boundary(&i, &Chain::cube(CubeId::new(0, 0))),
            Err(ComplexError::BoundaryOfDimensionZero)
        );
    }

    // Symbolic expansion of D(D(u)) on the standard 3-cube, term by term.
    #[test]
    fn boundary_squared_on_three_cube() {
        let c = builders::standard_cube(3);
        let u = CubeId::new(3, 0);
        let mut expansion: BTreeMap<usize, i64> = BTreeMap::new();
        for i in 1..=3usize {
            for (eps, s1) in [(Side::One, 1i64), (Side::Zero, -1)] {
                let f = c.face(u, i, eps);
                for j in 1..=2usize {
                    for (eta, s2) in [(Side::One, 1i64), (Side::Zero, -1)] {
                        let g = c.face(f, j, eta);
                        let sign = alternating(i) * s1 * alternating(j) * s2;
                        *expansion.entry(g.index).or_insert(0) += sign;
                    }
                }
            }
        }
        assert!(expansion.values().all(|&v| v == 0));
        let dd = boundary(&c, &boundary(&c, &Chain::cube(u)).unwrap()).unwrap();
        assert!(dd.is_zero());
    }

    #[test]
    fn tensor_boundary_of_vertices() {
        let t = builders::torus();
        let mut c = TensorChain::zero(0);
        let o = CubeId::new(0, 0);
        c.add_term(o, o, 1);
        assert_eq!(tensor_boundary(&t, &c), Err(ComplexError::BoundaryOfDimensionZero));
        let mut c = TensorChain::zero(2);
        c.add_term(CubeId::new(2, 0), o, 1);
        assert!(tensor_boundary(&t, &c).unwrap().is_zero());
    }

    #[test]
    fn diagonal_of_vertex_and_edge() {
        let i = builders::interval();
        let a = CubeId::new(0, 0);
        let b = CubeId::new(0, 1);
        let t = CubeId::new(1, 0);
        let dv = diagonal(&i, &Chain::cube(a)).unwrap();
        let mut expected = TensorChain::zero(0);
        expected.add_term(a, a, 1);
        assert_eq!(dv, expected);

        let dt = diagonal(&i, &Chain::cube(t)).unwrap();
        let mut expected = TensorChain::zero(1);
        expected.add_term(a, t, 1);
        expected.add_term(t, b, 1);
        assert_eq!(dt, expected);
    }

    #[test]
    fn diagonal_is_chain_map_on_torus() {
        let t = builders::torus();
        let v = Chain::cube(CubeId::new(2, 0));
        let lhs = tensor_boundary(&t, &diagonal(&t, &v).unwrap()).unwrap();
        let rhs = diagonal(&t, &boundary(&t, &v).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        // Δ(v) = o⊗v + t2⊗t1 - t1⊗t2 + v⊗o, whose boundary cancels.
        let d = diagonal(&t, &v).unwrap();
        assert_eq!(d.terms().count(), 4);
        assert_eq!(d.coefficient(CubeId::new(1, 1), CubeId::new(1, 0)), 1);
        assert_eq!(d.coefficient(CubeId::new(1, 0), CubeId::new(1, 1)), -1);
        assert!(lhs.is_zero());
    }
}
