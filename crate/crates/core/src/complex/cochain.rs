use crate::cubical::{subsets_with_sign, CubeId, PrecubicalSet, Side};

use super::ring::CoefficientRing;
use super::ComplexError;

/// A function from the `dim`-cubes of a precubical set to a ring, stored
/// densely in cube order.
#[derive(Clone, Debug, PartialEq)]
pub struct Cochain<R: CoefficientRing> {
    dim: usize,
    ring: R,
    values: Vec<R::Elem>,
}

impl<R: CoefficientRing> Cochain<R> {
    pub fn zero(x: &PrecubicalSet, dim: usize, ring: R) -> Self {
        let values = vec![ring.zero(); x.cube_count(dim)];
        Cochain { dim, ring, values }
    }

    pub fn from_values(
        x: &PrecubicalSet,
        dim: usize,
        ring: R,
        values: Vec<R::Elem>,
    ) -> Result<Self, ComplexError> {
        if values.len() != x.cube_count(dim) {
            return Err(ComplexError::CochainShape {
                dim,
                expected: x.cube_count(dim),
                found: values.len(),
            });
        }
        Ok(Cochain { dim, ring, values })
    }

    /// The cochain taking `one` on `cube` and zero elsewhere.
    pub fn dual(x: &PrecubicalSet, cube: CubeId, ring: R) -> Result<Self, ComplexError> {
        if !x.contains(cube) {
            return Err(ComplexError::NoSuchCube(cube));
        }
        let mut c = Self::zero(x, cube.dim, ring);
        c.values[cube.index] = c.ring.one();
        Ok(c)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn values(&self) -> &[R::Elem] {
        &self.values
    }

    pub fn value(&self, cube: CubeId) -> &R::Elem {
        debug_assert_eq!(cube.dim, self.dim);
        &self.values[cube.index]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| self.ring.is_zero(v))
    }

    fn zip_with(
        &self,
        other: &Self,
        f: impl Fn(&R, &R::Elem, &R::Elem) -> R::Elem,
    ) -> Result<Self, ComplexError> {
        if self.ring != other.ring {
            return Err(ComplexError::RingMismatch);
        }
        if self.dim != other.dim || self.values.len() != other.values.len() {
            return Err(ComplexError::DimensionMismatch { left: self.dim, right: other.dim });
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| f(&self.ring, a, b))
            .collect();
        Ok(Cochain { dim: self.dim, ring: self.ring.clone(), values })
    }

    pub fn add(&self, other: &Self) -> Result<Self, ComplexError> {
        self.zip_with(other, |r, a, b| r.add(a, b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ComplexError> {
        self.zip_with(other, |r, a, b| r.sub(a, b))
    }

    pub fn neg(&self) -> Self {
        let values = self.values.iter().map(|v| self.ring.neg(v)).collect();
        Cochain { dim: self.dim, ring: self.ring.clone(), values }
    }

    /// Multiplies every value on the left by `k`.
    pub fn scale(&self, k: &R::Elem) -> Self {
        let values = self.values.iter().map(|v| self.ring.mul(k, v)).collect();
        Cochain { dim: self.dim, ring: self.ring.clone(), values }
    }

    fn check_shape(&self, x: &PrecubicalSet) -> Result<(), ComplexError> {
        if self.values.len() != x.cube_count(self.dim) {
            return Err(ComplexError::CochainShape {
                dim: self.dim,
                expected: x.cube_count(self.dim),
                found: self.values.len(),
            });
        }
        Ok(())
    }
}

/// The constant cochain with value one on every vertex.
pub fn unit_cochain<R: CoefficientRing>(x: &PrecubicalSet, ring: R) -> Cochain<R> {
    let values = vec![ring.one(); x.cube_count(0)];
    Cochain { dim: 0, ring, values }
}

/// `(δφ)(u) = Σ_{i=1}^{n+1} (-1)^i (φ(∂_i^1 u) - φ(∂_i^0 u))`.
pub fn coboundary<R: CoefficientRing>(
    x: &PrecubicalSet,
    phi: &Cochain<R>,
) -> Result<Cochain<R>, ComplexError> {
    phi.check_shape(x)?;
    let ring = &phi.ring;
    let n = phi.dim + 1;
    let values = x
        .cubes(n)
        .map(|u| {
            let mut acc = ring.zero();
            for i in 1..=n {
                let diff = ring.sub(
                    phi.value(x.face(u, i, Side::One)),
                    phi.value(x.face(u, i, Side::Zero)),
                );
                let term = if i % 2 == 0 { diff } else { ring.neg(&diff) };
                acc = ring.add(&acc, &term);
            }
            acc
        })
        .collect();
    Ok(Cochain { dim: n, ring: ring.clone(), values })
}

/// The cup product
/// `(φ ⌣ ψ)(u) = Σ_G ρ_GK · φ(front face of u along G) · ψ(back face of u along K)`
/// over the `p`-element subsets `G` of `{1..p+q}`. The front face fixes every
/// direction outside `G` to 0, the back face fixes every direction in `G` to 1.
pub fn cup<R: CoefficientRing>(
    x: &PrecubicalSet,
    phi: &Cochain<R>,
    psi: &Cochain<R>,
) -> Result<Cochain<R>, ComplexError> {
    if phi.ring != psi.ring {
        return Err(ComplexError::RingMismatch);
    }
    phi.check_shape(x)?;
    psi.check_shape(x)?;
    let ring = &phi.ring;
    let p = phi.dim;
    let n = p + psi.dim;
    if x.cube_count(n) == 0 {
        return Ok(Cochain { dim: n, ring: ring.clone(), values: Vec::new() });
    }
    let subsets = subsets_with_sign(n, p)?;
    let values = x
        .cubes(n)
        .map(|u| {
            let mut acc = ring.zero();
            for g in &subsets {
                let front = x.fix_coordinates(u, g.complement(), Side::Zero);
                let back = x.fix_coordinates(u, g.chosen(), Side::One);
                let term = ring.mul(phi.value(front), psi.value(back));
                acc = ring.add(&acc, &ring.signed(&term, g.sign()));
            }
            acc
        })
        .collect();
    Ok(Cochain { dim: n, ring: ring.clone(), values })
}
