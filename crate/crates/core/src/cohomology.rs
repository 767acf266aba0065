//! Cohomology groups with explicit cocycle generators, reduction of cocycles
//! to class coordinates, and the multiplication table of the cohomology ring.
//!
//! Over `Z` each group is computed from two Smith forms: one of `δ^n`, whose
//! right transform splits off a basis of the cocycles, and one of `δ^{n-1}`
//! written in that basis, whose left transform picks generators adapted to
//! the coboundaries. Over `Z/p` the same two eliminations run over the field.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::complex::{cup, unit_cochain, Cochain, Coeff, ComplexError};
use crate::cubical::{PrecubicalSet, Side};
use crate::linalg::{is_prime, smith_over, IntMatrix, Scalars};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("cohomology groups over Z/{0} are not supported: the modulus is not prime")]
    CompositeModulus(u64),
    #[error("cochain of dimension {dim} is not a cocycle")]
    NotACocycle { dim: usize },
    #[error("cochain has coefficients in {found}, the group in {expected}")]
    RingMismatch { expected: Coeff, found: Coeff },
    #[error("cochain has dimension {found}, the group has degree {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("cochain has {found} values, the complex has {expected} cubes in this degree")]
    Shape { expected: usize, found: usize },
    #[error("class coordinates have length {found}, expected {expected}")]
    CoordinateLength { expected: usize, found: usize },
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// Matrix of `δ^n` in the cube bases: row `u` ranges over `(n+1)`-cubes,
/// column `v` over `n`-cubes, and the entry is the signed number of times `v`
/// occurs as a face of `u`. Entries are reduced modulo `m` for `Z/m`.
pub fn delta_matrix(x: &PrecubicalSet, n: usize, ring: &Coeff) -> IntMatrix {
    let mut m = IntMatrix::zeros(x.cube_count(n + 1), x.cube_count(n));
    for u in x.cubes(n + 1) {
        for i in 1..=n + 1 {
            let sign: i64 = if i % 2 == 0 { 1 } else { -1 };
            m[(u.index, x.face(u, i, Side::One).index)] += sign;
            m[(u.index, x.face(u, i, Side::Zero).index)] -= sign;
        }
    }
    if ring.modulus().is_some() {
        m = m.map(|e| ring.reduce(e.clone()));
    }
    m
}

fn scalars_for(ring: &Coeff) -> Result<Scalars, CohomologyError> {
    match ring {
        Coeff::Integers => Ok(Scalars::Integers),
        Coeff::IntegersMod(p) if is_prime(*p) => Ok(Scalars::PrimeField(BigInt::from(*p))),
        Coeff::IntegersMod(m) => Err(CohomologyError::CompositeModulus(*m)),
    }
}

/// `H^n(X; R)` with chosen generators and the data to reduce any cocycle to
/// coordinates in them.
#[derive(Clone, Debug, PartialEq)]
pub struct CohomologyGroup {
    degree: usize,
    ring: Coeff,
    free_rank: usize,
    torsion: Vec<BigInt>,
    generators: Vec<Cochain<Coeff>>,
    reduction: IntMatrix,
    delta: IntMatrix,
}

impl CohomologyGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn ring(&self) -> &Coeff {
        &self.ring
    }

    /// Rank of the free part over `Z`, dimension over `Z/p`.
    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    /// Orders of the torsion generators, each greater than one.
    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    /// Free generators first, then torsion generators in the order of
    /// [`torsion`](Self::torsion).
    pub fn generators(&self) -> &[Cochain<Coeff>] {
        &self.generators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    /// Order of generator `i`: `None` for a free generator over `Z`.
    pub fn order(&self, i: usize) -> Option<BigInt> {
        if i < self.free_rank {
            self.ring.modulus().map(BigInt::from)
        } else {
            Some(self.torsion[i - self.free_rank].clone())
        }
    }

    /// Rows map a cocycle's values to its class coordinates (before the
    /// final reduction modulo generator orders).
    pub fn reduction(&self) -> &IntMatrix {
        &self.reduction
    }

    fn reduce_coordinates(&self, raw: Vec<BigInt>) -> Vec<BigInt> {
        raw.into_iter()
            .enumerate()
            .map(|(i, c)| match self.order(i) {
                Some(d) => c.mod_floor(&d),
                None => c,
            })
            .collect()
    }

    fn check(&self, z: &Cochain<Coeff>) -> Result<(), CohomologyError> {
        if z.ring() != &self.ring {
            return Err(CohomologyError::RingMismatch {
                expected: self.ring.clone(),
                found: z.ring().clone(),
            });
        }
        if z.dim() != self.degree {
            return Err(CohomologyError::DegreeMismatch { expected: self.degree, found: z.dim() });
        }
        if z.values().len() != self.delta.cols() {
            return Err(CohomologyError::Shape { expected: self.delta.cols(), found: z.values().len() });
        }
        Ok(())
    }

    pub fn is_cocycle(&self, z: &Cochain<Coeff>) -> Result<bool, CohomologyError> {
        self.check(z)?;
        Ok(self
            .delta
            .mul_vec(z.values())
            .into_iter()
            .all(|v| self.ring.reduce(v).is_zero()))
    }

    /// Coordinates of the class of the cocycle `z` in the generators.
    pub fn class_of(&self, z: &Cochain<Coeff>) -> Result<Vec<BigInt>, CohomologyError> {
        if !self.is_cocycle(z)? {
            return Err(CohomologyError::NotACocycle { dim: z.dim() });
        }
        Ok(self.reduce_coordinates(self.reduction.mul_vec(z.values())))
    }

    /// The cocycle `Σ coords_i · g_i`.
    pub fn representative(&self, x: &PrecubicalSet, coords: &[BigInt]) -> Result<Cochain<Coeff>, CohomologyError> {
        if coords.len() != self.generators.len() {
            return Err(CohomologyError::CoordinateLength {
                expected: self.generators.len(),
                found: coords.len(),
            });
        }
        let mut acc = Cochain::zero(x, self.degree, self.ring.clone());
        for (c, g) in coords.iter().zip(&self.generators) {
            acc = acc.add(&g.scale(&self.ring.reduce(c.clone())))?;
        }
        Ok(acc)
    }
}

impl fmt::Display for CohomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let free = match &self.ring {
            Coeff::Integers => "Z".to_string(),
            Coeff::IntegersMod(p) => format!("(Z/{p})"),
        };
        match self.free_rank {
            0 => {}
            1 => parts.push(free.trim_start_matches('(').trim_end_matches(')').to_string()),
            r => parts.push(format!("{free}^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" ⊕ "))
        }
    }
}

fn group_in_degree(x: &PrecubicalSet, n: usize, ring: &Coeff, scalars: &Scalars) -> CohomologyGroup {
    let size = x.cube_count(n);
    let delta = delta_matrix(x, n, ring);
    let previous = match n {
        0 => IntMatrix::zeros(size, 0),
        _ => delta_matrix(x, n - 1, ring),
    };
    let reduce = |m: IntMatrix| {
        if ring.modulus().is_some() {
            m.map(|e| ring.reduce(e.clone()))
        } else {
            m
        }
    };

    let cocycles = smith_over(&delta, scalars.clone());
    let kernel_cols: Vec<usize> = (cocycles.rank..size).collect();
    let kernel = cocycles.v.select_columns(&kernel_cols);
    let kernel_coords = cocycles.v_inv.select_rows(&kernel_cols);

    let image = reduce(kernel_coords.mul(&previous));
    let quotient = smith_over(&image, scalars.clone());
    let reduction_all = reduce(quotient.u.mul(&kernel_coords));
    let generators_all = reduce(kernel.mul(&quotient.u_inv));

    let k = kernel_cols.len();
    let free: Vec<usize> = (quotient.rank..k).collect();
    let torsion_idx: Vec<usize> = (0..quotient.rank).filter(|&i| !quotient.diag[i].is_one()).collect();
    let torsion: Vec<BigInt> = torsion_idx.iter().map(|&i| quotient.diag[i].clone()).collect();
    let order: Vec<usize> = free.iter().chain(&torsion_idx).copied().collect();

    let mut reduction = reduction_all.select_rows(&order);
    let mut generators = Vec::with_capacity(order.len());
    for (row, &col) in order.iter().enumerate() {
        let mut values = generators_all.column(col);
        normalize_generator(ring, &mut values, &mut reduction, row);
        generators.push(Cochain::from_values(x, n, ring.clone(), values).expect("generator has one value per cube"));
    }

    CohomologyGroup {
        degree: n,
        ring: ring.clone(),
        free_rank: free.len(),
        torsion,
        generators,
        reduction,
        delta,
    }
}

// Makes the first nonzero value positive (one over a field), compensating in
// the matching reduction row so that reduction(generator) stays a unit vector.
fn normalize_generator(ring: &Coeff, values: &mut [BigInt], reduction: &mut IntMatrix, row: usize) {
    let Some(lead) = values.iter().find(|v| !v.is_zero()).cloned() else { return };
    match ring {
        Coeff::Integers => {
            if lead.is_negative() {
                values.iter_mut().for_each(|v| *v = -v.clone());
                for j in 0..reduction.cols() {
                    reduction[(row, j)] = -reduction[(row, j)].clone();
                }
            }
        }
        Coeff::IntegersMod(p) => {
            let p = BigInt::from(*p);
            let inv = lead.modpow(&(&p - 2u32), &p);
            values.iter_mut().for_each(|v| *v = (v.clone() * &inv).mod_floor(&p));
            for j in 0..reduction.cols() {
                reduction[(row, j)] = (&reduction[(row, j)] * &lead).mod_floor(&p);
            }
        }
    }
}

/// `H^n(X; R)` for every `n` from 0 to the top dimension. `R` must be `Z` or
/// `Z/p` with `p` prime.
pub fn cohomology_groups(x: &PrecubicalSet, ring: &Coeff) -> Result<Vec<CohomologyGroup>, CohomologyError> {
    let scalars = scalars_for(ring)?;
    let top = match x.max_dim() {
        Some(t) => t,
        None => return Ok(Vec::new()),
    };
    Ok((0..=top)
        .into_par_iter()
        .map(|n| group_in_degree(x, n, ring, &scalars))
        .collect())
}

/// Class coordinates of products of generators: `products[p][q][i][j]` is
/// the class of `g_i^p ⌣ g_j^q` in `H^{p+q}` (an empty vector when `p + q`
/// exceeds the top dimension).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingTable {
    products: Vec<Vec<Vec<Vec<Vec<BigInt>>>>>,
}

impl RingTable {
    pub fn product(&self, p: usize, i: usize, q: usize, j: usize) -> &[BigInt] {
        &self.products[p][q][i][j]
    }

    pub fn degrees(&self) -> usize {
        self.products.len()
    }

    /// Class of the product of two classes given by coordinates, using
    /// bilinearity. Coordinates of torsion generators are reduced by the
    /// caller-supplied groups.
    pub fn multiply(
        &self,
        groups: &[CohomologyGroup],
        p: usize,
        a: &[BigInt],
        q: usize,
        b: &[BigInt],
    ) -> Vec<BigInt> {
        let Some(target) = groups.get(p + q) else { return Vec::new() };
        let mut acc = vec![BigInt::zero(); target.generator_count()];
        for (i, ai) in a.iter().enumerate() {
            for (j, bj) in b.iter().enumerate() {
                let k = ai * bj;
                if k.is_zero() {
                    continue;
                }
                for (slot, c) in acc.iter_mut().zip(self.product(p, i, q, j)) {
                    *slot += &k * c;
                }
            }
        }
        target.reduce_coordinates(acc)
    }
}

/// Builds the multiplication table for already computed groups.
pub fn ring_table_for(x: &PrecubicalSet, groups: &[CohomologyGroup]) -> Result<RingTable, CohomologyError> {
    let degrees = groups.len();
    let products = (0..degrees)
        .into_par_iter()
        .map(|p| {
            (0..degrees)
                .map(|q| {
                    groups[p]
                        .generators()
                        .iter()
                        .map(|a| {
                            groups[q]
                                .generators()
                                .iter()
                                .map(|b| match groups.get(p + q) {
                                    Some(target) => target.class_of(&cup(x, a, b)?),
                                    None => Ok(Vec::new()),
                                })
                                .collect::<Result<Vec<_>, CohomologyError>>()
                        })
                        .collect::<Result<Vec<_>, CohomologyError>>()
                })
                .collect::<Result<Vec<_>, CohomologyError>>()
        })
        .collect::<Result<Vec<_>, CohomologyError>>()?;
    Ok(RingTable { products })
}

/// The cohomology ring: groups, generators and the multiplication table.
#[derive(Clone, Debug, PartialEq)]
pub struct CohomologyRing {
    pub ring: Coeff,
    pub groups: Vec<CohomologyGroup>,
    pub table: RingTable,
}

impl CohomologyRing {
    /// Coordinates of the class of the unit cochain in `H^0`.
    pub fn unit_class(&self, x: &PrecubicalSet) -> Result<Vec<BigInt>, CohomologyError> {
        match self.groups.first() {
            Some(h0) => h0.class_of(&unit_cochain(x, self.ring.clone())),
            None => Ok(Vec::new()),
        }
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        self.groups.iter().map(CohomologyGroup::free_rank).collect()
    }
}

pub fn cohomology_ring(x: &PrecubicalSet, ring: &Coeff) -> Result<CohomologyRing, CohomologyError> {
    let groups = cohomology_groups(x, ring)?;
    let table = ring_table_for(x, &groups)?;
    Ok(CohomologyRing { ring: ring.clone(), groups, table })
}

pub fn ring_table(x: &PrecubicalSet, ring: &Coeff) -> Result<RingTable, CohomologyError> {
    Ok(cohomology_ring(x, ring)?.table)
}

/// The class of `g_i^p ⌣ g_j^q` against `(-1)^{pq}` times the class of
/// `g_j^q ⌣ g_i^p`; `true` when they agree.
pub fn graded_commutes(table: &RingTable, groups: &[CohomologyGroup], p: usize, i: usize, q: usize, j: usize) -> bool {
    let Some(target) = groups.get(p + q) else { return true };
    let ab = table.product(p, i, q, j);
    let ba = table.product(q, j, p, i);
    let sign = if (p * q) % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    let ba: Vec<BigInt> = ba.iter().map(|c| c * &sign).collect();
    target.reduce_coordinates(ba) == ab
}
