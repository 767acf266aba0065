use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use crate::cohomology::delta_matrix;
use crate::complex::{coboundary, Chain, Coeff, Cochain, TensorChain};
use crate::cubical::builders::tensor_product;
use crate::cubical::{CubeId, PrecubicalBuilder, PrecubicalSet};
use crate::document::serialize;
use crate::linalg::kernel_basis;

use super::{GenConfig, PropcheckError};

/// A directed multigraph as a 1-dimensional precubical set. Loops and
/// parallel edges are allowed.
pub fn random_graph<R: Rng + ?Sized>(vertices: usize, edges: usize, rng: &mut R) -> PrecubicalSet {
    let mut b = PrecubicalBuilder::new();
    let vs: Vec<CubeId> = (0..vertices).map(|i| b.vertex(&format!("v{i}"))).collect();
    if !vs.is_empty() {
        for e in 0..edges {
            let s = vs[rng.gen_range(0..vs.len())];
            let t = vs[rng.gen_range(0..vs.len())];
            b.cube(&format!("e{e}"), &[(s, t)]);
        }
    }
    b.build().expect("graphs are always valid")
}

/// Keeps each cube of dimension at most `max_dim` with probability
/// `fraction`, then adds every face of a kept cube. The result is a
/// precubical subset of `x`.
pub fn random_subcomplex<R: Rng + ?Sized>(
    x: &PrecubicalSet,
    fraction: f64,
    max_dim: usize,
    rng: &mut R,
) -> PrecubicalSet {
    let Some(top) = x.max_dim() else { return x.clone() };
    let mut keep: Vec<Vec<bool>> = (0..=top)
        .map(|n| {
            (0..x.cube_count(n))
                .map(|_| n <= max_dim && rng.gen_bool(fraction))
                .collect()
        })
        .collect();
    for n in (1..=top).rev() {
        for u in x.cubes(n) {
            if keep[n][u.index] {
                for i in 1..=n {
                    for side in crate::cubical::Side::BOTH {
                        keep[n - 1][x.face(u, i, side).index] = true;
                    }
                }
            }
        }
    }
    x.restrict(&keep)
}

/// Tensor product of `cfg.factors` random graphs, then a random face-closed
/// subset of it.
pub fn random_precubical(cfg: &GenConfig) -> Result<PrecubicalSet, PropcheckError> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut x = random_graph(cfg.vertices, cfg.edges, &mut rng);
    for _ in 1..cfg.factors {
        let g = random_graph(cfg.vertices, cfg.edges, &mut rng);
        x = tensor_product(&x, &g);
    }
    let out = random_subcomplex(&x, cfg.fraction, cfg.max_dim, &mut rng);
    debug_assert!(out.validate().is_valid());
    Ok(out)
}

/// Hex SHA-256 of the canonical document of `x`.
pub fn instance_digest(x: &PrecubicalSet) -> String {
    hex::encode(Sha256::digest(serialize(x).as_bytes()))
}

pub fn random_cochain<R: Rng + ?Sized>(x: &PrecubicalSet, dim: usize, ring: &Coeff, rng: &mut R) -> Cochain<Coeff> {
    let values = (0..x.cube_count(dim)).map(|_| ring.random_elem(rng)).collect();
    Cochain::from_values(x, dim, ring.clone(), values).expect("shape matches by construction")
}

pub fn random_chain<R: Rng + ?Sized>(x: &PrecubicalSet, dim: usize, rng: &mut R) -> Chain {
    Chain::from_terms(dim, (0..x.cube_count(dim)).map(|i| (i, rng.gen_range(-3..=3))))
}

/// Random element of the `dim` part of the tensor square of the chain complex.
pub fn random_tensor_chain<R: Rng + ?Sized>(x: &PrecubicalSet, dim: usize, terms: usize, rng: &mut R) -> TensorChain {
    let mut c = TensorChain::zero(dim);
    let splits: Vec<usize> = (0..=dim)
        .filter(|&p| x.cube_count(p) > 0 && x.cube_count(dim - p) > 0)
        .collect();
    if splits.is_empty() {
        return c;
    }
    for _ in 0..terms {
        let p = splits[rng.gen_range(0..splits.len())];
        let a = CubeId::new(p, rng.gen_range(0..x.cube_count(p)));
        let b = CubeId::new(dim - p, rng.gen_range(0..x.cube_count(dim - p)));
        c.add_term(a, b, rng.gen_range(-3..=3));
    }
    c
}

/// An integral basis of the `dim`-cocycles, one vector per basis element.
pub fn cocycle_basis(x: &PrecubicalSet, dim: usize) -> Vec<Vec<BigInt>> {
    kernel_basis(&delta_matrix(x, dim, &Coeff::Integers))
}

/// A random cocycle: a random combination of an integral basis of the
/// cocycles (reduced into the ring) plus a random coboundary.
pub fn random_cocycle<R: Rng + ?Sized>(
    x: &PrecubicalSet,
    dim: usize,
    ring: &Coeff,
    rng: &mut R,
) -> Cochain<Coeff> {
    random_cocycle_in(x, dim, &cocycle_basis(x, dim), ring, rng)
}

/// [`random_cocycle`] with a precomputed [`cocycle_basis`].
pub fn random_cocycle_in<R: Rng + ?Sized>(
    x: &PrecubicalSet,
    dim: usize,
    basis: &[Vec<BigInt>],
    ring: &Coeff,
    rng: &mut R,
) -> Cochain<Coeff> {
    let mut values = vec![BigInt::from(0); x.cube_count(dim)];
    for column in basis {
        let k = ring.random_elem(rng);
        for (v, b) in values.iter_mut().zip(column) {
            *v += &k * b;
        }
    }
    let mut z = Cochain::from_values(x, dim, ring.clone(), values.into_iter().map(|v| ring.reduce(v)).collect())
        .expect("shape matches by construction");
    if dim > 0 {
        let h = random_cochain(x, dim - 1, ring, rng);
        let dh = coboundary(x, &h).expect("cochain belongs to x");
        z = z.add(&dh).expect("same ring and degree");
    }
    z
}
