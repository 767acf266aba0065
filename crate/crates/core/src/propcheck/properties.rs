use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::complex::{
    boundary, coboundary, cup, diagonal, tensor_boundary, unit_cochain, Coeff, Cochain, ComplexError,
};
use crate::cubical::{all_subsets_with_sign, PrecubicalSet, Side, SubsetWithSign};

use super::generate::{cocycle_basis, random_chain, random_cochain, random_cocycle_in, random_tensor_chain};
use super::PropcheckError;

/// One executable identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    /// `∂∂ = 0` on chains and on the tensor square.
    DdZero,
    /// `δδ = 0`.
    DeltaDeltaZero,
    /// `(∂ ⊗ 1 + 1 ⊗ ∂) Δ = Δ ∂`.
    DiagonalChainMap,
    /// `δ(φ⌣ψ) = δφ⌣ψ + (-1)^p φ⌣δψ`.
    Leibniz,
    Associativity,
    Distributivity,
    /// The constant 0-cochain 1 is a two-sided unit.
    Unit,
    /// Cup products of cocycles are cocycles, and `δ(ϑ⌣ζ) = δϑ⌣ζ` for a
    /// cocycle `ζ`.
    CocycleClosure,
    /// Commutation rules between single faces and iterated faces, and
    /// independence of the elimination order.
    FaceIdentities,
    /// `φ⌣ψ = (-1)^{pq} ψ⌣φ` on cochains. False in general; report only.
    AnticommutativityCochain,
}

impl Property {
    pub const ALL: [Property; 10] = [
        Property::DdZero,
        Property::DeltaDeltaZero,
        Property::DiagonalChainMap,
        Property::Leibniz,
        Property::Associativity,
        Property::Distributivity,
        Property::Unit,
        Property::CocycleClosure,
        Property::FaceIdentities,
        Property::AnticommutativityCochain,
    ];

    /// Everything except the report-only properties.
    pub fn asserted() -> impl Iterator<Item = Property> {
        Self::ALL.into_iter().filter(|p| p.is_assertion())
    }

    pub fn name(self) -> &'static str {
        match self {
            Property::DdZero => "dd_zero",
            Property::DeltaDeltaZero => "delta_delta_zero",
            Property::DiagonalChainMap => "diagonal_chain_map",
            Property::Leibniz => "leibniz",
            Property::Associativity => "associativity",
            Property::Distributivity => "distributivity",
            Property::Unit => "unit",
            Property::CocycleClosure => "cocycle_closure",
            Property::FaceIdentities => "prop21_identities",
            Property::AnticommutativityCochain => "anticommutativity_cochain",
        }
    }

    pub fn is_assertion(self) -> bool {
        self != Property::AnticommutativityCochain
    }

    /// Evaluates the identity on `x` with cochains drawn from `rng`. Returns
    /// a description of the first discrepancy.
    pub fn evaluate<R: Rng + ?Sized>(self, x: &PrecubicalSet, ring: &Coeff, rng: &mut R) -> Result<(), String> {
        let mut run = || -> Result<Result<(), String>, ComplexError> {
            Ok(match self {
                Property::DdZero => dd_zero(x, rng)?,
                Property::DeltaDeltaZero => delta_delta_zero(x, ring, rng)?,
                Property::DiagonalChainMap => diagonal_chain_map(x, rng)?,
                Property::Leibniz => leibniz(x, ring, rng)?,
                Property::Associativity => associativity(x, ring, rng)?,
                Property::Distributivity => distributivity(x, ring, rng)?,
                Property::Unit => unit(x, ring, rng)?,
                Property::CocycleClosure => cocycle_closure(x, ring, rng)?,
                Property::FaceIdentities => face_identities(x, rng)?,
                Property::AnticommutativityCochain => anticommutativity(x, ring, rng)?,
            })
        };
        run().unwrap_or_else(|e| Err(format!("evaluation error: {e}")))
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = PropcheckError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| PropcheckError::UnknownProperty(s.to_string()))
    }
}

fn top(x: &PrecubicalSet) -> usize {
    x.max_dim().unwrap_or(0)
}

/// First cube where two cochains of the same degree differ.
fn compare(x: &PrecubicalSet, what: &str, lhs: &Cochain<Coeff>, rhs: &Cochain<Coeff>) -> Result<(), String> {
    if lhs == rhs {
        return Ok(());
    }
    if lhs.dim() != rhs.dim() || lhs.values().len() != rhs.values().len() {
        return Err(format!("{what}: degrees {} and {} differ", lhs.dim(), rhs.dim()));
    }
    let k = lhs.values().iter().zip(rhs.values()).position(|(a, b)| a != b).unwrap_or(0);
    let u = x.cubes(lhs.dim()).nth(k).expect("index in range");
    Err(format!(
        "{what}: differs at {} ({}): {} vs {}",
        x.label(u),
        u,
        lhs.values()[k],
        rhs.values()[k]
    ))
}

fn sign_cochain(c: &Cochain<Coeff>, odd: bool) -> Cochain<Coeff> {
    if odd {
        c.neg()
    } else {
        c.clone()
    }
}

fn dd_zero<R: Rng + ?Sized>(x: &PrecubicalSet, rng: &mut R) -> Result<Result<(), String>, ComplexError> {
    for n in 2..=top(x) {
        let c = random_chain(x, n, rng);
        let dd = boundary(x, &boundary(x, &c)?)?;
        if !dd.is_zero() {
            return Ok(Err(format!("∂∂ of a {n}-chain is nonzero: {dd:?}")));
        }
    }
    for n in 2..=2 * top(x) {
        let c = random_tensor_chain(x, n, 6, rng);
        let dd = tensor_boundary(x, &tensor_boundary(x, &c)?)?;
        if !dd.is_zero() {
            return Ok(Err(format!("∂∂ of a tensor {n}-chain is nonzero: {dd:?}")));
        }
    }
    Ok(Ok(()))
}

fn delta_delta_zero<R: Rng + ?Sized>(x: &PrecubicalSet, ring: &Coeff, rng: &mut R) -> Result<Result<(), String>, ComplexError> {
    for n in 0..=top(x) {
        let phi = random_cochain(x, n, ring, rng);
        let dd = coboundary(x, &coboundary(x, &phi)?)?;
        if !dd.is_zero() {
            return Ok(compare(x, &format!("δδ in degree {n}"), &dd, &Cochain::zero(x, n + 2, ring.clone())));
        }
    }
    Ok(Ok(()))
}

fn diagonal_chain_map<R: Rng + ?Sized>(x: &PrecubicalSet, rng: &mut R) -> Result<Result<(), String>, ComplexError> {
    for n in 1..=top(x) {
        let c = random_chain(x, n, rng);
        let lhs = tensor_boundary(x, &diagonal(x, &c)?)?;
        let rhs = diagonal(x, &boundary(x, &c)?)?;
        if lhs != rhs {
            return Ok(Err(format!("∂Δ ≠ Δ∂ on a {n}-chain: {lhs:?} vs {rhs:?}")));
        }
    }
    Ok(Ok(()))
}

fn leibniz<R: Rng + ?Sized>(x: &PrecubicalSet, ring: &Coeff, rng: &mut R) -> Result<Result<(), String>, ComplexError> {
    let t = top(x);
    for p in 0..=t {
        for q in 0..=t - p {
            let phi = random_cochain(x, p, ring, rng);
            let psi = random_cochain(x, q, ring, rng);
            let lhs = coboundary(x, &cup(x, &phi, &psi)?)?;
            let a = cup(x, &coboundary(x, &phi)?, &psi)?;
            let b = sign_cochain(&cup(x, &phi, &coboundary(x, &psi)?)?, p % 2 == 1);
            let r = compare(x, &format!("Leibniz p={p} q={q}"), &lhs, &a.add(&b)?);
            if r.is_err() {
                return Ok(r);
            }
        }
    }
    Ok(Ok(()))
}

fn associativity<R: Rng + ?Sized>(x: &PrecubicalSet, ring: &Coeff, rng: &mut R) -> Result<Result<(), String>, ComplexError> {
    let t = top(x);
    for p in 0..=t {
        for q in 0..=t - p {
            for r in 0..=t - p - q {
                let a = random_cochain(x, p, ring, rng);
                let b = random_cochain(x, q, ring, rng);
                let c = random_cochain(x, r, ring, rng);
                let lhs = cup(x, &cup(x, &a, &b)?, &c)?;
                let rhs = cup(x, &a, &cup(x, &b, &c)?)?;
                let res = compare(x, &format!("associativity p={p} q={q} r={r}"), &lhs, &rhs);
                if res.is_err() {
                    return Ok(res);
                }
            }
        }
    }
    Ok(Ok(()))
}

fn distributivity<R: Rng + ?Sized>(x: &PrecubicalSet, ring: &Coeff, rng: &mut R) -> Result<Result<(), String>, ComplexError> {
    let t = top(x);
    for p in 0..=t {
        for q in 0..=t - p {
            let a = random_cochain(x, p, ring, rng);
            let a2 = random_cochain(x, p, ring, rng);
            let b = random_cochain(x, q, ring, rng);
            let b2 = random_cochain(x, q, ring, rng);
            let k = ring.random_elem(rng);
            let left = compare(
                x,
                &format!("left distributivity p={p} q={q}"),
                &cup(x, &a, &b.add(&b2)?)?,
                &cup(x, &a, &b)?.add(&cup(x, &a, &b2)?)?,
            );
            let right = compare(
                x,
                &format!("right distributivity p={p} q={q}"),
                &cup(x, &a.add(&a2)?, &b)?,
                &cup(x, &a, &b)?.add(&cup(x, &a2, &b)?)?,
            );
            let scalar = compare(
                x,
                &format!("scalars p={p} q={q}"),
                &cup(x, &a.scale(&k), &b)?,
                &cup(x, &a, &b)?.scale(&k),
            );
            for r in [left, right, scalar] {
                if r.is_err() {
                    return Ok(r);
                }
            }
        }
    }
    Ok(Ok(()))
}

fn unit<R: Rng + ?Sized>(x: &PrecubicalSet, ring: &Coeff, rng: &mut R) -> Result<Result<(), String>, ComplexError> {
    let one = unit_cochain(x, ring.clone());
    for n in 0..=top(x) {
        let phi = random_cochain(x, n, ring, rng);
        for (what, prod) in [("1⌣φ", cup(x, &one, &phi)?), ("φ⌣1", cup(x, &phi, &one)?)] {
            let r = compare(x, &format!("{what} in degree {n}"), &prod, &phi);
            if r.is_err() {
                return Ok(r);
            }
        }
    }
    Ok(Ok(()))
}

fn cocycle_closure<R: Rng + ?Sized>(x: &PrecubicalSet, ring: &Coeff, rng: &mut R) -> Result<Result<(), String>, ComplexError> {
    let t = top(x);
    let bases: Vec<_> = (0..=t).map(|n| cocycle_basis(x, n)).collect();
    for p in 0..=t {
        for q in 0..=t - p {
            let phi = random_cocycle_in(x, p, &bases[p], ring, rng);
            let psi = random_cocycle_in(x, q, &bases[q], ring, rng);
            for (name, z) in [("φ", &phi), ("ψ", &psi)] {
                let dz = coboundary(x, z)?;
                if !dz.is_zero() {
                    return Ok(compare(x, &format!("generated {name} is not a cocycle"), &dz, &Cochain::zero(x, dz.dim(), ring.clone())));
                }
            }
            let d = coboundary(x, &cup(x, &phi, &psi)?)?;
            let r = compare(x, &format!("δ(φ⌣ψ) for cocycles p={p} q={q}"), &d, &Cochain::zero(x, p + q + 1, ring.clone()));
            if r.is_err() {
                return Ok(r);
            }
            let theta = random_cochain(x, p, ring, rng);
            let lhs = coboundary(x, &cup(x, &theta, &psi)?)?;
            let rhs = cup(x, &coboundary(x, &theta)?, &psi)?;
            let r = compare(x, &format!("δ(ϑ⌣ζ) = δϑ⌣ζ p={p} q={q}"), &lhs, &rhs);
            if r.is_err() {
                return Ok(r);
            }
        }
    }
    Ok(Ok(()))
}

fn subset(n: usize, chosen: Vec<usize>) -> Result<SubsetWithSign, ComplexError> {
    Ok(SubsetWithSign::new(n, chosen)?)
}

fn face_identities<R: Rng + ?Sized>(x: &PrecubicalSet, rng: &mut R) -> Result<Result<(), String>, ComplexError> {
    for n in 1..=top(x) {
        let subsets = all_subsets_with_sign(n)?;
        for u in x.cubes(n) {
            for g in &subsets {
                let gs = g.chosen();
                for mu in 1..=gs.len() {
                    let gm = gs[mu - 1];
                    let tilde: Vec<usize> = gs
                        .iter()
                        .filter(|&&h| h != gm)
                        .map(|&h| if h > gm { h - 1 } else { h })
                        .collect();
                    let hat: Vec<usize> = gs.iter().copied().filter(|&h| h != gm).collect();
                    let tilde = subset(n - 1, tilde)?;
                    let hat = subset(n, hat)?;
                    for eps in Side::BOTH {
                        for eta in Side::BOTH {
                            let lhs = x.face(x.iterated_face(u, g, eta)?, mu, eps);
                            let rhs = x.iterated_face(x.face(u, gm, eps), &tilde, eta)?;
                            if lhs != rhs {
                                return Ok(Err(format!(
                                    "{}: ∂_{mu}^{eps} λ_G^{eta} ≠ λ^{eta} ∂_{gm}^{eps} for G={gs:?}: {} vs {}",
                                    x.label(u),
                                    x.label(lhs),
                                    x.label(rhs)
                                )));
                            }
                        }
                        let lhs = x.face(x.iterated_face(u, g, eps)?, mu, eps);
                        let rhs = x.iterated_face(u, &hat, eps)?;
                        if lhs != rhs {
                            return Ok(Err(format!(
                                "{}: ∂_{mu}^{eps} λ_G^{eps} ≠ λ_Ĝ^{eps} for G={gs:?}: {} vs {}",
                                x.label(u),
                                x.label(lhs),
                                x.label(rhs)
                            )));
                        }
                    }
                }
                for &j in g.complement() {
                    let shifted: Vec<usize> = gs.iter().map(|&h| if h > j { h - 1 } else { h }).collect();
                    let gj = subset(n - 1, shifted)?;
                    for eps in Side::BOTH {
                        let lhs = x.iterated_face(u, g, eps)?;
                        let rhs = x.iterated_face(x.face(u, j, eps), &gj, eps)?;
                        if lhs != rhs {
                            return Ok(Err(format!(
                                "{}: λ_G^{eps} ≠ λ^{eps} ∂_{j}^{eps} for G={gs:?}: {} vs {}",
                                x.label(u),
                                x.label(lhs),
                                x.label(rhs)
                            )));
                        }
                    }
                }
                let mut order = g.complement().to_vec();
                for eps in Side::BOTH {
                    let canonical = x.iterated_face(u, g, eps)?;
                    for _ in 0..10 {
                        order.shuffle(rng);
                        let other = x.iterated_face_in_order(u, &order, eps)?;
                        if other != canonical {
                            return Ok(Err(format!(
                                "{}: eliminating {order:?} gives {}, canonical order gives {}",
                                x.label(u),
                                x.label(other),
                                x.label(canonical)
                            )));
                        }
                    }
                }
            }
        }
    }
    Ok(Ok(()))
}

/// `φ⌣ψ - (-1)^{pq} ψ⌣φ`.
pub fn cochain_anticommutator(
    x: &PrecubicalSet,
    phi: &Cochain<Coeff>,
    psi: &Cochain<Coeff>,
) -> Result<Cochain<Coeff>, ComplexError> {
    let ab = cup(x, phi, psi)?;
    let ba = cup(x, psi, phi)?;
    if phi.dim() * psi.dim() % 2 == 1 {
        ab.add(&ba)
    } else {
        ab.sub(&ba)
    }
}

fn anticommutativity<R: Rng + ?Sized>(x: &PrecubicalSet, ring: &Coeff, rng: &mut R) -> Result<Result<(), String>, ComplexError> {
    let t = top(x);
    for p in 0..=t {
        for q in 0..=t - p {
            let phi = random_cochain(x, p, ring, rng);
            let psi = random_cochain(x, q, ring, rng);
            let c = cochain_anticommutator(x, &phi, &psi)?;
            if !c.is_zero() {
                return Ok(compare(
                    x,
                    &format!("φ⌣ψ = (-1)^pq ψ⌣φ p={p} q={q}"),
                    &cup(x, &phi, &psi)?,
                    &sign_cochain(&cup(x, &psi, &phi)?, p * q % 2 == 1),
                ));
            }
        }
    }
    Ok(Ok(()))
}
