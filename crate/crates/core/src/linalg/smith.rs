use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;
use super::{is_prime, LinalgError};

/// The scalars an elimination runs over. Both kinds store entries as
/// `BigInt`; prime-field entries are kept in `0..p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Scalars {
    Integers,
    PrimeField(BigInt),
}

impl Scalars {
    fn reduce(&self, a: BigInt) -> BigInt {
        match self {
            Scalars::Integers => a,
            Scalars::PrimeField(p) => a.mod_floor(p),
        }
    }

    // Euclidean size used to pick pivots.
    fn size(&self, a: &BigInt) -> BigInt {
        match self {
            Scalars::Integers => a.abs(),
            Scalars::PrimeField(_) => BigInt::one(),
        }
    }

    // q with a - q·b strictly smaller than b (or zero).
    fn quotient(&self, a: &BigInt, b: &BigInt) -> BigInt {
        match self {
            Scalars::Integers => a / b,
            Scalars::PrimeField(p) => (a * self.inverse(b)).mod_floor(p),
        }
    }

    fn divides(&self, d: &BigInt, a: &BigInt) -> bool {
        match self {
            Scalars::Integers => (a % d).is_zero(),
            Scalars::PrimeField(_) => true,
        }
    }

    fn inverse(&self, a: &BigInt) -> BigInt {
        match self {
            Scalars::Integers => {
                debug_assert!(a.abs().is_one());
                a.clone()
            }
            Scalars::PrimeField(p) => a.modpow(&(p - 2u32), p),
        }
    }

    // Unit that brings `a` to canonical form (positive, or one in a field).
    fn normalizer(&self, a: &BigInt) -> BigInt {
        match self {
            Scalars::Integers => {
                if a.is_negative() {
                    -BigInt::one()
                } else {
                    BigInt::one()
                }
            }
            Scalars::PrimeField(_) => self.inverse(a),
        }
    }
}

/// Unimodular diagonalisation `u · a · v = s`.
///
/// `s` is diagonal with `d_1 | d_2 | ... | d_rank`, all positive (all one over
/// a prime field), followed by zeros. The inverses of `u` and `v` are tracked
/// alongside so that no inversion is needed afterwards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
    pub s: IntMatrix,
    /// The `min(rows, cols)` diagonal entries of `s`.
    pub diag: Vec<BigInt>,
    pub rank: usize,
}

impl SmithForm {
    /// The nonzero diagonal entries.
    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.diag[..self.rank]
    }

    /// Invariant factors other than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors().iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

struct Elimination {
    scalars: Scalars,
    s: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Elimination {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.s.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.s.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    // row_target += c · row_source
    fn add_row(&mut self, target: usize, source: usize, c: &BigInt) {
        let sc = &self.scalars;
        for m in [&mut self.s, &mut self.u] {
            for j in 0..m.cols() {
                let delta = c * &m[(source, j)];
                if !delta.is_zero() {
                    m[(target, j)] = sc.reduce(&m[(target, j)] + delta);
                }
            }
        }
        let ui = &mut self.u_inv;
        for i in 0..ui.rows() {
            let delta = c * &ui[(i, target)];
            if !delta.is_zero() {
                ui[(i, source)] = sc.reduce(&ui[(i, source)] - delta);
            }
        }
    }

    // col_target += c · col_source
    fn add_col(&mut self, target: usize, source: usize, c: &BigInt) {
        let sc = &self.scalars;
        for m in [&mut self.s, &mut self.v] {
            for i in 0..m.rows() {
                let delta = c * &m[(i, source)];
                if !delta.is_zero() {
                    m[(i, target)] = sc.reduce(&m[(i, target)] + delta);
                }
            }
        }
        let vi = &mut self.v_inv;
        for j in 0..vi.cols() {
            let delta = c * &vi[(target, j)];
            if !delta.is_zero() {
                vi[(source, j)] = sc.reduce(&vi[(source, j)] - delta);
            }
        }
    }

    fn scale_row(&mut self, t: usize, w: &BigInt) {
        let w_inv = self.scalars.inverse(w);
        let sc = &self.scalars;
        for m in [&mut self.s, &mut self.u] {
            for j in 0..m.cols() {
                m[(t, j)] = sc.reduce(&m[(t, j)] * w);
            }
        }
        let ui = &mut self.u_inv;
        for i in 0..ui.rows() {
            ui[(i, t)] = sc.reduce(&ui[(i, t)] * &w_inv);
        }
    }

    // Smallest nonzero entry among `cells`, first one wins ties.
    fn smallest(&self, cells: impl Iterator<Item = (usize, usize)>) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), BigInt)> = None;
        for (i, j) in cells {
            let a = &self.s[(i, j)];
            if a.is_zero() {
                continue;
            }
            let size = self.scalars.size(a);
            if best.as_ref().map_or(true, |(_, b)| size < *b) {
                best = Some(((i, j), size));
            }
        }
        best.map(|(pos, _)| pos)
    }

    fn run(&mut self) -> usize {
        let (m, n) = (self.s.rows(), self.s.cols());
        let mut t = 0;
        while t < m.min(n) {
            let cells = (t..m).flat_map(|i| (t..n).map(move |j| (i, j)));
            let Some((pi, pj)) = self.smallest(cells) else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                for i in t + 1..m {
                    if !self.s[(i, t)].is_zero() {
                        let q = self.scalars.quotient(&self.s[(i, t)], &self.s[(t, t)]);
                        self.add_row(i, t, &-q);
                    }
                }
                for j in t + 1..n {
                    if !self.s[(t, j)].is_zero() {
                        let q = self.scalars.quotient(&self.s[(t, j)], &self.s[(t, t)]);
                        self.add_col(j, t, &-q);
                    }
                }
                let leftovers = (t + 1..m).map(|i| (i, t)).chain((t + 1..n).map(|j| (t, j)));
                if let Some((i, j)) = self.smallest(leftovers) {
                    if j == t {
                        self.swap_rows(t, i);
                    } else {
                        self.swap_cols(t, j);
                    }
                    continue;
                }
                let pivot = self.s[(t, t)].clone();
                let offender = (t + 1..m).find(|&i| {
                    (t + 1..n).any(|j| !self.scalars.divides(&pivot, &self.s[(i, j)]))
                });
                match offender {
                    Some(i) => self.add_row(t, i, &BigInt::one()),
                    None => break,
                }
            }
            let w = self.scalars.normalizer(&self.s[(t, t)]);
            if !w.is_one() {
                self.scale_row(t, &w);
            }
            t += 1;
        }
        t
    }
}

pub(crate) fn smith_over(a: &IntMatrix, scalars: Scalars) -> SmithForm {
    let (m, n) = (a.rows(), a.cols());
    let s = a.map(|x| scalars.reduce(x.clone()));
    let mut e = Elimination {
        s,
        u: IntMatrix::identity(m),
        u_inv: IntMatrix::identity(m),
        v: IntMatrix::identity(n),
        v_inv: IntMatrix::identity(n),
        scalars,
    };
    let rank = e.run();
    let diag: Vec<BigInt> = (0..m.min(n)).map(|i| e.s[(i, i)].clone()).collect();
    let form = SmithForm {
        u: e.u,
        u_inv: e.u_inv,
        v: e.v,
        v_inv: e.v_inv,
        s: e.s,
        diag,
        rank,
    };
    #[cfg(debug_assertions)]
    {
        let reduce = |x: IntMatrix| x.map(|y| e.scalars.reduce(y.clone()));
        let a = reduce(a.clone());
        debug_assert_eq!(reduce(form.u.mul(&a).mul(&form.v)), form.s, "U·A·V != S");
        debug_assert_eq!(reduce(form.u.mul(&form.u_inv)), IntMatrix::identity(m));
        debug_assert_eq!(reduce(form.v_inv.mul(&form.v)), IntMatrix::identity(n));
    }
    form
}

/// Smith normal form over the integers.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    smith_over(a, Scalars::Integers)
}

/// Smith normal form over the field with `p` elements; entries of `a` are
/// reduced first and every output matrix has entries in `0..p`.
pub fn smith_normal_form_mod(a: &IntMatrix, p: u64) -> Result<SmithForm, LinalgError> {
    if !is_prime(p) {
        return Err(LinalgError::NotPrime(p));
    }
    Ok(smith_over(a, Scalars::PrimeField(BigInt::from(p))))
}

/// A basis of the integer kernel `{v : a·v = 0}`: the last `cols - rank`
/// columns of the right transform.
pub fn kernel_basis(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let f = smith_normal_form(a);
    (f.rank..a.cols()).map(|j| f.v.column(j)).collect()
}

/// Integer coordinates `x` with `b·x = target`, or `None` when `target` is
/// outside the lattice spanned by the columns of `b`.
pub fn express_in_lattice(b: &IntMatrix, target: &[BigInt]) -> Result<Option<Vec<BigInt>>, LinalgError> {
    if target.len() != b.rows() {
        return Err(LinalgError::Shape { expected: b.rows(), found: target.len() });
    }
    let f = smith_normal_form(b);
    // S·y = U·target with x = V·y
    let c = f.u.mul_vec(target);
    let mut y = vec![BigInt::zero(); b.cols()];
    for (i, ci) in c.iter().enumerate() {
        if i < f.rank {
            let (q, r) = ci.div_rem(&f.diag[i]);
            if !r.is_zero() {
                return Ok(None);
            }
            y[i] = q;
        } else if !ci.is_zero() {
            return Ok(None);
        }
    }
    Ok(Some(f.v.mul_vec(&y)))
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(a: &IntMatrix) -> Result<BigInt, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let n = a.rows();
    let mut m = a.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                Some(i) => {
                    m.swap_rows(k, i);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)];
                m[(i, j)] = num / &prev;
            }
        }
        prev = m[(k, k)].clone();
    }
    Ok(if n == 0 { BigInt::one() } else { sign * &m[(n - 1, n - 1)] })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn zero_matrix() {
        let f = smith_normal_form(&IntMatrix::zeros(3, 2));
        assert_eq!(f.rank, 0);
        assert_eq!(f.u, IntMatrix::identity(3));
        assert_eq!(f.v, IntMatrix::identity(2));
        assert!(f.s.is_zero());
    }

    #[test]
    fn identity_matrix() {
        let f = smith_normal_form(&IntMatrix::identity(4));
        assert_eq!(f.diag, ints(&[1, 1, 1, 1]));
        assert_eq!(f.rank, 4);
    }

    #[test]
    fn two_by_two() {
        let a = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
        let f = smith_normal_form(&a);
        assert_eq!(f.diag, ints(&[2, 4]));
        assert_eq!(f.u.mul(&a).mul(&f.v), f.s);
        assert_eq!(determinant(&f.u).unwrap().abs(), BigInt::one());
        assert_eq!(determinant(&f.v).unwrap().abs(), BigInt::one());
    }

    #[test]
    fn divisibility_needs_row_mixing() {
        // diag(2, 3) has invariant factors (1, 6)
        let a = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(smith_normal_form(&a).diag, ints(&[1, 6]));
    }

    #[test]
    fn empty_matrices() {
        for (r, c) in [(0, 0), (0, 3), (2, 0)] {
            let f = smith_normal_form(&IntMatrix::zeros(r, c));
            assert_eq!(f.rank, 0);
            assert!(f.diag.is_empty());
        }
        assert_eq!(determinant(&IntMatrix::zeros(0, 0)).unwrap(), BigInt::one());
    }

    #[test]
    fn kernels() {
        assert!(kernel_basis(&IntMatrix::identity(3)).is_empty());
        let k = kernel_basis(&IntMatrix::from_rows(&[vec![1, 1]]));
        assert_eq!(k.len(), 1);
        assert!(k[0] == ints(&[1, -1]) || k[0] == ints(&[-1, 1]));
        let k = kernel_basis(&IntMatrix::zeros(1, 2));
        let span = IntMatrix::from_columns(2, &k);
        assert_eq!(determinant(&span).unwrap().abs(), BigInt::one());
    }

    #[test]
    fn lattice_membership() {
        let b = IntMatrix::from_rows(&[vec![2], vec![0]]);
        assert_eq!(express_in_lattice(&b, &ints(&[0, 0])).unwrap(), Some(ints(&[0])));
        assert_eq!(express_in_lattice(&b, &ints(&[3, 0])).unwrap(), None);
        assert_eq!(express_in_lattice(&b, &ints(&[4, 0])).unwrap(), Some(ints(&[2])));
        assert_eq!(express_in_lattice(&b, &ints(&[4, 1])).unwrap(), None);
        assert!(express_in_lattice(&b, &ints(&[1])).is_err());
    }

    #[test]
    fn modular_form() {
        let a = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
        let f = smith_normal_form_mod(&a, 2).unwrap();
        assert_eq!(f.rank, 0);
        let f = smith_normal_form_mod(&a, 3).unwrap();
        assert_eq!(f.rank, 2);
        assert_eq!(f.diag, ints(&[1, 1]));
        assert!(smith_normal_form_mod(&a, 4).is_err());
    }

    #[test]
    fn bareiss_small() {
        let a = IntMatrix::from_rows(&[vec![0, 2, 1], vec![3, -1, 4], vec![1, 0, 5]]);
        // 0*(-5) - 2*(15-4) + 1*(0+1) = -21
        assert_eq!(determinant(&a).unwrap(), BigInt::from(-21));
        assert!(determinant(&IntMatrix::zeros(2, 3)).is_err());
    }
}
