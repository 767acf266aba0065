use super::{CubicalError, MAX_DIM};

/// A subset `G` of `{1..n}` together with its complement `K` and the sign of
/// the permutation `g_1 .. g_p k_1 .. k_q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubsetWithSign {
    n: usize,
    chosen: Vec<usize>,
    complement: Vec<usize>,
    sign: i8,
}

impl SubsetWithSign {
    /// `chosen` must be strictly increasing with entries in `1..=n`.
    pub fn new(n: usize, chosen: Vec<usize>) -> Result<Self, CubicalError> {
        if n > MAX_DIM {
            return Err(CubicalError::DimensionCap { dim: n, max: MAX_DIM });
        }
        if chosen.iter().any(|&g| g == 0 || g > n) || chosen.windows(2).any(|w| w[0] >= w[1]) {
            return Err(CubicalError::InvalidSubset { n, subset: chosen });
        }
        let complement: Vec<usize> = (1..=n).filter(|k| !chosen.contains(k)).collect();
        // Inversions of G·K: pairs (g, k) with g > k.
        let inversions: usize = chosen
            .iter()
            .map(|&g| complement.iter().take_while(|&&k| k < g).count())
            .sum();
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        Ok(SubsetWithSign { n, chosen, complement, sign })
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn chosen(&self) -> &[usize] {
        &self.chosen
    }

    pub fn complement(&self) -> &[usize] {
        &self.complement
    }

    /// `+1` or `-1`.
    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn len(&self) -> usize {
        self.chosen.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chosen.is_empty()
    }

    /// The pair with the roles of `G` and `K` exchanged.
    pub fn swapped(&self) -> SubsetWithSign {
        SubsetWithSign::new(self.n, self.complement.clone()).expect("complement is a valid subset")
    }
}

/// All `p`-element subsets of `{1..n}` in lexicographic order, with
/// complements and signatures.
pub fn subsets_with_sign(n: usize, p: usize) -> Result<Vec<SubsetWithSign>, CubicalError> {
    if n > MAX_DIM {
        return Err(CubicalError::DimensionCap { dim: n, max: MAX_DIM });
    }
    if p > n {
        return Err(CubicalError::SubsetTooLarge { n, p });
    }
    let mut out = Vec::new();
    let mut current: Vec<usize> = (1..=p).collect();
    loop {
        out.push(SubsetWithSign::new(n, current.clone())?);
        // advance to the next combination
        let mut k = p;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            if current[k] < n - (p - 1 - k) {
                current[k] += 1;
                for m in k + 1..p {
                    current[m] = current[m - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Every subset of `{1..n}`, grouped by size (ascending) and lexicographic
/// within a size.
pub fn all_subsets_with_sign(n: usize) -> Result<Vec<SubsetWithSign>, CubicalError> {
    let mut out = Vec::with_capacity(1 << n.min(MAX_DIM));
    for p in 0..=n {
        out.extend(subsets_with_sign(n, p)?);
    }
    Ok(out)
}
