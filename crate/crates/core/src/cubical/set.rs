use std::fmt;

use super::subset::SubsetWithSign;
use super::{CubicalError, MAX_DIM};

/// One of the two opposite faces in a given coordinate direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Zero,
    One,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::Zero, Side::One];

    pub fn index(self) -> usize {
        match self {
            Side::Zero => 0,
            Side::One => 1,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

/// A cube of a precubical set: its dimension and its position among the
/// cubes of that dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubeId {
    pub dim: usize,
    pub index: usize,
}

impl CubeId {
    pub const fn new(dim: usize, index: usize) -> Self {
        CubeId { dim, index }
    }
}

impl fmt::Display for CubeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X{}[{}]", self.dim, self.index)
    }
}

/// A finite precubical set.
///
/// Cubes of dimension `n` are numbered `0..cube_count(n)`. Face maps are kept
/// in one dense table per dimension, cube-major, then direction `i`, then side.
/// Directions are 1-based throughout the public API.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrecubicalSet {
    labels: Vec<Vec<String>>,
    faces: Vec<Vec<CubeId>>,
}

#[inline]
fn slot(n: usize, u: usize, i: usize, side: Side) -> usize {
    (u * n + (i - 1)) * 2 + side.index()
}

impl PrecubicalSet {
    /// The precubical set with no cubes at all.
    pub fn empty() -> Self {
        PrecubicalSet {
            labels: Vec::new(),
            faces: Vec::new(),
        }
    }

    /// Assembles a set from per-dimension labels and face tables without
    /// checking anything. `faces[n]` holds `2 * n` entries per `n`-cube in the
    /// order `(i = 1, side 0), (i = 1, side 1), (i = 2, side 0), ...`;
    /// `faces[0]` must be empty.
    pub fn from_parts_unchecked(labels: Vec<Vec<String>>, mut faces: Vec<Vec<CubeId>>) -> Self {
        faces.resize(labels.len(), Vec::new());
        let mut set = PrecubicalSet { labels, faces };
        set.trim_top();
        set
    }

    /// Like [`from_parts_unchecked`](Self::from_parts_unchecked) but rejects
    /// anything that fails [`validate`](Self::validate).
    pub fn from_parts(
        labels: Vec<Vec<String>>,
        faces: Vec<Vec<CubeId>>,
    ) -> Result<Self, ValidationReport> {
        let set = Self::from_parts_unchecked(labels, faces);
        let report = set.validate();
        if report.is_valid() {
            Ok(set)
        } else {
            Err(report)
        }
    }

    // Drops empty top dimensions so `max_dim` is meaningful.
    fn trim_top(&mut self) {
        while matches!(self.labels.last(), Some(l) if l.is_empty()) {
            self.labels.pop();
            self.faces.pop();
        }
    }

    /// Number of cubes per dimension, from 0 up to the top dimension.
    pub fn cube_counts(&self) -> Vec<usize> {
        self.labels.iter().map(Vec::len).collect()
    }

    pub fn cube_count(&self, dim: usize) -> usize {
        self.labels.get(dim).map_or(0, Vec::len)
    }

    /// Highest dimension holding a cube, or `None` for the empty set.
    pub fn max_dim(&self) -> Option<usize> {
        self.labels.len().checked_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn total_cubes(&self) -> usize {
        self.labels.iter().map(Vec::len).sum()
    }

    pub fn cubes(&self, dim: usize) -> impl Iterator<Item = CubeId> + '_ {
        (0..self.cube_count(dim)).map(move |i| CubeId::new(dim, i))
    }

    pub fn label(&self, cube: CubeId) -> &str {
        &self.labels[cube.dim][cube.index]
    }

    pub fn labels(&self, dim: usize) -> &[String] {
        self.labels.get(dim).map_or(&[], Vec::as_slice)
    }

    pub fn find(&self, dim: usize, label: &str) -> Option<CubeId> {
        self.labels(dim)
            .iter()
            .position(|l| l == label)
            .map(|i| CubeId::new(dim, i))
    }

    pub fn contains(&self, cube: CubeId) -> bool {
        cube.index < self.cube_count(cube.dim)
    }

    /// The face `∂_i^side(u)` for `1 <= i <= dim u`.
    ///
    /// Panics when `i` is out of range or the face table is incomplete; use
    /// [`try_face`](Self::try_face) for unchecked input.
    #[inline]
    pub fn face(&self, u: CubeId, i: usize, side: Side) -> CubeId {
        debug_assert!(i >= 1 && i <= u.dim, "face direction {i} out of range for a {}-cube", u.dim);
        self.faces[u.dim][slot(u.dim, u.index, i, side)]
    }

    pub fn try_face(&self, u: CubeId, i: usize, side: Side) -> Result<CubeId, CubicalError> {
        if !self.contains(u) {
            return Err(CubicalError::NoSuchCube(u));
        }
        if i == 0 || i > u.dim {
            return Err(CubicalError::DirectionOutOfRange { dim: u.dim, direction: i });
        }
        self.faces[u.dim]
            .get(slot(u.dim, u.index, i, side))
            .copied()
            .ok_or(CubicalError::MissingFace { cube: u, direction: i, side })
    }

    /// The face of `u` keeping the coordinates listed in `keep` free and fixing
    /// every other coordinate to `side`. Complement directions are eliminated
    /// largest first, so no renumbering is needed.
    pub fn iterated_face(
        &self,
        u: CubeId,
        keep: &SubsetWithSign,
        side: Side,
    ) -> Result<CubeId, CubicalError> {
        if keep.ambient() != u.dim {
            return Err(CubicalError::SubsetAmbient {
                expected: u.dim,
                found: keep.ambient(),
            });
        }
        if !self.contains(u) {
            return Err(CubicalError::NoSuchCube(u));
        }
        Ok(self.fix_coordinates(u, keep.complement(), side))
    }

    /// Fixes each direction in `fixed` (strictly increasing, 1-based, within
    /// `1..=dim u`) to `side`.
    #[inline]
    pub(crate) fn fix_coordinates(&self, u: CubeId, fixed: &[usize], side: Side) -> CubeId {
        fixed
            .iter()
            .rev()
            .fold(u, |cube, &k| self.face(cube, k, side))
    }

    /// Evaluates the same iterated face as [`iterated_face`](Self::iterated_face)
    /// but eliminates the complement directions in the caller's `order`
    /// (original 1-based positions, any permutation of the complement).
    pub fn iterated_face_in_order(
        &self,
        u: CubeId,
        order: &[usize],
        side: Side,
    ) -> Result<CubeId, CubicalError> {
        let mut removed: Vec<usize> = Vec::with_capacity(order.len());
        let mut cube = u;
        for &k in order {
            if k == 0 || k > u.dim || removed.contains(&k) {
                return Err(CubicalError::DirectionOutOfRange { dim: u.dim, direction: k });
            }
            let shift = removed.iter().filter(|&&r| r < k).count();
            cube = self.try_face(cube, k - shift, side)?;
            removed.push(k);
        }
        Ok(cube)
    }

    /// Checks the face table and the cubical identities
    /// `∂_i^α ∂_j^β = ∂_{j-1}^β ∂_i^α` for `i < j`.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        if let Some(top) = self.max_dim() {
            if top > MAX_DIM {
                violations.push(Violation::DimensionCap { dim: top, max: MAX_DIM });
            }
        }
        if let Some(f) = self.faces.first() {
            if !f.is_empty() {
                violations.push(Violation::MissingFaces { dim: 0, expected: 0, found: f.len() });
            }
        }
        let mut structurally_sound = vec![true; self.labels.len()];
        for n in 1..self.labels.len() {
            let expected = self.cube_count(n) * 2 * n;
            let found = self.faces[n].len();
            if expected != found {
                violations.push(Violation::MissingFaces { dim: n, expected, found });
                structurally_sound[n] = false;
                continue;
            }
            for u in self.cubes(n) {
                for i in 1..=n {
                    for side in Side::BOTH {
                        let target = self.face(u, i, side);
                        if target.dim != n - 1 {
                            violations.push(Violation::DimensionMismatch { cube: u, direction: i, side, target });
                            structurally_sound[n] = false;
                        } else if target.index >= self.cube_count(n - 1) {
                            violations.push(Violation::DanglingFace { cube: u, direction: i, side, target });
                            structurally_sound[n] = false;
                        }
                    }
                }
            }
        }
        for n in 2..self.labels.len() {
            if !structurally_sound[n] || !structurally_sound[n - 1] {
                continue;
            }
            for u in self.cubes(n) {
                for j in 2..=n {
                    for i in 1..j {
                        for alpha in Side::BOTH {
                            for beta in Side::BOTH {
                                let lhs = self.face(self.face(u, j, beta), i, alpha);
                                let rhs = self.face(self.face(u, i, alpha), j - 1, beta);
                                if lhs != rhs {
                                    violations.push(Violation::CubicalIdentity {
                                        cube: u,
                                        i,
                                        j,
                                        alpha,
                                        beta,
                                        lhs,
                                        rhs,
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    /// Returns a copy with one face entry replaced. The result is not
    /// validated.
    pub fn with_face(&self, u: CubeId, i: usize, side: Side, target: CubeId) -> Self {
        let mut out = self.clone();
        out.faces[u.dim][slot(u.dim, u.index, i, side)] = target;
        out
    }

    /// Raw face table of dimension `dim`, in storage order.
    pub fn face_table(&self, dim: usize) -> &[CubeId] {
        self.faces.get(dim).map_or(&[], Vec::as_slice)
    }

    /// Keeps exactly the cubes flagged in `keep` (indexed like the cubes of
    /// each dimension), renumbering them in their original order. The caller
    /// is responsible for `keep` being closed under faces.
    pub fn restrict(&self, keep: &[Vec<bool>]) -> Self {
        let mut labels = Vec::with_capacity(self.labels.len());
        let mut renumber: Vec<Vec<Option<usize>>> = Vec::with_capacity(self.labels.len());
        for (n, names) in self.labels.iter().enumerate() {
            let mut map = vec![None; names.len()];
            let mut kept = Vec::new();
            for (idx, name) in names.iter().enumerate() {
                if keep.get(n).and_then(|k| k.get(idx)).copied().unwrap_or(false) {
                    map[idx] = Some(kept.len());
                    kept.push(name.clone());
                }
            }
            labels.push(kept);
            renumber.push(map);
        }
        let mut faces = vec![Vec::new(); self.labels.len()];
        for n in 1..self.labels.len() {
            for u in self.cubes(n) {
                if renumber[n][u.index].is_none() {
                    continue;
                }
                for i in 1..=n {
                    for side in Side::BOTH {
                        let t = self.face(u, i, side);
                        let index = renumber[n - 1][t.index]
                            .expect("restriction must be closed under faces");
                        faces[n].push(CubeId::new(n - 1, index));
                    }
                }
            }
        }
        Self::from_parts_unchecked(labels, faces)
    }

    /// Removes one cube of the top dimension.
    pub fn without_top_cube(&self, index: usize) -> Self {
        let mut keep: Vec<Vec<bool>> = self.labels.iter().map(|l| vec![true; l.len()]).collect();
        if let Some(top) = keep.last_mut() {
            top[index] = false;
        }
        self.restrict(&keep)
    }
}

/// One way in which a face table fails to describe a precubical set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    DimensionCap { dim: usize, max: usize },
    MissingFaces { dim: usize, expected: usize, found: usize },
    DimensionMismatch { cube: CubeId, direction: usize, side: Side, target: CubeId },
    DanglingFace { cube: CubeId, direction: usize, side: Side, target: CubeId },
    CubicalIdentity {
        cube: CubeId,
        i: usize,
        j: usize,
        alpha: Side,
        beta: Side,
        lhs: CubeId,
        rhs: CubeId,
    },
}

impl Violation {
    pub fn is_structural(&self) -> bool {
        !matches!(self, Violation::CubicalIdentity { .. })
    }

    /// Human-readable description using the labels of `set` where possible.
    pub fn describe(&self, set: &PrecubicalSet) -> String {
        let name = |c: CubeId| {
            if set.contains(c) {
                format!("{} ({}-cube)", set.label(c), c.dim)
            } else {
                c.to_string()
            }
        };
        match self {
            Violation::DimensionCap { dim, max } => {
                format!("dimension {dim} exceeds the supported maximum {max}")
            }
            Violation::MissingFaces { dim, expected, found } => format!(
                "face table of dimension {dim} has {found} entries, expected {expected}"
            ),
            Violation::DimensionMismatch { cube, direction, side, target } => format!(
                "face d_{direction}^{side} of {} is {}, which is not a {}-cube",
                name(*cube),
                target,
                cube.dim - 1
            ),
            Violation::DanglingFace { cube, direction, side, target } => format!(
                "face d_{direction}^{side} of {} refers to missing cube {}",
                name(*cube),
                target
            ),
            Violation::CubicalIdentity { cube, i, j, alpha, beta, lhs, rhs } => format!(
                "cubical identity fails on {} for i={i}, j={j}, alpha={alpha}, beta={beta}: \
                 d_{i}^{alpha} d_{j}^{beta} = {} but d_{}^{beta} d_{i}^{alpha} = {}",
                name(*cube),
                name(*lhs),
                j - 1,
                name(*rhs)
            ),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe(&PrecubicalSet::empty()))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn structural(&self) -> impl Iterator<Item = &Violation> {
        self.violations.iter().filter(|v| v.is_structural())
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return f.write_str("valid");
        }
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

impl std::error::Error for ValidationReport {}

/// Incremental construction of a precubical set by label.
#[derive(Clone, Debug, Default)]
pub struct PrecubicalBuilder {
    labels: Vec<Vec<String>>,
    faces: Vec<Vec<CubeId>>,
}

impl PrecubicalBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    fn ensure_dim(&mut self, dim: usize) {
        if self.labels.len() <= dim {
            self.labels.resize(dim + 1, Vec::new());
            self.faces.resize(dim + 1, Vec::new());
        }
    }

    pub fn vertex(&mut self, label: impl Into<String>) -> CubeId {
        self.cube(label, &[])
    }

    /// Adds a cube whose dimension is the number of face pairs given; pair
    /// `i - 1` holds `(∂_i^0, ∂_i^1)`.
    pub fn cube(&mut self, label: impl Into<String>, faces: &[(CubeId, CubeId)]) -> CubeId {
        let dim = faces.len();
        self.ensure_dim(dim);
        let index = self.labels[dim].len();
        self.labels[dim].push(label.into());
        for &(lo, hi) in faces {
            self.faces[dim].push(lo);
            self.faces[dim].push(hi);
        }
        CubeId::new(dim, index)
    }

    pub fn build_unchecked(self) -> PrecubicalSet {
        PrecubicalSet::from_parts_unchecked(self.labels, self.faces)
    }

    pub fn build(self) -> Result<PrecubicalSet, ValidationReport> {
        PrecubicalSet::from_parts(self.labels, self.faces)
    }
}
