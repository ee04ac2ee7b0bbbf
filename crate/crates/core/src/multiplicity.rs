//! Weight multiplicities of integrable highest-weight modules by Freudenthal's
//! recursion, truncated to a finite region below the highest weight.
//!
//! Weights below `Λ` are addressed by their coordinates `(n₀, n₁)` on the
//! simple roots, `μ = Λ − n₀α₀ − n₁α₁`. A [`Region`] is a down-closed set of
//! such coordinates; the recursion only ever looks at weights above the one
//! being computed, so any down-closed region can be filled exactly.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::sync::{Arc, Mutex};

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

use crate::algebra::Algebra;
use crate::delta_max;
use crate::error::{Error, Result};
use crate::weight::Weight;

/// Scalar type for multiplicities and branching coefficients.
pub trait Coefficient:
    Clone
    + fmt::Debug
    + fmt::Display
    + Ord
    + Hash
    + Send
    + Sync
    + Signed
    + Integer
    + FromPrimitive
    + ToPrimitive
    + 'static
{
}

impl<T> Coefficient for T where
    T: Clone
        + fmt::Debug
        + fmt::Display
        + Ord
        + Hash
        + Send
        + Sync
        + Signed
        + Integer
        + FromPrimitive
        + ToPrimitive
        + 'static
{
}

pub(crate) fn coeff<C: Coefficient>(v: i64) -> C {
    C::from_i64(v).expect("every coefficient type holds i64")
}

/// Down-closed set of simple-root coordinates: `(n₀, n₁)` belongs to it when
/// `n₀ < rows.len()` and `n₁ ≤ rows[n₀]`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Region {
    rows: Vec<i64>,
}

impl Region {
    pub fn empty() -> Self {
        Region { rows: Vec::new() }
    }

    /// All coordinates of height at most `h`.
    pub fn height(h: i64) -> Self {
        Region::from_rows((0..=h.max(-1)).map(|n0| h - n0).collect())
    }

    pub fn boxed(n0_max: i64, n1_max: i64) -> Self {
        if n0_max < 0 || n1_max < 0 {
            return Region::empty();
        }
        Region::from_rows(vec![n1_max; n0_max as usize + 1])
    }

    /// Down-closure of the weights whose δ-depth (the `α₀`-coordinate) is at
    /// most `q`: below `Λ` every weight satisfies `2(Λ|ν) ≥ (ν|ν)`, which
    /// bounds `n₁` for each `n₀`.
    pub fn delta_depth(algebra: Algebra, labels: (i64, i64), q: i64) -> Self {
        let g = algebra.simple_gram();
        let (lam0, lam1) = (g[0][0] / 2 * labels.0, g[1][1] / 2 * labels.1);
        let mut rows = Vec::new();
        for n0 in 0..=q.max(-1) {
            // 2(Λ|ν) − (ν|ν) is concave in n₁; keep the largest n₁ where it is ≥ 0
            let value = |n1: i64| {
                2 * (n0 * lam0 + n1 * lam1)
                    - (g[0][0] * n0 * n0 + 2 * g[0][1] * n0 * n1 + g[1][1] * n1 * n1)
            };
            let mut n1 = 0;
            let mut best = -1;
            let limit = 4 * (q + labels.0 + labels.1 + 2) * 4;
            while n1 <= limit {
                if value(n1) >= 0 {
                    best = n1;
                }
                n1 += 1;
            }
            rows.push(best);
        }
        // a row must reach as far as any row below it
        for i in (0..rows.len().saturating_sub(1)).rev() {
            rows[i] = rows[i].max(rows[i + 1]);
        }
        Region::from_rows(rows)
    }

    /// Normalises arbitrary row limits into a down-closed region.
    pub fn from_rows(rows: Vec<i64>) -> Self {
        let mut out: Vec<i64> = Vec::with_capacity(rows.len());
        let mut cap = i64::MAX;
        for r in rows {
            cap = cap.min(r);
            if cap < 0 {
                break;
            }
            out.push(cap);
        }
        Region { rows: out }
    }

    pub fn rows(&self) -> &[i64] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn contains(&self, n0: i64, n1: i64) -> bool {
        n0 >= 0 && n1 >= 0 && (n0 as usize) < self.rows.len() && n1 <= self.rows[n0 as usize]
    }

    pub fn covers(&self, other: &Region) -> bool {
        other
            .rows
            .iter()
            .enumerate()
            .all(|(n0, &r)| self.contains(n0 as i64, r))
    }

    pub fn union(&self, other: &Region) -> Region {
        let len = self.rows.len().max(other.rows.len());
        let rows = (0..len)
            .map(|i| {
                let a = self.rows.get(i).copied().unwrap_or(-1);
                let b = other.rows.get(i).copied().unwrap_or(-1);
                a.max(b)
            })
            .collect();
        Region { rows }
    }

    pub fn intersection(&self, other: &Region) -> Region {
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(&a, &b)| a.min(b))
            .collect();
        Region::from_rows(rows)
    }

    /// Smallest region containing `(n0, n1)` (the box below it).
    pub fn below(n0: i64, n1: i64) -> Region {
        Region::boxed(n0, n1)
    }

    pub fn cells(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(n0, &r)| (0..=r).map(move |n1| (n0 as i64, n1)))
    }

    pub fn max_height(&self) -> i64 {
        self.cells().map(|(a, b)| a + b).max().unwrap_or(-1)
    }
}

/// Multiplicities of `L(Λ)` on a region, for `Λ` with given labels.
#[derive(Debug)]
struct Grid<C> {
    region: Region,
    values: Vec<Vec<C>>,
}

impl<C: Coefficient> Grid<C> {
    fn get(&self, n0: i64, n1: i64) -> Option<&C> {
        if !self.region.contains(n0, n1) {
            return None;
        }
        Some(&self.values[n0 as usize][n1 as usize])
    }

    fn compute(algebra: Algebra, labels: (i64, i64), region: Region) -> Result<Self> {
        let g = algebra.simple_gram();
        // (Λ|αᵢ) and (Λ+ρ|αᵢ)
        let lam = [g[0][0] / 2 * labels.0, g[1][1] / 2 * labels.1];
        let lam_rho = [g[0][0] / 2 * (labels.0 + 1), g[1][1] / 2 * (labels.1 + 1)];
        let pair = |a: (i64, i64), b: (i64, i64)| {
            g[0][0] * a.0 * b.0 + g[0][1] * (a.0 * b.1 + a.1 * b.0) + g[1][1] * a.1 * b.1
        };
        let roots = algebra.positive_roots(region.max_height().max(1));

        let mut values: Vec<Vec<C>> = region
            .rows()
            .iter()
            .map(|&r| vec![C::zero(); r as usize + 1])
            .collect();
        for (n0, n1) in region.cells() {
            if (n0, n1) == (0, 0) {
                values[0][0] = C::one();
                continue;
            }
            let nu = (n0, n1);
            let lhs = 2 * (n0 * lam_rho[0] + n1 * lam_rho[1]) - pair(nu, nu);
            let mut rhs = C::zero();
            for root in &roots {
                let (b0, b1) = root.coords;
                if b0 > n0 || b1 > n1 {
                    continue;
                }
                let beta = (b0, b1);
                let base = b0 * lam[0] + b1 * lam[1] - pair(nu, beta);
                let norm = pair(beta, beta);
                let mut j = 1;
                while j * b0 <= n0 && j * b1 <= n1 {
                    let m = &values[(n0 - j * b0) as usize][(n1 - j * b1) as usize];
                    if !m.is_zero() {
                        let factor = root.mult * (base + j * norm);
                        rhs = rhs + m.clone() * coeff::<C>(factor);
                    }
                    j += 1;
                }
            }
            rhs = rhs * coeff::<C>(2);
            let value = if lhs == 0 {
                if !rhs.is_zero() {
                    return Err(Error::Arithmetic(format!(
                        "Freudenthal recursion degenerate at ({n0}, {n1})"
                    )));
                }
                C::zero()
            } else {
                let lhs = coeff::<C>(lhs);
                let (q, r) = rhs.div_rem(&lhs);
                if !r.is_zero() {
                    return Err(Error::Arithmetic(format!(
                        "Freudenthal recursion not integral at ({n0}, {n1})"
                    )));
                }
                q
            };
            values[n0 as usize][n1 as usize] = value;
        }
        Ok(Grid { region, values })
    }
}

/// Multiplicities of `L(Λ)` on a down-closed region below `Λ`.
#[derive(Clone, Debug)]
pub struct TruncatedCharacter<C = i64> {
    algebra: Algebra,
    top: Weight,
    region: Region,
    values: Vec<Vec<C>>,
}

impl<C: Coefficient> TruncatedCharacter<C> {
    /// The trivial module `L(0)`, truncated to `region`.
    pub fn trivial(algebra: Algebra, region: Region) -> Self {
        let values = region
            .rows()
            .iter()
            .enumerate()
            .map(|(n0, &r)| {
                (0..=r)
                    .map(|n1| if n0 == 0 && n1 == 0 { C::one() } else { C::zero() })
                    .collect()
            })
            .collect();
        TruncatedCharacter {
            algebra,
            top: Weight::ZERO,
            region,
            values,
        }
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn top(&self) -> Weight {
        self.top
    }

    pub fn region(&self) -> &Region {
        &self.region
    }

    /// Value at simple-root coordinates below the top, if inside the region.
    pub fn get(&self, n0: i64, n1: i64) -> Option<&C> {
        if !self.region.contains(n0, n1) {
            return None;
        }
        Some(&self.values[n0 as usize][n1 as usize])
    }

    /// Multiplicity of `μ`; zero for weights not below the top.
    pub fn mult(&self, mu: &Weight) -> Result<C> {
        match self.algebra.simple_coords(&(self.top - *mu)) {
            Some((n0, n1)) if n0 >= 0 && n1 >= 0 => self
                .get(n0, n1)
                .cloned()
                .ok_or(Error::OutOfTruncation { height: n0 + n1 }),
            _ => Ok(C::zero()),
        }
    }

    /// Nonzero entries as `(weight, multiplicity)`.
    pub fn iter(&self) -> impl Iterator<Item = (Weight, &C)> + '_ {
        self.region.cells().filter_map(move |(n0, n1)| {
            let v = &self.values[n0 as usize][n1 as usize];
            (!v.is_zero()).then(|| (self.top - self.algebra.from_simple_coords(n0, n1), v))
        })
    }

    /// Number of weights with nonzero multiplicity.
    pub fn len(&self) -> usize {
        self.iter().count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn shift_delta(mut self, n: i64) -> Self {
        self.top = self.top.shift_delta(n);
        self
    }

    /// Convolution of two truncated characters, valid on the intersection of
    /// their regions.
    pub fn product(&self, other: &TruncatedCharacter<C>) -> Result<TruncatedCharacter<C>> {
        self.algebra.require(other.algebra)?;
        let region = self.region.intersection(&other.region);
        let mut values: Vec<Vec<C>> = region
            .rows()
            .iter()
            .map(|&r| vec![C::zero(); r as usize + 1])
            .collect();
        for (a0, a1) in self.region.cells() {
            let a = &self.values[a0 as usize][a1 as usize];
            if a.is_zero() || !region.contains(a0, a1) {
                continue;
            }
            for (b0, b1) in other.region.cells() {
                let (c0, c1) = (a0 + b0, a1 + b1);
                if !region.contains(c0, c1) {
                    continue;
                }
                let b = &other.values[b0 as usize][b1 as usize];
                if !b.is_zero() {
                    let slot = &mut values[c0 as usize][c1 as usize];
                    *slot = slot.clone() + a.clone() * b.clone();
                }
            }
        }
        Ok(TruncatedCharacter {
            algebra: self.algebra,
            top: self.top + other.top,
            region,
            values,
        })
    }
}

/// Coefficients `c₀, c₁, …` of `e^{(top−k)δ}` along the δ-line through `base`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaString<C = i64> {
    pub base: Weight,
    pub top: i64,
    pub coeffs: Vec<C>,
}

impl<C: Coefficient> DeltaString<C> {
    pub fn empty(base: Weight) -> Self {
        DeltaString {
            base,
            top: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> Option<&C> {
        self.coeffs.get(k)
    }

    /// The weight carrying coefficient `c_k`.
    pub fn weight_at(&self, k: usize) -> Weight {
        self.base.shift_delta(self.top - k as i64)
    }

    /// Coefficient of `e^{base + e·δ}`.
    pub fn at_exponent(&self, e: i64) -> C {
        let k = self.top - e;
        if k < 0 {
            return C::zero();
        }
        self.coeffs.get(k as usize).cloned().unwrap_or_else(C::zero)
    }
}

/// Default number of cached characters.
pub const DEFAULT_CACHE_CAPACITY: usize = 4096;

/// Characters keyed by the Dynkin labels of their highest weight.
type Cache<C> = Mutex<HashMap<(i64, i64), Arc<Grid<C>>>>;

/// Memoised multiplicity engine, shareable across threads.
pub struct Oracle<C = i64> {
    algebra: Algebra,
    capacity: usize,
    cache: Cache<C>,
}

impl<C: Coefficient> Oracle<C> {
    pub fn new(algebra: Algebra) -> Self {
        Oracle::with_capacity(algebra, DEFAULT_CACHE_CAPACITY)
    }

    pub fn with_capacity(algebra: Algebra, capacity: usize) -> Self {
        Oracle {
            algebra,
            capacity: capacity.max(1),
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    fn labels(&self, lambda: &Weight) -> Result<(i64, i64)> {
        match self.algebra.labels(lambda) {
            Some((a, b)) if a >= 0 && b >= 0 => Ok((a, b)),
            _ => Err(Error::NotDominant(lambda.format(self.algebra))),
        }
    }

    fn grid(&self, labels: (i64, i64), region: &Region) -> Result<Arc<Grid<C>>> {
        let previous = {
            let cache = self.cache.lock().expect("multiplicity cache poisoned");
            match cache.get(&labels) {
                Some(grid) if grid.region.covers(region) => return Ok(grid.clone()),
                other => other.map(|g| g.region.clone()),
            }
        };
        // grow a little beyond the request so nearby queries hit the cache
        let padded = Region::from_rows(
            region
                .rows()
                .iter()
                .map(|&r| r + 2)
                .chain(std::iter::once(region.rows().last().copied().unwrap_or(0)))
                .collect(),
        );
        let target = match previous {
            Some(prev) => prev.union(&padded),
            None => padded,
        };
        let grid = Arc::new(Grid::compute(self.algebra, labels, target)?);
        let mut cache = self.cache.lock().expect("multiplicity cache poisoned");
        if cache.len() >= self.capacity && !cache.contains_key(&labels) {
            cache.clear();
        }
        let entry = cache.entry(labels).or_insert_with(|| grid.clone());
        if !entry.region.covers(&grid.region) {
            *entry = grid.clone();
        }
        Ok(grid)
    }

    /// Multiplicities of `L(Λ)` on `region`.
    pub fn character_on(&self, lambda: &Weight, region: Region) -> Result<TruncatedCharacter<C>> {
        let labels = self.labels(lambda)?;
        let grid = self.grid(labels, &region)?;
        let values = region
            .cells()
            .fold(Vec::<Vec<C>>::new(), |mut rows, (n0, n1)| {
                if n0 as usize == rows.len() {
                    rows.push(Vec::new());
                }
                rows[n0 as usize].push(grid.get(n0, n1).cloned().expect("grid covers region"));
                rows
            });
        Ok(TruncatedCharacter {
            algebra: self.algebra,
            top: *lambda,
            region,
            values,
        })
    }

    /// All multiplicities of `L(Λ)` down to height `depth`.
    pub fn truncated_character(&self, lambda: &Weight, depth: i64) -> Result<TruncatedCharacter<C>> {
        self.character_on(lambda, Region::height(depth))
    }

    /// All multiplicities of `L(Λ)` at δ-depth at most `q`.
    pub fn delta_depth_character(&self, lambda: &Weight, q: i64) -> Result<TruncatedCharacter<C>> {
        let labels = self.labels(lambda)?;
        self.character_on(lambda, Region::delta_depth(self.algebra, labels, q))
    }

    /// dim `L(Λ)_μ`, refusing weights deeper than height `depth`.
    pub fn weight_multiplicity(&self, lambda: &Weight, mu: &Weight, depth: i64) -> Result<C> {
        let labels = self.labels(lambda)?;
        match self.algebra.simple_coords(&(*lambda - *mu)) {
            Some((n0, n1)) if n0 >= 0 && n1 >= 0 => {
                if n0 + n1 > depth {
                    return Err(Error::OutOfTruncation { height: n0 + n1 });
                }
                self.mult_at(labels, n0, n1)
            }
            _ => Ok(C::zero()),
        }
    }

    /// dim `L(Λ)_μ` with no depth limit.
    pub fn multiplicity(&self, lambda: &Weight, mu: &Weight) -> Result<C> {
        let labels = self.labels(lambda)?;
        match self.algebra.simple_coords(&(*lambda - *mu)) {
            Some((n0, n1)) if n0 >= 0 && n1 >= 0 => self.mult_at(labels, n0, n1),
            _ => Ok(C::zero()),
        }
    }

    fn mult_at(&self, labels: (i64, i64), n0: i64, n1: i64) -> Result<C> {
        let grid = self.grid(labels, &Region::below(n0, n1))?;
        Ok(grid.get(n0, n1).cloned().expect("grid covers request"))
    }

    /// `mult(d − kδ)` for `k = 0..=depth`, with `d` any weight below `Λ`.
    pub fn delta_line(&self, lambda: &Weight, d: &Weight, depth: usize) -> Result<Vec<C>> {
        let labels = self.labels(lambda)?;
        let Some((c0, c1)) = self.algebra.simple_coords(&(*lambda - *d)) else {
            return Ok(vec![C::zero(); depth + 1]);
        };
        let (d0, d1) = self.algebra.delta_coords();
        let k_max = depth as i64;
        let (e0, e1) = (c0 + k_max * d0, c1 + k_max * d1);
        if e0 < 0 || e1 < 0 {
            return Ok(vec![C::zero(); depth + 1]);
        }
        let grid = self.grid(labels, &Region::below(e0, e1))?;
        Ok((0..=k_max)
            .map(|k| {
                let (n0, n1) = (c0 + k * d0, c1 + k * d1);
                if n0 < 0 || n1 < 0 {
                    C::zero()
                } else {
                    grid.get(n0, n1).cloned().expect("grid covers request")
                }
            })
            .collect())
    }

    /// The δ-string of `L(Λ)` through `λ`: `c_k = dim L(Λ)_{λ+(top−k)δ}` where
    /// `λ + top·δ` is δ-maximal. Uses `c_{Λ,λ} = c_{Λ,wλ}` to work at the
    /// dominant representative.
    pub fn delta_string_of(&self, lambda: &Weight, mu: &Weight, depth: usize) -> Result<DeltaString<C>> {
        let alg = self.algebra;
        self.labels(lambda)?;
        if alg.root_lattice_diff(lambda, mu).is_none() {
            return Ok(DeltaString::empty(*mu));
        }
        if lambda.level2() == 0 {
            // L(nδ) is one-dimensional
            return Ok(match lambda.delta_offset(mu) {
                Some(top) => {
                    let mut coeffs = vec![C::zero(); depth + 1];
                    coeffs[0] = C::one();
                    DeltaString {
                        base: *mu,
                        top,
                        coeffs,
                    }
                }
                None => DeltaString::empty(*mu),
            });
        }
        let Some(top) = delta_max::delta_max_shift(alg, lambda, mu)? else {
            return Ok(DeltaString::empty(*mu));
        };
        let (d, _) = alg.dominant_rep(&mu.shift_delta(top))?;
        let coeffs = self.delta_line(lambda, &d, depth)?;
        Ok(DeltaString {
            base: *mu,
            top,
            coeffs,
        })
    }

    /// Number of cached characters.
    pub fn cached(&self) -> usize {
        self.cache.lock().expect("multiplicity cache poisoned").len()
    }
}

/// Convolution of truncated characters.
pub fn character_product<C: Coefficient>(
    a: &TruncatedCharacter<C>,
    b: &TruncatedCharacter<C>,
) -> Result<TruncatedCharacter<C>> {
    a.product(b)
}
