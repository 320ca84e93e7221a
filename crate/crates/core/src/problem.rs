//! Problem model for the cardinality-penalized dyad approximation
//!
//!     max  x' Sigma x - rho * card(x)   over unit-norm x,
//!
//! together with preprocessing (ordering, screening), exact evaluators of
//! the equivalent representations, a brute-force oracle, closed-form
//! special cases, and the pattern-to-solution recovery recipes.

use rayon::prelude::*;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::mat::{dot, norm2};
use crate::scalar::{cst, Real};
use crate::symmat::{factor_rank, RankFactor, SymMatrix, TAU_RANK_DEFAULT};

/// Default subset cap for the exhaustive oracle (about 1e6 subsets).
pub const ORACLE_CAP_DEFAULT: usize = 20;

/// Whether the instance admits a non-trivial optimum (`rho < Sigma_11`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `rho < Sigma_11`: the penalized problem has a positive optimum.
    Penalized,
    /// `rho >= Sigma_11`: closed-form solutions (`e_1`, respectively `0`).
    Trivial,
}

/// Norm model of a feasible solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    /// `||x||_2 = 1`.
    Equality,
    /// `||x||_2 <= 1`.
    Inequality,
}

/// Preprocessed problem: ordered PSD matrix, rank factor, penalty, and the
/// index bookkeeping between internal (ordered, possibly screened) and
/// caller coordinates.
#[derive(Debug, Clone)]
pub struct Instance<T> {
    sigma: SymMatrix<T>,
    factor: RankFactor<T>,
    rho: T,
    perm: Vec<usize>,
    screened: Vec<usize>,
    sigma_caller: SymMatrix<T>,
    sorted_full: SymMatrix<T>,
    regime: Regime,
}

impl<T: Real> Instance<T> {
    /// Retained problem size after ordering and screening.
    #[inline]
    pub fn n(&self) -> usize {
        self.sigma.dim()
    }

    /// Numerical rank of the retained matrix.
    #[inline]
    pub fn m(&self) -> usize {
        self.factor.m()
    }

    #[inline]
    pub fn rho(&self) -> T {
        self.rho
    }

    /// Retained matrix, diagonal sorted descending.
    #[inline]
    pub fn sigma(&self) -> &SymMatrix<T> {
        &self.sigma
    }

    /// Rank factor of the retained matrix.
    #[inline]
    pub fn factor(&self) -> &RankFactor<T> {
        &self.factor
    }

    /// Largest diagonal entry of the original matrix.
    #[inline]
    pub fn sigma11(&self) -> T {
        self.sorted_full.at(0, 0)
    }

    /// Maps internal (retained) index to the caller index.
    #[inline]
    pub fn caller_index(&self, internal: usize) -> usize {
        self.perm[internal]
    }

    #[inline]
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// Caller indices removed by screening (their `Sigma_ii <= rho`).
    #[inline]
    pub fn screened(&self) -> &[usize] {
        &self.screened
    }

    /// Original (symmetrized) matrix in caller indexing.
    #[inline]
    pub fn sigma_caller(&self) -> &SymMatrix<T> {
        &self.sigma_caller
    }

    /// Ordered full matrix (screened indices included), for quality curves.
    #[inline]
    pub fn sorted_full(&self) -> &SymMatrix<T> {
        &self.sorted_full
    }

    /// Problem size before preprocessing.
    #[inline]
    pub fn n_caller(&self) -> usize {
        self.sigma_caller.dim()
    }

    #[inline]
    pub fn regime(&self) -> Regime {
        self.regime
    }

    #[inline]
    pub fn is_penalized(&self) -> bool {
        self.regime == Regime::Penalized
    }

    /// Column `a_i` of the rank factor.
    pub fn a_col(&self, i: usize) -> Vec<T> {
        self.factor.col(i)
    }

    /// The penalized dyad block `B_i = a_i a_i' - rho I_m`.
    pub fn b_matrix(&self, i: usize) -> SymMatrix<T> {
        let a = self.factor.col(i);
        SymMatrix::outer(&a).add_scaled_identity(-self.rho)
    }

    /// Embeds an internal vector into caller indexing (zeros elsewhere).
    pub fn to_caller(&self, x_internal: &[T]) -> Vec<T> {
        assert_eq!(x_internal.len(), self.n());
        let mut out = vec![T::zero(); self.n_caller()];
        for (i, &v) in x_internal.iter().enumerate() {
            out[self.perm[i]] = v;
        }
        out
    }

    fn require_penalized(&self, op: &str) -> Result<()> {
        if self.is_penalized() {
            Ok(())
        } else {
            Err(Error::PreconditionViolated(format!(
                "{op} requires the penalized regime (rho < Sigma_11)"
            )))
        }
    }
}

/// Sparsity pattern over the retained indices: box-relaxed or binary.
#[derive(Debug, Clone)]
pub struct Pattern<T> {
    u: Vec<T>,
    binary: bool,
}

impl<T: Real> Pattern<T> {
    /// Binary pattern from a membership mask.
    pub fn from_binary(mask: &[bool]) -> Self {
        Self {
            u: mask
                .iter()
                .map(|&b| if b { T::one() } else { T::zero() })
                .collect(),
            binary: true,
        }
    }

    /// Box point with entries in `[0, 1]`.
    pub fn from_box(u: Vec<T>) -> Result<Self> {
        if u.iter().any(|&v| v < T::zero() || v > T::one() || !v.is_finite()) {
            return Err(Error::InvalidInput(
                "pattern entries must lie in [0, 1]".into(),
            ));
        }
        let binary = u.iter().all(|&v| v == T::zero() || v == T::one());
        Ok(Self { u, binary })
    }

    #[inline]
    pub fn entries(&self) -> &[T] {
        &self.u
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.u.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.u.is_empty()
    }

    #[inline]
    pub fn is_binary(&self) -> bool {
        self.binary
    }

    /// `1' u`.
    pub fn cardinality(&self) -> T {
        self.u.iter().copied().sum()
    }

    /// Indices with `u_i = 1` (binary patterns).
    pub fn support(&self) -> Vec<usize> {
        self.u
            .iter()
            .enumerate()
            .filter(|(_, &v)| v > T::zero())
            .map(|(i, _)| i)
            .collect()
    }
}

/// Feasible solution with its exact objective value.
#[derive(Debug, Clone)]
pub struct PrimalSolution<T> {
    /// Solution vector in caller indexing.
    pub x: Vec<T>,
    /// `x' Sigma x - rho * card(x)`.
    pub objective: T,
    /// Number of exactly non-zero entries.
    pub cardinality: usize,
    /// Caller indices of the non-zero entries, ascending.
    pub support: Vec<usize>,
    /// Norm model this solution is feasible for.
    pub model: Model,
}

impl<T: Real> PrimalSolution<T> {
    fn from_x(x: Vec<T>, sigma_caller: &SymMatrix<T>, rho: T, model: Model) -> Self {
        let support: Vec<usize> = x
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != T::zero())
            .map(|(i, _)| i)
            .collect();
        let cardinality = support.len();
        let objective = sigma_caller.quad_form(&x) - rho * cst::<T>(cardinality as f64);
        Self {
            x,
            objective,
            cardinality,
            support,
            model,
        }
    }
}

/// Orders the diagonal descending, screens indices with `Sigma_ii <= rho`
/// (when `screen` is set), and factors the retained matrix. Indices with a
/// non-positive diagonal are always dropped; for a PSD matrix their whole
/// row is zero. When `rho >= Sigma_11` the instance comes back flagged
/// `Trivial` with screening skipped.
pub fn preprocess<T: Real>(sigma_raw: &SymMatrix<T>, rho: T, screen: bool) -> Result<Instance<T>> {
    if !(rho >= T::zero()) {
        return Err(Error::InvalidInput(format!(
            "penalty must be non-negative, got {rho}"
        )));
    }
    let n_caller = sigma_raw.dim();
    let diag = sigma_raw.diag();

    let mut order: Vec<usize> = (0..n_caller).collect();
    order.sort_by(|&i, &j| {
        diag[j]
            .partial_cmp(&diag[i])
            .unwrap_or(core::cmp::Ordering::Equal)
            .then(i.cmp(&j))
    });
    let sorted_full = sigma_raw.permuted(&order);
    let sigma11 = sorted_full.at(0, 0);
    if sigma11 <= T::zero() {
        // PSD validation below would also reject, but the zero matrix gets
        // its dedicated error first.
        factor_rank(sigma_raw, cst(TAU_RANK_DEFAULT))?;
        return Err(Error::ZeroMatrix);
    }

    let regime = if rho < sigma11 {
        Regime::Penalized
    } else {
        Regime::Trivial
    };

    let keep = |v: T| -> bool {
        if v <= T::zero() {
            return false;
        }
        match regime {
            Regime::Penalized if screen => v > rho,
            _ => true,
        }
    };
    let perm: Vec<usize> = order.iter().copied().filter(|&i| keep(diag[i])).collect();
    let screened: Vec<usize> = {
        let mut s: Vec<usize> = (0..n_caller).filter(|&i| !keep(diag[i])).collect();
        s.sort_unstable();
        s
    };
    debug_assert!(!perm.is_empty());
    let sigma = sigma_raw.permuted(&perm);
    let factor = factor_rank(&sigma, cst(TAU_RANK_DEFAULT))?;

    Ok(Instance {
        sigma,
        factor,
        rho,
        perm,
        screened,
        sigma_caller: sigma_raw.clone(),
        sorted_full,
        regime,
    })
}

/// Penalized iff `rho < Sigma_11`; in the trivial regime the equality model
/// is solved by `e_1` (value `Sigma_11 - rho`) and the inequality model by
/// `x = 0` (value `0`).
pub fn classify_regime<T: Real>(inst: &Instance<T>) -> Regime {
    inst.regime()
}

/// Closed-form optimizers of the trivial regime: the equality-model solution
/// `e_1` and the inequality-model solution `0`.
pub fn trivial_closed_form<T: Real>(inst: &Instance<T>) -> (PrimalSolution<T>, PrimalSolution<T>) {
    let n = inst.n_caller();
    let top = inst.caller_index(0);
    let mut x = vec![T::zero(); n];
    x[top] = T::one();
    let eq = PrimalSolution::from_x(x, inst.sigma_caller(), inst.rho(), Model::Equality);
    let ineq = PrimalSolution::from_x(
        vec![T::zero(); n],
        inst.sigma_caller(),
        inst.rho(),
        Model::Inequality,
    );
    (eq, ineq)
}

/// Exact objective `x' Sigma x - rho * card(x)` in caller indexing.
/// Cardinality counts exactly non-zero entries.
pub fn objective<T: Real>(x: &[T], inst: &Instance<T>) -> Result<T> {
    if x.len() != inst.n_caller() {
        return Err(Error::InvalidInput(format!(
            "solution length {} does not match problem size {}",
            x.len(),
            inst.n_caller()
        )));
    }
    let card = x.iter().filter(|&&v| v != T::zero()).count();
    Ok(inst.sigma_caller().quad_form(x) - inst.rho() * cst(card as f64))
}

/// Value of the eigenvalue representation at a box point:
/// `lambda_max(sum_i u_i B_i)`.
pub fn eval_pattern<T: Real>(pattern: &Pattern<T>, inst: &Instance<T>) -> Result<T> {
    inst.require_penalized("eval_pattern")?;
    if pattern.len() != inst.n() {
        return Err(Error::InvalidInput(format!(
            "pattern length {} does not match retained size {}",
            pattern.len(),
            inst.n()
        )));
    }
    let m = inst.m();
    let mut acc = SymMatrix::zeros(m);
    let mut total = T::zero();
    for (i, &ui) in pattern.entries().iter().enumerate() {
        if ui > T::zero() {
            let a = inst.a_col(i);
            for r in 0..m {
                let f = ui * a[r];
                for c in r..m {
                    let cur = acc.at(r, c);
                    acc.set_sym(r, c, cur + f * a[c]);
                }
            }
            total = total + ui;
        }
    }
    let shifted = acc.add_scaled_identity(-inst.rho() * total);
    let (val, _) = shifted.lambda_max()?;
    Ok(val)
}

fn check_unit<T: Real>(xi: &[T], m: usize) -> Result<()> {
    if xi.len() != m {
        return Err(Error::InvalidInput(format!(
            "direction length {} does not match rank {}",
            xi.len(),
            m
        )));
    }
    let nrm = norm2(xi);
    if (nrm - T::one()).abs() > cst(1e-10) {
        return Err(Error::InvalidInput(format!(
            "direction must have unit norm, got {nrm}"
        )));
    }
    Ok(())
}

/// Thresholded Rayleigh quotient `sum_i ((a_i' xi)^2 - rho)_+` at a unit
/// direction in factor space.
pub fn rayleigh_threshold<T: Real>(xi: &[T], inst: &Instance<T>) -> Result<T> {
    check_unit(xi, inst.m())?;
    let mut s = T::zero();
    for i in 0..inst.n() {
        let a = inst.a_col(i);
        let t = dot(&a, xi);
        let v = t * t - inst.rho();
        if v > T::zero() {
            s = s + v;
        }
    }
    Ok(s)
}

/// Binary pattern `u_i = 1  iff  (a_i' xi)^2 > rho` (strict).
pub fn xi_to_pattern<T: Real>(xi: &[T], inst: &Instance<T>) -> Result<Pattern<T>> {
    check_unit(xi, inst.m())?;
    let mask: Vec<bool> = (0..inst.n())
        .map(|i| {
            let t = dot(&inst.a_col(i), xi);
            t * t > inst.rho()
        })
        .collect();
    Ok(Pattern::from_binary(&mask))
}

/// Recovers a feasible unit-norm solution from a binary pattern: top
/// eigenvector of the pattern-masked matrix, normalized, with structural
/// zeros off the pattern support. Falls back to the best single index of
/// the pattern if the masked eigenvector vanishes.
pub fn pattern_to_solution<T: Real>(
    pattern: &Pattern<T>,
    inst: &Instance<T>,
) -> Result<PrimalSolution<T>> {
    if !pattern.is_binary() {
        return Err(Error::InvalidInput(
            "pattern must be binary for solution recovery".into(),
        ));
    }
    if pattern.len() != inst.n() {
        return Err(Error::InvalidInput(format!(
            "pattern length {} does not match retained size {}",
            pattern.len(),
            inst.n()
        )));
    }
    let support = pattern.support();
    if support.is_empty() {
        return Err(Error::InvalidInput(
            "pattern must select at least one index".into(),
        ));
    }
    let sub = inst.sigma().principal_submatrix(&support);
    let (_, y) = sub.lambda_max()?;
    let nrm = norm2(&y);
    let mut x_int = vec![T::zero(); inst.n()];
    if nrm > T::zero() {
        for (k, &i) in support.iter().enumerate() {
            x_int[i] = y[k] / nrm;
        }
    } else {
        // masked eigenvector vanished: best single index of the pattern
        let best = support
            .iter()
            .copied()
            .max_by(|&a, &b| {
                inst.sigma()
                    .at(a, a)
                    .partial_cmp(&inst.sigma().at(b, b))
                    .unwrap_or(core::cmp::Ordering::Equal)
            })
            .expect("non-empty support");
        x_int[best] = T::one();
    }
    let x = inst.to_caller(&x_int);
    Ok(PrimalSolution::from_x(
        x,
        inst.sigma_caller(),
        inst.rho(),
        Model::Equality,
    ))
}

#[derive(Clone)]
struct OracleBest<T> {
    phi: T,
    card: usize,
    support: Vec<usize>,
}

fn better<T: Real>(a: &OracleBest<T>, b: &OracleBest<T>) -> bool {
    // larger value first; ties to smaller support, then lexicographic
    if a.phi != b.phi {
        return a.phi > b.phi;
    }
    if a.card != b.card {
        return a.card < b.card;
    }
    a.support < b.support
}

fn subset_value<T: Real>(inst: &Instance<T>, mask: u64) -> OracleBest<T> {
    let support: Vec<usize> = (0..inst.n()).filter(|&i| mask >> i & 1 == 1).collect();
    let sub = inst.sigma().principal_submatrix(&support);
    let (lmax, _) = sub.eigh().map(|e| (e.values[0], ())).expect("eigh on PSD submatrix");
    let card = support.len();
    OracleBest {
        phi: lmax - inst.rho() * cst(card as f64),
        card,
        support,
    }
}

/// Exhaustive oracle: exact `phi(rho)` as the maximum of
/// `lambda_max(Sigma_SS) - rho |S|` over non-empty supports, with a
/// deterministic tie-break (smaller support, then lexicographic).
pub fn brute_force<T: Real>(inst: &Instance<T>, max_n: usize) -> Result<(T, PrimalSolution<T>)> {
    inst.require_penalized("brute_force")?;
    let n = inst.n();
    if n > max_n {
        return Err(Error::GuardExceeded {
            what: "oracle subset enumeration size",
            actual: n,
            limit: max_n,
        });
    }
    let total: u64 = 1u64 << n;
    let reduce = |a: OracleBest<T>, b: OracleBest<T>| if better(&a, &b) { a } else { b };
    let best = if n >= 16 {
        (1..total)
            .into_par_iter()
            .map(|mask| subset_value(inst, mask))
            .reduce_with(reduce)
            .expect("at least one subset")
    } else {
        (1..total)
            .map(|mask| subset_value(inst, mask))
            .reduce(reduce)
            .expect("at least one subset")
    };
    let mut mask = vec![false; n];
    for &i in &best.support {
        mask[i] = true;
    }
    let solution = pattern_to_solution(&Pattern::from_binary(&mask), inst)?;
    Ok((best.phi, solution))
}

/// Closed-form solution when `Sigma = a a'`:
/// `phi = sum_i (a_i^2 - rho)_+`, with `x` the normalized thresholding of
/// `a` at absolute level `sqrt(rho)`. For `rho >= max_i a_i^2` the trivial
/// regime answer (`e_argmax`, value `max a_i^2 - rho`) is returned.
pub fn solve_rank_one<T: Real>(a: &[T], rho: T) -> Result<(T, PrimalSolution<T>)> {
    if a.is_empty() || a.iter().all(|&v| v == T::zero()) {
        return Err(Error::InvalidInput("vector a must be non-zero".into()));
    }
    if !(rho >= T::zero()) {
        return Err(Error::InvalidInput("penalty must be non-negative".into()));
    }
    let n = a.len();
    let sigma = SymMatrix::outer(a);
    let (amax2, argmax) = a
        .iter()
        .enumerate()
        .map(|(i, &v)| (v * v, i))
        .fold((T::zero(), 0usize), |acc, cur| if cur.0 > acc.0 { cur } else { acc });
    if rho >= amax2 {
        let mut x = vec![T::zero(); n];
        x[argmax] = T::one();
        let sol = PrimalSolution::from_x(x, &sigma, rho, Model::Equality);
        return Ok((amax2 - rho, sol));
    }
    let mut phi = T::zero();
    let mut xt = vec![T::zero(); n];
    for (i, &v) in a.iter().enumerate() {
        let excess = v * v - rho;
        if excess > T::zero() {
            phi = phi + excess;
            xt[i] = v;
        }
    }
    let nrm = norm2(&xt);
    for v in xt.iter_mut() {
        *v = *v / nrm;
    }
    let sol = PrimalSolution::from_x(xt, &sigma, rho, Model::Equality);
    Ok((phi, sol))
}

/// Closed form for diagonal matrices: `phi = Sigma_11 - rho` at `x = e_1`.
pub fn solve_diagonal<T: Real>(inst: &Instance<T>) -> Result<(T, PrimalSolution<T>)> {
    inst.require_penalized("solve_diagonal")?;
    let off = inst.sigma().max_offdiag_abs();
    let scale = T::one().max(inst.sigma11());
    if off > cst::<T>(1e-12) * scale {
        return Err(Error::PreconditionViolated(format!(
            "matrix is not diagonal: max off-diagonal magnitude {off}"
        )));
    }
    let phi = inst.sigma().at(0, 0) - inst.rho();
    let mut x_int = vec![T::zero(); inst.n()];
    x_int[0] = T::one();
    let x = inst.to_caller(&x_int);
    let sol = PrimalSolution::from_x(x, inst.sigma_caller(), inst.rho(), Model::Equality);
    Ok((phi, sol))
}

/// Closed form for `Sigma = I + a a'`: support `{i : a_i^2 > rho}` when that
/// set is non-empty, otherwise the single best index; requires
/// `rho < 1 + max_i a_i^2`.
pub fn solve_identity_plus_dyad<T: Real>(a: &[T], rho: T) -> Result<(T, PrimalSolution<T>)> {
    if a.is_empty() {
        return Err(Error::InvalidInput("vector a must have length >= 1".into()));
    }
    if !(rho >= T::zero()) {
        return Err(Error::InvalidInput("penalty must be non-negative".into()));
    }
    let n = a.len();
    let sigma = SymMatrix::outer(a).add_scaled_identity(T::one());
    let (amax2, argmax) = a
        .iter()
        .enumerate()
        .map(|(i, &v)| (v * v, i))
        .fold((T::zero(), 0usize), |acc, cur| if cur.0 > acc.0 { cur } else { acc });
    if a.iter().all(|&v| v == T::zero()) {
        // Sigma = I: diagonal case
        if rho >= T::one() {
            return Err(Error::PreconditionViolated(
                "identity-plus-dyad closed form requires rho < 1 + max a_i^2".into(),
            ));
        }
        let mut x = vec![T::zero(); n];
        x[0] = T::one();
        let sol = PrimalSolution::from_x(x, &sigma, rho, Model::Equality);
        return Ok((T::one() - rho, sol));
    }
    if rho >= T::one() + amax2 {
        return Err(Error::PreconditionViolated(
            "identity-plus-dyad closed form requires rho < 1 + max a_i^2".into(),
        ));
    }
    let support: Vec<usize> = (0..n).filter(|&i| a[i] * a[i] > rho).collect();
    if support.is_empty() {
        let mut x = vec![T::zero(); n];
        x[argmax] = T::one();
        let sol = PrimalSolution::from_x(x, &sigma, rho, Model::Equality);
        return Ok((T::one() + amax2 - rho, sol));
    }
    let mut phi = T::one();
    let mut xt = vec![T::zero(); n];
    for &i in &support {
        phi = phi + a[i] * a[i] - rho;
        xt[i] = a[i];
    }
    let nrm = norm2(&xt);
    for v in xt.iter_mut() {
        *v = *v / nrm;
    }
    let sol = PrimalSolution::from_x(xt, &sigma, rho, Model::Equality);
    Ok((phi, sol))
}

/// Kind of generated test matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InstanceKind {
    /// `G' G` with a dense `m x n` Gaussian `G`.
    DensePsd,
    /// Dense PSD rescaled so the ordered diagonal is exactly
    /// `Sigma_11 / (h + 1)` at position `h >= 2`.
    FastDecay,
    /// `a a'` plus a small full-spread noise term of rank `m - 1`.
    RankOnePlusNoise,
}

impl InstanceKind {
    pub fn name(&self) -> &'static str {
        match self {
            InstanceKind::DensePsd => "dense-psd",
            InstanceKind::FastDecay => "fast-decay",
            InstanceKind::RankOnePlusNoise => "rank-one-plus-noise",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "dense-psd" => Ok(InstanceKind::DensePsd),
            "fast-decay" => Ok(InstanceKind::FastDecay),
            "rank-one-plus-noise" => Ok(InstanceKind::RankOnePlusNoise),
            _ => Err(Error::InvalidInput(format!(
                "unknown instance kind '{s}' (expected dense-psd | fast-decay | rank-one-plus-noise)"
            ))),
        }
    }
}

fn gaussian_mat<T: Real>(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> crate::mat::Mat<T> {
    crate::mat::Mat::from_fn(rows, cols, |_, _| {
        let v: f64 = StandardNormal.sample(rng);
        cst(v)
    })
}

/// Deterministic random PSD instance of size `n` and rank `m`.
pub fn random_instance<T: Real>(
    n: usize,
    m: usize,
    seed: u64,
    kind: InstanceKind,
) -> Result<SymMatrix<T>> {
    if n == 0 || m == 0 || m > n {
        return Err(Error::InvalidInput(format!(
            "invalid dimensions: need 1 <= m <= n, got n={n}, m={m}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match kind {
        InstanceKind::DensePsd => {
            let g = gaussian_mat::<T>(&mut rng, m, n);
            Ok(SymMatrix::from_mat_average(&g.transpose().matmul(&g)))
        }
        InstanceKind::FastDecay => {
            let g = gaussian_mat::<T>(&mut rng, m, n);
            let base = SymMatrix::from_mat_average(&g.transpose().matmul(&g));
            let diag = base.diag();
            let mut order: Vec<usize> = (0..n).collect();
            order.sort_by(|&i, &j| {
                diag[j]
                    .partial_cmp(&diag[i])
                    .unwrap_or(core::cmp::Ordering::Equal)
                    .then(i.cmp(&j))
            });
            let sorted = base.permuted(&order);
            let s11 = sorted.at(0, 0);
            // congruence by a positive diagonal: diagonal entry h becomes
            // exactly Sigma_11 / (h + 1), preserving PSD-ness and rank
            let mut d = vec![T::one(); n];
            for h in 1..n {
                let target = s11 / cst::<T>((h + 2) as f64);
                d[h] = (target / sorted.at(h, h)).sqrt();
            }
            let scaled = SymMatrix::from_mat_average(&crate::mat::Mat::from_fn(n, n, |i, j| {
                d[i] * sorted.at(i, j) * d[j]
            }));
            Ok(scaled)
        }
        InstanceKind::RankOnePlusNoise => {
            let a: Vec<T> = (0..n)
                .map(|_| {
                    let v: f64 = StandardNormal.sample(&mut rng);
                    cst(v)
                })
                .collect();
            let dyad = SymMatrix::outer(&a);
            if m == 1 {
                return Ok(dyad);
            }
            let g = gaussian_mat::<T>(&mut rng, m - 1, n);
            let noise = SymMatrix::from_mat_average(&g.transpose().matmul(&g));
            Ok(dyad.add(&noise.scale(cst(0.05))))
        }
    }
}
