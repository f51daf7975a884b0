//! Spectral certificates separating the counting gadget's difficulty from
//! its arity.
//!
//! For the "exactly `m` zeros versus exactly `m + 1` zeros" function on `2m`
//! bits, pair up every positive input (m zeros) with every negative input
//! (m + 1 zeros) at Hamming distance one. The 0/1 biadjacency matrix Γ of
//! this pairing has spectral norm `√(m(m+1))` — each row has `m` entries and
//! each column `m + 1`, and the all-ones vectors are the extremal singular
//! pair — while restricting the pairing to inputs that differ at any *fixed*
//! bit leaves a partial matching of norm 1. The ratio `√(m(m+1)) > m`
//! certifies that distinguishing the two promise classes takes `Ω(√(m(m+1)))`
//! queries, strictly more than `m` for every `m ≥ 1`.
//!
//! Norms are computed by power iteration on the Gram matrix, using sparse
//! row storage; for Γ itself the all-ones start vector is already extremal,
//! so the iteration settles immediately.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::ex::masks_with_popcount;

/// Largest supported input width (bits) for certificate construction.
///
/// The pairing for width `2m` has `C(2m, m)` rows; width 16 (`m = 8`) keeps
/// the matrices comfortably in memory while covering every gadget the rest
/// of the crate instantiates.
pub const MAX_ARITY: usize = 16;

/// Default relative tolerance for power-iteration convergence.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Hard cap on power-iteration steps.
const MAX_ITERS: usize = 100_000;

/// Error produced by certificate construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdversaryError {
    /// The gadget parameter is zero.
    #[error("the gadget parameter must be at least 1")]
    ZeroParameter,
    /// The gadget's input width exceeds [`MAX_ARITY`].
    #[error("gadget parameter {m} needs input width {width}, above the maximum {MAX_ARITY}")]
    ArityTooLarge {
        /// Requested gadget parameter.
        m: usize,
        /// Input width `2m` it would need.
        width: usize,
    },
}

/// A sparse 0/1 matrix in row-major adjacency form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroOneMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<Vec<u32>>,
}

impl ZeroOneMatrix {
    /// Creates the all-zero matrix of the given shape.
    pub fn new(nrows: usize, ncols: usize) -> Self {
        Self {
            nrows,
            ncols,
            rows: vec![Vec::new(); nrows],
        }
    }

    /// Number of rows.
    pub fn nrows(&self) -> usize {
        self.nrows
    }

    /// Number of columns.
    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Number of set entries.
    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Sets entry `(row, col)` to one.
    ///
    /// # Panics
    ///
    /// Panics if the position is out of range or the entry is already set.
    pub fn insert(&mut self, row: usize, col: usize) {
        assert!(row < self.nrows, "row {row} out of range");
        assert!(col < self.ncols, "column {col} out of range");
        let cols = &mut self.rows[row];
        match cols.binary_search(&(col as u32)) {
            Ok(_) => panic!("entry ({row}, {col}) set twice"),
            Err(at) => cols.insert(at, col as u32),
        }
    }

    /// Whether entry `(row, col)` is set.
    pub fn get(&self, row: usize, col: usize) -> bool {
        self.rows[row].binary_search(&(col as u32)).is_ok()
    }

    /// The set columns of one row, ascending.
    pub fn row(&self, row: usize) -> &[u32] {
        &self.rows[row]
    }

    /// All set entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, cols)| cols.iter().map(move |&c| (r, c as usize)))
    }

    fn apply(&self, v: &[f64], out: &mut [f64]) {
        for (r, cols) in self.rows.iter().enumerate() {
            out[r] = cols.iter().map(|&c| v[c as usize]).sum();
        }
    }

    fn apply_transposed(&self, w: &[f64], out: &mut [f64]) {
        out.fill(0.0);
        for (r, cols) in self.rows.iter().enumerate() {
            for &c in cols {
                out[c as usize] += w[r];
            }
        }
    }
}

/// The distance-one pairing of an `m`-versus-`m+1` zeros gadget: positive
/// inputs as rows, negative inputs as columns, and a set entry for each pair
/// differing in exactly one bit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaMatrix {
    m: usize,
    row_inputs: Vec<u32>,
    col_inputs: Vec<u32>,
    matrix: ZeroOneMatrix,
}

impl GammaMatrix {
    /// The gadget parameter.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Input width `2m`.
    pub fn width(&self) -> usize {
        2 * self.m
    }

    /// Row inputs (exactly `m` zeros), ascending as bit masks; bit `i` of a
    /// mask is input position `i`.
    pub fn row_inputs(&self) -> &[u32] {
        &self.row_inputs
    }

    /// Column inputs (exactly `m + 1` zeros), ascending as bit masks.
    pub fn col_inputs(&self) -> &[u32] {
        &self.col_inputs
    }

    /// The biadjacency matrix.
    pub fn matrix(&self) -> &ZeroOneMatrix {
        &self.matrix
    }
}

/// Builds the distance-one pairing matrix for the parameter-`m` gadget.
pub fn build_gamma(m: usize) -> Result<GammaMatrix, AdversaryError> {
    if m == 0 {
        return Err(AdversaryError::ZeroParameter);
    }
    let width = 2 * m;
    if width > MAX_ARITY {
        return Err(AdversaryError::ArityTooLarge { m, width });
    }
    // A word with m zeros has m ones; with m + 1 zeros, m - 1 ones.
    let row_inputs: Vec<u32> = masks_with_popcount(width, m)
        .iter()
        .map(|&v| v as u32)
        .collect();
    let col_inputs: Vec<u32> = masks_with_popcount(width, m - 1)
        .iter()
        .map(|&v| v as u32)
        .collect();
    let mut matrix = ZeroOneMatrix::new(row_inputs.len(), col_inputs.len());
    for (r, &x) in row_inputs.iter().enumerate() {
        for i in 0..width {
            if x >> i & 1 == 1 {
                let y = x ^ (1 << i);
                let c = col_inputs
                    .binary_search(&y)
                    .expect("clearing a bit lands among the column inputs");
                matrix.insert(r, c);
            }
        }
    }
    Ok(GammaMatrix {
        m,
        row_inputs,
        col_inputs,
        matrix,
    })
}

/// Restricts the pairing to pairs that differ at input position `i`: entry
/// `(x, y)` survives exactly when `x` has a one at `i` and `y = x` with that
/// bit cleared. The result is a partial matching.
///
/// # Panics
///
/// Panics if `i` is not an input position.
pub fn restrict_gamma_i(gamma: &GammaMatrix, i: usize) -> ZeroOneMatrix {
    assert!(
        i < gamma.width(),
        "position {i} out of range for width {}",
        gamma.width()
    );
    let mut matrix = ZeroOneMatrix::new(gamma.row_inputs.len(), gamma.col_inputs.len());
    for (r, &x) in gamma.row_inputs.iter().enumerate() {
        if x >> i & 1 == 1 {
            let y = x ^ (1 << i);
            let c = gamma
                .col_inputs
                .binary_search(&y)
                .expect("clearing a bit lands among the column inputs");
            matrix.insert(r, c);
        }
    }
    matrix
}

fn norm_squared(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum()
}

/// Largest singular value of a sparse 0/1 matrix, by power iteration on the
/// Gram matrix.
///
/// Starts from the all-ones vector and iterates until the Rayleigh quotient
/// moves by at most `tol` relatively (or the step cap is hit). If the image
/// of the start vector degenerates to zero on a non-empty matrix, the
/// iteration restarts once from a vector seeded by `seed`.
pub fn spectral_norm(matrix: &ZeroOneMatrix, tol: f64, seed: u64) -> f64 {
    if matrix.nnz() == 0 || matrix.nrows == 0 || matrix.ncols == 0 {
        return 0.0;
    }
    let mut v = vec![1.0f64; matrix.ncols];
    let mut w = vec![0.0f64; matrix.nrows];
    let mut restarted = false;
    let mut rho_prev = f64::NAN;
    for _ in 0..MAX_ITERS {
        matrix.apply(&v, &mut w);
        let ww = norm_squared(&w);
        if ww == 0.0 {
            if restarted {
                return 0.0;
            }
            restarted = true;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for x in &mut v {
                *x = rng.gen_range(0.1..1.0);
            }
            rho_prev = f64::NAN;
            continue;
        }
        let rho = ww / norm_squared(&v);
        if (rho - rho_prev).abs() <= tol * rho {
            return rho.sqrt();
        }
        rho_prev = rho;
        matrix.apply_transposed(&w, &mut v);
        let scale = norm_squared(&v).sqrt();
        if scale > 0.0 {
            for x in &mut v {
                *x /= scale;
            }
        }
    }
    rho_prev.sqrt()
}

/// The ratio a certificate is expected to achieve: `√(m(m+1))`.
pub fn expected_ratio(m: usize) -> f64 {
    ((m * (m + 1)) as f64).sqrt()
}

/// A computed certificate for one gadget parameter.
#[derive(Debug, Clone)]
pub struct AdversaryCertificate {
    /// Gadget parameter.
    pub m: usize,
    /// The pairing the certificate is built on.
    pub gamma: GammaMatrix,
    /// Spectral norm of the full pairing.
    pub gamma_norm: f64,
    /// Largest spectral norm among the per-position restrictions.
    pub max_restricted_norm: f64,
    /// `gamma_norm / max_restricted_norm` — the certified query-count bound.
    pub ratio: f64,
    /// The closed-form value `√(m(m+1))` the ratio should match.
    pub expected_ratio: f64,
    /// Convergence tolerance used for the norms.
    pub tol: f64,
}

/// Builds the certificate for the parameter-`m` gadget: the pairing, its
/// norm, the worst per-position restricted norm, and their ratio.
pub fn certificate(m: usize, tol: f64, seed: u64) -> Result<AdversaryCertificate, AdversaryError> {
    let gamma = build_gamma(m)?;
    let gamma_norm = spectral_norm(gamma.matrix(), tol, seed);
    let max_restricted_norm = (0..gamma.width())
        .map(|i| spectral_norm(&restrict_gamma_i(&gamma, i), tol, seed))
        .fold(0.0f64, f64::max);
    let ratio = gamma_norm / max_restricted_norm;
    Ok(AdversaryCertificate {
        m,
        gamma,
        gamma_norm,
        max_restricted_norm,
        ratio,
        expected_ratio: expected_ratio(m),
        tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_pairing_is_frozen() {
        let gamma = build_gamma(1).unwrap();
        assert_eq!(gamma.row_inputs(), &[0b01, 0b10]);
        assert_eq!(gamma.col_inputs(), &[0b00]);
        assert_eq!(gamma.matrix().nnz(), 2);
        assert!(gamma.matrix().get(0, 0));
        assert!(gamma.matrix().get(1, 0));
        let norm = spectral_norm(gamma.matrix(), DEFAULT_TOL, 0);
        assert!((norm - 2.0f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn pairing_has_uniform_row_and_column_sums() {
        for m in 1..=4usize {
            let gamma = build_gamma(m).unwrap();
            let mut col_sums = vec![0usize; gamma.col_inputs().len()];
            for (r, row) in (0..gamma.matrix().nrows()).map(|r| (r, gamma.matrix().row(r))) {
                assert_eq!(row.len(), m, "m={m} row {r}");
                for &c in row {
                    col_sums[c as usize] += 1;
                }
            }
            assert!(col_sums.iter().all(|&s| s == m + 1), "m={m}");
        }
    }

    #[test]
    fn pairs_differ_in_exactly_one_bit() {
        let gamma = build_gamma(3).unwrap();
        for (r, c) in gamma.matrix().entries() {
            let x = gamma.row_inputs()[r];
            let y = gamma.col_inputs()[c];
            assert_eq!((x ^ y).count_ones(), 1);
            assert_eq!(y.count_ones() + 1, x.count_ones());
        }
    }

    #[test]
    fn restrictions_are_partial_matchings_of_norm_one() {
        for m in 1..=3usize {
            let gamma = build_gamma(m).unwrap();
            for i in 0..gamma.width() {
                let restricted = restrict_gamma_i(&gamma, i);
                let mut col_seen = vec![false; restricted.ncols()];
                for r in 0..restricted.nrows() {
                    assert!(restricted.row(r).len() <= 1);
                    for &c in restricted.row(r) {
                        assert!(!col_seen[c as usize], "column matched twice");
                        col_seen[c as usize] = true;
                    }
                }
                assert!(restricted.nnz() > 0);
                let norm = spectral_norm(&restricted, DEFAULT_TOL, 0);
                assert!((norm - 1.0).abs() < 1e-9, "m={m} i={i} norm={norm}");
            }
        }
    }

    #[test]
    fn restriction_entries_refine_the_pairing() {
        let gamma = build_gamma(2).unwrap();
        let together: usize = (0..gamma.width())
            .map(|i| restrict_gamma_i(&gamma, i).nnz())
            .sum();
        // Every pair differs at exactly one position, so the restrictions
        // partition the entries.
        assert_eq!(together, gamma.matrix().nnz());
    }

    #[test]
    fn certificates_match_the_closed_form() {
        for m in 1..=4usize {
            let cert = certificate(m, DEFAULT_TOL, 0).unwrap();
            let expected = expected_ratio(m);
            assert!(
                (cert.ratio - expected).abs() <= 1e-6 * expected,
                "m={m} ratio={} expected={expected}",
                cert.ratio
            );
            assert!(cert.ratio > m as f64, "m={m} ratio={}", cert.ratio);
            assert!((cert.max_restricted_norm - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn oversized_parameters_are_rejected() {
        assert_eq!(build_gamma(0), Err(AdversaryError::ZeroParameter));
        assert_eq!(
            build_gamma(9),
            Err(AdversaryError::ArityTooLarge { m: 9, width: 18 })
        );
        assert!(build_gamma(8).is_ok());
    }

    #[test]
    fn empty_matrix_has_norm_zero() {
        let empty = ZeroOneMatrix::new(3, 2);
        assert_eq!(spectral_norm(&empty, DEFAULT_TOL, 0), 0.0);
    }

    #[test]
    fn small_dense_norms_are_exact() {
        // All-ones 2x2: norm 2.
        let mut m = ZeroOneMatrix::new(2, 2);
        m.insert(0, 0);
        m.insert(0, 1);
        m.insert(1, 0);
        m.insert(1, 1);
        assert!((spectral_norm(&m, DEFAULT_TOL, 0) - 2.0).abs() < 1e-9);
        // Identity: norm 1.
        let mut id = ZeroOneMatrix::new(2, 2);
        id.insert(0, 0);
        id.insert(1, 1);
        assert!((spectral_norm(&id, DEFAULT_TOL, 0) - 1.0).abs() < 1e-9);
        // Single row of two ones: norm √2.
        let mut row = ZeroOneMatrix::new(1, 2);
        row.insert(0, 0);
        row.insert(0, 1);
        assert!((spectral_norm(&row, DEFAULT_TOL, 0) - 2.0f64.sqrt()).abs() < 1e-9);
    }
}
