//! Symmetric tridiagonal eigenproblems: Sturm-sequence bisection for the
//! eigenvalues, inverse iteration for the eigenvectors.

/// Number of eigenvalues strictly below `lambda`, from the signs of the
/// LDLᵀ pivots of T − λI.
pub fn sturm_count(diag: &[f64], off: &[f64], lambda: f64) -> usize {
    let mut count = 0;
    let mut pivot = 1.0;
    for (i, &d) in diag.iter().enumerate() {
        let coupling = if i == 0 { 0.0 } else { off[i - 1] * off[i - 1] };
        pivot = d - lambda - coupling / pivot;
        if pivot == 0.0 {
            pivot = -f64::EPSILON * (d.abs() + lambda.abs()).max(f64::MIN_POSITIVE);
        }
        if pivot < 0.0 {
            count += 1;
        }
    }
    count
}

/// Gershgorin interval containing the whole spectrum.
pub fn gershgorin_bounds(diag: &[f64], off: &[f64]) -> (f64, f64) {
    let n = diag.len();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let left = if i > 0 { off[i - 1].abs() } else { 0.0 };
        let right = if i + 1 < n { off[i].abs() } else { 0.0 };
        lo = lo.min(diag[i] - left - right);
        hi = hi.max(diag[i] + left + right);
    }
    (lo, hi)
}

/// The `k`-th smallest eigenvalue (0-based) by bisection on the Sturm count.
pub fn kth_eigenvalue(diag: &[f64], off: &[f64], k: usize, bounds: (f64, f64)) -> f64 {
    let (mut lo, mut hi) = bounds;
    let span = hi.abs().max(lo.abs());
    for _ in 0..256 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi || hi - lo <= 2.0 * f64::EPSILON * span {
            break;
        }
        if sturm_count(diag, off, mid) > k {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Lowest `n` eigenvalues in ascending order.
pub fn lowest_eigenvalues(diag: &[f64], off: &[f64], n: usize) -> Vec<f64> {
    let bounds = gershgorin_bounds(diag, off);
    (0..n.min(diag.len()))
        .map(|k| kth_eigenvalue(diag, off, k, bounds))
        .collect()
}

/// Solves (T − σI) x = rhs in place by Gaussian elimination with partial
/// pivoting. Zero pivots are nudged so a shift sitting on an eigenvalue
/// still produces a (huge) solution along its eigenvector.
fn solve_shifted(diag: &[f64], off: &[f64], shift: f64, rhs: &mut [f64]) {
    let n = diag.len();
    let tiny = f64::EPSILON * diag.iter().map(|d| d.abs()).fold(shift.abs(), f64::max);
    let mut d: Vec<f64> = diag.iter().map(|x| x - shift).collect();
    let mut du: Vec<f64> = off.to_vec();
    let mut dl: Vec<f64> = off.to_vec();
    let mut du2 = vec![0.0; n.saturating_sub(2)];
    let mut swapped = vec![false; n.saturating_sub(1)];

    for i in 0..n.saturating_sub(1) {
        if d[i].abs() >= dl[i].abs() {
            if d[i] == 0.0 {
                d[i] = tiny;
            }
            let fact = dl[i] / d[i];
            dl[i] = fact;
            d[i + 1] -= fact * du[i];
        } else {
            let fact = d[i] / dl[i];
            d[i] = dl[i];
            dl[i] = fact;
            let temp = du[i];
            du[i] = d[i + 1];
            d[i + 1] = temp - fact * d[i + 1];
            if i + 2 < n {
                du2[i] = du[i + 1];
                du[i + 1] *= -fact;
            }
            swapped[i] = true;
        }
    }
    if n > 0 && d[n - 1] == 0.0 {
        d[n - 1] = tiny;
    }

    for i in 0..n.saturating_sub(1) {
        if swapped[i] {
            rhs.swap(i, i + 1);
        }
        rhs[i + 1] -= dl[i] * rhs[i];
    }
    for i in (0..n).rev() {
        let mut v = rhs[i];
        if i + 1 < n {
            v -= du[i] * rhs[i + 1];
        }
        if i + 2 < n {
            v -= du2[i] * rhs[i + 2];
        }
        rhs[i] = v / d[i];
    }
}

/// Unit-norm eigenvector for an eigenvalue already accurate to bisection
/// precision. Two rounds of inverse iteration suffice from there.
pub fn eigenvector(diag: &[f64], off: &[f64], eigenvalue: f64) -> Vec<f64> {
    let n = diag.len();
    // A non-symmetric start vector avoids being orthogonal to the target.
    let mut x: Vec<f64> = (0..n).map(|i| 1.0 + 0.01 * ((i % 7) as f64)).collect();
    for _ in 0..3 {
        solve_shifted(diag, off, eigenvalue, &mut x);
        let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        x.iter_mut().for_each(|v| *v /= norm);
    }
    x
}
