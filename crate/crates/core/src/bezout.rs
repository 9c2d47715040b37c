//! Bézout matrices of two polynomials.
//!
//! For `F` of degree `n` and `G` of degree `m ≤ n` the Cayley quotient
//! `Δ(x, y) = (F(x)G(y) − F(y)G(x)) / (x − y)` has degree `n − 1` in each
//! variable. The Bézout matrix in a basis `Φ̃ = (φ_{n−1}, …, φ₀)` is the
//! symmetric `n × n` matrix `B` with `Δ(x, y) = Φ̃(x)ᵀ B Φ̃(y)`.
//!
//! Four constructions live here:
//!
//! - [`bezout_newton_preserving`]: the O(n²) recurrence working directly in
//!   the Newton basis of the inputs.
//! - [`bezout_monomial`]: the classical matrix, obtained from the same
//!   recurrence with all nodes zero.
//! - [`bezout_newton_via_transform`]: convert to monomial form, build the
//!   classical matrix, then change basis with the transition matrix.
//! - [`cayley_quotient_oracle`]: brute-force interpolation of `Δ`, used only
//!   to check the other three.

use alloc::vec::Vec;

use crate::count::{Ops, Uncounted};
use crate::error::Error;
use crate::field::Field;
use crate::matrix::{invert_unit_upper_with, solve_linear, DenseMatrix};
use crate::poly::{newton_to_monomial_with, transition_matrix, MonomialPolynomial, NewtonPolynomial, NodeVector};

/// Validates an `(F, G)` pair and returns `(n, m)`.
///
/// `n` is the node count and must equal `deg F` with a nonzero leading
/// coefficient. The zero polynomial `G` reports `m = 0`.
pub fn check_pair<F: Field>(f: &NewtonPolynomial<F>, g: &NewtonPolynomial<F>) -> Result<(usize, usize), Error> {
    let n = f.nodes().len();
    if n == 0 {
        return Err(Error::EmptyNodes);
    }
    if f.nodes() != g.nodes() {
        return Err(Error::NodeMismatch);
    }
    if f.degree() != Some(n) {
        return Err(Error::LeadingCoefficient { expected: n });
    }
    let m = g.degree().unwrap_or(0);
    if m > n {
        return Err(Error::DegreeOrder { n, m });
    }
    Ok((n, m))
}

/// Bézout matrix of `F` and `G` in `Ñ = (N_{n−1}, …, N₀)`, computed without
/// leaving the Newton basis.
///
/// Works on an `n × (n+1)` array `c` (1-based below, last column zero):
///
/// 1. `c[i][j] = [n−i+1, n−j]` for `j ≥ i`, with `[p, q] = a_p b_q − a_q b_p`.
/// 2. For `i = 2..n`, `j = i..n`:
///    `c[i][j] += c[i−1][j+1] + (λ_{n−j+1} − λ_{n−i+2}) · c[i−1][j]`.
/// 3. Mirror the upper triangle.
/// 4. Drop the last column.
///
/// Costs exactly `(3n² + n)/2` multiplications and `2n² − n` additions.
pub fn bezout_newton_preserving_with<F: Field, O: Ops>(
    f: &NewtonPolynomial<F>,
    g: &NewtonPolynomial<F>,
    ops: &mut O,
) -> Result<DenseMatrix<F>, Error> {
    let (n, _) = check_pair(f, g)?;
    let lambda = f.nodes();
    let a = f.coeffs();
    // b_p = 0 for p > m.
    let b: Vec<F> = (0..=n).map(|p| g.coeff(p)).collect();
    let width = n + 1;
    let mut c: Vec<F> = alloc::vec![F::zero(); n * width];
    let at = |i: usize, j: usize| (i - 1) * width + (j - 1);

    // Initialization
    for i in 1..=n {
        let p = n - i + 1;
        for j in i..=n {
            let q = n - j;
            let ab = ops.mul(&a[p], &b[q]);
            let ba = ops.mul(&a[q], &b[p]);
            c[at(i, j)] = ops.sub(&ab, &ba);
        }
    }

    // Recursion
    for i in 2..=n {
        for j in i..=n {
            let diff = ops.sub(lambda.lambda(n - j + 1), lambda.lambda(n - i + 2));
            let scaled = ops.mul(&diff, &c[at(i - 1, j)]);
            let shifted = ops.add(&c[at(i, j)], &c[at(i - 1, j + 1)]);
            c[at(i, j)] = ops.add(&shifted, &scaled);
        }
    }

    // Symmetrization and truncation
    Ok(DenseMatrix::from_fn(n, n, |r, s| {
        let (i, j) = if r <= s { (r + 1, s + 1) } else { (s + 1, r + 1) };
        c[at(i, j)].clone()
    }))
}

pub fn bezout_newton_preserving<F: Field>(
    f: &NewtonPolynomial<F>,
    g: &NewtonPolynomial<F>,
) -> Result<DenseMatrix<F>, Error> {
    bezout_newton_preserving_with(f, g, &mut Uncounted)
}

/// Views monomial coefficients as Newton coefficients over `n` zero nodes.
fn as_zero_node_pair<F: Field>(
    f: &MonomialPolynomial<F>,
    g: &MonomialPolynomial<F>,
) -> Result<(NewtonPolynomial<F>, NewtonPolynomial<F>), Error> {
    let f = f.trimmed();
    let n = f.degree().ok_or(Error::EmptyNodes)?;
    if n == 0 {
        return Err(Error::EmptyNodes);
    }
    let g = g.trimmed();
    let m = g.degree().unwrap_or(0);
    if m > n {
        return Err(Error::DegreeOrder { n, m });
    }
    let nodes = NodeVector::zeros(n)?;
    Ok((NewtonPolynomial::new(nodes.clone(), f.coeffs().to_vec())?, NewtonPolynomial::new(nodes, g.coeffs().to_vec())?))
}

/// Classical Bézout matrix in `P̃ = (x^{n−1}, …, 1)`: the Newton recurrence
/// with every node at zero, where the node terms vanish.
pub fn bezout_monomial_with<F: Field, O: Ops>(
    f: &MonomialPolynomial<F>,
    g: &MonomialPolynomial<F>,
    ops: &mut O,
) -> Result<DenseMatrix<F>, Error> {
    let (f, g) = as_zero_node_pair(f, g)?;
    bezout_newton_preserving_with(&f, &g, ops)
}

pub fn bezout_monomial<F: Field>(
    f: &MonomialPolynomial<F>,
    g: &MonomialPolynomial<F>,
) -> Result<DenseMatrix<F>, Error> {
    bezout_monomial_with(f, g, &mut Uncounted)
}

/// Bézout matrix in the Newton basis via the monomial basis:
/// convert `F`, `G` to monomial form, build `B_P`, then undo the congruence
/// `B_P = Uᵀ B_N U` as `B_N = Wᵀ B_P W` with `W = U⁻¹`.
pub fn bezout_newton_via_transform_with<F: Field, O: Ops>(
    f: &NewtonPolynomial<F>,
    g: &NewtonPolynomial<F>,
    ops: &mut O,
) -> Result<DenseMatrix<F>, Error> {
    let (n, _) = check_pair(f, g)?;
    let fm = newton_to_monomial_with(f, ops);
    let gm = newton_to_monomial_with(g, ops);
    let bp = bezout_monomial_with(&fm, &gm, ops)?;
    let u = transition_matrix(f.nodes(), n)?;
    let w = invert_unit_upper_with(&u, ops)?;
    let left = w.transpose().mul_with(&bp, ops)?;
    left.mul_with(&w, ops)
}

pub fn bezout_newton_via_transform<F: Field>(
    f: &NewtonPolynomial<F>,
    g: &NewtonPolynomial<F>,
) -> Result<DenseMatrix<F>, Error> {
    bezout_newton_via_transform_with(f, g, &mut Uncounted)
}

/// Descending basis values `(N_{n−1}(x), …, N₀(x))` from the product
/// definition.
fn basis_row<F: Field>(nodes: &[F], n: usize, x: &F) -> Vec<F> {
    let mut ascending = Vec::with_capacity(n);
    let mut v = F::one();
    ascending.push(v.clone());
    for node in nodes.iter().take(n.saturating_sub(1)) {
        v = v.mul_ref(&x.sub_ref(node));
        ascending.push(v.clone());
    }
    ascending.reverse();
    ascending
}

/// `Σ coeffs[i] · Nᵢ(x)`, each `Nᵢ(x)` formed as an explicit product.
fn eval_by_products<F: Field>(nodes: &[F], coeffs: &[F], x: &F) -> F {
    let mut basis = F::one();
    let mut sum = F::zero();
    for (i, c) in coeffs.iter().enumerate() {
        if i > 0 {
            basis = basis.mul_ref(&x.sub_ref(&nodes[i - 1]));
        }
        sum = sum.add_ref(&c.mul_ref(&basis));
    }
    sum
}

/// Independent Bézout matrix by interpolating the Cayley quotient.
///
/// Probes `x_k = k + s`, `y_l = n + l + 1 + s` (`k, l = 1..n`, `s` an offset
/// starting at 0). With `V_x`, `V_y` the matrices of descending basis values
/// at the probes, solves `V_x B V_yᵀ = [Δ(x_k, y_l)]`. Exact fields only.
pub fn cayley_quotient_oracle<F: Field>(
    f: &NewtonPolynomial<F>,
    g: &NewtonPolynomial<F>,
) -> Result<DenseMatrix<F>, Error> {
    if !F::EXACT {
        return Err(Error::InexactField);
    }
    let (n, _) = check_pair(f, g)?;
    let nodes = f.nodes().as_slice();
    let int = |v: usize| F::from_i64(v as i64);
    for offset in 0..8usize {
        let xs: Vec<F> = (1..=n).map(|k| int(k + offset)).collect();
        let ys: Vec<F> = (1..=n).map(|l| int(n + l + 1 + offset)).collect();
        let vx = DenseMatrix::from_rows(xs.iter().map(|x| basis_row(nodes, n, x)).collect())?;
        let vy = DenseMatrix::from_rows(ys.iter().map(|y| basis_row(nodes, n, y)).collect())?;
        let fx: Vec<F> = xs.iter().map(|x| eval_by_products(nodes, f.coeffs(), x)).collect();
        let gx: Vec<F> = xs.iter().map(|x| eval_by_products(nodes, g.coeffs(), x)).collect();
        let fy: Vec<F> = ys.iter().map(|y| eval_by_products(nodes, f.coeffs(), y)).collect();
        let gy: Vec<F> = ys.iter().map(|y| eval_by_products(nodes, g.coeffs(), y)).collect();
        let delta = DenseMatrix::from_fn(n, n, |k, l| {
            let num = fx[k].mul_ref(&gy[l]).sub_ref(&fy[l].mul_ref(&gx[k]));
            num.div_ref(&xs[k].sub_ref(&ys[l]))
        });
        // V_x B V_yᵀ = D  ⇒  Y = V_x⁻¹ D,  V_y Bᵀ = Yᵀ.
        let y = match solve_linear(&vx, &delta) {
            Ok(y) => y,
            Err(Error::Singular) => continue,
            Err(e) => return Err(e),
        };
        match solve_linear(&vy, &y.transpose()) {
            Ok(bt) => return Ok(bt.transpose()),
            Err(Error::Singular) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Singular)
}
