//! Companion and confederate matrices and the confederate resultant matrix
//! `G(C_N(F))`.
//!
//! The confederate matrix `C_N(F)` realizes multiplication by `x` modulo `F`
//! on `Ñ = (N_{n−1}, …, N₀)`, just as the companion matrix `C(F)` does on
//! `P̃ = (x^{n−1}, …, 1)`. Three routes to `G(C_N(F))` are provided:
//!
//! - [`Approach::A`]: Newton-form Horner evaluation of `G` at `C_N(F)`.
//! - [`Approach::B`]: monomial Bézout matrices, the Barnett formula
//!   `G(C(F)) = B_P(F,1)⁻¹ B_P(F,G)`, then the change of basis
//!   `G(C_N(F)) = U · G(C(F)) · U⁻¹` with `Ñ = U P̃`.
//! - [`Approach::C`]: `B_N(F,1)⁻¹ B_N(F,G)` straight from the Newton
//!   recurrence.

use alloc::vec;
use alloc::vec::Vec;

use crate::bezout::{bezout_monomial_with, bezout_newton_preserving_with, check_pair};
use crate::count::{with_counting, OpCounter, Ops, Uncounted};
use crate::error::Error;
use crate::field::Field;
use crate::poly::{
    newton_basis_monomials, newton_to_monomial_with, transition_matrix, MonomialPolynomial, NewtonPolynomial,
    NodeVector,
};

pub use crate::matrix::{determinant, solve_linear, DenseMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Approach {
    A,
    B,
    C,
}

impl Approach {
    pub const ALL: [Approach; 3] = [Approach::A, Approach::B, Approach::C];
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConfederateResult<F: Field> {
    pub matrix: DenseMatrix<F>,
    pub approach: Approach,
    pub op_counts: Option<OpCounter>,
}

/// Companion matrix of a monomial polynomial of degree `n ≥ 1`:
/// first row `(−a_{n−1}/aₙ, …, −a₀/aₙ)`, ones on the subdiagonal.
pub fn companion_matrix<F: Field>(f: &MonomialPolynomial<F>) -> Result<DenseMatrix<F>, Error> {
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => return Err(Error::LeadingCoefficient { expected: 1 }),
    };
    let lead = f.coeff(n);
    Ok(DenseMatrix::from_fn(n, n, |i, j| {
        if i == 0 {
            f.coeff(n - 1 - j).div_ref(&lead).neg_ref()
        } else if j + 1 == i {
            F::one()
        } else {
            F::zero()
        }
    }))
}

/// Confederate matrix of a Newton polynomial with `deg F = n` (the node
/// count): first row `((aₙλₙ − a_{n−1})/aₙ, −a_{n−2}/aₙ, …, −a₀/aₙ)`, ones on
/// the subdiagonal and `λ_{n−1}, …, λ₁` down the diagonal from row 2.
pub fn confederate_matrix_with<F: Field, O: Ops>(
    f: &NewtonPolynomial<F>,
    ops: &mut O,
) -> Result<DenseMatrix<F>, Error> {
    let n = f.nodes().len();
    if f.degree() != Some(n) {
        return Err(Error::LeadingCoefficient { expected: n });
    }
    let a = f.coeffs();
    let lead = &a[n];
    let mut c = DenseMatrix::zeros(n, n);
    let top = ops.mul(lead, f.nodes().lambda(n));
    let top = ops.sub(&top, &a[n - 1]);
    c[(0, 0)] = ops.div(&top, lead);
    for j in 1..n {
        let q = ops.div(&a[n - 1 - j], lead);
        c[(0, j)] = ops.neg(&q);
    }
    for i in 1..n {
        c[(i, i - 1)] = F::one();
        c[(i, i)] = f.nodes().lambda(n - i).clone();
    }
    Ok(c)
}

pub fn confederate_matrix<F: Field>(f: &NewtonPolynomial<F>) -> Result<DenseMatrix<F>, Error> {
    confederate_matrix_with(f, &mut Uncounted)
}

/// Approach A: `b₀I + (M−λ₁I)(b₁I + (M−λ₂I)(… + (M−λ_mI)·b_mI))` with
/// `M = C_N(F)`; `m` matrix products.
pub fn confederate_resultant_a_with<F: Field, O: Ops>(
    f: &NewtonPolynomial<F>,
    g: &NewtonPolynomial<F>,
    ops: &mut O,
) -> Result<DenseMatrix<F>, Error> {
    let (n, m) = check_pair(f, g)?;
    let cn = confederate_matrix_with(f, ops)?;
    let mut acc = DenseMatrix::scalar(n, g.coeff(m));
    for i in (0..m).rev() {
        let mut shifted = cn.clone();
        let minus_lambda = ops.neg(f.nodes().lambda(i + 1));
        shifted.add_diagonal_with(&minus_lambda, ops);
        acc = shifted.mul_with(&acc, ops)?;
        acc.add_diagonal_with(&g.coeff(i), ops);
    }
    Ok(acc)
}

/// Approach B: through the monomial basis and the classical Barnett formula.
pub fn confederate_resultant_b_with<F: Field, O: Ops>(
    f: &NewtonPolynomial<F>,
    g: &NewtonPolynomial<F>,
    ops: &mut O,
) -> Result<DenseMatrix<F>, Error> {
    let (n, _) = check_pair(f, g)?;
    let fm = newton_to_monomial_with(f, ops);
    let gm = newton_to_monomial_with(g, ops);
    let one = MonomialPolynomial::new(vec![F::one()]);
    let b_one = bezout_monomial_with(&fm, &one, ops)?;
    let b_g = bezout_monomial_with(&fm, &gm, ops)?;
    let companion_res = crate::matrix::solve_linear_with(&b_one, &b_g, ops)?;
    let u = transition_matrix(f.nodes(), n)?;
    let w = crate::matrix::invert_unit_upper_with(&u, ops)?;
    u.mul_with(&companion_res, ops)?.mul_with(&w, ops)
}

/// Approach C: generalized Barnett formula `B_N(F,1)⁻¹ B_N(F,G)`, realized as
/// a linear solve.
pub fn confederate_resultant_c_with<F: Field, O: Ops>(
    f: &NewtonPolynomial<F>,
    g: &NewtonPolynomial<F>,
    ops: &mut O,
) -> Result<DenseMatrix<F>, Error> {
    check_pair(f, g)?;
    let one = NewtonPolynomial::new(f.nodes().clone(), vec![F::one()])?;
    let b_one = bezout_newton_preserving_with(f, &one, ops)?;
    let b_g = bezout_newton_preserving_with(f, g, ops)?;
    crate::matrix::solve_linear_with(&b_one, &b_g, ops)
}

fn run<F: Field, O: Ops>(
    f: &NewtonPolynomial<F>,
    g: &NewtonPolynomial<F>,
    approach: Approach,
    ops: &mut O,
) -> Result<DenseMatrix<F>, Error> {
    match approach {
        Approach::A => confederate_resultant_a_with(f, g, ops),
        Approach::B => confederate_resultant_b_with(f, g, ops),
        Approach::C => confederate_resultant_c_with(f, g, ops),
    }
}

/// `G(C_N(F))` by the chosen approach.
pub fn confederate_resultant<F: Field>(
    f: &NewtonPolynomial<F>,
    g: &NewtonPolynomial<F>,
    approach: Approach,
) -> Result<ConfederateResult<F>, Error> {
    let matrix = run(f, g, approach, &mut Uncounted)?;
    Ok(ConfederateResult { matrix, approach, op_counts: None })
}

/// As [`confederate_resultant`], recording the operation counts.
pub fn confederate_resultant_counted<F: Field>(
    f: &NewtonPolynomial<F>,
    g: &NewtonPolynomial<F>,
    approach: Approach,
) -> Result<ConfederateResult<F>, Error> {
    let (matrix, counts) = with_counting(|ops| run(f, g, approach, ops));
    Ok(ConfederateResult { matrix: matrix?, approach, op_counts: Some(counts) })
}

pub fn confederate_resultant_a<F: Field>(
    f: &NewtonPolynomial<F>,
    g: &NewtonPolynomial<F>,
) -> Result<ConfederateResult<F>, Error> {
    confederate_resultant(f, g, Approach::A)
}

pub fn confederate_resultant_b<F: Field>(
    f: &NewtonPolynomial<F>,
    g: &NewtonPolynomial<F>,
) -> Result<ConfederateResult<F>, Error> {
    confederate_resultant(f, g, Approach::B)
}

pub fn confederate_resultant_c<F: Field>(
    f: &NewtonPolynomial<F>,
    g: &NewtonPolynomial<F>,
) -> Result<ConfederateResult<F>, Error> {
    confederate_resultant(f, g, Approach::C)
}

/// `G(C(F))` for monomial `F`, `G` by Horner evaluation at the companion matrix.
pub fn companion_resultant<F: Field>(
    f: &MonomialPolynomial<F>,
    g: &MonomialPolynomial<F>,
) -> Result<DenseMatrix<F>, Error> {
    let c = companion_matrix(f)?;
    let n = c.rows();
    let g = g.trimmed();
    let coeffs = g.coeffs();
    let mut acc = DenseMatrix::scalar(n, coeffs[coeffs.len() - 1].clone());
    for b in coeffs.iter().rev().skip(1) {
        acc = c.mul(&acc)?;
        acc.add_diagonal_with(b, &mut Uncounted);
    }
    Ok(acc)
}

/// Determinant of the `(n+m) × (n+m)` Sylvester matrix: `m` shifted rows of
/// `F`'s coefficients followed by `n` shifted rows of `G`'s, highest degree
/// first. For constant `G = b₀` this is `b₀ⁿ`.
pub fn sylvester_resultant<F: Field>(f: &MonomialPolynomial<F>, g: &MonomialPolynomial<F>) -> Result<F, Error> {
    let f = f.trimmed();
    let g = g.trimmed();
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => return Err(Error::LeadingCoefficient { expected: 1 }),
    };
    let m = g.degree().unwrap_or(0);
    if g.is_zero() {
        return Ok(F::zero());
    }
    let size = n + m;
    let s = DenseMatrix::from_fn(size, size, |i, j| {
        let (poly, deg, shift) = if i < m { (&f, n, i) } else { (&g, m, i - m) };
        match j.checked_sub(shift) {
            Some(k) if k <= deg => poly.coeff(deg - k),
            _ => F::zero(),
        }
    });
    determinant(&s)
}

/// Monic characteristic polynomial `det(xI − M)`: determinants at
/// `x = 0..n`, then Newton interpolation over those integer points.
pub fn char_poly<F: Field>(m: &DenseMatrix<F>) -> Result<MonomialPolynomial<F>, Error> {
    if !m.is_square() {
        return Err(Error::Dimension("characteristic polynomial of a non-square matrix"));
    }
    let n = m.rows();
    let points: Vec<F> = (0..=n).map(|k| F::from_i64(k as i64)).collect();
    let mut values = Vec::with_capacity(n + 1);
    for x in &points {
        let shifted = DenseMatrix::from_fn(n, n, |i, j| {
            let v = m[(i, j)].neg_ref();
            if i == j {
                v.add_ref(x)
            } else {
                v
            }
        });
        values.push(determinant(&shifted)?);
    }
    // Divided differences in place.
    for level in 1..=n {
        for k in (level..=n).rev() {
            let num = values[k].sub_ref(&values[k - 1]);
            let den = points[k].sub_ref(&points[k - level]);
            values[k] = num.div_ref(&den);
        }
    }
    let nodes = if n == 0 { None } else { Some(NodeVector::new(points[..n].to_vec())?) };
    Ok(match nodes {
        Some(nodes) => NewtonPolynomial::new(nodes, values)?.to_monomial(),
        None => MonomialPolynomial::new(values),
    })
}

/// Rows of `x·Ñ(x) − C·Ñ(x)` as monomial polynomials, for `C` acting on the
/// Newton basis of `nodes` (size `n = nodes.len()`).
///
/// For `C = C_N(F)` rows 2..n vanish and row 1 equals `F/aₙ`.
pub fn relation_residual<F: Field>(
    c: &DenseMatrix<F>,
    nodes: &NodeVector<F>,
) -> Result<Vec<MonomialPolynomial<F>>, Error> {
    let n = nodes.len();
    if c.rows() != n || c.cols() != n {
        return Err(Error::Dimension("matrix size must equal node count"));
    }
    let basis = newton_basis_monomials(nodes.as_slice(), n);
    let descending: Vec<&MonomialPolynomial<F>> = (0..n).map(|i| &basis[n - 1 - i]).collect();
    Ok((0..n)
        .map(|i| {
            let mut row = descending[i].mul_linear(&F::zero());
            for (j, b) in descending.iter().enumerate() {
                row = row.sub(&b.scale(&c[(i, j)]));
            }
            row
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    fn qs(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| q(x)).collect()
    }

    fn qm(rows: &[&[i64]]) -> DenseMatrix<Rational> {
        DenseMatrix::from_rows(rows.iter().map(|r| qs(r)).collect()).unwrap()
    }

    fn newton(nodes: &[i64], a: &[i64]) -> NewtonPolynomial<Rational> {
        NewtonPolynomial::new(NodeVector::new(qs(nodes)).unwrap(), qs(a)).unwrap()
    }

    #[test]
    fn companion_examples() {
        let c = companion_matrix(&MonomialPolynomial::<Rational>::from_i64(&[4, 3, 2, 1])).unwrap();
        assert_eq!(c, qm(&[&[-2, -3, -4], &[1, 0, 0], &[0, 1, 0]]));
        let c = companion_matrix(&MonomialPolynomial::<Rational>::from_i64(&[0, 0, 0, 1])).unwrap();
        assert_eq!(c, qm(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]));
        let c = companion_matrix(&MonomialPolynomial::<Rational>::from_i64(&[-6, 2])).unwrap();
        assert_eq!(c, qm(&[&[3]]));
        assert!(companion_matrix(&MonomialPolynomial::<Rational>::from_i64(&[5])).is_err());
    }

    #[test]
    fn confederate_examples() {
        let c = confederate_matrix(&newton(&[-1, 0, 2], &[1, 1, 1, 1])).unwrap();
        assert_eq!(c, qm(&[&[1, -1, -1], &[1, 0, 0], &[0, 1, -1]]));
        let c = confederate_matrix(&newton(&[5], &[3, 2])).unwrap();
        // (a1 λ1 − a0)/a1 = (10 − 3)/2
        assert_eq!(c[(0, 0)], Rational::new(7.into(), 2.into()));
        assert!(confederate_matrix(&newton(&[1, 2], &[1, 1, 0])).is_err());
    }

    #[test]
    fn confederate_with_zero_nodes_is_companion() {
        let f = newton(&[0, 0, 0], &[4, -3, 2, 5]);
        assert_eq!(confederate_matrix(&f).unwrap(), companion_matrix(&f.to_monomial()).unwrap());
    }

    #[test]
    fn example_instance_approaches_agree() {
        let f = newton(&[-1, 0, 2], &[1, 2, 3, 4]);
        let g = newton(&[-1, 0, 2], &[5, 6, 7]);
        let a = confederate_resultant_a(&f, &g).unwrap().matrix;
        assert_eq!(confederate_resultant_b(&f, &g).unwrap().matrix, a);
        assert_eq!(confederate_resultant_c(&f, &g).unwrap().matrix, a);
    }

    #[test]
    fn constant_one_gives_identity() {
        let f = newton(&[-1, 0, 2], &[1, 2, 3, 4]);
        let one = newton(&[-1, 0, 2], &[1]);
        for approach in Approach::ALL {
            let r = confederate_resultant(&f, &one, approach).unwrap();
            assert_eq!(r.matrix, DenseMatrix::identity(3), "{approach:?}");
            assert_eq!(r.approach, approach);
        }
    }

    #[test]
    fn cayley_hamilton() {
        let f = newton(&[3, -2, 7, 1], &[2, -5, 1, 4, -3]);
        assert!(confederate_resultant_a(&f, &f).unwrap().matrix.is_zero());
    }

    #[test]
    fn zero_nodes_match_companion_resultant() {
        let f = newton(&[0, 0, 0], &[1, 2, 3, 4]);
        let g = newton(&[0, 0, 0], &[5, 6, 7]);
        let direct = companion_resultant(&f.to_monomial(), &g.to_monomial()).unwrap();
        for approach in Approach::ALL {
            assert_eq!(confederate_resultant(&f, &g, approach).unwrap().matrix, direct);
        }
    }

    #[test]
    fn counted_result_carries_counts() {
        let f = newton(&[1, 2], &[1, 1, 1]);
        let g = newton(&[1, 2], &[3, 1]);
        let r = confederate_resultant_counted(&f, &g, Approach::C).unwrap();
        assert!(r.op_counts.unwrap().multiplications > 0);
    }

    #[test]
    fn sylvester_examples() {
        let f = MonomialPolynomial::<Rational>::from_i64(&[-1, 0, 1]);
        assert_eq!(sylvester_resultant(&f, &MonomialPolynomial::from_i64(&[-2, 1])).unwrap(), q(3));
        assert_eq!(sylvester_resultant(&f, &MonomialPolynomial::from_i64(&[-1, 1])).unwrap(), q(0));
        assert_eq!(sylvester_resultant(&f, &MonomialPolynomial::from_i64(&[1])).unwrap(), q(1));
        assert_eq!(sylvester_resultant(&f, &MonomialPolynomial::from_i64(&[3])).unwrap(), q(9));
    }

    #[test]
    fn char_poly_examples() {
        let z = DenseMatrix::<Rational>::zeros(2, 2);
        assert!(char_poly(&z).unwrap().same_as(&MonomialPolynomial::from_i64(&[0, 0, 1])));
        let f = MonomialPolynomial::<Rational>::from_i64(&[4, 3, 2, 1]);
        assert!(char_poly(&companion_matrix(&f).unwrap()).unwrap().same_as(&f));
    }

    #[test]
    fn residual_of_confederate() {
        let f = newton(&[-1, 0, 2], &[1, 2, 3, 4]);
        let c = confederate_matrix(&f).unwrap();
        let rows = relation_residual(&c, f.nodes()).unwrap();
        let lead = q(4);
        assert!(rows[0].same_as(&f.to_monomial().scale(&(q(1) / lead))));
        assert!(rows[1..].iter().all(MonomialPolynomial::is_zero));
    }
}
