//! Newton bases and polynomials in Newton or monomial form.
//!
//! For nodes `λ₁..λₙ` the Newton basis is `N₀ = 1`, `Nᵢ = (x − λᵢ)·Nᵢ₋₁`.
//! Coefficient vectors are stored ascending (`a₀` first). Matrices that act
//! on basis vectors use the descending order `(N_{n−1}, …, N₀)` and
//! `(x^{n−1}, …, 1)`.
//!
//! Nodes may repeat; all-zero nodes give back the monomial basis.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::count::{Ops, Uncounted};
use crate::error::Error;
use crate::field::Field;
use crate::matrix::DenseMatrix;

/// Newton nodes `λ₁..λₙ`, `n ≥ 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeVector<F> {
    nodes: Vec<F>,
}

impl<F: Field> NodeVector<F> {
    pub fn new(nodes: Vec<F>) -> Result<Self, Error> {
        if nodes.is_empty() {
            return Err(Error::EmptyNodes);
        }
        Ok(Self { nodes })
    }

    /// `n` zero nodes: the Newton basis coincides with the monomial one.
    pub fn zeros(n: usize) -> Result<Self, Error> {
        Self::new(vec![F::zero(); n])
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn as_slice(&self) -> &[F] {
        &self.nodes
    }

    /// `λ_p` with 1-based `p`.
    pub fn lambda(&self, p: usize) -> &F {
        &self.nodes[p - 1]
    }
}

/// `Σ aᵢ Nᵢ(x)` against a node vector of length `n`, with at most `n + 1`
/// coefficients. Trailing zero coefficients are allowed as padding.
#[derive(Debug, Clone, PartialEq)]
pub struct NewtonPolynomial<F> {
    nodes: NodeVector<F>,
    coeffs: Vec<F>,
}

impl<F: Field> NewtonPolynomial<F> {
    pub fn new(nodes: NodeVector<F>, mut coeffs: Vec<F>) -> Result<Self, Error> {
        if coeffs.len() > nodes.len() + 1 {
            let degree = coeffs.iter().rposition(|c| !c.is_zero()).unwrap_or(0);
            if degree > nodes.len() {
                return Err(Error::BasisCapacity { degree, nodes: nodes.len() });
            }
            coeffs.truncate(nodes.len() + 1);
        }
        if coeffs.is_empty() {
            coeffs.push(F::zero());
        }
        Ok(Self { nodes, coeffs })
    }

    pub fn nodes(&self) -> &NodeVector<F> {
        &self.nodes
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// `aᵢ`, zero past the stored coefficients.
    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    /// Largest index with a nonzero coefficient; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Same polynomial with the coefficient vector zero-padded to `len`.
    pub fn padded_to(&self, len: usize) -> Result<Self, Error> {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < len {
            coeffs.resize(len, F::zero());
        }
        Self::new(self.nodes.clone(), coeffs)
    }

    pub fn eval(&self, x: &F) -> F {
        eval_newton_with(self, x, &mut Uncounted)
    }

    pub fn to_monomial(&self) -> MonomialPolynomial<F> {
        newton_to_monomial_with(self, &mut Uncounted)
    }
}

/// `Σ cᵢ xⁱ`, ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct MonomialPolynomial<F> {
    coeffs: Vec<F>,
}

impl<F: Field> MonomialPolynomial<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(F::zero());
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| F::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Drops trailing zeros, keeping at least the constant term.
    pub fn trimmed(&self) -> Self {
        let keep = self.degree().map_or(1, |d| d + 1);
        Self::new(self.coeffs[..keep].to_vec())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x).add_ref(c);
        }
        acc
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i).sub_ref(&rhs.coeff(i))).collect())
    }

    pub fn scale(&self, s: &F) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.mul_ref(s)).collect())
    }

    /// `(x − root) · self`.
    pub fn mul_linear(&self, root: &F) -> Self {
        let mut out = vec![F::zero(); self.coeffs.len() + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i + 1] = out[i + 1].add_ref(c);
            out[i] = out[i].sub_ref(&c.mul_ref(root));
        }
        Self::new(out)
    }

    /// Equality up to trailing zeros.
    pub fn same_as(&self, rhs: &Self) -> bool {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        (0..len).all(|i| self.coeff(i) == rhs.coeff(i))
    }

    /// Whether every coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }
}

/// Nested evaluation `a₀ + (x−λ₁)(a₁ + (x−λ₂)(a₂ + …))`.
///
/// With `d + 1` stored coefficients this costs `d` multiplications and `2d`
/// additions.
pub fn eval_newton_with<F: Field, O: Ops>(p: &NewtonPolynomial<F>, x: &F, ops: &mut O) -> F {
    let (last, rest) = p.coeffs.split_last().expect("coefficient vector is never empty");
    let mut acc = last.clone();
    for (i, a) in rest.iter().enumerate().rev() {
        let shift = ops.sub(x, p.nodes.lambda(i + 1));
        let t = ops.mul(&shift, &acc);
        acc = ops.add(a, &t);
    }
    acc
}

pub fn eval_newton<F: Field>(p: &NewtonPolynomial<F>, x: &F) -> F {
    eval_newton_with(p, x, &mut Uncounted)
}

/// Converts to ascending monomial coefficients by the same nesting as
/// [`eval_newton_with`], multiplying the running polynomial by `(x − λᵢ)`
/// and adding the next coefficient.
pub fn newton_to_monomial_with<F: Field, O: Ops>(p: &NewtonPolynomial<F>, ops: &mut O) -> MonomialPolynomial<F> {
    let d = p.coeffs.len() - 1;
    // acc holds the coefficients of a_k + (x−λ_{k+1})(…), length d−k+1.
    let mut acc = Vec::with_capacity(d + 1);
    acc.push(p.coeffs[d].clone());
    for k in (0..d).rev() {
        let lambda = p.nodes.lambda(k + 1);
        // acc ← (x − λ)·acc + a_k, in place from the top.
        acc.push(acc[acc.len() - 1].clone());
        for i in (1..acc.len() - 1).rev() {
            let t = ops.mul(lambda, &acc[i]);
            acc[i] = ops.sub(&acc[i - 1], &t);
        }
        let t = ops.mul(lambda, &acc[0]);
        let lowest = ops.neg(&t);
        acc[0] = ops.add(&lowest, &p.coeffs[k]);
    }
    MonomialPolynomial::new(acc)
}

pub fn newton_to_monomial<F: Field>(p: &NewtonPolynomial<F>) -> MonomialPolynomial<F> {
    newton_to_monomial_with(p, &mut Uncounted)
}

/// Rewrites `p` in the Newton basis of `nodes` by repeated synthetic
/// division by `(x − λ₁), (x − λ₂), …`; each remainder is the next Newton
/// coefficient.
pub fn monomial_to_newton_with<F: Field, O: Ops>(
    p: &MonomialPolynomial<F>,
    nodes: &NodeVector<F>,
    ops: &mut O,
) -> Result<NewtonPolynomial<F>, Error> {
    let p = p.trimmed();
    let d = p.coeffs.len() - 1;
    if d > nodes.len() {
        return Err(Error::BasisCapacity { degree: d, nodes: nodes.len() });
    }
    let mut rest = p.coeffs;
    let mut out = Vec::with_capacity(d + 1);
    for i in 1..=d {
        let lambda = nodes.lambda(i);
        // Synthetic division: quotient overwrites rest[1..], remainder lands in rest[0].
        for j in (0..rest.len() - 1).rev() {
            let t = ops.mul(lambda, &rest[j + 1]);
            rest[j] = ops.add(&rest[j], &t);
        }
        out.push(rest.remove(0));
    }
    out.push(rest.pop().expect("one coefficient remains"));
    NewtonPolynomial::new(nodes.clone(), out)
}

pub fn monomial_to_newton<F: Field>(
    p: &MonomialPolynomial<F>,
    nodes: &NodeVector<F>,
) -> Result<NewtonPolynomial<F>, Error> {
    monomial_to_newton_with(p, nodes, &mut Uncounted)
}

/// Basis polynomials `N₀..N_k` in ascending monomial form.
pub fn newton_basis_monomials<F: Field>(nodes: &[F], k: usize) -> Vec<MonomialPolynomial<F>> {
    let mut basis = Vec::with_capacity(k + 1);
    basis.push(MonomialPolynomial::new(vec![F::one()]));
    for i in 1..=k {
        let next = basis[i - 1].mul_linear(&nodes[i - 1]);
        basis.push(next);
    }
    basis
}

/// Unit upper-triangular `U` (size × size) with `Ñ(x) = U · P̃(x)`, both
/// vectors descending: row `i` holds the coefficients of `N_{size−1−i}`
/// against `x^{size−1}, …, 1`. Consumes `λ₁..λ_{size−1}`.
pub fn transition_matrix<F: Field>(nodes: &NodeVector<F>, size: usize) -> Result<DenseMatrix<F>, Error> {
    if size == 0 {
        return Err(Error::Dimension("transition matrix needs size >= 1"));
    }
    if nodes.len() + 1 < size {
        return Err(Error::BasisCapacity { degree: size - 1, nodes: nodes.len() });
    }
    let basis = newton_basis_monomials(nodes.as_slice(), size - 1);
    Ok(DenseMatrix::from_fn(size, size, |i, j| basis[size - 1 - i].coeff(size - 1 - j)))
}

/// A problem triple: shared nodes plus `F` (degree `n`) and `G` (degree `≤ n`).
#[derive(Debug, Clone, PartialEq)]
pub struct Instance<F> {
    pub f: NewtonPolynomial<F>,
    pub g: NewtonPolynomial<F>,
}

impl<F: Field> Instance<F> {
    pub fn new(nodes: NodeVector<F>, f: Vec<F>, g: Vec<F>) -> Result<Self, Error> {
        Ok(Self { f: NewtonPolynomial::new(nodes.clone(), f)?, g: NewtonPolynomial::new(nodes, g)? })
    }

    pub fn nodes(&self) -> &NodeVector<F> {
        self.f.nodes()
    }
}

const COEFF_RANGE: core::ops::RangeInclusive<i64> = -99..=99;

fn nonzero_sample(rng: &mut ChaCha8Rng) -> i64 {
    loop {
        let v = rng.random_range(COEFF_RANGE);
        if v != 0 {
            return v;
        }
    }
}

/// Seeded random instance: `n` nodes, `deg F = n`, `deg G = m`, all values
/// small integers in `[−99, 99]`, leading coefficients nonzero.
pub fn random_instance<F: Field>(n: usize, m: usize, seed: u64) -> Result<Instance<F>, Error> {
    if n == 0 || m == 0 || m > n {
        return Err(Error::InstanceDegrees { n, m });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |len: usize, rng: &mut ChaCha8Rng| -> Vec<F> {
        (0..len).map(|_| F::from_i64(rng.random_range(COEFF_RANGE))).collect()
    };
    let nodes = draw(n, &mut rng);
    let mut f = draw(n, &mut rng);
    f.push(F::from_i64(nonzero_sample(&mut rng)));
    let mut g = draw(m, &mut rng);
    g.push(F::from_i64(nonzero_sample(&mut rng)));
    Instance::new(NodeVector::new(nodes)?, f, g)
}
