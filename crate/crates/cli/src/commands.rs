use std::path::Path;

use newtonbez_core::bezout::{bezout_newton_preserving, bezout_newton_via_transform, cayley_quotient_oracle};
use newtonbez_core::confederate::{confederate_resultant, Approach};
use newtonbez_core::poly::{random_instance, transition_matrix, Instance};
use newtonbez_core::{DenseMatrix, Field, NewtonPolynomial, NodeVector, Rational};

use crate::error::CliError;
use crate::io::{emit, FieldKind, InstanceFile, MatrixFile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Preserving,
    Transform,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Basis {
    Newton,
    Monomial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ApproachArg {
    A,
    B,
    C,
}

impl From<ApproachArg> for Approach {
    fn from(a: ApproachArg) -> Self {
        match a {
            ApproachArg::A => Approach::A,
            ApproachArg::B => Approach::B,
            ApproachArg::C => Approach::C,
        }
    }
}

/// Rewrites an instance onto all-zero nodes, so that Newton and monomial
/// coefficients coincide.
fn to_monomial_instance<F: Field>(inst: &Instance<F>) -> Result<Instance<F>, CliError> {
    let n = inst.nodes().len();
    let fm = inst.f.to_monomial();
    let gm = inst.g.to_monomial();
    Ok(Instance::new(NodeVector::zeros(n)?, fm.coeffs().to_vec(), gm.coeffs().to_vec())?)
}

/// Bézout matrix of an instance in the requested mode and basis.
pub fn bezout_matrix<F: Field>(inst: &Instance<F>, mode: Mode, basis: Basis) -> Result<DenseMatrix<F>, CliError> {
    let (f, g): (NewtonPolynomial<F>, NewtonPolynomial<F>) = match basis {
        Basis::Newton => (inst.f.clone(), inst.g.clone()),
        Basis::Monomial => {
            let m = to_monomial_instance(inst)?;
            (m.f, m.g)
        }
    };
    let matrix = match (mode, basis) {
        (Mode::Preserving, _) => bezout_newton_preserving(&f, &g)?,
        (Mode::Oracle, _) => {
            if !F::EXACT {
                return Err(CliError::Precondition("oracle mode needs the rational field".into()));
            }
            cayley_quotient_oracle(&f, &g)?
        }
        (Mode::Transform, Basis::Newton) => bezout_newton_via_transform(&f, &g)?,
        // Monomial target: go the other way, B_P = Uᵀ B_N U.
        (Mode::Transform, Basis::Monomial) => {
            let bn = bezout_newton_preserving(&inst.f, &inst.g)?;
            let u = transition_matrix(inst.nodes(), inst.nodes().len())?;
            u.transpose().mul(&bn)?.mul(&u)?
        }
    };
    Ok(matrix)
}

fn matrix_json<F: Field>(m: &DenseMatrix<F>) -> String {
    MatrixFile::from_matrix(m).to_json()
}

pub fn cmd_bezout(input: &Path, mode: Mode, basis: Basis, output: Option<&Path>) -> Result<(), CliError> {
    let file = InstanceFile::read(input)?;
    let text = match file.field {
        FieldKind::Rational => matrix_json(&bezout_matrix(&file.to_instance::<Rational>()?, mode, basis)?),
        FieldKind::F64 => matrix_json(&bezout_matrix(&file.to_instance::<f64>()?, mode, basis)?),
    };
    emit(output, &text)
}

pub fn cmd_confederate(input: &Path, approach: ApproachArg, output: Option<&Path>) -> Result<(), CliError> {
    let file = InstanceFile::read(input)?;
    let approach = Approach::from(approach);
    let text = match file.field {
        FieldKind::Rational => {
            let inst = file.to_instance::<Rational>()?;
            matrix_json(&confederate_resultant(&inst.f, &inst.g, approach)?.matrix)
        }
        FieldKind::F64 => {
            let inst = file.to_instance::<f64>()?;
            matrix_json(&confederate_resultant(&inst.f, &inst.g, approach)?.matrix)
        }
    };
    emit(output, &text)
}

/// Serialized random instance; identical arguments give identical text.
pub fn gen_text(n: usize, m: usize, seed: u64, field: FieldKind) -> Result<String, CliError> {
    if m > n {
        return Err(CliError::Precondition(format!("m = {m} exceeds n = {n}")));
    }
    let file = match field {
        FieldKind::Rational => InstanceFile::from_instance(&random_instance::<Rational>(n, m, seed)?, field),
        FieldKind::F64 => InstanceFile::from_instance(&random_instance::<f64>(n, m, seed)?, field),
    };
    Ok(file.to_json())
}

pub fn cmd_gen(n: usize, m: usize, seed: u64, field: FieldKind, output: Option<&Path>) -> Result<(), CliError> {
    emit(output, &gen_text(n, m, seed, field)?)
}
