//! Classical norm and spectral-radius bounds for pairs of operators.

use super::{Certificate, Certification, Mode, Params, Tolerance};
use crate::calculus::{herm_fun, op_norm, spectral_radius, HermitianOperator, Operator};
use crate::error::{Error, Result};

fn same_dim(a: &Operator, b: &Operator) -> Result<()> {
    a.require_square("A")?;
    b.require_square("B")?;
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(format!("A has dim {}, B has dim {}", a.dim(), b.dim())));
    }
    Ok(())
}

/// `r(AB) ≤ ¼(‖AB‖ + ‖BA‖ + √((‖AB‖ − ‖BA‖)² + 4m(A,B)))`,
/// `m(A,B) = min(‖A‖‖BAB‖, ‖B‖‖ABA‖)`.
pub fn cert_ki1(a: &Operator, b: &Operator, tol: &Tolerance) -> Result<Certification> {
    same_dim(a, b)?;
    let ab = a * b;
    let ba = b * a;
    let (nab, nba) = (op_norm(&ab)?, op_norm(&ba)?);
    let m = (op_norm(a)? * op_norm(&(&ba * b))?).min(op_norm(b)? * op_norm(&(&ab * a))?);
    let rhs = 0.25 * (nab + nba + ((nab - nba).powi(2) + 4.0 * m).sqrt());
    let id = "ki1";
    Ok(Certification::new(
        id,
        &Params::new(),
        vec![Certificate::new(id, Mode::Direct, spectral_radius(&ab)?, rhs, tol)],
    ))
}

/// `‖A^{1/2}B^{1/2}‖ ≤ ‖AB‖^{1/2}` for positive semidefinite `A`, `B`.
pub fn cert_ki3(a: &HermitianOperator, b: &HermitianOperator, tol: &Tolerance) -> Result<Certification> {
    same_dim(a, b)?;
    let ra = herm_fun(f64::sqrt, a)?;
    let rb = herm_fun(f64::sqrt, b)?;
    let lhs = op_norm(&(ra.operator() * rb.operator()))?;
    let rhs = op_norm(&(a.operator() * b.operator()))?.sqrt();
    let id = "ki3";
    Ok(Certification::new(id, &Params::new(), vec![Certificate::new(id, Mode::Direct, lhs, rhs, tol)]))
}

/// `‖A + B‖ ≤ ½(‖A‖ + ‖B‖ + √((‖A‖ − ‖B‖)² + 4 min(‖AB‖, ‖BA‖)))` for
/// positive semidefinite `A`, `B`.
pub fn cert_ber1(a: &HermitianOperator, b: &HermitianOperator, tol: &Tolerance) -> Result<Certification> {
    same_dim(a, b)?;
    // positivity is a hypothesis, so reject indefinite input
    a.psd_spectral()?;
    b.psd_spectral()?;
    let (na, nb) = (op_norm(a)?, op_norm(b)?);
    let cross = op_norm(&(a.operator() * b.operator()))?.min(op_norm(&(b.operator() * a.operator()))?);
    let rhs = 0.5 * (na + nb + ((na - nb).powi(2) + 4.0 * cross).sqrt());
    let lhs = op_norm(&a.add(b))?;
    let id = "ber1";
    Ok(Certification::new(id, &Params::new(), vec![Certificate::new(id, Mode::Direct, lhs, rhs, tol)]))
}
