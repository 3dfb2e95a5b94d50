//! Symplectic normal forms `C⁻¹AC = diag(B, Bᵀ)` for self-adjoint `A`.
//!
//! When every eigenvalue lies in the field, `B` is a Jordan matrix with
//! eigenvalues ascending in the field order and block sizes weakly
//! decreasing. Over finite fields with nonlinear factors, the components
//! for those factors are built over a splitting field and brought back by
//! Galois descent, and `B` is not canonicalized.

mod assembly;
mod certificate;
mod cyclic;
mod descent;
mod generate;
mod jordan;
mod primary;
mod split;

pub use certificate::{polarize, reconstruct, verify_certificate, Case, NormalFormCertificate, Outcome, Report};
pub use cyclic::{
    cyclic_decomposition, cyclic_pair, nilpotent_normal_form, nilpotent_normal_form_with, CyclicPair,
    WConstruction,
};
pub use descent::{descent_normal_form, Descent, ExtensionContext};
pub use generate::{companion, random_self_adjoint, BlockSpec, InstanceSpec};
pub use jordan::{jordan_block, JordanEntry, JordanSpec};
pub use primary::{charpoly_factorization, primary_decomposition, self_adjoint_projections, PrimaryComponent};
pub use split::split_normal_form;

use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::symplectic::SymplecticSpace;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Options {
    /// Seed for randomized factorization; results do not depend on it.
    pub seed: u64,
    pub construction: WConstruction,
}

/// Certificate for a self-adjoint `a`, checked by [`verify_certificate`]
/// before it is returned.
pub fn symplectic_normal_form(
    space: &SymplecticSpace,
    a: &Mat,
    options: &Options,
) -> Result<NormalFormCertificate> {
    let f = space.field();
    if !space.is_self_adjoint(a)? {
        return Err(Error::NotSelfAdjoint);
    }
    let fac = crate::factor::factor(&a.charpoly()?, options.seed)?;
    let cert = if fac.splits() {
        let (c, b, spec) = split::split_with(space, a, &fac.roots(), options.construction)?;
        NormalFormCertificate {
            field: f.clone(),
            a: a.clone(),
            c,
            b,
            case: Case::Jordan,
            jordan_spec: Some(spec),
        }
    } else if !f.is_finite() {
        return Err(Error::UnsupportedFieldPath);
    } else {
        let d = descent::descent_with(space, a, options.seed, options.construction)?;
        NormalFormCertificate {
            field: f.clone(),
            a: a.clone(),
            c: d.c,
            b: d.b,
            case: Case::Descent,
            jordan_spec: None,
        }
    };
    if !verify_certificate(&cert).passed() {
        return Err(Error::PostCondition("certificate failed verification"));
    }
    Ok(cert)
}
