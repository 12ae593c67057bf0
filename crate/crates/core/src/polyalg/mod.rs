//! Dense polynomial and rational-function algebra with sign certificates.

mod certificate;
mod poly;
mod ratfunc;

pub use certificate::{
    certify_ray, certify_reciprocal, positivity_on_interval, sign_certificate,
    sign_certificate_weak, CertificateTransform, PositivityVerdict, SignCertificate, SignRule,
    SignVerdict, UpperEnd, DEFAULT_DEPTH_CAP,
};
pub use poly::{Coefficient, IntervalPolynomial, Polynomial, RationalPolynomial};
pub use ratfunc::RationalFunction;
