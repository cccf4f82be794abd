//! Exact multivariate polynomials, rational functions, factorial quotients, and the
//! certificates built from them.

mod certify;
mod factorial;
mod poly;
mod rational;

pub use certify::{
    certify_all, certify_by_id, certify_h_swap, certify_lemma_2_3, certify_lemma_4_3,
    certify_prop_2_4, certify_s_symmetry, delta3_expected, delta3_value, CertificateReport,
    NumericCheck, SymbolicCheck, CERTIFICATE_IDS,
};
pub use factorial::{closed_form_symbol, ratio, Affine, FactorialQuotient, SymShape};
pub use poly::MultiPoly;
pub use rational::RationalFunction;
