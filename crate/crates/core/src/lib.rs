//! (1+u)-constacyclic codes of odd length over the chain ring
//! R = GF(2^m) + u GF(2^m), their Lee-weight Gray images, and the binary
//! CSS quantum codes obtained from the dual-containing ones.
//!
//! ```
//! use constacode::{factor_xn_minus_1, mu_lift, ChainRing, ConstaCode, RPoly};
//!
//! let ring = ChainRing::new(2)?;
//! let lifts: Vec<RPoly> = factor_xn_minus_1(3, 2)?
//!     .iter()
//!     .map(|p| mu_lift(p, 3, &ring))
//!     .collect::<Result<_, _>>()?;
//! // C = <f h, u f g> with f = x+1+u, g = x+w^2(1+u), h = x+w(1+u)
//! let code = ConstaCode::new(lifts[0].clone(), lifts[2].clone(), lifts[1].clone(), 3, 2)?;
//! assert_eq!(code.gray_image().length(), 12);
//! assert_eq!(code.gray_image().dimension(), 6);
//! # Ok::<(), constacode::Error>(())
//! ```

pub mod analysis;
pub mod bits;
pub mod code;
pub mod error;
pub mod fixtures;
pub mod gf2m;
pub mod gray;
pub mod poly;
pub mod ring;

/// Guide chapters, compiled so their snippets stay correct.
#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/fields.md")]
    mod fields {}
    #[doc = include_str!("../../../book/src/ring.md")]
    mod ring {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/codes.md")]
    mod codes {}
    #[doc = include_str!("../../../book/src/gray.md")]
    mod gray {}
    #[doc = include_str!("../../../book/src/distance.md")]
    mod distance {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

pub use analysis::{
    css_params, distance, enumeration_limit, min_distance_exact, min_distance_upper_bound, min_lee_distance_exact, DistanceMode,
    DistanceReport, DistanceStrategy, QuantumParams,
};
pub use bits::{BitVec, Rref};
pub use code::{BinaryCode, BinaryCodeExport, CodeDescriptor, ConstaCode};
pub use error::{Error, Result};
pub use gf2m::{find_tob, FieldElem, Gf2m, TraceOrthogonalBasis};
pub use gray::{
    check_commuting_mu, check_commuting_nu, lee_distance, lee_weight, mu_bar, nechaev_permutation,
    nu_shift, phi, sigma_m_shift, sigma_shift, BitWord, GrayMap, RWord,
};
pub use poly::{
    factor_xn_minus_1, is_irreducible, mu_lift, paper_form, parse_rpoly, pretty_rpoly, xn_minus_1,
    xn_minus_lambda, FPoly, Poly, RPoly,
};
pub use ring::{ChainRing, RElem};
