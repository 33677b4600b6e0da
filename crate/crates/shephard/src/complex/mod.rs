//! Links of edge vertices in the development, the fundamental domain, and the
//! link-girth certificate for non-positive curvature.

mod cat0;
mod domain;
mod theta;

pub use cat0::{
    cat0_report, Cat0Certificate, Cat0Verdict, CosetWitness, EdgeCertificate, EdgeStatus,
    RadiusPolicy, ShortestCycle,
};
pub use domain::{
    build_fundamental_domain, DomainCell, FundamentalDomainData, PairAngle, SphericalSubset,
};
pub use theta::{
    build_theta_hat_ball, girth_within_ball, CycleWitness, QuotientCheck, SphericalComplexBall,
    ThetaVertex,
};
