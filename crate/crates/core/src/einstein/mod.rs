//! Einstein metrics of the symmetric family on `SU(k1 + (p-1)k)`: the
//! normalized equations, their reduction to one polynomial in `x12`,
//! certified solving and classification.

mod certify;
mod explore;
mod polys;
mod solve;
mod system;
mod tables;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::liealg::Partition;

pub use certify::{
    isometry_report, lambda_monotonicity_certificate, remark1_certificate, IsometryReport, LambdaBracket,
    MonotonicityCertificate, SignCertificate,
};
pub use explore::{explore, ExploreFind, ExploreReport};
pub use polys::{check_f3_table, f3_coeffs, f3_via_elimination, g3_coeffs, g3_product};
pub use solve::{
    case1_solve, classify, solve, solve_with, Case1Report, Classification, EinsteinSolution, OracleStatus,
    RejectedRoot, Residuals, SolutionCase, SolveOptions, SolveReport, TheoremCheck, ORACLE_MAX_N, ORACLE_RESIDUAL_TOL,
};
pub use system::{
    back_substitute_y, beta, case1_metric, case2_metric, einstein_constant, lambda_polys, one_minus_x2, q1_poly,
    ricci_difference_factors, system_f, x1_from, x1_of_x12, x2_of_x12, x2_polys,
};

/// `(k1, k, p)` with `k1, k >= 2` and `p >= 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SystemParams {
    pub k1: u32,
    pub k: u32,
    pub p: u32,
}

impl SystemParams {
    pub fn new(k1: u32, k: u32, p: u32) -> Result<Self> {
        if k1 < 2 || k < 2 || p < 3 {
            return Err(Error::Parameter(format!("need k1 >= 2, k >= 2, p >= 3; got ({k1},{k},{p})")));
        }
        if k1 as u64 + (p as u64 - 1) * k as u64 > 1 << 20 {
            return Err(Error::Parameter("N too large".into()));
        }
        Ok(SystemParams { k1, k, p })
    }

    pub fn n(&self) -> u32 {
        self.k1 + (self.p - 1) * self.k
    }

    pub fn triple(&self) -> (u32, u32, u32) {
        (self.k1, self.k, self.p)
    }

    /// Upper end `k1 k p` of the search range for `x12`.
    pub fn search_bound(&self) -> u64 {
        self.k1 as u64 * self.k as u64 * self.p as u64
    }

    /// `(k1, k, ..., k)`.
    pub fn partition(&self) -> Partition {
        let mut parts = vec![self.k1 as usize];
        parts.extend(std::iter::repeat_n(self.k as usize, self.p as usize - 1));
        Partition::new(parts).expect("valid parameters give a valid partition")
    }
}

impl fmt::Display for SystemParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.k1, self.k, self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params() {
        let p = SystemParams::new(3, 2, 3).unwrap();
        assert_eq!(p.n(), 7);
        assert_eq!(p.search_bound(), 18);
        assert_eq!(p.partition().parts(), &[3, 2, 2]);
        assert!(SystemParams::new(2, 2, 2).is_err());
        assert!(SystemParams::new(1, 2, 3).is_err());
        assert!(SystemParams::new(2, 1, 3).is_err());
    }
}
