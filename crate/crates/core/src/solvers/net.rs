//! ε-net verification through the bichromatic solvers.

use serde::{Deserialize, Serialize};

use super::Solver;
use crate::error::{Error, Result};
use crate::geometry::{Color, PointSet, Range};
use crate::numerics::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NetFamily {
    HalfSpace,
    Box,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetReport {
    pub is_net: bool,
    /// A range of weight at least `threshold` that misses the subset.
    pub violator: Option<Range>,
    /// Minimum weight of a range that the subset must hit.
    pub threshold: u64,
}

pub fn verify_epsilon_net(ps: &PointSet, in_subset: &[bool], eps: &Rational, family: NetFamily) -> Result<NetReport> {
    Solver::default().verify_epsilon_net(ps, in_subset, eps, family)
}

impl Solver {
    /// Checks whether the marked subset hits every range of `family` holding
    /// at least `ceil(eps * W)` weight. Marked points become red, the rest
    /// blue; a violator is then a red-free range with that much blue weight.
    pub fn verify_epsilon_net(&self, ps: &PointSet, in_subset: &[bool], eps: &Rational, family: NetFamily) -> Result<NetReport> {
        if in_subset.len() != ps.len() {
            return Err(Error::InvalidParameter(format!(
                "subset mask has {} entries for {} points",
                in_subset.len(),
                ps.len()
            )));
        }
        if !eps.is_positive() || *eps > Rational::one() {
            return Err(Error::InvalidParameter(format!("eps must lie in (0, 1], got {eps}")));
        }
        ps.ensure_nonempty()?;
        let need = eps * &Rational::from(ps.total_weight());
        let threshold = need.ceil().try_into().unwrap_or(u64::MAX).max(1);
        let colored = ps.recolor(|i, _| Some(if in_subset[i] { Color::Red } else { Color::Blue }));
        if colored.color_weight(Color::Blue) < threshold {
            return Ok(NetReport { is_net: true, violator: None, threshold });
        }
        let violator = match family {
            NetFamily::HalfSpace => self.bichromatic_halfspace(&colored, threshold)?.witness,
            NetFamily::Box => {
                let rep = self.bichromatic_box(&colored, false)?;
                rep.witness.filter(|_| rep.value >= threshold)
            }
        };
        Ok(NetReport { is_net: violator.is_none(), violator, threshold })
    }
}
