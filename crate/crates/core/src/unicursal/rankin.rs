use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Perm;

use super::group::{closure_of, subgroup_index, GroupTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RankinVerdict {
    Impossible,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankinReport {
    pub verdict: RankinVerdict,
    /// Order of `x^-1 y`.
    pub order_gamma: u64,
    pub index_x: usize,
    pub index_y: usize,
}

/// Parity obstruction for two generators: when `x^-1 y` has odd order and
/// one of `<x>`, `<y>` has even index, no Hamiltonian cycle exists.
pub fn rankin_oracle(group: &GroupTable, x: &Perm, y: &Perm) -> Result<RankinReport> {
    for g in [x, y] {
        if !group.contains(g) {
            return Err(Error::Membership(g.to_string()));
        }
    }
    let generated = closure_of(group.degree(), &[x.clone(), y.clone()], group.order())?;
    if generated.order() != group.order() {
        return Err(Error::Generation {
            closure: generated.order(),
            group: group.order(),
        });
    }
    let order_gamma = x.inverse().compose(y)?.order();
    let index_x = subgroup_index(group, std::slice::from_ref(x))?;
    let index_y = subgroup_index(group, std::slice::from_ref(y))?;
    let verdict = if order_gamma % 2 == 1 && (index_x % 2 == 0 || index_y % 2 == 0) {
        RankinVerdict::Impossible
    } else {
        RankinVerdict::Inconclusive
    };
    Ok(RankinReport {
        verdict,
        order_gamma,
        index_x,
        index_y,
    })
}
