use std::fmt;

use serde::{Deserialize, Serialize};

use super::{is_power_of, FiniteGroup};
use crate::error::{Error, Result};

/// Brute-force isomorphism testing is limited to groups of at most this order.
pub const ISOMORPHISM_ORDER_LIMIT: usize = 72;

/// Structural type of a (p-)group, as far as the decomposition theory needs.
/// `Dihedral` and `GeneralizedQuaternion` carry `n` with order `2^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IsoType {
    Trivial,
    Cyclic { prime: usize, exponent: usize },
    ElementaryAbelian { prime: usize, rank: usize },
    GeneralizedQuaternion { n: usize },
    Dihedral { n: usize },
    Other { order: usize },
}

impl IsoType {
    pub fn is_cyclic(&self) -> bool {
        matches!(self, IsoType::Cyclic { .. } | IsoType::Trivial)
    }

    pub fn is_generalized_quaternion(&self) -> bool {
        matches!(self, IsoType::GeneralizedQuaternion { .. })
    }
}

impl fmt::Display for IsoType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            IsoType::Trivial => write!(f, "1"),
            IsoType::Cyclic { prime, exponent } => write!(f, "C_{}", prime.pow(exponent as u32)),
            IsoType::ElementaryAbelian { prime: 2, rank: 2 } => write!(f, "V_4"),
            IsoType::ElementaryAbelian { prime, rank } => write!(f, "C_{prime}^{rank}"),
            IsoType::GeneralizedQuaternion { n } => write!(f, "Q_{}", 1usize << n),
            IsoType::Dihedral { n } => write!(f, "D_{}", 1usize << n),
            IsoType::Other { order } => write!(f, "[order {order}]"),
        }
    }
}

impl FiniteGroup {
    /// Recognizes trivial, cyclic p-groups, elementary abelian p-groups,
    /// generalized quaternion and dihedral 2-groups (order >= 8).
    pub fn iso_type(&self) -> IsoType {
        let n = self.order();
        if n == 1 {
            return IsoType::Trivial;
        }
        let p = (2..=n)
            .find(|d| n.is_multiple_of(*d))
            .expect("n > 1 has a prime divisor");
        if !is_power_of(n, p) {
            return IsoType::Other { order: n };
        }
        let k = super::log_p(n, p);
        if self.elements().any(|a| self.element_order(a) == n) {
            return IsoType::Cyclic {
                prime: p,
                exponent: k,
            };
        }
        if self.is_abelian() && self.elements().skip(1).all(|a| self.element_order(a) == p) {
            return IsoType::ElementaryAbelian { prime: p, rank: k };
        }
        if p != 2 || k < 3 {
            return IsoType::Other { order: n };
        }
        let involutions = self
            .elements()
            .filter(|&a| self.element_order(a) == 2)
            .count();
        let half = n / 2;
        for x in self.elements().filter(|&x| self.element_order(x) == half) {
            let cyc = self.closure(&[x]);
            let x_inv = self.inv(x);
            for y in self.elements().filter(|y| cyc.binary_search(y).is_err()) {
                if self.conj(y, x) != x_inv {
                    continue;
                }
                let y2 = self.mul(y, y);
                if involutions == 1 && y2 == self.pow(x, half / 2) {
                    return IsoType::GeneralizedQuaternion { n: k };
                }
                if y2 == 0 {
                    return IsoType::Dihedral { n: k };
                }
            }
        }
        IsoType::Other { order: n }
    }
}

/// Brute-force isomorphism test for groups of order at most
/// [`ISOMORPHISM_ORDER_LIMIT`]: backtracks over images of a generating set.
pub fn isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> Result<bool> {
    if a.order() != b.order() {
        return Ok(false);
    }
    if a == b {
        return Ok(true);
    }
    if a.order() > ISOMORPHISM_ORDER_LIMIT {
        return Err(Error::Resource(format!(
            "isomorphism testing is limited to order {ISOMORPHISM_ORDER_LIMIT}"
        )));
    }
    let orders_a: Vec<usize> = a.elements().map(|x| a.element_order(x)).collect();
    let orders_b: Vec<usize> = b.elements().map(|x| b.element_order(x)).collect();
    let mut sa = orders_a.clone();
    let mut sb = orders_b.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb || a.is_abelian() != b.is_abelian() {
        return Ok(false);
    }
    let gens = a.generators().to_vec();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            b.elements()
                .filter(|&y| orders_b[y] == orders_a[g])
                .collect()
        })
        .collect();
    let mut images = vec![0usize; gens.len()];
    Ok(search(a, b, &gens, &candidates, &mut images, 0))
}

fn search(
    a: &FiniteGroup,
    b: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
    depth: usize,
) -> bool {
    if depth == gens.len() {
        return extends_to_isomorphism(a, b, gens, images);
    }
    for &c in &candidates[depth] {
        images[depth] = c;
        if search(a, b, gens, candidates, images, depth + 1) {
            return true;
        }
    }
    false
}

fn extends_to_isomorphism(
    a: &FiniteGroup,
    b: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
) -> bool {
    let n = a.order();
    let mut map = vec![usize::MAX; n];
    map[0] = 0;
    let mut queue = vec![0usize];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        for (s, &g) in gens.iter().enumerate() {
            let y = a.mul(g, x);
            let img = b.mul(images[s], map[x]);
            if map[y] == usize::MAX {
                map[y] = img;
                queue.push(y);
            } else if map[y] != img {
                return false;
            }
        }
        i += 1;
    }
    let mut hit = vec![false; n];
    for &v in &map {
        if hit[v] {
            return false;
        }
        hit[v] = true;
    }
    true
}
