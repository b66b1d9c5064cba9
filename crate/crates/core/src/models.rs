//! Virasoro minimal-model weight tables and Heisenberg sector data.

use alloc::format;
use alloc::vec::Vec;

use num_rational::Ratio;
use num_traits::Zero;

use crate::error::Error;
use crate::scalar::{exp_i_pi, Cyc, CycField};

pub type Q = Ratio<i64>;

/// One row of a minimal-model table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight {
    pub r: i64,
    pub s: i64,
    pub h: Q,
    pub twist: Cyc,
}

/// Central charge, Kac-table weights and twists for `c = 1 - 6/(m(m+1))`.
#[derive(Clone, Debug)]
pub struct MinimalModelTable {
    pub m: i64,
    pub central_charge: Q,
    /// All `(r, s)` with `1 ≤ r ≤ m-1`, `1 ≤ s ≤ m`, in lexicographic order.
    pub weights: Vec<Weight>,
    pub generating_set: [(i64, i64); 2],
}

/// `h_{r,s} = (((m+1) r - m s)² - 1) / (4 m (m+1))`.
pub fn kac_weight(m: i64, r: i64, s: i64) -> Q {
    let x = (m + 1) * r - m * s;
    Q::new(x * x - 1, 4 * m * (m + 1))
}

/// The Kac partner `(m - r, m + 1 - s)`.
pub fn kac_partner(m: i64, r: i64, s: i64) -> (i64, i64) {
    (m - r, m + 1 - s)
}

pub fn minimal_model(m: i64) -> Result<MinimalModelTable, Error> {
    if m < 2 {
        return Err(Error::BadParameter(format!("minimal model needs m >= 2, got {}", m)));
    }
    let order = u32::try_from(8 * m * (m + 1)).map_err(|_| Error::BadParameter(format!("m = {} too large", m)))?;
    let field = CycField::new(order)?;
    let mut weights = Vec::new();
    for r in 1..m {
        for s in 1..=m {
            let h = kac_weight(m, r, s);
            let twist = exp_i_pi(&field, 2 * *h.numer(), *h.denom());
            weights.push(Weight { r, s, h, twist });
        }
    }
    Ok(MinimalModelTable {
        m,
        central_charge: Q::from_integer(1) - Q::new(6, m * (m + 1)),
        weights,
        generating_set: [(1, 2), (2, 2)],
    })
}

impl MinimalModelTable {
    pub fn weight(&self, r: i64, s: i64) -> Option<&Weight> {
        self.weights.iter().find(|w| w.r == r && w.s == s)
    }

    /// One label per Kac orbit, the lexicographically smallest.
    pub fn dedup(&self) -> Vec<&Weight> {
        self.weights
            .iter()
            .filter(|w| {
                let p = kac_partner(self.m, w.r, w.s);
                (w.r, w.s) <= p
            })
            .collect()
    }

    /// Generating labels that exist for this `m` (`(2,2)` needs `m ≥ 3`).
    pub fn generators(&self) -> Vec<&Weight> {
        self.generating_set.iter().filter_map(|&(r, s)| self.weight(r, s)).collect()
    }
}

/// A Heisenberg charge `λ` in a rational inner-product space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeisenbergSector {
    gram: Vec<Vec<Q>>,
    vector: Vec<Q>,
}

impl HeisenbergSector {
    pub fn new(gram: Vec<Vec<Q>>, vector: Vec<Q>) -> Result<HeisenbergSector, Error> {
        let n = gram.len();
        if gram.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare);
        }
        for i in 0..n {
            for j in 0..n {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        if vector.len() != n {
            return Err(Error::BadParameter(format!("vector length {} for rank {}", vector.len(), n)));
        }
        Ok(HeisenbergSector { gram, vector })
    }

    pub fn vector(&self) -> &[Q] {
        &self.vector
    }

    pub fn gram(&self) -> &[Vec<Q>] {
        &self.gram
    }

    pub fn zero_like(&self) -> HeisenbergSector {
        HeisenbergSector { gram: self.gram.clone(), vector: alloc::vec![Q::zero(); self.vector.len()] }
    }

    /// `(λ|μ)`.
    pub fn pairing(&self, other: &HeisenbergSector) -> Result<Q, Error> {
        same_space(self, other)?;
        let mut acc = Q::zero();
        for (i, x) in self.vector.iter().enumerate() {
            for (j, y) in other.vector.iter().enumerate() {
                acc += *x * self.gram[i][j] * *y;
            }
        }
        Ok(acc)
    }
}

fn same_space(a: &HeisenbergSector, b: &HeisenbergSector) -> Result<(), Error> {
    if a.gram != b.gram {
        return Err(Error::BadParameter("sectors live over different Gram matrices".into()));
    }
    Ok(())
}

/// `λ ⊠ μ = λ + μ`.
pub fn heisenberg_fusion(a: &HeisenbergSector, b: &HeisenbergSector) -> Result<HeisenbergSector, Error> {
    same_space(a, b)?;
    let vector = a.vector.iter().zip(&b.vector).map(|(x, y)| x + y).collect();
    Ok(HeisenbergSector { gram: a.gram.clone(), vector })
}

/// `exp(iπ (λ|μ))` in the smallest cyclotomic field holding it.
pub fn heisenberg_braid_phase(a: &HeisenbergSector, b: &HeisenbergSector) -> Result<Cyc, Error> {
    let p = a.pairing(b)?;
    let den = *p.denom();
    let order = u32::try_from(2 * den).map_err(|_| Error::BadParameter(format!("pairing {} too fine", p)))?;
    let field = CycField::new(order)?;
    Ok(exp_i_pi(&field, *p.numer(), den))
}
