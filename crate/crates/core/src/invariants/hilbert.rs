use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grobner::{Monomial, MonomialIdeal};
use crate::quotients::{colon_with_monomial, BettiTable};

use super::binomial;

/// `Q(t) / (1 - t)^D` with `Q(1) != 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    numerator: Vec<i64>,
    denom_power: usize,
}

impl HilbertSeries {
    /// Cancels common `(1 - t)` factors; fails if more cancel than `denom_power` allows.
    pub fn new(numerator: Vec<i64>, denom_power: usize) -> Result<Self> {
        let mut q = trim(numerator);
        let mut d = denom_power;
        if q.is_empty() {
            return Err(Error::Inconsistent("Hilbert numerator is zero".into()));
        }
        while q.iter().sum::<i64>() == 0 {
            if d == 0 {
                return Err(Error::Inconsistent("(1 - t) divides the numerator more often than the denominator".into()));
            }
            q = divide_one_minus_t(&q)?;
            d -= 1;
        }
        Ok(HilbertSeries { numerator: q, denom_power: d })
    }

    pub fn numerator(&self) -> &[i64] {
        &self.numerator
    }

    pub fn denom_power(&self) -> usize {
        self.denom_power
    }

    /// Hilbert function values in degrees `0..=max_deg`.
    pub fn coefficients(&self, max_deg: usize) -> Vec<i64> {
        (0..=max_deg)
            .map(|k| {
                self.numerator
                    .iter()
                    .enumerate()
                    .take_while(|&(i, _)| i <= k)
                    .map(|(i, &q)| q * multichoose(self.denom_power, k - i))
                    .sum()
            })
            .collect()
    }

    /// `1 + 5t + 5t^2 / (1-t)^11` style rendering.
    pub fn format(&self) -> String {
        let mut terms = Vec::new();
        for (k, &c) in self.numerator.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            let body = match (k, mag) {
                (0, _) => mag.to_string(),
                (_, 1) => monomial_t(k),
                _ => format!("{mag}{}", monomial_t(k)),
            };
            let sign = if c < 0 { "-" } else { "+" };
            if terms.is_empty() {
                terms.push(if c < 0 { format!("-{body}") } else { body });
            } else {
                terms.push(format!("{sign} {body}"));
            }
        }
        format!("({}) / (1 - t)^{}", terms.join(" "), self.denom_power)
    }
}

fn monomial_t(k: usize) -> String {
    if k == 1 {
        "t".into()
    } else {
        format!("t^{k}")
    }
}

/// Number of monomials of degree `k` in `n` variables.
fn multichoose(n: usize, k: usize) -> i64 {
    if n == 0 {
        return i64::from(k == 0);
    }
    binomial((n + k - 1) as u64, k as u64) as i64
}

fn trim(mut q: Vec<i64>) -> Vec<i64> {
    while q.last() == Some(&0) {
        q.pop();
    }
    q
}

/// Synthetic division by `1 - t`, requiring a zero remainder.
fn divide_one_minus_t(q: &[i64]) -> Result<Vec<i64>> {
    // q = (1 - t) p  =>  p_k = q_0 + ... + q_k
    let mut p = Vec::with_capacity(q.len());
    let mut acc = 0;
    for &c in q {
        acc += c;
        p.push(acc);
    }
    let remainder = p.pop().unwrap_or(0);
    if remainder != 0 {
        return Err(Error::Inconsistent(format!("division by (1 - t) leaves remainder {remainder}")));
    }
    Ok(trim(p))
}

/// Series of `R/I` from the Betti table of `I` over `num_vars` variables.
pub fn hilbert_from_betti(betti: &BettiTable, num_vars: usize) -> Result<HilbertSeries> {
    let top = betti.entries().map(|(_, j, _)| j).max().unwrap_or(0);
    let mut q = vec![0i64; top + 1];
    q[0] = 1;
    for (i, j, b) in betti.entries() {
        // homological index i of I is i + 1 for R/I
        let sign = if i % 2 == 0 { -1 } else { 1 };
        q[j] += sign * b as i64;
    }
    HilbertSeries::new(q, num_vars)
}

/// The unreduced numerator of `R/I` over `(1-t)^n`, by
/// `K(g_1..g_k) = K(g_1..g_{k-1}) - t^{deg g_k} K((g_1..g_{k-1}) : g_k)`.
pub fn k_polynomial(ideal: &MonomialIdeal) -> Vec<i64> {
    let mut memo = HashMap::new();
    trim(k_rec(ideal.generators(), &mut memo))
}

fn k_rec(gens: &[Monomial], memo: &mut HashMap<Vec<Monomial>, Vec<i64>>) -> Vec<i64> {
    let Some((last, rest)) = gens.split_last() else {
        return vec![1];
    };
    let mut key = gens.to_vec();
    key.sort();
    if let Some(k) = memo.get(&key) {
        return k.clone();
    }
    let mut out = k_rec(rest, memo);
    let colon = colon_with_monomial(rest, last);
    let shifted = k_rec(colon.generators(), memo);
    let deg = last.degree() as usize;
    if out.len() < shifted.len() + deg {
        out.resize(shifted.len() + deg, 0);
    }
    for (k, c) in shifted.into_iter().enumerate() {
        out[k + deg] -= c;
    }
    memo.insert(key, out.clone());
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HVector {
    pub h: Vec<i64>,
    pub unimodal: bool,
}

/// Numerator coefficients, and whether they weakly rise then weakly fall.
pub fn hvector_extract(hs: &HilbertSeries) -> HVector {
    let h = hs.numerator.clone();
    let peak = h.windows(2).position(|w| w[1] < w[0]).unwrap_or(h.len());
    let unimodal = h[peak..].windows(2).all(|w| w[1] <= w[0]);
    HVector { h, unimodal }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{betti_formula_grd, hilbert_formula_grd};

    #[test]
    fn small_family_from_betti() {
        let t = betti_formula_grd(3, 2).unwrap();
        let hs = hilbert_from_betti(&t, 8).unwrap();
        assert_eq!(hs.numerator(), [1, 2, 2]);
        assert_eq!(hs.denom_power(), 6);
        assert_eq!(hs, hilbert_formula_grd(3, 2).unwrap());
        assert_eq!(hs.format(), "(1 + 2t + 2t^2) / (1 - t)^6");
    }

    #[test]
    fn free_ring() {
        let hs = hilbert_from_betti(&BettiTable::new(), 5).unwrap();
        assert_eq!(hs.numerator(), [1]);
        assert_eq!(hs.denom_power(), 5);
        assert_eq!(hs.coefficients(3), [1, 5, 15, 35]);
    }

    #[test]
    fn inconsistent_tables() {
        // t^2 alone: numerator 1 - t^2 = (1-t)(1+t), fine; but over zero variables it cannot cancel
        let t = BettiTable::from_entries([((0, 2), 1)]);
        assert!(hilbert_from_betti(&t, 0).is_err());
        assert!(HilbertSeries::new(vec![0, 0], 3).is_err());
        assert!(divide_one_minus_t(&[1, 1]).is_err());
    }

    #[test]
    fn expansion() {
        let hs = hilbert_formula_grd(3, 2).unwrap();
        assert_eq!(hs.coefficients(2), [1, 8, 35]);
    }

    #[test]
    fn k_polynomial_matches_betti_alternating_sum() {
        // (xy, yz): 1 - 2t^2 + t^3
        let ideal = MonomialIdeal::new([Monomial::from_vars(&[0, 1]), Monomial::from_vars(&[1, 2])]);
        assert_eq!(k_polynomial(&ideal), [1, 0, -2, 1]);
        assert_eq!(k_polynomial(&MonomialIdeal::zero()), [1]);
    }

    #[test]
    fn hvectors() {
        let hv = hvector_extract(&hilbert_formula_grd(3, 5).unwrap());
        assert_eq!(hv, HVector { h: vec![1, 5, 5], unimodal: true });
        let one = HilbertSeries::new(vec![1], 4).unwrap();
        assert!(hvector_extract(&one).unimodal);
        let dip = HVector { h: vec![1, 3, 1, 2], unimodal: false };
        assert_eq!(hvector_extract(&HilbertSeries::new(dip.h.clone(), 9).unwrap()), dip);
        assert!(hvector_extract(&HilbertSeries::new(vec![1, 1, -1], 9).unwrap()).unimodal);
    }
}
