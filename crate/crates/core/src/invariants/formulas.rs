use crate::error::{domain, Result};
use crate::graph::build_grd;
use crate::grobner::Monomial;
use crate::quotients::BettiTable;

use super::HilbertSeries;

/// `C(n, k)`, zero for `k > n`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

fn check_family(r: usize, d: usize) -> Result<()> {
    if r < 3 {
        return Err(domain(format!("G_{{r,d}} requires r >= 3, got r = {r}")));
    }
    if d < 2 {
        return Err(domain(format!("G_{{r,d}} requires d >= 2, got d = {d}")));
    }
    Ok(())
}

/// Strands `j = 2`: `(i+1) C(d, i+2)` and `j = r`: `d C(d-1, i)`.
pub fn betti_formula_grd(r: usize, d: usize) -> Result<BettiTable> {
    check_family(r, d)?;
    let mut t = quadric_strand(d);
    let du = d as u64;
    for i in 0..d {
        t.add(i, i + r, du * binomial(du - 1, i as u64));
    }
    Ok(t)
}

pub fn betti_formula_k2d(d: usize) -> Result<BettiTable> {
    if d < 2 {
        return Err(domain(format!("K_{{2,d}} requires d >= 2, got d = {d}")));
    }
    Ok(quadric_strand(d))
}

fn quadric_strand(d: usize) -> BettiTable {
    let du = d as u64;
    BettiTable::from_entries((0..d - 1).map(|i| ((i, i + 2), (i as u64 + 1) * binomial(du, i as u64 + 2))))
}

/// `(1 + d t + ... + d t^{r-1}) / (1 - t)^{d + 2r - 2}`.
pub fn hilbert_formula_grd(r: usize, d: usize) -> Result<HilbertSeries> {
    check_family(r, d)?;
    let mut numerator = vec![d as i64; r];
    numerator[0] = 1;
    HilbertSeries::new(numerator, d + 2 * r - 2)
}

/// `(sum r_k - s + 1, sum d_k - 1)` for `s` disjoint induced copies of `G_{r_k, d_k}`.
pub fn lower_bounds_from_induced(components: &[(usize, usize)]) -> Result<(usize, usize)> {
    if components.is_empty() {
        return Err(domain("at least one induced component is required"));
    }
    for &(r, d) in components {
        check_family(r, d)?;
    }
    let s = components.len();
    let reg = components.iter().map(|c| c.0).sum::<usize>() + 1 - s;
    let pdim = components.iter().map(|c| c.1).sum::<usize>() - 1;
    Ok((reg, pdim))
}

/// `a_i b_j` for `i > j`, in the edge indexing of `build_k2d(d)` and `build_grd(r, d)`.
pub fn k2d_initial_generators(d: usize) -> Result<Vec<Monomial>> {
    if d < 2 {
        return Err(domain(format!("K_{{2,d}} requires d >= 2, got d = {d}")));
    }
    Ok((1..=d).flat_map(|j| (j + 1..=d).map(move |i| Monomial::from_vars(&[i - 1, d + j - 1]))).collect())
}

/// The `a_i b_j` (`i > j`) together with `a_i e_2 e_4 ... e_{2r-2}`, indexed as in `build_grd(r, d)`.
pub fn family_initial_generators(r: usize, d: usize) -> Result<Vec<Monomial>> {
    check_family(r, d)?;
    let graph = build_grd(r, d)?;
    let even: Vec<usize> = (1..r).map(|k| graph.edge_index(&format!("e{}", 2 * k)).expect("path edge")).collect();
    let mut gens = k2d_initial_generators(d)?;
    for i in 0..d {
        let mut vars = vec![i];
        vars.extend(&even);
        gens.push(Monomial::from_vars(&vars));
    }
    Ok(gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(30, 15), 155_117_520);
        for n in 1..20 {
            for k in 1..n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    #[test]
    fn grd_3_5() {
        let t = betti_formula_grd(3, 5).unwrap();
        assert_eq!(t.strand(2), [(0, 10), (1, 20), (2, 15), (3, 4)]);
        assert_eq!(t.strand(3), [(0, 5), (1, 20), (2, 30), (3, 20), (4, 5)]);
    }

    #[test]
    fn grd_4_2() {
        let t = betti_formula_grd(4, 2).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), [(0, 2, 1), (0, 4, 2), (1, 5, 2)]);
    }

    #[test]
    fn only_two_strands() {
        for r in 3..8 {
            for d in 2..8 {
                let strands = betti_formula_grd(r, d).unwrap().strands();
                assert!(strands.iter().all(|&k| k == 2 || k == r));
            }
        }
    }

    #[test]
    fn k2d_is_quadric_strand_of_grd() {
        assert_eq!(betti_formula_k2d(2).unwrap().entries().collect::<Vec<_>>(), [(0, 2, 1)]);
        assert_eq!(betti_formula_k2d(5).unwrap().strand(2), [(0, 10), (1, 20), (2, 15), (3, 4)]);
        for d in 2..8 {
            for r in 3..7 {
                assert_eq!(betti_formula_k2d(d).unwrap().strand(2), betti_formula_grd(r, d).unwrap().strand(2));
            }
        }
    }

    #[test]
    fn ranges() {
        assert!(betti_formula_grd(2, 3).is_err());
        assert!(betti_formula_grd(3, 1).is_err());
        assert!(betti_formula_k2d(1).is_err());
        assert!(hilbert_formula_grd(2, 2).is_err());
    }

    #[test]
    fn hilbert_3_5() {
        let hs = hilbert_formula_grd(3, 5).unwrap();
        assert_eq!(hs.numerator(), [1, 5, 5]);
        assert_eq!(hs.denom_power(), 9);
    }

    #[test]
    fn bounds() {
        assert_eq!(lower_bounds_from_induced(&[(3, 5)]).unwrap(), (3, 4));
        assert_eq!(lower_bounds_from_induced(&[(3, 2), (4, 3)]).unwrap(), (6, 4));
        assert!(lower_bounds_from_induced(&[]).is_err());
        assert!(lower_bounds_from_induced(&[(2, 3)]).is_err());
    }

    #[test]
    fn generator_counts() {
        let gens = family_initial_generators(3, 5).unwrap();
        assert_eq!(gens.len(), 15);
        assert_eq!(gens.iter().filter(|g| g.degree() == 3).count(), 5);
        assert_eq!(k2d_initial_generators(4).unwrap().len(), 6);
    }
}
