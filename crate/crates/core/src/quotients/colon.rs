use crate::error::{domain, Result};
use crate::grobner::{Monomial, MonomialIdeal, MonomialOrder};

/// Minimal monomial generators in a fixed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedGenerators {
    gens: Vec<Monomial>,
    source_order: Option<MonomialOrder>,
}

impl OrderedGenerators {
    /// Rejects duplicates and pairs where one generator divides another.
    pub fn new(gens: Vec<Monomial>) -> Result<Self> {
        for (i, g) in gens.iter().enumerate() {
            if g.is_one() {
                return Err(domain("the unit monomial cannot be a generator of a proper ideal"));
            }
            if let Some(j) = gens.iter().enumerate().position(|(j, h)| i != j && h.divides(g)) {
                return Err(domain(format!("generators {j} and {i} are not pairwise indivisible")));
            }
        }
        Ok(OrderedGenerators { gens, source_order: None })
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn source_order(&self) -> Option<&MonomialOrder> {
        self.source_order.as_ref()
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.gens.iter().cloned())
    }
}

/// `gens` sorted from least to greatest under `ord`.
pub fn sort_ascending(gens: Vec<Monomial>, ord: &MonomialOrder) -> Result<OrderedGenerators> {
    let mut sorted = OrderedGenerators::new(gens)?;
    ord.sort(&mut sorted.gens);
    sorted.source_order = Some(ord.clone());
    Ok(sorted)
}

/// `<prior> : <m>`, minimally generated by the `lcm(m_k, m) / m`.
pub fn colon_with_monomial(prior: &[Monomial], m: &Monomial) -> MonomialIdeal {
    MonomialIdeal::new(prior.iter().map(|p| p.lcm(m).div(m).expect("lcm is a multiple of m")))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientProfile {
    /// Minimal generator count of each colon ideal `<m_1..m_{p-1}> : <m_p>`.
    pub n: Vec<usize>,
    pub linear: bool,
    /// Variables generating each colon ideal; empty lists when `linear` is false.
    pub witnesses: Vec<Vec<usize>>,
    /// 0-based position of the first colon ideal not generated by variables.
    pub first_nonlinear: Option<usize>,
}

pub fn quotient_profile(gens: &OrderedGenerators) -> QuotientProfile {
    let mut n = Vec::with_capacity(gens.len());
    let mut witnesses = Vec::with_capacity(gens.len());
    let mut first_nonlinear = None;
    for (p, m) in gens.gens.iter().enumerate() {
        let colon = colon_with_monomial(&gens.gens[..p], m);
        n.push(colon.len());
        if colon.generators().iter().all(|g| g.degree() == 1) {
            let mut vars: Vec<usize> = colon.generators().iter().filter_map(Monomial::max_var).collect();
            vars.sort_unstable();
            witnesses.push(vars);
        } else {
            first_nonlinear.get_or_insert(p);
            witnesses.push(Vec::new());
        }
    }
    let linear = first_nonlinear.is_none();
    if !linear {
        witnesses.iter_mut().for_each(Vec::clear);
    }
    QuotientProfile { n, linear, witnesses, first_nonlinear }
}
