use std::cmp::Ordering;

use crate::error::{domain, Result};
use crate::graph::{Family, SimpleGraph};

use super::Monomial;

/// Graded reverse lexicographic order with an explicit variable priority.
///
/// Degrees are compared first. On a tie the exponent vectors are read from the
/// lowest-priority variable upward, and the monomial with the larger exponent at
/// the first difference is the smaller one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    priority: Vec<usize>,
    rank: Vec<usize>,
}

impl MonomialOrder {
    /// `priority` lists every variable index exactly once, highest first.
    pub fn new(priority: Vec<usize>) -> Result<Self> {
        let n = priority.len();
        let mut rank = vec![usize::MAX; n];
        for (pos, &v) in priority.iter().enumerate() {
            if v >= n || rank[v] != usize::MAX {
                return Err(domain(format!("variable priority is not a permutation of 0..{n}")));
            }
            rank[v] = pos;
        }
        Ok(MonomialOrder { priority, rank })
    }

    /// Variable `0` highest, then `1`, and so on.
    pub fn natural(num_vars: usize) -> Self {
        MonomialOrder { priority: (0..num_vars).collect(), rank: (0..num_vars).collect() }
    }

    /// `a_1 > ... > a_d > e_1 > ... > e_{2r-2} > b_1 > ... > b_d` for family
    /// graphs; edge declaration order otherwise.
    pub fn for_graph(graph: &SimpleGraph) -> Self {
        let Some(family) = graph.family() else {
            return Self::natural(graph.num_edges());
        };
        let d = family.d();
        let path = match family {
            Family::Grd { r, .. } => 2 * r - 2,
            Family::K2d { .. } => 0,
        };
        // edges are stored a1..ad, b1..bd, e1..e_path
        let priority = (0..d).chain(2 * d..2 * d + path).chain(d..2 * d).collect();
        Self::new(priority).expect("family priority is a permutation")
    }

    /// Parses a comma-separated list of edge names, highest first.
    pub fn parse(spec: &str, graph: &SimpleGraph) -> Result<Self> {
        let mut priority = Vec::new();
        for name in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let v = graph
                .edge_index(name)
                .ok_or_else(|| domain(format!("order names unknown edge variable '{name}'")))?;
            priority.push(v);
        }
        if priority.len() != graph.num_edges() {
            return Err(domain(format!(
                "order lists {} variables but the graph has {} edges",
                priority.len(),
                graph.num_edges()
            )));
        }
        Self::new(priority)
    }

    pub fn num_vars(&self) -> usize {
        self.priority.len()
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    /// Position of `v` in the priority list (0 is highest).
    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    pub fn compare(&self, u: &Monomial, v: &Monomial) -> Ordering {
        match u.degree().cmp(&v.degree()) {
            Ordering::Equal => {}
            other => return other,
        }
        // Among variables where the exponents differ, the lowest-priority one decides.
        let mut decisive: Option<(usize, Ordering)> = None;
        let mut consider = |var: usize, a: u32, b: u32| {
            if a != b {
                let r = self.rank[var];
                if decisive.is_none_or(|(best, _)| r > best) {
                    decisive = Some((r, b.cmp(&a)));
                }
            }
        };
        let (ut, vt) = (u.terms(), v.terms());
        let (mut i, mut j) = (0, 0);
        while i < ut.len() || j < vt.len() {
            match (ut.get(i), vt.get(j)) {
                (Some(&(x, a)), Some(&(y, b))) if x == y => {
                    consider(x, a, b);
                    i += 1;
                    j += 1;
                }
                (Some(&(x, a)), Some(&(y, _))) if x < y => {
                    consider(x, a, 0);
                    i += 1;
                }
                (Some(&(x, a)), None) => {
                    consider(x, a, 0);
                    i += 1;
                }
                (_, Some(&(y, b))) => {
                    consider(y, 0, b);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        decisive.map_or(Ordering::Equal, |(_, o)| o)
    }

    pub fn max<'a>(&self, u: &'a Monomial, v: &'a Monomial) -> &'a Monomial {
        if self.compare(u, v) == Ordering::Less {
            v
        } else {
            u
        }
    }

    /// Sorts monomials ascending under this order.
    pub fn sort(&self, monomials: &mut [Monomial]) {
        monomials.sort_by(|u, v| self.compare(u, v));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_grd;
    use proptest::prelude::*;

    fn m(g: &SimpleGraph, names: &[&str]) -> Monomial {
        Monomial::from_vars(&names.iter().map(|n| g.edge_index(n).unwrap()).collect::<Vec<_>>())
    }

    #[test]
    fn family_priority_is_a_then_e_then_b() {
        let g = build_grd(3, 2).unwrap();
        let ord = MonomialOrder::for_graph(&g);
        let names = g.edge_names();
        let listed: Vec<&str> = ord.priority().iter().map(|&v| names[v].as_str()).collect();
        assert_eq!(listed, ["a1", "a2", "e1", "e2", "e3", "e4", "b1", "b2"]);
    }

    #[test]
    fn leading_terms_of_family_binomials() {
        let g = build_grd(4, 5).unwrap();
        let ord = MonomialOrder::for_graph(&g);
        for i in 1..=5 {
            for j in 1..i {
                let lead = m(&g, &[&format!("a{i}"), &format!("b{j}")]);
                let tail = m(&g, &[&format!("a{j}"), &format!("b{i}")]);
                assert_eq!(ord.compare(&lead, &tail), Ordering::Greater);
            }
            let lead = m(&g, &[&format!("a{i}"), "e2", "e4", "e6"]);
            let tail = m(&g, &[&format!("b{i}"), "e1", "e3", "e5"]);
            assert_eq!(ord.compare(&lead, &tail), Ordering::Greater);
            assert_eq!(ord.compare(&tail, &lead), Ordering::Less);
        }
        let u = m(&g, &["a1", "e3"]);
        assert_eq!(ord.compare(&u, &u), Ordering::Equal);
    }

    #[test]
    fn degree_dominates() {
        let ord = MonomialOrder::natural(3);
        let small = Monomial::from_vars(&[0, 0]);
        let big = Monomial::from_vars(&[2, 2, 2]);
        assert_eq!(ord.compare(&small, &big), Ordering::Less);
    }

    #[test]
    fn parse_order_spec() {
        let g = build_grd(3, 2).unwrap();
        let ord = MonomialOrder::parse("b2, b1, e4, e3, e2, e1, a2, a1", &g).unwrap();
        assert_eq!(ord.rank(g.edge_index("b2").unwrap()), 0);
        assert!(MonomialOrder::parse("b2,b1", &g).is_err());
        assert!(MonomialOrder::parse("b2,b1,e4,e3,e2,e1,a2,zz", &g).is_err());
        assert!(MonomialOrder::parse("b2,b2,e4,e3,e2,e1,a2,a1", &g).is_err());
    }

    fn order_and_monomials() -> impl Strategy<Value = (MonomialOrder, Monomial, Monomial, Monomial)> {
        let n = 5usize;
        let mono = move || prop::collection::vec(0u32..3, n).prop_map(|e| Monomial::from_dense(&e));
        (Just((0..n).collect::<Vec<_>>()).prop_shuffle(), mono(), mono(), mono())
            .prop_map(|(p, u, v, w)| (MonomialOrder::new(p).unwrap(), u, v, w))
    }

    proptest! {
        #[test]
        fn order_axioms((ord, u, v, w) in order_and_monomials()) {
            prop_assert_eq!(ord.compare(&u, &v), ord.compare(&v, &u).reverse());
            prop_assert_eq!(ord.compare(&u, &v) == Ordering::Equal, u == v);
            prop_assert_eq!(ord.compare(&(&u * &w), &(&v * &w)), ord.compare(&u, &v));
            if ord.compare(&u, &v) != Ordering::Greater && ord.compare(&v, &w) != Ordering::Greater {
                prop_assert_ne!(ord.compare(&u, &w), Ordering::Greater);
            }
            prop_assert_ne!(ord.compare(&(&u * &w), &u), Ordering::Less);
        }
    }
}
