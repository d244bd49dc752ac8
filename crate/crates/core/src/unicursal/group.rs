use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Default element cap for [`closure`]; 9! fits.
pub const DEFAULT_CLOSURE_CAP: usize = 400_000;

/// A finite permutation group with its elements indexed in breadth-first
/// order from the identity (index 0).
#[derive(Clone, Debug)]
pub struct GroupTable {
    degree: usize,
    elements: Vec<Perm>,
    index: HashMap<Perm, u32>,
}

impl GroupTable {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains_key(p)
    }

    pub fn trivial(n: usize) -> Result<GroupTable> {
        closure_of(n, &[], 1)
    }

    /// The full symmetric group on `{1..n}`.
    pub fn symmetric(n: usize) -> Result<GroupTable> {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Perm::transposition(n, 1, 2)?);
            gens.push(Perm::cycle(n, &(1..=n).collect::<Vec<_>>())?);
        }
        closure_of(n, &gens, DEFAULT_CLOSURE_CAP)
    }

    /// The even permutations of `{1..n}`.
    pub fn alternating(n: usize) -> Result<GroupTable> {
        let gens = (3..=n)
            .map(|k| Perm::cycle(n, &[1, 2, k]))
            .collect::<Result<Vec<_>>>()?;
        closure_of(n, &gens, DEFAULT_CLOSURE_CAP)
    }
}

/// Breadth-first closure of `gens` under right multiplication by the
/// generators and their inverses.
pub fn closure(gens: &[Perm], cap: usize) -> Result<GroupTable> {
    let n = gens
        .first()
        .map(|g| g.degree())
        .ok_or_else(|| Error::Membership("closure needs at least one generator".into()))?;
    closure_of(n, gens, cap)
}

pub fn closure_of(n: usize, gens: &[Perm], cap: usize) -> Result<GroupTable> {
    let id = Perm::identity(n)?;
    for g in gens {
        if g.degree() != n {
            return Err(Error::DegreeMismatch {
                left: n,
                right: g.degree(),
            });
        }
    }
    let mut steps: Vec<Perm> = Vec::new();
    for g in gens {
        for s in [g.clone(), g.inverse()] {
            if !s.is_identity() && !steps.contains(&s) {
                steps.push(s);
            }
        }
    }
    let mut elements = vec![id.clone()];
    let mut index = HashMap::from([(id, 0u32)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for s in &steps {
            let next = elements[i].then_unchecked(s);
            if index.contains_key(&next) {
                continue;
            }
            if elements.len() >= cap {
                return Err(Error::Resource(format!("group closure exceeds {cap} elements")));
            }
            index.insert(next.clone(), elements.len() as u32);
            queue.push_back(elements.len());
            elements.push(next);
        }
    }
    Ok(GroupTable {
        degree: n,
        elements,
        index,
    })
}

/// `|G| / |<gens>|`.
pub fn subgroup_index(group: &GroupTable, gens: &[Perm]) -> Result<usize> {
    for g in gens {
        if !group.contains(g) {
            return Err(Error::Membership(g.to_string()));
        }
    }
    let sub = closure_of(group.degree(), gens, group.order())?;
    Ok(group.order() / sub.order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::parse_cycles;

    fn p(s: &str, n: usize) -> Perm {
        parse_cycles(s, n).unwrap()
    }

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn known_closures() {
        assert_eq!(
            closure(&[p("(1 2)(3 4)", 5), p("(2 3)(4 5)", 5)], 1000)
                .unwrap()
                .order(),
            10
        );
        assert_eq!(closure(&[p("(1 2 3)", 4), p("(1 2 4)", 4)], 1000).unwrap().order(), 12);
        let a6 = closure(&[p("(3 4 6 7 5)", 7), p("(2 4 7)(3 6 5)", 7)], 1000).unwrap();
        assert_eq!(a6.order(), 360);
        assert!(a6
            .elements()
            .iter()
            .all(|g| g.fixes(1) && g.parity() == crate::perm::Parity::Even));
    }

    #[test]
    fn standard_groups() {
        for n in 1..=6 {
            assert_eq!(GroupTable::symmetric(n).unwrap().order(), factorial(n));
            assert_eq!(
                GroupTable::alternating(n).unwrap().order(),
                factorial(n).div_ceil(2).max(1)
            );
        }
        assert!(GroupTable::symmetric(5).unwrap().element(0).is_identity());
    }

    #[test]
    fn closure_is_closed_and_distinct() {
        let g = closure(&[p("(1 2 3)", 4), p("(3 4)", 4)], 100).unwrap();
        assert_eq!(g.order(), 24);
        for a in g.elements() {
            assert!(g.contains(&a.inverse()));
            for b in g.elements() {
                assert!(g.contains(&(a * b)));
            }
        }
        let mut seen = std::collections::HashSet::new();
        assert!(g.elements().iter().all(|e| seen.insert(e.clone())));
    }

    #[test]
    fn cap_and_degree_errors() {
        assert!(matches!(
            closure(&[p("(1 2)", 4), p("(1 2 3 4)", 4)], 10),
            Err(Error::Resource(_))
        ));
        assert!(matches!(
            closure(&[p("(1 2)", 4), p("(1 2)", 5)], 10),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn indices() {
        let a4 = GroupTable::alternating(4).unwrap();
        assert_eq!(subgroup_index(&a4, &[p("(1 2 3)", 4)]).unwrap(), 4);
        let a6 = closure(&[p("(3 4 6 7 5)", 7), p("(2 4 7)(3 6 5)", 7)], 1000).unwrap();
        assert_eq!(subgroup_index(&a6, &[p("(3 4 6 7 5)", 7)]).unwrap(), 72);
        let c = closure(&[p("(1 2 3)", 3)], 10).unwrap();
        assert_eq!(subgroup_index(&c, &[p("(1 2 3)", 3)]).unwrap(), 1);
        assert!(matches!(
            subgroup_index(&a4, &[p("(1 2)", 4)]),
            Err(Error::Membership(_))
        ));
    }
}
