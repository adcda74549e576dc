use std::collections::{HashSet, VecDeque};
use std::fmt;

use super::GaloisError;
use crate::arith::CycleType;

/// Largest degree for which groups are closed explicitly (8! = 40320 elements).
pub const MAX_DEGREE: usize = 8;

/// Bijection of `{0, ..., n-1}`; `mapping[i]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    mapping: Vec<u8>,
}

impl Permutation {
    pub fn new(mapping: Vec<usize>) -> Result<Self, GaloisError> {
        let n = mapping.len();
        if n > MAX_DEGREE {
            return Err(GaloisError::DegreeTooLarge(n));
        }
        let mut seen = vec![false; n];
        for &m in &mapping {
            if m >= n || seen[m] {
                return Err(GaloisError::NotABijection(mapping));
            }
            seen[m] = true;
        }
        Ok(Permutation {
            mapping: mapping.into_iter().map(|m| m as u8).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            mapping: (0..n as u8).collect(),
        }
    }

    /// Product of the given disjoint or overlapping cycles, rightmost applied first.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self, GaloisError> {
        let mut p = Self::identity(n);
        for cycle in cycles.iter().rev() {
            let mut mapping: Vec<usize> = (0..n).collect();
            for (k, &i) in cycle.iter().enumerate() {
                if i >= n {
                    return Err(GaloisError::NotABijection(cycle.to_vec()));
                }
                mapping[i] = cycle[(k + 1) % cycle.len()];
            }
            p = Self::new(mapping)?.compose(&p);
        }
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.mapping.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.mapping[i] as usize
    }

    /// `self` after `other`: `i -> self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        Permutation {
            mapping: other
                .mapping
                .iter()
                .map(|&i| self.mapping[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut mapping = vec![0u8; self.mapping.len()];
        for (i, &m) in self.mapping.iter().enumerate() {
            mapping[m as usize] = i as u8;
        }
        Permutation { mapping }
    }

    pub fn is_identity(&self) -> bool {
        self.mapping
            .iter()
            .enumerate()
            .all(|(i, &m)| i == m as usize)
    }

    /// `a^-1 b^-1 a b`
    pub fn commutator(a: &Self, b: &Self) -> Self {
        a.inverse().compose(&b.inverse()).compose(a).compose(b)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut i = self.apply(start);
            while i != start {
                seen[i] = true;
                cycle.push(i);
                i = self.apply(i);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::new(self.cycles().iter().map(Vec::len).collect())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<String> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                let items: Vec<String> = c.iter().map(usize::to_string).collect();
                format!("({})", items.join(" "))
            })
            .collect();
        if cycles.is_empty() {
            f.write_str("()")
        } else {
            f.write_str(&cycles.concat())
        }
    }
}

/// Explicitly enumerated permutation group.
#[derive(Clone, Debug)]
pub struct PermGroup {
    n: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    members: HashSet<Permutation>,
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.members == other.members
    }
}

impl Eq for PermGroup {}

impl PermGroup {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Elements in breadth-first order from the identity.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.members.contains(p)
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|a| self.generators.iter().all(|b| a.compose(b) == b.compose(a)))
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.n == other.n && self.generators.iter().all(|g| other.contains(g))
    }
}

/// Subgroup of `S_n` generated by `generators`, by breadth-first closure
/// under left multiplication with the generators.
pub fn group_closure(generators: &[Permutation]) -> Result<PermGroup, GaloisError> {
    let n = generators
        .first()
        .ok_or(GaloisError::NoGenerators)?
        .degree();
    if let Some(g) = generators.iter().find(|g| g.degree() != n) {
        return Err(GaloisError::MixedDegrees(n, g.degree()));
    }
    if n > MAX_DEGREE {
        return Err(GaloisError::DegreeTooLarge(n));
    }
    closure_of(n, generators.to_vec())
}

fn closure_of(n: usize, generators: Vec<Permutation>) -> Result<PermGroup, GaloisError> {
    let id = Permutation::identity(n);
    let mut members = HashSet::from([id.clone()]);
    let mut elements = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in &generators {
            let y = g.compose(&x);
            if members.insert(y.clone()) {
                elements.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    debug_assert_eq!(factorial(n) % elements.len(), 0);
    Ok(PermGroup {
        n,
        generators,
        elements,
        members,
    })
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// `[G, G]`: the normal closure in `G` of the commutators of its generators.
pub fn derived_subgroup(g: &PermGroup) -> PermGroup {
    let mut gens: Vec<Permutation> = Vec::new();
    for (i, a) in g.generators.iter().enumerate() {
        for b in &g.generators[i + 1..] {
            let c = Permutation::commutator(a, b);
            if !c.is_identity() && !gens.contains(&c) {
                gens.push(c);
            }
        }
    }
    if gens.is_empty() {
        return trivial(g.n);
    }
    let mut h = closure_of(g.n, gens).expect("degree already checked");
    loop {
        let mut grown = false;
        let conjugates: Vec<Permutation> = g
            .generators
            .iter()
            .flat_map(|x| {
                let xi = x.inverse();
                h.generators
                    .iter()
                    .map(move |c| xi.compose(c).compose(x))
                    .collect::<Vec<_>>()
            })
            .collect();
        let mut gens = h.generators.clone();
        for c in conjugates {
            if !h.contains(&c) && !gens.contains(&c) {
                gens.push(c);
                grown = true;
            }
        }
        if !grown {
            return h;
        }
        h = closure_of(g.n, gens).expect("degree already checked");
    }
}

fn trivial(n: usize) -> PermGroup {
    closure_of(n, vec![Permutation::identity(n)]).expect("degree already checked")
}

/// `G, [G, G], [[G, G], [G, G]], ...` up to and including the first term
/// equal to its own derived subgroup.
pub fn derived_series(g: &PermGroup) -> Vec<PermGroup> {
    let mut series = vec![g.clone()];
    loop {
        let last = series.last().unwrap();
        let next = derived_subgroup(last);
        if next.order() == last.order() {
            return series;
        }
        series.push(next);
    }
}

/// Solvable iff the derived series reaches the trivial group. This is
/// equivalent to having a subnormal series with cyclic quotients.
pub fn is_solvable(g: &PermGroup) -> bool {
    derived_series(g).last().unwrap().is_trivial()
}
