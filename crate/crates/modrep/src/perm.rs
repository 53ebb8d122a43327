//! Finite permutation groups with full element enumeration.
//!
//! Groups are given by named generator permutations. Elements are enumerated
//! by breadth-first closure in a deterministic order, and every element
//! carries its discovery word in the generators, which downstream code uses
//! to evaluate representations on arbitrary elements.

use crate::error::{Error, Result};
use std::collections::HashMap;
use std::sync::Arc;

pub const DEFAULT_ORDER_CAP: usize = 10080;

/// A permutation of `{0, .., degree-1}`, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Perm(Vec<u16>);

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm((0..degree as u16).collect())
    }

    pub fn from_images(images: &[usize]) -> Result<Perm> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &i in images {
            if i >= degree || seen[i] {
                return Err(Error::NotAPermutation { degree });
            }
            seen[i] = true;
        }
        Ok(Perm(images.iter().map(|&i| i as u16).collect()))
    }

    /// Build from disjoint-cycle notation; points missing from the cycles
    /// are fixed.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Perm> {
        let mut images: Vec<usize> = (0..degree).collect();
        for cyc in cycles {
            for w in 0..cyc.len() {
                let from = cyc[w];
                let to = cyc[(w + 1) % cyc.len()];
                if from >= degree || to >= degree {
                    return Err(Error::NotAPermutation { degree });
                }
                images[from] = to;
            }
        }
        Perm::from_images(&images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn act(&self, point: usize) -> usize {
        self.0[point] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|&i| i as usize).collect()
    }

    /// Function composition: `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree());
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u16; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u16;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i as u16 == j)
    }
}

/// A finite permutation group with enumerated elements.
pub struct Group {
    degree: usize,
    gen_names: Vec<String>,
    gens: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    /// For each non-identity element: (index of parent element, generator index)
    /// such that `element = parent * gen`. Identity has no entry.
    parents: Vec<Option<(usize, usize)>>,
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Group(degree {}, order {})", self.degree, self.order())
    }
}

impl Group {
    /// Enumerate the group generated by named permutations, in breadth-first
    /// order over the generators sorted as given. Errors once the closure
    /// passes `cap` elements.
    pub fn from_generators(
        degree: usize,
        named: &[(String, Perm)],
        cap: usize,
    ) -> Result<Arc<Group>> {
        for (_, p) in named {
            if p.degree() != degree {
                return Err(Error::NotAPermutation { degree });
            }
        }
        let gen_names: Vec<String> = named.iter().map(|(n, _)| n.clone()).collect();
        let gens: Vec<Perm> = named.iter().map(|(_, p)| p.clone()).collect();
        let mut elements = vec![Perm::identity(degree)];
        let mut index = HashMap::new();
        index.insert(elements[0].clone(), 0usize);
        let mut parents: Vec<Option<(usize, usize)>> = vec![None];
        let mut head = 0usize;
        while head < elements.len() {
            for (gi, g) in gens.iter().enumerate() {
                let next = elements[head].compose(g);
                if !index.contains_key(&next) {
                    if elements.len() >= cap {
                        return Err(Error::OrderCapExceeded { cap });
                    }
                    index.insert(next.clone(), elements.len());
                    parents.push(Some((head, gi)));
                    elements.push(next);
                }
            }
            head += 1;
        }
        Ok(Arc::new(Group {
            degree,
            gen_names,
            gens,
            elements,
            index,
            parents,
        }))
    }

    pub fn new(degree: usize, named: &[(String, Perm)]) -> Result<Arc<Group>> {
        Group::from_generators(degree, named, DEFAULT_ORDER_CAP)
    }

    pub fn trivial(degree: usize) -> Arc<Group> {
        Group::new(degree, &[]).expect("trivial group")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn generator_names(&self) -> &[String] {
        &self.gen_names
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn identity_index(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let p = self.elements[a].compose(&self.elements[b]);
        self.index[&p]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.index[&self.elements[a].inverse()]
    }

    /// Discovery decomposition `element = gens[w0] * gens[w1] * ...`
    /// (empty for the identity).
    pub fn word(&self, mut i: usize) -> Vec<usize> {
        let mut w = Vec::new();
        while let Some((parent, gi)) = self.parents[i] {
            w.push(gi);
            i = parent;
        }
        w.reverse();
        w
    }

    pub(crate) fn parent(&self, i: usize) -> Option<(usize, usize)> {
        self.parents[i]
    }

    /// True iff every element of `other` is an element of `self`
    /// (requires equal degrees; membership by permutation equality).
    pub fn contains_group(&self, other: &Group) -> bool {
        other.degree == self.degree && other.elements.iter().all(|p| self.index.contains_key(p))
    }

    /// Same underlying set of permutations.
    pub fn same_group(&self, other: &Group) -> bool {
        self.degree == other.degree && self.order() == other.order() && self.contains_group(other)
    }

    pub fn content_bytes(&self, out: &mut Vec<u8>) {
        out.extend((self.degree as u32).to_le_bytes());
        for e in &self.elements {
            for &i in &e.0 {
                out.extend(i.to_le_bytes());
            }
        }
    }
}

/// `H` is normal in `G` iff conjugation by every generator of `G`
/// preserves `H`.
pub fn is_normal(g: &Group, h: &Group) -> Result<bool> {
    if !g.contains_group(h) {
        return Err(Error::NotASubgroup);
    }
    for x in g.generators() {
        let xi = x.inverse();
        for n in h.elements() {
            let conj = x.compose(n).compose(&xi);
            if h.index_of(&conj).is_none() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Left-coset representatives of `G/N`, identity first, each further
/// representative the least unused element in enumeration order.
pub struct CosetSystem {
    pub ambient: Arc<Group>,
    pub subgroup: Arc<Group>,
    /// Indices into `ambient.elements()`, identity first.
    pub reps: Vec<usize>,
}

impl CosetSystem {
    pub fn index(&self) -> usize {
        self.reps.len()
    }

    /// The coset `g N` as the index into `reps`, for `g` given as an
    /// ambient element index.
    pub fn coset_of(&self, g: usize) -> usize {
        let ge = self.ambient.element(g);
        for (ci, &r) in self.reps.iter().enumerate() {
            // g in rN  <=>  r^{-1} g in N
            let t = self.ambient.element(r).inverse().compose(ge);
            if self.subgroup.index_of(&t).is_some() {
                return ci;
            }
        }
        unreachable!("cosets partition the group")
    }

    /// Decompose `g * reps[i] = reps[j] * n`; returns `(j, n)` with `n` an
    /// element index of the subgroup.
    pub fn factor(&self, g: &Perm, i: usize) -> (usize, usize) {
        let gi = g.compose(self.ambient.element(self.reps[i]));
        for (j, &r) in self.reps.iter().enumerate() {
            let n = self.ambient.element(r).inverse().compose(&gi);
            if let Some(ni) = self.subgroup.index_of(&n) {
                return (j, ni);
            }
        }
        unreachable!("cosets partition the group")
    }
}

pub fn coset_reps(g: &Arc<Group>, n: &Arc<Group>) -> Result<CosetSystem> {
    if !is_normal(g, n)? {
        return Err(Error::NotNormal);
    }
    let mut reps: Vec<usize> = Vec::new();
    let mut covered = vec![false; g.order()];
    for i in 0..g.order() {
        if covered[i] {
            continue;
        }
        reps.push(i);
        let r = g.element(i);
        for h in n.elements() {
            let x = r.compose(h);
            covered[g.index_of(&x).expect("subgroup closed")] = true;
        }
    }
    debug_assert_eq!(reps[0], 0);
    Ok(CosetSystem {
        ambient: Arc::clone(g),
        subgroup: Arc::clone(n),
        reps,
    })
}

/// The quotient group `G/N` realized as a permutation group on the coset
/// set, together with the projection element index -> quotient element index.
pub fn quotient_group(g: &Arc<Group>, n: &Arc<Group>) -> Result<(Arc<Group>, Vec<usize>)> {
    let cosets = coset_reps(g, n)?;
    let k = cosets.index();
    // generator images: action of each generator on cosets
    let mut named = Vec::new();
    for (name, gen) in g.generator_names().iter().zip(g.generators()) {
        let mut images = vec![0usize; k];
        for (i, item) in images.iter_mut().enumerate() {
            let (j, _) = cosets.factor(gen, i);
            *item = j;
        }
        named.push((name.clone(), Perm::from_images(&images)?));
    }
    let q = Group::from_generators(k, &named, g.order().max(1))?;
    let mut projection = vec![0usize; g.order()];
    for (i, item) in projection.iter_mut().enumerate() {
        let ci = cosets.coset_of(i);
        // coset ci corresponds to the quotient permutation induced by reps[ci]
        let rep = g.element(cosets.reps[ci]);
        let mut images = vec![0usize; k];
        for (c, item2) in images.iter_mut().enumerate() {
            let (j, _) = cosets.factor(rep, c);
            *item2 = j;
        }
        *item = q
            .index_of(&Perm::from_images(&images)?)
            .expect("projection lands in quotient");
    }
    Ok((q, projection))
}

pub fn is_p_power(mut order: usize, p: u32) -> bool {
    if order == 0 {
        return false;
    }
    while order % p as usize == 0 {
        order /= p as usize;
    }
    order == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s4() -> Arc<Group> {
        Group::new(
            4,
            &[
                ("r".into(), Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap()),
                ("s".into(), Perm::from_cycles(4, &[&[0, 1]]).unwrap()),
            ],
        )
        .unwrap()
    }

    fn a4() -> Arc<Group> {
        Group::new(
            4,
            &[
                ("t".into(), Perm::from_cycles(4, &[&[0, 1, 2]]).unwrap()),
                (
                    "x".into(),
                    Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap(),
                ),
            ],
        )
        .unwrap()
    }

    fn klein() -> Arc<Group> {
        Group::new(
            4,
            &[
                (
                    "x".into(),
                    Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap(),
                ),
                (
                    "y".into(),
                    Perm::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap(),
                ),
            ],
        )
        .unwrap()
    }

    /// Independent closure oracle: multiply the set by itself to a fixpoint.
    fn closure_order(degree: usize, gens: &[Perm]) -> usize {
        let mut set: std::collections::HashSet<Perm> = std::collections::HashSet::new();
        set.insert(Perm::identity(degree));
        for g in gens {
            set.insert(g.clone());
        }
        loop {
            let mut next = set.clone();
            for a in &set {
                for b in &set {
                    next.insert(a.compose(b));
                }
            }
            if next.len() == set.len() {
                return set.len();
            }
            set = next;
        }
    }

    #[test]
    fn s4_order_24() {
        let g = s4();
        assert_eq!(g.order(), 24);
        assert_eq!(closure_order(4, g.generators()), 24);
    }

    #[test]
    fn trivial_group_order_1() {
        let g = Group::trivial(1);
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn klein_four_order_4() {
        let g = klein();
        assert_eq!(g.order(), 4);
        assert_eq!(closure_order(4, g.generators()), 4);
    }

    #[test]
    fn order_cap() {
        let r = Group::from_generators(
            4,
            &[
                ("r".into(), Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap()),
                ("s".into(), Perm::from_cycles(4, &[&[0, 1]]).unwrap()),
            ],
            10,
        );
        assert!(matches!(r, Err(Error::OrderCapExceeded { cap: 10 })));
    }

    #[test]
    fn normality() {
        let g = s4();
        let n = a4();
        assert!(is_normal(&g, &n).unwrap());
        assert!(is_normal(&g, &g).unwrap());
        let h = Group::new(
            4,
            &[("s".into(), Perm::from_cycles(4, &[&[0, 1]]).unwrap())],
        )
        .unwrap();
        // conjugating (0 1) by (1 2) gives (0 2), which is not in H
        assert!(!is_normal(&g, &h).unwrap());
        let wrong_degree = Group::trivial(3);
        assert!(matches!(
            is_normal(&g, &wrong_degree),
            Err(Error::NotASubgroup)
        ));
    }

    #[test]
    fn cosets() {
        let g = s4();
        let n = a4();
        let cs = coset_reps(&g, &n).unwrap();
        assert_eq!(cs.index(), 2);
        assert_eq!(cs.reps[0], 0);
        // the non-identity representative is an odd permutation
        assert!(is_normal(&g, &klein()).unwrap());
        let cs6 = coset_reps(&g, &klein()).unwrap();
        assert_eq!(cs6.index(), 6);
        let cs1 = coset_reps(&g, &g).unwrap();
        assert_eq!(cs1.index(), 1);

        let two = Group::new(
            4,
            &[("s".into(), Perm::from_cycles(4, &[&[0, 1]]).unwrap())],
        )
        .unwrap();
        assert!(matches!(coset_reps(&g, &two), Err(Error::NotNormal)));
    }

    #[test]
    fn coset_bijection_exhaustive() {
        let g = s4();
        for n in [a4(), klein(), g.clone()] {
            let cs = coset_reps(&g, &n).unwrap();
            assert_eq!(cs.index() * n.order(), g.order());
            let mut seen = std::collections::HashSet::new();
            for &r in &cs.reps {
                for h in n.elements() {
                    let x = g.element(r).compose(h);
                    assert!(seen.insert(x));
                }
            }
            assert_eq!(seen.len(), g.order());
        }
    }

    #[test]
    fn quotients() {
        let g = s4();
        let (q, proj) = quotient_group(&g, &a4()).unwrap();
        assert_eq!(q.order(), 2);
        assert!(is_p_power(q.order(), 2));
        assert_eq!(proj.len(), 24);
        // projection is a homomorphism
        for a in 0..g.order() {
            for b in 0..g.order() {
                assert_eq!(proj[g.mul(a, b)], q.mul(proj[a], proj[b]));
            }
        }

        let (q1, _) = quotient_group(&g, &g).unwrap();
        assert_eq!(q1.order(), 1);

        let (q6, _) = quotient_group(&g, &klein()).unwrap();
        assert_eq!(q6.order(), 6);
        assert!(!is_p_power(q6.order(), 2));
    }

    #[test]
    fn words_reconstruct_elements() {
        let g = s4();
        for i in 0..g.order() {
            let mut p = Perm::identity(4);
            for gi in g.word(i) {
                p = p.compose(&g.generators()[gi]);
            }
            assert_eq!(&p, g.element(i));
        }
    }

    #[test]
    fn bad_permutation_rejected() {
        assert!(matches!(
            Perm::from_images(&[0, 0, 1]),
            Err(Error::NotAPermutation { .. })
        ));
    }
}
