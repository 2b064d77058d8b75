use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use once_cell::sync::OnceCell;

use super::perm::Perm;
use super::GroupError;

/// Default bound on the number of elements a closure may produce.
pub const DEFAULT_ORDER_CAP: usize = 10_000;
/// Largest point count accepted by [`make_group`].
pub const MAX_DEGREE: usize = 64;
const TABLE_LIMIT: usize = 2048;

struct GroupData {
    degree: usize,
    gens: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    table: OnceCell<Vec<u32>>,
    inverses: OnceCell<Vec<u32>>,
    orders: OnceCell<Vec<u64>>,
    fingerprint: OnceCell<super::iso::Fingerprint>,
}

/// A finite permutation group with its full element list.
///
/// The element list is computed once, breadth first from the identity, so
/// element indices are stable for a given generator list. Cloning is cheap.
#[derive(Clone)]
pub struct PermGroup {
    data: Arc<GroupData>,
    name: Option<String>,
}

/// The constructions [`make_group`] knows about.
#[derive(Clone, Debug)]
pub enum GroupKind {
    Cyclic(usize),
    /// Order `2n`; `D2` acts on four points.
    Dihedral(usize),
    Alternating(usize),
    Symmetric(usize),
    DirectProduct(PermGroup, PermGroup),
}

pub fn make_group(kind: GroupKind) -> Result<PermGroup, GroupError> {
    let check = |n: usize, min: usize| {
        if n < min || n > MAX_DEGREE {
            Err(GroupError::InvalidParameter(format!("degree parameter {n} outside {min}..={MAX_DEGREE}")))
        } else {
            Ok(())
        }
    };
    let cycle = |n: usize, pts: Vec<usize>| Perm::from_cycles(n, &[pts]);
    match kind {
        GroupKind::Cyclic(n) => {
            check(n, 1)?;
            let g = cycle(n, (0..n).collect())?;
            PermGroup::generate(n, vec![g]).map(|g| g.named(&format!("C{n}")))
        }
        GroupKind::Dihedral(n) => {
            check(n, 2)?;
            if n == 2 {
                let a = cycle(4, vec![0, 1])?;
                let b = cycle(4, vec![2, 3])?;
                return PermGroup::generate(4, vec![a, b]).map(|g| g.named("D2"));
            }
            let r = cycle(n, (0..n).collect())?;
            let s = Perm::from_images((0..n).map(|i| (n - i) % n).collect())?;
            PermGroup::generate(n, vec![r, s]).map(|g| g.named(&format!("D{n}")))
        }
        GroupKind::Alternating(n) => {
            check(n, 1)?;
            let mut gens = Vec::new();
            if n >= 3 {
                gens.push(cycle(n, vec![0, 1, 2])?);
            }
            if n >= 4 {
                let pts: Vec<usize> = if n % 2 == 1 { (0..n).collect() } else { (1..n).collect() };
                gens.push(cycle(n, pts)?);
            }
            PermGroup::generate(n, gens).map(|g| g.named(&format!("A{n}")))
        }
        GroupKind::Symmetric(n) => {
            check(n, 1)?;
            let mut gens = Vec::new();
            if n >= 2 {
                gens.push(cycle(n, (0..n).collect())?);
                gens.push(cycle(n, vec![0, 1])?);
            }
            PermGroup::generate(n, gens).map(|g| g.named(&format!("S{n}")))
        }
        GroupKind::DirectProduct(a, b) => {
            let (da, db) = (a.degree(), b.degree());
            check(da + db, 1)?;
            let mut gens: Vec<Perm> = a.gens().iter().map(|g| g.extend(0, da + db)).collect();
            gens.extend(b.gens().iter().map(|g| g.extend(da, da + db)));
            let name = format!("{} x {}", a.display_name(), b.display_name());
            PermGroup::generate(da + db, gens).map(|g| g.named(&name))
        }
    }
}

impl PermGroup {
    /// Close `gens` under multiplication with the default element cap.
    pub fn generate(degree: usize, gens: Vec<Perm>) -> Result<Self, GroupError> {
        Self::generate_with_cap(degree, gens, DEFAULT_ORDER_CAP)
    }

    pub fn generate_with_cap(degree: usize, gens: Vec<Perm>, cap: usize) -> Result<Self, GroupError> {
        for g in &gens {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch { expected: degree, found: g.degree() });
            }
        }
        let id = Perm::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for s in &gens {
                let y = elements[i].then(s);
                if !index.contains_key(&y) {
                    if elements.len() >= cap {
                        return Err(GroupError::CapExceeded { cap });
                    }
                    index.insert(y.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(y);
                }
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_identity()).collect();
        Ok(PermGroup {
            data: Arc::new(GroupData {
                degree,
                gens,
                elements,
                index,
                table: OnceCell::new(),
                inverses: OnceCell::new(),
                orders: OnceCell::new(),
                fingerprint: OnceCell::new(),
            }),
            name: None,
        })
    }

    /// Parse generators in 1-based cycle notation.
    pub fn from_cycle_strings(degree: usize, gens: &[&str]) -> Result<Self, GroupError> {
        let gens = gens.iter().map(|s| Perm::parse(s, degree)).collect::<Result<Vec<_>, _>>()?;
        Self::generate(degree, gens)
    }

    pub fn trivial(degree: usize) -> Self {
        Self::generate(degree, Vec::new()).expect("trivial group")
    }

    pub fn named(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn display_name(&self) -> String {
        self.name.clone().unwrap_or_else(|| format!("<group of order {}>", self.order()))
    }

    pub fn degree(&self) -> usize {
        self.data.degree
    }

    pub fn gens(&self) -> &[Perm] {
        &self.data.gens
    }

    pub fn order(&self) -> usize {
        self.data.elements.len()
    }

    /// Elements in breadth-first order; index 0 is the identity.
    pub fn elements(&self) -> &[Perm] {
        &self.data.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.data.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.data.index.get(p).copied()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.data.index.contains_key(p)
    }

    pub(crate) fn same_data(&self, o: &PermGroup) -> bool {
        Arc::ptr_eq(&self.data, &o.data)
    }

    fn table(&self) -> Option<&Vec<u32>> {
        let n = self.order();
        if n > TABLE_LIMIT {
            return None;
        }
        Some(self.data.table.get_or_init(|| {
            let mut t = Vec::with_capacity(n * n);
            for a in &self.data.elements {
                for b in &self.data.elements {
                    t.push(self.data.index[&a.then(b)] as u32);
                }
            }
            t
        }))
    }

    /// Index of `element(i) * element(j)`.
    pub fn mul(&self, i: usize, j: usize) -> usize {
        match self.table() {
            Some(t) => t[i * self.order() + j] as usize,
            None => self.data.index[&self.element(i).then(self.element(j))],
        }
    }

    pub fn inv(&self, i: usize) -> usize {
        let inv = self.data.inverses.get_or_init(|| {
            self.data.elements.iter().map(|p| self.data.index[&p.inverse()] as u32).collect()
        });
        inv[i] as usize
    }

    /// Index of `element(x)` conjugated by `element(g)`, i.e. `g^-1 x g`.
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn element_order(&self, i: usize) -> u64 {
        self.data.orders.get_or_init(|| self.data.elements.iter().map(Perm::order).collect())[i]
    }

    /// Number of elements of each order.
    pub fn order_histogram(&self) -> BTreeMap<u64, usize> {
        let mut h = BTreeMap::new();
        for i in 0..self.order() {
            *h.entry(self.element_order(i)).or_insert(0) += 1;
        }
        h
    }

    pub fn is_abelian(&self) -> bool {
        let g = self.gens();
        g.iter().all(|a| g.iter().all(|b| a.then(b) == b.then(a)))
    }

    pub fn is_subgroup_of(&self, g: &PermGroup) -> bool {
        self.degree() == g.degree() && self.gens().iter().all(|s| g.contains(s))
    }

    fn check_sub(&self, h: &PermGroup) -> Result<(), GroupError> {
        if h.is_subgroup_of(self) {
            Ok(())
        } else {
            Err(GroupError::NotSubgroup)
        }
    }

    /// Subgroup of `self` generated by the given permutations.
    pub fn subgroup(&self, gens: &[Perm]) -> Result<PermGroup, GroupError> {
        if gens.iter().any(|g| !self.contains(g)) {
            return Err(GroupError::NotSubgroup);
        }
        PermGroup::generate(self.degree(), gens.to_vec())
    }

    /// Subgroup on a set of element indices known to be closed; a small
    /// generating set is picked greedily in index order.
    pub(crate) fn subgroup_from_indices(&self, members: &[usize]) -> PermGroup {
        let mut inside = vec![false; self.order()];
        inside[0] = true;
        let mut current = vec![0usize];
        let mut gens: Vec<usize> = Vec::new();
        for &m in members {
            if inside[m] {
                continue;
            }
            gens.push(m);
            let mut k = 0;
            while k < current.len() {
                let x = current[k];
                for &s in &gens {
                    let y = self.mul(x, s);
                    if !inside[y] {
                        inside[y] = true;
                        current.push(y);
                    }
                }
                k += 1;
            }
        }
        let perms = gens.iter().map(|&i| self.element(i).clone()).collect();
        PermGroup::generate(self.degree(), perms).expect("subgroup of a closed group")
    }

    /// Order of the subgroup generated by the given element indices.
    pub fn generated_order(&self, gens: &[usize]) -> usize {
        let mut inside = vec![false; self.order()];
        inside[0] = true;
        let mut queue = vec![0usize];
        let mut k = 0;
        while k < queue.len() {
            let x = queue[k];
            k += 1;
            for &s in gens {
                let y = self.mul(x, s);
                if !std::mem::replace(&mut inside[y], true) {
                    queue.push(y);
                }
            }
        }
        queue.len()
    }

    /// Element indices of `h` inside `self`.
    pub(crate) fn indices_of(&self, h: &PermGroup) -> Vec<usize> {
        h.elements().iter().map(|p| self.index_of(p).expect("subgroup element")).collect()
    }

    pub fn is_normal(&self, h: &PermGroup) -> Result<bool, GroupError> {
        self.check_sub(h)?;
        Ok(self.gens().iter().all(|g| h.gens().iter().all(|x| h.contains(&x.conjugate_by(g)))))
    }

    pub fn normalizer(&self, h: &PermGroup) -> Result<PermGroup, GroupError> {
        self.check_sub(h)?;
        let members: Vec<usize> = (0..self.order())
            .filter(|&g| {
                let gp = self.element(g);
                h.gens().iter().all(|x| h.contains(&x.conjugate_by(gp)))
            })
            .collect();
        Ok(self.subgroup_from_indices(&members))
    }

    pub fn centralizer(&self, h: &PermGroup) -> Result<PermGroup, GroupError> {
        self.check_sub(h)?;
        let members: Vec<usize> = (0..self.order())
            .filter(|&g| {
                let gp = self.element(g);
                h.gens().iter().all(|x| x.then(gp) == gp.then(x))
            })
            .collect();
        Ok(self.subgroup_from_indices(&members))
    }

    pub fn center(&self) -> PermGroup {
        self.centralizer(self).expect("self is a subgroup")
    }

    pub fn derived_subgroup(&self) -> PermGroup {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut comms = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let c = self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b));
                if !std::mem::replace(&mut seen[c], true) {
                    comms.push(c);
                }
            }
        }
        comms.sort_unstable();
        self.subgroup_from_indices(&comms)
    }

    /// Conjugacy classes as sorted index lists, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut cls = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if cls[x] != usize::MAX {
                continue;
            }
            let mut c: Vec<usize> = (0..n).map(|g| self.conj(x, g)).collect();
            c.sort_unstable();
            c.dedup();
            for &y in &c {
                cls[y] = out.len();
            }
            out.push(c);
        }
        out
    }

    /// Primary invariants (sorted prime powers) of the abelianization.
    pub fn abelian_invariants(&self) -> Vec<u64> {
        let d = self.derived_subgroup();
        let dset: Vec<bool> = {
            let mut v = vec![false; self.order()];
            for i in self.indices_of(&d) {
                v[i] = true;
            }
            v
        };
        // order of each coset gG' in the quotient
        let mut hist: BTreeMap<u64, u64> = BTreeMap::new();
        for g in 0..self.order() {
            let mut k = 1u64;
            let mut x = g;
            while !dset[x] {
                x = self.mul(x, g);
                k += 1;
            }
            *hist.entry(k).or_insert(0) += 1;
        }
        let m = (self.order() / d.order()) as u64;
        // every coset was counted |G'| times
        let scale = d.order() as u64;
        let count_dividing = |e: u64| hist.iter().filter(|(k, _)| e.is_multiple_of(**k)).map(|(_, c)| c / scale).sum::<u64>();
        let mut out = Vec::new();
        for p in prime_factors(m) {
            let mut pa = 1u64;
            while m.is_multiple_of(pa * p) {
                pa *= p;
            }
            // s_k = log_p #{x : x^(p^k) = 1}; parts >= k number s_k - s_(k-1)
            let mut s_prev = 0u32;
            let mut pk = 1u64;
            let mut ge: Vec<u32> = Vec::new();
            while pk < pa {
                pk *= p;
                let s = log_p(count_dividing(pk), p);
                ge.push(s - s_prev);
                s_prev = s;
            }
            // conjugate partition
            let parts = ge.first().copied().unwrap_or(0);
            for i in 0..parts {
                let len = ge.iter().filter(|&&c| c > i).count() as u32;
                out.push(p.pow(len));
            }
        }
        out.sort_unstable();
        out
    }

    /// A Sylow `p`-subgroup and the number of them, `[G : N_G(P)]`.
    pub fn sylow(&self, p: u64) -> Result<(PermGroup, usize), GroupError> {
        if !is_prime(p) {
            return Err(GroupError::NotPrime(p));
        }
        let n = self.order() as u64;
        let mut pa = 1u64;
        while n.is_multiple_of(pa * p) {
            pa *= p;
        }
        let mut sub = PermGroup::trivial(self.degree());
        if pa > 1 {
            let x = (0..self.order()).find(|&i| self.element_order(i) == p).expect("Cauchy");
            sub = self.subgroup(&[self.element(x).clone()])?;
        }
        while (sub.order() as u64) < pa {
            let norm = self.normalizer(&sub)?;
            let y = norm
                .elements()
                .iter()
                .find(|y| !sub.contains(y) && sub.contains(&y.pow(p as i64)))
                .expect("a p-subgroup below Sylow grows inside its normalizer")
                .clone();
            let mut gens = sub.gens().to_vec();
            gens.push(y);
            sub = self.subgroup(&gens)?;
        }
        let count = self.order() / self.normalizer(&sub)?.order();
        Ok((sub, count))
    }

    pub(crate) fn fingerprint_cell(&self) -> &OnceCell<super::iso::Fingerprint> {
        &self.data.fingerprint
    }
}

fn log_p(mut x: u64, p: u64) -> u32 {
    let mut k = 0;
    while x > 1 {
        debug_assert_eq!(x % p, 0);
        x /= p;
        k += 1;
    }
    k
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl PartialEq for PermGroup {
    /// Equal as subsets of the same symmetric group.
    fn eq(&self, o: &Self) -> bool {
        self.degree() == o.degree() && self.order() == o.order() && o.gens().iter().all(|g| self.contains(g))
    }
}

impl Eq for PermGroup {}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens().iter().map(|g| g.to_string()).collect();
        write!(f, "PermGroup({}, order {}, degree {}, <{}>)", self.display_name(), self.order(), self.degree(), gens.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> PermGroup {
        make_group(GroupKind::Symmetric(n)).unwrap()
    }

    #[test]
    fn advertised_orders() {
        assert_eq!(make_group(GroupKind::Dihedral(3)).unwrap().order(), 6);
        assert_eq!(make_group(GroupKind::Dihedral(2)).unwrap().order(), 4);
        assert_eq!(make_group(GroupKind::Dihedral(2)).unwrap().degree(), 4);
        assert_eq!(make_group(GroupKind::Alternating(5)).unwrap().order(), 60);
        assert_eq!(make_group(GroupKind::Alternating(6)).unwrap().order(), 360);
        assert_eq!(make_group(GroupKind::Cyclic(1)).unwrap().order(), 1);
        assert_eq!(sym(4).order(), 24);
        let c2 = make_group(GroupKind::Cyclic(2)).unwrap();
        let p = make_group(GroupKind::DirectProduct(sym(4), c2)).unwrap();
        assert_eq!(p.order(), 48);
        assert_eq!(p.name(), Some("S4 x C2"));
    }

    #[test]
    fn parameter_errors() {
        assert!(make_group(GroupKind::Dihedral(1)).is_err());
        assert!(make_group(GroupKind::Cyclic(0)).is_err());
        assert!(make_group(GroupKind::Cyclic(65)).is_err());
        assert_eq!(make_group(GroupKind::Symmetric(8)).unwrap_err(), GroupError::CapExceeded { cap: DEFAULT_ORDER_CAP });
    }

    #[test]
    fn generated_by_cycles() {
        let g = PermGroup::from_cycle_strings(3, &["(1,2,3)", "(1,2)"]).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.element(0).is_identity());
    }

    #[test]
    fn closure_axioms() {
        let g = sym(4);
        for i in 0..g.order() {
            assert_eq!(g.mul(i, g.inv(i)), 0);
            for j in 0..g.order() {
                assert!(g.contains(&g.element(i).then(g.element(j))));
            }
        }
    }

    #[test]
    fn structure_queries() {
        let s4 = sym(4);
        let a4 = make_group(GroupKind::Alternating(4)).unwrap();
        assert!(s4.is_normal(&a4).unwrap());
        assert_eq!(s4.center().order(), 1);
        assert_eq!(s4.derived_subgroup(), a4);
        assert_eq!(s4.abelian_invariants(), vec![2]);
        let c2 = make_group(GroupKind::Cyclic(2)).unwrap();
        let p = make_group(GroupKind::DirectProduct(s4.clone(), c2)).unwrap();
        assert_eq!(p.center().order(), 2);
        assert_eq!(p.abelian_invariants(), vec![2, 2]);
        let sub = PermGroup::from_cycle_strings(4, &["(1,2)"]).unwrap();
        assert_eq!(a4.normalizer(&sub), Err(GroupError::NotSubgroup));
        let class_sizes: Vec<usize> = s4.conjugacy_classes().iter().map(Vec::len).collect();
        assert_eq!(class_sizes.iter().sum::<usize>(), 24);
        assert_eq!(class_sizes.len(), 5);
    }

    #[test]
    fn abelian_invariants_of_abelian_groups() {
        let c12 = make_group(GroupKind::Cyclic(12)).unwrap();
        assert_eq!(c12.abelian_invariants(), vec![3, 4]);
        let d2 = make_group(GroupKind::Dihedral(2)).unwrap();
        assert_eq!(d2.abelian_invariants(), vec![2, 2]);
        let c4 = make_group(GroupKind::Cyclic(4)).unwrap();
        let c2 = make_group(GroupKind::Cyclic(2)).unwrap();
        let c4c2 = make_group(GroupKind::DirectProduct(c4, c2)).unwrap();
        assert_eq!(c4c2.abelian_invariants(), vec![2, 4]);
        assert_eq!(make_group(GroupKind::Alternating(5)).unwrap().abelian_invariants(), Vec::<u64>::new());
    }

    #[test]
    fn sylow_counts() {
        let a5 = make_group(GroupKind::Alternating(5)).unwrap();
        let (p5, n5) = a5.sylow(5).unwrap();
        assert_eq!((p5.order(), n5), (5, 6));
        assert_eq!(a5.normalizer(&p5).unwrap().order(), 10);
        let (p3, n3) = sym(4).sylow(3).unwrap();
        assert_eq!((p3.order(), n3), (3, 4));
        let (p2, n2) = sym(4).sylow(2).unwrap();
        assert_eq!((p2.order(), n2), (8, 3));
        let c60 = make_group(GroupKind::Cyclic(60)).unwrap();
        assert_eq!(c60.sylow(5).unwrap().1, 1);
        assert_eq!(sym(4).sylow(5).unwrap().0.order(), 1);
        assert_eq!(sym(4).sylow(4).unwrap_err(), GroupError::NotPrime(4));
    }
}
