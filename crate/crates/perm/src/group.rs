use crate::{PermError, Permutation};
use num_bigint::BigUint;
use num_traits::One;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::HashMap;

/// One level of the stabiliser chain: `point` is the base point, `gens` the
/// strong generators fixing all earlier base points, `orbit` the orbit of
/// `point` under them in BFS discovery order, and `transversal[p]` a coset
/// representative with `point^rep = p`.
#[derive(Clone, Debug)]
struct Level {
    point: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    transversal: HashMap<usize, Permutation>,
}

impl Level {
    fn new(degree: usize, point: usize) -> Self {
        let mut transversal = HashMap::new();
        transversal.insert(point, Permutation::identity(degree));
        Level {
            point,
            gens: Vec::new(),
            orbit: vec![point],
            transversal,
        }
    }

    /// Recomputes orbit and transversal by BFS in generator-list order, so
    /// the discovery order (and hence every representative) is deterministic.
    fn recompute_orbit(&mut self, degree: usize) {
        self.orbit.clear();
        self.transversal.clear();
        self.orbit.push(self.point);
        self.transversal
            .insert(self.point, Permutation::identity(degree));
        let mut head = 0;
        while head < self.orbit.len() {
            let p = self.orbit[head];
            head += 1;
            for g in &self.gens {
                let q = g.apply(p);
                if !self.transversal.contains_key(&q) {
                    let rep = self.transversal[&p].compose(g);
                    self.transversal.insert(q, rep);
                    self.orbit.push(q);
                }
            }
        }
    }
}

/// A permutation group held as a base and strong generating set built by a
/// deterministic (non-randomised) Schreier–Sims run, so order, membership,
/// and element enumeration are exact and reproducible across runs.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    levels: Vec<Level>,
    order: BigUint,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            levels: Vec::new(),
            order: BigUint::one(),
        }
    }

    /// Builds the stabiliser chain from `generators`.
    ///
    /// Base points: the first level uses the smallest point moved by any
    /// generator; each later level uses the first point moved by the residue
    /// that forces the level into existence.
    pub fn from_generators(degree: usize, generators: Vec<Permutation>) -> Result<Self, PermError> {
        for g in &generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let mut group = PermGroup {
            degree,
            generators: generators.clone(),
            levels: Vec::new(),
            order: BigUint::one(),
        };
        group.build(&[], generators);
        Ok(group)
    }

    /// Same chain construction, but the base starts with the given points
    /// (used for point stabilisers, where the first base point must be the
    /// stabilised point regardless of what the generators move).
    pub(crate) fn from_generators_with_base(
        degree: usize,
        base_prefix: &[usize],
        generators: Vec<Permutation>,
    ) -> Result<Self, PermError> {
        for &b in base_prefix {
            if b >= degree {
                return Err(PermError::PointOutOfRange { point: b, degree });
            }
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let mut group = PermGroup {
            degree,
            generators: generators.clone(),
            levels: Vec::new(),
            order: BigUint::one(),
        };
        group.build(base_prefix, generators);
        Ok(group)
    }

    fn build(&mut self, base_prefix: &[usize], generators: Vec<Permutation>) {
        for &b in base_prefix {
            self.levels.push(Level::new(self.degree, b));
        }
        let gens: Vec<Permutation> = generators
            .into_iter()
            .filter(|g| !g.is_identity())
            .collect();
        if self.levels.is_empty() {
            if let Some(b0) = gens
                .iter()
                .flat_map(|g| (0..self.degree).find(|&v| g.apply(v) != v))
                .min()
            {
                self.levels.push(Level::new(self.degree, b0));
            }
        }
        for g in gens {
            let (h, j) = self.strip(&g, 0);
            if h.is_identity() {
                continue;
            }
            self.insert_strong_generator(h, 0, j);
        }
        self.order = self
            .levels
            .iter()
            .map(|l| BigUint::from(l.orbit.len()))
            .product();
    }

    /// Sifts `g` through levels `from..`, returning the residue and the level
    /// at which it escaped (`levels.len()` if it ran off the end).
    fn strip(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for i in from..self.levels.len() {
            if h.is_identity() {
                return (h, i);
            }
            let img = h.apply(self.levels[i].point);
            match self.levels[i].transversal.get(&img) {
                Some(rep) => h = h.compose(&rep.inverse()),
                None => return (h, i),
            }
        }
        (h, self.levels.len())
    }

    /// Adds residue `h` (which fixes the base points of levels `from..j`) to
    /// the generator lists of levels `from..=j` and re-verifies the affected
    /// levels, deepest first.
    fn insert_strong_generator(&mut self, h: Permutation, from: usize, j: usize) {
        let j = if j == self.levels.len() {
            let b = (0..self.degree)
                .find(|&v| h.apply(v) != v)
                .expect("non-identity residue moves a point");
            self.levels.push(Level::new(self.degree, b));
            self.levels.len() - 1
        } else {
            j
        };
        for l in from..=j {
            self.levels[l].gens.push(h.clone());
        }
        for l in (from..=j).rev() {
            self.verify_level(l);
        }
    }

    /// Re-establishes the chain invariant at level `i`: every Schreier
    /// generator of this level must sift to the identity through the deeper
    /// levels, inserting new strong generators where it does not.
    fn verify_level(&mut self, i: usize) {
        self.levels[i].recompute_orbit(self.degree);
        let mut pair = 0;
        loop {
            // Orbit and generator list at level i are stable during this
            // loop (insertions only touch deeper levels), so plain indexing
            // enumerates every (orbit point, generator) pair exactly once.
            let n_pairs = self.levels[i].orbit.len() * self.levels[i].gens.len();
            if pair >= n_pairs {
                break;
            }
            let p = self.levels[i].orbit[pair / self.levels[i].gens.len()];
            let s = self.levels[i].gens[pair % self.levels[i].gens.len()].clone();
            pair += 1;
            let t_p = self.levels[i].transversal[&p].clone();
            let q = s.apply(p);
            let t_q_inv = self.levels[i].transversal[&q].inverse();
            let schreier = t_p.compose(&s).compose(&t_q_inv);
            if schreier.is_identity() {
                continue;
            }
            let (residue, j) = self.strip(&schreier, i + 1);
            if !residue.is_identity() {
                self.insert_strong_generator(residue, i + 1, j);
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The generators the group was constructed from, verbatim.
    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Strong generators of the whole chain (level-0 list), useful as a
    /// compact generating set that the chain construction has validated.
    pub fn strong_generators(&self) -> &[Permutation] {
        self.levels
            .first()
            .map(|l| l.gens.as_slice())
            .unwrap_or(&[])
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order.is_one()
    }

    /// Sifts `g` through the chain; the residue is the identity exactly when
    /// `g` is a member.
    pub fn sift(&self, g: &Permutation) -> Permutation {
        self.strip(g, 0).0
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(g).is_identity()
    }

    /// Orbits of the natural action, each sorted ascending, ordered by their
    /// minimal points.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let gens = self.action_generators();
        let mut seen = vec![false; self.degree];
        let mut orbits = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < orbit.len() {
                let p = orbit[head];
                head += 1;
                for g in &gens {
                    let q = g.apply(p);
                    if !seen[q] {
                        seen[q] = true;
                        orbit.push(q);
                    }
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }

    pub fn orbit_of(&self, point: usize) -> Vec<usize> {
        let mut orbit: Vec<usize> = self
            .orbit_transversal(point)
            .into_iter()
            .map(|(p, _)| p)
            .collect();
        orbit.sort_unstable();
        orbit
    }

    pub fn is_transitive(&self) -> bool {
        self.degree > 0 && self.orbit_of(0).len() == self.degree
    }

    /// BFS transversal for the orbit of `point`: pairs `(q, g)` with
    /// `point^g = q`, in discovery order (first entry is `(point, id)`).
    pub fn orbit_transversal(&self, point: usize) -> Vec<(usize, Permutation)> {
        let gens = self.action_generators();
        let mut reps: HashMap<usize, usize> = HashMap::new();
        let mut out: Vec<(usize, Permutation)> = vec![(point, Permutation::identity(self.degree))];
        reps.insert(point, 0);
        let mut head = 0;
        while head < out.len() {
            let (p, rep) = out[head].clone();
            head += 1;
            for g in &gens {
                let q = g.apply(p);
                if let std::collections::hash_map::Entry::Vacant(e) = reps.entry(q) {
                    e.insert(out.len());
                    out.push((q, rep.compose(g)));
                }
            }
        }
        out
    }

    fn action_generators(&self) -> Vec<Permutation> {
        if self.generators.is_empty() {
            Vec::new()
        } else {
            self.generators
                .iter()
                .filter(|g| !g.is_identity())
                .cloned()
                .collect()
        }
    }

    /// The stabiliser of `point`, built by re-running the chain construction
    /// with `point` forced to be the first base point. Satisfies
    /// `|G| = |orbit(point)| * |stabiliser|`.
    pub fn point_stabilizer(&self, point: usize) -> Result<PermGroup, PermError> {
        if point >= self.degree {
            return Err(PermError::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        let rebased =
            PermGroup::from_generators_with_base(self.degree, &[point], self.generators.clone())?;
        let stab_gens: Vec<Permutation> = rebased
            .levels
            .get(1..)
            .unwrap_or(&[])
            .first()
            .map(|l| l.gens.clone())
            .unwrap_or_default();
        let stab = PermGroup::from_generators(self.degree, stab_gens)?;
        debug_assert_eq!(
            &(stab.order.clone() * BigUint::from(rebased.levels[0].orbit.len())),
            &rebased.order,
        );
        Ok(stab)
    }

    /// True when every conjugate of a generator of `sub` by a generator of
    /// `self` (and its inverse) lies back in `sub`.
    pub fn normalizes(&self, sub: &PermGroup) -> bool {
        if sub.degree != self.degree {
            return false;
        }
        self.generators.iter().all(|g| {
            let g_inv = g.inverse();
            sub.generators
                .iter()
                .all(|s| sub.contains(&s.conjugate_by(g)) && sub.contains(&s.conjugate_by(&g_inv)))
        })
    }

    pub fn is_subgroup_of(&self, ambient: &PermGroup) -> bool {
        self.degree == ambient.degree && self.generators.iter().all(|g| ambient.contains(g))
    }

    /// Lazy enumeration of all elements in lexicographic base-image order
    /// along the stabiliser chain (each level's transversal points ascending,
    /// deepest level varying fastest). Starts with the identity.
    pub fn elements_iter(&self) -> Elements<'_> {
        Elements::new(self)
    }

    /// All elements, or `Capped` when the (exactly known) order exceeds
    /// `cap` — callers never receive a silently truncated list.
    pub fn elements(&self, cap: u64) -> Result<Vec<Permutation>, PermError> {
        if self.order > BigUint::from(cap) {
            return Err(PermError::Capped {
                order: self.order.clone(),
                cap,
            });
        }
        Ok(self.elements_iter().collect())
    }

    /// Elements of prime order, filtered from the full enumeration; same cap
    /// semantics as [`elements`](Self::elements).
    pub fn prime_order_elements(&self, cap: u64) -> Result<Vec<Permutation>, PermError> {
        Ok(self
            .elements(cap)?
            .into_iter()
            .filter(|g| g.prime_order().is_some())
            .collect())
    }

    /// Conjugacy class of `x` in this group. `x` must be a member.
    pub fn conjugacy_class(&self, x: &Permutation) -> Result<ConjClass, PermError> {
        if !self.contains(x) {
            return Err(PermError::NotAMember);
        }
        let gens = self.action_generators();
        let mut members = vec![x.clone()];
        let mut seen: std::collections::HashSet<Permutation> = members.iter().cloned().collect();
        let mut head = 0;
        while head < members.len() {
            let y = members[head].clone();
            head += 1;
            for g in &gens {
                let conj = y.conjugate_by(g);
                if seen.insert(conj.clone()) {
                    members.push(conj);
                }
            }
        }
        Ok(ConjClass {
            representative: x.clone(),
            members,
            ambient_order: self.order.clone(),
        })
    }
}

impl Serialize for PermGroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            degree: usize,
            generators: &'a [Permutation],
            order: String,
        }
        Repr {
            degree: self.degree,
            generators: &self.generators,
            order: self.order.to_string(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PermGroup {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            degree: usize,
            generators: Vec<Permutation>,
            order: Option<String>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let group =
            PermGroup::from_generators(repr.degree, repr.generators).map_err(D::Error::custom)?;
        if let Some(stated) = repr.order {
            if stated != group.order.to_string() {
                return Err(D::Error::custom(format!(
                    "stated order {stated} does not match recomputed order {}",
                    group.order
                )));
            }
        }
        Ok(group)
    }
}

/// A conjugacy class: representative, full member list (BFS discovery order
/// under conjugation by the group's generators), and the ambient group order
/// so the centraliser order falls out by the orbit–stabiliser theorem.
#[derive(Clone, Debug)]
pub struct ConjClass {
    pub representative: Permutation,
    members: Vec<Permutation>,
    ambient_order: BigUint,
}

impl ConjClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[Permutation] {
        &self.members
    }

    pub fn ambient_order(&self) -> &BigUint {
        &self.ambient_order
    }

    /// `|C_G(x)| = |G| / |x^G|`, exact.
    pub fn centralizer_order(&self) -> BigUint {
        &self.ambient_order / BigUint::from(self.members.len())
    }
}

/// Iterator over group elements; see [`PermGroup::elements_iter`].
pub struct Elements<'a> {
    group: &'a PermGroup,
    // Sorted transversal points per level; `digits` indexes into them.
    points: Vec<Vec<usize>>,
    digits: Vec<usize>,
    done: bool,
}

impl<'a> Elements<'a> {
    fn new(group: &'a PermGroup) -> Self {
        let points: Vec<Vec<usize>> = group
            .levels
            .iter()
            .map(|l| {
                let mut pts = l.orbit.clone();
                pts.sort_unstable();
                pts
            })
            .collect();
        let digits = vec![0; points.len()];
        Elements {
            group,
            points,
            digits,
            done: false,
        }
    }
}

impl Iterator for Elements<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        // Element for the current digit tuple: deepest transversal applied
        // first, so level l's base image is exactly the chosen orbit point.
        let mut g = Permutation::identity(self.group.degree);
        for l in (0..self.digits.len()).rev() {
            let p = self.points[l][self.digits[l]];
            g = g.compose(&self.group.levels[l].transversal[&p]);
        }
        // Odometer increment, deepest level fastest.
        let mut l = self.digits.len();
        loop {
            if l == 0 {
                self.done = true;
                break;
            }
            l -= 1;
            self.digits[l] += 1;
            if self.digits[l] < self.points[l].len() {
                break;
            }
            self.digits[l] = 0;
        }
        if self.digits.is_empty() {
            self.done = true;
        }
        Some(g)
    }
}
