use crate::{Fpr, PermError};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A permutation of `{0, .., degree-1}`, stored as its image list.
///
/// Acts on the right: `v^g = g.apply(v)`. Serialises as the plain JSON array
/// of images; deserialisation re-validates bijectivity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds from an image list, rejecting anything that is not a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n {
                return Err(PermError::NotAPermutation {
                    len: n,
                    reason: format!("image {img} out of range"),
                });
            }
            if seen[img] {
                return Err(PermError::NotAPermutation {
                    len: n,
                    reason: format!("image {img} repeated"),
                });
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds from disjoint-cycle notation; points absent from every cycle
    /// are fixed. Rejects repeated or out-of-range entries.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for window in 0..cycle.len() {
                let point = cycle[window];
                if point >= degree {
                    return Err(PermError::BadCycle { point, degree });
                }
                if touched[point] {
                    return Err(PermError::BadCycle { point, degree });
                }
                touched[point] = true;
                images[point] = cycle[(window + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self` then `other`: `v^(self·other) = (v^self)^other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&v| other.images[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (point, &img) in self.images.iter().enumerate() {
            images[img] = point;
        }
        Permutation { images }
    }

    /// Conjugate under right action: `self^by = by⁻¹ · self · by`.
    pub fn conjugate_by(&self, by: &Permutation) -> Permutation {
        by.inverse().compose(self).compose(by)
    }

    /// `[self, other] = self⁻¹ · other⁻¹ · self · other`.
    pub fn commutator(&self, other: &Permutation) -> Permutation {
        self.inverse()
            .compose(&other.inverse())
            .compose(self)
            .compose(other)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(v, &img)| v == img)
    }

    /// Lengths of all cycles, including fixed points (length 1), unordered.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                len += 1;
                v = self.images[v];
            }
            lengths.push(len);
        }
        lengths
    }

    /// Exact multiplicative order (lcm of cycle lengths). `BigUint` because
    /// Landau's function outgrows machine integers long before degree 2048.
    pub fn order(&self) -> BigUint {
        let mut acc = BigUint::one();
        for len in self.cycle_lengths() {
            acc = acc.lcm(&BigUint::from(len));
        }
        acc
    }

    /// `Some(p)` iff the order is a prime `p`, i.e. every non-trivial cycle
    /// has the same prime length.
    pub fn prime_order(&self) -> Option<u64> {
        let mut prime: Option<u64> = None;
        for len in self.cycle_lengths() {
            if len == 1 {
                continue;
            }
            match prime {
                None if is_prime(len as u64) => prime = Some(len as u64),
                Some(p) if p == len as u64 => {}
                _ => return None,
            }
        }
        prime
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(v, &img)| v == img)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn num_fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(v, &img)| v == img)
            .count()
    }

    /// Exact fixed-point ratio `|Fix| / degree`.
    pub fn fpr(&self) -> Fpr {
        Fpr::new(self.num_fixed_points() as u64, self.degree() as u64)
    }

    /// Disjoint cycle decomposition, fixed points omitted, each cycle led by
    /// its smallest point, cycles ordered by leading point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                cycle.push(v);
                v = self.images[v];
            }
            cycles.push(cycle);
        }
        cycles
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = PermError;
    fn try_from(images: Vec<usize>) -> Result<Self, Self::Error> {
        Permutation::from_images(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, v) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_is_left_then_right() {
        // (0 1 2) then (0 1) is the transposition (1 2).
        let p = Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap();
        let q = Permutation::from_cycles(3, &[vec![0, 1]]).unwrap();
        let pq = p.compose(&q);
        assert_eq!(pq, Permutation::from_cycles(3, &[vec![1, 2]]).unwrap());
    }

    #[test]
    fn from_images_rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 2]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
        assert!(Permutation::from_images(vec![2, 0, 1]).is_ok());
    }

    #[test]
    fn from_cycles_rejects_repeats() {
        assert!(Permutation::from_cycles(4, &[vec![0, 1], vec![1, 2]]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![0, 5]]).is_err());
    }

    #[test]
    fn inverse_and_order() {
        let p = Permutation::from_cycles(6, &[vec![0, 1, 2], vec![3, 4]]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(p.order(), BigUint::from(6u32));
        assert_eq!(p.prime_order(), None);
        let q = Permutation::from_cycles(6, &[vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        assert_eq!(q.prime_order(), Some(3));
    }

    #[test]
    fn fpr_is_exact_and_reduced() {
        let p = Permutation::from_cycles(6, &[vec![0, 1]]).unwrap();
        assert_eq!(p.num_fixed_points(), 4);
        assert_eq!(p.fpr(), Fpr::new(2, 3));
    }

    #[test]
    fn display_cycle_notation() {
        let p = Permutation::from_cycles(5, &[vec![1, 3], vec![2, 4]]).unwrap();
        assert_eq!(format!("{p}"), "(1 3)(2 4)");
        assert_eq!(format!("{}", Permutation::identity(4)), "()");
    }

    #[test]
    fn serde_round_trip_validates() {
        let p = Permutation::from_cycles(4, &[vec![0, 2, 1]]).unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, "[2,0,1,3]");
        let back: Permutation = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<Permutation>("[1,1,0]").is_err());
    }
}
