//! Brute-force group ring engine: explicit permutations of {1..n} and
//! integer linear combinations of them. Used as the enumeration oracle for
//! structure constants and to validate the closed form of the induction
//! operator r_1 against conjugation sums.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::classalg::ClassFunction;
use crate::partition::{enumerate, Partition};

/// A permutation of {0, .., n-1} in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Self {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            assert!(x < images.len() && !seen[x], "not a permutation");
            seen[x] = true;
        }
        Permutation { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// Composition (self . other)(x) = self(other(x)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n());
        Permutation {
            images: (0..self.n()).map(|x| self.images[other.images[x]]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { images: inv }
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            cycles.push(len);
        }
        Partition::new(cycles)
    }

    /// Canonical representative of a cycle type: consecutive blocks, each
    /// cyclically shifted.
    pub fn of_cycle_type(lambda: &Partition) -> Permutation {
        let n = lambda.weight();
        let mut images = vec![0; n];
        let mut start = 0;
        for &part in lambda.parts() {
            for k in 0..part {
                images[start + k] = start + (k + 1) % part;
            }
            start += part;
        }
        Permutation { images }
    }

    /// Extends to a permutation of {0..n} fixing the new point.
    pub fn embed(&self) -> Permutation {
        let mut images = self.images.clone();
        images.push(self.n());
        Permutation { images }
    }

    /// All n! permutations of {0..n-1}.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut images = Vec::new();
        let mut used = vec![false; n];
        fn rec(
            n: usize,
            images: &mut Vec<usize>,
            used: &mut Vec<bool>,
            out: &mut Vec<Permutation>,
        ) {
            if images.len() == n {
                out.push(Permutation {
                    images: images.clone(),
                });
                return;
            }
            for x in 0..n {
                if !used[x] {
                    used[x] = true;
                    images.push(x);
                    rec(n, images, used, out);
                    images.pop();
                    used[x] = false;
                }
            }
        }
        rec(n, &mut images, &mut used, &mut out);
        out
    }
}

/// Integer linear combination of permutations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRingElement {
    n: usize,
    coeffs: HashMap<Permutation, BigInt>,
}

impl GroupRingElement {
    pub fn zero(n: usize) -> Self {
        GroupRingElement {
            n,
            coeffs: HashMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, pi: Permutation, c: BigInt) {
        use std::collections::hash_map::Entry;
        assert_eq!(pi.n(), self.n);
        match self.coeffs.entry(pi) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
        }
    }

    pub fn coeff(&self, pi: &Permutation) -> BigInt {
        self.coeffs.get(pi).cloned().unwrap_or_else(BigInt::zero)
    }

    /// The characteristic function of a conjugacy class, as the sum of its
    /// permutations.
    pub fn from_class(lambda: &Partition) -> Self {
        let n = lambda.weight();
        let mut el = GroupRingElement::zero(n);
        for pi in Permutation::all(n) {
            if &pi.cycle_type() == lambda {
                el.add_term(pi, BigInt::from(1));
            }
        }
        el
    }

    /// Group ring product by full enumeration.
    pub fn convolve(&self, other: &GroupRingElement) -> GroupRingElement {
        assert_eq!(self.n, other.n);
        let mut out = GroupRingElement::zero(self.n);
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                out.add_term(a.compose(b), ca * cb);
            }
        }
        out
    }

    /// Image under the standard inclusion S_n -> S_{n+1}.
    pub fn embed(&self) -> GroupRingElement {
        let mut out = GroupRingElement::zero(self.n + 1);
        for (pi, c) in &self.coeffs {
            out.add_term(pi.embed(), c.clone());
        }
        out
    }

    /// The conjugation sum over the whole group, sum_t t x t^{-1}.
    pub fn conjugation_sum(&self) -> GroupRingElement {
        let mut out = GroupRingElement::zero(self.n);
        for t in Permutation::all(self.n) {
            let tinv = t.inverse();
            for (pi, c) in &self.coeffs {
                out.add_term(t.compose(pi).compose(&tinv), c.clone());
            }
        }
        out
    }

    /// Reads the element back as a class function if its coefficients are
    /// constant on conjugacy classes; `None` otherwise.
    pub fn to_class_function(&self) -> Option<ClassFunction<BigInt>> {
        let mut pairs = Vec::new();
        for nu in enumerate(self.n) {
            let rep = Permutation::of_cycle_type(&nu);
            let value = self.coeff(&rep);
            for pi in Permutation::all(self.n) {
                if pi.cycle_type() == nu && self.coeff(&pi) != value {
                    return None;
                }
            }
            if !value.is_zero() {
                pairs.push((nu, value));
            }
        }
        Some(ClassFunction::from_pairs(self.n, pairs).expect("weights match by construction"))
    }
}
