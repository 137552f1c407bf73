//! Finite groups as abstract index sets with multiplication tables.
//!
//! Elements are the indices `0..r-1`; a `FiniteGroup` stores the full
//! multiplication table, derived inverses, the identity and optional display
//! labels. All group axioms are validated on construction: Latin square,
//! identity, inverses, and associativity (exhaustively for r <= 128, by a
//! deterministic sample of triples above that).

use crate::error::{Error, Result};

/// Orders above this are rejected outright; the solver pipeline is desk-scale.
pub const MAX_ORDER: usize = 1024;

const EXHAUSTIVE_ASSOC_LIMIT: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    /// Row-major `order * order` table: `mul[a * order + b] = a * b`.
    mul: Vec<usize>,
    inv: Vec<usize>,
    identity: usize,
    labels: Vec<String>,
}

impl FiniteGroup {
    /// Build and validate a group from its multiplication table.
    pub fn from_table(order: usize, mul: Vec<usize>, labels: Option<Vec<String>>) -> Result<Self> {
        if order == 0 || order > MAX_ORDER {
            return Err(Error::InvalidOrder(order));
        }
        if mul.len() != order * order {
            return Err(Error::GroupAxiom(format!(
                "table has {} entries, expected {}",
                mul.len(),
                order * order
            )));
        }
        if let Some(&bad) = mul.iter().find(|&&g| g >= order) {
            return Err(Error::GroupAxiom(format!(
                "table entry {bad} out of range 0..{order}"
            )));
        }

        // Latin square: every row and every column is a permutation.
        let mut seen = vec![false; order];
        for a in 0..order {
            seen.iter_mut().for_each(|s| *s = false);
            for b in 0..order {
                let p = mul[a * order + b];
                if seen[p] {
                    return Err(Error::GroupAxiom(format!("row {a} repeats element {p}")));
                }
                seen[p] = true;
            }
            seen.iter_mut().for_each(|s| *s = false);
            for b in 0..order {
                let p = mul[b * order + a];
                if seen[p] {
                    return Err(Error::GroupAxiom(format!("column {a} repeats element {p}")));
                }
                seen[p] = true;
            }
        }

        let identity = (0..order)
            .find(|&e| (0..order).all(|g| mul[e * order + g] == g && mul[g * order + e] == g))
            .ok_or_else(|| Error::GroupAxiom("no two-sided identity".into()))?;

        let mut inv = vec![usize::MAX; order];
        for g in 0..order {
            let h = (0..order)
                .find(|&h| mul[g * order + h] == identity)
                .expect("latin row contains identity");
            if mul[h * order + g] != identity {
                return Err(Error::GroupAxiom(format!(
                    "element {g} has no two-sided inverse"
                )));
            }
            inv[g] = h;
        }

        let assoc_ok = |a: usize, b: usize, c: usize| {
            mul[mul[a * order + b] * order + c] == mul[a * order + mul[b * order + c]]
        };
        if order <= EXHAUSTIVE_ASSOC_LIMIT {
            for a in 0..order {
                for b in 0..order {
                    for c in 0..order {
                        if !assoc_ok(a, b, c) {
                            return Err(Error::GroupAxiom(format!(
                                "associativity fails on ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        } else {
            // Deterministic SplitMix64 sample.
            let mut state = 0x9e37_79b9_7f4a_7c15_u64;
            let mut next = move || {
                state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
                let mut z = state;
                z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
                z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
                (z ^ (z >> 31)) as usize
            };
            for _ in 0..200_000 {
                let (a, b, c) = (next() % order, next() % order, next() % order);
                if !assoc_ok(a, b, c) {
                    return Err(Error::GroupAxiom(format!(
                        "associativity fails on ({a},{b},{c})"
                    )));
                }
            }
        }

        let labels = match labels {
            Some(l) => {
                if l.len() != order {
                    return Err(Error::GroupAxiom(format!(
                        "{} labels for {} elements",
                        l.len(),
                        order
                    )));
                }
                l
            }
            None => default_labels(order),
        };

        Ok(Self {
            order,
            mul,
            inv,
            identity,
            labels,
        })
    }

    /// The cyclic group `Z_r` with addition mod r.
    pub fn cyclic(r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidOrder(0));
        }
        let mut mul = vec![0usize; r * r];
        for a in 0..r {
            for b in 0..r {
                mul[a * r + b] = (a + b) % r;
            }
        }
        Self::from_table(r, mul, None)
    }

    /// Direct product with componentwise multiplication; the pair `(g, h)`
    /// is encoded as `g * |H| + h`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<Self> {
        let (rg, rh) = (g.order, h.order);
        let r = rg * rh;
        let mut mul = vec![0usize; r * r];
        for a1 in 0..rg {
            for a2 in 0..rh {
                for b1 in 0..rg {
                    for b2 in 0..rh {
                        let a = a1 * rh + a2;
                        let b = b1 * rh + b2;
                        mul[a * r + b] = g.mul(a1, b1) * rh + h.mul(a2, b2);
                    }
                }
            }
        }
        let labels = (0..r)
            .map(|i| format!("({},{})", g.labels[i / rh], h.labels[i % rh]))
            .collect();
        Self::from_table(r, mul, Some(labels))
    }

    /// The symmetric group `S_n`, elements enumerated in lexicographic order
    /// (so element 0 is the identity). Composition is `(s . t)(i) = s(t(i))`.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder(0));
        }
        let perms = permutations_lex(n);
        let r = perms.len();
        if r > MAX_ORDER {
            return Err(Error::InvalidOrder(r));
        }
        let index_of = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).unwrap();
        let mut mul = vec![0usize; r * r];
        let mut composed = vec![0usize; n];
        for (a, pa) in perms.iter().enumerate() {
            for (b, pb) in perms.iter().enumerate() {
                for i in 0..n {
                    composed[i] = pa[pb[i]];
                }
                mul[a * r + b] = index_of(&composed);
            }
        }
        Self::from_table(r, mul, None)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    pub fn inv(&self, g: usize) -> usize {
        self.inv[g]
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Row-major multiplication table, as serialized.
    pub fn table(&self) -> &[usize] {
        &self.mul
    }

    /// Order of a single element.
    pub fn element_order(&self, g: usize) -> usize {
        let mut acc = g;
        let mut n = 1;
        while acc != self.identity {
            acc = self.mul(acc, g);
            n += 1;
        }
        n
    }

    /// The permutation `x -> g * x` of the element indices.
    pub fn left_mul_permutation(&self, g: usize) -> Vec<usize> {
        (0..self.order).map(|x| self.mul(g, x)).collect()
    }

    /// Index of the element with the given label, if any.
    pub fn element_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

fn default_labels(order: usize) -> Vec<String> {
    let width = (order.max(2) - 1).to_string().len();
    (0..order).map(|i| format!("g{i:0width$}")).collect()
}

/// All permutations of `0..n` in lexicographic order.
pub(crate) fn permutations_lex(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next_permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_group() {
        let g = FiniteGroup::cyclic(1).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.identity(), 0);
    }

    #[test]
    fn cyclic_four_inverses() {
        let g = FiniteGroup::cyclic(4).unwrap();
        let inv: Vec<usize> = (0..4).map(|x| g.inv(x)).collect();
        assert_eq!(inv, vec![0, 3, 2, 1]);
    }

    #[test]
    fn cyclic_twelve_order() {
        let g = FiniteGroup::cyclic(12).unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(g.element_order(1), 12);
    }

    #[test]
    fn zero_order_rejected() {
        assert!(matches!(FiniteGroup::cyclic(0), Err(Error::InvalidOrder(0))));
    }

    #[test]
    fn product_of_coprime_cyclics_is_cyclic() {
        let a = FiniteGroup::cyclic(3).unwrap();
        let b = FiniteGroup::cyclic(2).unwrap();
        let p = FiniteGroup::direct_product(&a, &b).unwrap();
        assert_eq!(p.order(), 6);
        let exponent = p
            .elements()
            .map(|g| p.element_order(g))
            .fold(1usize, lcm);
        assert_eq!(exponent, 6);
    }

    #[test]
    fn klein_four_self_inverse() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let v4 = FiniteGroup::direct_product(&z2, &z2).unwrap();
        assert_eq!(v4.order(), 4);
        for g in v4.elements() {
            assert_eq!(v4.inv(g), g);
        }
    }

    #[test]
    fn symmetric_group_orders() {
        for (n, expect) in [(1, 1), (2, 2), (3, 6), (4, 24)] {
            let g = FiniteGroup::symmetric(n).unwrap();
            assert_eq!(g.order(), expect);
        }
    }

    #[test]
    fn bad_table_rejected() {
        // Swap one entry of Z_3's table: breaks the Latin property.
        let mut mul = vec![0, 1, 2, 1, 2, 0, 2, 0, 1];
        mul[4] = 1;
        assert!(FiniteGroup::from_table(3, mul, None).is_err());
    }

    #[test]
    fn large_cyclic_accepted_and_capped() {
        assert!(FiniteGroup::cyclic(600).is_ok());
        assert!(FiniteGroup::cyclic(1025).is_err());
    }

    fn lcm(a: usize, b: usize) -> usize {
        a / gcd(a, b) * b
    }

    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
}
