use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::coeffdom::{Integer, Ring};

/// Exponents `(i, j)` of the monomial `aⁱbʲ`.
pub type Monomial = (u32, u32);

/// An element of `Z_(2)[a,b]` with `|a| = 2`, `|b| = 6`.
///
/// Coefficients are integers; every odd integer is a unit in `Z_(2)`, and
/// nothing here ever divides by an odd number, so integer coefficients are
/// enough.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GradedPoly {
    terms: BTreeMap<Monomial, Integer>,
}

/// Degree of `aⁱbʲ`.
pub fn monomial_degree((i, j): Monomial) -> u32 {
    2 * i + 6 * j
}

impl GradedPoly {
    pub fn monomial(c: Integer, i: u32, j: u32) -> Self {
        let mut p = Self::default();
        if !c.is_zero() {
            p.terms.insert((i, j), c);
        }
        p
    }

    pub fn constant(n: i64) -> Self {
        Self::monomial(Integer::new(n), 0, 0)
    }

    pub fn a() -> Self {
        Self::monomial(Integer::new(1), 1, 0)
    }

    pub fn b() -> Self {
        Self::monomial(Integer::new(1), 0, 1)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &Integer)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, i: u32, j: u32) -> Integer {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Degrees of the nonzero homogeneous components, ascending.
    pub fn degrees(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self.terms.keys().map(|&m| monomial_degree(m)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn homogeneous_component(&self, degree: u32) -> Self {
        let terms =
            self.terms.iter().filter(|(m, _)| monomial_degree(**m) == degree).map(|(m, c)| (*m, c.clone())).collect();
        Self { terms }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degrees().len() <= 1
    }

    /// Coefficients reduced to `{0, 1}`: the image in `F₂[a,b]`.
    pub fn mod2(&self) -> Self {
        let terms = self.terms.iter().filter(|(_, c)| !c.is_even()).map(|(m, _)| (*m, Integer::new(1))).collect();
        Self { terms }
    }

    /// Leading monomial for the degree-then-`a`-exponent order.
    fn leading(&self) -> Option<Monomial> {
        self.terms.keys().copied().max_by_key(|&m| (monomial_degree(m), m.0))
    }

    /// The normal form of `self` in `F₂[a,b]/(v)`.
    ///
    /// A principal ideal is its own Gröbner basis, so dividing by `v` alone
    /// gives a canonical remainder.
    pub fn reduce_mod_two_and(&self, v: &Self) -> Self {
        let v = v.mod2();
        let Some(lead) = v.leading() else {
            return self.mod2();
        };
        let mut rem = self.mod2();
        let mut out = Self::default();
        while let Some(m) = rem.leading() {
            if m.0 >= lead.0 && m.1 >= lead.1 {
                let shift = Self::monomial(Integer::new(1), m.0 - lead.0, m.1 - lead.1);
                rem = rem.add(&shift.mul(&v)).mod2();
            } else {
                rem.terms.remove(&m);
                out.terms.insert(m, Integer::new(1));
            }
        }
        out
    }

    /// Whether `self` lies in the ideal `(2, v)`.
    pub fn in_ideal_two_and(&self, v: &Self) -> bool {
        self.reduce_mod_two_and(v).is_zero()
    }

    /// `p(x, y)` for `a ↦ x`, `b ↦ y`.
    pub fn evaluate<S: Ring>(&self, x: &S, y: &S, embed: impl Fn(&Integer) -> S) -> S {
        let mut acc = x.zero_like();
        for (&(i, j), c) in &self.terms {
            acc = acc.add(&embed(c).mul(&x.pow(i)).mul(&y.pow(j)));
        }
        acc
    }

    /// Whether the only term is a single monomial with odd coefficient.
    pub fn is_unit_monomial(&self) -> Option<Monomial> {
        match self.terms.iter().next() {
            Some((m, c)) if self.terms.len() == 1 && !c.is_even() => Some(*m),
            _ => None,
        }
    }

    fn cleaned(mut self) -> Self {
        self.terms.retain(|_, c| !c.is_zero());
        self
    }
}

impl Ring for GradedPoly {
    type Ctx = ();

    fn context(&self) {}

    fn from_i64(_: &(), n: i64) -> Self {
        Self::constant(n)
    }

    fn add(&self, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            let e = terms.entry(*m).or_default();
            *e = e.add(c);
        }
        Self { terms }.cleaned()
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect() }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut terms: BTreeMap<Monomial, Integer> = BTreeMap::new();
        for ((i1, j1), c1) in &self.terms {
            for ((i2, j2), c2) in &rhs.terms {
                let e = terms.entry((i1 + i2, j1 + j2)).or_default();
                *e = e.add(&c1.mul(c2));
            }
        }
        Self { terms }.cleaned()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn inverse(&self) -> Option<Self> {
        match self.terms.get(&(0, 0)) {
            Some(c) if self.terms.len() == 1 => c.inverse().map(|c| Self::monomial(c, 0, 0)),
            _ => None,
        }
    }
}

impl fmt::Display for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j), c) in self.terms.iter().rev() {
            let s = c.as_bigint();
            let neg = s.sign() == num_bigint::Sign::Minus;
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let abs = if neg { c.neg() } else { c.clone() };
            let unit = abs == Integer::new(1);
            let mut parts: Vec<alloc::string::String> = Vec::new();
            if !unit || (i, j) == (0, 0) {
                parts.push(alloc::format!("{abs}"));
            }
            for (name, e) in [("a", i), ("b", j)] {
                match e {
                    0 => {}
                    1 => parts.push(name.into()),
                    _ => parts.push(alloc::format!("{name}^{e}")),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(terms: &[(i64, u32, u32)]) -> GradedPoly {
        terms
            .iter()
            .fold(GradedPoly::default(), |acc, &(c, i, j)| acc.add(&GradedPoly::monomial(Integer::new(c), i, j)))
    }

    #[test]
    fn display() {
        assert_eq!(p(&[(3, 2, 1), (-1, 1, 0), (2, 0, 0)]).to_string(), "3*a^2*b - a + 2");
        assert_eq!(p(&[(-1, 0, 1)]).to_string(), "-b");
        assert_eq!(GradedPoly::default().to_string(), "0");
    }

    #[test]
    fn degrees_and_components() {
        let f = p(&[(1, 3, 0), (1, 0, 1), (1, 1, 0)]);
        assert_eq!(f.degrees(), [2, 6]);
        assert_eq!(f.homogeneous_component(6), p(&[(1, 3, 0), (1, 0, 1)]));
        assert!(!f.is_homogeneous());
    }

    #[test]
    fn reduction_mod_two_and_a() {
        let f = p(&[(3, 3, 0), (5, 0, 1), (4, 0, 2)]);
        assert_eq!(f.reduce_mod_two_and(&GradedPoly::a()), GradedPoly::b());
        assert!(p(&[(2, 0, 1), (1, 1, 1)]).in_ideal_two_and(&GradedPoly::a()));
    }

    #[test]
    fn reduction_by_a_binomial() {
        // mod (2, a³ + b): a⁴ ≡ a·b
        let v = p(&[(1, 3, 0), (1, 0, 1)]);
        let r = p(&[(1, 4, 0)]).reduce_mod_two_and(&v);
        assert_eq!(r, p(&[(1, 1, 1)]));
        assert!(p(&[(1, 4, 0), (1, 1, 1)]).in_ideal_two_and(&v));
    }

    #[test]
    fn evaluation() {
        let f = p(&[(1, 2, 0), (-3, 0, 1)]);
        let v = f.evaluate(&Integer::new(2), &Integer::new(5), Clone::clone);
        assert_eq!(v, Integer::new(-11));
    }
}
