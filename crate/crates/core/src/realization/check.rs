use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::graded::{GradedPoly, Monomial};
use crate::coeffdom::Ring;
use crate::ellfgl::{residual_v1_v2, FormalGroupLaw};
use crate::Result;

/// Which variable of `GradedPoly` a generator occupies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    A,
    B,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: &'static str,
    pub slot: Slot,
    pub degree: i32,
}

/// A polynomial ring over `Z_(2)` on at most two generators, living inside
/// the `a`/`b` slots of [`GradedPoly`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialRing {
    pub generators: Vec<Generator>,
}

impl PolynomialRing {
    /// `Z_(2)[a,b]` with `|a| = 2`, `|b| = 6`.
    pub fn gamma1_3() -> Self {
        Self {
            generators: alloc::vec![
                Generator { name: "a", slot: Slot::A, degree: 2 },
                Generator { name: "b", slot: Slot::B, degree: 6 },
            ],
        }
    }

    /// `Z_(2)[a]`, the quotient by `b`.
    pub fn a_only() -> Self {
        Self { generators: alloc::vec![Generator { name: "a", slot: Slot::A, degree: 2 }] }
    }

    fn generator_poly(g: &Generator) -> GradedPoly {
        match g.slot {
            Slot::A => GradedPoly::a(),
            Slot::B => GradedPoly::b(),
        }
    }

    fn has_slot(&self, slot: Slot) -> bool {
        self.generators.iter().any(|g| g.slot == slot)
    }

    fn degree_of(&self, (i, j): Monomial) -> Option<i32> {
        let deg = |slot| self.generators.iter().find(|g| g.slot == slot).map(|g| g.degree);
        let da = if i > 0 { deg(Slot::A)? * i as i32 } else { 0 };
        let db = if j > 0 { deg(Slot::B)? * j as i32 } else { 0 };
        Some(da + db)
    }

    /// Number of monomials of degree `d`, or `None` if infinite.
    pub fn monomial_count(&self, d: i32) -> Option<usize> {
        if self.generators.iter().any(|g| g.degree == 0) {
            return None;
        }
        let bound = |slot| -> u32 {
            match self.generators.iter().find(|g| g.slot == slot) {
                Some(g) => (d.unsigned_abs() / g.degree.unsigned_abs()) + 1,
                None => 1,
            }
        };
        let mut n = 0;
        for i in 0..bound(Slot::A) {
            for j in 0..bound(Slot::B) {
                if self.degree_of((i, j)) == Some(d) {
                    n += 1;
                }
            }
        }
        Some(n)
    }

    /// Monomials of degree exactly `d` (for positive generator degrees).
    fn monomials_of_degree(&self, d: i32) -> Vec<Monomial> {
        let mut out = Vec::new();
        if d < 0 || self.generators.iter().any(|g| g.degree <= 0) {
            return out;
        }
        let max = d as u32 + 1;
        for i in 0..max {
            for j in 0..max {
                if (i == 0 || self.has_slot(Slot::A))
                    && (j == 0 || self.has_slot(Slot::B))
                    && self.degree_of((i, j)) == Some(d)
                {
                    out.push((i, j));
                }
            }
        }
        out
    }

    fn contains(&self, p: &GradedPoly) -> bool {
        p.terms().all(|((i, j), _)| (i == 0 || self.has_slot(Slot::A)) && (j == 0 || self.has_slot(Slot::B)))
    }

    /// Whether `p` lies in `(2, g₁, g₂, …)`, by linear algebra over `F₂` in
    /// each homogeneous degree. The `gᵢ` must be homogeneous.
    pub fn in_ideal_mod2(&self, p: &GradedPoly, gens: &[GradedPoly]) -> bool {
        let p = p.mod2();
        p.degrees().into_iter().all(|d| {
            let target = p.homogeneous_component(d);
            let mut spanning: Vec<GradedPoly> = Vec::new();
            for g in gens.iter().map(GradedPoly::mod2).filter(|g| !g.is_zero()) {
                let gd = g.degrees()[0];
                if gd > d {
                    continue;
                }
                for (i, j) in self.monomials_of_degree((d - gd) as i32) {
                    let m = GradedPoly::monomial(crate::coeffdom::Integer::new(1), i, j);
                    spanning.push(m.mul(&g).mod2());
                }
            }
            f2_in_span(&spanning, &target)
        })
    }
}

/// Gaussian elimination over `F₂` with monomials as coordinates.
fn f2_in_span(vectors: &[GradedPoly], target: &GradedPoly) -> bool {
    let mut index: BTreeMap<Monomial, usize> = BTreeMap::new();
    for p in vectors.iter().chain(core::iter::once(target)) {
        for (m, _) in p.terms() {
            let n = index.len();
            index.entry(m).or_insert(n);
        }
    }
    let words = index.len().div_ceil(64).max(1);
    let to_bits = |p: &GradedPoly| {
        let mut v = alloc::vec![0u64; words];
        for (m, c) in p.terms() {
            if !c.is_even() {
                let k = index[&m];
                v[k / 64] |= 1 << (k % 64);
            }
        }
        v
    };
    let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
    let reduce = |mut v: Vec<u64>, basis: &[(usize, Vec<u64>)]| {
        for (pivot, b) in basis {
            if v[pivot / 64] >> (pivot % 64) & 1 == 1 {
                for (x, y) in v.iter_mut().zip(b) {
                    *x ^= y;
                }
            }
        }
        v
    };
    for p in vectors {
        let v = reduce(to_bits(p), &basis);
        if let Some(pivot) = (0..index.len()).find(|&k| v[k / 64] >> (k % 64) & 1 == 1) {
            // keep the basis fully reduced so that one pass suffices
            for (_, b) in basis.iter_mut() {
                if b[pivot / 64] >> (pivot % 64) & 1 == 1 {
                    for (x, y) in b.iter_mut().zip(&v) {
                        *x ^= y;
                    }
                }
            }
            basis.push((pivot, v));
        }
    }
    reduce(to_bits(target), &basis).iter().all(|&w| w == 0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub label: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// The four realization-problem verdicts, plus the residues they were
/// decided from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub verdicts: [Verdict; 4],
    pub v1: GradedPoly,
    pub v2: GradedPoly,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed)
    }
}

/// Decides whether `(ring, F)` satisfies the realization axioms at 2:
///
/// 1. the grading is nonnegative;
/// 2. every homogeneous piece is finite free (finitely many monomials);
/// 3. `(2, v₁, v₂)` is regular, read off the leading terms: `v₁` is `a` up
///    to a unit mod 2, and `v₂` is a degree-6 generator mod `(2, v₁)`;
/// 4. `ring/(2, v₁, v₂) = F₂`, i.e. every generator lies in the ideal.
pub fn check_realization_problem(ring: &PolynomialRing, fgl: &FormalGroupLaw<GradedPoly>) -> Result<CheckReport> {
    let (v1, v2) = residual_v1_v2(fgl)?;

    let negative: Vec<&str> = ring.generators.iter().filter(|g| g.degree < 0).map(|g| g.name).collect();
    let grading = Verdict {
        label: "nonnegative grading",
        passed: negative.is_empty(),
        detail: if negative.is_empty() {
            String::from("all generators in nonnegative degree")
        } else {
            format!("negative-degree generators: {}", negative.join(", "))
        },
    };

    let counts: Vec<Option<usize>> = (0..=12).map(|d| ring.monomial_count(d)).collect();
    let finite = counts.iter().all(Option::is_some);
    let finiteness = Verdict {
        label: "degreewise finite free",
        passed: finite,
        detail: if finite {
            let shown: Vec<String> =
                counts.iter().enumerate().map(|(d, c)| format!("{d}:{}", c.unwrap_or(0))).collect();
            format!("monomials per degree {}", shown.join(" "))
        } else {
            String::from("a degree-0 generator makes some homogeneous piece infinite")
        },
    };

    let generator_at = |p: &GradedPoly, degree: i32| {
        p.is_unit_monomial().and_then(|m| {
            ring.generators
                .iter()
                .find(|g| g.degree == degree && PolynomialRing::generator_poly(g).is_unit_monomial() == Some(m))
        })
    };
    let g1 = generator_at(&v1, 2).filter(|_| ring.contains(&v1));
    let g2 = generator_at(&v2, 6).filter(|_| ring.contains(&v2));
    let regular = Verdict {
        label: "(2, v1, v2) regular",
        passed: g1.is_some() && g2.is_some(),
        detail: format!(
            "v1 = {v1} mod 2 ({}), v2 = {v2} mod (2, v1) ({})",
            g1.map_or("not a unit multiple of a degree-2 generator", |_| "unit times a degree-2 generator"),
            g2.map_or("not a unit multiple of a degree-6 generator", |_| "unit times a degree-6 generator"),
        ),
    };

    let ideal = [v1.clone(), v2.clone()];
    let outside: Vec<&str> = ring
        .generators
        .iter()
        .filter(|g| !ring.in_ideal_mod2(&PolynomialRing::generator_poly(g), &ideal))
        .map(|g| g.name)
        .collect();
    let quotient = Verdict {
        label: "quotient by (2, v1, v2) is F2",
        passed: outside.is_empty() && !ring.in_ideal_mod2(&GradedPoly::constant(1), &ideal),
        detail: if outside.is_empty() {
            String::from("every generator lies in (2, v1, v2) and 1 does not")
        } else {
            format!("generators surviving in the quotient: {}", outside.join(", "))
        },
    };

    Ok(CheckReport { verdicts: [grading, finiteness, regular, quotient], v1, v2 })
}
