//! Finitely generated graded-commutative monomial algebras over the
//! two-element field.
//!
//! A [`Presentation`] is an ordered list of generators, each with a
//! tridegree. Generators may be invertible (Laurent exponents) or
//! square-zero (exponent 0 or 1). Monomials are exponent vectors in the
//! declared generator order, and every ordering in this crate is the
//! lexicographic order on those vectors.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use crate::degree::Tridegree;
use crate::error::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub name: String,
    pub degree: Tridegree,
    pub invertible: bool,
    pub square_zero: bool,
}

impl GeneratorSpec {
    pub fn new(name: impl Into<String>, degree: Tridegree) -> Self {
        GeneratorSpec {
            name: name.into(),
            degree,
            invertible: false,
            square_zero: false,
        }
    }

    pub fn invertible(mut self) -> Self {
        self.invertible = true;
        self
    }

    pub fn square_zero(mut self) -> Self {
        self.square_zero = true;
        self
    }

    fn allows(&self, exponent: i64) -> bool {
        if self.square_zero {
            (0..=1).contains(&exponent)
        } else {
            self.invertible || exponent >= 0
        }
    }
}

/// A monomial, stored as its exponent vector.
///
/// The derived `Ord` is lexicographic on exponents, which is the canonical
/// basis order everywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exponents: Vec<i64>,
}

impl Monomial {
    pub fn from_exponents(exponents: Vec<i64>) -> Self {
        Monomial { exponents }
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    pub fn exponent(&self, index: usize) -> i64 {
        self.exponents[index]
    }

    /// Exponentwise sum, without checking any relation.
    pub(crate) fn raw_product(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub(crate) fn with_exponent(&self, index: usize, exponent: i64) -> Monomial {
        let mut exponents = self.exponents.clone();
        exponents[index] = exponent;
        Monomial { exponents }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<GeneratorSpec>,
}

impl Presentation {
    pub fn new(generators: Vec<GeneratorSpec>) -> Result<Self, AlgebraError> {
        for (i, g) in generators.iter().enumerate() {
            if g.invertible && g.square_zero {
                return Err(AlgebraError::InvertibleSquareZero(g.name.clone()));
            }
            if generators[..i].iter().any(|h| h.name == g.name) {
                return Err(AlgebraError::DuplicateGenerator(g.name.clone()));
            }
        }
        Ok(Presentation { generators })
    }

    /// Parses the text config: one generator per line,
    /// `name s f w [invertible] [square_zero]`, with `#` comments.
    pub fn parse(text: &str) -> Result<Self, AlgebraError> {
        let mut generators = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| AlgebraError::Parse {
                line: line_no,
                message,
            };
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() < 4 {
                return Err(err(format!("expected `name s f w [flags]`, got `{line}`")));
            }
            let int = |t: &str| {
                t.parse::<i64>()
                    .map_err(|_| err(format!("`{t}` is not an integer")))
            };
            let mut g = GeneratorSpec::new(
                tokens[0],
                Tridegree::new(int(tokens[1])?, int(tokens[2])?, int(tokens[3])?),
            );
            for flag in &tokens[4..] {
                match *flag {
                    "invertible" => g.invertible = true,
                    "square_zero" => g.square_zero = true,
                    other => return Err(err(format!("unknown flag `{other}`"))),
                }
            }
            generators.push(g);
        }
        Presentation::new(generators)
    }

    pub fn to_config(&self) -> String {
        let mut out = String::new();
        for g in &self.generators {
            let _ = write!(
                out,
                "{} {} {} {}",
                g.name, g.degree.s, g.degree.f, g.degree.w
            );
            if g.invertible {
                out.push_str(" invertible");
            }
            if g.square_zero {
                out.push_str(" square_zero");
            }
            out.push('\n');
        }
        out
    }

    pub fn generators(&self) -> &[GeneratorSpec] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Result<usize, AlgebraError> {
        self.generators
            .iter()
            .position(|g| g.name == name)
            .ok_or_else(|| AlgebraError::UnknownGenerator(name.to_string()))
    }

    /// The unit monomial.
    pub fn one(&self) -> Monomial {
        Monomial::from_exponents(vec![0; self.len()])
    }

    /// Builds a monomial from `(name, exponent)` pairs; repeated names add up.
    pub fn monomial(&self, factors: &[(&str, i64)]) -> Result<Monomial, AlgebraError> {
        let mut exps = vec![0; self.len()];
        for &(name, e) in factors {
            exps[self.index_of(name)?] += e;
        }
        let m = Monomial::from_exponents(exps);
        self.check(&m)?;
        Ok(m)
    }

    /// The single-generator monomial `name^1`.
    pub fn generator(&self, name: &str) -> Result<Monomial, AlgebraError> {
        self.monomial(&[(name, 1)])
    }

    /// Parses `1` or a `*`-separated product such as `tau^2*alpha1^-3*alpha3`.
    pub fn parse_monomial(&self, text: &str) -> Result<Monomial, AlgebraError> {
        let text = text.trim();
        if text == "1" {
            return Ok(self.one());
        }
        let mut factors = Vec::new();
        for factor in text.split('*') {
            let factor = factor.trim();
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => (
                    n,
                    e.parse::<i64>().map_err(|_| AlgebraError::Parse {
                        line: 1,
                        message: format!("bad exponent in `{factor}`"),
                    })?,
                ),
                None => (factor, 1),
            };
            factors.push((name, exp));
        }
        self.monomial(&factors)
    }

    pub fn check(&self, m: &Monomial) -> Result<(), AlgebraError> {
        if m.exponents.len() != self.len() {
            return Err(AlgebraError::ArityMismatch {
                expected: self.len(),
                found: m.exponents.len(),
            });
        }
        for (g, &e) in self.generators.iter().zip(&m.exponents) {
            if !g.allows(e) {
                return Err(AlgebraError::IllegalExponent {
                    name: g.name.clone(),
                    exponent: e,
                });
            }
        }
        Ok(())
    }

    pub fn degree(&self, m: &Monomial) -> Result<Tridegree, AlgebraError> {
        self.check(m)?;
        Ok(self.degree_unchecked(m))
    }

    pub(crate) fn degree_unchecked(&self, m: &Monomial) -> Tridegree {
        self.generators
            .iter()
            .zip(&m.exponents)
            .fold(Tridegree::ZERO, |acc, (g, &e)| acc + e * g.degree)
    }

    /// Product of two monomials; `None` is the zero element, produced when a
    /// square-zero generator reaches exponent 2 or more.
    pub fn multiply(&self, a: &Monomial, b: &Monomial) -> Result<Option<Monomial>, AlgebraError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.multiply_unchecked(a, b))
    }

    pub(crate) fn multiply_unchecked(&self, a: &Monomial, b: &Monomial) -> Option<Monomial> {
        let product = a.raw_product(b);
        let dead = self
            .generators
            .iter()
            .zip(&product.exponents)
            .any(|(g, &e)| g.square_zero && e >= 2);
        (!dead).then_some(product)
    }

    /// Renders a monomial as `tau^2*alpha1^-3*alpha3`, or `1` for the unit.
    pub fn display(&self, m: &Monomial) -> String {
        let factors: Vec<String> = self
            .generators
            .iter()
            .zip(&m.exponents)
            .filter(|(_, &e)| e != 0)
            .map(|(g, &e)| {
                if e == 1 {
                    g.name.clone()
                } else {
                    format!("{}^{}", g.name, e)
                }
            })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }
}

/// Inclusive exponent bounds for one generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExponentRange {
    pub lo: i64,
    pub hi: i64,
}

impl ExponentRange {
    pub const fn new(lo: i64, hi: i64) -> Self {
        ExponentRange { lo, hi }
    }

    pub fn contains(&self, e: i64) -> bool {
        self.lo <= e && e <= self.hi
    }
}

/// A finite box of exponent vectors.
///
/// Bounds are stored as given and clipped against the generator type
/// (nonnegative, or `{0,1}` for square-zero) when used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    bounds: Vec<ExponentRange>,
}

impl Window {
    pub fn new(
        presentation: &Presentation,
        bounds: Vec<ExponentRange>,
    ) -> Result<Self, AlgebraError> {
        if bounds.len() != presentation.len() {
            return Err(AlgebraError::ArityMismatch {
                expected: presentation.len(),
                found: bounds.len(),
            });
        }
        Ok(Window { bounds }.clipped(presentation))
    }

    /// Parses `tau=0..8,alpha1=-12..12,alpha3=0..6,alpha4=0..1`.
    /// Square-zero generators may be omitted and default to `0..1`.
    pub fn parse(presentation: &Presentation, text: &str) -> Result<Self, AlgebraError> {
        let err = |message: String| AlgebraError::Parse { line: 1, message };
        let mut bounds: Vec<Option<ExponentRange>> = vec![None; presentation.len()];
        for item in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (name, range) = item
                .split_once('=')
                .ok_or_else(|| err(format!("expected `name=lo..hi`, got `{item}`")))?;
            let (lo, hi) = range
                .split_once("..")
                .ok_or_else(|| err(format!("expected `lo..hi`, got `{range}`")))?;
            let int = |t: &str| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| err(format!("`{t}` is not an integer")))
            };
            bounds[presentation.index_of(name.trim())?] =
                Some(ExponentRange::new(int(lo)?, int(hi)?));
        }
        let bounds = presentation
            .generators()
            .iter()
            .zip(bounds)
            .map(|(g, b)| match b {
                Some(b) => Ok(b),
                None if g.square_zero => Ok(ExponentRange::new(0, 1)),
                None => Err(err(format!("missing bounds for `{}`", g.name))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Window::new(presentation, bounds)
    }

    fn clipped(mut self, presentation: &Presentation) -> Self {
        for (b, g) in self.bounds.iter_mut().zip(presentation.generators()) {
            if !g.invertible {
                b.lo = b.lo.max(0);
            }
            if g.square_zero {
                b.hi = b.hi.min(1);
            }
        }
        self
    }

    pub fn bounds(&self) -> &[ExponentRange] {
        &self.bounds
    }

    /// True when some generator has an empty exponent range.
    pub fn is_inverted(&self) -> bool {
        self.bounds.iter().any(|b| b.lo > b.hi)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        m.exponents.len() == self.bounds.len()
            && self
                .bounds
                .iter()
                .zip(&m.exponents)
                .all(|(b, &e)| b.contains(e))
    }

    /// Componentwise min and max tridegree reachable inside the window.
    pub fn tridegree_box(&self, presentation: &Presentation) -> Option<(Tridegree, Tridegree)> {
        if self.is_inverted() {
            return None;
        }
        let mut lo = Tridegree::ZERO;
        let mut hi = Tridegree::ZERO;
        for (b, g) in self.bounds.iter().zip(presentation.generators()) {
            for (c_lo, c_hi, d) in [
                (&mut lo.s, &mut hi.s, g.degree.s),
                (&mut lo.f, &mut hi.f, g.degree.f),
                (&mut lo.w, &mut hi.w, g.degree.w),
            ] {
                let (x, y) = (b.lo * d, b.hi * d);
                *c_lo += x.min(y);
                *c_hi += x.max(y);
            }
        }
        Some((lo, hi))
    }

    pub fn in_tridegree_box(&self, presentation: &Presentation, t: Tridegree) -> bool {
        self.tridegree_box(presentation).is_some_and(|(lo, hi)| {
            (lo.s..=hi.s).contains(&t.s)
                && (lo.f..=hi.f).contains(&t.f)
                && (lo.w..=hi.w).contains(&t.w)
        })
    }

    /// Shrinks each bound by `margin` on each side, except where the bound
    /// coincides with a boundary of the full algebra (exponent 0 of a
    /// non-invertible generator, or either end of a square-zero one).
    pub fn shrink(&self, presentation: &Presentation, margin: &[i64]) -> Window {
        let bounds = self
            .bounds
            .iter()
            .zip(presentation.generators())
            .zip(margin)
            .map(|((b, g), &m)| {
                let lo_natural = !g.invertible && b.lo == 0;
                let hi_natural = g.square_zero && b.hi == 1;
                ExponentRange::new(
                    if lo_natural { b.lo } else { b.lo + m },
                    if hi_natural { b.hi } else { b.hi - m },
                )
            })
            .collect();
        Window { bounds }
    }

    /// Number of exponent vectors in the box.
    pub fn volume(&self) -> u64 {
        if self.is_inverted() {
            return 0;
        }
        self.bounds
            .iter()
            .map(|b| (b.hi - b.lo + 1) as u64)
            .product()
    }

    pub fn describe(&self, presentation: &Presentation) -> String {
        presentation
            .generators()
            .iter()
            .zip(&self.bounds)
            .map(|(g, b)| format!("{}={}..{}", g.name, b.lo, b.hi))
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Ordered monomial basis for a single tridegree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct F2VectorSpace {
    degree: Tridegree,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl F2VectorSpace {
    pub fn new(degree: Tridegree, mut basis: Vec<Monomial>) -> Self {
        basis.sort();
        basis.dedup();
        let index = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        F2VectorSpace {
            degree,
            basis,
            index,
        }
    }

    pub fn degree(&self) -> Tridegree {
        self.degree
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

/// Result of [`enumerate_basis`]: the window's monomials grouped by
/// tridegree, each group in canonical order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MonomialBasis {
    pub by_degree: BTreeMap<Tridegree, Vec<Monomial>>,
    /// Set when the window had an empty exponent range.
    pub inverted_bounds: bool,
}

impl MonomialBasis {
    pub fn len(&self) -> usize {
        self.by_degree.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.by_degree.is_empty()
    }

    pub fn get(&self, t: Tridegree) -> &[Monomial] {
        self.by_degree.get(&t).map_or(&[], Vec::as_slice)
    }
}

/// Every monomial of the window, grouped by tridegree.
pub fn enumerate_basis(presentation: &Presentation, window: &Window) -> MonomialBasis {
    if window.is_inverted() {
        return MonomialBasis {
            by_degree: BTreeMap::new(),
            inverted_bounds: true,
        };
    }
    let bounds = window.bounds();
    let mut by_degree: BTreeMap<Tridegree, Vec<Monomial>> = BTreeMap::new();
    let mut current: Vec<i64> = bounds.iter().map(|b| b.lo).collect();
    // Odometer with the last generator fastest, so emission is lexicographic.
    loop {
        let m = Monomial::from_exponents(current.clone());
        by_degree
            .entry(presentation.degree_unchecked(&m))
            .or_default()
            .push(m);
        let mut slot = current.len();
        loop {
            if slot == 0 {
                return MonomialBasis {
                    by_degree,
                    inverted_bounds: false,
                };
            }
            slot -= 1;
            if current[slot] < bounds[slot].hi {
                current[slot] += 1;
                break;
            }
            current[slot] = bounds[slot].lo;
        }
    }
}
