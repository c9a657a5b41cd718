//! Page-indexed differentials on a monomial algebra, extended by the Leibniz
//! rule, and windowed spectral sequence pages over the two-element field.
//!
//! The algebra is infinite, so every computation happens inside a finite
//! exponent [`Window`]. Homology near the window boundary sees truncated
//! differentials; each page turn therefore shrinks a *core* window by the
//! exponent footprint of the differential, and only tridegrees whose basis
//! lies entirely in the core are reported as [`Validity::Valid`].

use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::{
    enumerate_basis, F2VectorSpace, GeneratorSpec, Monomial, Presentation, Window,
};
use crate::degree::Tridegree;
use crate::error::{AlgebraError, DifferentialError};
use crate::f2::{Echelon, F2Matrix, F2Vector};

/// A sum of distinct monomials with coefficients in the two-element field.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polynomial {
    terms: BTreeSet<Monomial>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = Monomial>) -> Self {
        let mut p = Polynomial::zero();
        for t in terms {
            p.add_term(t);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds one monomial; a repeated monomial cancels.
    pub fn add_term(&mut self, m: Monomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn add_assign(&mut self, other: &Polynomial) {
        for t in &other.terms {
            self.add_term(t.clone());
        }
    }

    pub fn mul_monomial(&self, presentation: &Presentation, m: &Monomial) -> Polynomial {
        Polynomial::from_terms(
            self.terms
                .iter()
                .filter_map(|t| presentation.multiply_unchecked(t, m)),
        )
    }

    pub fn mul(&self, presentation: &Presentation, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for t in &other.terms {
            out.add_assign(&self.mul_monomial(presentation, t));
        }
        out
    }

    pub fn display(&self, presentation: &Presentation) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|t| presentation.display(t))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl From<Monomial> for Polynomial {
    fn from(m: Monomial) -> Self {
        Polynomial::from_terms([m])
    }
}

/// A derivation `d_r` of tridegree `shift`, given by its values on generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferentialSpec {
    page: i64,
    shift: Tridegree,
    images: Vec<Polynomial>,
}

impl DifferentialSpec {
    /// Adams–Novikov grading: `d_r` has tridegree `(-1, r, 0)`.
    pub fn new(
        presentation: &Presentation,
        page: i64,
        images: &[(&str, Polynomial)],
    ) -> Result<Self, DifferentialError> {
        Self::with_shift(presentation, page, Tridegree::new(-1, page, 0), images)
    }

    pub fn with_shift(
        presentation: &Presentation,
        page: i64,
        shift: Tridegree,
        images: &[(&str, Polynomial)],
    ) -> Result<Self, DifferentialError> {
        if page < 2 {
            return Err(DifferentialError::BadPage(page));
        }
        let mut table = vec![Polynomial::zero(); presentation.len()];
        for (name, image) in images {
            let i = presentation.index_of(name)?;
            let g: &GeneratorSpec = &presentation.generators()[i];
            let expected = g.degree + shift;
            for term in image.terms() {
                let found = presentation.degree(term)?;
                if found != expected {
                    return Err(DifferentialError::DegreeMismatch {
                        generator: g.name.clone(),
                        expected,
                        found,
                    });
                }
            }
            table[i].add_assign(image);
        }
        Ok(DifferentialSpec {
            page,
            shift,
            images: table,
        })
    }

    pub fn page(&self) -> i64 {
        self.page
    }

    pub fn shift(&self) -> Tridegree {
        self.shift
    }

    pub fn image(&self, generator: usize) -> &Polynomial {
        &self.images[generator]
    }

    /// Largest exponent change, per generator, between a generator and any
    /// term of its image. Bounds how far `d` moves a monomial in exponent
    /// space.
    pub fn footprint(&self, presentation: &Presentation) -> Vec<i64> {
        let n = presentation.len();
        let mut margin = vec![0; n];
        for (g, image) in self.images.iter().enumerate() {
            for term in image.terms() {
                for (i, m) in margin.iter_mut().enumerate() {
                    let delta = term.exponent(i) - i64::from(i == g);
                    *m = (*m).max(delta.abs());
                }
            }
        }
        margin
    }
}

/// Applies `d` to a monomial via the Leibniz rule, mod 2.
///
/// A factor `x^n` contributes `n·x^(n-1)·dx`, which vanishes for even `n`.
pub fn leibniz_extend(
    presentation: &Presentation,
    spec: &DifferentialSpec,
    m: &Monomial,
) -> Result<Polynomial, AlgebraError> {
    presentation.check(m)?;
    Ok(leibniz_unchecked(presentation, spec, m))
}

fn leibniz_unchecked(
    presentation: &Presentation,
    spec: &DifferentialSpec,
    m: &Monomial,
) -> Polynomial {
    let mut out = Polynomial::zero();
    for (i, &n) in m.exponents().iter().enumerate() {
        let image = spec.image(i);
        if n.rem_euclid(2) == 0 || image.is_zero() {
            continue;
        }
        let rest = m.with_exponent(i, n - 1);
        out.add_assign(&image.mul_monomial(presentation, &rest));
    }
    out
}

fn leibniz_sum_unchecked(
    presentation: &Presentation,
    spec: &DifferentialSpec,
    p: &Polynomial,
) -> Polynomial {
    let mut out = Polynomial::zero();
    for t in p.terms() {
        out.add_assign(&leibniz_unchecked(presentation, spec, t));
    }
    out
}

/// Applies `d` to a polynomial, term by term.
pub fn leibniz_extend_sum(
    presentation: &Presentation,
    spec: &DifferentialSpec,
    p: &Polynomial,
) -> Result<Polynomial, AlgebraError> {
    let mut out = Polynomial::zero();
    for t in p.terms() {
        out.add_assign(&leibniz_extend(presentation, spec, t)?);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Validity {
    Valid,
    Indeterminate,
}

/// Ranks seen at one tridegree during a page turn.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TurnStats {
    pub dim_before: usize,
    pub rank_in: usize,
    pub rank_out: usize,
    pub dim_after: usize,
    /// False when a differential left the current page's cycles, which only
    /// happens from truncation at the window edge.
    pub consistent: bool,
}

#[derive(Debug, Clone)]
pub struct PageState {
    presentation: Presentation,
    window: Window,
    core: Window,
    page: i64,
    spaces: BTreeMap<Tridegree, F2VectorSpace>,
    boundaries: BTreeMap<Tridegree, Echelon>,
    classes: BTreeMap<Tridegree, Vec<F2Vector>>,
    inconsistent: BTreeSet<Tridegree>,
    last_turn: BTreeMap<Tridegree, TurnStats>,
}

impl PageState {
    /// The `E_2` page: every window monomial is a class.
    pub fn e2(presentation: &Presentation, window: &Window) -> Self {
        let basis = enumerate_basis(presentation, window);
        let mut spaces = BTreeMap::new();
        let mut boundaries = BTreeMap::new();
        let mut classes = BTreeMap::new();
        for (t, ms) in basis.by_degree {
            let space = F2VectorSpace::new(t, ms);
            let n = space.dim();
            boundaries.insert(t, Echelon::new(n));
            classes.insert(t, (0..n).map(|i| F2Vector::unit(n, i)).collect());
            spaces.insert(t, space);
        }
        PageState {
            presentation: presentation.clone(),
            window: window.clone(),
            core: window.clone(),
            page: 2,
            spaces,
            boundaries,
            classes,
            inconsistent: BTreeSet::new(),
            last_turn: BTreeMap::new(),
        }
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    /// The sub-window on which results are certified.
    pub fn core(&self) -> &Window {
        &self.core
    }

    pub fn page(&self) -> i64 {
        self.page
    }

    pub fn tridegrees(&self) -> impl Iterator<Item = Tridegree> + '_ {
        self.spaces.keys().copied()
    }

    pub fn space(&self, t: Tridegree) -> Option<&F2VectorSpace> {
        self.spaces.get(&t)
    }

    pub fn dim(&self, t: Tridegree) -> usize {
        self.classes.get(&t).map_or(0, Vec::len)
    }

    pub fn validity(&self, t: Tridegree) -> Validity {
        match self.spaces.get(&t) {
            Some(space)
                if !self.inconsistent.contains(&t)
                    && space.basis().iter().all(|m| self.core.contains(m)) =>
            {
                Validity::Valid
            }
            _ => Validity::Indeterminate,
        }
    }

    /// Canonical representatives of the surviving classes at `t`.
    pub fn classes(&self, t: Tridegree) -> Vec<Polynomial> {
        let (Some(space), Some(reps)) = (self.spaces.get(&t), self.classes.get(&t)) else {
            return Vec::new();
        };
        reps.iter().map(|v| to_polynomial(space, v)).collect()
    }

    /// Surviving classes at every valid tridegree that has any.
    pub fn core_classes(&self) -> BTreeMap<Tridegree, Vec<Polynomial>> {
        self.spaces
            .keys()
            .filter(|&&t| self.validity(t) == Validity::Valid && self.dim(t) > 0)
            .map(|&t| (t, self.classes(t)))
            .collect()
    }

    pub fn valid_tridegrees(&self) -> impl Iterator<Item = Tridegree> + '_ {
        self.spaces
            .keys()
            .copied()
            .filter(|&t| self.validity(t) == Validity::Valid)
    }

    /// Per-tridegree ranks recorded by the page turn that produced this state.
    pub fn last_turn(&self) -> &BTreeMap<Tridegree, TurnStats> {
        &self.last_turn
    }

    fn vector_of(&self, t: Tridegree, p: &Polynomial) -> (F2Vector, bool) {
        let Some(space) = self.spaces.get(&t) else {
            return (F2Vector::zero(0), p.is_zero());
        };
        let mut v = F2Vector::zero(space.dim());
        let mut complete = true;
        for term in p.terms() {
            match space.position(term) {
                Some(i) => v.flip(i),
                None => complete = false,
            }
        }
        (v, complete)
    }

    /// Echelon of `[cycle | tag]` rows: boundaries carry a zero tag, class
    /// `j` carries the unit tag `e_j`. Reducing `[v | 0]` expresses a cycle
    /// in class coordinates.
    fn cycle_decomposer(&self, t: Tridegree) -> Echelon {
        let n = self.spaces.get(&t).map_or(0, F2VectorSpace::dim);
        let reps = self.classes.get(&t).map_or(&[][..], Vec::as_slice);
        let k = reps.len();
        let mut e = Echelon::new(n + k);
        if let Some(b) = self.boundaries.get(&t) {
            for row in b.rows() {
                e.insert(&row.concat(&F2Vector::zero(k)));
            }
        }
        for (j, c) in reps.iter().enumerate() {
            e.insert(&c.concat(&F2Vector::unit(k, j)));
        }
        e
    }
}

fn to_polynomial(space: &F2VectorSpace, v: &F2Vector) -> Polynomial {
    Polynomial::from_terms(v.ones().map(|i| space.basis()[i].clone()))
}

/// Matrix of `d` on the monomial bases: source `t`, target `t + shift`.
/// Terms falling outside the window are dropped.
pub fn differential_matrix(
    state: &PageState,
    spec: &DifferentialSpec,
    t: Tridegree,
) -> Result<F2Matrix, DifferentialError> {
    let p = &state.presentation;
    if !state.window.in_tridegree_box(p, t) {
        return Err(DifferentialError::OutOfWindow(t));
    }
    let target = t + spec.shift();
    let cols = state.spaces.get(&target).map_or(0, F2VectorSpace::dim);
    let rows = match state.spaces.get(&t) {
        None => Vec::new(),
        Some(space) => space
            .basis()
            .iter()
            .map(|m| state.vector_of(target, &leibniz_unchecked(p, spec, m)).0)
            .collect(),
    };
    Ok(F2Matrix::from_rows(cols, rows))
}

/// Passes from `E_r` to `E_{r+1}`, `r = spec.page()`: kernel of the outgoing `d_r` modulo the
/// image of the incoming one, at every tridegree.
pub fn turn_page(
    state: &PageState,
    spec: &DifferentialSpec,
) -> Result<PageState, DifferentialError> {
    // Pages between `state.page` and `spec.page()` have zero differential.
    if spec.page() < state.page {
        return Err(DifferentialError::PageMismatch {
            spec: spec.page(),
            state: state.page,
        });
    }
    let p = &state.presentation;
    let shift = spec.shift();
    let mut inconsistent = state.inconsistent.clone();

    // Outgoing matrices in class coordinates, keyed by source tridegree.
    let mut outgoing: BTreeMap<Tridegree, F2Matrix> = BTreeMap::new();
    for (&t, reps) in &state.classes {
        let target = t + shift;
        let k_target = state.classes.get(&target).map_or(0, Vec::len);
        let decomposer = state.cycle_decomposer(target);
        let n_target = state.spaces.get(&target).map_or(0, F2VectorSpace::dim);
        let mut rows = Vec::with_capacity(reps.len());
        for c in reps {
            let image = leibniz_sum_unchecked(p, spec, &to_polynomial(&state.spaces[&t], c));
            let (v, complete) = state.vector_of(target, &image);
            if !complete {
                inconsistent.insert(t);
            }
            if n_target == 0 {
                rows.push(F2Vector::zero(k_target));
                continue;
            }
            let r = decomposer.reduce(&v.concat(&F2Vector::zero(k_target)));
            if !r.slice(0, n_target).is_zero() {
                inconsistent.insert(t);
                inconsistent.insert(target);
            }
            rows.push(r.slice(n_target, n_target + k_target));
        }
        outgoing.insert(t, F2Matrix::from_rows(k_target, rows));
    }

    let mut boundaries = BTreeMap::new();
    let mut classes = BTreeMap::new();
    let mut last_turn = BTreeMap::new();
    for (&t, reps) in &state.classes {
        let n = state.spaces[&t].dim();
        let lift = |coeffs: &F2Vector| {
            let mut v = F2Vector::zero(n);
            for j in coeffs.ones() {
                v.add_assign(&reps[j]);
            }
            v
        };
        let out = &outgoing[&t];
        let kernel = out.kernel();
        let mut image = Echelon::new(reps.len());
        if let Some(incoming) = outgoing.get(&(t - shift)) {
            for row in incoming.rows() {
                image.insert(row);
            }
        }
        let consistent = image.rows().iter().all(|v| kernel.contains(v));
        if !consistent {
            inconsistent.insert(t);
        }

        let mut b = state.boundaries[&t].clone();
        for v in image.rows() {
            b.insert(&lift(v));
        }
        let mut survivors = Echelon::new(n);
        for k in kernel.rows() {
            survivors.insert(&b.reduce(&lift(k)));
        }
        last_turn.insert(
            t,
            TurnStats {
                dim_before: reps.len(),
                rank_in: image.rank(),
                rank_out: out.rank(),
                dim_after: survivors.rank(),
                consistent,
            },
        );
        boundaries.insert(t, b);
        classes.insert(t, survivors.rows().to_vec());
    }

    Ok(PageState {
        presentation: p.clone(),
        window: state.window.clone(),
        core: state.core.shrink(p, &spec.footprint(p)),
        page: spec.page() + 1,
        spaces: state.spaces.clone(),
        boundaries,
        classes,
        inconsistent,
        last_turn,
    })
}

/// Runs every listed differential in page order. Pages without a listed
/// differential have zero differential and are skipped.
pub fn run_to_einfty(
    presentation: &Presentation,
    specs: &[DifferentialSpec],
    window: &Window,
) -> Result<PageState, DifferentialError> {
    if specs.windows(2).any(|w| w[0].page() >= w[1].page()) {
        return Err(DifferentialError::UnsortedPages);
    }
    let mut state = PageState::e2(presentation, window);
    for spec in specs {
        if spec.page() < state.page {
            return Err(DifferentialError::PageMismatch {
                spec: spec.page(),
                state: state.page,
            });
        }
        state = turn_page(&state, spec)?;
    }
    Ok(state)
}

/// The `E_2` page of the η-localized motivic Adams–Novikov spectral
/// sequence, `F_2[τ, α1^±1, α3, α4]/α4²`, with its only differential
/// `d_3(α3) = τ·α1⁴`.
pub fn localized_motivic_anss() -> (Presentation, Vec<DifferentialSpec>) {
    let presentation = Presentation::new(vec![
        GeneratorSpec::new("tau", Tridegree::new(0, 0, -1)),
        GeneratorSpec::new("alpha1", Tridegree::new(1, 1, 1)).invertible(),
        GeneratorSpec::new("alpha3", Tridegree::new(5, 1, 3)),
        GeneratorSpec::new("alpha4", Tridegree::new(7, 1, 4)).square_zero(),
    ])
    .expect("built-in presentation is well formed");
    let tau_alpha1_4 = presentation
        .monomial(&[("tau", 1), ("alpha1", 4)])
        .expect("built-in monomial");
    let d3 = DifferentialSpec::new(&presentation, 3, &[("alpha3", tau_alpha1_4.into())])
        .expect("built-in d3 is homogeneous");
    (presentation, vec![d3])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn anss() -> (Presentation, DifferentialSpec) {
        let (p, mut ds) = localized_motivic_anss();
        (p, ds.remove(0))
    }

    fn mono(p: &Presentation, s: &str) -> Monomial {
        p.parse_monomial(s).unwrap()
    }

    #[test]
    fn builtin_instance_shape() {
        let (p, d) = anss();
        assert_eq!(p.len(), 4);
        assert_eq!(d.shift(), Tridegree::new(-1, 3, 0));
        assert_eq!(d.shift(), Tridegree::new(4, 4, 3) - Tridegree::new(5, 1, 3));
        assert!(p.generators()[3].square_zero);
        assert!(p.generators()[1].invertible);
    }

    #[test]
    fn leibniz_examples() {
        let (p, d) = anss();
        let d_a3 = leibniz_extend(&p, &d, &mono(&p, "alpha3")).unwrap();
        assert_eq!(d_a3, Polynomial::from(mono(&p, "tau*alpha1^4")));
        assert!(leibniz_extend(&p, &d, &mono(&p, "alpha3^2"))
            .unwrap()
            .is_zero());
        // τ²α1⁻³α3α4: only the α3 slot has odd exponent and nonzero image,
        // giving τα1⁴ · τ²α1⁻³α4 = τ³α1α4.
        let m = mono(&p, "tau^2*alpha1^-3*alpha3*alpha4");
        assert_eq!(
            leibniz_extend(&p, &d, &m).unwrap(),
            Polynomial::from(mono(&p, "tau^3*alpha1*alpha4"))
        );
    }

    #[test]
    fn negative_odd_exponents_differentiate() {
        let p = Presentation::new(vec![
            GeneratorSpec::new("x", Tridegree::new(1, 0, 0)).invertible(),
            GeneratorSpec::new("y", Tridegree::new(0, 2, 0)),
        ])
        .unwrap();
        let dx = Polynomial::from(p.monomial(&[("x", 1), ("y", 1)]).unwrap());
        let d = DifferentialSpec::with_shift(&p, 2, Tridegree::new(0, 2, 0), &[("x", dx)]).unwrap();
        // d(x⁻¹) = x⁻² dx = x⁻¹y
        let got = leibniz_extend(&p, &d, &p.monomial(&[("x", -1)]).unwrap()).unwrap();
        assert_eq!(
            got,
            Polynomial::from(p.monomial(&[("x", -1), ("y", 1)]).unwrap())
        );
    }

    #[test]
    fn spec_rejects_inhomogeneous_image() {
        let (p, _) = anss();
        let bad = Polynomial::from(mono(&p, "alpha1^4"));
        let err = DifferentialSpec::new(&p, 3, &[("alpha3", bad)]).unwrap_err();
        assert!(matches!(err, DifferentialError::DegreeMismatch { .. }));
        assert!(matches!(
            DifferentialSpec::new(&p, 1, &[]),
            Err(DifferentialError::BadPage(1))
        ));
        assert!(matches!(
            DifferentialSpec::new(&p, 3, &[("beta", Polynomial::zero())]),
            Err(DifferentialError::Algebra(AlgebraError::UnknownGenerator(
                _
            )))
        ));
    }

    fn small_state() -> PageState {
        let (p, _) = anss();
        let w = Window::parse(&p, "tau=0..2,alpha1=-8..10,alpha3=0..2").unwrap();
        PageState::e2(&p, &w)
    }

    #[test]
    fn differential_matrices() {
        let (_, d) = anss();
        let s = small_state();
        let m = differential_matrix(&s, &d, Tridegree::new(5, 1, 3)).unwrap();
        assert_eq!((m.num_rows(), m.num_cols()), (1, 1));
        assert!(m.get(0, 0));

        let m = differential_matrix(&s, &d, Tridegree::new(4, 4, 4)).unwrap();
        assert_eq!(m.num_rows(), 1);
        assert!(m.is_zero());

        // (2,1,0) is inside the tridegree box but holds no monomial.
        let m = differential_matrix(&s, &d, Tridegree::new(2, 1, 0)).unwrap();
        assert_eq!(m.num_rows(), 0);

        assert!(matches!(
            differential_matrix(&s, &d, Tridegree::new(500, 1, 3)),
            Err(DifferentialError::OutOfWindow(_))
        ));
    }

    #[test]
    fn page_turn_kills_and_keeps() {
        let (p, d) = anss();
        let s = small_state();
        let next = turn_page(&s, &d).unwrap();
        assert_eq!(next.page(), 4);
        let t = Tridegree::new(4, 4, 3);
        assert_eq!(next.validity(t), Validity::Valid);
        assert!(next.classes(t).is_empty());
        let t = Tridegree::new(4, 4, 4);
        assert_eq!(
            next.classes(t),
            vec![Polynomial::from(mono(&p, "alpha1^4"))]
        );
        // α1² has zero differential in and out.
        let t = Tridegree::new(2, 2, 2);
        assert_eq!(next.classes(t), s.classes(t));
        assert!(matches!(
            turn_page(&next, &d),
            Err(DifferentialError::PageMismatch { .. })
        ));
    }

    #[test]
    fn euler_characteristic_on_core() {
        let (p, specs) = localized_motivic_anss();
        let w = Window::parse(&p, "tau=0..4,alpha1=-8..8,alpha3=0..3").unwrap();
        let e = run_to_einfty(&p, &specs, &w).unwrap();
        for t in e.valid_tridegrees() {
            let st = e.last_turn()[&t];
            assert!(st.consistent);
            assert_eq!(
                st.dim_after,
                st.dim_before - st.rank_in - st.rank_out,
                "{t}"
            );
        }
    }

    #[test]
    fn no_differentials_is_e2() {
        let (p, _) = anss();
        let w = Window::parse(&p, "tau=0..1,alpha1=-2..2,alpha3=0..1").unwrap();
        let e = run_to_einfty(&p, &[], &w).unwrap();
        let e2 = PageState::e2(&p, &w);
        assert_eq!(e.page(), 2);
        for t in e2.tridegrees() {
            assert_eq!(e.classes(t), e2.classes(t));
            assert_eq!(e.validity(t), Validity::Valid);
        }
    }

    #[test]
    fn unsorted_pages_rejected() {
        let (p, specs) = localized_motivic_anss();
        let w = Window::parse(&p, "tau=0..1,alpha1=-2..2,alpha3=0..1").unwrap();
        let twice = vec![specs[0].clone(), specs[0].clone()];
        assert!(matches!(
            run_to_einfty(&p, &twice, &w),
            Err(DifferentialError::UnsortedPages)
        ));
    }

    #[test]
    fn later_pages_use_classes_of_the_previous_page() {
        // x in (1,0), y in (0,2), z in (-1,4): d2 x = y kills y at E3, so a
        // d3 hitting y must act as zero on E3. Shift conventions are custom.
        let p = Presentation::new(vec![
            GeneratorSpec::new("x", Tridegree::new(1, 0, 0)).square_zero(),
            GeneratorSpec::new("y", Tridegree::new(0, 2, 0)).square_zero(),
            GeneratorSpec::new("z", Tridegree::new(2, -1, 0)).square_zero(),
        ])
        .unwrap();
        let y = Polynomial::from(p.generator("y").unwrap());
        let d2 = DifferentialSpec::with_shift(&p, 2, Tridegree::new(-1, 2, 0), &[("x", y.clone())])
            .unwrap();
        let d3 =
            DifferentialSpec::with_shift(&p, 3, Tridegree::new(-2, 3, 0), &[("z", y)]).unwrap();
        let w = Window::parse(&p, "").unwrap();
        let e = run_to_einfty(&p, &[d2, d3], &w).unwrap();
        assert_eq!(e.page(), 4);
        assert!(e.classes(Tridegree::new(1, 0, 0)).is_empty());
        assert!(e.classes(Tridegree::new(0, 2, 0)).is_empty());
        assert_eq!(e.classes(Tridegree::new(2, -1, 0)).len(), 1);
        assert!(e.last_turn().values().all(|s| s.consistent));
    }
}
