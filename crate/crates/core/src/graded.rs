//! Finite-rank free graded modules with labeled bases, homogeneous
//! elements, and degree-homogeneous linear maps stored sparsely.
//!
//! Grading is homological (lower): the suspension satisfies
//! `(Π M)_n = M_{n-1}`, so the structural map `s: M -> ΠM` has degree `+1`.
//! Basis labels are opaque strings; degree membership is explicit metadata
//! and looking up an unknown label is an error, never a silent zero.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{RingSpec, Scalar};

/// Finite-rank free graded module: an ordered basis per degree.
#[derive(Debug, Clone)]
pub struct GradedModule {
    degrees: BTreeMap<i64, Vec<String>>,
    index: HashMap<String, (i64, usize)>,
}

impl PartialEq for GradedModule {
    fn eq(&self, other: &Self) -> bool {
        self.degrees == other.degrees
    }
}
impl Eq for GradedModule {}

impl GradedModule {
    /// The zero module.
    pub fn zero() -> GradedModule {
        GradedModule { degrees: BTreeMap::new(), index: HashMap::new() }
    }

    pub fn new(degrees: BTreeMap<i64, Vec<String>>) -> Result<GradedModule> {
        let mut index = HashMap::new();
        let mut cleaned: BTreeMap<i64, Vec<String>> = BTreeMap::new();
        for (&d, labels) in &degrees {
            if labels.is_empty() {
                continue;
            }
            for (i, l) in labels.iter().enumerate() {
                if index.insert(l.clone(), (d, i)).is_some() {
                    return Err(Error::DuplicateLabel(l.clone()));
                }
            }
            cleaned.insert(d, labels.clone());
        }
        Ok(GradedModule { degrees: cleaned, index })
    }

    /// Convenience constructor from `(label, degree)` pairs.
    pub fn from_labels(labels: &[(&str, i64)]) -> Result<GradedModule> {
        let mut degrees: BTreeMap<i64, Vec<String>> = BTreeMap::new();
        for (l, d) in labels {
            degrees.entry(*d).or_default().push((*l).to_string());
        }
        GradedModule::new(degrees)
    }

    /// Rank-one module `k`, basis `unit_label` in degree 0.
    pub fn unit_module(unit_label: &str) -> GradedModule {
        GradedModule::from_labels(&[(unit_label, 0)]).expect("single label")
    }

    pub fn degrees(&self) -> &BTreeMap<i64, Vec<String>> {
        &self.degrees
    }

    pub fn degree_of(&self, label: &str) -> Result<i64> {
        self.index
            .get(label)
            .map(|&(d, _)| d)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn has_label(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }

    pub fn rank(&self) -> usize {
        self.index.len()
    }

    pub fn basis_at(&self, degree: i64) -> &[String] {
        self.degrees.get(&degree).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// All labels in canonical order (by degree, then basis position).
    pub fn labels(&self) -> impl Iterator<Item = &String> {
        self.degrees.values().flatten()
    }

    pub fn support(&self) -> Vec<i64> {
        self.degrees.keys().copied().collect()
    }

    /// `Π^s M`: same labels, degrees shifted up by `s`.
    pub fn suspended(&self, s: i64) -> GradedModule {
        let degrees = self.degrees.iter().map(|(&d, v)| (d + s, v.clone())).collect();
        GradedModule::new(degrees).expect("labels unchanged")
    }

    pub fn is_label_subset_of(&self, other: &GradedModule) -> bool {
        self.index.iter().all(|(l, &(d, _))| other.index.get(l) == Some(&(d, other.index[l].1)) || other.degree_of(l) == Ok(d))
    }

    /// Removes one label, keeping everything else in place.
    pub fn without_label(&self, label: &str) -> Result<GradedModule> {
        if !self.has_label(label) {
            return Err(Error::UnknownLabel(label.to_string()));
        }
        let degrees = self
            .degrees
            .iter()
            .map(|(&d, v)| (d, v.iter().filter(|l| *l != label).cloned().collect()))
            .collect();
        GradedModule::new(degrees)
    }
}

/// Marks `Π^shift base` without materializing it; `resolved()` does.
/// `(Π^s M)_n` has the same basis labels as `M_{n-s}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedModule {
    pub base: GradedModule,
    pub shift: i64,
}

impl ShiftedModule {
    pub fn resolved(&self) -> GradedModule {
        self.base.suspended(self.shift)
    }
}

/// `suspend(M, s) = Π^s M`.
pub fn suspend(module: &GradedModule, shift: i64) -> ShiftedModule {
    ShiftedModule { base: module.clone(), shift }
}

/// The structural map `s: M -> ΠM` of degree `+1` (identity on labels).
pub fn suspension_map(module: &GradedModule, ring: &RingSpec) -> GradedMap {
    let target = module.suspended(1);
    let images = module
        .labels()
        .map(|l| {
            let d = module.degree_of(l).expect("own label") + 1;
            (l.clone(), GradedElement::single(l.clone(), ring.one(), d))
        })
        .collect();
    GradedMap { source: module.clone(), target, degree: 1, images }
}

/// `s^{-1}: ΠM -> M` of degree `-1`.
pub fn desuspension_map(module: &GradedModule, ring: &RingSpec) -> GradedMap {
    let source = module.suspended(1);
    let images = module
        .labels()
        .map(|l| {
            let d = module.degree_of(l).expect("own label");
            (l.clone(), GradedElement::single(l.clone(), ring.one(), d))
        })
        .collect();
    GradedMap { source, target: module.clone(), degree: -1, images }
}

/// `(s^{⊗n})^{-1} = (-1)^{n(n-1)/2} (s^{-1})^{⊗n}`: the exponent of the
/// global sign relating the two inverses.
pub fn iterated_suspension_inverse_sign_exponent(n: usize) -> i64 {
    (n as i64) * (n as i64 - 1) / 2
}

/// Homogeneous element in canonical sparse form: no zero coefficients, all
/// labels in one degree (`degree` is `None` only for the zero element).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedElement {
    terms: BTreeMap<String, Scalar>,
    degree: Option<i64>,
}

impl GradedElement {
    pub fn zero() -> GradedElement {
        GradedElement::default()
    }

    pub fn single(label: String, coeff: Scalar, degree: i64) -> GradedElement {
        let mut e = GradedElement::zero();
        e.add_term(label, coeff, degree).expect("fresh element");
        e
    }

    /// Basis element `1·label` of `module`.
    pub fn basis(module: &GradedModule, label: &str, ring: &RingSpec) -> Result<GradedElement> {
        let d = module.degree_of(label)?;
        Ok(GradedElement::single(label.to_string(), ring.one(), d))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<i64> {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&String, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, label: &str) -> Option<&Scalar> {
        self.terms.get(label)
    }

    /// Adds `coeff·label` in the given degree, enforcing homogeneity and
    /// dropping the term if the sum cancels.
    pub fn add_term(&mut self, label: String, coeff: Scalar, degree: i64) -> Result<()> {
        if coeff.is_zero() {
            return Ok(());
        }
        match self.degree {
            Some(d) if d != degree => return Err(Error::NotHomogeneous(d, degree)),
            _ => self.degree = Some(degree),
        }
        let updated = match self.terms.get(&label) {
            Some(existing) => existing.checked_add(&coeff)?,
            None => coeff,
        };
        if updated.is_zero() {
            self.terms.remove(&label);
            if self.terms.is_empty() {
                self.degree = None;
            }
        } else {
            self.terms.insert(label, updated);
        }
        Ok(())
    }

    pub fn add(&self, other: &GradedElement) -> Result<GradedElement> {
        let mut out = self.clone();
        let deg = other.degree;
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone(), deg.expect("nonzero element has degree"))?;
        }
        Ok(out)
    }

    pub fn scaled(&self, factor: &Scalar) -> Result<GradedElement> {
        let mut out = GradedElement::zero();
        if let Some(d) = self.degree {
            for (l, c) in &self.terms {
                out.add_term(l.clone(), c.checked_mul(factor)?, d)?;
            }
        }
        Ok(out)
    }

    pub fn negated(&self) -> GradedElement {
        GradedElement {
            terms: self.terms.iter().map(|(l, c)| (l.clone(), c.negated())).collect(),
            degree: self.degree,
        }
    }

    /// Multiplies by `(-1)^exponent`.
    pub fn signed(self, exponent: i64) -> GradedElement {
        if exponent.rem_euclid(2) == 0 {
            self
        } else {
            self.negated()
        }
    }

    pub fn sub(&self, other: &GradedElement) -> Result<GradedElement> {
        self.add(&other.negated())
    }

    /// Checks every label belongs to `module` at this element's degree
    /// shifted by `shift` (labels are interpreted in `Π^shift module`).
    pub fn validate_in(&self, module: &GradedModule, shift: i64) -> Result<()> {
        if let Some(deg) = self.degree {
            for l in self.terms.keys() {
                let d = module.degree_of(l)?;
                if d + shift != deg {
                    return Err(Error::DegreeMismatch { expected: deg, got: d + shift });
                }
            }
        }
        Ok(())
    }

    /// Splits into (part supported on `labels`, rest).
    pub fn split_by_labels(&self, keep: &dyn Fn(&str) -> bool) -> (GradedElement, GradedElement) {
        let mut a = GradedElement::zero();
        let mut b = GradedElement::zero();
        if let Some(d) = self.degree {
            for (l, c) in &self.terms {
                let dst = if keep(l) { &mut a } else { &mut b };
                dst.add_term(l.clone(), c.clone(), d).expect("same degree");
            }
        }
        (a, b)
    }
}

impl fmt::Display for GradedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (l, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{l}")?;
            first = false;
        }
        Ok(())
    }
}

/// Degree-homogeneous linear map between graded modules, stored as sparse
/// columns (basis label -> image element). Blocks per source degree are
/// recovered by grouping columns; composition adds degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedMap {
    pub source: GradedModule,
    pub target: GradedModule,
    pub degree: i64,
    images: BTreeMap<String, GradedElement>,
}

impl GradedMap {
    pub fn zero(source: GradedModule, target: GradedModule, degree: i64) -> GradedMap {
        GradedMap { source, target, degree, images: BTreeMap::new() }
    }

    pub fn identity(module: &GradedModule, ring: &RingSpec) -> GradedMap {
        let images = module
            .labels()
            .map(|l| {
                let d = module.degree_of(l).expect("own label");
                (l.clone(), GradedElement::single(l.clone(), ring.one(), d))
            })
            .collect();
        GradedMap { source: module.clone(), target: module.clone(), degree: 0, images }
    }

    pub fn from_images(
        source: GradedModule,
        target: GradedModule,
        degree: i64,
        images: BTreeMap<String, GradedElement>,
    ) -> Result<GradedMap> {
        let mut cleaned = BTreeMap::new();
        for (l, img) in images {
            let sd = source.degree_of(&l)?;
            if img.is_zero() {
                continue;
            }
            img.validate_in(&target, 0)?;
            if img.degree() != Some(sd + degree) {
                return Err(Error::DegreeMismatch {
                    expected: sd + degree,
                    got: img.degree().unwrap_or(0),
                });
            }
            cleaned.insert(l, img);
        }
        Ok(GradedMap { source, target, degree, images: cleaned })
    }

    /// Entry list `(from, to, coeff)` in canonical order.
    pub fn entries(&self) -> Vec<(String, String, Scalar)> {
        let mut out = Vec::new();
        for (from, img) in &self.images {
            for (to, c) in img.terms() {
                out.push((from.clone(), to.clone(), c.clone()));
            }
        }
        out
    }

    pub fn from_entries(
        source: GradedModule,
        target: GradedModule,
        degree: i64,
        entries: &[(String, String, Scalar)],
    ) -> Result<GradedMap> {
        let mut images: BTreeMap<String, GradedElement> = BTreeMap::new();
        for (from, to, c) in entries {
            let td = target.degree_of(to)?;
            images
                .entry(from.clone())
                .or_default()
                .add_term(to.clone(), c.clone(), td)?;
        }
        GradedMap::from_images(source, target, degree, images)
    }

    pub fn is_zero(&self) -> bool {
        self.images.is_empty()
    }

    pub fn image_of(&self, label: &str) -> Result<GradedElement> {
        self.source.degree_of(label)?;
        Ok(self.images.get(label).cloned().unwrap_or_default())
    }

    pub fn apply(&self, elt: &GradedElement) -> Result<GradedElement> {
        let mut out = GradedElement::zero();
        if let Some(d) = elt.degree() {
            for (l, c) in elt.terms() {
                let img = self.image_of(l)?;
                if !img.is_zero() {
                    out = out.add(&img.scaled(c)?)?;
                }
            }
            let _ = d;
        }
        Ok(out)
    }

    /// `self ∘ first`; degrees add.
    pub fn compose(&self, first: &GradedMap) -> Result<GradedMap> {
        if first.target != self.source {
            return Err(Error::ShapeMismatch(
                "composition requires matching middle module".into(),
            ));
        }
        let mut images = BTreeMap::new();
        for l in first.source.labels() {
            let img = self.apply(&first.image_of(l)?)?;
            if !img.is_zero() {
                images.insert(l.clone(), img);
            }
        }
        GradedMap::from_images(
            first.source.clone(),
            self.target.clone(),
            self.degree + first.degree,
            images,
        )
    }

    pub fn add(&self, other: &GradedMap) -> Result<GradedMap> {
        if self.source != other.source || self.target != other.target || self.degree != other.degree
        {
            return Err(Error::ShapeMismatch("map addition requires equal shapes".into()));
        }
        let mut images = self.images.clone();
        for (l, img) in &other.images {
            let merged = match images.get(l) {
                Some(e) => e.add(img)?,
                None => img.clone(),
            };
            if merged.is_zero() {
                images.remove(l);
            } else {
                images.insert(l.clone(), merged);
            }
        }
        Ok(GradedMap { source: self.source.clone(), target: self.target.clone(), degree: self.degree, images })
    }

    pub fn scaled(&self, factor: &Scalar) -> Result<GradedMap> {
        let mut images = BTreeMap::new();
        for (l, img) in &self.images {
            let s = img.scaled(factor)?;
            if !s.is_zero() {
                images.insert(l.clone(), s);
            }
        }
        Ok(GradedMap { source: self.source.clone(), target: self.target.clone(), degree: self.degree, images })
    }

    pub fn negated(&self) -> GradedMap {
        GradedMap {
            source: self.source.clone(),
            target: self.target.clone(),
            degree: self.degree,
            images: self.images.iter().map(|(l, e)| (l.clone(), e.negated())).collect(),
        }
    }

    pub fn sub(&self, other: &GradedMap) -> Result<GradedMap> {
        self.add(&other.negated())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> RingSpec {
        RingSpec::Integers
    }

    fn module_rank3() -> GradedModule {
        GradedModule::from_labels(&[("a", 0), ("b", 1), ("c", 1)]).unwrap()
    }

    #[test]
    fn suspend_shifts_support() {
        // {e} in degree 1, shift 1 -> {e} in degree 2
        let m = GradedModule::from_labels(&[("e", 1)]).unwrap();
        let s = suspend(&m, 1).resolved();
        assert_eq!(s.degree_of("e").unwrap(), 2);
        // shift 0 -> identical support
        assert_eq!(suspend(&m, 0).resolved(), m);
        // shift -1 then +1 -> original support
        assert_eq!(suspend(&suspend(&m, -1).resolved(), 1).resolved(), m);
    }

    #[test]
    fn iterated_inverse_sign() {
        let signs: Vec<i64> = (0..6).map(iterated_suspension_inverse_sign_exponent).collect();
        assert_eq!(signs, vec![0, 0, 1, 3, 6, 10]);
    }

    #[test]
    fn unknown_label_is_an_error() {
        let m = module_rank3();
        assert!(matches!(m.degree_of("zz"), Err(Error::UnknownLabel(_))));
        let f = GradedMap::zero(m.clone(), m, 0);
        let mut e = GradedElement::zero();
        e.add_term("zz".into(), ring().one(), 0).unwrap();
        assert!(f.apply(&e).is_err());
    }

    #[test]
    fn duplicate_labels_rejected() {
        assert!(matches!(
            GradedModule::from_labels(&[("a", 0), ("a", 1)]),
            Err(Error::DuplicateLabel(_))
        ));
    }

    #[test]
    fn element_canonical_form() {
        let mut e = GradedElement::zero();
        e.add_term("b".into(), ring().from_i64(2), 1).unwrap();
        e.add_term("b".into(), ring().from_i64(-2), 1).unwrap();
        assert!(e.is_zero());
        assert_eq!(e.degree(), None);
        // homogeneity is enforced
        let mut e = GradedElement::zero();
        e.add_term("a".into(), ring().one(), 0).unwrap();
        assert!(e.add_term("b".into(), ring().one(), 1).is_err());
    }

    #[test]
    fn composition_adds_degrees_and_is_associative() {
        // exhaustive associativity on a rank-3 module with random-ish small maps
        let m = module_rank3();
        let f = GradedMap::from_entries(
            m.clone(),
            m.clone(),
            1,
            &[
                ("a".into(), "b".into(), ring().from_i64(2)),
                ("a".into(), "c".into(), ring().from_i64(-1)),
            ],
        )
        .unwrap();
        let g = GradedMap::from_entries(
            m.clone(),
            m.clone(),
            -1,
            &[
                ("b".into(), "a".into(), ring().from_i64(3)),
                ("c".into(), "a".into(), ring().from_i64(5)),
            ],
        )
        .unwrap();
        let h = GradedMap::identity(&m, &ring());
        let gf = g.compose(&f).unwrap();
        assert_eq!(gf.degree, 0);
        let left = h.compose(&gf).unwrap();
        let right = h.compose(&g).unwrap().compose(&f).unwrap();
        assert_eq!(left, right);
        for l in m.labels() {
            let e = GradedElement::basis(&m, l, &ring()).unwrap();
            assert_eq!(
                gf.apply(&e).unwrap(),
                g.apply(&f.apply(&e).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn suspension_maps_have_unit_degrees() {
        let m = module_rank3();
        let s = suspension_map(&m, &ring());
        let s_inv = desuspension_map(&m, &ring());
        assert_eq!(s.degree, 1);
        assert_eq!(s_inv.degree, -1);
        let round = s_inv.compose(&s).unwrap();
        assert_eq!(round, GradedMap::identity(&m, &ring()));
    }

    #[test]
    fn zero_module_and_map_are_first_class() {
        let z = GradedModule::zero();
        assert_eq!(z.rank(), 0);
        let f = GradedMap::zero(z.clone(), z.clone(), -1);
        assert!(f.apply(&GradedElement::zero()).unwrap().is_zero());
        let g = f.compose(&GradedMap::zero(z.clone(), z, 2)).unwrap();
        assert_eq!(g.degree, 1);
    }
}
