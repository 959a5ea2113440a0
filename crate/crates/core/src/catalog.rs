//! Named curves on the supported surfaces, each carrying a based word, its
//! homology class and both twist automorphisms.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::homology::{transvection, HomologyClass, IntMatrix};
use crate::mcg::{MappingClassWord, Twist};
use crate::model::{ModelError, SurfaceModel};
use crate::word::{Budget, FreeAutomorphism, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("invalid surface: genus {g}, {n} boundary components")]
    InvalidSurface { g: usize, n: usize },
    #[error("no curve catalog for genus {g} with {n} boundary components")]
    Unsupported { g: usize, n: usize },
    #[error("unknown curve `{0}`")]
    UnknownCurve(String),
    #[error("curve `{name}`: {source}")]
    Model { name: String, source: ModelError },
    #[error("curve `{0}` is abstract")]
    Abstract(String),
    #[error("witness relation `{0}` failed")]
    Witness(String),
    #[error("curve `{0}` is flagged nonseparating but its class lies in the boundary span")]
    Integrity(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SurfaceSpec {
    pub g: usize,
    pub n: usize,
}

impl SurfaceSpec {
    pub fn pi1_rank(&self) -> usize {
        2 * self.g + self.n - 1
    }

    pub fn h1_rank(&self) -> usize {
        self.pi1_rank()
    }

    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.g as i64 - self.n as i64
    }
}

pub fn build_surface(g: usize, n: usize) -> Result<SurfaceSpec, CatalogError> {
    if n == 0 || (g == 0 && n == 1) {
        return Err(CatalogError::InvalidSurface { g, n });
    }
    Ok(SurfaceSpec { g, n })
}

#[derive(Debug, Clone)]
pub struct Curve {
    pub name: String,
    /// Based representative; `None` for abstract curves.
    pub word: Option<Word>,
    pub class: Option<HomologyClass>,
    pub nonseparating: bool,
    /// Parallel to a boundary component of the surface.
    pub boundary: bool,
    pub twist: Option<FreeAutomorphism>,
    pub twist_inv: Option<FreeAutomorphism>,
    /// `(base, u)` when the curve is defined as `u(base)`.
    pub origin: Option<(String, MappingClassWord)>,
}

impl Curve {
    pub fn is_abstract(&self) -> bool {
        self.word.is_none()
    }
}

#[derive(Debug)]
pub struct CurveCatalog {
    spec: SurfaceSpec,
    model: SurfaceModel,
    curves: BTreeMap<String, Curve>,
    order: Vec<String>,
    chain_len: usize,
    chain_boundaries: BTreeMap<usize, (String, String)>,
    phi_x: Option<String>,
}

impl CurveCatalog {
    pub fn spec(&self) -> SurfaceSpec {
        self.spec
    }

    pub fn model(&self) -> &SurfaceModel {
        &self.model
    }

    pub fn homology_dim(&self) -> usize {
        self.model.loop_rank()
    }

    pub fn curve(&self, name: &str) -> Result<&Curve, CatalogError> {
        self.curves
            .get(name)
            .ok_or_else(|| CatalogError::UnknownCurve(name.to_string()))
    }

    pub fn contains(&self, name: &str) -> bool {
        self.curves.contains_key(name)
    }

    /// Curves in construction order.
    pub fn curves(&self) -> impl Iterator<Item = &Curve> {
        self.order.iter().map(move |n| &self.curves[n])
    }

    /// Number of curves `c1, c2, …` forming the main chain.
    pub fn chain_len(&self) -> usize {
        self.chain_len
    }

    /// The two boundary curves of a neighbourhood of `c1 ∪ … ∪ c{2h+1}`,
    /// when both are in the catalog.
    pub fn chain_boundary(&self, h: usize) -> Option<(&str, &str)> {
        self.chain_boundaries
            .get(&h)
            .map(|(a, b)| (a.as_str(), b.as_str()))
    }

    pub fn chain_boundary_orders(&self) -> Vec<usize> {
        self.chain_boundaries.keys().copied().collect()
    }

    /// Boundary-parallel curves, in catalog order.
    pub fn boundary_curves(&self) -> Vec<&str> {
        self.curves()
            .filter(|c| c.boundary)
            .map(|c| c.name.as_str())
            .collect()
    }

    /// Default curve meeting `c3` and `d` once.
    pub fn phi_x(&self) -> Option<&str> {
        self.phi_x.as_deref()
    }

    pub fn transvection(&self, name: &str, sign: i8) -> Result<IntMatrix, CatalogError> {
        let c = self.curve(name)?;
        let class = c
            .class
            .as_ref()
            .ok_or_else(|| CatalogError::Abstract(name.to_string()))?;
        Ok(transvection(class, self.spec.g, sign))
    }

    /// The nonseparating flag, cross-checked against the homology witness.
    pub fn is_nonseparating(&self, name: &str) -> Result<bool, CatalogError> {
        let c = self.curve(name)?;
        if c.nonseparating {
            if let Some(class) = &c.class {
                if class.in_boundary_span(self.spec.g) {
                    return Err(CatalogError::Integrity(name.to_string()));
                }
            }
        }
        Ok(c.nonseparating)
    }

    /// Replaces a conjugated twist by the catalog curve it names, if any.
    pub fn named(&self, t: &Twist) -> Twist {
        if t.conjugator.is_empty() {
            return t.clone();
        }
        for c in self.curves.values() {
            if let Some((base, u)) = &c.origin {
                if *base == t.curve && *u == t.conjugator {
                    return Twist::new(c.name.clone(), t.sign);
                }
            }
        }
        t.clone()
    }
}

struct Builder {
    spec: SurfaceSpec,
    model: SurfaceModel,
    curves: BTreeMap<String, Curve>,
    order: Vec<String>,
}

impl Builder {
    fn new(spec: SurfaceSpec) -> Result<Builder, CatalogError> {
        let model = SurfaceModel::new(spec.g, spec.n).map_err(|e| CatalogError::Model {
            name: "surface".into(),
            source: e,
        })?;
        Ok(Builder {
            spec,
            model,
            curves: BTreeMap::new(),
            order: Vec::new(),
        })
    }

    fn parse(&self, text: &str) -> Word {
        self.model
            .parse(text)
            .expect("catalog word uses known generators")
    }

    fn insert(&mut self, c: Curve) {
        assert!(
            !self.curves.contains_key(&c.name),
            "duplicate curve {}",
            c.name
        );
        self.order.push(c.name.clone());
        self.curves.insert(c.name.clone(), c);
    }

    fn add_word(
        &mut self,
        name: &str,
        word: Word,
        nonseparating: bool,
        origin: Option<(String, MappingClassWord)>,
    ) -> Result<(), CatalogError> {
        let err = |e| CatalogError::Model {
            name: name.to_string(),
            source: e,
        };
        let twist = self.model.twist(&word, true).map_err(err)?;
        let twist_inv = self.model.twist(&word, false).map_err(err)?;
        let class = HomologyClass::new(
            word.abelianize(self.model.rank())[..self.model.loop_rank()].to_vec(),
        );
        self.insert(Curve {
            name: name.to_string(),
            word: Some(word),
            class: Some(class),
            nonseparating,
            boundary: false,
            twist: Some(twist),
            twist_inv: Some(twist_inv),
            origin,
        });
        Ok(())
    }

    fn add(&mut self, name: &str, text: &str, nonseparating: bool) -> Result<(), CatalogError> {
        let w = self.parse(text);
        self.add_word(name, w, nonseparating, None)
    }

    fn add_boundary(&mut self, name: &str, word: Word) -> Result<(), CatalogError> {
        self.add_word(name, word, false, None)?;
        self.curves.get_mut(name).expect("just inserted").boundary = true;
        Ok(())
    }

    /// Adds `u(base)` where `u` is a product of plain catalog twists.
    fn add_image(&mut self, name: &str, base: &str, u: &str) -> Result<(), CatalogError> {
        let u = MappingClassWord::parse(u);
        let b = &self.curves[base];
        let mut w = b.word.clone().expect("concrete base");
        let nonseparating = b.nonseparating;
        for t in u.twists().iter().rev() {
            let c = &self.curves[&t.curve];
            let a = if t.sign > 0 {
                c.twist.as_ref()
            } else {
                c.twist_inv.as_ref()
            };
            w = a
                .expect("concrete twist")
                .apply(&w, Budget::default())
                .expect("catalog words are short");
        }
        self.add_word(name, w, nonseparating, Some((base.to_string(), u)))
    }

    fn add_abstract(&mut self, name: &str) {
        self.insert(Curve {
            name: name.to_string(),
            word: None,
            class: None,
            nonseparating: true,
            boundary: false,
            twist: None,
            twist_inv: None,
            origin: None,
        });
    }

    fn boundary_word(&self) -> Word {
        self.model.boundary_word().clone()
    }

    fn finish(
        self,
        chain_len: usize,
        chain_boundaries: &[(usize, &str, &str)],
        phi_x: Option<&str>,
    ) -> CurveCatalog {
        CurveCatalog {
            spec: self.spec,
            model: self.model,
            curves: self.curves,
            order: self.order,
            chain_len,
            chain_boundaries: chain_boundaries
                .iter()
                .map(|(h, a, b)| (*h, (a.to_string(), b.to_string())))
                .collect(),
            phi_x: phi_x.map(str::to_string),
        }
    }
}

fn commutator(a: usize, b: usize) -> String {
    format!("x{a} x{b} x{a}^-1 x{b}^-1")
}

/// Chain `c1, …` on the two-boundary model of genus `h`, as words in that
/// model. Length `2h + 1`; the last curve separates the holes from the rest.
fn two_boundary_chain(h: usize) -> Vec<String> {
    let mut out = vec!["x1".to_string()];
    for i in 1..=h {
        out.push(format!("x{}", 2 * i));
        if i == h {
            out.push(format!("x{} x{}^-1 y1^-1 x{}", 2 * h - 1, 2 * h, 2 * h));
        } else if i == 1 {
            out.push("x1 x3".into());
        } else {
            out.push(format!(
                "x{} x{}^-1 x{}^-1 x{}",
                2 * i - 1,
                2 * i,
                2 * i + 1,
                2 * i
            ));
        }
    }
    out
}

/// Chain `c1, …, c{2g}` on the one-boundary model.
fn one_boundary_chain(g: usize) -> Vec<String> {
    let mut out = vec!["x1".to_string(), "x2".to_string()];
    for i in 1..g {
        if i == 1 {
            out.push("x1 x3".into());
        } else {
            out.push(format!(
                "x{} x{}^-1 x{}^-1 x{}",
                2 * i - 1,
                2 * i,
                2 * i + 1,
                2 * i
            ));
        }
        out.push(format!("x{}", 2 * i + 2));
    }
    out
}

/// Rewrites a word over a source alphabet through `map`, one generator at
/// a time, into the target model.
fn substitute(target: &SurfaceModel, text: &str, map: &dyn Fn(&str) -> String) -> Word {
    let mut out = Word::identity();
    for tok in text.split_whitespace() {
        let (name, inverse) = match tok.strip_suffix("^-1") {
            Some(n) => (n, true),
            None => (tok, false),
        };
        let img = target.parse(&map(name)).expect("substitution image parses");
        out = out.mul(&if inverse { img.inverse() } else { img });
    }
    out
}

fn genus_one_alpha(j: usize) -> String {
    let mut s = "x1".to_string();
    for i in 1..j {
        s += &format!(" y{i}");
    }
    s
}

fn build_one_boundary(spec: SurfaceSpec) -> Result<CurveCatalog, CatalogError> {
    let mut b = Builder::new(spec)?;
    let chain = one_boundary_chain(spec.g);
    for (i, w) in chain.iter().enumerate() {
        b.add(&format!("c{}", i + 1), w, true)?;
    }
    let bw = b.boundary_word();
    b.add_boundary("delta1", bw)?;
    Ok(b.finish(chain.len(), &[], None))
}

fn build_two_boundary(spec: SurfaceSpec) -> Result<CurveCatalog, CatalogError> {
    let g = spec.g;
    let mut b = Builder::new(spec)?;
    let chain = two_boundary_chain(g);
    for (i, w) in chain.iter().enumerate() {
        b.add(&format!("c{}", i + 1), w, true)?;
    }
    let bw = b.boundary_word();
    b.add_boundary("delta1", bw)?;
    let y = b.parse("y1");
    b.add_boundary("delta2", y)?;
    let mut bounds = vec![(g, "delta1", "delta2")];
    if g >= 2 {
        b.add("d", "x3", true)?;
        b.add("e", &format!("{} x3", commutator(1, 2)), true)?;
        bounds.push((1, "d", "e"));
    }
    if g >= 3 {
        b.add("b", "x5", true)?;
        b.add(
            "c",
            &format!("{} {} x5", commutator(1, 2), commutator(3, 4)),
            true,
        )?;
        bounds.push((2, "b", "c"));
    }
    bounds.sort();
    Ok(b.finish(chain.len(), &bounds, if g >= 2 { Some("c4") } else { None }))
}

/// Torus with `n - 1` holes: `α_j = x1 y1 ⋯ y{j-1}`, `β = x2`, `δ_j` the hole
/// between `α_{j-1}` and `α_j`.
fn add_genus_one_base(b: &mut Builder, n: usize) -> Result<(), CatalogError> {
    for j in 1..=n {
        b.add(&format!("alpha{j}"), &genus_one_alpha(j), true)?;
    }
    b.add("beta", "x2", true)?;
    let bw = b.boundary_word();
    b.add_boundary("delta1", bw)?;
    for j in 2..=n {
        let w = b.parse(&format!("y{}", j - 1));
        b.add_boundary(&format!("delta{j}"), w)?;
    }
    Ok(())
}

fn build_one_five(spec: SurfaceSpec) -> Result<CurveCatalog, CatalogError> {
    let mut b = Builder::new(spec)?;
    add_genus_one_base(&mut b, 5)?;
    b.add("gamma", "y3 y4", false)?;
    b.add("sigma", "x1 y1 y2 y4", true)?;
    b.add_image("beta3", "beta", "alpha3^-1")?;
    Ok(b.finish(0, &[], None))
}

fn build_one_six(spec: SurfaceSpec) -> Result<CurveCatalog, CatalogError> {
    let mut b = Builder::new(spec)?;
    add_genus_one_base(&mut b, 6)?;
    b.add("gamma'", "y4 y5", false)?;
    b.add("sigma", "x1 y1 y2 y4 y5", true)?;
    b.add("sigma'", "x1 y1 y2 y3 y5", true)?;
    b.add_image("beta3", "beta", "alpha3^-1")?;
    b.add_image("beta6", "beta", "alpha6^-1")?;
    b.add_image("beta36", "beta", "alpha6^-1 alpha3^-1")?;
    Ok(b.finish(0, &[], None))
}

/// Genus-two surface with four boundary components, obtained from the
/// six-holed torus by gluing `δ2` to `δ3`. The surviving boundary curves
/// keep their labels `δ1, δ4, δ5, δ6`.
fn build_two_four(spec: SurfaceSpec) -> Result<CurveCatalog, CatalogError> {
    let mut b = Builder::new(spec)?;
    let glue = |name: &str| -> String {
        match name {
            "x1" => "x1".into(),
            "x2" => "x2".into(),
            "y1" => "x3".into(),
            "y2" => "x4 x3^-1 x4^-1".into(),
            y => format!("y{}", y[1..].parse::<usize>().expect("hole index") - 2),
        }
    };
    let img = |b: &Builder, text: &str| substitute(&b.model, text, &glue);
    for j in 1..=6 {
        let w = img(&b, &genus_one_alpha(j));
        b.add_word(&format!("alpha{j}"), w, true, None)?;
    }
    let w = img(&b, "x2");
    b.add_word("beta", w, true, None)?;
    let bw = b.boundary_word();
    b.add_boundary("delta1", bw)?;
    for j in 4..=6 {
        let w = b.parse(&format!("y{}", j - 3));
        b.add_boundary(&format!("delta{j}"), w)?;
    }
    let w = img(&b, "y4 y5");
    b.add_word("gamma'", w, false, None)?;
    let w = img(&b, "x1 y1 y2 y4 y5");
    b.add_word("sigma", w, true, None)?;
    let w = img(&b, "x1 y1 y2 y3 y5");
    b.add_word("sigma'", w, true, None)?;
    let w = img(&b, "y2");
    b.add_word("c1", w, true, None)?;
    b.add("c2", "x3 x3 x4", true)?;
    let w = img(&b, &genus_one_alpha(2));
    b.add_word("c3", w, true, None)?;
    let w = img(&b, "x2");
    b.add_word("c4", w, true, None)?;
    let w = img(&b, &genus_one_alpha(1));
    b.add_word("d", w, true, None)?;
    let w = img(&b, &genus_one_alpha(3));
    b.add_word("e", w, true, None)?;
    b.add_image("beta3", "beta", "alpha3^-1")?;
    b.add_image("beta6", "beta", "alpha6^-1")?;
    b.add_image("beta36", "beta", "alpha6^-1 alpha3^-1")?;
    Ok(b.finish(4, &[(1, "d", "e")], Some("beta36")))
}

/// Index shift placing the holes `δ7, δ8` first: `α5 = x1`, `α6 = x1 y1`, …
fn eight_holed_alpha(j: usize) -> String {
    genus_one_alpha((j + 3) % 8 + 1)
}

/// Hole loop index (in the eight-holed model) of `δ_j`, or
/// `None` for the outer boundary `δ6`.
fn eight_holed_delta(j: usize) -> Option<usize> {
    match j {
        6 => None,
        7 => Some(1),
        8 => Some(2),
        j => Some(j + 2),
    }
}

fn add_eight_holed(b: &mut Builder, map: &dyn Fn(&str) -> String) -> Result<(), CatalogError> {
    for j in 1..=8 {
        let w = substitute(&b.model, &eight_holed_alpha(j), map);
        b.add_word(&format!("alpha{j}"), w, true, None)?;
    }
    let w = substitute(&b.model, "x2", map);
    b.add_word("beta", w, true, None)?;
    for j in 1..=8 {
        let w = match eight_holed_delta(j) {
            None => b.boundary_word(),
            Some(k) => substitute(&b.model, &format!("y{k}"), map),
        };
        let name = format!("delta{j}");
        if j >= 7 && b.spec.n == 6 {
            b.add_word(&name, w, true, None)?;
        } else {
            b.add_boundary(&name, w)?;
        }
    }
    b.add_image("beta1", "beta", "alpha1")?;
    b.add_image("beta4", "beta", "alpha4")?;
    b.add_image("beta6", "beta", "alpha6")?;
    for j in 3..=7 {
        b.add_abstract(&format!("sigma{j}"));
    }
    Ok(())
}

fn build_one_eight(spec: SurfaceSpec) -> Result<CurveCatalog, CatalogError> {
    let mut b = Builder::new(spec)?;
    add_eight_holed(&mut b, &|n: &str| n.to_string())?;
    Ok(b.finish(0, &[], None))
}

/// Genus `g ≥ 3` with six boundary components: the eight-holed torus glued
/// along `δ7, δ8` to a genus `g - 2` piece carrying the chain `c1, …, c{2g-3}`.
fn build_six_boundary(spec: SurfaceSpec) -> Result<CurveCatalog, CatalogError> {
    let g = spec.g;
    let mut b = Builder::new(spec)?;
    let glue = move |name: &str| -> String {
        match name {
            "x1" => "x1".into(),
            "x2" => "x2".into(),
            "y1" => {
                let mut s = String::new();
                for i in 2..g {
                    s += &commutator(2 * i - 1, 2 * i);
                    s += " ";
                }
                s + &format!("x{}", 2 * g - 1)
            }
            "y2" => format!("x{b} x{a}^-1 x{b}^-1", a = 2 * g - 1, b = 2 * g),
            y => format!("y{}", y[1..].parse::<usize>().expect("hole index") - 2),
        }
    };
    add_eight_holed(&mut b, &glue)?;
    let h = g - 2;
    let inner = move |name: &str| -> String {
        match name.strip_prefix('x') {
            Some(i) => format!("x{}", i.parse::<usize>().expect("index") + 2),
            None => format!("x{}", 2 * g - 1),
        }
    };
    for (i, w) in two_boundary_chain(h).iter().enumerate() {
        let w = substitute(&b.model, w, &inner);
        b.add_word(&format!("c{}", i + 1), w, true, None)?;
    }
    b.add(&format!("c{}", 2 * g - 2), &format!("x{}", 2 * g), true)?;
    let w = b.curves["alpha6"].word.clone().expect("concrete");
    b.add_word(&format!("c{}", 2 * g - 1), w, true, None)?;
    let mut bounds = vec![(g - 1, "alpha5", "alpha7")];
    if h == 1 {
        bounds.push((1, "delta7", "delta8"));
        Ok(b.finish(2 * g - 1, &bounds, Some("c4"))
            .with_alias("d", "delta7")
            .with_alias("e", "delta8"))
    } else {
        let w = substitute(&b.model, "x3", &inner);
        b.add_word("d", w, true, None)?;
        let w = substitute(&b.model, &format!("{} x3", commutator(1, 2)), &inner);
        b.add_word("e", w, true, None)?;
        bounds.push((1, "d", "e"));
        bounds.push((h, "delta7", "delta8"));
        bounds.sort();
        Ok(b.finish(2 * g - 1, &bounds, Some("c4")))
    }
}

impl CurveCatalog {
    fn with_alias(mut self, alias: &str, target: &str) -> CurveCatalog {
        let mut c = self.curves[target].clone();
        c.name = alias.to_string();
        self.order.push(alias.to_string());
        self.curves.insert(alias.to_string(), c);
        for (a, b) in self.chain_boundaries.values_mut() {
            if a == target {
                *a = alias.to_string();
            }
            if b == target {
                *b = alias.to_string();
            }
        }
        self
    }
}

fn construct(spec: SurfaceSpec) -> Result<CurveCatalog, CatalogError> {
    let SurfaceSpec { g, n } = spec;
    match (g, n) {
        (g, 1) if g >= 1 => build_one_boundary(spec),
        (g, 2) if g >= 1 => build_two_boundary(spec),
        (2, 4) => build_two_four(spec),
        (1, 5) => build_one_five(spec),
        (1, 6) => build_one_six(spec),
        (1, 8) => build_one_eight(spec),
        (g, 6) if g >= 3 => build_six_boundary(spec),
        _ => Err(CatalogError::Unsupported { g, n }),
    }
}

fn cache() -> &'static Mutex<HashMap<SurfaceSpec, Arc<CurveCatalog>>> {
    static CACHE: OnceLock<Mutex<HashMap<SurfaceSpec, Arc<CurveCatalog>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Builds the catalog for `spec` and runs its witness suite. Results are
/// cached per surface.
pub fn build_catalog(spec: SurfaceSpec) -> Result<Arc<CurveCatalog>, CatalogError> {
    build_surface(spec.g, spec.n)?;
    if let Some(c) = cache().lock().expect("catalog cache").get(&spec) {
        return Ok(Arc::clone(c));
    }
    let cat = construct(spec)?;
    for c in cat.curves() {
        cat.is_nonseparating(&c.name)?;
    }
    crate::relations::run_witness_suite(&cat)?;
    let cat = Arc::new(cat);
    cache()
        .lock()
        .expect("catalog cache")
        .insert(spec, Arc::clone(&cat));
    Ok(cat)
}

/// Builds without running the witness suite.
pub fn build_catalog_unchecked(spec: SurfaceSpec) -> Result<CurveCatalog, CatalogError> {
    build_surface(spec.g, spec.n)?;
    construct(spec)
}
