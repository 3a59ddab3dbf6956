//! `functor`: dimension tables for the filtrations of the exponential
//! module α(H) — the polynomial filtration p_n(F)(X), the primitive part
//! 𝒫F(n), and the generating filtration q_n(F)(m).
//!
//! The carrier must be a Hopf algebra (the module needs the antipode) and
//! cocommutative (otherwise the evaluation is not well defined; the core
//! rejects it). Stages land in the on-disk cache when `HOPFCORAD_CACHE_DIR`
//! points at an existing directory; keys hash the canonical algebra JSON
//! plus every parameter, so a cache hit is indistinguishable from a
//! recomputation.

use clap::ValueEnum;
use hopfcorad_core::cache::DiskCache;
use hopfcorad_core::error::Error;
use hopfcorad_core::field::FieldSpec;
use hopfcorad_core::functor::{poly_filtration, primitive_part, q_filtration, ExponentialModule};
use hopfcorad_core::json::{algebra_to_string, AlgebraDef};
use hopfcorad_core::registry;
use hopfcorad_core::subspace::Subspace;
use hopfcorad_core::Result;

use crate::report::{Report, Status};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum What {
    /// p_n(F)(X): kernels of the difference of the X-fold diagonal and its
    /// (n+1)-block collapses.
    #[value(name = "poly")]
    Poly,
    /// 𝒫F(n): joint kernel of the θ-insertions at object n.
    #[value(name = "primitive-part")]
    PrimitivePart,
    /// q_n(F)(m): the span of J-images of primitive tuples of arity ≤ n.
    #[value(name = "Q", alias = "q")]
    Q,
}

pub struct Args<'a> {
    pub alg: &'a str,
    pub ambient: Option<FieldSpec>,
    pub what: What,
    pub n: Option<usize>,
    pub nmax: Option<usize>,
    pub x: Option<usize>,
    pub m: Option<usize>,
}

pub fn run(a: Args<'_>) -> Result<Report> {
    let def = registry::resolve(a.alg, a.ambient)?;
    let hopf = def.hopf().ok_or_else(|| {
        Error::InvalidInput(format!(
            "functor needs a Hopf algebra; {} has no antipode",
            a.alg
        ))
    })?;
    let module = ExponentialModule::new(hopf.clone())?;
    let cache = DiskCache::from_env();
    // The key prefix pins the algebra by content, not by name: a definition
    // file may change under the same path.
    let key_prefix = format!(
        "hopfcorad/1/functor\n{}",
        algebra_to_string(&AlgebraDef::Hopf(hopf.clone()))
    );

    let ns: Vec<usize> = match (a.n, a.nmax) {
        (Some(n), _) => vec![n],
        (None, Some(top)) => (0..=top).collect(),
        (None, None) => (0..=3).collect(),
    };

    let mut r = Report::new("functor");
    r.input("alg", a.alg);
    r.input("field", def.field().to_string());
    match a.n {
        Some(n) => r.input("n", n as u64),
        None => r.input("nmax", *ns.last().expect("nonempty range") as u64),
    }

    let (what_id, object, table) = match a.what {
        What::Poly => ("poly", a.x.unwrap_or(1), "poly_dims"),
        What::PrimitivePart => ("primitive-part", 0, "primitive_part_dims"),
        What::Q => ("Q", a.m.unwrap_or(1), "Q_dims"),
    };
    r.input("what", what_id);

    let prefix = format!("{key_prefix}\nwhat={what_id} object={object}");
    let (row_label, dims) = match a.what {
        What::Poly => {
            r.input("X", object as u64);
            let dims = stage_dims(&prefix, &ns, |n, key| {
                cached(&cache, key, || poly_filtration(&module, n, object))
            })?;
            (format!("X={object}"), dims)
        }
        What::PrimitivePart => {
            let dims = stage_dims(&prefix, &ns, |n, key| {
                cached(&cache, key, || primitive_part(&module, n))
            })?;
            ("dims".to_string(), dims)
        }
        What::Q => {
            r.input("m", object as u64);
            let dims = stage_dims(&prefix, &ns, |n, key| {
                cached(&cache, key, || q_filtration(&module, n, object))
            })?;
            (format!("m={object}"), dims)
        }
    };

    let cells: Vec<(String, String)> = ns
        .iter()
        .zip(&dims)
        .map(|(n, d)| (n.to_string(), d.to_string()))
        .collect();
    r.table_row(table, &row_label, cells);
    let listed: Vec<String> = dims.iter().map(usize::to_string).collect();
    r.check(
        what_id,
        Status::Computed,
        format!("dims {}", listed.join(",")),
    );
    Ok(r)
}

fn stage_dims(
    key_prefix: &str,
    ns: &[usize],
    mut stage: impl FnMut(usize, &str) -> Result<Subspace>,
) -> Result<Vec<usize>> {
    let mut dims = Vec::with_capacity(ns.len());
    for &n in ns {
        let key = format!("{key_prefix} n={n}");
        dims.push(stage(n, &key)?.dim());
    }
    Ok(dims)
}

/// Subspaces round-trip through the cache as their basis matrices (RREF
/// rows), so a reload rebuilds the identical canonical form.
fn cached(cache: &DiskCache, key: &str, compute: impl FnOnce() -> Result<Subspace>) -> Result<Subspace> {
    if let Some(m) = cache.get(key) {
        let rows = m.nonzero_rows().map(|(_, row)| row.clone()).collect();
        return Ok(Subspace::from_rows(m.field(), m.cols(), rows));
    }
    let s = compute()?;
    cache.put(key, &s.to_matrix());
    Ok(s)
}
