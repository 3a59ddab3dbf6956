//! `verify`: named theorem checks, pass/fail, exit 1 on failure.
//!
//! The known ids, in the order the dispatcher knows them:
//!
//! * `corad-eq-poly` — the polynomial filtration of α(H) equals the
//!   coradical filtration of H^{⊗X}, as subspaces, including the degrees.
//! * `digit-sum` — P_n of the 𝔽_p[t] window is spanned by the tᶦ with
//!   p-ary digit sum ≤ n; compared against direct counting.
//! * `goodness` — P₁ⁿ = P_n plus the symmetry, primitive-power and
//!   product-factorization laws, and shuffle compatibility of δ on random
//!   filtered pairs.
//! * `lucas` — the digit criterion for binomials mod p against a Pascal
//!   triangle built by addition alone.
//! * `outer` — inner conjugations act trivially on α(H); expected to fail
//!   exactly on non-commutative H, and the agreement with commutativity is
//!   its own check.
//! * `q-subset-p` — Q_n(F)(m) ⊆ p_n(F)(m) at every computed stage.
//! * `shuffle` — dim P_n of a shuffle-algebra window matches
//!   Σ_{i≤n} (dim V)ᶦ.
//!
//! Randomized subchecks (only `goodness` has one) draw from a ChaCha
//! stream seeded by `--seed`, so reports are reproducible byte for byte.

use std::collections::BTreeMap;

use hopfcorad_core::builders::{polynomial_window, shuffle_window};
use hopfcorad_core::error::Error;
use hopfcorad_core::field::FieldSpec;
use hopfcorad_core::functor::{
    corad_eq_poly_check, outer_check, poly_filtration, q_filtration, ExponentialModule,
    GropModule,
};
use hopfcorad_core::grop::{inner_conjugation, FreeWord};
use hopfcorad_core::hopf::{Bialgebra, HopfAlgebra};
use hopfcorad_core::json::AlgebraDef;
use hopfcorad_core::lucas::{digit_sum, lucas_predicate};
use hopfcorad_core::matrix::svec;
use hopfcorad_core::registry;
use hopfcorad_core::subspace::Subspace;
use hopfcorad_core::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::report::{Report, Status};
use crate::util::{basis_label, format_vec, sample_in, yes_no};

pub const KNOWN_IDS: [&str; 7] = [
    "corad-eq-poly",
    "digit-sum",
    "goodness",
    "lucas",
    "outer",
    "q-subset-p",
    "shuffle",
];

pub struct Args<'a> {
    pub id: &'a str,
    pub alg: Option<&'a str>,
    pub ambient: Option<FieldSpec>,
    pub nmax: Option<usize>,
    pub xmax: Option<usize>,
    pub p: Option<u64>,
    pub mmax: Option<u64>,
    pub m: Option<usize>,
    pub dimv: Option<usize>,
    pub degree: Option<usize>,
    pub seed: u64,
    pub trials: Option<usize>,
}

pub fn run(a: &Args<'_>) -> Result<Report> {
    match a.id {
        "corad-eq-poly" => corad_eq_poly(a),
        "digit-sum" => digit_sum_law(a),
        "goodness" => goodness(a),
        "lucas" => lucas_oracle(a),
        "outer" => outer(a),
        "q-subset-p" => q_subset_p(a),
        "shuffle" => shuffle_law(a),
        other => Err(Error::InvalidInput(format!(
            "unknown verification id {other:?}; known ids: {}",
            KNOWN_IDS.join(", ")
        ))),
    }
}

fn base(a: &Args<'_>) -> Report {
    let mut r = Report::new("verify");
    r.input("id", a.id);
    r
}

fn require_alg<'a>(a: &Args<'a>) -> Result<&'a str> {
    a.alg
        .ok_or_else(|| Error::InvalidInput(format!("verify {} needs --alg", a.id)))
}

fn require_hopf<'d>(def: &'d AlgebraDef, alg: &str) -> Result<&'d HopfAlgebra> {
    def.hopf().ok_or_else(|| {
        Error::InvalidInput(format!("{alg} has no antipode; this check needs a Hopf algebra"))
    })
}

fn fmt_degree(d: Option<usize>) -> String {
    match d {
        Some(n) => n.to_string(),
        None => "none".to_string(),
    }
}

fn corad_eq_poly(a: &Args<'_>) -> Result<Report> {
    let alg = require_alg(a)?;
    let def = registry::resolve(alg, a.ambient)?;
    let hopf = require_hopf(&def, alg)?;
    let n_max = a.nmax.unwrap_or(3);
    let x_max = a.xmax.unwrap_or(2);
    let rep = corad_eq_poly_check(hopf, n_max, x_max)?;

    let mut r = base(a);
    r.input("alg", alg);
    r.input("field", def.field().to_string());
    r.input("nmax", n_max as u64);
    r.input("xmax", x_max as u64);

    for x in 1..=x_max {
        let row = format!("X={x}");
        let at_x = |e: &&hopfcorad_core::functor::CoradPolyEntry| e.x == x;
        let poly: Vec<(String, String)> = rep
            .entries
            .iter()
            .filter(at_x)
            .map(|e| (e.n.to_string(), e.poly_dim.to_string()))
            .collect();
        let corad: Vec<(String, String)> = rep
            .entries
            .iter()
            .filter(at_x)
            .map(|e| (e.n.to_string(), e.corad_dim.to_string()))
            .collect();
        r.table_row("poly_dims", &row, poly);
        r.table_row("corad_dims", &row, corad);
    }

    let stages_ok = rep.entries.iter().all(|e| e.equal);
    let detail = match rep.entries.iter().find(|e| !e.equal) {
        None => format!("all stages agree as subspaces (n <= {n_max}, X <= {x_max})"),
        Some(e) => format!(
            "first mismatch at (X={}, n={}): poly dim {}, coradical dim {}",
            e.x, e.n, e.poly_dim, e.corad_dim
        ),
    };
    r.check(
        "corad-eq-poly",
        if stages_ok { Status::Pass } else { Status::Fail },
        detail,
    );

    let conil_ok = rep.conilpotency.iter().all(|c| c.agree);
    let parts: Vec<String> = rep
        .conilpotency
        .iter()
        .map(|c| {
            format!(
                "X={}: coalgebra {} / functor {}",
                c.x,
                fmt_degree(c.coalgebra_degree),
                fmt_degree(c.functor_degree)
            )
        })
        .collect();
    r.check(
        "conilpotency-agreement",
        if conil_ok { Status::Pass } else { Status::Fail },
        parts.join("; "),
    );
    Ok(r)
}

fn digit_sum_law(a: &Args<'_>) -> Result<Report> {
    let p = match (a.p, a.ambient) {
        (Some(p), _) => p,
        (None, Some(FieldSpec::Fp(p))) => p,
        (None, _) => 2,
    };
    let field = FieldSpec::fp(p)?;
    if let Some(f) = a.ambient {
        if f != field {
            return Err(Error::InvalidInput(format!(
                "digit-sum works over F{p} (from --p), not {f}"
            )));
        }
    }
    let d = a.degree.unwrap_or(40);
    let n_max = a.nmax.unwrap_or(8);
    let window = polynomial_window(field, d)?;
    let corad = window.coalgebra.coradical_filtration(n_max);

    let mut r = base(a);
    r.input("p", p);
    r.input("degree", d as u64);
    r.input("nmax", n_max as u64);

    let mut computed = Vec::new();
    let mut expected = Vec::new();
    let mut all = true;
    let mut first_bad = None;
    for (n, stage) in corad.iter().enumerate() {
        let want = (0..=d as u64).filter(|&i| digit_sum(p, i) <= n as u64).count();
        let got = stage.dim();
        computed.push((n.to_string(), got.to_string()));
        expected.push((n.to_string(), want.to_string()));
        if got != want {
            all = false;
            first_bad.get_or_insert((n, got, want));
        }
    }
    r.table_row("P_dims", "computed", computed);
    r.table_row("P_dims", "expected", expected);
    let detail = match first_bad {
        None => format!("dim P_n = #{{i <= {d} : digit sum <= n}} for n <= {n_max}"),
        Some((n, got, want)) => format!("at n={n}: computed {got}, digit count {want}"),
    };
    r.check(
        "digit-sum",
        if all { Status::Pass } else { Status::Fail },
        detail,
    );
    Ok(r)
}

fn goodness(a: &Args<'_>) -> Result<Report> {
    let alg = require_alg(a)?;
    let def = registry::resolve(alg, a.ambient)?;
    let b = def.bialgebra().ok_or_else(|| {
        Error::InvalidInput(format!("{alg} has no multiplication; goodness needs a bialgebra"))
    })?;
    let n_max = a.nmax.unwrap_or(3);
    let trials = a.trials.unwrap_or(50);

    let mut r = base(a);
    r.input("alg", alg);
    r.input("field", def.field().to_string());
    r.input("nmax", n_max as u64);
    r.input("seed", a.seed);
    r.input("trials", trials as u64);

    let good = b.is_good(n_max)?;
    r.check(
        "good",
        if good.good { Status::Pass } else { Status::Fail },
        match good.failing_n {
            None => format!("P1^n = P_n for n <= {n_max}"),
            Some(k) => format!("P1^{k} is a proper subspace of P_{k}"),
        },
    );
    if let Some(w) = &good.witness {
        r.witness(format!(
            "outside P1^{}: {}",
            good.failing_n.unwrap_or(0),
            format_vec(b.labels(), 1, w)
        ));
    }

    let sym = b.symmetry_and_goodness_checks(n_max)?;
    let aggregate = |r: &mut Report, id: &str, values: Vec<(usize, bool)>| {
        let ok = values.iter().all(|(_, v)| *v);
        let detail = if values.is_empty() {
            "no n in range".to_string()
        } else {
            values
                .iter()
                .map(|(n, v)| format!("n={n}: {}", yes_no(*v)))
                .collect::<Vec<_>>()
                .join("; ")
        };
        r.check(id, if ok { Status::Pass } else { Status::Fail }, detail);
    };
    aggregate(
        &mut r,
        "delta-pn-symmetric",
        sym.entries.iter().map(|e| (e.n, e.delta_pn_symmetric)).collect(),
    );
    aggregate(
        &mut r,
        "delta-pn-in-prim-power",
        sym.entries
            .iter()
            .map(|e| (e.n, e.delta_pn_in_prim_power))
            .collect(),
    );
    aggregate(
        &mut r,
        "fn-hn-equals-sn",
        sym.entries
            .iter()
            .map(|e| (e.n, e.factorization_equals_symmetrization))
            .collect(),
    );

    shuffle_compat_trials(&mut r, b, n_max, trials, a.seed)?;
    Ok(r)
}

/// δ^{n+m}(a·b) = δⁿ(a) ⧢ δᵐ(b) on random filtered pairs. Pair degrees are
/// capped by an inexact-mul window so every sampled product is
/// representable.
fn shuffle_compat_trials(
    r: &mut Report,
    b: &Bialgebra,
    n_max: usize,
    trials: usize,
    seed: u64,
) -> Result<()> {
    let mut cap = 2 * n_max;
    if let Some(w) = &b.window {
        if !w.multiplication_exact {
            cap = cap.min(w.max_degree);
        }
    }
    if n_max < 1 || cap < 2 {
        r.check(
            "shuffle-compat",
            Status::Computed,
            "n/a (no representable products in range)",
        );
        return Ok(());
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut kernels: BTreeMap<usize, Subspace> = BTreeMap::new();
    let kernel = |k: usize, kernels: &mut BTreeMap<usize, Subspace>| {
        kernels
            .entry(k)
            .or_insert_with(|| b.coalgebra.delta_map(k + 1).kernel())
            .clone()
    };
    let mut failure = None;
    for _ in 0..trials {
        let (n, m) = loop {
            let n = rng.gen_range(1..=n_max);
            let m = rng.gen_range(1..=n_max);
            if n + m <= cap {
                break (n, m);
            }
        };
        let va = sample_in(&mut rng, &kernel(n, &mut kernels));
        let vb = sample_in(&mut rng, &kernel(m, &mut kernels));
        if !b.shuffle_compat_check(&va, &vb, n, m)? {
            failure = Some((n, m, va, vb));
            break;
        }
    }
    match failure {
        None => r.check(
            "shuffle-compat",
            Status::Pass,
            format!("{trials} random pairs agree (seed {seed})"),
        ),
        Some((n, m, va, vb)) => {
            r.check(
                "shuffle-compat",
                Status::Fail,
                format!("failed for a pair in P_{n} × P_{m}"),
            );
            r.witness(format!("a = {}", format_vec(b.labels(), 1, &va)));
            r.witness(format!("b = {}", format_vec(b.labels(), 1, &vb)));
        }
    }
    Ok(())
}

fn lucas_oracle(a: &Args<'_>) -> Result<Report> {
    let p = a.p.unwrap_or(2);
    FieldSpec::fp(p)?; // primality gate before the predicate's assert
    let m_max = a.mmax.unwrap_or(64);

    let mut r = base(a);
    r.input("p", p);
    r.input("mmax", m_max);

    // Two independent answers to "does some multinomial (m; k₁..k_r) with
    // positive parts survive mod p": exhaustive composition search with
    // exact integer multinomials, and the base-p digit-sum bound.
    let mut pairs = 0u64;
    let mut first_bad = None;
    for m in 1..=m_max {
        let bound = digit_sum(p, m);
        for parts in 1..=m {
            pairs += 1;
            if lucas_predicate(m, parts, p) != (parts <= bound) {
                first_bad.get_or_insert((m, parts));
            }
        }
    }
    let detail = match first_bad {
        None => format!("{pairs} (m, r) pairs: composition search matches the digit-sum bound"),
        Some((m, parts)) => format!(
            "disagreement at m={m}, r={parts}: search says {}, digit sum L_{p}({m}) = {}",
            yes_no(lucas_predicate(m, parts, p)),
            digit_sum(p, m)
        ),
    };
    r.check(
        "lucas",
        if first_bad.is_none() { Status::Pass } else { Status::Fail },
        detail,
    );
    Ok(r)
}

fn outer(a: &Args<'_>) -> Result<Report> {
    let alg = require_alg(a)?;
    let def = registry::resolve(alg, a.ambient)?;
    let hopf = require_hopf(&def, alg)?;
    let n_max = a.nmax.unwrap_or(2);
    let rep = outer_check(hopf, n_max)?;

    let mut r = base(a);
    r.input("alg", alg);
    r.input("field", def.field().to_string());
    r.input("nmax", n_max as u64);

    let nontrivial: Vec<_> = rep.entries.iter().filter(|e| !e.trivial).collect();
    r.check(
        "outer",
        if rep.all_trivial { Status::Pass } else { Status::Fail },
        match nontrivial.first() {
            None => format!("inner conjugations act trivially up to object {n_max}"),
            Some(e) => format!(
                "conjugation by x{} acts nontrivially on F({})",
                e.generator, e.object
            ),
        },
    );
    r.check(
        "outer-matches-commutativity",
        if rep.ok() { Status::Pass } else { Status::Fail },
        format!(
            "outer: {}, commutative: {}",
            yes_no(rep.all_trivial),
            yes_no(rep.commutative)
        ),
    );

    if let Some(e) = nontrivial.first() {
        let module = ExponentialModule::new(hopf.clone())?;
        let f = inner_conjugation(e.object, &FreeWord::generator(e.generator))?;
        let labels = hopf.bialgebra.labels();
        let count = module.dim(e.object)?;
        for c in 0..count {
            let image = module.act_column(&f, c)?;
            if image != svec::unit(c, hopf.field()) {
                r.witness(format!(
                    "conjugating F({}) by x{}: {} ↦ {}",
                    e.object,
                    e.generator,
                    basis_label(labels, e.object, c),
                    format_vec(labels, e.object, &image)
                ));
                break;
            }
        }
    }
    Ok(r)
}

fn q_subset_p(a: &Args<'_>) -> Result<Report> {
    let alg = require_alg(a)?;
    let def = registry::resolve(alg, a.ambient)?;
    let hopf = require_hopf(&def, alg)?;
    let module = ExponentialModule::new(hopf.clone())?;
    let n_max = a.nmax.unwrap_or(3);
    let m = a.m.unwrap_or(1);

    let mut r = base(a);
    r.input("alg", alg);
    r.input("field", def.field().to_string());
    r.input("nmax", n_max as u64);
    r.input("m", m as u64);

    let mut q_cells = Vec::new();
    let mut p_cells = Vec::new();
    let mut first_bad = None;
    for n in 0..=n_max {
        let q = q_filtration(&module, n, m)?;
        let p = poly_filtration(&module, n, m)?;
        if !p.contains_subspace(&q) {
            first_bad.get_or_insert(n);
        }
        q_cells.push((n.to_string(), q.dim().to_string()));
        p_cells.push((n.to_string(), p.dim().to_string()));
    }
    let row = format!("m={m}");
    r.table_row("Q_dims", &row, q_cells);
    r.table_row("P_dims", &row, p_cells);
    r.check(
        "q-subset-p",
        if first_bad.is_none() { Status::Pass } else { Status::Fail },
        match first_bad {
            None => format!("Q_n(F)({m}) inside p_n(F)({m}) for n <= {n_max}"),
            Some(n) => format!("inclusion fails at n = {n}"),
        },
    );
    Ok(r)
}

fn shuffle_law(a: &Args<'_>) -> Result<Report> {
    let field = a.ambient.unwrap_or(FieldSpec::Q);
    let dim_v = a.dimv.unwrap_or(2);
    let d = a.degree.unwrap_or(4);
    let n_max = a.nmax.unwrap_or(4);
    let hopf = shuffle_window(field, dim_v, d)?;
    let corad = hopf.coalgebra().coradical_filtration(n_max);

    let mut r = base(a);
    r.input("field", field.to_string());
    r.input("dimv", dim_v as u64);
    r.input("degree", d as u64);
    r.input("nmax", n_max as u64);

    let mut computed = Vec::new();
    let mut expected = Vec::new();
    let mut first_bad = None;
    for (n, stage) in corad.iter().enumerate() {
        // Geometric sum Σ_{i ≤ n} (dim V)^i, truncated by the window.
        let want: usize = (0..=n.min(d)).map(|i| dim_v.pow(i as u32)).sum();
        let got = stage.dim();
        computed.push((n.to_string(), got.to_string()));
        expected.push((n.to_string(), want.to_string()));
        if got != want {
            first_bad.get_or_insert((n, got, want));
        }
    }
    r.table_row("P_dims", "computed", computed);
    r.table_row("P_dims", "expected", expected);
    r.check(
        "shuffle",
        if first_bad.is_none() { Status::Pass } else { Status::Fail },
        match first_bad {
            None => format!("dim P_n = sum of (dim V)^i for i <= n, for n <= {n_max}"),
            Some((n, got, want)) => format!("at n={n}: computed {got}, formula {want}"),
        },
    );
    Ok(r)
}
