//! `analyze`: the descriptive report for one algebra.
//!
//! Everything here is `computed` — analysis never fails, it states. The
//! items: coradical dimensions P₀..P_nmax, dim Prim, conilpotency degree,
//! the powers P₁ⁿ of the first filtration stage, a goodness verdict
//! (P₁ⁿ = P_n), commutativity flags, and the primitive-closure facts when
//! an antipode is present. Structure levels degrade gracefully: a bare
//! coalgebra reports `n/a (no multiplication)` for product-level items, a
//! bialgebra `n/a (no antipode)` for Hopf-level ones, and windowed algebras
//! whose products leave the window report `n/a (exceeds window)` instead of
//! aborting.

use hopfcorad_core::error::Error;
use hopfcorad_core::field::FieldSpec;
use hopfcorad_core::hopf::Bialgebra;
use hopfcorad_core::registry;
use hopfcorad_core::subspace::Subspace;
use hopfcorad_core::Result;

use crate::report::{Report, Status};
use crate::util::{format_vec, yes_no};

pub fn run(alg: &str, ambient: Option<FieldSpec>, nmax: usize) -> Result<Report> {
    let def = registry::resolve(alg, ambient)?;
    let mut r = Report::new("analyze");
    r.input("alg", alg);
    r.input("field", def.field().to_string());
    r.input("nmax", nmax as u64);
    r.input("dim", def.dim() as u64);

    let c = def.coalgebra();
    let corad = c.coradical_filtration(nmax);
    r.table_row("P_dims", "dims", dim_cells(&corad));
    r.check(
        "prim-dim",
        Status::Computed,
        c.primitives().dim().to_string(),
    );
    r.check(
        "conilpotency-degree",
        Status::Computed,
        match c.conilpotency_degree() {
            Some(n) => n.to_string(),
            None => "none (filtration stalls below the full space)".to_string(),
        },
    );
    r.check("cocommutative", Status::Computed, yes_no(c.is_cocommutative()));

    match def.bialgebra() {
        None => {
            for id in ["commutative", "goodness", "primitive"] {
                r.check(id, Status::Computed, "n/a (no multiplication)");
            }
        }
        Some(b) => bialgebra_items(&mut r, b, nmax)?,
    }

    match def.hopf() {
        None => r.check("prim-closure", Status::Computed, "n/a (no antipode)"),
        Some(h) => {
            let closure = h.prim_closure_checks()?;
            let p_part = match closure.p_power_closed {
                None => "p-power n/a in characteristic 0".to_string(),
                Some(ok) => format!("p-power closed: {}", yes_no(ok)),
            };
            r.check(
                "prim-closure",
                Status::Computed,
                format!(
                    "bracket closed: {}; {}",
                    yes_no(closure.bracket_closed),
                    p_part
                ),
            );
            let labels = h.bialgebra.labels();
            if let Some(w) = &closure.bracket_witness {
                r.witness(format!("bracket escapes Prim: {}", format_vec(labels, 1, w)));
            }
            if let Some(w) = &closure.p_power_witness {
                r.witness(format!("p-power escapes Prim: {}", format_vec(labels, 1, w)));
            }
        }
    }
    Ok(r)
}

/// Multiplication-level items. Window overflow is reported, not raised: an
/// inexact-mul window simply cannot represent products past its degree.
fn bialgebra_items(r: &mut Report, b: &Bialgebra, nmax: usize) -> Result<()> {
    r.check("commutative", Status::Computed, yes_no(b.is_commutative()));

    let powers = match b.primitive_power_filtration(nmax) {
        Ok(p) => p,
        Err(Error::WindowOverflow { .. }) => {
            for id in ["goodness", "primitive"] {
                r.check(id, Status::Computed, "n/a (exceeds window)");
            }
            return Ok(());
        }
        Err(e) => return Err(e),
    };
    r.table_row("P1_power_dims", "dims", dim_cells(&powers));

    let good = b.is_good(nmax)?;
    r.check(
        "goodness",
        Status::Computed,
        match good.failing_n {
            None => format!("good (P1^n = P_n for n <= {nmax})"),
            Some(k) => format!("not good (first failure at n = {k})"),
        },
    );
    if let Some(w) = &good.witness {
        r.witness(format!(
            "P_{}(H) element outside P1^{}: {}",
            good.failing_n.unwrap_or(0),
            good.failing_n.unwrap_or(0),
            format_vec(b.labels(), 1, w)
        ));
    }

    if b.window.is_some() {
        // No total product, so "stabilized P₁ⁿ = H" is not decidable;
        // the per-degree table above is the whole answer.
        r.check(
            "primitive",
            Status::Computed,
            "windowed: reported per degree (see P1_power_dims)",
        );
    } else {
        // The chain strictly grows until it stalls, so dim H steps decide.
        let chain = b.primitive_power_filtration(b.dim())?;
        let detail = match chain.iter().position(Subspace::is_full) {
            Some(k) => format!("yes (P1^n = H from n = {k})"),
            None => format!(
                "no (P1^n stalls at dim {} < {})",
                chain.last().map(Subspace::dim).unwrap_or(0),
                b.dim()
            ),
        };
        r.check("primitive", Status::Computed, detail);
    }
    Ok(())
}

fn dim_cells(stages: &[Subspace]) -> Vec<(String, String)> {
    stages
        .iter()
        .enumerate()
        .map(|(n, s)| (n.to_string(), s.dim().to_string()))
        .collect()
}
