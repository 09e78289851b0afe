use std::fmt::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{Common, Outcome, Output, EXIT_ASSERTION};
use crate::canon::{canonical_basis, decomposition_matrix, dimension_check};
use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::fock::{crystal_e, crystal_f, is_kleshchev, is_kleshchev_by_tableau, FockConfig};
use crate::hecke::{check_relations, is_semisimple, HeckeAlgebra, HeckeParams, Side};
use crate::linalg;
use crate::multiseg::{count_multisegments, enumerate_multisegments, is_aperiodic, is_aperiodic_by_shifts};
use crate::shapes::{Modulus, Multipartition};
use crate::specht::CellularTable;

fn fail(msg: String) -> Error {
    Error::Invariant(msg)
}

fn random_params(rng: &mut ChaCha8Rng, m: usize, n: usize) -> Result<HeckeParams> {
    let q = Scalar::from_int(rng.gen_range(2..6));
    let v = (0..m).map(|_| Scalar::from_int(rng.gen_range(1..20))).collect();
    HeckeParams::new(m, n, q, v)
}

fn relations(rng: &mut ChaCha8Rng) -> Result<()> {
    for (m, n) in [(1, 3), (2, 2), (2, 3), (3, 2)] {
        let alg = HeckeAlgebra::<Scalar>::new(&random_params(rng, m, n)?)?;
        check_relations(&alg, Side::Right)?;
        check_relations(&alg, Side::Left)?;
    }
    let q = Scalar::root_of_unity(3, 1)?;
    let alg = HeckeAlgebra::<Scalar>::new(&HeckeParams::from_gamma(3, q, &[0, 1])?)?;
    check_relations(&alg, Side::Right)
}

fn trace_symmetry(rng: &mut ChaCha8Rng) -> Result<()> {
    let alg = HeckeAlgebra::<Scalar>::new(&random_params(rng, 2, 2)?)?;
    for b in 0..alg.dim() {
        for c in 0..alg.dim() {
            let (x, y) = (alg.basis_element(b), alg.basis_element(c));
            if alg.trace(&alg.mul(&x, &y)?)? != alg.trace(&alg.mul(&y, &x)?)? {
                return Err(fail(format!("trace(xy) != trace(yx) at basis pair ({b}, {c})")));
            }
        }
    }
    Ok(())
}

fn cellular_dimension() -> Result<()> {
    for (m, n) in [(1, 3), (2, 2), (2, 3), (3, 2)] {
        let p = HeckeParams::new(m, n, Scalar::from_int(-1), (0..m).map(|k| Scalar::from_int(k as i64 + 1)).collect())?;
        let alg = HeckeAlgebra::<Scalar>::new(&p)?;
        let table = CellularTable::new(&alg)?;
        let total: usize = table.shapes().iter().map(|d| d.dim() * d.dim()).sum();
        if total != alg.dim() {
            return Err(fail(format!("Σ(#std)^2 = {total} != {} at m={m}, n={n}", alg.dim())));
        }
    }
    Ok(())
}

fn semisimplicity() -> Result<()> {
    let s = |x: &str| -> Scalar { x.parse().unwrap() };
    let grid = [
        (1, 2, "-1", vec!["1"]),
        (1, 3, "2", vec!["1"]),
        (2, 2, "2", vec!["1", "2"]),
        (2, 2, "3", vec!["1", "2"]),
        (2, 2, "-1", vec!["1", "-1"]),
    ];
    for (m, n, q, v) in grid {
        let p = HeckeParams::new(m, n, s(q), v.iter().map(|x| s(x)).collect())?;
        let alg = HeckeAlgebra::<Scalar>::new(&p)?;
        let table = CellularTable::new(&alg)?;
        let mut all_nonsingular = true;
        for d in table.shapes() {
            all_nonsingular &= linalg::is_nonsingular(&table.gram(&d.lambda)?);
        }
        if all_nonsingular != is_semisimple(&p).semisimple {
            return Err(fail(format!("semisimplicity verdict disagrees with Gram matrices at {p}")));
        }
    }
    Ok(())
}

fn kleshchev_vs_gram() -> Result<()> {
    for (r, gamma) in [(2u32, vec![0i64]), (3, vec![0]), (2, vec![0, 1])] {
        let cfg = FockConfig::new(Modulus::Finite(r), gamma.clone())?;
        for n in 0..=3 {
            let q = Scalar::root_of_unity(r, 1)?;
            let alg = HeckeAlgebra::<Scalar>::new(&HeckeParams::from_gamma(n, q, &gamma)?)?;
            let table = CellularTable::new(&alg)?;
            for d in table.shapes() {
                if (table.dim_simple(&d.lambda)? > 0) != is_kleshchev(&d.lambda, &cfg)? {
                    return Err(fail(format!("D^{} nonzero disagrees with Kleshchev test (r={r})", d.lambda)));
                }
            }
        }
    }
    Ok(())
}

fn llt() -> Result<()> {
    for r in [2u32, 3] {
        for n in 0..=5 {
            let b = canonical_basis(n, r)?;
            for (lambda, g) in &b.vectors {
                if !b.is_bar_invariant(g)? {
                    return Err(fail(format!("G({lambda}) is not bar-invariant")));
                }
            }
        }
        for n in 0..=3 {
            if let Some(row) = dimension_check(n, r)?.into_iter().find(|x| x.lhs != x.dim_specht) {
                return Err(fail(format!("dimension identity fails at {} (r={r})", row.lambda)));
            }
        }
    }
    if !decomposition_matrix(4, 5)?.is_identity() {
        return Err(fail("decomposition matrix at n=4, r=5 is not the identity".into()));
    }
    Ok(())
}

fn crystal() -> Result<()> {
    for (r, gamma) in [(2u32, vec![0i64]), (3, vec![0]), (2, vec![0, 0]), (2, vec![0, 1])] {
        let cfg = FockConfig::new(Modulus::Finite(r), gamma)?;
        for n in 0..=4 {
            for lambda in Multipartition::all(cfg.level(), n) {
                for i in cfg.active_residues(&lambda) {
                    if let Some(mu) = crystal_f(&lambda, i, &cfg)? {
                        if crystal_e(&mu, i, &cfg)?.as_ref() != Some(&lambda) {
                            return Err(fail(format!("e_{i} f_{i} {lambda} != {lambda}")));
                        }
                    }
                }
                if is_kleshchev(&lambda, &cfg)? != is_kleshchev_by_tableau(&lambda, &cfg)? {
                    return Err(fail(format!("Kleshchev definitions disagree on {lambda}")));
                }
            }
        }
    }
    Ok(())
}

fn multisegments() -> Result<()> {
    if count_multisegments(2, Modulus::Finite(2), 0) != (5, 4) {
        return Err(fail("count at n=2, r=2 is not (5, 4)".into()));
    }
    for r in 2..=4u32 {
        for n in 0..=4 {
            for ms in enumerate_multisegments(n, Modulus::Finite(r), 0) {
                if is_aperiodic(&ms, Modulus::Finite(r)) != is_aperiodic_by_shifts(&ms, Modulus::Finite(r)) {
                    return Err(fail(format!("periodicity tests disagree on {ms}")));
                }
            }
        }
    }
    Ok(())
}

/// Run every suite; exit code 2 if any fails.
pub(super) fn selftest(c: &Common) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(c.seed);
    let mut results: Vec<(&str, Result<()>)> = Vec::new();
    results.push(("relations", relations(&mut rng)));
    results.push(("trace-symmetry", trace_symmetry(&mut rng)));
    results.push(("cellular-dimension", cellular_dimension()));
    results.push(("semisimplicity", semisimplicity()));
    results.push(("kleshchev-vs-gram", kleshchev_vs_gram()));
    results.push(("llt", llt()));
    results.push(("crystal", crystal()));
    results.push(("multisegments", multisegments()));
    let mut text = String::new();
    let mut suites = Vec::new();
    let mut ok = true;
    for (name, r) in &results {
        match r {
            Ok(()) => writeln!(text, "PASS {name}").unwrap(),
            Err(e) => {
                ok = false;
                writeln!(text, "FAIL {name}: {e}").unwrap()
            }
        }
        suites.push(json!({"name": name, "pass": r.is_ok(), "detail": r.as_ref().err().map(|e| e.to_string())}));
    }
    let tex = text.clone();
    Ok(Outcome {
        output: Output::Structured {
            json: json!({"seed": c.seed, "ok": ok, "suites": suites}),
            table: text,
            tex,
        },
        code: if ok { 0 } else { EXIT_ASSERTION },
    })
}
