//! One PASS/FAIL line per acceptance criterion. All checks are exact.

use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cyclohecke::canon::{canonical_basis, decomposition_matrix, dimension_check, restricted_partitions};
use cyclohecke::exactnum::Scalar;
use cyclohecke::fock::{
    crystal_e, crystal_f, enumerate_kleshchev, is_kleshchev, is_kleshchev_by_tableau, FockConfig,
};
use cyclohecke::hecke::{check_relations, is_semisimple, HeckeAlgebra, HeckeParams, Side};
use cyclohecke::linalg;
use cyclohecke::multiseg::{
    count_aperiodic, count_multisegments, enumerate_multisegments, is_aperiodic, is_aperiodic_by_shifts,
};
use cyclohecke::shapes::{Modulus, Multipartition};
use cyclohecke::specht::{cellular_rank, CellularTable};

type Check = Result<String, String>;

const SEED: u64 = 20240601;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn s(x: &str) -> Scalar {
    x.parse().unwrap()
}

fn dim(m: usize, n: usize) -> usize {
    m.pow(n as u32) * (1..=n).product::<usize>()
}

/// `v_i` drawn from the 12th roots of unity and small integers.
fn sample_v(rng: &mut ChaCha8Rng, m: usize) -> Vec<Scalar> {
    (0..m)
        .map(|_| {
            if rng.gen_bool(0.5) {
                Scalar::root_of_unity(12, rng.gen_range(0..12)).unwrap()
            } else {
                Scalar::from_int(rng.gen_range(2..7))
            }
        })
        .collect()
}

fn criterion_1() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut runs = 0;
    for m in 1..=3 {
        for n in 1..=4 {
            for a in [1, 4, 6] {
                let q = Scalar::root_of_unity(12, a).map_err(err)?;
                let p = HeckeParams::new(m, n, q, sample_v(&mut rng, m)).map_err(err)?;
                let alg = HeckeAlgebra::<Scalar>::new(&p).map_err(err)?;
                check_relations(&alg, Side::Right).map_err(|e| format!("{p}: {e}"))?;
                runs += 1;
            }
        }
    }
    Ok(format!("{runs} parameter sets over Q(z12), right-regular"))
}

fn criterion_2() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    for m in 1..=3 {
        for n in 0..=4 {
            let q = Scalar::root_of_unity(12, 1).map_err(err)?;
            let p = HeckeParams::new(m, n, q, sample_v(&mut rng, m)).map_err(err)?;
            let want = dim(m, n);
            let total: usize = Multipartition::all(m, n)
                .iter()
                .map(|l| cyclohecke::shapes::standard_tableaux(l).len().pow(2))
                .sum();
            if total != want {
                return Err(format!("Σ(#std)^2 = {total} != {want} at m={m}, n={n}"));
            }
            let rank = cellular_rank(&HeckeAlgebra::<Scalar>::new(&p).map_err(err)?).map_err(err)?;
            if rank != want {
                return Err(format!("cellular matrix rank {rank} != {want} at m={m}, n={n}"));
            }
        }
    }
    Ok("dim = m^n n! and cellular matrix invertible over Q(z12) for m<=3, n<=4".into())
}

fn criterion_3() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    let mut pairs = 0;
    for m in 1..=2 {
        for n in 1..=3 {
            let q = Scalar::root_of_unity(12, rng.gen_range(1..12)).map_err(err)?;
            let p = HeckeParams::new(m, n, q, sample_v(&mut rng, m)).map_err(err)?;
            let alg = HeckeAlgebra::<Scalar>::new(&p).map_err(err)?;
            for b in 0..alg.dim() {
                for c in 0..alg.dim() {
                    let (x, y) = (alg.basis_element(b), alg.basis_element(c));
                    let xy = alg.trace(&alg.mul(&x, &y).map_err(err)?).map_err(err)?;
                    let yx = alg.trace(&alg.mul(&y, &x).map_err(err)?).map_err(err)?;
                    if xy != yx {
                        return Err(format!("{p}: trace(xy) = {xy} != {yx} = trace(yx) at pair ({b}, {c})"));
                    }
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("{pairs} ordered basis pairs"))
}

fn criterion_4() -> Check {
    let grid: [(usize, usize, &str, Vec<&str>); 12] = [
        (1, 2, "-1", vec!["1"]),
        (1, 3, "2", vec!["1"]),
        (1, 3, "z3^1", vec!["1"]),
        (1, 4, "z4^1", vec!["1"]),
        (1, 3, "z4^1", vec!["1"]),
        (2, 2, "2", vec!["1", "2"]),
        (2, 2, "2", vec!["1", "3"]),
        (2, 2, "-1", vec!["1", "-1"]),
        (2, 3, "3", vec!["1", "9"]),
        (2, 3, "3", vec!["1", "27"]),
        (3, 2, "2", vec!["1", "3", "5"]),
        (3, 2, "z3^1", vec!["1", "z3^1", "z3^2"]),
    ];
    let (mut yes, mut no) = (0, 0);
    for (m, n, q, v) in &grid {
        let p = HeckeParams::new(*m, *n, s(q), v.iter().map(|x| s(x)).collect()).map_err(err)?;
        let alg = HeckeAlgebra::<Scalar>::new(&p).map_err(err)?;
        let table = CellularTable::new(&alg).map_err(err)?;
        let mut all_nonsingular = true;
        for d in table.shapes() {
            all_nonsingular &= linalg::is_nonsingular(&table.gram(&d.lambda).map_err(err)?);
        }
        let verdict = is_semisimple(&p).semisimple;
        if verdict != all_nonsingular {
            return Err(format!("{p}: is_semisimple = {verdict}, all Grams nonsingular = {all_nonsingular}"));
        }
        if verdict {
            yes += 1
        } else {
            no += 1
        }
    }
    Ok(format!("{} points, {yes} semisimple, {no} not", grid.len()))
}

fn kleshchev_grid() -> Vec<(u32, Vec<i64>)> {
    vec![(2, vec![0]), (3, vec![0]), (2, vec![0, 0]), (2, vec![0, 1])]
}

fn criterion_5() -> Check {
    let mut shapes = 0;
    for (r, gamma) in kleshchev_grid() {
        let cfg = FockConfig::new(Modulus::Finite(r), gamma.clone()).map_err(err)?;
        let q = Scalar::root_of_unity(r, 1).map_err(err)?;
        for n in 0..=4 {
            let p = HeckeParams::from_gamma(n, q.clone(), &gamma).map_err(err)?;
            let alg = HeckeAlgebra::<Scalar>::new(&p).map_err(err)?;
            let table = CellularTable::new(&alg).map_err(err)?;
            for d in table.shapes() {
                let rank = table.dim_simple(&d.lambda).map_err(err)?;
                let k = is_kleshchev(&d.lambda, &cfg).map_err(err)?;
                if (rank > 0) != k {
                    return Err(format!("r={r}, γ={gamma:?}, λ={}: Gram rank {rank}, Kleshchev {k}", d.lambda));
                }
                shapes += 1;
            }
        }
    }
    Ok(format!("{shapes} shapes over 4 parameter sets, n<=4"))
}

fn criterion_6() -> Check {
    let mut vectors = 0;
    for r in [2u32, 3] {
        for n in 0..=6 {
            // construction asserts unitriangularity of every A(λ)
            let b = canonical_basis(n, r).map_err(err)?;
            for (lambda, g) in &b.vectors {
                if !b.is_bar_invariant(g).map_err(err)? {
                    return Err(format!("G({lambda}) not bar-invariant (r={r})"));
                }
                let top = Multipartition::from_partition(lambda.clone());
                for (mu, p) in g.terms() {
                    let ok = if *mu == top { p.is_bar_invariant() && p.eval_at_one() == 1.into() } else { p.in_v_zv() };
                    if !ok {
                        return Err(format!("G({lambda}) has coefficient {p} at {mu} (r={r})"));
                    }
                }
                vectors += 1;
            }
            if r as usize > n && !decomposition_matrix(n, r).map_err(err)?.is_identity() {
                return Err(format!("decomposition matrix not the identity at n={n}, r={r}"));
            }
        }
    }
    for n in 0..=6 {
        if !decomposition_matrix(n, 7).map_err(err)?.is_identity() {
            return Err(format!("decomposition matrix not the identity at n={n}, r=7"));
        }
    }
    for n in 0..=4 {
        if let Some(row) = dimension_check(n, 2).map_err(err)?.into_iter().find(|x| x.lhs != x.dim_specht) {
            return Err(format!("dimension identity fails at λ={} (n={n}, q=-1)", row.lambda));
        }
    }
    Ok(format!("{vectors} canonical basis vectors; identity for r>n; dimension identity r=2, n<=4"))
}

fn criterion_7() -> Check {
    let mut checked = 0;
    for (r, gamma) in kleshchev_grid() {
        let cfg = FockConfig::new(Modulus::Finite(r), gamma).map_err(err)?;
        for n in 0..=5 {
            for lambda in Multipartition::all(cfg.level(), n) {
                for i in cfg.active_residues(&lambda) {
                    if let Some(mu) = crystal_f(&lambda, i, &cfg).map_err(err)? {
                        if crystal_e(&mu, i, &cfg).map_err(err)?.as_ref() != Some(&lambda) {
                            return Err(format!("e_{i} f_{i} {lambda} != {lambda}"));
                        }
                    }
                }
                if is_kleshchev(&lambda, &cfg).map_err(err)? != is_kleshchev_by_tableau(&lambda, &cfg).map_err(err)? {
                    return Err(format!("Kleshchev definitions disagree on {lambda}"));
                }
                checked += 1;
            }
        }
    }
    for r in 2..=4u32 {
        let cfg = FockConfig::level_one(Modulus::Finite(r)).map_err(err)?;
        for n in 0..=8 {
            let k = enumerate_kleshchev(&cfg, n).map_err(err)?.len();
            let want = restricted_partitions(n, r).len();
            if k != want {
                return Err(format!("{k} Kleshchev vs {want} restricted at n={n}, r={r}"));
            }
        }
    }
    Ok(format!("{checked} multipartitions; level-one counts for n<=8, r in 2..=4"))
}

fn criterion_8() -> Check {
    if count_multisegments(2, Modulus::Finite(2), 0) != (5, 4) {
        return Err("count at n=2, r=2 is not (total 5, aperiodic 4)".into());
    }
    for r in 2..=6u32 {
        for n in 0..r as usize {
            let (total, _) = count_multisegments(n, Modulus::Finite(r), 0);
            let a = count_aperiodic(n, r).map_err(err)?;
            if a != total {
                return Err(format!("count_aperiodic({n},{r}) = {a} != {total}"));
            }
        }
    }
    let mut seen = 0;
    for r in 1..=4u32 {
        let modulus = Modulus::Finite(r);
        for n in 0..=5 {
            for ms in enumerate_multisegments(n, modulus, 0) {
                if is_aperiodic(&ms, modulus) != is_aperiodic_by_shifts(&ms, modulus) {
                    return Err(format!("periodicity disagrees with shift oracle on {ms} (r={r})"));
                }
                seen += 1;
            }
        }
    }
    Ok(format!("{seen} multisegments against the shift oracle"))
}

fn run_cli(args: &[&str]) -> Result<(i32, Vec<u8>), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_cyclohecke")).args(args).output().map_err(err)?;
    Ok((out.status.code().unwrap_or(-1), out.stdout))
}

fn criterion_9() -> Check {
    let jobs: Vec<Vec<&str>> = vec![
        vec!["semisimple", "-m", "2", "-n", "3", "--q", "z3^1", "--v", "[1,z3^1]"],
        vec!["gram", "-m", "2", "-n", "3", "-r", "2", "--gamma", "[0,1]"],
        vec!["simples", "-m", "2", "-n", "3", "-r", "2", "--gamma", "[0,1]"],
        vec!["simples", "-m", "1", "-n", "4", "-r", "2", "--format", "table"],
        vec!["kleshchev", "-m", "2", "-r", "3", "--gamma", "[0,1]", "--enumerate", "5"],
        vec!["kleshchev", "-m", "1", "-r", "2", "--series", "10"],
        vec!["kleshchev", "-m", "2", "-r", "2", "--gamma", "[0,1]", "--lambda", "[[2],[1]]"],
        vec!["crystal", "-m", "2", "-r", "2", "--gamma", "[0,1]", "-n", "4"],
        vec!["fock-apply", "-m", "1", "-r", "2", "--lambda", "[[2,1]]", "--word", "f1 f0 f1"],
        vec!["llt", "-n", "6", "-r", "2"],
        vec!["llt", "-n", "5", "-r", "3", "--format", "tex", "--matrix"],
        vec!["decomp-check", "-n", "4", "-r", "2"],
        vec!["multiseg", "-n", "5", "-r", "3", "--enumerate"],
        vec!["multiseg", "-n", "6", "-r", "2", "--labels", "3"],
        vec!["selftest", "--seed", "7"],
    ];
    for job in &jobs {
        let mut outputs = Vec::new();
        for threads in ["1", "1", "2", "4"] {
            let mut args = job.clone();
            args.extend(["--threads", threads]);
            outputs.push(run_cli(&args)?);
        }
        if outputs[0].0 != 0 {
            return Err(format!("`{}` exited with {}", job.join(" "), outputs[0].0));
        }
        if outputs[0].1.is_empty() {
            return Err(format!("`{}` printed nothing", job.join(" ")));
        }
        if outputs.iter().any(|o| *o != outputs[0]) {
            return Err(format!("`{}` output differs between runs", job.join(" ")));
        }
    }
    Ok(format!("{} jobs, 4 runs each with --threads 1,1,2,4", jobs.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 9] = [
        ("relations", criterion_1),
        ("basis-dimension", criterion_2),
        ("trace-symmetry", criterion_3),
        ("semisimplicity", criterion_4),
        ("kleshchev-gram", criterion_5),
        ("llt", criterion_6),
        ("crystal", criterion_7),
        ("multisegments", criterion_8),
        ("determinism", criterion_9),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = f();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {} {name} ({secs:.1}s): {detail}", k + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {} {name} ({secs:.1}s): {e}", k + 1)
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
