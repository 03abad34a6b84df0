//! Acceptance criteria, one line each. Every comparison is exact; the only
//! tolerances are the wall-clock limits stated per criterion.
//!
//! Run with `cargo test --test acceptance`.

mod common;

use std::ops::RangeInclusive;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use arbor::algebra::{charpoly, determinant, Polynomial};
use arbor::cli::{cmd_verify, RunConfig};
use arbor::dynamics::{all_cycles, lemma1_oracle, oriented_matrix, VertexMap};
use arbor::figures::{self, Fixture};
use arbor::sampling::keyed_rng;
use arbor::sweep::{run_verify, OrientationMode, SweepConfig};
use arbor::theorems::{
    apply_row_ops, basis_witness, coprime_pairs, lemma3_residues, petrie_check,
    prop1_case1_check, prop1_case2_check, zp_similarity, Prop1Outcome,
};
use arbor::tree::{decode_prufer, enumerate_trees, Orientation, Tree};

use common::*;

const FIGURE_LIMIT: Duration = Duration::from_secs(1);
const SWEEP_LIMIT: Duration = Duration::from_secs(600);
const SWEEP_WORKERS: usize = 8;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn big(coeffs: &[i64]) -> Vec<BigInt> {
    coeffs.iter().map(|&c| BigInt::from(c)).collect()
}

/// Oriented charpoly is the geometric polynomial, the determinant is the
/// sign, and `|A|` has the caption polynomial, each by two routes.
fn check_figure(fx: &Fixture) -> Result<(), String> {
    let n = fx.n;
    let a = fx.oriented.to_i64_rows();
    let b = fx.oriented.abs().to_i64_rows();
    let geometric = vec![BigInt::from(1); n + 1];
    let sign = if n % 2 == 0 { 1 } else { -1 };

    let cp_a = charpoly(&fx.oriented).map_err(err)?;
    ensure(big(&cp_a.to_i64_vec()) == geometric, || format!("{}: charpoly(A) = {cp_a}", fx.figure))?;
    ensure(charpoly_by_interpolation(&a) == geometric, || format!("{}: oracle charpoly(A)", fx.figure))?;
    let det = determinant(&fx.oriented).map_err(err)?;
    ensure(det == sign && bareiss_det(&a) == BigInt::from(sign), || {
        format!("{}: det A = {det}", fx.figure)
    })?;
    let cp_b = charpoly(&fx.oriented.abs()).map_err(err)?;
    ensure(cp_b == fx.caption_charpoly, || {
        format!("{}: charpoly(|A|) = {cp_b}, caption {}", fx.figure, fx.caption_charpoly)
    })?;
    ensure(
        charpoly_by_interpolation(&b) == big(&fx.caption_charpoly.to_i64_vec()),
        || format!("{}: oracle charpoly(|A|) differs from caption", fx.figure),
    )?;
    let rep = figures::reproduce(fx).map_err(err)?;
    rep.require_match().map_err(err)
}

fn timed_figures(ids: &[&str]) -> Outcome {
    let t0 = Instant::now();
    for id in ids {
        check_figure(&figures::builtin(id).map_err(err)?)?;
    }
    let dt = t0.elapsed();
    ensure(dt < FIGURE_LIMIT, || format!("took {dt:.2?}"))?;
    Ok(format!("{} matrices in {dt:.2?}", ids.len()))
}

fn criterion_1() -> Outcome {
    timed_figures(&["1a", "1b", "1c", "1d", "1e", "1f"])
}

fn criterion_2() -> Outcome {
    timed_figures(&["2a", "2b", "3a", "3b"])
}

fn criterion_3() -> Outcome {
    let fx = figures::builtin("4").map_err(err)?;
    let r = fx.operator.as_ref().ok_or("no operator block")?;
    let b = fx.unoriented.as_ref().ok_or("no unoriented block")?;
    ensure(r.mul(b).map_err(err)? == fx.oriented, || "R·B != A".into())?;
    ensure(
        mat_mul(&r.to_i64_rows(), &b.to_i64_rows()) == fx.oriented.to_i64_rows(),
        || "oracle R·B != A".into(),
    )?;
    ensure(*b == fx.oriented.abs(), || "printed B is not |A|".into())?;
    let want = Polynomial::from_i64((), &[1, 3, -1, -3, -1, 1]);
    let cp = charpoly(b).map_err(err)?;
    ensure(cp == want && fx.caption_charpoly == want, || format!("charpoly(B) = {cp}"))?;
    ensure(charpoly_by_interpolation(&b.to_i64_rows()) == big(&want.to_i64_vec()), || {
        "oracle charpoly(B) differs".into()
    })?;
    Ok(format!("R·B = A entrywise; charpoly(B) = {cp}"))
}

fn sweep(range: RangeInclusive<usize>, mode: OrientationMode) -> Result<(u64, u64), String> {
    let mut cfg = SweepConfig::new(range, mode);
    cfg.seed = 7;
    cfg.workers = SWEEP_WORKERS;
    let s = run_verify(&cfg).map_err(err)?;
    if let Some(f) = s.failures.first() {
        return Err(format!("{}: {} ({})", f.id, f.claim, f.detail));
    }
    Ok((s.total_instances, s.total_failed))
}

fn criterion_4() -> Outcome {
    let t0 = Instant::now();
    // 3..6 vertices, every orientation
    let (small, f1) = sweep(2..=5, OrientationMode::All)?;
    // 7..8 vertices, canonical plus 16 seeded
    let (large, f2) = sweep(6..=7, OrientationMode::Sample(16))?;
    ensure(f1 + f2 == 0, || format!("{} failures", f1 + f2))?;
    // exhaustive counts: Σ trees · n! · 2^n, then Σ trees · n! · 17
    ensure(small == 2 * 4 + 2 * 6 * 8 + 3 * 24 * 16 + 6 * 120 * 32, || format!("{small} instances"))?;
    ensure(large == 11 * 720 * 17 + 23 * 5040 * 17, || format!("{large} instances"))?;
    // spot the oracle on every 3..5-vertex instance
    for v in 3..=5 {
        for tree in enumerate_trees(v).map_err(err)? {
            for image in all_cycles(v) {
                for mask in 0..1u64 << (v - 1) {
                    let reversed: Vec<bool> = (0..v - 1).map(|i| mask >> i & 1 == 1).collect();
                    let a = oriented_matrix_oracle(v, tree.edges(), &reversed, &image);
                    let b: Vec<Vec<i64>> = a.iter().map(|r| r.iter().map(|x| x.abs()).collect()).collect();
                    ensure(charpoly_by_interpolation(&a) == vec![BigInt::from(1); v], || {
                        format!("oracle charpoly on {tree:?} {image:?}")
                    })?;
                    ensure(charpoly_by_interpolation(&b).iter().all(is_odd), || {
                        format!("oracle parity on {tree:?} {image:?}")
                    })?;
                    ensure(commutant_dimension(&b, 2) == v - 1, || {
                        format!("oracle Z_2 cyclicity on {tree:?} {image:?}")
                    })?;
                }
            }
        }
    }
    let dt = t0.elapsed();
    ensure(dt < SWEEP_LIMIT, || format!("took {dt:.2?}"))?;
    Ok(format!("{} instances, 0 failures, {dt:.1?} ({SWEEP_WORKERS} workers requested)", small + large))
}

fn every_instance(max_n: usize, mut visit: impl FnMut(&VertexMap, &Orientation) -> Result<(), String>) -> Result<usize, String> {
    let mut count = 0;
    for v in 3..=max_n + 1 {
        for tree in enumerate_trees(v).map_err(err)? {
            let tree = Arc::new(tree);
            for image in all_cycles(v) {
                let f = VertexMap::new(Arc::clone(&tree), image).map_err(err)?;
                for o in Orientation::all(v - 1) {
                    visit(&f, &o)?;
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

fn criterion_5() -> Outcome {
    let mut witnesses = 0;
    let instances = every_instance(5, |f, o| {
        let n = f.tree().edge_count();
        let a = oriented_matrix(f, o).map_err(err)?.oriented;
        let a_rows = a.to_i64_rows();
        let c = arbor::algebra::companion::<i64>((), n).map_err(err)?.to_i64_rows();
        for start in 1..=n + 1 {
            for (_, j) in coprime_pairs(n).into_iter().filter(|&(s, _)| s == 1) {
                let w = basis_witness(f, o, start, j).map_err(|e| format!("{}: {e}", f.image_string()))?;
                w.check_rational_conjugation(&a).map_err(err)?;
                let mf = w.mf.to_i64_rows();
                ensure(is_odd(&bareiss_det(&mf)), || "oracle det Mf even".into())?;
                ensure(mat_mul(&mf, &a_rows) == mat_mul(&c, &mf), || "oracle Mf·A != C·Mf".into())?;
                witnesses += 1;
            }
        }
        Ok(())
    })?;
    Ok(format!("{instances} instances, {witnesses} (i, j) witnesses"))
}

fn lemma1_by_paths(f: &VertexMap, o: &Orientation) -> bool {
    let t = f.tree();
    let v = t.vertex_count();
    let reversed: Vec<bool> = (0..v - 1).map(|i| o.is_reversed(i)).collect();
    let a = oriented_matrix_oracle(v, t.edges(), &reversed, f.image());
    (1..=v).all(|x| {
        (1..=v).all(|y| {
            let w = signed_path(v, t.edges(), &reversed, x, y);
            let phi: Vec<i64> = (0..v - 1).map(|j| (0..v - 1).map(|i| w[i] * a[i][j]).sum()).collect();
            phi == signed_path(v, t.edges(), &reversed, f.apply(x), f.apply(y))
        })
    })
}

fn criterion_6() -> Outcome {
    let exhaustive = every_instance(5, |f, o| {
        ensure(lemma1_oracle(f, o).map_err(err)?, || format!("{} {}", f.image_string(), o.to_bits()))?;
        ensure(lemma1_by_paths(f, o), || format!("paths: {} {}", f.image_string(), o.to_bits()))
    })?;
    use rand::seq::SliceRandom;
    use rand::Rng;
    let mut rng = keyed_rng(7, "lemma1 random instances");
    for _ in 0..1000 {
        let n = rng.gen_range(6..=9);
        let v = n + 1;
        let code: Vec<usize> = (0..v - 2).map(|_| rng.gen_range(1..=v)).collect();
        let tree = Arc::new(decode_prufer(&code, v).map_err(err)?);
        let mut cycle: Vec<usize> = (2..=v).collect();
        cycle.shuffle(&mut rng);
        cycle.insert(0, 1);
        let f = VertexMap::from_cycle(tree, &cycle).map_err(err)?;
        let o = Orientation::from_mask(n, rng.gen_range(0..1u64 << n));
        ensure(lemma1_oracle(&f, &o).map_err(err)?, || format!("random {}", f.image_string()))?;
        ensure(lemma1_by_paths(&f, &o), || format!("random paths {}", f.image_string()))?;
    }
    Ok(format!("{exhaustive} exhaustive + 1000 random instances"))
}

fn criterion_7() -> Outcome {
    let mut pairs = 0;
    for m in 3..=50usize {
        let n = m - 1;
        for j in 1..=n {
            let got = lemma3_residues(j, n).map_err(err)?;
            ensure(got == orbit_residues(j, m), || format!("j = {j}, n + 1 = {m}"))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} (j, n) pairs"))
}

fn criterion_8() -> Outcome {
    let mut witnesses = 0;
    let mut case1 = 0;
    for n in 2..=6 {
        let tree = Arc::new(Tree::path(n + 1).map_err(err)?);
        let o = Orientation::canonical(n);
        for image in all_cycles(n + 1) {
            let f = VertexMap::new(Arc::clone(&tree), image).map_err(err)?;
            for start in 1..=n + 1 {
                for (_, j) in coprime_pairs(n).into_iter().filter(|&(s, _)| s == 1) {
                    let w = basis_witness(&f, &o, start, j).map_err(err)?;
                    ensure(petrie_check(&w.mf), || format!("Mf not Petrie: {} [{start}, j={j}]", f.image_string()))?;
                    ensure(w.abs_det() == 1, || format!("|det Mf| = {}", w.abs_det()))?;
                    witnesses += 1;
                }
            }
            ensure(prop1_case1_check(&f, &o).map_err(err)?, || format!("case 1 fails on {}", f.image_string()))?;
            case1 += 1;
        }
    }
    let mut derived = 0;
    let mut not_applicable = 0;
    let total = every_instance(5, |f, o| {
        match prop1_case2_check(f, o).map_err(err)? {
            Prop1Outcome::Derived(d) => {
                let m = oriented_matrix(f, o).map_err(err)?;
                ensure(apply_row_ops(&m.unoriented, &d.ops) == m.oriented, || "row ops".into())?;
                ensure(
                    mat_mul(&d.operator.to_i64_rows(), &m.unoriented.to_i64_rows()) == m.oriented.to_i64_rows(),
                    || "operator".into(),
                )?;
                ensure(bareiss_det(&m.unoriented.to_i64_rows()).magnitude() == &1u32.into(), || {
                    "|det B| != 1".into()
                })?;
                derived += 1;
            }
            Prop1Outcome::NotApplicable(_) => not_applicable += 1,
        }
        Ok(())
    })?;
    ensure(derived > 0 && not_applicable > 0, || "row-reduction check was vacuous".into())?;
    Ok(format!(
        "{witnesses} path witnesses Petrie with |det| = 1; case 1 on {case1} path maps; \
         case 2 derived on {derived} of {total} instances, all exact"
    ))
}

fn criterion_9() -> Outcome {
    let a = figures::builtin("1a").map_err(err)?.oriented.abs();
    let f = figures::builtin("1f").map_err(err)?.oriented.abs();
    let z2 = zp_similarity(&a, &f, 2).map_err(err)?;
    let z3 = zp_similarity(&a, &f, 3).map_err(err)?;
    ensure(z2 && !z3, || format!("similar over Z_2: {z2}, over Z_3: {z3}"))?;
    // oracle: same charpoly mod 2 and both cyclic there; charpolys differ mod 3
    let (ar, fr) = (a.to_i64_rows(), f.to_i64_rows());
    let (ca, cf) = (charpoly_by_interpolation(&ar), charpoly_by_interpolation(&fr));
    ensure(poly_mod(&ca, 2) == poly_mod(&cf, 2), || "oracle: charpolys differ mod 2".into())?;
    ensure(commutant_dimension(&ar, 2) == 5 && commutant_dimension(&fr, 2) == 5, || {
        "oracle: not cyclic mod 2".into()
    })?;
    ensure(poly_mod(&ca, 3) != poly_mod(&cf, 3), || "oracle: charpolys agree mod 3".into())?;
    Ok("similar over Z_2, not over Z_3".into())
}

fn criterion_10() -> Outcome {
    let run = |workers: usize| -> Result<String, String> {
        let cfg = RunConfig {
            n_range: Some(2..=6),
            orientations: OrientationMode::Sample(16),
            seed: 7,
            workers,
            ..RunConfig::default()
        };
        let out = cmd_verify(&cfg).map_err(err)?;
        ensure(out.status == 0, || "verify reported failures".into())?;
        Ok(out.json)
    };
    let one = run(1)?;
    let eight = run(8)?;
    ensure(one == eight, || "JSON differs between 1 and 8 workers".into())?;
    Ok(format!("{} bytes identical across 1 and 8 workers", one.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("Fixtures 1a-1f: charpolys, determinants, captions", criterion_1),
        ("Fixtures 2a-3b: charpolys and captions", criterion_2),
        ("Fixture 4: product identity and charpoly", criterion_3),
        ("Exhaustive theorem sweep, 3..8 vertices", criterion_4),
        ("Basis witness for every instance with n <= 5 and every (i, j)", criterion_5),
        ("Path transport: exhaustive n <= 5 and 1000 random 6 <= n <= 9", criterion_6),
        ("Orbit residue identity for 3 <= n+1 <= 50", criterion_7),
        ("Petrie basis matrices and row-reduction detectors", criterion_8),
        ("Fixtures 1a and 1f: similar over Z_2, not over Z_3", criterion_9),
        ("Byte-identical verify output across worker counts", criterion_10),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let outcome = run();
        let dt = t0.elapsed();
        match outcome {
            Ok(detail) => println!("PASS  {:>2}. {name} — {detail} [{dt:.2?}]", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {:>2}. {name} — {detail} [{dt:.2?}]", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
