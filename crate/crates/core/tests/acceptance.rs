//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use precubical::cohomology::{cohomology_groups, cohomology_ring, delta_matrix, CohomologyRing};
use precubical::complex::{cup, Coeff, Cochain};
use precubical::cubical::builders;
use precubical::linalg::{smith_normal_form, IntMatrix};
use precubical::propcheck::{anticommutativity_report, check, cochain_anticommutator, GenConfig, Property};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, format!("took {:.3}s, limit {:.0}s", elapsed.as_secs_f64(), limit.as_secs_f64()))
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Laplace expansion along the first row.
fn laplace(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut acc = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = &m[0][j] * laplace(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn to_rows(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    (0..a.rows()).map(|i| a.row(i).to_vec()).collect()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

/// Invariant factors from determinantal divisors: `D_k` is the gcd of all
/// `k × k` minors and `d_k = D_k / D_{k-1}`.
fn invariant_factors_by_minors(a: &[Vec<BigInt>], rows: usize, cols: usize) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut previous = BigInt::one();
    for k in 1..=rows.min(cols) {
        let mut g = BigInt::zero();
        for rs in combinations(rows, k) {
            for cs in combinations(cols, k) {
                let sub: Vec<Vec<BigInt>> = rs.iter().map(|&r| cs.iter().map(|&c| a[r][c].clone()).collect()).collect();
                g = g.gcd(&laplace(&sub));
            }
        }
        if g.is_zero() {
            break;
        }
        out.push(&g / &previous);
        previous = g;
    }
    out
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let x = builders::torus();
    let ranks = x.cube_counts();
    ensure(ranks == vec![1, 2, 1], format!("ranks {ranks:?}"))?;
    let d0 = delta_matrix(&x, 0, &Coeff::Integers);
    let d1 = delta_matrix(&x, 1, &Coeff::Integers);
    ensure((d0.rows(), d0.cols()) == (2, 1) && d0.is_zero(), format!("δ^0 = {d0:?}"))?;
    ensure((d1.rows(), d1.cols()) == (1, 2) && d1.is_zero(), format!("δ^1 = {d1:?}"))?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("ranks 1,2,1, δ^0 = δ^1 = 0, {:.3}s", start.elapsed().as_secs_f64()))
}

fn criterion_2() -> Outcome {
    let groups = cohomology_groups(&builders::torus(), &Coeff::Integers).map_err(|e| e.to_string())?;
    let shown: Vec<String> = groups.iter().map(ToString::to_string).collect();
    ensure(shown == ["Z", "Z^2", "Z"], format!("got {shown:?}"))?;
    ensure(groups.iter().all(|g| g.torsion().is_empty()), "unexpected torsion")?;
    Ok(shown.join(", "))
}

/// Degree-one generators square to zero and anticommute, and the products
/// `g_i g_j` (i < j) form a basis of `H^2`.
fn exterior_in_degree_two(hr: &CohomologyRing, n: usize) -> Result<(), String> {
    let h1 = &hr.groups[1];
    let h2 = &hr.groups[2];
    ensure(h1.generator_count() == n && h1.torsion().is_empty(), format!("H^1 = {h1}"))?;
    let pairs = n * (n - 1) / 2;
    ensure(h2.generator_count() == pairs && h2.torsion().is_empty(), format!("H^2 = {h2}"))?;
    let mut columns = Vec::new();
    for i in 0..n {
        let sq = hr.table.product(1, i, 1, i);
        ensure(sq.iter().all(Zero::is_zero), format!("g{i}^2 = {sq:?}"))?;
        for j in i + 1..n {
            let ab = hr.table.product(1, i, 1, j).to_vec();
            let ba: Vec<BigInt> = hr.table.product(1, j, 1, i).iter().map(|c| -c).collect();
            ensure(ab == ba, format!("g{i} g{j} = {ab:?} but g{j} g{i} = -{ba:?}"))?;
            columns.push(ab);
        }
    }
    let m: Vec<Vec<BigInt>> = (0..pairs).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
    let det = laplace(&m);
    ensure(det.abs().is_one(), format!("degree-2 products have determinant {det}"))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let x = builders::torus();
    let z = Coeff::Integers;
    let v = x.find(2, "v").unwrap();
    let alpha = Cochain::dual(&x, x.find(1, "t2").unwrap(), z.clone()).map_err(|e| e.to_string())?;
    let beta = Cochain::dual(&x, x.find(1, "t1").unwrap(), z.clone()).map_err(|e| e.to_string())?;
    let c = |a: &Cochain<Coeff>, b: &Cochain<Coeff>| cup(&x, a, b).map(|p| p.value(v).clone()).map_err(|e| e.to_string());
    let (ab, ba, aa, bb) = (c(&alpha, &beta)?, c(&beta, &alpha)?, c(&alpha, &alpha)?, c(&beta, &beta)?);
    ensure(ab.abs().is_one() && ba == -&ab, format!("(α⌣β)(v) = {ab}, (β⌣α)(v) = {ba}"))?;
    ensure(aa.is_zero() && bb.is_zero(), format!("α⌣α = {aa}, β⌣β = {bb}"))?;
    let hr = cohomology_ring(&x, &z).map_err(|e| e.to_string())?;
    exterior_in_degree_two(&hr, 2)?;
    ensure(hr.unit_class(&x).map_err(|e| e.to_string())? == vec![int(1)], "unit class")?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!(
        "(α⌣β)(v) = {ab}, (β⌣α)(v) = {ba}, squares 0, exterior on 2 generators, {:.3}s",
        start.elapsed().as_secs_f64()
    ))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let x = builders::tensor_product(&builders::torus(), &builders::circle());
    let hr = cohomology_ring(&x, &Coeff::Integers).map_err(|e| e.to_string())?;
    let betti = hr.betti_numbers();
    ensure(betti == vec![1, 3, 3, 1], format!("Betti numbers {betti:?}"))?;
    ensure(hr.groups.iter().all(|g| g.torsion().is_empty()), "unexpected torsion")?;
    exterior_in_degree_two(&hr, 3)?;
    // The pairing H^1 × H^2 → H^3 is perfect, and g1 g2 g3 generates H^3.
    let pairing: Vec<Vec<BigInt>> = (0..3)
        .map(|i| (0..3).map(|j| hr.table.product(1, i, 2, j)[0].clone()).collect())
        .collect();
    let det = laplace(&pairing);
    ensure(det.abs().is_one(), format!("H^1 × H^2 pairing has determinant {det}"))?;
    let e = |i: usize| (0..3).map(|k| int((k == i) as i64)).collect::<Vec<_>>();
    let g12 = hr.table.multiply(&hr.groups, 1, &e(0), 1, &e(1));
    let triple = hr.table.multiply(&hr.groups, 2, &g12, 1, &e(2));
    ensure(triple.len() == 1 && triple[0].abs().is_one(), format!("g1 g2 g3 = {triple:?}"))?;
    within(start.elapsed(), Duration::from_secs(5))?;
    Ok(format!("Betti 1,3,3,1, exterior on 3 generators, triple product {}, {:.3}s", triple[0], start.elapsed().as_secs_f64()))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let mut runs = 0;
    let mut instances = 0;
    for ring in [Coeff::Integers, Coeff::IntegersMod(2), Coeff::IntegersMod(6)] {
        for property in Property::asserted() {
            let mut count = 0;
            for seed in 0..5 {
                let cfg = GenConfig { seed, ring: ring.clone(), ..GenConfig::default() };
                ensure(cfg.max_dim == 3, "max dim")?;
                let r = check(property, &cfg, 20).map_err(|e| e.to_string())?;
                ensure(r.passed(), format!("{r}"))?;
                count += r.trials;
            }
            ensure(count >= 100, format!("{property}: only {count} instances"))?;
            runs += 1;
            instances += count;
        }
    }
    within(start.elapsed(), Duration::from_secs(60))?;
    Ok(format!("{runs} property/ring pairs, {instances} instances, 0 failures, {:.2}s", start.elapsed().as_secs_f64()))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut count = 0;
    for m in 1..=4 {
        for n in 1..=4 {
            for k in 0..70 {
                // Every third matrix is sparse, to reach low ranks.
                let zero_prob = if k % 3 == 0 { 0.6 } else { 0.0 };
                let rows: Vec<Vec<i64>> = (0..m)
                    .map(|_| {
                        (0..n)
                            .map(|_| if rng.gen_bool(zero_prob) { 0 } else { rng.gen_range(-9..=9) })
                            .collect()
                    })
                    .collect();
                let a = IntMatrix::from_rows(&rows);
                let f = smith_normal_form(&a);
                ensure(f.u.mul(&a).mul(&f.v) == f.s, format!("UAV ≠ S for {a:?}"))?;
                for i in 0..m {
                    for j in 0..n {
                        ensure(i == j || f.s[(i, j)].is_zero(), format!("S not diagonal for {a:?}"))?;
                    }
                }
                ensure(laplace(&to_rows(&f.u)).abs().is_one(), format!("|det U| ≠ 1 for {a:?}"))?;
                ensure(laplace(&to_rows(&f.v)).abs().is_one(), format!("|det V| ≠ 1 for {a:?}"))?;
                let diag: Vec<BigInt> = (0..m.min(n)).map(|i| f.s[(i, i)].clone()).collect();
                for w in diag.windows(2) {
                    ensure(
                        (w[0].is_zero() && w[1].is_zero()) || (!w[0].is_zero() && (&w[1] % &w[0]).is_zero()),
                        format!("divisibility chain broken: {diag:?}"),
                    )?;
                }
                let nonzero: Vec<BigInt> = diag.iter().filter(|d| !d.is_zero()).map(|d| d.abs()).collect();
                let oracle = invariant_factors_by_minors(&to_rows(&a), m, n);
                ensure(nonzero == oracle, format!("{a:?}: SNF {nonzero:?}, minors {oracle:?}"))?;
                count += 1;
            }
        }
    }
    ensure(count >= 1000, format!("only {count} matrices"))?;
    within(start.elapsed(), Duration::from_secs(30))?;
    Ok(format!("{count} matrices up to 4x4 agree with the gcd-of-minors oracle, {:.2}s", start.elapsed().as_secs_f64()))
}

fn criterion_7() -> Outcome {
    let x = builders::standard_cube(2);
    let z = Coeff::Integers;
    let u = x.find(2, "**").unwrap();
    let phi = Cochain::dual(&x, x.find(1, "*0").unwrap(), z.clone()).map_err(|e| e.to_string())?;
    let psi = Cochain::dual(&x, x.find(1, "1*").unwrap(), z.clone()).map_err(|e| e.to_string())?;
    let ab = cup(&x, &phi, &psi).map_err(|e| e.to_string())?.value(u).clone();
    let ba = cup(&x, &psi, &phi).map_err(|e| e.to_string())?.value(u).clone();
    ensure(ab == int(1) && ba.is_zero(), format!("φ⌣ψ = {ab}, ψ⌣φ = {ba}"))?;
    let anti = cochain_anticommutator(&x, &phi, &psi).map_err(|e| e.to_string())?;
    ensure(!anti.is_zero(), "anticommutator vanished")?;
    let report = anticommutativity_report(&builders::torus(), &z, 100, 0).map_err(|e| e.to_string())?;
    ensure(report.agreement() == 1.0, format!("{report}"))?;
    let pct = report.agreement() * 100.0;
    Ok(format!("cochain level: φ⌣ψ = {ab}, ψ⌣φ = {ba}; torus classes: {pct:.0}% agreement over {} trials", report.trials))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("torus cochain complex", criterion_1),
        ("torus cohomology", criterion_2),
        ("torus ring", criterion_3),
        ("3-torus ring", criterion_4),
        ("identity suite", criterion_5),
        ("Smith normal form", criterion_6),
        ("anticommutativity", criterion_7),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
