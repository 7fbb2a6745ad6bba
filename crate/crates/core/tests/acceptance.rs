//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use detident::combinatorics::{check_prop21, recover_g, triangle, GCoefficients, Prop21Kind, TriangleKind};
use detident::recurrence::fib_block_det_check;
use detident::sympoly::{power_sum_direct, power_sum_recurrence, reduce_power, PointSet};
use detident::trials::{
    check_genvand, check_genvand_sign, check_single_gap, check_vand_inverse, check_vand_minor,
    random_distinct_points, random_exponents, random_int_matrix, random_rational_points,
    random_theorem_instance, trial_rng,
};
use detident::seed::verify_theorem;
use detident::vandermonde::vand_inverse;
use detident::{RationalMatrix, Scalar};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;

const LIMIT: Duration = Duration::from_secs(10);
const SEED: u64 = 0x5EED;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn timed(limit: Duration, what: &str, start: Instant) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("{what} took {t:.2?}, limit {limit:?}"))?;
    Ok(t)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    for trial in 0..500u64 {
        let mut rng = trial_rng(SEED, trial);
        let n = rng.gen_range(1..=5);
        let r = rng.gen_range(1..=4);
        let (a, p, deleted) = random_theorem_instance(&mut rng, n, r, 9);
        let rep = verify_theorem(&a, &p, &deleted).map_err(|e| e.to_string())?;
        ensure(rep.holds, || format!("trial {trial}: {} ({} vs {})", rep.description, rep.lhs, rep.rhs))?;
    }
    let t = timed(LIMIT, "500 instances", start)?;
    Ok(format!("500 instances hold in {t:.2?}"))
}

// Fraction-free Gauss-Jordan on [V | I]; every division is exact and the left
// block ends as d*I with d = +-det V.
fn integer_inverse(m: &[Vec<BigInt>]) -> Vec<Vec<Scalar>> {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
            r
        })
        .collect();
    let mut prev = BigInt::one();
    for k in 0..n {
        let p = (k..n).find(|&i| !a[i][k].is_zero()).expect("nonsingular");
        a.swap(k, p);
        for i in 0..n {
            if i == k {
                continue;
            }
            for c in 0..2 * n {
                if c == k {
                    continue;
                }
                let num = &a[k][k] * &a[i][c] - &a[i][k] * &a[k][c];
                let (q, rem) = num.div_rem(&prev);
                assert!(rem.is_zero(), "inexact division");
                a[i][c] = q;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Scalar::new(a[i][n + j].clone(), a[i][i].clone()).expect("nonzero pivot"))
                .collect()
        })
        .collect()
}

fn criterion_2() -> Outcome {
    for trial in 0..300u64 {
        let mut rng = trial_rng(SEED + 2, trial);
        let n = rng.gen_range(1..=6);
        let ps = random_distinct_points(&mut rng, n, 12);
        let rep = check_vand_inverse(&ps).map_err(|e| e.to_string())?;
        ensure(rep.holds, || format!("trial {trial}: {} mismatching entries", rep.lhs))?;
    }
    let ps = PointSet::from_integers(&(1..=64).collect::<Vec<i64>>()).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let w = vand_inverse(&ps).map_err(|e| e.to_string())?;
    let t = timed(LIMIT, "n=64 inverse", start)?;
    let v: Vec<Vec<BigInt>> = (1..=64i64)
        .map(|x| (0..64u32).map(|k| BigInt::from(x).pow(k)).collect())
        .collect();
    let reference = integer_inverse(&v);
    let mismatches = (1..=64)
        .flat_map(|i| (1..=64).map(move |j| (i, j)))
        .filter(|&(i, j)| w.get(i, j) != Some(&reference[i - 1][j - 1]))
        .count();
    ensure(mismatches == 0, || format!("n=64: {mismatches} entries differ from elimination"))?;
    Ok(format!("300 inverses exact; n=64 in {t:.2?}, matches elimination entrywise"))
}

fn criterion_3() -> Outcome {
    let mut checked = 0;
    for n in 2..=6usize {
        for trial in 0..20u64 {
            let mut rng = trial_rng(SEED + 3, n as u64 * 100 + trial);
            // rationals, repeats allowed; the closed form has no division
            let ps = if trial % 2 == 0 {
                random_distinct_points(&mut rng, n, 10)
            } else {
                random_rational_points(&mut rng, n, 6)
            };
            for i in 1..=n {
                for j in 1..=n {
                    let rep = check_vand_minor(&ps, i, j).map_err(|e| e.to_string())?;
                    ensure(rep.holds, || format!("n={n} ({i},{j}): {} vs {}", rep.lhs, rep.rhs))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} minors, zero mismatches"))
}

fn criterion_4() -> Outcome {
    for trial in 0..200u64 {
        let mut rng = trial_rng(SEED + 4, trial);
        let n = rng.gen_range(1..=5);
        let ps = if trial % 3 == 0 {
            random_rational_points(&mut rng, n, 7)
        } else {
            random_distinct_points(&mut rng, n, 9)
        };
        let ks = random_exponents(&mut rng, n, 12);
        for rep in [check_genvand(&ps, &ks), check_genvand_sign(n, &ks)] {
            let rep = rep.map_err(|e| e.to_string())?;
            ensure(rep.holds, || format!("trial {trial}: {} ({} vs {})", rep.description, rep.lhs, rep.rhs))?;
        }
    }
    let mut gaps = 0;
    for n in 1..=5usize {
        let mut rng = trial_rng(SEED + 40, n as u64);
        let ps = random_distinct_points(&mut rng, n, 9);
        for m in n + 1..=n + 6 {
            let rep = check_single_gap(&ps, m).map_err(|e| e.to_string())?;
            ensure(rep.holds, || format!("n={n} m={m}: {} vs {}", rep.lhs, rep.rhs))?;
            gaps += 1;
        }
    }
    Ok(format!("200 pairs factored = oracle with matching sign; {gaps} Hessenberg cases agree"))
}

fn criterion_5() -> Outcome {
    let mut sets = 0;
    for n in 1..=7usize {
        for trial in 0..8u64 {
            let mut rng = trial_rng(SEED + 5, n as u64 * 100 + trial);
            let ps = random_rational_points(&mut rng, n, 9);
            for k in 0..=20 {
                let (d, r) = (power_sum_direct(&ps, k), power_sum_recurrence(&ps, k));
                ensure(d == r, || format!("n={n} k={k}: direct {d} vs recurrence {r}"))?;
            }
            for m in 1..=n {
                let rep = reduce_power(&ps, m).map_err(|e| e.to_string())?;
                ensure(rep.holds, || format!("n={n} m={m}: {}", rep.description))?;
            }
            sets += 1;
        }
    }
    Ok(format!("{sets} point sets, k up to 20, every root reduced"))
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

fn brute_binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

// S(n,k) = (1/k!) sum_i (-1)^i C(k,i) (k-i)^n
fn brute_stirling2(n: usize, k: usize) -> BigInt {
    let sum: BigInt = (0..=k)
        .map(|i| {
            let term = brute_binomial(k, i) * BigInt::from(k - i).pow(n as u32);
            if i % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum();
    sum / factorial(k)
}

// coefficients of the rising factorial x(x+1)...(x+n-1)
fn brute_stirling1_row(n: usize) -> Vec<BigInt> {
    let mut poly = vec![BigInt::one()];
    for t in 0..n {
        let mut next = vec![BigInt::zero(); poly.len() + 1];
        for (d, c) in poly.iter().enumerate() {
            next[d + 1] += c;
            next[d] += c * BigInt::from(t);
        }
        poly = next;
    }
    poly
}

fn brute_f(kind: TriangleKind, n: usize, k: usize) -> BigInt {
    match kind {
        TriangleKind::Binomial => brute_binomial(n, k),
        TriangleKind::Stirling2 => brute_stirling2(n, k),
        TriangleKind::Stirling1Unsigned => brute_stirling1_row(n).get(k).cloned().unwrap_or_default(),
        TriangleKind::Stirling1Signed => {
            let u = brute_stirling1_row(n).get(k).cloned().unwrap_or_default();
            if k <= n && (n - k) % 2 == 1 {
                -u
            } else {
                u
            }
        }
        TriangleKind::Custom => unreachable!(),
    }
}

fn criterion_6() -> Outcome {
    for kind in Prop21Kind::ALL {
        for n in 1..=10 {
            for j in 1..=n {
                let rep = check_prop21(kind, n, j).map_err(|e| e.to_string())?;
                ensure(rep.holds, || rep.description.clone())?;
            }
        }
    }
    let cases: [(TriangleKind, fn(usize, usize) -> BigInt); 4] = [
        (TriangleKind::Binomial, |_, _| BigInt::one()),
        (TriangleKind::Stirling2, brute_binomial),
        (TriangleKind::Stirling1Unsigned, |n, i| factorial(n) / factorial(i)),
        (TriangleKind::Stirling1Signed, |n, i| {
            let v = factorial(n) / factorial(i);
            if (n - i) % 2 == 1 {
                -v
            } else {
                v
            }
        }),
    ];
    for (kind, expected) in cases {
        let t = triangle(kind, 11);
        for n in 0..=11 {
            for k in 0..=11 {
                let (a, b) = (t.f(n, k), brute_f(kind, n, k));
                ensure(a == b, || format!("{kind} f({n},{k}) = {a}, counted {b}"))?;
            }
        }
        for n in 0..=10 {
            for j in 1..=n + 1 {
                let g = recover_g(&t, n, j).map_err(|e| e.to_string())?;
                let want = Scalar::from(expected(n, j - 1));
                ensure(g == want, || format!("{kind} g({n},{}) = {g}, expected {want}", j - 1))?;
            }
            let gs = GCoefficients::recover(&t, n).map_err(|e| e.to_string())?;
            // direct summation against the independently counted triangle
            for k in 0..=n {
                let sum: Scalar = (0..=n).map(|i| &gs.g[i] * Scalar::from(brute_f(kind, i, k))).sum();
                let target = Scalar::from(brute_f(kind, n + 1, k + 1));
                ensure(sum == target, || format!("{kind} n={n} k={k}: sum {sum} vs f(n+1,k+1) {target}"))?;
            }
        }
    }
    Ok("corrected identities hold for 1 <= j <= n <= 10; g recovered for all four triangles".into())
}

fn criterion_7() -> Outcome {
    let mut singular = 0;
    for trial in 0..200u64 {
        let mut rng = trial_rng(SEED + 7, trial);
        let n = rng.gen_range(1..=6);
        let mut a = random_int_matrix(&mut rng, n, n, 9);
        if trial % 4 == 0 {
            // copy a row (or zero the only row) to force det A = 0
            let rows: Vec<Vec<Scalar>> = (1..=n)
                .map(|i| {
                    let src = if n == 1 { None } else if i == n { Some(1) } else { Some(i) };
                    match src {
                        Some(s) => a.row(s).expect("in range").to_vec(),
                        None => vec![Scalar::zero(); n],
                    }
                })
                .collect();
            a = RationalMatrix::from_rows(rows).map_err(|e| e.to_string())?;
        }
        let rep = fib_block_det_check(&a).map_err(|e| e.to_string())?;
        ensure(rep.holds, || format!("trial {trial}: {} vs {}", rep.lhs, rep.rhs))?;
        if rep.rhs.is_zero() {
            singular += 1;
        }
    }
    ensure(singular >= 50, || format!("only {singular} singular instances"))?;
    Ok(format!("200 blocks hold, {singular} singular"))
}

fn run_cli(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_detident"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn criterion_8() -> Outcome {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let cases: [(&[&str], i32, &str); 4] = [
        (&["vand", "inv", "--points", "1,2"], 0, "vand_inv_1_2.json"),
        (&["genvand", "--points", "1,2", "--exponents", "1,3", "--method", "both"], 0, "genvand_both_1_2.json"),
        (&["vand", "inv", "--points", "1,1"], 2, "vand_inv_repeated.json"),
        (
            &["fuzz", "--suite", "seed-theorem", "--trials", "40", "--seed", "2024", "--max-n", "4"],
            0,
            "fuzz_seed_theorem_2024.json",
        ),
    ];
    for (args, code, file) in cases {
        let want = std::fs::read(dir.join(file)).map_err(|e| format!("{file}: {e}"))?;
        let (got_code, got) = run_cli(args);
        ensure(got_code == code, || format!("{file}: exit {got_code}, expected {code}"))?;
        ensure(got == want, || format!("{file}: output differs from golden"))?;
    }
    for suite in ["seed-theorem", "vandermonde", "genvand", "powersum", "prop21", "fib-step"] {
        let args = ["fuzz", "--suite", suite, "--trials", "60", "--seed", "31337", "--max-n", "5"];
        let first = run_cli(&args);
        ensure(first.0 == 0, || format!("fuzz {suite} exit {}", first.0))?;
        ensure(first == run_cli(&args), || format!("fuzz {suite} not reproducible"))?;
    }
    Ok("4 golden files byte-exact; 6 fuzz suites reproducible".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("column-recurrence minor theorem", criterion_1),
        ("Vandermonde inverse", criterion_2),
        ("Vandermonde minors", criterion_3),
        ("generalized Vandermonde", criterion_4),
        ("power sums", criterion_5),
        ("Hessenberg identities for binomial and Stirling numbers", criterion_6),
        ("n-step Fibonacci block determinant", criterion_7),
        ("CLI golden files and reproducibility", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let t = start.elapsed();
        match outcome {
            Ok(msg) => println!("PASS {} {name}: {msg} [{t:.2?}]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {} {name}: {msg} [{t:.2?}]", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
