//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::time::Instant;

use num_traits::{One, Zero};
use radix_core::arith::{
    depress_quartic, factor_degree_pattern, is_squarefree, rat, reduce_mod_p, DepressedQuartic,
    Polynomial, Rational,
};
use radix_core::galois::{
    group_closure, is_solvable, is_solvable_quintic_type, quintic_verdict, Permutation,
    SolvabilityVerdict,
};
use radix_core::numeric::BigFloat;
use radix_core::oracle::{durand_kerner, match_roots, residual, verify_solution_set};
use radix_core::parse::parse_polynomial;
use radix_core::radical::{eval_numeric, simplify, ComplexApprox, RadicalExpr};
use radix_core::solve::{
    classify_quartic, euler_resolvent, ferrari_resolvent_from_square, solve_any, solve_cubic,
    solve_quartic_euler, solve_quartic_ferrari, MethodPreference, RootClass,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const BITS: u32 = 128;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn pow2(k: i64) -> BigFloat {
    BigFloat::one(64).mul_pow2(k)
}

fn log2(x: &BigFloat) -> String {
    if x.is_zero() {
        "0 (exact)".to_string()
    } else {
        format!("2^{:.1}", x.log2_abs())
    }
}

fn values(roots: &[RadicalExpr]) -> Result<Vec<ComplexApprox>, String> {
    roots
        .iter()
        .map(|r| eval_numeric(r, BITS).map_err(|e| e.to_string()))
        .collect()
}

fn closest(roots: &[ComplexApprox], target: &ComplexApprox) -> BigFloat {
    roots
        .iter()
        .map(|r| r.distance(&target.value()))
        .fold(None, |m: Option<BigFloat>, d| match m {
            Some(m) if m <= d => Some(m),
            _ => Some(d),
        })
        .expect("nonempty root list")
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-40..=40), rng.gen_range(1..=12))
}

fn bhaskara() -> Outcome {
    let f = parse_polynomial("x^4 - 2x^2 - 400x = 9999")
        .map_err(|e| e.to_string())?
        .polynomial;
    let set = solve_any(&f, MethodPreference::Auto).map_err(|e| e.to_string())?;
    let eleven = RadicalExpr::int(11);
    if set.roots.iter().any(|r| simplify(r) == eleven) {
        return Ok("root simplifies to 11".into());
    }
    let target = eval_numeric(&eleven, BITS).unwrap();
    let d = closest(&values(&set.roots)?, &target);
    if d <= pow2(-100) {
        Ok(format!("distance from 11 is {}", log2(&d)))
    } else {
        Err(format!("distance from 11 is {}", log2(&d)))
    }
}

fn pacioli() -> Outcome {
    let f = parse_polynomial("x^4+2x^3+3x^2+2x=81600")
        .map_err(|e| e.to_string())?
        .polynomial;
    let set = solve_any(&f, MethodPreference::Auto).map_err(|e| e.to_string())?;
    let displayed = RadicalExpr::add(vec![
        RadicalExpr::constant(rat(-1, 2)),
        RadicalExpr::sqrt(RadicalExpr::add(vec![
            RadicalExpr::constant(rat(-3, 4)),
            RadicalExpr::sqrt(RadicalExpr::int(81601)),
        ])),
    ]);
    let target = eval_numeric(&displayed, BITS).unwrap();
    let d = closest(&values(&set.roots)?, &target);
    if d <= pow2(-100) {
        Ok(format!(
            "root {target}, distance from the reference {}",
            log2(&d)
        ))
    } else {
        Err(format!("distance from {target} is {}", log2(&d)))
    }
}

fn ferrari_golden() -> Outcome {
    let f = parse_polynomial("x^4+6x^2+36=60x")
        .map_err(|e| e.to_string())?
        .polynomial;
    let expected = Polynomial::from_ints(&[-450, 36, 15, 1]);
    let resolvent = ferrari_resolvent_from_square(&f)
        .map_err(|e| e.to_string())?
        .ok_or("constant term not recognised as a square")?;
    if resolvent != expected {
        return Err(format!("resolvent {resolvent}"));
    }
    let set = solve_quartic_ferrari(&f).map_err(|e| e.to_string())?;
    if set.roots.len() != 4 {
        return Err(format!("{} roots", set.roots.len()));
    }
    let worst = values(&set.roots)?
        .iter()
        .map(|v| residual(&f, &v.value().with_prec(BITS)))
        .fold(BigFloat::zero(64), |m, r| if r > m { r } else { m });
    if worst <= pow2(-100) {
        Ok(format!(
            "resolvent y^3+15y^2+36y-450, max residual 2^{:.1}",
            worst.log2_abs()
        ))
    } else {
        Err(format!("max residual 2^{:.1}", worst.log2_abs()))
    }
}

fn euler_formula() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for i in 0..1000 {
        let (p, q, r) = (
            small_rational(&mut rng),
            small_rational(&mut rng),
            small_rational(&mut rng),
        );
        let got = euler_resolvent(&DepressedQuartic::new(p.clone(), q.clone(), r.clone()));
        let want = [
            -(&q * &q) / rat(64, 1),
            &p * &p / rat(16, 1) - &r / rat(4, 1),
            &p / rat(2, 1),
            Rational::one(),
        ];
        if got.coeffs() != want {
            return Err(format!("case {i}: p={p} q={q} r={r} gave {got}"));
        }
    }
    Ok("1000 random (p, q, r) match coefficientwise".into())
}

fn cardano() -> Outcome {
    let set = solve_cubic(&Polynomial::from_ints(&[-20, 6, 0, 1])).map_err(|e| e.to_string())?;
    let two = eval_numeric(&RadicalExpr::int(2), BITS).unwrap();
    let d = closest(&values(&set.roots)?, &two);
    if d > pow2(-100) {
        return Err(format!(
            "x^3+6x-20: closest root 2^{:.1} from 2",
            d.log2_abs()
        ));
    }
    let set = solve_cubic(&Polynomial::from_ints(&[-4, -15, 0, 1])).map_err(|e| e.to_string())?;
    if !set.casus_irreducibilis {
        return Err("x^3-15x-4 not flagged as casus irreducibilis".into());
    }
    let s3 = 3f64.sqrt();
    let expected = [4.0, -2.0 + s3, -2.0 - s3];
    let got = values(&set.roots)?;
    for e in expected {
        let target = BigFloat::from_f64(e, 64);
        let hit = got.iter().any(|v| {
            v.im.abs().to_f64() < 1e-30 && (v.re.to_f64() - target.to_f64()).abs() < 1e-12
        });
        if !hit {
            return Err(format!("x^3-15x-4 has no root near {e}"));
        }
    }
    Ok(format!(
        "x^3+6x-20 root at distance {} from 2; x^3-15x-4 casus with roots 4, -2±√3",
        log2(&d)
    ))
}

/// Real roots of a squarefree polynomial according to the oracle.
fn oracle_real_count(f: &Polynomial) -> Result<usize, String> {
    let roots = durand_kerner(f, BITS).map_err(|e| e.to_string())?;
    let cutoff = pow2(-64);
    Ok(roots
        .iter()
        .filter(|r| r.im.abs() <= r.error_radius.add(&cutoff))
        .count())
}

fn classification() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut seen = [0usize; 3];
    let mut cases = 0;
    while cases < 500 {
        let p = rat(rng.gen_range(-20..=20), 1);
        let q = rat(rng.gen_range(-20..=20), 1);
        let r = rat(rng.gen_range(-20..=20), 1);
        let d = DepressedQuartic::new(p, q, r);
        let f = d.to_polynomial();
        if d.q.is_zero() || !is_squarefree(&f) {
            continue;
        }
        cases += 1;
        let class = classify_quartic(&d).map_err(|e| e.to_string())?;
        let real = oracle_real_count(&f)?;
        if class.real_roots() != real {
            return Err(format!(
                "{f}: classified {class}, oracle finds {real} real roots"
            ));
        }
        seen[match class {
            RootClass::FourReal => 0,
            RootClass::TwoRealTwoComplex => 1,
            RootClass::TwoConjugatePairs => 2,
        }] += 1;
    }
    Ok(format!(
        "500/500 agree (four_real {}, two_real_two_complex {}, two_conjugate_pairs {})",
        seen[0], seen[1], seen[2]
    ))
}

fn method_agreement() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut cases = 0;
    let mut worst = BigFloat::zero(64);
    while cases < 500 {
        let mut c: Vec<i64> = (0..4).map(|_| rng.gen_range(-20..=20)).collect();
        c.push(1);
        let f = Polynomial::from_ints(&c);
        let d = depress_quartic(&f).map_err(|e| e.to_string())?;
        if d.q.is_zero() || !is_squarefree(&f) {
            continue;
        }
        cases += 1;
        let ferrari = solve_quartic_ferrari(&f).map_err(|e| format!("{f}: {e}"))?;
        let euler = solve_quartic_euler(&d).map_err(|e| format!("{f}: {e}"))?;
        let a = values(&ferrari.roots)?;
        let b = values(&euler.roots)?;
        let (pairs, _) = match_roots(&a, &b, &pow2(-64));
        for p in pairs {
            if p.distance > pow2(-64) {
                return Err(format!(
                    "{f}: roots differ by 2^{:.1}",
                    p.distance.log2_abs()
                ));
            }
            if p.distance > worst {
                worst = p.distance;
            }
        }
    }
    Ok(format!(
        "500 quartics, largest pairing distance {}",
        log2(&worst)
    ))
}

fn galois() -> Outcome {
    let f = Polynomial::from_ints(&[2, -4, 0, 0, 0, 1]);
    match quintic_verdict(&f, 50).map_err(|e| e.to_string())? {
        SolvabilityVerdict::NotSolvableByRadicals { prime, cycle_type } => {
            let pattern = reduce_mod_p(&f, prime)
                .and_then(|g| factor_degree_pattern(&g))
                .map_err(|e| e.to_string())?;
            if pattern != cycle_type || is_solvable_quintic_type(&cycle_type) {
                return Err(format!(
                    "witness p={prime} {cycle_type} does not check out ({pattern})"
                ));
            }
        }
        other => return Err(format!("x^5-4x+2 gave {other}")),
    }
    let cyc = |n: usize, cycles: &[&[usize]]| Permutation::from_cycles(n, cycles).unwrap();
    let five = cyc(5, &[&[0, 1, 2, 3, 4]]);
    let groups = [
        ("S5", vec![five.clone(), cyc(5, &[&[0, 1]])], 120, false),
        ("A5", vec![five.clone(), cyc(5, &[&[0, 1, 2]])], 60, false),
        (
            "S4",
            vec![cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 1]])],
            24,
            true,
        ),
        (
            "S3",
            vec![cyc(3, &[&[0, 1, 2]]), cyc(3, &[&[0, 1]])],
            6,
            true,
        ),
        (
            "D5",
            vec![five.clone(), cyc(5, &[&[1, 4], &[2, 3]])],
            10,
            true,
        ),
        (
            "F20",
            vec![five.clone(), cyc(5, &[&[1, 2, 4, 3]])],
            20,
            true,
        ),
        ("C5", vec![five], 5, true),
    ];
    for (name, gens, order, solvable) in groups {
        let g = group_closure(&gens).map_err(|e| e.to_string())?;
        if g.order() != order {
            return Err(format!("{name} closed to order {}", g.order()));
        }
        if is_solvable(&g) != solvable {
            return Err(format!("{name}: is_solvable = {}", !solvable));
        }
    }
    Ok("x^5-4x+2 not solvable with verified witness; S5, A5 not solvable; S4, S3, D5, F20, C5 solvable".into())
}

fn random_monic(rng: &mut ChaCha8Rng, degree: usize) -> Polynomial {
    let mut c: Vec<i64> = (0..degree).map(|_| rng.gen_range(-20..=20)).collect();
    c.push(1);
    Polynomial::from_ints(&c)
}

fn oracle_independence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let tolerance = pow2(-64);
    let mut cases = 0;
    while cases < 1000 {
        let degree = rng.gen_range(2..=4);
        let f = random_monic(&mut rng, degree);
        if !is_squarefree(&f) {
            continue;
        }
        cases += 1;
        let set = solve_any(&f, MethodPreference::Auto).map_err(|e| format!("{f}: {e}"))?;
        let report = verify_solution_set(&set.roots, &f, BITS, &tolerance)
            .map_err(|e| format!("{f}: {e}"))?;
        if !report.all_matched {
            return Err(format!("{f}: radical roots do not match the oracle"));
        }
    }
    Ok("1000 random polynomials of degree 2 to 4 all matched".into())
}

fn negative_controls() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let tolerance = pow2(-64);
    let nudge = RadicalExpr::constant(rat(1, 1 << 20));
    let mut corrupted = 0;
    let mut cases = 0;
    while cases < 60 {
        let degree = rng.gen_range(2..=4);
        let f = random_monic(&mut rng, degree);
        if !is_squarefree(&f) {
            continue;
        }
        cases += 1;
        let set = solve_any(&f, MethodPreference::Auto).map_err(|e| e.to_string())?;
        for i in 0..set.roots.len() {
            let mut roots = set.roots.clone();
            roots[i] = RadicalExpr::add(vec![roots[i].clone(), nudge.clone()]);
            let report =
                verify_solution_set(&roots, &f, BITS, &tolerance).map_err(|e| e.to_string())?;
            if report.all_matched {
                return Err(format!("{f}: nudging root {i} by 2^-20 went unnoticed"));
            }
            corrupted += 1;
        }
    }
    let f = Polynomial::from_ints(&[-2, 0, 0, 0, 0, 1]);
    for max_primes in 1..=50 {
        if let SolvabilityVerdict::NotSolvableByRadicals { prime, .. } =
            quintic_verdict(&f, max_primes).map_err(|e| e.to_string())?
        {
            return Err(format!("x^5-2 declared not solvable at p={prime}"));
        }
    }
    Ok(format!(
        "{corrupted} corrupted roots all rejected; x^5-2 never declared not solvable"
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("bhaskara fixture", bhaskara),
        ("pacioli fixture", pacioli),
        ("ferrari golden", ferrari_golden),
        ("euler resolvent formula", euler_formula),
        ("cardano", cardano),
        ("classification table", classification),
        ("method agreement", method_agreement),
        ("abel/galois", galois),
        ("oracle independence", oracle_independence),
        ("negative controls", negative_controls),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = check();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({secs:.2}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail} ({secs:.2}s)", i + 1);
            }
        }
    }
    let total = start.elapsed().as_secs_f64();
    println!(
        "acceptance: {} of 10 criteria passed in {total:.1}s",
        10 - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
