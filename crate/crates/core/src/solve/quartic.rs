use num_traits::{One, Signed, Zero};

use super::{
    approx, plus_minus, solve_squarefree, unshift, Method, MethodPreference, RootClass,
    SolutionSet, SolveError,
};
use crate::arith::{
    depress_cubic, depress_quartic, is_squarefree, rat, rational_roots, DepressedQuartic,
    Polynomial, Rational,
};
use crate::radical::{exact_root, simplify, RadicalExpr};

use super::cubic::{cubic_casus_flag, solve_cubic};

fn k(r: Rational) -> RadicalExpr {
    RadicalExpr::constant(r)
}

/// `(a, b, c)` of a quartic of the shape `x^4 + a x^2 + b x + c`.
fn depressed_shape(f: &Polynomial) -> Result<(Rational, Rational, Rational), SolveError> {
    if f.degree() != Some(4) || !f.is_monic() || !f.coeff(3).is_zero() {
        return Err(SolveError::NotDepressedQuartic);
    }
    Ok((f.coeff(2), f.coeff(1), f.coeff(0)))
}

/// Resolvent `y^3 + a y^2 + (a^2/4 - c) y - b^2/8` of `x^4 + a x^2 + b x + c`.
///
/// Its roots are the `y` for which the right side of
/// `(x^2 + a/2 + y)^2 = 2y x^2 - b x + (y^2 + a y + a^2/4 - c)` is a perfect
/// square in `x`.
pub fn ferrari_resolvent(f: &Polynomial) -> Result<Polynomial, SolveError> {
    let (a, b, c) = depressed_shape(f)?;
    Ok(Polynomial::new(vec![
        -(&b * &b) / rat(8, 1),
        &a * &a / rat(4, 1) - c,
        a,
        Rational::one(),
    ]))
}

/// Resolvent obtained by first completing `x^4 + c` to `(x^2 + m)^2`, for
/// `c = m^2` with `m > 0` rational; `None` when `c` is not such a square.
///
/// Adding `y` inside the square leads to `(x^2 + m + y)^2 = (2m - a + 2y) x^2
/// - b x + (y^2 + 2m y)`, whose perfect-square condition is
/// `y^3 + (3m - a/2) y^2 + (2m^2 - a m) y - b^2/8 = 0`. Its roots are those of
/// [`ferrari_resolvent`] shifted by `a/2 - m`.
pub fn ferrari_resolvent_from_square(f: &Polynomial) -> Result<Option<Polynomial>, SolveError> {
    let (a, b, c) = depressed_shape(f)?;
    let m = match exact_root(&c, 2) {
        Some(m) if m.is_positive() => m,
        _ => return Ok(None),
    };
    Ok(Some(Polynomial::new(vec![
        -(&b * &b) / rat(8, 1),
        rat(2, 1) * &m * &m - &a * &m,
        rat(3, 1) * &m - a / rat(2, 1),
        Rational::one(),
    ])))
}

/// Ferrari's method: complete the square with a resolvent root `y0`, take the
/// square root of both sides and solve the two resulting quadratics.
///
/// `y0` is a rational resolvent root when one is positive (preferring one
/// that makes `2 y0` a square), otherwise the first Cardano root that is
/// numerically real and positive. Biquadratic inputs go to
/// [`solve_biquadratic`].
pub fn solve_quartic_ferrari(f: &Polynomial) -> Result<SolutionSet, SolveError> {
    if f.degree() != Some(4) {
        return Err(SolveError::UnsupportedDegree(f.degree()));
    }
    let d = depress_quartic(&f.monic())?;
    if d.q.is_zero() {
        return solve_biquadratic(&d);
    }
    let g = d.to_polynomial();
    let y0 = ferrari_root(&ferrari_resolvent(&g)?)?;
    let (a, b) = (&d.p, &d.q);
    let s = simplify(&RadicalExpr::sqrt(RadicalExpr::mul(vec![
        k(rat(2, 1)),
        y0.clone(),
    ])));
    let t = RadicalExpr::mul(vec![
        k(b / rat(2, 1)),
        RadicalExpr::inv(s.clone()).expect("y0 is nonzero when b is"),
    ]);
    let base = RadicalExpr::add(vec![
        RadicalExpr::mul(vec![k(rat(-1, 2)), y0]),
        k(-a / rat(2, 1)),
    ]);
    let half_s = RadicalExpr::mul(vec![k(rat(1, 2)), s]);
    // x^2 - s x + (a/2 + y0 + t) = 0 and x^2 + s x + (a/2 + y0 - t) = 0
    let first = plus_minus(
        half_s.clone(),
        RadicalExpr::add(vec![base.clone(), RadicalExpr::neg(t.clone())]),
    );
    let second = plus_minus(RadicalExpr::neg(half_s), RadicalExpr::add(vec![base, t]));
    let roots = first
        .into_iter()
        .chain(second)
        .map(|y| unshift(y, &d.shift))
        .collect();
    Ok(SolutionSet {
        roots,
        method: Method::Ferrari,
        casus_irreducibilis: false,
        classification: classify_quartic(&d).ok(),
    })
}

fn ferrari_root(resolvent: &Polynomial) -> Result<RadicalExpr, SolveError> {
    let positive: Vec<Rational> = rational_roots(resolvent)
        .into_iter()
        .filter(|y| y.is_positive())
        .collect();
    if let Some(y) = positive
        .iter()
        .find(|y| exact_root(&(*y * rat(2, 1)), 2).is_some())
        .or(positive.first())
    {
        return Ok(k(y.clone()));
    }
    let roots = solve_cubic(resolvent)?.roots;
    let mut fallback: Option<(f64, &RadicalExpr)> = None;
    for y in &roots {
        let (re, im) = approx(y)?;
        if re > 0.0 && im.abs() <= 1e-12 * (1.0 + re.abs()) {
            return Ok(y.clone());
        }
        let size = re.hypot(im);
        if fallback.is_none_or(|(best, _)| size > best) {
            fallback = Some((size, y));
        }
    }
    // Any nonzero root gives a valid split; a real positive one keeps it real.
    Ok(fallback.expect("a cubic has three roots").1.clone())
}

/// `z^3 + (p/2) z^2 + (p^2/16 - r/4) z - q^2/64`
pub fn euler_resolvent(d: &DepressedQuartic) -> Polynomial {
    Polynomial::new(vec![
        -(&d.q * &d.q) / rat(64, 1),
        &d.p * &d.p / rat(16, 1) - &d.r / rat(4, 1),
        &d.p / rat(2, 1),
        Rational::one(),
    ])
}

/// Euler's method for `y^4 + p y^2 + q y + r` with `q != 0` and distinct roots.
///
/// With resolvent roots `z1, z2, z3`, `u0 = sqrt(z1)`, `v0 = sqrt(z2)` and
/// `w0 = (-q/8) / (u0 v0)`, so that `u0 v0 w0 = -q/8` holds by construction.
/// The roots are `u0 + v0 + w0`, `u0 - v0 - w0`, `-u0 + v0 - w0` and
/// `-u0 - v0 + w0`.
pub fn solve_quartic_euler(d: &DepressedQuartic) -> Result<SolutionSet, SolveError> {
    if d.q.is_zero() {
        return Err(SolveError::ZeroLinearTerm);
    }
    if !is_squarefree(&d.to_polynomial()) {
        return Err(SolveError::MultipleRoots);
    }
    let zs = resolvent_roots(&euler_resolvent(d))?;
    let u = simplify(&RadicalExpr::sqrt(zs[0].clone()));
    let v = simplify(&RadicalExpr::sqrt(zs[1].clone()));
    let w = simplify(&RadicalExpr::mul(vec![
        k(-&d.q / rat(8, 1)),
        RadicalExpr::inv(u.clone()).expect("resolvent roots are nonzero"),
        RadicalExpr::inv(v.clone()).expect("resolvent roots are nonzero"),
    ]));
    let neg = |e: &RadicalExpr| RadicalExpr::neg(e.clone());
    let combos = [
        [u.clone(), v.clone(), w.clone()],
        [u.clone(), neg(&v), neg(&w)],
        [neg(&u), v.clone(), neg(&w)],
        [neg(&u), neg(&v), w.clone()],
    ];
    let roots = combos
        .into_iter()
        .map(|terms| unshift(RadicalExpr::add(terms.to_vec()), &d.shift))
        .collect();
    Ok(SolutionSet {
        roots,
        method: Method::Euler,
        casus_irreducibilis: false,
        classification: Some(classify_quartic(d)?),
    })
}

/// Roots of a monic cubic resolvent: rational roots first in ascending order,
/// then the remaining roots by numeric real part and imaginary part.
fn resolvent_roots(res: &Polynomial) -> Result<Vec<RadicalExpr>, SolveError> {
    let mut out = Vec::new();
    let mut rest = res.clone();
    for r in rational_roots(res) {
        while rest.degree().is_some_and(|n| n > 0) && rest.eval(&r).is_zero() {
            rest = rest.div_exact(&Polynomial::linear_root(r.clone()))?;
            out.push(k(r.clone()));
        }
    }
    if rest.degree().is_some_and(|n| n > 0) {
        let mut others: Vec<((f64, f64), RadicalExpr)> =
            solve_squarefree(&rest, MethodPreference::Auto)?
                .roots
                .into_iter()
                .map(|e| Ok((approx(&e)?, e)))
                .collect::<Result<_, SolveError>>()?;
        others.sort_by(|(a, _), (b, _)| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
        out.extend(others.into_iter().map(|(_, e)| e));
    }
    Ok(out)
}

/// Reads the reality of the roots off the Euler resolvent.
///
/// Three real resolvent roots, all positive, give four real roots; three
/// real with one positive give two conjugate pairs; a single real resolvent
/// root gives two real and two complex roots. Reality comes from the sign
/// of the resolvent's cubic discriminant, and with all roots real the number
/// of positive ones equals the number of sign changes in its coefficients.
pub fn classify_quartic(d: &DepressedQuartic) -> Result<RootClass, SolveError> {
    if d.q.is_zero() {
        return Err(SolveError::ZeroLinearTerm);
    }
    if !is_squarefree(&d.to_polynomial()) {
        return Err(SolveError::MultipleRoots);
    }
    let res = euler_resolvent(d);
    if !cubic_casus_flag(&depress_cubic(&res)?) {
        return Ok(RootClass::TwoRealTwoComplex);
    }
    let signs: Vec<bool> = res
        .coeffs()
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| c.is_positive())
        .collect();
    let changes = signs.windows(2).filter(|w| w[0] != w[1]).count();
    Ok(if changes == 3 {
        RootClass::FourReal
    } else {
        RootClass::TwoConjugatePairs
    })
}

/// `y^4 + p y^2 + r` through `t = y^2`: the roots are `+-sqrt(t1)`, `+-sqrt(t2)`
/// for the roots `t1, t2` of `t^2 + p t + r`.
pub fn solve_biquadratic(d: &DepressedQuartic) -> Result<SolutionSet, SolveError> {
    if !d.q.is_zero() {
        return Err(SolveError::NotBiquadratic);
    }
    let ts = plus_minus(k(-&d.p / rat(2, 1)), k(&d.p * &d.p / rat(4, 1) - &d.r));
    let mut roots = Vec::with_capacity(4);
    for t in ts {
        let s = RadicalExpr::sqrt(t);
        roots.push(unshift(s.clone(), &d.shift));
        roots.push(unshift(RadicalExpr::neg(s), &d.shift));
    }
    Ok(SolutionSet::new(roots, Method::Biquadratic))
}
