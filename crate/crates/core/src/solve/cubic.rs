use num_traits::{Signed, Zero};

use super::{unshift, Method, SolutionSet, SolveError};
use crate::arith::{depress_cubic, DepressedCubic, Polynomial, Rational};
use crate::radical::{simplify, RadicalExpr};

/// `(p/3)^3 + (q/2)^2 < 0`: three distinct real roots, reachable by radicals
/// only through complex intermediate values.
pub fn cubic_casus_flag(d: &DepressedCubic) -> bool {
    cardano_discriminant(d).is_negative()
}

/// `(q/2)^2 + (p/3)^3`
fn cardano_discriminant(d: &DepressedCubic) -> Rational {
    let half_q = &d.q / Rational::from_integer(2.into());
    let third_p = &d.p / Rational::from_integer(3.into());
    &half_q * &half_q + &third_p * &third_p * &third_p
}

/// Cardano's formula for `y^3 + p y + q`, returned as roots of `x = y - shift`.
///
/// With `u1` the principal cube root of `-q/2 + sqrt((q/2)^2 + (p/3)^3)`, the
/// partner term is `v1 = -p / (3 u1)`, so only pairings with `u v = -p/3`
/// can be expressed. The roots are `u1 + v1`, `w u1 + w^2 v1` and
/// `w^2 u1 + w v1` with `w` the primitive cube root of unity. When `p = 0`
/// the roots are the three cube roots of `-q`.
pub fn cardano_depressed(d: &DepressedCubic) -> SolutionSet {
    let ys = if d.p.is_zero() {
        (0..3)
            .map(|b| RadicalExpr::root(RadicalExpr::constant(-d.q.clone()), 3, b).unwrap())
            .collect::<Vec<_>>()
    } else {
        let u_cubed = RadicalExpr::add(vec![
            RadicalExpr::constant(-&d.q / Rational::from_integer(2.into())),
            RadicalExpr::sqrt(RadicalExpr::constant(cardano_discriminant(d))),
        ]);
        let u1 = simplify(&RadicalExpr::principal_root(u_cubed, 3));
        let v1 = RadicalExpr::mul(vec![
            RadicalExpr::constant(-&d.p / Rational::from_integer(3.into())),
            RadicalExpr::inv(u1.clone()).expect("u1 is nonzero when p is"),
        ]);
        let w1 = RadicalExpr::root_of_unity(3, 1).unwrap();
        let w2 = RadicalExpr::root_of_unity(3, 2).unwrap();
        let times = |w: &RadicalExpr, e: &RadicalExpr| RadicalExpr::mul(vec![w.clone(), e.clone()]);
        vec![
            RadicalExpr::add(vec![u1.clone(), v1.clone()]),
            RadicalExpr::add(vec![times(&w1, &u1), times(&w2, &v1)]),
            RadicalExpr::add(vec![times(&w2, &u1), times(&w1, &v1)]),
        ]
    };
    SolutionSet {
        roots: ys.into_iter().map(|y| unshift(y, &d.shift)).collect(),
        method: Method::Cardano,
        casus_irreducibilis: cubic_casus_flag(d),
        classification: None,
    }
}

/// Normalizes, depresses and applies [`cardano_depressed`].
pub fn solve_cubic(f: &Polynomial) -> Result<SolutionSet, SolveError> {
    if f.degree() != Some(3) {
        return Err(SolveError::UnsupportedDegree(f.degree()));
    }
    Ok(cardano_depressed(&depress_cubic(&f.monic())?))
}

#[cfg(test)]
mod tests {
    use super::super::testutil::*;
    use super::*;
    use crate::arith::rat;
    use crate::radical::{render, Format};

    fn dc(p: i64, q: i64) -> DepressedCubic {
        DepressedCubic::new(rat(p, 1), rat(q, 1))
    }

    #[test]
    fn casus_flag() {
        assert!(cubic_casus_flag(&dc(-15, -4)));
        assert!(!cubic_casus_flag(&dc(6, -20)));
        assert!(!cubic_casus_flag(&dc(0, 0)));
    }

    #[test]
    fn real_root_two() {
        let set = cardano_depressed(&dc(6, -20));
        assert!(!set.casus_irreducibilis);
        // x^3 + 6x - 20 = (x - 2)(x^2 + 2x + 10)
        assert_roots(&set, &[(2.0, 0.0), (-1.0, 3.0), (-1.0, -3.0)], 1e-12);
        let (re, im) = values(&set)[0];
        assert!((re - 2.0).abs() < 1e-14 && im.abs() < 1e-14, "{re} {im}");
        assert_eq!(
            render(&set.roots[0], Format::Text),
            "root(3, sqrt(108) + 10) - 2/root(3, sqrt(108) + 10)"
        );
    }

    #[test]
    fn pure_cube() {
        let set = cardano_depressed(&dc(0, -8));
        let w1 = RadicalExpr::root_of_unity(3, 1).unwrap();
        let w2 = RadicalExpr::root_of_unity(3, 2).unwrap();
        assert_eq!(
            set.roots,
            vec![
                RadicalExpr::int(2),
                RadicalExpr::mul(vec![RadicalExpr::int(2), w1]),
                RadicalExpr::mul(vec![RadicalExpr::int(2), w2]),
            ]
        );
    }

    #[test]
    fn bombelli() {
        let set = cardano_depressed(&dc(-15, -4));
        assert!(set.casus_irreducibilis);
        let s3 = 3f64.sqrt();
        assert_roots(&set, &real(&[4.0, -2.0 + s3, -2.0 - s3]), 1e-12);
    }

    #[test]
    fn shifted_cubics() {
        let f = Polynomial::from_ints(&[-1, 3, -3, 1]);
        let set = solve_cubic(&f).unwrap();
        assert_eq!(set.roots, vec![RadicalExpr::one(); 3]);

        // 2(x - 1)(x - 2)(x + 4) = 2x^3 + 2x^2 - 20x + 16
        let f = Polynomial::from_ints(&[16, -20, 2, 2]);
        let set = solve_cubic(&f).unwrap();
        assert!(set.casus_irreducibilis);
        assert_roots(&set, &real(&[1.0, 2.0, -4.0]), 1e-12);
    }

    #[test]
    fn positive_q_with_negative_p() {
        // u^3 is a negative real here, so u1 is a complex principal root
        let set = cardano_depressed(&dc(-3, 5));
        for (re, im) in values(&set) {
            let z = num_complex_eval(re, im, -3.0, 5.0);
            assert!(z < 1e-10, "{re} {im}");
        }
    }

    fn num_complex_eval(re: f64, im: f64, p: f64, q: f64) -> f64 {
        // |z^3 + p z + q| in f64
        let (r2, i2) = (re * re - im * im, 2.0 * re * im);
        let (r3, i3) = (r2 * re - i2 * im, r2 * im + i2 * re);
        (r3 + p * re + q).hypot(i3 + p * im)
    }

    #[test]
    fn wrong_degree() {
        assert_eq!(
            solve_cubic(&Polynomial::from_ints(&[1, 1])),
            Err(SolveError::UnsupportedDegree(Some(1)))
        );
    }
}
