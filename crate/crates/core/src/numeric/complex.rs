use super::bigfloat::BigFloat;
use crate::arith::Rational;

/// Complex number over [`BigFloat`].
///
/// An imaginary part that is exactly zero stays exactly zero under ring
/// operations with other exactly-real values, which lets root extraction
/// recognise radicands on the real axis.
#[derive(Clone, Debug, PartialEq)]
pub struct BigComplex {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl BigComplex {
    pub fn new(re: BigFloat, im: BigFloat) -> Self {
        BigComplex { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        Self::new(BigFloat::zero(prec), BigFloat::zero(prec))
    }

    pub fn one(prec: u32) -> Self {
        Self::real(BigFloat::one(prec))
    }

    pub fn real(re: BigFloat) -> Self {
        let prec = re.prec();
        Self::new(re, BigFloat::zero(prec))
    }

    pub fn i(prec: u32) -> Self {
        Self::new(BigFloat::zero(prec), BigFloat::one(prec))
    }

    pub fn from_rational(r: &Rational, prec: u32) -> Self {
        Self::real(BigFloat::from_rational(r, prec))
    }

    pub fn from_f64(re: f64, im: f64, prec: u32) -> Self {
        Self::new(BigFloat::from_f64(re, prec), BigFloat::from_f64(im, prec))
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        Self::new(self.re.with_prec(prec), self.im.with_prec(prec))
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_exactly_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(self.re.add(&o.re), self.im.add(&o.im))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(self.re.sub(&o.re), self.im.sub(&o.im))
    }

    pub fn neg(&self) -> Self {
        Self::new(self.re.neg(), self.im.neg())
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), self.im.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.im.is_zero() && o.im.is_zero() {
            return Self::real(self.re.mul(&o.re));
        }
        let re = self.re.mul(&o.re).sub(&self.im.mul(&o.im));
        let im = self.re.mul(&o.im).add(&self.im.mul(&o.re));
        Self::new(re, im)
    }

    pub fn scale(&self, k: &BigFloat) -> Self {
        Self::new(self.re.mul(k), self.im.mul(k))
    }

    pub fn mul_pow2(&self, k: i64) -> Self {
        Self::new(self.re.mul_pow2(k), self.im.mul_pow2(k))
    }

    pub fn norm_sqr(&self) -> BigFloat {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    pub fn abs(&self) -> BigFloat {
        if self.im.is_zero() {
            return self.re.abs();
        }
        if self.re.is_zero() {
            return self.im.abs();
        }
        self.norm_sqr().sqrt()
    }

    /// Largest `t` such that `2^t` bounds both components; `None` for zero.
    pub fn top(&self) -> Option<i64> {
        match (self.re.top(), self.im.top()) {
            (None, None) => None,
            (a, b) => Some(a.unwrap_or(i64::MIN).max(b.unwrap_or(i64::MIN))),
        }
    }

    /// Panics when `o` is zero.
    pub fn div(&self, o: &Self) -> Self {
        assert!(!o.is_zero(), "BigComplex division by zero");
        if o.im.is_zero() {
            return Self::new(self.re.div(&o.re), self.im.div(&o.re));
        }
        let den = o.norm_sqr();
        let re = self.re.mul(&o.re).add(&self.im.mul(&o.im)).div(&den);
        let im = self.im.mul(&o.re).sub(&self.re.mul(&o.im)).div(&den);
        Self::new(re, im)
    }

    pub fn inv(&self) -> Self {
        Self::one(self.prec()).div(self)
    }

    pub fn powu(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.prec());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    /// `e^(2 pi i j / k)`.
    pub fn root_of_unity(k: u32, j: i64, prec: u32) -> Self {
        assert!(k >= 1);
        let j = j.rem_euclid(k as i64) as u64;
        let k64 = k as u64;
        if j == 0 {
            return Self::one(prec);
        }
        if 2 * j == k64 {
            return Self::real(BigFloat::from_i64(-1, prec));
        }
        if 4 * j == k64 {
            return Self::i(prec);
        }
        if 4 * j == 3 * k64 {
            return Self::i(prec).neg();
        }
        let angle = std::f64::consts::TAU * j as f64 / k as f64;
        let start = Self::from_f64(angle.cos(), angle.sin(), prec);
        newton_root(start, &Self::one(prec), k)
    }

    /// Principal `k`-th root: argument in `(-pi/k, pi/k]`.
    pub fn principal_root(&self, k: u32) -> Self {
        assert!(k >= 1);
        let prec = self.prec();
        if k == 1 || self.is_zero() {
            return self.clone();
        }
        if self.im.is_zero() {
            if !self.re.is_negative() {
                return Self::real(self.re.nth_root(k));
            }
            let modulus = self.re.neg().nth_root(k);
            if k == 2 {
                return Self::new(BigFloat::zero(prec), modulus);
            }
            return Self::root_of_unity(2 * k, 1, prec).scale(&modulus);
        }
        // Scale by an exact power 2^(k*s) so the f64 start neither overflows nor underflows.
        let top = self.top().unwrap();
        let s = top.div_euclid(k as i64);
        let scaled = self.mul_pow2(-s * k as i64);
        let (re, im) = scaled.to_f64();
        let r = re.hypot(im).powf(1.0 / k as f64);
        let theta = im.atan2(re) / k as f64;
        let start = Self::from_f64(r * theta.cos(), r * theta.sin(), prec).mul_pow2(s);
        newton_root(start, self, k)
    }
}

/// Newton iteration for `w^k = target` from a start already inside the
/// basin of the wanted root (f64 accuracy is plenty for `k <= 8`).
fn newton_root(mut w: BigComplex, target: &BigComplex, k: u32) -> BigComplex {
    let prec = target.prec().max(w.prec());
    let kf = BigFloat::from_i64(k as i64, prec);
    let k_minus_1 = BigFloat::from_i64(k as i64 - 1, prec);
    let mut settled = 0;
    for _ in 0..200 {
        let wk1 = w.powu(k - 1);
        if wk1.is_zero() {
            break;
        }
        let next = w
            .scale(&k_minus_1)
            .add(&target.div(&wk1))
            .scale(&BigFloat::one(prec).div(&kf));
        let delta = next.sub(&w);
        w = next;
        let small = match (delta.top(), w.top()) {
            (None, _) => true,
            (Some(d), Some(m)) => d < m - prec as i64 + 4,
            (Some(_), None) => false,
        };
        if small {
            settled += 1;
            if settled >= 2 {
                break;
            }
        }
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 256;

    fn close(a: &BigComplex, re: f64, im: f64) -> bool {
        let (x, y) = a.to_f64();
        (x - re).abs() < 1e-14 && (y - im).abs() < 1e-14
    }

    #[test]
    fn cube_roots_of_unity() {
        let w = BigComplex::root_of_unity(3, 1, P);
        assert!(close(&w, -0.5, 3f64.sqrt() / 2.0));
        let cube = w.powu(3).sub(&BigComplex::one(P));
        assert!(cube.abs().log2_abs() < -240.0);
        assert!(close(
            &BigComplex::root_of_unity(3, 2, P),
            -0.5,
            -3f64.sqrt() / 2.0
        ));
        assert!(close(
            &BigComplex::root_of_unity(3, -1, P),
            -0.5,
            -3f64.sqrt() / 2.0
        ));
    }

    #[test]
    fn principal_roots_of_real_radicands() {
        let minus_one = BigComplex::from_f64(-1.0, 0.0, P);
        assert!(close(&minus_one.principal_root(2), 0.0, 1.0));
        let minus_eight = BigComplex::from_f64(-8.0, 0.0, P);
        assert!(close(&minus_eight.principal_root(3), 1.0, 3f64.sqrt()));
        let eight = BigComplex::from_f64(8.0, 0.0, P);
        let r = eight.principal_root(3);
        assert!(r.is_exactly_real());
        assert!(close(&r, 2.0, 0.0));
    }

    #[test]
    fn principal_root_of_complex_radicand() {
        // sqrt(-50i) = 5 - 5i
        let z = BigComplex::from_f64(0.0, -50.0, P);
        let r = z.principal_root(2);
        assert!(close(&r, 5.0, -5.0));
        let back = r.powu(2).sub(&z);
        assert!(back.abs().log2_abs() < -240.0);
    }

    #[test]
    fn root_of_tiny_and_huge_values() {
        let tiny = BigComplex::from_f64(1e-300, 1e-300, P).mul_pow2(-2000);
        let r = tiny.principal_root(3);
        let back = r.powu(3).sub(&tiny);
        assert!(back.abs().log2_abs() < tiny.abs().log2_abs() - 240.0);
    }

    #[test]
    fn division() {
        let a = BigComplex::from_f64(1.0, 2.0, P);
        let b = BigComplex::from_f64(3.0, -4.0, P);
        assert!(close(&a.div(&b), -0.2, 0.4));
        assert!(close(&b.inv(), 0.12, 0.16));
    }
}
