//! Reduced rational functions in one formal variable over a field.

use super::poly::Poly;
use super::{Field, Rat};
use num::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Rational function `num/den` with `den` monic and `gcd(num, den) = 1`.
#[derive(Clone, PartialEq, Debug)]
pub struct RatFn<K> {
    num: Poly<K>,
    den: Poly<K>,
}

/// Rational functions of one variable over the rationals.
pub type RF = RatFn<Rat>;

impl<K: Field> RatFn<K> {
    pub fn new(num: Poly<K>, den: Poly<K>) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let mut r = RatFn { num, den };
        r.reduce();
        r
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if g.degree() > Some(0) {
            self.num = self.num.divrem(&g).0;
            self.den = self.den.divrem(&g).0;
        }
        let lc = self.den.leading().unwrap().clone();
        if !lc.is_one() {
            let inv = lc.inv();
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn from_poly(p: Poly<K>) -> Self {
        RatFn { num: p, den: Poly::one() }
    }

    pub fn constant(c: K) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    /// The variable `x` itself.
    pub fn var() -> Self {
        Self::from_poly(Poly::var())
    }

    pub fn num(&self) -> &Poly<K> {
        &self.num
    }

    pub fn den(&self) -> &Poly<K> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn inv(&self) -> Self {
        assert!(!self.num.is_zero(), "inverse of zero rational function");
        RatFn::new(self.den.clone(), self.num.clone())
    }

    /// `f(-x)`.
    pub fn subst_neg(&self) -> Self {
        RatFn::new(self.num.subst_neg(), self.den.subst_neg())
    }

    /// Evaluate at a point; `None` at a pole.
    pub fn eval(&self, x: &K) -> Option<K> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    /// Coefficient of `x^{-r}` of the Laurent expansion at infinity.
    ///
    /// Requires `deg num <= deg den`, i.e. the expansion has no positive
    /// powers of `x`; returns `None` otherwise.
    pub fn coeff_at_infinity(&self, r: usize) -> Option<K> {
        if self.num.is_zero() {
            return Some(K::zero());
        }
        let dn = self.num.degree().unwrap();
        let dd = self.den.degree().unwrap();
        if dn > dd {
            return None;
        }
        // In u = 1/x: num/den = u^{dd-dn} * rev(num)(u) / rev(den)(u),
        // with rev(den)(0) = lc(den) nonzero. Power-series division in u.
        let rev = |p: &Poly<K>, d: usize| -> Vec<K> {
            (0..=d).map(|k| p.coeff(d - k)).collect()
        };
        let a = rev(&self.num, dn);
        let b = rev(&self.den, dd);
        let shift = dd - dn;
        if r < shift {
            return Some(K::zero());
        }
        let want = r - shift;
        let b0_inv = b[0].inv();
        let mut series: Vec<K> = Vec::with_capacity(want + 1);
        for k in 0..=want {
            let mut acc = a.get(k).cloned().unwrap_or_else(K::zero);
            for j in 1..=k {
                if let Some(bj) = b.get(j) {
                    acc = acc - bj.clone() * series[k - j].clone();
                }
            }
            series.push(acc * b0_inv.clone());
        }
        Some(series[want].clone())
    }
}

impl<K: Field> Zero for RatFn<K> {
    fn zero() -> Self {
        RatFn { num: Poly::zero(), den: Poly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<K: Field> One for RatFn<K> {
    fn one() -> Self {
        RatFn { num: Poly::one(), den: Poly::one() }
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

impl<K: Field> Add for RatFn<K> {
    type Output = RatFn<K>;
    fn add(self, rhs: Self) -> Self {
        RatFn::new(
            self.num.clone() * rhs.den.clone() + rhs.num.clone() * self.den.clone(),
            self.den * rhs.den,
        )
    }
}

impl<K: Field> Sub for RatFn<K> {
    type Output = RatFn<K>;
    fn sub(self, rhs: Self) -> Self {
        RatFn::new(
            self.num.clone() * rhs.den.clone() - rhs.num.clone() * self.den.clone(),
            self.den * rhs.den,
        )
    }
}

impl<K: Field> Neg for RatFn<K> {
    type Output = RatFn<K>;
    fn neg(self) -> Self {
        RatFn { num: -self.num, den: self.den }
    }
}

impl<K: Field> Mul for RatFn<K> {
    type Output = RatFn<K>;
    fn mul(self, rhs: Self) -> Self {
        RatFn::new(self.num * rhs.num, self.den * rhs.den)
    }
}

impl<K: Field> Div for RatFn<K> {
    type Output = RatFn<K>;
    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RatFn::new(self.num * rhs.den, self.den * rhs.num)
    }
}

impl fmt::Display for RF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};

    fn geom(t: i64) -> RF {
        // 1/(x - t)
        RF::new(
            Poly::one(),
            Poly::new(vec![rat_int(-t), rat_int(1)]),
        )
    }

    #[test]
    fn reduction_cancels_common_roots() {
        // (x^2 - 1)/(x - 1) = x + 1
        let f = RF::new(
            Poly::new(vec![rat_int(-1), rat_int(0), rat_int(1)]),
            Poly::new(vec![rat_int(-1), rat_int(1)]),
        );
        assert!(f.is_polynomial());
        assert_eq!(*f.num(), Poly::new(vec![rat_int(1), rat_int(1)]));
    }

    #[test]
    fn expansion_of_geometric_series() {
        // 1/(x-t) = sum_{r>=1} t^{r-1} x^{-r}
        let f = geom(3);
        assert_eq!(f.coeff_at_infinity(0), Some(rat_int(0)));
        assert_eq!(f.coeff_at_infinity(1), Some(rat_int(1)));
        assert_eq!(f.coeff_at_infinity(2), Some(rat_int(3)));
        assert_eq!(f.coeff_at_infinity(3), Some(rat_int(9)));
    }

    #[test]
    fn expansion_requires_proper_degree() {
        let f = RF::from_poly(Poly::var());
        assert_eq!(f.coeff_at_infinity(1), None);
    }

    #[test]
    fn field_identities() {
        let f = geom(2);
        let g = geom(-1) * RF::constant(rat(3, 5));
        let h = (f.clone() + g.clone()) * (f.clone() - g.clone());
        assert_eq!(h, f.clone() * f - g.clone() * g);
        assert!((g.clone() / g).is_one());
    }
}
