//! Univariate polynomials over a commutative ring, coefficients stored
//! lowest degree first with no trailing zeros.

use super::{Field, Rat, Ring};
use num::{BigInt, One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial in one formal variable over the coefficient ring `K`.
///
/// The zero polynomial is the empty coefficient list; otherwise the last
/// coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Poly<K> {
    coeffs: Vec<K>,
}

pub type QPoly = Poly<Rat>;

impl<K: Ring> Poly<K> {
    pub fn new(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: K) -> Self {
        Poly::new(vec![c])
    }

    /// The variable `x` itself.
    pub fn var() -> Self {
        Poly::new(vec![K::zero(), K::one()])
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> K {
        self.coeffs.get(k).cloned().unwrap_or_else(K::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&K> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &K) -> K {
        let mut acc = K::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// `p(-x)`.
    pub fn subst_neg(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
            .collect();
        Poly::new(coeffs)
    }

    /// `p(x + c)` by Horner's scheme.
    pub fn shift(&self, c: &K) -> Self {
        let xc = Poly::new(vec![c.clone(), K::one()]);
        let mut acc = Poly::new(vec![]);
        for coeff in self.coeffs.iter().rev() {
            acc = acc * xc.clone() + Poly::constant(coeff.clone());
        }
        acc
    }

    pub fn scale(&self, c: &K) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::constant(K::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }
}

impl<K: Field> Poly<K> {
    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, |c| c.is_one())
    }

    pub fn make_monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inv()),
        }
    }

    /// Euclidean division: returns `(quotient, remainder)`.
    ///
    /// Panics if the divisor is zero.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = d.leading().unwrap().inv();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![K::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() >= dd + 1 {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap().clone() * lead_inv.clone();
            if !factor.is_zero() {
                for i in 0..=dd {
                    let t = rem[k + i].clone() - factor.clone() * d.coeffs[i].clone();
                    rem[k + i] = t;
                }
                quot[k] = factor;
            }
            rem.pop();
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
            if rem.len() < dd + 1 {
                break;
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.make_monic()
        }
    }

    /// Monic product of `x - r` over the given roots.
    pub fn from_roots(roots: &[K]) -> Self {
        let mut acc = Poly::constant(K::one());
        for r in roots {
            acc = acc * Poly::new(vec![-r.clone(), K::one()]);
        }
        acc
    }
}

impl<K: Ring> Zero for Poly<K> {
    fn zero() -> Self {
        Poly { coeffs: vec![] }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<K: Ring> One for Poly<K> {
    fn one() -> Self {
        Poly::constant(K::one())
    }
    fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
}

impl<K: Ring> Add for Poly<K> {
    type Output = Poly<K>;
    fn add(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        Poly::new(out)
    }
}

impl<K: Ring> Sub for Poly<K> {
    type Output = Poly<K>;
    fn sub(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        Poly::new(out)
    }
}

impl<K: Ring> Neg for Poly<K> {
    type Output = Poly<K>;
    fn neg(self) -> Self {
        Poly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<K: Ring> Mul for Poly<K> {
    type Output = Poly<K>;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![K::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = out[i + j].clone() + a.clone() * b.clone();
                out[i + j] = t;
            }
        }
        Poly::new(out)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match k {
                0 => write!(f, "{}", a)?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", a)?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{}", k)?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

/// All positive divisors of a nonzero integer, by trial division.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            small.push(d.clone());
            large.push(&n / &d);
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small.dedup();
    small
}

/// All rational roots of a nonzero polynomial, with multiplicity, in
/// ascending order.
///
/// Candidates come from divisor enumeration of the integer-cleared leading
/// and trailing coefficients; each candidate is verified by evaluation and
/// divided out to capture multiplicity. Irrational factors are not returned;
/// callers that need a complete factorization check the product of the
/// returned linear factors against the input.
pub fn rational_roots(p: &QPoly) -> Vec<Rat> {
    assert!(!p.is_zero(), "rational_roots of the zero polynomial");
    let mut roots = Vec::new();
    let mut q = p.clone();

    // Strip roots at zero first.
    while q.coeff(0).is_zero() && q.degree() > Some(0) {
        roots.push(Rat::zero());
        let (quot, rem) = q.divrem(&QPoly::var());
        debug_assert!(rem.is_zero());
        q = quot;
    }
    if q.degree() == Some(0) || q.degree().is_none() {
        roots.sort();
        return roots;
    }

    // Clear denominators to an integer polynomial.
    let mut denom_lcm = BigInt::one();
    for c in q.coeffs() {
        denom_lcm = num::integer::lcm(denom_lcm, c.denom().clone());
    }
    let int_coeffs: Vec<BigInt> = q
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&denom_lcm / c.denom()))
        .collect();
    let trailing = int_coeffs.iter().find(|c| !c.is_zero()).unwrap().clone();
    let leading = int_coeffs.last().unwrap().clone();

    let mut candidates = Vec::new();
    for p_div in divisors(&trailing) {
        for q_div in divisors(&leading) {
            let c = Rat::new(p_div.clone(), q_div.clone());
            candidates.push(c.clone());
            candidates.push(-c);
        }
    }
    candidates.sort();
    candidates.dedup();

    for cand in candidates {
        loop {
            if q.degree().map_or(true, |d| d == 0) {
                break;
            }
            if !q.eval(&cand).is_zero() {
                break;
            }
            roots.push(cand.clone());
            let lin = QPoly::new(vec![-cand.clone(), Rat::one()]);
            let (quot, rem) = q.divrem(&lin);
            debug_assert!(rem.is_zero());
            q = quot;
        }
    }
    roots.sort();
    roots
}
