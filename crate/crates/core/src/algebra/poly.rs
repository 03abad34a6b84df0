use std::fmt;

use super::ring::{Field, IntegerRing, Modulus, Ring, Zp};

/// Dense univariate polynomial, coefficients constant term first.
///
/// Trailing zeros are always trimmed, so the zero polynomial has an empty
/// coefficient vector and `degree` is `None` for it.
#[derive(Clone, PartialEq)]
pub struct Polynomial<R: Ring> {
    ctx: R::Ctx,
    coeffs: Vec<R>,
}

impl<R: Ring> Polynomial<R> {
    pub fn new(ctx: R::Ctx, mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { ctx, coeffs }
    }

    pub fn from_i64(ctx: R::Ctx, coeffs: &[i64]) -> Self {
        let cs = coeffs.iter().map(|&c| R::from_i64(&ctx, c)).collect();
        Self::new(ctx, cs)
    }

    pub fn zero(ctx: R::Ctx) -> Self {
        Polynomial {
            ctx,
            coeffs: Vec::new(),
        }
    }

    pub fn one(ctx: R::Ctx) -> Self {
        let one = R::one(&ctx);
        Polynomial {
            ctx,
            coeffs: vec![one],
        }
    }

    /// `x^d`
    pub fn monomial(ctx: R::Ctx, d: usize) -> Self {
        let mut cs = vec![R::zero(&ctx); d + 1];
        cs[d] = R::one(&ctx);
        Polynomial { ctx, coeffs: cs }
    }

    /// `1 + x + ... + x^n`
    pub fn geometric(ctx: R::Ctx, n: usize) -> Self {
        let cs = vec![R::one(&ctx); n + 1];
        Polynomial::new(ctx, cs)
    }

    pub fn ctx(&self) -> &R::Ctx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient of `x^i`; zero past the degree.
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| R::zero(&self.ctx))
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let cs = (0..len).map(|i| self.coeff(i).add(&rhs.coeff(i))).collect();
        Polynomial::new(self.ctx.clone(), cs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let cs = (0..len).map(|i| self.coeff(i).sub(&rhs.coeff(i))).collect();
        Polynomial::new(self.ctx.clone(), cs)
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(R::neg).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(self.ctx.clone());
        }
        let mut cs = vec![R::zero(&self.ctx); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                cs[i + j] = cs[i + j].add(&a.mul(b));
            }
        }
        Polynomial::new(self.ctx.clone(), cs)
    }

    pub fn scale(&self, c: &R) -> Self {
        Polynomial::new(
            self.ctx.clone(),
            self.coeffs.iter().map(|a| a.mul(c)).collect(),
        )
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(&self.ctx), |acc, c| acc.mul(x).add(c))
    }

    pub fn map<S: Ring>(&self, ctx: S::Ctx, f: impl Fn(&R) -> S) -> Polynomial<S> {
        Polynomial::new(ctx, self.coeffs.iter().map(f).collect())
    }
}

impl<F: Field> Polynomial<F> {
    /// Scale to leading coefficient one. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Euclidean division: `(q, r)` with `self = q * rhs + r`, `deg r < deg rhs`.
    pub fn div_rem(&self, rhs: &Self) -> (Self, Self) {
        let d = rhs.degree().expect("division by the zero polynomial");
        let lc_inv = rhs.leading().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        let qlen = self.coeffs.len().saturating_sub(d);
        let mut quot = vec![F::zero(&self.ctx); qlen];
        for k in (0..qlen).rev() {
            let c = rem[k + d].mul(&lc_inv);
            if c.is_zero() {
                continue;
            }
            for (i, b) in rhs.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].sub(&c.mul(b));
            }
            quot[k] = c;
        }
        rem.truncate(d);
        (
            Polynomial::new(self.ctx.clone(), quot),
            Polynomial::new(self.ctx.clone(), rem),
        )
    }

    pub fn rem(&self, rhs: &Self) -> Self {
        self.div_rem(rhs).1
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).is_zero()
    }
}

impl<R: IntegerRing> Polynomial<R> {
    /// Coefficientwise reduction into `Z_p`.
    pub fn reduce_mod(&self, p: Modulus) -> Polynomial<Zp> {
        self.map(p, |c| Zp::new(c.residue(p.get()), p))
    }

    pub fn all_coefficients_odd(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().all(|c| c.is_odd())
    }

    pub fn to_i64_vec(&self) -> Vec<i64> {
        self.coeffs.iter().map(|c| i64::from_bigint(&c.to_bigint())).collect()
    }
}

impl<R: Ring> fmt::Display for Polynomial<R> {
    /// Renders highest degree first, e.g. `x^5 - 3x^4 + x^3 + x^2 - 3x + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, s),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag == "1";
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for Polynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
