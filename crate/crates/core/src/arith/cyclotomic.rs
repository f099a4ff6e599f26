use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num::{BigInt, One, Zero};

use super::{fmt_rational, Rational, Scalar};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Integer coefficients of `Phi_r`, lowest degree first.
pub fn cyclotomic_polynomial(r: u32) -> Vec<BigInt> {
    assert!(r >= 1);
    // x^r - 1
    let mut num = vec![BigInt::zero(); r as usize + 1];
    num[0] = BigInt::from(-1);
    num[r as usize] = BigInt::one();
    for d in 1..r {
        if r.is_multiple_of(d) {
            num = exact_div(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

/// Quotient of integer polynomials when the divisor is monic and divides exactly.
fn exact_div(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for i in (0..q.len()).rev() {
        let c = rem[i + db].clone();
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                rem[i + j] -= &c * bj;
            }
        }
        q[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    q
}

#[derive(Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    r: u32,
    /// Monic `Phi_r`, lowest degree first.
    modulus: Vec<Rational>,
}

impl CyclotomicField {
    /// The field `Q(zeta_r)`, cached per order.
    pub fn get(r: u32) -> Result<Arc<CyclotomicField>> {
        if r == 0 {
            return Err(Error::Params("cyclotomic order must be positive".into()));
        }
        Limits::check(
            "cyclotomic order",
            r as usize,
            Limits::from_env().max_cyclotomic_order as usize,
        )?;
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CyclotomicField>>>> = OnceLock::new();
        let mut cache = CACHE.get_or_init(Default::default).lock().unwrap();
        Ok(cache
            .entry(r)
            .or_insert_with(|| {
                let modulus = cyclotomic_polynomial(r)
                    .into_iter()
                    .map(Rational::from_integer)
                    .collect();
                Arc::new(CyclotomicField { r, modulus })
            })
            .clone())
    }

    pub fn order(&self) -> u32 {
        self.r
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    fn reduce(&self, mut c: Vec<Rational>) -> Vec<Rational> {
        let d = self.degree();
        for i in (d..c.len()).rev() {
            let t = std::mem::take(&mut c[i]);
            if !t.is_zero() {
                for j in 0..d {
                    c[i - d + j] -= &t * &self.modulus[j];
                }
            }
        }
        c.truncate(d);
        c.resize(d, Rational::zero());
        c
    }
}

/// An element of `Q(zeta_r)` as a polynomial in `zeta` of degree below `phi(r)`.
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    coeffs: Vec<Rational>,
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.r == other.field.r && self.coeffs == other.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Cyclotomic {
    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        Cyclotomic {
            field: field.clone(),
            coeffs: vec![Rational::zero(); field.degree()],
        }
    }

    pub fn from_rational(field: &Arc<CyclotomicField>, q: Rational) -> Self {
        let mut z = Self::zero(field);
        z.coeffs[0] = q;
        z
    }

    pub fn one(field: &Arc<CyclotomicField>) -> Self {
        Self::from_rational(field, Rational::one())
    }

    /// `zeta^e` for any integer `e`.
    pub fn zeta_pow(field: &Arc<CyclotomicField>, e: i64) -> Self {
        let e = e.rem_euclid(field.r as i64) as usize;
        let mut c = vec![Rational::zero(); e + 1];
        c[e] = Rational::one();
        Cyclotomic {
            field: field.clone(),
            coeffs: field.reduce(c),
        }
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// The rational value, when the element lies in `Q`.
    pub fn to_rational(&self) -> Option<Rational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coeffs[0].clone())
    }

    fn same_field(&self, rhs: &Self) {
        assert_eq!(self.field.r, rhs.field.r, "mixed cyclotomic fields");
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// Quotient and remainder in `Q[x]`; `b` must be nonzero and trimmed.
fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    if a.len() < b.len() {
        return (vec![], trim(rem));
    }
    let db = b.len() - 1;
    let lead_inv = b[db].recip();
    let mut q = vec![Rational::zero(); a.len() - db];
    for i in (0..q.len()).rev() {
        let c = &rem[i + db] * &lead_inv;
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                let t = &c * bj;
                rem[i + j] -= t;
            }
        }
        q[i] = c;
    }
    (trim(q), trim(rem))
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

impl Scalar for Cyclotomic {
    fn zero_like(&self) -> Self {
        Cyclotomic::zero(&self.field)
    }

    fn one_like(&self) -> Self {
        Cyclotomic::one(&self.field)
    }

    fn is_zero_value(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn plus(&self, rhs: &Self) -> Self {
        self.same_field(rhs);
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    fn minus(&self, rhs: &Self) -> Self {
        self.same_field(rhs);
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    fn times(&self, rhs: &Self) -> Self {
        self.same_field(rhs);
        let prod = poly_mul(&self.coeffs, &rhs.coeffs);
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.field.reduce(prod),
        }
    }

    fn negated(&self) -> Self {
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    /// Extended Euclid against `Phi_r`, which is irreducible.
    fn try_inverse(&self) -> Option<Self> {
        if self.is_zero_value() {
            return None;
        }
        let (mut r0, mut r1) = (self.field.modulus.clone(), trim(self.coeffs.clone()));
        let (mut s0, mut s1): (Vec<Rational>, Vec<Rational>) = (vec![], vec![Rational::one()]);
        while r1.len() > 1 {
            let (q, rem) = poly_divmod(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r1 is a nonzero constant c with s1 * self = c (mod Phi_r)
        let c_inv = r1[0].recip();
        let coeffs = s1.iter().map(|x| x * &c_inv).collect();
        Some(Cyclotomic {
            field: self.field.clone(),
            coeffs: self.field.reduce(coeffs),
        })
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => fmt_rational(c),
                1 => format!("{}*z", fmt_rational(c)),
                _ => format!("{}*z^{i}", fmt_rational(c)),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc{}({})", self.field.r, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{frac, rat};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn known_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn zeta_has_order_r() {
        for r in 1..=12 {
            let f = CyclotomicField::get(r).unwrap();
            let z = Cyclotomic::zeta_pow(&f, 1);
            let mut acc = Cyclotomic::one(&f);
            for i in 1..=r {
                acc = acc.times(&z);
                assert_eq!(acc.is_one_value(), i == r, "r={r} i={i}");
            }
        }
    }

    #[test]
    fn power_sums_collapse() {
        for r in 1..=8u32 {
            let f = CyclotomicField::get(r).unwrap();
            for e in -3..12i64 {
                let s = (0..r as i64)
                    .map(|l| Cyclotomic::zeta_pow(&f, l * e))
                    .fold(Cyclotomic::zero(&f), |a, b| a.plus(&b));
                let expect = if e % r as i64 == 0 { rat(r as i64) } else { rat(0) };
                assert_eq!(s.to_rational(), Some(expect));
            }
        }
    }

    #[test]
    fn inverse_of_one_plus_zeta() {
        let f = CyclotomicField::get(5).unwrap();
        let x = Cyclotomic::one(&f).plus(&Cyclotomic::zeta_pow(&f, 1));
        let y = x.try_inverse().unwrap();
        assert!(x.times(&y).is_one_value());
        let h = Cyclotomic::from_rational(&f, frac(1, 2));
        assert_eq!(h.try_inverse().unwrap().to_rational(), Some(rat(2)));
        assert!(Cyclotomic::zero(&f).try_inverse().is_none());
    }

    #[test]
    fn guard_on_order() {
        assert!(matches!(CyclotomicField::get(65), Err(Error::SizeLimit(_))));
    }
}
