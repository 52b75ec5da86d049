use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in `x_1, …, x_n` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Poly {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Poly {
        let mut p = Poly::zero(nvars);
        p.add_term(Monomial(vec![0; nvars]), c.into());
        p
    }

    pub fn one(nvars: usize) -> Poly {
        Poly::constant(nvars, 1)
    }

    /// `x_{i+1}`.
    pub fn var(nvars: usize, i: usize) -> Poly {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Poly::monomial(e, BigInt::one())
    }

    pub fn monomial(exps: Vec<u32>, c: BigInt) -> Poly {
        let mut p = Poly::zero(exps.len());
        p.add_term(Monomial(exps), c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().all(|(m, c)| m.degree() == 0 && c.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m.clone()).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::one(self.nvars), |acc, _| &acc * self)
    }

    /// Integer gcd of the coefficients, nonnegative.
    pub fn integer_content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    fn scale(&self, c: &BigInt) -> Poly {
        let mut p = Poly::zero(self.nvars);
        for (m, a) in &self.terms {
            p.add_term(m.clone(), a * c);
        }
        p
    }

    /// `self / b` when the division is exact over the integers.
    pub fn div_exact(&self, b: &Poly) -> Option<Poly> {
        let (bm, bc) = b.leading()?;
        let mut r = self.clone();
        let mut q = Poly::zero(self.nvars);
        while let Some((rm, rc)) = r.leading() {
            if !bm.divides(rm) || !rc.is_multiple_of(bc) {
                return None;
            }
            let m = Monomial(rm.0.iter().zip(&bm.0).map(|(a, b)| a - b).collect());
            let t = Poly::monomial(m.0, rc / bc);
            r = &r - &(&t * b);
            q = &q + &t;
        }
        Some(q)
    }

    fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|m| m.0[v]).max().unwrap_or(0)
    }

    fn max_var(&self) -> Option<usize> {
        (0..self.nvars).rev().find(|&v| self.terms.keys().any(|m| m.0[v] > 0))
    }

    /// Coefficients of `x_v^k`, as polynomials free of `x_v`.
    fn coefficients_in(&self, v: usize) -> BTreeMap<u32, Poly> {
        let mut out: BTreeMap<u32, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = std::mem::take(&mut e[v]);
            out.entry(k).or_insert_with(|| Poly::zero(self.nvars)).add_term(Monomial(e), c.clone());
        }
        out
    }

    fn content_in(&self, v: usize) -> Poly {
        self.coefficients_in(v).values().fold(Poly::zero(self.nvars), |g, c| gcd(&g, c))
    }

    fn times_var_pow(&self, v: usize, k: u32) -> Poly {
        let mut p = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            e[v] += k;
            p.add_term(Monomial(e), c.clone());
        }
        p
    }

    /// Pseudo-remainder of `self` by `b` as polynomials in `x_v`.
    fn prem(&self, b: &Poly, v: usize) -> Poly {
        let db = b.degree_in(v);
        let lb = b.coefficients_in(v).remove(&db).expect("nonzero divisor");
        let mut r = self.clone();
        while !r.is_zero() && r.degree_in(v) >= db {
            let dr = r.degree_in(v);
            let lr = r.coefficients_in(v).remove(&dr).expect("nonzero");
            r = &(&r * &lb) - &(&lr * b).times_var_pow(v, dr - db);
        }
        r
    }

    /// The largest monomial times positive integer dividing every term.
    pub fn monomial_content(&self) -> Poly {
        let exps = (0..self.nvars).map(|v| self.terms.keys().map(|m| m.0[v]).min().unwrap_or(0)).collect();
        Poly::monomial(exps, self.integer_content())
    }

    /// Sign-normalized: positive leading coefficient.
    fn positive(self) -> Poly {
        match self.leading() {
            Some((_, c)) if c.is_negative() => -self,
            _ => self,
        }
    }
}

fn monomial_gcd(a: &Poly, b: &Poly) -> Poly {
    let (ma, ca) = a.leading().expect("nonzero");
    let (mb, cb) = b.leading().expect("nonzero");
    let exps = ma.0.iter().zip(&mb.0).map(|(x, y)| *x.min(y)).collect();
    Poly::monomial(exps, ca.gcd(cb))
}

/// Greatest common divisor over `ℤ[x]`, with positive leading coefficient.
/// Recursive on the largest variable present, using a primitive remainder
/// sequence.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.clone().positive();
    }
    if b.is_zero() {
        return a.clone().positive();
    }
    let n = a.nvars;
    let v = match (a.max_var(), b.max_var()) {
        (None, None) => return Poly::constant(n, a.integer_content().gcd(&b.integer_content())),
        (x, y) => x.max(y).expect("some variable"),
    };
    let (ca, cb) = (a.content_in(v), b.content_in(v));
    let c = gcd(&ca, &cb);
    let mut p = a.div_exact(&ca).expect("content divides");
    let mut q = b.div_exact(&cb).expect("content divides");
    if p.degree_in(v) < q.degree_in(v) {
        std::mem::swap(&mut p, &mut q);
    }
    while !q.is_zero() {
        if q.degree_in(v) == 0 {
            // q is a unit up to content
            return c.positive();
        }
        let r = p.prem(&q, v);
        p = q;
        q = if r.is_zero() { r } else { r.div_exact(&r.content_in(v)).expect("content divides") };
    }
    let pp = p.div_exact(&p.content_in(v)).expect("content divides");
    (&c * &pp).positive()
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut p = self.clone();
        for (m, c) in &rhs.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs.clone())
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&BigInt::from(-1))
    }
}

impl Mul for &Poly {
    type Output = Poly;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &Poly) -> Poly {
        let mut p = Poly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = Monomial(ma.0.iter().zip(&mb.0).map(|(a, b)| a + b).collect());
                p.add_term(m, ca * cb);
            }
        }
        p
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let vars: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{e}", i + 1) })
                    .collect();
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (vars.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{}", vars.join("*"))?,
                (false, false) => write!(f, "{mag}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}

/// A fraction in lowest terms with positive leading denominator coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Frac {
    pub num: Poly,
    pub den: Poly,
}

impl Frac {
    pub fn new(num: Poly, den: Poly) -> Frac {
        assert!(!den.is_zero(), "zero denominator");
        let n = num.nvars;
        if num.is_zero() {
            return Frac { num, den: Poly::one(n) };
        }
        let (mut num, mut den) = (num, den);
        // Cheap case first: the non-monomial part of the denominator divides
        // the numerator, which is what Laurent mutations produce.
        let dm = den.monomial_content();
        let rest = den.div_exact(&dm).expect("monomial content divides");
        if !rest.is_constant() {
            if let Some(q) = num.div_exact(&rest) {
                num = q;
                den = dm;
            }
        }
        let g = if den.is_monomial() || num.is_monomial() {
            monomial_gcd(&num.monomial_content(), &den.monomial_content())
        } else {
            gcd(&num, &den)
        };
        num = num.div_exact(&g).expect("gcd divides");
        den = den.div_exact(&g).expect("gcd divides");
        if den.leading().map(|(_, c)| c.is_negative()).unwrap_or(false) {
            num = -num;
            den = -den;
        }
        Frac { num, den }
    }

    pub fn from_poly(p: Poly) -> Frac {
        let n = p.nvars;
        Frac::new(p, Poly::one(n))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn mul(&self, o: &Frac) -> Frac {
        Frac::new(&self.num * &o.num, &self.den * &o.den)
    }

    pub fn add(&self, o: &Frac) -> Frac {
        Frac::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }

    pub fn div(&self, o: &Frac) -> Frac {
        assert!(!o.is_zero(), "division by zero");
        Frac::new(&self.num * &o.den, &self.den * &o.num)
    }

    pub fn pow(&self, k: u32) -> Frac {
        Frac { num: self.num.pow(k), den: self.den.pow(k) }
    }

    /// Denominator is a single monomial with coefficient one.
    pub fn is_laurent(&self) -> bool {
        self.den.is_monomial() && self.den.leading().map(|(_, c)| c.is_one()).unwrap_or(false)
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &Poly| if p.len() > 1 { format!("({p})") } else { p.to_string() };
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}
