//! Arithmetic in GF(p^k) and linear algebra over it.
//!
//! Elements are encoded as integers `0..q`: the code `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`
//! stands for the polynomial `c_0 + c_1 x + ... + c_{k-1} x^{k-1}` reduced modulo the
//! field's modulus. For a prime field the code is simply the residue.
//!
//! The modulus is the smallest monic irreducible polynomial of degree `k` over GF(p), where
//! polynomials are ordered by the integer encoding of their non-leading coefficients
//! (equivalently: lexicographically from the `x^{k-1}` coefficient down). For `k = 1`
//! the modulus is `x`.

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 16;

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` as `p^k` with `p` prime, if possible.
pub fn prime_power_decomposition(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && q % p != 0 {
        p += 1;
    }
    if q % p != 0 {
        // no factor up to sqrt(q): q is prime
        return Some((q, 1));
    }
    let mut rest = q;
    let mut k = 0;
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

pub fn is_prime_power(q: u64) -> bool {
    prime_power_decomposition(q).is_some()
}

/// The three primitive operations exposed for checked evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Mul,
    Inv,
}

/// The finite field GF(p^k) with a fixed modulus and log/antilog tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl FiniteField {
    /// Builds GF(p^k).
    pub fn new(p: u64, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::InvalidDegree);
        }
        let q = p
            .checked_pow(k)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or(Error::FieldTooLarge {
                order: p.saturating_pow(k),
                limit: MAX_ORDER,
            })?;
        let p32 = p as u32;
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            smallest_irreducible(p32, k as usize)
        };
        let mut field = FiniteField {
            p: p32,
            k,
            q: q as u32,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
        };
        field.build_tables();
        Ok(field)
    }

    /// Builds the field of order `q`, which must be a prime power.
    pub fn with_order(q: u64) -> Result<Self> {
        let (p, k) = prime_power_decomposition(q).ok_or(Error::NotPrimePower(q))?;
        Self::new(p, k)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Coefficients `c_0..=c_k` of the monic modulus.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    fn digits(&self, mut a: u32) -> Vec<u32> {
        let mut out = vec![0; self.k as usize];
        for d in out.iter_mut() {
            *d = a % self.p;
            a /= self.p;
        }
        out
    }

    fn from_digits(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    /// Schoolbook polynomial product reduced modulo the modulus. Only used to
    /// build the tables.
    fn mul_poly(&self, a: u32, b: u32) -> u32 {
        let p = self.p;
        let k = self.k as usize;
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u32; 2 * k];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for deg in (k..2 * k).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            for (i, &m) in self.modulus.iter().enumerate().take(k) {
                let idx = deg - k + i;
                prod[idx] = (prod[idx] + (p - c) * m) % p;
            }
            prod[deg] = 0;
        }
        self.from_digits(&prod[..k])
    }

    fn build_tables(&mut self) {
        let q = self.q;
        let order = q - 1;
        let mut generator = None;
        'candidates: for g in 1..q {
            let mut exp = Vec::with_capacity(order as usize);
            let mut x = 1u32;
            for i in 0..order {
                if i > 0 && x == 1 {
                    continue 'candidates;
                }
                exp.push(x);
                x = self.mul_poly(x, g);
            }
            if x == 1 {
                generator = Some(exp);
                break;
            }
        }
        let exp = generator.expect("the multiplicative group of a finite field is cyclic");
        let mut log = vec![0u32; q as usize];
        for (i, &x) in exp.iter().enumerate() {
            log[x as usize] = i as u32;
        }
        self.exp = exp;
        self.log = log;
    }

    pub fn contains(&self, a: u32) -> bool {
        a < self.q
    }

    fn check(&self, a: u32) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                element: a,
                order: self.q,
            })
        }
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            return (a + b) % self.p;
        }
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let (mut out, mut place) = (0, 1);
        for _ in 0..self.k {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let mut a = a;
        let (mut out, mut place) = (0, 1);
        for _ in 0..self.k {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let order = self.q - 1;
        let e = (self.log[a as usize] + self.log[b as usize]) % order;
        self.exp[e as usize]
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        self.check(a)?;
        if a == 0 {
            return Err(Error::InverseOfZero);
        }
        let order = self.q - 1;
        Ok(self.exp[((order - self.log[a as usize]) % order) as usize])
    }

    /// Range-checked evaluation of a single operation. For [`FieldOp::Inv`] the
    /// second operand is inverted and `a` is ignored.
    pub fn apply(&self, op: FieldOp, a: u32, b: u32) -> Result<u32> {
        self.check(a)?;
        self.check(b)?;
        match op {
            FieldOp::Add => Ok(self.add(a, b)),
            FieldOp::Mul => Ok(self.mul(a, b)),
            FieldOp::Inv => self.inv(b),
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }
}

fn poly_rem(p: u32, num: &[u32], den: &[u32]) -> Vec<u32> {
    // den is monic
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    while rem.len() > dd {
        let c = *rem.last().unwrap();
        let shift = rem.len() - 1 - dd;
        if c != 0 {
            for (i, &d) in den.iter().enumerate() {
                rem[shift + i] = (rem[shift + i] + (p - c) * d % p) % p;
            }
        }
        rem.pop();
    }
    rem
}

/// Monic polynomial of degree `deg` whose lower coefficients encode `code` in base `p`.
fn monic_from_code(p: u32, deg: usize, mut code: u32) -> Vec<u32> {
    let mut coeffs = vec![0; deg + 1];
    for c in coeffs.iter_mut().take(deg) {
        *c = code % p;
        code /= p;
    }
    coeffs[deg] = 1;
    coeffs
}

/// Irreducibility of a monic polynomial over GF(p) by trial division by every
/// monic polynomial of degree `1..=deg/2`.
pub fn is_irreducible(p: u32, poly: &[u32]) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        for code in 0..p.pow(d as u32) {
            let divisor = monic_from_code(p, d, code);
            if poly_rem(p, poly, &divisor).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(p: u32, k: usize) -> Vec<u32> {
    (0..p.pow(k as u32))
        .map(|code| monic_from_code(p, k, code))
        .find(|poly| is_irreducible(p, poly))
        .expect("irreducible polynomials exist in every degree")
}

/// A vector in GF(q)^d, stored as element codes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GfVector {
    pub coords: Vec<u32>,
}

impl GfVector {
    pub fn new(coords: Vec<u32>) -> Self {
        GfVector { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Integer code with the first coordinate most significant, so that code
    /// order is lexicographic order of coordinate tuples.
    pub fn encode(&self, q: u32) -> u64 {
        self.coords
            .iter()
            .fold(0u64, |acc, &c| acc * q as u64 + c as u64)
    }

    pub fn decode(mut code: u64, q: u32, dim: usize) -> Self {
        let mut coords = vec![0; dim];
        for c in coords.iter_mut().rev() {
            *c = (code % q as u64) as u32;
            code /= q as u64;
        }
        GfVector { coords }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn dot(&self, field: &FiniteField, other: &GfVector) -> u32 {
        self.coords
            .iter()
            .zip(&other.coords)
            .fold(0, |acc, (&a, &b)| field.add(acc, field.mul(a, b)))
    }

    /// Scales so the first nonzero coordinate is 1.
    pub fn normalized(&self, field: &FiniteField) -> GfVector {
        match self.coords.iter().find(|&&c| c != 0) {
            None => self.clone(),
            Some(&lead) => {
                let inv = field.inv(lead).expect("nonzero");
                GfVector::new(self.coords.iter().map(|&c| field.mul(c, inv)).collect())
            }
        }
    }
}

/// Rank of a list of vectors by Gaussian elimination over `field`.
pub fn rank(field: &FiniteField, vecs: &[GfVector]) -> Result<usize> {
    let Some(first) = vecs.first() else {
        return Ok(0);
    };
    let dim = first.dim();
    let mut rows: Vec<Vec<u32>> = Vec::with_capacity(vecs.len());
    for v in vecs {
        if v.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: v.dim(),
            });
        }
        for &c in &v.coords {
            field.check(c)?;
        }
        rows.push(v.coords.clone());
    }
    let mut rank = 0;
    for col in 0..dim {
        let Some(pivot) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = field.inv(rows[rank][col])?;
        for c in rows[rank].iter_mut() {
            *c = field.mul(*c, inv);
        }
        for i in 0..rows.len() {
            if i != rank && rows[i][col] != 0 {
                let factor = rows[i][col];
                for c in 0..dim {
                    let sub = field.mul(factor, rows[rank][c]);
                    rows[i][c] = field.sub(rows[i][c], sub);
                }
            }
        }
        rank += 1;
    }
    Ok(rank)
}

/// True iff no nontrivial linear combination of `vecs` vanishes.
pub fn linearly_independent(field: &FiniteField, vecs: &[GfVector]) -> Result<bool> {
    if let Some(first) = vecs.first() {
        if vecs.len() > first.dim() {
            return Ok(false);
        }
    }
    Ok(rank(field, vecs)? == vecs.len())
}
