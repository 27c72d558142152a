//! Exact arithmetic in the cyclotomic field Q(zeta_N).
//!
//! Elements are stored in the power basis `1, z, ..., z^(phi(N)-1)` with
//! rational coefficients, reduced modulo the N-th cyclotomic polynomial
//! Phi_N. The representation is canonical, so equality is coefficient
//! comparison.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::AlgebraError;

/// Euler totient of `n`.
pub fn euler_phi(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn divisors(n: u32) -> Vec<u32> {
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

/// Exact division of integer polynomials, `num / den`, requiring zero
/// remainder. Coefficients are little-endian; `den` need not be monic but
/// the division must come out exact (it always does for Phi_N factors).
fn exact_int_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    let mut rem: Vec<BigRational> = num
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    let lead = BigRational::from_integer(den[dn].clone());
    let qd = num.len() - 1 - dn;
    let mut quot = vec![BigRational::zero(); qd + 1];
    for k in (0..=qd).rev() {
        let c = &rem[k + dn] / &lead;
        quot[k] = c.clone();
        for (i, d) in den.iter().enumerate() {
            let sub = &c * &BigRational::from_integer(d.clone());
            rem[k + i] = &rem[k + i] - sub;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-exact polynomial division");
    quot.into_iter()
        .map(|c| {
            assert!(c.is_integer(), "non-integer quotient coefficient");
            c.to_integer()
        })
        .collect()
}

/// Coefficients of the N-th cyclotomic polynomial Phi_N, little-endian,
/// monic of degree phi(N). Computed by exact division of x^N - 1 by the
/// Phi_d over all proper divisors d of N, and cached per modulus.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic_polynomial requires n >= 1");
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<BigInt>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    let result = if n == 1 {
        vec![BigInt::from(-1), BigInt::from(1)]
    } else {
        // x^n - 1
        let mut num = vec![BigInt::zero(); n as usize + 1];
        num[0] = BigInt::from(-1);
        num[n as usize] = BigInt::one();
        let mut quot = num;
        for d in divisors(n) {
            if d < n {
                let phi_d = cyclotomic_polynomial(d);
                quot = exact_int_div(&quot, &phi_d);
            }
        }
        quot
    };
    debug_assert_eq!(result.len() as u32 - 1, euler_phi(n));
    cache.lock().unwrap().insert(n, result.clone());
    result
}

/// An exact element of Q(zeta_N) in the canonical power basis mod Phi_N.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloNumber {
    modulus: u32,
    coeffs: Vec<BigRational>,
}

impl CycloNumber {
    /// The zero element of Q(zeta_N).
    pub fn zero(modulus: u32) -> Self {
        assert!(modulus >= 1);
        CycloNumber {
            modulus,
            coeffs: vec![BigRational::zero(); euler_phi(modulus) as usize],
        }
    }

    /// The unit element of Q(zeta_N).
    pub fn one(modulus: u32) -> Self {
        Self::from_rational(modulus, BigRational::one())
    }

    pub fn from_integer(modulus: u32, value: i64) -> Self {
        Self::from_rational(modulus, BigRational::from_integer(BigInt::from(value)))
    }

    pub fn from_rational(modulus: u32, value: BigRational) -> Self {
        let mut out = Self::zero(modulus);
        if !out.coeffs.is_empty() {
            out.coeffs[0] = value;
        } else {
            // phi(1) = 0 never happens: phi(n) >= 1 for n >= 1
            unreachable!("phi(N) is positive");
        }
        out
    }

    /// Reduce an arbitrary coefficient vector (little-endian in z) into the
    /// canonical power basis modulo Phi_N.
    pub fn from_poly(modulus: u32, mut poly: Vec<BigRational>) -> Self {
        let phi = euler_phi(modulus) as usize;
        let modpoly = cyclotomic_polynomial(modulus);
        // long division by the monic Phi_N; keep the remainder
        while poly.len() > phi {
            let k = poly.len() - 1;
            let c = poly[k].clone();
            if !c.is_zero() {
                for (i, m) in modpoly.iter().enumerate() {
                    let idx = k - phi + i;
                    let sub = &c * &BigRational::from_integer(m.clone());
                    poly[idx] = &poly[idx] - sub;
                }
            }
            poly.pop();
        }
        poly.resize(phi, BigRational::zero());
        CycloNumber { modulus, coeffs: poly }
    }

    /// Canonical representation of zeta_N^k (k taken mod N).
    pub fn zeta_pow(modulus: u32, k: i64) -> Self {
        let n = modulus as i64;
        let k = k.rem_euclid(n) as usize;
        let mut poly = vec![BigRational::zero(); k + 1];
        poly[k] = BigRational::one();
        Self::from_poly(modulus, poly)
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one(self.modulus)
    }

    fn check_same_modulus(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.modulus != other.modulus {
            return Err(AlgebraError::MixedModuli(self.modulus, other.modulus));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("mixed cyclotomic moduli")
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_same_modulus(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycloNumber { modulus: self.modulus, coeffs })
    }

    pub fn neg(&self) -> Self {
        CycloNumber {
            modulus: self.modulus,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("mixed cyclotomic moduli")
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_same_modulus(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.modulus));
        }
        let mut poly = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                poly[i + j] = &poly[i + j] + a * b;
            }
        }
        Ok(Self::from_poly(self.modulus, poly))
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        CycloNumber {
            modulus: self.modulus,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Galois conjugation zeta -> zeta^(-1); complex conjugation on the
    /// standard embedding.
    pub fn conj(&self) -> Self {
        let n = self.modulus;
        let mut acc = Self::zero(n);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = Self::zeta_pow(n, -(k as i64)).scale(c);
            acc = acc.add(&term);
        }
        acc
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// Phi_N over Q.
    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        // extended gcd of self (as a polynomial) and Phi_N
        let phi: Vec<BigRational> = cyclotomic_polynomial(self.modulus)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        let (mut r0, mut r1) = (trim(self.coeffs.clone()), trim(phi));
        let (mut s0, mut s1) = (vec![BigRational::one()], vec![BigRational::zero()]);
        while !r1.is_empty() {
            let (q, rem) = poly_divmod(&r0, &r1);
            let s_next = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = s_next;
        }
        // r0 = gcd (a nonzero constant since Phi_N is irreducible over Q)
        assert_eq!(r0.len(), 1, "cyclotomic polynomial must be coprime to a nonzero element");
        let c = r0[0].clone();
        let inv_coeffs = s0.into_iter().map(|x| x / &c).collect();
        Ok(Self::from_poly(self.modulus, inv_coeffs))
    }

    pub fn div(&self, other: &Self) -> Result<Self, AlgebraError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.modulus);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Floating approximation at zeta = exp(2 pi i / N). Display only; never
    /// used in equality decisions.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.modulus as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            let Some(cf) = c.to_f64() else { continue };
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / n;
            re += cf * theta.cos();
            im += cf * theta.sin();
        }
        (re, im)
    }

    /// Float rendering "x+yi" to 9 decimal places.
    pub fn float_string(&self) -> String {
        let (re, im) = self.to_complex();
        let sign = if im < 0.0 { "-" } else { "+" };
        format!("{:.9}{}{:.9}i", re, sign, im.abs())
    }
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] = out[i].clone() + x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] = &out[i] - y;
    }
    trim(out)
}

fn poly_divmod(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    assert!(!den.is_empty(), "division by the zero polynomial");
    if num.len() < den.len() {
        return (Vec::new(), num.to_vec());
    }
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let lead = den[dn].clone();
    let mut quot = vec![BigRational::zero(); num.len() - dn];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dn] / &lead;
        if !c.is_zero() {
            quot[k] = c.clone();
            for (i, d) in den.iter().enumerate() {
                let sub = &c * d;
                rem[k + i] = &rem[k + i] - sub;
            }
        }
    }
    (trim(quot), trim(rem))
}

impl fmt::Display for CycloNumber {
    /// Power-basis rendering "a0 + a1*z + ..." with rationals as "p/q".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = format_rational(&c.abs());
            let body = match k {
                0 => mag,
                1 if mag == "1" => "z".to_string(),
                1 => format!("{mag}*z"),
                _ if mag == "1" => format!("z^{k}"),
                _ => format!("{mag}*z^{k}"),
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() { format!("-{body}") } else { body });
            } else {
                parts.push(format!("{} {}", if c.is_negative() { "-" } else { "+" }, body));
            }
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo(N={}; {})", self.modulus, self)
    }
}

fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    // Independent oracle: naive polynomial division of x^n - 1 by the
    // product of the Phi_d over proper divisors d, everything expanded by
    // schoolbook multiplication.
    fn cyclotomic_by_product_oracle(n: u32) -> Vec<BigInt> {
        fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
            let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    out[i + j] += x * y;
                }
            }
            out
        }
        if n == 1 {
            return vec![big(-1), big(1)];
        }
        let mut prod = vec![big(1)];
        for d in divisors(n) {
            if d < n {
                prod = mul(&prod, &cyclotomic_by_product_oracle(d));
            }
        }
        let mut num = vec![BigInt::zero(); n as usize + 1];
        num[0] = big(-1);
        num[n as usize] = big(1);
        exact_int_div(&num, &prod)
    }

    #[test]
    fn cyclotomic_small() {
        assert_eq!(cyclotomic_polynomial(1), vec![big(-1), big(1)]);
        assert_eq!(cyclotomic_polynomial(2), vec![big(1), big(1)]);
        // derived by dividing x^6-1 by Phi_1 Phi_2 Phi_3
        assert_eq!(cyclotomic_polynomial(6), vec![big(1), big(-1), big(1)]);
        for n in 1..=24 {
            assert_eq!(cyclotomic_polynomial(n), cyclotomic_by_product_oracle(n), "Phi_{n}");
        }
    }

    #[test]
    fn zeta_powers_mod_6() {
        let n = 6;
        assert_eq!(CycloNumber::zeta_pow(n, 0), CycloNumber::one(n));
        // z^3 = -1 mod Phi_6 = z^2 - z + 1
        assert_eq!(CycloNumber::zeta_pow(n, 3), CycloNumber::from_integer(n, -1));
        // z^4 = -z
        assert_eq!(
            CycloNumber::zeta_pow(n, 4),
            CycloNumber::zeta_pow(n, 1).neg()
        );
    }

    #[test]
    fn cube_roots_sum_to_zero() {
        let n = 6;
        let sum = CycloNumber::one(n)
            .add(&CycloNumber::zeta_pow(n, 2))
            .add(&CycloNumber::zeta_pow(n, 4));
        assert!(sum.is_zero());
    }

    #[test]
    fn sqrt3i_float() {
        // 1 + 2 z^2 = sqrt(3) i
        let x = CycloNumber::from_integer(6, 1)
            .add(&CycloNumber::zeta_pow(6, 2).scale(&BigRational::from_integer(big(2))));
        let (re, im) = x.to_complex();
        assert!(re.abs() < 1e-9);
        assert!((im - 3f64.sqrt()).abs() < 1e-9);
        assert_eq!(x.float_string(), "0.000000000+1.732050808i");
    }

    #[test]
    fn conj_of_one_plus_two_zeta_sq() {
        let two = BigRational::from_integer(big(2));
        let x = CycloNumber::from_integer(6, 1).add(&CycloNumber::zeta_pow(6, 2).scale(&two));
        let expect = CycloNumber::from_integer(6, 1).add(&CycloNumber::zeta_pow(6, 4).scale(&two));
        assert_eq!(x.conj(), expect);
        let (re, im) = x.to_complex();
        let (cre, cim) = x.conj().to_complex();
        assert!((re - cre).abs() < 1e-9);
        assert!((im + cim).abs() < 1e-9);
    }

    #[test]
    fn inverse_of_zero_errors() {
        assert!(CycloNumber::zero(6).inv().is_err());
    }

    #[test]
    fn mixed_moduli_error() {
        let a = CycloNumber::one(6);
        let b = CycloNumber::one(4);
        assert!(a.try_add(&b).is_err());
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    fn display_renders_rationals() {
        let half = BigRational::new(big(1), big(2));
        let x = CycloNumber::from_rational(6, half)
            .add(&CycloNumber::zeta_pow(6, 1).scale(&BigRational::from_integer(big(-2))));
        assert_eq!(x.to_string(), "1/2 - 2*z");
    }
}
