//! Number-theoretic scalar kernels: Kronecker characters, divisor sums,
//! twisted divisor sums, and (generalized) Bernoulli numbers. All exact.

use crate::{int, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use std::sync::Mutex;

/// Full Kronecker symbol (a/b), defined for all integers including b <= 0 and
/// b even.
pub fn kronecker(a: i64, b: i64) -> i64 {
    if b == 0 {
        return if a == 1 || a == -1 { 1 } else { 0 };
    }
    let mut b = b;
    let mut k: i64 = 1;
    if b < 0 {
        b = -b;
        if a < 0 {
            k = -k;
        }
    }
    // Split off the 2-part of the bottom: (a/2) = 0, 1, -1 for a even,
    // a = +-1 mod 8, a = +-3 mod 8 respectively.
    while b % 2 == 0 {
        b /= 2;
        match a.rem_euclid(8) {
            1 | 7 => {}
            3 | 5 => k = -k,
            _ => return 0,
        }
    }
    // Remaining bottom is odd and positive: ordinary Jacobi symbol.
    k * jacobi(a.rem_euclid(b), b)
}

/// Jacobi symbol (a/n) for a >= 0 and odd n > 0.
fn jacobi(mut a: i64, mut n: i64) -> i64 {
    debug_assert!(a >= 0 && n > 0 && n % 2 == 1);
    let mut result = 1;
    a %= n;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// Real Dirichlet character given as a Kronecker symbol (top/.), carrying an
/// explicit modulus so principal characters of different levels stay distinct.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KroneckerChar {
    pub top: i64,
    pub modulus: i64,
}

impl KroneckerChar {
    /// The trivial character (modulus 1).
    pub fn one() -> Self {
        KroneckerChar { top: 1, modulus: 1 }
    }

    /// Principal character modulo `n`: 1 on units, 0 otherwise.
    pub fn principal(n: i64) -> Self {
        assert!(n >= 1);
        KroneckerChar { top: 1, modulus: n }
    }

    /// chi_m = (m/.) with modulus |m|.
    pub fn symbol(m: i64) -> Self {
        assert!(m != 0);
        KroneckerChar {
            top: m,
            modulus: m.abs().max(1),
        }
    }

    pub fn eval(&self, n: i64) -> i64 {
        if self.modulus > 1 && n.gcd(&self.modulus) != 1 {
            return 0;
        }
        kronecker(self.top, n)
    }

    /// chi(-1): +1 for even characters, -1 for odd ones.
    pub fn parity(&self) -> i64 {
        self.eval(-1)
    }

    /// Equality as characters modulo `n`: same values on all units mod n.
    pub fn eq_mod(&self, other: &KroneckerChar, n: i64) -> bool {
        (1..=n)
            .filter(|a| a.gcd(&n) == 1)
            .all(|a| self.eval(a) == other.eval(a))
    }

    /// Pointwise product character (top multiplies; modulus is the lcm).
    pub fn mul(&self, other: &KroneckerChar) -> Self {
        KroneckerChar {
            top: self.top * other.top,
            modulus: self.modulus.lcm(&other.modulus),
        }
    }
}

/// sigma_r(n) = sum of d^r over divisors of n; 0 for n <= 0.
pub fn sigma(r: u32, n: i64) -> BigInt {
    if n <= 0 {
        return BigInt::zero();
    }
    let mut s = BigInt::zero();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            s += BigInt::from(d).pow(r);
            let e = n / d;
            if e != d {
                s += BigInt::from(e).pow(r);
            }
        }
        d += 1;
    }
    s
}

/// sigma_r(n/m) under the vanishing convention: 0 unless m | n.
pub fn sigma_div(r: u32, n: i64, m: i64) -> BigInt {
    if m <= 0 || n <= 0 || n % m != 0 {
        return BigInt::zero();
    }
    sigma(r, n / m)
}

/// Twisted divisor sum sigma_{r; chi, psi}(n) = sum_{d|n} psi(d) chi(n/d) d^r.
pub fn gen_divisor_sum(r: u32, chi: &KroneckerChar, psi: &KroneckerChar, n: i64) -> BigInt {
    if n <= 0 {
        return BigInt::zero();
    }
    let mut s = BigInt::zero();
    let mut d = 1;
    while d <= n {
        if n % d == 0 {
            let t = psi.eval(d) * chi.eval(n / d);
            if t != 0 {
                s += t * BigInt::from(d).pow(r);
            }
        }
        d += 1;
    }
    s
}

/// sigma_3^#(n) = sum of d^3 over divisors d of n with n/d odd.
pub fn sharp_sigma3(n: i64) -> BigInt {
    if n <= 0 {
        return BigInt::zero();
    }
    let mut s = BigInt::zero();
    for d in 1..=n {
        if n % d == 0 && (n / d) % 2 == 1 {
            s += BigInt::from(d).pow(3);
        }
    }
    s
}

fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

static BERNOULLI_CACHE: Lazy<Mutex<Vec<Rat>>> = Lazy::new(|| Mutex::new(vec![Rat::one()]));

/// Bernoulli number B_k in the x/(e^x - 1) convention (B_1 = -1/2), by the
/// defining recurrence.
pub fn bernoulli(k: u32) -> Rat {
    let mut cache = BERNOULLI_CACHE.lock().unwrap();
    while cache.len() <= k as usize {
        let m = cache.len() as u32;
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        let mut acc = Rat::zero();
        for j in 0..m {
            acc += Rat::from_integer(binomial(m + 1, j)) * &cache[j as usize];
        }
        let b = -acc / Rat::from_integer(BigInt::from(m + 1));
        cache.push(b);
    }
    cache[k as usize].clone()
}

/// Bernoulli polynomial B_k(x) = sum_j C(k,j) B_j x^(k-j).
pub fn bernoulli_poly(k: u32, x: &Rat) -> Rat {
    let mut s = Rat::zero();
    for j in 0..=k {
        let term = Rat::from_integer(binomial(k, j)) * bernoulli(j) * pow_rat(x, k - j);
        s += term;
    }
    s
}

fn pow_rat(x: &Rat, e: u32) -> Rat {
    let mut r = Rat::one();
    for _ in 0..e {
        r *= x;
    }
    r
}

/// Generalized Bernoulli number B_{k,psi} = N^(k-1) sum_{a=1}^{N} psi(a) B_k(a/N)
/// where N is the modulus of psi.
pub fn gen_bernoulli(k: u32, psi: &KroneckerChar) -> Rat {
    let n = psi.modulus.max(1);
    let mut s = Rat::zero();
    for a in 1..=n {
        let chi = psi.eval(a);
        if chi != 0 {
            let x = Rat::new(BigInt::from(a), BigInt::from(n));
            s += int(chi) * bernoulli_poly(k, &x);
        }
    }
    pow_rat(&int(n), k - 1) * s
}
