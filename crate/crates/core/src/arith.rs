//! Small-integer number theory shared by the index arithmetic and the ladder.

use std::sync::{Arc, Mutex};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Sieve of Eratosthenes over `0..=limit`.
#[derive(Debug, Clone)]
pub struct Sieve {
    composite: Vec<bool>,
}

impl Sieve {
    pub fn new(limit: usize) -> Self {
        let mut composite = vec![false; limit + 1];
        for slot in composite.iter_mut().take(2.min(limit + 1)) {
            *slot = true;
        }
        let mut i = 2;
        while i * i <= limit {
            if !composite[i] {
                let mut j = i * i;
                while j <= limit {
                    composite[j] = true;
                    j += i;
                }
            }
            i += 1;
        }
        Sieve { composite }
    }

    pub fn limit(&self) -> usize {
        self.composite.len() - 1
    }

    pub fn is_prime(&self, n: usize) -> bool {
        n <= self.limit() && !self.composite[n]
    }

    pub fn primes(&self) -> impl Iterator<Item = usize> + '_ {
        (2..=self.limit()).filter(move |&n| !self.composite[n])
    }

    /// Largest prime strictly below `n`, if any.
    pub fn largest_prime_below(&self, n: usize) -> Option<usize> {
        (2..n.min(self.limit() + 1))
            .rev()
            .find(|&k| !self.composite[k])
    }
}

static SIEVE: Mutex<Option<Arc<Sieve>>> = Mutex::new(None);

/// Process-wide cached sieve covering at least `0..=limit`.
pub fn sieve(limit: usize) -> Arc<Sieve> {
    let mut slot = SIEVE.lock().expect("sieve cache poisoned");
    match slot.as_ref() {
        Some(s) if s.limit() >= limit => Arc::clone(s),
        _ => {
            let grown = Arc::new(Sieve::new(limit.max(1024)));
            *slot = Some(Arc::clone(&grown));
            grown
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorisation as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn smallest_prime_divisor(n: u64) -> Option<u64> {
    factorize(n).first().map(|&(p, _)| p)
}

/// Returns `Some((p, k))` when `n = p^k` with `p` prime and `k >= 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    match factorize(n).as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}

/// Distinct prime factors of `n`, found by trial division with primes up to
/// `bound`. Returns `None` if a cofactor above 1 survives the trial division.
pub fn prime_factors_bounded(n: &BigUint, bound: usize) -> Option<Vec<u64>> {
    let mut rest = n.clone();
    let mut out = Vec::new();
    if rest.is_zero() {
        return None;
    }
    for p in sieve(bound).primes().take_while(|&p| p <= bound) {
        let bp = BigUint::from(p);
        let mut hit = false;
        loop {
            let (q, r) = rest.div_rem(&bp);
            if !r.is_zero() {
                break;
            }
            rest = q;
            hit = true;
        }
        if hit {
            out.push(p as u64);
        }
        if rest.is_one() {
            break;
        }
    }
    rest.is_one().then_some(out)
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Exponent of the prime `p` in `n`.
pub fn valuation(n: &BigUint, p: u64) -> u64 {
    if n.is_zero() {
        return u64::MAX;
    }
    let bp = BigUint::from(p);
    let mut rest = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = rest.div_rem(&bp);
        if !r.is_zero() {
            return v;
        }
        rest = q;
        v += 1;
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sieve_small() {
        let s = Sieve::new(30);
        let p: Vec<_> = s.primes().collect();
        assert_eq!(p, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(s.largest_prime_below(16), Some(13));
        assert_eq!(s.largest_prime_below(2), None);
    }

    #[test]
    fn factorize_and_prime_power() {
        assert_eq!(factorize(6435), vec![(3, 2), (5, 1), (11, 1), (13, 1)]);
        assert_eq!(prime_power(32), Some((2, 5)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn bounded_factors() {
        let n = BigUint::from(300540195u64);
        assert_eq!(
            prime_factors_bounded(&n, 32),
            Some(vec![3, 5, 17, 19, 23, 29, 31])
        );
        assert_eq!(prime_factors_bounded(&BigUint::from(37u32), 32), None);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(16, 8), BigUint::from(12870u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(valuation(&factorial(8), 2), 7);
    }
}
