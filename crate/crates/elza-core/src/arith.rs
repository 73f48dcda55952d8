//! Integer and character arithmetic: prime sieving (plain and segmented),
//! the Kronecker symbol, and fundamental discriminants.

use alloc::vec;
use alloc::vec::Vec;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArithError {
    /// A sieve request would exceed the configured memory budget.
    #[error("sieve limit {limit} exceeds memory budget of {budget} bytes")]
    Resource { limit: u64, budget: u64 },
    #[error("invalid interval: lo {lo} must not exceed hi {hi}")]
    BadInterval { lo: u64, hi: u64 },
    #[error("{0} is not a fundamental discriminant")]
    NotFundamental(i64),
    #[error("kronecker symbol (0/0) is undefined")]
    KroneckerUndefined,
}

/// Default memory budget for plain sieves: enough for a limit of 2^31.
const SIEVE_BUDGET_BYTES: u64 = 1 << 28;

/// Default window length for segmented sieving.
pub const DEFAULT_SEGMENT_LEN: u64 = 1 << 20;

/// Ascending list of all primes below `limit`, immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u64>,
}

impl PrimeTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.primes.iter().copied()
    }

    /// Binary-search membership test (valid for n < limit).
    pub fn contains(&self, n: u64) -> bool {
        self.primes.binary_search(&n).is_ok()
    }
}

/// All primes p with p <= limit, by a bit-packed sieve of Eratosthenes.
///
/// The table includes `limit` itself when prime, matching the convention of
/// "the primes up to X" used throughout the prime-sum statistics.
pub fn sieve_primes(limit: u64) -> Result<PrimeTable, ArithError> {
    if limit / 16 > SIEVE_BUDGET_BYTES {
        return Err(ArithError::Resource {
            limit,
            budget: SIEVE_BUDGET_BYTES,
        });
    }
    let primes = if limit < 2 {
        Vec::new()
    } else {
        small_sieve(limit)
    };
    Ok(PrimeTable { limit, primes })
}

fn small_sieve(limit: u64) -> Vec<u64> {
    // odd-only bitmap: bit i represents 2i+1
    let n = (limit as usize + 1) / 2;
    let mut composite = vec![0u64; n / 64 + 1];
    let mut p = 3u64;
    while p * p <= limit {
        if composite[(p / 2) as usize / 64] >> ((p / 2) % 64) & 1 == 0 {
            let mut m = p * p;
            while m <= limit {
                let i = (m / 2) as usize;
                composite[i / 64] |= 1 << (i % 64);
                m += 2 * p;
            }
        }
        p += 2;
    }
    let mut primes = Vec::with_capacity(if limit > 16 {
        (limit as f64 / (limit as f64).ln() * 1.15) as usize
    } else {
        8
    });
    primes.push(2);
    let mut q = 3u64;
    while q <= limit {
        let i = (q / 2) as usize;
        if composite[i / 64] >> (i % 64) & 1 == 0 {
            primes.push(q);
        }
        q += 2;
    }
    primes
}

/// Primes in the half-open window [lo, hi), segmented so that offsets up to
/// 10^12 and beyond need memory proportional to the window, not the offset.
pub fn sieve_window(lo: u64, hi: u64) -> Result<Vec<u64>, ArithError> {
    sieve_window_with_segment(lo, hi, DEFAULT_SEGMENT_LEN)
}

/// Segmented sieve with a caller-chosen segment length.
pub fn sieve_window_with_segment(
    lo: u64,
    hi: u64,
    segment_len: u64,
) -> Result<Vec<u64>, ArithError> {
    if lo > hi {
        return Err(ArithError::BadInterval { lo, hi });
    }
    if hi - lo > 64 * SIEVE_BUDGET_BYTES {
        return Err(ArithError::Resource {
            limit: hi - lo,
            budget: 64 * SIEVE_BUDGET_BYTES,
        });
    }
    let segment_len = segment_len.max(1 << 10);
    let root = hi.max(4).isqrt() + 1;
    let base = small_sieve(root);
    let mut out = Vec::new();
    let mut seg_lo = lo;
    let mut mask = vec![0u8; segment_len as usize];
    while seg_lo < hi {
        let seg_hi = hi.min(seg_lo + segment_len);
        let len = (seg_hi - seg_lo) as usize;
        mask[..len].fill(0);
        for &p in &base {
            if p * p >= seg_hi {
                break;
            }
            let start = if p * p >= seg_lo {
                p * p
            } else {
                seg_lo.div_ceil(p) * p
            };
            let mut m = start;
            while m < seg_hi {
                mask[(m - seg_lo) as usize] = 1;
                m += p;
            }
        }
        for i in 0..len {
            let n = seg_lo + i as u64;
            // a prime n is never marked: marking starts at p*p > n for p | n
            if n >= 2 && mask[i] == 0 {
                out.push(n);
            }
        }
        seg_lo = seg_hi;
    }
    Ok(out)
}

/// Kronecker symbol (d/n), the completely multiplicative extension of the
/// Jacobi symbol to all nonnegative n.
///
/// Conventions: (d/0) = 1 if |d| = 1 and 0 otherwise; (d/1) = 1;
/// (d/2) = 0 for even d and (-1)^((d^2-1)/8) for odd d.
pub fn kronecker(d: i64, n: u64) -> i32 {
    if n == 0 {
        return if d == 1 || d == -1 { 1 } else { 0 };
    }
    let mut a = d;
    let mut b = n;
    let mut sign = 1i32;
    // factor out twos from n
    if b % 2 == 0 {
        if a % 2 == 0 {
            return 0;
        }
        let two_sym = match (a % 8 + 8) % 8 {
            1 | 7 => 1,
            _ => -1,
        };
        while b % 2 == 0 {
            b /= 2;
            sign *= two_sym;
        }
    }
    if b == 1 {
        return sign;
    }
    // now b odd >= 3; handle sign of d: (d/b) = (-1/b)^[d<0] (|d|/b)
    if a < 0 {
        if b % 4 == 3 {
            sign = -sign;
        }
        a = -a;
    }
    let mut a = (a as u64) % b;
    // Jacobi symbol (a/b) for odd b via quadratic reciprocity
    loop {
        if a == 0 {
            return if b == 1 { sign } else { 0 };
        }
        while a % 2 == 0 {
            a /= 2;
            if matches!(b % 8, 3 | 5) {
                sign = -sign;
            }
        }
        if a == 1 {
            return sign;
        }
        if a % 4 == 3 && b % 4 == 3 {
            sign = -sign;
        }
        let t = b % a;
        b = a;
        a = t;
    }
}

/// A nonzero integer satisfying the fundamental-discriminant condition:
/// d ≡ 1 (mod 4) and squarefree, or d = 4m with m ≡ 2, 3 (mod 4) squarefree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FundamentalDiscriminant(i64);

impl FundamentalDiscriminant {
    pub fn new(d: i64) -> Result<Self, ArithError> {
        if d != 0 && is_fundamental_discriminant(d) {
            Ok(Self(d))
        } else {
            Err(ArithError::NotFundamental(d))
        }
    }

    pub fn get(self) -> i64 {
        self.0
    }

    /// The real primitive character attached to this discriminant.
    pub fn chi(self, n: u64) -> i32 {
        kronecker(self.0, n)
    }
}

fn is_squarefree(mut m: u64) -> bool {
    if m == 0 {
        return false;
    }
    if m % 4 == 0 {
        return false;
    }
    if m % 2 == 0 {
        m /= 2;
    }
    let mut p = 3u64;
    while p * p <= m {
        if m % (p * p) == 0 {
            return false;
        }
        while m % p == 0 {
            m /= p;
        }
        p += 2;
    }
    true
}

/// Predicate form of the `FundamentalDiscriminant` invariant. Note that
/// d = 1 satisfies the invariant; whether it takes part in enumerations is
/// controlled by `include_one` there.
pub fn is_fundamental_discriminant(d: i64) -> bool {
    if d == 0 {
        return false;
    }
    let r4 = d.rem_euclid(4);
    if r4 == 1 {
        return is_squarefree(d.unsigned_abs());
    }
    if r4 == 0 {
        let m = d / 4;
        let mr4 = m.rem_euclid(4);
        return (mr4 == 2 || mr4 == 3) && is_squarefree(m.unsigned_abs());
    }
    false
}

/// Sign filter for discriminant enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignFilter {
    Any,
    Positive,
    Negative,
}

/// Ascending fundamental discriminants in the half-open range [lo, hi).
///
/// The trivial discriminant d = 1 is excluded unless `include_one` is set;
/// the exclusion reproduces the count of 303957 positive fundamental
/// discriminants below 10^6.
pub fn enumerate_fundamental_discriminants(
    lo: i64,
    hi: i64,
    sign: SignFilter,
    include_one: bool,
) -> Vec<FundamentalDiscriminant> {
    if lo >= hi {
        return Vec::new();
    }
    let keep_sign = |d: i64| match sign {
        SignFilter::Any => true,
        SignFilter::Positive => d > 0,
        SignFilter::Negative => d < 0,
    };
    // squarefree sieve over |d| in [max(1,min|bound|) .. ), marking p^2 | m
    let abs_hi = lo.unsigned_abs().max(hi.unsigned_abs()).max(2);
    let root = (abs_hi as f64).sqrt() as u64 + 2;
    let base = small_sieve(root);
    let mut sf = vec![true; abs_hi as usize + 1];
    sf[0] = false;
    for &p in &base {
        let pp = p * p;
        if pp > abs_hi {
            break;
        }
        let mut m = pp;
        while m <= abs_hi {
            sf[m as usize] = false;
            m += pp;
        }
    }
    let mut out = Vec::new();
    for d in lo..hi {
        if d == 0 || !keep_sign(d) || (d == 1 && !include_one) {
            continue;
        }
        let r4 = d.rem_euclid(4);
        let fundamental = if r4 == 1 {
            sf[d.unsigned_abs() as usize]
        } else if r4 == 0 {
            let m = d / 4;
            let mr4 = m.rem_euclid(4);
            (mr4 == 2 || mr4 == 3) && sf[m.unsigned_abs() as usize]
        } else {
            false
        };
        if fundamental {
            out.push(FundamentalDiscriminant(d));
        }
    }
    out
}
