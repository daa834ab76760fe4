//! Double-double ("compensated") arithmetic for the series oracle.
//!
//! A value is represented as an unevaluated sum `hi + lo` of two f64 words
//! with |lo| <= ulp(hi)/2, giving roughly 32 significant decimal digits.
//! Only the handful of operations the ascending Bessel series needs are
//! implemented: addition, multiplication, and division by f64 values, plus
//! full double-double addition and multiplication for term accumulation.
//!
//! The error-free transformations are the classic ones: `two_sum` is Knuth's
//! branch-free version, `two_prod` uses a fused multiply-add. See Dekker
//! (1971) and the QD library of Hida, Li & Bailey for the composite
//! operation layouts used here.

/// Error-free sum: returns (s, e) with s = fl(a + b) and a + b = s + e exactly.
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// Error-free sum under the assumption |a| >= |b| (Dekker's fast version).
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

/// Error-free product: returns (p, e) with p = fl(a * b) and a * b = p + e exactly.
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

/// A double-double number `hi + lo`.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[cfg(test)]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact product of two f64 values as a double-double.
    #[inline]
    pub fn from_prod(a: f64, b: f64) -> Dd {
        let (hi, lo) = two_prod(a, b);
        Dd { hi, lo }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn abs_hi(self) -> f64 {
        self.hi.abs()
    }

    /// Full double-double addition.
    pub fn add(self, rhs: Dd) -> Dd {
        let (s1, mut e1) = two_sum(self.hi, rhs.hi);
        let (s2, e2) = two_sum(self.lo, rhs.lo);
        e1 += s2;
        let (s1, mut e1) = quick_two_sum(s1, e1);
        e1 += e2;
        let (hi, lo) = quick_two_sum(s1, e1);
        Dd { hi, lo }
    }

    /// Full double-double multiplication.
    pub fn mul(self, rhs: Dd) -> Dd {
        let (p, mut e) = two_prod(self.hi, rhs.hi);
        e += self.hi * rhs.lo + self.lo * rhs.hi;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    /// Multiplication by a plain f64.
    pub fn mul_f64(self, rhs: f64) -> Dd {
        let (p, mut e) = two_prod(self.hi, rhs);
        e += self.lo * rhs;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    /// Division by a plain f64 (one Newton correction on the hi quotient).
    pub fn div_f64(self, rhs: f64) -> Dd {
        let q1 = self.hi / rhs;
        // Residual self - q1 * rhs, computed exactly.
        let (p, e) = two_prod(q1, rhs);
        let r_hi = self.hi - p;
        let r_lo = self.lo - e;
        let q2 = (r_hi + r_lo) / rhs;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }
    }
}

// ============================================================================
// tests
// ============================================================================
