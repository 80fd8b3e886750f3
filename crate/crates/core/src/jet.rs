//! Second-order forward-mode dual numbers.
//!
//! A [`Jet`] carries a value together with its first and second derivative
//! along a single seeded direction. Seeding one coordinate at a time gives
//! exact (to roundoff) partial derivatives and diagonal second derivatives,
//! which is all a Laplacian needs.

use core::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{Num, One, Zero};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet<T> {
    pub v: T,
    pub d: T,
    pub dd: T,
}

pub type RealJet = Jet<f64>;
pub type ComplexJet = Jet<Complex64>;

impl<T: Num + Copy> Jet<T> {
    pub fn constant(v: T) -> Self {
        Self { v, d: T::zero(), dd: T::zero() }
    }

    /// The seeded variable itself.
    pub fn variable(v: T) -> Self {
        Self { v, d: T::one(), dd: T::zero() }
    }

    pub fn scale(self, s: T) -> Self {
        Self { v: self.v * s, d: self.d * s, dd: self.dd * s }
    }

    pub fn recip(self) -> Self {
        let inv = T::one() / self.v;
        let inv2 = inv * inv;
        let two = T::one() + T::one();
        Self {
            v: inv,
            d: T::zero() - self.d * inv2,
            dd: (two * self.d * self.d * inv - self.dd) * inv2,
        }
    }

    /// Integer power, negative exponents allowed when the value is non-zero.
    pub fn powi(self, e: i32) -> Self {
        if e < 0 {
            return self.recip().powi(-e);
        }
        let mut acc = Self::constant(T::one());
        for _ in 0..e {
            acc = acc * self;
        }
        acc
    }
}

impl<T: Num + Copy> Zero for Jet<T> {
    fn zero() -> Self {
        Self::constant(T::zero())
    }
    fn is_zero(&self) -> bool {
        self.v.is_zero() && self.d.is_zero() && self.dd.is_zero()
    }
}

impl<T: Num + Copy> One for Jet<T> {
    fn one() -> Self {
        Self::constant(T::one())
    }
}

impl<T: Num + Copy> Add for Jet<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self { v: self.v + o.v, d: self.d + o.d, dd: self.dd + o.dd }
    }
}

impl<T: Num + Copy> Sub for Jet<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self { v: self.v - o.v, d: self.d - o.d, dd: self.dd - o.dd }
    }
}

impl<T: Num + Copy + Neg<Output = T>> Neg for Jet<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { v: -self.v, d: -self.d, dd: -self.dd }
    }
}

impl<T: Num + Copy> Mul for Jet<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let two = T::one() + T::one();
        Self {
            v: self.v * o.v,
            d: self.d * o.v + self.v * o.d,
            dd: self.dd * o.v + two * self.d * o.d + self.v * o.dd,
        }
    }
}

impl<T: Num + Copy> Div for Jet<T> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Self) -> Self {
        self * o.recip()
    }
}

impl RealJet {
    pub fn sin(self) -> Self {
        let (s, c) = (libm::sin(self.v), libm::cos(self.v));
        Self { v: s, d: c * self.d, dd: c * self.dd - s * self.d * self.d }
    }

    pub fn cos(self) -> Self {
        let (s, c) = (libm::sin(self.v), libm::cos(self.v));
        Self { v: c, d: -s * self.d, dd: -s * self.dd - c * self.d * self.d }
    }

    pub fn ln(self) -> Self {
        let inv = 1.0 / self.v;
        Self { v: libm::log(self.v), d: self.d * inv, dd: self.dd * inv - self.d * self.d * inv * inv }
    }

    /// `exp(i self)`.
    pub fn cis(self) -> ComplexJet {
        let e = Complex64::new(libm::cos(self.v), libm::sin(self.v));
        let i = Complex64::i();
        Jet {
            v: e,
            d: i * self.d * e,
            dd: (i * self.dd - self.d * self.d) * e,
        }
    }

    pub fn to_complex(self) -> ComplexJet {
        Jet { v: self.v.into(), d: self.d.into(), dd: self.dd.into() }
    }
}
