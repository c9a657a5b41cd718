use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Motivic Adams–Novikov degree: stem, filtration, weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Tridegree {
    pub s: i64,
    pub f: i64,
    pub w: i64,
}

impl Tridegree {
    pub const ZERO: Tridegree = Tridegree { s: 0, f: 0, w: 0 };

    pub const fn new(s: i64, f: i64, w: i64) -> Self {
        Tridegree { s, f, w }
    }

    /// Drops the filtration, leaving the homotopy bidegree.
    pub const fn bidegree(self) -> Bidegree {
        Bidegree {
            s: self.s,
            w: self.w,
        }
    }
}

impl Add for Tridegree {
    type Output = Tridegree;
    fn add(self, rhs: Tridegree) -> Tridegree {
        Tridegree::new(self.s + rhs.s, self.f + rhs.f, self.w + rhs.w)
    }
}

impl AddAssign for Tridegree {
    fn add_assign(&mut self, rhs: Tridegree) {
        *self = *self + rhs;
    }
}

impl Sub for Tridegree {
    type Output = Tridegree;
    fn sub(self, rhs: Tridegree) -> Tridegree {
        Tridegree::new(self.s - rhs.s, self.f - rhs.f, self.w - rhs.w)
    }
}

impl Neg for Tridegree {
    type Output = Tridegree;
    fn neg(self) -> Tridegree {
        Tridegree::new(-self.s, -self.f, -self.w)
    }
}

impl Mul<Tridegree> for i64 {
    type Output = Tridegree;
    fn mul(self, rhs: Tridegree) -> Tridegree {
        Tridegree::new(self * rhs.s, self * rhs.f, self * rhs.w)
    }
}

impl fmt::Display for Tridegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.s, self.f, self.w)
    }
}

/// Homotopy bidegree `(s, w)` of `π_{s,w}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Bidegree {
    pub s: i64,
    pub w: i64,
}

impl Bidegree {
    pub const fn new(s: i64, w: i64) -> Self {
        Bidegree { s, w }
    }
}

impl Add for Bidegree {
    type Output = Bidegree;
    fn add(self, rhs: Bidegree) -> Bidegree {
        Bidegree::new(self.s + rhs.s, self.w + rhs.w)
    }
}

impl Mul<Bidegree> for i64 {
    type Output = Bidegree;
    fn mul(self, rhs: Bidegree) -> Bidegree {
        Bidegree::new(self * rhs.s, self * rhs.w)
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.s, self.w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn tri() -> impl Strategy<Value = Tridegree> {
        (-1000i64..1000, -1000i64..1000, -1000i64..1000)
            .prop_map(|(s, f, w)| Tridegree::new(s, f, w))
    }

    proptest! {
        #[test]
        fn addition_is_an_abelian_monoid(a in tri(), b in tri(), c in tri()) {
            prop_assert_eq!((a + b) + c, a + (b + c));
            prop_assert_eq!(a + b, b + a);
            prop_assert_eq!(a + Tridegree::ZERO, a);
            prop_assert_eq!(a - a, Tridegree::ZERO);
        }
    }

    #[test]
    fn scalar_multiple() {
        assert_eq!(2 * Tridegree::new(1, 1, 1), Tridegree::new(2, 2, 2));
        assert_eq!(Tridegree::new(7, 1, 4).bidegree(), Bidegree::new(7, 4));
    }
}
