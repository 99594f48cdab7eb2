use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// Default singularity threshold: within 5° of a singular angle.
pub const DEFAULT_THRESHOLD: f64 = 0.087_155_742_747_658_17; // sin(pi/36)

/// Rotation angle of the gyrator transform, normalized to `(-pi, pi]`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct Angle(f64);

impl Angle {
    pub const ZERO: Angle = Angle(0.0);

    pub fn from_radians(rad: f64) -> Self {
        Angle(wrap(rad))
    }

    /// Degrees are wrapped before conversion so whole multiples of 180 stay exact.
    pub fn from_degrees(deg: f64) -> Self {
        let mut d = deg % 360.0;
        if d > 180.0 {
            d -= 360.0;
        } else if d <= -180.0 {
            d += 360.0;
        }
        if d == 180.0 {
            return Angle(PI);
        }
        Angle(wrap(d.to_radians()))
    }

    pub fn radians(self) -> f64 {
        self.0
    }

    pub fn degrees(self) -> f64 {
        self.0.to_degrees()
    }

    pub fn sin(self) -> f64 {
        self.0.sin()
    }

    pub fn cos(self) -> f64 {
        self.0.cos()
    }

    /// Exactly an even multiple of pi.
    pub fn is_zero(self) -> bool {
        self.0 == 0.0
    }

    /// Exactly an odd multiple of pi.
    pub fn is_pi(self) -> bool {
        self.0 == PI
    }

    /// `|sin a| < tau`: singular for the LCC and DFT decompositions.
    pub fn near_kpi(self, tau: f64) -> bool {
        self.0.sin().abs() < tau
    }

    /// `|cos(a/2)| < tau`: singular for the CCC decomposition.
    pub fn near_odd_pi(self, tau: f64) -> bool {
        (self.0 / 2.0).cos().abs() < tau
    }

    pub fn classify(self, tau: f64) -> AngleClass {
        AngleClass {
            near_kpi: self.near_kpi(tau),
            near_odd_pi: self.near_odd_pi(tau),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AngleClass {
    pub near_kpi: bool,
    pub near_odd_pi: bool,
}

fn wrap(rad: f64) -> f64 {
    if rad > -PI && rad <= PI {
        return rad;
    }
    let two_pi = 2.0 * PI;
    let mut r = rad % two_pi;
    if r > PI {
        r -= two_pi;
    } else if r <= -PI {
        r += two_pi;
    }
    r
}

impl Add for Angle {
    type Output = Angle;
    fn add(self, rhs: Angle) -> Angle {
        Angle::from_radians(self.0 + rhs.0)
    }
}

impl Sub for Angle {
    type Output = Angle;
    fn sub(self, rhs: Angle) -> Angle {
        Angle::from_radians(self.0 - rhs.0)
    }
}

impl Neg for Angle {
    type Output = Angle;
    fn neg(self) -> Angle {
        if self.0 == PI {
            self
        } else {
            Angle(-self.0)
        }
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}°", self.degrees())
    }
}
