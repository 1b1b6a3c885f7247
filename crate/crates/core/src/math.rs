//! Float routines that resolve to `std` intrinsics or `libm`, depending on
//! the build. Keeping them behind one shim lets every algorithm module stay
//! `no_std`-clean without sprinkling cfg attributes around.

#[cfg(feature = "std")]
mod imp {
    pub fn sqrt(x: f64) -> f64 {
        x.sqrt()
    }
    pub fn abs(x: f64) -> f64 {
        x.abs()
    }
    pub fn floor(x: f64) -> f64 {
        x.floor()
    }
    pub fn ceil(x: f64) -> f64 {
        x.ceil()
    }
    pub fn atan(x: f64) -> f64 {
        x.atan()
    }
    pub fn log2(x: f64) -> f64 {
        x.log2()
    }
}

#[cfg(not(feature = "std"))]
mod imp {
    pub fn sqrt(x: f64) -> f64 {
        libm::sqrt(x)
    }
    pub fn abs(x: f64) -> f64 {
        libm::fabs(x)
    }
    pub fn floor(x: f64) -> f64 {
        libm::floor(x)
    }
    pub fn ceil(x: f64) -> f64 {
        libm::ceil(x)
    }
    pub fn atan(x: f64) -> f64 {
        libm::atan(x)
    }
    pub fn log2(x: f64) -> f64 {
        libm::log2(x)
    }
}

pub(crate) use imp::{abs, atan, ceil, floor, log2, sqrt};

pub(crate) fn to_degrees(rad: f64) -> f64 {
    rad * (180.0 / core::f64::consts::PI)
}
