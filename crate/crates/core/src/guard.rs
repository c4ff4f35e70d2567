use crate::error::{Error, Result};

/// Upper bound on how many objects an exhaustive operation may materialize.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guard {
    cap: u128,
}

impl Guard {
    pub const DEFAULT_CAP: u128 = 1 << 24;

    pub fn new(cap: u128) -> Self {
        Guard { cap }
    }

    pub fn cap(&self) -> u128 {
        self.cap
    }

    pub fn check(&self, what: &str, count: u128) -> Result<()> {
        if count > self.cap {
            return Err(Error::GuardExceeded {
                what: what.to_string(),
                count,
                cap: self.cap,
            });
        }
        Ok(())
    }

    /// Like [`Guard::check`] for a count given as `base^exp`, which may not fit.
    pub fn check_pow(&self, what: &str, base: u128, exp: u32) -> Result<()> {
        match base.checked_pow(exp) {
            Some(count) => self.check(what, count),
            None => Err(Error::GuardExceeded {
                what: what.to_string(),
                count: u128::MAX,
                cap: self.cap,
            }),
        }
    }
}

impl Default for Guard {
    fn default() -> Self {
        Guard::new(Self::DEFAULT_CAP)
    }
}
