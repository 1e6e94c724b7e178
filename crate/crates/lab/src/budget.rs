//! Wall-clock budgets for the core solvers.

use std::time::{Duration, Instant};

use ecclab_core::solvers::{Budget, Unlimited};

/// Polls the clock once every `STRIDE` search nodes.
const STRIDE: u32 = 1024;

#[derive(Debug, Clone, Copy)]
pub struct Deadline {
    at: Instant,
    countdown: u32,
    expired: bool,
}

impl Deadline {
    pub fn after(limit: Duration) -> Self {
        Deadline { at: Instant::now() + limit, countdown: 0, expired: false }
    }
}

impl Budget for Deadline {
    fn exhausted(&mut self) -> bool {
        if self.expired {
            return true;
        }
        if self.countdown == 0 {
            self.countdown = STRIDE;
            self.expired = Instant::now() >= self.at;
        }
        self.countdown -= 1;
        self.expired
    }
}

/// Either no limit or a fresh deadline per solve.
#[derive(Debug, Clone, Copy)]
pub enum TimeLimit {
    None,
    Deadline(Deadline),
}

impl TimeLimit {
    /// A limit measured from now; `None` or a non-positive value means unlimited.
    pub fn from_secs(secs: Option<f64>) -> Self {
        match secs {
            Some(s) if s > 0.0 && s.is_finite() => TimeLimit::Deadline(Deadline::after(Duration::from_secs_f64(s))),
            _ => TimeLimit::None,
        }
    }
}

impl Budget for TimeLimit {
    fn exhausted(&mut self) -> bool {
        match self {
            TimeLimit::None => Unlimited.exhausted(),
            TimeLimit::Deadline(d) => d.exhausted(),
        }
    }
}
