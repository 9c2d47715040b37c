//! Operation counting.
//!
//! Every algorithm in this crate performs its field arithmetic through an
//! [`Ops`] context. [`Uncounted`] compiles down to plain arithmetic;
//! [`OpCounter`] tallies multiplications (divisions included) and additions
//! (subtractions included). Negation is free.

use crate::field::Field;

/// Arithmetic context for field operations.
pub trait Ops {
    fn tally_mul(&mut self);
    fn tally_add(&mut self);

    #[inline]
    fn add<F: Field>(&mut self, a: &F, b: &F) -> F {
        self.tally_add();
        a.add_ref(b)
    }

    #[inline]
    fn sub<F: Field>(&mut self, a: &F, b: &F) -> F {
        self.tally_add();
        a.sub_ref(b)
    }

    #[inline]
    fn mul<F: Field>(&mut self, a: &F, b: &F) -> F {
        self.tally_mul();
        a.mul_ref(b)
    }

    #[inline]
    fn div<F: Field>(&mut self, a: &F, b: &F) -> F {
        self.tally_mul();
        a.div_ref(b)
    }

    #[inline]
    fn neg<F: Field>(&mut self, a: &F) -> F {
        a.neg_ref()
    }
}

/// Context that does no bookkeeping.
#[derive(Debug, Default, Clone, Copy)]
pub struct Uncounted;

impl Ops for Uncounted {
    #[inline(always)]
    fn tally_mul(&mut self) {}
    #[inline(always)]
    fn tally_add(&mut self) {}
}

/// Tally of field operations performed through this context.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OpCounter {
    pub multiplications: u64,
    pub additions: u64,
}

impl OpCounter {
    pub fn new() -> Self {
        Self::default()
    }
}

impl Ops for OpCounter {
    #[inline]
    fn tally_mul(&mut self) {
        self.multiplications += 1;
    }
    #[inline]
    fn tally_add(&mut self) {
        self.additions += 1;
    }
}

/// Runs `computation` with a fresh counter and returns its result together
/// with the final tally.
pub fn with_counting<R>(computation: impl FnOnce(&mut OpCounter) -> R) -> (R, OpCounter) {
    let mut counter = OpCounter::new();
    let result = computation(&mut counter);
    (result, counter)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    #[test]
    fn bracket_costs_two_mults_one_add() {
        let v = |x: i64| Rational::from_i64(x);
        let (a, b, c, d) = (v(3), v(5), v(7), v(2));
        let (r, counts) = with_counting(|ops| {
            let ab = ops.mul(&a, &b);
            let cd = ops.mul(&c, &d);
            ops.sub(&ab, &cd)
        });
        assert_eq!(r, v(1));
        assert_eq!(counts, OpCounter { multiplications: 2, additions: 1 });
    }

    #[test]
    fn empty_computation_counts_nothing() {
        let ((), counts) = with_counting(|_| ());
        assert_eq!(counts, OpCounter::default());
    }

    #[test]
    fn division_counts_as_mult_and_negation_is_free() {
        let ((), counts) = with_counting(|ops| {
            let x = ops.div(&6.0f64, &3.0);
            let _ = ops.neg(&x);
        });
        assert_eq!(counts, OpCounter { multiplications: 1, additions: 0 });
    }
}
