//! Degree-truncated Poincaré series with arbitrary-precision coefficients.
//!
//! A series carries its truncation degree; every binary operation requires
//! equal truncations and errors out otherwise. Coefficients are non-negative
//! big integers (all quantities in this crate are dimensions).

use crate::error::CoreError;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PoincareSeries {
    trunc: usize,
    coeffs: Vec<BigUint>,
}

impl PoincareSeries {
    pub fn zero(trunc: usize) -> Self {
        PoincareSeries {
            trunc,
            coeffs: vec![BigUint::zero(); trunc + 1],
        }
    }

    pub fn one(trunc: usize) -> Self {
        Self::monomial(trunc, 0)
    }

    /// The single term `t^deg` (zero series if `deg > trunc`).
    pub fn monomial(trunc: usize, deg: usize) -> Self {
        let mut s = Self::zero(trunc);
        if deg <= trunc {
            s.coeffs[deg] = BigUint::one();
        }
        s
    }

    pub fn from_u64_coeffs(trunc: usize, coeffs: &[u64]) -> Self {
        let mut s = Self::zero(trunc);
        for (d, &c) in coeffs.iter().enumerate().take(trunc + 1) {
            s.coeffs[d] = BigUint::from(c);
        }
        s
    }

    pub fn truncation(&self) -> usize {
        self.trunc
    }

    pub fn coeff(&self, d: usize) -> &BigUint {
        &self.coeffs[d]
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn set_coeff(&mut self, d: usize, c: BigUint) {
        self.coeffs[d] = c;
    }

    fn check(&self, other: &Self) -> Result<(), CoreError> {
        if self.trunc != other.trunc {
            Err(CoreError::TruncationMismatch(self.trunc, other.trunc))
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, CoreError> {
        self.check(other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        Ok(out)
    }

    /// Truncated product.
    pub fn mul(&self, other: &Self) -> Result<Self, CoreError> {
        self.check(other)?;
        let mut out = Self::zero(self.trunc);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(self.trunc + 1 - i).enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Multiply in place by the geometric series `(1 - t^k)^{-1}`, `k >= 1`.
    /// Implemented as a single prefix-sum pass.
    pub fn mul_geom_inv(&mut self, k: usize) {
        assert!(k >= 1, "geometric factor needs k >= 1");
        for d in k..=self.trunc {
            let prev = self.coeffs[d - k].clone();
            self.coeffs[d] += prev;
        }
    }

    /// `t^k * self`, truncated (terms pushed above the truncation are lost;
    /// the result is exact only up to the shared truncation).
    pub fn shift_up(&self, k: usize) -> Self {
        let mut out = Self::zero(self.trunc);
        for d in 0..=self.trunc.saturating_sub(k) {
            out.coeffs[d + k] = self.coeffs[d].clone();
        }
        out
    }

    /// `t^{-k} * self`; errors if any coefficient below degree `k` is nonzero.
    pub fn shift_down(&self, k: usize) -> Result<Self, CoreError> {
        for d in 0..k.min(self.trunc + 1) {
            if !self.coeffs[d].is_zero() {
                return Err(CoreError::NonzeroLowOrder { shift: k, degree: d });
            }
        }
        let mut out = Self::zero(self.trunc);
        for d in k..=self.trunc {
            out.coeffs[d - k] = self.coeffs[d].clone();
        }
        Ok(out)
    }

    /// `self += mult * t^shift * other`. The workhorse of the assembler.
    pub fn add_scaled_shifted(
        &mut self,
        other: &Self,
        mult: u64,
        shift: usize,
    ) -> Result<(), CoreError> {
        self.check(other)?;
        if mult == 0 {
            return Ok(());
        }
        let m = BigUint::from(mult);
        for d in 0..=self.trunc.saturating_sub(shift) {
            if !other.coeffs[d].is_zero() {
                self.coeffs[d + shift] += &other.coeffs[d] * &m;
            }
        }
        Ok(())
    }

    /// Re-truncate to a smaller degree (identity when `new_trunc >= trunc`).
    pub fn truncate_to(&self, new_trunc: usize) -> Self {
        if new_trunc >= self.trunc {
            return self.clone();
        }
        let mut out = Self::zero(new_trunc);
        out.coeffs.clone_from_slice(&self.coeffs[..=new_trunc]);
        out
    }
}

impl fmt::Display for PoincareSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "t")?,
                1 => write!(f, "{c}*t")?,
                _ if c.is_one() => write!(f, "t^{d}")?,
                _ => write!(f, "{c}*t^{d}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
