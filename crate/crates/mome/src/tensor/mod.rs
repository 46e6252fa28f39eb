//! Dense float tensors and a reverse-mode autodiff tape.
//!
//! The tensor type is a flat row-major `Vec<f32>` plus a shape. All
//! differentiable computation goes through [`Tape`], which records every
//! operation and replays them in exact reverse order on
//! [`Tape::backward`]. A tape and its tensors belong to one thread;
//! independent tapes may run on separate threads freely.

mod kernels;
mod tape;

pub use tape::{Tape, TensorId};

use rand::Rng;
use rand_distr::{Distribution, Normal};

use crate::error::{MomeError, Result};

/// Dense N-dimensional array of `f32` in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor {
    shape: Vec<usize>,
    data: Vec<f32>,
    requires_grad: bool,
}

impl Tensor {
    /// Build a tensor from a shape and matching flat data.
    pub fn from_vec(shape: Vec<usize>, data: Vec<f32>) -> Result<Self> {
        let n: usize = shape.iter().product();
        if n != data.len() {
            return Err(MomeError::Shape(format!(
                "shape {:?} implies {} elements, got {}",
                shape,
                n,
                data.len()
            )));
        }
        Ok(Self { shape, data, requires_grad: false })
    }

    pub fn zeros(shape: Vec<usize>) -> Self {
        let n: usize = shape.iter().product();
        Self { shape, data: vec![0.0; n], requires_grad: false }
    }

    pub fn filled(shape: Vec<usize>, value: f32) -> Self {
        let n: usize = shape.iter().product();
        Self { shape, data: vec![value; n], requires_grad: false }
    }

    pub fn scalar(value: f32) -> Self {
        Self { shape: vec![1], data: vec![value], requires_grad: false }
    }

    /// Gaussian-initialized tensor, used for network weights.
    pub fn randn<R: Rng>(shape: Vec<usize>, std: f32, rng: &mut R) -> Self {
        let n: usize = shape.iter().product();
        let dist = Normal::new(0.0f32, std).expect("std must be finite and positive");
        let data = (0..n).map(|_| dist.sample(rng)).collect();
        Self { shape, data, requires_grad: false }
    }

    /// Mark this tensor as a trainable parameter.
    pub fn with_grad(mut self) -> Self {
        self.requires_grad = true;
        self
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn numel(&self) -> usize {
        self.data.len()
    }

    pub fn data(&self) -> &[f32] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f32] {
        &mut self.data
    }

    pub fn requires_grad(&self) -> bool {
        self.requires_grad
    }

    pub fn is_scalar(&self) -> bool {
        self.data.len() == 1
    }

    /// Scalar value of a single-element tensor.
    pub fn item(&self) -> f32 {
        debug_assert!(self.is_scalar());
        self.data[0]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, f32> {
        self.data.iter()
    }

    /// True if every element is finite.
    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand_chacha::ChaCha8Rng;
    use rand::SeedableRng;

    #[test]
    fn from_vec_rejects_mismatched_length() {
        let err = Tensor::from_vec(vec![2, 3], vec![0.0; 5]).unwrap_err();
        assert!(matches!(err, MomeError::Shape(_)));
    }

    #[test]
    fn randn_is_seed_deterministic() {
        let mut a = ChaCha8Rng::seed_from_u64(9);
        let mut b = ChaCha8Rng::seed_from_u64(9);
        let ta = Tensor::randn(vec![4, 4], 0.5, &mut a);
        let tb = Tensor::randn(vec![4, 4], 0.5, &mut b);
        assert_eq!(ta.data(), tb.data());
    }
}
