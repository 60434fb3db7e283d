//! Dense row-major tensor with an optional gradient buffer.
//!
//! The tensor is the carrier for images, feature maps and network
//! parameters. Parameter tensors allocate the gradient buffer; activations
//! normally do not.

use crate::error::{Result, SintError};
use crate::scalar::Real;

#[derive(Debug, Clone, PartialEq)]
pub struct Tensor<S> {
    shape: Vec<usize>,
    data: Vec<S>,
    grad: Option<Vec<S>>,
}

impl<S: Real> Tensor<S> {
    pub fn zeros(shape: &[usize]) -> Self {
        let n = shape.iter().product();
        Tensor {
            shape: shape.to_vec(),
            data: vec![S::zero(); n],
            grad: None,
        }
    }

    pub fn from_vec(shape: &[usize], data: Vec<S>) -> Result<Self> {
        let n: usize = shape.iter().product();
        if n != data.len() {
            return Err(SintError::shape(
                "Tensor::from_vec",
                format!("{n} values for shape {shape:?}"),
                data.len(),
            ));
        }
        Ok(Tensor {
            shape: shape.to_vec(),
            data,
            grad: None,
        })
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn numel(&self) -> usize {
        self.data.len()
    }

    pub fn data(&self) -> &[S] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [S] {
        &mut self.data
    }

    /// Allocates (zeroed) the gradient buffer if absent.
    pub fn ensure_grad(&mut self) {
        if self.grad.is_none() {
            self.grad = Some(vec![S::zero(); self.data.len()]);
        }
    }

    pub fn grad(&self) -> Option<&[S]> {
        self.grad.as_deref()
    }

    pub fn grad_mut(&mut self) -> &mut [S] {
        self.ensure_grad();
        self.grad.as_deref_mut().unwrap()
    }

    pub fn zero_grad(&mut self) {
        if let Some(g) = &mut self.grad {
            g.fill(S::zero());
        }
    }

    /// Row-major offset of a multi-dimensional index.
    pub fn offset(&self, index: &[usize]) -> usize {
        debug_assert_eq!(index.len(), self.shape.len());
        let mut off = 0;
        for (i, &ix) in index.iter().enumerate() {
            debug_assert!(ix < self.shape[i]);
            off = off * self.shape[i] + ix;
        }
        off
    }

    pub fn at(&self, index: &[usize]) -> S {
        self.data[self.offset(index)]
    }

    pub fn set(&mut self, index: &[usize], value: S) {
        let off = self.offset(index);
        self.data[off] = value;
    }

    /// Interprets the tensor as `[channels, height, width]`.
    pub fn dims3(&self) -> Result<(usize, usize, usize)> {
        match self.shape.as_slice() {
            &[c, h, w] => Ok((c, h, w)),
            other => Err(SintError::shape("dims3", "[c, h, w]", format!("{other:?}"))),
        }
    }

    /// Contiguous row `y` of channel `c` for a `[C, H, W]` tensor.
    pub fn row(&self, c: usize, y: usize) -> &[S] {
        let (_, h, w) = (self.shape[0], self.shape[1], self.shape[2]);
        let start = (c * h + y) * w;
        &self.data[start..start + w]
    }

    pub fn row_mut(&mut self, c: usize, y: usize) -> &mut [S] {
        let (h, w) = (self.shape[1], self.shape[2]);
        let start = (c * h + y) * w;
        &mut self.data[start..start + w]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, S> {
        self.data.iter()
    }

    /// True when every element (and gradient, if present) is finite.
    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
            && self.grad.as_ref().is_none_or(|g| g.iter().all(|v| v.is_finite()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_vec_checks_length() {
        assert!(Tensor::<f64>::from_vec(&[2, 3], vec![0.0; 6]).is_ok());
        assert!(Tensor::<f64>::from_vec(&[2, 3], vec![0.0; 5]).is_err());
    }

    #[test]
    fn grad_matches_shape() {
        let mut t = Tensor::<f64>::zeros(&[4, 2]);
        t.ensure_grad();
        assert_eq!(t.grad().unwrap().len(), t.numel());
    }

    #[test]
    fn row_major_offsets() {
        let t = Tensor::<f64>::from_vec(&[2, 2, 3], (0..12).map(f64::from).collect()).unwrap();
        assert_eq!(t.at(&[1, 0, 2]), 8.0);
        assert_eq!(t.row(1, 1), &[9.0, 10.0, 11.0]);
    }
}
