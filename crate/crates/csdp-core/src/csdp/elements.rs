use crate::algebra::{LinearSpace, Matrix};
use crate::scalar;

/// Element `(g, v)` of the product group `G ⋈ V`.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupElement<V> {
    /// Invertible matrix part.
    pub g: Matrix,
    /// Vector part.
    pub v: V,
}

impl<V: LinearSpace> GroupElement<V> {
    /// Bundle a matrix and a vector part.
    pub fn new(g: Matrix, v: V) -> Self {
        GroupElement { g, v }
    }

    /// Whether both parts are finite.
    pub fn is_finite(&self) -> bool {
        self.g.is_finite() && self.v.is_finite()
    }
}

/// Element `(xi_g, xi_v)` of the Lie algebra `g ⋉ V` of the product.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraElement<V> {
    /// Matrix-algebra part.
    pub xi_g: Matrix,
    /// Vector part.
    pub xi_v: V,
}

impl<V: LinearSpace> AlgebraElement<V> {
    /// Bundle a matrix and a vector part.
    pub fn new(xi_g: Matrix, xi_v: V) -> Self {
        AlgebraElement { xi_g, xi_v }
    }

    /// `self + c * rhs`, componentwise.
    pub fn axpy(&self, c: f64, rhs: &Self) -> Self {
        AlgebraElement {
            xi_g: self.xi_g.axpy(c, &rhs.xi_g),
            xi_v: self.xi_v.axpy(c, &rhs.xi_v),
        }
    }

    /// Componentwise sum.
    pub fn add(&self, rhs: &Self) -> Self {
        self.axpy(1.0, rhs)
    }

    /// Componentwise difference.
    pub fn sub(&self, rhs: &Self) -> Self {
        self.axpy(-1.0, rhs)
    }

    /// Scalar multiple.
    pub fn scale(&self, c: f64) -> Self {
        AlgebraElement {
            xi_g: self.xi_g.scale(c),
            xi_v: self.xi_v.scale(c),
        }
    }

    /// Largest absolute component across both parts.
    pub fn max_abs(&self) -> f64 {
        scalar::max(self.xi_g.max_abs(), self.xi_v.max_abs())
    }

    /// Euclidean norm of all components.
    pub fn norm(&self) -> f64 {
        let g = self.xi_g.norm();
        let v = self.xi_v.norm();
        scalar::sqrt(g * g + v * v)
    }

    /// Whether both parts are finite.
    pub fn is_finite(&self) -> bool {
        self.xi_g.is_finite() && self.xi_v.is_finite()
    }
}

/// Element `(mu, gamma)` of the dual space `g* x V*`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoalgebraElement<D> {
    /// Momentum dual to the matrix-algebra part.
    pub mu: Matrix,
    /// Momentum dual to the vector part.
    pub gamma: D,
}

impl<D: LinearSpace> CoalgebraElement<D> {
    /// Bundle the two momentum components.
    pub fn new(mu: Matrix, gamma: D) -> Self {
        CoalgebraElement { mu, gamma }
    }

    /// `self + c * rhs`, componentwise.
    pub fn axpy(&self, c: f64, rhs: &Self) -> Self {
        CoalgebraElement {
            mu: self.mu.axpy(c, &rhs.mu),
            gamma: self.gamma.axpy(c, &rhs.gamma),
        }
    }

    /// Componentwise sum.
    pub fn add(&self, rhs: &Self) -> Self {
        self.axpy(1.0, rhs)
    }

    /// Componentwise difference.
    pub fn sub(&self, rhs: &Self) -> Self {
        self.axpy(-1.0, rhs)
    }

    /// Scalar multiple.
    pub fn scale(&self, c: f64) -> Self {
        CoalgebraElement {
            mu: self.mu.scale(c),
            gamma: self.gamma.scale(c),
        }
    }

    /// Largest absolute component across both parts.
    pub fn max_abs(&self) -> f64 {
        scalar::max(self.mu.max_abs(), self.gamma.max_abs())
    }

    /// Euclidean norm of all components.
    pub fn norm(&self) -> f64 {
        let m = self.mu.norm();
        let g = self.gamma.norm();
        scalar::sqrt(m * m + g * g)
    }

    /// Whether both parts are finite.
    pub fn is_finite(&self) -> bool {
        self.mu.is_finite() && self.gamma.is_finite()
    }
}
