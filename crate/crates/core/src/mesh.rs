//! Uniform periodic meshes. Elements map affinely onto the reference
//! interval `[-1, 1]`.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum MeshError {
    #[error("mesh needs at least one element")]
    NoElements,
    #[error("domain is empty: [{0}, {1}]")]
    EmptyDomain(f64, f64),
}

/// Uniform periodic 1D mesh of `k` elements on `[x_lo, x_hi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mesh1D {
    num_elements: usize,
    x_lo: f64,
    x_hi: f64,
}

impl Mesh1D {
    pub fn new(num_elements: usize, x_lo: f64, x_hi: f64) -> Result<Self, MeshError> {
        if num_elements == 0 {
            return Err(MeshError::NoElements);
        }
        if !(x_hi > x_lo) {
            return Err(MeshError::EmptyDomain(x_lo, x_hi));
        }
        Ok(Self {
            num_elements,
            x_lo,
            x_hi,
        })
    }

    /// Mesh of `k` elements on the standard domain `[-1, 1]`.
    pub fn periodic_unit(num_elements: usize) -> Result<Self, MeshError> {
        Self::new(num_elements, -1.0, 1.0)
    }

    pub fn num_elements(&self) -> usize {
        self.num_elements
    }

    pub fn domain(&self) -> (f64, f64) {
        (self.x_lo, self.x_hi)
    }

    /// Element size `h = (x_hi - x_lo) / k`.
    pub fn element_size(&self) -> f64 {
        (self.x_hi - self.x_lo) / self.num_elements as f64
    }

    /// Physical coordinate of reference point `xi` in element `elem`.
    /// The affine map has Jacobian `h/2`.
    pub fn physical_coord(&self, elem: usize, xi: f64) -> f64 {
        debug_assert!(elem < self.num_elements);
        let h = self.element_size();
        self.x_lo + h * (elem as f64 + 0.5 * (xi + 1.0))
    }

    pub fn left_neighbor(&self, elem: usize) -> usize {
        (elem + self.num_elements - 1) % self.num_elements
    }

    pub fn right_neighbor(&self, elem: usize) -> usize {
        (elem + 1) % self.num_elements
    }
}

/// Uniform periodic Cartesian mesh of `kx * ky` elements on `[-1, 1]^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mesh2D {
    kx: usize,
    ky: usize,
}

impl Mesh2D {
    pub fn new(kx: usize, ky: usize) -> Result<Self, MeshError> {
        if kx == 0 || ky == 0 {
            return Err(MeshError::NoElements);
        }
        Ok(Self { kx, ky })
    }

    pub fn kx(&self) -> usize {
        self.kx
    }

    pub fn ky(&self) -> usize {
        self.ky
    }

    pub fn num_elements(&self) -> usize {
        self.kx * self.ky
    }

    pub fn element_size_x(&self) -> f64 {
        2.0 / self.kx as f64
    }

    pub fn element_size_y(&self) -> f64 {
        2.0 / self.ky as f64
    }

    /// Linear element index for Cartesian position `(ex, ey)`.
    pub fn elem_index(&self, ex: usize, ey: usize) -> usize {
        debug_assert!(ex < self.kx && ey < self.ky);
        ey * self.kx + ex
    }

    /// Physical coordinates of reference point `(xi, eta)` in element
    /// `(ex, ey)`.
    pub fn physical_coord(&self, ex: usize, ey: usize, xi: f64, eta: f64) -> (f64, f64) {
        let hx = self.element_size_x();
        let hy = self.element_size_y();
        (
            -1.0 + hx * (ex as f64 + 0.5 * (xi + 1.0)),
            -1.0 + hy * (ey as f64 + 0.5 * (eta + 1.0)),
        )
    }

    pub fn west_neighbor(&self, ex: usize) -> usize {
        (ex + self.kx - 1) % self.kx
    }

    pub fn east_neighbor(&self, ex: usize) -> usize {
        (ex + 1) % self.kx
    }

    pub fn south_neighbor(&self, ey: usize) -> usize {
        (ey + self.ky - 1) % self.ky
    }

    pub fn north_neighbor(&self, ey: usize) -> usize {
        (ey + 1) % self.ky
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mesh1d_affine_map() {
        let mesh = Mesh1D::new(10, -1.0, 1.0).unwrap();
        assert_eq!(mesh.element_size(), 0.2);
        assert!((mesh.physical_coord(0, -1.0) + 1.0).abs() < 1e-15);
        assert!((mesh.physical_coord(9, 1.0) - 1.0).abs() < 1e-15);
        assert!((mesh.physical_coord(4, 1.0) - mesh.physical_coord(5, -1.0)).abs() < 1e-15);
    }

    #[test]
    fn mesh1d_periodic_neighbors() {
        let mesh = Mesh1D::periodic_unit(4).unwrap();
        assert_eq!(mesh.left_neighbor(0), 3);
        assert_eq!(mesh.right_neighbor(3), 0);
        assert_eq!(mesh.right_neighbor(1), 2);
    }

    #[test]
    fn mesh1d_rejects_degenerate() {
        assert!(Mesh1D::new(0, -1.0, 1.0).is_err());
        assert!(Mesh1D::new(4, 1.0, 1.0).is_err());
    }

    #[test]
    fn mesh2d_coords_and_neighbors() {
        let mesh = Mesh2D::new(4, 2).unwrap();
        assert_eq!(mesh.element_size_x(), 0.5);
        assert_eq!(mesh.element_size_y(), 1.0);
        assert_eq!(mesh.elem_index(3, 1), 7);
        let (x, y) = mesh.physical_coord(0, 0, -1.0, -1.0);
        assert!((x + 1.0).abs() < 1e-15 && (y + 1.0).abs() < 1e-15);
        assert_eq!(mesh.west_neighbor(0), 3);
        assert_eq!(mesh.north_neighbor(1), 0);
    }
}
