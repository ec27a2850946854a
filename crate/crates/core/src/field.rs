//! Piecewise-constant fields on a square lattice.
//!
//! A [`LatticeField`] stores one real value per grid cell of side `a`. Cell
//! `(ix, iy)` covers the half-open square
//! `[origin + ix a, origin + (ix+1) a) x [origin + iy a, origin + (iy+1) a)`,
//! so the field tiles the rectangle `origin + [0, nx a) x [0, ny a)` and is
//! zero outside of it.

use crate::error::Error;
use crate::Result;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Provenance {
    Magnetization,
    Synthetic,
}

#[derive(Debug, Clone)]
pub struct LatticeField {
    origin: (f64, f64),
    spacing: f64,
    nx: usize,
    ny: usize,
    values: Vec<f64>,
    provenance: Provenance,
}

impl LatticeField {
    pub fn new(
        origin: (f64, f64),
        spacing: f64,
        nx: usize,
        ny: usize,
        values: Vec<f64>,
        provenance: Provenance,
    ) -> Result<Self> {
        if spacing <= 0.0 {
            return Err(Error::invalid("lattice spacing must be positive"));
        }
        if values.len() != nx * ny {
            return Err(Error::GridMismatch(format!(
                "expected {} cell values, got {}",
                nx * ny,
                values.len()
            )));
        }
        Ok(LatticeField {
            origin,
            spacing,
            nx,
            ny,
            values,
            provenance,
        })
    }

    pub fn constant(origin: (f64, f64), spacing: f64, nx: usize, ny: usize, c: f64) -> Self {
        LatticeField {
            origin,
            spacing,
            nx,
            ny,
            values: vec![c; nx * ny],
            provenance: Provenance::Synthetic,
        }
    }

    pub fn origin(&self) -> (f64, f64) {
        self.origin
    }

    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    #[inline]
    pub fn get(&self, ix: usize, iy: usize) -> f64 {
        self.values[ix + self.nx * iy]
    }

    #[inline]
    pub fn set(&mut self, ix: usize, iy: usize, v: f64) {
        self.values[ix + self.nx * iy] = v;
    }

    /// Bounding rectangle of the support: `[min, max)` per axis.
    pub fn extent(&self) -> ((f64, f64), (f64, f64)) {
        (
            self.origin,
            (
                self.origin.0 + self.spacing * self.nx as f64,
                self.origin.1 + self.spacing * self.ny as f64,
            ),
        )
    }

    /// `<field, 1>`: total mass, i.e. cell area times the value sum.
    pub fn mass(&self) -> f64 {
        self.values.iter().sum::<f64>() * self.spacing * self.spacing
    }

    /// Multiply every cell by `c`.
    pub fn scale(&mut self, c: f64) {
        for v in &mut self.values {
            *v *= c;
        }
    }

    pub fn scaled(&self, c: f64) -> Self {
        let mut out = self.clone();
        out.scale(c);
        out
    }

    /// Translate the field by `v`. The wavelet pairings are exactly
    /// translation covariant when `v` is a multiple of the spacing.
    pub fn shifted(&self, v: (f64, f64)) -> Self {
        let mut out = self.clone();
        out.origin = (self.origin.0 + v.0, self.origin.1 + v.1);
        out
    }

    /// Same grid geometry (origin, spacing, shape)?
    pub fn grid_matches(&self, other: &LatticeField) -> bool {
        self.origin == other.origin
            && self.spacing == other.spacing
            && self.nx == other.nx
            && self.ny == other.ny
    }

    /// Cellwise sum; grids must match.
    pub fn add(&self, other: &LatticeField) -> Result<Self> {
        if !self.grid_matches(other) {
            return Err(Error::GridMismatch("add on mismatched grids".into()));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a + b)
            .collect();
        LatticeField::new(
            self.origin,
            self.spacing,
            self.nx,
            self.ny,
            values,
            Provenance::Synthetic,
        )
    }

    /// Cellwise difference; grids must match.
    pub fn sub(&self, other: &LatticeField) -> Result<Self> {
        if !self.grid_matches(other) {
            return Err(Error::GridMismatch("sub on mismatched grids".into()));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a - b)
            .collect();
        LatticeField::new(
            self.origin,
            self.spacing,
            self.nx,
            self.ny,
            values,
            Provenance::Synthetic,
        )
    }

    /// Cellwise product; grids must match.
    pub fn mul(&self, other: &LatticeField) -> Result<Self> {
        if !self.grid_matches(other) {
            return Err(Error::GridMismatch("mul on mismatched grids".into()));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a * b)
            .collect();
        LatticeField::new(
            self.origin,
            self.spacing,
            self.nx,
            self.ny,
            values,
            Provenance::Synthetic,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mass_of_constant_field() {
        let f = LatticeField::constant((0.0, 0.0), 1.0, 2, 2, 1.0);
        assert_eq!(f.mass(), 4.0);
    }

    #[test]
    fn shift_moves_extent() {
        let f = LatticeField::constant((0.0, 0.0), 0.5, 4, 4, 1.0);
        let g = f.shifted((0.5, -0.5));
        assert_eq!(g.extent().0, (0.5, -0.5));
        assert_eq!(g.extent().1, (2.5, 1.5));
    }

    #[test]
    fn grid_mismatch_rejected() {
        let f = LatticeField::constant((0.0, 0.0), 1.0, 2, 2, 1.0);
        let g = LatticeField::constant((0.0, 0.0), 1.0, 3, 2, 1.0);
        assert!(f.mul(&g).is_err());
    }
}
