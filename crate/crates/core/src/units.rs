/// Conversion from natural units (`ħ²/2μ = 1`, `R = 1`) to physical ones.
///
/// All computation happens in natural units; a `Units` value is applied only
/// when results are reported.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Units {
    /// Outer radius `R`.
    pub radius: f64,
    /// The kinetic prefactor `ħ²/2μ`.
    pub hbar2_over_2mu: f64,
}

impl Default for Units {
    fn default() -> Self {
        Units { radius: 1.0, hbar2_over_2mu: 1.0 }
    }
}

impl Units {
    pub fn new(radius: f64, hbar2_over_2mu: f64) -> Self {
        Units { radius, hbar2_over_2mu }
    }

    pub fn is_natural(&self) -> bool {
        self.radius == 1.0 && self.hbar2_over_2mu == 1.0
    }

    /// Energy scale `ħ²/(2μR²)`.
    pub fn energy_scale(&self) -> f64 {
        self.hbar2_over_2mu / (self.radius * self.radius)
    }

    pub fn energy(&self, natural: f64) -> f64 {
        natural * self.energy_scale()
    }

    /// Inverse of [`Units::energy`].
    pub fn to_natural_energy(&self, physical: f64) -> f64 {
        physical / self.energy_scale()
    }

    pub fn length(&self, natural: f64) -> f64 {
        natural * self.radius
    }

    /// Converts a 2D probability density (per unit area).
    pub fn density(&self, natural: f64) -> f64 {
        natural / (self.radius * self.radius)
    }
}
