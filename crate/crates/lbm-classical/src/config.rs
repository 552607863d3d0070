//! Simulation parameters, in lattice units.

/// Grid, stepping and relaxation parameters.
///
/// `eps` is the relaxation parameter dt/tau; with `eps = 1` collision
/// replaces the distributions by their equilibria, which is the setting the
/// gate pipeline requires.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimConfig {
    pub nx: usize,
    pub ny: usize,
    pub dt: f64,
    pub dx: f64,
    pub dy: f64,
    pub eps: f64,
    pub lid_velocity: f64,
    pub steps: usize,
}

impl SimConfig {
    /// Cavity validation setup: 16x16, unit steps, eps = 1, lid at 1.0,
    /// 500 steps.
    pub fn cavity_default() -> Self {
        Self {
            nx: 16,
            ny: 16,
            dt: 1.0,
            dx: 1.0,
            dy: 1.0,
            eps: 1.0,
            lid_velocity: 1.0,
            steps: 500,
        }
    }

    /// Relaxation time dt/eps.
    pub fn tau(&self) -> f64 {
        self.dt / self.eps
    }

    /// Diffusivity recovered by the scheme: cs^2 (tau - dt/2), in lattice
    /// units. 1/6 at the default settings.
    pub fn nu(&self) -> f64 {
        let cs2 = 1.0 / 3.0;
        cs2 * (self.tau() - 0.5 * self.dt)
    }

    /// Coefficient mapping vorticity to the Poisson source field. The
    /// steady state of the stream-function carrier solves the discrete
    /// Poisson equation exactly when the source is nu * omega per unit
    /// time, so S = nu/dt * omega (dx = dy assumed equal to dt's lattice
    /// normalization).
    pub fn source_coefficient(&self) -> f64 {
        self.nu() / self.dt
    }

    pub fn with_grid(mut self, nx: usize, ny: usize) -> Self {
        self.nx = nx;
        self.ny = ny;
        self
    }
}

impl Default for SimConfig {
    fn default() -> Self {
        Self::cavity_default()
    }
}
