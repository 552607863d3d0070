//! Collision, streaming, boundary treatment and macroscopic recovery.

use crate::config::SimConfig;
use crate::dist::DistributionSet;
use crate::field::{Field, LbmError};
use crate::lattice::{LatticeSpec, Wall, LINKS, WALL_ORDER};

/// Vorticity equilibrium: f_eq_a = w_a * omega * (1 + e_a.(u,v) / cs^2).
pub fn equilibrium_f(omega: &Field, u: &Field, v: &Field) -> Result<DistributionSet, LbmError> {
    omega.same_shape(u)?;
    omega.same_shape(v)?;
    let lat = LatticeSpec::d2q5();
    let mut out = DistributionSet::zeros(omega.nx(), omega.ny());
    for y in 0..omega.ny() {
        for x in 0..omega.nx() {
            let (w, uu, vv) = (omega.get(x, y), u.get(x, y), v.get(x, y));
            for a in 0..LINKS {
                let eu = lat.e[a][0] as f64 * uu + lat.e[a][1] as f64 * vv;
                out.set(a, x, y, lat.w[a] * w * (1.0 + eu / lat.cs2));
            }
        }
    }
    Ok(out)
}

/// Stream-function equilibrium: g_eq_a = w_a * psi.
pub fn equilibrium_g(psi: &Field) -> DistributionSet {
    let lat = LatticeSpec::d2q5();
    let mut out = DistributionSet::zeros(psi.nx(), psi.ny());
    for y in 0..psi.ny() {
        for x in 0..psi.nx() {
            for a in 0..LINKS {
                out.set(a, x, y, lat.w[a] * psi.get(x, y));
            }
        }
    }
    out
}

/// Single-relaxation collision for both equations. The Poisson carrier picks
/// up the source term dt * w_a * S with S = nu/dt * omega, the value that
/// makes its steady state solve the discrete Poisson equation
/// laplacian(psi) = -omega.
pub fn collide(
    f: &DistributionSet,
    g: &DistributionSet,
    omega: &Field,
    psi: &Field,
    u: &Field,
    v: &Field,
    cfg: &SimConfig,
) -> Result<(DistributionSet, DistributionSet), LbmError> {
    let lat = LatticeSpec::d2q5();
    let f_eq = equilibrium_f(omega, u, v)?;
    let g_eq = equilibrium_g(psi);
    let mut f_out = DistributionSet::zeros(omega.nx(), omega.ny());
    let mut g_out = DistributionSet::zeros(omega.nx(), omega.ny());
    let eps = cfg.eps;
    let source_coeff = cfg.source_coefficient();
    for y in 0..omega.ny() {
        for x in 0..omega.nx() {
            let source = source_coeff * omega.get(x, y);
            for a in 0..LINKS {
                f_out.set(
                    a,
                    x,
                    y,
                    (1.0 - eps) * f.get(a, x, y) + eps * f_eq.get(a, x, y),
                );
                g_out.set(
                    a,
                    x,
                    y,
                    (1.0 - eps) * g.get(a, x, y)
                        + eps * g_eq.get(a, x, y)
                        + cfg.dt * lat.w[a] * source,
                );
            }
        }
    }
    Ok((f_out, g_out))
}

/// Propagate each link plane one lattice step with periodic wraparound in
/// both axes. Wall nodes are overwritten by [`apply_boundaries`] right after.
pub fn stream(dist: &DistributionSet) -> DistributionSet {
    let lat = LatticeSpec::d2q5();
    let (nx, ny) = (dist.nx(), dist.ny());
    let mut out = DistributionSet::zeros(nx, ny);
    for a in 0..LINKS {
        let (ex, ey) = (lat.e[a][0], lat.e[a][1]);
        for y in 0..ny {
            for x in 0..nx {
                let tx = (x as i32 + ex).rem_euclid(nx as i32) as usize;
                let ty = (y as i32 + ey).rem_euclid(ny as i32) as usize;
                out.set(a, tx, ty, dist.get(a, x, y));
            }
        }
    }
    out
}

/// Macroscopic recovery: omega = sum_a f_a, psi = sum_a g_a.
pub fn macros(f: &DistributionSet, g: &DistributionSet) -> (Field, Field) {
    let omega = Field::from_fn(f.nx(), f.ny(), |x, y| f.sum_at(x, y));
    let psi = Field::from_fn(g.nx(), g.ny(), |x, y| g.sum_at(x, y));
    (omega, psi)
}

/// Wall vorticity from the second-order stream-function expansion:
/// omega_wall = 2*(-psi_interior)/delta^2 - 2*U_wall/delta, with U_wall equal
/// to the lid velocity on the top wall and zero elsewhere.
fn wall_vorticity(wall: Wall, psi: &Field, cfg: &SimConfig, along: usize) -> f64 {
    let (nx, ny) = (psi.nx(), psi.ny());
    match wall {
        Wall::Bottom => -2.0 * psi.get(along, 1) / (cfg.dy * cfg.dy),
        Wall::Top => {
            -2.0 * psi.get(along, ny - 2) / (cfg.dy * cfg.dy) - 2.0 * cfg.lid_velocity / cfg.dy
        }
        Wall::Left => -2.0 * psi.get(1, along) / (cfg.dx * cfg.dx),
        Wall::Right => -2.0 * psi.get(nx - 2, along) / (cfg.dx * cfg.dx),
    }
}

fn wall_nodes(wall: Wall, nx: usize, ny: usize) -> Vec<(usize, usize, usize)> {
    match wall {
        Wall::Bottom => (0..nx).map(|i| (i, 0, i)).collect(),
        Wall::Top => (0..nx).map(|i| (i, ny - 1, i)).collect(),
        Wall::Left => (0..ny).map(|j| (0, j, j)).collect(),
        Wall::Right => (0..ny).map(|j| (nx - 1, j, j)).collect(),
    }
}

/// Enforce the wall conditions on a post-streaming state: macroscopic
/// vorticity forced to the wall formula, stream function forced to zero, by
/// setting the single inward unknown distribution on each wall. Walls are
/// applied bottom, left, right, top, so the lid wins the top corners.
///
/// `psi_walls` is the stream-function field the wall formula reads its
/// first-interior-line values from.
pub fn apply_boundaries(
    f: &mut DistributionSet,
    g: &mut DistributionSet,
    omega: &mut Field,
    psi: &mut Field,
    psi_walls: &Field,
    cfg: &SimConfig,
) {
    for wall in WALL_ORDER {
        let inward = LatticeSpec::inward_link(wall);
        for (x, y, along) in wall_nodes(wall, omega.nx(), omega.ny()) {
            let omega_target = wall_vorticity(wall, psi_walls, cfg, along);
            let f_rest: f64 = (0..LINKS)
                .filter(|a| *a != inward)
                .map(|a| f.get(a, x, y))
                .sum();
            let g_rest: f64 = (0..LINKS)
                .filter(|a| *a != inward)
                .map(|a| g.get(a, x, y))
                .sum();
            f.set(inward, x, y, omega_target - f_rest);
            g.set(inward, x, y, -g_rest);
            omega.set(x, y, omega_target);
            psi.set(x, y, 0.0);
        }
    }
}

/// Velocities from the stream function: u = d(psi)/dy, v = -d(psi)/dx.
/// Second-order central differences in the interior, second-order one-sided
/// stencils on the walls, then the wall velocities are imposed: u = U, v = 0
/// on the lid row and u = v = 0 on the other three walls.
pub fn velocity_from_stream(psi: &Field, cfg: &SimConfig) -> (Field, Field) {
    let (nx, ny) = (psi.nx(), psi.ny());
    let mut u = Field::zeros(nx, ny);
    let mut v = Field::zeros(nx, ny);
    for y in 0..ny {
        for x in 0..nx {
            let dpsi_dy = if y == 0 {
                (-3.0 * psi.get(x, 0) + 4.0 * psi.get(x, 1) - psi.get(x, 2)) / (2.0 * cfg.dy)
            } else if y == ny - 1 {
                (3.0 * psi.get(x, ny - 1) - 4.0 * psi.get(x, ny - 2) + psi.get(x, ny - 3))
                    / (2.0 * cfg.dy)
            } else {
                (psi.get(x, y + 1) - psi.get(x, y - 1)) / (2.0 * cfg.dy)
            };
            let dpsi_dx = if x == 0 {
                (-3.0 * psi.get(0, y) + 4.0 * psi.get(1, y) - psi.get(2, y)) / (2.0 * cfg.dx)
            } else if x == nx - 1 {
                (3.0 * psi.get(nx - 1, y) - 4.0 * psi.get(nx - 2, y) + psi.get(nx - 3, y))
                    / (2.0 * cfg.dx)
            } else {
                (psi.get(x + 1, y) - psi.get(x - 1, y)) / (2.0 * cfg.dx)
            };
            u.set(x, y, dpsi_dy);
            v.set(x, y, -dpsi_dx);
        }
    }
    for y in 0..ny {
        u.set(0, y, 0.0);
        v.set(0, y, 0.0);
        u.set(nx - 1, y, 0.0);
        v.set(nx - 1, y, 0.0);
    }
    for x in 0..nx {
        u.set(x, 0, 0.0);
        v.set(x, 0, 0.0);
        u.set(x, ny - 1, cfg.lid_velocity);
        v.set(x, ny - 1, 0.0);
    }
    (u, v)
}

/// Full solver state for the cavity run.
#[derive(Debug, Clone)]
pub struct CavityState {
    pub f: DistributionSet,
    pub g: DistributionSet,
    pub omega: Field,
    pub psi: Field,
    pub u: Field,
    pub v: Field,
}

impl CavityState {
    /// Zero vorticity and stream function everywhere.
    pub fn zeros(cfg: &SimConfig) -> Self {
        Self {
            f: DistributionSet::zeros(cfg.nx, cfg.ny),
            g: DistributionSet::zeros(cfg.nx, cfg.ny),
            omega: Field::zeros(cfg.nx, cfg.ny),
            psi: Field::zeros(cfg.nx, cfg.ny),
            u: Field::zeros(cfg.nx, cfg.ny),
            v: Field::zeros(cfg.nx, cfg.ny),
        }
    }

    /// One full update: collide, stream, macros, boundaries, velocity.
    ///
    /// The wall-vorticity formula reads the stream function the step started
    /// from, which is also the field the gate pipeline encodes its boundary
    /// block from.
    pub fn step(&mut self, cfg: &SimConfig) -> Result<(), LbmError> {
        let psi_walls = self.psi.clone();
        let (f_hat, g_hat) = collide(
            &self.f, &self.g, &self.omega, &self.psi, &self.u, &self.v, cfg,
        )?;
        self.f = stream(&f_hat);
        self.g = stream(&g_hat);
        let (mut omega, mut psi) = macros(&self.f, &self.g);
        apply_boundaries(
            &mut self.f,
            &mut self.g,
            &mut omega,
            &mut psi,
            &psi_walls,
            cfg,
        );
        self.omega = omega;
        self.psi = psi;
        let (u, v) = velocity_from_stream(&self.psi, cfg);
        self.u = u;
        self.v = v;
        Ok(())
    }
}
