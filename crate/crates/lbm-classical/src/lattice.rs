//! D2Q5 lattice constants.

/// Rest particle plus the four axis links.
///
/// Link order: 0 = rest, 1 = +x, 2 = -x, 3 = +y, 4 = -y.
#[derive(Debug, Clone, Copy)]
pub struct LatticeSpec {
    pub e: [[i32; 2]; 5],
    pub w: [f64; 5],
    pub cs2: f64,
}

pub const LINKS: usize = 5;

impl LatticeSpec {
    pub const fn d2q5() -> Self {
        Self {
            e: [[0, 0], [1, 0], [-1, 0], [0, 1], [0, -1]],
            w: [2.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0],
            cs2: 1.0 / 3.0,
        }
    }

    /// Link whose velocity points into the domain from the given wall
    /// (the single unknown distribution after streaming).
    pub fn inward_link(wall: Wall) -> usize {
        match wall {
            Wall::Bottom => 3,
            Wall::Left => 1,
            Wall::Right => 2,
            Wall::Top => 4,
        }
    }
}

impl Default for LatticeSpec {
    fn default() -> Self {
        Self::d2q5()
    }
}

/// Cavity walls in boundary application order; the moving lid is applied
/// last so it wins the top corners.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Wall {
    Bottom,
    Left,
    Right,
    Top,
}

pub const WALL_ORDER: [Wall; 4] = [Wall::Bottom, Wall::Left, Wall::Right, Wall::Top];
