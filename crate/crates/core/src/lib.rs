//! Computational core of two unplugged programming toys and their lessons:
//! coding cards for a ball-mosaic machine, a directional grid-drawing
//! language, a set of classroom ciphers and a simulator of the machine.

pub mod card;
pub mod cipher;
pub mod cli;
pub mod grid;
pub mod rng;
pub mod sim;
pub mod turtle;
pub mod worksheet;

pub use card::{CardError, CardRow, CodingCard, Mismatch, Run, ValidationReport};
pub use grid::{Color, GridError, Inventory, InventoryReport, Mosaic};
pub use sim::{MachineState, SimCommand, SimError};
pub use turtle::{Canvas, Direction, Instruction, PaintedGrid, TurtleError, TurtleProgram};
