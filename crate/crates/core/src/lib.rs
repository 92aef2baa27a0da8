//! Tools for triangle-free plane graphs: Thomas-Walls generators, clean-tube
//! kernelization, fractional set colourings and an exact independence solver.

pub mod corpus;
pub mod kernelize;
pub mod plane_graph;
pub mod plr;
pub mod set_colouring;
pub mod solver;
pub mod tw_family;
