pub mod field;
pub mod classify;
pub mod group;
pub mod repn;
pub mod verify;
pub mod nichols;
pub mod ydmod;
