pub mod center;
pub mod class_fusion;
pub mod corpus;
pub mod group;
pub mod phase;
pub mod pointed;
pub mod premetric;
pub mod records;
pub mod verify;
