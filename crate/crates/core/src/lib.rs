pub mod algebra;
pub mod special;
pub mod symgroup;
pub mod random;
pub mod sheaf;
pub mod engine;
