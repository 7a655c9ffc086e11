//! Free products and tensor products of algebra objects.

mod free_product;
mod tensor;

pub use free_product::{copy_name, free_power, free_product, iota, FreeProductAlgebra};
pub use tensor::{
    collapse_scalar_legs, contract_leg, embed_legs, flip_legs, leg_embed, leg_name, legs_of, tensor,
    tensor_elements, tensor_elements_in, TensorAlgebra,
};
