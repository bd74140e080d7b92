//! Conjecture scans and WZ-pair verification.

mod conjectures;
mod wz;

pub use conjectures::{
    bergeron_diff, c3_induced_quadruple, check_c1_c2, check_c3, check_c4, enumerate_quadruples,
    quadruples_with_product, Conjecture, ConjectureInstance, Quadruple,
};
pub use wz::{
    certificate_a, certificate_b, default_k_range, f_q, f_q1, g_q, g_q1, wz_check_q, wz_check_q1,
    WzCheck, WzVariant,
};
