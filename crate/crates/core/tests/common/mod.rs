#![allow(dead_code)]

use ginv_core::{DenseTensor, GroupedShape};

/// Builds a `[2,2] x [2,2]` tensor from four displayed 2x2 slices. Slice `kl`
/// holds the entries `[k, l, r, c]` at matrix position `(r, c)`.
pub fn slices(s: [[[f64; 2]; 2]; 4]) -> DenseTensor {
    let flat: Vec<f64> = s.iter().flatten().flatten().copied().collect();
    DenseTensor::from_real(GroupedShape::square(vec![2, 2]).unwrap(), &flat).unwrap()
}

pub fn example31_a() -> DenseTensor {
    slices([
        [[1.0, 0.0], [0.0, -1.0]],
        [[0.0, -1.0], [0.0, 0.0]],
        [[0.0, 1.0], [0.0, -1.0]],
        [[0.0, 1.0], [0.0, 0.0]],
    ])
}

pub fn example31_r() -> DenseTensor {
    slices([
        [[0.0, 1.0], [1.0, 0.0]],
        [[-1.0, 0.0], [1.0, 0.0]],
        [[0.0, 1.0], [0.0, 1.0]],
        [[0.0, 0.0], [0.0, 1.0]],
    ])
}

pub fn example31_s() -> DenseTensor {
    slices([
        [[1.0, 0.0], [1.0, 0.0]],
        [[0.0, -1.0], [0.0, 1.0]],
        [[1.0, 0.0], [0.0, 0.0]],
        [[0.0, 0.0], [1.0, 0.0]],
    ])
}

pub fn example31_t() -> DenseTensor {
    slices([
        [[1.0, 0.0], [0.0, 0.0]],
        [[0.0, 0.0], [1.0, 0.0]],
        [[0.0, 1.0], [0.0, 0.0]],
        [[0.0, 0.0], [1.0, -1.0]],
    ])
}

pub fn example31_a_pinv() -> DenseTensor {
    slices([
        [[1.0, -1.0 / 2.0], [-1.0, 1.0 / 2.0]],
        [[0.0, -1.0 / 2.0], [0.0, 1.0 / 2.0]],
        [[0.0, 0.0], [0.0, 0.0]],
        [[0.0, -1.0 / 2.0], [-1.0, 1.0 / 2.0]],
    ])
}

pub fn example31_r_pinv() -> DenseTensor {
    slices([
        [[1.0, -1.0], [-1.0, 1.0]],
        [[0.0, 0.0], [1.0, -1.0]],
        [[1.0, 0.0], [-1.0, 1.0]],
        [[0.0, 0.0], [0.0, 1.0]],
    ])
}

pub fn example31_s_pinv() -> DenseTensor {
    slices([
        [[1.0 / 3.0, 0.0], [2.0 / 3.0, -1.0 / 3.0]],
        [[0.0, -1.0 / 2.0], [0.0, 0.0]],
        [[1.0 / 3.0, 0.0], [-1.0 / 3.0, 2.0 / 3.0]],
        [[0.0, 1.0 / 2.0], [0.0, 0.0]],
    ])
}

pub fn example31_t_pinv() -> DenseTensor {
    slices([
        [[1.0, 0.0], [0.0, 0.0]],
        [[0.0, 0.0], [1.0, 0.0]],
        [[0.0, 1.0], [0.0, 0.0]],
        [[0.0, 1.0], [0.0, -1.0]],
    ])
}

pub fn example31_x() -> DenseTensor {
    slices([
        [[1.0, -1.0 / 3.0], [-1.0, 2.0 / 3.0]],
        [[0.0, -1.0 / 3.0], [0.0, 2.0 / 3.0]],
        [[0.0, 0.0], [-1.0 / 2.0, 1.0 / 2.0]],
        [[0.0, 0.0], [-1.0, 1.0]],
    ])
}

pub fn example31_b() -> DenseTensor {
    slices([
        [[1.0, -1.0 / 2.0], [-1.0, 1.0 / 2.0]],
        [[0.0, -1.0 / 2.0], [0.0, 1.0 / 2.0]],
        [[0.0, -1.0 / 4.0], [-1.0 / 2.0, 1.0 / 4.0]],
        [[0.0, -1.0 / 2.0], [-1.0, 1.0 / 2.0]],
    ])
}

pub fn example31_c() -> DenseTensor {
    slices([
        [[1.0, -1.0 / 3.0], [-1.0, 2.0 / 3.0]],
        [[0.0, -1.0 / 3.0], [0.0, 2.0 / 3.0]],
        [[0.0, 0.0], [0.0, 0.0]],
        [[0.0, 0.0], [-1.0, 1.0]],
    ])
}

pub fn exmppgi_a() -> DenseTensor {
    slices([
        [[1.0, 1.0], [1.0, 1.0]],
        [[0.0, 0.0], [0.0, 0.0]],
        [[0.0, 1.0], [1.0, 1.0]],
        [[0.0, 0.0], [0.0, 0.0]],
    ])
}

pub fn exmppgi_r() -> DenseTensor {
    slices([
        [[1.0, 0.0], [0.0, 0.0]],
        [[0.0, 1.0], [1.0, 0.0]],
        [[0.0, 0.0], [1.0, 0.0]],
        [[0.0, 0.0], [0.0, 0.0]],
    ])
}

pub fn exmppgi_s() -> DenseTensor {
    slices([
        [[1.0, 0.0], [0.0, 0.0]],
        [[0.0, 1.0 / 2.0], [-3.0 / 2.0, 0.0]],
        [[0.0, 1.0 / 2.0], [1.0 / 2.0, 0.0]],
        [[0.0, 0.0], [0.0, 0.0]],
    ])
}

pub fn exmppgi_t() -> DenseTensor {
    slices([
        [[1.0, 1.0], [1.0, 1.0]],
        [[0.0, 1.0], [1.0, 1.0]],
        [[0.0, 1.0], [1.0, 1.0]],
        [[0.0, 0.0], [0.0, 0.0]],
    ])
}

pub fn exmppgi_a_pinv() -> DenseTensor {
    slices([
        [[1.0, 0.0], [-1.0, 0.0]],
        [[0.0, 0.0], [1.0 / 3.0, 0.0]],
        [[0.0, 0.0], [1.0 / 3.0, 0.0]],
        [[0.0, 0.0], [1.0 / 3.0, 0.0]],
    ])
}

pub fn exmppgi_r_pinv() -> DenseTensor {
    slices([
        [[1.0, 0.0], [0.0, 0.0]],
        [[0.0, 1.0], [-1.0, 0.0]],
        [[0.0, 0.0], [1.0, 0.0]],
        [[0.0, 0.0], [0.0, 0.0]],
    ])
}

pub fn exmppgi_s_pinv() -> DenseTensor {
    slices([
        [[1.0, 0.0], [0.0, 0.0]],
        [[0.0, 1.0 / 2.0], [3.0 / 2.0, 0.0]],
        [[0.0, -1.0 / 2.0], [1.0 / 2.0, 0.0]],
        [[0.0, 0.0], [0.0, 0.0]],
    ])
}

pub fn exmppgi_t_pinv() -> DenseTensor {
    slices([
        [[1.0, -1.0 / 2.0], [-1.0 / 2.0, 0.0]],
        [[0.0, 1.0 / 6.0], [1.0 / 6.0, 0.0]],
        [[0.0, 1.0 / 6.0], [1.0 / 6.0, 0.0]],
        [[0.0, 1.0 / 6.0], [1.0 / 6.0, 0.0]],
    ])
}

pub fn exmppgi_y() -> DenseTensor {
    slices([
        [[1.0, 0.0], [-1.0, 0.0]],
        [[0.0, 0.0], [1.0 / 3.0, 0.0]],
        [[0.0, 0.0], [1.0 / 3.0, 0.0]],
        [[0.0, 0.0], [1.0 / 3.0, 0.0]],
    ])
}

pub fn exmppgi_x() -> DenseTensor {
    slices([
        [[1.0, 1.0 / 2.0], [-1.0, 0.0]],
        [[0.0, -1.0 / 6.0], [1.0 / 3.0, 0.0]],
        [[0.0, -1.0 / 6.0], [1.0 / 3.0, 0.0]],
        [[0.0, -1.0 / 6.0], [1.0 / 3.0, 0.0]],
    ])
}

pub fn sec4_r() -> DenseTensor {
    slices([
        [[1.0, 0.0], [-1.0, 0.0]],
        [[1.0, 1.0], [0.0, 1.0]],
        [[0.0, 1.0], [0.0, 1.0]],
        [[-1.0, 0.0], [1.0, 0.0]],
    ])
}

pub fn sec4_s() -> DenseTensor {
    slices([
        [[0.0, 1.0], [0.0, -1.0]],
        [[1.0, 1.0], [1.0, 0.0]],
        [[1.0, 0.0], [1.0, 0.0]],
        [[0.0, -1.0], [0.0, 1.0]],
    ])
}

pub fn sec4_t() -> DenseTensor {
    slices([
        [[1.0, 0.0], [0.0, 0.0]],
        [[0.0, 0.0], [0.0, 1.0]],
        [[0.0, 0.0], [0.0, 0.0]],
        [[0.0, 1.0], [0.0, 0.0]],
    ])
}

pub fn sec4_a() -> DenseTensor {
    slices([
        [[-1.0, -1.0], [0.0, 1.0]],
        [[1.0, 0.0], [0.0, 1.0]],
        [[1.0, 1.0], [0.0, 0.0]],
        [[1.0, 1.0], [0.0, -1.0]],
    ])
}

pub fn sec4_a_pinv() -> DenseTensor {
    slices([
        [[-1.0 / 2.0, 1.0], [-1.0, 1.0 / 2.0]],
        [[1.0 / 2.0, -1.0], [2.0, -1.0 / 2.0]],
        [[0.0, 0.0], [0.0, 0.0]],
        [[1.0 / 2.0, 0.0], [1.0, -1.0 / 2.0]],
    ])
}

pub fn sec4_r_pinv() -> DenseTensor {
    slices([
        [[0.0, 1.0], [-1.0, 0.0]],
        [[0.0, 0.0], [1.0 / 2.0, 0.0]],
        [[-1.0 / 2.0, 1.0], [-1.0, 1.0 / 2.0]],
        [[0.0, 0.0], [1.0 / 2.0, 0.0]],
    ])
}

pub fn sec4_t_pinv() -> DenseTensor {
    slices([
        [[1.0, 0.0], [0.0, 0.0]],
        [[0.0, 0.0], [0.0, 1.0]],
        [[0.0, 0.0], [0.0, 0.0]],
        [[0.0, 1.0], [0.0, 0.0]],
    ])
}

pub fn sec4_x() -> DenseTensor {
    slices([
        [[-1.0 / 4.0, 1.0 / 2.0], [-1.0 / 2.0, 1.0 / 4.0]],
        [[1.0 / 2.0, -3.0 / 2.0], [9.0 / 4.0, -1.0 / 2.0]],
        [[0.0, 0.0], [0.0, 0.0]],
        [[1.0 / 2.0, -1.0], [3.0 / 2.0, -1.0 / 2.0]],
    ])
}
