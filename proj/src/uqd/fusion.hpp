#pragma once

#include "uqd/rmatrix.hpp"

namespace qar::uqd {

/// Outcome of the fused-intertwiner construction T^(k) on the k-fold tensor
/// power of the vector representation with spectral parameters
/// (-q)^(1-k), (-q)^(3-k), ..., (-q)^(k-1).
struct FusionResult {
    int space_dim = 0;
    int rank = 0;
    int kernel_dim = 0;
    int top_weight_dim = 0;     // multiplicity of the fused dominant weight in the image
    bool kernel_matches = false;  // kernel = sum of shifted one-step image terms
    bool image_cyclic = false;    // the top weight vector generates the image
};

/// Desk-scale guard: k <= 3 and (2n)^k <= 1024.
FusionResult fusion_T(Family fam, int k, int n);

/// Type A fundamental module V(w_k) realized on the image of T^(k), with
/// the generator action restricted to an image basis.
ModuleData fused_fundamental_A(int k, int n);

}  // namespace qar::uqd
