/* Dimension-level feasibility of the duality long exact sequence: the
 * homology of the manifold, the bilinearised cohomology of the reversed
 * pair and the bilinearised homology of the pair must admit nonnegative
 * connecting ranks. Only dimensions are checked; the connecting maps
 * require holomorphic-curve data beyond the algebra. */

#pragma once

#include "augcat/bilinear.hpp"

namespace augcat {

struct ExactSequenceData {
    int manifold_dim = 1;      // n, the dimension of the Legendrian
    GradedDims betti;          // H_k of the Legendrian
    GradedDims hom_dims;       // bilinearised homology of the pair
    GradedDims cohom_dims;     // bilinearised cohomology of the reversed pair
};

/* Lays out ... -> H_{k+1} -> LCH^{n-k-1} -> LCH_k -> H_k -> ... for k
 * descending, shared H terms merged, one zero of padding at each end. */
std::vector<int> assemble_sequence(const ExactSequenceData& data);

struct Feasibility {
    bool feasible = false;
    std::vector<int> ranks;      // rank of the map V_i -> V_{i+1}
    std::size_t fail_index = 0;  // first failing position when infeasible
};

/* Greedy ranks r_0 = 0, r_m = dims_m - r_{m-1}; feasible iff every rank is
 * nonnegative and the final one is zero. Over a field this characterizes
 * the dimension sequences of exact sequences completely. */
Feasibility exact_sequence_feasible(const std::vector<int>& dims);

struct DualityRow {
    std::size_t from = 0;
    std::size_t to = 0;
    bool pass = false;
    std::vector<int> sequence;
    std::vector<int> ranks;
};

/* Feasibility for every ordered augmentation pair. The caller supplies the
 * Betti numbers and dimension of the Legendrian; the algebra alone cannot
 * know them. */
std::vector<DualityRow> duality_check(const DgaPtr& dga, const GradedDims& betti,
                                      int manifold_dim, unsigned jobs = 1);

} // namespace augcat
