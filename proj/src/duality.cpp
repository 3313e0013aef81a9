#include "augcat/duality.hpp"

#include <algorithm>

#include "augcat/parallel.hpp"

namespace augcat {

namespace {

int dim_at(const GradedDims& dims, int k)
{
    auto it = dims.find(k);
    return it == dims.end() ? 0 : it->second;
}

} // namespace

std::vector<int> assemble_sequence(const ExactSequenceData& data)
{
    const int n = data.manifold_dim;
    bool any = false;
    int k_hi = 0, k_lo = 0;
    auto widen = [&](int k) {
        if (!any) {
            k_hi = k_lo = k;
            any = true;
        } else {
            k_hi = std::max(k_hi, k);
            k_lo = std::min(k_lo, k);
        }
    };
    for (const auto& [k, dim] : data.hom_dims)
        if (dim)
            widen(k);
    for (const auto& [m, dim] : data.cohom_dims)
        if (dim)
            widen(n - 1 - m); // LCH^{n-k-1} sits in the block of k = n-1-m
    for (const auto& [k, dim] : data.betti)
        if (dim) {
            widen(k);     // as the H_k ending block k
            widen(k - 1); // as the H_{k+1} opening block k-1
        }
    if (!any)
        return {0, 0};

    std::vector<int> dims;
    dims.push_back(0);
    dims.push_back(dim_at(data.betti, k_hi + 1));
    for (int k = k_hi; k >= k_lo; --k) {
        dims.push_back(dim_at(data.cohom_dims, n - k - 1));
        dims.push_back(dim_at(data.hom_dims, k));
        dims.push_back(dim_at(data.betti, k));
    }
    dims.push_back(0);

    // collapse the conceptual infinite zero tails to a single zero each
    std::size_t first = 0;
    while (first + 1 < dims.size() && dims[first + 1] == 0)
        ++first;
    std::size_t last = dims.size() - 1;
    while (last > first + 1 && dims[last - 1] == 0)
        --last;
    return std::vector<int>(dims.begin() + first, dims.begin() + last + 1);
}

Feasibility exact_sequence_feasible(const std::vector<int>& dims)
{
    Feasibility result;
    int carry = 0;
    std::vector<int> ranks;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        carry = dims[i] - carry;
        if (carry < 0) {
            result.feasible = false;
            result.fail_index = i;
            return result;
        }
        if (i + 1 < dims.size())
            ranks.push_back(carry);
    }
    if (carry != 0) {
        result.feasible = false;
        result.fail_index = dims.size() - 1;
        return result;
    }
    result.feasible = true;
    result.ranks = std::move(ranks);
    return result;
}

std::vector<DualityRow> duality_check(const DgaPtr& dga, const GradedDims& betti,
                                      int manifold_dim, unsigned jobs)
{
    std::vector<Augmentation> augs = enumerate_augmentations(dga);
    const std::size_t n = augs.size();
    std::vector<DualityRow> rows(n * n);
    parallel_for(n * n, jobs, [&](std::size_t cell) {
        std::size_t i = cell / n, j = cell % n;
        ExactSequenceData data;
        data.manifold_dim = manifold_dim;
        data.betti = betti;
        data.hom_dims = BilinearComplex::differential(augs[i], augs[j]).homology();
        // field coefficients: cohomology dimensions of the reversed pair
        // equal the homology dimensions of its transpose, degree by degree
        data.cohom_dims = BilinearComplex::differential(augs[j], augs[i]).homology();
        DualityRow row;
        row.from = i;
        row.to = j;
        row.sequence = assemble_sequence(data);
        Feasibility f = exact_sequence_feasible(row.sequence);
        row.pass = f.feasible;
        row.ranks = std::move(f.ranks);
        rows[cell] = std::move(row);
    });
    return rows;
}

} // namespace augcat
