#include "augcat/bilinear.hpp"

#include <algorithm>
#include <sstream>

#include "augcat/parallel.hpp"

namespace augcat {

BilinearComplex::BilinearComplex(DgaPtr dga, FpMatrix matrix, bool cohomological)
    : dga_(std::move(dga)), matrix_(std::move(matrix)), cohomological_(cohomological)
{
}

BilinearComplex BilinearComplex::differential(const Augmentation& left,
                                              const Augmentation& right)
{
    const DgaPtr& dga = left.dga();
    if (!same_algebra(*dga, *right.dga()))
        throw AlgebraError("bilinearised differential needs augmentations of one algebra");
    const std::uint32_t p = dga->characteristic();
    const std::size_t n = dga->size();
    FpMatrix m(n, n, p);
    for (GenIndex a = 0; a < n; ++a) {
        for (const auto& [w, c] : dga->differential(a).terms()) {
            // prefix weighted by the left augmentation, suffix by the right
            std::vector<Scalar> pre(w.size() + 1, Scalar::one(p));
            std::vector<Scalar> suf(w.size() + 1, Scalar::one(p));
            for (std::size_t i = 0; i < w.size(); ++i)
                pre[i + 1] = pre[i] * left.value(w[i]);
            for (std::size_t i = w.size(); i-- > 0;)
                suf[i] = right.value(w[i]) * suf[i + 1];
            for (std::size_t i = 0; i < w.size(); ++i)
                m.add_at(w[i], a, Scalar(c, p) * pre[i] * suf[i + 1]);
        }
    }
    return BilinearComplex(dga, std::move(m), false);
}

BilinearComplex BilinearComplex::codifferential(const Augmentation& left,
                                                const Augmentation& right)
{
    BilinearComplex d = differential(left, right);
    return BilinearComplex(d.dga_, d.matrix_.transposed(), true);
}

BilinearComplex BilinearComplex::transposed() const
{
    return BilinearComplex(dga_, matrix_.transposed(), !cohomological_);
}

FpMatrix BilinearComplex::block_from_degree(int k) const
{
    std::vector<GenIndex> src = dga_->generators_of_grading(k);
    std::vector<GenIndex> dst = dga_->generators_of_grading(k + degree_shift());
    FpMatrix block(dst.size(), src.size(), dga_->characteristic());
    for (std::size_t c = 0; c < src.size(); ++c)
        for (std::size_t r = 0; r < dst.size(); ++r)
            block.set(r, c, matrix_.at(dst[r], src[c]));
    return block;
}

std::vector<std::string> BilinearComplex::check() const
{
    std::vector<std::string> out;
    for (std::size_t r = 0; r < matrix_.rows(); ++r)
        for (std::size_t c = 0; c < matrix_.cols(); ++c)
            if (matrix_.at(r, c) &&
                dga_->grading(static_cast<GenIndex>(r)) !=
                    dga_->grading(static_cast<GenIndex>(c)) + degree_shift()) {
                std::ostringstream msg;
                msg << "entry (" << dga_->generator(static_cast<GenIndex>(r)).name << " <- "
                    << dga_->generator(static_cast<GenIndex>(c)).name
                    << ") breaks degree homogeneity";
                out.push_back(msg.str());
            }
    if (!(matrix_ * matrix_).is_zero())
        out.push_back("differential does not square to zero");
    return out;
}

GradedDims BilinearComplex::homology() const
{
    // dim H_k = dim C_k - rank(out of k) - rank(into k)
    std::map<int, std::size_t> rank_from;
    std::map<int, std::size_t> count;
    for (GenIndex g = 0; g < dga_->size(); ++g)
        ++count[dga_->grading(g)];
    for (const auto& [k, n] : count)
        rank_from[k] = rank(block_from_degree(k));
    GradedDims dims;
    for (const auto& [k, n] : count) {
        std::size_t out = rank_from[k];
        auto in_it = rank_from.find(k - degree_shift());
        std::size_t in = in_it == rank_from.end() ? 0 : in_it->second;
        int dim = static_cast<int>(n - out - in);
        if (dim)
            dims[k] = dim;
    }
    return dims;
}

std::vector<std::vector<GradedDims>> lch_table(const DgaPtr& dga, unsigned jobs)
{
    return lch_table(enumerate_augmentations(dga), jobs);
}

std::vector<std::vector<GradedDims>> lch_table(const std::vector<Augmentation>& augs,
                                               unsigned jobs)
{
    const std::size_t n = augs.size();
    std::vector<std::vector<GradedDims>> table(n, std::vector<GradedDims>(n));
    parallel_for(n * n, jobs, [&](std::size_t cell) {
        std::size_t i = cell / n, j = cell % n;
        table[i][j] = BilinearComplex::differential(augs[i], augs[j]).homology();
    });
    return table;
}

std::vector<std::vector<std::size_t>> classify_augmentations(
    const std::vector<std::vector<GradedDims>>& table)
{
    const std::size_t n = table.size();
    auto profile_equal = [&](std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < n; ++j)
            if (table[a][j] != table[b][j] || table[j][a] != table[j][b])
                return false;
        return true;
    };
    std::vector<std::vector<std::size_t>> cells;
    std::vector<bool> placed(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (placed[i])
            continue;
        std::vector<std::size_t> cell{i};
        placed[i] = true;
        for (std::size_t j = i + 1; j < n; ++j)
            if (!placed[j] && profile_equal(i, j)) {
                cell.push_back(j);
                placed[j] = true;
            }
        cells.push_back(std::move(cell));
    }
    return cells;
}

} // namespace augcat
