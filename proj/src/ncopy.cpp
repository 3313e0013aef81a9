#include "augcat/ncopy.hpp"

#include <algorithm>

#include "augcat/ainfty.hpp"
#include "augcat/parallel.hpp"

namespace augcat {

bool composable(const IndexedWord& w)
{
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i].col != w[i + 1].row)
            return false;
    return true;
}

Scalar NcopyPoly::coefficient(const IndexedWord& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar::zero(p_) : Scalar(it->second, p_);
}

void NcopyPoly::add_term(const IndexedWord& w, Scalar c)
{
    if (c.characteristic() != p_)
        throw AlgebraError("coefficient from a different field");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(w, c.value());
    if (!inserted) {
        std::uint32_t v = (it->second + std::uint64_t(c.value())) % p_;
        if (v == 0)
            terms_.erase(it);
        else
            it->second = v;
    }
}

NcopyPoly& NcopyPoly::operator+=(const NcopyPoly& other)
{
    if (p_ != other.p_)
        throw AlgebraError("polynomials over different fields");
    for (const auto& [w, c] : other.terms_)
        add_term(w, Scalar(c, p_));
    return *this;
}

NcopyPoly n_copy_differential(const Dga& dga, std::uint32_t n, IndexedGen a)
{
    if (a.row < 1 || a.row > n || a.col < 1 || a.col > n)
        throw AlgebraError("copy index out of range");
    if (a.gen >= dga.size())
        throw AlgebraError("unknown generator index");
    const std::uint32_t p = dga.characteristic();
    NcopyPoly out(p);
    for (const auto& [w, c] : dga.differential(a.gen).terms()) {
        if (w.empty()) {
            if (a.row == a.col)
                out.add_term(IndexedWord{}, Scalar(c, p));
            continue;
        }
        // all index paths a.row = i_0 -> i_1 -> ... -> i_k = a.col
        std::vector<std::uint32_t> path(w.size() - 1, 1);
        while (true) {
            IndexedWord word(w.size(), IndexedGen{});
            for (std::size_t i = 0; i < w.size(); ++i) {
                word[i].gen = w[i];
                word[i].row = i == 0 ? a.row : path[i - 1];
                word[i].col = i == w.size() - 1 ? a.col : path[i];
            }
            out.add_term(word, Scalar(c, p));
            std::size_t i = path.size();
            while (i > 0 && ++path[i - 1] > n)
                path[--i] = 1;
            if (i == 0)
                break;
        }
    }
    return out;
}

NcopyPoly apply_n_copy_differential(const Dga& dga, std::uint32_t n, const NcopyPoly& x)
{
    const std::uint32_t p = dga.characteristic();
    NcopyPoly out(p);
    for (const auto& [w, c] : x.terms()) {
        int prefix_grading = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            Scalar sign = prefix_grading % 2 == 0 ? Scalar::one(p) : -Scalar::one(p);
            Scalar factor = Scalar(c, p) * sign;
            NcopyPoly inner = n_copy_differential(dga, n, w[i]);
            for (const auto& [dw, dc] : inner.terms()) {
                IndexedWord word(w.begin(), w.begin() + i);
                word.insert(word.end(), dw.begin(), dw.end());
                word.insert(word.end(), w.begin() + i + 1, w.end());
                if (!composable(word))
                    continue;
                out.add_term(word, factor * Scalar(dc, p));
            }
            prefix_grading += dga.grading(w[i].gen);
        }
    }
    return out;
}

CombinedAugmentation::CombinedAugmentation(std::vector<Augmentation> parts)
    : parts_(std::move(parts))
{
    if (parts_.empty())
        throw AlgebraError("combined augmentation needs at least one part");
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (!same_algebra(*parts_[0].dga(), *parts_[i].dga()))
            throw AlgebraError("combined augmentation mixes different algebras");
}

Scalar CombinedAugmentation::value(IndexedGen a) const
{
    const std::uint32_t p = dga()->characteristic();
    if (a.row != a.col)
        return Scalar::zero(p);
    if (a.row < 1 || a.row > copies())
        throw AlgebraError("copy index out of range");
    return parts_[a.row - 1].value(a.gen);
}

NcopyPoly conjugated_component(const Dga& dga, const CombinedAugmentation& E,
                               std::size_t d, IndexedGen a)
{
    const std::uint32_t p = dga.characteristic();
    const std::uint32_t n = E.copies();
    NcopyPoly expanded(p);
    // phi^{-1} only shifts a by a constant, which d_n kills, so conjugation
    // reduces to substituting x -> x + eps_E(x) into d_n(a): each word
    // spreads over the subsets of letters kept, the rest evaluated.
    NcopyPoly dn = n_copy_differential(dga, n, a);
    for (const auto& [w, c] : dn.terms()) {
        const std::size_t k = w.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << k); ++mask) {
            Scalar weight(c, p);
            IndexedWord kept;
            for (std::size_t i = 0; i < k; ++i) {
                if (mask & (std::uint64_t(1) << i))
                    kept.push_back(w[i]);
                else
                    weight = weight * E.value(w[i]);
                if (weight.is_zero())
                    break;
            }
            if (!weight.is_zero())
                expanded.add_term(kept, weight);
        }
    }
    Scalar constant = expanded.coefficient(IndexedWord{});
    if (!constant.is_zero())
        throw AlgebraError("conjugated differential kept a constant term; "
                           "the combined augmentation is not an augmentation");
    NcopyPoly out(p);
    for (const auto& [w, c] : expanded.terms())
        if (w.size() == d)
            out.add_term(w, Scalar(c, p));
    return out;
}

Poly erase_indices(const Dga& dga, const NcopyPoly& x,
                   std::span<const std::uint32_t> path)
{
    Poly out(dga.characteristic());
    for (const auto& [w, c] : x.terms()) {
        if (!w.empty() && w.size() + 1 > path.size())
            continue;
        bool on_path = true;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i].row != path[i] || w[i].col != path[i + 1]) {
                on_path = false;
                break;
            }
        }
        if (!on_path)
            continue;
        Word plain;
        plain.reserve(w.size());
        for (const IndexedGen& g : w)
            plain.push_back(g.gen);
        out.add_term(plain, Scalar(c, dga.characteristic()));
    }
    return out;
}

Poly erase_indices_along_path(const Dga& dga, const NcopyPoly& x, std::uint32_t first)
{
    std::size_t longest = 0;
    for (const auto& [w, c] : x.terms())
        longest = std::max(longest, w.size());
    std::vector<std::uint32_t> path(longest + 1);
    for (std::size_t i = 0; i <= longest; ++i)
        path[i] = first + static_cast<std::uint32_t>(i);
    return erase_indices(dga, x, path);
}

std::vector<OracleMismatch> oracle_check(const DgaPtr& dga, std::uint32_t max_n,
                                         std::size_t max_d, unsigned jobs)
{
    std::vector<Augmentation> augs = enumerate_augmentations(dga);
    std::vector<OracleMismatch> all;
    if (augs.empty())
        return all;
    if (max_d + 1 > max_n)
        throw AlgebraError("oracle needs max_n >= max_d + 1");

    for (std::size_t d = 1; d <= max_d; ++d) {
        std::size_t count = 1;
        for (std::size_t i = 0; i <= d; ++i)
            count *= augs.size();
        std::vector<std::vector<OracleMismatch>> slots(count);
        parallel_for(count, jobs, [&](std::size_t index) {
            std::vector<std::size_t> key(d + 1);
            std::size_t rest = index;
            for (std::size_t i = d + 1; i-- > 0;) {
                key[i] = rest % augs.size();
                rest /= augs.size();
            }
            std::vector<Augmentation> ctx;
            ctx.reserve(d + 1);
            for (std::size_t s : key)
                ctx.push_back(augs[s]);
            for (std::uint32_t n = static_cast<std::uint32_t>(d) + 1; n <= max_n; ++n) {
                // pad the combined augmentation beyond the distinguished
                // path; the result must not depend on the padding
                std::vector<Augmentation> parts = ctx;
                while (parts.size() < n)
                    parts.push_back(augs[key[0]]);
                CombinedAugmentation E(std::move(parts));
                for (GenIndex a = 0; a < dga->size(); ++a) {
                    IndexedGen top{a, 1, static_cast<std::uint32_t>(d) + 1};
                    Poly via_conj = erase_indices_along_path(
                        *dga, conjugated_component(*dga, E, d, top), 1);
                    Poly via_formula = multilinear_component(ctx, a);
                    if (via_conj != via_formula) {
                        OracleMismatch m;
                        m.arity = d;
                        m.copies = n;
                        m.context = key;
                        m.generator = a;
                        m.via_conjugation = via_conj;
                        m.via_formula = via_formula;
                        slots[index].push_back(std::move(m));
                    }
                }
            }
        });
        for (auto& s : slots)
            for (auto& m : s)
                all.push_back(std::move(m));
    }
    return all;
}

} // namespace augcat
