#include "augcat/ainfty.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "augcat/parallel.hpp"

namespace augcat {

namespace {

/* Iterates increasing position tuples of size d inside [0, k). */
bool next_combination(std::vector<std::size_t>& pos, std::size_t k)
{
    const std::size_t d = pos.size();
    std::size_t i = d;
    while (i-- > 0) {
        if (pos[i] + (d - i) < k) {
            ++pos[i];
            for (std::size_t j = i + 1; j < d; ++j)
                pos[j] = pos[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::vector<std::uint32_t>> context_values(std::span<const Augmentation> ctx)
{
    std::vector<std::vector<std::uint32_t>> rows;
    rows.reserve(ctx.size());
    for (const Augmentation& eps : ctx)
        rows.push_back(eps.values());
    return rows;
}

void require_context(std::span<const Augmentation> ctx)
{
    if (ctx.size() < 2)
        throw AlgebraError("augmentation tuple needs length at least 2");
    for (std::size_t i = 1; i < ctx.size(); ++i)
        if (!same_algebra(*ctx[0].dga(), *ctx[i].dga()))
            throw AlgebraError("augmentation tuple mixes different algebras");
}

Scalar segment_value(const Dga& dga, const std::vector<std::uint32_t>& row, const Word& w,
                     std::size_t begin, std::size_t end)
{
    Scalar prod = Scalar::one(dga.characteristic());
    for (std::size_t i = begin; i < end; ++i)
        prod = prod * Scalar(row[w[i]], dga.characteristic());
    return prod;
}

} // namespace

CochainVec CochainVec::generator(std::uint32_t p, GenIndex g)
{
    CochainVec v(p);
    v.add(g, Scalar::one(p));
    return v;
}

Scalar CochainVec::coefficient(GenIndex g) const
{
    auto it = coeffs_.find(g);
    return it == coeffs_.end() ? Scalar::zero(p_) : Scalar(it->second, p_);
}

void CochainVec::add(GenIndex g, Scalar c)
{
    if (c.characteristic() != p_)
        throw AlgebraError("cochain coefficient from a different field");
    if (c.is_zero())
        return;
    auto [it, inserted] = coeffs_.emplace(g, c.value());
    if (!inserted) {
        std::uint32_t v = (it->second + std::uint64_t(c.value())) % p_;
        if (v == 0)
            coeffs_.erase(it);
        else
            it->second = v;
    }
}

CochainVec& CochainVec::operator+=(const CochainVec& other)
{
    if (p_ != other.p_)
        throw AlgebraError("cochains over different fields");
    for (const auto& [g, c] : other.coeffs_)
        add(g, Scalar(c, p_));
    return *this;
}

CochainVec CochainVec::scaled(Scalar c) const
{
    CochainVec out(p_);
    for (const auto& [g, v] : coeffs_)
        out.add(g, Scalar(v, p_) * c);
    return out;
}

std::optional<int> homogeneous_grading(const Dga& dga, const CochainVec& v)
{
    std::optional<int> deg;
    for (const auto& [g, c] : v.coeffs()) {
        int k = dga.grading(g);
        if (deg && *deg != k)
            return std::nullopt;
        deg = k;
    }
    return deg;
}

namespace detail {

Poly subset_expansion(const Dga& dga, const Poly& source,
                      const std::vector<std::vector<std::uint32_t>>& ctx, std::size_t d)
{
    if (ctx.size() != d + 1)
        throw AlgebraError("context length must be the arity plus one");
    const std::uint32_t p = dga.characteristic();
    Poly out(p);
    for (const auto& [w, c] : source.terms()) {
        if (w.size() < d)
            continue;
        std::vector<std::size_t> pos(d);
        for (std::size_t i = 0; i < d; ++i)
            pos[i] = i;
        do {
            Scalar weight(c, p);
            std::size_t prev = 0;
            for (std::size_t m = 0; m <= d; ++m) {
                std::size_t stop = m == d ? w.size() : pos[m];
                weight = weight * segment_value(dga, ctx[m], w, prev, stop);
                if (m < d)
                    prev = pos[m] + 1;
            }
            if (!weight.is_zero()) {
                Word surviving;
                surviving.reserve(d);
                for (std::size_t i : pos)
                    surviving.push_back(w[i]);
                out.add_term(surviving, weight);
            }
        } while (next_combination(pos, w.size()));
    }
    return out;
}

Poly multilinear_component_values(const Dga& dga,
                                  const std::vector<std::vector<std::uint32_t>>& ctx,
                                  GenIndex a)
{
    if (ctx.size() < 2)
        throw AlgebraError("context needs length at least 2");
    return subset_expansion(dga, dga.differential(a), ctx, ctx.size() - 1);
}

CochainVec mu_values(const Dga& dga, const std::vector<std::vector<std::uint32_t>>& ctx,
                     const std::vector<GenIndex>& chords)
{
    if (ctx.size() < 2)
        throw AlgebraError("context needs length at least 2");
    const std::size_t d = ctx.size() - 1;
    if (chords.size() != d)
        throw AlgebraError("mu arity does not match the augmentation tuple");
    const std::uint32_t p = dga.characteristic();
    CochainVec out(p);
    for (GenIndex a = 0; a < dga.size(); ++a) {
        for (const auto& [w, c] : dga.differential(a).terms()) {
            if (w.size() < d)
                continue;
            std::vector<std::size_t> pos(d);
            for (std::size_t i = 0; i < d; ++i)
                pos[i] = i;
            do {
                bool matches = true;
                for (std::size_t m = 0; m < d; ++m)
                    if (w[pos[m]] != chords[m]) {
                        matches = false;
                        break;
                    }
                if (matches) {
                    Scalar weight(c, p);
                    std::size_t prev = 0;
                    for (std::size_t m = 0; m <= d; ++m) {
                        std::size_t stop = m == d ? w.size() : pos[m];
                        weight = weight * segment_value(dga, ctx[m], w, prev, stop);
                        if (m < d)
                            prev = pos[m] + 1;
                    }
                    out.add(a, weight);
                }
            } while (next_combination(pos, w.size()));
        }
    }
    return out;
}

} // namespace detail

Poly multilinear_component(std::span<const Augmentation> tuple, GenIndex a)
{
    require_context(tuple);
    return detail::multilinear_component_values(*tuple[0].dga(), context_values(tuple), a);
}

CochainVec mu(std::span<const Augmentation> tuple, std::span<const GenIndex> chords)
{
    require_context(tuple);
    // the tuple is written (eps_0, ..., eps_d); eps_d weights the segment
    // left of the first chord, so the context reads the tuple backwards
    std::vector<std::vector<std::uint32_t>> ctx;
    ctx.reserve(tuple.size());
    for (std::size_t i = tuple.size(); i-- > 0;)
        ctx.push_back(tuple[i].values());
    return detail::mu_values(*tuple[0].dga(), ctx,
                             std::vector<GenIndex>(chords.begin(), chords.end()));
}

CochainVec mu(std::span<const Augmentation> tuple, std::span<const CochainVec> args)
{
    require_context(tuple);
    const Dga& dga = *tuple[0].dga();
    const std::uint32_t p = dga.characteristic();
    CochainVec out(p);
    std::vector<GenIndex> chords(args.size(), 0);
    std::function<void(std::size_t, Scalar)> expand = [&](std::size_t slot, Scalar factor) {
        if (slot == args.size()) {
            out += mu(tuple, std::span<const GenIndex>(chords)).scaled(factor);
            return;
        }
        for (const auto& [g, c] : args[slot].coeffs()) {
            chords[slot] = g;
            expand(slot + 1, factor * Scalar(c, p));
        }
    };
    expand(0, Scalar::one(p));
    return out;
}

MuTable::MuTable(const Dga& dga, std::span<const Augmentation> ctx)
{
    require_context(ctx);
    arity_ = ctx.size() - 1;
    const std::uint32_t p = dga.characteristic();
    std::vector<std::vector<std::uint32_t>> rows = context_values(ctx);
    for (GenIndex a = 0; a < dga.size(); ++a) {
        Poly words = detail::multilinear_component_values(dga, rows, a);
        for (const auto& [w, c] : words.terms()) {
            int args_grading = dga.word_grading(w);
            if (dga.grading(a) != args_grading + 1)
                throw AlgebraError("mu output breaks the 2-d absolute grading shift");
            entries_.emplace(w, CochainVec(p)).first->second.add(a, Scalar(c, p));
        }
    }
}

const CochainVec* MuTable::find(const Word& args) const
{
    auto it = entries_.find(args);
    return it == entries_.end() ? nullptr : &it->second;
}

namespace {

/* Shared sweep for the two sign conventions. For each context and each
 * splitting (inner arity i after l leading arguments) composes the sparse
 * tensors and accumulates the signed residual. */
std::vector<AinftyViolation> check_relation(const DgaPtr& dga, std::size_t max_d,
                                            unsigned jobs, bool left_signs)
{
    std::vector<Augmentation> augs = enumerate_augmentations(dga);
    std::vector<AinftyViolation> all;
    if (augs.empty())
        return all;
    const std::uint32_t p = dga->characteristic();

    for (std::size_t d = 1; d <= max_d; ++d) {
        std::size_t count = 1;
        for (std::size_t i = 0; i <= d; ++i)
            count *= augs.size();
        std::vector<std::vector<AinftyViolation>> slots(count);
        parallel_for(count, jobs, [&](std::size_t index) {
            std::vector<std::size_t> key(d + 1);
            std::size_t rest = index;
            for (std::size_t i = d + 1; i-- > 0;) {
                key[i] = rest % augs.size();
                rest /= augs.size();
            }
            std::map<std::vector<std::size_t>, MuTable> cache;
            auto table = [&](std::vector<std::size_t> sub) -> const MuTable& {
                auto it = cache.find(sub);
                if (it == cache.end()) {
                    std::vector<Augmentation> ctx;
                    ctx.reserve(sub.size());
                    for (std::size_t s : sub)
                        ctx.push_back(augs[s]);
                    it = cache.emplace(std::move(sub), MuTable(*dga, ctx)).first;
                }
                return it->second;
            };

            std::map<Word, CochainVec> residual;
            for (std::size_t i = 1; i <= d; ++i) {
                for (std::size_t l = 0; l + i <= d; ++l) {
                    std::vector<std::size_t> inner_key(key.begin() + l, key.begin() + l + i + 1);
                    std::vector<std::size_t> outer_key(key.begin(), key.begin() + l + 1);
                    outer_key.insert(outer_key.end(), key.begin() + l + i, key.end());
                    const MuTable& inner = table(std::move(inner_key));
                    if (inner.entries().empty())
                        continue;
                    const MuTable& outer = table(std::move(outer_key));
                    for (const auto& [w_out, vec_out] : outer.entries()) {
                        GenIndex slot = w_out[l];
                        int exponent = 0;
                        if (left_signs) {
                            for (std::size_t m = 0; m < l; ++m)
                                exponent += dga->grading(w_out[m]);
                        } else {
                            for (std::size_t m = l + 1; m < w_out.size(); ++m)
                                exponent += dga->grading(w_out[m]);
                        }
                        Scalar sign =
                            exponent % 2 == 0 ? Scalar::one(p) : -Scalar::one(p);
                        for (const auto& [w_in, vec_in] : inner.entries()) {
                            Scalar c = vec_in.coefficient(slot);
                            if (c.is_zero())
                                continue;
                            Word args(w_out.begin(), w_out.begin() + l);
                            args.insert(args.end(), w_in.begin(), w_in.end());
                            args.insert(args.end(), w_out.begin() + l + 1, w_out.end());
                            residual.emplace(args, CochainVec(p)).first->second +=
                                vec_out.scaled(sign * c);
                        }
                    }
                }
            }
            for (const auto& [args, vec] : residual) {
                if (vec.is_zero())
                    continue;
                AinftyViolation v;
                v.arity = d;
                v.context = key;
                v.args = args;
                v.residual = vec;
                slots[index].push_back(std::move(v));
            }
        });
        for (auto& s : slots)
            for (auto& v : s)
                all.push_back(std::move(v));
    }
    return all;
}

} // namespace

std::vector<AinftyViolation> check_a_infinity(const DgaPtr& dga, std::size_t max_d,
                                              unsigned jobs)
{
    return check_relation(dga, max_d, jobs, /*left_signs=*/false);
}

std::vector<AinftyViolation> check_dual_leibniz(const DgaPtr& dga, std::size_t max_d,
                                                unsigned jobs)
{
    return check_relation(dga, max_d, jobs, /*left_signs=*/true);
}

PairHomology::PairHomology(const Augmentation& left, const Augmentation& right)
    : dga_(left.dga()), complex_(BilinearComplex::codifferential(left, right))
{
    // coboundaries in degree k come from the block leaving degree k-1
    std::set<int> degrees;
    for (const Generator& g : dga_->generators())
        degrees.insert(g.grading);
    for (int k : degrees) {
        FpMatrix into = complex_.block_from_degree(k - 1);
        coboundaries_.emplace(k, row_reduce(into.transposed()));
    }
}

CochainVec PairHomology::differential(const CochainVec& v) const
{
    const FpMatrix& m = complex_.matrix();
    CochainVec out(dga_->characteristic());
    for (const auto& [g, c] : v.coeffs())
        for (std::size_t r = 0; r < m.rows(); ++r) {
            std::uint32_t entry = m.at(r, g);
            if (entry)
                out.add(static_cast<GenIndex>(r),
                        Scalar(entry, dga_->characteristic()) *
                            Scalar(c, dga_->characteristic()));
        }
    return out;
}

bool PairHomology::is_cocycle(const CochainVec& v) const
{
    return differential(v).is_zero();
}

CochainVec PairHomology::reduce(const CochainVec& v) const
{
    CochainVec out(dga_->characteristic());
    std::map<int, std::vector<std::pair<GenIndex, std::uint32_t>>> by_degree;
    for (const auto& [g, c] : v.coeffs())
        by_degree[dga_->grading(g)].push_back({g, c});
    for (const auto& [k, part] : by_degree) {
        std::vector<GenIndex> basis = dga_->generators_of_grading(k);
        std::vector<std::uint32_t> coords(basis.size(), 0);
        for (const auto& [g, c] : part) {
            auto it = std::find(basis.begin(), basis.end(), g);
            coords[static_cast<std::size_t>(it - basis.begin())] = c;
        }
        auto ech = coboundaries_.find(k);
        if (ech != coboundaries_.end())
            coords = reduce_mod_rowspace(ech->second, std::move(coords));
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (coords[i])
                out.add(basis[i], Scalar(coords[i], dga_->characteristic()));
    }
    return out;
}

CochainVec homological_composition(const Augmentation& eps0, const Augmentation& eps1,
                                   const Augmentation& eps2, const CochainVec& x,
                                   const CochainVec& y)
{
    const DgaPtr& dga = eps0.dga();
    const std::uint32_t p = dga->characteristic();
    PairHomology left_pair(eps2, eps1);
    PairHomology right_pair(eps1, eps0);
    PairHomology target(eps2, eps0);
    if (!left_pair.is_cocycle(x))
        throw NonCycleError("left factor is not a cocycle of its pair complex");
    if (!right_pair.is_cocycle(y))
        throw NonCycleError("right factor is not a cocycle of its pair complex");
    if (x.is_zero() || y.is_zero())
        return CochainVec(p);
    std::optional<int> deg_x = homogeneous_grading(*dga, x);
    if (!deg_x)
        throw AlgebraError("composition needs a homogeneous left representative");
    // written mu tuple (eps_0, eps_1, eps_2), arguments (x, y) leftmost first
    std::vector<Augmentation> tuple{eps0, eps1, eps2};
    std::vector<CochainVec> args{x, y};
    CochainVec z = mu(tuple, std::span<const CochainVec>(args));
    int abs_degree = *deg_x + 1;
    if (abs_degree % 2 != 0)
        z = z.scaled(-Scalar::one(p));
    return target.reduce(z);
}

} // namespace augcat
