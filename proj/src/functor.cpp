#include "augcat/functor.hpp"

#include <algorithm>

#include "augcat/parallel.hpp"

namespace augcat {

namespace {

std::size_t locate(const std::vector<Augmentation>& augs, const Augmentation& eps)
{
    for (std::size_t i = 0; i < augs.size(); ++i)
        if (augs[i].values() == eps.values())
            return i;
    throw AlgebraError("augmentation missing from the canonical enumeration");
}

std::vector<std::vector<std::uint32_t>> context_values(std::span<const Augmentation> ctx)
{
    std::vector<std::vector<std::uint32_t>> rows;
    rows.reserve(ctx.size());
    for (const Augmentation& eps : ctx)
        rows.push_back(eps.values());
    return rows;
}

/* Compositions of d into r parts >= 1. */
void for_each_composition(std::size_t d, std::size_t r,
                          const std::function<void(const std::vector<std::size_t>&)>& fn)
{
    std::vector<std::size_t> parts(r, 1);
    if (r == 0 || d < r)
        return;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t slot,
                                                            std::size_t remaining) {
        if (slot + 1 == r) {
            parts[slot] = remaining;
            fn(parts);
            return;
        }
        for (std::size_t t = 1; t + (r - slot - 1) <= remaining; ++t) {
            parts[slot] = t;
            rec(slot + 1, remaining - t);
        }
    };
    rec(0, d);
}

/* Feeds every selection of one entry per block table into sink: the
 * concatenated argument word, the letter word formed by one generator from
 * each block value, and the product coefficient. */
void for_each_block_selection(
    const std::vector<const std::map<Word, CochainVec>*>& blocks, std::uint32_t p,
    const std::function<void(const Word& args, const Word& letters, Scalar coeff)>& sink)
{
    Word args, letters;
    std::function<void(std::size_t, Scalar)> rec = [&](std::size_t m, Scalar coeff) {
        if (m == blocks.size()) {
            sink(args, letters, coeff);
            return;
        }
        for (const auto& [w, vec] : *blocks[m]) {
            std::size_t args_before = args.size();
            args.insert(args.end(), w.begin(), w.end());
            for (const auto& [g, c] : vec.coeffs()) {
                letters.push_back(g);
                rec(m + 1, coeff * Scalar(c, p));
                letters.pop_back();
            }
            args.resize(args_before);
        }
    };
    rec(0, Scalar::one(p));
}

} // namespace

AinftyFunctor::AinftyFunctor(DgaPtr dom, DgaPtr cod, std::vector<Augmentation> dom_augs,
                             std::vector<Augmentation> cod_augs,
                             std::vector<std::size_t> object_map, TableFactory factory)
    : dom_(std::move(dom)), cod_(std::move(cod)), dom_augs_(std::move(dom_augs)),
      cod_augs_(std::move(cod_augs)), object_map_(std::move(object_map)),
      factory_(std::move(factory))
{
    if (object_map_.size() != dom_augs_.size())
        throw AlgebraError("object map must cover every dom augmentation");
}

AinftyFunctor AinftyFunctor::induced(const DgaMorphism& f)
{
    if (!f.validate().empty())
        throw AlgebraError("induced functor needs a valid DGA morphism");
    DgaPtr dom = f.target();
    DgaPtr cod = f.source();
    std::vector<Augmentation> dom_augs = enumerate_augmentations(dom);
    std::vector<Augmentation> cod_augs = enumerate_augmentations(cod);
    std::vector<std::size_t> object_map;
    object_map.reserve(dom_augs.size());
    for (const Augmentation& eps : dom_augs) {
        Augmentation pulled = pull_back(eps, f);
        // the zero-order terms of the conjugated map must cancel
        for (GenIndex a = 0; a < cod->size(); ++a)
            if (eps.evaluate(f.image(a)) != pulled.value(a))
                throw AlgebraError("zero-order term of the induced functor failed to cancel");
        object_map.push_back(locate(cod_augs, pulled));
    }

    std::vector<Poly> images;
    images.reserve(cod->size());
    for (GenIndex a = 0; a < cod->size(); ++a)
        images.push_back(f.image(a));
    DgaPtr dom_copy = dom;
    DgaPtr cod_copy = cod;
    TableFactory factory = [dom_copy, cod_copy,
                            images](std::span<const Augmentation> ctx) {
        const std::uint32_t p = dom_copy->characteristic();
        std::map<Word, CochainVec> table;
        std::vector<std::vector<std::uint32_t>> rows = context_values(ctx);
        for (GenIndex a = 0; a < cod_copy->size(); ++a) {
            Poly expansion =
                detail::subset_expansion(*dom_copy, images[a], rows, ctx.size() - 1);
            for (const auto& [w, c] : expansion.terms())
                table.emplace(w, CochainVec(p)).first->second.add(a, Scalar(c, p));
        }
        return table;
    };
    return AinftyFunctor(dom, cod, std::move(dom_augs), std::move(cod_augs),
                         std::move(object_map), std::move(factory));
}

AinftyFunctor AinftyFunctor::identity(DgaPtr dga)
{
    std::vector<Augmentation> augs = enumerate_augmentations(dga);
    std::vector<std::size_t> object_map(augs.size());
    for (std::size_t i = 0; i < augs.size(); ++i)
        object_map[i] = i;
    DgaPtr copy = dga;
    TableFactory factory = [copy](std::span<const Augmentation> ctx) {
        std::map<Word, CochainVec> table;
        if (ctx.size() == 2)
            for (GenIndex g = 0; g < copy->size(); ++g)
                table.emplace(Word{g},
                              CochainVec::generator(copy->characteristic(), g));
        return table;
    };
    std::vector<Augmentation> cod_augs = augs;
    return AinftyFunctor(dga, dga, std::move(augs), std::move(cod_augs),
                         std::move(object_map), std::move(factory));
}

CochainVec AinftyFunctor::component(std::span<const std::size_t> ctx,
                                    std::span<const GenIndex> args) const
{
    if (ctx.size() != args.size() + 1 || args.empty())
        throw AlgebraError("functor component arity mismatch");
    std::vector<Augmentation> context;
    context.reserve(ctx.size());
    for (std::size_t i : ctx)
        context.push_back(dom_augs_.at(i));
    std::map<Word, CochainVec> t = factory_(context);
    auto it = t.find(Word(args.begin(), args.end()));
    CochainVec out = it == t.end() ? CochainVec(cod_->characteristic()) : it->second;
    int expected = 0;
    for (GenIndex g : args)
        expected += dom_->grading(g);
    for (const auto& [g, c] : out.coeffs())
        if (cod_->grading(g) != expected)
            throw AlgebraError("functor component breaks the 1-d absolute grading shift");
    return out;
}

AinftyFunctor AinftyFunctor::with_factory(TableFactory factory) const
{
    AinftyFunctor copy = *this;
    copy.factory_ = std::move(factory);
    return copy;
}

namespace {

struct CtxExpander {
    const std::vector<Augmentation>& augs;

    std::vector<Augmentation> operator()(std::span<const std::size_t> key, std::size_t begin,
                                         std::size_t end) const
    {
        std::vector<Augmentation> out;
        out.reserve(end - begin);
        for (std::size_t i = begin; i < end; ++i)
            out.push_back(augs[key[i]]);
        return out;
    }
};

std::vector<std::size_t> decode_key(std::size_t index, std::size_t base, std::size_t length)
{
    std::vector<std::size_t> key(length);
    for (std::size_t i = length; i-- > 0;) {
        key[i] = index % base;
        index /= base;
    }
    return key;
}

std::size_t pow_count(std::size_t base, std::size_t length)
{
    std::size_t count = 1;
    for (std::size_t i = 0; i < length; ++i)
        count *= base;
    return count;
}

} // namespace

std::vector<FunctorViolation> check_functor_equation(const AinftyFunctor& F,
                                                     std::size_t max_d, unsigned jobs)
{
    std::vector<FunctorViolation> all;
    const std::vector<Augmentation>& dom_augs = F.dom_augs();
    if (dom_augs.empty())
        return all;
    const std::uint32_t p = F.dom()->characteristic();
    CtxExpander expand{dom_augs};

    for (std::size_t d = 1; d <= max_d; ++d) {
        std::size_t count = pow_count(dom_augs.size(), d + 1);
        std::vector<std::vector<FunctorViolation>> slots(count);
        parallel_for(count, jobs, [&](std::size_t index) {
            std::vector<std::size_t> key = decode_key(index, dom_augs.size(), d + 1);
            std::map<Word, CochainVec> residual;
            auto accumulate = [&](const Word& args, const CochainVec& vec, Scalar factor) {
                residual.emplace(args, CochainVec(p)).first->second += vec.scaled(factor);
            };

            // composed side: outer mu in the cod category over functor blocks
            for (std::size_t r = 1; r <= d; ++r) {
                for_each_composition(d, r, [&](const std::vector<std::size_t>& parts) {
                    std::vector<std::map<Word, CochainVec>> blocks;
                    std::vector<const std::map<Word, CochainVec>*> block_ptrs;
                    std::vector<Augmentation> outer_ctx;
                    std::size_t at = 0;
                    outer_ctx.push_back(F.cod_augs()[F.map_object(key[0])]);
                    for (std::size_t t : parts) {
                        blocks.push_back(F.table(expand(key, at, at + t + 1)));
                        at += t;
                        outer_ctx.push_back(F.cod_augs()[F.map_object(key[at])]);
                    }
                    for (auto& b : blocks)
                        block_ptrs.push_back(&b);
                    bool any_empty = false;
                    for (auto* b : block_ptrs)
                        if (b->empty())
                            any_empty = true;
                    if (any_empty)
                        return;
                    MuTable outer(*F.cod(), outer_ctx);
                    if (outer.entries().empty())
                        return;
                    for_each_block_selection(
                        block_ptrs, p,
                        [&](const Word& args, const Word& letters, Scalar coeff) {
                            const CochainVec* hit = outer.find(letters);
                            if (hit)
                                accumulate(args, *hit, coeff);
                        });
                });
            }

            // functor side, subtracted: F applied after an inner dom mu
            for (std::size_t i = 1; i <= d; ++i) {
                for (std::size_t l = 0; l + i <= d; ++l) {
                    MuTable inner(*F.dom(), expand(key, l, l + i + 1));
                    if (inner.entries().empty())
                        continue;
                    std::vector<std::size_t> outer_key(key.begin(), key.begin() + l + 1);
                    outer_key.insert(outer_key.end(), key.begin() + l + i, key.end());
                    std::map<Word, CochainVec> outer =
                        F.table(expand(outer_key, 0, outer_key.size()));
                    for (const auto& [w_out, vec_out] : outer) {
                        GenIndex slot = w_out[l];
                        int exponent = 0;
                        for (std::size_t m = l + 1; m < w_out.size(); ++m)
                            exponent += F.dom()->grading(w_out[m]);
                        Scalar sign = exponent % 2 == 0 ? Scalar::one(p) : -Scalar::one(p);
                        for (const auto& [w_in, vec_in] : inner.entries()) {
                            Scalar c = vec_in.coefficient(slot);
                            if (c.is_zero())
                                continue;
                            Word args(w_out.begin(), w_out.begin() + l);
                            args.insert(args.end(), w_in.begin(), w_in.end());
                            args.insert(args.end(), w_out.begin() + l + 1, w_out.end());
                            accumulate(args, vec_out, -(sign * c));
                        }
                    }
                }
            }

            for (const auto& [args, vec] : residual) {
                if (vec.is_zero())
                    continue;
                FunctorViolation v;
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

std::vector<FunctorViolation> check_functor_composition(const DgaMorphism& f,
                                                        const DgaMorphism& g,
                                                        std::size_t max_d, unsigned jobs)
{
    AinftyFunctor one = AinftyFunctor::induced(f);  // Aug(target f) -> Aug(source f)
    AinftyFunctor two = AinftyFunctor::induced(g);  // Aug(target g) -> Aug(source g)
    AinftyFunctor composite = AinftyFunctor::induced(compose(f, g));

    std::vector<FunctorViolation> all;
    const std::vector<Augmentation>& dom_augs = composite.dom_augs();
    if (dom_augs.empty())
        return all;
    const std::uint32_t p = composite.dom()->characteristic();
    CtxExpander expand{dom_augs};

    // object maps must agree
    for (std::size_t i = 0; i < dom_augs.size(); ++i) {
        if (composite.map_object(i) != two.map_object(one.map_object(i))) {
            FunctorViolation v;
            v.arity = 0;
            v.context = {i};
            all.push_back(std::move(v));
        }
    }

    for (std::size_t d = 1; d <= max_d; ++d) {
        std::size_t count = pow_count(dom_augs.size(), d + 1);
        std::vector<std::vector<FunctorViolation>> slots(count);
        parallel_for(count, jobs, [&](std::size_t index) {
            std::vector<std::size_t> key = decode_key(index, dom_augs.size(), d + 1);
            std::map<Word, CochainVec> residual;
            std::map<Word, CochainVec> direct = composite.table(expand(key, 0, key.size()));
            for (const auto& [w, vec] : direct)
                if (w.size() == d)
                    residual.emplace(w, CochainVec(p)).first->second += vec;

            for (std::size_t r = 1; r <= d; ++r) {
                for_each_composition(d, r, [&](const std::vector<std::size_t>& parts) {
                    std::vector<std::map<Word, CochainVec>> blocks;
                    std::vector<const std::map<Word, CochainVec>*> block_ptrs;
                    std::vector<std::size_t> outer_key;
                    std::size_t at = 0;
                    outer_key.push_back(one.map_object(key[0]));
                    for (std::size_t t : parts) {
                        blocks.push_back(one.table(expand(key, at, at + t + 1)));
                        at += t;
                        outer_key.push_back(one.map_object(key[at]));
                    }
                    for (auto& b : blocks)
                        block_ptrs.push_back(&b);
                    for (auto* b : block_ptrs)
                        if (b->empty())
                            return;
                    std::vector<Augmentation> outer_ctx;
                    outer_ctx.reserve(outer_key.size());
                    for (std::size_t s : outer_key)
                        outer_ctx.push_back(two.dom_augs()[s]);
                    std::map<Word, CochainVec> outer = two.table(outer_ctx);
                    if (outer.empty())
                        return;
                    for_each_block_selection(
                        block_ptrs, p,
                        [&](const Word& args, const Word& letters, Scalar coeff) {
                            auto hit = outer.find(letters);
                            if (hit != outer.end())
                                residual.emplace(args, CochainVec(p)).first->second +=
                                    hit->second.scaled(-coeff);
                        });
                });
            }

            for (const auto& [args, vec] : residual) {
                if (vec.is_zero())
                    continue;
                FunctorViolation v;
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

PreNatural::PreNatural(AinftyFunctor from, AinftyFunctor to, int degree, Kernel kernel)
    : from_(std::move(from)), to_(std::move(to)), degree_(degree), kernel_(std::move(kernel))
{
    if (!same_algebra(*from_.dom(), *to_.dom()) || !same_algebra(*from_.cod(), *to_.cod()))
        throw AlgebraError("pre-natural transformation needs parallel functors");
}

PreNatural PreNatural::identity_on(const AinftyFunctor& identity_functor)
{
    DgaPtr cod = identity_functor.cod();
    Kernel kernel = [cod](std::size_t d, std::span<const std::size_t>,
                          std::span<const GenIndex> args) {
        if (d == 1)
            return CochainVec::generator(cod->characteristic(), args[0]);
        return CochainVec(cod->characteristic());
    };
    return PreNatural(identity_functor, identity_functor, 1, std::move(kernel));
}

PreNatural PreNatural::zero(AinftyFunctor from, AinftyFunctor to, int degree)
{
    DgaPtr cod = from.cod();
    Kernel kernel = [cod](std::size_t, std::span<const std::size_t>,
                          std::span<const GenIndex>) {
        return CochainVec(cod->characteristic());
    };
    return PreNatural(std::move(from), std::move(to), degree, std::move(kernel));
}

PreNatural PreNatural::degree_zero_only(AinftyFunctor from, AinftyFunctor to, int degree,
                                        std::vector<CochainVec> per_object)
{
    if (per_object.size() != from.dom_augs().size())
        throw AlgebraError("degree-zero transformation needs one vector per object");
    DgaPtr cod = from.cod();
    Kernel kernel = [cod, per_object](std::size_t d, std::span<const std::size_t> ctx,
                                      std::span<const GenIndex>) {
        if (d == 0)
            return per_object[ctx[0]];
        return CochainVec(cod->characteristic());
    };
    return PreNatural(std::move(from), std::move(to), degree, std::move(kernel));
}

CochainVec PreNatural::component(std::size_t d, std::span<const std::size_t> ctx,
                                 std::span<const GenIndex> args) const
{
    if (ctx.size() != d + 1 || args.size() != d)
        throw AlgebraError("pre-natural component arity mismatch");
    CochainVec out = kernel_(d, ctx, args);
    int expected = degree_ - 1;
    for (GenIndex g : args)
        expected += from_.dom()->grading(g);
    for (const auto& [g, c] : out.coeffs())
        if (from_.cod()->grading(g) != expected)
            throw AlgebraError("pre-natural component breaks the g-d grading shift");
    return out;
}

namespace {

/* Dense table of one T-component: every argument word of the dom
 * generators, zero outputs skipped. */
std::map<Word, CochainVec> prenat_table(const PreNatural& T, std::size_t t,
                                        std::span<const std::size_t> ctx)
{
    std::map<Word, CochainVec> table;
    const std::size_t n = T.from().dom()->size();
    Word args(t, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t slot) {
        if (slot == t) {
            CochainVec v = T.component(t, ctx, args);
            if (!v.is_zero())
                table.emplace(args, std::move(v));
            return;
        }
        for (GenIndex g = 0; g < n; ++g) {
            args[slot] = g;
            rec(slot + 1);
        }
    };
    rec(0);
    return table;
}

} // namespace

std::vector<PrenatEntry> prenatural_differential(const PreNatural& T, std::size_t max_d,
                                                 unsigned jobs)
{
    std::vector<PrenatEntry> all;
    const AinftyFunctor& F = T.from();
    const AinftyFunctor& G = T.to();
    const std::vector<Augmentation>& dom_augs = F.dom_augs();
    if (dom_augs.empty())
        return all;
    const std::uint32_t p = F.dom()->characteristic();
    const int g_deg = T.degree();
    CtxExpander expand{dom_augs};

    for (std::size_t d = 0; d <= max_d; ++d) {
        std::size_t count = pow_count(dom_augs.size(), d + 1);
        std::vector<std::vector<PrenatEntry>> slots(count);
        parallel_for(count, jobs, [&](std::size_t index) {
            std::vector<std::size_t> key = decode_key(index, dom_augs.size(), d + 1);
            std::map<Word, CochainVec> value;
            auto accumulate = [&](const Word& args, const CochainVec& vec, Scalar factor) {
                value.emplace(args, CochainVec(p)).first->second += vec.scaled(factor);
            };

            // blocks G ... G T F ... F under an outer mu of the cod category
            for (std::size_t r = 1; r <= d + 1; ++r) {
                for (std::size_t q = 1; q <= r; ++q) {
                    // part sizes: >= 1 except the T block which may be empty
                    std::vector<std::size_t> parts(r, 0);
                    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t slot,
                                                                            std::size_t left) {
                        if (slot == r) {
                            if (left != 0)
                                return;
                            std::vector<std::map<Word, CochainVec>> blocks;
                            std::vector<const std::map<Word, CochainVec>*> ptrs;
                            std::vector<Augmentation> outer_ctx;
                            std::size_t at = 0;
                            outer_ctx.push_back(G.cod_augs()[G.map_object(key[0])]);
                            for (std::size_t m = 1; m <= r; ++m) {
                                std::size_t t = parts[m - 1];
                                auto block_ctx = expand(key, at, at + t + 1);
                                if (m < q)
                                    blocks.push_back(G.table(block_ctx));
                                else if (m == q)
                                    blocks.push_back(prenat_table(
                                        T, t,
                                        std::vector<std::size_t>(key.begin() + at,
                                                                 key.begin() + at + t + 1)));
                                else
                                    blocks.push_back(F.table(block_ctx));
                                at += t;
                                outer_ctx.push_back(m < q
                                                        ? G.cod_augs()[G.map_object(key[at])]
                                                        : F.cod_augs()[F.map_object(key[at])]);
                            }
                            for (auto& b : blocks)
                                ptrs.push_back(&b);
                            for (auto* b : ptrs)
                                if (b->empty())
                                    return;
                            MuTable outer(*F.cod(), outer_ctx);
                            if (outer.entries().empty())
                                return;
                            std::size_t f_args_begin = 0;
                            for (std::size_t m = 0; m < q; ++m)
                                f_args_begin += parts[m];
                            for_each_block_selection(
                                ptrs, p,
                                [&](const Word& args, const Word& letters, Scalar coeff) {
                                    const CochainVec* hit = outer.find(letters);
                                    if (!hit)
                                        return;
                                    int dagger = 0;
                                    for (std::size_t i = f_args_begin; i < args.size(); ++i)
                                        dagger += F.dom()->grading(args[i]);
                                    dagger *= (g_deg - 1);
                                    Scalar sign = dagger % 2 == 0 ? Scalar::one(p)
                                                                  : -Scalar::one(p);
                                    accumulate(args, *hit, sign * coeff);
                                });
                            return;
                        }
                        std::size_t min_t = slot + 1 == q ? 0 : 1;
                        for (std::size_t t = min_t; t <= left; ++t) {
                            parts[slot] = t;
                            rec(slot + 1, left - t);
                        }
                    };
                    rec(0, d);
                }
            }

            // T applied after an inner dom mu, subtracted with its sign
            for (std::size_t i = 1; i <= d; ++i) {
                for (std::size_t l = 0; l + i <= d; ++l) {
                    MuTable inner(*F.dom(), expand(key, l, l + i + 1));
                    if (inner.entries().empty())
                        continue;
                    std::vector<std::size_t> outer_key(key.begin(), key.begin() + l + 1);
                    outer_key.insert(outer_key.end(), key.begin() + l + i, key.end());
                    std::map<Word, CochainVec> outer =
                        prenat_table(T, d - i + 1, outer_key);
                    for (const auto& [w_out, vec_out] : outer) {
                        GenIndex slot = w_out[l];
                        int exponent = g_deg - 1;
                        for (std::size_t m = l + 1; m < w_out.size(); ++m)
                            exponent += F.dom()->grading(w_out[m]);
                        Scalar sign = exponent % 2 == 0 ? Scalar::one(p) : -Scalar::one(p);
                        for (const auto& [w_in, vec_in] : inner.entries()) {
                            Scalar c = vec_in.coefficient(slot);
                            if (c.is_zero())
                                continue;
                            Word args(w_out.begin(), w_out.begin() + l);
                            args.insert(args.end(), w_in.begin(), w_in.end());
                            args.insert(args.end(), w_out.begin() + l + 1, w_out.end());
                            accumulate(args, vec_out, -(sign * c));
                        }
                    }
                }
            }

            for (const auto& [args, vec] : value) {
                if (vec.is_zero())
                    continue;
                PrenatEntry e;
                e.arity = d;
                e.context = key;
                e.args = args;
                e.value = vec;
                slots[index].push_back(std::move(e));
            }
        });
        for (auto& s : slots)
            for (auto& e : s)
                all.push_back(std::move(e));
    }
    return all;
}

} // namespace augcat
