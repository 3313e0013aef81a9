#include "augcat/dga.hpp"

#include <sstream>

namespace augcat {

namespace {

std::string word_to_debug(const Dga& dga, const Word& w)
{
    if (w.empty())
        return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += ' ';
        s += dga.generator(w[i]).name;
    }
    return s;
}

} // namespace

Dga::Dga(std::uint32_t p, std::vector<Generator> gens, std::vector<Poly> diffs)
    : p_(p), gens_(std::move(gens)), diffs_(std::move(diffs))
{
    if (!is_prime(p_))
        throw AlgebraError("characteristic " + std::to_string(p_) + " is not prime");
    if (diffs_.size() > gens_.size())
        throw AlgebraError("more differentials than generators");
    while (diffs_.size() < gens_.size())
        diffs_.emplace_back(p_);
    for (GenIndex i = 0; i < gens_.size(); ++i) {
        if (gens_[i].name.empty())
            throw AlgebraError("generator names must be nonempty");
        if (!index_.emplace(gens_[i].name, i).second)
            throw AlgebraError("duplicate generator name: " + gens_[i].name);
    }
    for (const Poly& d : diffs_)
        require_element(d);
}

void Dga::require_element(const Poly& x) const
{
    if (x.characteristic() != p_)
        throw AlgebraError("polynomial over a different field than the algebra");
    for (const auto& [w, c] : x.terms())
        for (GenIndex g : w)
            if (g >= gens_.size())
                throw AlgebraError("unknown generator index " + std::to_string(g));
}

std::optional<GenIndex> Dga::find(std::string_view name) const
{
    auto it = index_.find(std::string(name));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

int Dga::word_grading(const Word& w) const
{
    int sum = 0;
    for (GenIndex g : w)
        sum += grading(g);
    return sum;
}

Poly Dga::apply_differential(const Poly& x) const
{
    require_element(x);
    Poly result(p_);
    for (const auto& [w, c] : x.terms()) {
        // d(l_1 ... l_k) = sum_i (-1)^{gr(l_1)+...+gr(l_{i-1})} l_1 .. d(l_i) .. l_k
        int prefix_grading = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            Scalar sign = prefix_grading % 2 == 0 ? Scalar::one(p_) : -Scalar::one(p_);
            Scalar factor = Scalar(c, p_) * sign;
            for (const auto& [dw, dc] : diffs_[w[i]].terms()) {
                Word out(w.begin(), w.begin() + i);
                out.insert(out.end(), dw.begin(), dw.end());
                out.insert(out.end(), w.begin() + i + 1, w.end());
                result.add_term(out, factor * Scalar(dc, p_));
            }
            prefix_grading += grading(w[i]);
        }
    }
    return result;
}

std::vector<DgaViolation> Dga::validate() const
{
    std::vector<DgaViolation> out;
    for (GenIndex g = 0; g < gens_.size(); ++g) {
        int expected = grading(g) - 1;
        for (const auto& [w, c] : diffs_[g].terms()) {
            int actual = word_grading(w);
            if (actual != expected) {
                DgaViolation v;
                v.kind = DgaViolation::Kind::NonHomogeneousTerm;
                v.generator = gens_[g].name;
                v.word = w;
                v.expected_grading = expected;
                v.actual_grading = actual;
                std::ostringstream msg;
                msg << "term " << word_to_debug(*this, w) << " of d(" << gens_[g].name
                    << ") has grading " << actual << ", expected " << expected;
                v.message = msg.str();
                out.push_back(std::move(v));
            }
        }
    }
    for (GenIndex g = 0; g < gens_.size(); ++g) {
        Poly residual = apply_differential(diffs_[g]);
        if (!residual.is_zero()) {
            DgaViolation v;
            v.kind = DgaViolation::Kind::DifferentialSquare;
            v.generator = gens_[g].name;
            std::ostringstream msg;
            msg << "d(d(" << gens_[g].name << ")) = ";
            bool first = true;
            for (const auto& [w, c] : residual.terms()) {
                if (!first)
                    msg << " + ";
                first = false;
                if (c != 1 || w.empty())
                    msg << c << (w.empty() ? "" : " ");
                msg << word_to_debug(*this, w);
            }
            v.message = msg.str();
            out.push_back(std::move(v));
        }
    }
    return out;
}

Dga Dga::stabilized(int degree, const std::string& name_b, const std::string& name_c) const
{
    if (name_b == name_c || index_.count(name_b) || index_.count(name_c))
        throw AlgebraError("stabilization names collide with existing generators");
    std::vector<Generator> gens = gens_;
    gens.push_back({name_b, degree});
    gens.push_back({name_c, degree - 1});
    std::vector<Poly> diffs = diffs_;
    diffs.push_back(Poly::generator(p_, static_cast<GenIndex>(gens.size() - 1)));
    diffs.emplace_back(p_);
    return Dga(p_, std::move(gens), std::move(diffs));
}

bool Dga::operator==(const Dga& other) const
{
    return p_ == other.p_ && gens_ == other.gens_ && diffs_ == other.diffs_;
}

std::vector<GenIndex> Dga::generators_of_grading(int k) const
{
    std::vector<GenIndex> out;
    for (GenIndex g = 0; g < gens_.size(); ++g)
        if (grading(g) == k)
            out.push_back(g);
    return out;
}

} // namespace augcat
