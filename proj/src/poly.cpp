#include "augcat/poly.hpp"

namespace augcat {

Poly::Poly(std::uint32_t p) : p_(p)
{
    if (p < 2)
        throw AlgebraError("polynomial characteristic must be at least 2");
}

Poly Poly::unit(std::uint32_t p)
{
    Poly r(p);
    r.add_term(Word{}, Scalar::one(p));
    return r;
}

Poly Poly::generator(std::uint32_t p, GenIndex g)
{
    Poly r(p);
    r.add_term(Word{g}, Scalar::one(p));
    return r;
}

Poly Poly::single(std::uint32_t p, Word w, std::int64_t coefficient)
{
    Poly r(p);
    r.add_term(w, Scalar(coefficient, p));
    return r;
}

Scalar Poly::coefficient(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar::zero(p_) : Scalar(it->second, p_);
}

void Poly::add_term(const Word& w, Scalar c)
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

void Poly::require_same_field(const Poly& other) const
{
    if (p_ != other.p_)
        throw AlgebraError("polynomials over different fields");
}

Poly& Poly::operator+=(const Poly& other)
{
    require_same_field(other);
    for (const auto& [w, c] : other.terms_)
        add_term(w, Scalar(c, p_));
    return *this;
}

Poly Poly::operator+(const Poly& other) const
{
    Poly r = *this;
    r += other;
    return r;
}

Poly Poly::operator-(const Poly& other) const
{
    require_same_field(other);
    Poly r = *this;
    for (const auto& [w, c] : other.terms_)
        r.add_term(w, -Scalar(c, p_));
    return r;
}

Poly Poly::operator*(const Poly& other) const
{
    require_same_field(other);
    Poly r(p_);
    for (const auto& [wa, ca] : terms_) {
        for (const auto& [wb, cb] : other.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, Scalar(ca, p_) * Scalar(cb, p_));
        }
    }
    return r;
}

Poly Poly::scaled(Scalar c) const
{
    Poly r(p_);
    for (const auto& [w, v] : terms_)
        r.add_term(w, Scalar(v, p_) * c);
    return r;
}

} // namespace augcat
