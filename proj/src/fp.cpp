#include "augcat/fp.hpp"

namespace augcat {

bool is_prime(std::uint32_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Scalar::Scalar(std::int64_t value, std::uint32_t p) : p_(p)
{
    if (p < 2)
        throw AlgebraError("field characteristic must be at least 2");
    std::int64_t r = value % static_cast<std::int64_t>(p);
    if (r < 0)
        r += p;
    value_ = static_cast<std::uint32_t>(r);
}

void Scalar::require_same_field(const Scalar& other) const
{
    if (p_ != other.p_)
        throw AlgebraError("scalars from different fields: F_" + std::to_string(p_) +
                           " vs F_" + std::to_string(other.p_));
}

Scalar Scalar::operator+(Scalar other) const
{
    require_same_field(other);
    return Scalar((std::uint64_t(value_) + other.value_) % p_, p_);
}

Scalar Scalar::operator-(Scalar other) const
{
    require_same_field(other);
    return Scalar(std::int64_t(value_) - other.value_, p_);
}

Scalar Scalar::operator*(Scalar other) const
{
    require_same_field(other);
    return Scalar((std::uint64_t(value_) * other.value_) % p_, p_);
}

Scalar Scalar::operator-() const
{
    return Scalar(-std::int64_t(value_), p_);
}

Scalar Scalar::inverse() const
{
    if (value_ == 0)
        throw AlgebraError("zero has no inverse");
    // Fermat: a^(p-2) mod p
    std::uint64_t base = value_, result = 1;
    std::uint32_t e = p_ - 2;
    while (e) {
        if (e & 1)
            result = result * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return Scalar(static_cast<std::int64_t>(result), p_);
}

} // namespace augcat
