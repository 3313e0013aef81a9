/* Exact arithmetic in the prime field F_p. */

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace augcat {

class AlgebraError : public std::runtime_error {
public:
    explicit AlgebraError(const std::string& what) : std::runtime_error(what) {}
};

bool is_prime(std::uint32_t n);

/* An element of F_p. Carries its characteristic so that values from
 * different fields cannot be combined silently. */
class Scalar {
public:
    Scalar(std::int64_t value, std::uint32_t p);

    static Scalar zero(std::uint32_t p) { return Scalar(0, p); }
    static Scalar one(std::uint32_t p) { return Scalar(1, p); }

    std::uint32_t value() const { return value_; }
    std::uint32_t characteristic() const { return p_; }
    bool is_zero() const { return value_ == 0; }

    Scalar operator+(Scalar other) const;
    Scalar operator-(Scalar other) const;
    Scalar operator*(Scalar other) const;
    Scalar operator-() const;

    /* Multiplicative inverse; throws on zero. */
    Scalar inverse() const;

    bool operator==(const Scalar& other) const
    {
        return p_ == other.p_ && value_ == other.value_;
    }
    bool operator!=(const Scalar& other) const { return !(*this == other); }

private:
    std::uint32_t value_;
    std::uint32_t p_;

    void require_same_field(const Scalar& other) const;
};

} // namespace augcat
