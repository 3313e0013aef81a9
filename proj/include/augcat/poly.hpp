/* Noncommutative polynomials: F_p-linear combinations of words in the
 * generators of a semi-free DGA. Words hold generator indices in
 * declaration order; the empty word is the unit. */

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "augcat/fp.hpp"

namespace augcat {

using GenIndex = std::uint32_t;
using Word = std::vector<GenIndex>;

/* Graded lexicographic order: shorter words first, then letterwise. */
struct WordLess {
    bool operator()(const Word& a, const Word& b) const
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

class Poly {
public:
    using TermMap = std::map<Word, std::uint32_t, WordLess>;

    explicit Poly(std::uint32_t p);

    static Poly zero(std::uint32_t p) { return Poly(p); }
    static Poly unit(std::uint32_t p);
    static Poly generator(std::uint32_t p, GenIndex g);
    static Poly single(std::uint32_t p, Word w, std::int64_t coefficient = 1);

    std::uint32_t characteristic() const { return p_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Scalar coefficient(const Word& w) const;
    void add_term(const Word& w, Scalar c);

    Poly& operator+=(const Poly& other);
    Poly operator+(const Poly& other) const;
    Poly operator-(const Poly& other) const;
    Poly operator*(const Poly& other) const; // concatenation of words
    Poly scaled(Scalar c) const;

    bool operator==(const Poly& other) const
    {
        return p_ == other.p_ && terms_ == other.terms_;
    }
    bool operator!=(const Poly& other) const { return !(*this == other); }

private:
    std::uint32_t p_;
    TermMap terms_; // canonical: no zero coefficients stored

    void require_same_field(const Poly& other) const;
};

} // namespace augcat
