#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "normcalc/common.hpp"

namespace normcalc {

// Exponent vector in the half-integer lattice; coordinates are stored doubled
// so every grading the theory produces stays in plain integers.
struct Exponent {
    std::vector<int64_t> doubled;

    Exponent() = default;
    explicit Exponent(std::vector<int64_t> d) : doubled(std::move(d)) {}
    static Exponent zero(int nvars) { return Exponent(std::vector<int64_t>(nvars, 0)); }

    int nvars() const { return static_cast<int>(doubled.size()); }
    Exponent operator+(const Exponent& o) const;
    Exponent operator-() const;
    HalfInt pairing(const std::vector<int64_t>& h) const;  // <s, h>, h integer vector
    bool operator==(const Exponent&) const = default;
    auto operator<=>(const Exponent&) const = default;
    std::string str() const;  // "(a, b)" with exact fractions
};

// Integer-coefficient Laurent polynomial in `nvars` variables with exponents
// in the half-integer lattice. No zero coefficients are stored.
class MultivariateLaurent {
  public:
    explicit MultivariateLaurent(int nvars) : nvars_(nvars) {}

    static MultivariateLaurent zero(int nvars) { return MultivariateLaurent(nvars); }
    static MultivariateLaurent constant(int nvars, int64_t c);
    static MultivariateLaurent monomial(int64_t coeff, Exponent e);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<std::vector<int64_t>, int64_t>& terms() const { return terms_; }
    int64_t coeff(const Exponent& e) const;

    void add_term(const Exponent& e, int64_t c);

    MultivariateLaurent operator+(const MultivariateLaurent& o) const;
    MultivariateLaurent operator-(const MultivariateLaurent& o) const;
    MultivariateLaurent operator*(const MultivariateLaurent& o) const;
    MultivariateLaurent operator-() const;
    bool operator==(const MultivariateLaurent& o) const = default;

    std::string str(const std::vector<std::string>& varnames = {}) const;

  private:
    int nvars_;
    std::map<std::vector<int64_t>, int64_t> terms_;  // doubled exponent -> coeff
};

MultivariateLaurent add(const MultivariateLaurent& a, const MultivariateLaurent& b);
MultivariateLaurent mul(const MultivariateLaurent& a, const MultivariateLaurent& b);
MultivariateLaurent negate(const MultivariateLaurent& a);

// Substitutes T_i -> T_i^{-1} (negates every exponent).
MultivariateLaurent involute(const MultivariateLaurent& a);

// The 2^l-term product of (T_i^{1/2} - T_i^{-1/2}) over i = 1..l.
MultivariateLaurent euler_factor(int nvars);

std::set<Exponent> support(const MultivariateLaurent& a);

// Translates exponents by -(max+min)/2 per coordinate of the support's
// bounding box. Errors on the zero polynomial.
MultivariateLaurent center(const MultivariateLaurent& a);

// True when involute(a) == a or involute(a) == -a.
bool is_symmetric(const MultivariateLaurent& a);

// Negates a if its lexicographically largest term has a negative coefficient.
MultivariateLaurent sign_normalize(const MultivariateLaurent& a);

// Exact division; throws if b does not divide a in the Laurent ring.
MultivariateLaurent divide_exact(const MultivariateLaurent& a, const MultivariateLaurent& b);

}  // namespace normcalc
