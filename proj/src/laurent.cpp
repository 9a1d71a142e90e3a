#include "normcalc/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace normcalc {

Exponent Exponent::operator+(const Exponent& o) const {
    if (doubled.size() != o.doubled.size()) throw error("exponent length mismatch");
    Exponent r = *this;
    for (size_t i = 0; i < doubled.size(); ++i) r.doubled[i] = checked_add(r.doubled[i], o.doubled[i]);
    return r;
}

Exponent Exponent::operator-() const {
    Exponent r = *this;
    for (auto& x : r.doubled) x = -x;
    return r;
}

HalfInt Exponent::pairing(const std::vector<int64_t>& h) const {
    if (h.size() != doubled.size()) throw error("pairing length mismatch");
    int64_t acc = 0;
    for (size_t i = 0; i < h.size(); ++i) acc = checked_add(acc, checked_mul(doubled[i], h[i]));
    return HalfInt(acc);
}

std::string Exponent::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < doubled.size(); ++i) {
        if (i) os << ", ";
        os << HalfInt(doubled[i]).str();
    }
    os << ")";
    return os.str();
}

MultivariateLaurent MultivariateLaurent::constant(int nvars, int64_t c) {
    MultivariateLaurent p(nvars);
    p.add_term(Exponent::zero(nvars), c);
    return p;
}

MultivariateLaurent MultivariateLaurent::monomial(int64_t coeff, Exponent e) {
    MultivariateLaurent p(e.nvars());
    p.add_term(e, coeff);
    return p;
}

int64_t MultivariateLaurent::coeff(const Exponent& e) const {
    auto it = terms_.find(e.doubled);
    return it == terms_.end() ? 0 : it->second;
}

void MultivariateLaurent::add_term(const Exponent& e, int64_t c) {
    if (e.nvars() != nvars_) throw error("exponent/variable count mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e.doubled, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

MultivariateLaurent MultivariateLaurent::operator+(const MultivariateLaurent& o) const {
    if (nvars_ != o.nvars_) throw error("variable count mismatch in add");
    MultivariateLaurent r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(Exponent(e), c);
    return r;
}

MultivariateLaurent MultivariateLaurent::operator-() const {
    MultivariateLaurent r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultivariateLaurent MultivariateLaurent::operator-(const MultivariateLaurent& o) const {
    return *this + (-o);
}

MultivariateLaurent MultivariateLaurent::operator*(const MultivariateLaurent& o) const {
    if (nvars_ != o.nvars_) throw error("variable count mismatch in mul");
    MultivariateLaurent r(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            std::vector<int64_t> e(e1.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = checked_add(e1[i], e2[i]);
            r.add_term(Exponent(std::move(e)), checked_mul(c1, c2));
        }
    return r;
}

std::string MultivariateLaurent::str(const std::vector<std::string>& varnames) const {
    if (terms_.empty()) return "0";
    std::vector<std::string> names = varnames;
    if (names.empty()) {
        static const char* defaults[] = {"X", "Y", "Z", "W"};
        for (int i = 0; i < nvars_; ++i)
            names.push_back(i < 4 ? defaults[i] : "T" + std::to_string(i + 1));
    }
    std::ostringstream os;
    bool first = true;
    // display order: lexicographically largest exponent first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        int64_t c = it->second;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        int64_t a = c < 0 ? -c : c;
        bool allzero = std::all_of(it->first.begin(), it->first.end(), [](int64_t x) { return x == 0; });
        if (a != 1 || allzero) os << a;
        bool need_space = a != 1 && !allzero;
        for (size_t i = 0; i < it->first.size(); ++i) {
            int64_t d = it->first[i];
            if (d == 0) continue;
            if (need_space) os << "*";
            os << names[i];
            if (d != 2) os << "^" << (d % 2 == 0 ? std::to_string(d / 2) : "(" + std::to_string(d) + "/2)");
            need_space = true;
        }
    }
    return os.str();
}

MultivariateLaurent add(const MultivariateLaurent& a, const MultivariateLaurent& b) { return a + b; }
MultivariateLaurent mul(const MultivariateLaurent& a, const MultivariateLaurent& b) { return a * b; }
MultivariateLaurent negate(const MultivariateLaurent& a) { return -a; }

MultivariateLaurent involute(const MultivariateLaurent& a) {
    MultivariateLaurent r(a.nvars());
    for (const auto& [e, c] : a.terms()) {
        std::vector<int64_t> n(e.size());
        for (size_t i = 0; i < e.size(); ++i) n[i] = -e[i];
        r.add_term(Exponent(std::move(n)), c);
    }
    return r;
}

MultivariateLaurent euler_factor(int nvars) {
    if (nvars < 1) throw error("euler_factor needs at least one variable");
    MultivariateLaurent p = MultivariateLaurent::constant(nvars, 1);
    for (int i = 0; i < nvars; ++i) {
        MultivariateLaurent f(nvars);
        Exponent e = Exponent::zero(nvars);
        e.doubled[i] = 1;
        f.add_term(e, 1);
        e.doubled[i] = -1;
        f.add_term(e, -1);
        p = p * f;
    }
    return p;
}

std::set<Exponent> support(const MultivariateLaurent& a) {
    std::set<Exponent> s;
    for (const auto& [e, c] : a.terms()) s.insert(Exponent(e));
    return s;
}

MultivariateLaurent center(const MultivariateLaurent& a) {
    if (a.is_zero()) throw error("center of the zero polynomial");
    int n = a.nvars();
    std::vector<int64_t> lo(n), hi(n);
    bool first = true;
    for (const auto& [e, c] : a.terms()) {
        for (int i = 0; i < n; ++i) {
            if (first || e[i] < lo[i]) lo[i] = e[i];
            if (first || e[i] > hi[i]) hi[i] = e[i];
        }
        first = false;
    }
    // shift every doubled exponent by the doubled bounding-box midpoint
    std::vector<int64_t> mid(n);
    for (int i = 0; i < n; ++i) {
        int64_t s = checked_add(lo[i], hi[i]);
        if (s % 2 != 0) throw error("centered polynomial leaves the half-integer lattice");
        mid[i] = s / 2;
    }
    MultivariateLaurent r(n);
    for (const auto& [e, c] : a.terms()) {
        std::vector<int64_t> d(n);
        for (int i = 0; i < n; ++i) d[i] = checked_add(e[i], -mid[i]);
        r.add_term(Exponent(std::move(d)), c);
    }
    return r;
}

bool is_symmetric(const MultivariateLaurent& a) {
    if (a.is_zero()) return true;
    MultivariateLaurent inv = involute(a);
    return inv == a || inv == -a;
}

MultivariateLaurent sign_normalize(const MultivariateLaurent& a) {
    if (a.is_zero()) return a;
    if (a.terms().rbegin()->second < 0) return -a;
    return a;
}

MultivariateLaurent divide_exact(const MultivariateLaurent& a, const MultivariateLaurent& b) {
    if (b.is_zero()) throw error("division by zero polynomial");
    if (a.nvars() != b.nvars()) throw error("variable count mismatch in division");
    if (a.is_zero()) return a;
    MultivariateLaurent r = a;
    MultivariateLaurent q(a.nvars());
    const auto& dlead = *b.terms().rbegin();
    size_t guard = (a.term_count() + b.term_count()) * std::max<size_t>(64, a.term_count() * b.term_count());
    while (!r.is_zero()) {
        if (guard-- == 0) throw error("non-exact polynomial division");
        const auto& rlead = *r.terms().rbegin();
        if (rlead.second % dlead.second != 0) throw error("non-exact polynomial division");
        std::vector<int64_t> e(rlead.first.size());
        for (size_t i = 0; i < e.size(); ++i) e[i] = checked_add(rlead.first[i], -dlead.first[i]);
        MultivariateLaurent t = MultivariateLaurent::monomial(rlead.second / dlead.second, Exponent(e));
        q = q + t;
        r = r - t * b;
    }
    return q;
}

}  // namespace normcalc
