#include "lensstring/biform.hpp"

#include <numeric>
#include <sstream>

namespace lensstring {

BiForm::BiForm(int n, i64 m) : n_(n), m_(m) {
    if (n < 2) throw DomainError("BiForm requires n >= 2");
    if (m <= 0) throw DomainError("BiForm requires a positive coefficient modulus");
}

void BiForm::add_term(i64 i, i64 j, i64 c) {
    i %= n_; if (i < 0) i += n_;
    j %= n_; if (j < 0) j += n_;
    if (i == 0 || j == 0) return;  // killed by the quotient
    c %= m_; if (c < 0) c += m_;
    if (c == 0) return;
    auto key = std::make_pair(static_cast<int>(i), static_cast<int>(j));
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second = (it->second + c) % m_;
        if (it->second == 0) terms_.erase(it);
    }
}

i64 BiForm::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? 0 : it->second;
}

void BiForm::check_compatible(const BiForm& rhs) const {
    if (n_ != rhs.n_ || m_ != rhs.m_)
        throw DimensionError("BiForms live over different rings");
}

BiForm BiForm::operator+(const BiForm& rhs) const {
    check_compatible(rhs);
    BiForm out(*this);
    for (const auto& [ij, c] : rhs.terms_) out.add_term(ij.first, ij.second, c);
    return out;
}

BiForm BiForm::operator-(const BiForm& rhs) const {
    check_compatible(rhs);
    BiForm out(*this);
    for (const auto& [ij, c] : rhs.terms_) out.add_term(ij.first, ij.second, -c);
    return out;
}

std::string BiForm::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [ij, c] : terms_) {
        if (!first) os << "+";
        first = false;
        os << c << "t^" << ij.first << "t2^" << ij.second;
    }
    os << " dt/t";
    return os.str();
}

BiForm pushforward(const BiForm& b, i64 s) {
    const int n = b.n();
    i64 ss = s % n; if (ss < 0) ss += n;
    if (std::gcd(ss, static_cast<i64>(n)) != 1)
        throw DomainError("pushforward multiplier must be coprime to n");
    BiForm out(n, b.modulus());
    for (const auto& [ij, c] : b.terms())
        out.add_term(ss * ij.first, ss * ij.second, ss * c);
    return out;
}

}  // namespace lensstring
