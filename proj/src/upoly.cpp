#include "pcsub/upoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pcsub {

UPoly::UPoly(const Rational& c) {
    if (!c.is_zero()) c_.push_back(c);
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::linear(const Rational& a, const Rational& b) { return UPoly(std::vector<Rational>{a, b}); }

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UPoly::coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rational(0);
}

Rational UPoly::evaluate(const Rational& t) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UPoly UPoly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Rational(static_cast<long>(k)));
    return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
    if (c_.empty()) return *this;
    UPoly out = *this;
    const Rational lead = c_.back();
    for (auto& c : out.c_) c /= lead;
    return out;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const UPoly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    c_ = std::move(out);
    trim();
    return *this;
}

UPoly UPoly::operator-() const {
    UPoly out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

std::string UPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = c_[k];
        if (c.is_zero()) continue;
        Rational mag = c;
        if (c < 0) {
            os << (first ? "-" : " - ");
            mag = -c;
        } else if (!first) {
            os << " + ";
        }
        if (k == 0 || mag != 1) os << pcsub::to_string(mag);
        if (k > 0 && mag != 1) os << "*";
        if (k > 0) os << var;
        if (k > 1) os << "^" << k;
        first = false;
    }
    return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {UPoly(), a};
    std::vector<Rational> q(a.degree() - db + 1, Rational(0));
    const Rational lead = b.leading();
    for (int k = a.degree(); k >= db; --k) {
        const Rational factor = rem[k] / lead;
        q[k - db] = factor;
        if (factor.is_zero()) continue;
        for (int j = 0; j <= db; ++j) rem[k - db + j] -= factor * b.coeffs()[j];
    }
    return {UPoly(std::move(q)), UPoly(std::move(rem))};
}

UPoly exact_quotient(const UPoly& a, const UPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = divmod(x, y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

UPoly inverse_mod(const UPoly& a, const UPoly& m) {
    // extended Euclid: track s with s*a = r (mod m)
    UPoly r0 = m, r1 = divmod(a, m).second;
    UPoly s0, s1 = UPoly(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        UPoly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    const Rational lead = r0.leading();
    return divmod(s0 * UPoly(Rational(1) / lead), m).second;
}

UPoly squarefree_part(const UPoly& p) {
    if (p.degree() <= 0) return p.monic();
    return exact_quotient(p, gcd(p, p.derivative())).monic();
}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
    std::map<Integer, int> factors;
    for (Integer d = 2; d * d <= n; ++d) {
        while (n % d == 0) {
            ++factors[d];
            n /= d;
        }
    }
    if (n > 1) ++factors[n];
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [p, e] : factors) {
        const std::size_t size = divs.size();
        Integer pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < size; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly& p, const Integer& cap) {
    std::vector<Rational> roots;
    if (p.degree() <= 0) return roots;
    UPoly q = squarefree_part(p);
    if (q.coeff(0).is_zero()) {
        roots.push_back(Rational(0));
        q = exact_quotient(q, UPoly::linear(0, 1));
    }
    if (q.degree() <= 0) return roots;
    // integer coefficients
    Integer lcm = 1;
    for (const auto& c : q.coeffs()) {
        const Integer d = denominator_of(c);
        lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    const Integer a0 = boost::multiprecision::abs(numerator_of(q.coeff(0) * Rational(lcm)));
    const Integer an = boost::multiprecision::abs(numerator_of(q.leading() * Rational(lcm)));
    if (a0 > cap || an > cap) return roots;
    const auto num = positive_divisors(a0);
    const auto den = positive_divisors(an);
    std::vector<Rational> candidates;
    for (const auto& a : num)
        for (const auto& b : den) {
            const Rational r(a, b);
            for (const Rational& c : {r, Rational(-r)})
                if (q.evaluate(c).is_zero()) candidates.push_back(c);
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    roots.insert(roots.end(), candidates.begin(), candidates.end());
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace pcsub
