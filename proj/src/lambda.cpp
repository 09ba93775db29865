#include "thetaclass/lambda.hpp"

#include <stdexcept>

namespace thetaclass {

LambdaMonomial LambdaMonomial::lambda(int i, int power) {
    if (i < 1 || i > 5 || power < 0) throw std::invalid_argument("lambda index outside 1..5");
    LambdaMonomial m;
    m.e[i - 1] = power;
    return m;
}

int LambdaMonomial::degree() const {
    int d = 0;
    for (int i = 0; i < 5; ++i) d += (i + 1) * e[i];
    return d;
}

int LambdaMonomial::max_index() const {
    for (int i = 4; i >= 0; --i)
        if (e[i] > 0) return i + 1;
    return 0;
}

LambdaMonomial LambdaMonomial::operator*(const LambdaMonomial& o) const {
    LambdaMonomial m;
    for (int i = 0; i < 5; ++i) m.e[i] = e[i] + o.e[i];
    return m;
}

std::string LambdaMonomial::str() const {
    std::string s;
    for (int i = 0; i < 5; ++i) {
        if (!e[i]) continue;
        if (!s.empty()) s += "*";
        s += "l" + std::to_string(i + 1);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

std::strong_ordering operator<=>(const LambdaMonomial& a, const LambdaMonomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.e <=> b.e;
}

LambdaPoly::LambdaPoly(const Rational& c) { add(LambdaMonomial{}, c); }

LambdaPoly::LambdaPoly(const LambdaMonomial& m, const Rational& c) { add(m, c); }

Rational LambdaPoly::coeff(const LambdaMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool LambdaPoly::is_homogeneous() const {
    return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

int LambdaPoly::degree() const {
    if (terms_.empty()) return -1;
    if (!is_homogeneous()) throw std::logic_error("LambdaPoly::degree on an inhomogeneous polynomial");
    return terms_.begin()->first.degree();
}

LambdaPoly LambdaPoly::component(int d) const {
    LambdaPoly r;
    for (const auto& [m, c] : terms_)
        if (m.degree() == d) r.add(m, c);
    return r;
}

void LambdaPoly::add(const LambdaMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

LambdaPoly& LambdaPoly::operator-=(const LambdaPoly& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

LambdaPoly LambdaPoly::operator*(const LambdaPoly& o) const {
    LambdaPoly r;
    for (const auto& [a, x] : terms_)
        for (const auto& [b, y] : o.terms_) r.add(a * b, x * y);
    return r;
}

LambdaPoly LambdaPoly::operator*(const Rational& c) const {
    LambdaPoly r;
    for (const auto& [m, x] : terms_) r.add(m, x * c);
    return r;
}

LambdaPoly LambdaPoly::pow(int n) const {
    if (n < 0) throw std::invalid_argument("LambdaPoly::pow with negative exponent");
    LambdaPoly r(Rational(1));
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
}

std::string LambdaPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string coef = c.abs().str();
        if (s.empty()) {
            if (c.sign() < 0) s += "-";
        } else {
            s += c.sign() < 0 ? " - " : " + ";
        }
        if (m.is_one()) s += coef;
        else if (coef == "1") s += m.str();
        else s += coef + "*" + m.str();
    }
    return s;
}

}  // namespace thetaclass
