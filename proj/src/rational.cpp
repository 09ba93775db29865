#include "thetaclass/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace thetaclass {

Rational::Rational(long n) : v_(n) {}

Rational::Rational(long n, long d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(mpz_class(n), mpz_class(d));
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n) : v_(n) {}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    mpz_class n, d(1);
    auto digits_ok = [](const std::string& t, bool sign_allowed) {
        if (t.empty()) return false;
        std::size_t i = 0;
        if (sign_allowed && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::string ns = s.substr(0, slash);
    if (!digits_ok(ns, true)) throw std::invalid_argument("bad rational: '" + s + "'");
    if (ns[0] == '+') ns = ns.substr(1);
    n.set_str(ns, 10);
    if (slash != std::string::npos) {
        std::string ds = s.substr(slash + 1);
        if (!digits_ok(ds, false)) throw std::invalid_argument("bad rational: '" + s + "'");
        d.set_str(ds, 10);
    }
    return Rational(n, d);
}

std::string Rational::str() const {
    if (is_integer()) return num_str();
    return num_str() + "/" + den_str();
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(int e) const {
    if (e < 0) return Rational(1) / pow(-e);
    Rational r(1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational pow2(int e) { return Rational(2).pow(e); }

mpz_class factorial(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class binomial(unsigned n, unsigned k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace thetaclass
