#include "thetaclass/mixed.hpp"

#include <cctype>

#include "thetaclass/errors.hpp"

namespace thetaclass {

MixedClass::MixedClass(const Rational& c) { add(MixedKey{}, c); }

MixedClass::MixedClass(const Word& w, const LambdaMonomial& lam, const Rational& c) { add(MixedKey{w, lam}, c); }

MixedClass::MixedClass(const LambdaPoly& p) {
    for (const auto& [m, c] : p.terms()) add(MixedKey{Word{}, m}, c);
}

Rational MixedClass::coeff(const Word& w, const LambdaMonomial& lam) const {
    auto it = terms_.find(MixedKey{w, lam});
    return it == terms_.end() ? Rational(0) : it->second;
}

void MixedClass::add(const MixedKey& k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MixedClass& MixedClass::operator+=(const MixedClass& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

MixedClass& MixedClass::operator-=(const MixedClass& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

MixedClass MixedClass::operator*(const MixedClass& o) const {
    MixedClass r;
    for (const auto& [a, x] : terms_)
        for (const auto& [b, y] : o.terms_) r.add(MixedKey{a.word * b.word, a.lam * b.lam}, x * y);
    return r;
}

MixedClass MixedClass::operator*(const Rational& c) const {
    MixedClass r;
    for (const auto& [k, x] : terms_) r.add(k, x * c);
    return r;
}

MixedClass MixedClass::operator*(const LambdaPoly& p) const { return *this * MixedClass(p); }

MixedClass MixedClass::pow(int n) const {
    if (n < 0) throw std::invalid_argument("MixedClass::pow with negative exponent");
    MixedClass r(Rational(1));
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
}

MixedClass MixedClass::boundary_component(int d) const {
    MixedClass r;
    for (const auto& [k, c] : terms_)
        if (k.word.degree() == d) r.add(k, c);
    return r;
}

std::map<Word, LambdaPoly> MixedClass::by_word() const {
    std::map<Word, LambdaPoly> r;
    for (const auto& [k, c] : terms_) r[k.word].add(k.lam, c);
    return r;
}

LambdaPoly MixedClass::lambda_part() const {
    LambdaPoly r;
    for (const auto& [k, c] : terms_)
        if (k.word.factors.empty()) r.add(k.lam, c);
    return r;
}

std::string MixedClass::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
        std::string coef = c.abs().str();
        if (s.empty()) {
            if (c.sign() < 0) s += "-";
        } else {
            s += c.sign() < 0 ? " - " : " + ";
        }
        std::string body;
        if (!k.lam.is_one()) body = k.lam.str();
        if (!k.word.factors.empty()) body += (body.empty() ? "" : "*") + k.word.str();
        if (body.empty()) s += coef;
        else if (coef == "1") s += body;
        else s += coef + "*" + body;
    }
    return s;
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& t) : text_(t) {}

    MixedClass parse() {
        MixedClass r = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return r;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("parse error at position " + std::to_string(pos_) + ": " + what + " in \"" + text_ + "\"");
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    MixedClass expr() {
        MixedClass r;
        bool first = true;
        while (true) {
            bool neg = false;
            if (peek('+') || peek('-')) {
                neg = text_[pos_] == '-';
                ++pos_;
            } else if (!first) {
                break;
            }
            MixedClass t = term();
            r += neg ? t * Rational(-1) : t;
            first = false;
            if (!(peek('+') || peek('-'))) break;
        }
        return r;
    }

    MixedClass term() {
        MixedClass r = power();
        while (true) {
            if (peek('*')) {
                ++pos_;
                r = r * power();
            } else if (peek('/')) {
                ++pos_;
                MixedClass d = power();
                if (d.terms().size() != 1 || d.terms().begin()->first != MixedKey{})
                    fail("division by a non-constant");
                r = r * (Rational(1) / d.terms().begin()->second);
            } else {
                break;
            }
        }
        return r;
    }

    MixedClass power() {
        MixedClass base = atom();
        if (peek('^')) {
            ++pos_;
            skip();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected an exponent");
            base = base.pow(std::stoi(text_.substr(start, pos_ - start)));
        }
        return base;
    }

    MixedClass atom() {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            MixedClass r = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return r;
        }
        if (c == '-' || c == '+') {
            ++pos_;
            MixedClass r = power();
            return c == '-' ? r * Rational(-1) : r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return MixedClass(Rational(mpz_class(text_.substr(start, pos_ - start))));
        }
        if (!std::isalpha(static_cast<unsigned char>(c))) fail("unexpected '" + std::string(1, c) + "'");
        std::size_t start = pos_;
        if (c == 'O' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '[') {
            auto close = text_.find(']', pos_);
            if (close == std::string::npos) fail("unterminated O[...]");
            pos_ = close + 1;
        } else {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        }
        std::string id = text_.substr(start, pos_ - start);
        if (id.size() >= 2 && id[0] == 'l') {
            int i = std::stoi(id.substr(1));
            if (i < 1 || i > 5) fail("lambda index outside 1..5");
            return MixedClass(Word{}, LambdaMonomial::lambda(i));
        }
        try {
            return MixedClass(Word({NamedClass::parse(id)}), LambdaMonomial{});
        } catch (const ParseError&) {
            pos_ = start;
            fail("unknown symbol '" + id + "'");
        }
    }
};

}  // namespace

MixedClass parse_mixed(const std::string& text) { return Parser(text).parse(); }

}  // namespace thetaclass
