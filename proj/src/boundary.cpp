#include "thetaclass/boundary.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "thetaclass/errors.hpp"
#include "thetaclass/linalg.hpp"

namespace thetaclass {

// ---------------------------------------------------------------------------------------------
// BoundaryPoly

Rational BoundaryPoly::coeff(const ConfigType& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Rational(0) : it->second;
}

void BoundaryPoly::add(const ConfigType& t, const Rational& c) {
    if (c.is_zero()) return;
    if (degree_ >= 0 && t.degree() != degree_) throw std::invalid_argument("BoundaryPoly: mixed degrees");
    auto [it, inserted] = terms_.emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    degree_ = terms_.empty() ? -1 : t.degree();
}

BoundaryPoly& BoundaryPoly::operator+=(const BoundaryPoly& o) {
    if (o.level_ != level_) throw std::invalid_argument("BoundaryPoly: mixing cover and base levels");
    for (const auto& [t, c] : o.terms_) add(t, c);
    return *this;
}

BoundaryPoly& BoundaryPoly::operator-=(const BoundaryPoly& o) { return *this += o * Rational(-1); }

BoundaryPoly BoundaryPoly::operator*(const Rational& c) const {
    BoundaryPoly r(level_);
    for (const auto& [t, v] : terms_) r.add(t, v * c);
    return r;
}

std::string BoundaryPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [t, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.str() + "*" + t.str();
    }
    return s;
}

BoundaryPoly unit_poly(Level level) {
    BoundaryPoly p(level);
    p.add(ConfigType{}, Rational(1));
    return p;
}

// ---------------------------------------------------------------------------------------------
// Named classes

namespace {

struct Pattern {
    std::vector<int> exps;
    std::vector<Vec> relations;
    bool any = false;
};

Vec bits_of(const std::string& s) {
    Vec v = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == '1') v |= Vec(1) << i;
    return v;
}

// Defining patterns. Slot order follows the defining sums: for B the squared label is slot 0,
// for A5 the shared label n is slot 0.
Pattern pattern_of(const NamedClass& c) {
    auto ones = [](int k) { return std::vector<int>(k, 1); };
    switch (c.tag) {
        case Tag::Sigma:
            return {ones(c.index), {}, true};
        case Tag::Beta:
            return {ones(c.index), {}, false};
        case Tag::Y:
            return {ones(4), {bits_of("1111")}, false};
        case Tag::A:
            switch (c.index) {
                case 0: return {ones(5), {}, true};
                case 1: return {ones(5), {}, false};
                case 2: return {ones(5), {bits_of("11111")}, false};
                case 3: return {ones(5), {bits_of("11110")}, false};
                case 4: return {ones(5), {bits_of("11100")}, false};
                case 5: return {ones(5), {bits_of("11100"), bits_of("10011")}, false};
            }
            break;
        case Tag::B: {
            std::vector<int> e{2, 1, 1, 1};
            switch (c.index) {
                case 0: return {e, {}, true};
                case 1: return {e, {}, false};
                case 2: return {e, {bits_of("1111")}, false};
                case 3: return {e, {bits_of("1110")}, false};
                case 4: return {e, {bits_of("0111")}, false};
            }
            break;
        }
        case Tag::C:
            if (c.index == 0) return {{2, 2, 1}, {}, true};
            if (c.index == 1) return {{2, 2, 1}, {}, false};
            if (c.index == 2) return {{2, 2, 1}, {bits_of("111")}, false};
            break;
        case Tag::D:
            if (c.index == 0) return {{3, 1, 1}, {}, true};
            if (c.index == 1) return {{3, 1, 1}, {}, false};
            if (c.index == 2) return {{3, 1, 1}, {bits_of("111")}, false};
            break;
        case Tag::E:
            return {{3, 2}, {}, false};
        case Tag::F:
            return {{4, 1}, {}, false};
        case Tag::G:
            return {{5}, {}, false};
        case Tag::Orbit:
            return {c.orbit_exps, c.orbit_relations, c.any_relation};
    }
    throw std::invalid_argument("undefined named class " + c.str());
}

void validate(const NamedClass& c) {
    bool ok = true;
    switch (c.tag) {
        case Tag::Sigma:
        case Tag::Beta: ok = c.index >= 1 && c.index <= kMaxDegree; break;
        case Tag::A: ok = c.index >= 0 && c.index <= 5; break;
        case Tag::B: ok = c.index >= 0 && c.index <= 4; break;
        case Tag::C:
        case Tag::D: ok = c.index >= 0 && c.index <= 2; break;
        case Tag::Orbit: {
            int d = std::accumulate(c.orbit_exps.begin(), c.orbit_exps.end(), 0);
            ok = !c.orbit_exps.empty() && d <= kMaxDegree;
            for (int e : c.orbit_exps) ok = ok && e > 0;
            for (Vec r : c.orbit_relations) ok = ok && r != 0 && (r >> c.orbit_exps.size()) == 0;
            break;
        }
        default: break;
    }
    if (!ok) throw std::invalid_argument("undefined named class tag/degree combination");
}

}  // namespace

NamedClass NamedClass::orbit(std::vector<int> exps, std::vector<Vec> relations, bool any) {
    NamedClass c{Tag::Orbit, 0, std::move(exps), gf2_rref(std::move(relations)), any};
    if (any) c.orbit_relations.clear();
    validate(c);
    return c;
}

int NamedClass::degree() const {
    validate(*this);
    auto p = pattern_of(*this);
    return std::accumulate(p.exps.begin(), p.exps.end(), 0);
}

std::string NamedClass::str() const {
    auto idx = [&](const char* base) { return index == 0 ? std::string(base) : base + std::to_string(index); };
    switch (tag) {
        case Tag::Sigma: return "s" + std::to_string(index);
        case Tag::Beta: return "b" + std::to_string(index);
        case Tag::Y: return "Y";
        case Tag::A: return idx("A");
        case Tag::B: return idx("B");
        case Tag::C: return idx("C");
        case Tag::D: return idx("D");
        case Tag::E: return "E";
        case Tag::F: return "F";
        case Tag::G: return "G";
        case Tag::Orbit: {
            std::string s = "O[";
            for (std::size_t i = 0; i < orbit_exps.size(); ++i) s += (i ? "," : "") + std::to_string(orbit_exps[i]);
            s += "|";
            if (any_relation) s += "*";
            for (std::size_t r = 0; r < orbit_relations.size(); ++r) {
                if (r) s += ",";
                for (std::size_t i = 0; i < orbit_exps.size(); ++i) s += ((orbit_relations[r] >> i) & 1) ? '1' : '0';
            }
            return s + "]";
        }
    }
    return "?";
}

NamedClass NamedClass::parse(const std::string& s) {
    auto fail = [&]() -> NamedClass { throw ParseError("unknown boundary symbol '" + s + "'"); };
    if (s.empty()) return fail();
    auto number = [&](std::size_t from) -> int {
        if (from >= s.size()) return 0;
        for (std::size_t i = from; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return -1;
        return std::stoi(s.substr(from));
    };
    NamedClass c;
    if (s.rfind("O[", 0) == 0) {
        if (s.back() != ']') return fail();
        std::string body = s.substr(2, s.size() - 3);
        auto bar = body.find('|');
        if (bar == std::string::npos) return fail();
        std::vector<int> exps;
        std::stringstream es(body.substr(0, bar));
        std::string item;
        while (std::getline(es, item, ',')) {
            if (item.empty()) return fail();
            for (char ch : item)
                if (ch < '0' || ch > '9') return fail();
            exps.push_back(std::stoi(item));
        }
        std::string rel = body.substr(bar + 1);
        if (rel == "*") return orbit(exps, {}, true);
        std::vector<Vec> rels;
        std::stringstream rs(rel);
        while (std::getline(rs, item, ',')) {
            if (item.size() != exps.size()) return fail();
            for (char ch : item)
                if (ch != '0' && ch != '1') return fail();
            rels.push_back(bits_of(item));
        }
        try {
            return orbit(exps, rels, false);
        } catch (const std::invalid_argument&) {
            return fail();
        }
    }
    char h = s[0];
    int n = number(1);
    if (n < 0) return fail();
    if (h == 's' && n > 0) c = sigma(n);
    else if (h == 'b' && n > 0) c = beta(n);
    else if (s == "Y") c = y();
    else if (h == 'A') c = a(n);
    else if (h == 'B') c = b(n);
    else if (h == 'C') c = NamedClass::c(n);
    else if (h == 'D') c = d(n);
    else if (s == "E") c = e();
    else if (s == "F") c = f();
    else if (s == "G") c = g();
    else return fail();
    try {
        validate(c);
    } catch (const std::invalid_argument&) {
        return fail();
    }
    return c;
}

Word::Word(std::vector<NamedClass> fs) : factors(std::move(fs)) { std::sort(factors.begin(), factors.end()); }

int Word::degree() const {
    int d = 0;
    for (const auto& f : factors) d += f.degree();
    return d;
}

Word Word::operator*(const Word& o) const {
    std::vector<NamedClass> fs = factors;
    fs.insert(fs.end(), o.factors.begin(), o.factors.end());
    return Word(std::move(fs));
}

std::string Word::str() const {
    if (factors.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < factors.size();) {
        std::size_t j = i;
        while (j < factors.size() && factors[j] == factors[i]) ++j;
        if (!s.empty()) s += "*";
        s += factors[i].str();
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.factors <=> b.factors;
}

BoundaryPoly expand_named(const NamedClass& c, int g) {
    validate(c);
    Pattern p = pattern_of(c);
    BoundaryPoly out(Level::Base);
    if (p.any) {
        std::vector<int> sorted = p.exps;
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        int d = std::accumulate(sorted.begin(), sorted.end(), 0);
        for (const auto& t : types_of_degree(d))
            if (t.exponents == sorted && t.rank() <= g) out.add(t, Rational(1));
        return out;
    }
    ConfigType t = canonical_pattern(p.exps, p.relations);
    if (t.rank() <= g) out.add(t, Rational(1));
    return out;
}

BoundaryPoly expand_word(const Word& w, int g) {
    BoundaryPoly r = unit_poly(Level::Base);
    for (const auto& f : w.factors) r = product(r, expand_named(f, g), g);
    return r;
}

BoundaryPoly expand_expr(const WordExpr& e, int g) {
    BoundaryPoly r(Level::Base);
    for (const auto& [w, c] : e) r += expand_word(w, g) * c;
    return r;
}

// ---------------------------------------------------------------------------------------------
// Products

namespace {

// Sub-configuration of v on the slots where a is positive, with exponents a.
ConfigType restrict_to(const ConfigType& v, const std::vector<int>& a, const std::vector<Vec>& span) {
    std::vector<int> idx;
    for (int i = 0; i < v.k(); ++i)
        if (a[i] > 0) idx.push_back(i);
    Vec mask = 0;
    for (int i : idx) mask |= Vec(1) << i;
    std::vector<Vec> rels;
    for (Vec c : span) {
        if (c == 0 || (c & ~mask)) continue;
        Vec packed = 0;
        for (std::size_t j = 0; j < idx.size(); ++j)
            if ((c >> idx[j]) & 1) packed |= Vec(1) << j;
        rels.push_back(packed);
    }
    std::vector<int> exps;
    for (int i : idx) exps.push_back(a[i]);
    return canonical_pattern(exps, rels);
}

}  // namespace

std::uint64_t structure_constant(const ConfigType& t, const ConfigType& u, const ConfigType& v) {
    static std::mutex mu;
    static std::map<std::tuple<ConfigType, ConfigType, ConfigType>, std::uint64_t> cache;
    if (t.degree() + u.degree() != v.degree()) return 0;
    auto key = std::make_tuple(t, u, v);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    std::uint64_t n = 0;
    if (t.k() == 0 || u.k() == 0) {
        n = (t.k() == 0 ? u == v : t == v) ? 1 : 0;
    } else {
        const auto span = span_elements(v.relations);
        std::vector<int> a(v.k(), 0);
        std::function<void(int, int)> rec = [&](int i, int left) {
            if (i == v.k()) {
                if (left != 0) return;
                std::vector<int> b(v.k());
                for (int s = 0; s < v.k(); ++s) b[s] = v.exponents[s] - a[s];
                if (restrict_to(v, a, span) == t && restrict_to(v, b, span) == u) ++n;
                return;
            }
            for (int x = 0; x <= v.exponents[i] && x <= left; ++x) {
                a[i] = x;
                rec(i + 1, left - x);
            }
            a[i] = 0;
        };
        rec(0, t.degree());
    }
    std::lock_guard<std::mutex> lock(mu);
    cache[key] = n;
    return n;
}

BoundaryPoly product(const BoundaryPoly& p, const BoundaryPoly& q, int g) {
    if (p.level() != q.level()) throw std::invalid_argument("product: mixing cover and base levels");
    BoundaryPoly out(p.level());
    if (p.is_zero() || q.is_zero()) return out;
    const int d = p.degree() + q.degree();
    if (d > kMaxDegree) throw DegreeOverflow("product: degree " + std::to_string(d) + " exceeds 5");
    for (const auto& v : types_of_degree(d)) {
        if (v.rank() > g) continue;
        Rational c;
        for (const auto& [t, x] : p.terms())
            for (const auto& [u, y] : q.terms()) {
                auto n = structure_constant(t, u, v);
                if (n) c += x * y * Rational(static_cast<long>(n));
            }
        out.add(v, c);
    }
    return out;
}

// ---------------------------------------------------------------------------------------------
// Z_m powers and pushforward

BoundaryPoly expand_zm_power(int g, int j) {
    if (j < 0 || j > kMaxDegree) throw DegreeOverflow("expand_zm_power: j outside 0..5");
    if (g < 1 || g > kMaxGenus) throw std::invalid_argument("expand_zm_power: genus outside 1..5");
    BoundaryPoly out(Level::Cover);
    for (const auto& t : types_of_degree(j)) {
        if (t.rank() > g) continue;
        auto count = count_vanishing_pattern(g, t.k(), t.relations);
        if (count == 0) continue;
        out.add(t, Rational(t.multinomial()) * Rational(mpz_class(std::to_string(count))));
    }
    return out;
}

BoundaryPoly pushforward_level2(const BoundaryPoly& p) {
    if (p.level() != Level::Cover) throw std::invalid_argument("pushforward_level2 expects a cover-level polynomial");
    BoundaryPoly out(Level::Base);
    for (const auto& [t, c] : p.terms()) out.add(t, c / pow2(t.degree()));
    return out;
}

// ---------------------------------------------------------------------------------------------
// Basis change

BasisSolution change_basis(const BoundaryPoly& p, const std::vector<Word>& targets, int g) {
    if (p.level() != Level::Base) throw std::invalid_argument("change_basis expects a base-level polynomial");
    std::vector<BoundaryPoly> cols;
    std::set<ConfigType> rows_set;
    for (const auto& [t, c] : p.terms()) rows_set.insert(t);
    for (const auto& w : targets) {
        if (!p.is_zero() && w.degree() != p.degree())
            throw std::invalid_argument("change_basis: target " + w.str() + " has the wrong degree");
        cols.push_back(expand_word(w, g));
        for (const auto& [t, c] : cols.back().terms()) rows_set.insert(t);
    }
    std::vector<ConfigType> rows(rows_set.begin(), rows_set.end());
    const std::size_t n = targets.size();
    Matrix aug(rows.size(), std::vector<Rational>(n + 1));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < n; ++c) aug[r][c] = cols[c].coeff(rows[r]);
        aug[r][n] = p.coeff(rows[r]);
    }
    auto pivots = rref(aug, n);
    BasisSolution sol{std::vector<Rational>(n), pivots.size() == n};
    for (std::size_t r = 0; r < pivots.size(); ++r) sol.coefficients[pivots[r]] = aug[r][n];
    BoundaryPoly residual = p;
    for (std::size_t c = 0; c < n; ++c) residual -= cols[c] * sol.coefficients[c];
    if (!residual.is_zero()) throw Infeasible("change_basis: not in the span of the targets; residual " + residual.str());
    return sol;
}

// ---------------------------------------------------------------------------------------------
// Literal verification

namespace {

// Bit s set iff the labels indexed by subset s sum to zero.
std::uint64_t zero_sum_family(const std::vector<Vec>& labels) {
    const std::size_t k = labels.size();
    std::uint64_t fam = 0;
    for (Vec s = 0; s < (Vec(1) << k); ++s) {
        Vec x = 0;
        for (std::size_t i = 0; i < k; ++i)
            if ((s >> i) & 1) x ^= labels[i];
        if (x == 0) fam |= std::uint64_t(1) << s;
    }
    return fam;
}

std::uint64_t span_family(const std::vector<Vec>& gens) {
    std::uint64_t fam = 0;
    for (Vec s : span_elements(gens)) fam |= std::uint64_t(1) << s;
    return fam;
}

bool member_with_family(const Pattern& p, std::uint64_t pattern_fam, std::uint64_t fam, const std::vector<int>& exps) {
    const int k = static_cast<int>(exps.size());
    if (static_cast<int>(p.exps.size()) != k) return false;
    {
        auto a = p.exps, b = exps;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    if (p.any) return true;
    std::vector<int> f(k);
    std::iota(f.begin(), f.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) ok = exps[f[i]] == p.exps[i];
        for (Vec s = 0; ok && s < (Vec(1) << k); ++s) {
            Vec t = 0;
            for (int i = 0; i < k; ++i)
                if ((s >> i) & 1) t |= Vec(1) << f[i];
            ok = (((pattern_fam >> s) & 1) == ((fam >> t) & 1));
        }
        if (ok) return true;
    } while (std::next_permutation(f.begin(), f.end()));
    return false;
}

struct LiteralContext {
    std::vector<std::pair<Word, Rational>> lhs, rhs;
    std::map<NamedClass, std::pair<Pattern, std::uint64_t>> patterns;
    int degree = 0;

    explicit LiteralContext(const WordExpr& l, const WordExpr& r) {
        degree = -1;
        for (const auto* side : {&l, &r})
            for (const auto& [w, c] : *side) {
                if (c.is_zero()) continue;
                if (degree >= 0 && w.degree() != degree) throw std::invalid_argument("verify_identity: mixed degrees");
                degree = w.degree();
                for (const auto& f : w.factors)
                    if (!patterns.count(f)) {
                        Pattern p = pattern_of(f);
                        patterns.emplace(f, std::make_pair(p, span_family(p.relations)));
                    }
            }
        for (const auto& [w, c] : l)
            if (!c.is_zero()) lhs.emplace_back(w, c);
        for (const auto& [w, c] : r)
            if (!c.is_zero()) rhs.emplace_back(w, c);
        if (degree > kMaxDegree) throw DegreeOverflow("verify_identity: degree exceeds 5");
    }

    // Ordered factorizations of the monomial (labels, exps) into the factors of w.
    std::uint64_t factorizations(const Word& w, std::size_t idx, const std::vector<Vec>& labels, std::vector<int>& rest) const {
        if (idx == w.factors.size()) {
            for (int e : rest)
                if (e) return 0;
            return 1;
        }
        const auto& [pat, pfam] = patterns.at(w.factors[idx]);
        const int need = std::accumulate(pat.exps.begin(), pat.exps.end(), 0);
        const int k = static_cast<int>(labels.size());
        std::vector<int> a(k, 0);
        std::uint64_t total = 0;
        std::function<void(int, int)> rec = [&](int i, int left) {
            if (i == k) {
                if (left) return;
                std::vector<Vec> sub_labels;
                std::vector<int> sub_exps;
                for (int s = 0; s < k; ++s)
                    if (a[s]) {
                        sub_labels.push_back(labels[s]);
                        sub_exps.push_back(a[s]);
                    }
                if (!member_with_family(pat, pfam, zero_sum_family(sub_labels), sub_exps)) return;
                for (int s = 0; s < k; ++s) rest[s] -= a[s];
                total += factorizations(w, idx + 1, labels, rest);
                for (int s = 0; s < k; ++s) rest[s] += a[s];
                return;
            }
            for (int x = 0; x <= rest[i] && x <= left; ++x) {
                a[i] = x;
                rec(i + 1, left - x);
            }
            a[i] = 0;
        };
        rec(0, need);
        return total;
    }

    Rational side_coeff(const std::vector<std::pair<Word, Rational>>& side, const std::vector<Vec>& labels,
                        const std::vector<int>& exps) const {
        Rational c;
        for (const auto& [w, x] : side) {
            std::vector<int> rest = exps;
            auto n = factorizations(w, 0, labels, rest);
            if (n) c += x * Rational(static_cast<long>(n));
        }
        return c;
    }

    // Returns false (and fills the check) on the first mismatch.
    bool compare(const std::vector<Vec>& labels, const std::vector<int>& exps, int g, IdentityCheck& out) const {
        ++out.monomials_checked;
        Rational l = side_coeff(lhs, labels, exps), r = side_coeff(rhs, labels, exps);
        if (l == r) return true;
        out.holds = false;
        out.lhs_coeff = l;
        out.rhs_coeff = r;
        std::string s;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (i) s += " ";
            s += "delta" + to_string(BoundaryLabel(g, labels[i])) + "^" + std::to_string(exps[i]);
        }
        out.witness = s;
        return false;
    }
};

void compositions(int total, int parts, std::vector<int>& cur, const std::function<bool(const std::vector<int>&)>& f,
                  bool& stop) {
    if (stop) return;
    if (static_cast<int>(cur.size()) == parts - 1) {
        if (total >= 1) {
            cur.push_back(total);
            if (!f(cur)) stop = true;
            cur.pop_back();
        }
        return;
    }
    for (int x = 1; x <= total - (parts - 1 - static_cast<int>(cur.size())); ++x) {
        cur.push_back(x);
        compositions(total - x, parts, cur, f, stop);
        cur.pop_back();
        if (stop) return;
    }
}

}  // namespace

bool literal_member(const NamedClass& c, const std::vector<Vec>& labels, const std::vector<int>& exps) {
    Pattern p = pattern_of(c);
    return member_with_family(p, span_family(p.relations), zero_sum_family(labels), exps);
}

IdentityCheck verify_identity(const WordExpr& lhs, const WordExpr& rhs, int g) {
    if (g < 1 || g > 3) throw std::invalid_argument("verify_identity: exhaustive instantiation is limited to g <= 3");
    LiteralContext ctx(lhs, rhs);
    IdentityCheck out;
    if (ctx.degree <= 0) return out;
    const int d = ctx.degree;
    const Vec n_labels = (Vec(1) << (2 * g)) - 1;
    std::vector<Vec> current;
    bool stop = false;
    std::function<void(Vec)> grow = [&](Vec start) {
        if (stop) return;
        if (!current.empty()) {
            std::vector<int> cur;
            compositions(d, static_cast<int>(current.size()), cur,
                         [&](const std::vector<int>& exps) { return ctx.compare(current, exps, g, out); }, stop);
        }
        if (static_cast<int>(current.size()) == d) return;
        for (Vec n = start; n <= n_labels && !stop; ++n) {
            bool orth = true;
            for (Vec m : current) orth = orth && !symplectic_form_bits(g, m, n);
            if (!orth) continue;
            current.push_back(n);
            grow(n + 1);
            current.pop_back();
        }
    };
    grow(1);
    return out;
}

IdentityCheck verify_identity_sampled(const WordExpr& lhs, const WordExpr& rhs, int g, std::uint64_t samples,
                                      std::uint64_t seed) {
    if (g < 1 || g > kMaxGenus) throw std::invalid_argument("verify_identity_sampled: genus outside 1..5");
    LiteralContext ctx(lhs, rhs);
    IdentityCheck out;
    if (ctx.degree <= 0) return out;
    const int d = ctx.degree;
    std::mt19937_64 rng(seed);
    const Vec n_labels = (Vec(1) << (2 * g)) - 1;
    for (std::uint64_t s = 0; s < samples; ++s) {
        int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(d));
        std::vector<Vec> labels;
        for (int tries = 0; static_cast<int>(labels.size()) < k && tries < 1000; ++tries) {
            Vec n = 1 + static_cast<Vec>(rng() % n_labels);
            bool ok = true;
            for (Vec m : labels) ok = ok && m != n && !symplectic_form_bits(g, m, n);
            if (ok) labels.push_back(n);
        }
        k = static_cast<int>(labels.size());
        // Random composition of d into k positive parts: choose k-1 cut points.
        std::vector<int> cuts;
        std::vector<int> pool(d - 1);
        std::iota(pool.begin(), pool.end(), 1);
        for (int i = 0; i < k - 1; ++i) {
            std::size_t j = i + static_cast<std::size_t>(rng() % (pool.size() - i));
            std::swap(pool[i], pool[j]);
            cuts.push_back(pool[i]);
        }
        std::sort(cuts.begin(), cuts.end());
        std::vector<int> exps;
        int prev = 0;
        for (int c : cuts) {
            exps.push_back(c - prev);
            prev = c;
        }
        exps.push_back(d - prev);
        if (!ctx.compare(labels, exps, g, out)) return out;
    }
    return out;
}

}  // namespace thetaclass
