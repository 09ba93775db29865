#include "thetaclass/taut_ring.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include "thetaclass/errors.hpp"
#include "thetaclass/numberware.hpp"

namespace thetaclass {

std::vector<LambdaMonomial> monomials_of_degree(int g, int d) {
    std::vector<LambdaMonomial> out;
    if (d < 0) return out;
    LambdaMonomial m;
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == 0) {
            if (left == 0) out.push_back(m);
            return;
        }
        for (int p = 0; p * i <= left; ++p) {
            m.e[i - 1] = p;
            rec(i - 1, left - p * i);
        }
        m.e[i - 1] = 0;
    };
    rec(g, d);
    std::sort(out.begin(), out.end());
    return out;
}

LambdaPoly mumford_component(int g, int d) {
    LambdaPoly r;
    for (int i = 0; i <= g; ++i) {
        int j = d - i;
        if (j < 0 || j > g) continue;
        LambdaMonomial a = i ? LambdaMonomial::lambda(i) : LambdaMonomial{};
        LambdaMonomial b = j ? LambdaMonomial::lambda(j) : LambdaMonomial{};
        r.add(a * b, Rational(j % 2 ? -1 : 1));
    }
    return r;
}

namespace {

// Smaller key = more preferred as a basis element.
std::vector<int> preference_key(const LambdaMonomial& m) {
    std::vector<int> k;
    int even = 0;
    for (int i = 1; i < 5; i += 2) even += m.e[i];
    k.push_back(even);
    for (int i = 0; i < 5; ++i) k.push_back(-m.e[i]);
    return k;
}

}  // namespace

std::shared_ptr<const RingPresentation> build_ring(int g, bool open) {
    if (g < 1 || g > 5) throw std::invalid_argument("build_ring: genus outside 1..5");
    static std::mutex mu;
    static std::map<std::pair<int, bool>, std::shared_ptr<const RingPresentation>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(g, open);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    auto ring = std::shared_ptr<RingPresentation>(new RingPresentation());
    ring->genus_ = g;
    ring->open_ = open;
    ring->top_ = open ? g * (g - 1) / 2 : g * (g + 1) / 2;

    std::vector<LambdaPoly> generators;
    for (int d = 2; d <= 2 * g; d += 2) generators.push_back(mumford_component(g, d));
    if (open) generators.emplace_back(LambdaMonomial::lambda(g));

    for (int d = 0; d <= ring->top_ + g; ++d) {
        auto monos = monomials_of_degree(g, d);
        // Least preferred first, so that pivots land on them.
        std::sort(monos.begin(), monos.end(), [](const LambdaMonomial& a, const LambdaMonomial& b) {
            return preference_key(a) > preference_key(b);
        });
        std::map<LambdaMonomial, std::size_t> col;
        for (std::size_t i = 0; i < monos.size(); ++i) col[monos[i]] = i;
        Matrix rows;
        for (const auto& gen : generators) {
            int gd = gen.terms().begin()->first.degree();
            for (const auto& m : monomials_of_degree(g, d - gd)) {
                std::vector<Rational> row(monos.size());
                for (const auto& [t, c] : gen.terms()) row[col.at(t * m)] += c;
                rows.push_back(std::move(row));
            }
        }
        std::vector<int> pivots;
        if (!rows.empty()) pivots = rref(rows);
        std::vector<bool> is_pivot(monos.size(), false);
        for (int p : pivots) is_pivot[p] = true;
        std::vector<LambdaMonomial> basis;
        for (std::size_t i = monos.size(); i-- > 0;)
            if (!is_pivot[i]) basis.push_back(monos[i]);
        if (d > ring->top_) {
            if (!basis.empty())
                throw std::logic_error("build_ring: nonzero class above the top degree at g=" + std::to_string(g));
            continue;
        }
        for (std::size_t i = 0; i < monos.size(); ++i)
            if (!is_pivot[i]) ring->normal_form_[monos[i]] = TautElement(monos[i]);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            TautElement nf;
            for (std::size_t c = 0; c < monos.size(); ++c)
                if (!is_pivot[c] && !rows[r][c].is_zero()) nf.add(monos[c], -rows[r][c]);
            ring->normal_form_[monos[pivots[r]]] = nf;
        }
        ring->basis_.push_back(std::move(basis));
    }
    cache[key] = ring;
    return ring;
}

const std::vector<LambdaMonomial>& RingPresentation::basis(int d) const {
    static const std::vector<LambdaMonomial> empty;
    if (d < 0 || d > top_) return empty;
    return basis_[d];
}

std::size_t RingPresentation::total_dimension() const {
    std::size_t n = 0;
    for (const auto& b : basis_) n += b.size();
    return n;
}

TautElement RingPresentation::reduce(const LambdaMonomial& m) const {
    if (m.max_index() > genus_)
        throw DegreeOverflow("reduce: " + m.str() + " involves lambda_i with i > g = " + std::to_string(genus_));
    if (m.degree() > top_) return {};
    return normal_form_.at(m);
}

TautElement RingPresentation::reduce(const LambdaPoly& p) const {
    TautElement r;
    for (const auto& [m, c] : p.terms()) r += reduce(m) * c;
    return r;
}

NormalizationTable NormalizationTable::published() {
    NormalizationTable t;
    t.set(1, {Rational(1, 24), "published: degree of lambda_1 on A_1"});
    t.set(3, {Rational(1, 181440), "published: <lambda_1^6> on A_3^Perf"});
    t.set(4, {Rational(1, 1814400), "published: <lambda_1^10> on A_4^Perf"});
    t.set(5, {Rational(13, 16329600), "published: <lambda_1^15> on A_5^Perf"});
    return t;
}

const Normalization& NormalizationTable::at(int g) const {
    auto it = entries_.find(g);
    if (it == entries_.end())
        throw MissingDatum("normalization <lambda_1^top> at genus " + std::to_string(g) + " is not loaded");
    return it->second;
}

Rational intersection_number(const RingPresentation& r, const TautElement& x, const NormalizationTable& table) {
    if (r.open()) throw std::invalid_argument("intersection_number needs the compactified ring");
    if (!x.is_zero() && x.degree() != r.top_degree())
        throw std::invalid_argument("intersection_number: class is not of top degree");
    TautElement y = r.reduce(x);
    if (y.is_zero()) return Rational(0);
    const LambdaMonomial top = LambdaMonomial::lambda(1, r.top_degree());
    if (y.terms().size() != 1 || y.terms().begin()->first != top)
        throw std::logic_error("intersection_number: top degree is not spanned by lambda_1^top");
    return y.coeff(top) * table.at(r.genus()).value;
}

Matrix pairing_matrix(const RingPresentation& r, int d, const NormalizationTable& table) {
    const auto& rows = r.basis(d);
    const auto& cols = r.basis(r.top_degree() - d);
    Matrix m(rows.size(), std::vector<Rational>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            m[i][j] = intersection_number(r, TautElement(rows[i] * cols[j]), table);
    return m;
}

TautElement sigma1_power_taut(int g) {
    auto ring = build_ring(g, false);
    Rational c = Rational(-1) * pow2(g - 1) * Rational(factorial(g - 1)) / zeta_negative_odd(g);
    return ring->reduce(TautElement(LambdaMonomial::lambda(g), c));
}

TautElement zero_section_taut(int g) {
    auto ring = build_ring(g, false);
    Rational c = Rational(g % 2 ? -1 : 1) / zeta_negative_odd(g);
    return ring->reduce(TautElement(LambdaMonomial::lambda(g), c));
}

TautElement taut_project_boundary(const LambdaMonomial& lam, const BoundaryDescriptor& b, int g) {
    if (b.distinct_labels < 0 || b.degree < b.distinct_labels || (b.distinct_labels == 0) != (b.degree == 0) ||
        lam.degree() + b.degree != g)
        throw std::invalid_argument("taut_project_boundary: term of degree " + std::to_string(lam.degree() + b.degree) +
                                    " with " + std::to_string(b.distinct_labels) +
                                    " boundary labels is outside the expansion grammar at g=" + std::to_string(g));
    if (b.distinct_labels == 0) return build_ring(g, false)->reduce(lam);
    // Supported over the locus of two or more boundary components, or a non-constant lambda
    // polynomial times a boundary class: both project to zero.
    if (b.distinct_labels >= 2 || !lam.is_one()) return {};
    return sigma1_power_taut(g);
}

}  // namespace thetaclass
