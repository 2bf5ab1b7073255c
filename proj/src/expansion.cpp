#include "p3fox/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "p3fox/asymptotics.hpp"
#include "p3fox/errors.hpp"

namespace p3fox {

namespace {

constexpr double kDropTol = 1e-300;
constexpr double kCollisionTol = 1e-12;

void require_same_p(const LatticeSeries& a, const LatticeSeries& b) {
    if (std::abs(a.p() - b.p()) > 1e-15) throw DomainError("lattice series with different base exponents");
}

// x^s on the principal branch, exact for integer s.
cplx principal_pow(cplx x, cplx s) {
    if (s.imag() == 0.0 && s.real() == std::round(s.real()) && std::abs(s.real()) < 1e6) {
        const int k = static_cast<int>(s.real());
        cplx r = 1.0, b = k >= 0 ? x : 1.0 / x;
        for (int i = 0; i < std::abs(k); ++i) r *= b;
        return r;
    }
    if (x.imag() == 0.0) x = {x.real(), 0.0};
    return std::exp(s * std::log(x));
}

}  // namespace

LatticeSeries::LatticeSeries(cplx p, double limit) : p_(p), limit_(limit), integer_p_(false) {
    if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) throw DomainError("non-finite base exponent");
    const double r = std::round(p.real());
    if (p.imag() == 0.0 && std::abs(p.real() - r) < 1e-12) {
        integer_p_ = true;
        p_ = r;
    }
}

LatticeSeries LatticeSeries::monomial(cplx p, LatticeKey key, cplx coef, double limit) {
    LatticeSeries s(p, limit);
    s.add(key, coef);
    return s;
}

LatticeKey LatticeSeries::canonical(LatticeKey k) const {
    if (!integer_p_) return k;
    return {k.m + k.l * static_cast<int>(p_.real()), 0};
}

void LatticeSeries::add(LatticeKey k, cplx coef) {
    if (coef == 0.0) return;
    k = canonical(k);
    if (!within_limit(k)) return;
    terms_[k] += coef;
}

void LatticeSeries::set(LatticeKey k, cplx coef) {
    k = canonical(k);
    if (!within_limit(k)) return;
    terms_[k] = coef;
}

cplx LatticeSeries::coefficient(LatticeKey k) const {
    const auto it = terms_.find(canonical(k));
    return it == terms_.end() ? cplx(0.0) : it->second;
}

void LatticeSeries::add_shifted(const LatticeSeries& other, LatticeKey shift, cplx factor) {
    require_same_p(*this, other);
    if (factor == 0.0) return;
    for (const auto& [k, c] : other.terms_) add(k + shift, factor * c);
}

std::vector<std::pair<LatticeKey, cplx>> LatticeSeries::ordered() const {
    std::vector<std::pair<LatticeKey, cplx>> out(terms_.begin(), terms_.end());
    std::stable_sort(out.begin(), out.end(), [this](const auto& a, const auto& b) {
        return exponent_re(a.first) < exponent_re(b.first);
    });
    return out;
}

int LatticeSeries::m_min() const {
    int m = 0;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        m = first ? k.m : std::min(m, k.m);
        first = false;
    }
    return m;
}

std::optional<int> LatticeSeries::parity() const {
    std::optional<int> par;
    for (const auto& [k, c] : terms_) {
        const int q = ((k.m + k.l) % 2 + 2) % 2;
        if (par && *par != q) return std::nullopt;
        par = q;
    }
    return par;
}

void LatticeSeries::finalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) < kDropTol) it = terms_.erase(it);
        else ++it;
    }
    const auto sorted = ordered();
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (exponent_re(sorted[i].first) - exponent_re(sorted[i - 1].first) < kCollisionTol) {
            std::ostringstream os;
            os << "keys (" << sorted[i - 1].first.m << "," << sorted[i - 1].first.l << ") and ("
               << sorted[i].first.m << "," << sorted[i].first.l << ") collide for p = " << p_;
            throw ResonanceError(os.str());
        }
    }
}

LatticeSeries operator+(const LatticeSeries& a, const LatticeSeries& b) {
    require_same_p(a, b);
    LatticeSeries r(a.p(), std::min(a.limit(), b.limit()));
    r.add_shifted(a, {0, 0}, 1.0);
    r.add_shifted(b, {0, 0}, 1.0);
    r.finalize();
    return r;
}

LatticeSeries operator-(const LatticeSeries& a, const LatticeSeries& b) { return a + (-1.0) * b; }

LatticeSeries operator*(cplx s, const LatticeSeries& a) {
    LatticeSeries r(a.p(), a.limit());
    r.add_shifted(a, {0, 0}, s);
    r.finalize();
    return r;
}

LatticeSeries series_product(const LatticeSeries& a, const LatticeSeries& b, double limit) {
    require_same_p(a, b);
    LatticeSeries r(a.p(), limit);
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) r.add(ka + kb, ca * cb);
    r.finalize();
    return r;
}

LatticeSeries series_product(const LatticeSeries& a, const LatticeSeries& b) {
    return series_product(a, b, std::min(a.limit(), b.limit()));
}

LatticeSeries series_inverse(const LatticeSeries& a, double budget) {
    if (a.empty()) throw ZeroLeadError("inverse of the zero series");
    const auto sorted = a.ordered();
    const auto [k0, c0] = sorted.front();
    if (std::abs(c0) < kDropTol) throw ZeroLeadError("leading coefficient vanishes");
    if (sorted.size() > 1 && a.exponent_re(sorted[1].first) - a.exponent_re(k0) < kCollisionTol)
        throw ZeroLeadError("no unique leading term");
    // a = c0 x^{k0} (1 + r), r built from the remaining terms.
    const LatticeKey neg{-k0.m, -k0.l};
    LatticeSeries r(a.p(), budget);
    for (std::size_t i = 1; i < sorted.size(); ++i) r.add(sorted[i].first + neg, sorted[i].second / c0);
    const LatticeSeries neg_r = (-1.0) * r;
    LatticeSeries sum(a.p(), budget);
    sum.add({0, 0}, 1.0);
    LatticeSeries power = sum;
    for (int k = 1;; ++k) {
        if (k > 100000) throw ConvergenceError("series_inverse: Neumann series does not terminate");
        power = series_product(power, neg_r, budget);
        if (power.empty()) break;
        sum.add_shifted(power, {0, 0}, 1.0);
    }
    LatticeSeries out(a.p(), a.exponent_re(neg) + budget);
    out.add_shifted(sum, neg, 1.0 / c0);
    out.finalize();
    return out;
}

LatticeSeries series_derivative(const LatticeSeries& a) {
    LatticeSeries r(a.p(), a.limit() - 1.0);
    for (const auto& [k, c] : a.terms()) r.add({k.m - 1, k.l}, a.exponent(k) * c);
    r.finalize();
    return r;
}

cplx series_eval(const LatticeSeries& a, cplx x) {
    if (x == 0.0) throw DomainError("series_eval at x = 0");
    cplx total = 0.0;
    for (const auto& [k, c] : a.ordered()) total += c * principal_pow(x, a.exponent(k));
    return total;
}

namespace {

// With magnitude set, every coefficient, exponent factor and parameter is
// replaced by its modulus and all signs by +, giving the scale against
// which residual cancellation is measured.
LatticeSeries residual_series(const LatticeSeries& u, const PIIIParams& p, double limit, bool magnitude) {
    const cplx base = u.p();
    const LatticeKey x_key{1, 0};
    auto derive = [&](const LatticeSeries& a) {
        if (!magnitude) return series_derivative(a);
        LatticeSeries r(a.p(), a.limit() - 1.0);
        for (const auto& [k, c] : a.terms()) r.add({k.m - 1, k.l}, std::abs(a.exponent(k)) * std::abs(c));
        return r;
    };
    LatticeSeries v(base, u.limit());
    for (const auto& [k, c] : u.terms()) v.add(k, magnitude ? cplx(std::abs(c)) : c);
    const double sg = magnitude ? 1.0 : -1.0;
    const cplx alpha = magnitude ? cplx(std::abs(p.alpha)) : p.alpha;
    const cplx beta = magnitude ? cplx(std::abs(p.beta)) : p.beta;
    const LatticeSeries du = derive(v);
    const LatticeSeries d2u = derive(du);
    const LatticeSeries u2 = series_product(v, v, limit + 3.0);
    LatticeSeries g(base, limit);
    g.add_shifted(series_product(v, d2u, limit + 1.0), x_key, 1.0);
    g.add_shifted(series_product(du, du, limit + 1.0), x_key, sg);
    g.add_shifted(series_product(v, du, limit), {0, 0}, 1.0);
    g.add_shifted(series_product(u2, v, limit), {0, 0}, sg * alpha);
    g.add_shifted(v, {0, 0}, sg * beta);
    g.add_shifted(series_product(u2, u2, limit + 1.0), x_key, sg);
    g.add(x_key, 1.0);
    if (!magnitude) g.finalize();
    return g;
}

}  // namespace

LatticeSeries matched_residual(const LatticeSeries& u, const PIIIParams& p, double limit) {
    return residual_series(u, p, limit, false);
}

cplx matched_residual_at(const LatticeSeries& u, const PIIIParams& p, cplx x) {
    const LatticeSeries du = series_derivative(u);
    const LatticeSeries d2u = series_derivative(du);
    const cplx v = series_eval(u, x), dv = series_eval(du, x), d2v = series_eval(d2u, x);
    return x * v * d2v - x * dv * dv + v * dv - p.alpha * v * v * v - p.beta * v - x * v * v * v * v + x;
}

namespace {

// Running state of the order-by-order solve. Adding delta = c x^s updates
// u, its derivatives, u^2, u^3 and G with monomial shifts only.
class IncrementalSolver {
public:
    IncrementalSolver(cplx p, double u_limit, double g_limit, const PIIIParams& params)
        : params_(params), u_(p, u_limit), du_(p, u_limit), d2u_(p, u_limit), u2_(p, u_limit),
          u3_(p, u_limit), g_(p, g_limit) {
        g_.add({1, 0}, 1.0);
    }

    void add_term(LatticeKey k, cplx c) {
        const cplx s = u_.exponent(k);
        const LatticeKey k1{k.m - 1, k.l}, k2{k.m - 2, k.l};
        const cplx d1 = c * s, d2 = c * s * (s - 1.0);
        const int m = k.m, l = k.l;
        const cplx a = params_.alpha, b = params_.beta;
        // Derivative group. The delta-delta part x d d'' - x d'^2 + d d' is
        // identically zero and skipped.
        g_.add_shifted(u_, {k2.m + 1, k2.l}, d2);
        g_.add_shifted(d2u_, {m + 1, l}, c);
        g_.add_shifted(du_, {k1.m + 1, k1.l}, -2.0 * d1);
        g_.add_shifted(u_, k1, d1);
        g_.add_shifted(du_, k, c);
        // -alpha u^3 and -beta u.
        g_.add_shifted(u2_, k, -3.0 * a * c);
        g_.add_shifted(u_, {2 * m, 2 * l}, -3.0 * a * c * c);
        g_.add({3 * m, 3 * l}, -a * c * c * c);
        g_.add(k, -b * c);
        // -x u^4.
        g_.add_shifted(u3_, {m + 1, l}, -4.0 * c);
        g_.add_shifted(u2_, {2 * m + 1, 2 * l}, -6.0 * c * c);
        g_.add_shifted(u_, {3 * m + 1, 3 * l}, -4.0 * c * c * c);
        g_.add({4 * m + 1, 4 * l}, -c * c * c * c);

        u3_.add_shifted(u2_, k, 3.0 * c);
        u3_.add_shifted(u_, {2 * m, 2 * l}, 3.0 * c * c);
        u3_.add({3 * m, 3 * l}, c * c * c);
        u2_.add_shifted(u_, k, 2.0 * c);
        u2_.add({2 * m, 2 * l}, c * c);
        u_.add(k, c);
        du_.add(k1, d1);
        d2u_.add(k2, d2);
    }

    LatticeSeries& g() { return g_; }
    LatticeSeries& u() { return u_; }

private:
    PIIIParams params_;
    LatticeSeries u_, du_, d2u_, u2_, u3_, g_;
};

}  // namespace

ExpansionResult expand_u_detailed(const SolutionParams& params, double budget) {
    if (!(budget >= 0.0) || !std::isfinite(budget)) throw DomainError("expansion budget must be finite and >= 0");
    const Regime reg = u_regime(params);
    const PIIIParams pp = params.piii();
    const cplx p = reg.exponent;
    const cplx a = reg.coefficient * std::exp(-p * std::log(2.0));
    const double u_limit = p.real() + budget;
    const double g_limit = u_limit + p.real() - 1.0;

    IncrementalSolver solver(p, u_limit, g_limit, pp);
    const LatticeKey lead{0, 1};
    const LatticeKey to_u{1, -1};
    solver.add_term(lead, a);

    LatticeSeries& g = solver.g();
    const cplx pc = g.p();
    const int ip = static_cast<int>(pc.real());
    std::set<LatticeKey> done{g.canonical({-1, 2})};
    ExpansionResult result{LatticeSeries(p), g_limit, 0.0, 0.0, {}};
    const double scale_base = std::abs(a) * (1.0 + std::norm(p)) + std::abs(pp.alpha) * std::norm(a) +
                              std::pow(std::abs(a), 3) + std::abs(pp.beta);
    while (true) {
        std::optional<LatticeKey> next;
        double best = 0.0;
        for (const auto& [k, c] : g.terms()) {
            if (done.count(k) || std::abs(c) < kDropTol) continue;
            const double e = g.exponent_re(k);
            if (!next || e < best) {
                next = k;
                best = e;
            }
        }
        if (!next) break;
        const LatticeKey big_k = *next;
        done.insert(big_k);
        const LatticeKey k = g.canonical(big_k + to_u);
        const cplx s = g.exponent(k);
        cplx lambda = a * (s - pc) * (s - pc);
        if (g.integer_p() && ip == -1) lambda += -3.0 * pp.alpha * a * a - 4.0 * a * a * a;
        if (g.integer_p() && ip == 1) lambda += -pp.beta;
        const cplx gk = g.coefficient(big_k);
        const double scale = scale_base * (1.0 + std::norm(s));
        if (std::abs(lambda) < 1e-12 * scale) {
            if (std::abs(gk) < 1e-10 * (1.0 + scale)) {
                result.free_keys.push_back(k);
                g.erase(big_k);
                continue;
            }
            std::ostringstream os;
            os << "resonant order " << s << " with nonzero forcing " << gk;
            throw ResonanceError(os.str());
        }
        solver.add_term(k, -gk / lambda);
        g.erase(big_k);
    }

    LatticeSeries u = solver.u();
    u.finalize();
    const LatticeSeries full = matched_residual(u, pp, g_limit);
    const LatticeSeries scale = residual_series(u, pp, g_limit, true);
    for (const auto& [k, c] : full.terms()) {
        result.max_residual_abs = std::max(result.max_residual_abs, std::abs(c));
        const double sk = std::abs(scale.coefficient(k));
        result.max_residual = std::max(result.max_residual, sk > 0.0 ? std::abs(c) / sk : std::abs(c));
    }
    result.series = std::move(u);
    return result;
}

LatticeSeries expand_u(const SolutionParams& params, double budget) {
    return expand_u_detailed(params, budget).series;
}

}  // namespace p3fox
