#pragma once

#include <compare>
#include <limits>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "p3fox/painleve.hpp"
#include "p3fox/special.hpp"

namespace p3fox {

// Exponent m + l p, kept symbolic.
struct LatticeKey {
    int m = 0;
    int l = 0;
    auto operator<=>(const LatticeKey&) const = default;
    LatticeKey operator+(LatticeKey o) const { return {m + o.m, l + o.l}; }
};

// Formal sum of coef * x^{m + l p}. Terms whose exponent real part exceeds
// limit() are discarded on insertion. When p is an integer the keys are
// canonicalized to (m + l p, 0) so equal exponents share one key.
class LatticeSeries {
public:
    explicit LatticeSeries(cplx p, double limit = std::numeric_limits<double>::infinity());

    static LatticeSeries monomial(cplx p, LatticeKey key, cplx coef,
                                  double limit = std::numeric_limits<double>::infinity());

    cplx p() const { return p_; }
    double limit() const { return limit_; }
    bool integer_p() const { return integer_p_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    LatticeKey canonical(LatticeKey k) const;
    cplx exponent(LatticeKey k) const { return double(k.m) + double(k.l) * p_; }
    double exponent_re(LatticeKey k) const { return double(k.m) + double(k.l) * p_.real(); }
    bool within_limit(LatticeKey k) const { return exponent_re(k) <= limit_ + 1e-12; }

    void add(LatticeKey k, cplx coef);
    void set(LatticeKey k, cplx coef);
    void erase(LatticeKey k) { terms_.erase(canonical(k)); }
    cplx coefficient(LatticeKey k) const;

    // Adds factor * x^{shift} * other, truncated at this series' limit.
    void add_shifted(const LatticeSeries& other, LatticeKey shift, cplx factor);

    const std::map<LatticeKey, cplx>& terms() const { return terms_; }
    // Terms sorted by increasing exponent real part.
    std::vector<std::pair<LatticeKey, cplx>> ordered() const;

    int m_min() const;
    // 1 if every key has m + l odd, 0 if every key has it even, empty otherwise.
    std::optional<int> parity() const;

    // Drops denormal-scale coefficients and raises ResonanceError if two
    // distinct keys have exponent real parts within 1e-12.
    void finalize();

private:
    cplx p_;
    double limit_;
    bool integer_p_;
    std::map<LatticeKey, cplx> terms_;
};

LatticeSeries operator+(const LatticeSeries& a, const LatticeSeries& b);
LatticeSeries operator-(const LatticeSeries& a, const LatticeSeries& b);
LatticeSeries operator*(cplx s, const LatticeSeries& a);

LatticeSeries series_product(const LatticeSeries& a, const LatticeSeries& b);
LatticeSeries series_product(const LatticeSeries& a, const LatticeSeries& b, double limit);
// 1/a truncated at exponent real part (lead exponent)^{-1} + budget.
LatticeSeries series_inverse(const LatticeSeries& a, double budget);
LatticeSeries series_derivative(const LatticeSeries& a);
cplx series_eval(const LatticeSeries& a, cplx x);

// x u u'' - x u'^2 + u u' - alpha u^3 - beta u - x u^4 + x, truncated at `limit`.
LatticeSeries matched_residual(const LatticeSeries& u, const PIIIParams& p, double limit);
// The same expression evaluated pointwise from the series and its derivatives.
cplx matched_residual_at(const LatticeSeries& u, const PIIIParams& p, cplx x);

struct ExpansionResult {
    LatticeSeries series;
    double g_limit = 0.0;        // residual orders checked, in exponent real part
    // Full recompute of G up to g_limit: max |G_K| relative to the summed
    // moduli of the contributions at K, and the plain max |G_K|.
    double max_residual = 0.0;
    double max_residual_abs = 0.0;
    std::vector<LatticeKey> free_keys;  // resonant orders left at zero
};

ExpansionResult expand_u_detailed(const SolutionParams& params, double budget = 12.0);
LatticeSeries expand_u(const SolutionParams& params, double budget = 12.0);

}  // namespace p3fox
