#ifndef BOREL_TORSION_HPP
#define BOREL_TORSION_HPP

// Torsion index: gcd over all degree-d monomials (d = #positive roots) of
// the integer ∂_{w_0}(monomial). The image of the top Chow group under the
// characteristic map is exactly that gcd times the point class, so the gcd
// IS the torsion index. A second route through divisor multiplication
// cross-validates the divided-difference engine.

#include <string>
#include <vector>

#include "borel/schubert.hpp"

namespace borel {

struct TorsionWitness {
    long long prime = 0;
    Exponents monomial;   // realizes the minimal p-valuation among all ∂_{w_0} values
    Int value;            // the ∂_{w_0} constant for that monomial
};

struct TorsionReport {
    Int torsion_index;
    long long generators_examined = 0;
    std::vector<TorsionWitness> witnesses; // one per prime factor; empty when the index is 1
};

namespace detail {

inline Int binomial_count(int n, int k) {
    // C(n, k) exactly
    Int num = 1, den = 1;
    for (int t = 1; t <= k; ++t) {
        num *= n - k + t;
        den *= t;
    }
    return num / den;
}

inline void check_monomial_budget(int nvars, int degree, long long budget) {
    const Int count = binomial_count(degree + nvars - 1, nvars - 1);
    if (count > budget)
        throw invalid_input("torsion index: " + count.str() + " degree-" + std::to_string(degree) +
                            " monomials exceed the budget of " + std::to_string(budget));
}

inline Int demazure_top_constant(const WeylGroup& wg, const std::vector<int>& w0_word,
                                 const Exponents& monomial) {
    Polynomial p = Polynomial::monomial(wg.datum().lattice_rank(), monomial);
    return demazure(wg.datum(), w0_word, p).constant_term();
}

} // namespace detail

/// Divided-difference route with per-prime witnesses.
inline TorsionReport torsion_index(const WeylGroup& wg, long long budget = 1000000) {
    const int n = wg.datum().lattice_rank();
    const int d = wg.datum().dim_flag();
    if (n > 0 && d >= 0) detail::check_monomial_budget(n, d, budget);
    const std::vector<int> w0_word = wg.reduced_word(wg.longest_id());
    const auto monomials = exponents_of_degree(n, d);

    TorsionReport report;
    report.torsion_index = 0;
    for (const Exponents& m : monomials) {
        ++report.generators_examined;
        const Int v = detail::demazure_top_constant(wg, w0_word, m);
        report.torsion_index = int_gcd(report.torsion_index, v);
        if (report.torsion_index == 1) break; // gcd can only stay 1
    }
    if (report.torsion_index == 0)
        throw internal_error("torsion index: all top divided differences vanished");

    if (report.torsion_index > 1) {
        // factor the index and record, per prime, the first monomial whose
        // value realizes the minimal valuation (= the valuation of the gcd)
        Int rest = report.torsion_index;
        std::vector<std::pair<long long, int>> primes; // (p, v_p(t))
        for (long long p = 2; Int(p) * p <= rest; ++p) {
            if (rest % p != 0) continue;
            auto [mult, reduced] = remove_prime_factor(rest, Int(p));
            primes.emplace_back(p, mult);
            rest = reduced;
        }
        if (rest > 1) {
            if (rest > INT64_MAX) throw internal_error("torsion index has an implausibly large prime factor");
            primes.emplace_back(static_cast<long long>(rest), 1);
        }
        std::vector<bool> found(primes.size(), false);
        std::size_t remaining = primes.size();
        for (const Exponents& m : monomials) {
            if (remaining == 0) break;
            const Int v = detail::demazure_top_constant(wg, w0_word, m);
            if (v == 0) continue;
            for (std::size_t k = 0; k < primes.size(); ++k) {
                if (found[k]) continue;
                const auto [mult, reduced] = remove_prime_factor(v, Int(primes[k].first));
                (void)reduced;
                if (mult == primes[k].second) {
                    report.witnesses.push_back({primes[k].first, m, v});
                    found[k] = true;
                    --remaining;
                }
            }
        }
        if (remaining != 0)
            throw internal_error("torsion index: witness sweep failed to realize a minimal valuation");
    }
    return report;
}

inline TorsionReport torsion_index(const RootDatum& rd, long long budget = 1000000) {
    return torsion_index(WeylGroup(rd), budget);
}

/// Divisor-multiplication route: gcd of the σ_{w_0} coefficients of the
/// iterated Chevalley expansion of every degree-d monomial.
inline Int torsion_index_via_chevalley(const WeylGroup& wg, long long budget = 1000000) {
    const int n = wg.datum().lattice_rank();
    const int d = wg.datum().dim_flag();
    if (n > 0 && d >= 0) detail::check_monomial_budget(n, d, budget);
    Int g = 0;
    long long examined = 0;
    for (const Exponents& m : exponents_of_degree(n, d)) {
        ++examined;
        const SchubertExpansion x = characteristic_map_via_chevalley(wg, m);
        auto it = x.coefficients.find(wg.longest_id());
        if (it != x.coefficients.end()) g = int_gcd(g, it->second);
        if (g == 1) break;
    }
    (void)examined;
    if (g == 0) throw internal_error("torsion index (divisor route): all top coefficients vanished");
    return g;
}

inline Int torsion_index_via_chevalley(const RootDatum& rd, long long budget = 1000000) {
    return torsion_index_via_chevalley(WeylGroup(rd), budget);
}

} // namespace borel

#endif
