#ifndef BOREL_SCHUBERT_HPP
#define BOREL_SCHUBERT_HPP

// The characteristic map Sym(X*(T)) → CH*(G/B) computed two independent
// ways: divided-difference operators along reduced words, and iterated
// divisor (Chevalley) multiplication in the Schubert basis. The two routes
// share no code below the polynomial layer, which is what makes their
// agreement a meaningful check.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "borel/polynomial.hpp"
#include "borel/weyl.hpp"

namespace borel {

/// w·f by substituting each variable with its image under w (x_k is sent to
/// the linear form of column k of the matrix).
inline Polynomial weyl_action(const WeylElement& w, const Polynomial& f) {
    if (w.n != f.nvars()) throw invalid_input("weyl_action: dimension mismatch");
    std::vector<Polynomial> images;
    images.reserve(w.n);
    for (int k = 0; k < w.n; ++k) {
        std::vector<long long> col(w.n);
        for (int j = 0; j < w.n; ++j) col[j] = w.m[j * w.n + k];
        images.push_back(Polynomial::linear_form(col));
    }
    return f.substitute(images);
}

/// ∂_i f = (f − s_i f) / α_i, exact by construction: every term of f − s_i f
/// carries a factor of the linear form α_i.
inline Polynomial divided_difference(const RootDatum& rd, int i, const Polynomial& f) {
    if (i < 1 || i > rd.semisimple_rank()) throw invalid_input("divided_difference: index out of range");
    if (f.nvars() != rd.lattice_rank()) throw invalid_input("divided_difference: dimension mismatch");
    const Polynomial numerator = f - weyl_action(simple_reflection(rd, i), f);
    if (numerator.is_zero()) return Polynomial(f.nvars());
    return numerator.exact_divide(Polynomial::linear_form(rd.simple_roots()[i - 1]));
}

/// ∂_{i_1} ∘ … ∘ ∂_{i_k} (f): the word is applied from the right end.
/// Non-reduced words yield 0.
inline Polynomial demazure(const RootDatum& rd, const std::vector<int>& word, const Polynomial& f) {
    Polynomial g = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) g = divided_difference(rd, *it, g);
    return g;
}

/// A homogeneous class in the Schubert basis: element id (within a fixed
/// WeylGroup) → coefficient, all ids of length = degree, zeros pruned.
struct SchubertExpansion {
    int degree = 0;
    std::map<int, Int> coefficients;

    void add(int id, const Int& c) {
        if (c == 0) return;
        auto it = coefficients.find(id);
        if (it == coefficients.end())
            coefficients.emplace(id, c);
        else {
            it->second += c;
            if (it->second == 0) coefficients.erase(it);
        }
    }

    friend bool operator==(const SchubertExpansion& a, const SchubertExpansion& b) {
        return a.degree == b.degree && a.coefficients == b.coefficients;
    }

    std::string to_string(const WeylGroup& w) const {
        if (coefficients.empty()) return "0";
        std::string out;
        for (const auto& [id, c] : coefficients) {
            if (!out.empty()) out += c < 0 ? " - " : " + ";
            else if (c < 0) out += "-";
            Int a = int_abs(c);
            std::string word;
            for (int i : w.reduced_word(id)) {
                if (!word.empty()) word += ".";
                word += "s" + std::to_string(i);
            }
            if (word.empty()) word = "e";
            if (a != 1) out += a.str() + "*";
            out += "S[" + word + "]";
        }
        return out;
    }
};

/// Borel characteristic map: coefficient of σ_w is the constant term of
/// ∂ applied along reduced_word(w). Computed by one dynamic program over
/// lengths: P_e = f, P_w = ∂_i(P_{s_i w}) for the least left descent i —
/// consistent with reduced_word, which peels that same descent.
inline SchubertExpansion characteristic_map(const WeylGroup& wg, const Polynomial& f) {
    if (f.nvars() != wg.datum().lattice_rank()) throw invalid_input("characteristic_map: dimension mismatch");
    if (!f.is_homogeneous()) throw invalid_input("characteristic_map: polynomial must be homogeneous");
    SchubertExpansion out;
    if (f.is_zero()) return out;
    out.degree = f.degree();
    const int d = out.degree;
    if (d > wg.datum().dim_flag()) return out; // beyond the top cell, the image vanishes
    std::map<int, Polynomial> level{{wg.identity_id(), f}};
    for (int k = 1; k <= d; ++k) {
        std::map<int, Polynomial> next;
        for (int id : wg.by_length()[k])
            next.emplace(id, divided_difference(wg.datum(), wg.left_descent(id),
                                                level.at(wg.left_parent(id))));
        level = std::move(next);
    }
    for (const auto& [id, p] : level) out.add(id, p.constant_term());
    return out;
}

/// Divisor multiplication: c(λ)·σ_w = Σ ⟨λ, β^∨⟩ σ_{w·s_β} over positive
/// roots β with ℓ(w·s_β) = ℓ(w) + 1.
inline SchubertExpansion chevalley_multiply(const WeylGroup& wg, const Weight& lambda,
                                            const SchubertExpansion& x) {
    if (static_cast<int>(lambda.size()) != wg.datum().lattice_rank())
        throw invalid_input("chevalley_multiply: dimension mismatch");
    SchubertExpansion out;
    out.degree = x.degree + 1;
    const auto& pos = wg.datum().positive_roots();
    for (const auto& [id, c] : x.coefficients)
        for (const auto& [up, b] : wg.covers()[id]) {
            const Coord p = pairing(lambda, pos[b].coroot);
            if (p != 0) out.add(up, c * Int(p));
        }
    return out;
}

/// Oracle route for monomials: expand Π x_k^{a_k} as repeated divisor
/// multiplication starting from σ_e. Must agree with characteristic_map.
inline SchubertExpansion characteristic_map_via_chevalley(const WeylGroup& wg, const Exponents& monomial) {
    if (static_cast<int>(monomial.size()) != wg.datum().lattice_rank())
        throw invalid_input("characteristic_map_via_chevalley: dimension mismatch");
    SchubertExpansion acc;
    acc.degree = 0;
    acc.add(wg.identity_id(), Int(1));
    for (std::size_t k = 0; k < monomial.size(); ++k) {
        if (monomial[k] < 0) throw invalid_input("characteristic_map_via_chevalley: negative exponent");
        Weight basis_weight(monomial.size(), 0);
        basis_weight[k] = 1;
        for (int t = 0; t < monomial[k]; ++t) acc = chevalley_multiply(wg, basis_weight, acc);
    }
    return acc;
}

} // namespace borel

#endif
