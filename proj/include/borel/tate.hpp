#ifndef BOREL_TATE_HPP
#define BOREL_TATE_HPP

// Formal sums of Tate objects Λ(j)[2j], recorded as multiplicity series in
// the twist j. Infinite pro-objects (classifying spaces) are carried as
// truncated series: `truncation` is the bound below which coefficients are
// unspecified, and every operation propagates the weakest valid bound, so
// no computed coefficient is ever silently wrong.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "borel/weyl.hpp"

namespace borel {

class TateSeries {
  public:
    TateSeries() = default;

    static TateSeries zero() { return TateSeries(); }

    /// The unit series Λ(0)[0].
    static TateSeries unit() {
        TateSeries s;
        s.coeffs_[0] = 1;
        return s;
    }

    /// An exact (fully known) series from twist → multiplicity.
    static TateSeries exact(std::map<int, long long> coeffs) {
        TateSeries s;
        s.coeffs_ = std::move(coeffs);
        s.prune();
        return s;
    }

    /// A truncated series: coefficients below `truncation` are unspecified
    /// and get dropped from storage.
    static TateSeries truncated(std::map<int, long long> coeffs, int truncation) {
        TateSeries s;
        s.coeffs_ = std::move(coeffs);
        s.trunc_ = truncation;
        s.prune();
        return s;
    }

    bool is_exact() const { return !trunc_.has_value(); }
    std::optional<int> truncation() const { return trunc_; }

    /// Largest twist that can carry a nonzero multiplicity; everything above
    /// is provably zero.
    int upper_support() const { return coeffs_.empty() ? upper_hint_ : coeffs_.rbegin()->first; }

    const std::map<int, long long>& coefficients() const { return coeffs_; }

    /// Multiplicity of Λ(j)[2j]. Asking below the truncation is an error:
    /// the series genuinely does not know that coefficient.
    long long coefficient(int j) const {
        if (trunc_ && j < *trunc_)
            throw invalid_input("TateSeries: coefficient at twist " + std::to_string(j) +
                                " is below the truncation " + std::to_string(*trunc_));
        auto it = coeffs_.find(j);
        return it == coeffs_.end() ? 0 : it->second;
    }

    friend bool operator==(const TateSeries& a, const TateSeries& b) {
        return a.coeffs_ == b.coeffs_ && a.trunc_ == b.trunc_;
    }

  private:
    void prune() {
        for (auto it = coeffs_.begin(); it != coeffs_.end();) {
            if (it->second < 0)
                throw invalid_input("TateSeries: negative multiplicity at twist " +
                                    std::to_string(it->first));
            const bool drop = it->second == 0 || (trunc_ && it->first < *trunc_);
            it = drop ? coeffs_.erase(it) : std::next(it);
        }
    }

    std::map<int, long long> coeffs_;
    std::optional<int> trunc_;
    int upper_hint_ = 0; // valid "zero above" bound when no coefficient is stored

    friend TateSeries tate_tensor(const TateSeries&, const TateSeries&);
    friend TateSeries tate_sum(const TateSeries&, const TateSeries&);
    friend TateSeries tate_shift(const TateSeries&, int);
    friend TateSeries classifying_group_motive(const WeylGroup&, int);
};

/// M^c(X × Y): convolution. The result is valid down to
/// max(trunc_a + upper_b, trunc_b + upper_a) — the twist below which an
/// unknown coefficient of one factor could have contributed.
inline TateSeries tate_tensor(const TateSeries& a, const TateSeries& b) {
    TateSeries out;
    std::optional<int> trunc;
    if (a.trunc_) trunc = *a.trunc_ + b.upper_support();
    if (b.trunc_) {
        const int t = *b.trunc_ + a.upper_support();
        trunc = trunc ? std::max(*trunc, t) : t;
    }
    out.trunc_ = trunc;
    std::map<int, __int128> acc;
    for (const auto& [ja, ma] : a.coeffs_)
        for (const auto& [jb, mb] : b.coeffs_) {
            const int j = ja + jb;
            if (trunc && j < *trunc) continue;
            acc[j] += static_cast<__int128>(ma) * mb;
        }
    for (const auto& [j, m] : acc) {
        if (m > INT64_MAX) throw invalid_input("tate_tensor: multiplicity overflow at twist " + std::to_string(j));
        out.coeffs_[j] = static_cast<long long>(m);
    }
    out.upper_hint_ = a.upper_support() + b.upper_support();
    out.prune();
    return out;
}

/// Localization additivity for even pure-Tate strata: pointwise sum.
inline TateSeries tate_sum(const TateSeries& a, const TateSeries& b) {
    TateSeries out;
    if (a.trunc_ || b.trunc_) {
        int t = INT32_MIN;
        if (a.trunc_) t = std::max(t, *a.trunc_);
        if (b.trunc_) t = std::max(t, *b.trunc_);
        out.trunc_ = t;
    }
    out.coeffs_ = a.coeffs_;
    for (const auto& [j, m] : b.coeffs_) out.coeffs_[j] += m;
    out.upper_hint_ = std::max(a.upper_support(), b.upper_support());
    out.prune();
    return out;
}

/// Twist the whole series by (c)[2c].
inline TateSeries tate_shift(const TateSeries& a, int c) {
    TateSeries out;
    for (const auto& [j, m] : a.coeffs_) out.coeffs_[j + c] = m;
    if (a.trunc_) out.trunc_ = *a.trunc_ + c;
    out.upper_hint_ = a.upper_support() + c;
    return out;
}

/// Truncation-aware equality: coefficients agree everywhere both sides are
/// specified.
inline bool tate_equal(const TateSeries& a, const TateSeries& b) {
    std::optional<int> lo;
    if (a.truncation()) lo = *a.truncation();
    if (b.truncation()) lo = lo ? std::max(*lo, *b.truncation()) : *b.truncation();
    if (!lo) return a.coefficients() == b.coefficients();
    const int hi = std::max(a.upper_support(), b.upper_support());
    for (int j = *lo; j <= hi; ++j)
        if (a.coefficient(j) != b.coefficient(j)) return false;
    return true;
}

/// M^c(G/B) = ⊕_w Λ(ℓ(w))[2ℓ(w)]: the Poincaré polynomial as an exact series.
inline TateSeries flag_motive(const WeylGroup& wg) {
    std::map<int, long long> c;
    for (const WeylElement& w : wg.elements()) c[w.length] += 1;
    return TateSeries::exact(std::move(c));
}

inline TateSeries flag_motive(const RootDatum& rd) { return flag_motive(WeylGroup(rd)); }

/// M^c(BT) for a rank-r torus, down to twist `truncation`: the coefficient
/// at −k is the number of compositions of k into r positive parts,
/// C(k−1, r−1).
inline TateSeries classifying_torus_motive(int rank, int truncation) {
    if (rank < 1) throw invalid_input("classifying_torus_motive: rank must be positive");
    if (truncation > -rank)
        throw invalid_input("classifying_torus_motive: truncation must be <= -rank");
    std::map<int, long long> c;
    for (int k = rank; k <= -truncation; ++k) {
        // C(k-1, rank-1); each partial product is itself a binomial, so the
        // division is exact at every step
        __int128 binom = 1;
        for (int t = 1; t <= rank - 1; ++t) binom = binom * (k - rank + t) / t;
        if (binom > INT64_MAX)
            throw invalid_input("classifying_torus_motive: multiplicity overflow at twist " + std::to_string(-k));
        c[-k] = static_cast<long long>(binom);
    }
    return TateSeries::truncated(std::move(c), truncation);
}

/// M^c(BG) as the unique series X with X ⊗ flag = BT (full torus rank).
/// Derived by an ascending recursion in u = q^{−1}: palindromy of the flag
/// series W turns X(q)·W(q) = T(q) into X(u)·W(u) = T(u)·u^d with W(0) = 1.
/// Any negative coefficient means the division fails — that is reported as
/// a rejection, never patched.
inline TateSeries classifying_group_motive(const WeylGroup& wg, int truncation) {
    if (truncation > 0)
        throw invalid_input("classifying_group_motive: truncation must be <= 0 (the series lives in nonpositive twists)");
    const int r = wg.datum().lattice_rank();
    const int d = wg.datum().dim_flag();

    std::vector<long long> W(d + 1, 0); // W[m] = #elements of length m
    for (const WeylElement& w : wg.elements()) W[w.length] += 1;

    auto torus_coeff = [&](long long k) -> __int128 {
        // coefficient of u^k in T(u): C(k−1, r−1) for k ≥ r, else 0
        if (k < r) return 0;
        __int128 binom = 1;
        for (int t = 1; t <= r - 1; ++t) binom = binom * (k - r + t) / t;
        return binom;
    };

    const int K = std::max(0, -truncation);
    std::vector<long long> x(static_cast<std::size_t>(K) + 1, 0);
    TateSeries out;
    for (int k = 0; k <= K; ++k) {
        __int128 v = torus_coeff(static_cast<long long>(k) - d);
        for (int m = 1; m <= std::min(d, k); ++m) v -= static_cast<__int128>(W[m]) * x[k - m];
        if (v < 0)
            throw invalid_input("classifying space series does not divide: negative multiplicity at twist " +
                                std::to_string(-k));
        if (v > INT64_MAX)
            throw invalid_input("classifying space series: multiplicity overflow at twist " + std::to_string(-k));
        x[k] = static_cast<long long>(v);
        if (v != 0) out.coeffs_[-k] = x[k];
    }
    out.trunc_ = truncation;
    out.upper_hint_ = -(r + d); // first possible nonzero twist
    out.prune();
    return out;
}

inline TateSeries classifying_group_motive(const RootDatum& rd, int truncation) {
    return classifying_group_motive(WeylGroup(rd), truncation);
}

/// BT = BG ⊗ flag, checked coefficientwise down to `truncation`. The BG
/// factor is computed deep enough that the product is valid on the whole
/// compared range.
inline bool verify_motive_splitting(const WeylGroup& wg, int truncation) {
    if (truncation > 0) throw invalid_input("verify_motive_splitting: truncation must be <= 0");
    const int r = wg.datum().lattice_rank();
    const int d = wg.datum().dim_flag();
    const TateSeries lhs = classifying_torus_motive(r, std::min(truncation, -r));
    const TateSeries bg = classifying_group_motive(wg, truncation - d);
    const TateSeries rhs = tate_tensor(bg, flag_motive(wg));
    for (int j = truncation; j <= 0; ++j)
        if (lhs.coefficient(j) != rhs.coefficient(j)) return false;
    return true;
}

inline bool verify_motive_splitting(const RootDatum& rd, int truncation) {
    return verify_motive_splitting(WeylGroup(rd), truncation);
}

/// A cell of dimension c contributes the base series twisted by (c)[2c].
inline TateSeries cellular_equivariant_motive(const std::vector<int>& cells, const TateSeries& base) {
    TateSeries acc = TateSeries::zero();
    for (int c : cells) {
        if (c < 0) throw invalid_input("cellular_equivariant_motive: negative cell dimension");
        acc = tate_sum(acc, tate_shift(base, c));
    }
    return acc;
}

} // namespace borel

#endif
