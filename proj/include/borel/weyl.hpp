#ifndef BOREL_WEYL_HPP
#define BOREL_WEYL_HPP

// Weyl group enumeration and combinatorics. Elements are integer matrices
// acting on the character lattice; equality is matrix equality, lengths are
// inversion counts, and the enumeration order is (length, then lexicographic
// on the row-major entries) — every downstream index is stable.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "borel/errors.hpp"
#include "borel/integer.hpp"
#include "borel/root_datum.hpp"

namespace borel {

struct WeylElement {
    int n = 0;                // lattice rank
    std::vector<Coord> m;     // row-major n×n matrix on X*(T)
    int length = 0;

    Weight apply(const Weight& v) const {
        if (static_cast<int>(v.size()) != n) throw invalid_input("weyl element: dimension mismatch");
        Weight out(n, 0);
        for (int i = 0; i < n; ++i) {
            __int128 acc = 0;
            for (int k = 0; k < n; ++k) acc += static_cast<__int128>(m[i * n + k]) * v[k];
            if (acc > INT64_MAX || acc < INT64_MIN) throw invalid_input("weyl element: coordinate overflow");
            out[i] = static_cast<Coord>(acc);
        }
        return out;
    }

    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.n == b.n && a.m == b.m;
    }
};

inline WeylElement identity_element(int n) {
    WeylElement e;
    e.n = n;
    e.m.assign(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) e.m[i * n + i] = 1;
    e.length = 0;
    return e;
}

namespace detail {

inline std::vector<Coord> reflection_matrix(int n, const Weight& root, const Coweight& coroot) {
    // (s λ)_j = λ_j − (Σ_k coroot_k λ_k) root_j
    std::vector<Coord> m(static_cast<std::size_t>(n) * n, 0);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) m[j * n + k] = (j == k ? 1 : 0) - root[j] * coroot[k];
    return m;
}

inline std::vector<Coord> matrix_product(int n, const std::vector<Coord>& a, const std::vector<Coord>& b) {
    std::vector<Coord> c(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            __int128 acc = 0;
            for (int k = 0; k < n; ++k) acc += static_cast<__int128>(a[i * n + k]) * b[k * n + j];
            if (acc > INT64_MAX || acc < INT64_MIN) throw invalid_input("weyl composition: entry overflow");
            c[i * n + j] = static_cast<Coord>(acc);
        }
    return c;
}

/// Number of positive roots sent negative. Also verifies the matrix permutes
/// the signed root set.
inline int inversion_count(const RootDatum& rd, const std::vector<Coord>& m,
                           const std::map<Weight, int>& posroot_index) {
    const int n = rd.lattice_rank();
    int inversions = 0;
    for (const PositiveRoot& beta : rd.positive_roots()) {
        Weight img(n, 0);
        for (int i = 0; i < n; ++i) {
            Coord acc = 0;
            for (int k = 0; k < n; ++k) acc += m[i * n + k] * beta.root[k];
            img[i] = acc;
        }
        if (posroot_index.count(img)) continue;
        for (Coord& x : img) x = -x;
        if (!posroot_index.count(img))
            throw internal_error("weyl matrix does not permute the signed root set");
        ++inversions;
    }
    return inversions;
}

inline std::map<Weight, int> build_posroot_index(const RootDatum& rd) {
    std::map<Weight, int> idx;
    int k = 0;
    for (const PositiveRoot& p : rd.positive_roots()) idx.emplace(p.root, k++);
    return idx;
}

} // namespace detail

/// The reflection s_{α_i} as a lattice matrix (i 1-based), length 1.
inline WeylElement simple_reflection(const RootDatum& rd, int i) {
    if (i < 1 || i > rd.semisimple_rank()) throw invalid_input("simple_reflection: index out of range");
    WeylElement w;
    w.n = rd.lattice_rank();
    w.m = detail::reflection_matrix(w.n, rd.simple_roots()[i - 1], rd.simple_coroots()[i - 1]);
    w.length = 1;
    return w;
}

/// Matrix product u·w with the length recomputed as an inversion count.
inline WeylElement compose(const RootDatum& rd, const WeylElement& u, const WeylElement& w) {
    if (u.n != w.n || u.n != rd.lattice_rank())
        throw invalid_input("compose: elements belong to different root data");
    WeylElement out;
    out.n = u.n;
    out.m = detail::matrix_product(u.n, u.m, w.m);
    out.length = detail::inversion_count(rd, out.m, detail::build_posroot_index(rd));
    return out;
}

/// The full Weyl group of a root datum: element table in deterministic
/// order, reduced words, the cover relation used by divisor multiplication,
/// and the longest element. Immutable after construction.
class WeylGroup {
  public:
    explicit WeylGroup(RootDatum rd, std::size_t cap = 50000) : rd_(std::move(rd)) { build(cap); }

    const RootDatum& datum() const { return rd_; }
    int order() const { return static_cast<int>(elements_.size()); }
    const std::vector<WeylElement>& elements() const { return elements_; }
    const WeylElement& element(int id) const { return elements_.at(id); }

    int index_of(const WeylElement& w) const {
        auto it = index_.find(w.m);
        if (it == index_.end()) throw invalid_input("element does not belong to this Weyl group");
        return it->second;
    }

    int identity_id() const { return 0; }
    int simple_reflection_id(int i) const { return simple_ids_.at(i - 1); }
    int longest_id() const { return longest_id_; }
    const WeylElement& longest() const { return elements_[longest_id_]; }

    /// Reduced word (1-based simple indices), smallest left descent first:
    /// word(w) = i ++ word(s_i w) with i the least index shortening w.
    std::vector<int> reduced_word(int id) const {
        std::vector<int> word;
        while (id != 0) {
            word.push_back(left_descent_[id] + 1);
            id = left_parent_[id];
        }
        return word;
    }

    int left_descent(int id) const { return left_descent_[id] + 1; } // 1-based; id != identity
    int left_parent(int id) const { return left_parent_[id]; }

    /// For each element, the list of (id of w·s_β, index of β) over positive
    /// roots β with ℓ(w·s_β) = ℓ(w) + 1.
    const std::vector<std::vector<std::pair<int, int>>>& covers() const { return covers_; }

    /// ids grouped by length: by_length()[k] lists ids of length k, ascending.
    const std::vector<std::vector<int>>& by_length() const { return by_length_; }

  private:
    void build(std::size_t cap) {
        const int n = rd_.lattice_rank();
        const int r = rd_.semisimple_rank();
        std::vector<std::vector<Coord>> gens;
        for (int i = 1; i <= r; ++i) gens.push_back(simple_reflection(rd_, i).m);

        // breadth-first closure under right multiplication; depth = length
        std::map<std::vector<Coord>, int> depth;
        std::vector<std::vector<Coord>> frontier{identity_element(n).m};
        depth.emplace(frontier.front(), 0);
        int level = 0;
        while (!frontier.empty()) {
            std::vector<std::vector<Coord>> next;
            for (const auto& m : frontier)
                for (const auto& g : gens) {
                    auto prod = detail::matrix_product(n, m, g);
                    if (depth.emplace(prod, level + 1).second) {
                        next.push_back(std::move(prod));
                        if (depth.size() > cap)
                            throw invalid_input("Weyl enumeration exceeded the cap of " + std::to_string(cap) +
                                                " elements");
                    }
                }
            frontier = std::move(next);
            ++level;
        }

        elements_.reserve(depth.size());
        for (const auto& [m, len] : depth) {
            WeylElement w;
            w.n = n;
            w.m = m;
            w.length = len;
            elements_.push_back(std::move(w));
        }
        std::sort(elements_.begin(), elements_.end(), [](const WeylElement& a, const WeylElement& b) {
            if (a.length != b.length) return a.length < b.length;
            return a.m < b.m;
        });
        for (int id = 0; id < static_cast<int>(elements_.size()); ++id) index_.emplace(elements_[id].m, id);

        // cached BFS depths must equal inversion counts
        posroot_index_ = detail::build_posroot_index(rd_);
        for (const WeylElement& w : elements_)
            if (detail::inversion_count(rd_, w.m, posroot_index_) != w.length)
                throw internal_error("Weyl length mismatch: BFS depth != inversion count");

        by_length_.assign(rd_.dim_flag() + 1, {});
        for (int id = 0; id < order(); ++id) by_length_[elements_[id].length].push_back(id);
        if (by_length_.back().size() != 1)
            throw internal_error("longest element is not unique");
        longest_id_ = by_length_.back().front();

        simple_ids_.clear();
        for (const auto& g : gens) simple_ids_.push_back(index_.at(g));

        left_descent_.assign(order(), -1);
        left_parent_.assign(order(), -1);
        for (int id = 1; id < order(); ++id) {
            for (int i = 0; i < r; ++i) {
                auto prod = detail::matrix_product(n, gens[i], elements_[id].m);
                int other = index_.at(prod);
                if (elements_[other].length == elements_[id].length - 1) {
                    left_descent_[id] = i;
                    left_parent_[id] = other;
                    break;
                }
            }
            if (left_descent_[id] < 0) throw internal_error("element with no left descent");
        }

        covers_.assign(order(), {});
        const auto& pos = rd_.positive_roots();
        for (int b = 0; b < static_cast<int>(pos.size()); ++b) {
            auto refl = detail::reflection_matrix(n, pos[b].root, pos[b].coroot);
            for (int id = 0; id < order(); ++id) {
                auto prod = detail::matrix_product(n, elements_[id].m, refl);
                int other = index_.at(prod);
                if (elements_[other].length == elements_[id].length + 1)
                    covers_[id].emplace_back(other, b);
            }
        }
    }

    RootDatum rd_;
    std::vector<WeylElement> elements_;
    std::map<std::vector<Coord>, int> index_;
    std::map<Weight, int> posroot_index_;
    std::vector<std::vector<int>> by_length_;
    std::vector<int> simple_ids_;
    std::vector<int> left_descent_, left_parent_;
    std::vector<std::vector<std::pair<int, int>>> covers_;
    int longest_id_ = 0;
};

inline std::vector<WeylElement> enumerate_weyl(const RootDatum& rd, std::size_t cap = 50000) {
    return WeylGroup(rd, cap).elements();
}

inline WeylElement longest_element(const RootDatum& rd) { return WeylGroup(rd).longest(); }

// ---------------------------------------------------------------- LaurentPoly

struct LaurentPoly {
    std::map<int, Int> coefficients; // exponent -> coefficient, zeros pruned

    Int get(int e) const {
        auto it = coefficients.find(e);
        return it == coefficients.end() ? Int(0) : it->second;
    }
    void set(int e, Int c) {
        if (c == 0)
            coefficients.erase(e);
        else
            coefficients[e] = std::move(c);
    }
    bool is_zero() const { return coefficients.empty(); }
    int min_exponent() const { return coefficients.begin()->first; }
    int max_exponent() const { return coefficients.rbegin()->first; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.coefficients == b.coefficients;
    }
};

inline LaurentPoly laurent_add(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly c = a;
    for (const auto& [e, k] : b.coefficients) c.set(e, c.get(e) + k);
    return c;
}

inline LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly c;
    for (const auto& [ea, ka] : a.coefficients)
        for (const auto& [eb, kb] : b.coefficients) c.set(ea + eb, c.get(ea + eb) + ka * kb);
    return c;
}

/// Exact division a / b; nullopt when no exact Laurent quotient exists.
inline std::optional<LaurentPoly> laurent_divide_exact(LaurentPoly a, const LaurentPoly& b) {
    if (b.is_zero()) throw invalid_input("laurent division by zero");
    if (a.is_zero()) return LaurentPoly{};
    LaurentPoly q;
    const int eb = b.max_exponent();
    const Int lb = b.coefficients.rbegin()->second;
    // an exact quotient has no exponent below min(a) − min(b); hitting that
    // bound means we are expanding a power series, not dividing exactly
    const int floor_shift = a.min_exponent() - b.min_exponent();
    while (!a.is_zero()) {
        const int ea = a.max_exponent();
        const Int la = a.coefficients.rbegin()->second;
        const int shift = ea - eb;
        if (shift < floor_shift) return std::nullopt;
        if (la % lb != 0) return std::nullopt;
        const Int f = la / lb;
        q.set(shift, q.get(shift) + f);
        for (const auto& [e, k] : b.coefficients) a.set(e + shift, a.get(e + shift) - f * k);
        // the leading term cancels exactly, so max_exponent strictly drops
    }
    return q;
}

/// W(q) = Σ_w q^{ℓ(w)}.
inline LaurentPoly poincare_polynomial(const WeylGroup& w) {
    LaurentPoly p;
    for (const WeylElement& e : w.elements()) p.set(e.length, p.get(e.length) + 1);
    return p;
}

inline LaurentPoly poincare_polynomial(const RootDatum& rd) {
    return poincare_polynomial(WeylGroup(rd));
}

/// 1 + q + … + q^{d−1}.
inline LaurentPoly q_integer(int d) {
    LaurentPoly p;
    for (int e = 0; e < d; ++e) p.set(e, 1);
    return p;
}

/// The degrees d_1 ≤ … ≤ d_r with W(q) = Π_i (1 + q + … + q^{d_i−1}),
/// recovered by exact division, always extracting the largest factor first
/// (smallest-first can strand irreducible quotients like 1 + q²).
inline std::vector<int> fundamental_degrees(const WeylGroup& w) {
    LaurentPoly p = poincare_polynomial(w);
    const int r = w.datum().semisimple_rank();
    std::vector<int> degrees;
    for (int step = 0; step < r; ++step) {
        bool found = false;
        for (int d = p.max_exponent() + 1; d >= 2; --d) {
            auto q = laurent_divide_exact(p, q_integer(d));
            if (q) {
                degrees.push_back(d);
                p = *q;
                found = true;
                break;
            }
        }
        if (!found)
            throw invalid_input("Poincaré polynomial does not factor into q-integers");
    }
    if (!(p.coefficients.size() == 1 && p.get(0) == 1))
        throw invalid_input("Poincaré polynomial factorization left a nontrivial quotient");
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

inline std::vector<int> fundamental_degrees(const RootDatum& rd) {
    return fundamental_degrees(WeylGroup(rd));
}

} // namespace borel

#endif
