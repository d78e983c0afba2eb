#ifndef BOREL_ROOT_DATUM_HPP
#define BOREL_ROOT_DATUM_HPP

// Root data of split reductive groups: built-in classical/exceptional series
// at a chosen isogeny, or custom lattices loaded from description data. A
// RootDatum is immutable once constructed, and construction runs the full
// validation suite (Cartan shape, independence, finite reflection closure).

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "borel/errors.hpp"
#include "borel/intmatrix.hpp"

namespace borel {

using Coord = long long;
using Weight = std::vector<Coord>;   // coordinates in the character lattice X*(T)
using Coweight = std::vector<Coord>; // coordinates in the cocharacter lattice

enum class Series { A, B, C, D, G2, F4 };
enum class Isogeny { simply_connected, adjoint, gl };

inline std::string series_name(Series s) {
    switch (s) {
        case Series::A: return "A";
        case Series::B: return "B";
        case Series::C: return "C";
        case Series::D: return "D";
        case Series::G2: return "G2";
        case Series::F4: return "F4";
    }
    return "?";
}

inline std::string isogeny_name(Isogeny iso) {
    switch (iso) {
        case Isogeny::simply_connected: return "simply_connected";
        case Isogeny::adjoint: return "adjoint";
        case Isogeny::gl: return "gl";
    }
    return "?";
}

/// ⟨λ, c⟩ — the dual pairing in coordinates (both sides use dual bases, so
/// this is the dot product). Overflow-checked.
inline Coord pairing(const Weight& lambda, const Coweight& c) {
    if (lambda.size() != c.size()) throw invalid_input("pairing: dimension mismatch");
    __int128 acc = 0;
    for (std::size_t k = 0; k < lambda.size(); ++k)
        acc += static_cast<__int128>(lambda[k]) * c[k];
    if (acc > INT64_MAX || acc < INT64_MIN) throw invalid_input("pairing: value overflow");
    return static_cast<Coord>(acc);
}

struct PositiveRoot {
    Weight root;
    Coweight coroot;
    std::vector<Coord> simple_coefficients; // expansion of root over the simple roots
    int height = 0;                         // sum of those coefficients
};

class RootDatum {
  public:
    /// Built-in construction. gl is valid only for series A (GL_{rank+1});
    /// simply_connected realizes roots in the fundamental-weight basis,
    /// adjoint in the root basis.
    static RootDatum build(Series series, int rank, Isogeny iso) {
        validate_combination(series, rank, iso);
        RootDatum rd;
        std::ostringstream lbl;
        lbl << series_name(series) << (series == Series::G2 || series == Series::F4 ? "" : std::to_string(rank))
            << " " << isogeny_name(iso);
        rd.label_ = lbl.str();
        const auto cartan = cartan_matrix(series, rank);
        const int r = rank;
        if (iso == Isogeny::gl) {
            // GL_{r+1}: lattice Z^{r+1}, roots and coroots e_i - e_{i+1}
            rd.lattice_rank_ = r + 1;
            for (int i = 0; i < r; ++i) {
                Weight root(r + 1, 0);
                root[i] = 1;
                root[i + 1] = -1;
                rd.simple_roots_.push_back(root);
                rd.simple_coroots_.push_back(root);
            }
        } else if (iso == Isogeny::simply_connected) {
            // weight basis: coroots are the dual standard basis, roots read
            // off the Cartan rows
            rd.lattice_rank_ = r;
            for (int i = 0; i < r; ++i) {
                Weight root(r, 0);
                for (int j = 0; j < r; ++j) root[j] = cartan[i][j];
                Coweight coroot(r, 0);
                coroot[i] = 1;
                rd.simple_roots_.push_back(std::move(root));
                rd.simple_coroots_.push_back(std::move(coroot));
            }
        } else {
            // root basis: roots are the standard basis, coroots read off the
            // Cartan columns
            rd.lattice_rank_ = r;
            for (int i = 0; i < r; ++i) {
                Weight root(r, 0);
                root[i] = 1;
                Coweight coroot(r, 0);
                for (int j = 0; j < r; ++j) coroot[j] = cartan[j][i];
                rd.simple_roots_.push_back(std::move(root));
                rd.simple_coroots_.push_back(std::move(coroot));
            }
        }
        rd.finish_construction();
        return rd;
    }

    /// Custom data: validated from scratch. An empty root list (a pure
    /// torus) is accepted; everything downstream treats its Weyl group as
    /// trivial.
    static RootDatum from_data(int lattice_rank, std::vector<Weight> simple_roots,
                               std::vector<Coweight> simple_coroots, std::string label) {
        if (lattice_rank < 1) throw invalid_input("lattice_rank must be positive");
        if (simple_roots.size() != simple_coroots.size())
            throw invalid_input("simple_roots and simple_coroots must have equal length");
        if (static_cast<int>(simple_roots.size()) > lattice_rank)
            throw invalid_input("more simple roots than the lattice rank allows");
        RootDatum rd;
        rd.lattice_rank_ = lattice_rank;
        rd.simple_roots_ = std::move(simple_roots);
        rd.simple_coroots_ = std::move(simple_coroots);
        rd.label_ = std::move(label);
        rd.finish_construction();
        return rd;
    }

    int lattice_rank() const { return lattice_rank_; }
    int semisimple_rank() const { return static_cast<int>(simple_roots_.size()); }
    const std::vector<Weight>& simple_roots() const { return simple_roots_; }
    const std::vector<Coweight>& simple_coroots() const { return simple_coroots_; }
    const std::string& label() const { return label_; }

    /// cartan()[i][j] = ⟨α_i, α_j^∨⟩ (both indices 0-based here).
    const std::vector<std::vector<Coord>>& cartan() const { return cartan_; }

    /// All positive roots, sorted by height then lexicographically on the
    /// simple-root coefficient vector.
    const std::vector<PositiveRoot>& positive_roots() const { return positive_; }

    /// Number of positive roots = dim G/B.
    int dim_flag() const { return static_cast<int>(positive_.size()); }

  private:
    RootDatum() = default;

    static void validate_combination(Series series, int rank, Isogeny iso) {
        if (iso == Isogeny::gl && series != Series::A)
            throw invalid_input("isogeny gl is defined only for series A");
        const int max_rank = 9; // desk-scale guardrail; larger lattices via description data
        auto reject = [&](const std::string& why) {
            throw invalid_input("invalid (series, rank) pair " + series_name(series) +
                                std::to_string(rank) + ": " + why);
        };
        switch (series) {
            case Series::A:
                if (rank < 1 || rank > max_rank) reject("series A needs 1 <= rank <= 9");
                break;
            case Series::B:
                if (rank < 2 || rank > max_rank) reject("series B needs 2 <= rank <= 9");
                break;
            case Series::C:
                if (rank < 2 || rank > max_rank) reject("series C needs 2 <= rank <= 9");
                break;
            case Series::D:
                if (rank < 3 || rank > max_rank) reject("series D needs 3 <= rank <= 9");
                break;
            case Series::G2:
                if (rank != 2) reject("G2 has rank exactly 2");
                break;
            case Series::F4:
                if (rank != 4) reject("F4 has rank exactly 4");
                break;
        }
    }

    static std::vector<std::vector<Coord>> cartan_matrix(Series series, int r) {
        std::vector<std::vector<Coord>> c(r, std::vector<Coord>(r, 0));
        for (int i = 0; i < r; ++i) c[i][i] = 2;
        auto bond = [&](int i, int j, Coord cij, Coord cji) {
            c[i][j] = cij;
            c[j][i] = cji;
        };
        switch (series) {
            case Series::A:
                for (int i = 0; i + 1 < r; ++i) bond(i, i + 1, -1, -1);
                break;
            case Series::B: // last simple root short: ⟨α_{r-1}, α_r^∨⟩ = -2
                for (int i = 0; i + 2 < r; ++i) bond(i, i + 1, -1, -1);
                bond(r - 2, r - 1, -2, -1);
                break;
            case Series::C: // last simple root long: transpose of B
                for (int i = 0; i + 2 < r; ++i) bond(i, i + 1, -1, -1);
                bond(r - 2, r - 1, -1, -2);
                break;
            case Series::D:
                for (int i = 0; i + 2 < r; ++i) bond(i, i + 1, -1, -1);
                bond(r - 3, r - 1, -1, -1);
                break;
            case Series::G2:
                bond(0, 1, -1, -3);
                break;
            case Series::F4:
                bond(0, 1, -1, -1);
                bond(1, 2, -2, -1);
                bond(2, 3, -1, -1);
                break;
        }
        return c;
    }

    void finish_construction() {
        const int r = semisimple_rank();
        const int n = lattice_rank_;
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(simple_roots_[i].size()) != n)
                throw invalid_input("simple root " + std::to_string(i + 1) + " has wrong dimension");
            if (static_cast<int>(simple_coroots_[i].size()) != n)
                throw invalid_input("simple coroot " + std::to_string(i + 1) + " has wrong dimension");
        }

        cartan_.assign(r, std::vector<Coord>(r, 0));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) cartan_[i][j] = pairing(simple_roots_[i], simple_coroots_[j]);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                auto entry = [&] {
                    return "Cartan entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                           ") = " + std::to_string(cartan_[i][j]);
                };
                if (i == j && cartan_[i][j] != 2)
                    throw invalid_input(entry() + ": diagonal must be 2");
                if (i != j && cartan_[i][j] > 0)
                    throw invalid_input(entry() + ": off-diagonal must be <= 0");
                if (i != j && (cartan_[i][j] == 0) != (cartan_[j][i] == 0))
                    throw invalid_input(entry() + ": zero pattern must be symmetric");
            }

        check_independent(simple_roots_, "simple roots");
        check_independent(simple_coroots_, "simple coroots");
        close_positive_roots();
    }

    void check_independent(const std::vector<Weight>& vecs, const std::string& what) const {
        const int r = static_cast<int>(vecs.size());
        if (r == 0) return;
        IntMatrix m(r, lattice_rank_);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < lattice_rank_; ++j) m.at(i, j) = vecs[i][j];
        if (smith_normal_form(m).rank != r)
            throw invalid_input(what + " are linearly dependent");
    }

    // Reflection closure in simple-root coordinates. Each state is the pair
    // (root coefficients, coroot coefficients); s_i acts by
    //   c ↦ c − (Σ_j c_j C[j][i]) e_i,   d ↦ d − (Σ_j C[i][j] d_j) e_i.
    void close_positive_roots() {
        const int r = semisimple_rank();
        const std::size_t bound = 1000;
        std::map<std::vector<Coord>, std::vector<Coord>> seen; // c -> d
        std::vector<std::vector<Coord>> queue;
        for (int i = 0; i < r; ++i) {
            std::vector<Coord> c(r, 0), d(r, 0);
            c[i] = 1;
            d[i] = 1;
            seen.emplace(c, d);
            queue.push_back(c);
        }
        while (!queue.empty()) {
            std::vector<Coord> c = queue.back();
            queue.pop_back();
            std::vector<Coord> d = seen.at(c);
            for (int i = 0; i < r; ++i) {
                Coord pr = 0, pc = 0;
                for (int j = 0; j < r; ++j) {
                    pr += c[j] * cartan_[j][i]; // ⟨β, α_i^∨⟩
                    pc += cartan_[i][j] * d[j]; // ⟨α_i, β^∨⟩
                }
                std::vector<Coord> c2 = c, d2 = d;
                c2[i] -= pr;
                d2[i] -= pc;
                bool any_pos = false, any_neg = false;
                for (Coord x : c2) {
                    any_pos |= x > 0;
                    any_neg |= x < 0;
                }
                if (any_pos && any_neg)
                    throw invalid_input("reflection closure produced a mixed-sign vector; not a root system");
                if (!any_pos && !any_neg)
                    throw internal_error("reflection closure produced the zero vector");
                auto ins = seen.emplace(c2, d2);
                if (ins.second) {
                    queue.push_back(c2);
                    if (seen.size() > 2 * bound)
                        throw invalid_input("reflection closure exceeded the safety bound of 1000 roots");
                }
            }
        }

        positive_.clear();
        for (const auto& [c, d] : seen) {
            bool pos = true;
            for (Coord x : c) pos &= x >= 0;
            if (!pos) continue;
            // reduced: 2β must not also be a root
            std::vector<Coord> twice(c);
            for (Coord& x : twice) x *= 2;
            if (seen.count(twice))
                throw invalid_input("non-reduced root system: a root and its double both occur");
            PositiveRoot p;
            p.simple_coefficients = c;
            p.height = static_cast<int>(std::accumulate(c.begin(), c.end(), Coord(0)));
            p.root.assign(lattice_rank_, 0);
            p.coroot.assign(lattice_rank_, 0);
            for (int i = 0; i < semisimple_rank(); ++i)
                for (int k = 0; k < lattice_rank_; ++k) {
                    p.root[k] += c[i] * simple_roots_[i][k];
                    p.coroot[k] += d[i] * simple_coroots_[i][k];
                }
            if (pairing(p.root, p.coroot) != 2)
                throw internal_error("positive root with ⟨β, β^∨⟩ != 2 after closure");
            positive_.push_back(std::move(p));
        }
        std::sort(positive_.begin(), positive_.end(), [](const PositiveRoot& x, const PositiveRoot& y) {
            if (x.height != y.height) return x.height < y.height;
            return x.simple_coefficients < y.simple_coefficients;
        });
    }

    int lattice_rank_ = 0;
    std::vector<Weight> simple_roots_;
    std::vector<Coweight> simple_coroots_;
    std::string label_;
    std::vector<std::vector<Coord>> cartan_;
    std::vector<PositiveRoot> positive_;
};

inline RootDatum build_root_datum(Series series, int rank, Isogeny iso) {
    return RootDatum::build(series, rank, iso);
}

/// s_i(λ) = λ − ⟨λ, α_i^∨⟩ α_i, with i 1-based.
inline Weight reflect(const RootDatum& rd, int i, const Weight& lambda) {
    if (i < 1 || i > rd.semisimple_rank()) throw invalid_input("reflect: simple index out of range");
    const Coord k = pairing(lambda, rd.simple_coroots()[i - 1]);
    Weight out = lambda;
    for (int j = 0; j < rd.lattice_rank(); ++j) out[j] -= k * rd.simple_roots()[i - 1][j];
    return out;
}

inline const std::vector<PositiveRoot>& positive_roots(const RootDatum& rd) {
    return rd.positive_roots();
}

} // namespace borel

#endif
