#ifndef BOREL_INTMATRIX_HPP
#define BOREL_INTMATRIX_HPP

// Exact integer matrices: Smith normal form with transform tracking, integer
// kernels, fraction-free determinants, and unit-minor column selection.
// Everything is deterministic — pivot choices break ties by position — so
// repeated runs produce identical output.

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "borel/coeff_ring.hpp"
#include "borel/integer.hpp"

namespace borel {

struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a; // row-major, rows*cols entries

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {
        if (r < 0 || c < 0) throw invalid_input("matrix dimensions must be nonnegative");
    }

    Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }

    std::string to_string() const {
        std::ostringstream os;
        for (int i = 0; i < rows; ++i) {
            os << (i ? "\n[" : "[");
            for (int j = 0; j < cols; ++j) os << (j ? " " : "") << at(i, j);
            os << "]";
        }
        return os.str();
    }
};

inline IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) throw invalid_input("matrix product: inner dimensions differ");
    IntMatrix z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Int& xik = x.at(i, k);
            if (xik == 0) continue;
            for (int j = 0; j < y.cols; ++j) z.at(i, j) += xik * y.at(k, j);
        }
    return z;
}

/// Determinant by fraction-free (Bareiss) elimination. Exact divisions only.
inline Int bareiss_determinant(IntMatrix m) {
    if (m.rows != m.cols) throw invalid_input("determinant: matrix not square");
    const int n = m.rows;
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        int best = -1;
        for (int i = k; i < n; ++i) {
            if (m.at(i, k) == 0) continue;
            if (best < 0 || int_abs(m.at(i, k)) > int_abs(m.at(best, k))) best = i;
        }
        if (best < 0) return 0;
        if (best != k) {
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(best, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

struct SmithDecomposition {
    IntMatrix u; // rows x rows, det ±1
    IntMatrix d; // rows x cols, diagonal, d(i,i) >= 0, each dividing the next
    IntMatrix v; // cols x cols, det ±1
    int rank = 0;
};

/// Smith normal form: returns (u, d, v) with u*m*v == d exactly, u and v
/// unimodular, diagonal entries nonnegative with d(i,i) | d(i+1,i+1), and
/// zero diagonal entries trailing. The identity u*m*v == d is re-multiplied
/// and checked before returning.
inline SmithDecomposition smith_normal_form(const IntMatrix& m) {
    SmithDecomposition s;
    s.d = m;
    s.u = IntMatrix::identity(m.rows);
    s.v = IntMatrix::identity(m.cols);
    IntMatrix& d = s.d;
    IntMatrix& u = s.u;
    IntMatrix& v = s.v;

    auto swap_rows = [&](int i1, int i2) {
        for (int j = 0; j < d.cols; ++j) std::swap(d.at(i1, j), d.at(i2, j));
        for (int j = 0; j < u.cols; ++j) std::swap(u.at(i1, j), u.at(i2, j));
    };
    auto swap_cols = [&](int j1, int j2) {
        for (int i = 0; i < d.rows; ++i) std::swap(d.at(i, j1), d.at(i, j2));
        for (int i = 0; i < v.rows; ++i) std::swap(v.at(i, j1), v.at(i, j2));
    };
    // row[dst] += q * row[src], mirrored into u
    auto row_axpy = [&](int dst, int src, const Int& q) {
        for (int j = 0; j < d.cols; ++j) d.at(dst, j) += q * d.at(src, j);
        for (int j = 0; j < u.cols; ++j) u.at(dst, j) += q * u.at(src, j);
    };
    auto col_axpy = [&](int dst, int src, const Int& q) {
        for (int i = 0; i < d.rows; ++i) d.at(i, dst) += q * d.at(i, src);
        for (int i = 0; i < v.rows; ++i) v.at(i, dst) += q * v.at(i, src);
    };

    const int bound = std::min(m.rows, m.cols);
    int t = 0;
    for (; t < bound; ++t) {
        for (;;) {
            // smallest-magnitude nonzero entry of the trailing block -> pivot
            int pi = -1, pj = -1;
            for (int i = t; i < d.rows; ++i)
                for (int j = t; j < d.cols; ++j) {
                    if (d.at(i, j) == 0) continue;
                    if (pi < 0 || int_abs(d.at(i, j)) < int_abs(d.at(pi, pj))) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) break; // trailing block vanished
            if (pi != t) swap_rows(pi, t);
            if (pj != t) swap_cols(pj, t);

            bool dirty = false;
            for (int i = t + 1; i < d.rows; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = d.at(i, t) / d.at(t, t); // truncated; remainder shrinks
                if (q != 0) row_axpy(i, t, -q);
                if (d.at(i, t) != 0) dirty = true;
            }
            for (int j = t + 1; j < d.cols; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = d.at(t, j) / d.at(t, t);
                if (q != 0) col_axpy(j, t, -q);
                if (d.at(t, j) != 0) dirty = true;
            }
            if (dirty) continue; // a smaller pivot now exists

            // pivot must divide the whole trailing block; if not, fold the
            // offending row into row t and reduce again
            int bi = -1;
            for (int i = t + 1; i < d.rows && bi < 0; ++i)
                for (int j = t + 1; j < d.cols; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        bi = i;
                        break;
                    }
            if (bi >= 0) {
                row_axpy(t, bi, Int(1));
                continue;
            }
            break;
        }
        if (d.at(t, t) == 0) break;
    }
    s.rank = 0;
    for (int i = 0; i < bound; ++i)
        if (d.at(i, i) != 0) ++s.rank;

    for (int i = 0; i < bound; ++i) {
        if (d.at(i, i) < 0) {
            for (int j = 0; j < d.cols; ++j) d.at(i, j) = -d.at(i, j);
            for (int j = 0; j < u.cols; ++j) u.at(i, j) = -u.at(i, j);
        }
    }

    if (mat_mul(mat_mul(s.u, m), s.v) != s.d)
        throw internal_error("smith_normal_form: u*m*v != d");
    for (int i = 0; i + 1 < s.rank; ++i)
        if (s.d.at(i + 1, i + 1) % s.d.at(i, i) != 0)
            throw internal_error("smith_normal_form: diagonal divisibility chain broken");
    return s;
}

struct HermiteDecomposition {
    IntMatrix u; // rows x rows, det ±1
    IntMatrix h; // row echelon, pivots positive, entries above a pivot reduced into [0, pivot)
    int rank = 0;
};

/// Row-style Hermite normal form: u*m == h exactly, u unimodular.
inline HermiteDecomposition hermite_normal_form(const IntMatrix& m) {
    HermiteDecomposition s;
    s.h = m;
    s.u = IntMatrix::identity(m.rows);
    IntMatrix& h = s.h;
    IntMatrix& u = s.u;

    auto swap_rows = [&](int i1, int i2) {
        for (int j = 0; j < h.cols; ++j) std::swap(h.at(i1, j), h.at(i2, j));
        for (int j = 0; j < u.cols; ++j) std::swap(u.at(i1, j), u.at(i2, j));
    };
    auto row_axpy = [&](int dst, int src, const Int& q) {
        for (int j = 0; j < h.cols; ++j) h.at(dst, j) += q * h.at(src, j);
        for (int j = 0; j < u.cols; ++j) u.at(dst, j) += q * u.at(src, j);
    };
    auto negate_row = [&](int i) {
        for (int j = 0; j < h.cols; ++j) h.at(i, j) = -h.at(i, j);
        for (int j = 0; j < u.cols; ++j) u.at(i, j) = -u.at(i, j);
    };

    int t = 0;
    for (int j = 0; j < h.cols && t < h.rows; ++j) {
        // gcd-reduce the column below row t until one nonzero entry remains
        for (;;) {
            int best = -1;
            for (int i = t; i < h.rows; ++i) {
                if (h.at(i, j) == 0) continue;
                if (best < 0 || int_abs(h.at(i, j)) < int_abs(h.at(best, j))) best = i;
            }
            if (best < 0) break;
            if (best != t) swap_rows(best, t);
            bool clean = true;
            for (int i = t + 1; i < h.rows; ++i) {
                if (h.at(i, j) == 0) continue;
                Int q = h.at(i, j) / h.at(t, j);
                if (q != 0) row_axpy(i, t, -q);
                if (h.at(i, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h.at(t, j) == 0) continue;
        if (h.at(t, j) < 0) negate_row(t);
        for (int i = 0; i < t; ++i) {
            // floor division puts the entry into [0, pivot)
            Int q = h.at(i, j) / h.at(t, j);
            if (h.at(i, j) % h.at(t, j) < 0) q -= 1;
            if (q != 0) row_axpy(i, t, -q);
        }
        ++t;
    }
    s.rank = t;
    if (mat_mul(s.u, m) != s.h) throw internal_error("hermite_normal_form: u*m != h");
    return s;
}

/// Basis of the right integer kernel {x : m*x == 0}, as a saturated lattice:
/// every integer point of the rational kernel is an integer combination of
/// the returned vectors. Each generator's first nonzero entry is positive.
inline std::vector<std::vector<Int>> integer_kernel(const IntMatrix& m) {
    SmithDecomposition s = smith_normal_form(m);
    std::vector<std::vector<Int>> basis;
    for (int j = s.rank; j < m.cols; ++j) {
        std::vector<Int> gen(m.cols);
        for (int i = 0; i < m.cols; ++i) gen[i] = s.v.at(i, j);
        for (const Int& e : gen) {
            if (e == 0) continue;
            if (e < 0)
                for (Int& x : gen) x = -x;
            break;
        }
        basis.push_back(std::move(gen));
    }
    return basis;
}

/// Pick m.rows columns of m whose square minor has unit determinant in the
/// given ring. Search is greedy — the column with the largest available
/// pivot magnitude is tried first — with full backtracking, so std::nullopt
/// means no subset of columns works. First success in that deterministic
/// order is returned (sorted ascending).
inline std::optional<std::vector<int>> select_unit_columns(const IntMatrix& m,
                                                           const CoeffRing& ring,
                                                           long long node_budget = 200000) {
    const int r = m.rows;
    if (r == 0) return std::vector<int>{};
    if (m.cols < r) return std::nullopt;

    std::set<std::vector<int>> expanded; // column sets already searched
    long long nodes = 0;
    std::optional<std::vector<int>> result;

    auto search = [&](auto&& self, const IntMatrix& a, const Int& prev, int sign,
                      std::vector<int>& chosen, std::vector<char>& used) -> bool {
        const int k = static_cast<int>(chosen.size());
        if (k == r) {
            Int det = sign > 0 ? prev : Int(-prev);
            if (ring.is_unit(det)) {
                std::vector<int> sorted = chosen;
                std::sort(sorted.begin(), sorted.end());
                result = std::move(sorted);
                return true;
            }
            return false;
        }
        {
            std::vector<int> key = chosen;
            std::sort(key.begin(), key.end());
            if (!expanded.insert(std::move(key)).second) return false;
        }
        if (++nodes > node_budget) throw invalid_input("column selection: search budget exceeded");

        // After k Bareiss steps, entry (k, j) of the reduced matrix is the
        // (k+1)-st leading minor that choosing column j would produce, so the
        // greedy order takes the smallest attainable |minor| first — that is
        // the direct path to a unit determinant.
        std::vector<std::pair<Int, int>> order;
        for (int j = 0; j < a.cols; ++j) {
            if (used[j]) continue;
            Int best = 0;
            for (int i = k; i < r; ++i) {
                const Int mag = int_abs(a.at(i, j));
                if (mag != 0 && (best == 0 || mag < best)) best = mag;
            }
            if (best != 0) order.emplace_back(std::move(best), j);
        }
        std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
            if (x.first != y.first) return x.first < y.first;
            return x.second < y.second;
        });

        for (const auto& [mag, j] : order) {
            IntMatrix b = a;
            int child_sign = sign;
            int pivot_row = -1;
            for (int i = k; i < r; ++i) {
                if (int_abs(b.at(i, j)) != mag) continue;
                pivot_row = i;
                break;
            }
            if (pivot_row != k) {
                for (int jj = 0; jj < b.cols; ++jj) std::swap(b.at(k, jj), b.at(pivot_row, jj));
                child_sign = -child_sign;
            }
            const Int piv = b.at(k, j);
            for (int i = k + 1; i < r; ++i) {
                const Int mult = b.at(i, j);
                for (int jj = 0; jj < b.cols; ++jj)
                    b.at(i, jj) = (b.at(i, jj) * piv - mult * b.at(k, jj)) / prev;
            }
            chosen.push_back(j);
            used[j] = 1;
            bool done = self(self, b, piv, child_sign, chosen, used);
            used[j] = 0;
            chosen.pop_back();
            if (done) return true;
        }
        return false;
    };

    std::vector<int> chosen;
    std::vector<char> used(m.cols, 0);
    search(search, m, Int(1), 1, chosen, used);
    return result;
}

} // namespace borel

#endif
