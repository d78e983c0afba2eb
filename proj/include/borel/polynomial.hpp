#ifndef BOREL_POLYNOMIAL_HPP
#define BOREL_POLYNOMIAL_HPP

// Sparse multivariate polynomials with exact integer coefficients, ordered
// graded-lexicographically (total degree first, then x1 strongest). This is
// the ambient ring Sym(X*(T)): variable x_k is the k-th lattice basis
// character, and a weight embeds as its degree-1 form.

#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "borel/errors.hpp"
#include "borel/integer.hpp"

namespace borel {

using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

/// Strict weak order: a < b in graded lex (degree first, then x1 strongest).
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        const int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        for (std::size_t k = 0; k < a.size() && k < b.size(); ++k)
            if (a[k] != b[k]) return a[k] < b[k];
        return a.size() < b.size();
    }
};

/// All exponent vectors of the given total degree, graded-lex descending
/// ([k,0,…,0] first). Deterministic layout for every matrix downstream.
inline std::vector<Exponents> exponents_of_degree(int nvars, int degree) {
    if (nvars == 0) return degree == 0 ? std::vector<Exponents>{{}} : std::vector<Exponents>{};
    std::vector<Exponents> out;
    Exponents cur(nvars, 0);
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == nvars - 1) {
            cur[var] = remaining;
            out.push_back(cur);
            return;
        }
        for (int a = remaining; a >= 0; --a) {
            cur[var] = a;
            self(self, var + 1, remaining - a);
        }
    };
    rec(rec, 0, degree);
    return out;
}

class Polynomial {
  public:
    explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

    static Polynomial constant(int nvars, Int c) {
        Polynomial p(nvars);
        p.add_term(Exponents(nvars, 0), std::move(c));
        return p;
    }

    static Polynomial monomial(int nvars, const Exponents& e, Int c = Int(1)) {
        if (static_cast<int>(e.size()) != nvars) throw invalid_input("monomial: exponent dimension mismatch");
        for (int x : e)
            if (x < 0) throw invalid_input("monomial: negative exponent");
        Polynomial p(nvars);
        p.add_term(e, std::move(c));
        return p;
    }

    /// A degree-1 form from lattice coordinates: Σ λ_k x_k.
    static Polynomial linear_form(const std::vector<long long>& lambda) {
        Polynomial p(static_cast<int>(lambda.size()));
        for (std::size_t k = 0; k < lambda.size(); ++k) {
            if (lambda[k] == 0) continue;
            Exponents e(lambda.size(), 0);
            e[k] = 1;
            p.add_term(e, Int(lambda[k]));
        }
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Int, GradedLexLess>& terms() const { return terms_; }

    Int coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Int(0) : it->second;
    }

    Int constant_term() const { return coefficient(Exponents(nvars_, 0)); }

    /// Max total degree of a term; −1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first); }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const int d = total_degree(terms_.begin()->first);
        for (const auto& [e, c] : terms_)
            if (total_degree(e) != d) return false;
        return true;
    }

    void add_term(const Exponents& e, Int c) {
        if (static_cast<int>(e.size()) != nvars_) throw invalid_input("polynomial term dimension mismatch");
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0) terms_.emplace(e, std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        check_same(a, b);
        Polynomial c = a;
        for (const auto& [e, k] : b.terms_) c.add_term(e, k);
        return c;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        check_same(a, b);
        Polynomial c = a;
        for (const auto& [e, k] : b.terms_) c.add_term(e, Int(-k));
        return c;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check_same(a, b);
        Polynomial c(a.nvars_);
        for (const auto& [ea, ka] : a.terms_)
            for (const auto& [eb, kb] : b.terms_) {
                Exponents e(ea);
                for (int k = 0; k < a.nvars_; ++k) e[k] += eb[k];
                c.add_term(e, ka * kb);
            }
        return c;
    }

    friend Polynomial operator*(const Int& k, const Polynomial& a) {
        Polynomial c(a.nvars_);
        if (k == 0) return c;
        for (const auto& [e, ka] : a.terms_) c.add_term(e, k * ka);
        return c;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    /// Substitute x_k ↦ images[k] simultaneously (ring homomorphism).
    Polynomial substitute(const std::vector<Polynomial>& images) const {
        if (static_cast<int>(images.size()) != nvars_)
            throw invalid_input("substitute: wrong number of images");
        const int out_vars = images.empty() ? nvars_ : images.front().nvars();
        Polynomial result(out_vars);
        // modest power cache: substitution is the hot path of the W-action
        std::map<std::pair<int, int>, Polynomial> powers;
        auto power = [&](int var, int e) -> const Polynomial& {
            auto key = std::make_pair(var, e);
            auto it = powers.find(key);
            if (it != powers.end()) return it->second;
            Polynomial p = e == 0 ? Polynomial::constant(out_vars, Int(1)) : images[var];
            for (int t = 1; t < e; ++t) p = p * images[var];
            return powers.emplace(key, std::move(p)).first->second;
        };
        for (const auto& [e, c] : terms_) {
            Polynomial term = Polynomial::constant(out_vars, c);
            for (int k = 0; k < nvars_; ++k)
                if (e[k] > 0) term = term * power(k, e[k]);
            result = result + term;
        }
        return result;
    }

    /// Exact quotient this / divisor; throws internal_error when any step
    /// leaves a remainder. Used only where exactness is an invariant.
    Polynomial exact_divide(const Polynomial& divisor) const {
        check_same(*this, divisor);
        if (divisor.is_zero()) throw invalid_input("polynomial division by zero");
        Polynomial rem = *this;
        Polynomial quo(nvars_);
        const auto& [le, lc] = *divisor.terms_.rbegin(); // leading term (graded-lex max)
        while (!rem.is_zero()) {
            const auto& [re, rc] = *rem.terms_.rbegin();
            Exponents qe(nvars_);
            for (int k = 0; k < nvars_; ++k) {
                qe[k] = re[k] - le[k];
                if (qe[k] < 0) throw internal_error("polynomial division not exact (monomial mismatch)");
            }
            if (rc % lc != 0) throw internal_error("polynomial division not exact (coefficient mismatch)");
            const Int qc = rc / lc;
            quo.add_term(qe, qc);
            rem = rem - Polynomial::monomial(nvars_, qe, qc) * divisor;
        }
        return quo;
    }

    /// Canonical text: terms graded-lex descending, `c*x1^a1*x2` syntax.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Int a = int_abs(c);
            if (first)
                os << (c < 0 ? "-" : "");
            else
                os << (c < 0 ? " - " : " + ");
            first = false;
            std::string vars = monomial_string(e);
            if (vars.empty())
                os << a;
            else if (a == 1)
                os << vars;
            else
                os << a << "*" << vars;
        }
        return os.str();
    }

    static std::string monomial_string(const Exponents& e) {
        std::ostringstream os;
        bool any = false;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (any) os << "*";
            os << "x" << (k + 1);
            if (e[k] > 1) os << "^" << e[k];
            any = true;
        }
        return os.str();
    }

    /// Parse the CLI syntax: sums of terms `c*x1^a1*...*xn^an`, whitespace
    /// insensitive; `c*` and `^a` may be omitted.
    static Polynomial parse(const std::string& text, int nvars) {
        std::string s;
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
        if (s.empty()) throw invalid_input("empty polynomial text");
        Polynomial result(nvars);
        std::size_t i = 0;
        while (i < s.size()) {
            int sign = 1;
            while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
                if (s[i] == '-') sign = -sign;
                ++i;
            }
            if (i >= s.size()) throw invalid_input("polynomial text ends with a dangling sign");
            Int coeff = 1;
            Exponents e(nvars, 0);
            bool saw_factor = false;
            for (;;) {
                if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                    std::size_t start = i;
                    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                    coeff *= Int(s.substr(start, i - start));
                    saw_factor = true;
                } else if (i < s.size() && s[i] == 'x') {
                    ++i;
                    std::size_t start = i;
                    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                    if (start == i) throw invalid_input("variable without an index in polynomial text");
                    if (i - start > 6) throw invalid_input("variable index too large in polynomial text");
                    int var = std::stoi(s.substr(start, i - start));
                    if (var < 1 || var > nvars)
                        throw invalid_input("variable x" + std::to_string(var) + " out of range (n = " +
                                            std::to_string(nvars) + ")");
                    int exp = 1;
                    if (i < s.size() && s[i] == '^') {
                        ++i;
                        std::size_t es = i;
                        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                        if (es == i) throw invalid_input("'^' without an exponent in polynomial text");
                        if (i - es > 6) throw invalid_input("exponent too large in polynomial text");
                        exp = std::stoi(s.substr(es, i - es));
                    }
                    e[var - 1] += exp;
                    saw_factor = true;
                } else {
                    throw invalid_input("unexpected character in polynomial text at position " +
                                        std::to_string(i));
                }
                if (i < s.size() && s[i] == '*') {
                    ++i;
                    continue;
                }
                break;
            }
            if (!saw_factor) throw invalid_input("empty term in polynomial text");
            if (i < s.size() && s[i] != '+' && s[i] != '-')
                throw invalid_input("expected '+', '-', or '*' in polynomial text at position " +
                                    std::to_string(i));
            result.add_term(e, sign > 0 ? coeff : Int(-coeff));
        }
        return result;
    }

  private:
    static void check_same(const Polynomial& a, const Polynomial& b) {
        if (a.nvars_ != b.nvars_) throw invalid_input("polynomial arity mismatch");
    }

    int nvars_;
    std::map<Exponents, Int, GradedLexLess> terms_;
};

} // namespace borel

#endif
