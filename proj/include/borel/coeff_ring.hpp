#ifndef BOREL_COEFF_RING_HPP
#define BOREL_COEFF_RING_HPP

// Coefficient rings for basis selection and splitting verification. Two
// shapes: the integers with a chosen finite set of primes inverted (the empty
// set gives Z itself), or a prime field F_p. Only unit tests on integers are
// ever needed, so the ring is represented by its unit predicate plus labels.

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "borel/integer.hpp"

namespace borel {

class CoeffRing {
  public:
    enum class Kind { localized_integers, prime_field };

    /// Z: nothing inverted.
    static CoeffRing integers() { return CoeffRing(Kind::localized_integers, {}); }

    /// Z with each listed prime made invertible. Duplicates collapse;
    /// non-primes are rejected.
    static CoeffRing with_inverted_primes(std::vector<long long> primes) {
        std::sort(primes.begin(), primes.end());
        primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
        for (long long p : primes) {
            if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
                throw invalid_input("coefficient ring: " + std::to_string(p) + " is not prime");
        }
        return CoeffRing(Kind::localized_integers, std::move(primes));
    }

    /// F_p.
    static CoeffRing prime_field(long long p) {
        if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
            throw invalid_input("coefficient ring: " + std::to_string(p) + " is not prime");
        return CoeffRing(Kind::prime_field, {p});
    }

    Kind kind() const { return kind_; }

    /// Inverted primes (localized kind) or the single field characteristic.
    const std::vector<long long>& primes() const { return primes_; }

    long long characteristic() const {
        return kind_ == Kind::prime_field ? primes_.front() : 0;
    }

    /// Is the integer x a unit of the ring?
    /// Localized: |x| must reduce to 1 after stripping inverted primes.
    /// Prime field: x must be nonzero mod p.
    bool is_unit(const Int& x) const {
        if (x == 0) return false;
        if (kind_ == Kind::prime_field) return x % Int(primes_.front()) != 0;
        return coprime_part(x, primes_) == 1;
    }

    std::string describe() const {
        if (kind_ == Kind::prime_field) return "F_" + std::to_string(primes_.front());
        if (primes_.empty()) return "Z";
        std::ostringstream os;
        os << "Z[";
        for (std::size_t i = 0; i < primes_.size(); ++i)
            os << (i ? "," : "") << "1/" << primes_[i];
        os << "]";
        return os.str();
    }

    friend bool operator==(const CoeffRing& a, const CoeffRing& b) {
        return a.kind_ == b.kind_ && a.primes_ == b.primes_;
    }

  private:
    CoeffRing(Kind k, std::vector<long long> primes) : kind_(k), primes_(std::move(primes)) {}

    Kind kind_;
    std::vector<long long> primes_;
};

inline bool is_unit(const Int& x, const CoeffRing& ring) { return ring.is_unit(x); }

} // namespace borel

#endif
