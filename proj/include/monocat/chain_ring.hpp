#pragma once

// Commutative chain rings Z/(p^n) and F_p[x]/(x^n).
//
// An element is stored as a single integer whose base-p digits are its
// coordinates in powers of the uniformizer (p or x). Both kinds therefore
// share valuation, truncation mod pi^k and division by pi^e; they differ only
// in whether addition and multiplication carry between digits.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace monocat {

enum class Arith { integer, polynomial };

class ChainRing;
using RingPtr = std::shared_ptr<const ChainRing>;

class ChainRing {
public:
    using value_type = std::uint32_t;

    /// Throws InputError when p is not prime, n < 1 or p^n is too large.
    static RingPtr make(Arith arith, std::uint32_t p, int n);

    Arith arith() const { return arith_; }
    std::uint32_t p() const { return p_; }
    int n() const { return n_; }
    /// Cardinality p^n.
    std::uint32_t size() const { return q_; }
    /// p^k for 0 <= k <= n.
    std::uint32_t p_power(int k) const { return powers_[static_cast<std::size_t>(k)]; }

    /// Rings are interchangeable iff they have the same (arith, p, n); for
    /// n = 1 both kinds are the field F_p and compare equal.
    bool same_as(const ChainRing& other) const;
    std::string name() const;

    value_type zero() const { return 0; }
    value_type one() const { return q_ == 1 ? 0 : 1; }

    value_type add(value_type a, value_type b) const;
    value_type sub(value_type a, value_type b) const { return add(a, neg(b)); }
    value_type neg(value_type a) const;
    value_type mul(value_type a, value_type b) const;
    bool is_unit(value_type a) const { return a % p_ != 0; }
    /// Throws InputError when a is not a unit.
    value_type inverse(value_type a) const;

    /// Index of the first nonzero digit; n for zero.
    int valuation(value_type a) const;
    /// pi^k as an element (zero when k >= n).
    value_type pi_power(int k) const;
    /// a * pi^e.
    value_type shift_up(value_type a, int e) const;
    /// The canonical b with b * pi^e = a, assuming valuation(a) >= e.
    value_type shift_down(value_type a, int e) const { return e >= n_ ? 0 : a / powers_[static_cast<std::size_t>(e)]; }
    /// a mod pi^k (zeroes the digits at positions >= k).
    value_type truncate(value_type a, int k) const {
        return k >= n_ ? a : (k <= 0 ? 0 : a % powers_[static_cast<std::size_t>(k)]);
    }
    /// Image of the integer k under Z -> R.
    value_type from_int(long long k) const;

    std::vector<int> digits(value_type a) const;
    /// Missing trailing digits are zero; throws InputError on out-of-range digits.
    value_type from_digits(const std::vector<int>& digits) const;

private:
    ChainRing(Arith arith, std::uint32_t p, int n);
    value_type poly_mul(value_type a, value_type b) const;
    value_type poly_add(value_type a, value_type b) const;

    Arith arith_;
    std::uint32_t p_;
    int n_;
    std::uint32_t q_;
    std::vector<std::uint32_t> powers_;
    std::vector<std::uint16_t> mul_table_;  // only for small polynomial rings
    std::vector<std::uint16_t> add_table_;
};

/// A ring element bundled with its ring; convenient at API boundaries.
class ChainRingElem {
public:
    ChainRingElem(RingPtr ring, ChainRing::value_type value);
    static ChainRingElem from_digits(RingPtr ring, const std::vector<int>& digits);

    const RingPtr& ring() const { return ring_; }
    ChainRing::value_type value() const { return value_; }
    std::vector<int> digits() const { return ring_->digits(value_); }
    int valuation() const { return ring_->valuation(value_); }
    bool is_unit() const { return ring_->is_unit(value_); }
    ChainRingElem inverse() const;

    friend ChainRingElem operator+(const ChainRingElem& a, const ChainRingElem& b);
    friend ChainRingElem operator-(const ChainRingElem& a, const ChainRingElem& b);
    friend ChainRingElem operator*(const ChainRingElem& a, const ChainRingElem& b);
    friend bool operator==(const ChainRingElem& a, const ChainRingElem& b);

private:
    RingPtr ring_;
    ChainRing::value_type value_;
};

}  // namespace monocat
