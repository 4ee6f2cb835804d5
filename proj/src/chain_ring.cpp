#include "monocat/chain_ring.hpp"

#include "monocat/error.hpp"

#include <sstream>

namespace monocat {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

constexpr std::uint32_t max_ring_size = 1u << 20;
constexpr std::uint32_t table_limit = 256;

void require_same(const ChainRingElem& a, const ChainRingElem& b) {
    if (!a.ring()->same_as(*b.ring())) throw InputError("ring mismatch: " + a.ring()->name() + " vs " + b.ring()->name());
}

}  // namespace

RingPtr ChainRing::make(Arith arith, std::uint32_t p, int n) {
    if (!is_prime(p)) throw InputError("chain ring characteristic p=" + std::to_string(p) + " is not prime");
    if (n < 1) throw InputError("chain ring Loewy length must be >= 1");
    std::uint64_t q = 1;
    for (int i = 0; i < n; ++i) {
        q *= p;
        if (q > max_ring_size) throw InputError("chain ring p^n exceeds supported size");
    }
    return RingPtr(new ChainRing(arith, p, n));
}

ChainRing::ChainRing(Arith arith, std::uint32_t p, int n) : arith_(arith), p_(p), n_(n), q_(1) {
    powers_.push_back(1);
    for (int i = 0; i < n; ++i) {
        q_ *= p;
        powers_.push_back(q_);
    }
    if (n == 1) arith_ = Arith::integer;
    if (arith_ == Arith::polynomial && q_ <= table_limit) {
        mul_table_.resize(static_cast<std::size_t>(q_) * q_);
        add_table_.resize(static_cast<std::size_t>(q_) * q_);
        for (std::uint32_t a = 0; a < q_; ++a)
            for (std::uint32_t b = 0; b < q_; ++b) {
                mul_table_[a * q_ + b] = static_cast<std::uint16_t>(poly_mul(a, b));
                add_table_[a * q_ + b] = static_cast<std::uint16_t>(poly_add(a, b));
            }
    }
}

bool ChainRing::same_as(const ChainRing& other) const {
    return p_ == other.p_ && n_ == other.n_ && arith_ == other.arith_;
}

std::string ChainRing::name() const {
    std::ostringstream os;
    if (arith_ == Arith::integer)
        os << "Z/" << q_;
    else
        os << "F" << p_ << "[x]/x^" << n_;
    return os.str();
}

ChainRing::value_type ChainRing::poly_add(value_type a, value_type b) const {
    value_type r = 0;
    for (int i = 0; i < n_; ++i) {
        const value_type d = (a % p_ + b % p_) % p_;
        r += d * powers_[static_cast<std::size_t>(i)];
        a /= p_;
        b /= p_;
    }
    return r;
}

ChainRing::value_type ChainRing::poly_mul(value_type a, value_type b) const {
    std::vector<std::uint64_t> da(static_cast<std::size_t>(n_)), db(static_cast<std::size_t>(n_)),
        dc(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
        da[static_cast<std::size_t>(i)] = a % p_;
        db[static_cast<std::size_t>(i)] = b % p_;
        a /= p_;
        b /= p_;
    }
    for (int i = 0; i < n_; ++i)
        if (da[static_cast<std::size_t>(i)] != 0)
            for (int j = 0; i + j < n_; ++j)
                dc[static_cast<std::size_t>(i + j)] += da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)];
    value_type r = 0;
    for (int i = 0; i < n_; ++i)
        r += static_cast<value_type>(dc[static_cast<std::size_t>(i)] % p_) * powers_[static_cast<std::size_t>(i)];
    return r;
}

ChainRing::value_type ChainRing::add(value_type a, value_type b) const {
    if (arith_ == Arith::integer) {
        const value_type s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    return poly_add(a, b);
}

ChainRing::value_type ChainRing::neg(value_type a) const {
    if (a == 0) return 0;
    if (arith_ == Arith::integer) return q_ - a;
    value_type r = 0;
    for (int i = 0; i < n_; ++i) {
        const value_type d = a % p_;
        r += (d == 0 ? 0 : p_ - d) * powers_[static_cast<std::size_t>(i)];
        a /= p_;
    }
    return r;
}

ChainRing::value_type ChainRing::mul(value_type a, value_type b) const {
    if (arith_ == Arith::integer) return static_cast<value_type>((static_cast<std::uint64_t>(a) * b) % q_);
    if (!mul_table_.empty()) return mul_table_[a * q_ + b];
    return poly_mul(a, b);
}

ChainRing::value_type ChainRing::inverse(value_type a) const {
    if (!is_unit(a)) throw InputError("inverse of a non-unit in " + name());
    if (arith_ == Arith::integer) {
        long long t = 0, new_t = 1, r = q_, new_r = a;
        while (new_r != 0) {
            const long long quot = r / new_r;
            long long tmp = t - quot * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - quot * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (t < 0) t += q_;
        return static_cast<value_type>(t);
    }
    // Power series inversion digit by digit.
    std::vector<long long> da(static_cast<std::size_t>(n_)), db(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
        da[static_cast<std::size_t>(i)] = a % p_;
        a /= p_;
    }
    long long inv0 = 1;
    while ((inv0 * da[0]) % p_ != 1) ++inv0;
    db[0] = inv0;
    for (int k = 1; k < n_; ++k) {
        long long s = 0;
        for (int i = 1; i <= k; ++i) s += da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(k - i)];
        s %= p_;
        db[static_cast<std::size_t>(k)] = ((p_ - s) % p_ * inv0) % p_;
    }
    value_type r = 0;
    for (int i = 0; i < n_; ++i) r += static_cast<value_type>(db[static_cast<std::size_t>(i)]) * powers_[static_cast<std::size_t>(i)];
    return r;
}

int ChainRing::valuation(value_type a) const {
    if (a == 0) return n_;
    int v = 0;
    while (a % p_ == 0) {
        a /= p_;
        ++v;
    }
    return v;
}

ChainRing::value_type ChainRing::pi_power(int k) const { return k >= n_ ? 0 : powers_[static_cast<std::size_t>(k)]; }

ChainRing::value_type ChainRing::shift_up(value_type a, int e) const {
    if (e <= 0) return a;
    if (e >= n_) return 0;
    return static_cast<value_type>((static_cast<std::uint64_t>(a) * powers_[static_cast<std::size_t>(e)]) % q_);
}

ChainRing::value_type ChainRing::from_int(long long k) const {
    if (arith_ == Arith::integer) {
        long long r = k % static_cast<long long>(q_);
        if (r < 0) r += q_;
        return static_cast<value_type>(r);
    }
    long long r = k % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<value_type>(r);
}

std::vector<int> ChainRing::digits(value_type a) const {
    std::vector<int> d(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        d[static_cast<std::size_t>(i)] = static_cast<int>(a % p_);
        a /= p_;
    }
    return d;
}

ChainRing::value_type ChainRing::from_digits(const std::vector<int>& digits) const {
    if (digits.size() > static_cast<std::size_t>(n_)) {
        for (std::size_t i = static_cast<std::size_t>(n_); i < digits.size(); ++i)
            if (digits[i] != 0) throw InputError("digit array longer than Loewy length");
    }
    value_type r = 0;
    for (std::size_t i = 0; i < digits.size() && i < static_cast<std::size_t>(n_); ++i) {
        if (digits[i] < 0 || static_cast<std::uint32_t>(digits[i]) >= p_) throw InputError("digit out of range [0,p)");
        r += static_cast<value_type>(digits[i]) * powers_[i];
    }
    return r;
}

ChainRingElem::ChainRingElem(RingPtr ring, ChainRing::value_type value) : ring_(std::move(ring)), value_(value) {
    if (value_ >= ring_->size()) throw InputError("ring element out of range");
}

ChainRingElem ChainRingElem::from_digits(RingPtr ring, const std::vector<int>& digits) {
    const auto v = ring->from_digits(digits);
    return ChainRingElem(std::move(ring), v);
}

ChainRingElem ChainRingElem::inverse() const { return ChainRingElem(ring_, ring_->inverse(value_)); }

ChainRingElem operator+(const ChainRingElem& a, const ChainRingElem& b) {
    require_same(a, b);
    return ChainRingElem(a.ring_, a.ring_->add(a.value_, b.value_));
}

ChainRingElem operator-(const ChainRingElem& a, const ChainRingElem& b) {
    require_same(a, b);
    return ChainRingElem(a.ring_, a.ring_->sub(a.value_, b.value_));
}

ChainRingElem operator*(const ChainRingElem& a, const ChainRingElem& b) {
    require_same(a, b);
    return ChainRingElem(a.ring_, a.ring_->mul(a.value_, b.value_));
}

bool operator==(const ChainRingElem& a, const ChainRingElem& b) {
    return a.ring_->same_as(*b.ring_) && a.value_ == b.value_;
}

}  // namespace monocat
