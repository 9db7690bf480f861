#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace clgeo {

using felem = std::uint8_t;

/**
 * The finite field GF(q), q = p^e <= 32, with dense lookup-table arithmetic.
 *
 * Elements are indexed 0..q-1: the element sum_i c_i * alpha^i (alpha a root
 * of the fixed modulus polynomial) has index sum_i c_i * p^i. Index 0 is the
 * additive identity and index 1 the multiplicative identity. Each supported
 * extension order uses one fixed irreducible modulus, so the element labeling
 * is identical across runs and machines.
 *
 * Fields are immutable after construction and safe for concurrent reads.
 */
class Field {
public:
    // Returns the cached field of order p^e. Throws std::invalid_argument
    // for non-prime p and std::out_of_range for q > 32.
    static const Field& get(int p, int e);

    int p() const { return p_; }
    int e() const { return e_; }
    int q() const { return q_; }

    // Monic irreducible modulus, coefficient list c_0..c_e over GF(p).
    // For e = 1 this is (0, 1), i.e. the polynomial x.
    const std::vector<int>& modulus() const { return modulus_; }

    felem add(felem a, felem b) const { return add_[a * q_ + b]; }
    felem sub(felem a, felem b) const { return add_[a * q_ + neg_[b]]; }
    felem mul(felem a, felem b) const { return mul_[a * q_ + b]; }
    felem neg(felem a) const { return neg_[a]; }

    felem inv(felem a) const {
        if (a == 0) throw std::domain_error("Field::inv: zero has no inverse");
        return inv_[a];
    }

    felem div(felem a, felem b) const { return mul(a, inv(b)); }

    bool operator==(const Field& o) const { return p_ == o.p_ && e_ == o.e_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

private:
    Field(int p, int e, std::vector<int> modulus);

    int p_, e_, q_;
    std::vector<int> modulus_;
    std::vector<felem> add_, mul_, neg_, inv_;
};

}  // namespace clgeo
