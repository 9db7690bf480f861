#include "clgeo/field.hpp"

#include <map>
#include <mutex>

namespace clgeo {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// One irreducible modulus per supported extension order (q <= 32).
// Coefficients c_0..c_e, low degree first.
std::vector<int> fixed_modulus(int p, int e) {
    if (e == 1) return {0, 1};  // the polynomial x; unused for prime fields
    if (p == 2 && e == 2) return {1, 1, 1};           // x^2 + x + 1
    if (p == 2 && e == 3) return {1, 1, 0, 1};        // x^3 + x + 1
    if (p == 2 && e == 4) return {1, 1, 0, 0, 1};     // x^4 + x + 1
    if (p == 2 && e == 5) return {1, 0, 1, 0, 0, 1};  // x^5 + x^2 + 1
    if (p == 3 && e == 2) return {1, 0, 1};           // x^2 + 1
    if (p == 3 && e == 3) return {1, 2, 0, 1};        // x^3 + 2x + 1
    if (p == 5 && e == 2) return {1, 1, 1};           // x^2 + x + 1
    throw std::out_of_range("Field: unsupported order p^e (need q <= 32)");
}

// Polynomial element index <-> coefficient vector in base p.
std::vector<int> digits(int idx, int p, int e) {
    std::vector<int> c(e, 0);
    for (int i = 0; i < e; ++i) {
        c[i] = idx % p;
        idx /= p;
    }
    return c;
}

int undigits(const std::vector<int>& c, int p) {
    int idx = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) idx = idx * p + c[i];
    return idx;
}

}  // namespace

Field::Field(int p, int e, std::vector<int> modulus)
    : p_(p), e_(e), q_(1), modulus_(std::move(modulus)) {
    for (int i = 0; i < e; ++i) q_ *= p;

    add_.resize(static_cast<std::size_t>(q_) * q_);
    mul_.resize(static_cast<std::size_t>(q_) * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);

    for (int a = 0; a < q_; ++a) {
        auto ca = digits(a, p, e);
        std::vector<int> cn(e);
        for (int i = 0; i < e; ++i) cn[i] = (p - ca[i]) % p;
        neg_[a] = static_cast<felem>(undigits(cn, p));

        for (int b = 0; b < q_; ++b) {
            auto cb = digits(b, p, e);
            std::vector<int> cs(e);
            for (int i = 0; i < e; ++i) cs[i] = (ca[i] + cb[i]) % p;
            add_[static_cast<std::size_t>(a) * q_ + b] = static_cast<felem>(undigits(cs, p));

            // Product of the coefficient polynomials, reduced modulo the
            // monic modulus.
            std::vector<int> prod(2 * e - 1, 0);
            for (int i = 0; i < e; ++i)
                for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
            for (int d = 2 * e - 2; d >= e; --d) {
                int c = prod[d];
                if (c == 0) continue;
                prod[d] = 0;
                for (int i = 0; i < e; ++i)
                    prod[d - e + i] = ((prod[d - e + i] - c * modulus_[i]) % p + p * p) % p;
            }
            prod.resize(e);
            mul_[static_cast<std::size_t>(a) * q_ + b] = static_cast<felem>(undigits(prod, p));
        }
    }

    // Invert by table scan; a reducible modulus would leave a zero divisor
    // without an inverse, so this doubles as the irreducibility check.
    for (int a = 1; a < q_; ++a) {
        for (int b = 1; b < q_; ++b) {
            if (mul_[static_cast<std::size_t>(a) * q_ + b] == 1) {
                inv_[a] = static_cast<felem>(b);
                break;
            }
        }
        if (inv_[a] == 0)
            throw std::logic_error("Field: modulus is not irreducible over GF(p)");
    }
}

const Field& Field::get(int p, int e) {
    if (!is_prime(p)) throw std::invalid_argument("Field: p must be prime");
    if (e < 1) throw std::invalid_argument("Field: e must be >= 1");
    long q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > 32) throw std::out_of_range("Field: unsupported order p^e (need q <= 32)");
    }

    static std::mutex mtx;
    static std::map<std::pair<int, int>, Field> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find({p, e});
    if (it == cache.end())
        it = cache.emplace(std::make_pair(p, e), Field(p, e, fixed_modulus(p, e))).first;
    return it->second;
}

}  // namespace clgeo
