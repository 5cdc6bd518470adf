#include "polyconf/numeric.hpp"

#include <stdexcept>

namespace polyconf {

Int floor_div(const Int& a, const Int& b) {
    if (b == 0) throw std::domain_error("floor_div: division by zero");
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int floor_sqrt(const Int& a) {
    if (a < 0) throw std::domain_error("floor_sqrt: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

bool is_perfect_square(const Int& a) {
    if (a < 0) return false;
    return mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::int64_t to_i64(const Int& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("integer out of int64 range: " + v.get_str());
    return static_cast<std::int64_t>(v.get_si());
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace polyconf
