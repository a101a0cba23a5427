#include "basesize/bigint.hpp"

#include "basesize/errors.hpp"

namespace basesize {

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned long a, unsigned long b) {
    if (b > a) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), a, b);
    return r;
}

BigInt from_decimal(const std::string& s) {
    BigInt r;
    if (s.empty() || r.set_str(s, 10) != 0) {
        throw InputError("not a decimal integer: '" + s + "'");
    }
    return r;
}

BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
    if (den == 0) throw ConsistencyError(std::string(what) + ": division by zero");
    BigInt q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (rem != 0) {
        throw ConsistencyError(std::string(what) + ": " + num.get_str() +
                               " is not divisible by " + den.get_str());
    }
    return q;
}

}  // namespace basesize
