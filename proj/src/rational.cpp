#include "linarr/rational.hpp"

#include "linarr/errors.hpp"

#include <cctype>

namespace linarr {

Rational rational_from_string(const std::string& s) {
    // strict format: -?digits(/digits)?  -- no whitespace, no decimals
    std::size_t i = 0;
    auto digits = [&](std::size_t start) {
        std::size_t j = start;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        return j;
    };
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    std::size_t num_end = digits(i);
    if (num_end == i)
        throw ParseError("expected integer in rational literal '" + s + "'", i);
    std::size_t j = num_end;
    if (j < s.size() && s[j] == '/') {
        ++j;
        std::size_t den_end = digits(j);
        if (den_end == j)
            throw ParseError("expected denominator in rational literal '" + s + "'", j);
        j = den_end;
    }
    if (j != s.size())
        throw ParseError("invalid character in rational literal '" + s + "'", j);

    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw ParseError("unparsable rational literal '" + s + "'");
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw ParseError("zero denominator in rational literal '" + s + "'");
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

void normalize_primitive(std::vector<BigInt>& v) {
    BigInt g = 0;
    for (const BigInt& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) return;
    for (BigInt& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    for (const BigInt& x : v) {
        if (x != 0) {
            if (x < 0)
                for (BigInt& y : v) y = -y;
            break;
        }
    }
}

std::vector<BigInt> primitive_integer_vector(const std::vector<Rational>& v) {
    BigInt den = 1;
    for (const Rational& q : v)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), mpq_denref(q.get_mpq_t()));
    std::vector<BigInt> out;
    out.reserve(v.size());
    for (const Rational& q : v) {
        BigInt t;
        mpz_divexact(t.get_mpz_t(), den.get_mpz_t(), mpq_denref(q.get_mpq_t()));
        mpz_mul(t.get_mpz_t(), t.get_mpz_t(), mpq_numref(q.get_mpq_t()));
        out.push_back(std::move(t));
    }
    normalize_primitive(out);
    return out;
}

} // namespace linarr
