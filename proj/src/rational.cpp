#include "ncpainleve/rational.hpp"

#include <cctype>
#include <ostream>

namespace ncp {

Rational::Rational(long n, long d) {
    if (d == 0) throw Error("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error("rational division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

Rational Rational::parse(std::string_view text) {
    // strict grammar: [+-]digits [ '/' digits ]
    auto bad = [&] { return Error("invalid rational '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    std::size_t i = 0;
    if (text[i] == '+' || text[i] == '-') ++i;
    std::size_t num_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_start) throw bad();
    std::string num(text.substr(0, i));
    std::string den = "1";
    if (i < text.size()) {
        if (text[i] != '/') throw bad();
        ++i;
        std::size_t den_start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_start || i != text.size()) throw bad();
        den = std::string(text.substr(den_start));
    }
    mpq_class v;
    mpz_class n(num, 10), d(den, 10);
    if (sgn(d) == 0) throw Error("rational with zero denominator: '" + std::string(text) + "'");
    v = mpq_class(n) / mpq_class(d);
    return Rational(v);
}

Rational Rational::binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(mpq_class(b));
}

std::string Rational::str_frac() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ncp
