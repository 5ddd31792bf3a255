#include "ncpainleve/rng.hpp"

namespace ncp {

std::int64_t Rng::int_in(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(eng_() % span);
}

Rational Rng::rational_entry() {
    return Rational(int_in(-9, 9), int_in(1, 4));
}

CoefMatrix Rng::matrix(int dim) {
    CoefMatrix m(dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) m.at(r, c) = rational_entry();
    return m;
}

CoefMatrix Rng::invertible_matrix(int dim) {
    for (;;) {
        CoefMatrix m = matrix(dim);
        if (m.invertible()) return m;
    }
}

RingElem Rng::elem(int dim, const Rational& x0, int order, bool invertible_c0) {
    std::vector<CoefMatrix> c;
    c.reserve(static_cast<std::size_t>(order) + 1);
    c.push_back(invertible_c0 ? invertible_matrix(dim) : matrix(dim));
    for (int k = 1; k <= order; ++k) c.push_back(matrix(dim));
    return RingElem(x0, std::move(c));
}

std::uint64_t substream(std::uint64_t seed, std::string_view label) {
    // FNV-1a over the label, folded into the run seed
    std::uint64_t h = 14695981039346656037ull;
    for (char ch : label) {
        h ^= static_cast<unsigned char>(ch);
        h *= 1099511628211ull;
    }
    return seed ^ h;
}

}  // namespace ncp
