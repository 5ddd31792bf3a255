#include "ncpainleve/series.hpp"

#include <sstream>

namespace ncp {

RingElem::RingElem(const Rational& base_point, std::vector<CoefMatrix> coeffs)
    : dim_(coeffs.empty() ? 0 : coeffs.front().dim()), x0_(base_point), c_(std::move(coeffs)) {
    if (c_.empty()) throw Error("series needs at least the constant coefficient");
    for (const auto& m : c_)
        if (m.dim() != dim_) throw DimensionMismatch("series coefficients of mixed dimension");
}

RingElem RingElem::zero(int dim, const Rational& x0, int order) {
    if (order < 0) throw OrderExhausted("cannot build a series of negative order");
    return RingElem(x0, std::vector<CoefMatrix>(static_cast<std::size_t>(order) + 1,
                                                CoefMatrix(dim)));
}

RingElem RingElem::one(int dim, const Rational& x0, int order) {
    return constant(CoefMatrix::identity(dim), x0, order);
}

RingElem RingElem::constant(const CoefMatrix& c0, const Rational& x0, int order) {
    RingElem out = zero(c0.dim(), x0, order);
    out.c_[0] = c0;
    return out;
}

RingElem RingElem::scalar(const Rational& r, int dim, const Rational& x0, int order) {
    return constant(CoefMatrix::scalar(dim, r), x0, order);
}

RingElem RingElem::variable(int dim, const Rational& x0, int order) {
    RingElem out = zero(dim, x0, order);
    out.c_[0] = CoefMatrix::scalar(dim, x0);
    if (order >= 1) out.c_[1] = CoefMatrix::identity(dim);
    return out;
}

void check_compatible(const RingElem& a, const RingElem& b) {
    if (a.dim() != b.dim())
        throw DimensionMismatch("series dimensions differ: " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
    if (a.base_point() != b.base_point())
        throw BasePointMismatch("series base points differ: " + a.base_point().str() + " vs " +
                                b.base_point().str());
}

RingElem RingElem::truncated(int order) const {
    if (order < 0) throw OrderExhausted("cannot truncate below order 0");
    if (order >= valid_order()) return *this;
    return RingElem(x0_, std::vector<CoefMatrix>(c_.begin(), c_.begin() + order + 1));
}

RingElem operator+(const RingElem& a, const RingElem& b) {
    check_compatible(a, b);
    const int k = std::min(a.valid_order(), b.valid_order());
    std::vector<CoefMatrix> c;
    c.reserve(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) c.push_back(a.c_[i] + b.c_[i]);
    return RingElem(a.x0_, std::move(c));
}

RingElem operator-(const RingElem& a, const RingElem& b) {
    check_compatible(a, b);
    const int k = std::min(a.valid_order(), b.valid_order());
    std::vector<CoefMatrix> c;
    c.reserve(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) c.push_back(a.c_[i] - b.c_[i]);
    return RingElem(a.x0_, std::move(c));
}

RingElem operator*(const RingElem& a, const RingElem& b) {
    check_compatible(a, b);
    const int k = std::min(a.valid_order(), b.valid_order());
    std::vector<CoefMatrix> c(static_cast<std::size_t>(k) + 1, CoefMatrix(a.dim_));
    for (int i = 0; i <= k; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; i + j <= k; ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return RingElem(a.x0_, std::move(c));
}

RingElem RingElem::operator-() const {
    std::vector<CoefMatrix> c;
    c.reserve(c_.size());
    for (const auto& m : c_) c.push_back(-m);
    return RingElem(x0_, std::move(c));
}

RingElem RingElem::scaled(const Rational& r) const {
    std::vector<CoefMatrix> c;
    c.reserve(c_.size());
    for (const auto& m : c_) c.push_back(r * m);
    return RingElem(x0_, std::move(c));
}

RingElem RingElem::derive() const {
    if (valid_order() < 1)
        throw OrderExhausted("derivative of an order-0 series carries no information");
    std::vector<CoefMatrix> c;
    c.reserve(c_.size() - 1);
    for (int k = 1; k <= valid_order(); ++k) c.push_back(Rational(k) * c_[k]);
    return RingElem(x0_, std::move(c));
}

RingElem RingElem::invert() const {
    auto inv0 = c_[0].inverse();
    if (!inv0)
        throw SingularConstantTerm("constant coefficient " + c_[0].str() +
                                   " is singular; series has no inverse at base point " +
                                   x0_.str());
    const int k_max = valid_order();
    std::vector<CoefMatrix> b;
    b.reserve(c_.size());
    b.push_back(*inv0);
    for (int k = 1; k <= k_max; ++k) {
        CoefMatrix acc(dim_);
        for (int j = 1; j <= k; ++j) acc += c_[j] * b[k - j];
        b.push_back(-(*inv0 * acc));
    }
    return RingElem(x0_, std::move(b));
}

RingElem RingElem::recentered(const Rational& new_x0) const {
    const Rational delta = new_x0 - x0_;
    const int k_max = valid_order();
    std::vector<CoefMatrix> out(c_.size(), CoefMatrix(dim_));
    for (int j = 0; j <= k_max; ++j) {
        // power of delta walks along with k
        Rational dp(1);
        for (int k = j; k <= k_max; ++k) {
            out[j] += (Rational::binomial(k, j) * dp) * c_[k];
            dp *= delta;
        }
    }
    return RingElem(new_x0, std::move(out));
}

bool operator==(const RingElem& a, const RingElem& b) {
    check_compatible(a, b);
    const int k = std::min(a.valid_order(), b.valid_order());
    for (int i = 0; i <= k; ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

bool RingElem::is_zero() const {
    for (const auto& m : c_)
        if (!m.is_zero()) return false;
    return true;
}

std::optional<RingElem::Nonzero> RingElem::first_nonzero() const {
    for (int k = 0; k <= valid_order(); ++k)
        for (int r = 0; r < dim_; ++r)
            for (int c = 0; c < dim_; ++c)
                if (!c_[k].at(r, c).is_zero()) return Nonzero{k, r, c};
    return std::nullopt;
}

std::string RingElem::str() const {
    std::ostringstream os;
    os << "series(x0=" << x0_ << ", K=" << valid_order() << ")[";
    bool first = true;
    for (int k = 0; k <= valid_order(); ++k) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (dim_ == 1)
            os << c_[k].at(0, 0);
        else
            os << c_[k].str();
        if (k > 0) os << "*t^" << k;
    }
    if (first) os << "0";
    os << "]";
    return os.str();
}

}  // namespace ncp
