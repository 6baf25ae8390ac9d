#include "svlab/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "svlab/errors.hpp"

namespace svlab::charp {

LaurentSeries::LaurentSeries(FieldPtr field, long start, std::vector<FieldElement> coeffs, long abs_precision)
    : field_(std::move(field)), start_(start), abs_precision_(abs_precision), c_(std::move(coeffs))
{
    if (static_cast<long>(c_.size()) > abs_precision_ - start_)
        c_.resize(std::max(0L, abs_precision_ - start_));
    normalize();
}

void LaurentSeries::normalize()
{
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero())
        ++lead;
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    start_ += static_cast<long>(lead);
    if (c_.empty())
        start_ = abs_precision_;
    /* pad to the full known window */
    long const window = abs_precision_ - start_;
    if (static_cast<long>(c_.size()) < window)
        c_.resize(window, FieldElement(field_, 0));
}

LaurentSeries LaurentSeries::zero(FieldPtr const & field, long abs_precision)
{
    return LaurentSeries(field, abs_precision, {}, abs_precision);
}

LaurentSeries LaurentSeries::monomial(FieldElement const & c, long k, long relative_precision)
{
    return LaurentSeries(c.field(), k, {c}, k + relative_precision);
}

LaurentSeries LaurentSeries::one(FieldPtr const & field, long relative_precision)
{
    return monomial(FieldElement(field, 1), 0, relative_precision);
}

std::optional<long> LaurentSeries::valuation_if_known() const
{
    if (c_.empty())
        return std::nullopt;
    return start_;
}

long LaurentSeries::valuation() const
{
    if (c_.empty())
        throw CheckFailure("series vanishes to precision O(t^" + std::to_string(abs_precision_) + ")");
    return start_;
}

FieldElement LaurentSeries::coefficient(long k) const
{
    if (k >= abs_precision_)
        throw CheckFailure("coefficient of t^" + std::to_string(k) + " is beyond the known precision");
    if (k < start_)
        return FieldElement(field_, 0);
    return c_[static_cast<std::size_t>(k - start_)];
}

LaurentSeries LaurentSeries::truncated(long abs_precision) const
{
    LaurentSeries r = *this;
    r.abs_precision_ = std::min(abs_precision_, abs_precision);
    if (r.start_ > r.abs_precision_)
        r.start_ = r.abs_precision_;
    r.c_.resize(std::max(0L, r.abs_precision_ - r.start_), FieldElement(field_, 0));
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::shifted(long k) const
{
    LaurentSeries r = *this;
    r.start_ += k;
    r.abs_precision_ += k;
    return r;
}

LaurentSeries LaurentSeries::scaled(FieldElement const & s) const
{
    LaurentSeries r = *this;
    for (auto & c : r.c_)
        c *= s;
    r.normalize();
    return r;
}

LaurentSeries & LaurentSeries::operator+=(LaurentSeries const & o)
{
    long const n = std::min(abs_precision_, o.abs_precision_);
    long const s = std::min({start_, o.start_, n});
    std::vector<FieldElement> out(static_cast<std::size_t>(n - s), FieldElement(field_, 0));
    for (long k = s; k < n; ++k)
        out[static_cast<std::size_t>(k - s)] = coefficient(k) + o.coefficient(k);
    *this = LaurentSeries(field_, s, std::move(out), n);
    return *this;
}

LaurentSeries & LaurentSeries::operator-=(LaurentSeries const & o)
{
    return *this += -o;
}

LaurentSeries LaurentSeries::operator-() const
{
    return scaled(-FieldElement(field_, 1));
}

LaurentSeries operator*(LaurentSeries const & a, LaurentSeries const & b)
{
    if (a.is_zero() || b.is_zero()) {
        /* O(t^Na) * (t^vb u) = O(t^(Na + vb)); both unknown: O(t^(Na + Nb)) */
        long va = a.is_zero() ? a.abs_precision_ : a.start_;
        long vb = b.is_zero() ? b.abs_precision_ : b.start_;
        long n = a.is_zero() ? a.abs_precision_ + vb : b.abs_precision_ + va;
        if (a.is_zero() && b.is_zero())
            n = a.abs_precision_ + b.abs_precision_;
        return LaurentSeries::zero(a.field_, n);
    }
    long const rel = std::min(a.abs_precision_ - a.start_, b.abs_precision_ - b.start_);
    long const v = a.start_ + b.start_;
    std::vector<FieldElement> out(static_cast<std::size_t>(rel), FieldElement(a.field_, 0));
    for (long i = 0; i < rel; ++i) {
        if (a.c_[static_cast<std::size_t>(i)].is_zero())
            continue;
        for (long j = 0; i + j < rel; ++j)
            out[static_cast<std::size_t>(i + j)] += a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
    }
    return LaurentSeries(a.field_, v, std::move(out), v + rel);
}

LaurentSeries LaurentSeries::inverse() const
{
    long const v = valuation();
    long const rel = abs_precision_ - v;
    FieldElement const inv0 = c_[0].inverse();
    std::vector<FieldElement> out(static_cast<std::size_t>(rel), FieldElement(field_, 0));
    out[0] = inv0;
    for (long k = 1; k < rel; ++k) {
        FieldElement s(field_, 0);
        for (long i = 1; i <= k; ++i)
            s += c_[static_cast<std::size_t>(i)] * out[static_cast<std::size_t>(k - i)];
        out[static_cast<std::size_t>(k)] = -(s * inv0);
    }
    return LaurentSeries(field_, -v, std::move(out), -v + rel);
}

LaurentSeries LaurentSeries::pow(long n) const
{
    if (n < 0)
        return inverse().pow(-n);
    LaurentSeries result = one(field_, relative_precision());
    LaurentSeries base = *this;
    while (n > 0) {
        if (n & 1)
            result = result * base;
        n >>= 1;
        if (n > 0)
            base = base * base;
    }
    return result;
}

LaurentSeries LaurentSeries::derivative() const
{
    std::vector<FieldElement> out;
    out.reserve(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        long const k = start_ + static_cast<long>(i);
        out.push_back(c_[i] * FieldElement(field_, k));
    }
    return LaurentSeries(field_, start_ - 1, std::move(out), abs_precision_ - 1);
}

LaurentSeries LaurentSeries::sqrt_unit() const
{
    if (field_->characteristic() == 2)
        throw InputError("square roots of series need odd characteristic");
    if (valuation() != 0 || !(c_[0] == FieldElement(field_, 1)))
        throw InputError("sqrt_unit needs a series 1 + O(t)");
    long const rel = abs_precision_;
    FieldElement const half = FieldElement(field_, 2).inverse();
    std::vector<FieldElement> s(static_cast<std::size_t>(rel), FieldElement(field_, 0));
    s[0] = FieldElement(field_, 1);
    /* 2 s_k + sum_{0<i<k} s_i s_{k-i} = u_k */
    for (long k = 1; k < rel; ++k) {
        FieldElement acc = c_[static_cast<std::size_t>(k)];
        for (long i = 1; i < k; ++i)
            acc -= s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(k - i)];
        s[static_cast<std::size_t>(k)] = acc * half;
    }
    return LaurentSeries(field_, 0, std::move(s), rel);
}

std::string LaurentSeries::str(int max_terms) const
{
    std::ostringstream os;
    int shown = 0;
    for (std::size_t i = 0; i < c_.size() && shown < max_terms; ++i) {
        if (c_[i].is_zero())
            continue;
        os << (shown ? " + " : "") << c_[i].str() << "*t^" << (start_ + static_cast<long>(i));
        ++shown;
    }
    os << (shown ? " + " : "") << "O(t^" << abs_precision_ << ")";
    return os.str();
}

LaurentSeries operator/(LaurentSeries const & a, LaurentSeries const & b)
{
    return a * b.inverse();
}

}  // namespace svlab::charp
