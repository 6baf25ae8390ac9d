#include "svlab/field.hpp"

#include <sstream>

#include "svlab/errors.hpp"
#include "svlab/lattice.hpp"

namespace svlab::charp {

namespace {

using Poly = std::vector<std::int64_t>;

std::int64_t mod(std::int64_t a, std::int64_t p)
{
    a %= p;
    return a < 0 ? a + p : a;
}

/* Remainder of a by the monic polynomial m over F_p. */
Poly poly_rem(Poly a, Poly const & m, std::int64_t p)
{
    std::size_t const dm = m.size() - 1;
    for (std::size_t i = a.size(); i-- > dm;) {
        std::int64_t c = a[i];
        if (c == 0)
            continue;
        for (std::size_t j = 0; j <= dm; ++j)
            a[i - dm + j] = mod(a[i - dm + j] - c * m[j], p);
    }
    a.resize(dm);
    return a;
}

bool is_irreducible(Poly const & m, std::int64_t p)
{
    int const d = static_cast<int>(m.size()) - 1;
    for (int k = 1; 2 * k <= d; ++k) {
        std::int64_t count = 1;
        for (int i = 0; i < k; ++i)
            count *= p;
        for (std::int64_t idx = 0; idx < count; ++idx) {
            Poly q(k + 1, 0);
            q[k] = 1;
            std::int64_t r = idx;
            for (int i = 0; i < k; ++i, r /= p)
                q[i] = r % p;
            Poly rem = poly_rem(m, q, p);
            bool zero = true;
            for (auto c : rem)
                zero = zero && c == 0;
            if (zero)
                return false;
        }
    }
    return true;
}

}  // namespace

FieldPtr FiniteField::make(std::int64_t p, int d)
{
    if (p < 2 || p > 46337 || !lattice::is_prime(p))
        throw InputError("field characteristic must be a small prime, got " + std::to_string(p));
    if (d < 1)
        throw InputError("extension degree must be positive");
    std::int64_t total = 1;
    for (int i = 0; i < d; ++i) {
        total *= p;
        if (total > (std::int64_t{1} << 40))
            throw InputError("field too large");
    }
    if (d == 1)
        return FieldPtr(new FiniteField(p, 1, {0, 1}));
    for (std::int64_t idx = 0; idx < total; ++idx) {
        Poly m(d + 1, 0);
        m[d] = 1;
        std::int64_t r = idx;
        for (int i = 0; i < d; ++i, r /= p)
            m[i] = r % p;
        if (m[0] != 0 && is_irreducible(m, p))
            return FieldPtr(new FiniteField(p, d, m));
    }
    throw CheckFailure("no irreducible polynomial found");
}

std::int64_t FiniteField::order() const
{
    std::int64_t q = 1;
    for (int i = 0; i < d_; ++i)
        q *= p_;
    return q;
}

FieldElement::FieldElement(FieldPtr field, std::int64_t value) : field_(std::move(field)), c_(field_->degree(), 0)
{
    c_[0] = mod(value, field_->characteristic());
}

FieldElement::FieldElement(FieldPtr field, std::vector<std::int64_t> coeffs) : field_(std::move(field))
{
    auto const p = field_->characteristic();
    for (auto & c : coeffs)
        c = mod(c, p);
    if (coeffs.size() > static_cast<std::size_t>(field_->degree()))
        c_ = poly_rem(std::move(coeffs), field_->modulus(), p);
    else
        c_ = std::move(coeffs);
    c_.resize(field_->degree(), 0);
}

FieldElement FieldElement::generator(FieldPtr const & field)
{
    return FieldElement(field, std::vector<std::int64_t>{0, 1});
}

FieldElement FieldElement::from_index(FieldPtr const & field, std::int64_t index)
{
    std::vector<std::int64_t> c(field->degree(), 0);
    for (auto & x : c) {
        x = index % field->characteristic();
        index /= field->characteristic();
    }
    return FieldElement(field, std::move(c));
}

bool FieldElement::is_zero() const
{
    for (auto c : c_)
        if (c != 0)
            return false;
    return true;
}

FieldElement & FieldElement::operator+=(FieldElement const & o)
{
    auto const p = field_->characteristic();
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] = mod(c_[i] + o.c_[i], p);
    return *this;
}

FieldElement & FieldElement::operator-=(FieldElement const & o)
{
    auto const p = field_->characteristic();
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] = mod(c_[i] - o.c_[i], p);
    return *this;
}

FieldElement & FieldElement::operator*=(FieldElement const & o)
{
    auto const p = field_->characteristic();
    std::size_t const d = c_.size();
    if (d == 1) {
        c_[0] = c_[0] * o.c_[0] % p;
        return *this;
    }
    Poly prod(2 * d - 1, 0);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            prod[i + j] = (prod[i + j] + c_[i] * o.c_[j]) % p;
    c_ = poly_rem(std::move(prod), field_->modulus(), p);
    return *this;
}

FieldElement FieldElement::operator-() const
{
    return FieldElement(field_, 0) - *this;
}

FieldElement FieldElement::pow(std::int64_t n) const
{
    if (n < 0)
        return inverse().pow(-n);
    FieldElement result(field_, 1);
    FieldElement base = *this;
    while (n > 0) {
        if (n & 1)
            result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

FieldElement FieldElement::inverse() const
{
    if (is_zero())
        throw CheckFailure("division by zero in a finite field");
    return pow(field_->order() - 2);
}

bool FieldElement::operator==(FieldElement const & o) const
{
    return field_ == o.field_ && c_ == o.c_;
}

std::string FieldElement::str() const
{
    if (c_.size() == 1)
        return std::to_string(c_[0]);
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c_.size(); ++i)
        os << (i ? "," : "") << c_[i];
    os << "]";
    return os.str();
}

FieldElement operator/(FieldElement const & a, FieldElement const & b)
{
    return a * b.inverse();
}

}  // namespace svlab::charp
