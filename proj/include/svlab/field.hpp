#ifndef SVLAB_FIELD_HPP
#define SVLAB_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace svlab::charp {

class FiniteField;
using FieldPtr = std::shared_ptr<FiniteField const>;

/* GF(p^d) as F_p[z] / (m(z)) with m the first monic irreducible of degree d
 * in lexicographic order. */
class FiniteField {
    std::int64_t p_;
    int d_;
    std::vector<std::int64_t> modulus_;  // monic, degree d, low to high

    FiniteField(std::int64_t p, int d, std::vector<std::int64_t> modulus)
        : p_(p), d_(d), modulus_(std::move(modulus))
    {
    }

  public:
    static FieldPtr make(std::int64_t p, int d = 1);

    std::int64_t characteristic() const { return p_; }
    int degree() const { return d_; }
    std::int64_t order() const;
    std::vector<std::int64_t> const & modulus() const { return modulus_; }
};

class FieldElement {
    FieldPtr field_;
    std::vector<std::int64_t> c_;  // size d

  public:
    FieldElement() = default;
    FieldElement(FieldPtr field, std::int64_t value);
    FieldElement(FieldPtr field, std::vector<std::int64_t> coeffs);

    /* The generator z of the polynomial basis. */
    static FieldElement generator(FieldPtr const & field);
    /* Element numbered by its base-p digits (0 <= index < order). */
    static FieldElement from_index(FieldPtr const & field, std::int64_t index);

    FieldPtr const & field() const { return field_; }
    std::vector<std::int64_t> const & coeffs() const { return c_; }
    bool is_zero() const;

    FieldElement & operator+=(FieldElement const & o);
    FieldElement & operator-=(FieldElement const & o);
    FieldElement & operator*=(FieldElement const & o);

    friend FieldElement operator+(FieldElement a, FieldElement const & b) { return a += b; }
    friend FieldElement operator-(FieldElement a, FieldElement const & b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, FieldElement const & b) { return a *= b; }
    FieldElement operator-() const;

    FieldElement pow(std::int64_t n) const;
    FieldElement inverse() const;
    FieldElement frobenius() const { return pow(field_->characteristic()); }

    bool operator==(FieldElement const & o) const;

    std::string str() const;
};

FieldElement operator/(FieldElement const & a, FieldElement const & b);

}  // namespace svlab::charp

#endif
