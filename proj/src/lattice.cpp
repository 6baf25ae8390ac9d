#include "svlab/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "svlab/errors.hpp"

namespace svlab::lattice {

bool is_prime(long n)
{
    if (n < 2)
        return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

namespace {

void check_characteristic(int p)
{
    if (p != 0 && !is_prime(p))
        throw InputError("characteristic must be 0 or prime, got " + std::to_string(p));
}

/* P(i): the later points proximate to i. */
std::vector<std::vector<std::size_t>> proximity_sets(std::vector<Exceptional> const & exc)
{
    std::vector<std::vector<std::size_t>> sets(exc.size());
    for (std::size_t j = 0; j < exc.size(); ++j)
        for (std::size_t i : exc[j].proximate_to)
            sets[i].push_back(j);
    return sets;
}

}  // namespace

ModelPtr SurfaceModel::ruled(int characteristic, int genus, int e,
                             std::vector<Exceptional> exceptionals, std::optional<int> chi)
{
    check_characteristic(characteristic);
    if (genus < 0)
        throw InputError("base genus must be nonnegative");
    for (std::size_t j = 0; j < exceptionals.size(); ++j) {
        auto & prox = exceptionals[j].proximate_to;
        std::sort(prox.begin(), prox.end());
        if (std::adjacent_find(prox.begin(), prox.end()) != prox.end())
            throw InputError("duplicate proximity index on exceptional " + std::to_string(j));
        if (prox.size() > 2)
            throw InputError("a point lies on at most two exceptional curves (exceptional " +
                             std::to_string(j) + ")");
        for (std::size_t i : prox)
            if (i >= j)
                throw InputError("exceptional " + std::to_string(j) +
                                 " can only be proximate to earlier exceptionals");
    }

    std::size_t const k = exceptionals.size();
    std::size_t const n = 2 + k;
    SurfaceModel m;
    m.characteristic_ = characteristic;
    m.chi_ = chi.value_or(1 - genus);
    m.gram_.assign(n, std::vector<Rational>(n, Rational(0)));
    m.gram_[0][0] = -e;
    m.gram_[0][1] = m.gram_[1][0] = 1;

    auto const prox = proximity_sets(exceptionals);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            /* strict_i = e_i - sum_{a in P(i)} e_a over the orthogonal
             * total transforms with e_a^2 = -1. */
            long s = 0;
            if (i == j)
                s = -1 - static_cast<long>(prox[i].size());
            else {
                auto in = [](std::vector<std::size_t> const & v, std::size_t x) {
                    return std::find(v.begin(), v.end(), x) != v.end();
                };
                if (in(prox[i], j) || in(prox[j], i))
                    s += 1;
                for (std::size_t a : prox[i])
                    if (in(prox[j], a))
                        s -= 1;
            }
            m.gram_[2 + i][2 + j] = s;
        }
    }

    /* K = -2E + (2g-2-e)F + sum of total transforms, rewritten in the
     * strict basis: tot_i = E_i + sum_{j in P(i)} tot_j. */
    std::vector<std::vector<long>> tot(k, std::vector<long>(k, 0));
    for (std::size_t ii = k; ii-- > 0;) {
        tot[ii][ii] = 1;
        for (std::size_t j : prox[ii])
            for (std::size_t c = 0; c < k; ++c)
                tot[ii][c] += tot[j][c];
    }
    m.canonical_.assign(n, Rational(0));
    m.canonical_[0] = -2;
    m.canonical_[1] = 2 * genus - 2 - e;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t c = 0; c < k; ++c)
            m.canonical_[2 + c] += tot[i][c];

    m.ruled_ = RuledData{genus, e, std::move(exceptionals)};
    return ModelPtr(new SurfaceModel(std::move(m)));
}

ModelPtr SurfaceModel::numerical(int characteristic, GramMatrix gram, std::vector<Rational> canonical, int chi)
{
    check_characteristic(characteristic);
    std::size_t const n = gram.size();
    if (n == 0)
        throw InputError("empty intersection form");
    for (std::size_t i = 0; i < n; ++i) {
        if (gram[i].size() != n)
            throw InputError("intersection form must be square");
        for (std::size_t j = 0; j < i; ++j)
            if (gram[i][j] != gram[j][i])
                throw InputError("intersection form must be symmetric");
    }
    if (canonical.size() != n)
        throw InputError("canonical class has wrong rank");
    SurfaceModel m;
    m.characteristic_ = characteristic;
    m.chi_ = chi;
    m.gram_ = std::move(gram);
    m.canonical_ = std::move(canonical);
    return ModelPtr(new SurfaceModel(std::move(m)));
}

RuledData const & SurfaceModel::ruled_data() const
{
    if (!ruled_)
        throw InputError("operation requires a ruled model");
    return *ruled_;
}

/* ------------------------------------------------------------------ */

DivisorClass::DivisorClass(ModelPtr model, std::vector<Rational> coeffs)
    : model_(std::move(model)), coeffs_(std::move(coeffs))
{
    if (!model_)
        throw InputError("divisor class without a model");
    if (coeffs_.size() != model_->rank())
        throw InputError("divisor class has " + std::to_string(coeffs_.size()) +
                         " coefficients, model rank is " + std::to_string(model_->rank()));
}

DivisorClass DivisorClass::zero(ModelPtr const & model)
{
    return DivisorClass(model, std::vector<Rational>(model->rank(), Rational(0)));
}

DivisorClass DivisorClass::basis(ModelPtr const & model, std::size_t index)
{
    if (index >= model->rank())
        throw InputError("basis index out of range");
    std::vector<Rational> c(model->rank(), Rational(0));
    c[index] = 1;
    return DivisorClass(model, std::move(c));
}

DivisorClass DivisorClass::ruled(ModelPtr const & model, Rational const & a, Rational const & b)
{
    model->ruled_data();
    std::vector<Rational> c(model->rank(), Rational(0));
    c[0] = a;
    c[1] = b;
    return DivisorClass(model, std::move(c));
}

bool DivisorClass::is_integral() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Rational const & q) { return svlab::is_integral(q); });
}

bool DivisorClass::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Rational const & q) { return q == 0; });
}

void require_same_model(DivisorClass const & a, DivisorClass const & b)
{
    if (a.model() != b.model() && !(*a.model() == *b.model()))
        throw InputError("divisor classes live on different models");
}

DivisorClass & DivisorClass::operator+=(DivisorClass const & o)
{
    require_same_model(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    return *this;
}

DivisorClass & DivisorClass::operator-=(DivisorClass const & o)
{
    require_same_model(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    return *this;
}

DivisorClass & DivisorClass::operator*=(Rational const & s)
{
    for (auto & c : coeffs_)
        c *= s;
    return *this;
}

bool DivisorClass::operator==(DivisorClass const & o) const
{
    return (model_ == o.model_ || *model_ == *o.model_) && coeffs_ == o.coeffs_;
}

std::string DivisorClass::str() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        os << (i ? ", " : "") << svlab::to_string(coeffs_[i]);
    os << "]";
    return os.str();
}

Rational intersect(DivisorClass const & x, DivisorClass const & y)
{
    require_same_model(x, y);
    auto const & g = x.model()->gram();
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0)
            continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (y[j] != 0 && g[i][j] != 0)
                s += x[i] * g[i][j] * y[j];
    }
    return s;
}

DivisorClass canonical_class(ModelPtr const & model)
{
    return DivisorClass(model, model->canonical_coeffs());
}

Rational adjunction_pa(DivisorClass const & curve)
{
    Rational twice = intersect(curve, curve + canonical_class(curve.model()));
    if (curve.is_integral() && !(svlab::is_integral(twice) && twice.get_num() % 2 == 0))
        throw CheckFailure("C(C+K) is not an even integer for integral C = " + curve.str());
    Rational pa = 1 + twice / 2;
    return pa;
}

Rational riemann_roch_chi(DivisorClass const & d)
{
    Rational v = intersect(d, d - canonical_class(d.model())) / 2 + d.model()->chi_structure();
    if (d.is_integral() && !svlab::is_integral(v))
        throw CheckFailure("Riemann-Roch value is not an integer for integral D = " + d.str());
    return v;
}

Signature signature(GramMatrix const & gram)
{
    GramMatrix a = gram;
    std::size_t const n = a.size();
    Signature sig;
    std::size_t k = 0;
    while (k < n) {
        std::size_t piv = n;
        for (std::size_t i = k; i < n; ++i)
            if (a[i][i] != 0) {
                piv = i;
                break;
            }
        if (piv == n) {
            /* No nonzero diagonal: find an off-diagonal entry and replace
             * row/col i by row/col i + j, which makes a_ii = 2 a_ij != 0. */
            std::size_t pi = n, pj = n;
            for (std::size_t i = k; i < n && pi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (a[i][j] != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n) {
                sig.zero += static_cast<int>(n - k);
                break;
            }
            for (std::size_t c = 0; c < n; ++c)
                a[pi][c] += a[pj][c];
            for (std::size_t r = 0; r < n; ++r)
                a[r][pi] += a[r][pj];
            piv = pi;
        }
        std::swap(a[k], a[piv]);
        for (auto & row : a)
            std::swap(row[k], row[piv]);
        Rational const p = a[k][k];
        (p > 0 ? sig.positive : sig.negative) += 1;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0)
                continue;
            Rational f = a[i][k] / p;
            for (std::size_t j = k; j < n; ++j)
                a[i][j] -= f * a[k][j];
        }
        for (std::size_t j = k + 1; j < n; ++j)
            a[k][j] = 0;
        for (std::size_t i = k + 1; i < n; ++i)
            a[i][k] = 0;
        ++k;
    }
    return sig;
}

namespace {

void require_pure_ruled(DivisorClass const & d, char const * what)
{
    if (!d.model()->is_pure_ruled())
        throw InputError(std::string(what) + " requires a pure ruled model (no exceptionals)");
}

}  // namespace

bool candidate_curve_constraints(DivisorClass const & l)
{
    require_pure_ruled(l, "candidate_curve_constraints");
    if (!l.is_integral())
        throw InputError("curve class must be integral: " + l.str());
    auto const & m = *l.model();
    Rational const & x = l.a();
    Rational const & y = l.b();
    int const e = m.invariant_e();
    int const g = m.genus();
    int const p = m.characteristic();

    if ((x == 1 && y == 0) || (x == 0 && y == 1))
        return true;
    if (x <= 0)
        return false;
    if (e >= 0)
        return y >= x * e;
    if (p == 0)
        throw InputError("curve-class constraints for e < 0 need the characteristic (got 0)");
    Rational half_xe = x * e / 2;
    if (x == 1)
        return y >= 0;
    if (x <= p - 1)
        return y >= half_xe;
    Rational bound = half_xe + 1 - g;
    return y >= bound;
}

std::string to_string(PositivityStatus s)
{
    switch (s) {
    case PositivityStatus::certified:
        return "certified";
    case PositivityStatus::violated:
        return "violated";
    case PositivityStatus::unknown:
        break;
    }
    return "unknown";
}

PositivityVerdict certify_positivity(DivisorClass const & d, bool strict)
{
    require_pure_ruled(d, "certify_positivity");
    auto const & model = d.model();
    int const e = model->invariant_e();
    int const g = model->genus();
    int const p = model->characteristic();
    Rational const & a = d.a();
    Rational const & b = d.b();
    auto cmp = [strict](Rational const & v) { return strict ? v > 0 : v >= 0; };
    char const * rel = strict ? ">" : ">=";

    PositivityVerdict out;

    if (e >= 0) {
        /* Cone of curves spanned by E and F. */
        out.rule_used = "R-e>=0";
        if (!cmp(a)) {
            out.status = PositivityStatus::violated;
            out.witness = DivisorClass::fiber(model);
            out.failed_condition = std::string("a ") + rel + " 0";
            return out;
        }
        Rational de = b - a * e;
        if (!cmp(de)) {
            out.status = PositivityStatus::violated;
            out.witness = DivisorClass::section(model);
            out.failed_condition = std::string("b ") + rel + " ae";
            return out;
        }
        out.status = PositivityStatus::certified;
        return out;
    }

    /* R-nec: D.F = a and D^2 = a(2b - ae). */
    Rational twice_b_minus_ae = 2 * b - a * e;
    if (!cmp(a)) {
        out.status = PositivityStatus::violated;
        out.rule_used = "R-nec";
        out.witness = DivisorClass::fiber(model);
        out.failed_condition = std::string("a ") + rel + " 0";
        return out;
    }
    if (!cmp(twice_b_minus_ae)) {
        out.status = PositivityStatus::violated;
        out.rule_used = "R-nec";
        out.failed_condition = std::string("2b ") + rel + " ae";
        return out;
    }

    /* R-decomp: E and F are nef when e < 0. */
    if (cmp(b)) {
        out.status = PositivityStatus::certified;
        out.rule_used = "R-decomp";
        return out;
    }

    /* R-cone: minimum of D.L over the candidate curve classes. */
    if (p == 0) {
        out.status = PositivityStatus::unknown;
        out.rule_used = "R-cone(unavailable in characteristic 0)";
        return out;
    }
    out.rule_used = "R-cone";
    Rational beta = b - a * e / 2;
    std::vector<Rational> minima;
    minima.push_back(a);          // F
    minima.push_back(b - a * e);  // x = 1, y = 0 (includes E)
    if (p >= 3) {
        minima.push_back(2 * beta);
        minima.push_back((p - 1) * beta);
    }
    if (beta <= 0 && a > 0) {
        /* x >= p branch unbounded below over the superset. */
        out.status = PositivityStatus::unknown;
        out.failed_condition = "b - ae/2 <= 0 leaves the x >= p branch unbounded";
        return out;
    }
    minima.push_back(p * beta + a * (1 - g));
    bool ok = std::all_of(minima.begin(), minima.end(), cmp);
    if (ok && strict)
        ok = a * twice_b_minus_ae > 0;
    out.status = ok ? PositivityStatus::certified : PositivityStatus::unknown;
    if (!ok)
        out.failed_condition = "a branch minimum is not positive";
    return out;
}

/* ------------------------------------------------------------------ */

Blowup::Blowup(ModelPtr source, Exceptional point) : source_(std::move(source))
{
    auto data = source_->ruled_data();
    data.exceptionals.push_back(std::move(point));
    target_ = SurfaceModel::ruled(source_->characteristic(), data.genus, data.e, std::move(data.exceptionals),
                                  source_->chi_structure());
}

DivisorClass Blowup::pull(DivisorClass const & d) const
{
    if (d.model() != source_ && !(*d.model() == *source_))
        throw InputError("pullback of a class from another model");
    std::vector<Rational> c = d.coeffs();
    /* The strict transform of E_k through the new point gains the new
     * exceptional curve in its total transform. */
    Rational extra = 0;
    for (std::size_t k : target_->ruled_data().exceptionals.back().proximate_to)
        extra += c[2 + k];
    c.push_back(extra);
    return DivisorClass(target_, std::move(c));
}

Contraction::Contraction(ModelPtr source, std::size_t exceptional_index)
    : source_(std::move(source)), index_(exceptional_index)
{
    auto const & data = source_->ruled_data();
    if (index_ >= data.exceptionals.size())
        throw InputError("no exceptional curve with index " + std::to_string(index_));
    DivisorClass l = DivisorClass::exceptional(source_, index_);
    Rational l2 = self_intersection(l);
    Rational kl = intersect(canonical_class(source_), l);
    if (l2 != -1 || kl != -1)
        throw InputError("exceptional " + std::to_string(index_) + " is not a (-1)-curve (l^2 = " +
                         svlab::to_string(l2) + ", K.l = " + svlab::to_string(kl) + ")");
    std::vector<Exceptional> rest;
    for (std::size_t j = 0; j < data.exceptionals.size(); ++j) {
        if (j == index_)
            continue;
        Exceptional x;
        for (std::size_t i : data.exceptionals[j].proximate_to) {
            if (i == index_)
                continue;
            x.proximate_to.push_back(i > index_ ? i - 1 : i);
        }
        rest.push_back(std::move(x));
    }
    target_ = SurfaceModel::ruled(source_->characteristic(), data.genus, data.e, std::move(rest),
                                  source_->chi_structure());
}

DivisorClass Contraction::push(DivisorClass const & d) const
{
    if (d.model() != source_ && !(*d.model() == *source_))
        throw InputError("pushforward of a class from another model");
    std::vector<Rational> c = d.coeffs();
    c.erase(c.begin() + static_cast<std::ptrdiff_t>(2 + index_));
    return DivisorClass(target_, std::move(c));
}

DivisorClass Contraction::pull(DivisorClass const & d) const
{
    if (d.model() != target_ && !(*d.model() == *target_))
        throw InputError("pullback of a class from another model");
    std::vector<Rational> c = d.coeffs();
    Rational extra = 0;
    for (std::size_t k : source_->ruled_data().exceptionals[index_].proximate_to)
        extra += c[2 + k];
    c.insert(c.begin() + static_cast<std::ptrdiff_t>(2 + index_), extra);
    return DivisorClass(source_, std::move(c));
}

}  // namespace svlab::lattice
