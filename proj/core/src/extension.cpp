#include "freepairs/extension.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

namespace freepairs {

// ---------------------------------------------------------------------------
// descriptor
// ---------------------------------------------------------------------------

ExtDescriptor::ExtDescriptor(BaseField field, std::vector<std::string> vars, std::string gen,
                             std::vector<RatFunc> minpoly)
    : field_(std::move(field)), vars_(std::move(vars)), gen_(std::move(gen)),
      minpoly_(std::move(minpoly)) {
    if (minpoly_.size() < 2 || minpoly_.size() > 4)
        fail(errc::invalid_spec, "ExtDescriptor: degree must be 1, 2 or 3");
    if (!minpoly_.back().is_one())
        fail(errc::invalid_spec, "ExtDescriptor: minimal polynomial must be monic");
    for (const auto& v : vars_)
        if (v == gen_)
            fail(errc::invalid_spec, "ExtDescriptor: generator name collides with a base variable");
    for (const auto& c : minpoly_) {
        if (c.field() != field_)
            fail(errc::descriptor_mismatch, "ExtDescriptor: coefficient field mismatch");
        if (c.num().uses_var(gen_) || c.den().uses_var(gen_))
            fail(errc::invalid_spec, "ExtDescriptor: minimal polynomial coefficient mentions the generator");
    }
}

bool ExtDescriptor::operator==(const ExtDescriptor& o) const {
    return field_ == o.field_ && vars_ == o.vars_ && gen_ == o.gen_ && minpoly_ == o.minpoly_;
}

std::string ExtDescriptor::minpoly_str() const {
    RatFunc acc = RatFunc::zero(field_);
    RatFunc g = RatFunc::variable(field_, gen_);
    for (size_t k = 0; k < minpoly_.size(); ++k)
        acc = acc + minpoly_[k] * g.pow(static_cast<long>(k));
    return acc.str();
}

std::string ExtDescriptor::str() const {
    std::string base = field_.str() + "(";
    for (size_t i = 0; i < vars_.size(); ++i) base += (i ? "," : "") + vars_[i];
    base += ")";
    return base + "(" + gen_ + ") mod " + minpoly_str();
}

ExtDescPtr make_ext_descriptor(const BaseField& field, std::vector<std::string> vars,
                               std::string gen, std::vector<RatFunc> minpoly) {
    return std::make_shared<const ExtDescriptor>(field, std::move(vars), std::move(gen),
                                                 std::move(minpoly));
}

// ---------------------------------------------------------------------------
// element construction / canonicalization
// ---------------------------------------------------------------------------

std::vector<RatFunc> ExtElem::reduce_poly(const ExtDescPtr& d, std::vector<RatFunc> raw) {
    const int deg = d->degree();
    const auto& mp = d->minpoly();
    for (const auto& c : raw) {
        if (c.field() != d->field())
            fail(errc::descriptor_mismatch, "ExtElem: coefficient field mismatch");
        if (c.num().uses_var(d->gen()) || c.den().uses_var(d->gen()))
            fail(errc::invalid_spec, "ExtElem: coefficient mentions the generator");
    }
    while (static_cast<int>(raw.size()) > deg) {
        RatFunc c = raw.back();
        raw.pop_back();
        const size_t n = raw.size(); // the removed monomial was gen^n, n >= deg
        for (int k = 0; k < deg; ++k)
            raw[n - static_cast<size_t>(deg) + static_cast<size_t>(k)] =
                raw[n - static_cast<size_t>(deg) + static_cast<size_t>(k)] - c * mp[static_cast<size_t>(k)];
    }
    while (static_cast<int>(raw.size()) < deg) raw.push_back(RatFunc::zero(d->field()));
    return raw;
}

ExtElem::ExtElem(ExtDescPtr desc, std::vector<RatFunc> coeffs)
    : desc_(std::move(desc)), c_(reduce_poly(desc_, std::move(coeffs))) {}

ExtElem ExtElem::zero(const ExtDescPtr& d) { return ExtElem(d, {}); }

ExtElem ExtElem::one(const ExtDescPtr& d) { return constant(d, RatFunc::one(d->field())); }

ExtElem ExtElem::constant(const ExtDescPtr& d, const RatFunc& c) { return ExtElem(d, {c}); }

ExtElem ExtElem::from_int(const ExtDescPtr& d, long n) {
    return constant(d, RatFunc::constant(d->field(), Rat(n)));
}

ExtElem ExtElem::generator(const ExtDescPtr& d) {
    return ExtElem(d, {RatFunc::zero(d->field()), RatFunc::one(d->field())});
}

bool ExtElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const RatFunc& c) { return c.is_zero(); });
}

bool ExtElem::is_one() const {
    if (!c_[0].is_one()) return false;
    for (size_t k = 1; k < c_.size(); ++k)
        if (!c_[k].is_zero()) return false;
    return true;
}

bool ExtElem::is_integral() const {
    return std::all_of(c_.begin(), c_.end(), [](const RatFunc& c) { return c.is_polynomial(); });
}

void ExtElem::check_same(const ExtElem& o) const {
    if (desc_ == o.desc_) return;
    if (*desc_ != *o.desc_)
        fail(errc::descriptor_mismatch,
             "ExtElem: operands live in " + desc_->str() + " and " + o.desc_->str());
}

// ---------------------------------------------------------------------------
// arithmetic
// ---------------------------------------------------------------------------

ExtElem ExtElem::operator+(const ExtElem& o) const {
    check_same(o);
    std::vector<RatFunc> r = c_;
    for (size_t k = 0; k < r.size(); ++k) r[k] = r[k] + o.c_[k];
    return ExtElem(desc_, std::move(r));
}

ExtElem ExtElem::operator-(const ExtElem& o) const {
    check_same(o);
    std::vector<RatFunc> r = c_;
    for (size_t k = 0; k < r.size(); ++k) r[k] = r[k] - o.c_[k];
    return ExtElem(desc_, std::move(r));
}

ExtElem ExtElem::operator*(const ExtElem& o) const {
    check_same(o);
    const size_t d = c_.size();
    std::vector<RatFunc> r(2 * d - 1, RatFunc::zero(field()));
    for (size_t x = 0; x < d; ++x) {
        if (c_[x].is_zero()) continue;
        for (size_t y = 0; y < d; ++y) {
            if (o.c_[y].is_zero()) continue;
            r[x + y] = r[x + y] + c_[x] * o.c_[y];
        }
    }
    return ExtElem(desc_, std::move(r));
}

ExtElem ExtElem::operator*(const RatFunc& s) const {
    std::vector<RatFunc> r = c_;
    for (auto& c : r) c = c * s;
    return ExtElem(desc_, std::move(r));
}

ExtElem ExtElem::operator/(const ExtElem& o) const {
    check_same(o);
    return *this * o.inv();
}

ExtElem ExtElem::operator-() const {
    std::vector<RatFunc> r = c_;
    for (auto& c : r) c = -c;
    return ExtElem(desc_, std::move(r));
}

bool ExtElem::operator==(const ExtElem& o) const {
    if (desc_ != o.desc_ && *desc_ != *o.desc_) return false;
    return c_ == o.c_;
}

namespace {

using Mat = std::vector<std::vector<RatFunc>>;

RatFunc det_of(const Mat& m) {
    const size_t n = m.size();
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/** Multiplication-by-x matrix: column j holds the coefficients of x * gen^j. */
Mat mult_matrix(const ExtElem& x) {
    const int d = x.descriptor()->degree();
    Mat m(static_cast<size_t>(d), std::vector<RatFunc>(static_cast<size_t>(d), RatFunc::zero(x.field())));
    ExtElem p = x;
    const ExtElem g = ExtElem::generator(x.descriptor());
    for (int j = 0; j < d; ++j) {
        for (int row = 0; row < d; ++row) m[static_cast<size_t>(row)][static_cast<size_t>(j)] = p.coeff(row);
        if (j + 1 < d) p = p * g;
    }
    return m;
}

} // namespace

RatFunc ExtElem::norm() const { return det_of(mult_matrix(*this)); }

RatFunc ExtElem::trace() const {
    Mat m = mult_matrix(*this);
    RatFunc t = RatFunc::zero(field());
    for (size_t k = 0; k < m.size(); ++k) t = t + m[k][k];
    return t;
}

ExtElem ExtElem::inv() const {
    if (is_zero()) fail(errc::division_by_zero, "ExtElem: inverse of zero");
    // Work on the denominator-free representative so Cramer's rule stays in
    // the polynomial ring until the single final division.
    auto [nums, shared_den] = integral_split();
    std::vector<RatFunc> ic;
    ic.reserve(nums.size());
    for (auto& p : nums) ic.emplace_back(std::move(p));
    ExtElem integral(desc_, std::move(ic));

    const int d = desc_->degree();
    Mat m = mult_matrix(integral);
    RatFunc det = det_of(m);
    if (det.is_zero()) fail(errc::division_by_zero, "ExtElem: zero norm, not invertible");
    // Cramer's rule on M * y = e0, then restore the cleared denominator.
    const RatFunc scale = RatFunc(shared_den) / det;
    std::vector<RatFunc> y;
    y.reserve(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        Mat mi = m;
        for (int row = 0; row < d; ++row)
            mi[static_cast<size_t>(row)][static_cast<size_t>(i)] =
                (row == 0) ? RatFunc::one(field()) : RatFunc::zero(field());
        y.push_back(det_of(mi) * scale);
    }
    return ExtElem(desc_, std::move(y));
}

ExtElem ExtElem::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    ExtElem acc = ExtElem::one(desc_), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

ExtElem ExtElem::subst_gen(const ExtElem& image) const {
    check_same(image);
    const int d = desc_->degree();
    ExtElem acc = ExtElem::constant(desc_, c_[static_cast<size_t>(d - 1)]);
    for (int k = d - 2; k >= 0; --k)
        acc = acc * image + ExtElem::constant(desc_, c_[static_cast<size_t>(k)]);
    return acc;
}

ExtElem ExtElem::map_coeffs(const std::function<RatFunc(const RatFunc&)>& f) const {
    std::vector<RatFunc> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(f(c));
    return ExtElem(desc_, std::move(r));
}

// ---------------------------------------------------------------------------
// canonical fraction form and printing
// ---------------------------------------------------------------------------

std::pair<std::vector<MultiPoly>, MultiPoly> ExtElem::integral_split() const {
    MultiPoly den = MultiPoly::constant(field(), 1);
    for (const auto& c : c_) {
        MultiPoly g = MultiPoly::gcd(den, c.den());
        den = MultiPoly::must_div(den * c.den(), g);
    }
    std::vector<MultiPoly> nums;
    nums.reserve(c_.size());
    for (const auto& c : c_)
        nums.push_back(c.num() * MultiPoly::must_div(den, c.den()));
    return {std::move(nums), std::move(den)};
}

std::string ExtElem::str() const {
    auto [nums, den] = integral_split();
    MultiPoly n = MultiPoly::zero(field());
    for (size_t k = 0; k < nums.size(); ++k) {
        if (nums[k].is_zero()) continue;
        n = n + (k == 0 ? nums[k]
                        : nums[k] * MultiPoly::variable(field(), desc_->gen(), static_cast<int>(k)));
    }
    return detail::fraction_str(n, den);
}

std::ostream& operator<<(std::ostream& os, const ExtElem& x) { return os << x.str(); }

// ---------------------------------------------------------------------------
// minimal polynomial
// ---------------------------------------------------------------------------

namespace {

/**
 * Solve A * lambda = b over the rational function field; returns the unique
 * solution when the columns of A are independent and the system is
 * consistent, nullopt otherwise.
 */
std::optional<std::vector<RatFunc>> solve_linear(Mat a, std::vector<RatFunc> b, const BaseField& f) {
    const size_t rows = a.size();
    const size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<int> pivot_row_of_col(cols, -1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pr = r;
        while (pr < rows && a[pr][c].is_zero()) ++pr;
        if (pr == rows) continue;
        std::swap(a[pr], a[r]);
        std::swap(b[pr], b[r]);
        RatFunc piv = a[r][c].inv();
        for (size_t cc = c; cc < cols; ++cc) a[r][cc] = a[r][cc] * piv;
        b[r] = b[r] * piv;
        for (size_t rr = 0; rr < rows; ++rr) {
            if (rr == r || a[rr][c].is_zero()) continue;
            RatFunc fac = a[rr][c];
            for (size_t cc = c; cc < cols; ++cc) a[rr][cc] = a[rr][cc] - fac * a[r][cc];
            b[rr] = b[rr] - fac * b[r];
        }
        pivot_row_of_col[c] = static_cast<int>(r);
        ++r;
    }
    for (size_t rr = 0; rr < rows; ++rr) {
        bool all_zero = true;
        for (size_t cc = 0; cc < cols; ++cc)
            if (!a[rr][cc].is_zero()) { all_zero = false; break; }
        if (all_zero && !b[rr].is_zero()) return std::nullopt;
    }
    std::vector<RatFunc> x(cols, RatFunc::zero(f));
    for (size_t c = 0; c < cols; ++c)
        if (pivot_row_of_col[c] >= 0) x[c] = b[static_cast<size_t>(pivot_row_of_col[c])];
    return x;
}

} // namespace

std::vector<RatFunc> min_poly_of(const ExtElem& x) {
    const int d = x.descriptor()->degree();
    const BaseField& f = x.field();
    std::vector<ExtElem> powers;
    powers.push_back(ExtElem::one(x.descriptor()));
    for (int k = 1; k <= d; ++k) powers.push_back(powers.back() * x);
    for (int m = 1; m <= d; ++m) {
        Mat a(static_cast<size_t>(d), std::vector<RatFunc>(static_cast<size_t>(m), RatFunc::zero(f)));
        std::vector<RatFunc> b(static_cast<size_t>(d), RatFunc::zero(f));
        for (int row = 0; row < d; ++row) {
            for (int j = 0; j < m; ++j)
                a[static_cast<size_t>(row)][static_cast<size_t>(j)] =
                    powers[static_cast<size_t>(j)].coeff(row);
            b[static_cast<size_t>(row)] = powers[static_cast<size_t>(m)].coeff(row);
        }
        if (auto sol = solve_linear(std::move(a), std::move(b), f)) {
            std::vector<RatFunc> mp;
            mp.reserve(static_cast<size_t>(m) + 1);
            for (int j = 0; j < m; ++j) mp.push_back(-(*sol)[static_cast<size_t>(j)]);
            mp.push_back(RatFunc::one(f));
            return mp;
        }
    }
    fail(errc::internal, "min_poly_of: no dependence up to the extension degree");
}

std::string poly_coeffs_str(const std::vector<RatFunc>& coeffs, const std::string& var) {
    if (coeffs.empty()) return "0";
    const BaseField& f = coeffs.front().field();
    RatFunc acc = RatFunc::zero(f);
    RatFunc t = RatFunc::variable(f, var);
    for (size_t k = 0; k < coeffs.size(); ++k) acc = acc + coeffs[k] * t.pow(static_cast<long>(k));
    return acc.str();
}

} // namespace freepairs
