#include "freepairs/matrix.hpp"

#include <ostream>

namespace freepairs {

namespace {
size_t checked_dim(int n) {
    if (n != 2 && n != 3) fail(errc::invalid_spec, "SqMatrix: size must be 2 or 3");
    return static_cast<size_t>(n * n);
}
} // namespace

SqMatrix::SqMatrix(ExtDescPtr desc, int n)
    : desc_(std::move(desc)), n_(n), e_(checked_dim(n), ExtElem::zero(desc_)) {}

SqMatrix SqMatrix::identity(const ExtDescPtr& desc, int n) {
    SqMatrix m(desc, n);
    for (int k = 0; k < n; ++k) m.set(k, k, ExtElem::one(desc));
    return m;
}

SqMatrix SqMatrix::from_rows(std::vector<std::vector<ExtElem>> rows) {
    const int n = static_cast<int>(rows.size());
    if (n != 2 && n != 3) fail(errc::invalid_spec, "SqMatrix: size must be 2 or 3");
    SqMatrix m(rows[0][0].descriptor(), n);
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(rows[static_cast<size_t>(r)].size()) != n)
            fail(errc::invalid_spec, "SqMatrix: ragged rows");
        for (int c = 0; c < n; ++c) m.set(r, c, rows[static_cast<size_t>(r)][static_cast<size_t>(c)]);
    }
    return m;
}

SqMatrix SqMatrix::diag(const std::vector<ExtElem>& entries) {
    const int n = static_cast<int>(entries.size());
    if (n != 2 && n != 3) fail(errc::invalid_spec, "SqMatrix: size must be 2 or 3");
    SqMatrix m(entries[0].descriptor(), n);
    for (int k = 0; k < n; ++k) m.set(k, k, entries[static_cast<size_t>(k)]);
    return m;
}

void SqMatrix::set(int r, int c, const ExtElem& v) {
    if (*v.descriptor() != *desc_)
        fail(errc::descriptor_mismatch, "SqMatrix: entry descriptor differs from the matrix descriptor");
    e_.at(idx(r, c)) = v;
}

void SqMatrix::check_same(const SqMatrix& o) const {
    if (n_ != o.n_) fail(errc::descriptor_mismatch, "SqMatrix: size mismatch");
    if (desc_ != o.desc_ && *desc_ != *o.desc_)
        fail(errc::descriptor_mismatch, "SqMatrix: descriptor mismatch");
}

SqMatrix SqMatrix::operator+(const SqMatrix& o) const {
    check_same(o);
    SqMatrix m = *this;
    for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = m.e_[k] + o.e_[k];
    return m;
}

SqMatrix SqMatrix::operator-(const SqMatrix& o) const {
    check_same(o);
    SqMatrix m = *this;
    for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = m.e_[k] - o.e_[k];
    return m;
}

SqMatrix SqMatrix::operator*(const SqMatrix& o) const {
    check_same(o);
    SqMatrix m(desc_, n_);
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) {
            ExtElem s = ExtElem::zero(desc_);
            for (int k = 0; k < n_; ++k) s = s + at(r, k) * o.at(k, c);
            m.set(r, c, s);
        }
    return m;
}

SqMatrix SqMatrix::operator*(const ExtElem& s) const {
    SqMatrix m = *this;
    for (auto& x : m.e_) x = x * s;
    return m;
}

SqMatrix SqMatrix::operator-() const {
    SqMatrix m = *this;
    for (auto& x : m.e_) x = -x;
    return m;
}

bool SqMatrix::operator==(const SqMatrix& o) const {
    if (n_ != o.n_) return false;
    if (desc_ != o.desc_ && *desc_ != *o.desc_) return false;
    return e_ == o.e_;
}

ExtElem SqMatrix::det() const {
    if (n_ == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

SqMatrix SqMatrix::inv() const {
    // Clear the shared entry denominator first: the adjugate of an integral
    // matrix stays in the polynomial ring, and only the final scaling divides.
    MultiPoly shared = MultiPoly::constant(desc_->field(), 1);
    for (const ExtElem& e : e_) {
        MultiPoly d = e.integral_split().second;
        shared = MultiPoly::must_div(shared * d, MultiPoly::gcd(shared, d));
    }
    const RatFunc clear{shared};
    SqMatrix w = clear.is_one() ? *this : map([&](const ExtElem& e) { return e * clear; });

    ExtElem d = w.det();
    if (d.is_zero()) fail(errc::singular_matrix, "SqMatrix: determinant is zero");
    ExtElem di = d.inv() * clear;
    SqMatrix m(desc_, n_);
    if (n_ == 2) {
        m.set(0, 0, w.at(1, 1) * di);
        m.set(0, 1, -w.at(0, 1) * di);
        m.set(1, 0, -w.at(1, 0) * di);
        m.set(1, 1, w.at(0, 0) * di);
        return m;
    }
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            // adjugate: cofactor of (c, r)
            int r0 = (c + 1) % 3, r1 = (c + 2) % 3;
            int c0 = (r + 1) % 3, c1 = (r + 2) % 3;
            ExtElem cof = w.at(r0, c0) * w.at(r1, c1) - w.at(r0, c1) * w.at(r1, c0);
            m.set(r, c, cof * di);
        }
    return m;
}

SqMatrix SqMatrix::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    SqMatrix acc = identity(desc_, n_), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

SqMatrix SqMatrix::transpose() const {
    SqMatrix m(desc_, n_);
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) m.set(c, r, at(r, c));
    return m;
}

bool SqMatrix::is_diagonal() const {
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c)
            if (r != c && !at(r, c).is_zero()) return false;
    return true;
}

SqMatrix SqMatrix::map(const std::function<ExtElem(const ExtElem&)>& f) const {
    std::vector<std::vector<ExtElem>> rows;
    rows.reserve(static_cast<size_t>(n_));
    for (int r = 0; r < n_; ++r) {
        std::vector<ExtElem> row;
        row.reserve(static_cast<size_t>(n_));
        for (int c = 0; c < n_; ++c) row.push_back(f(at(r, c)));
        rows.push_back(std::move(row));
    }
    return from_rows(std::move(rows));
}

std::string SqMatrix::str() const {
    std::string s = "[";
    for (int r = 0; r < n_; ++r) {
        s += (r ? ", [" : "[");
        for (int c = 0; c < n_; ++c) s += (c ? ", " : "") + at(r, c).str();
        s += "]";
    }
    return s + "]";
}

std::ostream& operator<<(std::ostream& os, const SqMatrix& m) { return os << m.str(); }

} // namespace freepairs
