#pragma once

#include <functional>
#include <vector>

#include "freepairs/extension.hpp"

namespace freepairs {

/**
 * Square matrix of size 2 or 3 whose entries all live in one field
 * extension.  Inverses go through the adjugate so everything stays exact.
 */
class SqMatrix {
public:
    SqMatrix(ExtDescPtr desc, int n); // zero matrix
    static SqMatrix identity(const ExtDescPtr& desc, int n);
    static SqMatrix from_rows(std::vector<std::vector<ExtElem>> rows);
    static SqMatrix diag(const std::vector<ExtElem>& entries);

    int size() const { return n_; }
    const ExtDescPtr& descriptor() const { return desc_; }
    const ExtElem& at(int r, int c) const { return e_.at(idx(r, c)); }
    void set(int r, int c, const ExtElem& v);

    SqMatrix operator+(const SqMatrix& o) const;
    SqMatrix operator-(const SqMatrix& o) const;
    SqMatrix operator*(const SqMatrix& o) const;
    SqMatrix operator*(const ExtElem& s) const;
    SqMatrix operator-() const;
    bool operator==(const SqMatrix& o) const;
    bool operator!=(const SqMatrix& o) const { return !(*this == o); }

    ExtElem det() const;
    SqMatrix inv() const; // errors: SINGULAR_MATRIX
    SqMatrix pow(long e) const; // negative exponents via inv()
    SqMatrix transpose() const;
    bool is_diagonal() const;

    /** Entrywise image; the result adopts the descriptor of the mapped entries. */
    SqMatrix map(const std::function<ExtElem(const ExtElem&)>& f) const;

    std::string str() const;

private:
    size_t idx(int r, int c) const { return static_cast<size_t>(r * n_ + c); }
    void check_same(const SqMatrix& o) const;

    ExtDescPtr desc_;
    int n_;
    std::vector<ExtElem> e_;
};

std::ostream& operator<<(std::ostream& os, const SqMatrix& m);

} // namespace freepairs
