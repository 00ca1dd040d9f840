#include "freepairs/freeness.hpp"

#include <random>
#include <sstream>

#include "freepairs/errors.hpp"

namespace freepairs {

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::CERTIFIED: return "CERTIFIED";
    case Verdict::FAILED: return "FAILED";
    case Verdict::INAPPLICABLE: return "INAPPLICABLE";
    }
    return "?";
}

const char* strength_name(Strength s) {
    switch (s) {
    case Strength::EXACT_PAIR: return "EXACT_PAIR";
    case Strength::SUBGROUP_WITNESS: return "SUBGROUP_WITNESS";
    }
    return "?";
}

namespace {

std::string opt_str(const std::optional<long>& v) {
    return v ? std::to_string(*v) : "inf";
}

std::string opt_json(const std::optional<long>& v) {
    return v ? std::to_string(*v) : "null";
}

std::string list_str(const std::vector<std::optional<long>>& vs,
                     std::string (*f)(const std::optional<long>&), const char* open,
                     const char* close) {
    std::string out = open;
    for (size_t k = 0; k < vs.size(); ++k) {
        if (k) out += ", ";
        out += f(vs[k]);
    }
    out += close;
    return out;
}

std::string grid_str(const std::vector<std::vector<std::optional<long>>>& rows,
                     std::string (*f)(const std::optional<long>&)) {
    std::string out = "[";
    for (size_t r = 0; r < rows.size(); ++r) {
        if (r) out += ", ";
        out += list_str(rows[r], f, "[", "]");
    }
    out += "]";
    return out;
}

bool unique_extreme(const std::vector<long>& vs, bool maximum) {
    long best = vs[0];
    int hits = 0;
    for (long v : vs) {
        if (maximum ? v > best : v < best) best = v;
    }
    for (long v : vs)
        if (v == best) ++hits;
    return hits == 1;
}

} // namespace

std::string FreenessCertificate::str() const {
    std::ostringstream os;
    os << "place " << place_name << ": " << verdict_name(verdict) << " ["
       << strength_name(strength) << "] for " << pair_description << "\n";
    os << "  eigen valuations: " << list_str(eigen_valuations, opt_str, "(", ")") << "\n";
    os << "  B entry valuations: " << grid_str(b_valuations, opt_str) << "\n";
    os << "  B^-1 entry valuations: " << grid_str(binv_valuations, opt_str) << "\n";
    os << "  reason: " << reason;
    return os.str();
}

std::string FreenessCertificate::json() const {
    std::ostringstream os;
    os << "{\"place\": \"" << place_name << "\", ";
    os << "\"eigen_valuations\": " << list_str(eigen_valuations, opt_json, "[", "]") << ", ";
    os << "\"B_valuations\": " << grid_str(b_valuations, opt_json) << ", ";
    os << "\"Binv_valuations\": " << grid_str(binv_valuations, opt_json) << ", ";
    os << "\"verdict\": \"" << verdict_name(verdict) << "\", ";
    os << "\"strength\": \"" << strength_name(strength) << "\"}";
    return os.str();
}

namespace {

std::optional<long> valuation_or_inf(const Place& pl, const ExtElem& x) {
    if (x.is_zero()) return std::nullopt;
    return pl.valuation_of(x);
}

std::vector<std::vector<std::optional<long>>> entry_valuations(const Place& pl,
                                                               const SqMatrix& m) {
    std::vector<std::vector<std::optional<long>>> rows;
    for (int r = 0; r < m.size(); ++r) {
        std::vector<std::optional<long>> row;
        for (int c = 0; c < m.size(); ++c) row.push_back(valuation_or_inf(pl, m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

bool all_zero(const std::vector<std::vector<std::optional<long>>>& rows) {
    for (const auto& row : rows)
        for (const auto& v : row)
            if (!v || *v != 0) return false;
    return true;
}

} // namespace

FreenessCertificate certify(const SqMatrix& a, const SqMatrix& b, const Place& pl,
                            Strength strength) {
    FreenessCertificate cert;
    cert.place_name = pl.name();
    cert.strength = strength;

    if (!a.is_diagonal()) {
        cert.verdict = Verdict::INAPPLICABLE;
        cert.reason = "A is not diagonal; no diagonalization is attempted";
        return cert;
    }
    for (int k = 0; k < a.size(); ++k)
        cert.eigen_valuations.push_back(valuation_or_inf(pl, a.at(k, k)));
    cert.b_valuations = entry_valuations(pl, b);

    std::vector<long> eigen;
    for (const auto& v : cert.eigen_valuations) {
        if (!v) {
            cert.verdict = Verdict::FAILED;
            cert.reason = "A has a zero diagonal entry";
            return cert;
        }
        eigen.push_back(*v);
    }

    try {
        cert.binv_valuations = entry_valuations(pl, b.inv());
    } catch (const error& e) {
        if (e.code() != errc::singular_matrix) throw;
        cert.verdict = Verdict::FAILED;
        cert.reason = "B is singular";
        return cert;
    }

    if (!unique_extreme(eigen, true)) {
        cert.verdict = Verdict::FAILED;
        cert.reason = "no unique maximal eigen valuation";
    } else if (!unique_extreme(eigen, false)) {
        cert.verdict = Verdict::FAILED;
        cert.reason = "no unique minimal eigen valuation";
    } else if (!all_zero(cert.b_valuations)) {
        cert.verdict = Verdict::FAILED;
        cert.reason = "an entry of B has nonzero valuation";
    } else if (!all_zero(cert.binv_valuations)) {
        cert.verdict = Verdict::FAILED;
        cert.reason = "an entry of B^-1 has nonzero valuation";
    } else {
        cert.verdict = Verdict::CERTIFIED;
        cert.reason = "unique extreme eigen valuations and unit entries of B, B^-1";
    }
    return cert;
}

namespace {

std::string word_str(const std::vector<int>& letters) {
    // letters: 0 = g, 1 = g^-1, 2 = h, 3 = h^-1
    std::ostringstream os;
    size_t p = 0;
    bool first = true;
    while (p < letters.size()) {
        size_t q = p;
        while (q < letters.size() && letters[q] == letters[p]) ++q;
        long e = static_cast<long>(q - p);
        if (letters[p] & 1) e = -e;
        if (!first) os << " ";
        first = false;
        os << (letters[p] < 2 ? "g" : "h");
        if (e != 1) os << "^" << e;
        p = q;
    }
    return os.str();
}

} // namespace

std::string WordSampleReport::str() const {
    std::ostringstream os;
    os << "sampled " << count << " reduced words (length <= " << max_len << ", seed "
       << seed << ") in " << generators << ": ";
    if (passed()) {
        os << "no identity words";
    } else {
        os << failures.size() << " identity words, first: " << failures.front();
    }
    return os.str();
}

WordSampleReport sample_words(const SqMatrix& g, const SqMatrix& h, int max_len, int count,
                              unsigned long long seed) {
    if (max_len < 1) fail(errc::invalid_spec, "word length bound must be positive");
    WordSampleReport rep;
    rep.generators = "{g, h} in GL(" + std::to_string(g.size()) + ")";
    rep.max_len = max_len;
    rep.count = count;
    rep.seed = seed;

    const SqMatrix gens[4] = {g, g.inv(), h, h.inv()};
    const SqMatrix id = SqMatrix::identity(g.descriptor(), g.size());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len_d(1, max_len), first_d(0, 3), next_d(0, 2);

    for (int w = 0; w < count; ++w) {
        const int len = len_d(rng);
        std::vector<int> letters;
        letters.reserve(static_cast<size_t>(len));
        int prev = -1;
        for (int p = 0; p < len; ++p) {
            int c;
            if (p == 0) {
                c = first_d(rng);
            } else {
                c = next_d(rng);
                if (c >= (prev ^ 1)) ++c; // skip the cancelling letter
            }
            letters.push_back(c);
            prev = c;
        }
        SqMatrix acc = id;
        for (int c : letters) acc = acc * gens[c];
        if (acc == id) rep.failures.push_back(word_str(letters));
    }
    return rep;
}

} // namespace freepairs
