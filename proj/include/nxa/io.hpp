/**
 * @file io.hpp
 * @brief Line-oriented text serialization for algebras and triple systems.
 *
 * The format is diff-able, bit-exact, and language-neutral:
 *
 *     # comments and blank lines are ignored
 *     kind algebra            (or: kind triple)
 *     dim 4
 *     meta family quaternion  (repeatable key/value pairs)
 *     unit 0 1                (algebra only: sparse entries of the unit)
 *     form 0 0 1              (triple only: sparse upper-triangle entries
 *                              of the symmetric bilinear form)
 *     0 0 0 1                 (sparse tensor entries: i j k v for algebras,
 *     0 1 1 1/2                i j k l v for triple systems)
 *
 * Indices are 0-based; only nonzero entries are listed; rationals are written
 * in lowest terms as "p" or "p/q".  Serialization is deterministic (metadata
 * sorted by key, entries in lexicographic index order), so round-trips are
 * byte-stable: serialize(parse(serialize(x))) == serialize(x).
 *
 * Parsing is strict: duplicate coordinates, zero values, out-of-range
 * indices, and malformed tokens are all rejected with the offending line
 * number in the message (std::invalid_argument).
 */
#pragma once

#include "nxa/algebra.hpp"
#include "nxa/rational.hpp"
#include "nxa/tensor.hpp"
#include "nxa/triple.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nxa {

/// Largest dimension the text format accepts (a dense rank-4 tensor at this
/// size is already ~17M rationals; anything bigger is outside desk scale).
inline constexpr int kMaxFileDim = 64;

/// In-memory image of a structure file: exactly one of the two tensors is
/// populated, according to kind.
struct StructureFile {
    enum class Kind { algebra, triple };

    Kind kind = Kind::algebra;
    std::vector<std::pair<std::string, std::string>> meta;
    std::optional<Vec> unit;  ///< algebra files only
    std::optional<Mat> form;  ///< triple files only
    Tensor3 alg;              ///< populated when kind == algebra
    Tensor4 trip;             ///< populated when kind == triple

    int dim() const { return kind == Kind::algebra ? alg.dim() : trip.dim(); }
};

inline StructureFile to_structure(const Algebra& a,
                                  std::vector<std::pair<std::string, std::string>> meta = {}) {
    StructureFile f;
    f.kind = StructureFile::Kind::algebra;
    f.meta = std::move(meta);
    f.unit = a.unit();
    f.alg = a.sc();
    return f;
}

inline StructureFile to_structure(const TripleSystem& t,
                                  std::vector<std::pair<std::string, std::string>> meta = {}) {
    StructureFile f;
    f.kind = StructureFile::Kind::triple;
    f.meta = std::move(meta);
    f.form = t.form();
    f.trip = t.tc();
    return f;
}

/// Rebuild the algebra (with its declared unit, if any); the constructor
/// re-validates the unit. Throws std::invalid_argument on a triple file.
inline Algebra algebra_from_structure(const StructureFile& f) {
    if (f.kind != StructureFile::Kind::algebra)
        throw std::invalid_argument("algebra_from_structure: the file holds a triple system");
    return Algebra(f.alg, f.unit);
}

/// Rebuild the triple system (with its declared form, if any). Throws
/// std::invalid_argument on an algebra file.
inline TripleSystem triple_from_structure(const StructureFile& f) {
    if (f.kind != StructureFile::Kind::triple)
        throw std::invalid_argument("triple_from_structure: the file holds an algebra");
    return TripleSystem(f.trip, f.form);
}

/// Deterministic text rendering of the structure (see the file comment for
/// the grammar). Always ends with a newline.
inline std::string serialize(const StructureFile& f) {
    std::ostringstream os;
    int n = f.dim();
    os << "kind " << (f.kind == StructureFile::Kind::algebra ? "algebra" : "triple") << "\n";
    os << "dim " << n << "\n";

    std::vector<std::pair<std::string, std::string>> meta = f.meta;
    std::stable_sort(meta.begin(), meta.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [k, v] : meta) os << "meta " << k << " " << v << "\n";

    if (f.unit) {
        for (int i = 0; i < n; ++i) {
            const Scalar& v = (*f.unit)[static_cast<std::size_t>(i)];
            if (v != 0) os << "unit " << i << " " << scalar_to_string(v) << "\n";
        }
    }
    if (f.form) {
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                const Scalar& v = (*f.form)(i, j);
                if (v != 0) os << "form " << i << " " << j << " " << scalar_to_string(v) << "\n";
            }
    }

    if (f.kind == StructureFile::Kind::algebra) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    const Scalar& v = f.alg(i, j, k);
                    if (v != 0)
                        os << i << " " << j << " " << k << " " << scalar_to_string(v) << "\n";
                }
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) {
                        const Scalar& v = f.trip(i, j, k, l);
                        if (v != 0)
                            os << i << " " << j << " " << k << " " << l << " "
                               << scalar_to_string(v) << "\n";
                    }
    }
    return os.str();
}

namespace detail {

inline std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

[[noreturn]] inline void parse_fail(int line_no, const std::string& msg) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": " + msg);
}

inline int parse_index(const std::string& tok, int line_no, const char* what) {
    if (tok.empty() || tok.size() > 9) parse_fail(line_no, std::string("malformed ") + what + " '" + tok + "'");
    for (char c : tok)
        if (c < '0' || c > '9') parse_fail(line_no, std::string("malformed ") + what + " '" + tok + "'");
    return std::stoi(tok);
}

inline Scalar parse_value(const std::string& tok, int line_no) {
    try {
        return parse_scalar(tok);
    } catch (const std::invalid_argument& e) {
        parse_fail(line_no, e.what());
    }
}

}  // namespace detail

/// Parse the text format back into a StructureFile.  The header lines `kind`
/// and `dim` must come first (in that order); `meta`, `unit`, and `form`
/// lines may then appear in any order, interleaved with bare tensor-entry
/// lines.  Throws std::invalid_argument with the 1-based line number on any
/// malformed, duplicate, out-of-range, or zero-valued entry.
inline StructureFile parse_structure(const std::string& text) {
    StructureFile f;
    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    bool have_kind = false, have_dim = false;
    int n = 0;
    std::vector<bool> unit_seen, form_seen, entry_seen;

    while (std::getline(is, line)) {
        ++line_no;
        std::vector<std::string> t = detail::split_tokens(line);
        if (t.empty() || t[0][0] == '#') continue;

        if (!have_kind) {
            if (t[0] != "kind") detail::parse_fail(line_no, "expected 'kind algebra' or 'kind triple' first");
            if (t.size() != 2 || (t[1] != "algebra" && t[1] != "triple"))
                detail::parse_fail(line_no, "kind must be 'algebra' or 'triple'");
            f.kind = (t[1] == "algebra") ? StructureFile::Kind::algebra : StructureFile::Kind::triple;
            have_kind = true;
            continue;
        }
        if (!have_dim) {
            if (t[0] != "dim" || t.size() != 2) detail::parse_fail(line_no, "expected 'dim <n>' after kind");
            n = detail::parse_index(t[1], line_no, "dimension");
            if (n < 1 || n > kMaxFileDim)
                detail::parse_fail(line_no, "dimension out of range (1.." + std::to_string(kMaxFileDim) + ")");
            have_dim = true;
            std::size_t nn = static_cast<std::size_t>(n);
            if (f.kind == StructureFile::Kind::algebra) {
                f.alg = Tensor3(n);
                entry_seen.assign(nn * nn * nn, false);
            } else {
                f.trip = Tensor4(n);
                entry_seen.assign(nn * nn * nn * nn, false);
            }
            continue;
        }

        if (t[0] == "kind" || t[0] == "dim") detail::parse_fail(line_no, "duplicate header line '" + t[0] + "'");

        if (t[0] == "meta") {
            if (t.size() < 3) detail::parse_fail(line_no, "meta needs a key and a value");
            std::string value = t[2];
            for (std::size_t i = 3; i < t.size(); ++i) value += " " + t[i];
            f.meta.emplace_back(t[1], value);
            continue;
        }

        if (t[0] == "unit") {
            if (f.kind != StructureFile::Kind::algebra)
                detail::parse_fail(line_no, "unit lines belong to algebra files only");
            if (t.size() != 3) detail::parse_fail(line_no, "unit line must be 'unit <i> <value>'");
            int i = detail::parse_index(t[1], line_no, "index");
            if (i >= n) detail::parse_fail(line_no, "unit index out of range");
            Scalar v = detail::parse_value(t[2], line_no);
            if (v == 0) detail::parse_fail(line_no, "zero entry (omit zero entries)");
            if (!f.unit) {
                f.unit = Vec(static_cast<std::size_t>(n));
                unit_seen.assign(static_cast<std::size_t>(n), false);
            }
            if (unit_seen[static_cast<std::size_t>(i)]) detail::parse_fail(line_no, "duplicate unit entry");
            unit_seen[static_cast<std::size_t>(i)] = true;
            (*f.unit)[static_cast<std::size_t>(i)] = v;
            continue;
        }

        if (t[0] == "form") {
            if (f.kind != StructureFile::Kind::triple)
                detail::parse_fail(line_no, "form lines belong to triple files only");
            if (t.size() != 4) detail::parse_fail(line_no, "form line must be 'form <i> <j> <value>'");
            int i = detail::parse_index(t[1], line_no, "index");
            int j = detail::parse_index(t[2], line_no, "index");
            if (i >= n || j >= n) detail::parse_fail(line_no, "form index out of range");
            Scalar v = detail::parse_value(t[3], line_no);
            if (v == 0) detail::parse_fail(line_no, "zero entry (omit zero entries)");
            if (!f.form) {
                f.form = Mat(n, n);
                form_seen.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), false);
            }
            std::size_t a = static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j);
            std::size_t b = static_cast<std::size_t>(j) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i);
            if (form_seen[a] || form_seen[b]) detail::parse_fail(line_no, "duplicate form entry");
            form_seen[a] = form_seen[b] = true;
            (*f.form)(i, j) = v;
            (*f.form)(j, i) = v;
            continue;
        }

        // Bare tensor-entry line.
        std::size_t want = (f.kind == StructureFile::Kind::algebra) ? 4u : 5u;
        bool entry_like = (t[0][0] >= '0' && t[0][0] <= '9') || t[0][0] == '-';
        if (!entry_like) detail::parse_fail(line_no, "unknown keyword '" + t[0] + "'");
        if (t.size() != want)
            detail::parse_fail(line_no, "tensor entry needs " + std::to_string(want - 1) +
                                            " indices and a value");
        std::vector<int> ix;
        for (std::size_t p = 0; p + 1 < t.size(); ++p) {
            int i = detail::parse_index(t[p], line_no, "index");
            if (i >= n) detail::parse_fail(line_no, "tensor index out of range");
            ix.push_back(i);
        }
        Scalar v = detail::parse_value(t.back(), line_no);
        if (v == 0) detail::parse_fail(line_no, "zero entry (omit zero entries)");
        std::size_t flat = 0;
        for (int i : ix) flat = flat * static_cast<std::size_t>(n) + static_cast<std::size_t>(i);
        if (entry_seen[flat]) detail::parse_fail(line_no, "duplicate tensor entry");
        entry_seen[flat] = true;
        if (f.kind == StructureFile::Kind::algebra)
            f.alg(ix[0], ix[1], ix[2]) = v;
        else
            f.trip(ix[0], ix[1], ix[2], ix[3]) = v;
    }

    if (!have_kind) throw std::invalid_argument("line 1: empty file (expected 'kind ...')");
    if (!have_dim) throw std::invalid_argument("line " + std::to_string(line_no + 1) + ": missing 'dim' line");
    return f;
}

}  // namespace nxa
