/**
 * @file check.hpp
 * @brief Common result type for exact identity checks.
 *
 * Every polynomial-identity check in the library either passes or returns a
 * concrete counterexample: the name of the identity instance that failed and
 * the basis indices of a witnessing tuple.  All checks are exact; there are
 * no tolerances anywhere.
 */
#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace nxa {

/// Outcome of an exact identity check, with a counterexample on failure.
struct CheckResult {
    bool ok = true;
    std::string check;         ///< identity that was checked (or that failed)
    std::vector<int> witness;  ///< basis indices of a failing tuple (empty on pass)
    std::string detail;        ///< human-readable elaboration

    explicit operator bool() const { return ok; }

    static CheckResult pass(std::string name) {
        CheckResult r;
        r.ok = true;
        r.check = std::move(name);
        return r;
    }

    static CheckResult fail(std::string name, std::vector<int> witness, std::string detail = {}) {
        CheckResult r;
        r.ok = false;
        r.check = std::move(name);
        r.witness = std::move(witness);
        r.detail = std::move(detail);
        return r;
    }

    /// "pass: <check>" or "FAIL: <check> at (i,j,...) -- detail".
    std::string describe() const {
        std::ostringstream os;
        if (ok) {
            os << "pass: " << check;
        } else {
            os << "FAIL: " << check;
            if (!witness.empty()) {
                os << " at (";
                for (std::size_t i = 0; i < witness.size(); ++i) {
                    if (i) os << ",";
                    os << witness[i];
                }
                os << ")";
            }
            if (!detail.empty()) os << " -- " << detail;
        }
        return os.str();
    }
};

}  // namespace nxa
