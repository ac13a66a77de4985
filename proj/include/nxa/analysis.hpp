/**
 * @file analysis.hpp
 * @brief Structural analysis: ideal closures, a three-valued simplicity
 *        certifier, and a basis-independent invariant report.
 *
 * The simplicity certifier never guesses: "simple" is backed by an exact
 * certificate (the multiplication operators span the full matrix algebra, or
 * a corank-one element of that envelope whose kernel vector spins to the full
 * space under both the action and its transpose), "not simple" is backed by
 * an explicit proper invariant subspace, and everything else is reported as
 * "unknown".  All randomness is drawn from a fixed-seed generator, so every
 * run of the same input is identical.
 */
#pragma once

#include "nxa/algebra.hpp"
#include "nxa/quadratic.hpp"
#include "nxa/triple.hpp"

#include <deque>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nxa {

/// A subspace closed under the structure's multiplication operators, produced
/// either as the closure of a seed vector or as a certificate by the
/// simplicity pipeline.
struct IdealReport {
    std::string generator_description;
    int closure_dim = 0;
    bool is_proper = false;      ///< true iff 0 < closure_dim < ambient dim
    std::vector<Vec> basis;      ///< echelonized basis of the subspace
};

enum class Simplicity { simple, not_simple, unknown };

struct SimplicityVerdict {
    Simplicity verdict = Simplicity::unknown;
    std::optional<IdealReport> witness;  ///< proper ideal, present iff not_simple found one
    std::string certificate_note;

    bool is_simple() const { return verdict == Simplicity::simple; }
};

inline const char* to_string(Simplicity s) {
    switch (s) {
        case Simplicity::simple: return "simple";
        case Simplicity::not_simple: return "not_simple";
        default: return "unknown";
    }
}

namespace detail {

/// Multiplication operators whose invariant subspaces are exactly the ideals:
/// all left and right multiplications by basis vectors.
inline std::vector<Mat> multiplication_ops(const Algebra& a) {
    std::vector<Mat> ops;
    for (int i = 0; i < a.dim(); ++i) {
        Vec e = unit_vec(a.dim(), i);
        ops.push_back(a.left_mult(e));
        ops.push_back(a.right_mult(e));
    }
    return ops;
}

/// Slot operators for a triple system: z -> e_i e_j z, z -> e_i z e_j and
/// z -> z e_i e_j for all basis pairs.  Invariant subspaces are exactly the
/// subspaces closed under products with arbitrary pairs in the other slots.
inline std::vector<Mat> slot_ops(const TripleSystem& t) {
    std::vector<Mat> ops;
    for (int i = 0; i < t.dim(); ++i)
        for (int j = 0; j < t.dim(); ++j) {
            ops.push_back(t.l_op(i, j));
            ops.push_back(t.middle_op(i, j));
            ops.push_back(t.right_op(i, j));
        }
    return ops;
}

inline IdealReport closure_report(const std::vector<Mat>& ops, int n, const Vec& seed, std::string description) {
    std::vector<Vec> basis = span_closure({seed}, ops, n, n);
    IdealReport rep;
    rep.generator_description = std::move(description);
    rep.closure_dim = static_cast<int>(basis.size());
    rep.is_proper = rep.closure_dim > 0 && rep.closure_dim < n;
    rep.basis = std::move(basis);
    return rep;
}

inline Vec flatten(const Mat& m) {
    Vec v(static_cast<std::size_t>(m.rows()) * static_cast<std::size_t>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            v[static_cast<std::size_t>(i * m.cols() + j)] = m(i, j);
    return v;
}

inline Mat unflatten(const Vec& v, int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = v[static_cast<std::size_t>(i * n + j)];
    return m;
}

/// Rational roots of the characteristic polynomial, found by bounded divisor
/// enumeration after clearing denominators.  Best effort: a root missed here
/// only means a certificate is not found, never a wrong verdict.
inline std::vector<Scalar> rational_eigenvalues(const std::vector<Scalar>& cp) {
    std::vector<Scalar> out;
    // Strip the zero root: lambda = 0 iff the constant coefficient vanishes.
    std::size_t low = 0;
    while (low < cp.size() && cp[low] == 0) ++low;
    if (low > 0) out.push_back(Scalar(0));
    if (low >= cp.size()) return out;

    mpz_class denom_lcm = 1;
    for (std::size_t k = low; k < cp.size(); ++k) {
        mpz_class d = cp[k].get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), denom_lcm.get_mpz_t(), d.get_mpz_t());
        denom_lcm = denom_lcm / g * d;
    }
    mpq_class a0q = cp[low] * denom_lcm;
    mpq_class anq = cp[cp.size() - 1] * denom_lcm;
    a0q.canonicalize();
    anq.canonicalize();
    mpz_class a0 = abs(a0q.get_num());
    mpz_class an = abs(anq.get_num());

    auto divisors = [](const mpz_class& z) {
        std::vector<mpz_class> ds;
        if (z == 0) return ds;
        for (mpz_class d = 1; d * d <= z && d <= 1000000 && ds.size() < 400; ++d)
            if (z % d == 0) {
                ds.push_back(d);
                if (d * d != z) ds.push_back(z / d);
            }
        return ds;
    };
    std::vector<mpz_class> ps = divisors(a0);
    std::vector<mpz_class> qs = divisors(an);
    for (const mpz_class& p : ps)
        for (const mpz_class& q : qs)
            for (int sign = -1; sign <= 1; sign += 2) {
                Scalar lambda(sign * mpq_class(p, q));
                lambda.canonicalize();
                Scalar v = 0;
                for (std::size_t k = cp.size(); k-- > low;) v = v * lambda + cp[k];
                if (v == 0) {
                    bool seen = false;
                    for (const Scalar& s : out) seen = seen || s == lambda;
                    if (!seen) out.push_back(lambda);
                }
            }
    return out;
}

/// The full certification pipeline over an arbitrary set of multiplication
/// operators.  See the file comment for the exact meaning of each verdict.
/// The seed drives only the random probes; the rest is deterministic.
inline SimplicityVerdict certify_via_ops(const std::vector<Mat>& ops, int n, int probe_budget,
                                         unsigned long long seed = 1729) {
    if (probe_budget < 0) throw std::invalid_argument("certify_simplicity: negative probe budget");
    SimplicityVerdict out;

    // Stage 1: deterministic basis probes.
    for (int i = 0; i < n; ++i) {
        IdealReport rep = closure_report(ops, n, unit_vec(n, i),
                                         "closure of basis vector " + std::to_string(i));
        if (rep.is_proper) {
            out.verdict = Simplicity::not_simple;
            out.witness = std::move(rep);
            out.certificate_note = "a basis-vector closure is a proper ideal";
            return out;
        }
    }

    bool all_zero = true;
    for (const Mat& op : ops) all_zero = all_zero && op.is_zero();
    if (all_zero) {
        out.verdict = Simplicity::not_simple;
        out.certificate_note = "every product vanishes, so every subspace is an ideal";
        return out;
    }

    // Stage 2: seeded random probes (fixed generator, reproducible runs).
    std::mt19937_64 rng(seed);
    for (int p = 0; p < probe_budget; ++p) {
        Vec seed(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            seed[static_cast<std::size_t>(i)] = Scalar(static_cast<int>(rng() % 5) - 2);
        if (is_zero(seed)) continue;
        IdealReport rep = closure_report(ops, n, seed, "closure of random probe " + std::to_string(p));
        if (rep.is_proper) {
            out.verdict = Simplicity::not_simple;
            out.witness = std::move(rep);
            out.certificate_note = "a random-probe closure is a proper ideal";
            return out;
        }
    }

    // Stage 3: the unital envelope of the operators inside End(V), built on
    // the flattened matrix space.  Spanning everything certifies simplicity
    // outright, since every ideal is an invariant subspace of the envelope.
    int nn = n * n;
    SpanBuilder env(nn);
    std::deque<Mat> work;
    env.add(flatten(Mat::identity(n)));
    work.push_back(Mat::identity(n));
    while (!work.empty() && env.rank() < nn) {
        Mat m = std::move(work.front());
        work.pop_front();
        for (const Mat& g : ops) {
            Mat p = g * m;
            if (env.add(flatten(p))) {
                work.push_back(std::move(p));
                if (env.rank() >= nn) break;
            }
        }
    }
    if (env.rank() == nn) {
        out.verdict = Simplicity::simple;
        out.certificate_note = "the multiplication operators generate the full matrix algebra";
        return out;
    }

    // Stage 4: hunt for a singular envelope element.  Any rational eigenvalue
    // lambda of an envelope element m yields the singular element m - lambda.
    // A proper spin of a kernel vector (or of a transposed-kernel vector,
    // through its annihilator) is a proper ideal; a corank-one element whose
    // primal and dual kernel vectors both spin to the full space certifies
    // that no proper nonzero invariant subspace exists.
    std::vector<Mat> tops;
    for (const Mat& g : ops) tops.push_back(g.transpose());

    std::vector<Mat> candidates;
    for (const Vec& row : env.basis()) candidates.push_back(unflatten(row, n));
    for (int p = 0; p < probe_budget; ++p) {
        Mat combo(n, n);
        for (const Vec& row : env.basis()) {
            Scalar c = Scalar(static_cast<int>(rng() % 5) - 2);
            if (c == 0) continue;
            combo = combo + c * unflatten(row, n);
        }
        if (!combo.is_zero()) candidates.push_back(std::move(combo));
    }

    for (const Mat& m : candidates) {
        for (const Scalar& lambda : rational_eigenvalues(charpoly(m))) {
            Mat theta = m;
            for (int i = 0; i < n; ++i) theta(i, i) -= lambda;
            if (theta.is_zero()) continue;
            int r = rank_of(theta);
            if (r >= n) continue;

            for (const Vec& w : kernel_basis(theta)) {
                std::vector<Vec> spin = span_closure({w}, ops, n, n);
                if (static_cast<int>(spin.size()) < n) {
                    IdealReport rep;
                    rep.generator_description = "spin of a kernel vector of a singular envelope element";
                    rep.closure_dim = static_cast<int>(spin.size());
                    rep.is_proper = true;
                    rep.basis = std::move(spin);
                    out.verdict = Simplicity::not_simple;
                    out.witness = std::move(rep);
                    out.certificate_note = "a singular envelope element has a kernel vector spinning "
                                           "to a proper ideal";
                    return out;
                }
            }

            for (const Vec& w : kernel_basis(theta.transpose())) {
                std::vector<Vec> dspin = span_closure({w}, tops, n, n);
                if (static_cast<int>(dspin.size()) < n) {
                    IdealReport rep;
                    rep.generator_description =
                        "annihilator of a proper invariant subspace of the transposed action";
                    rep.basis = perp_complement(dspin, n);
                    rep.closure_dim = static_cast<int>(rep.basis.size());
                    rep.is_proper = true;
                    out.verdict = Simplicity::not_simple;
                    out.witness = std::move(rep);
                    out.certificate_note = "the transposed action has a proper invariant subspace; "
                                           "its annihilator is a proper ideal";
                    return out;
                }
            }

            // Reaching here means every primal and dual kernel vector spun to
            // the full space; for corank one that rules out proper invariant
            // subspaces entirely.
            if (r == n - 1) {
                out.verdict = Simplicity::simple;
                out.certificate_note = "a corank-one envelope element has full primal and dual spins";
                return out;
            }
        }
    }

    out.verdict = Simplicity::unknown;
    out.certificate_note = "no proper ideal found and no conclusive certificate within the probe budget";
    return out;
}

/// Canonical squarefree representative of the square class of a nonzero
/// rational: sign times the product of primes appearing to an odd power.
/// Trial division is bounded; an unfactored remainder is kept verbatim after
/// removing a perfect-square part, which preserves the square class.
inline Scalar squarefree_part(const Scalar& x) {
    if (x == 0) return Scalar(0);
    mpz_class z = mpz_class(x.get_num()) * mpz_class(x.get_den());
    int sign = z < 0 ? -1 : 1;
    z = abs(z);
    mpz_class core = 1;
    for (unsigned long p = 2; mpz_class(p) * p <= z && p < 1000000UL; p = (p == 2 ? 3 : p + 2)) {
        int count = 0;
        while (z % p == 0) {
            z /= p;
            ++count;
        }
        if (count % 2 == 1) core *= p;
    }
    if (z > 1) {
        if (mpz_perfect_square_p(z.get_mpz_t())) {
            // even power, contributes nothing
        } else {
            core *= z;
        }
    }
    return Scalar(sign * core);
}

}  // namespace detail

/// Smallest ideal containing the (nonzero) seed, as the closure of the seed
/// under all left and right multiplications.
inline IdealReport ideal_closure_algebra(const Algebra& a, const Vec& seed) {
    if (static_cast<int>(seed.size()) != a.dim())
        throw std::invalid_argument("ideal_closure_algebra: seed has wrong dimension");
    if (is_zero(seed)) throw std::invalid_argument("ideal_closure_algebra: zero seed");
    return detail::closure_report(detail::multiplication_ops(a), a.dim(), seed, "closure of the given seed");
}

/// Smallest ideal of the triple system containing the (nonzero) seed: the
/// closure under products with arbitrary basis pairs in the other two slots.
inline IdealReport ideal_closure_triple(const TripleSystem& t, const Vec& seed) {
    if (static_cast<int>(seed.size()) != t.dim())
        throw std::invalid_argument("ideal_closure_triple: seed has wrong dimension");
    if (is_zero(seed)) throw std::invalid_argument("ideal_closure_triple: zero seed");
    return detail::closure_report(detail::slot_ops(t), t.dim(), seed, "closure of the given seed");
}

inline SimplicityVerdict certify_simplicity(const Algebra& a, int probe_budget = 16,
                                            unsigned long long seed = 1729) {
    return detail::certify_via_ops(detail::multiplication_ops(a), a.dim(), probe_budget, seed);
}

inline SimplicityVerdict certify_simplicity(const TripleSystem& t, int probe_budget = 16,
                                            unsigned long long seed = 1729) {
    return detail::certify_via_ops(detail::slot_ops(t), t.dim(), probe_budget, seed);
}

/// Basis-independent summary of an algebra: identity flags, quadratic data
/// (with the discriminant's square class, which is invariant under base
/// change), and the dimensions of the derivation span {D_{x,y}} and of the
/// associator span.
struct InvariantReport {
    int dimension = 0;
    bool commutative = false;
    bool associative = false;
    bool flexible = false;
    bool quadratic = false;
    std::optional<Scalar> norm_gram_det;          ///< det of the polarized norm gram (iff quadratic)
    std::optional<Scalar> norm_det_square_class;  ///< canonical squarefree representative
    int derivation_span_dim = 0;
    int associator_span_dim = 0;
};

inline InvariantReport invariant_report(const Algebra& a) {
    InvariantReport rep;
    int n = a.dim();
    rep.dimension = n;
    rep.commutative = static_cast<bool>(is_commutative(a));
    rep.associative = static_cast<bool>(is_associative(a));
    rep.flexible = static_cast<bool>(is_flexible(a));

    if (auto q = quadratic_structure(a)) {
        rep.quadratic = true;
        NormTraceInvolution nt = norm_trace_involution(*q);
        Scalar d = det(nt.norm_polarization);
        rep.norm_gram_det = d;
        rep.norm_det_square_class = detail::squarefree_part(d);
    }

    SpanBuilder dspan(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            dspan.add(detail::flatten(d_operator(a, unit_vec(n, i), unit_vec(n, j))));
    rep.derivation_span_dim = dspan.rank();

    SpanBuilder aspan(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                aspan.add(a.associator(unit_vec(n, i), unit_vec(n, j), unit_vec(n, k)));
    rep.associator_span_dim = aspan.rank();
    return rep;
}

}  // namespace nxa
