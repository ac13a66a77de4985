/**
 * @file cli.hpp
 * @brief Batch front end: build catalog instances from flat key-value spec
 *        files, run identity suites on structure files, convert between
 *        triple systems and algebras, certify simplicity, verify explicit
 *        isomorphisms, and print invariant reports.
 *
 * Exit-code contract (shared by every subcommand):
 *   0  everything ran and every check passed,
 *   1  everything ran but at least one check failed (a witness is printed),
 *   2  usage, parse, or precondition error (nothing was checked).
 *
 * All reports are deterministic; `--format structured` renders them as JSON
 * with rationals as canonical "p/q" strings.
 */
#pragma once

#include "nxa/analysis.hpp"
#include "nxa/correspondence.hpp"
#include "nxa/families.hpp"
#include "nxa/io.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <array>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nxa {

namespace cli_detail {

using ojson = nlohmann::ordered_json;

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file '" + out_path + "'");
    out << content;
}

inline std::string vec_to_csv(const Vec& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += scalar_to_string(v[i]);
    }
    return s;
}

/// Parse "1,0,-1/2,0" into a dense vector. Throws std::invalid_argument.
inline Vec parse_csv_vector(const std::string& s) {
    Vec v;
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, ',')) v.push_back(parse_scalar(tok));
    if (v.empty()) throw std::invalid_argument("empty vector literal");
    return v;
}

/// Parse a sparse matrix file: lines "i j p/q" (0-based, nonzero, no
/// duplicates), with comments and blank lines ignored.
inline Mat parse_matrix_file(const std::string& text, int rows, int cols) {
    Mat m(rows, cols);
    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    std::set<std::pair<int, int>> seen;
    while (std::getline(is, line)) {
        ++line_no;
        std::vector<std::string> t = detail::split_tokens(line);
        if (t.empty() || t[0][0] == '#') continue;
        if (t.size() != 3) detail::parse_fail(line_no, "matrix entry must be 'i j value'");
        int i = detail::parse_index(t[0], line_no, "index");
        int j = detail::parse_index(t[1], line_no, "index");
        if (i >= rows || j >= cols) detail::parse_fail(line_no, "matrix index out of range");
        Scalar v = detail::parse_value(t[2], line_no);
        if (v == 0) detail::parse_fail(line_no, "zero entry (omit zero entries)");
        if (!seen.insert({i, j}).second) detail::parse_fail(line_no, "duplicate matrix entry");
        m(i, j) = v;
    }
    return m;
}

inline const char* yesno(bool b) { return b ? "yes" : "no"; }

inline ojson scalar_json(const Scalar& s) { return scalar_to_string(s); }

inline ojson vec_json(const Vec& v) {
    ojson a = ojson::array();
    for (const Scalar& s : v) a.push_back(scalar_to_string(s));
    return a;
}

inline ojson check_json(const CheckResult& r, int dim, bool verbose) {
    ojson c;
    c["name"] = r.check;
    c["ok"] = r.ok;
    c["witness"] = r.witness;
    c["detail"] = r.detail;
    if (verbose && !r.witness.empty()) {
        ojson vecs = ojson::array();
        for (int i : r.witness)
            vecs.push_back(i >= 0 && i < dim ? vec_json(unit_vec(dim, i)) : ojson());
        c["witness_vectors"] = vecs;
    }
    return c;
}

inline void print_check_text(std::ostream& os, const CheckResult& r, int dim, bool verbose) {
    os << r.describe() << "\n";
    if (verbose && !r.ok && !r.witness.empty()) {
        for (int i : r.witness)
            if (i >= 0 && i < dim) os << "  witness e" << i << " = (" << vec_to_csv(unit_vec(dim, i)) << ")\n";
    }
}

}  // namespace cli_detail

/// ---------------------------------------------------------------------------
/// Instance spec files: flat key-value text describing one catalog instance.
/// The first significant line is `family <name>`; the other keys depend on
/// the family (see the grammar in the `build` subcommand help).
struct InstanceSpec {
    std::string family;
    std::optional<int> n;                           ///< orthogonal
    std::optional<int> rank;                        ///< unitarian / symplectic
    std::vector<std::array<int, 2>> gram_idx;       ///< orthogonal / d_mu
    std::vector<Scalar> gram_val;
    std::vector<int> base_idx;                      ///< orthogonal / d_mu / g_type
    std::vector<Scalar> base_val;
    std::optional<Scalar> phi_scale;                ///< d_mu
    std::vector<Scalar> params;                     ///< g_type / f_type
    std::optional<StructureFile> custom;            ///< family custom: embedded structure
};

inline InstanceSpec parse_instance_spec(const std::string& text) {
    InstanceSpec spec;
    std::istringstream is(text);
    std::string line;
    int line_no = 0;

    // Dimension of sparse gram / base-point entries, fixed per family (or set
    // by the `n` key for the orthogonal family).
    auto entry_dim = [&spec]() -> int {
        if (spec.family == "orthogonal") return spec.n ? *spec.n : -1;
        if (spec.family == "d_mu") return 4;
        if (spec.family == "g_type") return 8;
        return -1;
    };

    std::set<std::pair<int, int>> gram_seen;
    std::set<int> base_seen;

    while (std::getline(is, line)) {
        ++line_no;
        std::vector<std::string> t = detail::split_tokens(line);
        if (t.empty() || t[0][0] == '#') continue;

        if (spec.family.empty()) {
            if (t[0] != "family" || t.size() != 2)
                detail::parse_fail(line_no, "expected 'family <name>' first");
            static const std::set<std::string> known{"orthogonal", "unitarian", "symplectic",
                                                     "d_mu",       "g_type",    "f_type",
                                                     "custom"};
            if (!known.count(t[1])) detail::parse_fail(line_no, "unknown family '" + t[1] + "'");
            spec.family = t[1];
            if (spec.family == "custom") {
                // The rest of the file is a structure body; blank out the
                // family line so line numbers in errors stay accurate.
                std::string rest((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
                std::string body;
                for (int i = 1; i < line_no; ++i) body += "#\n";
                body += "#\n";
                body += rest;
                spec.custom = parse_structure(body);
                return spec;
            }
            continue;
        }

        const std::string& key = t[0];
        if (key == "n") {
            if (spec.family != "orthogonal") detail::parse_fail(line_no, "'n' applies to family orthogonal only");
            if (spec.n) detail::parse_fail(line_no, "duplicate 'n'");
            if (t.size() != 2) detail::parse_fail(line_no, "'n' takes one integer");
            spec.n = detail::parse_index(t[1], line_no, "dimension");
            if (*spec.n < 1 || *spec.n > kMaxFileDim) detail::parse_fail(line_no, "dimension out of range");
        } else if (key == "rank") {
            if (spec.family != "unitarian" && spec.family != "symplectic")
                detail::parse_fail(line_no, "'rank' applies to the hermitian families only");
            if (spec.rank) detail::parse_fail(line_no, "duplicate 'rank'");
            if (t.size() != 2) detail::parse_fail(line_no, "'rank' takes one integer");
            spec.rank = detail::parse_index(t[1], line_no, "rank");
        } else if (key == "gram") {
            if (spec.family != "orthogonal" && spec.family != "d_mu")
                detail::parse_fail(line_no, "'gram' applies to families orthogonal and d_mu only");
            int d = entry_dim();
            if (d < 0) detail::parse_fail(line_no, "'n' must come before gram entries");
            if (t.size() != 4) detail::parse_fail(line_no, "gram entry must be 'gram <i> <j> <value>'");
            int i = detail::parse_index(t[1], line_no, "index");
            int j = detail::parse_index(t[2], line_no, "index");
            if (i >= d || j >= d) detail::parse_fail(line_no, "gram index out of range");
            Scalar v = detail::parse_value(t[3], line_no);
            if (v == 0) detail::parse_fail(line_no, "zero entry (omit zero entries)");
            auto key_ij = std::minmax(i, j);
            if (!gram_seen.insert({key_ij.first, key_ij.second}).second)
                detail::parse_fail(line_no, "duplicate gram entry");
            spec.gram_idx.push_back({i, j});
            spec.gram_val.push_back(std::move(v));
        } else if (key == "e") {
            if (spec.family != "orthogonal" && spec.family != "d_mu" && spec.family != "g_type")
                detail::parse_fail(line_no, "'e' applies to families orthogonal, d_mu, and g_type only");
            int d = entry_dim();
            if (d < 0) detail::parse_fail(line_no, "'n' must come before base-point entries");
            if (t.size() != 3) detail::parse_fail(line_no, "base-point entry must be 'e <i> <value>'");
            int i = detail::parse_index(t[1], line_no, "index");
            if (i >= d) detail::parse_fail(line_no, "base-point index out of range");
            Scalar v = detail::parse_value(t[2], line_no);
            if (v == 0) detail::parse_fail(line_no, "zero entry (omit zero entries)");
            if (!base_seen.insert(i).second) detail::parse_fail(line_no, "duplicate base-point entry");
            spec.base_idx.push_back(i);
            spec.base_val.push_back(std::move(v));
        } else if (key == "phi_scale") {
            if (spec.family != "d_mu") detail::parse_fail(line_no, "'phi_scale' applies to family d_mu only");
            if (spec.phi_scale) detail::parse_fail(line_no, "duplicate 'phi_scale'");
            if (t.size() != 2) detail::parse_fail(line_no, "'phi_scale' takes one rational");
            spec.phi_scale = detail::parse_value(t[1], line_no);
        } else if (key == "params") {
            if (spec.family != "g_type" && spec.family != "f_type")
                detail::parse_fail(line_no, "'params' applies to families g_type and f_type only");
            if (!spec.params.empty()) detail::parse_fail(line_no, "duplicate 'params'");
            if (t.size() != 4) detail::parse_fail(line_no, "'params' takes three rationals");
            for (int p = 1; p <= 3; ++p) spec.params.push_back(detail::parse_value(t[p], line_no));
        } else {
            detail::parse_fail(line_no, "unknown key '" + key + "' for family " + spec.family);
        }
    }

    if (spec.family.empty()) throw std::invalid_argument("line 1: empty spec file (expected 'family <name>')");
    return spec;
}

namespace cli_detail {

inline Mat gram_from_spec(const InstanceSpec& spec, int d) {
    if (spec.gram_idx.empty()) return Mat::identity(d);
    Mat g(d, d);
    for (std::size_t k = 0; k < spec.gram_idx.size(); ++k) {
        int i = spec.gram_idx[k][0], j = spec.gram_idx[k][1];
        g(i, j) = spec.gram_val[k];
        g(j, i) = spec.gram_val[k];
    }
    return g;
}

inline Vec base_from_spec(const InstanceSpec& spec, int d, int default_index) {
    if (spec.base_idx.empty()) return unit_vec(d, default_index);
    Vec e(static_cast<std::size_t>(d));
    for (std::size_t k = 0; k < spec.base_idx.size(); ++k)
        e[static_cast<std::size_t>(spec.base_idx[k])] = spec.base_val[k];
    return e;
}

inline std::string params_string(const std::vector<Scalar>& params) {
    std::string s;
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) s += " ";
        s += scalar_to_string(params[i]);
    }
    return s;
}

}  // namespace cli_detail

/// Build the structure described by an instance spec file, with the defining parameters
/// recorded as metadata.  Family preconditions surface as
/// std::invalid_argument from the underlying constructors.
inline StructureFile build_instance(const InstanceSpec& spec) {
    using cli_detail::base_from_spec;
    using cli_detail::gram_from_spec;
    using cli_detail::params_string;
    using cli_detail::vec_to_csv;

    if (spec.family == "custom") return *spec.custom;

    if (spec.family == "orthogonal") {
        if (!spec.n) throw std::invalid_argument("family orthogonal: missing 'n'");
        Vec e = base_from_spec(spec, *spec.n, 0);
        TripleSystem t = build_orthogonal(*spec.n, gram_from_spec(spec, *spec.n), e);
        return to_structure(t, {{"family", "orthogonal"},
                                {"n", std::to_string(*spec.n)},
                                {"base_point", vec_to_csv(e)}});
    }
    if (spec.family == "unitarian") {
        if (!spec.rank) throw std::invalid_argument("family unitarian: missing 'rank'");
        CompositionAlgebra k = cayley_dickson({Scalar(1)});
        TripleSystem t = build_unitarian(k, hermitian_split_etale(*spec.rank));
        return to_structure(t, {{"family", "unitarian"}, {"rank", std::to_string(*spec.rank)}});
    }
    if (spec.family == "symplectic") {
        if (!spec.rank) throw std::invalid_argument("family symplectic: missing 'rank'");
        CompositionAlgebra h = split_quaternion_matrix();
        TripleSystem t = build_symplectic(h, hermitian_split_quaternion(*spec.rank));
        return to_structure(t, {{"family", "symplectic"}, {"rank", std::to_string(*spec.rank)}});
    }
    if (spec.family == "d_mu") {
        Vec e = base_from_spec(spec, 4, 0);
        Scalar phi = spec.phi_scale ? *spec.phi_scale : Scalar(1);
        DMuResult d = build_d_mu(gram_from_spec(spec, 4), e, phi);
        return to_structure(d.triple, {{"family", "d_mu"},
                                       {"mu", scalar_to_string(d.mu)},
                                       {"phi_scale", scalar_to_string(phi)},
                                       {"base_point", vec_to_csv(e)}});
    }
    if (spec.family == "g_type" || spec.family == "f_type") {
        std::vector<Scalar> params = spec.params;
        if (params.empty()) params = {Scalar(-1), Scalar(-1), Scalar(1)};
        CompositionAlgebra c = cayley_dickson(params);
        if (spec.family == "f_type") {
            TripleSystem t = build_f_type(c);
            return to_structure(t, {{"family", "f_type"}, {"params", params_string(params)}});
        }
        Vec e = base_from_spec(spec, 8, 1);
        TripleSystem t = build_g_type(c, e);
        return to_structure(t, {{"family", "g_type"},
                                {"params", params_string(params)},
                                {"base_point", vec_to_csv(e)}});
    }
    throw std::invalid_argument("unknown family '" + spec.family + "'");
}

/// ---------------------------------------------------------------------------
/// Identity suites.

/// Run the named suite on the structure.  Triple files take the gjts / bfkts
/// suites; algebra files take the varietyV suite; `all` selects everything
/// applicable to the file's kind.
inline std::vector<CheckResult> run_verify_suite(const StructureFile& f, const std::string& suite) {
    std::vector<CheckResult> out;
    if (f.kind == StructureFile::Kind::triple) {
        if (suite == "varietyV")
            throw std::invalid_argument(
                "suite varietyV needs an algebra file; convert the triple system first "
                "(convert --direction bfkts_to_quadratic)");
        TripleSystem t = triple_from_structure(f);
        out.push_back(check_gjts(t));
        if (suite == "bfkts" || suite == "all") out.push_back(check_balanced(t).result);
    } else {
        if (suite == "gjts" || suite == "bfkts")
            throw std::invalid_argument("suite " + suite + " needs a triple-system file");
        Algebra a = algebra_from_structure(f);
        out.push_back(is_flexible(a));
        out.push_back(is_noncommutative_jordan(a));
        out.push_back(is_in_variety_v(a));
        out.push_back(check_cyclic_identity(a));
    }
    return out;
}

namespace cli_detail {

struct CommonOpts {
    std::string file, file_b, spec_path, map_path, out_path, base_point;
    std::string suite = "all";
    std::string direction;
    std::string format = "text";
    bool roundtrip = false;
    bool verbose = false;
    int budget = 16;
    long long seed = 1729;
};

inline const char* kind_name(const StructureFile& f) {
    return f.kind == StructureFile::Kind::algebra ? "algebra" : "triple";
}

inline int cmd_build(const CommonOpts& o) {
    InstanceSpec spec = parse_instance_spec(read_file(o.spec_path));
    StructureFile out = build_instance(spec);
    write_output(o.out_path, serialize(out));
    return 0;
}

inline int cmd_verify(const CommonOpts& o) {
    StructureFile f = parse_structure(read_file(o.file));
    std::vector<CheckResult> checks = run_verify_suite(f, o.suite);
    bool overall = true;
    for (const CheckResult& r : checks) overall = overall && r.ok;

    std::ostringstream os;
    if (o.format == "structured") {
        ojson j;
        j["command"] = "verify";
        j["file"] = o.file;
        j["kind"] = kind_name(f);
        j["dim"] = f.dim();
        j["suite"] = o.suite;
        j["checks"] = ojson::array();
        for (const CheckResult& r : checks) j["checks"].push_back(check_json(r, f.dim(), o.verbose));
        j["overall"] = overall;
        os << j.dump(2) << "\n";
    } else {
        os << "file: " << o.file << "\n"
           << "kind: " << kind_name(f) << "\n"
           << "dim: " << f.dim() << "\n"
           << "suite: " << o.suite << "\n";
        for (const CheckResult& r : checks) print_check_text(os, r, f.dim(), o.verbose);
        os << "overall: " << (overall ? "pass" : "FAIL") << "\n";
    }
    write_output(o.out_path, os.str());
    return overall ? 0 : 1;
}

inline int cmd_convert(const CommonOpts& o) {
    StructureFile f = parse_structure(read_file(o.file));
    std::optional<Vec> base;
    if (!o.base_point.empty()) base = parse_csv_vector(o.base_point);

    const std::string& dir = o.direction;
    bool needs_base = (dir == "homotope" || dir == "bfkts_to_quadratic");
    if (needs_base && !base)
        throw std::invalid_argument("direction " + dir + " requires --base-point");
    if (!needs_base && base)
        throw std::invalid_argument("direction " + dir + " does not take --base-point (the unit is used)");

    StructureFile out;
    bool roundtrip_ok = true;

    if (dir == "homotope") {
        TripleSystem t = triple_from_structure(f);
        InvolutiveAlgebra inv = homotope(t, *base);
        out = to_structure(inv.algebra, {{"direction", "homotope"}});
        if (o.roundtrip) roundtrip_ok = (triple_from_involutive(inv).tc() == t.tc());
    } else if (dir == "triple_from_algebra") {
        Algebra a = algebra_from_structure(f);
        auto q = quadratic_structure(a);
        if (!q)
            throw std::invalid_argument(
                "the algebra has no quadratic decomposition, so no canonical involution is available");
        InvolutiveAlgebra inv(a, norm_trace_involution(*q).bar);
        TripleSystem t = triple_from_involutive(inv);
        out = to_structure(t, {{"direction", "triple_from_algebra"}});
        if (o.roundtrip) roundtrip_ok = (homotope(t, *a.unit()).algebra.sc() == a.sc());
    } else if (dir == "bfkts_to_quadratic") {
        TripleSystem t = triple_from_structure(f);
        QuadraticStructure q = bfkts_to_quadratic(t, *base);
        out = to_structure(q.algebra, {{"direction", "bfkts_to_quadratic"}});
        if (o.roundtrip) roundtrip_ok = (quadratic_to_bfkts(q).tc() == t.tc());
    } else if (dir == "quadratic_to_bfkts") {
        Algebra a = algebra_from_structure(f);
        auto q = quadratic_structure(a);
        if (!q) throw std::invalid_argument("the algebra has no quadratic decomposition");
        TripleSystem t = quadratic_to_bfkts(*q);
        out = to_structure(t, {{"direction", "quadratic_to_bfkts"}});
        if (o.roundtrip) roundtrip_ok = (bfkts_to_quadratic(t, *a.unit()).algebra.sc() == a.sc());
    } else {
        throw std::invalid_argument("unknown direction '" + dir + "'");
    }

    if (!roundtrip_ok) {
        std::cerr << "roundtrip mismatch: the reverse conversion does not reproduce the input\n";
        return 1;
    }
    write_output(o.out_path, serialize(out));
    return 0;
}

inline int cmd_simplicity(const CommonOpts& o) {
    StructureFile f = parse_structure(read_file(o.file));
    unsigned long long seed = static_cast<unsigned long long>(o.seed);
    SimplicityVerdict v = (f.kind == StructureFile::Kind::algebra)
                              ? certify_simplicity(algebra_from_structure(f), o.budget, seed)
                              : certify_simplicity(triple_from_structure(f), o.budget, seed);

    std::ostringstream os;
    if (o.format == "structured") {
        ojson j;
        j["command"] = "simplicity";
        j["file"] = o.file;
        j["kind"] = kind_name(f);
        j["dim"] = f.dim();
        j["budget"] = o.budget;
        j["seed"] = o.seed;
        j["verdict"] = to_string(v.verdict);
        j["note"] = v.certificate_note;
        if (v.witness) {
            ojson w;
            w["description"] = v.witness->generator_description;
            w["dim"] = v.witness->closure_dim;
            ojson basis = ojson::array();
            for (const Vec& row : v.witness->basis) basis.push_back(vec_json(row));
            w["basis"] = basis;
            j["witness"] = w;
        } else {
            j["witness"] = nullptr;
        }
        os << j.dump(2) << "\n";
    } else {
        os << "file: " << o.file << "\n"
           << "kind: " << kind_name(f) << "\n"
           << "dim: " << f.dim() << "\n"
           << "verdict: " << to_string(v.verdict) << "\n"
           << "note: " << v.certificate_note << "\n";
        if (v.witness) {
            os << "witness: " << v.witness->generator_description << " (dim " << v.witness->closure_dim
               << ")\n";
            if (o.verbose)
                for (const Vec& row : v.witness->basis) os << "  (" << vec_to_csv(row) << ")\n";
        }
    }
    write_output(o.out_path, os.str());
    return 0;
}

inline int cmd_iso_check(const CommonOpts& o) {
    Algebra a = algebra_from_structure(parse_structure(read_file(o.file)));
    Algebra b = algebra_from_structure(parse_structure(read_file(o.file_b)));
    Mat phi = parse_matrix_file(read_file(o.map_path), b.dim(), a.dim());
    CheckResult r = verify_isomorphism(a, b, phi);

    std::ostringstream os;
    if (o.format == "structured") {
        ojson j;
        j["command"] = "iso-check";
        j["file_a"] = o.file;
        j["file_b"] = o.file_b;
        j["map"] = o.map_path;
        j["check"] = check_json(r, a.dim(), o.verbose);
        j["overall"] = r.ok;
        os << j.dump(2) << "\n";
    } else {
        os << "file a: " << o.file << "\n"
           << "file b: " << o.file_b << "\n";
        print_check_text(os, r, a.dim(), o.verbose);
        os << "overall: " << (r.ok ? "pass" : "FAIL") << "\n";
    }
    write_output(o.out_path, os.str());
    return r.ok ? 0 : 1;
}

inline int cmd_report(const CommonOpts& o) {
    StructureFile f = parse_structure(read_file(o.file));
    if (f.kind != StructureFile::Kind::algebra)
        throw std::invalid_argument("report works on algebra files; use verify or simplicity on triple systems");
    InvariantReport r = invariant_report(algebra_from_structure(f));

    std::ostringstream os;
    if (o.format == "structured") {
        ojson j;
        j["command"] = "report";
        j["file"] = o.file;
        j["dimension"] = r.dimension;
        j["commutative"] = r.commutative;
        j["associative"] = r.associative;
        j["flexible"] = r.flexible;
        j["quadratic"] = r.quadratic;
        j["norm_gram_det"] = r.norm_gram_det ? scalar_json(*r.norm_gram_det) : ojson();
        j["norm_det_square_class"] =
            r.norm_det_square_class ? scalar_json(*r.norm_det_square_class) : ojson();
        j["derivation_span_dim"] = r.derivation_span_dim;
        j["associator_span_dim"] = r.associator_span_dim;
        os << j.dump(2) << "\n";
    } else {
        os << "file: " << o.file << "\n"
           << "dimension: " << r.dimension << "\n"
           << "commutative: " << yesno(r.commutative) << "\n"
           << "associative: " << yesno(r.associative) << "\n"
           << "flexible: " << yesno(r.flexible) << "\n"
           << "quadratic: " << yesno(r.quadratic) << "\n";
        if (r.norm_gram_det) {
            os << "norm gram determinant: " << scalar_to_string(*r.norm_gram_det) << "\n"
               << "determinant square class: " << scalar_to_string(*r.norm_det_square_class) << "\n";
        }
        os << "derivation span dimension: " << r.derivation_span_dim << "\n"
           << "associator span dimension: " << r.associator_span_dim << "\n";
    }
    write_output(o.out_path, os.str());
    return 0;
}

}  // namespace cli_detail

/// Entry point for the command-line tool; returns the process exit code.
inline int run_cli(int argc, const char* const* argv) {
    using cli_detail::CommonOpts;
    CommonOpts o;

    CLI::App app{"exact workbench for balanced triple systems and their quadratic algebras"};
    app.require_subcommand(1);

    CLI::App* build = app.add_subcommand("build", "build a catalog instance from a key-value spec file");
    build->add_option("spec", o.spec_path, "instance spec file")->required();
    build->add_option("--out", o.out_path, "write the structure file here (default: stdout)");
    build->footer(
        "Spec file grammar (one key per line, # comments allowed):\n"
        "  family orthogonal | unitarian | symplectic | d_mu | g_type | f_type | custom\n"
        "  orthogonal:  n <int> (first), then optional 'gram <i> <j> <p/q>' entries\n"
        "               (symmetric; omitted entirely = orthonormal) and optional\n"
        "               'e <i> <p/q>' base-point entries (default: e0, needs <e|e> = 1)\n"
        "  unitarian:   rank <int>   (split quadratic etale coefficients, identity gram)\n"
        "  symplectic:  rank <int>   (split quaternion coefficients, identity gram)\n"
        "  d_mu:        optional 'gram <i> <j> <p/q>' (4x4), 'e <i> <p/q>' (default e0),\n"
        "               'phi_scale <p/q>' (default 1); the computed mu lands in the metadata\n"
        "  g_type:      optional 'params <p> <q> <r>' (default -1 -1 1) and\n"
        "               'e <i> <p/q>' (default e1; must be trace-zero with nonzero norm)\n"
        "  f_type:      optional 'params <p> <q> <r>' (default -1 -1 1)\n"
        "  custom:      the remaining lines are a structure file body (kind/dim/entries)");

    CLI::App* verify = app.add_subcommand("verify", "run an identity suite on a structure file");
    verify->add_option("file", o.file, "structure file")->required();
    verify->add_option("--suite", o.suite, "which identities to check (default: all)")
        ->check(CLI::IsMember({"gjts", "bfkts", "varietyV", "all"}));
    verify->add_option("--format", o.format)->check(CLI::IsMember({"text", "structured"}));
    verify->add_option("--out", o.out_path, "write the report here (default: stdout)");
    verify->add_flag("--verbose", o.verbose, "print witness vectors, not just indices");

    CLI::App* convert = app.add_subcommand("convert", "convert between triple systems and algebras");
    convert->add_option("file", o.file, "structure file")->required();
    convert->add_option("--direction", o.direction, "conversion to apply")
        ->required()
        ->check(CLI::IsMember({"homotope", "triple_from_algebra", "bfkts_to_quadratic", "quadratic_to_bfkts"}));
    convert->add_option("--base-point", o.base_point, "dense rational vector, e.g. 1,0,0,0");
    convert->add_flag("--roundtrip", o.roundtrip, "re-convert and require exact tensor equality");
    convert->add_option("--out", o.out_path, "write the converted structure here (default: stdout)");

    CLI::App* simplicity = app.add_subcommand("simplicity", "certify simplicity or exhibit a proper ideal");
    simplicity->add_option("file", o.file, "structure file")->required();
    simplicity->add_option("--budget", o.budget, "random-probe budget (default: 16)");
    simplicity->add_option("--seed", o.seed, "probe RNG seed (default: 1729)");
    simplicity->add_option("--format", o.format)->check(CLI::IsMember({"text", "structured"}));
    simplicity->add_option("--out", o.out_path, "write the report here (default: stdout)");
    simplicity->add_flag("--verbose", o.verbose, "print the witness ideal's basis");

    CLI::App* iso = app.add_subcommand("iso-check", "verify an explicit algebra isomorphism");
    iso->add_option("file_a", o.file, "source algebra file")->required();
    iso->add_option("file_b", o.file_b, "target algebra file")->required();
    iso->add_option("--map", o.map_path, "matrix file with lines 'i j p/q' (columns = images of basis vectors)")
        ->required();
    iso->add_option("--format", o.format)->check(CLI::IsMember({"text", "structured"}));
    iso->add_option("--out", o.out_path, "write the report here (default: stdout)");
    iso->add_flag("--verbose", o.verbose, "print witness vectors, not just indices");

    CLI::App* report = app.add_subcommand("report", "print the invariant report of an algebra file");
    report->add_option("file", o.file, "algebra structure file")->required();
    report->add_option("--format", o.format)->check(CLI::IsMember({"text", "structured"}));
    report->add_option("--out", o.out_path, "write the report here (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(build)) return cli_detail::cmd_build(o);
        if (app.got_subcommand(verify)) return cli_detail::cmd_verify(o);
        if (app.got_subcommand(convert)) return cli_detail::cmd_convert(o);
        if (app.got_subcommand(simplicity)) return cli_detail::cmd_simplicity(o);
        if (app.got_subcommand(iso)) return cli_detail::cmd_iso_check(o);
        if (app.got_subcommand(report)) return cli_detail::cmd_report(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;  // unreachable with require_subcommand(1)
}

}  // namespace nxa
