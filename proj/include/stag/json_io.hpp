// JSON interchange: scenario files describing a field, a realization and a
// set of named objects with verification tasks, plus serialization of
// reports, representations and complexes. Output key order is fixed, so a
// given input and seed always produce byte-identical documents.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "stag/fuzz.hpp"
#include "stag/verify.hpp"

namespace stag {

using Json = nlohmann::ordered_json;

/// Malformed scenario content (as opposed to JSON syntax errors, which the
/// parser reports on its own).
struct ScenarioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- scalars

inline Json scalar_to_json(const Scalar& s) {
    if (s.field().kind == FieldKind::prime)
        return Json{{"p", s.field().p}, {"v", s.residue()}};
    return Json(s.rational().str());
}

inline Scalar scalar_from_json(const Field& f, const Json& j) {
    if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
    if (j.is_string()) {
        if (f.kind != FieldKind::rationals)
            throw ScenarioError("scalar: rational literal in a prime field");
        try {
            return Scalar(f, BigRational(j.get<std::string>()));
        } catch (const std::exception&) {
            throw ScenarioError("scalar: cannot parse rational '" +
                                j.get<std::string>() + "'");
        }
    }
    if (j.is_object() && j.contains("p") && j.contains("v")) {
        if (f.kind != FieldKind::prime || j["p"].get<std::int64_t>() != f.p)
            throw ScenarioError("scalar: residue from a different field");
        return f.from_int(j["v"].get<std::int64_t>());
    }
    throw ScenarioError("scalar: expected integer, rational string or {p,v}");
}

// --------------------------------------------------------------- matrices

inline Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

inline Matrix matrix_from_json(const Field& f, const Json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols"))
        throw ScenarioError("matrix: expected {rows, cols, entries}");
    std::size_t rows = j["rows"].get<std::size_t>(), cols = j["cols"].get<std::size_t>();
    Matrix m(f, rows, cols);
    const Json& e = j.value("entries", Json::array());
    if (e.size() != rows && !(rows == 0 || cols == 0))
        throw ScenarioError("matrix: wrong number of rows");
    for (std::size_t r = 0; r < e.size(); ++r) {
        if (e[r].size() != cols) throw ScenarioError("matrix: ragged row");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = scalar_from_json(f, e[r][c]);
    }
    return m;
}

// ---------------------------------------------------- representations

inline Json rep_to_json(const PosetRep& r) {
    const PosetPtr& p = r.poset();
    Json maps = Json::array();
    for (const auto& [x, y] : p->covers())
        maps.push_back(Json{{"from", p->name(x)},
                            {"to", p->name(y)},
                            {"matrix", matrix_to_json(r.map(x, y))}});
    return Json{{"dims", r.dims()}, {"maps", std::move(maps)}};
}

inline PosetRep rep_from_json(const PosetPtr& p, const Field& f, const Json& j) {
    if (!j.is_object() || !j.contains("dims"))
        throw ScenarioError("representation: expected {dims, maps}");
    std::vector<std::size_t> dims = j["dims"].get<std::vector<std::size_t>>();
    if (dims.size() != p->size())
        throw ScenarioError("representation: one dimension per element required");
    std::vector<std::tuple<std::string, std::string, Matrix>> cover_maps;
    for (const Json& m : j.value("maps", Json::array()))
        cover_maps.emplace_back(m.at("from").get<std::string>(),
                                m.at("to").get<std::string>(),
                                matrix_from_json(f, m.at("matrix")));
    // default missing covering maps between positive-dimensional stalks to zero
    for (const auto& [x, y] : p->covers()) {
        bool given = false;
        for (const auto& [a, b, mat] : cover_maps)
            given = given || (p->index_of(a) == x && p->index_of(b) == y);
        if (!given)
            cover_maps.emplace_back(p->name(x), p->name(y),
                                    Matrix::zero(f, dims[y], dims[x]));
    }
    try {
        return PosetRep::from_covers(p, f, std::move(dims), cover_maps);
    } catch (const std::invalid_argument& e) {
        throw ScenarioError(std::string("representation: ") + e.what());
    }
}

// ---------------------------------------------------------------- complexes

inline Json complex_to_json(const Complex& x) {
    Json terms = Json::array(), diffs = Json::array();
    for (int n = x.lo(); n <= x.hi(); ++n) {
        terms.push_back(rep_to_json(x.term(n)));
        if (n < x.hi()) {
            Json comps = Json::array();
            for (std::size_t e = 0; e < x.poset()->size(); ++e)
                comps.push_back(matrix_to_json(x.diff(n).at(e)));
            diffs.push_back(std::move(comps));
        }
    }
    return Json{{"lo", x.is_zero_complex() ? 0 : x.lo()},
                {"terms", std::move(terms)},
                {"diffs", std::move(diffs)}};
}

inline Complex complex_from_json(const PosetPtr& p, const Field& f, const Json& j) {
    if (!j.is_object() || !j.contains("terms"))
        throw ScenarioError("complex: expected {lo, terms, diffs}");
    std::vector<PosetRep> terms;
    for (const Json& t : j["terms"]) terms.push_back(rep_from_json(p, f, t));
    if (terms.empty()) return Complex(p, f);
    const Json& dj = j.value("diffs", Json::array());
    if (dj.size() + 1 != terms.size())
        throw ScenarioError("complex: one differential per gap required");
    std::vector<RepMap> diffs;
    for (std::size_t i = 0; i < dj.size(); ++i) {
        if (dj[i].size() != p->size())
            throw ScenarioError("complex: one matrix per element in each differential");
        std::vector<Matrix> comps;
        for (std::size_t e = 0; e < p->size(); ++e)
            comps.push_back(matrix_from_json(f, dj[i][e]));
        diffs.emplace_back(terms[i], terms[i + 1], std::move(comps));
    }
    try {
        return Complex(j.value("lo", 0), std::move(terms), std::move(diffs));
    } catch (const std::invalid_argument& e) {
        throw ScenarioError(std::string("complex: ") + e.what());
    }
}

// ------------------------------------------------------------------ reports

inline Json report_to_json(const Report& r) {
    Json checks = Json::array();
    for (const CheckResult& c : r.checks)
        checks.push_back(Json{{"id", c.id},
                              {"status", c.pass ? "pass" : "fail"},
                              {"detail", c.detail}});
    return Json{{"schema", 1},
                {"status", r.all_pass() ? "pass" : "fail"},
                {"checks", std::move(checks)}};
}

inline std::string report_to_text(const Report& r) {
    std::string out;
    for (const CheckResult& c : r.checks) {
        out += c.pass ? "PASS  " : "FAIL  ";
        out += c.id;
        if (!c.detail.empty()) out += "  (" + c.detail + ")";
        out += "\n";
    }
    out += r.all_pass() ? "status: pass" : "status: fail";
    out += " (" + std::to_string(r.checks.size() - r.fail_count()) + "/" +
           std::to_string(r.checks.size()) + " checks)\n";
    return out;
}

// ---------------------------------------------------------------- scenarios

struct ScenarioTask {
    std::string op;
    std::vector<std::string> sample;    // object names
    std::vector<std::string> deltas;    // exceptional_axioms only
    std::vector<std::string> closed;    // gluing only: element names
};

struct Scenario {
    Field field = Field::Q();
    BaricRealization baric = BaricRealization::graded_weight(0, 0);
    std::vector<std::pair<std::string, Complex>> objects;  // insertion order
    std::vector<ScenarioTask> tasks;

    const Complex& object(const std::string& name) const {
        for (const auto& [n, x] : objects)
            if (n == name) return x;
        throw ScenarioError("unknown object '" + name + "'");
    }
};

inline Field field_from_string(const std::string& s) {
    if (s == "Q") return Field::Q();
    if (s.rfind("Fp:", 0) == 0) {
        try {
            return Field::Fp(std::stoll(s.substr(3)));
        } catch (const std::exception& e) {
            throw ScenarioError(std::string("field: ") + e.what());
        }
    }
    throw ScenarioError("field: expected 'Q' or 'Fp:<prime>'");
}

namespace detail {

inline PosetPtr poset_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("names"))
        throw ScenarioError("poset: expected {names, below, levels}");
    std::vector<std::string> names = j["names"].get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> below;
    for (const Json& b : j.value("below", Json::array())) {
        if (!b.is_array() || b.size() != 2)
            throw ScenarioError("poset: each relation is a [below, above] pair");
        below.emplace_back(b[0].get<std::string>(), b[1].get<std::string>());
    }
    std::vector<int> levels = j.contains("levels")
                                  ? j["levels"].get<std::vector<int>>()
                                  : std::vector<int>(names.size(), 0);
    try {
        return std::make_shared<StratPoset>(std::move(names), below, std::move(levels));
    } catch (const std::invalid_argument& e) {
        throw ScenarioError(std::string("poset: ") + e.what());
    }
}

inline Complex object_from_json(const Scenario& sc, const PosetPtr& p, const Json& j) {
    if (j.is_object() && j.contains("complex"))
        return complex_from_json(p, sc.field, j["complex"]);
    if (!j.is_object() || !j.contains("make"))
        throw ScenarioError("object: expected {make, ...} or {complex: ...}");
    std::string make = j["make"].get<std::string>();
    int degree = j.value("degree", 0);
    auto at = [&]() { return p->index_of(j.at("at").get<std::string>()); };
    if (make == "simple")
        return Complex::from_rep(PosetRep::simple(p, sc.field, at()), degree);
    if (make == "injective")
        return Complex::from_rep(PosetRep::injective(p, sc.field, at()), degree);
    if (make == "projective")
        return Complex::from_rep(PosetRep::projective(p, sc.field, at()), degree);
    if (make == "constant")
        return Complex::from_rep(PosetRep::constant(p, sc.field), degree);
    if (make == "zero") return Complex(p, sc.field);
    if (make == "sum") {
        Complex s(p, sc.field);
        for (const Json& n : j.at("of"))
            s = Complex::direct_sum(s, sc.object(n.get<std::string>()));
        return s;
    }
    if (make == "shift") return sc.object(j.at("of").get<std::string>()).shift(j.value("by", 1));
    if (make == "cone") {
        const Complex& a = sc.object(j.at("from").get<std::string>());
        const Complex& b = sc.object(j.at("to").get<std::string>());
        std::vector<ChainMap> basis = homotopy_hom_basis(a, b);
        std::size_t k = j.value("basis", 0);
        if (k >= basis.size())
            throw ScenarioError("object: cone basis index out of range");
        return cone(basis[k]).c;
    }
    throw ScenarioError("object: unknown constructor '" + make + "'");
}

}  // namespace detail

/// Parse a scenario document. A non-empty field string overrides the one in
/// the file (the command line's --field option).
inline Scenario parse_scenario(const Json& j, const std::string& field_override = "") {
    if (!j.is_object()) throw ScenarioError("scenario: top level must be an object");
    if (j.value("schema", 0) != 1) throw ScenarioError("scenario: unsupported schema");
    Scenario sc;
    sc.field = field_from_string(
        !field_override.empty() ? field_override : j.value("field", "Q"));
    const Json& inst = j.at("instance");
    std::string kind = inst.value("kind", "");
    PosetPtr p;
    if (kind == "support_level") {
        p = detail::poset_from_json(inst.at("poset"));
        sc.baric = BaricRealization::support_level(p);
    } else if (kind == "graded_weight") {
        sc.baric = BaricRealization::graded_weight(inst.at("lo").get<int>(),
                                                   inst.at("hi").get<int>());
        p = sc.baric.poset();
    } else if (kind == "exceptional") {
        p = detail::poset_from_json(inst.at("poset"));
        // generators are resolved after the objects are built
    } else {
        throw ScenarioError("instance: unknown kind '" + kind + "'");
    }
    const Json objs = j.value("objects", Json::object());
    for (const auto& [name, oj] : objs.items())
        sc.objects.emplace_back(name, detail::object_from_json(sc, p, oj));
    if (kind == "exceptional") {
        std::vector<Complex> nabs;
        for (const Json& n : inst.at("generators"))
            nabs.push_back(sc.object(n.get<std::string>()));
        try {
            sc.baric = BaricRealization::exceptional(std::move(nabs));
        } catch (const std::invalid_argument& e) {
            throw ScenarioError(std::string("instance: ") + e.what());
        }
    }
    for (const Json& tj : j.value("tasks", Json::array())) {
        ScenarioTask t;
        t.op = tj.at("op").get<std::string>();
        if (t.op.rfind("verify_", 0) == 0) t.op = t.op.substr(7);
        for (const Json& n : tj.value("sample", Json::array()))
            t.sample.push_back(n.get<std::string>());
        for (const Json& n : tj.value("deltas", Json::array()))
            t.deltas.push_back(n.get<std::string>());
        for (const Json& n : tj.value("closed", Json::array()))
            t.closed.push_back(n.get<std::string>());
        sc.tasks.push_back(std::move(t));
    }
    return sc;
}

/// Run every task of a scenario, merging the reports with task-index
/// prefixes on the check ids.
inline Report run_scenario(const Scenario& sc) {
    Report out;
    for (std::size_t i = 0; i < sc.tasks.size(); ++i) {
        const ScenarioTask& t = sc.tasks[i];
        std::vector<Complex> sample;
        for (const std::string& n : t.sample) sample.push_back(sc.object(n));
        Report r;
        if (t.op == "baric_axioms") {
            r = verify_baric_axioms(sc.baric, sample);
        } else if (t.op == "truncation_identities") {
            r = verify_truncation_identities(sc.baric, sample);
        } else if (t.op == "compat_suite") {
            StaggerContext ctx{sc.baric, 0, false};
            r = verify_compat_suite(ctx, sample);
        } else if (t.op == "perverse_equivalence") {
            StaggerContext ctx{sc.baric, 0, false};
            certify_compatibility(ctx, sample);
            r = verify_perverse_equivalence(ctx, sample);
        } else if (t.op == "exceptional_axioms") {
            std::vector<Complex> deltas;
            for (const std::string& n : t.deltas) deltas.push_back(sc.object(n));
            r = verify_exceptional_axioms(sc.baric, deltas);
        } else if (t.op == "gluing") {
            std::vector<bool> z(sc.baric.poset()->size(), false);
            for (const std::string& n : t.closed) z[sc.baric.poset()->index_of(n)] = true;
            r = verify_gluing(sc.baric, z, sample);
        } else if (t.op == "mult_duality") {
            r = verify_mult_duality(sc.baric, sample);
        } else {
            throw ScenarioError("task: unknown op '" + t.op + "'");
        }
        for (CheckResult& c : r.checks)
            out.add("task" + std::to_string(i) + "/" + t.op + "/" + c.id, c.pass,
                    std::move(c.detail));
    }
    return out;
}

}  // namespace stag
