#include "prehom/io.hpp"

#include <fstream>

namespace prehom::io {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::size_t count_from_json(const Json& j, const char* what) {
    if (!j.is_number_unsigned()) throw FormatError(std::string(what) + " must be a non-negative integer");
    return j.get<std::size_t>();
}

std::vector<Matrix> matrices_from_json(const Json& j, const char* what) {
    if (!j.is_array()) throw FormatError(std::string(what) + " must be an array of matrices");
    std::vector<Matrix> out;
    for (const auto& m : j) out.push_back(matrix_from_json(m));
    return out;
}

Json matrices_to_json(const std::vector<Matrix>& ms) {
    Json out = Json::array();
    for (const auto& m : ms) out.push_back(to_json(m));
    return out;
}

preh::Outcome outcome_from_string(const std::string& s) {
    if (s == "Regular") return preh::Outcome::Regular;
    if (s == "NotRegular") return preh::Outcome::NotRegular;
    if (s == "Inconclusive") return preh::Outcome::Inconclusive;
    throw FormatError("unknown outcome '" + s + "'");
}

Json rank_to_json(std::size_t rank, std::size_t of) { return Json{{"rank", rank}, {"of", of}}; }

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const Vector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

Json to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        out.push_back(std::move(row));
    }
    return out;
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (!j.is_string()) throw FormatError("rational must be a string \"p/q\" or an integer");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

Vector vector_from_json(const Json& j) {
    if (!j.is_array()) throw FormatError("vector must be an array");
    Vector out;
    out.reserve(j.size());
    for (const auto& x : j) out.push_back(rational_from_json(x));
    return out;
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw FormatError("matrix must be an array of rows");
    if (j.empty()) return Matrix(0, 0);
    const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
    Matrix m(j.size(), cols);
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw FormatError("matrix rows must be arrays of equal length");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = rational_from_json(j[i][c]);
    }
    return m;
}

Json algebra_to_json(const lie::MatrixLieAlgebra& alg) {
    return Json{{"ambient_size", alg.ambient_size()}, {"basis", matrices_to_json(alg.basis())}};
}

lie::MatrixLieAlgebra algebra_from_json(const Json& j) {
    const std::size_t n = count_from_json(field(j, "ambient_size"), "ambient_size");
    return lie::MatrixLieAlgebra::build(n, matrices_from_json(field(j, "basis"), "basis"));
}

Json pentad_to_json(const pentad::StandardPentad& p) {
    return Json{{"algebra", algebra_to_json(p.algebra())},
                {"action", matrices_to_json(p.rep().action())},
                {"dual_action", matrices_to_json(p.dual().action)},
                {"pairing", to_json(p.dual().pairing)},
                {"form", to_json(p.form().gram)}};
}

pentad::Pentad pentad_from_json(const Json& j) {
    auto alg = std::make_shared<const lie::MatrixLieAlgebra>(algebra_from_json(field(j, "algebra")));
    auto rep = pentad::Representation::unchecked(alg, matrices_from_json(field(j, "action"), "action"));
    pentad::DualModule dual;
    if (j.contains("pairing")) {
        dual.pairing = matrix_from_json(j.at("pairing"));
        if (dual.pairing.rows() != rep.module_dim() || dual.pairing.cols() != rep.module_dim())
            throw FormatError("pairing must be square of the module dimension");
    } else {
        dual.pairing = Matrix::identity(rep.module_dim());
    }
    if (j.contains("dual_action")) {
        dual.action = matrices_from_json(j.at("dual_action"), "dual_action");
    } else if (j.contains("pairing")) {
        if (!inverse(dual.pairing)) throw FormatError("pairing is singular; cannot derive the dual action");
        dual = pentad::dual_with_pairing(rep, dual.pairing);
    } else {
        dual = pentad::dual_representation(rep);
    }
    lie::BilinearForm form = j.contains("form") ? lie::BilinearForm{matrix_from_json(j.at("form"))} : lie::trace_form(*alg);
    return pentad::Pentad{std::move(rep), std::move(dual), std::move(form)};
}

Json report_to_json(const pentad::ValidationReport& r) {
    Json failures = Json::array();
    for (const auto& f : r.failures) {
        Json item{{"axiom", f.axiom}, {"detail", f.detail}, {"indices", f.indices}};
        if (f.discrepancy) item["discrepancy"] = to_json(*f.discrepancy);
        failures.push_back(std::move(item));
    }
    Json out{{"valid", r.valid()}, {"failures", std::move(failures)}};
    if (r.valid()) out["phi_existence"] = r.phi_existence;
    return out;
}

Json certificate_to_json(const pentad::StandardPentad& p, const preh::Certificate& c) {
    Json out;
    out["outcome"] = preh::to_string(c.outcome);
    out["H0"] = Json{{"coords", to_json(c.h0)}, {"matrix", to_json(p.algebra().element(c.h0))}};
    out["X"] = c.x ? to_json(*c.x) : Json(nullptr);
    out["Y"] = c.y ? to_json(*c.y) : Json(nullptr);
    Json ranks = Json::object();
    if (c.rank_x) ranks["ad_X_on_dual"] = rank_to_json(*c.rank_x, c.dual_dim);
    if (c.rank_y) ranks["ad_Y_on_module"] = rank_to_json(*c.rank_y, c.module_dim);
    out["ranks"] = std::move(ranks);
    if (c.witness)
        out["witness"] = Json{{"clause", c.failed_clause}, {"kind", c.witness_kind}, {"vector", to_json(*c.witness)}};
    else
        out["witness"] = nullptr;
    out["seed"] = c.search.seed;
    out["attempts"] = c.search.attempts;
    out["ones_first"] = c.search.ones_first;
    out["form"] = c.form;
    out["dims"] = Json{{"algebra", c.algebra_dim}, {"module", c.module_dim}, {"dual", c.dual_dim}};
    out["log"] = c.log;
    return out;
}

preh::Certificate certificate_from_json(const Json& j) {
    preh::Certificate c;
    try {
        c.outcome = outcome_from_string(field(j, "outcome").get<std::string>());
        c.h0 = vector_from_json(field(field(j, "H0"), "coords"));
        if (!field(j, "X").is_null()) c.x = vector_from_json(j.at("X"));
        if (!field(j, "Y").is_null()) c.y = vector_from_json(j.at("Y"));
        const Json& ranks = field(j, "ranks");
        if (ranks.contains("ad_X_on_dual")) c.rank_x = count_from_json(field(ranks.at("ad_X_on_dual"), "rank"), "rank");
        if (ranks.contains("ad_Y_on_module"))
            c.rank_y = count_from_json(field(ranks.at("ad_Y_on_module"), "rank"), "rank");
        const Json& w = field(j, "witness");
        if (!w.is_null()) {
            c.failed_clause = field(w, "clause").get<std::string>();
            c.witness_kind = field(w, "kind").get<std::string>();
            c.witness = vector_from_json(field(w, "vector"));
        }
        c.search.seed = field(j, "seed").get<std::uint64_t>();
        c.search.attempts = count_from_json(field(j, "attempts"), "attempts");
        c.search.ones_first = field(j, "ones_first").get<bool>();
        c.form = field(j, "form").get<std::string>();
        const Json& dims = field(j, "dims");
        c.algebra_dim = count_from_json(field(dims, "algebra"), "dims.algebra");
        c.module_dim = count_from_json(field(dims, "module"), "dims.module");
        c.dual_dim = count_from_json(field(dims, "dual"), "dims.dual");
        for (const auto& line : field(j, "log")) c.log.push_back(line.get<std::string>());
    } catch (const Json::exception& e) {
        throw FormatError(std::string("malformed certificate: ") + e.what());
    }
    return c;
}

Json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw FormatError("'" + path + "' is not valid JSON: " + e.what());
    }
}

}  // namespace prehom::io
