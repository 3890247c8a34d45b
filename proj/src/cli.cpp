#include "prehom/cli.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "prehom/catalog.hpp"
#include "prehom/graded.hpp"
#include "prehom/io.hpp"
#include "prehom/regularity.hpp"

namespace prehom::cli {

namespace {

using io::Json;
using pentad::StandardPentad;

struct InvalidInput : std::runtime_error {
    InvalidInput(const std::string& what, Json body) : std::runtime_error(what), body(std::move(body)) {}
    Json body;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Source {
    std::string pentad_file;
    std::string example;
};

void add_source(CLI::App* cmd, Source& src) {
    auto* file = cmd->add_option("--pentad", src.pentad_file, "pentad description file (JSON)");
    auto* ex = cmd->add_option("--example", src.example, "catalog entry, e.g. paper_example(2)");
    file->excludes(ex);
    ex->excludes(file);
}

Json error_body(const std::string& msg) { return Json{{"error", msg}}; }

StandardPentad load(const Source& src) {
    if (src.pentad_file.empty() && src.example.empty()) throw UsageError("one of --pentad or --example is required");
    if (!src.example.empty()) {
        try {
            return catalog::resolve(src.example);
        } catch (const catalog::UnknownExample& e) {
            throw UsageError(e.what());
        }
    }
    pentad::Pentad raw = [&] {
        try {
            return io::pentad_from_json(io::read_file(src.pentad_file));
        } catch (const std::exception& e) {
            throw InvalidInput(e.what(), error_body(e.what()));
        }
    }();
    auto report = pentad::check_standard(raw);
    if (!report.valid()) throw InvalidInput("pentad fails validation", io::report_to_json(report));
    return StandardPentad::validate(std::move(raw));
}

Vector parse_vector(const std::string& text, std::size_t expected, const char* what) {
    Vector v;
    try {
        if (!text.empty() && text.front() == '[') {
            v = io::vector_from_json(Json::parse(text));
        } else {
            std::stringstream ss(text);
            std::string tok;
            while (std::getline(ss, tok, ',')) v.push_back(Rational::parse(tok));
        }
    } catch (const std::exception& e) {
        throw InvalidInput(e.what(), error_body(std::string(what) + ": " + e.what()));
    }
    if (v.size() != expected) {
        const std::string msg = std::string(what) + " needs " + std::to_string(expected) + " entries, got " +
                                std::to_string(v.size());
        throw InvalidInput(msg, error_body(msg));
    }
    return v;
}

Vector require_grading_element(const StandardPentad& p) {
    const auto g = graded::grading_element(p);
    if (g.status != graded::GradingResult::Status::Found) {
        const std::string msg = "pentad has no unique grading element";
        throw InvalidInput(msg, error_body(msg));
    }
    return g.element->coords;
}

std::string kind_name(SolveResult::Kind k) {
    switch (k) {
        case SolveResult::Kind::NoSolution: return "NoSolution";
        case SolveResult::Kind::Unique: return "Unique";
        case SolveResult::Kind::Affine: return "Affine";
    }
    return "?";
}

Json search_to_json(const preh::GenericSearch& s) {
    Json out{{"status", s.status == preh::GenericSearch::Status::Found ? "Found" : "NotFound"}};
    out["X"] = s.status == preh::GenericSearch::Status::Found ? io::to_json(s.point) : Json(nullptr);
    out["rank"] = s.rank;
    out["of"] = s.dual_dim;
    out["seed"] = s.options.seed;
    out["attempts"] = s.options.attempts;
    if (!s.reason.empty()) out["reason"] = s.reason;
    out["log"] = s.log;
    return out;
}

Json grading_to_json(const StandardPentad& p, const graded::GradingResult& g) {
    using Status = graded::GradingResult::Status;
    Json out;
    switch (g.status) {
        case Status::Found:
            out["status"] = "Found";
            out["H0"] = Json{{"coords", io::to_json(g.element->coords)},
                             {"matrix", io::to_json(p.algebra().element(g.element->coords))}};
            break;
        case Status::Absent:
            out["status"] = "Absent";
            break;
        case Status::Degenerate: {
            out["status"] = "Degenerate";
            out["particular"] = io::to_json(g.particular);
            Json basis = Json::array();
            for (const auto& v : g.solution_space) basis.push_back(io::to_json(v));
            out["solution_space"] = std::move(basis);
            break;
        }
    }
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Standard pentads, graded Lie algebras and regularity certificates", "prehom"};
    app.require_subcommand(1, 1);

    Source src;
    std::uint64_t seed = 0;
    std::size_t attempts = 64;
    int max_degree = 3;
    bool verify = false;
    std::string v_text, f_text, x_text, h_text, certificate_file;

    auto* check = app.add_subcommand("check", "validate the standard-pentad axioms");
    add_source(check, src);
    auto* phi = app.add_subcommand("phi", "evaluate Phi(v (x) f)");
    add_source(phi, src);
    phi->add_option("--v", v_text, "module vector, comma separated or JSON array")->required();
    phi->add_option("--f", f_text, "dual vector, comma separated or JSON array")->required();
    auto* grading = app.add_subcommand("grading-element", "solve for the grading element H0");
    add_source(grading, src);
    auto* generic = app.add_subcommand("generic-point", "search for a certified generic point");
    add_source(generic, src);
    auto* sl2 = app.add_subcommand("sl2", "solve for the sl2 partner of x");
    add_source(sl2, src);
    sl2->add_option("--x", x_text, "module vector (default: a generic point found by search)");
    sl2->add_option("--H", h_text, "algebra element (default: the grading element)");
    auto* regularity = app.add_subcommand("regularity", "decide regularity and emit a certificate");
    add_source(regularity, src);
    regularity->add_flag("--verify-certificate", verify, "replay the certificate before printing");
    auto* dims = app.add_subcommand("graded-dims", "dimensions of the graded components");
    add_source(dims, src);
    dims->add_option("--max-degree", max_degree, "degree bound N")->check(CLI::Range(1, 64));
    auto* list = app.add_subcommand("catalog", "list built-in pentads");
    auto* export_cmd = app.add_subcommand("export", "write the pentad in the file format");
    add_source(export_cmd, src);
    auto* replay = app.add_subcommand("verify-certificate", "replay a certificate against a pentad");
    add_source(replay, src);
    replay->add_option("--certificate", certificate_file, "certificate file (JSON)")->required();
    for (auto* cmd : {generic, sl2, regularity, replay}) {
        cmd->add_option("--seed", seed, "sampling seed");
        cmd->add_option("--attempts", attempts, "candidate budget");
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kComputed : kUsage;
    }

    auto emit = [&out](const Json& j) { out << j.dump(2) << '\n'; };
    preh::SearchOptions search;
    search.seed = seed;
    search.attempts = attempts;

    try {
        if (list->parsed()) {
            Json entries = Json::array();
            for (const auto& e : catalog::catalog()) {
                const auto p = e.build();
                entries.push_back(Json{{"name", e.name},
                                       {"label", e.label()},
                                       {"parameters", e.parameters},
                                       {"description", e.description},
                                       {"dims", Json{{"algebra", p.algebra_dim()}, {"module", p.module_dim()}}}});
            }
            emit(Json{{"entries", std::move(entries)}});
            return kComputed;
        }

        if (check->parsed()) {
            // Report even on failure, so load() is bypassed for files.
            if (!src.pentad_file.empty()) {
                pentad::Pentad raw = [&] {
                    try {
                        return io::pentad_from_json(io::read_file(src.pentad_file));
                    } catch (const std::exception& e) {
                        throw InvalidInput(e.what(), error_body(e.what()));
                    }
                }();
                const auto report = pentad::check_standard(raw);
                emit(io::report_to_json(report));
                return report.valid() ? kComputed : kInvalidInput;
            }
            const auto p = load(src);
            emit(io::report_to_json(pentad::check_standard(p.data())));
            return kComputed;
        }

        const StandardPentad p = load(src);

        if (export_cmd->parsed()) {
            emit(io::pentad_to_json(p));
        } else if (phi->parsed()) {
            const Vector v = parse_vector(v_text, p.module_dim(), "--v");
            const Vector f = parse_vector(f_text, p.dual_dim(), "--f");
            const Vector g = p.phi(v, f);
            emit(Json{{"coords", io::to_json(g)}, {"matrix", io::to_json(p.algebra().element(g))}});
        } else if (grading->parsed()) {
            emit(grading_to_json(p, graded::grading_element(p)));
        } else if (generic->parsed()) {
            emit(search_to_json(preh::find_generic(p, search)));
        } else if (sl2->parsed()) {
            const Vector h = h_text.empty() ? require_grading_element(p) : parse_vector(h_text, p.algebra_dim(), "--H");
            Vector x;
            if (x_text.empty()) {
                auto s = preh::find_generic(p, search);
                if (s.status != preh::GenericSearch::Status::Found) {
                    emit(Json{{"kind", nullptr}, {"search", search_to_json(s)}});
                    return kComputed;
                }
                x = std::move(s.point);
            } else {
                x = parse_vector(x_text, p.module_dim(), "--x");
            }
            const auto r = preh::sl2_partner(p, h, x);
            Json j{{"h", io::to_json(h)}, {"x", io::to_json(x)}, {"kind", kind_name(r.kind)}};
            j["y"] = r.kind == SolveResult::Kind::NoSolution ? Json(nullptr) : io::to_json(r.y);
            if (r.kind == SolveResult::Kind::Affine) {
                Json k = Json::array();
                for (const auto& v : r.kernel) k.push_back(io::to_json(v));
                j["kernel"] = std::move(k);
            }
            if (!r.reason.empty()) j["reason"] = r.reason;
            j["triple_verified"] = r.triple.has_value();
            j["generic"] = preh::is_generic(p, x);
            emit(j);
        } else if (regularity->parsed()) {
            preh::Certificate c;
            try {
                c = preh::decide_regularity(p, search);
            } catch (const preh::AssumptionHFails& e) {
                throw InvalidInput(e.what(), error_body(e.what()));
            } catch (const preh::NoGradingElement& e) {
                throw InvalidInput(e.what(), error_body(e.what()));
            }
            Json j = io::certificate_to_json(p, c);
            if (verify) {
                // Replay the serialized form, not the in-memory value.
                const auto back = io::certificate_from_json(Json::parse(j.dump()));
                const auto r = preh::verify_certificate(p, back);
                j["replay"] = Json{{"agrees", r.agrees}, {"failures", r.failures}};
                if (!r.agrees) {
                    emit(j);
                    return kInvalidInput;
                }
            }
            emit(j);
        } else if (dims->parsed()) {
            const auto g = graded::extend(std::make_shared<const StandardPentad>(p), max_degree);
            Json d = Json::object();
            for (const auto& [deg, dim] : g.dims()) d[std::to_string(deg)] = dim;
            const auto h = graded::grading_element(p);
            const bool graded_ok = h.status == graded::GradingResult::Status::Found && graded::check_grading(g, *h.element);
            emit(Json{{"dims", std::move(d)}, {"minimal", graded::check_minimality(g)}, {"grading_checked", graded_ok}});
        } else if (replay->parsed()) {
            const auto c = io::certificate_from_json(io::read_file(certificate_file));
            const auto r = preh::verify_certificate(p, c);
            emit(Json{{"agrees", r.agrees}, {"outcome", preh::to_string(c.outcome)}, {"failures", r.failures}});
            return r.agrees ? kComputed : kInvalidInput;
        }
        return kComputed;
    } catch (const UsageError& e) {
        err << "prehom: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidInput& e) {
        emit(e.body);
        err << "prehom: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::exception& e) {
        emit(error_body(e.what()));
        err << "prehom: " << e.what() << '\n';
        return kInvalidInput;
    }
}

}  // namespace prehom::cli
