#include "prehom/regularity.hpp"

#include "prehom/sampling.hpp"

namespace prehom::preh {

namespace {

Vector scaled(const Vector& v, long long s) { return Rational(s) * v; }

// (pi(h) - 2) or (pi_dual(h) + 2) stacked under the Phi rows.
std::pair<Matrix, Vector> stacked_system(const Matrix& phi_rows, const Matrix& eigen, const Vector& h) {
    const std::size_t d = phi_rows.rows();
    const std::size_t n = phi_rows.cols();
    Matrix a(d + eigen.rows(), n);
    Vector b(d + eigen.rows());
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < n; ++c) a(r, c) = phi_rows(r, c);
        b[r] = h[r];
    }
    for (std::size_t r = 0; r < eigen.rows(); ++r)
        for (std::size_t c = 0; c < n; ++c) a(d + r, c) = eigen(r, c);
    return {std::move(a), std::move(b)};
}

bool is_grading_element(const StandardPentad& p, const Vector& h) {
    const auto& alg = p.algebra();
    for (std::size_t i = 0; i < alg.dim(); ++i)
        if (!is_zero(alg.bracket(h, unit_vector(alg.dim(), i)))) return false;
    return p.rep().act(h) == Matrix::identity(p.module_dim()) * Rational(2) &&
           p.dual().act(h) == Matrix::identity(p.dual_dim()) * Rational(-2);
}

}  // namespace

std::optional<std::string> triple_defect(const StandardPentad& p, const Vector& y, const Vector& h, const Vector& x) {
    if (x.size() != p.module_dim() || y.size() != p.dual_dim() || h.size() != p.algebra_dim())
        return std::string("shape");
    if (p.rep().act(h) * x != scaled(x, 2)) return std::string("[h,x]=2x");
    if (p.dual().act(h) * y != scaled(y, -2)) return std::string("[h,y]=-2y");
    if (p.phi(x, y) != h) return std::string("[x,y]=h");
    return std::nullopt;
}

Sl2Triple::Sl2Triple(const StandardPentad& p, Vector y, Vector h, Vector x)
    : y_(std::move(y)), h_(std::move(h)), x_(std::move(x)) {
    if (auto d = triple_defect(p, y_, h_, x_)) throw NotSl2Triple("not an sl2-triple: " + *d + " fails");
}

Matrix ad_on_dual(const StandardPentad& p, const Vector& x) {
    if (x.size() != p.module_dim()) throw ShapeError("ad_on_dual: x has wrong length");
    Matrix m(p.algebra_dim(), p.dual_dim());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t l = 0; l < p.dual_dim(); ++l) {
            const Vector& v = p.phi_basis(i, l);
            for (std::size_t r = 0; r < v.size(); ++r) m(r, l) += x[i] * v[r];
        }
    }
    return m;
}

Matrix ad_on_module(const StandardPentad& p, const Vector& y) {
    if (y.size() != p.dual_dim()) throw ShapeError("ad_on_module: y has wrong length");
    Matrix m(p.algebra_dim(), p.module_dim());
    for (std::size_t l = 0; l < y.size(); ++l) {
        if (y[l].is_zero()) continue;
        for (std::size_t i = 0; i < p.module_dim(); ++i) {
            const Vector& v = p.phi_basis(i, l);
            for (std::size_t r = 0; r < v.size(); ++r) m(r, i) += y[l] * v[r];
        }
    }
    return m;
}

bool is_generic(const StandardPentad& p, const Vector& x) { return rank(ad_on_dual(p, x)) == p.dual_dim(); }

GenericSearch find_generic(const StandardPentad& p, const SearchOptions& options) {
    GenericSearch out;
    out.options = options;
    out.dual_dim = p.dual_dim();
    if (p.dual_dim() > p.algebra_dim()) {
        out.reason = "dim U* = " + std::to_string(p.dual_dim()) + " exceeds dim g = " + std::to_string(p.algebra_dim()) +
                     ", so y -> Phi(x (x) y) is never injective";
        out.log.push_back(out.reason);
        return out;
    }
    Sampler sampler(options.seed);
    for (std::size_t t = 0; t < options.attempts; ++t) {
        Vector x = (t == 0 && options.ones_first) ? Vector(p.module_dim(), Rational(1)) : sampler.vector(p.module_dim());
        const std::size_t r = rank(ad_on_dual(p, x));
        ++out.candidates_tried;
        out.log.push_back("candidate " + std::to_string(t) + ": rank " + std::to_string(r) + "/" +
                          std::to_string(p.dual_dim()));
        if (r == p.dual_dim()) {
            out.status = GenericSearch::Status::Found;
            out.point = std::move(x);
            out.rank = r;
            return out;
        }
        out.rank = std::max(out.rank, r);
    }
    out.reason = "no generic point among " + std::to_string(options.attempts) +
                 " candidates; this does not show that the pentad is not prehomogeneous";
    return out;
}

std::pair<Matrix, Vector> partner_system(const StandardPentad& p, const Vector& h, const Vector& x) {
    Matrix eigen = p.dual().act(h) + Matrix::identity(p.dual_dim()) * Rational(2);
    return stacked_system(ad_on_dual(p, x), eigen, h);
}

PartnerResult sl2_partner(const StandardPentad& p, const Vector& h, const Vector& x) {
    PartnerResult out;
    if (h.size() != p.algebra_dim() || x.size() != p.module_dim()) throw ShapeError("sl2_partner: wrong lengths");
    if (p.rep().act(h) * x != scaled(x, 2)) {
        out.reason = "[h,x] != 2x";
        return out;
    }
    const auto [a, b] = partner_system(p, h, x);
    auto sol = solve(a, b);
    out.kind = sol.kind;
    switch (sol.kind) {
        case SolveResult::Kind::NoSolution:
            out.reason = "Phi(x (x) y) = h has no solution";
            out.inconsistency = std::move(sol.inconsistency);
            break;
        case SolveResult::Kind::Unique:
            out.y = std::move(sol.solution);
            out.triple.emplace(p, out.y, h, x);
            break;
        case SolveResult::Kind::Affine:
            out.y = std::move(sol.solution);
            out.kernel = std::move(sol.kernel);
            break;
    }
    return out;
}

bool check_P_bang_primal(const StandardPentad& p, const Vector& h, const Vector& x) {
    return sl2_partner(p, h, x).kind == SolveResult::Kind::Unique;
}

DualCheck check_dual(const StandardPentad& p, const Vector& h, const Vector& y) {
    DualCheck out;
    out.module_dim = p.module_dim();
    const Matrix ad = ad_on_module(p, y);
    out.rank = rank(ad);
    if (p.dual().act(h) * y == scaled(y, -2)) {
        Matrix eigen = p.rep().act(h) - Matrix::identity(p.module_dim()) * Rational(2);
        const auto [a, b] = stacked_system(ad, eigen, h);
        auto sol = solve(a, b);
        out.solvable = sol.solvable();
        if (out.solvable) out.partner = std::move(sol.solution);
    }
    if (out.rank < out.module_dim) out.witness = kernel_basis(ad).front();
    out.holds = out.solvable && out.rank == out.module_dim;
    return out;
}

bool check_P_bang_dual(const StandardPentad& p, const Vector& h, const Vector& y) { return check_dual(p, h, y).holds; }

bool relative_invariant_indicator(const StandardPentad& p, const Vector& h, const Vector& x) {
    return sl2_partner(p, h, x).kind != SolveResult::Kind::NoSolution;
}

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::Regular: return "Regular";
        case Outcome::NotRegular: return "NotRegular";
        case Outcome::Inconclusive: return "Inconclusive";
    }
    return "?";
}

std::string form_label(const StandardPentad& p) {
    return p.form().gram == lie::trace_form(p.algebra()).gram ? "trace" : "custom";
}

Certificate decide_regularity(const StandardPentad& p, const SearchOptions& options) {
    const auto h_report = lie::check_assumption_H(p.algebra(), p.rep().action());
    if (!h_report.holds) throw AssumptionHFails(h_report.reason);
    const auto grading = graded::grading_element(p);
    if (grading.status != graded::GradingResult::Status::Found) throw NoGradingElement();

    Certificate c;
    c.h0 = grading.element->coords;
    c.algebra_dim = p.algebra_dim();
    c.module_dim = p.module_dim();
    c.dual_dim = p.dual_dim();
    c.search = options;
    c.form = form_label(p);

    const auto search = find_generic(p, options);
    c.log = search.log;
    if (search.status == GenericSearch::Status::NotFound) {
        c.outcome = Outcome::Inconclusive;
        c.log.push_back(search.reason);
        return c;
    }
    c.x = search.point;
    c.rank_x = search.rank;

    auto partner = sl2_partner(p, c.h0, *c.x);
    if (partner.kind == SolveResult::Kind::NoSolution) {
        c.outcome = Outcome::NotRegular;
        c.failed_clause = "primal";
        c.witness_kind = "inconsistency";
        c.witness = std::move(partner.inconsistency);
        return c;
    }
    if (partner.kind == SolveResult::Kind::Affine)
        throw std::logic_error("partner of a certified generic point is not unique");
    c.y = partner.y;

    const auto dual = check_dual(p, c.h0, *c.y);
    c.rank_y = dual.rank;
    if (dual.holds) {
        c.outcome = Outcome::Regular;
    } else {
        c.outcome = Outcome::NotRegular;
        c.failed_clause = "dual";
        c.witness_kind = "kernel";
        c.witness = dual.witness;
    }
    return c;
}

Replay verify_certificate(const StandardPentad& p, const Certificate& c) {
    Replay r;
    auto fail = [&r](std::string s) { r.failures.push_back(std::move(s)); };

    if (c.algebra_dim != p.algebra_dim() || c.module_dim != p.module_dim() || c.dual_dim != p.dual_dim())
        fail("dimensions differ from the pentad");
    if (c.form != form_label(p)) fail("form label differs");
    if (c.h0.size() != p.algebra_dim() || !is_grading_element(p, c.h0)) fail("H0 is not a grading element");
    if (!r.failures.empty()) return r;

    if (c.outcome == Outcome::Inconclusive) {
        if (c.x) fail("Inconclusive certificate carries a generic point");
        if (find_generic(p, c.search).status != GenericSearch::Status::NotFound)
            fail("recorded search settings do find a generic point");
        r.agrees = r.failures.empty();
        return r;
    }

    if (!c.x || c.x->size() != p.module_dim()) {
        fail("missing X");
        return r;
    }
    const std::size_t rx = rank(ad_on_dual(p, *c.x));
    if (!c.rank_x || *c.rank_x != rx) fail("rank of y -> Phi(X (x) y) differs from the recorded value");
    if (rx != p.dual_dim()) fail("X is not generic");

    if (c.outcome == Outcome::NotRegular && c.failed_clause == "primal") {
        const auto [a, b] = partner_system(p, c.h0, *c.x);
        if (!c.witness || c.witness->size() != a.rows()) {
            fail("missing inconsistency witness");
        } else {
            if (!is_zero(a.transpose() * *c.witness)) fail("witness w does not satisfy w^T A = 0");
            if (dot(*c.witness, b).is_zero()) fail("witness w has w.b = 0");
        }
        r.agrees = r.failures.empty();
        return r;
    }

    if (!c.y || c.y->size() != p.dual_dim()) {
        fail("missing Y");
        return r;
    }
    if (auto d = triple_defect(p, *c.y, c.h0, *c.x)) fail("(Y, H0, X) fails " + *d);
    const Matrix ady = ad_on_module(p, *c.y);
    const std::size_t ry = rank(ady);
    if (!c.rank_y || *c.rank_y != ry) fail("rank of xi -> Phi(xi (x) Y) differs from the recorded value");

    if (c.outcome == Outcome::Regular) {
        if (ry != p.module_dim()) fail("xi -> Phi(xi (x) Y) is not injective");
        if (!check_dual(p, c.h0, *c.y).solvable) fail("Phi(xi (x) Y) = H0 has no solution");
    } else if (c.failed_clause == "dual") {
        if (!c.witness || c.witness->size() != p.module_dim() || is_zero(*c.witness))
            fail("missing nonzero kernel witness");
        else if (!is_zero(ady * *c.witness))
            fail("witness is not in the kernel of xi -> Phi(xi (x) Y)");
    } else {
        fail("unknown failed clause '" + c.failed_clause + "'");
    }
    r.agrees = r.failures.empty();
    return r;
}

}  // namespace prehom::preh
