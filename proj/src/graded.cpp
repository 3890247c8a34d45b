#include "prehom/graded.hpp"

#include <cstdlib>
#include <mutex>
#include <string>
#include <tuple>

namespace prehom::graded {

namespace {

int sign_of(int n) { return n > 0 ? 1 : -1; }

Matrix combine(const std::vector<Matrix>& mats, const Vector& coeffs) {
    Matrix m(mats.front().rows(), mats.front().cols());
    for (std::size_t i = 0; i < mats.size(); ++i)
        if (!coeffs[i].is_zero()) m += mats[i] * coeffs[i];
    return m;
}

Vector flatten_apply(const std::vector<Matrix>& maps, const Vector& coords) {
    // sum_q coords[q] * maps[q], flattened
    Vector out(maps.front().rows() * maps.front().cols());
    for (std::size_t q = 0; q < maps.size(); ++q)
        if (!coords[q].is_zero()) axpy(out, coords[q], maps[q].flat());
    return out;
}

// Degree +1 or -1 component read off the pentad.
Component first_component(const StandardPentad& p, int sign) {
    const std::size_t dg = p.algebra_dim();
    const std::size_t mu = p.module_dim();
    const std::size_t md = p.dual_dim();
    Component c;
    c.degree = sign;
    c.dim = sign > 0 ? mu : md;
    const std::size_t probe = sign > 0 ? md : mu;
    c.action = sign > 0 ? p.rep().action() : p.dual().action;
    for (std::size_t j = 0; j < c.dim; ++j) {
        Matrix m(dg, probe);
        for (std::size_t l = 0; l < probe; ++l) {
            // [x_j, y_l] = Phi(x_j (x) y_l);  [y_j, x_l] = -Phi(x_l (x) y_j)
            const Vector& v = sign > 0 ? p.phi_basis(j, l) : p.phi_basis(l, j);
            for (std::size_t r = 0; r < dg; ++r) m(r, l) = sign > 0 ? v[r] : -v[r];
        }
        c.maps.push_back(std::move(m));
    }
    for (std::size_t i = 0; i < c.dim; ++i) {
        Matrix r(c.dim, dg);  // [s_i, b_m] = -rho(b_m) s_i
        for (std::size_t m = 0; m < dg; ++m)
            for (std::size_t row = 0; row < c.dim; ++row) r(row, m) = -c.action[m](row, i);
        c.raise.push_back(std::move(r));
    }
    return c;
}

Component zero_component(const StandardPentad& p) {
    Component c;
    c.degree = 0;
    c.dim = p.algebra_dim();
    for (std::size_t m = 0; m < c.dim; ++m) c.action.push_back(p.algebra().ad(m));
    return c;
}

// Builds U_{sign (k+1)} from cur = U_{sign k} (k >= 1).
Component next_component(const StandardPentad& p, const Component& first, const Component& cur,
                         const std::vector<Matrix>& probe_action, bool with_action) {
    const int sign = sign_of(cur.degree);
    const std::size_t dg = p.algebra_dim();
    const std::size_t gens = first.dim;
    const std::size_t probe = sign > 0 ? p.dual_dim() : p.module_dim();
    const std::size_t dk = cur.dim;

    Component next;
    next.degree = cur.degree + sign;
    if (dk == 0 || gens == 0 || probe == 0) {
        next.raise.assign(gens, Matrix(0, dk));
        if (with_action) next.action.assign(dg, Matrix(0, 0));
        return next;
    }

    const std::size_t width = dk * probe;
    RowSpace space(width);
    std::vector<Vector> generators;
    generators.reserve(gens * dk);
    for (std::size_t i = 0; i < gens; ++i) {
        // rho_k([s_i, t_l]) for every probe basis vector t_l.
        std::vector<Matrix> inner;
        inner.reserve(probe);
        for (std::size_t l = 0; l < probe; ++l) inner.push_back(combine(cur.action, first.maps[i].column(l)));
        for (std::size_t j = 0; j < dk; ++j) {
            // [s_i, u_j](t_l) = rho_k([s_i, t_l]) u_j + [s_i, [u_j, t_l]]
            const Matrix tail = cur.raise[i] * cur.maps[j];
            Vector g(width);
            for (std::size_t r = 0; r < dk; ++r)
                for (std::size_t l = 0; l < probe; ++l) g[r * probe + l] = inner[l](r, j) + tail(r, l);
            if (space.insert(g)) next.spanning.emplace_back(i, j);
            generators.push_back(std::move(g));
        }
    }
    space.finalize();

    next.dim = space.rank();
    next.pivots = space.pivots();
    for (std::size_t q = 0; q < next.dim; ++q) next.maps.push_back(Matrix::reshape(space.row(q), dk, probe));
    for (std::size_t i = 0; i < gens; ++i) {
        Matrix r(next.dim, dk);
        for (std::size_t j = 0; j < dk; ++j) {
            const Vector c = space.coordinates(generators[i * dk + j]);
            for (std::size_t q = 0; q < next.dim; ++q) r(q, j) = c[q];
        }
        next.raise.push_back(std::move(r));
    }

    if (with_action) {
        for (std::size_t m = 0; m < dg; ++m) {
            Matrix a(next.dim, next.dim);
            for (std::size_t q = 0; q < next.dim; ++q) {
                // (a.F)(t) = a.(F t) - F(a.t)
                const Matrix moved = cur.action[m] * next.maps[q] - next.maps[q] * probe_action[m];
                const auto c = space.coordinates_checked(moved.flat());
                if (!c) throw std::logic_error("graded component is not g-stable (degree " + std::to_string(next.degree) + ")");
                for (std::size_t r = 0; r < next.dim; ++r) a(r, q) = (*c)[r];
            }
            next.action.push_back(std::move(a));
        }
    }
    return next;
}

}  // namespace

GradingResult grading_element(const StandardPentad& p) {
    const auto& alg = p.algebra();
    const std::size_t d = alg.dim();
    const std::size_t mu = p.module_dim();
    const std::size_t md = p.dual_dim();
    Matrix a(d * d + mu * mu + md * md, d);
    Vector b(a.rows());
    std::size_t row = 0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t m = 0; m < d; ++m, ++row)
            for (std::size_t k = 0; k < d; ++k) a(row, k) = alg.structure_constant(k, i, m);
    for (std::size_t r = 0; r < mu; ++r)
        for (std::size_t c = 0; c < mu; ++c, ++row) {
            for (std::size_t k = 0; k < d; ++k) a(row, k) = p.rep().action()[k](r, c);
            if (r == c) b[row] = 2;
        }
    for (std::size_t r = 0; r < md; ++r)
        for (std::size_t c = 0; c < md; ++c, ++row) {
            for (std::size_t k = 0; k < d; ++k) a(row, k) = p.dual().action[k](r, c);
            if (r == c) b[row] = -2;
        }
    auto sol = solve(a, b);
    GradingResult out;
    switch (sol.kind) {
        case SolveResult::Kind::NoSolution:
            out.status = GradingResult::Status::Absent;
            break;
        case SolveResult::Kind::Unique:
            out.status = GradingResult::Status::Found;
            out.element = GradingElement{std::move(sol.solution)};
            break;
        case SolveResult::Kind::Affine:
            out.status = GradingResult::Status::Degenerate;
            out.particular = std::move(sol.solution);
            out.solution_space = std::move(sol.kernel);
            break;
    }
    return out;
}

// --- GradedAlgebra ----------------------------------------------------------

struct GradedAlgebra::Memo {
    using Expansion = std::vector<std::vector<std::pair<Rational, std::pair<std::size_t, std::size_t>>>>;
    std::mutex mutex;
    std::map<std::tuple<int, std::size_t, int, std::size_t>, Vector> brackets;
    std::map<int, Expansion> expansions;
};

GradedAlgebra GradedAlgebra::assemble(std::shared_ptr<const StandardPentad> pentad, int max_degree,
                                      std::vector<Component> components) {
    if (!pentad) throw std::invalid_argument("GradedAlgebra: null pentad");
    if (max_degree < 1) throw std::invalid_argument("GradedAlgebra: max degree must be at least 1");
    if (components.size() != static_cast<std::size_t>(2 * max_degree + 1))
        throw std::invalid_argument("GradedAlgebra: expected one component per degree -N..N");
    for (std::size_t i = 0; i < components.size(); ++i)
        if (components[i].degree != static_cast<int>(i) - max_degree)
            throw std::invalid_argument("GradedAlgebra: components out of order");
    GradedAlgebra g;
    g.pentad_ = std::move(pentad);
    g.max_degree_ = max_degree;
    g.components_ = std::move(components);
    g.memo_ = std::make_shared<Memo>();
    return g;
}

const Component& GradedAlgebra::component(int degree) const {
    if (std::abs(degree) > max_degree_)
        throw DegreeOutOfRange("degree " + std::to_string(degree) + " beyond bound " + std::to_string(max_degree_));
    return components_[static_cast<std::size_t>(degree + max_degree_)];
}

std::map<int, std::size_t> GradedAlgebra::dims() const {
    std::map<int, std::size_t> out;
    for (const auto& c : components_) out[c.degree] = c.dim;
    return out;
}

Vector GradedAlgebra::coordinates_in(int degree, const Matrix& map) const {
    const auto& c = component(degree);
    Vector coords(c.dim);
    for (std::size_t q = 0; q < c.dim; ++q) coords[q] = map.flat()[c.pivots[q]];
    return coords;
}

Vector GradedAlgebra::act(const Vector& a, int degree, const Vector& u) const {
    const auto& c = component(degree);
    if (u.size() != c.dim) throw ShapeError("act: element length differs from component dimension");
    if (degree == 0) return pentad_->algebra().bracket(a, u);
    if (c.dim == 0) return {};
    if (!c.action.empty()) {
        Vector out(c.dim);
        for (std::size_t m = 0; m < a.size(); ++m)
            if (!a[m].is_zero()) axpy(out, a[m], c.action[m] * u);
        return out;
    }
    // Top degree: act on the realization and read the coordinates back.
    const int sign = sign_of(degree);
    const auto& values = component(degree - sign);
    const auto& probe = sign > 0 ? pentad_->dual().action : pentad_->rep().action();
    const Matrix f = Matrix::reshape(flatten_apply(c.maps, u), c.maps.front().rows(), c.maps.front().cols());
    const Matrix moved = combine(values.action, a) * f - f * combine(probe, a);
    return coordinates_in(degree, moved);
}

Element GradedAlgebra::bracket(const Element& a, const Element& b) const {
    if (std::abs(a.degree) > max_degree_ || std::abs(b.degree) > max_degree_ ||
        std::abs(a.degree + b.degree) > max_degree_)
        throw DegreeOutOfRange("bracket of degrees " + std::to_string(a.degree) + " and " + std::to_string(b.degree) +
                               " leaves the bound " + std::to_string(max_degree_));
    if (a.coords.size() != dim(a.degree) || b.coords.size() != dim(b.degree))
        throw ShapeError("bracket: element length differs from component dimension");
    return {a.degree + b.degree, bracket_raw(a.degree, a.coords, b.degree, b.coords)};
}

Vector GradedAlgebra::bracket_raw(int j, const Vector& a, int k, const Vector& b) const {
    const int n = j + k;
    if (std::abs(j) > max_degree_ || std::abs(k) > max_degree_ || std::abs(n) > max_degree_)
        throw DegreeOutOfRange("bracket of degrees " + std::to_string(j) + " and " + std::to_string(k));
    if (is_zero(a) || is_zero(b)) return Vector(dim(n));
    if (j == 0) return act(a, k, b);
    if (k == 0) return -act(b, j, a);

    const bool same_side = sign_of(j) == sign_of(k);
    if (same_side && std::abs(j) == 1) {
        const auto& target = component(n);
        Vector out(target.dim);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!a[i].is_zero()) axpy(out, a[i], target.raise[i] * b);
        return out;
    }
    if (!same_side && std::abs(k) == 1) {
        const auto& src = component(j);
        Vector out(dim(n));
        for (std::size_t p = 0; p < a.size(); ++p)
            if (!a[p].is_zero()) axpy(out, a[p], src.maps[p] * b);
        return out;
    }
    if (std::abs(k) == 1 || std::abs(j) == 1) return -bracket_raw(k, b, j, a);

    Vector out(dim(n));
    for (std::size_t p = 0; p < a.size(); ++p) {
        if (a[p].is_zero()) continue;
        for (std::size_t q = 0; q < b.size(); ++q)
            if (!b[q].is_zero()) axpy(out, a[p] * b[q], basis_bracket(j, p, k, q));
    }
    return out;
}

const GradedAlgebra::Memo::Expansion& GradedAlgebra::expansion(int degree) const {
    {
        std::lock_guard lock(memo_->mutex);
        auto it = memo_->expansions.find(degree);
        if (it != memo_->expansions.end()) return it->second;
    }
    const auto& c = component(degree);
    // Coordinates of the spanning generators; basis q = sum_s inv(s, q) gen_s.
    Matrix coords(c.dim, c.dim);
    for (std::size_t s = 0; s < c.dim; ++s) {
        const auto [i, jj] = c.spanning[s];
        for (std::size_t q = 0; q < c.dim; ++q) coords(q, s) = c.raise[i](q, jj);
    }
    const auto inv = inverse(coords);
    if (!inv) throw std::logic_error("spanning generators are dependent");
    Memo::Expansion e(c.dim);
    for (std::size_t q = 0; q < c.dim; ++q)
        for (std::size_t s = 0; s < c.dim; ++s)
            if (!(*inv)(s, q).is_zero()) e[q].emplace_back((*inv)(s, q), c.spanning[s]);
    std::lock_guard lock(memo_->mutex);
    return memo_->expansions.emplace(degree, std::move(e)).first->second;
}

Vector GradedAlgebra::basis_bracket(int j, std::size_t p, int k, std::size_t q) const {
    const auto key = std::make_tuple(j, p, k, q);
    {
        std::lock_guard lock(memo_->mutex);
        auto it = memo_->brackets.find(key);
        if (it != memo_->brackets.end()) return it->second;
    }
    const int n = j + k;
    Vector out(dim(n));
    if (std::abs(k) <= std::abs(j)) {
        // b = sum c [s, u]:  [a, [s, u]] = [[a, s], u] + [s, [a, u]]
        const int sg = sign_of(k);
        const Vector a = unit_vector(dim(j), p);
        for (const auto& [c, gen] : expansion(k)[q]) {
            const Vector s = unit_vector(dim(sg), gen.first);
            const Vector u = unit_vector(dim(k - sg), gen.second);
            axpy(out, c, bracket_raw(j + sg, bracket_raw(j, a, sg, s), k - sg, u));
            axpy(out, c, bracket_raw(sg, s, n - sg, bracket_raw(j, a, k - sg, u)));
        }
    } else {
        // a = sum c [s, u]:  [[s, u], b] = [s, [u, b]] - [u, [s, b]]
        const int sg = sign_of(j);
        const Vector b = unit_vector(dim(k), q);
        for (const auto& [c, gen] : expansion(j)[p]) {
            const Vector s = unit_vector(dim(sg), gen.first);
            const Vector u = unit_vector(dim(j - sg), gen.second);
            axpy(out, c, bracket_raw(sg, s, n - sg, bracket_raw(j - sg, u, k, b)));
            axpy(out, -c, bracket_raw(j - sg, u, k + sg, bracket_raw(sg, s, k, b)));
        }
    }
    std::lock_guard lock(memo_->mutex);
    memo_->brackets.emplace(key, out);
    return out;
}

GradedAlgebra extend(std::shared_ptr<const StandardPentad> pentad, int max_degree) {
    if (!pentad) throw std::invalid_argument("extend: null pentad");
    if (max_degree < 1) throw std::invalid_argument("extend: max degree must be at least 1");
    const auto& p = *pentad;
    std::vector<Component> positive{first_component(p, 1)};
    std::vector<Component> negative{first_component(p, -1)};
    for (int k = 1; k < max_degree; ++k) {
        const bool with_action = k + 1 < max_degree;
        positive.push_back(next_component(p, positive.front(), positive.back(), p.dual().action, with_action));
        negative.push_back(next_component(p, negative.front(), negative.back(), p.rep().action(), with_action));
    }
    std::vector<Component> all;
    for (auto it = negative.rbegin(); it != negative.rend(); ++it) all.push_back(std::move(*it));
    all.push_back(zero_component(p));
    for (auto& c : positive) all.push_back(std::move(c));
    return GradedAlgebra::assemble(std::move(pentad), max_degree, std::move(all));
}

GradedAlgebra extend(const StandardPentad& pentad, int max_degree) {
    return extend(std::make_shared<const StandardPentad>(pentad), max_degree);
}

bool check_minimality(const GradedAlgebra& g) {
    for (int n = -g.max_degree(); n <= g.max_degree(); ++n) {
        if (std::abs(n) < 2) continue;
        const auto& c = g.component(n);
        if (c.dim == 0) continue;
        if (c.maps.size() != c.dim) return false;
        // v -> [v, U_{-sign}] is injective iff the stored maps are independent.
        RowSpace space(c.maps.front().rows() * c.maps.front().cols());
        for (const auto& m : c.maps)
            if (!space.insert(m.flat())) return false;
    }
    return true;
}

bool check_grading(const GradedAlgebra& g, const GradingElement& h) {
    for (int n = -g.max_degree(); n <= g.max_degree(); ++n) {
        const std::size_t d = g.dim(n);
        for (std::size_t q = 0; q < d; ++q) {
            const Vector e = unit_vector(d, q);
            if (g.act(h.coords, n, e) != Rational(2 * n) * e) return false;
        }
    }
    return true;
}

namespace {

struct BasisVector {
    int degree;
    std::size_t index;
};

std::vector<BasisVector> all_basis(const GradedAlgebra& g) {
    std::vector<BasisVector> out;
    for (int n = -g.max_degree(); n <= g.max_degree(); ++n)
        for (std::size_t q = 0; q < g.dim(n); ++q) out.push_back({n, q});
    return out;
}

Element basis_element(const GradedAlgebra& g, const BasisVector& b) {
    return {b.degree, unit_vector(g.dim(b.degree), b.index)};
}

}  // namespace

std::optional<BracketDefect> antisymmetry_defect(const GradedAlgebra& g) {
    const auto basis = all_basis(g);
    for (const auto& x : basis)
        for (const auto& y : basis) {
            if (std::abs(x.degree + y.degree) > g.max_degree()) continue;
            const Element ex = basis_element(g, x);
            const Element ey = basis_element(g, y);
            const Element s{x.degree + y.degree, g.bracket(ex, ey).coords + g.bracket(ey, ex).coords};
            if (!is_zero(s.coords)) return BracketDefect{{{x.degree, x.index}, {y.degree, y.index}}, s};
        }
    return std::nullopt;
}

std::optional<BracketDefect> jacobi_defect(const GradedAlgebra& g) {
    const auto basis = all_basis(g);
    const int N = g.max_degree();
    auto in_range = [N](int d) { return std::abs(d) <= N; };
    for (const auto& x : basis)
        for (const auto& y : basis) {
            if (!in_range(x.degree + y.degree)) continue;
            for (const auto& z : basis) {
                if (!in_range(y.degree + z.degree) || !in_range(z.degree + x.degree) ||
                    !in_range(x.degree + y.degree + z.degree))
                    continue;
                const Element ex = basis_element(g, x);
                const Element ey = basis_element(g, y);
                const Element ez = basis_element(g, z);
                Vector sum = g.bracket(ex, g.bracket(ey, ez)).coords;
                sum = sum + g.bracket(ey, g.bracket(ez, ex)).coords;
                sum = sum + g.bracket(ez, g.bracket(ex, ey)).coords;
                if (!is_zero(sum))
                    return BracketDefect{{{x.degree, x.index}, {y.degree, y.index}, {z.degree, z.index}},
                                         {x.degree + y.degree + z.degree, std::move(sum)}};
            }
        }
    return std::nullopt;
}

}  // namespace prehom::graded
