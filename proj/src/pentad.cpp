#include "prehom/pentad.hpp"

#include "prehom/sampling.hpp"

namespace prehom::pentad {

namespace {

Matrix combine(const std::vector<Matrix>& mats, const Vector& coeffs, std::size_t rows, std::size_t cols) {
    if (coeffs.size() != mats.size()) throw ShapeError("coordinate length differs from algebra dimension");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < mats.size(); ++i)
        if (!coeffs[i].is_zero()) m += mats[i] * coeffs[i];
    return m;
}

}  // namespace

// --- Representation ---------------------------------------------------------

Representation::Representation(std::shared_ptr<const MatrixLieAlgebra> algebra, std::vector<Matrix> action)
    : Representation(unchecked(std::move(algebra), std::move(action))) {
    if (auto d = homomorphism_defect()) throw NotHomomorphism(std::move(*d));
}

Representation Representation::unchecked(std::shared_ptr<const MatrixLieAlgebra> algebra, std::vector<Matrix> action) {
    if (!algebra) throw std::invalid_argument("Representation: null algebra");
    Representation r;
    r.algebra_ = std::move(algebra);
    r.action_ = std::move(action);
    r.dim_ = r.action_.empty() ? 0 : r.action_.front().rows();
    r.check_shapes();
    return r;
}

void Representation::check_shapes() const {
    if (action_.size() != algebra_->dim())
        throw ShapeError("representation needs " + std::to_string(algebra_->dim()) + " action matrices, got " +
                         std::to_string(action_.size()));
    for (const auto& m : action_)
        if (m.rows() != dim_ || m.cols() != dim_) throw ShapeError("action matrices must all be square of equal size");
}

Matrix Representation::act(const Vector& a) const { return combine(action_, a, dim_, dim_); }

std::optional<HomomorphismDefect> Representation::homomorphism_defect() const {
    const std::size_t d = algebra_->dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            Matrix lhs = lie::commutator(action_[i], action_[j]);
            for (std::size_t k = 0; k < d; ++k) {
                const Rational& c = algebra_->structure_constant(i, j, k);
                if (!c.is_zero()) lhs -= action_[k] * c;
            }
            if (!lhs.is_zero()) return HomomorphismDefect{i, j, std::move(lhs)};
        }
    return std::nullopt;
}

// --- Dual modules -----------------------------------------------------------

Matrix DualModule::act(const Vector& a) const { return combine(action, a, dim(), dim()); }

std::optional<CompatibilityDefect> compatibility_defect(const Representation& rep, const DualModule& dual) {
    for (std::size_t i = 0; i < rep.action().size(); ++i) {
        Matrix d = rep.action()[i].transpose() * dual.pairing + dual.pairing * dual.action.at(i);
        if (!d.is_zero()) return CompatibilityDefect{i, std::move(d)};
    }
    return std::nullopt;
}

DualModule dual_representation(const Representation& rep) {
    DualModule out;
    out.pairing = Matrix::identity(rep.module_dim());
    out.action.reserve(rep.action().size());
    for (const auto& m : rep.action()) out.action.push_back(-m.transpose());
    return out;
}

DualModule dual_with_pairing(const Representation& rep, const Matrix& pairing) {
    if (pairing.rows() != rep.module_dim() || pairing.cols() != rep.module_dim())
        throw ShapeError("pairing must be square of the module dimension");
    const auto inv = inverse(pairing);
    if (!inv) throw std::invalid_argument("pairing matrix is singular");
    DualModule out;
    out.pairing = pairing;
    for (const auto& m : rep.action()) out.action.push_back(-(*inv * m.transpose() * pairing));
    return out;
}

Representation box_tensor(std::span<const Representation> factors) {
    std::vector<MatrixLieAlgebra> algebras;
    for (const auto& f : factors) algebras.push_back(f.algebra());
    auto sum = std::make_shared<const MatrixLieAlgebra>(lie::direct_sum(algebras));

    std::vector<std::size_t> dims;
    for (const auto& f : factors) dims.push_back(f.module_dim());
    std::vector<Matrix> action;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        for (const auto& m : factors[k].action()) {
            Matrix acc = Matrix::identity(1);
            for (std::size_t s = 0; s < factors.size(); ++s) acc = kronecker(acc, s == k ? m : Matrix::identity(dims[s]));
            action.push_back(std::move(acc));
        }
    }
    return Representation(std::move(sum), std::move(action));
}

// --- Validation -------------------------------------------------------------

ValidationReport check_standard(const Pentad& p) {
    ValidationReport report;
    const auto& alg = p.algebra();
    const std::size_t d = alg.dim();
    const std::size_t m = p.rep.module_dim();
    auto fail = [&](std::string axiom, std::string detail, std::vector<std::size_t> idx = {},
                    std::optional<Matrix> disc = std::nullopt) {
        report.failures.push_back({std::move(axiom), std::move(detail), std::move(idx), std::move(disc)});
    };

    if (p.form.gram.rows() != d || p.form.gram.cols() != d) {
        fail("form_shape", "gram matrix must be " + std::to_string(d) + "x" + std::to_string(d));
    } else {
        const auto fc = lie::check_form(alg, p.form);
        if (!fc.symmetric)
            fail("form_symmetric", "B(b_i, b_j) != B(b_j, b_i)",
                 {fc.symmetry_witness->at(0), fc.symmetry_witness->at(1)});
        if (!fc.nondegenerate) fail("form_nondegenerate", "gram matrix is singular");
        if (!fc.invariant) {
            const auto& w = *fc.invariance_witness;
            fail("form_invariant", "B([b_i,b_j],b_k) != B(b_i,[b_j,b_k])", {w[0], w[1], w[2]});
        }
    }

    bool dual_shapes_ok = p.dual.pairing.rows() == m && p.dual.pairing.cols() == m && p.dual.action.size() == d;
    for (const auto& a : p.dual.action) dual_shapes_ok = dual_shapes_ok && a.rows() == m && a.cols() == m;
    if (!dual_shapes_ok) {
        fail("dual_shape", "pairing and dual action matrices must be " + std::to_string(m) + "x" + std::to_string(m) +
                               ", one per basis element");
    } else {
        if (rank(p.dual.pairing) != m) fail("pairing_nondegenerate", "pairing matrix is singular");
        if (auto c = compatibility_defect(p.rep, p.dual))
            fail("dual_compatibility", "pi(b_i)^T P + P pi_dual(b_i) != 0", {c->i}, std::move(c->discrepancy));
    }

    if (auto h = p.rep.homomorphism_defect())
        fail("homomorphism", "[pi(b_i), pi(b_j)] != pi([b_i, b_j])", {h->i, h->j}, std::move(h->discrepancy));

    if (report.valid())
        report.phi_existence =
            "B is nondegenerate, so a -> B(a, .) is an isomorphism g -> g*; hence Phi(v (x) f) exists and is unique";
    return report;
}

// --- StandardPentad ---------------------------------------------------------

StandardPentad StandardPentad::validate(Pentad p) {
    auto report = check_standard(p);
    if (!report.valid()) throw InvalidPentad(std::move(report));
    return StandardPentad(std::move(p), true);
}

StandardPentad StandardPentad::unchecked(Pentad p) { return StandardPentad(std::move(p), false); }

StandardPentad::StandardPentad(Pentad p, bool validated) : data_(std::move(p)), validated_(validated) {
    const std::size_t d = algebra_dim();
    if (data_.form.gram.rows() != d || data_.form.gram.cols() != d) throw ShapeError("gram size differs from dim g");
    auto ginv = inverse(data_.form.gram);
    if (!ginv) throw std::invalid_argument("bilinear form is degenerate; Phi is undefined");
    gram_inverse_ = std::move(*ginv);
    if (!inverse(data_.dual.pairing)) throw std::invalid_argument("pairing is degenerate");

    // rhs_k(i, l) = <pi(b_k) e_i, e_l> = (pi(b_k)^T P)(i, l).
    const std::size_t mu = module_dim();
    const std::size_t md = dual_dim();
    std::vector<Matrix> rhs;
    rhs.reserve(d);
    for (const auto& a : data_.rep.action()) rhs.push_back(a.transpose() * data_.dual.pairing);
    phi_basis_.assign(mu * md, Vector(d));
    Vector r(d);
    for (std::size_t i = 0; i < mu; ++i)
        for (std::size_t l = 0; l < md; ++l) {
            for (std::size_t k = 0; k < d; ++k) r[k] = rhs[k](i, l);
            phi_basis_[i * md + l] = gram_inverse_ * r;
        }
}

Rational StandardPentad::pair(const Vector& v, const Vector& f) const { return dot(v, data_.dual.pairing * f); }

Vector StandardPentad::phi(const Vector& v, const Vector& f) const {
    if (v.size() != module_dim() || f.size() != dual_dim()) throw ShapeError("phi: vector length mismatch");
    const Vector pf = data_.dual.pairing * f;
    Vector r(algebra_dim());
    for (std::size_t k = 0; k < algebra_dim(); ++k) r[k] = dot(data_.rep.action()[k] * v, pf);
    return gram_inverse_ * r;
}

EquivarianceReport check_equivariance(const StandardPentad& p, std::size_t trials, std::uint64_t seed) {
    EquivarianceReport out;
    out.seed = seed;
    out.trials = trials;
    Sampler sampler(seed);
    const auto& alg = p.algebra();
    for (std::size_t t = 0; t < trials; ++t) {
        const Vector v = sampler.vector(p.module_dim());
        const Vector f = sampler.vector(p.dual_dim());
        const Vector g = p.phi(v, f);
        for (std::size_t a = 0; a < alg.dim(); ++a) {
            const Vector lhs = p.phi(p.rep().action()[a] * v, f) + p.phi(v, p.dual().action[a] * f);
            const Vector rhs = alg.ad(a) * g;
            if (lhs != rhs) {
                out.holds = false;
                out.witness = EquivarianceWitness{a, v, f, lhs - rhs};
                return out;
            }
        }
    }
    return out;
}

}  // namespace prehom::pentad
