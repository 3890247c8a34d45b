#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "prehom/lie.hpp"

/// Standard pentads (g, pi, U, U*, B) and their Phi-maps.
///
/// Bracket sign conventions, fixed here and used by every downstream module
/// (a in g, v in U, f in the dual module):
///
///     [a, v] = pi(a) v          [v, a] = -pi(a) v
///     [a, f] = pi_dual(a) f     [f, a] = -pi_dual(a) f
///     [v, f] = Phi(v (x) f)     [f, v] = -Phi(v (x) f)
///
/// and the pairing is <v, f> = v^T P f.
namespace prehom::pentad {

using lie::MatrixLieAlgebra;

struct HomomorphismDefect {
    std::size_t i = 0;
    std::size_t j = 0;
    Matrix discrepancy;  // [pi(b_i), pi(b_j)] - pi([b_i, b_j])
};

class NotHomomorphism : public std::runtime_error {
public:
    explicit NotHomomorphism(HomomorphismDefect d)
        : std::runtime_error("action is not a Lie algebra homomorphism at basis pair (" + std::to_string(d.i) + ", " +
                             std::to_string(d.j) + ")"),
          defect(std::move(d)) {}
    HomomorphismDefect defect;
};

/// A finite-dimensional representation given by one action matrix per basis
/// element of the algebra.
class Representation {
public:
    /// Checks shapes and the homomorphism property; throws ShapeError / NotHomomorphism.
    Representation(std::shared_ptr<const MatrixLieAlgebra> algebra, std::vector<Matrix> action);
    /// Checks shapes only. Used when loading user data that is validated later.
    static Representation unchecked(std::shared_ptr<const MatrixLieAlgebra> algebra, std::vector<Matrix> action);

    [[nodiscard]] const MatrixLieAlgebra& algebra() const { return *algebra_; }
    [[nodiscard]] const std::shared_ptr<const MatrixLieAlgebra>& algebra_ptr() const { return algebra_; }
    [[nodiscard]] std::size_t module_dim() const { return dim_; }
    [[nodiscard]] const std::vector<Matrix>& action() const { return action_; }
    /// pi(a) for a given in algebra coordinates.
    [[nodiscard]] Matrix act(const Vector& a) const;

    [[nodiscard]] std::optional<HomomorphismDefect> homomorphism_defect() const;

private:
    Representation() = default;
    void check_shapes() const;

    std::shared_ptr<const MatrixLieAlgebra> algebra_;
    std::size_t dim_ = 0;
    std::vector<Matrix> action_;
};

/// The dual module U*, realized with the same dimension as U and an explicit
/// pairing matrix.
struct DualModule {
    std::vector<Matrix> action;  // pi_dual(b_i)
    Matrix pairing;              // P, <v, f> = v^T P f

    [[nodiscard]] std::size_t dim() const { return pairing.cols(); }
    [[nodiscard]] Matrix act(const Vector& a) const;
};

struct CompatibilityDefect {
    std::size_t i = 0;
    Matrix discrepancy;  // pi(b_i)^T P + P pi_dual(b_i)
};

/// First basis element violating <pi(a)v, f> + <v, pi_dual(a) f> = 0, if any.
std::optional<CompatibilityDefect> compatibility_defect(const Representation& rep, const DualModule& dual);

/// Coordinate dual: P = Id and pi_dual(b_i) = -pi(b_i)^T.
DualModule dual_representation(const Representation& rep);

/// Dual module for a given invertible pairing: pi_dual(b_i) = -P^{-1} pi(b_i)^T P.
DualModule dual_with_pairing(const Representation& rep, const Matrix& pairing);

/// Outer tensor product of representations of the factors of a direct sum.
/// The module is the Kronecker product of the factor modules in order, and
/// basis element b of factor k acts by Id (x) ... (x) pi_k(b) (x) ... (x) Id.
Representation box_tensor(std::span<const Representation> factors);

/// Unvalidated pentad data.
struct Pentad {
    Representation rep;
    DualModule dual;
    lie::BilinearForm form;

    [[nodiscard]] const MatrixLieAlgebra& algebra() const { return rep.algebra(); }
};

struct ValidationFailure {
    std::string axiom;
    std::string detail;
    std::vector<std::size_t> indices;
    std::optional<Matrix> discrepancy;
};

struct ValidationReport {
    std::vector<ValidationFailure> failures;
    /// Why the Phi-map exists (only meaningful when valid()).
    std::string phi_existence;

    [[nodiscard]] bool valid() const { return failures.empty(); }
};

/// Checks the standard-pentad axioms: B symmetric, nondegenerate and
/// invariant; pairing invertible; dual action compatible with the pairing;
/// pi a homomorphism. Existence and uniqueness of Phi then follow because
/// a -> B(a, .) is an isomorphism onto g*.
ValidationReport check_standard(const Pentad& p);

class InvalidPentad : public std::runtime_error {
public:
    explicit InvalidPentad(ValidationReport r)
        : std::runtime_error("pentad fails " + std::to_string(r.failures.size()) + " axiom(s)"), report(std::move(r)) {}
    ValidationReport report;
};

/// A pentad on which the Phi-map is available.
class StandardPentad {
public:
    /// Runs check_standard; throws InvalidPentad on any failure.
    static StandardPentad validate(Pentad p);
    /// Requires only what Phi needs (B nondegenerate, P invertible). For
    /// diagnosing deliberately broken inputs.
    static StandardPentad unchecked(Pentad p);

    [[nodiscard]] const Pentad& data() const { return data_; }
    [[nodiscard]] const MatrixLieAlgebra& algebra() const { return data_.algebra(); }
    [[nodiscard]] const Representation& rep() const { return data_.rep; }
    [[nodiscard]] const DualModule& dual() const { return data_.dual; }
    [[nodiscard]] const lie::BilinearForm& form() const { return data_.form; }
    [[nodiscard]] std::size_t algebra_dim() const { return algebra().dim(); }
    [[nodiscard]] std::size_t module_dim() const { return data_.rep.module_dim(); }
    [[nodiscard]] std::size_t dual_dim() const { return data_.dual.dim(); }
    [[nodiscard]] bool validated() const { return validated_; }

    /// <v, f> = v^T P f.
    [[nodiscard]] Rational pair(const Vector& v, const Vector& f) const;
    /// The unique g with B(b_i, g) = <pi(b_i) v, f> for all i (one solve against the gram matrix).
    [[nodiscard]] Vector phi(const Vector& v, const Vector& f) const;
    /// Phi(e_i (x) e_l) for basis vectors of U and the dual module.
    [[nodiscard]] const Vector& phi_basis(std::size_t i, std::size_t l) const {
        return phi_basis_[i * dual_dim() + l];
    }

private:
    explicit StandardPentad(Pentad p, bool validated);

    Pentad data_;
    bool validated_ = false;
    Matrix gram_inverse_;
    std::vector<Vector> phi_basis_;
};

inline Vector phi_map(const StandardPentad& p, const Vector& v, const Vector& f) { return p.phi(v, f); }

struct EquivarianceWitness {
    std::size_t basis_index = 0;
    Vector v;
    Vector f;
    Vector discrepancy;  // Phi(pi(a)v (x) f) + Phi(v (x) pi_dual(a)f) - [a, Phi(v (x) f)]
};

struct EquivarianceReport {
    bool holds = true;
    std::optional<EquivarianceWitness> witness;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
};

/// Spot-checks Phi(pi(a)v (x) f) + Phi(v (x) pi_dual(a)f) = [a, Phi(v (x) f)] for every
/// basis element a and `trials` seeded random pairs (v, f).
EquivarianceReport check_equivariance(const StandardPentad& p, std::size_t trials, std::uint64_t seed);

}  // namespace prehom::pentad
