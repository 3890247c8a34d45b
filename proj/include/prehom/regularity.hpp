#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "prehom/graded.hpp"
#include "prehom/pentad.hpp"

/// Generic points, sl2-triples and the regularity decision.
///
/// Vectors x live in U, vectors y in the dual module, h in g (coordinates).
/// With the pentad's sign conventions the triple relations read
/// pi(h) x = 2x, pi_dual(h) y = -2y and Phi(x (x) y) = h.
namespace prehom::preh {

using pentad::StandardPentad;

class NotSl2Triple : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Sl2Triple {
public:
    /// Verifies all three relations exactly; throws NotSl2Triple naming the first that fails.
    Sl2Triple(const StandardPentad& p, Vector y, Vector h, Vector x);

    [[nodiscard]] const Vector& y() const { return y_; }
    [[nodiscard]] const Vector& h() const { return h_; }
    [[nodiscard]] const Vector& x() const { return x_; }

private:
    Vector y_, h_, x_;
};

/// Which relation (if any) fails: "[h,x]=2x", "[h,y]=-2y" or "[x,y]=h".
std::optional<std::string> triple_defect(const StandardPentad& p, const Vector& y, const Vector& h, const Vector& x);

/// Matrix of y -> Phi(x (x) y), size dim g x dim U*.
Matrix ad_on_dual(const StandardPentad& p, const Vector& x);

/// Matrix of xi -> Phi(xi (x) y), size dim g x dim U.
Matrix ad_on_module(const StandardPentad& p, const Vector& y);

/// y -> Phi(x (x) y) is injective.
bool is_generic(const StandardPentad& p, const Vector& x);

struct SearchOptions {
    std::size_t attempts = 64;
    std::uint64_t seed = 0;
    /// Try the all-ones vector before any random sample.
    bool ones_first = true;
};

struct GenericSearch {
    enum class Status { Found, NotFound };
    Status status = Status::NotFound;
    Vector point;
    std::size_t rank = 0;  // rank of ad_on_dual(point); equals dim U* when Found
    std::size_t dual_dim = 0;
    std::size_t candidates_tried = 0;
    SearchOptions options;
    std::vector<std::string> log;
    std::string reason;  // NotFound: why; never a proof of non-prehomogeneity
};

/// Samples integer candidates in [-9, 9] from a seeded generator and returns
/// the first one that is certified generic.
GenericSearch find_generic(const StandardPentad& p, const SearchOptions& options = {});

struct PartnerResult {
    SolveResult::Kind kind = SolveResult::Kind::NoSolution;
    Vector y;                        // Unique / Affine: a solution
    std::vector<Vector> kernel;      // Affine
    Vector inconsistency;            // NoSolution from the linear system
    std::string reason;              // NoSolution: short explanation
    std::optional<Sl2Triple> triple; // Unique: the verified triple
};

/// The linear system solved for the partner of x: rows Phi(x (x) .) = h,
/// followed by (pi_dual(h) + 2) y = 0. Exposed so certificates can be replayed.
std::pair<Matrix, Vector> partner_system(const StandardPentad& p, const Vector& h, const Vector& x);

/// Solves for y with (y, h, x) an sl2-triple. [h, x] = 2x is checked first;
/// the eigen equation for y is part of the system, so any h is accepted.
PartnerResult sl2_partner(const StandardPentad& p, const Vector& h, const Vector& x);

/// Condition (P)! on the x side: the partner exists and is unique.
bool check_P_bang_primal(const StandardPentad& p, const Vector& h, const Vector& x);

struct DualCheck {
    bool holds = false;
    bool solvable = false;
    std::size_t rank = 0;  // rank of ad_on_module(y)
    std::size_t module_dim = 0;
    Vector partner;                 // a solution xi when solvable
    std::optional<Vector> witness;  // nonzero xi with Phi(xi (x) y) = 0 when not injective
};

/// Condition (P)! on the y side: Phi(xi (x) y) = h is solvable with
/// pi(h) xi = 2 xi, and xi -> Phi(xi (x) y) is injective.
DualCheck check_dual(const StandardPentad& p, const Vector& h, const Vector& y);
bool check_P_bang_dual(const StandardPentad& p, const Vector& h, const Vector& y);

/// Condition (P) on the x side: some partner exists. This only signals that a
/// nontrivial relative invariant exists; no polynomial is computed.
bool relative_invariant_indicator(const StandardPentad& p, const Vector& h, const Vector& x);

enum class Outcome { Regular, NotRegular, Inconclusive };
std::string to_string(Outcome o);

struct Certificate {
    Outcome outcome = Outcome::Inconclusive;
    Vector h0;
    std::optional<Vector> x;
    std::optional<Vector> y;
    std::size_t algebra_dim = 0;
    std::size_t module_dim = 0;
    std::size_t dual_dim = 0;
    std::optional<std::size_t> rank_x;  // rank of y -> Phi(X (x) y)
    std::optional<std::size_t> rank_y;  // rank of xi -> Phi(xi (x) Y)
    /// NotRegular: "primal" (no partner for X) or "dual" (partner of Y not unique).
    std::string failed_clause;
    /// "kernel": nonzero xi with Phi(xi (x) Y) = 0; "inconsistency": w with w^T A = 0, w.b != 0
    /// for the partner system of X.
    std::string witness_kind;
    std::optional<Vector> witness;
    SearchOptions search;
    std::string form;  // "trace" when B is the trace form of the realization, else "custom"
    std::vector<std::string> log;
};

class AssumptionHFails : public std::runtime_error {
public:
    explicit AssumptionHFails(const std::string& why) : std::runtime_error("Assumption (H) fails: " + why) {}
};

class NoGradingElement : public std::runtime_error {
public:
    NoGradingElement() : std::runtime_error("pentad has no unique grading element") {}
};

/// The decision procedure: grading element H0, a certified generic X, its
/// partner Y, then injectivity of xi -> Phi(xi (x) Y). One generic point is
/// enough because every clause is constant along the dense orbit.
Certificate decide_regularity(const StandardPentad& p, const SearchOptions& options = {});

struct Replay {
    bool agrees = false;
    std::vector<std::string> failures;
};

/// Re-checks every claim in a certificate with fresh exact computations.
Replay verify_certificate(const StandardPentad& p, const Certificate& c);

std::string form_label(const StandardPentad& p);

}  // namespace prehom::preh
