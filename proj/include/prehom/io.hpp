#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "prehom/graded.hpp"
#include "prehom/pentad.hpp"
#include "prehom/regularity.hpp"

/// JSON encodings. Rationals are strings "p/q" (or "p"), vectors are arrays of
/// them and matrices are arrays of rows. Object keys keep insertion order so
/// output is byte-stable.
namespace prehom::io {

using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json to_json(const Rational& r);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);

Rational rational_from_json(const Json& j);
Vector vector_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);

/// { "ambient_size": n, "basis": [matrix...] }
Json algebra_to_json(const lie::MatrixLieAlgebra& alg);
lie::MatrixLieAlgebra algebra_from_json(const Json& j);

/// { "algebra", "action", "dual_action"?, "pairing"?, "form"? }. Missing
/// entries default to the contragredient action for the given pairing, the
/// identity pairing and the trace form. The result is not validated.
Json pentad_to_json(const pentad::StandardPentad& p);
pentad::Pentad pentad_from_json(const Json& j);

Json report_to_json(const pentad::ValidationReport& r);

Json certificate_to_json(const pentad::StandardPentad& p, const preh::Certificate& c);
preh::Certificate certificate_from_json(const Json& j);

/// Reads and parses a file; throws FormatError on I/O or syntax errors.
Json read_file(const std::string& path);

}  // namespace prehom::io
