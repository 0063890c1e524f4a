#pragma once

#include <nlohmann/json.hpp>

#include "circconj/conjugacy/witness_homeo.hpp"

namespace circconj::io {

using nlohmann::json;

/// Throws DomainError naming the first key of `j` outside `allowed`, or the
/// first key of `required` missing from `j`. `j` must be an object.
void check_fields(const json& j, std::initializer_list<const char*> allowed,
                  std::initializer_list<const char*> required, const std::string& what);

json surd_to_json(const Surd& x);  // {a, b, c, d}
Surd surd_from_json(const json& j);

/// A surd object, or {"nonquadratic_cf": [a0, a1, ...]} for a declared
/// non-quadratic parameter.
json alpha_to_json(const Alpha& a);
Alpha alpha_from_json(const json& j);

json cf_to_json(const ContinuedFraction& cf);  // {preperiod, period}
json matrix_to_json(const UnimodularMatrix2& m);  // [m2, m1, n2, n1]
UnimodularMatrix2 matrix_from_json(const json& j);

json line_descriptor_to_json(const LineGroupDescriptor& d);  // {alpha, n}
LineGroupDescriptor line_descriptor_from_json(const json& j);
json descriptor_to_json(const CircleGroupDescriptor& d);  // {alpha, n, k, g}
/// Parses and validates (including the torsion condition).
CircleGroupDescriptor descriptor_from_json(const json& j);

/// {"tag": ..., node fields}; Compose carries "commuting" only when true.
json expr_to_json(const Expr& e);
Expr expr_from_json(const json& j);

json witness_to_json(const ConjugacyWitness& w);  // {f_alpha, A, S, B, w, h}
ConjugacyWitness witness_from_json(const json& j);
json decision_to_json(const Decision& d);  // {verdict, witness, certificate}

json precision_to_json(const Precision& p);
/// Fields absent from `j` keep their defaults.
Precision precision_from_json(const json& j);

json report_to_json(const VerifyReport& r);

/// Reads and parses a JSON file; DomainError on I/O or syntax errors.
json read_file(const std::string& path);

}  // namespace circconj::io
