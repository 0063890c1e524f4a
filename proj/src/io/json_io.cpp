#include "circconj/io/json_io.hpp"

#include <fstream>

namespace circconj::io {

void check_fields(const json& j, std::initializer_list<const char*> allowed,
                  std::initializer_list<const char*> required, const std::string& what) {
  if (!j.is_object()) throw DomainError(what + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw DomainError(what + ": unknown field \"" + key + "\"");
  }
  for (const char* r : required)
    if (!j.contains(r)) throw DomainError(what + ": missing field \"" + std::string(r) + "\"");
}

namespace {

i64 get_int(const json& j, const char* key, const std::string& what) {
  const json& v = j.at(key);
  if (!v.is_number_integer()) throw DomainError(what + ": field \"" + key + "\" must be an integer");
  return v.get<i64>();
}

int get_small_int(const json& j, const char* key, const std::string& what) {
  i64 v = get_int(j, key, what);
  if (v < -1000000 || v > 1000000) throw DomainError(what + ": field \"" + key + "\" is out of range");
  return static_cast<int>(v);
}

std::vector<i64> int_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw DomainError(what + " must be an array of integers");
  std::vector<i64> out;
  for (const json& x : j) {
    if (!x.is_number_integer()) throw DomainError(what + " must be an array of integers");
    out.push_back(x.get<i64>());
  }
  return out;
}

IntMatrix int_matrix(const json& j, const std::string& what) {
  if (!j.is_array()) throw DomainError(what + " must be an array of rows");
  IntMatrix out;
  for (const json& row : j) out.push_back(int_list(row, what));
  return out;
}

}  // namespace

json surd_to_json(const Surd& x) { return {{"a", x.a()}, {"b", x.b()}, {"c", x.c()}, {"d", x.d()}}; }

Surd surd_from_json(const json& j) {
  check_fields(j, {"a", "b", "c", "d"}, {"a", "b", "c", "d"}, "surd");
  return Surd(get_int(j, "a", "surd"), get_int(j, "b", "surd"), get_int(j, "c", "surd"), get_int(j, "d", "surd"));
}

json alpha_to_json(const Alpha& a) {
  if (const Surd* s = std::get_if<Surd>(&a)) return surd_to_json(*s);
  return {{"nonquadratic_cf", std::get<CfPrefix>(a).quotients}};
}

Alpha alpha_from_json(const json& j) {
  if (j.is_object() && j.contains("nonquadratic_cf")) {
    check_fields(j, {"nonquadratic_cf"}, {"nonquadratic_cf"}, "alpha");
    std::vector<i64> q = int_list(j.at("nonquadratic_cf"), "nonquadratic_cf");
    if (q.size() < 2) throw DomainError("nonquadratic_cf needs at least two partial quotients");
    for (std::size_t i = 1; i < q.size(); ++i)
      if (q[i] < 1) throw DomainError("partial quotients after a0 must be positive");
    return CfPrefix{std::move(q)};
  }
  return surd_from_json(j);
}

json cf_to_json(const ContinuedFraction& cf) { return {{"preperiod", cf.preperiod}, {"period", cf.period}}; }

json matrix_to_json(const UnimodularMatrix2& m) { return m.row_major(); }

UnimodularMatrix2 matrix_from_json(const json& j) {
  std::vector<i64> v = int_list(j, "matrix");
  if (v.size() != 4) throw DomainError("matrix must have four entries [m2, m1, n2, n1]");
  return UnimodularMatrix2::make(v[0], v[1], v[2], v[3]);
}

json line_descriptor_to_json(const LineGroupDescriptor& d) { return {{"alpha", alpha_to_json(d.alpha)}, {"n", d.n}}; }

LineGroupDescriptor line_descriptor_from_json(const json& j) {
  check_fields(j, {"alpha", "n"}, {"alpha", "n"}, "line descriptor");
  LineGroupDescriptor d{alpha_from_json(j.at("alpha")), get_small_int(j, "n", "line descriptor")};
  d.validate();
  return d;
}

json descriptor_to_json(const CircleGroupDescriptor& d) {
  return {{"alpha", alpha_to_json(d.alpha)}, {"n", d.n}, {"k", d.k}, {"g", d.g}};
}

CircleGroupDescriptor descriptor_from_json(const json& j) {
  check_fields(j, {"alpha", "n", "k", "g"}, {"alpha", "n", "k", "g"}, "descriptor");
  CircleGroupDescriptor d{alpha_from_json(j.at("alpha")), get_small_int(j, "n", "descriptor"),
                          get_small_int(j, "k", "descriptor"), int_list(j.at("g"), "g")};
  require_valid(d);
  return d;
}

json expr_to_json(const Expr& e) {
  return std::visit(
      [](const auto& n) -> json {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, node::Identity>) {
          return {{"tag", "identity"}};
        } else if constexpr (std::is_same_v<T, node::Translate>) {
          return {{"tag", "translate"}, {"amount", alpha_to_json(n.amount)}};
        } else if constexpr (std::is_same_v<T, node::Scale>) {
          return {{"tag", "scale"}, {"factor", surd_to_json(n.factor)}};
        } else if constexpr (std::is_same_v<T, node::HbarBase>) {
          return {{"tag", "hbar_base"}};
        } else if constexpr (std::is_same_v<T, node::HbarWrap>) {
          return {{"tag", "hbar_wrap"}, {"inner", expr_to_json(n.inner)}};
        } else if constexpr (std::is_same_v<T, node::Staircase>) {
          return {{"tag", "staircase"}, {"inner", expr_to_json(n.inner)}};
        } else if constexpr (std::is_same_v<T, node::CircleExtend>) {
          return {{"tag", "circle_extend"}, {"inner", expr_to_json(n.inner)}, {"k", n.k}, {"f", expr_to_json(n.f)}};
        } else if constexpr (std::is_same_v<T, node::CanonicalF>) {
          return {{"tag", "canonical_f"}, {"k", n.k}, {"g", expr_to_json(n.g)}};
        } else if constexpr (std::is_same_v<T, node::Retwist>) {
          return {{"tag", "retwist"}, {"f", expr_to_json(n.f)}, {"fprime", expr_to_json(n.fprime)}, {"k", n.k}};
        } else if constexpr (std::is_same_v<T, node::Compose>) {
          json items = json::array();
          for (const Expr& x : n.items) items.push_back(expr_to_json(x));
          json out{{"tag", "compose"}, {"items", std::move(items)}};
          if (n.commuting) out["commuting"] = true;
          return out;
        } else if constexpr (std::is_same_v<T, node::Inverse>) {
          return {{"tag", "inverse"}, {"inner", expr_to_json(n.inner)}};
        } else {
          return {{"tag", "power"}, {"inner", expr_to_json(n.inner)}, {"exponent", n.exponent}};
        }
      },
      e.node().value);
}

Expr expr_from_json(const json& j) {
  if (!j.is_object() || !j.contains("tag") || !j.at("tag").is_string())
    throw DomainError("expression must be an object with a string \"tag\"");
  const std::string tag = j.at("tag").get<std::string>();
  const std::string what = "expression \"" + tag + "\"";
  if (tag == "identity") {
    check_fields(j, {"tag"}, {}, what);
    return identity_expr();
  }
  if (tag == "translate") {
    check_fields(j, {"tag", "amount"}, {"amount"}, what);
    return translate(alpha_from_json(j.at("amount")));
  }
  if (tag == "scale") {
    check_fields(j, {"tag", "factor"}, {"factor"}, what);
    return scale(surd_from_json(j.at("factor")));
  }
  if (tag == "hbar_base") {
    check_fields(j, {"tag"}, {}, what);
    return hbar_base();
  }
  if (tag == "hbar_wrap") {
    check_fields(j, {"tag", "inner"}, {"inner"}, what);
    return hbar_wrap(expr_from_json(j.at("inner")));
  }
  if (tag == "staircase") {
    check_fields(j, {"tag", "inner"}, {"inner"}, what);
    return staircase(expr_from_json(j.at("inner")));
  }
  if (tag == "circle_extend") {
    check_fields(j, {"tag", "inner", "k", "f"}, {"inner", "k", "f"}, what);
    return circle_extend(expr_from_json(j.at("inner")), get_small_int(j, "k", what), expr_from_json(j.at("f")));
  }
  if (tag == "canonical_f") {
    check_fields(j, {"tag", "k", "g"}, {"k", "g"}, what);
    return canonical_f_expr(get_small_int(j, "k", what), expr_from_json(j.at("g")));
  }
  if (tag == "retwist") {
    check_fields(j, {"tag", "f", "fprime", "k"}, {"f", "fprime", "k"}, what);
    return retwist(expr_from_json(j.at("f")), expr_from_json(j.at("fprime")), get_small_int(j, "k", what));
  }
  if (tag == "compose") {
    check_fields(j, {"tag", "items", "commuting"}, {"items"}, what);
    if (!j.at("items").is_array()) throw DomainError(what + ": items must be an array");
    std::vector<Expr> items;
    for (const json& x : j.at("items")) items.push_back(expr_from_json(x));
    bool commuting = false;
    if (j.contains("commuting")) {
      if (!j.at("commuting").is_boolean()) throw DomainError(what + ": commuting must be a boolean");
      commuting = j.at("commuting").get<bool>();
    }
    return compose(std::move(items), commuting);
  }
  if (tag == "inverse") {
    check_fields(j, {"tag", "inner"}, {"inner"}, what);
    return inverse(expr_from_json(j.at("inner")));
  }
  if (tag == "power") {
    check_fields(j, {"tag", "inner", "exponent"}, {"inner", "exponent"}, what);
    return power(expr_from_json(j.at("inner")), get_int(j, "exponent", what));
  }
  throw DomainError("unknown expression tag \"" + tag + "\"");
}

json witness_to_json(const ConjugacyWitness& w) {
  return {{"f_alpha", matrix_to_json(w.M.f_alpha)},
          {"A", matrix_to_json(w.M.A)},
          {"S", w.M.S},
          {"B", w.M.B},
          {"w", w.w},
          {"h", w.h}};
}

ConjugacyWitness witness_from_json(const json& j) {
  check_fields(j, {"f_alpha", "A", "S", "B", "w", "h"}, {"f_alpha", "A", "S", "B", "w", "h"}, "witness");
  ConjugacyWitness w;
  w.M.f_alpha = matrix_from_json(j.at("f_alpha"));
  w.M.A = matrix_from_json(j.at("A"));
  w.M.S = int_matrix(j.at("S"), "S");
  w.M.B = int_matrix(j.at("B"), "B");
  w.w = int_list(j.at("w"), "w");
  w.h = int_list(j.at("h"), "h");
  return w;
}

json decision_to_json(const Decision& d) {
  json out{{"verdict", to_string(d.verdict)}, {"certificate", d.certificate}};
  out["witness"] = d.witness ? witness_to_json(*d.witness) : json(nullptr);
  return out;
}

json precision_to_json(const Precision& p) {
  return {{"working_bits", p.working_bits},
          {"eval_tolerance", p.eval_tolerance},
          {"delta", p.delta},
          {"power_cap", p.power_cap}};
}

Precision precision_from_json(const json& j) {
  check_fields(j, {"working_bits", "eval_tolerance", "delta", "power_cap"}, {}, "precision");
  Precision p = j.contains("working_bits") ? Precision::with_bits(get_int(j, "working_bits", "precision"))
                                           : Precision{};
  auto number = [&](const char* key) {
    if (!j.at(key).is_number()) throw DomainError(std::string("precision: field \"") + key + "\" must be a number");
    return j.at(key).get<double>();
  };
  if (j.contains("eval_tolerance")) p.eval_tolerance = number("eval_tolerance");
  if (j.contains("delta")) p.delta = number("delta");
  if (j.contains("power_cap")) p.power_cap = get_int(j, "power_cap", "precision");
  p.validate();
  return p;
}

json report_to_json(const VerifyReport& r) {
  json gens = json::array();
  for (const GeneratorReport& g : r.generators) {
    gens.push_back({{"name", g.generator.name},
                    {"image", {{"j", g.generator.image.j}, {"h", g.generator.image.h}}},
                    {"max_deviation", g.max_deviation},
                    {"evaluated", g.evaluated},
                    {"skipped", g.skipped},
                    {"passed", g.passed}});
  }
  return {{"passed", r.passed},
          {"grid_size", r.grid_size},
          {"tol", r.tol},
          {"precision", precision_to_json(r.precision)},
          {"generators", std::move(gens)}};
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw DomainError(path + ": " + e.what());
  }
}

}  // namespace circconj::io
