#pragma once

// Strict JSON boundary: schema-checked parsers that name the offending
// path, and canonical serializers (alphabetical keys, "p/q" rationals,
// 1-based move indices) so equal objects always print equal bytes.

#include <string>
#include <vector>

#include "json.hpp"

#include "valfactor/factor.hpp"
#include "valfactor/uniformize.hpp"

namespace valfactor {

// Malformed text throws input_error "malformed JSON".
nlohmann::json parse_text(const std::string& bytes);

// Array of value objects sharing one basis, with pairwise disjoint surd
// support so the weights cannot satisfy a rational dependence.
std::vector<Value> parse_weights(const nlohmann::json& j, const std::string& path);

MonoMap parse_monomap(const nlohmann::json& j, const std::string& path);

// Move indices are 1-based on the wire; n bounds the range check.
ElementaryMove parse_move(const nlohmann::json& j, int n, const std::string& path);

ZigzagCert parse_cert(const nlohmann::json& j);

Polynomial parse_polynomial(const nlohmann::json& j, const std::string& path);

struct FactorProblem {
    MonoMap map;
    std::vector<Value> weights;
};
FactorProblem parse_factor_problem(const nlohmann::json& j);

struct MonomializeProblem {
    Polynomial poly;
    std::vector<Value> weights;
};
MonomializeProblem parse_monomialize_problem(const nlohmann::json& j);

// Exact or input_error "integer exceeds serialization range".
long long json_int(const mpz_class& v);

nlohmann::json value_json(const Value& v);
nlohmann::json weights_json(const std::vector<Value>& ws);
nlohmann::json monomap_json(const MonoMap& m);
nlohmann::json move_json(const ElementaryMove& mv);
nlohmann::json cert_json(const ZigzagCert& c);
nlohmann::json poly_json(const Polynomial& f);

} // namespace valfactor
