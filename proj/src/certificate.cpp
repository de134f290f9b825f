#include "totient_gap/verifier.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace totient_gap {

namespace {

using Json = nlohmann::ordered_json;

Json ratio_to_json(const ExactRatio& r) {
  Json j;
  j["num"] = r.numerator().get_str();
  j["den"] = r.denominator().get_str();
  return j;
}

const Json& require(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    throw certificate_format_error(std::string("certificate: missing field '") + key + "'");
  return *it;
}

BigInt big_field(const Json& j, const char* key) {
  const Json& f = require(j, key);
  if (!f.is_string())
    throw certificate_format_error(std::string("certificate: field '") + key +
                                   "' must be a decimal string");
  try {
    return parse_big_int(f.get<std::string>());
  } catch (const std::invalid_argument&) {
    throw certificate_format_error(std::string("certificate: field '") + key +
                                   "' is not a decimal integer");
  }
}

std::uint64_t uint_field(const Json& j, const char* key) {
  const Json& f = require(j, key);
  if (!f.is_number_unsigned())
    throw certificate_format_error(std::string("certificate: field '") + key +
                                   "' must be an unsigned integer");
  return f.get<std::uint64_t>();
}

ExactRatio ratio_field(const Json& j, const char* key) {
  const Json& f = require(j, key);
  if (!f.is_object())
    throw certificate_format_error(std::string("certificate: field '") + key +
                                   "' must be an object");
  BigInt num = big_field(f, "num");
  BigInt den = big_field(f, "den");
  try {
    return ExactRatio(std::move(num), std::move(den));
  } catch (const std::invalid_argument& e) {
    throw certificate_format_error(std::string("certificate: field '") + key + "': " + e.what());
  }
}

}  // namespace

std::string serialize_certificate(const Certificate& cert) {
  Json j;
  j["format"] = std::string(kCertificateFormat);
  j["modulus"] = cert.modulus.get_str();
  j["residue"] = cert.residue.get_str();
  j["z_prime_indices"] = cert.z_prime_indices;
  j["n"] = cert.n.get_str();
  Json factors = Json::array();
  for (const PrimePower& pp : cert.n_known_factors)
    factors.push_back(Json::array({pp.prime, pp.exponent}));
  j["n_known_factors"] = std::move(factors);
  j["cofactor_digit_count"] = cert.cofactor_digit_count;
  j["coprime_depth"] = cert.coprime_depth;
  j["cofactor_factor_bound"] = cert.cofactor_factor_bound;
  j["z_phi_ratio"] = ratio_to_json(cert.z_phi_ratio);
  j["mn_phi_lower_bound"] = ratio_to_json(cert.mn_phi_lower_bound);
  j["inequality_lhs"] = cert.inequality_lhs.get_str();
  j["inequality_rhs"] = cert.inequality_rhs.get_str();
  return j.dump();
}

Certificate parse_certificate(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw certificate_format_error(std::string("certificate: not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw certificate_format_error("certificate: top level must be an object");
  const Json& format = require(j, "format");
  if (!format.is_string() || format.get<std::string>() != kCertificateFormat)
    throw certificate_format_error("certificate: unsupported format marker");

  Certificate cert;
  cert.modulus = big_field(j, "modulus");
  cert.residue = big_field(j, "residue");

  const Json& indices = require(j, "z_prime_indices");
  if (!indices.is_array() || indices.empty())
    throw certificate_format_error("certificate: z_prime_indices must be a non-empty array");
  for (const Json& idx : indices) {
    if (!idx.is_number_unsigned())
      throw certificate_format_error("certificate: prime indices must be unsigned integers");
    std::uint64_t v = idx.get<std::uint64_t>();
    if (v == 0 || v > UINT32_MAX)
      throw certificate_format_error("certificate: prime index out of range");
    cert.z_prime_indices.push_back(static_cast<std::uint32_t>(v));
  }

  cert.n = big_field(j, "n");

  const Json& factors = require(j, "n_known_factors");
  if (!factors.is_array())
    throw certificate_format_error("certificate: n_known_factors must be an array");
  for (const Json& f : factors) {
    if (!f.is_array() || f.size() != 2 || !f[0].is_number_unsigned() ||
        !f[1].is_number_unsigned())
      throw certificate_format_error("certificate: factors must be [prime, exponent] pairs");
    std::uint64_t e = f[1].get<std::uint64_t>();
    if (e == 0 || e > UINT32_MAX)
      throw certificate_format_error("certificate: factor exponent out of range");
    cert.n_known_factors.push_back({f[0].get<std::uint64_t>(), static_cast<std::uint32_t>(e)});
  }

  cert.cofactor_digit_count = uint_field(j, "cofactor_digit_count");
  std::uint64_t depth = uint_field(j, "coprime_depth");
  if (depth > UINT32_MAX) throw certificate_format_error("certificate: coprime depth out of range");
  cert.coprime_depth = static_cast<std::uint32_t>(depth);
  cert.cofactor_factor_bound = uint_field(j, "cofactor_factor_bound");
  cert.z_phi_ratio = ratio_field(j, "z_phi_ratio");
  cert.mn_phi_lower_bound = ratio_field(j, "mn_phi_lower_bound");
  cert.inequality_lhs = big_field(j, "inequality_lhs");
  cert.inequality_rhs = big_field(j, "inequality_rhs");
  return cert;
}

CheckReport check_certificate(const Certificate& cert, const PrimeTable& table) {
  auto mismatch = [](const std::string& what) {
    return CheckReport{CheckStatus::replay_mismatch, "replay mismatch: " + what};
  };

  VerifyOutcome replay;
  try {
    replay = verify_inequality(cert.z_prime_indices, cert.modulus, cert.residue, table,
                               cert.coprime_depth, /*block=*/1000);
  } catch (const table_exhausted_error& e) {
    return {CheckStatus::replay_mismatch,
            std::string("replay could not be completed with the available prime table: ") +
                e.what()};
  } catch (const std::invalid_argument& e) {
    return {CheckStatus::replay_mismatch, std::string("replay rejected the problem: ") + e.what()};
  } catch (const std::out_of_range& e) {
    return {CheckStatus::replay_mismatch, std::string("replay rejected the problem: ") + e.what()};
  }

  if (replay.n != cert.n) return mismatch("n");
  if (replay.n_sketch.known_factors != cert.n_known_factors) return mismatch("n_known_factors");
  if (digit_count(replay.n_sketch.cofactor) != cert.cofactor_digit_count)
    return mismatch("cofactor_digit_count");
  if (replay.cofactor_factor_bound != cert.cofactor_factor_bound)
    return mismatch("cofactor_factor_bound");
  if (!(replay.z_phi_ratio == cert.z_phi_ratio)) return mismatch("z_phi_ratio");
  if (!(replay.mn_phi_lower_bound == cert.mn_phi_lower_bound))
    return mismatch("mn_phi_lower_bound");
  if (replay.inequality_lhs != cert.inequality_lhs) return mismatch("inequality_lhs");
  if (replay.inequality_rhs != cert.inequality_rhs) return mismatch("inequality_rhs");

  if (!(cert.inequality_lhs < cert.inequality_rhs))
    return {CheckStatus::inequality_not_strict,
            "final comparison is not strict: the certificate proves nothing"};
  return {CheckStatus::valid, "certificate replays cleanly"};
}

CheckReport check_certificate_text(const std::string& json_text, const PrimeTable& table) {
  Certificate cert;
  try {
    cert = parse_certificate(json_text);
  } catch (const certificate_format_error& e) {
    return {CheckStatus::structural_error, e.what()};
  }
  return check_certificate(cert, table);
}

}  // namespace totient_gap
