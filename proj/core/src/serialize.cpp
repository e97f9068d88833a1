#include "abelatt/serialize.hpp"

#include <cctype>

#include <json.hpp>

#include "abelatt/errors.hpp"

namespace abelatt {

using ordered_json = nlohmann::ordered_json;

Rat rat_from_string(const std::string& text) {
  if (text.empty()) throw ParseError("rational: empty string");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '-' && c != '/') {
      throw ParseError("rational: bad character in '" + text + "'");
    }
  }
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0) {
    throw ParseError("rational: cannot parse '" + text + "'");
  }
  if (q.get_den() == 0) throw ParseError("rational: zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

namespace {

ordered_json parse_json(const std::string& text, const char* what) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError(std::string(what) + ": invalid JSON");
  return j;
}

ordered_json coeff_strings(const GroupRingElement& x) {
  ordered_json arr = ordered_json::array();
  for (const Rat& c : x.coeffs()) arr.push_back(rat_to_string(c));
  return arr;
}

ordered_json int_rows(const IntMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json integer_vector(const GroupRingElement& x) {
  ordered_json arr = ordered_json::array();
  for (const Rat& c : x.coeffs()) {
    if (!is_integral(c)) {
      throw std::invalid_argument("serialize: expected an integral element");
    }
    arr.push_back(c.get_num().get_str());
  }
  return arr;
}

ordered_json lattice_body(const LatticeDescription& L) {
  ordered_json j;
  j["group"] = L.group.spec_string();
  j["power"] = L.power;
  ordered_json basis = ordered_json::array();
  for (const auto& v : L.basis) basis.push_back(integer_vector(v));
  j["basis"] = std::move(basis);
  j["gram"] = int_rows(L.gram);
  return j;
}

}  // namespace

std::string to_json(const GroupRingElement& x) {
  ordered_json j;
  j["group"] = x.group().spec_string();
  j["coeffs"] = coeff_strings(x);
  return j.dump(2);
}

GroupRingElement ring_element_from_json(const std::string& text) {
  const ordered_json j = parse_json(text, "ring element");
  if (!j.is_object() || !j.contains("group") || !j.contains("coeffs")) {
    throw ParseError("ring element: expected {group, coeffs}");
  }
  const AbelianGroup A = parse_group_spec(j["group"].get<std::string>());
  if (!j["coeffs"].is_array() || j["coeffs"].size() != A.order()) {
    throw ParseError("ring element: coeffs must be an array of length |A|");
  }
  std::vector<Rat> coeffs;
  coeffs.reserve(A.order());
  for (const auto& c : j["coeffs"]) {
    coeffs.push_back(rat_from_string(c.get<std::string>()));
  }
  return GroupRingElement(A, std::move(coeffs));
}

std::string to_json(const LatticeDescription& L) { return lattice_body(L).dump(2); }

std::string to_json(const MinimalBasis& basis) {
  ordered_json j;
  j["group"] = basis.lattice.group.spec_string();
  j["power"] = 2;
  j["construction"] = to_string(basis.construction);
  ordered_json vec = ordered_json::array();
  for (const auto& v : basis.vectors) vec.push_back(integer_vector(v));
  j["basis"] = std::move(vec);
  ordered_json norms = ordered_json::array();
  for (const Int& n : basis.norms_sq) norms.push_back(n.get_str());
  j["norms_sq"] = std::move(norms);
  // Gram of the construction's own vectors.
  IntMatrix gram(basis.vectors.size(), basis.vectors.size());
  for (std::size_t i = 0; i < basis.vectors.size(); ++i) {
    for (std::size_t k = 0; k < basis.vectors.size(); ++k) {
      gram(i, k) = inner(basis.vectors[i], basis.vectors[k]).get_num();
    }
  }
  j["gram"] = int_rows(gram);
  j["unimodular"] = true;  // constructions verify before returning
  j["not_minimal"] = basis.not_minimal;
  return j.dump(2);
}

std::string to_json(const EutaxyCertificate& cert) {
  ordered_json j;
  j["group"] = cert.group.spec_string();
  j["branch"] = to_string(cert.branch);
  ordered_json gamma = ordered_json::array();
  for (std::size_t i = 0; i < cert.pairs.size(); ++i) {
    ordered_json entry;
    entry["a"] = cert.pairs[i].a;
    entry["b"] = cert.pairs[i].b;
    entry["value"] = rat_to_string(cert.gamma[i]);
    gamma.push_back(std::move(entry));
  }
  j["gamma"] = std::move(gamma);
  ordered_json lambda = ordered_json::array();
  for (std::size_t i = 0; i < cert.lambda.size(); ++i) {
    ordered_json entry;
    entry["vector_index"] = i;
    entry["value"] = rat_to_string(cert.lambda[i]);
    lambda.push_back(std::move(entry));
  }
  j["lambda"] = std::move(lambda);
  j["verified"] = cert.verified;
  return j.dump(2);
}

EutaxyCertificate certificate_from_json(const std::string& text) {
  const ordered_json j = parse_json(text, "certificate");
  if (!j.is_object() || !j.contains("group") || !j.contains("branch") ||
      !j.contains("gamma") || !j.contains("lambda")) {
    throw ParseError("certificate: expected {group, branch, gamma, lambda, verified}");
  }
  EutaxyCertificate cert;
  cert.group = parse_group_spec(j["group"].get<std::string>());
  const std::string branch = j["branch"].get<std::string>();
  if (branch == "odd_strong") {
    cert.branch = CertificateBranch::odd_strong;
  } else if (branch == "elementary2_strong") {
    cert.branch = CertificateBranch::elementary2_strong;
  } else if (branch == "mixed") {
    cert.branch = CertificateBranch::mixed;
  } else if (branch == "small_group") {
    cert.branch = CertificateBranch::small_group;
  } else {
    throw ParseError("certificate: unknown branch '" + branch + "'");
  }
  if (!j["gamma"].is_array() || !j["lambda"].is_array()) {
    throw ParseError("certificate: gamma and lambda must be arrays");
  }
  for (const auto& entry : j["gamma"]) {
    if (!entry.contains("a") || !entry.contains("b") || !entry.contains("value")) {
      throw ParseError("certificate: gamma entry must be {a, b, value}");
    }
    cert.pairs.push_back(OmegaPair{entry["a"].get<std::size_t>(),
                                   entry["b"].get<std::size_t>()});
    cert.gamma.push_back(rat_from_string(entry["value"].get<std::string>()));
  }
  cert.lambda.assign(j["lambda"].size(), Rat(0));
  std::vector<bool> seen(j["lambda"].size(), false);
  for (const auto& entry : j["lambda"]) {
    if (!entry.contains("vector_index") || !entry.contains("value")) {
      throw ParseError("certificate: lambda entry must be {vector_index, value}");
    }
    const auto idx = entry["vector_index"].get<std::size_t>();
    if (idx >= seen.size() || seen[idx]) {
      throw ParseError("certificate: lambda indices must form a permutation of 0..count-1");
    }
    seen[idx] = true;
    cert.lambda[idx] = rat_from_string(entry["value"].get<std::string>());
  }
  cert.verified = j.value("verified", false);
  return cert;
}

std::string to_json(const AnalysisReport& r) {
  ordered_json j;
  j["group"] = r.group_spec;
  j["order"] = r.order;
  j["kissing"] = r.kissing;
  j["min_norm_sq"] = r.min_norm_sq.get_str();
  j["strongly_eutactic"] = r.strongly_eutactic;
  j["eutactic"] = r.eutactic;
  ordered_json perfection;
  perfection["rank"] = r.perfection_rank;
  perfection["target"] = r.perfection_target;
  perfection["perfect"] = r.perfect;
  j["perfection"] = std::move(perfection);
  j["extreme"] = r.extreme;
  j["has_min_basis"] = r.has_min_basis;
  return j.dump(2);
}

AnalysisReport analysis_report_from_json(const std::string& text) {
  const ordered_json j = parse_json(text, "analysis report");
  AnalysisReport r;
  try {
    r.group_spec = j.at("group").get<std::string>();
    r.order = j.at("order").get<std::size_t>();
    r.kissing = j.at("kissing").get<std::int64_t>();
    r.min_norm_sq = Int(j.at("min_norm_sq").get<std::string>());
    r.strongly_eutactic = j.at("strongly_eutactic").get<bool>();
    r.eutactic = j.at("eutactic").get<bool>();
    r.perfection_rank = j.at("perfection").at("rank").get<std::size_t>();
    r.perfection_target = j.at("perfection").at("target").get<std::size_t>();
    r.perfect = j.at("perfection").at("perfect").get<bool>();
    r.extreme = j.at("extreme").get<bool>();
    r.has_min_basis = j.at("has_min_basis").get<bool>();
  } catch (const ordered_json::exception& e) {
    throw ParseError(std::string("analysis report: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("analysis report: ") + e.what());
  }
  return r;
}

std::string gram_text(const IntMatrix& gram) {
  std::string out;
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    for (std::size_t j = 0; j < gram.cols(); ++j) {
      if (j > 0) out += ' ';
      out += gram(i, j).get_str();
    }
    out += '\n';
  }
  return out;
}

}  // namespace abelatt
