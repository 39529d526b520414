#include "tessarine/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "tessarine/error.hpp"

namespace tess::io {

using Eigen::Index;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

json complex_json(cplx x) {
  if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) bad("non-finite value");
  return json::array({x.real(), x.imag()});
}

cplx complex_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    bad("expected [re, im]");
  }
  const cplx x(j[0].get<double>(), j[1].get<double>());
  if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) bad("non-finite value");
  return x;
}

}  // namespace

json to_json(const DoubleComplex& x) { return {{"p", complex_json(x.p())}, {"q", complex_json(x.q())}}; }

DoubleComplex scalar_from_json(const json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("q")) bad("expected {\"p\", \"q\"}");
  return {complex_from(j["p"]), complex_from(j["q"])};
}

json to_json(const CMatrix& a) {
  json rows = json::array();
  for (Index i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (Index k = 0; k < a.cols(); ++k) row.push_back(complex_json(a(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const json& j, Index n) {
  if (!j.is_array() || static_cast<Index>(j.size()) != n) {
    bad("expected " + std::to_string(n) + " rows");
  }
  CMatrix a(n, n);
  for (Index i = 0; i < n; ++i) {
    const json& row = j[i];
    if (!row.is_array() || static_cast<Index>(row.size()) != n) {
      bad("row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
    }
    for (Index k = 0; k < n; ++k) a(i, k) = complex_from(row[k]);
  }
  return a;
}

json to_json(const DCMatrix& m) {
  return {{"n", m.size()}, {"A", to_json(m.a())}, {"B", to_json(m.b())}};
}

DCMatrix pair_from_json(const json& j) {
  if (!j.is_object()) bad("expected an object");
  for (const char* key : {"n", "A", "B"}) {
    if (!j.contains(key)) bad(std::string("missing \"") + key + "\"");
  }
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1) bad("\"n\" must be a positive integer");
  const Index n = j["n"].get<Index>();
  return DCMatrix(matrix_from_json(j["A"], n), matrix_from_json(j["B"], n));
}

DCMatrix parse_pair(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(e.what());
  }
  return pair_from_json(j);
}

DCMatrix read_pair(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_pair(buffer.str());
}

std::string serialize_pair(const DCMatrix& m) { return to_json(m).dump(); }

json to_json(const std::vector<linalg::JordanBlock>& blocks) {
  json out = json::array();
  for (const auto& b : blocks) {
    out.push_back({{"eigenvalue", complex_json(b.eigenvalue)}, {"size", b.size}});
  }
  return out;
}

json to_json(const ExistenceReport& r) {
  json out = {
      {"ranks", {{"A", r.ranks.rank_a}, {"B", r.ranks.rank_b}, {"AB", r.ranks.rank_ab},
                 {"BA", r.ranks.rank_ba}}},
      {"pinv_exists", r.pinv_exists},
      {"jsvd_necessary", r.jsvd_necessary},
      {"jsvd_status", to_string(r.jsvd_status)},
  };
  if (!r.reason.empty()) out["reason"] = r.reason;
  if (r.jsvd_status == JsvdStatus::Exists) out["residual"] = r.residual;
  return out;
}

json to_json(const PenroseResult& c) {
  return {{"axioms", c.axioms}, {"residuals", c.residuals}, {"worst", c.worst()}};
}

json to_json(const explore::TrialRecord& rec) {
  json out = {
      {"seed", rec.seed},
      {"n", rec.n},
      {"profile", explore::to_string(rec.profile)},
      {"similar_ab_ba", rec.similar_ab_ba ? json(*rec.similar_ab_ba) : json(nullptr)},
      {"report", to_json(rec.report)},
      {"consistent", rec.consistent},
      {"finding", rec.finding},
  };
  if (rec.status() == JsvdStatus::Exists) {
    out["j_blocks"] = to_json(rec.j_blocks);
    out["residual"] = rec.residual;
  }
  if (!rec.inconsistency.empty()) out["inconsistency"] = rec.inconsistency;
  return out;
}

json to_json(const explore::ScanSummary& s, const std::vector<explore::TrialRecord>& records) {
  const char* status[] = {"Exists", "NotExists", "Unknown"};
  json table;
  for (int sim = 0; sim < 2; ++sim) {
    json row;
    for (int k = 0; k < 3; ++k) row[status[k]] = s.cells[sim][k];
    table[sim ? "similar" : "not_similar"] = row;
  }
  json findings = json::array();
  for (auto i : s.findings) {
    const auto& rec = records.at(i);
    findings.push_back({{"trial", i},
                        {"seed", rec.seed},
                        {"n", rec.n},
                        {"profile", explore::to_string(rec.profile)},
                        {"cell", std::string(to_string(rec.status())) +
                                     (*rec.similar_ab_ba ? ", similar" : ", not similar")},
                        {"rank_a_equals_rank_b", rec.report.ranks.rank_a == rec.report.ranks.rank_b}});
  }
  return {{"trials", s.trials},
          {"table", table},
          {"similarity_unknown", s.similarity_unknown},
          {"inconsistent", s.inconsistent},
          {"findings", findings}};
}

}  // namespace tess::io
