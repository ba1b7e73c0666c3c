#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "assr/classify.hpp"
#include "assr/errors.hpp"
#include "assr/matrix.hpp"
#include "assr/minors.hpp"
#include "assr/qr.hpp"
#include "assr/staircase.hpp"

namespace assr {

// Report documents behind the command line tool. Each one has a JSON form
// (keys sorted, deserialize(serialize(x)) == x) and a fixed-width text form.

using json = nlohmann::json;

struct PatternReport {
  std::size_t rows = 0;
  std::size_t cols = 0;
  StaircaseType staircase = StaircaseType::Neither;
  /// The pattern was computed on P_m A because A is type-II only.
  bool reversed = false;
  ZeroPattern pattern;

  friend bool operator==(const PatternReport&, const PatternReport&) = default;
};

struct QRReport {
  std::size_t rows = 0;
  std::size_t cols = 0;
  RealMatrix q;
  RealMatrix r;
  double tol = 1e-10;
  double orthonormality_residual = 0.0;
  double reconstruction_residual = 0.0;
  std::optional<TpCheck> tp_check;
  std::optional<BoundarySignReport> boundary;

  friend bool operator==(const QRReport&, const QRReport&) = default;
};

struct MinorEntry {
  MinorQuery query;
  Rational value;
  bool nontrivial = false;
  /// Present for consecutive queries only.
  std::optional<BoundaryKind> boundary;

  friend bool operator==(const MinorEntry&, const MinorEntry&) = default;
};

struct MinorsOptions {
  bool consecutive = false;
  bool nontrivial_only = false;
  bool boundary_only = false;
};

struct MinorsReport {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t order = 1;
  MinorsOptions options;
  StaircaseType staircase = StaircaseType::Neither;
  std::uint64_t total_queries = 0;
  std::vector<MinorEntry> entries;

  friend bool operator==(const MinorsReport& a, const MinorsReport& b) {
    return a.rows == b.rows && a.cols == b.cols && a.order == b.order &&
           a.options.consecutive == b.options.consecutive && a.options.nontrivial_only == b.options.nontrivial_only &&
           a.options.boundary_only == b.options.boundary_only && a.staircase == b.staircase &&
           a.total_queries == b.total_queries && a.entries == b.entries;
  }
};

struct CauchyBinetReport {
  MinorQuery query;
  double residual = 0.0;
  double scale = 1.0;
  double relative_tol = 1e-9;

  bool within_tolerance() const noexcept { return residual <= relative_tol * scale; }
  friend bool operator==(const CauchyBinetReport&, const CauchyBinetReport&) = default;
};

// ---------------------------------------------------------------- builders

/// Zero pattern of A, or of P_m A when A is type-II but not type-I.
inline PatternReport make_pattern_report(const RationalMatrix& a) {
  PatternReport out;
  out.rows = a.rows();
  out.cols = a.cols();
  out.staircase = staircase_type(a);
  if (out.staircase == StaircaseType::Neither)
    throw not_staircase_error("matrix is neither type-I nor type-II staircase");
  out.reversed = out.staircase == StaircaseType::TypeII;
  out.pattern = zero_pattern(out.reversed ? reverse_rows(a) : a);
  return out;
}

struct QRReportOptions {
  double tol = 1e-10;
  bool check_tp = false;
  bool check_boundary = false;
};

/// The exact matrix is rounded to nearest doubles here and nowhere else.
inline QRReport make_qr_report(const RationalMatrix& a, const QRReportOptions& options = {},
                               const Budget& budget = {}) {
  const RealMatrix real = to_real(a);
  QROptions qr_options;
  qr_options.tol = options.tol;
  QRPair qr = mgs_qr(real, qr_options);
  QRReport out;
  out.rows = a.rows();
  out.cols = a.cols();
  out.tol = options.tol;
  out.orthonormality_residual = orthonormality_residual(qr.q);
  out.reconstruction_residual = reconstruction_residual(real, qr);
  if (options.check_tp) out.tp_check = verify_r_tp(qr.r, options.tol, budget);
  if (options.check_boundary) out.boundary = check_boundary_transfer(a, qr, {options.tol, options.tol}, budget);
  out.q = std::move(qr.q);
  out.r = std::move(qr.r);
  return out;
}

inline MinorsReport make_minors_report(const RationalMatrix& a, std::size_t order, const MinorsOptions& options = {},
                                       const Budget& budget = {}) {
  MinorsReport out;
  out.rows = a.rows();
  out.cols = a.cols();
  out.order = order;
  out.options = options;
  out.staircase = staircase_type(a);
  const bool consecutive = options.consecutive || options.boundary_only;
  const Orientation o = out.staircase == StaircaseType::TypeII ? Orientation::type2 : Orientation::type1;
  out.total_queries = query_count(a.rows(), a.cols(), order, consecutive);
  for_each_query(a.rows(), a.cols(), order, consecutive, budget, [&](const MinorQuery& q) {
    const bool nontrivial = is_nontrivial(a, q, o);
    if (options.nontrivial_only && !nontrivial) return true;
    std::optional<BoundaryKind> boundary;
    if (q.is_consecutive()) boundary = classify_boundary(a, q, o);
    if (options.boundary_only && !(boundary && boundary->any_boundary())) return true;
    out.entries.push_back({q, minor(a, q), nontrivial, boundary});
    return true;
  });
  return out;
}

inline CauchyBinetReport make_cauchy_binet_report(const RationalMatrix& a, const MinorQuery& q,
                                                  double relative_tol = 1e-9, const Budget& budget = {}) {
  const RealMatrix real = to_real(a);
  const QRPair qr = mgs_qr(real);
  return {q, cauchy_binet_residual(real, qr, q, budget), cauchy_binet_scale(real, q.order()), relative_tol};
}

// ---------------------------------------------------------------- JSON

namespace detail {

inline json sequence_json(const IndexSequence& s) { return s.indices(); }

inline IndexSequence sequence_from_json(const json& j, std::size_t bound) {
  return IndexSequence(j.get<std::vector<std::size_t>>(), bound);
}

inline json optional_json(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

inline json matrix_json(const RealMatrix& a) {
  json rows = json::array();
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 1; j <= a.cols(); ++j) row.push_back(a(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline RealMatrix matrix_from_json(const json& j) {
  const auto rows = j.get<std::vector<std::vector<double>>>();
  if (rows.empty()) throw std::invalid_argument("empty matrix in report");
  std::vector<double> data;
  for (const auto& row : rows) {
    if (row.size() != rows.front().size()) throw std::invalid_argument("ragged matrix in report");
    data.insert(data.end(), row.begin(), row.end());
  }
  return RealMatrix(rows.size(), rows.front().size(), std::move(data));
}

}  // namespace detail

inline json serialize(const MinorQuery& q) {
  return {{"alpha", detail::sequence_json(q.rows)},
          {"beta", detail::sequence_json(q.cols)},
          {"row_bound", q.rows.bound()},
          {"col_bound", q.cols.bound()}};
}

inline json serialize(const Signature& s) { return s.signs(); }

inline json serialize(const ZeroPattern& p) {
  return {{"I", p.I}, {"J", p.J}, {"I_hat", p.I_hat}, {"J_hat", p.J_hat}};
}

inline json serialize(const Witness& w) {
  return {{"query", w.query ? serialize(*w.query) : json(nullptr)},
          {"value", w.value ? json(w.value->to_string()) : json(nullptr)},
          {"reason", w.reason}};
}

inline json serialize(const ClassificationReport& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(serialize(w));
  return {{"rows", r.rows},
          {"cols", r.cols},
          {"staircase", to_string(r.staircase)},
          {"rank", r.rank},
          {"method", to_string(r.method)},
          {"is_sr", r.is_sr},
          {"is_tp", r.is_tp},
          {"is_assr", r.is_assr},
          {"sign_regular_ignoring_staircase", r.sign_regular_ignoring_staircase},
          {"signature", r.signature ? serialize(*r.signature) : json(nullptr)},
          {"h", detail::optional_json(r.h)},
          {"h_constraint_holds", r.h_constraint_holds ? json(*r.h_constraint_holds) : json(nullptr)},
          {"witnesses", std::move(witnesses)}};
}

inline json serialize(const PatternReport& r) {
  return {{"rows", r.rows},
          {"cols", r.cols},
          {"staircase", to_string(r.staircase)},
          {"reversed", r.reversed},
          {"pattern", serialize(r.pattern)}};
}

inline json serialize(const TpCheck& t) {
  json failures = json::array();
  for (const auto& f : t.failures)
    failures.push_back({{"query", serialize(f.query)}, {"value", f.value}, {"threshold", f.threshold}});
  return {{"passed", t.passed}, {"checked", t.checked}, {"failures", std::move(failures)}};
}

inline json serialize(const BoundarySignReport& b) {
  json violations = json::array();
  for (const auto& v : b.violations)
    violations.push_back({{"query", serialize(v.query)}, {"value", v.value}, {"expected_sign", v.expected_sign}});
  json zero_blocks = json::array();
  for (const auto& q : b.zero_block_failures) zero_blocks.push_back(serialize(q));
  return {{"checked", b.checked},
          {"passed", b.passed()},
          {"violations", std::move(violations)},
          {"zero_block_failures", std::move(zero_blocks)}};
}

inline json serialize(const QRReport& r) {
  return {{"rows", r.rows},
          {"cols", r.cols},
          {"q", detail::matrix_json(r.q)},
          {"r", detail::matrix_json(r.r)},
          {"tol", r.tol},
          {"orthonormality_residual", r.orthonormality_residual},
          {"reconstruction_residual", r.reconstruction_residual},
          {"tp_check", r.tp_check ? serialize(*r.tp_check) : json(nullptr)},
          {"boundary", r.boundary ? serialize(*r.boundary) : json(nullptr)}};
}

inline json serialize(const BoundaryKind& k) {
  return {{"column_boundary", k.column_boundary},
          {"row_boundary", k.row_boundary},
          {"initial", k.initial},
          {"column_generalized", k.column_generalized},
          {"row_generalized", k.row_generalized}};
}

inline json serialize(const MinorsReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"query", serialize(e.query)},
                       {"value", e.value.to_string()},
                       {"nontrivial", e.nontrivial},
                       {"boundary", e.boundary ? serialize(*e.boundary) : json(nullptr)}});
  return {{"rows", r.rows},
          {"cols", r.cols},
          {"order", r.order},
          {"consecutive", r.options.consecutive},
          {"nontrivial_only", r.options.nontrivial_only},
          {"boundary_only", r.options.boundary_only},
          {"staircase", to_string(r.staircase)},
          {"total_queries", r.total_queries},
          {"entries", std::move(entries)}};
}

inline json serialize(const CauchyBinetReport& r) {
  return {{"query", serialize(r.query)},
          {"residual", r.residual},
          {"scale", r.scale},
          {"relative_tol", r.relative_tol},
          {"within_tolerance", r.within_tolerance()}};
}

template <typename T>
T deserialize(const json& j);

template <>
inline MinorQuery deserialize<MinorQuery>(const json& j) {
  return MinorQuery(detail::sequence_from_json(j.at("alpha"), j.at("row_bound").get<std::size_t>()),
                    detail::sequence_from_json(j.at("beta"), j.at("col_bound").get<std::size_t>()));
}

template <>
inline Signature deserialize<Signature>(const json& j) {
  return Signature(j.get<std::vector<int>>());
}

template <>
inline ZeroPattern deserialize<ZeroPattern>(const json& j) {
  using list = std::vector<std::size_t>;
  return {j.at("I").get<list>(), j.at("J").get<list>(), j.at("I_hat").get<list>(), j.at("J_hat").get<list>()};
}

template <>
inline Witness deserialize<Witness>(const json& j) {
  Witness w;
  if (!j.at("query").is_null()) w.query = deserialize<MinorQuery>(j.at("query"));
  if (!j.at("value").is_null()) w.value = Rational::parse(j.at("value").get<std::string>());
  w.reason = j.at("reason").get<std::string>();
  return w;
}

template <>
inline ClassificationReport deserialize<ClassificationReport>(const json& j) {
  ClassificationReport r;
  r.rows = j.at("rows").get<std::size_t>();
  r.cols = j.at("cols").get<std::size_t>();
  r.staircase = staircase_type_from_string(j.at("staircase").get<std::string>());
  r.rank = j.at("rank").get<std::size_t>();
  r.method = j.at("method").get<std::string>() == "full" ? Method::full : Method::reduced;
  r.is_sr = j.at("is_sr").get<bool>();
  r.is_tp = j.at("is_tp").get<bool>();
  r.is_assr = j.at("is_assr").get<bool>();
  r.sign_regular_ignoring_staircase = j.at("sign_regular_ignoring_staircase").get<bool>();
  if (!j.at("signature").is_null()) r.signature = deserialize<Signature>(j.at("signature"));
  if (!j.at("h").is_null()) r.h = j.at("h").get<std::size_t>();
  if (!j.at("h_constraint_holds").is_null()) r.h_constraint_holds = j.at("h_constraint_holds").get<bool>();
  for (const auto& w : j.at("witnesses")) r.witnesses.push_back(deserialize<Witness>(w));
  return r;
}

template <>
inline PatternReport deserialize<PatternReport>(const json& j) {
  PatternReport r;
  r.rows = j.at("rows").get<std::size_t>();
  r.cols = j.at("cols").get<std::size_t>();
  r.staircase = staircase_type_from_string(j.at("staircase").get<std::string>());
  r.reversed = j.at("reversed").get<bool>();
  r.pattern = deserialize<ZeroPattern>(j.at("pattern"));
  return r;
}

template <>
inline TpCheck deserialize<TpCheck>(const json& j) {
  TpCheck t;
  t.passed = j.at("passed").get<bool>();
  t.checked = j.at("checked").get<std::size_t>();
  for (const auto& f : j.at("failures"))
    t.failures.push_back(
        {deserialize<MinorQuery>(f.at("query")), f.at("value").get<double>(), f.at("threshold").get<double>()});
  return t;
}

template <>
inline BoundarySignReport deserialize<BoundarySignReport>(const json& j) {
  BoundarySignReport b;
  b.checked = j.at("checked").get<std::size_t>();
  for (const auto& v : j.at("violations"))
    b.violations.push_back(
        {deserialize<MinorQuery>(v.at("query")), v.at("value").get<double>(), v.at("expected_sign").get<int>()});
  for (const auto& q : j.at("zero_block_failures")) b.zero_block_failures.push_back(deserialize<MinorQuery>(q));
  return b;
}

template <>
inline QRReport deserialize<QRReport>(const json& j) {
  QRReport r;
  r.rows = j.at("rows").get<std::size_t>();
  r.cols = j.at("cols").get<std::size_t>();
  r.q = detail::matrix_from_json(j.at("q"));
  r.r = detail::matrix_from_json(j.at("r"));
  r.tol = j.at("tol").get<double>();
  r.orthonormality_residual = j.at("orthonormality_residual").get<double>();
  r.reconstruction_residual = j.at("reconstruction_residual").get<double>();
  if (!j.at("tp_check").is_null()) r.tp_check = deserialize<TpCheck>(j.at("tp_check"));
  if (!j.at("boundary").is_null()) r.boundary = deserialize<BoundarySignReport>(j.at("boundary"));
  return r;
}

template <>
inline BoundaryKind deserialize<BoundaryKind>(const json& j) {
  BoundaryKind k;
  k.column_boundary = j.at("column_boundary").get<bool>();
  k.row_boundary = j.at("row_boundary").get<bool>();
  k.initial = j.at("initial").get<bool>();
  k.column_generalized = j.at("column_generalized").get<bool>();
  k.row_generalized = j.at("row_generalized").get<bool>();
  return k;
}

template <>
inline MinorsReport deserialize<MinorsReport>(const json& j) {
  MinorsReport r;
  r.rows = j.at("rows").get<std::size_t>();
  r.cols = j.at("cols").get<std::size_t>();
  r.order = j.at("order").get<std::size_t>();
  r.options.consecutive = j.at("consecutive").get<bool>();
  r.options.nontrivial_only = j.at("nontrivial_only").get<bool>();
  r.options.boundary_only = j.at("boundary_only").get<bool>();
  r.staircase = staircase_type_from_string(j.at("staircase").get<std::string>());
  r.total_queries = j.at("total_queries").get<std::uint64_t>();
  for (const auto& e : j.at("entries")) {
    MinorEntry entry{deserialize<MinorQuery>(e.at("query")), Rational::parse(e.at("value").get<std::string>()),
                     e.at("nontrivial").get<bool>(), std::nullopt};
    if (!e.at("boundary").is_null()) entry.boundary = deserialize<BoundaryKind>(e.at("boundary"));
    r.entries.push_back(std::move(entry));
  }
  return r;
}

template <>
inline CauchyBinetReport deserialize<CauchyBinetReport>(const json& j) {
  return {deserialize<MinorQuery>(j.at("query")), j.at("residual").get<double>(), j.at("scale").get<double>(),
          j.at("relative_tol").get<double>()};
}

/// Two-space indented, keys sorted, trailing newline.
template <typename T>
std::string to_json_text(const T& report) {
  return serialize(report).dump(2) + "\n";
}

// ---------------------------------------------------------------- text

namespace detail {

inline std::string set_text(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (t) s += ",";
    s += std::to_string(v[t]);
  }
  return s + "}";
}

inline std::string line(const std::string& label, const std::string& value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%-34s", (label + ":").c_str());
  return buf + value + "\n";
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string real_text(double x, const char* format = "%.6g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, x);
  return buf;
}

inline std::string matrix_text(const RealMatrix& a) {
  std::string out;
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    for (std::size_t j = 1; j <= a.cols(); ++j) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%14.6g", a(i, j) == 0.0 ? 0.0 : a(i, j));
      out += buf;
    }
    out += '\n';
  }
  return out;
}

inline std::string boundary_text(const std::optional<BoundaryKind>& k) {
  if (!k) return "-";
  std::string s;
  auto add = [&](bool flag, const char* name) {
    if (!flag) return;
    if (!s.empty()) s += ",";
    s += name;
  };
  add(k->column_boundary, "column_boundary");
  add(k->row_boundary, "row_boundary");
  add(k->initial, "initial");
  add(k->column_generalized, "column_generalized");
  add(k->row_generalized, "row_generalized");
  return s.empty() ? "-" : s;
}

}  // namespace detail

inline std::string render_text(const PatternReport& r) {
  std::string out = detail::line("staircase", to_string(r.staircase));
  if (r.reversed) out += detail::line("computed on", "reverse_rows(A)");
  out += "I = " + detail::set_text(r.pattern.I) + "; J = " + detail::set_text(r.pattern.J) +
         "; Î = " + detail::set_text(r.pattern.I_hat) + "; Ĵ = " + detail::set_text(r.pattern.J_hat) + "\n";
  return out;
}

inline std::string render_text(const ClassificationReport& r) {
  std::string out;
  out += detail::line("size", std::to_string(r.rows) + " x " + std::to_string(r.cols));
  out += detail::line("staircase", to_string(r.staircase));
  out += detail::line("rank", std::to_string(r.rank));
  out += detail::line("method", to_string(r.method));
  out += detail::line("SR", detail::yes_no(r.is_sr));
  out += detail::line("TP", detail::yes_no(r.is_tp));
  out += detail::line("ASSR", detail::yes_no(r.is_assr));
  if (r.sign_regular_ignoring_staircase) out += detail::line("sign regular (not staircase)", "yes");
  out += detail::line("signature", r.signature ? r.signature->to_string() : "-");
  out += detail::line("h", r.h ? std::to_string(*r.h) : "-");
  if (r.h_constraint_holds) out += detail::line("eps_k = eps_1^k for k <= r-h+1", detail::yes_no(*r.h_constraint_holds));
  for (const auto& w : r.witnesses) {
    std::string text = w.reason;
    if (w.query) text += ": det A" + w.query->to_string() + " = " + (w.value ? w.value->to_string() : "?");
    out += detail::line("witness", text);
  }
  return out;
}

inline std::string render_text(const QRReport& r) {
  std::string out = "Q =\n" + detail::matrix_text(r.q) + "R =\n" + detail::matrix_text(r.r);
  out += detail::line("orthonormality residual", detail::real_text(r.orthonormality_residual, "%.6e"));
  out += detail::line("reconstruction residual", detail::real_text(r.reconstruction_residual, "%.6e"));
  if (r.tp_check) {
    out += detail::line("TP check on R", r.tp_check->passed ? "pass" : "fail");
    out += detail::line("minors checked", std::to_string(r.tp_check->checked));
    for (const auto& f : r.tp_check->failures)
      out += detail::line("negative minor", "det R" + f.query.to_string() + " = " + detail::real_text(f.value));
  }
  if (r.boundary) {
    out += detail::line("boundary minors checked", std::to_string(r.boundary->checked));
    out += detail::line("boundary violations", std::to_string(r.boundary->violations.size()));
    out += detail::line("zero-block failures", std::to_string(r.boundary->zero_block_failures.size()));
    for (const auto& v : r.boundary->violations)
      out += detail::line("violation", "det Q" + v.query.to_string() + " = " + detail::real_text(v.value) +
                                           ", expected sign " + std::to_string(v.expected_sign));
  }
  return out;
}

inline std::string render_text(const MinorsReport& r) {
  std::string out;
  char buf[256];
  for (const auto& e : r.entries) {
    std::snprintf(buf, sizeof buf, "%-16s %-16s %20s  %-11s %s\n", e.query.rows.to_string().c_str(),
                  e.query.cols.to_string().c_str(), e.value.to_string().c_str(),
                  e.nontrivial ? "nontrivial" : "trivial", detail::boundary_text(e.boundary).c_str());
    out += buf;
  }
  out += detail::line("listed", std::to_string(r.entries.size()) + " of " + std::to_string(r.total_queries));
  return out;
}

inline std::string render_text(const CauchyBinetReport& r) {
  std::string out = detail::line("query", r.query.to_string());
  out += detail::line("residual", detail::real_text(r.residual, "%.6e"));
  out += detail::line("scale", detail::real_text(r.scale, "%.6e"));
  out += detail::line("within tolerance", detail::yes_no(r.within_tolerance()));
  return out;
}

}  // namespace assr
