#ifndef LIECHAN_IO_HPP
#define LIECHAN_IO_HPP

// JSON forms of matrices, generator sets, channels, tensors and reports.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "liechan/bloch.hpp"
#include "liechan/channel.hpp"
#include "liechan/matcore.hpp"
#include "liechan/repgen.hpp"
#include "liechan/tensor.hpp"

namespace liechan::io {

using json = nlohmann::json;

/// Non-finite values become null.
inline json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

template <class T>
json optional_number(const std::optional<T>& x) {
  return x ? number(static_cast<double>(*x)) : json(nullptr);
}

inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline json matrix_to_json(const ComplexMatrix& m) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) entries.push_back({number(m(i, j).real()), number(m(i, j).imag())});
  return {{"dim", m.rows()}, {"entries", entries}};
}

inline double parse_number(const json& j, const char* what) {
  if (!j.is_number()) throw Error(ErrorKind::Parse, std::string(what) + " is not a number");
  return j.get<double>();
}

inline ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
    throw Error(ErrorKind::Parse, "matrix JSON needs \"dim\" and \"entries\"");
  if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 1)
    throw Error(ErrorKind::Parse, "\"dim\" must be a positive integer");
  const auto d = static_cast<Eigen::Index>(j["dim"].get<long long>());
  const json& e = j["entries"];
  if (!e.is_array() || e.size() != static_cast<std::size_t>(d * d))
    throw Error(ErrorKind::Parse, "\"entries\" must hold dim*dim [re, im] pairs");
  ComplexMatrix m(d, d);
  for (Eigen::Index k = 0; k < d * d; ++k) {
    const json& z = e[static_cast<std::size_t>(k)];
    if (!z.is_array() || z.size() != 2) throw Error(ErrorKind::Parse, "matrix entry must be [re, im]");
    m(k / d, k % d) = Complex(parse_number(z[0], "real part"), parse_number(z[1], "imaginary part"));
  }
  return m;
}

template <class T>
json tensor_to_json(const Tensor<T>& t) {
  json data = json::array();
  for (const auto& x : t.data()) data.push_back(number(x));
  return {{"shape", t.shape()}, {"data", data}};
}

inline RealTensor tensor_from_json(const json& j) {
  if (j.is_array()) {
    std::vector<double> data;
    for (const auto& x : j) data.push_back(parse_number(x, "tensor entry"));
    const std::size_t n = data.size();
    return RealTensor({n}, std::move(data));
  }
  if (!j.is_object() || !j.contains("shape") || !j.contains("data"))
    throw Error(ErrorKind::Parse, "tensor JSON needs \"shape\" and \"data\"");
  std::vector<std::size_t> shape;
  for (const auto& s : j["shape"]) {
    if (!s.is_number_unsigned()) throw Error(ErrorKind::Parse, "tensor shape entries must be non-negative integers");
    shape.push_back(s.get<std::size_t>());
  }
  std::vector<double> data;
  for (const auto& x : j["data"]) data.push_back(parse_number(x, "tensor entry"));
  try {
    return RealTensor(std::move(shape), std::move(data));
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

inline json generators_to_json(const GeneratorSet& g) {
  json gens = json::array();
  for (const auto& x : g.generators()) gens.push_back(matrix_to_json(x));
  return {{"algebra", std::string(to_string(g.tag()))},
          {"label", g.label()},
          {"param", g.param()},
          {"d", g.dim()},
          {"k", g.count()},
          {"N", optional_number(g.N())},
          {"Z", optional_number(g.Z())},
          {"generators", gens}};
}

inline GeneratorSet generators_from_json(const json& j) {
  if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array())
    throw Error(ErrorKind::Parse, "generator set JSON needs a \"generators\" array");
  std::vector<ComplexMatrix> gens;
  for (const auto& m : j["generators"]) gens.push_back(matrix_from_json(m));
  const AlgebraTag tag = j.contains("algebra") ? algebra_tag_from_string(j["algebra"].get<std::string>()) : AlgebraTag::Custom;
  const int param = j.contains("param") && j["param"].is_number_integer() ? j["param"].get<int>() : 0;
  auto g = GeneratorSet::make(tag, param, std::move(gens));
  if (j.contains("d") && j["d"].is_number_integer() && j["d"].get<long long>() != g.dim())
    throw Error(ErrorKind::Parse, "\"d\" disagrees with the generator matrices");
  if (j.contains("k") && j["k"].is_number_integer() && j["k"].get<std::size_t>() != g.count())
    throw Error(ErrorKind::Parse, "\"k\" disagrees with the number of generators");
  return g;
}

inline json channel_to_json(const KrausChannel& ch) {
  json ops = json::array();
  for (const auto& m : ch.ops()) ops.push_back(matrix_to_json(m));
  return {{"p", number(ch.p())}, {"source", ch.source()}, {"ops", ops}};
}

inline KrausChannel channel_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ops") || !j["ops"].is_array())
    throw Error(ErrorKind::Parse, "channel JSON needs an \"ops\" array");
  std::vector<ComplexMatrix> ops;
  for (const auto& m : j["ops"]) ops.push_back(matrix_from_json(m));
  const double p = j.contains("p") ? parse_number(j["p"], "p") : 0.0;
  const std::string source = j.contains("source") && j["source"].is_string() ? j["source"].get<std::string>() : "custom";
  return KrausChannel::make(std::move(ops), p, source);
}

inline json identity_report_to_json(const IdentityReport& r) {
  json mons = json::array();
  for (const auto& m : r.monomials)
    mons.push_back({{"index", m.index}, {"f", number(m.f)}, {"g", optional_number(m.g)}, {"residual", number(m.residual)}});
  return {{"rank", r.rank},
          {"special", r.special},
          {"degenerate", r.degenerate},
          {"g", optional_number(r.g_scalar)},
          {"spread", number(r.spread)},
          {"residual", number(r.residual)},
          {"f_tensor", tensor_to_json(r.f)},
          {"g_tensor", tensor_to_json(r.g)},
          {"monomials", mons}};
}

inline json critical_to_json(const CriticalDecomposition& c) {
  json entries = json::array();
  for (const auto& e : c.entries)
    entries.push_back({{"rank", e.rank},
                       {"g", optional_number(e.g)},
                       {"p", optional_number(e.p)},
                       {"in_range", e.in_range},
                       {"verified", e.verified},
                       {"max_deviation", optional_number(e.max_deviation)}});
  return {{"Z", number(c.Z)}, {"entries", entries}};
}

inline const char* sector_name(std::size_t r) {
  static const char* names[] = {"v", "w", "u"};
  return r >= 1 && r <= 3 ? names[r - 1] : nullptr;
}

inline json bloch_state_to_json(const BlochState& s) {
  json j = {{"form", std::string(to_string(s.form))},
            {"algebra", std::string(to_string(s.tag))},
            {"param", s.param},
            {"dim", s.dim},
            {"residual", number(s.residual)}};
  json sectors = json::array();
  for (std::size_t r = 1; r <= s.sectors.size(); ++r) {
    if (const char* name = sector_name(r)) j[name] = tensor_to_json(s.sectors[r - 1]);
    sectors.push_back(tensor_to_json(s.sectors[r - 1]));
  }
  j["sectors"] = sectors;
  return j;
}

inline BlochState bloch_state_from_json(const json& j) {
  if (!j.is_object() || !j.contains("v")) throw Error(ErrorKind::Parse, "Bloch state JSON needs \"v\"");
  BlochState s;
  const std::string form = j.value("form", std::string("bloch"));
  if (form == "bloch") s.form = BlochState::Form::Bloch;
  else if (form == "vw") s.form = BlochState::Form::VW;
  else if (form == "sectors") s.form = BlochState::Form::Sectors;
  else throw Error(ErrorKind::Parse, "unknown Bloch state form '" + form + "'");
  if (j.contains("algebra")) s.tag = algebra_tag_from_string(j["algebra"].get<std::string>());
  s.param = j.value("param", 0);
  s.dim = j.value("dim", 0);
  for (std::size_t r = 1; r <= 3; ++r) {
    const char* name = sector_name(r);
    if (!j.contains(name)) break;
    RealTensor t = tensor_from_json(j[name]);
    if (t.rank() != r) throw Error(ErrorKind::Parse, std::string("\"") + name + "\" has the wrong rank");
    s.sectors.push_back(std::move(t));
  }
  return s;
}

}  // namespace liechan::io

#endif
