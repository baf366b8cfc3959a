#include "quclass/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "quclass/error.hpp"

namespace quclass::io {
namespace {

using nlohmann::json;

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::FormatError, e.what());
  }
}

json matrix_json(const CMat& m) {
  json re = json::array(), im = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json r = json::array(), c = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) {
      r.push_back(round15(m(i, j).real()));
      c.push_back(round15(m(i, j).imag()));
    }
    re.push_back(std::move(r));
    im.push_back(std::move(c));
  }
  return {{"re", std::move(re)}, {"im", std::move(im)}};
}

double number(const json& j) {
  if (!j.is_number()) throw Error(ErrorCode::FormatError, "expected a number");
  return j.get<double>();
}

CMat matrix_of(const json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    throw Error(ErrorCode::FormatError, "matrix needs \"re\" and \"im\"");
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (!re.is_array() || !im.is_array() || re.size() != im.size() || re.empty())
    throw Error(ErrorCode::FormatError, "matrix parts must be equal-sized arrays");
  const std::size_t n = re.size();
  CMat m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!re[i].is_array() || !im[i].is_array() || re[i].size() != n || im[i].size() != n)
      throw Error(ErrorCode::FormatError, "matrix must be square");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = {number(re[i][k]), number(im[i][k])};
  }
  return m;
}

void reject_unknown(const json& j, std::initializer_list<const char*> keys) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || it.key() == k;
    if (!known) throw Error(ErrorCode::FormatError, "unknown key \"" + it.key() + "\"");
  }
}

int dimension_of(const json& j) {
  if (!j.contains("n") || !j.at("n").is_number_integer()) throw Error(ErrorCode::FormatError, "missing integer \"n\"");
  const int n = j.at("n").get<int>();
  if (n < 2 || n > 16) throw Error(ErrorCode::FormatError, "n out of range");
  return n;
}

}  // namespace

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // drops the sign of −0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

double round15(double x) { return std::strtod(format_number(x).c_str(), nullptr); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::FormatError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::FormatError, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::FormatError, "write failed for " + path);
}

std::string matrix_to_json(const CMat& m) { return matrix_json(m).dump(); }
CMat matrix_from_json(const std::string& text) { return matrix_of(parse(text)); }

std::string mub_to_json(const mub::MubFamily& m) {
  json bases = json::array();
  for (const auto& b : m.bases) {
    json vecs = json::array();
    for (std::size_t k = 0; k < b.dim(); ++k) {
      json v = json::array();
      for (std::size_t i = 0; i < b.dim(); ++i) v.push_back({round15(b(i, k).real()), round15(b(i, k).imag())});
      vecs.push_back(std::move(v));
    }
    bases.push_back(std::move(vecs));
  }
  return json{{"n", m.n}, {"bases", std::move(bases)}}.dump(1);
}

mub::MubFamily mub_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object()) throw Error(ErrorCode::FormatError, "expected an object");
  reject_unknown(j, {"n", "bases"});
  mub::MubFamily m;
  m.n = dimension_of(j);
  const auto n = static_cast<std::size_t>(m.n);
  if (!j.contains("bases") || !j.at("bases").is_array()) throw Error(ErrorCode::FormatError, "missing \"bases\"");
  for (const auto& b : j.at("bases")) {
    if (!b.is_array() || b.size() != n) throw Error(ErrorCode::FormatError, "each basis needs n vectors");
    CMat mat(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (!b[k].is_array() || b[k].size() != n) throw Error(ErrorCode::FormatError, "vector length must be n");
      for (std::size_t i = 0; i < n; ++i) {
        const auto& z = b[k][i];
        if (!z.is_array() || z.size() != 2) throw Error(ErrorCode::FormatError, "components are [re, im]");
        mat(i, k) = {number(z[0]), number(z[1])};
      }
    }
    m.bases.push_back(std::move(mat));
  }
  return m;
}

std::string basis_to_json(const basis::OperatorBasis& b) {
  json ops = json::array();
  for (const auto& a : b.ops) ops.push_back(matrix_json(a));
  return json{{"n", b.n}, {"families", b.families}, {"ops", std::move(ops)}}.dump(1);
}

basis::OperatorBasis basis_from_json(const std::string& text, const std::string& label) {
  const json j = parse(text);
  if (!j.is_object()) throw Error(ErrorCode::FormatError, "expected an object");
  reject_unknown(j, {"n", "families", "ops"});
  const int n = dimension_of(j);
  if (!j.contains("ops") || !j.at("ops").is_array() || j.at("ops").empty())
    throw Error(ErrorCode::FormatError, "missing \"ops\"");
  std::vector<CMat> ops;
  for (const auto& o : j.at("ops")) {
    ops.push_back(matrix_of(o));
    if (ops.back().dim() != static_cast<std::size_t>(n)) throw Error(ErrorCode::FormatError, "operator size vs n");
  }
  std::vector<std::vector<std::size_t>> families;
  if (!j.contains("families") || !j.at("families").is_array())
    throw Error(ErrorCode::FormatError, "missing \"families\"");
  std::vector<int> seen(ops.size(), 0);
  for (const auto& f : j.at("families")) {
    if (!f.is_array() || f.empty()) throw Error(ErrorCode::FormatError, "family must be a nonempty array");
    std::vector<std::size_t> fam;
    for (const auto& i : f) {
      if (!i.is_number_unsigned() || i.get<std::size_t>() >= ops.size())
        throw Error(ErrorCode::FormatError, "family index out of range");
      fam.push_back(i.get<std::size_t>());
      ++seen[fam.back()];
    }
    families.push_back(std::move(fam));
  }
  for (int s : seen)
    if (s != 1) throw Error(ErrorCode::FormatError, "families must partition the operators");
  return basis::make_basis(n, std::move(ops), std::move(families), label);
}

StateFile state_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw Error(ErrorCode::FormatError, "state needs a \"kind\"");
  StateFile s;
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "density") {
    reject_unknown(j, {"kind", "mat"});
    if (!j.contains("mat")) throw Error(ErrorCode::FormatError, "density state needs \"mat\"");
    s.kind = StateFile::Kind::Density;
    s.mat = matrix_of(j.at("mat"));
  } else if (kind == "bloch") {
    reject_unknown(j, {"kind", "theta"});
    if (!j.contains("theta") || !j.at("theta").is_array()) throw Error(ErrorCode::FormatError, "bloch state needs \"theta\"");
    s.kind = StateFile::Kind::Bloch;
    for (const auto& x : j.at("theta")) s.theta.theta.push_back(number(x));
  } else {
    throw Error(ErrorCode::FormatError, "unknown state kind \"" + kind + "\"");
  }
  return s;
}

std::string state_to_json(const StateFile& s) {
  if (s.kind == StateFile::Kind::Density) return json{{"kind", "density"}, {"mat", matrix_json(s.mat)}}.dump(1);
  json t = json::array();
  for (double x : s.theta.theta) t.push_back(round15(x));
  return json{{"kind", "bloch"}, {"theta", std::move(t)}}.dump(1);
}

std::string csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out;
}

}  // namespace quclass::io
