#include "io.hpp"

#include <fstream>
#include <sstream>

#include "hmon/error.hpp"

namespace moncli {

using hmon::Error;
using hmon::ErrorCode;

namespace {

[[noreturn]] void bad(const std::string& why) { throw Error(ErrorCode::ParseError, why); }

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

long positive_int(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long>() < 1) bad(std::string(what) + " must be a positive integer");
  return j.get<long>();
}

hmon::MonObject endpoint(const json& j, const std::filesystem::path& base_dir) {
  if (j.is_string()) {
    std::filesystem::path p(j.get<std::string>());
    if (p.is_relative()) p = base_dir / p;
    return parse_object(read_json_file(p));
  }
  return parse_object(j);
}

}  // namespace

hmon::BaseRing parse_ring(const json& j) {
  const json& kind = member(j, "kind");
  if (!kind.is_string()) bad("ring kind must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "int-local") return hmon::BaseRing::int_local(positive_int(member(j, "p"), "p"));
  if (k == "poly-local") {
    const json& coeff = member(j, "coeff");
    if (coeff == "rationals") return hmon::BaseRing::poly_rational();
    if (coeff == "prime-field") return hmon::BaseRing::poly_prime_field(positive_int(member(j, "q"), "q"));
    bad("coeff must be \"rationals\" or \"prime-field\"");
  }
  bad("unknown ring kind \"" + k + "\"");
}

json emit_ring(const hmon::BaseRing& r) {
  json j;
  if (r.kind == hmon::BaseKind::IntLocal) {
    j["kind"] = "int-local";
    j["p"] = r.prime;
  } else {
    j["kind"] = "poly-local";
    if (r.prime == 0) {
      j["coeff"] = "rationals";
    } else {
      j["coeff"] = "prime-field";
      j["q"] = r.prime;
    }
  }
  return j;
}

hmon::BaseRing parse_ring_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) bad("ring spec \"" + spec + "\" is not kind:param");
  const std::string kind = spec.substr(0, colon), arg = spec.substr(colon + 1);
  long n = 0;
  if (arg != "Q") {
    try {
      std::size_t used = 0;
      n = std::stol(arg, &used);
      if (used != arg.size()) throw std::invalid_argument(arg);
    } catch (const std::exception&) {
      bad("ring parameter \"" + arg + "\" is not an integer");
    }
  }
  if (kind == "int-local" && arg != "Q") return hmon::BaseRing::int_local(n);
  if (kind == "poly-local") return arg == "Q" ? hmon::BaseRing::poly_rational() : hmon::BaseRing::poly_prime_field(n);
  bad("unknown ring spec \"" + spec + "\"");
}

hmon::Mat parse_matrix(const json& j, const hmon::BaseRing& ring, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) bad("expected a matrix with " + std::to_string(rows) + " rows");
  hmon::Mat m(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      bad("row " + std::to_string(i) + " should have " + std::to_string(cols) + " entries");
    for (std::size_t k = 0; k < cols; ++k) {
      if (!j[i][k].is_string()) bad("matrix entries must be strings");
      m(i, k) = hmon::parse_scalar(j[i][k].get<std::string>(), ring);
      if (!m(i, k).is_integral()) bad("entry \"" + j[i][k].get<std::string>() + "\" is not in " + ring.describe());
    }
  }
  return m;
}

json emit_matrix(const hmon::Mat& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).to_string());
    out.push_back(std::move(row));
  }
  return out;
}

hmon::MonObject parse_object(const json& j) {
  const hmon::BaseRing ring = parse_ring(member(j, "ring"));
  const int t = static_cast<int>(positive_int(member(j, "t"), "t"));
  const json& mj = member(j, "matrix");
  if (!mj.is_array()) bad("matrix must be an array of rows");
  const std::size_t rows = mj.size();
  const std::size_t cols = rows == 0 ? 0 : (mj[0].is_array() ? mj[0].size() : 0);
  // non-square input reaches validate so the error names the invariant
  return hmon::MonObject::validate(parse_matrix(mj, ring, rows, cols), hmon::RingCtx(ring, t));
}

json emit_object(const hmon::MonObject& f) {
  json j;
  j["ring"] = emit_ring(f.ctx().base());
  j["t"] = f.ctx().t();
  j["matrix"] = emit_matrix(f.matrix());
  return j;
}

MorphismDoc parse_morphism(const json& j, const std::filesystem::path& base_dir) {
  const json& sj = member(j, "source");
  const json& tj = member(j, "target");
  const hmon::MonObject src = endpoint(sj, base_dir);
  const hmon::MonObject tgt = endpoint(tj, base_dir);
  if (!(src.ctx() == tgt.ctx())) throw Error(ErrorCode::ContextMismatch, "source and target rings differ");
  const hmon::BaseRing& r = src.ctx().base();
  hmon::Mat psi1 = parse_matrix(member(j, "psi1"), r, tgt.n(), src.n());
  hmon::Mat psi0 = parse_matrix(member(j, "psi0"), r, tgt.n(), src.n());
  return MorphismDoc{sj, tj, hmon::MonMorphism::make(src, tgt, std::move(psi1), std::move(psi0))};
}

json emit_morphism(const MorphismDoc& doc) {
  json j;
  j["source"] = doc.source;
  j["target"] = doc.target;
  j["psi1"] = emit_matrix(doc.psi.psi1());
  j["psi0"] = emit_matrix(doc.psi.psi0());
  return j;
}

json emit_morphism(const hmon::MonMorphism& psi) {
  return emit_morphism(MorphismDoc{emit_object(psi.src()), emit_object(psi.tgt()), psi});
}

json emit_triangle(const hmon::Triangle& tr) {
  json j;
  j["u"] = emit_morphism(tr.u);
  j["v"] = emit_morphism(tr.v);
  j["w"] = emit_morphism(tr.w);
  return j;
}

hmon::Triangle parse_triangle(const json& j, const std::filesystem::path& base_dir) {
  return hmon::Triangle{parse_morphism(member(j, "u"), base_dir).psi, parse_morphism(member(j, "v"), base_dir).psi,
                        parse_morphism(member(j, "w"), base_dir).psi};
}

std::string dump(const json& j) {
  if (j.is_object()) {
    std::string out = "{";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      if (!first) out += ", ";
      first = false;
      out += json(k).dump() + ": " + dump(v);
    }
    return out + "}";
  }
  if (j.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",";
      out += dump(j[i]);
    }
    return out + "]";
  }
  return j.dump();
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    bad(path.string() + ": " + e.what());
  }
}

bool is_morphism_doc(const json& j) { return j.is_object() && j.contains("psi0") && j.contains("psi1"); }
bool is_triangle_doc(const json& j) { return j.is_object() && j.contains("u") && j.contains("v") && j.contains("w"); }

}  // namespace moncli
