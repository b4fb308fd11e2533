#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "axial/io.hpp"

namespace axial {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw Error(ErrorKind::ParseError, (path.empty() ? std::string("document") : path) + ": " + msg);
}

void only_keys(const json& obj, const std::string& path, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) fail(path, "unknown field \"" + key + "\"");
  }
}

const json& require(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

std::uint64_t as_index(const json& v, const std::string& path) {
  if (!v.is_number_unsigned()) fail(path, "expected a non-negative integer");
  return v.get<std::uint64_t>();
}

Field parse_field(const json& j) {
  if (!j.is_object()) fail("field", "expected an object");
  only_keys(j, "field", {"kind", "p"});
  const json& kind = require(j, "field", "kind");
  if (!kind.is_string()) fail("field.kind", "expected a string");
  const auto k = kind.get<std::string>();
  if (k == "Q") {
    if (j.contains("p")) fail("field.p", "not allowed for Q");
    return Field::rationals();
  }
  if (k != "Fp") fail("field.kind", "expected \"Q\" or \"Fp\"");
  const std::uint64_t p = as_index(require(j, "field", "p"), "field.p");
  try {
    return Field::prime(p);
  } catch (const Error& e) {
    fail("field.p", e.what());
  }
}

json field_json(Field f) {
  json j;
  if (f.is_rational()) {
    j["kind"] = "Q";
  } else {
    j["kind"] = "Fp";
    j["p"] = f.characteristic();
  }
  return j;
}

json entry_json(const Vector& v) {
  json out = json::array();
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_zero()) out.push_back(json::array({k, v[k].to_string()}));
  }
  return out;
}

// nlohmann reports the byte count read when the error occurred.
std::string position(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

AlgebraPtr parse_algebra(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    if (auto pos = msg.find("- "); pos != std::string::npos) msg = msg.substr(pos + 2);
    throw Error(ErrorKind::ParseError, position(text, e.byte) + ": " + msg);
  }
  if (!doc.is_object()) fail("", "expected an object");
  only_keys(doc, "", {"field", "dim", "basis", "table"});
  const Field f = parse_field(require(doc, "", "field"));
  const std::uint64_t n = as_index(require(doc, "", "dim"), "dim");
  if (n == 0) fail("dim", "must be positive");

  const json& basis = require(doc, "", "basis");
  if (!basis.is_array() || basis.size() != n) fail("basis", "expected an array of " + std::to_string(n) + " names");
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string path = "basis[" + std::to_string(i) + "]";
    if (!basis[i].is_string() || basis[i].get<std::string>().empty()) fail(path, "expected a non-empty string");
    names.push_back(basis[i].get<std::string>());
    if (!seen.insert(names.back()).second) fail(path, "duplicate name \"" + names.back() + "\"");
  }

  const json& table = require(doc, "", "table");
  if (!table.is_array() || table.size() != n) fail("table", "expected " + std::to_string(n) + " rows");
  std::vector<std::vector<Vector>> rows(n, std::vector<Vector>(n, zero_vector(f, n)));
  for (std::size_t i = 0; i < n; ++i) {
    const std::string rpath = "table[" + std::to_string(i) + "]";
    if (!table[i].is_array() || table[i].size() != n) fail(rpath, "expected " + std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j) {
      const std::string epath = rpath + "[" + std::to_string(j) + "]";
      const json& entry = table[i][j];
      if (!entry.is_array()) fail(epath, "expected a list of [k, \"c\"] pairs");
      std::set<std::uint64_t> ks;
      for (std::size_t t = 0; t < entry.size(); ++t) {
        const std::string tpath = epath + "[" + std::to_string(t) + "]";
        const json& term = entry[t];
        if (!term.is_array() || term.size() != 2) fail(tpath, "expected [k, \"c\"]");
        const std::uint64_t k = as_index(term[0], tpath + "[0]");
        if (k >= n) fail(tpath + "[0]", "index " + std::to_string(k) + " out of range");
        if (!ks.insert(k).second) fail(tpath + "[0]", "index " + std::to_string(k) + " repeated");
        if (!term[1].is_string()) fail(tpath + "[1]", "scalars are written as strings");
        try {
          rows[i][j][k] = Scalar::parse(term[1].get<std::string>(), f);
        } catch (const Error& e) {
          fail(tpath + "[1]", e.what());
        }
      }
    }
  }
  return std::make_shared<const Algebra>(f, std::move(names), std::move(rows));
}

std::string serialize_algebra(const Algebra& alg) {
  const std::size_t n = alg.dim();
  std::ostringstream os;
  os << "{\n  \"field\": " << field_json(alg.field()).dump() << ",\n  \"dim\": " << n
     << ",\n  \"basis\": " << json(alg.names()).dump() << ",\n  \"table\": [\n";
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(entry_json(alg.product(i, j)));
    os << "    " << row.dump() << (i + 1 < n ? ",\n" : "\n");
  }
  os << "  ]\n}\n";
  return os.str();
}

AlgebraPtr load_algebra(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IOFailure, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str());
}

void save_algebra(const std::filesystem::path& path, const Algebra& alg) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IOFailure, "cannot write " + path.string());
  out << serialize_algebra(alg);
  if (!out) throw Error(ErrorKind::IOFailure, "write failed for " + path.string());
}

}  // namespace axial
