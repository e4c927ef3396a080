#include "zipcox/datum_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace zipcox {

using nlohmann::json;

namespace {

std::string where(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::int64_t get_int(const json& j, const std::string& what) {
  if (!j.is_number_integer())
    fail_input(what + " must be an integer");
  return j.get<std::int64_t>();
}

IntVector get_ints(const json& j, const std::string& what) {
  if (!j.is_array())
    fail_input(what + " must be an array of integers");
  IntVector out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(get_int(j[i], what + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<QVector> get_vectors(const json& j, const std::string& what, std::size_t n) {
  if (!j.is_array())
    fail_input(what + " must be an array of vectors");
  std::vector<QVector> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    IntVector v = get_ints(j[i], what + "[" + std::to_string(i) + "]");
    if (v.size() != n)
      fail_input(what + "[" + std::to_string(i) + "] has length " + std::to_string(v.size()) +
                 ", expected rank " + std::to_string(n));
    out.push_back(QVector::from_ints(v));
  }
  return out;
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    fail_input(std::string("missing field '") + key + "'");
  return *it;
}

bool same_datum(const RootDatumSpec& a, const RootDatumSpec& b) {
  return a.p == b.p && a.rank == b.rank && a.simple_roots == b.simple_roots &&
         a.simple_coroots == b.simple_coroots && a.sigma_char == b.sigma_char;
}

} // namespace

DatumFile parse_datum(const std::string& text, const std::string& source) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail_input(source + ": JSON syntax error at " + where(text, e.byte == 0 ? 0 : e.byte - 1));
  }
  if (!j.is_object())
    fail_input(source + ": top level must be an object");
  try {
    DatumFile f;
    f.spec.p = get_int(field(j, "p"), "p");
    std::int64_t n = get_int(field(j, "rank"), "rank");
    if (n < 1 || n > 64)
      fail_input("rank must be between 1 and 64");
    f.spec.rank = static_cast<std::size_t>(n);
    f.spec.simple_roots = get_vectors(field(j, "simple_roots"), "simple_roots", f.spec.rank);
    f.spec.simple_coroots = get_vectors(field(j, "simple_coroots"), "simple_coroots", f.spec.rank);
    const json& s = field(j, "sigma_char");
    if (!s.is_array() || s.size() != f.spec.rank)
      fail_input("sigma_char must be a rank x rank matrix");
    for (std::size_t i = 0; i < s.size(); ++i) {
      IntVector row = get_ints(s[i], "sigma_char[" + std::to_string(i) + "]");
      if (row.size() != f.spec.rank)
        fail_input("sigma_char must be a rank x rank matrix");
      f.spec.sigma_char.push_back(row);
    }
    IntVector mu = get_ints(field(j, "mu"), "mu");
    if (mu.size() != f.spec.rank)
      fail_input("mu has length " + std::to_string(mu.size()) + ", expected rank " + std::to_string(n));
    f.mu = QVector::from_ints(mu);
    if (j.contains("triviality_sublattice"))
      f.triviality_sublattice = get_vectors(j["triviality_sublattice"], "triviality_sublattice", f.spec.rank);
    validate(f.spec);
    return f;
  } catch (const InputError& e) {
    fail_input(source + ": " + e.what());
  }
}

DatumFile load_datum(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    fail_input("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_datum(ss.str(), path);
}

ZipDatum zip_from_file(const DatumFile& f, const Limits& limits) {
  return ZipDatum(BasedRootDatum(f.spec), f.mu, limits);
}

TrivialityOracle make_oracle(const std::string& mode, const DatumFile& f, const ZipDatum& z) {
  bool type21 = f.spec.rank == 3 && z.levi() == SimpleSet{0};
  if (mode == "none")
    return TrivialityOracle();
  if (mode == "sublattice") {
    if (!f.triviality_sublattice)
      fail_input("datum file has no triviality_sublattice");
    return TrivialityOracle::sublattice(Lattice::span(f.spec.rank, *f.triviality_sublattice));
  }
  if (mode == "u3-inert" || mode == "gl3-split") {
    if (!type21)
      fail_input("oracle " + mode + " needs a rank-3 datum with Levi type (2,1)");
    return mode == "u3-inert" ? TrivialityOracle::u3_inert(f.spec.p) : TrivialityOracle::gl3_split(f.spec.p);
  }
  if (mode != "auto")
    fail_input("unknown oracle '" + mode + "'");
  if (f.triviality_sublattice)
    return make_oracle("sublattice", f, z);
  if (type21 && same_datum(f.spec, unitary_spec(3, f.spec.p)))
    return TrivialityOracle::u3_inert(f.spec.p);
  if (type21 && same_datum(f.spec, gl_spec(3, f.spec.p)))
    return TrivialityOracle::gl3_split(f.spec.p);
  return TrivialityOracle();
}

} // namespace zipcox
