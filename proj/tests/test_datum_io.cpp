#include <doctest.h>

#include "zipcox/datum_io.hpp"

using namespace zipcox;

namespace {
std::string data(const char* name) { return std::string(ZIPCOX_DATA_DIR) + "/" + name; }
} // namespace

TEST_CASE("bundled files load") {
  for (const char* name : {"gl3_split.json", "u3_inert.json", "sl2_weil2.json", "sl2_weil3.json", "c2_split.json"}) {
    DatumFile f = load_datum(data(name));
    CHECK_NOTHROW(zip_from_file(f));
  }
  DatumFile u = load_datum(data("u3_inert.json"));
  CHECK(u.spec.sigma_char == unitary_spec(3, 3).sigma_char);
}

TEST_CASE("malformed input") {
  CHECK_THROWS_WITH_AS(parse_datum("{\n  \"p\": 2,\n  \"rank\": ]\n}"), doctest::Contains("line 3"), InputError);
  CHECK_THROWS_WITH_AS(parse_datum("{\"p\": 2}"), doctest::Contains("missing field 'rank'"), InputError);
  CHECK_THROWS_AS(parse_datum(R"({"p": 2, "rank": 1, "simple_roots": [[2]], "simple_coroots": [[1]],
                                  "sigma_char": [[1]], "mu": [1.5]})"),
                  InputError);
  CHECK_THROWS_AS(load_datum(data("missing.json")), InputError);
}

TEST_CASE("oracle selection") {
  DatumFile g = load_datum(data("gl3_split.json"));
  ZipDatum zg = zip_from_file(g);
  CHECK(make_oracle("auto", g, zg).name() == "gl3-split");
  DatumFile u = load_datum(data("u3_inert.json"));
  ZipDatum zu = zip_from_file(u);
  CHECK(make_oracle("auto", u, zu).name() == "u3-inert");
  CHECK(make_oracle("none", u, zu).name() == "none");
  CHECK_THROWS_AS(make_oracle("sublattice", u, zu), InputError);

  DatumFile s = parse_datum(R"({"p": 3, "rank": 2, "simple_roots": [[1, -1], [0, 2]],
                                "simple_coroots": [[1, -1], [0, 1]], "sigma_char": [[1, 0], [0, 1]],
                                "mu": [1, 1], "triviality_sublattice": [[2, 0]]})");
  ZipDatum zs = zip_from_file(s);
  auto o = make_oracle("auto", s, zs);
  CHECK(o.name() == "sublattice");
  CHECK(o(QVector{4, 0}) == Trool::True);
}
