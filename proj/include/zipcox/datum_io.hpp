// Datum files: JSON with p, rank, simple_roots, simple_coroots, sigma_char,
// mu and an optional triviality_sublattice.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zipcox/root_datum.hpp"
#include "zipcox/sections.hpp"
#include "zipcox/zip_datum.hpp"

namespace zipcox {

struct DatumFile {
  RootDatumSpec spec;
  QVector mu;
  std::optional<std::vector<QVector>> triviality_sublattice;
};

// Throws InputError; JSON syntax errors carry line and column.
DatumFile parse_datum(const std::string& text, const std::string& source = "<input>");
DatumFile load_datum(const std::string& path);

ZipDatum zip_from_file(const DatumFile& f, const Limits& limits = {});

// mode: "auto", "none", "sublattice", "u3-inert", "gl3-split".  auto picks
// the sublattice if the file has one, else a rank-3 oracle when the datum is
// the standard GL₃ or U(3) datum with Levi type (2,1), else none.
TrivialityOracle make_oracle(const std::string& mode, const DatumFile& f, const ZipDatum& z);

} // namespace zipcox
