// zipcox command-line front end.
//
// Exit codes: 0 success or true verdict, 1 false verdict, 2 input error,
// 3 resource limit, 4 internal self-check failure.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zipcox/cone.hpp"
#include "zipcox/datum_io.hpp"
#include "zipcox/errors.hpp"
#include "zipcox/ff_verify.hpp"
#include "zipcox/report.hpp"
#include "zipcox/u3.hpp"
#include "zipcox/weyl.hpp"

using namespace zipcox;

namespace {

Limits limits_from_env() {
  Limits l;
  if (const char* s = std::getenv("ZIPCOX_LIMIT")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end == s || *end != '\0' || v == 0)
      fail_input(std::string("ZIPCOX_LIMIT must be a positive integer, got '") + s + "'");
    l.enumeration = l.volume = static_cast<std::size_t>(v);
  }
  return l;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Weight3 weight3(const std::vector<std::int64_t>& v) {
  if (v.size() != 3)
    fail_input("expected three integers, got " + std::to_string(v.size()));
  return {v[0], v[1], v[2]};
}

U3Case parse_case(const std::string& s) {
  if (s == "split")
    return U3Case::Split;
  if (s == "inert")
    return U3Case::Inert;
  fail_input("case must be split or inert");
}

RationalCone pick_cone(const std::string& which, const ZipDatum& z) {
  if (which == "eff")
    return eff_cone(z);
  if (which == "gs")
    return gs_cone(z);
  if (which == "pha")
    return pha_cone(z);
  if (which == "dominant")
    return dominant_cone(z.datum());
  fail_input("unknown cone '" + which + "'");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zip data, strata, cones of weights and Hasse invariants"};
  app.require_subcommand(1);

  std::string file, format = "json", which, oracle = "auto", zcase = "inert", section;
  std::vector<std::int64_t> lambda, weight_override;
  bool hilbert = false;
  std::int64_t p = 2, box = 20, index = -1;
  int degree = 6;
  std::size_t trials = 100;
  std::uint64_t seed = 42;

  auto* describe = app.add_subcommand("describe", "zip datum summary");
  describe->add_option("file", file, "datum JSON")->required();

  auto* strata = app.add_subcommand("strata", "poset of zip strata");
  strata->add_option("file", file, "datum JSON")->required();
  strata->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));

  std::vector<std::pair<CLI::App*, std::string>> cone_cmds;
  for (const char* name : {"eff", "gs", "pha"}) {
    auto* c = app.add_subcommand(std::string(name) + "-cone", std::string(name) + " cone");
    c->add_option("file", file, "datum JSON")->required();
    c->add_flag("--hilbert", hilbert, "also compute the Hilbert basis");
    cone_cmds.emplace_back(c, name);
  }
  auto* hb = app.add_subcommand("hilbert-basis", "Hilbert basis of a cone");
  hb->add_option("file", file, "datum JSON")->required();
  hb->add_option("--cone", which)->required()->check(CLI::IsMember({"eff", "gs", "pha", "dominant"}));

  auto* hasse = app.add_subcommand("hasse-check", "section criteria for a weight");
  hasse->add_option("file", file, "datum JSON")->required();
  hasse->add_option("--lambda", lambda)->required()->delimiter(',');
  hasse->add_option("--oracle", oracle)->check(CLI::IsMember({"auto", "none", "sublattice", "u3-inert", "gl3-split"}));

  auto* u3 = app.add_subcommand("u3", "rank-3 unitary example");
  u3->require_subcommand(1);
  auto* u3dim = u3->add_subcommand("dim", "dimension of H^0");
  auto* u3dec = u3->add_subcommand("decompose", "generator decomposition");
  for (auto* c : {u3dim, u3dec}) {
    c->add_option("--p", p)->required();
    c->add_option("--lambda", lambda)->required()->delimiter(',');
  }
  u3dec->add_option("--i", index, "qualifying index (default: the smallest)");
  auto* scan = u3->add_subcommand("czip-scan", "exhaustive monoid check on a box");
  scan->add_option("--p", p)->required();
  scan->add_option("--box", box);

  auto* verify = app.add_subcommand("verify-equivariance", "randomized check over F_{p^k}");
  verify->add_option("--case", zcase)->check(CLI::IsMember({"split", "inert"}));
  verify->add_option("--p", p);
  verify->add_option("--degree", degree);
  verify->add_option("--trials", trials);
  verify->add_option("--seed", seed);
  verify->add_option("--section", section)->check(CLI::IsMember({"ha1", "ha2", "ha_mu", "det"}));
  verify->add_option("--weight", weight_override)->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Limits lim = limits_from_env();
    if (describe->parsed()) {
      emit(describe_json(zip_from_file(load_datum(file), lim)));
      return 0;
    }
    if (strata->parsed()) {
      ZipDatum z = zip_from_file(load_datum(file), lim);
      WeylGroup W(z.datum(), z.roots(), lim.enumeration);
      StrataPoset P = strata_poset(z, W);
      if (format == "dot")
        std::cout << poset_dot(P);
      else
        emit(poset_json(W, P));
      return 0;
    }
    for (auto& [cmd, name] : cone_cmds) {
      if (!cmd->parsed())
        continue;
      ZipDatum z = zip_from_file(load_datum(file), lim);
      RationalCone c = pick_cone(name, z);
      Json j = hilbert ? cone_json(c, hilbert_basis(c, lim.volume)) : cone_json(c);
      if (name == "pha") {
        Json imgs = Json::array();
        for (const auto& v : pha_generator_images(z))
          imgs.push_back(int_vector(v));
        j["generator_images"] = imgs;
      }
      emit(j);
      return 0;
    }
    if (hb->parsed()) {
      ZipDatum z = zip_from_file(load_datum(file), lim);
      RationalCone c = pick_cone(which, z);
      emit(cone_json(c, hilbert_basis(c, lim.volume)));
      return 0;
    }
    if (hasse->parsed()) {
      DatumFile f = load_datum(file);
      ZipDatum z = zip_from_file(f, lim);
      if (lambda.size() != z.rank())
        fail_input("lambda has length " + std::to_string(lambda.size()) + ", expected " +
                   std::to_string(z.rank()));
      QVector l = QVector::from_ints(lambda);
      HasseVerdict v = hasse_verdict(z, l, make_oracle(oracle, f, z));
      emit(hasse_json(l, v));
      return v.mu_ordinary_hasse ? 0 : 1;
    }
    if (u3dim->parsed()) {
      emit(u3_dim_json(weight3(lambda), p));
      return 0;
    }
    if (u3dec->parsed()) {
      Weight3 l = weight3(lambda);
      if (index < 0) {
        auto idx = qualifying_indices(l, p, 1);
        if (idx.empty())
          fail_input("no qualifying index: H^0 vanishes for this weight");
        index = idx.front();
      }
      emit(u3_decompose_json(l, p, index, decompose_generators(l, p, index)));
      return 0;
    }
    if (scan->parsed()) {
      CzipScan s = czip_scan(p, box);
      emit(czip_scan_json(s));
      return s.ok() ? 0 : 1;
    }
    if (verify->parsed()) {
      U3Case c = parse_case(zcase);
      std::vector<Section> secs;
      if (!section.empty())
        secs.push_back(*parse_section(section));
      else if (c == U3Case::Inert)
        secs = {Section::Ha1, Section::Ha2, Section::HaMu, Section::Det};
      else
        secs = {Section::Det};
      Json out = Json::array();
      bool ok = true;
      for (Section s : secs) {
        EquivarianceReport r =
            weight_override.empty()
                ? check_equivariance(s, c, p, degree, trials, seed)
                : check_equivariance(
                      to_string(s), [s](const FqMatrix3& a) { return evaluate_section(s, a); },
                      weight3(weight_override), c, p, degree, trials, seed);
        ok = ok && r.ok();
        out.push_back(equivariance_json(r));
      }
      emit(out.size() == 1 ? out[0] : out);
      return ok ? 0 : 1;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const DefectError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
