// w22: command-line front end for the W(2,2) toolkit. Every command prints one
// JSON document {command, payload, timing} on stdout.
#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "w22/characters.hpp"
#include "w22/charges.hpp"
#include "w22/errors.hpp"
#include "w22/griess.hpp"
#include "w22/growth.hpp"
#include "w22/json_io.hpp"
#include "w22/shapovalov.hpp"
#include "w22/verma.hpp"

using namespace w22;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

// Polynomial and superpolynomial reference series for the growth command.
std::vector<BigInt> preset_series(const std::string& kind, std::size_t order) {
  std::vector<BigInt> out;
  if (kind == "eta-times-w22-vacuum") {
    QSeries s = eta(order) * vacuum_character_w22(Rational(1), order);
    for (const auto& c : s.coeffs()) out.push_back(c.num());
  } else if (kind == "w22-vacuum") {
    out = graded_dims(static_cast<int>(order), true);
  } else if (kind == "virasoro-generic") {
    out = inv_product_counts(2, 1, order);
  } else if (kind == "linear" || kind == "quadratic") {
    for (std::size_t n = 0; n <= order; ++n) {
      BigInt v(static_cast<unsigned long>(n));
      out.push_back(kind == "linear" ? v : BigInt(v * v + 1));
    }
  } else {
    throw ParseError("unknown growth preset '" + kind + "'");
  }
  return out;
}

std::vector<BigInt> file_series(const std::string& path) {
  Json j = read_json_file(path);
  std::vector<Rational> coeffs;
  if (j.is_array()) {
    for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  } else {
    coeffs = qseries_from_json(j).coeffs();
  }
  std::vector<BigInt> out;
  for (const auto& c : coeffs) {
    if (!c.is_integer()) throw DomainError("growth diagnostic needs integer coefficients, got " + c.str());
    out.push_back(c.num());
  }
  return out;
}

struct Weights {
  std::string c, h1 = "0", h2 = "0";
  HighestWeight parse() const { return {Rational::parse(c), Rational::parse(h1), Rational::parse(h2)}; }
};

void add_weight_options(CLI::App* sub, Weights& w, bool need_c = true) {
  auto* opt = sub->add_option("--c", w.c, "central charge as p/q");
  if (need_c) opt->required();
  sub->add_option("--h1", w.h1, "L_0 eigenvalue as p/q")->capture_default_str();
  sub->add_option("--h2", w.h2, "W_0 eigenvalue as p/q")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for the W(2,2) Lie algebra and its vertex algebras", "w22"};
  app.require_subcommand(1);
  app.fallthrough();
  int jobs = 0;
  bool compact = false;
  app.add_option("--jobs", jobs, "worker threads for parallel kernels (W22_JOBS overrides)");
  app.add_flag("--compact", compact, "single-line JSON output");

  std::function<Json()> run;

  Weights gw;
  int level = 1;
  bool vacuum = false;
  auto* gram_cmd = app.add_subcommand("gram", "Gram matrix of the invariant form at one level");
  add_weight_options(gram_cmd, gw);
  gram_cmd->add_option("--level", level, "level n")->required()->check(CLI::NonNegativeNumber);
  gram_cmd->add_flag("--vacuum", vacuum, "use the vacuum quotient (h1 = h2 = 0, no -1 modes)");
  gram_cmd->callback([&] {
    run = [&] {
      HighestWeight w = gw.parse();
      VermaModule m = VermaModule::verma(w);
      if (vacuum) {
        m = VermaModule::vacuum_quotient(w);
        if (m.degenerate_vacuum()) throw DomainError("--vacuum with c = 0: the vacuum module is one dimensional");
      }
      return to_json(gram(m, level));
    };
  });

  Weights iw;
  auto* irr_cmd = app.add_subcommand("irreducible", "Irreducibility of the Verma module M(c, h1, h2)");
  add_weight_options(irr_cmd, iw);
  irr_cmd->callback([&] { run = [&] { return to_json(verma_irreducible(iw.parse())); }; });

  Weights cw;
  std::string char_kind = "vacuum";
  std::size_t terms = 10;
  auto* char_cmd = app.add_subcommand("character", "Truncated q-series characters");
  add_weight_options(char_cmd, cw);
  char_cmd->add_option("--kind", char_kind, "vacuum | verma | virasoro-generic")
      ->check(CLI::IsMember({"vacuum", "verma", "virasoro-generic"}))
      ->capture_default_str();
  char_cmd->add_option("--terms", terms, "truncation order N")->capture_default_str();
  char_cmd->callback([&] {
    run = [&] {
      HighestWeight w = cw.parse();
      QSeries s = char_kind == "vacuum"  ? vacuum_character_w22(w.c, terms)
                  : char_kind == "verma" ? verma_character(w, terms)
                                         : generic_virasoro_character(w.c, terms);
      Json out{{"kind", char_kind}, {"c", w.c.str()}};
      if (char_kind == "verma") out["weight"] = to_json(w);
      out["series"] = to_json(s);
      return out;
    };
  });

  std::string growth_kind, series_file;
  std::size_t growth_order = 400;
  auto* growth_cmd = app.add_subcommand("growth", "Growth diagnostic on character coefficients");
  auto* kind_opt = growth_cmd->add_option(
      "--kind", growth_kind, "preset: eta-times-w22-vacuum | w22-vacuum | virasoro-generic | linear | quadratic");
  auto* file_opt = growth_cmd->add_option("--series-file", series_file, "JSON coefficient list or series record");
  kind_opt->excludes(file_opt);
  growth_cmd->add_option("--order", growth_order, "truncation order N")->capture_default_str();
  growth_cmd->callback([&] {
    run = [&] {
      if (growth_kind.empty() && series_file.empty()) throw ParseError("growth needs --kind or --series-file");
      std::vector<BigInt> coeffs;
      if (!series_file.empty()) {
        coeffs = file_series(series_file);
        if (growth_cmd->count("--order") > 0) {
          if (coeffs.size() < growth_order + 1) throw DomainError("series file is shorter than --order");
          coeffs.resize(growth_order + 1);
        }
      } else {
        coeffs = preset_series(growth_kind, growth_order);
      }
      Json out{{"source", series_file.empty() ? growth_kind : series_file}, {"order", coeffs.size() - 1}};
      out["report"] = to_json(growth_diagnostic(coeffs));
      return out;
    };
  });

  long bound = 200;
  auto* solve_cmd = app.add_subcommand("solve-cc", "Minimal-model pairs with c1 + c2 = 1");
  solve_cmd->add_option("--bound", bound, "search bound on s, t")->capture_default_str();
  solve_cmd->callback([&] {
    run = [&] {
      auto sols = solve_sum_one(bound);
      return Json{{"bound", bound},
                  {"count", sols.size()},
                  {"solutions", to_json(sols)},
                  {"scope", "complete for s < t <= bound; uniqueness beyond the bound rests on the orbit argument"}};
    };
  });

  auto* orbit_cmd = app.add_subcommand("orbit", "Torsion orbit on the sum-one curve");
  orbit_cmd->callback([&] {
    run = [&] {
      auto pts = curve_orbit();
      Json points = Json::array(), minimal = Json::array();
      bool all_on = true;
      for (const auto& p : pts) {
        points.push_back(to_json(p));
        if (p.finite()) all_on = all_on && on_curve(p);
      }
      for (const auto& p : minimal_pair_points(pts)) minimal.push_back(to_json(p));
      return Json{{"curve", "6xy^2 + 6x^2y + 6x + 6y = 25xy"},
                  {"count", pts.size()},
                  {"finite_on_curve", all_on},
                  {"points", points},
                  {"minimal_pair_points", minimal}};
    };
  });

  std::string input_file, classify_c;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a two-dimensional Griess algebra");
  classify_cmd->add_option("--input", input_file, "algebra JSON record")->required();
  classify_cmd->add_option("--c", classify_c, "central charge as p/q")->required();
  classify_cmd->callback([&] {
    run = [&] {
      Rational c = Rational::parse(classify_c);
      CommAlgebra2 a = comm_algebra_from_json(read_json_file(input_file));
      return Json{{"algebra", to_json(a)}, {"verdict", to_json(classify(a, c), a)}};
    };
  });

  std::string pipe_c, pipe_ct, pipe_input;
  long dim_v1 = 0, dim_v2 = 2;
  PipelineOptions pipe_opts;
  auto* pipe_cmd = app.add_subcommand("pipeline", "Characterization chain for moonshine-type c = 1 algebras");
  pipe_cmd->add_option("--c", pipe_c, "central charge as p/q")->required();
  pipe_cmd->add_option("--c-tilde", pipe_ct, "effective central charge as p/q")->required();
  pipe_cmd->add_option("--dim-v1", dim_v1, "dim V_1")->capture_default_str();
  pipe_cmd->add_option("--dim-v2", dim_v2, "dim V_2")->capture_default_str();
  pipe_cmd->add_option("--input", pipe_input, "Griess algebra JSON record")->required();
  pipe_cmd->add_option("--growth-order", pipe_opts.growth_order, "order of the growth check")->capture_default_str();
  pipe_cmd->add_option("--bound", pipe_opts.search_bound, "sum-one search bound")->capture_default_str();
  pipe_cmd->callback([&] {
    run = [&] {
      Rational c = Rational::parse(pipe_c), ct = Rational::parse(pipe_ct);
      CommAlgebra2 a = comm_algebra_from_json(read_json_file(pipe_input));
      return to_json(characterization_pipeline(c, ct, dim_v1, dim_v2, a, pipe_opts));
    };
  });

  long nc_s = 3, nc_t = 4;
  auto* nc_cmd = app.add_subcommand("noncongruent-k", "Smallest k with k c_{s,t} not a minimal charge");
  nc_cmd->add_option("--s", nc_s, "s")->capture_default_str();
  nc_cmd->add_option("--t", nc_t, "t")->capture_default_str();
  nc_cmd->callback([&] {
    run = [&] {
      MinimalPair p = MinimalPair::make(nc_s, nc_t);
      Json out{{"pair", to_json(p)}, {"charge", minimal_charge(p).str()}};
      out["certificate"] = to_json(noncongruent_multiple(p));
      return out;
    };
  });

  int basis_level = 0;
  bool exclude_ones = false;
  auto* basis_cmd = app.add_subcommand("basis", "Ordered PBW basis of one graded piece");
  basis_cmd->add_option("--level", basis_level, "level n")->required()->check(CLI::NonNegativeNumber);
  basis_cmd->add_flag("--vacuum", exclude_ones, "vacuum quotient basis (parts >= 2)");
  basis_cmd->callback([&] {
    run = [&] {
      Json items = Json::array();
      for (const auto& m : basis(basis_level, exclude_ones)) items.push_back(to_json(m));
      return Json{{"level", basis_level}, {"vacuum", exclude_ones}, {"dimension", items.size()}, {"basis", items}};
    };
  });

  Json command{{"argv", Json::array()}};
  for (int i = 1; i < argc; ++i) command["argv"].push_back(argv[i]);
  auto emit = [&](const Json& doc) { std::cout << (compact ? doc.dump() : doc.dump(2)) << '\n'; };
  auto fail = [&](int code, const std::string& kind, const std::string& message, Json extra = Json::object()) {
    Json err{{"kind", kind}, {"message", message}};
    for (auto& [k, v] : extra.items()) err[k] = v;
    emit(Json{{"command", command}, {"error", err}});
    std::cerr << "w22: " << message << '\n';
    return code;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(kExitParse, "usage", e.what());
  }
  command["name"] = app.get_subcommands().front()->get_name();

  if (const char* env = std::getenv("W22_JOBS")) {
    try {
      jobs = std::stoi(env);
    } catch (const std::exception&) {
      return fail(kExitParse, "usage", std::string("W22_JOBS is not an integer: ") + env);
    }
  }
  if (jobs > 0) omp_set_num_threads(jobs);

  try {
    auto t0 = std::chrono::steady_clock::now();
    Json payload = run();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(Json{{"command", command},
              {"payload", payload},
              {"timing", Json{{"seconds", secs}, {"jobs", omp_get_max_threads()}}}});
    return 0;
  } catch (const ParseError& e) {
    return fail(kExitParse, "parse", e.what());
  } catch (const MinimalChargeError& e) {
    return fail(kExitDomain, "domain", e.what(), Json{{"witness", to_json(e.witness())}});
  } catch (const AxiomError& e) {
    return fail(kExitDomain, "domain", e.what(), Json{{"axiom", e.axiom()}});
  } catch (const DomainError& e) {
    return fail(kExitDomain, "domain", e.what());
  }
}
