// Command-line front end: conjecture reports, x_k tables, shuffle sampling,
// censuses and batch suites.
//
// Exit status: 0 success, 1 proven-case mismatch or invariant failure,
// 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <variant>

#include "cellini/affine_points.hpp"
#include "cellini/errors.hpp"
#include "cellini/finite_field.hpp"
#include "cellini/harness.hpp"
#include "cellini/json_io.hpp"
#include "cellini/measure.hpp"
#include "cellini/shuffles.hpp"

namespace {

using cellini::Json;

int report_exit(const cellini::Report& r) {
  return r.status == cellini::Status::ProvenMatchRequired || r.error ? 1 : 0;
}

Json shapes_json(const cellini::ShapeMultiset& s) {
  Json out = Json::array();
  for (const auto& c : s) out.push_back(c.word);
  return out;
}

template <class Perm>
Json xk_table(int n, int k, cellini::XkMethod method, bool classes, bool spectrum) {
  const auto m = cellini::xk_measure<Perm>(n, k, method);
  Json j = cellini::to_json(m);
  if (classes) j["classes"] = cellini::to_json(cellini::pushforward_classes(m));
  if (spectrum) {
    Json ev = Json::array();
    for (const auto& z : cellini::approximate_eigenvalues(cellini::left_mult_matrix(m).matrix))
      ev.push_back({z.real(), z.imag()});
    j["approximate_eigenvalues"] = std::move(ev);
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with the descent measures x_k"};
  app.require_subcommand(1);
  bool timing = false;
  int exit_status = 0;

  // verify
  auto* verify = app.add_subcommand("verify", "Compare exact distributions");
  verify->require_subcommand(1);
  std::string type_name = "A";
  int n = 3, q = 2, k = 2;

  auto* c1 = verify->add_subcommand("conjecture1", "Class distribution vs pushforward of x_q");
  c1->add_option("--type", type_name, "A or C")->check(CLI::IsMember({"A", "C"}));
  c1->add_option("--n", n, "rank parameter")->required();
  c1->add_option("--q", q, "field size")->required();
  c1->add_flag("--timing", timing, "include wall-clock seconds");
  c1->callback([&] {
    const auto r = cellini::verify_conjecture1(cellini::parse_weyl_type(type_name), n, q);
    std::cout << r.to_json(timing).dump(2) << "\n";
    exit_status = report_exit(r);
  });

  auto* c2 = verify->add_subcommand("conjecture2", "Alcove-point refinement vs x_q on S_n");
  c2->add_option("--n", n)->required();
  c2->add_option("--q", q)->required();
  c2->add_flag("--timing", timing);
  c2->callback([&] {
    const auto r = cellini::verify_conjecture2(n, q);
    std::cout << r.to_json(timing).dump(2) << "\n";
    exit_status = report_exit(r);
  });

  auto* cc = verify->add_subcommand("classes", "Class pushforward of the refinement vs SL(n,q)");
  cc->add_option("--n", n)->required();
  cc->add_option("--q", q)->required();
  cc->add_flag("--timing", timing);
  cc->callback([&] {
    const auto r = cellini::verify_class_consistency(n, q);
    std::cout << r.to_json(timing).dump(2) << "\n";
    exit_status = report_exit(r);
  });

  // table
  auto* table = app.add_subcommand("table", "Tabulate measures");
  table->require_subcommand(1);
  std::string method = "closed";
  bool classes = false, spectrum = false;
  auto* xk = table->add_subcommand("xk", "Coefficients of x_k");
  xk->add_option("--type", type_name)->check(CLI::IsMember({"A", "C"}));
  xk->add_option("--n", n)->required();
  xk->add_option("--k", k)->required();
  xk->add_option("--method", method)->check(CLI::IsMember({"closed", "definition"}));
  xk->add_flag("--classes", classes, "add the conjugacy-class pushforward");
  xk->add_flag("--eigenvalues", spectrum, "add a floating-point spectrum (exploratory)");
  xk->callback([&] {
    const auto m = cellini::parse_xk_method(method);
    const Json j = cellini::parse_weyl_type(type_name) == cellini::WeylType::A
                       ? xk_table<cellini::PermA>(n, k, m, classes, spectrum)
                       : xk_table<cellini::PermC>(n, k, m, classes, spectrum);
    std::cout << j.dump(2) << "\n";
  });

  // shuffle
  auto* shuffle = app.add_subcommand("shuffle", "Shuffle models");
  shuffle->require_subcommand(1);
  std::string kind = "gsr";
  std::uint64_t seed = 1;
  int count = 1;
  auto* sample = shuffle->add_subcommand("sample", "Draw arrangements, one per line");
  sample->add_option("--kind", kind)->check(CLI::IsMember({"gsr", "typec", "halfflip"}));
  sample->add_option("--n", n)->required();
  sample->add_option("--k", k);
  sample->add_option("--seed", seed);
  sample->add_option("--count", count)->check(CLI::PositiveNumber);
  sample->callback([&] {
    cellini::ShuffleSampler s(cellini::parse_shuffle_kind(kind, k), n, seed);
    for (int i = 0; i < count; ++i)
      std::visit([](const auto& w) { std::cout << cellini::to_json(w).dump() << "\n"; }, s.next());
  });
  auto* exact = shuffle->add_subcommand("exact", "Exact distribution by word enumeration");
  exact->add_option("--kind", kind)->check(CLI::IsMember({"gsr", "typec", "halfflip"}));
  exact->add_option("--n", n)->required();
  exact->add_option("--k", k);
  exact->callback([&] {
    const auto d = cellini::exact_distribution(cellini::parse_shuffle_kind(kind, k), n);
    std::visit([](const auto& m) { std::cout << cellini::to_json(m).dump(2) << "\n"; }, d);
  });

  // census
  auto* census = app.add_subcommand("census", "Enumerative censuses");
  census->require_subcommand(1);
  int degree = 2;
  auto* gannon = census->add_subcommand("gannon", "Cycle-shape multisets of unimodal permutations");
  gannon->add_option("--n", n)->required();
  gannon->callback([&] {
    Json rows = Json::array();
    for (const auto& [s, c] : cellini::gannon_census(n)) {
      const int l = cellini::distinct_shapes(s);
      rows.push_back({{"shapes", shapes_json(s)}, {"count", c}, {"distinct", l}, {"expected", 1ULL << (l - 1)}});
    }
    std::cout << rows.dump(2) << "\n";
  });
  auto* unimodal = census->add_subcommand("unimodal", "Unimodal permutation counts");
  unimodal->add_option("--n", n)->required();
  unimodal->callback([&] {
    const auto perms = cellini::unimodal_enumerate(n);
    Json j;
    j["n"] = n;
    j["count"] = perms.size();
    j["transitive_cycles"] = cellini::transitive_unimodal_enumerated(n);
    j["transitive_cycles_formula"] = cellini::to_string(cellini::ff::count_transitive_unimodal(n));
    const auto f = cellini::fixed_point_fraction_unimodal(n);
    j["fixed_point_fraction"] = cellini::to_string(f);
    j["fixed_point_fraction_approx"] = cellini::to_double(f);
    std::cout << j.dump(2) << "\n";
  });
  auto* necklaces = census->add_subcommand("necklaces", "Irreducibles by norm vs aperiodic necklaces by digit sum");
  necklaces->add_option("--q", q)->required();
  necklaces->add_option("--i", degree, "polynomial degree / necklace length")->required();
  necklaces->callback([&] {
    const auto field = cellini::ff::Fq::make(q);
    const auto polys = cellini::ff::irreducible_count_by_norm(field, degree);
    const auto neck = cellini::ff::necklace_norm_histogram(q, degree);
    Json rows = Json::array();
    for (const auto& [r, c] : polys)
      rows.push_back({{"log_norm", r},
                      {"irreducibles", cellini::to_string(c)},
                      {"necklaces", cellini::to_string(neck.at(r))}});
    Json j;
    j["q"] = q;
    j["i"] = degree;
    j["generator"] = field.generator();
    j["rows"] = std::move(rows);
    j["equal"] = polys == neck;
    std::cout << j.dump(2) << "\n";
    if (polys != neck) exit_status = 1;
  });

  // suite
  auto* suite = app.add_subcommand("suite", "Run a batch of experiments from a JSON config");
  std::string config_path, csv_path;
  suite->add_option("--config", config_path)->required()->check(CLI::ExistingFile);
  suite->add_option("--csv", csv_path, "also write a CSV export");
  suite->add_flag("--timing", timing);
  suite->callback([&] {
    const auto result = cellini::run_suite(cellini::load_suite_config(config_path));
    std::cout << result.to_json(timing).dump(2) << "\n";
    std::cerr << result.summary_table();
    if (!csv_path.empty()) {
      std::ofstream out(csv_path);
      if (!out) throw std::invalid_argument("cannot write " + csv_path);
      out << result.to_csv();
    }
    exit_status = result.exit_code();
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const cellini::InvariantError& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_status;
}
