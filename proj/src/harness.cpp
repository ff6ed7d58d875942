#include "cellini/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cellini/affine_points.hpp"
#include "cellini/finite_field.hpp"
#include "cellini/measure.hpp"
#include "cellini/ss_classes.hpp"

namespace cellini {

std::string to_string(Status s) {
  switch (s) {
    case Status::Match: return "MATCH";
    case Status::Mismatch: return "MISMATCH";
    case Status::ProvenMatchRequired: return "PROVEN-MATCH-REQUIRED";
  }
  return "?";
}

std::string to_string(Experiment e) {
  switch (e) {
    case Experiment::Conjecture1: return "conjecture1";
    case Experiment::Conjecture2: return "conjecture2";
    case Experiment::ClassConsistency: return "class_consistency";
  }
  return "?";
}

Experiment parse_experiment(const std::string& s) {
  if (s == "conjecture1") return Experiment::Conjecture1;
  if (s == "conjecture2") return Experiment::Conjecture2;
  if (s == "class_consistency") return Experiment::ClassConsistency;
  throw std::invalid_argument("unknown experiment: " + s);
}

namespace {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

template <class Key, class Encode>
Json diff_rows(const std::vector<ValueDiff<Key>>& diffs, const char* key_name, Encode encode) {
  Json rows = Json::array();
  for (const auto& d : diffs)
    rows.push_back({{key_name, encode(d.key)}, {"left", to_json(d.left)}, {"right", to_json(d.right)}});
  return rows;
}

Status classify(bool equal, bool gated) {
  if (equal) return Status::Match;
  return gated ? Status::ProvenMatchRequired : Status::Mismatch;
}

std::string default_id(const ExperimentSpec& s) {
  return to_string(s.experiment) + "-" + to_string(s.type) + "-n" + std::to_string(s.n) + "-q" + std::to_string(s.q);
}

template <class Body>
Report timed(const ExperimentSpec& spec, Body body) {
  Report r;
  r.spec = spec;
  r.spec.id = default_id(spec);
  r.gated = is_gated(spec);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.error = e.what();
    r.status = r.gated ? Status::ProvenMatchRequired : Status::Mismatch;
  }
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

template <class Perm>
void conjecture1_body(Report& r, ClassKind kind) {
  const auto& s = r.spec;
  const auto left = class_distribution(kind, s.n, s.q);
  const auto right = pushforward_classes(xk_measure<Perm>(s.n, s.q));
  const auto d = diff(left, right);
  r.left = to_json(left);
  r.right = to_json(right);
  r.diffs = diff_rows(d, "label", [](const ClassLabel& c) { return to_json(c); });
  bool identity_row_broken = false;
  if (s.type == WeylType::A) {
    const auto id = ClassLabel::identity(WeylType::A, s.n);
    identity_row_broken = left.at(id) != right.at(id);
  }
  r.status = classify(d.empty(), r.gated);
  if (identity_row_broken) r.status = Status::ProvenMatchRequired;
}

}  // namespace

Json Report::to_json(bool with_timing) const {
  Json j;
  j["id"] = spec.id;
  j["experiment"] = cellini::to_string(spec.experiment);
  j["type"] = cellini::to_string(spec.type);
  j["n"] = spec.n;
  j["q"] = spec.q;
  j["status"] = cellini::to_string(status);
  j["gated"] = gated;
  if (error) j["error"] = *error;
  j["left"] = left;
  j["right"] = right;
  j["diffs"] = diffs;
  if (with_timing) j["wall_seconds"] = wall_seconds;
  return j;
}

bool is_gated(const ExperimentSpec& spec) {
  switch (spec.experiment) {
    case Experiment::Conjecture1:
      if (spec.type == WeylType::C) return spec.q % 2 == 1;
      return spec.n <= 3 || (is_prime(spec.q) && spec.n == spec.q);
    case Experiment::Conjecture2: return spec.n <= 3;
    case Experiment::ClassConsistency: return true;
  }
  return false;
}

Report verify_conjecture1(WeylType type, int n, int q) {
  ExperimentSpec spec{"", Experiment::Conjecture1, type, n, q};
  return timed(spec, [&](Report& r) {
    ff::prime_power(q);
    if (type == WeylType::A)
      conjecture1_body<PermA>(r, ClassKind::SL);
    else
      conjecture1_body<PermC>(r, ClassKind::Sp);
  });
}

Report verify_conjecture2(int n, int q) {
  ExperimentSpec spec{"", Experiment::Conjecture2, WeylType::A, n, q};
  return timed(spec, [&](Report& r) {
    const auto left = refined_measure(n, q);
    const auto right = xk_measure_A(n, q);
    const auto d = diff(left, right);
    r.left = to_json(left);
    r.right = to_json(right);
    r.diffs = diff_rows(d, "element", [](const PermA& w) { return to_json(w); });
    r.status = classify(d.empty(), r.gated);
  });
}

Report verify_class_consistency(int n, int q) {
  ExperimentSpec spec{"", Experiment::ClassConsistency, WeylType::A, n, q};
  return timed(spec, [&](Report& r) {
    const auto left = pushforward_classes(refined_measure(n, q));
    const auto right = class_distribution(ClassKind::SL, n, q);
    const auto d = diff(left, right);
    r.left = to_json(left);
    r.right = to_json(right);
    r.diffs = diff_rows(d, "label", [](const ClassLabel& c) { return to_json(c); });
    r.status = classify(d.empty(), r.gated);
  });
}

Report run_experiment(const ExperimentSpec& spec) {
  Report r;
  switch (spec.experiment) {
    case Experiment::Conjecture1: r = verify_conjecture1(spec.type, spec.n, spec.q); break;
    case Experiment::Conjecture2: r = verify_conjecture2(spec.n, spec.q); break;
    case Experiment::ClassConsistency: r = verify_class_consistency(spec.n, spec.q); break;
  }
  r.spec = spec;
  return r;
}

// ---- suites ----

SuiteConfig parse_suite_config(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("suite config must be a JSON object");
  SuiteConfig cfg;
  for (const auto& [key, value] : j.items()) {
    if (key == "workers") {
      if (!value.is_number_integer() || value.get<int>() < 1) throw std::invalid_argument("workers must be a positive integer");
      cfg.workers = value.get<int>();
    } else if (key != "experiments") {
      throw std::invalid_argument("unknown suite config key: " + key);
    }
  }
  if (!j.contains("experiments")) return cfg;
  const auto& list = j.at("experiments");
  if (!list.is_array()) throw std::invalid_argument("experiments must be an array");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto& e = list[i];
    if (!e.is_object()) throw std::invalid_argument("experiment entries must be objects");
    ExperimentSpec spec;
    std::ostringstream id;
    id << "e" << std::setw(3) << std::setfill('0') << i;
    spec.id = id.str();
    bool has_experiment = false, has_n = false, has_q = false;
    try {
      for (const auto& [key, value] : e.items()) {
        if (key == "id") {
          spec.id = value.get<std::string>();
        } else if (key == "experiment") {
          spec.experiment = parse_experiment(value.get<std::string>());
          has_experiment = true;
        } else if (key == "type") {
          spec.type = parse_weyl_type(value.get<std::string>());
        } else if (key == "n") {
          spec.n = value.get<int>();
          has_n = true;
        } else if (key == "q") {
          spec.q = value.get<int>();
          has_q = true;
        } else {
          throw std::invalid_argument("unknown experiment key: " + key);
        }
      }
    } catch (const Json::type_error& err) {
      throw std::invalid_argument("experiment " + spec.id + ": " + err.what());
    }
    if (!has_experiment || !has_n || !has_q)
      throw std::invalid_argument("experiment " + spec.id + " needs experiment, n and q");
    if (spec.n < 1 || spec.q < 2) throw std::invalid_argument("experiment " + spec.id + " has out-of-range n or q");
    cfg.experiments.push_back(std::move(spec));
  }
  return cfg;
}

SuiteConfig load_suite_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open suite config " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("malformed suite config " + path + ": " + e.what());
  }
  try {
    return parse_suite_config(j);
  } catch (const Json::exception& e) {
    throw std::invalid_argument("malformed suite config " + path + ": " + e.what());
  }
}

SuiteResult run_suite(const SuiteConfig& config) {
  const auto& specs = config.experiments;
  std::vector<Report> reports(specs.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) reports[i] = run_experiment(specs[i]);
  };
  const auto count = std::min<std::size_t>(static_cast<std::size_t>(std::max(1, config.workers)), std::max<std::size_t>(1, specs.size()));
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  std::stable_sort(reports.begin(), reports.end(), [](const Report& a, const Report& b) { return a.spec.id < b.spec.id; });
  return SuiteResult{std::move(reports)};
}

int SuiteResult::exit_code() const {
  for (const auto& r : reports)
    if (r.status == Status::ProvenMatchRequired || r.error) return 1;
  return 0;
}

Json SuiteResult::to_json(bool with_timing) const {
  Json j;
  Json list = Json::array();
  Json summary = Json::array();
  for (const auto& r : reports) {
    list.push_back(r.to_json(with_timing));
    summary.push_back({{"id", r.spec.id},
                       {"experiment", cellini::to_string(r.spec.experiment)},
                       {"type", cellini::to_string(r.spec.type)},
                       {"n", r.spec.n},
                       {"q", r.spec.q},
                       {"status", cellini::to_string(r.status)}});
  }
  j["reports"] = std::move(list);
  j["summary"] = std::move(summary);
  j["exit_code"] = exit_code();
  return j;
}

namespace {

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string SuiteResult::to_csv() const {
  std::ostringstream out;
  out << "id,experiment,type,n,q,status,side,label,value\n";
  for (const auto& r : reports) {
    const std::string prefix = csv_quote(r.spec.id) + "," + cellini::to_string(r.spec.experiment) + "," +
                               cellini::to_string(r.spec.type) + "," + std::to_string(r.spec.n) + "," +
                               std::to_string(r.spec.q) + "," + cellini::to_string(r.status) + ",";
    const auto emit = [&](const char* side, const Json& dist) {
      // Class distributions are arrays of {label, value}; measures carry entries.
      const Json& rows = dist.is_object() && dist.contains("entries") ? dist.at("entries") : dist;
      if (!rows.is_array()) return;
      for (const auto& row : rows) {
        const auto& label = row.contains("label") ? row.at("label") : row.at("element");
        out << prefix << side << "," << csv_quote(label.dump()) << "," << row.at("value").get<std::string>() << "\n";
      }
    };
    emit("left", r.left);
    emit("right", r.right);
  }
  return out.str();
}

std::string SuiteResult::summary_table() const {
  std::ostringstream out;
  out << std::left << std::setw(12) << "id" << std::setw(19) << "experiment" << std::setw(6) << "type" << std::setw(5)
      << "n" << std::setw(5) << "q" << "status\n";
  for (const auto& r : reports) {
    out << std::left << std::setw(12) << r.spec.id << std::setw(19) << cellini::to_string(r.spec.experiment)
        << std::setw(6) << cellini::to_string(r.spec.type) << std::setw(5) << r.spec.n << std::setw(5) << r.spec.q
        << cellini::to_string(r.status);
    if (r.error) out << "  (" << *r.error << ")";
    out << "\n";
  }
  return out.str();
}

}  // namespace cellini
