// Command-line front end: Pieri products, Giambelli polynomials, quantum
// products and the verification suites.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <thread>

#include "isoschubert/giambelli.hpp"
#include "isoschubert/pieri.hpp"
#include "isoschubert/rings.hpp"
#include "isoschubert/serialize.hpp"
#include "isoschubert/verify.hpp"

using namespace isoschubert;

namespace {

constexpr int kUsageError = 2;
constexpr int kVerifyFailure = 1;

struct Request {
  std::string family = "IG";
  int n = -1;
  int k = -1;
  std::string lambda;
  std::string mu;
  int p = 0;
  std::string grid;
  std::string format = "json";
};

Partition parse_partition(const std::string& text) {
  if (text.empty() || text == "0") return {};
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ValidationError("bad partition '" + text + "'");
    }
  }
  if (!is_k_strict(parts, 1 << 20))
    throw ValidationError("partition '" + text + "' is not weakly decreasing and positive");
  return Partition(std::move(parts));
}

SpaceContext context_of(const Request& r) {
  if (r.n < 0 || r.k < 0) throw ValidationError("--n and --k are required");
  return SpaceContext(family_from_string(r.family), r.n, r.k);
}

void emit(const Request& r, const json& j, const std::string& text) {
  if (r.format == "json")
    std::cout << j.dump() << "\n";
  else
    std::cout << text << "\n";
}

int run_enumerate(const Request& r) {
  const SpaceContext ctx = context_of(r);
  const auto all = enumerate_P(ctx.k(), ctx.n());
  json parts = json::array();
  std::string text;
  for (const auto& lambda : all) {
    parts.push_back(to_json(lambda));
    text += lambda.to_string() + "\n";
  }
  json j;
  j["k"] = ctx.k();
  j["n"] = ctx.n();
  j["count"] = all.size();
  j["partitions"] = parts;
  text += std::to_string(all.size()) + " partitions";
  emit(r, j, text);
  return 0;
}

int run_pieri(const Request& r, bool quantum) {
  const SpaceContext ctx = context_of(r);
  const Partition lambda = parse_partition(r.lambda);
  const std::string sym = class_symbol(ctx.family());
  if (quantum) {
    const auto c = quantum_pieri(ctx, r.p, lambda);
    emit(r, to_json(c), format(c, sym));
  } else {
    const auto c = classical_pieri(ctx, r.p, lambda);
    emit(r, to_json(c), format(c, sym));
  }
  return 0;
}

int run_giambelli(const Request& r, bool quantum) {
  const SpaceContext ctx = context_of(r);
  const Partition lambda = parse_partition(r.lambda);
  ctx.require(lambda);
  const GiambelliPolynomial poly = quantum ? quantum_giambelli(lambda, ctx)
                                           : classical_giambelli(lambda, ctx.family(), ctx.k());
  emit(r, to_json(poly), format(poly));
  return 0;
}

int run_multiply(const Request& r) {
  const SpaceContext ctx = context_of(r);
  const auto c = qh_multiply(ctx, parse_partition(r.lambda), parse_partition(r.mu));
  emit(r, to_json(c), format(c, class_symbol(ctx.family())));
  return 0;
}

unsigned worker_count() {
  if (const char* env = std::getenv("ISOSCHUBERT_WORKERS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Output for one block of suites, buffered so grid points print in order.
std::string render(const Request& r, const std::vector<verify::CheckResult>& results,
                   const std::string& scope) {
  std::ostringstream out;
  for (const auto& res : results) {
    if (r.format == "json") {
      for (const auto& line : res.reports) out << line.dump() << "\n";
      for (const auto& f : res.failures) {
        json j;
        j["check"] = res.name;
        j["failure"] = f;
        out << j.dump() << "\n";
      }
      json summary;
      summary["check"] = res.name;
      summary["scope"] = scope;
      summary["cases"] = res.cases;
      summary["ok"] = res.ok;
      out << summary.dump() << "\n";
    } else {
      for (const auto& f : res.failures) out << "FAIL " << res.name << ": " << f << "\n";
      out << (res.ok ? "PASS " : "FAIL ") << res.name << " [" << scope << "] "
          << res.cases << " cases\n";
    }
  }
  return out.str();
}

int run_verify(const Request& r) {
  const verify::Grid grid =
      r.grid.empty() ? verify::default_grid() : verify::parse_grid(r.grid);

  std::vector<std::string> blocks(grid.size());
  std::vector<char> passed(grid.size(), 1);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      const auto [k, n] = grid[i];
      std::vector<verify::CheckResult> results = {
          verify::classical_giambelli(k, n), verify::quantum_giambelli_ig(k, n),
          verify::giambelli_og(k, n),        verify::pi_consistency(k, n),
          verify::ig_og_correspondence(k, n), verify::recursion_closed_form(k, n),
          verify::ring_axioms(k, n, 100, 7), verify::degenerations(k, n)};
      for (const auto& res : results) passed[i] = passed[i] && res.ok;
      blocks[i] = render(r, results, "k=" + std::to_string(k) + ",n=" + std::to_string(n));
    }
  };
  std::vector<std::thread> pool;
  const unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(grid.size()));
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int max_k = 0;
  for (const auto& [k, n] : grid) max_k = std::max(max_k, k);
  const std::vector<verify::CheckResult> global = {
      verify::stable_relations(std::min(max_k, 3), 8), verify::index_vectors(12, 3),
      verify::pieri_stability(200, 7), verify::small_quantum_rings()};

  bool ok = std::all_of(passed.begin(), passed.end(), [](char c) { return c != 0; });
  for (const auto& block : blocks) std::cout << block;
  std::cout << render(r, global, "global");
  for (const auto& res : global) ok = ok && res.ok;
  return ok ? 0 : kVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schubert calculus on isotropic Grassmannians IG(n-k,2n) and OG(n-k,2n+1)"};
  app.require_subcommand(1);
  Request req;

  auto add_common = [&](CLI::App* sub, bool needs_family) {
    if (needs_family)
      sub->add_option("--family", req.family, "IG or OG")->check(CLI::IsMember({"IG", "OG"}));
    sub->add_option("--n", req.n, "n")->required();
    sub->add_option("--k", req.k, "k")->required();
    sub->add_option("--format", req.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  auto* enumerate = app.add_subcommand("enumerate", "list P(k,n)");
  add_common(enumerate, false);

  auto* pieri = app.add_subcommand("pieri", "classical Pieri product");
  auto* qpieri = app.add_subcommand("qpieri", "quantum Pieri product");
  for (auto* sub : {pieri, qpieri}) {
    add_common(sub, true);
    sub->add_option("--p", req.p, "special class degree")->required();
    sub->add_option("--lambda", req.lambda, "partition, e.g. 4,3");
  }

  auto* giambelli = app.add_subcommand("giambelli", "classical Giambelli polynomial");
  auto* qgiambelli = app.add_subcommand("qgiambelli", "quantum Giambelli polynomial");
  for (auto* sub : {giambelli, qgiambelli}) {
    add_common(sub, true);
    sub->add_option("--lambda", req.lambda, "partition, e.g. 4,3");
  }

  auto* multiply = app.add_subcommand("multiply", "quantum product of two Schubert classes");
  add_common(multiply, true);
  multiply->add_option("--lambda", req.lambda, "first partition");
  multiply->add_option("--mu", req.mu, "second partition");

  auto* verify = app.add_subcommand("verify", "run the verification suites over a grid");
  verify->add_option("--grid", req.grid, "grid points k:n, comma separated");
  verify->add_option("--format", req.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*enumerate) return run_enumerate(req);
    if (*pieri) return run_pieri(req, false);
    if (*qpieri) return run_pieri(req, true);
    if (*giambelli) return run_giambelli(req, false);
    if (*qgiambelli) return run_giambelli(req, true);
    if (*multiply) return run_multiply(req);
    if (*verify) return run_verify(req);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kVerifyFailure;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }
  return kUsageError;
}
