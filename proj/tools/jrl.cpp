// jrl: group-ring Jordan nilpotency toolkit.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <thread>

#include "jrl/builtins.hpp"
#include "jrl/classifier.hpp"
#include "jrl/crosscheck.hpp"
#include "jrl/identities.hpp"
#include "jrl/nilpotency.hpp"
#include "jrl/text_format.hpp"

namespace {

unsigned default_jobs() {
  if (const char* env = std::getenv("JRL_JOBS")) {
    try {
      const long value = std::stol(env);
      if (value > 0) return static_cast<unsigned>(value);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid JRL_JOBS='" << env << "'\n";
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int run_validate(const std::string& file) {
  const auto parsed = jrl::parse_structure_file(file);
  if (const auto* ring = std::get_if<jrl::FiniteRing>(&parsed)) {
    std::cout << "ok: ring " << ring->name() << " of order " << ring->order() << ", characteristic "
              << jrl::characteristic(*ring) << (jrl::is_commutative(*ring) ? ", commutative" : ", non-commutative")
              << '\n';
  } else {
    const auto& group = std::get<jrl::FiniteGroup>(parsed);
    std::cout << "ok: group " << group.name() << " of order " << group.order()
              << (jrl::is_abelian(group) ? ", abelian" : ", non-abelian") << '\n';
  }
  return 0;
}

int run_list_builtins() {
  std::cout << "rings:";
  for (const auto& r : jrl::builtin_ring_names()) std::cout << " builtin:" << r;
  std::cout << "\ngroups:";
  for (const auto& g : jrl::builtin_group_names()) std::cout << " builtin:" << g;
  std::cout << "\nalso: builtin:Z<n>, builtin:C<n>, and products such as builtin:C2xD4\n";
  return 0;
}

int run_classify(const std::string& ring_name, const std::string& group_name) {
  const auto result = jrl::classify(jrl::resolve_ring(ring_name), jrl::resolve_group(group_name));
  std::cout << "predicted: " << jrl::verdict_text(result) << " (" << jrl::to_string(result.clause) << ")\n";
  std::cout << jrl::explain(result);
  return 0;
}

int run_oracle(const std::string& ring_name, const std::string& group_name, int max_index, unsigned jobs) {
  const auto ctx = jrl::GroupRing::make(jrl::resolve_ring(ring_name), jrl::resolve_group(group_name));
  const jrl::SpanningSet span(ctx);
  std::cout << "spanning set: " << span.size() << " monomials\n";
  for (int n = 2; n <= max_index; ++n) {
    const auto result = jrl::vanishes_left_normed(span, n, {jobs});
    if (result.vanishes()) {
      std::cout << "degree " << n << ": all left-normed products vanish\n";
      std::cout << "minimal index: " << n << '\n';
      return 0;
    }
    const auto& ce = *result.counterexample;
    std::cout << "degree " << n << ": nonzero at (";
    for (std::size_t i = 0; i < ce.tuple.size(); ++i) {
      const auto& m = span.monomials()[ce.tuple[i]];
      std::cout << (i ? ", " : "") << m.coeff << '@' << m.group;
    }
    std::cout << ") = " << jrl::to_string(ce.product) << '\n';
  }
  std::cout << "minimal index: NotWithinBound (" << max_index << ")\n";
  return 0;
}

int run_crosscheck(const std::string& catalog, int max_index, const std::string& report, unsigned jobs,
                   double budget, bool no_timing) {
  const auto entries = catalog.empty() ? jrl::default_catalog() : jrl::catalog_from_directory(catalog);
  const auto records = jrl::crosscheck(entries, {max_index, jobs, budget});
  if (report.empty()) {
    jrl::write_report(std::cout, records, !no_timing);
  } else {
    jrl::emit_report(records, report, !no_timing);
  }
  std::size_t counts[4] = {};
  for (const auto& r : records) {
    ++counts[static_cast<int>(r.status)];
    if (r.status == jrl::Status::Disagree) {
      std::cerr << "DISAGREE: " << r.entry.ring_name << " / " << r.entry.group_name << '\n';
    } else if (!r.note.empty()) {
      std::cerr << jrl::to_string(r.status) << ": " << r.entry.ring_name << " / " << r.entry.group_name << ": "
                << r.note << '\n';
    }
  }
  std::cerr << records.size() << " entries: " << counts[0] << " agree, " << counts[1] << " disagree, " << counts[2]
            << " skipped, " << counts[3] << " errors\n";
  return jrl::any_disagree(records) ? 1 : 0;
}

int run_identities(const std::string& ring_name, const std::string& group_name, std::size_t samples) {
  const auto ctx = jrl::GroupRing::make(jrl::resolve_ring(ring_name), jrl::resolve_group(group_name));
  bool ok = true;
  for (const auto& check : jrl::run_identity_suite(ctx, {samples})) {
    std::cout << (check.failures == 0 ? "ok   " : "FAIL ") << check.name << "  [" << check.checked << " tuples"
              << (check.exhaustive ? ", exhaustive" : ", sampled") << ", " << check.failures << " failures]\n";
    ok = ok && check.failures == 0;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jordan nilpotency of finite group rings: classifier, oracle and cross-check"};
  app.require_subcommand(1);

  std::string file, ring, group, catalog, report;
  int max_index = jrl::default_max_index;
  unsigned jobs = default_jobs();
  std::size_t samples = 10000;
  bool no_timing = false;
  double budget = jrl::CrossCheckOptions{}.tuple_budget;

  auto* validate = app.add_subcommand("validate", "Parse and validate a ring or group file");
  validate->add_option("file", file, "Ring or group file")->required();

  auto* list = app.add_subcommand("list-builtins", "List built-in rings and groups");

  auto* classify = app.add_subcommand("classify", "Predict the minimal Jordan index from structure");
  classify->add_option("--ring", ring, "builtin:<name> or ring file")->required();
  classify->add_option("--group", group, "builtin:<name> or group file")->required();

  auto* oracle = app.add_subcommand("oracle", "Search for the minimal Jordan index by exhaustive tuples");
  oracle->add_option("--ring", ring, "builtin:<name> or ring file")->required();
  oracle->add_option("--group", group, "builtin:<name> or group file")->required();
  oracle->add_option("--max-index", max_index, "Largest index to test")->check(CLI::Range(2, 64));
  oracle->add_option("--jobs", jobs, "Worker threads (default: JRL_JOBS or core count)")->check(CLI::PositiveNumber);

  auto* cross = app.add_subcommand("crosscheck", "Compare classifier and oracle over a catalog");
  cross->add_option("--catalog", catalog, "Directory of *.ring and *.group files (default: built-ins)");
  cross->add_option("--max-index", max_index, "Largest index the oracle tests")->check(CLI::Range(4, 64));
  cross->add_option("--report", report, "Write the TSV report here instead of stdout");
  cross->add_option("--jobs", jobs, "Worker threads (default: JRL_JOBS or core count)")->check(CLI::PositiveNumber);
  cross->add_option("--tuple-budget", budget, "Skip entries with more degree-4 spanning tuples than this")
      ->check(CLI::PositiveNumber);
  cross->add_flag("--no-timing", no_timing, "Print '-' in the ms column for reproducible output");

  auto* identities = app.add_subcommand("identities", "Check the circle/Lie/commutator identity suite");
  identities->add_option("--ring", ring, "builtin:<name> or ring file")->required();
  identities->add_option("--group", group, "builtin:<name> or group file")->required();
  identities->add_option("--samples", samples, "Random tuples per identity");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return run_validate(file);
    if (*list) return run_list_builtins();
    if (*classify) return run_classify(ring, group);
    if (*oracle) return run_oracle(ring, group, max_index, jobs);
    if (*cross) return run_crosscheck(catalog, max_index, report, jobs, budget, no_timing);
    if (*identities) return run_identities(ring, group, samples);
  } catch (const jrl::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
