#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "irrlab/blocks.hpp"
#include "irrlab/digraph.hpp"
#include "irrlab/errors.hpp"
#include "irrlab/gen.hpp"
#include "irrlab/group.hpp"
#include "irrlab/json_io.hpp"
#include "irrlab/labeling.hpp"
#include "irrlab/oracle.hpp"
#include "irrlab/theorem.hpp"

using namespace irrlab;

namespace {

void emit(const nlohmann::json& doc, const std::string& path) {
  std::string text = doc.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write '" + path + "'");
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::int64_t env_number(const char* name) {
  const char* raw = std::getenv(name);
  if (!raw) return -1;
  try {
    std::size_t used = 0;
    std::int64_t v = std::stoll(raw, &used);
    if (used != std::string(raw).size() || v <= 0) throw std::exception();
    return v;
  } catch (...) {
    throw input_error(std::string(name) + " must be a positive integer, got '" +
                      raw + "'");
  }
}

// Flags beat environment overrides beat built-in defaults.
SearchBudget resolve_budget(std::int64_t ms_flag, std::int64_t nodes_flag) {
  SearchBudget b;
  if (std::int64_t v = env_number("IRR_BUDGET_MS"); v > 0) b.time_ms = v;
  if (std::int64_t v = env_number("IRR_NODE_LIMIT"); v > 0)
    b.node_limit = static_cast<std::uint64_t>(v);
  if (ms_flag > 0) b.time_ms = ms_flag;
  if (nodes_flag > 0) b.node_limit = static_cast<std::uint64_t>(nodes_flag);
  return b;
}

int run(int argc, char** argv) {
  CLI::App app{
      "Zero-sum partitions and group-irregular arc labelings over finite "
      "Abelian groups"};
  app.require_subcommand(1);

  std::string group_spec;
  std::string input_path;
  std::string output_path;
  std::vector<Order> sizes;
  std::vector<std::string> forbidden_raw;
  bool no_oracle = false;
  std::int64_t budget_ms = 0;
  std::int64_t node_limit = 0;
  Order zeng_n = 0, zeng_m = 0, zeng_l = 0;
  Order max_order = 24;
  std::uint64_t seed = 1;
  Order sample = 0;

  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget-ms", budget_ms,
                    "time budget in milliseconds (env IRR_BUDGET_MS)");
    sub->add_option("--node-limit", node_limit,
                    "search node budget (env IRR_NODE_LIMIT)");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", output_path, "output file ('-' = stdout)");
  };

  CLI::App* partition =
      app.add_subcommand("partition", "zero-sum partition for a size demand");
  partition->add_option("-g,--group", group_spec, "group, e.g. Z2xZ9")
      ->required();
  partition->add_option("-r,--sizes", sizes, "part sizes, e.g. 4,4,4,4")
      ->required()
      ->delimiter(',');
  partition->add_flag("--no-oracle", no_oracle,
                      "fail instead of falling back to exhaustive search");
  add_budget(partition);
  add_output(partition);

  CLI::App* zeng = app.add_subcommand(
      "zeng", "decompose Z_n minus {0, n/2} into triples and pairs");
  zeng->add_option("-n", zeng_n, "even modulus >= 4")->required();
  zeng->add_option("-m", zeng_m, "number of zero-sum triples")->required();
  zeng->add_option("-l", zeng_l, "number of inverse pairs")->required();
  add_output(zeng);

  CLI::App* skolem = app.add_subcommand(
      "skolem", "decompose an odd-order group minus {0} into blocks");
  skolem->add_option("-g,--group", group_spec, "odd-order group, e.g. Z9")
      ->required();
  add_output(skolem);

  CLI::App* label =
      app.add_subcommand("label", "group-irregular arc labeling of a digraph");
  label->add_option("-g,--group", group_spec, "group, e.g. Z2xZ9")->required();
  label->add_option("-i,--input", input_path, "digraph file")->required();
  label->add_flag("--no-oracle", no_oracle,
                  "fail instead of falling back to exhaustive search");
  add_budget(label);
  add_output(label);

  CLI::App* verify =
      app.add_subcommand("verify", "re-check an emitted JSON document");
  verify->add_option("-i,--input", input_path, "document to verify")
      ->required();
  add_output(verify);

  CLI::App* oracle = app.add_subcommand(
      "oracle", "exhaustive zero-sum partition search with verdict");
  oracle->add_option("-g,--group", group_spec, "group, e.g. Z2xZ2xZ2")
      ->required();
  oracle->add_option("-r,--sizes", sizes, "part sizes")
      ->required()
      ->delimiter(',');
  oracle->add_option("-f,--forbid", forbidden_raw,
                     "element to exclude (repeatable)");
  add_budget(oracle);
  add_output(oracle);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "cross-validate the constructive route against the search");
  sweep->add_option("--max-order", max_order, "largest group order (desk scale)");
  sweep->add_option("--seed", seed, "seed for sampled demands");
  sweep->add_option("--sample", sample,
                    "demands per group (0 = exhaustive enumeration)");
  add_budget(sweep);
  add_output(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  SearchBudget budget = resolve_budget(budget_ms, node_limit);

  if (partition->parsed()) {
    Group g = Group::parse(group_spec);
    GeneralOptions opts;
    opts.allow_oracle = !no_oracle;
    opts.budget = budget;
    emit(partition_json(general_partition(g, SizeDemand{sizes}, opts)),
         output_path);
    return 0;
  }

  if (zeng->parsed()) {
    auto parts = zeng_partition(zeng_n, zeng_m, zeng_l);
    Group g({zeng_n});
    emit(blocks_json("zeng", g, {{0}, {zeng_n / 2}}, parts), output_path);
    return 0;
  }

  if (skolem->parsed()) {
    Group g = Group::parse(group_spec);
    emit(blocks_json("skolem", g, {g.zero()}, skolem_partition(g)),
         output_path);
    return 0;
  }

  if (label->parsed()) {
    Group g = Group::parse(group_spec);
    Digraph d = parse_digraph(read_file(input_path));
    GeneralOptions opts;
    opts.allow_oracle = !no_oracle;
    opts.budget = budget;
    emit(labeling_json(d, label_digraph(g, d, opts)), output_path);
    return 0;
  }

  if (verify->parsed()) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(read_file(input_path));
    } catch (const nlohmann::json::exception& e) {
      throw input_error(std::string("invalid JSON: ") + e.what());
    }
    Certificate cert = verify_document(doc);
    emit(certificate_json(cert), output_path);
    return cert.pass() ? 0 : 2;
  }

  if (oracle->parsed()) {
    Group g = Group::parse(group_spec);
    std::vector<Elem> forbidden;
    for (const auto& s : forbidden_raw)
      forbidden.push_back(g.parse_element(s));
    OracleOutcome out = oracle_partition(g, sizes, forbidden, budget);
    emit(oracle_json(g, out), output_path);
    switch (out.verdict) {
      case Verdict::Feasible: return 0;
      case Verdict::Infeasible: return 3;
      case Verdict::Unknown: return 4;
    }
  }

  if (sweep->parsed()) {
    if (max_order < 1) throw input_error("--max-order must be positive");
    Rng rng(seed);
    nlohmann::json entries = nlohmann::json::array();
    std::size_t disagreements = 0;
    std::size_t unknowns = 0;
    for (Order n = 2; n <= max_order; ++n) {
      for (const Group& g : iso_classes(n)) {
        Order cap = n - (g.involutions().size() == 1 ? 2 : 1);
        std::vector<std::vector<Order>> demands;
        if (sample > 0) {
          for (Order k = 0; k < sample && cap >= 4; ++k)
            demands.push_back(random_demand(rng, rng.uniform(4, cap), 4));
        } else {
          for (Order total = 4; total <= cap; ++total)
            for (auto& dm : partitions_min(total, 4))
              demands.push_back(std::move(dm));
        }
        for (const auto& dm : demands) {
          CrossReport rep = cross_validate(g, SizeDemand{dm}, budget);
          if (rep.disagreement) ++disagreements;
          if (rep.theorem_verdict == "unknown" ||
              rep.oracle_verdict == "unknown")
            ++unknowns;
          entries.push_back(cross_json(rep));
        }
      }
    }
    nlohmann::json doc;
    doc["kind"] = "sweep";
    doc["max_order"] = max_order;
    doc["seed"] = seed;
    doc["instances"] = entries.size();
    doc["disagreements"] = disagreements;
    doc["unknowns"] = unknowns;
    doc["entries"] = std::move(entries);
    emit(doc, output_path);
    return disagreements == 0 ? 0 : 5;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const unsupported_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const infeasible_error& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 3;
  } catch (const resource_error& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "defect: " << e.what() << "\n";
    return 5;
  }
}
