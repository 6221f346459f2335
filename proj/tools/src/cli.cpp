#include "cotwist/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

#include "commands.hpp"
#include "cotwist/error.hpp"

namespace cotwist::cli {

namespace {

using Command = Outcome (*)(const JobConfig&);

struct Entry {
  const char* group;
  const char* name;
  const char* help;
  Command command;
};

const Entry kCommands[] = {
    {"cocycle", "check", "exhaustive cocycle equation check on a truncated domain", cocycle_check},
    {"cocycle", "antisym", "antisymmetrization and canonical representative", cocycle_antisym},
    {"cocycle", "factorize", "Yamazaki factorization along a split", cocycle_factorize},
    {"cocycle", "reconstruct", "cocycle from (left, right, pairing)", cocycle_reconstruct},
    {"cocycle", "pullback", "pullback along a monoid morphism", cocycle_pullback},
    {"cocycle", "trivialize", "explicit h with coboundary(h) = mu", cocycle_trivialize},
    {"algebra", "mul", "product of two elements", algebra_mul},
    {"algebra", "relations", "generator commutation relations", algebra_relations},
    {"algebra", "twist", "twist by a cocycle, optionally compare cohomologous twists", algebra_twist},
    {"algebra", "tensor", "twisted tensor product of two algebras", algebra_tensor},
    {"segre", "build", "construct the quantum Segre map", segre_build},
    {"segre", "verify", "sampled homomorphism check of the Segre map", segre_verify},
    {"segre", "matrix", "deformation matrix of the Segre source", segre_matrix},
    {"segre", "kronecker", "Kronecker product of two deformation matrices", segre_kronecker},
    {"segre", "kernel", "degree-bounded kernel at a rational specialization", segre_kernel},
};

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

bool is_scalar(const Json& v) { return !v.is_array() && !v.is_object(); }

bool is_matrix(const Json& v) {
  if (!v.is_array() || v.empty()) return false;
  return std::all_of(v.begin(), v.end(), [](const Json& row) {
    return row.is_array() && std::all_of(row.begin(), row.end(), is_scalar);
  });
}

void print_field(std::ostream& out, const std::string& key, const Json& value, std::size_t indent) {
  const std::string pad(indent, ' ');
  if (is_scalar(value)) {
    out << pad << key << ": " << scalar_text(value) << '\n';
    return;
  }
  if (value.empty()) {
    out << pad << key << ": " << value.dump() << '\n';
    return;
  }
  out << pad << key << ":\n";
  if (is_matrix(value)) {
    std::vector<std::size_t> widths;
    for (const auto& row : value) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (widths.size() <= j) widths.push_back(0);
        widths[j] = std::max(widths[j], scalar_text(row[j]).size());
      }
    }
    for (const auto& row : value) {
      std::string line = pad + "  ";
      for (std::size_t j = 0; j < row.size(); ++j) {
        const auto cell = scalar_text(row[j]);
        line += cell;
        if (j + 1 < row.size()) line += std::string(widths[j] - cell.size() + 2, ' ');
      }
      out << line << '\n';
    }
  } else if (value.is_object()) {
    for (const auto& [k, v] : value.items()) print_field(out, k, v, indent + 2);
  } else if (std::all_of(value.begin(), value.end(), is_scalar)) {
    for (const auto& v : value) out << pad << "  " << scalar_text(v) << '\n';
  } else {
    for (std::size_t k = 0; k < value.size(); ++k) print_field(out, "[" + std::to_string(k) + "]", value[k], indent + 2);
  }
}

void print_human(std::ostream& out, const Json& report) {
  out << report.at("command").get<std::string>() << ": " << report.at("status").get<std::string>() << '\n';
  for (const auto& [k, v] : report.at("payload").items()) print_field(out, k, v, 2);
  if (report.contains("counterexample")) print_field(out, "counterexample", report.at("counterexample"), 2);
}

int input_error(std::ostream& out, std::ostream& err, bool json, const std::string& command, const std::string& what) {
  err << "error: " << what << '\n';
  if (json) out << Json{{"command", command}, {"status", "error"}, {"error", what}}.dump(2) << '\n';
  return kExitInputError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cocycle twists of N^n-graded algebras", "cotwist"};
  Options options;
  std::uint64_t seed = 1;
  std::size_t samples = 0;
  std::int64_t degree = 0;
  app.add_option("--config", options.config_path, "JSON job config");
  app.add_flag("--json", options.json, "machine-readable JSON report");
  auto* seed_opt = app.add_option("--seed", seed, "seed for sampled checks");
  auto* samples_opt = app.add_option("--samples", samples, "number of sampled pairs");
  auto* degree_opt = app.add_option("--degree", degree, "degree bound or kernel degree");
  app.add_option("--set", options.sets, "parameter specialization name=rational (repeatable)")
      ->allow_extra_args(false);
  app.require_subcommand(1);

  std::vector<std::pair<CLI::App*, const Entry*>> leaves;
  for (const char* group : {"cocycle", "algebra", "segre"}) {
    auto* g = app.add_subcommand(group, std::string(group) + " commands");
    g->require_subcommand(1);
    g->fallthrough();
    for (const auto& e : kCommands) {
      if (std::string_view(e.group) != group) continue;
      auto* leaf = g->add_subcommand(e.name, e.help);
      leaf->fallthrough();
      leaves.emplace_back(leaf, &e);
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    return input_error(out, err, options.json, "", e.what());
  }
  if (seed_opt->count() > 0) options.seed = seed;
  if (samples_opt->count() > 0) options.samples = samples;
  if (degree_opt->count() > 0) options.degree = degree;

  const Entry* chosen = nullptr;
  for (const auto& [leaf, entry] : leaves) {
    if (leaf->parsed()) chosen = entry;
  }
  const std::string command = std::string(chosen->group) + " " + chosen->name;

  try {
    const auto cfg = JobConfig::load(options);
    auto outcome = chosen->command(cfg);
    Json report = {{"command", command}, {"status", outcome.status}, {"payload", std::move(outcome.payload)}};
    if (outcome.counterexample) report["counterexample"] = std::move(*outcome.counterexample);
    if (options.json) {
      out << report.dump(2) << '\n';
    } else {
      print_human(out, report);
    }
    return outcome.status == "fail" ? kExitFailure : kExitPass;
  } catch (const std::invalid_argument& e) {
    return input_error(out, err, options.json, command, e.what());
  } catch (const Json::exception& e) {
    return input_error(out, err, options.json, command, e.what());
  }
}

}  // namespace cotwist::cli
