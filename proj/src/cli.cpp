#include "cubeprof/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubeprof/constructor.hpp"
#include "cubeprof/explorer.hpp"
#include "cubeprof/io.hpp"
#include "cubeprof/oracle.hpp"

namespace cubeprof::cli {

namespace {

using ojson = nlohmann::ordered_json;

// CUBE_PROFILES_LOG: unset/0 quiet, 1 summaries, 2 adds search statistics.
int log_level() {
  const char* env = std::getenv("CUBE_PROFILES_LOG");
  if (env == nullptr) return 0;
  const std::string v(env);
  if (v == "2" || v == "debug") return 2;
  if (v.empty() || v == "0" || v == "off") return 0;
  return 1;
}

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ProfileArgs {
  int n = 0;
  std::string profile;
};

struct BudgetArgs {
  std::optional<std::uint64_t> node_limit;
  std::optional<double> time_limit_s;
  std::optional<int> max_dim;

  SearchBudget budget() const {
    SearchBudget b;
    b.node_limit = node_limit;
    if (time_limit_s) {
      b.time_limit = std::chrono::milliseconds(static_cast<std::int64_t>(*time_limit_s * 1000));
    }
    b.max_dimension = max_dim;
    return b;
  }
};

void add_profile_options(CLI::App* app, ProfileArgs& args) {
  app->add_option("--n", args.n, "Dimension of the hypercube")->required();
  app->add_option("--profile", args.profile, "Comma-separated counts c1,...,cN")->required();
}

void add_budget_options(CLI::App* app, BudgetArgs& args) {
  app->add_option("--node-limit,--budget", args.node_limit, "Stop after this many search nodes");
  app->add_option("--time-limit", args.time_limit_s, "Stop after this many seconds");
  app->add_option("--max-dim", args.max_dim, "Override the search's dimension cap");
}

// Parses and length-checks the profile; Dimension validates n.
std::pair<Dimension, Profile> read_profile(const ProfileArgs& args) {
  Dimension n(args.n);
  Profile x = parse_profile(args.profile);
  if (x.size() != static_cast<std::size_t>(args.n)) {
    throw Error(Errc::validation, "--profile has " + std::to_string(x.size()) +
                                      " entries but --n is " + std::to_string(args.n));
  }
  return {n, std::move(x)};
}

std::string render(const Matching& m, const std::string& format) {
  if (format == "edges") return to_edge_list(m);
  if (format == "dot") return to_dot(m);
  return to_json(m) + "\n";
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text) || !file.flush()) throw IoFailure("cannot write " + path);
}

std::string slurp(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoFailure("cannot read " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  if (file.bad()) throw IoFailure("error reading " + path);
  return buf.str();
}

int exit_for(const Decision& d) {
  switch (d.kind()) {
    case VerdictKind::admissible: return kOk;
    case VerdictKind::not_admissible: return kNotAdmissible;
    case VerdictKind::unknown: return kUnknown;
  }
  return kUnknown;
}

ojson weightings_json(const std::vector<WeightingCount>& items) {
  ojson arr = ojson::array();
  for (const auto& [w, count] : items) {
    ojson entry;
    entry["m"] = w.m();
    ojson weights = ojson::object();
    for (int i = 0; i < w.m(); ++i) {
      for (int j = i + 1; j < w.m(); ++j) {
        weights[std::to_string(i + 1) + "," + std::to_string(j + 1)] = w.at(i, j);
      }
    }
    entry["w"] = std::move(weights);
    entry["count"] = count;
    arr.push_back(std::move(entry));
  }
  return arr;
}

ojson profiles_json(const std::vector<Profile>& items) {
  ojson arr = ojson::array();
  for (const Profile& p : items) arr.push_back(p.counts());
  return arr;
}

Decision decide_for_cli(Dimension n, const Profile& x, std::optional<int> oracle_max_dim,
                        const BudgetArgs& budget) {
  if (n.value() > kMaxWitnessDimension) {
    throw Error(Errc::validation, "witnesses are limited to n <= " +
                                      std::to_string(kMaxWitnessDimension));
  }
  DecideOptions options;
  options.oracle_max_dimension = oracle_max_dim;
  options.oracle_budget = budget.budget();
  return decide(x, n, options);
}

int run_selftest(std::ostream& out, std::ostream& err) {
  int failures = 0;
  for (const std::string& f : base_case_self_test()) {
    err << "selftest: " << f << "\n";
    ++failures;
  }
  out << "base cases: " << (failures == 0 ? "ok" : "FAILED") << "\n";

  int disagreements = 0;
  std::size_t checked = 0;
  for (int dim = 1; dim <= 3; ++dim) {
    const Dimension n(dim);
    DecideOptions options;
    options.oracle_max_dimension = 3;
    for (const Profile& rep : sorted_profiles(dim, n.half(), n.half())) {
      for (const Profile& x : distinct_permutations(rep)) {
        const Decision d = decide(x, n, options);
        const SearchResult r = exists_with_profile(n, x);
        const bool agree = (d.kind() == VerdictKind::admissible) == (r.status == SearchStatus::found) &&
                           d.kind() != VerdictKind::unknown;
        if (!agree) {
          err << "selftest: decide and oracle disagree on " << x.to_string() << " in Q^" << dim
              << "\n";
          ++disagreements;
        }
        ++checked;
      }
    }
  }
  out << "oracle cross-check n<=3: " << checked << " profiles, " << disagreements
      << " disagreements\n";
  return failures == 0 && disagreements == 0 ? kOk : kRejected;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matchings of the hypercube with prescribed direction profiles"};
  app.name(args.empty() ? "cube_profiles" : args.front());
  app.require_subcommand(1);

  ProfileArgs pa;
  BudgetArgs ba;
  std::string format = "json";
  std::string out_path;
  std::string input_path;
  bool perfect = false;
  bool with_witness = false;
  std::optional<int> oracle_max_dim;
  std::optional<std::uint64_t> bound;
  int jobs = 1;
  int explore_n = 0;

  auto* construct = app.add_subcommand("construct", "Build a witness matching for a profile");
  add_profile_options(construct, pa);
  construct->add_option("--format", format)->check(CLI::IsMember({"json", "edges", "dot"}));
  construct->add_option("--out", out_path, "Write the witness here instead of stdout");
  construct->add_option("--oracle-max-dim", oracle_max_dim, "Oracle fallback up to this n");

  auto* verify_cmd = app.add_subcommand("verify", "Check a matching file against a profile");
  add_profile_options(verify_cmd, pa);
  verify_cmd->add_option("--input", input_path, "JSON or edge-list matching")->required();
  verify_cmd->add_flag("--perfect", perfect, "Also require every vertex to be covered");

  auto* decide_cmd = app.add_subcommand("decide", "Three-valued admissibility verdict");
  add_profile_options(decide_cmd, pa);
  decide_cmd->add_option("--oracle-max-dim", oracle_max_dim, "Oracle fallback up to this n");
  decide_cmd->add_option("--node-limit", ba.node_limit, "Oracle node limit");
  decide_cmd->add_flag("--witness", with_witness, "Print the witness after the verdict");
  decide_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "edges", "dot"}));

  auto* count_cmd = app.add_subcommand("count", "Exact number of matchings with a profile");
  add_profile_options(count_cmd, pa);
  add_budget_options(count_cmd, ba);

  auto* explore = app.add_subcommand("explore", "Exhaustive small-dimension experiments");
  explore->require_subcommand(1);
  const std::vector<std::pair<const char*, const char*>> families = {
      {"hamilton", "Profiles of Hamilton cycles of Q^n"},
      {"faces", "Pair weightings of 4-cycle decompositions of Q^n"},
      {"middle", "Profiles of perfect matchings of the middle layer graph M_n"},
      {"perm", "Pair weightings of perfect matchings of Perm(n)"},
      {"tuples", "Admissible profiles of Q^n up to a sum bound"},
  };
  for (const auto& [name, help] : families) {
    auto* sub = explore->add_subcommand(name, help);
    sub->add_option("--n", explore_n, "Size parameter")->required();
    add_budget_options(sub, ba);
    sub->add_option("--format", format)->check(CLI::IsMember({"json"}));
    if (std::string(name) == "tuples") {
      sub->add_option("--bound", bound, "Largest profile sum (default 2^(n-1))");
      sub->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 64));
    }
  }

  auto* selftest = app.add_subcommand("selftest", "Re-verify base cases and small-n cross-checks");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  const int log = log_level();
  try {
    if (*construct || *decide_cmd) {
      const auto [n, x] = read_profile(pa);
      const Decision d = decide_for_cli(n, x, oracle_max_dim, ba);
      if (log >= 1) {
        err << "decide " << x.to_string() << " in Q^" << n.value() << ": " << d.summary();
        if (const auto* a = std::get_if<Admissible>(&d.verdict)) err << " via " << a->route;
        if (const auto* u = std::get_if<Unknown>(&d.verdict)) err << " (" << u->note << ")";
        err << "\n";
      }
      if (*construct) {
        if (const Matching* w = d.witness()) {
          emit(render(*w, format), out_path, out);
        } else {
          out << d.summary() << "\n";
        }
      } else {
        out << d.summary() << "\n";
        if (with_witness && d.witness() != nullptr) out << render(*d.witness(), format);
      }
      return exit_for(d);
    }

    if (*verify_cmd) {
      const auto [n, x] = read_profile(pa);
      const CandidateMatching m = parse_matching(slurp(input_path));
      if (m.n != n.value()) {
        err << "reject: bad-dimension: matching is in Q^" << m.n << ", expected Q^" << n.value()
            << "\n";
        return kRejected;
      }
      const VerifyResult r = verify(m, x, perfect);
      if (!r) {
        err << "reject: " << to_string(r.violation) << ": " << r.message << "\n";
        return kRejected;
      }
      out << "accept\n";
      return kOk;
    }

    if (*count_cmd) {
      const auto [n, x] = read_profile(pa);
      const SearchResult r = count_with_profile(n, x, ba.budget());
      if (log >= 2) err << "count: " << r.nodes_explored << " nodes\n";
      if (!r.count) {
        out << to_string(SearchStatus::budget_exceeded) << "\n";
        return kUnknown;
      }
      out << *r.count << "\n";
      return kOk;
    }

    if (*explore) {
      const SearchBudget budget = ba.budget();
      bool complete = true;
      std::uint64_t nodes = 0;
      ojson result;
      std::ostringstream summary;
      if (*explore->get_subcommand("hamilton")) {
        const HamiltonReport r = hamilton_profiles(Dimension(explore_n), budget);
        complete = r.complete;
        nodes = r.nodes_explored;
        result = profiles_json(r.profiles);
        summary << "hamilton n=" << explore_n << ": " << r.cycles << " cycles, "
                << r.profiles.size() << " profiles, conjectured " << r.conjectured.size()
                << ", missing " << r.missing.size() << ", unexpected " << r.unexpected.size();
        for (const Profile& p : r.missing) summary << "\n  missing " << p.to_string();
        for (const Profile& p : r.unexpected) summary << "\n  unexpected " << p.to_string();
      } else if (*explore->get_subcommand("faces")) {
        const FaceReport r = face_decomposition_profiles(Dimension(explore_n), budget);
        complete = r.complete;
        nodes = r.nodes_explored;
        result = weightings_json(r.weightings);
        summary << "faces n=" << explore_n << ": " << r.decompositions << " decompositions, "
                << r.weightings.size() << " weightings";
      } else if (*explore->get_subcommand("middle")) {
        const MiddleLayerReport r = middle_layer_profiles(explore_n, budget);
        complete = r.complete;
        nodes = r.nodes_explored;
        result = profiles_json(r.profiles);
        summary << "middle n=" << explore_n << ": " << r.matchings << " perfect matchings, "
                << r.profiles.size() << " profiles, " << r.feasible.size()
                << " pass the necessary conditions, " << r.unrealised.size() << " unrealised";
      } else if (*explore->get_subcommand("perm")) {
        const PermReport r = permutahedron_profiles(explore_n, budget);
        complete = r.complete;
        nodes = r.nodes_explored;
        result = weightings_json(r.weightings);
        summary << "perm n=" << explore_n << ": " << r.matchings << " perfect matchings, "
                << r.weightings.size() << " weightings";
        if (explore_n == 3) {
          summary << "; equals even polytope points: " << (r.equals_closed_points ? "yes" : "no")
                  << ", equals even interior points: " << (r.equals_interior_points ? "yes" : "no");
        }
      } else {
        const Dimension n(explore_n);
        const AdmissibleSet r = enumerate_admissible(n, bound.value_or(n.half()), budget, jobs);
        complete = r.complete;
        nodes = r.nodes_explored;
        result = profiles_json(r.profiles);
        summary << "tuples n=" << explore_n << ": " << r.profiles.size()
                << " admissible profiles, " << r.undecided.size() << " undecided";
      }
      out << result.dump() << "\n";
      if (log >= 1) err << summary.str() << "\n";
      if (log >= 2) err << "explore: " << nodes << " nodes\n";
      if (!complete) {
        err << "explore: search budget exceeded; result is partial\n";
        return kUnknown;
      }
      return kOk;
    }

    if (*selftest) return run_selftest(out, err);
  } catch (const IoFailure& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::internal ? kInternal : kUsage;
  }
  return kUsage;
}

}  // namespace cubeprof::cli
