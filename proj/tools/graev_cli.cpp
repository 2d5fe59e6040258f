// graev: Graev ultra-metrics on free groups over finite ultra-metric spaces.
//
// Subcommands: dist, dhat, verify, gen, bench, ball-check.
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graev/graev_metric.hpp"
#include "graev/harness.hpp"
#include "graev/io.hpp"
#include "graev/subgroup.hpp"
#include "graev/szhat.hpp"

namespace {

using namespace graev;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<Value> parse_pool(const std::string& csv) {
  std::vector<Value> pool;
  for (const std::string& tok : split_csv(csv)) pool.push_back(Value::parse(tok));
  return pool;
}

struct SchemeChoice {
  ExtensionScheme scheme;
  int basepoint;  // -1 for sz
};

// Default scheme: sz when diameter <= 1, otherwise graev with the first point
// as basepoint. Always echoed so defaults are never silent.
SchemeChoice resolve_scheme(const UltraMetricSpace& space,
                            const std::string& scheme_flag,
                            const std::string& basepoint_flag) {
  SchemeChoice choice{ExtensionScheme::sz, -1};
  if (scheme_flag == "sz") {
    choice.scheme = ExtensionScheme::sz;
  } else if (scheme_flag == "graev") {
    choice.scheme = ExtensionScheme::graev;
  } else if (scheme_flag.empty()) {
    choice.scheme = space.diameter() <= Value(1) ? ExtensionScheme::sz
                                                 : ExtensionScheme::graev;
  } else {
    throw argument_error("unknown scheme '" + scheme_flag + "'");
  }
  if (choice.scheme == ExtensionScheme::graev) {
    if (basepoint_flag.empty()) {
      choice.basepoint = 0;
    } else {
      const auto idx = space.index(basepoint_flag);
      if (!idx)
        throw argument_error("unknown basepoint '" + basepoint_flag + "'");
      choice.basepoint = *idx;
    }
  } else if (!basepoint_flag.empty()) {
    throw argument_error("--basepoint only applies to the graev scheme");
  }
  return choice;
}

std::string scheme_echo(const UltraMetricSpace& space, const SchemeChoice& c) {
  std::string out = "scheme: " + to_string(c.scheme);
  if (c.scheme == ExtensionScheme::graev)
    out += " basepoint: " + space.name(c.basepoint);
  return out;
}

int cmd_dist(const std::string& space_file, const std::string& v_text,
             const std::string& w_text, const std::string& scheme_flag,
             const std::string& basepoint_flag, const std::string& method_flag,
             const std::string& format) {
  const UltraMetricSpace space = load_space(space_file);
  const SchemeChoice choice = resolve_scheme(space, scheme_flag, basepoint_flag);
  const AlphabetMetric am =
      choice.scheme == ExtensionScheme::sz
          ? extend_alphabet(space, ExtensionScheme::sz)
          : extend_alphabet(space, ExtensionScheme::graev, choice.basepoint);
  const Word v = parse_word(v_text, space.points());
  const Word w = parse_word(w_text, space.points());
  const DistanceMethod method = method_flag == "oracle" ? DistanceMethod::oracle
                                                        : DistanceMethod::dp;
  const GraevResult r = graev_distance(v, w, am, method);
  const Word reduced = multiply(inverse(v), w);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["scheme"] = to_string(choice.scheme);
    j["basepoint"] = choice.scheme == ExtensionScheme::graev
                         ? nlohmann::ordered_json(space.name(choice.basepoint))
                         : nlohmann::ordered_json(nullptr);
    j["value"] = r.value.str();
    j["witness"] = reduced.is_identity() ? "" : format_match(r.witness);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << scheme_echo(space, choice) << "\n";
    std::cout << r.value.str();
    if (!reduced.is_identity())
      std::cout << "  witness=" << format_match(r.witness);
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_dhat(const std::string& space_file, const std::string& v_text,
             const std::string& w_text, const std::string& format) {
  const UltraMetricSpace space = load_space(space_file);
  const Word v = parse_word(v_text, space.points());
  const Word w = parse_word(w_text, space.points());
  const Value result = dhat(v, w, space);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["value"] = result.str();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << result.str() << "\n";
  }
  return kExitOk;
}

int cmd_verify(std::uint64_t seed, std::uint64_t instances, int points,
               int max_word_len, const std::string& properties_csv,
               const std::string& pool_csv, const std::string& scheme_flag,
               const std::string& format) {
  InstanceConfig config;
  config.seed = seed;
  config.instances = instances;
  config.n_points = points;
  config.max_word_len = max_word_len;
  if (!pool_csv.empty()) config.value_pool = parse_pool(pool_csv);
  if (scheme_flag == "graev") config.scheme = ExtensionScheme::graev;

  std::vector<std::string> properties;
  if (properties_csv.empty() || properties_csv == "all")
    properties = campaign_property_ids();
  else
    properties = split_csv(properties_csv);

  const CampaignReport report = run_campaign(config, properties);
  if (format == "json")
    std::cout << report_to_json(report).dump(2) << "\n";
  else
    std::cout << report.to_text();
  return report.all_pass() ? kExitOk : kExitVerifyFailed;
}

int cmd_gen(int n, std::uint64_t seed) {
  InstanceConfig config;
  config.seed = seed;
  config.n_points = n;
  SplitMix64 rng(seed);
  std::cout << format_space(random_space(config, rng));
  return kExitOk;
}

int cmd_bench(const std::string& lengths_csv, const std::string& space_file,
              std::uint64_t seed, bool include_reference,
              const std::string& format) {
  std::vector<int> lengths;
  for (const std::string& tok : split_csv(lengths_csv))
    lengths.push_back(std::stoi(tok));
  if (lengths.empty()) throw argument_error("bench: no lengths given");

  InstanceConfig config;
  config.seed = seed;
  config.n_points = 6;
  SplitMix64 rng(seed);
  const UltraMetricSpace space =
      space_file.empty() ? random_space(config, rng) : load_space(space_file);

  const auto rows = bench_dp(lengths, space, seed, include_reference);
  if (format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json row;
      row["length"] = r.length;
      row["ms_dp"] = r.ms_dp;
      if (r.ms_reference >= 0) row["ms_reference"] = r.ms_reference;
      row["growth"] = r.growth;
      j.push_back(std::move(row));
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "length      ms_dp";
    if (include_reference) std::cout << "     ms_ref   speedup";
    std::cout << "   growth\n";
    char buf[160];
    for (const auto& r : rows) {
      if (include_reference) {
        std::snprintf(buf, sizeof buf, "%6d %10.2f %10.2f %9.2f %8.2f\n",
                      r.length, r.ms_dp, r.ms_reference,
                      r.ms_dp > 0 ? r.ms_reference / r.ms_dp : 0.0, r.growth);
      } else {
        std::snprintf(buf, sizeof buf, "%6d %10.2f %8.2f\n", r.length, r.ms_dp,
                      r.growth);
      }
      std::cout << buf;
    }
  }
  return kExitOk;
}

int cmd_ball_check(const std::string& space_file, const std::string& eps_flag,
                   const std::string& basepoint_flag, std::size_t samples,
                   std::uint64_t seed, const std::string& format) {
  const UltraMetricSpace space = load_space(space_file);
  int basepoint = 0;
  if (!basepoint_flag.empty()) {
    const auto idx = space.index(basepoint_flag);
    if (!idx) throw argument_error("unknown basepoint '" + basepoint_flag + "'");
    basepoint = *idx;
  }
  std::vector<Value> epsilons;
  if (eps_flag.empty())
    epsilons = sweep_epsilons(space);
  else
    epsilons.push_back(Value::parse(eps_flag));

  bool all_ok = true;
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  SplitMix64 rng(seed);
  for (const Value& eps : epsilons) {
    const auto sample =
        sample_words_for_ball_check(space, eps, samples, rng.next());
    const BallCheckReport report =
        ball_subgroup_equivalence(space, eps, sample, basepoint);
    all_ok = all_ok && report.ok();
    if (format == "json") {
      out.push_back(ball_report_to_json(report, space));
    } else {
      std::cout << "epsilon=" << eps.str() << " basepoint="
                << space.name(basepoint) << " words=" << report.words_checked
                << " counterexamples=" << report.counterexamples.size()
                << (report.ok() ? " ok" : " FAIL") << "\n";
      for (const auto& c : report.counterexamples)
        std::cout << "  word " << print_word(c.word, space.points())
                  << ": delta_u=" << c.delta.str()
                  << " in_closure=" << (c.in_closure ? "true" : "false")
                  << "\n";
    }
  }
  if (format == "json") std::cout << out.dump(2) << "\n";
  return all_ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Graev ultra-metric delta_u and the Savchenko-Zarichnyi ultra-metric "
      "d-hat on free groups over finite ultra-metric spaces"};
  app.require_subcommand(1);

  std::string space_file, v_text, w_text;
  std::string scheme_flag, basepoint_flag, format = "text";
  std::string method_flag = "dp";

  auto* dist = app.add_subcommand(
      "dist", "Graev distance delta_u(v, w) with a witness match");
  dist->add_option("space", space_file, "space JSON file")->required();
  dist->add_option("v", v_text, "first word")->required();
  dist->add_option("w", w_text, "second word")->required();
  dist->add_option("--scheme", scheme_flag, "sz | graev (default: by diameter)");
  dist->add_option("--basepoint", basepoint_flag, "graev basepoint point name");
  dist->add_option("--method", method_flag, "dp | oracle")
      ->check(CLI::IsMember({"dp", "oracle"}));
  dist->add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* dhat_cmd =
      app.add_subcommand("dhat", "Savchenko-Zarichnyi distance d-hat(v, w)");
  dhat_cmd->add_option("space", space_file, "space JSON file")->required();
  dhat_cmd->add_option("v", v_text, "first word")->required();
  dhat_cmd->add_option("w", w_text, "second word")->required();
  dhat_cmd->add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  std::uint64_t seed = 7, instances = 1000;
  int points = 5, max_word_len = 10;
  std::string properties_csv = "all", pool_csv;

  auto* verify = app.add_subcommand(
      "verify", "run seeded verification campaigns over random instances");
  verify->add_option("--seed", seed, "campaign seed");
  verify->add_option("--instances", instances, "instances per property");
  verify->add_option("--points", points, "max points per space");
  verify->add_option("--max-word-len", max_word_len, "max word length");
  verify->add_option("--properties", properties_csv,
                     "comma-separated property ids, or 'all'");
  verify->add_option(
      "--pool", pool_csv,
      "comma-separated distance pool (default 1/8,1/4,1/2,3/4,1)");
  verify->add_option("--scheme", scheme_flag, "sz | graev")
      ->check(CLI::IsMember({"sz", "graev"}));
  verify->add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  int gen_n = 4;
  std::uint64_t gen_seed = 1;
  auto* gen = app.add_subcommand("gen", "emit a random space as JSON");
  gen->add_option("--n", gen_n, "number of points");
  gen->add_option("--seed", gen_seed, "generator seed");

  std::string lengths_csv = "250,500,1000";
  std::string bench_space;
  bool bench_reference = false;
  std::uint64_t bench_seed = 1;
  auto* bench =
      app.add_subcommand("bench", "time the dp kernel at several word lengths");
  bench->add_option("--lengths", lengths_csv, "comma-separated word lengths");
  bench->add_option("--space", bench_space,
                    "space JSON file (default: random 6 points)");
  bench->add_option("--seed", bench_seed, "word generator seed");
  bench->add_flag("--reference", bench_reference,
                  "also time the serial reference kernel");
  bench->add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string eps_flag;
  std::size_t samples = 200;
  std::uint64_t ball_seed = 1;
  auto* ball = app.add_subcommand(
      "ball-check",
      "check that the open ball B(e, eps) equals the normal closure of the "
      "eps-relation generators");
  ball->add_option("space", space_file, "space JSON file")->required();
  ball->add_option("--epsilon", eps_flag,
                   "single epsilon (default: sweep values and midpoints < 1)");
  ball->add_option("--basepoint", basepoint_flag,
                   "graev basepoint point name (default: first point)");
  ball->add_option("--samples", samples, "words per epsilon");
  ball->add_option("--seed", ball_seed, "sample seed");
  ball->add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (dist->parsed())
      return cmd_dist(space_file, v_text, w_text, scheme_flag, basepoint_flag,
                      method_flag, format);
    if (dhat_cmd->parsed()) return cmd_dhat(space_file, v_text, w_text, format);
    if (verify->parsed())
      return cmd_verify(seed, instances, points, max_word_len, properties_csv,
                        pool_csv, scheme_flag, format);
    if (gen->parsed()) return cmd_gen(gen_n, gen_seed);
    if (bench->parsed())
      return cmd_bench(lengths_csv, bench_space, bench_seed, bench_reference,
                       format);
    if (ball->parsed())
      return cmd_ball_check(space_file, eps_flag, basepoint_flag, samples,
                            ball_seed, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
