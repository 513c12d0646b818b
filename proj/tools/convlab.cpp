#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "convlab/search.hpp"

namespace {

using namespace convlab;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInput = 3;

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot write '" + path + "'");
  return file;
}

// A realization or Markov input certifies via the Toeplitz criteria; a code
// input falls back to the brute-force distance oracles.
int run_certify(const std::string& path, const std::string& property) {
  AnyObject obj = read_file(path);

  if (std::holds_alternative<ConvCode>(obj)) {
    const ConvCode& c = std::get<ConvCode>(obj);
    if (property == "distances") {
      auto profile = column_distance_profile(c, c.params.M);
      for (int j = 0; j <= c.params.M; ++j) {
        if (!profile[j]) {
          std::cout << "dcol " << j << " infeasible\n";
          return kExitBudget;
        }
        std::cout << "dcol " << j << " " << *profile[j] << "\n";
      }
      auto df = free_distance_oracle(c);
      if (!df) {
        std::cout << "dfree infeasible\n";
        return kExitBudget;
      }
      std::cout << "dfree " << *df << "\n";
      return kExitTrue;
    }
    std::optional<bool> verdict =
        property == "mdp" ? is_mdp(c) : is_smds(c);
    std::cout << "oracle " << (property == "mdp" ? "MDP" : "sMDS") << " "
              << (verdict ? (*verdict ? "true" : "false") : "infeasible") << "\n";
    if (!verdict) return kExitBudget;
    return *verdict ? kExitTrue : kExitFalse;
  }

  // realization and markov inputs share the certification path
  std::optional<MarkovSeq> seq;
  std::optional<Realization> real;
  if (std::holds_alternative<Realization>(obj)) {
    real = std::get<Realization>(obj);
    seq = MarkovSeq(real->field, real->params, markov(*real, real->params.M + 1));
  } else {
    seq = std::get<MarkovSeq>(obj);
  }

  if (property == "distances") {
    if (!real) real = partial_realization(*seq, seq->params.delta);
    for (int j = 0; j <= seq->params.M; ++j) {
      auto d = column_distance_from_realization(*real, j);
      if (!d) {
        std::cout << "dcol " << j << " infeasible\n";
        return kExitBudget;
      }
      std::cout << "dcol " << j << " " << *d << "\n";
    }
    auto df = free_distance_oracle(*real);
    if (!df) {
      std::cout << "dfree infeasible\n";
      return kExitBudget;
    }
    std::cout << "dfree " << *df << "\n";
    return kExitTrue;
  }

  CertReport rep;
  if (property == "mdp") {
    std::vector<Mat> prefix(seq->blocks.begin(),
                            seq->blocks.begin() + seq->params.L + 1);
    rep = certify_mdp(prefix, seq->params);
    std::cout << render_cert("MDP", rep);
  } else {
    rep = certify_smds(seq->blocks, seq->params);
    std::cout << render_cert("sMDS", rep);
  }
  if (rep.status == CertReport::Status::Refused) return kExitBudget;
  return rep.ok() ? kExitTrue : kExitFalse;
}

int run_convert(const std::string& path, const std::string& target,
                const std::string& out_path) {
  AnyObject obj = read_file(path);
  std::ofstream file;
  std::ostream& os = open_output(file, out_path);

  if (target == "code") {
    if (std::holds_alternative<ConvCode>(obj)) {
      write_code(os, std::get<ConvCode>(obj));
      return kExitTrue;
    }
    Realization r = std::holds_alternative<Realization>(obj)
                        ? std::get<Realization>(obj)
                        : partial_realization(std::get<MarkovSeq>(obj),
                                              std::get<MarkovSeq>(obj).params.delta);
    write_code(os, code_from_realization(r));
    return kExitTrue;
  }

  // target == "realization"
  if (std::holds_alternative<Realization>(obj)) {
    write_realization(os, std::get<Realization>(obj));
    return kExitTrue;
  }
  std::optional<MarkovSeq> seq;
  if (std::holds_alternative<ConvCode>(obj)) {
    const ConvCode& c = std::get<ConvCode>(obj);
    seq = MarkovSeq(c.field, c.params, markov_from_code(c, c.params.M + 1));
  } else {
    seq = std::get<MarkovSeq>(obj);
  }
  write_realization(os, partial_realization(*seq, seq->params.delta));
  return kExitTrue;
}

int run_distances(const std::string& path, int jmax) {
  AnyObject obj = read_file(path);
  std::optional<Realization> real;
  std::optional<ConvCode> code;
  if (std::holds_alternative<Realization>(obj))
    real = std::get<Realization>(obj);
  else if (std::holds_alternative<MarkovSeq>(obj))
    real = partial_realization(std::get<MarkovSeq>(obj),
                               std::get<MarkovSeq>(obj).params.delta);
  else
    code = std::get<ConvCode>(obj);

  const CodeParams& p = real ? real->params : code->params;
  if (jmax < 0) jmax = p.M;
  bool infeasible = false;
  for (int j = 0; j <= jmax; ++j) {
    std::optional<long> d = real ? column_distance_from_realization(*real, j)
                                 : column_distance_oracle(*code, j);
    if (d)
      std::cout << "dcol " << j << " " << *d << "\n";
    else {
      std::cout << "dcol " << j << " infeasible\n";
      infeasible = true;
    }
  }
  std::optional<long> df =
      real ? free_distance_oracle(*real) : free_distance_oracle(*code);
  if (df)
    std::cout << "dfree " << *df << "\n";
  else {
    std::cout << "dfree infeasible\n";
    infeasible = true;
  }
  return infeasible ? kExitBudget : kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"convlab: construct, certify, and realize convolutional codes"};
  app.require_subcommand(1);

  int n = 0, k = 0, d = 0;
  std::uint64_t char_p = 0, seed = 0;
  int trials = 1000;
  std::string oracle_mode = "auto";
  std::string out_path;
  auto* s_search = app.add_subcommand("search", "randomized certified search");
  s_search->add_option("-n", n, "code length")->required();
  s_search->add_option("-k", k, "code dimension")->required();
  s_search->add_option("-d", d, "code degree")->required();
  s_search->add_option("--char", char_p, "force a prime characteristic");
  s_search->add_option("--seed", seed, "rng seed");
  s_search->add_option("--trials", trials, "trials per field");
  s_search->add_option("--oracle", oracle_mode, "oracle confirmation: on|off|auto")
      ->check(CLI::IsMember({"on", "off", "auto"}));
  s_search->add_option("-o,--output", out_path, "report file (default stdout)");

  std::string cert_file, property;
  auto* s_certify = app.add_subcommand("certify", "certify a file");
  s_certify->add_option("file", cert_file, "input file")->required();
  s_certify->add_option("--property", property, "mdp|smds|distances")
      ->required()
      ->check(CLI::IsMember({"mdp", "smds", "distances"}));

  std::string conv_file, target, conv_out;
  auto* s_convert = app.add_subcommand("convert", "convert between formats");
  s_convert->add_option("file", conv_file, "input file")->required();
  s_convert->add_option("--to", target, "code|realization")
      ->required()
      ->check(CLI::IsMember({"code", "realization"}));
  s_convert->add_option("-o,--output", conv_out, "output file (default stdout)");

  std::string dist_file;
  int jmax = -1;
  auto* s_distances = app.add_subcommand("distances", "column and free distances");
  s_distances->add_option("file", dist_file, "input file")->required();
  s_distances->add_option("--jmax", jmax, "largest column-distance index");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (s_search->parsed()) {
      convlab::SearchConfig cfg;
      cfg.params = convlab::CodeParams::make(n, k, d);
      cfg.ladder = convlab::SearchConfig::default_ladder(char_p);
      cfg.trials = trials;
      cfg.seed = seed;
      cfg.oracle = oracle_mode == "on"    ? convlab::OracleMode::On
                   : oracle_mode == "off" ? convlab::OracleMode::Off
                                          : convlab::OracleMode::Auto;
      convlab::SearchResult res = convlab::search(cfg);
      std::ofstream file;
      open_output(file, out_path) << convlab::render_report(cfg, res);
      return res.success ? kExitTrue : kExitBudget;
    }
    if (s_certify->parsed()) return run_certify(cert_file, property);
    if (s_convert->parsed()) return run_convert(conv_file, target, conv_out);
    if (s_distances->parsed()) return run_distances(dist_file, jmax);
  } catch (const convlab::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  }
  return kExitInput;
}
